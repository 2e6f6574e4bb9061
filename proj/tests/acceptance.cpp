// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "wanas/verify.hpp"

namespace {

using namespace wanas;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int n, const std::string& name, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " " << n << " " << name << ": " << detail << '\n';
  if (!ok) ++failures;
}

struct ItemTally {
  std::size_t total = 0, match = 0, on_variety = 0, mismatch = 0;
};

ItemTally tally(const Report& r, std::initializer_list<ItemKind> kinds,
                std::function<bool(GroupId)> groups = [](GroupId) { return true; }) {
  ItemTally t;
  for (const auto& g : r.groups) {
    if (!groups(g.id)) continue;
    for (const auto& d : g.items) {
      if (std::find(kinds.begin(), kinds.end(), d.item) == kinds.end()) continue;
      ++t.total;
      t.match += d.verdict == Verdict::Match;
      t.on_variety += d.verdict == Verdict::MatchOnVariety;
      t.mismatch += d.verdict == Verdict::Mismatch;
    }
  }
  return t;
}

std::string describe(const ItemTally& t) {
  std::ostringstream os;
  os << t.total << " entries, " << t.match << " match, " << t.on_variety << " on variety, "
     << t.mismatch << " mismatch";
  return os.str();
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(WANAS_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ------------------------------------------------------------ property suite

template <ExactScalar S>
bool metric_compatible(const ConnectionCoeffs<S>& conn, const MetricSignature& sig) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        if (!(conn[i][j](k) * S(Rational(sig.eps[k])) + conn[i][k](j) * S(Rational(sig.eps[j])) ==
              S(0)))
          return false;
  return true;
}

Polynomial random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> terms(0, 4), var(0, 4), num(-9, 9), den(1, 6);
  std::uniform_int_distribution<unsigned> exp(0, 2);
  Polynomial p;
  for (int t = terms(rng); t > 0; --t) {
    const Monomial m = Monomial::of(static_cast<Var>(var(rng)), exp(rng)) *
                       Monomial::of(static_cast<Var>(var(rng)), exp(rng));
    p += Polynomial(m, Rational(num(rng), den(rng)));
  }
  return p;
}

std::pair<bool, std::string> property_suite() {
  std::vector<std::string> failed;
  auto check = [&](bool ok, const std::string& what) {
    if (!ok) failed.push_back(what);
  };
  const MetricSignature sig = MetricSignature::lorentzian();
  std::size_t verdicts = 0;
  for (GroupId id : kAllGroups) {
    const auto& spec = get_group(id).spec;
    const std::string g(group_name(id));
    check(jacobi_holds(spec), g + " jacobi");
    const auto lc = levi_civita(spec);
    check(metric_compatible(lc, spec.signature), g + " levi-civita metric");
    bool torsion_free = true;
    for (const auto& row : torsion(lc, spec))
      for (const auto& v : row) torsion_free = torsion_free && all_zero(v);
    check(torsion_free, g + " levi-civita torsion");
    const auto b = compute_all(spec);
    check(contract(b.curvature, sig) == contract_shortcut(b.curvature) &&
              contract(b.a_tensor, sig) == contract_shortcut(b.a_tensor),
          g + " contraction shortcut");
    check(operator_from_form(form_from_operator(b.wan, sig), sig) == b.wan, g + " round trip");
    const auto s = form_from_operator(b.wan_tilde, sig);
    check(s == BilinearForm<Polynomial>(s.transpose()), g + " symmetrized form");
    for (const auto& p : sample_points(spec, {default_ladder(), {}})) {
      const auto alg = evaluate_spec(spec, p);
      const auto nb = compute_all(alg);
      for (SolitonKind kind : {SolitonKind::First, SolitonKind::Second}) {
        const auto w = wan_of_kind(nb, kind);
        if (!verdict_sound(alg, w, soliton_decide(alg, kind, w))) {
          failed.push_back(g + " soundness at " + p.str());
        }
        ++verdicts;
      }
    }
  }
  std::mt19937 rng(424242);
  constexpr int kRandomCases = 1000;
  for (int n = 0; n < kRandomCases; ++n) {
    const Polynomial p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    if (!(p * (q + r) == p * q + p * r && (p * q) * r == p * (q * r) && p + q == q + p &&
          p * q == q * p)) {
      failed.push_back("ring axioms");
      break;
    }
  }
  std::ostringstream os;
  os << "7 catalog specs exhaustive, " << verdicts << " soundness re-substitutions, "
     << kRandomCases << " random ring-axiom cases";
  if (!failed.empty()) os << "; failed: " << failed.front() << " (+" << failed.size() - 1 << ")";
  return {failed.empty(), os.str()};
}

}  // namespace

int main() {
  // 1 and 2 time only the reproduction itself.
  auto t0 = Clock::now();
  Report repro;
  for (GroupId id : kAllGroups) repro.groups.push_back({id, reproduce_group(id), {}, {}, {}});
  const double repro_time = seconds_since(t0);

  t0 = Clock::now();
  const Report full = verify_paper();
  const double full_time = seconds_since(t0);

  {
    const ItemTally t = tally(repro, {ItemKind::Connection});
    std::ostringstream os;
    os << describe(t) << ", " << repro_time << " s";
    report(1, "connection reproduction", t.match == t.total && repro_time < 1.0, os.str());
  }
  {
    const ItemTally t = tally(full, {ItemKind::Torsion});
    report(2, "torsion reproduction", t.match == t.total, describe(t));
  }
  {
    const auto kinds = {ItemKind::Abar, ItemKind::Ric, ItemKind::Wan, ItemKind::WanTilde};
    const ItemTally unimodular = tally(full, kinds, [](GroupId id) { return id <= GroupId::G4; });
    const ItemTally rest = tally(full, kinds, [](GroupId id) { return id > GroupId::G4; });
    report(3, "matrix reproduction",
           unimodular.match == unimodular.total && rest.mismatch == 0,
           "G1-G4 " + describe(unimodular) + "; G5-G7 " + describe(rest));
  }
  {
    std::size_t total = 0, passed = 0, vacuous = 0;
    std::set<std::string> cases;
    for (const auto& g : full.groups)
      for (const auto& t : g.theorems) {
        ++total;
        passed += t.result.pass;
        vacuous += t.vacuous;
        cases.insert(std::string(group_name(g.id)) + "/" + std::string(kind_name(t.kind)) + "/" +
                     t.label);
      }
    // G2: 1+1, G3: 7+7, G4: 2+2, G5: 1+1, G6: 3+3, G7: 1+1.
    const bool complete = cases.size() == 30;
    std::ostringstream os;
    os << passed << "/" << total << " family checks pass over " << cases.size()
       << " theorem cases (" << vacuous << " vacuous branches)";
    report(4, "theorem sufficiency", complete && passed == total, os.str());
  }
  {
    bool sizes = true, g1_none = true;
    std::size_t points = 0;
    for (const auto& c : full.classifications) {
      points += c.points.size();
      sizes = sizes && c.points.size() >= 200 && c.points.size() <= 5000;
      if (c.group == GroupId::G1) {
        g1_none = g1_none && c.count(SolitonVerdict::Outcome::NoSoliton) == c.points.size();
      }
    }
    std::ostringstream os;
    os << points << " points in " << full.classifications.size() << " grids, "
       << full.disagreements() << " disagreements, verify-paper " << full_time << " s";
    report(5, "theorem necessity on grids",
           full.classifications.size() == 14 && sizes && g1_none && full.disagreements() == 0 &&
               full_time < 30.0,
           os.str());
  }
  {
    bool ok = true;
    std::string detail;
    for (GroupId id : {GroupId::G3, GroupId::G5}) {
      const auto b = compute_all(get_group(id).spec);
      const bool exact = b.wan_tilde == b.wan;
      ok = ok && exact;
      detail += std::string(group_name(id)) + (exact ? " exact" : " differs") + " ";
    }
    report(6, "wan_tilde = wan identity", ok, detail.substr(0, detail.size() - 1));
  }
  {
    const auto [ok, detail] = property_suite();
    report(7, "property suites", ok, detail);
  }
  {
    const auto dir = std::filesystem::temp_directory_path() / "wanas_acceptance";
    std::filesystem::create_directories(dir);
    const auto a = dir / "first.json", b = dir / "second.json";
    const int sa = run_cli("verify-paper --out " + a.string());
    const int sb = run_cli("verify-paper --out " + b.string());
    const std::string ja = slurp(a), jb = slurp(b);
    const bool ok = sa == 0 && sb == 0 && !ja.empty() && ja == jb;
    report(8, "determinism", ok,
           ok ? "two verify-paper --out reports byte-identical (" + std::to_string(ja.size()) +
                    " bytes)"
              : "exit codes " + std::to_string(sa) + "/" + std::to_string(sb) +
                    (ja == jb ? "" : ", reports differ"));
  }
  std::cout << (failures == 0 ? "all 8 criteria pass" : std::to_string(failures) + " criteria fail")
            << '\n';
  return failures == 0 ? 0 : 1;
}
