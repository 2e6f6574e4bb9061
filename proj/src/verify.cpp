#include "wanas/verify.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <sstream>

#include "wanas/tensor_format.hpp"

namespace wanas {

using nlohmann::json;

namespace {

constexpr int kReportVersion = 1;

std::string idx(std::initializer_list<int> is) {
  std::string out = "(";
  bool first = true;
  for (int i : is) {
    if (!first) out += ",";
    out += std::to_string(i + 1);
    first = false;
  }
  return out + ")";
}

std::string coord(int k) { return "[e" + std::to_string(k + 1) + "]"; }

bool only_eta(const Polynomial& p) {
  const auto vars = p.variables();
  return vars.size() == 1 && vars.front() == Var::eta;
}

class Comparator {
 public:
  Comparator(GroupId id, const LieAlgebraSpec& spec) : id_(id), spec_(spec) {
    for (const auto& c : spec.constraints) {
      if (c.kind != Constraint::Kind::Equation) continue;
      (only_eta(c.poly) ? eta_ : variety_).push_back(c);
    }
  }

  void compare(ItemKind item, std::string location, const Polynomial& computed,
               const Polynomial& claimed) {
    DiscrepancyReport r{id_, item, std::move(location), computed, claimed, Verdict::Match, {}};
    Polynomial diff = computed - claimed;
    if (!diff.is_zero()) {
      diff = reduce_modulo_constraints(diff, eta_);
      if (diff.is_zero()) {
        r.certificate = constraint_list(eta_);
      } else if (reduce_modulo_constraints(diff, variety_).is_zero()) {
        r.verdict = Verdict::MatchOnVariety;
        r.certificate = "reduces to 0 modulo " + constraint_list(variety_);
      } else if (!variety_.empty() && vanishes_on_samples(diff)) {
        r.verdict = Verdict::MatchOnVariety;
        r.certificate = "vanishes at " + std::to_string(samples().size()) + " sampled points";
      } else {
        r.verdict = Verdict::Mismatch;
      }
    }
    out_.push_back(std::move(r));
  }

  std::vector<DiscrepancyReport> take() { return std::move(out_); }

 private:
  static std::string constraint_list(const std::vector<Constraint>& cs) {
    std::string out;
    for (const auto& c : cs) out += (out.empty() ? "" : ", ") + c.str();
    return out;
  }

  const std::vector<ParameterAssignment>& samples() {
    if (!samples_) samples_ = sample_points(spec_, {default_ladder(), {}});
    return *samples_;
  }

  bool vanishes_on_samples(const Polynomial& p) {
    if (samples().empty()) return false;
    for (const auto& pt : samples()) {
      if (!p.evaluate(pt.values()).is_zero()) return false;
    }
    return true;
  }

  GroupId id_;
  const LieAlgebraSpec& spec_;
  std::vector<Constraint> eta_;
  std::vector<Constraint> variety_;
  std::optional<std::vector<ParameterAssignment>> samples_;
  std::vector<DiscrepancyReport> out_;
};

void compare_matrix(Comparator& cmp, ItemKind item, const Operator3<Polynomial>& computed,
                    const Operator3<Polynomial>& claimed) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) cmp.compare(item, idx({i, j}), computed(i, j), claimed(i, j));
}

std::vector<Rational> refine(const std::vector<Rational>& ladder) {
  std::vector<Rational> out;
  for (std::size_t n = 0; n < ladder.size(); ++n) {
    out.push_back(ladder[n]);
    if (n + 1 < ladder.size()) out.push_back((ladder[n] + ladder[n + 1]) / Rational(2));
  }
  return out;
}

IdentityCheck wan_tilde_identity(const GroupEntry& g) {
  IdentityCheck check{g.id, "wan_tilde = wan", Verdict::Match, {}};
  const TensorBundle<Polynomial> b = compute_all(g.spec);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const Polynomial diff = b.wan_tilde(i, j) - b.wan(i, j);
      if (diff.is_zero()) continue;
      if (reduce_modulo_constraints(diff, g.spec.constraints).is_zero()) {
        if (check.verdict == Verdict::Match) check.verdict = Verdict::MatchOnVariety;
        continue;
      }
      check.verdict = Verdict::Mismatch;
      check.failures.push_back(idx({i, j}) + ": " + diff.str());
    }
  return check;
}

json verdict_json(const SolitonVerdict& v) { return to_json(v); }

json point_json(const PointClassification& p) {
  json j = {{"point", p.point.str()},
            {"computed", verdict_json(p.computed)},
            {"expected", verdict_json(p.expected)},
            {"agree", p.agree}};
  if (!p.note.empty()) j["note"] = p.note;
  return j;
}

// Points and agreements per value of eta, for groups that have it.
std::map<std::string, std::pair<std::size_t, std::size_t>> eta_branches(
    const ClassificationReport& r) {
  std::map<std::string, std::pair<std::size_t, std::size_t>> out;
  for (const auto& p : r.points) {
    auto it = p.point.values().find(Var::eta);
    if (it == p.point.values().end()) continue;
    auto& [points, agree] = out[it->second.str()];
    ++points;
    agree += p.agree;
  }
  return out;
}

json ladder_json(const std::vector<Rational>& ladder) {
  json out = json::array();
  for (const auto& r : ladder) out.push_back(r.str());
  return out;
}

}  // namespace

std::string_view item_name(ItemKind item) {
  switch (item) {
    case ItemKind::Connection:
      return "connection";
    case ItemKind::Torsion:
      return "torsion";
    case ItemKind::ATensor:
      return "a_tensor";
    case ItemKind::Abar:
      return "abar";
    case ItemKind::Ric:
      return "ric";
    case ItemKind::Wan:
      return "wan";
    case ItemKind::WanTilde:
      return "wan_tilde";
    case ItemKind::TheoremCase:
      return "theorem_case";
  }
  return "?";
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Match:
      return "match";
    case Verdict::Mismatch:
      return "mismatch";
    case Verdict::MatchOnVariety:
      return "match_on_variety";
  }
  return "?";
}

std::string DiscrepancyReport::str() const {
  std::string out = std::string(group_name(group)) + " " + std::string(item_name(item)) +
                    location + ": " + std::string(verdict_name(verdict));
  if (verdict == Verdict::Mismatch) {
    out += " (computed " + computed.str() + ", claimed " + claimed.str() + ")";
  } else if (!certificate.empty()) {
    out += " [" + certificate + "]";
  }
  return out;
}

std::vector<DiscrepancyReport> reproduce(GroupId id, const LieAlgebraSpec& spec,
                                         const ClaimedTensors& claimed) {
  const TensorBundle<Polynomial> b = compute_all(spec);
  Comparator cmp(id, spec);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        cmp.compare(ItemKind::Connection, idx({i, j}) + coord(k), b.connection[i][j](k),
                    claimed.connection[i][j](k));
  for (const auto& [i, j] : kPairs)
    for (int k = 0; k < 3; ++k)
      cmp.compare(ItemKind::Torsion, idx({i, j}) + coord(k), b.torsion[i][j](k),
                  claimed.torsion[i][j](k));
  for (const auto& [i, j] : kPairs)
    for (int l = 0; l < 3; ++l)
      for (int k = 0; k < 3; ++k)
        cmp.compare(ItemKind::ATensor, idx({i, j, l}) + coord(k), b.a_tensor[i][j][l](k),
                    claimed.a_tensor[i][j][l](k));
  compare_matrix(cmp, ItemKind::Abar, b.abar, claimed.abar);
  compare_matrix(cmp, ItemKind::Ric, b.ric, claimed.ric);
  compare_matrix(cmp, ItemKind::Wan, b.wan, claimed.wan);
  compare_matrix(cmp, ItemKind::WanTilde, b.wan_tilde, claimed.wan_tilde);
  return cmp.take();
}

std::vector<DiscrepancyReport> reproduce_group(const Catalog& catalog, GroupId id) {
  const GroupEntry& g = catalog.get_group(id);
  return reproduce(id, g.spec, g.claimed);
}

std::vector<DiscrepancyReport> reproduce_group(GroupId id) {
  return reproduce_group(Catalog::shared(), id);
}

GridSample grid_points(const LieAlgebraSpec& spec, const GridSpec& grid) {
  GridSample s;
  s.ladder = grid.ladder;
  std::sort(s.ladder.begin(), s.ladder.end());
  s.ladder.erase(std::unique(s.ladder.begin(), s.ladder.end()), s.ladder.end());
  std::vector<ParameterAssignment> all = sample_points(spec, {s.ladder, grid.exclude_zero});
  // Four refinements already give ~100 values per parameter.
  while (all.size() < grid.min_points && s.ladder.size() > 1 && s.refinements < 4) {
    s.ladder = refine(s.ladder);
    ++s.refinements;
    all = sample_points(spec, {s.ladder, grid.exclude_zero});
  }
  s.admissible = all.size();
  if (grid.cap > 0 && all.size() > grid.cap) {
    std::vector<ParameterAssignment> kept;
    kept.reserve(grid.cap);
    for (std::size_t n = 0; n < grid.cap; ++n) kept.push_back(all[n * all.size() / grid.cap]);
    all = std::move(kept);
  }
  s.points = std::move(all);
  return s;
}

std::size_t ClassificationReport::agreements() const {
  return static_cast<std::size_t>(
      std::count_if(points.begin(), points.end(), [](const auto& p) { return p.agree; }));
}

std::size_t ClassificationReport::count(SolitonVerdict::Outcome outcome) const {
  return static_cast<std::size_t>(std::count_if(
      points.begin(), points.end(), [&](const auto& p) { return p.computed.outcome == outcome; }));
}

SolitonVerdict decide_at(const GroupEntry& group, SolitonKind kind,
                         const ParameterAssignment& point) {
  const NumericLieAlgebra alg = evaluate_spec(group.spec, point);
  return soliton_decide(alg, kind, wan_of_kind(compute_all(alg), kind));
}

ClassificationReport classify_grid(const Catalog& catalog, GroupId id, SolitonKind kind,
                                   const GridSpec& grid) {
  const GroupEntry& g = catalog.get_group(id);
  const TheoremClaim& claim = catalog.theorem_claim(id, kind);
  GridSample sample = grid_points(g.spec, grid);

  ClassificationReport report;
  report.group = id;
  report.kind = kind;
  report.ladder = std::move(sample.ladder);
  report.refinements = sample.refinements;
  report.admissible = sample.admissible;
  report.points.reserve(sample.points.size());
  for (auto& point : sample.points) {
    PointClassification pc;
    pc.computed = decide_at(g, kind, point);
    try {
      pc.expected = predicate_eval(claim, point);
      pc.agree = pc.computed.agrees_with(pc.expected);
    } catch (const Error& e) {
      pc.note = e.what();
    }
    pc.point = std::move(point);
    report.points.push_back(std::move(pc));
  }
  return report;
}

ClassificationReport classify_grid(GroupId id, SolitonKind kind, const GridSpec& grid) {
  return classify_grid(Catalog::shared(), id, kind, grid);
}

std::vector<TheoremCheck> check_theorems(const GroupEntry& group) {
  std::vector<TheoremCheck> out;
  for (const TheoremClaim* claim : {&group.first, &group.second}) {
    for (const auto& tc : claim->cases) {
      for (const auto& fam : case_families(group, tc)) {
        TheoremCheck check{group.id, claim->kind, tc.label, fam.branch, fam.vacuous, {}};
        const Polynomial c = fam.c ? *fam.c : Polynomial(Var::c);
        check.result = check_claimed_solution(fam.spec, claim->kind, c, fam.d);
        out.push_back(std::move(check));
      }
    }
  }
  return out;
}

std::size_t Report::count(Verdict v) const {
  std::size_t n = 0;
  for (const auto& g : groups)
    for (const auto& item : g.items) n += item.verdict == v;
  return n;
}

std::size_t Report::theorem_failures() const {
  std::size_t n = 0;
  for (const auto& g : groups)
    for (const auto& t : g.theorems) n += !t.result.pass;
  return n;
}

std::size_t Report::disagreements() const {
  std::size_t n = 0;
  for (const auto& c : classifications) n += c.points.size() - c.agreements();
  return n;
}

bool Report::all_pass() const {
  for (const auto& g : groups)
    for (const auto& id : g.identities)
      if (id.verdict == Verdict::Mismatch) return false;
  return count(Verdict::Mismatch) == 0 && theorem_failures() == 0 && disagreements() == 0;
}

std::string Report::headline() const {
  std::ostringstream os;
  os << groups.size() << (groups.size() == 1 ? " group, " : " groups, ");
  const std::size_t mismatches = count(Verdict::Mismatch);
  if (mismatches == 0) {
    os << "all displays matched, ";
  } else {
    os << mismatches << " display entries mismatched, ";
  }
  const std::size_t failures = theorem_failures();
  if (failures == 0) {
    os << "all theorem cases pass";
  } else {
    os << failures << " theorem case checks failed";
  }
  return os.str();
}

Report verify_paper(const Catalog& catalog, const VerifyOptions& options) {
  std::vector<GroupId> ids = options.groups;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  Report report;
  // Each (group, kind) grid is independent; results are collected in order.
  std::vector<std::future<ClassificationReport>> grids;
  for (GroupId id : ids)
    for (SolitonKind kind : {SolitonKind::First, SolitonKind::Second})
      grids.push_back(std::async(std::launch::async, [&catalog, &options, id, kind] {
        return classify_grid(catalog, id, kind, options.grid);
      }));

  for (GroupId id : ids) {
    const GroupEntry& g = catalog.get_group(id);
    GroupReport gr;
    gr.id = id;
    gr.items = reproduce_group(catalog, id);
    if (g.claimed.wan_tilde_is_wan) gr.identities.push_back(wan_tilde_identity(g));
    gr.theorems = check_theorems(g);
    for (const auto& f : catalog.case_findings())
      if (f.group == id) gr.findings.push_back(f);
    report.groups.push_back(std::move(gr));
  }
  for (const auto& a : catalog.annotations()) {
    for (GroupId id : ids)
      if (a.group == group_name(id)) report.annotations.push_back(a);
  }
  for (auto& f : grids) report.classifications.push_back(f.get());
  return report;
}

Report verify_paper(const VerifyOptions& options) {
  return verify_paper(Catalog::shared(), options);
}

json to_json(const ClassificationReport& r, bool include_points) {
  json j;
  j["group"] = group_name(r.group);
  j["kind"] = kind_name(r.kind);
  j["ladder"] = ladder_json(r.ladder);
  j["refinements"] = r.refinements;
  j["admissible_points"] = r.admissible;
  j["points"] = r.points.size();
  j["agree"] = r.agreements();
  j["outcomes"] = {{"no_soliton", r.count(SolitonVerdict::Outcome::NoSoliton)},
                   {"soliton", r.count(SolitonVerdict::Outcome::Soliton)},
                   {"soliton_any_c", r.count(SolitonVerdict::Outcome::SolitonAnyC)}};
  const auto branches = eta_branches(r);
  if (!branches.empty()) {
    json b = json::object();
    for (const auto& [eta, counts] : branches)
      b[eta] = {{"points", counts.first}, {"agree", counts.second}};
    j["eta_branches"] = std::move(b);
  }
  json disagreements = json::array();
  for (const auto& p : r.points)
    if (!p.agree) disagreements.push_back(point_json(p));
  j["disagreements"] = std::move(disagreements);
  if (include_points) {
    json points = json::array();
    for (const auto& p : r.points) points.push_back(point_json(p));
    j["classified"] = std::move(points);
  }
  return j;
}

json to_json(const Report& report) {
  json groups = json::array();
  for (const auto& g : report.groups) {
    json items = json::array();
    for (const auto& d : g.items) {
      json item = {{"item", item_name(d.item)},
                   {"location", d.location},
                   {"verdict", verdict_name(d.verdict)},
                   {"computed", d.computed.str()},
                   {"claimed", d.claimed.str()}};
      if (!d.certificate.empty()) item["certificate"] = d.certificate;
      items.push_back(std::move(item));
    }
    json identities = json::array();
    for (const auto& id : g.identities)
      identities.push_back(
          {{"name", id.name}, {"verdict", verdict_name(id.verdict)}, {"failures", id.failures}});
    json theorems = json::array();
    for (const auto& t : g.theorems)
      theorems.push_back({{"kind", kind_name(t.kind)},
                          {"case", t.label},
                          {"branch", t.branch},
                          {"vacuous", t.vacuous},
                          {"pass", t.result.pass},
                          {"failures", t.result.failures}});
    json findings = json::array();
    for (const auto& f : g.findings)
      findings.push_back({{"kind", kind_name(f.kind)},
                          {"case", f.label},
                          {"constraint", f.constraint},
                          {"status", status_name(f.status)}});
    std::size_t counts[3] = {0, 0, 0};
    for (const auto& d : g.items) ++counts[static_cast<int>(d.verdict)];
    groups.push_back({{"id", group_name(g.id)},
                      {"counts",
                       {{"match", counts[0]}, {"mismatch", counts[1]},
                        {"match_on_variety", counts[2]}}},
                      {"items", std::move(items)},
                      {"identities", std::move(identities)},
                      {"theorem_cases", std::move(theorems)},
                      {"case_findings", std::move(findings)}});
  }
  json classifications = json::array();
  std::size_t points = 0;
  for (const auto& c : report.classifications) {
    classifications.push_back(to_json(c, false));
    points += c.points.size();
  }
  json annotations = json::array();
  for (const auto& a : report.annotations)
    annotations.push_back(
        {{"group", a.group}, {"item", a.item}, {"location", a.location}, {"note", a.note}});

  std::size_t theorem_checks = 0;
  for (const auto& g : report.groups) theorem_checks += g.theorems.size();
  json summary = {{"groups", report.groups.size()},
                  {"match", report.count(Verdict::Match)},
                  {"match_on_variety", report.count(Verdict::MatchOnVariety)},
                  {"mismatch", report.count(Verdict::Mismatch)},
                  {"theorem_checks", theorem_checks},
                  {"theorem_failures", report.theorem_failures()},
                  {"classified_points", points},
                  {"disagreements", report.disagreements()},
                  {"all_pass", report.all_pass()},
                  {"headline", report.headline()}};
  return {{"version", kReportVersion},
          {"groups", std::move(groups)},
          {"classifications", std::move(classifications)},
          {"annotations", std::move(annotations)},
          {"summary", std::move(summary)}};
}

std::string to_text(const Report& report) {
  std::ostringstream os;
  for (const auto& g : report.groups) {
    std::size_t counts[3] = {0, 0, 0};
    for (const auto& d : g.items) ++counts[static_cast<int>(d.verdict)];
    os << group_name(g.id) << ": " << counts[0] << " match, " << counts[2]
       << " match on variety, " << counts[1] << " mismatch\n";
    for (const auto& d : g.items)
      if (d.verdict != Verdict::Match) os << "  " << d.str() << '\n';
    for (const auto& id : g.identities) {
      os << "  " << id.name << ": " << verdict_name(id.verdict) << '\n';
      for (const auto& f : id.failures) os << "    " << f << '\n';
    }
    for (const auto& t : g.theorems) {
      os << "  theorem " << kind_name(t.kind) << " case " << t.label;
      if (!t.branch.empty()) os << " [" << t.branch << "]";
      os << ": " << (t.result.pass ? "pass" : "FAIL") << (t.vacuous ? " (vacuous)" : "") << '\n';
      for (const auto& f : t.result.failures) os << "    " << f << '\n';
    }
    for (const auto& f : g.findings)
      if (f.status != CaseFinding::Status::Implied) os << "  note: " << f.str() << '\n';
  }
  for (const auto& c : report.classifications) {
    os << "grid " << group_name(c.group) << " " << kind_name(c.kind) << ": " << c.agreements()
       << "/" << c.points.size() << " agree (" << c.count(SolitonVerdict::Outcome::NoSoliton)
       << " no soliton, " << c.count(SolitonVerdict::Outcome::Soliton) << " soliton, "
       << c.count(SolitonVerdict::Outcome::SolitonAnyC) << " any c)\n";
    for (const auto& [eta, counts] : eta_branches(c))
      os << "  eta = " << eta << ": " << counts.second << "/" << counts.first << " agree\n";
    for (const auto& p : c.points) {
      if (p.agree) continue;
      os << "  disagree at " << p.point.str() << ": computed "
         << outcome_name(p.computed.outcome) << ", expected "
         << (p.note.empty() ? std::string(outcome_name(p.expected.outcome)) : p.note) << '\n';
    }
  }
  for (const auto& a : report.annotations)
    os << "annotation " << a.group << " " << a.item << " " << a.location << ": " << a.note
       << '\n';
  os << report.headline() << '\n';
  return os.str();
}

}  // namespace wanas
