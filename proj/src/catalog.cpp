#include "wanas/catalog.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

namespace wanas {

using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;
constexpr std::string_view kSchemaName = "wanas-catalog";

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw CatalogError("sha256 failed");
  }
  std::ostringstream os;
  for (unsigned int i = 0; i < length; ++i) {
    os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return os.str();
}

// ---------------------------------------------------------------- parsing

struct Reader {
  const SymbolTable& symbols;
  std::string where;

  [[noreturn]] void fail(const std::string& what) const {
    throw CatalogError(where + ": " + what);
  }

  Polynomial poly(const json& j) const {
    if (!j.is_string()) fail("expected a polynomial string");
    try {
      return parse_expression(j.get<std::string>(), symbols);
    } catch (const ParseError& e) {
      fail(e.what());
    }
  }

  Vec3<Polynomial> vec(const json& j) const {
    if (!j.is_array() || j.size() != 3) fail("expected 3 coordinates");
    Vec3<Polynomial> v;
    for (int k = 0; k < 3; ++k) v(k) = poly(j[k]);
    return v;
  }

  Mat3<Polynomial> mat(const json& j) const {
    if (!j.is_array() || j.size() != 3) fail("expected a 3x3 matrix");
    Mat3<Polynomial> m;
    for (int i = 0; i < 3; ++i) {
      if (!j[i].is_array() || j[i].size() != 3) fail("expected a 3x3 matrix");
      for (int k = 0; k < 3; ++k) m(i, k) = poly(j[i][k]);
    }
    return m;
  }

  Rank3<Polynomial> rank3(const json& j) const {
    if (!j.is_array() || j.size() != 3) fail("expected a 3x3 table of vectors");
    Rank3<Polynomial> t;
    for (int i = 0; i < 3; ++i) {
      if (!j[i].is_array() || j[i].size() != 3) fail("expected a 3x3 table of vectors");
      for (int k = 0; k < 3; ++k) t[i][k] = vec(j[i][k]);
    }
    return t;
  }
};

const std::array<std::pair<const char*, std::pair<int, int>>, 3> kPairKeys{
    {{"12", {0, 1}}, {"13", {0, 2}}, {"23", {1, 2}}}};

// Chooses the variable an equation condition is solved for: the last
// parameter (eta only as a fallback) that occurs linearly with a constant
// coefficient.
std::optional<std::pair<Var, Polynomial>> solve_linear(const Polynomial& p,
                                                       std::optional<Var> forced) {
  auto try_var = [&](Var v) -> std::optional<std::pair<Var, Polynomial>> {
    if (v == Var::c || p.degree_in(v) != 1) return std::nullopt;
    const Polynomial slope = p.coefficient_of(v, 1);
    if (!slope.is_constant() || slope.is_zero()) return std::nullopt;
    return std::pair{v, p.coefficient_of(v, 0) * (-slope.constant_term().inverse())};
  };
  if (forced) return try_var(*forced);
  std::optional<std::pair<Var, Polynomial>> chosen;
  for (Var v : p.variables()) {
    if (v == Var::eta) continue;
    if (auto s = try_var(v)) chosen = s;
  }
  if (!chosen && p.contains(Var::eta)) chosen = try_var(Var::eta);
  return chosen;
}

TheoremCase parse_case(const json& j, const Reader& reader) {
  TheoremCase tc;
  tc.label = j.at("label").get<std::string>();
  Reader r{reader.symbols, reader.where + " case " + tc.label};
  for (const auto& cond : j.at("conditions")) {
    const std::string text = cond.get<std::string>();
    tc.condition_text.push_back(text);
    try {
      auto [poly, is_equation] = parse_condition(text, r.symbols);
      if (poly.contains(Var::c)) r.fail("conditions cannot mention c: " + text);
      tc.conditions.push_back(is_equation ? Constraint::equation(std::move(poly))
                                          : Constraint::non_vanishing(std::move(poly)));
    } catch (const ParseError& e) {
      r.fail(e.what());
    }
  }
  if (j.contains("branches")) {
    for (const auto& branch : j.at("branches")) {
      Substitution sub;
      for (const auto& [name, value] : branch.items()) {
        auto v = var_from_name(name);
        if (!v || *v == Var::c) r.fail("bad branch variable '" + name + "'");
        sub.emplace(*v, r.poly(value));
      }
      tc.branches.push_back(std::move(sub));
    }
  }
  const json& c = j.at("c");
  if (c.is_string() && c.get<std::string>() == "any") {
    tc.c = std::nullopt;
  } else {
    tc.c = r.poly(c);
  }
  tc.d = r.mat(j.at("d"));
  return tc;
}

TheoremClaim parse_claim(const json& j, GroupId id, SolitonKind kind, const Reader& reader) {
  TheoremClaim claim;
  claim.group = id;
  claim.kind = kind;
  const std::string form = j.at("claim").get<std::string>();
  if (form == "no_soliton") {
    claim.form = TheoremClaim::Form::NoSoliton;
  } else if (form == "same_as_first") {
    if (kind == SolitonKind::First) reader.fail("first kind cannot refer to itself");
    claim.form = TheoremClaim::Form::SameAsFirst;
  } else if (form == "cases") {
    claim.form = TheoremClaim::Form::Cases;
    for (const auto& c : j.at("cases")) claim.cases.push_back(parse_case(c, reader));
  } else {
    reader.fail("unknown claim form '" + form + "'");
  }
  return claim;
}

GroupEntry parse_group(const json& j, GroupId expected, const MetricSignature& sig) {
  GroupEntry g;
  g.id = expected;
  const std::string name = j.at("id").get<std::string>();
  if (group_from_name(name) != expected) {
    throw CatalogError("group " + std::string(group_name(expected)) + " out of order (found " +
                       name + ")");
  }
  g.unimodular = j.at("unimodular").get<bool>();
  const Reader plain{g.shorthands, name};
  for (const auto& [key, value] : j.at("shorthands").items()) {
    g.shorthands.emplace(key, plain.poly(value));
  }
  const Reader r{g.shorthands, name};

  json spec_json = {{"brackets", j.at("brackets")}, {"constraints", j.at("constraints")},
                    {"signature", sig.eps}};
  try {
    g.spec = spec_from_json(spec_json, &g.shorthands);
  } catch (const Error& e) {
    r.fail(e.what());
  }

  const json& cl = j.at("claimed");
  ClaimedTensors& t = g.claimed;
  t.connection = Reader{g.shorthands, name + " connection"}.rank3(cl.at("connection"));
  t.torsion = zero_rank3<Polynomial>();
  t.a_tensor = zero_rank4<Polynomial>();
  for (const auto& [key, ij] : kPairKeys) {
    const auto [i, k] = ij;
    const Reader rt{g.shorthands, name + " torsion " + key};
    t.torsion[i][k] = rt.vec(cl.at("torsion").at(key));
    t.torsion[k][i] = -t.torsion[i][k];
    const json& rows = cl.at("a_tensor").at(key);
    if (!rows.is_array() || rows.size() != 3) r.fail("a_tensor " + std::string(key));
    const Reader ra{g.shorthands, name + " a_tensor " + key};
    for (int l = 0; l < 3; ++l) {
      t.a_tensor[i][k][l] = ra.vec(rows[l]);
      t.a_tensor[k][i][l] = -t.a_tensor[i][k][l];
    }
  }
  t.abar = Reader{g.shorthands, name + " abar"}.mat(cl.at("abar"));
  t.ric = Reader{g.shorthands, name + " ric"}.mat(cl.at("ric"));
  t.wan = Reader{g.shorthands, name + " wan"}.mat(cl.at("wan"));
  const json& wt = cl.at("wan_tilde");
  if (wt.is_string() && wt.get<std::string>() == "wan") {
    t.wan_tilde = t.wan;
    t.wan_tilde_is_wan = true;
  } else {
    t.wan_tilde = Reader{g.shorthands, name + " wan_tilde"}.mat(wt);
  }

  const json& th = j.at("theorems");
  g.first = parse_claim(th.at("first"), expected, SolitonKind::First, r);
  g.second = parse_claim(th.at("second"), expected, SolitonKind::Second, r);
  if (g.second.form == TheoremClaim::Form::SameAsFirst) g.second.cases = g.first.cases;
  return g;
}

// ---------------------------------------------------------------- writing

json poly_json(const Polynomial& p) { return p.str(); }

json vec_json(const Vec3<Polynomial>& v) {
  return json::array({poly_json(v(0)), poly_json(v(1)), poly_json(v(2))});
}

json mat_json(const Mat3<Polynomial>& m) {
  json out = json::array();
  for (int i = 0; i < 3; ++i) {
    out.push_back(json::array({poly_json(m(i, 0)), poly_json(m(i, 1)), poly_json(m(i, 2))}));
  }
  return out;
}

json claim_json(const TheoremClaim& claim) {
  switch (claim.form) {
    case TheoremClaim::Form::NoSoliton:
      return {{"claim", "no_soliton"}};
    case TheoremClaim::Form::SameAsFirst:
      return {{"claim", "same_as_first"}};
    case TheoremClaim::Form::Cases:
      break;
  }
  json cases = json::array();
  for (const auto& tc : claim.cases) {
    json c = {{"label", tc.label},
              {"conditions", tc.condition_text},
              {"c", tc.c ? poly_json(*tc.c) : json("any")},
              {"d", mat_json(tc.d)}};
    if (!tc.branches.empty()) {
      json branches = json::array();
      for (const auto& sub : tc.branches) {
        json b = json::object();
        for (const auto& [v, img] : sub) b[std::string(var_name(v))] = img.str();
        branches.push_back(std::move(b));
      }
      c["branches"] = std::move(branches);
    }
    cases.push_back(std::move(c));
  }
  return {{"claim", "cases"}, {"cases", std::move(cases)}};
}

json group_json(const GroupEntry& g) {
  json j;
  j["id"] = group_name(g.id);
  j["unimodular"] = g.unimodular;
  const json spec = spec_to_json(g.spec);
  j["brackets"] = spec["brackets"];
  j["constraints"] = spec["constraints"];
  j["shorthands"] = json::object();
  for (const auto& [name, p] : g.shorthands) j["shorthands"][name] = p.str();

  const ClaimedTensors& t = g.claimed;
  json cl;
  json conn = json::array();
  for (int i = 0; i < 3; ++i) {
    json row = json::array();
    for (int k = 0; k < 3; ++k) row.push_back(vec_json(t.connection[i][k]));
    conn.push_back(std::move(row));
  }
  cl["connection"] = std::move(conn);
  cl["torsion"] = json::object();
  cl["a_tensor"] = json::object();
  for (const auto& [key, ij] : kPairKeys) {
    const auto [i, k] = ij;
    cl["torsion"][key] = vec_json(t.torsion[i][k]);
    json rows = json::array();
    for (int l = 0; l < 3; ++l) rows.push_back(vec_json(t.a_tensor[i][k][l]));
    cl["a_tensor"][key] = std::move(rows);
  }
  cl["abar"] = mat_json(t.abar);
  cl["ric"] = mat_json(t.ric);
  cl["wan"] = mat_json(t.wan);
  cl["wan_tilde"] = t.wan_tilde_is_wan ? json("wan") : mat_json(t.wan_tilde);
  j["claimed"] = std::move(cl);
  j["theorems"] = {{"first", claim_json(g.first)}, {"second", claim_json(g.second)}};
  return j;
}

// ---------------------------------------------------------------- findings

bool constant_multiple(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return false;
  const Rational ratio = p.terms().begin()->second / q.terms().begin()->second;
  return p == q * ratio;
}

CaseFinding::Status standing_status(const Constraint& standing, const TheoremCase& tc,
                                    const std::vector<CaseFamily>& families) {
  bool all_vacuous = true;
  bool all_implied = true;
  for (const auto& fam : families) {
    auto apply = [&](const Polynomial& p) { return substitute_to_fixpoint(p, fam.substitution); };
    const Polynomial s = apply(standing.poly);
    if (standing.kind == Constraint::Kind::Equation) {
      all_vacuous = false;
      if (!reduce_modulo_constraints(s, fam.spec.constraints).is_zero()) all_implied = false;
      continue;
    }
    if (s.is_zero()) continue;  // this branch is empty
    all_vacuous = false;
    bool implied = s.is_constant();
    for (const auto& cond : tc.conditions) {
      if (cond.kind == Constraint::Kind::NonVanishing) {
        implied = implied || constant_multiple(s, apply(cond.poly));
      }
    }
    if (!implied) all_implied = false;
  }
  if (all_vacuous) return CaseFinding::Status::Vacuous;
  return all_implied ? CaseFinding::Status::Implied : CaseFinding::Status::Assumed;
}

std::vector<CaseFinding> check_cases(const GroupEntry& g) {
  std::vector<CaseFinding> out;
  for (const TheoremClaim* claim : {&g.first, &g.second}) {
    if (claim->cases.empty()) continue;
    for (const auto& tc : claim->cases) {
      const auto families = case_families(g, tc);
      for (const auto& standing : g.spec.constraints) {
        out.push_back({g.id, claim->kind, tc.label, standing.str(),
                       standing_status(standing, tc, families)});
      }
    }
  }
  return out;
}

}  // namespace

std::string_view group_name(GroupId id) {
  static constexpr std::array<std::string_view, 7> names{"G1", "G2", "G3", "G4",
                                                         "G5", "G6", "G7"};
  return names[static_cast<std::size_t>(id)];
}

std::optional<GroupId> group_from_name(std::string_view name) {
  if (name.size() != 2 || std::toupper(static_cast<unsigned char>(name[0])) != 'G') {
    return std::nullopt;
  }
  const char d = name[1];
  if (d < '1' || d > '7') return std::nullopt;
  return static_cast<GroupId>(d - '1');
}

std::string_view status_name(CaseFinding::Status status) {
  switch (status) {
    case CaseFinding::Status::Implied:
      return "implied";
    case CaseFinding::Status::Assumed:
      return "assumed";
    case CaseFinding::Status::Vacuous:
      return "vacuous";
  }
  return "?";
}

std::string CaseFinding::str() const {
  return std::string(group_name(group)) + " " + std::string(kind_name(kind)) + " case " + label +
         ": standing constraint " + constraint + " is " + std::string(status_name(status));
}

std::string catalog_checksum(const json& doc) {
  json body = doc;
  body.erase("checksum");
  return "sha256:" + sha256_hex(body.dump());
}

json stamp_catalog(json doc) {
  doc["checksum"] = catalog_checksum(doc);
  return doc;
}

Catalog Catalog::from_json(const json& doc) {
  Catalog cat;
  try {
    if (doc.at("schema").get<std::string>() != kSchemaName) {
      throw CatalogError("not a catalog document");
    }
    cat.version_ = doc.at("version").get<int>();
    if (cat.version_ != kSchemaVersion) {
      throw CatalogError("unsupported catalog version " + std::to_string(cat.version_));
    }
    if (!doc.contains("checksum")) throw CatalogError("catalog has no checksum");
    cat.checksum_ = doc.at("checksum").get<std::string>();
    const std::string actual = catalog_checksum(doc);
    if (actual != cat.checksum_) {
      throw CatalogError("catalog checksum mismatch: file says " + cat.checksum_ +
                         ", content hashes to " + actual);
    }

    MetricSignature sig;
    const json& eps = doc.at("signature");
    for (int i = 0; i < 3; ++i) sig.eps[i] = eps.at(i).get<int>();
    const json& ps = doc.at("product_structure");
    for (int i = 0; i < 3; ++i) {
      if (ps.at(i).get<int>() != ProductStructure{}.j(i, i)) {
        throw CatalogError("only the product structure diag(1, 1, -1) is supported");
      }
    }

    const json& groups = doc.at("groups");
    if (!groups.is_array() || groups.size() != kAllGroups.size()) {
      throw CatalogError("catalog must list exactly seven groups");
    }
    for (std::size_t n = 0; n < kAllGroups.size(); ++n) {
      cat.groups_[n] = parse_group(groups[n], kAllGroups[n], sig);
    }
    for (const auto& a : doc.at("annotations")) {
      cat.annotations_.push_back({a.at("group").get<std::string>(), a.at("item").get<std::string>(),
                                  a.at("location").get<std::string>(),
                                  a.at("note").get<std::string>()});
    }
  } catch (const json::exception& e) {
    throw CatalogError(std::string("malformed catalog: ") + e.what());
  }
  for (const auto& g : cat.groups_) {
    for (auto& f : check_cases(g)) cat.findings_.push_back(std::move(f));
  }
  return cat;
}

Catalog Catalog::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot open catalog " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw CatalogError("catalog " + path.string() + " is not valid JSON: " + e.what());
  }
  return from_json(doc);
}

std::filesystem::path Catalog::default_path() {
  if (const char* env = std::getenv("WANAS_CATALOG"); env != nullptr && *env != '\0') return env;
  return WANAS_DEFAULT_CATALOG;
}

const Catalog& Catalog::shared() {
  static const Catalog catalog = load(default_path());
  return catalog;
}

const GroupEntry& Catalog::get_group(GroupId id) const {
  return groups_[static_cast<std::size_t>(id)];
}

const TheoremClaim& Catalog::theorem_claim(GroupId id, SolitonKind kind) const {
  const GroupEntry& g = get_group(id);
  return kind == SolitonKind::First ? g.first : g.second;
}

json Catalog::to_json() const {
  json doc;
  doc["schema"] = kSchemaName;
  doc["version"] = version_;
  doc["signature"] = groups_[0].spec.signature.eps;
  doc["product_structure"] = {1, 1, -1};
  doc["annotations"] = json::array();
  for (const auto& a : annotations_) {
    doc["annotations"].push_back(
        {{"group", a.group}, {"item", a.item}, {"location", a.location}, {"note", a.note}});
  }
  doc["groups"] = json::array();
  for (const auto& g : groups_) doc["groups"].push_back(group_json(g));
  return stamp_catalog(std::move(doc));
}

const GroupEntry& get_group(GroupId id) { return Catalog::shared().get_group(id); }
const ClaimedTensors& claimed_tensors(GroupId id) {
  return Catalog::shared().claimed_tensors(id);
}
const TheoremClaim& theorem_claim(GroupId id, SolitonKind kind) {
  return Catalog::shared().theorem_claim(id, kind);
}

std::vector<CaseFamily> case_families(const GroupEntry& group, const TheoremCase& tc) {
  std::vector<Substitution> branches = tc.branches;
  if (branches.empty()) branches.emplace_back();

  std::vector<CaseFamily> out;
  for (const auto& branch : branches) {
    CaseFamily fam;
    Substitution& sub = fam.substitution;
    auto bind = [&](Var v, const Polynomial& image) {
      for (auto& [k, img] : sub) img = img.substitute({{v, image}});
      sub[v] = image;
    };
    std::vector<Polynomial> leftover;
    auto absorb = [&](const Polynomial& p, std::optional<Var> forced) {
      const Polynomial q = substitute_to_fixpoint(p, sub);
      if (q.is_zero()) return;
      if (auto s = solve_linear(q, forced)) {
        bind(s->first, s->second);
      } else {
        leftover.push_back(q);
      }
    };
    for (const auto& cond : tc.conditions) {
      if (cond.kind == Constraint::Kind::Equation) absorb(cond.poly, std::nullopt);
    }
    for (const auto& [v, image] : branch) {
      absorb(Polynomial(v) - image, v);
      if (!fam.branch.empty()) fam.branch += ", ";
      fam.branch += std::string(var_name(v)) + " = " + image.str();
    }

    auto apply = [&](const Polynomial& p) { return substitute_to_fixpoint(p, sub); };
    Rank3<Polynomial> table = zero_rank3<Polynomial>();
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) table[i][j](k) = apply(group.spec.constants(i, j)(k));
    fam.spec.constants = StructureConstants<Polynomial>::from_table(table);
    fam.spec.signature = group.spec.signature;

    auto add_nonvanishing = [&](const Polynomial& p) {
      const Polynomial q = apply(p);
      if (q.is_zero()) fam.vacuous = true;
      fam.nonvanishing.push_back(q);
    };
    for (const auto& con : group.spec.constraints) {
      if (con.kind == Constraint::Kind::NonVanishing) {
        add_nonvanishing(con.poly);
        continue;
      }
      const Polynomial q = apply(con.poly);
      if (!q.is_zero()) fam.spec.constraints.push_back(Constraint::equation(q));
    }
    for (const auto& con : tc.conditions) {
      if (con.kind == Constraint::Kind::NonVanishing) add_nonvanishing(con.poly);
    }
    for (const auto& p : leftover) {
      const Polynomial q = reduce_modulo_constraints(apply(p), fam.spec.constraints);
      if (q.is_zero()) continue;
      if (q.is_constant()) fam.vacuous = true;
      fam.spec.constraints.push_back(Constraint::equation(q));
    }
    if (tc.c) fam.c = apply(*tc.c);
    fam.d = map_entries<Polynomial>(tc.d, apply);
    out.push_back(std::move(fam));
  }
  return out;
}

std::vector<std::string> matching_cases(const TheoremClaim& claim,
                                        const ParameterAssignment& point) {
  std::vector<std::string> labels;
  if (claim.form == TheoremClaim::Form::NoSoliton) return labels;
  for (const auto& tc : claim.cases) {
    bool holds = true;
    for (const auto& cond : tc.conditions) {
      holds = holds && cond.holds_at(cond.poly.evaluate(point.values()));
    }
    if (holds) labels.push_back(tc.label);
  }
  return labels;
}

SolitonVerdict predicate_eval(const TheoremClaim& claim, const ParameterAssignment& point) {
  const auto labels = matching_cases(claim, point);
  if (labels.empty()) return SolitonVerdict::none({});
  if (labels.size() > 1) {
    std::string msg = "point " + point.str() + " matches cases";
    for (const auto& l : labels) msg += " " + l;
    throw AmbiguousCase(msg);
  }
  const TheoremCase* tc = nullptr;
  for (const auto& candidate : claim.cases) {
    if (candidate.label == labels.front()) tc = &candidate;
  }
  if (!tc->c) {
    // D(c) + c Id does not depend on c; evaluate it at c = 0.
    Assignment values = point.values();
    values[Var::c] = Rational(0);
    return SolitonVerdict::any_c(
        map_entries<Rational>(tc->d, [&](const Polynomial& p) { return p.evaluate(values); }));
  }
  auto eval = [&](const Polynomial& p) { return p.evaluate(point.values()); };
  return SolitonVerdict::unique(eval(*tc->c), map_entries<Rational>(tc->d, eval));
}

}  // namespace wanas
