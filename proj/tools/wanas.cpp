// Command-line front end: tensors, check, classify, verify-paper, jacobi.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wanas/catalog.hpp"
#include "wanas/expression.hpp"
#include "wanas/tensor_format.hpp"
#include "wanas/verify.hpp"

namespace {

using nlohmann::json;
using namespace wanas;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

GroupId parse_group(const std::string& name) {
  auto id = group_from_name(name);
  if (!id) throw UsageError("unknown group '" + name + "' (expected g1..g7)");
  return *id;
}

SolitonKind parse_kind(const std::string& name) {
  auto kind = kind_from_name(name);
  if (!kind) throw UsageError("unknown kind '" + name + "' (expected first or second)");
  return *kind;
}

std::vector<Rational> parse_ladder(const std::string& text) {
  std::vector<Rational> ladder;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      ladder.push_back(Rational::parse(item));
    } catch (const Error& e) {
      throw UsageError("bad ladder value '" + item + "': " + e.what());
    }
  }
  if (ladder.empty()) throw UsageError("empty ladder");
  return ladder;
}

ParameterAssignment parse_point(const std::string& text) {
  try {
    return ParameterAssignment(parse_assignment(text));
  } catch (const Error& e) {
    throw UsageError(std::string("bad --at: ") + e.what());
  }
}

// Throws UsageError listing the violations.
void require_admissible(const LieAlgebraSpec& spec, const ParameterAssignment& point) {
  std::vector<Violation> violations;
  try {
    violations = validate_assignment(spec, point);
  } catch (const MissingVariable& e) {
    throw UsageError(std::string("invalid --at: ") + e.what());
  }
  if (violations.empty()) return;
  std::string msg = "invalid --at " + point.str() + ":";
  for (const auto& v : violations) msg += "\n  " + v.str();
  throw UsageError(msg);
}

LieAlgebraSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open spec file " + path);
  try {
    return spec_from_json(json::parse(in));
  } catch (const json::exception& e) {
    throw UsageError("spec file " + path + ": " + e.what());
  } catch (const Error& e) {
    throw UsageError("spec file " + path + ": " + e.what());
  }
}

struct Target {
  std::string label;
  LieAlgebraSpec spec;
};

Target resolve_target(const std::string& group, const std::string& spec_file) {
  if (!spec_file.empty()) {
    if (!group.empty()) throw UsageError("--group and --spec-file are mutually exclusive");
    return {spec_file, load_spec_file(spec_file)};
  }
  if (group.empty()) throw UsageError("one of --group or --spec-file is required");
  const GroupId id = parse_group(group);
  return {std::string(group_name(id)), get_group(id).spec};
}

// ------------------------------------------------------------------ tensors

const std::vector<std::string> kTensorNames{"connection", "torsion", "curvature", "a_tensor",
                                            "wanas",      "abar",    "ric",       "wan",
                                            "wan_tilde",  "all"};

struct TensorsArgs {
  std::string group;
  std::string spec_file;
  std::string tensor = "all";
  std::string connection = "canonical";
  std::string at;
  bool as_json = false;
};

template <ExactScalar S>
void emit_tensor(const std::string& name, const LieAlgebra<S>& spec, bool levi_civita_only,
                 bool as_json, json& out) {
  if (levi_civita_only) {
    const auto lc = to_poly(levi_civita(spec));
    if (as_json) {
      out["connection"] = rank3_json(lc);
    } else {
      std::string text = format_connection(lc);
      for (std::size_t pos; (pos = text.find("nabla0")) != std::string::npos;) {
        text.replace(pos, 6, "nabla");
      }
      std::cout << text;
    }
    return;
  }
  const TensorBundle<S> b = compute_all(spec);
  auto want = [&](const char* n) { return name == "all" || name == n; };
  auto matrix = [&](const char* n, const Operator3<S>& m) {
    if (!want(n)) return;
    if (as_json) {
      out[n] = matrix_json(to_poly(m));
    } else {
      std::cout << n << " =\n" << format_matrix(to_poly(m));
    }
  };
  if (want("connection")) {
    if (as_json) out["connection"] = rank3_json(to_poly(b.connection));
    else std::cout << format_connection(to_poly(b.connection));
  }
  if (want("torsion")) {
    if (as_json) out["torsion"] = rank3_json(to_poly(b.torsion));
    else std::cout << format_torsion(to_poly(b.torsion));
  }
  if (want("curvature")) {
    if (as_json) out["curvature"] = rank4_json(to_poly(b.curvature));
    else std::cout << format_trilinear(to_poly(b.curvature), "R0");
  }
  if (want("a_tensor")) {
    if (as_json) out["a_tensor"] = rank4_json(to_poly(b.a_tensor));
    else std::cout << format_trilinear(to_poly(b.a_tensor), "A0");
  }
  if (want("wanas")) {
    if (as_json) out["wanas"] = rank4_json(to_poly(b.wanas));
    else std::cout << format_trilinear(to_poly(b.wanas), "W0");
  }
  matrix("abar", b.abar);
  matrix("ric", b.ric);
  matrix("wan", b.wan);
  matrix("wan_tilde", b.wan_tilde);
}

int cmd_tensors(const TensorsArgs& args) {
  if (args.connection != "canonical" && args.connection != "levi-civita") {
    throw UsageError("--connection must be canonical or levi-civita");
  }
  const bool lc = args.connection == "levi-civita";
  if (lc && args.tensor != "connection") {
    throw UsageError("--connection levi-civita only applies to --tensor connection");
  }
  const Target target = resolve_target(args.group, args.spec_file);
  json out = {{"target", target.label}, {"tensor", args.tensor}};
  if (args.at.empty()) {
    emit_tensor(args.tensor, target.spec, lc, args.as_json, out["value"]);
  } else {
    const ParameterAssignment point = parse_point(args.at);
    require_admissible(target.spec, point);
    out["at"] = point.str();
    emit_tensor(args.tensor, evaluate_spec(target.spec, point), lc, args.as_json, out["value"]);
  }
  if (args.as_json) std::cout << out.dump(2) << '\n';
  return kOk;
}

// -------------------------------------------------------------------- check

struct CheckArgs {
  std::string group;
  std::string spec_file;
  std::string kind = "first";
  std::string at;
  bool as_json = false;
};

int cmd_check(const CheckArgs& args) {
  const SolitonKind kind = parse_kind(args.kind);
  const Target target = resolve_target(args.group, args.spec_file);
  const ParameterAssignment point = parse_point(args.at);
  require_admissible(target.spec, point);
  const NumericLieAlgebra alg = evaluate_spec(target.spec, point);
  const SolitonVerdict verdict = soliton_decide(alg, kind, wan_of_kind(compute_all(alg), kind));
  if (args.as_json) {
    json out = {{"target", target.label},
                {"kind", kind_name(kind)},
                {"at", point.str()},
                {"verdict", to_json(verdict)}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << target.label << " " << kind_name(kind) << " kind at " << point.str() << '\n'
              << to_text(verdict);
  }
  return kOk;
}

// ----------------------------------------------------------------- classify

struct GridArgs {
  std::string ladder;
  std::size_t min_points = 200;
  std::size_t cap = 5000;

  GridSpec spec() const {
    GridSpec g;
    if (!ladder.empty()) g.ladder = parse_ladder(ladder);
    g.min_points = min_points;
    g.cap = cap;
    return g;
  }
};

struct ClassifyArgs {
  std::string group;
  std::string kind = "first";
  GridArgs grid;
  bool as_json = false;
};

int cmd_classify(const ClassifyArgs& args) {
  const GroupId id = parse_group(args.group);
  const SolitonKind kind = parse_kind(args.kind);
  const ClassificationReport r = classify_grid(id, kind, args.grid.spec());
  if (args.as_json) {
    std::cout << to_json(r, true).dump(2) << '\n';
  } else {
    std::cout << group_name(id) << " " << kind_name(kind) << " kind: " << r.agreements() << "/"
              << r.points.size() << " points agree with the theorem ("
              << r.count(SolitonVerdict::Outcome::NoSoliton) << " no soliton, "
              << r.count(SolitonVerdict::Outcome::Soliton) << " soliton, "
              << r.count(SolitonVerdict::Outcome::SolitonAnyC) << " any c)\n";
    for (const auto& p : r.points) {
      if (p.agree) continue;
      std::cout << "  disagree at " << p.point.str() << ": computed "
                << outcome_name(p.computed.outcome) << ", expected "
                << (p.note.empty() ? std::string(outcome_name(p.expected.outcome)) : p.note)
                << '\n';
    }
  }
  return r.all_agree() ? kOk : kFailed;
}

// ------------------------------------------------------------- verify-paper

struct VerifyArgs {
  std::vector<std::string> groups;
  std::string out;
  GridArgs grid;
  bool as_json = false;
};

int cmd_verify_paper(const VerifyArgs& args) {
  VerifyOptions options;
  if (!args.groups.empty()) {
    options.groups.clear();
    for (const auto& g : args.groups) options.groups.push_back(parse_group(g));
  }
  options.grid = args.grid.spec();
  const Report report = verify_paper(options);
  const std::string doc = to_json(report).dump(2) + "\n";
  if (!args.out.empty()) {
    std::ofstream f(args.out, std::ios::binary);
    if (!f) throw UsageError("cannot write " + args.out);
    f << doc;
  }
  if (args.as_json) {
    std::cout << doc;
  } else {
    std::cout << to_text(report);
  }
  return report.all_pass() ? kOk : kFailed;
}

// ------------------------------------------------------------------- jacobi

struct JacobiArgs {
  std::string group;
  std::string spec_file;
};

int cmd_jacobi(const JacobiArgs& args) {
  std::vector<Target> targets;
  if (args.group.empty() && args.spec_file.empty()) {
    for (GroupId id : kAllGroups) targets.push_back({std::string(group_name(id)), get_group(id).spec});
  } else {
    targets.push_back(resolve_target(args.group, args.spec_file));
  }
  bool ok = true;
  for (const auto& t : targets) {
    const bool holds = jacobi_holds(t.spec);
    ok = ok && holds;
    std::cout << t.label << ": Jacobi " << (holds ? "holds" : "FAILS");
    if (!holds) {
      const Vec3<Polynomial> r = jacobi_residual(t.spec);
      std::cout << " (residual " << format_vector(r) << ")";
    }
    std::cout << '\n';
  }
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Algebraic Wanas solitons on three-dimensional Lorentzian Lie groups"};
  app.require_subcommand(1);

  TensorsArgs tensors;
  auto* t = app.add_subcommand("tensors", "Print the canonical-connection tensors of a group");
  t->add_option("--group", tensors.group, "g1..g7");
  t->add_option("--spec-file", tensors.spec_file, "Custom algebra as JSON");
  t->add_option("--tensor", tensors.tensor, "Which tensor")
      ->check(CLI::IsMember(kTensorNames))
      ->capture_default_str();
  t->add_option("--connection", tensors.connection, "canonical or levi-civita")
      ->capture_default_str();
  t->add_option("--at", tensors.at, "Evaluate at name=p/q,...");
  t->add_flag("--json", tensors.as_json, "Machine-readable output");

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Decide solitonhood at one parameter point");
  c->add_option("--group", check.group, "g1..g7");
  c->add_option("--spec-file", check.spec_file, "Custom algebra as JSON");
  c->add_option("--kind", check.kind, "first or second")->capture_default_str();
  c->add_option("--at", check.at, "name=p/q,...")->required();
  c->add_flag("--json", check.as_json, "Machine-readable output");

  auto add_grid = [](CLI::App* cmd, GridArgs& grid) {
    cmd->add_option("--grid-ladder", grid.ladder, "Comma-separated rationals");
    cmd->add_option("--min-points", grid.min_points, "Refine the ladder up to this many points")
        ->capture_default_str();
    cmd->add_option("--cap", grid.cap, "Maximum points per grid")->capture_default_str();
  };

  ClassifyArgs classify;
  auto* k = app.add_subcommand("classify", "Compare computed verdicts with the theorem on a grid");
  k->add_option("--group", classify.group, "g1..g7")->required();
  k->add_option("--kind", classify.kind, "first or second")->capture_default_str();
  add_grid(k, classify.grid);
  k->add_flag("--json", classify.as_json, "Machine-readable output");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify-paper", "Reproduce every display and theorem");
  v->add_option("--group", verify.groups, "Restrict to these groups")->take_all();
  v->add_option("--out", verify.out, "Write the JSON report here");
  add_grid(v, verify.grid);
  v->add_flag("--json", verify.as_json, "Print the JSON report instead of the summary");

  JacobiArgs jacobi;
  auto* j = app.add_subcommand("jacobi", "Check the Jacobi identity");
  j->add_option("--group", jacobi.group, "g1..g7 (default: all)");
  j->add_option("--spec-file", jacobi.spec_file, "Custom algebra as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*t) return cmd_tensors(tensors);
    if (*c) return cmd_check(check);
    if (*k) return cmd_classify(classify);
    if (*v) return cmd_verify_paper(verify);
    if (*j) return cmd_jacobi(jacobi);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CatalogError& e) {
    std::cerr << "catalog error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}
