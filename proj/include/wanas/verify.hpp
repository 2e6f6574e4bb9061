#ifndef WANAS_VERIFY_HPP
#define WANAS_VERIFY_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "wanas/catalog.hpp"

namespace wanas {

enum class ItemKind { Connection, Torsion, ATensor, Abar, Ric, Wan, WanTilde, TheoremCase };
std::string_view item_name(ItemKind item);

enum class Verdict { Match, Mismatch, MatchOnVariety };
std::string_view verdict_name(Verdict v);

/// One compared entry. `location` is 1-based: (i,j)[k] for vector-valued
/// tables, (i,j,l)[k] for the A-tensor, (i,j) for matrices.
struct DiscrepancyReport {
  GroupId group = GroupId::G1;
  ItemKind item = ItemKind::Connection;
  std::string location;
  Polynomial computed;
  Polynomial claimed;
  Verdict verdict = Verdict::Match;
  /// How a non-literal match was established, e.g. "eta^2 - 1 = 0" or
  /// "vanishes at 312 sampled points". Empty for literal matches.
  std::string certificate;

  std::string str() const;
};

/// Compares a recomputed bundle with claims entry by entry. Differences
/// that vanish modulo eta^2 - 1 count as Match; differences that vanish only
/// modulo the other equation constraints, or at every sampled admissible
/// point, are MatchOnVariety.
std::vector<DiscrepancyReport> reproduce(GroupId id, const LieAlgebraSpec& spec,
                                         const ClaimedTensors& claimed);
std::vector<DiscrepancyReport> reproduce_group(const Catalog& catalog, GroupId id);
std::vector<DiscrepancyReport> reproduce_group(GroupId id);

struct GridSpec {
  std::vector<Rational> ladder = default_ladder();
  /// Parameters whose values never include 0.
  std::set<Var> exclude_zero;
  /// The ladder is refined with midpoints until at least this many
  /// admissible points exist...
  std::size_t min_points = 200;
  /// ...and an evenly strided subset is kept if there are more than this.
  std::size_t cap = 5000;
};

struct GridSample {
  std::vector<ParameterAssignment> points;
  std::vector<Rational> ladder;  // after refinement
  int refinements = 0;
  std::size_t admissible = 0;  // before capping
};

GridSample grid_points(const LieAlgebraSpec& spec, const GridSpec& grid);

struct PointClassification {
  ParameterAssignment point;
  SolitonVerdict computed;
  SolitonVerdict expected;
  bool agree = false;
  std::string note;  // set when the theorem predicate could not be evaluated
};

struct ClassificationReport {
  GroupId group = GroupId::G1;
  SolitonKind kind = SolitonKind::First;
  std::vector<Rational> ladder;
  int refinements = 0;
  std::size_t admissible = 0;
  std::vector<PointClassification> points;

  std::size_t agreements() const;
  std::size_t count(SolitonVerdict::Outcome outcome) const;  // computed outcomes
  bool all_agree() const { return agreements() == points.size(); }
};

/// Decides solitonhood at every grid point from recomputed numeric tensors
/// and compares with the theorem predicate.
ClassificationReport classify_grid(const Catalog& catalog, GroupId id, SolitonKind kind,
                                   const GridSpec& grid);
ClassificationReport classify_grid(GroupId id, SolitonKind kind, const GridSpec& grid);

/// Verdict for one numeric point of a group, from the full pipeline.
SolitonVerdict decide_at(const GroupEntry& group, SolitonKind kind,
                         const ParameterAssignment& point);

struct TheoremCheck {
  GroupId group = GroupId::G1;
  SolitonKind kind = SolitonKind::First;
  std::string label;
  std::string branch;
  bool vacuous = false;
  ClaimCheck result;
};

std::vector<TheoremCheck> check_theorems(const GroupEntry& group);

/// Exact (or on-variety) equality of the symmetrized operator with Wan, for
/// the groups where the catalog asserts it.
struct IdentityCheck {
  GroupId group = GroupId::G1;
  std::string name;
  Verdict verdict = Verdict::Match;
  std::vector<std::string> failures;
};

struct VerifyOptions {
  std::vector<GroupId> groups{kAllGroups.begin(), kAllGroups.end()};
  GridSpec grid;
};

struct GroupReport {
  GroupId id = GroupId::G1;
  std::vector<DiscrepancyReport> items;
  std::vector<IdentityCheck> identities;
  std::vector<TheoremCheck> theorems;
  std::vector<CaseFinding> findings;
};

struct Report {
  std::vector<GroupReport> groups;
  std::vector<ClassificationReport> classifications;
  std::vector<Annotation> annotations;

  std::size_t count(Verdict v) const;
  std::size_t theorem_failures() const;
  std::size_t disagreements() const;
  bool all_pass() const;
  /// "7 groups, all displays matched, all theorem cases pass" when clean.
  std::string headline() const;
};

Report verify_paper(const Catalog& catalog, const VerifyOptions& options = {});
Report verify_paper(const VerifyOptions& options = {});

/// {version, groups, classifications, summary}. Deterministic: no timings,
/// fixed ordering, canonical polynomial strings.
nlohmann::json to_json(const Report& report);
nlohmann::json to_json(const ClassificationReport& report, bool include_points);
std::string to_text(const Report& report);

}  // namespace wanas

#endif  // WANAS_VERIFY_HPP
