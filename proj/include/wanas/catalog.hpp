#ifndef WANAS_CATALOG_HPP
#define WANAS_CATALOG_HPP

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wanas/geometry.hpp"
#include "wanas/soliton.hpp"

namespace wanas {

enum class GroupId { G1, G2, G3, G4, G5, G6, G7 };

inline constexpr std::array<GroupId, 7> kAllGroups{GroupId::G1, GroupId::G2, GroupId::G3,
                                                   GroupId::G4, GroupId::G5, GroupId::G6,
                                                   GroupId::G7};

std::string_view group_name(GroupId id);  // "G1" ...
/// Case-insensitive: "g3" and "G3" both work.
std::optional<GroupId> group_from_name(std::string_view name);

/// Tensors exactly as printed, shorthands already expanded. The A-tensor is
/// printed only for i < j; the other slots are filled by antisymmetry.
struct ClaimedTensors {
  ConnectionCoeffs<Polynomial> connection;
  TorsionComponents<Polynomial> torsion;
  TrilinearComponents<Polynomial> a_tensor;
  Operator3<Polynomial> abar;
  Operator3<Polynomial> ric;
  Operator3<Polynomial> wan;
  Operator3<Polynomial> wan_tilde;
  /// The source states the symmetrized operator equals Wan instead of
  /// printing it.
  bool wan_tilde_is_wan = false;
};

struct TheoremCase {
  std::string label;
  /// Conditions as written, e.g. "alpha = 0", "beta != 0".
  std::vector<std::string> condition_text;
  std::vector<Constraint> conditions;
  /// Extra substitutions, one per branch, for conditions that are not
  /// themselves substitutions (alpha^2 = beta^2 splits into alpha = +-beta).
  std::vector<Substitution> branches;
  /// nullopt: every c works and `d` is written in terms of the variable c.
  std::optional<Polynomial> c;
  Operator3<Polynomial> d;
};

struct TheoremClaim {
  enum class Form { NoSoliton, SameAsFirst, Cases };
  GroupId group = GroupId::G1;
  SolitonKind kind = SolitonKind::First;
  Form form = Form::NoSoliton;
  /// For SameAsFirst, the first-kind cases.
  std::vector<TheoremCase> cases;
};

struct GroupEntry {
  GroupId id = GroupId::G1;
  bool unimodular = true;
  LieAlgebraSpec spec;
  /// a1..a3 or b1..b3, as polynomials in the base variables.
  SymbolTable shorthands;
  ClaimedTensors claimed;
  TheoremClaim first;
  TheoremClaim second;
};

/// Free-form remark attached to catalog data (e.g. a known inconsistency
/// in the claimed data that is kept verbatim).
struct Annotation {
  std::string group;
  std::string item;
  std::string location;
  std::string note;
};

/// One theorem case restricted to one branch: the group with the case's
/// equation conditions applied as substitutions.
struct CaseFamily {
  std::string branch;  // "" or e.g. "alpha = beta"
  Substitution substitution;
  LieAlgebraSpec spec;  // substituted constants; remaining equations as constraints
  std::optional<Polynomial> c;
  Operator3<Polynomial> d;
  /// Non-vanishing conditions of the case and the group, substituted.
  std::vector<Polynomial> nonvanishing;
  /// Some non-vanishing condition became identically zero: the family is empty.
  bool vacuous = false;
};

/// Consistency of a theorem case with the group's standing constraints.
struct CaseFinding {
  GroupId group;
  SolitonKind kind;
  std::string label;
  std::string constraint;
  enum class Status { Implied, Assumed, Vacuous } status;
  std::string str() const;
};

std::string_view status_name(CaseFinding::Status status);

class Catalog {
 public:
  /// Parses and validates a catalog document; the checksum must match.
  static Catalog from_json(const nlohmann::json& doc);
  static Catalog load(const std::filesystem::path& path);
  /// WANAS_CATALOG if set, else the catalog shipped with the build.
  static std::filesystem::path default_path();
  /// Loaded once from default_path() and shared.
  static const Catalog& shared();

  const GroupEntry& get_group(GroupId id) const;
  const ClaimedTensors& claimed_tensors(GroupId id) const { return get_group(id).claimed; }
  const TheoremClaim& theorem_claim(GroupId id, SolitonKind kind) const;
  const std::vector<Annotation>& annotations() const { return annotations_; }
  const std::string& checksum() const { return checksum_; }
  int version() const { return version_; }

  /// Checked when the catalog is loaded.
  const std::vector<CaseFinding>& case_findings() const { return findings_; }

  /// Serializes back to a document (checksum included). Polynomials are
  /// written in canonical form, so this is a fixpoint after one round.
  nlohmann::json to_json() const;

 private:
  int version_ = 0;
  std::string checksum_;
  std::array<GroupEntry, 7> groups_;
  std::vector<Annotation> annotations_;
  std::vector<CaseFinding> findings_;
};

/// "sha256:<hex>" of the compact dump of `doc` without its "checksum" key.
std::string catalog_checksum(const nlohmann::json& doc);
/// Returns `doc` with its "checksum" key set to catalog_checksum(doc).
nlohmann::json stamp_catalog(nlohmann::json doc);

const GroupEntry& get_group(GroupId id);
const ClaimedTensors& claimed_tensors(GroupId id);
const TheoremClaim& theorem_claim(GroupId id, SolitonKind kind);

/// One family per branch of the case (a single family when there are none).
std::vector<CaseFamily> case_families(const GroupEntry& group, const TheoremCase& tc);

/// Expected verdict at a valid point: the unique matching case evaluated at
/// the point, NoSoliton if no case matches. Throws AmbiguousCase if several
/// cases match and MissingVariable if the point misses a parameter.
SolitonVerdict predicate_eval(const TheoremClaim& claim, const ParameterAssignment& point);

/// Labels of the cases whose conditions hold at the point.
std::vector<std::string> matching_cases(const TheoremClaim& claim,
                                        const ParameterAssignment& point);

}  // namespace wanas

#endif  // WANAS_CATALOG_HPP
