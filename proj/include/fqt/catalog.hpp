// Built-in table of explicit curve families with expected analysis results,
// a per-entry verifier, and JSON serialization of the table.
#ifndef FQT_CATALOG_HPP
#define FQT_CATALOG_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fqt/homology.hpp"
#include "json.hpp"

namespace fqt {

enum class ParamDomain {
  Unit,          // nonzero element
  NonCubeUnit,   // nonzero element that is not a cube
  PrimCubeRoot,  // s with s^2 + s + 1 = 0
};

const char* param_domain_name(ParamDomain d);

struct ParamSpec {
  std::string name;
  ParamDomain domain;
  bool operator==(const ParamSpec&) const = default;
};

enum class StrongStatus {
  NotStrong,      // another curve in the class is the strong Weil curve
  Strong,         // this equation is the strong Weil curve
  StrongClaimed,  // asserted without proof; mismatches are findings
  Unasserted,
};

const char* strong_status_name(StrongStatus s);

// Expected analysis results, applicable when `when` holds (empty = always).
struct Expectation {
  std::string when;
  long pole_order = 0;         // 0 = unasserted
  int frobenius_offset = -1;   // -1 = unasserted
  StrongStatus strong = StrongStatus::Unasserted;
  bool operator==(const Expectation&) const = default;
};

struct CatalogEntry {
  std::string id;
  std::string q_constraint;  // conjunction of atoms: p==N, p>=N, q%N==M, q==4^m
  std::vector<ParamSpec> params;
  std::string equation;       // long Weierstrass equation in T and the parameters
  std::string conductor;      // finite part of the conductor, monic cubic
  // (place expression, pole order of j there); place "inf" or a constant
  // expression; listed linear places are exhaustive when nonempty.
  std::vector<std::pair<std::string, int>> j_poles;
  std::string expected_j;     // closed form, "" = unasserted
  std::string isogeny_class;  // shared label within one isogeny class
  std::vector<Expectation> expected;
  bool operator==(const CatalogEntry&) const = default;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(const std::string& id);  // UnknownEntry

// Evaluates the constraint mini-language against (q, p, e).
bool constraint_holds(const std::string& expr, const FieldCtx& F);

// All admissible parameter bindings for the entry over F (empty binding list
// means the entry itself is inadmissible; a single empty Bindings means no
// parameters).
std::vector<Bindings> admissible_params(const CatalogEntry& e, const FieldCtx& F);

// ConstraintViolated on constraint failure or an inadmissible binding.
Curve instantiate(const CatalogEntry& e, const FieldCtx& F, const Bindings& b);

// Instantiations of the other admissible entries sharing the isogeny class.
std::vector<Curve> classmates_for(const CatalogEntry& e, const FieldCtx& F, const Bindings& b);

// Finds the (entry, binding) whose instantiation is the same curve as E.
std::optional<std::pair<const CatalogEntry*, Bindings>> match_curve(const Curve& E);

struct EntryCheck {
  std::string field;
  bool pass;
  std::string expected;
  std::string got;
};

struct EntryReport {
  std::string entry_id;
  int q = 0;
  Bindings binding;
  std::vector<EntryCheck> checks;
  std::vector<std::string> findings;  // mismatches of claimed-only assertions
  bool passed() const;
};

// Instantiates, analyzes with classmates, and compares every expected field.
EntryReport verify_entry(const CatalogEntry& e, const FieldCtx& F, const Bindings& b);

// Equal good-place counts, identical reduction types per place, and pole
// ratios supported on {2, 3, p} across the admissible parameterless entries
// of one class.
bool isogeny_class_consistency(const std::string& class_label, const FieldCtx& F);

nlohmann::ordered_json catalog_to_json();
std::vector<CatalogEntry> catalog_from_json(const nlohmann::ordered_json& j);

}  // namespace fqt

#endif
