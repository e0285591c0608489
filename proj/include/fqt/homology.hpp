// Quotient-graph homology over P^1(F_q): harmonic cycles, the weighted
// pairing, pole orders, uniformization degrees, strong-curve location.
#ifndef FQT_HOMOLOGY_HPP
#define FQT_HOMOLOGY_HPP

#include <string>
#include <vector>

#include "fqt/curves.hpp"

namespace fqt {

// ---- quotient graph ------------------------------------------------------

struct GraphVertexRef {
  std::string name;  // e01, e11, pth_<place>_1, pth_<place>_2
  int cusps;         // half-lines attached to this vertex
};

struct GraphEdgeRef {
  int from, to;      // indices into vertices
  std::string name;  // d_<a> for direct edges, p_<place>_<i> on paths
};

// Two hub vertices of valency q+1; one direct edge per a with (T-a) not
// dividing n; a three-edge path with two cusps per simple linear root and
// for infinity; one cusp at each hub iff n has a multiple zero.
struct QuotientGraph {
  std::vector<GraphVertexRef> vertices;
  std::vector<GraphEdgeRef> edges;
  int cusp_count;
  int betti() const { return (int)edges.size() - (int)vertices.size() + 1; }
};

QuotientGraph build_graph(const FieldCtx& F, const ConductorShape& n);

// ---- cycles and the pairing ---------------------------------------------

class GraphContext;

// Integer function on P^1(F_q) (canonical place order, infinity last) with
// zero sum, vanishing at the multiple root of n when there is one.
struct Cycle {
  const GraphContext* ctx;
  std::vector<long> values;  // size q+1
  bool is_zero() const;
};

// Weights and basis for one analyzed isogeny class: w = q+1 exactly at the
// places where the class has multiplicative reduction, else 1.
class GraphContext {
 public:
  GraphContext(const FieldCtx& F, const ConductorShape& shape, const ReductionProfile& profile);
  GraphContext(const GraphContext&) = delete;
  GraphContext& operator=(const GraphContext&) = delete;

  const FieldCtx& field() const { return *F_; }
  const ConductorShape& conductor() const { return shape_; }
  int genus() const { return genus_; }
  const std::vector<Place>& places() const { return places_; }
  long weight(size_t place_index) const { return weights_[place_index]; }
  size_t index_of(const Place& v) const;

  // Validates zero sum and the multiple-root condition (ConstraintViolated).
  Cycle make_cycle(std::vector<long> values) const;
  Cycle basis_cycle(FieldElem a) const;  // delta_a - delta_inf
  const std::vector<Cycle>& basis() const { return basis_; }

 private:
  const FieldCtx* F_;
  ConductorShape shape_;
  std::vector<Place> places_;
  std::vector<long> weights_;
  int genus_;
  std::vector<Cycle> basis_;
};

// phi(inf) = -1; -lambda_a at good places; -1 split, +1 non-split,
// 0 additive.  ProfileInconsistent if the profile disagrees with n or the
// values do not sum to zero.
Cycle build_cycle(const GraphContext& ctx, const ReductionProfile& profile);

// Sum of w_a phi(a) psi(a) over P^1(F_q).
long pairing(const Cycle& phi, const Cycle& psi);

// gcd over the basis of |<phi, delta_a - delta_inf>|; equals the minimum
// positive pairing value over the whole lattice.
long pole_order_basis(const Cycle& phi);

// Count-gcd route: N = gcd of good-place counts (0 for none), then N
// if no non-split linear place, else gcd(N, 2q+2).
long pole_order_gcd_route(const ReductionProfile& profile);

// ---- analysis ------------------------------------------------------------

struct AnalysisReport {
  ReductionProfile profile;
  ConductorShape conductor;
  std::vector<long> cycle_values;  // canonical place order
  std::vector<int> j_poles;        // per place: max(0, -v(j)) of the input curve
  long big_n;                      // gcd of good-place counts
  long pole_order;                 // -v_inf(j) of the strong curve
  long self_pairing;
  long deg_pi;
  int genus;
  bool frobenius_minimal_input;
  int frobenius_offset;  // strong curve = Frob^offset of the located minimal form
  bool used_classmate;   // located on a classmate's Frobenius chain, not the input's
  Curve strong_curve;    // canonical model (linear powers reduced)
};

// Full pipeline: profile, conductor inference, cycle, both pole routes
// (asserted equal), self pairing, deg_pi, Frobenius offset, strong curve.
// Classmates are isogenous curves used when the strong curve does not lie
// on the input's own Frobenius chain.
AnalysisReport analyze(const Curve& E, const std::vector<Curve>& classmates = {});

Curve strong_weil_curve(const Curve& E, const std::vector<Curve>& classmates = {});

}  // namespace fqt

#endif
