#include "fqt/homology.hpp"

#include <algorithm>
#include <numeric>

namespace fqt {

namespace {

void check(bool cond, const char* msg) {
  if (!cond) throw std::logic_error(std::string("internal invariant violated: ") + msg);
}

}  // namespace

// ---- quotient graph ------------------------------------------------------

QuotientGraph build_graph(const FieldCtx& F, const ConductorShape& n) {
  QuotientGraph g;
  int hub_cusps = n.multiple_root ? 1 : 0;
  g.vertices.push_back({"e01", hub_cusps});
  g.vertices.push_back({"e11", hub_cusps});
  for (auto a : F.elements()) {
    if (!n.finite_part.evaluate(a).is_zero())
      g.edges.push_back({0, 1, "d_" + F.display(a)});
  }
  std::vector<std::string> owners;
  for (auto r : n.simple_linear_roots) owners.push_back(F.display(r));
  owners.push_back("inf");
  for (const auto& o : owners) {
    int i1 = (int)g.vertices.size();
    g.vertices.push_back({"pth_" + o + "_1", 1});
    g.vertices.push_back({"pth_" + o + "_2", 1});
    g.edges.push_back({0, i1, "p_" + o + "_1"});
    g.edges.push_back({i1, i1 + 1, "p_" + o + "_2"});
    g.edges.push_back({i1 + 1, 1, "p_" + o + "_3"});
  }
  g.cusp_count = 0;
  for (const auto& v : g.vertices) g.cusp_count += v.cusps;
  int genus = n.square_free() ? F.q() : F.q() - 1;
  check(g.betti() == genus, "graph Betti number must equal the genus");
  return g;
}

// ---- GraphContext and cycles --------------------------------------------

bool Cycle::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](long v) { return v == 0; });
}

GraphContext::GraphContext(const FieldCtx& F, const ConductorShape& shape,
                           const ReductionProfile& profile)
    : F_(&F), shape_(shape), places_(all_places(F)) {
  if (profile.locals.size() != places_.size())
    fail(Errc::ContextMismatch, "profile does not cover P^1(F_q)");
  weights_.reserve(places_.size());
  for (size_t i = 0; i < places_.size(); ++i) {
    check(profile.locals[i].place == places_[i], "profile places out of canonical order");
    RedType t = profile.locals[i].type;
    bool mult = t == RedType::SplitMult || t == RedType::NonSplitMult;
    weights_.push_back(mult ? F.q() + 1 : 1);
  }
  genus_ = shape_.square_free() ? F.q() : F.q() - 1;
  for (auto a : F.elements()) {
    if (shape_.multiple_root && *shape_.multiple_root == a) continue;
    basis_.push_back(basis_cycle(a));
  }
  check((int)basis_.size() == genus_, "basis size must equal the genus");
}

size_t GraphContext::index_of(const Place& v) const {
  for (size_t i = 0; i < places_.size(); ++i)
    if (places_[i] == v) return i;
  fail(Errc::ContextMismatch, "place does not belong to this context");
}

Cycle GraphContext::make_cycle(std::vector<long> values) const {
  if (values.size() != places_.size())
    fail(Errc::ConstraintViolated, "cycle must assign a value to every place");
  long sum = std::accumulate(values.begin(), values.end(), 0L);
  if (sum != 0) fail(Errc::ConstraintViolated, "cycle values must sum to zero");
  if (shape_.multiple_root) {
    size_t i = index_of(Place::at(*shape_.multiple_root));
    if (values[i] != 0) fail(Errc::ConstraintViolated, "cycle must vanish at the multiple root");
  }
  return Cycle{this, std::move(values)};
}

Cycle GraphContext::basis_cycle(FieldElem a) const {
  if (shape_.multiple_root && *shape_.multiple_root == a)
    fail(Errc::ConstraintViolated, "delta at the multiple root is not a basis cycle");
  std::vector<long> v(places_.size(), 0);
  v[index_of(Place::at(a))] = 1;
  v.back() = -1;
  return Cycle{this, std::move(v)};
}

Cycle build_cycle(const GraphContext& ctx, const ReductionProfile& profile) {
  const ConductorShape& n = ctx.conductor();
  if (profile.locals.size() != ctx.places().size())
    fail(Errc::ContextMismatch, "profile does not cover P^1(F_q)");
  std::vector<long> values;
  values.reserve(profile.locals.size());
  long sum = 0;
  for (size_t i = 0; i + 1 < profile.locals.size(); ++i) {
    const LocalReduction& l = profile.locals[i];
    bool is_multiple = n.multiple_root && *n.multiple_root == l.place.a;
    bool is_simple = std::find(n.simple_linear_roots.begin(), n.simple_linear_roots.end(),
                               l.place.a) != n.simple_linear_roots.end();
    long v = 0;
    switch (l.type) {
      case RedType::Good:
        if (is_multiple || is_simple)
          fail(Errc::ProfileInconsistent, "good reduction at a conductor root");
        v = -l.lambda;
        break;
      case RedType::SplitMult:
        if (!is_simple) fail(Errc::ProfileInconsistent, "multiplicative place is not a simple root");
        v = -1;
        break;
      case RedType::NonSplitMult:
        if (!is_simple) fail(Errc::ProfileInconsistent, "multiplicative place is not a simple root");
        v = 1;
        break;
      case RedType::Additive:
        if (!is_multiple) fail(Errc::ProfileInconsistent, "additive place is not the multiple root");
        v = 0;
        break;
    }
    values.push_back(v);
    sum += v;
  }
  if (profile.locals.back().type != RedType::SplitMult)
    fail(Errc::ProfileInconsistent, "reduction at infinity is not split multiplicative");
  values.push_back(-1);
  sum += -1;
  if (sum != 0) fail(Errc::ProfileInconsistent, "cycle values do not sum to zero");
  return ctx.make_cycle(std::move(values));
}

long pairing(const Cycle& phi, const Cycle& psi) {
  if (phi.ctx == nullptr || phi.ctx != psi.ctx)
    fail(Errc::ContextMismatch, "cycles belong to different contexts");
  long s = 0;
  for (size_t i = 0; i < phi.values.size(); ++i)
    s += phi.ctx->weight(i) * phi.values[i] * psi.values[i];
  return s;
}

long pole_order_basis(const Cycle& phi) {
  if (phi.ctx == nullptr || phi.is_zero()) fail(Errc::ZeroCycle, "pole order of the zero cycle");
  long g = 0;
  for (const auto& b : phi.ctx->basis()) g = std::gcd(g, std::abs(pairing(phi, b)));
  check(g > 0, "nonzero cycle must pair nontrivially with the basis");
  return g;
}

long pole_order_gcd_route(const ReductionProfile& profile) {
  long q = (long)profile.locals.size() - 1;
  long n = 0;
  bool nonsplit = false;
  for (size_t i = 0; i + 1 < profile.locals.size(); ++i) {
    const LocalReduction& l = profile.locals[i];
    if (l.type == RedType::Good) n = std::gcd(n, l.count);
    if (l.type == RedType::NonSplitMult) nonsplit = true;
  }
  long r = nonsplit ? std::gcd(n, 2 * q + 2) : n;
  if (r <= 0) fail(Errc::ProfileInconsistent, "no positive pole order derivable from the profile");
  return r;
}

// ---- analysis ------------------------------------------------------------

namespace {

// Degree-3 conductor from the linear-place types plus the non-linear part
// of the denominator of j (multiplicative reduction there forces a pole).
ConductorShape infer_conductor(const FieldCtx& F, const ReductionProfile& profile,
                               const RatFunc& j) {
  std::vector<FieldElem> addv, multv;
  for (size_t i = 0; i + 1 < profile.locals.size(); ++i) {
    const LocalReduction& l = profile.locals[i];
    if (l.type == RedType::Additive) addv.push_back(l.place.a);
    if (l.type == RedType::SplitMult || l.type == RedType::NonSplitMult)
      multv.push_back(l.place.a);
  }
  Poly rem = j.den().radical();
  for (auto a : F.elements()) {
    if (rem.evaluate(a).is_zero()) {
      auto dr = rem.divrem(Poly::from_coeffs(F, {-a, F.one()}));
      check(dr.second.is_zero(), "root must divide the radical");
      rem = dr.first;
    }
  }
  int extra = rem.degree();
  auto lin = [&](FieldElem a) { return Poly::from_coeffs(F, {-a, F.one()}); };
  size_t A = addv.size(), M = multv.size();
  if (A == 1 && M == 0 && extra == 0)
    return classify_conductor(lin(addv[0]) * lin(addv[0]) * lin(addv[0]));
  if (A == 1 && M == 1 && extra == 0)
    return classify_conductor(lin(addv[0]) * lin(addv[0]) * lin(multv[0]));
  if (A == 0 && M == 3 && extra == 0)
    return classify_conductor(lin(multv[0]) * lin(multv[1]) * lin(multv[2]));
  if (A == 0 && M == 1 && extra == 2) return classify_conductor(lin(multv[0]) * rem);
  if (A == 0 && M == 0 && extra == 3) return classify_conductor(rem);
  fail(Errc::ProfileInconsistent, "linear place types do not fit a degree-3 conductor");
}

// Strip p-th roots of the coefficients while j is a p-th power; nullopt if
// the model does not cooperate.
std::optional<std::pair<Curve, int>> minimal_model_chain(const Curve& c) {
  Curve cur = c;
  int downs = 0;
  while (true) {
    RatFunc j = invariants(cur).j;
    if (!j.is_pth_power()) return {{cur, downs}};
    auto pre = frobenius_preimage(cur);
    if (!pre) return std::nullopt;
    cur = *pre;
    ++downs;
  }
}

struct StrongHit {
  Curve strong;
  int offset;
  bool via_classmate;
};

}  // namespace

AnalysisReport analyze(const Curve& E, const std::vector<Curve>& classmates) {
  const FieldCtx& F = E.ctx();
  CurveInvariants inv = invariants(E);
  if (inv.j.is_constant())
    fail(Errc::ConstantJInvariant, "analysis needs a nonconstant j-invariant");
  ReductionProfile profile = reduction_profile(E);
  if (!profile.split_at_infinity())
    fail(Errc::NotSplitAtInfinity, "reduction at infinity is not split multiplicative");
  ConductorShape shape = infer_conductor(F, profile, inv.j);
  GraphContext ctx(F, shape, profile);
  Cycle phi = build_cycle(ctx, profile);
  long pole = pole_order_basis(phi);
  check(pole == pole_order_gcd_route(profile), "pole-order routes disagree");
  long sp = pairing(phi, phi);
  if (sp % pole != 0)
    fail(Errc::NonIntegralDegree, "self pairing is not divisible by the pole order");
  long deg = sp / pole;

  long big_n = 0;
  for (size_t i = 0; i + 1 < profile.locals.size(); ++i)
    if (profile.locals[i].type == RedType::Good)
      big_n = std::gcd(big_n, profile.locals[i].count);

  std::vector<int> j_poles;
  for (const auto& v : all_places(F)) {
    int val = *valuation(inv.j, v);
    j_poles.push_back(val < 0 ? -val : 0);
  }

  const int p = F.p();
  std::vector<StrongHit> hits;
  for (size_t idx = 0; idx <= classmates.size(); ++idx) {
    const Curve& cand = idx == 0 ? E : classmates[idx - 1];
    if (idx > 0 && !F.same_field(cand.ctx()))
      fail(Errc::ContextMismatch, "classmate over a different field");
    auto mm = minimal_model_chain(cand);
    if (!mm) continue;
    long m0 = -*valuation(invariants(mm->first).j, Place::infinity());
    if (m0 <= 0 || pole % m0 != 0) continue;
    long r = pole / m0;
    int k = 0;
    while (r % p == 0) {
      r /= p;
      ++k;
    }
    if (r != 1) continue;
    Curve s = mm->first;
    for (int i = 0; i < k; ++i) s = frobenius_image(s);
    s = reduce_linear_powers(s);
    check(-*valuation(invariants(s).j, Place::infinity()) == pole,
          "located strong curve must realize the pole order");
    hits.push_back({s, k, idx > 0});
  }
  if (hits.empty())
    fail(Errc::OffsetNotPowerOfP,
         "pole order is not p^k times the minimal pole on any known Frobenius chain");
  for (size_t i = 1; i < hits.size(); ++i)
    check(same_curve(hits[i].strong, hits[0].strong), "ambiguous strong-curve location");
  size_t pick = 0;
  for (size_t i = 0; i < hits.size(); ++i) {
    if (!hits[i].via_classmate) {
      pick = i;
      break;
    }
  }

  return AnalysisReport{std::move(profile),
                        std::move(shape),
                        std::move(phi.values),
                        std::move(j_poles),
                        big_n,
                        pole,
                        sp,
                        deg,
                        ctx.genus(),
                        is_frobenius_minimal(E),
                        hits[pick].offset,
                        hits[pick].via_classmate,
                        hits[pick].strong};
}

Curve strong_weil_curve(const Curve& E, const std::vector<Curve>& classmates) {
  return analyze(E, classmates).strong_curve;
}

}  // namespace fqt
