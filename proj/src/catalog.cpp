#include "fqt/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fqt {

namespace {

void check(bool cond, const char* msg) {
  if (!cond) throw std::logic_error(std::string("internal invariant violated: ") + msg);
}

}  // namespace

const char* param_domain_name(ParamDomain d) {
  switch (d) {
    case ParamDomain::Unit: return "unit";
    case ParamDomain::NonCubeUnit: return "non_cube_unit";
    case ParamDomain::PrimCubeRoot: return "prim_cube_root";
  }
  return "unknown";
}

const char* strong_status_name(StrongStatus s) {
  switch (s) {
    case StrongStatus::NotStrong: return "not_strong";
    case StrongStatus::Strong: return "strong";
    case StrongStatus::StrongClaimed: return "strong_claimed";
    case StrongStatus::Unasserted: return "unasserted";
  }
  return "unknown";
}

namespace {

ParamDomain parse_param_domain(const std::string& s) {
  if (s == "unit") return ParamDomain::Unit;
  if (s == "non_cube_unit") return ParamDomain::NonCubeUnit;
  if (s == "prim_cube_root") return ParamDomain::PrimCubeRoot;
  fail(Errc::SyntaxError, "unknown parameter domain '" + s + "'");
}

StrongStatus parse_strong_status(const std::string& s) {
  if (s == "not_strong") return StrongStatus::NotStrong;
  if (s == "strong") return StrongStatus::Strong;
  if (s == "strong_claimed") return StrongStatus::StrongClaimed;
  if (s == "unasserted") return StrongStatus::Unasserted;
  fail(Errc::SyntaxError, "unknown strong status '" + s + "'");
}

std::vector<CatalogEntry> build_table() {
  using E = Expectation;
  const StrongStatus NS = StrongStatus::NotStrong;
  const StrongStatus ST = StrongStatus::Strong;
  const StrongStatus SC = StrongStatus::StrongClaimed;
  const StrongStatus UN = StrongStatus::Unasserted;
  std::vector<CatalogEntry> t;

  t.push_back({"Thm2.1a", "p==2", {{"c", ParamDomain::Unit}},
               "Y^2+X*Y=X^3+c/T", "T^3",
               {{"inf", 1}}, "T/c", "Thm2.1a",
               {E{"", 4, 2, NS}}});
  t.push_back({"Thm2.1b", "p==3", {{"c", ParamDomain::Unit}},
               "Y^2=X^3+X^2-c/T", "T^3",
               {{"inf", 1}}, "T/c", "Thm2.1b",
               {E{"", 3, 1, NS}}});

  t.push_back({"E1-222*", "p>=5", {},
               "Y^2=X*(X+T)*(X+T^2)", "T^2*(T-1)",
               {{"inf", 2}, {"1", 2}, {"0", 2}},
               "2^8*(T^2-T+1)^3/(T^2*(T-1)^2)", "E1",
               {E{"", 4, 0, NS}}});
  t.push_back({"E1-114*", "p>=5", {},
               "Y^2=X^3-2*T*(T-2)*X^2+T^4*X", "T^2*(T-1)",
               {{"inf", 1}, {"1", 1}, {"0", 4}},
               "-2^4*(T^2-16*T+16)^3/(T^4*(T-1))", "E1",
               {E{"", 4, 0, NS}}});
  t.push_back({"E1-141*", "p>=5", {},
               "Y^2=X^3-2*T*(T+1)*X^2+T^2*(T-1)^2*X", "T^2*(T-1)",
               {{"inf", 1}, {"1", 4}, {"0", 1}},
               "2^4*(T^2+14*T+1)^3/(T*(T-1)^4)", "E1",
               {E{"", 4, 0, NS}}});
  t.push_back({"E1-411*", "p>=5", {},
               "Y^2=X^3+2*T*(2*T-1)*X^2+T^2*X", "T^2*(T-1)",
               {{"inf", 4}, {"1", 1}, {"0", 1}},
               "2^4*(16*T^2-16*T+1)^3/(T*(T-1))", "E1",
               {E{"", 4, 0, ST}}});
  t.push_back({"E2-12", "p>=5", {},
               "Y^2=X^3-2*T^2*X^2+T^3*(T-1)*X", "T^2*(T-1)",
               {{"inf", 1}, {"1", 2}},
               "2^6*(T+3)^3/(T-1)^2", "E2",
               {E{"", 2, 0, NS}}});
  t.push_back({"E2-21", "p>=5", {},
               "Y^2=X^3+4*T^2*X^2+4*T^3*X", "T^2*(T-1)",
               {{"inf", 2}, {"1", 1}},
               "2^6*(4*T-3)^3/(T-1)", "E2",
               {E{"", 2, 0, ST}}});
  t.push_back({"E3-13", "p>=5", {},
               "Y^2=X^3-27*T^3*(T+8)*X+54*T^4*(T^2-20*T-8)", "T^2*(T-1)",
               {{"inf", 1}, {"1", 3}},
               "3^3*T*(T+8)^3/(T-1)^3", "E3",
               {E{"", 3, 0, NS}}});
  t.push_back({"E3-31", "p>=5", {},
               "Y^2=X^3-3*T^3*(9*T-8)*X+2*T^4*(27*T^2-36*T+8)", "T^2*(T-1)",
               {{"inf", 3}, {"1", 1}},
               "3^3*T*(9*T-8)^3/(T-1)", "E3",
               {E{"", 3, 0, ST}}});
  t.push_back({"E4-11", "p>=5", {},
               "Y^2=X^3-27*T^4*X+54*T^5*(T-2)", "T^2*(T-1)",
               {{"inf", 1}, {"1", 1}},
               "2^4*3^3*T^2/(T-1)", "E4",
               {E{"p>=7", 1, 0, ST}, E{"p==5", 5, 1, NS}}});

  // The degree-5 equations reread in characteristic 3; same closed forms,
  // reduced mod 3 at parse time.
  t.push_back({"Rmk2.3-E1-222*", "p==3", {},
               "Y^2=X*(X+T)*(X+T^2)", "T^2*(T-1)",
               {{"inf", 2}, {"1", 2}, {"0", 2}},
               "2^8*(T^2-T+1)^3/(T^2*(T-1)^2)", "E1",
               {E{"", 4, 0, NS}}});
  t.push_back({"Rmk2.3-E1-114*", "p==3", {},
               "Y^2=X^3-2*T*(T-2)*X^2+T^4*X", "T^2*(T-1)",
               {{"inf", 1}, {"1", 1}, {"0", 4}},
               "-2^4*(T^2-16*T+16)^3/(T^4*(T-1))", "E1",
               {E{"", 4, 0, NS}}});
  t.push_back({"Rmk2.3-E1-141*", "p==3", {},
               "Y^2=X^3-2*T*(T+1)*X^2+T^2*(T-1)^2*X", "T^2*(T-1)",
               {{"inf", 1}, {"1", 4}, {"0", 1}},
               "2^4*(T^2+14*T+1)^3/(T*(T-1)^4)", "E1",
               {E{"", 4, 0, NS}}});
  t.push_back({"Rmk2.3-E1-411*", "p==3", {},
               "Y^2=X^3+2*T*(2*T-1)*X^2+T^2*X", "T^2*(T-1)",
               {{"inf", 4}, {"1", 1}, {"0", 1}},
               "2^4*(16*T^2-16*T+1)^3/(T*(T-1))", "E1",
               {E{"", 4, 0, ST}}});
  t.push_back({"Rmk2.3-E2-12", "p==3", {},
               "Y^2=X^3-2*T^2*X^2+T^3*(T-1)*X", "T^2*(T-1)",
               {{"inf", 1}, {"1", 2}},
               "2^6*(T+3)^3/(T-1)^2", "E2",
               {E{"", 6, 1, NS}}});
  t.push_back({"Rmk2.3-E2-21", "p==3", {},
               "Y^2=X^3+4*T^2*X^2+4*T^3*X", "T^2*(T-1)",
               {{"inf", 2}, {"1", 1}},
               "2^6*(4*T-3)^3/(T-1)", "E2",
               {E{"", 6, 1, NS}}});

  t.push_back({"Thm2.4a-13", "p==2", {},
               "Y^2+X*Y=X^3+(1/T)*X^2+(T-1)^3/T^4", "T^2*(T-1)",
               {{"inf", 1}, {"1", 3}},
               "T^4/(T-1)^3", "E3",
               {E{"", 6, 1, NS}}});
  t.push_back({"Thm2.4a-31", "p==2", {},
               "Y^2+X*Y=X^3+(1/T)*X^2+(T-1)/T^4", "T^2*(T-1)",
               {{"inf", 3}, {"1", 1}},
               "T^4/(T-1)", "E3",
               {E{"", 6, 1, NS}}});
  t.push_back({"Thm2.4a-strong", "p==2", {},
               "Y^2+X*Y=X^3+(1/T^2)*X^2+(T-1)^2/T^8", "T^2*(T-1)",
               {{"inf", 6}, {"1", 2}},
               "T^8/(T-1)^2", "E3",
               {E{"", 6, 1, ST}}});

  t.push_back({"Thm2.4b-strong2", "p==3", {},
               "Y^2=X^3+T^2*X^2+T*X", "T^2*(T-1)",
               {{"inf", 6}, {"1", 3}},
               "T^9/(T-1)^3", "E2",
               {E{"", 6, 1, ST}}});

  t.push_back({"Thm2.4c-E4-char5", "p==5", {},
               "Y^2=X^3+3*T^4*X-T*(T-2)^5", "T^2*(T-1)",
               {{"inf", 5}, {"1", 5}},
               "2*T^10/(T-1)^5", "E4",
               {E{"", 5, 1, ST}}});

  t.push_back({"Ex2.5", "q%3==1&&p>=5", {{"c", ParamDomain::NonCubeUnit}},
               "Y^2=X^3-3*T*(T^3+8*c)*X-2*(T^6-20*c*T^3-8*c^2)", "T^3-c",
               {{"inf", 3}},
               "27*T^3*(T^3+8*c)^3/(c*(T^3-c)^3)", "Ex2.5",
               {E{"", 3, 0, UN}}});

  t.push_back({"Ex3.1-3333", "q==4^m", {},
               "Y^2+T*X*Y+Y=X^3+T^3+1", "T^3-1",
               {{"inf", 3}, {"1", 3}, {"s", 3}, {"s^2", 3}},
               "T^12/(T^3+1)^3", "Ex3.1-A",
               {E{"", 9, 0, NS}}});
  t.push_back({"Ex3.1-9111", "q==4^m", {},
               "Y^2+T*X*Y+Y=X^3", "T^3-1",
               {{"inf", 9}, {"1", 1}, {"s", 1}, {"s^2", 1}},
               "T^12/(T^3+1)", "Ex3.1-A",
               {E{"", 9, 0, ST}}});
  t.push_back({"Ex3.1-5511", "q==4^m", {},
               "Y^2+T*X*Y+Y=X^3+X^2+T", "T^3-1",
               {{"inf", 5}, {"1", 5}, {"s", 1}, {"s^2", 1}},
               "T^12/((T^3+1)*(T+1)^4)", "Ex3.1-B",
               {E{"", 5, 0, SC}}});
  t.push_back({"Ex3.1-5115", "q==4^m", {{"s", ParamDomain::PrimCubeRoot}},
               "Y^2+s*T*X*Y+Y=X^3+X^2+s*T", "T^3-1",
               {{"inf", 5}, {"1", 1}, {"s", 1}, {"s^2", 5}},
               "s^2*T^12/((T^3+1)*(T+s^2)^4)", "Ex3.1-C",
               {E{"", 5, 0, SC}}});
  t.push_back({"Ex3.1-5151", "q==4^m", {{"s", ParamDomain::PrimCubeRoot}},
               "Y^2+s^2*T*X*Y+Y=X^3+X^2+s^2*T", "T^3-1",
               {{"inf", 5}, {"1", 1}, {"s", 5}, {"s^2", 1}},
               "s*T^12/((T^3+1)*(T+s)^4)", "Ex3.1-D",
               {E{"", 5, 0, SC}}});

  return t;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> table = build_table();
  return table;
}

const CatalogEntry& catalog_entry(const std::string& id) {
  for (const auto& e : catalog())
    if (e.id == id) return e;
  fail(Errc::UnknownEntry, "no catalog entry named '" + id + "'");
}

// ---- constraints and parameters -----------------------------------------

bool constraint_holds(const std::string& expr, const FieldCtx& F) {
  if (expr.empty()) return true;
  size_t pos = 0;
  while (pos <= expr.size()) {
    size_t amp = expr.find("&&", pos);
    std::string atom = expr.substr(pos, amp == std::string::npos ? amp : amp - pos);
    bool ok;
    if (atom == "q==4^m") {
      ok = F.p() == 2 && F.e() % 2 == 0;
    } else if (atom.rfind("p==", 0) == 0) {
      ok = F.p() == std::stoi(atom.substr(3));
    } else if (atom.rfind("p>=", 0) == 0) {
      ok = F.p() >= std::stoi(atom.substr(3));
    } else if (atom.rfind("q%", 0) == 0) {
      size_t eq = atom.find("==");
      if (eq == std::string::npos) fail(Errc::SyntaxError, "bad constraint atom '" + atom + "'");
      int m = std::stoi(atom.substr(2, eq - 2));
      int r = std::stoi(atom.substr(eq + 2));
      ok = F.q() % m == r;
    } else {
      fail(Errc::SyntaxError, "bad constraint atom '" + atom + "'");
    }
    if (!ok) return false;
    if (amp == std::string::npos) break;
    pos = amp + 2;
  }
  return true;
}

namespace {

bool is_cube(const FieldCtx& F, FieldElem x) {
  for (auto y : F.elements())
    if (y * y * y == x) return true;
  return false;
}

bool in_domain(const FieldCtx& F, ParamDomain d, FieldElem x) {
  switch (d) {
    case ParamDomain::Unit:
      return !x.is_zero();
    case ParamDomain::NonCubeUnit:
      return !x.is_zero() && !is_cube(F, x);
    case ParamDomain::PrimCubeRoot:
      return !(x == F.one()) && (x * x + x + F.one()).is_zero();
  }
  return false;
}

// Canonical primitive cube root of unity, if the field has one.
std::optional<FieldElem> canonical_cube_root(const FieldCtx& F) {
  for (auto x : F.elements())
    if (in_domain(F, ParamDomain::PrimCubeRoot, x)) return x;
  return std::nullopt;
}

// Instantiation bindings plus an implicit s when the entry's expected data
// mentions the cube roots of unity without binding them.
Bindings augmented_bindings(const FieldCtx& F, const Bindings& b) {
  Bindings out = b;
  if (!out.count("s")) {
    if (auto s = canonical_cube_root(F)) out.emplace("s", *s);
  }
  return out;
}

}  // namespace

std::vector<Bindings> admissible_params(const CatalogEntry& e, const FieldCtx& F) {
  if (!constraint_holds(e.q_constraint, F)) return {};
  std::vector<Bindings> out{Bindings{}};
  for (const auto& p : e.params) {
    std::vector<Bindings> next;
    for (auto x : F.elements()) {
      if (!in_domain(F, p.domain, x)) continue;
      for (const auto& b : out) {
        Bindings nb = b;
        nb.emplace(p.name, x);
        next.push_back(std::move(nb));
      }
    }
    out = std::move(next);
  }
  return out;
}

Curve instantiate(const CatalogEntry& e, const FieldCtx& F, const Bindings& b) {
  if (!constraint_holds(e.q_constraint, F))
    fail(Errc::ConstraintViolated,
         e.id + " requires " + e.q_constraint + ", not satisfied by q=" + std::to_string(F.q()));
  for (const auto& p : e.params) {
    auto it = b.find(p.name);
    if (it == b.end())
      fail(Errc::ConstraintViolated, e.id + " needs a value for parameter '" + p.name + "'");
    if (!in_domain(F, p.domain, it->second))
      fail(Errc::ConstraintViolated, "parameter '" + p.name + "' = " + F.display(it->second) +
                                         " is not a " + param_domain_name(p.domain));
  }
  Curve E = Curve::from_parsed(parse_curve(F, e.equation, augmented_bindings(F, b)));
  invariants(E);  // SingularCurve would flag a broken entry
  return E;
}

std::vector<Curve> classmates_for(const CatalogEntry& e, const FieldCtx& F, const Bindings& b) {
  std::vector<Curve> out;
  for (const auto& o : catalog()) {
    if (o.id == e.id || o.isogeny_class != e.isogeny_class) continue;
    if (!constraint_holds(o.q_constraint, F)) continue;
    Bindings ob;
    bool ok = true;
    for (const auto& p : o.params) {
      auto it = b.find(p.name);
      if (it == b.end()) {
        ok = false;
        break;
      }
      ob.emplace(p.name, it->second);
    }
    if (ok) out.push_back(instantiate(o, F, ob));
  }
  return out;
}

std::optional<std::pair<const CatalogEntry*, Bindings>> match_curve(const Curve& E) {
  const FieldCtx& F = E.ctx();
  RatFunc j = invariants(E).j;
  for (const auto& e : catalog()) {
    for (const auto& b : admissible_params(e, F)) {
      Curve C = instantiate(e, F, b);
      if (!(invariants(C).j == j)) continue;
      if (same_curve(C, E)) return {{&e, b}};
    }
  }
  return std::nullopt;
}

// ---- verification --------------------------------------------------------

bool EntryReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const EntryCheck& c) { return c.pass; });
}

namespace {

std::string render_poles(const std::vector<std::pair<std::string, int>>& poles) {
  std::ostringstream os;
  for (size_t i = 0; i < poles.size(); ++i)
    os << (i ? " " : "") << poles[i].first << ":" << poles[i].second;
  return os.str();
}

const Expectation* effective_expectation(const CatalogEntry& e, const FieldCtx& F) {
  for (const auto& x : e.expected)
    if (constraint_holds(x.when, F)) return &x;
  return nullptr;
}

}  // namespace

EntryReport verify_entry(const CatalogEntry& e, const FieldCtx& F, const Bindings& b) {
  Curve E = instantiate(e, F, b);
  AnalysisReport rep = analyze(E, classmates_for(e, F, b));
  Bindings ab = augmented_bindings(F, b);
  EntryReport out{e.id, F.q(), b, {}, {}};

  Poly want_n = parse_poly(F, e.conductor, ab).monic();
  out.checks.push_back({"conductor", want_n == rep.conductor.finite_part, want_n.to_string(),
                        rep.conductor.finite_part.to_string()});

  if (!e.j_poles.empty()) {
    auto places = all_places(F);
    std::vector<int> want(places.size(), 0);
    for (const auto& [expr, ord] : e.j_poles) {
      size_t idx = places.size() - 1;
      if (expr != "inf") {
        FieldElem a = parse_constant(F, expr, ab);
        while (idx > 0 && !(places[idx - 1].a == a && !places[idx - 1].infinite)) --idx;
        check(idx > 0, "pole place must be a place of P^1");
        --idx;
      }
      want[idx] = ord;
    }
    std::vector<std::pair<std::string, int>> got;
    for (size_t i = 0; i < places.size(); ++i)
      if (rep.j_poles[i] != 0) got.push_back({places[i].label(), rep.j_poles[i]});
    std::vector<std::pair<std::string, int>> wanted;
    for (size_t i = 0; i < places.size(); ++i)
      if (want[i] != 0) wanted.push_back({places[i].label(), want[i]});
    bool ok = true;
    for (size_t i = 0; i < places.size(); ++i) ok = ok && want[i] == rep.j_poles[i];
    out.checks.push_back({"j_poles", ok, render_poles(wanted), render_poles(got)});
  }

  if (!e.expected_j.empty()) {
    RatFunc want_j = parse_ratfunc(F, e.expected_j, ab);
    RatFunc got_j = invariants(E).j;
    out.checks.push_back({"j", want_j == got_j, want_j.to_string(), got_j.to_string()});
  }

  if (const Expectation* x = effective_expectation(e, F)) {
    if (x->pole_order != 0)
      out.checks.push_back({"pole_order", x->pole_order == rep.pole_order,
                            std::to_string(x->pole_order), std::to_string(rep.pole_order)});
    if (x->frobenius_offset >= 0)
      out.checks.push_back({"frobenius_offset", x->frobenius_offset == rep.frobenius_offset,
                            std::to_string(x->frobenius_offset),
                            std::to_string(rep.frobenius_offset)});
    bool is_strong = same_curve(rep.strong_curve, E);
    switch (x->strong) {
      case StrongStatus::Strong:
        out.checks.push_back(
            {"strong", is_strong, "this equation", rep.strong_curve.to_string()});
        break;
      case StrongStatus::NotStrong:
        out.checks.push_back(
            {"strong", !is_strong, "a different curve", rep.strong_curve.to_string()});
        break;
      case StrongStatus::StrongClaimed:
        if (is_strong)
          out.checks.push_back({"strong", true, "this equation (claimed)", "confirmed"});
        else
          out.findings.push_back("claimed strong Weil equation differs from the computed one: " +
                                 rep.strong_curve.to_string());
        break;
      case StrongStatus::Unasserted:
        break;
    }
  }
  return out;
}

bool isogeny_class_consistency(const std::string& class_label, const FieldCtx& F) {
  std::vector<Curve> curves;
  for (const auto& e : catalog()) {
    if (e.isogeny_class != class_label || !e.params.empty()) continue;
    if (!constraint_holds(e.q_constraint, F)) continue;
    curves.push_back(instantiate(e, F, {}));
  }
  if (curves.size() < 2) return true;

  std::vector<ReductionProfile> profiles;
  std::vector<long> poles;
  for (const auto& c : curves) {
    profiles.push_back(reduction_profile(c));
    poles.push_back(-*valuation(invariants(c).j, Place::infinity()));
  }
  auto collapse = [](RedType t) {
    return t == RedType::NonSplitMult ? RedType::SplitMult : t;
  };
  for (size_t i = 1; i < profiles.size(); ++i) {
    for (size_t k = 0; k < profiles[0].locals.size(); ++k) {
      const LocalReduction &a = profiles[0].locals[k], &b = profiles[i].locals[k];
      if (collapse(a.type) != collapse(b.type)) return false;
      if (a.type == RedType::Good && a.count != b.count) return false;
    }
  }
  auto strip = [&](long n) {
    for (long f : {2L, 3L, (long)F.p()})
      while (n % f == 0) n /= f;
    return n;
  };
  for (size_t i = 0; i < poles.size(); ++i)
    for (size_t k = i + 1; k < poles.size(); ++k) {
      long g = std::gcd(poles[i], poles[k]);
      if (strip(poles[i] / g) != 1 || strip(poles[k] / g) != 1) return false;
    }
  return true;
}

// ---- serialization -------------------------------------------------------

nlohmann::ordered_json catalog_to_json() {
  nlohmann::ordered_json root;
  root["schema_version"] = "1";
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto& e : catalog()) {
    nlohmann::ordered_json je;
    je["id"] = e.id;
    je["constraint"] = e.q_constraint;
    nlohmann::ordered_json params = nlohmann::ordered_json::array();
    for (const auto& p : e.params)
      params.push_back({{"name", p.name}, {"domain", param_domain_name(p.domain)}});
    je["params"] = params;
    je["equation"] = e.equation;
    je["conductor"] = e.conductor;
    nlohmann::ordered_json poles = nlohmann::ordered_json::array();
    for (const auto& [pl, ord] : e.j_poles) poles.push_back({pl, ord});
    je["j_poles"] = poles;
    je["expected_j"] = e.expected_j;
    je["class"] = e.isogeny_class;
    nlohmann::ordered_json exp = nlohmann::ordered_json::array();
    for (const auto& x : e.expected)
      exp.push_back({{"when", x.when},
                     {"pole_order", x.pole_order},
                     {"frobenius_offset", x.frobenius_offset},
                     {"strong", strong_status_name(x.strong)}});
    je["expected"] = exp;
    entries.push_back(je);
  }
  root["entries"] = entries;
  return root;
}

std::vector<CatalogEntry> catalog_from_json(const nlohmann::ordered_json& j) {
  if (j.at("schema_version").get<std::string>() != "1")
    fail(Errc::SyntaxError, "unsupported catalog schema version");
  std::vector<CatalogEntry> out;
  for (const auto& je : j.at("entries")) {
    CatalogEntry e;
    e.id = je.at("id").get<std::string>();
    e.q_constraint = je.at("constraint").get<std::string>();
    for (const auto& p : je.at("params"))
      e.params.push_back(
          {p.at("name").get<std::string>(), parse_param_domain(p.at("domain").get<std::string>())});
    e.equation = je.at("equation").get<std::string>();
    e.conductor = je.at("conductor").get<std::string>();
    for (const auto& pl : je.at("j_poles"))
      e.j_poles.push_back({pl.at(0).get<std::string>(), pl.at(1).get<int>()});
    e.expected_j = je.at("expected_j").get<std::string>();
    e.isogeny_class = je.at("class").get<std::string>();
    for (const auto& x : je.at("expected"))
      e.expected.push_back({x.at("when").get<std::string>(), x.at("pole_order").get<long>(),
                            x.at("frobenius_offset").get<int>(),
                            parse_strong_status(x.at("strong").get<std::string>())});
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace fqt
