#include "gtlab/surface_ops.hpp"

namespace gtlab {

namespace {

GAlgTrunc ring(const Theta& th, const GWord& w, int k) { return magnus(w, th.p(), k); }

// Lowest degree in which a and b differ, if any.
std::optional<int> first_difference(const GAlgTrunc& a, const GAlgTrunc& b, int k) {
  TSeries d = a.mono.truncated(k) - b.mono.truncated(k);
  if (d.is_zero()) return std::nullopt;
  return d.min_degree();
}

}  // namespace

GAlgTrunc eta_group(const Theta& th, const GWord& a, const GWord& b) {
  PairingFn eta = eta_pairing(th.p(), th.trunc_deg());
  return th.invert(eta(th.eval(a), th.eval(b)));
}

GAlgTrunc eta_group(const Expansion& e, const GWord& a, const GWord& b) { return eta_group(Theta(e), a, b); }

GAlgTrunc mu_group(const Theta& th, const AssocCoeffs& coeffs, const FGWord& w) {
  QDerFn mu = mu_formal(coeffs, th.p(), th.trunc_deg());
  return th.invert(mu(th.eval_framed(w)));
}

GAlgTrunc mu_group(const Expansion& e, const AssocCoeffs& coeffs, const FGWord& w) {
  return mu_group(Theta(e), coeffs, w);
}

ClassSum goldman(const Theta& th, const GWord& a, const GWord& b) {
  GAlgTrunc eta = eta_group(th, a, b);
  ClassSum r;
  r.trusted_deg = eta.trusted_deg();
  GAlg expanded = to_group_ring(eta);
  for (const auto& [g, c] : expanded.terms())
    r.classes.add(conjugacy_canonical(b * g.inverse() * a * g), c);
  return r;
}

ClassSum goldman(const Expansion& e, const GWord& a, const GWord& b) { return goldman(Theta(e), a, b); }

CycSeries theta_cyclic(const Theta& th, const ClassSum& x) {
  CycSeries r(th.p(), std::min(x.trusted_deg, th.trunc_deg()));
  for (const auto& [g, c] : x.classes.terms()) r += c * cyclic_project(th.eval(g).truncated(r.trunc_deg()));
  return r;
}

RedCycSeries2 turaev_cobracket(const Theta& th, const GWord& w) {
  return schedler_reduced(cyclic_project(th.eval(w)));
}

RedCycSeries2 turaev_cobracket(const Expansion& e, const GWord& w) { return turaev_cobracket(Theta(e), w); }

bool IndependenceReport::all_equal() const {
  for (const auto& p : pairs)
    if (!p.equal) return false;
  return true;
}

IndependenceReport independence_check(const Expansion& e1, const Expansion& e2,
                                      const std::vector<std::pair<GWord, GWord>>& sample) {
  if (e1.p != e2.p || e1.trunc_deg != e2.trunc_deg)
    throw MismatchedContext("independence_check: expansions differ in (p, N)");
  Theta t1(e1), t2(e2);
  IndependenceReport rep;
  rep.trusted_deg = e1.trunc_deg - 2;
  for (const auto& [a, b] : sample) {
    PairCheck pc{a, b, true, std::nullopt};
    pc.deviation_deg = first_difference(eta_group(t1, a, b), eta_group(t2, a, b), rep.trusted_deg);
    pc.equal = !pc.deviation_deg;
    rep.pairs.push_back(pc);
  }
  return rep;
}

GAlgTrunc eta_transpose_defect(const Theta& th, const GWord& a, const GWord& b) {
  GAlgTrunc x = eta_group(th, a, b);
  const int k = x.trusted_deg();
  GAlgTrunc one = galg_unit(th.p(), k);
  return x + group_antipode(eta_group(th, b.inverse(), a.inverse())) + (ring(th, a, k) - one) * (ring(th, b, k) - one);
}

GAlgTrunc mu_inverse_defect(const Theta& th, const AssocCoeffs& coeffs, const FGWord& w) {
  GAlgTrunc m = mu_group(th, coeffs, w);
  const int k = m.trusted_deg();
  return mu_group(th, coeffs, w.inverse()) + group_antipode(m) + galg_unit(th.p(), k) - ring(th, w.base.inverse(), k);
}

GAlgTrunc mu_product_defect(const Theta& th, const AssocCoeffs& coeffs, const FGWord& v, const FGWord& w) {
  GAlgTrunc lhs = mu_group(th, coeffs, v * w);
  const int k = lhs.trusted_deg();
  return lhs - ring(th, v.base, k) * mu_group(th, coeffs, w) - mu_group(th, coeffs, v) * ring(th, w.base, k) -
         eta_group(th, v.base, w.base);
}

}  // namespace gtlab
