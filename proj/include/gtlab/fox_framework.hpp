#pragma once

#include "gtlab/hopf.hpp"

#include <functional>

namespace gtlab {

// A bilinear map rho: A x A -> A with a declared filtration shift. Calling it
// truncates the value to min(a.N, b.N) + shift. The wrapped callable must be
// pure.
struct PairingFn {
  std::function<TSeries(const TSeries&, const TSeries&)> fn;
  int shift = -2;

  TSeries operator()(const TSeries& a, const TSeries& b) const;
};

// A linear map q: T((H)) (x) K[[C]] -> T((H)) together with the Fox pairing
// it is meant to be ruled by.
struct QDerFn {
  std::function<TSeries(const FSeries&)> fn;
  int shift = -2;
  PairingFn ruling;

  TSeries operator()(const FSeries& x) const;
};

// Output truncation degree for an input of degree n under a shift; throws
// DomainError when nothing survives.
int shifted_degree(int n, int shift);

PairingFn zero_pairing();

// (a - eps(a)) e (b - eps(b))
TSeries inner_pairing(const TSeries& e, const TSeries& a, const TSeries& b);
PairingFn rho_inner(const TSeries& e);

// rho^t(a, b) = S rho(S b, S a)
PairingFn pairing_transpose(const PairingFn& rho);
// rho^t(a, b) = a' S(rho(b'', a'')) b'
PairingFn pairing_transpose_sweedler(const PairingFn& rho);

PairingFn operator+(const PairingFn& x, const PairingFn& y);

// <a, b>_rho = b' S(rho(a'', b'')') a' rho(a'', b'')'', projected to the
// cyclic quotient.
CycSeries bracket_rho(const PairingFn& rho, const TSeries& a, const TSeries& b);
// The same element before projection.
TSeries bracket_rho_raw(const PairingFn& rho, const TSeries& a, const TSeries& b);

// eps(a)(e1 + e2) - a e1 - e2 a, with a = fproject(x); ruled by rho_{e1+e2}.
QDerFn q_inner(const TSeries& e1, const TSeries& e2);

// S q S, ruled by the transposed pairing.
QDerFn qd_transpose(const QDerFn& q);

QDerFn operator+(const QDerFn& x, const QDerFn& y);

// d_q(x) = p(x') S(q(x'')') (x) q(x'')''
TSeries2 d_q(const QDerFn& q, const FSeries& x);
// d_q - P21 d_q with both legs in the cyclic quotient.
CycSeries2 delta_q(const QDerFn& q, const FSeries& x);
inline RedCycSeries2 delta_q_reduced(const QDerFn& q, const FSeries& x) { return reduce2(delta_q(q, x)); }

// Closed forms of d and delta for q_inner(e1, e2).
TSeries2 d_inner_closed(const TSeries& e1, const TSeries& e2, const FSeries& x);
CycSeries2 delta_inner_closed(const TSeries& e, const FSeries& x);

// Defects of the two Fox axioms:
//   rho(ab, c) - a rho(b, c) - rho(a, c) eps(b)
//   rho(a, bc) - rho(a, b) c - eps(b) rho(a, c)
std::pair<TSeries, TSeries> fox_axiom_defects(const PairingFn& rho, const TSeries& a, const TSeries& b,
                                              const TSeries& c);

// q(xy) - q(x) b - a q(y) - rho(a, b) with a = p(x), b = p(y).
TSeries qder_defect(const QDerFn& q, const FSeries& x, const FSeries& y);

}  // namespace gtlab
