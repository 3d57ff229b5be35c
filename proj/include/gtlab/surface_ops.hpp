#pragma once

#include "gtlab/expansion.hpp"
#include "gtlab/formal_ops.hpp"

#include <optional>
#include <vector>

namespace gtlab {

// Pullbacks through theta; results are trusted through I-adic degree N - 2.
GAlgTrunc eta_group(const Theta& th, const GWord& a, const GWord& b);
GAlgTrunc eta_group(const Expansion& e, const GWord& a, const GWord& b);

GAlgTrunc mu_group(const Theta& th, const AssocCoeffs& coeffs, const FGWord& w);
GAlgTrunc mu_group(const Expansion& e, const AssocCoeffs& coeffs, const FGWord& w);

// A linear combination of conjugacy classes, keyed by canonical
// representatives.
struct ClassSum {
  GAlg classes;
  int trusted_deg = 0;
  friend bool operator==(const ClassSum&, const ClassSum&) = default;
};

// Sum over eta(a, b) = sum c_g g of c_g |b g^-1 a g|.
ClassSum goldman(const Theta& th, const GWord& a, const GWord& b);
ClassSum goldman(const Expansion& e, const GWord& a, const GWord& b);

// The cyclic image of a class sum under theta.
CycSeries theta_cyclic(const Theta& th, const ClassSum& x);

RedCycSeries2 turaev_cobracket(const Theta& th, const GWord& w);
RedCycSeries2 turaev_cobracket(const Expansion& e, const GWord& w);

struct PairCheck {
  GWord a, b;
  bool equal = true;
  std::optional<int> deviation_deg;  // lowest I-adic degree where they differ
};

struct IndependenceReport {
  int trusted_deg = 0;
  std::vector<PairCheck> pairs;
  bool all_equal() const;
};

IndependenceReport independence_check(const Expansion& e1, const Expansion& e2,
                                      const std::vector<std::pair<GWord, GWord>>& sample);

// eta(a, b) + S(eta(b^-1, a^-1)) + (a - 1)(b - 1)
GAlgTrunc eta_transpose_defect(const Theta& th, const GWord& a, const GWord& b);

// mu(w^-1) + S(mu(w)) + 1 - a^-1, with a the base of w
GAlgTrunc mu_inverse_defect(const Theta& th, const AssocCoeffs& coeffs, const FGWord& w);

// mu(vw) - v mu(w) - mu(v) w - eta(v, w)
GAlgTrunc mu_product_defect(const Theta& th, const AssocCoeffs& coeffs, const FGWord& v, const FGWord& w);

}  // namespace gtlab
