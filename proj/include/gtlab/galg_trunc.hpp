#pragma once

#include "gtlab/fox_group.hpp"
#include "gtlab/series.hpp"

namespace gtlab {

// A group-ring element modulo I^{k+1}, written in the monomials
// (zeta_{i_1} - 1) ... (zeta_{i_m} - 1), m <= k. The word i_1..i_m of a
// monomial is stored in a TSeries over the letters x_i = zeta_i - 1, so the
// truncation degree of that series is the trusted I-adic degree k.
struct GAlgTrunc {
  TSeries mono;

  GAlgTrunc() = default;
  explicit GAlgTrunc(TSeries m) : mono(std::move(m)) {}
  GAlgTrunc(int p, int trusted_deg) : mono(p, trusted_deg) {}

  int p() const { return mono.p(); }
  int trusted_deg() const { return mono.trunc_deg(); }
  bool is_zero() const { return mono.is_zero(); }
  GAlgTrunc truncated(int k) const { return GAlgTrunc(mono.truncated(k)); }

  friend GAlgTrunc operator+(const GAlgTrunc& a, const GAlgTrunc& b) { return GAlgTrunc(a.mono + b.mono); }
  friend GAlgTrunc operator-(const GAlgTrunc& a, const GAlgTrunc& b) { return GAlgTrunc(a.mono - b.mono); }
  friend GAlgTrunc operator-(const GAlgTrunc& a) { return GAlgTrunc(-a.mono); }
  friend GAlgTrunc operator*(const GAlgTrunc& a, const GAlgTrunc& b) { return GAlgTrunc(a.mono * b.mono); }
  friend GAlgTrunc operator*(const Rat& c, const GAlgTrunc& a) { return GAlgTrunc(c * a.mono); }
  friend bool operator==(const GAlgTrunc&, const GAlgTrunc&) = default;
};

// Expansion of group elements in the (zeta - 1)-monomials.
GAlgTrunc magnus(const GWord& w, int p, int trusted_deg);
GAlgTrunc magnus(const GAlg& x, int p, int trusted_deg);
GAlgTrunc galg_unit(int p, int trusted_deg);

Rat augment(const GAlgTrunc& x);

// The antipode g -> g^{-1}, extended linearly.
GAlgTrunc group_antipode(const GAlgTrunc& x);

// Each monomial expanded into signed group elements.
GAlg to_group_ring(const GAlgTrunc& x);

// True iff a and b agree modulo I^{k+1}.
bool equal_through(const GAlgTrunc& a, const GAlgTrunc& b, int k);

}  // namespace gtlab
