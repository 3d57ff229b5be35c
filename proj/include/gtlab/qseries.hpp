#pragma once

#include "gtlab/rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace gtlab {

// Truncated univariate power series c_0 + c_1 X + ... + c_N X^N.
class UniSeries {
 public:
  explicit UniSeries(int trunc_deg);
  explicit UniSeries(std::vector<Rat> coeffs);

  int trunc_deg() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  const Rat& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  Rat& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }

  UniSeries truncated(int n) const;
  // X -> -X
  UniSeries reflected() const;

  friend UniSeries operator+(const UniSeries& a, const UniSeries& b);
  friend UniSeries operator-(const UniSeries& a, const UniSeries& b);
  friend UniSeries operator*(const UniSeries& a, const UniSeries& b);
  friend UniSeries operator*(const Rat& c, const UniSeries& a);
  friend bool operator==(const UniSeries& a, const UniSeries& b) = default;

 private:
  std::vector<Rat> coeffs_;
};

// Bernoulli number with the convention B_1 = -1/2.
Rat bernoulli(int n);

// All of B_0..B_n in one pass.
std::vector<Rat> bernoulli_table(int n);

// s(X) = 1/X + 1/(e^{-X} - 1) = -1/2 - sum_{k>=1} B_{2k}/(2k)! X^{2k-1}.
UniSeries series_s(int trunc_deg);

// exp(c X) truncated.
UniSeries series_exp(const Rat& c, int trunc_deg);

// Coefficients q_i (i >= 2) of the b-linear part of log(Phi).
struct AssocCoeffs {
  std::map<int, Rat> q;
  bool even_mode = false;

  int max_index() const { return q.empty() ? 1 : q.rbegin()->first; }

  // Supplied value, or in even mode the value forced by parity and the
  // Bernoulli constraint. Throws MissingCoefficient otherwise.
  Rat resolve(int i) const;

  // Bernoulli-valid coefficients through max_index; even entries set to
  // even_value (zero gives an even associator).
  static AssocCoeffs bernoulli_valid(int max_index, const Rat& even_value = 0);
};

// The value of q_{2j+1} forced by -B_{2j+2} / (2 (2j+2)!).
Rat bernoulli_constraint(int j);

// phi(X) = X/24 - sum_{i>=2} q_i X^i.
UniSeries series_phi(const AssocCoeffs& coeffs, int trunc_deg);

// 1/4 + s(-X)/2.
UniSeries phi_even(int trunc_deg);

struct CoeffCheck {
  int index = 0;
  Rat expected;            // meaningful for odd indices only
  std::optional<Rat> supplied;
  bool pass = false;
  bool informational = false;  // even indices carry no constraint
};

struct CoeffReport {
  std::vector<CoeffCheck> entries;
  bool ok() const;
};

CoeffReport validate_assoc_coeffs(const AssocCoeffs& coeffs, int max_j);

// zeta_Psi(n) for 2 <= n <= n_max from zeta_Psi(n+1) = (-lambda)^{n+1} q_n,
// with q_1 := -1/24 (the linear coefficient of -phi).
std::vector<Rat> gamma_zeta(const AssocCoeffs& coeffs, const Rat& lambda, int n_max);

}  // namespace gtlab
