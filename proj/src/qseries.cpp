#include "gtlab/qseries.hpp"

#include "gtlab/errors.hpp"

#include <algorithm>

namespace gtlab {

UniSeries::UniSeries(int trunc_deg) {
  if (trunc_deg < 0) throw DomainError("negative truncation degree");
  coeffs_.assign(static_cast<std::size_t>(trunc_deg) + 1, Rat(0));
}

UniSeries::UniSeries(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("empty univariate series");
}

UniSeries UniSeries::truncated(int n) const {
  n = std::min(n, trunc_deg());
  return UniSeries(std::vector<Rat>(coeffs_.begin(), coeffs_.begin() + n + 1));
}

UniSeries UniSeries::reflected() const {
  UniSeries r = *this;
  for (int k = 1; k <= trunc_deg(); k += 2) r[k] = -r[k];
  return r;
}

UniSeries operator+(const UniSeries& a, const UniSeries& b) {
  UniSeries r(std::min(a.trunc_deg(), b.trunc_deg()));
  for (int k = 0; k <= r.trunc_deg(); ++k) r[k] = a[k] + b[k];
  return r;
}

UniSeries operator-(const UniSeries& a, const UniSeries& b) {
  UniSeries r(std::min(a.trunc_deg(), b.trunc_deg()));
  for (int k = 0; k <= r.trunc_deg(); ++k) r[k] = a[k] - b[k];
  return r;
}

UniSeries operator*(const UniSeries& a, const UniSeries& b) {
  UniSeries r(std::min(a.trunc_deg(), b.trunc_deg()));
  for (int i = 0; i <= r.trunc_deg(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= r.trunc_deg(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

UniSeries operator*(const Rat& c, const UniSeries& a) {
  UniSeries r = a;
  for (int k = 0; k <= r.trunc_deg(); ++k) r[k] *= c;
  return r;
}

std::vector<Rat> bernoulli_table(int n) {
  if (n < 0) throw DomainError("bernoulli index must be non-negative");
  std::vector<Rat> b(static_cast<std::size_t>(n) + 1);
  b[0] = 1;
  // sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1
  for (int m = 1; m <= n; ++m) {
    Rat acc = 0;
    for (int k = 0; k < m; ++k) acc += binomial(m + 1, k) * b[k];
    b[m] = -acc / Rat(m + 1);
  }
  return b;
}

Rat bernoulli(int n) { return bernoulli_table(n).back(); }

UniSeries series_s(int trunc_deg) {
  UniSeries s(trunc_deg);
  s[0] = make_rat(-1, 2);
  auto b = bernoulli_table(trunc_deg + 1);
  for (int k = 1; 2 * k - 1 <= trunc_deg; ++k) s[2 * k - 1] = -b[2 * k] / factorial(2 * k);
  return s;
}

UniSeries series_exp(const Rat& c, int trunc_deg) {
  UniSeries e(trunc_deg);
  Rat term = 1;
  for (int k = 0; k <= trunc_deg; ++k) {
    e[k] = term;
    term *= c / Rat(k + 1);
  }
  return e;
}

Rat bernoulli_constraint(int j) {
  return -bernoulli(2 * j + 2) / (Rat(2) * factorial(2 * j + 2));
}

Rat AssocCoeffs::resolve(int i) const {
  if (auto it = q.find(i); it != q.end()) return it->second;
  if (even_mode) return i % 2 == 0 ? Rat(0) : bernoulli_constraint((i - 1) / 2);
  throw MissingCoefficient(i);
}

AssocCoeffs AssocCoeffs::bernoulli_valid(int max_index, const Rat& even_value) {
  AssocCoeffs c;
  c.even_mode = even_value == 0;
  for (int i = 2; i <= max_index; ++i) c.q[i] = i % 2 == 0 ? even_value : bernoulli_constraint((i - 1) / 2);
  return c;
}

UniSeries series_phi(const AssocCoeffs& coeffs, int trunc_deg) {
  UniSeries phi(trunc_deg);
  if (trunc_deg >= 1) phi[1] = make_rat(1, 24);
  for (int i = 2; i <= trunc_deg; ++i) phi[i] = -coeffs.resolve(i);
  return phi;
}

UniSeries phi_even(int trunc_deg) {
  UniSeries r = make_rat(1, 2) * series_s(trunc_deg).reflected();
  r[0] += make_rat(1, 4);
  return r;
}

bool CoeffReport::ok() const {
  return std::all_of(entries.begin(), entries.end(), [](const CoeffCheck& e) { return e.pass; });
}

CoeffReport validate_assoc_coeffs(const AssocCoeffs& coeffs, int max_j) {
  CoeffReport report;
  for (int i = 2; i <= 2 * max_j + 1; ++i) {
    CoeffCheck e;
    e.index = i;
    if (auto it = coeffs.q.find(i); it != coeffs.q.end()) e.supplied = it->second;
    if (i % 2 == 0) {
      e.informational = true;
      e.expected = 0;
      // even mode promises vanishing even coefficients
      e.pass = !coeffs.even_mode || !e.supplied || *e.supplied == 0;
    } else {
      e.expected = bernoulli_constraint((i - 1) / 2);
      // in even mode a missing odd entry is derived, not supplied
      e.pass = e.supplied ? *e.supplied == e.expected : coeffs.even_mode;
    }
    report.entries.push_back(e);
  }
  return report;
}

std::vector<Rat> gamma_zeta(const AssocCoeffs& coeffs, const Rat& lambda, int n_max) {
  if (lambda == 0) throw ZeroParameter("gamma_zeta: lambda must be non-zero");
  std::vector<Rat> out;
  for (int n = 2; n <= n_max; ++n) {
    Rat q = n == 2 ? make_rat(-1, 24) : coeffs.resolve(n - 1);
    Rat power = 1;
    for (int k = 0; k < n; ++k) power *= -lambda;
    out.push_back(power * q);
  }
  return out;
}

}  // namespace gtlab
