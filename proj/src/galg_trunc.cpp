#include "gtlab/galg_trunc.hpp"

#include "gtlab/hopf.hpp"

#include <cstdlib>

namespace gtlab {

namespace {

// (1 + x_i)^e truncated; generalized binomial coefficients for e < 0.
TSeries power_of_generator(int p, int k, int i, int e) {
  TSeries r(p, k);
  Rat c = 1;
  for (int m = 0; m <= k; ++m) {
    if (c == 0) break;
    r.add(Word(static_cast<std::size_t>(m), static_cast<Letter>(i)), c);
    c = c * (e - m) / (m + 1);
  }
  return r;
}

}  // namespace

GAlgTrunc galg_unit(int p, int trusted_deg) { return GAlgTrunc(t_unit(p, trusted_deg)); }

GAlgTrunc magnus(const GWord& w, int p, int trusted_deg) {
  TSeries r = t_unit(p, trusted_deg);
  for (const auto& s : w.syllables()) {
    if (s.symbol < 1 || s.symbol > p) throw DomainError("magnus: generator outside 1.." + std::to_string(p));
    r = r * power_of_generator(p, trusted_deg, s.symbol, s.exponent);
  }
  return GAlgTrunc(r);
}

GAlgTrunc magnus(const GAlg& x, int p, int trusted_deg) {
  GAlgTrunc r(p, trusted_deg);
  for (const auto& [w, c] : x.terms()) r = r + c * magnus(w, p, trusted_deg);
  return r;
}

Rat augment(const GAlgTrunc& x) { return x.mono.coeff(Word{}); }

GAlgTrunc group_antipode(const GAlgTrunc& x) {
  const int p = x.p(), k = x.trusted_deg();
  // x_i -> zeta_i^{-1} - 1
  std::vector<TSeries> img;
  for (int i = 1; i <= p; ++i) img.push_back(power_of_generator(p, k, i, -1) - t_unit(p, k));
  TSeries r(p, k);
  for (const auto& [w, c] : x.mono.terms()) {
    TSeries t = t_unit(p, k);
    for (auto it = w.rbegin(); it != w.rend(); ++it) t = t * img[static_cast<std::size_t>(*it - 1)];
    r += c * t;
  }
  return GAlgTrunc(r);
}

GAlg to_group_ring(const GAlgTrunc& x) {
  GAlg r;
  for (const auto& [w, c] : x.mono.terms()) {
    const std::size_t m = w.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      // chosen positions contribute zeta_i, the rest -1
      std::vector<Syllable> s;
      int sign = 1;
      for (std::size_t t = 0; t < m; ++t) {
        if ((mask >> t) & 1)
          s.push_back({w[t], 1});
        else
          sign = -sign;
      }
      r.add(GWord(s), c * sign);
    }
  }
  return r;
}

bool equal_through(const GAlgTrunc& a, const GAlgTrunc& b, int k) { return equal_through(a.mono, b.mono, k); }

}  // namespace gtlab
