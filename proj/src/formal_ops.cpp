#include "gtlab/formal_ops.hpp"

#include <algorithm>

namespace gtlab {

namespace {

Word rotation_after(const Word& w, std::size_t i) {
  // w_{i+1} ... w_{i-1}, cyclically, omitting w_i
  Word r(w.begin() + static_cast<long>(i) + 1, w.end());
  r.append(w.begin(), w.begin() + static_cast<long>(i));
  return r;
}

Word slice(const Word& w, std::size_t from, std::size_t to) {
  return from >= to ? Word{} : w.substr(from, to - from);
}

}  // namespace

TSeries odot(const TSeries& a, const TSeries& b) {
  a.check_context(b);
  int n = shifted_degree(std::min(a.trunc_deg(), b.trunc_deg()), -1);
  TSeries r(a.p(), n);
  for (const auto& [wa, ca] : a.terms()) {
    if (wa.empty()) continue;
    for (const auto& [wb, cb] : b.terms()) {
      if (wb.empty()) continue;
      if (degree(wa) + degree(wb) - 1 > n) break;
      if (wa.back() != wb.front()) continue;
      r.accumulate(wa + wb.substr(1), ca * cb);
    }
  }
  r.prune();
  return r;
}

PairingFn odot_pairing() { return PairingFn{odot, -1}; }

TSeries s_of_minus_z(int p, int trunc_deg) {
  return eval_uni(series_s(trunc_deg), -t_sum_letters(p, trunc_deg));
}

PairingFn eta_pairing(int p, int trunc_deg) {
  TSeries s = s_of_minus_z(p, trunc_deg);
  return PairingFn{[s](const TSeries& a, const TSeries& b) { return odot(a, b) + inner_pairing(s, a, b); }, -2};
}

TSeries eta_formal(const TSeries& a, const TSeries& b) {
  return eta_pairing(a.p(), std::min(a.trunc_deg(), b.trunc_deg()))(a, b);
}

TSeries xi(const FSeries& x) {
  int n = shifted_degree(x.trunc_deg(), -1);
  TSeries r(x.p(), n);
  for (const auto& [f, c] : x.terms()) {
    if (f.cpow == 1) {
      r.accumulate(f.word, -2 * c);
    } else if (f.cpow == 0) {
      const Word& w = f.word;
      for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] == w[i + 1]) r.accumulate(slice(w, 0, i + 1) + w.substr(i + 2), c);
    }
  }
  r.prune();
  return r;
}

QDerFn xi_qder() { return QDerFn{xi, -1, odot_pairing()}; }

std::pair<TSeries, TSeries> mu_inner_params(const AssocCoeffs& coeffs, int p, int trunc_deg) {
  UniSeries phi = series_phi(coeffs, trunc_deg);
  TSeries z = t_sum_letters(p, trunc_deg);
  TSeries quarter = Rat(1, 4) * t_unit(p, trunc_deg);
  TSeries e1 = eval_uni(phi, z) - quarter;
  TSeries e2 = -eval_uni(phi.reflected(), z) - quarter;
  return {e1, e2};
}

QDerFn mu_formal(const AssocCoeffs& coeffs, int p, int trunc_deg) {
  auto [e1, e2] = mu_inner_params(coeffs, p, trunc_deg);
  TSeries defect = e1 + e2 - s_of_minus_z(p, trunc_deg);
  if (!defect.is_zero())
    throw InconsistentCoeffs("phi(-X) - phi(X) - 1/2 != s(X): lowest defect in degree " +
                             std::to_string(defect.min_degree()));
  return xi_qder() + q_inner(e1, e2);
}

CycSeries necklace_bracket(const CycSeries& a, const CycSeries& b) {
  a.check_context(b);
  int n = shifted_degree(std::min(a.trunc_deg(), b.trunc_deg()), -1);
  CycSeries r(a.p(), n);
  for (const auto& [ha, ca] : a.terms()) {
    const Word& h = ha.word();
    if (h.empty()) continue;
    for (const auto& [kb, cb] : b.terms()) {
      const Word& k = kb.word();
      if (k.empty()) continue;
      if (degree(h) + degree(k) - 1 > n) break;
      for (std::size_t i = 0; i < h.size(); ++i) {
        Word hr = rotation_after(h, i);
        for (std::size_t j = 0; j < k.size(); ++j) {
          if (h[i] != k[j]) continue;
          Word kr = rotation_after(k, j);
          Word x(1, h[i]);
          Rat c = ca * cb;
          r.accumulate(CycWord(x + kr + hr), c);
          r.accumulate(CycWord(x + hr + kr), -c);
        }
      }
    }
  }
  r.prune();
  return r;
}

namespace {

void schedler_word(const Word& k, const Rat& c, CycSeries2& r) {
  const std::size_t m = k.size();
  auto wedge = [&](const Word& x, const Word& y, const Rat& v) {
    CycWord cx(x), cy(y);
    r.accumulate({cx, cy}, v);
    r.accumulate({cy, cx}, -v);
  };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (k[i] != k[j]) continue;
      Word inner = slice(k, i + 1, j);
      Word head = slice(k, 0, i);
      Word tail = k.substr(j + 1);
      wedge(inner, head + Word(1, k[i]) + tail, c);
      wedge(Word(1, k[j]) + inner, head + tail, -c);
    }
  }
}

}  // namespace

CycSeries2 schedler(const TSeries& a) {
  CycSeries2 r(a.p(), shifted_degree(a.trunc_deg(), -1));
  for (const auto& [w, c] : a.terms()) schedler_word(w, c, r);
  r.prune();
  return r;
}

CycSeries2 schedler(const CycSeries& a) {
  CycSeries2 r(a.p(), shifted_degree(a.trunc_deg(), -1));
  for (const auto& [w, c] : a.terms()) schedler_word(w.word(), c, r);
  r.prune();
  return r;
}

RedCycSeries2 schedler_reduced(const CycSeries& a) { return reduce2(schedler(a)); }

int omega(int x, int y) {
  if (x % 2 == 1 && y == x + 1) return 1;
  if (x % 2 == 0 && y == x - 1) return -1;
  return 0;
}

TSeries omega_pair(const TSeries& a, const TSeries& b) {
  a.check_context(b);
  int n = shifted_degree(std::min(a.trunc_deg(), b.trunc_deg()), -2);
  TSeries r(a.p(), n);
  for (const auto& [wa, ca] : a.terms()) {
    if (wa.empty()) continue;
    for (const auto& [wb, cb] : b.terms()) {
      if (wb.empty()) continue;
      if (degree(wa) + degree(wb) - 2 > n) break;
      int w = omega(wa.back(), wb.front());
      if (w != 0) r.accumulate(wa.substr(0, wa.size() - 1) + wb.substr(1), ca * cb * w);
    }
  }
  r.prune();
  return r;
}

PairingFn omega_pairing() { return PairingFn{omega_pair, -2}; }

TSeries omega_element(int genus, int trunc_deg) {
  TSeries r(2 * genus, trunc_deg);
  for (int i = 1; i <= genus; ++i) {
    Letter a = static_cast<Letter>(letter_a(i)), b = static_cast<Letter>(letter_b(i));
    r.add(Word{a, b}, 1);
    r.add(Word{b, a}, -1);
  }
  return r;
}

PairingFn eta_symplectic(int genus, int trunc_deg) {
  TSeries s = eval_uni(series_s(trunc_deg), omega_element(genus, trunc_deg));
  return PairingFn{[s](const TSeries& a, const TSeries& b) { return omega_pair(a, b) + inner_pairing(s, a, b); }, -2};
}

EmbedResult embed_I(const TSeries& a, int target_deg) {
  if (target_deg < 0) throw DomainError("embed_I: negative target degree");
  EmbedResult res{TSeries(2 * a.p(), std::min(target_deg, 2 * a.trunc_deg() + 1)), false};
  TSeries& r = res.value;
  const int n = r.trunc_deg();
  for (const auto& [w, c] : a.terms()) {
    if (2 * degree(w) > target_deg) res.truncation_loss = true;
    if (2 * degree(w) > n) continue;
    const std::size_t m = w.size();
    Word img(2 * m, 0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      int sign = 1;
      for (std::size_t t = 0; t < m; ++t) {
        Letter x = static_cast<Letter>(letter_a(w[t])), y = static_cast<Letter>(letter_b(w[t]));
        if ((mask >> t) & 1) {
          img[2 * t] = x;  // -a_i b_i
          img[2 * t + 1] = y;
          sign = -sign;
        } else {
          img[2 * t] = y;  // b_i a_i
          img[2 * t + 1] = x;
        }
      }
      r.accumulate(img, c * sign);
    }
  }
  r.prune();
  return res;
}

}  // namespace gtlab
