#include "gtlab/fox_framework.hpp"

#include <algorithm>

namespace gtlab {

namespace {

TSeries monomial(int p, int n, const Word& w) {
  TSeries m(p, n);
  m.add(w, 1);
  return m;
}

TSeries minus_counit(const TSeries& a) {
  TSeries r = a;
  r.add(Word{}, -counit(a));
  return r;
}

// rho on single words, cached for the duration of one outer computation.
class PairingMemo {
 public:
  PairingMemo(const PairingFn& rho, int p, int n) : rho_(rho), p_(p), n_(n) {}
  const TSeries& get(const Word& x, const Word& y) {
    auto key = std::make_pair(x, y);
    auto it = memo_.find(key);
    if (it == memo_.end()) it = memo_.emplace(key, rho_(monomial(p_, n_, x), monomial(p_, n_, y))).first;
    return it->second;
  }

 private:
  const PairingFn& rho_;
  int p_, n_;
  std::map<WordPair, TSeries, KeyLess> memo_;
};

}  // namespace

int shifted_degree(int n, int shift) {
  if (n + shift < 0)
    throw DomainError("truncation degree " + std::to_string(n) + " too small for an operation of degree shift " +
                      std::to_string(shift));
  return n + shift;
}

TSeries PairingFn::operator()(const TSeries& a, const TSeries& b) const {
  a.check_context(b);
  int n = shifted_degree(std::min(a.trunc_deg(), b.trunc_deg()), shift);
  return fn(a, b).truncated(n);
}

TSeries QDerFn::operator()(const FSeries& x) const {
  int n = shifted_degree(x.trunc_deg(), shift);
  return fn(x).truncated(n);
}

PairingFn zero_pairing() {
  return PairingFn{[](const TSeries& a, const TSeries& b) {
                     return TSeries(a.p(), std::min(a.trunc_deg(), b.trunc_deg()));
                   },
                   -2};
}

TSeries inner_pairing(const TSeries& e, const TSeries& a, const TSeries& b) {
  return minus_counit(a) * e * minus_counit(b);
}

PairingFn rho_inner(const TSeries& e) {
  return PairingFn{[e](const TSeries& a, const TSeries& b) { return inner_pairing(e, a, b); }, -2};
}

PairingFn pairing_transpose(const PairingFn& rho) {
  return PairingFn{[rho](const TSeries& a, const TSeries& b) { return antipode(rho(antipode(b), antipode(a))); },
                   rho.shift};
}

PairingFn pairing_transpose_sweedler(const PairingFn& rho) {
  return PairingFn{[rho](const TSeries& a, const TSeries& b) {
                     int n = std::min(a.trunc_deg(), b.trunc_deg());
                     int out_n = shifted_degree(n, rho.shift);
                     PairingMemo memo(rho, a.p(), n);
                     TSeries r(a.p(), out_n);
                     for (const auto& [wa, ca] : a.terms()) {
                       if (degree(wa) > n) break;
                       for_each_split(wa, [&](const Word& a1, const Word& a2) {
                         for (const auto& [wb, cb] : b.terms()) {
                           if (degree(wb) > n) break;
                           for_each_split(wb, [&](const Word& b1, const Word& b2) {
                             int outer = degree(a1) + degree(b1);
                             if (outer > out_n) return;
                             for (const auto& [w, c] : memo.get(b2, a2).terms()) {
                               if (outer + degree(w) > out_n) break;
                               auto [sign, sw] = antipode_word(w);
                               r.accumulate(a1 + sw + b1, ca * cb * c * sign);
                             }
                           });
                         }
                       });
                     }
                     r.prune();
                     return r;
                   },
                   rho.shift};
}

PairingFn operator+(const PairingFn& x, const PairingFn& y) {
  return PairingFn{[x, y](const TSeries& a, const TSeries& b) { return x(a, b) + y(a, b); }, std::min(x.shift, y.shift)};
}

TSeries bracket_rho_raw(const PairingFn& rho, const TSeries& a, const TSeries& b) {
  a.check_context(b);
  int n = std::min(a.trunc_deg(), b.trunc_deg());
  int out_n = shifted_degree(n, rho.shift);
  PairingMemo memo(rho, a.p(), n);
  TSeries r(a.p(), out_n);
  for (const auto& [wa, ca] : a.terms()) {
    if (degree(wa) > n) break;
    for_each_split(wa, [&](const Word& a1, const Word& a2) {
      for (const auto& [wb, cb] : b.terms()) {
        if (degree(wb) > n) break;
        for_each_split(wb, [&](const Word& b1, const Word& b2) {
          int outer = degree(a1) + degree(b1);
          if (outer > out_n) return;
          for (const auto& [w, c] : memo.get(a2, b2).terms()) {
            if (outer + degree(w) > out_n) break;
            for_each_split(w, [&](const Word& r1, const Word& r2) {
              auto [sign, sr1] = antipode_word(r1);
              r.accumulate(b1 + sr1 + a1 + r2, ca * cb * c * sign);
            });
          }
        });
      }
    });
  }
  r.prune();
  return r;
}

CycSeries bracket_rho(const PairingFn& rho, const TSeries& a, const TSeries& b) {
  return cyclic_project(bracket_rho_raw(rho, a, b));
}

QDerFn q_inner(const TSeries& e1, const TSeries& e2) {
  return QDerFn{[e1, e2](const FSeries& x) {
                  TSeries a = fproject(x);
                  return counit(a) * (e1 + e2) - a * e1 - e2 * a;
                },
                -2, rho_inner(e1 + e2)};
}

QDerFn qd_transpose(const QDerFn& q) {
  return QDerFn{[q](const FSeries& x) { return antipode(q(antipode(x))); }, q.shift, pairing_transpose(q.ruling)};
}

QDerFn operator+(const QDerFn& x, const QDerFn& y) {
  return QDerFn{[x, y](const FSeries& a) { return x(a) + y(a); }, std::min(x.shift, y.shift), x.ruling + y.ruling};
}

TSeries2 d_q(const QDerFn& q, const FSeries& x) {
  const int p = x.p();
  const int n = x.trunc_deg();
  const int out_n = shifted_degree(n, q.shift);
  std::map<FWord, TSeries, KeyLess> memo;
  TSeries2 r(p, out_n);
  for (const auto& [f, c] : x.terms()) {
    // p kills any C on the left leg, so the whole C-power goes right.
    for_each_split(f.word, [&](const Word& l, const Word& rest) {
      if (degree(l) > out_n) return;
      FWord key{rest, f.cpow};
      auto it = memo.find(key);
      if (it == memo.end()) {
        FSeries m(p, n);
        m.add(key, 1);
        it = memo.emplace(key, q(m)).first;
      }
      for (const auto& [w, cw] : it->second.terms()) {
        if (degree(l) + degree(w) > out_n) break;
        for_each_split(w, [&](const Word& w1, const Word& w2) {
          auto [sign, sw1] = antipode_word(w1);
          r.accumulate({l + sw1, w2}, c * cw * sign);
        });
      }
    });
  }
  r.prune();
  return r;
}

CycSeries2 delta_q(const QDerFn& q, const FSeries& x) {
  TSeries2 d = d_q(q, x);
  return cyclic_project2(d - swap_legs(d));
}

TSeries2 d_inner_closed(const TSeries& e1, const TSeries& e2, const FSeries& x) {
  TSeries a = fproject(x);
  const int n = std::min({a.trunc_deg(), e1.trunc_deg(), e2.trunc_deg()});
  TSeries2 r(a.p(), n);
  TSeries e = e1 + e2;
  TSeries2 de = coproduct(e), de1 = coproduct(e1), de2 = coproduct(e2);
  for (const auto& [wa, ca] : a.terms()) {
    // a S(e') (x) e''
    for (const auto& [k, c] : de.terms()) {
      auto [s, se] = antipode_word(k.first);
      r.accumulate({wa + se, k.second}, ca * c * s);
    }
    // - S(e2') (x) e2'' a
    for (const auto& [k, c] : de2.terms()) {
      auto [s, se] = antipode_word(k.first);
      r.accumulate({se, k.second + wa}, -ca * c * s);
    }
    // - a' S(e1') S(a'') (x) a''' e1''
    for_each_split(wa, [&](const Word& a1, const Word& rest) {
      for_each_split(rest, [&](const Word& a2, const Word& a3) {
        auto [s2, sa2] = antipode_word(a2);
        for (const auto& [k, c] : de1.terms()) {
          if (degree(a1) + degree(a2) + degree(a3) + degree(k) > n) break;
          auto [s1, se1] = antipode_word(k.first);
          r.accumulate({a1 + se1 + sa2, a3 + k.second}, -ca * c * s1 * s2);
        }
      });
    });
  }
  r.prune();
  return r;
}

CycSeries2 delta_inner_closed(const TSeries& e, const FSeries& x) {
  TSeries a = fproject(x);
  const int n = std::min(a.trunc_deg(), e.trunc_deg());
  TSeries2 r(a.p(), n);
  TSeries2 de = coproduct(e);
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [k, c] : de.terms()) {
      auto [s, se] = antipode_word(k.first);
      const Word& e2 = k.second;
      Rat v = ca * c * s;
      r.accumulate({wa + se, e2}, v);
      r.accumulate({wa + e2, se}, v);
      r.accumulate({se, e2 + wa}, -v);
      r.accumulate({e2, se + wa}, -v);
    }
  }
  r.prune();
  return cyclic_project2(r);
}

std::pair<TSeries, TSeries> fox_axiom_defects(const PairingFn& rho, const TSeries& a, const TSeries& b,
                                              const TSeries& c) {
  TSeries left = rho(a * b, c) - a * rho(b, c) - counit(b) * rho(a, c);
  TSeries right = rho(a, b * c) - rho(a, b) * c - counit(b) * rho(a, c);
  return {left, right};
}

TSeries qder_defect(const QDerFn& q, const FSeries& x, const FSeries& y) {
  TSeries a = fproject(x), b = fproject(y);
  return q(x * y) - q(x) * b - a * q(y) - q.ruling(a, b);
}

}  // namespace gtlab
