#pragma once

#include "gtlab/qseries.hpp"
#include "gtlab/series.hpp"

namespace gtlab {

// Calls f(left, right) for each of the 2^m ways to distribute the letters of
// w between two legs, order preserved on both sides. These are the Sweedler
// terms of the shuffle coproduct of a word.
template <class F>
void for_each_split(const Word& w, F&& f) {
  const std::size_t m = w.size();
  Word left, right;
  left.reserve(m);
  right.reserve(m);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    left.clear();
    right.clear();
    for (std::size_t i = 0; i < m; ++i) ((mask >> i) & 1 ? left : right).push_back(w[i]);
    f(static_cast<const Word&>(left), static_cast<const Word&>(right));
  }
}

// S(h_1...h_m) = (-1)^m h_m...h_1, returned as (sign, word).
inline std::pair<int, Word> antipode_word(const Word& w) { return {w.size() % 2 ? -1 : 1, reversed(w)}; }

Rat counit(const TSeries& a);
Rat counit(const FSeries& a);

TSeries2 coproduct(const TSeries& a);
FSeries2 coproduct(const FSeries& a);

TSeries antipode(const TSeries& a);
// C -> -C on the second factor.
FSeries antipode(const FSeries& a);

// Truncated exp/log. exp needs counit 0, log needs counit 1 (DomainError).
TSeries t_exp(const TSeries& a);
TSeries t_log(const TSeries& a);
FSeries f_exp(const FSeries& a);
FSeries f_log(const FSeries& a);

// sum_k u_k h^k; h must have counit 0.
TSeries eval_uni(const UniSeries& u, const TSeries& h);

CycSeries cyclic_project(const TSeries& a);
RedCycSeries reduce(const CycSeries& c);
inline RedCycSeries cyclic_reduced(const TSeries& a) { return reduce(cyclic_project(a)); }

// id (x) counit: keeps the C^0 part.
TSeries fproject(const FSeries& a);
FSeries to_fseries(const TSeries& a);
// a (x) f(C)
FSeries tensor_c(const TSeries& a, const UniSeries& f);

// Operations on tensor squares.
TSeries2 tensor(const TSeries& a, const TSeries& b);
TSeries2 tensor_product(const TSeries2& x, const TSeries2& y);  // (a(x)b)(c(x)d) = ac (x) bd
TSeries multiply_legs(const TSeries2& x);                          // a (x) b -> ab
TSeries2 antipode_left(const TSeries2& x);
TSeries2 antipode_right(const TSeries2& x);
CycSeries2 cyclic_project2(const TSeries2& x);
RedCycSeries2 reduce2(const CycSeries2& x);

template <class K>
Series<std::pair<K, K>> swap_legs(const Series<std::pair<K, K>>& x) {
  Series<std::pair<K, K>> r(x.p(), x.trunc_deg());
  for (const auto& [k, c] : x.terms()) r.add({k.second, k.first}, c);
  return r;
}

}  // namespace gtlab
