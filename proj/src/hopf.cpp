#include "gtlab/hopf.hpp"

namespace gtlab {

TSeries t_unit(int p, int trunc_deg) {
  TSeries r(p, trunc_deg);
  r.add(Word{}, 1);
  return r;
}

void check_letters(const Word& w, int p) {
  for (Letter l : w)
    if (l < 1 || l > p) throw DomainError("letter z" + std::to_string(l) + " outside alphabet of size " + std::to_string(p));
}

TSeries t_letter(int p, int trunc_deg, int i) { return t_word(p, trunc_deg, Word(1, static_cast<Letter>(i))); }

TSeries t_word(int p, int trunc_deg, const Word& w, const Rat& c) {
  check_letters(w, p);
  TSeries r(p, trunc_deg);
  r.add(w, c);
  return r;
}

TSeries t_sum_letters(int p, int trunc_deg) {
  TSeries r(p, trunc_deg);
  for (int i = 1; i <= p; ++i) r.add(Word(1, static_cast<Letter>(i)), 1);
  return r;
}

Rat counit(const TSeries& a) { return a.coeff(Word{}); }
Rat counit(const FSeries& a) { return a.coeff(FWord{}); }

TSeries2 coproduct(const TSeries& a) {
  TSeries2 r(a.p(), a.trunc_deg());
  for (const auto& [w, c] : a.terms())
    for_each_split(w, [&](const Word& l, const Word& rr) { r.accumulate({l, rr}, c); });
  r.prune();
  return r;
}

FSeries2 coproduct(const FSeries& a) {
  FSeries2 r(a.p(), a.trunc_deg());
  for (const auto& [f, c] : a.terms()) {
    for_each_split(f.word, [&](const Word& l, const Word& rr) {
      for (int k = 0; k <= f.cpow; ++k) r.accumulate({FWord{l, k}, FWord{rr, f.cpow - k}}, c * binomial(f.cpow, k));
    });
  }
  r.prune();
  return r;
}

TSeries antipode(const TSeries& a) {
  TSeries r(a.p(), a.trunc_deg());
  for (const auto& [w, c] : a.terms()) {
    auto [sign, rw] = antipode_word(w);
    r.add(rw, sign * c);
  }
  return r;
}

FSeries antipode(const FSeries& a) {
  FSeries r(a.p(), a.trunc_deg());
  for (const auto& [f, c] : a.terms()) {
    auto [sign, rw] = antipode_word(f.word);
    if (f.cpow % 2) sign = -sign;
    r.add(FWord{rw, f.cpow}, sign * c);
  }
  return r;
}

namespace {

template <class Key>
Series<Key> unit_like(const Series<Key>& a) {
  Series<Key> r(a.p(), a.trunc_deg());
  r.add(Key{}, 1);
  return r;
}

template <class Key>
Series<Key> exp_impl(const Series<Key>& a) {
  if (a.coeff(Key{}) != 0) throw DomainError("exp: argument must have zero constant term");
  Series<Key> result = unit_like(a);
  Series<Key> power = unit_like(a);
  for (int k = 1; k <= a.trunc_deg(); ++k) {
    power = power * a;
    power *= Rat(1) / Rat(k);
    if (power.is_zero()) break;
    result += power;
  }
  return result;
}

template <class Key>
Series<Key> log_impl(const Series<Key>& a) {
  if (a.coeff(Key{}) != 1) throw DomainError("log: argument must have constant term 1");
  Series<Key> x = a - unit_like(a);
  Series<Key> result(a.p(), a.trunc_deg());
  Series<Key> power = unit_like(a);
  for (int k = 1; k <= a.trunc_deg(); ++k) {
    power = power * x;
    if (power.is_zero()) break;
    result += (k % 2 ? Rat(1) : Rat(-1)) / Rat(k) * power;
  }
  return result;
}

}  // namespace

TSeries t_exp(const TSeries& a) { return exp_impl(a); }
TSeries t_log(const TSeries& a) { return log_impl(a); }
FSeries f_exp(const FSeries& a) { return exp_impl(a); }
FSeries f_log(const FSeries& a) { return log_impl(a); }

TSeries eval_uni(const UniSeries& u, const TSeries& h) {
  if (counit(h) != 0) throw DomainError("eval_uni: argument must have zero constant term");
  int n = std::min(u.trunc_deg(), h.trunc_deg());
  TSeries hn = h.truncated(n);
  TSeries result(h.p(), n);
  TSeries power = t_unit(h.p(), n);
  for (int k = 0; k <= n; ++k) {
    if (k > 0) power = power * hn;
    if (power.is_zero()) break;
    if (u[k] != 0) result += u[k] * power;
  }
  return result;
}

CycSeries cyclic_project(const TSeries& a) {
  CycSeries r(a.p(), a.trunc_deg());
  for (const auto& [w, c] : a.terms()) r.accumulate(CycWord(w), c);
  r.prune();
  return r;
}

RedCycSeries reduce(const CycSeries& c) {
  RedCycSeries r(c.p(), c.trunc_deg());
  for (const auto& [w, v] : c.terms())
    if (!w.empty()) r.add(RedCycWord(w), v);
  return r;
}

TSeries fproject(const FSeries& a) {
  TSeries r(a.p(), a.trunc_deg());
  for (const auto& [f, c] : a.terms())
    if (f.cpow == 0) r.add(f.word, c);
  return r;
}

FSeries to_fseries(const TSeries& a) {
  FSeries r(a.p(), a.trunc_deg());
  for (const auto& [w, c] : a.terms()) r.add(FWord{w, 0}, c);
  return r;
}

FSeries tensor_c(const TSeries& a, const UniSeries& f) {
  FSeries r(a.p(), std::min(a.trunc_deg(), f.trunc_deg()));
  for (const auto& [w, c] : a.terms())
    for (int k = 0; k <= f.trunc_deg(); ++k)
      if (f[k] != 0) r.add(FWord{w, k}, c * f[k]);
  return r;
}

TSeries2 tensor(const TSeries& a, const TSeries& b) {
  a.check_context(b);
  TSeries2 r(a.p(), std::min(a.trunc_deg(), b.trunc_deg()));
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) r.add({wa, wb}, ca * cb);
  return r;
}

TSeries2 tensor_product(const TSeries2& x, const TSeries2& y) {
  x.check_context(y);
  TSeries2 r(x.p(), std::min(x.trunc_deg(), y.trunc_deg()));
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms()) r.accumulate({kx.first + ky.first, kx.second + ky.second}, cx * cy);
  r.prune();
  return r;
}

TSeries multiply_legs(const TSeries2& x) {
  TSeries r(x.p(), x.trunc_deg());
  for (const auto& [k, c] : x.terms()) r.accumulate(k.first + k.second, c);
  r.prune();
  return r;
}

TSeries2 antipode_left(const TSeries2& x) {
  TSeries2 r(x.p(), x.trunc_deg());
  for (const auto& [k, c] : x.terms()) {
    auto [sign, w] = antipode_word(k.first);
    r.add({w, k.second}, sign * c);
  }
  return r;
}

TSeries2 antipode_right(const TSeries2& x) {
  TSeries2 r(x.p(), x.trunc_deg());
  for (const auto& [k, c] : x.terms()) {
    auto [sign, w] = antipode_word(k.second);
    r.add({k.first, w}, sign * c);
  }
  return r;
}

CycSeries2 cyclic_project2(const TSeries2& x) {
  CycSeries2 r(x.p(), x.trunc_deg());
  for (const auto& [k, c] : x.terms()) r.accumulate({CycWord(k.first), CycWord(k.second)}, c);
  r.prune();
  return r;
}

RedCycSeries2 reduce2(const CycSeries2& x) {
  RedCycSeries2 r(x.p(), x.trunc_deg());
  for (const auto& [k, c] : x.terms())
    if (!k.first.empty() && !k.second.empty()) r.add({RedCycWord(k.first), RedCycWord(k.second)}, c);
  return r;
}

}  // namespace gtlab
