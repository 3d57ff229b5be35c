#pragma once

#include "gtlab/errors.hpp"
#include "gtlab/rational.hpp"
#include "gtlab/word.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <string>

namespace gtlab {

// A truncated sparse series over an alphabet of p letters: a finite map from
// keys (words, framed words, pairs of words, ...) to non-zero rationals. The
// value is exact modulo keys of degree > trunc_deg.
template <class Key>
class Series {
 public:
  using key_type = Key;
  using Terms = std::map<Key, Rat, KeyLess>;

  Series() : Series(1, 0) {}
  Series(int p, int trunc_deg) : p_(p), n_(trunc_deg) {
    if (p < 1) throw DomainError("alphabet size must be positive");
    if (trunc_deg < 0) throw DomainError("negative truncation degree");
  }

  int p() const { return p_; }
  int trunc_deg() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rat coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  // Terms above the truncation degree are dropped.
  void add(const Key& k, const Rat& c) {
    if (c == 0 || degree(k) > n_) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  // Accumulate without pruning zeros; call prune() afterwards.
  void accumulate(const Key& k, const Rat& c) {
    if (degree(k) > n_) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) it->second += c;
  }
  void prune() { std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; }); }

  void truncate(int n) {
    if (n >= n_) return;
    if (n < 0) throw DomainError("truncation below degree 0");
    n_ = n;
    auto it = std::find_if(terms_.begin(), terms_.end(), [n](const auto& kv) { return degree(kv.first) > n; });
    terms_.erase(it, terms_.end());
  }
  Series truncated(int n) const {
    Series r = *this;
    r.truncate(n);
    return r;
  }

  // Same terms under a different truncation degree. Raising it is only
  // meaningful for values known to be exact polynomials.
  Series lifted(int n) const {
    if (n <= n_) return truncated(n);
    Series r = *this;
    r.n_ = n;
    return r;
  }

  Series homogeneous(int d) const {
    Series r(p_, n_);
    for (const auto& [k, c] : terms_)
      if (degree(k) == d) r.terms_.emplace_hint(r.terms_.end(), k, c);
    return r;
  }

  int min_degree() const { return terms_.empty() ? n_ + 1 : degree(terms_.begin()->first); }

  void check_context(const Series& o) const {
    if (p_ != o.p_)
      throw MismatchedContext("series over " + std::to_string(p_) + " and " + std::to_string(o.p_) + " letters");
  }

  Series& operator+=(const Series& o) {
    check_context(o);
    truncate(std::min(n_, o.n_));
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  Series& operator-=(const Series& o) {
    check_context(o);
    truncate(std::min(n_, o.n_));
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  Series& operator*=(const Rat& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& kv : terms_) kv.second *= c;
    return *this;
  }

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator-(Series a) { return a *= Rat(-1); }
  friend Series operator*(const Rat& c, Series a) { return a *= c; }
  friend Series operator*(Series a, const Rat& c) { return a *= c; }

  friend bool operator==(const Series& a, const Series& b) {
    return a.p_ == b.p_ && a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  int p_;
  int n_;
  Terms terms_;
};

// Concatenation product; the result is trusted through the smaller degree.
template <class Key>
Series<Key> operator*(const Series<Key>& a, const Series<Key>& b) {
  a.check_context(b);
  int n = std::min(a.trunc_deg(), b.trunc_deg());
  Series<Key> r(a.p(), n);
  for (const auto& [ka, ca] : a.terms()) {
    int da = degree(ka);
    if (da > n) break;
    for (const auto& [kb, cb] : b.terms()) {
      if (da + degree(kb) > n) break;
      r.accumulate(concat(ka, kb), ca * cb);
    }
  }
  r.prune();
  return r;
}

// Series with the same terms, equal through min(a.N, b.N).
template <class Key>
bool equal_through(const Series<Key>& a, const Series<Key>& b, int n) {
  return (a.truncated(n) - b.truncated(n)).is_zero();
}

// Elements of T((H)).
using TSeries = Series<Word>;
// Elements of T((H)) (x) K[[C]], deg C = 1.
using FSeries = Series<FWord>;
// Elements of T((H)) (x) T((H)), graded by total degree.
using TSeries2 = Series<WordPair>;
using FSeries2 = Series<FWordPair>;
// Cyclic quotient T/[T,T] and its reduction by K1.
using CycSeries = Series<CycWord>;
using RedCycSeries = Series<RedCycWord>;
using CycSeries2 = Series<CycPair>;
using RedCycSeries2 = Series<RedCycPair>;

inline std::string key_string(const Word& w) { return to_string(w); }
inline std::string key_string(const FWord& f) {
  std::string s = to_string(f.word);
  if (f.cpow == 1) s += "*C";
  if (f.cpow > 1) s += "*C^" + std::to_string(f.cpow);
  return s;
}
inline std::string key_string(const CycWord& c) { return "|" + to_string(c.word()) + "|"; }
inline std::string key_string(const RedCycWord& c) { return "|" + to_string(c.word()) + "|"; }
template <class A, class B>
std::string key_string(const std::pair<A, B>& k) {
  return key_string(k.first) + " (x) " + key_string(k.second);
}

template <class Key>
std::string to_string(const Series<Key>& s) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : s.terms()) {
    os << (first ? "" : " + ") << format_rat(c) << " " << key_string(k);
    first = false;
  }
  os << (first ? "" : " + ") << "O(" << s.trunc_deg() + 1 << ")";
  return os.str();
}

// Constructors for common elements of T((H)).
TSeries t_unit(int p, int trunc_deg);
TSeries t_letter(int p, int trunc_deg, int i);
TSeries t_word(int p, int trunc_deg, const Word& w, const Rat& c = 1);
// z = z_1 + ... + z_p
TSeries t_sum_letters(int p, int trunc_deg);
void check_letters(const Word& w, int p);

}  // namespace gtlab
