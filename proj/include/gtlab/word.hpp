#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>

namespace gtlab {

// Letters are 1-based indices into the alphabet {z_1, ..., z_p}.
using Letter = std::uint8_t;
using Word = std::basic_string<Letter>;

Word make_word(std::initializer_list<int> letters);
Word reversed(const Word& w);
std::string to_string(const Word& w);  // "z1z2", "1" for the empty word

// Lexicographically least rotation.
Word min_rotation(const Word& w);

// A monomial w (x) C^cpow of T((H)) (x) K[[C]].
struct FWord {
  Word word;
  int cpow = 0;
  friend bool operator==(const FWord&, const FWord&) = default;
};

// Canonical representative of a rotation class of words.
class CycWord {
 public:
  CycWord() = default;
  explicit CycWord(const Word& w) : w_(min_rotation(w)) {}
  const Word& word() const { return w_; }
  bool empty() const { return w_.empty(); }
  friend bool operator==(const CycWord&, const CycWord&) = default;

 private:
  Word w_;
};

// A non-trivial rotation class (the unit class is excluded).
class RedCycWord {
 public:
  explicit RedCycWord(const CycWord& c);
  const Word& word() const { return c_.word(); }
  const CycWord& cyc() const { return c_; }
  friend bool operator==(const RedCycWord&, const RedCycWord&) = default;

 private:
  CycWord c_;
};

using WordPair = std::pair<Word, Word>;
using FWordPair = std::pair<FWord, FWord>;
using CycPair = std::pair<CycWord, CycWord>;
using RedCycPair = std::pair<RedCycWord, RedCycWord>;

inline int degree(const Word& w) { return static_cast<int>(w.size()); }
inline int degree(const FWord& f) { return static_cast<int>(f.word.size()) + f.cpow; }
inline int degree(const CycWord& c) { return degree(c.word()); }
inline int degree(const RedCycWord& c) { return degree(c.word()); }
template <class A, class B>
int degree(const std::pair<A, B>& k) {
  return degree(k.first) + degree(k.second);
}

// Tie-breaks among keys of equal degree.
inline bool tie_less(const Word& a, const Word& b) { return a < b; }
inline bool tie_less(const FWord& a, const FWord& b) {
  if (a.cpow != b.cpow) return a.cpow < b.cpow;
  return a.word < b.word;
}
inline bool tie_less(const CycWord& a, const CycWord& b) { return a.word() < b.word(); }
inline bool tie_less(const RedCycWord& a, const RedCycWord& b) { return a.word() < b.word(); }

// Degree first, then lexicographic; every series is stored in this order, so
// truncation is a suffix erase.
struct KeyLess {
  template <class K>
  bool operator()(const K& a, const K& b) const {
    int da = degree(a), db = degree(b);
    if (da != db) return da < db;
    return tie(a, b);
  }

 private:
  template <class K>
  static bool tie(const K& a, const K& b) {
    return tie_less(a, b);
  }
  template <class A, class B>
  static bool tie(const std::pair<A, B>& a, const std::pair<A, B>& b) {
    KeyLess less;
    if (less(a.first, b.first)) return true;
    if (less(b.first, a.first)) return false;
    return less(a.second, b.second);
  }
};

inline Word concat(const Word& a, const Word& b) { return a + b; }
inline FWord concat(const FWord& a, const FWord& b) { return FWord{a.word + b.word, a.cpow + b.cpow}; }

}  // namespace gtlab
