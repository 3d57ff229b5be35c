#pragma once

#include "gtlab/rational.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace gtlab {

// symbol 1..p is the free generator zeta_i; symbol 0 is the distinguished
// extra generator z of G * F(z).
struct Syllable {
  int symbol = 0;
  int exponent = 0;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

// Freely reduced word in the free group (optionally with z-syllables).
class GWord {
 public:
  static constexpr int kZ = 0;

  GWord() = default;
  explicit GWord(const std::vector<Syllable>& syllables);
  static GWord generator(int i, int exponent = 1);
  static GWord z(int exponent = 1);

  const std::vector<Syllable>& syllables() const { return syl_; }
  bool is_identity() const { return syl_.empty(); }
  bool has_z() const;
  int length() const;  // sum of |exponents|
  GWord inverse() const;

  // Signed letters: +i for zeta_i, -i for its inverse (0 is z).
  std::vector<int> letters() const;
  static GWord from_letters(const std::vector<int>& letters);

  std::string to_string() const;

  friend GWord operator*(const GWord& a, const GWord& b);
  friend auto operator<=>(const GWord&, const GWord&) = default;
  friend bool operator==(const GWord&, const GWord&) = default;

 private:
  void push(Syllable s);
  std::vector<Syllable> syl_;
};

// Canonical representative of the conjugacy class: cyclically reduced, then
// the least rotation of its signed letter sequence.
GWord conjugacy_canonical(const GWord& w);

// Element of the framed group, modelled as pi x F(Digamma).
struct FGWord {
  GWord base;
  int winding = 0;

  FGWord inverse() const { return FGWord{base.inverse(), -winding}; }
  std::string to_string() const;
  friend FGWord operator*(const FGWord& a, const FGWord& b) { return FGWord{a.base * b.base, a.winding + b.winding}; }
  friend bool operator==(const FGWord&, const FGWord&) = default;
};

inline int winding(const FGWord& x) { return x.winding; }

// Group algebra element.
class GAlg {
 public:
  using Terms = std::map<GWord, Rat>;

  GAlg() = default;
  static GAlg of(const GWord& w, const Rat& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rat coeff(const GWord& w) const;
  void add(const GWord& w, const Rat& c);

  GAlg& operator+=(const GAlg& o);
  GAlg& operator-=(const GAlg& o);
  friend GAlg operator+(GAlg a, const GAlg& b) { return a += b; }
  friend GAlg operator-(GAlg a, const GAlg& b) { return a -= b; }
  friend GAlg operator*(const GAlg& a, const GAlg& b);
  friend GAlg operator*(const Rat& c, GAlg a);
  friend bool operator==(const GAlg&, const GAlg&) = default;

  std::string to_string() const;

 private:
  Terms terms_;
};

inline GWord gw_mul(const GWord& a, const GWord& b) { return a * b; }

// Counit of the group algebra.
Rat augment(const GAlg& x);

// Left Fox derivative d/dz on K[G * F(z)].
GAlg fox_partial_z(const GAlg& x);

// The homomorphism killing z.
GAlg proj_p(const GAlg& x);

}  // namespace gtlab
