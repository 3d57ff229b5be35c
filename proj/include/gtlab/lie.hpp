#pragma once

#include "gtlab/series.hpp"

#include <map>
#include <optional>
#include <vector>

namespace gtlab {

// Lyndon words of length n over {1..k}, in lexicographic order.
std::vector<Word> lyndon_words(int k, int n);
bool is_lyndon(const Word& w);

// w = uv with v the longest proper Lyndon suffix.
std::pair<Word, Word> standard_factorization(const Word& w);

// Lie element in Lyndon coordinates.
struct LieElem {
  std::map<Word, Rat, KeyLess> coords;

  bool is_zero() const { return coords.empty(); }
  void add(const Word& lyndon, const Rat& c);
  LieElem& operator+=(const LieElem& o);
  friend bool operator==(const LieElem&, const LieElem&) = default;
};

// Cache of bracket expansions P_w of Lyndon words over p letters.
class LyndonBasis {
 public:
  explicit LyndonBasis(int p) : p_(p) {}
  int p() const { return p_; }

  // P_w = [P_u, P_v], expanded as a homogeneous polynomial.
  const TSeries& bracket(const Word& lyndon);

  TSeries to_tseries(const LieElem& x, int trunc_deg);

  // Coordinates of a Lie series; throws DomainError if x is not Lie.
  LieElem coordinates(const TSeries& x);

 private:
  int p_;
  std::map<Word, TSeries, KeyLess> cache_;
};

// Sparse exact linear system A x = b.
struct SparseSystem {
  int cols = 0;
  std::vector<std::map<int, Rat>> rows;
  std::vector<Rat> rhs;
};

struct RrefResult {
  std::vector<std::map<int, Rat>> rows;  // reduced rows, pivot coefficient 1
  std::vector<Rat> rhs;
  std::vector<int> pivots;  // pivot column of each reduced row
  bool consistent = true;
};

// Reduced row echelon form; pivots fall on the earliest possible columns.
RrefResult rref(SparseSystem sys);

// The solution with the given values on the free (non-pivot) columns.
// Returns nullopt for an inconsistent system.
std::optional<std::vector<Rat>> solve_rref(const RrefResult& r, int cols, const std::vector<Rat>& free_values);

std::vector<int> free_columns(const RrefResult& r, int cols);

}  // namespace gtlab
