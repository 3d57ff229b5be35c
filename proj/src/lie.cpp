#include "gtlab/lie.hpp"

#include "gtlab/hopf.hpp"

#include <algorithm>
#include <set>

namespace gtlab {

std::vector<Word> lyndon_words(int k, int n) {
  std::vector<Word> out;
  if (n <= 0 || k <= 0) return out;
  // Duval's generation in lexicographic order
  Word w(1, 1);
  while (!w.empty()) {
    if (static_cast<int>(w.size()) == n) out.push_back(w);
    const std::size_t m = w.size();
    while (w.size() < static_cast<std::size_t>(n)) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == k) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return out;
}

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (!(w < w.substr(i) + w.substr(0, i))) return false;
  return true;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
  if (w.size() < 2) throw DomainError("standard factorization needs length >= 2");
  for (std::size_t i = 1; i < w.size(); ++i) {
    Word v = w.substr(i);
    if (is_lyndon(v)) return {w.substr(0, i), v};
  }
  throw DomainError("no proper Lyndon suffix");
}

void LieElem::add(const Word& lyndon, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = coords.try_emplace(lyndon, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coords.erase(it);
  }
}

LieElem& LieElem::operator+=(const LieElem& o) {
  for (const auto& [w, c] : o.coords) add(w, c);
  return *this;
}

const TSeries& LyndonBasis::bracket(const Word& lyndon) {
  auto it = cache_.find(lyndon);
  if (it != cache_.end()) return it->second;
  check_letters(lyndon, p_);
  const int n = degree(lyndon);
  TSeries r(p_, n);
  if (n == 1) {
    r.add(lyndon, 1);
  } else {
    auto [u, v] = standard_factorization(lyndon);
    TSeries pu = bracket(u).lifted(n), pv = bracket(v).lifted(n);
    r = pu * pv - pv * pu;
  }
  return cache_.emplace(lyndon, std::move(r)).first->second;
}

TSeries LyndonBasis::to_tseries(const LieElem& x, int trunc_deg) {
  TSeries r(p_, trunc_deg);
  for (const auto& [w, c] : x.coords) {
    if (degree(w) > trunc_deg) break;
    r += c * bracket(w).lifted(trunc_deg);
  }
  return r;
}

LieElem LyndonBasis::coordinates(const TSeries& x) {
  LieElem out;
  TSeries residual = x;
  if (residual.coeff(Word{}) != 0) throw DomainError("Lie element with constant term");
  for (int d = 1; d <= x.trunc_deg(); ++d) {
    for (const Word& l : lyndon_words(p_, d)) {
      Rat c = residual.coeff(l);
      if (c == 0) continue;
      out.add(l, c);
      residual -= c * bracket(l).lifted(x.trunc_deg());
    }
    if (!residual.homogeneous(d).is_zero()) throw DomainError("series is not a Lie element");
  }
  return out;
}

namespace {

void axpy(std::map<int, Rat>& row, Rat& rhs, const Rat& factor, const std::map<int, Rat>& pivot_row,
          const Rat& pivot_rhs) {
  for (const auto& [j, v] : pivot_row) {
    auto [it, inserted] = row.try_emplace(j, 0);
    it->second -= factor * v;
    if (it->second == 0) row.erase(it);
  }
  rhs -= factor * pivot_rhs;
}

}  // namespace

RrefResult rref(SparseSystem sys) {
  RrefResult r;
  const std::size_t m = sys.rows.size();
  std::vector<bool> used(m, false);
  std::vector<std::size_t> order;
  for (int col = 0; col < sys.cols; ++col) {
    std::size_t pivot = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (used[i]) continue;
      auto it = sys.rows[i].find(col);
      if (it == sys.rows[i].end()) continue;
      if (pivot == m || sys.rows[i].size() < sys.rows[pivot].size()) pivot = i;
    }
    if (pivot == m) continue;
    used[pivot] = true;
    Rat inv = 1 / sys.rows[pivot].at(col);
    for (auto& kv : sys.rows[pivot]) kv.second *= inv;
    sys.rhs[pivot] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == pivot) continue;
      auto it = sys.rows[i].find(col);
      if (it == sys.rows[i].end()) continue;
      Rat f = it->second;
      axpy(sys.rows[i], sys.rhs[i], f, sys.rows[pivot], sys.rhs[pivot]);
    }
    order.push_back(pivot);
    r.pivots.push_back(col);
  }
  for (std::size_t i : order) {
    r.rows.push_back(std::move(sys.rows[i]));
    r.rhs.push_back(sys.rhs[i]);
  }
  for (std::size_t i = 0; i < m; ++i)
    if (!used[i] && sys.rows[i].empty() && sys.rhs[i] != 0) r.consistent = false;
  return r;
}

std::vector<int> free_columns(const RrefResult& r, int cols) {
  std::set<int> piv(r.pivots.begin(), r.pivots.end());
  std::vector<int> out;
  for (int c = 0; c < cols; ++c)
    if (!piv.count(c)) out.push_back(c);
  return out;
}

std::optional<std::vector<Rat>> solve_rref(const RrefResult& r, int cols, const std::vector<Rat>& free_values) {
  if (!r.consistent) return std::nullopt;
  std::vector<Rat> x(static_cast<std::size_t>(cols), 0);
  std::vector<int> fc = free_columns(r, cols);
  for (std::size_t k = 0; k < fc.size() && k < free_values.size(); ++k) x[static_cast<std::size_t>(fc[k])] = free_values[k];
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    Rat v = r.rhs[i];
    for (const auto& [j, a] : r.rows[i])
      if (j != r.pivots[i]) v -= a * x[static_cast<std::size_t>(j)];
    x[static_cast<std::size_t>(r.pivots[i])] = v;
  }
  return x;
}

}  // namespace gtlab
