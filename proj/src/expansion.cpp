#include "gtlab/expansion.hpp"

#include "gtlab/formal_ops.hpp"

#include <random>

namespace gtlab {

namespace {

// Free variables of seeded solves: numerators in [-3, 3], denominators in
// [1, 4], drawn in column order, degree after degree.
Rat draw_free(std::mt19937_64& rng) {
  std::uint64_t r = rng();
  long num = static_cast<long>(r % 7) - 3;
  long den = static_cast<long>((r >> 8) % 4) + 1;
  return make_rat(num, den);
}

TSeries conjugate_exp(const TSeries& u, const TSeries& x) {
  // exp(u) exp(x) exp(-u)
  return t_exp(u) * t_exp(x) * t_exp(-u);
}

// Solves sum_k [B_k(v_k)] = target in degree d + 1, where each unknown v_k is
// a Lie element of degree d and B_k is the linear map v -> [v, g_k] (sign
// +1) or [g_k, v] (sign -1) for a letter g_k. Columns: (k ascending, Lyndon
// word lexicographic).
struct BracketTerm {
  int letter;
  int sign;  // +1: [v, g], -1: [g, v]
};

std::vector<LieElem> solve_degree(LyndonBasis& basis, int d, const std::vector<BracketTerm>& terms,
                                  const TSeries& target, std::mt19937_64* rng) {
  const int p = basis.p();
  std::vector<Word> vars = lyndon_words(p, d);
  std::vector<Word> eqs = lyndon_words(p, d + 1);
  std::map<Word, int> row_of;
  for (std::size_t r = 0; r < eqs.size(); ++r) row_of[eqs[r]] = static_cast<int>(r);

  SparseSystem sys;
  sys.cols = static_cast<int>(terms.size() * vars.size());
  sys.rows.assign(eqs.size(), {});
  sys.rhs.assign(eqs.size(), 0);
  for (std::size_t k = 0; k < terms.size(); ++k) {
    TSeries g = t_letter(p, d + 1, terms[k].letter);
    for (std::size_t j = 0; j < vars.size(); ++j) {
      TSeries pv = basis.bracket(vars[j]).lifted(d + 1);
      TSeries col = terms[k].sign > 0 ? pv * g - g * pv : g * pv - pv * g;
      int c = static_cast<int>(k * vars.size() + j);
      for (const auto& [w, v] : col.terms()) {
        auto it = row_of.find(w);
        if (it != row_of.end()) sys.rows[static_cast<std::size_t>(it->second)][c] = v;
      }
    }
  }
  for (const auto& [w, v] : target.terms()) {
    auto it = row_of.find(w);
    if (it != row_of.end()) sys.rhs[static_cast<std::size_t>(it->second)] = v;
  }
  RrefResult red = rref(std::move(sys));
  std::vector<Rat> free_values;
  if (rng) {
    for (std::size_t k = 0, n = free_columns(red, static_cast<int>(terms.size() * vars.size())).size(); k < n; ++k)
      free_values.push_back(draw_free(*rng));
  }
  auto x = solve_rref(red, static_cast<int>(terms.size() * vars.size()), free_values);
  if (!x) throw SolverInconsistent("no Lie solution in degree " + std::to_string(d));
  std::vector<LieElem> out(terms.size());
  for (std::size_t k = 0; k < terms.size(); ++k)
    for (std::size_t j = 0; j < vars.size(); ++j) out[k].add(vars[j], (*x)[k * vars.size() + j]);
  return out;
}

TSeries boundary_log(LyndonBasis& basis, const std::vector<LieElem>& u, int n) {
  const int p = basis.p();
  TSeries prod = t_unit(p, n);
  for (int i = 1; i <= p; ++i)
    prod = prod * conjugate_exp(basis.to_tseries(u[static_cast<std::size_t>(i - 1)], n), t_letter(p, n, i));
  return t_log(prod) - t_sum_letters(p, n);
}

}  // namespace

Expansion solve_special(int p, int trunc_deg, std::optional<std::uint64_t> seed) {
  if (p < 1) throw DomainError("solve_special: p must be positive");
  if (trunc_deg < 1) throw DomainError("solve_special: degree must be positive");
  Expansion e;
  e.p = p;
  e.trunc_deg = trunc_deg;
  e.u.assign(static_cast<std::size_t>(p), LieElem{});
  e.seed = seed;
  LyndonBasis basis(p);
  std::mt19937_64 rng(seed.value_or(0));
  std::vector<BracketTerm> terms;
  for (int i = 1; i <= p; ++i) terms.push_back({i, +1});
  for (int d = 1; d < trunc_deg; ++d) {
    TSeries defect = boundary_log(basis, e.u, d + 1);
    if (defect.min_degree() <= d) throw SolverInconsistent("defect below degree " + std::to_string(d + 1));
    auto v = solve_degree(basis, d, terms, -defect.homogeneous(d + 1), seed ? &rng : nullptr);
    for (int i = 0; i < p; ++i) e.u[static_cast<std::size_t>(i)] += v[static_cast<std::size_t>(i)];
  }
  return e;
}

std::vector<TSeries> conjugators(const Expansion& e) {
  LyndonBasis basis(e.p);
  std::vector<TSeries> out;
  for (const auto& u : e.u) out.push_back(basis.to_tseries(u, e.trunc_deg));
  return out;
}

TSeries boundary_defect(const Expansion& e) {
  LyndonBasis basis(e.p);
  return boundary_log(basis, e.u, e.trunc_deg);
}

Theta::Theta(const Expansion& e) : p_(e.p), n_(e.trunc_deg) {
  if (static_cast<int>(e.u.size()) != e.p) throw DomainError("expansion has " + std::to_string(e.u.size()) + " conjugators");
  std::vector<TSeries> u = conjugators(e);
  for (int i = 1; i <= p_; ++i) {
    const TSeries& ui = u[static_cast<std::size_t>(i - 1)];
    TSeries zi = t_letter(p_, n_, i);
    pos_.push_back(conjugate_exp(ui, zi));
    neg_.push_back(conjugate_exp(ui, -zi));
  }
}

const TSeries& Theta::generator(int i, int sign) const {
  if (i < 1 || i > p_) throw DomainError("generator x" + std::to_string(i) + " outside 1.." + std::to_string(p_));
  return (sign > 0 ? pos_ : neg_)[static_cast<std::size_t>(i - 1)];
}

TSeries Theta::eval(const GWord& w) const {
  TSeries r = t_unit(p_, n_);
  for (const auto& s : w.syllables()) {
    if (s.symbol == GWord::kZ) throw DomainError("theta: word contains z");
    const TSeries& g = generator(s.symbol, s.exponent);
    for (int k = 0; k < std::abs(s.exponent); ++k) r = r * g;
  }
  return r;
}

FSeries Theta::eval_framed(const FGWord& w) const {
  return tensor_c(eval(w.base), series_exp(make_rat(w.winding, 2), n_));
}

const TSeries& Theta::monomial_image(const Word& w) const {
  auto it = mono_.find(w);
  if (it != mono_.end()) return it->second;
  TSeries r = t_unit(p_, n_);
  if (!w.empty()) {
    const TSeries& tail = monomial_image(w.substr(1));
    r = (generator(w[0], +1) - t_unit(p_, n_)) * tail;
  }
  return mono_.emplace(w, std::move(r)).first->second;
}

GAlgTrunc Theta::invert(const TSeries& t) const {
  if (t.p() != p_) throw MismatchedContext("theta_invert: alphabet mismatch");
  const int m = std::min(t.trunc_deg(), n_);
  TSeries residual = t.truncated(m);
  GAlgTrunc out(p_, m);
  // the image of a monomial is its word plus terms of higher degree
  while (!residual.is_zero()) {
    auto [w, c] = *residual.terms().begin();
    out.mono.add(w, c);
    residual -= c * monomial_image(w).truncated(m);
  }
  return out;
}

TSeries Theta::eval(const GAlgTrunc& x) const {
  const int m = std::min(x.trusted_deg(), n_);
  TSeries r(p_, m);
  for (const auto& [w, c] : x.mono.terms()) r += c * monomial_image(w).truncated(m);
  return r;
}

TSeries theta_eval(const Expansion& e, const GWord& w) { return Theta(e).eval(w); }
FSeries theta_framed_eval(const Expansion& e, const FGWord& w) { return Theta(e).eval_framed(w); }
GAlgTrunc theta_invert(const Expansion& e, const TSeries& t) { return Theta(e).invert(t); }

namespace {

TSeries genus1_log_impl(LyndonBasis& basis, const LieElem& c, const LieElem& d, int n) {
  TSeries a = t_letter(2, n, 1) + basis.to_tseries(c, n);
  TSeries b = t_letter(2, n, 2) + basis.to_tseries(d, n);
  return t_log(t_exp(-a) * t_exp(b) * t_exp(a) * t_exp(-b));
}

TSeries ab_commutator(int n) {
  TSeries a = t_letter(2, n, 1), b = t_letter(2, n, 2);
  return a * b - b * a;
}

}  // namespace

Genus1Expansion solve_symplectic_genus1(int trunc_deg) {
  if (trunc_deg < 2) throw DomainError("solve_symplectic_genus1: degree must be at least 2");
  Genus1Expansion g;
  g.trunc_deg = trunc_deg;
  LyndonBasis basis(2);
  // changing c by v_c and d by v_d moves the log by [b, v_c] - [a, v_d]
  std::vector<BracketTerm> terms{{2, -1}, {1, +1}};
  for (int k = 2; k < trunc_deg; ++k) {
    TSeries defect = genus1_log_impl(basis, g.c, g.d, k + 1) + ab_commutator(k + 1);
    if (defect.min_degree() <= k) throw SolverInconsistent("genus-one defect below degree " + std::to_string(k + 1));
    auto v = solve_degree(basis, k, terms, -defect.homogeneous(k + 1), nullptr);
    g.c += v[0];
    g.d += v[1];
  }
  return g;
}

TSeries genus1_boundary_log(const Genus1Expansion& g) {
  LyndonBasis basis(2);
  return genus1_log_impl(basis, g.c, g.d, g.trunc_deg);
}

namespace {

TSeries relabel(const TSeries& x, int alphabet, int i) {
  TSeries r(alphabet, x.trunc_deg());
  for (const auto& [w, c] : x.terms()) {
    Word v;
    for (Letter l : w) v.push_back(static_cast<Letter>(l == 1 ? letter_a(i) : letter_b(i)));
    r.add(v, c);
  }
  return r;
}

}  // namespace

SymplecticTheta::SymplecticTheta(const Expansion& e, const Genus1Expansion& g) : genus_(e.p) {
  n_ = std::min(g.trunc_deg, 2 * e.trunc_deg);
  loss_ = g.trunc_deg > 2 * e.trunc_deg;
  const int alphabet = 2 * genus_;
  LyndonBasis basis(2);
  TSeries a = t_letter(2, n_, 1) + basis.to_tseries(g.c, n_);
  TSeries b = t_letter(2, n_, 2) + basis.to_tseries(g.d, n_);
  std::vector<TSeries> u = conjugators(e);
  for (int i = 1; i <= genus_; ++i) {
    TSeries iu = embed_I(u[static_cast<std::size_t>(i - 1)], n_).value.lifted(n_);
    TSeries ai = relabel(a, alphabet, i), bi = relabel(b, alphabet, i);
    alpha_.push_back(conjugate_exp(iu, ai));
    beta_.push_back(conjugate_exp(iu, bi));
    alpha_inv_.push_back(conjugate_exp(iu, -ai));
    beta_inv_.push_back(conjugate_exp(iu, -bi));
  }
}

TSeries SymplecticTheta::iota_zeta(int i) const {
  auto k = static_cast<std::size_t>(i - 1);
  return alpha_inv_.at(k) * beta_.at(k) * alpha_.at(k) * beta_inv_.at(k);
}

TSeries SymplecticTheta::boundary() const {
  TSeries r = t_unit(2 * genus_, n_);
  for (int i = 1; i <= genus_; ++i) r = r * iota_zeta(i);
  return r;
}

}  // namespace gtlab
