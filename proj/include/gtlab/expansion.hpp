#pragma once

#include "gtlab/galg_trunc.hpp"
#include "gtlab/hopf.hpp"
#include "gtlab/lie.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gtlab {

// A special expansion theta(zeta_i) = exp(u_i) exp(z_i) exp(-u_i), with
// theta(zeta_1 ... zeta_p) = exp(z_1 + ... + z_p) through trunc_deg.
struct Expansion {
  int p = 1;
  int trunc_deg = 1;
  std::vector<LieElem> u;
  // Seed for the free variables of the solver; none means all zero.
  std::optional<std::uint64_t> seed;
  std::string nu_convention = "z1..zp";

  friend bool operator==(const Expansion&, const Expansion&) = default;
};

Expansion solve_special(int p, int trunc_deg, std::optional<std::uint64_t> seed = std::nullopt);

// u_i as series through trunc_deg.
std::vector<TSeries> conjugators(const Expansion& e);

// log theta(nu) - z; zero for a valid expansion.
TSeries boundary_defect(const Expansion& e);

// Evaluation of theta on words, framed words, and its inverse on the
// group ring. Caches generator images; not safe for concurrent use.
class Theta {
 public:
  explicit Theta(const Expansion& e);

  int p() const { return p_; }
  int trunc_deg() const { return n_; }

  // theta(zeta_i^{sign})
  const TSeries& generator(int i, int sign) const;
  TSeries eval(const GWord& w) const;
  // theta(base) (x) exp(winding C / 2)
  FSeries eval_framed(const FGWord& w) const;
  // The combination of (zeta - 1)-monomials of degree <= t.trunc_deg whose
  // image agrees with t.
  GAlgTrunc invert(const TSeries& t) const;
  // theta of a (zeta - 1)-monomial combination.
  TSeries eval(const GAlgTrunc& x) const;

 private:
  const TSeries& monomial_image(const Word& w) const;

  int p_, n_;
  std::vector<TSeries> pos_, neg_;
  mutable std::map<Word, TSeries, KeyLess> mono_;
};

TSeries theta_eval(const Expansion& e, const GWord& w);
FSeries theta_framed_eval(const Expansion& e, const FGWord& w);
GAlgTrunc theta_invert(const Expansion& e, const TSeries& t);

// Genus-one symplectic expansion over letters a = 1, b = 2:
// theta'(alpha) = exp(a + c), theta'(beta) = exp(b + d).
struct Genus1Expansion {
  int trunc_deg = 2;
  LieElem c, d;
  friend bool operator==(const Genus1Expansion&, const Genus1Expansion&) = default;
};

Genus1Expansion solve_symplectic_genus1(int trunc_deg);

// log theta'(alpha^{-1} beta alpha beta^{-1}) for the given corrections.
TSeries genus1_boundary_log(const Genus1Expansion& g);

// The genus-p symplectic expansion built from a special expansion and a
// genus-one solution, on the alphabet a_i = 2i - 1, b_i = 2i.
class SymplecticTheta {
 public:
  SymplecticTheta(const Expansion& e, const Genus1Expansion& g);

  int genus() const { return genus_; }
  int trunc_deg() const { return n_; }
  bool truncation_loss() const { return loss_; }

  const TSeries& alpha(int i) const { return alpha_[static_cast<std::size_t>(i - 1)]; }
  const TSeries& beta(int i) const { return beta_[static_cast<std::size_t>(i - 1)]; }
  // theta+ of alpha_i^{-1} beta_i alpha_i beta_i^{-1}
  TSeries iota_zeta(int i) const;
  // theta+ of the boundary iota(zeta_1 ... zeta_p)
  TSeries boundary() const;

 private:
  int genus_, n_;
  bool loss_ = false;
  std::vector<TSeries> alpha_, beta_, alpha_inv_, beta_inv_;
};

}  // namespace gtlab
