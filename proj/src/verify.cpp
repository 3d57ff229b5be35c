#include "gtlab/verify.hpp"

#include "gtlab/formal_ops.hpp"
#include "gtlab/surface_ops.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace gtlab {

namespace {

using Rng = std::mt19937_64;

Rat rand_rat(Rng& rng) {
  long num = static_cast<long>(rng() % 9) - 4;
  long den = static_cast<long>(rng() % 4) + 1;
  return make_rat(num, den);
}

Word rand_word(Rng& rng, int p, int len) {
  Word w;
  for (int i = 0; i < len; ++i) w.push_back(static_cast<Letter>(1 + rng() % static_cast<unsigned>(p)));
  return w;
}

TSeries rand_tseries(Rng& rng, int p, int n, int terms, int max_len) {
  TSeries r(p, n);
  r.add(Word{}, rand_rat(rng));
  for (int t = 0; t < terms; ++t) r.add(rand_word(rng, p, 1 + static_cast<int>(rng() % static_cast<unsigned>(max_len))), rand_rat(rng));
  return r;
}

FSeries rand_fseries(Rng& rng, int p, int n, int terms, int max_deg) {
  FSeries r(p, n);
  r.add(FWord{}, rand_rat(rng));
  for (int t = 0; t < terms; ++t) {
    int deg = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_deg));
    int cpow = std::min(deg, static_cast<int>(rng() % 3));
    r.add(FWord{rand_word(rng, p, deg - cpow), cpow}, rand_rat(rng));
  }
  return r;
}

GWord rand_gword(Rng& rng, int p, int syllables) {
  std::vector<Syllable> s;
  for (int i = 0; i < syllables; ++i) {
    int e = static_cast<int>(rng() % 5) - 2;
    s.push_back({1 + static_cast<int>(rng() % static_cast<unsigned>(p)), e == 0 ? 1 : e});
  }
  return GWord(s);
}

FGWord rand_fgword(Rng& rng, int p, int syllables) {
  GWord b = rand_gword(rng, p, syllables);
  return FGWord{b, static_cast<int>(rng() % 5) - 2};
}

// Collects check outcomes of one suite.
class Suite {
 public:
  explicit Suite(std::string name) : name_(std::move(name)) {}

  // body(case_index) returns true on success.
  void check(const std::string& name, int cases, const std::function<bool(int)>& body) {
    Json failures = Json::array();
    int failed = 0;
    for (int i = 0; i < cases; ++i) {
      bool ok = false;
      std::string why;
      try {
        ok = body(i);
      } catch (const std::exception& e) {
        why = e.what();
      }
      if (!ok) {
        ++failed;
        if (failures.size() < 5) failures.push_back(why.empty() ? Json{{"case", i}} : Json{{"case", i}, {"error", why}});
      }
    }
    checks_.push_back(
        Json{{"name", name}, {"cases", cases}, {"failed", failed}, {"passed", failed == 0}, {"failures", failures}});
    if (failed) failed_names_.push_back(name_ + "/" + name);
  }

  Json report() const {
    return Json{{"name", name_}, {"passed", failed_names_.empty()}, {"checks", checks_}};
  }
  const std::vector<std::string>& failed_names() const { return failed_names_; }

 private:
  std::string name_;
  Json checks_ = Json::array();
  std::vector<std::string> failed_names_;
};

struct Context {
  const VerifyOptions& opt;
  bool mutated(const char* name) const { return opt.mutation && *opt.mutation == name; }
  Rng rng_for(std::size_t suite_index) const {
    std::seed_seq seq{static_cast<std::uint32_t>(opt.seed), static_cast<std::uint32_t>(opt.seed >> 32),
                      static_cast<std::uint32_t>(suite_index)};
    return Rng(seq);
  }
};

void suite_qseries(Suite& s, const Context& cx, Rng& rng) {
  const int n = 24;
  UniSeries sx = series_s(n);
  if (cx.mutated("s-series")) sx[3] += 1;
  s.check("s_defining_identity", 1, [&](int) {
    // s(X)(e^{-X} - 1) = 1 + (e^{-X} - 1)/X, the quotient computed by hand
    UniSeries em1 = series_exp(Rat(-1), n + 1);
    em1[0] = 0;
    UniSeries q(n);
    for (int k = 0; k <= n; ++k) q[k] = em1[k + 1];
    q[0] += 1;
    return (sx * em1.truncated(n)) == q;
  });
  s.check("s_parity", 1, [&](int) {
    UniSeries sum = sx + sx.reflected();
    UniSeries want(n);
    want[0] = -1;
    return sum == want;
  });
  s.check("bernoulli_constraint", 1, [&](int) { return validate_assoc_coeffs(AssocCoeffs::bernoulli_valid(17), 8).ok(); });
  s.check("phi_relation", std::max(1, cx.opt.trials / 10), [&](int) {
    AssocCoeffs c = AssocCoeffs::bernoulli_valid(17, rand_rat(rng));
    UniSeries phi = series_phi(c, 17);
    UniSeries lhs = phi.reflected() - phi;
    lhs[0] -= Rat(1, 2);
    return lhs == sx.truncated(17);
  });
}

void suite_hopf(Suite& s, const Context& cx, Rng& rng) {
  const int p = cx.opt.p, n = cx.opt.deg;
  s.check("coproduct_multiplicative", cx.opt.trials, [&](int) {
    TSeries a = rand_tseries(rng, p, n, 4, 4), b = rand_tseries(rng, p, n, 4, 4);
    return coproduct(a * b) == tensor_product(coproduct(a), coproduct(b));
  });
  s.check("antipode_convolution", cx.opt.trials, [&](int) {
    TSeries a = rand_tseries(rng, p, n, 4, 5);
    TSeries2 left = antipode_left(coproduct(a));
    if (cx.mutated("antipode")) {
      TSeries2 unsigned_left(p, n);
      TSeries2 cop = coproduct(a);
      for (const auto& [k, c] : cop.terms()) unsigned_left.add({reversed(k.first), k.second}, c);
      left = unsigned_left;
    }
    return multiply_legs(left) == counit(a) * t_unit(p, n);
  });
  s.check("exp_of_primitive_is_grouplike", cx.opt.trials, [&](int) {
    TSeries x(p, n);
    for (int i = 1; i <= p; ++i) x += rand_rat(rng) * t_letter(p, n, i);
    TSeries g = t_exp(x);
    return coproduct(g) == tensor(g, g) && t_log(g) == x;
  });
}

PairingFn suite_eta(const Context& cx, int p, int n) {
  if (!cx.mutated("eta-inner")) return eta_pairing(p, n);
  return odot_pairing() + rho_inner(s_of_minus_z(p, n) + make_rat(1, 2) * t_unit(p, n));
}

void suite_fox(Suite& s, const Context& cx, Rng& rng) {
  const int p = cx.opt.p, n = cx.opt.deg;
  PairingFn eta = suite_eta(cx, p, n);
  PairingFn eta_t = pairing_transpose(eta);
  PairingFn minus_one = rho_inner(-t_unit(p, n));
  s.check("fox_axioms", cx.opt.trials, [&](int) {
    TSeries a = rand_tseries(rng, p, n, 3, 4), b = rand_tseries(rng, p, n, 3, 4), c = rand_tseries(rng, p, n, 3, 4);
    auto [l, r] = fox_axiom_defects(eta, a, b, c);
    return l.is_zero() && r.is_zero();
  });
  s.check("transpose_sum_is_inner", cx.opt.trials, [&](int) {
    TSeries a = rand_tseries(rng, p, n, 4, 5), b = rand_tseries(rng, p, n, 4, 5);
    return eta(a, b) + eta_t(a, b) == minus_one(a, b);
  });
}

void suite_qder(Suite& s, const Context& cx, Rng& rng) {
  const int p = cx.opt.p, n = cx.opt.deg;
  PairingFn eta = eta_pairing(p, n);
  AssocCoeffs even;
  even.even_mode = true;
  AssocCoeffs general = AssocCoeffs::bernoulli_valid(n + 1, rand_rat(rng));
  for (const auto& [label, coeffs] : {std::pair<std::string, AssocCoeffs>{"even", even}, {"general", general}}) {
    QDerFn mu = mu_formal(coeffs, p, n);
    if (cx.mutated("mu-inner")) {
      auto [e1, e2] = mu_inner_params(coeffs, p, n);
      mu = xi_qder() + q_inner(e1 + t_letter(p, n, 1), e2);
    }
    QDerFn mu_t = qd_transpose(mu);
    s.check("quasi_derivation_" + label, cx.opt.trials, [&](int) {
      FSeries x = rand_fseries(rng, p, n, 4, 5), y = rand_fseries(rng, p, n, 4, 5);
      return mu(x * y) - mu(x) * fproject(y) - fproject(x) * mu(y) == eta(fproject(x), fproject(y));
    });
    s.check("transpose_" + label, cx.opt.trials, [&](int) {
      FSeries x = rand_fseries(rng, p, n, 4, 6);
      TSeries a = fproject(x);
      TSeries want = -mu(x) + a - counit(a) * t_unit(p, n);
      return mu_t(x) == want.truncated(n - 2);
    });
  }
}

void suite_cobracket(Suite& s, const Context& cx, Rng& rng) {
  const int p = cx.opt.p, n = cx.opt.deg;
  AssocCoeffs coeffs = AssocCoeffs::bernoulli_valid(n + 1, rand_rat(rng));
  auto [e1, e2] = mu_inner_params(coeffs, p, n);
  QDerFn q = q_inner(e1, e2);
  QDerFn xq = xi_qder();
  auto xi_claim = [&](const FSeries& x) {
    RedCycSeries2 lhs = delta_q_reduced(xq, x);
    RedCycSeries2 rhs = schedler_reduced(cyclic_project(fproject(x)));
    if (cx.mutated("schedler-sign")) rhs = -rhs;
    return equal_through(lhs, rhs, n - 1);
  };
  std::vector<FSeries> words;
  const int max_len = std::min(5, n);
  for (int len = 0; len <= max_len; ++len) {
    std::size_t count = 1;
    for (int k = 0; k < len; ++k) count *= static_cast<std::size_t>(p);
    for (std::size_t idx = 0; idx < count; ++idx) {
      Word w;
      for (std::size_t r = idx, k = 0; k < static_cast<std::size_t>(len); ++k, r /= static_cast<std::size_t>(p))
        w.push_back(static_cast<Letter>(1 + r % static_cast<std::size_t>(p)));
      for (int cpow = 0; cpow <= 2 && len + cpow <= n; ++cpow) {
        FSeries x(p, n);
        x.add(FWord{w, cpow}, 1);
        words.push_back(x);
      }
    }
  }
  s.check("inner_delta_vanishes_words", static_cast<int>(words.size()),
          [&](int i) { return delta_q_reduced(q, words[static_cast<std::size_t>(i)]).is_zero(); });
  s.check("xi_delta_is_schedler_words", static_cast<int>(words.size()),
          [&](int i) { return xi_claim(words[static_cast<std::size_t>(i)]); });
  s.check("inner_delta_vanishes_random", cx.opt.trials, [&](int) {
    return delta_q_reduced(q, rand_fseries(rng, p, n, 4, n)).is_zero();
  });
  s.check("xi_delta_is_schedler_random", cx.opt.trials, [&](int) { return xi_claim(rand_fseries(rng, p, n, 4, n)); });
  s.check("closed_forms", std::max(1, cx.opt.trials / 5), [&](int) {
    TSeries f1 = rand_tseries(rng, p, n, 3, 3), f2 = rand_tseries(rng, p, n, 3, 3);
    FSeries x = rand_fseries(rng, p, n, 3, n - 1);
    QDerFn qf = q_inner(f1, f2);
    bool d_ok = equal_through(d_q(qf, x), d_inner_closed(f1, f2, x), n - 2);
    bool delta_ok = equal_through(delta_q(qf, x), delta_inner_closed(f1 + f2, x), n - 2);
    return d_ok && delta_ok;
  });
  s.check("boundary_loops", p, [&](int i) {
    TSeries g = t_exp(t_letter(p, n, i + 1));
    CycSeries cg = cyclic_project(g);
    if (!schedler_reduced(cg).is_zero()) return false;
    for (int j = 1; j <= p; ++j)
      if (!necklace_bracket(cg, cyclic_project(t_exp(t_letter(p, n, j)))).is_zero()) return false;
    return true;
  });
}

void perturb(Expansion& e) {
  if (e.p >= 2 && e.trunc_deg >= 3) e.u[0].add(make_word({1, 2}), 1);
  else if (e.p >= 2) e.u[0].add(make_word({1}), 1);
}

void suite_expansion(Suite& s, const Context& cx, Rng& rng) {
  const int p = cx.opt.p, n = cx.opt.deg;
  Expansion zero = solve_special(p, n);
  Expansion seeded = solve_special(p, n, cx.opt.seed);
  if (cx.mutated("expansion-u")) perturb(seeded);
  s.check("boundary_is_sum", 2, [&](int i) { return boundary_defect(i == 0 ? zero : seeded).is_zero(); });
  if (p <= 2) {
    s.check("degree_one_normalization", 1, [&](int) {
      if (p == 1) return zero.u[0].is_zero();
      LieElem half_z2;
      half_z2.add(make_word({2}), Rat(1, 2));
      LieElem first, second;
      for (const auto& [w, c] : zero.u[0].coords)
        if (w.size() == 1) first.add(w, c);
      for (const auto& [w, c] : zero.u[1].coords)
        if (w.size() == 1) second.add(w, c);
      return first == half_z2 && second.is_zero();
    });
  }
  Theta th(seeded);
  s.check("invert_recovers_magnus", cx.opt.trials, [&](int) {
    GWord g = rand_gword(rng, p, 3);
    return th.invert(th.eval(g)) == magnus(g, p, n);
  });
}

void suite_surface(Suite& s, const Context& cx, Rng& rng) {
  const int p = cx.opt.p, n = std::min(cx.opt.deg, 8);
  const int trials = std::min(cx.opt.trials, 10);
  Expansion zero = solve_special(p, n);
  Expansion seeded = solve_special(p, n, cx.opt.seed);
  if (cx.mutated("expansion-u")) perturb(seeded);
  Theta th(seeded);
  AssocCoeffs coeffs = AssocCoeffs::bernoulli_valid(n + 1, rand_rat(rng));

  std::vector<GWord> gens{GWord::generator(1), GWord::generator(1, -1)};
  if (p >= 2) {
    gens.push_back(GWord::generator(2));
    gens.push_back(GWord::generator(1) * GWord::generator(2));
    gens.push_back(GWord::generator(2) * GWord::generator(1, -1));
  }
  std::vector<std::pair<GWord, GWord>> sample;
  for (const auto& a : gens)
    for (const auto& b : gens) sample.emplace_back(a, b);
  IndependenceReport rep = independence_check(zero, seeded, sample);
  s.check("expansion_independence", static_cast<int>(rep.pairs.size()),
          [&](int i) { return rep.pairs[static_cast<std::size_t>(i)].equal; });
  s.check("eta_transpose_identity", trials, [&](int) {
    return eta_transpose_defect(th, rand_gword(rng, p, 2), rand_gword(rng, p, 2)).is_zero();
  });
  s.check("mu_winding", 11, [&](int i) {
    int k = i - 5;
    return mu_group(th, coeffs, FGWord{GWord{}, k}) == Rat(-k) * galg_unit(p, n - 2);
  });
  s.check("mu_inverse_identity", trials, [&](int) {
    return mu_inverse_defect(th, coeffs, rand_fgword(rng, p, 2)).is_zero();
  });
  s.check("goldman_is_necklace", trials, [&](int) {
    GWord a = rand_gword(rng, p, 2), b = rand_gword(rng, p, 2);
    CycSeries lhs = theta_cyclic(th, goldman(th, a, b));
    CycSeries ta = cyclic_project(th.eval(a)), tb = cyclic_project(th.eval(b));
    CycSeries rhs = cx.mutated("goldman-order") ? necklace_bracket(tb, ta) : necklace_bracket(ta, tb);
    return equal_through(lhs, rhs, n - 2);
  });
}

using SuiteFn = void (*)(Suite&, const Context&, Rng&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"qseries", suite_qseries}, {"hopf", suite_hopf},           {"fox", suite_fox},
      {"qder", suite_qder},       {"cobracket", suite_cobracket}, {"expansion", suite_expansion},
      {"surface", suite_surface}};
  return r;
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, f] : registry()) v.push_back(n);
    return v;
  }();
  return names;
}

const std::vector<std::string>& verify_mutations() {
  static const std::vector<std::string> names{"s-series", "antipode",    "eta-inner",    "mu-inner",
                                              "schedler-sign", "expansion-u", "goldman-order"};
  return names;
}

Json run_verify(const VerifyOptions& opt) {
  if (opt.p < 1 || opt.p > 9) throw DomainError("verify: p must lie in 1..9");
  if (opt.deg < 4 || opt.deg > 12) throw DomainError("verify: deg must lie in 4..12");
  if (opt.trials < 1) throw DomainError("verify: trials must be positive");
  const auto& names = verify_suites();
  if (opt.suite != "all" && std::find(names.begin(), names.end(), opt.suite) == names.end())
    throw DomainError("verify: unknown suite '" + opt.suite + "'");
  if (opt.mutation) {
    const auto& m = verify_mutations();
    if (std::find(m.begin(), m.end(), *opt.mutation) == m.end())
      throw DomainError("verify: unknown mutation '" + *opt.mutation + "'");
  }
  Context cx{opt};
  Json suites = Json::array();
  Json failures = Json::array();
  for (std::size_t i = 0; i < registry().size(); ++i) {
    const auto& [name, fn] = registry()[i];
    if (opt.suite != "all" && opt.suite != name) continue;
    Suite s(name);
    Rng rng = cx.rng_for(i);
    fn(s, cx, rng);
    suites.push_back(s.report());
    for (const auto& f : s.failed_names()) failures.push_back(f);
  }
  Json report{{"suite", opt.suite},
              {"p", opt.p},
              {"deg", opt.deg},
              {"trials", opt.trials},
              {"seed", std::to_string(opt.seed)},
              {"prng", "mt19937_64"},
              {"suites", suites},
              {"failures", failures},
              {"passed", failures.empty()}};
  report["mutation"] = opt.mutation ? Json(*opt.mutation) : Json(nullptr);
  return report;
}

}  // namespace gtlab
