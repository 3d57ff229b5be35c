#include "gtlab/json_io.hpp"
#include "gtlab/surface_ops.hpp"
#include "gtlab/verify.hpp"
#include "gtlab/word_parser.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

using namespace gtlab;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kSolver = 3 };

struct Flags {
  int p = 0;
  int deg = 0;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string expansion;
  std::string assoc;
  bool even = false;
  std::string a, b, word;
  int winding = 0;
  std::string suite = "all";
  int trials = 50;
  std::string mutate;
  std::string in;
  std::string op = "identity";
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::optional<std::uint64_t> resolve_seed(const Flags& f) {
  if (f.seed) return f.seed;
  const char* env = std::getenv("GT_LAB_SEED");
  if (!env || !*env) return std::nullopt;
  std::string text(env);
  try {
    std::size_t used = 0;
    if (text[0] == '-') throw std::invalid_argument(text);
    std::uint64_t v = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError("GT_LAB_SEED must be a non-negative decimal integer, got '" + text + "'");
  }
}

void emit(const Flags& f, const Json& j) {
  std::string text = dump_json(j);
  if (f.out.empty())
    std::cout << text;
  else
    write_text_file(f.out, text);
}

Expansion load_expansion(const Flags& f) {
  if (f.expansion.empty()) throw UsageError("--expansion is required");
  return expansion_from_json(read_json_file(f.expansion));
}

AssocCoeffs load_assoc(const Flags& f) {
  if (f.even && !f.assoc.empty()) throw UsageError("--assoc and --even are exclusive");
  if (f.even) {
    AssocCoeffs c;
    c.even_mode = true;
    return c;
  }
  if (f.assoc.empty()) throw UsageError("one of --assoc or --even is required");
  return assoc_from_json(read_json_file(f.assoc));
}

GWord required_word(const std::string& text, const char* flag, int p) {
  if (text.empty()) throw UsageError(std::string(flag) + " is required");
  return parse_word(text, p);
}

FGWord framed_word(const Flags& f, int p) {
  if (f.word.empty()) throw UsageError("--word is required");
  FGWord w = parse_framed_word(f.word, p);
  w.winding += f.winding;
  return w;
}

Json with_metadata(Json j, const Expansion& e) {
  j["metadata"] = expansion_metadata(e);
  return j;
}

int cmd_expand(const Flags& f) {
  if (f.p < 1) throw UsageError("--p must be a positive integer");
  if (f.deg < 1) throw UsageError("--deg must be a positive integer");
  emit(f, to_json(solve_special(f.p, f.deg, resolve_seed(f))));
  return kOk;
}

int cmd_theta(const Flags& f) {
  Expansion e = load_expansion(f);
  FGWord w = framed_word(f, e.p);
  Theta th(e);
  Json j = w.winding == 0 ? to_json(th.eval(w.base)) : to_json(th.eval_framed(w));
  emit(f, with_metadata(j, e));
  return kOk;
}

int cmd_eta(const Flags& f) {
  Expansion e = load_expansion(f);
  GWord a = required_word(f.a, "--a", e.p), b = required_word(f.b, "--b", e.p);
  emit(f, with_metadata(to_json(eta_group(e, a, b)), e));
  return kOk;
}

int cmd_mu(const Flags& f) {
  Expansion e = load_expansion(f);
  AssocCoeffs c = load_assoc(f);
  emit(f, with_metadata(to_json(mu_group(e, c, framed_word(f, e.p))), e));
  return kOk;
}

int cmd_goldman(const Flags& f) {
  Expansion e = load_expansion(f);
  GWord a = required_word(f.a, "--a", e.p), b = required_word(f.b, "--b", e.p);
  Theta th(e);
  ClassSum g = goldman(th, a, b);
  Json j = to_json(g);
  j["theta_image"] = to_json(theta_cyclic(th, g));
  emit(f, with_metadata(j, e));
  return kOk;
}

int cmd_cobracket(const Flags& f) {
  Expansion e = load_expansion(f);
  FGWord w = framed_word(f, e.p);
  Theta th(e);
  RedCycSeries2 d = turaev_cobracket(th, w.base);
  Json j = to_json(d);
  if (f.even || !f.assoc.empty()) {
    // the same value through the reduced delta of mu
    QDerFn mu = mu_formal(load_assoc(f), e.p, e.trunc_deg);
    RedCycSeries2 via_mu = delta_q_reduced(mu, th.eval_framed(w));
    int k = std::min(via_mu.trunc_deg(), d.trunc_deg());
    j["via_mu_agrees"] = equal_through(via_mu, d, k);
    j["via_mu_trunc_deg"] = k;
  }
  emit(f, with_metadata(j, e));
  return kOk;
}

template <class S>
Json apply_op(const S& x, const std::string& op) {
  if (op == "identity") return to_json(x);
  if (op == "antipode") return to_json(antipode(x));
  if constexpr (std::is_same_v<S, TSeries>) {
    if (op == "exp") return to_json(t_exp(x));
    if (op == "log") return to_json(t_log(x));
    if (op == "cyclic") return to_json(cyclic_project(x));
  } else {
    if (op == "exp") return to_json(f_exp(x));
    if (op == "log") return to_json(f_log(x));
    if (op == "project") return to_json(fproject(x));
  }
  throw UsageError("--op '" + op + "' does not apply to this series");
}

int cmd_series(const Flags& f) {
  if (f.in.empty()) throw UsageError("--in is required");
  Json j = read_json_file(f.in);
  emit(f, is_framed_series(j) ? apply_op(fseries_from_json(j), f.op) : apply_op(tseries_from_json(j), f.op));
  return kOk;
}

int cmd_verify(const Flags& f) {
  VerifyOptions o;
  o.suite = f.suite;
  o.p = f.p ? f.p : 2;
  o.deg = f.deg ? f.deg : 8;
  o.trials = f.trials;
  o.seed = resolve_seed(f).value_or(1);
  if (!f.mutate.empty()) o.mutation = f.mutate;
  Json report;
  try {
    report = run_verify(o);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  emit(f, report);
  if (!report_passed(report)) {
    for (const auto& name : report.at("failures")) std::cerr << "FAILED " << name.get<std::string>() << "\n";
    return kVerifyFailed;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gtlab: loop operations on a punctured disk through formal expansions"};
  app.require_subcommand(1);
  Flags f;

  auto common_seed = [&](CLI::App* c) { c->add_option("--seed", f.seed, "PRNG seed (falls back to GT_LAB_SEED)"); };
  auto out = [&](CLI::App* c) { c->add_option("--out", f.out, "write the JSON document to this file"); };
  auto expansion = [&](CLI::App* c) { c->add_option("--expansion", f.expansion, "expansion JSON file")->required(); };
  auto assoc = [&](CLI::App* c) {
    c->add_option("--assoc", f.assoc, "associator coefficient JSON file");
    c->add_flag("--even", f.even, "use an even associator");
  };

  auto* expand = app.add_subcommand("expand", "solve for a special expansion");
  expand->add_option("--p", f.p, "number of punctures")->required();
  expand->add_option("--deg", f.deg, "truncation degree")->required();
  common_seed(expand);
  out(expand);

  auto* theta = app.add_subcommand("theta", "image of a word under the expansion");
  expansion(theta);
  theta->add_option("--word", f.word, "word, e.g. x1*x2^-1*F^2")->required();
  theta->add_option("--winding", f.winding, "extra framing winding");
  out(theta);

  auto* eta = app.add_subcommand("eta", "homotopy intersection pairing in the group ring");
  expansion(eta);
  eta->add_option("--a", f.a, "first word")->required();
  eta->add_option("--b", f.b, "second word")->required();
  out(eta);

  auto* mu = app.add_subcommand("mu", "self-intersection of a framed word");
  expansion(mu);
  assoc(mu);
  mu->add_option("--word", f.word, "framed word")->required();
  mu->add_option("--winding", f.winding, "extra framing winding");
  out(mu);

  auto* goldman_cmd = app.add_subcommand("goldman", "Goldman bracket of two loops");
  expansion(goldman_cmd);
  goldman_cmd->add_option("--a", f.a, "first word")->required();
  goldman_cmd->add_option("--b", f.b, "second word")->required();
  out(goldman_cmd);

  auto* cobracket = app.add_subcommand("cobracket", "Turaev cobracket in expansion coordinates");
  expansion(cobracket);
  assoc(cobracket);
  cobracket->add_option("--word", f.word, "word")->required();
  cobracket->add_option("--winding", f.winding, "extra framing winding");
  out(cobracket);

  auto* series = app.add_subcommand("series", "read, transform and rewrite a series file");
  series->add_option("--in", f.in, "series JSON file")->required();
  series->add_option("--op", f.op, "identity | exp | log | antipode | cyclic | project");
  out(series);

  auto* verify = app.add_subcommand("verify", "run the invariant suites");
  verify->add_option("--suite", f.suite, "all or one suite name");
  verify->add_option("--p", f.p, "number of punctures (default 2)");
  verify->add_option("--deg", f.deg, "truncation degree (default 8)");
  verify->add_option("--trials", f.trials, "random cases per check (default 50)");
  verify->add_option("--mutate", f.mutate, "break one named invariant (smoke test)");
  common_seed(verify);
  out(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*expand) return cmd_expand(f);
    if (*theta) return cmd_theta(f);
    if (*eta) return cmd_eta(f);
    if (*mu) return cmd_mu(f);
    if (*goldman_cmd) return cmd_goldman(f);
    if (*cobracket) return cmd_cobracket(f);
    if (*series) return cmd_series(f);
    if (*verify) return cmd_verify(f);
  } catch (const SolverInconsistent& e) {
    std::cerr << "solver inconsistency: " << e.what() << "\n";
    return kSolver;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
