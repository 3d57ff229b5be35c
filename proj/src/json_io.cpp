#include "gtlab/json_io.hpp"

#include <fstream>
#include <sstream>

namespace gtlab {

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& msg) {
  throw ParseError(0, {field}, "invalid JSON document: " + msg);
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) bad(key, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(key, std::string("missing field '") + key + "'");
  return *it;
}

int get_int(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (!v.is_number_integer()) bad(key, std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

Rat get_rat(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (!v.is_string()) bad(key, std::string("field '") + key + "' must be a \"num/den\" string");
  return parse_rat(v.get<std::string>());
}

const Json& get_array(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (!v.is_array()) bad(key, std::string("field '") + key + "' must be an array");
  return v;
}

Json word_json(const Word& w) {
  Json a = Json::array();
  for (Letter l : w) a.push_back(static_cast<int>(l));
  return a;
}

Word word_from(const Json& j, const char* key, int p) {
  Word w;
  for (const Json& v : get_array(j, key)) {
    if (!v.is_number_integer()) bad(key, "letters must be integers");
    int l = v.get<int>();
    if (l < 1 || l > p) bad(key, "letter " + std::to_string(l) + " outside 1.." + std::to_string(p));
    w.push_back(static_cast<Letter>(l));
  }
  return w;
}

template <class Key>
Json header(const Series<Key>& x) {
  return Json{{"p", x.p()}, {"trunc_deg", x.trunc_deg()}, {"terms", Json::array()}};
}

std::pair<int, int> read_header(const Json& j) {
  int p = get_int(j, "p"), n = get_int(j, "trunc_deg");
  if (p < 1 || p > 255) bad("p", "p must lie in 1..255");
  if (n < 0) bad("trunc_deg", "negative truncation degree");
  return {p, n};
}

template <class Key>
void add_term(Series<Key>& s, const Key& k, const Rat& c) {
  if (degree(k) > s.trunc_deg()) bad("terms", "term above the truncation degree");
  if (s.terms().count(k)) bad("terms", "repeated term");
  s.add(k, c);
}

}  // namespace

Json to_json(const TSeries& x) {
  Json j = header(x);
  for (const auto& [w, c] : x.terms()) j["terms"].push_back({{"word", word_json(w)}, {"coeff", format_rat(c)}});
  return j;
}

Json to_json(const FSeries& x) {
  Json j = header(x);
  for (const auto& [f, c] : x.terms())
    j["terms"].push_back({{"word", word_json(f.word)}, {"cpow", f.cpow}, {"coeff", format_rat(c)}});
  return j;
}

Json to_json(const CycSeries& x) {
  Json j = header(x);
  j["cyclic"] = true;
  for (const auto& [w, c] : x.terms()) j["terms"].push_back({{"word", word_json(w.word())}, {"coeff", format_rat(c)}});
  return j;
}

Json to_json(const RedCycSeries2& x) {
  Json j = header(x);
  j["cyclic"] = true;
  for (const auto& [k, c] : x.terms())
    j["terms"].push_back(
        {{"left", word_json(k.first.word())}, {"right", word_json(k.second.word())}, {"coeff", format_rat(c)}});
  return j;
}

bool is_framed_series(const Json& j) {
  for (const Json& t : get_array(j, "terms"))
    if (t.is_object() && t.contains("cpow")) return true;
  return false;
}

TSeries tseries_from_json(const Json& j) {
  auto [p, n] = read_header(j);
  TSeries s(p, n);
  for (const Json& t : get_array(j, "terms")) {
    if (t.contains("cpow")) bad("cpow", "framed term in a tensor series");
    add_term(s, word_from(t, "word", p), get_rat(t, "coeff"));
  }
  return s;
}

FSeries fseries_from_json(const Json& j) {
  auto [p, n] = read_header(j);
  FSeries s(p, n);
  for (const Json& t : get_array(j, "terms")) {
    int cpow = t.contains("cpow") ? get_int(t, "cpow") : 0;
    if (cpow < 0) bad("cpow", "negative C power");
    add_term(s, FWord{word_from(t, "word", p), cpow}, get_rat(t, "coeff"));
  }
  return s;
}

Json to_json(const AssocCoeffs& c) {
  Json q = Json::object();
  for (const auto& [i, v] : c.q) q[std::to_string(i)] = format_rat(v);
  return Json{{"even_mode", c.even_mode}, {"q", q}};
}

AssocCoeffs assoc_from_json(const Json& j) {
  AssocCoeffs c;
  if (j.contains("even_mode")) {
    if (!j["even_mode"].is_boolean()) bad("even_mode", "even_mode must be a boolean");
    c.even_mode = j["even_mode"].get<bool>();
  }
  const Json& q = member(j, "q");
  if (!q.is_object()) bad("q", "q must be an object");
  for (const auto& [k, v] : q.items()) {
    int idx = 0;
    try {
      std::size_t used = 0;
      idx = std::stoi(k, &used);
      if (used != k.size()) throw std::invalid_argument(k);
    } catch (const std::exception&) {
      bad("q", "coefficient index '" + k + "' is not an integer");
    }
    if (idx < 1) bad("q", "coefficient index must be positive");
    if (!v.is_string()) bad("q", "coefficients must be \"num/den\" strings");
    c.q[idx] = parse_rat(v.get<std::string>());
  }
  return c;
}

Json to_json(const Expansion& e) {
  Json u = Json::array();
  for (const auto& ui : e.u) {
    Json terms = Json::array();
    for (const auto& [w, c] : ui.coords) terms.push_back({{"lyndon", word_json(w)}, {"coeff", format_rat(c)}});
    u.push_back(terms);
  }
  Json j{{"p", e.p}, {"trunc_deg", e.trunc_deg}, {"nu_convention", e.nu_convention}, {"u", u}};
  j["seed"] = e.seed ? Json(std::to_string(*e.seed)) : Json(nullptr);
  return j;
}

Expansion expansion_from_json(const Json& j) {
  Expansion e;
  std::tie(e.p, e.trunc_deg) = read_header(j);
  if (e.trunc_deg < 1) bad("trunc_deg", "expansion degree must be positive");
  if (j.contains("nu_convention")) {
    if (j["nu_convention"] != "z1..zp") bad("nu_convention", "unsupported boundary convention");
  }
  const Json& u = get_array(j, "u");
  if (static_cast<int>(u.size()) != e.p) bad("u", "expected one conjugator per puncture");
  for (const Json& ui : u) {
    if (!ui.is_array()) bad("u", "each conjugator must be an array of terms");
    LieElem x;
    for (const Json& t : ui) {
      Word w = word_from(t, "lyndon", e.p);
      if (!is_lyndon(w)) bad("lyndon", "'" + to_string(w) + "' is not a Lyndon word");
      if (degree(w) >= e.trunc_deg) bad("lyndon", "conjugator term of degree >= trunc_deg");
      if (x.coords.count(w)) bad("lyndon", "repeated term");
      x.add(w, get_rat(t, "coeff"));
    }
    e.u.push_back(std::move(x));
  }
  if (j.contains("seed") && !j["seed"].is_null()) {
    const Json& s = j["seed"];
    if (!s.is_string()) bad("seed", "seed must be a decimal string or null");
    try {
      std::size_t used = 0;
      std::string text = s.get<std::string>();
      if (text.empty() || text[0] == '-') throw std::invalid_argument(text);
      e.seed = std::stoull(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
    } catch (const std::exception&) {
      bad("seed", "seed must be a decimal string");
    }
  }
  return e;
}

Json to_json(const GAlgTrunc& x) {
  Json terms = Json::array();
  for (const auto& [w, c] : x.mono.terms()) terms.push_back({{"mono", word_json(w)}, {"coeff", format_rat(c)}});
  return Json{{"basis", "zeta_minus_one"}, {"p", x.p()}, {"trusted_deg", x.trusted_deg()}, {"terms", terms}};
}

GAlgTrunc galg_trunc_from_json(const Json& j) {
  if (member(j, "basis") != "zeta_minus_one") bad("basis", "unsupported basis");
  int p = get_int(j, "p"), k = get_int(j, "trusted_deg");
  if (p < 1 || p > 255) bad("p", "p must lie in 1..255");
  if (k < 0) bad("trusted_deg", "negative trusted degree");
  GAlgTrunc x(p, k);
  for (const Json& t : get_array(j, "terms")) add_term(x.mono, word_from(t, "mono", p), get_rat(t, "coeff"));
  return x;
}

Json to_json(const ClassSum& x) {
  Json terms = Json::array();
  for (const auto& [g, c] : x.classes.terms()) terms.push_back({{"class", g.to_string()}, {"coeff", format_rat(c)}});
  return Json{{"trusted_deg", x.trusted_deg}, {"classes", terms}};
}

Json to_json(const IndependenceReport& r) {
  Json pairs = Json::array();
  for (const auto& pc : r.pairs) {
    Json e{{"a", pc.a.to_string()}, {"b", pc.b.to_string()}, {"equal", pc.equal}};
    e["deviation_deg"] = pc.deviation_deg ? Json(*pc.deviation_deg) : Json(nullptr);
    pairs.push_back(e);
  }
  return Json{{"trusted_deg", r.trusted_deg}, {"all_equal", r.all_equal()}, {"pairs", pairs}};
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.byte, {"JSON value"}, e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, {"readable file"}, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
  if (!out) throw Error("write to '" + path + "' failed");
}

Json expansion_metadata(const Expansion& e) {
  Json m{{"expansion", "solved_special"}, {"theta_z", false}, {"p", e.p}, {"trunc_deg", e.trunc_deg}};
  m["seed"] = e.seed ? Json(std::to_string(*e.seed)) : Json(nullptr);
  return m;
}

}  // namespace gtlab
