#include "gtlab/fox_group.hpp"

#include "gtlab/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace gtlab {

GWord::GWord(const std::vector<Syllable>& syllables) {
  for (const auto& s : syllables) push(s);
}

GWord GWord::generator(int i, int exponent) {
  if (i < 1) throw DomainError("generators are 1-based");
  GWord w;
  w.push({i, exponent});
  return w;
}

GWord GWord::z(int exponent) {
  GWord w;
  w.push({kZ, exponent});
  return w;
}

void GWord::push(Syllable s) {
  if (s.exponent == 0) return;
  if (!syl_.empty() && syl_.back().symbol == s.symbol) {
    syl_.back().exponent += s.exponent;
    if (syl_.back().exponent == 0) syl_.pop_back();
    return;
  }
  syl_.push_back(s);
}

bool GWord::has_z() const {
  return std::any_of(syl_.begin(), syl_.end(), [](const Syllable& s) { return s.symbol == kZ; });
}

int GWord::length() const {
  int n = 0;
  for (const auto& s : syl_) n += std::abs(s.exponent);
  return n;
}

GWord GWord::inverse() const {
  GWord r;
  for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) r.syl_.push_back({it->symbol, -it->exponent});
  return r;
}

std::vector<int> GWord::letters() const {
  std::vector<int> out;
  for (const auto& s : syl_)
    for (int k = 0; k < std::abs(s.exponent); ++k) out.push_back(s.exponent > 0 ? s.symbol : -s.symbol);
  return out;
}

GWord GWord::from_letters(const std::vector<int>& letters) {
  GWord w;
  for (int l : letters) {
    if (l == 0) throw DomainError("from_letters: z has no signed letter encoding");
    w.push({std::abs(l), l > 0 ? 1 : -1});
  }
  return w;
}

std::string GWord::to_string() const {
  if (syl_.empty()) return "1";
  std::string out;
  for (const auto& s : syl_) {
    if (!out.empty()) out += "*";
    out += s.symbol == kZ ? std::string("z") : "x" + std::to_string(s.symbol);
    if (s.exponent != 1) out += "^" + std::to_string(s.exponent);
  }
  return out;
}

GWord operator*(const GWord& a, const GWord& b) {
  GWord r = a;
  for (const auto& s : b.syl_) r.push(s);
  return r;
}

GWord conjugacy_canonical(const GWord& w) {
  std::vector<int> l = w.letters();
  if (w.has_z()) throw DomainError("conjugacy_canonical: z-syllables not supported");
  std::size_t lo = 0, hi = l.size();
  while (hi - lo >= 2 && l[lo] == -l[hi - 1]) {
    ++lo;
    --hi;
  }
  std::vector<int> core(l.begin() + static_cast<long>(lo), l.begin() + static_cast<long>(hi));
  std::vector<int> best = core;
  for (std::size_t i = 1; i < core.size(); ++i) {
    std::vector<int> rot(core.begin() + static_cast<long>(i), core.end());
    rot.insert(rot.end(), core.begin(), core.begin() + static_cast<long>(i));
    if (rot < best) best = std::move(rot);
  }
  return GWord::from_letters(best);
}

std::string FGWord::to_string() const {
  std::string s = base.to_string();
  if (winding == 0) return s;
  std::string f = winding == 1 ? "F" : "F^" + std::to_string(winding);
  return base.is_identity() ? f : s + "*" + f;
}

GAlg GAlg::of(const GWord& w, const Rat& c) {
  GAlg x;
  x.add(w, c);
  return x;
}

Rat GAlg::coeff(const GWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rat(0) : it->second;
}

void GAlg::add(const GWord& w, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GAlg& GAlg::operator+=(const GAlg& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

GAlg& GAlg::operator-=(const GAlg& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

GAlg operator*(const GAlg& a, const GAlg& b) {
  GAlg r;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) r.add(wa * wb, ca * cb);
  return r;
}

GAlg operator*(const Rat& c, GAlg a) {
  if (c == 0) return GAlg{};
  for (auto& kv : a.terms_) kv.second *= c;
  return a;
}

std::string GAlg::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += format_rat(c) + " " + w.to_string();
  }
  return out;
}

Rat augment(const GAlg& x) {
  Rat s = 0;
  for (const auto& [w, c] : x.terms()) s += c;
  return s;
}

GAlg fox_partial_z(const GAlg& x) {
  GAlg out;
  for (const auto& [w, c] : x.terms()) {
    // d(s_1...s_n) = sum_k s_1...s_{k-1} d(s_k), since every group element
    // has augmentation 1
    GWord prefix;
    for (const auto& s : w.syllables()) {
      if (s.symbol == GWord::kZ) {
        if (s.exponent > 0) {
          for (int j = 0; j < s.exponent; ++j) out.add(prefix * GWord::z(j), c);
        } else {
          for (int j = 1; j <= -s.exponent; ++j) out.add(prefix * GWord::z(-j), -c);
        }
      }
      prefix = prefix * GWord(std::vector<Syllable>{s});
    }
  }
  return out;
}

GAlg proj_p(const GAlg& x) {
  GAlg out;
  for (const auto& [w, c] : x.terms()) {
    std::vector<Syllable> kept;
    for (const auto& s : w.syllables())
      if (s.symbol != GWord::kZ) kept.push_back(s);
    out.add(GWord(kept), c);
  }
  return out;
}

}  // namespace gtlab
