#include "gtlab/word.hpp"

#include "gtlab/errors.hpp"

namespace gtlab {

Word make_word(std::initializer_list<int> letters) {
  Word w;
  for (int l : letters) {
    if (l < 1 || l > 255) throw DomainError("letter out of range: " + std::to_string(l));
    w.push_back(static_cast<Letter>(l));
  }
  return w;
}

Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (Letter l : w) s += "z" + std::to_string(static_cast<int>(l));
  return s;
}

Word min_rotation(const Word& w) {
  Word best = w;
  Word doubled = w + w;
  for (std::size_t i = 1; i < w.size(); ++i) {
    // compare in place before materializing
    if (doubled.compare(i, w.size(), best) < 0) best = doubled.substr(i, w.size());
  }
  return best;
}

RedCycWord::RedCycWord(const CycWord& c) : c_(c) {
  if (c_.empty()) throw DomainError("the unit class is not a reduced cyclic word");
}

}  // namespace gtlab
