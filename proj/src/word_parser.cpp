#include "gtlab/word_parser.hpp"

#include "gtlab/errors.hpp"

#include <cctype>
#include <charconv>
#include <limits>

namespace gtlab {

namespace {

class Parser {
 public:
  Parser(std::string_view text, int max_gen, bool framed) : s_(text), max_gen_(max_gen), framed_(framed) {}

  FGWord parse() {
    FGWord out;
    if (s_ == "1") return out;
    term(out);
    while (pos_ < s_.size()) {
      if (s_[pos_] != '*') fail({"*", "end of input"}, "unexpected character");
      ++pos_;
      term(out);
    }
    return out;
  }

 private:
  [[noreturn]] void fail(std::vector<std::string> expected, const std::string& what) const {
    std::string msg = what + " at offset " + std::to_string(pos_) + ", expected one of:";
    for (const auto& e : expected) msg += " '" + e + "'";
    throw ParseError(pos_, std::move(expected), msg);
  }

  std::vector<std::string> term_start() const {
    return framed_ ? std::vector<std::string>{"x", "F"} : std::vector<std::string>{"x"};
  }

  void term(FGWord& out) {
    if (pos_ >= s_.size()) fail(term_start(), "unexpected end of input");
    char c = s_[pos_];
    if (c == 'x') {
      ++pos_;
      std::size_t at = pos_;
      long g = integer(false);
      if (g < 1 || (max_gen_ > 0 && g > max_gen_)) {
        pos_ = at;
        std::string range = max_gen_ > 0 ? "1.." + std::to_string(max_gen_) : "a positive index";
        fail({"generator index " + range}, "generator x" + std::to_string(g) + " out of range");
      }
      out.base = out.base * GWord::generator(static_cast<int>(g), exponent());
    } else if (c == 'F' && framed_) {
      ++pos_;
      out.winding += exponent();
    } else {
      fail(term_start(), "unexpected character");
    }
  }

  int exponent() {
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      return static_cast<int>(integer(true));
    }
    return 1;
  }

  long integer(bool allow_sign) {
    std::size_t start = pos_;
    if (allow_sign && pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = digits;
      fail({allow_sign ? "integer" : "digit"}, "missing number");
    }
    long v = 0;
    auto [p, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, v);
    if (ec != std::errc() || v > std::numeric_limits<int>::max() || v < -std::numeric_limits<int>::max()) {
      pos_ = start;
      fail({"integer"}, "number out of range");
    }
    (void)p;
    return v;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  int max_gen_;
  bool framed_;
};

}  // namespace

FGWord parse_framed_word(std::string_view text, int max_generator) {
  return Parser(text, max_generator, true).parse();
}

GWord parse_word(std::string_view text, int max_generator) {
  return Parser(text, max_generator, false).parse().base;
}

}  // namespace gtlab
