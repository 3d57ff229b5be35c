#include "gtlab/rational.hpp"

#include "gtlab/errors.hpp"

#include <cctype>

namespace gtlab {

Rat make_rat(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  std::string_view num_digits = num;
  if (!num_digits.empty() && (num_digits[0] == '-' || num_digits[0] == '+')) num_digits.remove_prefix(1);
  if (!all_digits(num_digits)) throw ParseError(0, {"integer"}, "bad rational numerator: '" + std::string(text) + "'");
  if (!all_digits(den))
    throw ParseError(slash + 1, {"positive integer"}, "bad rational denominator: '" + std::string(text) + "'");
  std::string n(num);
  if (!n.empty() && n[0] == '+') n.erase(0, 1);
  mpz_class zn(n), zd{std::string(den)};
  if (zd == 0) throw ParseError(slash + 1, {"positive integer"}, "zero denominator");
  Rat r(zn, zd);
  r.canonicalize();
  return r;
}

std::string format_rat(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rat(b);
}

Rat factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rat(f);
}

}  // namespace gtlab
