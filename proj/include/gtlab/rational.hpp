#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gtlab {

// Exact rational; gmpxx keeps results of arithmetic in canonical form
// (reduced, positive denominator).
using Rat = mpq_class;

Rat make_rat(long num, long den = 1);

// Accepts "n", "n/d" with optional sign on n. Throws ParseError.
Rat parse_rat(std::string_view text);

// Always "num/den", e.g. "3/1", "-1/12".
std::string format_rat(const Rat& r);

Rat binomial(int n, int k);
Rat factorial(int n);

}  // namespace gtlab
