#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace fedlab {

/// Exact rational. mpq_class keeps values canonical (gcd 1, positive
/// denominator) after every arithmetic operation.
using Rat = mpq_class;

/// Parses "[-]p" or "[-]p/q" with q > 0. Throws Error(parse_error).
Rat parse_rat(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rat& r);

/// p/q from 64-bit integers (mpq_class has no long long constructor).
Rat rat(long long p, long long q = 1);
Rat ceil_div(long long num, long long den);
Rat sum(const std::vector<Rat>& values);

}  // namespace fedlab
