#pragma once

#include <gmpxx.h>

#include <string>

namespace cochar {

// Exact arithmetic only: every coefficient in this library is an Int or a Rat.
using Int = mpz_class;
using Rat = mpq_class;

// "num/den" with den omitted when it is 1.
std::string rat_to_string(const Rat& r);

// Parses "num", "num/den" or a plain decimal integer string. Rejects anything
// else (in particular anything float-like).
Rat rat_from_string(const std::string& s);

Int int_from_string(const std::string& s);

Int binomial(long n, long k);
Int factorial(long n);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

}  // namespace cochar
