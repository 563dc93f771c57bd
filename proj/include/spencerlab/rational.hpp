#pragma once

#include <gmpxx.h>

#include <string>

namespace spencerlab {

// mpq_class keeps values canonical (lowest terms, positive denominator) after
// every arithmetic operation.
using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace spencerlab
