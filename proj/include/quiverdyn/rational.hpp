#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace quiverdyn {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline Int numerator_of(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int denominator_of(const Rat& q) { return boost::multiprecision::denominator(q); }

/// Decimal digit count of |n|; 1 for zero.
inline std::size_t digits10(const Int& n) {
  if (n == 0) return 1;
  return mpz_sizeinbase(n.backend().data(), 10);
}

/// x^e for an exponent of either sign. Requires x != 0 when e < 0.
Rat rat_pow(const Rat& x, long e);

inline Rat generic_pow(const Rat& x, long e) { return rat_pow(x, e); }

/// Range-checked conversion for exponents held as big integers.
long to_long(const Int& n);

/// Parses "p" or "p/q". Rejects q == 0 and any trailing garbage.
std::optional<Rat> parse_rational(const std::string& s);

/// "p" when the denominator is 1, "p/q" otherwise.
std::string rat_str(const Rat& q);

/// Quotient rounded toward minus infinity. b != 0.
Int floor_div(const Int& a, const Int& b);

/// gcd of |v_i|; 0 for the zero vector.
Int content(const std::vector<Int>& v);

/// Scales to an integer vector with content 1, oriented so the last nonzero
/// entry is positive. The zero vector maps to itself.
std::vector<Int> primitive_integer(const std::vector<Rat>& v);
std::vector<Int> primitive_integer(std::vector<Int> v);

}  // namespace quiverdyn
