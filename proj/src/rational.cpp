#include "quiverdyn/rational.hpp"

#include <climits>
#include <stdexcept>

namespace quiverdyn {

Rat rat_pow(const Rat& x, long e) {
  if (e == 0) return Rat(1);
  if (e < 0) {
    if (x == 0) throw std::domain_error("rat_pow: zero base with negative exponent");
    return Rat(1) / rat_pow(x, -e);
  }
  Rat acc(1);
  Rat base = x;
  unsigned long n = static_cast<unsigned long>(e);
  while (n > 0) {
    if (n & 1) acc *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return acc;
}

long to_long(const Int& n) {
  if (n > LONG_MAX || n < LONG_MIN) throw std::overflow_error("integer exponent out of range");
  return n.convert_to<long>();
}

std::optional<Rat> parse_rational(const std::string& s) {
  if (s.empty()) return std::nullopt;
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int p(s.substr(0, slash));
    Int q(s.substr(slash + 1));
    if (q == 0) return std::nullopt;
    return Rat(p, q);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::string rat_str(const Rat& q) {
  Int d = denominator_of(q);
  if (d == 1) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + d.str();
}

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;  // truncated
  if (q * b != a && ((a < 0) != (b < 0))) --q;
  return q;
}

Int content(const std::vector<Int>& v) {
  Int g(0);
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
  return boost::multiprecision::abs(g);
}

std::vector<Int> primitive_integer(std::vector<Int> v) {
  Int g = content(v);
  if (g == 0) return v;
  int sign = 0;
  for (auto it = v.rbegin(); it != v.rend(); ++it) {
    if (*it != 0) {
      sign = (*it > 0) ? 1 : -1;
      break;
    }
  }
  if (sign < 0) g = -g;
  for (Int& x : v) x /= g;
  return v;
}

std::vector<Int> primitive_integer(const std::vector<Rat>& v) {
  Int lcm_den(1);
  for (const Rat& q : v) lcm_den = boost::multiprecision::lcm(lcm_den, denominator_of(q));
  std::vector<Int> w;
  w.reserve(v.size());
  for (const Rat& q : v) w.push_back(numerator_of(q) * (lcm_den / denominator_of(q)));
  return primitive_integer(std::move(w));
}

}  // namespace quiverdyn
