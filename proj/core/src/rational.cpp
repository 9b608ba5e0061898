#include "nga/rational.hpp"

#include "nga/errors.hpp"

namespace nga {

Rational rat(long long n, long long d) { return rat(BigInt(n), BigInt(d)); }

Rational rat(const BigInt& n, const BigInt& d) {
  if (d == 0) throw InputError("division by zero");
  // the adaptor reduces by the gcd but insists on a positive denominator
  if (d < 0) return Rational(BigInt(-n), BigInt(-d));
  return Rational(n, d);
}

BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

std::string fraction_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string pretty_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return fraction_string(r);
}

Rational parse_rational(std::string_view text) {
  const auto bad = [&] { return InputError("malformed rational: '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  const auto parse_int = [&](std::string_view part) -> BigInt {
    if (part.empty()) throw bad();
    std::size_t i = (part[0] == '+' || part[0] == '-') ? 1 : 0;
    if (i == part.size()) throw bad();
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') throw bad();
    return BigInt(std::string(part));
  };
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const BigInt num = parse_int(text.substr(0, slash));
  const BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw InputError("division by zero");
  return Rational(num, den);
}

}  // namespace nga
