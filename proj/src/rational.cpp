#include "freiman/rational.hpp"

#include "freiman/errors.hpp"

namespace freiman {

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw InvalidArgument("zero denominator in rational '" + text + "'");
    return Rational(BigInt(text.substr(0, slash)), den);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw InvalidArgument("malformed rational '" + text + "'");
  }
}

BigInt ceil_sqrt(const BigInt& v) {
  if (v <= 0) return 0;
  BigInt n = boost::multiprecision::sqrt(v);
  if (n * n < v) ++n;
  return n;
}

BigInt ceil_sqrt(const Rational& r) {
  if (r <= 0) return 0;
  // n^2 >= p/q  <=>  (n q)^2 >= p q
  const BigInt& p = numerator(r);
  const BigInt& q = denominator(r);
  BigInt n = ceil_sqrt(BigInt(p * q)) / q;
  while (Rational(n * n) < r) ++n;
  while (n > 0 && Rational((n - 1) * (n - 1)) >= r) --n;
  return n;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace freiman
