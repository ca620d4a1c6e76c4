#include "jackpos/rational.hpp"

#include "jackpos/errors.hpp"

namespace jackpos {

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0)
    throw InvalidArgument("not a rational number: '" + s + "'");
  q.canonicalize();
  return q;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Rational falling(const Rational& x, unsigned k) {
  Rational r = 1;
  for (unsigned i = 0; i < k; ++i) r *= x - i;
  return r;
}

}  // namespace jackpos
