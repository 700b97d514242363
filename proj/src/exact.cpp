#include "factoprod/exact.hpp"

#include <stdexcept>

namespace factoprod {

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Int binomial(long n, long r) {
  if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
  if (r < 0 || r > n) return 0;
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(r));
  return out;
}

Int falling_factorial(const Int& x, unsigned long k) {
  if (k < 1) throw std::invalid_argument("falling_factorial: k must be >= 1");
  Int r = 1;
  for (unsigned long i = 0; i < k; ++i) r *= x - static_cast<long>(i);
  return r;
}

std::string to_decimal(const Int& v) { return v.get_str(10); }

Int int_from_decimal(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("int_from_decimal: empty string");
  Int v;
  if (v.set_str(s, 10) != 0)
    throw std::invalid_argument("int_from_decimal: not a decimal integer: " + s);
  return v;
}

}  // namespace factoprod
