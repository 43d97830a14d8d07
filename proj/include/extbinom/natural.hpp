#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace extbinom {

// Arbitrary-precision natural number. Values are never negative in this
// library; GMP's signed integer is used as the carrier.
using Natural = mpz_class;

inline Natural to_natural(std::uint64_t v) {
  Natural out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return out;
}

inline std::string to_decimal(const Natural& v) { return v.get_str(10); }

// v mod m for m >= 1, as a native integer in [0, m).
inline std::uint64_t reduce(const Natural& v, std::uint64_t m) {
  Natural r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), to_natural(m).get_mpz_t());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, r.get_mpz_t());
  return out;
}

inline Natural pow_natural(const Natural& base, std::uint64_t exponent) {
  // 0^0 = 1
  Natural out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

inline Natural ordinary_binomial(std::uint64_t n, std::uint64_t k) {
  Natural out;
  if (k > n) return out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace extbinom
