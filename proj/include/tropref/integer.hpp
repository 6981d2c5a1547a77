#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace tropref {

using Integer = mpz_class;

inline std::string to_decimal(const Integer& v) { return v.get_str(10); }

inline Integer from_decimal(const std::string& s) {
    Integer v;
    if (s.empty() || v.set_str(s, 10) != 0)
        throw std::invalid_argument("not a decimal integer: '" + s + "'");
    return v;
}

inline Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Integer factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of a negative number");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

}  // namespace tropref
