#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace primegraph {

// Arbitrary-precision non-negative integer. Negative values are rejected at
// the parsing boundary; internal arithmetic never produces them.
using Nat = mpz_class;

inline Nat nat_from_string(const std::string& text) {
    Nat n;
    if (n.set_str(text, 10) != 0)
        throw std::invalid_argument("not a decimal integer: '" + text + "'");
    if (n < 0)
        throw std::invalid_argument("negative value not allowed: '" + text + "'");
    return n;
}

inline std::string to_string(const Nat& n) { return n.get_str(); }

inline Nat pow_nat(const Nat& base, unsigned long exp) {
    Nat r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

static_assert(sizeof(unsigned long) == 8, "requires 64-bit unsigned long");

inline bool fits_u64(const Nat& n) {
    return sgn(n) >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const Nat& n) {
    if (!fits_u64(n))
        throw std::overflow_error("value does not fit in 64 bits");
    return mpz_get_ui(n.get_mpz_t());
}

inline unsigned long to_ulong_checked(const Nat& n, const char* what) {
    if (!n.fits_ulong_p())
        throw std::overflow_error(std::string(what) + " too large");
    return n.get_ui();
}

}  // namespace primegraph
