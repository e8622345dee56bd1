#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "primegraph/factorization.hpp"
#include "primegraph/nat.hpp"

namespace primegraph::arith {

// ---------------------------------------------------------------------------
// Factoring

// Auxiliary table of pre-factored composites, loaded from a line-oriented
// text file: `<composite-decimal> = <p1>^<e1> * <p2>^<e2> * ...`, with '#'
// comments. Every entry is validated on load (primality, product check).
class FactorTable {
public:
    static FactorTable load(const std::string& path);
    static FactorTable parse_text(const std::string& text, const std::string& origin = "<memory>");

    const Factorization* lookup(const Nat& composite) const;
    std::size_t size() const { return entries_.size(); }

private:
    struct NatLess {
        bool operator()(const Nat& a, const Nat& b) const { return a < b; }
    };
    std::map<Nat, Factorization, NatLess> entries_;
};

struct FactorConfig {
    // Trial division sweeps all primes up to this bound.
    std::uint64_t trial_division_limit = 1'000'000;
    // Total Brent-rho iteration budget per factor() call (multi-precision path).
    std::uint64_t rho_iteration_budget = 400'000;
    // Composites with more decimal digits than this are not attacked by rho.
    std::size_t rho_digit_ceiling = 80;
    const FactorTable* table = nullptr;

    static const FactorConfig& defaults();
};

// Raised when a composite cofactor resists trial division, the rho budget and
// the factor table. Carries what was factored and the unfactored remainder:
// partial.value() * cofactor reproduces the input.
class FactorizationIncomplete : public std::runtime_error {
public:
    FactorizationIncomplete(Factorization partial_, Nat cofactor_);
    Factorization partial;
    Nat cofactor;
};

// Exact prime factorization of n >= 1. Deterministic for equal inputs.
Factorization factor(const Nat& n, const FactorConfig& config = FactorConfig::defaults());

// ---------------------------------------------------------------------------
// Primality

enum class Primality { composite, prime, probable_prime };

// Below 2^64: Miller-Rabin with the 12 witnesses {2,3,...,37}, deterministic
// for all n < 3.3e24. At or above 2^64: Miller-Rabin with the first 25 primes
// as a fixed witness schedule; survivors are reported as probable_prime.
Primality classify(const Nat& n);

inline bool is_prime(const Nat& n) { return classify(n) != Primality::composite; }

// ---------------------------------------------------------------------------
// Multiplicative orders and primitive prime divisors

class NotCoprime : public std::runtime_error {
public:
    explicit NotCoprime(const std::string& what) : std::runtime_error(what) {}
};

// e(r, a): for odd prime r coprime to a, the least m with a^m = 1 (mod r).
// For r = 2 and odd a, the convention e(2,a) = 1 if a = 1 (mod 4), else 2.
// r = 2 with even a is rejected (NotCoprime), as is r | a.
Nat mult_order(const Nat& r, const Nat& a);

// e(r, a) == m, decided without computing the full order.
bool has_mult_order(const Nat& r, const Nat& a, unsigned long m);

struct ZsigmondySet {
    Nat base;
    unsigned long exponent = 1;
    std::vector<Nat> primes;  // ascending

    bool empty() const { return primes.empty(); }
};

// R_m(a): all primes r dividing a^m - 1 with e(r, a) = m. Computed by
// factoring the m-th cyclotomic value at a (every qualifying prime divides
// it); FactorizationIncomplete propagates from that factorization.
ZsigmondySet primitive_prime_divisors(const Nat& a, unsigned long m,
                                      const FactorConfig& config = FactorConfig::defaults());

// R_m(a) restricted to a known prime set: members r with e(r, a) = m.
// Members dividing a are skipped (they cannot divide a^m - 1).
std::vector<Nat> restricted_ppd(const std::vector<Nat>& primes, const Nat& a, unsigned long m);

// ---------------------------------------------------------------------------
// Small helpers

// nu: m if 4|m; m/2 if m = 2 (mod 4); 2m if m odd.
Nat nu(const Nat& m);

// eta: m if m odd; m/2 if m even.
Nat eta(const Nat& m);

// Largest power of p dividing m (the p-part m_p), as a value: p^k with p^k || m.
Nat p_part(const Nat& m, const Nat& p);

// q = p^f with p prime, f >= 1; nothing if q is not a prime power.
std::optional<std::pair<Nat, unsigned>> is_prime_power(const Nat& q);

// Value of the d-th cyclotomic polynomial at q (d >= 1, q >= 2).
Nat cyclotomic_value(unsigned long d, const Nat& q);

// Least prime strictly greater than n (certified by classify()).
Nat next_prime_above(const Nat& n);

// Primes up to the trial-division bound, shared sieve.
const std::vector<std::uint32_t>& small_primes();

// Primes <= n for moderate n (sieve-backed; n must fit the sieve range or be
// extended by next_prime_above internally).
std::vector<Nat> primes_up_to(std::uint64_t n);

}  // namespace primegraph::arith
