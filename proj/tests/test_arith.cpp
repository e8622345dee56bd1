#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "primegraph/arith.hpp"

using namespace primegraph;
using namespace primegraph::arith;

namespace {

// Independent oracle: factor by plain trial division (no rho, no batching).
std::map<std::uint64_t, unsigned> trial_factor_oracle(std::uint64_t n) {
    std::map<std::uint64_t, unsigned> out;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        while (n % p == 0) { out[p]++; n /= p; }
    if (n > 1) out[n]++;
    return out;
}

// Independent oracle: multiplicative order by direct exponentiation loop.
std::uint64_t order_oracle(std::uint64_t r, std::uint64_t a) {
    std::uint64_t x = a % r, m = 1;
    while (x != 1) {
        x = x * (a % r) % r;
        ++m;
    }
    return m;
}

// Independent oracle for R_m(a): factor a^m - 1 outright, filter by order.
std::vector<Nat> ppd_oracle(const Nat& a, unsigned long m) {
    Nat v = pow_nat(a, m) - 1;
    std::vector<Nat> out;
    if (v == 1) return out;
    Factorization f = factor(v);
    for (const auto& fe : f.entries())
        if (has_mult_order(fe.prime, a, m)) out.push_back(fe.prime);
    return out;
}

}  // namespace

TEST_CASE("factor: small cases") {
    CHECK(factor(12).str() == "2^2*3");
    CHECK(factor(1).str() == "1");
    CHECK(factor(1).empty());
    CHECK(factor(2).str() == "2");
    CHECK(factor(360).str() == "2^3*3^2*5");
    CHECK_THROWS_AS(factor(0), std::invalid_argument);
}

TEST_CASE("factor: |L4(19)| round trip") {
    Factorization expected = Factorization::parse("2^7*3^7*5^2*19^6*127*181");
    CHECK(factor(expected.value()) == expected);
}

TEST_CASE("factor: agrees with trial-division oracle on a sweep") {
    for (std::uint64_t n = 2; n <= 3000; ++n) {
        auto expect = trial_factor_oracle(n);
        Factorization got = factor(Nat(static_cast<unsigned long>(n)));
        REQUIRE(got.size() == expect.size());
        for (const auto& fe : got.entries()) {
            REQUIRE(fe.prime.fits_ulong_p());
            CHECK(expect.at(fe.prime.get_ui()) == fe.exponent);
        }
    }
}

TEST_CASE("factor: round trip on random inputs") {
    std::mt19937_64 rng(0xC0FFEE);
    for (int i = 0; i < 300; ++i) {
        Nat n = 1;
        int limbs = 1 + static_cast<int>(rng() % 3);
        for (int j = 0; j < limbs; ++j) n = n * Nat(static_cast<unsigned long>(rng() | 1)) + 1;
        if (n < 2) continue;
        Nat reproduced;
        try {
            reproduced = factor(n).value();
        } catch (const FactorizationIncomplete& inc) {
            reproduced = inc.partial.value() * inc.cofactor;
        }
        CHECK(reproduced == n);
    }
}

TEST_CASE("factor: deterministic for equal inputs") {
    Nat n = nat_from_string("1237940039285380274899124224") * 7919 + 1;  // arbitrary fixed value
    try {
        Factorization a = factor(n), b = factor(n);
        CHECK(a == b);
    } catch (const FactorizationIncomplete&) {
        // determinism of the incomplete path is exercised below via the table
    }
}

TEST_CASE("factor: incomplete carries exact partial payload, table completes it") {
    // Two fixed 25-digit probable primes; their product resists the default budget.
    Nat p = nat_from_string("1000000000000000000000000103");
    Nat q = nat_from_string("1000000000000000000000000279");
    REQUIRE(classify(p) == Primality::probable_prime);
    REQUIRE(classify(q) == Primality::probable_prime);
    Nat n = 12 * p * q;
    FactorConfig tight;
    tight.rho_iteration_budget = 2000;
    bool threw = false;
    try {
        factor(n, tight);
    } catch (const FactorizationIncomplete& inc) {
        threw = true;
        CHECK(inc.partial.value() * inc.cofactor == n);
        CHECK(inc.cofactor == p * q);
    }
    CHECK(threw);

    Nat pq = p * q;
    FactorTable table = FactorTable::parse_text(pq.get_str() + " = " + p.get_str() + " * " +
                                                q.get_str());
    FactorConfig with_table = tight;
    with_table.table = &table;
    Factorization full = factor(n, with_table);
    CHECK(full.value() == n);
    CHECK(full.exponent_of(p) == 1);
}

TEST_CASE("factor table: validation") {
    CHECK_THROWS(FactorTable::parse_text("91 = 7 * 14"));           // 14 not prime
    CHECK_THROWS(FactorTable::parse_text("90 = 7 * 13"));           // product mismatch
    CHECK(FactorTable::parse_text("# comment only\n").size() == 0);
    FactorTable t = FactorTable::parse_text("91 = 7 * 13\n");
    CHECK(t.lookup(Nat(91)) != nullptr);
    CHECK(t.lookup(Nat(92)) == nullptr);
}

TEST_CASE("is_prime: exact small values and table rows") {
    CHECK(is_prime(Nat(181)));
    CHECK(is_prime(Nat(757)));
    CHECK_FALSE(is_prime(Nat(91)));
    CHECK_FALSE(is_prime(Nat(0)));
    CHECK_FALSE(is_prime(Nat(1)));
    CHECK(is_prime(Nat(2)));
    int count = 0;
    for (int n = 2; n < 1000; ++n)
        if (is_prime(Nat(n))) ++count;
    CHECK(count == 168);
}

TEST_CASE("is_prime: large values flagged strong-probable") {
    Nat big = pow_nat(Nat(2), 89) - 1;  // Mersenne prime, above the 64-bit range
    CHECK(classify(big) == Primality::probable_prime);
    CHECK(classify(big + 2) == Primality::composite);
    CHECK(classify(Nat("18446744073709551557")) == Primality::prime);  // < 2^64: deterministic
}

TEST_CASE("mult_order: examples and convention") {
    CHECK(mult_order(Nat(7), Nat(2)) == 3);
    CHECK(mult_order(Nat(2), Nat(5)) == 1);   // 5 = 1 mod 4
    CHECK(mult_order(Nat(2), Nat(7)) == 2);   // 7 = 3 mod 4
    CHECK_THROWS_AS(mult_order(Nat(7), Nat(14)), NotCoprime);
    CHECK_THROWS_AS(mult_order(Nat(2), Nat(6)), NotCoprime);  // e(2, even) rejected
    CHECK_THROWS_AS(mult_order(Nat(6), Nat(5)), std::invalid_argument);
}

TEST_CASE("mult_order: agrees with direct-loop oracle and divides r-1") {
    for (std::uint64_t r : {3ull, 5ull, 7ull, 11ull, 13ull, 127ull, 181ull, 523ull}) {
        for (std::uint64_t a = 2; a < 40; ++a) {
            if (a % r == 0) continue;
            Nat ord = mult_order(Nat(static_cast<unsigned long>(r)), Nat(static_cast<unsigned long>(a)));
            CHECK(ord == order_oracle(r, a));
            CHECK((r - 1) % ord.get_ui() == 0);  // Fermat
        }
    }
}

TEST_CASE("primitive_prime_divisors: published values and exceptions") {
    auto r61 = primitive_prime_divisors(Nat(61), 6);
    REQUIRE(r61.primes.size() == 2);
    CHECK(r61.primes[0] == 7);
    CHECK(r61.primes[1] == 523);

    CHECK(primitive_prime_divisors(Nat(2), 6).empty());
    CHECK(primitive_prime_divisors(Nat(2), 1).empty());
    CHECK(primitive_prime_divisors(Nat(3), 1).empty());

    auto r24 = primitive_prime_divisors(Nat(2), 4);
    REQUIRE(r24.primes.size() == 1);
    CHECK(r24.primes[0] == 5);

    // e(2,.) convention makes these emergent:
    CHECK(primitive_prime_divisors(Nat(3), 2).primes == std::vector<Nat>{Nat(2)});
    CHECK(primitive_prime_divisors(Nat(5), 1).primes == std::vector<Nat>{Nat(2)});
}

TEST_CASE("primitive_prime_divisors: agrees with the brute-force a^m-1 oracle") {
    for (unsigned long a = 2; a <= 12; ++a)
        for (unsigned long m = 1; m <= 10; ++m)
            CHECK(primitive_prime_divisors(Nat(a), m).primes == ppd_oracle(Nat(a), m));
}

TEST_CASE("Zsigmondy sweep: empty exactly at the three exceptional pairs") {
    std::set<std::pair<unsigned long, unsigned long>> empties;
    for (unsigned long a = 2; a <= 30; ++a)
        for (unsigned long m = 1; m <= 12; ++m)
            if (primitive_prime_divisors(Nat(a), m).empty()) empties.insert({a, m});
    std::set<std::pair<unsigned long, unsigned long>> expected{{2, 1}, {3, 1}, {2, 6}};
    CHECK(empties == expected);
}

TEST_CASE("restricted_ppd: equals full set intersected with the given primes") {
    std::vector<Nat> pi{Nat(2), Nat(3), Nat(5), Nat(19), Nat(127), Nat(181)};
    CHECK(restricted_ppd(pi, Nat(19), 3) == std::vector<Nat>{Nat(127)});
    CHECK(restricted_ppd(pi, Nat(19), 4) == std::vector<Nat>{Nat(181)});
    CHECK(restricted_ppd({}, Nat(19), 3).empty());

    for (unsigned long a = 2; a <= 10; ++a) {
        for (unsigned long m = 1; m <= 8; ++m) {
            auto full = primitive_prime_divisors(Nat(a), m).primes;
            auto some = restricted_ppd(full, Nat(a), m);
            CHECK(some == full);
        }
    }
}

TEST_CASE("nu and eta") {
    CHECK(nu(Nat(4)) == 4);
    CHECK(nu(Nat(6)) == 3);
    CHECK(nu(Nat(5)) == 10);
    CHECK(nu(Nat(1)) == 2);
    CHECK(eta(Nat(7)) == 7);
    CHECK(eta(Nat(6)) == 3);

    bool ok = true;
    for (unsigned long m = 1; m <= 1'000'000; ++m) {
        Nat em = eta(Nat(m));
        if (!(em == m || em * 2 == Nat(m))) ok = false;
        // The compositions invert each other exactly on m = 2 (mod 4).
        if (m % 4 == 2 && nu(em) != m) ok = false;
    }
    CHECK(ok);
}

TEST_CASE("p_part") {
    CHECK(p_part(Nat(18), Nat(2)) == 2);
    CHECK(p_part(Nat(4), Nat(2)) == 4);
    CHECK(p_part(Nat(7), Nat(2)) == 1);
    CHECK(p_part(Nat(720), Nat(3)) == 9);
}

TEST_CASE("is_prime_power") {
    auto r27 = is_prime_power(Nat(27));
    REQUIRE(r27.has_value());
    CHECK(r27->first == 3);
    CHECK(r27->second == 3);
    auto r32 = is_prime_power(Nat(32));
    REQUIRE(r32.has_value());
    CHECK(r32->first == 2);
    CHECK(r32->second == 5);
    CHECK_FALSE(is_prime_power(Nat(12)).has_value());
    CHECK_FALSE(is_prime_power(Nat(36)).has_value());
    auto r19 = is_prime_power(Nat(19));
    REQUIRE(r19.has_value());
    CHECK(r19->second == 1);
}

TEST_CASE("cyclotomic values multiply back to q^m - 1") {
    for (unsigned long q : {2ul, 3ul, 19ul, 61ul}) {
        for (unsigned long m = 1; m <= 12; ++m) {
            Nat prod = 1;
            for (unsigned long d = 1; d <= m; ++d)
                if (m % d == 0) prod *= cyclotomic_value(d, Nat(q));
            CHECK(prod == pow_nat(Nat(q), m) - 1);
        }
    }
}

TEST_CASE("decimal round trip near 2^1000") {
    Nat big = pow_nat(Nat(2), 1000) + 12345;
    CHECK(nat_from_string(to_string(big)) == big);
    CHECK_THROWS_AS(nat_from_string("-5"), std::invalid_argument);
    CHECK_THROWS_AS(nat_from_string("12x"), std::invalid_argument);
}
