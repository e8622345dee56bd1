#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "primegraph/nat.hpp"

namespace primegraph {

struct FactorEntry {
    Nat prime;
    unsigned exponent = 1;

    bool operator==(const FactorEntry&) const = default;
};

// Exact prime factorization: entries strictly increasing by prime, all
// exponents >= 1, empty list represents 1. Primality of the entries is the
// producer's responsibility (arith::factor certifies, table loaders verify).
class Factorization {
public:
    Factorization() = default;

    static Factorization one() { return {}; }

    static Factorization from_sorted(std::vector<FactorEntry> entries);

    // Merges p^e into the factorization, keeping entries sorted.
    void mul_prime(const Nat& p, unsigned e = 1);

    Factorization times(const Factorization& other) const;

    // Exact quotient; throws std::domain_error if `other` does not divide this.
    Factorization divide_exact(const Factorization& other) const;

    bool divides(const Factorization& other) const;

    unsigned exponent_of(const Nat& p) const;

    Nat value() const;

    std::vector<Nat> primes() const;

    // Largest prime; throws std::domain_error on the empty factorization.
    Nat max_prime() const;

    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }
    const std::vector<FactorEntry>& entries() const& { return entries_; }
    std::vector<FactorEntry> entries() && { return std::move(entries_); }

    bool is_squarefree() const;

    // "2^7*3^7*5^2*19^6*127*181"; "1" for the empty factorization.
    std::string str() const;

    // Parses the str() format (whitespace around '*' and '^' tolerated).
    static Factorization parse(const std::string& text);

    bool operator==(const Factorization&) const = default;

private:
    std::vector<FactorEntry> entries_;
};

}  // namespace primegraph
