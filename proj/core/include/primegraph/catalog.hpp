#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "primegraph/arith.hpp"
#include "primegraph/factorization.hpp"
#include "primegraph/nat.hpp"

namespace primegraph::catalog {

class UnsupportedGroup : public std::runtime_error {
public:
    explicit UnsupportedGroup(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Families use the Lie-rank convention: Classical{A, n, q} is A_{n-1}(q),
// i.e. L_n(q); Classical{TwoA, n, q} is 2A_{n-1}(q) = U_n(q); B/C/D/TwoD use
// their own rank directly (B_n, C_n, D_n, 2D_n).
enum class ClassicalFamily { A, TwoA, B, C, D, TwoD };
enum class ExceptionalFamily { G2, F4, E6, TwoE6, E7, E8, ThreeD4 };
enum class SuzukiReeFamily { TwoB2, TwoG2, TwoF4 };

struct Classical {
    ClassicalFamily family;
    unsigned n;
    Nat q;
    bool operator==(const Classical&) const = default;
};

struct Exceptional {
    ExceptionalFamily family;
    Nat q;
    bool operator==(const Exceptional&) const = default;
};

struct SuzukiRee {
    SuzukiReeFamily family;
    Nat q;
    bool operator==(const SuzukiRee&) const = default;
};

struct Alternating {
    unsigned n;
    bool operator==(const Alternating&) const = default;
};

struct Named {
    std::string name;
    bool operator==(const Named&) const = default;
};

using GroupId = std::variant<Classical, Exceptional, SuzukiRee, Alternating, Named>;

struct FieldInfo {
    Nat p;       // characteristic
    unsigned f;  // q = p^f
};

// Validates q as a prime power; UnsupportedGroup otherwise.
FieldInfo field_of(const Nat& q);

// Rank bounds (A: n>=2, 2A: n>=3, B/C: n>=2, D: n>=3, 2D: n>=2), prime-power q,
// Suzuki-Ree parity constraints (2B2/2F4: q = 2^(2k+1) >= 8; 2G2: q = 3^(2k+1)
// >= 27), alternating n >= 5. Throws UnsupportedGroup on violation.
void validate(const GroupId& g);

std::string display_name(const GroupId& g);

struct CandidateRecord {
    std::string name;
    Factorization order;
    Nat max_prime;
    std::string source;  // "table5" or "alternating"
};

// The packaged simple-group dataset. One record per line:
//   name | p | p1^e1*p2^e2*...
// '#' comments. Records validated on load: listed primes pass the primality
// test, max prime matches p, names unique.
class CandidateTable {
public:
    static CandidateTable load(const std::string& path);
    static CandidateTable parse_text(const std::string& text, const std::string& origin);

    const std::vector<CandidateRecord>& records() const { return records_; }
    const CandidateRecord* find(const std::string& name) const;
    std::vector<const CandidateRecord*> with_max_prime(const Nat& p) const;

private:
    std::vector<CandidateRecord> records_;
};

// Exact factored order. B_n(q) and C_n(q) produce identical results. Named
// ids resolve against the sporadic table or `table` when given.
Factorization order(const GroupId& g,
                    const arith::FactorConfig& config = arith::FactorConfig::defaults(),
                    const CandidateTable* table = nullptr);

// Ascending prime divisors of |G|.
std::vector<Nat> pi_of(const GroupId& g,
                       const arith::FactorConfig& config = arith::FactorConfig::defaults(),
                       const CandidateTable* table = nullptr);

// n!/2 via Legendre's prime-exponent formula, n >= 5.
Factorization alternating_order(unsigned n);

// Recorded outer-automorphism-order claims from the published case analysis,
// keyed by group name. Absent names return nothing.
std::optional<unsigned> out_order_claim(const std::string& name);

// d*f*g value for the families where the standard formula is implemented
// (A-family and 2D4); used only as a cross-check against the claims.
std::optional<unsigned> out_order_dfg(const std::string& name);

// Sporadic groups carried by the clique-component table: M11, M22, J1, J2,
// J3, HiS. Orders are factored constants.
const std::map<std::string, Factorization>& sporadic_orders();

// Connected components (each a clique) for those sporadic groups.
std::optional<std::vector<std::vector<Nat>>> clique_components(const std::string& name);

}  // namespace primegraph::catalog
