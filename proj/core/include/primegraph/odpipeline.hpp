#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "primegraph/catalog.hpp"
#include "primegraph/data.hpp"
#include "primegraph/factorization.hpp"
#include "primegraph/graph.hpp"

namespace primegraph::odpipeline {

class DatasetMissing : public std::runtime_error {
public:
    explicit DatasetMissing(const std::string& what) : std::runtime_error(what) {}
};

// Delta: the exponent-one primes of an order. Delta(p): the other members q
// of Delta with q not dividing p-1 and p not dividing q-1. When p divides
// the order of a normal solvable subgroup, p is adjacent to all of Delta(p).
struct DeltaProfile {
    Factorization order;
    std::vector<Nat> delta;
    std::map<std::string, std::vector<Nat>> delta_of;  // keyed by decimal prime

    const std::vector<Nat>& of(const Nat& p) const;
};

DeltaProfile delta_profile(const Factorization& order);

// Squarefree with every Delta(p_i) full: the only group of such an order is
// cyclic.
bool is_cyclic_number(const Factorization& order);

// Table records with the given max prime whose prime set is contained in
// `allowed`, plus alternating groups of degree max_prime .. next_prime-1
// passing the same filter.
std::vector<catalog::CandidateRecord> candidate_simple_groups(
    const Nat& max_prime, const std::vector<Nat>& allowed, const catalog::CandidateTable* table);

struct NonOdWitness {
    Nat quotient;             // |G| / |H|
    std::string description;  // the nilpotent-complement construction
};

// Nilpotent-complement witness against OD-characterizability: fires when |H|
// divides |G|, the quotient is nontrivial, every quotient prime has full
// degree in G, and the degree patterns certify that joining the quotient
// primes to everything turns D(H) into D(G). Patterns are aligned to their
// orders' ascending primes; the vertex sets must coincide.
std::optional<NonOdWitness> non_od_witness(const Factorization& order_g,
                                           const graph::DegreePattern& pattern_g,
                                           const Factorization& order_h,
                                           const graph::DegreePattern& pattern_h);

enum class AssertKind { divisibility, degree_bound, candidate_list, delta_adjacency, residual_order };

const char* to_string(AssertKind k);

struct CaseAssertion {
    std::string label;
    AssertKind kind = AssertKind::divisibility;
    bool pass = false;
    std::string details;
};

struct Report {
    std::string title;
    std::vector<CaseAssertion> assertions;
    std::vector<std::string> notes;

    bool passed() const;
    std::string text() const;
    std::string json() const;  // stable field order: case, assertions[], verdict, notes
};

// Verifies one packaged L4 row: the order formula factors to the stored
// factorization (computed two ways), spectrum primes equal order primes, the
// spectrum-derived degree pattern equals the stored one, and every spectrum
// member's prime powers divide the order. q must be a packaged row.
Report verify_table2(unsigned q, const data::DataContext& data);

// Mechanized arithmetic of one characterization case: independence bounds,
// candidate-list soundness against the packaged table, residual-order checks
// with the recorded contradiction primes, Delta-degree bounds, and the
// case-specific degree chains.
Report verify_characterization_case(unsigned q, const data::DataContext& data);

// Embedded expected values for the packaged rows (orders and degree
// patterns) and per-case data, shared with the acceptance suite.
struct L4RowExpected {
    unsigned q;
    const char* order;
    std::vector<unsigned> degree_pattern;
};
const std::vector<L4RowExpected>& l4_rows_expected();

struct CaseExpected {
    unsigned q;
    std::vector<std::string> printed_candidates;  // as listed in the source statements
    std::string target;
    std::map<std::string, std::vector<unsigned long>> contradiction_primes;
    bool in_headline_list;
};
const std::vector<CaseExpected>& cases_expected();

}  // namespace primegraph::odpipeline
