#pragma once

#include <map>
#include <string>
#include <vector>

#include "primegraph/arith.hpp"
#include "primegraph/catalog.hpp"
#include "primegraph/graph.hpp"
#include "primegraph/nat.hpp"

namespace primegraph::spectra {

// mu(G): the divisibility-maximal element orders. omega(G) is its divisor
// closure and is never materialized.
struct Spectrum {
    std::vector<Nat> mu;  // ascending, antichain under divisibility
    std::string source;
    std::vector<std::string> notes;  // e.g. non-maximal members dropped on load
};

// Sorts, deduplicates and verifies the antichain invariant; throws
// std::invalid_argument on a divisibility violation.
Spectrum make_spectrum(std::vector<Nat> members, std::string source);

// Same, but drops members dividing another member and records a note.
Spectrum normalize_spectrum(std::vector<Nat> members, std::string source);

// x belongs to omega(G) iff x divides some member of mu.
bool omega_contains(const Spectrum& s, const Nat& x);

// Packaged table of mu(L4(q)) for q in {19,23,25,27,29,31,32,37}.
// Line format: `L4(<q>) | <member as factored product> ; <...>`.
class SpectrumTable {
public:
    static SpectrumTable load(const std::string& path);
    static SpectrumTable parse_text(const std::string& text, const std::string& origin);

    const Spectrum* find(unsigned q) const;
    std::vector<unsigned> field_sizes() const;

private:
    std::map<unsigned, Spectrum> rows_;
};

// Spectra with closed forms: A1(q), A2(q), 2B2(q), 2G2(q), 2F4(q); L4(q) rows
// come from `l4_table` when provided. UnsupportedGroup otherwise.
Spectrum spectrum_of(const catalog::GroupId& g, const SpectrumTable* l4_table = nullptr);

// Vertices: primes dividing members of mu; p ~ q iff p*q divides a member.
graph::PrimeGraph prime_graph_from_spectrum(
    const Spectrum& s, const arith::FactorConfig& config = arith::FactorConfig::defaults());

// Prime graph of the alternating group of degree n (n >= 5): odd p != q
// adjacent iff p + q <= n; 2 adjacent to odd p iff p + 4 <= n.
graph::PrimeGraph gk_alternating(unsigned n);

// Prime graph of the symmetric group of degree n: p != q adjacent iff
// p + q <= n, except 2 ~ p iff p + 2 <= n. Companion to gk_alternating for
// the non-OD constructions.
graph::PrimeGraph gk_symmetric(unsigned n);

}  // namespace primegraph::spectra
