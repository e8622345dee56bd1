#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "primegraph/arith.hpp"
#include "primegraph/catalog.hpp"
#include "primegraph/spectra.hpp"

namespace primegraph::liedeg {

class CharacteristicUnsupported : public std::runtime_error {
public:
    explicit CharacteristicUnsupported(const std::string& what) : std::runtime_error(what) {}
};

struct RemovedSet {
    unsigned long m = 0;      // R_m(q)
    std::vector<Nat> primes;  // restricted to pi(G)
};

// Degree of one distinguished vertex (2 or the defining characteristic),
// along with which case fired and which R-sets were subtracted.
struct DegreeResult {
    Nat vertex;
    unsigned value = 0;
    std::string branch;
    std::vector<RemovedSet> removed;
    std::size_t pi_size = 0;
    std::optional<std::string> warning;

    // |pi(G)| - |union of removed sets| - 1, for results of that shape.
    bool subtractive_shape_consistent() const;
};

// Degree of the defining characteristic in the prime graph, by closed
// formula. Classical families (except A1 at even q, which is fixed by its
// three-clique component structure) and exceptional families require odd
// characteristic; CharacteristicUnsupported otherwise.
DegreeResult deg_p(const catalog::GroupId& g,
                   const arith::FactorConfig& config = arith::FactorConfig::defaults());

// Degree of the vertex 2, same hypotheses. For 2G2(q) the literal closed-form
// value is returned with a mandatory warning: the spectrum-derived degree
// differs (an order-6 element makes 2 adjacent to 3, which pi(q^2-1) misses).
DegreeResult deg_2(const catalog::GroupId& g,
                   const arith::FactorConfig& config = arith::FactorConfig::defaults());

struct CrossCheck {
    std::string group;
    DegreeResult formula_p, formula_2;
    unsigned spectrum_p = 0, spectrum_2 = 0;
    bool agree_p = false, agree_2 = false;
    std::vector<std::string> warnings;

    bool clean() const { return agree_p && agree_2; }
};

// Formula values vs degrees read off the spectrum-backed prime graph.
// Mismatches are reported, never reconciled.
CrossCheck cross_check_degree(const catalog::GroupId& g,
                              const spectra::SpectrumTable* l4_table = nullptr,
                              const arith::FactorConfig& config = arith::FactorConfig::defaults());

}  // namespace primegraph::liedeg
