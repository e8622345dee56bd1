#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "primegraph/nat.hpp"

namespace primegraph::graph {

class TooLarge : public std::runtime_error {
public:
    explicit TooLarge(const std::string& what) : std::runtime_error(what) {}
};

class UnknownVertex : public std::runtime_error {
public:
    explicit UnknownVertex(const std::string& what) : std::runtime_error(what) {}
};

class VertexMismatch : public std::runtime_error {
public:
    explicit VertexMismatch(const std::string& what) : std::runtime_error(what) {}
};

class InvalidComplement : public std::runtime_error {
public:
    explicit InvalidComplement(const std::string& what) : std::runtime_error(what) {}
};

// Simple loop-free graph on an ascending set of primes.
class PrimeGraph {
public:
    static PrimeGraph build(std::vector<Nat> vertices,
                            const std::vector<std::pair<Nat, Nat>>& edges);
    static PrimeGraph from_adjacency(std::vector<Nat> vertices,
                                     const std::function<bool(const Nat&, const Nat&)>& adjacent);
    // Disjoint union of complete graphs on the given vertex sets.
    static PrimeGraph from_clique_components(const std::vector<std::vector<Nat>>& components);

    std::size_t size() const { return verts_.size(); }
    const std::vector<Nat>& vertices() const { return verts_; }
    std::optional<std::size_t> index_of(const Nat& v) const;
    std::size_t index_of_checked(const Nat& v) const;

    bool adjacent(std::size_t i, std::size_t j) const { return adj_[i][j]; }
    bool adjacent_values(const Nat& a, const Nat& b) const;
    unsigned degree(std::size_t i) const;

    std::vector<std::pair<Nat, Nat>> edges() const;  // sorted pairs, a < b
    std::size_t edge_count() const;

    bool operator==(const PrimeGraph&) const = default;

private:
    std::vector<Nat> verts_;
    std::vector<std::vector<bool>> adj_;
};

struct DegreePattern {
    std::vector<unsigned> degrees;  // aligned with ascending vertices

    std::string str() const;  // "(4, 4, 4, 3, 1, 2)"
    bool operator==(const DegreePattern&) const = default;
};

DegreePattern degree_pattern(const PrimeGraph& g);

// Sum of all vertex degrees (= 2 * edge count).
unsigned long long vartheta(const PrimeGraph& g);

struct ComponentDecomposition {
    std::vector<std::vector<Nat>> components;   // each sorted; ordered by least vertex
    std::optional<std::size_t> principal_index; // component containing 2, if present
};

ComponentDecomposition components(const PrimeGraph& g);

// Lower/upper bounds on vartheta from component sizes: upper = sum n_i(n_i-1),
// lower = upper - (n1-1)(n1-2) where n1 is the principal component's size
// (first entry when principal_size_first, otherwise the largest size).
std::pair<unsigned long long, unsigned long long> theta_bounds(
    const std::vector<std::size_t>& component_sizes, bool principal_size_first = true);

struct ThetaEqualityReport {
    unsigned long long lower = 0, upper = 0, theta = 0;
    bool principal_complete = false;
    bool bounds_hold = false;
    bool equality_when_complete = false;  // vacuously true if principal not complete
    std::vector<std::size_t> component_sizes;
};

ThetaEqualityReport check_theta_equality(const PrimeGraph& g);

// Degree-sum of a Frobenius-shaped graph: complete kernel component plus a
// complement component that is complete when solvable and misses one edge
// otherwise (which requires at least 3 complement primes).
unsigned long long frobenius_vartheta(std::size_t kernel_primes, std::size_t complement_primes,
                                      bool complement_solvable);

struct IndependenceResult {
    unsigned size = 0;
    std::vector<Nat> witness;  // lexicographically least maximum independent set
};

// Exact maximum independent set by branch and bound; graphs above 24 vertices
// are rejected (TooLarge).
IndependenceResult independence_number(const PrimeGraph& g);

// Largest independent set containing vertex r.
unsigned t_of_vertex(const PrimeGraph& g, const Nat& r);

// Vertices adjacent to all other vertices.
std::vector<Nat> full_degree_set(const PrimeGraph& g);

// Same vertex set required; true iff a's non-decreasing degree sequence is
// pointwise <= b's.
bool degree_majorized_by(const PrimeGraph& a, const PrimeGraph& b);

// Compact form: vertices with identical closed neighbourhoods are merged into
// one class (classes are cliques); class edges join fully-connected classes.
// `pinned` vertices stay as singleton classes — the published drawings keep
// the defining characteristic separate even when it is a twin of 2.
struct CompactForm {
    std::vector<std::vector<Nat>> classes;             // each sorted; ordered by least member
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // class-index pairs, i < j
};

CompactForm compact_form(const PrimeGraph& g, const std::vector<Nat>& pinned = {});
PrimeGraph expand_compact(const CompactForm& cf);

// Deterministic node naming n<k> with sorted label lists.
std::string render_dot(const CompactForm& cf);

enum class ExportFormat { edge_list, structured, dot_compact };

// Deterministic serialization; `structured` is canonical JSON with fixed key
// order (vertices, edges, degree_pattern, vartheta, components).
std::string export_graph(const PrimeGraph& g, ExportFormat format);

}  // namespace primegraph::graph
