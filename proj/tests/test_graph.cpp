#include <doctest.h>

#include <algorithm>
#include <random>

#include "primegraph/graph.hpp"

using namespace primegraph;
using namespace primegraph::graph;

namespace {

PrimeGraph complete_graph(std::vector<Nat> vs) {
    return PrimeGraph::from_clique_components({std::move(vs)});
}

PrimeGraph edgeless(std::vector<Nat> vs) { return PrimeGraph::build(std::move(vs), {}); }

// L4(19) adjacency, fixed directly for use as a known graph.
PrimeGraph l4_19_graph() {
    return PrimeGraph::build(
        {Nat(2), Nat(3), Nat(5), Nat(19), Nat(127), Nat(181)},
        {{Nat(2), Nat(3)},
         {Nat(2), Nat(5)},
         {Nat(2), Nat(19)},
         {Nat(2), Nat(181)},
         {Nat(3), Nat(5)},
         {Nat(3), Nat(19)},
         {Nat(3), Nat(127)},
         {Nat(5), Nat(19)},
         {Nat(5), Nat(181)}});
}

// Independent oracle: exhaustive bitmask search over a random vertex order.
unsigned mis_oracle(const PrimeGraph& g, std::uint64_t seed) {
    std::vector<std::size_t> perm(g.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::mt19937_64 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    unsigned best = 0;
    for (std::uint64_t mask = 0; mask < (1ull << g.size()); ++mask) {
        bool ok = true;
        for (std::size_t i = 0; i < g.size() && ok; ++i) {
            if (!(mask >> i & 1)) continue;
            for (std::size_t j = i + 1; j < g.size() && ok; ++j)
                if ((mask >> j & 1) && g.adjacent(perm[i], perm[j])) ok = false;
        }
        if (ok) best = std::max(best, static_cast<unsigned>(__builtin_popcountll(mask)));
    }
    return best;
}

}  // namespace

TEST_CASE("degree pattern and vartheta") {
    PrimeGraph g = l4_19_graph();
    CHECK(degree_pattern(g).degrees == std::vector<unsigned>{4, 4, 4, 3, 1, 2});
    CHECK(degree_pattern(g).str() == "(4, 4, 4, 3, 1, 2)");
    CHECK(vartheta(g) == 18);
    CHECK(vartheta(edgeless({Nat(2), Nat(3)})) == 0);
    CHECK(vartheta(complete_graph({Nat(2), Nat(3), Nat(5), Nat(7)})) == 12);
}

TEST_CASE("components") {
    PrimeGraph g = PrimeGraph::from_clique_components({{Nat(2), Nat(3)}, {Nat(5)}, {Nat(11)}});
    auto cd = components(g);
    CHECK(cd.components.size() == 3);
    REQUIRE(cd.principal_index.has_value());
    CHECK(cd.components[*cd.principal_index] == std::vector<Nat>{Nat(2), Nat(3)});

    CHECK(components(l4_19_graph()).components.size() == 1);

    PrimeGraph odd = edgeless({Nat(3), Nat(5)});
    CHECK_FALSE(components(odd).principal_index.has_value());
}

TEST_CASE("theta_bounds") {
    CHECK(theta_bounds({6}) == std::pair<unsigned long long, unsigned long long>{10, 30});
    CHECK(theta_bounds({3}) == std::pair<unsigned long long, unsigned long long>{4, 6});
    CHECK(theta_bounds({1, 1, 1}) == std::pair<unsigned long long, unsigned long long>{0, 0});
    CHECK(theta_bounds({2, 3}, false).second == 8);  // principal = largest
    CHECK_THROWS_AS(theta_bounds({0}), std::invalid_argument);
}

TEST_CASE("check_theta_equality") {
    // Complete principal component: equality with the upper bound.
    PrimeGraph nilpotent = complete_graph({Nat(2), Nat(3), Nat(5)});
    auto rep = check_theta_equality(nilpotent);
    CHECK(rep.theta == 6);
    CHECK(rep.upper == 6);
    CHECK(rep.lower == 4);
    CHECK(rep.principal_complete);
    CHECK(rep.equality_when_complete);
    CHECK(rep.bounds_hold);

    // L4(19): connected but principal not complete; 18 within [10, 30].
    auto rep2 = check_theta_equality(l4_19_graph());
    CHECK(rep2.theta == 18);
    CHECK(rep2.upper == 30);
    CHECK(rep2.lower == 10);
    CHECK_FALSE(rep2.principal_complete);
    CHECK(rep2.equality_when_complete);
    CHECK(rep2.bounds_hold);

    // Single vertex: trivially complete and equal.
    auto rep3 = check_theta_equality(edgeless({Nat(7)}));
    CHECK(rep3.principal_complete);
    CHECK(rep3.theta == 0);
    CHECK(rep3.upper == 0);
}

TEST_CASE("frobenius_vartheta") {
    CHECK(frobenius_vartheta(2, 3, true) == 8);
    CHECK(frobenius_vartheta(4, 3, false) == 16);  // n2(n2-1) + 4
    CHECK(frobenius_vartheta(1, 1, true) == 0);
    CHECK_THROWS_AS(frobenius_vartheta(4, 2, false), InvalidComplement);
    CHECK_THROWS_AS(frobenius_vartheta(0, 1, true), std::invalid_argument);
}

TEST_CASE("independence_number") {
    PrimeGraph g = l4_19_graph();
    auto res = independence_number(g);
    CHECK(res.size == 3);
    CHECK(res.witness == std::vector<Nat>{Nat(19), Nat(127), Nat(181)});

    CHECK(independence_number(complete_graph({Nat(2), Nat(3), Nat(5), Nat(7)})).size == 1);
    auto e = independence_number(edgeless({Nat(2), Nat(3), Nat(5)}));
    CHECK(e.size == 3);
    CHECK(e.witness.size() == 3);

    // Witness is the lexicographically least maximum independent set.
    PrimeGraph path = PrimeGraph::build({Nat(2), Nat(3), Nat(5)}, {{Nat(2), Nat(3)}, {Nat(3), Nat(5)}});
    CHECK(independence_number(path).witness == std::vector<Nat>{Nat(2), Nat(5)});

    std::vector<Nat> many;
    for (unsigned long i = 0; i < 25; ++i) many.emplace_back(100 + i);
    CHECK_THROWS_AS(independence_number(edgeless(many)), TooLarge);
}

TEST_CASE("independence agrees with order-randomized exhaustive oracle") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 4 + trial % 9;
        std::vector<Nat> vs;
        for (std::size_t i = 0; i < n; ++i) vs.emplace_back(static_cast<unsigned long>(2 + i));
        std::vector<std::pair<Nat, Nat>> edges;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (rng() % 3 == 0) edges.emplace_back(vs[i], vs[j]);
        PrimeGraph g = PrimeGraph::build(vs, edges);
        CHECK(independence_number(g).size == mis_oracle(g, rng()));
    }
}

TEST_CASE("t_of_vertex") {
    PrimeGraph g = l4_19_graph();
    CHECK(t_of_vertex(g, Nat(2)) == 2);
    CHECK(t_of_vertex(g, Nat(19)) == 3);
    CHECK(t_of_vertex(complete_graph({Nat(2), Nat(3), Nat(5)}), Nat(3)) == 1);
    CHECK_THROWS_AS(t_of_vertex(g, Nat(11)), UnknownVertex);
}

TEST_CASE("full_degree_set") {
    CHECK(full_degree_set(l4_19_graph()).empty());
    auto k3 = full_degree_set(complete_graph({Nat(2), Nat(3), Nat(5)}));
    CHECK(k3 == std::vector<Nat>{Nat(2), Nat(3), Nat(5)});
}

TEST_CASE("degree_majorized_by") {
    std::vector<Nat> vs{Nat(2), Nat(3), Nat(5), Nat(7)};
    PrimeGraph c4 = PrimeGraph::build(
        vs, {{Nat(2), Nat(3)}, {Nat(3), Nat(5)}, {Nat(5), Nat(7)}, {Nat(7), Nat(2)}});
    PrimeGraph k4 = complete_graph(vs);
    CHECK(degree_majorized_by(c4, k4));
    CHECK_FALSE(degree_majorized_by(k4, c4));
    CHECK(degree_majorized_by(c4, c4));
    CHECK_THROWS_AS(degree_majorized_by(c4, complete_graph({Nat(2), Nat(3)})), VertexMismatch);
}

TEST_CASE("graph is degree-majorized by the union of complete graphs on its components") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 3 + trial % 8;
        std::vector<Nat> vs;
        for (std::size_t i = 0; i < n; ++i) vs.emplace_back(static_cast<unsigned long>(2 + i));
        std::vector<std::pair<Nat, Nat>> edges;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (rng() % 2 == 0) edges.emplace_back(vs[i], vs[j]);
        PrimeGraph g = PrimeGraph::build(vs, edges);
        PrimeGraph cliques = PrimeGraph::from_clique_components(components(g).components);
        CHECK(degree_majorized_by(g, cliques));
        CHECK(vartheta(g) % 2 == 0);
        CHECK(vartheta(g) == 2 * g.edge_count());
    }
}

TEST_CASE("compact form merges closed-neighbourhood twins") {
    auto cf = compact_form(l4_19_graph());
    REQUIRE(cf.classes.size() == 5);
    // {2,5} merge; 3, 19, 127, 181 stay single.
    bool found25 = false;
    for (const auto& c : cf.classes)
        if (c == std::vector<Nat>{Nat(2), Nat(5)}) found25 = true;
    CHECK(found25);

    auto k3 = compact_form(complete_graph({Nat(2), Nat(3), Nat(5)}));
    CHECK(k3.classes.size() == 1);
    CHECK(k3.edges.empty());

    // Isolated vertices are not twins (classes must induce cliques).
    auto iso = compact_form(edgeless({Nat(2), Nat(3), Nat(5)}));
    CHECK(iso.classes.size() == 3);

    // Pinned vertices stay singleton classes.
    auto pinned = compact_form(complete_graph({Nat(2), Nat(3), Nat(5)}), {Nat(3)});
    CHECK(pinned.classes.size() == 2);
    bool three_alone = false;
    for (const auto& c : pinned.classes)
        if (c == std::vector<Nat>{Nat(3)}) three_alone = true;
    CHECK(three_alone);
    CHECK(expand_compact(pinned) == complete_graph({Nat(2), Nat(3), Nat(5)}));
}

TEST_CASE("compact form is lossless") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 2 + trial % 9;
        std::vector<Nat> vs;
        for (std::size_t i = 0; i < n; ++i) vs.emplace_back(static_cast<unsigned long>(2 + i));
        std::vector<std::pair<Nat, Nat>> edges;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (rng() % 2 == 0) edges.emplace_back(vs[i], vs[j]);
        PrimeGraph g = PrimeGraph::build(vs, edges);
        CHECK(expand_compact(compact_form(g)) == g);
    }
}

TEST_CASE("exports are deterministic and well-formed") {
    PrimeGraph g = l4_19_graph();
    std::string a = export_graph(g, ExportFormat::structured);
    std::string b = export_graph(g, ExportFormat::structured);
    CHECK(a == b);
    CHECK(a.find("\"vertices\"") < a.find("\"edges\""));
    CHECK(a.find("\"edges\"") < a.find("\"degree_pattern\""));
    CHECK(a.find("\"vartheta\"") < a.find("\"components\""));

    std::string dot = export_graph(g, ExportFormat::dot_compact);
    CHECK(dot.find("label=\"2,5\"") != std::string::npos);
    CHECK(dot.find("graph GK {") == 0);

    std::string el = export_graph(g, ExportFormat::edge_list);
    CHECK(el.find("vertices: 2 3 5 19 127 181") == 0);
}
