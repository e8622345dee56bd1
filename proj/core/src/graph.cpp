#include "primegraph/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace primegraph::graph {

namespace {

std::vector<Nat> sorted_unique(std::vector<Nat> vs) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

}  // namespace

PrimeGraph PrimeGraph::build(std::vector<Nat> vertices,
                             const std::vector<std::pair<Nat, Nat>>& edges) {
    PrimeGraph g;
    g.verts_ = sorted_unique(std::move(vertices));
    g.adj_.assign(g.verts_.size(), std::vector<bool>(g.verts_.size(), false));
    for (const auto& [a, b] : edges) {
        std::size_t i = g.index_of_checked(a);
        std::size_t j = g.index_of_checked(b);
        if (i == j) continue;  // no self-loops
        g.adj_[i][j] = g.adj_[j][i] = true;
    }
    return g;
}

PrimeGraph PrimeGraph::from_adjacency(
    std::vector<Nat> vertices, const std::function<bool(const Nat&, const Nat&)>& adjacent) {
    PrimeGraph g;
    g.verts_ = sorted_unique(std::move(vertices));
    std::size_t n = g.verts_.size();
    g.adj_.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (adjacent(g.verts_[i], g.verts_[j])) g.adj_[i][j] = g.adj_[j][i] = true;
    return g;
}

PrimeGraph PrimeGraph::from_clique_components(const std::vector<std::vector<Nat>>& components) {
    std::vector<Nat> vertices;
    std::vector<std::pair<Nat, Nat>> edges;
    for (const auto& comp : components) {
        for (const auto& v : comp) vertices.push_back(v);
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (std::size_t j = i + 1; j < comp.size(); ++j) edges.emplace_back(comp[i], comp[j]);
    }
    return build(std::move(vertices), edges);
}

std::optional<std::size_t> PrimeGraph::index_of(const Nat& v) const {
    auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
    if (it != verts_.end() && *it == v) return static_cast<std::size_t>(it - verts_.begin());
    return std::nullopt;
}

std::size_t PrimeGraph::index_of_checked(const Nat& v) const {
    auto idx = index_of(v);
    if (!idx) throw UnknownVertex("vertex " + v.get_str() + " not in graph");
    return *idx;
}

bool PrimeGraph::adjacent_values(const Nat& a, const Nat& b) const {
    return adjacent(index_of_checked(a), index_of_checked(b));
}

unsigned PrimeGraph::degree(std::size_t i) const {
    unsigned d = 0;
    for (std::size_t j = 0; j < verts_.size(); ++j)
        if (adj_[i][j]) ++d;
    return d;
}

std::vector<std::pair<Nat, Nat>> PrimeGraph::edges() const {
    std::vector<std::pair<Nat, Nat>> out;
    for (std::size_t i = 0; i < verts_.size(); ++i)
        for (std::size_t j = i + 1; j < verts_.size(); ++j)
            if (adj_[i][j]) out.emplace_back(verts_[i], verts_[j]);
    return out;
}

std::size_t PrimeGraph::edge_count() const { return edges().size(); }

DegreePattern degree_pattern(const PrimeGraph& g) {
    DegreePattern p;
    p.degrees.reserve(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) p.degrees.push_back(g.degree(i));
    return p;
}

std::string DegreePattern::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (i) os << ", ";
        os << degrees[i];
    }
    os << ')';
    return os.str();
}

unsigned long long vartheta(const PrimeGraph& g) {
    unsigned long long sum = 0;
    for (std::size_t i = 0; i < g.size(); ++i) sum += g.degree(i);
    return sum;
}

ComponentDecomposition components(const PrimeGraph& g) {
    ComponentDecomposition out;
    std::vector<bool> seen(g.size(), false);
    for (std::size_t start = 0; start < g.size(); ++start) {
        if (seen[start]) continue;
        std::vector<std::size_t> stack{start};
        std::vector<Nat> comp;
        seen[start] = true;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            comp.push_back(g.vertices()[v]);
            for (std::size_t w = 0; w < g.size(); ++w) {
                if (g.adjacent(v, w) && !seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.components.push_back(std::move(comp));
    }
    for (std::size_t k = 0; k < out.components.size(); ++k)
        if (std::find(out.components[k].begin(), out.components[k].end(), Nat(2)) !=
            out.components[k].end())
            out.principal_index = k;
    return out;
}

std::pair<unsigned long long, unsigned long long> theta_bounds(
    const std::vector<std::size_t>& component_sizes, bool principal_size_first) {
    if (component_sizes.empty()) return {0, 0};
    for (std::size_t n : component_sizes)
        if (n == 0) throw std::invalid_argument("component sizes must be >= 1");
    unsigned long long upper = 0;
    for (std::size_t n : component_sizes)
        upper += static_cast<unsigned long long>(n) * (n - 1);
    std::size_t n1 = principal_size_first
                         ? component_sizes.front()
                         : *std::max_element(component_sizes.begin(), component_sizes.end());
    unsigned long long lower =
        upper - static_cast<unsigned long long>(n1 - 1) * (n1 >= 2 ? n1 - 2 : 0);
    return {lower, upper};
}

ThetaEqualityReport check_theta_equality(const PrimeGraph& g) {
    ThetaEqualityReport rep;
    rep.theta = vartheta(g);
    ComponentDecomposition cd = components(g);
    std::size_t principal = cd.principal_index.value_or(0);
    std::vector<std::size_t> sizes;
    sizes.push_back(cd.components.empty() ? 1 : cd.components[principal].size());
    for (std::size_t k = 0; k < cd.components.size(); ++k)
        if (k != principal) sizes.push_back(cd.components[k].size());
    if (cd.components.empty()) sizes.clear();
    rep.component_sizes = sizes;
    auto [lo, hi] = theta_bounds(sizes, true);
    rep.lower = lo;
    rep.upper = hi;
    rep.bounds_hold = lo <= rep.theta && rep.theta <= hi;

    rep.principal_complete = true;
    if (!cd.components.empty()) {
        const auto& pc = cd.components[principal];
        for (std::size_t i = 0; i < pc.size() && rep.principal_complete; ++i)
            for (std::size_t j = i + 1; j < pc.size(); ++j)
                if (!g.adjacent_values(pc[i], pc[j])) {
                    rep.principal_complete = false;
                    break;
                }
    }
    rep.equality_when_complete = !rep.principal_complete || rep.theta == rep.upper;
    return rep;
}

unsigned long long frobenius_vartheta(std::size_t kernel_primes, std::size_t complement_primes,
                                      bool complement_solvable) {
    if (kernel_primes < 1 || complement_primes < 1)
        throw std::invalid_argument("frobenius_vartheta: prime counts must be >= 1");
    if (!complement_solvable && complement_primes < 3)
        throw InvalidComplement(
            "a non-solvable complement carries at least the primes 2, 3 and 5");
    unsigned long long nk = kernel_primes, nc = complement_primes;
    unsigned long long theta = nk * (nk - 1) + nc * (nc - 1);
    return complement_solvable ? theta : theta - 2;
}

namespace {

constexpr std::size_t kIndependenceCap = 24;

// Max independent set on <= 64 vertices via mask-based branch and bound.
struct MisSolver {
    std::vector<std::uint64_t> nbr;
    unsigned best = 0;

    unsigned solve(std::uint64_t candidates, unsigned depth) {
        if (candidates == 0) return depth;
        unsigned bound = depth + static_cast<unsigned>(__builtin_popcountll(candidates));
        if (bound <= best) return 0;
        // Branch on the candidate of largest degree within the candidate set.
        int pick = -1;
        int pick_deg = -1;
        for (std::uint64_t m = candidates; m;) {
            int v = __builtin_ctzll(m);
            m &= m - 1;
            int d = __builtin_popcountll(nbr[v] & candidates);
            if (d > pick_deg) {
                pick_deg = d;
                pick = v;
            }
        }
        // Isolated candidates can all be taken.
        if (pick_deg == 0) {
            unsigned total = depth + static_cast<unsigned>(__builtin_popcountll(candidates));
            best = std::max(best, total);
            return total;
        }
        std::uint64_t bit = 1ull << pick;
        unsigned with = solve((candidates & ~nbr[pick]) & ~bit, depth + 1);
        unsigned without = solve(candidates & ~bit, depth);
        unsigned r = std::max(with, without);
        best = std::max(best, r);
        return r;
    }
};

unsigned mis_size(const PrimeGraph& g, std::uint64_t candidates, std::uint64_t forced) {
    MisSolver s;
    s.nbr.assign(g.size(), 0);
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            if (g.adjacent(i, j)) s.nbr[i] |= 1ull << j;
    unsigned base = static_cast<unsigned>(__builtin_popcountll(forced));
    std::uint64_t cand = candidates;
    for (std::uint64_t m = forced; m;) {
        int v = __builtin_ctzll(m);
        m &= m - 1;
        cand &= ~s.nbr[v];
    }
    cand &= ~forced;
    return base + s.solve(cand, 0);
}

}  // namespace

IndependenceResult independence_number(const PrimeGraph& g) {
    if (g.size() > kIndependenceCap)
        throw TooLarge("independence search capped at " + std::to_string(kIndependenceCap) +
                       " vertices");
    IndependenceResult res;
    if (g.size() == 0) return res;
    std::uint64_t all = g.size() == 64 ? ~0ull : (1ull << g.size()) - 1;
    res.size = mis_size(g, all, 0);
    // Lexicographically least maximum witness: force vertices in ascending
    // order whenever a maximum set through the chosen prefix still exists.
    std::uint64_t forced = 0;
    for (std::size_t v = 0; v < g.size(); ++v) {
        bool clash = false;
        for (std::uint64_t m = forced; m;) {
            int u = __builtin_ctzll(m);
            m &= m - 1;
            if (g.adjacent(static_cast<std::size_t>(u), v)) clash = true;
        }
        if (clash) continue;
        std::uint64_t attempt = forced | (1ull << v);
        if (mis_size(g, all, attempt) == res.size) forced = attempt;
    }
    for (std::uint64_t m = forced; m;) {
        int v = __builtin_ctzll(m);
        m &= m - 1;
        res.witness.push_back(g.vertices()[static_cast<std::size_t>(v)]);
    }
    return res;
}

unsigned t_of_vertex(const PrimeGraph& g, const Nat& r) {
    if (g.size() > kIndependenceCap)
        throw TooLarge("independence search capped at " + std::to_string(kIndependenceCap) +
                       " vertices");
    std::size_t i = g.index_of_checked(r);
    std::uint64_t all = g.size() == 64 ? ~0ull : (1ull << g.size()) - 1;
    return mis_size(g, all, 1ull << i);
}

std::vector<Nat> full_degree_set(const PrimeGraph& g) {
    std::vector<Nat> out;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g.degree(i) + 1 == g.size()) out.push_back(g.vertices()[i]);
    return out;
}

bool degree_majorized_by(const PrimeGraph& a, const PrimeGraph& b) {
    if (a.vertices() != b.vertices())
        throw VertexMismatch("degree majorization requires identical vertex sets");
    std::vector<unsigned> da = degree_pattern(a).degrees;
    std::vector<unsigned> db = degree_pattern(b).degrees;
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    for (std::size_t i = 0; i < da.size(); ++i)
        if (da[i] > db[i]) return false;
    return true;
}

CompactForm compact_form(const PrimeGraph& g, const std::vector<Nat>& pinned) {
    const std::size_t n = g.size();
    std::vector<bool> pin(n, false);
    for (const Nat& v : pinned)
        if (auto idx = g.index_of(v)) pin[*idx] = true;
    // Classes: equal closed neighbourhoods (which forces mutual adjacency).
    std::vector<std::vector<bool>> closed(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) closed[i][j] = g.adjacent(i, j);
        closed[i][i] = true;
    }
    std::vector<int> cls(n, -1);
    CompactForm cf;
    for (std::size_t i = 0; i < n; ++i) {
        if (cls[i] >= 0) continue;
        int id = static_cast<int>(cf.classes.size());
        cls[i] = id;
        cf.classes.push_back({g.vertices()[i]});
        if (pin[i]) continue;
        for (std::size_t j = i + 1; j < n; ++j)
            if (cls[j] < 0 && !pin[j] && closed[j] == closed[i]) {
                cls[j] = id;
                cf.classes[id].push_back(g.vertices()[j]);
            }
    }
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (g.adjacent(i, j) && cls[i] != cls[j])
                edges.insert({std::min(cls[i], cls[j]), std::max(cls[i], cls[j])});
    cf.edges.assign(edges.begin(), edges.end());
    return cf;
}

PrimeGraph expand_compact(const CompactForm& cf) {
    std::vector<Nat> vertices;
    std::vector<std::pair<Nat, Nat>> edges;
    for (const auto& c : cf.classes) {
        for (const auto& v : c) vertices.push_back(v);
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j) edges.emplace_back(c[i], c[j]);
    }
    for (const auto& [a, b] : cf.edges)
        for (const auto& u : cf.classes[a])
            for (const auto& v : cf.classes[b]) edges.emplace_back(u, v);
    return PrimeGraph::build(std::move(vertices), edges);
}

std::string export_graph(const PrimeGraph& g, ExportFormat format) {
    switch (format) {
        case ExportFormat::edge_list: {
            std::ostringstream os;
            os << "vertices:";
            for (const auto& v : g.vertices()) os << ' ' << v.get_str();
            os << '\n';
            for (const auto& [a, b] : g.edges()) os << a.get_str() << ' ' << b.get_str() << '\n';
            return os.str();
        }
        case ExportFormat::structured: {
            nlohmann::ordered_json j;
            j["vertices"] = nlohmann::ordered_json::array();
            for (const auto& v : g.vertices()) j["vertices"].push_back(v.get_str());
            j["edges"] = nlohmann::ordered_json::array();
            for (const auto& [a, b] : g.edges())
                j["edges"].push_back({a.get_str(), b.get_str()});
            j["degree_pattern"] = degree_pattern(g).degrees;
            j["vartheta"] = vartheta(g);
            j["components"] = nlohmann::ordered_json::array();
            for (const auto& comp : components(g).components) {
                nlohmann::ordered_json c = nlohmann::ordered_json::array();
                for (const auto& v : comp) c.push_back(v.get_str());
                j["components"].push_back(std::move(c));
            }
            return j.dump(2) + "\n";
        }
        case ExportFormat::dot_compact:
            return render_dot(compact_form(g));
    }
    throw std::logic_error("unreachable export format");
}

std::string render_dot(const CompactForm& cf) {
    std::ostringstream os;
    os << "graph GK {\n";
    for (std::size_t k = 0; k < cf.classes.size(); ++k) {
        os << "  n" << k << " [label=\"";
        for (std::size_t i = 0; i < cf.classes[k].size(); ++i) {
            if (i) os << ',';
            os << cf.classes[k][i].get_str();
        }
        os << "\"];\n";
    }
    for (const auto& [a, b] : cf.edges) os << "  n" << a << " -- n" << b << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace primegraph::graph
