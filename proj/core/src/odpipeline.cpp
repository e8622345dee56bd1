#include "primegraph/odpipeline.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "primegraph/liedeg.hpp"
#include "primegraph/spectra.hpp"

namespace primegraph::odpipeline {

namespace {

std::string join_nats(const std::vector<Nat>& vs, const char* sep = ", ") {
    std::ostringstream os;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) os << sep;
        os << vs[i].get_str();
    }
    return os.str();
}

std::string join_names(const std::vector<std::string>& vs, const char* sep = ", ") {
    std::ostringstream os;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) os << sep;
        os << vs[i];
    }
    return os.str();
}

}  // namespace

const std::vector<Nat>& DeltaProfile::of(const Nat& p) const {
    static const std::vector<Nat> empty;
    auto it = delta_of.find(p.get_str());
    return it == delta_of.end() ? empty : it->second;
}

DeltaProfile delta_profile(const Factorization& order) {
    DeltaProfile prof;
    prof.order = order;
    for (const auto& fe : order.entries())
        if (fe.exponent == 1) prof.delta.push_back(fe.prime);
    for (const Nat& p : prof.delta) {
        std::vector<Nat> ds;
        for (const Nat& r : prof.delta) {
            if (r == p) continue;
            if (mpz_divisible_p(Nat(p - 1).get_mpz_t(), r.get_mpz_t())) continue;
            if (mpz_divisible_p(Nat(r - 1).get_mpz_t(), p.get_mpz_t())) continue;
            ds.push_back(r);
        }
        prof.delta_of[p.get_str()] = std::move(ds);
    }
    return prof;
}

bool is_cyclic_number(const Factorization& order) {
    if (!order.is_squarefree()) return false;
    const auto& es = order.entries();
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = 0; j < es.size(); ++j) {
            if (i == j) continue;
            if (mpz_divisible_p(Nat(es[j].prime - 1).get_mpz_t(), es[i].prime.get_mpz_t()))
                return false;
        }
    return true;
}

std::vector<catalog::CandidateRecord> candidate_simple_groups(
    const Nat& max_prime, const std::vector<Nat>& allowed, const catalog::CandidateTable* table) {
    if (!table) throw DatasetMissing("candidate dataset not loaded");
    if (std::find(allowed.begin(), allowed.end(), max_prime) == allowed.end())
        throw std::invalid_argument("max_prime must be a member of the allowed set");
    auto subset_of_allowed = [&](const std::vector<Nat>& ps) {
        for (const Nat& p : ps)
            if (std::find(allowed.begin(), allowed.end(), p) == allowed.end()) return false;
        return true;
    };
    std::vector<catalog::CandidateRecord> out;
    for (const catalog::CandidateRecord* rec : table->with_max_prime(max_prime))
        if (subset_of_allowed(rec->order.primes())) out.push_back(*rec);
    // Alternating degrees from max_prime up to the next prime (exclusive)
    // have max_prime as their largest prime; filter them the same way.
    Nat next = arith::next_prime_above(max_prime);
    for (Nat n = max_prime; n < next; ++n) {
        if (n < 5 || !n.fits_ulong_p()) continue;
        unsigned deg = static_cast<unsigned>(n.get_ui());
        Factorization ord = catalog::alternating_order(deg);
        if (!subset_of_allowed(ord.primes())) continue;
        catalog::CandidateRecord rec;
        rec.name = "Alt(" + std::to_string(deg) + ")";
        rec.order = std::move(ord);
        rec.max_prime = max_prime;
        rec.source = "alternating";
        out.push_back(std::move(rec));
    }
    return out;
}

std::optional<NonOdWitness> non_od_witness(const Factorization& order_g,
                                           const graph::DegreePattern& pattern_g,
                                           const Factorization& order_h,
                                           const graph::DegreePattern& pattern_h) {
    if (!order_h.divides(order_g)) return std::nullopt;
    Factorization quotient = order_g.divide_exact(order_h);
    if (quotient.empty()) return std::nullopt;  // equal orders: nothing to build

    std::vector<Nat> pg = order_g.primes();
    std::vector<Nat> ph = order_h.primes();
    if (pg != ph) return std::nullopt;  // patterns not alignable
    if (pattern_g.degrees.size() != pg.size() || pattern_h.degrees.size() != ph.size())
        return std::nullopt;

    std::vector<Nat> qprimes = quotient.primes();
    const std::size_t k = pg.size();
    auto index_of = [&](const Nat& p) {
        return static_cast<std::size_t>(
            std::lower_bound(pg.begin(), pg.end(), p) - pg.begin());
    };
    // Every quotient prime must already have full degree in G.
    for (const Nat& p : qprimes)
        if (pattern_g.degrees[index_of(p)] != k - 1) return std::nullopt;

    bool certified = false;
    if (qprimes.size() == 1) {
        // Joining u to everything raises each non-neighbour's degree by one
        // and u's to k-1; the increments must match D(G) - D(H) exactly in
        // count: sum of increments = (k-1) - deg_H(u).
        std::size_t u = index_of(qprimes.front());
        long long expected_joins =
            static_cast<long long>(k - 1) - static_cast<long long>(pattern_h.degrees[u]);
        long long seen = 0;
        bool ok = true;
        for (std::size_t i = 0; i < k && ok; ++i) {
            if (i == u) continue;
            long long d = static_cast<long long>(pattern_g.degrees[i]) -
                          static_cast<long long>(pattern_h.degrees[i]);
            if (d != 0 && d != 1) ok = false;
            seen += d;
        }
        certified = ok && seen == expected_joins;
    } else {
        // Multi-prime quotients: certified only on the literal path, where
        // the quotient primes are already full in H and the patterns agree.
        certified = pattern_g.degrees == pattern_h.degrees;
        for (const Nat& p : qprimes)
            if (pattern_h.degrees[index_of(p)] != k - 1) certified = false;
    }
    if (!certified) return std::nullopt;

    NonOdWitness w;
    w.quotient = quotient.value();
    w.description = "nilpotent group of order " + w.quotient.get_str() +
                    " (direct factor) x H matches the order and degree pattern";
    return w;
}

const char* to_string(AssertKind k) {
    switch (k) {
        case AssertKind::divisibility: return "divisibility";
        case AssertKind::degree_bound: return "degree-bound";
        case AssertKind::candidate_list: return "candidate-list";
        case AssertKind::delta_adjacency: return "delta-adjacency";
        case AssertKind::residual_order: return "residual-order";
    }
    return "?";
}

bool Report::passed() const {
    for (const auto& a : assertions)
        if (!a.pass) return false;
    return true;
}

std::string Report::text() const {
    std::ostringstream os;
    os << title << "\n";
    for (const auto& a : assertions)
        os << "  [" << (a.pass ? "pass" : "FAIL") << "] (" << to_string(a.kind) << ") " << a.label
           << (a.details.empty() ? "" : ": " + a.details) << "\n";
    for (const auto& n : notes) os << "  note: " << n << "\n";
    os << "  verdict: " << (passed() ? "pass" : "fail") << "\n";
    return os.str();
}

std::string Report::json() const {
    nlohmann::ordered_json j;
    j["case"] = title;
    j["assertions"] = nlohmann::ordered_json::array();
    for (const auto& a : assertions) {
        nlohmann::ordered_json ja;
        ja["label"] = a.label;
        ja["kind"] = to_string(a.kind);
        ja["verdict"] = a.pass ? "pass" : "fail";
        ja["details"] = a.details;
        j["assertions"].push_back(std::move(ja));
    }
    j["verdict"] = passed() ? "pass" : "fail";
    j["notes"] = notes;
    return j.dump(2) + "\n";
}

const std::vector<L4RowExpected>& l4_rows_expected() {
    static const std::vector<L4RowExpected> rows = {
        {19, "2^7*3^7*5^2*19^6*127*181", {4, 4, 4, 3, 1, 2}},
        {23, "2^9*3^2*5*7*11^3*23^6*53*79", {5, 5, 3, 2, 5, 3, 3, 2}},
        {25, "2^10*3^4*5^12*7*13^2*31*313", {5, 5, 3, 3, 4, 3, 1}},
        {27, "2^7*3^18*5*7^2*13^3*73*757", {5, 3, 3, 5, 4, 3, 1}},
        {29, "2^7*3^2*5^2*7^3*13*29^6*67*421", {4, 5, 5, 6, 2, 4, 2, 2}},
        {31, "2^13*3^4*5^3*13*31^6*37*331", {5, 4, 4, 2, 3, 2, 2}},
        {32, "2^30*3^2*5^2*7*11^2*31^3*41*151", {3, 5, 3, 2, 5, 5, 3, 2}},
        {37, "2^7*3^7*5*7*19^2*37^6*67*137", {3, 5, 2, 2, 5, 3, 2, 2}},
    };
    return rows;
}

const std::vector<CaseExpected>& cases_expected() {
    static const std::vector<CaseExpected> cases = {
        {19,
         {"L2(19^2)", "S4(19)", "L4(19)"},
         "L4(19)",
         {{"L2(19^2)", {127}}, {"S4(19)", {127}}},
         true},
        {23, {"L3(23)", "L4(23)"}, "L4(23)", {{"L3(23)", {5, 53}}}, true},
        {25,
         {"L2(5^4)", "S4(25)", "2D4(5)", "L4(25)"},
         "L4(25)",
         {{"L2(5^4)", {7, 31}}, {"S4(25)", {7, 31}}, {"2D4(5)", {13}}},
         false},
        {27, {"L3(27)", "L4(27)"}, "L4(27)", {{"L3(27)", {5, 73}}}, true},
        {29,
         {"L2(29^2)", "S4(29)", "L4(29)"},
         "L4(29)",
         {{"L2(29^2)", {13, 67}}, {"S4(29)", {13, 67}}},
         true},
        {31, {"L3(31)", "L4(31)"}, "L4(31)", {{"L3(31)", {13, 37}}}, true},
        {32, {"L3(32)", "L4(32)"}, "L4(32)", {{"L3(32)", {41}}}, true},
        {37,
         {"L2(37^2)", "S4(37)", "L4(37)"},
         "L4(37)",
         {{"L2(37^2)", {67}}, {"S4(37)", {67}}},
         true},
    };
    return cases;
}

namespace {

const L4RowExpected& row_expected(unsigned q) {
    for (const auto& r : l4_rows_expected())
        if (r.q == q) return r;
    throw std::invalid_argument("q = " + std::to_string(q) +
                                " is not a packaged row (must be one of 19, 23, 25, 27, 29, "
                                "31, 32, 37)");
}

const CaseExpected& case_expected(unsigned q) {
    for (const auto& c : cases_expected())
        if (c.q == q) return c;
    throw std::invalid_argument("q = " + std::to_string(q) + " has no case data");
}

catalog::GroupId l4_group(unsigned q) {
    return catalog::Classical{catalog::ClassicalFamily::A, 4, Nat(static_cast<unsigned long>(q))};
}

void push(Report& rep, std::string label, AssertKind kind, bool pass, std::string details) {
    rep.assertions.push_back(CaseAssertion{std::move(label), kind, pass, std::move(details)});
}

// All graphs on the row's vertex set realizing its degree pattern, by
// exhaustive edge-subset enumeration. Only used for the 6-vertex case.
struct PatternEnumeration {
    unsigned long long matching = 0;
    bool independent_in_all = true;  // the top three primes pairwise non-adjacent
    bool t2_in_all = true;           // vertex 2 keeps a non-neighbour
};

PatternEnumeration enumerate_pattern_graphs(const std::vector<unsigned>& pattern) {
    const std::size_t n = pattern.size();
    if (n > 7) throw graph::TooLarge("pattern enumeration limited to 7 vertices");
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    PatternEnumeration res;
    for (std::uint64_t mask = 0; mask < (1ull << pairs.size()); ++mask) {
        std::vector<unsigned> deg(n, 0);
        for (std::size_t e = 0; e < pairs.size(); ++e)
            if (mask >> e & 1) {
                ++deg[pairs[e].first];
                ++deg[pairs[e].second];
            }
        if (deg != pattern) continue;
        ++res.matching;
        auto adjacent = [&](std::size_t a, std::size_t b) {
            for (std::size_t e = 0; e < pairs.size(); ++e)
                if ((mask >> e & 1) && ((pairs[e].first == a && pairs[e].second == b) ||
                                        (pairs[e].first == b && pairs[e].second == a)))
                    return true;
            return false;
        };
        // Top three vertices by index are the three largest primes here.
        if (adjacent(n - 3, n - 2) || adjacent(n - 3, n - 1) || adjacent(n - 2, n - 1))
            res.independent_in_all = false;
        bool has_nonneighbour = false;
        for (std::size_t j = 1; j < n; ++j)
            if (!adjacent(0, j)) has_nonneighbour = true;
        if (!has_nonneighbour) res.t2_in_all = false;
    }
    return res;
}

}  // namespace

Report verify_table2(unsigned q, const data::DataContext& data) {
    const L4RowExpected& row = row_expected(q);
    Report rep;
    rep.title = "table2 q=" + std::to_string(q);

    Factorization expected = Factorization::parse(row.order);
    Nat qq(static_cast<unsigned long>(q));

    // Route 1: the family order machinery. Route 2: evaluate
    // q^6(q^2-1)(q^3-1)(q^4-1)/(4,q-1) and factor the integer outright.
    Factorization via_family = catalog::order(l4_group(q));
    Nat direct = pow_nat(qq, 6) * (qq * qq - 1) * (pow_nat(qq, 3) - 1) * (pow_nat(qq, 4) - 1);
    Nat d, four = 4, qm1 = qq - 1;
    mpz_gcd(d.get_mpz_t(), four.get_mpz_t(), qm1.get_mpz_t());
    direct /= d;
    Factorization via_integer = arith::factor(direct);
    push(rep, "order formula factors to the stored factorization", AssertKind::divisibility,
         via_family == expected && via_integer == expected,
         "family machinery: " + via_family.str() + "; direct integer route: " + via_integer.str() +
             "; stored: " + expected.str());

    const spectra::Spectrum* mu = data.l4_spectra.find(q);
    if (!mu) throw DatasetMissing("no packaged spectrum for q = " + std::to_string(q));
    for (const std::string& n : mu->notes) rep.notes.push_back("spectrum: " + n);

    std::set<std::string> sp;
    for (const Nat& m : mu->mu)
        for (const Nat& p : arith::factor(m).primes()) sp.insert(p.get_str());
    std::set<std::string> op;
    for (const Nat& p : expected.primes()) op.insert(p.get_str());
    push(rep, "spectrum primes equal order primes", AssertKind::divisibility, sp == op, "");

    graph::PrimeGraph gk = spectra::prime_graph_from_spectrum(*mu);
    graph::DegreePattern derived = graph::degree_pattern(gk);
    push(rep, "derived degree pattern equals the stored pattern", AssertKind::degree_bound,
         derived.degrees == row.degree_pattern,
         "derived " + derived.str() + ", stored " +
             graph::DegreePattern{row.degree_pattern}.str());

    bool powers_ok = true;
    std::string bad;
    for (const Nat& m : mu->mu) {
        Factorization mf = arith::factor(m);
        for (const auto& fe : mf.entries()) {
            if (expected.exponent_of(fe.prime) < fe.exponent) {
                powers_ok = false;
                bad = m.get_str() + " carries " + fe.prime.get_str() + "^" +
                      std::to_string(fe.exponent);
            }
        }
    }
    push(rep, "every spectrum member's prime powers divide the order", AssertKind::divisibility,
         powers_ok, bad);
    return rep;
}

Report verify_characterization_case(unsigned q, const data::DataContext& data) {
    const CaseExpected& cs = case_expected(q);
    const L4RowExpected& row = row_expected(q);
    Report rep;
    rep.title = "case q=" + std::to_string(q);
    rep.notes.push_back(
        "structural step consumed as an assumption: with t >= 3 and t(2,.) >= 2, the quotient "
        "by the maximal normal solvable subgroup is almost simple");
    if (!cs.in_headline_list)
        rep.notes.push_back(
            "q=25 is verified by the case analysis but absent from the companion list of "
            "characterized groups {19, 23, 27, 29, 31, 32, 37}");
    if (q == 37)
        rep.notes.push_back(
            "the published case text misprints the group as L4(47) in three places; all "
            "arithmetic here uses q=37");

    Factorization orderG = Factorization::parse(row.order);
    const spectra::Spectrum* mu = data.l4_spectra.find(q);
    if (!mu) throw DatasetMissing("no packaged spectrum for q = " + std::to_string(q));
    graph::PrimeGraph gk = spectra::prime_graph_from_spectrum(*mu);

    // (a) independence bounds.
    graph::IndependenceResult ind = graph::independence_number(gk);
    push(rep, "t(GK) >= 3", AssertKind::degree_bound, ind.size >= 3,
         "t = " + std::to_string(ind.size) + ", witness {" + join_nats(ind.witness) + "}");
    unsigned t2 = graph::t_of_vertex(gk, Nat(2));
    push(rep, "t(2, GK) >= 2", AssertKind::degree_bound, t2 >= 2, "t(2) = " + std::to_string(t2));

    // (b) candidate list from the packaged table plus alternating exclusion.
    std::vector<Nat> allowed = orderG.primes();
    Nat max_prime = orderG.max_prime();
    std::vector<catalog::CandidateRecord> cands =
        candidate_simple_groups(max_prime, allowed, &data.candidates);
    std::vector<std::string> computed_names;
    for (const auto& r : cands) computed_names.push_back(r.name);

    bool printed_covered = true;
    std::string missing;
    for (const std::string& name : cs.printed_candidates)
        if (std::find(computed_names.begin(), computed_names.end(), name) ==
            computed_names.end()) {
            printed_covered = false;
            missing += name + " ";
        }
    push(rep, "every printed candidate is recovered by the table filter",
         AssertKind::candidate_list, printed_covered,
         printed_covered ? "computed {" + join_names(computed_names) + "}"
                         : "missing: " + missing);

    bool extras_excluded = true;
    std::vector<std::string> extras;
    for (const auto& r : cands) {
        if (std::find(cs.printed_candidates.begin(), cs.printed_candidates.end(), r.name) !=
            cs.printed_candidates.end())
            continue;
        extras.push_back(r.name);
        if (r.order.divides(orderG)) extras_excluded = false;
    }
    push(rep, "candidates beyond the printed list are eliminated by order divisibility",
         AssertKind::candidate_list, extras_excluded,
         extras.empty() ? "no extras" : "extras: {" + join_names(extras) + "}");

    // (c)/(e) residual orders.
    for (const std::string& name : cs.printed_candidates) {
        const catalog::CandidateRecord* rec = data.candidates.find(name);
        if (!rec) {
            push(rep, "record " + name + " present in the dataset", AssertKind::candidate_list,
                 false, "");
            continue;
        }
        if (name == cs.target) {
            bool unit = rec->order == orderG;
            push(rep, "target " + name + " has residual 1", AssertKind::residual_order, unit,
                 unit ? "" : "stored order differs from |G|");
            continue;
        }
        if (!rec->order.divides(orderG)) {
            push(rep, "residual |G|/|" + name + "| exists", AssertKind::residual_order, false,
                 "order does not divide |G|");
            continue;
        }
        Factorization residual = orderG.divide_exact(rec->order);
        bool contr_ok = true;
        std::vector<unsigned long> ps;
        auto it = cs.contradiction_primes.find(name);
        if (it != cs.contradiction_primes.end()) ps = it->second;
        for (unsigned long p : ps)
            if (residual.exponent_of(Nat(p)) == 0) contr_ok = false;
        std::ostringstream lbl;
        lbl << "residual over " << name << " is divisible by {";
        for (std::size_t i = 0; i < ps.size(); ++i) lbl << (i ? ", " : "") << ps[i];
        lbl << "}";
        push(rep, lbl.str(), AssertKind::residual_order, contr_ok,
             "residual = " + residual.str());
        // The outer-automorphism claims stay annotations: divisibility
        // conclusions above rest on the residual factorization alone.
        if (auto claim = catalog::out_order_claim(name)) {
            std::string note = "recorded |Out(" + name + ")| claim: " + std::to_string(*claim);
            if (auto dfg = catalog::out_order_dfg(name)) {
                note += ", d*f*g gives " + std::to_string(*dfg);
                if (*dfg != *claim) note += " (discrepancy, reported unresolved)";
            }
            rep.notes.push_back(note);
        }
    }

    // (d) case-specific Delta and degree-chain assertions.
    DeltaProfile prof = delta_profile(orderG);
    auto stored_deg = [&](unsigned long p) {
        auto idx = gk.index_of(Nat(p));
        return idx ? row.degree_pattern[*idx] : 0u;
    };
    auto delta_exact = [&](unsigned long p, std::vector<unsigned long> want) {
        std::vector<Nat> wn;
        for (unsigned long w : want) wn.emplace_back(w);
        const std::vector<Nat>& got = prof.of(Nat(p));
        std::ostringstream lbl;
        lbl << "Delta(" << p << ") = {";
        for (std::size_t i = 0; i < want.size(); ++i) lbl << (i ? ", " : "") << want[i];
        lbl << "}";
        push(rep, lbl.str(), AssertKind::delta_adjacency, got == wn,
             "computed {" + join_nats(got) + "}");
    };
    auto delta_beats_degree = [&](unsigned long p) {
        std::size_t dsz = prof.of(Nat(p)).size();
        unsigned deg = stored_deg(p);
        push(rep,
             "deg(" + std::to_string(p) + ") = " + std::to_string(deg) + " < |Delta(" +
                 std::to_string(p) + ")| = " + std::to_string(dsz) + ", so " + std::to_string(p) +
                 " cannot divide |K|",
             AssertKind::degree_bound, deg < dsz, "");
    };
    auto omega_free = [&](unsigned long a, unsigned long b) {
        bool absent = !spectra::omega_contains(*mu, Nat(a) * Nat(b));
        push(rep, std::to_string(a) + "*" + std::to_string(b) + " is not an element order",
             AssertKind::divisibility, absent, "");
    };
    // The pinned-neighbourhood chain: if u divided |K| it would be adjacent
    // to both members of Delta(u) = {a, b}; the high-degree vertex h (missing
    // exactly one neighbour) cannot be adjacent to u without overfilling
    // deg(u) = 2, so h is adjacent to everything else; a and b then have
    // their two slots filled by {u, h}, and every remaining vertex loses
    // {u, a, b} from its possible neighbours, capping its degree at |pi|-4 —
    // contradicted by the stored pattern.
    auto chain = [&](unsigned long u, unsigned long h, unsigned long a, unsigned long b) {
        delta_exact(u, {a, b});
        std::size_t k = row.degree_pattern.size();
        bool ok = stored_deg(u) == 2 && stored_deg(h) == k - 2 && stored_deg(a) == 2 &&
                  stored_deg(b) == 2;
        unsigned max_other = 0;
        for (const Nat& p : orderG.primes()) {
            unsigned long pv = p.get_ui();
            if (pv == u || pv == h || pv == a || pv == b) continue;
            max_other = std::max(max_other, stored_deg(pv));
        }
        ok = ok && max_other > k - 4;
        std::ostringstream det;
        det << "deg(" << u << ")=2 filled by {" << a << "," << b << "}; deg(" << h << ")=" << k - 2
            << " forces " << h << " adjacent to all but " << u << "; deg(" << a << ")=deg(" << b
            << ")=2 pinned to {" << u << "," << h << "}; remaining degrees capped at " << k - 4
            << " but the pattern contains " << max_other;
        push(rep, std::to_string(u) + " cannot divide |K| (pinned-neighbourhood chain)",
             AssertKind::degree_bound, ok, det.str());
    };

    switch (q) {
        case 19: {
            delta_exact(127, {181});
            omega_free(127, 181);
            PatternEnumeration pe = enumerate_pattern_graphs(row.degree_pattern);
            push(rep, "exactly 3 graphs realize the degree pattern", AssertKind::degree_bound,
                 pe.matching == 3, "found " + std::to_string(pe.matching));
            push(rep, "{19, 127, 181} independent and t(2) >= 2 in every realization",
                 AssertKind::degree_bound, pe.independent_in_all && pe.t2_in_all, "");
            break;
        }
        case 23:
            delta_exact(79, {5, 7, 53});
            delta_beats_degree(79);
            delta_exact(7, {5, 53, 79});
            delta_beats_degree(7);
            break;
        case 25:
            delta_exact(313, {7, 31});
            delta_beats_degree(313);
            break;
        case 27:
            delta_exact(757, {5, 73});
            delta_beats_degree(757);
            break;
        case 29:
            chain(421, 7, 13, 67);
            break;
        case 31:
            chain(331, 2, 13, 37);
            break;
        case 32: {
            delta_exact(151, {7, 41});
            omega_free(11, 151);
            unsigned deg151 = stored_deg(151);
            push(rep,
                 "deg(151) = 2 is filled by Delta(151); a forced adjacency 11 ~ 151 would "
                 "overfill it",
                 AssertKind::degree_bound, deg151 == 2 && prof.of(Nat(151)).size() == 2,
                 "the 11 ~ 151 step rests on a Hall/Frattini argument, recorded as an "
                 "assumption");
            break;
        }
        case 37:
            delta_exact(137, {5, 7, 67});
            delta_beats_degree(137);
            break;
        default:
            break;
    }
    return rep;
}

}  // namespace primegraph::odpipeline
