#include <doctest.h>

#include <algorithm>

#include "primegraph/odpipeline.hpp"
#include "primegraph/spectra.hpp"

using namespace primegraph;
using namespace primegraph::odpipeline;

namespace {

const data::DataContext& ctx() {
    static const data::DataContext d = data::DataContext::load(PRIMEGRAPH_TEST_DATA_DIR);
    return d;
}

std::vector<Nat> nats(std::initializer_list<unsigned long> vs) {
    std::vector<Nat> out;
    for (auto v : vs) out.emplace_back(v);
    return out;
}

std::vector<std::string> names_of(const std::vector<catalog::CandidateRecord>& rs) {
    std::vector<std::string> out;
    for (const auto& r : rs) out.push_back(r.name);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("delta_profile: L4(23) values") {
    Factorization o = Factorization::parse("2^9*3^2*5*7*11^3*23^6*53*79");
    DeltaProfile prof = delta_profile(o);
    CHECK(prof.delta == nats({5, 7, 53, 79}));
    CHECK(prof.of(Nat(79)) == nats({5, 7, 53}));
    CHECK(prof.of(Nat(7)) == nats({5, 53, 79}));
    CHECK(prof.of(Nat(5)) == nats({7, 53, 79}));

    CHECK(delta_profile(Factorization::parse("2^3*3^2")).delta.empty());
}

TEST_CASE("delta_profile: agrees with a naive double loop") {
    for (const auto& row : l4_rows_expected()) {
        Factorization o = Factorization::parse(row.order);
        DeltaProfile prof = delta_profile(o);
        std::vector<Nat> delta;
        for (const auto& fe : o.entries())
            if (fe.exponent == 1) delta.push_back(fe.prime);
        REQUIRE(prof.delta == delta);
        for (const Nat& p : delta) {
            std::vector<Nat> want;
            for (const Nat& r : delta) {
                if (r == p) continue;
                Nat pm1 = p - 1, rm1 = r - 1;
                if (pm1 % r == 0 || rm1 % p == 0) continue;
                want.push_back(r);
            }
            CHECK(prof.of(p) == want);
        }
    }
}

TEST_CASE("is_cyclic_number") {
    CHECK(is_cyclic_number(Factorization::parse("3*5")));        // 15
    CHECK_FALSE(is_cyclic_number(Factorization::parse("2*3")));  // 6: 2 | 3-1
    CHECK(is_cyclic_number(Factorization::parse("3*5*17")));     // 255, settled by the oracle
    CHECK_FALSE(is_cyclic_number(Factorization::parse("2^2*3")));
    CHECK(is_cyclic_number(Factorization::one()));
}

TEST_CASE("candidate_simple_groups: published lists") {
    auto got181 = candidate_simple_groups(Nat(181), nats({2, 3, 5, 19, 127, 181}),
                                          &ctx().candidates);
    CHECK(names_of(got181) == std::vector<std::string>{"L2(19^2)", "L4(19)", "S4(19)"});

    auto got79 = candidate_simple_groups(Nat(79), nats({2, 3, 5, 7, 11, 23, 53, 79}),
                                         &ctx().candidates);
    CHECK(names_of(got79) == std::vector<std::string>{"L3(23)", "L4(23)"});

    auto got151 = candidate_simple_groups(Nat(151), nats({2, 3, 5, 7, 11, 31, 41, 151}),
                                          &ctx().candidates);
    CHECK(names_of(got151) == std::vector<std::string>{"L3(32)", "L4(32)"});
}

TEST_CASE("candidate_simple_groups: known surplus against the printed statement (3)") {
    // The packaged table's S8(5) row passes the statement's own filter:
    // 313 in pi(S8(5)) = {2,3,5,7,13,31,313} = the allowed set.
    auto got = candidate_simple_groups(Nat(313), nats({2, 3, 5, 7, 13, 31, 313}),
                                       &ctx().candidates);
    CHECK(names_of(got) ==
          std::vector<std::string>{"2D4(5)", "L2(5^4)", "L4(25)", "S4(25)", "S8(5)"});
}

TEST_CASE("candidate_simple_groups: alternating mechanism and errors") {
    auto got = candidate_simple_groups(Nat(5), nats({2, 3, 5}), &ctx().candidates);
    CHECK(names_of(got) == std::vector<std::string>{"Alt(5)", "Alt(6)"});
    for (const auto& r : got) CHECK(r.source == "alternating");

    CHECK_THROWS_AS(candidate_simple_groups(Nat(181), nats({2, 3}), &ctx().candidates),
                    std::invalid_argument);
    CHECK_THROWS_AS(candidate_simple_groups(Nat(181), nats({2, 181}), nullptr), DatasetMissing);
}

TEST_CASE("candidate_simple_groups: monotone in the allowed set") {
    std::vector<Nat> base = nats({2, 3, 5, 19, 127, 181});
    auto small = candidate_simple_groups(Nat(181), base, &ctx().candidates);
    std::vector<Nat> larger = base;
    larger.insert(larger.begin() + 3, Nat(7));
    larger.insert(larger.begin() + 4, Nat(13));
    auto big = candidate_simple_groups(Nat(181), larger, &ctx().candidates);
    for (const auto& name : names_of(small)) {
        auto bn = names_of(big);
        CHECK(std::find(bn.begin(), bn.end(), name) != bn.end());
    }
    CHECK(big.size() >= small.size());
    auto bn = names_of(big);
    CHECK(std::find(bn.begin(), bn.end(), "U3(49)") != bn.end());  // enters once 7, 13 allowed
}

TEST_CASE("non_od_witness: symmetric over alternating") {
    auto pattern_alt = [](unsigned n) { return graph::degree_pattern(spectra::gk_alternating(n)); };
    auto pattern_sym = [](unsigned n) { return graph::degree_pattern(spectra::gk_symmetric(n)); };
    auto order_alt = [](unsigned n) { return catalog::alternating_order(n); };
    auto order_sym = [](unsigned n) {
        return catalog::alternating_order(n).times(Factorization::parse("2"));
    };

    for (unsigned n : {9u, 10u, 16u, 27u}) {
        auto w = non_od_witness(order_sym(n), pattern_sym(n), order_alt(n), pattern_alt(n));
        REQUIRE(w.has_value());
        CHECK(w->quotient == 2);
    }
    // Negative control: deg(2) is not full in the symmetric-group graph of
    // degree 12 (2 and 11 stay non-adjacent), so no witness.
    auto w12 = non_od_witness(order_sym(12), pattern_sym(12), order_alt(12), pattern_alt(12));
    CHECK_FALSE(w12.has_value());
}

TEST_CASE("non_od_witness: degree-10 alternating group over J2") {
    Factorization oG = catalog::alternating_order(10);
    Factorization oH = catalog::sporadic_orders().at("J2");
    graph::DegreePattern dG = graph::degree_pattern(spectra::gk_alternating(10));
    graph::PrimeGraph j2 =
        graph::PrimeGraph::from_clique_components(*catalog::clique_components("J2"));
    graph::DegreePattern dH = graph::degree_pattern(j2);
    CHECK(dG.degrees == std::vector<unsigned>{2, 3, 2, 1});
    CHECK(dH.degrees == std::vector<unsigned>{2, 2, 2, 0});

    auto w = non_od_witness(oG, dG, oH, dH);
    REQUIRE(w.has_value());
    CHECK(w->quotient == 3);
    CHECK(w->description.find("order 3") != std::string::npos);

    // Identical orders: quotient 1, nothing claimed.
    CHECK_FALSE(non_od_witness(oG, dG, oG, dG).has_value());
    // |H| not dividing |G|: nothing.
    CHECK_FALSE(non_od_witness(oH, dH, oG, dG).has_value());
}

TEST_CASE("verify_table2: all packaged rows pass") {
    for (const auto& row : l4_rows_expected()) {
        Report rep = verify_table2(row.q, ctx());
        INFO(rep.text());
        CHECK(rep.passed());
        CHECK(rep.assertions.size() == 4);
    }
    CHECK_THROWS_AS(verify_table2(21, ctx()), std::invalid_argument);
}

TEST_CASE("verify_characterization_case: every case passes") {
    for (const auto& cs : cases_expected()) {
        Report rep = verify_characterization_case(cs.q, ctx());
        INFO(rep.text());
        CHECK(rep.passed());
    }
}

TEST_CASE("verify_characterization_case: case-specific assertions present") {
    Report r23 = verify_characterization_case(23, ctx());
    bool has_delta79 = false;
    for (const auto& a : r23.assertions)
        if (a.label.find("Delta(79)") != std::string::npos) has_delta79 = true;
    CHECK(has_delta79);

    Report r19 = verify_characterization_case(19, ctx());
    bool has_enum = false;
    for (const auto& a : r19.assertions)
        if (a.label.find("exactly 3 graphs") != std::string::npos && a.pass) has_enum = true;
    CHECK(has_enum);

    Report r37 = verify_characterization_case(37, ctx());
    bool misprint_note = false;
    for (const auto& n : r37.notes)
        if (n.find("L4(47)") != std::string::npos) misprint_note = true;
    CHECK(misprint_note);

    Report r25 = verify_characterization_case(25, ctx());
    bool headline_note = false;
    for (const auto& n : r25.notes)
        if (n.find("q=25") != std::string::npos) headline_note = true;
    CHECK(headline_note);
    bool extras_handled = false;
    for (const auto& a : r25.assertions)
        if (a.kind == AssertKind::candidate_list && a.details.find("S8(5)") != std::string::npos &&
            a.pass)
            extras_handled = true;
    CHECK(extras_handled);
}

TEST_CASE("reports serialize deterministically with stable field order") {
    Report rep = verify_table2(19, ctx());
    std::string a = rep.json(), b = rep.json();
    CHECK(a == b);
    CHECK(a.find("\"case\"") < a.find("\"assertions\""));
    CHECK(a.find("\"assertions\"") < a.find("\"verdict\""));
    CHECK(a.find("\"verdict\"") < a.find("\"notes\""));
    CHECK(rep.text().find("table2 q=19") == 0);
}
