#include <doctest.h>

#include "primegraph/liedeg.hpp"

using namespace primegraph;
using namespace primegraph::liedeg;
using catalog::Classical;
using catalog::ClassicalFamily;
using catalog::Exceptional;
using catalog::ExceptionalFamily;
using catalog::GroupId;
using catalog::SuzukiRee;
using catalog::SuzukiReeFamily;

namespace {

const spectra::SpectrumTable& packaged_spectra() {
    static const spectra::SpectrumTable t =
        spectra::SpectrumTable::load(std::string(PRIMEGRAPH_TEST_DATA_DIR) + "/table2_spectra.txt");
    return t;
}

GroupId L(unsigned n, unsigned long q) { return Classical{ClassicalFamily::A, n, Nat(q)}; }

}  // namespace

TEST_CASE("deg_p examples") {
    DegreeResult r = deg_p(L(4, 19));
    CHECK(r.value == 3);  // |pi| - |R3 u R4| - 1 = 6 - 2 - 1
    CHECK(r.vertex == 19);
    CHECK(r.pi_size == 6);
    REQUIRE(r.removed.size() == 2);
    CHECK(r.removed[0].primes == std::vector<Nat>{Nat(127)});
    CHECK(r.removed[1].primes == std::vector<Nat>{Nat(181)});
    CHECK(r.subtractive_shape_consistent());

    CHECK(deg_p(L(2, 13)).value == 0);
    CHECK(deg_p(L(2, 81)).value == 0);
    CHECK(deg_p(SuzukiRee{SuzukiReeFamily::TwoG2, Nat(27)}).value == 1);
    CHECK(deg_p(SuzukiRee{SuzukiReeFamily::TwoG2, Nat(27)}).vertex == 3);
    CHECK(deg_p(SuzukiRee{SuzukiReeFamily::TwoB2, Nat(8)}).value == 0);
}

TEST_CASE("deg_2 examples") {
    DegreeResult r = deg_2(L(4, 19));
    CHECK(r.value == 4);  // n_2 = 4 > (18)_2 = 2: drop R_3
    CHECK(r.branch.find("(q-1)_2 < n_2") != std::string::npos);
    REQUIRE(r.removed.size() == 1);
    CHECK(r.removed[0].m == 3);

    CHECK(deg_2(SuzukiRee{SuzukiReeFamily::TwoB2, Nat(8)}).value == 0);

    DegreeResult f4 = deg_2(SuzukiRee{SuzukiReeFamily::TwoF4, Nat(8)});
    CHECK(f4.value == 4);  // |pi(8^4 - 1)| = |{3,5,7,13}|
    CHECK_FALSE(f4.warning.has_value());

    DegreeResult g2 = deg_2(SuzukiRee{SuzukiReeFamily::TwoG2, Nat(27)});
    CHECK(g2.value == 2);  // literal value |pi(27^2-1)| - 1 = |{2,7,13}| - 1
    CHECK(g2.warning.has_value());
}

TEST_CASE("deg formulas match the stored patterns for the odd-q L4 rows") {
    const std::map<unsigned, std::pair<unsigned, unsigned>> expected = {
        // q -> (deg(2), deg(p)) read off the published degree patterns
        {19, {4, 3}}, {23, {5, 3}}, {25, {5, 3}}, {27, {5, 3}},
        {29, {4, 4}}, {31, {5, 3}}, {37, {3, 3}},
    };
    for (const auto& [q, want] : expected) {
        CHECK(deg_2(L(4, q)).value == want.first);
        CHECK(deg_p(L(4, q)).value == want.second);
    }
}

TEST_CASE("characteristic-2 classical inputs are rejected, A1 excepted") {
    CHECK_THROWS_AS(deg_2(L(4, 32)), CharacteristicUnsupported);
    CHECK_THROWS_AS(deg_p(L(3, 8)), CharacteristicUnsupported);
    CHECK_THROWS_AS(deg_p(Classical{ClassicalFamily::B, 3, Nat(4)}), CharacteristicUnsupported);
    CHECK_THROWS_AS(deg_p(Exceptional{ExceptionalFamily::G2, Nat(4)}), CharacteristicUnsupported);
    CHECK(deg_2(L(2, 32)).value == 0);
    CHECK(deg_p(L(2, 32)).value == 0);
}

TEST_CASE("cross-check: A1 over all prime powers 5..200") {
    for (unsigned long q = 5; q <= 200; ++q) {
        if (!arith::is_prime_power(Nat(q))) continue;
        CrossCheck cc = cross_check_degree(L(2, q));
        CHECK(cc.agree_2);
        CHECK(cc.agree_p);
    }
}

TEST_CASE("cross-check: Suzuki and Ree families") {
    for (unsigned long q : {8ul, 32ul, 128ul}) {
        CrossCheck cc = cross_check_degree(SuzukiRee{SuzukiReeFamily::TwoB2, Nat(q)});
        CHECK(cc.agree_2);
        CHECK(cc.agree_p);
    }
    for (unsigned long q : {8ul, 32ul}) {
        CrossCheck cc = cross_check_degree(SuzukiRee{SuzukiReeFamily::TwoF4, Nat(q)});
        CHECK(cc.agree_2);
        CHECK(cc.agree_p);
    }
    // The recorded discrepancy: literal 2G2 deg(2) vs the spectrum.
    for (unsigned long q : {27ul, 243ul}) {
        CrossCheck cc = cross_check_degree(SuzukiRee{SuzukiReeFamily::TwoG2, Nat(q)});
        CHECK(cc.agree_p);
        CHECK_FALSE(cc.agree_2);
        CHECK(cc.spectrum_2 == cc.formula_2.value + 1);
        CHECK_FALSE(cc.warnings.empty());
    }
}

TEST_CASE("cross-check: odd-q L4 rows against the packaged spectra") {
    for (unsigned q : {19u, 23u, 25u, 27u, 29u, 31u, 37u}) {
        CrossCheck cc = cross_check_degree(L(4, q), &packaged_spectra());
        CHECK(cc.agree_2);
        CHECK(cc.agree_p);
    }
}

TEST_CASE("cross-check: A2 closed form agrees with its spectrum") {
    for (unsigned long q : {5ul, 7ul, 13ul, 19ul, 25ul, 31ul, 49ul}) {
        CrossCheck cc = cross_check_degree(L(3, q));
        CHECK(cc.agree_2);
        CHECK(cc.agree_p);
    }
}

TEST_CASE("branch totality: every valid input fires exactly one branch") {
    // Sweep ranks and odd prime powers; deg_p/deg_2 must return (not throw),
    // satisfy the shape invariant, and stay below |pi(G)|.
    for (unsigned long q = 3; q <= 81; ++q) {
        if (!arith::is_prime_power(Nat(q))) continue;
        if (q % 2 == 0) continue;
        for (unsigned n = 2; n <= 12; ++n) {
            std::vector<GroupId> gs;
            if (!(n == 2 && q < 4)) gs.push_back(L(n, q));
            if (n >= 3) gs.push_back(Classical{ClassicalFamily::TwoA, n, Nat(q)});
            if (n >= 2) gs.push_back(Classical{ClassicalFamily::B, n, Nat(q)});
            if (n >= 2) gs.push_back(Classical{ClassicalFamily::C, n, Nat(q)});
            if (n >= 3) gs.push_back(Classical{ClassicalFamily::D, n, Nat(q)});
            if (n >= 2) gs.push_back(Classical{ClassicalFamily::TwoD, n, Nat(q)});
            for (const auto& g : gs) {
                DegreeResult dp = deg_p(g);
                DegreeResult d2 = deg_2(g);
                CHECK(dp.subtractive_shape_consistent());
                CHECK(d2.subtractive_shape_consistent());
                CHECK(dp.value < dp.pi_size);
                CHECK(d2.value < d2.pi_size);
                CHECK_FALSE(dp.branch.empty());
                CHECK_FALSE(d2.branch.empty());
            }
        }
    }
    for (unsigned long q : {3ul, 5ul, 7ul, 9ul, 11ul, 13ul}) {
        for (auto fam : {ExceptionalFamily::G2, ExceptionalFamily::F4, ExceptionalFamily::E6,
                         ExceptionalFamily::TwoE6, ExceptionalFamily::E7, ExceptionalFamily::E8,
                         ExceptionalFamily::ThreeD4}) {
            DegreeResult dp = deg_p(Exceptional{fam, Nat(q)});
            DegreeResult d2 = deg_2(Exceptional{fam, Nat(q)});
            CHECK(dp.subtractive_shape_consistent());
            CHECK(d2.subtractive_shape_consistent());
            CHECK(dp.value < dp.pi_size);
            CHECK(d2.value < d2.pi_size);
        }
    }
}
