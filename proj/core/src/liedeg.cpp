#include "primegraph/liedeg.hpp"

#include <algorithm>
#include <set>

namespace primegraph::liedeg {

namespace {

using catalog::Classical;
using catalog::ClassicalFamily;
using catalog::Exceptional;
using catalog::ExceptionalFamily;
using catalog::GroupId;
using catalog::SuzukiRee;
using catalog::SuzukiReeFamily;

struct Context {
    Nat q;
    Nat p;  // characteristic
    std::vector<Nat> pi;
};

Context make_context(const GroupId& g, const arith::FactorConfig& config) {
    Context ctx;
    const Nat* q = nullptr;
    if (const auto* c = std::get_if<Classical>(&g)) q = &c->q;
    if (const auto* e = std::get_if<Exceptional>(&g)) q = &e->q;
    if (const auto* s = std::get_if<SuzukiRee>(&g)) q = &s->q;
    if (!q) throw catalog::UnsupportedGroup("degree formulas cover groups of Lie type only");
    ctx.q = *q;
    ctx.p = catalog::field_of(*q).p;
    ctx.pi = catalog::pi_of(g, config);
    return ctx;
}

void require_odd_characteristic(const Context& ctx, const GroupId& g) {
    if (ctx.p == 2)
        throw CharacteristicUnsupported("the closed formulas for " + catalog::display_name(g) +
                                        " require odd characteristic");
}

RemovedSet r_set(const Context& ctx, unsigned long m) {
    return RemovedSet{m, arith::restricted_ppd(ctx.pi, ctx.q, m)};
}

DegreeResult subtractive(const Context& ctx, const Nat& vertex, std::string branch,
                         std::vector<RemovedSet> removed) {
    DegreeResult res;
    res.vertex = vertex;
    res.branch = std::move(branch);
    res.pi_size = ctx.pi.size();
    std::set<std::string> uni;
    for (const auto& rs : removed)
        for (const Nat& r : rs.primes) uni.insert(r.get_str());
    res.removed = std::move(removed);
    res.value = static_cast<unsigned>(ctx.pi.size() - uni.size() - 1);
    return res;
}

DegreeResult fixed_value(const Context& ctx, const Nat& vertex, unsigned value,
                         std::string branch) {
    DegreeResult res;
    res.vertex = vertex;
    res.value = value;
    res.branch = std::move(branch);
    res.pi_size = ctx.pi.size();
    return res;
}

// |pi(x)| for a divisor x of |G|, counted against pi(G).
unsigned pi_count_of_divisor(const Context& ctx, const Nat& x) {
    unsigned count = 0;
    for (const Nat& r : ctx.pi)
        if (mpz_divisible_p(x.get_mpz_t(), r.get_mpz_t())) ++count;
    return count;
}

unsigned two_part_exponent_value(const Nat& m) {
    // The 2-part as a value: 2^v2(m).
    return static_cast<unsigned>(to_u64(arith::p_part(m, Nat(2))));
}

DegreeResult deg_p_classical(const Classical& c, const Context& ctx) {
    const unsigned long n = c.n;
    const Nat& q = ctx.q;
    switch (c.family) {
        case ClassicalFamily::A: {
            if (ctx.p == 2) {
                if (n == 2)
                    return fixed_value(ctx, ctx.p, 0, "A1: even q, three clique components");
                throw CharacteristicUnsupported(
                    "A-family formulas at even q are limited to A1");
            }
            if (n == 2) return fixed_value(ctx, ctx.p, 0, "A1: deg(p) = 0");
            if (n == 3) {
                Nat d;
                Nat three = 3, qm1 = q - 1;
                mpz_gcd(d.get_mpz_t(), three.get_mpz_t(), qm1.get_mpz_t());
                Nat x = (q - 1) / d;
                unsigned v = x == 1 ? 0 : pi_count_of_divisor(ctx, x);
                return fixed_value(ctx, ctx.p, v, "A2: |pi((q-1)/(3,q-1))|");
            }
            return subtractive(ctx, ctx.p, "A, n>=4: drop R_{n-1} and R_n",
                               {r_set(ctx, n - 1), r_set(ctx, n)});
        }
        case ClassicalFamily::TwoA: {
            if (n % 2 == 0) {
                if (n % 4 == 0)
                    return subtractive(ctx, ctx.p, "2A, 4|n: drop R_{2(n-1)} and R_n",
                                       {r_set(ctx, 2 * (n - 1)), r_set(ctx, n)});
                return subtractive(ctx, ctx.p, "2A, n=2 mod 4: drop R_{2(n-1)}",
                                   {r_set(ctx, 2 * (n - 1))});
            }
            if ((n - 1) % 4 == 0)
                return subtractive(ctx, ctx.p, "2A, 4|n-1: drop R_{n-1} and R_{2n}",
                                   {r_set(ctx, n - 1), r_set(ctx, 2 * n)});
            return subtractive(ctx, ctx.p, "2A, n-1=2 mod 4: drop R_{2n}", {r_set(ctx, 2 * n)});
        }
        case ClassicalFamily::B:
        case ClassicalFamily::C: {
            if (n % 2 == 0)
                return subtractive(ctx, ctx.p, "BC, n even: drop R_{2n}", {r_set(ctx, 2 * n)});
            return subtractive(ctx, ctx.p, "BC, n odd: drop R_n and R_{2n}",
                               {r_set(ctx, n), r_set(ctx, 2 * n)});
        }
        case ClassicalFamily::D: {
            if (n % 2 == 0)
                return subtractive(ctx, ctx.p, "D, n even: drop R_{n-1} and R_{2(n-1)}",
                                   {r_set(ctx, n - 1), r_set(ctx, 2 * (n - 1))});
            return subtractive(ctx, ctx.p, "D, n odd: drop R_n and R_{2(n-1)}",
                               {r_set(ctx, n), r_set(ctx, 2 * (n - 1))});
        }
        case ClassicalFamily::TwoD: {
            if (n == 2) return fixed_value(ctx, ctx.p, 0, "2D2: deg(p) = 0");
            if (n % 2 == 0)
                return subtractive(ctx, ctx.p, "2D, n even >= 4: drop R_{2n}, R_{2(n-1)}, R_{n-1}",
                                   {r_set(ctx, 2 * n), r_set(ctx, 2 * (n - 1)), r_set(ctx, n - 1)});
            return subtractive(ctx, ctx.p, "2D, n odd: drop R_{2n} and R_{2(n-1)}",
                               {r_set(ctx, 2 * n), r_set(ctx, 2 * (n - 1))});
        }
    }
    throw catalog::UnsupportedGroup("unreachable classical family");
}

DegreeResult deg_2_classical(const Classical& c, const Context& ctx) {
    const unsigned long n = c.n;
    const Nat& q = ctx.q;
    switch (c.family) {
        case ClassicalFamily::A: {
            if (ctx.p == 2) {
                if (n == 2)
                    return fixed_value(ctx, Nat(2), 0, "A1: even q, three clique components");
                throw CharacteristicUnsupported(
                    "A-family formulas at even q are limited to A1");
            }
            if (n == 2) {
                if ((q - 1) % 4 == 0) {
                    unsigned v = pi_count_of_divisor(ctx, q - 1) - 1;
                    return fixed_value(ctx, Nat(2), v, "A1, 4|q-1: |pi(q-1)| - 1");
                }
                unsigned v = pi_count_of_divisor(ctx, q + 1) - 1;
                return fixed_value(ctx, Nat(2), v, "A1, 4|q+1: |pi(q+1)| - 1");
            }
            unsigned n2 = two_part_exponent_value(Nat(n));
            unsigned qm12 = two_part_exponent_value(q - 1);
            if (n2 < qm12)
                return subtractive(ctx, Nat(2), "A, n_2 < (q-1)_2: drop R_n", {r_set(ctx, n)});
            if (qm12 < n2 || (n2 == qm12 && n2 == 2))
                return subtractive(ctx, Nat(2), "A, (q-1)_2 < n_2 or n_2 = (q-1)_2 = 2: drop R_{n-1}",
                                   {r_set(ctx, n - 1)});
            return subtractive(ctx, Nat(2), "A, n_2 = (q-1)_2, 4|q-1: drop R_{n-1} and R_n",
                               {r_set(ctx, n - 1), r_set(ctx, n)});
        }
        case ClassicalFamily::TwoA: {
            if (n % 2 == 1)
                return subtractive(ctx, Nat(2), "2A, n odd: drop R_{2n}", {r_set(ctx, 2 * n)});
            if (n % 4 == 0) {
                unsigned n2 = two_part_exponent_value(Nat(n));
                unsigned qp12 = two_part_exponent_value(q + 1);
                if (n2 < qp12)
                    return subtractive(ctx, Nat(2), "2A, 4|n, n_2 < (q+1)_2: drop R_n",
                                       {r_set(ctx, n)});
                if (qp12 < n2)
                    return subtractive(ctx, Nat(2), "2A, 4|n, (q+1)_2 < n_2: drop R_{2(n-1)}",
                                       {r_set(ctx, 2 * (n - 1))});
                return subtractive(ctx, Nat(2),
                                   "2A, 4|n, n_2 = (q+1)_2: drop R_n and R_{2(n-1)}",
                                   {r_set(ctx, n), r_set(ctx, 2 * (n - 1))});
            }
            return subtractive(ctx, Nat(2), "2A, n = 2 mod 4: drop R_{2(n-1)}",
                               {r_set(ctx, 2 * (n - 1))});
        }
        case ClassicalFamily::B:
        case ClassicalFamily::C: {
            if (n % 2 == 0)
                return subtractive(ctx, Nat(2), "BC, n even: drop R_{2n}", {r_set(ctx, 2 * n)});
            if ((q - 1) % 4 == 0)
                return subtractive(ctx, Nat(2), "BC, n odd, 4|q-1: drop R_{2n}",
                                   {r_set(ctx, 2 * n)});
            return subtractive(ctx, Nat(2), "BC, n odd, 4|q+1: drop R_n", {r_set(ctx, n)});
        }
        case ClassicalFamily::D: {
            if (n % 2 == 0) {
                if ((q + 1) % 4 == 0)
                    return subtractive(ctx, Nat(2), "D, n even, 4|q+1: drop R_{n-1}",
                                       {r_set(ctx, n - 1)});
                return subtractive(ctx, Nat(2), "D, n even, 4|q-1: drop R_{2(n-1)}",
                                   {r_set(ctx, 2 * (n - 1))});
            }
            unsigned qm12 = two_part_exponent_value(q - 1);
            if (qm12 == 2)
                return subtractive(ctx, Nat(2), "D, n odd, q-1 = 2 mod 4: drop R_n",
                                   {r_set(ctx, n)});
            if (qm12 == 4)
                return subtractive(ctx, Nat(2), "D, n odd, 4||q-1: drop R_n and R_{2(n-1)}",
                                   {r_set(ctx, n), r_set(ctx, 2 * (n - 1))});
            return subtractive(ctx, Nat(2), "D, n odd, 8|q-1: drop R_{2(n-1)}",
                               {r_set(ctx, 2 * (n - 1))});
        }
        case ClassicalFamily::TwoD: {
            if (n % 2 == 0)
                return subtractive(ctx, Nat(2), "2D, n even: drop R_{2n}", {r_set(ctx, 2 * n)});
            Nat qn1 = pow_nat(q, n) + 1;
            if ((q + 1) % 4 == 0) {
                if (qn1 % 8 == 0)
                    return subtractive(ctx, Nat(2), "2D, n odd, 4|q+1, 8|q^n+1: drop R_{2(n-1)}",
                                       {r_set(ctx, 2 * (n - 1))});
                return subtractive(ctx, Nat(2),
                                   "2D, n odd, 4|q+1, 4||q^n+1: drop R_{2n} and R_{2(n-1)}",
                                   {r_set(ctx, 2 * n), r_set(ctx, 2 * (n - 1))});
            }
            return subtractive(ctx, Nat(2), "2D, n odd, 4|q-1, 2||q^n+1: drop R_{2n}",
                               {r_set(ctx, 2 * n)});
        }
    }
    throw catalog::UnsupportedGroup("unreachable classical family");
}

std::vector<RemovedSet> exceptional_removed(const Context& ctx, const Exceptional& e,
                                            bool for_p) {
    const Nat& q = ctx.q;
    switch (e.family) {
        case ExceptionalFamily::G2:
            return {r_set(ctx, 3), r_set(ctx, 6)};
        case ExceptionalFamily::F4:
            return for_p ? std::vector<RemovedSet>{r_set(ctx, 8), r_set(ctx, 12)}
                         : std::vector<RemovedSet>{r_set(ctx, 12)};
        case ExceptionalFamily::E6:
            return for_p
                       ? std::vector<RemovedSet>{r_set(ctx, 8), r_set(ctx, 9), r_set(ctx, 12)}
                       : std::vector<RemovedSet>{r_set(ctx, 9), r_set(ctx, 12)};
        case ExceptionalFamily::TwoE6:
            return for_p
                       ? std::vector<RemovedSet>{r_set(ctx, 8), r_set(ctx, 12), r_set(ctx, 18)}
                       : std::vector<RemovedSet>{r_set(ctx, 12), r_set(ctx, 18)};
        case ExceptionalFamily::E7:
            if (for_p)
                return {r_set(ctx, 7), r_set(ctx, 9), r_set(ctx, 14), r_set(ctx, 18)};
            if ((q - 1) % 4 == 0) return {r_set(ctx, 14), r_set(ctx, 18)};
            return {r_set(ctx, 7), r_set(ctx, 9)};
        case ExceptionalFamily::E8:
            return {r_set(ctx, 15), r_set(ctx, 20), r_set(ctx, 24), r_set(ctx, 30)};
        case ExceptionalFamily::ThreeD4:
            return {r_set(ctx, 12)};
    }
    throw catalog::UnsupportedGroup("unreachable exceptional family");
}

std::string exceptional_branch(const Exceptional& e, const Context& ctx, bool for_p) {
    std::string base = catalog::display_name(Exceptional{e.family, ctx.q});
    if (e.family == ExceptionalFamily::E7 && !for_p)
        base += ((ctx.q - 1) % 4 == 0) ? ": 4|q-1" : ": 4|q+1";
    return base;
}

DegreeResult deg_suzuki_ree(const SuzukiRee& s, const Context& ctx, bool for_p) {
    const Nat& q = ctx.q;
    switch (s.family) {
        case SuzukiReeFamily::TwoB2:
            return fixed_value(ctx, Nat(2), 0, "2B2: deg(2) = 0");
        case SuzukiReeFamily::TwoG2: {
            if (for_p) return fixed_value(ctx, Nat(3), 1, "2G2: deg(3) = 1");
            DegreeResult res;
            if ((q + 1) % 4 == 0) {
                unsigned v = pi_count_of_divisor(ctx, q * q - 1) - 1;
                res = fixed_value(ctx, Nat(2), v, "2G2, 4|q+1: |pi(q^2-1)| - 1");
            } else {
                unsigned v = pi_count_of_divisor(ctx, q - 1) - 1;
                res = fixed_value(ctx, Nat(2), v, "2G2, 4|q+1 fails: |pi(q-1)| - 1");
            }
            res.warning =
                "closed-form value differs from the spectrum-derived degree: the order-6 "
                "element makes 2 adjacent to 3, which pi(q^2-1) misses";
            return res;
        }
        case SuzukiReeFamily::TwoF4: {
            unsigned v = pi_count_of_divisor(ctx, pow_nat(q, 4) - 1);
            return fixed_value(ctx, Nat(2), v, "2F4: |pi(q^4-1)|");
        }
    }
    throw catalog::UnsupportedGroup("unreachable Suzuki-Ree family");
}

}  // namespace

bool DegreeResult::subtractive_shape_consistent() const {
    if (removed.empty()) return true;
    std::set<std::string> uni;
    for (const auto& rs : removed)
        for (const Nat& r : rs.primes) uni.insert(r.get_str());
    return value == pi_size - uni.size() - 1;
}

DegreeResult deg_p(const catalog::GroupId& g, const arith::FactorConfig& config) {
    catalog::validate(g);
    Context ctx = make_context(g, config);
    if (const auto* c = std::get_if<Classical>(&g)) {
        if (!(c->family == ClassicalFamily::A && c->n == 2)) require_odd_characteristic(ctx, g);
        return deg_p_classical(*c, ctx);
    }
    if (const auto* e = std::get_if<Exceptional>(&g)) {
        require_odd_characteristic(ctx, g);
        return subtractive(ctx, ctx.p, exceptional_branch(*e, ctx, true) + ": deg(p)",
                           exceptional_removed(ctx, *e, true));
    }
    return deg_suzuki_ree(std::get<SuzukiRee>(g), ctx, true);
}

DegreeResult deg_2(const catalog::GroupId& g, const arith::FactorConfig& config) {
    catalog::validate(g);
    Context ctx = make_context(g, config);
    if (const auto* c = std::get_if<Classical>(&g)) {
        if (!(c->family == ClassicalFamily::A && c->n == 2)) require_odd_characteristic(ctx, g);
        return deg_2_classical(*c, ctx);
    }
    if (const auto* e = std::get_if<Exceptional>(&g)) {
        require_odd_characteristic(ctx, g);
        return subtractive(ctx, Nat(2), exceptional_branch(*e, ctx, false) + ": deg(2)",
                           exceptional_removed(ctx, *e, false));
    }
    return deg_suzuki_ree(std::get<SuzukiRee>(g), ctx, false);
}

CrossCheck cross_check_degree(const catalog::GroupId& g, const spectra::SpectrumTable* l4_table,
                              const arith::FactorConfig& config) {
    CrossCheck cc;
    cc.group = catalog::display_name(g);
    cc.formula_p = deg_p(g, config);
    cc.formula_2 = deg_2(g, config);

    graph::PrimeGraph gk = prime_graph_from_spectrum(spectra::spectrum_of(g, l4_table), config);
    cc.spectrum_p = gk.degree(gk.index_of_checked(cc.formula_p.vertex));
    cc.spectrum_2 = gk.degree(gk.index_of_checked(Nat(2)));
    cc.agree_p = cc.formula_p.value == cc.spectrum_p;
    cc.agree_2 = cc.formula_2.value == cc.spectrum_2;
    if (cc.formula_p.warning) cc.warnings.push_back(*cc.formula_p.warning);
    if (cc.formula_2.warning) cc.warnings.push_back(*cc.formula_2.warning);
    return cc;
}

}  // namespace primegraph::liedeg
