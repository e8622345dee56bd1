#include "primegraph/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace primegraph::catalog {

namespace {

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

const char* classical_name(ClassicalFamily f) {
    switch (f) {
        case ClassicalFamily::A: return "A";
        case ClassicalFamily::TwoA: return "2A";
        case ClassicalFamily::B: return "B";
        case ClassicalFamily::C: return "C";
        case ClassicalFamily::D: return "D";
        case ClassicalFamily::TwoD: return "2D";
    }
    return "?";
}

const char* exceptional_name(ExceptionalFamily f) {
    switch (f) {
        case ExceptionalFamily::G2: return "G2";
        case ExceptionalFamily::F4: return "F4";
        case ExceptionalFamily::E6: return "E6";
        case ExceptionalFamily::TwoE6: return "2E6";
        case ExceptionalFamily::E7: return "E7";
        case ExceptionalFamily::E8: return "E8";
        case ExceptionalFamily::ThreeD4: return "3D4";
    }
    return "?";
}

const char* suzuki_ree_name(SuzukiReeFamily f) {
    switch (f) {
        case SuzukiReeFamily::TwoB2: return "2B2";
        case SuzukiReeFamily::TwoG2: return "2G2";
        case SuzukiReeFamily::TwoF4: return "2F4";
    }
    return "?";
}

// One multiplicand of a group order: the d-th cyclotomic value at q, to a power.
struct CycloTerm {
    unsigned long d;
    unsigned e;
};

// Adds the cyclotomic decomposition of q^m - 1 (or q^m + 1) to `terms`.
void add_qm_minus_1(std::vector<CycloTerm>& terms, unsigned long m) {
    for (unsigned long d = 1; d <= m; ++d)
        if (m % d == 0) terms.push_back({d, 1});
}

void add_qm_plus_1(std::vector<CycloTerm>& terms, unsigned long m) {
    // q^m + 1 = (q^2m - 1)/(q^m - 1): cyclotomic indices dividing 2m but not m.
    for (unsigned long d = 1; d <= 2 * m; ++d)
        if ((2 * m) % d == 0 && m % d != 0) terms.push_back({d, 1});
}

Factorization order_from_terms(const Nat& p, unsigned long q_exponent_times_f,
                               const std::vector<CycloTerm>& terms, const Nat& q,
                               const Nat& divisor, const arith::FactorConfig& config) {
    // Collate exponents per cyclotomic index so each value is factored once.
    std::map<unsigned long, unsigned> exps;
    for (const auto& t : terms) exps[t.d] += t.e;

    Factorization total;
    if (q_exponent_times_f > 0) total.mul_prime(p, static_cast<unsigned>(q_exponent_times_f));
    for (const auto& [d, e] : exps) {
        Nat value = arith::cyclotomic_value(d, q);
        if (value == 1) continue;
        // FactorizationIncomplete propagates: its payload reproduces the
        // resisting cyclotomic factor, which is what callers need to see.
        Factorization piece = arith::factor(value, config);
        for (const auto& fe : piece.entries()) total.mul_prime(fe.prime, fe.exponent * e);
    }
    if (divisor > 1) {
        Factorization df = arith::factor(divisor, config);
        total = total.divide_exact(df);
    }
    return total;
}

Nat gcd_nat(const Nat& a, const Nat& b) {
    Nat g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Factorization classical_order(const Classical& g, const arith::FactorConfig& config) {
    const auto [p, f] = field_of(g.q);
    const unsigned long n = g.n;
    std::vector<CycloTerm> terms;
    unsigned long qexp = 0;
    Nat divisor = 1;
    switch (g.family) {
        case ClassicalFamily::A:
            qexp = n * (n - 1) / 2;
            for (unsigned long i = 2; i <= n; ++i) add_qm_minus_1(terms, i);
            divisor = gcd_nat(Nat(n), g.q - 1);
            break;
        case ClassicalFamily::TwoA:
            qexp = n * (n - 1) / 2;
            for (unsigned long i = 2; i <= n; ++i) {
                if (i % 2 == 0)
                    add_qm_minus_1(terms, i);
                else
                    add_qm_plus_1(terms, i);
            }
            divisor = gcd_nat(Nat(n), g.q + 1);
            break;
        case ClassicalFamily::B:
        case ClassicalFamily::C:
            qexp = n * n;
            for (unsigned long i = 1; i <= n; ++i) add_qm_minus_1(terms, 2 * i);
            divisor = gcd_nat(Nat(2), g.q - 1);
            break;
        case ClassicalFamily::D:
            qexp = n * (n - 1);
            add_qm_minus_1(terms, n);
            for (unsigned long i = 1; i + 1 <= n; ++i) add_qm_minus_1(terms, 2 * i);
            divisor = gcd_nat(Nat(4), pow_nat(g.q, n) - 1);
            break;
        case ClassicalFamily::TwoD:
            qexp = n * (n - 1);
            add_qm_plus_1(terms, n);
            for (unsigned long i = 1; i + 1 <= n; ++i) add_qm_minus_1(terms, 2 * i);
            divisor = gcd_nat(Nat(4), pow_nat(g.q, n) + 1);
            break;
    }
    return order_from_terms(p, qexp * f, terms, g.q, divisor, config);
}

Factorization exceptional_order(const Exceptional& g, const arith::FactorConfig& config) {
    const auto [p, f] = field_of(g.q);
    std::vector<CycloTerm> terms;
    unsigned long qexp = 0;
    Nat divisor = 1;
    switch (g.family) {
        case ExceptionalFamily::G2:
            qexp = 6;
            terms = {{1, 2}, {2, 2}, {3, 1}, {6, 1}};
            break;
        case ExceptionalFamily::F4:
            qexp = 24;
            terms = {{1, 4}, {2, 4}, {3, 2}, {4, 2}, {6, 2}, {8, 1}, {12, 1}};
            break;
        case ExceptionalFamily::E6:
            qexp = 36;
            terms = {{1, 6}, {2, 4}, {3, 3}, {4, 2}, {5, 1}, {6, 2}, {8, 1}, {9, 1}, {12, 1}};
            divisor = gcd_nat(Nat(3), g.q - 1);
            break;
        case ExceptionalFamily::TwoE6:
            qexp = 36;
            terms = {{1, 4}, {2, 6}, {3, 2}, {4, 2}, {6, 3}, {8, 1}, {10, 1}, {12, 1}, {18, 1}};
            divisor = gcd_nat(Nat(3), g.q + 1);
            break;
        case ExceptionalFamily::E7:
            qexp = 63;
            terms = {{1, 7}, {2, 7}, {3, 3}, {4, 2}, {5, 1},  {6, 3},  {7, 1},
                     {8, 1}, {9, 1}, {10, 1}, {12, 1}, {14, 1}, {18, 1}};
            divisor = gcd_nat(Nat(2), g.q - 1);
            break;
        case ExceptionalFamily::E8:
            qexp = 120;
            terms = {{1, 8},  {2, 8},  {3, 4},  {4, 4},  {5, 2},  {6, 4},  {7, 1},  {8, 2}, {9, 1},
                     {10, 2}, {12, 2}, {14, 1}, {15, 1}, {18, 1}, {20, 1}, {24, 1}, {30, 1}};
            break;
        case ExceptionalFamily::ThreeD4:
            qexp = 12;
            terms = {{1, 2}, {2, 2}, {3, 2}, {6, 2}, {12, 1}};
            break;
    }
    return order_from_terms(p, qexp * f, terms, g.q, divisor, config);
}

Factorization suzuki_ree_order(const SuzukiRee& g, const arith::FactorConfig& config) {
    const auto [p, f] = field_of(g.q);
    std::vector<CycloTerm> terms;
    unsigned long qexp = 0;
    switch (g.family) {
        case SuzukiReeFamily::TwoB2:
            // q^2 (q^2+1)(q-1)
            qexp = 2;
            terms = {{1, 1}, {4, 1}};
            break;
        case SuzukiReeFamily::TwoG2:
            // q^3 (q^3+1)(q-1)
            qexp = 3;
            terms = {{1, 1}, {2, 1}, {6, 1}};
            break;
        case SuzukiReeFamily::TwoF4:
            // q^12 (q^6+1)(q^4-1)(q^3+1)(q-1)
            qexp = 12;
            terms = {{1, 2}, {2, 2}, {4, 2}, {6, 1}, {12, 1}};
            break;
    }
    return order_from_terms(p, qexp * f, terms, g.q, Nat(1), config);
}

struct SporadicInfo {
    const char* name;
    const char* order;
    std::vector<std::vector<unsigned>> components;
};

const std::vector<SporadicInfo>& sporadic_table() {
    static const std::vector<SporadicInfo> table = {
        {"M11", "2^4*3^2*5*11", {{2, 3}, {5}, {11}}},
        {"M22", "2^7*3^2*5*7*11", {{2, 3}, {5}, {7}, {11}}},
        {"J1", "2^3*3*5*7*11*19", {{2, 3, 5}, {7}, {11}, {19}}},
        {"J2", "2^7*3^3*5^2*7", {{2, 3, 5}, {7}}},
        {"J3", "2^7*3^5*5*17*19", {{2, 3, 5}, {17}, {19}}},
        {"HiS", "2^9*3^2*5^3*7*11", {{2, 3, 5}, {7}, {11}}},
    };
    return table;
}

}  // namespace

FieldInfo field_of(const Nat& q) {
    if (q < 2) throw UnsupportedGroup("field size must be at least 2");
    auto pp = arith::is_prime_power(q);
    if (!pp) throw UnsupportedGroup(q.get_str() + " is not a prime power");
    return FieldInfo{pp->first, pp->second};
}

void validate(const GroupId& g) {
    std::visit(
        [](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Classical>) {
                field_of(v.q);
                unsigned min_n = 0;
                switch (v.family) {
                    case ClassicalFamily::A: min_n = 2; break;
                    case ClassicalFamily::TwoA: min_n = 3; break;
                    case ClassicalFamily::B:
                    case ClassicalFamily::C: min_n = 2; break;
                    case ClassicalFamily::D: min_n = 3; break;
                    case ClassicalFamily::TwoD: min_n = 2; break;
                }
                if (v.n < min_n)
                    throw UnsupportedGroup(std::string(classical_name(v.family)) +
                                           " family requires rank parameter n >= " +
                                           std::to_string(min_n));
                if (v.family == ClassicalFamily::A && v.n == 2 && v.q < 4)
                    throw UnsupportedGroup("A1(q) requires q >= 4 for simplicity");
            } else if constexpr (std::is_same_v<T, Exceptional>) {
                field_of(v.q);
            } else if constexpr (std::is_same_v<T, SuzukiRee>) {
                auto [p, f] = field_of(v.q);
                Nat want_p = v.family == SuzukiReeFamily::TwoG2 ? 3 : 2;
                if (p != want_p || f % 2 == 0 || f < 3)
                    throw UnsupportedGroup(std::string(suzuki_ree_name(v.family)) +
                                           " requires q = " + want_p.get_str() +
                                           "^(2k+1) with k >= 1");
            } else if constexpr (std::is_same_v<T, Alternating>) {
                if (v.n < 5) throw UnsupportedGroup("alternating groups require n >= 5");
            } else if constexpr (std::is_same_v<T, Named>) {
                if (v.name.empty()) throw UnsupportedGroup("empty group name");
            }
        },
        g);
}

std::string display_name(const GroupId& g) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Classical>) {
                bool linear = v.family == ClassicalFamily::A || v.family == ClassicalFamily::TwoA;
                unsigned lie_rank = linear ? v.n - 1 : v.n;
                return std::string(classical_name(v.family)) + std::to_string(lie_rank) + "(" +
                       v.q.get_str() + ")";
            } else if constexpr (std::is_same_v<T, Exceptional>) {
                return std::string(exceptional_name(v.family)) + "(" + v.q.get_str() + ")";
            } else if constexpr (std::is_same_v<T, SuzukiRee>) {
                return std::string(suzuki_ree_name(v.family)) + "(" + v.q.get_str() + ")";
            } else if constexpr (std::is_same_v<T, Alternating>) {
                return "Alt(" + std::to_string(v.n) + ")";
            } else {
                return v.name;
            }
        },
        g);
}

Factorization order(const GroupId& g, const arith::FactorConfig& config,
                    const CandidateTable* table) {
    validate(g);
    return std::visit(
        [&](const auto& v) -> Factorization {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Classical>) {
                // The rank parameter of A/2A is the linear rank n of L_n/U_n;
                // map to the classical order formulas directly.
                return classical_order(v, config);
            } else if constexpr (std::is_same_v<T, Exceptional>) {
                return exceptional_order(v, config);
            } else if constexpr (std::is_same_v<T, SuzukiRee>) {
                return suzuki_ree_order(v, config);
            } else if constexpr (std::is_same_v<T, Alternating>) {
                return alternating_order(v.n);
            } else {
                for (const auto& s : sporadic_table())
                    if (s.name == v.name) return Factorization::parse(s.order);
                if (table)
                    if (const CandidateRecord* rec = table->find(v.name)) return rec->order;
                throw UnsupportedGroup("no stored order for named group '" + v.name + "'");
            }
        },
        g);
}

std::vector<Nat> pi_of(const GroupId& g, const arith::FactorConfig& config,
                       const CandidateTable* table) {
    return order(g, config, table).primes();
}

Factorization alternating_order(unsigned n) {
    if (n < 5) throw UnsupportedGroup("alternating groups require n >= 5");
    Factorization f;
    for (const Nat& p : arith::primes_up_to(n)) {
        unsigned long e = 0;
        Nat pk = p;
        while (pk <= n) {
            e += to_u64(Nat(n) / pk);
            pk *= p;
        }
        if (p == 2) --e;  // n!/2
        f.mul_prime(p, static_cast<unsigned>(e));
    }
    return f;
}

std::optional<unsigned> out_order_claim(const std::string& name) {
    static const std::map<std::string, unsigned> claims = {
        {"L3(23)", 4},
        {"L3(27)", 6},
        {"L3(32)", 10},
        {"2D4(5)", 4},
    };
    auto it = claims.find(name);
    if (it == claims.end()) return std::nullopt;
    return it->second;
}

std::optional<unsigned> out_order_dfg(const std::string& name) {
    // L_n(q), n >= 3: |Out| = gcd(n, q-1) * f * 2. 2D4(q): gcd(4, q^4+1) * 2f.
    auto parse_q = [](const std::string& s, std::size_t open) -> std::optional<Nat> {
        std::size_t close = s.find(')', open);
        if (close == std::string::npos) return std::nullopt;
        std::string inner = s.substr(open + 1, close - open - 1);
        std::size_t caret = inner.find('^');
        try {
            if (caret == std::string::npos) return nat_from_string(inner);
            Nat base = nat_from_string(inner.substr(0, caret));
            return pow_nat(base, nat_from_string(inner.substr(caret + 1)).get_ui());
        } catch (const std::exception&) {
            return std::nullopt;
        }
    };
    if (name.rfind("L3(", 0) == 0) {
        auto q = parse_q(name, 2);
        if (!q) return std::nullopt;
        auto fi = arith::is_prime_power(*q);
        if (!fi) return std::nullopt;
        Nat d = 1;
        mpz_gcd(d.get_mpz_t(), Nat(3).get_mpz_t(), Nat(*q - 1).get_mpz_t());
        return static_cast<unsigned>(d.get_ui()) * fi->second * 2;
    }
    if (name.rfind("2D4(", 0) == 0) {
        auto q = parse_q(name, 3);
        if (!q) return std::nullopt;
        auto fi = arith::is_prime_power(*q);
        if (!fi) return std::nullopt;
        Nat d = 1;
        Nat q4p1 = pow_nat(*q, 4) + 1;
        mpz_gcd(d.get_mpz_t(), Nat(4).get_mpz_t(), q4p1.get_mpz_t());
        return static_cast<unsigned>(d.get_ui()) * 2 * fi->second;
    }
    return std::nullopt;
}

const std::map<std::string, Factorization>& sporadic_orders() {
    static const std::map<std::string, Factorization> orders = [] {
        std::map<std::string, Factorization> m;
        for (const auto& s : sporadic_table()) m[s.name] = Factorization::parse(s.order);
        return m;
    }();
    return orders;
}

std::optional<std::vector<std::vector<Nat>>> clique_components(const std::string& name) {
    for (const auto& s : sporadic_table()) {
        if (s.name != name) continue;
        std::vector<std::vector<Nat>> out;
        for (const auto& comp : s.components) {
            std::vector<Nat> c;
            for (unsigned p : comp) c.emplace_back(p);
            out.push_back(std::move(c));
        }
        return out;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// CandidateTable

CandidateTable CandidateTable::parse_text(const std::string& text, const std::string& origin) {
    CandidateTable table;
    std::istringstream is(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = strip(line);
        if (line.empty()) continue;
        std::size_t bar1 = line.find('|');
        std::size_t bar2 = bar1 == std::string::npos ? std::string::npos : line.find('|', bar1 + 1);
        if (bar2 == std::string::npos)
            throw ParseError(origin + ":" + std::to_string(lineno) +
                             ": expected 'name | p | factorization'");
        CandidateRecord rec;
        rec.name = strip(line.substr(0, bar1));
        Nat p = nat_from_string(strip(line.substr(bar1 + 1, bar2 - bar1 - 1)));
        rec.order = Factorization::parse(strip(line.substr(bar2 + 1)));
        rec.max_prime = p;
        rec.source = "table5";
        if (rec.name.empty())
            throw ParseError(origin + ":" + std::to_string(lineno) + ": empty name");
        for (const auto& fe : rec.order.entries())
            if (!arith::is_prime(fe.prime))
                throw ValidationError("record '" + rec.name + "': " + fe.prime.get_str() +
                                      " is not prime");
        if (rec.order.empty() || rec.order.max_prime() != p)
            throw ValidationError("record '" + rec.name + "': stored max prime " + p.get_str() +
                                  " does not match order");
        for (const auto& r : table.records_)
            if (r.name == rec.name)
                throw ValidationError("duplicate record name '" + rec.name + "'");
        table.records_.push_back(std::move(rec));
    }
    return table;
}

CandidateTable CandidateTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open candidate table: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str(), path);
}

const CandidateRecord* CandidateTable::find(const std::string& name) const {
    for (const auto& r : records_)
        if (r.name == name) return &r;
    return nullptr;
}

std::vector<const CandidateRecord*> CandidateTable::with_max_prime(const Nat& p) const {
    std::vector<const CandidateRecord*> out;
    for (const auto& r : records_)
        if (r.max_prime == p) out.push_back(&r);
    return out;
}

}  // namespace primegraph::catalog
