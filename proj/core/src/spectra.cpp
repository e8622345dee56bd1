#include "primegraph/spectra.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace primegraph::spectra {

namespace {

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<Nat> sort_unique(std::vector<Nat> ms) {
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    return ms;
}

}  // namespace

Spectrum make_spectrum(std::vector<Nat> members, std::string source) {
    Spectrum s;
    s.mu = sort_unique(std::move(members));
    s.source = std::move(source);
    for (std::size_t i = 0; i < s.mu.size(); ++i)
        for (std::size_t j = 0; j < s.mu.size(); ++j)
            if (i != j && mpz_divisible_p(s.mu[j].get_mpz_t(), s.mu[i].get_mpz_t()))
                throw std::invalid_argument("spectrum member " + s.mu[i].get_str() +
                                            " divides member " + s.mu[j].get_str());
    return s;
}

Spectrum normalize_spectrum(std::vector<Nat> members, std::string source) {
    std::vector<Nat> ms = sort_unique(std::move(members));
    std::vector<Nat> keep;
    std::vector<std::string> notes;
    for (std::size_t i = 0; i < ms.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < ms.size(); ++j) {
            if (i != j && mpz_divisible_p(ms[j].get_mpz_t(), ms[i].get_mpz_t())) {
                dominated = true;
                notes.push_back("dropped non-maximal member " + ms[i].get_str() +
                                " (divides " + ms[j].get_str() + ")");
                break;
            }
        }
        if (!dominated) keep.push_back(ms[i]);
    }
    Spectrum s = make_spectrum(std::move(keep), std::move(source));
    s.notes = std::move(notes);
    return s;
}

bool omega_contains(const Spectrum& s, const Nat& x) {
    if (x < 1) throw std::invalid_argument("omega membership requires x >= 1");
    for (const Nat& m : s.mu)
        if (mpz_divisible_p(m.get_mpz_t(), x.get_mpz_t())) return true;
    return false;
}

SpectrumTable SpectrumTable::parse_text(const std::string& text, const std::string& origin) {
    SpectrumTable table;
    std::istringstream is(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = strip(line);
        if (line.empty()) continue;
        std::size_t bar = line.find('|');
        if (bar == std::string::npos)
            throw catalog::ParseError(origin + ":" + std::to_string(lineno) + ": expected '|'");
        std::string name = strip(line.substr(0, bar));
        if (name.rfind("L4(", 0) != 0 || name.back() != ')')
            throw catalog::ParseError(origin + ":" + std::to_string(lineno) +
                                      ": expected a name of the form L4(q)");
        unsigned q = static_cast<unsigned>(
            to_ulong_checked(nat_from_string(name.substr(3, name.size() - 4)), "field size"));
        std::vector<Nat> members;
        std::string rest = line.substr(bar + 1);
        std::size_t pos = 0;
        while (pos <= rest.size()) {
            std::size_t semi = rest.find(';', pos);
            std::string term =
                strip(rest.substr(pos, semi == std::string::npos ? semi : semi - pos));
            if (!term.empty()) members.push_back(Factorization::parse(term).value());
            if (semi == std::string::npos) break;
            pos = semi + 1;
        }
        if (members.empty())
            throw catalog::ParseError(origin + ":" + std::to_string(lineno) + ": no members");
        table.rows_[q] = normalize_spectrum(std::move(members), name);
    }
    return table;
}

SpectrumTable SpectrumTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw catalog::ParseError("cannot open spectrum table: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str(), path);
}

const Spectrum* SpectrumTable::find(unsigned q) const {
    auto it = rows_.find(q);
    return it == rows_.end() ? nullptr : &it->second;
}

std::vector<unsigned> SpectrumTable::field_sizes() const {
    std::vector<unsigned> out;
    for (const auto& [q, s] : rows_) out.push_back(q);
    return out;
}

namespace {

Spectrum a1_spectrum(const Nat& q) {
    auto [p, f] = catalog::field_of(q);
    if (p == 2) {
        // Three pairwise non-adjacent cliques: {2}, pi(q-1), pi(q+1).
        return make_spectrum({Nat(2), q - 1, q + 1}, "A1(" + q.get_str() + ") even-q structure");
    }
    return make_spectrum({p, (q - 1) / 2, (q + 1) / 2}, "A1(" + q.get_str() + ") closed form");
}

Spectrum a2_spectrum(const Nat& q) {
    auto [p, f] = catalog::field_of(q);
    Nat d;
    Nat three = 3, qm1 = q - 1;
    mpz_gcd(d.get_mpz_t(), three.get_mpz_t(), qm1.get_mpz_t());
    if (d == 3)
        return make_spectrum({q - 1, p * (q - 1) / 3, (q * q - 1) / 3, (q * q + q + 1) / 3},
                             "A2(" + q.get_str() + ") closed form, d=3");
    return make_spectrum({p * (q - 1), q * q - 1, q * q + q + 1},
                         "A2(" + q.get_str() + ") closed form, d=1");
}

Nat sqrt_2q(const Nat& q) {
    // q = 2^(2k+1): sqrt(2q) = 2^(k+1).
    Nat s;
    Nat twoq = 2 * q;
    mpz_sqrt(s.get_mpz_t(), twoq.get_mpz_t());
    return s;
}

Nat sqrt_3q(const Nat& q) {
    Nat s;
    Nat threeq = 3 * q;
    mpz_sqrt(s.get_mpz_t(), threeq.get_mpz_t());
    return s;
}

Spectrum suzuki_ree_spectrum(const catalog::SuzukiRee& g) {
    const Nat& q = g.q;
    switch (g.family) {
        case catalog::SuzukiReeFamily::TwoB2: {
            Nat s = sqrt_2q(q);
            return make_spectrum({Nat(4), q - 1, q - s + 1, q + s + 1},
                                 "2B2(" + q.get_str() + ") closed form");
        }
        case catalog::SuzukiReeFamily::TwoG2: {
            Nat s = sqrt_3q(q);
            return make_spectrum({Nat(6), Nat(9), q - 1, (q + 1) / 2, q - s + 1, q + s + 1},
                                 "2G2(" + q.get_str() + ") closed form");
        }
        case catalog::SuzukiReeFamily::TwoF4: {
            Nat s = sqrt_2q(q);
            std::vector<Nat> mu = {Nat(12),
                                   Nat(16),
                                   2 * (q + 1),
                                   4 * (q - 1),
                                   4 * (q + s + 1),
                                   4 * (q - s + 1),
                                   q * q - 1,
                                   q * q + 1,
                                   q * q - q + 1,
                                   (q - 1) * (q + s + 1),
                                   (q - 1) * (q - s + 1),
                                   q * q + s * q + q + s + 1,
                                   q * q - s * q + q - s + 1};
            return make_spectrum(std::move(mu), "2F4(" + q.get_str() + ") closed form");
        }
    }
    throw catalog::UnsupportedGroup("unreachable Suzuki-Ree family");
}

}  // namespace

Spectrum spectrum_of(const catalog::GroupId& g, const SpectrumTable* l4_table) {
    catalog::validate(g);
    if (const auto* c = std::get_if<catalog::Classical>(&g)) {
        if (c->family == catalog::ClassicalFamily::A) {
            if (c->n == 2) return a1_spectrum(c->q);
            if (c->n == 3) return a2_spectrum(c->q);
            if (c->n == 4 && l4_table) {
                if (c->q.fits_ulong_p())
                    if (const Spectrum* s = l4_table->find(static_cast<unsigned>(c->q.get_ui())))
                        return *s;
            }
        }
    } else if (const auto* sr = std::get_if<catalog::SuzukiRee>(&g)) {
        return suzuki_ree_spectrum(*sr);
    }
    throw catalog::UnsupportedGroup("no stored or closed-form spectrum for " +
                                    catalog::display_name(g));
}

graph::PrimeGraph prime_graph_from_spectrum(const Spectrum& s, const arith::FactorConfig& config) {
    std::vector<Nat> vertices;
    for (const Nat& m : s.mu)
        for (const Nat& p : arith::factor(m, config).primes()) vertices.push_back(p);
    return graph::PrimeGraph::from_adjacency(std::move(vertices),
                                             [&](const Nat& p, const Nat& q) {
                                                 Nat pq = p * q;
                                                 return omega_contains(s, pq);
                                             });
}

graph::PrimeGraph gk_alternating(unsigned n) {
    if (n < 5) throw catalog::UnsupportedGroup("alternating groups require n >= 5");
    std::vector<Nat> vertices = arith::primes_up_to(n);
    return graph::PrimeGraph::from_adjacency(std::move(vertices), [n](const Nat& a, const Nat& b) {
        if (a == 2) return b + 4 <= n;
        if (b == 2) return a + 4 <= n;
        return a + b <= n;
    });
}

graph::PrimeGraph gk_symmetric(unsigned n) {
    if (n < 5) throw catalog::UnsupportedGroup("symmetric-group graphs require n >= 5");
    std::vector<Nat> vertices = arith::primes_up_to(n);
    return graph::PrimeGraph::from_adjacency(std::move(vertices), [n](const Nat& a, const Nat& b) {
        return a + b <= n;
    });
}

}  // namespace primegraph::spectra
