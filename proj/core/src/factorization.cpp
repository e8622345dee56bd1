#include "primegraph/factorization.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace primegraph {

Factorization Factorization::from_sorted(std::vector<FactorEntry> entries) {
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].exponent == 0)
            throw std::invalid_argument("zero exponent in factorization");
        if (entries[i].prime < 2)
            throw std::invalid_argument("factor below 2 in factorization");
        if (i > 0 && !(entries[i - 1].prime < entries[i].prime))
            throw std::invalid_argument("factorization entries not strictly increasing");
    }
    Factorization f;
    f.entries_ = std::move(entries);
    return f;
}

void Factorization::mul_prime(const Nat& p, unsigned e) {
    if (e == 0) return;
    auto it = std::lower_bound(entries_.begin(), entries_.end(), p,
                               [](const FactorEntry& fe, const Nat& v) { return fe.prime < v; });
    if (it != entries_.end() && it->prime == p)
        it->exponent += e;
    else
        entries_.insert(it, FactorEntry{p, e});
}

Factorization Factorization::times(const Factorization& other) const {
    Factorization r = *this;
    for (const auto& fe : other.entries_) r.mul_prime(fe.prime, fe.exponent);
    return r;
}

Factorization Factorization::divide_exact(const Factorization& other) const {
    Factorization r;
    auto it = entries_.begin();
    for (const auto& fe : other.entries_) {
        while (it != entries_.end() && it->prime < fe.prime) {
            r.entries_.push_back(*it);
            ++it;
        }
        if (it == entries_.end() || it->prime != fe.prime || it->exponent < fe.exponent)
            throw std::domain_error("factorization does not divide: missing " + fe.prime.get_str() +
                                    "^" + std::to_string(fe.exponent));
        if (it->exponent > fe.exponent)
            r.entries_.push_back(FactorEntry{it->prime, it->exponent - fe.exponent});
        ++it;
    }
    r.entries_.insert(r.entries_.end(), it, entries_.end());
    return r;
}

bool Factorization::divides(const Factorization& other) const {
    for (const auto& fe : entries_)
        if (other.exponent_of(fe.prime) < fe.exponent) return false;
    return true;
}

unsigned Factorization::exponent_of(const Nat& p) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), p,
                               [](const FactorEntry& fe, const Nat& v) { return fe.prime < v; });
    if (it != entries_.end() && it->prime == p) return it->exponent;
    return 0;
}

Nat Factorization::value() const {
    Nat v = 1;
    for (const auto& fe : entries_) v *= pow_nat(fe.prime, fe.exponent);
    return v;
}

std::vector<Nat> Factorization::primes() const {
    std::vector<Nat> ps;
    ps.reserve(entries_.size());
    for (const auto& fe : entries_) ps.push_back(fe.prime);
    return ps;
}

Nat Factorization::max_prime() const {
    if (entries_.empty()) throw std::domain_error("max_prime of empty factorization");
    return entries_.back().prime;
}

bool Factorization::is_squarefree() const {
    for (const auto& fe : entries_)
        if (fe.exponent != 1) return false;
    return true;
}

std::string Factorization::str() const {
    if (entries_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& fe : entries_) {
        if (!first) os << '*';
        first = false;
        os << fe.prime.get_str();
        if (fe.exponent != 1) os << '^' << fe.exponent;
    }
    return os.str();
}

Factorization Factorization::parse(const std::string& text) {
    std::string compact;
    compact.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    if (compact.empty()) throw std::invalid_argument("empty factorization text");
    if (compact == "1") return {};

    Factorization f;
    std::size_t pos = 0;
    while (pos < compact.size()) {
        std::size_t star = compact.find('*', pos);
        std::string term = compact.substr(pos, star == std::string::npos ? star : star - pos);
        if (term.empty()) throw std::invalid_argument("empty term in factorization: '" + text + "'");
        std::size_t caret = term.find('^');
        Nat p = nat_from_string(term.substr(0, caret));
        unsigned e = 1;
        if (caret != std::string::npos) {
            Nat ev = nat_from_string(term.substr(caret + 1));
            if (ev < 1 || !ev.fits_ulong_p() || ev.get_ui() > 1u << 30)
                throw std::invalid_argument("bad exponent in '" + term + "'");
            e = static_cast<unsigned>(ev.get_ui());
        }
        if (p < 2) throw std::invalid_argument("factor below 2 in '" + term + "'");
        if (!f.entries_.empty() && !(f.entries_.back().prime < p))
            throw std::invalid_argument("factors not strictly increasing in '" + text + "'");
        f.entries_.push_back(FactorEntry{std::move(p), e});
        if (star == std::string::npos) break;
        pos = star + 1;
    }
    return f;
}

}  // namespace primegraph
