#include "primegraph/arith.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>

namespace primegraph::arith {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kSieveBound = 1'000'000;

std::vector<u32> build_sieve(u64 bound) {
    std::vector<bool> composite(bound + 1, false);
    std::vector<u32> primes;
    for (u64 i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        primes.push_back(static_cast<u32>(i));
        for (u64 j = i * i; j <= bound; j += i) composite[j] = true;
    }
    return primes;
}

// Primes packed into products fitting 64 bits, so one bignum reduction serves
// a whole batch of divisibility tests.
struct TrialBatch {
    u64 product;
    u32 first, last;  // index range [first, last) into small_primes()
};

const std::vector<TrialBatch>& trial_batches() {
    static const std::vector<TrialBatch> batches = [] {
        const auto& ps = small_primes();
        std::vector<TrialBatch> out;
        u32 i = 0;
        while (i < ps.size()) {
            u64 prod = ps[i];
            u32 j = i + 1;
            while (j < ps.size() && prod <= std::numeric_limits<u64>::max() / ps[j]) {
                prod *= ps[j];
                ++j;
            }
            out.push_back(TrialBatch{prod, i, j});
            i = j;
        }
        return out;
    }();
    return batches;
}

u64 mulmod64(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

u64 powmod64(u64 b, u64 e, u64 m) {
    u64 r = 1;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod64(r, b, m);
        b = mulmod64(b, b, m);
        e >>= 1;
    }
    return r;
}

bool miller_rabin64(u64 n, u64 a) {
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    u64 x = powmod64(a % n, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod64(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

// Deterministic for all 64-bit inputs with this witness set.
constexpr std::array<u64, 12> kWitnesses64 = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool is_prime64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    for (u64 a : kWitnesses64)
        if (!miller_rabin64(n, a)) return false;
    return true;
}

u64 gcd64(u64 a, u64 b) {
    while (b) { u64 t = a % b; a = b; b = t; }
    return a;
}

// Brent's cycle-finding variant of Pollard rho, native 64-bit.
u64 brent64(u64 n, u64 c) {
    u64 y = 2, r = 1, q = 1, g = 1, x = 0, ys = 0;
    const u64 m = 128;
    do {
        x = y;
        for (u64 i = 0; i < r; ++i) y = (mulmod64(y, y, n) + c) % n;
        u64 k = 0;
        while (k < r && g == 1) {
            ys = y;
            u64 lim = std::min(m, r - k);
            for (u64 i = 0; i < lim; ++i) {
                y = (mulmod64(y, y, n) + c) % n;
                q = mulmod64(q, x > y ? x - y : y - x, n);
            }
            g = gcd64(q, n);
            k += m;
        }
        r *= 2;
    } while (g == 1);
    if (g == n) {
        do {
            ys = (mulmod64(ys, ys, n) + c) % n;
            g = gcd64(ys > x ? ys - x : x - ys, n);
        } while (g == 1);
    }
    return g == n ? 0 : g;
}

void factor64_into(u64 n, Factorization& out) {
    if (n == 1) return;
    if (is_prime64(n)) {
        out.mul_prime(Nat(static_cast<unsigned long>(n)));
        return;
    }
    // Perfect squares defeat plain rho quickly enough not to matter at 64 bits,
    // but splitting them first keeps the recursion shallow.
    u64 root = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    for (u64 r = root > 1 ? root - 1 : 1; r <= root + 1; ++r) {
        if (r > 1 && r * r == n) {
            factor64_into(r, out);
            factor64_into(r, out);
            return;
        }
    }
    u64 d = 0;
    for (u64 c = 1; d == 0; ++c) d = brent64(n, c);
    factor64_into(d, out);
    factor64_into(n / d, out);
}

// Multi-precision Brent rho with batched gcd. Returns a proper factor or 0
// when the iteration budget is exhausted.
Nat brent_mpz(const Nat& n, unsigned long c, u64& budget) {
    Nat y = 2, x, ys, q = 1, g = 1;
    u64 r = 1;
    const u64 m = 64;
    auto step = [&](Nat& v) { v = (v * v + c) % n; };
    while (g == 1) {
        x = y;
        for (u64 i = 0; i < r && budget; ++i, --budget) step(y);
        if (!budget) return 0;
        u64 k = 0;
        while (k < r && g == 1) {
            ys = y;
            u64 lim = std::min(m, r - k);
            for (u64 i = 0; i < lim && budget; ++i, --budget) {
                step(y);
                Nat diff = x > y ? x - y : y - x;
                q = q * diff % n;
            }
            if (!budget) return 0;
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += m;
        }
        r *= 2;
    }
    if (g == n) {
        g = 1;
        while (g == 1) {
            step(ys);
            Nat diff = x > ys ? x - ys : ys - x;
            mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
    }
    if (g == n) return 0;
    return g;
}

bool miller_rabin_mpz(const Nat& n, const Nat& a) {
    Nat d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    d >>= s;
    Nat x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    Nat nm1 = n - 1;
    if (x == 1 || x == nm1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == nm1) return true;
    }
    return false;
}

// Fixed witness schedule above 2^64: the first 25 primes.
constexpr std::array<unsigned, 25> kWitnessesBig = {2,  3,  5,  7,  11, 13, 17, 19, 23,
                                                    29, 31, 37, 41, 43, 47, 53, 59, 61,
                                                    67, 71, 73, 79, 83, 89, 97};

}  // namespace

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<u32> primes = build_sieve(kSieveBound);
    return primes;
}

std::vector<Nat> primes_up_to(std::uint64_t n) {
    std::vector<Nat> out;
    if (n <= kSieveBound) {
        for (u32 p : small_primes()) {
            if (p > n) break;
            out.emplace_back(static_cast<unsigned long>(p));
        }
        return out;
    }
    for (u32 p : small_primes()) out.emplace_back(static_cast<unsigned long>(p));
    Nat p(static_cast<unsigned long>(kSieveBound));
    for (p = next_prime_above(p); p <= n; p = next_prime_above(p)) out.push_back(p);
    return out;
}

Primality classify(const Nat& n) {
    if (n < 2) return Primality::composite;
    if (fits_u64(n)) return is_prime64(to_u64(n)) ? Primality::prime : Primality::composite;
    // Quick small-prime screen before the full witness schedule.
    for (const auto& batch : trial_batches()) {
        if (batch.first >= 64) break;
        u64 rem = mpz_fdiv_ui(n.get_mpz_t(), batch.product);
        const auto& ps = small_primes();
        for (u32 i = batch.first; i < batch.last; ++i)
            if (rem % ps[i] == 0) return Primality::composite;
    }
    for (unsigned a : kWitnessesBig)
        if (!miller_rabin_mpz(n, Nat(a))) return Primality::composite;
    return Primality::probable_prime;
}

FactorizationIncomplete::FactorizationIncomplete(Factorization partial_, Nat cofactor_)
    : std::runtime_error("factorization incomplete: cofactor with " +
                         std::to_string(cofactor_.get_str().size()) +
                         " digits resisted the configured methods"),
      partial(std::move(partial_)),
      cofactor(std::move(cofactor_)) {}

const FactorConfig& FactorConfig::defaults() {
    static const FactorConfig config{};
    return config;
}

namespace {

// work mod m without a GMP call, for small operands (limbs little-endian).
u64 limbs_mod(const mp_limb_t* limbs, std::size_t count, u64 m) {
    u64 r = 0;
    for (std::size_t i = count; i-- > 0;) r = static_cast<u64>(((u128)r << 64 | limbs[i]) % m);
    return r;
}

}  // namespace

Factorization factor(const Nat& n, const FactorConfig& config) {
    if (n < 1) throw std::invalid_argument("factor() requires n >= 1");
    Factorization out;
    if (n == 1) return out;

    Nat work = n;
    const auto& ps = small_primes();

    // Trial division, batched so one reduction serves a run of primes. The
    // cofactor is re-tested for primality at a few checkpoints; most inputs
    // shed their small factors early and leave a prime remainder, which makes
    // the rest of the sweep unnecessary.
    bool done = false;
    u32 next_checkpoint = 1 << 12;
    for (const auto& batch : trial_batches()) {
        if (static_cast<u64>(ps[batch.first]) > config.trial_division_limit) break;
        if (work == 1 || fits_u64(work)) break;
        if (ps[batch.first] >= next_checkpoint) {
            next_checkpoint <<= 4;
            if (classify(work) != Primality::composite) {
                out.mul_prime(work);
                work = 1;
                done = true;
                break;
            }
        }
        std::size_t limb_count = mpz_size(work.get_mpz_t());
        u64 rem = limb_count <= 8
                      ? limbs_mod(mpz_limbs_read(work.get_mpz_t()), limb_count, batch.product)
                      : mpz_fdiv_ui(work.get_mpz_t(), batch.product);
        for (u32 i = batch.first; i < batch.last; ++i) {
            u32 p = ps[i];
            if (p > config.trial_division_limit) break;
            if (rem % p != 0) continue;
            unsigned e = 0;
            while (mpz_divisible_ui_p(work.get_mpz_t(), p)) {
                mpz_divexact_ui(work.get_mpz_t(), work.get_mpz_t(), p);
                ++e;
            }
            if (e) out.mul_prime(Nat(static_cast<unsigned long>(p)), e);
        }
    }
    if (done || work == 1) return out;
    if (fits_u64(work)) {
        // Finish the sweep and everything after it natively.
        u64 w = to_u64(work);
        for (u32 p : ps) {
            if (p > config.trial_division_limit || (u64)p * p > w) break;
            while (w % p == 0) {
                w /= p;
                out.mul_prime(Nat(static_cast<unsigned long>(p)));
            }
        }
        if (w > 1) factor64_into(w, out);
        return out;
    }

    u64 budget = config.rho_iteration_budget;
    std::vector<Nat> pending{work};
    std::vector<Nat> unresolved;

    while (!pending.empty()) {
        Nat c = std::move(pending.back());
        pending.pop_back();
        if (c == 1) continue;
        if (fits_u64(c)) {
            factor64_into(to_u64(c), out);
            continue;
        }
        if (classify(c) != Primality::composite) {
            out.mul_prime(c);
            continue;
        }
        if (config.table) {
            if (const Factorization* hit = config.table->lookup(c)) {
                out = out.times(*hit);
                continue;
            }
        }
        if (mpz_perfect_power_p(c.get_mpz_t())) {
            for (unsigned long k = 2; k <= mpz_sizeinbase(c.get_mpz_t(), 2); ++k) {
                Nat root;
                if (mpz_root(root.get_mpz_t(), c.get_mpz_t(), k) != 0) {
                    for (unsigned long i = 0; i < k; ++i) pending.push_back(root);
                    break;
                }
            }
            continue;
        }
        if (c.get_str().size() > config.rho_digit_ceiling || budget == 0) {
            unresolved.push_back(std::move(c));
            continue;
        }
        Nat d = 0;
        for (unsigned long seed = 1; d == 0 && budget > 0; ++seed)
            d = brent_mpz(c, seed, budget);
        if (d == 0) {
            unresolved.push_back(std::move(c));
            continue;
        }
        pending.push_back(c / d);
        pending.push_back(std::move(d));
    }

    if (!unresolved.empty()) {
        Nat cofactor = 1;
        for (const auto& c : unresolved) cofactor *= c;
        throw FactorizationIncomplete(std::move(out), std::move(cofactor));
    }
    return out;
}

Nat mult_order(const Nat& r, const Nat& a) {
    if (!is_prime(r)) throw std::invalid_argument("mult_order: r must be prime");
    if (r == 2) {
        if (a % 2 == 0) throw NotCoprime("e(2, a) undefined for even a");
        return (a % 4 == 1) ? Nat(1) : Nat(2);
    }
    if (a % r == 0) throw NotCoprime("mult_order: r divides a");
    Nat order = r - 1;
    Factorization f = factor(order);
    for (const auto& fe : f.entries()) {
        for (unsigned i = 0; i < fe.exponent; ++i) {
            Nat reduced = order / fe.prime;
            Nat x;
            mpz_powm(x.get_mpz_t(), a.get_mpz_t(), reduced.get_mpz_t(), r.get_mpz_t());
            if (x != 1) break;
            order = std::move(reduced);
        }
    }
    return order;
}

bool has_mult_order(const Nat& r, const Nat& a, unsigned long m) {
    if (r == 2) {
        if (a % 2 == 0) return false;
        return ((a % 4 == 1) ? 1ul : 2ul) == m;
    }
    if (a % r == 0) return false;
    Nat mm(m);
    Nat x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), mm.get_mpz_t(), r.get_mpz_t());
    if (x != 1) return false;
    Factorization mf;
    factor64_into(m, mf);
    for (const auto& fe : mf.entries()) {
        Nat reduced = mm / fe.prime;
        mpz_powm(x.get_mpz_t(), a.get_mpz_t(), reduced.get_mpz_t(), r.get_mpz_t());
        if (x == 1) return false;
    }
    return true;
}

Nat cyclotomic_value(unsigned long d, const Nat& q) {
    if (d == 0) throw std::invalid_argument("cyclotomic_value: d >= 1");
    if (q < 2) throw std::invalid_argument("cyclotomic_value: q >= 2");
    // Phi_d(q) = (q^d - 1) / prod of Phi_e(q) over proper divisors e of d.
    std::vector<unsigned long> divisors;
    for (unsigned long e = 1; e * e <= d; ++e) {
        if (d % e) continue;
        divisors.push_back(e);
        if (e != d / e) divisors.push_back(d / e);
    }
    std::sort(divisors.begin(), divisors.end());
    std::map<unsigned long, Nat> phi;
    for (unsigned long e : divisors) {
        Nat v = pow_nat(q, e) - 1;
        for (unsigned long e2 : divisors) {
            if (e2 >= e || e % e2) continue;
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), phi.at(e2).get_mpz_t());
        }
        phi.emplace(e, std::move(v));
    }
    return phi.at(d);
}

ZsigmondySet primitive_prime_divisors(const Nat& a, unsigned long m, const FactorConfig& config) {
    if (a < 2) throw std::invalid_argument("primitive_prime_divisors: a > 1 required");
    if (m < 1) throw std::invalid_argument("primitive_prime_divisors: m >= 1 required");
    ZsigmondySet zs;
    zs.base = a;
    zs.exponent = m;
    Nat phi = cyclotomic_value(m, a);
    if (phi == 1) return zs;
    Factorization f = factor(phi, config);
    for (const auto& fe : f.entries())
        if (has_mult_order(fe.prime, a, m)) zs.primes.push_back(fe.prime);
    return zs;
}

std::vector<Nat> restricted_ppd(const std::vector<Nat>& primes, const Nat& a, unsigned long m) {
    std::vector<Nat> out;
    for (const Nat& r : primes) {
        if (a % r == 0) continue;  // r | a can never divide a^m - 1
        if (has_mult_order(r, a, m)) out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Nat nu(const Nat& m) {
    if (m < 1) throw std::invalid_argument("nu: m >= 1 required");
    unsigned long rem = mpz_fdiv_ui(m.get_mpz_t(), 4);
    if (rem == 0) return m;
    if (rem == 2) return m / 2;
    return 2 * m;
}

Nat eta(const Nat& m) {
    if (m < 1) throw std::invalid_argument("eta: m >= 1 required");
    return mpz_odd_p(m.get_mpz_t()) ? m : Nat(m / 2);
}

Nat p_part(const Nat& m, const Nat& p) {
    if (m < 1) throw std::invalid_argument("p_part: m >= 1 required");
    if (!is_prime(p)) throw std::invalid_argument("p_part: p must be prime");
    Nat part = 1;
    Nat rest = m;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
        part *= p;
    }
    return part;
}

std::optional<std::pair<Nat, unsigned>> is_prime_power(const Nat& q) {
    if (q < 2) throw std::invalid_argument("is_prime_power: q >= 2 required");
    unsigned long maxf = mpz_sizeinbase(q.get_mpz_t(), 2);
    for (unsigned long f = maxf; f >= 1; --f) {
        Nat root;
        if (mpz_root(root.get_mpz_t(), q.get_mpz_t(), f) != 0) {
            if (is_prime(root)) return std::make_pair(root, static_cast<unsigned>(f));
            return std::nullopt;  // maximal exact root not prime => not a prime power
        }
    }
    return std::nullopt;
}

Nat next_prime_above(const Nat& n) {
    Nat c = n + 1;
    if (c <= 2) return 2;
    if (c % 2 == 0) ++c;
    while (!is_prime(c)) c += 2;
    return c;
}

// ---------------------------------------------------------------------------
// FactorTable

namespace {

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

FactorTable FactorTable::parse_text(const std::string& text, const std::string& origin) {
    FactorTable table;
    std::istringstream is(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = strip(line);
        if (line.empty()) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(origin + ":" + std::to_string(lineno) + ": expected '='");
        Nat composite = nat_from_string(strip(line.substr(0, eq)));
        Factorization f = Factorization::parse(strip(line.substr(eq + 1)));
        for (const auto& fe : f.entries())
            if (!is_prime(fe.prime))
                throw std::runtime_error(origin + ":" + std::to_string(lineno) + ": " +
                                         fe.prime.get_str() + " is not prime");
        if (f.value() != composite)
            throw std::runtime_error(origin + ":" + std::to_string(lineno) +
                                     ": product does not match composite");
        table.entries_[composite] = std::move(f);
    }
    return table;
}

FactorTable FactorTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open factor table: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str(), path);
}

const Factorization* FactorTable::lookup(const Nat& composite) const {
    auto it = entries_.find(composite);
    return it == entries_.end() ? nullptr : &it->second;
}

}  // namespace primegraph::arith
