#include "polydyn/zutil.hpp"

#include <algorithm>

namespace polydyn {

bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

Int pollard_rho(const Int& n, SplitMix64& rng) {
    if (n % 2 == 0) return 2;
    while (true) {
        Int x = Int(rng.next()) % n;
        Int c = Int(rng.next()) % n + 1;
        Int y = x, d = 1;
        // Brent's cycle variant with batched gcds.
        Int ys = y, q = 1;
        unsigned long r = 1;
        const unsigned long m = 128;
        do {
            x = y;
            for (unsigned long i = 0; i < r; i++) y = (y * y + c) % n;
            unsigned long k = 0;
            while (k < r && d == 1) {
                ys = y;
                unsigned long lim = std::min(m, r - k);
                for (unsigned long i = 0; i < lim; i++) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r *= 2;
        } while (d == 1);
        if (d == n) {
            // backtrack
            do {
                ys = (ys * ys + c) % n;
                mpz_gcd(d.get_mpz_t(), Int(abs(x - ys)).get_mpz_t(), n.get_mpz_t());
            } while (d == 1);
        }
        if (d != n) return d;
    }
}

void factor_into(const Int& n0, std::map<Int, int>& out, SplitMix64& rng) {
    Int n = n0;
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out[n]++;
        return;
    }
    Int d = pollard_rho(n, rng);
    factor_into(d, out, rng);
    factor_into(n / d, out, rng);
}

}  // namespace

std::map<Int, int> factor(const Int& n_in) {
    if (n_in == 0) throw domain_error("factor(0)");
    Int n = abs(n_in);
    std::map<Int, int> out;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            n /= p;
            out[Int(p)]++;
        }
    }
    // trial division up to 10^5
    for (unsigned long p = 41; p < 100000 && n > 1; p += 2) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
                n /= p;
                out[Int(p)]++;
            }
        }
    }
    if (n > 1) {
        SplitMix64 rng(0x9e3779b97f4a7c15ull ^ mpz_get_ui(n.get_mpz_t()));
        factor_into(n, out, rng);
    }
    return out;
}

std::optional<Int> exact_root(const Int& n, unsigned k) {
    if (k == 0) throw domain_error("exact_root k=0");
    if (n == 0) return Int(0);
    if (n < 0 && k % 2 == 0) return std::nullopt;
    Int a = abs(n), r;
    int exact = mpz_root(r.get_mpz_t(), a.get_mpz_t(), k);
    if (!exact) return std::nullopt;
    return n < 0 ? Int(-r) : r;
}

std::optional<Rat> exact_root(const Rat& q, unsigned k) {
    auto num = exact_root(Int(q.get_num()), k);
    if (!num) return std::nullopt;
    auto den = exact_root(Int(q.get_den()), k);
    if (!den) return std::nullopt;
    Rat r(*num, *den);
    r.canonicalize();
    return r;
}

long valuation(const Int& n, const Int& p) {
    if (n == 0) throw domain_error("valuation of 0");
    Int m = n;
    long v = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        m /= p;
        v++;
    }
    return v;
}

long valuation(const Rat& q, const Int& p) {
    if (q == 0) throw domain_error("valuation of 0");
    long v = 0;
    if (mpz_divisible_p(Int(q.get_num()).get_mpz_t(), p.get_mpz_t()))
        v = valuation(Int(q.get_num()), p);
    else if (mpz_divisible_p(Int(q.get_den()).get_mpz_t(), p.get_mpz_t()))
        v = -valuation(Int(q.get_den()), p);
    return v;
}

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw parse_error("empty rational literal");
    std::string t = s;
    // allow leading '+'
    if (t[0] == '+') t = t.substr(1);
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), t.c_str(), 10) != 0)
        throw parse_error("bad rational literal: " + s);
    if (Int(q.get_den()) == 0) throw parse_error("zero denominator: " + s);
    q.canonicalize();
    return q;
}

std::string rat_str(const Rat& q) {
    return q.get_str();
}

std::pair<unsigned, Rat> largest_power_divisor(const Rat& q, unsigned m) {
    for (unsigned s = m; s >= 2; s--) {
        if (m % s != 0) continue;
        if (auto r = exact_root(q, s)) return {s, *r};
    }
    return {1u, q};
}

std::optional<Rat> rational_reconstruct(const Int& r0, const Int& M) {
    Int bound;
    mpz_sqrt(bound.get_mpz_t(), Int(M / 2).get_mpz_t());
    Int r = ((r0 % M) + M) % M;
    // half extended Euclid on (M, r)
    Int a = M, b = r, x0 = 0, x1 = 1;
    while (b > bound) {
        Int q = a / b;
        Int t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
    }
    if (b == 0 || abs(x1) > bound) return std::nullopt;
    Int num = b, den = x1;
    if (den < 0) {
        num = -num;
        den = -den;
    }
    Int g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1) return std::nullopt;
    Rat out(num, den);
    out.canonicalize();
    return out;
}

namespace {

Rat simplest_positive(const Rat& lo, const Rat& hi) {
    // requires 0 < lo <= hi
    Int fl = Int(lo.get_num()) / Int(lo.get_den());  // floor, lo > 0
    Rat ceil_lo = (Int(lo.get_num()) % Int(lo.get_den()) == 0) ? Rat(fl) : Rat(fl + 1);
    if (ceil_lo <= hi) return ceil_lo;
    Rat inner = simplest_positive(Rat(1) / (hi - Rat(fl)), Rat(1) / (lo - Rat(fl)));
    return Rat(fl) + Rat(1) / inner;
}

}  // namespace

Rat simplest_rational_in(const Rat& lo, const Rat& hi) {
    if (lo > hi) throw domain_error("simplest_rational_in: empty interval");
    if (lo <= 0 && 0 <= hi) return Rat(0);
    if (hi < 0) return -simplest_rational_in(-hi, -lo);
    return simplest_positive(lo, hi);
}

std::vector<Rat> rational_poly_roots(const std::vector<Rat>& coeffs) {
    // clear denominators and content
    Int lcm = 1;
    for (const auto& c : coeffs) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), Int(c.get_den()).get_mpz_t());
    std::vector<Int> ic;
    for (const auto& c : coeffs) ic.push_back(Int(c * Rat(lcm)));
    while (!ic.empty() && ic.back() == 0) ic.pop_back();
    if (ic.empty()) throw domain_error("rational_poly_roots: zero polynomial");
    std::vector<Rat> roots;
    std::size_t lo = 0;
    while (ic[lo] == 0) lo++;
    if (lo > 0) {
        roots.push_back(Rat(0));
        ic.erase(ic.begin(), ic.begin() + static_cast<long>(lo));
    }
    if (ic.size() == 1) return roots;
    Int g = 0;
    for (const auto& c : ic) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    for (auto& c : ic) c /= g;
    auto divisors = [](const Int& n) {
        std::vector<Int> ds{Int(1)};
        for (auto& [p, e] : factor(n)) {
            std::size_t sz = ds.size();
            Int pk = 1;
            for (int i = 0; i < e; i++) {
                pk *= p;
                for (std::size_t j = 0; j < sz; j++) ds.push_back(ds[j] * pk);
            }
        }
        return ds;
    };
    auto eval = [&ic](const Rat& x) {
        Rat v = 0;
        for (std::size_t i = ic.size(); i-- > 0;) v = v * x + Rat(ic[i]);
        return v;
    };
    for (const Int& p : divisors(ic.front()))
        for (const Int& q : divisors(ic.back())) {
            Rat cand(p, q);
            cand.canonicalize();
            for (Rat x : {cand, Rat(-cand)}) {
                if (eval(x) == 0 && std::find(roots.begin(), roots.end(), x) == roots.end())
                    roots.push_back(x);
            }
        }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    return next() % bound;
}

std::uint64_t random_prime64(SplitMix64& rng, const std::vector<Int>& avoid) {
    while (true) {
        std::uint64_t c = (rng.next() >> 2) | (1ull << 61) | 1ull;
        Int p(static_cast<unsigned long>(c));
        if (!is_probable_prime(p)) continue;
        bool bad = false;
        for (const auto& a : avoid)
            if (a != 0 && mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t())) bad = true;
        if (!bad) return c;
    }
}

}  // namespace polydyn
