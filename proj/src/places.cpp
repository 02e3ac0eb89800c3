#include "polydyn/places.hpp"

#include <algorithm>
#include <set>

namespace polydyn {

long Place::nv() const {
    switch (kind) {
        case PlaceKind::Arch:
            return (D != 1 && D < 0) ? 2 : 1;
        case PlaceKind::RatPrime:
        case PlaceKind::Split:
            return 1;
        case PlaceKind::Inert:
        case PlaceKind::Ramified:
            return 2;
    }
    return 1;
}

std::string Place::str() const {
    switch (kind) {
        case PlaceKind::Arch:
            return "inf:" + std::to_string(index);
        case PlaceKind::RatPrime:
            return p.get_str();
        case PlaceKind::Split:
            return p.get_str() + ":split:" + std::to_string(index);
        case PlaceKind::Inert:
            return p.get_str() + ":inert";
        case PlaceKind::Ramified:
            return p.get_str() + ":ram";
    }
    return "";
}

bool Place::operator<(const Place& o) const {
    auto key = [](const Place& x) {
        return std::tuple<int, Int, int>(x.archimedean() ? 0 : 1, x.p, x.index);
    };
    return key(*this) < key(o);
}

Place Place::parse(const std::string& s, const Int& D) {
    auto fail = [&]() { throw parse_error("bad place: " + s); };
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        auto k = s.find(':', pos);
        if (k == std::string::npos) {
            parts.push_back(s.substr(pos));
            break;
        }
        parts.push_back(s.substr(pos, k - pos));
        pos = k + 1;
    }
    if (parts.empty() || parts[0].empty()) fail();
    Place v;
    v.D = D;
    if (parts[0] == "inf") {
        v.kind = PlaceKind::Arch;
        v.index = parts.size() > 1 ? std::stoi(parts[1]) : 0;
        for (const auto& w : arch_places(D))
            if (w.index == v.index) return w;
        fail();
    }
    Int p(parts[0]);
    auto above = places_above(p, D);
    if (parts.size() == 1) {
        if (above.size() != 1) fail();
        return above[0];
    }
    const std::string& tag = parts[1];
    int idx = parts.size() > 2 ? std::stoi(parts[2]) : 0;
    for (const auto& w : above) {
        if (tag == "split" && w.kind == PlaceKind::Split && w.index == idx) return w;
        if (tag == "inert" && w.kind == PlaceKind::Inert) return w;
        if (tag == "ram" && w.kind == PlaceKind::Ramified) return w;
    }
    fail();
    return v;
}

std::vector<Place> arch_places(const Int& D) {
    std::vector<Place> out;
    if (D == 1) {
        out.push_back(Place{PlaceKind::Arch, 0, 0, D});
    } else if (D > 0) {
        out.push_back(Place{PlaceKind::Arch, 0, 0, D});
        out.push_back(Place{PlaceKind::Arch, 0, 1, D});
    } else {
        out.push_back(Place{PlaceKind::Arch, 0, 0, D});
    }
    return out;
}

std::vector<Place> places_above(const Int& p, const Int& D) {
    if (!is_probable_prime(p)) throw domain_error("not a prime: " + p.get_str());
    std::vector<Place> out;
    if (D == 1) {
        out.push_back(Place{PlaceKind::RatPrime, p, 0, D});
        return out;
    }
    bool ram;
    if (p == 2) {
        Int m = ((D % 8) + 8) % 8;
        ram = (m != 1 && m != 5);
        if (!ram) {
            if (m == 1) {
                out.push_back(Place{PlaceKind::Split, p, 0, D});
                out.push_back(Place{PlaceKind::Split, p, 1, D});
            } else {
                out.push_back(Place{PlaceKind::Inert, p, 0, D});
            }
            return out;
        }
    } else {
        ram = mpz_divisible_p(D.get_mpz_t(), p.get_mpz_t());
        if (!ram) {
            int leg = mpz_legendre(D.get_mpz_t(), p.get_mpz_t());
            if (leg == 1) {
                out.push_back(Place{PlaceKind::Split, p, 0, D});
                out.push_back(Place{PlaceKind::Split, p, 1, D});
            } else {
                out.push_back(Place{PlaceKind::Inert, p, 0, D});
            }
            return out;
        }
    }
    out.push_back(Place{PlaceKind::Ramified, p, 0, D});
    return out;
}

Int lifted_sqrt(const Int& D, const Int& p, unsigned long K, int index) {
    Int pk;
    mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), K);
    Int Dm = ((D % pk) + pk) % pk;
    if (p == 2) {
        if (((D % 8) + 8) % 8 != 1) throw domain_error("2 does not split");
        // Lift bit by bit, two levels past K: the step to modulus 2^{k+1}
        // rewrites bit k-1, so only bits below K are final afterwards.
        unsigned long KK = std::max<unsigned long>(K, 3) + 2;
        Int big;
        mpz_pow_ui(big.get_mpz_t(), p.get_mpz_t(), KK);
        Int Db = ((D % big) + big) % big;
        Int r = 1, mod = 8;
        for (unsigned long k = 3; k < KK; k++) {
            Int e = ((r * r - Db) / mod) % 2;
            if (e != 0) r += mod / 2;
            mod *= 2;
            r %= mod;
        }
        Int t = r % 8;
        Int r_trunc = ((r % pk) + pk) % pk;
        Int other = ((pk - r_trunc) % pk + pk) % pk;
        bool r_is_first = t <= 8 - t;
        if ((index == 0) == r_is_first) return r_trunc;
        return other;
    }
    // base root mod p via Tonelli-Shanks (p odd)
    Int r;
    {
        Int pm = ((D % p) + p) % p;
        if (pm == 0 || mpz_legendre(D.get_mpz_t(), p.get_mpz_t()) != 1)
            throw domain_error("p does not split");
        // Tonelli-Shanks
        Int q = p - 1;
        unsigned long s = 0;
        while (q % 2 == 0) {
            q /= 2;
            s++;
        }
        auto powm = [&p](Int b, Int e) {
            Int out;
            mpz_powm(out.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
            return out;
        };
        if (s == 1) {
            r = powm(pm, (p + 1) / 4);
        } else {
            Int z = 2;
            while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) z++;
            Int M = s, cc = powm(z, q), t = powm(pm, q), R = powm(pm, (q + 1) / 2);
            while (t != 1) {
                Int tt = t;
                unsigned long i = 0;
                while (tt != 1) {
                    tt = tt * tt % p;
                    i++;
                }
                Int b = cc;
                for (Int j = 0; j < Int(M) - Int(i) - 1; j++) b = b * b % p;
                M = Int(i);
                cc = b * b % p;
                t = t * cc % p;
                R = R * b % p;
            }
            r = R;
        }
    }
    // Newton lifting to mod p^K
    Int mod = p;
    while (mod < pk) {
        mod = mod * mod;
        if (mod > pk) mod = pk;
        Int inv2r;
        Int two_r = 2 * r % mod;
        if (mpz_invert(inv2r.get_mpz_t(), two_r.get_mpz_t(), mod.get_mpz_t()) == 0)
            throw domain_error("lift inversion failed");
        r = (r - (r * r - Dm) % mod * inv2r) % mod;
        r = ((r % mod) + mod) % mod;
    }
    r %= pk;
    Int other = pk - r;
    Int rp = r % p;
    Int base0 = std::min(rp, Int((p - rp) % p));
    bool r_is_base0 = (r % p) == base0;
    if ((index == 0) == r_is_base0) return r;
    return other;
}

Rat place_valuation(const FieldElement& x, const Place& v) {
    if (v.archimedean()) throw domain_error("valuation at an archimedean place");
    if (x.is_zero()) throw domain_error("valuation of 0");
    if (x.b == 0) return Rat(valuation(x.a, v.p));
    switch (v.kind) {
        case PlaceKind::Split: {
            if (x.a == 0) return Rat(valuation(x.b, v.p));  // sqrt(D) is a unit here
            // valuation of a + b*r in Q_p, lifting r adaptively
            long vn = valuation(x.norm(), v.p);
            unsigned long K = static_cast<unsigned long>(std::max<long>(std::labs(vn) + 8, 16));
            while (true) {
                Int pk;
                mpz_pow_ui(pk.get_mpz_t(), v.p.get_mpz_t(), K);
                Int r = lifted_sqrt(x.D, v.p, K, v.index);
                // den_a*den_b*(a + b r) is an integer
                Int na(x.a.get_num()), da(x.a.get_den());
                Int nb(x.b.get_num()), db(x.b.get_den());
                Int num = na * db + nb * da * r;
                long dv = valuation(Int(da * db), v.p);
                if (num == 0 || valuation(num, v.p) >= static_cast<long>(K) - 2) {
                    K *= 2;
                    if (K > (1u << 20)) throw precision_error("split valuation lift overflow");
                    continue;
                }
                return Rat(valuation(num, v.p) - dv);
            }
        }
        case PlaceKind::Inert:
        case PlaceKind::Ramified: {
            Rat half(valuation(x.norm(), v.p), 2);
            half.canonicalize();
            return half;
        }
        default:
            throw domain_error("rational place applied to a quadratic element");
    }
}

LogAbs abs_value(const FieldElement& x, const Place& v, mpfr_prec_t prec) {
    LogAbs out;
    if (!v.archimedean()) {
        if (x.is_zero()) throw domain_error("log|0|");
        out.finite = true;
        out.p = v.p;
        out.c = -place_valuation(x, v);
        return out;
    }
    out.finite = false;
    if (x.is_zero()) throw domain_error("log|0|");
    if (x.b == 0) {
        out.arch = RBall::from_rat(::abs(x.a), prec).log();
    } else if (x.D < 0) {
        // |a + b sqrt(D)|^2 = a^2 + |D| b^2 = N(x)
        out.arch = RBall::from_rat(x.norm(), prec).log().mul_2si(-1);
    } else {
        out.arch = RBall::from_field(x, v.index, prec).abs().log();
    }
    return out;
}

std::vector<Place> relevant_places(const std::vector<FieldElement>& coeffs, const FieldElement& a) {
    if (coeffs.size() < 3) throw domain_error("degree must be at least 2");
    std::vector<FieldElement> all = coeffs;
    all.push_back(a);
    Int D = common_field(all);
    std::set<Int> primes;
    auto add_primes = [&primes](const Int& n) {
        if (n == 0) return;
        for (auto& [p, e] : factor(n)) {
            (void)e;
            primes.insert(p);
        }
    };
    for (std::size_t i = 0; i < coeffs.size(); i++) {
        add_primes(Int(coeffs[i].a.get_den()));
        add_primes(Int(coeffs[i].b.get_den()));
        if (i + 1 == coeffs.size()) {
            // leading coefficient: numerator too
            FieldElement lead = coeffs[i];
            if (lead.b == 0) {
                add_primes(Int(lead.a.get_num()));
            } else {
                Rat n = lead.norm();
                add_primes(Int(n.get_num()));
                add_primes(Int(n.get_den()));
            }
        }
    }
    add_primes(Int(a.a.get_den()));
    add_primes(Int(a.b.get_den()));
    if (D != 1) add_primes(D);
    std::vector<Place> out = arch_places(D);
    for (const Int& p : primes)
        for (const Place& v : places_above(p, D)) out.push_back(v);
    return out;
}

}  // namespace polydyn
