#include "polydyn/poly.hpp"

namespace polydyn {

Pol<Rat> lagrange_interpolate(const std::vector<std::pair<Rat, Rat>>& pts) {
    Pol<Rat> acc;
    for (std::size_t i = 0; i < pts.size(); i++) {
        Pol<Rat> basis(1);
        Rat denom(1);
        for (std::size_t j = 0; j < pts.size(); j++) {
            if (j == i) continue;
            basis = basis * Pol<Rat>{-pts[j].first, Rat(1)};
            denom *= pts[i].first - pts[j].first;
        }
        acc = acc + basis * (pts[i].second / denom);
    }
    return acc;
}

std::pair<Pol<Rat>, Rat> primitive_part(const Pol<Rat>& a) {
    if (a.is_zero()) throw domain_error("primitive part of 0");
    Int lcm = 1;
    for (const auto& c : a.c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), Int(c.get_den()).get_mpz_t());
    Int g = 0;
    for (const auto& c : a.c) {
        Int n = Int(c * Rat(lcm));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    Rat content(g, lcm);
    content.canonicalize();
    if (a.lead() < 0) content = -content;
    return {a * (1 / content), content};
}

std::vector<Rat> rational_roots(const Pol<Rat>& a) {
    if (a.is_zero()) throw domain_error("roots of the zero polynomial");
    return rational_poly_roots(a.c);
}

}  // namespace polydyn
