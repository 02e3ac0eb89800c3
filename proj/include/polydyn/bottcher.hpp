#pragma once

#include <memory>

#include "polydyn/laurent.hpp"
#include "polydyn/places.hpp"
#include "polydyn/qring.hpp"

namespace polydyn {

// degree-d polynomial self-map of the affine line, d >= 2
struct PolynomialSystem {
    Pol<FieldElement> f;
    Int D{1};

    explicit PolynomialSystem(Pol<FieldElement> p);
    long degree() const { return f.deg(); }
    const FieldElement& lead() const { return f.lead(); }
    FieldElement eval(const FieldElement& x) const { return f.eval(x); }
    bool monic() const { return f.lead() == FieldElement(1); }
    // f = a_d z^d with every other coefficient zero
    bool is_monomial_map() const;
};

struct BottcherSeries {
    LaurentTail<QRElem> phi;            // top exponent 1
    QRElem b1;                          // b1^(d-1) = a_d
    long order;                         // number of retained coefficients
    std::shared_ptr<const QRing> ring;  // null when b1 lies in the base field
};

// phi_f to order N (N >= 2 coefficients, exponents 1 down to 2-N), with
// the functional equation phi o f = phi^d verified exactly before returning
BottcherSeries compute_bottcher(const PolynomialSystem& f, long N, int root_choice = 0);

struct EscapeRadius {
    Place v;
    Rat c;       // finite places: B_v = p^c exactly
    RBall arch;  // archimedean places: certified upper bound for B_v

    explicit EscapeRadius(Place p) : v(std::move(p)), c(0), arch(64) {}
};

EscapeRadius escape_radius(const PolynomialSystem& f, const Place& v, mpfr_prec_t prec = 128);

// enclosure of phi_f(a) at an archimedean place, via the telescoping product
// started at the first certified-escape iterate; principal branches
CBall evaluate_bottcher_arch(const PolynomialSystem& f, const FieldElement& a, const Place& v,
                             mpfr_prec_t prec = 128, long iter_budget = 64);

enum class PolyType { MonomialType, Nonexceptional };

PolyType classify_polynomial_type(const PolynomialSystem& f);

// all zeta in Q(sqrt(D)) with zeta^q = 1
std::vector<FieldElement> roots_of_unity(const Int& D, long q);

}  // namespace polydyn
