#pragma once

#include <vector>

#include "polydyn/ball.hpp"
#include "polydyn/field.hpp"

namespace polydyn {

enum class PlaceKind { Arch, RatPrime, Split, Inert, Ramified };

struct Place {
    PlaceKind kind;
    Int p{0};     // finite places: the rational prime below
    int index{0};  // archimedean embedding, or split-place index (0/1)
    Int D{1};     // owning field

    bool archimedean() const { return kind == PlaceKind::Arch; }
    // local degree [K_v : Q_v]
    long nv() const;

    std::string str() const;
    static Place parse(const std::string& s, const Int& D);

    bool operator==(const Place& o) const {
        return kind == o.kind && p == o.p && index == o.index && D == o.D;
    }
    bool operator<(const Place& o) const;
};

// log|x|_v: finite places give the exact rational c with log|x|_v = c log p;
// archimedean places give a certified enclosure.
struct LogAbs {
    bool finite;
    Rat c;
    Int p;
    RBall arch;

    LogAbs() : finite(true), c(0), p(0), arch(64) {}
};

std::vector<Place> arch_places(const Int& D);
std::vector<Place> places_above(const Int& p, const Int& D);

// valuation of x at a finite place, normalized so that val(p) = 1
Rat place_valuation(const FieldElement& x, const Place& v);

LogAbs abs_value(const FieldElement& x, const Place& v, mpfr_prec_t prec = 128);

// square root of D mod p^K at a split prime; index selects the branch
Int lifted_sqrt(const Int& D, const Int& p, unsigned long K, int index);

// all archimedean places plus every finite place where bad reduction or a
// non-integral starting point is possible
std::vector<Place> relevant_places(const std::vector<FieldElement>& coeffs, const FieldElement& a);

}  // namespace polydyn
