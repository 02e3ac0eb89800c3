#pragma once

#include <memory>

#include "polydyn/poly.hpp"

namespace polydyn {

// Q(sqrt(D))[t] / (m(t)) with m monic of degree >= 1.
struct QRing {
    Pol<FieldElement> modulus;
    Int D{1};

    QRing(Pol<FieldElement> m, Int d);
    std::string str() const;
};

// Residue class; a null ring marks a plain base-field constant, which
// promotes when combined with a genuine residue.
class QRElem {
  public:
    std::shared_ptr<const QRing> ring;
    Pol<FieldElement> val;

    QRElem() = default;
    QRElem(long v) {  // NOLINT implicit
        if (v != 0) val = Pol<FieldElement>{FieldElement(v)};
    }
    QRElem(FieldElement c) {  // NOLINT implicit
        if (!c.is_zero()) val = Pol<FieldElement>{std::move(c)};
    }
    QRElem(std::shared_ptr<const QRing> r, Pol<FieldElement> v);

    static QRElem generator(std::shared_ptr<const QRing> r);

    bool is_zero() const { return val.is_zero(); }
    bool is_constant() const { return val.deg() <= 0; }
    FieldElement constant() const;

    QRElem operator-() const;
    QRElem operator+(const QRElem& o) const;
    QRElem operator-(const QRElem& o) const;
    QRElem operator*(const QRElem& o) const;
    QRElem inverse() const;
    QRElem pow(long n) const;
    bool operator==(const QRElem& o) const;
    bool operator!=(const QRElem& o) const { return !(*this == o); }

    std::string str() const;
};

inline bool poly_coeff_zero(const QRElem& x) {
    return x.is_zero();
}
inline QRElem inv_elem(const QRElem& x) {
    return x.inverse();
}

}  // namespace polydyn
