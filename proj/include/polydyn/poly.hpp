#pragma once

#include <utility>
#include <vector>

#include "polydyn/field.hpp"
#include "polydyn/zutil.hpp"

namespace polydyn {

inline bool poly_coeff_zero(const Rat& x) {
    return x == 0;
}
inline bool poly_coeff_zero(const FieldElement& x) {
    return x.is_zero();
}
inline Rat inv_elem(const Rat& x) {
    if (x == 0) throw domain_error("inverse of 0");
    return 1 / x;
}
inline FieldElement inv_elem(const FieldElement& x) {
    return x.inverse();
}

// Dense univariate polynomial over an exact ring, coefficients ascending.
template <typename R>
struct Pol {
    std::vector<R> c;

    Pol() = default;
    Pol(long v) {  // NOLINT implicit: constant polynomial
        if (v != 0) c.push_back(R(v));
    }
    explicit Pol(std::vector<R> v) : c(std::move(v)) { normalize(); }
    Pol(std::initializer_list<R> v) : c(v) { normalize(); }

    static Pol var() {
        Pol p;
        p.c = {R(0), R(1)};
        return p;
    }

    void normalize() {
        while (!c.empty() && poly_coeff_zero(c.back())) c.pop_back();
    }

    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const R& lead() const {
        if (c.empty()) throw domain_error("leading coefficient of 0");
        return c.back();
    }
    R at(std::size_t i) const { return i < c.size() ? c[i] : R(0); }

    R eval(const R& x) const {
        R v(0);
        for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
        return v;
    }

    Pol operator-() const {
        Pol r = *this;
        for (auto& a : r.c) a = -a;
        return r;
    }

    Pol operator+(const Pol& o) const {
        Pol r;
        r.c.resize(std::max(c.size(), o.c.size()), R(0));
        for (std::size_t i = 0; i < r.c.size(); i++) r.c[i] = at(i) + o.at(i);
        r.normalize();
        return r;
    }

    Pol operator-(const Pol& o) const {
        Pol r;
        r.c.resize(std::max(c.size(), o.c.size()), R(0));
        for (std::size_t i = 0; i < r.c.size(); i++) r.c[i] = at(i) - o.at(i);
        r.normalize();
        return r;
    }

    Pol operator*(const Pol& o) const {
        if (is_zero() || o.is_zero()) return Pol();
        Pol r;
        r.c.assign(c.size() + o.c.size() - 1, R(0));
        for (std::size_t i = 0; i < c.size(); i++)
            for (std::size_t j = 0; j < o.c.size(); j++) r.c[i + j] = r.c[i + j] + c[i] * o.c[j];
        r.normalize();
        return r;
    }

    Pol operator*(const R& s) const {
        Pol r = *this;
        for (auto& a : r.c) a = a * s;
        r.normalize();
        return r;
    }

    bool operator==(const Pol& o) const { return (*this - o).is_zero(); }
    bool operator!=(const Pol& o) const { return !(*this == o); }

    Pol shifted(std::size_t k) const {  // multiply by x^k
        if (is_zero()) return Pol();
        Pol r;
        r.c.assign(k, R(0));
        r.c.insert(r.c.end(), c.begin(), c.end());
        return r;
    }

    Pol derivative() const {
        Pol r;
        for (std::size_t i = 1; i < c.size(); i++) r.c.push_back(c[i] * R(static_cast<long>(i)));
        r.normalize();
        return r;
    }

    Pol compose(const Pol& inner) const {
        Pol r;
        for (std::size_t i = c.size(); i-- > 0;) {
            r = r * inner;
            r = r + Pol{c[i]};
        }
        return r;
    }

    Pol pow(unsigned long e) const {
        Pol r(1);
        Pol b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }
};

template <typename R>
std::pair<Pol<R>, Pol<R>> divmod(const Pol<R>& a, const Pol<R>& b) {
    if (b.is_zero()) throw domain_error("division by zero polynomial");
    Pol<R> q, r = a;
    R linv = inv_elem(b.lead());
    while (!r.is_zero() && r.deg() >= b.deg()) {
        std::size_t k = static_cast<std::size_t>(r.deg() - b.deg());
        R f = r.lead() * linv;
        Pol<R> t = (b * f).shifted(k);
        r = r - t;
        Pol<R> m;
        m.c.assign(k + 1, R(0));
        m.c[k] = f;
        m.normalize();
        q = q + m;
    }
    return {q, r};
}

template <typename R>
Pol<R> exact_div(const Pol<R>& a, const Pol<R>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw domain_error("non-exact polynomial division");
    return q;
}

template <typename R>
Pol<R> make_monic(const Pol<R>& a) {
    if (a.is_zero()) return a;
    return a * inv_elem(a.lead());
}

template <typename R>
Pol<R> gcd_monic(Pol<R> a, Pol<R> b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

template <typename R>
struct ExtGcd {
    Pol<R> g, u, v;  // u*a + v*b == g
};

template <typename R>
ExtGcd<R> ext_gcd(Pol<R> a, Pol<R> b) {
    Pol<R> u0(1), v0(0), u1(0), v1(1);
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = std::move(r);
        Pol<R> nu = u0 - q * u1, nv = v0 - q * v1;
        u0 = std::move(u1);
        v0 = std::move(v1);
        u1 = std::move(nu);
        v1 = std::move(nv);
    }
    return {a, u0, v0};
}

template <typename R>
Pol<R> squarefree_part(const Pol<R>& a) {
    if (a.deg() <= 0) return make_monic(a);
    Pol<R> g = gcd_monic(a, a.derivative());
    return make_monic(exact_div(a, g));
}

// resultant over a field via the Euclidean recursion
template <typename R>
R resultant(Pol<R> a, Pol<R> b) {
    if (a.is_zero() || b.is_zero()) return R(0);
    R acc(1);
    bool neg = false;
    while (b.deg() > 0) {
        auto [q, r] = divmod(a, b);
        (void)q;
        long da = a.deg(), db = b.deg(), dr = r.is_zero() ? -1 : r.deg();
        if ((da % 2) && (db % 2)) neg = !neg;
        if (r.is_zero()) return R(0);
        R lb = b.lead();
        R f(1);
        for (long i = 0; i < da - dr; i++) f = f * lb;
        acc = acc * f;
        a = std::move(b);
        b = std::move(r);
    }
    // b is a nonzero constant
    R lb = b.lead();
    R f(1);
    for (int i = 0; i < a.deg(); i++) f = f * lb;
    acc = acc * f;
    return neg ? R(0) - acc : acc;
}

Pol<Rat> lagrange_interpolate(const std::vector<std::pair<Rat, Rat>>& pts);

// the integer polynomial a/content, plus the content, for a != 0
std::pair<Pol<Rat>, Rat> primitive_part(const Pol<Rat>& a);

std::vector<Rat> rational_roots(const Pol<Rat>& a);

}  // namespace polydyn
