#pragma once

#include <limits>

#include "polydyn/poly.hpp"

namespace polydyn {

// validity sentinel for series known exactly at every order
constexpr long LAUR_EXACT = std::numeric_limits<long>::min() / 4;

// Truncated Laurent tail: finitely many terms at and below z^top, with all
// coefficients of exponent >= valid known exactly.  Exponents above the
// stored range are exactly zero; exponents below `valid` are unknown.
template <typename R>
struct LaurentTail {
    long top = -1;
    std::vector<R> c;  // c[0] is the coefficient of z^top, descending
    long valid = 0;

    LaurentTail() = default;

    static LaurentTail zero_to(long valid_order) {
        LaurentTail s;
        s.valid = valid_order;
        s.top = valid_order - 1;
        return s;
    }

    static LaurentTail monomial(R a, long e, long valid_order = LAUR_EXACT) {
        LaurentTail s;
        s.valid = valid_order;
        s.top = e;
        s.c = {std::move(a)};
        s.normalize();
        return s;
    }

    static LaurentTail from_poly(const Pol<R>& p, long valid_order = LAUR_EXACT) {
        LaurentTail s;
        s.valid = valid_order;
        if (p.is_zero()) {
            s.top = (valid_order == LAUR_EXACT ? -1 : valid_order - 1);
            return s;
        }
        s.top = p.deg();
        for (int i = p.deg(); i >= 0; i--) s.c.push_back(p.at(static_cast<std::size_t>(i)));
        s.normalize();
        return s;
    }

    bool exact() const { return valid <= LAUR_EXACT; }
    long lo_stored() const { return top - static_cast<long>(c.size()) + 1; }

    void normalize() {
        while (!c.empty() && poly_coeff_zero(c.front())) {
            c.erase(c.begin());
            top--;
        }
        // drop stored coefficients below the validity threshold
        if (!exact()) {
            while (!c.empty() && lo_stored() < valid) c.pop_back();
            if (c.empty() && top >= valid) top = valid - 1;
        }
    }

    R coeff(long e) const {
        if (!exact() && e < valid) throw domain_error("coefficient below the valid order");
        if (e > top || c.empty()) return R(0);
        long lo = lo_stored();
        if (e < lo) return R(0);
        return c[static_cast<std::size_t>(top - e)];
    }

    bool known_zero() const {
        for (const auto& a : c)
            if (!poly_coeff_zero(a)) return false;
        return true;
    }

    LaurentTail truncated(long new_valid) const {
        LaurentTail s = *this;
        if (new_valid > s.valid || s.exact()) {
            s.valid = std::max(new_valid, s.exact() ? new_valid : s.valid);
            s.normalize();
        }
        return s;
    }

    LaurentTail operator-() const {
        LaurentTail s = *this;
        for (auto& a : s.c) a = -a;
        return s;
    }

    LaurentTail operator+(const LaurentTail& o) const {
        LaurentTail s;
        s.valid = (exact() && o.exact()) ? LAUR_EXACT : std::max(valid, o.valid);
        s.top = std::max(top, o.top);
        long lo = std::min(lo_stored(), o.lo_stored());
        if (!s.exact()) lo = std::max(lo, s.valid);
        if (s.top < lo) {
            s.top = (s.exact() ? -1 : s.valid - 1);
            return s;
        }
        for (long e = s.top; e >= lo; e--) s.c.push_back(safe_at(e) + o.safe_at(e));
        s.normalize();
        return s;
    }

    LaurentTail operator-(const LaurentTail& o) const { return *this + (-o); }

    LaurentTail operator*(const LaurentTail& o) const {
        LaurentTail s;
        bool ex = exact() && o.exact();
        s.valid = ex ? LAUR_EXACT : std::max(exact() ? LAUR_EXACT : valid + o.top,
                                             o.exact() ? LAUR_EXACT : o.valid + top);
        if (c.empty() || o.c.empty()) {
            s.top = ex ? -1 : s.valid - 1;
            return s;
        }
        s.top = top + o.top;
        long lo = lo_stored() + o.lo_stored();
        if (!ex) lo = std::max(lo, s.valid);
        if (s.top < lo) {
            s.top = s.valid - 1;
            return s;
        }
        s.c.assign(static_cast<std::size_t>(s.top - lo + 1), R(0));
        for (std::size_t i = 0; i < c.size(); i++)
            for (std::size_t j = 0; j < o.c.size(); j++) {
                long e = (top - static_cast<long>(i)) + (o.top - static_cast<long>(j));
                if (e < lo || e > s.top) continue;
                auto k = static_cast<std::size_t>(s.top - e);
                s.c[k] = s.c[k] + c[i] * o.c[j];
            }
        s.normalize();
        return s;
    }

    LaurentTail scaled(const R& a) const {
        LaurentTail s = *this;
        for (auto& x : s.c) x = x * a;
        s.normalize();
        return s;
    }

    LaurentTail shifted(long k) const {  // multiply by z^k
        LaurentTail s = *this;
        s.top += k;
        if (!s.exact()) s.valid += k;
        return s;
    }

    // 1/s to the requested validity; the top coefficient must be a unit
    LaurentTail inverse(long out_valid) const {
        if (c.empty() || poly_coeff_zero(c.front()))
            throw domain_error("Laurent inverse needs a nonzero leading term");
        long vr = out_valid;
        if (!exact()) vr = std::max(vr, valid - 2 * top);
        R linv = inv_elem(c.front());
        // u = s / (lead z^top) - 1, exponents <= -1
        LaurentTail u = scaled(linv).shifted(-top) - LaurentTail::monomial(R(1), 0);
        long rel = vr + top;  // needed relative order for (1+u)^{-1}
        LaurentTail acc = LaurentTail::monomial(R(1), 0, rel);
        LaurentTail term = LaurentTail::monomial(R(1), 0, rel);
        LaurentTail mu = (-u).truncated(rel);
        while (true) {
            term = (term * mu).truncated(rel);
            if (term.known_zero()) break;
            acc = acc + term;
        }
        acc = acc.scaled(linv).shifted(-top);
        acc.valid = vr;
        acc.normalize();
        return acc;
    }

    LaurentTail pow_int(long k, long out_valid) const {
        if (k < 0) return inverse(out_valid).pow_int(-k, out_valid);
        long ov = exact() ? LAUR_EXACT : out_valid;
        LaurentTail acc = LaurentTail::monomial(R(1), 0, ov);
        LaurentTail b = truncated(ov);
        auto n = static_cast<unsigned long>(k);
        while (n > 0) {
            if (n & 1) acc = (acc * b).truncated(ov);
            b = (b * b).truncated(ov);
            n >>= 1;
        }
        return acc;
    }

    // s(f(z)) for a polynomial f of degree >= 1, to the given validity
    LaurentTail compose_poly(const Pol<R>& f, long out_valid) const {
        long d = f.deg();
        if (d < 1) throw domain_error("composition with a constant");
        long vr = out_valid;
        if (!exact()) vr = std::max(vr, d * (valid - 1) + 1);
        if (c.empty() || known_zero()) return zero_to(vr);
        long lo = lo_stored();
        // s o f = f^top * Q(1/f) with Q(w) = sum_j s_{top-j} w^j
        LaurentTail F = from_poly(f);
        long v_inv = vr - d * (lo + 1);
        LaurentTail inv = F.inverse(std::min(v_inv, -d));
        LaurentTail acc = zero_to(LAUR_EXACT);
        acc.top = -1;
        for (long e = lo; e <= top; e++) {
            acc = acc * inv;
            acc = acc + monomial(coeff(e), 0, LAUR_EXACT);
        }
        if (top != 0) acc = acc * F.pow_int(top, vr);
        acc = acc.truncated(vr);
        if (acc.valid < vr) acc.valid = vr;
        acc.normalize();
        return acc;
    }

  private:
    R safe_at(long e) const {
        if (e > top || c.empty()) return R(0);
        long lo = lo_stored();
        if (e < lo) return R(0);
        return c[static_cast<std::size_t>(top - e)];
    }
};

// s o f for a series with top exponent 1, truncated to the maximal provably
// valid order d*(valid - 1) + 1.  An exact input with an infinite image is
// treated as if known only down to its lowest stored term.
template <typename R>
LaurentTail<R> compose_series(const LaurentTail<R>& s, const Pol<R>& f) {
    long d = f.deg();
    if (d < 1) throw domain_error("composition with a constant");
    if (s.c.empty()) {
        if (s.exact()) return LaurentTail<R>::zero_to(LAUR_EXACT);
        throw precision_error("truncation leaves no valid coefficients");
    }
    if (s.top != 1) throw domain_error("series must have top exponent 1");
    if (s.exact() && s.lo_stored() >= 0) {
        Pol<R> p;
        std::vector<R> cs(2, R(0));
        cs[1] = s.coeff(1);
        if (s.lo_stored() == 0) cs[0] = s.coeff(0);
        return LaurentTail<R>::from_poly(Pol<R>(cs).compose(f));
    }
    long base = s.exact() ? s.lo_stored() : s.valid;
    LaurentTail<R> out = s.compose_poly(f, d * (base - 1) + 1);
    if (out.c.empty() && !out.exact())
        throw precision_error("truncation leaves no valid coefficients");
    return out;
}

}  // namespace polydyn
