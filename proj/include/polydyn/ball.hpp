#pragma once

#include <mpfr.h>

#include <string>

#include "polydyn/field.hpp"
#include "polydyn/zutil.hpp"

namespace polydyn {

// Midpoint-radius interval over MPFR.  Every operation returns a ball
// guaranteed to contain the exact image of the inputs; rounding errors
// are folded into the radius.
class RBall {
  public:
    mpfr_t mid;
    mpfr_t rad;

    explicit RBall(mpfr_prec_t prec = 128);
    RBall(const RBall& o);
    RBall(RBall&& o) noexcept;
    RBall& operator=(const RBall& o);
    RBall& operator=(RBall&& o) noexcept;
    ~RBall();

    mpfr_prec_t prec() const { return mpfr_get_prec(mid); }

    static RBall from_rat(const Rat& q, mpfr_prec_t prec);
    static RBall from_long(long v, mpfr_prec_t prec);
    // real embedding of a + b*sqrt(D); embedding 1 sends sqrt(D) to -sqrt(D)
    static RBall from_field(const FieldElement& x, int embedding, mpfr_prec_t prec);
    static RBall pi(mpfr_prec_t prec);
    static RBall from_interval(const mpfr_t lo, const mpfr_t hi, mpfr_prec_t prec);
    // smallest ball containing both
    static RBall hull(const RBall& a, const RBall& b);

    RBall operator-() const;
    RBall operator+(const RBall& o) const;
    RBall operator-(const RBall& o) const;
    RBall operator*(const RBall& o) const;
    RBall operator/(const RBall& o) const;  // throws precision_error if o may be 0

    RBall abs() const;
    RBall sqrt() const;   // input clamped to [0, inf)
    RBall log() const;    // throws precision_error unless strictly positive
    RBall exp() const;
    RBall rootn(unsigned long k) const;  // principal, input clamped to [0, inf)
    RBall sin() const;
    RBall cos() const;
    RBall pow_si(long e) const;
    RBall mul_2si(long e) const;
    static RBall atan2(const RBall& y, const RBall& x);

    bool contains_zero() const;
    bool is_positive() const;  // certainly > 0
    bool is_negative() const;
    bool definitely_lt(const RBall& o) const;
    bool definitely_gt(const RBall& o) const { return o.definitely_lt(*this); }
    bool definitely_lt(const Rat& q) const;
    bool definitely_gt(const Rat& q) const;
    bool contains(const Rat& q) const;
    // certified enclosure: every point of o lies in *this
    bool contains_ball(const RBall& o) const;

    void get_lower(mpfr_t out) const;  // RNDD
    void get_upper(mpfr_t out) const;  // RNDU
    double mid_d() const;
    double rad_ub_d() const;
    double lower_d() const;
    double upper_d() const;
    double width_ub_d() const;

    std::string str(std::size_t digits = 17) const;
};

struct CBall {
    RBall re, im;

    explicit CBall(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
    CBall(RBall r, RBall i) : re(std::move(r)), im(std::move(i)) {}

    static CBall from_rat(const Rat& q, mpfr_prec_t prec);
    // complex embedding of a + b*sqrt(D) for D < 0 (upper half-plane image);
    // for D > 0 this is the real embedding with zero imaginary part
    static CBall from_field(const FieldElement& x, int embedding, mpfr_prec_t prec);

    CBall operator-() const;
    CBall operator+(const CBall& o) const;
    CBall operator-(const CBall& o) const;
    CBall operator*(const CBall& o) const;
    CBall operator/(const CBall& o) const;
    CBall conj() const { return CBall(re, -im); }

    RBall abs2() const;  // |z|^2
    RBall abs() const;
    RBall arg() const;  // throws precision_error near the branch cut or 0
    CBall pow_ui(unsigned long e) const;

    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
    bool is_nonzero() const { return !contains_zero(); }
    double rad_ub_d() const;

    std::string str(std::size_t digits = 17) const;
};

}  // namespace polydyn
