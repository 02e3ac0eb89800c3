#include "polydyn/ball.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace polydyn {

namespace {

constexpr mpfr_prec_t RAD_PREC = 64;

// fold the rounding error of `mid` (ternary value t from an RNDN op) into rad
void bump(mpfr_t rad, const mpfr_t mid, int t) {
    if (!mpfr_number_p(mid)) throw precision_error("non-finite midpoint");
    if (t == 0 || mpfr_zero_p(mid)) return;
    mpfr_t u;
    mpfr_init2(u, 32);
    mpfr_set_ui_2exp(u, 1, mpfr_get_exp(mid) - mpfr_get_prec(mid), MPFR_RNDU);
    mpfr_add(rad, rad, u, MPFR_RNDU);
    mpfr_clear(u);
}

struct Tmp {
    mpfr_t x;
    explicit Tmp(mpfr_prec_t p) { mpfr_init2(x, p); }
    ~Tmp() { mpfr_clear(x); }
    Tmp(const Tmp&) = delete;
    Tmp& operator=(const Tmp&) = delete;
    operator mpfr_ptr() { return x; }           // NOLINT implicit
    operator mpfr_srcptr() const { return x; }  // NOLINT implicit
    mpfr_ptr operator->() { return x; }
    mpfr_srcptr operator->() const { return x; }
};

}  // namespace

RBall::RBall(mpfr_prec_t prec) {
    mpfr_init2(mid, prec);
    mpfr_set_zero(mid, 1);
    mpfr_init2(rad, RAD_PREC);
    mpfr_set_zero(rad, 1);
}

RBall::RBall(const RBall& o) {
    mpfr_init2(mid, mpfr_get_prec(o.mid));
    mpfr_set(mid, o.mid, MPFR_RNDN);
    mpfr_init2(rad, RAD_PREC);
    mpfr_set(rad, o.rad, MPFR_RNDU);
}

RBall::RBall(RBall&& o) noexcept {
    mpfr_init2(mid, mpfr_get_prec(o.mid));
    mpfr_swap(mid, o.mid);
    mpfr_init2(rad, RAD_PREC);
    mpfr_swap(rad, o.rad);
}

RBall& RBall::operator=(const RBall& o) {
    if (this != &o) {
        mpfr_set_prec(mid, mpfr_get_prec(o.mid));
        mpfr_set(mid, o.mid, MPFR_RNDN);
        mpfr_set(rad, o.rad, MPFR_RNDU);
    }
    return *this;
}

RBall& RBall::operator=(RBall&& o) noexcept {
    if (this != &o) {
        mpfr_swap(mid, o.mid);
        mpfr_swap(rad, o.rad);
    }
    return *this;
}

RBall::~RBall() {
    mpfr_clear(mid);
    mpfr_clear(rad);
}

RBall RBall::from_rat(const Rat& q, mpfr_prec_t prec) {
    RBall r(prec);
    int t = mpfr_set_q(r.mid, q.get_mpq_t(), MPFR_RNDN);
    bump(r.rad, r.mid, t);
    return r;
}

RBall RBall::from_long(long v, mpfr_prec_t prec) {
    RBall r(prec);
    int t = mpfr_set_si(r.mid, v, MPFR_RNDN);
    bump(r.rad, r.mid, t);
    return r;
}

RBall RBall::from_field(const FieldElement& x, int embedding, mpfr_prec_t prec) {
    if (x.b == 0) return from_rat(x.a, prec);
    if (x.D < 0) throw domain_error("real embedding of an imaginary quadratic element");
    RBall s(prec);
    int t = mpfr_set_z(s.mid, x.D.get_mpz_t(), MPFR_RNDN);
    bump(s.rad, s.mid, t);
    s = s.sqrt();
    RBall b = from_rat(embedding == 0 ? x.b : -x.b, prec);
    return from_rat(x.a, prec) + b * s;
}

RBall RBall::pi(mpfr_prec_t prec) {
    RBall r(prec);
    int t = mpfr_const_pi(r.mid, MPFR_RNDN);
    bump(r.rad, r.mid, t);
    return r;
}

RBall RBall::from_interval(const mpfr_t lo, const mpfr_t hi, mpfr_prec_t prec) {
    if (!mpfr_number_p(lo) || !mpfr_number_p(hi)) throw precision_error("non-finite interval");
    if (mpfr_cmp(lo, hi) > 0) throw domain_error("inverted interval");
    RBall r(prec);
    Tmp t(prec);
    mpfr_add(t, lo, hi, MPFR_RNDN);
    mpfr_div_2si(r.mid, t, 1, MPFR_RNDN);
    Tmp d1(RAD_PREC), d2(RAD_PREC);
    mpfr_sub(d1, hi, r.mid, MPFR_RNDU);
    mpfr_sub(d2, r.mid, lo, MPFR_RNDU);
    mpfr_max(r.rad, d1, d2, MPFR_RNDU);
    if (mpfr_sgn(r.rad) < 0) mpfr_set_zero(r.rad, 1);
    return r;
}

RBall RBall::hull(const RBall& a, const RBall& b) {
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    Tmp alo(p), ahi(p), blo(p), bhi(p);
    a.get_lower(alo);
    a.get_upper(ahi);
    b.get_lower(blo);
    b.get_upper(bhi);
    mpfr_min(alo, alo, blo, MPFR_RNDD);
    mpfr_max(ahi, ahi, bhi, MPFR_RNDU);
    return from_interval(alo, ahi, p);
}

RBall RBall::operator-() const {
    RBall r(*this);
    mpfr_neg(r.mid, r.mid, MPFR_RNDN);
    return r;
}

RBall RBall::operator+(const RBall& o) const {
    RBall r(std::max(prec(), o.prec()));
    int t = mpfr_add(r.mid, mid, o.mid, MPFR_RNDN);
    mpfr_add(r.rad, rad, o.rad, MPFR_RNDU);
    bump(r.rad, r.mid, t);
    return r;
}

RBall RBall::operator-(const RBall& o) const {
    RBall r(std::max(prec(), o.prec()));
    int t = mpfr_sub(r.mid, mid, o.mid, MPFR_RNDN);
    mpfr_add(r.rad, rad, o.rad, MPFR_RNDU);
    bump(r.rad, r.mid, t);
    return r;
}

RBall RBall::operator*(const RBall& o) const {
    RBall r(std::max(prec(), o.prec()));
    int t = mpfr_mul(r.mid, mid, o.mid, MPFR_RNDN);
    Tmp am(RAD_PREC), bm(RAD_PREC), acc(RAD_PREC), term(RAD_PREC);
    mpfr_abs(am, mid, MPFR_RNDU);
    mpfr_abs(bm, o.mid, MPFR_RNDU);
    mpfr_mul(acc, am, o.rad, MPFR_RNDU);
    mpfr_mul(term, bm, rad, MPFR_RNDU);
    mpfr_add(acc, acc, term, MPFR_RNDU);
    mpfr_mul(term, rad, o.rad, MPFR_RNDU);
    mpfr_add(acc, acc, term, MPFR_RNDU);
    mpfr_set(r.rad, acc, MPFR_RNDU);
    bump(r.rad, r.mid, t);
    return r;
}

RBall RBall::operator/(const RBall& o) const {
    if (o.contains_zero()) throw precision_error("division by a ball containing 0");
    RBall r(std::max(prec(), o.prec()));
    int t = mpfr_div(r.mid, mid, o.mid, MPFR_RNDN);
    Tmp am(RAD_PREC), bm(RAD_PREC), num(RAD_PREC), den(RAD_PREC), tm(RAD_PREC);
    mpfr_abs(am, mid, MPFR_RNDU);
    mpfr_abs(bm, o.mid, MPFR_RNDU);
    mpfr_mul(num, rad, bm, MPFR_RNDU);
    mpfr_mul(tm, am, o.rad, MPFR_RNDU);
    mpfr_add(num, num, tm, MPFR_RNDU);
    mpfr_abs(bm, o.mid, MPFR_RNDD);
    mpfr_sub(tm, bm, o.rad, MPFR_RNDD);
    mpfr_mul(den, bm, tm, MPFR_RNDD);
    mpfr_div(tm, num, den, MPFR_RNDU);
    mpfr_set(r.rad, tm, MPFR_RNDU);
    bump(r.rad, r.mid, t);
    return r;
}

RBall RBall::abs() const {
    if (!contains_zero()) {
        RBall r(*this);
        mpfr_abs(r.mid, r.mid, MPFR_RNDN);
        return r;
    }
    Tmp lo(prec()), hi(prec()), z(prec());
    get_lower(lo);
    get_upper(hi);
    mpfr_abs(lo, lo, MPFR_RNDU);
    mpfr_max(hi, hi, lo, MPFR_RNDU);
    mpfr_set_zero(z, 1);
    return from_interval(z, hi, prec());
}

namespace {

template <typename F>
RBall monotone(const RBall& x, F f, bool clamp_lo_zero, bool need_positive) {
    mpfr_prec_t p = x.prec();
    Tmp lo(p), hi(p), flo(p), fhi(p);
    x.get_lower(lo);
    x.get_upper(hi);
    if (clamp_lo_zero && mpfr_sgn(lo) < 0) {
        if (mpfr_sgn(hi) < 0) throw domain_error("negative input to an even root");
        mpfr_set_zero(lo, 1);
    }
    if (need_positive && mpfr_sgn(lo) <= 0)
        throw precision_error("log of a ball not strictly positive");
    f(flo, lo, MPFR_RNDD);
    f(fhi, hi, MPFR_RNDU);
    return RBall::from_interval(flo, fhi, p);
}

}  // namespace

RBall RBall::sqrt() const {
    return monotone(*this, [](mpfr_ptr o, mpfr_srcptr i, mpfr_rnd_t r) { mpfr_sqrt(o, i, r); },
                    true, false);
}

RBall RBall::log() const {
    return monotone(*this, [](mpfr_ptr o, mpfr_srcptr i, mpfr_rnd_t r) { mpfr_log(o, i, r); },
                    false, true);
}

RBall RBall::exp() const {
    return monotone(*this, [](mpfr_ptr o, mpfr_srcptr i, mpfr_rnd_t r) { mpfr_exp(o, i, r); },
                    false, false);
}

RBall RBall::rootn(unsigned long k) const {
    if (k == 0) throw domain_error("0th root");
    return monotone(
        *this, [k](mpfr_ptr o, mpfr_srcptr i, mpfr_rnd_t r) { mpfr_rootn_ui(o, i, k, r); },
        true, false);
}

RBall RBall::sin() const {
    RBall r(prec());
    int t = mpfr_sin(r.mid, mid, MPFR_RNDN);
    mpfr_set(r.rad, rad, MPFR_RNDU);
    bump(r.rad, r.mid, t);
    if (mpfr_cmp_ui(r.rad, 1) > 0) {
        mpfr_set_zero(r.mid, 1);
        mpfr_set_ui(r.rad, 1, MPFR_RNDU);
    }
    return r;
}

RBall RBall::cos() const {
    RBall r(prec());
    int t = mpfr_cos(r.mid, mid, MPFR_RNDN);
    mpfr_set(r.rad, rad, MPFR_RNDU);
    bump(r.rad, r.mid, t);
    if (mpfr_cmp_ui(r.rad, 1) > 0) {
        mpfr_set_zero(r.mid, 1);
        mpfr_set_ui(r.rad, 1, MPFR_RNDU);
    }
    return r;
}

RBall RBall::pow_si(long e) const {
    if (e < 0) return from_long(1, prec()) / pow_si(-e);
    RBall acc = from_long(1, prec());
    RBall base = *this;
    unsigned long n = static_cast<unsigned long>(e);
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

RBall RBall::mul_2si(long e) const {
    RBall r(*this);
    mpfr_mul_2si(r.mid, r.mid, e, MPFR_RNDN);
    mpfr_mul_2si(r.rad, r.rad, e, MPFR_RNDU);
    return r;
}

RBall RBall::atan2(const RBall& y, const RBall& x) {
    mpfr_prec_t p = std::max(x.prec(), y.prec());
    // distance from origin to the box, as a lower bound for |z|
    Tmp dx(RAD_PREC), dy(RAD_PREC), L(RAD_PREC), tm(RAD_PREC);
    mpfr_abs(dx, x.mid, MPFR_RNDD);
    mpfr_sub(dx, dx, x.rad, MPFR_RNDD);
    if (mpfr_sgn(dx) < 0) mpfr_set_zero(dx, 1);
    mpfr_abs(dy, y.mid, MPFR_RNDD);
    mpfr_sub(dy, dy, y.rad, MPFR_RNDD);
    if (mpfr_sgn(dy) < 0) mpfr_set_zero(dy, 1);
    mpfr_sqr(dx, dx, MPFR_RNDD);
    mpfr_sqr(dy, dy, MPFR_RNDD);
    mpfr_add(L, dx, dy, MPFR_RNDD);
    mpfr_sqrt(L, L, MPFR_RNDD);
    if (mpfr_sgn(L) <= 0) throw precision_error("argument of a ball containing 0");
    // reject boxes meeting the branch cut {x <= 0, y = 0}
    Tmp xlo(p);
    x.get_lower(xlo);
    if (mpfr_sgn(xlo) < 0 && y.contains_zero())
        throw precision_error("argument ball meets the branch cut");
    RBall r(p);
    int t = mpfr_atan2(r.mid, y.mid, x.mid, MPFR_RNDN);
    mpfr_add(tm, x.rad, y.rad, MPFR_RNDU);
    mpfr_div(tm, tm, L, MPFR_RNDU);
    mpfr_set(r.rad, tm, MPFR_RNDU);
    bump(r.rad, r.mid, t);
    return r;
}

bool RBall::contains_zero() const {
    return mpfr_cmpabs(mid, rad) <= 0;
}

bool RBall::is_positive() const {
    if (mpfr_sgn(mid) <= 0) return false;
    Tmp lo(prec());
    get_lower(lo);
    return mpfr_sgn(lo) > 0;
}

bool RBall::is_negative() const {
    if (mpfr_sgn(mid) >= 0) return false;
    Tmp hi(prec());
    get_upper(hi);
    return mpfr_sgn(hi) < 0;
}

bool RBall::definitely_lt(const RBall& o) const {
    Tmp hi(prec()), olo(o.prec());
    get_upper(hi);
    o.get_lower(olo);
    return mpfr_cmp(hi, olo) < 0;
}

bool RBall::definitely_lt(const Rat& q) const {
    Tmp hi(prec());
    get_upper(hi);
    return mpfr_cmp_q(hi, q.get_mpq_t()) < 0;
}

bool RBall::definitely_gt(const Rat& q) const {
    Tmp lo(prec());
    get_lower(lo);
    return mpfr_cmp_q(lo, q.get_mpq_t()) > 0;
}

bool RBall::contains(const Rat& q) const {
    Tmp d(prec());
    mpfr_sub_q(d, mid, q.get_mpq_t(), MPFR_RNDA);
    return mpfr_cmpabs(d, rad) <= 0;
}

bool RBall::contains_ball(const RBall& o) const {
    Tmp d(std::max(prec(), o.prec()));
    mpfr_sub(d, mid, o.mid, MPFR_RNDA);
    mpfr_abs(d, d, MPFR_RNDU);
    mpfr_add(d, d, o.rad, MPFR_RNDU);
    return mpfr_cmp(d, rad) <= 0;
}

void RBall::get_lower(mpfr_t out) const {
    mpfr_sub(out, mid, rad, MPFR_RNDD);
}

void RBall::get_upper(mpfr_t out) const {
    mpfr_add(out, mid, rad, MPFR_RNDU);
}

double RBall::mid_d() const {
    return mpfr_get_d(mid, MPFR_RNDN);
}

double RBall::rad_ub_d() const {
    double md = mid_d();
    Tmp d(prec());
    mpfr_set_d(d, md, MPFR_RNDN);
    mpfr_sub(d, mid, d, MPFR_RNDA);
    mpfr_abs(d, d, MPFR_RNDU);
    mpfr_add(d, d, rad, MPFR_RNDU);
    return mpfr_get_d(d, MPFR_RNDU);
}

double RBall::lower_d() const {
    Tmp lo(prec());
    get_lower(lo);
    return mpfr_get_d(lo, MPFR_RNDD);
}

double RBall::upper_d() const {
    Tmp hi(prec());
    get_upper(hi);
    return mpfr_get_d(hi, MPFR_RNDU);
}

double RBall::width_ub_d() const {
    Tmp w(RAD_PREC);
    mpfr_mul_2si(w, rad, 1, MPFR_RNDU);
    return mpfr_get_d(w, MPFR_RNDU);
}

std::string RBall::str(std::size_t digits) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "[%.*Rg +/- %.3Rg]", static_cast<int>(digits), mid, rad);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

CBall CBall::from_rat(const Rat& q, mpfr_prec_t prec) {
    return CBall(RBall::from_rat(q, prec), RBall(prec));
}

CBall CBall::from_field(const FieldElement& x, int embedding, mpfr_prec_t prec) {
    if (x.b == 0 || x.D > 0) return CBall(RBall::from_field(x, embedding, prec), RBall(prec));
    RBall s(prec);
    Int aD = ::abs(x.D);
    int t = mpfr_set_z(s.mid, aD.get_mpz_t(), MPFR_RNDN);
    bump(s.rad, s.mid, t);
    s = s.sqrt();
    RBall b = RBall::from_rat(embedding == 0 ? x.b : -x.b, prec);
    return CBall(RBall::from_rat(x.a, prec), b * s);
}

CBall CBall::operator-() const {
    return CBall(-re, -im);
}

CBall CBall::operator+(const CBall& o) const {
    return CBall(re + o.re, im + o.im);
}

CBall CBall::operator-(const CBall& o) const {
    return CBall(re - o.re, im - o.im);
}

CBall CBall::operator*(const CBall& o) const {
    return CBall(re * o.re - im * o.im, re * o.im + im * o.re);
}

CBall CBall::operator/(const CBall& o) const {
    RBall n = o.abs2();
    if (!n.is_positive()) throw precision_error("complex division by a ball containing 0");
    CBall num = *this * o.conj();
    return CBall(num.re / n, num.im / n);
}

RBall CBall::abs2() const {
    return re * re + im * im;
}

RBall CBall::abs() const {
    return abs2().sqrt();
}

RBall CBall::arg() const {
    return RBall::atan2(im, re);
}

CBall CBall::pow_ui(unsigned long e) const {
    CBall acc = from_rat(Rat(1), re.prec());
    CBall base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

double CBall::rad_ub_d() const {
    return re.rad_ub_d() + im.rad_ub_d();
}

std::string CBall::str(std::size_t digits) const {
    return re.str(digits) + " + " + im.str(digits) + "*i";
}

}  // namespace polydyn
