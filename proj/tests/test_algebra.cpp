#include "doctest.h"
#include "polydyn/ball.hpp"
#include "polydyn/field.hpp"
#include "polydyn/places.hpp"
#include "polydyn/qring.hpp"
#include "polydyn/zutil.hpp"

using namespace polydyn;

namespace {
Rat mkrat(long n, long d) {
    Rat q(n, d);
    q.canonicalize();
    return q;
}
}  // namespace

TEST_CASE("factorization") {
    auto f = factor(Int(360));
    CHECK(f == std::map<Int, int>{{Int(2), 3}, {Int(3), 2}, {Int(5), 1}});
    // beyond the trial-division bound
    Int n = Int(1000003) * Int(1000033);
    auto g = factor(n);
    CHECK(g.size() == 2);
    CHECK(g.at(Int(1000003)) == 1);
    CHECK(g.at(Int(1000033)) == 1);
    CHECK(is_probable_prime(Int("2305843009213693951")));
    CHECK_FALSE(is_probable_prime(Int(561)));
}

TEST_CASE("exact roots") {
    CHECK(*exact_root(Int(8), 3) == 2);
    CHECK(*exact_root(Int(-27), 3) == -3);
    CHECK(*exact_root(Int(16), 4) == 2);
    CHECK_FALSE(exact_root(Int(-16), 4).has_value());
    CHECK_FALSE(exact_root(Int(10), 2).has_value());
    CHECK(*exact_root(Rat(4, 9), 2) == Rat(2, 3));
    CHECK(*exact_root(Rat(-8, 27), 3) == Rat(-2, 3));
}

TEST_CASE("valuations and parsing") {
    CHECK(valuation(Int(48), Int(2)) == 4);
    CHECK(valuation(Rat(5, 8), Int(2)) == -3);
    CHECK(valuation(Rat(9, 5), Int(3)) == 2);
    CHECK(parse_rat("3/4") == Rat(3, 4));
    CHECK(parse_rat("-5") == Rat(-5));
    CHECK(parse_rat("+7/2") == Rat(7, 2));
    CHECK_THROWS_AS(parse_rat("abc"), parse_error);
    CHECK_THROWS_AS(parse_rat("1/0"), parse_error);
    CHECK(rat_str(mkrat(-22, 8)) == "-11/4");
}

TEST_CASE("power divisors and reconstruction") {
    auto [s, r] = largest_power_divisor(Rat(64), 6);
    CHECK(s == 6);
    CHECK(r == 2);
    auto [s2, r2] = largest_power_divisor(Rat(4, 9), 4);
    CHECK(s2 == 2);
    CHECK(r2 == Rat(2, 3));
    auto [s3, r3] = largest_power_divisor(Rat(5), 4);
    CHECK(s3 == 1);
    CHECK(r3 == 5);

    Int M(1000003);
    Int inv7;
    Int seven(7);
    mpz_invert(inv7.get_mpz_t(), seven.get_mpz_t(), M.get_mpz_t());
    Int r22 = Int(22) * inv7 % M;
    CHECK(*rational_reconstruct(r22, M) == Rat(22, 7));
    Int rneg = (Int(-5) * inv7 % M + M) % M;
    CHECK(*rational_reconstruct(rneg, M) == Rat(-5, 7));
}

TEST_CASE("simplest rational in an interval") {
    CHECK(simplest_rational_in(Rat(42, 100), Rat(45, 100)) == Rat(3, 7));
    CHECK(simplest_rational_in(Rat(-45, 100), Rat(-42, 100)) == Rat(-3, 7));
    CHECK(simplest_rational_in(Rat(-1, 3), Rat(1, 5)) == 0);
    CHECK(simplest_rational_in(Rat(2, 3), Rat(2, 3)) == Rat(2, 3));
    CHECK(simplest_rational_in(Rat(31, 10), Rat(32, 10)) == Rat(16, 5));

    // brute-force minimality on random intervals
    SplitMix64 rng(7);
    for (int t = 0; t < 60; t++) {
        long n1 = static_cast<long>(rng.below(2000)) - 1000;
        long d1 = 1 + static_cast<long>(rng.below(60));
        long n2 = static_cast<long>(rng.below(2000)) - 1000;
        long d2 = 1 + static_cast<long>(rng.below(60));
        Rat lo = mkrat(n1, d1), hi = mkrat(n2, d2);
        if (lo > hi) std::swap(lo, hi);
        Rat got = simplest_rational_in(lo, hi);
        REQUIRE(got >= lo);
        REQUIRE(got <= hi);
        Int qden(got.get_den());
        for (Int q = 1; q < qden; q++) {
            // no fraction with denominator q lies in [lo, hi]
            Int pmin;
            Int num = Int(lo.get_num()) * q;
            Int den(lo.get_den());
            mpz_cdiv_q(pmin.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            Rat cand(pmin, q);
            cand.canonicalize();
            bool in_range = cand >= lo && cand <= hi;
            REQUIRE_FALSE(in_range);
        }
    }
}

TEST_CASE("rational polynomial roots") {
    // 2x^4 - x^3 - 4x^2 - x - 6 = (x-2)(2x+3)(x^2+1)
    std::vector<Rat> cs{Rat(-6), Rat(-1), Rat(-4), Rat(-1), Rat(2)};
    auto roots = rational_poly_roots(cs);
    CHECK(roots == std::vector<Rat>{Rat(-3, 2), Rat(2)});
    std::vector<Rat> cube{Rat(0), Rat(0), Rat(-1), Rat(1)};
    CHECK(rational_poly_roots(cube) == std::vector<Rat>{Rat(0), Rat(1)});
}

TEST_CASE("field elements") {
    FieldElement x = FieldElement::parse("3-2*sqrt(2)");
    CHECK(x.a == 3);
    CHECK(x.b == -2);
    CHECK(x.D == 2);
    CHECK(x.str() == "3-2*sqrt(2)");
    CHECK(FieldElement::parse("sqrt(-1)").str() == "sqrt(-1)");
    CHECK(FieldElement::parse("-sqrt(3)").b == -1);
    FieldElement y = FieldElement::parse("1/2+3/2*sqrt(5)");
    CHECK(y.a == Rat(1, 2));
    CHECK(y.b == Rat(3, 2));
    CHECK(FieldElement::parse("7/3").is_rational());

    FieldElement u = FieldElement::parse("3+2*sqrt(2)");
    CHECK((x * u) == FieldElement(1));
    CHECK(x.norm() == 1);
    CHECK(galois_conjugate(x) == u);
    FieldElement one_plus = FieldElement::parse("1+sqrt(2)");
    CHECK(one_plus.inverse() == FieldElement::parse("-1+sqrt(2)"));
    CHECK(one_plus.pow(3) == FieldElement::parse("7+5*sqrt(2)"));
    CHECK((one_plus - one_plus).is_zero());
    CHECK_THROWS_AS(FieldElement::parse("sqrt(2)") + FieldElement::parse("sqrt(3)"),
                    domain_error);
}

TEST_CASE("field roots and signs") {
    FieldElement u = FieldElement::parse("3+2*sqrt(2)");
    CHECK(*u.exact_kth_root(2) == FieldElement::parse("1+sqrt(2)"));
    CHECK(*FieldElement::parse("17+12*sqrt(2)").exact_kth_root(4) ==
          FieldElement::parse("1+sqrt(2)"));
    CHECK(*FieldElement::parse("7+5*sqrt(2)").exact_kth_root(3) ==
          FieldElement::parse("1+sqrt(2)"));
    CHECK_FALSE(FieldElement::parse("1+sqrt(2)").exact_kth_root(2).has_value());
    CHECK(*FieldElement(Rat(4)).exact_kth_root(2) == FieldElement(2));

    CHECK(FieldElement::parse("3-2*sqrt(2)").sign_at(0) == 1);
    CHECK(FieldElement::parse("-1+sqrt(2)").sign_at(0) == 1);
    CHECK(FieldElement::parse("-1+sqrt(2)").sign_at(1) == -1);
    CHECK(FieldElement::parse("1-sqrt(2)").sign_at(0) == -1);
}

TEST_CASE("real balls") {
    RBall third = RBall::from_rat(Rat(1, 3), 128);
    CHECK(third.contains(Rat(1, 3)));
    CHECK(third.width_ub_d() < 1e-30);
    RBall two = RBall::from_long(2, 128);
    CHECK((two.sqrt() * two.sqrt()).contains(Rat(2)));
    RBall x = RBall::from_rat(Rat(1, 16), 128);
    RBall lg = x.log() + RBall::from_long(2, 128).log() * RBall::from_long(4, 128);
    CHECK(lg.contains(Rat(0)));
    CHECK(RBall::atan2(RBall::from_long(1, 128), RBall::from_long(1, 128))
              .contains_ball(RBall::pi(128).mul_2si(-2)));
    RBall c = RBall::from_long(0, 128).cos();
    CHECK(c.contains(Rat(1)));
    CHECK(RBall::from_rat(Rat(-3, 2), 64).abs().contains(Rat(3, 2)));
    CHECK(RBall::from_rat(Rat(5, 2), 64).pow_si(-2).contains(Rat(4, 25)));

    RBall wide = RBall::hull(RBall::from_long(1, 64), RBall::from_long(3, 64));
    CHECK(wide.contains(Rat(2)));
    CHECK(wide.contains_ball(RBall::from_rat(Rat(5, 2), 64)));
    CHECK_FALSE(wide.contains_ball(RBall::from_rat(Rat(7, 2), 64)));
    CHECK(RBall::from_long(1, 64).definitely_lt(RBall::from_long(2, 64)));
    CHECK_THROWS_AS(wide / (wide - wide), precision_error);
}

TEST_CASE("complex balls") {
    CBall i(RBall::from_long(0, 128), RBall::from_long(1, 128));
    CBall m = i * i;
    CHECK(m.re.contains(Rat(-1)));
    CHECK(m.im.contains(Rat(0)));
    CBall z = CBall::from_rat(Rat(3), 128) + i * CBall::from_rat(Rat(4), 128);
    CHECK(z.abs().contains(Rat(5)));
    CHECK((z / z).re.contains(Rat(1)));
    CBall w = CBall::from_field(FieldElement::parse("1+sqrt(-3)"), 0, 128);
    CHECK(w.abs2().contains(Rat(4)));
    CHECK(z.pow_ui(2).re.contains(Rat(-7)));
    CHECK(z.pow_ui(2).im.contains(Rat(24)));
    // arg of 1+i
    CHECK(CBall(RBall::from_long(1, 128), RBall::from_long(1, 128))
              .arg()
              .contains_ball(RBall::pi(128).mul_2si(-2)));
}

TEST_CASE("places over Q") {
    Place v2 = Place::parse("2", Int(1));
    LogAbs l = abs_value(FieldElement(Rat(1, 16)), v2);
    CHECK(l.finite);
    CHECK(l.c == 4);
    CHECK(l.p == 2);
    CHECK(abs_value(FieldElement(7), Place::parse("3", Int(1))).c == 0);
    CHECK_THROWS_AS(abs_value(FieldElement(0), v2), domain_error);

    auto ps = relevant_places({FieldElement(1), FieldElement(0), FieldElement(1)},
                              FieldElement(1));
    REQUIRE(ps.size() == 1);
    CHECK(ps[0].archimedean());
    auto ps2 = relevant_places({FieldElement(0), FieldElement(Rat(1, 2)), FieldElement(1)},
                               FieldElement(Rat(1, 16)));
    REQUIRE(ps2.size() == 2);
    CHECK(ps2[1].p == 2);
    auto ps3 = relevant_places({FieldElement(Rat(1, 3)), FieldElement(0), FieldElement(1)},
                               FieldElement(Rat(1, 2)));
    REQUIRE(ps3.size() == 3);
}

TEST_CASE("places over quadratic fields") {
    Int D(2);
    CHECK(places_above(Int(7), D).size() == 2);   // split
    CHECK(places_above(Int(3), D).size() == 1);   // inert
    CHECK(places_above(Int(3), D)[0].nv() == 2);
    CHECK(places_above(Int(2), D)[0].kind == PlaceKind::Ramified);

    FieldElement s2 = FieldElement::parse("sqrt(2)");
    Place ram = places_above(Int(2), D)[0];
    CHECK(place_valuation(s2, ram) == Rat(1, 2));
    CHECK(place_valuation(FieldElement::parse("1+sqrt(2)"), ram) == 0);

    // split valuations at 3 over Q(sqrt(7)): val0 + val1 = val_3(norm)
    Int D7(7);
    auto above3 = places_above(Int(3), D7);
    REQUIRE(above3.size() == 2);
    FieldElement x = FieldElement::parse("1+sqrt(7)");
    Rat v0 = place_valuation(x, above3[0]);
    Rat v1 = place_valuation(x, above3[1]);
    CHECK(v0 + v1 == Rat(valuation(x.norm(), Int(3))));
    CHECK(((v0 == 0 && v1 == 1) || (v0 == 1 && v1 == 0)));
}

TEST_CASE("archimedean abs examples") {
    // log|3 - 2 sqrt(2)| = log(0.17157...) = -1.76274717...
    Place r0 = arch_places(Int(2))[0];
    RBall l = abs_value(FieldElement::parse("3-2*sqrt(2)"), r0, 128).arch;
    CHECK(l.definitely_lt(Rat(-17627, 10000)));
    CHECK(l.definitely_gt(Rat(-17628, 10000)));
    // |1+sqrt(-3)| = 2
    Place cinf = arch_places(Int(-3))[0];
    RBall lc = abs_value(FieldElement::parse("1+sqrt(-3)"), cinf, 128).arch;
    RBall log2 = RBall::from_long(2, 128).log();
    CHECK(lc.contains_ball(log2));
}

TEST_CASE("product formula") {
    SplitMix64 rng(11);
    for (int t = 0; t < 100; t++) {
        long n = static_cast<long>(rng.below(4000)) - 2000;
        long d = 1 + static_cast<long>(rng.below(999));
        if (n == 0) n = 17;
        Rat x = mkrat(n, d);
        // finite places: product of p^{-val} must equal 1/|x|
        Rat prod(1);
        for (auto& [p, e] : factor(Int(x.get_num()) * Int(x.get_den()))) {
            (void)e;
            long v = valuation(x, p);
            Rat pk(1);
            for (long i = 0; i < std::labs(v); i++) pk *= Rat(p);
            prod *= (v > 0) ? Rat(1) / pk : pk;
        }
        Rat ax = x > 0 ? x : Rat(-x);
        CHECK(prod * ax == 1);
    }
    // over Q(sqrt(2)): sum of n_v log|x|_v = 0 within radii
    SplitMix64 rng2(12);
    for (int t = 0; t < 100; t++) {
        Rat a = mkrat(static_cast<long>(rng2.below(40)) - 20, 1 + static_cast<long>(rng2.below(9)));
        Rat b = mkrat(static_cast<long>(rng2.below(40)) - 20, 1 + static_cast<long>(rng2.below(9)));
        if (a == 0 && b == 0) a = 1;
        FieldElement x(a, b, Int(2));
        if (x.is_zero()) continue;
        Rat nm = x.norm();
        if (nm == 0) continue;
        std::map<Int, Rat> finite;
        for (auto& [p, e] : factor(Int(nm.get_num()) * Int(nm.get_den()))) {
            (void)e;
            for (const Place& v : places_above(p, Int(2)))
                finite[p] += Rat(v.nv()) * abs_value(x, v).c;
        }
        RBall arch(160);
        for (const Place& v : arch_places(Int(2))) {
            LogAbs l = abs_value(x, v, 160);
            arch = arch + l.arch * RBall::from_long(v.nv(), 160);
        }
        // finite part must cancel the norm's rational valuations exactly
        for (auto& [p, c] : finite) CHECK(c == Rat(-valuation(nm, p)));
        RBall lognorm = RBall::from_rat(nm, 160).abs().log();
        CHECK((arch - lognorm).contains(Rat(0)));
    }
}

TEST_CASE("place serialization") {
    CHECK(Place::parse("inf:0", Int(1)).archimedean());
    CHECK(Place::parse("5", Int(1)).p == 5);
    Place s = Place::parse("7:split:1", Int(2));
    CHECK(s.kind == PlaceKind::Split);
    CHECK(s.index == 1);
    CHECK(s.str() == "7:split:1");
    CHECK(Place::parse("3:inert", Int(2)).nv() == 2);
    CHECK(Place::parse("2:ram", Int(2)).str() == "2:ram");
    CHECK_THROWS_AS(Place::parse("7:inert", Int(2)), parse_error);
}

TEST_CASE("quotient rings") {
    auto ring = std::make_shared<const QRing>(
        Pol<FieldElement>{FieldElement(-2), FieldElement(0), FieldElement(1)}, Int(1));
    QRElem t = QRElem::generator(ring);
    CHECK((t * t) == QRElem(FieldElement(2)));
    QRElem u = t + QRElem(1);
    CHECK(u.inverse() * u == QRElem(1));
    CHECK(u.inverse() == t - QRElem(1));
    CHECK(u.pow(3) == t * QRElem(5) + QRElem(7));

    auto cubic = std::make_shared<const QRing>(
        Pol<FieldElement>{FieldElement(-2), FieldElement(0), FieldElement(0), FieldElement(1)},
        Int(1));
    QRElem s = QRElem::generator(cubic);
    CHECK(s.inverse() * s == QRElem(1));
    CHECK(s.pow(3) == QRElem(2));
    CHECK_THROWS_AS(t + s, domain_error);
}
