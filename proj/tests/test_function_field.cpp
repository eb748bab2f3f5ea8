#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>

#include "galois/function_field.hpp"
#include "galois/torus.hpp"
#include "test_support.hpp"

using namespace galois;

namespace {

CurveFunction random_function(testing::Gen& gen, const RatPoly& s) {
    return {gen.ratfunc(2), gen.ratfunc(2), s};
}

// Numeric fiber count of f = t0: roots of (t0 D - A)^2 - B^2 s located by a
// companion matrix, validated on the torus by Newton-inverting wp, then
// counted. Independent route against the pole-divisor degree.
int numeric_fiber_count(const EllipticCurveModel& curve, const CurveFunction& f, double t0) {
    RatPoly ad = f.a.den(), bd = f.b.den();
    RatPoly g = gcd(ad, bd);
    RatPoly d = RatPoly::divmod(ad * bd, g).first;
    RatPoly a_num = f.a.num() * RatPoly::divmod(d, ad).first;
    RatPoly b_num = f.b.num() * RatPoly::divmod(d, bd).first;

    // (t0 d - a)^2 - b^2 s as a double-coefficient polynomial
    auto dbl = [](const RatPoly& p) {
        std::vector<double> c;
        for (int k = 0; k <= std::max(p.degree(), 0); ++k) c.push_back(to_double(p.coeff(k)));
        return c;
    };
    RatPoly t0d_minus_a = RatPoly::zero();
    {
        // t0 as a rational approximation good enough for counting
        Rational t0r = *rationalize(t0, 1ull << 40, 1e-12);
        t0d_minus_a = t0r * d - a_num;
    }
    bool pure_x = b_num.is_zero();
    RatPoly poly = pure_x
                       ? t0d_minus_a
                       : t0d_minus_a * t0d_minus_a - b_num * b_num * curve.weierstrass_cubic();
    auto c = dbl(poly);
    while (c.size() > 1 && std::fabs(c.back()) < 1e-13) c.pop_back();
    int deg = static_cast<int>(c.size()) - 1;
    if (deg <= 0) return 0;
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(deg, deg);
    for (int i = 0; i + 1 < deg; ++i) comp(i + 1, i) = 1;
    for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -c[static_cast<size_t>(i)] / c.back();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp);

    CurveTorusBridge bridge = make_bridge(curve);
    int count = 0;
    std::vector<Complex> seen;
    for (int i = 0; i < deg; ++i) {
        Complex x0 = es.eigenvalues()(i);
        // y from the fiber equation; B(x0) must not vanish
        Complex bval = 0, dval = 0, aval = 0;
        {
            Complex xp = 1;
            for (int k = 0; k <= std::max(b_num.degree(), 0); ++k) {
                bval += to_double(b_num.coeff(k)) * xp;
                xp *= x0;
            }
            xp = 1;
            for (int k = 0; k <= std::max(d.degree(), 0); ++k) {
                dval += to_double(d.coeff(k)) * xp;
                xp *= x0;
            }
            xp = 1;
            for (int k = 0; k <= std::max(a_num.degree(), 0); ++k) {
                aval += to_double(a_num.coeff(k)) * xp;
                xp *= x0;
            }
        }
        Complex s_at = 0;
        {
            Complex xp = 1;
            for (int k = 0; k <= 3; ++k) {
                s_at += to_double(curve.weierstrass_cubic().coeff(k)) * xp;
                xp *= x0;
            }
        }
        Complex y0;
        if (pure_x) {
            // f in k(x): generic fibers come in (x0, +y) / (x0, -y) pairs
            if (std::abs(s_at) < 1e-9) continue; // ramified, non-generic t0
            y0 = std::sqrt(s_at);
        } else {
            if (std::abs(bval) < 1e-9) continue; // spurious root of the eliminant
            y0 = (t0 * dval - aval) / bval;
            if (std::abs(y0 * y0 - s_at) > 1e-6 * std::max(1.0, std::abs(s_at))) continue;
        }
        // invert wp by Newton from a coarse grid start: z with wp(z) = x0
        Complex best_z;
        double best = 1e30;
        for (double u = 0.06; u < 0.97; u += 0.06)
            for (double v = 0.06; v < 0.97; v += 0.06) {
                Complex z(u, v);
                Complex w = z.real() * bridge.lattice.w1 + z.imag() * bridge.lattice.w2;
                try {
                    auto val = wp_eval(bridge.lattice, w);
                    double err = std::abs(val.wp - x0);
                    if (err < best) {
                        best = err;
                        best_z = w;
                    }
                } catch (const Error&) {
                }
            }
        Complex z = best_z;
        for (int it = 0; it < 60; ++it) {
            auto val = wp_eval(bridge.lattice, z);
            Complex step = (val.wp - x0) / val.wp_prime;
            z -= step;
            if (std::abs(step) < 1e-13) break;
        }
        auto val = wp_eval(bridge.lattice, z);
        if (std::abs(val.wp - x0) > 1e-7 * std::max(1.0, std::abs(x0))) continue;
        // distinct solutions only (multiplicity-free for generic t0)
        bool dup = false;
        for (const auto& sz : seen) dup = dup || std::abs(sz - x0) < 1e-7;
        if (dup) continue;
        seen.push_back(x0);
        count += pure_x ? 2 : 1;
    }
    return count;
}

} // namespace

TEST_CASE("pullback formulas of the four involutions") {
    auto curve = curve_from_roots(Rational(1, 2), Rational(-1, 2), Rational(0));
    RatPoly s = curve.weierstrass_cubic();
    CurveFunction x = CurveFunction::x(s), y = CurveFunction::y(s);

    auto s0 = involution_pullback(curve, 0);
    CHECK(pullback(s0, y) == -y);
    CHECK(pullback(s0, x) == x);

    // sigma_3 on the normal form: x -> -1/(4x)  (e3 = 0, a3 = -1/4)
    auto s3 = involution_pullback(curve, 3);
    CurveFunction expected{RatFunc(RatPoly({Rational(-1, 4)}), RatPoly({Rational(0), Rational(1)})),
                           RatFunc(), s};
    CHECK(pullback(s3, x) == expected);

    // constants are fixed
    CurveFunction one = CurveFunction::constant(Rational(1), s);
    for (int i = 0; i < 4; ++i) CHECK(pullback(involution_pullback(curve, i), one) == one);
}

TEST_CASE("involutions are involutions and preserve the curve relation") {
    testing::Gen gen(71);
    auto e = gen.root_triple();
    auto curve = curve_from_roots(e[0], e[1], e[2]);
    RatPoly s = curve.weierstrass_cubic();
    CurveFunction x = CurveFunction::x(s), y = CurveFunction::y(s);

    for (int i = 0; i < 4; ++i) {
        auto sig = involution_pullback(curve, i);
        // y_image^2 = 4 (x_image - e1)(x_image - e2)(x_image - e3)
        CurveFunction lhs = sig.y_image * sig.y_image;
        CurveFunction rhs = CurveFunction::constant(Rational(4), s);
        for (int k = 0; k < 3; ++k)
            rhs = rhs * (sig.x_image - CurveFunction::constant(curve.e[static_cast<size_t>(k)], s));
        CHECK(lhs == rhs);
        // double application is the identity on x and y
        CHECK(pullback(sig, pullback(sig, x)) == x);
        CHECK(pullback(sig, pullback(sig, y)) == y);
    }

    for (int trial = 0; trial < 50; ++trial) {
        CurveFunction f = random_function(gen, s);
        int i = gen.small_int(0, 3);
        auto sig = involution_pullback(curve, i);
        CHECK(pullback(sig, pullback(sig, f)) == f);
    }
}

TEST_CASE("composite of two involutions is a 2-torsion translation") {
    testing::Gen gen(73);
    auto e = gen.root_triple();
    auto curve = curve_from_roots(e[0], e[1], e[2]);
    RatPoly s = curve.weierstrass_cubic();
    CurveFunction x = CurveFunction::x(s), y = CurveFunction::y(s);
    for (int i = 1; i < 4; ++i)
        for (int j = 1; j < 4; ++j) {
            if (i == j) continue;
            auto si = involution_pullback(curve, i);
            auto sj = involution_pullback(curve, j);
            // t = sigma_i o sigma_j as pullback composition; t*t = id
            auto apply_t = [&](const CurveFunction& f) { return pullback(sj, pullback(si, f)); };
            CHECK(apply_t(apply_t(x)) == x);
            CHECK(apply_t(apply_t(y)) == y);
            // and t itself is not the identity
            CHECK(!(apply_t(x) == x && apply_t(y) == y));
        }
}

TEST_CASE("fixed generators: the j=1728 examples") {
    auto curve = curve_from_roots(Rational(1, 2), Rational(-1, 2), Rational(0));
    RatPoly s = curve.weierstrass_cubic();

    // G03: (x^2 - 1/4)/x, invariant under sigma_3
    CurveFunction g03 = fixed_generator(curve, {0, 3});
    CurveFunction expected{RatFunc(RatPoly({Rational(-1, 4), Rational(0), Rational(1)}),
                                   RatPoly({Rational(0), Rational(1)})),
                           RatFunc(), s};
    CHECK(g03 == expected);
    CHECK(pullback(involution_pullback(curve, 3), g03) == g03);

    // G12: y/(c3 + 2 e3 x - x^2) = y/(-1/4 - x^2), invariant under both.
    CurveFunction g12 = fixed_generator(curve, {1, 2});
    CurveFunction expected12{RatFunc(),
                             RatFunc(RatPoly({Rational(1)}),
                                     RatPoly({Rational(-1, 4), Rational(0), Rational(-1)})),
                             s};
    CHECK(g12 == expected12);
    CHECK(pullback(involution_pullback(curve, 1), g12) == g12);
    CHECK(pullback(involution_pullback(curve, 2), g12) == g12);

    CHECK_THROWS_AS(fixed_generator(curve, {2, 1}), Error);
    CHECK_THROWS_AS(fixed_generator(curve, {0, 4}), Error);
}

TEST_CASE("printed (x - c_i) denominator is NOT invariant on the j=1728 curve") {
    auto curve = curve_from_roots(Rational(1, 2), Rational(-1, 2), Rational(0));
    RatPoly s = curve.weierstrass_cubic();
    for (int i = 1; i <= 3; ++i) {
        const Rational& c = curve.c[static_cast<size_t>(i - 1)];
        const Rational& e = curve.e[static_cast<size_t>(i - 1)];
        if (c == e) continue;
        CurveFunction printed{RatFunc(RatPoly({c, Rational(0), Rational(1)}), RatPoly({-c, Rational(1)})),
                              RatFunc(), s};
        CurveFunction corrected{RatFunc(RatPoly({c, Rational(0), Rational(1)}), RatPoly({-e, Rational(1)})),
                                RatFunc(), s};
        auto sig = involution_pullback(curve, i);
        CHECK(!(pullback(sig, printed) == printed));
        CHECK(pullback(sig, corrected) == corrected);
    }
}

TEST_CASE("generators match the plane-equation ratio and separate the groups") {
    testing::Gen gen(79);
    for (int trial = 0; trial < 4; ++trial) {
        auto e = gen.root_triple();
        auto curve = curve_from_roots(e[0], e[1], e[2]);
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                CurveFunction g = fixed_generator(curve, {i, j});
                auto planes = v4_plane_pair(curve, {i, j});
                CurveFunction ratio = plane_on_embedding(curve, planes.first) /
                                      plane_on_embedding(curve, planes.second);
                CHECK((ratio == g || ratio == g.inverse()));
                CHECK(covering_degree(curve, g) == 4);
                // invariance under the group, non-invariance under the others
                for (int k = 0; k < 4; ++k) {
                    auto sig = involution_pullback(curve, k);
                    bool inside = (k == i || k == j);
                    CHECK((pullback(sig, g) == g) == inside);
                }
            }
    }
}

TEST_CASE("covering_degree examples") {
    auto curve = curve_from_roots(Rational(1, 2), Rational(-1, 2), Rational(0));
    RatPoly s = curve.weierstrass_cubic();
    CurveFunction x = CurveFunction::x(s), y = CurveFunction::y(s);

    CHECK(covering_degree(curve, x) == 2);
    CHECK(covering_degree(curve, y) == 3); // poles only at the flex, order 3
    CHECK(covering_degree(curve, fixed_generator(curve, {0, 1})) == 4);
    CHECK(covering_degree(curve, fixed_generator(curve, {2, 3})) == 4);
    CHECK_THROWS_AS(covering_degree(curve, CurveFunction::constant(Rational(3), s)), Error);
}

TEST_CASE("covering_degree agrees with the numeric fiber count") {
    auto curve = curve_from_roots(Rational(1, 2), Rational(-1, 2), Rational(0));
    RatPoly s = curve.weierstrass_cubic();
    CurveFunction x = CurveFunction::x(s), y = CurveFunction::y(s);

    CHECK(numeric_fiber_count(curve, x, 1.37) == 2);
    CHECK(numeric_fiber_count(curve, fixed_generator(curve, {0, 2}), 0.83) == 4);
    CHECK(numeric_fiber_count(curve, fixed_generator(curve, {1, 3}), 1.21) == 4);
}
