#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "galois/torus.hpp"
#include "test_support.hpp"

using namespace galois;

namespace {

// Independent wp oracle: symmetric box-truncated lattice sum with exact tail
// corrections through the Eisenstein numbers G_{2k} (computed from g2, g3 by
// the standard recursion, not by the duplication path under test).
WpValue wp_lattice_sum(const WpLattice& lat, Complex z, int box = 40) {
    Complex wp = 1.0 / (z * z);
    Complex wpp = -2.0 / (z * z * z);
    for (int m = -box; m <= box; ++m)
        for (int n = -box; n <= box; ++n) {
            if (m == 0 && n == 0) continue;
            Complex lam = double(m) * lat.w1 + double(n) * lat.w2;
            wp += 1.0 / ((z - lam) * (z - lam)) - 1.0 / (lam * lam);
            wpp += -2.0 / ((z - lam) * (z - lam) * (z - lam));
        }
    // Tail: sum over |lambda| outside the box of
    //   sum_{k>=1} (k+1) z^k / lambda^{k+2}   (odd k cancels by symmetry)
    // expressed through T_{2k} = G_{2k+2} - partial sums.
    const int kmax = 4;
    std::vector<Complex> g(static_cast<size_t>(2 * kmax + 4), Complex(0, 0));
    // G_4 = g2/60, G_6 = g3/140, and the recursion
    // G_{2n} = 3/((2n+1)(n-3)) sum_{m=2}^{n-2} (2m-1)(2n-2m-1)... folded via
    // c_k = (2k-1) G_{2k}: c_k recursion as in the Laurent series.
    std::vector<Complex> c(16, Complex(0, 0));
    c[2] = lat.g2 / 20.0;
    c[3] = lat.g3 / 28.0;
    for (int k = 4; k <= 10; ++k) {
        Complex acc(0, 0);
        for (int m = 2; m <= k - 2; ++m) acc += c[static_cast<size_t>(m)] * c[static_cast<size_t>(k - m)];
        c[static_cast<size_t>(k)] = 3.0 * acc / ((2.0 * k + 1.0) * (k - 3.0));
    }
    for (int k = 2; k <= kmax + 1; ++k) {
        // G_{2k} = c_k / (2k - 1)
        Complex G2k = c[static_cast<size_t>(k)] / (2.0 * k - 1.0);
        Complex partial(0, 0);
        for (int m = -box; m <= box; ++m)
            for (int n = -box; n <= box; ++n) {
                if (m == 0 && n == 0) continue;
                Complex lam = double(m) * lat.w1 + double(n) * lat.w2;
                partial += 1.0 / std::pow(lam, 2 * k);
            }
        Complex tail = G2k - partial; // sum over the box exterior of lambda^(-2k)
        // wp correction: (2k-1) z^(2k-2) * T_{2k}; wp' correction: derivative.
        wp += (2.0 * k - 1.0) * std::pow(z, 2 * k - 2) * tail;
        if (2 * k - 3 >= 0)
            wpp += (2.0 * k - 1.0) * (2.0 * k - 2.0) * std::pow(z, 2 * k - 3) * tail;
    }
    return {wp, wpp};
}

} // namespace

TEST_CASE("lattice fractions reduce mod 1") {
    LatticeFraction f(Rational(5, 4), Rational(-1, 4));
    CHECK(f.r == Rational(1, 4));
    CHECK(f.s == Rational(3, 4));
    CHECK((f + f).r == Rational(1, 2));
    CHECK((-LatticeFraction(Rational(1, 4), Rational(0))).r == Rational(3, 4));
}

TEST_CASE("torus automorphism composition and orders") {
    // (e1, a1) o (e2, a2) = (e1 e2, e1 a2 + a1), exactly.
    TorusAutomorphism s0 = sigma_involution(0);
    TorusAutomorphism s1 = sigma_involution(1);
    CHECK(s0.order() == 2);
    CHECK((s0 * s0).is_identity());
    TorusAutomorphism t = s0 * s1; // translation by 1/2
    CHECK(t.is_translation());
    CHECK(t.alpha == LatticeFraction(Rational(1, 2), Rational(0)));
    CHECK(t.order() == 2);

    UnitMultiplier i_mult{{0, -1, 1, 0}};
    TorusAutomorphism zi{i_mult, {}};
    CHECK(zi.order() == 4);
    CHECK((zi * zi) == s0);

    // associativity on a sample
    TorusAutomorphism a{i_mult, LatticeFraction(Rational(1, 4), Rational(0))};
    TorusAutomorphism b = s1, c = sigma_involution(2);
    CHECK(((a * b) * c) == (a * (b * c)));
}

TEST_CASE("v4 groups and diamond condition") {
    AutomorphismGroup g12 = v4_group(1, 2);
    CHECK(g12.kind == AutomorphismGroup::Kind::V4);
    CHECK(g12.label == "G12");
    CHECK(diamond_check(g12));
    // elements: {id, sigma_1, sigma_2, z + (1 + omega)/2}
    TorusAutomorphism trans{UnitMultiplier::identity(),
                            LatticeFraction(Rational(1, 2), Rational(1, 2))};
    CHECK(g12.contains(trans));

    // Pure translation group fails (no eps != 1: elliptic quotient).
    std::vector<TorusAutomorphism> els;
    for (int m = 0; m < 2; ++m)
        for (int n = 0; n < 2; ++n)
            els.push_back({UnitMultiplier::identity(),
                           LatticeFraction(Rational(m, 2), Rational(n, 2))});
    AutomorphismGroup translations = make_group(els);
    CHECK(translations.elements.size() == 4);
    CHECK(!diamond_check(translations));

    // Z4 group: diamond iff 2(1+i)alpha = 0 mod L, i.e. the eight (m,n).
    std::set<std::pair<int, int>> expected{{0, 0}, {2, 2}, {2, 0}, {0, 2},
                                           {3, 1}, {1, 3}, {1, 1}, {3, 3}};
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) {
            TorusAutomorphism gen{UnitMultiplier{{0, -1, 1, 0}},
                                  LatticeFraction(Rational(m, 4), Rational(n, 4))};
            if (gen.order() != 4) continue;
            std::vector<TorusAutomorphism> zel{TorusAutomorphism::identity(), gen, gen * gen,
                                               gen * gen * gen};
            AutomorphismGroup zg = make_group(zel);
            CHECK(diamond_check(zg) == (expected.count({m, n}) > 0));
        }
}

TEST_CASE("group enumeration counts: 6 / 14 / 6") {
    auto lat2 = make_lattice(Complex(0, 2));
    CHECK(lat2.symmetry_order == 2);
    auto groups2 = enumerate_galois_groups(lat2);
    CHECK(groups2.size() == 6);
    for (const auto& g : groups2) CHECK(g.kind == AutomorphismGroup::Kind::V4);

    auto lat4 = make_lattice(Complex(0, 1));
    CHECK(lat4.symmetry_order == 4);
    auto groups4 = enumerate_galois_groups(lat4);
    CHECK(groups4.size() == 14);
    int v4 = 0, z4 = 0;
    std::set<std::pair<int, int>> mn;
    for (const auto& g : groups4) {
        if (g.kind == AutomorphismGroup::Kind::V4) ++v4;
        if (g.kind == AutomorphismGroup::Kind::Z4) {
            ++z4;
            REQUIRE(g.z4_mn.has_value());
            mn.insert({(*g.z4_mn)[0], (*g.z4_mn)[1]});
        }
        CHECK(diamond_check(g));
    }
    CHECK(v4 == 6);
    CHECK(z4 == 8);
    CHECK(mn == std::set<std::pair<int, int>>{{0, 0}, {2, 2}, {2, 0}, {0, 2},
                                              {3, 1}, {1, 3}, {1, 1}, {3, 3}});

    // hexagonal lattice: only the six V4 groups (informational, beyond the catalog)
    auto lat6 = make_lattice(std::polar(1.0, std::numbers::pi / 3.0));
    CHECK(lat6.symmetry_order == 6);
    auto groups6 = enumerate_galois_groups(lat6);
    CHECK(groups6.size() == 6);
    for (const auto& g : groups6) CHECK(g.kind == AutomorphismGroup::Kind::V4);

    // Exhaustiveness cross-check by a second, structure-aware route: order-4
    // subgroups are either cyclic (one order-4 generator) or generated by two
    // commuting involutions; enumerate both shapes directly over the finite
    // candidate space and compare against the brute-force closure result.
    {
        std::vector<UnitMultiplier> units{UnitMultiplier::identity(),
                                          UnitMultiplier{{0, -1, 1, 0}},
                                          UnitMultiplier::minus_identity(),
                                          UnitMultiplier{{0, 1, -1, 0}}};
        std::vector<TorusAutomorphism> candidates;
        for (const auto& u : units)
            for (int m = 0; m < 4; ++m)
                for (int n = 0; n < 4; ++n)
                    candidates.push_back({u, LatticeFraction(Rational(m, 4), Rational(n, 4))});
        std::set<std::vector<TorusAutomorphism>> found;
        for (const auto& t : candidates) {
            if (t.order() == 4) {
                auto g = make_group({TorusAutomorphism::identity(), t, t * t, t * t * t});
                if (diamond_check(g)) found.insert(g.elements);
            }
        }
        for (const auto& s : candidates)
            for (const auto& t : candidates) {
                if (s.order() != 2 || t.order() != 2 || s == t) continue;
                if (!((s * t) == (t * s))) continue;
                auto g = make_group({TorusAutomorphism::identity(), s, t, s * t});
                if (g.elements.size() != 4) continue;
                if (diamond_check(g)) found.insert(g.elements);
            }
        CHECK(found.size() == 14);
        std::set<std::vector<TorusAutomorphism>> returned;
        for (const auto& g : groups4) returned.insert(g.elements);
        CHECK(found == returned);
    }

    for (const auto& g : groups4) {
        CHECK(g.elements.size() == 4);
        // Cayley closure
        for (const auto& x : g.elements)
            for (const auto& y : g.elements) CHECK(g.contains(x * y));
    }
}

TEST_CASE("claim 1 group intersections") {
    auto gmn = [](int m, int n) { return z4_group(m, n); };
    auto expect = [&](const AutomorphismGroup& a, const AutomorphismGroup& b, int sigma_idx) {
        auto inter = group_intersection(a, b);
        REQUIRE(inter.size() == 2);
        CHECK(inter[0].is_identity() + inter[1].is_identity() == 1);
        const TorusAutomorphism& nontriv = inter[0].is_identity() ? inter[1] : inter[0];
        CHECK(nontriv == sigma_involution(sigma_idx));
    };
    expect(gmn(0, 0), gmn(2, 2), 0);
    expect(gmn(2, 0), gmn(0, 2), 3);
    expect(gmn(1, 1), gmn(3, 3), 2);
    expect(gmn(3, 1), gmn(1, 3), 1);

    // V4 side: G01 and G23 share only a translation (the skew-edge case).
    auto inter = group_intersection(v4_group(0, 1), v4_group(2, 3));
    REQUIRE(inter.size() == 2);
    const TorusAutomorphism& t = inter[0].is_identity() ? inter[1] : inter[0];
    CHECK(t.is_translation());
    CHECK(t.alpha == LatticeFraction(Rational(1, 2), Rational(0)));
}

TEST_CASE("for every V4 group the composite is a 2-torsion translation") {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            AutomorphismGroup g = v4_group(i, j);
            int translations = 0;
            for (const auto& t : g.elements) {
                if (t.is_identity()) continue;
                if (t.is_translation()) {
                    ++translations;
                    CHECK((t.alpha + t.alpha).is_zero());
                }
            }
            CHECK(translations == 1);
        }
}

TEST_CASE("wp: parity, half periods, ODE residual") {
    auto curve = curve_from_roots(Rational(1, 2), Rational(-1, 2), Rational(0));
    auto bridge = make_bridge(curve);
    CHECK(std::abs(bridge.tau - Complex(0, 1)) < 1e-12);

    testing::Gen gen(101);
    for (int trial = 0; trial < 20; ++trial) {
        Complex z(gen.uniform(0.08, 0.92), gen.uniform(0.08, 0.92));
        Complex w = z.real() * bridge.lattice.w1 + z.imag() * bridge.lattice.w2;
        auto v = wp_eval(bridge.lattice, w);
        auto vm = wp_eval(bridge.lattice, -w);
        CHECK(std::abs(v.wp - vm.wp) < 1e-10 * std::max(1.0, std::abs(v.wp)));
        CHECK(std::abs(v.wp_prime + vm.wp_prime) < 1e-10 * std::max(1.0, std::abs(v.wp_prime)));
    }

    // Half periods carry the roots, in the user's root order via the bridge.
    for (int i = 0; i < 3; ++i) {
        LatticeFraction eta = bridge.root_half_period[static_cast<size_t>(i)];
        Complex w = to_double(eta.r) * bridge.lattice.w1 + to_double(eta.s) * bridge.lattice.w2;
        auto v = wp_eval(bridge.lattice, w);
        CHECK(std::abs(v.wp - to_double(curve.e[static_cast<size_t>(i)])) < 1e-9);
        CHECK(std::abs(v.wp_prime) < 1e-9);
    }

    // Defining ODE on 100 samples.
    double g2 = to_double(-curve.p), g3 = to_double(-curve.q);
    for (int trial = 0; trial < 100; ++trial) {
        Complex z(gen.uniform(0.05, 0.95), gen.uniform(0.05, 0.95));
        Complex w = z.real() * bridge.lattice.w1 + z.imag() * bridge.lattice.w2;
        auto v = wp_eval(bridge.lattice, w);
        Complex res = v.wp_prime * v.wp_prime - (4.0 * v.wp * v.wp * v.wp - g2 * v.wp - g3);
        double scale = std::max(1.0, std::abs(v.wp_prime * v.wp_prime));
        CHECK(std::abs(res) / scale < 1e-9);
    }

    CHECK_THROWS_AS(wp_eval(bridge.lattice, Complex(0, 0)), Error);
}

TEST_CASE("wp agrees with the direct lattice-sum oracle") {
    auto curve = curve_from_roots(Rational(1), Rational(2), Rational(-3));
    auto bridge = make_bridge(curve);
    testing::Gen gen(103);
    for (int trial = 0; trial < 50; ++trial) {
        Complex z(gen.uniform(0.1, 0.9), gen.uniform(0.1, 0.9));
        Complex w = z.real() * bridge.lattice.w1 + z.imag() * bridge.lattice.w2;
        auto a = wp_eval(bridge.lattice, w);
        auto b = wp_lattice_sum(bridge.lattice, w);
        CHECK(std::abs(a.wp - b.wp) < 1e-8 * std::max(1.0, std::abs(a.wp)));
        CHECK(std::abs(a.wp_prime - b.wp_prime) < 1e-8 * std::max(1.0, std::abs(a.wp_prime)));
    }
}

TEST_CASE("addition formula residual") {
    auto curve = curve_from_roots(Rational(1, 2), Rational(-1, 2), Rational(0));
    auto bridge = make_bridge(curve);
    testing::Gen gen(107);
    for (int trial = 0; trial < 40; ++trial) {
        Complex z1(gen.uniform(0.08, 0.92), gen.uniform(0.08, 0.92));
        Complex z2(gen.uniform(0.08, 0.92), gen.uniform(0.08, 0.92));
        Complex w1 = z1.real() * bridge.lattice.w1 + z1.imag() * bridge.lattice.w2;
        Complex w2 = z2.real() * bridge.lattice.w1 + z2.imag() * bridge.lattice.w2;
        auto u = wp_eval(bridge.lattice, w1);
        auto v = wp_eval(bridge.lattice, w2);
        if (std::abs(u.wp - v.wp) < 1e-3) continue; // formula pole
        WpValue direct;
        try {
            direct = wp_eval(bridge.lattice, w1 + w2);
        } catch (const Error&) {
            continue; // z1 + z2 hit the lattice
        }
        auto sum = wp_addition_formula(u, v);
        double scale = std::max(1.0, std::abs(direct.wp));
        CHECK(std::abs(sum.wp - direct.wp) / scale < 1e-8);
        double scale_p = std::max(1.0, std::abs(direct.wp_prime));
        CHECK(std::abs(sum.wp_prime - direct.wp_prime) / scale_p < 1e-8);
    }
}

TEST_CASE("torus_point: half periods, the flex, quadric membership") {
    auto curve = curve_from_roots(Rational(1, 2), Rational(-1, 2), Rational(0));
    auto bridge = make_bridge(curve);

    // alpha = 1/2 -> (1 : e1^2 : e1 : 0)
    Eigen::Vector4cd p = torus_point(bridge, Complex(0.5, 0));
    p = projective_normalize(p);
    Eigen::Vector4cd expect;
    expect << 1.0, 0.25, 0.5, 0.0;
    expect = projective_normalize(expect);
    CHECK((p - expect).norm() < 1e-9);

    // alpha = 0 -> exactly (0 : 1 : 0 : 0)
    Eigen::Vector4cd flex = torus_point(bridge, Complex(0, 0));
    CHECK(flex(0) == Complex(0, 0));
    CHECK(flex(1) == Complex(1, 0));

    // random points satisfy both quadrics after unit-norm scaling
    Eigen::Matrix4cd f1 = curve.f1.numeric(), f2 = curve.f2.numeric();
    testing::Gen gen(109);
    for (int trial = 0; trial < 30; ++trial) {
        Complex z(gen.uniform(0.05, 0.95), gen.uniform(0.05, 0.95));
        Eigen::Vector4cd q = torus_point(bridge, z).normalized();
        CHECK(std::abs((q.transpose() * f1 * q)(0, 0)) < 1e-8);
        CHECK(std::abs((q.transpose() * f2 * q)(0, 0)) < 1e-8);
    }
}

TEST_CASE("abel_equivalent and divisor normalization") {
    Complex omega(0, 1);
    CHECK(abel_equivalent({0, 0, 0, 0}, omega));
    CHECK(abel_equivalent({0.25, 0.25, 0.25, 0.25}, omega));
    CHECK(!abel_equivalent({0.25, 0.25, 0.25, 0.20}, omega));

    CHECK(std::abs(normalize_divisor({0, 0, 0, 0})) == 0);
    CHECK(std::abs(normalize_divisor({0.125, 0, 0, 0}) - Complex(-1.0 / 32.0, 0)) < 1e-15);

    testing::Gen gen(113);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Complex> alphas;
        for (int k = 0; k < 4; ++k)
            alphas.emplace_back(gen.uniform(-1, 1), gen.uniform(-1, 1));
        Complex beta = normalize_divisor(alphas);
        std::vector<Complex> shifted;
        for (const auto& a : alphas) shifted.push_back(a + beta);
        CHECK(abel_equivalent(shifted, omega, 1e-9));
    }
}

TEST_CASE("abel equivalence iff four-point coplanarity") {
    auto curve = curve_from_roots(Rational(1, 2), Rational(-1, 2), Rational(0));
    auto bridge = make_bridge(curve);
    testing::Gen gen(127);
    int both_ways = 0;
    for (int trial = 0; trial < 100; ++trial) {
        // alpha_1..3 random, alpha_4 = -(a1+a2+a3) mod the lattice
        Complex a1(gen.uniform(0.05, 0.95), gen.uniform(0.05, 0.95));
        Complex a2(gen.uniform(0.05, 0.95), gen.uniform(0.05, 0.95));
        Complex a3(gen.uniform(0.05, 0.95), gen.uniform(0.05, 0.95));
        Complex a4 = -(a1 + a2 + a3);
        std::vector<Complex> alphas{a1, a2, a3, a4};
        if (!abel_equivalent(alphas, Complex(0, 1))) continue;

        Eigen::Matrix4cd rows;
        rows.row(0) = torus_point(bridge, a1).normalized().transpose();
        rows.row(1) = torus_point(bridge, a2).normalized().transpose();
        rows.row(2) = torus_point(bridge, a3).normalized().transpose();
        rows.row(3) = torus_point(bridge, a4).normalized().transpose();
        Eigen::JacobiSVD<Eigen::Matrix4cd> svd(rows);
        double coplanarity = svd.singularValues()(3) / svd.singularValues()(0);
        CHECK(coplanarity < 1e-7);

        // perturbed quadruple is not coplanar
        Eigen::Matrix4cd rows2 = rows;
        rows2.row(3) = torus_point(bridge, a4 + Complex(0.05, 0.013)).normalized().transpose();
        Eigen::JacobiSVD<Eigen::Matrix4cd> svd2(rows2);
        CHECK(svd2.singularValues()(3) / svd2.singularValues()(0) > 1e-5);
        ++both_ways;
    }
    CHECK(both_ways >= 90);
}

TEST_CASE("eisenstein invariants of the unit lattice match the AGM bridge") {
    // For the lemniscatic curve, tau = i and the rescaled invariants must
    // agree with the q-series of Z + Zi: g2(L_c) = (2 w1)^(-4) g2(Z+Zi).
    auto curve = curve_from_roots(Rational(1, 2), Rational(-1, 2), Rational(0));
    auto bridge = make_bridge(curve);
    auto lat = make_lattice(Complex(0, 1));
    double scale = std::abs(bridge.lattice.w1);
    CHECK(std::abs(lat.g3) < 1e-12);
    CHECK(std::abs(lat.g2.real() / std::pow(scale, 4) - to_double(-curve.p)) < 1e-9);
}
