#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "galois/curve.hpp"
#include "galois/function_field.hpp"
#include "test_support.hpp"

using namespace galois;

TEST_CASE("curve_from_roots: the lemniscatic normal form") {
    auto c = curve_from_roots(Rational(1, 2), Rational(-1, 2), Rational(0));
    CHECK(c.p == -1);
    CHECK(c.q == 0);
    CHECK(c.c[0] == Rational(1, 4));
    CHECK(c.c[1] == Rational(1, 4));
    CHECK(c.c[2] == Rational(-1, 4));
    CHECK(c.j_classical == 1728);
    CHECK(c.is_lemniscatic);
}

TEST_CASE("curve_from_roots: derived constants of (1,-1,0)") {
    auto c = curve_from_roots(Rational(1), Rational(-1), Rational(0));
    CHECK(c.p == -4);
    CHECK(c.q == 0);
    CHECK(c.a[0] == 2);
    CHECK(c.a[1] == 2);
    CHECK(c.a[2] == -1);
}

TEST_CASE("curve_from_roots rejects bad input") {
    CHECK_THROWS_AS(curve_from_roots(Rational(1), Rational(1), Rational(-2)), Error);
    CHECK_THROWS_AS(curve_from_roots(Rational(1), Rational(2), Rational(3)), Error);
}

TEST_CASE("curve_from_pq factors rational cubics and rejects irrational ones") {
    auto c = curve_from_pq(Rational(-1), Rational(0));
    std::array<Rational, 3> sorted = c.e;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::array<Rational, 3>{Rational(-1, 2), Rational(0), Rational(1, 2)});
    // 4x^3 + x + 1 has one real irrational root
    CHECK_THROWS_AS(curve_from_pq(Rational(1), Rational(1)), Error);
}

TEST_CASE("embed_point") {
    auto c = curve_from_roots(Rational(1, 2), Rational(-1, 2), Rational(0));
    ProjPoint p = embed_point(c, Rational(1, 2), Rational(0));
    CHECK(p == ProjPoint(Rational(4), Rational(1), Rational(2), Rational(0)));
    CHECK(c.f1.eval(p) == 0);
    CHECK(c.f2.eval(p) == 0);
    CHECK_THROWS_AS(embed_point(c, Rational(0), Rational(1)), Error);

    // generic 2-torsion embedding (1 : e^2 : e : 0)
    auto c2 = curve_from_roots(Rational(1), Rational(2), Rational(-3));
    for (int i = 0; i < 3; ++i) {
        Rational e = c2.e[static_cast<size_t>(i)];
        CHECK(embed_point(c2, e, Rational(0)) == ProjPoint(Rational(1), e * e, e, Rational(0)));
    }
}

TEST_CASE("singular_pencil_members of the j=1728 curve") {
    auto c = curve_from_roots(Rational(1, 2), Rational(-1, 2), Rational(0));
    auto cones = singular_pencil_members(c);
    REQUIRE(cones.size() == 4);
    CHECK(!cones[0].b_value.has_value()); // the F1 member at b = infinity
    CHECK(cones[0].vertex == ProjPoint(Rational(0), Rational(0), Rational(0), Rational(1)));
    CHECK(*cones[1].b_value == -2);
    CHECK(cones[1].vertex == ProjPoint(Rational(4), Rational(-1), Rational(2), Rational(0)));
    CHECK(*cones[2].b_value == 2);
    CHECK(cones[2].vertex == ProjPoint(Rational(4), Rational(-1), Rational(-2), Rational(0)));
    CHECK(*cones[3].b_value == 0);
    CHECK(cones[3].vertex == ProjPoint(Rational(4), Rational(1), Rational(0), Rational(0)));

    // The pencil cubic b(b-2)(b+2) vanishes at each finite b value.
    RatPoly cubic = c.pencil_cubic();
    CHECK(cubic == RatPoly({Rational(0), Rational(-4), Rational(0), Rational(1)}));
    for (int i = 1; i < 4; ++i) CHECK(cubic.eval<Rational>(*cones[static_cast<size_t>(i)].b_value) == 0);
}

TEST_CASE("singular members on (1,-1,0) and random curves") {
    auto c = curve_from_roots(Rational(1), Rational(-1), Rational(0));
    auto cones = singular_pencil_members(c);
    CHECK(*cones[1].b_value == -4);
    CHECK(cones[1].vertex == ProjPoint(Rational(1), Rational(-1), Rational(1), Rational(0)));
    CHECK(*cones[2].b_value == 4);
    CHECK(cones[2].vertex == ProjPoint(Rational(1), Rational(-1), Rational(-1), Rational(0)));
    CHECK(*cones[3].b_value == 0);
    CHECK(cones[3].vertex == ProjPoint(Rational(1), Rational(1), Rational(0), Rational(0)));

    testing::Gen gen(23);
    for (int trial = 0; trial < 10; ++trial) {
        auto e = gen.root_triple();
        auto curve = curve_from_roots(e[0], e[1], e[2]);
        auto cs = singular_pencil_members(curve);
        REQUIRE(cs.size() == 4);
        RatPoly cubic = curve.pencil_cubic();
        for (int i = 0; i < 4; ++i) {
            auto loc = quadric_singular_locus(cs[static_cast<size_t>(i)].quadric);
            CHECK(loc.rank == 3);
            if (i > 0) {
                CHECK(cubic.eval<Rational>(*cs[static_cast<size_t>(i)].b_value) == 0);
                // closed-form vertex (1 : -c_i : e_i : 0)
                CHECK(cs[static_cast<size_t>(i)].vertex ==
                      ProjPoint(Rational(1), -curve.c[static_cast<size_t>(i - 1)],
                                curve.e[static_cast<size_t>(i - 1)], Rational(0)));
            }
        }
    }
}

TEST_CASE("cone quadrics vanish on the generic curve point") {
    // Substituting (1, x^2, x, y) into each cone quadric must give the zero
    // element of k(x)[y]/(y^2 - s): an exact identity, no sampling.
    testing::Gen gen(31);
    for (int trial = 0; trial < 5; ++trial) {
        auto e = gen.root_triple();
        auto curve = curve_from_roots(e[0], e[1], e[2]);
        RatPoly s = curve.weierstrass_cubic();
        CurveFunction one = CurveFunction::constant(Rational(1), s);
        CurveFunction x = CurveFunction::x(s);
        CurveFunction y = CurveFunction::y(s);
        std::array<CurveFunction, 4> g{one, x * x, x, y};
        for (const auto& cone : singular_pencil_members(curve)) {
            CurveFunction acc = CurveFunction::constant(Rational(0), s);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) {
                    Rational cij = cone.quadric.sym()(i, j);
                    if (cij == 0) continue;
                    acc = acc + CurveFunction::constant(cij, s) * g[static_cast<size_t>(i)] *
                                    g[static_cast<size_t>(j)];
                }
            CHECK(acc.is_zero());
        }
    }
}

TEST_CASE("tetrahedron determinants") {
    auto c1 = curve_from_roots(Rational(1, 2), Rational(-1, 2), Rational(0));
    auto t1 = tetrahedron(c1);
    CHECK(t1.sub_determinant == Rational(1, 2)); // 2 * 1 * (-1/2) * (-1/2)
    CHECK(t1.vertex_determinant != 0);

    auto c2 = curve_from_roots(Rational(1), Rational(-1), Rational(0));
    CHECK(tetrahedron(c2).sub_determinant == 4);

    testing::Gen gen(17);
    for (int trial = 0; trial < 10; ++trial) {
        auto e = gen.root_triple();
        auto curve = curve_from_roots(e[0], e[1], e[2]);
        auto t = tetrahedron(curve);
        CHECK(t.vertex_determinant != 0);
        Rational formula = 2 * (e[0] - e[1]) * (e[1] - e[2]) * (e[2] - e[0]);
        CHECK((t.sub_determinant == formula || t.sub_determinant == -formula));
        // edges sharing a vertex meet exactly there
        for (int a = 0; a < 6; ++a)
            for (int b = a + 1; b < 6; ++b) {
                auto va = t.edge_vertices[static_cast<size_t>(a)];
                auto vb = t.edge_vertices[static_cast<size_t>(b)];
                int shared = -1;
                for (int u : va)
                    for (int v : vb)
                        if (u == v) shared = u;
                auto m = meet_lines(t.edges[static_cast<size_t>(a)], t.edges[static_cast<size_t>(b)]);
                if (shared >= 0) {
                    REQUIRE(m.kind == LineMeet::Kind::Point);
                    CHECK(*m.point == t.vertices[static_cast<size_t>(shared)]);
                } else {
                    CHECK(m.kind == LineMeet::Kind::Disjoint);
                }
            }
    }
}

TEST_CASE("line_meets_curve") {
    auto c = curve_from_roots(Rational(1, 2), Rational(-1, 2), Rational(0));
    auto t = tetrahedron(c);

    // Edge Q0 Q3: F1 restricts to 4t^2 and F2(Q0) = -s^2; no common zero.
    ProjLine edge = span_line(t.vertices[0], t.vertices[3]);
    CHECK(!line_meets_curve(c, edge));

    // A chord through two embedded points meets by construction.
    ProjPoint p1 = embed_point(c, Rational(1, 2), Rational(0));
    ProjPoint p2 = embed_point(c, Rational(0), Rational(0));
    CHECK(line_meets_curve(c, span_line(p1, p2)));

    // {X = 0, Z = 0} passes through the hyperosculation point (0:1:0:0) of C,
    // so it meets the curve (the line lies inside V(F1)).
    ProjLine l = ProjLine::cut_by(ProjPlane(Rational(1), Rational(0), Rational(0), Rational(0)),
                                  ProjPlane(Rational(0), Rational(0), Rational(1), Rational(0)));
    CHECK(line_meets_curve(c, l));
    // and indeed (0:1:0:0) is on both quadrics and on the line
    ProjPoint flex(Rational(0), Rational(1), Rational(0), Rational(0));
    CHECK(c.f1.eval(flex) == 0);
    CHECK(c.f2.eval(flex) == 0);
    CHECK(l.contains(flex));
}
