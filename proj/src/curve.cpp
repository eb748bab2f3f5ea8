#include "galois/curve.hpp"

#include <algorithm>

namespace galois {

namespace {

QuadricForm make_f1() {
    RatMatrix m(4, 4);
    // XY - Z^2
    m(0, 1) = Rational(1, 2);
    m(1, 0) = Rational(1, 2);
    m(2, 2) = -1;
    return QuadricForm(m);
}

QuadricForm make_f2(const Rational& p, const Rational& q) {
    RatMatrix m(4, 4);
    // 4YZ + pXZ + qX^2 - W^2
    m(1, 2) = 2;
    m(2, 1) = 2;
    m(0, 2) = p / 2;
    m(2, 0) = p / 2;
    m(0, 0) = q;
    m(3, 3) = -1;
    return QuadricForm(m);
}

} // namespace

RatPoly EllipticCurveModel::weierstrass_cubic() const {
    return RatPoly({q, p, Rational(0), Rational(4)});
}

RatPoly EllipticCurveModel::pencil_cubic() const {
    return RatPoly({-16 * q, 4 * p, Rational(0), Rational(1)});
}

EllipticCurveModel curve_from_roots(const Rational& e1, const Rational& e2, const Rational& e3) {
    if (e1 == e2 || e1 == e3 || e2 == e3)
        throw singular_curve("repeated root: curve would be singular");
    if (e1 + e2 + e3 != 0)
        throw not_weierstrass_normal("roots must sum to zero; translate x first");
    EllipticCurveModel m{
        {e1, e2, e3},
        4 * (e1 * e2 + e1 * e3 + e2 * e3),
        -4 * e1 * e2 * e3,
        {},
        {},
        {},
        Rational(0),
        false,
        make_f1(),
        make_f2(Rational(0), Rational(0))};
    for (int i = 0; i < 3; ++i) {
        const Rational& ei = m.e[static_cast<size_t>(i)];
        const Rational& ej = m.e[static_cast<size_t>((i + 1) % 3)];
        const Rational& ek = m.e[static_cast<size_t>((i + 2) % 3)];
        m.c[static_cast<size_t>(i)] = ei * ei + ej * ek;
        m.a[static_cast<size_t>(i)] = (ei - ej) * (ei - ek);
        m.b[static_cast<size_t>(i)] = -4 * ei;
    }
    Rational g2 = -m.p, g3 = -m.q;
    Rational disc = g2 * g2 * g2 - 27 * g3 * g3;
    // disc = 16 * prod (e_i - e_j)^2 up to normalization, nonzero for distinct roots
    m.j_classical = 1728 * g2 * g2 * g2 / disc;
    m.is_lemniscatic = (m.j_classical == 1728);
    m.f2 = make_f2(m.p, m.q);
    return m;
}

EllipticCurveModel curve_from_pq(const Rational& p, const Rational& q) {
    // Roots of 4x^3 + px + q: locate numerically, certify rationality exactly.
    RatPoly f({q, p, Rational(0), Rational(4)});
    double pd = to_double(p), qd = to_double(q);
    // Companion-free cubic solve (Cardano via trigonometric form would need
    // case analysis; a simple Newton/deflation pass on doubles is enough to
    // seed exact verification).
    std::vector<double> guesses;
    {
        // coarse scan + Newton
        auto ev = [&](double x) { return ((4 * x) * x) * x + pd * x + qd; };
        auto dev = [&](double x) { return 12 * x * x + pd; };
        double lim = 1.0 + std::max(std::fabs(pd), std::fabs(qd));
        for (double x0 = -lim; x0 <= lim; x0 += lim / 200.0) {
            double x = x0;
            for (int it = 0; it < 60; ++it) {
                double d = dev(x);
                if (std::fabs(d) < 1e-14) break;
                double step = ev(x) / d;
                x -= step;
                if (std::fabs(step) < 1e-14) break;
            }
            if (std::fabs(ev(x)) < 1e-9) {
                bool dup = false;
                for (double g : guesses) dup = dup || std::fabs(g - x) < 1e-7;
                if (!dup) guesses.push_back(x);
            }
        }
    }
    std::vector<Rational> roots;
    for (double g : guesses) {
        auto r = rationalize(g, 1000000ull, 1e-6);
        if (r && f.eval<Rational>(*r) == 0) {
            bool dup = false;
            for (const auto& x : roots) dup = dup || x == *r;
            if (!dup) roots.push_back(*r);
        }
    }
    if (roots.size() != 3)
        throw not_weierstrass_normal("4x^3+px+q does not factor over Q; exact mode needs rational roots");
    return curve_from_roots(roots[0], roots[1], roots[2]);
}

ProjPoint embed_point(const EllipticCurveModel& curve, const Rational& x, const Rational& y) {
    if (y * y != curve.weierstrass_cubic().eval<Rational>(x))
        throw not_on_curve("(" + to_string(x) + ", " + to_string(y) + ") is not on the curve");
    return ProjPoint(Rational(1), x * x, x, y);
}

std::vector<ConeRecord> singular_pencil_members(const EllipticCurveModel& curve) {
    std::vector<ConeRecord> out;
    // b = infinity member: F1 itself, vertex Q0.
    {
        auto loc = quadric_singular_locus(curve.f1);
        if (loc.rank != 3 || loc.kernel_points.size() != 1)
            throw construction_error("F1 is not a rank-3 cone");
        out.push_back({std::nullopt, curve.f1, loc.kernel_points[0], 0});
    }
    for (int i = 0; i < 3; ++i) {
        Rational b = curve.b[static_cast<size_t>(i)];
        RatMatrix m = b * curve.f1.sym() + curve.f2.sym();
        QuadricForm s{m};
        auto loc = quadric_singular_locus(s);
        if (loc.rank != 3 || loc.kernel_points.size() != 1)
            throw construction_error("pencil member b_i is not a rank-3 cone");
        out.push_back({b, s, loc.kernel_points[0], i + 1});
    }
    return out;
}

Tetrahedron tetrahedron(const EllipticCurveModel& curve) {
    auto cones = singular_pencil_members(curve);
    std::array<ProjPoint, 4> v = {cones[0].vertex, cones[1].vertex, cones[2].vertex,
                                  cones[3].vertex};
    RatMatrix m(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = v[static_cast<size_t>(i)][j];
    Rational det = m.det();
    if (det == 0) throw construction_error("cone vertices are coplanar");
    // Rows (1 : -c_i : e_i) in the W = 0 plane.
    RatMatrix sub(3, 3);
    for (int i = 0; i < 3; ++i) {
        sub(i, 0) = 1;
        sub(i, 1) = -curve.c[static_cast<size_t>(i)];
        sub(i, 2) = curve.e[static_cast<size_t>(i)];
    }
    Tetrahedron t{v, {}, {}, det, sub.det()};
    int k = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            t.edges.push_back(span_line(v[static_cast<size_t>(i)], v[static_cast<size_t>(j)]));
            t.edge_vertices[static_cast<size_t>(k)] = {i, j};
            ++k;
        }
    return t;
}

bool line_meets_curve(const EllipticCurveModel& curve, const ProjLine& l) {
    auto q1 = curve.f1.restrict_to(l);
    auto q2 = curve.f2.restrict_to(l);
    auto all_zero = [](const std::array<Rational, 3>& q) {
        return q[0] == 0 && q[1] == 0 && q[2] == 0;
    };
    // Line inside one quadric of the pencil: the restriction of the other
    // (nonzero) binary quadratic always has projective roots, and those roots
    // lie on both quadrics, hence on C.
    if (all_zero(q1) || all_zero(q2)) return true;
    // Resultant of two binary quadratics at formal degree (2, 2): vanishes iff
    // they share a root of P^1 (including at (1:0)).
    const Rational &a0 = q1[0], &a1 = q1[1], &a2 = q1[2];
    const Rational &b0 = q2[0], &b1 = q2[1], &b2 = q2[2];
    RatMatrix s(4, 4);
    Rational rows[2][3] = {{a0, a1, a2}, {b0, b1, b2}};
    for (int r = 0; r < 2; ++r)
        for (int off = 0; off < 2; ++off)
            for (int c = 0; c < 3; ++c) s(2 * r + off, off + c) = rows[r][c];
    return s.det() == 0;
}

} // namespace galois
