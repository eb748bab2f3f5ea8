#include "galois/function_field.hpp"

#include <algorithm>

namespace galois {

InvolutionPullback involution_pullback(const EllipticCurveModel& curve, int index) {
    if (index < 0 || index > 3) throw invalid_input("involution index must be 0..3");
    RatPoly s = curve.weierstrass_cubic();
    if (index == 0) {
        CurveFunction xi = CurveFunction::x(s);
        CurveFunction yi = CurveFunction::y(s);
        yi.b = -yi.b;
        return {0, xi, yi};
    }
    const Rational& e = curve.e[static_cast<size_t>(index - 1)];
    const Rational& a = curve.a[static_cast<size_t>(index - 1)];
    const Rational& c = curve.c[static_cast<size_t>(index - 1)];
    RatPoly x_min_e({-e, Rational(1)});
    // (e x + c)/(x - e); the numerator uses c = a - e^2.
    RatFunc xi(RatPoly({c, e}), x_min_e);
    RatFunc yb(RatPoly({a}), x_min_e * x_min_e);
    CurveFunction x_image{xi, RatFunc(), s};
    CurveFunction y_image{RatFunc(), yb, s};
    return {index, x_image, y_image};
}

CurveFunction pullback(const InvolutionPullback& sigma, const CurveFunction& f) {
    if (!(sigma.x_image.s == f.s))
        throw invalid_input("pullback: function and involution live on different curves");
    // The four sigma_i all have x-images inside k(x); compose there directly
    // and fall back to full function-field Horner for anything else.
    CurveFunction ax = sigma.x_image.b.is_zero()
                           ? CurveFunction{compose(f.a, sigma.x_image.a), RatFunc(), f.s}
                           : compose(f.a, sigma.x_image);
    CurveFunction fb = sigma.x_image.b.is_zero()
                           ? CurveFunction{compose(f.b, sigma.x_image.a), RatFunc(), f.s}
                           : compose(f.b, sigma.x_image);
    return ax + fb * sigma.y_image;
}

std::pair<std::array<Rational, 4>, std::array<Rational, 4>> v4_plane_pair(
    const EllipticCurveModel& curve, const V4GroupId& g) {
    if (!(g.i >= 0 && g.i < g.j && g.j <= 3))
        throw unsupported_group("group must be <sigma_i, sigma_j> with 0 <= i < j <= 3");
    if (g.i == 0) {
        const Rational& c = curve.c[static_cast<size_t>(g.j - 1)];
        const Rational& e = curve.e[static_cast<size_t>(g.j - 1)];
        return {{c, Rational(1), Rational(0), Rational(0)},   // Y + c_i X
                {-e, Rational(0), Rational(1), Rational(0)}}; // Z - e_i X
    }
    int k = 6 - g.i - g.j;
    const Rational& ck = curve.c[static_cast<size_t>(k - 1)];
    const Rational& ek = curve.e[static_cast<size_t>(k - 1)];
    return {{ck, Rational(-1), 2 * ek, Rational(0)},                       // c_k X - Y + 2 e_k Z
            {Rational(0), Rational(0), Rational(0), Rational(1)}};         // W
}

CurveFunction plane_on_embedding(const EllipticCurveModel& curve, const std::array<Rational, 4>& h) {
    RatPoly s = curve.weierstrass_cubic();
    // h0 + h1 x^2 + h2 x + h3 y
    RatFunc a(RatPoly({h[0], h[2], h[1]}));
    RatFunc b(RatPoly({h[3]}));
    return {a, b, s};
}

CurveFunction fixed_generator(const EllipticCurveModel& curve, const V4GroupId& g) {
    if (!(g.i >= 0 && g.i < g.j && g.j <= 3))
        throw unsupported_group("group must be one of the six <sigma_i, sigma_j>");
    RatPoly s = curve.weierstrass_cubic();
    CurveFunction gen = [&] {
        if (g.i == 0) {
            const Rational& c = curve.c[static_cast<size_t>(g.j - 1)];
            const Rational& e = curve.e[static_cast<size_t>(g.j - 1)];
            // (x^2 + c_i)/(x - e_i); note the denominator root e_i, not c_i.
            return CurveFunction{RatFunc(RatPoly({c, Rational(0), Rational(1)}), RatPoly({-e, Rational(1)})),
                                 RatFunc(), s};
        }
        int k = 6 - g.i - g.j;
        const Rational& ck = curve.c[static_cast<size_t>(k - 1)];
        const Rational& ek = curve.e[static_cast<size_t>(k - 1)];
        // y / (c_k + 2 e_k x - x^2)
        return CurveFunction{RatFunc(),
                             RatFunc(RatPoly({Rational(1)}), RatPoly({ck, 2 * ek, Rational(-1)})), s};
    }();
    // Certificate half 1: invariance under both generators of the group.
    for (int idx : {g.i, g.j}) {
        auto sigma = involution_pullback(curve, idx);
        if (!(pullback(sigma, gen) == gen))
            throw certificate_failure("fixed-field generator not invariant under sigma_" +
                                      std::to_string(idx));
    }
    // Certificate half 2: agreement with the plane-equation ratio of the
    // paired Galois line on the embedding. For the <sigma_i, sigma_j> family
    // the printed generator is the reciprocal of that ratio (same field).
    auto planes = v4_plane_pair(curve, g);
    CurveFunction ratio = plane_on_embedding(curve, planes.first) /
                          plane_on_embedding(curve, planes.second);
    if (!(ratio == gen || ratio == gen.inverse()))
        throw certificate_failure("generator does not match the Galois-line plane ratio");
    return gen;
}

int covering_degree(const EllipticCurveModel& curve, const CurveFunction& f) {
    if (f.is_constant() || f.is_zero()) throw invalid_input("covering degree of a constant function");
    if (!(f.s == curve.weierstrass_cubic()))
        throw invalid_input("covering_degree: function not on this curve");
    if (f.b.is_zero()) {
        // f in k(x): [k(C):k(x)] * [k(x):k(f)] = 2 * max(deg num, deg den).
        return 2 * std::max(f.a.num().degree(), f.a.den().degree());
    }
    // Common-denominator form f = (A + B y)/D with gcd(A, B, D) = 1.
    RatPoly ad = f.a.den(), bd = f.b.den();
    RatPoly g = gcd(ad, bd);
    RatPoly d = (ad * bd);
    d = RatPoly::divmod(d, g).first;
    RatPoly a_num = f.a.num() * RatPoly::divmod(d, ad).first;
    RatPoly b_num = f.b.num() * RatPoly::divmod(d, bd).first;
    RatPoly common = gcd(gcd(a_num, b_num), d);
    if (common.degree() > 0) {
        a_num = RatPoly::divmod(a_num, common).first;
        b_num = RatPoly::divmod(b_num, common).first;
        d = RatPoly::divmod(d, common).first;
    }
    // Fiber of a generic value t: roots of (tD - A)^2 - B^2 s as a polynomial
    // in x, minus the t-independent spurious part gcd(D^2, AD, A^2 - B^2 s).
    RatPoly norm = a_num * a_num - b_num * b_num * f.s;
    RatPoly spur = gcd(gcd(d * d, a_num * d), norm);
    int deg = std::max(2 * d.degree(), norm.degree());
    if (!a_num.is_zero()) deg = std::max(deg, a_num.degree() + d.degree());
    return deg - std::max(spur.degree(), 0);
}

} // namespace galois
