#ifndef GALOIS_FUNCTION_FIELD_HPP
#define GALOIS_FUNCTION_FIELD_HPP

#include <array>
#include <utility>

#include "galois/curve.hpp"
#include "galois/poly.hpp"

namespace galois {

// Element a(x) + b(x) y of k(x)[y] / (y^2 - s(x)), s = 4x^3 + px + q.
// The relation y^2 -> s is applied eagerly, so (a, b) is a canonical form and
// equality is two rational-function comparisons.
template <class F>
struct CurveFn {
    RationalFunction<F> a, b;
    Polynomial<F> s; // the Weierstrass cubic of the ambient curve

    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    bool is_constant() const { return b.is_zero() && a.is_constant(); }

    static CurveFn constant(F v, Polynomial<F> s) {
        return {RationalFunction<F>::constant(std::move(v)), RationalFunction<F>(), std::move(s)};
    }
    static CurveFn x(Polynomial<F> s) {
        return {RationalFunction<F>::x(), RationalFunction<F>(), std::move(s)};
    }
    static CurveFn y(Polynomial<F> s) {
        return {RationalFunction<F>(), RationalFunction<F>::constant(F(1)), std::move(s)};
    }

    friend CurveFn operator+(const CurveFn& u, const CurveFn& v) {
        return {u.a + v.a, u.b + v.b, u.s};
    }
    friend CurveFn operator-(const CurveFn& u, const CurveFn& v) {
        return {u.a - v.a, u.b - v.b, u.s};
    }
    friend CurveFn operator-(const CurveFn& u) { return {-u.a, -u.b, u.s}; }
    friend CurveFn operator*(const CurveFn& u, const CurveFn& v) {
        RationalFunction<F> sf(u.s);
        return {u.a * v.a + u.b * v.b * sf, u.a * v.b + u.b * v.a, u.s};
    }
    CurveFn inverse() const {
        RationalFunction<F> sf(s);
        RationalFunction<F> n = a * a - b * b * sf; // the norm; zero only for the zero element
        if (n.is_zero()) throw degenerate_function("inverse of zero curve function");
        return {a / n, -b / n, s};
    }
    friend CurveFn operator/(const CurveFn& u, const CurveFn& v) { return u * v.inverse(); }

    friend bool operator==(const CurveFn& u, const CurveFn& v) {
        return ratfunc_equals(u.a, v.a) && ratfunc_equals(u.b, v.b);
    }
    friend bool operator!=(const CurveFn& u, const CurveFn& v) { return !(u == v); }

    template <class T>
    T eval(const T& xv, const T& yv) const {
        return a.template eval<T>(xv) + b.template eval<T>(xv) * yv;
    }
};

using CurveFunction = CurveFn<Rational>;
using GaussCurveFn = CurveFn<GaussRational>;

// p(f) computed in the function field (Horner); needed to substitute a
// CurveFn for x in a rational function.
template <class F>
CurveFn<F> compose(const Polynomial<F>& p, const CurveFn<F>& f) {
    CurveFn<F> acc = CurveFn<F>::constant(F(0), f.s);
    for (int k = p.degree(); k >= 0; --k) {
        acc = acc * f + CurveFn<F>::constant(p.coeff(k), f.s);
    }
    return acc;
}

template <class F>
CurveFn<F> compose(const RationalFunction<F>& r, const CurveFn<F>& f) {
    CurveFn<F> den = compose(r.den(), f);
    if (den.is_zero()) throw degenerate_function("substitution hit an identically-zero denominator");
    return compose(r.num(), f) / den;
}

// Pullback of one of the four involutions sigma_0..sigma_3 on the function
// field: sigma_0^*(x) = x, sigma_0^*(y) = -y, and for i >= 1
// sigma_i^*(x) = a_i/(x - e_i) + e_i, sigma_i^*(y) = a_i/(x - e_i)^2 y.
struct InvolutionPullback {
    int index; // 0..3
    CurveFunction x_image;
    CurveFunction y_image;
};

InvolutionPullback involution_pullback(const EllipticCurveModel& curve, int index);

// Substitutes (x_image, y_image) for (x, y) in f and canonicalizes.
CurveFunction pullback(const InvolutionPullback& sigma, const CurveFunction& f);

// One of the six V4 subgroups <sigma_i, sigma_j>, 0 <= i < j <= 3.
struct V4GroupId {
    int i, j;
};

// Dual coefficient vectors of the two planes cutting the Galois line paired
// with <sigma_i, sigma_j>: {Y + c_i X, Z - e_i X} for (0, i) and
// {c_k X - Y + 2 e_k Z, W} for (i, j) with i, j >= 1 and k the third index.
std::pair<std::array<Rational, 4>, std::array<Rational, 4>> v4_plane_pair(
    const EllipticCurveModel& curve, const V4GroupId& g);

// Linear form evaluated on the embedding (1 : x^2 : x : y), as a curve function.
CurveFunction plane_on_embedding(const EllipticCurveModel& curve, const std::array<Rational, 4>& h);

// Certified generator of the fixed field of <sigma_i, sigma_j>:
// (x^2 + c_i)/(x - e_i) for groups containing sigma_0, and
// y/(c_k + 2 e_k x - x^2) otherwise. Construction verifies invariance under
// both generators and consistency with the plane-equation ratio of the
// corresponding Galois line (literal for the first family, reciprocal for the
// second).
CurveFunction fixed_generator(const EllipticCurveModel& curve, const V4GroupId& g);

// Degree [k(C) : k(f)] via the pole divisor of f = (A + B y)/D.
int covering_degree(const EllipticCurveModel& curve, const CurveFunction& f);

} // namespace galois

#endif
