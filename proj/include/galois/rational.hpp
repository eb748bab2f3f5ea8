#ifndef GALOIS_RATIONAL_HPP
#define GALOIS_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>

#include "galois/errors.hpp"

namespace galois {

using Integer = boost::multiprecision::cpp_int;

// Exact scalar of the whole library: arbitrary-precision rational, always in
// lowest terms with positive denominator (cpp_rational keeps that canonical
// form on every operation).
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }

// Serialized form used everywhere: "num/den", the "/den" omitted when den = 1.
inline std::string to_string(const Rational& q) {
    if (den(q) == 1) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

// Parses "a", "-a/b", "a.bc" (finite decimal) into an exact rational.
inline Rational parse_rational(const std::string& text) {
    std::string s = text;
    if (s.empty()) throw invalid_input("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            Integer n(s.substr(0, slash));
            Integer d(s.substr(slash + 1));
            if (d == 0) throw invalid_input("zero denominator in '" + text + "'");
            return Rational(n, d);
        }
        auto dot = s.find('.');
        if (dot == std::string::npos) return Rational(Integer(s));
        std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
        bool neg = !head.empty() && head[0] == '-';
        if (head == "-" || head.empty()) head = "0";
        Integer ipart(head);
        Integer scale = 1;
        for (size_t i = 0; i < tail.size(); ++i) scale *= 10;
        Integer frac = tail.empty() ? Integer(0) : Integer(tail);
        Rational r = Rational(boost::multiprecision::abs(ipart)) + Rational(frac, scale);
        return neg || ipart < 0 ? -r : r;
    } catch (const std::exception& e) {
        throw invalid_input("cannot parse rational '" + text + "'");
    }
}

inline bool is_integer(const Rational& q) { return den(q) == 1; }

// true iff q is the square of a rational (exact integer sqrt on both parts).
inline std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    Integer n = num(q), d = den(q);
    Integer sn = boost::multiprecision::sqrt(n), sd = boost::multiprecision::sqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return Rational(sn, sd);
}

// Nearest rational to x with denominator at most max_den (continued fractions).
// Returns nullopt when x is not finite or the best approximant misses x by
// more than `tol`.
inline std::optional<Rational> rationalize(double x, std::uint64_t max_den = 1000000ull,
                                           double tol = 1e-7) {
    if (!std::isfinite(x)) return std::nullopt;
    bool neg = x < 0;
    double v = std::fabs(x);
    std::uint64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = v;
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(frac);
        if (fl > 9e18) return std::nullopt;
        std::uint64_t a = static_cast<std::uint64_t>(fl);
        std::uint64_t p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den || q2 == 0) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double rem = frac - fl;
        if (rem < 1e-15) break;
        frac = 1.0 / rem;
    }
    if (q1 == 0) return std::nullopt;
    Rational r{Integer(p1), Integer(q1)};
    if (neg) r = -r;
    if (std::fabs(to_double(r) - x) > tol * std::max(1.0, std::fabs(x))) return std::nullopt;
    return r;
}

// Element of Q(i). Used for the exact side of Z4 certificates; the purely
// rational case is just im = 0.
struct GaussRational {
    Rational re{0};
    Rational im{0};

    GaussRational() = default;
    GaussRational(Rational r) : re(std::move(r)) {}          // NOLINT(google-explicit-constructor)
    GaussRational(int r) : re(r) {}                          // NOLINT(google-explicit-constructor)
    GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
    friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussRational operator/(const GaussRational& a, const GaussRational& b) {
        Rational n = b.re * b.re + b.im * b.im;
        if (n == 0) throw invalid_input("division by zero in Q(i)");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    GaussRational& operator+=(const GaussRational& b) { return *this = *this + b; }
    GaussRational& operator-=(const GaussRational& b) { return *this = *this - b; }
    GaussRational& operator*=(const GaussRational& b) { return *this = *this * b; }
    GaussRational& operator/=(const GaussRational& b) { return *this = *this / b; }
    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

    GaussRational conj() const { return {re, -im}; }
    std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }
};

inline GaussRational gauss_i() { return {Rational(0), Rational(1)}; }

inline std::string to_string(const GaussRational& g) {
    if (g.im == 0) return to_string(g.re);
    std::string im = to_string(g.im) + "*i";
    if (g.re == 0) return im;
    return to_string(g.re) + (g.im > 0 ? "+" : "") + im;
}

inline std::optional<GaussRational> rationalize(std::complex<double> z,
                                                std::uint64_t max_den = 1000000ull,
                                                double tol = 1e-7) {
    auto re = rationalize(z.real(), max_den, tol);
    auto im = rationalize(z.imag(), max_den, tol);
    if (!re || !im) return std::nullopt;
    return GaussRational{*re, *im};
}

// Field-trait helpers so the polynomial/matrix layers work over Q and Q(i).
inline bool is_zero(const Rational& q) { return q == 0; }
inline bool is_zero(const GaussRational& g) { return g.is_zero(); }
inline double abs_approx(const Rational& q) { return std::fabs(to_double(q)); }
inline double abs_approx(const GaussRational& g) { return std::abs(g.to_complex()); }

} // namespace galois

#endif
