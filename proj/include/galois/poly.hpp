#ifndef GALOIS_POLY_HPP
#define GALOIS_POLY_HPP

#include <algorithm>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "galois/errors.hpp"
#include "galois/rational.hpp"

namespace galois {

// Degree of the zero polynomial. A distinguished "minus infinity" sentinel,
// never -1, so degree arithmetic cannot silently produce a plausible value.
inline constexpr int kDegreeMinusInfinity = std::numeric_limits<int>::min();

// Dense univariate polynomial over a field F, coefficients lowest degree
// first. Everything in this project has degree <= ~16, so dense storage and
// O(n^2) products are the right trade.
template <class F>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<F> coeffs) : c_(coeffs) { trim(); }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(F v) { return Polynomial({std::move(v)}); }
    static Polynomial x() { return Polynomial({F(0), F(1)}); }
    // c * x^k
    static Polynomial monomial(F c, int k) {
        std::vector<F> v(static_cast<size_t>(k) + 1, F(0));
        v.back() = std::move(c);
        return Polynomial(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return c_.empty() ? kDegreeMinusInfinity : static_cast<int>(c_.size()) - 1; }
    const F& leading() const {
        if (c_.empty()) throw invalid_input("leading coefficient of zero polynomial");
        return c_.back();
    }
    F coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return F(0);
        return c_[static_cast<size_t>(k)];
    }
    const std::vector<F>& coeffs() const { return c_; }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<F> v(std::max(a.c_.size(), b.c_.size()), F(0));
        for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
        return Polynomial(std::move(v));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<F> v(std::max(a.c_.size(), b.c_.size()), F(0));
        for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
        return Polynomial(std::move(v));
    }
    friend Polynomial operator-(const Polynomial& a) {
        std::vector<F> v = a.c_;
        for (auto& x : v) x = -x;
        return Polynomial(std::move(v));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        std::vector<F> v(a.c_.size() + b.c_.size() - 1, F(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(v));
    }
    friend Polynomial operator*(const F& s, const Polynomial& a) {
        if (galois::is_zero(s)) return zero();
        std::vector<F> v = a.c_;
        for (auto& x : v) x = s * x;
        return Polynomial(std::move(v));
    }
    friend Polynomial operator*(const Polynomial& a, const F& s) { return s * a; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
    Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
    Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

    template <class T>
    T eval(const T& x) const {
        T acc = T(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + T(c_[i]);
        return acc;
    }
    // Horner over a value type that F converts into (double, complex, F itself).
    F operator()(const F& x) const { return eval<F>(x); }

    Polynomial derivative() const {
        if (c_.size() <= 1) return zero();
        std::vector<F> v(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = F(static_cast<int>(i)) * c_[i];
        return Polynomial(std::move(v));
    }

    // Euclidean division; remainder has degree < deg(divisor).
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw invalid_input("polynomial division by zero");
        Polynomial q, r = a;
        std::vector<F> qc;
        if (a.degree() >= b.degree()) qc.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, F(0));
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int k = r.degree() - b.degree();
            F c = r.leading() / b.leading();
            qc[static_cast<size_t>(k)] = c;
            r -= monomial(c, k) * b;
        }
        return {Polynomial(std::move(qc)), r};
    }

    Polynomial monic() const {
        if (is_zero()) return zero();
        F inv = F(1) / leading();
        return inv * *this;
    }

    std::string to_string(const std::string& var = "x") const;

private:
    void trim() {
        while (!c_.empty() && galois::is_zero(c_.back())) c_.pop_back();
    }
    std::vector<F> c_;
};

template <class F>
inline Polynomial<F> gcd(Polynomial<F> a, Polynomial<F> b) {
    while (!b.is_zero()) {
        auto [q, r] = Polynomial<F>::divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

// Resultant via fraction-free (Bareiss) elimination of the Sylvester matrix.
// Degrees here are tiny, so cubic exact elimination is plenty.
template <class F>
F poly_resultant(const Polynomial<F>& f, const Polynomial<F>& g) {
    if (f.is_zero() && g.is_zero()) throw invalid_input("resultant of two zero polynomials");
    if (f.is_zero() || g.is_zero()) return F(0);
    int m = f.degree(), n = g.degree();
    if (m == 0 && n == 0) return F(1);
    // Sylvester matrix is (m+n) x (m+n); empty only when both are constants.
    int N = m + n;
    std::vector<std::vector<F>> a(static_cast<size_t>(N), std::vector<F>(static_cast<size_t>(N), F(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) a[i][i + j] = f.coeff(m - j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) a[n + i][i + j] = g.coeff(n - j);
    F prev = F(1);
    int sign = 1;
    for (int k = 0; k < N - 1; ++k) {
        if (is_zero(a[k][k])) {
            int piv = -1;
            for (int r = k + 1; r < N; ++r)
                if (!is_zero(a[r][k])) { piv = r; break; }
            if (piv < 0) return F(0);
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < N; ++i) {
            for (int j = k + 1; j < N; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            a[i][k] = F(0);
        }
        prev = a[k][k];
    }
    F det = a[N - 1][N - 1];
    return sign < 0 ? -det : det;
}

// Rational function num/den over F, stored with gcd(num, den) = 1 and monic
// denominator so equality of normal forms is literal.
template <class F>
class RationalFunction {
public:
    RationalFunction() : num_(Polynomial<F>::zero()), den_(Polynomial<F>::constant(F(1))) {}
    RationalFunction(Polynomial<F> num, Polynomial<F> den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw invalid_input("rational function with zero denominator");
        normalize();
    }
    explicit RationalFunction(Polynomial<F> num)
        : num_(std::move(num)), den_(Polynomial<F>::constant(F(1))) {}
    static RationalFunction constant(F v) { return RationalFunction(Polynomial<F>::constant(std::move(v))); }
    static RationalFunction x() { return RationalFunction(Polynomial<F>::x()); }

    const Polynomial<F>& num() const { return num_; }
    const Polynomial<F>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a) {
        RationalFunction r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw invalid_input("division by zero rational function");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
    RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
    RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }
    RationalFunction& operator/=(const RationalFunction& b) { return *this = *this / b; }

    template <class T>
    T eval(const T& x) const {
        return num_.template eval<T>(x) / den_.template eval<T>(x);
    }

    std::string to_string(const std::string& var = "x") const {
        if (den_ == Polynomial<F>::constant(F(1))) return num_.to_string(var);
        return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
    }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = Polynomial<F>::constant(F(1));
            return;
        }
        auto g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = Polynomial<F>::divmod(num_, g).first;
            den_ = Polynomial<F>::divmod(den_, g).first;
        }
        F lead = den_.leading();
        if (!(lead == F(1))) {
            F inv = F(1) / lead;
            num_ = inv * num_;
            den_ = inv * den_;
        }
    }
    Polynomial<F> num_, den_;
};

// Equality in the function field, by cross-multiplication of normal forms.
template <class F>
bool ratfunc_equals(const RationalFunction<F>& f, const RationalFunction<F>& g) {
    return f.num() * g.den() == g.num() * f.den();
}

// P(n/d) as a rational function: sum p_i n^i d^(deg-i) over d^deg.
template <class F>
RationalFunction<F> compose(const Polynomial<F>& p, const RationalFunction<F>& arg) {
    if (p.is_zero()) return RationalFunction<F>();
    int dg = p.degree();
    Polynomial<F> numpow = Polynomial<F>::constant(F(1));
    std::vector<Polynomial<F>> npows(static_cast<size_t>(dg) + 1);
    for (int i = 0; i <= dg; ++i) {
        npows[static_cast<size_t>(i)] = numpow;
        numpow *= arg.num();
    }
    Polynomial<F> denpow = Polynomial<F>::constant(F(1));
    Polynomial<F> acc = Polynomial<F>::zero();
    for (int i = dg; i >= 0; --i) {
        acc += p.coeff(i) * (npows[static_cast<size_t>(i)] * denpow);
        denpow *= arg.den();
    }
    Polynomial<F> dn = Polynomial<F>::constant(F(1));
    for (int i = 0; i < dg; ++i) dn *= arg.den();
    return RationalFunction<F>(acc, dn);
}

template <class F>
RationalFunction<F> compose(const RationalFunction<F>& f, const RationalFunction<F>& arg) {
    RationalFunction<F> n = compose(f.num(), arg);
    RationalFunction<F> d = compose(f.den(), arg);
    if (d.is_zero()) throw degenerate_function("substitution produced identically-zero denominator");
    return n / d;
}

template <class F>
std::string Polynomial<F>::to_string(const std::string& var) const {
    using galois::to_string;
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        F c = coeff(k);
        if (galois::is_zero(c)) continue;
        if (!out.empty()) out += " + ";
        std::string cs = to_string(c);
        if (k == 0) {
            out += cs;
        } else {
            std::string xs = (k == 1) ? var : var + "^" + std::to_string(k);
            if (cs == "1") out += xs;
            else if (cs == "-1") out += "-" + xs;
            else out += cs + "*" + xs;
        }
    }
    return out;
}

using RatPoly = Polynomial<Rational>;
using RatFunc = RationalFunction<Rational>;
using GaussPoly = Polynomial<GaussRational>;
using GaussFunc = RationalFunction<GaussRational>;

} // namespace galois

#endif
