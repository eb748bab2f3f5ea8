#ifndef GALOIS_TORUS_HPP
#define GALOIS_TORUS_HPP

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "galois/curve.hpp"
#include "galois/rational.hpp"

namespace galois {

using Complex = std::complex<double>;

// Exact translation part alpha = r + s*omega, reduced mod Z^2 to [0,1)^2.
struct LatticeFraction {
    Rational r{0}, s{0};

    LatticeFraction() = default;
    LatticeFraction(Rational r_, Rational s_);

    bool is_zero() const { return r == 0 && s == 0; }
    friend LatticeFraction operator+(const LatticeFraction& a, const LatticeFraction& b) {
        return {a.r + b.r, a.s + b.s};
    }
    friend LatticeFraction operator-(const LatticeFraction& a) { return {-a.r, -a.s}; }
    friend bool operator==(const LatticeFraction& a, const LatticeFraction& b) {
        return a.r == b.r && a.s == b.s;
    }
    friend bool operator<(const LatticeFraction& a, const LatticeFraction& b) {
        if (a.r != b.r) return a.r < b.r;
        return a.s < b.s;
    }
    Complex value(const Complex& omega) const { return to_double(r) + to_double(s) * omega; }
    std::string to_string() const { return "(" + galois::to_string(r) + "," + galois::to_string(s) + ")"; }
};

// Multiplier eps with eps*L = L, encoded by its exact integer action on
// lattice coordinates: columns are the coordinates of eps*1 and eps*omega.
struct UnitMultiplier {
    std::array<int, 4> m{1, 0, 0, 1}; // row-major 2x2

    static UnitMultiplier identity() { return {}; }
    static UnitMultiplier minus_identity() { return {{-1, 0, 0, -1}}; }

    bool is_identity() const { return m == std::array<int, 4>{1, 0, 0, 1}; }
    bool is_minus_identity() const { return m == std::array<int, 4>{-1, 0, 0, -1}; }
    LatticeFraction apply(const LatticeFraction& a) const {
        return {Rational(m[0]) * a.r + Rational(m[1]) * a.s,
                Rational(m[2]) * a.r + Rational(m[3]) * a.s};
    }
    friend UnitMultiplier operator*(const UnitMultiplier& a, const UnitMultiplier& b) {
        return {{a.m[0] * b.m[0] + a.m[1] * b.m[2], a.m[0] * b.m[1] + a.m[1] * b.m[3],
                 a.m[2] * b.m[0] + a.m[3] * b.m[2], a.m[2] * b.m[1] + a.m[3] * b.m[3]}};
    }
    friend bool operator==(const UnitMultiplier& a, const UnitMultiplier& b) { return a.m == b.m; }
    friend bool operator<(const UnitMultiplier& a, const UnitMultiplier& b) { return a.m < b.m; }
    int order() const;
};

// Affine automorphism z -> eps z + alpha of C/L.
struct TorusAutomorphism {
    UnitMultiplier eps;
    LatticeFraction alpha;

    static TorusAutomorphism identity() { return {UnitMultiplier::identity(), {}}; }
    // (e1, a1) o (e2, a2) = (e1 e2, e1 a2 + a1)
    friend TorusAutomorphism operator*(const TorusAutomorphism& a, const TorusAutomorphism& b) {
        return {a.eps * b.eps, a.eps.apply(b.alpha) + a.alpha};
    }
    friend bool operator==(const TorusAutomorphism& a, const TorusAutomorphism& b) {
        return a.eps == b.eps && a.alpha == b.alpha;
    }
    friend bool operator<(const TorusAutomorphism& a, const TorusAutomorphism& b) {
        if (!(a.eps == b.eps)) return a.eps < b.eps;
        return a.alpha < b.alpha;
    }
    bool is_identity() const { return eps.is_identity() && alpha.is_zero(); }
    bool is_translation() const { return eps.is_identity(); }
    // reflection = involution with fixed points (the eps = -1 elements)
    bool is_reflection() const { return eps.is_minus_identity(); }
    int order() const;
    std::string to_string() const;
};

// The four standard involutions: sigma_0(z) = -z and sigma_i(z) = -z + eta_i with
// eta_1 = 1/2, eta_2 = omega/2, eta_3 = (1 + omega)/2.
TorusAutomorphism sigma_involution(int index);
// Index 0..3 if t is one of the four sigma_i, nullopt otherwise.
std::optional<int> sigma_index(const TorusAutomorphism& t);

struct AutomorphismGroup {
    enum class Kind { V4, Z4, Other };
    std::vector<TorusAutomorphism> elements; // sorted, closed, order 4
    Kind kind = Kind::Other;
    std::string label;
    std::optional<std::array<int, 2>> v4_indices; // (i, j) of <sigma_i, sigma_j>
    std::optional<std::array<int, 2>> z4_mn;      // alpha = (m + n omega)/4 of the order-4 generator

    bool contains(const TorusAutomorphism& t) const;
    // The order-4 generator for Z4 groups.
    std::optional<TorusAutomorphism> generator() const;
};

AutomorphismGroup make_group(std::vector<TorusAutomorphism> elements);
// <sigma_i, sigma_j>
AutomorphismGroup v4_group(int i, int j);
// <z -> i z + (m + n i)/4> on a square lattice
AutomorphismGroup z4_group(int m, int n);

// (diamond): Sum eps_t = 0 (so orbit sums are argument-independent and Abel
// gives orbit ~ 4 P0'), Sum alpha_t = 0 mod L, and some eps != 1 (rational
// quotient).
bool diamond_check(const AutomorphismGroup& g);

std::vector<TorusAutomorphism> group_intersection(const AutomorphismGroup& g1,
                                                  const AutomorphismGroup& g2);

// The lattice Z + Z omega with its exact symmetry data and numeric invariants.
struct ComplexLattice {
    Complex omega;
    int symmetry_order = 2;                       // 2, 4 or 6
    std::optional<UnitMultiplier> unit_generator; // generator of the unit action, order = symmetry_order
    Complex g2{0}, g3{0};                         // Eisenstein invariants of Z + Z omega
};

ComplexLattice make_lattice(Complex omega);

// All order-4 subgroups of {z -> eps z + alpha : alpha in (1/4)L/L} passing
// the diamond condition; 6 for symmetry order 2 and 6, 14 for order 4.
std::vector<AutomorphismGroup> enumerate_galois_groups(const ComplexLattice& lat);
// Same enumeration from the exact symmetry order alone.
std::vector<AutomorphismGroup> enumerate_galois_groups_for_order(int symmetry_order);

// ---- Weierstrass p-function ----

// Evaluation lattice: Z w1 + Z w2 with invariants (g2, g3). Evaluation is by
// Laurent series near 0 plus repeated duplication.
struct WpLattice {
    Complex w1, w2;
    Complex g2, g3;
    double min_vector; // length of the shortest nonzero lattice vector
};

WpLattice make_wp_lattice(Complex w1, Complex w2, Complex g2, Complex g3);

struct WpValue {
    Complex wp;
    Complex wp_prime;
};

// z is reduced mod the lattice; inputs within 1e-12 of a lattice point are
// rejected as poles. Relative accuracy ~1e-12 in practice.
WpValue wp_eval(const WpLattice& lat, Complex z);
// On Z + Z omega with Eisenstein invariants.
WpValue wp_eval(const ComplexLattice& lat, Complex z);

// The classical addition formulas for p and p'; used as a cross-check oracle.
WpValue wp_addition_formula(const WpValue& u, const WpValue& v);

// Arithmetic-geometric-mean periods of y^2 = 4(x-e1)(x-e2)(x-e3) for real
// rational roots, plus the half-period fraction carried by each user root.
struct CurveTorusBridge {
    WpLattice lattice;                                   // basis (2 w1, 2 w3), g2 = -p, g3 = -q
    Complex tau;                                         // (2 w3)/(2 w1), on the imaginary axis
    std::array<LatticeFraction, 3> root_half_period;     // user root index -> eta fraction
    std::array<double, 3> roots;                         // user order, as doubles
};

CurveTorusBridge make_bridge(const EllipticCurveModel& curve);

// Embedded point P'_z = (1 : p^2 : p : p') for z given in lattice coordinates
// u + v tau (units of the normalized basis). z = 0 returns the
// hyperosculation point (0:1:0:0) exactly.
Eigen::Vector4cd torus_point(const CurveTorusBridge& bridge, Complex z_lattice);
Eigen::Vector4cd torus_point(const ComplexLattice& lat, Complex z_lattice);

// Sum of alphas lies in L, within tol in lattice coordinates. alphas are
// complex numbers, the lattice is Z + Z omega.
bool abel_equivalent(const std::vector<Complex>& alphas, Complex omega, double tol = 1e-8);

// beta with abel_equivalent({a + beta}) true: beta = -sum(alphas)/4.
Complex normalize_divisor(const std::vector<Complex>& alphas);

} // namespace galois

#endif
