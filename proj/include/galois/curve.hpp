#ifndef GALOIS_CURVE_HPP
#define GALOIS_CURVE_HPP

#include <array>
#include <optional>
#include <vector>

#include "galois/projective.hpp"

namespace galois {

// The elliptic quartic C in P^3: the curve y^2 = 4(x-e1)(x-e2)(x-e3)
// embedded by (x, y) -> (1 : x^2 : x : y), cut out by the quadric pencil
// spanned by F1 = XY - Z^2 and F2 = 4YZ + pXZ + qX^2 - W^2.
struct EllipticCurveModel {
    std::array<Rational, 3> e;       // roots, e1 + e2 + e3 = 0, pairwise distinct
    Rational p, q;                   // 4(x-e1)(x-e2)(x-e3) = 4x^3 + px + q
    std::array<Rational, 3> c;       // c_i = e_i^2 + e_j e_k
    std::array<Rational, 3> a;       // a_i = (e_i - e_j)(e_i - e_k)
    std::array<Rational, 3> b;       // b_i = -4 e_i (finite singular pencil parameters)
    Rational j_classical;            // 1728 g2^3 / (g2^3 - 27 g3^2), g2 = -p, g3 = -q
    bool is_lemniscatic;             // j_classical == 1728 (square period lattice)
    QuadricForm f1, f2;

    RatPoly weierstrass_cubic() const; // 4x^3 + px + q
    RatPoly pencil_cubic() const;      // b^3 + 4pb - 16q
};

EllipticCurveModel curve_from_roots(const Rational& e1, const Rational& e2, const Rational& e3);

// Factors 4x^3 + px + q over Q; rejects curves whose roots are irrational.
EllipticCurveModel curve_from_pq(const Rational& p, const Rational& q);

// (x, y) with y^2 = 4x^3 + px + q exactly -> (1 : x^2 : x : y).
ProjPoint embed_point(const EllipticCurveModel& curve, const Rational& x, const Rational& y);

// One singular member of the pencil {b F1 + F2}: b_value empty means the
// b = infinity member, which is F1 itself. Rank is 3 and vertex is the unique
// singular point.
struct ConeRecord {
    std::optional<Rational> b_value;
    QuadricForm quadric;
    ProjPoint vertex;
    int index; // 0..3, matching Q_index
};

// Exactly four singular pencil members: F1 (vertex Q0 = (0:0:0:1)) and the
// three members b_i = -4 e_i with vertices Q_i = (1 : -c_i : e_i : 0).
std::vector<ConeRecord> singular_pencil_members(const EllipticCurveModel& curve);

struct Tetrahedron {
    std::array<ProjPoint, 4> vertices; // Q0..Q3
    std::vector<ProjLine> edges;       // all 6 pairs, order (0,1),(0,2),(0,3),(1,2),(1,3),(2,3)
    std::array<std::array<int, 2>, 6> edge_vertices;
    Rational vertex_determinant;       // det of the 4x4 coordinate matrix, rows Q0..Q3
    Rational sub_determinant;          // det of the (1 : -c_i : e_i) rows; equals
                                       // 2(e1-e2)(e2-e3)(e3-e1)
};

Tetrahedron tetrahedron(const EllipticCurveModel& curve);

// true iff the line meets C, decided exactly: restrict F1, F2 to the line and
// test whether the two binary quadratics share a projective root.
bool line_meets_curve(const EllipticCurveModel& curve, const ProjLine& l);

} // namespace galois

#endif
