#ifndef GALOIS_PROJECTIVE_HPP
#define GALOIS_PROJECTIVE_HPP

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "galois/linalg.hpp"
#include "galois/poly.hpp"
#include "galois/rational.hpp"

namespace galois {

// Point of P^3 with exact homogeneous coordinates. Canonical form divides by
// the first nonzero coordinate, so equality and serialization are literal.
class ProjPoint {
public:
    ProjPoint(Rational x, Rational y, Rational z, Rational w);
    explicit ProjPoint(std::array<Rational, 4> coords);

    const std::array<Rational, 4>& coords() const { return c_; }
    const Rational& operator[](int i) const { return c_[static_cast<size_t>(i)]; }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.c_ == b.c_; }
    friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }

    // Integer representative with content 1 and positive first entry; what the
    // reports print, e.g. (4:-1:2:0).
    std::array<Integer, 4> integer_coords() const;
    std::string to_string() const;
    Eigen::Vector4cd numeric() const;

private:
    std::array<Rational, 4> c_;
};

// Plane of P^3, dual coordinates, same canonicalization as points.
class ProjPlane {
public:
    ProjPlane(Rational a, Rational b, Rational c, Rational d);
    explicit ProjPlane(std::array<Rational, 4> coeffs);

    const std::array<Rational, 4>& coeffs() const { return c_; }
    const Rational& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
    Rational eval(const ProjPoint& p) const;
    bool contains(const ProjPoint& p) const { return eval(p) == 0; }

    friend bool operator==(const ProjPlane& a, const ProjPlane& b) { return a.c_ == b.c_; }
    friend bool operator!=(const ProjPlane& a, const ProjPlane& b) { return !(a == b); }
    std::string to_string() const;
    Eigen::Vector4cd numeric() const;

private:
    std::array<Rational, 4> c_;
};

// Line of P^3 carried in both representations at once: a spanning pair of
// points and a cutting pair of planes, kept consistent at construction. The
// source results alternate freely between "line through two points" and "line
// cut by two equations", and converting on demand would scatter sign bugs.
class ProjLine {
public:
    static ProjLine through(const ProjPoint& p, const ProjPoint& q);
    static ProjLine cut_by(const ProjPlane& h1, const ProjPlane& h2);
    // Assembles a line from both representations, verifying consistency
    // (every point on every plane) exactly.
    static ProjLine assemble(const ProjPoint& p, const ProjPoint& q, const ProjPlane& h1,
                             const ProjPlane& h2);

    const ProjPoint& point_a() const { return pts_[0]; }
    const ProjPoint& point_b() const { return pts_[1]; }
    const ProjPlane& plane_a() const { return pls_[0]; }
    const ProjPlane& plane_b() const { return pls_[1]; }

    bool contains(const ProjPoint& p) const;
    // Pluecker coordinates (p01,p02,p03,p12,p13,p23) from the point pair.
    std::array<Rational, 6> plucker() const;
    friend bool operator==(const ProjLine& a, const ProjLine& b);
    std::string to_string() const;

private:
    ProjLine(std::array<ProjPoint, 2> pts, std::array<ProjPlane, 2> pls)
        : pts_(std::move(pts)), pls_(std::move(pls)) {}
    std::array<ProjPoint, 2> pts_;
    std::array<ProjPlane, 2> pls_;
};

// span_line(P, Q): the unique line through two distinct points.
ProjLine span_line(const ProjPoint& p, const ProjPoint& q);

struct LineMeet {
    enum class Kind { Disjoint, Point, Equal } kind;
    std::optional<ProjPoint> point; // set iff kind == Point
};

LineMeet meet_lines(const ProjLine& l1, const ProjLine& l2);

// The unique plane containing l and a point off l.
ProjPlane plane_through(const ProjLine& l, const ProjPoint& p);

// Quadric surface as an exact symmetric 4x4 form.
class QuadricForm {
public:
    explicit QuadricForm(RatMatrix sym);
    static QuadricForm from_coeffs(const RatMatrix& sym) { return QuadricForm(sym); }

    const RatMatrix& sym() const { return m_; }
    Rational eval(const ProjPoint& p) const;
    Rational eval(const std::array<Rational, 4>& v) const;
    // F(M x) as a quadric: M^T A M.
    QuadricForm transformed(const RatMatrix& m) const;
    // Restriction to the line s*A + t*B: binary quadratic q20 s^2 + q11 st + q02 t^2.
    std::array<Rational, 3> restrict_to(const ProjLine& l) const;
    Eigen::Matrix4cd numeric() const;

private:
    RatMatrix m_;
};

struct SingularLocus {
    int rank;
    std::vector<ProjPoint> kernel_points;
};

// Rank of the symmetric matrix plus its kernel as projective points; a rank-3
// quadric is a cone and the single kernel point is its vertex.
SingularLocus quadric_singular_locus(const QuadricForm& s);

// ---- numeric (complex) side, for the Z4 pipeline ----

// Line with complex coordinates, same double representation as ProjLine.
struct NumericLine {
    Eigen::Vector4cd a, b;   // spanning points
    Eigen::Vector4cd h1, h2; // cutting planes
};

NumericLine numeric_line_from_planes(const Eigen::Vector4cd& h1, const Eigen::Vector4cd& h2);
NumericLine to_numeric(const ProjLine& l);

// Largest-entry normalization for projective comparison of complex vectors.
Eigen::Vector4cd projective_normalize(const Eigen::Vector4cd& v);
// sin of the projective angle between two directions (0 iff equal points).
double projective_distance(const Eigen::Vector4cd& a, const Eigen::Vector4cd& b);
// Smallest scaled singular value of the 4x4 stack [a1;b1;a2;b2]; ~0 iff the
// two lines meet (or coincide).
double lines_meet_residual(const NumericLine& l1, const NumericLine& l2);
// Meeting point of two (numerically) incident lines.
Eigen::Vector4cd numeric_meeting_point(const NumericLine& l1, const NumericLine& l2);
double point_on_line_residual(const Eigen::Vector4cd& p, const NumericLine& l);

} // namespace galois

#endif
