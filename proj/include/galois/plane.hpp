#ifndef GALOIS_PLANE_HPP
#define GALOIS_PLANE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "galois/analysis.hpp"

namespace galois {

// Homogeneous trivariate form over Q, sparse in the exponent triple (i,j,k)
// of x^i y^j z^k with i + j + k = degree.
class TrivariateForm {
public:
    using Monomial = std::array<int, 3>;

    explicit TrivariateForm(int degree) : degree_(degree) {}

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    void add(const Monomial& m, const Rational& c);

    friend TrivariateForm operator+(const TrivariateForm& a, const TrivariateForm& b) {
        if (a.degree_ != b.degree_) throw invalid_input("form degree mismatch");
        TrivariateForm out = a;
        for (const auto& [m, c] : b.terms_) out.add(m, c);
        return out;
    }
    friend TrivariateForm operator-(const TrivariateForm& a, const TrivariateForm& b) {
        if (a.degree_ != b.degree_) throw invalid_input("form degree mismatch");
        TrivariateForm out = a;
        for (const auto& [m, c] : b.terms_) out.add(m, -c);
        return out;
    }
    friend TrivariateForm operator*(const TrivariateForm& a, const TrivariateForm& b) {
        TrivariateForm out(a.degree_ + b.degree_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                out.add({ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, ca * cb);
        return out;
    }
    friend TrivariateForm operator*(const Rational& s, const TrivariateForm& a) {
        TrivariateForm out(a.degree_);
        if (s == 0) return out;
        for (const auto& [m, c] : a.terms_) out.add(m, s * c);
        return out;
    }
    friend bool operator==(const TrivariateForm& a, const TrivariateForm& b) {
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

    Rational eval(const std::array<Rational, 3>& p) const;
    Complex eval(const Eigen::Vector3cd& p) const;

    // c with *this = lambda * c^2 for some rational lambda, when it exists.
    std::optional<TrivariateForm> square_root_up_to_scalar() const;

    // {"x^2*y*z": "3/4", ...}
    std::map<std::string, std::string> coefficient_map() const;
    std::string to_string() const;

private:
    int degree_;
    std::map<Monomial, Rational> terms_;
};

// Image of the curve under projection from a center P not on C. The form has
// degree 4 and either is irreducible (birational projection) or the square of
// a conic (projection from a cone vertex, a 2:1 map).
struct PlaneCurveRecord {
    TrivariateForm form;
    int degree;
    ProjPoint center;
    RatMatrix coord_change;      // T with T e4 ~ center; projection drops the
                                 // last coordinate of T^{-1} x
    bool is_conic_square;
    std::optional<TrivariateForm> conic;
    double membership_residual;  // worst residual of 20 projected curve samples
};

PlaneCurveRecord project_curve(const EllipticCurveModel& curve, const ProjPoint& center);

// Exact image of a point under the record's projection; nullopt for the center.
std::optional<std::array<Rational, 3>> project_point(const PlaneCurveRecord& rec,
                                                     const ProjPoint& p);

struct CenterClassification {
    enum class Kind { Vertex, OnGaloisLine, Generic } kind;
    std::optional<int> vertex_index;
    std::optional<int> line_index;
};

CenterClassification classify_center(const EllipticCurveModel& curve,
                                     const std::vector<GaloisLineRecord>& catalog,
                                     const ProjPoint& p, double tol = 1e-8);

// Elements of the source line's group that descend to linear maps of the
// plane (those fixing the center). Returned 3x3 blocks are exact.
std::vector<RatMatrix> descend_transforms(const GaloisLineRecord& source,
                                          const PlaneCurveRecord& rec);

struct PlaneGaloisCheck {
    bool galois = false;
    std::string reason;
    int descended_count = 0; // supplied transforms that verified
    bool quartic_irreducible = false;
};

// Decides whether R is a (verified) Galois point of the projected quartic.
// The linear half checks the supplied descended transforms: each must
// preserve the form up to scalar, fix R, and fix the pencil of lines through
// R pointwise. The order-4 Galois structure itself is certified through the
// space side: the center lies on the certified source line off the vertices
// (so the projection is birational and the plane covering from R equals the
// space covering from the line).
PlaneGaloisCheck verify_plane_galois_point(const PlaneCurveRecord& rec,
                                           const std::array<Rational, 3>& candidate,
                                           const std::vector<RatMatrix>& induced,
                                           const GaloisLineRecord* source,
                                           const EllipticCurveModel& curve);

struct IrreducibilityResult {
    enum class Status { Irreducible, Reducible, Unknown } status;
    std::string certificate; // e.g. "irreducible mod 7" or the found factor
};

// Univariate rational-coefficient quartic over Q.
IrreducibilityResult quartic_irreducible_over_q(const RatPoly& f);

// Spot check of the plane quartic: restrict to a rational line with full
// degree and test the univariate restriction.
IrreducibilityResult form_irreducible_spot_check(const TrivariateForm& form, std::uint64_t seed = 11);

} // namespace galois

#endif
