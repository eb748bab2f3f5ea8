#ifndef GALOIS_ANALYSIS_HPP
#define GALOIS_ANALYSIS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "galois/function_field.hpp"
#include "galois/linalg.hpp"
#include "galois/projective.hpp"
#include "galois/torus.hpp"

namespace galois {

// Projective transformation of P^3. Exact entries live in Q(i) (purely real
// for the V4 catalog); the numeric representation is kept alongside.
class ProjTransform {
public:
    static ProjTransform exact(GaussMatrix m);
    static ProjTransform exact_rational(const RatMatrix& m);
    static ProjTransform numeric(Eigen::Matrix4cd m);
    static ProjTransform identity();

    bool is_exact() const { return exact_.has_value(); }
    const GaussMatrix& gauss() const;
    // Real rational part; throws when entries are not purely real.
    RatMatrix rational() const;
    const Eigen::Matrix4cd& numeric_matrix() const { return num_; }

    friend ProjTransform operator*(const ProjTransform& a, const ProjTransform& b);

private:
    std::optional<GaussMatrix> exact_;
    Eigen::Matrix4cd num_;
};

// Exact matrix realization of sigma_0..sigma_3 through the embedding
// (1 : x^2 : x : y): diag(1,1,1,-1) for sigma_0, and for i >= 1 the rows are
// (x - e_i)^2, (e_i x + c_i)^2, (e_i x + c_i)(x - e_i), a_i y written on the
// basis (1, x^2, x, y).
ProjTransform automorphism_matrix(const EllipticCurveModel& curve, const InvolutionPullback& sigma);

// The reflection fraction (in (1/2)L/L) carried by vertex index 0..3; index 0
// is sigma_0 and indices 1..3 follow the exact ordering of the roots.
LatticeFraction curve_sigma_fraction(const EllipticCurveModel& curve, int vertex_index);
// Torus automorphism -z + eta(vertex index).
TorusAutomorphism curve_sigma(const EllipticCurveModel& curve, int vertex_index);
// Vertex index whose involution equals t, if any.
std::optional<int> curve_vertex_of_involution(const EllipticCurveModel& curve,
                                              const TorusAutomorphism& t);

struct CertificateCheck {
    bool disjoint_from_curve = false;
    bool plane_pencil_fixed = false;   // all group matrices act on the plane
                                       // pencil through the line by one scalar
    bool quadric_span_preserved = false;
    bool group_table_matches = false;
    bool orbits_coplanar_through_line = false;
    bool exact = false;                // true when every check above ran exactly
    double max_residual = 0.0;         // largest numeric residual encountered
    std::string failure;               // empty iff passed()

    bool passed() const {
        return disjoint_from_curve && plane_pencil_fixed && quadric_span_preserved &&
               group_table_matches && orbits_coplanar_through_line;
    }
};

// Line over Q(i); used when a Z4 record is recovered exactly.
struct GaussLine {
    std::array<std::array<GaussRational, 4>, 2> points;
    std::array<std::array<GaussRational, 4>, 2> planes;
};

struct GaloisLineRecord {
    enum class Kind { V4, Z4 };
    Kind kind;
    std::string label; // "edge(0,3)" or "l(2,2)"
    AutomorphismGroup group;
    // matrices[k] realizes group.elements[k]
    std::vector<ProjTransform> matrices;
    std::optional<ProjLine> line_exact;   // rational line (all V4 records)
    std::optional<GaussLine> line_gauss;  // Q(i) line (recovered Z4 records)
    NumericLine line;                     // always available
    std::vector<int> incident_vertices;   // indices into the tetrahedron
    CertificateCheck certificate;
    std::string recovery_note;            // Z4 only: outcome of the exact-recovery attempt
};

// The six edge records: edge l_{Q0 Qi} carries <sigma_0, sigma_i> with planes
// {Y + c_i X, Z - e_i X}; edge l_{Qi Qj} carries <sigma_i, sigma_j> with
// {c_k X - Y + 2 e_k Z, W}. Fully exact; every record is certified.
std::vector<GaloisLineRecord> build_v4_records(const EllipticCurveModel& curve);

struct Z4Options {
    std::uint64_t seed = 20240901ull;
    double tolerance = 1e-8;
    int max_resamples = 8;
};

// The eight Z4 records of a j = 1728 curve, built numerically from orbit
// planes, with Gaussian-rational recovery attempted per matrix entry and the
// whole certificate re-run exactly when recovery succeeds.
std::vector<GaloisLineRecord> build_z4_records(const EllipticCurveModel& curve,
                                               const CurveTorusBridge& bridge,
                                               const Z4Options& opts = {});

// Re-runs the full certificate of one record (exactly where the record is
// exact, numerically at `tol` otherwise).
CertificateCheck verify_galois_certificate(const GaloisLineRecord& record,
                                           const EllipticCurveModel& curve,
                                           const CurveTorusBridge& bridge, double tol = 1e-8,
                                           std::uint64_t seed = 97ull);

struct ClaimStatus {
    std::string name;
    bool pass = false;
    double residual = 0.0; // 0 for exact claims
    std::string detail;
};

struct IncidenceEdge {
    int line_a, line_b;            // indices into the report's line list
    bool meet;                      // geometric incidence
    std::optional<int> vertex;      // tetrahedron vertex at the meeting point
    bool shared_involution;         // groups share an eps = -1 element
    double residual;                // numeric meet residual (0 when exact)
};

struct ArrangementReport {
    EllipticCurveModel curve;
    Tetrahedron tetra;
    std::vector<GaloisLineRecord> lines;
    std::vector<IncidenceEdge> incidence;
    std::map<int, std::pair<int, int>> vertex_degrees; // vertex -> (V4 count, Z4 count)
    bool rho_injective = false;
    std::vector<ClaimStatus> claims;
    std::vector<std::string> discrepancies;
    std::uint64_t seed = 0;
    double tolerance = 1e-8;

    bool all_claims_pass() const;
};

struct ReportOptions {
    std::uint64_t seed = 20240901ull;
    double tolerance = 1e-8;
};

ArrangementReport arrangement_report(const EllipticCurveModel& curve, const ReportOptions& opts = {});

} // namespace galois

#endif
