#include "galois/analysis.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <random>

namespace galois {

namespace {

using Vec4G = std::array<GaussRational, 4>;

GaussRational lift(const Rational& r) { return GaussRational(r); }

Vec4G lift4(const std::array<Rational, 4>& v) {
    return {lift(v[0]), lift(v[1]), lift(v[2]), lift(v[3])};
}

GaussMatrix lift_matrix(const RatMatrix& m) {
    GaussMatrix g(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) g(i, j) = lift(m(i, j));
    return g;
}

Eigen::Matrix4cd to_numeric(const GaussMatrix& g) {
    Eigen::Matrix4cd m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = g(i, j).to_complex();
    return m;
}

// A ~ lambda * B for some nonzero lambda.
bool proportional(const GaussMatrix& a, const GaussMatrix& b) {
    GaussRational lambda;
    bool found = false;
    for (int i = 0; i < a.rows() && !found; ++i)
        for (int j = 0; j < a.cols() && !found; ++j)
            if (!b(i, j).is_zero()) {
                lambda = a(i, j) / b(i, j);
                found = true;
            }
    if (!found || lambda.is_zero()) return false;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a(i, j) != lambda * b(i, j)) return false;
    return true;
}

double projective_matrix_distance(const Eigen::Matrix4cd& a, const Eigen::Matrix4cd& b) {
    std::complex<double> ip = (a.conjugate().cwiseProduct(b)).sum();
    double na = a.norm(), nb = b.norm();
    if (na == 0 || nb == 0) return 1.0;
    double c = std::min(1.0, std::abs(ip) / (na * nb));
    return std::sqrt(std::max(0.0, 1.0 - c * c));
}

Eigen::Matrix4cd normalized_matrix(const Eigen::Matrix4cd& m) {
    double n = m.norm();
    return n == 0 ? m : Eigen::Matrix4cd(m / n);
}

// Generic fiber point (1, x^2, x, y) of the function field over Q(i).
std::array<GaussCurveFn, 4> generic_point(const GaussPoly& cubic) {
    GaussCurveFn one = GaussCurveFn::constant(GaussRational(1), cubic);
    GaussCurveFn x = GaussCurveFn::x(cubic);
    GaussCurveFn y = GaussCurveFn::y(cubic);
    return {one, x * x, x, y};
}

GaussPoly lift_poly(const RatPoly& p) {
    std::vector<GaussRational> c;
    c.reserve(static_cast<size_t>(p.degree() + 1));
    for (int k = 0; k <= p.degree(); ++k) c.push_back(lift(p.coeff(k)));
    return GaussPoly(std::move(c));
}

bool fn_is_zero(const GaussCurveFn& f) { return f.is_zero(); }

// Rank of a small matrix with function-field entries (forward elimination in
// the field k(x)[y]/(y^2 - s)).
int curvefn_rank(std::vector<std::array<GaussCurveFn, 4>> rows) {
    int rank = 0;
    for (int col = 0; col < 4; ++col) {
        int piv = -1;
        for (size_t i = static_cast<size_t>(rank); i < rows.size(); ++i)
            if (!fn_is_zero(rows[i][static_cast<size_t>(col)])) { piv = static_cast<int>(i); break; }
        if (piv < 0) continue;
        std::swap(rows[static_cast<size_t>(rank)], rows[static_cast<size_t>(piv)]);
        const auto& prow = rows[static_cast<size_t>(rank)];
        GaussCurveFn inv = prow[static_cast<size_t>(col)].inverse();
        for (size_t i = static_cast<size_t>(rank) + 1; i < rows.size(); ++i) {
            if (fn_is_zero(rows[i][static_cast<size_t>(col)])) continue;
            GaussCurveFn f = rows[i][static_cast<size_t>(col)] * inv;
            for (int j = col; j < 4; ++j)
                rows[i][static_cast<size_t>(j)] = rows[i][static_cast<size_t>(j)] - f * prow[static_cast<size_t>(j)];
        }
        ++rank;
    }
    return rank;
}

GaussLine lift_line(const ProjLine& l) {
    GaussLine g;
    g.points[0] = lift4(l.point_a().coords());
    g.points[1] = lift4(l.point_b().coords());
    g.planes[0] = lift4(l.plane_a().coeffs());
    g.planes[1] = lift4(l.plane_b().coeffs());
    return g;
}

NumericLine numeric_of(const GaussLine& l) {
    NumericLine n;
    auto vec = [](const Vec4G& v) {
        Eigen::Vector4cd out;
        for (int i = 0; i < 4; ++i) out[i] = v[static_cast<size_t>(i)].to_complex();
        return out;
    };
    n.a = vec(l.points[0]).normalized();
    n.b = vec(l.points[1]).normalized();
    n.h1 = vec(l.planes[0]).normalized();
    n.h2 = vec(l.planes[1]).normalized();
    return n;
}

GaussRational eval_quadric(const GaussMatrix& sym, const Vec4G& u, const Vec4G& v) {
    GaussRational s;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            s += sym(i, j) * u[static_cast<size_t>(i)] * v[static_cast<size_t>(j)];
    return s;
}

// Exact line-curve disjointness over Q(i): the resultant of the two
// restricted binary quadratics at formal degree (2,2) must not vanish.
bool line_disjoint_exact(const GaussLine& line, const GaussMatrix& f1, const GaussMatrix& f2) {
    const Vec4G& a = line.points[0];
    const Vec4G& b = line.points[1];
    std::array<GaussRational, 3> q1{eval_quadric(f1, a, a), GaussRational(2) * eval_quadric(f1, a, b),
                                    eval_quadric(f1, b, b)};
    std::array<GaussRational, 3> q2{eval_quadric(f2, a, a), GaussRational(2) * eval_quadric(f2, a, b),
                                    eval_quadric(f2, b, b)};
    auto zero = [](const std::array<GaussRational, 3>& q) {
        return q[0].is_zero() && q[1].is_zero() && q[2].is_zero();
    };
    if (zero(q1) || zero(q2)) return false;
    GaussMatrix s(4, 4);
    std::array<GaussRational, 3> rows[2] = {q1, q2};
    for (int r = 0; r < 2; ++r)
        for (int off = 0; off < 2; ++off)
            for (int c = 0; c < 3; ++c) s(2 * r + off, off + c) = rows[r][static_cast<size_t>(c)];
    return !s.det().is_zero();
}

// h -> h o M on dual vectors: (M^T h).
Vec4G dual_apply(const GaussMatrix& m, const Vec4G& h) {
    Vec4G out{};
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i) out[static_cast<size_t>(j)] += h[static_cast<size_t>(i)] * m(i, j);
    return out;
}

bool vec_proportional(const Vec4G& a, const Vec4G& b, GaussRational* lambda_out = nullptr) {
    GaussRational lambda;
    bool found = false;
    for (int i = 0; i < 4 && !found; ++i)
        if (!b[static_cast<size_t>(i)].is_zero()) {
            lambda = a[static_cast<size_t>(i)] / b[static_cast<size_t>(i)];
            found = true;
        }
    if (!found) return false;
    for (int i = 0; i < 4; ++i)
        if (a[static_cast<size_t>(i)] != lambda * b[static_cast<size_t>(i)]) return false;
    if (lambda_out) *lambda_out = lambda;
    return !lambda.is_zero();
}

// Both cutting planes are dual eigenvectors of M with one common eigenvalue,
// i.e. the pencil of planes through the line is fixed pointwise. This is the
// matrix form of sigma*(s_i) = s_i for the two line sections.
bool fixes_plane_pencil_exact(const GaussMatrix& m, const GaussLine& line) {
    GaussRational l1, l2;
    if (!vec_proportional(dual_apply(m, line.planes[0]), line.planes[0], &l1)) return false;
    if (!vec_proportional(dual_apply(m, line.planes[1]), line.planes[1], &l2)) return false;
    return l1 == l2;
}

bool quadric_span_preserved_exact(const GaussMatrix& m, const GaussMatrix& a1, const GaussMatrix& a2) {
    for (const GaussMatrix* a : {&a1, &a2}) {
        GaussMatrix b = m.transpose() * (*a) * m;
        // Solve b = alpha a1 + beta a2 from two independent entries, verify everywhere.
        GaussRational alpha = GaussRational(2) * b(0, 1); // a1(0,1) = 1/2, a2(0,1) = 0
        GaussRational beta = b(1, 2) / GaussRational(2);  // a2(1,2) = 2, a1(1,2) = 0
        GaussMatrix rhs = alpha * a1 + beta * a2;
        if (!(b == rhs)) return false;
    }
    return true;
}

double quadric_span_residual_numeric(const Eigen::Matrix4cd& m, const Eigen::Matrix4cd& a1,
                                     const Eigen::Matrix4cd& a2) {
    double worst = 0;
    for (const Eigen::Matrix4cd* a : {&a1, &a2}) {
        Eigen::Matrix4cd b = m.transpose() * (*a) * m;
        Eigen::MatrixXcd basis(16, 2);
        basis.col(0) = Eigen::Map<const Eigen::VectorXcd>(a1.data(), 16);
        basis.col(1) = Eigen::Map<const Eigen::VectorXcd>(a2.data(), 16);
        Eigen::VectorXcd rhs = Eigen::Map<const Eigen::VectorXcd>(b.data(), 16);
        Eigen::Vector2cd sol = basis.colPivHouseholderQr().solve(rhs);
        double res = (basis * sol - rhs).norm() / std::max(1e-300, rhs.norm());
        worst = std::max(worst, res);
    }
    return worst;
}

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    double uniform() { return double(gen() >> 11) * (1.0 / 9007199254740992.0); }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

} // namespace

// ---------------- ProjTransform ----------------

ProjTransform ProjTransform::exact(GaussMatrix m) {
    ProjTransform t;
    t.num_ = to_numeric(m);
    t.exact_ = std::move(m);
    return t;
}

ProjTransform ProjTransform::exact_rational(const RatMatrix& m) { return exact(lift_matrix(m)); }

ProjTransform ProjTransform::numeric(Eigen::Matrix4cd m) {
    ProjTransform t;
    t.num_ = std::move(m);
    return t;
}

ProjTransform ProjTransform::identity() {
    return exact(GaussMatrix::identity(4));
}

const GaussMatrix& ProjTransform::gauss() const {
    if (!exact_) throw invalid_input("transform has no exact representation");
    return *exact_;
}

RatMatrix ProjTransform::rational() const {
    const GaussMatrix& g = gauss();
    RatMatrix m(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (!g(i, j).is_real()) throw invalid_input("transform has non-real entries");
            m(i, j) = g(i, j).re;
        }
    return m;
}

ProjTransform operator*(const ProjTransform& a, const ProjTransform& b) {
    if (a.exact_ && b.exact_) return ProjTransform::exact(*a.exact_ * *b.exact_);
    return ProjTransform::numeric(a.num_ * b.num_);
}

// ---------------- curve <-> torus labels ----------------

LatticeFraction curve_sigma_fraction(const EllipticCurveModel& curve, int vertex_index) {
    if (vertex_index == 0) return {};
    std::array<int, 3> order{0, 1, 2};
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return curve.e[static_cast<size_t>(a)] > curve.e[static_cast<size_t>(b)];
    });
    static const Rational h(1, 2);
    int root = vertex_index - 1;
    if (order[0] == root) return LatticeFraction(h, Rational(0)); // wp(w1) = e_max
    if (order[2] == root) return LatticeFraction(Rational(0), h); // wp(w3) = e_min
    return LatticeFraction(h, h);                                 // wp(w1 + w3) = e_mid
}

TorusAutomorphism curve_sigma(const EllipticCurveModel& curve, int vertex_index) {
    return {UnitMultiplier::minus_identity(), curve_sigma_fraction(curve, vertex_index)};
}

std::optional<int> curve_vertex_of_involution(const EllipticCurveModel& curve,
                                              const TorusAutomorphism& t) {
    if (!t.is_reflection()) return std::nullopt;
    for (int i = 0; i < 4; ++i)
        if (curve_sigma(curve, i) == t) return i;
    return std::nullopt;
}

// ---------------- automorphism matrices ----------------

ProjTransform automorphism_matrix(const EllipticCurveModel& curve, const InvolutionPullback& sigma) {
    RatMatrix m(4, 4);
    if (sigma.index == 0) {
        m = RatMatrix::identity(4);
        m(3, 3) = -1;
        return ProjTransform::exact_rational(m);
    }
    const Rational& e = curve.e[static_cast<size_t>(sigma.index - 1)];
    const Rational& c = curve.c[static_cast<size_t>(sigma.index - 1)];
    const Rational& a = curve.a[static_cast<size_t>(sigma.index - 1)];
    // Rows clear the common denominator (x - e)^2 of the pullback through the
    // embedding: X' = (x-e)^2, Y' = (ex+c)^2, Z' = (ex+c)(x-e), W' = a y.
    m(0, 0) = e * e;      m(0, 1) = 1;      m(0, 2) = -2 * e;
    m(1, 0) = c * c;      m(1, 1) = e * e;  m(1, 2) = 2 * e * c;
    m(2, 0) = -e * c;     m(2, 1) = e;      m(2, 2) = c - e * e;
    m(3, 3) = a;
    return ProjTransform::exact_rational(m);
}

// ---------------- certificates ----------------

namespace {

struct CurveGaussData {
    GaussMatrix f1, f2;
    GaussPoly cubic;
};

CurveGaussData gauss_data(const EllipticCurveModel& curve) {
    return {lift_matrix(curve.f1.sym()), lift_matrix(curve.f2.sym()),
            lift_poly(curve.weierstrass_cubic())};
}

CertificateCheck verify_exact(const GaloisLineRecord& record, const EllipticCurveModel& curve) {
    CertificateCheck out;
    out.exact = true;
    CurveGaussData cd = gauss_data(curve);
    GaussLine line = record.line_gauss ? *record.line_gauss : lift_line(*record.line_exact);

    out.disjoint_from_curve = line_disjoint_exact(line, cd.f1, cd.f2);
    if (!out.disjoint_from_curve) { out.failure = "line-meets-curve"; return out; }

    out.plane_pencil_fixed = true;
    out.quadric_span_preserved = true;
    for (const auto& t : record.matrices) {
        const GaussMatrix& m = t.gauss();
        out.plane_pencil_fixed = out.plane_pencil_fixed && fixes_plane_pencil_exact(m, line);
        out.quadric_span_preserved =
            out.quadric_span_preserved && quadric_span_preserved_exact(m, cd.f1, cd.f2);
    }
    if (!out.plane_pencil_fixed) { out.failure = "plane-pencil-not-fixed"; return out; }
    if (!out.quadric_span_preserved) { out.failure = "quadric-span-not-preserved"; return out; }

    // Multiplication table against the torus group.
    out.group_table_matches = true;
    const auto& els = record.group.elements;
    for (size_t i = 0; i < els.size() && out.group_table_matches; ++i)
        for (size_t j = 0; j < els.size() && out.group_table_matches; ++j) {
            TorusAutomorphism prod = els[i] * els[j];
            auto it = std::find(els.begin(), els.end(), prod);
            if (it == els.end()) { out.group_table_matches = false; break; }
            size_t k = static_cast<size_t>(it - els.begin());
            GaussMatrix lhs = record.matrices[i].gauss() * record.matrices[j].gauss();
            out.group_table_matches = proportional(lhs, record.matrices[k].gauss());
        }
    if (!out.group_table_matches) { out.failure = "group-table-mismatch"; return out; }

    // Orbit of the generic function-field point plus the two line points must
    // span only a plane: rank <= 3 of the 6x4 stack, exactly.
    std::vector<std::array<GaussCurveFn, 4>> rows;
    auto gp = generic_point(cd.cubic);
    for (const auto& t : record.matrices) {
        const GaussMatrix& m = t.gauss();
        std::array<GaussCurveFn, 4> row{
            GaussCurveFn::constant(GaussRational(0), cd.cubic),
            GaussCurveFn::constant(GaussRational(0), cd.cubic),
            GaussCurveFn::constant(GaussRational(0), cd.cubic),
            GaussCurveFn::constant(GaussRational(0), cd.cubic)};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                if (m(i, j).is_zero()) continue;
                row[static_cast<size_t>(i)] =
                    row[static_cast<size_t>(i)] +
                    GaussCurveFn::constant(m(i, j), cd.cubic) * gp[static_cast<size_t>(j)];
            }
        rows.push_back(std::move(row));
    }
    for (const auto& pt : line.points) {
        std::array<GaussCurveFn, 4> row{
            GaussCurveFn::constant(pt[0], cd.cubic), GaussCurveFn::constant(pt[1], cd.cubic),
            GaussCurveFn::constant(pt[2], cd.cubic), GaussCurveFn::constant(pt[3], cd.cubic)};
        rows.push_back(std::move(row));
    }
    out.orbits_coplanar_through_line = curvefn_rank(std::move(rows)) <= 3;
    if (!out.orbits_coplanar_through_line) out.failure = "orbit-not-coplanar-through-line";
    return out;
}

CertificateCheck verify_numeric(const GaloisLineRecord& record, const EllipticCurveModel& curve,
                                const CurveTorusBridge& bridge, double tol, std::uint64_t seed) {
    CertificateCheck out;
    out.exact = false;
    double meet_threshold = std::sqrt(tol);
    Eigen::Matrix4cd a1 = curve.f1.numeric(), a2 = curve.f2.numeric();
    a1 /= a1.norm();
    a2 /= a2.norm();
    const NumericLine& line = record.line;

    // (a) disjointness: normalized resultant of the two restrictions.
    {
        auto restrict = [&](const Eigen::Matrix4cd& f) {
            Eigen::Vector4cd a = line.a.normalized(), b = line.b.normalized();
            std::array<Complex, 3> q{(a.transpose() * f * a)(0, 0), 2.0 * (a.transpose() * f * b)(0, 0),
                                     (b.transpose() * f * b)(0, 0)};
            return q;
        };
        auto q1 = restrict(a1), q2 = restrict(a2);
        Eigen::Matrix4cd s = Eigen::Matrix4cd::Zero();
        for (int off = 0; off < 2; ++off)
            for (int c = 0; c < 3; ++c) {
                s(off, off + c) = q1[static_cast<size_t>(c)];
                s(2 + off, off + c) = q2[static_cast<size_t>(c)];
            }
        double det = std::abs(s.determinant());
        out.disjoint_from_curve = det > meet_threshold * meet_threshold;
        if (!out.disjoint_from_curve) { out.failure = "line-meets-curve"; return out; }
    }

    // (b) pencil fixed within tolerance, with one shared scalar.
    {
        double worst = 0;
        for (const auto& t : record.matrices) {
            Eigen::Matrix4cd m = normalized_matrix(t.numeric_matrix());
            Complex lam[2];
            int k = 0;
            for (const Eigen::Vector4cd* h : {&line.h1, &line.h2}) {
                Eigen::Vector4cd img = m.transpose() * (*h);
                Complex l = h->dot(img) / h->squaredNorm();
                worst = std::max(worst, (img - l * (*h)).norm() / std::max(1e-300, img.norm()));
                lam[k++] = l;
            }
            worst = std::max(worst, std::abs(lam[0] - lam[1]) /
                                        std::max(1e-300, std::max(std::abs(lam[0]), std::abs(lam[1]))));
        }
        out.max_residual = std::max(out.max_residual, worst);
        out.plane_pencil_fixed = worst < meet_threshold;
        if (!out.plane_pencil_fixed) { out.failure = "plane-pencil-not-fixed"; return out; }
    }

    // (c) span preservation.
    {
        double worst = 0;
        for (const auto& t : record.matrices)
            worst = std::max(worst,
                             quadric_span_residual_numeric(normalized_matrix(t.numeric_matrix()), a1, a2));
        out.max_residual = std::max(out.max_residual, worst);
        out.quadric_span_preserved = worst < meet_threshold;
        if (!out.quadric_span_preserved) { out.failure = "quadric-span-not-preserved"; return out; }
    }

    // (d) multiplication table.
    {
        double worst = 0;
        const auto& els = record.group.elements;
        for (size_t i = 0; i < els.size(); ++i)
            for (size_t j = 0; j < els.size(); ++j) {
                TorusAutomorphism prod = els[i] * els[j];
                auto it = std::find(els.begin(), els.end(), prod);
                if (it == els.end()) { worst = 1.0; break; }
                size_t k = static_cast<size_t>(it - els.begin());
                worst = std::max(worst, projective_matrix_distance(
                                            record.matrices[i].numeric_matrix() *
                                                record.matrices[j].numeric_matrix(),
                                            record.matrices[k].numeric_matrix()));
            }
        out.max_residual = std::max(out.max_residual, worst);
        out.group_table_matches = worst < meet_threshold;
        if (!out.group_table_matches) { out.failure = "group-table-mismatch"; return out; }
    }

    // (e) ten random curve points: the matrix orbit together with the two line
    // points spans only a plane.
    {
        Rng rng(seed);
        double worst = 0;
        for (int trial = 0; trial < 10; ++trial) {
            Complex z(rng.uniform(0.07, 0.93), rng.uniform(0.07, 0.93));
            Eigen::Vector4cd p = torus_point(bridge, z);
            Eigen::MatrixXcd rows(static_cast<int>(record.matrices.size()) + 2, 4);
            int r = 0;
            for (const auto& t : record.matrices)
                rows.row(r++) = (t.numeric_matrix() * p).normalized().transpose();
            rows.row(r++) = line.a.normalized().transpose();
            rows.row(r++) = line.b.normalized().transpose();
            Eigen::JacobiSVD<Eigen::MatrixXcd> svd(rows);
            worst = std::max(worst, svd.singularValues()(3) / svd.singularValues()(0));
        }
        out.max_residual = std::max(out.max_residual, worst);
        out.orbits_coplanar_through_line = worst < meet_threshold;
        if (!out.orbits_coplanar_through_line) out.failure = "orbit-not-coplanar-through-line";
    }
    return out;
}

} // namespace

CertificateCheck verify_galois_certificate(const GaloisLineRecord& record,
                                           const EllipticCurveModel& curve,
                                           const CurveTorusBridge& bridge, double tol,
                                           std::uint64_t seed) {
    bool all_exact = record.line_exact.has_value() || record.line_gauss.has_value();
    for (const auto& t : record.matrices) all_exact = all_exact && t.is_exact();
    if (all_exact) return verify_exact(record, curve);
    return verify_numeric(record, curve, bridge, tol, seed);
}

// ---------------- V4 catalog ----------------

std::vector<GaloisLineRecord> build_v4_records(const EllipticCurveModel& curve) {
    Tetrahedron tet = tetrahedron(curve);
    std::vector<GaloisLineRecord> out;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            GaloisLineRecord rec;
            rec.kind = GaloisLineRecord::Kind::V4;
            rec.label = "edge(" + std::to_string(i) + "," + std::to_string(j) + ")";
            auto planes = v4_plane_pair(curve, V4GroupId{i, j});
            ProjPlane h1(planes.first), h2(planes.second);
            rec.line_exact = ProjLine::assemble(tet.vertices[static_cast<size_t>(i)],
                                                tet.vertices[static_cast<size_t>(j)], h1, h2);
            rec.line = to_numeric(*rec.line_exact);
            rec.group = make_group({TorusAutomorphism::identity(), curve_sigma(curve, i),
                                    curve_sigma(curve, j),
                                    curve_sigma(curve, i) * curve_sigma(curve, j)});
            ProjTransform mi = automorphism_matrix(curve, involution_pullback(curve, i));
            ProjTransform mj = automorphism_matrix(curve, involution_pullback(curve, j));
            for (const auto& el : rec.group.elements) {
                if (el.is_identity())
                    rec.matrices.push_back(ProjTransform::identity());
                else if (el == curve_sigma(curve, i))
                    rec.matrices.push_back(mi);
                else if (el == curve_sigma(curve, j))
                    rec.matrices.push_back(mj);
                else
                    rec.matrices.push_back(mi * mj);
            }
            rec.incident_vertices = {i, j};
            rec.certificate = verify_exact(rec, curve);
            if (!rec.certificate.passed())
                throw certificate_failure("V4 record " + rec.label + ": " + rec.certificate.failure);
            out.push_back(std::move(rec));
        }
    return out;
}

// ---------------- Z4 catalog ----------------

namespace {

// sigma acting on lattice coordinates u + iv (square lattice).
Complex apply_torus(const TorusAutomorphism& t, Complex z) {
    double r = z.real(), s = z.imag();
    double nr = t.eps.m[0] * r + t.eps.m[1] * s + to_double(t.alpha.r);
    double ns = t.eps.m[2] * r + t.eps.m[3] * s + to_double(t.alpha.s);
    return {nr, ns};
}

struct OrbitPlaneResult {
    Eigen::Vector4cd plane;
    double cond;
};

OrbitPlaneResult orbit_plane(const CurveTorusBridge& bridge, const TorusAutomorphism& gen,
                             Complex z) {
    Eigen::Matrix4cd pts;
    Complex w = z;
    for (int k = 0; k < 4; ++k) {
        pts.row(k) = torus_point(bridge, w).normalized().transpose();
        w = apply_torus(gen, w);
    }
    Eigen::JacobiSVD<Eigen::Matrix4cd> svd(pts, Eigen::ComputeFullV);
    OrbitPlaneResult r;
    r.plane = svd.matrixV().col(3);
    r.cond = svd.singularValues()(2) / svd.singularValues()(0);
    return r;
}

Eigen::Matrix4cd dlt_matrix(const std::vector<std::pair<Eigen::Vector4cd, Eigen::Vector4cd>>& pairs,
                            double* residual) {
    Eigen::MatrixXcd a(static_cast<int>(pairs.size()) * 6, 16);
    int r = 0;
    for (const auto& [u, v] : pairs) {
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                Eigen::RowVectorXcd row = Eigen::RowVectorXcd::Zero(16);
                row.segment(4 * i, 4) = v[j] * u.transpose();
                row.segment(4 * j, 4) = -v[i] * u.transpose();
                a.row(r++) = row;
            }
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeFullV);
    if (residual) *residual = svd.singularValues()(15) / svd.singularValues()(0);
    Eigen::VectorXcd m = svd.matrixV().col(15);
    Eigen::Matrix4cd out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out(i, j) = m(4 * i + j);
    return out;
}

std::optional<GaussMatrix> try_rationalize(const Eigen::Matrix4cd& m, double tol) {
    int bi = 0, bj = 0;
    double best = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (std::abs(m(i, j)) > best) { best = std::abs(m(i, j)); bi = i; bj = j; }
    if (best == 0) return std::nullopt;
    Eigen::Matrix4cd s = m / m(bi, bj);
    GaussMatrix g(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            auto q = rationalize(s(i, j), 1 << 20, tol);
            if (!q) return std::nullopt;
            g(i, j) = *q;
        }
    return g;
}

std::optional<GaussLine> exact_line_of(const GaussMatrix& g, const Eigen::Matrix4cd& numeric,
                                       double tol) {
    // Dual eigenvalue with a 2-dimensional eigenspace: locate numerically,
    // certify exactly.
    Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(numeric.transpose());
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            Complex li = es.eigenvalues()(i), lj = es.eigenvalues()(j);
            if (std::abs(li - lj) > tol * std::max(1.0, std::abs(li))) continue;
            auto lam = rationalize(Complex(0.5) * (li + lj), 1 << 20, 1e-6);
            if (!lam) continue;
            GaussMatrix shifted = g.transpose();
            for (int d = 0; d < 4; ++d) shifted(d, d) -= *lam;
            auto ker = shifted.kernel();
            if (ker.size() != 2) continue;
            GaussLine line;
            line.planes[0] = {ker[0][0], ker[0][1], ker[0][2], ker[0][3]};
            line.planes[1] = {ker[1][0], ker[1][1], ker[1][2], ker[1][3]};
            GaussMatrix pm(2, 4);
            for (int c = 0; c < 4; ++c) {
                pm(0, c) = line.planes[0][static_cast<size_t>(c)];
                pm(1, c) = line.planes[1][static_cast<size_t>(c)];
            }
            auto pts = pm.kernel();
            if (pts.size() != 2) continue;
            line.points[0] = {pts[0][0], pts[0][1], pts[0][2], pts[0][3]};
            line.points[1] = {pts[1][0], pts[1][1], pts[1][2], pts[1][3]};
            return line;
        }
    return std::nullopt;
}

} // namespace

std::vector<GaloisLineRecord> build_z4_records(const EllipticCurveModel& curve,
                                               const CurveTorusBridge& bridge,
                                               const Z4Options& opts) {
    if (!curve.is_lemniscatic)
        throw invalid_input("Z4 lines exist only for j = 1728 curves");
    if (std::abs(bridge.tau - Complex(0, 1)) > 1e-9)
        throw construction_error("period lattice of a j = 1728 curve is not square");

    std::vector<AutomorphismGroup> groups;
    for (auto& g : enumerate_galois_groups_for_order(4))
        if (g.kind == AutomorphismGroup::Kind::Z4) groups.push_back(std::move(g));
    if (groups.size() != 8) throw construction_error("expected eight Z4 groups");

    CurveGaussData cd = gauss_data(curve);
    Tetrahedron tet = tetrahedron(curve);
    Rng rng(opts.seed);
    std::vector<GaloisLineRecord> out;

    for (const auto& group : groups) {
        auto gen = group.generator();
        if (!gen) throw construction_error("Z4 group without order-4 generator");

        GaloisLineRecord rec;
        rec.kind = GaloisLineRecord::Kind::Z4;
        rec.group = group;
        rec.label = group.z4_mn ? "l(" + std::to_string((*group.z4_mn)[0]) + "," +
                                      std::to_string((*group.z4_mn)[1]) + ")"
                                : "l(?)";

        // Generator matrix from sampled orbit pairs.
        double dlt_res = 1;
        Eigen::Matrix4cd m;
        for (int attempt = 0; attempt <= opts.max_resamples; ++attempt) {
            std::vector<std::pair<Eigen::Vector4cd, Eigen::Vector4cd>> pairs;
            for (int k = 0; k < 6; ++k) {
                Complex z(rng.uniform(0.06, 0.94), rng.uniform(0.06, 0.94));
                pairs.emplace_back(torus_point(bridge, z).normalized(),
                                   torus_point(bridge, apply_torus(*gen, z)).normalized());
            }
            m = dlt_matrix(pairs, &dlt_res);
            if (dlt_res < opts.tolerance) break;
        }
        if (dlt_res >= opts.tolerance)
            throw construction_error(rec.label + ": generator matrix fit did not converge");

        // Line from two orbit planes, third as validation.
        NumericLine line;
        bool line_ok = false;
        for (int attempt = 0; attempt <= opts.max_resamples && !line_ok; ++attempt) {
            auto p1 = orbit_plane(bridge, *gen, Complex(rng.uniform(0.06, 0.94), rng.uniform(0.06, 0.94)));
            auto p2 = orbit_plane(bridge, *gen, Complex(rng.uniform(0.06, 0.94), rng.uniform(0.06, 0.94)));
            auto p3 = orbit_plane(bridge, *gen, Complex(rng.uniform(0.06, 0.94), rng.uniform(0.06, 0.94)));
            if (p1.cond < 1e-6 || p2.cond < 1e-6 || p3.cond < 1e-6) continue;
            // The two planes must be independent.
            Eigen::MatrixXcd pm(2, 4);
            pm.row(0) = p1.plane.transpose();
            pm.row(1) = p2.plane.transpose();
            Eigen::JacobiSVD<Eigen::MatrixXcd> svd(pm);
            if (svd.singularValues()(1) / svd.singularValues()(0) < 1e-4) continue;
            line = numeric_line_from_planes(p1.plane, p2.plane);
            // The third orbit plane belongs to the same pencil, so it must
            // contain both spanning points of the candidate line.
            double third = std::max(std::abs((p3.plane.transpose() * line.a.normalized())(0, 0)),
                                    std::abs((p3.plane.transpose() * line.b.normalized())(0, 0)));
            if (third < std::sqrt(opts.tolerance)) line_ok = true;
        }
        if (!line_ok) throw construction_error(rec.label + ": orbit planes did not intersect consistently");
        rec.line = line;

        // Realizations of all four elements, aligned with group.elements.
        std::vector<Eigen::Matrix4cd> pows{Eigen::Matrix4cd::Identity(), m, m * m, m * m * m};
        std::vector<TorusAutomorphism> gpow{TorusAutomorphism::identity(), *gen, *gen * *gen,
                                            *gen * *gen * *gen};
        std::vector<ProjTransform> numeric_matrices(4, ProjTransform::identity());
        for (size_t k = 0; k < rec.group.elements.size(); ++k) {
            auto it = std::find(gpow.begin(), gpow.end(), rec.group.elements[k]);
            if (it == gpow.end()) throw construction_error("group element is not a generator power");
            numeric_matrices[k] =
                ProjTransform::numeric(normalized_matrix(pows[static_cast<size_t>(it - gpow.begin())]));
        }
        rec.matrices = numeric_matrices;

        // Gaussian-rational recovery; on any failure the record stays numeric.
        rec.recovery_note = "numeric";
        if (auto g = try_rationalize(m, 1e-6)) {
            bool ok = true;
            GaussMatrix g2 = *g * *g;
            GaussMatrix g4 = g2 * g2;
            ok = ok && proportional(g4, GaussMatrix::identity(4));
            ok = ok && quadric_span_preserved_exact(*g, cd.f1, cd.f2);
            // The square of the generator is the shared fixed-point involution.
            TorusAutomorphism sq = *gen * *gen;
            if (auto v = curve_vertex_of_involution(curve, sq)) {
                GaussMatrix expected =
                    lift_matrix(automorphism_matrix(curve, involution_pullback(curve, *v)).rational());
                ok = ok && proportional(g2, expected);
            } else {
                ok = false;
            }
            std::optional<GaussLine> exact_line;
            if (ok) {
                exact_line = exact_line_of(*g, to_numeric(*g), 1e-6);
                ok = ok && exact_line.has_value();
            }
            if (ok) ok = line_disjoint_exact(*exact_line, cd.f1, cd.f2);
            if (ok) {
                // Orbit line and exact line must agree.
                NumericLine nl = numeric_of(*exact_line);
                double agree = std::max(point_on_line_residual(rec.line.a, nl),
                                        point_on_line_residual(rec.line.b, nl));
                ok = agree < std::sqrt(opts.tolerance);
            }
            if (ok) {
                rec.line_gauss = exact_line;
                std::vector<GaussMatrix> gpows{GaussMatrix::identity(4), *g, g2, g2 * *g};
                for (size_t k = 0; k < rec.group.elements.size(); ++k) {
                    auto it = std::find(gpow.begin(), gpow.end(), rec.group.elements[k]);
                    rec.matrices[k] =
                        ProjTransform::exact(gpows[static_cast<size_t>(it - gpow.begin())]);
                }
                rec.recovery_note = "exact Q(i) entries recovered and re-verified";
                // Real lines also get the rational representation.
                bool real_line = true;
                for (const auto& arr : {exact_line->points, exact_line->planes})
                    for (const auto& v : arr)
                        for (const auto& x : v) real_line = real_line && x.is_real();
                if (real_line) {
                    auto take = [](const Vec4G& v) {
                        return std::array<Rational, 4>{v[0].re, v[1].re, v[2].re, v[3].re};
                    };
                    rec.line_exact = ProjLine::assemble(
                        ProjPoint(take(exact_line->points[0])), ProjPoint(take(exact_line->points[1])),
                        ProjPlane(take(exact_line->planes[0])), ProjPlane(take(exact_line->planes[1])));
                }
            } else {
                rec.recovery_note = "rationalization found but exact re-verification failed; kept numeric";
            }
        }

        // Incident vertices.
        for (int v = 0; v < 4; ++v) {
            double d = point_on_line_residual(tet.vertices[static_cast<size_t>(v)].numeric(), rec.line);
            if (d < std::sqrt(opts.tolerance)) rec.incident_vertices.push_back(v);
        }

        rec.certificate = verify_galois_certificate(rec, curve, bridge, opts.tolerance, opts.seed + 17);
        if (!rec.certificate.passed())
            throw certificate_failure("Z4 record " + rec.label + ": " + rec.certificate.failure);
        out.push_back(std::move(rec));
    }
    return out;
}

// ---------------- arrangement report ----------------

namespace {

bool groups_equal(const AutomorphismGroup& a, const AutomorphismGroup& b) {
    return a.elements == b.elements;
}

} // namespace

bool ArrangementReport::all_claims_pass() const {
    for (const auto& c : claims)
        if (!c.pass) return false;
    return true;
}

ArrangementReport arrangement_report(const EllipticCurveModel& curve, const ReportOptions& opts) {
    ArrangementReport rep{curve, tetrahedron(curve), {}, {}, {}, false, {}, {}, opts.seed,
                          opts.tolerance};
    CurveTorusBridge bridge = make_bridge(curve);

    auto add_claim = [&](const std::string& name, bool pass, double residual,
                         const std::string& detail) {
        rep.claims.push_back({name, pass, residual, detail});
    };

    // Pencil structure.
    auto cones = singular_pencil_members(curve);
    bool cubic_roots = true;
    RatPoly pencil = curve.pencil_cubic();
    for (const auto& cone : cones)
        if (cone.b_value) cubic_roots = cubic_roots && pencil.eval<Rational>(*cone.b_value) == 0;
    add_claim("pencil-has-four-singular-members", cones.size() == 4, 0,
              "b values: infinity plus the roots of b^3+4pb-16q");
    add_claim("pencil-cubic-vanishes-at-b-values", cubic_roots, 0, "");
    add_claim("tetrahedron-not-coplanar", rep.tetra.vertex_determinant != 0, 0,
              "vertex determinant " + to_string(rep.tetra.vertex_determinant));
    Rational expected_sub = 2 * (curve.e[0] - curve.e[1]) * (curve.e[1] - curve.e[2]) *
                            (curve.e[2] - curve.e[0]);
    add_claim("vertex-subdeterminant-formula",
              rep.tetra.sub_determinant == expected_sub || rep.tetra.sub_determinant == -expected_sub,
              0, "2(e1-e2)(e2-e3)(e3-e1) = " + to_string(expected_sub));

    // V4 catalog (always) and Z4 catalog (lemniscatic curves).
    rep.lines = build_v4_records(curve);
    bool v4_ok = true;
    for (const auto& r : rep.lines) v4_ok = v4_ok && r.certificate.passed() && r.certificate.exact;
    add_claim("six-v4-lines-exact-certificates", v4_ok && rep.lines.size() == 6, 0, "");

    // Fixed-field generators certify as part of their construction.
    bool gens_ok = true;
    std::string gen_fail;
    for (int i = 0; i < 4 && gens_ok; ++i)
        for (int j = i + 1; j < 4 && gens_ok; ++j) {
            try {
                auto g = fixed_generator(curve, V4GroupId{i, j});
                gens_ok = covering_degree(curve, g) == 4;
                if (!gens_ok) gen_fail = "covering degree != 4";
            } catch (const Error& e) {
                gens_ok = false;
                gen_fail = e.what();
            }
        }
    add_claim("fixed-field-generators-certified", gens_ok, 0, gen_fail);

    if (curve.is_lemniscatic) {
        Z4Options zo;
        zo.seed = opts.seed;
        zo.tolerance = opts.tolerance;
        auto z4 = build_z4_records(curve, bridge, zo);
        double worst = 0;
        for (const auto& r : z4) worst = std::max(worst, r.certificate.max_residual);
        add_claim("eight-z4-lines", z4.size() == 8, worst, "");
        for (auto& r : z4) rep.lines.push_back(std::move(r));
    }
    add_claim("total-line-count", rep.lines.size() == (curve.is_lemniscatic ? 14u : 6u), 0,
              std::to_string(rep.lines.size()) + " Galois lines");

    // Group enumeration matches the catalog size.
    {
        auto groups = enumerate_galois_groups_for_order(curve.is_lemniscatic ? 4 : 2);
        add_claim("group-enumeration-count", groups.size() == rep.lines.size(), 0,
                  std::to_string(groups.size()) + " groups pass the divisor condition");
    }

    // Pairwise incidence and the incidence <-> shared-involution law. Raw
    // geometric meets are recorded as they are; the certified law relates
    // vertex incidences to shared fixed-point involutions. Meets of a V4 and
    // a Z4 line away from the vertices exist (they refute the blanket
    // two-sided statement) and are counted and reported separately.
    bool incidence_law_ok = true;
    bool within_kind_ok = true;
    int cross_kind_non_vertex = 0;
    std::string cross_witness;
    double incidence_law_res = 0;
    for (size_t a = 0; a < rep.lines.size(); ++a)
        for (size_t b = a + 1; b < rep.lines.size(); ++b) {
            const auto& ra = rep.lines[a];
            const auto& rb = rep.lines[b];
            IncidenceEdge edge{static_cast<int>(a), static_cast<int>(b), false, std::nullopt, false, 0};
            auto shared = group_intersection(ra.group, rb.group);
            for (const auto& t : shared)
                edge.shared_involution = edge.shared_involution || t.is_reflection();
            std::optional<int> shared_vertex;
            for (const auto& t : shared)
                if (t.is_reflection()) shared_vertex = curve_vertex_of_involution(curve, t);

            bool both_exact = (ra.line_exact || ra.line_gauss) && (rb.line_exact || rb.line_gauss);
            if (ra.line_exact && rb.line_exact) {
                auto meet = meet_lines(*ra.line_exact, *rb.line_exact);
                edge.meet = meet.kind == LineMeet::Kind::Point;
                if (edge.meet)
                    for (int v = 0; v < 4; ++v)
                        if (*meet.point == rep.tetra.vertices[static_cast<size_t>(v)]) edge.vertex = v;
            } else if (both_exact) {
                GaussLine la = ra.line_gauss ? *ra.line_gauss : lift_line(*ra.line_exact);
                GaussLine lb = rb.line_gauss ? *rb.line_gauss : lift_line(*rb.line_exact);
                GaussMatrix planes(4, 4);
                int r = 0;
                for (const auto* l : {&la, &lb})
                    for (const auto& h : l->planes) {
                        for (int cidx = 0; cidx < 4; ++cidx) planes(r, cidx) = h[static_cast<size_t>(cidx)];
                        ++r;
                    }
                auto ker = planes.kernel();
                edge.meet = ker.size() == 1;
                if (edge.meet) {
                    for (int v = 0; v < 4; ++v) {
                        Vec4G vert = lift4(rep.tetra.vertices[static_cast<size_t>(v)].coords());
                        Vec4G pt{ker[0][0], ker[0][1], ker[0][2], ker[0][3]};
                        if (vec_proportional(pt, vert)) edge.vertex = v;
                    }
                }
            } else {
                double res = lines_meet_residual(ra.line, rb.line);
                edge.residual = res;
                edge.meet = res < std::sqrt(opts.tolerance);
                if (edge.meet) {
                    Eigen::Vector4cd pt = numeric_meeting_point(ra.line, rb.line);
                    for (int v = 0; v < 4; ++v) {
                        double d = projective_distance(pt, rep.tetra.vertices[static_cast<size_t>(v)].numeric());
                        if (d < std::sqrt(opts.tolerance)) {
                            edge.vertex = v;
                            incidence_law_res = std::max(incidence_law_res, d);
                        }
                    }
                }
            }
            bool meet_at_vertex = edge.meet && edge.vertex.has_value();
            bool consistent = meet_at_vertex == edge.shared_involution;
            if (meet_at_vertex && consistent)
                consistent = shared_vertex.has_value() && *edge.vertex == *shared_vertex;
            incidence_law_ok = incidence_law_ok && consistent;
            if (edge.meet && !edge.vertex) {
                if (ra.kind == rb.kind) {
                    within_kind_ok = false;
                } else {
                    ++cross_kind_non_vertex;
                    if (cross_witness.empty()) cross_witness = ra.label + " x " + rb.label;
                }
            }
            rep.incidence.push_back(edge);
        }
    add_claim("vertex-incidence-iff-shared-fixed-point-involution", incidence_law_ok, incidence_law_res,
              "meeting vertex is the cone vertex of the shared involution");
    add_claim("within-kind-meets-only-at-vertices", within_kind_ok, 0,
              "V4xV4 and Z4xZ4 intersections all occur at tetrahedron vertices");
    add_claim("cross-kind-non-vertex-meets",
              cross_kind_non_vertex == (curve.is_lemniscatic ? 8 : 0), 0,
              curve.is_lemniscatic
                  ? std::to_string(cross_kind_non_vertex) +
                        " V4xZ4 pairs cross away from the vertices (first: " + cross_witness + ")"
                  : "none expected off the lemniscatic curve");

    // Vertex degrees.
    for (int v = 0; v < 4; ++v) rep.vertex_degrees[v] = {0, 0};
    for (const auto& r : rep.lines)
        for (int v : r.incident_vertices) {
            if (r.kind == GaloisLineRecord::Kind::V4)
                rep.vertex_degrees[v].first++;
            else
                rep.vertex_degrees[v].second++;
        }
    bool degrees_ok = true;
    for (int v = 0; v < 4; ++v) {
        auto [nv4, nz4] = rep.vertex_degrees[v];
        degrees_ok = degrees_ok && nv4 == 3 && nz4 == (curve.is_lemniscatic ? 2 : 0);
    }
    add_claim(curve.is_lemniscatic ? "vertex-degrees-3-v4-plus-2-z4" : "vertex-degrees-3-v4",
              degrees_ok, 0, "");

    if (curve.is_lemniscatic) {
        // Pairings of the eight Z4 lines: exactly the pairs whose groups share
        // a fixed-point involution meet, at the vertex of that involution's
        // cone (the same derivation the group intersections give).
        struct Pairing { const char* a; const char* b; };
        const Pairing want[] = {{"l(0,0)", "l(2,2)"},
                                {"l(2,0)", "l(0,2)"},
                                {"l(1,1)", "l(3,3)"},
                                {"l(3,1)", "l(1,3)"}};
        auto find_line = [&](const std::string& label) -> int {
            for (size_t k = 0; k < rep.lines.size(); ++k)
                if (rep.lines[k].label == label) return static_cast<int>(k);
            return -1;
        };
        bool claim2 = true;
        double claim2_res = 0;
        std::string pairing_detail;
        for (const auto& w : want) {
            int ia = find_line(w.a), ib = find_line(w.b);
            if (ia < 0 || ib < 0) { claim2 = false; break; }
            auto shared = group_intersection(rep.lines[static_cast<size_t>(ia)].group,
                                             rep.lines[static_cast<size_t>(ib)].group);
            std::optional<int> expected;
            for (const auto& t : shared)
                if (t.is_reflection()) expected = curve_vertex_of_involution(curve, t);
            if (!expected) { claim2 = false; break; }
            bool found = false;
            for (const auto& e : rep.incidence)
                if ((e.line_a == std::min(ia, ib) && e.line_b == std::max(ia, ib))) {
                    found = e.meet && e.vertex && *e.vertex == *expected;
                    claim2_res = std::max(claim2_res, e.residual);
                }
            claim2 = claim2 && found;
            if (!pairing_detail.empty()) pairing_detail += ", ";
            pairing_detail += std::string(w.a) + "^" + w.b + "=Q" + std::to_string(*expected);
        }
        add_claim("z4-pairings-at-vertices", claim2, claim2_res, pairing_detail);

        bool skew_ok = true;
        for (const auto& e : rep.incidence) {
            const auto& ra = rep.lines[static_cast<size_t>(e.line_a)];
            const auto& rb = rep.lines[static_cast<size_t>(e.line_b)];
            if (ra.kind != GaloisLineRecord::Kind::Z4 || rb.kind != GaloisLineRecord::Kind::Z4)
                continue;
            if (e.meet && !e.vertex) skew_ok = false; // Z4 lines may only meet at vertices
        }
        add_claim("z4-lines-meet-only-at-vertices", skew_ok, 0, "");
    }

    // rho injectivity: distinct lines carry distinct groups.
    rep.rho_injective = true;
    for (size_t a = 0; a < rep.lines.size(); ++a)
        for (size_t b = a + 1; b < rep.lines.size(); ++b)
            if (groups_equal(rep.lines[a].group, rep.lines[b].group)) rep.rho_injective = false;
    add_claim("arrangement-map-injective", rep.rho_injective, 0, "");

    rep.discrepancies.push_back(
        "The printed fixed-field denominator (x - c_i) is not invariant under sigma_i on the "
        "j = 1728 curve; the certified generator uses (x - e_i), which also equals the "
        "plane-equation ratio (Y + c_i X)/(Z - e_i X) on the embedding.");
    rep.discrepancies.push_back(
        "Galois lines through opposite tetrahedron edges are disjoint yet share the 2-torsion "
        "translation of their groups; incidence corresponds to sharing an involution with fixed "
        "points (eps = -1), not to an arbitrary nontrivial intersection.");
    if (curve.is_lemniscatic)
        rep.discrepancies.push_back(
            "Eight V4xZ4 line pairs intersect away from the tetrahedron vertices with trivial "
            "group intersection (exact witness: the edge through Q1, Q2 meets the Z4 line "
            "{X+4Y=0, Z=0} at (4:-1:0:0) on the normal form). The two-sided meeting law "
            "therefore holds within each kind and for all vertex incidences, but not for "
            "arbitrary mixed pairs; the projection from such a crossing point yields a plane "
            "quartic with two distinct outer Galois points.");

    return rep;
}

} // namespace galois
