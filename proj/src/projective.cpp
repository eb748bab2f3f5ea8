#include "galois/projective.hpp"

#include <Eigen/SVD>

namespace galois {

namespace {

std::array<Rational, 4> canonicalize(std::array<Rational, 4> c, const char* what) {
    int first = -1;
    for (int i = 0; i < 4; ++i)
        if (c[static_cast<size_t>(i)] != 0) { first = i; break; }
    if (first < 0) throw invalid_input(std::string(what) + " with all coordinates zero");
    Rational inv = Rational(1) / c[static_cast<size_t>(first)];
    for (auto& x : c) x *= inv;
    return c;
}

std::array<Integer, 4> integer_rep(const std::array<Rational, 4>& c) {
    Integer l = 1;
    for (const auto& q : c) l = boost::multiprecision::lcm(l, den(q));
    std::array<Integer, 4> v;
    Integer g = 0;
    for (int i = 0; i < 4; ++i) {
        v[static_cast<size_t>(i)] = num(c[static_cast<size_t>(i)]) * (l / den(c[static_cast<size_t>(i)]));
        g = boost::multiprecision::gcd(g, v[static_cast<size_t>(i)]);
    }
    if (g == 0) g = 1;
    bool neg = false;
    for (const auto& x : v)
        if (x != 0) { neg = x < 0; break; }
    if (neg) g = -g;
    for (auto& x : v) x /= g;
    return v;
}

std::string coords_string(const std::array<Integer, 4>& v, char sep) {
    std::string s = "(";
    for (int i = 0; i < 4; ++i) {
        if (i) s += sep;
        s += v[static_cast<size_t>(i)].str();
    }
    return s + ")";
}

Eigen::Vector4cd to_vec(const std::array<Rational, 4>& c) {
    Eigen::Vector4cd v;
    for (int i = 0; i < 4; ++i) v[i] = to_double(c[static_cast<size_t>(i)]);
    return v;
}

} // namespace

ProjPoint::ProjPoint(Rational x, Rational y, Rational z, Rational w)
    : c_(canonicalize({std::move(x), std::move(y), std::move(z), std::move(w)}, "point")) {}
ProjPoint::ProjPoint(std::array<Rational, 4> coords) : c_(canonicalize(std::move(coords), "point")) {}

std::array<Integer, 4> ProjPoint::integer_coords() const { return integer_rep(c_); }
std::string ProjPoint::to_string() const { return coords_string(integer_coords(), ':'); }
Eigen::Vector4cd ProjPoint::numeric() const { return to_vec(c_); }

ProjPlane::ProjPlane(Rational a, Rational b, Rational c, Rational d)
    : c_(canonicalize({std::move(a), std::move(b), std::move(c), std::move(d)}, "plane")) {}
ProjPlane::ProjPlane(std::array<Rational, 4> coeffs) : c_(canonicalize(std::move(coeffs), "plane")) {}

Rational ProjPlane::eval(const ProjPoint& p) const {
    Rational s = 0;
    for (int i = 0; i < 4; ++i) s += c_[static_cast<size_t>(i)] * p[i];
    return s;
}

std::string ProjPlane::to_string() const { return coords_string(integer_rep(c_), ','); }
Eigen::Vector4cd ProjPlane::numeric() const { return to_vec(c_); }

ProjLine ProjLine::through(const ProjPoint& p, const ProjPoint& q) { return span_line(p, q); }

ProjLine ProjLine::cut_by(const ProjPlane& h1, const ProjPlane& h2) {
    RatMatrix m(2, 4);
    for (int j = 0; j < 4; ++j) {
        m(0, j) = h1[j];
        m(1, j) = h2[j];
    }
    auto ker = m.kernel();
    if (ker.size() != 2) throw degenerate_span("planes do not cut a line");
    ProjPoint a(std::array<Rational, 4>{ker[0][0], ker[0][1], ker[0][2], ker[0][3]});
    ProjPoint b(std::array<Rational, 4>{ker[1][0], ker[1][1], ker[1][2], ker[1][3]});
    return ProjLine({a, b}, {h1, h2});
}

bool ProjLine::contains(const ProjPoint& p) const {
    return pls_[0].contains(p) && pls_[1].contains(p);
}

std::array<Rational, 6> ProjLine::plucker() const {
    const auto& a = pts_[0].coords();
    const auto& b = pts_[1].coords();
    auto pl = [&](int i, int j) { return a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)] -
                                         a[static_cast<size_t>(j)] * b[static_cast<size_t>(i)]; };
    return {pl(0, 1), pl(0, 2), pl(0, 3), pl(1, 2), pl(1, 3), pl(2, 3)};
}

bool operator==(const ProjLine& a, const ProjLine& b) {
    return a.contains(b.point_a()) && a.contains(b.point_b());
}

std::string ProjLine::to_string() const {
    return "line{" + pts_[0].to_string() + ", " + pts_[1].to_string() + "}";
}

ProjLine ProjLine::assemble(const ProjPoint& p, const ProjPoint& q, const ProjPlane& h1,
                            const ProjPlane& h2) {
    if (p == q) throw degenerate_span("assemble: equal spanning points");
    for (const ProjPlane* h : {&h1, &h2})
        for (const ProjPoint* pt : {&p, &q})
            if (!h->contains(*pt)) throw construction_error("line representations inconsistent");
    return ProjLine({p, q}, {h1, h2});
}

ProjLine span_line(const ProjPoint& p, const ProjPoint& q) {
    if (p == q) throw degenerate_span("span_line called with equal points");
    RatMatrix m(2, 4);
    for (int j = 0; j < 4; ++j) {
        m(0, j) = p[j];
        m(1, j) = q[j];
    }
    auto ker = m.kernel(); // dual solve: planes through both points
    if (ker.size() != 2) throw degenerate_span("points do not span a line");
    ProjPlane h1(std::array<Rational, 4>{ker[0][0], ker[0][1], ker[0][2], ker[0][3]});
    ProjPlane h2(std::array<Rational, 4>{ker[1][0], ker[1][1], ker[1][2], ker[1][3]});
    return ProjLine::assemble(p, q, h1, h2);
}

LineMeet meet_lines(const ProjLine& l1, const ProjLine& l2) {
    RatMatrix m(4, 4);
    const ProjPoint* pts[4] = {&l1.point_a(), &l1.point_b(), &l2.point_a(), &l2.point_b()};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = (*pts[i])[j];
    int rk = m.rank();
    if (rk == 2) return {LineMeet::Kind::Equal, std::nullopt};
    if (rk == 4) return {LineMeet::Kind::Disjoint, std::nullopt};
    // rank 3: common point solves all four plane equations.
    RatMatrix planes(4, 4);
    const ProjPlane* pls[4] = {&l1.plane_a(), &l1.plane_b(), &l2.plane_a(), &l2.plane_b()};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) planes(i, j) = (*pls[i])[j];
    auto ker = planes.kernel();
    if (ker.size() != 1) throw construction_error("meet_lines: inconsistent incidence rank");
    return {LineMeet::Kind::Point,
            ProjPoint(std::array<Rational, 4>{ker[0][0], ker[0][1], ker[0][2], ker[0][3]})};
}

ProjPlane plane_through(const ProjLine& l, const ProjPoint& p) {
    if (l.contains(p)) throw degenerate_span("plane_through: point lies on the line");
    RatMatrix m(3, 4);
    const ProjPoint* pts[3] = {&l.point_a(), &l.point_b(), &p};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = (*pts[i])[j];
    auto ker = m.kernel();
    if (ker.size() != 1) throw degenerate_span("plane_through: degenerate configuration");
    return ProjPlane(std::array<Rational, 4>{ker[0][0], ker[0][1], ker[0][2], ker[0][3]});
}

QuadricForm::QuadricForm(RatMatrix sym) : m_(std::move(sym)) {
    if (m_.rows() != 4 || m_.cols() != 4) throw invalid_input("quadric form must be 4x4");
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (!(m_(i, j) == m_(j, i))) throw invalid_input("quadric form must be symmetric");
}

Rational QuadricForm::eval(const std::array<Rational, 4>& v) const {
    Rational s = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) s += m_(i, j) * v[static_cast<size_t>(i)] * v[static_cast<size_t>(j)];
    return s;
}

Rational QuadricForm::eval(const ProjPoint& p) const { return eval(p.coords()); }

QuadricForm QuadricForm::transformed(const RatMatrix& m) const {
    return QuadricForm(m.transpose() * m_ * m);
}

std::array<Rational, 3> QuadricForm::restrict_to(const ProjLine& l) const {
    const auto& a = l.point_a().coords();
    const auto& b = l.point_b().coords();
    Rational qaa = eval(a), qbb = eval(b), qab = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) qab += m_(i, j) * a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
    return {qaa, 2 * qab, qbb};
}

Eigen::Matrix4cd QuadricForm::numeric() const {
    Eigen::Matrix4cd m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = to_double(m_(i, j));
    return m;
}

SingularLocus quadric_singular_locus(const QuadricForm& s) {
    const RatMatrix& m = s.sym();
    bool nonzero = false;
    for (int i = 0; i < 4 && !nonzero; ++i)
        for (int j = 0; j < 4 && !nonzero; ++j) nonzero = !(m(i, j) == 0);
    if (!nonzero) throw invalid_input("singular locus of the zero quadric");
    SingularLocus out;
    out.rank = m.rank();
    for (auto& v : m.kernel())
        out.kernel_points.emplace_back(std::array<Rational, 4>{v[0], v[1], v[2], v[3]});
    return out;
}

NumericLine numeric_line_from_planes(const Eigen::Vector4cd& h1, const Eigen::Vector4cd& h2) {
    Eigen::MatrixXcd m(2, 4);
    m.row(0) = h1.transpose();
    m.row(1) = h2.transpose();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullV);
    NumericLine l;
    l.a = svd.matrixV().col(2);
    l.b = svd.matrixV().col(3);
    l.h1 = h1.normalized();
    l.h2 = h2.normalized();
    return l;
}

NumericLine to_numeric(const ProjLine& l) {
    NumericLine n;
    n.a = l.point_a().numeric().normalized();
    n.b = l.point_b().numeric().normalized();
    n.h1 = l.plane_a().numeric().normalized();
    n.h2 = l.plane_b().numeric().normalized();
    return n;
}

Eigen::Vector4cd projective_normalize(const Eigen::Vector4cd& v) {
    int imax = 0;
    double best = 0;
    for (int i = 0; i < 4; ++i)
        if (std::abs(v[i]) > best) { best = std::abs(v[i]); imax = i; }
    if (best == 0) return v;
    return v / v[imax];
}

double projective_distance(const Eigen::Vector4cd& a, const Eigen::Vector4cd& b) {
    Eigen::Vector4cd u = a.normalized(), v = b.normalized();
    std::complex<double> ip = (u.adjoint() * v)(0, 0);
    double c = std::min(1.0, std::abs(ip));
    return std::sqrt(std::max(0.0, 1.0 - c * c));
}

double lines_meet_residual(const NumericLine& l1, const NumericLine& l2) {
    Eigen::Matrix4cd m;
    m.row(0) = l1.a.normalized().transpose();
    m.row(1) = l1.b.normalized().transpose();
    m.row(2) = l2.a.normalized().transpose();
    m.row(3) = l2.b.normalized().transpose();
    Eigen::JacobiSVD<Eigen::Matrix4cd> svd(m);
    return svd.singularValues()(3) / svd.singularValues()(0);
}

Eigen::Vector4cd numeric_meeting_point(const NumericLine& l1, const NumericLine& l2) {
    Eigen::Matrix4cd m;
    m.row(0) = l1.h1.transpose();
    m.row(1) = l1.h2.transpose();
    m.row(2) = l2.h1.transpose();
    m.row(3) = l2.h2.transpose();
    Eigen::JacobiSVD<Eigen::Matrix4cd> svd(m, Eigen::ComputeFullV);
    return svd.matrixV().col(3);
}

double point_on_line_residual(const Eigen::Vector4cd& p, const NumericLine& l) {
    Eigen::Vector4cd u = p.normalized();
    return std::max(std::abs((l.h1.transpose() * u)(0, 0)),
                    std::abs((l.h2.transpose() * u)(0, 0)));
}

} // namespace galois
