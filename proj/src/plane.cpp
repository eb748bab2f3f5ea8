#include "galois/plane.hpp"

#include <algorithm>
#include <random>

namespace galois {

// ---------------- TrivariateForm ----------------

void TrivariateForm::add(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    if (m[0] + m[1] + m[2] != degree_ || m[0] < 0 || m[1] < 0 || m[2] < 0)
        throw invalid_input("monomial degree mismatch in trivariate form");
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational TrivariateForm::eval(const std::array<Rational, 3>& p) const {
    Rational acc = 0;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (int v = 0; v < 3; ++v)
            for (int k = 0; k < m[static_cast<size_t>(v)]; ++k) t *= p[static_cast<size_t>(v)];
        acc += t;
    }
    return acc;
}

Complex TrivariateForm::eval(const Eigen::Vector3cd& p) const {
    Complex acc(0, 0);
    for (const auto& [m, c] : terms_) {
        Complex t = to_double(c);
        for (int v = 0; v < 3; ++v)
            for (int k = 0; k < m[static_cast<size_t>(v)]; ++k) t *= p(v);
        acc += t;
    }
    return acc;
}

std::optional<TrivariateForm> TrivariateForm::square_root_up_to_scalar() const {
    if (is_zero() || degree_ % 2 != 0) return std::nullopt;
    // Scale the leading (lex-largest) coefficient to 1, then peel terms: the
    // lex-leading monomial of a square is the square of the root's leading
    // monomial, and each further coefficient is forced by the current
    // leading term of the residual.
    Monomial lead = terms_.rbegin()->first;
    if (lead[0] % 2 || lead[1] % 2 || lead[2] % 2) return std::nullopt;
    Rational scale = Rational(1) / terms_.rbegin()->second;
    TrivariateForm target = scale * *this;
    Monomial mu{lead[0] / 2, lead[1] / 2, lead[2] / 2};
    TrivariateForm root(degree_ / 2);
    root.add(mu, Rational(1));
    for (int guard = 0; guard < 64; ++guard) {
        TrivariateForm r = target - root * root;
        if (r.is_zero()) return root;
        Monomial top = r.terms().rbegin()->first;
        Rational c = r.terms().rbegin()->second;
        Monomial t{top[0] - mu[0], top[1] - mu[1], top[2] - mu[2]};
        if (t[0] < 0 || t[1] < 0 || t[2] < 0) return std::nullopt;
        if (!(t < mu)) return std::nullopt; // must strictly descend
        root.add(t, c / 2);
    }
    return std::nullopt;
}

std::map<std::string, std::string> TrivariateForm::coefficient_map() const {
    auto key = [](const Monomial& m) {
        const char* names[3] = {"x", "y", "z"};
        std::string s;
        for (int v = 0; v < 3; ++v) {
            int e = m[static_cast<size_t>(v)];
            if (e == 0) continue;
            if (!s.empty()) s += "*";
            s += names[v];
            if (e > 1) s += "^" + std::to_string(e);
        }
        return s.empty() ? std::string("1") : s;
    };
    std::map<std::string, std::string> out;
    for (const auto& [m, c] : terms_) out[key(m)] = galois::to_string(c);
    return out;
}

std::string TrivariateForm::to_string() const {
    std::string s;
    for (const auto& [k, v] : coefficient_map()) {
        if (!s.empty()) s += " + ";
        s += v + "*" + k;
    }
    return s.empty() ? "0" : s;
}

// ---------------- projection ----------------

namespace {

// W-direction coefficients of a transformed quadric: G = A w^2 + B w + C.
struct WSplit {
    Rational a;          // coefficient of w^2
    TrivariateForm b;    // degree 1
    TrivariateForm c;    // degree 2
};

WSplit split_quadric(const RatMatrix& sym) {
    WSplit out{sym(3, 3), TrivariateForm(1), TrivariateForm(2)};
    for (int i = 0; i < 3; ++i) {
        TrivariateForm::Monomial m{0, 0, 0};
        m[static_cast<size_t>(i)] = 1;
        out.b.add(m, 2 * sym(i, 3));
    }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            TrivariateForm::Monomial m{0, 0, 0};
            m[static_cast<size_t>(i)] += 1;
            m[static_cast<size_t>(j)] += 1;
            out.c.add(m, sym(i, j));
        }
    return out;
}

// Resultant in w of two quadratics with polynomial coefficients:
// Res = (a1 c2 - a2 c1)^2 - (a1 b2 - a2 b1)(b1 c2 - b2 c1).
TrivariateForm resultant_w(const WSplit& f, const WSplit& g) {
    TrivariateForm ac = f.a * g.c - g.a * f.c;   // degree 2
    TrivariateForm ab = f.a * g.b - g.a * f.b;   // degree 1
    TrivariateForm bc = f.b * g.c - g.b * f.c;   // degree 3
    return ac * ac - ab * bc;
}

std::array<Rational, 3> canonical3(std::array<Rational, 3> v) {
    int first = -1;
    for (int i = 0; i < 3; ++i)
        if (v[static_cast<size_t>(i)] != 0) { first = i; break; }
    if (first < 0) throw invalid_input("zero plane point");
    Rational inv = Rational(1) / v[static_cast<size_t>(first)];
    for (auto& x : v) x *= inv;
    return v;
}

} // namespace

PlaneCurveRecord project_curve(const EllipticCurveModel& curve, const ProjPoint& center) {
    Rational f1p = curve.f1.eval(center);
    Rational f2p = curve.f2.eval(center);
    if (f1p == 0 && f2p == 0) throw invalid_center("projection center lies on the curve");

    // T: unit columns for the coordinates other than the pivot, center last.
    int pivot = 0;
    while (center[pivot] == 0) ++pivot;
    RatMatrix t(4, 4);
    int col = 0;
    for (int i = 0; i < 4; ++i) {
        if (i == pivot) continue;
        t(i, col++) = 1;
    }
    for (int i = 0; i < 4; ++i) t(i, 3) = center[i];

    RatMatrix g1 = curve.f1.transformed(t).sym();
    RatMatrix g2 = curve.f2.transformed(t).sym();
    // Both leading w-coefficients (the quadrics at the center) must be
    // nonzero; fix up within the pencil when the center sits on one quadric.
    if (g1(3, 3) == 0) std::swap(g1, g2);
    if (g2(3, 3) == 0) g2 = g1 + g2;

    TrivariateForm quartic = resultant_w(split_quadric(g1), split_quadric(g2));
    if (quartic.is_zero()) throw degenerate_pencil("elimination resultant vanished identically");

    auto conic = quartic.square_root_up_to_scalar();
    PlaneCurveRecord rec{quartic, 4,          center, t, conic.has_value(),
                         conic,   0.0};

    // Membership: 20 numeric curve samples land on the form.
    CurveTorusBridge bridge = make_bridge(curve);
    RatMatrix tinv = t.inverse();
    Eigen::Matrix4cd tinv_num;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) tinv_num(i, j) = to_double(tinv(i, j));
    std::mt19937_64 gen(12345);
    auto uniform = [&] { return double(gen() >> 11) * (1.0 / 9007199254740992.0); };
    double worst = 0;
    for (int k = 0; k < 20; ++k) {
        Complex z(0.06 + 0.88 * uniform(), 0.06 + 0.88 * uniform());
        Eigen::Vector4cd q = tinv_num * torus_point(bridge, z);
        Eigen::Vector3cd img;
        img << q(0), q(1), q(2);
        double scale = std::pow(img.norm(), 4);
        if (scale < 1e-30) continue;
        worst = std::max(worst, std::abs(quartic.eval(img)) / scale);
    }
    rec.membership_residual = worst;
    if (worst > 1e-8)
        throw construction_error("projected samples do not satisfy the eliminated form");
    return rec;
}

std::optional<std::array<Rational, 3>> project_point(const PlaneCurveRecord& rec,
                                                     const ProjPoint& p) {
    RatMatrix tinv = rec.coord_change.inverse();
    std::vector<Rational> v = {p[0], p[1], p[2], p[3]};
    std::vector<Rational> w = tinv.apply(v);
    if (w[0] == 0 && w[1] == 0 && w[2] == 0) return std::nullopt; // the center itself
    return canonical3({w[0], w[1], w[2]});
}

CenterClassification classify_center(const EllipticCurveModel& curve,
                                     const std::vector<GaloisLineRecord>& catalog,
                                     const ProjPoint& p, double tol) {
    Tetrahedron tet = tetrahedron(curve);
    for (int v = 0; v < 4; ++v)
        if (tet.vertices[static_cast<size_t>(v)] == p)
            return {CenterClassification::Kind::Vertex, v, std::nullopt};
    for (size_t k = 0; k < catalog.size(); ++k) {
        const auto& rec = catalog[k];
        if (rec.line_exact) {
            if (rec.line_exact->contains(p))
                return {CenterClassification::Kind::OnGaloisLine, std::nullopt, static_cast<int>(k)};
        } else {
            if (point_on_line_residual(p.numeric(), rec.line) < std::sqrt(tol))
                return {CenterClassification::Kind::OnGaloisLine, std::nullopt, static_cast<int>(k)};
        }
    }
    return {CenterClassification::Kind::Generic, std::nullopt, std::nullopt};
}

std::vector<RatMatrix> descend_transforms(const GaloisLineRecord& source,
                                          const PlaneCurveRecord& rec) {
    std::vector<RatMatrix> out;
    RatMatrix tinv = rec.coord_change.inverse();
    for (const auto& tr : source.matrices) {
        if (!tr.is_exact()) continue;
        RatMatrix m(4, 4);
        try {
            m = tr.rational();
        } catch (const Error&) {
            continue; // non-real entries never descend to a real plane map here
        }
        RatMatrix conj = tinv * m * rec.coord_change;
        // Descends iff the center direction is fixed: the first three entries
        // of the last column vanish.
        if (!(conj(0, 3) == 0 && conj(1, 3) == 0 && conj(2, 3) == 0)) continue;
        RatMatrix block(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) block(i, j) = conj(i, j);
        out.push_back(std::move(block));
    }
    return out;
}

namespace {

TrivariateForm compose_linear(const TrivariateForm& f, const RatMatrix& g) {
    // f(g x): substitute each variable by the linear form given by g's rows.
    std::array<TrivariateForm, 3> lin{TrivariateForm(1), TrivariateForm(1), TrivariateForm(1)};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            TrivariateForm::Monomial m{0, 0, 0};
            m[static_cast<size_t>(j)] = 1;
            lin[static_cast<size_t>(i)].add(m, g(i, j));
        }
    TrivariateForm out(f.degree());
    for (const auto& [m, c] : f.terms()) {
        TrivariateForm term(0);
        term.add({0, 0, 0}, c);
        for (int v = 0; v < 3; ++v)
            for (int k = 0; k < m[static_cast<size_t>(v)]; ++k) term = term * lin[static_cast<size_t>(v)];
        out = out + term;
    }
    return out;
}

bool proportional_forms(const TrivariateForm& a, const TrivariateForm& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.degree() != b.degree()) return false;
    const auto& [m0, c0] = *b.terms().begin();
    Rational lambda = a.coeff(m0) / c0;
    if (lambda == 0) return false;
    return a == lambda * b;
}

bool vec3_proportional(const std::array<Rational, 3>& a, const std::array<Rational, 3>& b) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)] !=
                a[static_cast<size_t>(j)] * b[static_cast<size_t>(i)])
                return false;
    return true;
}

} // namespace

PlaneGaloisCheck verify_plane_galois_point(const PlaneCurveRecord& rec,
                                           const std::array<Rational, 3>& candidate,
                                           const std::vector<RatMatrix>& induced,
                                           const GaloisLineRecord* source,
                                           const EllipticCurveModel& curve) {
    PlaneGaloisCheck out;
    if (candidate[0] == 0 && candidate[1] == 0 && candidate[2] == 0)
        throw invalid_input("candidate plane point is zero");
    std::array<Rational, 3> r = canonical3(candidate);

    if (rec.form.eval(r) == 0) {
        out.reason = "candidate lies on the quartic";
        return out;
    }
    if (rec.is_conic_square) {
        out.reason = "projection is 2:1 onto a conic; no plane Galois point arises";
        return out;
    }

    // Linear witnesses: every supplied transform must preserve the form up to
    // scalar, fix the candidate, and fix the pencil of lines through it.
    for (const auto& g : induced) {
        if (!proportional_forms(compose_linear(rec.form, g), rec.form)) {
            out.reason = "a supplied transform does not preserve the quartic";
            return out;
        }
        std::vector<Rational> img = g.apply({r[0], r[1], r[2]});
        if (!vec3_proportional({img[0], img[1], img[2]}, r)) {
            out.reason = "a supplied transform moves the candidate point";
            return out;
        }
        // Lines through the candidate: dual vectors L with L(r) = 0; the dual
        // action restricted to that 2-space must be scalar.
        RatMatrix dual(1, 3);
        for (int j = 0; j < 3; ++j) dual(0, j) = r[static_cast<size_t>(j)];
        auto basis = dual.kernel();
        RatMatrix gt = g.transpose();
        std::optional<Rational> lambda;
        for (const auto& l : basis) {
            std::vector<Rational> li = gt.apply(l);
            // li must lie in span(basis) with one common scalar: solve
            // li = alpha * l + beta * other exactly.
            RatMatrix sys(3, 2);
            for (int i = 0; i < 3; ++i) {
                sys(i, 0) = basis[0][static_cast<size_t>(i)];
                sys(i, 1) = basis[1][static_cast<size_t>(i)];
            }
            std::vector<Rational> sol;
            try {
                sol = sys.solve(li);
            } catch (const Error&) {
                out.reason = "a supplied transform does not fix the line pencil";
                return out;
            }
            Rational diag = (&l == &basis[0]) ? sol[0] : sol[1];
            Rational off = (&l == &basis[0]) ? sol[1] : sol[0];
            if (off != 0) {
                out.reason = "a supplied transform mixes the line pencil";
                return out;
            }
            if (!lambda)
                lambda = diag;
            else if (!(*lambda == diag)) {
                out.reason = "pencil scalars disagree";
                return out;
            }
        }
        ++out.descended_count;
    }

    // Order-4 Galois structure through the space certificate: the center is a
    // non-vertex point of a certified Galois line and the candidate is that
    // line's image, so the plane covering from the candidate coincides with
    // the space covering from the line (the projection itself is birational,
    // which the non-square form already witnesses).
    if (!source) {
        out.reason = "no certified source line for the candidate";
        return out;
    }
    if (!source->certificate.passed()) {
        out.reason = "source line certificate failed";
        return out;
    }
    bool center_on_line = false;
    if (source->line_exact)
        center_on_line = source->line_exact->contains(rec.center);
    else
        center_on_line = point_on_line_residual(rec.center.numeric(), source->line) < 1e-6;
    if (!center_on_line) {
        out.reason = "projection center is not on the source line";
        return out;
    }
    Tetrahedron tet = tetrahedron(curve);
    for (const auto& v : tet.vertices)
        if (v == rec.center) {
            out.reason = "center is a tetrahedron vertex (2:1 projection)";
            return out;
        }
    // Candidate must be the image of the line.
    if (source->line_exact) {
        const ProjPoint& a = source->line_exact->point_a();
        const ProjPoint& b = source->line_exact->point_b();
        std::optional<std::array<Rational, 3>> ia = project_point(rec, a);
        std::optional<std::array<Rational, 3>> ib = project_point(rec, b);
        if (!ia) {
            // center equals a; take another point of the line
            ia = project_point(rec, ProjPoint(a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]));
        }
        if (!ib) {
            ib = project_point(rec, ProjPoint(a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]));
        }
        if (!ia || !ib || !vec3_proportional(*ia, *ib) || !vec3_proportional(*ia, r)) {
            out.reason = "candidate is not the image of the source line";
            return out;
        }
    } else {
        out.reason = "source line has no exact representation";
        return out;
    }

    auto irr = form_irreducible_spot_check(rec.form);
    out.quartic_irreducible = irr.status == IrreducibilityResult::Status::Irreducible;

    out.galois = true;
    out.reason = "verified: " + std::string(source->kind == GaloisLineRecord::Kind::V4 ? "V4" : "Z4") +
                 " Galois point at the image of " + source->label;
    return out;
}

// ---------------- irreducibility ----------------

namespace {

using ModPoly = std::vector<std::uint64_t>; // low degree first, coefficients mod p

ModPoly mod_trim(ModPoly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

ModPoly mod_mul(const ModPoly& a, const ModPoly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    ModPoly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    return mod_trim(out);
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    base %= p;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

ModPoly mod_rem(ModPoly a, const ModPoly& b, std::uint64_t p) {
    a = mod_trim(std::move(a));
    std::uint64_t inv = mod_pow(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
        std::uint64_t c = a.back() * inv % p;
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] = (a[shift + i] + p - c * b[i] % p) % p;
        a = mod_trim(std::move(a));
        if (a.empty()) break;
    }
    return a;
}

ModPoly mod_gcd(ModPoly a, ModPoly b, std::uint64_t p) {
    a = mod_trim(std::move(a));
    b = mod_trim(std::move(b));
    while (!b.empty()) {
        ModPoly r = mod_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

ModPoly mod_pow_x(std::uint64_t e, const ModPoly& f, std::uint64_t p) {
    // x^e mod f
    ModPoly result{1};
    ModPoly base{0, 1};
    base = mod_rem(base, f, p);
    while (e) {
        if (e & 1) result = mod_rem(mod_mul(result, base, p), f, p);
        base = mod_rem(mod_mul(base, base, p), f, p);
        e >>= 1;
    }
    return result;
}

bool irreducible_mod_p(const std::vector<Integer>& coeffs, std::uint64_t p) {
    ModPoly f(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) {
        Integer c = coeffs[i] % Integer(p);
        if (c < 0) c += Integer(p);
        f[i] = c.convert_to<std::uint64_t>();
    }
    f = mod_trim(std::move(f));
    if (f.size() != coeffs.size()) return false; // leading coefficient vanished
    // No roots in F_p (linear factors) and no quadratic factors:
    // gcd(x^(p^k) - x, f) must be constant for k = 1, 2.
    for (int k = 1; k <= 2; ++k) {
        std::uint64_t e = (k == 1) ? p : p * p;
        ModPoly xp = mod_pow_x(e, f, p);
        if (xp.size() < 2) xp.resize(2, 0);
        xp[1] = (xp[1] + p - 1) % p; // x^(p^k) - x
        ModPoly g = mod_gcd(f, mod_trim(std::move(xp)), p);
        if (g.size() > 1) return false;
    }
    return true;
}

} // namespace

IrreducibilityResult quartic_irreducible_over_q(const RatPoly& f) {
    if (f.degree() != 4) return {IrreducibilityResult::Status::Reducible, "degree below 4"};
    // Integer model.
    Integer l = 1;
    for (int k = 0; k <= 4; ++k) l = boost::multiprecision::lcm(l, den(f.coeff(k)));
    std::vector<Integer> c;
    for (int k = 0; k <= 4; ++k) c.push_back(num(f.coeff(k)) * (l / den(f.coeff(k))));

    for (std::uint64_t p : {3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull,
                            37ull, 41ull, 43ull, 47ull, 53ull, 59ull, 61ull, 67ull, 71ull, 73ull,
                            79ull, 83ull, 89ull, 97ull}) {
        if (c.back() % Integer(p) == 0) continue;
        if (irreducible_mod_p(c, p))
            return {IrreducibilityResult::Status::Irreducible, "irreducible mod " + std::to_string(p)};
    }

    // Explicit factor search: rational roots, then quadratic splittings via
    // the resolvent cubic, all certified by exact multiplication.
    RatPoly monic = f.monic();
    {
        Eigen::Matrix4cd comp = Eigen::Matrix4cd::Zero();
        for (int i = 0; i < 3; ++i) comp(i + 1, i) = 1;
        for (int i = 0; i < 4; ++i) comp(i, 3) = -to_double(monic.coeff(i));
        Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(comp);
        for (int i = 0; i < 4; ++i) {
            Complex root = es.eigenvalues()(i);
            if (std::fabs(root.imag()) > 1e-8) continue;
            if (auto q = rationalize(root.real(), 1000000000000ull, 1e-6))
                if (monic.eval<Rational>(*q) == 0)
                    return {IrreducibilityResult::Status::Reducible,
                            "rational root " + to_string(*q)};
        }
    }
    // Depress: x -> t - a3/4.
    Rational sh = monic.coeff(3) / 4;
    RatPoly t_shift({-sh, Rational(1)});
    RatPoly dep = RatPoly::constant(monic.coeff(4));
    for (int k = 3; k >= 0; --k) dep = dep * t_shift + RatPoly::constant(monic.coeff(k));
    Rational P = dep.coeff(2), Q = dep.coeff(1), R = dep.coeff(0);
    // Resolvent cubic z^3 - P z^2 - 4 R z + (4 P R - Q^2); rational roots by
    // numeric localization plus exact verification.
    RatPoly res({4 * P * R - Q * Q, -4 * R, -P, Rational(1)});
    std::vector<Rational> thetas;
    {
        Eigen::Matrix3cd comp = Eigen::Matrix3cd::Zero();
        for (int i = 0; i < 2; ++i) comp(i + 1, i) = 1;
        for (int i = 0; i < 3; ++i) comp(i, 2) = -to_double(res.coeff(i));
        Eigen::ComplexEigenSolver<Eigen::Matrix3cd> es(comp);
        for (int i = 0; i < 3; ++i) {
            Complex root = es.eigenvalues()(i);
            if (std::fabs(root.imag()) > 1e-8) continue;
            if (auto q = rationalize(root.real(), 1000000000000ull, 1e-6))
                if (res.eval<Rational>(*q) == 0) thetas.push_back(*q);
        }
    }
    for (const Rational& theta : thetas) {
        // (t^2 + u t + v)(t^2 - u t + w) with v + w = theta, u^2 = theta - P.
        auto u = rational_sqrt(theta - P);
        if (!u) continue;
        if (*u != 0) {
            Rational wmv = Q / *u; // w - v
            Rational v = (theta - wmv) / 2, w = (theta + wmv) / 2;
            if (v * w == R) {
                RatPoly fac1({v, *u, Rational(1)});
                RatPoly fac2({w, -*u, Rational(1)});
                if (fac1 * fac2 == dep)
                    return {IrreducibilityResult::Status::Reducible,
                            "splits into quadratics over Q"};
            }
        } else if (Q == 0) {
            auto disc = rational_sqrt(theta * theta - 4 * R);
            if (disc) return {IrreducibilityResult::Status::Reducible, "biquadratic split"};
        }
    }
    return {IrreducibilityResult::Status::Unknown, "no certificate found"};
}

IrreducibilityResult form_irreducible_spot_check(const TrivariateForm& form, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    for (int attempt = 0; attempt < 24; ++attempt) {
        auto small = [&]() { return Rational(static_cast<int>(gen() % 9) - 4); };
        std::array<Rational, 3> a{small(), small(), small()};
        std::array<Rational, 3> b{small(), small(), small()};
        if (form.eval(a) == 0) continue; // need full degree in the parameter
        // Restrict to s*a + t*b, dehomogenize t = 1.
        RatPoly restricted = RatPoly::zero();
        for (const auto& [m, c] : form.terms()) {
            RatPoly term = RatPoly::constant(c);
            for (int v = 0; v < 3; ++v) {
                RatPoly lin({b[static_cast<size_t>(v)], a[static_cast<size_t>(v)]});
                for (int k = 0; k < m[static_cast<size_t>(v)]; ++k) term = term * lin;
            }
            restricted += term;
        }
        if (restricted.degree() != 4) continue;
        auto r = quartic_irreducible_over_q(restricted);
        if (r.status == IrreducibilityResult::Status::Irreducible) return r;
        // A reducible restriction is inconclusive for the form; try another line.
    }
    return {IrreducibilityResult::Status::Unknown, "spot check inconclusive"};
}

} // namespace galois
