#include "galois/torus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace galois {

namespace {

Rational reduce_mod_one(Rational v) {
    Integer n = num(v), d = den(v);
    Integer q = n / d;
    Rational r = v - Rational(q);
    if (r < 0) r += 1;
    return r;
}

} // namespace

LatticeFraction::LatticeFraction(Rational r_, Rational s_)
    : r(reduce_mod_one(std::move(r_))), s(reduce_mod_one(std::move(s_))) {}

int UnitMultiplier::order() const {
    UnitMultiplier u = *this;
    for (int k = 1; k <= 6; ++k) {
        if (u.is_identity()) return k;
        u = u * *this;
    }
    return 0;
}

int TorusAutomorphism::order() const {
    TorusAutomorphism t = *this;
    for (int k = 1; k <= 12; ++k) {
        if (t.is_identity()) return k;
        t = t * *this;
    }
    return 0;
}

std::string TorusAutomorphism::to_string() const {
    if (is_identity()) return "id";
    if (auto i = sigma_index(*this)) return "sigma_" + std::to_string(*i);
    if (is_translation()) return "t" + alpha.to_string();
    std::string e = "[" + std::to_string(eps.m[0]) + "," + std::to_string(eps.m[1]) + ";" +
                    std::to_string(eps.m[2]) + "," + std::to_string(eps.m[3]) + "]";
    return "(eps=" + e + ", alpha=" + alpha.to_string() + ")";
}

TorusAutomorphism sigma_involution(int index) {
    static const Rational h(1, 2);
    switch (index) {
        case 0: return {UnitMultiplier::minus_identity(), {}};
        case 1: return {UnitMultiplier::minus_identity(), LatticeFraction(h, Rational(0))};
        case 2: return {UnitMultiplier::minus_identity(), LatticeFraction(Rational(0), h)};
        case 3: return {UnitMultiplier::minus_identity(), LatticeFraction(h, h)};
        default: throw invalid_input("sigma index must be 0..3");
    }
}

std::optional<int> sigma_index(const TorusAutomorphism& t) {
    for (int i = 0; i < 4; ++i)
        if (t == sigma_involution(i)) return i;
    return std::nullopt;
}

bool AutomorphismGroup::contains(const TorusAutomorphism& t) const {
    return std::find(elements.begin(), elements.end(), t) != elements.end();
}

std::optional<TorusAutomorphism> AutomorphismGroup::generator() const {
    for (const auto& t : elements)
        if (t.order() == 4) return t;
    return std::nullopt;
}

AutomorphismGroup make_group(std::vector<TorusAutomorphism> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    AutomorphismGroup g;
    g.elements = std::move(elements);
    if (g.elements.size() == 4) {
        bool has4 = false, all_inv = true;
        for (const auto& t : g.elements) {
            int o = t.order();
            has4 = has4 || o == 4;
            all_inv = all_inv && (o == 1 || o == 2);
        }
        if (has4)
            g.kind = AutomorphismGroup::Kind::Z4;
        else if (all_inv)
            g.kind = AutomorphismGroup::Kind::V4;
    }
    // Customary labels where they apply.
    if (g.kind == AutomorphismGroup::Kind::V4) {
        std::vector<int> idx;
        for (const auto& t : g.elements)
            if (auto i = sigma_index(t)) idx.push_back(*i);
        if (idx.size() == 2) {
            std::sort(idx.begin(), idx.end());
            g.v4_indices = {{idx[0], idx[1]}};
            g.label = "G" + std::to_string(idx[0]) + std::to_string(idx[1]);
        }
    } else if (g.kind == AutomorphismGroup::Kind::Z4) {
        if (auto gen = g.generator()) {
            Rational m4 = 4 * gen->alpha.r, n4 = 4 * gen->alpha.s;
            if (is_integer(m4) && is_integer(n4)) {
                int m = static_cast<int>(num(m4)), n = static_cast<int>(num(n4));
                // Of the two order-4 generators, label by the one whose
                // eps acts as multiplication by +i, i.e. matrix
                // [[0,-1],[1,0]] for a square lattice basis.
                if (gen->eps.m == std::array<int, 4>{0, -1, 1, 0}) {
                    g.z4_mn = {{m, n}};
                } else {
                    for (const auto& t : g.elements)
                        if (t.order() == 4 && t.eps.m == std::array<int, 4>{0, -1, 1, 0}) {
                            Rational tm = 4 * t.alpha.r, tn = 4 * t.alpha.s;
                            if (is_integer(tm) && is_integer(tn))
                                g.z4_mn = {{static_cast<int>(num(tm)), static_cast<int>(num(tn))}};
                        }
                }
                if (g.z4_mn)
                    g.label = "G(" + std::to_string((*g.z4_mn)[0]) + "," +
                              std::to_string((*g.z4_mn)[1]) + ")";
            }
        }
        if (g.label.empty()) g.label = "Z4-group";
    }
    if (g.label.empty()) g.label = "group";
    return g;
}

namespace {

std::optional<AutomorphismGroup> closure_of_order_4(const TorusAutomorphism& a,
                                                    const TorusAutomorphism& b) {
    std::set<TorusAutomorphism> s{TorusAutomorphism::identity(), a, b};
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<TorusAutomorphism> cur(s.begin(), s.end());
        for (const auto& x : cur)
            for (const auto& y : cur) {
                if (s.insert(x * y).second) grew = true;
                if (s.size() > 4) return std::nullopt;
            }
    }
    if (s.size() != 4) return std::nullopt;
    return make_group(std::vector<TorusAutomorphism>(s.begin(), s.end()));
}

} // namespace

AutomorphismGroup v4_group(int i, int j) {
    if (!(0 <= i && i < j && j <= 3)) throw invalid_input("v4_group needs 0 <= i < j <= 3");
    auto g = closure_of_order_4(sigma_involution(i), sigma_involution(j));
    if (!g) throw construction_error("sigma pair did not close to a group of order 4");
    return *g;
}

AutomorphismGroup z4_group(int m, int n) {
    TorusAutomorphism gen{UnitMultiplier{{0, -1, 1, 0}},
                          LatticeFraction(Rational(m, 4), Rational(n, 4))};
    if (gen.order() != 4) throw invalid_input("z -> iz + (m+ni)/4 does not have order 4");
    auto g = closure_of_order_4(gen, gen);
    if (!g) throw construction_error("Z4 generator did not close to order 4");
    return *g;
}

bool diamond_check(const AutomorphismGroup& g) {
    if (g.elements.size() != 4) return false;
    std::array<int, 4> eps_sum{0, 0, 0, 0};
    Rational r_sum = 0, s_sum = 0;
    bool nontrivial_eps = false;
    for (const auto& t : g.elements) {
        for (int k = 0; k < 4; ++k) eps_sum[static_cast<size_t>(k)] += t.eps.m[static_cast<size_t>(k)];
        r_sum += t.alpha.r;
        s_sum += t.alpha.s;
        nontrivial_eps = nontrivial_eps || !t.eps.is_identity();
    }
    bool eps_zero = eps_sum == std::array<int, 4>{0, 0, 0, 0};
    return eps_zero && is_integer(r_sum) && is_integer(s_sum) && nontrivial_eps;
}

std::vector<TorusAutomorphism> group_intersection(const AutomorphismGroup& g1,
                                                  const AutomorphismGroup& g2) {
    std::vector<TorusAutomorphism> out;
    for (const auto& t : g1.elements)
        if (g2.contains(t)) out.push_back(t);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<UnitMultiplier> unit_group(int symmetry_order) {
    UnitMultiplier gen;
    switch (symmetry_order) {
        case 2: gen = UnitMultiplier::minus_identity(); break;
        case 4: gen = UnitMultiplier{{0, -1, 1, 0}}; break;   // mult by i on Z + Zi
        case 6: gen = UnitMultiplier{{0, -1, 1, 1}}; break;   // mult by zeta_6 on Z + Z zeta_6
        default: throw invalid_input("symmetry order must be 2, 4 or 6");
    }
    std::vector<UnitMultiplier> units;
    UnitMultiplier u = UnitMultiplier::identity();
    do {
        units.push_back(u);
        u = u * gen;
    } while (!u.is_identity());
    return units;
}

} // namespace

std::vector<AutomorphismGroup> enumerate_galois_groups_for_order(int symmetry_order) {
    std::vector<UnitMultiplier> units = unit_group(symmetry_order);
    std::vector<TorusAutomorphism> candidates;
    for (const auto& u : units)
        for (int m = 0; m < 4; ++m)
            for (int n = 0; n < 4; ++n)
                candidates.push_back({u, LatticeFraction(Rational(m, 4), Rational(n, 4))});
    std::set<std::vector<TorusAutomorphism>> seen;
    std::vector<AutomorphismGroup> out;
    for (size_t i = 0; i < candidates.size(); ++i)
        for (size_t j = i; j < candidates.size(); ++j) {
            auto g = closure_of_order_4(candidates[i], candidates[j]);
            if (!g || !diamond_check(*g)) continue;
            if (seen.insert(g->elements).second) out.push_back(*g);
        }
    std::sort(out.begin(), out.end(), [](const AutomorphismGroup& a, const AutomorphismGroup& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.label < b.label;
    });
    return out;
}

std::vector<AutomorphismGroup> enumerate_galois_groups(const ComplexLattice& lat) {
    return enumerate_galois_groups_for_order(lat.symmetry_order);
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Does multiplication by eps map Z + Z omega to itself? If so, return the
// integer matrix of its action on lattice coordinates.
std::optional<UnitMultiplier> unit_action(Complex omega, Complex eps, double tol = 1e-6) {
    auto coords = [&](Complex v) -> std::array<double, 2> {
        // v = a + b omega
        double b = v.imag() / omega.imag();
        double a = v.real() - b * omega.real();
        return {a, b};
    };
    auto c1 = coords(eps);
    auto cw = coords(eps * omega);
    std::array<double, 4> vals{c1[0], cw[0], c1[1], cw[1]};
    std::array<int, 4> m;
    for (int k = 0; k < 4; ++k) {
        double r = std::round(vals[static_cast<size_t>(k)]);
        if (std::fabs(vals[static_cast<size_t>(k)] - r) > tol) return std::nullopt;
        m[static_cast<size_t>(k)] = static_cast<int>(r);
    }
    // columns (m[0],m[2]) and (m[1],m[3]) must define a lattice bijection
    int det = m[0] * m[3] - m[1] * m[2];
    if (det != 1 && det != -1) return std::nullopt;
    return UnitMultiplier{m};
}

} // namespace

ComplexLattice make_lattice(Complex omega) {
    if (!(omega.imag() > 0)) throw invalid_input("omega must have positive imaginary part");
    ComplexLattice lat;
    lat.omega = omega;
    lat.symmetry_order = 2;
    const Complex i(0, 1);
    const Complex zeta6 = std::polar(1.0, std::numbers::pi / 3.0);
    if (auto u = unit_action(omega, i)) {
        lat.symmetry_order = 4;
        lat.unit_generator = *u;
    } else if (auto u6 = unit_action(omega, zeta6)) {
        lat.symmetry_order = 6;
        lat.unit_generator = *u6;
    }
    // Eisenstein q-series for g2, g3 on Z + Z omega.
    Complex q = std::exp(Complex(0, kTwoPi) * omega);
    Complex s3(0, 0), s5(0, 0);
    Complex qn = q;
    for (int n = 1; n <= 400; ++n) {
        double nd = n;
        Complex t = qn / (1.0 - qn);
        s3 += nd * nd * nd * t;
        s5 += nd * nd * nd * nd * nd * t;
        if (std::abs(qn) < 1e-18) break;
        qn *= q;
    }
    double pi4 = std::pow(std::numbers::pi, 4), pi6 = std::pow(std::numbers::pi, 6);
    lat.g2 = (4.0 / 3.0) * pi4 * (1.0 + 240.0 * s3);
    lat.g3 = (8.0 / 27.0) * pi6 * (1.0 - 504.0 * s5);
    return lat;
}

WpLattice make_wp_lattice(Complex w1, Complex w2, Complex g2, Complex g3) {
    WpLattice lat{w1, w2, g2, g3, 0.0};
    double best = std::abs(w1);
    for (int m = -3; m <= 3; ++m)
        for (int n = -3; n <= 3; ++n) {
            if (m == 0 && n == 0) continue;
            best = std::min(best, std::abs(double(m) * w1 + double(n) * w2));
        }
    lat.min_vector = best;
    return lat;
}

namespace {

// Laurent coefficients c_k of wp = 1/z^2 + sum_{k>=2} c_k z^{2k-2}.
std::vector<Complex> laurent_coeffs(Complex g2, Complex g3, int kmax) {
    std::vector<Complex> c(static_cast<size_t>(kmax) + 1, Complex(0, 0));
    c[2] = g2 / 20.0;
    c[3] = g3 / 28.0;
    for (int k = 4; k <= kmax; ++k) {
        Complex acc(0, 0);
        for (int m = 2; m <= k - 2; ++m) acc += c[static_cast<size_t>(m)] * c[static_cast<size_t>(k - m)];
        c[static_cast<size_t>(k)] = 3.0 * acc / ((2.0 * k + 1.0) * (k - 3.0));
    }
    return c;
}

WpValue laurent_eval(const std::vector<Complex>& c, Complex z) {
    Complex z2 = z * z;
    Complex wp = 1.0 / z2;
    Complex wpp = -2.0 / (z2 * z);
    Complex zp = z2;
    for (size_t k = 2; k < c.size(); ++k) {
        wp += c[k] * zp;
        wpp += (2.0 * double(k) - 2.0) * c[k] * zp / z;
        zp *= z2;
    }
    return {wp, wpp};
}

WpValue duplicate(const WpValue& v, Complex g2) {
    // Tangent-line doubling on y^2 = 4x^3 - g2 x - g3.
    Complex lam = (6.0 * v.wp * v.wp - 0.5 * g2) / v.wp_prime;
    Complex x2 = -2.0 * v.wp + 0.25 * lam * lam;
    Complex y2 = -(v.wp_prime + lam * (x2 - v.wp));
    return {x2, y2};
}

} // namespace

WpValue wp_eval(const WpLattice& lat, Complex z) {
    // Reduce to the centered fundamental cell.
    double det = lat.w1.real() * lat.w2.imag() - lat.w1.imag() * lat.w2.real();
    if (std::fabs(det) < 1e-300) throw invalid_input("degenerate lattice basis");
    double u = (z.real() * lat.w2.imag() - z.imag() * lat.w2.real()) / det;
    double v = (lat.w1.real() * z.imag() - lat.w1.imag() * z.real()) / det;
    u -= std::round(u);
    v -= std::round(v);
    Complex zr = u * lat.w1 + v * lat.w2;
    if (std::abs(zr) < 1e-12 * lat.min_vector) throw pole_error("wp evaluated at a lattice point");

    static thread_local std::vector<Complex> coeff_cache;
    static thread_local Complex cache_g2{0, 0}, cache_g3{0, 0};
    if (coeff_cache.empty() || cache_g2 != lat.g2 || cache_g3 != lat.g3) {
        coeff_cache = laurent_coeffs(lat.g2, lat.g3, 30);
        cache_g2 = lat.g2;
        cache_g3 = lat.g3;
    }

    double radius = 0.3 * lat.min_vector;
    for (int extra = 0; extra < 3; ++extra) {
        int k = 0;
        Complex zs = zr;
        while (std::abs(zs) > radius) {
            zs *= 0.5;
            ++k;
        }
        k += extra;
        zs = zr / std::pow(2.0, k);
        WpValue val = laurent_eval(coeff_cache, zs);
        bool ok = true;
        for (int step = 0; step < k; ++step) {
            // A duplication step divides by wp'; if an intermediate point sits
            // on a half-period the chain is restarted one halving deeper.
            if (std::abs(val.wp_prime) < 1e-9 * std::max(1.0, std::abs(val.wp))) {
                ok = false;
                break;
            }
            val = duplicate(val, lat.g2);
        }
        if (ok) return val;
    }
    throw pole_error("wp duplication chain hit a half-period repeatedly");
}

WpValue wp_eval(const ComplexLattice& lat, Complex z) {
    return wp_eval(make_wp_lattice(Complex(1, 0), lat.omega, lat.g2, lat.g3), z);
}

WpValue wp_addition_formula(const WpValue& u, const WpValue& v) {
    Complex dx = u.wp - v.wp;
    if (std::abs(dx) < 1e-12) throw invalid_input("addition formula needs distinct wp values");
    Complex lam = (u.wp_prime - v.wp_prime) / dx;
    Complex q = 0.25 * lam * lam;
    Complex wp_sum = -u.wp - v.wp + q;
    Complex wpp_sum = (-1.0 / dx) * (u.wp_prime * ((-u.wp - 2.0 * v.wp) + q) +
                                     v.wp_prime * ((2.0 * u.wp + v.wp) - q));
    return {wp_sum, wpp_sum};
}

namespace {

double agm(double a, double b) {
    for (int k = 0; k < 80 && std::fabs(a - b) > 1e-17 * std::fabs(a); ++k) {
        double a2 = 0.5 * (a + b), b2 = std::sqrt(a * b);
        a = a2;
        b = b2;
    }
    return a;
}

} // namespace

CurveTorusBridge make_bridge(const EllipticCurveModel& curve) {
    std::array<double, 3> e{to_double(curve.e[0]), to_double(curve.e[1]), to_double(curve.e[2])};
    std::array<int, 3> order{0, 1, 2};
    // Exact comparisons, so the assignment always agrees with the exact layer.
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return curve.e[static_cast<size_t>(a)] > curve.e[static_cast<size_t>(b)];
    });
    double emax = e[static_cast<size_t>(order[0])], emid = e[static_cast<size_t>(order[1])],
           emin = e[static_cast<size_t>(order[2])];
    double w1 = std::numbers::pi / (2.0 * agm(std::sqrt(emax - emin), std::sqrt(emax - emid)));
    double w3i = std::numbers::pi / (2.0 * agm(std::sqrt(emax - emin), std::sqrt(emid - emin)));
    Complex W1(2.0 * w1, 0.0), W3(0.0, 2.0 * w3i);
    CurveTorusBridge b{
        make_wp_lattice(W1, W3, Complex(to_double(-curve.p), 0), Complex(to_double(-curve.q), 0)),
        W3 / W1,
        {},
        e};
    static const Rational h(1, 2);
    // wp(w1) = e_max, wp(w3) = e_min, wp(w1 + w3) = e_mid for the rectangular
    // period basis; carry that assignment back to the user's root order.
    b.root_half_period[static_cast<size_t>(order[0])] = LatticeFraction(h, Rational(0));
    b.root_half_period[static_cast<size_t>(order[2])] = LatticeFraction(Rational(0), h);
    b.root_half_period[static_cast<size_t>(order[1])] = LatticeFraction(h, h);
    return b;
}

namespace {

Eigen::Vector4cd embed_wp(const WpValue& v) {
    Eigen::Vector4cd p;
    p << Complex(1, 0), v.wp * v.wp, v.wp, v.wp_prime;
    return p;
}

} // namespace

Eigen::Vector4cd torus_point(const CurveTorusBridge& bridge, Complex z_lattice) {
    // z_lattice = u + iv stands for u + v*tau in the normalized basis.
    double u = z_lattice.real() - std::round(z_lattice.real());
    double v = z_lattice.imag() - std::round(z_lattice.imag());
    if (std::hypot(u, v) < 1e-12) {
        // The hyperosculation point P0' = lim (1 : x^2 : x : y) as x -> inf.
        Eigen::Vector4cd p;
        p << Complex(0, 0), Complex(1, 0), Complex(0, 0), Complex(0, 0);
        return p;
    }
    Complex z = z_lattice.real() * bridge.lattice.w1 + z_lattice.imag() * bridge.lattice.w2;
    return embed_wp(wp_eval(bridge.lattice, z));
}

Eigen::Vector4cd torus_point(const ComplexLattice& lat, Complex z_lattice) {
    double u = z_lattice.real() - std::round(z_lattice.real());
    double v = z_lattice.imag() - std::round(z_lattice.imag());
    if (std::hypot(u, v) < 1e-12) {
        Eigen::Vector4cd p;
        p << Complex(0, 0), Complex(1, 0), Complex(0, 0), Complex(0, 0);
        return p;
    }
    Complex z = z_lattice.real() + z_lattice.imag() * lat.omega;
    return embed_wp(wp_eval(lat, z));
}

bool abel_equivalent(const std::vector<Complex>& alphas, Complex omega, double tol) {
    Complex s(0, 0);
    for (const auto& a : alphas) s += a;
    double v = s.imag() / omega.imag();
    double u = s.real() - v * omega.real();
    return std::fabs(u - std::round(u)) < tol && std::fabs(v - std::round(v)) < tol;
}

Complex normalize_divisor(const std::vector<Complex>& alphas) {
    Complex s(0, 0);
    for (const auto& a : alphas) s += a;
    return -s / 4.0;
}

} // namespace galois
