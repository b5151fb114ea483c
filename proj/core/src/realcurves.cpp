#include "crosscaps/realcurves.hpp"

#include <algorithm>
#include <cmath>

#include "crosscaps/errors.hpp"

namespace crosscaps {

void validate(const RealMapParams& p) {
    if (p.n < 1) throw InputError("RealMapParams: target dimension must be >= 1");
    if (p.degree < 2 || p.degree % 2 != 0)
        throw InputError("RealMapParams: degree must be even and positive");
    if (p.coeffs.size() != static_cast<std::size_t>(p.n + 1))
        throw InputError("RealMapParams: need n+1 coefficients");
    if (std::all_of(p.coeffs.begin(), p.coeffs.end(), [](double a) { return a == 0.0; }))
        throw InputError("RealMapParams: coefficient vector must be nonzero");
    if (p.roots.size() != static_cast<std::size_t>(p.n + 1))
        throw InputError("RealMapParams: need n+1 root lists");
    for (const auto& list : p.roots)
        if (list.size() != static_cast<std::size_t>(p.degree / 2))
            throw InputError("RealMapParams: each root list must have d/2 entries");
}

void validate(const PolyTuple& t) {
    if (t.degree < 1) throw InputError("PolyTuple: degree must be positive");
    if (t.coords.empty()) throw InputError("PolyTuple: empty tuple");
    bool any_nonzero = false;
    for (const auto& poly : t.coords) {
        if (poly.size() != static_cast<std::size_t>(t.degree + 1))
            throw InputError("PolyTuple: coefficient list length must be degree+1");
        for (const Complex& c : poly) any_nonzero |= (c != Complex(0.0, 0.0));
    }
    if (!any_nonzero) throw InputError("PolyTuple: all polynomials are zero");
}

Complex eval(const std::vector<Complex>& poly, Complex x, Complex y) {
    // Horner in y/x would divide; evaluate via running powers instead.
    Complex acc(0.0, 0.0);
    Complex xp(1.0, 0.0);
    std::vector<Complex> ypow(poly.size());
    ypow[poly.size() - 1] = Complex(1.0, 0.0);
    for (std::size_t j = poly.size() - 1; j > 0; --j) ypow[j - 1] = ypow[j] * y;
    // coefficient j multiplies x^(d-j) y^j; iterate j from d down to 0 so the
    // x power builds up as the y power is read off.
    for (std::size_t j = poly.size(); j > 0; --j) {
        acc += poly[j - 1] * xp * ypow[poly.size() - j];
        xp *= x;
    }
    return acc;
}

namespace {

// Multiply a homogeneous polynomial by the quadratic factor
// (x - b y)(conj(b) x + y) = conj(b) x^2 + (1 - |b|^2) xy - b y^2.
std::vector<Complex> multiply_factor(const std::vector<Complex>& poly, Complex b) {
    const Complex q0 = std::conj(b);
    const Complex q1 = Complex(1.0, 0.0) - b * std::conj(b);
    const Complex q2 = -b;
    std::vector<Complex> out(poly.size() + 2, Complex(0.0, 0.0));
    for (std::size_t j = 0; j < poly.size(); ++j) {
        out[j] += poly[j] * q0;
        out[j + 1] += poly[j] * q1;
        out[j + 2] += poly[j] * q2;
    }
    return out;
}

double norm2(const std::vector<Complex>& v) {
    double s = 0.0;
    for (const Complex& c : v) s += std::norm(c);
    return std::sqrt(s);
}

}  // namespace

PolyTuple build_map(const RealMapParams& p) {
    validate(p);
    PolyTuple t;
    t.degree = p.degree;
    t.coords.resize(p.roots.size());
    for (std::size_t i = 0; i < p.roots.size(); ++i) {
        std::vector<Complex> poly{Complex(p.coeffs[i], 0.0)};
        for (const Complex& b : p.roots[i]) poly = multiply_factor(poly, b);
        t.coords[i] = std::move(poly);
    }
    return t;
}

double check_equivariance(const PolyTuple& t, int samples, double tol,
                          std::mt19937_64& rng) {
    validate(t);
    if (samples < 1) throw InputError("check_equivariance: need at least one sample");

    // An identically vanishing coordinate forces base points (the remaining
    // coordinates must share a zero on P^1 when n = 1, and the tuple leaves
    // the parametrized locus in any case).
    double coeff_scale = 0.0;
    for (const auto& poly : t.coords) coeff_scale = std::max(coeff_scale, norm2(poly));
    for (std::size_t i = 0; i < t.coords.size(); ++i)
        if (norm2(t.coords[i]) <= 1e-14 * coeff_scale)
            throw ComputeError("check_equivariance: coordinate polynomial " +
                               std::to_string(i) + " is zero (degenerate tuple)");

    std::normal_distribution<double> gauss(0.0, 1.0);
    const std::size_t ncoords = t.coords.size();
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        Complex x(gauss(rng), gauss(rng));
        Complex y(gauss(rng), gauss(rng));
        const double nrm = std::sqrt(std::norm(x) + std::norm(y));
        if (nrm < 1e-8) { --s; continue; }
        x /= nrm;
        y /= nrm;

        // u(eta([x,y])) vs tau(u([x,y]))
        std::vector<Complex> v(ncoords), w(ncoords);
        double nv = 0.0, nw = 0.0;
        for (std::size_t i = 0; i < ncoords; ++i) {
            v[i] = eval(t.coords[i], -std::conj(y), std::conj(x));
            w[i] = std::conj(eval(t.coords[i], x, y));
            nv += std::norm(v[i]);
            nw += std::norm(w[i]);
        }
        nv = std::sqrt(nv);
        nw = std::sqrt(nw);
        if (nv <= tol * coeff_scale && nw <= tol * coeff_scale)
            throw ComputeError("check_equivariance: both images vanish at a sample "
                               "(base point, degenerate locus)");

        double dev = 0.0;
        for (std::size_t i = 0; i < ncoords; ++i)
            for (std::size_t j = i + 1; j < ncoords; ++j)
                dev = std::max(dev, std::abs(v[i] * w[j] - v[j] * w[i]));
        worst = std::max(worst, dev / (nv * nw));
    }
    return worst;
}

namespace {

// Point on the Riemann sphere; b = 0 has -1/conj(b) = infinity.
struct SpherePoint {
    bool infinite = false;
    Complex value{0.0, 0.0};
};

double chordal(const SpherePoint& a, const SpherePoint& b) {
    if (a.infinite && b.infinite) return 0.0;
    if (a.infinite) return 2.0 / std::sqrt(1.0 + std::norm(b.value));
    if (b.infinite) return 2.0 / std::sqrt(1.0 + std::norm(a.value));
    return 2.0 * std::abs(a.value - b.value) /
           std::sqrt((1.0 + std::norm(a.value)) * (1.0 + std::norm(b.value)));
}

SpherePoint antipode_inverse(const Complex& b) {
    if (b == Complex(0.0, 0.0)) return SpherePoint{true, {}};
    return SpherePoint{false, -1.0 / std::conj(b)};
}

std::vector<SpherePoint> orbit_set(const std::vector<Complex>& roots) {
    std::vector<SpherePoint> out;
    out.reserve(2 * roots.size());
    for (const Complex& b : roots) {
        out.push_back(SpherePoint{false, b});
        out.push_back(antipode_inverse(b));
    }
    return out;
}

}  // namespace

bool in_degenerate_locus(const RealMapParams& p, double tol) {
    validate(p);
    std::vector<std::vector<SpherePoint>> orbits;
    orbits.reserve(p.roots.size());
    for (const auto& list : p.roots) orbits.push_back(orbit_set(list));

    for (const SpherePoint& candidate : orbits.front()) {
        bool in_all = true;
        for (std::size_t i = 1; i < orbits.size() && in_all; ++i) {
            bool found = false;
            for (const SpherePoint& q : orbits[i])
                if (chordal(candidate, q) <= tol) { found = true; break; }
            in_all = found;
        }
        if (in_all) return true;
    }
    return false;
}

}  // namespace crosscaps
