#include "crosscaps/clutching.hpp"

#include <cmath>
#include <functional>
#include <numbers>

#include "crosscaps/errors.hpp"

namespace crosscaps {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAliasGuard = 0.9 * kPi;

void check_even(const SampledLoop& loop) {
    if (loop.size() % 2 != 0)
        throw InputError("SampledLoop: sample count must be even");
}

std::vector<std::complex<double>> determinants(const SampledLoop& loop) {
    std::vector<std::complex<double>> dets;
    dets.reserve(loop.size());
    for (const auto& m : loop.samples) {
        const std::complex<double> d = m.determinant();
        if (!(std::abs(d) > 1e-12))
            throw ComputeError("SampledLoop: singular sample (|det| <= 1e-12)");
        dets.push_back(d);
    }
    return dets;
}

// Continuous phase along the samples, starting from the principal argument
// of the first determinant.  Throws on jumps beyond the aliasing guard.
std::vector<double> unwrapped_phase(const std::vector<std::complex<double>>& dets) {
    std::vector<double> psi(dets.size());
    psi[0] = std::arg(dets[0]);
    double prev_arg = psi[0];
    for (std::size_t j = 1; j < dets.size(); ++j) {
        const double a = std::arg(dets[j]);
        const double jump = std::remainder(a - prev_arg, 2.0 * kPi);
        if (std::abs(jump) >= kAliasGuard)
            throw ComputeError("det_winding: phase jump >= 0.9*pi, loop is undersampled");
        psi[j] = psi[j - 1] + jump;
        prev_arg = a;
    }
    return psi;
}

// Winding from an unwrapped phase sequence, closing the loop back to
// sample 0.
int winding_of(const std::vector<std::complex<double>>& dets,
               const std::vector<double>& psi) {
    const double closing = std::remainder(std::arg(dets[0]) - std::arg(dets.back()), 2.0 * kPi);
    if (std::abs(closing) >= kAliasGuard)
        throw ComputeError("det_winding: phase jump >= 0.9*pi, loop is undersampled");
    const double total = (psi.back() + closing - psi.front()) / (2.0 * kPi);
    const int w = static_cast<int>(std::lround(total));
    if (std::abs(total - w) > 1e-6)
        throw ComputeError("det_winding: winding is not an integer");
    return w;
}

// Half-period phase shift (psi(theta) + psi(theta+pi)) / (2*pi).  For an
// exactly reality-constrained loop this is the same integer at every sample.
int phase_shift_integer(const SampledLoop& loop) {
    const auto dets = determinants(loop);
    const auto psi = unwrapped_phase(dets);
    if (winding_of(dets, psi) != 0)
        throw ComputeError("phase shift: nonzero determinant winding contradicts reality");

    const std::size_t half = loop.size() / 2;
    int k = 0;
    for (std::size_t j = 0; j < half; ++j) {
        const double val = (psi[j] + psi[j + half]) / (2.0 * kPi);
        const int kj = static_cast<int>(std::lround(val));
        if (std::abs(val - kj) > 1e-6)
            throw ComputeError("phase shift: non-integer value, inconsistent samples");
        if (j == 0)
            k = kj;
        else if (kj != k)
            throw ComputeError("phase shift: value varies along the loop, inconsistent samples");
    }
    return k;
}

}  // namespace

void validate(const SampledLoop& loop) {
    if (loop.n < 1) throw InputError("SampledLoop: matrix size must be >= 1");
    if (loop.samples.size() < 2) throw InputError("SampledLoop: need at least 2 samples");
    for (const auto& m : loop.samples)
        if (m.rows() != loop.n || m.cols() != loop.n)
            throw InputError("SampledLoop: sample dimension mismatch");
}

Bit check_reality(const SampledLoop& loop, double tol) {
    validate(loop);
    check_even(loop);
    const std::size_t half = loop.size() / 2;
    double worst = 0.0;
    for (std::size_t j = 0; j < loop.size(); ++j) {
        const auto& mirrored = loop.samples[(j + half) % loop.size()];
        const double dev = (mirrored - loop.samples[j].conjugate()).cwiseAbs().maxCoeff();
        worst = std::max(worst, dev);
    }
    return worst <= tol ? 1 : 0;
}

int det_winding(const SampledLoop& loop) {
    validate(loop);
    const auto dets = determinants(loop);
    const auto psi = unwrapped_phase(dets);
    return winding_of(dets, psi);
}

DiskClass classify_disk(const SampledLoop& loop, double tol) {
    if (!check_reality(loop, tol))
        throw InputError("classify_disk: loop fails the reality condition");
    const int d = phase_shift_integer(loop);
    return DiskClass{d, 2 * d};
}

Bit klein_class(const SampledLoop& loop, double tol) {
    if (!check_reality(loop, tol))
        throw InputError("klein_class: loop fails the reality condition");
    const int k = phase_shift_integer(loop);
    return static_cast<Bit>(((k % 2) + 2) % 2);
}

namespace {

// Fill samples on [0, pi) by formula and mirror the second half as exact
// conjugates, making check_reality pass bit-exactly.
SampledLoop mirrored_loop(int n, int num_samples,
                          const std::function<Eigen::MatrixXcd(double)>& first_half) {
    if (n < 1) throw InputError("loop builder: matrix size must be >= 1");
    if (num_samples < 2 || num_samples % 2 != 0)
        throw InputError("loop builder: sample count must be even and >= 2");
    SampledLoop loop;
    loop.n = n;
    loop.samples.resize(static_cast<std::size_t>(num_samples));
    const std::size_t half = static_cast<std::size_t>(num_samples) / 2;
    for (std::size_t j = 0; j < half; ++j) {
        const double theta = 2.0 * kPi * static_cast<double>(j) / num_samples;
        loop.samples[j] = first_half(theta);
        loop.samples[j + half] = loop.samples[j].conjugate();
    }
    return loop;
}

}  // namespace

SampledLoop make_disk_loop(int n, int d, int num_samples) {
    return mirrored_loop(n, num_samples, [n, d](double theta) {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(n, n);
        m(0, 0) = std::polar(1.0, d * kPi * (1.0 - std::cos(theta)));
        return m;
    });
}

SampledLoop make_klein_loop(KleinLoopKind kind, int n, int num_samples) {
    switch (kind) {
        case KleinLoopKind::Trivial:
            return mirrored_loop(n, num_samples, [n](double) {
                return Eigen::MatrixXcd(Eigen::MatrixXcd::Identity(n, n));
            });
        case KleinLoopKind::Twisted:
            return mirrored_loop(n, num_samples, [n](double) {
                Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(n, n);
                m(0, 0) = -1.0;
                return m;
            });
        case KleinLoopKind::TwistedSmooth:
            return mirrored_loop(n, num_samples, [n](double theta) {
                Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(n, n);
                m(0, 0) = std::polar(1.0, kPi * (1.0 + std::cos(theta)));
                return m;
            });
    }
    throw InputError("make_klein_loop: unknown kind");
}

SampledLoop perturb(const SampledLoop& loop, double magnitude, std::mt19937_64& rng) {
    validate(loop);
    check_even(loop);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    const std::size_t half = loop.size() / 2;

    SampledLoop out = loop;
    for (std::size_t j = 0; j < half; ++j) {
        Eigen::MatrixXcd e(loop.n, loop.n);
        for (int r = 0; r < loop.n; ++r)
            for (int c = 0; c < loop.n; ++c)
                e(r, c) = std::complex<double>(unit(rng), unit(rng));
        e *= magnitude / std::max(1.0, e.cwiseAbs().maxCoeff() * loop.n);
        const Eigen::MatrixXcd factor = Eigen::MatrixXcd::Identity(loop.n, loop.n) + e;
        out.samples[j] = loop.samples[j] * factor;
        out.samples[j + half] = loop.samples[j + half] * factor.conjugate();
    }
    return out;
}

SampledLoop pointwise_product(const SampledLoop& a, const SampledLoop& b) {
    validate(a);
    validate(b);
    if (a.n != b.n || a.size() != b.size())
        throw InputError("pointwise_product: loops must have equal size and length");
    SampledLoop out;
    out.n = a.n;
    out.samples.reserve(a.size());
    for (std::size_t j = 0; j < a.size(); ++j)
        out.samples.push_back(a.samples[j] * b.samples[j]);
    return out;
}

}  // namespace crosscaps
