#include "crosscaps/spectral.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "crosscaps/bundles.hpp"
#include "crosscaps/errors.hpp"

namespace crosscaps {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kGapRatio = 1e3;
}  // namespace

void validate(const DiskProblem& p) {
    if (p.truncation < 2 * std::abs(p.twist) + 2)
        throw InputError("DiskProblem: truncation K must be >= 2|d| + 2");
    if (p.collocation < 2 * p.truncation + 2)
        throw InputError("DiskProblem: collocation M must be >= 2K + 2");
    // The boundary equation mixes frequencies from 2d-K up to K.  If the
    // grid cannot separate that whole band, aliases show up as exact
    // spurious kernel vectors that no spectral-gap test can reject.
    if (p.collocation <= 2 * (p.truncation - p.twist))
        throw InputError("DiskProblem: collocation M must exceed 2(K - d) to avoid aliasing");
    if (!(p.tolerance > 0.0))
        throw InputError("DiskProblem: tolerance must be positive");
}

RecurrenceKernel recurrence_kernel(int twist) {
    const int d = twist;
    if (d < 0)
        return RecurrenceKernel{0, "a_m = 0 for all m (every pairing index 2d-m is negative)"};
    std::ostringstream rel;
    rel << "a_m = (-1)^(d+m) conj(a_{2d-m}) for 0 <= m < d; a_" << d
        << " real; a_m = 0 for m > " << 2 * d;
    return RecurrenceKernel{2 * d + 1, rel.str()};
}

int recurrence_cokernel(int twist) {
    return twist < 0 ? recurrence_kernel(-twist - 1).dim : 0;
}

int numerical_kernel_dim(const DiskProblem& p) {
    validate(p);
    const int d = p.twist;
    const int K = p.truncation;
    const int M = p.collocation;

    // Unknowns: Re a_0, Im a_0, ..., Re a_K, Im a_K.  At each boundary point
    // the complex equation
    //   sum_m (-1)^m z^m a_m - (-1)^d z^(2d) sum_m z^(-m) conj(a_m) = 0
    // yields two real rows.
    Eigen::MatrixXd sys = Eigen::MatrixXd::Zero(2 * M, 2 * (K + 1));
    for (int i = 0; i < M; ++i) {
        const double theta = 2.0 * kPi * i / M;
        for (int m = 0; m <= K; ++m) {
            const std::complex<double> alpha =
                std::polar(1.0, m * theta) * ((m % 2 == 0) ? 1.0 : -1.0);
            const std::complex<double> beta =
                -std::polar(1.0, (2 * d - m) * theta) * ((((d % 2) + 2) % 2 == 0) ? 1.0 : -1.0);
            // coefficient of Re a_m and Im a_m in the complex equation
            const std::complex<double> cr = alpha + beta;
            const std::complex<double> ci = std::complex<double>(0, 1) * (alpha - beta);
            sys(2 * i, 2 * m) = cr.real();
            sys(2 * i, 2 * m + 1) = ci.real();
            sys(2 * i + 1, 2 * m) = cr.imag();
            sys(2 * i + 1, 2 * m + 1) = ci.imag();
        }
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(sys);
    const auto& sv = svd.singularValues();
    int kernel = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) < p.tolerance) ++kernel;

    if (kernel == 0) {
        if (sv(sv.size() - 1) < p.tolerance * kGapRatio)
            throw ComputeError("numerical_kernel_dim: no clear spectral gap above the tolerance");
        return 0;
    }
    if (kernel == sv.size()) return kernel;

    const double smallest_kept = sv(sv.size() - kernel - 1);
    const double largest_dropped = sv(sv.size() - kernel);
    if (largest_dropped > 0.0 && smallest_kept / largest_dropped < kGapRatio)
        throw ComputeError("numerical_kernel_dim: no clear spectral gap at the tolerance");
    return kernel;
}

bool index_cross_check(int twist) {
    const int d = twist;
    DiskProblem p;
    p.twist = d;
    p.truncation = 2 * std::abs(d) + 8;
    p.collocation = 4 * p.truncation;

    const int numerical_index = numerical_kernel_dim(p) - recurrence_cokernel(d);

    const ShSurface disk_crosscap(0, {BoundaryKind::Crosscap});
    const RealBundlePair pair(1, 2 * d, {});
    return numerical_index == fredholm_index(pair, disk_crosscap);
}

double cauchy_derivative(int k, int m, int num_points) {
    if (k < 1) throw InputError("cauchy_derivative: k must be >= 1");
    if (m < 0) throw InputError("cauchy_derivative: m must be >= 0");
    if (num_points < 2 * k + m + 2)
        throw InputError("cauchy_derivative: need at least 2k + m + 2 quadrature points");

    // (m!/2*pi*i) * sum_j g(z_j) * (i z_j dtheta) / z_j^(m+1)
    //   = (m!/N) * sum_j g(z_j) exp(-i m theta_j),   g(z) = -Re(z^(2k)).
    // Angles are reduced through exact integer arithmetic mod N and the sum
    // runs in extended precision, so the trapezoid rule stays exact to
    // rounding even against the m! amplification.
    const long N = num_points;
    const long double pi_l = std::numbers::pi_v<long double>;
    long double sum_re = 0.0L, sum_im = 0.0L;
    for (long j = 0; j < N; ++j) {
        const long double a = 2.0L * pi_l * static_cast<long double>((2L * k * j) % N) / N;
        const long double b = 2.0L * pi_l * static_cast<long double>((static_cast<long>(m) * j) % N) / N;
        const long double g = -std::cos(a);
        sum_re += g * std::cos(b);
        sum_im -= g * std::sin(b);
    }
    long double factorial = 1.0L;
    for (int i = 2; i <= m; ++i) factorial *= i;

    const long double value = factorial / N * sum_re;
    const long double spurious = factorial / N * sum_im;
    if (std::abs(static_cast<double>(spurious)) > 1e-9)
        throw ComputeError("cauchy_derivative: imaginary residue, quadrature inconsistent");
    return static_cast<double>(value);
}

}  // namespace crosscaps
