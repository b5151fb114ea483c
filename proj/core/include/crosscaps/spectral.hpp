#ifndef CROSSCAPS_SPECTRAL_HPP
#define CROSSCAPS_SPECTRAL_HPP

#include <string>

namespace crosscaps {

// Truncated collocation problem for the kernel of the standard dbar-operator
// on the disk with the twisted antipodal boundary condition
//     xi(-z) = (-1)^d z^(2d) conj(xi(z))   on |z| = 1.
// Holomorphic xi are truncated at monomial degree K and the boundary
// condition is enforced at M equispaced circle points.
struct DiskProblem {
    int twist = 0;           // d
    int truncation = 2;      // K, monomial degrees 0..K; K >= 2|d| + 2
    int collocation = 8;     // M boundary points; M >= 2K + 2
    double tolerance = 1e-8; // singular values below this count as kernel
};

void validate(const DiskProblem& p);

struct RecurrenceKernel {
    int dim = 0;
    std::string relations;
};

// Exact kernel of the boundary condition on Taylor coefficients: the
// recurrence a_m (-1)^m = (-1)^d conj(a_{2d-m}) pairs coefficient m with
// 2d-m, forcing everything above degree 2d to vanish.  Dimension 2d+1 for
// d >= 0 (one free complex pair per m < d plus a real middle coefficient)
// and 0 for d < 0.
RecurrenceKernel recurrence_kernel(int twist);

// Kernel dimension of the collocation system, counted as the number of
// singular values below the tolerance.  Demands a ratio of at least 10^3
// between the smallest accepted and the largest rejected singular value;
// anything murkier is reported as ill-conditioning instead of a dimension.
int numerical_kernel_dim(const DiskProblem& p);

// Cokernel of the twisted problem, counted by the dual recurrence: the
// obstruction space of twist d < 0 is the kernel space of twist -d-1.
int recurrence_cokernel(int twist);

// 1 iff the numerical index (collocation kernel minus recurrence cokernel)
// matches the index formula mu + (1 - g^) * rank for the rank-1 pair of
// Maslov index 2d over the disk with one crosscap.
bool index_cross_check(int twist);

// m-th derivative at 0 of the holomorphic function h on the disk with
// boundary real part -Re(z^(2k)), computed as the contour integral
//     h^(m)(0) = (m!/2*pi*i) * integral over |z|=1 of -Re(z^(2k)) dz/z^(m+1)
// by the trapezoid rule on num_points equispaced nodes (exact below the
// Nyquist degree).  Closed form: -(2k)!/2 if m = 2k, else 0.
double cauchy_derivative(int k, int m, int num_points);

}  // namespace crosscaps

#endif
