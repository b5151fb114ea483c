#ifndef CROSSCAPS_CLUTCHING_HPP
#define CROSSCAPS_CLUTCHING_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "crosscaps/cohomology.hpp"

namespace crosscaps {

// An invertible-matrix-valued loop on the circle given by equispaced samples
// at z_j = exp(2*pi*i*j/N), N even.  Valid clutching data for the antipodal
// involution satisfies the reality condition A(-z) = conj(A(z)), i.e. the
// sample half a period away is the entrywise conjugate.
struct SampledLoop {
    int n = 1;                               // matrix size
    std::vector<Eigen::MatrixXcd> samples;   // length N, each n x n

    std::size_t size() const { return samples.size(); }
};

void validate(const SampledLoop& loop);

// 1 iff max entrywise deviation of samples[j + N/2] from conj(samples[j]) is
// <= tol.  Requires even N.
Bit check_reality(const SampledLoop& loop, double tol = 1e-9);

// Total winding number of det(A) around the origin, by unwrapping the phase
// of the sampled determinants.  A consecutive phase jump of at least 0.9*pi
// means the loop is undersampled and raises an error instead of silently
// aliasing.
int det_winding(const SampledLoop& loop);

struct DiskClass {
    int d = 0;       // clutching class of the loop
    int maslov = 0;  // 2*d
};

// Classification of a reality-constrained loop as disk clutching data.  The
// determinant winding of such a loop vanishes identically; the integer that
// survives is the half-period phase shift
//     k = (psi(theta+pi) + psi(theta)) / (2*pi),
// constant in theta, taken with the principal phase lift at sample 0.  The
// canonical class-d loops of make_disk_loop have k = d, and the induced real
// bundle pair over the disk has Maslov index 2d.
DiskClass classify_disk(const SampledLoop& loop, double tol = 1e-9);

// The two-class invariant of a Klein-torus clutching loop: the half-period
// phase shift mod 2.  Matches eq_w2 of the induced KleinTorusPair.
Bit klein_class(const SampledLoop& loop, double tol = 1e-9);

// Canonical class-d representative: first diagonal entry
// exp(i*d*pi*(1 - cos theta)), remaining entries 1.  Samples are mirrored so
// the reality condition holds exactly in floating point.
SampledLoop make_disk_loop(int n, int d, int num_samples);

enum class KleinLoopKind {
    Trivial,       // constant identity
    Twisted,       // constant diag(-1, 1, ..., 1)
    TwistedSmooth  // exp(i*pi*(1+cos theta)) in the first entry
};

SampledLoop make_klein_loop(KleinLoopKind kind, int n, int num_samples);

// Right-multiplies every sample by (I + E_j) with a reality-constrained
// random E of sup norm `magnitude`.  Preserves the reality condition
// bit-exactly, so classes are unchanged for small magnitudes.
SampledLoop perturb(const SampledLoop& loop, double magnitude, std::mt19937_64& rng);

// Pointwise product of two sampled loops of equal size and length.
SampledLoop pointwise_product(const SampledLoop& a, const SampledLoop& b);

}  // namespace crosscaps

#endif
