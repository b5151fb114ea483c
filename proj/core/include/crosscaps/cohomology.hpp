#ifndef CROSSCAPS_COHOMOLOGY_HPP
#define CROSSCAPS_COHOMOLOGY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "crosscaps/surfaces.hpp"

namespace crosscaps {

using Bit = std::uint8_t;
// A degree-one mod-2 class, written in the basis dual to the chosen H_1
// basis of its ring.
using OneClass = std::vector<Bit>;

// Symmetric bit matrix; the mod-2 intersection form of a closed surface.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Bit at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, Bit v) { data_[i * cols_ + j] = v & 1; }

    bool operator==(const BitMatrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Bit> data_;
};

// Mod-2 cohomology of a closed surface: the rank of H^1, the intersection
// form, and the pairing vector of the torsion class of H_1(.;Z).  For an
// orientable surface the form is the standard symplectic one and the torsion
// vector is zero; for the connected sum of m projective planes the natural
// one-sided-loop basis makes the form the identity and the torsion class the
// sum of all basis loops.
struct SurfaceCohomology {
    bool orientable = true;
    std::size_t h1_rank = 0;
    BitMatrix intersection_form;
    std::vector<Bit> torsion_class;

    bool operator==(const SurfaceCohomology&) const = default;
};

// Finitely generated abelian group Z^r0 + sum of Z_{m_i}^{r_i}; the shape of
// a first homology group.
struct H1Presentation {
    long free_rank = 0;
    std::vector<std::pair<long, long>> torsion_orders;  // (m_i >= 2, r_i >= 1)
};

// Cohomology ring of a closed surface; rejects surfaces with boundary.
SurfaceCohomology ring_of(const ClosedSurfaceInfo& info);

// <kappa cup lambda, [Sigma]> over Z_2.
Bit cup_pair(const OneClass& kappa, const OneClass& lambda,
             const SurfaceCohomology& ring);

// <kappa^2, [Sigma]>.  Also verifies the identity <kappa^2, [Sigma]> =
// <kappa, torsion class>; a mismatch means the ring violates its invariants.
Bit square_pairing(const OneClass& kappa, const SurfaceCohomology& ring);

// Number of independent mod-2 classes that kill integral H_2 yet are not
// squares: one Z_2 per torsion factor of order divisible by 4.
long square_class_cokernel(const H1Presentation& h);

// <w_2(L_1 + ... + L_n), [Sigma]> for real line bundles with the given w_1
// classes: the degree-two elementary symmetric polynomial pushed through the
// cup-product pairing.
Bit whitney_sum_w2(const std::vector<OneClass>& lines,
                   const SurfaceCohomology& ring);

void validate(const H1Presentation& h);

}  // namespace crosscaps

#endif
