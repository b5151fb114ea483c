#ifndef CROSSCAPS_HOLONOMY_HPP
#define CROSSCAPS_HOLONOMY_HPP

#include <map>
#include <vector>

#include "crosscaps/cohomology.hpp"
#include "crosscaps/surfaces.hpp"

namespace crosscaps {

// Pairing bits attached to one standard boundary circle of a loop of
// operators: the orientability bit of the real part over the circle, the w_1
// pairing with the trace of a boundary point, and the w_2 pairing with the
// trace of the whole circle.
struct StdBoundaryLoopData {
    Bit w1_b = 0;
    Bit w1_alpha = 0;
    Bit w2_beta = 0;

    bool operator==(const StdBoundaryLoopData&) const = default;
};

// The single equivariant-w_2 pairing bit a crosscap circle contributes.
struct CrosscapLoopData {
    Bit eqw2 = 0;

    bool operator==(const CrosscapLoopData&) const = default;
};

// A loop of real Cauchy-Riemann operators over a mapping torus, reduced to
// the finitely many pairing bits that determine the holonomy of its
// determinant line.  One std entry per standard boundary circle and one cc
// entry per crosscap circle, in the base surface's boundary order.
struct OperatorLoop {
    ShSurface base;
    std::vector<StdBoundaryLoopData> std_data;
    std::vector<CrosscapLoopData> crosscap_data;
};

void validate(const OperatorLoop& loop);

// Holonomy bit of the determinant line around the loop:
//   sum over standard circles of (w1_b + 1) * w1_alpha + w2_beta
// + sum over crosscap circles of eqw2,   all mod 2.
Bit holonomy(const OperatorLoop& loop);

struct DecomposedLoop {
    OperatorLoop standard_part;     // same genus, crosscap circles deleted
    std::vector<Bit> crosscap_bits; // the eqw2 bits, in boundary order
};

// Pinching off the crosscap circles: the holonomy of the original loop is
// the holonomy of the standard part xor the crosscap bits.
DecomposedLoop decompose(const OperatorLoop& loop);

// A change of the reference trivializations used to orient determinant
// lines: one bit per touched fixed-locus component, one spin-parity bit per
// loop class (forced to zero in rank one), and one bit per equivariant loop
// class.
struct TrivializationChange {
    int rank = 1;
    std::map<int, Bit> o_real;     // component id -> bit
    std::map<int, Bit> s_real;     // loop class id -> parity bit
    std::map<int, Bit> o_complex;  // equivariant loop class id -> bit
};

void validate(const TrivializationChange& t);

// Which trivializations a boundary circle consumes.
struct BoundaryClassRef {
    BoundaryKind kind = BoundaryKind::Standard;
    Bit w1_b = 0;        // standard circles only
    int component_id = 0;  // fixed-locus component (standard circles only)
    int class_id = 0;      // loop class
};

// Sign change of the induced orientation:
//   (-1)^eps,  eps = sum_std ((w1_b+1) o_real + s_real) + sum_cc o_complex.
int trivialization_sign(const TrivializationChange& t,
                        const std::vector<BoundaryClassRef>& boundary);

// Inputs of the orientability criterion for crosscaps-only families.
struct OrientabilityFlags {
    bool no_std_boundary = false;
    bool pi1_trivial = false;
    bool c1_even = false;
    bool has_square_root = false;
};

enum class Verdict { OrientableGuaranteed, NoConclusion };

// Guaranteed orientable when there is no standard boundary and either the
// target is simply connected with even first Chern class, or the top
// exterior power admits a real square root.  Anything else is inconclusive
// (projective targets of even dimension give genuine counterexamples).
Verdict orientability_verdict(const OrientabilityFlags& flags);

// Parity bookkeeping for a degree-(a_1,...,a_m) complete intersection in
// n-dimensional projective space: the canonical-orientation construction
// applies iff n - (a_1 + ... + a_m) is odd, and the product of the
// trivialization-change signs is (-1)^(n+1+a_1+...+a_m).
struct CompleteIntersectionSign {
    bool applies = false;
    int sign_product = 1;
};

CompleteIntersectionSign complete_intersection_sign(int n, const std::vector<int>& degrees);

}  // namespace crosscaps

#endif
