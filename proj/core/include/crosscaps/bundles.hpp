#ifndef CROSSCAPS_BUNDLES_HPP
#define CROSSCAPS_BUNDLES_HPP

#include <cstdint>
#include <vector>

#include "crosscaps/cohomology.hpp"
#include "crosscaps/surfaces.hpp"

namespace crosscaps {

// Classifying data of a real bundle pair over an sh-surface: complex rank,
// Maslov index, and one orientability bit per standard boundary circle.  The
// restriction to a crosscap circle is always trivializable, so crosscaps
// carry no bit here; the twisted/untwisted distinction lives on mapping tori
// (KleinTorusPair) and on loops of operators (holonomy module).
//
// The Maslov index and the boundary bits satisfy mu = sum of bits (mod 2);
// construction rejects data violating the parity.
class RealBundlePair {
public:
    RealBundlePair(int rank, int maslov, std::vector<Bit> std_w1);

    int rank() const { return rank_; }
    int maslov() const { return maslov_; }
    const std::vector<Bit>& std_w1() const { return std_w1_; }

    bool operator==(const RealBundlePair&) const = default;

private:
    int rank_;
    int maslov_;
    std::vector<Bit> std_w1_;
};

// Rank adds, Maslov adds, boundary bits add mod 2.  Both summands must live
// over the same base, i.e. carry the same number of standard-boundary bits.
RealBundlePair direct_sum(const RealBundlePair& p, const RealBundlePair& q);

// Classifying data of the top exterior power: rank drops to one, Maslov and
// boundary bits are unchanged.
RealBundlePair top_exterior(const RealBundlePair& p);

// Real index of a compatible real Cauchy-Riemann operator on the pair:
// mu + (1 - g^)*rank, with g^ the genus of the double of the base.
int fredholm_index(const RealBundlePair& p, const ShSurface& base);

// A real bundle pair over the torus with one antipodal factor.  Exactly two
// isomorphism classes per rank: the trivial pair (twist 0) and the pair with
// one twisted line summand (twist 1).
struct KleinTorusPair {
    int rank = 1;
    Bit twist = 0;
};

void validate(const KleinTorusPair& k);

// Pairing of the equivariant w_2 of the top exterior power with the
// fundamental class of the quotient: detects the twisted class.
Bit eq_w2(const KleinTorusPair& k);

// Top exterior power keeps the twist.
KleinTorusPair top_exterior(const KleinTorusPair& k);

// Tensor product of rank-1 pairs; twists add mod 2.
KleinTorusPair tensor(const KleinTorusPair& a, const KleinTorusPair& b);

}  // namespace crosscaps

#endif
