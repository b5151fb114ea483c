#include "crosscaps/cohomology.hpp"

#include "crosscaps/errors.hpp"

namespace crosscaps {

SurfaceCohomology ring_of(const ClosedSurfaceInfo& info) {
    if (info.boundary_count != 0)
        throw InputError("ring_of: surface must be closed");

    SurfaceCohomology ring;
    ring.orientable = info.orientable;
    if (info.orientable) {
        const std::size_t g = static_cast<std::size_t>(info.genus_or_crosscap_number);
        ring.h1_rank = 2 * g;
        ring.intersection_form = BitMatrix(2 * g, 2 * g);
        for (std::size_t i = 0; i < g; ++i) {
            ring.intersection_form.set(2 * i, 2 * i + 1, 1);
            ring.intersection_form.set(2 * i + 1, 2 * i, 1);
        }
        ring.torsion_class.assign(2 * g, 0);
    } else {
        const std::size_t m = static_cast<std::size_t>(info.genus_or_crosscap_number);
        if (m == 0) throw InputError("ring_of: nonorientable surface needs >= 1 crosscap");
        ring.h1_rank = m;
        ring.intersection_form = BitMatrix(m, m);
        for (std::size_t i = 0; i < m; ++i) ring.intersection_form.set(i, i, 1);
        ring.torsion_class.assign(m, 1);
    }
    return ring;
}

Bit cup_pair(const OneClass& kappa, const OneClass& lambda,
             const SurfaceCohomology& ring) {
    if (kappa.size() != ring.h1_rank || lambda.size() != ring.h1_rank)
        throw InputError("cup_pair: class length does not match ring rank");
    Bit acc = 0;
    for (std::size_t i = 0; i < kappa.size(); ++i) {
        if (!kappa[i]) continue;
        for (std::size_t j = 0; j < lambda.size(); ++j)
            acc ^= static_cast<Bit>(lambda[j] & ring.intersection_form.at(i, j));
    }
    return acc;
}

Bit square_pairing(const OneClass& kappa, const SurfaceCohomology& ring) {
    const Bit square = cup_pair(kappa, kappa, ring);
    Bit torsion = 0;
    for (std::size_t i = 0; i < kappa.size(); ++i)
        torsion ^= static_cast<Bit>(kappa[i] & ring.torsion_class[i]);
    if (square != torsion)
        throw ComputeError("square_pairing: ring violates the torsion-pairing identity");
    return square;
}

void validate(const H1Presentation& h) {
    if (h.free_rank < 0) throw InputError("H1Presentation: negative free rank");
    for (const auto& [m, r] : h.torsion_orders) {
        if (m < 2) throw InputError("H1Presentation: torsion order must be >= 2");
        if (r < 1) throw InputError("H1Presentation: multiplicity must be >= 1");
    }
}

long square_class_cokernel(const H1Presentation& h) {
    validate(h);
    long count = 0;
    for (const auto& [m, r] : h.torsion_orders)
        if (m % 4 == 0) count += r;
    return count;
}

Bit whitney_sum_w2(const std::vector<OneClass>& lines,
                   const SurfaceCohomology& ring) {
    Bit acc = 0;
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j)
            acc ^= cup_pair(lines[i], lines[j], ring);
    return acc;
}

}  // namespace crosscaps
