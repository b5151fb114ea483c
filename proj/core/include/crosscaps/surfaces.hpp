#ifndef CROSSCAPS_SURFACES_HPP
#define CROSSCAPS_SURFACES_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace crosscaps {

// A boundary circle of an oriented symmetric half-surface carries an
// orientation-preserving involution: either the identity or the fixed-point
// free antipodal map.
enum class BoundaryKind { Standard, Crosscap };

// Purely combinatorial model of an oriented symmetric half-surface: genus
// plus an ordered list of boundary circles, each standard or crosscap.  No
// triangulation, charts, or metrics; every downstream formula consumes only
// (genus, #standard, #crosscap).
class ShSurface {
public:
    ShSurface() = default;
    ShSurface(int genus, std::vector<BoundaryKind> boundary);

    int genus() const { return genus_; }
    const std::vector<BoundaryKind>& boundary() const { return boundary_; }

    std::size_t boundary_count() const { return boundary_.size(); }
    std::size_t standard_count() const;
    std::size_t crosscap_count() const;

    bool operator==(const ShSurface&) const = default;

private:
    int genus_ = 0;
    std::vector<BoundaryKind> boundary_;
};

// A closed or bordered surface known only up to homeomorphism type:
// orientable genus-g with b boundary circles, or nonorientable with k
// crosscaps and b boundary circles.
struct ClosedSurfaceInfo {
    bool orientable = true;
    int genus_or_crosscap_number = 0;
    int boundary_count = 0;

    bool operator==(const ClosedSurfaceInfo&) const = default;
};

int euler_char(const ShSurface& s);
int euler_char(const ClosedSurfaceInfo& info);

// The closed orientable double: two copies of the surface glued along the
// boundary via its involution.  Empty boundary is a degenerate input and
// acts as the identity.
ClosedSurfaceInfo doubled(const ShSurface& s);

// Quotient of the double by the sheet-swapping involution: standard boundary
// circles survive as boundary, crosscap circles get a Mobius band glued in.
// Orientable iff there is no crosscap; Euler characteristic is preserved.
ClosedSurfaceInfo quotient(const ShSurface& s);

std::string to_string(BoundaryKind k);
BoundaryKind boundary_kind_from_string(const std::string& name);

}  // namespace crosscaps

#endif
