#include "crosscaps/surfaces.hpp"

#include <algorithm>

#include "crosscaps/errors.hpp"

namespace crosscaps {

ShSurface::ShSurface(int genus, std::vector<BoundaryKind> boundary)
    : genus_(genus), boundary_(std::move(boundary)) {
    if (genus < 0) throw InputError("ShSurface: genus must be nonnegative");
}

std::size_t ShSurface::standard_count() const {
    return static_cast<std::size_t>(
        std::count(boundary_.begin(), boundary_.end(), BoundaryKind::Standard));
}

std::size_t ShSurface::crosscap_count() const {
    return boundary_.size() - standard_count();
}

int euler_char(const ShSurface& s) {
    return 2 - 2 * s.genus() - static_cast<int>(s.boundary_count());
}

int euler_char(const ClosedSurfaceInfo& info) {
    if (info.orientable)
        return 2 - 2 * info.genus_or_crosscap_number - info.boundary_count;
    return 2 - info.genus_or_crosscap_number - info.boundary_count;
}

ClosedSurfaceInfo doubled(const ShSurface& s) {
    if (s.boundary_count() == 0)
        return ClosedSurfaceInfo{true, s.genus(), 0};
    // Gluing two copies along all boundary circles doubles chi, so
    // g_hat = 1 - chi = 2g + b - 1.
    const int g_hat = 2 * s.genus() + static_cast<int>(s.boundary_count()) - 1;
    return ClosedSurfaceInfo{true, g_hat, 0};
}

ClosedSurfaceInfo quotient(const ShSurface& s) {
    const int b = static_cast<int>(s.standard_count());
    const int cc = static_cast<int>(s.crosscap_count());
    if (cc == 0)
        return ClosedSurfaceInfo{true, s.genus(), b};
    // Each crosscap circle contributes one Mobius band; a handle counts as
    // two crosscaps once the surface is nonorientable.
    return ClosedSurfaceInfo{false, 2 * s.genus() + cc, b};
}

std::string to_string(BoundaryKind k) {
    return k == BoundaryKind::Standard ? "standard" : "crosscap";
}

BoundaryKind boundary_kind_from_string(const std::string& name) {
    if (name == "standard") return BoundaryKind::Standard;
    if (name == "crosscap") return BoundaryKind::Crosscap;
    throw InputError("unknown boundary kind: " + name);
}

}  // namespace crosscaps
