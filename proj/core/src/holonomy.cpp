#include "crosscaps/holonomy.hpp"

#include "crosscaps/errors.hpp"

namespace crosscaps {

void validate(const OperatorLoop& loop) {
    if (loop.std_data.size() != loop.base.standard_count())
        throw InputError("OperatorLoop: std entry count != standard boundary count");
    if (loop.crosscap_data.size() != loop.base.crosscap_count())
        throw InputError("OperatorLoop: cc entry count != crosscap boundary count");
}

Bit holonomy(const OperatorLoop& loop) {
    validate(loop);
    Bit acc = 0;
    for (const auto& s : loop.std_data)
        acc ^= static_cast<Bit>(((s.w1_b ^ 1) & s.w1_alpha) ^ s.w2_beta);
    for (const auto& c : loop.crosscap_data) acc ^= (c.eqw2 & 1);
    return acc;
}

DecomposedLoop decompose(const OperatorLoop& loop) {
    validate(loop);
    std::vector<BoundaryKind> kept;
    for (BoundaryKind k : loop.base.boundary())
        if (k == BoundaryKind::Standard) kept.push_back(k);

    DecomposedLoop out;
    out.standard_part.base = ShSurface(loop.base.genus(), std::move(kept));
    out.standard_part.std_data = loop.std_data;
    out.crosscap_bits.reserve(loop.crosscap_data.size());
    for (const auto& c : loop.crosscap_data) out.crosscap_bits.push_back(c.eqw2 & 1);
    return out;
}

void validate(const TrivializationChange& t) {
    if (t.rank < 1) throw InputError("TrivializationChange: rank must be >= 1");
    if (t.rank == 1)
        for (const auto& [id, bit] : t.s_real)
            if (bit & 1)
                throw InputError("TrivializationChange: spin parity is forced to 0 in rank 1");
}

namespace {

Bit lookup(const std::map<int, Bit>& m, int id, const char* what) {
    auto it = m.find(id);
    if (it == m.end())
        throw InputError(std::string("trivialization_sign: missing ") + what + " id " +
                         std::to_string(id));
    return static_cast<Bit>(it->second & 1);
}

}  // namespace

int trivialization_sign(const TrivializationChange& t,
                        const std::vector<BoundaryClassRef>& boundary) {
    validate(t);
    Bit eps = 0;
    for (const auto& b : boundary) {
        if (b.kind == BoundaryKind::Standard) {
            eps ^= static_cast<Bit>((b.w1_b ^ 1) &
                                    lookup(t.o_real, b.component_id, "fixed-locus component"));
            eps ^= lookup(t.s_real, b.class_id, "loop class");
        } else {
            eps ^= lookup(t.o_complex, b.class_id, "equivariant loop class");
        }
    }
    return eps ? -1 : 1;
}

Verdict orientability_verdict(const OrientabilityFlags& f) {
    if (f.no_std_boundary && ((f.pi1_trivial && f.c1_even) || f.has_square_root))
        return Verdict::OrientableGuaranteed;
    return Verdict::NoConclusion;
}

CompleteIntersectionSign complete_intersection_sign(int n, const std::vector<int>& degrees) {
    if (n < 1) throw InputError("complete_intersection_sign: n must be >= 1");
    long total = 0;
    for (int a : degrees) {
        if (a < 1) throw InputError("complete_intersection_sign: degrees must be positive");
        total += a;
    }
    CompleteIntersectionSign out;
    out.applies = ((n - total) % 2 + 2) % 2 == 1;
    out.sign_product = ((n + 1 + total) % 2 == 0) ? 1 : -1;
    return out;
}

}  // namespace crosscaps
