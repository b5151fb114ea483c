#include "crosscaps/bundles.hpp"

#include <numeric>

#include "crosscaps/errors.hpp"

namespace crosscaps {

namespace {

int bit_sum_mod2(const std::vector<Bit>& bits) {
    int s = 0;
    for (Bit b : bits) s ^= (b & 1);
    return s;
}

}  // namespace

RealBundlePair::RealBundlePair(int rank, int maslov, std::vector<Bit> std_w1)
    : rank_(rank), maslov_(maslov), std_w1_(std::move(std_w1)) {
    if (rank_ < 1) throw InputError("RealBundlePair: rank must be >= 1");
    if (((maslov_ % 2 + 2) % 2) != bit_sum_mod2(std_w1_))
        throw InputError("RealBundlePair: Maslov parity must match the sum of boundary bits");
}

RealBundlePair direct_sum(const RealBundlePair& p, const RealBundlePair& q) {
    if (p.std_w1().size() != q.std_w1().size())
        throw InputError("direct_sum: base surfaces differ");
    std::vector<Bit> bits(p.std_w1().size());
    for (std::size_t i = 0; i < bits.size(); ++i)
        bits[i] = static_cast<Bit>(p.std_w1()[i] ^ q.std_w1()[i]);
    return RealBundlePair(p.rank() + q.rank(), p.maslov() + q.maslov(), std::move(bits));
}

RealBundlePair top_exterior(const RealBundlePair& p) {
    return RealBundlePair(1, p.maslov(), p.std_w1());
}

int fredholm_index(const RealBundlePair& p, const ShSurface& base) {
    if (p.std_w1().size() != base.standard_count())
        throw InputError("fredholm_index: pair does not live over the given base");
    const int g_hat = doubled(base).genus_or_crosscap_number;
    return p.maslov() + (1 - g_hat) * p.rank();
}

void validate(const KleinTorusPair& k) {
    if (k.rank < 1) throw InputError("KleinTorusPair: rank must be >= 1");
    if (k.twist > 1) throw InputError("KleinTorusPair: twist must be a bit");
}

Bit eq_w2(const KleinTorusPair& k) {
    validate(k);
    return k.twist;
}

KleinTorusPair top_exterior(const KleinTorusPair& k) {
    validate(k);
    return KleinTorusPair{1, k.twist};
}

KleinTorusPair tensor(const KleinTorusPair& a, const KleinTorusPair& b) {
    validate(a);
    validate(b);
    if (a.rank != 1 || b.rank != 1)
        throw InputError("tensor: both Klein-torus pairs must have rank 1");
    return KleinTorusPair{1, static_cast<Bit>(a.twist ^ b.twist)};
}

}  // namespace crosscaps
