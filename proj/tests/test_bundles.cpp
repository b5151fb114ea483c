#include <doctest.h>

#include <random>

#include "crosscaps/bundles.hpp"
#include "crosscaps/errors.hpp"

using namespace crosscaps;

namespace {

// Real/imaginary splitting of a Klein-torus pair into line bundles over the
// quotient torus, in the basis (circle factor, halved factor): the trivial
// complex line splits as {trivial, gamma2}; the twisted line as
// {gamma1, gamma1 (x) gamma2}.
std::vector<OneClass> split_lines(const KleinTorusPair& k) {
    const OneClass tau{0, 0}, gamma1{1, 0}, gamma2{0, 1}, both{1, 1};
    std::vector<OneClass> lines;
    if (k.twist) {
        lines.push_back(gamma1);
        lines.push_back(both);
        for (int i = 1; i < k.rank; ++i) {
            lines.push_back(tau);
            lines.push_back(gamma2);
        }
    } else {
        for (int i = 0; i < k.rank; ++i) {
            lines.push_back(tau);
            lines.push_back(gamma2);
        }
    }
    return lines;
}

Bit eq_w2_by_cohomology(const KleinTorusPair& k) {
    const auto quotient_torus = ring_of(ClosedSurfaceInfo{true, 1, 0});
    return whitney_sum_w2(split_lines(k), quotient_torus);
}

RealBundlePair random_pair(std::mt19937_64& rng, std::size_t std_count) {
    std::uniform_int_distribution<int> rank(1, 4), mu(-6, 6), bit(0, 1);
    std::vector<Bit> bits(std_count);
    int parity = 0;
    for (auto& b : bits) {
        b = static_cast<Bit>(bit(rng));
        parity ^= b;
    }
    int m = mu(rng);
    if (((m % 2) + 2) % 2 != parity) ++m;
    return RealBundlePair(rank(rng), m, std::move(bits));
}

}  // namespace

TEST_CASE("construction enforces the Maslov parity constraint") {
    CHECK_NOTHROW(RealBundlePair(1, 2, {}));
    CHECK_NOTHROW(RealBundlePair(1, 1, {1}));
    CHECK_NOTHROW(RealBundlePair(2, 3, {1, 0}));
    CHECK_THROWS_AS(RealBundlePair(1, 1, {}), InputError);
    CHECK_THROWS_AS(RealBundlePair(1, 2, {1}), InputError);
    CHECK_THROWS_AS(RealBundlePair(0, 0, {}), InputError);
}

TEST_CASE("direct_sum adds ranks and Maslov, xors boundary bits") {
    const auto a = direct_sum(RealBundlePair(1, 2, {}), RealBundlePair(1, 0, {}));
    CHECK(a == RealBundlePair(2, 2, {}));

    const auto b = direct_sum(RealBundlePair(1, 1, {1}), RealBundlePair(1, 1, {1}));
    CHECK(b == RealBundlePair(2, 2, {0}));

    const auto c = direct_sum(RealBundlePair(2, 0, {0, 0}), RealBundlePair(1, 3, {1, 0}));
    CHECK(c == RealBundlePair(3, 3, {1, 0}));

    CHECK_THROWS_AS(direct_sum(RealBundlePair(1, 0, {}), RealBundlePair(1, 1, {1})),
                    InputError);
}

TEST_CASE("top_exterior keeps Maslov and bits") {
    CHECK(top_exterior(RealBundlePair(3, 4, {0})) == RealBundlePair(1, 4, {0}));
    const RealBundlePair line(1, 3, {1});
    CHECK(top_exterior(line) == line);
}

TEST_CASE("top_exterior of a sum matches the tensor rule on classifying data") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const auto p = random_pair(rng, 2), q = random_pair(rng, 2);
        const auto top_sum = top_exterior(direct_sum(p, q));
        CHECK(top_sum.rank() == 1);
        CHECK(top_sum.maslov() == p.maslov() + q.maslov());
        for (std::size_t i = 0; i < 2; ++i)
            CHECK(top_sum.std_w1()[i] == (p.std_w1()[i] ^ q.std_w1()[i]));
    }
}

TEST_CASE("fredholm_index examples") {
    const ShSurface disk_cc(0, {BoundaryKind::Crosscap});
    for (int n = 1; n <= 4; ++n)
        CHECK(fredholm_index(RealBundlePair(n, 0, {}), disk_cc) == n);
    for (int d = -4; d <= 4; ++d)
        CHECK(fredholm_index(RealBundlePair(1, 2 * d, {}), disk_cc) == 2 * d + 1);

    const ShSurface annulus(0, {BoundaryKind::Standard, BoundaryKind::Standard});
    CHECK(fredholm_index(RealBundlePair(1, 0, {0, 0}), annulus) == 0);

    CHECK_THROWS_AS(fredholm_index(RealBundlePair(1, 0, {}), annulus), InputError);
}

TEST_CASE("index is additive under direct_sum") {
    std::mt19937_64 rng(17);
    const ShSurface base(1, {BoundaryKind::Standard, BoundaryKind::Crosscap,
                             BoundaryKind::Standard});
    for (int trial = 0; trial < 100; ++trial) {
        const auto p = random_pair(rng, base.standard_count());
        const auto q = random_pair(rng, base.standard_count());
        CHECK(fredholm_index(direct_sum(p, q), base) ==
              fredholm_index(p, base) + fredholm_index(q, base));
    }
}

TEST_CASE("Klein-torus pairs: eq_w2, top exterior, tensor") {
    CHECK(eq_w2(KleinTorusPair{5, 0}) == 0);
    CHECK(eq_w2(KleinTorusPair{1, 1}) == 1);

    CHECK(top_exterior(KleinTorusPair{4, 0}).rank == 1);
    CHECK(top_exterior(KleinTorusPair{4, 0}).twist == 0);
    CHECK(top_exterior(KleinTorusPair{4, 1}).twist == 1);

    CHECK(tensor(KleinTorusPair{1, 1}, KleinTorusPair{1, 1}).twist == 0);
    CHECK(tensor(KleinTorusPair{1, 0}, KleinTorusPair{1, 1}).twist == 1);
    CHECK(tensor(KleinTorusPair{1, 0}, KleinTorusPair{1, 0}).twist == 0);
    CHECK_THROWS_AS(tensor(KleinTorusPair{2, 0}, KleinTorusPair{1, 0}), InputError);
}

TEST_CASE("eq_w2 agrees with the cohomology oracle through the line splitting") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(eq_w2(KleinTorusPair{n, 0}) == eq_w2_by_cohomology(KleinTorusPair{n, 0}));
        CHECK(eq_w2(KleinTorusPair{n, 1}) == eq_w2_by_cohomology(KleinTorusPair{n, 1}));
    }
}

TEST_CASE("eq_w2 of the top exterior power equals eq_w2 of the pair") {
    for (int n = 1; n <= 6; ++n)
        for (Bit t = 0; t <= 1; ++t)
            CHECK(eq_w2(top_exterior(KleinTorusPair{n, t})) == eq_w2(KleinTorusPair{n, t}));
}

TEST_CASE("eq_w2 is a homomorphism on rank-1 pairs") {
    for (Bit a = 0; a <= 1; ++a)
        for (Bit b = 0; b <= 1; ++b)
            CHECK(eq_w2(tensor(KleinTorusPair{1, a}, KleinTorusPair{1, b})) ==
                  (eq_w2(KleinTorusPair{1, a}) ^ eq_w2(KleinTorusPair{1, b})));
}

TEST_CASE("tensoring the trivial pair with the twisted line gives pairing 1") {
    const auto product = tensor(KleinTorusPair{1, 0}, KleinTorusPair{1, 1});
    CHECK(eq_w2(product) == 1);
}
