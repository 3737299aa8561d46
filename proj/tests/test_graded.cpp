#include <random>
#include <set>

#include "doctest.h"
#include "homcat/graded.hpp"

using namespace homcat;

namespace {

/// a random complex with d² = 0: choose d1 freely, then d2 with d2 d1 = 0 by
/// picking columns from the kernel of d1^T... simpler: random d2, then
/// replace d2 by d2 projected onto maps vanishing on im(d1): build from
/// kernel coordinates directly.
ChainComplex random_three_term(std::mt19937_64& rng, int n0, int n1, int n2) {
    GradedSpace sp;
    for (int i = 0; i < n0; ++i) sp.add("a" + std::to_string(i), 0);
    for (int i = 0; i < n1; ++i) sp.add("b" + std::to_string(i), 1);
    for (int i = 0; i < n2; ++i) sp.add("c" + std::to_string(i), 2);
    GF2Matrix d0 = GF2Matrix::random(n1, n0, rng, 0.4);
    // d1 rows are functionals vanishing on im d0: rows from kernel of (d0^T)
    auto ker = d0.transpose().kernel_basis();  // functionals on C^1 killing im d0
    GF2Matrix d1(n2, n1);
    for (int r = 0; r < n2; ++r) {
        BitVec row(n1);
        for (const auto& k : ker)
            if (rng() & 1) row ^= k;
        d1.set_row(r, row);
    }
    std::map<int, GF2Matrix> blocks;
    blocks[0] = d0;
    blocks[1] = d1;
    return ChainComplex(std::move(sp), std::move(blocks));
}

/// brute-force cohomology dimension: enumerate kernel and image subspaces
int brute_h(const ChainComplex& cx, int deg) {
    int n = cx.space().dim(deg);
    std::set<std::vector<int>> kernel, image;
    for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
        BitVec v(n);
        for (int i = 0; i < n; ++i) v.set(i, (mask >> i) & 1);
        if (cx.apply_d(deg, v).zero()) kernel.insert(v.support());
    }
    int np = cx.space().dim(deg - 1);
    for (uint64_t mask = 0; mask < (uint64_t(1) << np); ++mask) {
        BitVec v(np);
        for (int i = 0; i < np; ++i) v.set(i, (mask >> i) & 1);
        image.insert(cx.apply_d(deg - 1, v).support());
    }
    int dk = 0, di = 0;
    while ((size_t(1) << dk) < kernel.size()) ++dk;
    while ((size_t(1) << di) < image.size()) ++di;
    return dk - di;
}

}  // namespace

TEST_CASE("zero differential: H equals the space") {
    GradedSpace sp;
    sp.add("x", 0);
    sp.add("y1", 1);
    sp.add("y2", 1);
    sp.add("z", 2);
    ChainComplex cx(std::move(sp), {});
    auto h = cx.cohomology_dims();
    CHECK(h == std::map<int, int>{{0, 1}, {1, 2}, {2, 1}});
}

TEST_CASE("acyclic two-term complex") {
    GradedSpace sp;
    sp.add("x", 0);
    sp.add("y", 1);
    GF2Matrix d(1, 1);
    d.set(0, 0, true);
    std::map<int, GF2Matrix> blocks;
    blocks[0] = d;
    ChainComplex cx(std::move(sp), std::move(blocks));
    CHECK(cx.cohomology_dims().empty());
}

TEST_CASE("random three-term complexes match the brute-force subspace oracle") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        int n0 = 1 + (int)(rng() % 5), n1 = 1 + (int)(rng() % 6), n2 = 1 + (int)(rng() % 5);
        ChainComplex cx = random_three_term(rng, n0, n1, n2);
        REQUIRE(cx.d_squared_zero());
        auto h = cx.cohomology_dims();
        for (int deg = 0; deg <= 2; ++deg) {
            int want = brute_h(cx, deg);
            int got = h.count(deg) ? h.at(deg) : 0;
            CHECK(got == want);
        }
    }
}

TEST_CASE("Euler characteristic of the complex equals that of cohomology") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        ChainComplex cx = random_three_term(rng, 2 + (int)(rng() % 4), 2 + (int)(rng() % 4),
                                            2 + (int)(rng() % 4));
        long long chi = 0;
        for (const auto& [deg, c] : cx.cohomology_dims()) chi += (deg % 2 ? -c : c);
        CHECK(chi == cx.euler());
    }
}

TEST_CASE("cohomology is invariant under basis permutation") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        int n0 = 2 + (int)(rng() % 3), n1 = 2 + (int)(rng() % 4), n2 = 2 + (int)(rng() % 3);
        ChainComplex cx = random_three_term(rng, n0, n1, n2);
        // permute the degree-1 basis
        std::vector<int> perm(n1);
        for (int i = 0; i < n1; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        GradedSpace sp;
        for (int i = 0; i < n0; ++i) sp.add("a" + std::to_string(i), 0);
        for (int i = 0; i < n1; ++i) sp.add("b" + std::to_string(i), 1);
        for (int i = 0; i < n2; ++i) sp.add("c" + std::to_string(i), 2);
        GF2Matrix d0(n1, n0), d1(n2, n1);
        for (int r = 0; r < n1; ++r)
            for (int c = 0; c < n0; ++c) d0.set(perm[r], c, cx.block(0).get(r, c));
        for (int r = 0; r < n2; ++r)
            for (int c = 0; c < n1; ++c) d1.set(r, perm[c], cx.block(1).get(r, c));
        std::map<int, GF2Matrix> blocks;
        blocks[0] = d0;
        blocks[1] = d1;
        ChainComplex cx2(std::move(sp), std::move(blocks));
        CHECK(cx.cohomology_dims() == cx2.cohomology_dims());
    }
}

TEST_CASE("mod-2 graded complexes wrap around") {
    GradedSpace sp(grading_z2());
    sp.add("x", 0);
    sp.add("y", 1);
    // d(x) = y, d(y) = 0: H = 0 even with wraparound
    GF2Matrix d0(1, 1);
    d0.set(0, 0, true);
    GF2Matrix d1(1, 1);  // zero map degree 1 -> 0
    std::map<int, GF2Matrix> blocks;
    blocks[0] = d0;
    blocks[1] = d1;
    ChainComplex cx(std::move(sp), std::move(blocks));
    CHECK(cx.d_squared_zero());
    CHECK(cx.cohomology_dims().empty());
}
