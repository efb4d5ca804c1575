#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "sprld/gf2_perm.hpp"
#include "sprld/rm_code.hpp"

using namespace sprld;

namespace {

std::vector<int> induced_map(const AffinePerm& p) {
    std::vector<int> map(std::size_t{1} << p.dim());
    for (std::size_t i = 0; i < map.size(); ++i)
        map[i] = p.apply_index(static_cast<int>(i));
    return map;
}

bool is_bijection(const AffinePerm& p) {
    std::vector<int> map = induced_map(p);
    std::sort(map.begin(), map.end());
    for (std::size_t i = 0; i < map.size(); ++i)
        if (map[i] != static_cast<int>(i))
            return false;
    return true;
}

}  // namespace

TEST_SUITE("gf2-perm") {

TEST_CASE("identity behaves as the group identity") {
    const AffinePerm id = AffinePerm::identity(3);
    for (int i = 0; i < 8; ++i)
        CHECK(id.apply_index(i) == i);
    CHECK(invert(id) == id);

    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const AffinePerm p = AffinePerm::sample_affine(3, rng);
        CHECK(compose(id, p) == p);
        CHECK(compose(p, id) == p);
    }
}

TEST_CASE("sample_affine stays inside GA(2,2) and covers it") {
    Rng rng(17);
    std::set<std::vector<int>> seen;
    for (int trial = 0; trial < 2000; ++trial) {
        const AffinePerm p = AffinePerm::sample_affine(2, rng);
        CHECK(is_bijection(p));
        seen.insert(induced_map(p));
    }
    // |GL(2,2)| = 6 invertible matrices times 4 shifts
    CHECK(seen.size() == 24);
}

TEST_CASE("sampled permutations are bijections") {
    Rng rng(23);
    for (int trial = 0; trial < 1000; ++trial)
        CHECK(is_bijection(AffinePerm::sample_affine(4, rng)));
}

TEST_CASE("sampling is deterministic per seed") {
    Rng a(99), b(99);
    for (int trial = 0; trial < 10; ++trial)
        CHECK(AffinePerm::sample_affine(5, a) == AffinePerm::sample_affine(5, b));
}

TEST_CASE("stage permutation examples") {
    // swap bits 0 and 1 of the index
    AffinePerm swap01(3, {1u << 1, 1u << 0, 1u << 2}, 0);
    CHECK(swap01.apply_index(1) == 2);
    CHECK(swap01.apply_index(2) == 1);
    CHECK(swap01.apply_index(4) == 4);

    // identity layer map
    Rng rng(1);
    const AffinePerm id = AffinePerm::identity(4);
    for (int i = 0; i < 16; ++i)
        CHECK(id.apply_index(i) == i);

    // swapping the two layers of a length-4 node: {0,1,2,3} -> {0,2,1,3}
    AffinePerm swap_s2(2, {1u << 1, 1u << 0}, 0);
    CHECK(induced_map(swap_s2) == std::vector<int>{0, 2, 1, 3});
}

TEST_CASE("length-8 node indices under a layer swap of the upper bits") {
    // swapping layers 1 and 2 moves the even indices {0,2,4,6} to {0,4,2,6}
    AffinePerm swap12(3, {1u << 0, 1u << 2, 1u << 1}, 0);
    CHECK(swap12.apply_index(0) == 0);
    CHECK(swap12.apply_index(2) == 4);
    CHECK(swap12.apply_index(4) == 2);
    CHECK(swap12.apply_index(6) == 6);
}

TEST_CASE("sample_stage_perm yields permutation matrices with zero shift") {
    Rng rng(7);
    std::set<std::vector<int>> seen;
    for (int trial = 0; trial < 500; ++trial) {
        const AffinePerm p = AffinePerm::sample_stage_perm(3, rng);
        CHECK(p.shift() == 0);
        int ones = 0;
        for (std::uint32_t row : p.rows()) {
            CHECK(std::popcount(row) == 1);
            ones += 1;
        }
        CHECK(ones == 3);
        CHECK(is_bijection(p));
        seen.insert(induced_map(p));
    }
    CHECK(seen.size() == 6);  // 3! layer orders
}

TEST_CASE("apply/invert round trip") {
    Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const AffinePerm p = AffinePerm::sample_affine(5, rng);
        const AffinePerm pinv = invert(p);
        for (int i = 0; i < 32; ++i)
            CHECK(pinv.apply_index(p.apply_index(i)) == i);
        CHECK(invert(pinv) == p);
        CHECK(compose(pinv, p) == AffinePerm::identity(5));
    }
}

TEST_CASE("hand-checked 2x2 affine map") {
    // A = [[0,1],[1,0]], b = (1,0) with row k over input bits j
    const std::vector<std::vector<int>> a = {{0, 1}, {1, 0}};
    const std::vector<int> b = {1, 0};
    AffinePerm p(2, {2u, 1u}, 1u);
    for (int i = 0; i < 4; ++i) {
        int expect = 0;
        for (int k = 0; k < 2; ++k) {
            int bit = b[static_cast<std::size_t>(k)];
            for (int j = 0; j < 2; ++j)
                bit ^= a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] & (i >> j);
            expect |= (bit & 1) << k;
        }
        CHECK(p.apply_index(i) == expect);
    }
}

TEST_CASE("compose matches the composed induced maps") {
    Rng rng(41);
    for (int s = 2; s <= 6; ++s) {
        for (int trial = 0; trial < 25; ++trial) {
            const AffinePerm p = AffinePerm::sample_affine(s, rng);
            const AffinePerm q = AffinePerm::sample_affine(s, rng);
            const AffinePerm pq = compose(p, q);
            for (int i = 0; i < (1 << s); ++i)
                CHECK(pq.apply_index(i) == p.apply_index(q.apply_index(i)));
        }
    }
}

TEST_CASE("permute_vector round trip and conventions") {
    Rng rng(53);
    const AffinePerm p = AffinePerm::sample_affine(4, rng);
    std::vector<double> v(16);
    std::iota(v.begin(), v.end(), 0.0);
    const auto permuted = permute_vector(p, v);
    for (int i = 0; i < 16; ++i)
        CHECK(permuted[static_cast<std::size_t>(p.apply_index(i))] == v[static_cast<std::size_t>(i)]);
    CHECK(permute_vector(invert(p), permuted) == v);
    CHECK(permute_vector(AffinePerm::identity(4), v) == v);
}

TEST_CASE("permuted codewords stay codewords") {
    Rng rng(61);
    for (auto [r, s] : {std::pair{1, 3}, std::pair{1, 4}, std::pair{2, 4}}) {
        const RmCode code = build_code(r, s);
        const auto words = codeword_set(code);
        const std::set<HardVec> member(words.begin(), words.end());
        for (int trial = 0; trial < 50; ++trial) {
            const AffinePerm p = AffinePerm::sample_affine(s, rng);
            for (std::size_t w = 0; w < words.size(); w += 3)
                CHECK(member.count(permute_vector(p, words[w])) == 1);
        }
    }
}

TEST_CASE("serialization emits rows and shift") {
    AffinePerm p(2, {2u, 1u}, 1u);
    CHECK(p.to_string() == "2,1;1");
}

}  // TEST_SUITE
