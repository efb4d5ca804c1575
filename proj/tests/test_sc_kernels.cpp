#include <doctest.h>

#include "sprld/rm_code.hpp"
#include "sprld/sc_kernels.hpp"

using namespace sprld;

TEST_SUITE("sc-kernels") {

TEST_CASE("f_op") {
    CHECK(f_op(2, -3) == -2);
    CHECK(f_op(0, 5) == 0);
    CHECK(f_op(-1, -4) == 1);
}

TEST_CASE("g_op") {
    CHECK(g_op(2, -3, 0) == -1);
    CHECK(g_op(2, -3, 1) == -5);
    CHECK(g_op(0, 7.5, 0) == 7.5);
    CHECK(g_op(0, 7.5, 1) == 7.5);
}

TEST_CASE("f_stage") {
    CHECK(f_stage({2, -3}) == LlrVec{-2});
    CHECK(f_stage({1, 2, 3, 4}) == LlrVec{1, 2});
    const LlrVec scaled = f_stage({3, 6, 9, 12});
    CHECK(scaled == LlrVec{3, 6});
}

TEST_CASE("g_stage") {
    CHECK(g_stage({2, -3}, {0}) == LlrVec{-1});
    CHECK(g_stage({1, 2, 3, 4}, {0, 0}) == LlrVec{4, 6});
    CHECK(g_stage({1, 2, 3, 4}, {1, 1}) == LlrVec{2, 2});
}

TEST_CASE("pm_update") {
    CHECK(pm_update(0, 1.5, 0) == 0);
    CHECK(pm_update(0, 1.5, 1) == 1.5);
    CHECK(pm_update(2.0, -0.5, 1) == 2.0);
    CHECK(pm_update(2.0, -0.5, 0) == 2.5);
}

TEST_CASE("combine rebuilds every RM(1,3) codeword from its child split") {
    for (const HardVec& x : codeword_set(build_code(1, 3))) {
        HardVec left(4), right(4);
        for (int i = 0; i < 4; ++i) {
            left[static_cast<std::size_t>(i)] =
                x[static_cast<std::size_t>(i)] ^ x[static_cast<std::size_t>(i + 4)];
            right[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i + 4)];
        }
        CHECK(combine(left, right) == x);
    }
}

TEST_CASE("combine of equal halves zeroes the xor half") {
    const HardVec h{1, 0, 1};
    const HardVec out = combine(h, h);
    CHECK(out == HardVec{0, 0, 0, 1, 0, 1});
}

TEST_CASE("hard_bit resolves zero to 0") {
    CHECK(hard_bit(0.0) == 0);
    CHECK(hard_bit(-0.25) == 1);
    CHECK(hard_bit(0.25) == 0);
}

}  // TEST_SUITE
