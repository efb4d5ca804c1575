#include "sprld/cost_model.hpp"

#include <stdexcept>

namespace sprld {

std::uint64_t memory_bits(const RmCode& code, int L, int Q, SpMode mode, int T) {
    if (L < 1 || Q < 1 || T < 1)
        throw std::invalid_argument("memory_bits: L, Q and T must be positive");
    const std::uint64_t N = static_cast<std::uint64_t>(code.N);
    const std::uint64_t m = static_cast<std::uint64_t>(code.m);
    const std::uint64_t q = static_cast<std::uint64_t>(Q);
    const std::uint64_t l = static_cast<std::uint64_t>(L);

    std::uint64_t per_branch = 0;
    if (L == 1)
        per_branch = (mode == SpMode::kSequential ? N * q : m * N * q) + m * q + N;
    else
        per_branch = (mode == SpMode::kSequential ? N * l * q : m * N * l * q) + m * q + 2 * N * l;
    return per_branch * static_cast<std::uint64_t>(T) + N * q;
}

}  // namespace sprld
