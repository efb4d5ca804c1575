#pragma once

#include <cstdint>
#include <vector>

namespace sprld {

using Bit = std::uint8_t;
using HardVec = std::vector<Bit>;
using LlrVec = std::vector<double>;

// Reed-Muller code RM(r,m): length N = 2^m, minimum distance d = 2^(m-r).
// Bit index i is frozen when popcount(i) < m-r, i.e. the generator row
// weight 2^popcount(i) falls below d.
struct RmCode {
    int r = 0;
    int m = 0;
    int N = 0;
    int K = 0;
    int d = 0;
    std::vector<bool> frozen;  // true = frozen position
    std::vector<int> info;     // sorted information indices
};

// Throws std::invalid_argument unless 0 <= r <= m and m >= 1.
RmCode build_code(int r, int m);

// In-place XOR butterfly v <- v * G^{(x)m} over GF(2). Self-inverse.
void kronecker_transform(HardVec& v);

// x = u * G^{(x)m}. Rejects u with nonzero frozen positions.
HardVec encode(const RmCode& code, const HardVec& u);

// Syndrome-style membership test: the butterfly of x must vanish on the
// frozen coordinates (G^{(x)m} is its own inverse).
bool is_codeword(const RmCode& code, const HardVec& x);

// Enumerates all 2^K codewords. Refuses K > 20.
std::vector<HardVec> codeword_set(const RmCode& code);

}  // namespace sprld
