#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace sprld {

using Rng = std::mt19937_64;

// splitmix64 finalizer; used to derive independent rng streams from one seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(seed ^ splitmix64(stream));
}

// Affine index permutation of {0..2^s-1}: i -> A*bits(i) ^ b with A invertible
// over GF(2). bits(i) has the least significant bit at position 0. Rows of A
// are stored as bitmasks over the input bit positions.
class AffinePerm {
public:
    AffinePerm() = default;
    AffinePerm(int s, std::vector<std::uint32_t> rows, std::uint32_t shift);

    static AffinePerm identity(int s);

    // Uniform over GA(s,2): rejection-sample A until invertible, b uniform.
    static AffinePerm sample_affine(int s, Rng& rng);

    // Factor-graph (PE-stage) permutation: A a uniform permutation matrix, b = 0.
    static AffinePerm sample_stage_perm(int s, Rng& rng);

    int dim() const { return s_; }
    const std::vector<std::uint32_t>& rows() const { return rows_; }
    std::uint32_t shift() const { return shift_; }
    bool is_identity() const;

    int apply_index(int i) const {
        std::uint32_t out = shift_;
        for (int k = 0; k < s_; ++k)
            out ^= static_cast<std::uint32_t>(std::popcount(rows_[k] & static_cast<std::uint32_t>(i)) & 1) << k;
        return static_cast<int>(out);
    }

    // "A-rows-as-hex;b-as-hex" for run logs.
    std::string to_string() const;

    friend AffinePerm invert(const AffinePerm& p);
    friend AffinePerm compose(const AffinePerm& p, const AffinePerm& q);
    friend bool operator==(const AffinePerm& a, const AffinePerm& b);

private:
    int s_ = 0;
    std::vector<std::uint32_t> rows_;  // rows_[k] = row k of A as bitmask
    std::uint32_t shift_ = 0;          // b as bitmask
};

// (A^{-1}, A^{-1} b).
AffinePerm invert(const AffinePerm& p);

// Applies q first, then p: (A_p A_q, A_p b_q ^ b_p).
AffinePerm compose(const AffinePerm& p, const AffinePerm& q);

bool operator==(const AffinePerm& a, const AffinePerm& b);

// Forward-scatter convention: out[p(i)] = v[i].
template <typename T>
std::vector<T> permute_vector(const AffinePerm& p, const std::vector<T>& v) {
    std::vector<T> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[static_cast<std::size_t>(p.apply_index(static_cast<int>(i)))] = v[i];
    return out;
}

}  // namespace sprld
