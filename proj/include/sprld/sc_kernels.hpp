#pragma once

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "sprld/rm_code.hpp"

namespace sprld {

// Min-sum check-node kernel: min(|a|,|b|) sgn(a) sgn(b), with sgn(0) = +1.
inline double f_op(double a, double b) {
    const double mag = std::min(std::fabs(a), std::fabs(b));
    return (a < 0.0) == (b < 0.0) ? mag : -mag;
}

// Variable-node kernel: b + (1-2c) a.
inline double g_op(double a, double b, Bit c) {
    return c ? b - a : b + a;
}

// Hard decision (1 - sgn(alpha)) / 2 with sgn(0) = +1.
inline Bit hard_bit(double alpha) {
    return alpha < 0.0 ? Bit{1} : Bit{0};
}

// Path-metric update per the LLR-domain SCL rule: penalize |alpha| when the
// decision disagrees with the hard decision.
inline double pm_update(double pm, double alpha_bit, Bit u_hat) {
    return u_hat != hard_bit(alpha_bit) ? pm + std::fabs(alpha_bit) : pm;
}

inline LlrVec f_stage(const LlrVec& alpha) {
    const std::size_t half = alpha.size() / 2;
    LlrVec out(half);
    for (std::size_t i = 0; i < half; ++i)
        out[i] = f_op(alpha[i], alpha[i + half]);
    return out;
}

inline LlrVec g_stage(const LlrVec& alpha, const HardVec& beta_left) {
    const std::size_t half = alpha.size() / 2;
    if (beta_left.size() != half)
        throw std::invalid_argument("g_stage: beta length must be half the alpha length");
    LlrVec out(half);
    for (std::size_t i = 0; i < half; ++i)
        out[i] = g_op(alpha[i], alpha[i + half], beta_left[i]);
    return out;
}

// Parent codeword from the child estimates: (left ^ right, right). The left
// child estimates the XOR of the parent halves, the right child the second
// half, so this is the inverse of that split.
inline HardVec combine(const HardVec& beta_left, const HardVec& beta_right) {
    if (beta_left.size() != beta_right.size())
        throw std::invalid_argument("combine: halves must have equal length");
    const std::size_t half = beta_left.size();
    HardVec out(2 * half);
    for (std::size_t i = 0; i < half; ++i) {
        out[i] = beta_left[i] ^ beta_right[i];
        out[i + half] = beta_right[i];
    }
    return out;
}

}  // namespace sprld
