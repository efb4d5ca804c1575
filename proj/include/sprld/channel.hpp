#pragma once

#include <cstdint>

#include "sprld/gf2_perm.hpp"
#include "sprld/rm_code.hpp"

namespace sprld {

// BPSK over AWGN with unit symbol energy: sigma^2 = 1 / (2 R 10^(EbN0/10)).
struct ChannelConfig {
    double ebn0_db = 0.0;
    double rate = 0.5;
    double sigma = 1.0;
    std::uint64_t seed = 1;
};

double sigma_from_ebn0(double ebn0_db, double rate);

ChannelConfig make_channel(double ebn0_db, double rate, std::uint64_t seed);

// y = (1 - 2x) + z with z ~ N(0, sigma^2) i.i.d.
std::vector<double> transmit(const HardVec& x, double sigma, Rng& rng);

// alpha = 2 y / sigma^2; sigma is clamped away from zero so noiseless runs
// produce large finite LLRs.
LlrVec llr_from_observation(const std::vector<double>& y, double sigma);

}  // namespace sprld
