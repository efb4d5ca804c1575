#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sprld/cost_model.hpp"
#include "sprld/rm_code.hpp"
#include "sprld/sp_rld.hpp"

namespace sprld {

enum class DecoderKind { kSpRld, kSspRld, kEnsSspRld, kSscFht, kAutSscFht, kMlOracle };

const char* decoder_name(DecoderKind kind);
DecoderKind decoder_from_name(const std::string& name);

struct FerConfig {
    int r = 2;
    int m = 8;
    DecoderKind decoder = DecoderKind::kSspRld;
    int L = 1;
    long long S = kUnboundedSp;
    int L_prime = 1;
    int T = 1;
    int P = 1;
    std::vector<double> ebn0_db;
    long long max_frames = 1'000'000;
    long long target_errors = 100;
    std::uint64_t seed = 1;
    int workers = 1;
    SpMode sp_mode = SpMode::kSequential;
};

struct FerRecord {
    int r = 0;
    int m = 0;
    std::string decoder;
    int L = 0;
    long long S = 0;
    int L_prime = 0;
    int T = 0;
    int P = 0;
    double ebn0_db = 0.0;
    long long frames = 0;
    long long frame_errors = 0;
    double fer = 0.0;
    long long ml_bound_errors = 0;
    std::uint64_t gamma = 0;
    std::uint64_t upsilon_seq = 0;
    std::uint64_t upsilon_par = 0;
    std::uint64_t phi_bits = 0;
    double wall_seconds = 0.0;
    std::uint64_t seed = 0;
};

// Monte-Carlo FER per Eb/N0 point. Stops at min(max_frames, first block
// boundary with >= target_errors frame errors). Frame i always uses the rng
// substream derived from (seed, i), so results are independent of the worker
// count. Throws on invalid configurations.
std::vector<FerRecord> run_fer(const FerConfig& cfg);

// Brute-force ML over the enumerated codeword set (K <= 16): the codeword
// maximizing the bipolar correlation with alpha, lowest index on ties.
HardVec ml_oracle_decode(const LlrVec& alpha, const RmCode& code);

double correlation(const HardVec& x, const LlrVec& alpha);

// True when a decoding error would also defeat ML: the decoder output is at
// least as likely as the transmitted codeword.
bool ml_bound_flag(const HardVec& x_hat, const HardVec& x_true, const LlrVec& alpha);

void write_csv(const std::string& path, const std::vector<FerRecord>& records);

// Companion (ebn0, fer) series per decoder for external plotting.
void write_plot_data(const std::string& path, const std::vector<FerRecord>& records);

std::string csv_header();
std::string csv_row(const FerRecord& rec);

}  // namespace sprld
