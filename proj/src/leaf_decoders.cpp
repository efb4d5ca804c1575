#include "sprld/leaf_decoders.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "sprld/sc_kernels.hpp"

namespace sprld {

std::vector<double> fht(LlrVec alpha) {
    const std::size_t n = alpha.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::invalid_argument("fht: length must be a power of two");
    for (std::size_t len = 1; len < n; len <<= 1) {
        for (std::size_t i = 0; i < n; i += 2 * len) {
            for (std::size_t j = i; j < i + len; ++j) {
                const double a = alpha[j];
                const double b = alpha[j + len];
                alpha[j] = a + b;
                alpha[j + len] = a - b;
            }
        }
    }
    return alpha;
}

namespace {

struct LeafCandidate {
    double pm;
    int parent;
    int seq;  // candidate ordinal inside the parent path
};

int stage_of(std::size_t n) {
    int s = 0;
    while ((std::size_t{1} << s) < n)
        ++s;
    return s;
}

}  // namespace

std::vector<DecodePath> fht_list(const std::vector<DecodePath>& paths, int L,
                                 CostLedger& ledger, bool spectrum_reused) {
    if (paths.empty() || L < 1)
        throw std::invalid_argument("fht_list: need at least one path and L >= 1");
    const std::size_t n = paths[0].alpha.size();
    const int s = stage_of(n);
    if (n < 2 || (std::size_t{1} << s) != n)
        throw std::invalid_argument("fht_list: node length must be a power of two >= 2");

    const int per_path = std::min<int>(L, static_cast<int>(2 * n));
    std::vector<LeafCandidate> merged;
    merged.reserve(paths.size() * static_cast<std::size_t>(per_path));
    std::vector<std::vector<double>> spectra(paths.size());

    for (std::size_t q = 0; q < paths.size(); ++q) {
        spectra[q] = fht(paths[q].alpha);
        double sum_abs = 0.0;
        for (double a : paths[q].alpha)
            sum_abs += std::fabs(a);
        // candidate 2k+comp = coefficient mask k, complement bit comp
        std::vector<LeafCandidate> local;
        local.reserve(2 * n);
        for (std::size_t k = 0; k < n; ++k) {
            const double c = spectra[q][k];
            local.push_back({paths[q].pm + 0.5 * (sum_abs - c), static_cast<int>(q),
                             static_cast<int>(2 * k)});
            local.push_back({paths[q].pm + 0.5 * (sum_abs + c), static_cast<int>(q),
                             static_cast<int>(2 * k + 1)});
        }
        // keep the per-path front-runners; a global top-L never needs more
        // than L from one path
        std::sort(local.begin(), local.end(), [](const LeafCandidate& a, const LeafCandidate& b) {
            return a.pm != b.pm ? a.pm < b.pm : a.seq < b.seq;
        });
        local.resize(static_cast<std::size_t>(per_path));
        merged.insert(merged.end(), local.begin(), local.end());
    }
    prune_candidates(merged, L, ledger);
    ledger.charge_fht_list(s, static_cast<int>(paths.size()), L, spectrum_reused);

    std::vector<DecodePath> out(merged.size());
    for (std::size_t i = 0; i < merged.size(); ++i) {
        const LeafCandidate& cand = merged[i];
        const DecodePath& parent = paths[static_cast<std::size_t>(cand.parent)];
        const unsigned mask = static_cast<unsigned>(cand.seq) >> 1;
        const Bit comp = static_cast<Bit>(cand.seq & 1);
        DecodePath& path = out[i];
        path.pm = cand.pm;
        path.pi_init = parent.pi_init;
        path.pi_sp = AffinePerm::identity(s >= 1 ? s : 1);
        path.l_org = cand.parent;
        path.x_hat.resize(n);
        for (std::size_t j = 0; j < n; ++j)
            path.x_hat[j] =
                static_cast<Bit>((std::popcount(mask & static_cast<unsigned>(j)) & 1) ^ comp);
    }
    return out;
}

std::vector<DecodePath> spc_list(const std::vector<DecodePath>& paths, int L,
                                 CostLedger& ledger) {
    if (paths.empty() || L < 1)
        throw std::invalid_argument("spc_list: need at least one path and L >= 1");
    const std::size_t n = paths[0].alpha.size();
    if (n < 2)
        throw std::invalid_argument("spc_list: node length must be at least 2");

    struct Branch {
        double pm;
        int parent;
        int seq;
        Bit gamma_prime;                 // 1 = least-reliable bit currently flipped
        std::vector<std::uint16_t> flips;  // flipped positions besides i_min
    };

    std::vector<HardVec> hard(paths.size());
    std::vector<std::vector<int>> order(paths.size());
    std::vector<Branch> active;
    active.reserve(paths.size());
    for (std::size_t q = 0; q < paths.size(); ++q) {
        const LlrVec& alpha = paths[q].alpha;
        hard[q].resize(n);
        Bit gamma = 0;
        for (std::size_t i = 0; i < n; ++i) {
            hard[q][i] = hard_bit(alpha[i]);
            gamma ^= hard[q][i];
        }
        order[q].resize(n);
        std::iota(order[q].begin(), order[q].end(), 0);
        std::sort(order[q].begin(), order[q].end(), [&](int a, int b) {
            const double ma = std::fabs(alpha[a]);
            const double mb = std::fabs(alpha[b]);
            return ma != mb ? ma < mb : a < b;
        });
        const double base =
            paths[q].pm + (gamma ? std::fabs(alpha[static_cast<std::size_t>(order[q][0])]) : 0.0);
        active.push_back({base, static_cast<int>(q), 0, gamma, {}});
    }

    const int splits = std::min<int>(L - 1, static_cast<int>(n) - 1);
    int next_seq = static_cast<int>(paths.size());
    for (int t = 1; t <= splits; ++t) {
        std::vector<Branch> merged = active;
        for (const Branch& b : active) {
            const LlrVec& alpha = paths[static_cast<std::size_t>(b.parent)].alpha;
            const int j = order[static_cast<std::size_t>(b.parent)][static_cast<std::size_t>(t)];
            const int i_min = order[static_cast<std::size_t>(b.parent)][0];
            Branch flip = b;
            flip.pm += std::fabs(alpha[static_cast<std::size_t>(j)]) +
                       (b.gamma_prime ? -1.0 : 1.0) * std::fabs(alpha[static_cast<std::size_t>(i_min)]);
            flip.gamma_prime ^= 1;
            flip.flips.push_back(static_cast<std::uint16_t>(j));
            flip.seq = next_seq++;
            merged.push_back(std::move(flip));
        }
        prune_candidates(merged, L, ledger);
        active = std::move(merged);
    }
    ledger.charge_spc_list(static_cast<int>(n), static_cast<int>(paths.size()), L, splits);

    const int s = stage_of(n);
    std::vector<DecodePath> out(active.size());
    for (std::size_t i = 0; i < active.size(); ++i) {
        const Branch& b = active[i];
        const DecodePath& parent = paths[static_cast<std::size_t>(b.parent)];
        DecodePath& path = out[i];
        path.pm = b.pm;
        path.pi_init = parent.pi_init;
        path.pi_sp = AffinePerm::identity(s >= 1 ? s : 1);
        path.l_org = b.parent;
        path.x_hat = hard[static_cast<std::size_t>(b.parent)];
        for (std::uint16_t j : b.flips)
            path.x_hat[j] ^= 1;
        if (b.gamma_prime)
            path.x_hat[static_cast<std::size_t>(order[static_cast<std::size_t>(b.parent)][0])] ^= 1;
    }
    return out;
}

}  // namespace sprld
