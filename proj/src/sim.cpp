#include "sprld/sim.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "sprld/channel.hpp"
#include "sprld/ssc_fht.hpp"

namespace sprld {

const char* decoder_name(DecoderKind kind) {
    switch (kind) {
        case DecoderKind::kSpRld: return "sp-rld";
        case DecoderKind::kSspRld: return "ssp-rld";
        case DecoderKind::kEnsSspRld: return "ens-ssp-rld";
        case DecoderKind::kSscFht: return "ssc-fht";
        case DecoderKind::kAutSscFht: return "aut-ssc-fht";
        case DecoderKind::kMlOracle: return "ml-oracle";
    }
    return "?";
}

DecoderKind decoder_from_name(const std::string& name) {
    for (DecoderKind kind : {DecoderKind::kSpRld, DecoderKind::kSspRld, DecoderKind::kEnsSspRld,
                             DecoderKind::kSscFht, DecoderKind::kAutSscFht, DecoderKind::kMlOracle})
        if (name == decoder_name(kind))
            return kind;
    throw std::invalid_argument("unknown decoder '" + name + "'");
}

double correlation(const HardVec& x, const LlrVec& alpha) {
    double c = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        c += x[i] ? -alpha[i] : alpha[i];
    return c;
}

HardVec ml_oracle_decode(const LlrVec& alpha, const RmCode& code) {
    if (code.K > 16)
        throw std::invalid_argument("ml_oracle_decode: K <= 16 required");
    const std::vector<HardVec> words = codeword_set(code);
    std::size_t best = 0;
    double best_corr = correlation(words[0], alpha);
    for (std::size_t w = 1; w < words.size(); ++w) {
        const double c = correlation(words[w], alpha);
        if (c > best_corr) {
            best_corr = c;
            best = w;
        }
    }
    return words[best];
}

bool ml_bound_flag(const HardVec& x_hat, const HardVec& x_true, const LlrVec& alpha) {
    if (x_hat == x_true)
        return false;
    return correlation(x_hat, alpha) >= correlation(x_true, alpha);
}

namespace {

struct FrameOutcome {
    bool error = false;
    bool ml_bound = false;
};

struct FrameContext {
    const RmCode& code;
    const FerConfig& cfg;
    double sigma;
};

FrameOutcome run_frame(const FrameContext& ctx, long long frame, double ebn0_db,
                       CostLedger& ledger) {
    const std::uint64_t ebn0_key =
        static_cast<std::uint64_t>(static_cast<std::int64_t>(std::llround(ebn0_db * 4096.0)));
    const std::uint64_t frame_seed =
        mix_seed(ctx.cfg.seed, static_cast<std::uint64_t>(frame) * 2 + 1) ^
        mix_seed(0x45424eull, ebn0_key);
    Rng channel_rng(mix_seed(frame_seed, 0x4348'414eull));

    HardVec u(static_cast<std::size_t>(ctx.code.N), 0);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int idx : ctx.code.info)
        u[static_cast<std::size_t>(idx)] = static_cast<Bit>(bit(channel_rng));
    const HardVec x = encode(ctx.code, u);
    const std::vector<double> y = transmit(x, ctx.sigma, channel_rng);
    const LlrVec alpha = llr_from_observation(y, ctx.sigma);

    SpConfig sp;
    sp.L = ctx.cfg.L;
    sp.S = ctx.cfg.S;
    sp.T = ctx.cfg.T;
    sp.L_prime = ctx.cfg.L_prime;
    sp.sp_mode = ctx.cfg.sp_mode;
    sp.seed = mix_seed(frame_seed, 0x4445'4343ull);

    HardVec x_hat;
    switch (ctx.cfg.decoder) {
        case DecoderKind::kSpRld:
            x_hat = sp_rld_decode(alpha, ctx.code, sp, ledger).x_hat;
            break;
        case DecoderKind::kSspRld:
            x_hat = ssp_rld_decode(alpha, ctx.code, sp, ledger).x_hat;
            break;
        case DecoderKind::kEnsSspRld:
            x_hat = ens_ssp_rld_decode(alpha, ctx.code, sp, ledger).x_hat;
            break;
        case DecoderKind::kSscFht:
            x_hat = ssc_fht_decode(alpha, ctx.code, ledger).x_hat;
            break;
        case DecoderKind::kAutSscFht:
            x_hat = aut_ssc_fht_decode(alpha, ctx.code, ctx.cfg.P, sp.seed, ledger).x_hat;
            break;
        case DecoderKind::kMlOracle:
            x_hat = ml_oracle_decode(alpha, ctx.code);
            break;
    }

    FrameOutcome out;
    out.error = x_hat != x;
    out.ml_bound = out.error && ml_bound_flag(x_hat, x, alpha);
    return out;
}

void validate(const FerConfig& cfg, const RmCode& code) {
    if (cfg.L < 1)
        throw std::invalid_argument("run_fer: L must be >= 1");
    if (cfg.S < 0)
        throw std::invalid_argument("run_fer: S must be >= 0");
    if (cfg.T < 1 || cfg.L_prime < 1)
        throw std::invalid_argument("run_fer: T and L' must be >= 1");
    if (cfg.P < 1)
        throw std::invalid_argument("run_fer: P must be >= 1");
    if (cfg.max_frames < 1)
        throw std::invalid_argument("run_fer: max_frames must be >= 1");
    if (cfg.target_errors < 0)
        throw std::invalid_argument("run_fer: target_errors must be >= 0");
    if (cfg.workers < 1)
        throw std::invalid_argument("run_fer: workers must be >= 1");
    if (cfg.ebn0_db.empty())
        throw std::invalid_argument("run_fer: at least one Eb/N0 point required");
    if (cfg.decoder == DecoderKind::kMlOracle && code.K > 16)
        throw std::invalid_argument("run_fer: ml-oracle needs K <= 16");
    if (cfg.decoder != DecoderKind::kMlOracle && (code.r < 1 || code.r > code.m - 1))
        throw std::invalid_argument("run_fer: decoders require 1 <= r <= m-1");
}

}  // namespace

std::vector<FerRecord> run_fer(const FerConfig& cfg) {
    const RmCode code = build_code(cfg.r, cfg.m);
    validate(cfg, code);
    const double rate = static_cast<double>(code.K) / code.N;

    std::vector<FerRecord> records;
    records.reserve(cfg.ebn0_db.size());
    for (double ebn0 : cfg.ebn0_db) {
        const auto t0 = std::chrono::steady_clock::now();
        const FrameContext ctx{code, cfg, sigma_from_ebn0(ebn0, rate)};

        // Per-frame cost is schedule-determined; capture it once.
        CostLedger per_frame;
        run_frame(ctx, 0, ebn0, per_frame);

        // Frames are processed in fixed-size blocks; the early-stop decision
        // is taken only at block boundaries so any worker count sees the same
        // frame set.
        const long long block = 256;
        long long frames = 0;
        long long errors = 0;
        long long ml_errors = 0;
        while (frames < cfg.max_frames &&
               (cfg.target_errors == 0 || errors < cfg.target_errors)) {
            const long long begin = frames;
            const long long end = std::min(cfg.max_frames, frames + block);
            const int workers = static_cast<int>(
                std::min<long long>(cfg.workers, end - begin));
            std::atomic<long long> next(begin);
            std::vector<long long> err_by_worker(static_cast<std::size_t>(workers), 0);
            std::vector<long long> ml_by_worker(static_cast<std::size_t>(workers), 0);
            auto work = [&](int w) {
                CostLedger scratch;
                for (long long f = next.fetch_add(1); f < end; f = next.fetch_add(1)) {
                    const FrameOutcome outcome = run_frame(ctx, f, ebn0, scratch);
                    if (outcome.error)
                        ++err_by_worker[static_cast<std::size_t>(w)];
                    if (outcome.ml_bound)
                        ++ml_by_worker[static_cast<std::size_t>(w)];
                }
            };
            if (workers == 1) {
                work(0);
            } else {
                std::vector<std::thread> pool;
                pool.reserve(static_cast<std::size_t>(workers));
                for (int w = 0; w < workers; ++w)
                    pool.emplace_back(work, w);
                for (auto& th : pool)
                    th.join();
            }
            for (int w = 0; w < workers; ++w) {
                errors += err_by_worker[static_cast<std::size_t>(w)];
                ml_errors += ml_by_worker[static_cast<std::size_t>(w)];
            }
            frames = end;
        }

        FerRecord rec;
        rec.r = cfg.r;
        rec.m = cfg.m;
        rec.decoder = decoder_name(cfg.decoder);
        rec.L = cfg.L;
        rec.S = cfg.S == kUnboundedSp ? -1 : cfg.S;
        rec.L_prime = cfg.L_prime;
        rec.T = cfg.T;
        rec.P = cfg.P;
        rec.ebn0_db = ebn0;
        rec.frames = frames;
        rec.frame_errors = errors;
        rec.fer = frames > 0 ? static_cast<double>(errors) / static_cast<double>(frames) : 0.0;
        rec.ml_bound_errors = ml_errors;
        rec.gamma = per_frame.flops();
        rec.upsilon_seq = per_frame.steps_seq;
        rec.upsilon_par = per_frame.steps_par;
        switch (cfg.decoder) {
            case DecoderKind::kSpRld:
            case DecoderKind::kSspRld:
                rec.phi_bits = memory_bits(code, cfg.L, 32, cfg.sp_mode, 1);
                break;
            case DecoderKind::kEnsSspRld:
                rec.phi_bits = memory_bits(code, cfg.L_prime, 32, cfg.sp_mode, cfg.T);
                break;
            case DecoderKind::kSscFht:
            case DecoderKind::kAutSscFht: {
                // one SC-sized buffer plus hard decisions per concurrent unit,
                // plus the channel staging buffer
                const std::uint64_t unit =
                    static_cast<std::uint64_t>(code.N) * 32 + static_cast<std::uint64_t>(code.N);
                const std::uint64_t units =
                    cfg.decoder == DecoderKind::kAutSscFht && cfg.sp_mode == SpMode::kParallel
                        ? static_cast<std::uint64_t>(cfg.P)
                        : 1;
                rec.phi_bits = unit * units + static_cast<std::uint64_t>(code.N) * 32;
                break;
            }
            case DecoderKind::kMlOracle:
                rec.phi_bits = 0;
                break;
        }
        rec.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        rec.seed = cfg.seed;
        records.push_back(std::move(rec));
    }
    return records;
}

namespace {

std::string sci(double v) {
    std::ostringstream os;
    os.precision(5);
    os << std::scientific << v;
    return os.str();
}

}  // namespace

std::string csv_header() {
    return "r,m,decoder,L,S,Lp,T,P,ebn0_db,frames,frame_errors,fer,ml_bound_errors,"
           "gamma,upsilon_seq,upsilon_par,phi_bits,wall_seconds,seed";
}

std::string csv_row(const FerRecord& rec) {
    std::ostringstream os;
    os << rec.r << ',' << rec.m << ',' << rec.decoder << ',' << rec.L << ',' << rec.S << ','
       << rec.L_prime << ',' << rec.T << ',' << rec.P << ',' << sci(rec.ebn0_db) << ','
       << rec.frames << ',' << rec.frame_errors << ',' << sci(rec.fer) << ','
       << rec.ml_bound_errors << ',' << rec.gamma << ',' << rec.upsilon_seq << ','
       << rec.upsilon_par << ',' << rec.phi_bits << ',' << sci(rec.wall_seconds) << ','
       << rec.seed;
    return os.str();
}

void write_csv(const std::string& path, const std::vector<FerRecord>& records) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    out << csv_header() << '\n';
    for (const FerRecord& rec : records)
        out << csv_row(rec) << '\n';
}

void write_plot_data(const std::string& path, const std::vector<FerRecord>& records) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    std::map<std::string, std::vector<const FerRecord*>> series;
    for (const FerRecord& rec : records) {
        std::ostringstream key;
        key << rec.decoder << "-RM(" << rec.r << ',' << rec.m << ")-L" << rec.L;
        if (rec.S >= 0)
            key << "-S" << rec.S;
        if (rec.T > 1)
            key << "-Lp" << rec.L_prime << "-T" << rec.T;
        if (rec.P > 1)
            key << "-P" << rec.P;
        series[key.str()].push_back(&rec);
    }
    for (auto& [name, rows] : series) {
        out << "# " << name << '\n';
        std::sort(rows.begin(), rows.end(),
                  [](const FerRecord* a, const FerRecord* b) { return a->ebn0_db < b->ebn0_db; });
        for (const FerRecord* rec : rows)
            out << sci(rec->ebn0_db) << ' ' << sci(rec->fer) << '\n';
        out << '\n';
    }
}

}  // namespace sprld
