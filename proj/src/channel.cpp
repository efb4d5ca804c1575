#include "sprld/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace sprld {

double sigma_from_ebn0(double ebn0_db, double rate) {
    if (rate <= 0.0)
        throw std::invalid_argument("sigma_from_ebn0: rate must be positive");
    return 1.0 / std::sqrt(2.0 * rate * std::pow(10.0, ebn0_db / 10.0));
}

ChannelConfig make_channel(double ebn0_db, double rate, std::uint64_t seed) {
    return {ebn0_db, rate, sigma_from_ebn0(ebn0_db, rate), seed};
}

std::vector<double> transmit(const HardVec& x, double sigma, Rng& rng) {
    std::vector<double> y(x.size());
    if (sigma > 0.0) {
        std::normal_distribution<double> noise(0.0, sigma);
        for (std::size_t i = 0; i < x.size(); ++i)
            y[i] = (x[i] ? -1.0 : 1.0) + noise(rng);
    } else {
        for (std::size_t i = 0; i < x.size(); ++i)
            y[i] = x[i] ? -1.0 : 1.0;
    }
    return y;
}

LlrVec llr_from_observation(const std::vector<double>& y, double sigma) {
    const double s = std::max(sigma, 1e-6);
    const double scale = 2.0 / (s * s);
    LlrVec alpha(y.size());
    for (std::size_t i = 0; i < y.size(); ++i)
        alpha[i] = scale * y[i];
    return alpha;
}

}  // namespace sprld
