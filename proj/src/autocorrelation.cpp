#include "malab/autocorrelation.hpp"

#include <cmath>
#include <stdexcept>

namespace malab {

AutocorrResult random_walk_autocorrelation(const FitnessFunction& f, std::uint64_t walk_length,
                                           std::size_t max_lag, RngStream& rng,
                                           std::uint64_t burn_in) {
    if (max_lag < 1)
        throw std::invalid_argument("autocorrelation: max_lag must be >= 1");
    if (walk_length < 100 * max_lag)
        throw std::invalid_argument("autocorrelation: walk_length must be >= 100 * max_lag");

    const std::size_t n = f.dim();
    BitString x(n);
    for (std::size_t i = 0; i < n; ++i)
        x.set_bit(i, rng.next_bernoulli(0.5));
    for (std::uint64_t t = 0; t < burn_in; ++t)
        x.flip_bit(rng.next_below(n));

    std::vector<double> series(walk_length);
    for (std::uint64_t t = 0; t < walk_length; ++t) {
        series[t] = static_cast<double>(f.evaluate(x).value);
        x.flip_bit(rng.next_below(n));
    }

    double mean = 0;
    for (double v : series)
        mean += v;
    mean /= static_cast<double>(walk_length);
    double var = 0;
    for (double v : series)
        var += (v - mean) * (v - mean);
    var /= static_cast<double>(walk_length);
    if (var == 0.0)
        throw std::domain_error("autocorrelation undefined: fitness series has zero variance");

    AutocorrResult res;
    res.r.assign(max_lag + 1, 1.0);
    for (std::size_t s = 1; s <= max_lag; ++s) {
        double c = 0;
        for (std::uint64_t t = 0; t + s < walk_length; ++t)
            c += (series[t] - mean) * (series[t + s] - mean);
        c /= static_cast<double>(walk_length - s);
        res.r[s] = c / var;
    }
    if (res.r[1] > 0.0 && res.r[1] < 1.0)
        res.correlation_length = -1.0 / std::log(res.r[1]);
    return res;
}

} // namespace malab
