#pragma once

#include "malab/fitness_function.hpp"
#include "malab/rng.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace malab {

struct AutocorrResult {
    /// r[s] for s = 0..max_lag; r[0] = 1 by definition.
    std::vector<double> r;
    /// -1 / ln r(1) when 0 < r(1) < 1, otherwise undefined.
    std::optional<double> correlation_length;
};

/// Random-walk autocorrelation of the fitness time series: the walk picks
/// each next point uniformly from the Hamming-1 neighborhood, discards
/// `burn_in` steps, then records `walk_length` fitness values. r(s) is the
/// empirical lag-s correlation.
///
/// Requires walk_length >= 100 * max_lag (estimator stability floor); throws
/// std::domain_error if the recorded series has zero variance.
AutocorrResult random_walk_autocorrelation(const FitnessFunction& f, std::uint64_t walk_length,
                                           std::size_t max_lag, RngStream& rng,
                                           std::uint64_t burn_in = 1000);

} // namespace malab
