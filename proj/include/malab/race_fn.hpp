#pragma once

#include "malab/fitness_function.hpp"

#include <cstdint>
#include <optional>
#include <utility>

namespace malab {

enum class RaceVariant { Con, Uncon };

/// Parameters of the two-path race function over n = 2 * half_dim bits.
struct RaceParams {
    std::size_t half_dim = 0;   // bits per half
    unsigned k = 4;             // path parameter, k >= 4
    std::uint64_t l_con = 0;    // last rewarded position on the connected path
    std::uint64_t l_unc = 0;    // last rewarded peak on the unconnected path
    std::int64_t weight = -1;   // connected-path weight w; -1 selects n
    RaceVariant variant = RaceVariant::Con;

    std::int64_t weight_or_default() const {
        return weight >= 0 ? weight : static_cast<std::int64_t>(2 * half_dim);
    }
};

/// Race between a connected path in the left half (climbable one flip at a
/// time) and an unconnected path of peaks in the right half (every third
/// point of the same long k-path, so consecutive peaks are exactly three
/// flips apart). Regular points score 1 + w * pos_con + pos_unc. Reaching the
/// winning end (connected end for the Con variant, unconnected end for Uncon)
/// is the global optimum; reaching the losing end first lands in a trap one
/// fitness unit below it, from which no regular point is ever accepted again.
class RaceFn final : public FitnessFunction {
  public:
    /// Throws std::invalid_argument on parameter violations.
    explicit RaceFn(const RaceParams& params);

    std::size_t dim() const override { return 2 * params_.half_dim; }
    Fitness evaluate(const BitString& x) const override;
    bool is_global_optimum(const BitString& x) const override;
    PointClass classify(const BitString& x) const override;
    std::string name() const override {
        return params_.variant == RaceVariant::Con ? "race_con" : "race_uncon";
    }
    std::string metadata() const override;

    const RaceParams& params() const { return params_; }
    const LongKPath& path() const { return *path_; }
    std::int64_t weight() const { return weight_; }
    std::int64_t optimum_fitness() const { return optimum_fitness_; }

    /// The point whose halves sit at connected position pos_con and peak
    /// index peak_unc; the canonical run start is point_at(0, 0).
    BitString point_at(std::uint64_t pos_con, std::uint64_t peak_unc) const;

    /// Peak j of the unconnected path (path point at index 3j).
    const BitString& peak(std::uint64_t j) const { return path_->point(3 * j); }

    /// (pos_con, peak index) of a point whose halves are both valid.
    std::optional<std::pair<std::uint64_t, std::uint64_t>> decode(const BitString& x) const {
        const Positions p = positions(x);
        if (!p.valid)
            return std::nullopt;
        return std::make_pair(p.pos_con, p.pos_unc);
    }

  private:
    struct Positions {
        bool valid = false;
        std::uint64_t pos_con = 0;
        std::uint64_t pos_unc = 0;
    };
    Positions positions(const BitString& x) const;

    RaceParams params_;
    std::shared_ptr<const LongKPath> path_;
    std::int64_t weight_;
    std::int64_t optimum_fitness_; // G
};

} // namespace malab
