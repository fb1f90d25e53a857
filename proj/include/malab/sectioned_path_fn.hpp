#pragma once

#include "malab/fitness_function.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace malab {

/// Parameters of the sectioned long-path function. The underlying long k-path
/// over `dim` bits is cut into `sections` sections of length depth + gap
/// each; `depth` is the local-search depth the function is tuned to and `gap`
/// the margin that separates rewarded from rejected stop points.
struct SectionedPathParams {
    std::size_t dim = 0;
    unsigned k = 0;
    std::uint64_t depth = 0;    // D
    std::uint64_t gap = 0;      // l, must satisfy depth > gap >= 2
    std::uint64_t sections = 0; // S, sections * (depth + gap) <= path length
};

/// Sectioned long-path function. Within each section the fitness rises by 1
/// per path step; section i is offset by i * (2*gap - 1), so a point at depth
/// d of section i beats the previous section's end iff d >= depth - gap + 1.
/// Each section end is a Hamming-1 local optimum. One target point per
/// section sits two bit flips away from that section's depth-`depth` path
/// point; the targets are the global optima. Everything else scores 0.
class SectionedPathFn final : public FitnessFunction {
  public:
    /// Throws std::invalid_argument on parameter violations and
    /// std::runtime_error naming the section if no valid target pair exists.
    explicit SectionedPathFn(const SectionedPathParams& params);

    std::size_t dim() const override { return path_->dim(); }
    Fitness evaluate(const BitString& x) const override;
    bool is_global_optimum(const BitString& x) const override;
    std::string name() const override { return "f_d"; }
    std::string metadata() const override;

    const SectionedPathParams& params() const { return params_; }
    const LongKPath& path() const { return *path_; }

    std::uint64_t section_length() const { return params_.depth + params_.gap; }
    std::uint64_t section_offset() const { return 2 * params_.gap - 1; } // A
    /// Fitness of a used path point at (1-based) section i, depth d.
    std::int64_t path_fitness(std::uint64_t section, std::uint64_t d) const {
        return 1 + static_cast<std::int64_t>(section * section_offset() + d);
    }
    std::int64_t target_fitness() const { return target_fitness_; }

    /// Target of (1-based) section i.
    const BitString& target(std::uint64_t section) const { return targets_[section - 1]; }
    /// Path point at depth `depth` of (1-based) section i, the point the
    /// section's target is two flips away from.
    const BitString& target_source(std::uint64_t section) const {
        return path_->point((section - 1) * section_length() + params_.depth);
    }
    /// Path point ending (1-based) section i.
    const BitString& section_end(std::uint64_t section) const {
        return path_->point(section * section_length() - 1);
    }

  private:
    SectionedPathParams params_;
    std::shared_ptr<const LongKPath> path_;
    std::vector<BitString> targets_;
    std::unordered_map<std::uint64_t, std::uint32_t> target_word_index_;
    std::unordered_map<BitString, std::uint32_t> target_bits_index_;
    std::int64_t target_fitness_ = 0;

    bool is_target(const BitString& x) const;
};

} // namespace malab
