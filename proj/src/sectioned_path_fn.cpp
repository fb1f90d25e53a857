#include "malab/sectioned_path_fn.hpp"

#include <stdexcept>

namespace malab {

namespace {

// True iff `x` is at Hamming distance >= 2 from every path point, i.e. x is
// not on the path and no single flip of x lands on it.
bool clear_of_path(const LongKPath& path, const BitString& x) {
    if (path.position_of(x))
        return false;
    BitString probe = x;
    for (std::size_t c = 0; c < x.length(); ++c) {
        probe.flip_bit(c);
        const bool on_path = path.position_of(probe).has_value();
        probe.flip_bit(c);
        if (on_path)
            return false;
    }
    return true;
}

} // namespace

SectionedPathFn::SectionedPathFn(const SectionedPathParams& params)
    : params_(params), path_(LongKPath::build(params.dim, params.k)) {
    if (!(params_.depth > params_.gap && params_.gap >= 2))
        throw std::invalid_argument("SectionedPathFn: requires depth > gap >= 2");
    if (params_.sections < 1)
        throw std::invalid_argument("SectionedPathFn: requires sections >= 1");
    const std::uint64_t ls = section_length();
    if (params_.sections > path_->length() / ls)
        throw std::invalid_argument(
            "SectionedPathFn: sections * (depth + gap) exceeds path length");

    target_fitness_ =
        1 + static_cast<std::int64_t>((params_.sections + 1) * section_offset() + ls);

    targets_.reserve(params_.sections);
    for (std::uint64_t i = 1; i <= params_.sections; ++i) {
        const BitString& src = target_source(i);
        bool found = false;
        for (std::size_t a = 0; a + 1 < params_.dim && !found; ++a) {
            for (std::size_t b = a + 1; b < params_.dim && !found; ++b) {
                BitString t = src.with_flipped(a).with_flipped(b);
                if (!clear_of_path(*path_, t))
                    continue;
                bool duplicate = false;
                for (const BitString& prev : targets_)
                    if (prev == t) {
                        duplicate = true;
                        break;
                    }
                if (duplicate)
                    continue;
                targets_.push_back(std::move(t));
                found = true;
            }
        }
        if (!found)
            throw std::runtime_error("SectionedPathFn: no valid target pair for section " +
                                     std::to_string(i));
    }

    if (params_.dim <= 64) {
        target_word_index_.reserve(targets_.size());
        for (std::size_t i = 0; i < targets_.size(); ++i)
            target_word_index_.emplace(targets_[i].low_word(),
                                       static_cast<std::uint32_t>(i));
    } else {
        target_bits_index_.reserve(targets_.size());
        for (std::size_t i = 0; i < targets_.size(); ++i)
            target_bits_index_.emplace(targets_[i], static_cast<std::uint32_t>(i));
    }
}

bool SectionedPathFn::is_target(const BitString& x) const {
    if (params_.dim <= 64) {
        auto it = target_word_index_.find(x.low_word());
        return it != target_word_index_.end() && targets_[it->second] == x;
    }
    return target_bits_index_.count(x) != 0;
}

Fitness SectionedPathFn::evaluate(const BitString& x) const {
    if (auto pos = path_->position_of(x)) {
        const std::uint64_t p = *pos;
        const std::uint64_t ls = section_length();
        if (p >= params_.sections * ls)
            return Fitness(0); // truncated tail of the path
        return Fitness(path_fitness(p / ls + 1, p % ls));
    }
    if (is_target(x))
        return Fitness(target_fitness_);
    return Fitness(0);
}

bool SectionedPathFn::is_global_optimum(const BitString& x) const { return is_target(x); }

std::string SectionedPathFn::metadata() const {
    return "f_d(dim=" + std::to_string(params_.dim) + ", k=" + std::to_string(params_.k) +
           ", D=" + std::to_string(params_.depth) + ", gap=" + std::to_string(params_.gap) +
           ", sections=" + std::to_string(params_.sections) +
           ", path_length=" + std::to_string(path_->length()) + ")";
}

} // namespace malab
