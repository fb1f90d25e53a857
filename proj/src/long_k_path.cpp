#include "malab/long_k_path.hpp"

#include "malab/fitness.hpp"

#include <stdexcept>

namespace malab {

namespace {

void check_params(std::size_t dim, unsigned k) {
    if (k < 1)
        throw std::invalid_argument("LongKPath: k must be >= 1");
    if (dim < 1 || dim % k != 1 % k)
        throw std::invalid_argument("LongKPath: dim must be congruent 1 mod k");
}

// Prepends `prefix_ones` of the first k bits set (from the right end of the
// prefix) to p, i.e. builds 0^{k-i} 1^i p with i = prefix_ones.
BitString prefixed(unsigned k, unsigned prefix_ones, const BitString& p) {
    BitString r(p.length() + k);
    for (unsigned i = 0; i < prefix_ones; ++i)
        r.set_bit(k - 1 - i, true);
    for (std::size_t j = 0; j < p.length(); ++j)
        if (p.bit(j))
            r.set_bit(k + j, true);
    return r;
}

} // namespace

std::uint64_t LongKPath::recurrence_length(std::size_t dim, unsigned k) {
    check_params(dim, k);
    std::int64_t len = 2;
    for (std::size_t d = 1; d < dim; d += k)
        len = checked_add(checked_mul(len, 2), static_cast<std::int64_t>(k) - 1);
    return static_cast<std::uint64_t>(len);
}

std::shared_ptr<const LongKPath> LongKPath::build(std::size_t dim, unsigned k) {
    check_params(dim, k);
    recurrence_length(dim, k); // reject sizes that overflow before allocating

    std::vector<BitString> pts;
    pts.push_back(BitString::parse("0"));
    pts.push_back(BitString::parse("1"));
    for (std::size_t d = 1; d < dim; d += k) {
        std::vector<BitString> next;
        next.reserve(2 * pts.size() + k - 1);
        for (const BitString& p : pts)
            next.push_back(prefixed(k, 0, p));
        for (unsigned i = 1; i < k; ++i)
            next.push_back(prefixed(k, i, pts.back()));
        for (auto it = pts.rbegin(); it != pts.rend(); ++it)
            next.push_back(prefixed(k, k, *it));
        pts = std::move(next);
    }

    auto path = std::shared_ptr<LongKPath>(new LongKPath(dim, k));
    path->points_ = std::move(pts);
    if (dim <= 64) {
        path->word_index_.reserve(path->points_.size());
        for (std::size_t i = 0; i < path->points_.size(); ++i)
            path->word_index_.emplace(path->points_[i].low_word(),
                                      static_cast<std::uint32_t>(i));
    } else {
        path->bits_index_.reserve(path->points_.size());
        for (std::size_t i = 0; i < path->points_.size(); ++i)
            path->bits_index_.emplace(path->points_[i], static_cast<std::uint32_t>(i));
    }
    return path;
}

std::optional<std::size_t> LongKPath::position_of(const BitString& x) const {
    if (x.length() != dim_)
        throw std::invalid_argument("LongKPath::position_of: length mismatch");
    if (dim_ <= 64) {
        auto it = word_index_.find(x.low_word());
        if (it == word_index_.end())
            return std::nullopt;
        return it->second;
    }
    auto it = bits_index_.find(x);
    if (it == bits_index_.end())
        return std::nullopt;
    return it->second;
}

} // namespace malab
