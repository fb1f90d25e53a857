#include "malab/race_fn.hpp"

#include <stdexcept>

namespace malab {

RaceFn::RaceFn(const RaceParams& params)
    : params_(params), path_(LongKPath::build(params.half_dim, params.k)),
      weight_(params.weight_or_default()) {
    if (params_.k < 4)
        throw std::invalid_argument("RaceFn: k must be >= 4");
    if (params_.l_con >= path_->length())
        throw std::invalid_argument("RaceFn: l_con must be below the path length");
    if (3 * params_.l_unc >= path_->length())
        throw std::invalid_argument("RaceFn: 3 * l_unc must be below the path length");
    if (weight_ < 1)
        throw std::invalid_argument("RaceFn: weight must be >= 1");
    optimum_fitness_ =
        checked_add(checked_add(1, checked_mul(weight_, static_cast<std::int64_t>(params_.l_con))),
                    static_cast<std::int64_t>(params_.l_unc) + 2);
}

RaceFn::Positions RaceFn::positions(const BitString& x) const {
    const std::size_t h = params_.half_dim;
    std::optional<std::size_t> pc, pu;
    if (h <= 64 && x.length() <= 128) {
        // Packed-half fast path: left half is bits 0..h-1, right half h..2h-1.
        auto w = x.words();
        const std::uint64_t lo = w[0];
        const std::uint64_t hi = w.size() > 1 ? w[1] : 0;
        const std::uint64_t left = h == 64 ? lo : lo & ((std::uint64_t{1} << h) - 1);
        std::uint64_t right;
        if (h == 64)
            right = hi;
        else if (2 * h <= 64)
            right = (lo >> h) & ((std::uint64_t{1} << h) - 1);
        else
            right = ((lo >> h) | (hi << (64 - h))) & ((std::uint64_t{1} << h) - 1);
        pc = path_->position_of_word(left);
        pu = path_->position_of_word(right);
    } else {
        BitString left(h), right(h);
        for (std::size_t i = 0; i < h; ++i) {
            if (x.bit(i))
                left.set_bit(i, true);
            if (x.bit(h + i))
                right.set_bit(i, true);
        }
        pc = path_->position_of(left);
        pu = path_->position_of(right);
    }

    Positions out;
    if (!pc || *pc > params_.l_con)
        return out;
    if (!pu || *pu % 3 != 0 || *pu / 3 > params_.l_unc)
        return out;
    out.valid = true;
    out.pos_con = *pc;
    out.pos_unc = *pu / 3;
    return out;
}

Fitness RaceFn::evaluate(const BitString& x) const {
    const Positions p = positions(x);
    if (!p.valid)
        return Fitness(0);
    const bool con_end = p.pos_con == params_.l_con;
    const bool unc_end = p.pos_unc == params_.l_unc;
    const bool winning = params_.variant == RaceVariant::Con ? con_end : unc_end;
    const bool losing = params_.variant == RaceVariant::Con ? unc_end : con_end;
    if (winning)
        return Fitness(optimum_fitness_);
    if (losing)
        return Fitness(optimum_fitness_ - 1);
    return Fitness(1 + weight_ * static_cast<std::int64_t>(p.pos_con) +
                   static_cast<std::int64_t>(p.pos_unc));
}

bool RaceFn::is_global_optimum(const BitString& x) const {
    const Positions p = positions(x);
    if (!p.valid)
        return false;
    return params_.variant == RaceVariant::Con ? p.pos_con == params_.l_con
                                               : p.pos_unc == params_.l_unc;
}

PointClass RaceFn::classify(const BitString& x) const {
    const Positions p = positions(x);
    if (!p.valid)
        return PointClass::Regular;
    const bool con_end = p.pos_con == params_.l_con;
    const bool unc_end = p.pos_unc == params_.l_unc;
    const bool winning = params_.variant == RaceVariant::Con ? con_end : unc_end;
    const bool losing = params_.variant == RaceVariant::Con ? unc_end : con_end;
    if (winning)
        return PointClass::GlobalOptimum;
    if (losing)
        return PointClass::Trap;
    return PointClass::Regular;
}

BitString RaceFn::point_at(std::uint64_t pos_con, std::uint64_t peak_unc) const {
    if (pos_con > params_.l_con || peak_unc > params_.l_unc)
        throw std::invalid_argument("RaceFn::point_at: position outside rewarded range");
    const std::size_t h = params_.half_dim;
    const BitString& left = path_->point(pos_con);
    const BitString& right = path_->point(3 * peak_unc);
    BitString x(2 * h);
    for (std::size_t i = 0; i < h; ++i) {
        if (left.bit(i))
            x.set_bit(i, true);
        if (right.bit(i))
            x.set_bit(h + i, true);
    }
    return x;
}

std::string RaceFn::metadata() const {
    return name() + "(half_dim=" + std::to_string(params_.half_dim) +
           ", k=" + std::to_string(params_.k) + ", l_con=" + std::to_string(params_.l_con) +
           ", l_unc=" + std::to_string(params_.l_unc) + ", w=" + std::to_string(weight_) +
           ", path_length=" + std::to_string(path_->length()) + ")";
}

} // namespace malab
