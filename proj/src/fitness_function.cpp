#include "malab/fitness_function.hpp"

namespace malab {

Fitness LongPathFn::evaluate(const BitString& x) const {
    if (auto pos = path_->position_of(x))
        return Fitness(static_cast<std::int64_t>(path_->dim()) + 1 +
                       static_cast<std::int64_t>(*pos));
    return Fitness(static_cast<std::int64_t>(path_->dim()) -
                   static_cast<std::int64_t>(x.count_ones()));
}

std::string LongPathFn::metadata() const {
    return "longpath(dim=" + std::to_string(path_->dim()) +
           ", k=" + std::to_string(path_->k()) +
           ", length=" + std::to_string(path_->length()) + ")";
}

} // namespace malab
