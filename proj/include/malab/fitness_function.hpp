#pragma once

#include "malab/bitstring.hpp"
#include "malab/fitness.hpp"
#include "malab/long_k_path.hpp"

#include <memory>
#include <string>

namespace malab {

enum class PointClass { Regular, GlobalOptimum, Trap };

/// A pseudo-Boolean objective to maximize. evaluate() is deterministic and
/// total over {0,1}^dim; is_global_optimum(x) implies evaluate(x) equals the
/// unique maximum fitness value.
class FitnessFunction {
  public:
    virtual ~FitnessFunction() = default;

    virtual std::size_t dim() const = 0;
    virtual Fitness evaluate(const BitString& x) const = 0;
    virtual bool is_global_optimum(const BitString& x) const = 0;

    virtual PointClass classify(const BitString& x) const {
        return is_global_optimum(x) ? PointClass::GlobalOptimum : PointClass::Regular;
    }

    /// Short identifier used in result tables ("onemax", "longpath", ...).
    virtual std::string name() const = 0;

    /// Human-readable construction parameters.
    virtual std::string metadata() const = 0;
};

/// Count of one-bits; the all-ones string is the unique optimum.
class OneMax final : public FitnessFunction {
  public:
    explicit OneMax(std::size_t n) : n_(n) {}

    std::size_t dim() const override { return n_; }
    Fitness evaluate(const BitString& x) const override {
        return Fitness(static_cast<std::int64_t>(x.count_ones()));
    }
    bool is_global_optimum(const BitString& x) const override {
        return x.count_ones() == n_;
    }
    std::string name() const override { return "onemax"; }
    std::string metadata() const override { return "onemax(n=" + std::to_string(n_) + ")"; }

  private:
    std::size_t n_;
};

/// Long-path function: a point at path position p scores dim + 1 + p, every
/// off-path point scores dim minus its number of ones, which guides search
/// toward the all-zero path start. The last path point is the unique optimum.
class LongPathFn final : public FitnessFunction {
  public:
    LongPathFn(std::size_t dim, unsigned k = 2) : path_(LongKPath::build(dim, k)) {}
    explicit LongPathFn(std::shared_ptr<const LongKPath> path) : path_(std::move(path)) {}

    std::size_t dim() const override { return path_->dim(); }
    Fitness evaluate(const BitString& x) const override;
    bool is_global_optimum(const BitString& x) const override {
        return x == path_->point(path_->length() - 1);
    }
    std::string name() const override { return "longpath"; }
    std::string metadata() const override;

    const LongKPath& path() const { return *path_; }

  private:
    std::shared_ptr<const LongKPath> path_;
};

} // namespace malab
