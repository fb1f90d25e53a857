#pragma once

#include "malab/fitness_function.hpp"
#include "malab/local_search.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace malab {

/// Improving-move graph over the full search space: vertex v has an edge to
/// each Hamming-1 neighbor of strictly larger fitness. The graph is acyclic
/// by construction; a sink (out-degree 0) is exactly a Hamming-1 local
/// optimum. Vertices are the integers 0..2^dim-1 with vertex bit i equal to
/// bit string index i; edges are recomputed from the fitness table on demand.
class StateGraph {
  public:
    std::size_t dim() const { return dim_; }
    std::uint64_t vertex_count() const { return std::uint64_t{1} << dim_; }
    std::int64_t fitness(std::uint64_t v) const { return fitness_[v]; }

    BitString vertex_bits(std::uint64_t v) const;
    static std::uint64_t vertex_index(const BitString& x);

    bool edge(std::uint64_t from, std::uint64_t to) const {
        return fitness_[to] > fitness_[from];
    }
    std::uint64_t out_degree(std::uint64_t v) const;
    bool is_sink(std::uint64_t v) const { return out_degree(v) == 0; }

  private:
    friend StateGraph build_state_graph(const FitnessFunction&, std::size_t);
    std::size_t dim_ = 0;
    std::vector<std::int64_t> fitness_;
};

/// Evaluates all 2^dim points. Throws std::invalid_argument when f.dim()
/// exceeds `max_dim` (the exhaustive limit), naming the limit.
StateGraph build_state_graph(const FitnessFunction& f, std::size_t max_dim = 20);

/// Total number of improving ordered pairs.
std::uint64_t edge_count(const StateGraph& g);

/// All local optima, as bit strings in vertex order.
std::vector<BitString> sinks(const StateGraph& g);

struct LongestPathResult {
    std::uint64_t length = 0;        // number of edges
    std::vector<BitString> witness;  // vertex sequence realizing it
};

/// Maximum-length directed path via dynamic programming in fitness order.
LongestPathResult longest_improving_path(const StateGraph& g);

/// Local-search iterations to convergence from every start, with an
/// effectively unbounded depth (2^dim). Deterministic pivots yield exact
/// counts; RandomImprovement is averaged over `samples` runs per start.
std::vector<double> pivot_trajectory_stats(const FitnessFunction& f, PivotRule pivot,
                                           RngStream& rng, int samples = 1,
                                           std::size_t max_dim = 20);

/// GraphViz dump, vertex label "bits:fitness"; requires dim <= 8.
void write_dot(const StateGraph& g, std::ostream& os);

} // namespace malab
