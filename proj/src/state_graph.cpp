#include "malab/state_graph.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace malab {

BitString StateGraph::vertex_bits(std::uint64_t v) const {
    BitString x(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        if ((v >> i) & 1u)
            x.set_bit(i, true);
    return x;
}

std::uint64_t StateGraph::vertex_index(const BitString& x) { return x.low_word(); }

std::uint64_t StateGraph::out_degree(std::uint64_t v) const {
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < dim_; ++i)
        if (fitness_[v ^ (std::uint64_t{1} << i)] > fitness_[v])
            ++d;
    return d;
}

StateGraph build_state_graph(const FitnessFunction& f, std::size_t max_dim) {
    if (f.dim() > max_dim)
        throw std::invalid_argument("build_state_graph: dim " + std::to_string(f.dim()) +
                                    " exceeds the exhaustive limit " + std::to_string(max_dim));
    StateGraph g;
    g.dim_ = f.dim();
    g.fitness_.resize(g.vertex_count());
    BitString x(g.dim_);
    for (std::uint64_t v = 0; v < g.vertex_count(); ++v) {
        // Update only the bits that differ from v-1 instead of rebuilding x.
        if (v != 0) {
            const std::uint64_t changed = (v ^ (v - 1));
            for (std::size_t i = 0; i < g.dim_; ++i)
                if ((changed >> i) & 1u)
                    x.set_bit(i, (v >> i) & 1u);
        }
        g.fitness_[v] = f.evaluate(x).value;
    }
    return g;
}

std::uint64_t edge_count(const StateGraph& g) {
    std::uint64_t c = 0;
    for (std::uint64_t v = 0; v < g.vertex_count(); ++v)
        c += g.out_degree(v);
    return c;
}

std::vector<BitString> sinks(const StateGraph& g) {
    std::vector<BitString> out;
    for (std::uint64_t v = 0; v < g.vertex_count(); ++v)
        if (g.is_sink(v))
            out.push_back(g.vertex_bits(v));
    return out;
}

LongestPathResult longest_improving_path(const StateGraph& g) {
    const std::uint64_t nv = g.vertex_count();
    // Ascending fitness is a topological order: every edge strictly increases
    // fitness, so all predecessors of a vertex sort before it.
    std::vector<std::uint64_t> order(nv);
    std::iota(order.begin(), order.end(), std::uint64_t{0});
    std::sort(order.begin(), order.end(), [&](std::uint64_t a, std::uint64_t b) {
        return g.fitness(a) < g.fitness(b);
    });

    std::vector<std::uint64_t> dist(nv, 0);
    constexpr std::uint64_t kNone = ~std::uint64_t{0};
    std::vector<std::uint64_t> pred(nv, kNone);
    std::uint64_t best_v = 0;
    for (std::uint64_t v : order) {
        for (std::size_t i = 0; i < g.dim(); ++i) {
            const std::uint64_t u = v ^ (std::uint64_t{1} << i);
            if (g.fitness(u) < g.fitness(v) && dist[u] + 1 > dist[v]) {
                dist[v] = dist[u] + 1;
                pred[v] = u;
            }
        }
        if (dist[v] > dist[best_v])
            best_v = v;
    }

    LongestPathResult res;
    res.length = dist[best_v];
    std::vector<std::uint64_t> chain;
    for (std::uint64_t v = best_v; v != kNone; v = pred[v])
        chain.push_back(v);
    std::reverse(chain.begin(), chain.end());
    res.witness.reserve(chain.size());
    for (std::uint64_t v : chain)
        res.witness.push_back(g.vertex_bits(v));
    return res;
}

std::vector<double> pivot_trajectory_stats(const FitnessFunction& f, PivotRule pivot,
                                           RngStream& rng, int samples, std::size_t max_dim) {
    if (f.dim() > max_dim)
        throw std::invalid_argument("pivot_trajectory_stats: dim exceeds the exhaustive limit " +
                                    std::to_string(max_dim));
    const std::uint64_t nv = std::uint64_t{1} << f.dim();
    const std::uint64_t unbounded = nv; // longer than any strictly improving path
    const bool deterministic = pivot.kind != PivotKind::RandomImprovement &&
                               !(pivot.kind == PivotKind::FirstImprovement &&
                                 pivot.order == ScanOrder::Shuffled);
    const int reps = deterministic ? 1 : samples;

    std::vector<double> iters(nv, 0.0);
    std::uint64_t sink_evals = 0;
    for (std::uint64_t v = 0; v < nv; ++v) {
        BitString start(f.dim());
        for (std::size_t i = 0; i < f.dim(); ++i)
            if ((v >> i) & 1u)
                start.set_bit(i, true);
        double total = 0;
        for (int r = 0; r < reps; ++r) {
            const LsOutcome o = local_search(start, f, unbounded, pivot, rng, sink_evals);
            total += static_cast<double>(o.iterations_used);
        }
        iters[v] = total / reps;
    }
    return iters;
}

void write_dot(const StateGraph& g, std::ostream& os) {
    if (g.dim() > 8)
        throw std::invalid_argument("write_dot: dim must be <= 8");
    os << "digraph state_graph {\n";
    for (std::uint64_t v = 0; v < g.vertex_count(); ++v) {
        os << "  v" << v << " [label=\"" << g.vertex_bits(v).str() << ":" << g.fitness(v)
           << "\"];\n";
    }
    for (std::uint64_t v = 0; v < g.vertex_count(); ++v)
        for (std::size_t i = 0; i < g.dim(); ++i) {
            const std::uint64_t u = v ^ (std::uint64_t{1} << i);
            if (g.fitness(u) > g.fitness(v))
                os << "  v" << v << " -> v" << u << ";\n";
        }
    os << "}\n";
}

} // namespace malab
