#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fftile/error.hpp"

namespace fftile {

/// Undirected graph on vertices 0..n-1 with bitset adjacency rows.
class BitGraph {
public:
    explicit BitGraph(int n);

    int size() const noexcept { return n_; }
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    int degree(int v) const;

    const std::vector<std::uint64_t>& row(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int words() const noexcept { return words_; }

private:
    int n_;
    int words_;
    std::vector<std::vector<std::uint64_t>> adj_;
};

struct CliqueSearchStats {
    std::int64_t nodes = 0;
    std::int64_t budget = 0;
};

/// Exact maximum clique by branch and bound with a greedy colouring
/// bound. Deterministic: vertices are expanded in a fixed order, so the
/// reported clique is reproducible. Throws BudgetExceeded when the
/// node budget runs out.
std::vector<int> max_clique(const BitGraph& g, std::int64_t node_budget,
                            CliqueSearchStats* stats = nullptr);

/// Lexicographically least clique of size exactly k (as a sorted vertex
/// list), or nullopt if none exists. Depth-first over increasing
/// vertices, so the first complete branch is the answer.
std::optional<std::vector<int>> lex_min_clique(const BitGraph& g, int k,
                                               std::int64_t node_budget,
                                               CliqueSearchStats* stats = nullptr);

}  // namespace fftile
