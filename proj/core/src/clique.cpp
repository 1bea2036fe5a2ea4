#include "fftile/clique.hpp"

#include <algorithm>
#include <bit>

namespace fftile {

namespace {

using Word = std::uint64_t;
using Bits = std::vector<Word>;

int popcount(const Bits& b) {
    int c = 0;
    for (Word w : b) c += std::popcount(w);
    return c;
}

bool test_bit(const Bits& b, int i) {
    return (b[static_cast<std::size_t>(i / 64)] >> (i % 64)) & 1u;
}

void clear_bit(Bits& b, int i) { b[static_cast<std::size_t>(i / 64)] &= ~(Word(1) << (i % 64)); }

void set_bit(Bits& b, int i) { b[static_cast<std::size_t>(i / 64)] |= Word(1) << (i % 64); }

int lowest_bit(const Bits& b) {
    for (std::size_t w = 0; w < b.size(); ++w)
        if (b[w]) return static_cast<int>(w * 64) + std::countr_zero(b[w]);
    return -1;
}

Bits and_bits(const Bits& a, const Bits& b) {
    Bits out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] & b[i];
    return out;
}

struct Budget {
    std::int64_t left;
    CliqueSearchStats* stats;
    void tick() {
        if (stats) ++stats->nodes;
        if (--left < 0)
            throw Error(ErrorKind::BudgetExceeded, "clique search exceeded its node budget");
    }
};

/// Greedy colouring of the candidate set; emits vertices ordered by
/// colour class and their colour numbers (1-based upper bounds).
void colour_order(const BitGraph& g, const Bits& candidates, std::vector<int>& order,
                  std::vector<int>& bound) {
    order.clear();
    bound.clear();
    Bits rest = candidates;
    int colour = 0;
    while (true) {
        int seed = lowest_bit(rest);
        if (seed < 0) break;
        ++colour;
        Bits cls = rest;
        while (true) {
            int v = lowest_bit(cls);
            if (v < 0) break;
            clear_bit(cls, v);
            clear_bit(rest, v);
            order.push_back(v);
            bound.push_back(colour);
            for (int w = 0; w < g.words(); ++w) cls[static_cast<std::size_t>(w)] &= ~g.row(v)[static_cast<std::size_t>(w)];
        }
    }
}

void expand_max(const BitGraph& g, Bits& candidates, std::vector<int>& current,
                std::vector<int>& best, Budget& budget) {
    budget.tick();
    std::vector<int> order;
    std::vector<int> bound;
    colour_order(g, candidates, order, bound);
    for (std::size_t i = order.size(); i-- > 0;) {
        int v = order[i];
        if (static_cast<int>(current.size()) + bound[i] <= static_cast<int>(best.size())) return;
        current.push_back(v);
        Bits next = and_bits(candidates, g.row(v));
        if (popcount(next) == 0) {
            if (current.size() > best.size()) best = current;
        } else {
            expand_max(g, next, current, best, budget);
        }
        current.pop_back();
        clear_bit(candidates, v);
    }
}

bool expand_lex(const BitGraph& g, const Bits& candidates, std::vector<int>& current, int k,
                std::vector<int>& out, Budget& budget) {
    budget.tick();
    if (static_cast<int>(current.size()) == k) {
        out = current;
        return true;
    }
    std::vector<int> order;
    std::vector<int> bound;
    colour_order(g, candidates, order, bound);
    int colours = order.empty() ? 0 : bound.back();
    if (static_cast<int>(current.size()) + colours < k) return false;
    Bits rest = candidates;
    while (true) {
        int v = lowest_bit(rest);
        if (v < 0) return false;
        clear_bit(rest, v);
        if (static_cast<int>(current.size()) + 1 + popcount(rest) < k) return false;
        Bits next = and_bits(rest, g.row(v));
        current.push_back(v);
        if (static_cast<int>(current.size()) + popcount(next) >= k &&
            expand_lex(g, next, current, k, out, budget))
            return true;
        current.pop_back();
    }
}

}  // namespace

BitGraph::BitGraph(int n)
    : n_(n), words_((n + 63) / 64),
      adj_(static_cast<std::size_t>(n), Bits(static_cast<std::size_t>((n + 63) / 64), 0)) {}

void BitGraph::add_edge(int u, int v) {
    if (u == v) throw Error(ErrorKind::BadIndex, "no self loops");
    set_bit(adj_[static_cast<std::size_t>(u)], v);
    set_bit(adj_[static_cast<std::size_t>(v)], u);
}

bool BitGraph::has_edge(int u, int v) const { return test_bit(adj_[static_cast<std::size_t>(u)], v); }

int BitGraph::degree(int v) const { return popcount(adj_[static_cast<std::size_t>(v)]); }

std::vector<int> max_clique(const BitGraph& g, std::int64_t node_budget,
                            CliqueSearchStats* stats) {
    if (stats) *stats = {0, node_budget};
    if (g.size() == 0) return {};
    Budget budget{node_budget, stats};
    Bits all(static_cast<std::size_t>(g.words()), 0);
    for (int v = 0; v < g.size(); ++v) set_bit(all, v);
    std::vector<int> current;
    std::vector<int> best;
    expand_max(g, all, current, best, budget);
    std::sort(best.begin(), best.end());
    return best;
}

std::optional<std::vector<int>> lex_min_clique(const BitGraph& g, int k,
                                               std::int64_t node_budget,
                                               CliqueSearchStats* stats) {
    if (stats) *stats = {0, node_budget};
    if (k == 0) return std::vector<int>{};
    if (g.size() == 0) return std::nullopt;
    Budget budget{node_budget, stats};
    Bits all(static_cast<std::size_t>(g.words()), 0);
    for (int v = 0; v < g.size(); ++v) set_bit(all, v);
    std::vector<int> current;
    std::vector<int> out;
    if (expand_lex(g, all, current, k, out, budget)) return out;
    return std::nullopt;
}

}  // namespace fftile
