#ifndef ORDSPEED_GRAPH_HPP
#define ORDSPEED_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ordspeed/errors.hpp"

namespace ordspeed {

// Hard cap on the number of vertices, as a multiple of the 64-bit word size.
// Everything below it uses storage proportional to the actual order.
#ifndef ORDSPEED_MAX_VERTICES
#define ORDSPEED_MAX_VERTICES 256
#endif
inline constexpr int kMaxVertices = ORDSPEED_MAX_VERTICES;
static_assert(kMaxVertices % 64 == 0, "vertex cap must be a word multiple");

using Edge = std::pair<int, int>;

// An ordered graph: vertex set [n] = {1,...,n} carrying the integer order,
// with a symmetric irreflexive adjacency relation stored as per-vertex bit
// rows. Immutable after construction; all operations below are pure.
class OrderedGraph {
public:
    OrderedGraph() = default;
    explicit OrderedGraph(int n);  // edgeless graph on [n]

    int order() const { return n_; }

    // u, v in [1, n]. edge(u, u) is false by convention.
    bool edge(int u, int v) const {
        return (bits_[static_cast<size_t>(u - 1) * words_ + ((v - 1) >> 6)] >>
                ((v - 1) & 63)) & 1u;
    }

    // Neighbours of x, increasing.
    std::vector<int> neighbors(int x) const;
    int degree(int x) const;
    std::vector<Edge> edges() const;  // u < v, lexicographically sorted
    size_t edge_count() const;

    bool operator==(const OrderedGraph& other) const {
        return n_ == other.n_ && bits_ == other.bits_;
    }

    // Raw row access for hot loops: word w of the row of vertex u.
    uint64_t row_word(int u, int w) const {
        return bits_[static_cast<size_t>(u - 1) * words_ + w];
    }
    int words_per_row() const { return words_; }

    class Builder;

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<uint64_t> bits_;
};

// Mutable edge-set assembly; produces an immutable OrderedGraph.
class OrderedGraph::Builder {
public:
    explicit Builder(int n);
    // Both endpoints in [1, n] and distinct; duplicates collapse.
    void add_edge(int u, int v);
    OrderedGraph build() &&;

private:
    OrderedGraph g_;
};

// An ordered graph in which loops are permitted (quotients of block
// partitions, §4-style). Loops are stored explicitly.
class LoopedOrderedGraph {
public:
    LoopedOrderedGraph() = default;
    explicit LoopedOrderedGraph(int n);

    int order() const { return n_; }
    bool edge(int u, int v) const;  // u == v queries the loop
    bool loop(int u) const { return edge(u, u); }
    void set_edge(int u, int v);
    std::vector<Edge> edges() const;  // u < v
    std::vector<int> loops() const;

    bool operator==(const LoopedOrderedGraph& other) const = default;

private:
    int n_ = 0;
    std::vector<std::vector<bool>> adj_;
};

struct Permutation {
    std::vector<int> values;  // values[i-1] = pi(i), a bijection [n] -> [n]

    explicit Permutation(std::vector<int> v);
    int size() const { return static_cast<int>(values.size()); }
};

// ---- graph-core operations -------------------------------------------------

OrderedGraph make_graph(int n, const std::vector<Edge>& edges);
OrderedGraph complement(const OrderedGraph& g);

// Order-preserving relabeling of S (strictly increasing, subset of [n]) to
// [|S|].
OrderedGraph induced(const OrderedGraph& g, const std::vector<int>& s);

// True iff h is an induced ordered subgraph of g (h <= g): some strictly
// increasing vertex map preserving both edges and non-edges.
bool contains(const OrderedGraph& h, const OrderedGraph& g);

// Concatenation G_1 + ... + G_m with no edges between parts.
OrderedGraph sum(const std::vector<OrderedGraph>& parts);
OrderedGraph power(const OrderedGraph& g, int k);

OrderedGraph symmetric_difference(const OrderedGraph& g, const OrderedGraph& h);

// Injective byte encoding of (n, adjacency): two graphs share a key iff they
// are order-isomorphic. Format: 4-byte big-endian n, then the upper-triangle
// adjacency bits in row-major order, packed MSB-first.
std::string canonical_key(const OrderedGraph& g);

// 128-bit hash of canonical_key for dedup sets; collisions are possible in
// principle but astronomically unlikely.
struct Key128 {
    uint64_t hi = 0, lo = 0;
    bool operator==(const Key128&) const = default;
};
struct Key128Hash {
    size_t operator()(const Key128& k) const {
        return static_cast<size_t>(k.hi ^ (k.lo * 0x9e3779b97f4a7c15ull));
    }
};
Key128 canonical_key128(const OrderedGraph& g);

}  // namespace ordspeed

#endif
