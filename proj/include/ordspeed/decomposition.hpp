#ifndef ORDSPEED_DECOMPOSITION_HPP
#define ORDSPEED_DECOMPOSITION_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ordspeed/graph.hpp"

namespace ordspeed {

// Consecutive intervals [a_i, b_i] covering [n]; each block is asserted
// ell-homogeneous in the graph it was computed from.
struct BlockPartition {
    int ell = 1;
    std::vector<std::pair<int, int>> blocks;

    int block_count() const { return static_cast<int>(blocks.size()); }
};

// Nonincreasing orders of the homogeneous blocks; entries beyond the list
// are conceptually zero.
struct BlockSequence {
    std::vector<int> t;

    int at(int i) const {  // 1-based, zero-padded
        return (i >= 1 && i <= static_cast<int>(t.size())) ? t[static_cast<size_t>(i - 1)] : 0;
    }
};

struct IrreducibleDecomposition {
    std::vector<std::pair<int, int>> blocks;  // intervals of [n]
    std::vector<OrderedGraph> graphs;         // induced graph per block
    std::vector<int> sizes;                   // BS(G)
};

// b : [m] -> N u {infinity}; infinity is represented by kInfiniteBound.
inline constexpr uint64_t kInfiniteBound = UINT64_MAX;
struct BoundFunction {
    std::vector<uint64_t> b;

    int domain_size() const { return static_cast<int>(b.size()); }
    std::vector<int> infinite_set() const;   // I(b) = {i : b(i) = inf}, 1-based
    std::vector<int> above_one_set() const;  // J(b) = {i : b(i) > 1}
};

// x ~_ell y: identical neighbourhoods outside the radius-ell windows
// N_ell(x) u N_ell(y).
bool l_homogeneous_pair(const OrderedGraph& g, int x, int y, int ell);

// The unique partition into maximal 1-homogeneous blocks.
BlockPartition homogeneous_blocks(const OrderedGraph& g);

// Nonincreasing block orders of homogeneous_blocks(g).
BlockSequence block_sequence(const OrderedGraph& g);

// True iff every pair in the interval [lo, hi] is ~_ell.
bool is_l_homogeneous(const OrderedGraph& g, std::pair<int, int> interval, int ell);

// Greedy leftmost-maximal interval partition into ell-homogeneous blocks.
// The block count is minimum over all such interval partitions; the
// partition itself is the canonical greedy one (for ell >= 2 minimal
// partitions need not be unique).
BlockPartition min_l_homogeneous_partition(const OrderedGraph& g, int ell);

// Quotient G(B_1,...,B_m) over 1-homogeneous blocks: one vertex per block,
// loop iff the block induces a non-trivial clique.
LoopedOrderedGraph quotient(const OrderedGraph& g, const BlockPartition& p);

IrreducibleDecomposition irreducible_decomposition(const OrderedGraph& g);
bool is_irreducible(const OrderedGraph& g);

// Observation-5.1 deletion rule applied |G| - k times; input must be
// irreducible, output is irreducible of order k.
OrderedGraph shrink_irreducible(const OrderedGraph& g, int k);

// The k largest homogeneous blocks plus singletons, and the quotient over
// them. Requires t_k != t_{k+1} in the homogeneous block sequence.
std::pair<LoopedOrderedGraph, BlockPartition> k_type_graph(const OrderedGraph& g, int k);

// Observation-5.9 companion: H is constant on p's blocks; xy is an edge of H
// iff blocks B_i, B_j have at least one pair at distance >= p.ell and all
// such pairs are edges of G. G symmetric-difference H is then ell-empty.
OrderedGraph companion_graph(const OrderedGraph& g, const BlockPartition& p);

// First (i, j) in lexicographic scan order with fs[i] <= fs[j] pointwise,
// as 1-based indices; nullopt when all pairs are incomparable.
std::optional<std::pair<int, int>> find_comparable_pair(const std::vector<BoundFunction>& fs);

}  // namespace ordspeed

#endif
