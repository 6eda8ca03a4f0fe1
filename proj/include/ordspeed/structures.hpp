#ifndef ORDSPEED_STRUCTURES_HPP
#define ORDSPEED_STRUCTURES_HPP

#include <optional>
#include <variant>
#include <vector>

#include "ordspeed/decomposition.hpp"
#include "ordspeed/graph.hpp"

namespace ordspeed {

// Alternating structures. Each records exactly the vertices the definitions
// quantify over; z-vertices of Type 3 are implied by the index gaps.

struct Type1Witness {
    bool y_left = true;          // side: y < xs.front() (left) or y > xs.back()
    bool starts_with_edge = true;  // adjacency of y to xs[0]
    int y = 0;
    std::vector<int> xs;  // strictly increasing, |xs| = 2k
};

struct Type2aWitness {
    std::vector<int> xs, ys;  // xs increasing, ys increasing, all xs < all ys
};

struct Type2bWitness {
    std::vector<int> xs, ys;  // xs increasing, ys decreasing, all xs < all ys
};

struct Type3Witness {
    int ell = 1;
    std::vector<int> xs, ys;  // x_i < y_i, y_i - x_i >= ell, y_i < x_{i+1}
};

using StructureWitness = std::variant<Type1Witness, Type2aWitness, Type2bWitness, Type3Witness>;

// k of the structure a witness realizes (|xs| / 2).
int witness_size(const StructureWitness& w);

struct DetectorResult {
    int k = 0;
    std::optional<StructureWitness> witness;  // absent iff k = 0
};

// Largest k such that a k-structure of Type 1 occurs; per y and side this is
// half the number of runs of the adjacency pattern.
DetectorResult max_type1_k(const OrderedGraph& g);

// Largest k for Type 2(a) or 2(b): per split point, DP over pairs
// (x <= p < y) maximizing alternating chains.
DetectorResult max_type2_k(const OrderedGraph& g);

// Largest k for Type 3 with gap parameter ell.
DetectorResult max_type3_k(const OrderedGraph& g, int ell);

struct MonotoneResult {
    std::vector<int> increasing_indices;  // 0-based indices into the input
    std::vector<int> decreasing_indices;
};

// Longest strictly increasing and strictly decreasing subsequences of a
// sequence of distinct integers, with one realizing index set each.
MonotoneResult longest_monotone(const std::vector<int>& seq);

// Checks every ordering, gap and alternation clause of the witness variant.
bool validate_witness(const OrderedGraph& g, const StructureWitness& w);

// Lemma 2.1 outcome: exactly one of partition / witness is set. complemented
// records that the procedure ran on the complement of the input (the vertex
// partition is the same either way; a witness validates against the
// complement).
struct Certificate {
    std::optional<BlockPartition> partition;
    std::optional<StructureWitness> witness;
    bool complemented = false;
};

struct CertifyOptions {
    // Return the greedy partition immediately when it meets the 256k^4
    // bound; the constructive proof procedure runs only otherwise.
    bool greedy_first = true;
};

// Constructive partition-or-witness certificate: either a partition into at
// most 256k^4 ell-homogeneous blocks, or a validated k-structure of Type 1/2
// or (k,ell)-structure of Type 3.
Certificate certify_partition(const OrderedGraph& g, int k, int ell, CertifyOptions opts = {});

}  // namespace ordspeed

#endif
