#ifndef ORDSPEED_ENUMERATION_HPP
#define ORDSPEED_ENUMERATION_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <variant>
#include <vector>

#include "ordspeed/decomposition.hpp"
#include "ordspeed/graph.hpp"

namespace ordspeed {

using BigInt = boost::multiprecision::cpp_int;

// A hereditary property given by finitely many forbidden induced subgraphs.
struct ForbiddenSet {
    std::vector<OrderedGraph> graphs;  // empty list = the property of all graphs
};

// A hereditary property whose members are exactly the graphs all of whose
// irreducible blocks are order-isomorphic to an allowed graph.
struct BlockProfile {
    std::vector<OrderedGraph> allowed;  // each must be irreducible

    explicit BlockProfile(std::vector<OrderedGraph> graphs);
};

// All induced ordered subgraphs of a fixed finite host.
struct SubgraphClosure {
    OrderedGraph host;
};

using PropertySpec = std::variant<ForbiddenSet, BlockProfile, SubgraphClosure>;

struct EnumerationBudget {
    uint64_t max_nodes = 100'000'000;   // extension-tree / subset-iteration cap
    uint64_t max_set_keys = 10'000'000; // dedup-set size cap
};

// Exactly computed speeds |P_1|, ..., |P_N|; exact[i] is false when a budget
// tripped before level i+1 was fully counted.
struct SpeedSequence {
    std::vector<BigInt> counts;
    std::vector<bool> exact;

    bool all_exact() const;
};

bool member(const PropertySpec& spec, const OrderedGraph& g);

struct CountOptions {
    EnumerationBudget budget;
    int threads = 1;
    bool exact_dedup = false;  // store full canonical keys instead of 128-bit hashes
};

SpeedSequence count_speed(const PropertySpec& spec, int max_n, const CountOptions& opts = {});

struct MemberList {
    std::vector<OrderedGraph> graphs;  // canonical-key sorted
    bool exact = true;
};
MemberList list_members(const PropertySpec& spec, int n, const CountOptions& opts = {});

// Number of pairwise non-isomorphic induced ordered subgraphs of g on n
// vertices, S_n(g). Budget trips produce a flagged lower bound.
struct SubgraphCount {
    BigInt count;
    bool exact = true;
};
SubgraphCount count_subgraphs(const OrderedGraph& g, int n, const CountOptions& opts = {});

// Number of distinct members of P*(H, b) on n vertices: blow-ups of H by
// compositions 1 <= |B_i| <= b(i), deduplicated, keeping only compositions
// whose quotient reproduces H (a looped vertex needs a block of size >= 2).
BigInt blowup_count(const LoopedOrderedGraph& h, const BoundFunction& b, int n);

}  // namespace ordspeed

#endif
