#ifndef ORDSPEED_JFAMILY_HPP
#define ORDSPEED_JFAMILY_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ordspeed/decomposition.hpp"
#include "ordspeed/graph.hpp"

namespace ordspeed {

enum class JTag { J1, J2, J3, J4, L, Q1, Q2 };

std::string j_tag_name(JTag tag);

struct JClass {
    JTag tag;
    int order;
};

// Exact order-isomorphism match against the seven templates. Small-order
// collisions (K_2 matches several definitions) resolve by the fixed
// precedence J1 > J2 > J3 > J4 > L > Q1 > Q2.
std::optional<JClass> j_identify(const OrderedGraph& g);

// Membership in J_ell: identified, order <= ell, and Q1/Q2 only for ell >= 4.
bool j_ell_member(const OrderedGraph& g, int ell);

// Lemma 5.5 classifier for an irreducible graph: either its J-class, or two
// distinct irreducible induced subgraphs of equal order (3 or 4), returned in
// canonical-key order.
using P3P4Result = std::variant<JClass, std::pair<OrderedGraph, OrderedGraph>>;
P3P4Result p3p4_classify(const OrderedGraph& g);

// J(k, ell) membership report: the irreducible blocks grouped greedily into
// runs of pairwise <=-comparable members of J_ell. min_k is the minimal run
// count; absent when some block is outside J_ell.
struct WitnessSetReport {
    std::optional<int> min_k;
    std::vector<std::pair<int, int>> runs;   // 1-based block-index ranges
    std::optional<int> offending_block;      // 1-based, set when min_k is absent
};

WitnessSetReport min_witness_k(const OrderedGraph& g, int ell);

}  // namespace ordspeed

#endif
