#include "ordspeed/jfamily.hpp"

#include <algorithm>
#include <unordered_set>

#include "ordspeed/gen.hpp"

namespace ordspeed {

std::string j_tag_name(JTag tag) {
    switch (tag) {
        case JTag::J1: return "J1";
        case JTag::J2: return "J2";
        case JTag::J3: return "J3";
        case JTag::J4: return "J4";
        case JTag::L: return "L";
        case JTag::Q1: return "Q1";
        case JTag::Q2: return "Q2";
    }
    return "?";
}

std::optional<JClass> j_identify(const OrderedGraph& g) {
    int n = g.order();
    if (n < 1) return std::nullopt;
    struct Template {
        JTag tag;
        BasicKind kind;
        int min_order, fixed_order;  // fixed_order = 0 when the family scales
    };
    static const Template templates[] = {
        {JTag::J1, BasicKind::J1, 1, 0}, {JTag::J2, BasicKind::J2, 2, 0},
        {JTag::J3, BasicKind::J3, 1, 0}, {JTag::J4, BasicKind::J4, 1, 0},
        {JTag::L, BasicKind::L, 1, 0},   {JTag::Q1, BasicKind::Q1, 4, 4},
        {JTag::Q2, BasicKind::Q2, 4, 4},
    };
    for (const auto& t : templates) {
        if (n < t.min_order) continue;
        if (t.fixed_order != 0 && n != t.fixed_order) continue;
        if (g == gen_basic(t.kind, n)) return JClass{t.tag, n};
    }
    return std::nullopt;
}

bool j_ell_member(const OrderedGraph& g, int ell) {
    if (ell < 1) throw InputError("J_ell membership requires ell >= 1");
    auto cls = j_identify(g);
    if (!cls) return false;
    if (cls->order > ell) return false;
    if ((cls->tag == JTag::Q1 || cls->tag == JTag::Q2) && ell < 4) return false;
    return true;
}

P3P4Result p3p4_classify(const OrderedGraph& g) {
    if (!is_irreducible(g)) throw ContractViolation("p3p4_classify requires an irreducible graph");
    int n = g.order();
    for (int order : {3, 4}) {
        if (order > n) continue;
        // distinct irreducible induced subgraphs of this order
        std::unordered_set<std::string> seen;
        std::vector<OrderedGraph> distinct;
        std::vector<int> subset(static_cast<size_t>(order));
        for (int i = 0; i < order; ++i) subset[static_cast<size_t>(i)] = i + 1;
        while (true) {
            OrderedGraph sub = induced(g, subset);
            if (is_irreducible(sub) && seen.insert(canonical_key(sub)).second)
                distinct.push_back(std::move(sub));
            int i = order - 1;
            while (i >= 0 && subset[static_cast<size_t>(i)] == n - (order - 1 - i)) --i;
            if (i < 0) break;
            ++subset[static_cast<size_t>(i)];
            for (int j = i + 1; j < order; ++j)
                subset[static_cast<size_t>(j)] = subset[static_cast<size_t>(j - 1)] + 1;
        }
        if (distinct.size() >= 2) {
            std::sort(distinct.begin(), distinct.end(), [](const OrderedGraph& a, const OrderedGraph& b) {
                return canonical_key(a) < canonical_key(b);
            });
            return std::make_pair(distinct[0], distinct[1]);
        }
    }
    auto cls = j_identify(g);
    if (!cls)
        throw InternalError(
            "irreducible graph with at most one irreducible subgraph at orders 3 and 4 failed to "
            "identify (contradicts the classification)");
    return *cls;
}

WitnessSetReport min_witness_k(const OrderedGraph& g, int ell) {
    if (ell < 1) throw InputError("witness sets require ell >= 1");
    WitnessSetReport report;
    IrreducibleDecomposition dec = irreducible_decomposition(g);
    int m = static_cast<int>(dec.graphs.size());
    for (int i = 0; i < m; ++i)
        if (!j_ell_member(dec.graphs[static_cast<size_t>(i)], ell)) {
            report.offending_block = i + 1;
            return report;
        }
    if (m == 0) {
        report.min_k = 0;
        return report;
    }
    auto comparable = [&](const OrderedGraph& a, const OrderedGraph& b) {
        return contains(a, b) || contains(b, a);
    };
    // Pairwise comparability is hereditary under sub-runs, so the greedy
    // left-to-right grouping minimizes the run count.
    int run_start = 0;
    for (int i = 1; i <= m; ++i) {
        bool extend = i < m;
        if (extend)
            for (int j = run_start; j < i && extend; ++j)
                extend = comparable(dec.graphs[static_cast<size_t>(j)], dec.graphs[static_cast<size_t>(i)]);
        if (!extend) {
            report.runs.emplace_back(run_start + 1, i);
            run_start = i;
        }
    }
    report.min_k = static_cast<int>(report.runs.size());
    return report;
}

}  // namespace ordspeed
