#include "ordspeed/decomposition.hpp"

#include <algorithm>

namespace ordspeed {

std::vector<int> BoundFunction::infinite_set() const {
    std::vector<int> out;
    for (int i = 1; i <= domain_size(); ++i)
        if (b[static_cast<size_t>(i - 1)] == kInfiniteBound) out.push_back(i);
    return out;
}

std::vector<int> BoundFunction::above_one_set() const {
    std::vector<int> out;
    for (int i = 1; i <= domain_size(); ++i)
        if (b[static_cast<size_t>(i - 1)] > 1) out.push_back(i);
    return out;
}

bool l_homogeneous_pair(const OrderedGraph& g, int x, int y, int ell) {
    if (ell < 1) throw InputError("ell must be >= 1");
    int n = g.order();
    // Window N_ell(x) u N_ell(y) = [x-ell+1, x+ell-1] u [y-ell+1, y+ell-1].
    auto in_window = [&](int v) {
        return (v >= x - ell + 1 && v <= x + ell - 1) || (v >= y - ell + 1 && v <= y + ell - 1);
    };
    for (int v = 1; v <= n; ++v) {
        if (in_window(v)) continue;
        if (g.edge(x, v) != g.edge(y, v)) return false;
    }
    return true;
}

BlockPartition homogeneous_blocks(const OrderedGraph& g) {
    // ~_1 is an equivalence relation, so consecutive-pair scanning finds the
    // unique maximal blocks.
    BlockPartition p;
    p.ell = 1;
    int n = g.order();
    int start = 1;
    for (int x = 1; x < n; ++x) {
        if (!l_homogeneous_pair(g, x, x + 1, 1)) {
            p.blocks.emplace_back(start, x);
            start = x + 1;
        }
    }
    if (n >= 1) p.blocks.emplace_back(start, n);
    return p;
}

BlockSequence block_sequence(const OrderedGraph& g) {
    BlockSequence s;
    for (auto [a, b] : homogeneous_blocks(g).blocks) s.t.push_back(b - a + 1);
    std::sort(s.t.begin(), s.t.end(), std::greater<int>());
    return s;
}

bool is_l_homogeneous(const OrderedGraph& g, std::pair<int, int> interval, int ell) {
    auto [lo, hi] = interval;
    if (lo < 1 || hi > g.order() || lo > hi) throw InputError("interval out of range");
    for (int x = lo; x <= hi; ++x)
        for (int y = x + 1; y <= hi; ++y)
            if (!l_homogeneous_pair(g, x, y, ell)) return false;
    return true;
}

BlockPartition min_l_homogeneous_partition(const OrderedGraph& g, int ell) {
    if (ell < 1) throw InputError("ell must be >= 1");
    BlockPartition p;
    p.ell = ell;
    int n = g.order();
    int start = 1;
    while (start <= n) {
        int end = start;
        while (end < n) {
            // Try to absorb end+1: it must be ~_ell with every block member.
            bool ok = true;
            for (int x = start; x <= end && ok; ++x) ok = l_homogeneous_pair(g, x, end + 1, ell);
            if (!ok) break;
            ++end;
        }
        p.blocks.emplace_back(start, end);
        start = end + 1;
    }
    return p;
}

namespace {

bool induces_nontrivial_clique(const OrderedGraph& g, int a, int b) {
    if (a >= b) return false;
    for (int u = a; u <= b; ++u)
        for (int v = u + 1; v <= b; ++v)
            if (!g.edge(u, v)) return false;
    return true;
}

}  // namespace

LoopedOrderedGraph quotient(const OrderedGraph& g, const BlockPartition& p) {
    int m = p.block_count();
    int covered = 0;
    for (auto [a, b] : p.blocks) {
        if (a != covered + 1 || b < a) throw InputError("partition blocks must be consecutive intervals");
        covered = b;
        if (!is_l_homogeneous(g, {a, b}, 1))
            throw ContractViolation("quotient requires 1-homogeneous blocks; block [" +
                                    std::to_string(a) + "," + std::to_string(b) + "] is not");
    }
    if (covered != g.order()) throw InputError("partition must cover [n]");

    LoopedOrderedGraph h(m);
    for (int i = 1; i <= m; ++i) {
        auto [ai, bi] = p.blocks[static_cast<size_t>(i - 1)];
        if (induces_nontrivial_clique(g, ai, bi)) h.set_edge(i, i);
        for (int j = i + 1; j <= m; ++j) {
            auto [aj, bj] = p.blocks[static_cast<size_t>(j - 1)];
            // 1-homogeneity makes any cross pair representative.
            if (g.edge(ai, aj)) h.set_edge(i, j);
        }
    }
    return h;
}

IrreducibleDecomposition irreducible_decomposition(const OrderedGraph& g) {
    // Boundary p|p+1 is a cut iff no edge crosses it; maximal cut-free runs
    // are exactly the irreducible blocks.
    IrreducibleDecomposition d;
    int n = g.order();
    if (n == 0) return d;
    std::vector<bool> crossed(static_cast<size_t>(n), false);  // crossed[p-1]: some edge i<=p<j
    for (int u = 1; u <= n; ++u)
        for (int v : g.neighbors(u))
            if (u < v)
                for (int p = u; p < v; ++p) crossed[static_cast<size_t>(p - 1)] = true;
    int start = 1;
    for (int p = 1; p <= n; ++p) {
        if (p == n || !crossed[static_cast<size_t>(p - 1)]) {
            d.blocks.emplace_back(start, p);
            start = p + 1;
        }
    }
    for (auto [a, b] : d.blocks) {
        std::vector<int> verts;
        for (int v = a; v <= b; ++v) verts.push_back(v);
        d.graphs.push_back(induced(g, verts));
        d.sizes.push_back(b - a + 1);
    }
    return d;
}

bool is_irreducible(const OrderedGraph& g) {
    return irreducible_decomposition(g).blocks.size() == 1;
}

OrderedGraph shrink_irreducible(const OrderedGraph& g, int k) {
    if (!is_irreducible(g)) throw ContractViolation("shrink_irreducible requires an irreducible graph");
    if (k < 1 || k > g.order()) throw InputError("target order out of range");
    OrderedGraph cur = g;
    while (cur.order() > k) {
        // u = max Gamma(1), v = max Gamma(2); delete 2 if u >= v or v absent,
        // else delete 1.
        auto n1 = cur.neighbors(1);
        auto n2 = cur.neighbors(2);
        int u = n1.empty() ? 0 : n1.back();
        int v = n2.empty() ? 0 : n2.back();
        int remove = (n2.empty() || u >= v) ? 2 : 1;
        std::vector<int> keep;
        for (int x = 1; x <= cur.order(); ++x)
            if (x != remove) keep.push_back(x);
        cur = induced(cur, keep);
    }
    return cur;
}

std::pair<LoopedOrderedGraph, BlockPartition> k_type_graph(const OrderedGraph& g, int k) {
    if (k < 1) throw InputError("k must be >= 1");
    BlockSequence t = block_sequence(g);
    if (t.at(k) == t.at(k + 1))
        throw ContractViolation("k-type graph undefined: t_" + std::to_string(k) + " = t_" +
                                std::to_string(k + 1) + " = " + std::to_string(t.at(k)));
    int threshold = t.at(k);
    // Blocks of order >= threshold are exactly the k largest (sizes are
    // unique as a multiset cut at t_k > t_{k+1}).
    BlockPartition all = homogeneous_blocks(g);
    BlockPartition p;
    p.ell = 1;
    for (auto [a, b] : all.blocks) {
        if (b - a + 1 >= threshold) {
            p.blocks.emplace_back(a, b);
        } else {
            for (int v = a; v <= b; ++v) p.blocks.emplace_back(v, v);
        }
    }
    return {quotient(g, p), p};
}

OrderedGraph companion_graph(const OrderedGraph& g, const BlockPartition& p) {
    int n = g.order();
    int ell = p.ell;
    int covered = 0;
    for (auto [a, b] : p.blocks) {
        if (a != covered + 1 || b < a) throw InputError("partition blocks must be consecutive intervals");
        covered = b;
        if (!is_l_homogeneous(g, {a, b}, ell))
            throw ContractViolation("companion_graph requires ell-homogeneous blocks; block [" +
                                    std::to_string(a) + "," + std::to_string(b) + "] is not");
    }
    if (covered != n) throw InputError("partition must cover [n]");

    int m = p.block_count();
    // h_bit per unordered block pair (i <= j): some pair at distance >= ell
    // exists and all such pairs are edges of G.
    std::vector<std::vector<bool>> h_bit(static_cast<size_t>(m), std::vector<bool>(static_cast<size_t>(m), false));
    for (int i = 1; i <= m; ++i)
        for (int j = i; j <= m; ++j) {
            auto [ai, bi] = p.blocks[static_cast<size_t>(i - 1)];
            auto [aj, bj] = p.blocks[static_cast<size_t>(j - 1)];
            bool any = false, all = true;
            for (int u = ai; u <= bi; ++u)
                for (int v = (i == j ? u + 1 : aj); v <= bj; ++v) {
                    if (v - u < ell) continue;
                    any = true;
                    if (!g.edge(u, v)) all = false;
                }
            h_bit[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = any && all;
        }

    std::vector<int> block_of(static_cast<size_t>(n + 1), 0);
    for (int i = 1; i <= m; ++i)
        for (int v = p.blocks[static_cast<size_t>(i - 1)].first; v <= p.blocks[static_cast<size_t>(i - 1)].second; ++v)
            block_of[static_cast<size_t>(v)] = i;

    OrderedGraph::Builder b(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) {
            int i = block_of[static_cast<size_t>(u)], j = block_of[static_cast<size_t>(v)];
            if (h_bit[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)]) b.add_edge(u, v);
        }
    return std::move(b).build();
}

std::optional<std::pair<int, int>> find_comparable_pair(const std::vector<BoundFunction>& fs) {
    int count = static_cast<int>(fs.size());
    for (int i = 1; i < count; ++i)
        if (fs[static_cast<size_t>(i)].domain_size() != fs[0].domain_size())
            throw InputError("bound functions must share a domain size");
    for (int i = 0; i < count; ++i)
        for (int j = 0; j < count; ++j) {
            if (i == j) continue;
            bool le = true;
            for (int x = 0; x < fs[static_cast<size_t>(i)].domain_size() && le; ++x)
                le = fs[static_cast<size_t>(i)].b[static_cast<size_t>(x)] <=
                     fs[static_cast<size_t>(j)].b[static_cast<size_t>(x)];
            if (le) return std::make_pair(i + 1, j + 1);
        }
    return std::nullopt;
}

}  // namespace ordspeed
