#include "ordspeed/gen.hpp"

#include <array>
#include <map>

namespace ordspeed {

BasicKind parse_basic_kind(const std::string& name) {
    static const std::map<std::string, BasicKind> table = {
        {"K", BasicKind::K},   {"E", BasicKind::E},   {"J1", BasicKind::J1}, {"J2", BasicKind::J2},
        {"J3", BasicKind::J3}, {"J4", BasicKind::J4}, {"L", BasicKind::L},   {"Q1", BasicKind::Q1},
        {"Q2", BasicKind::Q2}, {"H1", BasicKind::H1}, {"H2", BasicKind::H2}};
    auto it = table.find(name);
    if (it == table.end()) throw InputError("unknown graph kind '" + name + "'");
    return it->second;
}

std::string basic_kind_name(BasicKind kind) {
    switch (kind) {
        case BasicKind::K: return "K";
        case BasicKind::E: return "E";
        case BasicKind::J1: return "J1";
        case BasicKind::J2: return "J2";
        case BasicKind::J3: return "J3";
        case BasicKind::J4: return "J4";
        case BasicKind::L: return "L";
        case BasicKind::Q1: return "Q1";
        case BasicKind::Q2: return "Q2";
        case BasicKind::H1: return "H1";
        case BasicKind::H2: return "H2";
    }
    return "?";
}

OrderedGraph gen_basic(BasicKind kind, int n) {
    switch (kind) {
        case BasicKind::Q1: return make_graph(4, {{1, 3}, {2, 4}});
        case BasicKind::Q2: return make_graph(4, {{1, 4}, {2, 3}});
        case BasicKind::H1: return make_graph(3, {{1, 2}, {2, 3}});
        case BasicKind::H2: return make_graph(3, {{1, 3}});
        default: break;
    }
    if (n < 1) throw InputError("graph order must be >= 1");
    std::vector<Edge> edges;
    switch (kind) {
        case BasicKind::K:
        case BasicKind::J1:
            for (int u = 1; u <= n; ++u)
                for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
            break;
        case BasicKind::E:
            break;
        case BasicKind::J2:
            if (n < 2) throw InputError("J2 requires order >= 2");
            edges.emplace_back(1, n);
            break;
        case BasicKind::J3:
            for (int i = 2; i <= n; ++i) edges.emplace_back(1, i);
            break;
        case BasicKind::J4:
            for (int i = 1; i <= n - 1; ++i) edges.emplace_back(i, n);
            break;
        case BasicKind::L:
            for (int i = 1; i <= n - 1; ++i) edges.emplace_back(i, i + 1);
            break;
        default:
            break;  // fixed-order kinds handled above
    }
    return make_graph(n, edges);
}

OrderedGraph gen_m(const std::array<bool, 4>& I, int m, Orientation orient) {
    if (m < 1) throw InputError("gen_m requires m >= 1");
    // Vertex positions: x_i = i; y_i = m + i for "<", y_i = 2m + 1 - i for ">".
    auto ypos = [&](int i) { return orient == Orientation::Less ? m + i : 2 * m + 1 - i; };
    OrderedGraph::Builder b(2 * m);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            if (i < j && I[0]) b.add_edge(i, j);                       // (i)  x_i x_j
            if (i < j && I[1]) b.add_edge(i, ypos(j));                 // (ii) x_i y_j, i < j
            if (i > j && I[2]) b.add_edge(i, ypos(j));                 // (iii) x_i y_j, i > j
            if (i < j && I[3]) b.add_edge(ypos(i), ypos(j));           // (iv) y_i y_j
            if (i == j && (i % 2 == 1)) b.add_edge(i, ypos(i));        // (v)  x_i y_i, i odd
        }
    return std::move(b).build();
}

OrderedGraph gen_permutation_graph(const Permutation& pi) {
    int n = pi.size();
    OrderedGraph::Builder b(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (pi.values[static_cast<size_t>(i - 1)] > pi.values[static_cast<size_t>(j - 1)])
                b.add_edge(i, j);
    return std::move(b).build();
}

OrderedGraph gen_somebases_prefix(const std::vector<int>& a, int N) {
    int k = static_cast<int>(a.size()) - 1;
    if (k < 0) throw InputError("coefficient sequence must be nonempty");
    for (int i = 0; i <= k; ++i) {
        if (a[static_cast<size_t>(i)] < 1) throw InputError("coefficients must be >= 1");
        if (i > 0 && a[static_cast<size_t>(i)] < a[static_cast<size_t>(i - 1)])
            throw InputError("coefficient sequence must be nondecreasing");
    }
    int header = a[static_cast<size_t>(k)];
    if (N < header)
        throw InputError("prefix length " + std::to_string(N) + " shorter than header " +
                         std::to_string(header));

    // Irreducible block sizes of H: a(0) blocks of size k+1, then
    // a(i)-a(i-1) blocks of size k+1-i for i = 1..k.
    std::vector<int> block_sizes;
    for (int i = 0; i <= k; ++i) {
        int count = a[static_cast<size_t>(i)] - (i == 0 ? 0 : a[static_cast<size_t>(i - 1)]);
        for (int c = 0; c < count; ++c) block_sizes.push_back(k + 1 - i);
    }
    int d = 0;
    std::vector<int> offset(block_sizes.size());  // d(j), 0-based j
    for (size_t j = 0; j < block_sizes.size(); ++j) {
        offset[j] = d;
        d += block_sizes[j];
    }

    OrderedGraph::Builder b(N);
    // Body: repeated copies of H; position p = j - header in [1, N - header].
    // Within a copy, positions (q-1) mod d land in consecutive cliques.
    for (int u = header + 1; u <= N; ++u)
        for (int v = u + 1; v <= N; ++v) {
            int pu = u - header - 1, pv = v - header - 1;  // 0-based body positions
            if (pu / d != pv / d) continue;                // different H-copies
            int qu = pu % d, qv = pv % d;
            // Same irreducible block of H?
            size_t bu = 0;
            while (bu + 1 < block_sizes.size() && offset[bu + 1] <= qu) ++bu;
            if (qv < offset[bu] + block_sizes[bu]) b.add_edge(u, v);
        }
    // Header-to-body edges, condition (ii): 1-based residues of (j - header)
    // mod d; header vertex i joins j iff the residue lies in [d(i)+1, d].
    for (int i = 1; i <= header; ++i)
        for (int j = header + 1; j <= N; ++j) {
            int r = (j - header - 1) % d + 1;
            if (r >= offset[static_cast<size_t>(i - 1)] + 1) b.add_edge(i, j);
        }
    return std::move(b).build();
}

}  // namespace ordspeed
