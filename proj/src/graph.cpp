#include "ordspeed/graph.hpp"

#include <algorithm>

namespace ordspeed {

namespace {

void check_order(int n) {
    if (n < 0) throw InputError("graph order must be nonnegative, got " + std::to_string(n));
    if (n > kMaxVertices)
        throw InputError("graph order " + std::to_string(n) + " exceeds the compile-time cap " +
                         std::to_string(kMaxVertices));
}

void check_vertex(int v, int n) {
    if (v < 1 || v > n)
        throw InputError("vertex " + std::to_string(v) + " out of range [1," + std::to_string(n) + "]");
}

}  // namespace

OrderedGraph::OrderedGraph(int n) : n_(n) {
    check_order(n);
    words_ = (n + 63) / 64;
    bits_.assign(static_cast<size_t>(n) * words_, 0);
}

std::vector<int> OrderedGraph::neighbors(int x) const {
    check_vertex(x, n_);
    std::vector<int> out;
    for (int w = 0; w < words_; ++w) {
        uint64_t word = row_word(x, w);
        while (word) {
            int b = __builtin_ctzll(word);
            out.push_back(w * 64 + b + 1);
            word &= word - 1;
        }
    }
    return out;
}

int OrderedGraph::degree(int x) const {
    check_vertex(x, n_);
    int d = 0;
    for (int w = 0; w < words_; ++w) d += __builtin_popcountll(row_word(x, w));
    return d;
}

std::vector<Edge> OrderedGraph::edges() const {
    std::vector<Edge> out;
    for (int u = 1; u <= n_; ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

size_t OrderedGraph::edge_count() const {
    size_t total = 0;
    for (int u = 1; u <= n_; ++u) total += static_cast<size_t>(degree(u));
    return total / 2;
}

OrderedGraph::Builder::Builder(int n) : g_(n) {}

void OrderedGraph::Builder::add_edge(int u, int v) {
    check_vertex(u, g_.n_);
    check_vertex(v, g_.n_);
    if (u == v) throw InputError("self-pair (" + std::to_string(u) + "," + std::to_string(v) + ")");
    g_.bits_[static_cast<size_t>(u - 1) * g_.words_ + ((v - 1) >> 6)] |= 1ull << ((v - 1) & 63);
    g_.bits_[static_cast<size_t>(v - 1) * g_.words_ + ((u - 1) >> 6)] |= 1ull << ((u - 1) & 63);
}

OrderedGraph OrderedGraph::Builder::build() && { return std::move(g_); }

LoopedOrderedGraph::LoopedOrderedGraph(int n) : n_(n) {
    check_order(n);
    adj_.assign(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), false));
}

bool LoopedOrderedGraph::edge(int u, int v) const {
    check_vertex(u, n_);
    check_vertex(v, n_);
    return adj_[static_cast<size_t>(u - 1)][static_cast<size_t>(v - 1)];
}

void LoopedOrderedGraph::set_edge(int u, int v) {
    check_vertex(u, n_);
    check_vertex(v, n_);
    adj_[static_cast<size_t>(u - 1)][static_cast<size_t>(v - 1)] = true;
    adj_[static_cast<size_t>(v - 1)][static_cast<size_t>(u - 1)] = true;
}

std::vector<Edge> LoopedOrderedGraph::edges() const {
    std::vector<Edge> out;
    for (int u = 1; u <= n_; ++u)
        for (int v = u + 1; v <= n_; ++v)
            if (edge(u, v)) out.emplace_back(u, v);
    return out;
}

std::vector<int> LoopedOrderedGraph::loops() const {
    std::vector<int> out;
    for (int u = 1; u <= n_; ++u)
        if (loop(u)) out.push_back(u);
    return out;
}

Permutation::Permutation(std::vector<int> v) : values(std::move(v)) {
    std::vector<bool> seen(values.size(), false);
    for (int x : values) {
        if (x < 1 || x > static_cast<int>(values.size()) || seen[static_cast<size_t>(x - 1)])
            throw InputError("permutation values must form a bijection on [n]");
        seen[static_cast<size_t>(x - 1)] = true;
    }
}

OrderedGraph make_graph(int n, const std::vector<Edge>& edges) {
    OrderedGraph::Builder b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return std::move(b).build();
}

OrderedGraph complement(const OrderedGraph& g) {
    int n = g.order();
    OrderedGraph::Builder b(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (!g.edge(u, v)) b.add_edge(u, v);
    return std::move(b).build();
}

OrderedGraph induced(const OrderedGraph& g, const std::vector<int>& s) {
    int m = static_cast<int>(s.size());
    for (int i = 0; i < m; ++i) {
        check_vertex(s[static_cast<size_t>(i)], g.order());
        if (i > 0 && s[static_cast<size_t>(i)] <= s[static_cast<size_t>(i - 1)])
            throw InputError("induced-subgraph vertex set must be strictly increasing");
    }
    OrderedGraph::Builder b(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (g.edge(s[static_cast<size_t>(i)], s[static_cast<size_t>(j)])) b.add_edge(i + 1, j + 1);
    return std::move(b).build();
}

namespace {

// Backtracking over strictly increasing maps [h] -> [g]; prefix i is mapped,
// next image must exceed map[i-1].
bool embed_from(const OrderedGraph& h, const OrderedGraph& g, std::vector<int>& map, int i) {
    int nh = h.order(), ng = g.order();
    if (i == nh) return true;
    int lo = (i == 0) ? 1 : map[static_cast<size_t>(i - 1)] + 1;
    for (int cand = lo; cand + (nh - 1 - i) <= ng; ++cand) {
        bool ok = true;
        for (int j = 0; j < i; ++j) {
            if (h.edge(j + 1, i + 1) != g.edge(map[static_cast<size_t>(j)], cand)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            map[static_cast<size_t>(i)] = cand;
            if (embed_from(h, g, map, i + 1)) return true;
        }
    }
    return false;
}

}  // namespace

bool contains(const OrderedGraph& h, const OrderedGraph& g) {
    if (h.order() > g.order()) return false;
    if (h.order() == 0) return true;
    std::vector<int> map(static_cast<size_t>(h.order()));
    return embed_from(h, g, map, 0);
}

OrderedGraph sum(const std::vector<OrderedGraph>& parts) {
    if (parts.empty()) throw InputError("sum of an empty list of graphs");
    int total = 0;
    for (const auto& p : parts) total += p.order();
    OrderedGraph::Builder b(total);
    int offset = 0;
    for (const auto& p : parts) {
        for (auto [u, v] : p.edges()) b.add_edge(u + offset, v + offset);
        offset += p.order();
    }
    return std::move(b).build();
}

OrderedGraph power(const OrderedGraph& g, int k) {
    if (k < 1) throw InputError("power exponent must be >= 1");
    return sum(std::vector<OrderedGraph>(static_cast<size_t>(k), g));
}

OrderedGraph symmetric_difference(const OrderedGraph& g, const OrderedGraph& h) {
    if (g.order() != h.order())
        throw InputError("symmetric difference requires equal orders, got " +
                         std::to_string(g.order()) + " and " + std::to_string(h.order()));
    int n = g.order();
    OrderedGraph::Builder b(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (g.edge(u, v) != h.edge(u, v)) b.add_edge(u, v);
    return std::move(b).build();
}

std::string canonical_key(const OrderedGraph& g) {
    int n = g.order();
    std::string key;
    key.reserve(4 + (static_cast<size_t>(n) * (n - 1) / 2 + 7) / 8);
    for (int shift = 24; shift >= 0; shift -= 8)
        key.push_back(static_cast<char>((static_cast<unsigned>(n) >> shift) & 0xff));
    unsigned char acc = 0;
    int nbits = 0;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) {
            acc = static_cast<unsigned char>((acc << 1) | (g.edge(u, v) ? 1 : 0));
            if (++nbits == 8) {
                key.push_back(static_cast<char>(acc));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) key.push_back(static_cast<char>(acc << (8 - nbits)));
    return key;
}

Key128 canonical_key128(const OrderedGraph& g) {
    // Two independent mixes over the key bytes (FNV-1a style with distinct
    // primes, finished with splitmix64).
    auto mix = [](uint64_t x) {
        x += 0x9e3779b97f4a7c15ull;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    };
    std::string key = canonical_key(g);
    uint64_t a = 0xcbf29ce484222325ull, b = 0x84222325cbf29ce4ull;
    for (unsigned char c : key) {
        a = (a ^ c) * 0x100000001b3ull;
        b = (b ^ c) * 0x10000000233ull;
    }
    return Key128{mix(a), mix(b)};
}

}  // namespace ordspeed
