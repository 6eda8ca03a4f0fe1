#include "ordspeed/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <unordered_set>

#include "ordspeed/parallel.hpp"

namespace ordspeed {

bool SpeedSequence::all_exact() const {
    return std::all_of(exact.begin(), exact.end(), [](bool b) { return b; });
}

BlockProfile::BlockProfile(std::vector<OrderedGraph> graphs) : allowed(std::move(graphs)) {
    for (const auto& g : allowed)
        if (!is_irreducible(g))
            throw InputError("BlockProfile requires irreducible allowed graphs; one of order " +
                             std::to_string(g.order()) + " is reducible");
}

bool member(const PropertySpec& spec, const OrderedGraph& g) {
    if (const auto* fs = std::get_if<ForbiddenSet>(&spec)) {
        for (const auto& h : fs->graphs)
            if (contains(h, g)) return false;
        return true;
    }
    if (const auto* bp = std::get_if<BlockProfile>(&spec)) {
        std::unordered_set<std::string> keys;
        for (const auto& a : bp->allowed) keys.insert(canonical_key(a));
        for (const auto& block : irreducible_decomposition(g).graphs)
            if (!keys.count(canonical_key(block))) return false;
        return true;
    }
    const auto& sc = std::get<SubgraphClosure>(spec);
    return contains(g, sc.host);
}

// ---- extension DFS over the tree of members ---------------------------------

namespace {

// Rows of the graph being grown, as single-word masks over [1, 64).
struct GrowState {
    int depth = 0;
    std::array<uint64_t, 64> rows{};  // rows[i]: neighbours of vertex i+1

    void push(uint64_t row) {
        rows[static_cast<size_t>(depth)] = row;
        for (int i = 0; i < depth; ++i)
            if ((row >> i) & 1) rows[static_cast<size_t>(i)] |= 1ull << depth;
        ++depth;
    }
    void pop() {
        --depth;
        uint64_t row = rows[static_cast<size_t>(depth)];
        rows[static_cast<size_t>(depth)] = 0;
        for (int i = 0; i < depth; ++i)
            if ((row >> i) & 1) rows[static_cast<size_t>(i)] &= ~(1ull << depth);
    }
    OrderedGraph to_graph() const {
        OrderedGraph::Builder b(depth);
        for (int i = 0; i < depth; ++i)
            for (int j = i + 1; j < depth; ++j)
                if ((rows[static_cast<size_t>(i)] >> j) & 1) b.add_edge(i + 1, j + 1);
        return std::move(b).build();
    }
};

// Forbidden pattern pre-digested for the embeds-using-last-vertex test.
struct Pattern {
    int order = 0;
    std::vector<uint64_t> earlier;    // earlier[i]: neighbours of i among [0, i)
    std::vector<bool> adj_last;       // adjacency of vertex i to the pattern's last vertex
};

Pattern digest(const OrderedGraph& h) {
    Pattern p;
    p.order = h.order();
    p.earlier.assign(static_cast<size_t>(p.order), 0);
    p.adj_last.assign(static_cast<size_t>(p.order), false);
    for (int i = 1; i <= p.order; ++i) {
        for (int j = 1; j < i; ++j)
            if (h.edge(j, i)) p.earlier[static_cast<size_t>(i - 1)] |= 1ull << (j - 1);
        p.adj_last[static_cast<size_t>(i - 1)] = h.edge(i, p.order);
    }
    return p;
}

// Does the pattern embed into (state + candidate row) using the new last
// vertex? map: pattern vertex i -> host vertex (0-based), with the pattern's
// last vertex pinned to the new one.
bool embeds_using_last(const Pattern& p, const GrowState& st, uint64_t cand_row, int i, int minc,
                       std::array<int, 64>& map) {
    if (i == p.order - 1) return true;
    for (int c = minc; c <= st.depth - (p.order - 1 - i); ++c) {
        bool ok = ((cand_row >> c) & 1) == p.adj_last[static_cast<size_t>(i)];
        for (int j = 0; ok && j < i; ++j) {
            bool want = (p.earlier[static_cast<size_t>(i)] >> j) & 1;
            ok = (((st.rows[static_cast<size_t>(c)] >> map[static_cast<size_t>(j)]) & 1) != 0) == want;
        }
        if (ok) {
            map[static_cast<size_t>(i)] = c;
            if (embeds_using_last(p, st, cand_row, i + 1, c + 1, map)) return true;
        }
    }
    return false;
}

bool child_blocked(const std::vector<Pattern>& patterns, const GrowState& st, uint64_t cand_row) {
    std::array<int, 64> map{};
    for (const auto& p : patterns) {
        if (p.order > st.depth + 1) continue;
        if (p.order <= 1) return true;  // forbidding a single vertex empties everything
        if (embeds_using_last(p, st, cand_row, 0, 0, map)) return true;
    }
    return false;
}

struct DfsDriver {
    const std::vector<Pattern>* patterns = nullptr;  // ForbiddenSet fast path
    const PropertySpec* spec = nullptr;              // generic hereditary predicate
    int max_n = 0;
    uint64_t nodes_left = 0;
    bool tripped = false;
    std::vector<uint64_t> level_counts;
    int collect_level = 0;  // when > 0, materialize graphs of this level
    std::vector<OrderedGraph>* sink = nullptr;

    bool keep_child(const GrowState& st, uint64_t row) {
        if (patterns) return !child_blocked(*patterns, st, row);
        GrowState tmp = st;
        tmp.push(row);
        return member(*spec, tmp.to_graph());
    }

    void run(GrowState& st) {
        if (st.depth >= max_n) return;
        uint64_t limit = 1ull << st.depth;
        for (uint64_t row = 0; row < limit; ++row) {
            if (nodes_left == 0) {
                tripped = true;
                return;
            }
            --nodes_left;
            if (!keep_child(st, row)) continue;
            st.push(row);
            ++level_counts[static_cast<size_t>(st.depth - 1)];
            if (collect_level == st.depth && sink) sink->push_back(st.to_graph());
            run(st);
            st.pop();
            if (tripped) return;
        }
    }
};

SpeedSequence dfs_count(const PropertySpec& spec, int max_n, const CountOptions& opts) {
    if (max_n > 63) throw InputError("extension enumeration supports orders up to 63");
    DfsDriver driver;
    std::vector<Pattern> patterns;
    if (const auto* fs = std::get_if<ForbiddenSet>(&spec)) {
        for (const auto& h : fs->graphs) patterns.push_back(digest(h));
        driver.patterns = &patterns;
    } else {
        driver.spec = &spec;
    }
    driver.max_n = max_n;
    driver.nodes_left = opts.budget.max_nodes;
    driver.level_counts.assign(static_cast<size_t>(max_n), 0);

    int threads = resolve_threads(opts.threads);
    if (threads <= 1 || max_n <= 4) {
        GrowState st;
        driver.run(st);
    } else {
        // Enumerate a frontier a few levels down, then farm out subtrees.
        int split = std::min(4, max_n - 1);
        std::vector<GrowState> frontier;
        {
            DfsDriver front = driver;
            front.max_n = split;
            struct Collector {
                static void collect(DfsDriver& d, GrowState& st, int target,
                                    std::vector<GrowState>& out) {
                    if (st.depth == target) {
                        out.push_back(st);
                        return;
                    }
                    uint64_t limit = 1ull << st.depth;
                    for (uint64_t row = 0; row < limit; ++row) {
                        if (!d.keep_child(st, row)) continue;
                        st.push(row);
                        collect(d, st, target, out);
                        st.pop();
                    }
                }
            };
            GrowState st;
            Collector::collect(front, st, split, frontier);
        }
        for (int d = 1; d <= split; ++d) {
            // level d count = frontier graphs agreeing on the first d rows;
            // recompute cheaply by a truncated sequential pass
            driver.level_counts[static_cast<size_t>(d - 1)] = 0;
        }
        {
            DfsDriver shallow = driver;
            shallow.max_n = split;
            shallow.nodes_left = opts.budget.max_nodes;
            GrowState st;
            shallow.run(st);
            for (int d = 1; d <= split; ++d)
                driver.level_counts[static_cast<size_t>(d - 1)] =
                    shallow.level_counts[static_cast<size_t>(d - 1)];
            if (shallow.tripped) driver.tripped = true;
        }
        std::vector<DfsDriver> workers(static_cast<size_t>(threads), driver);
        uint64_t per_worker = opts.budget.max_nodes / static_cast<uint64_t>(threads);
        parallel_chunks(static_cast<int64_t>(frontier.size()), threads,
                        [&](int chunk, int64_t begin, int64_t end) {
                            DfsDriver& w = workers[static_cast<size_t>(chunk)];
                            w.nodes_left = per_worker;
                            std::fill(w.level_counts.begin(), w.level_counts.end(), 0);
                            for (int64_t f = begin; f < end && !w.tripped; ++f) {
                                GrowState st = frontier[static_cast<size_t>(f)];
                                w.run(st);
                            }
                        });
        for (const auto& w : workers) {
            for (int d = split + 1; d <= max_n; ++d)
                driver.level_counts[static_cast<size_t>(d - 1)] +=
                    w.level_counts[static_cast<size_t>(d - 1)];
            if (w.tripped) driver.tripped = true;
        }
    }

    SpeedSequence seq;
    for (int n = 1; n <= max_n; ++n) {
        seq.counts.emplace_back(driver.level_counts[static_cast<size_t>(n - 1)]);
        seq.exact.push_back(!driver.tripped);
    }
    return seq;
}

std::map<int, std::vector<OrderedGraph>> distinct_allowed_by_order(const BlockProfile& bp) {
    std::map<int, std::vector<OrderedGraph>> by_order;
    std::unordered_set<std::string> seen;
    for (const auto& g : bp.allowed)
        if (seen.insert(canonical_key(g)).second) by_order[g.order()].push_back(g);
    return by_order;
}

}  // namespace

SpeedSequence count_speed(const PropertySpec& spec, int max_n, const CountOptions& opts) {
    if (max_n < 1) throw InputError("max order must be >= 1");
    if (const auto* bp = std::get_if<BlockProfile>(&spec)) {
        // Decomposition uniqueness turns membership into compositions of n
        // into allowed block orders: a_n = sum_s c_s a_{n-s}.
        auto by_order = distinct_allowed_by_order(*bp);
        std::vector<BigInt> a(static_cast<size_t>(max_n + 1));
        a[0] = 1;
        for (int n = 1; n <= max_n; ++n)
            for (const auto& [s, graphs] : by_order)
                if (s <= n) a[static_cast<size_t>(n)] += BigInt(graphs.size()) * a[static_cast<size_t>(n - s)];
        SpeedSequence seq;
        for (int n = 1; n <= max_n; ++n) {
            seq.counts.push_back(a[static_cast<size_t>(n)]);
            seq.exact.push_back(true);
        }
        return seq;
    }
    if (const auto* sc = std::get_if<SubgraphClosure>(&spec)) {
        SpeedSequence seq;
        for (int n = 1; n <= max_n; ++n) {
            if (n > sc->host.order()) {
                seq.counts.emplace_back(0);
                seq.exact.push_back(true);
            } else {
                SubgraphCount c = count_subgraphs(sc->host, n, opts);
                seq.counts.push_back(c.count);
                seq.exact.push_back(c.exact);
            }
        }
        return seq;
    }
    return dfs_count(spec, max_n, opts);
}

MemberList list_members(const PropertySpec& spec, int n, const CountOptions& opts) {
    if (n < 1) throw InputError("order must be >= 1");
    MemberList out;
    if (const auto* bp = std::get_if<BlockProfile>(&spec)) {
        auto by_order = distinct_allowed_by_order(*bp);
        std::vector<OrderedGraph> prefix;
        auto rec = [&](auto&& self, int remaining) -> void {
            if (remaining == 0) {
                out.graphs.push_back(sum(prefix));
                return;
            }
            for (const auto& [s, graphs] : by_order) {
                if (s > remaining) continue;
                for (const auto& g : graphs) {
                    prefix.push_back(g);
                    self(self, remaining - s);
                    prefix.pop_back();
                }
            }
        };
        rec(rec, n);
    } else if (const auto* sc = std::get_if<SubgraphClosure>(&spec)) {
        if (n <= sc->host.order()) {
            std::unordered_set<std::string> seen;
            std::vector<int> subset(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) subset[static_cast<size_t>(i)] = i + 1;
            uint64_t nodes_left = opts.budget.max_nodes;
            while (true) {
                if (nodes_left-- == 0) {
                    out.exact = false;
                    break;
                }
                OrderedGraph sub = induced(sc->host, subset);
                if (seen.insert(canonical_key(sub)).second) {
                    out.graphs.push_back(std::move(sub));
                    if (seen.size() >= opts.budget.max_set_keys) {
                        out.exact = false;
                        break;
                    }
                }
                // next lexicographic n-subset of [host.order()]
                int i = n - 1;
                while (i >= 0 && subset[static_cast<size_t>(i)] == sc->host.order() - (n - 1 - i)) --i;
                if (i < 0) break;
                ++subset[static_cast<size_t>(i)];
                for (int j = i + 1; j < n; ++j)
                    subset[static_cast<size_t>(j)] = subset[static_cast<size_t>(j - 1)] + 1;
            }
        }
    } else {
        if (n > 63) throw InputError("extension enumeration supports orders up to 63");
        DfsDriver driver;
        std::vector<Pattern> patterns;
        for (const auto& h : std::get<ForbiddenSet>(spec).graphs) patterns.push_back(digest(h));
        driver.patterns = &patterns;
        driver.max_n = n;
        driver.nodes_left = opts.budget.max_nodes;
        driver.level_counts.assign(static_cast<size_t>(n), 0);
        driver.collect_level = n;
        driver.sink = &out.graphs;
        GrowState st;
        driver.run(st);
        out.exact = !driver.tripped;
    }
    std::sort(out.graphs.begin(), out.graphs.end(), [](const OrderedGraph& a, const OrderedGraph& b) {
        return canonical_key(a) < canonical_key(b);
    });
    return out;
}

// ---- S_n(G) -----------------------------------------------------------------

namespace {

// Packs induced-subgraph adjacency (n <= 11) into one word: 6 bits of n plus
// the upper triangle.
uint64_t packed_key(const OrderedGraph& g, const std::vector<int>& subset) {
    uint64_t key = static_cast<uint64_t>(subset.size());
    int bit = 6;
    for (size_t i = 0; i < subset.size(); ++i)
        for (size_t j = i + 1; j < subset.size(); ++j) {
            key |= static_cast<uint64_t>(g.edge(subset[i], subset[j])) << bit;
            ++bit;
        }
    return key;
}

}  // namespace

SubgraphCount count_subgraphs(const OrderedGraph& g, int n, const CountOptions& opts) {
    int N = g.order();
    if (n < 1 || n > N)
        throw InputError("subgraph order " + std::to_string(n) + " out of range [1," +
                         std::to_string(N) + "]");
    int threads = resolve_threads(opts.threads);
    int first_max = N - n + 1;
    threads = std::min(threads, first_max);

    bool use_packed = n <= 11;
    std::vector<std::unordered_set<uint64_t>> packed_sets(static_cast<size_t>(threads));
    std::vector<std::unordered_set<std::string>> exact_sets(static_cast<size_t>(threads));
    std::vector<std::unordered_set<Key128, Key128Hash>> hashed_sets(static_cast<size_t>(threads));
    std::vector<bool> chunk_tripped(static_cast<size_t>(threads), false);

    uint64_t node_budget = std::max<uint64_t>(1, opts.budget.max_nodes / static_cast<uint64_t>(threads));
    uint64_t key_budget = std::max<uint64_t>(1, opts.budget.max_set_keys / static_cast<uint64_t>(threads));

    parallel_chunks(first_max, threads, [&](int chunk, int64_t begin, int64_t end) {
        auto& packed = packed_sets[static_cast<size_t>(chunk)];
        auto& exact = exact_sets[static_cast<size_t>(chunk)];
        auto& hashed = hashed_sets[static_cast<size_t>(chunk)];
        uint64_t nodes_left = node_budget;
        std::vector<int> subset(static_cast<size_t>(n));
        for (int64_t first = begin + 1; first <= end; ++first) {
            // iterate n-subsets with minimum element `first`
            subset[0] = static_cast<int>(first);
            for (int i = 1; i < n; ++i) subset[static_cast<size_t>(i)] = static_cast<int>(first) + i;
            if (subset.back() > N) break;
            while (true) {
                if (nodes_left-- == 0) {
                    chunk_tripped[static_cast<size_t>(chunk)] = true;
                    return;
                }
                size_t set_size;
                if (use_packed) {
                    packed.insert(packed_key(g, subset));
                    set_size = packed.size();
                } else if (opts.exact_dedup) {
                    exact.insert(canonical_key(induced(g, subset)));
                    set_size = exact.size();
                } else {
                    hashed.insert(canonical_key128(induced(g, subset)));
                    set_size = hashed.size();
                }
                if (set_size >= key_budget) {
                    chunk_tripped[static_cast<size_t>(chunk)] = true;
                    return;
                }
                int i = n - 1;
                while (i >= 1 && subset[static_cast<size_t>(i)] == N - (n - 1 - i)) --i;
                if (i < 1) break;  // first element stays fixed
                ++subset[static_cast<size_t>(i)];
                for (int j = i + 1; j < n; ++j)
                    subset[static_cast<size_t>(j)] = subset[static_cast<size_t>(j - 1)] + 1;
            }
        }
    });

    SubgraphCount out;
    if (use_packed) {
        auto& total = packed_sets[0];
        for (int c = 1; c < threads; ++c) total.insert(packed_sets[static_cast<size_t>(c)].begin(),
                                                       packed_sets[static_cast<size_t>(c)].end());
        out.count = total.size();
    } else if (opts.exact_dedup) {
        auto& total = exact_sets[0];
        for (int c = 1; c < threads; ++c) total.insert(exact_sets[static_cast<size_t>(c)].begin(),
                                                       exact_sets[static_cast<size_t>(c)].end());
        out.count = total.size();
    } else {
        auto& total = hashed_sets[0];
        for (int c = 1; c < threads; ++c) total.insert(hashed_sets[static_cast<size_t>(c)].begin(),
                                                       hashed_sets[static_cast<size_t>(c)].end());
        out.count = total.size();
    }
    out.exact = std::none_of(chunk_tripped.begin(), chunk_tripped.end(), [](bool b) { return b; });
    return out;
}

BigInt blowup_count(const LoopedOrderedGraph& h, const BoundFunction& b, int n) {
    int m = h.order();
    if (b.domain_size() != m) throw InputError("bound function domain must match |H|");
    for (uint64_t bi : b.b)
        if (bi < 1) throw InputError("bounds must be >= 1");
    if (n < 1) throw InputError("order must be >= 1");

    std::unordered_set<std::string> seen;
    std::vector<int> comp(static_cast<size_t>(m));
    auto rec = [&](auto&& self, int i, int remaining) -> void {
        if (i == m) {
            if (remaining != 0) return;
            // quotient must reproduce H: a looped vertex needs a non-trivial
            // clique, so its block must have >= 2 vertices
            for (int v = 1; v <= m; ++v)
                if (h.loop(v) && comp[static_cast<size_t>(v - 1)] < 2) return;
            std::vector<int> start(static_cast<size_t>(m + 1));
            start[0] = 1;
            for (int v = 1; v <= m; ++v)
                start[static_cast<size_t>(v)] = start[static_cast<size_t>(v - 1)] + comp[static_cast<size_t>(v - 1)];
            OrderedGraph::Builder builder(n);
            for (int u = 1; u <= m; ++u) {
                int au = start[static_cast<size_t>(u - 1)], bu = au + comp[static_cast<size_t>(u - 1)] - 1;
                if (h.loop(u))
                    for (int x = au; x <= bu; ++x)
                        for (int y = x + 1; y <= bu; ++y) builder.add_edge(x, y);
                for (int v = u + 1; v <= m; ++v) {
                    if (!h.edge(u, v)) continue;
                    int av = start[static_cast<size_t>(v - 1)], bv = av + comp[static_cast<size_t>(v - 1)] - 1;
                    for (int x = au; x <= bu; ++x)
                        for (int y = av; y <= bv; ++y) builder.add_edge(x, y);
                }
            }
            seen.insert(canonical_key(std::move(builder).build()));
            return;
        }
        uint64_t cap = b.b[static_cast<size_t>(i)];
        int hi = static_cast<int>(std::min<uint64_t>(cap, static_cast<uint64_t>(remaining)));
        for (int c = 1; c <= hi; ++c) {
            comp[static_cast<size_t>(i)] = c;
            self(self, i + 1, remaining - c);
        }
    };
    rec(rec, 0, n);
    return BigInt(seen.size());
}

}  // namespace ordspeed
