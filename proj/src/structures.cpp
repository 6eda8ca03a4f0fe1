#include "ordspeed/structures.hpp"

#include <algorithm>
#include <map>

namespace ordspeed {

int witness_size(const StructureWitness& w) {
    return std::visit(
        [](const auto& v) -> int {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Type1Witness>)
                return static_cast<int>(v.xs.size()) / 2;
            else
                return static_cast<int>(v.xs.size()) / 2;
        },
        w);
}

// ---- Type 1 -----------------------------------------------------------------

namespace {

// First vertex of each maximal constant run of y's adjacency over [lo, hi].
std::vector<int> run_representatives(const OrderedGraph& g, int y, int lo, int hi) {
    std::vector<int> reps;
    bool prev = false;
    for (int u = lo; u <= hi; ++u) {
        bool bit = g.edge(y, u);
        if (reps.empty() || bit != prev) reps.push_back(u);
        prev = bit;
    }
    return reps;
}

std::optional<Type1Witness> type1_from_side(const OrderedGraph& g, int y, int lo, int hi, int want2k) {
    if (lo > hi) return std::nullopt;
    std::vector<int> reps = run_representatives(g, y, lo, hi);
    if (static_cast<int>(reps.size()) < want2k || want2k < 2) return std::nullopt;
    reps.resize(static_cast<size_t>(want2k));
    Type1Witness w;
    w.y = y;
    w.y_left = y < reps.front();
    w.xs = std::move(reps);
    w.starts_with_edge = g.edge(y, w.xs.front());
    return w;
}

}  // namespace

DetectorResult max_type1_k(const OrderedGraph& g) {
    int n = g.order();
    DetectorResult best;
    for (int y = 1; y <= n; ++y) {
        // x's on the left of y, then on the right.
        for (int side = 0; side < 2; ++side) {
            int lo = side == 0 ? 1 : y + 1;
            int hi = side == 0 ? y - 1 : n;
            if (lo > hi) continue;
            int runs = static_cast<int>(run_representatives(g, y, lo, hi).size());
            int k = runs / 2;
            if (k > best.k) {
                best.k = k;
                best.witness = *type1_from_side(g, y, lo, hi, 2 * k);
            }
        }
    }
    return best;
}

// ---- Type 2 -----------------------------------------------------------------

namespace {

struct ChainCell {
    int len = 0;
    int px = 0, py = 0;  // predecessor pair, 0 = none
};

// Longest alternating chain of pairs (x, y), x in [1, p], y in [p+1, n],
// x and y strictly increasing (ascending = true) or y strictly decreasing.
// Returns the chain as pairs in structure order.
std::vector<std::pair<int, int>> best_chain_for_split(const OrderedGraph& g, int p, bool y_ascending) {
    int n = g.order();
    int L = p, R = n - p;
    // dp[x][yi]: best chain ending at (x, py(yi)); prefix/suffix max per bit.
    auto ypos = [&](int yi) { return y_ascending ? p + yi : n + 1 - yi; };
    // With y_ascending, process y's left to right; otherwise right to left,
    // so that in both cases "earlier yi" means "usable predecessor".
    std::vector<std::vector<std::array<ChainCell, 2>>> dp(
        static_cast<size_t>(L + 1), std::vector<std::array<ChainCell, 2>>(static_cast<size_t>(R + 1)));
    // run_max[b][x][yi]: best dp over pairs (x' <= x, yi' <= yi) with bit b.
    struct Best {
        int len = 0;
        int x = 0, yi = 0;
    };
    std::vector<std::vector<std::array<Best, 2>>> run_max(
        static_cast<size_t>(L + 1), std::vector<std::array<Best, 2>>(static_cast<size_t>(R + 1)));

    Best overall;
    for (int x = 1; x <= L; ++x)
        for (int yi = 1; yi <= R; ++yi)
            for (int b = 0; b < 2; ++b) {
                Best& m = run_max[static_cast<size_t>(x)][static_cast<size_t>(yi)][static_cast<size_t>(b)];
                m = run_max[static_cast<size_t>(x - 1)][static_cast<size_t>(yi)][static_cast<size_t>(b)];
                const Best& up = run_max[static_cast<size_t>(x)][static_cast<size_t>(yi - 1)][static_cast<size_t>(b)];
                if (up.len > m.len) m = up;
                int bit = g.edge(x, ypos(yi)) ? 1 : 0;
                if (bit == b) {
                    ChainCell& cell = dp[static_cast<size_t>(x)][static_cast<size_t>(yi)][static_cast<size_t>(b)];
                    const Best& pred =
                        run_max[static_cast<size_t>(x - 1)][static_cast<size_t>(yi - 1)][static_cast<size_t>(1 - b)];
                    cell.len = 1 + pred.len;
                    cell.px = pred.x;
                    cell.py = pred.yi;
                    if (cell.len > m.len) m = Best{cell.len, x, yi};
                    if (cell.len > overall.len) overall = Best{cell.len, x, yi};
                }
            }

    std::vector<std::pair<int, int>> chain;
    int cx = overall.x, cy = overall.yi;
    while (cx != 0) {
        chain.emplace_back(cx, ypos(cy));
        int b = g.edge(cx, ypos(cy)) ? 1 : 0;
        const ChainCell& cell = dp[static_cast<size_t>(cx)][static_cast<size_t>(cy)][static_cast<size_t>(b)];
        cx = cell.px;
        cy = cell.py;
    }
    std::reverse(chain.begin(), chain.end());
    return chain;
}

}  // namespace

DetectorResult max_type2_k(const OrderedGraph& g) {
    int n = g.order();
    DetectorResult best;
    for (int p = 1; p < n; ++p)
        for (bool asc : {true, false}) {
            auto chain = best_chain_for_split(g, p, asc);
            int k = static_cast<int>(chain.size()) / 2;
            if (k > best.k) {
                best.k = k;
                chain.resize(static_cast<size_t>(2 * k));
                std::vector<int> xs, ys;
                for (auto [x, y] : chain) {
                    xs.push_back(x);
                    ys.push_back(y);
                }
                if (asc)
                    best.witness = Type2aWitness{std::move(xs), std::move(ys)};
                else
                    best.witness = Type2bWitness{std::move(xs), std::move(ys)};
            }
        }
    return best;
}

// ---- Type 3 -----------------------------------------------------------------

DetectorResult max_type3_k(const OrderedGraph& g, int ell) {
    if (ell < 1) throw InputError("ell must be >= 1");
    int n = g.order();
    struct Pair {
        int x, y;
        int len = 1;
        int pred = -1;
    };
    std::vector<Pair> pairs;
    for (int y = 1; y <= n; ++y)
        for (int x = 1; x + ell <= y; ++x) pairs.push_back({x, y, 1, -1});
    // pairs are grouped by y ascending. pref[b][v]: best (len, index) over
    // committed pairs with this bit and y' <= v.
    struct Best {
        int len = 0;
        int idx = -1;
    };
    std::vector<std::array<Best, 2>> pref(static_cast<size_t>(n + 1));
    int flushed = 0;  // pref is final up to this y value
    std::vector<std::array<Best, 2>> column(static_cast<size_t>(n + 1));  // per-y point maxima

    Best overall;
    size_t i = 0;
    while (i < pairs.size()) {
        size_t j = i;
        int y = pairs[i].y;
        while (j < pairs.size() && pairs[j].y == y) ++j;
        // flush prefix maxima up to y-1
        for (int v = flushed + 1; v <= y - 1; ++v)
            for (int b = 0; b < 2; ++b) {
                pref[static_cast<size_t>(v)][static_cast<size_t>(b)] =
                    pref[static_cast<size_t>(v - 1)][static_cast<size_t>(b)];
                if (column[static_cast<size_t>(v)][static_cast<size_t>(b)].len >
                    pref[static_cast<size_t>(v)][static_cast<size_t>(b)].len)
                    pref[static_cast<size_t>(v)][static_cast<size_t>(b)] =
                        column[static_cast<size_t>(v)][static_cast<size_t>(b)];
            }
        if (y - 1 > flushed) flushed = y - 1;
        for (size_t q = i; q < j; ++q) {
            Pair& pr = pairs[q];
            int b = g.edge(pr.x, pr.y) ? 1 : 0;
            const Best& pred = pref[static_cast<size_t>(pr.x - 1)][static_cast<size_t>(1 - b)];
            pr.len = 1 + pred.len;
            pr.pred = pred.idx;
            Best& col = column[static_cast<size_t>(y)][static_cast<size_t>(b)];
            if (pr.len > col.len) col = Best{pr.len, static_cast<int>(q)};
            if (pr.len > overall.len) overall = Best{pr.len, static_cast<int>(q)};
        }
        i = j;
    }

    DetectorResult best;
    best.k = overall.len / 2;
    if (best.k >= 1) {
        std::vector<std::pair<int, int>> chain;
        for (int cur = overall.idx; cur != -1; cur = pairs[static_cast<size_t>(cur)].pred)
            chain.emplace_back(pairs[static_cast<size_t>(cur)].x, pairs[static_cast<size_t>(cur)].y);
        std::reverse(chain.begin(), chain.end());
        chain.resize(static_cast<size_t>(2 * best.k));
        Type3Witness w;
        w.ell = ell;
        for (auto [x, y] : chain) {
            w.xs.push_back(x);
            w.ys.push_back(y);
        }
        best.witness = std::move(w);
    }
    return best;
}

// ---- monotone subsequences --------------------------------------------------

MonotoneResult longest_monotone(const std::vector<int>& seq) {
    {
        std::vector<int> sorted = seq;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InputError("longest_monotone requires distinct values");
    }
    int m = static_cast<int>(seq.size());
    MonotoneResult out;
    for (bool increasing : {true, false}) {
        std::vector<int> len(static_cast<size_t>(m), 1), pred(static_cast<size_t>(m), -1);
        int best = m > 0 ? 0 : -1;
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < i; ++j) {
                bool ok = increasing ? seq[static_cast<size_t>(j)] < seq[static_cast<size_t>(i)]
                                     : seq[static_cast<size_t>(j)] > seq[static_cast<size_t>(i)];
                if (ok && len[static_cast<size_t>(j)] + 1 > len[static_cast<size_t>(i)]) {
                    len[static_cast<size_t>(i)] = len[static_cast<size_t>(j)] + 1;
                    pred[static_cast<size_t>(i)] = j;
                }
            }
            if (len[static_cast<size_t>(i)] > len[static_cast<size_t>(best)]) best = i;
        }
        std::vector<int> idx;
        for (int cur = best; cur != -1; cur = pred[static_cast<size_t>(cur)]) idx.push_back(cur);
        std::reverse(idx.begin(), idx.end());
        (increasing ? out.increasing_indices : out.decreasing_indices) = std::move(idx);
    }
    return out;
}

// ---- witness validation -----------------------------------------------------

namespace {

bool in_range(const std::vector<int>& vs, int n) {
    for (int v : vs)
        if (v < 1 || v > n) return false;
    return true;
}

bool strictly_increasing(const std::vector<int>& vs) {
    for (size_t i = 1; i < vs.size(); ++i)
        if (vs[i] <= vs[i - 1]) return false;
    return true;
}

bool strictly_decreasing(const std::vector<int>& vs) {
    for (size_t i = 1; i < vs.size(); ++i)
        if (vs[i] >= vs[i - 1]) return false;
    return true;
}

}  // namespace

bool validate_witness(const OrderedGraph& g, const StructureWitness& w) {
    int n = g.order();
    if (const auto* t1 = std::get_if<Type1Witness>(&w)) {
        const auto& xs = t1->xs;
        if (xs.size() < 2 || xs.size() % 2 != 0) return false;
        if (!in_range(xs, n) || t1->y < 1 || t1->y > n) return false;
        if (!strictly_increasing(xs)) return false;
        if (t1->y_left ? t1->y >= xs.front() : t1->y <= xs.back()) return false;
        if (g.edge(t1->y, xs.front()) != t1->starts_with_edge) return false;
        for (size_t i = 0; i + 1 < xs.size(); ++i)
            if (g.edge(t1->y, xs[i]) == g.edge(t1->y, xs[i + 1])) return false;
        return true;
    }
    if (const auto* t2a = std::get_if<Type2aWitness>(&w)) {
        const auto &xs = t2a->xs, &ys = t2a->ys;
        if (xs.size() != ys.size() || xs.size() < 2 || xs.size() % 2 != 0) return false;
        if (!in_range(xs, n) || !in_range(ys, n)) return false;
        if (!strictly_increasing(xs) || !strictly_increasing(ys)) return false;
        if (xs.back() >= ys.front()) return false;
        for (size_t i = 0; i + 1 < xs.size(); ++i)
            if (g.edge(xs[i], ys[i]) == g.edge(xs[i + 1], ys[i + 1])) return false;
        return true;
    }
    if (const auto* t2b = std::get_if<Type2bWitness>(&w)) {
        const auto &xs = t2b->xs, &ys = t2b->ys;
        if (xs.size() != ys.size() || xs.size() < 2 || xs.size() % 2 != 0) return false;
        if (!in_range(xs, n) || !in_range(ys, n)) return false;
        if (!strictly_increasing(xs) || !strictly_decreasing(ys)) return false;
        if (xs.back() >= ys.back()) return false;
        for (size_t i = 0; i + 1 < xs.size(); ++i)
            if (g.edge(xs[i], ys[i]) == g.edge(xs[i + 1], ys[i + 1])) return false;
        return true;
    }
    const auto& t3 = std::get<Type3Witness>(w);
    const auto &xs = t3.xs, &ys = t3.ys;
    if (t3.ell < 1) return false;
    if (xs.size() != ys.size() || xs.size() < 2 || xs.size() % 2 != 0) return false;
    if (!in_range(xs, n) || !in_range(ys, n)) return false;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (ys[i] - xs[i] < t3.ell) return false;  // hosts the ell-1 z-vertices
        if (i + 1 < xs.size() && ys[i] >= xs[i + 1]) return false;
    }
    for (size_t i = 0; i + 1 < xs.size(); ++i)
        if (g.edge(xs[i], ys[i]) == g.edge(xs[i + 1], ys[i + 1])) return false;
    return true;
}

// ---- Lemma 2.1 certificate --------------------------------------------------

namespace {

struct ISequence {
    std::vector<int> separators;               // i_1, ..., i_t (<= n)
    std::vector<std::pair<int, int>> pairs;    // (j_t, i_t) per stage, stage 1 = (1, ell+1)
    bool reached = false;                      // accumulated 2k pairs
};

// Builds the alternating i-sequence of the Lemma 2.1 proof on a graph with
// (1, ell+1) an edge. Stage t >= 2 looks for the minimal endpoint i_t of an
// edge (t odd) or non-edge (t even) (j, i_t) with i_{t-1} < j <= i_t - ell.
ISequence build_i_sequence(const OrderedGraph& g, int k, int ell) {
    int n = g.order();
    ISequence seq;
    seq.separators.push_back(ell + 1);
    seq.pairs.emplace_back(1, ell + 1);
    if (static_cast<int>(seq.pairs.size()) == 2 * k) {
        seq.reached = true;
        return seq;
    }
    for (int t = 2;; ++t) {
        bool want_edge = (t % 2 == 1);
        int prev = seq.separators.back();
        bool found = false;
        for (int cand = prev + ell + 1; cand <= n && !found; ++cand)
            for (int j = prev + 1; j <= cand - ell; ++j)
                if (g.edge(j, cand) == want_edge) {
                    seq.separators.push_back(cand);
                    seq.pairs.emplace_back(j, cand);
                    found = true;
                    break;
                }
        if (!found) return seq;
        if (static_cast<int>(seq.pairs.size()) == 2 * k) {
            seq.reached = true;
            return seq;
        }
    }
}

// Smallest vertex outside [lo, hi] whose adjacency differs between s and s+1,
// or 0 if none.
int separated_by(const OrderedGraph& g, int s, int lo, int hi) {
    int n = g.order();
    for (int w = 1; w <= n; ++w) {
        if (w >= lo && w <= hi) continue;
        if (g.edge(s, w) != g.edge(s + 1, w)) return w;
    }
    return 0;
}

std::optional<StructureWitness> witness_from_block(const OrderedGraph& g, int k, int lo, int hi) {
    if (lo >= hi) return std::nullopt;
    // S: separated vertices with their chosen (smallest) outside witness.
    std::vector<std::pair<int, int>> sw;  // (s, w(s))
    std::map<int, std::vector<int>> choosers;
    for (int s = lo; s < hi; ++s) {
        int w = separated_by(g, s, lo, hi);
        if (w != 0) {
            sw.emplace_back(s, w);
            choosers[w].push_back(s);
        }
    }
    // Over-chosen witness -> Type 1 read off w's alternating pattern.
    for (const auto& [w, ss] : choosers) {
        if (static_cast<int>(ss.size()) > 2 * k) {
            auto reps = run_representatives(g, w, lo, hi);
            if (static_cast<int>(reps.size()) < 2 * k)
                throw InternalError("Type 1 extraction: fewer runs than choosers");
            reps.resize(static_cast<size_t>(2 * k));
            Type1Witness t1;
            t1.y = w;
            t1.y_left = w < lo;
            t1.xs = std::move(reps);
            t1.starts_with_edge = g.edge(w, t1.xs.front());
            return StructureWitness{std::move(t1)};
        }
    }
    int64_t bound = 64ll * k * k * k;
    if (static_cast<int64_t>(sw.size()) < bound) return std::nullopt;

    // |S| >= 64k^3: at least 16k^2 distinct witnesses on one side; the
    // Erdos-Szekeres step yields 4k pairs with monotone choosers, every
    // other of which supplies a Type 2 pair.
    std::vector<std::pair<int, int>> left, right;  // (w, smallest chooser)
    for (const auto& [w, ss] : choosers)
        (w < lo ? left : right).emplace_back(w, ss.front());
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    bool use_left = left.size() >= right.size();
    auto& side = use_left ? left : right;
    int64_t need = 16ll * k * k;
    if (static_cast<int64_t>(side.size()) < need)
        throw InternalError("Type 2 extraction: side smaller than 16k^2");
    side.resize(static_cast<size_t>(need));

    std::vector<int> f;
    for (auto& [w, s] : side) f.push_back(s);
    MonotoneResult mono = longest_monotone(f);
    bool increasing = static_cast<int>(mono.increasing_indices.size()) >= 4 * k;
    const auto& idx = increasing ? mono.increasing_indices : mono.decreasing_indices;
    if (static_cast<int>(idx.size()) < 4 * k)
        throw InternalError("Erdos-Szekeres step found no monotone run of length 4k");

    std::vector<std::pair<int, int>> selected;  // (w, s), chooser-monotone
    for (int i = 0; i < 4 * k; ++i) selected.push_back(side[static_cast<size_t>(idx[static_cast<size_t>(i)])]);
    // Every other pair in chooser order keeps the {s, s+1} endpoint choices
    // disjoint.
    std::sort(selected.begin(), selected.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 4 * k; i += 2) pairs.push_back(selected[static_cast<size_t>(i)]);

    // Structure order: x-coordinates increasing. Left-side witnesses are the
    // x's; right-side witnesses are the y's.
    if (use_left)
        std::sort(pairs.begin(), pairs.end());  // by w ascending
    // else: already by s ascending.

    std::vector<int> xs, ys;
    for (size_t i = 0; i < pairs.size(); ++i) {
        bool want = (i % 2 == 0);  // alternate starting with an edge
        auto [w, s] = pairs[i];
        int t = (g.edge(w, s) == want) ? s : s + 1;
        if (use_left) {
            xs.push_back(w);
            ys.push_back(t);
        } else {
            xs.push_back(t);
            ys.push_back(w);
        }
    }
    if (strictly_increasing(ys)) return StructureWitness{Type2aWitness{std::move(xs), std::move(ys)}};
    return StructureWitness{Type2bWitness{std::move(xs), std::move(ys)}};
}

// All separated vertices of the block [lo, hi].
void collect_separated(const OrderedGraph& g, int lo, int hi, std::vector<int>& out) {
    for (int s = lo; s < hi; ++s)
        if (separated_by(g, s, lo, hi) != 0) out.push_back(s);
}

}  // namespace

Certificate certify_partition(const OrderedGraph& g, int k, int ell, CertifyOptions opts) {
    if (k < 1 || ell < 1) throw InputError("certify_partition requires k >= 1 and ell >= 1");
    int n = g.order();
    int64_t block_bound = 256ll * k * k * k * k;

    auto greedy = [&]() {
        Certificate c;
        c.partition = min_l_homogeneous_partition(g, ell);
        return c;
    };
    if (opts.greedy_first) {
        Certificate c = greedy();
        if (c.partition->block_count() <= block_bound) return c;
    }
    if (n <= ell + 1) return greedy();

    bool complemented = !g.edge(1, ell + 1);
    OrderedGraph work = complemented ? complement(g) : g;

    ISequence seq = build_i_sequence(work, k, ell);
    Certificate cert;
    cert.complemented = complemented;
    if (seq.reached) {
        Type3Witness w;
        w.ell = ell;
        for (auto [x, y] : seq.pairs) {
            w.xs.push_back(x);
            w.ys.push_back(y);
        }
        if (!validate_witness(work, w)) throw InternalError("i-sequence produced an invalid Type 3 witness");
        cert.witness = StructureWitness{std::move(w)};
        return cert;
    }

    // Blocks A_j between consecutive separators (singletons excluded).
    std::vector<std::pair<int, int>> blocks;
    {
        int prev = 0;
        for (int sep : seq.separators) {
            if (prev + 1 <= sep - 1) blocks.emplace_back(prev + 1, sep - 1);
            prev = sep;
        }
        if (prev + 1 <= n) blocks.emplace_back(prev + 1, n);
    }

    std::vector<int> cut_points = seq.separators;
    for (auto [lo, hi] : blocks) {
        auto witness = witness_from_block(work, k, lo, hi);
        if (witness) {
            if (!validate_witness(work, *witness)) throw InternalError("block witness failed validation");
            if (witness_size(*witness) < k) throw InternalError("block witness smaller than k");
            cert.witness = std::move(witness);
            return cert;
        }
        collect_separated(work, lo, hi, cut_points);
    }

    std::sort(cut_points.begin(), cut_points.end());
    cut_points.erase(std::unique(cut_points.begin(), cut_points.end()), cut_points.end());

    BlockPartition part;
    part.ell = ell;
    int prev = 0;
    for (int a : cut_points) {
        if (prev + 1 <= a - 1) part.blocks.emplace_back(prev + 1, a - 1);
        part.blocks.emplace_back(a, a);
        prev = a;
    }
    if (prev + 1 <= n) part.blocks.emplace_back(prev + 1, n);

    if (part.block_count() > block_bound)
        throw InternalError("constructed partition exceeds the 256k^4 bound");
    for (auto blk : part.blocks)
        if (!is_l_homogeneous(g, blk, ell))
            throw InternalError("constructed block [" + std::to_string(blk.first) + "," +
                                std::to_string(blk.second) + "] is not ell-homogeneous");
    cert.partition = std::move(part);
    cert.complemented = false;  // the vertex partition applies to g directly
    return cert;
}

}  // namespace ordspeed
