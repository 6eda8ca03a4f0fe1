#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ordspeed/gen.hpp"
#include "ordspeed/structures.hpp"

using namespace ordspeed;

namespace {
OrderedGraph K(int n) { return gen_basic(BasicKind::K, n); }
OrderedGraph E(int n) { return gen_basic(BasicKind::E, n); }

OrderedGraph star_alternating(int n) {  // vertex 1 adjacent to the even vertices
    std::vector<Edge> es;
    for (int v = 2; v <= n; v += 2) es.push_back({1, v});
    return make_graph(n, es);
}

bool certificate_valid(const OrderedGraph& g, int k, int ell, const Certificate& c) {
    if (c.partition) {
        if (c.witness) return false;
        if (c.partition->block_count() > 256ll * k * k * k * k) return false;
        int covered = 0;
        for (auto [a, b] : c.partition->blocks) {
            if (a != covered + 1) return false;
            covered = b;
            if (!is_l_homogeneous(g, {a, b}, ell)) return false;
        }
        return covered == g.order();
    }
    if (!c.witness) return false;
    OrderedGraph eff = c.complemented ? complement(g) : g;
    return validate_witness(eff, *c.witness) && witness_size(*c.witness) >= k;
}
}  // namespace

TEST_CASE("max_type1_k") {
    CHECK(max_type1_k(K(6)).k == 0);
    CHECK_FALSE(max_type1_k(K(6)).witness.has_value());
    CHECK(max_type1_k(E(6)).k == 0);
    DetectorResult r = max_type1_k(make_graph(5, {{1, 2}, {1, 4}}));
    CHECK(r.k == 2);
    REQUIRE(r.witness.has_value());
    const auto& w = std::get<Type1Witness>(*r.witness);
    CHECK(w.y == 1);
    CHECK(w.xs == std::vector<int>{2, 3, 4, 5});
    CHECK(w.y_left);  // y = 1 sits left of the xs
    CHECK(w.starts_with_edge);
    CHECK(validate_witness(make_graph(5, {{1, 2}, {1, 4}}), *r.witness));
}

TEST_CASE("max_type2_k") {
    CHECK(max_type2_k(K(5)).k == 0);
    CHECK(max_type2_k(E(5)).k == 0);
    DetectorResult r = max_type2_k(make_graph(4, {{1, 3}}));
    CHECK(r.k == 1);
    REQUIRE(r.witness.has_value());
    CHECK(validate_witness(make_graph(4, {{1, 3}}), *r.witness));
}

TEST_CASE("max_type3_k") {
    CHECK(max_type3_k(K(5), 1).k == 0);
    CHECK(max_type3_k(E(5), 2).k == 0);
    DetectorResult r = max_type3_k(make_graph(4, {{1, 2}}), 1);
    CHECK(r.k == 1);
    REQUIRE(r.witness.has_value());
    CHECK(validate_witness(make_graph(4, {{1, 2}}), *r.witness));
    CHECK_THROWS_AS(max_type3_k(K(3), 0), InputError);
}

TEST_CASE("detectors match brute force exhaustively at n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        uint64_t total = 1ull << (n * (n - 1) / 2);
        for (uint64_t mask = 0; mask < total; ++mask) {
            OrderedGraph g = oracles::graph_from_mask(n, mask);
            CHECK(max_type1_k(g).k == oracles::max_type1_bruteforce(g));
            CHECK(max_type2_k(g).k == oracles::max_type2_bruteforce(g));
            for (int ell = 1; ell <= 3; ++ell)
                CHECK(max_type3_k(g, ell).k == oracles::max_type3_bruteforce(g, ell));
        }
    }
}

TEST_CASE("detectors match brute force on random graphs up to n = 9") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 6 + trial % 4;
        OrderedGraph g = oracles::random_graph(rng, n, 0.3 + 0.4 * (trial % 3));
        CHECK(max_type1_k(g).k == oracles::max_type1_bruteforce(g));
        CHECK(max_type2_k(g).k == oracles::max_type2_bruteforce(g));
        for (int ell = 1; ell <= 3; ++ell)
            CHECK(max_type3_k(g, ell).k == oracles::max_type3_bruteforce(g, ell));
    }
}

TEST_CASE("detector witnesses validate and realize k") {
    std::mt19937 rng(32);
    for (int trial = 0; trial < 120; ++trial) {
        OrderedGraph g = oracles::random_graph(rng, 3 + trial % 8);
        for (const DetectorResult& r :
             {max_type1_k(g), max_type2_k(g), max_type3_k(g, 1 + trial % 3)}) {
            CHECK((r.k == 0) == !r.witness.has_value());
            if (r.witness) {
                CHECK(validate_witness(g, *r.witness));
                CHECK(witness_size(*r.witness) == r.k);
            }
        }
    }
}

TEST_CASE("witness monotonicity under embeddings") {
    // an embedding maps any witness of H to a witness of G
    std::mt19937 rng(33);
    for (int trial = 0; trial < 60; ++trial) {
        OrderedGraph g = oracles::random_graph(rng, 8);
        // H = induced on a random increasing subset
        std::vector<int> subset;
        for (int v = 1; v <= 8; ++v)
            if (rng() % 2) subset.push_back(v);
        if (subset.size() < 2) continue;
        OrderedGraph h = induced(g, subset);
        auto lift = [&](std::vector<int> vs) {
            for (int& v : vs) v = subset[static_cast<size_t>(v - 1)];
            return vs;
        };
        if (auto r = max_type1_k(h); r.witness) {
            Type1Witness w = std::get<Type1Witness>(*r.witness);
            w.y = subset[static_cast<size_t>(w.y - 1)];
            w.xs = lift(w.xs);
            CHECK(validate_witness(g, StructureWitness{w}));
            CHECK(max_type1_k(g).k >= r.k);
        }
        if (auto r = max_type2_k(h); r.witness) {
            StructureWitness lifted = *r.witness;
            if (auto* a = std::get_if<Type2aWitness>(&lifted)) {
                a->xs = lift(a->xs);
                a->ys = lift(a->ys);
            } else {
                auto& b = std::get<Type2bWitness>(lifted);
                b.xs = lift(b.xs);
                b.ys = lift(b.ys);
            }
            CHECK(validate_witness(g, lifted));
            CHECK(max_type2_k(g).k >= r.k);
        }
        if (auto r = max_type3_k(h, 2); r.witness) {
            Type3Witness w = std::get<Type3Witness>(*r.witness);
            w.xs = lift(w.xs);
            w.ys = lift(w.ys);
            // strictly increasing embeddings can only widen index gaps
            CHECK(validate_witness(g, StructureWitness{w}));
        }
    }
}

TEST_CASE("longest monotone subsequences") {
    {
        MonotoneResult r = longest_monotone({1, 2, 3});
        CHECK(r.increasing_indices.size() == 3);
        CHECK(r.decreasing_indices.size() == 1);
    }
    {
        MonotoneResult r = longest_monotone({3, 1, 2});
        CHECK(r.increasing_indices == std::vector<int>{1, 2});
        CHECK(r.decreasing_indices.size() == 2);
        CHECK(r.decreasing_indices[0] == 0);
    }
    {
        MonotoneResult r = longest_monotone({2, 4, 1, 3});
        CHECK(r.increasing_indices.size() == 2);
        CHECK(r.decreasing_indices.size() == 2);
    }
    CHECK_THROWS_AS(longest_monotone({1, 1}), InputError);

    // Erdos-Szekeres: length (r-1)^2 + 1 forces a monotone run of length r
    std::mt19937 rng(34);
    for (int r = 2; r <= 6; ++r) {
        int len = (r - 1) * (r - 1) + 1;
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<int> seq(static_cast<size_t>(len));
            for (int i = 0; i < len; ++i) seq[static_cast<size_t>(i)] = i + 1;
            std::shuffle(seq.begin(), seq.end(), rng);
            MonotoneResult m = longest_monotone(seq);
            CHECK((static_cast<int>(m.increasing_indices.size()) >= r ||
                   static_cast<int>(m.decreasing_indices.size()) >= r));
            // realizing index sets are genuinely monotone
            for (size_t i = 1; i < m.increasing_indices.size(); ++i)
                CHECK(seq[static_cast<size_t>(m.increasing_indices[i])] >
                      seq[static_cast<size_t>(m.increasing_indices[i - 1])]);
            for (size_t i = 1; i < m.decreasing_indices.size(); ++i)
                CHECK(seq[static_cast<size_t>(m.decreasing_indices[i])] <
                      seq[static_cast<size_t>(m.decreasing_indices[i - 1])]);
        }
    }
}

TEST_CASE("validate_witness rejects malformed witnesses") {
    OrderedGraph g = make_graph(5, {{1, 2}, {1, 4}});
    Type1Witness good = std::get<Type1Witness>(*max_type1_k(g).witness);
    CHECK(validate_witness(g, StructureWitness{good}));

    Type1Witness unsorted = good;
    std::swap(unsorted.xs[0], unsorted.xs[1]);
    CHECK_FALSE(validate_witness(g, StructureWitness{unsorted}));

    Type1Witness wrong_parity = good;
    wrong_parity.starts_with_edge = !wrong_parity.starts_with_edge;
    CHECK_FALSE(validate_witness(g, StructureWitness{wrong_parity}));

    Type1Witness wrong_side = good;
    wrong_side.y_left = !wrong_side.y_left;
    CHECK_FALSE(validate_witness(g, StructureWitness{wrong_side}));

    // Type 3 gap clause: y_1 - x_1 = ell - 1 fails
    OrderedGraph h = make_graph(6, {{1, 3}});
    Type3Witness t3;
    t3.ell = 3;
    t3.xs = {1, 4};
    t3.ys = {3, 6};
    CHECK_FALSE(validate_witness(h, StructureWitness{t3}));
    t3.ell = 2;
    CHECK(validate_witness(h, StructureWitness{t3}));

    Type2aWitness t2;
    t2.xs = {1, 2};
    t2.ys = {3, 4};
    CHECK(validate_witness(make_graph(4, {{1, 3}}), StructureWitness{t2}));
    t2.ys = {4, 3};  // not increasing
    CHECK_FALSE(validate_witness(make_graph(4, {{1, 3}}), StructureWitness{t2}));
    // odd-length witnesses are rejected
    Type2aWitness odd;
    odd.xs = {1};
    odd.ys = {3};
    CHECK_FALSE(validate_witness(make_graph(4, {{1, 3}}), StructureWitness{odd}));
}

TEST_CASE("certify: trivial hosts give one block") {
    for (const OrderedGraph& g : {E(20), K(20)}) {
        Certificate c = certify_partition(g, 1, 1);
        REQUIRE(c.partition.has_value());
        CHECK(c.partition->block_count() == 1);
        CHECK(certificate_valid(g, 1, 1, c));
    }
    Certificate c = certify_partition(E(9), 1, 2);
    CHECK(c.partition->block_count() == 1);
    CHECK_THROWS_AS(certify_partition(E(3), 0, 1), InputError);
    CHECK_THROWS_AS(certify_partition(E(3), 1, 0), InputError);
}

TEST_CASE("certify: star-alternating host yields a witness past the greedy bound") {
    OrderedGraph g = star_alternating(301);  // 301 greedy blocks > 256 = 256k^4 at k=1
    Certificate c = certify_partition(g, 1, 1);
    REQUIRE(c.witness.has_value());
    CHECK(certificate_valid(g, 1, 1, c));
    CHECK(max_type1_k(g).k >= 1);  // detector cross-check
}

TEST_CASE("certify: Type 1 branch on the star host at k = 2") {
    OrderedGraph g = star_alternating(301);
    CertifyOptions opts;
    opts.greedy_first = false;
    Certificate c = certify_partition(g, 2, 1, opts);
    REQUIRE(c.witness.has_value());
    CHECK(std::holds_alternative<Type1Witness>(*c.witness));
    CHECK(witness_size(*c.witness) == 2);
    CHECK(certificate_valid(g, 2, 1, c));
    CHECK(max_type1_k(g).k >= 2);
}

TEST_CASE("certify: Type 3 branch via the i-sequence") {
    // pairs (1,3),(4,6),(7,9),(10,12), edges on the odd-indexed pairs
    OrderedGraph g = make_graph(12, {{1, 3}, {7, 9}});
    CertifyOptions opts;
    opts.greedy_first = false;
    Certificate c = certify_partition(g, 2, 2, opts);
    REQUIRE(c.witness.has_value());
    CHECK(std::holds_alternative<Type3Witness>(*c.witness));
    const auto& w = std::get<Type3Witness>(*c.witness);
    CHECK(w.xs == std::vector<int>{1, 4, 7, 10});
    CHECK(w.ys == std::vector<int>{3, 6, 9, 12});
    CHECK(certificate_valid(g, 2, 2, c));
}

TEST_CASE("certify: Type 2(a) branch on a wide separated block") {
    // 2-complete block [4,516]; witnesses 518..645 on the right, each
    // distinguishing four consecutive block vertices
    int B = 516, n = 645;
    std::vector<Edge> es{{1, 3}};
    for (int a = 4; a <= B; ++a)
        for (int b = a + 2; b <= B; ++b) es.push_back({a, b});
    for (int t = 1; t <= 128; ++t) {
        es.push_back({4 * t + 1, 517 + t});
        es.push_back({4 * t + 3, 517 + t});
    }
    OrderedGraph g = make_graph(n, es);
    CertifyOptions opts;
    opts.greedy_first = false;
    Certificate c = certify_partition(g, 2, 2, opts);
    REQUIRE(c.witness.has_value());
    CHECK(std::holds_alternative<Type2aWitness>(*c.witness));
    CHECK(witness_size(*c.witness) == 2);
    CHECK(certificate_valid(g, 2, 2, c));
}

TEST_CASE("certify dichotomy on random graphs") {
    std::mt19937 rng(35);
    for (int trial = 0; trial < 250; ++trial) {
        int n = 2 + trial % 39;
        OrderedGraph g = oracles::random_graph(rng, n, 0.15 + 0.1 * (trial % 8));
        int k = 2 + trial % 2, ell = 1 + trial % 3;
        Certificate c = certify_partition(g, k, ell);
        CHECK(certificate_valid(g, k, ell, c));
        // the constructive path must close too
        CertifyOptions opts;
        opts.greedy_first = false;
        Certificate c2 = certify_partition(g, k, ell, opts);
        CHECK(certificate_valid(g, k, ell, c2));
    }
}

TEST_CASE("certify: complement flag set when (1, ell+1) is a non-edge") {
    // edgeless on [40]: (1,2) is a non-edge, so the proof path works on the
    // complement; the partition applies to the input either way
    CertifyOptions opts;
    opts.greedy_first = false;
    Certificate c = certify_partition(E(40), 3, 1, opts);
    REQUIRE(c.partition.has_value());
    CHECK(certificate_valid(E(40), 3, 1, c));
}
