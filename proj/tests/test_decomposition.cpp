#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ordspeed/decomposition.hpp"
#include "ordspeed/gen.hpp"

using namespace ordspeed;

namespace {
OrderedGraph K(int n) { return gen_basic(BasicKind::K, n); }
OrderedGraph E(int n) { return gen_basic(BasicKind::E, n); }
OrderedGraph Q1() { return gen_basic(BasicKind::Q1, 4); }

std::vector<std::pair<int, int>> blocks_of(const BlockPartition& p) { return p.blocks; }
}  // namespace

TEST_CASE("homogeneous blocks") {
    CHECK(blocks_of(homogeneous_blocks(K(3))) == std::vector<std::pair<int, int>>{{1, 3}});
    CHECK(blocks_of(homogeneous_blocks(make_graph(3, {{1, 2}}))) ==
          std::vector<std::pair<int, int>>{{1, 2}, {3, 3}});
    CHECK(blocks_of(homogeneous_blocks(E(6))) == std::vector<std::pair<int, int>>{{1, 6}});

    // maximality: merging two adjacent blocks violates ~_1
    std::mt19937 rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        OrderedGraph g = oracles::random_graph(rng, 2 + trial % 9);
        BlockPartition p = homogeneous_blocks(g);
        for (auto [a, b] : p.blocks) CHECK(is_l_homogeneous(g, {a, b}, 1));
        for (size_t i = 0; i + 1 < p.blocks.size(); ++i)
            CHECK_FALSE(is_l_homogeneous(g, {p.blocks[i].first, p.blocks[i + 1].second}, 1));
    }
}

TEST_CASE("block sequence") {
    CHECK(block_sequence(make_graph(5, {{1, 2}})).t == std::vector<int>{3, 2});
    CHECK(block_sequence(K(7)).t == std::vector<int>{7});
    CHECK(block_sequence(make_graph(3, {{1, 3}})).t == std::vector<int>{1, 1, 1});
    CHECK(block_sequence(K(3)).at(2) == 0);  // zero padding
}

TEST_CASE("l-homogeneous pairs and intervals") {
    OrderedGraph g = make_graph(4, {{1, 4}});
    CHECK(is_l_homogeneous(g, {2, 2}, 3));
    CHECK_FALSE(is_l_homogeneous(g, {1, 2}, 2));
    CHECK(is_l_homogeneous(E(6), {1, 6}, 2));
    CHECK(is_l_homogeneous(g, {2, 3}, 2));
    CHECK_THROWS_AS(is_l_homogeneous(g, {0, 2}, 1), InputError);
}

TEST_CASE("minimal ell-homogeneous partition") {
    CHECK(min_l_homogeneous_partition(E(9), 2).block_count() == 1);
    CHECK(blocks_of(min_l_homogeneous_partition(make_graph(4, {{1, 4}}), 2)) ==
          std::vector<std::pair<int, int>>{{1, 1}, {2, 3}, {4, 4}});
    CHECK(min_l_homogeneous_partition(K(5), 1).block_count() == 1);
}

TEST_CASE("greedy partition block count is minimal") {
    std::mt19937 rng(22);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 4 + trial % 9;  // up to 12
        OrderedGraph g = oracles::random_graph(rng, n);
        for (int ell = 1; ell <= 3; ++ell) {
            BlockPartition p = min_l_homogeneous_partition(g, ell);
            for (auto [a, b] : p.blocks) CHECK(is_l_homogeneous(g, {a, b}, ell));
            CHECK(p.block_count() == oracles::min_homog_blocks_bruteforce(g, ell));
        }
    }
    // exhaustively over all graphs on 4 vertices
    for (uint64_t mask = 0; mask < 64; ++mask) {
        OrderedGraph g = oracles::graph_from_mask(4, mask);
        for (int ell = 1; ell <= 3; ++ell)
            CHECK(min_l_homogeneous_partition(g, ell).block_count() ==
                  oracles::min_homog_blocks_bruteforce(g, ell));
    }
}

TEST_CASE("min partition at ell=1 matches homogeneous blocks") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        OrderedGraph g = oracles::random_graph(rng, 1 + trial % 10);
        CHECK(min_l_homogeneous_partition(g, 1).block_count() ==
              homogeneous_blocks(g).block_count());
    }
}

TEST_CASE("quotient graphs") {
    {
        OrderedGraph g = make_graph(3, {{1, 2}});
        LoopedOrderedGraph h = quotient(g, homogeneous_blocks(g));
        CHECK(h.order() == 2);
        CHECK(h.loop(1));
        CHECK_FALSE(h.loop(2));
        CHECK_FALSE(h.edge(1, 2));
    }
    {
        LoopedOrderedGraph h = quotient(K(4), homogeneous_blocks(K(4)));
        CHECK(h.order() == 1);
        CHECK(h.loop(1));
    }
    {
        LoopedOrderedGraph h = quotient(E(5), homogeneous_blocks(E(5)));
        CHECK(h.order() == 1);
        CHECK_FALSE(h.loop(1));
    }
    // non-1-homogeneous block is a contract violation
    BlockPartition bad;
    bad.ell = 1;
    bad.blocks = {{1, 3}};
    CHECK_THROWS_AS(quotient(make_graph(3, {{1, 2}}), bad), ContractViolation);

    // maximality reflected in the quotient: no two adjacent quotient vertices
    // are 1-homogeneous there
    std::mt19937 rng(24);
    for (int trial = 0; trial < 30; ++trial) {
        OrderedGraph g = oracles::random_graph(rng, 2 + trial % 8);
        BlockPartition p = homogeneous_blocks(g);
        LoopedOrderedGraph h = quotient(g, p);
        for (int i = 1; i < h.order(); ++i) {
            bool same_rows = true;
            for (int v = 1; v <= h.order() && same_rows; ++v) {
                if (v == i || v == i + 1) continue;
                same_rows = h.edge(i, v) == h.edge(i + 1, v);
            }
            bool identical = same_rows && h.loop(i) == h.loop(i + 1) && h.edge(i, i + 1) == h.loop(i);
            CHECK_FALSE(identical);
        }
    }
}

TEST_CASE("irreducible decomposition") {
    {
        IrreducibleDecomposition d = irreducible_decomposition(make_graph(4, {{1, 2}, {3, 4}}));
        CHECK(d.blocks == std::vector<std::pair<int, int>>{{1, 2}, {3, 4}});
        CHECK(d.sizes == std::vector<int>{2, 2});
    }
    CHECK(irreducible_decomposition(E(3)).blocks ==
          std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {3, 3}});
    CHECK(irreducible_decomposition(Q1()).blocks == std::vector<std::pair<int, int>>{{1, 4}});

    std::mt19937 rng(25);
    for (int trial = 0; trial < 60; ++trial) {
        OrderedGraph g = oracles::random_graph(rng, 1 + trial % 11, 0.3);
        IrreducibleDecomposition d = irreducible_decomposition(g);
        CHECK(sum(d.graphs) == g);
        for (const auto& block : d.graphs) CHECK(is_irreducible(block));
    }
}

TEST_CASE("is_irreducible") {
    CHECK(is_irreducible(E(1)));
    CHECK_FALSE(is_irreducible(E(2)));
    CHECK(is_irreducible(make_graph(3, {{1, 3}})));
    CHECK(is_irreducible(gen_basic(BasicKind::L, 5)));
    CHECK_FALSE(is_irreducible(make_graph(3, {{2, 3}})));  // isolated vertex 1
}

TEST_CASE("shrink_irreducible") {
    CHECK(shrink_irreducible(Q1(), 3) == make_graph(3, {{1, 3}}));
    CHECK(shrink_irreducible(K(4), 2) == K(2));
    CHECK(shrink_irreducible(Q1(), 4) == Q1());
    CHECK_THROWS_AS(shrink_irreducible(E(2), 1), ContractViolation);
    CHECK_THROWS_AS(shrink_irreducible(Q1(), 0), InputError);
    CHECK_THROWS_AS(shrink_irreducible(Q1(), 5), InputError);

    // every intermediate order stays irreducible
    std::mt19937 rng(26);
    int checked = 0;
    while (checked < 25) {
        OrderedGraph g = oracles::random_graph(rng, 6 + checked % 5, 0.4);
        if (!is_irreducible(g)) continue;
        ++checked;
        for (int k = 1; k <= g.order(); ++k) {
            OrderedGraph s = shrink_irreducible(g, k);
            CHECK(s.order() == k);
            CHECK(is_irreducible(s));
        }
    }
}

TEST_CASE("k-type graphs") {
    {
        auto [h, p] = k_type_graph(make_graph(5, {{1, 2}}), 1);
        CHECK(blocks_of(p) == std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {3, 5}});
        CHECK(h.order() == 3);
        CHECK(h.edge(1, 2));
        CHECK_FALSE(h.edge(1, 3));
        CHECK_FALSE(h.edge(2, 3));
        CHECK(h.loops().empty());
    }
    {
        auto [h, p] = k_type_graph(K(6), 1);
        CHECK(blocks_of(p) == std::vector<std::pair<int, int>>{{1, 6}});
        CHECK(h.order() == 1);
        CHECK(h.loop(1));
    }
    {
        OrderedGraph g = make_graph(3, {{1, 3}});
        auto [h, p] = k_type_graph(g, 3);
        CHECK(p.block_count() == 3);
        CHECK(h.order() == 3);
        CHECK(h.edge(1, 3));
        CHECK_FALSE(h.edge(1, 2));
    }
    // t_k = t_{k+1} is rejected, naming the tied sizes
    OrderedGraph tied = make_graph(4, {{1, 2}, {3, 4}});
    CHECK_THROWS_WITH_AS(k_type_graph(tied, 1), doctest::Contains("t_1 = t_2 = 2"),
                         ContractViolation);
}

TEST_CASE("companion graphs") {
    {
        BlockPartition p;
        p.ell = 2;
        p.blocks = {{1, 4}};
        OrderedGraph h = companion_graph(K(4), p);
        CHECK(h == K(4));
        CHECK(symmetric_difference(K(4), h) == E(4));
    }
    {
        BlockPartition p;
        p.ell = 2;
        p.blocks = {{1, 5}};
        CHECK(companion_graph(E(5), p) == E(5));
    }
    {
        OrderedGraph g = make_graph(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}});
        BlockPartition p;
        p.ell = 2;
        p.blocks = {{1, 2}, {3, 4}};
        OrderedGraph h = companion_graph(g, p);
        CHECK(h == g);  // the four cross edges
        CHECK(symmetric_difference(g, h) == E(4));
    }
    {
        BlockPartition bad;
        bad.ell = 2;
        bad.blocks = {{1, 4}};
        CHECK_THROWS_AS(companion_graph(make_graph(4, {{1, 4}}), bad), ContractViolation);
    }

    // G triangle H is ell-empty, and H is constant on the partition blocks
    std::mt19937 rng(27);
    for (int trial = 0; trial < 60; ++trial) {
        OrderedGraph g = oracles::random_graph(rng, 2 + trial % 10);
        int ell = 1 + trial % 3;
        BlockPartition p = min_l_homogeneous_partition(g, ell);
        OrderedGraph h = companion_graph(g, p);
        OrderedGraph diff = symmetric_difference(g, h);
        for (auto [u, v] : diff.edges()) CHECK(v - u < ell);
        CHECK(homogeneous_blocks(h).block_count() <= p.block_count());
    }
}

TEST_CASE("find_comparable_pair") {
    auto f = [](std::vector<uint64_t> b) { return BoundFunction{std::move(b)}; };
    CHECK(find_comparable_pair({f({1, 2}), f({2, 1}), f({2, 2})}) == std::pair{1, 3});
    CHECK_FALSE(find_comparable_pair({f({1, 2}), f({2, 1})}).has_value());
    CHECK(find_comparable_pair({f({kInfiniteBound, 1}), f({1, 1})}) == std::pair{2, 1});
    CHECK_THROWS_AS(find_comparable_pair({f({1, 2}), f({1})}), InputError);
    CHECK(f({kInfiniteBound, 1, 2}).infinite_set() == std::vector<int>{1});
    CHECK(f({kInfiniteBound, 1, 2}).above_one_set() == std::vector<int>{1, 3});
}
