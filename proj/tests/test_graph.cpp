#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "entloc/errors.hpp"
#include "entloc/graph.hpp"
#include "entloc/rng.hpp"

using namespace entloc;

namespace {

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if ((mask >> bit) & 1) g.add_edge(i, j);
    return g;
}

}  // namespace

TEST_CASE("graph6 decodes the hand-worked records") {
    const Graph k2 = parse_graph6("A_");
    CHECK(k2.num_vertices() == 2);
    CHECK(k2.has_edge(0, 1));

    const Graph one = parse_graph6("@");
    CHECK(one.num_vertices() == 1);
    CHECK(one.num_edges() == 0);

    const Graph k3 = parse_graph6("Bw");
    CHECK(k3.num_vertices() == 3);
    CHECK(k3.num_edges() == 3);

    // Trailing newline from file reads is tolerated.
    CHECK(parse_graph6("Bw\n") == k3);
}

TEST_CASE("graph6 rejects malformed records with a byte offset") {
    CHECK_THROWS_AS(parse_graph6(""), parse_error);
    CHECK_THROWS_AS(parse_graph6("B"), parse_error);      // missing payload
    CHECK_THROWS_AS(parse_graph6("Bww"), parse_error);    // trailing garbage
    CHECK_THROWS_AS(parse_graph6("B\x07"), parse_error);  // payload byte < 63
    CHECK_THROWS_AS(parse_graph6("\x20_"), parse_error);  // header byte < 63

    try {
        parse_graph6("Bww");
    } catch (const parse_error& e) {
        CHECK(e.offset == 2);
    }
}

TEST_CASE("graph6 round-trips every graph up to seven vertices") {
    for (int n = 1; n <= 7; ++n) {
        const int edge_bits = n * (n - 1) / 2;
        const std::uint64_t total = std::uint64_t(1) << edge_bits;
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            const Graph g = graph_from_edge_mask(n, mask);
            CHECK(parse_graph6(emit_graph6(g)) == g);
        }
    }
}

TEST_CASE("cross block and parity vector for the worked examples") {
    // Path on three vertices, measure the end.
    Graph path3(3);
    path3.add_edge(0, 1);
    path3.add_edge(1, 2);
    {
        const auto [gamma, d] = gamma_and_d(path3, {3, 0b001});
        REQUIRE(gamma.rows() == 2);
        REQUIRE(gamma.cols() == 1);
        CHECK(gamma.get(0, 0) == true);   // vertex 1 adjacent to 0
        CHECK(gamma.get(1, 0) == false);  // vertex 2 not adjacent to 0
        CHECK(d.get(0) == false);         // both B-degrees odd
        CHECK(d.get(1) == false);
    }
    // Star with the center measured: B has no internal edges.
    Graph star(3);
    star.add_edge(0, 1);
    star.add_edge(0, 2);
    {
        const auto [gamma, d] = gamma_and_d(star, {3, 0b001});
        CHECK(gamma.get(0, 0) == true);
        CHECK(gamma.get(1, 0) == true);
        CHECK(d.get(0) == true);  // degree 0 counts as even
        CHECK(d.get(1) == true);
    }
    // Edgeless graph: zero block, all-ones parity vector.
    const Graph empty5 = graph_from_edge_mask(5, 0);
    const auto [gamma, d] = gamma_and_d(empty5, {5, 0b00011});
    for (int r = 0; r < gamma.rows(); ++r) {
        CHECK(d.get(r) == true);
        for (int c = 0; c < gamma.cols(); ++c) CHECK(gamma.get(r, c) == false);
    }
}

TEST_CASE("cross block entries match per-entry adjacency lookup") {
    Rng rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 3 + static_cast<int>(rng.uniform_int(8));
        const Graph g = sample_uniform(n, rng);
        const std::uint64_t full = (std::uint64_t(1) << n) - 1;
        const std::uint64_t a_mask = 1 + rng.uniform_int(full - 1);
        const Bipartition bp{n, a_mask};
        const auto [gamma, d] = gamma_and_d(g, bp);
        const auto a = mask_to_indices(bp.a_mask, n);
        const auto b = mask_to_indices(bp.b_mask(), n);
        REQUIRE(gamma.rows() == static_cast<int>(b.size()));
        REQUIRE(gamma.cols() == static_cast<int>(a.size()));
        REQUIRE(d.len() == static_cast<int>(b.size()));
        for (std::size_t i = 0; i < b.size(); ++i) {
            int deg = 0;
            for (std::size_t j = 0; j < b.size(); ++j) deg += g.has_edge(b[i], b[j]) ? 1 : 0;
            CHECK(d.get(static_cast<int>(i)) == (deg % 2 == 0));
            for (std::size_t j = 0; j < a.size(); ++j)
                CHECK(gamma.get(static_cast<int>(i), static_cast<int>(j)) == g.has_edge(b[i], a[j]));
        }
    }
}

TEST_CASE("uniform sampler is seeded and calibrated") {
    Rng rng_a(99), rng_b(99);
    CHECK(sample_uniform(6, rng_a) == sample_uniform(6, rng_b));

    Rng one(5);
    CHECK(sample_uniform(1, one).num_edges() == 0);

    // Edge frequency over 10^4 draws at n = 5.
    Rng rng(123);
    const int samples = 10000;
    std::map<std::pair<int, int>, int> counts;
    for (int s = 0; s < samples; ++s) {
        const Graph g = sample_uniform(5, rng);
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j)
                if (g.has_edge(i, j)) ++counts[{i, j}];
    }
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            const double freq = counts[{i, j}] / static_cast<double>(samples);
            CHECK(freq == doctest::Approx(0.5).epsilon(0.04));  // 0.5 +- 0.02
        }
}

TEST_CASE("families have their defining shapes") {
    Rng rng(7);
    const Graph p4 = make_family(FamilyKind::Path, 4, 0, rng);
    CHECK(p4.num_edges() == 3);
    CHECK(p4.has_edge(0, 1));
    CHECK(p4.has_edge(1, 2));
    CHECK(p4.has_edge(2, 3));

    const Graph k3 = make_family(FamilyKind::Complete, 3, 0, rng);
    CHECK(k3.num_edges() == 3);

    const Graph c5 = make_family(FamilyKind::Cycle, 5, 0, rng);
    CHECK(c5.num_edges() == 5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Rng r(seed);
        const Graph reg = make_family(FamilyKind::RegularRandom, 16, 4, r);
        for (int v = 0; v < 16; ++v) CHECK(reg.degree(v) == 4);
    }

    CHECK_THROWS_AS(make_family(FamilyKind::Cycle, 2, 0, rng), contract_error);
    CHECK_THROWS_AS(make_family(FamilyKind::RegularRandom, 5, 3, rng), contract_error);
}

TEST_CASE("connectivity by reachability") {
    Rng rng(3);
    CHECK(connected(make_family(FamilyKind::Complete, 3, 0, rng)));
    CHECK(connected(make_family(FamilyKind::Path, 10, 0, rng)));
    CHECK(!connected(graph_from_edge_mask(2, 0)));
}

TEST_CASE("bipartition keys identify color-preserving isomorphism") {
    // Three vertices, A = {0}. The two one-edge graphs touching A are the
    // same experiment; the edge inside B is a different one.
    Graph edge_a1(3), edge_a2(3), edge_bb(3);
    edge_a1.add_edge(0, 1);
    edge_a2.add_edge(0, 2);
    edge_bb.add_edge(1, 2);
    const Bipartition bp{3, 0b001};
    CHECK(canonical_bipartition_key(edge_a1, bp) == canonical_bipartition_key(edge_a2, bp));
    CHECK(canonical_bipartition_key(edge_a1, bp) != canonical_bipartition_key(edge_bb, bp));
    CHECK(canonical_bipartition_key(edge_bb, bp) == canonical_bipartition_key(edge_bb, bp));

    Graph big(11);
    CHECK_THROWS_AS(canonical_bipartition_key(big, Bipartition{11, 1}), capability_error);
}

TEST_CASE("key multiplicities over all three-vertex graphs") {
    // With A = {0}: the structure with one B-internal edge occupies 1 of the
    // 8 equally likely graphs; the A-to-B single-edge structure occupies 2.
    const Bipartition bp{3, 0b001};
    std::map<std::string, int> multiplicity;
    for (std::uint64_t mask = 0; mask < 8; ++mask)
        ++multiplicity[canonical_bipartition_key(graph_from_edge_mask(3, mask), bp)];

    Graph edge_bb(3), edge_ab(3);
    edge_bb.add_edge(1, 2);
    edge_ab.add_edge(0, 1);
    CHECK(multiplicity[canonical_bipartition_key(edge_bb, bp)] == 1);
    CHECK(multiplicity[canonical_bipartition_key(edge_ab, bp)] == 2);
}
