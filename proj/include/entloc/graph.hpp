#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "entloc/gf2.hpp"
#include "entloc/rng.hpp"

namespace entloc {

// Simple undirected graph; symmetric bit-packed adjacency, zero diagonal.
// Vertices are 0-indexed throughout (1-indexed labels map by subtracting one).
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int num_vertices() const { return n_; }
    bool has_edge(int a, int b) const { return adj_.get(a, b); }
    void add_edge(int a, int b);
    void remove_edge(int a, int b);
    int degree(int v) const;
    int num_edges() const;

    // Adjacency of v against a vertex mask; n <= 64 always holds here.
    std::uint64_t neighbors_in(int v, std::uint64_t mask) const { return adj_.row(v)[0] & mask; }

    const Gf2Matrix& adjacency() const { return adj_; }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

    static constexpr int kMaxVertices = 62;  // graph6 short form ceiling

private:
    int n_ = 0;
    Gf2Matrix adj_;
};

// Disjoint (A, B) split of qubit indices; A is the measured side. B is the
// complement of a_mask within {0,...,n-1}.
struct Bipartition {
    int n = 0;
    std::uint64_t a_mask = 0;

    std::uint64_t full_mask() const { return n >= 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1; }
    std::uint64_t b_mask() const { return ~a_mask & full_mask(); }
    int n_a() const;
    int n_b() const { return n - n_a(); }
};

// Ascending vertex indices selected by a bitmask.
std::vector<int> mask_to_indices(std::uint64_t mask, int n);

// Parses one short-form graph6 record (n < 63): header byte chr(63+n), then
// ceil(n(n-1)/2 / 6) payload bytes of upper-triangle bits, column-major over
// pairs (0,1),(0,2),(1,2),(0,3),..., 6 bits per byte, each offset by 63.
// Throws parse_error naming the offending byte offset.
Graph parse_graph6(std::string_view line);

// Inverse of parse_graph6; emits the canonical short-form record.
std::string emit_graph6(const Graph& g);

// Reads newline-delimited graph6 records from a file.
std::vector<Graph> read_graph6_file(const std::string& path);

// Builds the |B| x |A| cross-adjacency block and the parity vector D, both
// under ascending-index ordering of A and B. D[b] = 1 iff b has even degree
// (zero counts as even) in the subgraph induced on B.
std::pair<Gf2Matrix, Gf2Vector> gamma_and_d(const Graph& g, const Bipartition& bp);

// Each of the n(n-1)/2 possible edges present independently with prob 1/2.
Graph sample_uniform(int n, Rng& rng);

enum class FamilyKind { Path, Cycle, Complete, RegularRandom };

// Deterministic families plus pairing-model random regular graphs (full
// rejection of loops and multi-edges). Throws contract_error on infeasible
// parameters (cycle needs n >= 3; k-regular needs k < n and k*n even).
Graph make_family(FamilyKind kind, int n, int k, Rng& rng);

bool connected(const Graph& g);

// Canonical byte-string for (g, bp) under color-preserving isomorphism:
// minimizes the serialized (A-subgraph, B-subgraph, cross-block) adjacency
// triple over all |A|! * |B|! permutations. Keys are equal iff the
// bipartitioned graphs are isomorphic with A mapped to A and B to B.
// Brute-force regime: throws capability_error when g.n > 10.
std::string canonical_bipartition_key(const Graph& g, const Bipartition& bp);

}  // namespace entloc
