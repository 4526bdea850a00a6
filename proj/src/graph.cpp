#include "entloc/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <numeric>

#include "entloc/errors.hpp"

namespace entloc {

Graph::Graph(int n) : n_(n), adj_(n, n) {
    if (n < 0) throw contract_error("Graph: negative vertex count");
    if (n > kMaxVertices) throw capability_error("Graph: more than 62 vertices unsupported");
}

void Graph::add_edge(int a, int b) {
    if (a == b) throw contract_error("Graph: self-loops not allowed");
    if (a < 0 || b < 0 || a >= n_ || b >= n_) throw contract_error("Graph: vertex out of range");
    adj_.set(a, b, true);
    adj_.set(b, a, true);
}

void Graph::remove_edge(int a, int b) {
    adj_.set(a, b, false);
    adj_.set(b, a, false);
}

int Graph::degree(int v) const { return std::popcount(adj_.row(v)[0]); }

int Graph::num_edges() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

int Bipartition::n_a() const { return std::popcount(a_mask & full_mask()); }

std::vector<int> mask_to_indices(std::uint64_t mask, int n) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
        if ((mask >> i) & 1) idx.push_back(i);
    return idx;
}

Graph parse_graph6(std::string_view line) {
    // Strip one trailing newline; anything else past the payload is garbage.
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) throw parse_error("graph6: empty record", 0);
    const unsigned char header = static_cast<unsigned char>(line[0]);
    if (header < 63 || header >= 126) throw parse_error("graph6: header byte out of range", 0);
    if (header == 126) throw parse_error("graph6: long-form records unsupported", 0);
    const int n = header - 63;
    const int nbits = n * (n - 1) / 2;
    const std::size_t payload = (nbits + 5) / 6;
    if (line.size() < 1 + payload) throw parse_error("graph6: record too short", line.size());
    if (line.size() > 1 + payload) throw parse_error("graph6: trailing garbage", 1 + payload);

    Graph g(n);
    int bit = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            const std::size_t byte_pos = 1 + bit / 6;
            const unsigned char b = static_cast<unsigned char>(line[byte_pos]);
            if (b < 63 || b > 126) throw parse_error("graph6: payload byte out of range", byte_pos);
            const int v = b - 63;
            if ((v >> (5 - bit % 6)) & 1) g.add_edge(row, col);
        }
    }
    // Padding bits of the final byte must be zero.
    if (payload > 0) {
        const int pad = static_cast<int>(payload * 6) - nbits;
        const int last = static_cast<unsigned char>(line[payload]) - 63;
        if (pad > 0 && (last & ((1 << pad) - 1)) != 0)
            throw parse_error("graph6: nonzero padding bits", payload);
    }
    return g;
}

std::string emit_graph6(const Graph& g) {
    const int n = g.num_vertices();
    if (n >= 63) throw capability_error("emit_graph6: short form requires n < 63");
    const int nbits = n * (n - 1) / 2;
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    int bit = 0;
    int acc = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (bit % 6 == 5) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
            }
        }
    }
    if (nbits % 6 != 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits % 6))));
    return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open graph6 file: " + path);
    std::vector<Graph> graphs;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        graphs.push_back(parse_graph6(line));
    }
    return graphs;
}

std::pair<Gf2Matrix, Gf2Vector> gamma_and_d(const Graph& g, const Bipartition& bp) {
    const std::vector<int> a = mask_to_indices(bp.a_mask & bp.full_mask(), bp.n);
    const std::vector<int> b = mask_to_indices(bp.b_mask(), bp.n);
    Gf2Matrix gamma(static_cast<int>(b.size()), static_cast<int>(a.size()));
    Gf2Vector d(static_cast<int>(b.size()));
    for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j)
            if (g.has_edge(b[i], a[j])) gamma.set(static_cast<int>(i), static_cast<int>(j), true);
        const int deg_in_b = std::popcount(g.neighbors_in(b[i], bp.b_mask()));
        d.set(static_cast<int>(i), (deg_in_b & 1) == 0);
    }
    return {std::move(gamma), std::move(d)};
}

Graph sample_uniform(int n, Rng& rng) {
    if (n < 1) throw contract_error("sample_uniform: n must be >= 1");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.bit()) g.add_edge(i, j);
    return g;
}

namespace {

Graph sample_regular(int n, int k, Rng& rng) {
    if (k < 0 || k >= n || (std::int64_t(k) * n) % 2 != 0)
        throw contract_error("make_family: k-regular requires k < n and k*n even");
    // Pairing model: k stubs per vertex, uniform perfect matching, full
    // rejection of loops and multi-edges.
    std::vector<int> stubs(std::size_t(n) * k);
    for (int v = 0; v < n; ++v)
        for (int s = 0; s < k; ++s) stubs[std::size_t(v) * k + s] = v;
    for (;;) {
        for (std::size_t i = stubs.size(); i > 1; --i)
            std::swap(stubs[i - 1], stubs[rng.uniform_int(i)]);
        Graph g(n);
        bool ok = true;
        for (std::size_t i = 0; i + 1 < stubs.size() && ok; i += 2) {
            const int u = stubs[i], v = stubs[i + 1];
            if (u == v || g.has_edge(u, v))
                ok = false;
            else
                g.add_edge(u, v);
        }
        if (ok) return g;
    }
}

}  // namespace

Graph make_family(FamilyKind kind, int n, int k, Rng& rng) {
    switch (kind) {
        case FamilyKind::Path: {
            if (n < 1) throw contract_error("make_family: path requires n >= 1");
            Graph g(n);
            for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
            return g;
        }
        case FamilyKind::Cycle: {
            if (n < 3) throw contract_error("make_family: cycle requires n >= 3");
            Graph g(n);
            for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
            return g;
        }
        case FamilyKind::Complete: {
            if (n < 1) throw contract_error("make_family: complete requires n >= 1");
            Graph g(n);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
            return g;
        }
        case FamilyKind::RegularRandom:
            return sample_regular(n, k, rng);
    }
    throw contract_error("make_family: unknown family");
}

bool connected(const Graph& g) {
    const int n = g.num_vertices();
    if (n <= 1) return true;
    std::uint64_t seen = 1;
    std::uint64_t frontier = 1;
    const std::uint64_t all = (n >= 64) ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
    while (frontier != 0) {
        std::uint64_t next = 0;
        std::uint64_t f = frontier;
        while (f) {
            const int v = std::countr_zero(f);
            f &= f - 1;
            next |= g.neighbors_in(v, all);
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == all;
}

namespace {

// Serialized (A-subgraph, B-subgraph, cross-block) triple for a fixed vertex
// ordering of each side, packed to bytes.
std::string serialize_triple(const Graph& g, const std::vector<int>& a, const std::vector<int>& b) {
    std::string bits;
    bits.reserve(a.size() * a.size() + b.size() * b.size() + 2);
    int acc = 0, cnt = 0;
    auto put = [&](bool v) {
        acc = (acc << 1) | (v ? 1 : 0);
        if (++cnt == 8) {
            bits.push_back(static_cast<char>(acc));
            acc = 0;
            cnt = 0;
        }
    };
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) put(g.has_edge(a[i], a[j]));
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j) put(g.has_edge(b[i], b[j]));
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) put(g.has_edge(b[i], a[j]));
    if (cnt > 0) bits.push_back(static_cast<char>(acc << (8 - cnt)));
    return bits;
}

}  // namespace

std::string canonical_bipartition_key(const Graph& g, const Bipartition& bp) {
    if (g.num_vertices() > 10)
        throw capability_error("canonical_bipartition_key: n > 10 exceeds brute-force regime");
    std::vector<int> a = mask_to_indices(bp.a_mask & bp.full_mask(), bp.n);
    std::vector<int> b = mask_to_indices(bp.b_mask(), bp.n);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());

    std::string best;
    std::vector<int> pa = a;
    do {
        std::vector<int> pb = b;
        do {
            std::string key = serialize_triple(g, pa, pb);
            if (best.empty() || key < best) best = std::move(key);
        } while (std::next_permutation(pb.begin(), pb.end()));
    } while (std::next_permutation(pa.begin(), pa.end()));

    // Prefix with sizes so different shapes can never collide.
    std::string out;
    out.push_back(static_cast<char>(g.num_vertices()));
    out.push_back(static_cast<char>(a.size()));
    out += best;
    return out;
}

}  // namespace entloc
