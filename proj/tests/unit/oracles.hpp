// Independent reference implementations used only by the tests. Everything
// here is deliberately naive: exhaustive subsets, plain permutations.
#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ohg/core.hpp"
#include "ohg/states.hpp"

namespace oracle {

using Mask = std::uint32_t;

inline std::vector<Mask> context_masks(const ohg::Hypergraph& h) {
    std::vector<Mask> out;
    for (const auto& ctx : h.contexts()) {
        Mask m = 0;
        for (auto v : ctx) m |= Mask{1} << v;
        out.push_back(m);
    }
    return out;
}

/// All subsets with exactly one vertex per context; bit v = vertex v.
inline std::set<Mask> brute_states(const ohg::Hypergraph& h) {
    const std::size_t n = h.vertex_count();
    const auto ctx = context_masks(h);
    std::set<Mask> out;
    for (Mask s = 0; s < (Mask{1} << n); ++s) {
        bool ok = true;
        for (Mask c : ctx)
            if (std::popcount(s & c) != 1) {
                ok = false;
                break;
            }
        if (ok) out.insert(s);
    }
    return out;
}

/// Rows of a table whose columns follow the vertex order of `h`.
inline std::set<Mask> table_masks(const ohg::TravisMatrix& t) {
    std::set<Mask> out;
    for (std::size_t r = 0; r < t.row_count(); ++r) {
        Mask m = 0;
        for (std::size_t c = 0; c < t.column_count(); ++c)
            if (t.at(r, c)) m |= Mask{1} << c;
        out.insert(m);
    }
    return out;
}

/// Pairs of vertices sharing a context.
inline std::vector<Mask> adjacency(const ohg::Hypergraph& h) {
    std::vector<Mask> adj(h.vertex_count(), 0);
    for (const auto& ctx : h.contexts())
        for (auto a : ctx)
            for (auto b : ctx)
                if (a != b) adj[a] |= Mask{1} << b;
    return adj;
}

inline bool is_clique(const std::vector<Mask>& adj, Mask s) {
    for (std::size_t v = 0; v < adj.size(); ++v)
        if ((s >> v) & 1)
            if ((s & ~(Mask{1} << v) & ~adj[v]) != 0) return false;
    return true;
}

/// Inclusion-maximal cliques by checking every subset.
inline std::set<std::vector<ohg::VertexId>> brute_max_cliques(const std::vector<Mask>& adj) {
    const std::size_t n = adj.size();
    std::set<std::vector<ohg::VertexId>> out;
    for (Mask s = 1; s < (Mask{1} << n); ++s) {
        if (!is_clique(adj, s)) continue;
        bool maximal = true;
        for (std::size_t v = 0; v < n && maximal; ++v)
            if (!((s >> v) & 1) && is_clique(adj, s | (Mask{1} << v))) maximal = false;
        if (!maximal) continue;
        std::vector<ohg::VertexId> c;
        for (std::size_t v = 0; v < n; ++v)
            if ((s >> v) & 1) c.push_back(static_cast<ohg::VertexId>(v));
        out.insert(c);
    }
    return out;
}

/// Smallest k admitting a proper colouring, by plain backtracking.
inline std::size_t brute_chromatic(const std::vector<Mask>& adj) {
    const std::size_t n = adj.size();
    if (n == 0) return 0;
    std::vector<int> color(n, -1);
    for (std::size_t k = 1;; ++k) {
        auto place = [&](auto&& self, std::size_t v) -> bool {
            if (v == n) return true;
            for (int c = 0; c < static_cast<int>(k); ++c) {
                bool ok = true;
                for (std::size_t u = 0; u < v; ++u)
                    if (((adj[v] >> u) & 1) && color[u] == c) ok = false;
                if (!ok) continue;
                color[v] = c;
                if (self(self, v + 1)) return true;
            }
            color[v] = -1;
            return false;
        };
        if (place(place, 0)) return k;
    }
}

inline std::set<std::set<std::string>> named_family(const ohg::Hypergraph& h) {
    std::set<std::set<std::string>> out;
    for (const auto& ctx : h.named_contexts()) out.emplace(ctx.begin(), ctx.end());
    return out;
}

/// Isomorphism by trying every vertex permutation (small inputs only).
inline bool brute_isomorphic(const ohg::Hypergraph& a, const ohg::Hypergraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.context_count() != b.context_count()) return false;
    std::set<std::vector<ohg::VertexId>> target;
    for (const auto& c : b.sorted_contexts()) target.insert(c);
    std::vector<ohg::VertexId> perm(a.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (const auto& c : a.contexts()) {
            std::vector<ohg::VertexId> img;
            for (auto v : c) img.push_back(perm[v]);
            std::sort(img.begin(), img.end());
            if (!target.count(img)) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Context 4-cycles as sorted quadruples of context indices, each found by
/// trying every ordered quadruple and every choice of linking vertices.
inline std::set<std::array<std::size_t, 4>> brute_four_cycles(const ohg::Hypergraph& h) {
    const auto& ctx = h.sorted_contexts();
    const std::size_t m = ctx.size();
    auto common = [&](std::size_t i, std::size_t j) {
        std::vector<ohg::VertexId> out;
        for (auto v : ctx[i])
            if (std::find(ctx[j].begin(), ctx[j].end(), v) != ctx[j].end()) out.push_back(v);
        return out;
    };
    std::set<std::array<std::size_t, 4>> out;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t c = 0; c < m; ++c)
                for (std::size_t d = 0; d < m; ++d) {
                    std::set<std::size_t> distinct{a, b, c, d};
                    if (distinct.size() != 4) continue;
                    bool found = false;
                    for (auto x : common(a, b))
                        for (auto y : common(b, c))
                            for (auto z : common(c, d))
                                for (auto w : common(d, a))
                                    if (std::set<ohg::VertexId>{x, y, z, w}.size() == 4) found = true;
                    if (!found) continue;
                    // canonical: rotate so the smallest is first, then pick the
                    // direction with the smaller second element
                    std::array<std::size_t, 4> cyc{a, b, c, d};
                    auto k = std::min_element(cyc.begin(), cyc.end()) - cyc.begin();
                    std::rotate(cyc.begin(), cyc.begin() + k, cyc.end());
                    if (cyc[1] > cyc[3]) std::swap(cyc[1], cyc[3]);
                    out.insert(cyc);
                }
    return out;
}

/// A random pasting of 3-element contexts: each new context reuses one or
/// two existing vertices (never two that already share a context), so any
/// two contexts meet in at most one vertex.
inline ohg::Hypergraph random_pasting(std::mt19937& rng, std::size_t max_vertices = 18,
                                      std::size_t max_contexts = 9) {
    std::vector<std::vector<int>> contexts{{0, 1, 2}};
    int next = 3;
    std::uniform_int_distribution<std::size_t> want(2, max_contexts);
    const std::size_t target = want(rng);
    auto together = [&](int x, int y) {
        for (const auto& c : contexts)
            if (std::count(c.begin(), c.end(), x) && std::count(c.begin(), c.end(), y)) return true;
        return false;
    };
    for (int attempt = 0; attempt < 200 && contexts.size() < target; ++attempt) {
        std::uniform_int_distribution<int> share_d(1, 2);
        const int share = share_d(rng);
        if (next + (3 - share) > static_cast<int>(max_vertices)) continue;
        std::uniform_int_distribution<int> pick(0, next - 1);
        std::vector<int> c{pick(rng)};
        if (share == 2) {
            int y = pick(rng);
            if (y == c[0] || together(c[0], y)) continue;
            c.push_back(y);
        }
        while (c.size() < 3) c.push_back(next + static_cast<int>(c.size()) - share);
        std::vector<int> sorted = c;
        std::sort(sorted.begin(), sorted.end());
        bool dup = false;
        for (auto s : contexts) {
            std::sort(s.begin(), s.end());
            if (s == sorted) dup = true;
        }
        if (dup) continue;
        next += 3 - share;
        contexts.push_back(c);
    }
    std::vector<std::vector<std::string>> named;
    for (const auto& c : contexts) {
        auto& n = named.emplace_back();
        for (int v : c) n.push_back("p" + std::to_string(v));
    }
    return ohg::Hypergraph::build(named);
}

}  // namespace oracle
