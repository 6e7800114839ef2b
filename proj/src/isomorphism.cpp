#include "hextile/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>

namespace hextile {

namespace {

// per-vertex multiplicity-aware neighbor list: sorted (neighbor, multiplicity)
std::vector<std::vector<std::pair<VertexId, int>>> neighbor_mult(const Graph& g) {
    std::vector<std::vector<std::pair<VertexId, int>>> out(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        std::map<VertexId, int> m;
        for (auto [w, e] : g.incident(v)) ++m[w];
        out[v].assign(m.begin(), m.end());
    }
    return out;
}

// counts of simple cycles of length 6..8 through each vertex, a cheap
// relabel-invariant splitter for locally homogeneous graphs
std::vector<std::array<int, 3>> short_cycle_profile(const Graph& g) {
    std::vector<std::array<int, 3>> prof(g.vertex_count(), std::array<int, 3>{0, 0, 0});
    if (g.vertex_count() == 0) return prof;
    auto cycles = enumerate_cycles_upto(g, 8);
    for (const auto& c : cycles) {
        if (c.length() < 6) continue;
        int idx = c.length() - 6;
        for (VertexId v : c.vertices) prof[v][idx]++;
    }
    return prof;
}

std::vector<int> compress_keys(std::vector<std::pair<std::vector<long long>, int>>& keyed) {
    std::sort(keyed.begin(), keyed.end());
    std::vector<int> colors(keyed.size());
    int c = -1;
    const std::vector<long long>* prev = nullptr;
    for (auto& [key, v] : keyed) {
        if (!prev || key != *prev) {
            ++c;
            prev = &key;
        }
        colors[v] = c;
    }
    return colors;
}

std::vector<int> refine(const Graph& g, const std::vector<int>& dist,
                        const std::vector<std::vector<std::pair<VertexId, int>>>& nm) {
    int n = g.vertex_count();
    auto cyc = short_cycle_profile(g);
    std::vector<std::pair<std::vector<long long>, int>> keyed(n);
    for (VertexId v = 0; v < n; ++v) {
        std::vector<long long> key;
        key.push_back(g.degree(v));
        std::vector<int> row(dist.begin() + static_cast<size_t>(v) * n,
                             dist.begin() + static_cast<size_t>(v + 1) * n);
        std::sort(row.begin(), row.end());
        for (int d : row) key.push_back(d);
        for (int c : cyc[v]) key.push_back(c);
        keyed[v] = {std::move(key), v};
    }
    std::vector<int> colors = compress_keys(keyed);
    for (int round = 0; round < n; ++round) {
        std::vector<std::pair<std::vector<long long>, int>> next(n);
        for (VertexId v = 0; v < n; ++v) {
            std::vector<long long> key{colors[v]};
            std::vector<long long> ncols;
            for (auto [w, mult] : nm[v])
                for (int i = 0; i < mult; ++i) ncols.push_back(colors[w]);
            std::sort(ncols.begin(), ncols.end());
            key.insert(key.end(), ncols.begin(), ncols.end());
            next[v] = {std::move(key), v};
        }
        std::vector<int> nc = compress_keys(next);
        bool same_classes =
            n == 0 || (*std::max_element(nc.begin(), nc.end()) ==
                       *std::max_element(colors.begin(), colors.end()));
        bool identical = (nc == colors);
        colors = std::move(nc);
        if (identical || same_classes) break;
    }
    return colors;
}

struct GraphProfile {
    const Graph* g;
    int n;
    std::vector<int> dist;
    std::vector<std::vector<std::pair<VertexId, int>>> nm;
    std::vector<int> colors;

    explicit GraphProfile(const Graph& gr) : g(&gr), n(gr.vertex_count()) {
        dist = all_pairs_distances(gr);
        nm = neighbor_mult(gr);
        colors = refine(gr, dist, nm);
    }
};

struct IsoSearch {
    const GraphProfile& G;
    const GraphProfile& H;
    int n;
    std::vector<VertexId> order;   // G vertices in assignment order
    std::vector<VertexId> map_gh;  // G -> H or -1
    std::vector<VertexId> map_hg;  // H -> G or -1

    IsoSearch(const GraphProfile& gp, const GraphProfile& hp) : G(gp), H(hp), n(gp.n) {}

    bool feasible() const {
        if (G.n != H.n || G.g->edge_count() != H.g->edge_count()) return false;
        auto a = G.colors, b = H.colors;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        return a == b;
    }

    void build_order(std::optional<VertexId> root) {
        order.clear();
        std::vector<char> placed(n, 0);
        std::vector<int> link(n, 0);
        if (root) {
            placed[*root] = 1;
            order.push_back(*root);
            for (auto [w, mult] : G.nm[*root])
                if (w != *root) link[w]++;
        }
        while (static_cast<int>(order.size()) < n) {
            int best = -1;
            for (VertexId v = 0; v < n; ++v) {
                if (placed[v]) continue;
                if (best < 0 || link[v] > link[best] ||
                    (link[v] == link[best] && G.colors[v] < G.colors[best]) ||
                    (link[v] == link[best] && G.colors[v] == G.colors[best] && v < best))
                    best = v;
            }
            placed[best] = 1;
            order.push_back(best);
            for (auto [w, mult] : G.nm[best])
                if (!placed[w]) link[w]++;
        }
        map_gh.assign(n, -1);
        map_hg.assign(n, -1);
    }

    bool consistent(VertexId u, VertexId v, int depth) const {
        if (G.colors[u] != H.colors[v]) return false;
        if (G.g->degree(u) != H.g->degree(v)) return false;
        for (int i = 0; i < depth; ++i) {
            VertexId u2 = order[i], v2 = map_gh[order[i]];
            if (G.dist[static_cast<size_t>(u) * n + u2] !=
                H.dist[static_cast<size_t>(v) * n + v2])
                return false;
        }
        for (auto [w, mult] : G.nm[u]) {
            VertexId w2 = (w == u) ? v : map_gh[w];
            if (w2 < 0) continue;
            int hm = 0;
            for (auto [x, m2] : H.nm[v])
                if (x == w2) hm = m2;
            if (hm != mult) return false;
        }
        for (auto [x, mult] : H.nm[v]) {
            VertexId pre = (x == v) ? u : map_hg[x];
            if (pre < 0) continue;
            int gm = 0;
            for (auto [w, m2] : G.nm[u])
                if (w == pre) gm = m2;
            if (gm != mult) return false;
        }
        return true;
    }

    bool dfs(int depth) {
        if (depth == n) return true;
        VertexId u = order[depth];
        for (VertexId v = 0; v < n; ++v) {
            if (map_hg[v] >= 0 || !consistent(u, v, depth)) continue;
            map_gh[u] = v;
            map_hg[v] = u;
            if (dfs(depth + 1)) return true;
            map_gh[u] = -1;
            map_hg[v] = -1;
        }
        return false;
    }

    std::optional<std::vector<VertexId>> run(std::optional<std::pair<VertexId, VertexId>> forced) {
        if (!feasible()) return std::nullopt;
        if (n == 0) return std::vector<VertexId>{};
        build_order(forced ? std::optional<VertexId>(forced->first) : std::nullopt);
        if (forced) {
            if (!consistent(forced->first, forced->second, 0)) return std::nullopt;
            map_gh[forced->first] = forced->second;
            map_hg[forced->second] = forced->first;
            if (!dfs(1)) return std::nullopt;
            return map_gh;
        }
        if (!dfs(0)) return std::nullopt;
        return map_gh;
    }
};

}  // namespace

std::vector<int> refinement_colors(const Graph& g) {
    GraphProfile p(g);
    return p.colors;
}

std::optional<std::vector<VertexId>> isomorphic(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
        return std::nullopt;
    GraphProfile gp(g), hp(h);
    IsoSearch s(gp, hp);
    return s.run(std::nullopt);
}

std::vector<int> automorphism_orbits(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    auto unite = [&](int a, int b) {
        int ra = find(a), rb = find(b);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    };

    GraphProfile prof(g);
    for (VertexId w = 1; w < n; ++w) {
        VertexId rep = -1;
        for (VertexId v = 0; v < w; ++v)
            if (prof.colors[v] == prof.colors[w]) {
                rep = v;
                break;
            }
        if (rep < 0) continue;
        if (find(rep) == find(w)) continue;
        IsoSearch s(prof, prof);
        auto sigma = s.run(std::make_pair(rep, w));
        if (sigma)
            for (VertexId v = 0; v < n; ++v) unite(v, (*sigma)[v]);
    }
    std::vector<int> orbit(n, -1);
    int next = 0;
    for (VertexId v = 0; v < n; ++v) {
        int r = find(v);
        if (orbit[r] < 0) orbit[r] = next++;
        orbit[v] = orbit[r];
    }
    return orbit;
}

int orbit_count(const std::vector<int>& orbit_ids) {
    if (orbit_ids.empty()) return 0;
    return *std::max_element(orbit_ids.begin(), orbit_ids.end()) + 1;
}

}  // namespace hextile
