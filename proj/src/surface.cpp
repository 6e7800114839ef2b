#include "hextile/surface.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <deque>
#include <limits>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace hextile {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

int mod3(int x) { return ((x % 3) + 3) % 3; }

// ---- 2-path indexing ----------------------------------------------------
// For a cubic graph: per vertex the 3 incident edges a<b<c give pair slots
// (a,b)=0, (a,c)=1, (b,c)=2; the 2-path id is 3*mid + slot.

struct TwoPathIndex {
    std::vector<std::array<EdgeId, 3>> inc;  // sorted incident edges per vertex

    explicit TwoPathIndex(const Graph& g) : inc(g.vertex_count()) {
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            std::array<EdgeId, 3> es{};
            int i = 0;
            for (auto [w, e] : g.incident(v)) es[i++] = e;
            std::sort(es.begin(), es.end());
            inc[v] = es;
        }
    }

    int id(VertexId mid, EdgeId e1, EdgeId e2) const {
        if (e1 > e2) std::swap(e1, e2);
        const auto& es = inc[mid];
        int slot;
        if (e1 == es[0]) slot = (e2 == es[1]) ? 0 : 1;
        else slot = 2;
        return 3 * mid + slot;
    }

    TwoPath decode(const Graph& g, int tp) const {
        VertexId mid = tp / 3;
        int slot = tp % 3;
        const auto& es = inc[mid];
        switch (slot) {
            case 0: return {mid, es[0], es[1]};
            case 1: return {mid, es[0], es[2]};
            default: return {mid, es[1], es[2]};
        }
    }
};

std::array<int, 6> covered_two_paths(const TwoPathIndex& tpi, const Cycle& c) {
    std::array<int, 6> out{};
    int len = c.length();
    for (int j = 0; j < len; ++j) {
        EdgeId prev = c.edges[(j + len - 1) % len];
        EdgeId next = c.edges[j];
        out[j] = tpi.id(c.vertices[j], prev, next);
    }
    return out;
}

// ---- deterministic exact cover -------------------------------------------

struct ExactCover {
    int n_cols;
    const std::vector<std::array<int, 6>>& rows;
    std::vector<std::vector<int>> col_rows;  // rows covering each column
    std::vector<int> col_cover;              // chosen row covering column, or -1
    std::vector<int> chosen;
    std::vector<std::vector<int>> solutions;
    int limit;

    ExactCover(int cols, const std::vector<std::array<int, 6>>& rws, int lim)
        : n_cols(cols), rows(rws), col_rows(cols), col_cover(cols, -1), limit(lim) {
        for (int r = 0; r < static_cast<int>(rows.size()); ++r)
            for (int c : rows[r]) col_rows[c].push_back(r);
    }

    bool row_free(int r) const {
        for (int c : rows[r])
            if (col_cover[c] >= 0) return false;
        return true;
    }

    bool solve() {
        int best_col = -1, best_count = kInf;
        for (int c = 0; c < n_cols; ++c) {
            if (col_cover[c] >= 0) continue;
            int cnt = 0;
            for (int r : col_rows[c])
                if (row_free(r)) ++cnt;
            if (cnt < best_count) {
                best_count = cnt;
                best_col = c;
                if (cnt == 0) break;
            }
        }
        if (best_col < 0) {
            solutions.push_back(chosen);
            return static_cast<int>(solutions.size()) >= limit;
        }
        if (best_count == 0) return false;
        for (int r : col_rows[best_col]) {
            if (!row_free(r)) continue;
            for (int c : rows[r]) col_cover[c] = r;
            chosen.push_back(r);
            bool done = solve();
            chosen.pop_back();
            for (int c : rows[r]) col_cover[c] = -1;
            if (done) return true;
        }
        return false;
    }
};

// ---- shared construction helper ------------------------------------------

// Builds edge_cells and validates the tiling structure over the given cell
// collection. Throws std::logic_error on structural violation.
HexTiling finalize_tiling(Graph graph, std::vector<Cycle> cells) {
    HexTiling t;
    t.graph = std::move(graph);
    std::sort(cells.begin(), cells.end());
    t.cells = std::move(cells);
    int n = t.graph.vertex_count();
    int m = t.graph.edge_count();
    if (static_cast<int>(t.cells.size()) != n / 2)
        throw std::logic_error("tiling: cell count != n/2");
    t.edge_cells.assign(m, {-1, -1});
    for (int ci = 0; ci < static_cast<int>(t.cells.size()); ++ci) {
        for (EdgeId e : t.cells[ci].edges) {
            auto& slot = t.edge_cells[e];
            if (slot[0] < 0) slot[0] = ci;
            else if (slot[1] < 0) slot[1] = ci;
            else throw std::logic_error("tiling: edge in more than two cells");
        }
    }
    for (EdgeId e = 0; e < m; ++e)
        if (t.edge_cells[e][1] < 0) throw std::logic_error("tiling: edge not in two cells");
    TwoPathIndex tpi(t.graph);
    std::vector<int> cover(3 * n, 0);
    for (const auto& c : t.cells)
        for (int tp : covered_two_paths(tpi, c)) cover[tp]++;
    for (int tp = 0; tp < 3 * n; ++tp)
        if (cover[tp] != 1) throw std::logic_error("tiling: 2-path not covered exactly once");
    return t;
}

}  // namespace

CertifyResult certify_tiling(const Graph& g) {
    auto reject = [](std::string why) { return CertifyResult{std::nullopt, std::move(why)}; };
    int n = g.vertex_count();
    if (n == 0) return reject("empty graph");
    if (!g.is_connected()) return reject("not connected");
    if (g.has_loop() || g.has_parallel_edges()) return reject("not simple");
    for (VertexId v = 0; v < n; ++v)
        if (g.degree(v) != 3)
            return reject("not cubic: vertex " + std::to_string(v) + " has degree " +
                          std::to_string(g.degree(v)));
    auto gr = girth(g);
    if (!gr) return reject("acyclic");
    if (*gr != 6) return reject("girth is " + std::to_string(*gr) + ", not 6");

    auto sixes = enumerate_cycles_upto(g, 6);
    TwoPathIndex tpi(g);
    std::vector<std::array<int, 6>> rows(sixes.size());
    std::vector<int> cover(3 * n, 0);
    for (size_t i = 0; i < sixes.size(); ++i) {
        rows[i] = covered_two_paths(tpi, sixes[i]);
        for (int tp : rows[i]) cover[tp]++;
    }
    std::optional<TwoPath> witness;
    for (int tp = 0; tp < 3 * n; ++tp) {
        if (cover[tp] == 0) {
            auto w = tpi.decode(g, tp);
            return reject("2-path at vertex " + std::to_string(w.mid) + " (edges " +
                          std::to_string(w.e1) + "," + std::to_string(w.e2) +
                          ") lies in no 6-cycle");
        }
        if (cover[tp] > 1 && !witness) witness = tpi.decode(g, tp);
    }

    std::vector<Cycle> cells;
    bool searched = false;
    if (!witness) {
        cells = sixes;
    } else {
        ExactCover ec(3 * n, rows, 1);
        ec.solve();
        if (ec.solutions.empty()) {
            auto& w = *witness;
            return reject("no 6-cycle collection covers every 2-path exactly once (first "
                          "over-covered 2-path at vertex " +
                          std::to_string(w.mid) + ")");
        }
        for (int r : ec.solutions.front()) cells.push_back(sixes[r]);
        searched = true;
    }
    HexTiling t = finalize_tiling(g, std::move(cells));
    t.cover_searched = searched;
    t.ambiguity_witness = witness;
    return CertifyResult{std::move(t), ""};
}

std::vector<std::vector<int>> enumerate_cell_covers(const Graph& g, int limit) {
    auto sixes = enumerate_cycles_upto(g, 6);
    TwoPathIndex tpi(g);
    std::vector<std::array<int, 6>> rows(sixes.size());
    for (size_t i = 0; i < sixes.size(); ++i) rows[i] = covered_two_paths(tpi, sixes[i]);
    ExactCover ec(3 * g.vertex_count(), rows, limit);
    ec.solve();
    return ec.solutions;
}

OrientationResult orientation_signs(const HexTiling& t) {
    int f = t.cell_count();
    // For each edge: do its two cells traverse it in opposite directions?
    // Constraint sign[c1]*sign[c2] = +1 if opposite, -1 if same.
    std::vector<std::vector<std::pair<int, int>>> constraints(f);  // (other cell, parity)
    std::vector<int8_t> traverse_dir(t.graph.edge_count() * 2, 0);
    auto dir_in_cell = [&](int ci, EdgeId e) {
        const Cycle& c = t.cells[ci];
        int len = c.length();
        for (int j = 0; j < len; ++j)
            if (c.edges[j] == e) {
                VertexId from = c.vertices[j];
                return from == t.graph.edge(e).first ? +1 : -1;
            }
        throw std::logic_error("orientation: edge not in cell");
    };
    for (EdgeId e = 0; e < t.graph.edge_count(); ++e) {
        auto [c1, c2] = t.edge_cells[e];
        int parity = dir_in_cell(c1, e) != dir_in_cell(c2, e) ? +1 : -1;
        constraints[c1].push_back({c2, parity});
        constraints[c2].push_back({c1, parity});
    }
    OrientationResult res;
    std::vector<int8_t> sign(f, 0);
    std::vector<int> par(f, -1), par_edge_cell(f, -1);
    sign[0] = 1;
    std::deque<int> q{0};
    while (!q.empty()) {
        int c = q.front();
        q.pop_front();
        for (auto [d, parity] : constraints[c]) {
            int8_t want = static_cast<int8_t>(sign[c] * parity);
            if (sign[d] == 0) {
                sign[d] = want;
                par[d] = c;
                q.push_back(d);
            } else if (sign[d] != want) {
                // conflict: report the cell-flip cycle via BFS-forest paths
                std::vector<int> path_c, path_d;
                for (int x = c; x >= 0; x = par[x]) path_c.push_back(x);
                for (int x = d; x >= 0; x = par[x]) path_d.push_back(x);
                std::reverse(path_c.begin(), path_c.end());
                std::reverse(path_d.begin(), path_d.end());
                size_t common = 0;
                while (common + 1 < path_c.size() && common + 1 < path_d.size() &&
                       path_c[common + 1] == path_d[common + 1])
                    ++common;
                res.orientable = false;
                for (size_t i = common; i < path_c.size(); ++i) res.conflict_cells.push_back(path_c[i]);
                for (size_t i = path_d.size(); i-- > common + 1;) res.conflict_cells.push_back(path_d[i]);
                return res;
            }
        }
    }
    res.orientable = true;
    res.cell_sign = std::move(sign);
    return res;
}

// ---- homology ------------------------------------------------------------

namespace {

std::vector<long long> cycle_edge_vector(const Graph& g, const Cycle& c) {
    std::vector<long long> w(g.edge_count(), 0);
    int len = c.length();
    for (int j = 0; j < len; ++j) {
        EdgeId e = c.edges[j];
        VertexId from = c.vertices[j];
        w[e] += (g.edge(e).first == from) ? 1 : -1;
    }
    return w;
}

struct HomologyCtx {
    int n, e, f, rank1, r, rank2;
    IntMat Vinv1;                   // e x e
    IntMat U2;                      // r x r
    std::vector<long long> diag2;   // invariant factors of the cell-boundary image

    HomologyCtx(const Graph& g, const std::vector<Cycle>& cells) {
        n = g.vertex_count();
        e = g.edge_count();
        f = static_cast<int>(cells.size());
        IntMat d1(n, e);
        for (EdgeId ei = 0; ei < e; ++ei) {
            auto [u, v] = g.edge(ei);
            if (u == v) continue;
            d1.at(u, ei) -= 1;
            d1.at(v, ei) += 1;
        }
        auto s1 = smith_normal_form(std::move(d1));
        rank1 = s1.rank;
        r = e - rank1;
        Vinv1 = std::move(s1.Vinv);
        IntMat X(r, f);
        for (int ci = 0; ci < f; ++ci) {
            auto w = cycle_edge_vector(g, cells[ci]);
            auto y = mat_vec(Vinv1, w);
            for (int i = 0; i < rank1; ++i)
                if (y[i] != 0) throw std::logic_error("homology: cell boundary not a cycle");
            for (int i = 0; i < r; ++i) X.at(i, ci) = y[rank1 + i];
        }
        auto s2 = smith_normal_form(std::move(X));
        rank2 = s2.rank;
        U2 = std::move(s2.U);
        diag2 = std::move(s2.diag);
    }

    H1Class class_of(const Graph& g, const Cycle& c) const {
        auto w = cycle_edge_vector(g, c);
        auto yfull = mat_vec(Vinv1, w);
        for (int i = 0; i < rank1; ++i)
            if (yfull[i] != 0) throw std::invalid_argument("homology_class: not a cycle of the tiling");
        std::vector<long long> y(yfull.begin() + rank1, yfull.end());
        auto z = mat_vec(U2, y);
        H1Class out;
        for (int i = rank2; i < r; ++i) out.free_part.push_back(z[i]);
        for (int i = 0; i < rank2; ++i)
            if (diag2[i] > 1) {
                long long m = diag2[i];
                long long res = ((z[i] % m) + m) % m;
                out.torsion.push_back({res, m});
            }
        return out;
    }

    H1Shape shape() const {
        H1Shape s;
        s.rank = r - rank2;
        for (long long d : diag2)
            if (d > 1) s.torsion_moduli.push_back(d);
        return s;
    }
};

// ---- rotation system, edge signs, universal cover -------------------------

struct SurfaceData {
    const HexTiling* t;
    TwoPathIndex tpi;
    std::vector<int> cell_of_tp;             // 2-path id -> cell id
    std::vector<std::array<EdgeId, 3>> rot;  // per vertex, ascending edge ids
    std::vector<int8_t> lambda;              // per edge

    explicit SurfaceData(const HexTiling& tt) : t(&tt), tpi(tt.graph) {
        const Graph& g = tt.graph;
        cell_of_tp.assign(3 * g.vertex_count(), -1);
        for (int ci = 0; ci < tt.cell_count(); ++ci)
            for (int tp : covered_two_paths(tpi, tt.cells[ci])) cell_of_tp[tp] = ci;
        rot = tpi.inc;
        lambda.assign(g.edge_count(), 0);
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.edge(e);
            lambda[e] = (left_cell(u, e) != left_cell(v, e)) ? 1 : -1;
        }
    }

    int cell_at(VertexId v, EdgeId a, EdgeId b) const { return cell_of_tp[tpi.id(v, a, b)]; }

    // cell between e and the next edge in v's rotation
    int left_cell(VertexId v, EdgeId e) const {
        const auto& rv = rot[v];
        int i = (rv[0] == e) ? 0 : (rv[1] == e ? 1 : 2);
        return cell_at(v, e, rv[(i + 1) % 3]);
    }

    int edge_index_in_rot(VertexId v, EdgeId e) const {
        const auto& rv = rot[v];
        return (rv[0] == e) ? 0 : (rv[1] == e ? 1 : 2);
    }
};

// Honeycomb coordinates: vertex (r,c) in Z^2; horizontal edges always,
// vertical edge at (r,c)-(r+1,c) iff r+c is odd. Slots: 0 right, 1 left,
// 2 vertical.
inline uint64_t pack_coord(int r, int c) {
    return (static_cast<uint64_t>(static_cast<uint32_t>(r)) << 32) |
           static_cast<uint64_t>(static_cast<uint32_t>(c));
}

inline std::pair<int, int> slot_target(int r, int c, int slot) {
    switch (slot) {
        case 0: return {r, c + 1};
        case 1: return {r, c - 1};
        default: return ((r + c) & 1) ? std::make_pair(r + 1, c) : std::make_pair(r - 1, c);
    }
}

// ccw position of slot / slot at ccw position, by vertex parity
inline int ccw_pos_of_slot(int parity, int slot) {
    if (parity == 1) return slot;            // order 0,1,2
    return slot == 0 ? 0 : (slot == 2 ? 1 : 2);  // order 0,2,1
}
inline int slot_at_ccw(int parity, int pos) {
    if (parity == 1) return pos;
    return pos == 0 ? 0 : (pos == 1 ? 2 : 1);
}

struct Chart {
    VertexId base;
    int8_t k;
    int8_t flip;
    int dist;
};

struct Developed {
    std::unordered_map<uint64_t, Chart> chart;
    std::vector<uint64_t> order;  // BFS order of coords
};

struct DevWalker {
    const SurfaceData& sd;

    EdgeId edge_at_ccw(const Chart& ch, int pos) const {
        int idx = ch.flip ? mod3(ch.k - pos) : mod3(ch.k + pos);
        return sd.rot[ch.base][idx];
    }

    // step from coord (r,c) with chart ch along base edge e; returns
    // (new coord, new chart-without-dist)
    std::tuple<int, int, Chart> step(int r, int c, const Chart& ch, EdgeId e) const {
        int parity = (r + c) & 1;
        int idx = sd.edge_index_in_rot(ch.base, e);
        int pos = ch.flip ? mod3(ch.k - idx) : mod3(idx - ch.k);
        int slot = slot_at_ccw(parity, pos);
        auto [nr, nc] = slot_target(r, c, slot);
        int back_slot = slot == 2 ? 2 : 1 - slot;
        int nparity = (nr + nc) & 1;
        int tpos = ccw_pos_of_slot(nparity, back_slot);
        VertexId nv = sd.t->graph.other_end(e, ch.base);
        int8_t nflip = static_cast<int8_t>(ch.flip ^ (sd.lambda[e] < 0 ? 1 : 0));
        int nidx = sd.edge_index_in_rot(nv, e);
        int nk = nflip ? mod3(nidx + tpos) : mod3(nidx - tpos);
        Chart out{nv, static_cast<int8_t>(nk), nflip, ch.dist + 1};
        return {nr, nc, out};
    }

    // breadth-first development to the given radius; verifies chart
    // consistency on every revisit. If stop_at_base >= 0, stops as soon as a
    // non-origin lift of that base vertex appears and stores its distance in
    // *found_dist.
    Developed develop(VertexId root, int radius, int stop_at_base = -1,
                      int* found_dist = nullptr) const {
        Developed dev;
        Chart ch0{root, 0, 0, 0};
        dev.chart[pack_coord(0, 0)] = ch0;
        dev.order.push_back(pack_coord(0, 0));
        std::deque<std::tuple<int, int>> q{{0, 0}};
        if (found_dist) *found_dist = kInf;
        while (!q.empty()) {
            auto [r, c] = q.front();
            q.pop_front();
            Chart ch = dev.chart[pack_coord(r, c)];
            if (ch.dist >= radius) continue;
            for (EdgeId e : sd.rot[ch.base]) {
                auto [nr, nc, nch] = step(r, c, ch, e);
                uint64_t key = pack_coord(nr, nc);
                auto it = dev.chart.find(key);
                if (it != dev.chart.end()) {
                    if (it->second.base != nch.base || it->second.k != nch.k ||
                        it->second.flip != nch.flip)
                        throw std::logic_error("universal cover development inconsistent");
                    continue;
                }
                dev.chart.emplace(key, nch);
                dev.order.push_back(key);
                if (stop_at_base >= 0 && nch.base == stop_at_base) {
                    if (found_dist) *found_dist = nch.dist;
                    return dev;
                }
                q.push_back({nr, nc});
            }
        }
        return dev;
    }
};

}  // namespace

// ---- SurfaceContext -------------------------------------------------------

struct SurfaceContext::Impl {
    HexTiling t;
    SurfaceData sd;
    OrientationResult orient;

    std::unique_ptr<HomologyCtx> hom;

    // non-orientable extras
    std::unique_ptr<HexTiling> cover;
    std::unique_ptr<HomologyCtx> cover_hom;

    explicit Impl(const HexTiling& tt) : t(tt), sd(t), orient(orientation_signs(t)) {}

    const HomologyCtx& homology() {
        if (!hom) hom = std::make_unique<HomologyCtx>(t.graph, t.cells);
        return *hom;
    }

    VertexId lift_id(VertexId v, int sheet) const { return v + sheet * t.graph.vertex_count(); }

    void build_cover() {
        if (cover) return;
        const Graph& g = t.graph;
        int n = g.vertex_count();
        std::vector<std::pair<VertexId, VertexId>> edges;
        edges.reserve(2 * g.edge_count());
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.edge(e);
            int tshift = sd.lambda[e] < 0 ? 1 : 0;
            edges.push_back({lift_id(u, 0), lift_id(v, tshift)});
            edges.push_back({lift_id(u, 1), lift_id(v, 1 - tshift)});
        }
        Graph cg(2 * n, std::move(edges));
        // lift every cell twice
        std::vector<Cycle> ccells;
        for (const auto& cell : t.cells) {
            for (int sheet0 = 0; sheet0 < 2; ++sheet0) {
                Cycle lifted;
                int sheet = sheet0;
                for (int j = 0; j < cell.length(); ++j) {
                    VertexId a = cell.vertices[j];
                    EdgeId e = cell.edges[j];
                    lifted.vertices.push_back(lift_id(a, sheet));
                    int copy = (g.edge(e).first == a)
                                   ? sheet
                                   : (sheet ^ (sd.lambda[e] < 0 ? 1 : 0));
                    lifted.edges.push_back(2 * e + copy);
                    sheet ^= (sd.lambda[e] < 0 ? 1 : 0);
                }
                if (sheet != sheet0)
                    throw std::logic_error("double cover: cell lift did not close");
                // canonical rotation
                std::vector<VertexId> vs = lifted.vertices;
                Cycle canon = cycle_from_vertices(cg, vs);
                ccells.push_back(std::move(canon));
            }
        }
        cover = std::make_unique<HexTiling>(finalize_tiling(std::move(cg), std::move(ccells)));
        cover->cover_searched = t.cover_searched;
        cover_hom = std::make_unique<HomologyCtx>(cover->graph, cover->cells);
    }
};

SurfaceContext::SurfaceContext(const HexTiling& t) : impl_(std::make_unique<Impl>(t)) {}
SurfaceContext::~SurfaceContext() = default;
SurfaceContext::SurfaceContext(SurfaceContext&&) noexcept = default;
SurfaceContext& SurfaceContext::operator=(SurfaceContext&&) noexcept = default;

const HexTiling& SurfaceContext::tiling() const { return impl_->t; }
bool SurfaceContext::orientable() const { return impl_->orient.orientable; }
const OrientationResult& SurfaceContext::orientation() const { return impl_->orient; }

const std::vector<int8_t>& SurfaceContext::edge_orientation_signs() const {
    return impl_->sd.lambda;
}

bool SurfaceContext::cycle_preserves_orientation(const Cycle& c) const {
    int prod = 1;
    for (EdgeId e : c.edges) prod *= impl_->sd.lambda[e];
    return prod > 0;
}

H1Shape SurfaceContext::h1_shape() const { return impl_->homology().shape(); }

H1Class SurfaceContext::homology_class(const Cycle& c) const {
    return impl_->homology().class_of(impl_->t.graph, c);
}

const HexTiling& SurfaceContext::double_cover() const {
    if (orientable())
        throw std::invalid_argument("double_cover: tiling is orientable");
    impl_->build_cover();
    return *impl_->cover;
}

VertexId SurfaceContext::vertex_lift(VertexId v, int sheet) const {
    return impl_->lift_id(v, sheet);
}

VertexId SurfaceContext::project(VertexId cover_vertex) const {
    return cover_vertex % impl_->t.graph.vertex_count();
}

bool SurfaceContext::is_essential(const Cycle& c) const {
    if (orientable()) return !homology_class(c).is_zero();
    if (!cycle_preserves_orientation(c)) return true;
    impl_->build_cover();
    // lift the cycle to the orientation double cover, then test homology there
    const Graph& g = impl_->t.graph;
    Cycle lifted;
    int sheet = 0;
    for (int j = 0; j < c.length(); ++j) {
        VertexId a = c.vertices[j];
        EdgeId e = c.edges[j];
        lifted.vertices.push_back(impl_->lift_id(a, sheet));
        int copy = (g.edge(e).first == a) ? sheet : (sheet ^ (impl_->sd.lambda[e] < 0 ? 1 : 0));
        lifted.edges.push_back(2 * e + copy);
        sheet ^= (impl_->sd.lambda[e] < 0 ? 1 : 0);
    }
    if (sheet != 0) throw std::logic_error("is_essential: orientation-preserving lift did not close");
    return !impl_->cover_hom->class_of(impl_->cover->graph, lifted).is_zero();
}

namespace {

// distance from every developed coord to the nearest non-origin lift of the
// root, restricted to the developed ball
std::unordered_map<uint64_t, int> lift_distances(const Developed& dev) {
    std::unordered_map<uint64_t, int> dist;
    std::deque<std::pair<int, int>> q;
    VertexId root = dev.chart.at(pack_coord(0, 0)).base;
    for (uint64_t key : dev.order) {
        if (key == pack_coord(0, 0)) continue;
        if (dev.chart.at(key).base == root) {
            dist[key] = 0;
            q.push_back({static_cast<int>(static_cast<int32_t>(key >> 32)),
                         static_cast<int>(static_cast<int32_t>(key & 0xffffffffULL))});
        }
    }
    while (!q.empty()) {
        auto [r, c] = q.front();
        q.pop_front();
        int d = dist[pack_coord(r, c)];
        for (int slot = 0; slot < 3; ++slot) {
            auto [nr, nc] = slot_target(r, c, slot);
            uint64_t key = pack_coord(nr, nc);
            if (!dev.chart.count(key)) continue;
            auto it = dist.find(key);
            if (it == dist.end() || it->second > d + 1) {
                dist[key] = d + 1;
                q.push_back({nr, nc});
            }
        }
    }
    return dist;
}

struct EssentialCounter {
    const SurfaceData& sd;
    const Graph& g;
    DevWalker walker;
    int target_len;
    VertexId root;
    Developed dev;
    std::unordered_map<uint64_t, int> dstar;
    std::vector<char> used;
    std::vector<VertexId> path;
    std::vector<EdgeId> path_edges;
    std::vector<Cycle> found;

    EssentialCounter(const SurfaceData& s, int l)
        : sd(s), g(s.t->graph), walker{s}, target_len(l), used(g.vertex_count(), 0) {}

    void run_root(VertexId s) {
        root = s;
        dev = walker.develop(s, target_len);
        dstar = lift_distances(dev);
        if (dstar.empty()) return;
        used.assign(g.vertex_count(), 0);
        used[s] = 1;
        path = {s};
        path_edges.clear();
        dfs(s, 0, 0);
        used[s] = 0;
    }

    void dfs(VertexId u, int r, int c) {
        const Chart& ch = dev.chart.at(pack_coord(r, c));
        int depth = static_cast<int>(path.size());  // vertices so far
        for (auto [w, e] : g.incident(u)) {
            if (w == root) {
                if (depth == target_len && path[1] < path[depth - 1]) {
                    auto [nr, nc, nch] = walker.step(r, c, ch, e);
                    if (pack_coord(nr, nc) != pack_coord(0, 0)) {
                        Cycle cyc;
                        cyc.vertices = path;
                        cyc.edges = path_edges;
                        cyc.edges.push_back(e);
                        found.push_back(std::move(cyc));
                    }
                }
                continue;
            }
            if (w <= root || used[w] || depth + 1 > target_len) continue;
            auto [nr, nc, nch] = walker.step(r, c, ch, e);
            uint64_t key = pack_coord(nr, nc);
            auto it = dstar.find(key);
            int rem = (it == dstar.end()) ? kInf : it->second;
            if (depth + rem > target_len) continue;  // depth = edges after this step
            used[w] = 1;
            path.push_back(w);
            path_edges.push_back(e);
            dfs(w, nr, nc);
            path.pop_back();
            path_edges.pop_back();
            used[w] = 0;
        }
    }
};

}  // namespace

ShortestEssentialResult SurfaceContext::shortest_essential(int cap) const {
    const SurfaceData& sd = impl_->sd;
    const Graph& g = impl_->t.graph;
    int n = g.vertex_count();
    DevWalker walker{sd};

    std::vector<int> loop_len(n, kInf);
    int best = cap + 1;
    for (VertexId v = 0; v < n; ++v) {
        int found = kInf;
        walker.develop(v, std::min(best, cap), v, &found);
        loop_len[v] = found;
        best = std::min(best, found);
    }
    if (best > cap) return {true, 0, 0};

    EssentialCounter counter(sd, best);
    for (VertexId s = 0; s < n; ++s) {
        if (loop_len[s] != best) continue;
        counter.run_root(s);
    }
    // cross-check each found cycle against the homology-based decision
    long long count = 0;
    for (const auto& cyc : counter.found) {
        if (!is_essential(cyc))
            throw std::logic_error("shortest_essential: cover search and homology disagree");
        ++count;
    }
    return {false, best, count};
}

// ---- free wrappers ---------------------------------------------------------

bool is_essential(const HexTiling& t, const Cycle& c) {
    SurfaceContext ctx(t);
    return ctx.is_essential(c);
}

H1Class homology_class(const HexTiling& t, const Cycle& c) {
    SurfaceContext ctx(t);
    return ctx.homology_class(c);
}

ShortestEssentialResult shortest_essential(const HexTiling& t, int cap) {
    SurfaceContext ctx(t);
    return ctx.shortest_essential(cap);
}

HexTiling double_cover(const HexTiling& t) {
    SurfaceContext ctx(t);
    return ctx.double_cover();
}

}  // namespace hextile
