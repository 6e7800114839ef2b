#include "hextile/hex_families.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace hextile {

bool HexFamilyId::operator<(const HexFamilyId& o) const {
    if (family != o.family) return family < o.family;
    if (k != o.k) return k < o.k;
    if (m != o.m) return m < o.m;
    return r < o.r;
}

namespace {

const char* family_tag(HexFamily f) {
    switch (f) {
        case HexFamily::R: return "Hr";
        case HexFamily::A: return "Ha";
        case HexFamily::B: return "Hb";
        case HexFamily::C: return "Hc";
        case HexFamily::F: return "Hf";
        case HexFamily::G: return "Hg";
        default: return "Hh";
    }
}

}  // namespace

std::string to_string(const HexFamilyId& id) {
    std::string s = family_tag(id.family);
    s += ":" + std::to_string(id.k) + "," + std::to_string(id.m);
    if (id.family == HexFamily::R) s += "," + std::to_string(id.r);
    return s;
}

std::optional<HexFamilyId> parse_hex_famspec(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) return std::nullopt;
    std::string tag = s.substr(0, colon);
    HexFamily fam;
    if (tag == "Hr") fam = HexFamily::R;
    else if (tag == "Ha") fam = HexFamily::A;
    else if (tag == "Hb") fam = HexFamily::B;
    else if (tag == "Hc") fam = HexFamily::C;
    else if (tag == "Hf") fam = HexFamily::F;
    else if (tag == "Hg") fam = HexFamily::G;
    else if (tag == "Hh") fam = HexFamily::H;
    else return std::nullopt;
    std::vector<long long> nums;
    std::string rest = s.substr(colon + 1);
    size_t pos = 0;
    while (pos <= rest.size()) {
        auto comma = rest.find(',', pos);
        std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty()) return std::nullopt;
        for (char c : tok)
            if (!isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        nums.push_back(std::stoll(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    size_t want = fam == HexFamily::R ? 3 : 2;
    if (nums.size() != want) return std::nullopt;
    HexFamilyId id;
    id.family = fam;
    id.k = static_cast<int>(nums[0]);
    id.m = static_cast<int>(nums[1]);
    id.r = fam == HexFamily::R ? static_cast<int>(nums[2]) : 0;
    return id;
}

bool hex_params_ok(const HexFamilyId& id) {
    int k = id.k, m = id.m, r = id.r;
    switch (id.family) {
        case HexFamily::R:
            if (m >= 2) return k >= 3 && r >= 0 && r <= k / 2;
            if (m == 1) return k > 3 && r >= 2 && r <= k / 2;
            if (m == 0) return k >= 3 && r >= 0 && r <= k / 2;  // gated by certification
            return false;
        case HexFamily::A: return m >= 2 && k >= 3;
        case HexFamily::B: return k % 2 == 0 && m % 2 == 1 && m >= 3 && k >= 4;
        case HexFamily::C: return k % 2 == 0 && k >= 6 && m >= 1;
        case HexFamily::F: return k % 2 == 1 && k >= 7 && m >= 0;
        case HexFamily::G: return m >= 3 && k >= m + 1;
        case HexFamily::H: return k >= 2 && k <= m - 2;
    }
    return false;
}

long long hex_vertex_count(const HexFamilyId& id) {
    long long k = id.k, m = id.m;
    switch (id.family) {
        case HexFamily::R:
        case HexFamily::A:
        case HexFamily::B:
        case HexFamily::C: return 2 * k * (m + 1);
        case HexFamily::F: return 2 * k * (m + 2);
        case HexFamily::G: return 2 * (m + 1) * (k + 2);
        default: return 2 * (m + 1) * (k + 1);
    }
}

VertexId LabeledGraph::at(int row, int col) const {
    auto it = vertex_at.find({row, col});
    if (it == vertex_at.end())
        throw std::logic_error("no vertex at (" + std::to_string(row) + "," +
                               std::to_string(col) + ")");
    return it->second;
}

namespace {

struct Builder {
    std::map<std::pair<int, int>, VertexId> at;
    std::vector<std::pair<int, int>> coords;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<EdgeRole> roles;

    VertexId add_vertex(int r, int c) {
        auto [it, fresh] = at.insert({{r, c}, static_cast<VertexId>(coords.size())});
        if (fresh) coords.push_back({r, c});
        return it->second;
    }
    bool has(int r, int c) const { return at.count({r, c}) > 0; }
    VertexId get(int r, int c) const {
        auto it = at.find({r, c});
        if (it == at.end())
            throw std::logic_error("builder: missing vertex (" + std::to_string(r) + "," +
                                   std::to_string(c) + ")");
        return it->second;
    }
    void edge(int r1, int c1, int r2, int c2, EdgeRole role) {
        edges.push_back({get(r1, c1), get(r2, c2)});
        roles.push_back(role);
    }
    void edge_v(VertexId a, VertexId b, EdgeRole role) {
        edges.push_back({a, b});
        roles.push_back(role);
    }

    LabeledGraph finish() const {
        LabeledGraph lg;
        lg.graph = Graph(static_cast<int>(coords.size()), edges);
        lg.coords = coords;
        lg.vertex_at = at;
        return lg;
    }
};

// ---- blocks ---------------------------------------------------------------

Builder grid_builder(int p, int q, bool wrap_cols) {
    Builder b;
    for (int r = 0; r < p; ++r)
        for (int c = 0; c < q; ++c) b.add_vertex(r, c);
    for (int r = 0; r < p; ++r)
        for (int c = 0; c + 1 < q; ++c) b.edge(r, c, r, c + 1, EdgeRole::Wall);
    for (int r = 0; r + 1 < p; ++r)
        for (int c = 0; c < q; ++c) b.edge(r, c, r + 1, c, EdgeRole::Wall);
    if (wrap_cols && q >= 2)
        for (int r = 0; r < p; ++r) b.edge(r, 0, r, q - 1, EdgeRole::Wrap);
    return b;
}

// hexagonal wall: (m+1) x 2k grid with vertical edges only where row+col is odd
Builder wall_builder(int k, int m, bool wrap) {
    Builder b;
    int rows = m + 1, cols = 2 * k;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) b.add_vertex(r, c);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c + 1 < cols; ++c) b.edge(r, c, r, c + 1, EdgeRole::Wall);
    for (int r = 0; r + 1 < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if ((r + c) % 2 == 1) b.edge(r, c, r + 1, c, EdgeRole::Wall);
    if (wrap)
        for (int r = 0; r < rows; ++r) b.edge(r, cols - 1, r, 0, EdgeRole::Wrap);
    return b;
}

void cylinder_labels(LabeledGraph& lg, int k, int m) {
    lg.z.resize(k);
    lg.x.resize(k);
    for (int j = 0; j < k; ++j) {
        lg.z[j] = lg.at(0, 2 * j);
        lg.x[j] = (m % 2 == 1) ? lg.at(m, 2 * j) : lg.at(m, 2 * j + 1);
    }
}

// hexagonal ladder of length k and breadth M, on the (M+1) x (2k+M) grid
// minus two corner triangles, with the diagonal pattern of vertical edges
Builder ladder_builder(int k, int M) {
    Builder b;
    int rows = M + 1, cols = 2 * k + M;
    auto removed = [&](int r, int c) {
        if (r <= M - 2 && c <= M - 2 - r) return true;                      // upper-left triangle
        if (r >= 2 && c >= 2 * k && (c - 2 * k) >= M + 1 - r && (c - 2 * k) <= M - 1)
            return true;                                                    // lower-right triangle
        return false;
    };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (!removed(r, c)) b.add_vertex(r, c);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c + 1 < cols; ++c)
            if (b.has(r, c) && b.has(r, c + 1)) b.edge(r, c, r, c + 1, EdgeRole::Wall);
    for (int r = 0; r + 1 < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (!b.has(r, c) || !b.has(r + 1, c)) continue;
            int d = c - (M - r);
            if (d >= 0 && d <= 2 * (k - 1) && d % 2 == 0) continue;  // removed by the pattern
            b.edge(r, c, r + 1, c, EdgeRole::Wall);
        }
    return b;
}

// twisted cylinder TC_{k,m,1} (k <= m-2): ladder(k,m) plus two vertices
LabeledGraph tc1(int k, int m) {
    if (k < 2 || k > m - 2) throw std::invalid_argument("TC1 requires 2 <= k <= m-2");
    Builder b = ladder_builder(k, m);
    VertexId A = b.add_vertex(0, 2 * k + m);
    VertexId B = b.add_vertex(m - k - 1, 3 * k + 2);
    b.edge_v(A, b.get(0, 2 * k + m - 1), EdgeRole::Twist);
    b.edge_v(A, b.get(k + 1, m - k - 2), EdgeRole::Twist);
    b.edge_v(B, b.get(m - k - 1, 3 * k + 1), EdgeRole::Twist);
    b.edge_v(B, b.get(m, 0), EdgeRole::Twist);
    for (int j = 1; j <= m - k - 2; ++j)
        b.edge(j, 2 * k + m - j, k + j + 1, m - k - j - 2, EdgeRole::Twist);
    LabeledGraph lg = b.finish();
    lg.z.resize(k + 1);
    lg.x.resize(k + 1);
    for (int j = 0; j <= k; ++j) {
        lg.z[j] = lg.at(0, 2 * k + m - 2 * j);
        lg.x[j] = lg.at(j, m - (j + 1));
    }
    lg.v.resize(k + 1);
    lg.w.resize(k + 1);
    lg.v[0] = B;
    for (int i = 0; i <= k - 1; ++i) lg.v[i + 1] = lg.at(m - k + i, 3 * k - i);
    lg.w[0] = lg.at(m, 2 * k);
    for (int i = 0; i <= k - 1; ++i) lg.w[i + 1] = lg.at(m, 2 * k - (2 * i + 1));
    return lg;
}

// twisted cylinder TC_{k,m,2} (k >= m+1): trimmed ladder(k, m+1) plus twist edges
LabeledGraph tc2(int k, int m) {
    if (k < m + 1) throw std::invalid_argument("TC2 requires k >= m+1");
    int M = m + 1;
    Builder b;
    {
        Builder full = ladder_builder(k, M);
        // rebuild without the deleted run of bottom-row vertices
        auto deleted = [&](int r, int c) { return r == m + 1 && c <= 2 * (k - m) - 3; };
        for (size_t vid = 0; vid < full.coords.size(); ++vid) {
            auto [r, c] = full.coords[vid];
            if (!deleted(r, c)) b.add_vertex(r, c);
        }
        for (size_t ei = 0; ei < full.edges.size(); ++ei) {
            auto [pu, pv] = full.edges[ei];
            auto [r1, c1] = full.coords[pu];
            auto [r2, c2] = full.coords[pv];
            if (deleted(r1, c1) || deleted(r2, c2)) continue;
            b.edge(r1, c1, r2, c2, full.roles[ei]);
        }
    }
    b.edge(0, 2 * k + m, m + 1, 2 * (k - m - 1), EdgeRole::Twist);
    for (int j = 0; j <= k - m - 2; ++j)
        b.edge(0, 2 * k + m - (2 * j + 1), m, 2 * (k - m - 1) - (2 * j + 2), EdgeRole::Twist);
    LabeledGraph lg = b.finish();
    lg.z.resize(m + 1);
    lg.x.resize(m + 1);
    lg.v.resize(m + 1);
    lg.w.resize(m + 1);
    for (int i = 0; i <= m; ++i) {
        lg.x[i] = lg.at(m - i, i);
        lg.z[i] = lg.at(0, m + 2 * i + 1);
        lg.w[i] = lg.at(i + 1, 2 * k + m - i);
        lg.v[i] = lg.at(m + 1, 2 * k - (2 * i + 1));
    }
    return lg;
}

LabeledGraph moebius_circuit(int k) {
    Builder b = wall_builder(k, 1, false);
    b.edge(0, 0, 1, 2 * k - 1, EdgeRole::Wrap);
    b.edge(1, 0, 0, 2 * k - 1, EdgeRole::Wrap);
    return b.finish();
}

LabeledGraph parallel_moebius(int k) {
    Builder b;
    int cols = 2 * k + 1;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < cols; ++c) b.add_vertex(r, c);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c + 1 < cols; ++c) b.edge(r, c, r, c + 1, EdgeRole::Wall);
    for (int c = 0; c < cols; ++c) {
        if (c % 2 == 0) b.edge(0, c, 1, c, EdgeRole::Wall);
        else b.edge(1, c, 2, c, EdgeRole::Wall);
    }
    b.edge(0, 0, 2, 2 * k, EdgeRole::Wrap);
    b.edge(1, 0, 1, 2 * k, EdgeRole::Wrap);
    b.edge(2, 0, 0, 2 * k, EdgeRole::Wrap);
    return b.finish();
}

}  // namespace

LabeledGraph build_block(BlockKind kind, int a, int b) {
    switch (kind) {
        case BlockKind::Grid: {
            if (a < 1 || b < 1) throw std::invalid_argument("grid: p,q >= 1");
            return grid_builder(a, b, false).finish();
        }
        case BlockKind::CylinderGrid: {
            if (a < 1 || b < 3) throw std::invalid_argument("cylinder grid: p >= 1, q >= 3");
            return grid_builder(a, b, true).finish();
        }
        case BlockKind::Wall: {
            if (a < 1 || b < 0) throw std::invalid_argument("wall: k >= 1, m >= 0");
            return wall_builder(a, b, false).finish();
        }
        case BlockKind::Cylinder: {
            if (a < 2 || b < 0) throw std::invalid_argument("cylinder: k >= 2, m >= 0");
            LabeledGraph lg = wall_builder(a, b, true).finish();
            cylinder_labels(lg, a, b);
            return lg;
        }
        case BlockKind::CylinderCircuit: {
            if (a < 2) throw std::invalid_argument("cylinder circuit: k >= 2");
            LabeledGraph lg = wall_builder(a, 1, true).finish();
            cylinder_labels(lg, a, 1);
            return lg;
        }
        case BlockKind::MoebiusCircuit:
            if (a < 2) throw std::invalid_argument("moebius circuit: k >= 2");
            return moebius_circuit(a);
        case BlockKind::ParallelMoebius:
            if (a < 2) throw std::invalid_argument("parallel moebius circuit: k >= 2");
            return parallel_moebius(a);
        case BlockKind::Ladder:
            if (a < 1 || b < 1) throw std::invalid_argument("ladder: k >= 1, m >= 1");
            return ladder_builder(a, b).finish();
        case BlockKind::TwistedCylinder1: return tc1(a, b);
        default: return tc2(a, b);
    }
}

namespace {

struct RawBuild {
    LabeledGraph lg;
    std::vector<EdgeRole> roles;
};

// families R/A/B/C: hexagonal cylinder plus closure edges
RawBuild build_cylinder_family(const HexFamilyId& id) {
    int k = id.k, m = id.m;
    Builder b = wall_builder(k, m, true);
    LabeledGraph pre = b.finish();
    cylinder_labels(pre, k, m);
    const auto& z = pre.z;
    const auto& x = pre.x;
    switch (id.family) {
        case HexFamily::R:
            for (int j = 0; j < k; ++j) b.edge_v(z[j], x[(j + id.r) % k], EdgeRole::Closure);
            break;
        case HexFamily::A:
            b.edge_v(z[0], x[1 % k], EdgeRole::Closure);
            b.edge_v(z[1 % k], x[0], EdgeRole::Closure);
            for (int i = 2; i <= k - 1; ++i) b.edge_v(z[i], x[k + 1 - i], EdgeRole::Closure);
            break;
        case HexFamily::B:
            b.edge_v(z[0], x[0], EdgeRole::Closure);
            for (int i = 1; i <= k - 1; ++i) b.edge_v(z[i], x[k - i], EdgeRole::Closure);
            break;
        default:  // C
            for (int i = 0; i < k / 2; ++i) {
                b.edge_v(z[i], z[i + k / 2], EdgeRole::Closure);
                b.edge_v(x[i], x[i + k / 2], EdgeRole::Closure);
            }
            break;
    }
    LabeledGraph lg = b.finish();
    lg.z = pre.z;
    lg.x = pre.x;
    return {std::move(lg), std::move(b.roles)};
}

// family F: cylinder plus two added k-cycles chorded to the peripheral
// degree-2 vertices
RawBuild build_family_f(const HexFamilyId& id) {
    int k = id.k, m = id.m;
    Builder b = wall_builder(k, m, true);
    LabeledGraph pre = b.finish();
    cylinder_labels(pre, k, m);
    std::vector<VertexId> wv(k), vv(k);
    for (int j = 0; j < k; ++j) wv[j] = b.add_vertex(-1, j);
    for (int j = 0; j < k; ++j) vv[j] = b.add_vertex(m + 1, j);
    for (int j = 0; j < k; ++j) b.edge_v(wv[j], wv[(j + 1) % k], EdgeRole::AddedCycle);
    for (int j = 0; j < k; ++j) b.edge_v(vv[j], vv[(j + 1) % k], EdgeRole::AddedCycle);
    for (int i = 0; i <= (k - 1) / 2; ++i) {
        b.edge_v(pre.z[i], wv[(2 * i) % k], EdgeRole::Closure);
        b.edge_v(pre.x[i], vv[(2 * i) % k], EdgeRole::Closure);
    }
    for (int i = 0; i <= (k - 3) / 2; ++i) {
        b.edge_v(pre.z[(k + 1) / 2 + i], wv[(2 * i + 1) % k], EdgeRole::Closure);
        b.edge_v(pre.x[(k + 1) / 2 + i], vv[(2 * i + 1) % k], EdgeRole::Closure);
    }
    LabeledGraph lg = b.finish();
    lg.z = pre.z;
    lg.x = pre.x;
    lg.w = wv;
    lg.v = vv;
    return {std::move(lg), std::move(b.roles)};
}

RawBuild build_family_g(const HexFamilyId& id) {
    LabeledGraph tc = tc2(id.k, id.m);
    Builder b;
    b.at = tc.vertex_at;
    b.coords = tc.coords;
    for (EdgeId e = 0; e < tc.graph.edge_count(); ++e) b.edges.push_back(tc.graph.edge(e));
    // roles of the underlying tc edges are recomputed: wall edges carry
    // grid coordinates, twist edges were appended last
    b.roles.assign(tc.graph.edge_count(), EdgeRole::Wall);
    for (int e = tc.graph.edge_count() - (id.k - id.m); e < tc.graph.edge_count(); ++e)
        b.roles[e] = EdgeRole::Twist;
    for (int i = 0; i <= id.m; ++i) {
        b.edge_v(tc.z[i], tc.w[i], EdgeRole::Closure);
        b.edge_v(tc.x[i], tc.v[i], EdgeRole::Closure);
    }
    LabeledGraph lg = b.finish();
    lg.z = tc.z;
    lg.x = tc.x;
    lg.v = tc.v;
    lg.w = tc.w;
    return {std::move(lg), std::move(b.roles)};
}

RawBuild build_family_h(const HexFamilyId& id) {
    LabeledGraph tc = tc1(id.k, id.m);
    Builder b;
    b.at = tc.vertex_at;
    b.coords = tc.coords;
    for (EdgeId e = 0; e < tc.graph.edge_count(); ++e) b.edges.push_back(tc.graph.edge(e));
    b.roles.assign(tc.graph.edge_count(), EdgeRole::Wall);
    int n_twist = 4 + std::max(0, id.m - id.k - 2);  // edges appended by tc1
    for (int e = tc.graph.edge_count() - n_twist; e < tc.graph.edge_count(); ++e)
        b.roles[e] = EdgeRole::Twist;
    for (int i = 0; i <= id.k; ++i) b.edge_v(tc.z[i], tc.x[i], EdgeRole::Closure);
    for (int i = 0; i <= id.k; ++i) b.edge_v(tc.v[i], tc.w[i], EdgeRole::Closure);
    LabeledGraph lg = b.finish();
    lg.z = tc.z;
    lg.x = tc.x;
    lg.v = tc.v;
    lg.w = tc.w;
    return {std::move(lg), std::move(b.roles)};
}

std::vector<EdgeId> collect_exterior(const HexFamilyId& id, const LabeledGraph& lg,
                                     const std::vector<EdgeRole>& roles) {
    std::vector<EdgeId> ext;
    for (EdgeId e = 0; e < static_cast<int>(roles.size()); ++e)
        if (roles[e] != EdgeRole::Wall) ext.push_back(e);
    if (id.family == HexFamily::H) {
        // the two twist edges extending the peripheral cycles do not count
        int k = id.k, m = id.m;
        VertexId A = lg.at(0, 2 * k + m), B = lg.at(m - k - 1, 3 * k + 2);
        auto e1 = lg.graph.find_edge(A, lg.at(0, 2 * k + m - 1));
        auto e2 = lg.graph.find_edge(B, lg.at(m - k - 1, 3 * k + 1));
        std::erase_if(ext, [&](EdgeId e) { return e == *e1 || e == *e2; });
    }
    return ext;
}

HexBuild finish_build(const HexFamilyId& id, RawBuild raw, bool klein, bool allow_reject) {
    HexBuild out;
    out.id = id;
    out.klein = klein;
    out.edge_role = std::move(raw.roles);
    out.exterior_edges = collect_exterior(id, raw.lg, out.edge_role);
    auto cert = certify_tiling(raw.lg.graph);
    if (!cert.accepted()) {
        if (allow_reject)
            throw std::domain_error("degenerate candidate rejected: " + cert.reject_reason);
        throw std::logic_error("construction failed certification for " + to_string(id) + ": " +
                               cert.reject_reason);
    }
    out.labeled = std::move(raw.lg);
    out.tiling = std::move(*cert.tiling);
    return out;
}

RawBuild build_native(const HexFamilyId& id) {
    switch (id.family) {
        case HexFamily::R:
        case HexFamily::A:
        case HexFamily::B:
        case HexFamily::C: return build_cylinder_family(id);
        case HexFamily::F: return build_family_f(id);
        case HexFamily::G: return build_family_g(id);
        default: return build_family_h(id);
    }
}

}  // namespace

HexBuild build_hex(const HexFamilyId& id) {
    if (!hex_params_ok(id))
        throw std::invalid_argument("invalid parameters for " + to_string(id));
    bool degenerate = (id.family == HexFamily::R && id.m == 0);
    return finish_build(id, build_native(id), false, degenerate);
}

std::optional<HexBuild> try_build_hex(const HexFamilyId& id) {
    if (!hex_params_ok(id)) return std::nullopt;
    try {
        return build_hex(id);
    } catch (const std::domain_error&) {
        return std::nullopt;  // degenerate candidate failed certification
    }
}

HexBuild klein_presentation(const HexFamilyId& id) {
    if (id.family != HexFamily::C && id.family != HexFamily::F)
        throw std::invalid_argument("klein_presentation: family must be C or F");
    if (!hex_params_ok(id))
        throw std::invalid_argument("invalid parameters for " + to_string(id));
    int k = id.k, m = id.m;
    int rows = id.family == HexFamily::C ? 2 * m + 2 : 2 * m + 4;
    Builder b;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < k; ++c) b.add_vertex(r, c);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c + 1 < k; ++c) b.edge(r, c, r, c + 1, EdgeRole::Wall);
    for (int r = 0; r + 1 < rows; ++r)
        for (int c = 0; c < k; ++c)
            if ((r + c) % 2 == 0) b.edge(r, c, r + 1, c, EdgeRole::Wall);
    for (int c = 1; c < k; c += 2) b.edge(rows - 1, c, 0, c, EdgeRole::Wrap);
    LabeledGraph pre = b.finish();
    std::vector<VertexId> z(rows), x(rows);
    for (int i = 0; i < rows; ++i) {
        z[i] = pre.at(i, 0);
        x[i] = pre.at(i, k - 1);
    }
    if (id.family == HexFamily::C) {
        for (int i = 0; i < rows; ++i) b.edge_v(z[i], x[rows - 1 - i], EdgeRole::Closure);
    } else {
        b.edge_v(z[0], x[0], EdgeRole::Closure);
        for (int i = 1; i < rows; ++i) b.edge_v(z[i], x[rows - i], EdgeRole::Closure);
    }
    RawBuild raw;
    raw.lg = b.finish();
    raw.lg.z = z;
    raw.lg.x = x;
    raw.roles = b.roles;
    return finish_build(id, std::move(raw), true, false);
}

namespace {

long long binom(long long n, long long r) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    long long out = 1;
    for (long long i = 1; i <= r; ++i) {
        out = out * (n - r + i);
        out /= i;
    }
    return out;
}

long long pow2(int e) { return 1LL << e; }

}  // namespace

PredictedInvariants predicted_invariants(const HexFamilyId& id) {
    if (!hex_params_ok(id))
        throw std::invalid_argument("invalid parameters for " + to_string(id));
    int k = id.k, m = id.m, r = id.r;
    PredictedInvariants p;
    p.n = hex_vertex_count(id);
    switch (id.family) {
        case HexFamily::R: {
            p.chi = 2;
            p.vertex_transitive = true;
            int half = (m + 1) / 2;
            if (k < m + 1) {
                p.l_g = 2 * k;
                p.count = m + 1;
            } else if (k == m + 1) {
                p.l_g = 2 * k;
                p.count = (m + 1) + k * binom(m + 1, half - r);
            } else if (r < half) {
                p.l_g = 2 * (m + 1);
                p.count = k * binom(m + 1, half - r);
            } else {
                p.l_g = 2 * (m + 1 + r - half);
                p.count = k * binom(r + half, m);
            }
            break;
        }
        case HexFamily::A: {
            p.chi = 2;
            p.vertex_transitive = (k == 4 && m % 2 == 1);
            p.l_g = std::min(2 * k, 2 * m + 2);
            if (k < m + 1) p.count = m + 1;
            else if (k > m + 1) p.count = pow2(m + 1);
            else p.count = pow2(m + 1) + m + 1;
            break;
        }
        case HexFamily::B: {
            p.chi = 2;
            long long base = 2 * binom(m + 1, (m + 1) / 2);
            for (int j = 1; j <= (m - 1) / 4; ++j) base += 4 * binom(m + 1, (m + 1) / 2 - 2 * j);
            p.l_g = std::min(2 * k, 2 * m + 2);
            if (k < m + 1) p.count = m + 1;
            else if (k > m + 1) p.count = base;
            else p.count = base + m + 1;
            break;
        }
        case HexFamily::C: {
            p.chi = 3;
            p.l_g = std::min(k + 1, 4 * m + 4);
            if (4 * m + 4 < k + 1) p.count = (k / 2) * binom(2 * m + 2, m + 1);
            else p.count = 2 * k;
            break;
        }
        case HexFamily::F: {
            p.chi = 3;
            p.l_g = std::min(k, 4 * m + 8);
            if (4 * m + 8 < k) p.count = ((k - 1) / 2) * binom(2 * m + 4, m + 2);
            else p.count = 2;
            break;
        }
        case HexFamily::G: {
            p.chi = 3;
            if (k > 2 * m + 1) {
                p.l_g = 2 * (k - m) - 2 * ((m + 1) / 2) + 3;
                p.count = std::nullopt;  // not settled by the classification
            } else if (k % 2 == 1) {
                p.l_g = k + 2;
                p.count = 2;
            } else {
                p.l_g = k + 3;
                p.count = 2 * (k + 2);
            }
            break;
        }
        default: {  // H
            p.chi = 2;
            p.l_g = 2 * k + 2;
            p.count = pow2(k + 1);
            break;
        }
    }
    return p;
}

std::vector<HexFamilyId> enumerate_hex_ids(long long max_n) {
    std::vector<HexFamilyId> out;
    auto push = [&](HexFamily f, int k, int m, int r) {
        HexFamilyId id{f, k, m, r};
        if (hex_params_ok(id) && hex_vertex_count(id) <= max_n) out.push_back(id);
    };
    // R (m >= 0; m = 0 entries are candidates pending certification)
    for (int m = 0; 2LL * 3 * (m + 1) <= max_n; ++m)
        for (int k = 3; 2LL * k * (m + 1) <= max_n; ++k)
            for (int r = 0; r <= k / 2; ++r) push(HexFamily::R, k, m, r);
    for (int m = 2; 2LL * 3 * (m + 1) <= max_n; ++m)
        for (int k = 3; 2LL * k * (m + 1) <= max_n; ++k) push(HexFamily::A, k, m, 0);
    for (int m = 3; 2LL * 4 * (m + 1) <= max_n; ++m)
        for (int k = 4; 2LL * k * (m + 1) <= max_n; ++k) push(HexFamily::B, k, m, 0);
    for (int m = 1; 2LL * 6 * (m + 1) <= max_n; ++m)
        for (int k = 6; 2LL * k * (m + 1) <= max_n; ++k) push(HexFamily::C, k, m, 0);
    for (int m = 0; 2LL * 7 * (m + 2) <= max_n; ++m)
        for (int k = 7; 2LL * k * (m + 2) <= max_n; ++k) push(HexFamily::F, k, m, 0);
    for (int m = 3; 2LL * (m + 1) * (m + 3) <= max_n; ++m)
        for (int k = m + 1; 2LL * (m + 1) * (k + 2) <= max_n; ++k) push(HexFamily::G, k, m, 0);
    for (int m = 4; 2LL * (m + 1) * 3 <= max_n; ++m)
        for (int k = 2; k <= m - 2 && 2LL * (m + 1) * (k + 1) <= max_n; ++k)
            push(HexFamily::H, k, m, 0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace hextile
