#include "acyl/tree.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace acyl {

int compare_vertices(const TreeVertex& a, const TreeVertex& b) {
    if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
    return compare_elements(a.code, b.code);
}

TreeVertex Tree::canonical(VKind kind, GroupElement code) const {
    code.ce = 0;
    code.cf = 0;
    if (kind == VKind::AVert && !code.syls.empty() && code.syls.back().tag == 0) code.syls.pop_back();
    if (kind == VKind::BVert && !code.syls.empty() && code.syls.back().tag == 1) code.syls.pop_back();
    return TreeVertex{kind, std::move(code)};
}

TreeVertex Tree::act(const GroupElement& g, const TreeVertex& v) const {
    return canonical(v.kind, G_->multiply(g, v.code));
}

Path Tree::act(const GroupElement& g, const Path& p) const {
    Path out;
    out.reserve(p.size());
    for (const TreeVertex& v : p) out.push_back(act(g, v));
    return out;
}

BoundaryTarget Tree::act(const GroupElement& g, const BoundaryTarget& t) const {
    BoundaryTarget out = t;
    if (t.kind == BoundaryTarget::Kind::InfiniteVertex) {
        out.vertex = act(g, t.vertex);
        return out;
    }
    out.prefix = act(g, t.prefix);
    out.window = act(g, t.window);
    out.period = G_->multiply(G_->multiply(g, t.period), G_->invert(g));
    return out;
}

Path Tree::path_from_base(const TreeVertex& v) const {
    // Prefixes of a canonical code are canonical, so the chain of prefix
    // edges can be built by plain appends.
    Path path;
    const auto& syls = v.code.syls;
    size_t n = syls.size();
    path.reserve(2 * n + 2);
    GroupElement prefix;
    path.push_back(TreeVertex{VKind::Mid, prefix});
    for (size_t i = 0; i < n; ++i) {
        VKind pivot = syls[i].tag == 0 ? VKind::AVert : VKind::BVert;
        path.push_back(TreeVertex{pivot, prefix});
        prefix.syls.push_back(syls[i]);
        path.push_back(TreeVertex{VKind::Mid, prefix});
    }
    if (v.kind != VKind::Mid) path.push_back(v);
    return path;
}

Path Tree::geodesic(const TreeVertex& u, const TreeVertex& v) const {
    Path pu = path_from_base(u), pv = path_from_base(v);
    size_t c = 0;
    while (c < pu.size() && c < pv.size() && pu[c] == pv[c]) ++c;
    assert(c > 0);
    Path out;
    out.reserve(pu.size() - c + pv.size() - c + 1);
    for (size_t i = pu.size(); i-- > c - 1;) out.push_back(pu[i]);
    for (size_t i = c; i < pv.size(); ++i) out.push_back(pv[i]);
    return out;
}

long long Tree::distance(const TreeVertex& u, const TreeVertex& v) const {
    Path pu = path_from_base(u), pv = path_from_base(v);
    size_t c = 0;
    while (c < pu.size() && c < pv.size() && pu[c] == pv[c]) ++c;
    return static_cast<long long>(pu.size() - c) + static_cast<long long>(pv.size() - c);
}

bool Tree::infinite_valence(const TreeVertex& v) const {
    if (v.kind == VKind::Mid) return false;
    return !G_->preset().factor[v.kind == VKind::AVert ? 0 : 1].finite;
}

Tree::Neighbors Tree::neighbors(const TreeVertex& v, long long budget) const {
    Neighbors out;
    if (v.kind == VKind::Mid) {
        out.verts.push_back(canonical(VKind::AVert, v.code));
        out.verts.push_back(canonical(VKind::BVert, v.code));
        return out;
    }
    int tag = v.kind == VKind::AVert ? 0 : 1;
    const Factor& f = G_->preset().factor[tag];
    std::set<TreeVertex, VertexLess> mids;
    auto add = [&](const Word& xw, int xi) {
        GroupElement e = v.code;
        if (f.finite)
            G_->push_finite(e, tag, xi);
        else
            G_->push_free(e, tag, xw);
        mids.insert(canonical(VKind::Mid, e));
    };
    add({}, 0); // the edge toward (or at) the base direction
    if (f.finite) {
        for (int x = 1; x < f.size(); ++x) add({}, x);
    } else {
        out.truncated = true;
        // all reduced words of length <= budget; canonicalization dedupes cosets
        std::vector<Word> frontier{Word{}};
        for (long long l = 1; l <= budget; ++l) {
            std::vector<Word> next;
            for (const Word& w0 : frontier)
                for (Letter g = 1; g <= f.rank; ++g)
                    for (Letter s : {g, -g}) {
                        if (!w0.empty() && w0.back() == -s) continue;
                        Word w1 = w0;
                        w1.push_back(s);
                        add(w1, 0);
                        next.push_back(std::move(w1));
                    }
            frontier.swap(next);
        }
    }
    out.verts.assign(mids.begin(), mids.end());
    return out;
}

TreeVertex Tree::ray_vertex(const BoundaryTarget& t, long long i) const {
    if (t.kind == BoundaryTarget::Kind::InfiniteVertex) {
        Path p = path_from_base(t.vertex);
        size_t idx = std::min<size_t>(static_cast<size_t>(i), p.size() - 1);
        return p[idx];
    }
    long long pe = static_cast<long long>(t.prefix.size()) - 1;
    if (i <= pe) return t.prefix[static_cast<size_t>(i)];
    long long j = i - pe;
    long long q = j / t.period_len, r = j % t.period_len;
    TreeVertex v = t.window[static_cast<size_t>(r)];
    if (q == 0) return v;
    GroupElement h = t.period;
    GroupElement acc = G_->one();
    long long m = q;
    while (m > 0) { // fast power
        if (m & 1) acc = G_->multiply(acc, h);
        h = G_->multiply(h, h);
        m >>= 1;
    }
    return act(acc, v);
}

long long Tree::ray_length(const BoundaryTarget& t) const {
    if (t.kind == BoundaryTarget::Kind::Ray) return -1;
    return static_cast<long long>(path_from_base(t.vertex).size()) - 1;
}

BoundaryTarget Tree::vertex_target(const TreeVertex& v) const {
    BoundaryTarget t;
    t.kind = BoundaryTarget::Kind::InfiniteVertex;
    t.vertex = v;
    return t;
}

bool Tree::targets_equal(const BoundaryTarget& a, const BoundaryTarget& b, long long depth) const {
    (void)depth;
    if (a.kind != b.kind) return false;
    if (a.kind == BoundaryTarget::Kind::InfiniteVertex) return a.vertex == b.vertex;
    // Equal rays share a cofinal tail. Probe a's periodic tail: start past
    // b's prefix, then require enough consecutive period-translates of a's
    // anchor to lie on b (ascending) to cover two full b-periods. Then b's
    // periodic tail runs along a's axis forward, which forces equal ends.
    long long start = static_cast<long long>(a.prefix.size()) - 1 + a.period_len;
    TreeVertex x = ray_vertex(a, start);
    Gate g0 = gate_on_ray(x, b);
    long long guard = static_cast<long long>(b.prefix.size()) + b.period_len;
    long long steps = 0;
    while (g0.dist == 0 && g0.index < guard) {
        start += a.period_len;
        x = ray_vertex(a, start);
        g0 = gate_on_ray(x, b);
        if (++steps > 4 + 2 * (guard / std::max(1ll, a.period_len))) break;
    }
    if (g0.dist != 0) return false;
    long long J = 2 + (2 * b.period_len + a.period_len) / std::max(1ll, a.period_len);
    long long prev = g0.index;
    for (long long j = 1; j <= J; ++j) {
        Gate gj = gate_on_ray(ray_vertex(a, start + j * a.period_len), b);
        if (gj.dist != 0 || gj.index <= prev) return false;
        prev = gj.index;
    }
    return true;
}

Tree::Gate Tree::gate_on_ray(const TreeVertex& x, const BoundaryTarget& xi) const {
    long long d = distance(x, ray_vertex(xi, 0));
    long long i = 0;
    while (true) {
        if (xi.kind == BoundaryTarget::Kind::InfiniteVertex && i >= ray_length(xi)) break;
        long long dn = distance(x, ray_vertex(xi, i + 1));
        if (dn > d) break;
        d = dn;
        ++i;
    }
    return {i, d};
}

Path Tree::ray_prefix(const TreeVertex& x, const BoundaryTarget& xi, long long n) const {
    Gate g = gate_on_ray(x, xi);
    Path out = geodesic(x, ray_vertex(xi, g.index));
    long long i = g.index;
    while (static_cast<long long>(out.size()) - 1 < n) {
        if (xi.kind == BoundaryTarget::Kind::InfiniteVertex && i >= ray_length(xi)) break;
        out.push_back(ray_vertex(xi, ++i));
    }
    if (static_cast<long long>(out.size()) - 1 > n) out.resize(static_cast<size_t>(n) + 1);
    return out;
}

bool Tree::on_path(const Path& p, const TreeVertex& v) const {
    return std::find(p.begin(), p.end(), v) != p.end();
}

namespace {
bool vertex_on_finite_path(const Path& p, const TreeVertex& v) {
    return std::find(p.begin(), p.end(), v) != p.end();
}
} // namespace

// a in [x, xi] for a vertex x and target xi: position of a would be d(x,a),
// so a prefix of length d(x,a)+1 decides membership exactly.
bool Tree::basis_member(const BoundaryTarget& y, const BoundaryTarget& z,
                        const std::vector<TreeVertex>& avoid, long long depth) const {
    if (avoid.empty()) return true;

    auto on_vertex_to_target = [&](const TreeVertex& x, const BoundaryTarget& t,
                                   const TreeVertex& a) {
        long long need = distance(x, a) + 1;
        if (t.kind == BoundaryTarget::Kind::Ray && depth < need)
            throw depth_insufficient("basis_member needs depth " + std::to_string(need));
        Path p = ray_prefix(x, t, need);
        return vertex_on_finite_path(p, a);
    };

    bool zr = z.kind == BoundaryTarget::Kind::Ray;
    bool yr = y.kind == BoundaryTarget::Kind::Ray;
    if (!zr && !yr) {
        Path p = geodesic(z.vertex, y.vertex);
        for (const TreeVertex& a : avoid)
            if (vertex_on_finite_path(p, a)) return false;
        return true;
    }
    if (!zr || !yr) {
        const TreeVertex& x = zr ? y.vertex : z.vertex;
        const BoundaryTarget& t = zr ? z : y;
        for (const TreeVertex& a : avoid)
            if (on_vertex_to_target(x, t, a)) return false;
        return true;
    }
    // both rays; equal rays carry no geodesic between them
    if (targets_equal(z, y)) return true;
    // median of (z-base, z, y): walk the two prefixes from z's base until they
    // diverge; the last common vertex lies on [z, y].
    TreeVertex b = ray_vertex(z, 0);
    long long i = 0;
    TreeVertex median = b;
    while (true) {
        if (i >= depth) throw depth_insufficient("basis_member: rays agree past depth");
        TreeVertex vz = ray_vertex(z, i);
        Path py = ray_prefix(b, y, i);
        if (static_cast<long long>(py.size()) - 1 < i) {
            median = ray_vertex(z, std::max(0ll, i - 1));
            break;
        }
        if (py[static_cast<size_t>(i)] != vz) {
            median = i == 0 ? b : ray_vertex(z, i - 1);
            break;
        }
        ++i;
    }
    for (const TreeVertex& a : avoid)
        if (on_vertex_to_target(median, z, a) || on_vertex_to_target(median, y, a)) return false;
    return true;
}

TreeVertex Tree::project(const BoundaryTarget& x, const FiniteSubtree& K, const TreeVertex& b) const {
    assert(K.contains(b));
    long long depth = 2;
    for (const TreeVertex& v : K.vertices) depth = std::max(depth, distance(b, v));
    Path p = ray_prefix(b, x, depth + 1);
    TreeVertex last = b;
    for (const TreeVertex& v : p) {
        if (K.contains(v))
            last = v;
        else
            break;
    }
    return last;
}

FiniteSubtree Tree::hull(const std::vector<TreeVertex>& pts) const {
    FiniteSubtree K;
    if (pts.empty()) return K;
    for (const TreeVertex& v : pts) {
        Path p = geodesic(pts[0], v);
        for (TreeVertex& q : p) K.vertices.insert(std::move(q));
    }
    return K;
}

long long Tree::tree_diameter(const FiniteSubtree& K) const {
    if (K.vertices.empty()) return 0;
    auto farthest = [&](const TreeVertex& from) {
        TreeVertex best = from;
        long long bd = 0;
        for (const TreeVertex& v : K.vertices) {
            long long d = distance(from, v);
            if (d > bd) {
                bd = d;
                best = v;
            }
        }
        return std::pair<TreeVertex, long long>{best, bd};
    };
    auto [u, d1] = farthest(*K.vertices.begin());
    auto [v, d2] = farthest(u);
    (void)v;
    (void)d1;
    return d2;
}

} // namespace acyl
