#include "acyl/isometry.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <queue>

#include "acyl/parallel.hpp"

namespace acyl {

IsometryClass Isometry::classify(const GroupElement& g) const {
    IsometryClass out;
    TreeVertex x0 = T_->base_mid();
    TreeVertex gx = T_->act(g, x0);
    if (gx == x0) {
        out.fixed_vertex = x0;
        return out;
    }
    Path p = T_->geodesic(x0, gx);
    Path q = T_->geodesic(x0, T_->act(G_->invert(g), x0));
    size_t c = 0;
    while (c < p.size() && c < q.size() && p[c] == q[c]) ++c;
    long long m = static_cast<long long>(c) - 1; // shared edges = d(x0, axis) when hyperbolic
    long long D = static_cast<long long>(p.size()) - 1;
    if (D > 2 * m) {
        out.hyperbolic = true;
        out.translation_length = D - 2 * m;
        const TreeVertex& gate = p[static_cast<size_t>(m)];
        out.axis_window = T_->geodesic(gate, T_->act(g, gate));
        assert(static_cast<long long>(out.axis_window.size()) - 1 == out.translation_length);
        return out;
    }
    out.fixed_vertex = p[static_cast<size_t>(D / 2)];
    assert(T_->act(g, out.fixed_vertex) == out.fixed_vertex);
    return out;
}

AxisLine Isometry::axis(const GroupElement& g) const {
    IsometryClass c = classify(g);
    if (!c.hyperbolic) throw Error("NotHyperbolic", "axis of an elliptic element");
    return AxisLine{g, c.translation_length, c.axis_window};
}

TreeVertex Isometry::line_vertex(const AxisLine& line, long long i) const {
    long long q = i >= 0 ? i / line.len : -((-i + line.len - 1) / line.len);
    long long r = i - q * line.len;
    TreeVertex v = line.window[static_cast<size_t>(r)];
    if (q == 0) return v;
    GroupElement acc = G_->one();
    GroupElement base = q > 0 ? line.g : G_->invert(line.g);
    long long m = q > 0 ? q : -q;
    while (m > 0) {
        if (m & 1) acc = G_->multiply(acc, base);
        base = G_->multiply(base, base);
        m >>= 1;
    }
    return T_->act(acc, v);
}

std::optional<long long> Isometry::line_position(const AxisLine& line, const TreeVertex& v,
                                                 long long scan) const {
    if (line.window[0] == v) return 0;
    for (long long i = 1; i <= scan; ++i) {
        if (line_vertex(line, i) == v) return i;
        if (line_vertex(line, -i) == v) return -i;
    }
    return std::nullopt;
}

BoundaryTarget Isometry::axis_target(const GroupElement& g, const TreeVertex& base) const {
    AxisLine line = axis(g);
    // walk to the gate of `base` on the line
    long long i = 0;
    long long d = T_->distance(base, line_vertex(line, 0));
    while (true) {
        long long dp = T_->distance(base, line_vertex(line, i + 1));
        long long dm = T_->distance(base, line_vertex(line, i - 1));
        if (dp < d) {
            d = dp;
            ++i;
        } else if (dm < d) {
            d = dm;
            --i;
        } else {
            break;
        }
    }
    BoundaryTarget t;
    t.kind = BoundaryTarget::Kind::Ray;
    t.period = g;
    t.period_len = line.len;
    t.prefix = T_->geodesic(base, line_vertex(line, i));
    t.window.clear();
    for (long long j = 0; j <= line.len; ++j) t.window.push_back(line_vertex(line, i + j));
    assert(validate_target(t));
    return t;
}

BoundaryTarget Isometry::axis_target_backward(const GroupElement& g, const TreeVertex& base) const {
    return axis_target(G_->invert(g), base);
}

bool Isometry::validate_target(const BoundaryTarget& t) const {
    if (t.kind == BoundaryTarget::Kind::InfiniteVertex) return T_->infinite_valence(t.vertex);
    if (t.prefix.empty() || t.window.size() < 2) return false;
    if (t.prefix.back() != t.window[0]) return false;
    if (T_->act(t.period, t.window[0]) != t.window.back()) return false;
    if (static_cast<long long>(t.window.size()) - 1 != t.period_len) return false;
    for (size_t i = 0; i + 1 < t.prefix.size(); ++i)
        if (T_->distance(t.prefix[i], t.prefix[i + 1]) != 1) return false;
    for (size_t i = 0; i + 1 < t.window.size(); ++i)
        if (T_->distance(t.window[i], t.window[i + 1]) != 1) return false;
    // no backtracking at the prefix/window junction nor at period joints
    if (t.prefix.size() >= 2 && t.prefix[t.prefix.size() - 2] == t.window[1]) return false;
    if (T_->act(t.period, t.window[1]) == t.window[t.window.size() - 2]) return false;
    return true;
}

bool Isometry::fixes_path(const GroupElement& h, const Path& p) const {
    for (const TreeVertex& v : p)
        if (T_->act(h, v) != v) return false;
    return true;
}

SegmentStabilizer Isometry::exact_segment_stabilizer(const Path& sigma) const {
    SegmentStabilizer out;
    std::vector<TreeVertex> mids;
    for (const TreeVertex& v : sigma)
        if (v.kind == VKind::Mid) mids.push_back(v);

    const GroupPreset& p = G_->preset();
    if (mids.empty()) {
        // a single A- or B-vertex
        if (sigma.size() != 1) throw segment_undefined("path without midpoints");
        out.kind = SegmentStabilizer::Kind::FactorAll;
        const Factor& f = p.factor[sigma[0].kind == VKind::AVert ? 0 : 1];
        out.factor_order = f.finite ? f.size() : -1;
        return out;
    }

    GroupElement g1 = mids[0].code;
    GroupElement g1i = G_->invert(g1);

    if (p.kind == PresetKind::FreeProduct) {
        out.kind = SegmentStabilizer::Kind::Trivial;
        return out;
    }

    if (p.kind == PresetKind::FreeMalnormalAmalgam) {
        if (mids.size() == 1) {
            GroupElement w;
            w.ce = 1;
            out.kind = SegmentStabilizer::Kind::Cyclic;
            out.generator = G_->multiply(G_->multiply(g1, w), g1i);
            return out;
        }
        // <w> fixes a midpoint other than the base one only if it is the base
        // one (malnormality of <w> in the free factors); two distinct
        // midpoints force triviality.
        GroupElement w;
        w.ce = 1;
        TreeVertex v2 = T_->act(g1i, mids[1]);
        assert(v2 != T_->base_mid());
        if (T_->act(w, v2) == v2)
            throw Error("InternalError", "malnormality violated by preset");
        out.kind = SegmentStabilizer::Kind::Trivial;
        return out;
    }

    // finite amalgam: intersect the conjugates of C along the path
    out.kind = SegmentStabilizer::Kind::Finite;
    for (int ci = 0; ci < static_cast<int>(p.c_embed[0].size()); ++ci) {
        GroupElement c;
        c.cf = ci;
        GroupElement h = G_->multiply(G_->multiply(g1, c), g1i);
        bool ok = true;
        for (const TreeVertex& m : mids)
            if (T_->act(h, m) != m) {
                ok = false;
                break;
            }
        if (ok) out.elements.push_back(h);
    }
    if (out.elements.size() == 1) {
        out.kind = SegmentStabilizer::Kind::Trivial;
        out.elements.clear();
    }
    return out;
}

std::vector<GroupElement> Isometry::pointwise_stabilizer_probe(const Path& sigma, long long L,
                                                               size_t cap) const {
    auto ball = G_->ball(L, cap);
    std::vector<GroupElement> out;
    for (const GroupElement& h : ball.elems)
        if (fixes_path(h, sigma)) out.push_back(h);
    return out;
}

std::vector<Path> Isometry::region_segments(long long k, long long region_radius, long long budget,
                                            bool* truncated) const {
    // region = tree ball around the base midpoint
    std::map<TreeVertex, std::vector<TreeVertex>, VertexLess> adj;
    std::map<TreeVertex, long long, VertexLess> dist;
    bool trunc = false;
    TreeVertex root = T_->base_mid();
    dist[root] = 0;
    std::queue<TreeVertex> q;
    q.push(root);
    std::vector<TreeVertex> order{root};
    while (!q.empty()) {
        TreeVertex u = q.front();
        q.pop();
        long long du = dist[u];
        if (du == region_radius) continue;
        auto nb = T_->neighbors(u, budget);
        trunc = trunc || nb.truncated;
        for (const TreeVertex& v : nb.verts) {
            if (!dist.count(v)) {
                dist[v] = du + 1;
                q.push(v);
                order.push_back(v);
            }
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
    }
    for (auto& [u, vs] : adj) {
        std::sort(vs.begin(), vs.end(), VertexLess{});
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    }
    if (truncated) *truncated = trunc;

    std::vector<Path> out;
    Path cur;
    auto dfs = [&](auto&& self, const TreeVertex& v) -> void {
        cur.push_back(v);
        if (static_cast<long long>(cur.size()) - 1 == k) {
            if (compare_vertices(cur.front(), cur.back()) < 0) out.push_back(cur);
            cur.pop_back();
            return;
        }
        auto it = adj.find(v);
        if (it != adj.end())
            for (const TreeVertex& w : it->second) {
                if (cur.size() >= 2 && w == cur[cur.size() - 2]) continue;
                self(self, w);
            }
        cur.pop_back();
    };
    for (const TreeVertex& v : order) dfs(dfs, v);
    std::sort(out.begin(), out.end(), [](const Path& a, const Path& b) {
        for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
            int c = compare_vertices(a[i], b[i]);
            if (c != 0) return c < 0;
        }
        return a.size() < b.size();
    });
    return out;
}

AcylReport Isometry::check_acylindrical(long long k, long long region_radius, long long budget,
                                        int workers) const {
    AcylReport rep;
    rep.k = k;
    rep.region_radius = region_radius;
    std::vector<Path> segs = region_segments(k, region_radius, budget, &rep.budget_truncated);
    rep.segments_checked = static_cast<long long>(segs.size());
    std::vector<long long> orders(segs.size());
    parallel_for(segs.size(), workers, [&](size_t i) {
        SegmentStabilizer s = exact_segment_stabilizer(segs[i]);
        orders[i] = s.is_finite() ? s.order() : -1;
    });
    for (size_t i = 0; i < segs.size(); ++i) {
        if (orders[i] < 0) {
            rep.all_finite = false;
            if (!rep.infinite_witness) rep.infinite_witness = segs[i];
        } else {
            rep.max_order = std::max(rep.max_order, orders[i]);
        }
    }
    return rep;
}

BoundaryPairReport Isometry::boundary_pair_probe(const GroupElement& g, long long L,
                                                 long long k) const {
    BoundaryPairReport rep;
    rep.probe_radius = L;
    AxisLine line = axis(g);
    auto ball = G_->ball(L);

    struct Fixer {
        GroupElement h;
        long long shift;
    };
    std::vector<Fixer> fixers;

    for (const GroupElement& h : ball.elems) {
        IsometryClass cls = classify(h);
        long long lh = cls.translation_length;
        long long half = lh + k + 1;
        long long scan = 2 * half + 2 * lh + 2 * line.len + 8;
        // h fixes both ends iff it maps a long enough window into the line,
        // order preserved.
        std::optional<long long> shift;
        bool ok = true;
        for (long long j = -half; j <= half; ++j) {
            TreeVertex u = line_vertex(line, j);
            auto pos = line_position(line, T_->act(h, u), scan);
            if (!pos || (shift && *pos != j + *shift)) {
                ok = false;
                break;
            }
            if (!shift) shift = *pos - j;
        }
        if (!ok) continue;
        if (*shift == 0) {
            // elliptic candidate: require the conjugates g^-n h g^n to fix the
            // window as well (probe-bounded completeness)
            bool zfix = true;
            GroupElement conj = h;
            GroupElement gi = G_->invert(g);
            for (int n = 0; n < 6 && zfix; ++n) {
                for (long long j = -half; j <= half; ++j) {
                    TreeVertex u = line_vertex(line, j);
                    if (T_->act(conj, u) != u) {
                        zfix = false;
                        break;
                    }
                }
                conj = G_->multiply(G_->multiply(gi, conj), g);
            }
            if (!zfix) continue;
        }
        fixers.push_back({h, *shift});
    }

    rep.fixer_count = static_cast<long long>(fixers.size());
    long long minpos = 0;
    for (const Fixer& f : fixers) {
        long long a = std::llabs(f.shift);
        if (a > 0 && (minpos == 0 || a < minpos)) minpos = a;
    }
    rep.min_positive_translation = minpos;
    for (const Fixer& f : fixers) {
        if (f.shift == 0) {
            ++rep.zero_translation_count;
        } else if (minpos == 0 || f.shift % minpos != 0) {
            rep.divisibility_ok = false;
        }
    }

    // the zero-translation fixers must pointwise fix a k-window of the axis
    Path window;
    for (long long j = 0; j <= k; ++j) window.push_back(line_vertex(line, j));
    SegmentStabilizer ws = exact_segment_stabilizer(window);
    long long wcount = 0;
    for (const Fixer& f : fixers)
        if (f.shift == 0 && fixes_path(f.h, window)) ++wcount;
    if (wcount != rep.zero_translation_count) rep.zero_set_matches_window_stabilizer = false;
    if (ws.is_finite() && rep.zero_translation_count > ws.order())
        rep.zero_set_matches_window_stabilizer = false;

    // exponent map: h * g0^-m must have translation 0 for m = shift / minpos,
    // when some fixer realizes minpos
    if (minpos > 0) {
        GroupElement g0;
        bool found = false;
        for (const Fixer& f : fixers)
            if (std::llabs(f.shift) == minpos) {
                g0 = f.shift > 0 ? f.h : G_->invert(f.h);
                found = true;
                break;
            }
        if (found) {
            for (const Fixer& f : fixers) {
                long long m = f.shift / minpos;
                GroupElement adj = f.h;
                for (long long s = 0; s < std::llabs(m); ++s)
                    adj = G_->multiply(adj, m > 0 ? G_->invert(g0) : g0);
                if (classify(adj).translation_length != 0) rep.exponent_map_onto_sample = false;
            }
        }
    }
    return rep;
}

} // namespace acyl
