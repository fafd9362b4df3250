#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <random>
#include <set>

#include "rgw/strata.hpp"

namespace rgw {

namespace {

DetailedTree rebuild(const DetailedTree& t, const std::vector<int>& rep,
                     const std::vector<int>& new_level,
                     const std::vector<Color>& new_color, const Palette& palette) {
    // rep: vertex -> representative (union-find roots); contracted edges are
    // those whose endpoints share a representative.
    DetailedTree out;
    out.kind = t.kind;
    out.k = t.k;
    out.k0 = t.k0;
    out.k1 = t.k1;
    out.type_p = t.type_p;
    out.type_q = t.type_q;
    int n = t.vertex_count();
    std::vector<int> newidx(n, -1);
    for (int v = 0; v < n; ++v) {
        if (rep[v] != v) continue;
        DetailedVertex dv;
        dv.color = new_color[v];
        dv.level = new_level[v];
        std::string id = t.vertices[v].id;
        ClassExpr alpha;
        bool have_skeleton = false;
        for (int w = 0; w < n; ++w) {
            if (rep[w] != v) continue;
            alpha += t.vertices[w].alpha;
            bool skel = t.is_level0_interior(w) && t.vertices[w].color != Color::s;
            if (skel && !have_skeleton) {
                id = t.vertices[w].id; // keep the disc/strip vertex's name
                have_skeleton = true;
            } else if (!have_skeleton && t.vertices[w].id < id) {
                id = t.vertices[w].id;
            }
        }
        dv.id = id;
        dv.alpha = alpha;
        newidx[v] = out.vertex_count();
        out.vertices.push_back(dv);
    }
    std::vector<int> newedge(t.edge_count(), -1);
    for (int e = 0; e < t.edge_count(); ++e) {
        int ra = rep[t.edges[e].a], rb = rep[t.edges[e].b];
        if (ra == rb) continue;
        DetailedEdge de = t.edges[e];
        de.a = newidx[ra];
        de.b = newidx[rb];
        newedge[e] = out.edge_count();
        out.edges.push_back(de);
    }
    for (const auto& [v, rot] : t.rotations) {
        std::vector<int> conv;
        for (int e : rot)
            if (newedge[e] >= 0) conv.push_back(newedge[e]);
        if (!conv.empty()) {
            int owner = newidx[rep[v]];
            auto& dst = out.rotations[owner];
            dst.insert(dst.end(), conv.begin(), conv.end());
        }
    }
    if (t.root >= 0) out.root = newidx[rep[t.root]];
    if (t.v_left >= 0) out.v_left = newidx[rep[t.v_left]];
    if (t.v_right >= 0) out.v_right = newidx[rep[t.v_right]];
    Report check = validate_detailed(out, palette);
    if (!check.ok())
        throw Error("IdentityViolation", "shrink produced an invalid tree: " +
                                             check.violations.front());
    return out;
}

int find_rep(std::vector<int>& uf, int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
}

} // namespace

DetailedTree level_shrink(const DetailedTree& t, int i, const Palette& palette) {
    int top = t.num_levels();
    if (i < 0 || i + 1 > top)
        throw Error("LevelOutOfRange", "(i,i+1) = (" + std::to_string(i) + "," +
                                           std::to_string(i + 1) + ") with |lambda| = " +
                                           std::to_string(top));
    int n = t.vertex_count();
    std::vector<int> uf(n);
    std::iota(uf.begin(), uf.end(), 0);
    for (int e = 0; e < t.edge_count(); ++e) {
        if (t.edges[e].kind != EdgeKind::Divisor) continue;
        int la = t.vertices[t.edges[e].a].level, lb = t.vertices[t.edges[e].b].level;
        bool contract = i >= 1 ? ((la == i && lb == i + 1) || (la == i + 1 && lb == i))
                              : (la <= 1 && lb <= 1);
        if (contract) uf[find_rep(uf, t.edges[e].a)] = find_rep(uf, t.edges[e].b);
    }
    std::vector<int> rep(n);
    for (int v = 0; v < n; ++v) rep[v] = find_rep(uf, v);
    std::vector<int> new_level(n, 0);
    std::vector<Color> new_color(n, Color::s);
    for (int v = 0; v < n; ++v) {
        if (rep[v] != v) continue;
        int minlv = t.vertices[v].level;
        Color col = t.vertices[v].color;
        int skeletons = 0;
        for (int w = 0; w < n; ++w) {
            if (rep[w] != v) continue;
            minlv = std::min(minlv, t.vertices[w].level);
            Color cw = t.vertices[w].color;
            if (t.is_level0_interior(w) && cw != Color::s) {
                col = cw;
                ++skeletons;
            } else if (t.is_exterior(w)) {
                col = cw;
            }
        }
        if (skeletons > 1)
            throw Error("InvalidInput", "level shrink would merge two ribbon vertices");
        if (i >= 1) {
            // merged vertices are divisor vertices
            new_color[v] = Color::D;
            new_level[v] = minlv < i ? minlv : (minlv <= i + 1 ? i : minlv - 1);
        } else {
            // (0,1): level-1 vertices drop into the disc/sphere layer
            if (minlv >= 2) {
                new_color[v] = Color::D;
                new_level[v] = minlv - 1;
            } else if (minlv == 1) {
                // isolated level-1 vertex: becomes a sphere (Case 1)
                new_color[v] = skeletons ? col : Color::s;
                new_level[v] = 0;
            } else {
                new_color[v] = col;
                new_level[v] = 0;
            }
        }
    }
    // for i >= 1, non-merged vertices keep their color
    if (i >= 1)
        for (int v = 0; v < n; ++v) {
            if (rep[v] != v) continue;
            bool merged = false;
            for (int w = 0; w < n && !merged; ++w)
                if (w != v && rep[w] == v) merged = true;
            if (!merged) {
                new_color[v] = t.vertices[v].color;
                int lv = t.vertices[v].level;
                new_level[v] = lv < i ? lv : (lv <= i + 1 ? i : lv - 1);
            }
        }
    return rebuild(t, rep, new_level, new_color, palette);
}

DetailedTree level0_edge_shrink(const DetailedTree& t, int edge, const Palette& palette) {
    if (!t.is_ribbon()) throw Error("NotLevel0Edge", "not a ribbon tree");
    if (edge < 0 || edge >= t.edge_count()) throw Error("NotLevel0Edge", "no such edge");
    const DetailedEdge& de = t.edges[edge];
    if (de.kind == EdgeKind::Divisor) throw Error("NotLevel0Edge", "divisor edge");
    if (t.is_exterior(de.a) || t.is_exterior(de.b))
        throw Error("NotLevel0Edge", "exterior edge");
    int n = t.vertex_count();
    std::vector<int> rep(n);
    std::iota(rep.begin(), rep.end(), 0);
    int keep = de.a, drop = de.b;
    // keep the vertex closer to the anchor so rotations glue consistently
    std::vector<int> parent = t.parent_edges();
    if (parent[de.a] == edge) std::swap(keep, drop);
    rep[drop] = keep;
    std::vector<int> new_level(n, 0);
    std::vector<Color> new_color(n, Color::s);
    for (int v = 0; v < n; ++v) {
        new_level[v] = t.vertices[v].level;
        new_color[v] = t.vertices[v].color;
    }
    Color ca = t.vertices[keep].color, cb = t.vertices[drop].color;
    Color merged = (ca == Color::str || cb == Color::str) ? Color::str : ca;
    new_color[keep] = merged;

    // splice rotations before rebuilding: rotation of the merged vertex is
    // rot(keep) with `edge` replaced by rot(drop) read from just after `edge`
    DetailedTree u = t;
    auto rot_of = [&u](int v) {
        auto it = u.rotations.find(v);
        return it != u.rotations.end() ? it->second : u.level0_edges(v);
    };
    std::vector<int> ra = rot_of(keep), rb = rot_of(drop);
    std::vector<int> mergedrot;
    for (int e : ra) {
        if (e != edge) {
            mergedrot.push_back(e);
            continue;
        }
        auto pos = std::find(rb.begin(), rb.end(), edge);
        int len = static_cast<int>(rb.size());
        int start = static_cast<int>(pos - rb.begin());
        for (int i = 1; i < len; ++i) mergedrot.push_back(rb[(start + i) % len]);
    }
    u.rotations.erase(keep);
    u.rotations.erase(drop);
    if (!mergedrot.empty()) u.rotations[keep] = mergedrot;
    return rebuild(u, rep, new_level, new_color, palette);
}

std::vector<DetailedTree> shrink_moves(const DetailedTree& t, const Palette& palette) {
    std::vector<DetailedTree> out;
    int top = t.num_levels();
    for (int i = top >= 1 ? 0 : 1; i + 1 <= top; ++i) out.push_back(level_shrink(t, i, palette));
    if (t.is_ribbon()) {
        for (int e = 0; e < t.edge_count(); ++e) {
            const DetailedEdge& de = t.edges[e];
            if (de.kind == EdgeKind::Divisor) continue;
            if (t.is_exterior(de.a) || t.is_exterior(de.b)) continue;
            out.push_back(level0_edge_shrink(t, e, palette));
        }
    }
    return out;
}

namespace {

std::set<std::string> reachable(const DetailedTree& b, const Palette& palette,
                                std::map<std::string, DetailedTree>* keep = nullptr) {
    std::set<std::string> seen;
    std::queue<DetailedTree> q;
    q.push(b);
    seen.insert(canonical_detailed(b));
    if (keep) (*keep)[canonical_detailed(b)] = b;
    while (!q.empty()) {
        DetailedTree cur = q.front();
        q.pop();
        for (DetailedTree& next : shrink_moves(cur, palette)) {
            std::string key = canonical_detailed(next);
            if (seen.insert(key).second) {
                if (keep) (*keep)[key] = next;
                q.push(next);
            }
        }
    }
    return seen;
}

} // namespace

bool shrink_leq(const DetailedTree& a, const DetailedTree& b, const Palette& palette) {
    if (a.kind != b.kind) throw Error("TypeMismatch", "cannot compare different kinds");
    return reachable(b, palette).count(canonical_detailed(a)) != 0;
}

std::vector<std::string> closure_of(const DetailedTree& b,
                                    const std::map<std::string, DetailedTree>& universe,
                                    const Palette& palette) {
    std::vector<std::string> out;
    for (const std::string& key : reachable(b, palette))
        if (universe.count(key)) out.push_back(key);
    std::sort(out.begin(), out.end());
    return out;
}

Report closure_axioms(const std::vector<DetailedTree>& universe, const Palette& palette,
                      int samples, unsigned seed) {
    Report rep;
    std::map<std::string, DetailedTree> bykey;
    for (const DetailedTree& t : universe) bykey[canonical_detailed(t)] = t;
    // per-element closures, computed once
    std::map<std::string, std::set<std::string>> cl;
    for (const auto& [key, t] : bykey) {
        auto v = closure_of(t, bykey, palette);
        cl[key] = std::set<std::string>(v.begin(), v.end());
    }
    auto closure_set = [&](const std::set<std::string>& A) {
        std::set<std::string> out;
        for (const std::string& a : A) out.insert(cl[a].begin(), cl[a].end());
        return out;
    };
    // empty set
    if (!closure_set({}).empty()) rep.add("closure of the empty set is nonempty");
    std::mt19937 rng(seed);
    std::vector<std::string> keys;
    for (const auto& [k, t] : bykey) {
        (void)t;
        keys.push_back(k);
    }
    for (int s = 0; s < samples; ++s) {
        std::set<std::string> A, B;
        for (const std::string& k : keys) {
            if (rng() % 4 == 0) A.insert(k);
            if (rng() % 4 == 0) B.insert(k);
        }
        std::set<std::string> cA = closure_set(A), cB = closure_set(B);
        // extensivity
        if (!std::includes(cA.begin(), cA.end(), A.begin(), A.end()))
            rep.add("sample " + std::to_string(s) + ": A not contained in closure(A)");
        // idempotence
        if (closure_set(cA) != cA) rep.add("sample " + std::to_string(s) + ": closure not idempotent");
        // union
        std::set<std::string> AB = A;
        AB.insert(B.begin(), B.end());
        std::set<std::string> cAB = closure_set(AB);
        std::set<std::string> cAcB = cA;
        cAcB.insert(cB.begin(), cB.end());
        if (cAB != cAcB)
            rep.add("sample " + std::to_string(s) + ": closure(A u B) != closure(A) u closure(B)");
    }
    return rep;
}

} // namespace rgw
