#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "rgw/strata.hpp"

namespace rgw {

namespace {

int push_vertex(DetailedTree& t, const std::string& id, Color c, const ClassExpr& a, int lv) {
    DetailedVertex v;
    v.id = id;
    v.color = c;
    v.alpha = a;
    v.level = lv;
    t.vertices.push_back(v);
    return t.vertex_count() - 1;
}

int push_edge(DetailedTree& t, int a, int b, EdgeKind k, int m = 0, const std::string& pt = "") {
    DetailedEdge e;
    e.a = a;
    e.b = b;
    e.kind = k;
    e.m = m;
    e.pt = pt;
    t.edges.push_back(e);
    return t.edge_count() - 1;
}

// Rotation of a boundary-free strip vertex: right edge, side-1 marks, left
// edge, side-0 marks; `special1` inserts an edge at position j among the
// side-1 tokens (1-based), `special0` likewise on side 0.
void strip_rotation(DetailedTree& t, int v, int e_left, int e_right, std::vector<int> side1,
                    std::vector<int> side0) {
    std::vector<int> rot;
    rot.push_back(e_right);
    for (int e : side1) rot.push_back(e);
    rot.push_back(e_left);
    for (int e : side0) rot.push_back(e);
    t.rotations[v] = rot;
}

} // namespace

DetailedTree boundary_template(const FaceData& data, const Palette& palette) {
    const SdType& ty = data.type;
    DetailedTree t;
    t.kind = TreeKind::SDRibbon;
    t.type_p = ty.p;
    t.type_q = ty.q;
    t.k0 = ty.k0;
    t.k1 = ty.k1;
    if (!(data.beta1 + data.beta2 == ty.beta))
        throw Error("IncompatibleSplit", "beta1 # beta2 != beta");
    int mark = 0;
    auto marks = [&](int v, int side, int count, std::vector<int>& out) {
        for (int i = 0; i < count; ++i) {
            int m = push_vertex(t, "m" + std::to_string(mark++),
                                side == 0 ? Color::mk0 : Color::mk1, {}, 0);
            out.push_back(push_edge(t, v, m, EdgeKind::Boundary));
        }
    };
    if (data.face_kind == 1) {
        if (data.k10 + data.k20 != ty.k0 || data.k11 + data.k21 != ty.k1)
            throw Error("IncompatibleSplit", "mark splits do not sum to (k0,k1)");
        t.v_left = push_vertex(t, "le", Color::le, {}, 0);
        int s1 = push_vertex(t, "S0", Color::str, data.beta1, 0);
        int s2 = push_vertex(t, "S1", Color::str, data.beta2, 0);
        t.v_right = push_vertex(t, "ri", Color::ri, {}, 0);
        int el = push_edge(t, t.v_left, s1, EdgeKind::Strip, 0, ty.p);
        int em = push_edge(t, s1, s2, EdgeKind::Strip, 0, data.r);
        int er = push_edge(t, s2, t.v_right, EdgeKind::Strip, 0, ty.q);
        std::vector<int> a0, a1, b0, b1;
        marks(s1, 0, data.k10, a0);
        marks(s1, 1, data.k11, a1);
        marks(s2, 0, data.k20, b0);
        marks(s2, 1, data.k21, b1);
        strip_rotation(t, s1, el, em, a1, a0);
        strip_rotation(t, s2, em, er, b1, b0);
    } else if (data.face_kind == 2 || data.face_kind == 3) {
        int side = data.face_kind == 2 ? 1 : 0;
        int k_str_side = data.face_kind == 2 ? data.k11 : data.k10;   // marks kept on the strip
        int k_disc = data.face_kind == 2 ? data.k21 : data.k20;       // marks on the disc
        int k_total = side == 1 ? ty.k1 : ty.k0;
        int k_other = side == 1 ? ty.k0 : ty.k1;
        if (k_str_side + k_disc != k_total)
            throw Error("IncompatibleSplit", "mark split does not sum to k" +
                                                 std::to_string(side));
        if (data.j < 1 || data.j > k_str_side + 1)
            throw Error("IncompatibleSplit",
                        "attachment index j = " + std::to_string(data.j) + " out of range");
        t.v_left = push_vertex(t, "le", Color::le, {}, 0);
        int s1 = push_vertex(t, "S0", Color::str, data.beta1, 0);
        t.v_right = push_vertex(t, "ri", Color::ri, {}, 0);
        int el = push_edge(t, t.v_left, s1, EdgeKind::Strip, 0, ty.p);
        int er = push_edge(t, s1, t.v_right, EdgeKind::Strip, 0, ty.q);
        int disc = push_vertex(t, "c0", side == 0 ? Color::d0 : Color::d1, data.beta2, 0);
        int be = push_edge(t, s1, disc, EdgeKind::Boundary);
        std::vector<int> strip_side, strip_other, disc_rot{be};
        // j-th token on the split side is the disc edge
        for (int i = 1; i <= k_str_side + 1; ++i) {
            if (i == data.j)
                strip_side.push_back(be);
            else {
                int m = push_vertex(t, "m" + std::to_string(mark++),
                                    side == 0 ? Color::mk0 : Color::mk1, {}, 0);
                strip_side.push_back(push_edge(t, s1, m, EdgeKind::Boundary));
            }
        }
        marks(s1, 1 - side, k_other, strip_other);
        for (int i = 0; i < k_disc; ++i) {
            int m = push_vertex(t, "m" + std::to_string(mark++),
                                side == 0 ? Color::mk0 : Color::mk1, {}, 0);
            disc_rot.push_back(push_edge(t, disc, m, EdgeKind::Boundary));
        }
        if (disc_rot.size() > 1) t.rotations[disc] = disc_rot;
        if (side == 1)
            strip_rotation(t, s1, el, er, strip_side, strip_other);
        else
            strip_rotation(t, s1, el, er, strip_other, strip_side);
    } else {
        throw Error("InvalidInput", "face kind must be 1, 2 or 3");
    }
    Report rep = validate_detailed(t, palette);
    if (!rep.ok()) throw Error("IncompatibleSplit", rep.violations.front());
    return t;
}

std::vector<Face> boundary_faces(const SdType& type, const Palette& palette,
                                 const FaceTable& table,
                                 const std::vector<DetailedTree>& universe) {
    std::vector<Face> out;
    std::map<std::string, const DetailedTree*> byKey;
    for (const DetailedTree& t : universe) byKey[canonical_detailed(t)] = &t;
    auto try_face = [&](FaceData data) {
        // splittings must avoid the divisor
        if (palette.pairings(data.beta1).pair_D != 0 ||
            palette.pairings(data.beta2).pair_D != 0)
            return;
        Face f;
        f.data = data;
        try {
            f.tmpl = boundary_template(data, palette);
        } catch (const Error&) {
            return; // incompatible splitting offered
        }
        for (const auto& [key, t] : byKey)
            if (shrink_leq(f.tmpl, *t, palette)) f.members.push_back(key);
        out.push_back(std::move(f));
    };
    for (const SplitEntry& sp : table.strip_splits) {
        if (!(sp.beta1 + sp.beta2 == type.beta)) continue;
        for (const std::string& r : table.intermediate_points)
            for (int k10 = 0; k10 <= type.k0; ++k10)
                for (int k11 = 0; k11 <= type.k1; ++k11) {
                    FaceData d;
                    d.face_kind = 1;
                    d.type = type;
                    d.r = r;
                    d.beta1 = sp.beta1;
                    d.beta2 = sp.beta2;
                    d.k10 = k10;
                    d.k20 = type.k0 - k10;
                    d.k11 = k11;
                    d.k21 = type.k1 - k11;
                    try_face(d);
                }
    }
    for (const SplitEntry& sp : table.disc_splits1) {
        if (!(sp.beta1 + sp.beta2 == type.beta)) continue;
        for (int k11 = 0; k11 <= type.k1; ++k11)
            for (int j = 1; j <= k11 + 1; ++j) {
                FaceData d;
                d.face_kind = 2;
                d.type = type;
                d.beta1 = sp.beta1;
                d.beta2 = sp.beta2;
                d.k11 = k11;
                d.k21 = type.k1 - k11;
                d.j = j;
                try_face(d);
            }
    }
    for (const SplitEntry& sp : table.disc_splits0) {
        if (!(sp.beta1 + sp.beta2 == type.beta)) continue;
        for (int k10 = 0; k10 <= type.k0; ++k10)
            for (int j = 1; j <= k10 + 1; ++j) {
                FaceData d;
                d.face_kind = 3;
                d.type = type;
                d.beta1 = sp.beta1;
                d.beta2 = sp.beta2;
                d.k10 = k10;
                d.k20 = type.k0 - k10;
                d.j = j;
                try_face(d);
            }
    }
    return out;
}

namespace {

// All monotone merges of level blocks {1..n1} and {1..n2}; each entry is a
// sequence of moves: 0 = left block, 1 = right block, 2 = tie both.
void merge_sequences(int n1, int n2, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int i, int j) {
        if (i == n1 && j == n2) {
            out.push_back(cur);
            return;
        }
        if (i < n1) {
            cur.push_back(0);
            rec(i + 1, j);
            cur.pop_back();
        }
        if (j < n2) {
            cur.push_back(1);
            rec(i, j + 1);
            cur.pop_back();
        }
        if (i < n1 && j < n2) {
            cur.push_back(2);
            rec(i + 1, j + 1);
            cur.pop_back();
        }
    };
    rec(0, 0);
}

DetailedTree relabel_ids(const DetailedTree& t, const std::string& prefix) {
    DetailedTree out = t;
    for (DetailedVertex& v : out.vertices) v.id = prefix + v.id;
    return out;
}

} // namespace

std::vector<Gluing> glue(const DetailedTree& left_in, const DetailedTree& right_in,
                         const Palette& palette) {
    if (left_in.kind != TreeKind::SDRibbon || right_in.kind != TreeKind::SDRibbon)
        throw Error("TypeMismatch", "glue expects SD-ribbon trees");
    if (left_in.type_q != right_in.type_p)
        throw Error("EndpointMismatch", "left ends at " + left_in.type_q +
                                            ", right starts at " + right_in.type_p);
    DetailedTree L = relabel_ids(left_in, "L/");
    DetailedTree R = relabel_ids(right_in, "R/");
    const std::string r = left_in.type_q;

    DetailedTree base;
    base.kind = TreeKind::SDRibbon;
    base.type_p = L.type_p;
    base.type_q = R.type_q;
    base.k0 = L.k0 + R.k0;
    base.k1 = L.k1 + R.k1;
    // copy L without its right end, R without its left end
    std::vector<int> lix(L.vertex_count(), -1), rix(R.vertex_count(), -1);
    for (int v = 0; v < L.vertex_count(); ++v) {
        if (v == L.v_right) continue;
        lix[v] = base.vertex_count();
        base.vertices.push_back(L.vertices[v]);
    }
    for (int v = 0; v < R.vertex_count(); ++v) {
        if (v == R.v_left) continue;
        rix[v] = base.vertex_count();
        base.vertices.push_back(R.vertices[v]);
    }
    base.v_left = lix[L.v_left];
    base.v_right = rix[R.v_right];
    int l_stub = -1, r_stub = -1; // edges into the removed end vertices
    std::vector<int> lex(L.edge_count(), -1), rex(R.edge_count(), -1);
    int l_attach = -1, r_attach = -1;
    for (int e = 0; e < L.edge_count(); ++e) {
        const DetailedEdge& de = L.edges[e];
        if (de.a == L.v_right || de.b == L.v_right) {
            l_stub = e;
            l_attach = lix[L.other_end(e, L.v_right)];
            continue;
        }
        lex[e] = base.edge_count();
        base.edges.push_back({lix[de.a], lix[de.b], de.kind, de.m, de.pt});
    }
    for (int e = 0; e < R.edge_count(); ++e) {
        const DetailedEdge& de = R.edges[e];
        if (de.a == R.v_left || de.b == R.v_left) {
            r_stub = e;
            r_attach = rix[R.other_end(e, R.v_left)];
            continue;
        }
        rex[e] = base.edge_count();
        base.edges.push_back({rix[de.a], rix[de.b], de.kind, de.m, de.pt});
    }
    int fused = push_edge(base, l_attach, r_attach, EdgeKind::Strip, 0, r);
    for (const auto& [v, rot] : L.rotations) {
        std::vector<int> conv;
        for (int e : rot) conv.push_back(e == l_stub ? fused : lex[e]);
        base.rotations[lix[v]] = conv;
    }
    for (const auto& [v, rot] : R.rotations) {
        std::vector<int> conv;
        for (int e : rot) conv.push_back(e == r_stub ? fused : rex[e]);
        base.rotations[rix[v]] = conv;
    }

    int n1 = L.num_levels(), n2 = R.num_levels();
    std::vector<std::vector<int>> seqs;
    merge_sequences(n1, n2, seqs);
    std::vector<Gluing> out;
    for (const std::vector<int>& seq : seqs) {
        Gluing g;
        g.merged_levels_left.assign(n1 + 1, 0);
        g.merged_levels_right.assign(n2 + 1, 0);
        int li = 0, rj = 0, lvl = 0;
        for (int mv : seq) {
            ++lvl;
            if (mv == 0 || mv == 2) g.merged_levels_left[++li] = lvl;
            if (mv == 1 || mv == 2) g.merged_levels_right[++rj] = lvl;
        }
        g.h = n1 + n2 - lvl;
        g.glued = base;
        for (int v = 0; v < L.vertex_count(); ++v)
            if (lix[v] >= 0 && L.vertices[v].level > 0)
                g.glued.vertices[lix[v]].level = g.merged_levels_left[L.vertices[v].level];
        for (int v = 0; v < R.vertex_count(); ++v)
            if (rix[v] >= 0 && R.vertices[v].level > 0)
                g.glued.vertices[rix[v]].level = g.merged_levels_right[R.vertices[v].level];
        Report rep = validate_detailed(g.glued, palette);
        if (!rep.ok())
            throw Error("IdentityViolation", "glued tree invalid: " + rep.violations.front());
        out.push_back(std::move(g));
    }
    return out;
}

std::pair<DetailedTree, DetailedTree> split_gluing(const DetailedTree& glued,
                                                   const std::string& r,
                                                   const Palette& palette) {
    if (glued.kind != TreeKind::SDRibbon) throw Error("TypeMismatch", "not an SD-ribbon tree");
    int cut = -1;
    for (int e = 0; e < glued.edge_count(); ++e)
        if (glued.edges[e].kind == EdgeKind::Strip && glued.edges[e].pt == r &&
            !glued.is_exterior(glued.edges[e].a) && !glued.is_exterior(glued.edges[e].b)) {
            if (cut >= 0) throw Error("EndpointMismatch", "intermediate point label not unique");
            cut = e;
        }
    if (cut < 0) throw Error("EndpointMismatch", "no interior strip edge labeled " + r);
    // component split
    int n = glued.vertex_count();
    std::vector<int> comp(n, -1);
    std::function<void(int, int)> dfs = [&](int v, int c) {
        comp[v] = c;
        for (int e : glued.incident_edges(v)) {
            if (e == cut) continue;
            int w = glued.other_end(e, v);
            if (comp[w] < 0) dfs(w, c);
        }
    };
    dfs(glued.v_left, 0);
    dfs(glued.v_right, 1);
    auto make_half = [&](int c) {
        DetailedTree half;
        half.kind = TreeKind::SDRibbon;
        std::vector<int> vix(n, -1);
        for (int v = 0; v < n; ++v) {
            if (comp[v] != c) continue;
            vix[v] = half.vertex_count();
            half.vertices.push_back(glued.vertices[v]);
        }
        std::vector<int> eix(glued.edge_count(), -1);
        for (int e = 0; e < glued.edge_count(); ++e) {
            if (e == cut) continue;
            const DetailedEdge& de = glued.edges[e];
            if (comp[de.a] != c || comp[de.b] != c) continue;
            eix[e] = half.edge_count();
            half.edges.push_back({vix[de.a], vix[de.b], de.kind, de.m, de.pt});
        }
        // reattach the cut as a new end
        int attach = comp[glued.edges[cut].a] == c ? glued.edges[cut].a : glued.edges[cut].b;
        int endv;
        if (c == 0) {
            endv = push_vertex(half, "ri*", Color::ri, {}, 0);
            half.v_left = vix[glued.v_left];
            half.v_right = endv;
            half.type_p = glued.type_p;
            half.type_q = r;
        } else {
            endv = push_vertex(half, "le*", Color::le, {}, 0);
            half.v_left = endv;
            half.v_right = vix[glued.v_right];
            half.type_p = r;
            half.type_q = glued.type_q;
        }
        int stub = push_edge(half, vix[attach], endv, EdgeKind::Strip, 0, r);
        for (const auto& [v, rot] : glued.rotations) {
            if (comp[v] != c) continue;
            std::vector<int> conv;
            for (int e : rot) conv.push_back(e == cut ? stub : eix[e]);
            half.rotations[vix[v]] = conv;
        }
        // renormalize levels
        std::set<int> used;
        for (const DetailedVertex& v : half.vertices)
            if (v.level > 0) used.insert(v.level);
        std::map<int, int> remap;
        int next = 0;
        for (int l : used) remap[l] = ++next;
        for (DetailedVertex& v : half.vertices)
            if (v.level > 0) v.level = remap[v.level];
        // mark counts
        half.k0 = half.k1 = 0;
        for (const DetailedVertex& v : half.vertices) {
            if (v.color == Color::mk0) ++half.k0;
            if (v.color == Color::mk1) ++half.k1;
        }
        Report rep = validate_detailed(half, palette);
        if (!rep.ok())
            throw Error("IdentityViolation", "split half invalid: " + rep.violations.front());
        return half;
    };
    return {make_half(0), make_half(1)};
}

DetailedTree forget_boundary_mark(const DetailedTree& t, int j, const Palette& palette) {
    if (t.kind != TreeKind::DDRibbon) throw Error("TypeMismatch", "not a DD-ribbon tree");
    if (j == 0) throw Error("CannotForgetRoot", "the 0-th marked point cannot be forgotten");
    std::vector<int> ord = t.exterior_order();
    if (j < 1 || j >= static_cast<int>(ord.size()))
        throw Error("IndexOutOfRange", "j = " + std::to_string(j) + " with k = " +
                                           std::to_string(static_cast<int>(ord.size()) - 1));
    int mark = ord[j];
    int mark_edge = t.incident_edges(mark).at(0);
    int host = t.other_end(mark_edge, mark);
    // class of the whole divisor-decorated component at the host
    ClassExpr beta;
    {
        std::set<int> seen{host};
        std::vector<int> stack{host};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            beta += t.vertices[v].alpha;
            for (int e : t.divisor_edges(v)) {
                int w = t.other_end(e, v);
                if (seen.insert(w).second) stack.push_back(w);
            }
        }
    }
    int k_host = static_cast<int>(t.level0_edges(host).size()) - 1;
    DetailedTree out = t;
    out.k = t.k - 1;
    if (!beta.is_zero() || k_host >= 3) {
        // drop the marked point and its edge
        std::vector<int> keepv(t.vertex_count(), -1), keepe(t.edge_count(), -1);
        DetailedTree res;
        res.kind = t.kind;
        res.k = t.k - 1;
        for (int v = 0; v < t.vertex_count(); ++v) {
            if (v == mark) continue;
            keepv[v] = res.vertex_count();
            res.vertices.push_back(t.vertices[v]);
        }
        for (int e = 0; e < t.edge_count(); ++e) {
            if (e == mark_edge) continue;
            keepe[e] = res.edge_count();
            res.edges.push_back({keepv[t.edges[e].a], keepv[t.edges[e].b], t.edges[e].kind,
                                 t.edges[e].m, t.edges[e].pt});
        }
        for (const auto& [v, rot] : t.rotations) {
            if (v == mark) continue;
            std::vector<int> conv;
            for (int e : rot)
                if (e != mark_edge) conv.push_back(keepe[e]);
            if (!conv.empty()) res.rotations[keepv[v]] = conv;
        }
        res.root = keepv[t.root];
        Report rep = validate_detailed(res, palette);
        if (!rep.ok())
            throw Error("IdentityViolation", "forget produced an invalid tree: " +
                                                 rep.violations.front());
        return res;
    }
    // Case 3: beta = 0 and exactly two other neighbours; delete the host and
    // reconnect them.
    std::vector<int> others;
    for (int e : t.level0_edges(host))
        if (e != mark_edge) others.push_back(e);
    if (others.size() != 2)
        throw Error("InvalidInput", "degenerate disc with k(v) = " + std::to_string(k_host));
    int va = t.other_end(others[0], host), vb = t.other_end(others[1], host);
    if (t.is_exterior(va) && t.is_exterior(vb))
        throw Error("InvalidInput", "cannot reconnect two exterior vertices");
    DetailedTree res;
    res.kind = t.kind;
    res.k = t.k - 1;
    std::vector<int> keepv(t.vertex_count(), -1), keepe(t.edge_count(), -1);
    for (int v = 0; v < t.vertex_count(); ++v) {
        if (v == mark || v == host) continue;
        keepv[v] = res.vertex_count();
        res.vertices.push_back(t.vertices[v]);
    }
    for (int e = 0; e < t.edge_count(); ++e) {
        if (e == mark_edge || e == others[0] || e == others[1]) continue;
        keepe[e] = res.edge_count();
        res.edges.push_back({keepv[t.edges[e].a], keepv[t.edges[e].b], t.edges[e].kind,
                             t.edges[e].m, t.edges[e].pt});
    }
    int bridge = push_edge(res, keepv[va], keepv[vb], EdgeKind::Boundary);
    for (const auto& [v, rot] : t.rotations) {
        if (v == mark || v == host) continue;
        std::vector<int> conv;
        for (int e : rot) {
            if (e == others[0] || e == others[1])
                conv.push_back(bridge);
            else if (e != mark_edge)
                conv.push_back(keepe[e]);
        }
        if (!conv.empty()) res.rotations[keepv[v]] = conv;
    }
    res.root = keepv[t.root];
    Report rep = validate_detailed(res, palette);
    if (!rep.ok())
        throw Error("IdentityViolation",
                    "forget produced an invalid tree: " + rep.violations.front());
    return res;
}

} // namespace rgw
