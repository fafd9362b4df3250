#include "rgw/divisor_tree.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

namespace rgw {

std::vector<int> DivisorTree::incident_edges(int v) const {
    std::vector<int> out;
    for (int e = 0; e < static_cast<int>(edges.size()); ++e)
        if (edges[e].a == v || edges[e].b == v) out.push_back(e);
    return out;
}

int DivisorTree::first_edge(int v) const {
    int n = static_cast<int>(vertices.size());
    std::vector<int> parent(n, -1);
    std::vector<bool> seen(n, false);
    std::queue<int> qq;
    qq.push(root);
    seen[root] = true;
    while (!qq.empty()) {
        int u = qq.front();
        qq.pop();
        for (int e : incident_edges(u)) {
            int w = other_end(e, u);
            if (!seen[w]) {
                seen[w] = true;
                parent[w] = e;
                qq.push(w);
            }
        }
    }
    return parent[v];
}

ClassExpr DivisorTree::total_class() const {
    ClassExpr a;
    for (const DivisorTreeVertex& v : vertices) a += v.alpha;
    for (const auto& [v, t] : trees) {
        (void)v;
        (void)t;
    }
    return a;
}

namespace {

bool divisor_tree_connected(const DivisorTree& s) {
    int n = static_cast<int>(s.vertices.size());
    if (n == 0 || static_cast<int>(s.edges.size()) != n - 1) return false;
    std::vector<bool> seen(n, false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    int cnt = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        ++cnt;
        for (int e : s.incident_edges(v)) {
            int w = s.other_end(e, v);
            if (!seen[w]) {
                seen[w] = true;
                q.push(w);
            }
        }
    }
    return cnt == n;
}

} // namespace

Report validate_divisor_tree(const DivisorTree& s, const Palette& palette) {
    Report rep;
    if (!divisor_tree_connected(s)) {
        rep.add("not a connected tree");
        return rep;
    }
    Color root_color = s.kind == TreeKind::DD ? Color::d : Color::str;
    if (s.root < 0 || s.vertices[s.root].color != root_color) {
        rep.add("root must have color " + color_name(root_color));
        return rep;
    }
    int roots = 0;
    for (const DivisorTreeVertex& v : s.vertices) {
        if (v.color == root_color) ++roots;
        if (v.color != root_color && v.color != Color::s && v.color != Color::D)
            rep.add("vertex " + v.id + ": color " + color_name(v.color) + " not allowed");
    }
    if (roots != 1) rep.add("exactly one root vertex allowed");
    for (const DivisorTreeEdge& e : s.edges) {
        if (e.m <= 0) rep.add("edge multiplicities must be positive");
        bool aD = s.vertices[e.a].color == Color::D, bD = s.vertices[e.b].color == Color::D;
        if (aD && bD) rep.add("edge " + s.vertices[e.a].id + "-" + s.vertices[e.b].id +
                              " joins two D vertices");
        if (!aD && !bD)
            rep.add("edge " + s.vertices[e.a].id + "-" + s.vertices[e.b].id +
                    " joins two non-D vertices");
    }
    // decorated trees at D vertices and the multiplicity matching
    for (int v = 0; v < static_cast<int>(s.vertices.size()); ++v) {
        if (s.vertices[v].color != Color::D) continue;
        auto it = s.trees.find(v);
        if (it == s.trees.end()) {
            rep.add("vertex " + s.vertices[v].id + ": missing decorated tree");
            continue;
        }
        const DecoratedRootedTree& t = it->second;
        Report sub = validate_tree(t, palette);
        for (const std::string& viol : sub.violations)
            rep.add("tree at " + s.vertices[v].id + ": " + viol);
        if (!sub.ok()) continue;
        if (!(t.total_class() == s.vertices[v].alpha))
            rep.add("vertex " + s.vertices[v].id + ": tree class " +
                    t.total_class().to_string() + " != " + s.vertices[v].alpha.to_string());
        int fe = s.first_edge(v);
        if (fe < 0) {
            rep.add("vertex " + s.vertices[v].id + ": D vertex cannot be the root");
            continue;
        }
        std::vector<int> others;
        for (int e : s.incident_edges(v))
            if (e != fe) others.push_back(e);
        if (t.input_multiplicity() != s.edges[fe].m)
            rep.add("vertex " + s.vertices[v].id + ": input multiplicity " +
                    std::to_string(t.input_multiplicity()) + " != edge contact " +
                    std::to_string(s.edges[fe].m));
        std::vector<int> outs = t.output_multiplicities();
        if (outs.size() != others.size()) {
            rep.add("vertex " + s.vertices[v].id + ": " + std::to_string(outs.size()) +
                    " outputs vs " + std::to_string(others.size()) + " outgoing edges");
        } else {
            for (size_t i = 0; i < outs.size(); ++i)
                if (outs[i] != -s.edges[others[i]].m)
                    rep.add("vertex " + s.vertices[v].id + ": output " + std::to_string(i + 1) +
                            " multiplicity " + std::to_string(outs[i]) +
                            " != -(edge contact) " + std::to_string(-s.edges[others[i]].m));
        }
    }
    // quasi order: ground set, totality, restriction to the tree orders
    std::vector<std::string> want_ground;
    for (int v = 0; v < static_cast<int>(s.vertices.size()); ++v) {
        auto it = s.trees.find(v);
        if (it == s.trees.end()) continue;
        for (int u : it->second.inside_vertices())
            want_ground.push_back(s.vertices[v].id + "/" + it->second.vertices[u].id);
    }
    std::set<std::string> a(want_ground.begin(), want_ground.end()),
        b(s.order.ground().begin(), s.order.ground().end());
    if (a != b) {
        rep.add("quasi order ground set does not match the inside vertices");
        return rep;
    }
    if (!s.order.is_total()) rep.add("quasi order must be total");
    for (int v = 0; v < static_cast<int>(s.vertices.size()); ++v) {
        auto it = s.trees.find(v);
        if (it == s.trees.end()) continue;
        QuasiOrder tq = quasi_order_from_levels(it->second);
        const std::string& pre = s.vertices[v].id;
        for (int i = 0; i < tq.size(); ++i)
            for (int j = 0; j < tq.size(); ++j) {
                bool restr = s.order.le(pre + "/" + tq.ground()[i], pre + "/" + tq.ground()[j]);
                if (restr != tq.le(i, j)) {
                    rep.add("quasi order restricted to " + pre +
                            " differs from its level order");
                    i = tq.size();
                    break;
                }
            }
    }
    return rep;
}

namespace {

// Shared by both detail() overloads: inline one divisor tree into `out`.
// Returns the map from decorated-tree outside slot to the attachment inside
// vertex (in `out` indices) so the caller can wire the host edges.
struct InlinedTree {
    std::vector<int> slot_vertex; // outside slot -> detailed vertex index
    std::vector<int> slot_mult;   // outside slot -> signed multiplicity
};

InlinedTree inline_decorated(DetailedTree& out, const DecoratedRootedTree& t,
                             const std::string& prefix,
                             const std::map<std::string, int>& level_of) {
    std::map<int, int> idx;
    for (int v : t.inside_vertices()) {
        idx[v] = out.vertex_count();
        DetailedVertex dv;
        dv.id = prefix + "/" + t.vertices[v].id;
        dv.color = Color::D;
        dv.alpha = t.vertices[v].alpha;
        dv.level = level_of.at(dv.id);
        out.vertices.push_back(dv);
    }
    for (const TreeEdge& e : t.edges) {
        if (!t.vertices[e.a].inside || !t.vertices[e.b].inside) continue;
        out.edges.push_back({idx[e.a], idx[e.b], EdgeKind::Divisor, e.m, ""});
    }
    InlinedTree res;
    res.slot_vertex.resize(t.outside_order.size());
    res.slot_mult.resize(t.outside_order.size());
    for (size_t slot = 0; slot < t.outside_order.size(); ++slot) {
        int ov = t.outside_order[slot];
        int e = t.incident_edges(ov).at(0);
        res.slot_vertex[slot] = idx.at(t.other_end(e, ov));
        res.slot_mult[slot] = t.edges[e].m;
    }
    return res;
}

// Append the detailed content of a divisor tree to `out`. host_index maps
// the divisor tree's vertex indices to detailed indices for non-D vertices.
void inline_divisor_tree(DetailedTree& out, const DivisorTree& s,
                         const std::string& prefix,
                         const std::map<std::string, int>& level_of,
                         std::map<int, int>& host_index) {
    for (int v = 0; v < static_cast<int>(s.vertices.size()); ++v) {
        if (s.vertices[v].color == Color::D) continue;
        host_index[v] = out.vertex_count();
        DetailedVertex dv;
        dv.id = prefix.empty() ? s.vertices[v].id : prefix + "/" + s.vertices[v].id;
        dv.color = s.vertices[v].color;
        dv.alpha = s.vertices[v].alpha;
        dv.level = 0;
        out.vertices.push_back(dv);
    }
    std::map<int, InlinedTree> inlined;
    for (const auto& [v, t] : s.trees) {
        std::string pre =
            prefix.empty() ? s.vertices[v].id : prefix + "/" + s.vertices[v].id;
        inlined[v] = inline_decorated(out, t, pre, level_of);
    }
    // Host edges: each edge of S has exactly one D endpoint; it is realized
    // as the matching outside edge of that vertex's decorated tree.
    for (int v = 0; v < static_cast<int>(s.vertices.size()); ++v) {
        if (s.vertices[v].color != Color::D) continue;
        int fe = s.first_edge(v);
        std::vector<int> slots_edges;
        slots_edges.push_back(fe);
        for (int e : s.incident_edges(v))
            if (e != fe) slots_edges.push_back(e);
        const InlinedTree& in = inlined.at(v);
        for (size_t slot = 0; slot < slots_edges.size(); ++slot) {
            int e = slots_edges[slot];
            int w = s.other_end(e, v);
            int wi;
            if (s.vertices[w].color == Color::D) {
                // impossible in valid input (no D-D edges)
                throw Error("InvalidInput", "D-D edge");
            }
            wi = host_index.at(w);
            out.edges.push_back(
                {wi, in.slot_vertex[slot], EdgeKind::Divisor, in.slot_mult[slot], ""});
        }
    }
}

std::map<std::string, int> levels_from_order(const QuasiOrder& order) {
    std::map<std::string, int> level_of;
    if (order.size() == 0) return level_of;
    std::vector<int> lv = order.to_levels();
    for (int i = 0; i < order.size(); ++i) level_of[order.ground()[i]] = lv[i];
    return level_of;
}

} // namespace

DetailedTree detail(const DivisorTree& s, const Palette& palette) {
    Report rep = validate_divisor_tree(s, palette);
    if (!rep.ok()) throw Error("InvalidInput", rep.violations.front());
    DetailedTree out;
    out.kind = s.kind;
    out.k = s.k;
    out.k0 = s.k0;
    out.k1 = s.k1;
    out.type_p = s.p;
    out.type_q = s.q;
    std::map<std::string, int> level_of = levels_from_order(s.order);
    std::map<int, int> host_index;
    inline_divisor_tree(out, s, "", level_of, host_index);
    out.root = host_index.at(s.root);
    Report post = validate_detailed(out, palette);
    if (!post.ok()) throw Error("InvalidInput", "detailed tree invalid: " + post.violations.front());
    return out;
}

ClassExpr RibbonTree::total_class() const {
    ClassExpr a;
    for (const RibbonVertex& v : vertices)
        if (!v.exterior) a += v.divisor.total_class();
    return a;
}

RibbonType ribbon_type(const RibbonTree& r, const Palette& palette) {
    (void)palette;
    RibbonType ty;
    ty.alpha = r.total_class();
    ty.p = r.p;
    ty.q = r.q;
    if (r.kind == TreeKind::DDRibbon) {
        int ext = 0;
        for (const RibbonVertex& v : r.vertices)
            if (v.exterior) ++ext;
        ty.k = ext - 1;
    } else {
        for (const RibbonVertex& v : r.vertices)
            if (v.exterior) {
                if (v.side == 0) ++ty.k0;
                if (v.side == 1) ++ty.k1;
            }
    }
    return ty;
}

DetailedTree detail(const RibbonTree& r, const Palette& palette) {
    for (const RibbonVertex& rv : r.vertices) {
        if (rv.exterior) continue;
        Report sub = validate_divisor_tree(rv.divisor, palette);
        if (!sub.ok())
            throw Error("InvalidInput", rv.id + ": " + sub.violations.front());
    }
    DetailedTree out;
    out.kind = r.kind;
    out.type_p = r.p;
    out.type_q = r.q;
    std::map<std::string, int> level_of = levels_from_order(r.order);

    std::map<int, int> ribbon_index;      // interior/exterior vertex -> detailed index
    std::map<int, int> ribbon_root_index; // interior vertex -> its root detailed index
    for (int v = 0; v < static_cast<int>(r.vertices.size()); ++v) {
        const RibbonVertex& rv = r.vertices[v];
        if (rv.exterior) {
            DetailedVertex dv;
            dv.id = rv.id;
            if (r.kind == TreeKind::DDRibbon)
                dv.color = Color::ext;
            else if (v == r.v_left)
                dv.color = Color::le;
            else if (v == r.v_right)
                dv.color = Color::ri;
            else
                dv.color = rv.side == 0 ? Color::mk0 : Color::mk1;
            ribbon_index[v] = out.vertex_count();
            out.vertices.push_back(dv);
            continue;
        }
        std::map<int, int> host_index;
        inline_divisor_tree(out, rv.divisor, rv.id, level_of, host_index);
        int root_det = host_index.at(rv.divisor.root);
        ribbon_index[v] = root_det;
        ribbon_root_index[v] = root_det;
        // ribbon colors: SD sides turn d into d0/d1
        if (r.kind == TreeKind::SDRibbon && rv.divisor.kind == TreeKind::DD)
            out.vertices[root_det].color = rv.side == 0 ? Color::d0 : Color::d1;
    }
    std::map<int, int> edge_index; // ribbon edge -> detailed edge
    for (int e = 0; e < static_cast<int>(r.edges.size()); ++e) {
        const RibbonEdge& re = r.edges[e];
        DetailedEdge de;
        de.a = ribbon_index.at(re.a);
        de.b = ribbon_index.at(re.b);
        de.kind = re.strip ? EdgeKind::Strip : EdgeKind::Boundary;
        de.pt = re.pt;
        edge_index[e] = out.edge_count();
        out.edges.push_back(de);
    }
    for (const auto& [v, rot] : r.rotations) {
        std::vector<int> conv;
        for (int e : rot) conv.push_back(edge_index.at(e));
        out.rotations[ribbon_index.at(v)] = conv;
    }
    if (r.kind == TreeKind::DDRibbon) {
        out.root = ribbon_index.at(r.root_ext);
        RibbonType ty = ribbon_type(r, palette);
        out.k = ty.k;
    } else {
        out.v_left = ribbon_index.at(r.v_left);
        out.v_right = ribbon_index.at(r.v_right);
        RibbonType ty = ribbon_type(r, palette);
        out.k0 = ty.k0;
        out.k1 = ty.k1;
    }
    return out;
}

Report validate_ribbon(const RibbonTree& r, const Palette& palette) {
    Report rep;
    // per-vertex divisor trees
    for (const RibbonVertex& rv : r.vertices) {
        if (rv.exterior) continue;
        Report sub = validate_divisor_tree(rv.divisor, palette);
        for (const std::string& viol : sub.violations) rep.add(rv.id + ": " + viol);
    }
    if (!rep.ok()) return rep;
    // order restriction to each component
    for (const RibbonVertex& rv : r.vertices) {
        if (rv.exterior || rv.divisor.order.size() == 0) continue;
        const QuasiOrder& tq = rv.divisor.order;
        for (int i = 0; i < tq.size(); ++i)
            for (int j = 0; j < tq.size(); ++j) {
                bool restr = r.order.le(rv.id + "/" + tq.ground()[i], rv.id + "/" + tq.ground()[j]);
                if (restr != tq.le(i, j)) {
                    rep.add("order restricted to " + rv.id + " differs from its own order");
                    i = tq.size();
                    break;
                }
            }
    }
    if (r.require_total && !r.order.is_total()) rep.add("quasi order must be total");
    DetailedTree det;
    try {
        det = detail(r, palette);
    } catch (const Error& e) {
        rep.add(e.what());
        return rep;
    }
    rep.merge(validate_detailed(det, palette));
    return rep;
}

} // namespace rgw
