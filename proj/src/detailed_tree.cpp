#include "rgw/detailed_tree.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <sstream>

namespace rgw {

std::string color_name(Color c) {
    switch (c) {
    case Color::d: return "d";
    case Color::s: return "s";
    case Color::D: return "D";
    case Color::str: return "str";
    case Color::d0: return "d0";
    case Color::d1: return "d1";
    case Color::ext: return "ext";
    case Color::mk0: return "mk0";
    case Color::mk1: return "mk1";
    case Color::le: return "le";
    case Color::ri: return "ri";
    }
    return "?";
}

Color color_from_name(const std::string& s) {
    for (Color c : {Color::d, Color::s, Color::D, Color::str, Color::d0, Color::d1, Color::ext,
                    Color::mk0, Color::mk1, Color::le, Color::ri})
        if (color_name(c) == s) return c;
    throw Error("BadColor", "unknown color '" + s + "'");
}

std::string kind_name(TreeKind k) {
    switch (k) {
    case TreeKind::DD: return "DD";
    case TreeKind::SD: return "SD";
    case TreeKind::DDRibbon: return "DD-ribbon";
    case TreeKind::SDRibbon: return "SD-ribbon";
    }
    return "?";
}

TreeKind kind_from_name(const std::string& s) {
    for (TreeKind k : {TreeKind::DD, TreeKind::SD, TreeKind::DDRibbon, TreeKind::SDRibbon})
        if (kind_name(k) == s) return k;
    throw Error("BadKind", "unknown tree kind '" + s + "'");
}

std::vector<int> DetailedTree::incident_edges(int v) const {
    std::vector<int> out;
    for (int e = 0; e < edge_count(); ++e)
        if (edges[e].a == v || edges[e].b == v) out.push_back(e);
    return out;
}

std::vector<int> DetailedTree::divisor_edges(int v) const {
    std::vector<int> out;
    for (int e : incident_edges(v))
        if (edges[e].kind == EdgeKind::Divisor) out.push_back(e);
    return out;
}

std::vector<int> DetailedTree::level0_edges(int v) const {
    std::vector<int> out;
    for (int e : incident_edges(v))
        if (edges[e].kind != EdgeKind::Divisor) out.push_back(e);
    return out;
}

int DetailedTree::anchor() const {
    if (kind == TreeKind::SDRibbon) return v_left;
    return root;
}

std::vector<int> DetailedTree::parent_edges() const {
    int n = vertex_count();
    std::vector<int> parent(n, -1);
    std::vector<bool> seen(n, false);
    std::queue<int> q;
    q.push(anchor());
    seen[anchor()] = true;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int e : incident_edges(v)) {
            int w = other_end(e, v);
            if (!seen[w]) {
                seen[w] = true;
                parent[w] = e;
                q.push(w);
            }
        }
    }
    return parent;
}

int DetailedTree::num_levels() const {
    int top = 0;
    for (const DetailedVertex& v : vertices) top = std::max(top, v.level);
    return top;
}

ClassExpr DetailedTree::total_class() const {
    ClassExpr a;
    for (const DetailedVertex& v : vertices) a += v.alpha;
    return a;
}

std::vector<int> DetailedTree::interior_level0_edges() const {
    std::vector<int> out;
    for (int e = 0; e < edge_count(); ++e) {
        if (edges[e].kind != EdgeKind::Boundary) continue;
        if (is_exterior(edges[e].a) || is_exterior(edges[e].b)) continue;
        out.push_back(e);
    }
    return out;
}

std::vector<int> DetailedTree::strip_edges() const {
    std::vector<int> out;
    for (int e = 0; e < edge_count(); ++e)
        if (edges[e].kind == EdgeKind::Strip) out.push_back(e);
    return out;
}

std::vector<int> DetailedTree::strip_path() const {
    std::vector<int> path;
    if (v_left < 0) return path;
    int prev = v_left;
    int cur = v_left;
    while (cur != v_right) {
        int next = -1;
        for (int e : incident_edges(cur)) {
            if (edges[e].kind != EdgeKind::Strip) continue;
            int w = other_end(e, cur);
            if (w != prev) {
                next = w;
                break;
            }
        }
        if (next < 0) throw Error("InvalidInput", "broken strip path");
        prev = cur;
        cur = next;
        if (cur != v_right) path.push_back(cur);
    }
    return path;
}

void DetailedTree::sides(std::vector<int>& vertex_side, std::vector<int>& edge_side) const {
    int n = vertex_count();
    vertex_side.assign(n, -1);
    edge_side.assign(edge_count(), -1);
    if (kind != TreeKind::SDRibbon) return;
    std::vector<int> path = strip_path();
    std::vector<int> parent0 = parent_edges(); // anchored at v_left
    // At each strip vertex walk the rotation from the rightward strip edge:
    // edges strictly between e_out and e_in (ccw) hang on side 1, the rest on
    // side 0.
    for (int v : path) {
        auto it = rotations.find(v);
        if (it == rotations.end()) continue;
        const std::vector<int>& rot = it->second;
        int e_in = -1, e_out = -1;
        for (int e : rot) {
            if (edges[e].kind != EdgeKind::Strip) continue;
            int w = other_end(e, v);
            (void)w;
            if (parent0[v] == e)
                e_in = e;
            else
                e_out = e;
        }
        if (e_in < 0 || e_out < 0) continue;
        int len = static_cast<int>(rot.size());
        int start = static_cast<int>(std::find(rot.begin(), rot.end(), e_out) - rot.begin());
        int side = 1;
        for (int i = 1; i < len; ++i) {
            int e = rot[(start + i) % len];
            if (e == e_in) {
                side = 0;
                continue;
            }
            edge_side[e] = side;
        }
    }
    // Propagate to the subtrees hanging off the path.
    std::function<void(int, int)> spread = [&](int v, int side) {
        vertex_side[v] = side;
        for (int e : incident_edges(v)) {
            if (e == parent0[v] || edges[e].kind == EdgeKind::Divisor) continue;
            int w = other_end(e, v);
            if (edge_side[e] < 0) edge_side[e] = side;
            spread(w, side);
        }
    };
    for (int v : path)
        for (int e : level0_edges(v)) {
            if (edges[e].kind == EdgeKind::Strip) continue;
            int w = other_end(e, v);
            if (edge_side[e] >= 0) spread(w, edge_side[e]);
        }
}

std::vector<int> DetailedTree::exterior_order() const {
    // Planar traversal: children in rotation order after the parent edge.
    std::vector<int> parent = parent_edges();
    std::vector<int> order;
    std::function<void(int)> walk = [&](int v) {
        if (is_exterior(v)) {
            order.push_back(v);
            return;
        }
        if (vertices[v].color == Color::D) return;
        auto it = rotations.find(v);
        std::vector<int> rot =
            it != rotations.end() ? it->second : level0_edges(v); // fallback: given order
        int len = static_cast<int>(rot.size());
        if (len == 0) return;
        int start = 0;
        if (parent[v] >= 0) {
            auto pos = std::find(rot.begin(), rot.end(), parent[v]);
            if (pos != rot.end()) start = static_cast<int>(pos - rot.begin());
        }
        for (int i = 1; i <= len; ++i) {
            int e = rot[(start + i) % len];
            if (e == parent[v]) continue;
            walk(other_end(e, v));
        }
    };
    int a = anchor();
    if (kind == TreeKind::DDRibbon) {
        order.push_back(a); // the root marked point is the 0-th one
        walk(other_end(incident_edges(a).at(0), a));
    } else if (kind == TreeKind::SDRibbon) {
        walk(other_end(incident_edges(a).at(0), a));
    }
    return order;
}

int DetailedTree::find_vertex(const std::string& id) const {
    for (int v = 0; v < vertex_count(); ++v)
        if (vertices[v].id == id) return v;
    throw Error("UnknownElement", "no vertex '" + id + "'");
}

namespace {

bool connected_tree(const DetailedTree& t) {
    int n = t.vertex_count();
    if (n == 0 || t.edge_count() != n - 1) return false;
    std::vector<bool> seen(n, false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    int cnt = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        ++cnt;
        for (int e : t.incident_edges(v)) {
            int w = t.other_end(e, v);
            if (!seen[w]) {
                seen[w] = true;
                q.push(w);
            }
        }
    }
    return cnt == n;
}

} // namespace

Report validate_detailed(const DetailedTree& t, const Palette& palette) {
    Report rep;
    if (!connected_tree(t)) {
        rep.add("not a connected tree");
        return rep;
    }
    bool ribbon = t.is_ribbon();
    // color set per kind
    for (const DetailedVertex& v : t.vertices) {
        bool ok = true;
        switch (t.kind) {
        case TreeKind::DD: ok = v.color == Color::d || v.color == Color::s || v.color == Color::D; break;
        case TreeKind::SD: ok = v.color == Color::str || v.color == Color::s || v.color == Color::D; break;
        case TreeKind::DDRibbon:
            ok = v.color == Color::d || v.color == Color::s || v.color == Color::D ||
                 v.color == Color::ext;
            break;
        case TreeKind::SDRibbon:
            ok = v.color != Color::d && v.color != Color::ext;
            break;
        }
        if (!ok) rep.add("vertex " + v.id + ": color " + color_name(v.color) + " not allowed");
    }
    if (t.kind == TreeKind::DD || t.kind == TreeKind::SD) {
        if (t.root < 0 || t.root >= t.vertex_count()) {
            rep.add("missing root");
            return rep;
        }
        Color want = t.kind == TreeKind::DD ? Color::d : Color::str;
        if (t.vertices[t.root].color != want) rep.add("root color must be " + color_name(want));
        int roots = 0;
        for (const DetailedVertex& v : t.vertices)
            if (v.color == Color::d || v.color == Color::str) ++roots;
        if (roots != 1) rep.add("exactly one disc/strip vertex required");
    }
    if (t.kind == TreeKind::SDRibbon) {
        if (t.v_left < 0 || t.v_right < 0 ||
            t.vertices[t.v_left].color != Color::le || t.vertices[t.v_right].color != Color::ri) {
            rep.add("missing or miscolored strip ends");
            return rep;
        }
    }
    if (t.kind == TreeKind::DDRibbon &&
        (t.root < 0 || t.vertices[t.root].color != Color::ext)) {
        rep.add("DD-ribbon root must be an exterior vertex");
        return rep;
    }

    // edge shape constraints
    for (int e = 0; e < t.edge_count(); ++e) {
        const DetailedEdge& ed = t.edges[e];
        const DetailedVertex &va = t.vertices[ed.a], &vb = t.vertices[ed.b];
        switch (ed.kind) {
        case EdgeKind::Divisor: {
            if (ed.m == 0) rep.add("divisor edge with zero multiplicity");
            bool aD = va.color == Color::D, bD = vb.color == Color::D;
            if (!aD && !bD) rep.add("divisor edge " + va.id + "-" + vb.id + " without D endpoint");
            if (t.is_exterior(ed.a) || t.is_exterior(ed.b))
                rep.add("divisor edge touching an exterior vertex");
            break;
        }
        case EdgeKind::Boundary:
            if (va.color == Color::D || vb.color == Color::D)
                rep.add("boundary edge touching a divisor vertex");
            break;
        case EdgeKind::Strip:
            if (ed.pt.empty()) rep.add("strip edge without intersection point label");
            break;
        }
    }

    std::vector<int> parent = t.parent_edges();

    // levels
    int top = t.num_levels();
    std::vector<bool> used(top + 1, false);
    bool has_positive = false;
    for (int v = 0; v < t.vertex_count(); ++v) {
        const DetailedVertex& dv = t.vertices[v];
        if (dv.color == Color::D) {
            if (dv.level < 1) rep.add("vertex " + dv.id + ": D vertex must have positive level");
            has_positive = true;
        } else if (dv.level != 0) {
            rep.add("vertex " + dv.id + ": non-divisor vertex with positive level");
        }
        if (dv.level >= 0 && dv.level <= top) used[dv.level] = true;
    }
    (void)has_positive;
    for (int l = 1; l <= top; ++l)
        if (!used[l]) rep.add("level " + std::to_string(l) + " unused");

    // order constraint at divisor edges (first edge = parent edge)
    for (int e = 0; e < t.edge_count(); ++e) {
        if (t.edges[e].kind != EdgeKind::Divisor) continue;
        int a = t.edges[e].a, b = t.edges[e].b;
        int tgt = parent[a] == e ? a : b; // deeper endpoint
        int src = t.other_end(e, tgt);
        int ls = t.vertices[src].level, lt = t.vertices[tgt].level;
        if (t.edges[e].m > 0 && !(ls < lt))
            rep.add("divisor edge " + t.vertices[src].id + "-" + t.vertices[tgt].id +
                    ": m>0 needs increasing level");
        if (t.edges[e].m < 0 && !(ls > lt))
            rep.add("divisor edge " + t.vertices[src].id + "-" + t.vertices[tgt].id +
                    ": m<0 needs decreasing level");
    }

    // balancing at D vertices / degree identities at level-0 vertices
    for (int v = 0; v < t.vertex_count(); ++v) {
        const DetailedVertex& dv = t.vertices[v];
        Pairings p;
        try {
            p = palette.pairings(dv.alpha);
        } catch (const Error& err) {
            rep.add("vertex " + dv.id + ": " + err.what());
            continue;
        }
        if (dv.color == Color::D) {
            int fe = parent[v];
            int rhs = 0;
            for (int e : t.divisor_edges(v))
                if (e != fe) rhs += t.edges[e].m;
            int lhs = (fe >= 0 ? t.edges[fe].m : 0) + p.pair_D;
            if (lhs != rhs)
                rep.add("vertex " + dv.id + ": balancing fails (" + std::to_string(lhs) +
                        " != " + std::to_string(rhs) + ")");
            if (static_cast<int>(t.divisor_edges(v).size()) < 3 && !(p.area > 0))
                rep.add("vertex " + dv.id + ": unstable divisor vertex");
            for (const auto& [id, c] : dv.alpha.terms) {
                (void)c;
                if (palette.at(id).space != Space::D)
                    rep.add("vertex " + dv.id + ": atom " + id + " not a divisor class");
            }
        } else if (t.is_level0_interior(v)) {
            int contact = 0;
            for (int e : t.divisor_edges(v)) contact += std::abs(t.edges[e].m);
            if (p.pair_D != contact)
                rep.add("vertex " + dv.id + ": divisor degree " + std::to_string(p.pair_D) +
                        " != total contact order " + std::to_string(contact));
        }
    }

    // stability and class-space constraints on the level-0 layer
    std::vector<int> vside, eside;
    if (t.kind == TreeKind::SDRibbon) {
        try {
            t.sides(vside, eside);
        } catch (const Error& err) {
            rep.add(err.what());
            return rep;
        }
    }
    for (int v = 0; v < t.vertex_count(); ++v) {
        const DetailedVertex& dv = t.vertices[v];
        if (!t.is_level0_interior(v)) continue;
        Pairings p = palette.pairings(dv.alpha);
        int ndiv = static_cast<int>(t.divisor_edges(v).size());
        int nl0 = static_cast<int>(t.level0_edges(v).size());
        // Allowed atom spaces: the vertex's own group plus everything that
        // pushes into it (sphere and divisor classes always; shrinking also
        // merges disc classes into strips).
        auto allowed = [&](Space sp) {
            if (sp == Space::X || sp == Space::D) return true;
            switch (dv.color) {
            case Color::str: return true;
            case Color::d:
            case Color::d0: return sp == Space::XL0;
            case Color::d1: return sp == Space::XL1;
            default: return false;
            }
        };
        switch (dv.color) {
        case Color::s: {
            if (!(p.area > 0) && ndiv + nl0 < 3)
                rep.add("vertex " + dv.id + ": unstable sphere");
            break;
        }
        case Color::d:
        case Color::d0:
        case Color::d1: {
            int marks = ribbon ? nl0 : t.k + 1;
            if (!(p.area > 0) && 2 * ndiv + marks < 3)
                rep.add("vertex " + dv.id + ": unstable disc");
            break;
        }
        case Color::str: {
            int extra = ribbon ? nl0 - 2 : t.k0 + t.k1; // beyond the two strip ends
            if (!(p.area > 0) && ndiv + extra < 1)
                rep.add("vertex " + dv.id + ": unstable strip");
            break;
        }
        default: break;
        }
        for (const auto& [id, c] : dv.alpha.terms) {
            (void)c;
            if (!allowed(palette.at(id).space))
                rep.add("vertex " + dv.id + ": atom " + id + " from " +
                        space_name(palette.at(id).space) + " cannot sit on a " +
                        color_name(dv.color) + " vertex");
        }
        // spheres carry no boundary structure
        for (int e : t.level0_edges(v)) {
            int w = t.other_end(e, v);
            (void)w;
            if (dv.color == Color::s)
                rep.add("vertex " + dv.id + ": sphere with a boundary edge");
        }
    }

    // ribbon structure
    if (ribbon) {
        for (int v = 0; v < t.vertex_count(); ++v) {
            if (!t.is_level0_interior(v)) continue;
            auto nd = t.level0_edges(v);
            auto it = t.rotations.find(v);
            if (it == t.rotations.end()) {
                // with at most two boundary edges the cyclic order is forced
                if (nd.size() > 2) rep.add("vertex " + t.vertices[v].id + ": missing rotation");
                continue;
            }
            std::multiset<int> a(nd.begin(), nd.end()), b(it->second.begin(), it->second.end());
            if (a != b)
                rep.add("vertex " + t.vertices[v].id + ": rotation does not list the incident edges");
        }
        for (int v = 0; v < t.vertex_count(); ++v)
            if (t.is_exterior(v) && t.incident_edges(v).size() != 1)
                rep.add("exterior vertex " + t.vertices[v].id + " has valency != 1");
    }
    if (t.kind == TreeKind::SDRibbon) {
        std::vector<int> path;
        try {
            path = t.strip_path();
        } catch (const Error& err) {
            rep.add(err.what());
            return rep;
        }
        if (path.empty()) rep.add("strip path contains no strip vertex");
        for (int v : path)
            if (t.vertices[v].color != Color::str)
                rep.add("vertex " + t.vertices[v].id + ": strip-path vertex must have color str");
        // pt boundary conditions
        for (int e : t.incident_edges(t.v_left))
            if (t.edges[e].kind == EdgeKind::Strip && !t.type_p.empty() &&
                t.edges[e].pt != t.type_p)
                rep.add("left strip edge labeled " + t.edges[e].pt + ", expected " + t.type_p);
        for (int e : t.incident_edges(t.v_right))
            if (t.edges[e].kind == EdgeKind::Strip && !t.type_q.empty() &&
                t.edges[e].pt != t.type_q)
                rep.add("right strip edge labeled " + t.edges[e].pt + ", expected " + t.type_q);
        // endpoint chains of strip vertex classes
        std::vector<int> parent2 = t.parent_edges();
        for (int v : path) {
            int el = parent2[v];
            int er = -1;
            for (int e : t.incident_edges(v))
                if (t.edges[e].kind == EdgeKind::Strip && e != el) er = e;
            if (el < 0 || er < 0) continue;
            const std::string &from = t.edges[el].pt, &to = t.edges[er].pt;
            // endpoint chain over the strip atoms; other summands carry no
            // endpoints
            std::map<std::string, int> deg; // out - in
            for (const auto& [id, c] : t.vertices[v].alpha.terms) {
                const ClassAtom& atom = palette.at(id);
                if (atom.space != Space::Strip) continue;
                deg[atom.strip_from] += c;
                deg[atom.strip_to] -= c;
            }
            std::map<std::string, int> wantdeg;
            if (from != to) {
                wantdeg[from] = 1;
                wantdeg[to] = -1;
            }
            for (auto& [pt, d] : deg)
                if (d != (wantdeg.count(pt) ? wantdeg[pt] : 0))
                    rep.add("vertex " + t.vertices[v].id +
                            ": strip class endpoints do not chain " + from + " -> " + to);
            for (auto& [pt, d] : wantdeg)
                if (d != 0 && !deg.count(pt))
                    rep.add("vertex " + t.vertices[v].id +
                            ": strip class endpoints do not chain " + from + " -> " + to);
        }
        // mark counts and disc sides
        int c0 = 0, c1 = 0;
        for (int v = 0; v < t.vertex_count(); ++v) {
            Color c = t.vertices[v].color;
            if (c == Color::mk0) ++c0;
            if (c == Color::mk1) ++c1;
            if ((c == Color::d0 && vside[v] == 1) || (c == Color::d1 && vside[v] == 0))
                rep.add("vertex " + t.vertices[v].id + ": disc color does not match its side");
            if (c == Color::mk0 && !vside.empty()) {
                int e = t.incident_edges(v).at(0);
                if (eside[e] == 1) rep.add("mark " + t.vertices[v].id + " on the wrong side");
            }
            if (c == Color::mk1 && !vside.empty()) {
                int e = t.incident_edges(v).at(0);
                if (eside[e] == 0) rep.add("mark " + t.vertices[v].id + " on the wrong side");
            }
        }
        if (c0 != t.k0) rep.add("k0 = " + std::to_string(t.k0) + " but " + std::to_string(c0) +
                                " marks on side 0");
        if (c1 != t.k1) rep.add("k1 = " + std::to_string(t.k1) + " but " + std::to_string(c1) +
                                " marks on side 1");
    }
    if (t.kind == TreeKind::DDRibbon) {
        int ext = 0;
        for (int v = 0; v < t.vertex_count(); ++v)
            if (t.vertices[v].color == Color::ext) ++ext;
        if (ext != t.k + 1)
            rep.add("k = " + std::to_string(t.k) + " but " + std::to_string(ext) +
                    " exterior vertices");
    }

    // global degree: the total class avoids the divisor
    if (rep.ok()) {
        int total = palette.pairings(t.total_class()).pair_D;
        if (total != 0)
            rep.add("total class pairs " + std::to_string(total) + " with the divisor (want 0)");
    }
    return rep;
}

namespace {

std::string encode_detailed(const DetailedTree& t, int v, int parent_edge,
                            const std::vector<int>& parent) {
    std::ostringstream os;
    const DetailedVertex& dv = t.vertices[v];
    os << '(' << color_name(dv.color) << '|' << dv.alpha.to_string() << '@' << dv.level;
    if (parent_edge >= 0) {
        const DetailedEdge& e = t.edges[parent_edge];
        if (e.kind == EdgeKind::Divisor)
            os << "|m" << e.m;
        else if (e.kind == EdgeKind::Strip)
            os << "|pt" << e.pt;
        else
            os << "|b";
    } else {
        os << "|.";
    }
    // Level-0 children in rotation order (planar data), divisor children
    // sorted (no planar structure at interior nodes).
    std::vector<std::string> divisor_children;
    for (int e : t.divisor_edges(v)) {
        int w = t.other_end(e, v);
        if (parent[w] == e) divisor_children.push_back(encode_detailed(t, w, e, parent));
    }
    std::sort(divisor_children.begin(), divisor_children.end());
    std::vector<std::string> planar_children;
    auto it = t.rotations.find(v);
    std::vector<int> rot = it != t.rotations.end() ? it->second : t.level0_edges(v);
    int len = static_cast<int>(rot.size());
    int start = 0;
    if (parent_edge >= 0) {
        auto pos = std::find(rot.begin(), rot.end(), parent_edge);
        if (pos != rot.end()) start = static_cast<int>(pos - rot.begin());
    }
    for (int i = 1; i <= len; ++i) {
        int e = rot[(start + i) % len];
        if (e == parent_edge) continue;
        planar_children.push_back(encode_detailed(t, t.other_end(e, v), e, parent));
    }
    for (const std::string& c : divisor_children) os << c;
    os << '/';
    for (const std::string& c : planar_children) os << c;
    os << ')';
    return os.str();
}

} // namespace

std::string canonical_detailed(const DetailedTree& t) {
    std::vector<int> parent = t.parent_edges();
    std::ostringstream os;
    os << kind_name(t.kind) << '[';
    if (t.kind == TreeKind::DD) os << 'k' << t.k;
    if (t.kind == TreeKind::SD) os << 'k' << t.k0 << ',' << t.k1;
    if (t.kind == TreeKind::SDRibbon) os << t.type_p << "->" << t.type_q;
    os << ']' << encode_detailed(t, t.anchor(), -1, parent);
    return os.str();
}

} // namespace rgw
