#include "rgw/tree.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace rgw {

std::vector<int> DecoratedRootedTree::inside_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < vertex_count(); ++v)
        if (vertices[v].inside) out.push_back(v);
    return out;
}

std::vector<int> DecoratedRootedTree::incident_edges(int v) const {
    std::vector<int> out;
    for (int e = 0; e < edge_count(); ++e)
        if (edges[e].a == v || edges[e].b == v) out.push_back(e);
    return out;
}

bool DecoratedRootedTree::well_formed() const {
    int n = vertex_count();
    if (n == 0 || edge_count() != n - 1) return false;
    if (root < 0 || root >= n || vertices[root].inside) return false;
    // connectivity
    std::vector<bool> seen(n, false);
    std::queue<int> q;
    q.push(root);
    seen[root] = true;
    int cnt = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        ++cnt;
        for (int e : incident_edges(v)) {
            int w = other_end(e, v);
            if (!seen[w]) {
                seen[w] = true;
                q.push(w);
            }
        }
    }
    if (cnt != n) return false;
    // outside order lists each outside vertex once, root first
    std::set<int> outs;
    for (int v = 0; v < n; ++v)
        if (!vertices[v].inside) outs.insert(v);
    if (outside_order.size() != outs.size()) return false;
    if (outside_order.empty() || outside_order[0] != root) return false;
    std::set<int> listed(outside_order.begin(), outside_order.end());
    if (listed != outs) return false;
    for (const TreeEdge& e : edges)
        if (e.m == 0) return false;
    return true;
}

int DecoratedRootedTree::first_edge(int v) const {
    // BFS parents from the root.
    int n = vertex_count();
    std::vector<int> parent_edge(n, -1);
    std::vector<bool> seen(n, false);
    std::queue<int> q;
    q.push(root);
    seen[root] = true;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int e : incident_edges(u)) {
            int w = other_end(e, u);
            if (!seen[w]) {
                seen[w] = true;
                parent_edge[w] = e;
                q.push(w);
            }
        }
    }
    return parent_edge[v];
}

int DecoratedRootedTree::target(int e) const {
    int a = edges[e].a, b = edges[e].b;
    // t(e) is the endpoint whose first edge is e; equivalently the endpoint
    // farther from the root.
    if (!vertices[a].inside || !vertices[b].inside) {
        // Outside endpoints: the root edge has t(e) = inside endpoint; an
        // output edge has t(e) = outside endpoint (away from root).
        if (a == root || b == root) return vertices[a].inside ? a : b;
        return vertices[a].inside ? b : a;
    }
    return first_edge(a) == e ? a : b;
}

int DecoratedRootedTree::source(int e) const { return other_end(e, target(e)); }

int DecoratedRootedTree::root_edge() const {
    for (int e = 0; e < edge_count(); ++e)
        if (edges[e].a == root || edges[e].b == root) return e;
    throw Error("InvalidInput", "root has no incident edge");
}

std::vector<int> DecoratedRootedTree::output_multiplicities() const {
    std::vector<int> out;
    for (size_t i = 1; i < outside_order.size(); ++i) {
        int v = outside_order[i];
        auto inc = incident_edges(v);
        out.push_back(edges[inc.at(0)].m);
    }
    return out;
}

int DecoratedRootedTree::num_levels() const {
    int top = 0;
    for (const TreeVertex& v : vertices)
        if (v.inside) top = std::max(top, v.level);
    return top;
}

ClassExpr DecoratedRootedTree::total_class() const {
    ClassExpr a;
    for (const TreeVertex& v : vertices)
        if (v.inside) a += v.alpha;
    return a;
}

TreeType DecoratedRootedTree::type() const {
    TreeType ty;
    ty.alpha = total_class();
    ty.tangency.push_back(-input_multiplicity());
    for (int m : output_multiplicities()) ty.tangency.push_back(m);
    return ty;
}

Report validate_tree(const DecoratedRootedTree& t, const Palette& palette) {
    Report rep;
    if (!t.well_formed()) {
        rep.add("not a well-formed rooted tree (connectivity/root/outside data)");
        return rep;
    }
    if (t.inside_vertices().empty()) {
        rep.add("tree has no inside vertex");
        return rep;
    }
    for (int v = 0; v < t.vertex_count(); ++v) {
        const TreeVertex& tv = t.vertices[v];
        if (!tv.inside) {
            if (t.valency(v) != 1)
                rep.add("outside vertex " + tv.id + " has valency " +
                        std::to_string(t.valency(v)));
            continue;
        }
        Pairings p;
        try {
            p = palette.pairings(tv.alpha);
        } catch (const Error& e) {
            rep.add("vertex " + tv.id + ": " + e.what());
            continue;
        }
        for (const auto& [id, c] : tv.alpha.terms) {
            (void)c;
            if (palette.at(id).space != Space::D)
                rep.add("vertex " + tv.id + ": decoration atom " + id + " is not a divisor class");
        }
        // balancing: m(e(v)) + alpha(v).D = sum of the other multiplicities
        int fe = t.first_edge(v);
        int rhs = 0;
        for (int e : t.incident_edges(v))
            if (e != fe) rhs += t.edges[e].m;
        if (t.edges[fe].m + p.pair_D != rhs)
            rep.add("vertex " + tv.id + ": balancing fails (" + std::to_string(t.edges[fe].m) +
                    " + " + std::to_string(p.pair_D) + " != " + std::to_string(rhs) + ")");
        // stability
        if (t.valency(v) < 3 && !(p.area > 0))
            rep.add("vertex " + tv.id + ": unstable (valency " + std::to_string(t.valency(v)) +
                    ", area " + rat_to_string(p.area) + ")");
        if (tv.level < 1) rep.add("vertex " + tv.id + ": level must be >= 1");
    }
    // surjectivity of lambda
    int top = t.num_levels();
    std::vector<bool> seen(top + 1, false);
    for (int v : t.inside_vertices()) seen[t.vertices[v].level] = true;
    for (int l = 1; l <= top; ++l)
        if (!seen[l]) rep.add("level function not surjective: level " + std::to_string(l) + " unused");
    // order constraint on inside edges
    for (int e = 0; e < t.edge_count(); ++e) {
        int a = t.edges[e].a, b = t.edges[e].b;
        if (!t.is_inside(a) || !t.is_inside(b)) continue;
        int tgt = t.target(e), src = t.source(e);
        int ls = t.vertices[src].level, lt = t.vertices[tgt].level;
        if (t.edges[e].m > 0 && !(ls < lt))
            rep.add("edge " + t.vertices[src].id + "-" + t.vertices[tgt].id +
                    ": m>0 requires level(" + t.vertices[src].id + ") < level(" +
                    t.vertices[tgt].id + ")");
        if (t.edges[e].m < 0 && !(ls > lt))
            rep.add("edge " + t.vertices[src].id + "-" + t.vertices[tgt].id +
                    ": m<0 requires level(" + t.vertices[src].id + ") > level(" +
                    t.vertices[tgt].id + ")");
    }
    return rep;
}

QuasiOrder base_quasi_order(const DecoratedRootedTree& t) {
    std::vector<int> ins = t.inside_vertices();
    std::vector<std::string> ids;
    for (int v : ins) ids.push_back(t.vertices[v].id);
    QuasiOrder qo(ids);
    std::map<int, int> pos;
    for (size_t i = 0; i < ins.size(); ++i) pos[ins[i]] = static_cast<int>(i);
    for (int e = 0; e < t.edge_count(); ++e) {
        int a = t.edges[e].a, b = t.edges[e].b;
        if (!t.is_inside(a) || !t.is_inside(b)) continue;
        int src = t.source(e), tgt = t.target(e);
        if (t.edges[e].m > 0)
            qo.set_le(pos[src], pos[tgt]);
        else
            qo.set_le(pos[tgt], pos[src]);
    }
    qo.transitive_close();
    return qo;
}

std::vector<int> levels_from_quasi_order(const DecoratedRootedTree& t, const QuasiOrder& qo) {
    if (!qo.is_total()) throw Error("NotTotal", "quasi order is not total");
    QuasiOrder base = base_quasi_order(t);
    // Align ground sets by id.
    std::vector<int> perm;
    for (const std::string& id : base.ground()) perm.push_back(qo.index_of(id));
    for (int i = 0; i < base.size(); ++i)
        for (int j = 0; j < base.size(); ++j)
            if (base.lt(i, j) && !qo.lt(perm[i], perm[j]))
                throw Error("NotFiner", "quasi order does not refine the base order at " +
                                            base.ground()[i] + " < " + base.ground()[j]);
    std::vector<int> lv = qo.to_levels();
    std::vector<int> out(base.size());
    for (int i = 0; i < base.size(); ++i) out[i] = lv[perm[i]];
    return out;
}

QuasiOrder quasi_order_from_levels(const DecoratedRootedTree& t) {
    std::vector<int> ins = t.inside_vertices();
    std::vector<std::string> ids;
    std::vector<int> levels;
    for (int v : ins) {
        ids.push_back(t.vertices[v].id);
        levels.push_back(t.vertices[v].level);
    }
    return QuasiOrder::from_levels(ids, levels);
}

std::vector<std::vector<int>> admissible_level_functions(const DecoratedRootedTree& t,
                                                         int max_levels) {
    std::vector<int> ins = t.inside_vertices();
    int n = static_cast<int>(ins.size());
    std::map<int, int> pos;
    for (int i = 0; i < n; ++i) pos[ins[i]] = i;
    // Edge-strict constraints lo < hi.
    std::vector<std::pair<int, int>> strict;
    for (int e = 0; e < t.edge_count(); ++e) {
        int a = t.edges[e].a, b = t.edges[e].b;
        if (!t.is_inside(a) || !t.is_inside(b)) continue;
        int src = t.source(e), tgt = t.target(e);
        if (t.edges[e].m > 0)
            strict.push_back({pos[src], pos[tgt]});
        else
            strict.push_back({pos[tgt], pos[src]});
    }
    int cap = max_levels > 0 ? std::min(max_levels, n) : n;
    std::vector<std::vector<int>> out;
    std::vector<int> levels(n, 0);
    std::function<void(int)> rec = [&](int p) {
        if (p == n) {
            int top = *std::max_element(levels.begin(), levels.end());
            std::vector<bool> seen(top + 1, false);
            for (int l : levels) seen[l] = true;
            for (int l = 1; l <= top; ++l)
                if (!seen[l]) return;
            out.push_back(levels);
            return;
        }
        for (int l = 1; l <= cap; ++l) {
            levels[p] = l;
            bool ok = true;
            for (auto& [lo, hi] : strict) {
                if (lo <= p && hi <= p && !(levels[lo] < levels[hi])) { ok = false; break; }
            }
            if (ok) rec(p + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::string encode_subtree(const DecoratedRootedTree& t, int v, int parent, int parent_edge,
                           const std::map<int, int>& outside_ordinal) {
    std::ostringstream os;
    os << '(';
    if (!t.vertices[v].inside) {
        os << 'O' << outside_ordinal.at(v);
    } else {
        os << 'I' << t.vertices[v].alpha.to_string() << '@' << t.vertices[v].level;
    }
    os << '|' << (parent_edge >= 0 ? std::to_string(t.edges[parent_edge].m) : std::string("."));
    std::vector<std::string> children;
    for (int e : t.incident_edges(v)) {
        int w = t.other_end(e, v);
        if (w == parent) continue;
        children.push_back(encode_subtree(t, w, v, e, outside_ordinal));
    }
    std::sort(children.begin(), children.end());
    for (const std::string& c : children) os << c;
    os << ')';
    return os.str();
}

} // namespace

std::string canonical_form(const DecoratedRootedTree& t) {
    std::map<int, int> ordinal;
    for (size_t i = 0; i < t.outside_order.size(); ++i)
        ordinal[t.outside_order[i]] = static_cast<int>(i);
    return encode_subtree(t, t.root, -1, -1, ordinal);
}

namespace {

struct AutWork {
    const DecoratedRootedTree* t;
    std::map<int, int> ordinal;
    long order = 1;
    std::vector<std::vector<int>> gens;

    // Fills 'vertices of subtree at v' in traversal order (deterministic).
    void collect(int v, int parent, std::vector<int>& out) const {
        out.push_back(v);
        std::vector<std::pair<std::string, int>> kids;
        for (int e : t->incident_edges(v)) {
            int w = t->other_end(e, v);
            if (w == parent) continue;
            kids.push_back({encode_subtree(*t, w, v, e, ordinal), w});
        }
        std::sort(kids.begin(), kids.end());
        for (auto& [s, w] : kids) collect(w, v, out);
    }

    void visit(int v, int parent) {
        std::vector<std::pair<std::string, std::pair<int, int>>> kids; // enc -> (child, edge)
        for (int e : t->incident_edges(v)) {
            int w = t->other_end(e, v);
            if (w == parent) continue;
            kids.push_back({encode_subtree(*t, w, v, e, ordinal), {w, e}});
        }
        std::sort(kids.begin(), kids.end());
        size_t i = 0;
        while (i < kids.size()) {
            size_t j = i;
            while (j < kids.size() && kids[j].first == kids[i].first) ++j;
            long sz = static_cast<long>(j - i);
            for (long f = 2; f <= sz; ++f) order *= f;
            // one adjacent-swap generator per identical pair
            for (size_t k = i; k + 1 < j; ++k) {
                std::vector<int> A, B;
                collect(kids[k].second.first, v, A);
                collect(kids[k + 1].second.first, v, B);
                std::vector<int> perm(t->vertex_count());
                std::iota(perm.begin(), perm.end(), 0);
                for (size_t x = 0; x < A.size(); ++x) {
                    perm[A[x]] = B[x];
                    perm[B[x]] = A[x];
                }
                gens.push_back(perm);
            }
            i = j;
        }
        for (auto& [s, we] : kids) visit(we.first, v);
    }
};

} // namespace

AutomorphismGroup automorphisms(const DecoratedRootedTree& t) {
    AutWork w;
    w.t = &t;
    for (size_t i = 0; i < t.outside_order.size(); ++i)
        w.ordinal[t.outside_order[i]] = static_cast<int>(i);
    w.visit(t.root, -1);
    AutomorphismGroup g;
    g.order = w.order;
    g.generators = std::move(w.gens);
    return g;
}

DecoratedRootedTree level_shrink(const DecoratedRootedTree& t, int i) {
    int top = t.num_levels();
    if (i < 1 || i + 1 > top)
        throw Error("LevelOutOfRange",
                    "(i,i+1) = (" + std::to_string(i) + "," + std::to_string(i + 1) +
                        ") with |lambda| = " + std::to_string(top));
    int n = t.vertex_count();
    // Union-find over contracted edges.
    std::vector<int> uf(n);
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
    for (const TreeEdge& e : t.edges) {
        if (!t.is_inside(e.a) || !t.is_inside(e.b)) continue;
        int la = t.vertices[e.a].level, lb = t.vertices[e.b].level;
        if ((la == i && lb == i + 1) || (la == i + 1 && lb == i)) uf[find(e.a)] = find(e.b);
    }
    DecoratedRootedTree out;
    std::map<int, int> newidx;
    for (int v = 0; v < n; ++v) {
        if (find(v) != v) continue;
        TreeVertex tv = t.vertices[v];
        if (tv.inside) {
            ClassExpr alpha;
            int minlv = tv.level;
            std::string id = tv.id;
            for (int w = 0; w < n; ++w)
                if (find(w) == v) {
                    alpha += t.vertices[w].alpha;
                    minlv = std::min(minlv, t.vertices[w].level);
                    id = std::min(id, t.vertices[w].id);
                }
            tv.alpha = alpha;
            // lambda': keep below i, collapse {i,i+1} to i, shift the rest down
            tv.level = minlv < i ? minlv : (minlv <= i + 1 ? i : minlv - 1);
            tv.id = id;
        }
        newidx[v] = out.vertex_count();
        out.vertices.push_back(tv);
    }
    for (const TreeEdge& e : t.edges) {
        int ra = find(e.a), rb = find(e.b);
        if (ra == rb) continue;
        out.edges.push_back({newidx[ra], newidx[rb], e.m});
    }
    out.root = newidx[find(t.root)];
    for (int v : t.outside_order) out.outside_order.push_back(newidx[find(v)]);
    return out;
}

DecoratedRootedTree minimal_tree(const TreeType& type, const Palette& palette) {
    int d = palette.pairings(type.alpha).pair_D;
    if (d != type.degree_sum())
        throw Error("InvalidInput", "degree identity fails: d(alpha) = " + std::to_string(d) +
                                        " but sum m_i = " + std::to_string(type.degree_sum()));
    if (type.tangency.empty()) throw Error("InvalidInput", "empty tangency vector");
    DecoratedRootedTree t;
    t.vertices.push_back({"r", false, {}, 0});
    t.vertices.push_back({"v", true, type.alpha, 1});
    t.root = 0;
    t.outside_order = {0};
    t.edges.push_back({0, 1, -type.tangency[0]});
    for (size_t i = 1; i < type.tangency.size(); ++i) {
        int w = t.vertex_count();
        t.vertices.push_back({"o" + std::to_string(i), false, {}, 0});
        t.outside_order.push_back(w);
        t.edges.push_back({1, w, type.tangency[i]});
    }
    return t;
}

} // namespace rgw
