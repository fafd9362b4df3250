#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "rgw/tree.hpp"

namespace rgw {

namespace {

struct Search {
    const TreeType* type;
    const Palette* palette;
    const TreeBounds* bounds;
    long nodes = 0;
    std::map<std::string, DecoratedRootedTree> found; // canonical -> tree

    std::vector<ClassExpr> candidates;    // decoration pool
    std::vector<int> target;              // alpha coefficients per whitelist atom
    std::vector<std::vector<int>> coeffs; // candidate coefficients

    void tick() {
        if (++nodes > bounds->node_cap)
            throw Error("BoundsTooLoose", "enumeration budget exceeded (" +
                                              std::to_string(bounds->node_cap) + " nodes)");
    }

    void build_candidates() {
        const auto& wl = bounds->atom_whitelist;
        int c = bounds->max_coeff;
        target.assign(wl.size(), 0);
        for (size_t i = 0; i < wl.size(); ++i) {
            auto it = type->alpha.terms.find(wl[i]);
            target[i] = it == type->alpha.terms.end() ? 0 : it->second;
        }
        // alpha must be expressible over the whitelist at all
        for (const auto& [id, co] : type->alpha.terms) {
            (void)co;
            if (std::find(wl.begin(), wl.end(), id) == wl.end())
                throw Error("BoundsTooLoose", "type class uses atom '" + id +
                                                  "' outside the whitelist");
        }
        std::vector<int> cur(wl.size(), 0);
        std::function<void(size_t)> rec = [&](size_t i) {
            if (i == wl.size()) {
                ClassExpr e;
                for (size_t k = 0; k < wl.size(); ++k)
                    if (cur[k] != 0) e.terms[wl[k]] = cur[k];
                candidates.push_back(e);
                coeffs.push_back(cur);
                return;
            }
            for (int v = -c; v <= c; ++v) {
                cur[i] = v;
                rec(i + 1);
            }
        };
        rec(0);
    }

    // parents[i] < i for i >= 1; vertex 0 carries the root edge. Parent
    // vectors overcount isomorphic shapes, so skip repeats of the unlabeled
    // rooted skeleton (decoration assignments later range over all vertices,
    // which restores every labeled variant).
    void shapes(int n, const std::function<void(const std::vector<int>&)>& f) {
        std::vector<int> parents(n, -1);
        std::set<std::string> seen;
        std::function<std::string(const std::vector<std::vector<int>>&, int)> enc =
            [&](const std::vector<std::vector<int>>& ch, int v) -> std::string {
            std::vector<std::string> kids;
            for (int w : ch[v]) kids.push_back(enc(ch, w));
            std::sort(kids.begin(), kids.end());
            std::string out = "(";
            for (auto& k : kids) out += k;
            return out + ")";
        };
        std::function<void(int)> rec = [&](int i) {
            if (i == n) {
                std::vector<std::vector<int>> ch(n);
                for (int v = 1; v < n; ++v) ch[parents[v]].push_back(v);
                if (seen.insert(enc(ch, 0)).second) f(parents);
                return;
            }
            for (int p = 0; p < i; ++p) {
                parents[i] = p;
                rec(i + 1);
            }
        };
        rec(1);
    }

    void run() {
        build_candidates();
        int ell = static_cast<int>(type->tangency.size()) - 1;
        for (int n = 1; n <= bounds->max_inside_vertices; ++n) {
            shapes(n, [&](const std::vector<int>& parents) {
                // assign output slots to vertices
                std::vector<int> slot(ell, 0);
                std::function<void(int)> assign = [&](int j) {
                    tick();
                    if (j == ell) {
                        decorate(n, parents, slot);
                        return;
                    }
                    for (int v = 0; v < n; ++v) {
                        slot[j] = v;
                        assign(j + 1);
                    }
                };
                assign(0);
            });
        }
    }

    void decorate(int n, const std::vector<int>& parents, const std::vector<int>& slot) {
        int W = static_cast<int>(target.size());
        int ell = static_cast<int>(slot.size());
        std::vector<std::vector<int>> children(n);
        for (int v = 1; v < n; ++v) children[parents[v]].push_back(v);
        std::vector<int> out_sum(n, 0);
        for (int j = 0; j < ell; ++j) out_sum[slot[j]] += type->tangency[j + 1];
        std::map<std::vector<int>, int> by_coeffs;
        for (size_t c = 0; c < coeffs.size(); ++c) by_coeffs[coeffs[c]] = static_cast<int>(c);

        std::vector<int> rem = target;
        std::vector<int> pick(n, -1);
        std::vector<int> up(n, 0); // parent-edge multiplicity, solved leaf-up
        // assign decorations from the deepest vertex down to the root piece;
        // children always precede parents, so balancing resolves on the fly
        std::function<void(int)> rec = [&](int v) {
            tick();
            if (v < 0) {
                finish2(n, parents, slot, pick, up);
                return;
            }
            auto try_candidate = [&](int c) {
                int d = palette->pairings(candidates[c]).pair_D;
                int s2 = out_sum[v];
                for (int ch : children[v]) s2 += up[ch];
                if (v > 0) {
                    up[v] = s2 - d;
                    if (up[v] == 0) return; // edges carry nonzero multiplicity
                } else {
                    up[0] = -type->tangency[0];
                    if (up[0] + d != s2) return; // root balancing
                }
                pick[v] = c;
                rec(v - 1);
            };
            if (v == 0) {
                auto it = by_coeffs.find(rem); // the class sum forces the rest
                if (it != by_coeffs.end()) try_candidate(it->second);
                return;
            }
            for (size_t c = 0; c < candidates.size(); ++c) {
                bool feasible = true;
                for (int w = 0; w < W && feasible; ++w) {
                    int r = rem[w] - coeffs[c][w];
                    if (std::abs(r) > bounds->max_coeff * v) feasible = false;
                }
                if (!feasible) continue;
                for (int w = 0; w < W; ++w) rem[w] -= coeffs[c][w];
                try_candidate(static_cast<int>(c));
                for (int w = 0; w < W; ++w) rem[w] += coeffs[c][w];
            }
        };
        rec(n - 1);
    }

    void finish2(int n, const std::vector<int>& parents, const std::vector<int>& slot,
                 const std::vector<int>& pick, const std::vector<int>& up) {
        std::vector<std::vector<int>> children(n);
        for (int v = 1; v < n; ++v) children[parents[v]].push_back(v);
        std::vector<int> out_count(n, 0);
        int ell = static_cast<int>(slot.size());
        for (int j = 0; j < ell; ++j) out_count[slot[j]] += 1;
        // stability
        for (int v = 0; v < n; ++v) {
            int val = 1 + static_cast<int>(children[v].size()) + out_count[v];
            if (val < 3 && !(palette->pairings(candidates[pick[v]]).area > 0)) return;
        }
        // assemble skeleton
        DecoratedRootedTree t;
        t.vertices.push_back({"r", false, {}, 0});
        t.root = 0;
        t.outside_order = {0};
        std::vector<int> vidx(n);
        for (int v = 0; v < n; ++v) {
            vidx[v] = t.vertex_count();
            t.vertices.push_back({"v" + std::to_string(v), true, candidates[pick[v]], 1});
        }
        t.edges.push_back({0, vidx[0], up[0]});
        for (int v = 1; v < n; ++v) t.edges.push_back({vidx[parents[v]], vidx[v], up[v]});
        for (int j = 0; j < ell; ++j) {
            int w = t.vertex_count();
            t.vertices.push_back({"o" + std::to_string(j + 1), false, {}, 0});
            t.outside_order.push_back(w);
            t.edges.push_back({vidx[slot[j]], w, type->tangency[j + 1]});
        }
        // level functions
        for (const std::vector<int>& lv : admissible_level_functions(t, bounds->max_levels)) {
            tick();
            DecoratedRootedTree u = t;
            std::vector<int> ins = u.inside_vertices();
            for (size_t i = 0; i < ins.size(); ++i) u.vertices[ins[i]].level = lv[i];
            std::string key = canonical_form(u);
            if (!found.count(key)) found.emplace(key, std::move(u));
        }
    }
};

} // namespace

std::vector<DecoratedRootedTree> enumerate_trees(const TreeType& type, const Palette& palette,
                                                 const TreeBounds& bounds) {
    int d = palette.pairings(type.alpha).pair_D;
    if (d != type.degree_sum()) return {}; // no tree of this type exists
    Search s;
    s.type = &type;
    s.palette = &palette;
    s.bounds = &bounds;
    s.run();
    std::vector<DecoratedRootedTree> out;
    for (auto& [key, t] : s.found) {
        (void)key;
        out.push_back(std::move(t));
    }
    return out;
}

} // namespace rgw
