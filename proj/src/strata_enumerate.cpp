#include <algorithm>
#include <functional>

#include "rgw/strata.hpp"

namespace rgw {

namespace {

// One disc hanging off a strip vertex, with its own marks and divisor
// attachments.
struct DiscPick {
    ClassExpr cls; // XL0/XL1 class, possibly with absorbed divisor summands
    int marks = 0;
    std::vector<std::pair<std::string, int>> divisors; // (atom, contact)
};

struct StripPick {
    ClassExpr alpha;
    std::vector<std::pair<std::string, int>> divisors;
    std::vector<int> marks0_layout, marks1_layout; // token layout per side:
                                                   // -1 = mark, >= 0 = disc index
    std::vector<DiscPick> discs0, discs1;
};

struct Assembler {
    const Palette* palette;
    const SdType* type;
    DetailedTree t;
    int divisor_counter = 0;

    int add_vertex(const std::string& id, Color c, const ClassExpr& a, int level) {
        DetailedVertex v;
        v.id = id;
        v.color = c;
        v.alpha = a;
        v.level = level;
        t.vertices.push_back(v);
        return t.vertex_count() - 1;
    }
    int add_edge(int a, int b, EdgeKind k, int m = 0, const std::string& pt = "") {
        DetailedEdge e;
        e.a = a;
        e.b = b;
        e.kind = k;
        e.m = m;
        e.pt = pt;
        t.edges.push_back(e);
        return t.edge_count() - 1;
    }
    // Divisor attachments: one-vertex divisor trees. Returns vertex indices.
    std::vector<int> attach_divisors(int host, const std::string& host_id,
                                     const std::vector<std::pair<std::string, int>>& divs) {
        std::vector<int> out;
        for (const auto& [atom, contact] : divs) {
            int u = add_vertex(host_id + "/D" + std::to_string(divisor_counter++), Color::D,
                               ClassExpr::atom(atom), 1);
            add_edge(host, u, EdgeKind::Divisor, contact);
            out.push_back(u);
        }
        return out;
    }
};

// Build the detailed tree for one full choice; divisor vertices are created
// at level 1 and re-leveled afterwards.
DetailedTree assemble(const SdType& type, const Palette& palette,
                      const std::vector<std::string>& pts,
                      const std::vector<StripPick>& strips) {
    Assembler as;
    as.palette = &palette;
    as.type = &type;
    as.t.kind = TreeKind::SDRibbon;
    as.t.type_p = type.p;
    as.t.type_q = type.q;
    as.t.k0 = type.k0;
    as.t.k1 = type.k1;
    int s = static_cast<int>(strips.size());
    as.t.v_left = as.add_vertex("le", Color::le, {}, 0);
    std::vector<int> strip_idx(s);
    for (int i = 0; i < s; ++i)
        strip_idx[i] = as.add_vertex("S" + std::to_string(i), Color::str, strips[i].alpha, 0);
    as.t.v_right = as.add_vertex("ri", Color::ri, {}, 0);

    std::vector<int> strip_edge(s + 1);
    strip_edge[0] = as.add_edge(as.t.v_left, strip_idx[0], EdgeKind::Strip, 0, pts[0]);
    for (int i = 1; i < s; ++i)
        strip_edge[i] = as.add_edge(strip_idx[i - 1], strip_idx[i], EdgeKind::Strip, 0, pts[i]);
    strip_edge[s] = as.add_edge(strip_idx[s - 1], as.t.v_right, EdgeKind::Strip, 0, pts[s]);

    int mark_counter = 0, disc_counter = 0;
    for (int i = 0; i < s; ++i) {
        const StripPick& sp = strips[i];
        std::string sid = "S" + std::to_string(i);
        as.attach_divisors(strip_idx[i], sid, sp.divisors);
        // side tokens -> edges, in ccw rotation order
        auto lay_side = [&](int side, const std::vector<int>& layout,
                            const std::vector<DiscPick>& discs) {
            std::vector<int> edge_seq;
            for (int tok : layout) {
                if (tok < 0) {
                    int m = as.add_vertex("m" + std::to_string(mark_counter++),
                                          side == 0 ? Color::mk0 : Color::mk1, {}, 0);
                    edge_seq.push_back(as.add_edge(strip_idx[i], m, EdgeKind::Boundary));
                } else {
                    const DiscPick& dp = discs[tok];
                    std::string did = "c" + std::to_string(disc_counter++);
                    int dvx = as.add_vertex(did, side == 0 ? Color::d0 : Color::d1,
                                            dp.cls, 0);
                    int be = as.add_edge(strip_idx[i], dvx, EdgeKind::Boundary);
                    edge_seq.push_back(be);
                    as.attach_divisors(dvx, did, dp.divisors);
                    std::vector<int> drot{be};
                    for (int mk = 0; mk < dp.marks; ++mk) {
                        int m = as.add_vertex("m" + std::to_string(mark_counter++),
                                              side == 0 ? Color::mk0 : Color::mk1, {}, 0);
                        drot.push_back(as.add_edge(dvx, m, EdgeKind::Boundary));
                    }
                    if (drot.size() > 1) as.t.rotations[dvx] = drot;
                }
            }
            return edge_seq;
        };
        std::vector<int> seq0 = lay_side(0, sp.marks0_layout, sp.discs0);
        std::vector<int> seq1 = lay_side(1, sp.marks1_layout, sp.discs1);
        // ccw: rightward strip edge, side-1 tokens, leftward strip edge,
        // side-0 tokens
        std::vector<int> rot;
        rot.push_back(strip_edge[i + 1]);
        for (int e : seq1) rot.push_back(e);
        rot.push_back(strip_edge[i]);
        for (int e : seq0) rot.push_back(e);
        as.t.rotations[strip_idx[i]] = rot;
    }
    return as.t;
}

struct SdSearch {
    const SdType* type;
    const Palette* palette;
    const SdBounds* bounds;
    long nodes = 0;
    std::map<std::string, DetailedTree> found;

    void tick() {
        if (++nodes > bounds->cap)
            throw Error("BoundsTooLoose", "SD enumeration budget exceeded");
    }

    // divisor attachment choices for a host class needing total contact c,
    // at most `slots` attachments
    std::vector<std::vector<std::pair<std::string, int>>> divisor_choices(int contact,
                                                                          int slots) {
        std::vector<std::vector<std::pair<std::string, int>>> out;
        std::vector<std::pair<std::string, int>> cur;
        std::function<void(int, int)> rec = [&](int remaining, int left) {
            if (remaining == 0) {
                out.push_back(cur);
                return;
            }
            if (left == 0) return;
            for (const std::string& atom : bounds->divisor_atoms) {
                const ClassAtom& a = palette->at(atom);
                for (int m = 1; m <= bounds->max_contact && m <= remaining; ++m) {
                    if (a.pair_D != -m) continue;
                    if (!(a.area > 0)) continue; // one-valent divisor vertex
                    cur.push_back({atom, m});
                    rec(remaining - m, left - 1);
                    cur.pop_back();
                }
            }
        };
        rec(contact, slots);
        return out;
    }

    // sub-multisets (as class expressions) of the divisor atom pool, at most
    // max_absorbed summands each
    std::vector<ClassExpr> absorbed_choices() {
        std::vector<ClassExpr> out;
        ClassExpr cur;
        std::function<void(size_t, int)> rec = [&](size_t i, int left) {
            out.push_back(cur);
            if (left == 0) return;
            for (size_t j = i; j < bounds->divisor_atoms.size(); ++j) {
                cur += ClassExpr::atom(bounds->divisor_atoms[j]);
                rec(j, left - 1);
                cur -= ClassExpr::atom(bounds->divisor_atoms[j]);
            }
        };
        rec(0, bounds->max_absorbed);
        // distinct expressions only
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    // token layouts: interleavings of `marks` identical marks with the discs
    // 0..d-1 in order
    std::vector<std::vector<int>> layouts(int marks, int discs) {
        std::vector<std::vector<int>> out;
        std::vector<int> cur;
        std::function<void(int, int)> rec = [&](int m, int d) {
            if (m == 0 && d == discs) {
                out.push_back(cur);
                return;
            }
            if (m > 0) {
                cur.push_back(-1);
                rec(m - 1, d);
                cur.pop_back();
            }
            if (d < discs) {
                cur.push_back(d);
                rec(m, d + 1);
                cur.pop_back();
            }
        };
        rec(marks, 0);
        return out;
    }

    void run() {
        for (int s = 1; s <= bounds->max_interior; ++s) {
            std::vector<std::string> pts(s + 1);
            pts[0] = type->p;
            pts[s] = type->q;
            std::function<void(int)> pick_pts = [&](int i) {
                if (i == s) {
                    strip_classes(pts, s);
                    return;
                }
                for (const std::string& r : bounds->intermediate_points) {
                    pts[i] = r;
                    pick_pts(i + 1);
                }
            };
            if (s == 1)
                strip_classes(pts, s);
            else
                pick_pts(1);
        }
    }

    // choose the strip classes, disc attachments, marks, divisor decorations
    void strip_classes(const std::vector<std::string>& pts, int s) {
        std::vector<StripPick> strips(s);
        std::vector<ClassExpr> absorb = absorbed_choices();
        std::function<void(int, int)> rec = [&](int i, int discs_used) {
            tick();
            if (i == s) {
                distribute_marks(pts, strips);
                return;
            }
            std::vector<ClassExpr> bases;
            if (pts[i] == pts[i + 1]) bases.push_back(ClassExpr::zero());
            for (const std::string& atom : bounds->strip_atoms) {
                const ClassAtom& a = palette->at(atom);
                if (a.strip_from == pts[i] && a.strip_to == pts[i + 1])
                    bases.push_back(ClassExpr::atom(atom));
            }
            for (const ClassExpr& base : bases)
                for (const ClassExpr& extra : absorb) {
                    ClassExpr alpha = base + extra;
                    strips[i].alpha = alpha;
                    // divisor decorations on the strip vertex
                    int contact = palette->pairings(alpha).pair_D;
                    if (contact < 0 || contact > bounds->max_contact * bounds->max_divisor_vertices)
                        continue;
                    for (auto& divs : divisor_choices(contact, bounds->max_divisor_vertices)) {
                        strips[i].divisors = divs;
                        // discs on both sides
                        int budget = bounds->max_interior - s - discs_used;
                        disc_choices(i, 0, budget, strips, absorb, [&](int used0) {
                            disc_choices(i, 1, budget - used0, strips, absorb, [&](int used1) {
                                rec(i + 1, discs_used + used0 + used1);
                            });
                        });
                    }
                }
        };
        rec(0, 0);
    }

    void disc_choices(int i, int side, int budget, std::vector<StripPick>& strips,
                      const std::vector<ClassExpr>& absorb,
                      const std::function<void(int)>& next) {
        auto& discs = side == 0 ? strips[i].discs0 : strips[i].discs1;
        const auto& atoms = side == 0 ? bounds->disc_atoms0 : bounds->disc_atoms1;
        std::function<void(int)> rec = [&](int used) {
            tick();
            next(used);
            if (used >= budget) return;
            for (const std::string& atom : atoms)
                for (const ClassExpr& extra : absorb) {
                    ClassExpr cls = ClassExpr::atom(atom) + extra;
                    int contact = palette->pairings(cls).pair_D;
                    if (contact < 0 ||
                        contact > bounds->max_contact * bounds->max_divisor_vertices)
                        continue;
                    for (auto& divs : divisor_choices(contact, bounds->max_divisor_vertices)) {
                        DiscPick dp;
                        dp.cls = cls;
                        dp.divisors = divs;
                        discs.push_back(dp);
                        rec(used + 1);
                        discs.pop_back();
                    }
                }
        };
        rec(0);
    }

    void distribute_marks(const std::vector<std::string>& pts, std::vector<StripPick> strips) {
        // positions absorbing marks: per strip vertex/side a count, per disc
        // a count; then all interleavings.
        int s = static_cast<int>(strips.size());
        // total class check before the expensive part
        ClassExpr total;
        for (const StripPick& sp : strips) {
            total += sp.alpha;
            for (auto& [a, m] : sp.divisors) {
                (void)m;
                total += ClassExpr::atom(a);
            }
            for (const DiscPick& d : sp.discs0) {
                total += d.cls;
                for (auto& [a, m] : d.divisors) {
                    (void)m;
                    total += ClassExpr::atom(a);
                }
            }
            for (const DiscPick& d : sp.discs1) {
                total += d.cls;
                for (auto& [a, m] : d.divisors) {
                    (void)m;
                    total += ClassExpr::atom(a);
                }
            }
        }
        if (!(total == type->beta)) return;

        // gather mark slots per side
        struct Slot {
            int strip;
            int disc; // -1 = on the strip vertex itself
        };
        auto side_slots = [&](int side) {
            std::vector<Slot> slots;
            for (int i = 0; i < s; ++i) {
                slots.push_back({i, -1});
                auto& discs = side == 0 ? strips[i].discs0 : strips[i].discs1;
                for (int d = 0; d < static_cast<int>(discs.size()); ++d)
                    slots.push_back({i, d});
            }
            return slots;
        };
        std::vector<Slot> slots0 = side_slots(0), slots1 = side_slots(1);
        std::vector<int> c0(slots0.size(), 0), c1(slots1.size(), 0);
        std::function<void(int, int, int)> comp0 = [&](int pos, int left, int dummy) {
            (void)dummy;
            if (pos == static_cast<int>(c0.size())) {
                if (left) return;
                std::function<void(int, int)> comp1 = [&](int pos1, int left1) {
                    if (pos1 == static_cast<int>(c1.size())) {
                        if (left1) return;
                        apply_marks(pts, strips, slots0, c0, slots1, c1);
                        return;
                    }
                    for (int m = 0; m <= left1; ++m) {
                        c1[pos1] = m;
                        comp1(pos1 + 1, left1 - m);
                    }
                };
                comp1(0, type->k1);
                return;
            }
            for (int m = 0; m <= left; ++m) {
                c0[pos] = m;
                comp0(pos + 1, left - m, 0);
            }
        };
        comp0(0, type->k0, 0);
    }

    template <class Slot>
    void apply_marks(const std::vector<std::string>& pts, std::vector<StripPick> strips,
                     const std::vector<Slot>& slots0, const std::vector<int>& c0,
                     const std::vector<Slot>& slots1, const std::vector<int>& c1) {
        tick();
        // write disc mark counts and strip-side mark counts
        std::vector<int> strip_marks0(strips.size(), 0), strip_marks1(strips.size(), 0);
        for (size_t k = 0; k < slots0.size(); ++k) {
            if (slots0[k].disc < 0)
                strip_marks0[slots0[k].strip] = c0[k];
            else
                strips[slots0[k].strip].discs0[slots0[k].disc].marks = c0[k];
        }
        for (size_t k = 0; k < slots1.size(); ++k) {
            if (slots1[k].disc < 0)
                strip_marks1[slots1[k].strip] = c1[k];
            else
                strips[slots1[k].strip].discs1[slots1[k].disc].marks = c1[k];
        }
        // interleavings per strip vertex and side
        std::function<void(size_t)> arrange = [&](size_t i) {
            if (i == strips.size()) {
                levels_and_emit(pts, strips);
                return;
            }
            for (auto& l0 :
                 layouts(strip_marks0[i], static_cast<int>(strips[i].discs0.size()))) {
                strips[i].marks0_layout = l0;
                for (auto& l1 :
                     layouts(strip_marks1[i], static_cast<int>(strips[i].discs1.size()))) {
                    strips[i].marks1_layout = l1;
                    arrange(i + 1);
                }
            }
        };
        arrange(0);
    }

    void levels_and_emit(const std::vector<std::string>& pts,
                         const std::vector<StripPick>& strips) {
        DetailedTree base = assemble(*type, *palette, pts, strips);
        // stability screen before levels: zero-class strips/discs need enough
        // special points (validated fully below)
        std::vector<int> dverts;
        for (int v = 0; v < base.vertex_count(); ++v)
            if (base.vertices[v].color == Color::D) dverts.push_back(v);
        std::vector<std::string> ids;
        for (int v : dverts) ids.push_back(base.vertices[v].id);
        QuasiOrder antichain(ids);
        for (const std::vector<int>& lv : antichain.total_refinements(bounds->max_levels)) {
            tick();
            DetailedTree t = base;
            for (size_t k = 0; k < dverts.size(); ++k) t.vertices[dverts[k]].level = lv[k];
            Report rep = validate_detailed(t, *palette);
            if (!rep.ok()) continue;
            std::string key = canonical_detailed(t);
            if (!found.count(key)) found.emplace(key, std::move(t));
        }
    }
};

} // namespace

std::vector<DetailedTree> enumerate_sd_ribbon(const SdType& type, const Palette& palette,
                                              const SdBounds& bounds) {
    SdSearch search;
    search.type = &type;
    search.palette = &palette;
    search.bounds = &bounds;
    search.run();
    std::vector<DetailedTree> out;
    for (auto& [key, t] : search.found) {
        (void)key;
        out.push_back(std::move(t));
    }
    return out;
}

} // namespace rgw
