#include "rgw/json_io.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace rgw {

using nlohmann::json;

const char* kSchemaTag = "rgw/1";

namespace {

Rat jrat(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    throw Error("BadRational", "expected integer or \"num/den\" string");
}

json jrat_out(const Rat& q) { return rat_to_string(q); }

void expect_schema(const json& j) {
    if (j.contains("schema") && j.at("schema") != kSchemaTag)
        throw Error("BadSchema", "expected schema " + std::string(kSchemaTag));
}

} // namespace

ClassExpr class_expr_from_json(const json& j) {
    ClassExpr e;
    if (j.is_null()) return e;
    for (auto it = j.begin(); it != j.end(); ++it) {
        int c = it.value().get<int>();
        if (c != 0) e.terms[it.key()] = c;
    }
    return e;
}

json class_expr_to_json(const ClassExpr& e) {
    json j = json::object();
    for (auto& [id, c] : e.terms) j[id] = c;
    return j;
}

json palette_to_json(const Palette& p) {
    json classes = json::array();
    for (auto& [id, a] : p.atoms()) {
        json c{{"id", id}, {"space", space_name(a.space)}, {"pair_D", a.pair_D},
               {"c1_X", a.c1_X}, {"area", jrat_out(a.area)}};
        if (a.maslov_raw) c["maslov"] = *a.maslov_raw;
        if (a.space == Space::Strip) {
            c["from"] = a.strip_from;
            c["to"] = a.strip_to;
        }
        classes.push_back(c);
    }
    return json{{"schema", kSchemaTag}, {"classes", classes}};
}

Palette palette_from_json(const json& j) {
    expect_schema(j);
    Palette p;
    for (const json& c : j.at("classes")) {
        ClassAtom a;
        a.id = c.at("id").get<std::string>();
        a.space = space_from_name(c.at("space").get<std::string>());
        a.pair_D = c.value("pair_D", 0);
        a.c1_X = c.value("c1_X", 0);
        if (c.contains("maslov")) a.maslov_raw = c.at("maslov").get<int>();
        a.area = c.contains("area") ? jrat(c.at("area")) : Rat(0);
        if (c.contains("from")) a.strip_from = c.at("from").get<std::string>();
        if (c.contains("to")) a.strip_to = c.at("to").get<std::string>();
        p.add(a);
    }
    return p;
}

json tree_to_json(const DecoratedRootedTree& t) {
    json vertices = json::array();
    for (const TreeVertex& v : t.vertices) {
        json jv{{"id", v.id}, {"kind", v.inside ? "inside" : "outside"}};
        if (v.inside) {
            jv["alpha"] = class_expr_to_json(v.alpha);
            jv["level"] = v.level;
        }
        vertices.push_back(jv);
    }
    json edges = json::array();
    for (const TreeEdge& e : t.edges)
        edges.push_back(json{{"a", t.vertices[e.a].id}, {"b", t.vertices[e.b].id}, {"m", e.m}});
    json order = json::array();
    for (int v : t.outside_order) order.push_back(t.vertices[v].id);
    return json{{"schema", kSchemaTag}, {"vertices", vertices}, {"edges", edges},
                {"root", t.vertices[t.root].id}, {"outside_order", order}};
}

DecoratedRootedTree tree_from_json(const json& j) {
    expect_schema(j);
    DecoratedRootedTree t;
    std::map<std::string, int> idx;
    for (const json& jv : j.at("vertices")) {
        TreeVertex v;
        v.id = jv.at("id").get<std::string>();
        v.inside = jv.at("kind").get<std::string>() == "inside";
        if (v.inside) {
            if (jv.contains("alpha")) v.alpha = class_expr_from_json(jv.at("alpha"));
            v.level = jv.value("level", 1);
        }
        idx[v.id] = t.vertex_count();
        t.vertices.push_back(v);
    }
    for (const json& je : j.at("edges"))
        t.edges.push_back({idx.at(je.at("a").get<std::string>()),
                           idx.at(je.at("b").get<std::string>()), je.at("m").get<int>()});
    t.root = idx.at(j.at("root").get<std::string>());
    for (const json& o : j.at("outside_order"))
        t.outside_order.push_back(idx.at(o.get<std::string>()));
    return t;
}

std::string tree_to_dot(const DecoratedRootedTree& t) {
    std::ostringstream os;
    os << "digraph tree {\n  rankdir=BT;\n";
    std::map<int, std::vector<std::string>> by_level;
    for (int v = 0; v < t.vertex_count(); ++v) {
        const TreeVertex& tv = t.vertices[v];
        if (tv.inside) {
            os << "  \"" << tv.id << "\" [label=\"" << tv.id << "\\n" << tv.alpha.to_string()
               << "\"];\n";
            by_level[tv.level].push_back(tv.id);
        } else {
            os << "  \"" << tv.id << "\" [shape=point];\n";
            by_level[0].push_back(tv.id);
        }
    }
    for (auto& [lv, ids] : by_level) {
        os << "  { rank=same;";
        for (auto& id : ids) os << " \"" << id << "\";";
        os << " }\n";
    }
    for (int e = 0; e < t.edge_count(); ++e)
        os << "  \"" << t.vertices[t.source(e)].id << "\" -> \"" << t.vertices[t.target(e)].id
           << "\" [label=\"" << t.edges[e].m << "\"];\n";
    os << "}\n";
    return os.str();
}

json detailed_to_json(const DetailedTree& t) {
    json vertices = json::array();
    for (const DetailedVertex& v : t.vertices) {
        json jv{{"id", v.id}, {"color", color_name(v.color)}, {"level", v.level}};
        if (!v.alpha.is_zero()) jv["alpha"] = class_expr_to_json(v.alpha);
        vertices.push_back(jv);
    }
    json edges = json::array();
    for (const DetailedEdge& e : t.edges) {
        json je{{"a", t.vertices[e.a].id}, {"b", t.vertices[e.b].id}};
        switch (e.kind) {
        case EdgeKind::Divisor:
            je["kind"] = "divisor";
            je["m"] = e.m;
            break;
        case EdgeKind::Boundary: je["kind"] = "boundary"; break;
        case EdgeKind::Strip:
            je["kind"] = "strip";
            je["pt"] = e.pt;
            break;
        }
        edges.push_back(je);
    }
    json out{{"schema", kSchemaTag}, {"kind", kind_name(t.kind)}, {"vertices", vertices},
             {"edges", edges}};
    if (t.root >= 0) out["root"] = t.vertices[t.root].id;
    if (t.v_left >= 0) out["left"] = t.vertices[t.v_left].id;
    if (t.v_right >= 0) out["right"] = t.vertices[t.v_right].id;
    out["k"] = t.k;
    out["k0"] = t.k0;
    out["k1"] = t.k1;
    if (!t.type_p.empty()) out["p"] = t.type_p;
    if (!t.type_q.empty()) out["q"] = t.type_q;
    if (!t.rotations.empty()) {
        json rot = json::object();
        for (auto& [v, edges_ccw] : t.rotations) rot[t.vertices[v].id] = edges_ccw;
        out["ribbon"] = rot;
    }
    return out;
}

DetailedTree detailed_from_json(const json& j) {
    expect_schema(j);
    DetailedTree t;
    t.kind = kind_from_name(j.at("kind").get<std::string>());
    std::map<std::string, int> idx;
    for (const json& jv : j.at("vertices")) {
        DetailedVertex v;
        v.id = jv.at("id").get<std::string>();
        v.color = color_from_name(jv.at("color").get<std::string>());
        v.level = jv.value("level", 0);
        if (jv.contains("alpha")) v.alpha = class_expr_from_json(jv.at("alpha"));
        idx[v.id] = t.vertex_count();
        t.vertices.push_back(v);
    }
    for (const json& je : j.at("edges")) {
        DetailedEdge e;
        e.a = idx.at(je.at("a").get<std::string>());
        e.b = idx.at(je.at("b").get<std::string>());
        std::string kind = je.value("kind", "divisor");
        if (kind == "divisor") {
            e.kind = EdgeKind::Divisor;
            e.m = je.at("m").get<int>();
        } else if (kind == "boundary") {
            e.kind = EdgeKind::Boundary;
        } else if (kind == "strip") {
            e.kind = EdgeKind::Strip;
            e.pt = je.at("pt").get<std::string>();
        } else {
            throw Error("BadKind", "edge kind '" + kind + "'");
        }
        t.edges.push_back(e);
    }
    if (j.contains("root")) t.root = idx.at(j.at("root").get<std::string>());
    if (j.contains("left")) t.v_left = idx.at(j.at("left").get<std::string>());
    if (j.contains("right")) t.v_right = idx.at(j.at("right").get<std::string>());
    t.k = j.value("k", 0);
    t.k0 = j.value("k0", 0);
    t.k1 = j.value("k1", 0);
    if (j.contains("p")) t.type_p = j.at("p").get<std::string>();
    if (j.contains("q")) t.type_q = j.at("q").get<std::string>();
    if (j.contains("ribbon"))
        for (auto it = j.at("ribbon").begin(); it != j.at("ribbon").end(); ++it)
            t.rotations[idx.at(it.key())] = it.value().get<std::vector<int>>();
    return t;
}

std::string detailed_to_dot(const DetailedTree& t) {
    std::ostringstream os;
    os << "digraph detailed {\n  rankdir=BT;\n";
    std::map<int, std::vector<std::string>> by_level;
    for (const DetailedVertex& v : t.vertices) {
        os << "  \"" << v.id << "\" [label=\"" << v.id << ":" << color_name(v.color);
        if (!v.alpha.is_zero()) os << "\\n" << v.alpha.to_string();
        os << "\"";
        if (v.color == Color::D) os << " shape=box";
        os << "];\n";
        by_level[v.level].push_back(v.id);
    }
    for (auto& [lv, ids] : by_level) {
        os << "  { rank=same;";
        for (auto& id : ids) os << " \"" << id << "\";";
        os << " }\n";
    }
    for (const DetailedEdge& e : t.edges) {
        os << "  \"" << t.vertices[e.a].id << "\" -> \"" << t.vertices[e.b].id << "\"";
        if (e.kind == EdgeKind::Divisor)
            os << " [label=\"" << e.m << "\"]";
        else if (e.kind == EdgeKind::Strip)
            os << " [label=\"" << e.pt << "\" style=bold dir=none]";
        else
            os << " [style=dashed dir=none]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

json divisor_tree_to_json(const DivisorTree& s) {
    json vertices = json::array();
    for (const DivisorTreeVertex& v : s.vertices)
        vertices.push_back(json{{"id", v.id}, {"color", color_name(v.color)},
                                {"alpha", class_expr_to_json(v.alpha)}});
    json edges = json::array();
    for (const DivisorTreeEdge& e : s.edges)
        edges.push_back(json{{"a", s.vertices[e.a].id}, {"b", s.vertices[e.b].id}, {"m", e.m}});
    json trees = json::object();
    for (auto& [v, tree] : s.trees) trees[s.vertices[v].id] = tree_to_json(tree);
    json levels = json::object();
    if (s.order.size() > 0) {
        std::vector<int> lv = s.order.to_levels();
        for (int i = 0; i < s.order.size(); ++i) levels[s.order.ground()[i]] = lv[i];
    }
    json out{{"schema", kSchemaTag}, {"kind", kind_name(s.kind)}, {"vertices", vertices},
             {"edges", edges}, {"root", s.vertices[s.root].id},
             {"decorated_trees", trees}, {"order", json{{"levels", levels}}}};
    out["k"] = s.k;
    out["k0"] = s.k0;
    out["k1"] = s.k1;
    if (!s.p.empty()) out["p"] = s.p;
    if (!s.q.empty()) out["q"] = s.q;
    return out;
}

namespace {

QuasiOrder order_from_json(const json& j) {
    if (j.contains("levels")) {
        std::vector<std::string> ground;
        std::vector<int> levels;
        for (auto it = j.at("levels").begin(); it != j.at("levels").end(); ++it) {
            ground.push_back(it.key());
            levels.push_back(it.value().get<int>());
        }
        return QuasiOrder::from_levels(ground, levels);
    }
    QuasiOrder qo(j.at("ground").get<std::vector<std::string>>());
    for (const json& pair : j.value("pairs", json::array()))
        qo.set_le(qo.index_of(pair.at(0).get<std::string>()),
                  qo.index_of(pair.at(1).get<std::string>()));
    qo.transitive_close();
    return qo;
}

} // namespace

DivisorTree divisor_tree_from_json(const json& j) {
    expect_schema(j);
    DivisorTree s;
    s.kind = kind_from_name(j.at("kind").get<std::string>());
    std::map<std::string, int> idx;
    for (const json& jv : j.at("vertices")) {
        DivisorTreeVertex v;
        v.id = jv.at("id").get<std::string>();
        v.color = color_from_name(jv.at("color").get<std::string>());
        if (jv.contains("alpha")) v.alpha = class_expr_from_json(jv.at("alpha"));
        idx[v.id] = static_cast<int>(s.vertices.size());
        s.vertices.push_back(v);
    }
    for (const json& je : j.at("edges"))
        s.edges.push_back({idx.at(je.at("a").get<std::string>()),
                           idx.at(je.at("b").get<std::string>()), je.at("m").get<int>()});
    s.root = idx.at(j.at("root").get<std::string>());
    s.k = j.value("k", 0);
    s.k0 = j.value("k0", 0);
    s.k1 = j.value("k1", 0);
    if (j.contains("p")) s.p = j.at("p").get<std::string>();
    if (j.contains("q")) s.q = j.at("q").get<std::string>();
    if (j.contains("decorated_trees"))
        for (auto it = j.at("decorated_trees").begin(); it != j.at("decorated_trees").end(); ++it)
            s.trees[idx.at(it.key())] = tree_from_json(it.value());
    if (j.contains("order")) s.order = order_from_json(j.at("order"));
    return s;
}

json ribbon_to_json(const RibbonTree& r) {
    json vertices = json::array();
    for (const RibbonVertex& v : r.vertices) {
        json jv{{"id", v.id}, {"exterior", v.exterior}};
        if (v.side >= 0) jv["side"] = v.side;
        if (!v.exterior) jv["divisor_tree"] = divisor_tree_to_json(v.divisor);
        vertices.push_back(jv);
    }
    json edges = json::array();
    for (const RibbonEdge& e : r.edges) {
        json je{{"a", r.vertices[e.a].id}, {"b", r.vertices[e.b].id}};
        if (e.strip) {
            je["strip"] = true;
            je["pt"] = e.pt;
        }
        edges.push_back(je);
    }
    json rot = json::object();
    for (auto& [v, edges_ccw] : r.rotations) rot[r.vertices[v].id] = edges_ccw;
    json out{{"schema", kSchemaTag}, {"kind", kind_name(r.kind)}, {"vertices", vertices},
             {"edges", edges}, {"ribbon", rot}};
    if (r.root_ext >= 0) out["root"] = r.vertices[r.root_ext].id;
    if (r.v_left >= 0) out["left"] = r.vertices[r.v_left].id;
    if (r.v_right >= 0) out["right"] = r.vertices[r.v_right].id;
    if (!r.p.empty()) out["p"] = r.p;
    if (!r.q.empty()) out["q"] = r.q;
    json levels = json::object();
    if (r.order.size() > 0) {
        std::vector<int> lv = r.order.to_levels();
        for (int i = 0; i < r.order.size(); ++i) levels[r.order.ground()[i]] = lv[i];
    }
    out["order"] = json{{"levels", levels}};
    return out;
}

RibbonTree ribbon_from_json(const json& j) {
    expect_schema(j);
    RibbonTree r;
    r.kind = kind_from_name(j.at("kind").get<std::string>());
    std::map<std::string, int> idx;
    for (const json& jv : j.at("vertices")) {
        RibbonVertex v;
        v.id = jv.at("id").get<std::string>();
        v.exterior = jv.value("exterior", false);
        v.side = jv.value("side", -1);
        if (jv.contains("divisor_tree")) v.divisor = divisor_tree_from_json(jv.at("divisor_tree"));
        idx[v.id] = static_cast<int>(r.vertices.size());
        r.vertices.push_back(v);
    }
    for (const json& je : j.at("edges")) {
        RibbonEdge e;
        e.a = idx.at(je.at("a").get<std::string>());
        e.b = idx.at(je.at("b").get<std::string>());
        e.strip = je.value("strip", false);
        if (e.strip) e.pt = je.at("pt").get<std::string>();
        r.edges.push_back(e);
    }
    if (j.contains("root")) r.root_ext = idx.at(j.at("root").get<std::string>());
    if (j.contains("left")) r.v_left = idx.at(j.at("left").get<std::string>());
    if (j.contains("right")) r.v_right = idx.at(j.at("right").get<std::string>());
    if (j.contains("p")) r.p = j.at("p").get<std::string>();
    if (j.contains("q")) r.q = j.at("q").get<std::string>();
    if (j.contains("ribbon"))
        for (auto it = j.at("ribbon").begin(); it != j.at("ribbon").end(); ++it)
            r.rotations[idx.at(it.key())] = it.value().get<std::vector<int>>();
    if (j.contains("order")) r.order = order_from_json(j.at("order"));
    return r;
}

json complex_to_json(const GappedComplex& c) {
    json gens = json::array();
    for (int i = 0; i < c.size(); ++i)
        gens.push_back(json{{"id", c.generators[i]}, {"deg", c.degree[i]}});
    json monoid = json::array();
    for (const Rat& g : c.monoid) monoid.push_back(jrat_out(g));
    json terms = json::array();
    for (int r = 0; r < c.size(); ++r)
        for (int col = 0; col < c.size(); ++col)
            for (auto& [e, co] : c.d[r][col].terms())
                terms.push_back(json{{"lambda", jrat_out(e)}, {"row", r}, {"col", col},
                                     {"coeff", jrat_out(co)}});
    return json{{"schema", kSchemaTag}, {"generators", gens}, {"monoid", monoid},
                {"E", jrat_out(c.energy_cut_level)}, {"terms", terms}};
}

GappedComplex complex_from_json(const json& j) {
    expect_schema(j);
    GappedComplex c;
    for (const json& g : j.at("generators")) {
        c.generators.push_back(g.at("id").get<std::string>());
        c.degree.push_back(g.value("deg", 0));
    }
    for (const json& g : j.value("monoid", json::array())) c.monoid.push_back(jrat(g));
    c.energy_cut_level = jrat(j.at("E"));
    int n = c.size();
    c.d.assign(n, std::vector<NovikovScalar>(n));
    for (const json& t : j.value("terms", json::array())) {
        int r = t.at("row").get<int>(), col = t.at("col").get<int>();
        c.d[r][col] = c.d[r][col] + NovikovScalar::term(jrat(t.at("coeff")), jrat(t.at("lambda")));
    }
    return c;
}

FloerData floer_data_from_json(const json& j) {
    expect_schema(j);
    FloerData d;
    for (const json& g : j.at("generators"))
        d.generators.push_back({g.at("id").get<std::string>(), g.value("o", std::string()),
                                g.value("deg", 0)});
    for (const json& s : j.value("strips", json::array())) {
        StripCount sc;
        sc.from = s.at("from").get<std::string>();
        sc.to = s.at("to").get<std::string>();
        sc.cls = s.at("class").get<std::string>();
        sc.count = jrat(s.at("count"));
        if (s.contains("energy")) sc.energy = jrat(s.at("energy"));
        if (s.contains("maslov")) sc.maslov = s.at("maslov").get<int>();
        d.strips.push_back(sc);
    }
    if (j.contains("discs")) {
        auto side = [&](const char* key, std::vector<DiscCount>& out) {
            for (const json& e : j.at("discs").value(key, json::array())) {
                DiscCount dc;
                dc.cls = e.at("class").get<std::string>();
                dc.count = jrat(e.at("count"));
                dc.boundary_tag = e.value("tag", std::string());
                out.push_back(dc);
            }
        };
        side("L0", d.discs_L0);
        side("L1", d.discs_L1);
    }
    if (j.contains("monotonicity_c")) d.monotonicity_c = jrat(j.at("monotonicity_c"));
    return d;
}

json floer_data_to_json(const FloerData& d) {
    json gens = json::array();
    for (const FloerGenerator& g : d.generators)
        gens.push_back(json{{"id", g.id}, {"o", g.component}, {"deg", g.degree}});
    json strips = json::array();
    for (const StripCount& s : d.strips) {
        json js{{"from", s.from}, {"to", s.to}, {"class", s.cls},
                {"count", jrat_out(s.count)}};
        if (s.energy) js["energy"] = jrat_out(*s.energy);
        if (s.maslov) js["maslov"] = *s.maslov;
        strips.push_back(js);
    }
    auto side = [](const std::vector<DiscCount>& v) {
        json out = json::array();
        for (const DiscCount& dc : v) {
            json jd{{"class", dc.cls}, {"count", jrat_out(dc.count)}};
            if (!dc.boundary_tag.empty()) jd["tag"] = dc.boundary_tag;
            out.push_back(jd);
        }
        return out;
    };
    return json{{"schema", kSchemaTag}, {"generators", gens}, {"strips", strips},
                {"discs", json{{"L0", side(d.discs_L0)}, {"L1", side(d.discs_L1)}}},
                {"monotonicity_c", jrat_out(d.monotonicity_c)}};
}

FilteredComplex filtered_complex_from_json(const json& j) {
    expect_schema(j);
    FilteredComplex fc;
    for (const json& b : j.at("basis")) {
        fc.basis.push_back(b.at("id").get<std::string>());
        fc.degree.push_back(b.at("deg").get<int>());
    }
    int n = fc.size();
    for (const json& part : j.value("d", json::array())) {
        int k = part.at("k").get<int>();
        Matrix m(n, Vec(n, Rat(0)));
        for (const json& e : part.value("entries", json::array()))
            m[e.at("row").get<int>()][e.at("col").get<int>()] = jrat(e.at("coeff"));
        fc.d_parts[k] = m;
    }
    return fc;
}

json filtered_complex_to_json(const FilteredComplex& fc) {
    json basis = json::array();
    for (int i = 0; i < fc.size(); ++i)
        basis.push_back(json{{"id", fc.basis[i]}, {"deg", fc.degree[i]}});
    json parts = json::array();
    for (auto& [k, m] : fc.d_parts) {
        json entries = json::array();
        for (int r = 0; r < fc.size(); ++r)
            for (int c = 0; c < fc.size(); ++c)
                if (m[r][c] != 0)
                    entries.push_back(json{{"row", r}, {"col", c}, {"coeff", jrat_out(m[r][c])}});
        parts.push_back(json{{"k", k}, {"entries", entries}});
    }
    return json{{"schema", kSchemaTag}, {"basis", basis}, {"d", parts}};
}

json dimension_report_to_json(const DimensionReport& r) {
    json per = json::object();
    for (auto& [id, d] : r.per_vertex) per[id] = d;
    json out{{"schema", kSchemaTag},
             {"sum", r.sum_dimension},
             {"quotient", r.quotient_dimension},
             {"per_vertex", per},
             {"levels", r.num_levels},
             {"n", r.ambient_n},
             {"corrections",
              json{{"level0_edge_count", r.level0_edge_count}, {"N_gt0", r.n_gt0},
                   {"strip_edge_count", r.strip_edge_count}}},
             {"interior_vertices", r.interior_vertices},
             {"corner_codimension", r.corner_codimension}};
    if (r.closed_form) out["closed_form"] = *r.closed_form;
    return out;
}

json report_to_json(const Report& r) {
    return json{{"schema", kSchemaTag}, {"ok", r.ok()}, {"violations", r.violations}};
}

TreeType tree_type_from_json(const json& j) {
    TreeType ty;
    ty.alpha = class_expr_from_json(j.at("alpha"));
    ty.tangency = j.at("m").get<std::vector<int>>();
    return ty;
}

SdType sd_type_from_json(const json& j) {
    SdType ty;
    ty.p = j.at("p").get<std::string>();
    ty.q = j.at("q").get<std::string>();
    ty.beta = class_expr_from_json(j.at("beta"));
    ty.k0 = j.value("k0", 0);
    ty.k1 = j.value("k1", 0);
    return ty;
}

SdBounds sd_bounds_from_json(const json& j) {
    SdBounds b;
    b.max_interior = j.value("max_interior", 4);
    b.max_levels = j.value("max_levels", 3);
    b.max_divisor_vertices = j.value("max_divisor_vertices", 2);
    b.max_contact = j.value("max_contact", 2);
    b.max_absorbed = j.value("max_absorbed", 2);
    if (j.contains("intermediate_points"))
        b.intermediate_points = j.at("intermediate_points").get<std::vector<std::string>>();
    if (j.contains("strip_atoms"))
        b.strip_atoms = j.at("strip_atoms").get<std::vector<std::string>>();
    if (j.contains("disc_atoms0"))
        b.disc_atoms0 = j.at("disc_atoms0").get<std::vector<std::string>>();
    if (j.contains("disc_atoms1"))
        b.disc_atoms1 = j.at("disc_atoms1").get<std::vector<std::string>>();
    if (j.contains("divisor_atoms"))
        b.divisor_atoms = j.at("divisor_atoms").get<std::vector<std::string>>();
    return b;
}

FaceTable face_table_from_json(const json& j) {
    FaceTable t;
    if (j.contains("intermediate_points"))
        t.intermediate_points = j.at("intermediate_points").get<std::vector<std::string>>();
    auto splits = [&](const char* key, std::vector<SplitEntry>& out) {
        for (const json& s : j.value(key, json::array()))
            out.push_back({class_expr_from_json(s.at("beta1")),
                           class_expr_from_json(s.at("beta2"))});
    };
    splits("strip_splits", t.strip_splits);
    splits("disc_splits1", t.disc_splits1);
    splits("disc_splits0", t.disc_splits0);
    return t;
}

} // namespace rgw
