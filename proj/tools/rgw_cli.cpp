#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <random>

#include "rgw/json_io.hpp"

using nlohmann::json;
using namespace rgw;

namespace {

json load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("UsageError", "cannot open " + path);
    json j;
    in >> j;
    return j;
}

Palette load_palette(const std::string& path) { return palette_from_json(load(path)); }

void emit(const json& j) { std::cout << j.dump(2) << std::endl; }

int run(int argc, char** argv) {
    CLI::App app{"stratification calculus and Novikov homological algebra"};
    app.require_subcommand(1);

    std::string palette_path, tree_path, detailed_path, ribbon_path, type_path, bounds_path;
    std::string complex_path, counts_path, fc_path, universe_path, table_path;
    std::string left_path, right_path, out_dot;
    std::string mode = "novikov";
    std::string energy_cut_s;
    int n = 2, level = 1, edge = -1, jmark = 1, pages_upto = 2;
    int max_vertices = 3, max_levels = 0;
    unsigned seed = 1;
    bool as_dot = false;
    bool as_json = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--palette", palette_path, "palette JSON file");
        cmd->add_option("--n", n, "complex dimension of the ambient manifold");
        cmd->add_flag("--dot", as_dot, "emit DOT instead of JSON");
        cmd->add_flag("--json", as_json, "emit JSON (the default)");
    };

    auto* validate = app.add_subcommand("validate", "validate a tree or palette");
    add_common(validate);
    validate->add_option("--tree", tree_path);
    validate->add_option("--detailed", detailed_path);
    validate->add_option("--ribbon", ribbon_path);

    auto* enumc = app.add_subcommand("enum", "enumerate trees of a type");
    add_common(enumc);
    enumc->add_option("--type", type_path, "decorated tree type JSON");
    enumc->add_option("--sd-type", bounds_path, "SD-ribbon type+bounds JSON");
    enumc->add_option("--max-vertices", max_vertices);
    enumc->add_option("--max-levels", max_levels);

    auto* dim = app.add_subcommand("dim", "dimension report");
    add_common(dim);
    dim->add_option("--tree", tree_path);
    dim->add_option("--detailed", detailed_path);

    auto* shrink = app.add_subcommand("shrink", "level or edge shrinking");
    add_common(shrink);
    shrink->add_option("--tree", tree_path);
    shrink->add_option("--detailed", detailed_path);
    shrink->add_option("--level", level, "(i,i+1) level shrink");
    shrink->add_option("--edge", edge, "level-0 edge index to contract");

    auto* closure = app.add_subcommand("closure", "closure of a stratum in a universe");
    add_common(closure);
    closure->add_option("--detailed", detailed_path)->required();
    closure->add_option("--universe", universe_path, "JSON array of detailed trees")->required();

    auto* boundary = app.add_subcommand("boundary", "boundary face census");
    add_common(boundary);
    boundary->add_option("--sd-type", type_path, "SD type JSON")->required();
    boundary->add_option("--table", table_path, "splitting table JSON")->required();
    boundary->add_option("--universe", universe_path, "JSON array of detailed trees");

    auto* gluec = app.add_subcommand("glue", "glue two SD-ribbon trees");
    add_common(gluec);
    gluec->add_option("--left", left_path)->required();
    gluec->add_option("--right", right_path)->required();

    auto* forget = app.add_subcommand("forget", "forget a boundary marked point");
    add_common(forget);
    forget->add_option("--detailed", detailed_path)->required();
    forget->add_option("--j", jmark, "marked point index")->required();

    auto* homology = app.add_subcommand("homology", "Novikov homology decomposition");
    homology->add_option("--complex", complex_path)->required();
    homology->add_option("--energy-cut", energy_cut_s);

    auto* floer = app.add_subcommand("floer", "Floer complex from counts");
    add_common(floer);
    floer->add_option("--counts", counts_path)->required();
    floer->add_option("--mode", mode, "rational|novikov");
    floer->add_option("--energy-cut", energy_cut_s);

    auto* ss = app.add_subcommand("ss", "spectral sequence page table");
    ss->add_option("--complex", fc_path)->required();
    ss->add_option("--pages", pages_upto, "compute up to this page");

    auto* selftest = app.add_subcommand("selftest", "run the randomized property suites");
    selftest->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (validate->parsed()) {
            Report rep;
            Palette p = palette_path.empty() ? Palette() : load_palette(palette_path);
            if (!tree_path.empty())
                rep.merge(validate_tree(tree_from_json(load(tree_path)), p));
            else if (!detailed_path.empty())
                rep.merge(validate_detailed(detailed_from_json(load(detailed_path)), p));
            else if (!ribbon_path.empty())
                rep.merge(validate_ribbon(ribbon_from_json(load(ribbon_path)), p));
            else
                rep.merge(p.validate());
            emit(report_to_json(rep));
            return rep.ok() ? 0 : 1;
        }
        if (enumc->parsed()) {
            Palette p = load_palette(palette_path);
            if (!type_path.empty()) {
                json spec = load(type_path);
                TreeType ty = tree_type_from_json(spec);
                TreeBounds b;
                b.max_inside_vertices = max_vertices;
                b.max_levels = max_levels;
                if (spec.contains("whitelist"))
                    b.atom_whitelist = spec.at("whitelist").get<std::vector<std::string>>();
                json out = json::array();
                for (const DecoratedRootedTree& t : enumerate_trees(ty, p, b))
                    out.push_back(as_dot ? json(tree_to_dot(t)) : tree_to_json(t));
                emit(json{{"schema", kSchemaTag}, {"count", out.size()}, {"trees", out}});
            } else {
                json spec = load(bounds_path);
                SdType ty = sd_type_from_json(spec.at("type"));
                SdBounds b = sd_bounds_from_json(spec.at("bounds"));
                if (max_levels > 0) b.max_levels = max_levels;
                json out = json::array();
                for (const DetailedTree& t : enumerate_sd_ribbon(ty, p, b))
                    out.push_back(as_dot ? json(detailed_to_dot(t)) : detailed_to_json(t));
                emit(json{{"schema", kSchemaTag}, {"count", out.size()}, {"trees", out}});
            }
            return 0;
        }
        if (dim->parsed()) {
            Palette p = load_palette(palette_path);
            DimensionReport rep;
            if (!tree_path.empty())
                rep = stratum_dimension(tree_from_json(load(tree_path)), p, n);
            else
                rep = stratum_dimension(detailed_from_json(load(detailed_path)), p, n);
            emit(dimension_report_to_json(rep));
            return 0;
        }
        if (shrink->parsed()) {
            Palette p = load_palette(palette_path);
            if (!tree_path.empty()) {
                DecoratedRootedTree t = level_shrink(tree_from_json(load(tree_path)), level);
                emit(as_dot ? json(tree_to_dot(t)) : tree_to_json(t));
            } else {
                DetailedTree t = detailed_from_json(load(detailed_path));
                DetailedTree out =
                    edge >= 0 ? level0_edge_shrink(t, edge, p) : level_shrink(t, level, p);
                emit(as_dot ? json(detailed_to_dot(out)) : detailed_to_json(out));
            }
            return 0;
        }
        if (closure->parsed()) {
            Palette p = load_palette(palette_path);
            DetailedTree b = detailed_from_json(load(detailed_path));
            std::map<std::string, DetailedTree> universe;
            json uj = load(universe_path);
            for (const json& jt : uj.at("trees")) {
                DetailedTree t = detailed_from_json(jt);
                universe[canonical_detailed(t)] = t;
            }
            emit(json{{"schema", kSchemaTag}, {"closure", closure_of(b, universe, p)}});
            return 0;
        }
        if (boundary->parsed()) {
            Palette p = load_palette(palette_path);
            SdType ty = sd_type_from_json(load(type_path));
            FaceTable table = face_table_from_json(load(table_path));
            std::vector<DetailedTree> universe;
            if (!universe_path.empty()) {
                json uj = load(universe_path);
                for (const json& jt : uj.at("trees"))
                    universe.push_back(detailed_from_json(jt));
            }
            std::vector<Face> faces = boundary_faces(ty, p, table, universe);
            if (as_dot) {
                // face lattice: faces at rank 1, members below
                std::ostringstream os;
                os << "digraph faces {\n  rankdir=BT;\n";
                for (size_t i = 0; i < faces.size(); ++i) {
                    os << "  f" << i << " [shape=box label=\"kind " << faces[i].data.face_kind
                       << "\"];\n";
                    for (const std::string& m : faces[i].members) {
                        os << "  \"" << m.substr(0, 24) << "\" -> f" << i << ";\n";
                    }
                }
                os << "}\n";
                emit(json(os.str()));
                return 0;
            }
            json out = json::array();
            for (const Face& f : faces) {
                json jf{{"kind", f.data.face_kind},
                        {"beta1", class_expr_to_json(f.data.beta1)},
                        {"beta2", class_expr_to_json(f.data.beta2)},
                        {"template", detailed_to_json(f.tmpl)},
                        {"members", f.members}};
                if (f.data.face_kind == 1) jf["r"] = f.data.r;
                if (f.data.face_kind != 1) jf["j"] = f.data.j;
                out.push_back(jf);
            }
            emit(json{{"schema", kSchemaTag}, {"faces", out}});
            return 0;
        }
        if (gluec->parsed()) {
            Palette p = load_palette(palette_path);
            DetailedTree L = detailed_from_json(load(left_path));
            DetailedTree R = detailed_from_json(load(right_path));
            json out = json::array();
            for (const Gluing& g : glue(L, R, p))
                out.push_back(json{{"h", g.h}, {"tree", detailed_to_json(g.glued)}});
            emit(json{{"schema", kSchemaTag}, {"count", out.size()}, {"gluings", out}});
            return 0;
        }
        if (forget->parsed()) {
            Palette p = load_palette(palette_path);
            DetailedTree t = detailed_from_json(load(detailed_path));
            DetailedTree out = forget_boundary_mark(t, jmark, p);
            emit(as_dot ? json(detailed_to_dot(out)) : detailed_to_json(out));
            return 0;
        }
        if (homology->parsed()) {
            GappedComplex c = complex_from_json(load(complex_path));
            if (!energy_cut_s.empty()) c = energy_cut(c, rat_from_string(energy_cut_s));
            PartialComplexCheck chk = check_partial_complex(c);
            if (!chk.ok) {
                json off = json::array();
                for (auto& [r, col, e, co] : chk.offenders)
                    off.push_back(json{{"row", r}, {"col", col}, {"lambda", rat_to_string(e)},
                                       {"coeff", rat_to_string(co)}});
                emit(json{{"schema", kSchemaTag}, {"ok", false}, {"offenders", off}});
                return 1;
            }
            Decomposition dec = homology_decomposition(c);
            json tor = json::array();
            for (const Rat& a : dec.torsion) tor.push_back(rat_to_string(a));
            emit(json{{"schema", kSchemaTag}, {"betti", dec.betti}, {"torsion", tor}});
            return 0;
        }
        if (floer->parsed()) {
            Palette p = load_palette(palette_path);
            FloerData data = floer_data_from_json(load(counts_path));
            Report rep = validate_floer_data(data, p);
            if (!rep.ok()) {
                emit(report_to_json(rep));
                return 1;
            }
            DSquaredAudit audit = d_squared_audit(data, p);
            json out{{"schema", kSchemaTag},
                     {"expected_defect", rat_to_string(audit.expected_defect)},
                     {"scalar_identity", audit.is_scalar_identity},
                     {"defect_matches", audit.matches_expected}};
            MonotonicityAudit mono = monotonicity_audit(data, p);
            out["monotonicity_consistent"] = mono.consistent;
            if (audit.is_scalar_identity && audit.observed_scalar == 0 &&
                audit.matches_expected) {
                if (mode == "rational") {
                    FloerHomology hf = floer_homology(data, p, BoundaryMode::Rational);
                    out["rank"] = hf.rank;
                    out["rank_bound_ok"] = hf.rank_bound_ok;
                } else {
                    // assemble over the Novikov ring, optionally cut, decompose
                    NovMatrix m = assemble_boundary_novikov(data, p);
                    if (!energy_cut_s.empty())
                        m = nov_mat_truncate(m, rat_from_string(energy_cut_s));
                    Decomposition dec = homology_decomposition(m);
                    out["rank"] = dec.betti;
                    json tor = json::array();
                    for (const Rat& a : dec.torsion) tor.push_back(rat_to_string(a));
                    out["torsion"] = tor;
                    out["rank_bound_ok"] =
                        dec.betti <= static_cast<long>(data.generators.size());
                }
            }
            emit(out);
            return audit.matches_expected ? 0 : 1;
        }
        if (ss->parsed()) {
            FilteredComplex fc = filtered_complex_from_json(load(fc_path));
            std::vector<Page> pg = pages(fc, std::max(2, pages_upto));
            ConvergenceReport conv = converge_check(fc);
            json jpages = json::array();
            for (const Page& page : pg) {
                json dims = json::object();
                for (auto& [d, v] : page.dims) dims[std::to_string(d)] = v;
                jpages.push_back(json{{"r", page.r}, {"dims", dims}});
            }
            json einf = json::object();
            for (auto& [d, v] : conv.e_infinity) einf[std::to_string(d)] = v;
            emit(json{{"schema", kSchemaTag}, {"pages", jpages},
                      {"stable_page", conv.stable_page}, {"E_infinity", einf},
                      {"total_homology", conv.total_homology}, {"converges", conv.ok}});
            return conv.ok ? 0 : 1;
        }
        if (selftest->parsed()) {
            // deterministic randomized property suites
            std::mt19937_64 rng(seed);
            json results = json::object();
            {
                // Novikov valuation properties on random scalars
                bool ok = true;
                for (int i = 0; i < 200 && ok; ++i) {
                    auto rnd = [&]() {
                        NovikovScalar s;
                        int terms = static_cast<int>(rng() % 4);
                        for (int t = 0; t < terms; ++t)
                            s = s + NovikovScalar::term(Rat(static_cast<long>(rng() % 7) - 3),
                                                        Rat(static_cast<long>(rng() % 9), 4));
                        return s;
                    };
                    NovikovScalar x = rnd(), y = rnd();
                    auto vx = x.valuation(), vy = y.valuation();
                    auto vxy = (x * y).valuation();
                    if (!x.is_zero() && !y.is_zero() && vxy && !(*vxy == *vx + *vy)) ok = false;
                    auto vs = (x + y).valuation();
                    if (vs && vx && vy && *vs < std::min(*vx, *vy)) ok = false;
                    if (vx && vy && *vx != *vy && (!vs || !(*vs == std::min(*vx, *vy))))
                        ok = false;
                }
                results["novikov_valuation"] = ok;
            }
            {
                // level/quasi-order correspondence counts on antichains
                bool ok = true;
                for (int k = 1; k <= 4; ++k) {
                    std::vector<std::string> g;
                    for (int i = 0; i < k; ++i) g.push_back("x" + std::to_string(i));
                    QuasiOrder qo(g);
                    long want = fubini_number(k);
                    if (static_cast<long>(qo.total_refinements().size()) != want) ok = false;
                }
                results["level_counts"] = ok;
            }
            {
                // enumeration determinism: two runs agree byte for byte
                Palette p;
                ClassAtom a;
                a.id = "g";
                a.space = Space::D;
                a.pair_D = 0;
                a.c1_X = 1;
                a.area = 1;
                p.add(a);
                TreeType ty;
                ty.alpha = ClassExpr::atom("g");
                ty.tangency = {1, -1};
                TreeBounds tb;
                tb.max_inside_vertices = 3;
                tb.atom_whitelist = {"g"};
                auto run1 = enumerate_trees(ty, p, tb);
                auto run2 = enumerate_trees(ty, p, tb);
                bool ok = run1.size() == run2.size();
                std::string prev;
                for (size_t i = 0; i < run1.size() && ok; ++i) {
                    std::string k1 = canonical_form(run1[i]);
                    if (k1 != canonical_form(run2[i]) || !(prev < k1)) ok = false;
                    prev = k1;
                }
                // canonical form is invariant under vertex-storage shuffles
                for (size_t i = 0; i < run1.size() && ok; ++i) {
                    DecoratedRootedTree t = run1[i];
                    std::reverse(t.edges.begin(), t.edges.end());
                    if (canonical_form(t) != canonical_form(run1[i])) ok = false;
                }
                results["enumeration_determinism"] = ok;
            }
            bool all = true;
            for (auto& [k, v] : results.items())
                if (!v.get<bool>()) all = false;
            emit(json{{"schema", kSchemaTag}, {"seed", seed}, {"results", results},
                      {"ok", all}});
            return all ? 0 : 1;
        }
    } catch (const Error& e) {
        emit(json{{"schema", kSchemaTag}, {"error", e.code()}, {"detail", e.what()}});
        return e.code() == "UsageError" ? 2 : 1;
    } catch (const json::exception& e) {
        emit(json{{"schema", kSchemaTag}, {"error", "BadInput"}, {"detail", e.what()}});
        return 2;
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
