#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "rgw/json_io.hpp"

namespace py = pybind11;
using nlohmann::json;
using namespace rgw;

namespace {

json parse(const std::string& s) { return json::parse(s); }

std::string validate_json(const std::string& palette_s, const std::string& object_s) {
    Palette pal = palette_from_json(parse(palette_s));
    json obj = parse(object_s);
    Report rep;
    if (!obj.contains("kind"))
        rep = validate_tree(tree_from_json(obj), pal);
    else if (obj.contains("decorated_trees"))
        rep = validate_divisor_tree(divisor_tree_from_json(obj), pal);
    else
        rep = validate_detailed(detailed_from_json(obj), pal);
    return report_to_json(rep).dump();
}

std::string enumerate_trees_json(const std::string& palette_s, const std::string& spec_s) {
    Palette pal = palette_from_json(parse(spec_s).is_null() ? json() : parse(palette_s));
    json spec = parse(spec_s);
    TreeType ty = tree_type_from_json(spec);
    TreeBounds b;
    b.max_inside_vertices = spec.value("max_vertices", 3);
    b.max_levels = spec.value("max_levels", 0);
    if (spec.contains("whitelist"))
        b.atom_whitelist = spec.at("whitelist").get<std::vector<std::string>>();
    json out = json::array();
    for (const DecoratedRootedTree& t : enumerate_trees(ty, pal, b))
        out.push_back(tree_to_json(t));
    return json{{"schema", kSchemaTag}, {"count", out.size()}, {"trees", out}}.dump();
}

std::string enumerate_sd_json(const std::string& palette_s, const std::string& spec_s) {
    Palette pal = palette_from_json(parse(palette_s));
    json spec = parse(spec_s);
    SdType ty = sd_type_from_json(spec.at("type"));
    SdBounds b = sd_bounds_from_json(spec.at("bounds"));
    json out = json::array();
    for (const DetailedTree& t : enumerate_sd_ribbon(ty, pal, b))
        out.push_back(detailed_to_json(t));
    return json{{"schema", kSchemaTag}, {"count", out.size()}, {"trees", out}}.dump();
}

std::string dim_json(const std::string& palette_s, const std::string& object_s, int n) {
    Palette pal = palette_from_json(parse(palette_s));
    json obj = parse(object_s);
    DimensionReport rep = !obj.contains("kind")
                              ? stratum_dimension(tree_from_json(obj), pal, n)
                              : stratum_dimension(detailed_from_json(obj), pal, n);
    return dimension_report_to_json(rep).dump();
}

std::string shrink_json(const std::string& palette_s, const std::string& object_s, int level,
                        int edge) {
    Palette pal = palette_from_json(parse(palette_s));
    json obj = parse(object_s);
    if (!obj.contains("kind")) return tree_to_json(level_shrink(tree_from_json(obj), level)).dump();
    DetailedTree t = detailed_from_json(obj);
    DetailedTree out = edge >= 0 ? level0_edge_shrink(t, edge, pal) : level_shrink(t, level, pal);
    return detailed_to_json(out).dump();
}

std::string glue_json(const std::string& palette_s, const std::string& left_s,
                      const std::string& right_s) {
    Palette pal = palette_from_json(parse(palette_s));
    json out = json::array();
    for (const Gluing& g :
         glue(detailed_from_json(parse(left_s)), detailed_from_json(parse(right_s)), pal))
        out.push_back(json{{"h", g.h}, {"tree", detailed_to_json(g.glued)}});
    return json{{"schema", kSchemaTag}, {"count", out.size()}, {"gluings", out}}.dump();
}

std::string forget_json(const std::string& palette_s, const std::string& tree_s, int j) {
    Palette pal = palette_from_json(parse(palette_s));
    return detailed_to_json(forget_boundary_mark(detailed_from_json(parse(tree_s)), j, pal))
        .dump();
}

std::string homology_json(const std::string& complex_s) {
    GappedComplex c = complex_from_json(parse(complex_s));
    Decomposition dec = homology_decomposition(c);
    json tor = json::array();
    for (const Rat& a : dec.torsion) tor.push_back(rat_to_string(a));
    return json{{"schema", kSchemaTag}, {"betti", dec.betti}, {"torsion", tor}}.dump();
}

std::string floer_json(const std::string& palette_s, const std::string& counts_s,
                       const std::string& mode) {
    Palette pal = palette_from_json(parse(palette_s));
    FloerData data = floer_data_from_json(parse(counts_s));
    DSquaredAudit audit = d_squared_audit(data, pal);
    json out{{"schema", kSchemaTag},
             {"expected_defect", rat_to_string(audit.expected_defect)},
             {"scalar_identity", audit.is_scalar_identity},
             {"defect_matches", audit.matches_expected}};
    if (audit.is_scalar_identity && audit.observed_scalar == 0) {
        FloerHomology hf = floer_homology(
            data, pal, mode == "rational" ? BoundaryMode::Rational : BoundaryMode::Novikov);
        out["rank"] = hf.rank;
        json tor = json::array();
        for (const Rat& a : hf.torsion) tor.push_back(rat_to_string(a));
        out["torsion"] = tor;
        out["rank_bound_ok"] = hf.rank_bound_ok;
    }
    return out.dump();
}

std::string spectral_json(const std::string& fc_s, int upto) {
    FilteredComplex fc = filtered_complex_from_json(parse(fc_s));
    std::vector<Page> pg = pages(fc, std::max(2, upto));
    ConvergenceReport conv = converge_check(fc);
    json jpages = json::array();
    for (const Page& page : pg) {
        json dims = json::object();
        for (auto& [d, v] : page.dims) dims[std::to_string(d)] = v;
        jpages.push_back(json{{"r", page.r}, {"dims", dims}});
    }
    json einf = json::object();
    for (auto& [d, v] : conv.e_infinity) einf[std::to_string(d)] = v;
    return json{{"schema", kSchemaTag}, {"pages", jpages}, {"stable_page", conv.stable_page},
                {"E_infinity", einf}, {"total_homology", conv.total_homology},
                {"converges", conv.ok}}
        .dump();
}

std::string canonical_json(const std::string& object_s) {
    json obj = parse(object_s);
    if (!obj.contains("kind")) return canonical_form(tree_from_json(obj));
    return canonical_detailed(detailed_from_json(obj));
}

} // namespace

PYBIND11_MODULE(_rgw, m) {
    m.doc() = "stratification calculus and Novikov homological algebra";
    py::register_exception<Error>(m, "RgwError");
    m.def("validate", &validate_json, py::arg("palette"), py::arg("object"));
    m.def("enumerate_trees", &enumerate_trees_json, py::arg("palette"), py::arg("spec"));
    m.def("enumerate_sd_ribbon", &enumerate_sd_json, py::arg("palette"), py::arg("spec"));
    m.def("dim", &dim_json, py::arg("palette"), py::arg("object"), py::arg("n") = 2);
    m.def("shrink", &shrink_json, py::arg("palette"), py::arg("object"), py::arg("level") = 1,
          py::arg("edge") = -1);
    m.def("glue", &glue_json, py::arg("palette"), py::arg("left"), py::arg("right"));
    m.def("forget", &forget_json, py::arg("palette"), py::arg("tree"), py::arg("j"));
    m.def("homology", &homology_json, py::arg("complex"));
    m.def("floer", &floer_json, py::arg("palette"), py::arg("counts"),
          py::arg("mode") = "novikov");
    m.def("spectral", &spectral_json, py::arg("complex"), py::arg("pages") = 2);
    m.def("canonical", &canonical_json, py::arg("object"));
}
