#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "rgw/divisor_tree.hpp"
#include "rgw/floer.hpp"
#include "rgw/novikov.hpp"
#include "rgw/spectral.hpp"
#include "rgw/strata.hpp"

namespace rgw {

// All schemas carry "schema": "rgw/1".
extern const char* kSchemaTag;

nlohmann::json palette_to_json(const Palette& p);
Palette palette_from_json(const nlohmann::json& j);

nlohmann::json tree_to_json(const DecoratedRootedTree& t);
DecoratedRootedTree tree_from_json(const nlohmann::json& j);
std::string tree_to_dot(const DecoratedRootedTree& t);

nlohmann::json detailed_to_json(const DetailedTree& t);
DetailedTree detailed_from_json(const nlohmann::json& j);
std::string detailed_to_dot(const DetailedTree& t);

nlohmann::json divisor_tree_to_json(const DivisorTree& s);
DivisorTree divisor_tree_from_json(const nlohmann::json& j);

nlohmann::json ribbon_to_json(const RibbonTree& r);
RibbonTree ribbon_from_json(const nlohmann::json& j);

nlohmann::json complex_to_json(const GappedComplex& c);
GappedComplex complex_from_json(const nlohmann::json& j);

FloerData floer_data_from_json(const nlohmann::json& j);
nlohmann::json floer_data_to_json(const FloerData& d);

FilteredComplex filtered_complex_from_json(const nlohmann::json& j);
nlohmann::json filtered_complex_to_json(const FilteredComplex& fc);

nlohmann::json dimension_report_to_json(const DimensionReport& r);
nlohmann::json report_to_json(const Report& r);

ClassExpr class_expr_from_json(const nlohmann::json& j);
nlohmann::json class_expr_to_json(const ClassExpr& e);

TreeType tree_type_from_json(const nlohmann::json& j);
SdType sd_type_from_json(const nlohmann::json& j);
SdBounds sd_bounds_from_json(const nlohmann::json& j);
FaceTable face_table_from_json(const nlohmann::json& j);

} // namespace rgw
