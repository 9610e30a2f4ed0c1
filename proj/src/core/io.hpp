#pragma once

#include "core/quantize.hpp"
#include <json.hpp>

namespace ybgeo {

using json = nlohmann::ordered_json;

json rmatrix_to_json(const GeomRMatrix &r);
GeomRMatrix rmatrix_from_json(const json &j);

json lie_to_json(const LieAlgebra &L);
LieAlgebra lie_from_json(const json &j);

json cbcst_to_json(const CBCST &c);
CBCST cbcst_from_json(const json &j);

json rseries_to_json(const RMatrixQ &R);

struct ClosedForms {
	std::vector<std::string> star, circ;
};
ClosedForms closed_forms_from_json(const json &j);

json report_to_json(const Report &rep, const std::string &command,
                    const std::string &error = "");
std::string report_to_human(const Report &rep, const std::string &command,
                            const std::string &error = "");

json parse_json_text(const std::string &text); // with parse errors as Error

} // namespace ybgeo
