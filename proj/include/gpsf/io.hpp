#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gpsf/interp.hpp"

namespace gpsf {

using json = nlohmann::json;

// %.17g
std::string fmt17(double v);

json to_json(const ZernikeCoeffs& z);
ZernikeCoeffs zernike_from_json(const json& j);

json to_json(const std::vector<EigenTriple>& t);
std::string to_csv(const std::vector<EigenTriple>& t);

json to_json(const QuadratureRule1D& rule);
std::string to_csv(const QuadratureRule1D& rule);

json to_json(const GpsfExpansion& e);
GpsfExpansion expansion_from_json(const json& j);
std::string to_csv(const GpsfExpansion& e);

}  // namespace gpsf
