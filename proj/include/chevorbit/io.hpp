#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "chevorbit/enumerate.hpp"
#include "chevorbit/orbitlab.hpp"
#include "chevorbit/verify.hpp"

namespace chevorbit {

/// Compact coefficient string, e.g. "1121" or "-0110".
std::string root_label(const Root& r);

nlohmann::ordered_json root_system_json(const RootSystem& rs);
std::string root_system_text(const RootSystem& rs);
/// One row per root: index,coefficients,height,level,class (phi0/phi1/...).
std::string root_system_csv(const RootSystem& rs);

nlohmann::ordered_json check_json(const CheckCount& c);

/// {"family":"D","rank":4,"p":3,"label":"V","params":{...}}; class
/// parameters are strings of their representative, scalars are numbers.
nlohmann::ordered_json descriptor_json(const OrbitDescriptor& d);

std::string vector_csv(const V1Vector& x);
/// Comma-separated integers. Throws InvalidVector.
V1Vector parse_vector(std::string_view text);

nlohmann::ordered_json census_json(const OrbitCensus& census);
/// label,params,size,representative
std::string census_csv(const OrbitCensus& census);
nlohmann::ordered_json crosscheck_json(const CrosscheckReport& r);

}  // namespace chevorbit
