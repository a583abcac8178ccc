#pragma once

// Command-line driver. Exit codes: 0 success, 1 domain error, 2 parse or
// usage error, 3 internal error.

#include "a1deg/forms.hpp"

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace a1deg::cli {

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

nlohmann::json field_to_json(const FieldDesc& F);
FieldDesc field_from_json(const nlohmann::json& j);

/// Field, Gram matrix (entries as strings) and every invariant defined over the field.
nlohmann::json form_to_json(const GWClass& beta);
/// Inverse of form_to_json; only "field" and "gram" are read.
GWClass form_from_json(const nlohmann::json& j);

/// "<1,-2>" for diagonal Gram matrices, the matrix otherwise, "0" for rank 0.
std::string pretty_form(const GWClass& beta);

} // namespace a1deg::cli
