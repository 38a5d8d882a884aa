#pragma once

#include <string>

#include <json.hpp>

#include "gcmlab/quat.hpp"

namespace gcm {

// Shared matrix literal: {"n": N, "entries": [[re, im_i, im_j, im_k], ...]},
// entries row-major, N*N of them.
nlohmann::ordered_json matrix_to_json(const QMatrix& a);
QMatrix matrix_from_json(const nlohmann::json& j);
QMatrix matrix_from_json_text(const std::string& text);

}  // namespace gcm
