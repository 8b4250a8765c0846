#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "json.hpp"

#include "fcadepth/context.hpp"

namespace fcadepth {

/// Burmeister .cxt: "B", blank, |G|, |M|, blank, object labels, attribute
/// labels, one X/. row per object. Output uses '\n' line endings and is a
/// fixed point of read -> write.
std::string write_cxt(const FormalContext& ctx);
FormalContext read_cxt(std::istream& in);
FormalContext read_cxt_string(const std::string& text);

/// {"object_labels": [...], "attribute_labels": [...], "incidence_rows": [[m, ...], ...]}
nlohmann::json context_to_json(const FormalContext& ctx);
FormalContext context_from_json(const nlohmann::json& j);

/// Dispatches on extension: .cxt or .json.
FormalContext load_context(const std::filesystem::path& path);
void save_context(const FormalContext& ctx, const std::filesystem::path& path);

}  // namespace fcadepth
