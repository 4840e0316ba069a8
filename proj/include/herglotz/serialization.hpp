#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "herglotz/catalog.hpp"
#include "herglotz/extrapolation.hpp"
#include "herglotz/measure.hpp"

namespace herglotz {

/// Shortest round-trip decimal form of x ("inf", "-inf", "nan" for the
/// non-finite values). Locale independent.
std::string format_double(double x);

nlohmann::json measure_to_json(const BoundaryMeasure& m);
BoundaryMeasure measure_from_json(const nlohmann::json& j);

nlohmann::json catalog_spec_to_json(const CatalogSpec& spec);
/// A "measure" field may be an inline object or a path, resolved against base_dir.
CatalogSpec catalog_spec_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir = {});

/// {"value":[re,im],"error":e,"sequence":[[y,re,im],...],"converged":b}
nlohmann::json limit_to_json(const ExtrapolatedLimit& lim);

nlohmann::json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);
/// Pretty-printed JSON with a trailing newline.
std::string dump_json(const nlohmann::json& j);

}  // namespace herglotz
