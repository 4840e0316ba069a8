#include "herglotz/serialization.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace herglotz {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) x = 0.0;  // drop the sign of zero
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

nlohmann::json measure_to_json(const BoundaryMeasure& m) {
  nlohmann::json j;
  j["picture"] = m.picture() == MeasurePicture::line ? "line" : "circle";
  j["atoms"] = nlohmann::json::array();
  for (const auto& a : m.atoms())
    j["atoms"].push_back({{"loc", real_to_json(a.loc)}, {"mass", complex_to_json(a.mass)}});
  j["densities"] = nlohmann::json::array();
  for (const auto& d : m.densities()) {
    if (d.descriptor.is_null()) throw DomainError("density part without a serializable descriptor");
    nlohmann::json dj = d.descriptor;
    dj["support"] = {real_to_json(d.lo), real_to_json(d.hi)};
    j["densities"].push_back(dj);
  }
  if (m.allow_overlap) j["allow_overlap"] = true;
  return j;
}

BoundaryMeasure measure_from_json(const nlohmann::json& j) {
  const std::string picture = j.value("picture", std::string("line"));
  if (picture != "line" && picture != "circle") throw DomainError("measure picture must be line or circle");
  BoundaryMeasure m(picture == "line" ? MeasurePicture::line : MeasurePicture::circle);
  m.allow_overlap = j.value("allow_overlap", false);
  if (j.contains("atoms"))
    for (const auto& a : j.at("atoms")) m.add_atom(json_real(a.at("loc")), json_complex(a.at("mass")));
  if (j.contains("densities")) {
    for (const auto& dj : j.at("densities")) {
      DensityPart part = density_from_json(dj);
      // An explicit support narrows the part (tables and closed forms alike).
      if (dj.contains("support") && dj.at("kind") != "pushforward") {
        part.lo = json_real(dj.at("support").at(0));
        part.hi = json_real(dj.at("support").at(1));
      }
      m.add_density(std::move(part));
    }
  }
  m.validate();
  return m;
}

nlohmann::json catalog_spec_to_json(const CatalogSpec& spec) {
  nlohmann::json j;
  j["kind"] = to_string(spec.kind);
  switch (spec.kind) {
    case CatalogKind::power:
    case CatalogKind::power_log:
    case CatalogKind::power_over_log:
      j["p"] = complex_to_json(spec.p);
      break;
    case CatalogKind::tan_sigma_log:
    case CatalogKind::cot_sigma_log:
      j["sigma"] = spec.sigma;
      break;
    case CatalogKind::rational: {
      j["a"] = complex_to_json(spec.a);
      j["b"] = complex_to_json(spec.b);
      j["poles"] = spec.poles;
      nlohmann::json cs = nlohmann::json::array();
      for (const auto& c : spec.coeffs) cs.push_back(complex_to_json(c));
      j["coeffs"] = cs;
      break;
    }
    case CatalogKind::cauchy:
    case CatalogKind::disc_herglotz:
      j["measure"] = spec.measure ? measure_to_json(*spec.measure) : nlohmann::json();
      j["constant"] = complex_to_json(spec.constant);
      break;
    default:
      break;
  }
  return j;
}

CatalogSpec catalog_spec_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir) {
  CatalogSpec spec;
  spec.kind = catalog_kind_from_string(j.at("kind").get<std::string>());
  if (j.contains("p")) spec.p = json_complex(j.at("p"));
  if (j.contains("sigma")) spec.sigma = j.at("sigma").get<double>();
  if (j.contains("a")) spec.a = json_complex(j.at("a"));
  if (j.contains("b")) spec.b = json_complex(j.at("b"));
  if (j.contains("poles")) spec.poles = j.at("poles").get<std::vector<double>>();
  if (j.contains("coeffs"))
    for (const auto& c : j.at("coeffs")) spec.coeffs.push_back(json_complex(c));
  if (j.contains("constant")) spec.constant = json_complex(j.at("constant"));
  if (j.contains("measure")) {
    const auto& mj = j.at("measure");
    if (mj.is_string()) {
      std::filesystem::path path = mj.get<std::string>();
      if (path.is_relative()) path = base_dir / path;
      spec.measure = std::make_shared<const BoundaryMeasure>(measure_from_json(read_json_file(path)));
    } else {
      spec.measure = std::make_shared<const BoundaryMeasure>(measure_from_json(mj));
    }
  }
  spec.validate();
  return spec;
}

nlohmann::json limit_to_json(const ExtrapolatedLimit& lim) {
  nlohmann::json seq = nlohmann::json::array();
  for (const auto& [y, v] : lim.sequence) seq.push_back({y, v.real(), v.imag()});
  return {{"value", complex_to_json(lim.value)},
          {"error", std::isfinite(lim.error_estimate) ? nlohmann::json(lim.error_estimate) : nlohmann::json("inf")},
          {"sequence", seq},
          {"converged", lim.converged}};
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("malformed JSON in " + path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write " + path.string());
  out << text;
}

std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace herglotz
