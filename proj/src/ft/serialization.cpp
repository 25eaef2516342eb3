#include "contavg/ft/serialization.hpp"

#include <vector>

#include "contavg/errors.hpp"
#include "json.hpp"

namespace contavg::ft {

using nlohmann::json;

namespace {

json to_json(const FourierTaylorSeries& s) {
  const auto& shape = s.shape();
  json doc;
  doc["m"] = shape.m;
  doc["K"] = shape.K;
  doc["N"] = shape.N;
  if (shape.n_freq != 1) doc["n_freq"] = shape.n_freq;
  json coeffs = json::array();
  for (int i = 0; i < s.stored_modes(); ++i) {
    auto c = s.mode(i);
    auto k = s.fourier().mode(i);
    for (int a = 0; a < s.monomials(); ++a) {
      if (c[a] == Complex(0.0)) continue;
      auto e = s.taylor().exponent(a);
      json row = json::array();
      if (shape.n_freq == 1) {
        row.push_back(k[0]);
      } else {
        row.push_back(std::vector<int>(k.begin(), k.end()));
      }
      row.push_back(std::vector<int>(e.begin(), e.end()));
      row.push_back(c[a].real());
      row.push_back(c[a].imag());
      coeffs.push_back(std::move(row));
    }
  }
  doc["coeffs"] = std::move(coeffs);
  return doc;
}

FourierTaylorSeries from_json(const json& doc) {
  try {
    SeriesShape shape;
    shape.m = doc.at("m").get<int>();
    shape.K = doc.at("K").get<int>();
    shape.N = doc.at("N").get<int>();
    shape.n_freq = doc.value("n_freq", 1);
    FourierTaylorSeries s(shape);
    for (const auto& row : doc.at("coeffs")) {
      if (!row.is_array() || row.size() != 4) {
        throw ContractViolation("series JSON: coefficient rows are [k, [a], re, im]");
      }
      std::vector<int> k;
      if (row[0].is_array()) {
        k = row[0].get<std::vector<int>>();
      } else {
        k.push_back(row[0].get<int>());
      }
      if (static_cast<int>(k.size()) != shape.n_freq) {
        throw ContractViolation("series JSON: mode has wrong dimension");
      }
      const auto slot = s.fourier().slot(k);
      if (slot.stored < 0 || slot.conjugate) {
        throw ContractViolation("series JSON: only stored modes (k >= 0) may appear");
      }
      const auto a = row[1].get<std::vector<int>>();
      const Complex c(row[2].get<double>(), row[3].get<double>());
      s.set_coeff(k, a, c);
    }
    return s;
  } catch (const json::exception& e) {
    throw ContractViolation(std::string("series JSON: ") + e.what());
  }
}

}  // namespace

std::string serialize(const FourierTaylorSeries& s) { return to_json(s).dump(); }

FourierTaylorSeries parse_series(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ContractViolation(std::string("series JSON: ") + e.what());
  }
  return from_json(doc);
}

std::string serialize(const VectorFieldFT& u) {
  json doc;
  doc["kind"] = u.kind() == PhaseKind::kTorus ? "torus" : "time_periodic";
  json comps = json::array();
  for (const auto& c : u.components()) comps.push_back(to_json(c));
  doc["components"] = std::move(comps);
  return doc.dump();
}

VectorFieldFT parse_field(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ContractViolation(std::string("field JSON: ") + e.what());
  }
  const std::string kind = doc.value("kind", "time_periodic");
  if (kind != "torus" && kind != "time_periodic") {
    throw ContractViolation("field JSON: unknown kind " + kind);
  }
  std::vector<FourierTaylorSeries> comps;
  for (const auto& c : doc.at("components")) comps.push_back(from_json(c));
  return VectorFieldFT(std::move(comps),
                       kind == "torus" ? PhaseKind::kTorus : PhaseKind::kTimePeriodic);
}

}  // namespace contavg::ft
