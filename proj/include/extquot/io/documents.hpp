#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "extquot/bernstein/cases.hpp"
#include "extquot/grid_oracle.hpp"
#include "extquot/poincare.hpp"

// JSON setup and report documents, schema "extquot/1".
namespace extquot::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "extquot/1";

/// Malformed input; line and column are 1-based (0 when unknown).
class ParseError : public Error {
public:
  ParseError(const std::string& msg, std::size_t line = 0, std::size_t column = 0)
      : Error(line ? "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg : msg),
        line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_, column_;
};

struct CaseSpec {
  bernstein::CaseKind kind = bernstein::CaseKind::GLn;
  int m = 1;
  int r = 1;
  double q = bernstein::kDefaultQ;

  friend bool operator==(const CaseSpec&, const CaseSpec&) = default;
};

struct SetupDocument {
  std::size_t rank = 0;
  std::vector<IntMatrix> generators;
  std::string label;
  std::optional<CaseSpec> case_spec;
  std::size_t bound = kDefaultClosureBound;

  friend bool operator==(const SetupDocument&, const SetupDocument&) = default;
};

inline bernstein::CaseKind parse_case_kind(const std::string& s) {
  if (s == "gl") return bernstein::CaseKind::GLn;
  if (s == "sl2") return bernstein::CaseKind::SL2;
  if (s == "g2") return bernstein::CaseKind::G2Ramified;
  throw ParseError("unknown case kind '" + s + "' (expected gl, sl2 or g2)");
}

inline Json to_json(const CaseSpec& c) {
  Json j;
  j["kind"] = bernstein::to_string(c.kind);
  if (c.kind == bernstein::CaseKind::GLn) {
    j["m"] = c.m;
    j["r"] = c.r;
  }
  j["q"] = c.q;
  return j;
}

inline Json matrix_json(const IntMatrix& m) { return Json(m.to_rows()); }

inline Json to_json(const SetupDocument& d) {
  Json j;
  j["schema"] = kSchema;
  j["label"] = d.label;
  j["rank"] = d.rank;
  if (d.case_spec) j["case"] = to_json(*d.case_spec);
  else {
    j["generators"] = Json::array();
    for (const auto& g : d.generators) j["generators"].push_back(matrix_json(g));
  }
  if (d.bound != kDefaultClosureBound) j["bound"] = d.bound;
  return j;
}

namespace detail {

inline std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  // nlohmann reports the position one past the offending character
  return {line, col > 1 ? col - 1 : col};
}

template <class T>
T get_field(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

inline CaseSpec parse_case(const Json& c) {
  if (!c.is_object()) throw ParseError("'case' must be an object");
  CaseSpec cs;
  cs.kind = parse_case_kind(get_field<std::string>(c, "kind"));
  if (c.contains("q")) cs.q = get_field<double>(c, "q");
  if (cs.kind == bernstein::CaseKind::GLn) {
    cs.m = c.contains("m") ? get_field<int>(c, "m") : 1;
    cs.r = get_field<int>(c, "r");
    if (cs.m < 1 || cs.r < 1) throw ParseError("gl case needs m >= 1 and r >= 1");
  }
  if (!(cs.q > 1.0)) throw ParseError("q must be greater than 1");
  return cs;
}

} // namespace detail

inline std::size_t case_rank(const CaseSpec& c) {
  switch (c.kind) {
    case bernstein::CaseKind::GLn: return static_cast<std::size_t>(c.r);
    case bernstein::CaseKind::SL2: return 1;
    case bernstein::CaseKind::G2Ramified: return 2;
  }
  return 0;
}

inline SetupDocument setup_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("setup document must be a JSON object");
  if (j.contains("schema") && j.at("schema") != kSchema)
    throw ParseError("unsupported schema " + j.at("schema").dump() + ", expected \"extquot/1\"");
  SetupDocument d;
  d.label = j.contains("label") ? detail::get_field<std::string>(j, "label") : std::string("setup");
  if (j.contains("bound")) d.bound = detail::get_field<std::size_t>(j, "bound");
  if (j.contains("case")) {
    d.case_spec = detail::parse_case(j.at("case"));
    d.rank = case_rank(*d.case_spec);
    if (j.contains("rank") && detail::get_field<std::size_t>(j, "rank") != d.rank)
      throw ParseError("'rank' does not match the case");
    return d;
  }
  if (!j.contains("generators")) throw ParseError("setup needs either 'generators' or 'case'");
  d.rank = detail::get_field<std::size_t>(j, "rank");
  if (d.rank == 0) throw ParseError("rank must be positive");
  auto gens = detail::get_field<std::vector<std::vector<std::vector<checked::Int>>>>(j, "generators");
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (gens[g].size() != d.rank) throw ParseError("generator " + std::to_string(g) + " is not " + std::to_string(d.rank) + "x" + std::to_string(d.rank));
    for (const auto& row : gens[g])
      if (row.size() != d.rank) throw ParseError("generator " + std::to_string(g) + " has a row of the wrong length");
    d.generators.push_back(IntMatrix::from_rows(gens[g]));
  }
  return d;
}

inline SetupDocument parse_setup(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = detail::line_column(text, e.byte);
    throw ParseError("invalid JSON", line, col);
  }
  return setup_from_json(j);
}

inline bernstein::InertialCase build_case(const CaseSpec& c) {
  switch (c.kind) {
    case bernstein::CaseKind::GLn: return bernstein::make_gl_case(c.m, c.r, c.q);
    case bernstein::CaseKind::SL2: return bernstein::make_sl2_case(c.q);
    case bernstein::CaseKind::G2Ramified: return bernstein::make_g2_case(c.q);
  }
  throw InvalidArgument("unknown case");
}

/// Catalog for a document; cases come with their cocharacters and component names attached.
inline ComponentCatalog build_catalog(const SetupDocument& d) {
  if (d.case_spec) {
    auto cat = build_case(*d.case_spec).catalog;
    cat.setup.label = d.label;
    return cat;
  }
  std::vector<LatticeAutomorphism> gens;
  for (const auto& m : d.generators) gens.emplace_back(m);
  return decompose(QuotientSetup::from_generators(std::move(gens), d.rank, d.label, d.bound));
}

inline QuotientSetup build_setup(const SetupDocument& d) { return build_catalog(d).setup; }

inline Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

inline Json point_json(const TorusPoint& x) {
  Json j = Json::array();
  for (auto c : x.coords()) j.push_back(complex_json(c));
  return j;
}

inline Json poincare_json(const Polynomial& p) {
  Json j;
  j["polynomial"] = p.str();
  j["coefficients"] = Json::array();
  for (const auto& c : p.coefficients()) j["coefficients"].push_back(c.str());
  j["even"] = p.even_sum().str();
  j["odd"] = p.odd_sum().str();
  return j;
}

inline Json catalog_json(const ComponentCatalog& cat, const PoincarePolynomial& pp) {
  Json j;
  j["group_order"] = cat.setup.group.order();
  j["rank"] = cat.setup.rank;
  j["class_count"] = cat.classes.size();
  j["ordinary_component"] = cat.ordinary_component_index;
  j["components"] = Json::array();
  for (std::size_t i = 0; i < cat.components.size(); ++i) {
    const auto& c = cat.components[i];
    const auto& cd = cat.class_of(c);
    Json cj;
    cj["id"] = i;
    cj["name"] = c.name;
    cj["class_representative"] = matrix_json(c.class_rep.matrix());
    cj["class_size"] = cd.cls.size();
    cj["centralizer_order"] = cd.centralizer.order();
    cj["dimension"] = c.dimension;
    cj["torsion_orders"] = cd.fixed.torsion_orders();
    cj["component_orbit"] = c.component_orbit;
    cj["base_point"] = point_json(cd.fixed.base_point(c.component_orbit.front()));
    cj["cocharacter"] = c.cocharacter ? Json(c.cocharacter->exponents) : Json(nullptr);
    cj["poincare"] = poincare_json(pp.per_component[i]);
    j["components"].push_back(std::move(cj));
  }
  return j;
}

inline Json decompose_report(const SetupDocument& d, const ComponentCatalog& cat) {
  auto pp = poincare_polynomial(cat);
  Json j;
  j["schema"] = kSchema;
  j["command"] = "decompose";
  j["setup"] = to_json(d);
  j["catalog"] = catalog_json(cat, pp);
  j["poincare"] = poincare_json(pp.total);
  return j;
}

inline Json family_record_json(const bernstein::FamilyReport& r) {
  Json j;
  j["t"] = complex_json(r.t);
  j["cocharacter_parameter"] = complex_json(r.cocharacter_parameter);
  if (!r.family_points.empty()) {
    j["family_points"] = Json::array();
    for (auto z : r.family_points) j["family_points"].push_back(complex_json(z));
  }
  j["all_flags"] = r.all_ok();
  j["samples"] = Json::array();
  for (const auto& s : r.samples) {
    Json sj;
    sj["component"] = s.component_name;
    sj["source"] = point_json(s.source);
    sj["image"] = point_json(s.image.representative);
    sj["flag"] = s.equation_ok;
    j["samples"].push_back(std::move(sj));
  }
  return j;
}

inline Json census_json(const GridCensus& oracle, const ComponentGridCount& derived, bool pass) {
  Json j;
  j["grid"] = oracle.N;
  j["grid_points"] = oracle.grid_points;
  j["oracle_total"] = oracle.total;
  j["catalog_total"] = derived.total;
  j["oracle_per_class"] = oracle.per_class;
  j["catalog_per_class"] = derived.per_class;
  j["catalog_per_component"] = derived.per_component;
  Json hist = Json::object();
  for (auto [k, v] : oracle.stabilizer_histogram) hist[std::to_string(k)] = v;
  j["stabilizer_histogram"] = hist;
  j["pass"] = pass;
  return j;
}

} // namespace extquot::io
