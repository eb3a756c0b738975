#include "filiform/json_io.hpp"

#include <algorithm>
#include <set>

namespace filiform {

using nlohmann::json;

json law_to_json(const StructureConstants& L) {
  json brackets = json::array();
  for (const auto& [pair, value] : L.entries()) {
    json entry;
    entry["i"] = pair.first;
    entry["j"] = pair.second;
    json coords = json::array();
    for (const auto& c : value)
      coords.push_back(rat_str(c));
    entry["value"] = std::move(coords);
    brackets.push_back(std::move(entry));
  }
  json out;
  out["dim"] = L.dim();
  out["brackets"] = std::move(brackets);
  return out;
}

namespace {

Rational rational_from_json(const json& j) {
  if (j.is_string())
    return rat_parse(j.get<std::string>());
  if (j.is_number_integer())
    return Rational(j.get<long long>());
  throw ParseError("expected a rational string, got " + j.dump());
}

} // namespace

StructureConstants law_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer())
    throw ParseError("law file must be an object with an integer \"dim\"");
  int n = j["dim"].get<int>();
  if (n < 1)
    throw ParseError("law file: dim must be positive");
  StructureConstants L(n);
  if (!j.contains("brackets"))
    return L;
  if (!j["brackets"].is_array())
    throw ParseError("law file: \"brackets\" must be an array");
  std::set<std::pair<int, int>> seen;
  for (const auto& entry : j["brackets"]) {
    if (!entry.is_object() || !entry.contains("i") || !entry.contains("j") ||
        !entry.contains("value"))
      throw ParseError("law file: each bracket needs i, j and value");
    int i = entry["i"].get<int>();
    int jj = entry["j"].get<int>();
    if (i < 1 || jj <= i || jj > n)
      throw ParseError("law file: bracket pair (" + std::to_string(i) + "," +
                       std::to_string(jj) + ") must satisfy 1 <= i < j <= dim");
    if (!seen.insert({i, jj}).second)
      throw ParseError("law file: duplicate bracket pair (" + std::to_string(i) + "," +
                       std::to_string(jj) + ")");
    const auto& value = entry["value"];
    if (!value.is_array() || static_cast<int>(value.size()) != n)
      throw ParseError("law file: bracket value must be an array of length dim");
    QVector v;
    v.reserve(static_cast<std::size_t>(n));
    for (const auto& c : value)
      v.push_back(rational_from_json(c));
    L.set(i, jj, std::move(v));
  }
  return L;
}

StructureConstants parse_law_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what()); // message carries the byte position
  }
  return law_from_json(j);
}

std::string law_to_text(const StructureConstants& L) { return law_to_json(L).dump(2) + "\n"; }

json bipoly_json(const BiPoly& p) {
  json coeffs = json::array();
  for (const auto& [kl, c] : p.coeffs())
    coeffs.push_back(json::array({kl.first, kl.second, c}));
  json out;
  out["coeffs"] = std::move(coeffs);
  return out;
}

json report_json(const Report& r) {
  json strata = json::array();
  for (const auto& s : r.strata) {
    json row;
    row["name"] = s.name;
    row["status"] = s.status;
    row["notes"] = s.notes;
    strata.push_back(std::move(row));
  }
  json out;
  out["case"] = r.case_id;
  out["strata"] = std::move(strata);
  out["summary"] = r.summary;
  out["pass"] = r.pass;
  return out;
}

json constraints_json(const ConstraintSet& cs) {
  json closed = json::array();
  for (const auto& p : cs.closed)
    closed.push_back(p.str());
  json open = json::array();
  for (const auto& tuple : cs.open) {
    json t = json::array();
    for (const auto& p : tuple)
      t.push_back(p.str());
    open.push_back(std::move(t));
  }
  json out;
  out["variables"] = cs.variables;
  out["closed"] = std::move(closed);
  out["open"] = std::move(open);
  return out;
}

namespace {

MPoly entry_from_json(const json& j, const std::string& var_name, bool& symbolic) {
  if (j.is_string() && j.get<std::string>() == "sym") {
    symbolic = true;
    return MPoly::variable(var_name);
  }
  return MPoly(rational_from_json(j));
}

} // namespace

FamilyRequest request_from_json(const json& j) {
  if (!j.is_object())
    throw ParseError("family request must be a JSON object");
  for (const char* key : {"z1", "z2", "n"})
    if (!j.contains(key) || !j[key].is_number_integer())
      throw ParseError(std::string("family request needs integer \"") + key + "\"");
  ParamSpec spec;
  try {
    spec = ParamSpec::make(j["z1"].get<int>(), j["z2"].get<int>(), j["n"].get<int>());
  } catch (const Error& e) {
    throw ParseError(e.what());
  }

  FamilyRequest req;
  req.spec = spec;
  if (j.contains("alpha")) {
    const auto& a = j["alpha"];
    if (!a.is_array() || static_cast<int>(a.size()) != spec.alpha_count())
      throw ParseError("alpha must list " + std::to_string(spec.alpha_count()) + " entries");
    for (int i = 1; i <= spec.alpha_count(); ++i)
      req.values.alpha.push_back(
          entry_from_json(a[static_cast<std::size_t>(i - 1)], alpha_name(i), req.symbolic));
  } else {
    req.symbolic = req.symbolic || spec.alpha_count() > 0;
    for (int i = 1; i <= spec.alpha_count(); ++i)
      req.values.alpha.push_back(MPoly::variable(alpha_name(i)));
  }
  if (j.contains("gamma")) {
    const auto& g = j["gamma"];
    if (!g.is_array() || static_cast<int>(g.size()) != spec.gamma_count())
      throw ParseError("gamma must list " + std::to_string(spec.gamma_count()) + " entries");
    for (int i = 1; i <= spec.gamma_count(); ++i)
      req.values.gamma.push_back(
          entry_from_json(g[static_cast<std::size_t>(i - 1)], gamma_name(i), req.symbolic));
  } else {
    req.symbolic = req.symbolic || spec.gamma_count() > 0;
    for (int i = 1; i <= spec.gamma_count(); ++i)
      req.values.gamma.push_back(MPoly::variable(gamma_name(i)));
  }
  auto indices = spec.beta_indices();
  if (j.contains("beta")) {
    const auto& b = j["beta"];
    if (!b.is_object())
      throw ParseError("beta must be an object keyed by \"k,l\"");
    for (const auto& [key, value] : b.items()) {
      auto comma = key.find(',');
      if (comma == std::string::npos)
        throw ParseError("beta key must look like \"k,l\": " + key);
      int k, l;
      try {
        k = std::stoi(key.substr(0, comma));
        l = std::stoi(key.substr(comma + 1));
      } catch (const std::exception&) {
        throw ParseError("beta key must look like \"k,l\": " + key);
      }
      if (std::find(indices.begin(), indices.end(), std::pair{k, l}) == indices.end())
        throw ParseError("beta index (" + key + ") is outside the declared ranges");
      req.values.beta[{k, l}] = entry_from_json(value, beta_name(k, l), req.symbolic);
    }
    for (const auto& kl : indices)
      if (!req.values.beta.count(kl))
        throw ParseError("missing beta entry " + std::to_string(kl.first) + "," +
                         std::to_string(kl.second));
  } else {
    req.symbolic = req.symbolic || !indices.empty();
    for (const auto& [k, l] : indices)
      req.values.beta[{k, l}] = MPoly::variable(beta_name(k, l));
  }
  return req;
}

ParamValues numeric_values(const SymbolicValues& values) {
  ParamValues out;
  for (const auto& a : values.alpha)
    out.alpha.push_back(a.constant_value());
  for (const auto& g : values.gamma)
    out.gamma.push_back(g.constant_value());
  for (const auto& [kl, b] : values.beta)
    out.beta[kl] = b.constant_value();
  return out;
}

} // namespace filiform
