#include "eqv/document.hpp"

#include <json.hpp>

namespace eqv {

using nlohmann::json;

namespace {

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw Error(Errc::parse_error, std::string("missing key \"") + key + "\"");
  return obj.at(key);
}

std::int64_t as_int(const json& v, const std::string& what) {
  if (!v.is_number_integer()) throw Error(Errc::parse_error, what + " must be an integer");
  return v.get<std::int64_t>();
}

std::vector<std::int64_t> int_list(const json& obj, const char* key) {
  const json& arr = field(obj, key);
  if (!arr.is_array()) throw Error(Errc::parse_error, std::string(key) + " must be an array");
  std::vector<std::int64_t> out;
  for (const auto& v : arr) out.push_back(as_int(v, key));
  return out;
}

std::vector<std::optional<std::int64_t>> optional_list(const json& obj, const char* key) {
  const json& arr = field(obj, key);
  if (!arr.is_array()) throw Error(Errc::parse_error, std::string(key) + " must be an array");
  std::vector<std::optional<std::int64_t>> out;
  for (const auto& v : arr) {
    if (v.is_null()) {
      out.emplace_back();
    } else {
      out.emplace_back(as_int(v, key));
    }
  }
  return out;
}

json optional_json(const std::optional<std::int64_t>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

ActionDocument parse_document(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::parse_error, e.what());
  }
  if (!root.is_object()) throw Error(Errc::parse_error, "document must be a JSON object");

  const std::int64_t p = as_int(field(root, "p"), "p");
  if (p < 2) throw Error(Errc::parse_error, "p must be >= 2");
  std::vector<IsolatedPoint> points;
  const json& pts = field(root, "points");
  if (!pts.is_array()) throw Error(Errc::parse_error, "points must be an array");
  for (const auto& pt : pts) {
    if (!pt.is_array() || pt.size() != 2) throw Error(Errc::parse_error, "each point is a pair [a, b]");
    points.push_back({as_int(pt[0], "point weight"), as_int(pt[1], "point weight")});
  }
  std::vector<FixedSphere> spheres;
  if (root.contains("spheres")) {
    const json& sph = root.at("spheres");
    if (!sph.is_array()) throw Error(Errc::parse_error, "spheres must be an array");
    for (const auto& sp : sph) spheres.push_back({as_int(field(sp, "c"), "c"), as_int(field(sp, "alpha"), "alpha")});
  }

  ActionDocument doc;
  doc.action = make_action(p, points, spheres, as_int(field(root, "signature"), "signature"),
                           as_int(field(root, "euler"), "euler"), as_int(field(root, "b2"), "b2"));

  if (root.contains("line") && !root.at("line").is_null()) {
    const json& line = root.at("line");
    PartialLineIsotropy iso;
    iso.lambda_points = optional_list(line, "lambda_points");
    iso.lambda_spheres = optional_list(line, "lambda_spheres");
    iso.m_spheres = optional_list(line, "m");
    if (line.contains("c1_squared") && !line.at("c1_squared").is_null()) {
      iso.c1_squared = as_int(line.at("c1_squared"), "c1_squared");
    }
    doc.line = iso;
  }
  if (root.contains("su2") && !root.at("su2").is_null()) {
    const json& su2 = root.at("su2");
    Su2Isotropy iso;
    std::string conv = "bundle";
    if (su2.contains("convention")) {
      if (!su2.at("convention").is_string()) throw Error(Errc::parse_error, "convention must be a string");
      conv = su2.at("convention").get<std::string>();
    }
    if (conv == "bundle") {
      iso.convention = WeightConvention::bundle;
    } else if (conv == "adjoint") {
      iso.convention = WeightConvention::adjoint;
    } else {
      throw Error(Errc::parse_error, "convention must be \"bundle\" or \"adjoint\"");
    }
    iso.ell_points = int_list(su2, "ell_points");
    iso.ell_spheres = int_list(su2, "ell_spheres");
    iso.m_spheres = int_list(su2, "m");
    iso.c2 = as_int(field(su2, "c2"), "c2");
    doc.su2 = iso;
  }
  return doc;
}

std::string serialize_document(const ActionDocument& doc) {
  const GroupAction& a = doc.action;
  json root;
  root["p"] = a.p;
  root["signature"] = a.signature;
  root["euler"] = a.euler;
  root["b2"] = a.b2;
  root["points"] = json::array();
  for (const auto& pt : a.points) {
    root["points"].push_back({display_residue(pt.a, a.p), display_residue(pt.b, a.p)});
  }
  root["spheres"] = json::array();
  for (const auto& sp : a.spheres) root["spheres"].push_back({{"c", display_residue(sp.c, a.p)}, {"alpha", sp.alpha}});
  if (doc.line) {
    json line;
    line["lambda_points"] = json::array();
    for (const auto& v : doc.line->lambda_points) line["lambda_points"].push_back(optional_json(v));
    line["lambda_spheres"] = json::array();
    for (const auto& v : doc.line->lambda_spheres) line["lambda_spheres"].push_back(optional_json(v));
    line["m"] = json::array();
    for (const auto& v : doc.line->m_spheres) line["m"].push_back(optional_json(v));
    line["c1_squared"] = optional_json(doc.line->c1_squared);
    root["line"] = line;
  }
  if (doc.su2) {
    json su2;
    su2["convention"] = doc.su2->convention == WeightConvention::adjoint ? "adjoint" : "bundle";
    su2["ell_points"] = doc.su2->ell_points;
    su2["ell_spheres"] = doc.su2->ell_spheres;
    su2["m"] = doc.su2->m_spheres;
    su2["c2"] = doc.su2->c2;
    root["su2"] = su2;
  }
  return root.dump(2);
}

LineIsotropy complete_line(const PartialLineIsotropy& partial) {
  LineIsotropy out;
  out.c1_squared = partial.c1_squared;
  auto take = [](const std::vector<std::optional<std::int64_t>>& in, std::vector<std::int64_t>& dst, const char* what) {
    for (std::size_t i = 0; i < in.size(); ++i) {
      if (!in[i]) throw Error(Errc::invalid_argument, std::string(what) + "[" + std::to_string(i) + "] is unspecified");
      dst.push_back(*in[i]);
    }
  };
  take(partial.lambda_points, out.lambda_points, "lambda");
  take(partial.lambda_spheres, out.lambda_spheres, "lambda_F");
  take(partial.m_spheres, out.m_spheres, "m");
  return out;
}

}  // namespace eqv
