#include "subres/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace subres {

using nlohmann::json;

json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
  return json(v.get_str());
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Int(std::to_string(j.get<std::uint64_t>()));
    return Int(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw std::runtime_error("coefficient string is not a decimal integer: " + j.dump());
    }
  }
  throw std::runtime_error("coefficient must be an integer or decimal string: " + j.dump());
}

json poly_to_json(const Poly& p) {
  json a = json::array();
  for (const Int& c : p.coeffs()) a.push_back(int_to_json(c));
  return a;
}

Poly poly_from_json(const json& j) {
  if (!j.is_array()) throw std::runtime_error("polynomial must be a coefficient array");
  std::vector<Int> c;
  c.reserve(j.size());
  for (const auto& e : j) c.push_back(int_from_json(e));
  return Poly(std::move(c));
}

Instance instance_from_json(const json& j) {
  if (!j.is_object() || !j.contains("polys"))
    throw std::runtime_error("instance needs a \"polys\" field");
  const json& ps = j.at("polys");
  if (!ps.is_array() || ps.empty())
    throw std::runtime_error("\"polys\" must be a nonempty array");
  Instance inst;
  inst.polys.reserve(ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i) {
    Poly p = poly_from_json(ps[i]);
    if (p.is_zero())
      throw std::runtime_error("polys[" + std::to_string(i) + "] is the zero polynomial");
    inst.polys.push_back(std::move(p));
  }
  return inst;
}

json instance_to_json(const Instance& inst) {
  json ps = json::array();
  for (const Poly& p : inst.polys) ps.push_back(poly_to_json(p));
  return json{{"polys", ps}};
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::runtime_error("parse error in " + path + ": " + e.what());
  }
  return instance_from_json(j);
}

}  // namespace subres
