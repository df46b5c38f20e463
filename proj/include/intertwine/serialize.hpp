// JSON schema for root systems and Weyl elements. Rational entries are
// serialized as exact "p/q" strings so round trips lose nothing.

#pragma once

#include <sstream>
#include <string>

#include "jsonw.hpp"
#include "rootsys.hpp"

namespace itw {

inline std::string rat_to_string(const Rat& r) {
  std::ostringstream os;
  os << r.numerator() << '/' << r.denominator();
  return os.str();
}

inline Rat rat_from_string(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(std::stoll(s));
  return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

inline jsonw::Value rat_vec_json(const RatVec& v) {
  jsonw::Array a;
  for (const auto& r : v) a.emplace_back(rat_to_string(r));
  return a;
}

inline jsonw::Value rat_mat_json(const RatMat& m) {
  jsonw::Array rows;
  for (const auto& row : m) rows.push_back(rat_vec_json(row));
  return rows;
}

inline jsonw::Value root_system_json(const RootSystem& rs) {
  jsonw::Object o;
  o["type"] = std::string(1, rs.type);
  o["rank"] = rs.rank;
  o["ambient_dim"] = rs.ambient_dim;
  jsonw::Array roots;
  for (const auto& r : rs.roots) roots.push_back(rat_vec_json(r));
  o["roots"] = std::move(roots);
  jsonw::Array mult;
  for (const auto& [p, q] : rs.mult) {
    jsonw::Object m;
    m["p"] = p;
    m["q"] = q;
    mult.push_back(std::move(m));
  }
  o["multiplicities"] = std::move(mult);
  jsonw::Array simple;
  for (int s : rs.simple) simple.emplace_back(s);
  o["simple_roots"] = std::move(simple);
  jsonw::Array positive;
  for (int p : rs.positive) positive.emplace_back(p);
  o["positive_roots"] = std::move(positive);
  o["gram"] = rat_mat_json(rs.gram);
  return o;
}

inline jsonw::Value weyl_element_json(const WeylElement& w) {
  jsonw::Object o;
  jsonw::Array word;
  for (int s : w.word) word.emplace_back(s);
  o["word"] = std::move(word);
  o["length"] = w.length();
  o["matrix"] = rat_mat_json(w.matrix);
  return o;
}

}  // namespace itw
