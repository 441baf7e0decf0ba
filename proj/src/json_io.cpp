#include "lrcrystal/json_io.hpp"

namespace lrc {

nlohmann::json to_json(const Partition& p) { return nlohmann::json(p.parts); }

nlohmann::json to_json(const RationalShape& s) {
  return nlohmann::json{{"plus", s.plus.parts}, {"minus", s.minus.parts}, {"n", s.n}};
}

nlohmann::json to_json(const SkewShape& s) {
  return nlohmann::json{
      {"outer", s.outer.parts}, {"inner", s.inner.parts}, {"rotated", s.rotated}};
}

nlohmann::json to_json(const Tableau& t) {
  nlohmann::json shape = t.rational ? to_json(*t.rational) : to_json(t.shape);
  return nlohmann::json{{"shape", shape}, {"rows", t.rows}};
}

nlohmann::json to_json(const GradedPoly& p) {
  return nlohmann::json{{"coeffs", p.c}, {"string", p.str()}};
}

}  // namespace lrc
