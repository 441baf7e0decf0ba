#pragma once

#include <json.hpp>

#include "lrcrystal/graded.hpp"
#include "lrcrystal/tableau.hpp"

namespace lrc {

nlohmann::json to_json(const Partition& p);
nlohmann::json to_json(const RationalShape& s);
nlohmann::json to_json(const SkewShape& s);
// {"shape": ..., "rows": [[entries]]}, barred entries as negative integers.
nlohmann::json to_json(const Tableau& t);
nlohmann::json to_json(const GradedPoly& p);

}  // namespace lrc
