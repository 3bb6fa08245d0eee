#pragma once

#include <string>

#include <json.hpp>

#include "kkpath/kk.hpp"
#include "kkpath/tableaux.hpp"

namespace kkpath {

using nlohmann::json;

json cartan_to_json(const CartanMatrix& a);
CartanMatrix cartan_from_json(const json& j);

json weight_to_json(const IntVec& v);
IntVec weight_from_json(const json& j);

// Path as a list of vertex coordinate lists, rationals rendered "p/q".
json path_to_json(const PLPath& p);
PLPath path_from_json(const json& j);

json decomposition_to_json(const Decomposition& d);
Decomposition decomposition_from_json(const json& j);

json character_to_json(const FormalCharacter& ch);

// {"cartan": [[...]], "lambda": [...], "w": "1,2,1", "mu": [...]}
json kk_index_to_json(const WeylGroup& g, const KKIndex& idx);

struct LoadedKKIndex {
  std::shared_ptr<WeylGroup> group;
  KKIndex index;
};
LoadedKKIndex kk_index_from_json(const json& j,
                                 std::size_t orbit_cap = WeylGroup::kDefaultOrbitCap);

json ssyt_to_json(const SSYT& s);
SSYT ssyt_from_json(const json& j);

// Concatenation: per-piece vertex lists plus a "shapes" array.
json concat_to_json(const ConcatPath& p);
ConcatPath concat_from_json(const WeylGroup& g, const json& j);

}  // namespace kkpath
