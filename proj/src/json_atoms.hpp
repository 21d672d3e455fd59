#pragma once

#include "json.hpp"
#include "ookb/atom.hpp"

namespace ookb {

inline nlohmann::json atom_json(const Atom& atom) {
  nlohmann::json args = nlohmann::json::array();
  for (const auto& a : atom.args) args.push_back(arg_str(a));
  return {{"predicate", predicate_name(atom.pred)}, {"args", args}, {"neg", atom.neg}};
}

}  // namespace ookb
