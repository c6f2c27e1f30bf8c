#pragma once

#include <optional>
#include <string>
#include <utility>

#include "mgfil/filtration.hpp"
#include "mgfil/parse.hpp"

namespace mgfil {

// Line-oriented project description:
//   # comment
//   variables X Y
//   ideal I = X^2 + X*Y + Y^2
//   ideal J = [[2,0],[0,2]]
//   filtration powers I J        (or: filtration closure I J)
//   candidate A = [X^2, Y^2; X^2, Y^2]
//   box 8 8
//   offset 3 3
//   margin 4
struct ProjectFile {
  VarTable vars;
  std::vector<std::pair<std::string, MonomialIdeal>> ideals;
  std::optional<Family> family;
  std::vector<std::string> filtration_names;
  std::vector<std::pair<std::string, std::vector<std::vector<Monomial>>>> candidates;
  std::optional<MultiIndex> box;
  std::optional<MultiIndex> offset;
  std::optional<std::int64_t> margin;

  const MonomialIdeal* find_ideal(const std::string& name) const;
  const std::vector<std::vector<Monomial>>* find_candidate(const std::string& name) const;

  bool has_filtration() const { return family.has_value(); }
  FiltrationSpec filtration_spec() const;  // validates the referenced ideals
};

ProjectFile parse_project(const std::string& text);
ProjectFile load_project(const std::string& path);

}  // namespace mgfil
