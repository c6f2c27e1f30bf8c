#pragma once

#include <string>
#include <vector>

#include "mgfil/monomial_ideal.hpp"

namespace mgfil {

// Variable naming for textual forms: either a prefix of X,Y,Z,W (up to four
// variables) or the numbered family X1..Xd.
class VarTable {
 public:
  static VarTable letters(int dim);
  static VarTable numbered(int dim);
  static VarTable from_names(std::vector<std::string> names);
  // Scan a monomial/ideal literal and pick the smallest table covering it.
  static VarTable infer(const std::string& text);

  int dim() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(const std::string& name) const;  // -1 when absent

 private:
  std::vector<std::string> names_;
};

// "X^2*Y" with '^' exponents and '*' between factors; "1" is the identity.
Monomial parse_monomial(const std::string& text, const VarTable& vars, int line = 1,
                        int col0 = 0);

// Generators joined by '+': "X^2 + X*Y + Y^3".  "0" is the zero ideal.
// Also accepts the exponent-array form "[[2,0],[0,2]]".
MonomialIdeal parse_ideal(const std::string& text, const VarTable& vars, int line = 1,
                          int col0 = 0);

std::string monomial_to_string(const Monomial& m, const VarTable& vars);
std::string ideal_to_string(const MonomialIdeal& a, const VarTable& vars);

}  // namespace mgfil
