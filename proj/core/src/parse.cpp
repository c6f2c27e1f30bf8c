#include "mgfil/parse.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace mgfil {

namespace {

const char* kLetters[] = {"X", "Y", "Z", "W"};

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;
  int line;
  int col0;  // column offset of s within its source line

  int col() const { return col0 + static_cast<int>(pos) + 1; }
  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }
  void skip_ws() {
    while (!done() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, col()); }
};

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

std::string read_ident(Cursor& c) {
  std::size_t start = c.pos;
  while (!c.done() && ident_char(c.peek())) ++c.pos;
  return c.s.substr(start, c.pos - start);
}

std::int64_t read_int(Cursor& c) {
  c.skip_ws();
  std::size_t start = c.pos;
  if (c.peek() == '-') ++c.pos;
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
  if (c.pos == start || (c.s[start] == '-' && c.pos == start + 1))
    c.fail("expected an integer");
  return std::strtoll(c.s.substr(start, c.pos - start).c_str(), nullptr, 10);
}

Monomial parse_monomial_at(Cursor& c, const VarTable& vars) {
  MultiIndex e = MultiIndex::zero(vars.dim());
  bool first = true;
  while (true) {
    c.skip_ws();
    if (first && c.peek() == '1') {
      ++c.pos;
      break;
    }
    if (!std::isalpha(static_cast<unsigned char>(c.peek())))
      c.fail("expected a variable name");
    const int col_here = c.col();
    const std::string name = read_ident(c);
    const int axis = vars.index_of(name);
    if (axis < 0)
      throw ParseError("unknown variable '" + name + "'", c.line, col_here);
    std::int64_t k = 1;
    if (c.peek() == '^') {
      ++c.pos;
      k = read_int(c);
      if (k < 0) c.fail("negative exponent");
    }
    e[axis] = checked_add(e[axis], k);
    c.skip_ws();
    if (c.peek() == '*') {
      ++c.pos;
      first = false;
      continue;
    }
    break;
  }
  return Monomial(e);
}

MonomialIdeal parse_ideal_arrays(Cursor& c, const VarTable& vars) {
  c.skip_ws();
  if (c.peek() != '[') c.fail("expected '['");
  ++c.pos;
  std::vector<Monomial> gens;
  c.skip_ws();
  if (c.peek() == ']') {
    ++c.pos;
    return MonomialIdeal::zero(vars.dim());
  }
  while (true) {
    c.skip_ws();
    if (c.peek() != '[') c.fail("expected '[' opening an exponent vector");
    ++c.pos;
    MultiIndex e = MultiIndex::zero(vars.dim());
    for (int i = 0; i < vars.dim(); ++i) {
      if (i) {
        c.skip_ws();
        if (c.peek() != ',') c.fail("expected ',' in exponent vector");
        ++c.pos;
      }
      const std::int64_t v = read_int(c);
      if (v < 0) c.fail("negative exponent");
      e[i] = v;
    }
    c.skip_ws();
    if (c.peek() != ']') c.fail("expected ']' closing an exponent vector of length " +
                                std::to_string(vars.dim()));
    ++c.pos;
    gens.emplace_back(e);
    c.skip_ws();
    if (c.peek() == ',') {
      ++c.pos;
      continue;
    }
    if (c.peek() == ']') {
      ++c.pos;
      break;
    }
    c.fail("expected ',' or ']' in generator list");
  }
  return MonomialIdeal::from_generators(vars.dim(), std::move(gens));
}

}  // namespace

VarTable VarTable::letters(int dim) {
  if (dim < 1 || dim > 4) throw ValidationError("letter variables cover one to four dimensions");
  std::vector<std::string> names;
  for (int i = 0; i < dim; ++i) names.emplace_back(kLetters[i]);
  return from_names(std::move(names));
}

VarTable VarTable::numbered(int dim) {
  if (dim < 1) throw ValidationError("need at least one variable");
  std::vector<std::string> names;
  for (int i = 0; i < dim; ++i) names.push_back("X" + std::to_string(i + 1));
  return from_names(std::move(names));
}

VarTable VarTable::from_names(std::vector<std::string> names) {
  if (names.empty()) throw ValidationError("need at least one variable");
  bool letter_style = names.size() <= 4;
  for (std::size_t i = 0; i < names.size() && letter_style; ++i)
    letter_style = names[i] == kLetters[i];
  if (!letter_style) {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] != "X" + std::to_string(i + 1))
        throw ValidationError("variables must be a prefix of X,Y,Z,W or the family X1..Xd");
  }
  VarTable t;
  t.names_ = std::move(names);
  return t;
}

VarTable VarTable::infer(const std::string& text) {
  bool saw_letter = false, saw_numbered = false;
  int max_letter = 0, max_numbered = 0;
  for (std::size_t i = 0; i < text.size();) {
    if (!std::isalpha(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && ident_char(text[j])) ++j;
    const std::string name = text.substr(i, j - i);
    i = j;
    bool matched = false;
    for (int k = 0; k < 4; ++k)
      if (name == kLetters[k]) {
        saw_letter = true;
        max_letter = std::max(max_letter, k + 1);
        matched = true;
      }
    if (!matched && name.size() > 1 && name[0] == 'X') {
      bool digits = std::all_of(name.begin() + 1, name.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c)) != 0;
      });
      if (digits) {
        saw_numbered = true;
        max_numbered = std::max(max_numbered, std::atoi(name.c_str() + 1));
        matched = true;
      }
    }
    if (!matched) throw ParseError("unknown variable '" + name + "'", 1, static_cast<int>(i));
  }
  if (saw_letter && saw_numbered)
    throw ParseError("cannot mix X,Y,Z,W with numbered variables", 1, 1);
  if (saw_numbered) return numbered(max_numbered);
  if (saw_letter) return letters(max_letter);
  return letters(1);  // bare "1" or "0" literals
}

int VarTable::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

Monomial parse_monomial(const std::string& text, const VarTable& vars, int line, int col0) {
  Cursor c{text, 0, line, col0};
  Monomial m = parse_monomial_at(c, vars);
  c.skip_ws();
  if (!c.done()) c.fail("trailing input after monomial");
  return m;
}

MonomialIdeal parse_ideal(const std::string& text, const VarTable& vars, int line, int col0) {
  Cursor c{text, 0, line, col0};
  c.skip_ws();
  if (c.peek() == '[') {
    MonomialIdeal a = parse_ideal_arrays(c, vars);
    c.skip_ws();
    if (!c.done()) c.fail("trailing input after generator list");
    return a;
  }
  if (c.peek() == '0') {
    ++c.pos;
    c.skip_ws();
    if (!c.done()) c.fail("trailing input after zero ideal");
    return MonomialIdeal::zero(vars.dim());
  }
  std::vector<Monomial> gens;
  while (true) {
    gens.push_back(parse_monomial_at(c, vars));
    c.skip_ws();
    if (c.peek() == '+') {
      ++c.pos;
      continue;
    }
    break;
  }
  if (!c.done()) c.fail("trailing input after ideal");
  return MonomialIdeal::from_generators(vars.dim(), std::move(gens));
}

std::string monomial_to_string(const Monomial& m, const VarTable& vars) {
  if (m.dim() != vars.dim()) throw ArityError("monomial arity differs from variable table");
  std::string out;
  for (int i = 0; i < m.dim(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars.name(i);
    if (m[i] != 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string ideal_to_string(const MonomialIdeal& a, const VarTable& vars) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const Monomial& g : a.generators()) {
    if (!out.empty()) out += " + ";
    out += monomial_to_string(g, vars);
  }
  return out;
}

}  // namespace mgfil
