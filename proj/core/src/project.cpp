#include "mgfil/project.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace mgfil {

namespace {

struct Token {
  std::string text;
  int col;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t') {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '#') ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

std::int64_t parse_int_token(const Token& t, int line) {
  std::size_t pos = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(t.text, &pos);
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + t.text + "'", line, t.col);
  }
  if (pos != t.text.size())
    throw ParseError("expected an integer, got '" + t.text + "'", line, t.col);
  return v;
}

// Remainder of the raw line from a token onward, for sub-parsers that track
// their own columns.
std::string rest_from(const std::string& line, int col) {
  return line.substr(static_cast<std::size_t>(col - 1));
}

std::vector<std::vector<Monomial>> parse_candidate_rows(const std::string& rhs,
                                                        const VarTable& vars, int line,
                                                        int col0) {
  std::size_t open = rhs.find('[');
  std::size_t close = rhs.rfind(']');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw ParseError("candidate matrix must be bracketed", line, col0 + 1);
  std::vector<std::vector<Monomial>> rows;
  std::size_t start = open + 1;
  while (start <= close) {
    std::size_t end = rhs.find(';', start);
    if (end == std::string::npos || end > close) end = close;
    std::vector<Monomial> row;
    std::size_t cell = start;
    while (cell < end) {
      std::size_t comma = rhs.find(',', cell);
      if (comma == std::string::npos || comma > end) comma = end;
      const std::string text = rhs.substr(cell, comma - cell);
      if (text.find_first_not_of(" \t") == std::string::npos)
        throw ParseError("empty candidate entry", line, col0 + static_cast<int>(cell) + 1);
      row.push_back(parse_monomial(text, vars, line, col0 + static_cast<int>(cell)));
      cell = comma + 1;
    }
    if (row.empty())
      throw ParseError("empty candidate row", line, col0 + static_cast<int>(start) + 1);
    rows.push_back(std::move(row));
    start = end + 1;
  }
  if (rows.empty()) throw ParseError("empty candidate matrix", line, col0 + 1);
  return rows;
}

}  // namespace

const MonomialIdeal* ProjectFile::find_ideal(const std::string& name) const {
  for (const auto& [n, a] : ideals)
    if (n == name) return &a;
  return nullptr;
}

const std::vector<std::vector<Monomial>>* ProjectFile::find_candidate(
    const std::string& name) const {
  for (const auto& [n, c] : candidates)
    if (n == name) return &c;
  return nullptr;
}

FiltrationSpec ProjectFile::filtration_spec() const {
  if (!family) throw ValidationError("project declares no filtration");
  FiltrationSpec spec;
  spec.family = *family;
  for (const std::string& name : filtration_names) {
    const MonomialIdeal* a = find_ideal(name);
    if (!a) throw ValidationError("filtration references unknown ideal '" + name + "'");
    spec.ideals.push_back(*a);
  }
  spec.validate();
  return spec;
}

ProjectFile parse_project(const std::string& text) {
  ProjectFile p;
  bool have_vars = false;
  int box_line = 0, offset_line = 0;
  std::vector<std::int64_t> box_raw, offset_raw;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::vector<Token> tok = tokenize(line);
    if (tok.empty()) continue;
    const std::string& head = tok[0].text;

    if (head == "variables") {
      if (have_vars) throw ParseError("variables declared twice", lineno, tok[0].col);
      if (tok.size() < 2) throw ParseError("variables needs at least one name", lineno, tok[0].col);
      std::vector<std::string> names;
      for (std::size_t i = 1; i < tok.size(); ++i) names.push_back(tok[i].text);
      try {
        p.vars = VarTable::from_names(std::move(names));
      } catch (const ValidationError& e) {
        throw ParseError(e.what(), lineno, tok[1].col);
      }
      have_vars = true;
    } else if (head == "ideal") {
      if (!have_vars) throw ParseError("variables must be declared first", lineno, tok[0].col);
      if (tok.size() < 3 || tok[2].text != "=")
        throw ParseError("expected: ideal NAME = generators", lineno, tok[0].col);
      const std::string& name = tok[1].text;
      if (p.find_ideal(name)) throw ParseError("ideal '" + name + "' declared twice", lineno, tok[1].col);
      const int rhs_start = tok[2].col;  // 0-based index just past '='
      const std::string rhs = rest_from(line, rhs_start + 1);
      p.ideals.emplace_back(name, parse_ideal(rhs, p.vars, lineno, rhs_start));
    } else if (head == "filtration") {
      if (p.family) throw ParseError("filtration declared twice", lineno, tok[0].col);
      if (tok.size() < 3)
        throw ParseError("expected: filtration powers|closure IDEAL...", lineno, tok[0].col);
      if (tok[1].text == "powers") {
        p.family = Family::Powers;
      } else if (tok[1].text == "closure") {
        p.family = Family::ClosureOfPowers;
      } else {
        throw ParseError("unknown family '" + tok[1].text + "'", lineno, tok[1].col);
      }
      for (std::size_t i = 2; i < tok.size(); ++i) {
        if (!p.find_ideal(tok[i].text))
          throw ParseError("unknown ideal '" + tok[i].text + "'", lineno, tok[i].col);
        p.filtration_names.push_back(tok[i].text);
      }
    } else if (head == "candidate") {
      if (!have_vars) throw ParseError("variables must be declared first", lineno, tok[0].col);
      if (tok.size() < 3 || tok[2].text != "=")
        throw ParseError("expected: candidate NAME = [row; row]", lineno, tok[0].col);
      const std::string& name = tok[1].text;
      if (p.find_candidate(name))
        throw ParseError("candidate '" + name + "' declared twice", lineno, tok[1].col);
      const int rhs_start = tok[2].col;
      const std::string rhs = rest_from(line, rhs_start + 1);
      p.candidates.emplace_back(name, parse_candidate_rows(rhs, p.vars, lineno, rhs_start));
    } else if (head == "box" || head == "offset") {
      if (tok.size() < 2) throw ParseError(head + " needs integers", lineno, tok[0].col);
      std::vector<std::int64_t> vals;
      for (std::size_t i = 1; i < tok.size(); ++i) vals.push_back(parse_int_token(tok[i], lineno));
      if (head == "box") {
        box_raw = std::move(vals);
        box_line = lineno;
      } else {
        offset_raw = std::move(vals);
        offset_line = lineno;
      }
    } else if (head == "margin") {
      if (tok.size() != 2) throw ParseError("margin needs one integer", lineno, tok[0].col);
      p.margin = parse_int_token(tok[1], lineno);
      if (*p.margin < 1) throw ParseError("margin must be positive", lineno, tok[1].col);
    } else {
      throw ParseError("unknown directive '" + head + "'", lineno, tok[0].col);
    }
  }

  if (!have_vars) throw ParseError("project declares no variables", lineno ? lineno : 1, 1);
  const int s = p.family ? static_cast<int>(p.filtration_names.size()) : 0;
  if (!box_raw.empty()) {
    if (s && static_cast<int>(box_raw.size()) != s)
      throw ParseError("box needs " + std::to_string(s) + " components", box_line, 1);
    p.box = MultiIndex(box_raw);
  }
  if (!offset_raw.empty()) {
    if (s && static_cast<int>(offset_raw.size()) != s)
      throw ParseError("offset needs " + std::to_string(s) + " components", offset_line, 1);
    p.offset = MultiIndex(offset_raw);
  }
  return p;
}

ProjectFile load_project(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open project file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_project(buf.str());
}

}  // namespace mgfil
