#include "mgfil/report_json.hpp"

#include <nlohmann/json.hpp>

namespace mgfil {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json index_array(const MultiIndex& n) {
  ordered_json a = ordered_json::array();
  for (int i = 0; i < n.arity(); ++i) a.push_back(n[i]);
  return a;
}

ordered_json index_list(const std::vector<MultiIndex>& v) {
  ordered_json a = ordered_json::array();
  for (const MultiIndex& n : v) a.push_back(index_array(n));
  return a;
}

ordered_json generator_arrays(const MonomialIdeal& a) {
  ordered_json out = ordered_json::array();
  for (const Monomial& g : a.generators()) out.push_back(index_array(g.exponents()));
  return out;
}

ordered_json certification_json(const Certification& cert) {
  ordered_json out;
  if (const auto* c = std::get_if<StabilizationCertificate>(&cert)) {
    out["type"] = "stabilization";
    out["bounds"] = index_array(c->bounds);
    out["verified_box"] = index_array(c->verified_box);
  } else {
    out["type"] = "heuristic";
    out["margin"] = std::get<HeuristicTail>(cert).margin;
  }
  return out;
}

ordered_json upward_set_json(const std::string& kind, const UpwardClosedSet& set) {
  ordered_json out;
  out["kind"] = kind;
  out["arity"] = set.arity;
  out["minimal"] = index_list(set.minimal_elements);
  out["scan_lo"] = index_array(set.scanned.lo());
  out["scan_hi"] = index_array(set.scanned.hi());
  out["certification"] = certification_json(set.certification);
  return out;
}

std::string dump(const ordered_json& j) { return j.dump() + "\n"; }

MultiIndex read_index(const ordered_json& a, int arity = -1) {
  if (!a.is_array()) throw ValidationError("expected an index array");
  std::vector<std::int64_t> c;
  for (const auto& v : a) {
    if (!v.is_number_integer()) throw ValidationError("index entries must be integers");
    c.push_back(v.get<std::int64_t>());
  }
  if (arity >= 0 && static_cast<int>(c.size()) != arity)
    throw ValidationError("index arity mismatch in report");
  return MultiIndex(std::move(c));
}

ordered_json parse_or_fail(const std::string& text) {
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ValidationError("report is not valid JSON");
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw ValidationError("report must be an object with a kind");
  return j;
}

Certification read_certification(const ordered_json& j, int arity) {
  if (!j.is_object() || !j.contains("type")) throw ValidationError("missing certification type");
  const std::string type = j["type"].get<std::string>();
  if (type == "stabilization") {
    StabilizationCertificate c{read_index(j.at("bounds"), arity),
                               read_index(j.at("verified_box"), arity)};
    if (!c.bounds.all_nonnegative() || !c.bounds.leq(c.verified_box))
      throw ValidationError("stabilization bounds must lie inside the verified box");
    return c;
  }
  if (type == "heuristic") {
    const std::int64_t margin = j.at("margin").get<std::int64_t>();
    if (margin < 0) throw ValidationError("negative heuristic margin");
    return HeuristicTail{margin};
  }
  throw ValidationError("unknown certification type '" + type + "'");
}

UpwardClosedSet read_upward_set(const ordered_json& j, std::string* kind) {
  if (kind) *kind = j.at("kind").get<std::string>();
  const int arity = j.at("arity").get<int>();
  if (arity < 1) throw ValidationError("upward set needs positive arity");
  std::vector<MultiIndex> minimal;
  for (const auto& m : j.at("minimal")) minimal.push_back(read_index(m, arity));
  for (std::size_t a = 0; a < minimal.size(); ++a)
    for (std::size_t b = 0; b < minimal.size(); ++b)
      if (a != b && minimal[a].leq(minimal[b]))
        throw ValidationError("minimal elements are not an antichain");
  Box scanned(read_index(j.at("scan_lo"), arity), read_index(j.at("scan_hi"), arity));
  UpwardClosedSet set{arity, std::move(minimal), std::move(scanned),
                      read_certification(j.at("certification"), arity)};
  for (const MultiIndex& m : set.minimal_elements)
    if (!set.scanned.contains(m))
      throw ValidationError("minimal element " + m.str() + " outside the scanned region");
  return set;
}

}  // namespace

std::string json_colength_report(const VarTable& vars, const MonomialIdeal& a,
                                 std::int64_t value) {
  ordered_json j;
  j["kind"] = "colength";
  j["variables"] = vars.names();
  j["ideal"] = ideal_to_string(a, vars);
  j["generators"] = generator_arrays(a);
  j["value"] = value;
  return dump(j);
}

std::string json_closure_report(const VarTable& vars, const MonomialIdeal& a,
                                const MonomialIdeal& closure) {
  ordered_json j;
  j["kind"] = "closure";
  j["variables"] = vars.names();
  j["ideal"] = ideal_to_string(a, vars);
  j["generators"] = generator_arrays(a);
  j["closure"] = ideal_to_string(closure, vars);
  j["closure_generators"] = generator_arrays(closure);
  return dump(j);
}

std::string json_hilbert_report(const HilbertTable& table) {
  ordered_json j;
  j["kind"] = "hilbert";
  j["box"] = index_array(table.box.hi());
  j["values"] = table.values;  // row-major, last axis fastest
  return dump(j);
}

std::string json_fit_report(const HilbertPolynomial& p, const MultiIndex& offset,
                            std::int64_t margin) {
  ordered_json j;
  j["kind"] = "fit";
  j["arity"] = p.arity();
  j["degree"] = p.total_degree();
  ordered_json coeffs;
  for (const auto& [alpha, e] : p.coefficients()) {
    std::string key;
    for (int i = 0; i < alpha.arity(); ++i) {
      if (i) key += ",";
      key += std::to_string(alpha[i]);
    }
    coeffs[key] = e;
  }
  j["coefficients"] = std::move(coeffs);
  j["display"] = polynomial_display(p);
  j["offset"] = index_array(offset);
  j["margin"] = margin;
  return dump(j);
}

std::string json_upward_set_report(const std::string& kind, const UpwardClosedSet& set) {
  return dump(upward_set_json(kind, set));
}

std::string json_reduction_check_report(const MultiIndex& at, bool holds) {
  ordered_json j;
  j["kind"] = "reduction_check";
  j["at"] = index_array(at);
  j["holds"] = holds;
  return dump(j);
}

std::string json_search_report(const VarTable& vars, const SearchResult& result) {
  ordered_json j;
  j["kind"] = "reduction_search";
  j["examined"] = result.examined;
  j["cap_hit"] = result.cap_hit;
  ordered_json found = ordered_json::array();
  for (const CompleteReductionCandidate& c : result.found) {
    ordered_json item;
    ordered_json matrix = ordered_json::array();
    for (const auto& row : c.rows()) {
      ordered_json r = ordered_json::array();
      for (const Monomial& m : row) r.push_back(monomial_to_string(m, vars));
      matrix.push_back(std::move(r));
    }
    item["matrix"] = std::move(matrix);
    ordered_json y = ordered_json::array();
    for (const Monomial& m : c.y()) y.push_back(monomial_to_string(m, vars));
    item["y"] = std::move(y);
    found.push_back(std::move(item));
  }
  j["found"] = std::move(found);
  return dump(j);
}

std::string json_descent_report(const DescentReport& report) {
  ordered_json j;
  j["kind"] = "descent_check";
  j["box"] = index_array(report.box);
  j["points_checked"] = report.points_checked;
  j["violations"] = index_list(report.violations);
  return dump(j);
}

std::string json_correspondence_report(const CorrespondenceReport& report) {
  ordered_json j;
  j["kind"] = "correspondence";
  j["box"] = index_array(report.box);
  j["shift"] = index_array(report.shift);
  j["verdict"] = verdict_name(report.verdict);
  j["forward_violations"] = index_list(report.forward_violations);
  j["backward_violations"] = index_list(report.backward_violations);
  j["proxy_ph_equal_on_box"] = report.proxy_ph_equal_on_box;
  j["postulation"] = upward_set_json("postulation", report.postulation);
  j["reductions"] = upward_set_json("reduction_scan", report.reductions);
  return dump(j);
}

HilbertTable parse_hilbert_report(const std::string& text) {
  const ordered_json j = parse_or_fail(text);
  if (j["kind"] != "hilbert") throw ValidationError("not a hilbert report");
  Box box = Box::at_origin(read_index(j.at("box")));
  std::vector<std::int64_t> values;
  for (const auto& v : j.at("values")) values.push_back(v.get<std::int64_t>());
  if (static_cast<std::int64_t>(values.size()) != box.count())
    throw ValidationError("table size differs from box volume");
  for (std::int64_t v : values)
    if (v < 0) throw ValidationError("negative colength in table");
  return HilbertTable{std::move(box), std::move(values)};
}

HilbertPolynomial parse_fit_report(const std::string& text) {
  const ordered_json j = parse_or_fail(text);
  if (j["kind"] != "fit") throw ValidationError("not a fit report");
  const int arity = j.at("arity").get<int>();
  const std::int64_t degree = j.at("degree").get<std::int64_t>();
  std::map<MultiIndex, std::int64_t, LexLess> coeffs;
  for (const auto& [key, value] : j.at("coefficients").items()) {
    std::vector<std::int64_t> c;
    std::size_t start = 0;
    while (start <= key.size()) {
      std::size_t comma = key.find(',', start);
      if (comma == std::string::npos) comma = key.size();
      c.push_back(std::stoll(key.substr(start, comma - start)));
      start = comma + 1;
    }
    coeffs.emplace(MultiIndex(std::move(c)), value.get<std::int64_t>());
  }
  HilbertPolynomial p(arity, degree, std::move(coeffs));
  if (j.at("display").get<std::string>() != polynomial_display(p))
    throw ValidationError("fit display string disagrees with the coefficients");
  return p;
}

UpwardClosedSet parse_upward_set_report(const std::string& text, std::string* kind) {
  const ordered_json j = parse_or_fail(text);
  const std::string k = j["kind"].get<std::string>();
  if (k != "postulation" && k != "reduction_scan" && k != "upward_set")
    throw ValidationError("not an upward-set report");
  return read_upward_set(j, kind);
}

std::string validate_report(const std::string& text) {
  const ordered_json j = parse_or_fail(text);
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "hilbert") {
    parse_hilbert_report(text);
  } else if (kind == "fit") {
    parse_fit_report(text);
  } else if (kind == "postulation" || kind == "reduction_scan" || kind == "upward_set") {
    parse_upward_set_report(text);
  } else if (kind == "colength") {
    const auto vars = VarTable::from_names(j.at("variables").get<std::vector<std::string>>());
    std::vector<Monomial> gens;
    for (const auto& g : j.at("generators"))
      gens.emplace_back(read_index(g, vars.dim()));
    const MonomialIdeal a = MonomialIdeal::from_generators(vars.dim(), gens);
    if (static_cast<std::size_t>(a.generator_count()) != gens.size())
      throw ValidationError("generators in report are not minimal");
    if (ideal_to_string(a, vars) != j.at("ideal").get<std::string>())
      throw ValidationError("ideal string disagrees with the generators");
    if (j.at("value").get<std::int64_t>() != colength(a))
      throw ValidationError("colength value disagrees with the generators");
  } else if (kind == "closure") {
    const auto vars = VarTable::from_names(j.at("variables").get<std::vector<std::string>>());
    for (const char* field : {"generators", "closure_generators"})
      for (const auto& g : j.at(field)) read_index(g, vars.dim());
  } else if (kind == "reduction_check") {
    read_index(j.at("at"));
    if (!j.at("holds").is_boolean()) throw ValidationError("holds must be a boolean");
  } else if (kind == "reduction_search") {
    if (j.at("examined").get<std::int64_t>() < 0) throw ValidationError("negative examined count");
    for (const auto& item : j.at("found")) {
      if (!item.contains("matrix") || !item.contains("y"))
        throw ValidationError("search result entry lacks matrix or y");
    }
  } else if (kind == "descent_check") {
    const MultiIndex box = read_index(j.at("box"));
    for (const auto& v : j.at("violations")) {
      const MultiIndex n = read_index(v, box.arity());
      if (!n.all_nonnegative() || !n.leq(box))
        throw ValidationError("descent violation outside the box");
    }
  } else if (kind == "correspondence") {
    const MultiIndex box = read_index(j.at("box"));
    read_index(j.at("shift"), box.arity());
    const std::string verdict = j.at("verdict").get<std::string>();
    const bool fwd = !j.at("forward_violations").empty();
    const bool bwd = !j.at("backward_violations").empty();
    const std::string expect = fwd ? (bwd ? "both_fail" : "forward_fails")
                                   : (bwd ? "backward_fails" : "bijective");
    if (verdict != expect)
      throw ValidationError("verdict '" + verdict + "' disagrees with the violation lists");
    read_upward_set(j.at("postulation"), nullptr);
    read_upward_set(j.at("reductions"), nullptr);
  } else {
    throw ValidationError("unknown report kind '" + kind + "'");
  }
  return kind;
}

}  // namespace mgfil
