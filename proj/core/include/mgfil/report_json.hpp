#pragma once

#include <string>

#include "mgfil/parse.hpp"
#include "mgfil/postulation.hpp"
#include "mgfil/verify.hpp"

namespace mgfil {

// Machine-readable reports.  Key order, array layout (row-major tables,
// comma-joined coefficient indices) and spacing are deterministic, so equal
// inputs produce byte-identical reports.
std::string json_colength_report(const VarTable& vars, const MonomialIdeal& a,
                                 std::int64_t value);
std::string json_closure_report(const VarTable& vars, const MonomialIdeal& a,
                                const MonomialIdeal& closure);
std::string json_hilbert_report(const HilbertTable& table);
std::string json_fit_report(const HilbertPolynomial& p, const MultiIndex& offset,
                            std::int64_t margin);
std::string json_upward_set_report(const std::string& kind, const UpwardClosedSet& set);
std::string json_reduction_check_report(const MultiIndex& at, bool holds);
std::string json_search_report(const VarTable& vars, const SearchResult& result);
std::string json_descent_report(const DescentReport& report);
std::string json_correspondence_report(const CorrespondenceReport& report);

// Round-trip readers for the structured reports.
HilbertTable parse_hilbert_report(const std::string& text);
HilbertPolynomial parse_fit_report(const std::string& text);
UpwardClosedSet parse_upward_set_report(const std::string& text, std::string* kind = nullptr);

// Structural validation of any report this library emits; returns the kind.
// Cross-field consistency (table sizes, verdict vs violation lists, antichain
// minimality) is checked, not just shape.
std::string validate_report(const std::string& text);

}  // namespace mgfil
