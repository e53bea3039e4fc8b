#pragma once

#include <string>

#include "elliskernel/covering.hpp"
#include "elliskernel/kernel.hpp"
#include "elliskernel/sturmian.hpp"
#include "elliskernel/substitution.hpp"

namespace elliskernel {

// Substitution input documents:
//   {"alphabet": ["a", ...], "rules": {"a": "ac", ...}}
// Letters must be single characters.
Substitution substitution_from_json(const std::string& text);
std::string substitution_to_json(const Substitution& s, bool pretty = false);

// Group specs: {"elements": [...], "table": [[...]], "identity": "..."} with
// table entries given as names or indices, or one of the shorthands
// {"cyclic": n}, {"symmetric": n}, {"product": [spec, spec]}.
GroupTable group_from_json(const std::string& text);
std::string group_to_json(const GroupTable& g, bool pretty = false);

// Cocycles: {"q": {"a": "element-name", ...}}
Cocycle cocycle_from_json(const std::string& text, const Substitution& s,
                          const GroupTable& g);
std::string cocycle_to_json(const Substitution& s, const GroupTable& g,
                            const Cocycle& q, bool pretty = false);

// Sturmian parameters:
//   {"alpha": {"p":..,"q":..,"r":..,"d":..},
//    "kappa": {"m":..,"n":..,"k":..} | "generic"}
SturmianParams sturmian_params_from_json(const std::string& text);
std::string sturmian_params_to_json(const SturmianParams& p, bool pretty = false);

std::string kernel_report_to_json(const KernelReport& r, bool pretty = false);
KernelReport kernel_report_from_json(const std::string& text);

std::string comparison_to_json(const KernelComparison& c, const KernelReport& a,
                               const KernelReport& b, bool pretty = false);
KernelComparison comparison_from_json(const std::string& text, KernelReport* left,
                                      KernelReport* right);

std::string cover_result_to_json(const CoverResult& c,
                                 const std::vector<WordPair>& pairs,
                                 bool pretty = false);
CoverResult cover_result_from_json(const std::string& text);

/// Renders a JSON report as an indented key/value view; the human-readable
/// output is always derived from the JSON document.
std::string render_human(const std::string& json_text);

}  // namespace elliskernel
