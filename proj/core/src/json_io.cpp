#include "elliskernel/json_io.hpp"

#include <algorithm>
#include <sstream>

#include "elliskernel/errors.hpp"
#include "json.hpp"

namespace elliskernel {

namespace {

using Json = nlohmann::ordered_json;

Json parse(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw ParseError("invalid JSON document");
  }
  return j;
}

[[noreturn]] void bad(const std::string& what) { throw ParseError(what); }

std::string dump(const Json& j, bool pretty) {
  return pretty ? j.dump(2) + "\n" : j.dump();
}

Json group_to_obj(const GroupTable& g) {
  Json obj;
  obj["elements"] = g.names();
  Json table = Json::array();
  for (const auto& row : g.table()) {
    table.push_back(row);
  }
  obj["table"] = table;
  obj["identity"] = g.name(g.identity());
  return obj;
}

GroupTable group_from_obj(const Json& j) {
  if (!j.is_object()) {
    bad("group spec must be an object");
  }
  if (j.contains("cyclic")) {
    if (!j["cyclic"].is_number_unsigned() || j["cyclic"] == 0) {
      bad("\"cyclic\" takes a positive integer");
    }
    return GroupTable::cyclic(j["cyclic"].get<unsigned>());
  }
  if (j.contains("symmetric")) {
    if (!j["symmetric"].is_number_unsigned() || j["symmetric"] == 0) {
      bad("\"symmetric\" takes a positive integer");
    }
    return GroupTable::symmetric(j["symmetric"].get<unsigned>());
  }
  if (j.contains("product")) {
    if (!j["product"].is_array() || j["product"].size() != 2) {
      bad("\"product\" takes a pair of group specs");
    }
    return GroupTable::direct_product(group_from_obj(j["product"][0]),
                                      group_from_obj(j["product"][1]));
  }
  if (!j.contains("elements") || !j.contains("table") || !j.contains("identity")) {
    bad("group spec needs \"elements\", \"table\" and \"identity\"");
  }
  std::vector<std::string> names;
  for (const Json& e : j["elements"]) {
    if (!e.is_string()) {
      bad("group element names must be strings");
    }
    names.push_back(e.get<std::string>());
  }
  auto index_of = [&](const Json& v) -> std::uint16_t {
    if (v.is_number_unsigned()) {
      std::size_t i = v.get<std::size_t>();
      if (i >= names.size()) {
        bad("group table index out of range");
      }
      return static_cast<std::uint16_t>(i);
    }
    if (v.is_string()) {
      for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == v.get<std::string>()) {
          return static_cast<std::uint16_t>(i);
        }
      }
      bad("unknown group element \"" + v.get<std::string>() + "\"");
    }
    bad("group table entries must be names or indices");
  };
  std::vector<std::vector<std::uint16_t>> table;
  for (const Json& row : j["table"]) {
    std::vector<std::uint16_t> r;
    for (const Json& v : row) {
      r.push_back(index_of(v));
    }
    table.push_back(std::move(r));
  }
  std::uint16_t identity = index_of(j["identity"]);
  try {
    return GroupTable(std::move(names), std::move(table), identity);
  } catch (const std::invalid_argument& e) {
    bad(std::string("group axioms fail: ") + e.what());
  }
}

Json presentation_to_obj(const ReesPresentation& p) {
  Json obj;
  obj["group"] = group_to_obj(p.group);
  obj["I"] = p.col_labels;
  obj["lambda"] = p.row_labels;
  Json sandwich = Json::array();
  for (const auto& row : p.sandwich) {
    Json r = Json::array();
    for (std::uint16_t e : row) {
      r.push_back(p.group.name(e));
    }
    sandwich.push_back(r);
  }
  obj["sandwich"] = sandwich;
  return obj;
}

ReesPresentation presentation_from_obj(const Json& j) {
  GroupTable g = group_from_obj(j.at("group"));
  std::vector<std::string> rows, cols;
  for (const Json& r : j.at("lambda")) {
    rows.push_back(r.get<std::string>());
  }
  for (const Json& c : j.at("I")) {
    cols.push_back(c.get<std::string>());
  }
  std::vector<std::vector<std::uint16_t>> sandwich;
  for (const Json& row : j.at("sandwich")) {
    std::vector<std::uint16_t> r;
    for (const Json& v : row) {
      auto idx = g.index_of_name(v.get<std::string>());
      if (!idx) {
        bad("sandwich entry is not a group element name");
      }
      r.push_back(*idx);
    }
    sandwich.push_back(std::move(r));
  }
  return ReesPresentation{std::move(g), std::move(rows), std::move(cols),
                          std::move(sandwich)};
}

Json substitution_to_obj(const Substitution& s) {
  Json obj;
  Json alphabet = Json::array();
  for (char c : s.alphabet()) {
    alphabet.push_back(std::string(1, c));
  }
  obj["alphabet"] = alphabet;
  Json rules = Json::object();
  for (Letter a = 0; a < s.alphabet_size(); ++a) {
    rules[std::string(1, s.letter_name(a))] = s.render(s.rule(a));
  }
  obj["rules"] = rules;
  return obj;
}

Substitution substitution_from_obj(const Json& j) {
  if (!j.is_object() || !j.contains("alphabet") || !j.contains("rules")) {
    bad("substitution document needs \"alphabet\" and \"rules\"");
  }
  std::vector<char> alphabet;
  for (const Json& e : j["alphabet"]) {
    if (!e.is_string() || e.get<std::string>().size() != 1) {
      bad("letters must be single characters");
    }
    alphabet.push_back(e.get<std::string>()[0]);
  }
  std::vector<std::string> texts(alphabet.size());
  if (!j["rules"].is_object() || j["rules"].size() != alphabet.size()) {
    bad("\"rules\" must map every letter");
  }
  for (const auto& [key, value] : j["rules"].items()) {
    if (key.size() != 1 || !value.is_string()) {
      bad("rules must map single-character letters to words");
    }
    bool known = false;
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
      if (alphabet[i] == key[0]) {
        texts[i] = value.get<std::string>();
        known = true;
      }
    }
    if (!known) {
      bad("rule for undeclared letter \"" + key + "\"");
    }
  }
  try {
    return Substitution::from_strings(alphabet, texts);
  } catch (const std::invalid_argument& e) {
    bad(std::string("invalid substitution: ") + e.what());
  }
}

Json quadratic_to_obj(const QuadraticNumber& x) {
  return Json{{"p", x.p()}, {"q", x.q()}, {"r", x.r()}, {"d", x.d()}};
}

QuadraticNumber quadratic_from_obj(const Json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("q") ||
      !j.contains("r") || !j.contains("d")) {
    bad("quadratic numbers need fields p, q, r, d");
  }
  try {
    return QuadraticNumber(j["p"].get<long long>(), j["q"].get<long long>(),
                           j["r"].get<long long>(), j["d"].get<long long>());
  } catch (const std::invalid_argument& e) {
    bad(std::string("invalid quadratic number: ") + e.what());
  }
}

}  // namespace

Substitution substitution_from_json(const std::string& text) {
  return substitution_from_obj(parse(text));
}

std::string substitution_to_json(const Substitution& s, bool pretty) {
  return dump(substitution_to_obj(s), pretty);
}

GroupTable group_from_json(const std::string& text) {
  return group_from_obj(parse(text));
}

std::string group_to_json(const GroupTable& g, bool pretty) {
  return dump(group_to_obj(g), pretty);
}

Cocycle cocycle_from_json(const std::string& text, const Substitution& s,
                          const GroupTable& g) {
  Json j = parse(text);
  if (!j.is_object() || !j.contains("q") || !j["q"].is_object()) {
    bad("cocycle document needs an object field \"q\"");
  }
  Cocycle q;
  q.assignment.assign(s.alphabet_size(), g.identity());
  std::vector<bool> seen(s.alphabet_size(), false);
  for (const auto& [key, value] : j["q"].items()) {
    if (key.size() != 1) {
      bad("cocycle keys must be single letters");
    }
    auto a = s.letter_index(key[0]);
    if (!a) {
      bad("cocycle assigns an undeclared letter \"" + key + "\"");
    }
    auto e = g.index_of_name(value.get<std::string>());
    if (!e) {
      bad("cocycle value is not a group element name");
    }
    q.assignment[*a] = *e;
    seen[*a] = true;
  }
  for (Letter a = 0; a < s.alphabet_size(); ++a) {
    if (!seen[a]) {
      bad(std::string("cocycle misses letter \"") + s.letter_name(a) + "\"");
    }
  }
  return q;
}

std::string cocycle_to_json(const Substitution& s, const GroupTable& g,
                            const Cocycle& q, bool pretty) {
  Json obj;
  Json m = Json::object();
  for (Letter a = 0; a < s.alphabet_size(); ++a) {
    m[std::string(1, s.letter_name(a))] = g.name(q.assignment[a]);
  }
  obj["q"] = m;
  return dump(obj, pretty);
}

SturmianParams sturmian_params_from_json(const std::string& text) {
  Json j = parse(text);
  if (!j.is_object() || !j.contains("alpha") || !j.contains("kappa")) {
    bad("sturmian parameters need \"alpha\" and \"kappa\"");
  }
  QuadraticNumber alpha = quadratic_from_obj(j["alpha"]);
  try {
    if (j["kappa"].is_string() && j["kappa"] == "generic") {
      return SturmianParams::with_generic_kappa(std::move(alpha));
    }
    const Json& k = j["kappa"];
    if (!k.is_object() || !k.contains("m") || !k.contains("n") || !k.contains("k")) {
      bad("\"kappa\" must be \"generic\" or an object with m, n, k");
    }
    return SturmianParams::with_combination(std::move(alpha),
                                            k["m"].get<long long>(),
                                            k["n"].get<long long>(),
                                            k["k"].get<long long>());
  } catch (const std::invalid_argument& e) {
    bad(std::string("invalid sturmian parameters: ") + e.what());
  }
}

std::string sturmian_params_to_json(const SturmianParams& p, bool pretty) {
  Json obj;
  obj["alpha"] = quadratic_to_obj(p.alpha());
  if (p.generic_kappa()) {
    obj["kappa"] = "generic";
  } else {
    obj["kappa"] = Json{{"m", p.combination()->m},
                        {"n", p.combination()->n},
                        {"k", p.combination()->k}};
  }
  return dump(obj, pretty);
}

namespace {

Json kernel_report_to_obj(const KernelReport& r) {
  Json obj;
  obj["mef"] = Json{{"primes", r.mef.primes}, {"height", r.mef.height}};
  obj["presentation"] = presentation_to_obj(r.presentation);
  obj["gamma"] = r.gamma;
  obj["flags"] =
      Json{{"nes_finite", r.nes_finite}, {"full_symmetric", r.full_symmetric}};
  obj["fibre"] = Json{{"size", r.fibre_size}, {"seeds", r.seeds}};
  obj["aut_eq_orbit"] = r.aut_eq_orbit;
  obj["full_kernel"] = r.full_kernel;
  obj["notes"] = r.notes;
  obj["provenance"] = Json{
      {"phi", r.phi}, {"exponent", r.exponent}, {"method", r.method}};
  return obj;
}

KernelReport kernel_report_from_obj(const Json& j) {
  KernelReport r;
  r.mef.primes = j.at("mef").at("primes").get<std::vector<unsigned long long>>();
  r.mef.height = j.at("mef").at("height").get<unsigned>();
  r.presentation = presentation_from_obj(j.at("presentation"));
  r.gamma = j.at("gamma").get<std::vector<std::string>>();
  r.nes_finite = j.at("flags").at("nes_finite").get<bool>();
  r.full_symmetric = j.at("flags").at("full_symmetric").get<bool>();
  r.fibre_size = j.at("fibre").at("size").get<std::size_t>();
  r.seeds = j.at("fibre").at("seeds").get<std::vector<std::string>>();
  r.aut_eq_orbit = j.at("aut_eq_orbit").get<std::string>();
  r.full_kernel = j.at("full_kernel").get<std::string>();
  r.notes = j.at("notes").get<std::vector<std::string>>();
  r.phi = j.at("provenance").at("phi").get<std::string>();
  r.exponent = j.at("provenance").at("exponent").get<unsigned>();
  r.method = j.at("provenance").at("method").get<std::string>();
  return r;
}

}  // namespace

std::string kernel_report_to_json(const KernelReport& r, bool pretty) {
  return dump(kernel_report_to_obj(r), pretty);
}

KernelReport kernel_report_from_json(const std::string& text) {
  try {
    return kernel_report_from_obj(parse(text));
  } catch (const Json::exception& e) {
    bad(std::string("invalid kernel report: ") + e.what());
  }
}

std::string comparison_to_json(const KernelComparison& c, const KernelReport& a,
                               const KernelReport& b, bool pretty) {
  Json obj;
  obj["verdict"] = verdict_name(c.verdict);
  obj["reason"] = c.reason;
  obj["left"] = kernel_report_to_obj(a);
  obj["right"] = kernel_report_to_obj(b);
  return dump(obj, pretty);
}

KernelComparison comparison_from_json(const std::string& text, KernelReport* left,
                                      KernelReport* right) {
  Json j = parse(text);
  try {
    KernelComparison c;
    std::string verdict = j.at("verdict").get<std::string>();
    if (verdict == verdict_name(KernelVerdict::algebraically_isomorphic)) {
      c.verdict = KernelVerdict::algebraically_isomorphic;
    } else if (verdict == verdict_name(KernelVerdict::not_isomorphic)) {
      c.verdict = KernelVerdict::not_isomorphic;
    } else if (verdict == verdict_name(KernelVerdict::inconclusive)) {
      c.verdict = KernelVerdict::inconclusive;
    } else {
      bad("unknown verdict \"" + verdict + "\"");
    }
    c.reason = j.at("reason").get<std::string>();
    if (left) {
      *left = kernel_report_from_obj(j.at("left"));
    }
    if (right) {
      *right = kernel_report_from_obj(j.at("right"));
    }
    return c;
  } catch (const Json::exception& e) {
    bad(std::string("invalid comparison report: ") + e.what());
  }
}

std::string cover_result_to_json(const CoverResult& c,
                                 const std::vector<WordPair>& pairs,
                                 bool pretty) {
  Json obj;
  obj["base"] = substitution_to_obj(c.base);
  obj["group"] = group_to_obj(c.group);
  Json q = Json::object();
  for (Letter a = 0; a < c.base.alphabet_size(); ++a) {
    q[std::string(1, c.base.letter_name(a))] = c.group.name(c.q.assignment[a]);
  }
  obj["cocycle"] = Json{{"q", q}};
  obj["lifted"] = substitution_to_obj(c.lifted);
  Json legend = Json::object();
  for (std::size_t i = 0; i < c.legend.size(); ++i) {
    legend[std::string(1, c.lifted.letter_name(static_cast<Letter>(i)))] =
        Json::array({std::string(1, c.base.letter_name(c.legend[i].base)),
                     c.group.name(c.legend[i].g)});
  }
  obj["legend"] = legend;
  obj["nontrivial"] = c.nontrivial;
  Json jp = Json::array();
  for (const WordPair& p : pairs) {
    jp.push_back(Json::array({c.base.render(p.first), c.base.render(p.second)}));
  }
  obj["asymptotic_pairs"] = jp;
  Json omegas = Json::array();
  for (std::uint16_t w : c.omega_values) {
    omegas.push_back(c.group.name(w));
  }
  obj["omega"] = omegas;
  obj["k"] = c.omega_order ? Json(*c.omega_order) : Json(nullptr);
  obj["created_height"] = c.created_height ? Json(*c.created_height) : Json(nullptr);
  obj["cr_lifted"] = c.cr_lifted ? Json(*c.cr_lifted) : Json(nullptr);
  if (c.cr_lifted) {
    obj["cr_note"] = "derived under the k-equality convention";
  }
  return dump(obj, pretty);
}

CoverResult cover_result_from_json(const std::string& text) {
  Json j = parse(text);
  try {
    Substitution base = substitution_from_obj(j.at("base"));
    GroupTable group = group_from_obj(j.at("group"));
    Cocycle q = cocycle_from_json(j.at("cocycle").dump(), base, group);
    CoverResult c{base,       substitution_from_obj(j.at("lifted")),
                  {},         group,
                  q,          j.at("nontrivial").get<bool>(),
                  {},         std::nullopt,
                  std::nullopt, std::nullopt};
    for (std::size_t i = 0; i < c.lifted.alphabet_size(); ++i) {
      const Json& entry =
          j.at("legend").at(std::string(1, c.lifted.letter_name(static_cast<Letter>(i))));
      LiftedLetter ll;
      ll.base = *c.base.letter_index(entry.at(0).get<std::string>()[0]);
      ll.g = *c.group.index_of_name(entry.at(1).get<std::string>());
      c.legend.push_back(ll);
    }
    for (const Json& w : j.at("omega")) {
      c.omega_values.push_back(*c.group.index_of_name(w.get<std::string>()));
    }
    if (!j.at("k").is_null()) {
      c.omega_order = j.at("k").get<unsigned>();
    }
    if (!j.at("created_height").is_null()) {
      c.created_height = j.at("created_height").get<unsigned>();
    }
    if (!j.at("cr_lifted").is_null()) {
      c.cr_lifted = j.at("cr_lifted").get<unsigned>();
    }
    return c;
  } catch (const Json::exception& e) {
    bad(std::string("invalid cover result: ") + e.what());
  }
}

namespace {

void render_value(const Json& j, const std::string& key, int indent,
                  std::ostringstream& out) {
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    if (!key.empty()) {
      out << pad << key << ":\n";
    }
    for (const auto& [k, v] : j.items()) {
      render_value(v, k, key.empty() ? indent : indent + 1, out);
    }
  } else if (j.is_array()) {
    bool scalars = std::all_of(j.begin(), j.end(), [](const Json& v) {
      return !v.is_object() && !v.is_array();
    });
    if (scalars) {
      out << pad << key << ": ";
      for (std::size_t i = 0; i < j.size(); ++i) {
        out << (i ? " " : "") << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
      }
      out << "\n";
    } else {
      out << pad << key << ":\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        render_value(j[i], "[" + std::to_string(i) + "]", indent + 1, out);
      }
    }
  } else {
    out << pad << key << ": "
        << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

std::string render_human(const std::string& json_text) {
  Json j = parse(json_text);
  std::ostringstream out;
  render_value(j, "", 0, out);
  return out.str();
}

}  // namespace elliskernel
