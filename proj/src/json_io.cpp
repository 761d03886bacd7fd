#include "qm/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <string>

#include "qm/errors.hpp"

namespace qm::json_io {
namespace {

Rational scalar(const json& v, const std::string& where) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw InputError(where + ": expected a rational string");
}

OutcomeSpace space_of(const json& doc) {
  if (!doc.is_object()) throw InputError("expected a JSON object");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) throw InputError("missing integer field \"n\"");
  return OutcomeSpace(doc["n"].get<int>());
}

int outcome_index(const json& v, const OutcomeSpace& space, const std::string& where) {
  if (!v.is_number_integer()) throw InputError(where + ": expected an outcome index");
  const int i = v.get<int>();
  if (i < 1 || i > space.size()) {
    throw InputError("outcome " + std::to_string(i) + " exceeds n=" + std::to_string(space.size()));
  }
  return i - 1;
}

std::string str(const Rational& r) { return format_rational(r); }

}  // namespace

json load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

SignedQMeasure measure_from_json(const json& doc) {
  const auto space = space_of(doc);
  const int n = space.size();
  if (doc.contains("table")) {
    const auto& table = doc["table"];
    if (!table.is_object()) throw InputError("\"table\" must be an object");
    std::map<Event, Rational> values;
    for (const auto& [key, v] : table.items()) {
      const Event e = parse_event(key, space);
      if (!values.emplace(e, scalar(v, "table[" + key + "]")).second) {
        throw InputError("table lists event {" + format_event(e) + "} twice");
      }
    }
    return from_full_table(space, values);
  }
  if (!doc.contains("singletons") || !doc["singletons"].is_array()) throw InputError("missing array \"singletons\"");
  const auto& s = doc["singletons"];
  if (s.size() != static_cast<std::size_t>(n)) {
    throw InputError("expected " + std::to_string(n) + " singletons, got " + std::to_string(s.size()));
  }
  std::vector<Rational> singles;
  for (std::size_t i = 0; i < s.size(); ++i) singles.push_back(scalar(s[i], "singletons[" + std::to_string(i) + "]"));
  std::vector<Rational> doubles(pair_count(n));
  std::vector<bool> seen(pair_count(n), false);
  if (n > 1) {
    if (!doc.contains("doubletons") || !doc["doubletons"].is_array()) throw InputError("missing array \"doubletons\"");
    for (const auto& d : doc["doubletons"]) {
      if (!d.is_object() || !d.contains("i") || !d.contains("j") || !d.contains("value")) {
        throw InputError("each doubleton needs \"i\", \"j\" and \"value\"");
      }
      int i = outcome_index(d["i"], space, "doubleton i");
      int j = outcome_index(d["j"], space, "doubleton j");
      if (i == j) throw InputError("doubleton needs two distinct outcomes");
      if (i > j) std::swap(i, j);
      const auto k = pair_index(n, i, j);
      if (seen[k]) throw InputError("doubleton {" + format_event(Event::pair(i, j)) + "} listed twice");
      seen[k] = true;
      doubles[k] = scalar(d["value"], "doubleton value");
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (!seen[pair_index(n, i, j)]) throw InputError("missing doubleton {" + format_event(Event::pair(i, j)) + "}");
      }
    }
  }
  return SignedQMeasure(space, std::move(singles), std::move(doubles));
}

json measure_to_json(const SignedQMeasure& m) {
  const int n = m.space().size();
  json singles = json::array();
  for (const auto& v : m.singles()) singles.push_back(str(v));
  json doubles = json::array();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) doubles.push_back({{"i", i + 1}, {"j", j + 1}, {"value", str(m.pair_value(i, j))}});
  }
  return {{"n", n}, {"singletons", singles}, {"doubletons", doubles}};
}

Coevent coevent_from_json(const json& doc) {
  const auto space = space_of(doc);
  if (doc.contains("monomials")) {
    const auto& list = doc["monomials"];
    if (!list.is_array()) throw InputError("\"monomials\" must be an array");
    PolynomialForm p;
    for (const auto& mono : list) {
      if (!mono.is_array()) throw InputError("each monomial must be an array of outcome indices");
      Event s;
      for (const auto& i : mono) s = s | Event::singleton(outcome_index(i, space, "monomial"));
      p.monomials.push_back(s);
    }
    std::sort(p.monomials.begin(), p.monomials.end());
    return Coevent::from_polynomial(space, p);
  }
  if (doc.contains("truth")) {
    const auto& truth = doc["truth"];
    if (!truth.is_object()) throw InputError("\"truth\" must be an object");
    if (space.size() > 20) throw ResourceError("truth-table input capped at n=20");
    std::vector<std::uint64_t> words(table_words(space.size()));
    std::set<Mask> seen;
    for (const auto& [key, v] : truth.items()) {
      const Event e = parse_event(key, space);
      bool bit = false;
      if (v.is_boolean()) {
        bit = v.get<bool>();
      } else if (v.is_number_integer() && (v.get<int>() == 0 || v.get<int>() == 1)) {
        bit = v.get<int>() == 1;
      } else {
        throw InputError("truth value for {" + key + "} must be 0 or 1");
      }
      if (!seen.insert(e.bits).second) throw InputError("truth table lists {" + format_event(e) + "} twice");
      if (e.empty()) {
        if (bit) throw InputError("a coevent is 0 on the empty event");
        continue;
      }
      if (bit) words[e.bits >> 6] |= std::uint64_t{1} << (e.bits & 63U);
    }
    for (Mask a = 1; a <= space.full_mask(); ++a) {
      if (!seen.contains(a)) throw InputError("truth table is missing event {" + format_event(Event{a}) + "}");
    }
    return Coevent::from_truth_bits(space, words);
  }
  throw InputError("coevent needs \"monomials\" or \"truth\"");
}

json monomials_to_json(const Coevent& phi) {
  json list = json::array();
  for (const Event s : phi.polynomial().monomials) {
    json mono = json::array();
    for (const int i : s.outcomes()) mono.push_back(i + 1);
    list.push_back(mono);
  }
  return list;
}

json coevent_to_json(const Coevent& phi) { return {{"n", phi.space().size()}, {"monomials", monomials_to_json(phi)}}; }

std::vector<Coevent> logic_from_json(const json& doc, const OutcomeSpace& space) {
  const json* list = &doc;
  if (doc.is_object()) {
    if (space_of(doc).size() != space.size()) throw InputError("logic file has a different n than the measure");
    if (!doc.contains("coevents")) throw InputError("logic file needs a \"coevents\" array");
    list = &doc["coevents"];
  }
  if (!list->is_array()) throw InputError("logic must be an array of coevents");
  std::vector<Coevent> out;
  for (const auto& item : *list) {
    json entry = item;
    if (entry.is_object() && !entry.contains("n")) entry["n"] = space.size();
    auto phi = coevent_from_json(entry);
    if (!(phi.space() == space)) throw InputError("logic coevent has a different n than the measure");
    out.push_back(std::move(phi));
  }
  return out;
}

json events_to_json(const std::vector<Event>& events) {
  std::vector<Event> sorted = events;
  std::sort(sorted.begin(), sorted.end());
  json out = json::array();
  for (const Event e : sorted) out.push_back(format_event(e));
  return out;
}

json subalgebra_to_json(const Subalgebra& s) { return events_to_json(s.members()); }

json transfer_to_json(const TransferResult& r) {
  if (r.feasible) {
    json nu = json::array();
    for (const auto& t : r.nu.terms()) nu.push_back({{"monomials", monomials_to_json(t.coevent)}, {"weight", str(t.weight)}});
    return {{"feasible", true}, {"nu", nu}};
  }
  json cert = json::object();
  for (const auto& [e, v] : r.certificate) cert[format_event(e)] = str(v);
  return {{"feasible", false}, {"certificate", cert}};
}

json decomposition_to_json(const Decomposition& d) {
  json out = json::array();
  for (const auto& t : d.terms) {
    out.push_back({{"weight", str(t.weight)},
                   {"measure", measure_to_json(t.component.measure)},
                   {"monomials", monomials_to_json(t.component.coevent)}});
  }
  return out;
}

}  // namespace qm::json_io
