#pragma once

// JSON documents for measures, coevents and logics. Scalars are rational
// strings, events use the "1,3" text form, and objects serialize with sorted keys.

#include <filesystem>
#include <map>

#include "json.hpp"

#include "qm/coevent.hpp"
#include "qm/classical.hpp"
#include "qm/extremal.hpp"
#include "qm/qmeasure.hpp"
#include "qm/transfer.hpp"

namespace qm::json_io {

using nlohmann::json;

// Throws InputError when the file is missing or not valid JSON.
json load_file(const std::filesystem::path& path);

// {"n", "singletons", "doubletons": [{"i","j","value"}]} or {"n", "table": {event: value}}.
SignedQMeasure measure_from_json(const json& doc);
json measure_to_json(const SignedQMeasure& m);

// {"n", "monomials": [[1],[1,2]]} or {"n", "truth": {event: 0|1}} over every nonempty event.
Coevent coevent_from_json(const json& doc);
json coevent_to_json(const Coevent& phi);
json monomials_to_json(const Coevent& phi);

// A list of coevent documents, either a bare array or {"n", "coevents": [...]}.
std::vector<Coevent> logic_from_json(const json& doc, const OutcomeSpace& space);

json events_to_json(const std::vector<Event>& events);
json subalgebra_to_json(const Subalgebra& s);
json transfer_to_json(const TransferResult& r);
json decomposition_to_json(const Decomposition& d);

}  // namespace qm::json_io
