#include <string>

#include "doctest.h"
#include "qm/errors.hpp"
#include "qm/json_io.hpp"
#include "test_helpers.hpp"

using namespace qm;
using namespace qm::testing;
using qm::json_io::json;

namespace {

std::string data(const char* name) { return std::string(QM_EXAMPLES_DIR) + "/" + name; }

}  // namespace

TEST_CASE("measure documents") {
  const auto m = json_io::measure_from_json(json_io::load_file(data("one_one_zero.json")));
  CHECK(m == measure(2, {1, 1}, {0}));
  CHECK(json_io::measure_from_json(json_io::load_file(data("one_one_zero_table.json"))) == m);
  CHECK(json_io::measure_from_json(json_io::measure_to_json(m)) == m);
  CHECK(json_io::measure_to_json(m).dump() ==
        R"({"doubletons":[{"i":1,"j":2,"value":"0"}],"n":2,"singletons":["1","1"]})");

  const auto q = json_io::measure_from_json(json_io::load_file(data("quarter.json")));
  CHECK(q.single(0) == frac(1, 4));

  const json ints = json::parse(R"({"n":2,"singletons":[1,2],"doubletons":[{"i":2,"j":1,"value":-3}]})");
  CHECK(json_io::measure_from_json(ints) == measure(2, {1, 2}, {-3}));
  CHECK(json_io::measure_from_json(json::parse(R"({"n":1,"singletons":["5"]})")) == measure(1, {5}, {}));
}

TEST_CASE("malformed measure documents") {
  CHECK_THROWS_AS(json_io::load_file(data("malformed.json")), InputError);
  CHECK_THROWS_AS(json_io::load_file(data("does_not_exist.json")), InputError);
  CHECK_THROWS_AS(json_io::measure_from_json(json_io::load_file(data("missing_doubleton.json"))), InputError);
  CHECK_THROWS_AS(json_io::measure_from_json(json_io::load_file(data("bad_table.json"))), Grade2Violation);
  CHECK_THROWS_AS(json_io::measure_from_json(json::parse(R"({"singletons":[]})")), InputError);
  CHECK_THROWS_AS(json_io::measure_from_json(json::parse(R"({"n":2,"singletons":["1"]})")), InputError);
  CHECK_THROWS_AS(json_io::measure_from_json(json::parse(R"({"n":2,"singletons":["1","x"],"doubletons":[]})")),
                  InputError);
  CHECK_THROWS_AS(
      json_io::measure_from_json(json::parse(R"({"n":2,"singletons":["1","1"],"doubletons":[{"i":1,"j":3,"value":"0"}]})")),
      InputError);
  CHECK_THROWS_AS(
      json_io::measure_from_json(json::parse(
          R"({"n":2,"singletons":["1","1"],"doubletons":[{"i":1,"j":2,"value":"0"},{"i":2,"j":1,"value":"0"}]})")),
      InputError);
  CHECK_THROWS_AS(json_io::measure_from_json(json::parse(R"({"n":2,"table":{"1":"1","2":"1"}})")), InputError);
}

TEST_CASE("coevent documents") {
  const auto psi = json_io::coevent_from_json(json_io::load_file(data("psi.json")));
  CHECK(psi.polynomial().monomials == std::vector<Event>{Event{1}, Event{2}});
  CHECK(json_io::coevent_to_json(psi).dump() == R"({"monomials":[[1],[2]],"n":3})");
  CHECK(json_io::coevent_from_json(json_io::coevent_to_json(psi)) == psi);

  const auto x = json_io::coevent_from_json(json_io::load_file(data("xor_truth.json")));
  CHECK(x.polynomial().monomials == std::vector<Event>{Event{1}, Event{2}});

  // Monomials may be listed in any order.
  CHECK(json_io::coevent_from_json(json::parse(R"({"n":2,"monomials":[[2,1],[1]]})")).polynomial().monomials ==
        std::vector<Event>{Event{1}, Event{3}});

  CHECK_THROWS_AS(json_io::coevent_from_json(json::parse(R"({"n":2,"monomials":[[]]})")), InputError);
  CHECK_THROWS_AS(json_io::coevent_from_json(json::parse(R"({"n":2,"monomials":[[1],[1]]})")), InputError);
  CHECK_THROWS_AS(json_io::coevent_from_json(json::parse(R"({"n":2,"monomials":[[3]]})")), InputError);
  CHECK_THROWS_AS(json_io::coevent_from_json(json::parse(R"({"n":2,"truth":{"1":1,"2":1}})")), InputError);
  CHECK_THROWS_AS(json_io::coevent_from_json(json::parse(R"({"n":2,"truth":{"1":2,"2":1,"1,2":0}})")), InputError);
  CHECK_THROWS_AS(json_io::coevent_from_json(json::parse(R"({"n":2})")), InputError);
}

TEST_CASE("logic documents") {
  const OutcomeSpace s(2);
  const auto logic = json_io::logic_from_json(json_io::load_file(data("three_coevents.json")), s);
  CHECK(logic.size() == 3);
  const auto bare = json_io::logic_from_json(json::parse(R"([{"monomials":[[1]]},{"n":2,"monomials":[[2]]}])"), s);
  CHECK(bare.size() == 2);
  CHECK_THROWS_AS(json_io::logic_from_json(json_io::load_file(data("three_coevents.json")), OutcomeSpace(3)), InputError);
}

TEST_CASE("result documents") {
  CHECK(json_io::events_to_json({Event{3}, Event{0}, Event{4}}).dump() == R"(["","1,2","3"])");

  TransferResult r;
  r.feasible = false;
  r.certificate = {{Event{1}, 1}, {Event{2}, 1}, {Event{3}, -1}};
  CHECK(json_io::transfer_to_json(r).dump() == R"({"certificate":{"1":"1","1,2":"-1","2":"1"},"feasible":false})");

  const OutcomeSpace s(2);
  PolynomialForm p{{Event{1}, Event{2}}};
  r.feasible = true;
  r.nu = TransferMeasure({{Coevent::from_polynomial(s, p), 1}});
  CHECK(json_io::transfer_to_json(r).dump() == R"({"feasible":true,"nu":[{"monomials":[[1],[2]],"weight":"1"}]})");
}
