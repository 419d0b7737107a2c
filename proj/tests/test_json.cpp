#include "doctest.h"
#include "helpers.hpp"
#include "tabtype/bridge.hpp"
#include "tabtype/exchange.hpp"
#include "tabtype/json_io.hpp"
#include "tabtype/partition.hpp"
#include "tabtype/permutation.hpp"
#include "tabtype/schur.hpp"

using namespace tabtype;

TEST_CASE("diagram json round trip") {
  Diagram d({{1, 1}, {1, 3}, {2, 1}});
  Json j = to_json(d);
  CHECK(j == Json::parse(R"({"boxes":[[1,1],[1,3],[2,1]]})"));
  CHECK(diagram_from_json(j) == d);
  // Unsorted input is tolerated.
  CHECK(diagram_from_json(Json::parse(R"({"boxes":[[2,1],[1,3],[1,1]]})")) == d);
  // A bare array works too.
  CHECK(diagram_from_json(Json::parse(R"([[1,1],[1,3],[2,1]])")) == d);
}

TEST_CASE("type json round trip") {
  TypeFilling t = make_type({{{1, 1}, 1}, {{1, 2}, 0}, {{2, 1}, 0}});
  Json j = to_json(t);
  CHECK(j == Json::parse(R"({"boxes":[[1,1,1],[1,2,0],[2,1,0]]})"));
  CHECK(type_filling_from_json(j) == t);
}

TEST_CASE("tableau json round trip") {
  Tableau t = make_tableau({{{1, 1}, 2}, {{1, 2}, 1}, {{2, 1}, 3}});
  Json j = to_json(t);
  CHECK(j == Json::parse(R"({"boxes":[[1,1,2],[1,2,1],[2,1,3]]})"));
  CHECK(tableau_from_json(j) == t);
}

TEST_CASE("partition and permutation json") {
  CHECK(to_json(Partition({3, 1})) == Json::parse("[3,1]"));
  CHECK(partition_from_json(Json::parse("[3,1]")) == Partition({3, 1}));
  CHECK(partition_from_json(Json::parse("[]")) == Partition(std::vector<int>{}));
  CHECK(to_json(Permutation({2, 3, 1})) == Json::parse("[2,3,1]"));
  CHECK(permutation_from_json(Json::parse("[2,3,1]")) == Permutation({2, 3, 1}));
}

TEST_CASE("wrapped payloads are unwrapped") {
  // The shapes emitted by the command-line tool wrap the core objects.
  Json wrapped = Json::parse(R"({"shape":[[1,1],[1,2],[2,1]],"count":2})");
  CHECK(diagram_from_json(wrapped) == Partition({2, 1}).ferrers());

  Json slam = Json::parse(R"({"k":2,"s_lambda":{"boxes":[[1,1],[1,2],[2,1]]},"sigma":[3,2,1]})");
  CHECK(diagram_from_json(slam) == Partition({2, 1}).ferrers());

  Json typed = Json::parse(R"({"shape":[[1,1]],"type":{"boxes":[[1,1,0]]}})");
  CHECK(type_filling_from_json(typed) == standard_type(Partition({1}).ferrers()));
}

TEST_CASE("malformed json is rejected with a diagnostic") {
  CHECK(throws_code([] { diagram_from_json(Json::parse(R"({"boxes":[[1]]})")); },
                    "malformed-input"));
  CHECK(throws_code([] { diagram_from_json(Json::parse(R"("nope")")); }, "malformed-input"));
  CHECK(throws_code([] { type_filling_from_json(Json::parse(R"({"boxes":[[1,1]]})")); },
                    "malformed-input"));
  CHECK(throws_code([] { permutation_from_json(Json::parse(R"([1,"x"])")); },
                    "malformed-input"));
}

TEST_CASE("polynomial json lists terms lexicographically") {
  Polynomial p(2);
  p.add_term({1, 2}, 1);
  p.add_term({2, 1}, 1);
  Json j = to_json(p);
  CHECK(j == Json::parse(R"({"m":2,"terms":[{"exps":[1,2],"coef":1},{"exps":[2,1],"coef":1}]})"));
}

TEST_CASE("ascii rendering") {
  CHECK(render_diagram(Diagram({{1, 1}, {1, 3}, {2, 1}})) == "# . #\n# . .\n");
  TypeFilling t = make_type({{{1, 1}, 1}, {{1, 2}, 0}, {{2, 1}, 0}});
  CHECK(render_type(t) == "1 0\n0 .\n");
  Tableau tab = make_tableau({{{1, 1}, 2}, {{1, 2}, 1}, {{2, 1}, 3}});
  CHECK(render_tableau(tab) == "2 1\n3 .\n");
  CHECK(render_diagram(Diagram(std::vector<Box>{})) == "(empty)\n");
}
