#include <stdexcept>

#include "doctest.h"
#include "graphlab/serialize.hpp"

using namespace graphlab;
using nlohmann::ordered_json;

TEST_CASE("index values round-trip through JSON") {
  const std::vector<IndexValue> values{
      IndexValue(37),
      IndexValue(BigInt("-123456789012345678901234567890")),
      IndexValue(BigRational(BigInt(47), BigInt(2))),
      IndexValue(RadicalSum::from_terms({{BigRational(BigInt(23), BigInt(14)), 1}, {BigRational(BigInt(6), BigInt(7)), 7}})),
      IndexValue(RadicalSum::term(BigRational(-3), 30)),
  };
  for (const auto& v : values) {
    const ordered_json doc = to_json(v);
    CHECK(index_value_from_json(doc) == v);
    CHECK(index_value_from_json(ordered_json::parse(doc.dump())) == v);
  }
  CHECK(to_json(IndexValue(37)).dump() == R"({"kind":"integer","value":"37"})");
  CHECK(to_json(values[2]).dump() == R"({"kind":"rational","num":"47","den":"2"})");
  CHECK(to_json(values[3]).at("approx") == "3.910644");
}

TEST_CASE("non-canonical JSON values are rejected") {
  const auto bad = {
      R"({"kind":"rational","num":"2","den":"4"})",
      R"({"kind":"rational","num":"4","den":"2"})",
      R"({"kind":"rational","num":"1","den":"0"})",
      R"({"kind":"integer","value":37})",
      R"({"kind":"integer","value":"3x"})",
      R"({"kind":"radical","terms":[{"num":"1","den":"1","radicand":12}]})",
      R"({"kind":"radical","terms":[{"num":"1","den":"1","radicand":3},{"num":"1","den":"1","radicand":2}]})",
      R"({"kind":"radical","terms":[{"num":"1","den":"1","radicand":1}]})",
      R"({"kind":"radical","terms":[{"num":"0","den":"1","radicand":2}]})",
      R"({"kind":"complex"})",
      R"({"value":"1"})",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(index_value_from_json(ordered_json::parse(text)), std::invalid_argument);
  }
}

TEST_CASE("graph JSON") {
  const ordered_json doc = graph_to_json(build_gamma(2, PrimeBasis::first(2)));
  CHECK(doc.at("k") == 2);
  CHECK(doc.at("vertices").size() == 4);
  CHECK(doc.at("vertices")[3].dump() == R"({"subset":[1,2],"omega":2,"value":"6"})");
  CHECK(doc.at("edges").dump() == "[[0,1],[0,2],[0,3],[1,3],[2,3]]");
  CHECK_FALSE(graph_to_json(build_gamma(2)).at("vertices")[1].contains("value"));

  const ordered_json general = graph_to_json(build_general(4));
  CHECK(general.at("n") == "4");
  CHECK(general.at("edges").dump() == "[[0,1],[0,2],[1,2]]");
}

TEST_CASE("DOT export is deterministic") {
  const std::string expected =
      "graph \"gamma_1\" {\n"
      "  v0 [label=\"1\"];\n"
      "  v1 [label=\"p1\"];\n"
      "  v0 -- v1;\n"
      "}\n";
  CHECK(graph_to_dot(build_gamma(1)) == expected);
  CHECK(graph_to_dot(build_gamma(4)) == graph_to_dot(build_gamma(4)));
  CHECK(graph_to_dot(build_general(6)).find("v3 [label=\"6\"]") != std::string::npos);
}

TEST_CASE("distance matrix CSV") {
  const DprimeGraph g = build_gamma(2);
  const std::string csv = distance_matrix_csv(distance_matrix_fast(g), {"1", "p1", "p2", "p1p2"});
  CHECK(csv ==
        "vertex,1,p1,p2,p1p2\n"
        "1,0,1,1,1\n"
        "p1,1,0,2,1\n"
        "p2,1,2,0,1\n"
        "p1p2,1,1,1,0\n");
  CHECK_THROWS_AS(distance_matrix_csv(distance_matrix_fast(g), {"1"}), std::invalid_argument);
}

TEST_CASE("index reports") {
  const IndexReport report = compute_report(IndexEngine(build_gamma(3)));
  const ordered_json doc = index_report_json({{"family", "gamma"}, {"k", 3}}, report);
  CHECK(doc.at("graph").at("k") == 3);
  CHECK(doc.at("indices").size() == 14);
  CHECK(doc.at("indices").at("harary").dump() == R"({"kind":"rational","num":"47","den":"2"})");
  auto it = doc.at("indices").begin();
  CHECK(it.key() == "wiener");

  const std::string table = index_report_table(report);
  CHECK(table.find("harary") != std::string::npos);
  CHECK(table.find("23.500000") != std::string::npos);
  CHECK(table.find("3.910644") != std::string::npos);
}
