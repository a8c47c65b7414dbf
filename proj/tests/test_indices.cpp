#include <map>
#include <string>

#include "doctest.h"
#include "graphlab/indices.hpp"

using namespace graphlab;

namespace {

using Expected = std::map<std::string, std::string>;

// Frozen from tests/oracle/brute_force.py (Floyd-Warshall over concrete divisors).
const std::map<std::uint64_t, Expected>& oracle_values() {
  static const std::map<std::uint64_t, Expected> values{
      {1,
       {{"wiener", "0"}, {"hyper_wiener", "0"}, {"harary", "0"}, {"zagreb1", "0"}, {"zagreb2", "0"},
        {"degree_distance", "0"}, {"gutman", "0"}, {"balaban", "0"}, {"harmonic", "0"}, {"randic", "0"},
        {"r1", "1"}, {"r2", "0"}, {"r3", "0"}, {"mostar", "0"}}},
      {2,
       {{"wiener", "1"}, {"hyper_wiener", "1"}, {"harary", "1"}, {"zagreb1", "2"}, {"zagreb2", "1"},
        {"degree_distance", "2"}, {"gutman", "1"}, {"balaban", "1"}, {"harmonic", "1"}, {"randic", "1"},
        {"r1", "8"}, {"r2", "4"}, {"r3", "4"}, {"mostar", "0"}}},
      {6,
       {{"wiener", "7"}, {"hyper_wiener", "8"}, {"harary", "11/2"}, {"zagreb1", "26"}, {"zagreb2", "33"},
        {"degree_distance", "34"}, {"gutman", "41"}, {"balaban", "5/9 + 10/9*sqrt(3)"}, {"harmonic", "29/15"},
        {"randic", "1/3 + 2/3*sqrt(6)"}, {"r1", "2074"}, {"r2", "2337"}, {"r3", "218"}, {"mostar", "4"}}},
      {12,
       {{"wiener", "18"}, {"hyper_wiener", "21"}, {"harary", "27/2"}, {"zagreb1", "100"}, {"zagreb2", "205"},
        {"degree_distance", "140"}, {"gutman", "271"},
        {"balaban", "11/20 + 1/5*sqrt(30) + 6/35*sqrt(35) + 1/14*sqrt(42)"}, {"harmonic", "3667/1260"},
        {"randic", "9/20 + 1/3*sqrt(3) + 2/5*sqrt(5) + 4/15*sqrt(15)"}, {"r1", "5766724"}, {"r2", "9967957"},
        {"r3", "22076"}, {"mostar", "14"}}},
      {30,
       {{"wiener", "37"}, {"hyper_wiener", "46"}, {"harary", "47/2"}, {"zagreb1", "194"}, {"zagreb2", "481"},
        {"degree_distance", "338"}, {"gutman", "769"}, {"balaban", "38/35 + 114/455*sqrt(70)"},
        {"harmonic", "589/154"}, {"randic", "23/14 + 6/7*sqrt(7)"}, {"r1", "16773989018"},
        {"r2", "33244258369"}, {"r3", "1606882"}, {"mostar", "36"}}},
      {210,
       {{"wiener", "175"}, {"hyper_wiener", "230"}, {"harary", "185/2"}, {"zagreb1", "1178"},
        {"zagreb2", "5145"}, {"degree_distance", "2722"}, {"gutman", "10577"},
        {"balaban", "1313/1683 + 13/51*sqrt(10) + 130/561*sqrt(33) + 104/1683*sqrt(330)"},
        {"harmonic", "36367/4830"}, {"randic", "47/30 + 2*sqrt(3) + 2/5*sqrt(10) + 4/15*sqrt(30)"},
        {"r1", "9322761901462793860468154578"}, {"r2", "29734613051754474595419062505"},
        {"r3", "2817928042921322"}, {"mostar", "268"}}},
      {2310,
       {{"wiener", "781"}, {"hyper_wiener", "1066"}, {"harary", "707/2"}, {"zagreb1", "6482"},
        {"zagreb2", "47401"}, {"degree_distance", "19682"}, {"gutman", "124201"},
        {"balaban", "4083483/3355378 + 4220/72943*sqrt(403) + 5275/54119*sqrt(598) + 2110/129053*sqrt(1426)"},
        {"harmonic", "45901681/3106324"}, {"randic", "531/124 + 5/2*sqrt(10) + 5/31*sqrt(31) + 4/31*sqrt(310)"},
        {"r1", "2692292779628262834585271795712233087614019908403200000000000005349002"},
        {"r2", "13101984459960045579389095641089372935623006801100800000000000034887721"},
        {"r3", "3381218157736755200000000000000171602"}, {"mostar", "1740"}}},
  };
  return values;
}

void check_against_oracle(const IndexEngine& engine, const Expected& expected) {
  const IndexReport report = compute_report(engine);
  REQUIRE(report.size() == kAllIndices.size());
  for (const auto& [id, value] : report) {
    const std::string name(index_name(id));
    CAPTURE(name);
    CHECK(value.to_string() == expected.at(name));
  }
}

}  // namespace

TEST_CASE("index names round-trip") {
  for (const IndexId id : kAllIndices) {
    CHECK(parse_index_name(index_name(id)) == id);
  }
  CHECK_FALSE(parse_index_name("wiener_index").has_value());
  CHECK_FALSE(parse_index_name("").has_value());
}

TEST_CASE("general divisor graphs match the brute-force oracle") {
  for (const auto& [n, expected] : oracle_values()) {
    CAPTURE(n);
    check_against_oracle(IndexEngine(build_general(n)), expected);
  }
}

TEST_CASE("Gamma_k matches the brute-force oracle through the fast path") {
  const std::map<unsigned, std::uint64_t> primorial{{0, 1}, {1, 2}, {2, 6}, {3, 30}, {4, 210}, {5, 2310}};
  for (const auto& [k, n] : primorial) {
    CAPTURE(k);
    check_against_oracle(IndexEngine(build_gamma(k)), oracle_values().at(n));
    check_against_oracle(IndexEngine(build_gamma(k).to_simple()), oracle_values().at(n));
  }
}

TEST_CASE("Gamma_3 values carry the expected kinds") {
  const IndexEngine g(build_gamma(3));
  CHECK(wiener(g).kind() == IndexValue::Kind::integer);
  CHECK(harary(g).kind() == IndexValue::Kind::rational);
  CHECK(harmonic(g).kind() == IndexValue::Kind::rational);
  CHECK(randic(g).kind() == IndexValue::Kind::radical);
  CHECK(balaban(g).kind() == IndexValue::Kind::radical);
  CHECK(std::vector<std::uint64_t>(g.transmissions().begin(), g.transmissions().end()) ==
        std::vector<std::uint64_t>{7, 10, 10, 10, 10, 10, 10, 7});
}

TEST_CASE("R-degrees of Gamma_3") {
  const IndexEngine g(build_gamma(3));
  // Degrees 7,4,4,4,4,4,4,7: total 38, product 7^2 * 4^6.
  const BigInt product = BigInt(49) * 4096;
  CHECK(r_degree(g, 0).sum_degree == 31);
  CHECK(r_degree(g, 0).product_degree == product / 7);
  CHECK(r_degree(g, 1).sum_degree == 34);
  CHECK(r_degree(g, 1).product_degree == product / 4);
  const auto all = r_degrees(g);
  CHECK(all.size() == 8);
  CHECK(all[7].r() == BigInt(7) * 4096 + 31);
  CHECK(all[3].r() == BigInt(49) * 1024 + 34);
}

TEST_CASE("edge-sum and pair-sum identities for k = 2..8") {
  for (unsigned k = 2; k <= 8; ++k) {
    CAPTURE(k);
    const IndexEngine g(build_gamma(k));
    const auto degrees = g.degrees();

    BigInt transmission_total = 0;
    for (const auto t : g.transmissions()) {
      transmission_total += t;
    }
    CHECK(IndexValue(transmission_total) == IndexValue(BigInt(2) * wiener(g).as_integer()));

    BigInt edge_degree_sum = 0;
    for (const Edge& e : g.edges()) {
      edge_degree_sum += degrees[e.u] + degrees[e.v];
    }
    CHECK(IndexValue(edge_degree_sum) == zagreb1(g));

    const BigInt m2 = zagreb2(g).as_integer();
    const BigInt m1 = zagreb1(g).as_integer();
    CHECK(gutman(g) == IndexValue(BigInt(2 * pair_degree_product_sum(g) - m2)));
    CHECK(degree_distance(g) == IndexValue(BigInt(2 * pair_degree_sum(g) - m1)));
  }
}

TEST_CASE("indices are invariant under a change of prime basis for k <= 6") {
  for (unsigned k = 0; k <= 6; ++k) {
    CAPTURE(k);
    std::vector<BigInt> primes;
    BigInt p = 100;
    for (unsigned i = 0; i < k; ++i) {
      mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
      primes.push_back(p);
    }
    const IndexReport plain = compute_report(IndexEngine(build_gamma(k)));
    const IndexReport small = compute_report(IndexEngine(build_gamma(k, PrimeBasis::first(k))));
    const IndexReport large = compute_report(IndexEngine(build_gamma(k, PrimeBasis(primes))));
    CHECK(plain == small);
    CHECK(plain == large);
  }
}

TEST_CASE("compute_report honours the requested subset") {
  const IndexEngine g(build_gamma(2));
  const std::vector<IndexId> ids{IndexId::mostar, IndexId::wiener};
  const IndexReport report = compute_report(g, ids);
  CHECK(report.size() == 2);
  CHECK(report.at(IndexId::wiener) == IndexValue(7));
  CHECK(report.at(IndexId::mostar) == IndexValue(4));
}
