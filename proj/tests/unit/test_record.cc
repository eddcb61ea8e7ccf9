#include <doctest.h>

#include <algorithm>
#include <random>

#include "pretzel/record.hpp"
#include "pretzel/selftest.hpp"

using namespace pretzel;

namespace {

std::size_t count_fields(const std::string& line) { return std::count(line.begin(), line.end(), ',') + 1; }

}  // namespace

TEST_CASE("record contents") {
  const PretzelTuple t{-3, -7, -19, 3, 47};
  const auto r = make_record(t, evaluate(t));
  CHECK(r.verdict == "NOT_SLICE");
  CHECK(r.reason == "coset_coverage");
  CHECK(r.det == "9801");
  CHECK(r.sigma == 0);
  REQUIRE(r.solutions.size() == 1);
  CHECK(r.solutions[0].solution == std::vector<long>{1, 0, 0, 0, 2, -1});
  CHECK(r.solutions[0].R == 99);
  CHECK(r.normalized == std::vector<int>{3, 7, 19, 3, 47});

  const auto j = to_json(r).dump();
  CHECK(j.rfind("{\"tuple\":[-3,-7,-19,3,47],\"key\":[-19,-7,-3,3,47],\"class\":\"odd_knot\","
                "\"verdict\":\"NOT_SLICE\",\"reason\":\"coset_coverage\"", 0) == 0);
}

TEST_CASE("json round trip and csv shape") {
  std::mt19937_64 rng(99);
  std::vector<PretzelTuple> tuples{{2, 4, 6}, {3, -3, 5, -5, 7}, {3, 5, -3, -5, 7}, {2, 3, 5}, {1, -3, -1, 5, -7}};
  for (int i = 0; i < 40; ++i) tuples.push_back(random_odd_knot(rng, 21));
  for (const auto& t : tuples) {
    const auto r = make_record(t, evaluate(t));
    const auto j = to_json(r);
    CHECK(record_from_json(nlohmann::json::parse(j.dump())) == r);
    CHECK(to_json(make_record(t, evaluate(t))).dump() == j.dump());
    CHECK(count_fields(to_csv_row(r)) == count_fields(csv_header()));
  }
}
