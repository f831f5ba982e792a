#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "asrbench/errors.hpp"
#include "asrbench/splits.hpp"

using namespace asrbench;

namespace {

std::vector<std::string> entity_set(int n, const std::string& prefix = "e") {
  std::vector<std::string> ids;
  for (int i = 0; i < n; ++i) ids.push_back(prefix + std::to_string(i));
  return ids;
}

std::array<int64_t, 3> count_by_split(const std::map<std::string, Split>& m) {
  std::array<int64_t, 3> counts{};
  for (const auto& [id, s] : m) ++counts[static_cast<size_t>(s)];
  return counts;
}

}  // namespace

TEST_CASE("ten entities at 0.8/0.1/0.1 split exactly 8/1/1") {
  SplitPlan plan;
  plan.seed = 42;
  auto ids = entity_set(10);
  auto m = assign_splits(ids, plan);
  auto counts = count_by_split(m);
  CHECK(counts[0] == 8);
  CHECK(counts[1] == 1);
  CHECK(counts[2] == 1);

  // stable across runs
  CHECK(assign_splits(ids, plan) == m);
}

TEST_CASE("single entity with ratios (1,0,0) goes to train") {
  SplitPlan plan;
  plan.ratios = {1.0, 0.0, 0.0};
  auto m = assign_splits({"only"}, plan);
  CHECK(m.at("only") == Split::kTrain);
}

TEST_CASE("different seeds both satisfy the count bound") {
  auto ids = entity_set(37);
  for (uint64_t seed : {42ULL, 43ULL}) {
    SplitPlan plan;
    plan.seed = seed;
    auto counts = count_by_split(assign_splits(ids, plan));
    CHECK(std::abs(static_cast<double>(counts[0]) - 37 * 0.8) <= 1.0);
    CHECK(std::abs(static_cast<double>(counts[1]) - 37 * 0.1) <= 1.0);
    CHECK(std::abs(static_cast<double>(counts[2]) - 37 * 0.1) <= 1.0);
    CHECK(counts[0] + counts[1] + counts[2] == 37);
  }
  SplitPlan a, b;
  a.seed = 42;
  b.seed = 43;
  // seeds shuffle the assignment (overwhelmingly likely at n=37)
  CHECK(assign_splits(ids, a) != assign_splits(ids, b));
}

TEST_CASE("assignment is independent of input order") {
  auto ids = entity_set(101);
  SplitPlan plan;
  plan.seed = 7;
  auto base = assign_splits(ids, plan);
  std::mt19937 shuffler(1);
  for (int i = 0; i < 3; ++i) {
    std::shuffle(ids.begin(), ids.end(), shuffler);
    CHECK(assign_splits(ids, plan) == base);
  }
}

TEST_CASE("duplicate entity ids are rejected by name") {
  SplitPlan plan;
  std::vector<std::string> ids = {"a", "b", "a"};
  bool threw = false;
  try {
    assign_splits(ids, plan);
  } catch (const CurationError& e) {
    threw = true;
    CHECK(std::string(e.what()).find("'a'") != std::string::npos);
  }
  CHECK(threw);
}

TEST_CASE("bad ratios are config errors") {
  SplitPlan plan;
  plan.ratios = {0.8, 0.1, 0.2};
  CHECK_THROWS_AS(assign_splits(entity_set(5), plan), ConfigError);
  plan.ratios = {1.2, -0.1, -0.1};
  CHECK_THROWS_AS(assign_splits(entity_set(5), plan), ConfigError);
}

TEST_CASE("empty entity list is rejected") {
  SplitPlan plan;
  CHECK_THROWS_AS(assign_splits({}, plan), CurationError);
}

TEST_CASE("split_targets largest remainder") {
  CHECK(split_targets(10, {0.8, 0.1, 0.1}) ==
        std::array<int64_t, 3>{8, 1, 1});
  CHECK(split_targets(1, {1.0, 0.0, 0.0}) ==
        std::array<int64_t, 3>{1, 0, 0});
  auto t = split_targets(7, {0.5, 0.25, 0.25});
  CHECK(t[0] + t[1] + t[2] == 7);
  CHECK(std::abs(t[0] - 3.5) <= 1.0);
}
