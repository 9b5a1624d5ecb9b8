#include <atomic>
#include <stdexcept>

#include "doctest.h"
#include "gdh/cache.hpp"
#include "gdh/gd.hpp"
#include "gdh/kp.hpp"
#include "gdh/parallel.hpp"
#include "gdh/witten.hpp"

using namespace gdh;

TEST_SUITE("parallel") {

TEST_CASE("index loop visits every index once") {
  std::vector<std::atomic<int>> hits(200);
  for_each_index(hits.size(), Execution::parallel, 4, [&](std::size_t k) { ++hits[k]; });
  for (const auto& h : hits) CHECK(h.load() == 1);
}

TEST_CASE("exceptions cross the parallel loop") {
  auto fn = [](std::size_t k) {
    if (k == 17) throw std::runtime_error("boom");
  };
  CHECK_THROWS_AS(for_each_index(40, Execution::parallel, 4, fn), std::runtime_error);
  CHECK_THROWS_AS(for_each_index(40, Execution::serial, 0, fn), std::runtime_error);
}

TEST_CASE("parallel tables equal the serial reference") {
  KPTable a, b;
  a.ensure(11, Execution::serial);
  b.ensure(11, Execution::parallel, 4);
  CHECK(serialize_tables(a) == serialize_tables(b));

  GDContext c(4), d(4);
  c.ensure(14, Execution::serial);
  d.ensure(14, Execution::parallel, 3);
  CHECK(serialize_tables(c) == serialize_tables(d));
}

TEST_CASE("parallel truncation equals the serial reference") {
  GDContext a(3), b(3);
  const auto s = witten_truncation(a, 1, 4, Execution::serial);
  const auto p = witten_truncation(b, 1, 4, Execution::parallel, 4);
  REQUIRE(s.size() == p.size());
  for (std::size_t g = 0; g < s.size(); ++g) CHECK(s[g] == p[g]);
}

}
