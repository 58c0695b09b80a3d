#include <doctest.h>

#include <cstdlib>
#include <stdexcept>

#include "srg12/parallel.hpp"

using namespace srg12;

TEST_CASE("parallel_reduce sums exactly for any worker count") {
  for (unsigned w : {1U, 2U, 3U, 8U, 64U}) {
    const auto total = parallel_reduce(10000, Exec{w, {}}, "sum", std::uint64_t{0},
                                       [](std::size_t i, std::uint64_t& acc) { acc += i * i; });
    CHECK(total == 333283335000ULL);
  }
  CHECK(parallel_reduce(0, Exec{4, {}}, "empty", 0, [](std::size_t, int& acc) { acc += 1; }) == 0);
}

TEST_CASE("exceptions from workers propagate") {
  auto body = [](std::size_t i, int&) {
    if (i == 517) throw std::runtime_error("boom");
  };
  CHECK_THROWS_WITH(parallel_reduce(2000, Exec{4, {}}, "fail", 0, body), "boom");
  CHECK_THROWS_WITH(parallel_reduce(2000, Exec{1, {}}, "fail", 0, body), "boom");
}

TEST_CASE("default worker count honours the environment") {
  ::setenv("SRG12_WORKERS", "3", 1);
  CHECK(default_worker_count() == 3);
  ::setenv("SRG12_WORKERS", "0", 1);
  CHECK(default_worker_count() >= 1);
  ::unsetenv("SRG12_WORKERS");
  CHECK(default_worker_count() >= 1);
}
