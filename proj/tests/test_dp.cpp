#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "walkarea/dp.hpp"
#include "walkarea/enumerate.hpp"
#include "walkarea/errors.hpp"
#include "walkarea/kernels.hpp"
#include "walkarea/walk.hpp"

using namespace walkarea;

namespace {

std::map<std::int64_t, BigInt> counts_map(
    std::initializer_list<std::pair<const std::int64_t, std::int64_t>> entries) {
  std::map<std::int64_t, BigInt> m;
  for (const auto& [a, c] : entries) m[a] = BigInt(c);
  return m;
}

BigInt central_binomial_squared(int n) {
  BigInt b = 1;
  for (int k = 1; k <= n / 2; ++k) b = b * (n / 2 + k) / k;
  return b * b;
}

}  // namespace

TEST_CASE("dp matches the frozen small-n histograms") {
  CHECK(dp_counts(0).counts == counts_map({{0, 1}}));
  CHECK(dp_counts(2).counts == counts_map({{0, 4}}));
  CHECK(dp_counts(4).counts == counts_map({{-1, 4}, {0, 28}, {1, 4}}));
  CHECK(dp_counts(6).counts ==
        counts_map({{-2, 12}, {-1, 72}, {0, 232}, {1, 72}, {2, 12}}));
  CHECK(dp_counts(8).counts ==
        counts_map({{-4, 8}, {-3, 48}, {-2, 308}, {-1, 1008}, {0, 2156},
                    {1, 1008}, {2, 308}, {3, 48}, {4, 8}}));
  CHECK(dp_counts(6).total() == 400);
}

TEST_CASE("dp agrees with the brute-force oracle") {
  for (int n = 0; n <= 10; n += 2) {
    CAPTURE(n);
    CHECK(dp_counts(n).counts == enumerate_counts(n).counts);
  }
}

TEST_CASE("enumeration kernels are interchangeable") {
  const Kernel active = resolve_kernel(Kernel::Auto);
  CHECK((active == Kernel::Scalar || active == Kernel::Avx2));
  CHECK(kernel_name(Kernel::Scalar) == std::string("scalar"));

  const auto scalar = enumerate_counts(10, 0, Kernel::Scalar);
#if defined(WALKAREA_HAVE_AVX2)
  if (__builtin_cpu_supports("avx2")) {
    const auto avx2 = enumerate_counts(10, 0, Kernel::Avx2);
    CHECK(scalar.counts == avx2.counts);

    // sub-range with a misaligned head and tail exercises the SIMD remainder
    const int n = 6;
    const std::int64_t amax = max_area(n);
    std::vector<std::uint64_t> h1(2 * amax + 1, 0), h2(2 * amax + 1, 0);
    count_closed_scalar(n, 3, 4091, amax, h1.data());
    count_closed_avx2(n, 3, 4091, amax, h2.data());
    CHECK(h1 == h2);
  }
#endif
  CHECK(scalar.counts == dp_counts(10).counts);
}

TEST_CASE("enumeration is thread-count invariant") {
  const auto one = enumerate_counts(10, 1);
  const auto four = enumerate_counts(10, 4);
  CHECK(one.counts == four.counts);
}

TEST_CASE("totals equal the central binomial squared") {
  for (int n = 0; n <= 24; n += 2) {
    CAPTURE(n);
    CHECK(dp_counts(n).total() == central_binomial_squared(n));
  }
}

TEST_CASE("distributions are symmetric with vanishing odd moments") {
  for (int n : {4, 8, 12, 16, 20}) {
    const auto d = dp_counts(n);
    CAPTURE(n);
    CHECK(d.symmetric());
    CHECK(moment(d, 1) == 0);
    CHECK(moment(d, 3) == 0);
  }
}

TEST_CASE("second moment examples and growth") {
  CHECK(moment(dp_counts(2), 2) == 0);
  CHECK(moment(dp_counts(4), 2) == BigRat(2, 9));
  BigRat prev = 0;
  for (int n = 4; n <= 20; n += 2) {
    const BigRat m2 = moment(dp_counts(n), 2);
    CAPTURE(n);
    CHECK(m2 > prev);  // variance grows with walk length
    prev = m2;
  }
}

TEST_CASE("extreme area is attained and bounded") {
  for (int n = 4; n <= 20; n += 2) {
    const auto d = dp_counts(n);
    CAPTURE(n);
    CHECK(d.max_attained_area() == max_area(n));
    CHECK(d.counts.count(max_area(n)) == 1);      // extreme bin is populated
    CHECK(d.counts.count(max_area(n) + 1) == 0);  // and nothing lies beyond it
  }
}

TEST_CASE("input validation and budgets") {
  CHECK_THROWS_AS(dp_counts(3), std::invalid_argument);
  CHECK_THROWS_AS(dp_counts(-2), std::invalid_argument);
  CHECK_THROWS_AS(dp_counts(kDpMaxN + 2), budget_error);
  CHECK_THROWS_AS(enumerate_counts(3), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_counts(kEnumerateMaxN + 2), budget_error);
}

TEST_CASE("canonical serializations are byte-stable") {
  const auto d4 = dp_counts(4);
  CHECK(to_csv(d4) == "area,count\n-1,4\n0,28\n1,4\n");
  CHECK(to_json(d4) ==
        "{\"N\":4,\"total\":\"36\",\"counts\":[[-1,\"4\"],[0,\"28\"],[1,\"4\"]]}\n");
  const auto d0 = dp_counts(0);
  CHECK(to_csv(d0) == "area,count\n0,1\n");
  CHECK(to_json(d0) == "{\"N\":0,\"total\":\"1\",\"counts\":[[0,\"1\"]]}\n");
}

TEST_CASE("symmetric() detects an asymmetric histogram") {
  AreaDistribution d;
  d.n = 4;
  d.counts[-1] = 4;
  d.counts[0] = 28;
  d.counts[1] = 5;
  CHECK(!d.symmetric());
}
