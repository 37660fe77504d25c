#include "walkarea/distribution.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace walkarea {

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: product of i consecutive integers is divisible by i!
  }
  return r;
}

BigInt AreaDistribution::total() const {
  BigInt t = 0;
  for (const auto& [a, c] : counts) t += c;
  return t;
}

bool AreaDistribution::symmetric() const {
  for (const auto& [a, c] : counts) {
    auto it = counts.find(-a);
    if (it == counts.end() || it->second != c) return false;
  }
  return true;
}

std::int64_t AreaDistribution::max_attained_area() const {
  std::int64_t m = 0;
  for (const auto& [a, c] : counts)
    if (c != 0 && std::llabs(a) > m) m = std::llabs(a);
  return m;
}

BigRat moment(const AreaDistribution& d, int k) {
  if (k < 1 || k > 4) throw std::invalid_argument("moment: k must be in 1..4");
  BigInt num = 0;
  for (const auto& [a, c] : d.counts) {
    BigInt ak = a;
    for (int i = 1; i < k; ++i) ak *= a;
    num += ak * c;
  }
  BigInt tot = d.total();
  if (tot == 0) throw std::invalid_argument("moment: empty distribution");
  return BigRat(num, tot);
}

std::string to_csv(const AreaDistribution& d) {
  std::ostringstream out;
  out << "area,count\n";
  for (const auto& [a, c] : d.counts) out << a << ',' << c.str() << '\n';
  return out.str();
}

std::string to_json(const AreaDistribution& d) {
  // Canonical: fixed key order, counts as decimal strings (they exceed
  // 64-bit near n = 34), areas sorted ascending (std::map order).
  nlohmann::ordered_json j;
  j["N"] = d.n;
  j["total"] = d.total().str();
  auto counts = nlohmann::ordered_json::array();
  for (const auto& [a, c] : d.counts)
    counts.push_back(nlohmann::ordered_json::array({a, c.str()}));
  j["counts"] = std::move(counts);
  return j.dump() + "\n";
}

}  // namespace walkarea
