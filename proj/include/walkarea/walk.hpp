#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace walkarea {

// One unit step on the square lattice. The two-bit encoding is shared with
// the enumeration kernels: code 0..3 -> +x, -x, +y, -y.
enum class Step : std::uint8_t { PlusX = 0, MinusX = 1, PlusY = 2, MinusY = 3 };

constexpr int step_dx(Step s) {
  return s == Step::PlusX ? 1 : (s == Step::MinusX ? -1 : 0);
}

constexpr int step_dy(Step s) {
  return s == Step::PlusY ? 1 : (s == Step::MinusY ? -1 : 0);
}

// Involution: negate(negate(s)) == s.
constexpr Step negate(Step s) {
  return static_cast<Step>(static_cast<std::uint8_t>(s) ^ 1u);
}

struct Walk {
  std::vector<Step> steps;

  int length() const { return static_cast<int>(steps.size()); }

  std::pair<std::int64_t, std::int64_t> end_position() const {
    std::int64_t x = 0, y = 0;
    for (Step s : steps) {
      x += step_dx(s);
      y += step_dy(s);
    }
    return {x, y};
  }

  bool is_closed() const { return end_position() == std::pair<std::int64_t, std::int64_t>{0, 0}; }
};

// Signed shoelace area of a closed walk, in plaquette units. The running sum
// sum_k p_{k-1} ^ s_k is twice the area and is always even for closed loops.
// Throws std::invalid_argument for open walks or odd length.
std::int64_t algebraic_area(const Walk& w);

// Isoperimetric maximum of |A| over closed loops of even length n:
// floor(n/4) * ceil(n/4). Validated against the brute-force oracle.
std::int64_t max_area(int n);

Walk reversed(const Walk& w);
Walk rotated90(const Walk& w);   // +x -> +y -> -x -> -y -> +x
Walk mirrored(const Walk& w);    // reflection across the x axis

}  // namespace walkarea
