#include "walkarea/walk.hpp"

#include <stdexcept>

namespace walkarea {

std::int64_t algebraic_area(const Walk& w) {
  if (w.length() % 2 != 0 || !w.is_closed())
    throw std::invalid_argument("algebraic_area: walk is not a closed even-length loop");
  // Shoelace: each step from p with displacement s contributes p ^ s
  // (cross product) to twice the signed area.
  std::int64_t x = 0, y = 0, twice_area = 0;
  for (Step s : w.steps) {
    const std::int64_t dx = step_dx(s), dy = step_dy(s);
    twice_area += x * dy - y * dx;
    x += dx;
    y += dy;
  }
  // For a closed lattice loop the shoelace sum is even (the enclosed
  // algebraic area is an integer number of plaquettes).
  if (twice_area % 2 != 0)
    throw std::invalid_argument("algebraic_area: odd shoelace sum on a closed loop");
  return twice_area / 2;
}

std::int64_t max_area(int n) {
  if (n < 0 || n % 2 != 0)
    throw std::invalid_argument("max_area: need even n >= 0");
  // Isoperimetric rectangle bound floor(n/4)*ceil(n/4); attained by the
  // closest-to-square rectangle with perimeter n.
  return static_cast<std::int64_t>(n / 4) * ((n + 3) / 4);
}

Walk reversed(const Walk& w) {
  Walk r;
  r.steps.reserve(w.steps.size());
  for (auto it = w.steps.rbegin(); it != w.steps.rend(); ++it)
    r.steps.push_back(negate(*it));
  return r;
}

Walk rotated90(const Walk& w) {
  Walk r;
  r.steps.reserve(w.steps.size());
  for (Step s : w.steps) {
    switch (s) {
      case Step::PlusX:  r.steps.push_back(Step::PlusY); break;
      case Step::PlusY:  r.steps.push_back(Step::MinusX); break;
      case Step::MinusX: r.steps.push_back(Step::MinusY); break;
      case Step::MinusY: r.steps.push_back(Step::PlusX); break;
    }
  }
  return r;
}

Walk mirrored(const Walk& w) {
  Walk r;
  r.steps.reserve(w.steps.size());
  for (Step s : w.steps) {
    switch (s) {
      case Step::PlusY:  r.steps.push_back(Step::MinusY); break;
      case Step::MinusY: r.steps.push_back(Step::PlusY); break;
      default:           r.steps.push_back(s); break;
    }
  }
  return r;
}

}  // namespace walkarea
