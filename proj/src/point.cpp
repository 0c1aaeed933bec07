// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mcvx/point.hpp"

#include <cassert>
#include <numeric>
#include <ostream>
#include <sstream>

namespace mcvx {

Point Point::unit(std::size_t d, std::size_t i) {
  Point p = zeros(d);
  p[i] = 1;
  return p;
}

Point Point::exchanged(int remove, int add) const {
  Point y = *this;
  --y.coords_[remove];
  ++y.coords_[add];
  return y;
}

long long Point::sum() const {
  return std::accumulate(coords_.begin(), coords_.end(), 0LL);
}

long double dot(std::span<const double> w, const Point& x) {
  assert(w.size() == x.dimension());
  long double acc = 0.0L;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (x[i] != 0) acc += static_cast<long double>(w[i]) * x[i];
  }
  return acc;
}

std::string to_string(const Point& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Point& p) {
  os << '(';
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    if (i) os << ',';
    os << p[i];
  }
  return os << ')';
}

}  // namespace mcvx
