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

#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mcvx {

// Ordered index pair (i, j), 0-based. As an exchange neighbor it means
// x - e_i + e_j is feasible; as an arc it means w(i) > w(j) is required.
using Arc = std::pair<int, int>;

// Integer point of Z^d.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<int> coords) : coords_(std::move(coords)) {}
  Point(std::initializer_list<int> coords) : coords_(coords) {}

  static Point zeros(std::size_t d) { return Point(std::vector<int>(d, 0)); }
  static Point unit(std::size_t d, std::size_t i);

  std::size_t dimension() const { return coords_.size(); }
  int operator[](std::size_t i) const { return coords_[i]; }
  int& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<int>& coords() const { return coords_; }

  // x - e_remove + e_add.
  Point exchanged(int remove, int add) const;
  long long sum() const;

  friend auto operator<=>(const Point&, const Point&) = default;
  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<int> coords_;
};

// <w, x> accumulated in extended precision.
long double dot(std::span<const double> w, const Point& x);

std::string to_string(const Point& p);
std::ostream& operator<<(std::ostream& os, const Point& p);

}  // namespace mcvx
