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

#include <stdexcept>

namespace mcvx {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Point is not a member of the set it was passed with.
class NotInSet : public Error {
 public:
  using Error::Error;
};

// Set parameters violate the family's invariants (including M-convexity of
// explicit point lists).
class InvalidSet : public Error {
 public:
  using Error::Error;
};

// Enumeration would exceed the configured guard. Never truncated silently.
class EnumerationRefused : public Error {
 public:
  using Error::Error;
};

class SelfLoop : public Error {
 public:
  using Error::Error;
};

class CyclicArcs : public Error {
 public:
  using Error::Error;
};

// Exact order-polytope geometry requested above the exact-mode dimension.
class ExactModeRefused : public Error {
 public:
  using Error::Error;
};

// Observed action outside the feasible set; aborts a run.
class ProtocolViolation : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class TraceError : public Error {
 public:
  using Error::Error;
};

}  // namespace mcvx
