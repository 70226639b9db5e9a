// Copyright 2026 The sblab Authors
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

#ifndef SBLAB_ERRORS_HPP_
#define SBLAB_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sblab {

// Base of every error raised by the library. Callers that only need a message
// catch this; the subclasses carry the structured details.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class SizeError : public Error {
 public:
  using Error::Error;
};

class ColouringNotFound : public Error {
 public:
  using Error::Error;
};

class PartitionBudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ColumnGroupingFailed : public Error {
 public:
  ColumnGroupingFailed(const std::string& what, int reduced_min_degree)
      : Error(what), reduced_min_degree(reduced_min_degree) {}
  int reduced_min_degree;
};

class AssignmentFailed : public Error {
 public:
  AssignmentFailed(const std::string& item, const std::string& detail)
      : Error("assignment failed at " + item + ": " + detail), item(item) {}
  std::string item;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(int row, int column, int moved, double allowed)
      : Error("rebalance budget exceeded at cluster (" + std::to_string(row) + "," +
              std::to_string(column) + "): " + std::to_string(moved) + " moves > " +
              std::to_string(allowed)),
        row(row),
        column(column) {}
  int row;
  int column;
};

class NoCommonNeighbour : public Error {
 public:
  NoCommonNeighbour(const std::string& what, int step, std::vector<int> blocking)
      : Error(what), step(step), blocking(std::move(blocking)) {}
  int step;
  std::vector<int> blocking;
};

class NoEligibleRoot : public Error {
 public:
  using Error::Error;
};

class EmptyCandidates : public Error {
 public:
  EmptyCandidates(const std::string& what, int vertex) : Error(what), vertex(vertex) {}
  int vertex;
};

class RetriesExhausted : public Error {
 public:
  using Error::Error;
};

class InfeasibleTarget : public Error {
 public:
  using Error::Error;
};

// A self-test of a construction found a property violated.
class AssertionFailed : public Error {
 public:
  AssertionFailed(const std::string& property, const std::string& detail)
      : Error(property + ": " + detail), property(property) {}
  std::string property;
};

}  // namespace sblab

#endif  // SBLAB_ERRORS_HPP_
