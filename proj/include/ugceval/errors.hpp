// Copyright 2026 The ugceval Authors
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

#ifndef UGCEVAL_ERRORS_HPP_
#define UGCEVAL_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

#include "ugceval/types.hpp"

namespace ugceval {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MalformedRecord : Error {
  MalformedRecord(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_no(line) {}
  std::size_t line_no;
};

struct DuplicateId : Error {
  explicit DuplicateId(const std::string& segment_id)
      : Error("duplicate segment id: " + segment_id), id(segment_id) {}
  std::string id;
};

struct EmptySource : Error {
  explicit EmptySource(const std::string& segment_id)
      : Error("empty source text in segment: " + segment_id), id(segment_id) {}
  std::string id;
};

struct EncodingError : Error {
  explicit EncodingError(std::size_t line)
      : Error("invalid UTF-8 on line " + std::to_string(line)), line_no(line) {}
  std::size_t line_no;
};

struct UnknownGuidelineSet : Error {
  explicit UnknownGuidelineSet(const std::string& n)
      : Error("unknown guideline set: " + n), name(n) {}
  std::string name;
};

struct MissingKind : Error {
  explicit MissingKind(PhenomenonKind k)
      : Error("guideline set misses kind: " + std::string(snake_name(k))), kind(k) {}
  PhenomenonKind kind;
};

struct UnknownKind : Error {
  explicit UnknownKind(const std::string& t)
      : Error("unknown phenomenon kind: " + t), token(t) {}
  std::string token;
};

struct IllegalPrescribedAction : Error {
  IllegalPrescribedAction(PhenomenonKind k, ActionKind a)
      : Error("illegal prescribed action " + std::string(action_name(a)) +
              " for " + std::string(snake_name(k))),
        kind(k), action(a) {}
  PhenomenonKind kind;
  ActionKind action;
};

struct InvalidThreshold : Error {
  using Error::Error;
};

struct LanguageMismatch : Error {
  using Error::Error;
};

struct AlignmentError : Error {
  using Error::Error;
};

struct LengthMismatch : Error {
  using Error::Error;
};

struct UnknownSegmentId : Error {
  explicit UnknownSegmentId(const std::string& segment_id)
      : Error("unknown segment id in score file: " + segment_id), id(segment_id) {}
  std::string id;
};

struct NonNumericScore : Error {
  using Error::Error;
};

struct UnknownMetric : Error {
  explicit UnknownMetric(const std::string& n)
      : Error("no meaningful-difference threshold for metric: " + n), name(n) {}
  std::string name;
};

struct MissingBaseline : Error {
  explicit MissingBaseline(const std::string& c)
      : Error("no 'none' configuration run for corpus: " + c), corpus(c) {}
  std::string corpus;
};

struct MultiLineInput : Error {
  MultiLineInput() : Error("prompt sentence must be a single line") {}
};

}  // namespace ugceval

#endif  // UGCEVAL_ERRORS_HPP_
