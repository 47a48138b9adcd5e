// Copyright 2026 The Hushwave Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HUSHWAVE_ERRORS_H_
#define HUSHWAVE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace hushwave {

// Invalid argument values: out-of-range frequencies, empty inputs, bad
// geometry. The CLI maps these to exit status 1.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A field point coincides with a source element.
class SingularityError : public ParameterError {
 public:
  SingularityError(std::size_t point_index, std::size_t element_index);

  std::size_t point_index() const { return point_index_; }
  std::size_t element_index() const { return element_index_; }

 private:
  std::size_t point_index_;
  std::size_t element_index_;
};

// Malformed input documents (JSON, CSV, WAV, scan logs). Also exit status 1.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was invoked in a state its contract forbids.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Filesystem failures. The CLI maps these to exit status 2.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hushwave

#endif  // HUSHWAVE_ERRORS_H_
