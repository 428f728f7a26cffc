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

#ifndef MFORGE_ERROR_HPP_
#define MFORGE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace mforge {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A brute-force routine was asked to enumerate beyond its configured bound.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

// Malformed input file or value.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace mforge

#endif  // MFORGE_ERROR_HPP_
