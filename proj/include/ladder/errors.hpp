// Copyright 2026 The ladder Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace ladder {

/// Base of every exception thrown by the engine.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a documented precondition or data invariant.
class invalid_input : public error {
 public:
  using error::error;
};

/// An internal cross-check failed. Never a valid outcome; always a bug.
class consistency_error : public error {
 public:
  using error::error;
};

}  // namespace ladder
