/*
 *   Copyright 2026 The operad_lab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef OPERAD_LAB_ERRORS_HPP
#define OPERAD_LAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace operad_lab {

/// Arithmetic or linear algebra attempted across two different fields.
class field_mismatch : public std::invalid_argument {
 public:
  explicit field_mismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// Arity mismatch, slot index out of range, or wrong number of arguments.
class arity_error : public std::invalid_argument {
 public:
  explicit arity_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed textual or JSON input.
class parse_error : public std::invalid_argument {
 public:
  explicit parse_error(const std::string& what) : std::invalid_argument(what) {}
};

/// A configured size cap (basis enumeration, tensor size) was exceeded.
class limit_error : public std::length_error {
 public:
  explicit limit_error(const std::string& what) : std::length_error(what) {}
};

}  // namespace operad_lab

#endif  // OPERAD_LAB_ERRORS_HPP
