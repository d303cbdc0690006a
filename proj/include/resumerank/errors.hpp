// Copyright 2026 The Resumerank Authors.
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

#ifndef RESUMERANK_ERRORS_HPP_
#define RESUMERANK_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace resumerank {

// Malformed input data: unreadable files, inconsistent ids, empty corpora,
// out-of-range date ranges. The CLI maps this to exit code 2; configuration
// and flag mistakes throw std::invalid_argument and map to exit code 1.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace resumerank

#endif  // RESUMERANK_ERRORS_HPP_
