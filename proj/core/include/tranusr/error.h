// core/include/tranusr/error.h

// Copyright 2026  The tranusr authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TRANUSR_ERROR_H_
#define TRANUSR_ERROR_H_

#include <sstream>
#include <stdexcept>
#include <string>

namespace tranusr {

// Error categories map to distinct CLI exit codes.
enum class ErrorCategory {
  kRuntime = 1,     // shape mismatches, numeric failures, invalid arguments
  kConfig = 3,      // schema-invalid or unreadable config
  kCheckpoint = 4,  // missing/corrupt/mismatched checkpoint
  kData = 5,        // manifest or feature file problems
};

class Error : public std::runtime_error {
 public:
  explicit Error(std::string msg, ErrorCategory cat = ErrorCategory::kRuntime)
      : std::runtime_error(std::move(msg)), category_(cat) {}
  ErrorCategory category() const { return category_; }

 private:
  ErrorCategory category_;
};

namespace internal {
inline void format_into(std::ostringstream&) {}
template <typename T, typename... Rest>
void format_into(std::ostringstream& os, const T& v, const Rest&... rest) {
  os << v;
  format_into(os, rest...);
}
}  // namespace internal

template <typename... Args>
[[noreturn]] void throw_error(ErrorCategory cat, const Args&... args) {
  std::ostringstream os;
  internal::format_into(os, args...);
  throw Error(os.str(), cat);
}

template <typename... Args>
[[noreturn]] void throw_runtime(const Args&... args) {
  throw_error(ErrorCategory::kRuntime, args...);
}

#define TRANUSR_CHECK(cond, ...)                  \
  do {                                            \
    if (!(cond)) ::tranusr::throw_runtime(__VA_ARGS__); \
  } while (0)

}  // namespace tranusr

#endif  // TRANUSR_ERROR_H_
