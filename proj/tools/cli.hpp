// Copyright 2026 The catmap Authors
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

// Command-line frontend. `run` is the whole program minus process plumbing,
// so tests can drive it with string arguments and captured streams.
//
// Exit codes: 0 all checks pass, 1 a verification failed, 2 invalid input.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace catmap::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInvalid = 2;

/// args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// "5", "1,4,9", "1..16", or a comma list mixing both. Every value must be
/// >= 1. Result is sorted and deduplicated. Throws catmap::Error(ParseError).
std::vector<std::int64_t> parse_dims(std::string_view text);

}  // namespace catmap::cli
