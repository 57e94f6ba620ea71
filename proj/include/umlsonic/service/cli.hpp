// Copyright 2026 The umlsonic Authors
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

#ifndef UMLSONIC_SERVICE_CLI_HPP
#define UMLSONIC_SERVICE_CLI_HPP

#include <iosfwd>

namespace umlsonic::service {

// sysexits-style codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitNoInput = 66;
inline constexpr int kExitInternal = 70;

/// umlsonic validate | render | cue | analyze | discriminate | serve.
/// Output goes to `out`, diagnostics to `err`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace umlsonic::service

#endif  // UMLSONIC_SERVICE_CLI_HPP
