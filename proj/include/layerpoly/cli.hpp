/*
   Copyright 2026 The layerpoly Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace layerpoly::cli {

/// Exit statuses of run().
enum Exit : int {
    kOk = 0,
    kFailed = 1,  // verification residual or numeric check failed
    kUsage = 2,   // bad flags or malformed input
};

/// Environment variable consulted for the default --output format.
inline constexpr const char* kOutputEnv = "LAYERPOLY_OUTPUT";

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace layerpoly::cli
