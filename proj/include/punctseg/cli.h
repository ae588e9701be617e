// Copyright 2026 The punctseg Authors. All Rights Reserved.
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

#ifndef PUNCTSEG_CLI_H_
#define PUNCTSEG_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace punctseg {

// Runs one subcommand. args excludes the program name. Data goes to `out`
// or to files, diagnostics to `err`. Returns 0 on success, 1 on a runtime
// error and 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace punctseg

#endif  // PUNCTSEG_CLI_H_
