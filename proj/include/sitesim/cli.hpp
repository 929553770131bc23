// SPDX-License-Identifier: Apache-2.0
//
// sitesim - LTE / 5G mmWave uplink video simulator for construction sites
// Copyright (C) 2026 The sitesim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef SITESIM_CLI_HPP
#define SITESIM_CLI_HPP

#include <ostream>

namespace sitesim
{

/// Entry point of the command-line tool. Returns the process exit code:
/// 0 on success, 1 on a failed run or invalid config, 2 on a usage error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace sitesim

#endif // SITESIM_CLI_HPP
