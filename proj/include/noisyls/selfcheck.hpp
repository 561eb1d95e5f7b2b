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

#ifndef NOISYLS_SELFCHECK_HPP_
#define NOISYLS_SELFCHECK_HPP_

#include <ostream>

namespace noisyls {

/// Desk-scale property checks behind the `verify` subcommand: coefficient
/// values, tau bounds, auxiliary-function agreement, noise consistency,
/// matroid axioms, and estimator sanity. Prints one line per check; returns
/// false when any check fails.
bool run_selfcheck(std::ostream& out);

}  // namespace noisyls

#endif  // NOISYLS_SELFCHECK_HPP_
