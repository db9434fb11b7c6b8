/*
   Copyright 2026 the springer-lab authors

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

#ifndef SPRINGERLAB_ERRORS_HPP
#define SPRINGERLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sl {

// Exit codes used by the CLI: 2 config, 3 precision/budget, 4 identity.

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& w) : std::runtime_error(w) {}
};

// A coefficient beyond the known precision was needed, or an invariant
// failed to stabilize below the configured ceiling.
struct PrecisionError : std::runtime_error {
    explicit PrecisionError(const std::string& w) : std::runtime_error(w) {}
};

// Enumeration exceeded the configured candidate budget.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& w) : std::runtime_error(w) {}
};

// A value the theory forces failed to hold: precision bug, logic bug, or a
// genuine counterexample.  Always fatal.
struct IdentityError : std::runtime_error {
    explicit IdentityError(const std::string& w) : std::runtime_error(w) {}
};

// A lattice operation left the current window; callers re-window and retry.
struct WindowError : std::runtime_error {
    explicit WindowError(const std::string& w) : std::runtime_error(w) {}
};

}  // namespace sl

#endif
