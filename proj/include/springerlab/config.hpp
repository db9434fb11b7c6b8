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

#ifndef SPRINGERLAB_CONFIG_HPP
#define SPRINGERLAB_CONFIG_HPP

#include <memory>
#include <string>
#include <vector>

#include "springerlab/spectral.hpp"

namespace sl {

// Experiment description, parsed from the block text format:
//
//   field { p = 3  e = 1 }
//   hermitian = true
//   branch { n = 2  gamma { eps = [0, 0, 0, 1] } }   # gamma = eps t^3
//   branch { n = 1  gamma { eps = [0, 1] } }
//   partition { left = [1]  right = [2] }            # 1-based branch ids
//   window { n = -1  extra = 8 }
//   precision_ceiling = 128
//   budget = 10000000
//   seed = 1
//
// Integers only; gamma coefficient lists give t^0, t^1, ... with the plain
// and eps parts separate, so the involution action is syntactic.
struct BranchConfig {
    long n = 1;
    std::vector<long> plain;
    std::vector<long> eps;
};

struct ExperimentConfig {
    std::string name;
    unsigned p = 0;
    unsigned e = 1;
    bool hermitian = false;
    long precision_ceiling = 128;
    long budget = 10000000;
    unsigned long long seed = 1;
    long window_n = -1;     // -1: heuristic
    long window_extra = 8;  // stabilization search room
    std::vector<BranchConfig> branches;
    // 0-based after parsing (the file uses 1-based ids)
    std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>>
        partitions;
};

ExperimentConfig parse_config_text(const std::string& text, const std::string& name);
ExperimentConfig parse_config_file(const std::string& path);

// The datum (and the quadratic extension when hermitian) built from a
// validated config.  All cross-field constraints are checked here, before
// any computation starts.
struct BuiltDatum {
    std::shared_ptr<const Field> base_field;
    std::shared_ptr<const QuadExt> ext;  // null unless hermitian
    std::shared_ptr<const SpectralDatum> datum;
};

BuiltDatum build_datum(const ExperimentConfig& cfg);

}  // namespace sl

#endif
