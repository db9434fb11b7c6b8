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

#ifndef SPRINGERLAB_REPORT_HPP
#define SPRINGERLAB_REPORT_HPP

#include <string>

#include "json.hpp"
#include "springerlab/config.hpp"
#include "springerlab/strata.hpp"

namespace sl {

using ojson = nlohmann::ordered_json;

// All report values are exact integers, strings or booleans; no floats and
// no wall-clock data, so reports are byte-stable across runs and thread
// counts.  Timings go to the human-readable summary only.
ojson report_header(const ExperimentConfig& cfg, const BuiltDatum& built);
ojson report_invariants(const SpectralDatum& datum);
ojson report_rosenlicht(const SpectralDatum& datum);
ojson report_enumeration(const ZPointsResult& z, bool list_points);
ojson report_classification(const Classification& cls);
ojson report_fl(const FLOutcome& fl);

std::string lambda_class_key(const LambdaClass& lbar);

std::string render_json(const ojson& j);

}  // namespace sl

#endif
