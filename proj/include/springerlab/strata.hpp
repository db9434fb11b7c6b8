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

#ifndef SPRINGERLAB_STRATA_HPP
#define SPRINGERLAB_STRATA_HPP

#include <map>

#include "springerlab/unitary.hpp"

namespace sl {

struct PartitionSpec {
    std::vector<std::size_t> left, right;  // disjoint, nonempty, union = I
    long r = 0;                            // sum of r_ij across the parts
};

// Validates the partition and checks r = delta_I - delta_I1 - delta_I2.
PartitionSpec make_partition(const SpectralDatum& datum,
                             std::vector<std::size_t> left,
                             std::vector<std::size_t> right);

// M'_alpha = M cap E_{I_alpha} and M''_alpha = projection of M, as RREF
// spans over the I_alpha window columns, plus the reference ranks of the
// pi^N A_{I_alpha} images in the same coordinates.
struct SplitSpans {
    WindowCuts cuts1, cuts2;
    FqMat m1_prime, m1_pp, m2_prime, m2_pp;
    long ref1 = 0, ref2 = 0;
};

SplitSpans split_lattice(const LatticePoint& m, const PartitionSpec& part,
                         const WindowModel& model);

struct IndexProfile {
    long ind1_prime = 0, ind1_pp = 0, ind2_prime = 0, ind2_pp = 0;
    long rho = 0;
};

// Asserts Lemma 1.4.2: the two gaps agree, 0 <= rho <= r, and
// ind'_1 + ind''_2 = d - r.
IndexProfile index_profile(const LatticePoint& m, const PartitionSpec& part,
                           const WindowModel& model);

// rho -> positions into reps
std::map<long, std::vector<std::size_t>> stratify(const std::vector<LatticePoint>& reps,
                                                  const PartitionSpec& part,
                                                  const WindowModel& model);

// A sub-lattice repackaged over the sub-datum: the window model that holds
// it and the point itself.
struct SubLattice {
    std::shared_ptr<const SpectralDatum> datum;
    std::shared_ptr<WindowModel> model;
    LatticePoint point;
};

// which: 0 = M'_1, 1 = M''_1, 2 = M'_2, 3 = M''_2
SubLattice sub_lattice_point(const LatticePoint& m, const PartitionSpec& part,
                             const WindowModel& model, int which);

// dim Hom_{O_F[T]}(M_2, E_{I_1}/M_1) with T acting through gamma_{I_2} and
// gamma_{I_1}; computed at truncation `depth` (a drift check against
// depth+1 is the caller's job).  Proposition 1.4.5 says this equals r.
long fiber_dimension(const WindowModel& model1, const LatticePoint& m1,
                     const WindowModel& model2, const LatticePoint& m2,
                     long depth);

struct StrataCount {
    long rho = 0;
    long total = 0;  // canonical representatives in the stratum
    long fixed = 0;  // twisted-Frobenius-fixed ones
};

struct FLOutcome {
    std::vector<std::size_t> left, right;
    long r = 0;
    std::map<LambdaClass, long> counts;
    long o_kappa = 0;
    long so_full = 0;
    long so_left = 0, so_right = 0;
    long q_base = 0;
    long rhs = 0;  // q^r * SO^{I_1} * SO^{I_2}
    bool fl_holds = false;
    std::vector<StrataCount> strata;
    long signed_sum = 0;
    bool signed_matches = false;
    long discarded = 0;
    long N_full = 0, threshold_full = 0;
    long N_left = 0, N_right = 0;
};

// Sum over rho of (-1)^{r-rho} |Z^0_{I1,I2;rho}(F_q)| from a classification.
long signed_strata_sum(const std::vector<StrataCount>& strata, long r);

// The headline check: O^{I,kappa} = q^r SO^{I_1} SO^{I_2}, with the strata
// cross-check of Remark 1.4.8.  Throws nothing on mismatch; the flags say
// what held (the CLI maps them to exit codes).
FLOutcome verify_fundamental_lemma(const ZPointsResult& z, const Classification& cls,
                                   std::shared_ptr<const SpectralDatum> datum,
                                   std::shared_ptr<const QuadExt> ext,
                                   const PartitionSpec& part, const ZOptions& opts,
                                   unsigned threads);

}  // namespace sl

#endif
