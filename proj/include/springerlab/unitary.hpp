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

#ifndef SPRINGERLAB_UNITARY_HPP
#define SPRINGERLAB_UNITARY_HPP

#include <map>
#include <memory>

#include "springerlab/springer.hpp"

namespace sl {

// The hermitian structure of the arithmetic situation: the datum lives over
// F_{q^2}; eps^q = -eps; alpha_I = eps^{n_I - 1} (dP_I/dT)(gamma_I) makes
// A_I self-dual for <x,y> = Tr(alpha^{-1} x* y).
struct HermitianData {
    std::shared_ptr<const QuadExt> ext;
    std::shared_ptr<const SpectralDatum> datum;
    std::vector<Series> alpha;        // per branch, exact
    std::vector<long> alpha_val;      // t_i-valuation of alpha_i
    bool alpha_val_matches_conductor = false;

    Field::Elt conj(Field::Elt a) const { return ext->conj(a); }
};

// Validates hypothesis (1.3.1) (gamma* = -gamma) and alpha* = alpha.
HermitianData make_hermitian(std::shared_ptr<const SpectralDatum> datum,
                             std::shared_ptr<const QuadExt> ext);

// <x, y> = sum_i Tr_{E_i/F}(alpha_i^{-1} x_i* y_i), a Laurent series in pi
// known below pi^pi_prec.  x and y are per-branch series.
Series hermitian_pair(const std::vector<Series>& x, const std::vector<Series>& y,
                      const HermitianData& h, long pi_prec);

// M^perp = {y : <M, y> in O_F}.  The involution inside the form makes this
// the twisted Frobenius of section 1.3; index negates.  target_model must
// have index -d over the same datum (same N).
LatticePoint dual_lattice(const LatticePoint& m, const WindowModel& model,
                          const HermitianData& h, const WindowModel& target_model);

// Frob_{X/F_q}: exactly the hermitian dual (the q-power Frobenius on
// coefficients is carried by x -> x* inside the form).
inline LatticePoint twisted_frobenius(const LatticePoint& m, const WindowModel& model,
                                      const HermitianData& h,
                                      const WindowModel& target_model) {
    return dual_lattice(m, model, h, target_model);
}

using LambdaClass = std::vector<int>;  // per-branch parity, zero-sum mod 2

struct ClassifiedRep {
    LatticePoint rep;
    bool fixed = false;
    LambdaVec lambda;      // Frob(x) = sigma(lambda) x when fixed
    LambdaClass lbar;
};

struct Classification {
    std::map<LambdaClass, long> counts;  // O_{lambda bar}
    long fixed_total = 0;
    long discarded = 0;  // representatives that are not F_q-points
    std::vector<ClassifiedRep> reps;
};

// For every canonical representative of Z^0(F_{q^2}) decide whether its
// orbit is an F_q-point of the twisted form and read off lambda bar.
Classification classify_z_points(const ZPointsResult& z, const HermitianData& h,
                                 unsigned threads = 1);

struct OrbitalValues {
    long o_kappa = 0;
    long so = 0;
};

// kappa(lambda) = (-1)^{sum over I_1 of lambda_i}
OrbitalValues orbital_integrals(const std::map<LambdaClass, long>& counts,
                                const std::vector<std::size_t>& left_part);

}  // namespace sl

#endif
