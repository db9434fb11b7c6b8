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

#ifndef SPRINGERLAB_SPECTRAL_HPP
#define SPRINGERLAB_SPECTRAL_HPP

#include <memory>
#include <optional>
#include <vector>

#include "springerlab/fqmat.hpp"
#include "springerlab/poly.hpp"
#include "springerlab/series.hpp"

namespace sl {

// One branch of the germ: F_q[[t_i]] with pi = t_i^n, gamma in t_i*F_q[[t_i]].
// gamma is an exact polynomial (finite coefficient list).
struct Branch {
    unsigned n = 1;
    Series gamma;
};

// Monomial window over the branches: branch i carries exponents [0, cut[i]).
struct WindowCuts {
    std::vector<long> cut;

    std::size_t dim() const;
    std::size_t col(std::size_t branch, long e) const;
    std::pair<std::size_t, long> decode(std::size_t c) const;  // (branch, exp)
};

// Echelonized image of A_I = O_F[gamma_I] inside prod F_q[t_i]/(t_i^cut_i).
struct OrderWindow {
    WindowCuts cuts;
    FqMat basis;                       // RREF
    std::vector<std::size_t> pivots;
};

struct RosenlichtResult {
    FqMat pairing;  // delta x delta matrix <x_u, omega_v>
    bool perfect = false;
    std::size_t omega_dim = 0;
};

// The family of branches (n_i, gamma_i) with everything section 1.1 derives
// from it: minimal polynomials, per-branch and total delta invariants,
// pairwise resultant valuations and conductor exponents.  Immutable after
// construction; construction validates the inputs and computes the caches.
class SpectralDatum {
  public:
    SpectralDatum(std::shared_ptr<const Field> field, std::vector<Branch> branches,
                  long precision_ceiling = 128);

    const Field* field() const { return field_.get(); }
    std::shared_ptr<const Field> field_ptr() const { return field_; }
    std::size_t size() const { return branches_.size(); }
    const Branch& branch(std::size_t i) const { return branches_[i]; }
    unsigned n_total() const { return n_total_; }
    long precision_ceiling() const { return ceiling_; }

    const SeriesPoly& minimal_polynomial(std::size_t i) const { return minpoly_[i]; }
    SeriesPoly product_polynomial() const;  // P_I

    long delta_direct() const { return delta_direct_; }
    long delta_formula() const;                 // independent route
    long delta_branch(std::size_t i) const { return delta_i_[i]; }
    long r_pair(std::size_t i, std::size_t j) const;
    // r_ij computed the other way, as v_{t_i}(P_j(gamma_i))
    long r_pair_eval(std::size_t i, std::size_t j) const;
    std::vector<long> conductor_exponents() const;  // verified

    // Image of A_I in the truncated window (saturated span of pi^a gamma^b).
    OrderWindow order_window(const WindowCuts& cuts) const;
    // uniform per-branch truncation level
    OrderWindow order_window(long level) const;

    RosenlichtResult rosenlicht_pairing() const;

    SpectralDatum restrict(const std::vector<std::size_t>& subset) const;

    // multiply a window row by pi or gamma, truncating at the cuts
    std::vector<Field::Elt> mul_pi(const std::vector<Field::Elt>& row,
                                   const WindowCuts& cuts) const;
    std::vector<Field::Elt> mul_gamma(const std::vector<Field::Elt>& row,
                                      const WindowCuts& cuts) const;
    // multiply branch slice by t_i^{shift}; negative exponents must vanish
    // or WindowError is thrown
    std::vector<Field::Elt> mul_t_shift(const std::vector<Field::Elt>& row,
                                        const WindowCuts& cuts,
                                        const std::vector<long>& shift) const;

    std::vector<Series> row_to_series(const std::vector<Field::Elt>& row,
                                      const WindowCuts& cuts) const;
    std::vector<Field::Elt> series_to_row(const std::vector<Series>& x,
                                          const WindowCuts& cuts) const;

  private:
    void validate() const;
    void compute_caches();

    std::shared_ptr<const Field> field_;
    std::vector<Branch> branches_;
    long ceiling_;
    unsigned n_total_ = 0;
    std::vector<SeriesPoly> minpoly_;
    std::vector<long> delta_i_;
    std::vector<std::vector<long>> r_;
    long delta_direct_ = 0;
};

// delta of a branch family by direct stabilized codimension (shared by the
// datum constructor and the per-branch computation)
long delta_direct_of(const Field* field, const std::vector<Branch>& branches,
                     long ceiling);

}  // namespace sl

#endif
