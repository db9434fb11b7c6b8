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

#ifndef SPRINGERLAB_SPRINGER_HPP
#define SPRINGERLAB_SPRINGER_HPP

#include <memory>
#include <vector>

#include "springerlab/spectral.hpp"

namespace sl {

using LambdaVec = std::vector<long>;  // zero-sum integer vector over I

// A lattice pi^{(n_I-1)N-d} A <= M <= pi^{-N} A of index d, held as the
// subspace pi^N M / pi^{n_I N - d} A of V = A / pi^{n_I N - d} A in the
// model's quotient coordinates (canonical RREF).
struct LatticePoint {
    FqMat coords;          // RREF over the model quotient basis
    std::vector<long> nu;  // per-branch t-valuation of the projections of M
    bool free_rank_one = false;

    bool operator==(const LatticePoint& o) const {
        return nu == o.nu && coords == o.coords;
    }
    bool operator<(const LatticePoint& o) const {
        if (nu != o.nu) return nu < o.nu;
        return coords.lex_less(o.coords);
    }
};

// The finite window model of the Springer fiber component X^d_{I,N}:
// V = pi^{-N}A / pi^{(n_I-1)N-d}A realized (after a pi^N shift) as
// A / pi^K A with K = n_I N - d, with the commuting nilpotent actions of pi
// and gamma.  Stable subspaces of dimension (n_I-1)K are the lattices of
// index d inside pi^{-N}A.
class WindowModel {
  public:
    WindowModel(std::shared_ptr<const SpectralDatum> datum, long N, long d);

    const SpectralDatum& datum() const { return *datum_; }
    std::shared_ptr<const SpectralDatum> datum_ptr() const { return datum_; }
    const Field* field() const { return datum_->field(); }
    long N() const { return N_; }
    long d() const { return d_; }
    long K() const { return K_; }
    const WindowCuts& cuts() const { return cuts_; }
    const std::vector<long>& conductor() const { return cond_; }

    std::size_t dim() const { return quot_basis_.rows(); }      // n_I * K
    std::size_t plane_dim() const;                              // target
    const FqMat& pi_op() const { return pi_op_; }
    const FqMat& gamma_op() const { return gamma_op_; }
    const FqMat& order_basis() const { return order_.basis; }
    const FqMat& low_basis() const { return low_; }
    const FqMat& quot_basis() const { return quot_basis_; }

    // big-window row (exact polynomial coefficients) -> quotient coordinates;
    // throws WindowError when the row is not in the A-window span
    std::vector<Field::Elt> to_coords(const std::vector<Field::Elt>& bigrow) const;
    // quotient coordinates -> big-window representative (exact polynomial)
    std::vector<Field::Elt> lift(const std::vector<Field::Elt>& coords) const;

    // rows spanning pi^N M + floor in big coordinates (point rows lifted
    // plus the floor basis)
    FqMat full_span(const LatticePoint& m) const;

    // the distinguished points (valid when the index matches)
    LatticePoint lattice_A() const;       // requires d == 0
    LatticePoint lattice_Atilde() const;  // requires d == delta

    // build a point from big rows spanning pi^N M (floor added internally)
    LatticePoint point_from_big_rows(const FqMat& rows) const;

    // image of pi^j A in the window (exact rows), 0 <= j <= K
    FqMat pi_power_rows(long j) const;

    std::vector<long> nu_of_span(const FqMat& big_span) const;

    bool in_window_profile(const std::vector<long>& nu_shifted) const;

  private:
    friend std::vector<LatticePoint> enumerate_fiber(const WindowModel&, long);

    std::shared_ptr<const SpectralDatum> datum_;
    long N_, d_, K_;
    std::vector<long> cond_;
    WindowCuts cuts_;
    OrderWindow order_;               // W_A at the cuts
    FqMat low_;                       // pi^K A image, RREF
    std::vector<std::size_t> low_pivots_;
    FqMat quot_basis_;                // quotient basis rows, big coords
    std::vector<std::size_t> quot_pivots_;
    FqMat pi_op_, gamma_op_;
};

// All stable subspaces of the target dimension (the k'-points of X^d_{I,N}),
// in deterministic lexicographic order.  budget caps the number of
// submodule-search nodes (BudgetError beyond it).
std::vector<LatticePoint> enumerate_fiber(const WindowModel& model,
                                          long budget = 10000000);

// Submodule search core: all subspaces S with floor <= S <= top, stable
// under both operators, of dimension target_dim.  Spaces are RREF matrices
// in the model's quotient coordinates.  Exposed for the window-free toy
// tests; enumerate_fiber drives it per saturation profile.
std::vector<FqMat> stable_subspaces_between(const FqMat& top, const FqMat& floor,
                                            const FqMat& pi_op, const FqMat& gamma_op,
                                            std::size_t target_dim, long budget,
                                            long* nodes_used = nullptr);

long index_of(const LatticePoint& m, const LatticePoint& ref);

// multiply by prod t_i^{lambda_i}; zero-sum lambda keeps the index.
// WindowError when the image leaves the window.
LatticePoint lambda_act(const LatticePoint& m, const LambdaVec& lambda,
                        const WindowModel& model);

// unique orbit representative: nu_i = 0 for every branch but the first,
// which absorbs the sum; returns the lambda that was applied
std::pair<LatticePoint, LambdaVec> canonicalize(const LatticePoint& m,
                                                const WindowModel& model);

// Nakayama: dim(M / m_I M) == 1, evaluated in a one-level-deeper window so
// the truncation cannot hide generators.
bool is_free(const LatticePoint& m, const WindowModel& model,
             const WindowModel& deeper);

// re-embed a point of `from` into `to` (same datum and index, deeper N)
LatticePoint embed_point(const LatticePoint& m, const WindowModel& from,
                         const WindowModel& to);

struct ZStabilizationRow {
    long N = 0;
    long window_points = 0;
    long canonical_points = 0;
};

struct ZPointsResult {
    std::shared_ptr<WindowModel> model;   // model at the stabilized depth
    std::shared_ptr<WindowModel> deeper;  // model one level deeper
    std::vector<LatticePoint> reps;       // canonical, sorted
    std::vector<ZStabilizationRow> stabilization;
    long threshold_N = 0;
};

struct ZOptions {
    long N_override = -1;     // -1: use the heuristic
    long N_ceiling_extra = 8; // how far past the heuristic to search
    long budget = 10000000;
};

// Enumerate, canonicalize and deduplicate until the set of canonical points
// is unchanged from depth N to N+1 (compared after re-embedding).
ZPointsResult z_points(std::shared_ptr<const SpectralDatum> datum, long d,
                       const ZOptions& opts = {});

long heuristic_N(const SpectralDatum& datum, long d);

}  // namespace sl

#endif
