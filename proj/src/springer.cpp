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

#include "springerlab/springer.hpp"

#include <algorithm>
#include <unordered_set>

#include "springerlab/errors.hpp"

namespace sl {

namespace {

struct FqMatEq {
    bool operator()(const FqMat& a, const FqMat& b) const { return a == b; }
};

bool is_nilpotent(const FqMat& op) {
    FqMat power = op;
    std::size_t steps = 1;
    while (steps < 2 * op.rows() + 2) {
        bool zero = true;
        for (std::size_t r = 0; r < power.rows() && zero; ++r)
            if (!power.row_is_zero(r)) zero = false;
        if (zero) return true;
        power = power.multiplied(power);
        steps *= 2;
    }
    return false;
}

}  // namespace

WindowModel::WindowModel(std::shared_ptr<const SpectralDatum> datum, long N, long d)
    : datum_(std::move(datum)), N_(N), d_(d) {
    const Field* k = datum_->field();
    const long nI = datum_->n_total();
    K_ = nI * N_ - d_;
    if (N_ < 0) throw ConfigError("window depth N must be >= 0");
    if (K_ < 1) throw ConfigError("window requires d < n_I * N");
    cond_ = datum_->conductor_exponents();

    cuts_.cut.clear();
    for (std::size_t i = 0; i < datum_->size(); ++i)
        cuts_.cut.push_back(K_ * static_cast<long>(datum_->branch(i).n) + cond_[i]);

    order_ = datum_->order_window(cuts_);

    // floor: image of pi^K A
    low_ = FqMat(k, 0, cuts_.dim());
    {
        std::vector<long> shift;
        for (std::size_t i = 0; i < datum_->size(); ++i)
            shift.push_back(K_ * static_cast<long>(datum_->branch(i).n));
        for (std::size_t r = 0; r < order_.basis.rows(); ++r) {
            auto row = datum_->mul_t_shift(order_.basis.row(r), cuts_, shift);
            low_.append_row(row);
        }
    }
    low_pivots_ = low_.rref();

    // quotient basis: order rows reduced modulo the floor
    quot_basis_ = FqMat(k, 0, cuts_.dim());
    for (std::size_t r = 0; r < order_.basis.rows(); ++r) {
        auto row = order_.basis.row(r);
        low_.reduce_by(row, low_pivots_);
        bool nonzero = false;
        for (auto x : row)
            if (x != 0) { nonzero = true; break; }
        if (nonzero) quot_basis_.append_row(row);
    }
    quot_pivots_ = quot_basis_.rref();
    if (static_cast<long>(quot_basis_.rows()) != nI * K_)
        throw IdentityError("window dimension is not n_I(n_I N - d)");

    // operators on the quotient coordinates
    const std::size_t dim = quot_basis_.rows();
    pi_op_ = FqMat(k, dim, dim);
    gamma_op_ = FqMat(k, dim, dim);
    for (std::size_t u = 0; u < dim; ++u) {
        auto prow = to_coords(datum_->mul_pi(quot_basis_.row(u), cuts_));
        auto grow = to_coords(datum_->mul_gamma(quot_basis_.row(u), cuts_));
        pi_op_.set_row(u, prow);
        gamma_op_.set_row(u, grow);
    }
    if (!(pi_op_.multiplied(gamma_op_) == gamma_op_.multiplied(pi_op_)))
        throw IdentityError("pi and gamma operators do not commute in the window");
    if (!is_nilpotent(pi_op_) || !is_nilpotent(gamma_op_))
        throw IdentityError("window operators are not nilpotent");
}

std::size_t WindowModel::plane_dim() const {
    return static_cast<std::size_t>((static_cast<long>(datum_->n_total()) - 1) * K_);
}

std::vector<Field::Elt> WindowModel::to_coords(
    const std::vector<Field::Elt>& bigrow) const {
    std::vector<Field::Elt> v = bigrow;
    low_.reduce_by(v, low_pivots_);
    std::vector<Field::Elt> coords;
    if (!quot_basis_.reduce_by(v, quot_pivots_, &coords))
        throw WindowError("element is not in the A window span");
    return coords;
}

std::vector<Field::Elt> WindowModel::lift(const std::vector<Field::Elt>& coords) const {
    return quot_basis_.apply(coords);
}

FqMat WindowModel::full_span(const LatticePoint& m) const {
    FqMat span(field(), 0, cuts_.dim());
    for (std::size_t r = 0; r < m.coords.rows(); ++r)
        span.append_row(lift(m.coords.row(r)));
    span.append_rows(low_);
    span.rref();
    return span;
}

std::vector<long> WindowModel::nu_of_span(const FqMat& big_span) const {
    std::vector<long> nu;
    for (std::size_t i = 0; i < datum_->size(); ++i) {
        const long n = datum_->branch(i).n;
        long minexp = -1;
        for (long e = 0; e < cuts_.cut[i] && minexp < 0; ++e) {
            for (std::size_t r = 0; r < big_span.rows(); ++r)
                if (big_span.get(r, cuts_.col(i, e)) != 0) { minexp = e; break; }
        }
        if (minexp < 0) {
            // pi^K A caps the saturation at K n_i; with conductor 0 the
            // floor itself starts exactly at the cut
            if (cond_[i] == 0)
                minexp = K_ * n;
            else
                throw IdentityError("lattice has a zero projection on branch " +
                                    std::to_string(i + 1));
        }
        nu.push_back(minexp - N_ * n);
    }
    return nu;
}

LatticePoint WindowModel::lattice_A() const {
    if (d_ != 0) throw IdentityError("the A point lives in the d = 0 component");
    FqMat rows(field(), 0, cuts_.dim());
    std::vector<long> shift;
    for (std::size_t i = 0; i < datum_->size(); ++i)
        shift.push_back(N_ * static_cast<long>(datum_->branch(i).n));
    for (std::size_t r = 0; r < order_.basis.rows(); ++r)
        rows.append_row(datum_->mul_t_shift(order_.basis.row(r), cuts_, shift));
    return point_from_big_rows(rows);
}

LatticePoint WindowModel::lattice_Atilde() const {
    if (d_ != datum_->delta_direct())
        throw IdentityError("the Atilde point lives in the d = delta component");
    FqMat rows(field(), 0, cuts_.dim());
    for (std::size_t i = 0; i < datum_->size(); ++i) {
        long from = N_ * static_cast<long>(datum_->branch(i).n);
        for (long e = from; e < cuts_.cut[i]; ++e) {
            std::vector<Field::Elt> mono(cuts_.dim(), 0);
            mono[cuts_.col(i, e)] = field()->one();
            rows.append_row(mono);
        }
    }
    return point_from_big_rows(rows);
}

LatticePoint WindowModel::point_from_big_rows(const FqMat& rows) const {
    FqMat coords(field(), 0, dim());
    for (std::size_t r = 0; r < rows.rows(); ++r)
        coords.append_row(to_coords(rows.row(r)));
    coords.rref();
    if (coords.rows() != plane_dim())
        throw IdentityError("lattice rows span dimension " +
                            std::to_string(coords.rows()) + ", expected " +
                            std::to_string(plane_dim()));
    LatticePoint pt;
    pt.coords = std::move(coords);
    pt.nu = nu_of_span(full_span(pt));
    return pt;
}

FqMat WindowModel::pi_power_rows(long j) const {
    std::vector<long> shift;
    for (std::size_t i = 0; i < datum_->size(); ++i)
        shift.push_back(j * static_cast<long>(datum_->branch(i).n));
    FqMat rows(field(), 0, cuts_.dim());
    for (std::size_t r = 0; r < order_.basis.rows(); ++r)
        rows.append_row(datum_->mul_t_shift(order_.basis.row(r), cuts_, shift));
    return rows;
}

bool WindowModel::in_window_profile(const std::vector<long>& nu_shifted) const {
    for (std::size_t i = 0; i < datum_->size(); ++i) {
        if (nu_shifted[i] < 0) return false;
        if (nu_shifted[i] > K_ * static_cast<long>(datum_->branch(i).n)) return false;
    }
    return true;
}

std::vector<FqMat> stable_subspaces_between(const FqMat& top, const FqMat& floor,
                                            const FqMat& pi_op, const FqMat& gamma_op,
                                            std::size_t target_dim, long budget,
                                            long* nodes_used) {
    const Field* k = pi_op.field();
    const unsigned q = k->q();

    FqMat start = top;
    start.append_rows(floor);
    start.rref();
    if (floor.rows() > target_dim || start.rows() < target_dim) return {};

    std::unordered_set<FqMat, FqMatHash, FqMatEq> seen;
    std::vector<FqMat> stack{start};
    seen.insert(start);
    std::vector<FqMat> out;
    long nodes = 0;

    while (!stack.empty()) {
        FqMat s = std::move(stack.back());
        stack.pop_back();
        if (++nodes > budget)
            throw BudgetError("stable-subspace search exceeded the budget of " +
                              std::to_string(budget) + " nodes");
        if (s.rows() == target_dim) {
            out.push_back(s);
            continue;
        }
        if (s.rows() < target_dim || s.rows() == floor.rows()) continue;

        // R = m*S + floor; maximal stable subspaces with floor are the
        // hyperplanes of S containing R
        FqMat r = s.multiplied(pi_op);
        r.append_rows(s.multiplied(gamma_op));
        r.append_rows(floor);
        auto rpiv = r.rref();
        // quotient S / R
        FqMat qb(k, 0, s.cols());
        for (std::size_t i = 0; i < s.rows(); ++i) {
            auto row = s.row(i);
            r.reduce_by(row, rpiv);
            bool nz = false;
            for (auto x : row)
                if (x != 0) { nz = true; break; }
            if (nz) qb.append_row(row);
        }
        qb.rref();
        const std::size_t g = qb.rows();
        if (g == 0)
            throw IdentityError("m*S = S for a nonzero module (operators not nilpotent?)");

        // functionals phi on F_q^g, normalized so the first nonzero entry is 1
        std::vector<Field::Elt> phi(g, 0);
        for (std::size_t j = 0; j < g; ++j) {
            // phi_j = 1, phi_{j+1..} arbitrary, phi_{<j} = 0
            std::vector<unsigned> rest(g - j - 1, 0);
            bool done = false;
            while (!done) {
                std::fill(phi.begin(), phi.end(), 0);
                phi[j] = k->one();
                for (std::size_t t = 0; t < rest.size(); ++t)
                    phi[j + 1 + t] = static_cast<Field::Elt>(rest[t]);
                // child = R + ker(phi) lifted through qb
                FqMat child = r;
                for (std::size_t u = 0; u < g; ++u) {
                    if (u == j) continue;
                    // e_u - phi_u * e_j spans ker phi together over u != j
                    std::vector<Field::Elt> comb(s.cols(), 0);
                    for (std::size_t c = 0; c < s.cols(); ++c) {
                        Field::Elt val = qb.get(u, c);
                        if (phi[u] != 0)
                            val = k->sub(val, k->mul(phi[u], qb.get(j, c)));
                        comb[c] = val;
                    }
                    child.append_row(comb);
                }
                child.rref();
                if (child.rows() + 1 != s.rows())
                    throw IdentityError("hyperplane child has the wrong dimension");
                if (seen.insert(child).second) stack.push_back(child);

                // advance the odometer over rest
                done = true;
                for (std::size_t t = 0; t < rest.size(); ++t) {
                    if (++rest[t] < q) { done = false; break; }
                    rest[t] = 0;
                }
                if (rest.empty()) done = true;
            }
        }
    }
    if (nodes_used != nullptr) *nodes_used += nodes;
    std::sort(out.begin(), out.end(),
              [](const FqMat& a, const FqMat& b) { return a.lex_less(b); });
    return out;
}

std::vector<LatticePoint> enumerate_fiber(const WindowModel& model, long budget) {
    const SpectralDatum& datum = model.datum();
    const Field* k = model.field();
    const std::size_t s = datum.size();
    const long delta = datum.delta_direct();
    const long d = model.d();
    const std::size_t target = model.plane_dim();
    const auto& cuts = model.cuts();

    long nodes = 0;
    std::vector<LatticePoint> out;
    std::unordered_set<FqMat, FqMatHash, FqMatEq> emitted;

    // odometer over saturation profiles nu_shifted in prod [0, K n_i]
    std::vector<long> prof(s, 0);
    std::vector<long> prof_max(s);
    for (std::size_t i = 0; i < s; ++i)
        prof_max[i] = model.K() * static_cast<long>(datum.branch(i).n);

    bool more = true;
    while (more) {
        // band: sum of true nu within [-d-delta, delta-d]
        long sum_true = 0;
        for (std::size_t i = 0; i < s; ++i)
            sum_true += prof[i] - model.N() * static_cast<long>(datum.branch(i).n);
        // index bounds [a t^nu Atilde : A] <= d <= [t^nu Atilde : A] and the
        // floor dimension must fit under the target plane
        long floor_dim = (model.K() - model.N()) * static_cast<long>(datum.n_total()) -
                         delta - sum_true;
        bool feasible = sum_true >= -d - delta && sum_true <= delta - d &&
                        floor_dim <= static_cast<long>(target);
        if (feasible) {
            // top: elements of the A window supported at exponents >= prof
            std::vector<std::size_t> lowcols;
            for (std::size_t i = 0; i < s; ++i)
                for (long e = 0; e < prof[i]; ++e) lowcols.push_back(cuts.col(i, e));
            const FqMat& w = model.order_basis();
            FqMat restr(k, 0, lowcols.size());
            if (lowcols.empty()) {
                restr = FqMat(k, w.rows(), 0);
            } else {
                for (std::size_t r = 0; r < w.rows(); ++r) {
                    std::vector<Field::Elt> rr;
                    rr.reserve(lowcols.size());
                    for (auto c : lowcols) rr.push_back(w.get(r, c));
                    restr.append_row(rr);
                }
            }
            FqMat combos = restr.left_kernel();  // coefficient rows
            FqMat top(k, 0, model.dim());
            for (std::size_t r = 0; r < combos.rows(); ++r) {
                std::vector<Field::Elt> big(cuts.dim(), 0);
                for (std::size_t i = 0; i < w.rows(); ++i) {
                    Field::Elt c = combos.get(r, i);
                    if (c == 0) continue;
                    for (std::size_t cc = 0; cc < cuts.dim(); ++cc)
                        big[cc] = k->add(big[cc], k->mul(c, w.get(i, cc)));
                }
                top.append_row(model.to_coords(big));
            }
            top.rref();

            // floor: monomials >= prof_i + c_i on each branch
            FqMat floor(k, 0, model.dim());
            for (std::size_t i = 0; i < s; ++i) {
                for (long e = prof[i] + model.conductor()[i]; e < cuts.cut[i]; ++e) {
                    std::vector<Field::Elt> mono(cuts.dim(), 0);
                    mono[cuts.col(i, e)] = k->one();
                    floor.append_row(model.to_coords(mono));
                }
            }
            floor.rref();

            if (floor.rows() <= target && top.rows() >= target) {
                // work in the sandwich quotient Q = top/floor (dim <= 2 delta):
                // the submodule lattice is tiny there
                auto fpiv = floor.rref();
                FqMat qbasis(k, 0, model.dim());
                for (std::size_t r = 0; r < top.rows(); ++r) {
                    auto row = top.row(r);
                    floor.reduce_by(row, fpiv);
                    bool nz = false;
                    for (auto x : row)
                        if (x != 0) { nz = true; break; }
                    if (nz) qbasis.append_row(row);
                }
                auto qpiv = qbasis.rref();
                const std::size_t g = qbasis.rows();
                if (g > static_cast<std::size_t>(2 * delta))
                    throw IdentityError("sandwich quotient exceeds 2*delta");
                const long target_w =
                    static_cast<long>(target) - static_cast<long>(floor.rows());

                auto induced = [&](const FqMat& op) {
                    FqMat out(k, g, g);
                    for (std::size_t u = 0; u < g; ++u) {
                        auto v = op.apply(qbasis.row(u));  // qbasis.row(u) * op
                        floor.reduce_by(v, fpiv);
                        std::vector<Field::Elt> coords;
                        if (!qbasis.reduce_by(v, qpiv, &coords))
                            throw IdentityError("sandwich quotient not stable");
                        out.set_row(u, coords);
                    }
                    return out;
                };

                std::vector<FqMat> spaces_v;
                if (target_w == 0) {
                    spaces_v.push_back(floor);
                } else if (target_w > 0 && target_w <= static_cast<long>(g)) {
                    FqMat pi_q = induced(model.pi_op());
                    FqMat ga_q = induced(model.gamma_op());
                    auto spaces_q = stable_subspaces_between(
                        FqMat::identity(k, g), FqMat(k, 0, g), pi_q, ga_q,
                        static_cast<std::size_t>(target_w), budget - nodes, &nodes);
                    for (const auto& w : spaces_q) {
                        FqMat sp = floor;
                        for (std::size_t r = 0; r < w.rows(); ++r)
                            sp.append_row(qbasis.apply(w.row(r)));
                        sp.rref();
                        if (sp.rows() != target)
                            throw IdentityError("lifted subspace has wrong dimension");
                        spaces_v.push_back(std::move(sp));
                    }
                }
                for (auto& sp : spaces_v) {
                    if (!emitted.insert(sp).second) continue;
                    LatticePoint pt;
                    pt.coords = sp;
                    FqMat span = model.full_span(pt);
                    auto nu = model.nu_of_span(span);
                    bool match = true;
                    for (std::size_t i = 0; i < s; ++i)
                        if (nu[i] + model.N() * static_cast<long>(datum.branch(i).n) !=
                            prof[i]) {
                            match = false;
                            break;
                        }
                    if (!match) {
                        emitted.erase(sp);  // belongs to another profile
                        continue;
                    }
                    pt.nu = std::move(nu);
                    out.push_back(std::move(pt));
                }
            }
        }
        // advance profile odometer
        more = false;
        for (std::size_t i = 0; i < s; ++i) {
            if (++prof[i] <= prof_max[i]) { more = true; break; }
            prof[i] = 0;
        }
    }

    std::sort(out.begin(), out.end());
    return out;
}

long index_of(const LatticePoint& m, const LatticePoint& ref) {
    return static_cast<long>(m.coords.rows()) - static_cast<long>(ref.coords.rows());
}

LatticePoint lambda_act(const LatticePoint& m, const LambdaVec& lambda,
                        const WindowModel& model) {
    const SpectralDatum& datum = model.datum();
    if (lambda.size() != datum.size())
        throw IdentityError("lambda length mismatch");
    long sum = 0;
    for (long l : lambda) sum += l;
    if (sum != 0) throw IdentityError("lambda must have zero sum");

    FqMat span = model.full_span(m);
    FqMat rows(model.field(), 0, model.cuts().dim());
    for (std::size_t r = 0; r < span.rows(); ++r)
        rows.append_row(datum.mul_t_shift(span.row(r), model.cuts(), lambda));
    // the span rows only see pi^N M below the cut; the part beyond it is
    // t^lambda pi^K A, which must be re-added once lambda moves it back
    // under the cut
    {
        std::vector<long> shift;
        for (std::size_t i = 0; i < datum.size(); ++i)
            shift.push_back(model.K() * static_cast<long>(datum.branch(i).n) +
                            lambda[i]);
        const FqMat& w = model.order_basis();
        for (std::size_t r = 0; r < w.rows(); ++r)
            rows.append_row(datum.mul_t_shift(w.row(r), model.cuts(), shift));
    }
    LatticePoint out = model.point_from_big_rows(rows);
    out.free_rank_one = m.free_rank_one;
    return out;
}

std::pair<LatticePoint, LambdaVec> canonicalize(const LatticePoint& m,
                                                const WindowModel& model) {
    const std::size_t s = model.datum().size();
    LambdaVec lambda(s, 0);
    for (std::size_t i = 1; i < s; ++i) {
        lambda[i] = -m.nu[i];
        lambda[0] += m.nu[i];
    }
    bool trivial = true;
    for (long l : lambda)
        if (l != 0) trivial = false;
    if (trivial) return {m, lambda};
    LatticePoint rep = lambda_act(m, lambda, model);
    for (std::size_t i = 1; i < s; ++i)
        if (rep.nu[i] != 0)
            throw IdentityError("canonical representative has nonzero nu");
    return {rep, lambda};
}

bool is_free(const LatticePoint& m, const WindowModel& model,
             const WindowModel& deeper) {
    if (model.datum().n_total() == 1) return true;
    LatticePoint up = embed_point(m, model, deeper);
    FqMat mm = up.coords.multiplied(deeper.pi_op());
    mm.append_rows(up.coords.multiplied(deeper.gamma_op()));
    mm.rref();
    long mu = static_cast<long>(up.coords.rows()) - static_cast<long>(mm.rows());
    return mu == 1;
}

LatticePoint embed_point(const LatticePoint& m, const WindowModel& from,
                         const WindowModel& to) {
    if (&from.datum() != &to.datum() &&
        from.datum().field() != to.datum().field())
        throw IdentityError("embedding across different data");
    if (from.d() != to.d()) throw IdentityError("embedding across indexes");
    long dN = to.N() - from.N();
    if (dN < 0) throw IdentityError("embedding must go to a deeper window");

    const std::size_t s = from.datum().size();
    FqMat rows(to.field(), 0, to.cuts().dim());
    FqMat span = from.full_span(m);
    for (std::size_t r = 0; r < span.rows(); ++r) {
        std::vector<Field::Elt> big(to.cuts().dim(), 0);
        for (std::size_t i = 0; i < s; ++i) {
            long shift = dN * static_cast<long>(from.datum().branch(i).n);
            for (long e = 0; e < from.cuts().cut[i]; ++e) {
                Field::Elt v = span.get(r, from.cuts().col(i, e));
                if (v == 0) continue;
                long ne = e + shift;
                if (ne < to.cuts().cut[i]) big[to.cuts().col(i, ne)] = v;
            }
        }
        rows.append_row(big);
    }
    // pi^{K_from + dN} A sits inside pi^{N_to} M but beyond the source cut
    rows.append_rows(to.pi_power_rows(from.K() + dN));
    LatticePoint out = to.point_from_big_rows(rows);
    out.free_rank_one = m.free_rank_one;
    return out;
}

long heuristic_N(const SpectralDatum& datum, long d) {
    auto cond = datum.conductor_exponents();
    long cmax = 0;
    for (long c : cond) cmax = std::max(cmax, c);
    long delta = datum.delta_direct();
    long nI = datum.n_total();
    long num = std::abs(d) + delta + cmax;
    long N = (num + nI - 1) / nI + 1;
    return std::max<long>(N, 1);
}

ZPointsResult z_points(std::shared_ptr<const SpectralDatum> datum, long d,
                       const ZOptions& opts) {
    long N0 = opts.N_override >= 0 ? opts.N_override : heuristic_N(*datum, d);
    ZPointsResult res;

    std::shared_ptr<WindowModel> prev_model;
    std::vector<LatticePoint> prev_reps;
    long prev_N = -1;

    // canonical counts grow monotonically with N, so an agreeing pair one
    // step below the heuristic depth is just as conclusive and cheaper
    long N_start = std::max<long>(1, N0 - 1);
    // the window needs K = n_I N - d >= 1
    long nI = static_cast<long>(datum->n_total());
    N_start = std::max(N_start, (d + nI) / nI);
    for (long N = N_start; N <= N0 + opts.N_ceiling_extra; ++N) {
        auto model = std::make_shared<WindowModel>(datum, N, d);
        auto pts = enumerate_fiber(*model, opts.budget);

        bool overflow = false;
        std::vector<LatticePoint> reps;
        for (const auto& pt : pts) {
            try {
                reps.push_back(canonicalize(pt, *model).first);
            } catch (const WindowError&) {
                overflow = true;
                break;
            }
        }
        ZStabilizationRow row;
        row.N = N;
        row.window_points = static_cast<long>(pts.size());
        if (!overflow) {
            std::sort(reps.begin(), reps.end());
            reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
            row.canonical_points = static_cast<long>(reps.size());
        } else {
            row.canonical_points = -1;  // canonical form left the window
        }
        res.stabilization.push_back(row);

        if (!overflow && prev_model != nullptr) {
            // compare after re-embedding the previous set into this window
            bool equal = prev_reps.size() == reps.size();
            if (equal) {
                std::vector<LatticePoint> embedded;
                for (const auto& r : prev_reps)
                    embedded.push_back(embed_point(r, *prev_model, *model));
                std::sort(embedded.begin(), embedded.end());
                equal = std::equal(embedded.begin(), embedded.end(), reps.begin(),
                                   [](const LatticePoint& a, const LatticePoint& b) {
                                       return a == b;
                                   });
            }
            if (equal) {
                res.model = model;
                res.deeper = std::make_shared<WindowModel>(datum, N + 1, d);
                res.threshold_N = prev_N;
                for (auto& r : reps)
                    r.free_rank_one = is_free(r, *model, *res.deeper);
                res.reps = std::move(reps);
                return res;
            }
        }
        if (!overflow) {
            prev_model = model;
            prev_reps = std::move(reps);
            prev_N = N;
        }
    }
    throw PrecisionError("Z^d did not stabilize before the window ceiling (N <= " +
                         std::to_string(N0 + opts.N_ceiling_extra) + ")");
}

}  // namespace sl
