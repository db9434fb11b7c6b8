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

#include "springerlab/spectral.hpp"

#include <algorithm>
#include <numeric>

#include "springerlab/errors.hpp"

namespace sl {

std::size_t WindowCuts::dim() const {
    long d = 0;
    for (long c : cut) d += c;
    return static_cast<std::size_t>(d);
}

std::size_t WindowCuts::col(std::size_t branch, long e) const {
    std::size_t off = 0;
    for (std::size_t i = 0; i < branch; ++i) off += static_cast<std::size_t>(cut[i]);
    return off + static_cast<std::size_t>(e);
}

std::pair<std::size_t, long> WindowCuts::decode(std::size_t c) const {
    for (std::size_t i = 0; i < cut.size(); ++i) {
        if (c < static_cast<std::size_t>(cut[i])) return {i, static_cast<long>(c)};
        c -= static_cast<std::size_t>(cut[i]);
    }
    throw IdentityError("window column out of range");
}

namespace {

std::vector<Field::Elt> win_mul_pi(const std::vector<Branch>& bs,
                                   const std::vector<Field::Elt>& row,
                                   const WindowCuts& cuts) {
    std::vector<Field::Elt> out(row.size(), 0);
    for (std::size_t i = 0; i < bs.size(); ++i) {
        const long cut = cuts.cut[i];
        const long n = bs[i].n;
        for (long e = 0; e + n < cut; ++e) {
            Field::Elt v = row[cuts.col(i, e)];
            if (v != 0) out[cuts.col(i, e + n)] = v;
        }
    }
    return out;
}

std::vector<Field::Elt> win_mul_gamma(const Field* k, const std::vector<Branch>& bs,
                                      const std::vector<Field::Elt>& row,
                                      const WindowCuts& cuts) {
    std::vector<Field::Elt> out(row.size(), 0);
    for (std::size_t i = 0; i < bs.size(); ++i) {
        const long cut = cuts.cut[i];
        const Series& g = bs[i].gamma;
        for (long e = 0; e < cut; ++e) {
            Field::Elt v = row[cuts.col(i, e)];
            if (v == 0) continue;
            for (long w = g.lo(); w < g.hi() && e + w < cut; ++w) {
                Field::Elt gv = g.at(w);
                if (gv == 0) continue;
                std::size_t c = cuts.col(i, e + w);
                out[c] = k->add(out[c], k->mul(v, gv));
            }
        }
    }
    return out;
}

OrderWindow win_saturate(const Field* k, const std::vector<Branch>& bs,
                         const WindowCuts& cuts) {
    const std::size_t dim = cuts.dim();
    FqMat basis(k, 0, dim);
    std::vector<Field::Elt> one(dim, 0);
    for (std::size_t i = 0; i < bs.size(); ++i)
        if (cuts.cut[i] > 0) one[cuts.col(i, 0)] = k->one();
    basis.append_row(one);
    auto pivots = basis.rref();

    std::vector<std::vector<Field::Elt>> frontier = {one};
    long guard = static_cast<long>(dim) + 2;
    while (!frontier.empty() && guard-- > 0) {
        std::vector<std::vector<Field::Elt>> next;
        for (const auto& row : frontier)
            for (int which = 0; which < 2; ++which) {
                auto prod = which == 0 ? win_mul_pi(bs, row, cuts)
                                       : win_mul_gamma(k, bs, row, cuts);
                auto red = prod;
                if (!basis.reduce_by(red, pivots)) {
                    basis.append_row(prod);
                    pivots = basis.rref();
                    next.push_back(prod);
                }
            }
        frontier = std::move(next);
    }
    if (guard <= 0) throw IdentityError("order window saturation did not stabilize");
    return OrderWindow{cuts, std::move(basis), std::move(pivots)};
}

// multiplication-by-gamma matrix on O_{E_i} = O_F <1, t, ..., t^{n-1}>
std::vector<std::vector<Series>> gamma_matrix(const Field* k, const Branch& b) {
    const unsigned n = b.n;
    std::vector<std::vector<Series>> m(
        n, std::vector<Series>(n, Series::zero(k, Series::PI_VAR)));
    for (unsigned a = 0; a < n; ++a) {
        for (long v = b.gamma.lo(); v < b.gamma.hi(); ++v) {
            Field::Elt cv = b.gamma.at(v);
            if (cv == 0) continue;
            long e = v + static_cast<long>(a);
            long qq = e / n;
            long r = e % n;
            m[static_cast<std::size_t>(r)][a] =
                m[static_cast<std::size_t>(r)][a] +
                Series::monomial(k, Series::PI_VAR, qq, cv);
        }
    }
    return m;
}

}  // namespace

SpectralDatum::SpectralDatum(std::shared_ptr<const Field> field,
                             std::vector<Branch> branches, long precision_ceiling)
    : field_(std::move(field)), branches_(std::move(branches)),
      ceiling_(precision_ceiling) {
    validate();
    compute_caches();
}

void SpectralDatum::validate() const {
    if (branches_.empty()) throw ConfigError("branch family must be nonempty");
    for (std::size_t i = 0; i < branches_.size(); ++i) {
        const Branch& b = branches_[i];
        if (b.n == 0) throw ConfigError("ramification degree must be >= 1");
        if (b.n % field_->p() == 0)
            throw ConfigError("branch degree divisible by p: t^n = pi is "
                              "inseparable in characteristic " +
                              std::to_string(field_->p()));
        if (b.gamma.field() == nullptr || !b.gamma.field()->same(*field_))
            throw ConfigError("gamma coefficients live in the wrong field");
        if (!b.gamma.exact())
            throw ConfigError("gamma must be an exact polynomial");
        auto v = b.gamma.valuation();
        if (*v == VAL_INF)
            throw ConfigError("gamma = 0 is not allowed; use eps*pi^k for a "
                              "transverse smooth branch");
        if (*v < 1) throw ConfigError("gamma must vanish at the origin");
        long g = b.n;
        for (long e = b.gamma.lo(); e < b.gamma.hi(); ++e)
            if (b.gamma.at(e) != 0) g = std::gcd(g, e);
        if (g != 1)
            throw ConfigError("gamma does not generate the branch field "
                              "(gcd of exponents and n is " +
                              std::to_string(g) + ")");
    }
}

void SpectralDatum::compute_caches() {
    const Field* k = field_.get();
    n_total_ = 0;
    for (const auto& b : branches_) n_total_ += b.n;

    minpoly_.clear();
    for (const auto& b : branches_) {
        SeriesPoly p = char_poly(k, gamma_matrix(k, b));
        if (!p.is_monic()) throw IdentityError("minimal polynomial is not monic");
        Series check = p.eval_branch(b.gamma, b.n);
        if (!(check.exact() && check.stored_empty()))
            throw IdentityError("P_i(gamma_i) != 0: minimal polynomial is broken");
        minpoly_.push_back(std::move(p));
    }

    const std::size_t s = branches_.size();
    r_.assign(s, std::vector<long>(s, 0));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = i + 1; j < s; ++j) {
            long rij;
            try {
                rij = resultant_valuation(minpoly_[i], minpoly_[j]);
            } catch (const IdentityError&) {
                throw ConfigError("branches " + std::to_string(i + 1) + " and " +
                                  std::to_string(j + 1) +
                                  " have equal minimal polynomials");
            }
            r_[i][j] = r_[j][i] = rij;
        }

    delta_i_.assign(s, 0);
    for (std::size_t i = 0; i < s; ++i)
        delta_i_[i] = delta_direct_of(k, {branches_[i]}, ceiling_);
    delta_direct_ = s == 1 ? delta_i_[0] : delta_direct_of(k, branches_, ceiling_);
}

long SpectralDatum::delta_formula() const {
    long total = 0;
    for (std::size_t i = 0; i < branches_.size(); ++i) total += delta_i_[i];
    long rsum = 0;
    for (std::size_t i = 0; i < branches_.size(); ++i)
        for (std::size_t j = 0; j < branches_.size(); ++j)
            if (i != j) rsum += r_[i][j];
    if (rsum % 2 != 0) throw IdentityError("sum of r_ij is odd");
    return total + rsum / 2;
}

long SpectralDatum::r_pair(std::size_t i, std::size_t j) const {
    if (i == j) throw IdentityError("r_ij needs i != j");
    return r_[i][j];
}

long SpectralDatum::r_pair_eval(std::size_t i, std::size_t j) const {
    if (i == j) throw IdentityError("r_ij needs i != j");
    Series val = minpoly_[j].eval_branch(branches_[i].gamma, branches_[i].n);
    long v = val.valuation_or_throw("P_j(gamma_i)");
    if (v == VAL_INF) throw ConfigError("branches share a minimal polynomial");
    return v;
}

SeriesPoly SpectralDatum::product_polynomial() const {
    SeriesPoly p(field_.get(),
                 {Series::constant(field_.get(), Series::PI_VAR, field_->one())});
    for (const auto& mp : minpoly_) p = p * mp;
    return p;
}

std::vector<long> SpectralDatum::conductor_exponents() const {
    const std::size_t s = branches_.size();
    std::vector<long> c(s, 0);
    for (std::size_t i = 0; i < s; ++i) {
        c[i] = 2 * delta_i_[i];
        for (std::size_t j = 0; j < s; ++j)
            if (j != i) c[i] += r_[i][j];
    }
    // verify t_i^{c_i + s} Atilde_i lies in the A window (s < n_i suffices,
    // the rest follows by multiplying with pi) and that dim(A/a) = delta
    long maxn = 0;
    for (const auto& b : branches_) maxn = std::max<long>(maxn, b.n);
    WindowCuts cuts;
    for (std::size_t i = 0; i < s; ++i) cuts.cut.push_back(c[i] + maxn + 1);
    OrderWindow w = order_window(cuts);
    for (std::size_t i = 0; i < s; ++i) {
        for (long sft = 0; sft < static_cast<long>(branches_[i].n); ++sft) {
            std::vector<Field::Elt> mono(cuts.dim(), 0);
            mono[cuts.col(i, c[i] + sft)] = field_->one();
            if (!w.basis.reduce_by(mono, w.pivots))
                throw IdentityError("conductor verification failed on branch " +
                                    std::to_string(i + 1));
        }
    }
    long window_delta =
        static_cast<long>(cuts.dim()) - static_cast<long>(w.basis.rows());
    if (window_delta != delta_direct_)
        throw IdentityError("window codimension above the conductor is not delta");
    // dim(A/a) = (#pivots below the conductor level) must equal delta
    long below = 0;
    for (auto pcol : w.pivots) {
        auto [bi, e] = cuts.decode(pcol);
        if (e < c[bi]) ++below;
    }
    if (below != delta_direct_)
        throw IdentityError("dim(A/a) != delta_I (" + std::to_string(below) +
                            " vs " + std::to_string(delta_direct_) + ")");
    return c;
}

OrderWindow SpectralDatum::order_window(const WindowCuts& cuts) const {
    return win_saturate(field_.get(), branches_, cuts);
}

OrderWindow SpectralDatum::order_window(long level) const {
    WindowCuts cuts;
    cuts.cut.assign(branches_.size(), level);
    return order_window(cuts);
}

std::vector<Field::Elt> SpectralDatum::mul_pi(const std::vector<Field::Elt>& row,
                                              const WindowCuts& cuts) const {
    return win_mul_pi(branches_, row, cuts);
}

std::vector<Field::Elt> SpectralDatum::mul_gamma(const std::vector<Field::Elt>& row,
                                                 const WindowCuts& cuts) const {
    return win_mul_gamma(field_.get(), branches_, row, cuts);
}

std::vector<Field::Elt> SpectralDatum::mul_t_shift(const std::vector<Field::Elt>& row,
                                                   const WindowCuts& cuts,
                                                   const std::vector<long>& shift) const {
    std::vector<Field::Elt> out(row.size(), 0);
    for (std::size_t i = 0; i < branches_.size(); ++i) {
        const long cut = cuts.cut[i];
        const long sh = shift[i];
        for (long e = 0; e < cut; ++e) {
            Field::Elt v = row[cuts.col(i, e)];
            if (v == 0) continue;
            long ne = e + sh;
            if (ne < 0) throw WindowError("t-shift pushed an exponent below zero");
            if (ne < cut) out[cuts.col(i, ne)] = v;
            // exponents >= cut fall into the window floor ideal
        }
    }
    return out;
}

std::vector<Series> SpectralDatum::row_to_series(const std::vector<Field::Elt>& row,
                                                 const WindowCuts& cuts) const {
    std::vector<Series> out;
    for (std::size_t i = 0; i < branches_.size(); ++i) {
        std::vector<Field::Elt> c(static_cast<std::size_t>(cuts.cut[i]), 0);
        for (long e = 0; e < cuts.cut[i]; ++e)
            c[static_cast<std::size_t>(e)] = row[cuts.col(i, e)];
        out.emplace_back(field_.get(), static_cast<int>(i), 0, std::move(c));
    }
    return out;
}

std::vector<Field::Elt> SpectralDatum::series_to_row(const std::vector<Series>& x,
                                                     const WindowCuts& cuts) const {
    std::vector<Field::Elt> row(cuts.dim(), 0);
    for (std::size_t i = 0; i < branches_.size(); ++i) {
        const Series& s = x[i];
        if (s.stored_empty()) continue;
        if (s.lo() < 0) throw WindowError("negative exponent entering a window");
        if (!s.exact() && s.prec() < cuts.cut[i])
            throw PrecisionError("series precision below the window cut");
        for (long e = s.lo(); e < s.hi() && e < cuts.cut[i]; ++e)
            row[cuts.col(i, e)] = s.at(e);
    }
    return row;
}

RosenlichtResult SpectralDatum::rosenlicht_pairing() const {
    const Field* k = field_.get();
    auto cond = conductor_exponents();
    const std::size_t s = branches_.size();
    const long delta = delta_direct_;

    if (delta == 0) return RosenlichtResult{FqMat(k, 0, 0), true, 0};

    WindowCuts cuts;
    cuts.cut = cond;
    long tail_dim = 0;
    for (long c : cond) tail_dim += c;
    if (tail_dim != 2 * delta)
        throw IdentityError("conductor degrees do not sum to 2*delta");

    OrderWindow w = order_window(cuts);

    // omega candidates: coefficients of t_i^{-b} dt_i for b = 1..c_i;
    // conditions Res_I(x * omega) = 0 for x over the A-window basis
    auto tail_col = [&](std::size_t i, long b) {
        std::size_t off = 0;
        for (std::size_t j = 0; j < i; ++j) off += static_cast<std::size_t>(cond[j]);
        return off + static_cast<std::size_t>(b - 1);
    };

    FqMat conditions(k, 0, static_cast<std::size_t>(tail_dim));
    for (std::size_t r = 0; r < w.basis.rows(); ++r) {
        std::vector<Field::Elt> crow(static_cast<std::size_t>(tail_dim), 0);
        for (std::size_t i = 0; i < s; ++i)
            for (long b = 1; b <= cond[i]; ++b)
                crow[tail_col(i, b)] = w.basis.get(r, cuts.col(i, b - 1));
        conditions.append_row(crow);
    }
    FqMat omega = conditions.right_kernel();
    if (static_cast<long>(omega.rows()) != delta)
        throw IdentityError("omega/Omega dimension " + std::to_string(omega.rows()) +
                            " differs from delta " + std::to_string(delta));

    std::vector<bool> is_pivot(cuts.dim(), false);
    for (auto p : w.pivots) is_pivot[p] = true;
    std::vector<std::size_t> coset;
    for (std::size_t c = 0; c < cuts.dim(); ++c)
        if (!is_pivot[c]) coset.push_back(c);
    if (static_cast<long>(coset.size()) != delta)
        throw IdentityError("Atilde/A coset dimension differs from delta");

    FqMat pairing(k, static_cast<std::size_t>(delta), static_cast<std::size_t>(delta));
    for (std::size_t u = 0; u < coset.size(); ++u) {
        auto [bi, e] = cuts.decode(coset[u]);
        for (std::size_t v = 0; v < omega.rows(); ++v) {
            Field::Elt val = 0;
            if (e + 1 <= cond[bi]) val = omega.get(v, tail_col(bi, e + 1));
            pairing.set(u, v, val);
        }
    }
    bool perfect = pairing.rank() == static_cast<std::size_t>(delta);
    return RosenlichtResult{std::move(pairing), perfect,
                            static_cast<std::size_t>(delta)};
}

SpectralDatum SpectralDatum::restrict(const std::vector<std::size_t>& subset) const {
    std::vector<Branch> bs;
    for (std::size_t pos = 0; pos < subset.size(); ++pos) {
        const Branch& src = branches_[subset[pos]];
        std::vector<Field::Elt> c;
        for (long e = src.gamma.lo(); e < src.gamma.hi(); ++e)
            c.push_back(src.gamma.at(e));
        Branch b;
        b.n = src.n;
        b.gamma = Series(field_.get(), static_cast<int>(pos), src.gamma.lo(),
                         std::move(c));
        bs.push_back(std::move(b));
    }
    return SpectralDatum(field_, std::move(bs), ceiling_);
}

long delta_direct_of(const Field* field, const std::vector<Branch>& branches,
                     long ceiling) {
    long maxn = 0;
    for (const auto& b : branches) maxn = std::max<long>(maxn, b.n);
    auto codim = [&](long level) {
        WindowCuts cuts;
        cuts.cut.assign(branches.size(), level);
        OrderWindow w = win_saturate(field, branches, cuts);
        return static_cast<long>(cuts.dim()) - static_cast<long>(w.basis.rows());
    };
    long level = maxn + 1;
    long prev = codim(level);
    while (level + maxn <= ceiling) {
        long cur = codim(level + maxn);
        if (cur == prev) return cur;
        prev = cur;
        level += maxn;
    }
    throw PrecisionError("delta did not stabilize below the precision ceiling " +
                         std::to_string(ceiling));
}

}  // namespace sl
