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

#include "springerlab/strata.hpp"

#include <algorithm>

#include "springerlab/errors.hpp"

namespace sl {

namespace {

std::vector<std::size_t> window_cols(const WindowCuts& cuts,
                                     const std::vector<std::size_t>& branches) {
    std::vector<std::size_t> cols;
    for (auto i : branches)
        for (long e = 0; e < cuts.cut[i]; ++e) cols.push_back(cuts.col(i, e));
    return cols;
}

FqMat restrict_cols(const FqMat& m, const std::vector<std::size_t>& cols) {
    FqMat out(m.field(), 0, cols.size());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::vector<Field::Elt> row;
        row.reserve(cols.size());
        for (auto c : cols) row.push_back(m.get(r, c));
        out.append_row(row);
    }
    return out;
}

// rank of the pi^N A_J image inside the restricted window
long reference_rank(const SpectralDatum& datum, const WindowModel& model,
                    const std::vector<std::size_t>& part) {
    SpectralDatum sub = datum.restrict(part);
    WindowCuts cuts;
    for (auto i : part) cuts.cut.push_back(model.cuts().cut[i]);
    OrderWindow w = sub.order_window(cuts);
    std::vector<long> shift;
    for (auto i : part)
        shift.push_back(model.N() * static_cast<long>(datum.branch(i).n));
    FqMat rows(datum.field(), 0, cuts.dim());
    for (std::size_t r = 0; r < w.basis.rows(); ++r)
        rows.append_row(sub.mul_t_shift(w.basis.row(r), cuts, shift));
    rows.rref();
    return static_cast<long>(rows.rows());
}

}  // namespace

PartitionSpec make_partition(const SpectralDatum& datum,
                             std::vector<std::size_t> left,
                             std::vector<std::size_t> right) {
    if (left.empty() || right.empty())
        throw ConfigError("both parts of a partition must be nonempty");
    std::vector<bool> used(datum.size(), false);
    for (auto i : left) {
        if (i >= datum.size() || used[i]) throw ConfigError("bad partition (left)");
        used[i] = true;
    }
    for (auto i : right) {
        if (i >= datum.size() || used[i]) throw ConfigError("bad partition (right)");
        used[i] = true;
    }
    for (bool u : used)
        if (!u) throw ConfigError("partition does not cover the branch set");

    PartitionSpec part;
    part.left = std::move(left);
    part.right = std::move(right);
    for (auto i : part.left)
        for (auto j : part.right) part.r += datum.r_pair(i, j);

    // Remark 1.3.5: r = delta_I - delta_I1 - delta_I2
    SpectralDatum d1 = datum.restrict(part.left);
    SpectralDatum d2 = datum.restrict(part.right);
    long gap = datum.delta_direct() - d1.delta_direct() - d2.delta_direct();
    if (gap != part.r)
        throw IdentityError("r_{I1,I2} != delta_I - delta_I1 - delta_I2 (" +
                            std::to_string(part.r) + " vs " + std::to_string(gap) + ")");
    return part;
}

SplitSpans split_lattice(const LatticePoint& m, const PartitionSpec& part,
                         const WindowModel& model) {
    const SpectralDatum& datum = model.datum();
    FqMat span = model.full_span(m);

    SplitSpans out;
    for (auto i : part.left) out.cuts1.cut.push_back(model.cuts().cut[i]);
    for (auto i : part.right) out.cuts2.cut.push_back(model.cuts().cut[i]);
    auto cols1 = window_cols(model.cuts(), part.left);
    auto cols2 = window_cols(model.cuts(), part.right);

    // projections
    out.m1_pp = restrict_cols(span, cols1);
    out.m1_pp.rref();
    out.m2_pp = restrict_cols(span, cols2);
    out.m2_pp.rref();

    // intersections: rows of the span vanishing on the other part
    auto kernel_part = [&](const std::vector<std::size_t>& other_cols,
                           const std::vector<std::size_t>& keep_cols) {
        FqMat other = restrict_cols(span, other_cols);
        FqMat combos = other.left_kernel();
        FqMat rows(datum.field(), 0, keep_cols.size());
        for (std::size_t r = 0; r < combos.rows(); ++r) {
            auto full = span.apply(combos.row(r));
            std::vector<Field::Elt> kept;
            kept.reserve(keep_cols.size());
            for (auto c : keep_cols) kept.push_back(full[c]);
            rows.append_row(kept);
        }
        rows.rref();
        return rows;
    };
    out.m1_prime = kernel_part(cols2, cols1);
    out.m2_prime = kernel_part(cols1, cols2);

    out.ref1 = reference_rank(datum, model, part.left);
    out.ref2 = reference_rank(datum, model, part.right);
    return out;
}

IndexProfile index_profile(const LatticePoint& m, const PartitionSpec& part,
                           const WindowModel& model) {
    SplitSpans s = split_lattice(m, part, model);
    IndexProfile p;
    p.ind1_prime = static_cast<long>(s.m1_prime.rows()) - s.ref1;
    p.ind1_pp = static_cast<long>(s.m1_pp.rows()) - s.ref1;
    p.ind2_prime = static_cast<long>(s.m2_prime.rows()) - s.ref2;
    p.ind2_pp = static_cast<long>(s.m2_pp.rows()) - s.ref2;
    p.rho = p.ind1_pp - p.ind1_prime;

    if (p.ind2_pp - p.ind2_prime != p.rho)
        throw IdentityError("index gaps differ between the two parts");
    if (p.rho < 0 || p.rho > part.r)
        throw IdentityError("rho = " + std::to_string(p.rho) + " outside [0, r]");
    if (p.ind1_prime + p.ind2_pp != model.d() - part.r)
        throw IdentityError("ind'_1 + ind''_2 != d - r");
    if (p.ind2_prime + p.ind1_pp != model.d() - part.r)
        throw IdentityError("ind'_2 + ind''_1 != d - r");
    return p;
}

std::map<long, std::vector<std::size_t>> stratify(const std::vector<LatticePoint>& reps,
                                                  const PartitionSpec& part,
                                                  const WindowModel& model) {
    std::map<long, std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        IndexProfile p = index_profile(reps[i], part, model);
        out[p.rho].push_back(i);
    }
    return out;
}

SubLattice sub_lattice_point(const LatticePoint& m, const PartitionSpec& part,
                             const WindowModel& model, int which) {
    const SpectralDatum& datum = model.datum();
    SplitSpans s = split_lattice(m, part, model);
    const std::vector<std::size_t>& bs = (which < 2) ? part.left : part.right;
    const WindowCuts& cuts = (which < 2) ? s.cuts1 : s.cuts2;
    const FqMat& rows = which == 0   ? s.m1_prime
                        : which == 1 ? s.m1_pp
                        : which == 2 ? s.m2_prime
                                     : s.m2_pp;
    long ref = (which < 2) ? s.ref1 : s.ref2;
    long d_sub = static_cast<long>(rows.rows()) - ref;

    SubLattice out;
    out.datum = std::make_shared<SpectralDatum>(datum.restrict(bs));

    // N_sub: deep enough that pi^{N_sub} L fits inside A_{I_alpha}
    auto cond = out.datum->conductor_exponents();
    long extra = 0;
    for (std::size_t i = 0; i < bs.size(); ++i) {
        long n = out.datum->branch(i).n;
        extra = std::max(extra, (cond[i] + n - 1) / n);
    }
    long n_sub = model.N() + extra;
    // d < n_I N is required by the window
    while (d_sub >= static_cast<long>(out.datum->n_total()) * n_sub) ++n_sub;
    out.model = std::make_shared<WindowModel>(out.datum, n_sub, d_sub);

    // lift rows into the sub-model coordinates: shift by (N_sub - N) n_i
    FqMat big(datum.field(), 0, out.model->cuts().dim());
    for (std::size_t r = 0; r < rows.rows(); ++r) {
        std::vector<Field::Elt> v(out.model->cuts().dim(), 0);
        for (std::size_t i = 0; i < bs.size(); ++i) {
            long n = out.datum->branch(i).n;
            long shift = (n_sub - model.N()) * n;
            for (long e = 0; e < cuts.cut[i]; ++e) {
                Field::Elt x = rows.get(r, cuts.col(i, e));
                if (x == 0) continue;
                long ne = e + shift;
                if (ne < out.model->cuts().cut[i])
                    v[out.model->cuts().col(i, ne)] = x;
            }
        }
        big.append_row(v);
    }
    // beyond the source cut the sub-lattice still contains the conductor
    // monomials of the big model; re-add them shifted
    for (std::size_t i = 0; i < bs.size(); ++i) {
        long n = out.datum->branch(i).n;
        long from = cuts.cut[i] + (n_sub - model.N()) * n;
        for (long e = from; e < out.model->cuts().cut[i]; ++e) {
            std::vector<Field::Elt> mono(out.model->cuts().dim(), 0);
            mono[out.model->cuts().col(i, e)] = datum.field()->one();
            big.append_row(mono);
        }
    }
    out.point = out.model->point_from_big_rows(big);
    return out;
}

namespace {

struct TorsionModule {
    std::size_t dim = 0;
    FqMat pi, gamma;
};

// L_hat / pi^depth L_hat with the pi and gamma actions, from the point's
// full span (which contains the window floor, so the truncation is exact)
TorsionModule torsion_module(const WindowModel& model, const LatticePoint& m,
                             long depth) {
    const SpectralDatum& datum = model.datum();
    const Field* k = datum.field();
    const std::size_t s = datum.size();

    WindowCuts ext;
    for (std::size_t i = 0; i < s; ++i)
        ext.cut.push_back(model.cuts().cut[i] +
                          depth * static_cast<long>(datum.branch(i).n));

    FqMat span = model.full_span(m);
    FqMat top(k, 0, ext.dim());
    for (std::size_t r = 0; r < span.rows(); ++r) {
        std::vector<Field::Elt> v(ext.dim(), 0);
        for (std::size_t i = 0; i < s; ++i)
            for (long e = 0; e < model.cuts().cut[i]; ++e)
                v[ext.col(i, e)] = span.get(r, model.cuts().col(i, e));
        top.append_row(v);
    }
    // the part of L_hat beyond the old cut: monomials in the floor ideal
    for (std::size_t i = 0; i < s; ++i)
        for (long e = model.cuts().cut[i]; e < ext.cut[i]; ++e) {
            std::vector<Field::Elt> mono(ext.dim(), 0);
            mono[ext.col(i, e)] = k->one();
            top.append_row(mono);
        }
    auto top_piv = top.rref();

    std::vector<long> shift;
    for (std::size_t i = 0; i < s; ++i)
        shift.push_back(depth * static_cast<long>(datum.branch(i).n));
    FqMat low(k, 0, ext.dim());
    for (std::size_t r = 0; r < top.rows(); ++r)
        low.append_row(datum.mul_t_shift(top.row(r), ext, shift));
    auto low_piv = low.rref();

    FqMat quot(k, 0, ext.dim());
    for (std::size_t r = 0; r < top.rows(); ++r) {
        auto row = top.row(r);
        low.reduce_by(row, low_piv);
        bool nz = false;
        for (auto x : row)
            if (x != 0) { nz = true; break; }
        if (nz) quot.append_row(row);
    }
    auto quot_piv = quot.rref();
    (void)top_piv;

    long expect = depth * static_cast<long>(datum.n_total());
    if (static_cast<long>(quot.rows()) != expect)
        throw IdentityError("torsion module has dimension " +
                            std::to_string(quot.rows()) + ", expected " +
                            std::to_string(expect));

    auto to_coords = [&](std::vector<Field::Elt> v) {
        low.reduce_by(v, low_piv);
        std::vector<Field::Elt> coords;
        if (!quot.reduce_by(v, quot_piv, &coords))
            throw IdentityError("torsion module is not closed under the operators");
        return coords;
    };

    TorsionModule tm;
    tm.dim = quot.rows();
    tm.pi = FqMat(k, tm.dim, tm.dim);
    tm.gamma = FqMat(k, tm.dim, tm.dim);
    for (std::size_t u = 0; u < tm.dim; ++u) {
        tm.pi.set_row(u, to_coords(datum.mul_pi(quot.row(u), ext)));
        tm.gamma.set_row(u, to_coords(datum.mul_gamma(quot.row(u), ext)));
    }
    return tm;
}

}  // namespace

long fiber_dimension(const WindowModel& model1, const LatticePoint& m1,
                     const WindowModel& model2, const LatticePoint& m2,
                     long depth) {
    const Field* k = model1.field();
    TorsionModule src = torsion_module(model2, m2, depth);
    TorsionModule tgt = torsion_module(model1, m1, depth);

    // unknown X: src.dim x tgt.dim, conditions G_src X = X G_tgt for both
    // operators; unknowns flattened row-major
    const std::size_t su = src.dim, tu = tgt.dim;
    const std::size_t unknowns = su * tu;
    FqMat cond(k, 0, unknowns);
    auto add_conditions = [&](const FqMat& gs, const FqMat& gt) {
        for (std::size_t a = 0; a < su; ++a)
            for (std::size_t b = 0; b < tu; ++b) {
                std::vector<Field::Elt> row(unknowns, 0);
                for (std::size_t u = 0; u < su; ++u) {
                    Field::Elt c = gs.get(a, u);
                    if (c != 0) {
                        std::size_t idx = u * tu + b;
                        row[idx] = k->add(row[idx], c);
                    }
                }
                for (std::size_t v = 0; v < tu; ++v) {
                    Field::Elt c = gt.get(v, b);
                    if (c != 0) {
                        std::size_t idx = a * tu + v;
                        row[idx] = k->sub(row[idx], c);
                    }
                }
                bool nz = false;
                for (auto x : row)
                    if (x != 0) { nz = true; break; }
                if (nz) cond.append_row(row);
            }
    };
    add_conditions(src.pi, tgt.pi);
    add_conditions(src.gamma, tgt.gamma);
    FqMat sol = cond.right_kernel();
    return static_cast<long>(sol.rows());
}

long signed_strata_sum(const std::vector<StrataCount>& strata, long r) {
    long sum = 0;
    for (const auto& s : strata) {
        long term = s.fixed;
        if (((r - s.rho) % 2 + 2) % 2 == 1) term = -term;
        sum += term;
    }
    return sum;
}

FLOutcome verify_fundamental_lemma(const ZPointsResult& z, const Classification& cls,
                                   std::shared_ptr<const SpectralDatum> datum,
                                   std::shared_ptr<const QuadExt> ext,
                                   const PartitionSpec& part, const ZOptions& opts,
                                   unsigned threads) {
    FLOutcome out;
    out.left = part.left;
    out.right = part.right;
    out.r = part.r;
    out.q_base = ext->base().q();
    out.counts = cls.counts;
    out.discarded = cls.discarded;
    out.N_full = z.model->N();
    out.threshold_full = z.threshold_N;

    OrbitalValues ov = orbital_integrals(cls.counts, part.left);
    out.o_kappa = ov.o_kappa;
    out.so_full = ov.so;

    // stable integrals of the endoscopic sub-data (fresh hermitian data;
    // the form is NOT the restriction of the big one)
    auto so_of = [&](const std::vector<std::size_t>& bs, long& n_used) {
        auto sub = std::make_shared<SpectralDatum>(datum->restrict(bs));
        HermitianData hs = make_hermitian(sub, ext);
        ZPointsResult zs = z_points(sub, 0, opts);
        Classification cs = classify_z_points(zs, hs, threads);
        n_used = zs.model->N();
        return cs.fixed_total;
    };
    out.so_left = so_of(part.left, out.N_left);
    out.so_right = so_of(part.right, out.N_right);

    long rhs = out.so_left * out.so_right;
    for (long i = 0; i < part.r; ++i) rhs *= out.q_base;
    out.rhs = rhs;
    out.fl_holds = out.o_kappa == rhs;

    // strata of Z^0 and the signed cross-check of Remark 1.4.8
    std::map<long, StrataCount> strata;
    for (long rho = 0; rho <= part.r; ++rho) strata[rho] = {rho, 0, 0};
    for (std::size_t i = 0; i < z.reps.size(); ++i) {
        IndexProfile p = index_profile(z.reps[i], part, *z.model);
        strata[p.rho].total += 1;
        if (cls.reps[i].fixed) strata[p.rho].fixed += 1;
    }
    for (auto& [rho, sc] : strata) out.strata.push_back(sc);
    out.signed_sum = signed_strata_sum(out.strata, part.r);
    out.signed_matches = out.signed_sum == out.o_kappa;
    return out;
}

}  // namespace sl
