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

#include "springerlab/unitary.hpp"

#include <algorithm>
#include <thread>

#include "springerlab/errors.hpp"

namespace sl {

HermitianData make_hermitian(std::shared_ptr<const SpectralDatum> datum,
                             std::shared_ptr<const QuadExt> ext) {
    if (!datum->field()->same(ext->ext()))
        throw ConfigError("hermitian datum must live over the quadratic extension");
    HermitianData h;
    h.ext = ext;
    h.datum = datum;

    // hypothesis (1.3.1): gamma* = -gamma coefficientwise
    for (std::size_t i = 0; i < datum->size(); ++i) {
        const Series& g = datum->branch(i).gamma;
        for (long e = g.lo(); e < g.hi(); ++e) {
            Field::Elt a = g.at(e);
            if (ext->conj(a) != ext->ext().neg(a))
                throw ConfigError("branch " + std::to_string(i + 1) +
                                  " violates the trace-zero hypothesis "
                                  "(gamma* != -gamma)");
        }
    }

    const Field* k = datum->field();
    SeriesPoly dp = datum->product_polynomial().derivative();
    Field::Elt eps_pow = k->pow(ext->epsilon(),
                                static_cast<long long>(datum->n_total()) - 1);
    auto cond = datum->conductor_exponents();
    h.alpha_val_matches_conductor = true;
    for (std::size_t i = 0; i < datum->size(); ++i) {
        Series a = dp.eval_branch(datum->branch(i).gamma, datum->branch(i).n)
                       .scaled(eps_pow);
        // alpha* = alpha
        Series diff = a.mapped([&](Field::Elt x) { return ext->conj(x); }) - a;
        if (!(diff.exact() && diff.stored_empty()))
            throw IdentityError("alpha is not fixed by the involution");
        long v = a.valuation_or_throw("alpha");
        if (v == VAL_INF)
            throw IdentityError("alpha vanishes on branch " + std::to_string(i + 1));
        if (v != cond[i]) h.alpha_val_matches_conductor = false;
        h.alpha.push_back(std::move(a));
        h.alpha_val.push_back(v);
    }
    return h;
}

Series hermitian_pair(const std::vector<Series>& x, const std::vector<Series>& y,
                      const HermitianData& h, long pi_prec) {
    const Field* k = h.datum->field();
    Series total = Series::zero(k, Series::PI_VAR).truncated(pi_prec);
    for (std::size_t i = 0; i < h.datum->size(); ++i) {
        const long n = h.datum->branch(i).n;
        if (x[i].stored_empty() || y[i].stored_empty()) continue;
        Series xs = x[i].mapped([&](Field::Elt a) { return h.ext->conj(a); });
        Series xy = xs * y[i];
        long val_xy = xy.stored_empty() ? 0 : xy.lo();
        long need = n * pi_prec - val_xy + h.alpha_val[i] + 1;
        if (need < 1) need = 1;
        Series ainv = h.alpha[i].shifted(-h.alpha_val[i]).inverse(need)
                          .shifted(-h.alpha_val[i]);
        Series z = ainv * xy;
        if (z.stored_empty()) continue;
        // Tr(sum z_e t^e) = n * sum_{n | e} z_e pi^{e/n}
        auto ceil_div = [](long a, long b) {
            return a >= 0 ? (a + b - 1) / b : -((-a) / b);
        };
        long wstart = ceil_div(z.lo(), n);
        std::vector<Field::Elt> coeffs;
        for (long w = wstart; w < pi_prec; ++w)
            coeffs.push_back(k->mul(k->from_int(n), z.at(n * w)));
        Series tr(k, Series::PI_VAR, wstart, std::move(coeffs), pi_prec);
        total = total + tr;
    }
    return total;
}

LatticePoint dual_lattice(const LatticePoint& m, const WindowModel& model,
                          const HermitianData& h, const WindowModel& target_model) {
    if (target_model.d() != -model.d())
        throw IdentityError("dual target model must have the opposite index");
    if (target_model.N() != model.N())
        throw IdentityError("dual target model must share the window depth");
    const Field* k = model.field();
    const SpectralDatum& datum = model.datum();
    const long two_n = 2 * model.N();

    FqMat span = model.full_span(m);
    const std::size_t tdim = target_model.dim();

    // condition matrix over the unknown coordinates of y
    FqMat conditions(k, 0, tdim);
    std::vector<std::vector<Series>> basis_series;
    for (std::size_t j = 0; j < tdim; ++j)
        basis_series.push_back(
            datum.row_to_series(target_model.quot_basis().row(j), target_model.cuts()));

    // generators of pi^N M over O_F: the window span rows plus pi^K times
    // the A-window basis (the part of the lattice beyond the cut; its own
    // deeper tail is implied by pi-linearity of the conditions)
    std::vector<std::vector<Series>> gens;
    for (std::size_t r = 0; r < span.rows(); ++r)
        gens.push_back(datum.row_to_series(span.row(r), model.cuts()));
    for (std::size_t r = 0; r < model.order_basis().rows(); ++r) {
        auto xs = datum.row_to_series(model.order_basis().row(r), model.cuts());
        for (std::size_t i = 0; i < datum.size(); ++i)
            xs[i] = xs[i].shifted(model.K() *
                                  static_cast<long>(datum.branch(i).n));
        gens.push_back(std::move(xs));
    }

    for (const auto& xr : gens) {
        // values v_j = <x_r, b_j>; conditions: every pi-coefficient below
        // 2N vanishes (x and y both carry a pi^N shift)
        std::vector<Series> vals;
        long lo = two_n;
        for (std::size_t j = 0; j < tdim; ++j) {
            Series v = hermitian_pair(xr, basis_series[j], h, two_n);
            if (!v.stored_empty()) lo = std::min(lo, v.lo());
            vals.push_back(std::move(v));
        }
        for (long w = lo; w < two_n; ++w) {
            std::vector<Field::Elt> crow(tdim, 0);
            bool any = false;
            for (std::size_t j = 0; j < tdim; ++j) {
                Field::Elt c = vals[j].at(w);
                crow[j] = c;
                if (c != 0) any = true;
            }
            if (any) conditions.append_row(crow);
        }
    }
    FqMat sol = conditions.right_kernel();
    if (sol.rows() != target_model.plane_dim())
        throw WindowError("dual lattice dimension " + std::to_string(sol.rows()) +
                          " does not match the target plane " +
                          std::to_string(target_model.plane_dim()));
    LatticePoint out;
    out.coords = std::move(sol);
    out.nu = target_model.nu_of_span(target_model.full_span(out));
    return out;
}

Classification classify_z_points(const ZPointsResult& z, const HermitianData& h,
                                 unsigned threads) {
    Classification cls;
    const std::size_t n = z.reps.size();
    cls.reps.resize(n);

    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            ClassifiedRep out;
            out.rep = z.reps[i];
            LatticePoint f = twisted_frobenius(z.reps[i], *z.model, h, *z.model);
            auto [fc, lam] = canonicalize(f, *z.model);
            (void)lam;
            if (fc == z.reps[i]) {
                out.fixed = true;
                out.lambda.resize(z.reps[i].nu.size());
                for (std::size_t b = 0; b < out.lambda.size(); ++b)
                    out.lambda[b] = f.nu[b] - z.reps[i].nu[b];
                out.lbar.resize(out.lambda.size());
                for (std::size_t b = 0; b < out.lambda.size(); ++b)
                    out.lbar[b] = static_cast<int>(((out.lambda[b] % 2) + 2) % 2);
            }
            cls.reps[i] = std::move(out);
        }
    };

    if (threads <= 1 || n < 8) {
        work(0, n);
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (n + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            std::size_t b = t * chunk, e = std::min(n, b + chunk);
            if (b >= e) break;
            pool.emplace_back(work, b, e);
        }
        for (auto& th : pool) th.join();
    }

    for (const auto& r : cls.reps) {
        if (r.fixed) {
            ++cls.fixed_total;
            ++cls.counts[r.lbar];
        } else {
            ++cls.discarded;
        }
    }
    return cls;
}

OrbitalValues orbital_integrals(const std::map<LambdaClass, long>& counts,
                                const std::vector<std::size_t>& left_part) {
    OrbitalValues v;
    for (const auto& [lbar, c] : counts) {
        int parity = 0;
        for (auto i : left_part) parity ^= lbar[i] & 1;
        v.o_kappa += parity != 0 ? -c : c;
        v.so += c;
    }
    return v;
}

}  // namespace sl
