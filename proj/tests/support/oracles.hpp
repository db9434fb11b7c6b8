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

// Test-only oracles, independent of the library's enumeration path.

#ifndef SPRINGERLAB_TESTS_ORACLES_HPP
#define SPRINGERLAB_TESTS_ORACLES_HPP

#include <set>
#include <vector>

#include "springerlab/fqmat.hpp"

namespace sl::oracle {

// All subspaces of F_q^dim of dimension k stable under every operator,
// enumerated the brute way: every reduced-row-echelon shape (pivot pattern)
// and every assignment of the free entries.  Exponential; tiny cases only.
inline std::vector<FqMat> grassmann_stable(const Field* k, std::size_t dim,
                                           std::size_t target,
                                           const std::vector<FqMat>& ops) {
    std::vector<FqMat> out;
    if (target > dim) return out;
    // pivot patterns: increasing index tuples
    std::vector<std::size_t> piv(target);
    for (std::size_t i = 0; i < target; ++i) piv[i] = i;
    auto next_pattern = [&]() {
        if (target == 0) return false;
        long i = static_cast<long>(target) - 1;
        while (i >= 0 && piv[static_cast<std::size_t>(i)] ==
                             dim - target + static_cast<std::size_t>(i))
            --i;
        if (i < 0) return false;
        ++piv[static_cast<std::size_t>(i)];
        for (std::size_t j = static_cast<std::size_t>(i) + 1; j < target; ++j)
            piv[j] = piv[j - 1] + 1;
        return true;
    };

    do {
        // free entries: (row i, col c) with c > piv[i], c not a pivot
        std::vector<std::pair<std::size_t, std::size_t>> free_pos;
        std::vector<bool> is_piv(dim, false);
        for (auto p : piv) is_piv[p] = true;
        for (std::size_t i = 0; i < target; ++i)
            for (std::size_t c = piv[i] + 1; c < dim; ++c)
                if (!is_piv[c]) free_pos.emplace_back(i, c);

        std::vector<unsigned> vals(free_pos.size(), 0);
        bool more = true;
        while (more) {
            FqMat mat(k, target, dim);
            for (std::size_t i = 0; i < target; ++i) mat.set(i, piv[i], k->one());
            for (std::size_t t = 0; t < free_pos.size(); ++t)
                mat.set(free_pos[t].first, free_pos[t].second,
                        static_cast<Field::Elt>(vals[t]));
            // stability under every operator
            FqMat chk = mat;
            auto pivots = chk.rref();
            bool stable = chk.rows() == target;
            for (const auto& op : ops) {
                if (!stable) break;
                for (std::size_t i = 0; i < target && stable; ++i) {
                    auto img = op.apply(mat.row(i));
                    if (!chk.reduce_by(img, pivots)) stable = false;
                }
            }
            if (stable) out.push_back(chk);

            more = false;
            for (std::size_t t = 0; t < vals.size(); ++t) {
                if (++vals[t] < k->q()) { more = true; break; }
                vals[t] = 0;
            }
            if (vals.empty()) more = false;
        }
        if (target == 0) break;
    } while (next_pattern());

    if (target == 0) {
        out.clear();
        out.push_back(FqMat(k, 0, dim));
    }
    std::sort(out.begin(), out.end(),
              [](const FqMat& a, const FqMat& b) { return a.lex_less(b); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Downward closure walk over submodules (kernels of functionals vanishing
// on the operator images), written separately from the library's search.
inline std::vector<FqMat> submodule_walk(const Field* k, std::size_t dim,
                                         std::size_t target,
                                         const std::vector<FqMat>& ops) {
    std::set<std::vector<uint16_t>> seen;
    auto key = [&](const FqMat& m) {
        std::vector<uint16_t> v;
        v.push_back(static_cast<uint16_t>(m.rows()));
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                v.push_back(m.get(r, c));
        return v;
    };
    std::vector<FqMat> stack{FqMat::identity(k, dim)};
    std::vector<FqMat> out;
    seen.insert(key(stack.back()));
    while (!stack.empty()) {
        FqMat s = stack.back();
        stack.pop_back();
        if (s.rows() == target) {
            out.push_back(s);
            continue;
        }
        if (s.rows() < target) continue;
        // enumerate all hyperplanes of s that remain stable
        // brute force: all codim-1 subspaces = kernels of nonzero
        // functionals on the row space, up to scalar
        std::size_t g = s.rows();
        std::vector<unsigned> phi(g, 0);
        for (std::size_t j = 0; j < g; ++j) {
            std::vector<unsigned> rest(g - j - 1, 0);
            bool more = true;
            while (more) {
                FqMat sub(k, 0, dim);
                // kernel of phi with phi_j = 1, phi_t = rest for t > j
                for (std::size_t u = 0; u < g; ++u) {
                    if (u == j) continue;
                    Field::Elt pu = u > j ? static_cast<Field::Elt>(rest[u - j - 1]) : 0;
                    std::vector<Field::Elt> comb(dim, 0);
                    for (std::size_t c = 0; c < dim; ++c)
                        comb[c] = k->sub(s.get(u, c), k->mul(pu, s.get(j, c)));
                    sub.append_row(comb);
                }
                auto piv = sub.rref();
                bool stable = true;
                for (const auto& op : ops) {
                    for (std::size_t i = 0; i < sub.rows() && stable; ++i) {
                        auto img = op.apply(sub.row(i));
                        if (!sub.reduce_by(img, piv)) stable = false;
                    }
                    if (!stable) break;
                }
                if (stable && seen.insert(key(sub)).second) stack.push_back(sub);
                more = false;
                for (std::size_t t = 0; t < rest.size(); ++t) {
                    if (++rest[t] < k->q()) { more = true; break; }
                    rest[t] = 0;
                }
                if (rest.empty()) more = false;
            }
        }
        (void)phi;
    }
    std::sort(out.begin(), out.end(),
              [](const FqMat& a, const FqMat& b) { return a.lex_less(b); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace sl::oracle

#endif
