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

#include <random>

#include "doctest.h"
#include "springerlab/errors.hpp"
#include "springerlab/unitary.hpp"
#include "support/fixtures.hpp"

using namespace sl;
using namespace sl::fixtures;

namespace {
// independent route to alpha: multiply out P_I, differentiate coefficient
// by coefficient, evaluate by Horner
Series alpha_oracle(const HermitianSetup& s, std::size_t branch) {
    const Field* k = s.datum->field();
    SeriesPoly prod(k, {Series::constant(k, Series::PI_VAR, k->one())});
    for (std::size_t i = 0; i < s.datum->size(); ++i)
        prod = prod * s.datum->minimal_polynomial(i);
    std::vector<Series> dcoeffs;
    for (long i = 1; i <= prod.degree(); ++i)
        dcoeffs.push_back(prod.coeff(static_cast<std::size_t>(i))
                              .scaled(k->from_int(i)));
    SeriesPoly dp(k, std::move(dcoeffs));
    Series val = dp.eval_branch(s.datum->branch(branch).gamma,
                                s.datum->branch(branch).n);
    return val.scaled(k->pow(s.ext->epsilon(),
                             static_cast<long long>(s.datum->n_total()) - 1));
}
}  // namespace

TEST_CASE("alpha agrees with the direct differentiation oracle") {
    for (const auto& s : {smooth_q3(), cusp_q3(), node_q3(), tacnode_q3(),
                          cusp_line_q3(), node_q5()}) {
        HermitianData h = make_hermitian(s.datum, s.ext);
        for (std::size_t i = 0; i < s.datum->size(); ++i)
            CHECK(h.alpha[i] == alpha_oracle(s, i));
    }
}

TEST_CASE("alpha on the standard examples") {
    // smooth branch: P = T - eps pi, alpha = eps^0 * 1 = 1
    auto s = smooth_q3();
    HermitianData hs = make_hermitian(s.datum, s.ext);
    const Field* k = s.datum->field();
    CHECK(hs.alpha[0] == Series::constant(k, 0, k->one()));
    CHECK(hs.alpha_val[0] == 0);

    // cusp: alpha = eps * 2 gamma = 2 eps^2 t^3 = -2 t^3
    auto c = cusp_q3();
    HermitianData hc = make_hermitian(c.datum, c.ext);
    const Field* kc = c.datum->field();
    Field::Elt m2 = kc->neg(kc->from_int(2));
    CHECK(hc.alpha[0] == Series::monomial(kc, 0, 3, m2));

    // node: alpha_1 = eps (gamma_1 - gamma_2) = 2 eps^2 pi = -2 pi
    auto n = node_q3();
    HermitianData hn = make_hermitian(n.datum, n.ext);
    const Field* kn = n.datum->field();
    CHECK(hn.alpha[0] == Series::monomial(kn, 0, 1, kn->neg(kn->from_int(2))));
    CHECK(hn.alpha[1] == Series::monomial(kn, 1, 1, kn->from_int(2)));
    // for n = 1 branches the alpha valuation equals the conductor exponent
    CHECK(hn.alpha_val == std::vector<long>{1, 1});
    CHECK(hn.alpha_val_matches_conductor);
}

TEST_CASE("alpha valuation exceeds the conductor by the branch different") {
    // v(alpha) = c_i + d(Atilde_i / O_F); the cusp has different t^1
    auto c = cusp_q3();
    HermitianData h = make_hermitian(c.datum, c.ext);
    CHECK(h.alpha_val[0] == 3);
    CHECK(c.datum->conductor_exponents()[0] == 2);
    CHECK_FALSE(h.alpha_val_matches_conductor);
}

TEST_CASE("the trace-zero hypothesis is enforced") {
    auto base = std::make_shared<Field>(3, 1);
    auto ext = std::make_shared<QuadExt>(base);
    const Field* k = &ext->ext();
    Branch b;
    b.n = 1;
    b.gamma = Series(k, 0, 1, {ext->embed(1)});  // plain coefficient
    auto datum = std::make_shared<SpectralDatum>(ext->ext_ptr(),
                                                 std::vector<Branch>{b});
    CHECK_THROWS_AS(make_hermitian(datum, ext), ConfigError);
}

TEST_CASE("hermitian pairing: symmetry, sesquilinearity, A self-orthogonal") {
    auto s = node_q3();
    HermitianData h = make_hermitian(s.datum, s.ext);
    const Field* k = s.datum->field();
    std::mt19937 rng(41);
    std::uniform_int_distribution<unsigned> dist(0, k->q() - 1);
    auto conj = [&](Field::Elt a) { return s.ext->conj(a); };

    auto rand_tuple = [&]() {
        std::vector<Series> x;
        for (std::size_t i = 0; i < s.datum->size(); ++i) {
            std::vector<Field::Elt> c;
            for (int e = 0; e < 4; ++e) c.push_back(static_cast<Field::Elt>(dist(rng)));
            x.emplace_back(k, static_cast<int>(i), -1, std::move(c));
        }
        return x;
    };

    for (int t = 0; t < 30; ++t) {
        auto x = rand_tuple();
        auto y = rand_tuple();
        Series xy = hermitian_pair(x, y, h, 6);
        Series yx = hermitian_pair(y, x, h, 6);
        CHECK(xy.mapped(conj) == yx);
        // <a x, y> = a* <x, y>
        Field::Elt a = static_cast<Field::Elt>(dist(rng));
        std::vector<Series> ax;
        for (const auto& c : x) ax.push_back(c.scaled(a));
        CHECK(hermitian_pair(ax, y, h, 6) == xy.scaled(conj(a)));
    }

    // <A, A> in O_F: pair the order-window basis rows with each other
    WindowCuts cuts;
    cuts.cut = {4, 4};
    OrderWindow w = s.datum->order_window(cuts);
    for (std::size_t i = 0; i < w.basis.rows(); ++i)
        for (std::size_t j = 0; j < w.basis.rows(); ++j) {
            auto x = s.datum->row_to_series(w.basis.row(i), cuts);
            auto y = s.datum->row_to_series(w.basis.row(j), cuts);
            Series v = hermitian_pair(x, y, h, 3);
            if (!v.stored_empty()) CHECK(v.lo() >= 0);
        }
}

TEST_CASE("smooth branch pairing: <1, pi^-1> = pi^-1 not in O_F") {
    auto s = smooth_q3();
    HermitianData h = make_hermitian(s.datum, s.ext);
    const Field* k = s.datum->field();
    std::vector<Series> one{Series::constant(k, 0, k->one())};
    std::vector<Series> pinv{Series::monomial(k, 0, -1, k->one())};
    Series v = hermitian_pair(one, pinv, h, 3);
    CHECK(v == Series(k, Series::PI_VAR, -1, {k->one()}, 3));
    CHECK(v.lo() < 0);
}

TEST_CASE("A is its own dual") {
    for (const auto& s : {node_q3(), cusp_q3(), tacnode_q3()}) {
        HermitianData h = make_hermitian(s.datum, s.ext);
        long N = heuristic_N(*s.datum, 0);
        WindowModel m(s.datum, N, 0);
        LatticePoint a = m.lattice_A();
        LatticePoint ad = dual_lattice(a, m, h, m);
        CHECK(ad == a);
    }
}

TEST_CASE("dual of Atilde lands in X^{-delta} (cusp index flip)") {
    auto s = cusp_q3();
    HermitianData h = make_hermitian(s.datum, s.ext);
    WindowModel m1(s.datum, 3, 1), mneg(s.datum, 3, -1);
    LatticePoint at = m1.lattice_Atilde();
    LatticePoint dual = dual_lattice(at, m1, h, mneg);
    CHECK(dual.coords.rows() == mneg.plane_dim());
    // Atilde^perp is the conductor ideal a = t^2 k[[t]]: nu = 2
    CHECK(dual.nu == std::vector<long>{2});
}

TEST_CASE("dual is an involution on the enumerated window") {
    for (const auto& s : {node_q3(), cusp_q3()}) {
        HermitianData h = make_hermitian(s.datum, s.ext);
        long N = heuristic_N(*s.datum, 0);
        WindowModel m(s.datum, N, 0);
        for (const auto& pt : enumerate_fiber(m)) {
            LatticePoint d1 = dual_lattice(pt, m, h, m);
            CHECK(index_of(d1, pt) == 0);
            LatticePoint d2 = dual_lattice(d1, m, h, m);
            CHECK(d2 == pt);
            // gamma stability of the dual (gamma* = -gamma)
            FqMat tmp = d1.coords;
            auto piv = tmp.rref();
            for (std::size_t r = 0; r < d1.coords.rows(); ++r) {
                auto img = m.gamma_op().apply(d1.coords.row(r));
                CHECK(tmp.reduce_by(img, piv));
            }
        }
    }
}

TEST_CASE("classification: smooth {0:1}, cusp all in class 0, node 4+1") {
    auto sm = smooth_q3();
    {
        HermitianData h = make_hermitian(sm.datum, sm.ext);
        ZPointsResult z = z_points(sm.datum, 0);
        Classification cls = classify_z_points(z, h);
        CHECK(cls.fixed_total == 1);
        CHECK(cls.counts.size() == 1);
        CHECK(cls.counts.at(LambdaClass{0}) == 1);
    }
    auto cu = cusp_q3();
    {
        HermitianData h = make_hermitian(cu.datum, cu.ext);
        ZPointsResult z = z_points(cu.datum, 0);
        Classification cls = classify_z_points(z, h);
        CHECK(z.reps.size() == 10);   // Z^0(F_9)
        CHECK(cls.fixed_total == 4);  // Z^0(F_3) of the twisted form
        CHECK(cls.counts.at(LambdaClass{0}) == 4);
        CHECK(cls.discarded == 6);
    }
    auto no = node_q3();
    {
        HermitianData h = make_hermitian(no.datum, no.ext);
        ZPointsResult z = z_points(no.datum, 0);
        Classification cls = classify_z_points(z, h);
        CHECK(z.reps.size() == 9);
        CHECK(cls.counts.at(LambdaClass{0, 0}) == 4);
        CHECK(cls.counts.at(LambdaClass{1, 1}) == 1);
        CHECK(cls.fixed_total == 5);
    }
}

TEST_CASE("classification is invariant under the absorbing-branch choice") {
    // same node with the branches listed in the other order
    auto a = node_q3();
    auto b = hermitian_datum(3, 1, {{1, {{1, -1}}}, {1, {{1, 1}}}});
    HermitianData ha = make_hermitian(a.datum, a.ext);
    HermitianData hb = make_hermitian(b.datum, b.ext);
    Classification ca = classify_z_points(z_points(a.datum, 0), ha);
    Classification cb = classify_z_points(z_points(b.datum, 0), hb);
    CHECK(ca.fixed_total == cb.fixed_total);
    CHECK(ca.counts.at(LambdaClass{0, 0}) == cb.counts.at(LambdaClass{0, 0}));
    CHECK(ca.counts.at(LambdaClass{1, 1}) == cb.counts.at(LambdaClass{1, 1}));
}

TEST_CASE("classification is deterministic across thread counts") {
    auto s = tacnode_q3();
    HermitianData h = make_hermitian(s.datum, s.ext);
    ZPointsResult z = z_points(s.datum, 0);
    Classification c1 = classify_z_points(z, h, 1);
    Classification c2 = classify_z_points(z, h, 4);
    CHECK(c1.counts == c2.counts);
    CHECK(c1.fixed_total == c2.fixed_total);
}

TEST_CASE("orbital integrals from counts") {
    std::map<LambdaClass, long> counts{{LambdaClass{0, 0}, 4},
                                       {LambdaClass{1, 1}, 1}};
    OrbitalValues v = orbital_integrals(counts, {0});
    CHECK(v.so == 5);
    CHECK(v.o_kappa == 3);
    // kappa is trivial on an empty left part
    OrbitalValues w = orbital_integrals(counts, {});
    CHECK(w.o_kappa == w.so);
}

TEST_CASE("stable integrals of smooth sub-data are 1") {
    for (const auto& s : {smooth_q3(), hermitian_datum(5, 1, {{1, {{1, 1}}}})}) {
        HermitianData h = make_hermitian(s.datum, s.ext);
        Classification cls = classify_z_points(z_points(s.datum, 0), h);
        CHECK(cls.fixed_total == 1);
    }
}
