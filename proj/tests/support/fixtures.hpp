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

#ifndef SPRINGERLAB_TESTS_FIXTURES_HPP
#define SPRINGERLAB_TESTS_FIXTURES_HPP

#include <memory>

#include "springerlab/spectral.hpp"

namespace sl::fixtures {

struct HermitianSetup {
    std::shared_ptr<const Field> base;
    std::shared_ptr<const QuadExt> ext;
    std::shared_ptr<const SpectralDatum> datum;
};

// branch = (n, list of (exponent, multiple-of-eps coefficient))
using EpsBranch = std::pair<unsigned, std::vector<std::pair<long, long>>>;

inline HermitianSetup hermitian_datum(unsigned p, unsigned e,
                                      const std::vector<EpsBranch>& spec) {
    HermitianSetup s;
    s.base = std::make_shared<Field>(p, e);
    s.ext = std::make_shared<QuadExt>(s.base);
    const Field* k = &s.ext->ext();
    std::vector<Branch> bs;
    for (std::size_t i = 0; i < spec.size(); ++i) {
        const auto& [n, coeffs] = spec[i];
        long lo = coeffs.front().first;
        long hi = coeffs.back().first;
        std::vector<Field::Elt> c(static_cast<std::size_t>(hi - lo + 1), 0);
        for (const auto& [exp, mult] : coeffs)
            c[static_cast<std::size_t>(exp - lo)] =
                k->mul(s.ext->epsilon(), s.ext->embed(s.base->from_int(mult)));
        Branch b;
        b.n = n;
        b.gamma = Series(k, static_cast<int>(i), lo, std::move(c));
        bs.push_back(std::move(b));
    }
    s.datum = std::make_shared<SpectralDatum>(s.ext->ext_ptr(), std::move(bs));
    return s;
}

inline HermitianSetup cusp_q3() { return hermitian_datum(3, 1, {{2, {{3, 1}}}}); }
inline HermitianSetup node_q3() {
    return hermitian_datum(3, 1, {{1, {{1, 1}}}, {1, {{1, -1}}}});
}
inline HermitianSetup node_q5() {
    return hermitian_datum(5, 1, {{1, {{1, 1}}}, {1, {{1, -1}}}});
}
inline HermitianSetup tacnode_q3() {
    return hermitian_datum(3, 1, {{1, {{1, 1}}}, {1, {{1, 1}, {2, 1}}}});
}
inline HermitianSetup tacnode_q5() {
    return hermitian_datum(5, 1, {{1, {{1, 1}}}, {1, {{1, 1}, {2, 1}}}});
}
inline HermitianSetup cusp_line_q3() {
    return hermitian_datum(3, 1, {{2, {{3, 1}}}, {1, {{1, 1}}}});
}
inline HermitianSetup star3_q3() {
    return hermitian_datum(3, 1, {{1, {{1, 1}}}, {1, {{1, -1}}}, {1, {{2, 1}}}});
}
inline HermitianSetup smooth_q3() { return hermitian_datum(3, 1, {{1, {{1, 1}}}}); }

// plain (non-hermitian) data over F_q itself
inline std::shared_ptr<const SpectralDatum> plain_cusp(unsigned p, unsigned e) {
    auto f = std::make_shared<Field>(p, e);
    Branch b;
    b.n = 2;
    b.gamma = Series(f.get(), 0, 3, {f->one()});
    return std::make_shared<SpectralDatum>(f, std::vector<Branch>{b});
}

inline std::shared_ptr<const SpectralDatum> plain_node(unsigned p, unsigned e) {
    auto f = std::make_shared<Field>(p, e);
    Branch b1, b2;
    b1.n = 1;
    b1.gamma = Series(f.get(), 0, 1, {f->one()});
    b2.n = 1;
    b2.gamma = Series(f.get(), 1, 1, {f->neg(f->one())});
    return std::make_shared<SpectralDatum>(f, std::vector<Branch>{b1, b2});
}

// monomial branch t^m with pi = t^n over F_{q^2} with an eps coefficient
inline HermitianSetup monomial_nm(unsigned p, unsigned n, long m) {
    return hermitian_datum(p, 1, {{n, {{m, 1}}}});
}

}  // namespace sl::fixtures

#endif
