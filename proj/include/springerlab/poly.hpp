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

#ifndef SPRINGERLAB_POLY_HPP
#define SPRINGERLAB_POLY_HPP

#include <string>
#include <vector>

#include "springerlab/series.hpp"

namespace sl {

// Polynomial in T with coefficients in O_F = F_q[[pi]] (Series in PI_VAR).
class SeriesPoly {
  public:
    SeriesPoly() = default;
    SeriesPoly(const Field* k, std::vector<Series> coeffs);

    static SeriesPoly zero(const Field* k) { return SeriesPoly(k, {}); }
    static SeriesPoly tee(const Field* k);  // the monomial T

    const Field* field() const { return k_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const Series& coeff(std::size_t i) const;
    const std::vector<Series>& coeffs() const { return c_; }

    bool is_monic() const;

    SeriesPoly operator+(const SeriesPoly& o) const;
    SeriesPoly operator-(const SeriesPoly& o) const;
    SeriesPoly operator*(const SeriesPoly& o) const;
    SeriesPoly scaled(const Series& s) const;
    SeriesPoly derivative() const;  // d/dT

    // Evaluate at a branch element x in F_q((t)): pi |-> t^n first.
    Series eval_branch(const Series& x, unsigned n) const;
    // Evaluate at a series in pi itself.
    Series eval_pi(const Series& x) const;

    // coefficientwise map (e.g. involution)
    SeriesPoly mapped(const std::function<Field::Elt(Field::Elt)>& f) const;

    bool operator==(const SeriesPoly& o) const;
    std::string to_string() const;

  private:
    void normalize();
    const Field* k_ = nullptr;
    std::vector<Series> c_;  // c_[i] multiplies T^i
};

// v_pi(Res(P, Q)) for monic P, Q, computed as the valuation of the Sylvester
// determinant over truncated series.  Throws PrecisionError when the
// valuation is indeterminate at the operands' precision and IdentityError
// when the resultant is exactly zero (shared factor).
long resultant_valuation(const SeriesPoly& p, const SeriesPoly& q);

// Exact determinant of a square matrix of series (entries over one variable).
Series series_det(const std::vector<std::vector<Series>>& a);

// det(T*I - M) for a square matrix of pi-series; monic of degree dim(M).
SeriesPoly char_poly(const Field* k, const std::vector<std::vector<Series>>& m);

}  // namespace sl

#endif
