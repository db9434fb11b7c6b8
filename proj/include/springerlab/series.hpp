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

#ifndef SPRINGERLAB_SERIES_HPP
#define SPRINGERLAB_SERIES_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "springerlab/field.hpp"

namespace sl {

// Exponent sentinel: coefficients are known for all exponents < prec().
// PREC_EXACT marks a finite expression (polynomial) known everywhere.
constexpr long PREC_EXACT = 1L << 40;
// Valuation of an exactly-zero series.
constexpr long VAL_INF = 1L << 40;

// Laurent series in one variable over F_q, carried to explicit finite
// precision.  A variable tag keeps series over different uniformizers from
// being mixed by accident (PI_VAR for pi, branch index otherwise).
class Series {
  public:
    static constexpr int PI_VAR = -1;

    Series() = default;
    Series(const Field* k, int var) : k_(k), var_(var), prec_(PREC_EXACT) {}
    // coefficients c[i] sit at exponent lo + i
    Series(const Field* k, int var, long lo, std::vector<Field::Elt> c,
           long prec = PREC_EXACT);

    static Series zero(const Field* k, int var) { return Series(k, var); }
    static Series constant(const Field* k, int var, Field::Elt a);
    static Series monomial(const Field* k, int var, long e, Field::Elt a);

    const Field* field() const { return k_; }
    int var() const { return var_; }
    long prec() const { return prec_; }
    bool exact() const { return prec_ >= PREC_EXACT; }
    bool stored_empty() const { return c_.empty(); }
    long lo() const { return lo_; }
    long hi() const { return lo_ + static_cast<long>(c_.size()); }  // one past

    // nullopt = indeterminate: no nonzero coefficient is known below prec
    // and the series is not exact.  Exact zero reports VAL_INF.
    std::optional<long> valuation() const;
    long valuation_or_throw(const std::string& what) const;

    bool known_at(long e) const { return e < prec_; }
    Field::Elt at(long e) const;  // throws PrecisionError when e >= prec

    Series truncated(long new_prec) const;
    Series shifted(long e) const;  // multiply by t^e
    Series operator-() const;
    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator*(const Series& o) const;
    Series scaled(Field::Elt a) const;
    bool is_zero_known() const;  // all stored coefficients zero

    // inverse of a unit (valuation exactly 0), to precision out_prec
    // (defaults to this->prec() when finite)
    Series inverse(long out_prec = -1) const;
    Series derivative() const;

    // coefficientwise application (e.g. the q-power involution)
    Series mapped(const std::function<Field::Elt(Field::Elt)>& f) const;

    // substitute the variable: t -> inner (used for pi = t^n and
    // coefficient-field promotions); inner must have valuation >= 1
    Series substituted(const Series& inner) const;

    bool operator==(const Series& o) const;
    std::string to_string(const std::string& name = "t") const;

  private:
    void normalize();

    const Field* k_ = nullptr;
    int var_ = PI_VAR;
    long lo_ = 0;
    std::vector<Field::Elt> c_;
    long prec_ = PREC_EXACT;
};

}  // namespace sl

#endif
