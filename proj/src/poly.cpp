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

#include "springerlab/poly.hpp"

#include <sstream>

#include "springerlab/errors.hpp"

namespace sl {

SeriesPoly::SeriesPoly(const Field* k, std::vector<Series> coeffs)
    : k_(k), c_(std::move(coeffs)) {
    for (auto& s : c_)
        if (s.field() == nullptr) s = Series::zero(k_, Series::PI_VAR);
    normalize();
}

SeriesPoly SeriesPoly::tee(const Field* k) {
    return SeriesPoly(k, {Series::zero(k, Series::PI_VAR),
                          Series::constant(k, Series::PI_VAR, k->one())});
}

void SeriesPoly::normalize() {
    while (!c_.empty() && c_.back().exact() && c_.back().stored_empty()) c_.pop_back();
}

const Series& SeriesPoly::coeff(std::size_t i) const {
    static const Series dummy;
    if (i < c_.size()) return c_[i];
    throw IdentityError("polynomial coefficient out of range");
}

bool SeriesPoly::is_monic() const {
    if (c_.empty()) return false;
    const Series& lead = c_.back();
    return lead.exact() && lead.lo() == 0 && lead.hi() == 1 &&
           lead.at(0) == k_->one();
}

SeriesPoly SeriesPoly::operator+(const SeriesPoly& o) const {
    std::vector<Series> c(std::max(c_.size(), o.c_.size()),
                          Series::zero(k_, Series::PI_VAR));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < c_.size() && i < o.c_.size())
            c[i] = c_[i] + o.c_[i];
        else if (i < c_.size())
            c[i] = c_[i];
        else
            c[i] = o.c_[i];
    }
    return SeriesPoly(k_, std::move(c));
}

SeriesPoly SeriesPoly::operator-(const SeriesPoly& o) const {
    std::vector<Series> neg = o.c_;
    for (auto& s : neg) s = -s;
    return *this + SeriesPoly(k_, std::move(neg));
}

SeriesPoly SeriesPoly::operator*(const SeriesPoly& o) const {
    if (c_.empty() || o.c_.empty()) return SeriesPoly(k_, {});
    std::vector<Series> c(c_.size() + o.c_.size() - 1, Series::zero(k_, Series::PI_VAR));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            c[i + j] = c[i + j] + c_[i] * o.c_[j];
    return SeriesPoly(k_, std::move(c));
}

SeriesPoly SeriesPoly::scaled(const Series& s) const {
    std::vector<Series> c = c_;
    for (auto& x : c) x = x * s;
    return SeriesPoly(k_, std::move(c));
}

SeriesPoly SeriesPoly::derivative() const {
    std::vector<Series> c;
    for (std::size_t i = 1; i < c_.size(); ++i)
        c.push_back(c_[i].scaled(k_->from_int(static_cast<long long>(i))));
    return SeriesPoly(k_, std::move(c));
}

Series SeriesPoly::eval_branch(const Series& x, unsigned n) const {
    const Field* k = x.field();
    Series tn = Series::monomial(k, x.var(), static_cast<long>(n), k->one());
    Series acc = Series::zero(k, x.var());
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc = acc * x;
        acc = acc + c_[i].substituted(tn);
    }
    return acc;
}

Series SeriesPoly::eval_pi(const Series& x) const {
    const Field* k = x.field();
    Series acc = Series::zero(k, x.var());
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc = acc * x;
        acc = acc + c_[i];
    }
    return acc;
}

SeriesPoly SeriesPoly::mapped(const std::function<Field::Elt(Field::Elt)>& f) const {
    std::vector<Series> c = c_;
    for (auto& x : c) x = x.mapped(f);
    return SeriesPoly(k_, std::move(c));
}

bool SeriesPoly::operator==(const SeriesPoly& o) const { return c_ == o.c_; }

std::string SeriesPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].exact() && c_[i].stored_empty()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c_[i].to_string("pi") << ")";
        if (i > 0) os << "*T^" << i;
    }
    return os.str();
}

Series series_det(const std::vector<std::vector<Series>>& a) {
    const std::size_t n = a.size();
    if (n == 0) throw IdentityError("determinant of empty matrix");
    const Field* k = a[0][0].field();
    const int var = a[0][0].var();
    if (n > 16) throw BudgetError("series determinant too large");
    // Laplace over row subsets: D[mask] = det of rows in mask, first
    // popcount(mask) columns
    std::vector<Series> d(1u << n);
    d[0] = Series::constant(k, var, k->one());
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        unsigned cnt = static_cast<unsigned>(__builtin_popcount(mask));
        Series acc = Series::zero(k, var);
        unsigned j = 0;
        for (unsigned r = 0; r < n; ++r) {
            if ((mask & (1u << r)) == 0) continue;
            // expansion along column cnt-1, sign (-1)^(j + cnt - 1)
            Series term = a[r][cnt - 1] * d[mask & ~(1u << r)];
            if (((j + cnt - 1) & 1u) != 0) term = -term;
            acc = acc + term;
            ++j;
        }
        d[mask] = acc;
    }
    return d[(1u << n) - 1];
}

long resultant_valuation(const SeriesPoly& p, const SeriesPoly& q) {
    if (!p.is_monic() || !q.is_monic())
        throw IdentityError("resultant_valuation expects monic polynomials");
    const Field* k = p.field();
    const long dp = p.degree(), dq = q.degree();
    const long n = dp + dq;
    if (n == 0) return 0;
    auto zero = Series::zero(k, Series::PI_VAR);
    std::vector<std::vector<Series>> syl(static_cast<std::size_t>(n),
                                         std::vector<Series>(static_cast<std::size_t>(n), zero));
    // rows 0..dq-1: shifted copies of p; rows dq..n-1: shifted copies of q
    for (long r = 0; r < dq; ++r)
        for (long i = 0; i <= dp; ++i)
            syl[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + i)] =
                p.coeff(static_cast<std::size_t>(dp - i));
    for (long r = 0; r < dp; ++r)
        for (long i = 0; i <= dq; ++i)
            syl[static_cast<std::size_t>(dq + r)][static_cast<std::size_t>(r + i)] =
                q.coeff(static_cast<std::size_t>(dq - i));
    Series det = series_det(syl);
    auto v = det.valuation();
    if (!v)
        throw PrecisionError("resultant valuation indeterminate at current precision");
    if (*v == VAL_INF)
        throw IdentityError("resultant is exactly zero: polynomials share a factor");
    return *v;
}

SeriesPoly char_poly(const Field* k, const std::vector<std::vector<Series>>& m) {
    const std::size_t n = m.size();
    if (n > 16) throw BudgetError("characteristic polynomial too large");
    // determinant of (T*I - M) over SeriesPoly via the same subset DP
    auto entry = [&](std::size_t i, std::size_t j) {
        SeriesPoly e(k, {-m[i][j]});
        if (i == j) e = e + SeriesPoly::tee(k);
        return e;
    };
    std::vector<SeriesPoly> d(1u << n);
    d[0] = SeriesPoly(k, {Series::constant(k, Series::PI_VAR, k->one())});
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        unsigned cnt = static_cast<unsigned>(__builtin_popcount(mask));
        SeriesPoly acc = SeriesPoly::zero(k);
        unsigned j = 0;
        for (unsigned r = 0; r < n; ++r) {
            if ((mask & (1u << r)) == 0) continue;
            SeriesPoly term = entry(r, cnt - 1) * d[mask & ~(1u << r)];
            if (((j + cnt - 1) & 1u) != 0) term = SeriesPoly::zero(k) - term;
            acc = acc + term;
            ++j;
        }
        d[mask] = acc;
    }
    return d[(1u << n) - 1];
}

}  // namespace sl
