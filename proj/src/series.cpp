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

#include "springerlab/series.hpp"

#include <algorithm>
#include <sstream>

#include "springerlab/errors.hpp"

namespace sl {

namespace {

void check_compatible(const Series& a, const Series& b) {
    if (a.field() == nullptr || b.field() == nullptr)
        throw IdentityError("series arithmetic on uninitialized value");
    if (!a.field()->same(*b.field()))
        throw IdentityError("series arithmetic across different fields");
    if (a.var() != b.var())
        throw IdentityError("series arithmetic across different variables");
}

long add_prec(long a, long b) { return std::min(a, b); }

}  // namespace

Series::Series(const Field* k, int var, long lo, std::vector<Field::Elt> c, long prec)
    : k_(k), var_(var), lo_(lo), c_(std::move(c)), prec_(prec) {
    if (prec_ < PREC_EXACT) {
        // drop stored coefficients at or above the precision bound
        long keep = prec_ - lo_;
        if (keep < 0) keep = 0;
        if (static_cast<long>(c_.size()) > keep) c_.resize(static_cast<size_t>(keep));
    }
    normalize();
}

Series Series::constant(const Field* k, int var, Field::Elt a) {
    return Series(k, var, 0, {a});
}

Series Series::monomial(const Field* k, int var, long e, Field::Elt a) {
    return Series(k, var, e, {a});
}

void Series::normalize() {
    size_t begin = 0;
    while (begin < c_.size() && c_[begin] == 0) ++begin;
    size_t end = c_.size();
    while (end > begin && c_[end - 1] == 0) --end;
    if (begin != 0 || end != c_.size()) {
        c_ = std::vector<Field::Elt>(c_.begin() + static_cast<long>(begin),
                                     c_.begin() + static_cast<long>(end));
        lo_ += static_cast<long>(begin);
    }
    if (c_.empty()) lo_ = 0;
}

std::optional<long> Series::valuation() const {
    if (!c_.empty()) return lo_;  // normalized: first stored coeff is nonzero
    if (exact()) return VAL_INF;
    return std::nullopt;
}

long Series::valuation_or_throw(const std::string& what) const {
    auto v = valuation();
    if (!v)
        throw PrecisionError("indeterminate valuation (" + what +
                             "): all known coefficients vanish below precision " +
                             std::to_string(prec_));
    return *v;
}

Field::Elt Series::at(long e) const {
    if (e >= prec_)
        throw PrecisionError("coefficient at exponent " + std::to_string(e) +
                             " requested beyond precision " + std::to_string(prec_));
    if (e < lo_ || e >= hi()) return 0;
    return c_[static_cast<size_t>(e - lo_)];
}

Series Series::truncated(long new_prec) const {
    Series r = *this;
    if (new_prec < r.prec_) {
        r.prec_ = new_prec;
        long keep = new_prec - r.lo_;
        if (keep < 0) keep = 0;
        if (static_cast<long>(r.c_.size()) > keep) r.c_.resize(static_cast<size_t>(keep));
        r.normalize();
    }
    return r;
}

Series Series::shifted(long e) const {
    Series r = *this;
    r.lo_ += e;
    if (!r.exact()) r.prec_ += e;
    if (r.c_.empty()) r.lo_ = 0;
    return r;
}

Series Series::operator-() const {
    Series r = *this;
    for (auto& x : r.c_) x = k_->neg(x);
    return r;
}

Series Series::operator+(const Series& o) const {
    check_compatible(*this, o);
    long prec = add_prec(prec_, o.prec_);
    if (c_.empty() && o.c_.empty()) return Series(k_, var_, 0, {}, prec);
    long lo = c_.empty() ? o.lo_ : (o.c_.empty() ? lo_ : std::min(lo_, o.lo_));
    long hi = std::max(this->hi(), o.hi());
    if (prec < PREC_EXACT) hi = std::min(hi, prec);
    if (hi < lo) hi = lo;
    std::vector<Field::Elt> c(static_cast<size_t>(hi - lo), 0);
    for (long e = lo; e < hi; ++e) {
        Field::Elt a = (e >= lo_ && e < this->hi()) ? c_[static_cast<size_t>(e - lo_)] : 0;
        Field::Elt b = (e >= o.lo_ && e < o.hi()) ? o.c_[static_cast<size_t>(e - o.lo_)] : 0;
        c[static_cast<size_t>(e - lo)] = k_->add(a, b);
    }
    return Series(k_, var_, lo, std::move(c), prec);
}

Series Series::operator-(const Series& o) const { return *this + (-o); }

Series Series::operator*(const Series& o) const {
    check_compatible(*this, o);
    // precision: min(prec_a + lo_b, prec_b + lo_a); lo is a sound lower
    // bound for the valuation even when the true valuation is higher
    long prec = PREC_EXACT;
    if (!exact() || !o.exact()) {
        long pa = exact() ? PREC_EXACT : prec_ + (o.c_.empty() ? 0 : o.lo_);
        long pb = o.exact() ? PREC_EXACT : o.prec_ + (c_.empty() ? 0 : lo_);
        prec = std::min(pa, pb);
        if (prec > PREC_EXACT) prec = PREC_EXACT;
    }
    if (c_.empty() || o.c_.empty()) return Series(k_, var_, 0, {}, prec);
    long lo = lo_ + o.lo_;
    long hi = (this->hi() - 1) + (o.hi() - 1) + 1;
    if (prec < PREC_EXACT) hi = std::min(hi, prec);
    if (hi < lo) return Series(k_, var_, 0, {}, prec);
    std::vector<Field::Elt> c(static_cast<size_t>(hi - lo), 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            long e = lo_ + static_cast<long>(i) + o.lo_ + static_cast<long>(j);
            if (e >= hi) break;
            size_t idx = static_cast<size_t>(e - lo);
            c[idx] = k_->add(c[idx], k_->mul(c_[i], o.c_[j]));
        }
    }
    return Series(k_, var_, lo, std::move(c), prec);
}

Series Series::scaled(Field::Elt a) const {
    if (a == 0) return Series(k_, var_, 0, {}, prec_);
    Series r = *this;
    for (auto& x : r.c_) x = k_->mul(x, a);
    return r;
}

bool Series::is_zero_known() const { return c_.empty(); }

Series Series::inverse(long out_prec) const {
    auto v = valuation();
    if (!v) throw PrecisionError("inverting a series of indeterminate valuation");
    if (*v != 0) throw IdentityError("inverting a non-unit series (valuation != 0)");
    long prec = out_prec >= 0 ? out_prec : prec_;
    if (prec >= PREC_EXACT)
        throw PrecisionError("inverse of an exact series needs an explicit precision");
    if (!exact()) prec = std::min(prec, prec_);
    // Newton-free direct recurrence: b_0 = a_0^{-1},
    // b_n = -a_0^{-1} * sum_{i=1..n} a_i b_{n-i}
    Field::Elt a0inv = k_->inv(at(0));
    std::vector<Field::Elt> b(static_cast<size_t>(std::max<long>(prec, 0)), 0);
    if (prec <= 0) return Series(k_, var_, 0, {}, prec);
    b[0] = a0inv;
    for (long n = 1; n < prec; ++n) {
        Field::Elt acc = 0;
        long imax = std::min<long>(n, hi() - 1);
        for (long i = 1; i <= imax; ++i) {
            Field::Elt ai = (i >= lo_ && i < hi()) ? c_[static_cast<size_t>(i - lo_)] : 0;
            if (ai == 0) continue;
            acc = k_->add(acc, k_->mul(ai, b[static_cast<size_t>(n - i)]));
        }
        b[static_cast<size_t>(n)] = k_->neg(k_->mul(a0inv, acc));
    }
    return Series(k_, var_, 0, std::move(b), prec);
}

Series Series::derivative() const {
    std::vector<Field::Elt> c;
    c.reserve(c_.size());
    long newlo = lo_ - 1;
    for (size_t i = 0; i < c_.size(); ++i) {
        long e = lo_ + static_cast<long>(i);
        c.push_back(k_->mul(c_[i], k_->from_int(e)));
    }
    long prec = exact() ? PREC_EXACT : prec_ - 1;
    return Series(k_, var_, newlo, std::move(c), prec);
}

Series Series::mapped(const std::function<Field::Elt(Field::Elt)>& f) const {
    Series r = *this;
    for (auto& x : r.c_) x = f(x);
    r.normalize();
    return r;
}

Series Series::substituted(const Series& inner) const {
    if (inner.field() == nullptr) throw IdentityError("substitution into empty series");
    const Field* k = inner.field();
    if (!c_.empty() && lo_ < 0)
        throw IdentityError("substitution into a Laurent series with poles");
    auto vi = inner.valuation();
    if (!c_.empty() && c_.size() > 1) {
        if (!vi) throw PrecisionError("substitution by a series of indeterminate valuation");
        if (*vi < 1 && *vi != VAL_INF)
            throw IdentityError("substitution requires valuation >= 1");
    }
    // Horner from the top stored coefficient
    Series acc = Series::zero(k, inner.var());
    for (size_t i = c_.size(); i-- > 0;) {
        acc = acc * inner;
        acc = acc + Series::constant(k, inner.var(), c_[i]);
    }
    // exponent offset lo_ (a polynomial shift through inner^lo_)
    for (long e = 0; e < lo_; ++e) acc = acc * inner;
    // precision of the result: if this has finite precision P, the unknown
    // tail starts at inner-valuation * P
    if (!exact()) {
        long vin = 1;
        if (vi && *vi != VAL_INF) vin = *vi;
        acc = acc.truncated(std::min(acc.prec(), vin * prec_));
    }
    return acc;
}

bool Series::operator==(const Series& o) const {
    return k_ != nullptr && o.k_ != nullptr && k_->same(*o.k_) && var_ == o.var_ &&
           lo_ == o.lo_ && c_ == o.c_ && prec_ == o.prec_;
}

std::string Series::to_string(const std::string& name) const {
    if (c_.empty()) return exact() ? "0" : "O(" + name + "^" + std::to_string(prec_) + ")";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        long e = lo_ + static_cast<long>(i);
        if (!first) os << " + ";
        first = false;
        os << k_->to_string(c_[i]);
        if (e != 0) os << "*" << name << "^" << e;
    }
    if (!exact()) os << " + O(" << name << "^" << prec_ << ")";
    return os.str();
}

}  // namespace sl
