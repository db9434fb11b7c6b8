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

#include "springerlab/fqmat.hpp"

#include <algorithm>

#include "springerlab/errors.hpp"

namespace sl {

FqMat::FqMat(const Field* k, std::size_t rows, std::size_t cols)
    : k_(k), rows_(rows), cols_(cols), m_(k->degree()),
      a_(rows * k->degree() * cols, 0) {}

FqMat FqMat::from_rows(const Field* k, std::size_t cols,
                       const std::vector<std::vector<Field::Elt>>& rows) {
    FqMat m(k, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return m;
}

FqMat FqMat::identity(const Field* k, std::size_t n) {
    FqMat m(k, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, k->one());
    return m;
}

Field::Elt FqMat::get(std::size_t r, std::size_t c) const {
    unsigned idx = 0;
    for (unsigned d = m_; d-- > 0;) idx = idx * k_->p() + slice(r, d)[c];
    return static_cast<Field::Elt>(idx);
}

void FqMat::set(std::size_t r, std::size_t c, Field::Elt v) {
    unsigned x = v;
    for (unsigned d = 0; d < m_; ++d) {
        slice(r, d)[c] = static_cast<uint16_t>(x % k_->p());
        x /= k_->p();
    }
}

std::vector<Field::Elt> FqMat::row(std::size_t r) const {
    std::vector<Field::Elt> v(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v[c] = get(r, c);
    return v;
}

void FqMat::set_row(std::size_t r, const std::vector<Field::Elt>& v) {
    if (v.size() != cols_) throw IdentityError("row length mismatch");
    for (std::size_t c = 0; c < cols_; ++c) set(r, c, v[c]);
}

void FqMat::append_row(const std::vector<Field::Elt>& v) {
    a_.resize(a_.size() + m_ * cols_, 0);
    ++rows_;
    set_row(rows_ - 1, v);
}

void FqMat::append_rows(const FqMat& other) {
    if (other.cols_ != cols_ || other.m_ != m_)
        throw IdentityError("appending rows of mismatched shape");
    a_.insert(a_.end(), other.a_.begin(), other.a_.end());
    rows_ += other.rows_;
}

void FqMat::row_axpy(std::size_t dst, std::size_t src, Field::Elt c) {
    if (c == 0) return;
    const auto& kern = kern::active_kernels();
    if (m_ == 1) {
        kern.axpy(slice(dst, 0), slice(src, 0), cols_, c, k_->modp());
        return;
    }
    const uint16_t* mat = k_->mulmat(c);
    for (unsigned dout = 0; dout < m_; ++dout)
        for (unsigned din = 0; din < m_; ++din) {
            uint16_t cc = mat[static_cast<std::size_t>(dout) * m_ + din];
            if (cc != 0) kern.axpy(slice(dst, dout), slice(src, din), cols_, cc, k_->modp());
        }
}

void FqMat::row_scale(std::size_t r, Field::Elt c) {
    const auto& kern = kern::active_kernels();
    if (c == 0) {
        for (unsigned d = 0; d < m_; ++d) std::fill_n(slice(r, d), cols_, 0);
        return;
    }
    if (m_ == 1) {
        kern.scale(slice(r, 0), cols_, c, k_->modp());
        return;
    }
    const uint16_t* mat = k_->mulmat(c);
    std::vector<uint16_t> scratch(a_.begin() + static_cast<long>((r * m_) * cols_),
                                  a_.begin() + static_cast<long>((r * m_ + m_) * cols_));
    for (unsigned d = 0; d < m_; ++d) std::fill_n(slice(r, d), cols_, 0);
    for (unsigned dout = 0; dout < m_; ++dout)
        for (unsigned din = 0; din < m_; ++din) {
            uint16_t cc = mat[static_cast<std::size_t>(dout) * m_ + din];
            if (cc != 0)
                kern.axpy(slice(r, dout), scratch.data() + static_cast<std::size_t>(din) * cols_,
                          cols_, cc, k_->modp());
        }
}

void FqMat::row_swap(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (unsigned d = 0; d < m_; ++d)
        std::swap_ranges(slice(a, d), slice(a, d) + cols_, slice(b, d));
}

bool FqMat::row_is_zero(std::size_t r) const {
    return kern::active_kernels().is_zero(slice(r, 0), m_ * cols_);
}

std::vector<std::size_t> FqMat::rref() {
    std::vector<std::size_t> pivots;
    std::size_t cur = 0;
    for (std::size_t col = 0; col < cols_ && cur < rows_; ++col) {
        std::size_t pr = rows_;
        for (std::size_t r = cur; r < rows_; ++r)
            if (get(r, col) != 0) { pr = r; break; }
        if (pr == rows_) continue;
        row_swap(cur, pr);
        Field::Elt pv = get(cur, col);
        if (pv != k_->one()) row_scale(cur, k_->inv(pv));
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == cur) continue;
            Field::Elt v = get(r, col);
            if (v != 0) row_axpy(r, cur, k_->neg(v));
        }
        pivots.push_back(col);
        ++cur;
    }
    // drop zero rows (everything from cur on)
    rows_ = cur;
    a_.resize(rows_ * m_ * cols_);
    return pivots;
}

std::size_t FqMat::rank() const {
    FqMat tmp = *this;
    return tmp.rref().size();
}

bool FqMat::reduce_by(std::vector<Field::Elt>& v,
                      const std::vector<std::size_t>& pivots) const {
    return reduce_by(v, pivots, nullptr);
}

bool FqMat::reduce_by(std::vector<Field::Elt>& v, const std::vector<std::size_t>& pivots,
                      std::vector<Field::Elt>* coords) const {
    if (v.size() != cols_) throw IdentityError("reduce_by length mismatch");
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        Field::Elt c = v[pivots[i]];
        if (coords != nullptr) coords->push_back(c);
        if (c == 0) continue;
        Field::Elt nc = k_->neg(c);
        for (std::size_t j = 0; j < cols_; ++j)
            v[j] = k_->add(v[j], k_->mul(nc, get(i, j)));
    }
    for (auto x : v)
        if (x != 0) return false;
    return true;
}

FqMat FqMat::right_kernel() const {
    FqMat r = *this;
    auto pivots = r.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    FqMat ker(k_, 0, cols_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Field::Elt> v(cols_, 0);
        v[c] = k_->one();
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = k_->neg(r.get(i, c));
        ker.append_row(v);
    }
    ker.rref();
    return ker;
}

FqMat FqMat::left_kernel() const { return transposed().right_kernel(); }

FqMat FqMat::transposed() const {
    FqMat t(k_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, get(r, c));
    return t;
}

FqMat FqMat::multiplied(const FqMat& rhs) const {
    if (cols_ != rhs.rows_) throw IdentityError("matrix product shape mismatch");
    FqMat out(k_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t kk = 0; kk < cols_; ++kk) {
            Field::Elt c = get(i, kk);
            if (c == 0) continue;
            // out.row(i) += c * rhs.row(kk)
            const auto& kern = kern::active_kernels();
            if (m_ == 1) {
                kern.axpy(out.slice(i, 0), rhs.slice(kk, 0), out.cols_, c, k_->modp());
            } else {
                const uint16_t* mat = k_->mulmat(c);
                for (unsigned dout = 0; dout < m_; ++dout)
                    for (unsigned din = 0; din < m_; ++din) {
                        uint16_t cc = mat[static_cast<std::size_t>(dout) * m_ + din];
                        if (cc != 0)
                            kern.axpy(out.slice(i, dout), rhs.slice(kk, din), out.cols_,
                                      cc, k_->modp());
                    }
            }
        }
    return out;
}

FqMat FqMat::intersect_spans(const FqMat& a, const FqMat& b) {
    if (a.k_ != b.k_ && !(a.k_ != nullptr && b.k_ != nullptr && a.k_->same(*b.k_)))
        throw IdentityError("intersecting spans over different fields");
    if (a.cols_ != b.cols_) throw IdentityError("intersecting spans of different width");
    FqMat stacked = a;
    stacked.append_rows(b);
    FqMat lk = stacked.left_kernel();
    // (u | v) with u*A = -v*B; collect u*A
    FqMat out(a.k_, 0, a.cols_);
    for (std::size_t r = 0; r < lk.rows(); ++r) {
        std::vector<Field::Elt> w(a.cols_, 0);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            Field::Elt c = lk.get(r, i);
            if (c == 0) continue;
            for (std::size_t j = 0; j < a.cols_; ++j)
                w[j] = a.k_->add(w[j], a.k_->mul(c, a.get(i, j)));
        }
        out.append_row(w);
    }
    out.rref();
    return out;
}

bool FqMat::operator==(const FqMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && m_ == o.m_ && a_ == o.a_;
}

bool FqMat::lex_less(const FqMat& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    return a_ < o.a_;
}

std::size_t FqMat::hash() const {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](std::size_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(rows_);
    mix(cols_);
    for (auto x : a_) mix(x);
    return h;
}

std::vector<Field::Elt> FqMat::apply(const std::vector<Field::Elt>& v) const {
    if (v.size() != rows_) throw IdentityError("apply length mismatch");
    std::vector<Field::Elt> out(cols_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        Field::Elt c = v[r];
        if (c == 0) continue;
        for (std::size_t j = 0; j < cols_; ++j)
            out[j] = k_->add(out[j], k_->mul(c, get(r, j)));
    }
    return out;
}

}  // namespace sl
