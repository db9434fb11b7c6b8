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

#ifndef SPRINGERLAB_FQMAT_HPP
#define SPRINGERLAB_FQMAT_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "springerlab/field.hpp"

namespace sl {

// Dense matrix over F_q with rows stored sliced: each row keeps its m = [F_q:F_p]
// coordinate rows over F_p contiguously, so every elimination step reduces to
// mod-p axpy/scale kernel calls (SIMD-dispatched).  Vectors are rows; spaces
// are row spans.
class FqMat {
  public:
    FqMat() = default;
    FqMat(const Field* k, std::size_t rows, std::size_t cols);
    static FqMat from_rows(const Field* k, std::size_t cols,
                           const std::vector<std::vector<Field::Elt>>& rows);
    static FqMat identity(const Field* k, std::size_t n);

    const Field* field() const { return k_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Field::Elt get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, Field::Elt v);
    std::vector<Field::Elt> row(std::size_t r) const;
    void set_row(std::size_t r, const std::vector<Field::Elt>& v);

    void append_row(const std::vector<Field::Elt>& v);
    void append_rows(const FqMat& other);

    // y_dst += c * y_src
    void row_axpy(std::size_t dst, std::size_t src, Field::Elt c);
    void row_scale(std::size_t r, Field::Elt c);
    void row_swap(std::size_t a, std::size_t b);
    bool row_is_zero(std::size_t r) const;

    // In-place reduced row echelon form; returns pivot column indices and
    // drops zero rows.  The result is the canonical basis of the row span.
    std::vector<std::size_t> rref();
    std::size_t rank() const;

    // Treats *this as RREF with the given pivots: reduces v in place and
    // returns true when the residual is zero (v in the row span).
    bool reduce_by(std::vector<Field::Elt>& v,
                   const std::vector<std::size_t>& pivots) const;
    // reduction coefficients are appended to *coords when non-null
    bool reduce_by(std::vector<Field::Elt>& v, const std::vector<std::size_t>& pivots,
                   std::vector<Field::Elt>* coords) const;

    // {x row : M x^T = 0}, canonical RREF basis
    FqMat right_kernel() const;
    // {c row : c M = 0}
    FqMat left_kernel() const;
    FqMat transposed() const;
    FqMat multiplied(const FqMat& rhs) const;

    // row span intersection (both operands need not be in RREF)
    static FqMat intersect_spans(const FqMat& a, const FqMat& b);

    bool operator==(const FqMat& o) const;
    bool lex_less(const FqMat& o) const;
    std::size_t hash() const;

    std::vector<Field::Elt> apply(const std::vector<Field::Elt>& v) const;  // v * M

  private:
    uint16_t* slice(std::size_t r, unsigned d) {
        return a_.data() + ((r * m_) + d) * cols_;
    }
    const uint16_t* slice(std::size_t r, unsigned d) const {
        return a_.data() + ((r * m_) + d) * cols_;
    }

    const Field* k_ = nullptr;
    std::size_t rows_ = 0, cols_ = 0;
    unsigned m_ = 1;
    std::vector<uint16_t> a_;
};

struct FqMatHash {
    std::size_t operator()(const FqMat& m) const { return m.hash(); }
};

}  // namespace sl

#endif
