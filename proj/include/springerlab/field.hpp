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

#ifndef SPRINGERLAB_FIELD_HPP
#define SPRINGERLAB_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "springerlab/kernels.hpp"

namespace sl {

// F_q, q = p^m, p an odd prime.  Elements are uint16_t indices packing the
// polynomial-basis coordinates base p: index = sum c_i p^i for the residue
// of x^i.  Addition is digitwise; multiplication goes through discrete
// log/antilog tables over a fixed primitive element.  The modulus, the
// generator and everything derived from them are found by deterministic
// search, so a (p, m) pair names one field, bit for bit, on every run.
class Field {
  public:
    using Elt = uint16_t;

    Field(unsigned p, unsigned m);
    Field(unsigned p, unsigned m, std::vector<uint16_t> modulus_low);

    unsigned p() const { return p_; }
    unsigned degree() const { return m_; }
    unsigned q() const { return q_; }
    const kern::ModCtx& modp() const { return modp_; }

    // modulus low coefficients (degree m monic; entry i = coeff of x^i)
    const std::vector<uint16_t>& modulus() const { return mod_; }

    Elt zero() const { return 0; }
    Elt one() const { return 1; }
    Elt generator() const { return gen_; }

    Elt from_int(long long v) const;            // image of an integer
    Elt from_digits(const std::vector<uint16_t>& d) const;
    std::vector<uint16_t> digits(Elt a) const;  // m coordinates over F_p

    Elt add(Elt a, Elt b) const {
        if (addtab_.empty()) return add_slow(a, b);
        return addtab_[static_cast<size_t>(a) * q_ + b];
    }
    Elt neg(Elt a) const { return negtab_[a]; }
    Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }
    Elt mul(Elt a, Elt b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    Elt inv(Elt a) const;
    Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
    Elt pow(Elt a, long long e) const;
    // x -> x^(p^k)
    Elt frobenius(Elt a, unsigned k = 1) const;

    bool same(const Field& o) const {
        return p_ == o.p_ && m_ == o.m_ && mod_ == o.mod_;
    }

    // Regular representation of a over F_p: column j holds the digits of
    // a * x^j.  Row-major m x m, precomputed for every element.  Feeds the
    // sliced row kernels.
    const uint16_t* mulmat(Elt a) const { return mulmat_.data() + static_cast<std::size_t>(a) * m_ * m_; }

    std::string to_string(Elt a) const;  // digits as "c0+c1*x+..." shorthand

  private:
    Elt add_slow(Elt a, Elt b) const;
    void build();

    unsigned p_, m_, q_;
    kern::ModCtx modp_;
    std::vector<uint16_t> mod_;     // low coefficients, size m
    std::vector<Elt> exp_;          // size 2(q-1)
    std::vector<uint16_t> log_;     // size q (log_[0] unused)
    std::vector<Elt> negtab_;       // size q
    std::vector<Elt> invtab_;       // size q
    std::vector<Elt> addtab_;       // size q*q when q <= 256, else empty
    std::vector<uint16_t> mulmat_;  // size q*m*m
    Elt gen_ = 0;
};

// The quadratic extension F_{q^2} / F_q used for the hermitian structure,
// with the subfield embedding, the involution x -> x^q and a fixed epsilon
// satisfying epsilon^q = -epsilon (exists for odd q).
class QuadExt {
  public:
    explicit QuadExt(std::shared_ptr<const Field> base);

    const Field& base() const { return *base_; }
    const Field& ext() const { return *ext_; }
    std::shared_ptr<const Field> base_ptr() const { return base_; }
    std::shared_ptr<const Field> ext_ptr() const { return ext_; }

    Field::Elt embed(Field::Elt a) const { return embed_[a]; }
    // x -> x^q, the nontrivial automorphism over the base
    Field::Elt conj(Field::Elt a) const { return ext_->frobenius(a, base_->degree()); }
    bool in_base(Field::Elt a) const { return conj(a) == a; }
    Field::Elt epsilon() const { return eps_; }

  private:
    std::shared_ptr<const Field> base_;
    std::shared_ptr<const Field> ext_;
    std::vector<Field::Elt> embed_;
    Field::Elt eps_;
};

}  // namespace sl

#endif
