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

#include "springerlab/field.hpp"

#include <algorithm>
#include <sstream>

#include "springerlab/errors.hpp"

namespace sl {

namespace {

constexpr unsigned kMaxQ = 4096;

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// dense polynomial arithmetic over F_p for table construction only
using Poly = std::vector<uint16_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly pmul(const Poly& a, const Poly& b, unsigned p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = static_cast<uint16_t>((c[i + j] + a[i] * b[j]) % p);
    trim(c);
    return c;
}

// a mod f, f monic
Poly pmod(Poly a, const Poly& f, unsigned p) {
    trim(a);
    while (a.size() >= f.size()) {
        uint16_t lead = a.back();
        size_t shift = a.size() - f.size();
        for (size_t i = 0; i < f.size(); ++i) {
            unsigned sub = (static_cast<unsigned>(lead) * f[i]) % p;
            a[shift + i] = static_cast<uint16_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

bool divides(const Poly& d, const Poly& f, unsigned p) {
    return pmod(f, d, p).empty();
}

// irreducibility by trial division with monic divisors of degree <= deg/2
bool irreducible(const Poly& f, unsigned p) {
    unsigned deg = static_cast<unsigned>(f.size()) - 1;
    if (deg == 1) return true;
    for (unsigned d = 1; 2 * d <= deg; ++d) {
        unsigned count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (unsigned low = 0; low < count; ++low) {
            Poly g(d + 1, 0);
            unsigned v = low;
            for (unsigned i = 0; i < d; ++i) {
                g[i] = static_cast<uint16_t>(v % p);
                v /= p;
            }
            g[d] = 1;
            if (divides(g, f, p)) return false;
        }
    }
    return true;
}

std::vector<uint16_t> find_modulus(unsigned p, unsigned m) {
    if (m == 1) return {0};  // f = x
    unsigned count = 1;
    for (unsigned i = 0; i < m; ++i) count *= p;
    for (unsigned low = 0; low < count; ++low) {
        Poly f(m + 1, 0);
        unsigned v = low;
        for (unsigned i = 0; i < m; ++i) {
            f[i] = static_cast<uint16_t>(v % p);
            v /= p;
        }
        f[m] = 1;
        if (f[0] != 0 && irreducible(f, p)) {
            f.pop_back();
            return f;
        }
    }
    throw ConfigError("no irreducible modulus found (p=" + std::to_string(p) +
                      ", m=" + std::to_string(m) + ")");
}

std::vector<unsigned> prime_factors(unsigned n) {
    std::vector<unsigned> fs;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) fs.push_back(n);
    return fs;
}

}  // namespace

Field::Field(unsigned p, unsigned m) : Field(p, m, find_modulus(p, m)) {}

Field::Field(unsigned p, unsigned m, std::vector<uint16_t> modulus_low)
    : p_(p), m_(m), q_(1), modp_(static_cast<uint16_t>(p)), mod_(std::move(modulus_low)) {
    if (!is_prime(p_)) throw ConfigError("field characteristic must be prime");
    if (p_ == 2) throw ConfigError("even characteristic is not supported");
    if (m_ == 0) throw ConfigError("field degree must be >= 1");
    for (unsigned i = 0; i < m_; ++i) {
        if (q_ > kMaxQ / p_) throw ConfigError("field too large (q > 4096)");
        q_ *= p_;
    }
    if (mod_.size() != m_) throw ConfigError("modulus degree mismatch");
    build();
}

void Field::build() {
    // index <-> digits is fixed by the packing; multiplication needs the
    // product table of the basis, built through polynomial arithmetic.
    auto mul_poly = [&](Elt a, Elt b) -> Elt {
        Poly pa = {}, pb = {};
        {
            unsigned v = a;
            while (v != 0u) { pa.push_back(static_cast<uint16_t>(v % p_)); v /= p_; }
            v = b;
            while (v != 0u) { pb.push_back(static_cast<uint16_t>(v % p_)); v /= p_; }
        }
        Poly f = mod_;
        f.push_back(1);
        Poly c = pmod(pmul(pa, pb, p_), f, p_);
        unsigned idx = 0;
        for (size_t i = c.size(); i-- > 0;) idx = idx * p_ + c[i];
        return static_cast<Elt>(idx);
    };

    negtab_.assign(q_, 0);
    for (unsigned a = 0; a < q_; ++a) {
        unsigned v = a, idx = 0, mult = 1;
        for (unsigned i = 0; i < m_; ++i) {
            unsigned d = v % p_;
            v /= p_;
            idx += ((p_ - d) % p_) * mult;
            mult *= p_;
        }
        negtab_[a] = static_cast<Elt>(idx);
    }

    // deterministic primitive element: smallest index of full order
    const unsigned n = q_ - 1;
    auto fs = prime_factors(n);
    auto powmod = [&](Elt a, unsigned e) {
        Elt r = 1;
        Elt base = a;
        while (e != 0u) {
            if (e & 1u) r = mul_poly(r, base);
            base = mul_poly(base, base);
            e >>= 1u;
        }
        return r;
    };
    gen_ = 0;
    for (unsigned a = 1; a < q_; ++a) {
        bool ok = true;
        for (unsigned f : fs)
            if (powmod(static_cast<Elt>(a), n / f) == 1) { ok = false; break; }
        if (ok) { gen_ = static_cast<Elt>(a); break; }
    }
    if (gen_ == 0) throw ConfigError("no primitive element (modulus not irreducible?)");

    exp_.assign(2 * n, 0);
    log_.assign(q_, 0);
    Elt cur = 1;
    for (unsigned i = 0; i < n; ++i) {
        exp_[i] = cur;
        exp_[i + n] = cur;
        log_[cur] = static_cast<uint16_t>(i);
        cur = mul_poly(cur, gen_);
    }
    if (cur != 1) throw ConfigError("generator order mismatch (modulus not irreducible?)");

    invtab_.assign(q_, 0);
    for (unsigned a = 1; a < q_; ++a)
        invtab_[a] = exp_[(n - log_[a]) % n];

    if (q_ <= 256) {
        addtab_.assign(static_cast<size_t>(q_) * q_, 0);
        for (unsigned a = 0; a < q_; ++a)
            for (unsigned b = 0; b < q_; ++b)
                addtab_[static_cast<size_t>(a) * q_ + b] = add_slow(static_cast<Elt>(a), static_cast<Elt>(b));
    }

    mulmat_.assign(static_cast<size_t>(q_) * m_ * m_, 0);
    for (unsigned a = 0; a < q_; ++a) {
        Elt cur = static_cast<Elt>(a);
        uint16_t* mat = mulmat_.data() + static_cast<size_t>(a) * m_ * m_;
        for (unsigned j = 0; j < m_; ++j) {
            auto dd = digits(cur);
            for (unsigned i = 0; i < m_; ++i) mat[static_cast<size_t>(i) * m_ + j] = dd[i];
            if (j + 1 < m_) cur = mul(cur, static_cast<Elt>(p_));
        }
    }
}

Field::Elt Field::add_slow(Elt a, Elt b) const {
    unsigned va = a, vb = b, idx = 0, mult = 1;
    for (unsigned i = 0; i < m_; ++i) {
        unsigned s = va % p_ + vb % p_;
        if (s >= p_) s -= p_;
        idx += s * mult;
        mult *= p_;
        va /= p_;
        vb /= p_;
    }
    return static_cast<Elt>(idx);
}

Field::Elt Field::from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Elt>(r);
}

Field::Elt Field::from_digits(const std::vector<uint16_t>& d) const {
    unsigned idx = 0;
    for (size_t i = d.size(); i-- > 0;) {
        if (d[i] >= p_) throw ConfigError("digit out of range");
        idx = idx * p_ + d[i];
    }
    return static_cast<Elt>(idx);
}

std::vector<uint16_t> Field::digits(Elt a) const {
    std::vector<uint16_t> d(m_, 0);
    unsigned v = a;
    for (unsigned i = 0; i < m_; ++i) {
        d[i] = static_cast<uint16_t>(v % p_);
        v /= p_;
    }
    return d;
}

Field::Elt Field::inv(Elt a) const {
    if (a == 0) throw IdentityError("division by zero in F_q");
    return invtab_[a];
}

Field::Elt Field::pow(Elt a, long long e) const {
    if (a == 0) {
        if (e < 0) throw IdentityError("division by zero in F_q");
        return e == 0 ? one() : zero();
    }
    const long long n = q_ - 1;
    long long le = ((e % n) + n) % n;
    return exp_[(static_cast<long long>(log_[a]) * le) % n];
}

Field::Elt Field::frobenius(Elt a, unsigned k) const {
    if (a == 0) return 0;
    long long e = 1;
    const long long n = q_ - 1;
    for (unsigned i = 0; i < k; ++i) e = (e * p_) % n;
    return exp_[(static_cast<long long>(log_[a]) * e) % n];
}

std::string Field::to_string(Elt a) const {
    if (m_ == 1) return std::to_string(a);
    auto d = digits(a);
    std::ostringstream os;
    os << "[";
    for (unsigned i = 0; i < m_; ++i) {
        if (i != 0u) os << ",";
        os << d[i];
    }
    os << "]";
    return os.str();
}

QuadExt::QuadExt(std::shared_ptr<const Field> base) : base_(std::move(base)) {
    ext_ = std::make_shared<Field>(base_->p(), 2 * base_->degree());

    // embedding: smallest root of the base modulus inside the extension
    const unsigned p = base_->p();
    const unsigned mb = base_->degree();
    auto eval_base_mod = [&](Field::Elt r) {
        // modulus = x^mb + sum mod_[i] x^i with F_p coefficients
        Field::Elt acc = ext_->pow(r, mb);
        for (unsigned i = 0; i < mb; ++i) {
            Field::Elt ci = static_cast<Field::Elt>(base_->modulus()[i] % p);
            acc = ext_->add(acc, ext_->mul(ci, ext_->pow(r, i)));
        }
        return acc;
    };
    Field::Elt root = 0;
    bool found = false;
    if (mb == 1) {
        // base modulus is x; root 0
        root = 0;
        found = true;
    } else {
        for (unsigned r = 0; r < ext_->q(); ++r)
            if (eval_base_mod(static_cast<Field::Elt>(r)) == 0) {
                root = static_cast<Field::Elt>(r);
                found = true;
                break;
            }
    }
    if (!found) throw ConfigError("no subfield embedding found");

    embed_.assign(base_->q(), 0);
    for (unsigned a = 0; a < base_->q(); ++a) {
        auto d = base_->digits(static_cast<Field::Elt>(a));
        Field::Elt acc = 0;
        for (size_t i = d.size(); i-- > 0;)
            acc = ext_->add(ext_->mul(acc, root), static_cast<Field::Elt>(d[i]));
        embed_[a] = acc;
    }
    if (embed_[base_->one()] != ext_->one())
        throw ConfigError("subfield embedding is broken");

    eps_ = 0;
    for (unsigned a = 1; a < ext_->q(); ++a) {
        Field::Elt e = static_cast<Field::Elt>(a);
        if (conj(e) == ext_->neg(e)) { eps_ = e; break; }
    }
    if (eps_ == 0) throw ConfigError("no epsilon with eps^q = -eps (is q odd?)");
}

}  // namespace sl
