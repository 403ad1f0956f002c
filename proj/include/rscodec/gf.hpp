#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "rscodec/errors.hpp"

namespace rscodec {

// A field element. Values live in [0, q). For extension fields the value is
// the base-p digit vector of the residue polynomial, lowest digit = constant
// term (so for p = 2 the value is the usual bit pattern).
using elem = std::uint16_t;

namespace detail {

inline bool is_prime(unsigned v) {
    if (v < 2) return false;
    for (unsigned d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

}  // namespace detail

/// Arithmetic in GF(p^m) with 4 <= q = p^m <= 2^16 and a designated
/// primitive element alpha. exp/log tables are built eagerly at construction
/// and alpha's multiplicative order is verified to be exactly q-1; a
/// reducible construction polynomial or a low-order alpha is rejected.
/// Immutable after construction; all operations are pure.
class Field {
public:
    // Prime field GF(p). alpha is a primitive root mod p.
    Field(unsigned p, elem alpha) : p_(p), m_(1), alpha_(alpha) {
        if (!detail::is_prime(p)) throw NotPrimeError("p = " + std::to_string(p));
        q_ = p;
        check_size();
        if (alpha == 0 || alpha >= q_)
            throw NotPrimitiveError("alpha = " + std::to_string(alpha) +
                                    " is not a nonzero element of GF(" + std::to_string(q_) + ")");
        build_tables();
    }

    // Extension field GF(p^m), m >= 2. prim_poly lists c0..cm of a monic
    // degree-m polynomial over GF(p); alpha defaults to the polynomial x.
    Field(unsigned p, unsigned m, std::vector<unsigned> prim_poly,
          std::optional<elem> alpha = std::nullopt)
        : p_(p), m_(m), prim_poly_(std::move(prim_poly)) {
        if (!detail::is_prime(p)) throw NotPrimeError("p = " + std::to_string(p));
        if (m < 2) throw BadPolyDegreeError("extension constructor requires m >= 2");
        std::uint64_t q = 1;
        for (unsigned i = 0; i < m; ++i) {
            q *= p;
            if (q > 65536) throw UnsupportedFieldError("q = p^m exceeds 2^16");
        }
        q_ = static_cast<unsigned>(q);
        check_size();
        if (prim_poly_.size() != m + 1)
            throw BadPolyDegreeError("construction polynomial must have degree m = " +
                                     std::to_string(m));
        for (unsigned c : prim_poly_)
            if (c >= p) throw BadPolyDegreeError("coefficient " + std::to_string(c) +
                                                 " out of range for GF(" + std::to_string(p) + ")");
        if (prim_poly_.back() != 1) throw BadPolyDegreeError("construction polynomial must be monic");
        alpha_ = alpha.value_or(static_cast<elem>(p));  // the polynomial x
        if (alpha_ == 0 || alpha_ >= q_)
            throw NotPrimitiveError("alpha = " + std::to_string(alpha_) +
                                    " is not a nonzero element of GF(" + std::to_string(q_) + ")");
        build_tables();
    }

    unsigned p() const { return p_; }
    unsigned m() const { return m_; }
    unsigned q() const { return q_; }
    unsigned n() const { return q_ - 1; }  // order of alpha; code length
    elem alpha() const { return alpha_; }
    const std::vector<unsigned>& prim_poly() const { return prim_poly_; }
    const std::vector<elem>& exp_table() const { return exp_; }

    elem add(elem a, elem b) const {
        if (p_ == 2) return a ^ b;
        if (m_ == 1) return static_cast<elem>((a + b) % p_);
        return digitwise(a, b, /*negate_b=*/false);
    }

    elem sub(elem a, elem b) const {
        if (p_ == 2) return a ^ b;
        if (m_ == 1) return static_cast<elem>((a + p_ - b) % p_);
        return digitwise(a, b, /*negate_b=*/true);
    }

    elem neg(elem a) const { return sub(0, a); }

    elem mul(elem a, elem b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[(static_cast<std::uint32_t>(log_[a]) + log_[b]) % n()];
    }

    elem inv(elem a) const {
        if (a == 0) throw DivideByZeroError("inverse of zero");
        return exp_[(n() - log_[a]) % n()];
    }

    elem div(elem a, elem b) const { return mul(a, inv(b)); }

    // a^e with e reduced mod q-1 for nonzero a; 0^0 = 1.
    elem pow(elem a, long long e) const {
        if (a == 0) {
            if (e == 0) return 1;
            if (e < 0) throw DivideByZeroError("negative power of zero");
            return 0;
        }
        long long r = e % static_cast<long long>(n());
        if (r < 0) r += n();
        return exp_[(static_cast<std::uint64_t>(log_[a]) * static_cast<std::uint64_t>(r)) % n()];
    }

    elem alpha_pow(long long i) const {
        long long r = i % static_cast<long long>(n());
        if (r < 0) r += n();
        return exp_[static_cast<std::size_t>(r)];
    }

    unsigned log(elem a) const {
        if (a == 0) throw DivideByZeroError("log of zero");
        if (a >= q_) throw InternalError("element " + std::to_string(a) + " out of range");
        return log_[a];
    }

private:
    static constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

    void check_size() const {
        if (q_ < 4)
            throw UnsupportedFieldError("q = " + std::to_string(q_) +
                                        " < 4 admits no code with n = q-1 >= 3");
        if (q_ > 65536)
            throw UnsupportedFieldError("q = " + std::to_string(q_) + " exceeds 2^16");
    }

    elem digitwise(elem a, elem b, bool negate_b) const {
        unsigned out = 0, scale = 1;
        unsigned x = a, y = b;
        for (unsigned i = 0; i < m_; ++i) {
            unsigned da = x % p_, db = y % p_;
            x /= p_;
            y /= p_;
            unsigned s = negate_b ? (da + p_ - db) % p_ : (da + db) % p_;
            out += s * scale;
            scale *= p_;
        }
        return static_cast<elem>(out);
    }

    // Residue-polynomial product, used only while building the tables.
    elem residue_mul(elem a, elem b) const {
        if (m_ == 1) return static_cast<elem>((static_cast<std::uint32_t>(a) * b) % p_);
        std::vector<unsigned> da(m_), db(m_), prod(2 * m_ - 1, 0);
        unsigned x = a, y = b;
        for (unsigned i = 0; i < m_; ++i) {
            da[i] = x % p_;
            db[i] = y % p_;
            x /= p_;
            y /= p_;
        }
        for (unsigned i = 0; i < m_; ++i)
            for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        for (unsigned i = 2 * m_ - 2; i >= m_; --i) {
            unsigned c = prod[i];
            if (c == 0) continue;
            for (unsigned j = 0; j <= m_; ++j) {
                unsigned& slot = prod[i - m_ + j];
                slot = (slot + p_ - (c * prim_poly_[j]) % p_) % p_;
            }
            prod[i] = 0;
        }
        unsigned out = 0;
        for (unsigned i = m_; i-- > 0;) out = out * p_ + prod[i];
        return static_cast<elem>(out);
    }

    void build_tables() {
        exp_.assign(n(), 0);
        log_.assign(q_, kUnset);
        elem cur = 1;
        for (unsigned i = 0; i < n(); ++i) {
            if (cur == 0)
                throw NotPrimitiveError("alpha is a zero divisor; construction polynomial is reducible");
            if (log_[cur] != kUnset)
                throw NotPrimitiveError("alpha has multiplicative order " + std::to_string(i) +
                                        " < q-1 = " + std::to_string(n()));
            exp_[i] = cur;
            log_[cur] = i;
            cur = residue_mul(cur, alpha_);
        }
        if (cur != 1)
            throw NotPrimitiveError("alpha^(q-1) != 1");
    }

    unsigned p_ = 0, m_ = 0, q_ = 0;
    elem alpha_ = 0;
    std::vector<unsigned> prim_poly_;
    std::vector<elem> exp_;
    std::vector<std::uint32_t> log_;
};

/// Uniform construction entry point. For m = 1 pass alpha and no
/// construction polynomial; for m >= 2 prim_poly is required and alpha
/// defaults to the polynomial x.
inline Field make_field(unsigned p, unsigned m, const std::vector<unsigned>& prim_poly = {},
                        std::optional<elem> alpha = std::nullopt) {
    if (m == 1) {
        if (!alpha) throw NotPrimitiveError("prime fields need an explicit alpha");
        if (!prim_poly.empty())
            throw BadPolyDegreeError("prime fields take alpha, not a construction polynomial");
        return Field(p, *alpha);
    }
    return Field(p, m, prim_poly, alpha);
}

}  // namespace rscodec
