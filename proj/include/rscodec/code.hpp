#pragma once

#include <algorithm>
#include <string>
#include <variant>
#include <vector>

#include "rscodec/transform.hpp"

namespace rscodec {

enum class Method { spectral, remainder };

inline const char* to_string(Method m) { return m == Method::spectral ? "spectral" : "remainder"; }

using Word = std::vector<elem>;     // n symbols; index i carries locator alpha^i
using Message = std::vector<elem>;  // k symbols

/// Monic generator with roots exactly alpha^b .. alpha^(b+d-2).
inline Poly generator_poly(const Field& F, unsigned b, unsigned d) {
    if (d < 2) throw BadCodeParamsError("designed distance must be >= 2");
    Poly g = Poly::one();
    for (unsigned i = b; i <= b + d - 2; ++i)
        g = poly_mul(F, g, Poly{F.neg(F.alpha_pow(i)), 1});
    return g;
}

/// An (n, k, d) Reed-Solomon code over GF(q) with n = q-1, d = n-k+1.
/// The coding method is part of the parameterization: spectral symbols are
/// c_i = M(alpha^i); remainder coding is systematic with the message in the
/// top k coefficients. Immutable after construction.
struct CodeParams {
    Field field;
    unsigned n, k, d, b;
    Poly g;
    Method method;
};

namespace detail {
// p(x) = g(x)/(x - alpha^b), exact by construction. Checked here so a
// corrupted CodeParams cannot propagate.
inline Poly p_poly_impl(const Field& F, const Poly& g, unsigned b, unsigned d) {
    auto [q, r] = poly_divmod(F, g, Poly{F.neg(F.alpha_pow(b)), 1});
    if (!r.is_zero()) throw InternalError("alpha^b is not a root of g");
    if (q.degree() != static_cast<int>(d) - 2) throw InternalError("p(x) has wrong degree");
    for (unsigned j = 0; j + 1 <= d - 1; ++j)
        if (q.coeff(j) == 0) throw InternalError("p_" + std::to_string(j) + " = 0");
    return q;
}
}  // namespace detail

inline CodeParams make_code(Field field, unsigned k, unsigned b, Method method) {
    const unsigned n = field.n();
    if (k < 1 || k >= n) throw BadCodeParamsError("k must satisfy 1 <= k < n = " + std::to_string(n));
    if (b < 1) throw BadCodeParamsError("b must be a natural number >= 1");
    const unsigned d = n - k + 1;
    Poly g = generator_poly(field, b, d);
    detail::p_poly_impl(field, g, b, d);  // validates p_j != 0 for all j
    return CodeParams{std::move(field), n, k, d, b, std::move(g), method};
}

inline Word encode_spectral(const CodeParams& C, const Message& msg) {
    if (C.method != Method::spectral)
        throw MethodMismatchError("spectral encode on a remainder-coded parameter set");
    if (msg.size() != C.k) throw BadLengthError("message must have k symbols");
    return dft(C.field, Poly{Message(msg)}, C.n);
}

/// Message goes verbatim into coefficients x^(d-1) .. x^(n-1); the parity
/// part is -(shifted message mod g), so the output is divisible by g.
inline Word encode_systematic(const CodeParams& C, const Message& msg) {
    if (C.method != Method::remainder)
        throw MethodMismatchError("systematic encode on a spectral-coded parameter set");
    if (msg.size() != C.k) throw BadLengthError("message must have k symbols");
    std::vector<elem> shifted(C.n, 0);
    std::copy(msg.begin(), msg.end(), shifted.begin() + (C.d - 1));
    Poly sh{std::move(shifted)};
    Poly parity = poly_neg(C.field, poly_divmod(C.field, sh, C.g).second);
    Word out(C.n, 0);
    for (unsigned i = 0; i < C.n; ++i) out[i] = C.field.add(sh.coeff(i), parity.coeff(i));
    return out;
}

/// Systematic message part of a word: symbols at positions d-1 .. n-1.
inline Message message_part(const CodeParams& C, const Word& w) {
    return Message(w.begin() + (C.d - 1), w.end());
}

struct ErrorEntry {
    unsigned pos;  // position index i in [0, n-1], locator alpha^i
    elem value;    // nonzero
};

/// Injected errors: E(x) = sum value * x^pos. Positions distinct, values
/// nonzero.
struct ErrorPattern {
    std::vector<ErrorEntry> entries;
    unsigned weight() const { return static_cast<unsigned>(entries.size()); }
};

inline void validate_pattern(const CodeParams& C, const ErrorPattern& pat) {
    std::vector<unsigned> seen;
    for (const auto& e : pat.entries) {
        if (e.pos >= C.n) throw BadCodeParamsError("error position out of [0, n-1]");
        if (e.value == 0 || e.value >= C.field.q())
            throw BadCodeParamsError("error value must be a nonzero field element");
        if (std::find(seen.begin(), seen.end(), e.pos) != seen.end())
            throw BadCodeParamsError("duplicate error position");
        seen.push_back(e.pos);
    }
}

inline Word apply_errors(const CodeParams& C, const Word& codeword, const ErrorPattern& pat) {
    if (codeword.size() != C.n) throw BadLengthError("word must have n symbols");
    validate_pattern(C, pat);
    Word out = codeword;
    for (const auto& e : pat.entries) out[e.pos] = C.field.add(out[e.pos], e.value);
    return out;
}

inline Poly error_poly(const CodeParams& C, const ErrorPattern& pat) {
    std::vector<elem> coeffs(C.n, 0);
    for (const auto& e : pat.entries) coeffs[e.pos] = e.value;
    return Poly(std::move(coeffs));
}

/// W(x) = prod (x - Z_i) over all injected positions, monic.
inline Poly locator_poly(const CodeParams& C, const ErrorPattern& pat) {
    Poly w = Poly::one();
    for (const auto& e : pat.entries)
        w = poly_mul(C.field, w, Poly{C.field.neg(C.field.alpha_pow(e.pos)), 1});
    return w;
}

/// W_m(x): the locator restricted to message-part positions [d-1, n-1].
inline Poly message_locator_poly(const CodeParams& C, const ErrorPattern& pat) {
    Poly w = Poly::one();
    for (const auto& e : pat.entries)
        if (e.pos >= C.d - 1)
            w = poly_mul(C.field, w, Poly{C.field.neg(C.field.alpha_pow(e.pos)), 1});
    return w;
}

inline unsigned hamming_distance(const Word& a, const Word& b) {
    if (a.size() != b.size()) throw BadLengthError("hamming_distance on unequal lengths");
    unsigned d = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) ++d;
    return d;
}

// ---------------------------------------------------------------------------
// Decode results, shared by all three decoders.

enum class FailureReason {
    NonzeroRemainder,
    DegreeOverflow,
    LocatorRootMismatch,
    DistanceExceeded,
    KeyEquationUnsolvable,
};

inline const char* to_string(FailureReason r) {
    switch (r) {
        case FailureReason::NonzeroRemainder: return "NonzeroRemainder";
        case FailureReason::DegreeOverflow: return "DegreeOverflow";
        case FailureReason::LocatorRootMismatch: return "LocatorRootMismatch";
        case FailureReason::DistanceExceeded: return "DistanceExceeded";
        case FailureReason::KeyEquationUnsolvable: return "KeyEquationUnsolvable";
    }
    return "?";
}

struct DecodeSuccess {
    Message message;
    Word codeword;
    Poly error_locator;  // monic
    std::vector<unsigned> corrected_positions;
};

class DecodeResult {
public:
    static DecodeResult success(DecodeSuccess s) { return DecodeResult(std::move(s)); }
    static DecodeResult failure(FailureReason r) { return DecodeResult(r); }

    bool ok() const { return std::holds_alternative<DecodeSuccess>(v_); }
    const DecodeSuccess& value() const {
        if (!ok()) throw InternalError("DecodeResult::value on a failure");
        return std::get<DecodeSuccess>(v_);
    }
    FailureReason reason() const {
        if (ok()) throw InternalError("DecodeResult::reason on a success");
        return std::get<FailureReason>(v_);
    }

private:
    explicit DecodeResult(DecodeSuccess s) : v_(std::move(s)) {}
    explicit DecodeResult(FailureReason r) : v_(r) {}
    std::variant<DecodeSuccess, FailureReason> v_;
};

}  // namespace rscodec
