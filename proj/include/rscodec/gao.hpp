#pragma once

#include <vector>

#include "rscodec/code.hpp"

namespace rscodec {

// Gao decoding for spectral coding: interpolate the received word, run the
// partial GCD against x^n - 1, divide.

struct GaoTrace {
    Poly T;  // interpolation of the received word
    std::vector<EuclidStep> euclid;
    Poly P, W;   // unnormalized partial-GCD pair
    Poly M, rem;  // division outcome
};

/// x^n - 1 over the code's field.
inline Poly gao_modulus(const CodeParams& C) {
    std::vector<elem> m(C.n + 1, 0);
    m[0] = C.field.neg(1);
    m[C.n] = 1;
    return Poly(std::move(m));
}

/// Test hook: (W*T - P) mod (x^n - 1); zero for any pair produced by the
/// partial GCD step.
inline Poly congruence_residual(const CodeParams& C, const Poly& T, const Poly& W, const Poly& P) {
    Poly lhs = poly_sub(C.field, poly_mul(C.field, W, T), P);
    return poly_divmod(C.field, lhs, gao_modulus(C)).second;
}

inline DecodeResult decode_gao(const CodeParams& C, const Word& received,
                               GaoTrace* trace = nullptr) {
    if (C.method != Method::spectral)
        throw MethodMismatchError("decode_gao requires spectral coding");
    if (received.size() != C.n) throw BadLengthError("received word must have n symbols");
    const Field& F = C.field;

    Poly T = idft(F, received);
    // deg P < (n+k)/2, strict, via integer arithmetic: 2*deg P < n+k
    const int stop = halved_degree_bound(static_cast<int>(C.n + C.k));
    auto [P, W] = partial_euclid(F, gao_modulus(C), T, stop, trace ? &trace->euclid : nullptr);
    auto [M, rem] = poly_divmod(F, P, W);
    if (trace) {
        trace->T = T;
        trace->P = P;
        trace->W = W;
        trace->M = M;
        trace->rem = rem;
    }
    if (!rem.is_zero()) return DecodeResult::failure(FailureReason::NonzeroRemainder);
    if (M.degree() >= static_cast<int>(C.k)) return DecodeResult::failure(FailureReason::DegreeOverflow);

    Message msg(C.k, 0);
    for (unsigned i = 0; i < C.k; ++i) msg[i] = M.coeff(i);
    Word codeword = encode_spectral(C, msg);
    if (hamming_distance(codeword, received) > (C.d - 1) / 2)
        return DecodeResult::failure(FailureReason::DistanceExceeded);

    std::vector<unsigned> corrected;
    for (unsigned i = 0; i < C.n; ++i)
        if (codeword[i] != received[i]) corrected.push_back(i);
    return DecodeResult::success(
        {std::move(msg), std::move(codeword), make_monic(F, W), std::move(corrected)});
}

}  // namespace rscodec
