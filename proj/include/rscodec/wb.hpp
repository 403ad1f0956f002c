#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rscodec/code.hpp"

namespace rscodec {

// The original Welch-Berlekamp remainder decoder, with the key-equation
// step solved through the Euclidean interpretation: interpolate L from the
// syndrome, then run the partial GCD.

inline Poly syndrome(const CodeParams& C, const Word& received) {
    if (C.method != Method::remainder)
        throw MethodMismatchError("syndrome requires remainder coding");
    if (received.size() != C.n) throw BadLengthError("received word must have n symbols");
    return poly_divmod(C.field, Poly{Word(received)}, C.g).second;
}

/// p(x) = g(x)/(x - alpha^b), degree d-2, with every coefficient nonzero
/// for RS generators (validated at code construction and re-checked here).
inline Poly p_poly(const CodeParams& C) {
    return detail::p_poly_impl(C.field, C.g, C.b, C.d);
}

/// The modulus for the key-equation congruence: the monic polynomial whose
/// roots are the evaluation nodes alpha^j, j in [0, d-2]. It coincides with
/// g(x) exactly when b = 0 (mod n); for other b the nodes stay fixed while
/// g's roots shift, so the congruence must be taken modulo this polynomial.
inline Poly key_equation_modulus(const CodeParams& C) {
    Poly m = Poly::one();
    for (unsigned j = 0; j + 1 < C.d; ++j)
        m = poly_mul(C.field, m, Poly{C.field.neg(C.field.alpha_pow(j)), 1});
    return m;
}

/// L interpolates L(alpha^j) = s_j / (p_j alpha^j) over j in [0, d-2];
/// deg L < d-1.
inline Poly build_L(const CodeParams& C, const Poly& S) {
    const Field& F = C.field;
    const Poly p = p_poly(C);
    std::vector<std::pair<elem, elem>> points;
    points.reserve(C.d - 1);
    for (unsigned j = 0; j + 1 < C.d; ++j) {
        elem node = F.alpha_pow(j);
        points.emplace_back(node, F.div(S.coeff(j), F.mul(p.coeff(j), node)));
    }
    return lagrange_interpolate(F, points);
}

struct KeyEquationSolution {
    Poly N;
    Poly Wm;  // monic message error locator
};

/// Solves N = L*Wm (mod nodes), deg N < deg Wm <= (d-1)/2, minimizing
/// deg Wm: the first Euclid remainder with 2*deg r < d-1, scaled so Wm is
/// monic. Returns nullopt when the degree validation fails (more than
/// (d-1)/2 message errors, or errors outside the message part).
inline std::optional<KeyEquationSolution> solve_key_equation(
    const CodeParams& C, const Poly& L, std::vector<EuclidStep>* trace = nullptr) {
    if (L.degree() >= static_cast<int>(C.d) - 1)
        throw InternalError("solve_key_equation requires deg L < d-1");
    const Field& F = C.field;
    const int stop = halved_degree_bound(static_cast<int>(C.d) - 1);
    auto [r, v] = partial_euclid(F, key_equation_modulus(C), L, stop, trace);
    if (!(r.degree() < v.degree())) return std::nullopt;
    const elem scale = F.inv(v.leading());
    return KeyEquationSolution{scalar_mul(F, r, scale), scalar_mul(F, v, scale)};
}

/// f(Z) = Z^(-b) * sum_{i=0}^{d-2} p_i alpha^(i(b+1)) / (alpha^i - Z),
/// defined for message-part locators Z = alpha^j, j in [d-1, n-1].
inline elem f_weight(const CodeParams& C, elem Z) {
    const Field& F = C.field;
    if (Z == 0) throw BadLocatorError("Z = 0 is not a locator");
    const unsigned j = F.log(Z);
    if (j < C.d - 1)
        throw BadLocatorError("Z = alpha^" + std::to_string(j) +
                              " lies in the parity index range [0, d-2]");
    const Poly p = p_poly(C);
    elem sum = 0;
    for (unsigned i = 0; i + 1 < C.d; ++i) {
        elem denom = F.sub(F.alpha_pow(i), Z);
        elem term = F.div(F.mul(p.coeff(i), F.alpha_pow(static_cast<long long>(i) * (C.b + 1))), denom);
        sum = F.add(sum, term);
    }
    return F.mul(F.pow(Z, -static_cast<long long>(C.b)), sum);
}

/// Y = f(Z) * N(Z) / Wm'(Z) for a root Z of Wm.
inline elem error_value(const CodeParams& C, const KeyEquationSolution& sol, elem Z) {
    const Field& F = C.field;
    elem denom = poly_eval(F, formal_derivative(F, sol.Wm), Z);
    if (denom == 0) throw RepeatedRootError("Wm'(Z) = 0 at Z = " + std::to_string(Z));
    return F.div(F.mul(f_weight(C, Z), poly_eval(F, sol.N, Z)), denom);
}

struct WbTrace {
    Poly S, p, L;
    std::vector<EuclidStep> euclid;
    Poly N, Wm;
    std::vector<std::pair<unsigned, elem>> roots;
    std::vector<elem> values;
};

inline DecodeResult decode_wb(const CodeParams& C, const Word& received,
                              WbTrace* trace = nullptr) {
    const Field& F = C.field;
    Poly S = syndrome(C, received);
    if (trace) {
        trace->S = S;
        trace->p = p_poly(C);
    }
    if (S.is_zero()) {
        // received is a codeword; message part verbatim
        return DecodeResult::success(
            {message_part(C, received), received, Poly::one(), {}});
    }

    Poly L = build_L(C, S);
    if (trace) trace->L = L;
    auto sol = solve_key_equation(C, L, trace ? &trace->euclid : nullptr);
    if (!sol) return DecodeResult::failure(FailureReason::KeyEquationUnsolvable);
    if (trace) {
        trace->N = sol->N;
        trace->Wm = sol->Wm;
    }

    auto roots = chien_roots(F, sol->Wm, C.d - 1, C.n - 1);
    if (trace) trace->roots = roots;
    if (static_cast<int>(roots.size()) != sol->Wm.degree())
        return DecodeResult::failure(FailureReason::LocatorRootMismatch);

    Word corrected = received;
    for (const auto& [j, Z] : roots) {
        elem y = error_value(C, *sol, Z);
        if (trace) trace->values.push_back(y);
        corrected[j] = F.sub(corrected[j], y);
    }

    // Step 5, parity determination: re-encode the corrected message part,
    // which also repairs parity-position symbols.
    Message msg = message_part(C, corrected);
    Word codeword = encode_systematic(C, msg);
    if (hamming_distance(codeword, received) > (C.d - 1) / 2)
        return DecodeResult::failure(FailureReason::DistanceExceeded);

    std::vector<unsigned> positions;
    for (unsigned i = 0; i < C.n; ++i)
        if (codeword[i] != received[i]) positions.push_back(i);
    return DecodeResult::success(
        {std::move(msg), std::move(codeword), sol->Wm, std::move(positions)});
}

}  // namespace rscodec
