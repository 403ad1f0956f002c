#pragma once

#include <cstddef>
#include <vector>

#include "rscodec/code.hpp"

namespace rscodec {

// Gemmell-Sudan decoding, implemented directly as a swept linear system and
// deliberately kept the slow, naive oracle for differential testing.

enum class SolveStatus { unique, underdetermined, inconsistent };

struct LinearSolution {
    SolveStatus status = SolveStatus::inconsistent;
    std::vector<elem> x;                 // a particular solution
    std::vector<std::size_t> free_cols;  // witness for underdetermined systems
};

/// Row-reduce [A | rhs] over GF(q). On consistent underdetermined systems
/// the free variables are assigned free_value (0 by default) and any
/// particular solution is returned; inconsistency is a value, not a fault.
inline LinearSolution gaussian_solve(const Field& F, std::vector<std::vector<elem>> A,
                                     std::vector<elem> rhs, elem free_value = 0) {
    const std::size_t rows = A.size();
    const std::size_t cols = rows ? A[0].size() : 0;
    if (rhs.size() != rows) throw BadLengthError("gaussian_solve: rhs size mismatch");

    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && A[pr][c] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(A[r], A[pr]);
        std::swap(rhs[r], rhs[pr]);
        const elem ip = F.inv(A[r][c]);
        for (auto& x : A[r]) x = F.mul(x, ip);
        rhs[r] = F.mul(rhs[r], ip);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || A[i][c] == 0) continue;
            const elem f = A[i][c];
            for (std::size_t j = 0; j < cols; ++j) A[i][j] = F.sub(A[i][j], F.mul(f, A[r][j]));
            rhs[i] = F.sub(rhs[i], F.mul(f, rhs[r]));
        }
        pivot_cols.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (rhs[i] != 0) return {SolveStatus::inconsistent, {}, {}};

    LinearSolution out;
    out.x.assign(cols, 0);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    for (std::size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) {
            out.free_cols.push_back(c);
            out.x[c] = free_value;
        }
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
        elem v = rhs[i];
        for (auto c : out.free_cols) v = F.sub(v, F.mul(A[i][c], out.x[c]));
        out.x[pivot_cols[i]] = v;
    }
    out.status = out.free_cols.empty() ? SolveStatus::unique : SolveStatus::underdetermined;
    return out;
}

enum class GsAttemptStatus {
    inconsistent,
    nonzero_remainder,
    degree_overflow,
    distance_exceeded,
    accepted,
};

inline const char* to_string(GsAttemptStatus s) {
    switch (s) {
        case GsAttemptStatus::inconsistent: return "inconsistent";
        case GsAttemptStatus::nonzero_remainder: return "nonzero_remainder";
        case GsAttemptStatus::degree_overflow: return "degree_overflow";
        case GsAttemptStatus::distance_exceeded: return "distance_exceeded";
        case GsAttemptStatus::accepted: return "accepted";
    }
    return "?";
}

struct GsAttempt {
    unsigned e = 0;
    GsAttemptStatus status = GsAttemptStatus::inconsistent;
    SolveStatus solve_status = SolveStatus::inconsistent;
    Poly W, P, M;  // filled for consistent systems
};

/// One sweep step: pose W(alpha^i) r_i = P(alpha^i) for all i with W monic
/// of exact degree e and deg P < k+e, solve, divide, filter.
inline GsAttempt gs_attempt(const CodeParams& C, const Word& received, unsigned e,
                            elem free_value = 0) {
    const Field& F = C.field;
    GsAttempt at;
    at.e = e;
    const std::size_t unknowns = e + C.k + e;  // w_0..w_{e-1}, p_0..p_{k+e-1}
    std::vector<std::vector<elem>> A(C.n, std::vector<elem>(unknowns, 0));
    std::vector<elem> rhs(C.n, 0);
    for (unsigned i = 0; i < C.n; ++i) {
        const elem ai = F.alpha_pow(i);
        for (unsigned l = 0; l < e; ++l) A[i][l] = F.mul(received[i], F.pow(ai, l));
        for (unsigned s = 0; s < C.k + e; ++s) A[i][e + s] = F.neg(F.pow(ai, s));
        rhs[i] = F.neg(F.mul(received[i], F.pow(ai, e)));
    }
    LinearSolution ls = gaussian_solve(F, std::move(A), std::move(rhs), free_value);
    at.solve_status = ls.status;
    if (ls.status == SolveStatus::inconsistent) {
        at.status = GsAttemptStatus::inconsistent;
        return at;
    }

    std::vector<elem> wc(ls.x.begin(), ls.x.begin() + e);
    wc.push_back(1);  // monic of exact degree e
    at.W = Poly(std::move(wc));
    at.P = Poly(std::vector<elem>(ls.x.begin() + e, ls.x.end()));
    auto [M, rem] = poly_divmod(F, at.P, at.W);
    at.M = M;
    if (!rem.is_zero()) {
        at.status = GsAttemptStatus::nonzero_remainder;
        return at;
    }
    if (M.degree() >= static_cast<int>(C.k)) {
        at.status = GsAttemptStatus::degree_overflow;
        return at;
    }
    Message msg(C.k, 0);
    for (unsigned i = 0; i < C.k; ++i) msg[i] = M.coeff(i);
    if (hamming_distance(encode_spectral(C, msg), received) > (C.d - 1) / 2) {
        at.status = GsAttemptStatus::distance_exceeded;
        return at;
    }
    at.status = GsAttemptStatus::accepted;
    return at;
}

struct GsTrace {
    std::vector<GsAttempt> attempts;
};

inline DecodeResult decode_gs(const CodeParams& C, const Word& received, unsigned t_max,
                              GsTrace* trace = nullptr) {
    if (C.method != Method::spectral)
        throw MethodMismatchError("decode_gs requires spectral coding");
    if (received.size() != C.n) throw BadLengthError("received word must have n symbols");
    if (t_max > (C.d - 1) / 2)
        throw BadCodeParamsError("t_max exceeds the correction bound (d-1)/2");

    for (unsigned e = 0; e <= t_max; ++e) {
        GsAttempt at = gs_attempt(C, received, e);
        if (trace) trace->attempts.push_back(at);
        if (at.status != GsAttemptStatus::accepted) continue;

        Message msg(C.k, 0);
        for (unsigned i = 0; i < C.k; ++i) msg[i] = at.M.coeff(i);
        Word codeword = encode_spectral(C, msg);
        std::vector<unsigned> corrected;
        for (unsigned i = 0; i < C.n; ++i)
            if (codeword[i] != received[i]) corrected.push_back(i);
        return DecodeResult::success({std::move(msg), std::move(codeword), at.W, std::move(corrected)});
    }
    return DecodeResult::failure(FailureReason::KeyEquationUnsolvable);
}

}  // namespace rscodec
