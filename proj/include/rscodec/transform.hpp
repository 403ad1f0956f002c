#pragma once

#include <utility>
#include <vector>

#include "rscodec/poly.hpp"

namespace rscodec {

// Evaluation/interpolation over the full cyclic group of GF(q) and a
// Chien-style root search. All transforms are the naive O(n^2) forms.

/// result[i] = f(alpha^i) for i in [0, n), n = q-1.
inline std::vector<elem> dft(const Field& F, const Poly& f, unsigned n) {
    if (n != F.n()) throw BadLengthError("dft length must be q-1");
    if (f.degree() >= static_cast<int>(n)) throw BadLengthError("dft input degree must be < n");
    std::vector<elem> out(n);
    for (unsigned i = 0; i < n; ++i) out[i] = poly_eval(F, f, F.alpha_pow(i));
    return out;
}

/// The unique T with deg T < n and T(alpha^i) = values[i]:
/// t_j = n_inv * sum_i values[i] * alpha^(-ij). The normalization constant
/// n_inv is the field inverse of (n mod p), which exists because
/// n = q-1 = -1 (mod p).
inline Poly idft(const Field& F, const std::vector<elem>& values) {
    const unsigned n = F.n();
    if (values.size() != n) throw BadLengthError("idft length must be q-1");
    const elem n_inv = F.inv(static_cast<elem>(n % F.p()));
    const Poly v{std::vector<elem>(values)};
    std::vector<elem> out(n);
    for (unsigned j = 0; j < n; ++j)
        out[j] = F.mul(n_inv, poly_eval(F, v, F.alpha_pow(-static_cast<long long>(j))));
    return Poly(std::move(out));
}

/// Textbook Lagrange interpolation: the unique P with deg P < |points| and
/// P(x_j) = y_j. Nodes must be pairwise distinct.
inline Poly lagrange_interpolate(const Field& F, const std::vector<std::pair<elem, elem>>& points) {
    if (points.empty() || points.size() > F.q())
        throw BadLengthError("lagrange_interpolate needs 1..q points");
    Poly acc = Poly::zero();
    for (std::size_t j = 0; j < points.size(); ++j) {
        Poly numer = Poly::one();
        elem denom = 1;
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (i == j) continue;
            if (points[i].first == points[j].first)
                throw DuplicateNodeError("node " + std::to_string(points[i].first) + " repeats");
            numer = poly_mul(F, numer, Poly{F.neg(points[i].first), 1});
            denom = F.mul(denom, F.sub(points[j].first, points[i].first));
        }
        acc = poly_add(F, acc, scalar_mul(F, numer, F.div(points[j].second, denom)));
    }
    return acc;
}

/// All j in [index_lo, index_hi] with W(alpha^j) = 0, as (j, alpha^j) pairs
/// in increasing j. This IS the brute-force evaluation filter.
inline std::vector<std::pair<unsigned, elem>> chien_roots(const Field& F, const Poly& W,
                                                          unsigned index_lo, unsigned index_hi) {
    if (W.is_zero()) throw InternalError("chien_roots on the zero polynomial");
    if (index_lo > index_hi || index_hi > F.n() - 1)
        throw BadLengthError("chien_roots index range out of [0, n-1]");
    std::vector<std::pair<unsigned, elem>> roots;
    for (unsigned j = index_lo; j <= index_hi; ++j) {
        elem x = F.alpha_pow(j);
        if (poly_eval(F, W, x) == 0) roots.emplace_back(j, x);
    }
    return roots;
}

}  // namespace rscodec
