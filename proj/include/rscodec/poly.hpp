#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "rscodec/gf.hpp"

namespace rscodec {

/// Dense univariate polynomial over GF(q), low-degree-first coefficients.
/// Always kept canonical: no trailing zeros, zero polynomial = empty vector.
/// degree() returns -1 for the zero polynomial; every degree bound in this
/// library is >= 0, so -1 behaves as the "-infinity" the stopping rules need.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<elem> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<elem> coeffs) : c_(coeffs) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly({1}); }
    static Poly monomial(elem c, unsigned degree) {
        std::vector<elem> v(degree + 1, 0);
        v[degree] = c;
        return Poly(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    elem leading() const { return c_.empty() ? 0 : c_.back(); }
    const std::vector<elem>& coeffs() const { return c_; }

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<elem> c_;
};

inline Poly poly_add(const Field& F, const Poly& f, const Poly& g) {
    std::vector<elem> out(std::max(f.coeffs().size(), g.coeffs().size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.add(f.coeff(i), g.coeff(i));
    return Poly(std::move(out));
}

inline Poly poly_neg(const Field& F, const Poly& f) {
    std::vector<elem> out(f.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.neg(f.coeff(i));
    return Poly(std::move(out));
}

inline Poly poly_sub(const Field& F, const Poly& f, const Poly& g) {
    std::vector<elem> out(std::max(f.coeffs().size(), g.coeffs().size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.sub(f.coeff(i), g.coeff(i));
    return Poly(std::move(out));
}

inline Poly scalar_mul(const Field& F, const Poly& f, elem c) {
    std::vector<elem> out(f.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.mul(f.coeff(i), c);
    return Poly(std::move(out));
}

inline Poly poly_mul(const Field& F, const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) return Poly::zero();
    std::vector<elem> out(f.coeffs().size() + g.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        elem fi = f.coeff(i);
        if (fi == 0) continue;
        for (std::size_t j = 0; j < g.coeffs().size(); ++j)
            out[i + j] = F.add(out[i + j], F.mul(fi, g.coeff(j)));
    }
    return Poly(std::move(out));
}

/// Long division: f = q*g + r with deg r < deg g.
inline std::pair<Poly, Poly> poly_divmod(const Field& F, const Poly& f, const Poly& g) {
    if (g.is_zero()) throw DivideByZeroError("polynomial division by zero");
    if (f.degree() < g.degree()) return {Poly::zero(), f};
    std::vector<elem> rem = f.coeffs();
    std::vector<elem> quot(f.degree() - g.degree() + 1, 0);
    const elem ilc = F.inv(g.leading());
    const int dg = g.degree();
    for (int i = f.degree(); i >= dg; --i) {
        elem c = F.mul(rem[static_cast<std::size_t>(i)], ilc);
        if (c == 0) continue;
        quot[static_cast<std::size_t>(i - dg)] = c;
        for (int j = 0; j <= dg; ++j) {
            auto idx = static_cast<std::size_t>(i - dg + j);
            rem[idx] = F.sub(rem[idx], F.mul(c, g.coeff(static_cast<std::size_t>(j))));
        }
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

/// Horner evaluation.
inline elem poly_eval(const Field& F, const Poly& f, elem x0) {
    elem acc = 0;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = F.add(F.mul(acc, x0), f.coeff(i));
    return acc;
}

inline Poly formal_derivative(const Field& F, const Poly& f) {
    if (f.degree() < 1) return Poly::zero();
    std::vector<elem> out(static_cast<std::size_t>(f.degree()), 0);
    for (std::size_t i = 1; i <= static_cast<std::size_t>(f.degree()); ++i) {
        // (i mod p) as a field element is the base element with that value
        elem factor = static_cast<elem>(i % F.p());
        out[i - 1] = F.mul(factor, f.coeff(i));
    }
    return Poly(std::move(out));
}

inline Poly make_monic(const Field& F, const Poly& f) {
    if (f.is_zero() || f.leading() == 1) return f;
    return scalar_mul(F, f, F.inv(f.leading()));
}

/// One step of the extended Euclidean remainder sequence on inputs (a, b):
/// remainder r_j and the multiplier v_j of b in the Bezout identity, so that
/// r_j = v_j * b (mod a) at every step.
struct EuclidStep {
    Poly remainder;
    Poly multiplier;
};

struct EuclidResult {
    Poly r;
    Poly v;
};

/// Runs the remainder sequence r_{-1}=a, r_0=b with v_{-1}=0, v_0=1 and
/// returns the first (r_j, v_j), j >= 0, with deg r_j < stop_bound. Neither
/// output is normalized; callers scale as they need. The optional trace
/// records every visited step including the returned one.
inline EuclidResult partial_euclid(const Field& F, const Poly& a, const Poly& b, int stop_bound,
                                   std::vector<EuclidStep>* trace = nullptr) {
    if (a.degree() <= b.degree())
        throw InternalError("partial_euclid requires deg a > deg b");
    if (stop_bound < 0 || stop_bound > a.degree())
        throw InternalError("partial_euclid stop bound out of range");
    Poly r_prev = a, r_cur = b;
    Poly v_prev = Poly::zero(), v_cur = Poly::one();
    if (trace) trace->push_back({r_cur, v_cur});
    while (r_cur.degree() >= stop_bound) {
        auto [q, rem] = poly_divmod(F, r_prev, r_cur);
        Poly v_next = poly_sub(F, v_prev, poly_mul(F, q, v_cur));
        r_prev = std::move(r_cur);
        r_cur = std::move(rem);
        v_prev = std::move(v_cur);
        v_cur = std::move(v_next);
        if (trace) trace->push_back({r_cur, v_cur});
    }
    return {r_cur, v_cur};
}

/// Integer stop bound realizing the strict fractional condition
/// 2*deg r < two_deg_bound without floating point.
inline int halved_degree_bound(int two_deg_bound) { return (two_deg_bound + 1) / 2; }

}  // namespace rscodec
