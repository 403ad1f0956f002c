#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "rscodec/code.hpp"
#include "rscodec/rng.hpp"

namespace rscodec {

// Error-pattern generation and enumeration shared by the corrupt command,
// the differential tester, and the acceptance sweeps.

enum class PositionFilter { any, message, parity };

inline const char* to_string(PositionFilter f) {
    switch (f) {
        case PositionFilter::any: return "any";
        case PositionFilter::message: return "message";
        case PositionFilter::parity: return "parity";
    }
    return "?";
}

/// Candidate error positions in ascending order. message = [d-1, n-1],
/// parity = [0, d-2], regardless of coding method.
inline std::vector<unsigned> allowed_positions(const CodeParams& C, PositionFilter f) {
    std::vector<unsigned> out;
    unsigned lo = f == PositionFilter::message ? C.d - 1 : 0;
    unsigned hi = f == PositionFilter::parity ? C.d - 2 : C.n - 1;
    for (unsigned i = lo; i <= hi; ++i) out.push_back(i);
    return out;
}

/// Draws `weight` distinct positions and nonzero values. Consumption order,
/// fixed for reproducibility: per error, one draw below(|remaining|) picks
/// into the ascending remaining-candidates list, then one draw 1 +
/// below(q-1) picks the value. Entries are returned sorted by position.
inline ErrorPattern random_pattern(const CodeParams& C, SplitMix64& rng, unsigned weight,
                                   PositionFilter filter = PositionFilter::any) {
    std::vector<unsigned> candidates = allowed_positions(C, filter);
    if (weight > candidates.size())
        throw BadCodeParamsError("cannot place " + std::to_string(weight) +
                                 " distinct errors in " + std::to_string(candidates.size()) +
                                 " allowed positions");
    ErrorPattern pat;
    for (unsigned t = 0; t < weight; ++t) {
        std::size_t idx = static_cast<std::size_t>(rng.below(candidates.size()));
        unsigned pos = candidates[idx];
        candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(idx));
        elem value = static_cast<elem>(1 + rng.below(C.field.q() - 1));
        pat.entries.push_back({pos, value});
    }
    std::sort(pat.entries.begin(), pat.entries.end(),
              [](const ErrorEntry& a, const ErrorEntry& b) { return a.pos < b.pos; });
    return pat;
}

inline Message random_message(const CodeParams& C, SplitMix64& rng) {
    Message msg(C.k);
    for (auto& s : msg) s = static_cast<elem>(rng.below(C.field.q()));
    return msg;
}

/// Visits every pattern of weight 0..max_weight over the allowed positions
/// (all position combinations x all nonzero value assignments). fn returns
/// false to abort; the function returns false iff aborted.
template <typename Fn>
bool for_each_pattern(const CodeParams& C, unsigned max_weight, PositionFilter filter, Fn&& fn) {
    const std::vector<unsigned> positions = allowed_positions(C, filter);
    const unsigned q = C.field.q();
    for (unsigned w = 0; w <= max_weight && w <= positions.size(); ++w) {
        std::vector<std::size_t> comb(w);
        for (unsigned i = 0; i < w; ++i) comb[i] = i;
        while (true) {
            std::vector<elem> values(w, 1);
            while (true) {
                ErrorPattern pat;
                for (unsigned i = 0; i < w; ++i) pat.entries.push_back({positions[comb[i]], values[i]});
                if (!fn(static_cast<const ErrorPattern&>(pat))) return false;
                unsigned i = 0;
                for (; i < w; ++i) {
                    if (values[i] + 1u < q) {
                        ++values[i];
                        break;
                    }
                    values[i] = 1;
                }
                if (i == w) break;
            }
            if (w == 0) break;
            int j = static_cast<int>(w) - 1;
            while (j >= 0 && comb[static_cast<std::size_t>(j)] ==
                                 positions.size() - w + static_cast<std::size_t>(j))
                --j;
            if (j < 0) break;
            ++comb[static_cast<std::size_t>(j)];
            for (auto i = static_cast<std::size_t>(j) + 1; i < w; ++i) comb[i] = comb[i - 1] + 1;
        }
    }
    return true;
}

/// Visits all q^k messages in odometer order (first symbol fastest).
template <typename Fn>
bool for_each_message(const CodeParams& C, Fn&& fn) {
    Message msg(C.k, 0);
    const unsigned q = C.field.q();
    while (true) {
        if (!fn(static_cast<const Message&>(msg))) return false;
        unsigned i = 0;
        for (; i < C.k; ++i) {
            if (msg[i] + 1u < q) {
                ++msg[i];
                break;
            }
            msg[i] = 0;
        }
        if (i == C.k) return true;
    }
}

namespace detail {
inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
        return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}
inline std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    if (b > std::numeric_limits<std::uint64_t>::max() - a)
        return std::numeric_limits<std::uint64_t>::max();
    return a + b;
}
}  // namespace detail

/// Number of patterns of weight 0..max_weight over `positions` slots with
/// q-1 value choices each; saturates instead of overflowing.
inline std::uint64_t count_patterns(std::uint64_t positions, unsigned max_weight, unsigned q) {
    std::uint64_t total = 0;
    for (unsigned w = 0; w <= max_weight && w <= positions; ++w) {
        std::uint64_t binom = 1;
        for (unsigned i = 0; i < w; ++i)
            binom = detail::sat_mul(binom, positions - i) / (i + 1);
        std::uint64_t term = binom;
        for (unsigned i = 0; i < w; ++i) term = detail::sat_mul(term, q - 1);
        total = detail::sat_add(total, term);
    }
    return total;
}

inline std::uint64_t count_messages(unsigned q, unsigned k) {
    std::uint64_t total = 1;
    for (unsigned i = 0; i < k; ++i) total = detail::sat_mul(total, q);
    return total;
}

}  // namespace rscodec
