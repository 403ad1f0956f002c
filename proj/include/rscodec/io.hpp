#pragma once

#include <bit>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rscodec/code.hpp"

namespace rscodec {

// Text formats shared with the CLI: polynomials are whitespace-separated
// decimal coefficients, low degree first (zero polynomial = empty line);
// symbol streams are one word per line. The parameter file is a JSON record
// with a fixed key order so repeated runs are byte-identical.

inline std::string poly_to_text(const Poly& f) {
    std::ostringstream os;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i) os << ' ';
        os << f.coeff(i);
    }
    return os.str();
}

inline Poly poly_from_text(const std::string& text, const Field& F) {
    std::istringstream is(text);
    std::vector<elem> coeffs;
    long long v;
    while (is >> v) {
        if (v < 0 || v >= static_cast<long long>(F.q()))
            throw ParseError("coefficient " + std::to_string(v) + " out of range for GF(" +
                             std::to_string(F.q()) + ")");
        coeffs.push_back(static_cast<elem>(v));
    }
    if (!is.eof()) throw ParseError("malformed polynomial text");
    return Poly(std::move(coeffs));
}

inline void write_code_params(std::ostream& os, const CodeParams& C) {
    nlohmann::ordered_json j;
    j["p"] = C.field.p();
    j["m"] = C.field.m();
    j["prim_poly"] = C.field.prim_poly();
    j["alpha"] = C.field.alpha();
    j["n"] = C.n;
    j["k"] = C.k;
    j["d"] = C.d;
    j["b"] = C.b;
    j["method"] = to_string(C.method);
    j["g"] = poly_to_text(C.g);
    os << j.dump(2) << '\n';
}

inline Method method_from_string(const std::string& s) {
    if (s == "spectral") return Method::spectral;
    if (s == "remainder") return Method::remainder;
    throw ParseError("unknown coding method '" + s + "'");
}

inline CodeParams read_code_params(std::istream& is) {
    nlohmann::json j;
    try {
        is >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("parameter file is not valid JSON: ") + e.what());
    }
    try {
        unsigned p = j.at("p").get<unsigned>();
        unsigned m = j.at("m").get<unsigned>();
        std::vector<unsigned> prim = j.value("prim_poly", std::vector<unsigned>{});
        std::optional<elem> alpha;
        if (j.contains("alpha")) {
            auto a = j.at("alpha").get<std::uint32_t>();
            if (a > 0xffff) throw ParseError("alpha out of range");
            alpha = static_cast<elem>(a);
        }
        Field field = make_field(p, m, prim, alpha);
        unsigned k = j.at("k").get<unsigned>();
        unsigned b = j.at("b").get<unsigned>();
        Method method = method_from_string(j.at("method").get<std::string>());
        CodeParams C = make_code(std::move(field), k, b, method);
        // stored derived fields, when present, must agree
        if (j.contains("n") && j.at("n").get<unsigned>() != C.n)
            throw ParseError("stored n disagrees with q-1");
        if (j.contains("d") && j.at("d").get<unsigned>() != C.d)
            throw ParseError("stored d disagrees with n-k+1");
        if (j.contains("g") && poly_from_text(j.at("g").get<std::string>(), C.field) != C.g)
            throw ParseError("stored generator polynomial disagrees with (b, d)");
        return C;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("parameter file: ") + e.what());
    }
}

/// Bytes per symbol in the fixed-width big-endian binary stream format.
inline unsigned symbol_width_bytes(unsigned q) {
    return (std::bit_width(q - 1u) + 7u) / 8u;
}

/// Reads words of `length` symbols, text (one word per line, blank lines
/// skipped) or binary (fixed-width big-endian). Reports the input word/line
/// number on malformed data.
class WordReader {
public:
    WordReader(std::istream& is, std::size_t length, unsigned q, bool binary)
        : is_(is), length_(length), q_(q), binary_(binary), width_(symbol_width_bytes(q)) {}

    std::optional<Word> next() {
        return binary_ ? next_binary() : next_text();
    }

private:
    std::optional<Word> next_text() {
        std::string line;
        while (std::getline(is_, line)) {
            ++line_no_;
            std::istringstream ls(line);
            Word w;
            std::string tok;
            while (ls >> tok) {
                long long v;
                std::size_t used = 0;
                try {
                    v = std::stoll(tok, &used);
                } catch (const std::exception&) {
                    throw ParseError("line " + std::to_string(line_no_) + ": symbol '" + tok +
                                     "' is not an integer");
                }
                if (used != tok.size())
                    throw ParseError("line " + std::to_string(line_no_) + ": symbol '" + tok +
                                     "' is not an integer");
                if (v < 0 || v >= static_cast<long long>(q_))
                    throw ParseError("line " + std::to_string(line_no_) + ": symbol " +
                                     std::to_string(v) + " out of range [0, " + std::to_string(q_) +
                                     ")");
                w.push_back(static_cast<elem>(v));
            }
            if (w.empty()) continue;  // blank line
            if (w.size() != length_)
                throw ParseError("line " + std::to_string(line_no_) + ": expected " +
                                 std::to_string(length_) + " symbols, got " +
                                 std::to_string(w.size()));
            return w;
        }
        return std::nullopt;
    }

    std::optional<Word> next_binary() {
        Word w;
        w.reserve(length_);
        for (std::size_t s = 0; s < length_; ++s) {
            unsigned v = 0;
            for (unsigned b = 0; b < width_; ++b) {
                int ch = is_.get();
                if (ch == std::char_traits<char>::eof()) {
                    if (s == 0 && b == 0) return std::nullopt;
                    throw ParseError("word " + std::to_string(word_no_) +
                                     ": truncated binary input");
                }
                v = (v << 8) | static_cast<unsigned>(ch & 0xff);
            }
            if (v >= q_)
                throw ParseError("word " + std::to_string(word_no_) + ": symbol " +
                                 std::to_string(v) + " out of range");
            w.push_back(static_cast<elem>(v));
        }
        ++word_no_;
        return w;
    }

    std::istream& is_;
    std::size_t length_;
    unsigned q_;
    bool binary_;
    unsigned width_;
    std::size_t line_no_ = 0;
    std::size_t word_no_ = 0;
};

class WordWriter {
public:
    WordWriter(std::ostream& os, unsigned q, bool binary)
        : os_(os), binary_(binary), width_(symbol_width_bytes(q)) {}

    void write(const Word& w) {
        if (binary_) {
            for (elem s : w)
                for (unsigned b = width_; b-- > 0;)
                    os_.put(static_cast<char>((s >> (8 * b)) & 0xff));
        } else {
            for (std::size_t i = 0; i < w.size(); ++i) {
                if (i) os_ << ' ';
                os_ << w[i];
            }
            os_ << '\n';
        }
    }

private:
    std::ostream& os_;
    bool binary_;
    unsigned width_;
};

}  // namespace rscodec
