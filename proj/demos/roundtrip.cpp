// Minimal library walkthrough: build an RS(7,3,5) code over GF(8), encode a
// message both ways, inject two errors, and decode with all three
// algorithms.
#include <iostream>

#include "rscodec/gao.hpp"
#include "rscodec/gs.hpp"
#include "rscodec/io.hpp"
#include "rscodec/wb.hpp"

using namespace rscodec;

static void show(const char* label, const Word& w) {
    std::cout << label << ":";
    for (elem s : w) std::cout << ' ' << s;
    std::cout << '\n';
}

int main() {
    Field gf8(2, 3, {1, 1, 0, 1});  // x^3 + x + 1
    CodeParams spectral = make_code(gf8, 3, 1, Method::spectral);
    CodeParams systematic = make_code(gf8, 3, 1, Method::remainder);

    Message msg = {1, 5, 2};
    Word cw_spec = encode_spectral(spectral, msg);
    Word cw_sys = encode_systematic(systematic, msg);
    show("spectral codeword  ", cw_spec);
    show("systematic codeword", cw_sys);

    ErrorPattern pattern{{{4, 3}, {6, 1}}};  // two message-part errors

    Word r_spec = apply_errors(spectral, cw_spec, pattern);
    DecodeResult gao = decode_gao(spectral, r_spec);
    DecodeResult gs = decode_gs(spectral, r_spec, 2);
    std::cout << "gao recovered message:";
    for (elem s : gao.value().message) std::cout << ' ' << s;
    std::cout << "  (locator " << poly_to_text(gao.value().error_locator) << ")\n";
    std::cout << "gs agrees: " << (gs.value().message == gao.value().message ? "yes" : "no")
              << '\n';

    Word r_sys = apply_errors(systematic, cw_sys, pattern);
    DecodeResult wb = decode_wb(systematic, r_sys);
    std::cout << "wb recovered message:";
    for (elem s : wb.value().message) std::cout << ' ' << s;
    std::cout << "  (message locator " << poly_to_text(wb.value().error_locator) << ")\n";
    return 0;
}
