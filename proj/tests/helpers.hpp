#pragma once

#include "rscodec/code.hpp"

namespace rstest {

using namespace rscodec;

inline Field gf7() { return Field(7, 3); }
inline Field gf8() { return Field(2, 3, {1, 1, 0, 1}); }             // x^3 + x + 1
inline Field gf9() { return Field(3, 2, {2, 1, 1}); }                // x^2 + x + 2
inline Field gf16() { return Field(2, 4, {1, 1, 0, 0, 1}); }         // x^4 + x + 1
inline Field gf64() { return Field(2, 6, {1, 1, 0, 0, 0, 0, 1}); }   // x^6 + x + 1
inline Field gf256() { return Field(2, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1}); }  // x^8+x^4+x^3+x^2+1
inline Field gf929() { return Field(929, 3); }

// RS(6,2,5) over GF(7), b = 1
inline CodeParams rs_7_6_2(Method m) { return make_code(gf7(), 2, 1, m); }
// RS(7,3,5) over GF(8), b = 1
inline CodeParams rs_8_7_3(Method m) { return make_code(gf8(), 3, 1, m); }

}  // namespace rstest
