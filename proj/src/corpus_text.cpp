#include "equiloc/ideals.hpp"

namespace equiloc {

// byte-identical to data/ideal_corpus.txt; generator order mirrors the
// source displays, so the canonical printer may reorder terms on round-trip

const std::string& embedded_corpus_text() {
    static const std::string text = R"corpus(# chart relations, curve ideals and filtration classes
chart V12
relation 5*a2 + 3*a7
relation a3 + 9*a8
relation 2*a2*a5 - 2*a1*a6 + 1/5*a4
relation 10*a1 - a11
relation 5*a2 - 9*a12
relation 6*a2*a9 - 6*a1*a10 - a3
relation a5 + a10
relation 5*a6 + a11
relation 2*a6*a9 - 2*a5*a10 - 1/3*a7 - 1/5*a12
ideal D1
gen a1
gen a2
gen a3
gen a4
gen a5
gen a6
gen a7
gen a8
gen a10
gen a11
gen a12
ideal D2
gen a1
gen a2
gen a3
gen a4
gen a6
gen a7
gen a8
gen a11
gen a12
gen 6*a5 + a10
gen a10^2
ideal D3
gen a2
gen a3
gen a4
gen a7
gen a8
gen a12
gen 5*a6 + a11
gen 6*a5 + a10
gen 10*a1 - a11
gen a11^2
gen a10*a11
gen 5*a10^2 - 6*a9*a11
ideal D4
gen a3
gen a4
gen a8
gen a7 + 3*a12
gen 5*a6 + a11
gen 6*a5 + a10
gen 5*a2 - 9*a12
gen 10*a1 - a11
gen a10*a12
gen a11^2
gen a10*a11 - 18*a9*a12
gen 5*a10^2 - 6*a9*a11 + 12*a12
chart V10
relation -b2 - 3/5*b7
relation b2*b5 - b1*b6 - 1/5*b3 - 9/5*b8
relation -b3*b5 + b1*b7 + 3/5*b4
relation -6*b1 - 3/5*b11
relation b2*b9 - b1*b10 - 9/5*b12
relation -b3*b9 + b1*b11 + 6*b2
relation -6*b5 + b10
relation b6*b9 - b5*b10 + 1/5*b11
relation -b7*b9 + b5*b11 + 6*b6 - 3/5*b12
ideal Q
gen b1
gen b2
gen b4
gen b5
gen b6
gen b7
gen b3 + 9*b8
gen b9
gen b10
gen b11
gen b12
ideal LuQ
gen b1
gen b2
gen b4
gen b5
gen b6
gen b7
gen b10
gen b11
gen b12
gen b3 + 9*b8
gen b8*b9
ideal C
gen b12
gen b11
gen b7
gen b6
gen 6*b5 - b10
gen b4
gen b3 + 9*b8
gen b2
gen b1
gen b10^2
gen b8*b10
gen b8*b9
quotient D2 D1 class a5
quotient D3 D2 class a1
quotient D4 D3 class a12
quotient LuQ Q class b9
quotient C LuQ class b5
)corpus";
    return text;
}

}  // namespace equiloc
