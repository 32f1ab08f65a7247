#pragma once

#include <string>

namespace h2skein {

inline constexpr const char* kEngineVersion = "1.0.0";

// Global skein conventions. Results are only comparable between runs that
// share all of these; they are printed in every report header and mixed
// into cache keys.
//
// kDeltaLowExponent: the low exponent of the loop value delta = -A^2 - A^kDeltaLowExponent.
// The standard Kauffman value is -2. Building with H2SKEIN_PAPER_PRINTED_DELTA
// switches to -1 so the alternate constant can be exercised by tests.
#ifdef H2SKEIN_PAPER_PRINTED_DELTA
inline constexpr int kDeltaLowExponent = -1;
#else
inline constexpr int kDeltaLowExponent = -2;
#endif

// Signs of the crossing created when a winding is slid off into a parallel
// copy (the hook-slide step of the basis reductions), one per loop family.
// Flipping all of them gives the mirror convention; the relative signs are
// pinned by the relation-invariance suite.
struct SlideSigns {
    int a = +1;
    int b = +1;
    int ab = +1;
};

inline SlideSigns& slide_signs() {
    static SlideSigns s;
    return s;
}

inline std::string conventions_string() {
    std::string d = (kDeltaLowExponent == -2) ? "-A^2-A^-2" : "-A^2-A^-1";
    auto sgn = [](int v) { return v > 0 ? std::string("+1") : std::string("-1"); };
    const SlideSigns& s = slide_signs();
    return "delta=" + d +
           "; smoothing=sigma+:A*id+A^-1*hook"
           "; framing=+kink:-A^3"
           "; slide=a:" + sgn(s.a) + ",b:" + sgn(s.b) + ",ab:" + sgn(s.ab);
}

}  // namespace h2skein
