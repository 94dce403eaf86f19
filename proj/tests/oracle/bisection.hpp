#pragma once

// Plain sign-change bisection on [lo, hi]; independent of the Sturm machinery
// it is used to check.

#include "bouillabaisse/polynomial.hpp"
#include "bouillabaisse/real_roots.hpp"

namespace oracle {

inline bouillabaisse::Interval bisect(const bouillabaisse::Polynomial& p, bouillabaisse::Rational lo,
                                      bouillabaisse::Rational hi, const bouillabaisse::Rational& width) {
    const int s_lo = sgn(p(lo));
    while (hi - lo > width) {
        bouillabaisse::Rational mid = (lo + hi) / 2;
        const int s = sgn(p(mid));
        if (s == 0) return {mid, mid};
        if (s == s_lo) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return {lo, hi};
}

}  // namespace oracle
