// laguerre.hpp — Generalized Laguerre polynomials L_n^{(s)}(x)

#pragma once

#include <stdexcept>

namespace optomech {

/// Stable three-term recurrence
/// L_k^{(s)}(x) = ((2k−1+s−x) L_{k−1}^{(s)}(x) − (k−1+s) L_{k−2}^{(s)}(x)) / k.
inline double laguerre(int n, int s, double x) {
    if (n < 0 || s < 0) throw std::invalid_argument("laguerre: n and s must be >= 0");
    if (n == 0) return 1.0;
    double prev = 1.0;                        // L_0
    double curr = 1.0 + s - x;                // L_1
    for (int k = 2; k <= n; ++k) {
        const double next = ((2.0 * k - 1.0 + s - x) * curr - (k - 1.0 + s) * prev) / k;
        prev = curr;
        curr = next;
    }
    return curr;
}

} // namespace optomech
