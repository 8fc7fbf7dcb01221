#pragma once

#include <utility>
#include <vector>

namespace cychb {

/// Fraction-free determinant over an integral domain. R needs operator*,
/// operator-, is_zero(), and a static exact_div whose divisions here are
/// exact by the Bareiss identity.
template <class R>
R bareiss_det(std::vector<std::vector<R>> a, const R& one) {
    const std::size_t n = a.size();
    if (n == 0) return one;
    bool negate = false;
    R prev = one;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t i = k + 1;
            while (i < n && a[i][k].is_zero()) ++i;
            if (i == n) return one - one; // zero
            std::swap(a[k], a[i]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = R::exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
        }
        prev = a[k][k];
    }
    return negate ? one - one - a[n - 1][n - 1] : a[n - 1][n - 1];
}

} // namespace cychb
