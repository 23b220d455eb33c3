#pragma once

#include <span>
#include <string>
#include <vector>

#include "mzvreg/error.hpp"
#include "mzvreg/rational.hpp"
#include "mzvreg/ring.hpp"

namespace mzvreg {

/// Partial exponential Bell polynomial B_{r,k}(x_1, ..., x_{r-k+1}) over any
/// commutative ring, by the recurrence
///   B_{n,j} = sum_i C(n-1, i-1) x_i B_{n-i, j-1},  B_{0,0} = 1.
template <class R>
R bell_partial(int r, int k, std::span<const R> xs) {
    if (k < 1 || k > r)
        throw DomainError("bell_partial needs 1 <= k <= r, got r=" + std::to_string(r) + " k=" + std::to_string(k));
    const int width = r - k + 1;
    if (static_cast<int>(xs.size()) < width)
        throw DomainError("bell_partial needs " + std::to_string(width) + " arguments");
    // table[n][j] for 0 <= j <= k, 0 <= n - j <= width - 1.
    std::vector<std::vector<R>> table(static_cast<std::size_t>(r + 1),
                                      std::vector<R>(static_cast<std::size_t>(k + 1), ring_zero<R>()));
    table[0][0] = ring_one<R>();
    for (int j = 1; j <= k; ++j) {
        for (int n = j; n <= r && n - j < width; ++n) {
            R acc = ring_zero<R>();
            for (int i = 1; i <= n - j + 1; ++i) {
                const R& prev = table[static_cast<std::size_t>(n - i)][static_cast<std::size_t>(j - 1)];
                if (ring_is_zero(prev))
                    continue;
                R term = xs[static_cast<std::size_t>(i - 1)] * prev;
                acc = acc + ring_scale(term, Rational(binomial(static_cast<unsigned>(n - 1), static_cast<unsigned>(i - 1))));
            }
            table[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)] = acc;
        }
    }
    return table[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)];
}

/// Complete exponential Bell polynomial Y_r(x_1, ..., x_r), Y_0 = 1, by
///   Y_{n+1} = sum_i C(n, i) x_{i+1} Y_{n-i}.
template <class R>
R bell_complete(int r, std::span<const R> xs) {
    if (r < 0)
        throw DomainError("bell_complete needs r >= 0");
    if (static_cast<int>(xs.size()) < r)
        throw DomainError("bell_complete needs " + std::to_string(r) + " arguments");
    std::vector<R> y;
    y.reserve(static_cast<std::size_t>(r + 1));
    y.push_back(ring_one<R>());
    for (int n = 0; n < r; ++n) {
        R acc = ring_zero<R>();
        for (int i = 0; i <= n; ++i) {
            R term = xs[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(n - i)];
            acc = acc + ring_scale(term, Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(i))));
        }
        y.push_back(std::move(acc));
    }
    return y.back();
}

/// Number of partitions of {1..r} into k blocks with shape[a-1] blocks of size a:
/// r! / prod_a (a!^{i_a} i_a!).
Integer partition_shape_count(int r, int k, std::span<const int> shape);

/// Unsigned Stirling numbers of the first kind (rising-factorial coefficients).
Integer stirling_first_unsigned(int r, int k);
/// Stirling numbers of the second kind.
Integer stirling_second(int r, int k);
Integer bell_number(int n);

}  // namespace mzvreg
