#include "mzvreg/bell.hpp"

namespace mzvreg {

Integer partition_shape_count(int r, int k, std::span<const int> shape) {
    if (r < 0 || k < 0)
        throw DomainError("partition_shape_count needs r, k >= 0");
    int blocks = 0;
    int size = 0;
    Integer denom = 1;
    for (std::size_t a = 1; a <= shape.size(); ++a) {
        const int count = shape[a - 1];
        if (count < 0)
            throw DomainError("partition shape has a negative count");
        blocks += count;
        size += static_cast<int>(a) * count;
        Integer af = factorial(static_cast<unsigned>(a));
        Integer p;
        mpz_pow_ui(p.get_mpz_t(), af.get_mpz_t(), static_cast<unsigned long>(count));
        denom *= p * factorial(static_cast<unsigned>(count));
    }
    if (blocks != k || size != r)
        throw DomainError("inconsistent partition shape: sum i_a = " + std::to_string(blocks) +
                          ", sum a*i_a = " + std::to_string(size) + " for r=" + std::to_string(r) +
                          " k=" + std::to_string(k));
    return factorial(static_cast<unsigned>(r)) / denom;
}

namespace {
template <class Step>
Integer stirling_triangle(int r, int k, Step step) {
    if (r < 0 || k < 0 || k > r)
        return (r == 0 && k == 0) ? Integer(1) : Integer(0);
    std::vector<Integer> row(static_cast<std::size_t>(r + 1), 0);
    row[0] = 1;
    for (int n = 0; n < r; ++n) {
        for (int j = n + 1; j >= 1; --j)
            row[static_cast<std::size_t>(j)] = step(n, j, row[static_cast<std::size_t>(j)]) + row[static_cast<std::size_t>(j - 1)];
        row[0] = 0;
    }
    return row[static_cast<std::size_t>(k)];
}
}  // namespace

Integer stirling_first_unsigned(int r, int k) {
    // s(n+1, j) = n s(n, j) + s(n, j-1)
    return stirling_triangle(r, k, [](int n, int, const Integer& s) { return Integer(s * n); });
}

Integer stirling_second(int r, int k) {
    // S(n+1, j) = j S(n, j) + S(n, j-1)
    return stirling_triangle(r, k, [](int, int j, const Integer& s) { return Integer(s * j); });
}

Integer bell_number(int n) {
    if (n < 0)
        throw DomainError("bell_number needs n >= 0");
    Integer total = n == 0 ? 1 : 0;
    for (int k = 1; k <= n; ++k)
        total += stirling_second(n, k);
    return total;
}

}  // namespace mzvreg
