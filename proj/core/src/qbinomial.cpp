#include "pcgraph/qbinomial.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "pcgraph/errors.hpp"

namespace pcg {

BigUint q_bracket(std::uint64_t n, std::uint64_t q) {
    if (q < 2) throw ParameterRange("q_bracket requires q >= 2, got q=" +
                                    std::to_string(q));
    // Horner form of 1 + q + ... + q^(n-1).
    BigUint r;
    const BigUint base(q);
    for (std::uint64_t i = 0; i < n; ++i) r = r * base + BigUint(1);
    return r;
}

BigUint q_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t q) {
    if (q < 2) throw ParameterRange("q_binomial requires q >= 2, got q=" +
                                    std::to_string(q));
    if (k > n)
        throw ParameterRange("q_binomial requires k <= n, got k=" +
                             std::to_string(k) + ", n=" + std::to_string(n));
    k = std::min(k, n - k);
    if (k == 0) return BigUint(1);

    std::vector<BigUint> qpow(k + 1);
    qpow[0] = BigUint(1);
    for (std::uint64_t j = 1; j <= k; ++j) qpow[j] = qpow[j - 1] * BigUint(q);

    // One Pascal row at a time; c[j] holds [i,j]_q after pass i.
    std::vector<BigUint> c(k + 1);
    c[0] = BigUint(1);
    for (std::uint64_t i = 1; i <= n; ++i) {
        for (std::uint64_t j = std::min(i, k); j >= 1; --j)
            c[j] = c[j - 1] + qpow[j] * c[j];
    }
    return c[k];
}

}  // namespace pcg
