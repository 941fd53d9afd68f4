#include "propb/exact.hpp"

namespace propb {

BigInt binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

BigInt factorial(std::uint64_t n)
{
    BigInt result = 1;
    for (std::uint64_t i = 2; i <= n; ++i)
        result *= i;
    return result;
}

BigInt bound(std::uint64_t n)
{
    return BigInt(n) * binomial(2 * n - 1, n);
}

} // namespace propb
