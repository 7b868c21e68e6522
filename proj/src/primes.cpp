#include "vdw/primes.hpp"

#include "vdw/types.hpp"

namespace vdw {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (std::int64_t d = 5; d * d <= n; d += 6)
        if (n % d == 0 || n % (d + 2) == 0) return false;
    return true;
}

int largest_prime_leq(int k) {
    if (k < 2)
        throw DomainError("largest_prime_leq: k must be >= 2, got " + std::to_string(k));
    int p = k;
    while (!is_prime(p)) --p;  // terminates at 2
    return p;
}

std::vector<int> primes_up_to(int n) {
    std::vector<int> out;
    if (n < 2) return out;
    std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
    for (int i = 2; i <= n; ++i) {
        if (composite[static_cast<std::size_t>(i)]) continue;
        out.push_back(i);
        for (std::int64_t j = static_cast<std::int64_t>(i) * i; j <= n; j += i)
            composite[static_cast<std::size_t>(j)] = true;
    }
    return out;
}

}  // namespace vdw
