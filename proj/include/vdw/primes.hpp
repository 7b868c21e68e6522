#pragma once

#include <cstdint>
#include <vector>

namespace vdw {

bool is_prime(std::int64_t n);

// Largest prime p with p <= k. Throws DomainError for k < 2.
int largest_prime_leq(int k);

// All primes <= n, ascending.
std::vector<int> primes_up_to(int n);

}  // namespace vdw
