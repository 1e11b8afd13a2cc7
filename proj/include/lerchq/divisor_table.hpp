#ifndef LERCHQ_DIVISOR_TABLE_HPP
#define LERCHQ_DIVISOR_TABLE_HPP

#include <cstdint>
#include <vector>

namespace lerchq {

/* Divisor lists for 1..limit, built once by a sieve in O(N log N)
 * divisor-pair writes and shared read-only afterwards. */
class DivisorTable {
public:
    explicit DivisorTable(long limit);

    long limit() const { return limit_; }
    // sorted ascending positive divisors of n, 1 <= n <= limit
    const std::vector<long>& divisors(long n) const;

private:
    long limit_;
    std::vector<std::vector<long>> divs_;
};

} // namespace lerchq

#endif
