#include "lerchq/divisor_table.hpp"

#include "lerchq/errors.hpp"

namespace lerchq {

DivisorTable::DivisorTable(long limit) : limit_(limit)
{
    if (limit < 1) throw Error("DivisorTable: limit must be positive");
    divs_.resize(static_cast<size_t>(limit) + 1);
    for (long d = 1; d <= limit; ++d)
        for (long m = d; m <= limit; m += d)
            divs_[static_cast<size_t>(m)].push_back(d);
}

const std::vector<long>& DivisorTable::divisors(long n) const
{
    if (n < 1 || n > limit_) throw Error("DivisorTable: n out of range");
    return divs_[static_cast<size_t>(n)];
}

} // namespace lerchq
