#pragma once

#include <string>
#include <vector>

#include "emd/rational.hpp"

namespace emd {

/// Ordered tuple of non-negative integers; a composition of sum() into
/// size() parts, i.e. an unnormalized discrete distribution.
struct Composition {
    std::vector<long long> parts;

    Composition() = default;
    explicit Composition(std::vector<long long> p);
    Composition(std::initializer_list<long long> p);

    int size() const { return static_cast<int>(parts.size()); }
    long long sum() const;

    std::string to_string() const;  // "a,b,c"

    bool operator==(const Composition& o) const = default;
};

/// All compositions of s into n parts, first part descending; the order is
/// deterministic and shared by everything that enumerates vertex sets.
std::vector<Composition> all_compositions(long long s, int n);

/// binomial(s+n-1, n-1)
BigInt count_compositions(long long s, int n);

}  // namespace emd
