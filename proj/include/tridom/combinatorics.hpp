#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace tridom {

/// C(n, k) computed exactly in 64 bits; throws std::overflow_error if the
/// value does not fit.
inline std::int64_t binomial(int n, int k) {
    if (k < 0 || n < 0) throw std::invalid_argument("binomial: negative argument");
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (r > static_cast<unsigned __int128>(INT64_MAX))
            throw std::overflow_error("binomial: result exceeds 64 bits");
    }
    return static_cast<std::int64_t>(r);
}

inline std::int64_t choose2(std::int64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }
inline std::int64_t choose3(std::int64_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

/// Colex rank of the sorted triple a < b < c: C(c,3) + C(b,2) + C(a,1).
inline std::int64_t triple_rank(int a, int b, int c) {
    if (a < 0 || !(a < b && b < c))
        throw std::invalid_argument("triple_rank: triple must satisfy 0 <= a < b < c");
    return choose3(c) + choose2(b) + a;
}

/// Inverse of triple_rank for an n-vertex universe.
inline std::array<int, 3> triple_unrank(std::int64_t rank, int n) {
    if (rank < 0 || rank >= choose3(n))
        throw std::out_of_range("triple_unrank: rank out of range");
    int c = 2;
    while (choose3(c + 1) <= rank) ++c;
    rank -= choose3(c);
    int b = 1;
    while (choose2(b + 1) <= rank) ++b;
    int a = static_cast<int>(rank - choose2(b));
    return {a, b, c};
}

/// Advances a sorted k-subset of {0..n-1} to its colex successor.
/// Returns false (and leaves the set at {n-k..n-1}) when none remains.
inline bool next_colex_subset(std::vector<int>& s, int n) {
    const int k = static_cast<int>(s.size());
    for (int i = 0; i < k; ++i) {
        const int limit = (i + 1 < k) ? s[i + 1] : n;
        if (s[i] + 1 < limit) {
            ++s[i];
            for (int j = 0; j < i; ++j) s[j] = j;
            return true;
        }
    }
    return false;
}

/// First k-subset in colex order: {0, 1, ..., k-1}.
inline std::vector<int> first_colex_subset(int k) {
    std::vector<int> s(k);
    for (int i = 0; i < k; ++i) s[i] = i;
    return s;
}

/// Colex rank of a sorted k-subset: sum of C(s[i], i+1).
inline std::int64_t subset_colex_rank(const std::vector<int>& s) {
    std::int64_t r = 0;
    for (std::size_t i = 0; i < s.size(); ++i) r += binomial(s[i], static_cast<int>(i) + 1);
    return r;
}

/// Sorted k-subset of {0..n-1} with the given colex rank.
inline std::vector<int> subset_colex_unrank(std::int64_t rank, int k, int n) {
    if (rank < 0 || rank >= binomial(n, k))
        throw std::out_of_range("subset_colex_unrank: rank out of range");
    std::vector<int> s(k);
    for (int i = k; i >= 1; --i) {
        int c = i - 1;
        while (binomial(c + 1, i) <= rank) ++c;
        s[i - 1] = c;
        rank -= binomial(c, i);
    }
    return s;
}

}  // namespace tridom
