#pragma once

#include <vector>

namespace specht {

// All r-subsets of {1..n} in ascending lexicographic order.
inline std::vector<std::vector<int>> subsets(int n, int r)
{
    std::vector<std::vector<int>> out;
    if (r < 0 || r > n)
        return out;
    std::vector<int> cur(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i)
        cur[static_cast<size_t>(i)] = i + 1;
    while (true) {
        out.push_back(cur);
        int t = r - 1;
        while (t >= 0 && cur[static_cast<size_t>(t)] == n - r + t + 1)
            --t;
        if (t < 0)
            break;
        ++cur[static_cast<size_t>(t)];
        for (int u = t + 1; u < r; ++u)
            cur[static_cast<size_t>(u)] = cur[static_cast<size_t>(u - 1)] + 1;
    }
    return out;
}

inline std::vector<int> complement(const std::vector<int>& s, int n)
{
    std::vector<char> in(static_cast<size_t>(n + 1), 0);
    for (int v : s)
        in[static_cast<size_t>(v)] = 1;
    std::vector<int> out;
    out.reserve(static_cast<size_t>(n) - s.size());
    for (int v = 1; v <= n; ++v)
        if (!in[static_cast<size_t>(v)])
            out.push_back(v);
    return out;
}

// All permutations of {1..n} (lexicographic); perm[i] is the image of i+1.
inline std::vector<std::vector<int>> permutations(int n)
{
    std::vector<int> cur(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        cur[static_cast<size_t>(i)] = i + 1;
    std::vector<std::vector<int>> out;
    do {
        out.push_back(cur);
    } while (std::next_permutation(cur.begin(), cur.end()));
    return out;
}

} // namespace specht
