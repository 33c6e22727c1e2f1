#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the engine beyond plain data accessors.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdlib>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Big = boost::multiprecision::cpp_int;

inline std::uint64_t seed() {
    const char* s = std::getenv("TORELLI_CERT_SEED");
    return s ? std::strtoull(s, nullptr, 10) : 20240917ULL;
}

inline std::mt19937_64& rng() {
    static std::mt19937_64 r(seed());
    return r;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

// Bell numbers from the Bell triangle.
inline std::vector<Big> bell_numbers(int up_to) {
    std::vector<Big> out{1};
    std::vector<Big> row{1};
    for (int i = 1; i <= up_to; ++i) {
        std::vector<Big> next{row.back()};
        for (const auto& x : row) next.push_back(next.back() + x);
        out.push_back(next.front());
        row = next;
    }
    return out;
}

// Random set partition of 1..n as a restricted growth string.
inline std::vector<std::vector<int>> random_blocks(int n) {
    std::vector<std::vector<int>> blocks;
    for (int i = 1; i <= n; ++i) {
        int b = uniform(0, static_cast<int>(blocks.size()));
        if (b == static_cast<int>(blocks.size())) blocks.emplace_back();
        blocks[b].push_back(i);
    }
    return blocks;
}

// Random refinement: each block is split by a random partition of itself.
inline std::vector<std::vector<int>> random_refinement(const std::vector<std::vector<int>>& blocks) {
    std::vector<std::vector<int>> out;
    for (const auto& block : blocks) {
        std::vector<std::vector<int>> parts;
        for (int x : block) {
            int b = uniform(0, static_cast<int>(parts.size()));
            if (b == static_cast<int>(parts.size())) parts.emplace_back();
            parts[b].push_back(x);
        }
        out.insert(out.end(), parts.begin(), parts.end());
    }
    return out;
}

// Every block of coarse is a union of blocks of fine.
inline bool refines(const std::vector<std::vector<int>>& fine, const std::vector<std::vector<int>>& coarse) {
    for (const auto& cb : coarse) {
        std::set<int> target(cb.begin(), cb.end()), covered;
        for (const auto& fb : fine) {
            std::set<int> s(fb.begin(), fb.end());
            bool inside = true, meets = false;
            for (int x : s) {
                if (target.count(x)) meets = true;
                else inside = false;
            }
            if (meets && !inside) return false;
            if (meets) covered.insert(s.begin(), s.end());
        }
        if (covered != target) return false;
    }
    return true;
}

// Two-ply breadth-first growth: the B-neighbourhood of the support, then the
// A-neighbourhood of the result.
inline std::set<int> two_ply(const std::set<int>& support, const std::vector<std::vector<int>>& adj,
                             const std::vector<char>& family) {
    std::set<int> s = support;
    for (char fam : {'B', 'A'}) {
        std::set<int> grown = s;
        for (int c : s)
            for (int d = 0; d < static_cast<int>(adj.size()); ++d)
                if (adj[c][d] && family[d] == fam) grown.insert(d);
        s = grown;
    }
    return s;
}

// Dense exact matrix product.
inline std::vector<std::vector<Big>> multiply(const std::vector<std::vector<Big>>& a, const std::vector<std::vector<Big>>& b) {
    const size_t n = a.size(), m = b[0].size(), k = b.size();
    std::vector<std::vector<Big>> c(n, std::vector<Big>(m, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < k; ++t)
            if (a[i][t] != 0)
                for (size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
    return c;
}

}  // namespace oracle
