// Bigraded dimension tables of the two filtrations. Level k is the
// perversity on the Dolbeault side and the half-weight (weight 2k) on the
// Betti side; degree j is the cohomological degree.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace pw {

enum class Side { dolbeault, betti };

std::string to_string(Side s);

struct BigradedTable {
    int g = 0;
    int r = 0;
    Side side = Side::dolbeault;
    // (level k, degree j) -> dimension of the graded piece; zero entries
    // are never stored. In this model every nonzero entry sits on k = j.
    std::map<std::pair<int, int>, long long> dims;

    long long dim(int k, int j) const
    {
        auto it = dims.find({k, j});
        return it == dims.end() ? 0 : it->second;
    }

    void set(int k, int j, long long d)
    {
        if (d != 0)
            dims[{k, j}] = d;
    }

    long long total() const
    {
        long long s = 0;
        for (const auto& [kj, d] : dims)
            s += d;
        return s;
    }

    // dim H^j = sum over levels in degree j.
    long long degree_dim(int j) const
    {
        long long s = 0;
        for (const auto& [kj, d] : dims)
            if (kj.second == j)
                s += d;
        return s;
    }

    // dim of the filtration step: P_k H^j resp. W_{2k} H^j.
    long long filtration_dim(int k, int j) const
    {
        long long s = 0;
        for (const auto& [kj, d] : dims)
            if (kj.second == j && kj.first <= k)
                s += d;
        return s;
    }

    friend bool operator==(const BigradedTable& a, const BigradedTable& b)
    {
        return a.g == b.g && a.r == b.r && a.dims == b.dims;
    }

    std::string to_text() const;
    std::string to_csv() const; // columns g,r,side,k,j,dim
};

struct TableMismatch {
    int k = 0, j = 0;
    long long lhs = 0, rhs = 0;
};

// First entry (in (k, j) order) where two tables disagree.
std::optional<TableMismatch> first_mismatch(const BigradedTable& a, const BigradedTable& b);

} // namespace pw
