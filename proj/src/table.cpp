#include "pw/table.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace pw {

std::string to_string(Side s)
{
    return s == Side::dolbeault ? "dolbeault" : "betti";
}

std::string BigradedTable::to_text() const
{
    std::ostringstream os;
    os << "side=" << pw::to_string(side) << " g=" << g << " r=" << r << "\n";
    if (dims.empty()) {
        os << "(empty)\n";
        return os.str();
    }
    std::set<int> levels, degrees;
    for (const auto& [kj, d] : dims) {
        levels.insert(kj.first);
        degrees.insert(kj.second);
    }
    std::size_t width = 3;
    for (const auto& [kj, d] : dims)
        width = std::max(width, std::to_string(d).size() + 1);

    auto pad = [&](const std::string& s) {
        std::string out(width > s.size() ? width - s.size() : 1, ' ');
        return out + s;
    };
    os << pad("k\\j");
    for (int j : degrees)
        os << pad(std::to_string(j));
    os << "\n";
    for (int k : levels) {
        os << pad(std::to_string(k));
        for (int j : degrees) {
            const long long d = dim(k, j);
            os << pad(d == 0 ? "." : std::to_string(d));
        }
        os << "\n";
    }
    return os.str();
}

std::string BigradedTable::to_csv() const
{
    std::ostringstream os;
    os << "g,r,side,k,j,dim\n";
    for (const auto& [kj, d] : dims)
        os << g << "," << r << "," << pw::to_string(side) << "," << kj.first << "," << kj.second
           << "," << d << "\n";
    return os.str();
}

std::optional<TableMismatch> first_mismatch(const BigradedTable& a, const BigradedTable& b)
{
    std::set<std::pair<int, int>> keys;
    for (const auto& [kj, d] : a.dims)
        keys.insert(kj);
    for (const auto& [kj, d] : b.dims)
        keys.insert(kj);
    for (const auto& kj : keys) {
        const long long da = a.dim(kj.first, kj.second);
        const long long db = b.dim(kj.first, kj.second);
        if (da != db)
            return TableMismatch{kj.first, kj.second, da, db};
    }
    return std::nullopt;
}

} // namespace pw
