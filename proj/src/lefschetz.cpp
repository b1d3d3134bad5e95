#include "pw/lefschetz.hpp"

namespace pw {

InvariantClass hyperplane_class(int g, int r)
{
    return hyperplane_class_weighted(g, r, std::vector<long>(g, 1));
}

InvariantClass hyperplane_class_weighted(int g, int r, const std::vector<long>& weights)
{
    if (g < 1 || r < 1)
        throw std::invalid_argument("require g >= 1 and r >= 1");
    if (static_cast<int>(weights.size()) != g)
        throw std::invalid_argument("need one weight per symplectic pair");
    InvariantClass L(g, r);
    for (int i = 1; i <= g; ++i) {
        if (weights[i - 1] <= 0)
            throw std::invalid_argument("hyperplane weights must be positive");
        // representative (1, ..., 1, e_i ^ e_{g+i}); its orbit sum is the
        // sum over slots, which is exactly one symmetrized summand of L.
        std::vector<std::uint32_t> rep(r, 0u);
        rep.back() = (1u << (i - 1)) | (1u << (g + i - 1));
        L.add(rep, weights[i - 1]);
    }
    return L;
}

LefschetzOperator make_lefschetz_operator(int g, int r, const InvariantClass& L,
                                          const ResourceGuard& guard)
{
    guard.check_word_bits(g, r);
    if (L.g() != g || L.r() != r)
        throw std::invalid_argument("hyperplane class has the wrong shape (g, r)");
    for (const auto& [key, c] : L.terms()) {
        int degree = 0;
        for (auto bits : key)
            degree += std::popcount(bits);
        if (degree != 2)
            throw std::invalid_argument("hyperplane class must be homogeneous of degree 2");
    }
    LefschetzOperator op;
    op.g = g;
    op.r = r;
    op.L = L;

    const int top = 2 * g * r;
    op.basis_by_degree.resize(top + 1);
    for (int j = 0; j <= top; ++j)
        op.basis_by_degree[j] = invariant_basis(g, r, j, guard);

    const WordClass L_words = expand(L, guard);

    for (int j = 0; j + 2 <= top; ++j) {
        const auto& source = op.basis_by_degree[j];
        const auto& target = op.basis_by_degree[j + 2];
        if (source.empty() || target.empty())
            continue;

        std::map<InvariantClass::Key, Eigen::Index, detail::MaskTupleLess> row_of;
        for (std::size_t i = 0; i < target.size(); ++i) {
            InvariantClass::Key key(target[i].representative.size());
            for (std::size_t f = 0; f < key.size(); ++f)
                key[f] = target[i].representative[f].bits;
            row_of.emplace(std::move(key), static_cast<Eigen::Index>(i));
        }

        RationalMatrix m(target.size(), source.size());
        m.setZero();
        for (std::size_t col = 0; col < source.size(); ++col) {
            InvariantClass b(g, r);
            b.add(source[col], 1);
            const InvariantClass image =
                project_to_invariant(product_words(L_words, expand(b, guard)));
            for (const auto& [key, c] : image.terms()) {
                auto it = row_of.find(key);
                if (it == row_of.end())
                    throw std::logic_error("cup image leaves the graded basis");
                m(it->second, static_cast<Eigen::Index>(col)) = c;
            }
        }
        op.steps.emplace(j, std::move(m));
    }
    return op;
}

RationalMatrix LefschetzOperator::power_matrix(int j, int k) const
{
    if (k < 1)
        throw std::invalid_argument("power_matrix needs k >= 1");
    const auto dim_at = [&](int d) -> Eigen::Index {
        if (d < 0 || d >= static_cast<int>(basis_by_degree.size()))
            return 0;
        return static_cast<Eigen::Index>(basis_by_degree[d].size());
    };

    auto step_or_zero = [&](int d) -> RationalMatrix {
        auto it = steps.find(d);
        if (it != steps.end())
            return it->second;
        RationalMatrix z(dim_at(d + 2), dim_at(d));
        z.setZero();
        return z;
    };

    RationalMatrix m = step_or_zero(j);
    for (int s = 1; s < k; ++s)
        m = (step_or_zero(j + 2 * s) * m).eval();
    return m;
}

HardLefschetzReport verify_hard_lefschetz(int g, int r, const ResourceGuard& guard,
                                          bool debug_perturb)
{
    return verify_hard_lefschetz(g, r, hyperplane_class(g, r), guard, debug_perturb);
}

HardLefschetzReport verify_hard_lefschetz(int g, int r, const InvariantClass& L,
                                          const ResourceGuard& guard, bool debug_perturb)
{
    HardLefschetzReport report;
    report.g = g;
    report.r = r;
    report.pass = true;

    const LefschetzOperator op = make_lefschetz_operator(g, r, L, guard);
    const int middle = g * r;
    for (int k = 1; k <= middle; ++k) {
        HardLefschetzLevel level;
        level.k = k;
        level.source_dim = static_cast<long long>(op.basis_by_degree[middle - k].size());
        level.target_dim = static_cast<long long>(op.basis_by_degree[middle + k].size());

        RationalMatrix m = op.power_matrix(middle - k, k);
        if (debug_perturb && m.cols() > 0)
            m.col(0).setZero();
        level.rank = static_cast<long long>(rank_exact(m));
        level.pass = level.rank == level.source_dim && level.rank == level.target_dim;
        report.pass = report.pass && level.pass;
        report.levels.push_back(level);
    }
    return report;
}

} // namespace pw
