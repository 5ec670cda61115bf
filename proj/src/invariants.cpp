#include "schur/invariants.hpp"

#include <algorithm>
#include <stdexcept>

namespace schur {

int zw_grade(const std::vector<int>& J, const Root& alpha) {
    int s = 0;
    for (int j : J) s += alpha.coeff(j);
    return s;
}

Bigrade bigrade(const CominusculeSpace& X, const std::vector<int>& J, const Root& alpha) {
    return Bigrade{alpha.coeff(X.node()), zw_grade(J, alpha)};
}

AJInvariant compute_aj(const CominusculeSpace& X, const SchubertClass& w) {
    if (w.ideal.empty() || w.dim() == X.dim())
        throw std::invalid_argument("compute_aj: w in {1, w0} carries no (a, J)");

    AJInvariant out;
    for (int j = 1; j <= X.sys().rank(); ++j) {
        if (j == X.node()) continue;
        bool fails_to_stabilize = false;
        for (int t : w.ideal) {
            Root up = X.g1()[static_cast<std::size_t>(t)] + X.sys().simple_root(j);
            int u = X.g1_index(up);
            if (u >= 0 && !w.contains(u)) { fails_to_stabilize = true; break; }
        }
        if (fails_to_stabilize) out.J.push_back(j);
    }

    out.a = 0;
    for (int t : w.ideal)
        out.a = std::max(out.a, zw_grade(out.J, X.g1()[static_cast<std::size_t>(t)]));

    for (int t = 0; t < X.dim(); ++t) {
        bool inside = w.contains(t);
        bool low = zw_grade(out.J, X.g1()[static_cast<std::size_t>(t)]) <= out.a;
        if (inside != low)
            throw std::logic_error("(a, J) does not reconstruct the inversion set on " + X.label());
    }
    return out;
}

std::vector<Root> grade_slice(const CominusculeSpace& X, const std::vector<int>& J, int k,
                              int ell) {
    std::vector<Root> out;
    for (const Root& r : X.sys().positive_roots()) {
        Bigrade g{r.coeff(X.node()), zw_grade(J, r)};
        if (g.k == k && g.ell == ell) out.push_back(r);
        Root neg = r.negated();
        Bigrade gn{-g.k, -g.ell};
        if (gn.k == k && gn.ell == ell) out.push_back(neg);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Root> extremal_weights(const CominusculeSpace& X, const std::vector<int>& J, int k,
                                   int ell, WeightSide side) {
    std::vector<int> g00_simple;
    for (int m = 1; m <= X.sys().rank(); ++m)
        if (m != X.node() && std::find(J.begin(), J.end(), m) == J.end())
            g00_simple.push_back(m);

    std::vector<Root> out;
    for (const Root& gamma : grade_slice(X, J, k, ell)) {
        bool extremal = true;
        for (int m : g00_simple) {
            Root step = side == WeightSide::highest ? gamma + X.sys().simple_root(m)
                                                    : gamma - X.sys().simple_root(m);
            if (X.sys().is_root(step)) { extremal = false; break; }
        }
        if (extremal) out.push_back(gamma);
    }
    return out;
}

bool is_smooth(const ClassInfo& info) {
    if (info.extremal) return true;
    return info.aj && info.aj->a == 0;
}

} // namespace schur
