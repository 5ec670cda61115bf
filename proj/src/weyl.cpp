#include "schur/weyl.hpp"

#include <algorithm>
#include <stdexcept>

namespace schur {

WeylWord inverse(const WeylWord& w) {
    WeylWord out;
    out.letters.assign(w.letters.rbegin(), w.letters.rend());
    return out;
}

WeylWord concat(const WeylWord& a, const WeylWord& b) {
    WeylWord out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
}

Root act(const RootSystem& sys, const WeylWord& w, Root alpha) {
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        alpha = sys.reflect(*it, alpha);
    return alpha;
}

std::vector<Root> inversion_set(const RootSystem& sys, const WeylWord& w) {
    WeylWord winv = inverse(w);
    std::vector<Root> out;
    for (const Root& alpha : sys.positive_roots())
        if (!act(sys, winv, alpha).is_positive()) out.push_back(alpha);
    return out;
}

namespace {

// First pair (x, y) in phi with x + y a root outside phi, if any.
std::optional<std::pair<Root, Root>> closure_violation(const RootSystem& sys,
                                                       const std::vector<Root>& phi) {
    std::unordered_map<std::vector<int>, bool, IntVecHash> in;
    for (const Root& r : phi) in.emplace(r.coeffs, true);
    for (const Root& x : phi)
        for (const Root& y : phi) {
            auto s = sys.add_roots(x, y);
            if (s && !in.count(s->coeffs)) return std::make_pair(x, y);
        }
    return std::nullopt;
}

} // namespace

WeylWord word_from_inversions(const RootSystem& sys, const std::vector<Root>& phi) {
    for (const Root& r : phi)
        if (!sys.is_positive_root(r))
            throw std::invalid_argument("inversion set contains a non-root: " + to_string(r));

    if (auto bad = closure_violation(sys, phi))
        throw std::invalid_argument("not an inversion set: " + to_string(bad->first) + " + " +
                                    to_string(bad->second) + " is a root outside the set");
    std::vector<Root> complement;
    {
        std::unordered_map<std::vector<int>, bool, IntVecHash> in;
        for (const Root& r : phi) in.emplace(r.coeffs, true);
        for (const Root& r : sys.positive_roots())
            if (!in.count(r.coeffs)) complement.push_back(r);
    }
    if (auto bad = closure_violation(sys, complement))
        throw std::invalid_argument("not an inversion set: complement violates closure at " +
                                    to_string(bad->first) + " + " + to_string(bad->second));

    // Peel: w = r_j w' with Δ(w') = r_j(Δ(w) \ {α_j}).
    WeylWord out;
    std::vector<Root> cur = phi;
    while (!cur.empty()) {
        int pick = -1;
        for (int j = 1; j <= sys.rank() && pick < 0; ++j) {
            Root aj = sys.simple_root(j);
            if (std::find(cur.begin(), cur.end(), aj) != cur.end()) pick = j;
        }
        if (pick < 0)
            throw std::logic_error("inversion-set peeling found no simple root");
        Root aj = sys.simple_root(pick);
        std::vector<Root> next;
        next.reserve(cur.size() - 1);
        for (const Root& r : cur)
            if (r != aj) next.push_back(sys.reflect(pick, r));
        out.letters.push_back(pick);
        cur = std::move(next);
    }
    return out;
}

WeylWord longest_element(const RootSystem& sys, const std::vector<int>& support) {
    if (support.empty()) throw std::invalid_argument("longest_element: empty support");
    std::vector<bool> in(static_cast<std::size_t>(sys.rank()) + 1, false);
    for (int j : support) {
        if (j < 1 || j > sys.rank())
            throw std::invalid_argument("longest_element: node out of range");
        in[static_cast<std::size_t>(j)] = true;
    }
    std::vector<Root> phi;
    for (const Root& r : sys.positive_roots()) {
        bool ok = true;
        for (int j = 1; j <= sys.rank() && ok; ++j)
            if (r.coeff(j) != 0 && !in[static_cast<std::size_t>(j)]) ok = false;
        if (ok) phi.push_back(r);
    }
    return word_from_inversions(sys, phi);
}

WeylWord reflection_word(const RootSystem& sys, const Root& alpha) {
    if (!sys.is_positive_root(alpha))
        throw std::invalid_argument("reflection_word expects a positive root");
    if (alpha.height() == 1) {
        WeylWord w;
        for (int j = 1; j <= sys.rank(); ++j)
            if (alpha.coeff(j) == 1) w.letters.push_back(j);
        return w;
    }
    for (int j = 1; j <= sys.rank(); ++j) {
        if (sys.pairing(alpha, j) > 0) {
            Root beta = sys.reflect(j, alpha);
            if (beta == alpha) continue;
            WeylWord inner = reflection_word(sys, beta);
            WeylWord out;
            out.letters.push_back(j);
            out.letters.insert(out.letters.end(), inner.letters.begin(), inner.letters.end());
            out.letters.push_back(j);
            return out;
        }
    }
    throw std::logic_error("reflection_word: no descent found");
}

} // namespace schur
