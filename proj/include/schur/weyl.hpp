#pragma once

#include "schur/roots.hpp"

namespace schur {

/// Weyl group element as a word in simple reflections.  The word
/// (j1, ..., jm) acts as r_{j1} ∘ ... ∘ r_{jm}: the rightmost letter is
/// applied first.
struct WeylWord {
    std::vector<int> letters;

    std::size_t length() const { return letters.size(); }
    bool empty() const { return letters.empty(); }
};

WeylWord inverse(const WeylWord& w);
WeylWord concat(const WeylWord& a, const WeylWord& b);

Root act(const RootSystem& sys, const WeylWord& w, Root alpha);

/// Δ(w) = wΔ⁻ ∩ Δ⁺ = {α ∈ Δ⁺ : w⁻¹(α) ∈ Δ⁻}.
std::vector<Root> inversion_set(const RootSystem& sys, const WeylWord& w);

/// Inverse of inversion_set: a reduced word w with Δ(w) = Φ, built by
/// greedily peeling simple roots off Φ.  Throws std::invalid_argument,
/// naming a witness pair, when Φ or its complement is not closed.
WeylWord word_from_inversions(const RootSystem& sys, const std::vector<Root>& phi);

/// Longest element of the parabolic subgroup generated by the simple
/// reflections in `support`: its inversion set is every positive root
/// supported on the given nodes.
WeylWord longest_element(const RootSystem& sys, const std::vector<int>& support);

/// Word for the (not necessarily simple) reflection r_alpha, alpha ∈ Δ⁺.
WeylWord reflection_word(const RootSystem& sys, const Root& alpha);

} // namespace schur
