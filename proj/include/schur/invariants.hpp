#pragma once

#include "schur/space.hpp"

namespace schur {

struct Bigrade {
    int k = 0;   // Z_i grade
    int ell = 0; // Z_w grade
    bool operator==(const Bigrade& o) const { return k == o.k && ell == o.ell; }
};

/// (α(Z_i), α(Z_w)) with Z_w = Σ_{j∈J} Z_j.
Bigrade bigrade(const CominusculeSpace& X, const std::vector<int>& J, const Root& alpha);

int zw_grade(const std::vector<int>& J, const Root& alpha);

/// (a(w), J(w)).  J is read off the stabilizer of n_w: the nodes j ≠ i for
/// which some μ ∈ Δ(w) has μ + α_j ∈ Δ(g1) \ Δ(w).  a is the largest
/// Z_w-grade inside the ideal.  The reconstruction
/// Δ(w) = {α ∈ Δ(g1) : α(Z_w) ≤ a} is asserted before returning.
/// Rejects the extremal classes w ∈ {1, w0}.
AJInvariant compute_aj(const CominusculeSpace& X, const SchubertClass& w);

enum class WeightSide { highest, lowest };

/// Roots of the bigraded slice Δ(g_{k,ℓ}).
std::vector<Root> grade_slice(const CominusculeSpace& X, const std::vector<int>& J, int k, int ell);

/// g_{0,0}-extremal weights of a slice: highest means γ + β is never a
/// root for β a simple root of g_{0,0} (node outside J ∪ {i}); lowest is
/// the mirror with subtraction.
std::vector<Root> extremal_weights(const CominusculeSpace& X, const std::vector<int>& J, int k,
                                   int ell, WeightSide side);

/// The Schubert variety X_w is smooth exactly when a(w) = 0; the two
/// extremal classes are smooth.
bool is_smooth(const ClassInfo& info);

} // namespace schur
