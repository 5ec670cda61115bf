#pragma once

#include "schur/invariants.hpp"
#include "schur/space.hpp"

#include <string>
#include <utility>

namespace schur {

/// H1 fails when some g_{0,0}-lowest weight β ∈ Δ(g_{0,1}) and
/// γ ∈ Π(g_{1,a}) satisfy (i) γ − β ∉ Δ and (ii) γ + β ∈ Δ with γ the
/// unique δ ∈ Δ(g_{1,a}) whose bracket with g_β is non-zero.
/// Pairs are returned sorted by (γ, β).
std::vector<std::pair<Root, Root>> h1_witnesses(const CominusculeSpace& X, const SchubertClass& w,
                                                const AJInvariant& aj);

/// H2 fails when some ε ∈ Π(g_{1,a−1}) and γ ∈ Π(g_{1,a}) satisfy
/// (i) ε − γ ∈ Δ and (ii) γ is the unique δ ∈ Δ(g_{1,a}) with ε − δ ∈ Δ.
/// Empty whenever a = 0.  Pairs are returned sorted by (γ, ε).
std::vector<std::pair<Root, Root>> h2_witnesses(const CominusculeSpace& X, const SchubertClass& w,
                                                const AJInvariant& aj);

enum class Execution { serial, parallel };

/// Fill (a, J), witness lists and the rigid/smooth flags for every class.
/// w ∈ {1, w0} are rigid unconditionally.  Per-class evaluation is pure and
/// independent; `parallel` runs classes under OpenMP and produces output
/// identical to the serial reference.
void classify(const CominusculeSpace& X, HassePoset& poset,
              Execution mode = Execution::parallel);

/// One evaluated class, shared by both execution modes.
ClassInfo evaluate_class(const CominusculeSpace& X, const SchubertClass& w, bool extremal);

/// Certificate that a flexible class admits a nontrivial integral: the
/// divisor w' with Δ(w) = Δ(w') ⊔ {γ}, the witness pair, and the root-level
/// checks behind the construction, all of which must pass.
struct FlexCertificate {
    enum class Kind { H1, H2 };
    Kind kind;
    SchubertClass divisor;
    Root gamma;
    Root partner; // β for H1, ε for H2
    std::vector<std::pair<std::string, bool>> proof_checks;
};

/// Rejects rigid classes; throws std::logic_error if any proof check fails
/// (they are forced by the construction, so a failure is a bug).
FlexCertificate flex_certificate(const CominusculeSpace& X, const SchubertClass& w);

std::uint64_t count_rigid(const HassePoset& poset);

} // namespace schur
