#pragma once

#include "schur/invariants.hpp"
#include "schur/space.hpp"

#include <optional>
#include <string>

namespace schur {

enum class PartitionFamily { Gr, LG, Spinor };

std::string to_string(PartitionFamily f);

/// Strictly increasing index sequence for a Schubert class of a classical
/// space.  Gr(i, N): length i, entries in [1, N].  LG(n, 2n) and the spinor
/// variety S_n: length n, entries in [1, 2n] with the symmetric-occupancy
/// rule, plus the even-parity rule for S_n.
struct PartitionIndex {
    PartitionFamily family;
    int length; // Gr: i;  LG/Spinor: n
    int bound;  // Gr: N (= rank + 1);  LG/Spinor: 2n
    std::vector<int> parts;

    bool operator==(const PartitionIndex& o) const {
        return family == o.family && length == o.length && bound == o.bound && parts == o.parts;
    }
};

/// Throws std::invalid_argument naming the violated rule.
void validate(const PartitionIndex& p);

bool is_bottom(const PartitionIndex& p);
bool is_top(const PartitionIndex& p);

PartitionIndex bottom_partition(PartitionFamily f, int length, int bound);
PartitionIndex top_partition(PartitionFamily f, int length, int bound);

/// All valid partitions of the given shape (for exhaustive checks and
/// CLI listings).
std::vector<PartitionIndex> all_partitions(PartitionFamily f, int length, int bound);

/// Partition -> (a, J) (block decomposition per family).  Rejects the two
/// extremal partitions, which carry no (a, J).
AJInvariant partition_to_aj(const PartitionIndex& p);

/// (a, J) -> partition (block-by-block reconstruction; the spinor case
/// applies the parity correction swapping the occupancy of n and n+1).
/// Rejects pairs violating the family constraints.
PartitionIndex aj_to_partition(PartitionFamily f, int length, int bound, const AJInvariant& aj);

/// The per-family rigidity criterion evaluated on the partition alone.
/// The two extremal partitions are rigid.
bool rigid_by_partition(const PartitionIndex& p);

/// r(λ) for spinor partitions: ⌊p/2⌋ if λ₁ = 1, else ⌈p/2⌉.
int spinor_r(const PartitionIndex& p);

/// r from (a, J) for D_n/P_n: ⌈(a + [n−1 ∈ J])/2⌉.
int spinor_r(int n, const AJInvariant& aj);

/// Spinor blocks with the modified consecutivity (n−1,n+1 and n,n+2 are
/// consecutive), returned as index ranges [first, last] into parts.
std::vector<std::pair<int, int>> spinor_blocks(const PartitionIndex& p);

enum class QuadricKind { odd, even };
enum class QuadricBranch { none, plus, minus };

/// Schur rigidity of a quadric class addressed by its dimension d.
/// Odd quadric Q^{2m-1}: rigid iff d ∈ {0, 2m−1}.  Even quadric Q^{2m}:
/// rigid iff d ∈ {0, 2m} or d = m (either branch of the middle pair).
bool quadric_rigid(QuadricKind kind, int m, int d, QuadricBranch branch = QuadricBranch::none);

/// Spinor partition for S_{n+1} -> LG(n, 2n) partition: remove the unique
/// element of {n+1, n+2} and shift everything above n+2 down by two.
PartitionIndex lg_spinor_map(const PartitionIndex& spinor);

struct IncidenceCondition {
    int flag_dim;
    int jump;
};

/// Flag-incidence description of the Schubert variety: the filtration
/// space dimensions and rank jumps for Gr/LG/Spinor, or the linear-space /
/// degenerate-quadric description for quadrics.
struct IncidenceDescription {
    std::vector<IncidenceCondition> conditions;
    std::string text;
};

IncidenceDescription incidence_description(const CominusculeSpace& X, const SchubertClass& w);

/// Which partition model a space carries, if any.
std::optional<PartitionFamily> partition_family_of(const CominusculeSpace& X);

/// Partition of a class (extremal classes included); empty for spaces
/// without a partition model.
std::optional<PartitionIndex> partition_of_class(const CominusculeSpace& X,
                                                 const SchubertClass& w);

/// Class of a partition, via Δ(w) = {α ∈ Δ(g1) : α(Z_w) ≤ a}.
SchubertClass class_of_partition(const CominusculeSpace& X, const PartitionIndex& p);

/// Young-diagram (weakly/strictly decreasing) rendering of a partition and
/// its inverse, for the CLI `--convention decreasing` flag.
std::vector<int> to_decreasing_convention(const PartitionIndex& p);
PartitionIndex from_decreasing_convention(PartitionFamily f, int length, int bound,
                                          const std::vector<int>& young);

} // namespace schur
