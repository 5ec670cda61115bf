#pragma once

#include "schur/roots.hpp"
#include "schur/weyl.hpp"

#include <cstdint>
#include <optional>
#include <utility>

namespace schur {

/// Cominuscule space X = G/P: a root system with a cominuscule node i and
/// the poset Δ(g1) = {α ∈ Δ⁺ : α(Z_i) = 1}, ordered by α ≤ β iff β − α is
/// a non-negative combination of simple roots.  Immutable and safe for
/// concurrent reads.
class CominusculeSpace {
public:
    CominusculeSpace(Family family, int rank, int node);

    const RootSystem& sys() const { return sys_; }
    int node() const { return node_; }
    int dim() const { return static_cast<int>(g1_.size()); }

    const std::vector<Root>& g1() const { return g1_; }
    int g1_index(const Root& r) const;
    bool g1_leq(int a, int b) const;
    const std::vector<int>& lower_covers(int idx) const { return pred_[static_cast<std::size_t>(idx)]; }
    const std::vector<int>& upper_covers(int idx) const { return succ_[static_cast<std::size_t>(idx)]; }

    std::string label() const; // e.g. "C5/P5"

private:
    RootSystem sys_;
    int node_;
    std::vector<Root> g1_;
    std::unordered_map<std::vector<int>, int, IntVecHash> g1_index_;
    std::vector<std::vector<int>> pred_, succ_;
};

CominusculeSpace build_space(Family family, int rank, int node);

/// A Schubert class w ∈ W^p, held canonically as its inversion set
/// Δ(w) ⊆ Δ(g1): a lower order ideal, stored as strictly increasing
/// indices into CominusculeSpace::g1().
struct SchubertClass {
    std::vector<int> ideal;

    int dim() const { return static_cast<int>(ideal.size()); }
    bool contains(int g1_idx) const;
    bool operator==(const SchubertClass& o) const { return ideal == o.ideal; }
    bool operator<(const SchubertClass& o) const;
};

std::vector<Root> ideal_roots(const CominusculeSpace& X, const SchubertClass& w);

/// Both characterizations at once: the ideal is down-closed in g1 and its
/// complement in Δ⁺ is closed under root addition.
bool is_valid_class(const CominusculeSpace& X, const SchubertClass& w);

/// The pair (a(w), J(w)): Δ(w) = {α ∈ Δ(g1) : α(Z_w) ≤ a} with
/// Z_w = Σ_{j∈J} Z_j.
struct AJInvariant {
    int a = 0;
    std::vector<int> J; // sorted, never contains the cominuscule node
    bool operator==(const AJInvariant& o) const { return a == o.a && J == o.J; }
};

/// Per-class annotations carried by the Hasse poset.  `degree` is filled
/// during enumeration, the rest by rigidity classification.
struct ClassInfo {
    std::uint64_t degree = 0;
    bool extremal = false; // w ∈ {1, w0}; carries no (a, J)
    bool classified = false;
    bool rigid = false;
    bool smooth = false;
    std::optional<AJInvariant> aj;
    std::vector<std::pair<Root, Root>> h1; // (beta, gamma)
    std::vector<std::pair<Root, Root>> h2; // (epsilon, gamma)
};

/// All Schubert classes of a cominuscule space, graded by dimension, with
/// cover relations (one root added to the ideal).
class HassePoset {
public:
    std::vector<SchubertClass> classes;     // by (|ideal|, lex); index = class id
    std::vector<std::pair<int, int>> covers; // (lower, upper) class ids
    std::vector<int> cover_root;             // g1 index added along each cover
    std::vector<ClassInfo> info;

    int index_of(const SchubertClass& w) const;
    std::vector<int> upper_of(int id) const;
    std::vector<int> lower_of(int id) const;
    int bottom() const { return 0; }
    int top() const { return static_cast<int>(classes.size()) - 1; }

private:
    friend HassePoset enumerate_classes(const CominusculeSpace&);
    std::unordered_map<std::vector<int>, int, IntVecHash> index_;
};

/// Every lower order ideal of Δ(g1), each double-checked against the
/// closure criterion, with covers and chain-count degrees.
HassePoset enumerate_classes(const CominusculeSpace& X);

/// Number of saturated chains from the bottom class up to w.
std::uint64_t degree(const HassePoset& poset, int class_id);

/// Poincaré dual w*: |w*| = dim X − |w| and (w*)* = w.  Computed from the
/// products of w with the longest elements of W and W_P; both orderings are
/// tried and the dimension-complementing one validated.
SchubertClass poincare_dual(const CominusculeSpace& X, const SchubertClass& w);

} // namespace schur
