#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace schur {

enum class Family { A, B, C, D, E6, E7 };

Family family_from_string(const std::string& s);
std::string to_string(Family f);

/// A root written in the basis of simple roots.  Coefficients of a root are
/// all non-negative (positive root) or all non-positive (negative root);
/// mixed signs never occur.
struct Root {
    std::vector<int> coeffs;

    int rank() const { return static_cast<int>(coeffs.size()); }

    /// Coefficient of the simple root alpha_j (1-based, Bourbaki numbering).
    /// Equals the pairing of the root against the grading element Z_j.
    int coeff(int j) const { return coeffs[static_cast<std::size_t>(j) - 1]; }

    int height() const;
    bool is_zero() const;
    bool is_positive() const;
    Root negated() const;

    bool operator==(const Root& o) const { return coeffs == o.coeffs; }
    bool operator!=(const Root& o) const { return coeffs != o.coeffs; }
    bool operator<(const Root& o) const { return coeffs < o.coeffs; }
};

Root operator+(const Root& a, const Root& b);
Root operator-(const Root& a, const Root& b);

/// Human-readable form, e.g. "α2+2α3+α4".
std::string to_string(const Root& r);

struct IntVecHash {
    std::size_t operator()(const std::vector<int>& v) const;
};

/// Root system of type A_n, B_n, C_n, D_n, E6 or E7, generated from the
/// Cartan matrix by additive closure.  Immutable after construction; all
/// queries are pure and safe for concurrent use.
class RootSystem {
public:
    RootSystem(Family family, int rank);

    Family family() const { return family_; }
    int rank() const { return rank_; }

    /// cartan(a, b) = <alpha_b, alpha_a^vee>.  1-based.
    int cartan(int a, int b) const {
        return cartan_[static_cast<std::size_t>(a) - 1]
                      [static_cast<std::size_t>(b) - 1];
    }

    /// Positive roots ordered by height, ties broken lexicographically.
    const std::vector<Root>& positive_roots() const { return positive_; }

    Root simple_root(int j) const;
    const Root& highest_root() const { return positive_.back(); }

    bool is_root(const Root& r) const;
    bool is_positive_root(const Root& r) const;

    /// Index of a positive root in positive_roots(), or -1.
    int positive_index(const Root& r) const;

    /// alpha + beta when the sum is a root, empty otherwise.  For root
    /// spaces of distinct weights this is the bracket-nonvanishing oracle:
    /// [g_a, g_b] = g_{a+b}.
    std::optional<Root> add_roots(const Root& a, const Root& b) const;

    /// Simple reflection r_j(alpha) = alpha - <alpha, alpha_j^vee> alpha_j.
    Root reflect(int j, const Root& a) const;

    /// <alpha, alpha_j^vee>, computed from the Cartan matrix.
    int pairing(const Root& a, int j) const;

    /// Nodes whose coefficient in the highest root equals 1.
    std::vector<int> cominuscule_nodes() const;

private:
    Family family_;
    int rank_;
    std::vector<std::vector<int>> cartan_;
    std::vector<Root> positive_;
    std::unordered_map<std::vector<int>, int, IntVecHash> index_;

    void build_cartan();
    void generate_roots();
};

} // namespace schur
