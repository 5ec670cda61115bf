#include "schur/verify.hpp"

#include "schur/golden.hpp"
#include "schur/invariants.hpp"
#include "schur/render.hpp"
#include "schur/rigidity.hpp"
#include "schur/space.hpp"
#include "schur/translate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

namespace schur {

namespace {

struct SpaceSpecTriple {
    Family family;
    int rank;
    int node;
};

std::vector<SpaceSpecTriple> classical_partition_spaces() {
    std::vector<SpaceSpecTriple> out;
    for (int n = 1; n <= 7; ++n)
        for (int k = 1; k <= n; ++k) out.push_back({Family::A, n, k});
    for (int n = 2; n <= 6; ++n) out.push_back({Family::C, n, n});
    for (int n = 3; n <= 7; ++n) out.push_back({Family::D, n, n});
    return out;
}

std::vector<SpaceSpecTriple> quadric_spaces() {
    std::vector<SpaceSpecTriple> out;
    for (int n = 2; n <= 7; ++n) out.push_back({Family::B, n, 1});
    for (int n = 3; n <= 7; ++n) out.push_back({Family::D, n, 1});
    return out;
}

std::vector<SpaceSpecTriple> all_check_spaces() {
    auto out = classical_partition_spaces();
    auto q = quadric_spaces();
    out.insert(out.end(), q.begin(), q.end());
    out.push_back({Family::E6, 6, 6});
    out.push_back({Family::E7, 7, 7});
    return out;
}

using CheckResult = std::optional<std::string>; // failure detail, empty = pass

bool run_check(std::ostream& log, const std::string& name,
               const std::function<CheckResult()>& fn) {
    CheckResult failure;
    try {
        failure = fn();
    } catch (const std::exception& e) {
        failure = std::string("exception: ") + e.what();
    }
    if (failure) {
        log << "FAIL " << name << ": " << *failure << "\n";
        return false;
    }
    log << "PASS " << name << "\n";
    return true;
}

std::string parts_str(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(v[k]);
    }
    return s + ")";
}

CheckResult check_dictionaries(const SpaceSpecTriple& t) {
    CominusculeSpace X = build_space(t.family, t.rank, t.node);
    HassePoset poset = enumerate_classes(X);
    auto fam = partition_family_of(X);
    if (!fam) return "space has no partition model";
    int length = *fam == PartitionFamily::Gr ? X.node() : X.sys().rank();
    int bound = *fam == PartitionFamily::Gr ? X.sys().rank() + 1 : 2 * X.sys().rank();

    auto parts = all_partitions(*fam, length, bound);
    if (parts.size() != poset.classes.size())
        return "partition count " + std::to_string(parts.size()) + " != class count " +
               std::to_string(poset.classes.size());

    for (const PartitionIndex& p : parts) {
        SchubertClass w = class_of_partition(X, p);
        auto back = partition_of_class(X, w);
        if (!back || !(*back == p))
            return "partition " + parts_str(p.parts) + " does not round trip through its class";
        if (is_bottom(p) || is_top(p)) continue;
        AJInvariant from_partition = partition_to_aj(p);
        PartitionIndex again = aj_to_partition(*fam, length, bound, from_partition);
        if (!(again == p))
            return "(a, J) -> partition does not invert on " + parts_str(p.parts);
        AJInvariant from_roots = compute_aj(X, w);
        if (X.sys().family() == Family::D && X.node() == X.sys().rank() - 1)
            return "unexpected mirror spinor node in dictionary sweep";
        if (!(from_partition == from_roots))
            return "stabilizer (a, J) disagrees with the partition dictionary on " +
                   parts_str(p.parts);
    }
    return std::nullopt;
}

CheckResult check_criteria_partition(const SpaceSpecTriple& t) {
    CominusculeSpace X = build_space(t.family, t.rank, t.node);
    HassePoset poset = enumerate_classes(X);
    classify(X, poset);
    for (std::size_t c = 0; c < poset.classes.size(); ++c) {
        auto p = partition_of_class(X, poset.classes[c]);
        if (!p) return "missing partition";
        if (rigid_by_partition(*p) != poset.info[c].rigid)
            return "criterion mismatch at " + parts_str(p->parts);
    }
    return std::nullopt;
}

CheckResult check_criteria_quadric(const SpaceSpecTriple& t) {
    CominusculeSpace X = build_space(t.family, t.rank, t.node);
    HassePoset poset = enumerate_classes(X);
    classify(X, poset);
    const bool odd = t.family == Family::B;
    const int m = odd ? t.rank : t.rank - 1;
    std::map<int, int> seen_at_dim;
    for (std::size_t c = 0; c < poset.classes.size(); ++c) {
        int d = poset.classes[c].dim();
        QuadricBranch branch = QuadricBranch::none;
        if (!odd && d == m)
            branch = seen_at_dim[d]++ == 0 ? QuadricBranch::plus : QuadricBranch::minus;
        bool expect = quadric_rigid(odd ? QuadricKind::odd : QuadricKind::even, m, d, branch);
        if (expect != poset.info[c].rigid)
            return "quadric criterion mismatch at dim " + std::to_string(d) + " in " + X.label();
    }
    return std::nullopt;
}

CheckResult check_duality(const SpaceSpecTriple& t) {
    CominusculeSpace X = build_space(t.family, t.rank, t.node);
    HassePoset poset = enumerate_classes(X);
    classify(X, poset);
    for (std::size_t c = 0; c < poset.classes.size(); ++c) {
        SchubertClass dual = poincare_dual(X, poset.classes[c]);
        if (dual.dim() != X.dim() - poset.classes[c].dim())
            return "dual of class " + std::to_string(c) + " has wrong dimension";
        int d = poset.index_of(dual);
        if (d < 0) return "dual class not found in poset";
        if (poset.info[c].rigid != poset.info[static_cast<std::size_t>(d)].rigid)
            return "rigidity not duality-invariant at class " + std::to_string(c) + " of " +
                   X.label();
    }
    return std::nullopt;
}

CheckResult check_lg510_table() {
    CominusculeSpace X = build_space(Family::C, 5, 5);
    HassePoset poset = enumerate_classes(X);
    classify(X, poset);
    if (poset.classes.size() != golden::lg510_table.size())
        return "expected 32 classes, got " + std::to_string(poset.classes.size());
    std::size_t matched = 0;
    for (const auto& row : golden::lg510_table) {
        PartitionIndex p{PartitionFamily::LG, 5, 10,
                         std::vector<int>(row.lambda.begin(), row.lambda.end())};
        int c = poset.index_of(class_of_partition(X, p));
        if (c < 0) return "table partition " + parts_str(p.parts) + " not enumerated";
        const ClassInfo& info = poset.info[static_cast<std::size_t>(c)];
        if (row.a < 0) {
            if (!info.extremal) return parts_str(p.parts) + " should be extremal";
        } else {
            std::vector<int> J(row.J.begin(), row.J.begin() + row.j_count);
            if (!info.aj || info.aj->a != row.a || info.aj->J != J)
                return "a:J mismatch at " + parts_str(p.parts);
        }
        if (info.rigid != row.rigid) return "rigidity mismatch at " + parts_str(p.parts);
        ++matched;
    }
    if (matched != 32) return "matched " + std::to_string(matched) + " rows";
    if (count_rigid(poset) != 10)
        return "expected 10 rigid classes, got " + std::to_string(count_rigid(poset));
    return std::nullopt;
}

CheckResult check_s6_table() {
    CominusculeSpace X = build_space(Family::D, 6, 6);
    HassePoset poset = enumerate_classes(X);
    classify(X, poset);
    if (poset.classes.size() != golden::s6_table.size())
        return "expected 32 classes, got " + std::to_string(poset.classes.size());
    for (const auto& row : golden::s6_table) {
        PartitionIndex p{PartitionFamily::Spinor, 6, 12,
                         std::vector<int>(row.lambda.begin(), row.lambda.end())};
        int c = poset.index_of(class_of_partition(X, p));
        if (c < 0) return "table partition " + parts_str(p.parts) + " not enumerated";
        const ClassInfo& info = poset.info[static_cast<std::size_t>(c)];
        if (row.a < 0) {
            if (!info.extremal) return parts_str(p.parts) + " should be extremal";
        } else {
            std::vector<int> J(row.J.begin(), row.J.begin() + row.j_count);
            if (!info.aj || info.aj->a != row.a || info.aj->J != J)
                return "a:J mismatch at " + parts_str(p.parts);
            if (spinor_r(6, *info.aj) != row.r || spinor_r(p) != row.r)
                return "r mismatch at " + parts_str(p.parts);
        }
        if (info.rigid != row.rigid) return "rigidity mismatch at " + parts_str(p.parts);
    }
    if (count_rigid(poset) != 10)
        return "expected 10 rigid classes, got " + std::to_string(count_rigid(poset));
    return std::nullopt;
}

CheckResult check_figure(Family fam, const std::vector<golden::FigureNode>& figure) {
    CominusculeSpace X = build_space(fam, fam == Family::E6 ? 6 : 7, fam == Family::E6 ? 6 : 7);
    HassePoset poset = enumerate_classes(X);
    classify(X, poset);
    if (poset.classes.size() != figure.size())
        return "expected " + std::to_string(figure.size()) + " classes, got " +
               std::to_string(poset.classes.size());

    auto key = [](int dim, std::uint64_t deg, bool rigid) {
        return std::to_string(dim) + "/" + std::to_string(deg) + "/" + (rigid ? "1" : "0");
    };
    std::multiset<std::string> want, got;
    for (const auto& node : figure) want.insert(key(node.dim, node.degree, node.rigid));
    for (std::size_t c = 0; c < poset.classes.size(); ++c)
        got.insert(key(poset.classes[c].dim(), poset.info[c].degree, poset.info[c].rigid));
    if (want != got) {
        for (const auto& k : want)
            if (!got.count(k)) return "figure node " + k + " not reproduced";
        return "figure multiset mismatch";
    }

    // The figures mark one maximal linear space among the two degree-one
    // classes in the branching dimension: the rigid one is not contained in
    // the higher rigid linear class.
    const int dim_lin = fam == Family::E6 ? 4 : 5;
    int rigid_lin = -1, flexible_lin = -1, upper_lin = -1;
    for (std::size_t c = 0; c < poset.classes.size(); ++c) {
        if (poset.info[c].degree != 1) continue;
        int d = poset.classes[c].dim();
        if (d == dim_lin) (poset.info[c].rigid ? rigid_lin : flexible_lin) = static_cast<int>(c);
        if (d == dim_lin + 1 && poset.info[c].rigid) upper_lin = static_cast<int>(c);
    }
    if (rigid_lin < 0 || flexible_lin < 0 || upper_lin < 0)
        return "expected two degree-1 classes at dim " + std::to_string(dim_lin) +
               " and a rigid degree-1 class above";
    auto contained = [&](int lo, int hi) {
        const auto& a = poset.classes[static_cast<std::size_t>(lo)].ideal;
        const auto& b = poset.classes[static_cast<std::size_t>(hi)].ideal;
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    if (contained(rigid_lin, upper_lin))
        return "the circled maximal linear class sits below the longer linear class";
    if (!contained(flexible_lin, upper_lin))
        return "the uncircled linear class should sit below the longer linear class";
    return std::nullopt;
}

} // namespace

std::vector<std::string> verify_suite_names() {
    return {"dictionaries", "criteria", "duality", "figures", "all"};
}

bool verify_suite(const std::string& name, std::ostream& log) {
    bool ok = true;
    const bool all = name == "all";
    if (!all && name != "dictionaries" && name != "criteria" && name != "duality" &&
        name != "figures")
        throw std::invalid_argument("unknown suite '" + name +
                                    "' (dictionaries, criteria, duality, figures, all)");

    if (all || name == "dictionaries") {
        for (const auto& t : classical_partition_spaces()) {
            CominusculeSpace probe = build_space(t.family, t.rank, t.node);
            ok &= run_check(log, "dictionaries " + probe.label(),
                            [&] { return check_dictionaries(t); });
        }
    }
    if (all || name == "criteria") {
        for (const auto& t : classical_partition_spaces()) {
            CominusculeSpace probe = build_space(t.family, t.rank, t.node);
            ok &= run_check(log, "criteria " + probe.label(),
                            [&] { return check_criteria_partition(t); });
        }
        for (const auto& t : quadric_spaces()) {
            CominusculeSpace probe = build_space(t.family, t.rank, t.node);
            ok &= run_check(log, "criteria " + probe.label(),
                            [&] { return check_criteria_quadric(t); });
        }
    }
    if (all || name == "duality") {
        for (const auto& t : all_check_spaces()) {
            CominusculeSpace probe = build_space(t.family, t.rank, t.node);
            ok &= run_check(log, "duality " + probe.label(), [&] { return check_duality(t); });
        }
    }
    if (all || name == "figures") {
        ok &= run_check(log, "figures LG(5,10) table", check_lg510_table);
        ok &= run_check(log, "figures S_6 table", check_s6_table);
        ok &= run_check(log, "figures E6/P6",
                        [] { return check_figure(Family::E6, golden::e6_figure); });
        ok &= run_check(log, "figures E7/P7",
                        [] { return check_figure(Family::E7, golden::e7_figure); });
    }
    return ok;
}

} // namespace schur
