#include "schur/translate.hpp"

#include <algorithm>
#include <stdexcept>

namespace schur {

std::string to_string(PartitionFamily f) {
    switch (f) {
        case PartitionFamily::Gr: return "Gr";
        case PartitionFamily::LG: return "LG";
        case PartitionFamily::Spinor: return "Spinor";
    }
    return "?";
}

namespace {

[[noreturn]] void reject(const std::string& rule, const std::string& detail) {
    throw std::invalid_argument("invalid partition (" + rule + "): " + detail);
}

std::string parts_str(const std::vector<int>& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(v[k]);
    }
    return s;
}

// Maximal blocks of consecutive integers, as inclusive index ranges.
// Spinor uses the modified consecutivity where n-1,n+1 and n,n+2 count as
// consecutive.
std::vector<std::pair<int, int>> blocks_of(const std::vector<int>& parts, int n_special) {
    auto consec = [&](int x, int y) {
        if (y == x + 1) return true;
        if (n_special > 0 && x == n_special - 1 && y == n_special + 1) return true;
        if (n_special > 0 && x == n_special && y == n_special + 2) return true;
        return false;
    };
    std::vector<std::pair<int, int>> blocks;
    int first = 0;
    for (std::size_t k = 1; k <= parts.size(); ++k) {
        if (k == parts.size() || !consec(parts[k - 1], parts[k])) {
            blocks.emplace_back(first, static_cast<int>(k) - 1);
            first = static_cast<int>(k);
        }
    }
    return blocks;
}

// Condensed form of lambda~_k = lambda_k - k: (value, count) pairs with
// values strictly increasing.
std::vector<std::pair<int, int>> condense_tilde(const std::vector<int>& parts) {
    std::vector<std::pair<int, int>> out;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        int v = parts[k] - static_cast<int>(k) - 1;
        if (!out.empty() && out.back().first == v)
            ++out.back().second;
        else
            out.emplace_back(v, 1);
    }
    return out;
}

void check_symmetric_occupancy(const PartitionIndex& p) {
    const int twon = p.bound;
    std::vector<bool> in(static_cast<std::size_t>(twon) + 1, false);
    for (int x : p.parts) in[static_cast<std::size_t>(x)] = true;
    for (int x = 1; x <= twon; ++x)
        if (in[static_cast<std::size_t>(x)] == in[static_cast<std::size_t>(twon + 1 - x)])
            reject("symmetric-occupancy",
                   "exactly one of {" + std::to_string(x) + ", " + std::to_string(twon + 1 - x) +
                       "} must appear in (" + parts_str(p.parts) + ")");
}

} // namespace

void validate(const PartitionIndex& p) {
    if (static_cast<int>(p.parts.size()) != p.length)
        reject("length", "expected " + std::to_string(p.length) + " parts, got " +
                             std::to_string(p.parts.size()));
    for (std::size_t k = 0; k < p.parts.size(); ++k) {
        if (p.parts[k] < 1 || p.parts[k] > p.bound)
            reject("range", "part " + std::to_string(p.parts[k]) + " outside [1, " +
                                std::to_string(p.bound) + "]");
        if (k > 0 && p.parts[k] <= p.parts[k - 1])
            reject("strictly-increasing", parts_str(p.parts));
    }
    if (p.family == PartitionFamily::LG || p.family == PartitionFamily::Spinor) {
        if (p.bound != 2 * p.length)
            reject("shape", "bound must be 2n");
        check_symmetric_occupancy(p);
    }
    if (p.family == PartitionFamily::Spinor) {
        int above = 0;
        for (int x : p.parts)
            if (x > p.length) ++above;
        if (above % 2 != 0)
            reject("even-parity", "#{parts > n} = " + std::to_string(above) + " is odd in (" +
                                      parts_str(p.parts) + ")");
    }
}

bool is_bottom(const PartitionIndex& p) {
    for (int k = 1; k <= p.length; ++k)
        if (p.parts[static_cast<std::size_t>(k) - 1] != k) return false;
    return true;
}

bool is_top(const PartitionIndex& p) {
    return p.parts == top_partition(p.family, p.length, p.bound).parts;
}

PartitionIndex bottom_partition(PartitionFamily f, int length, int bound) {
    PartitionIndex p{f, length, bound, {}};
    for (int k = 1; k <= length; ++k) p.parts.push_back(k);
    validate(p);
    return p;
}

PartitionIndex top_partition(PartitionFamily f, int length, int bound) {
    PartitionIndex p{f, length, bound, {}};
    if (f == PartitionFamily::Spinor && length % 2 != 0) {
        // (n+1, ..., 2n) has odd parity when n is odd; the top class swaps
        // n+1 for n.
        p.parts.push_back(length);
        for (int x = length + 2; x <= bound; ++x) p.parts.push_back(x);
    } else {
        for (int x = bound - length + 1; x <= bound; ++x) p.parts.push_back(x);
    }
    validate(p);
    return p;
}

std::vector<PartitionIndex> all_partitions(PartitionFamily f, int length, int bound) {
    std::vector<PartitionIndex> out;
    if (f == PartitionFamily::Gr) {
        std::vector<int> comb(static_cast<std::size_t>(length));
        for (int k = 0; k < length; ++k) comb[static_cast<std::size_t>(k)] = k + 1;
        while (true) {
            out.push_back(PartitionIndex{f, length, bound, comb});
            int k = length - 1;
            while (k >= 0 && comb[static_cast<std::size_t>(k)] == bound - length + 1 + k) --k;
            if (k < 0) break;
            ++comb[static_cast<std::size_t>(k)];
            for (int m = k + 1; m < length; ++m)
                comb[static_cast<std::size_t>(m)] = comb[static_cast<std::size_t>(m) - 1] + 1;
        }
        return out;
    }
    // LG/Spinor partitions correspond to the subsets T of [1, n] whose
    // elements are replaced by their mirrors 2n+1-x; spinor needs |T| even.
    const int n = length;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (f == PartitionFamily::Spinor && __builtin_popcount(mask) % 2 != 0) continue;
        std::vector<int> parts;
        for (int x = 1; x <= n; ++x)
            if (!(mask & (1u << (x - 1)))) parts.push_back(x);
        for (int x = n; x >= 1; --x)
            if (mask & (1u << (x - 1))) parts.push_back(2 * n + 1 - x);
        std::sort(parts.begin(), parts.end());
        out.push_back(PartitionIndex{f, length, bound, parts});
    }
    std::sort(out.begin(), out.end(),
              [](const PartitionIndex& a, const PartitionIndex& b) { return a.parts < b.parts; });
    return out;
}

std::vector<std::pair<int, int>> spinor_blocks(const PartitionIndex& p) {
    return blocks_of(p.parts, p.length);
}

AJInvariant partition_to_aj(const PartitionIndex& p) {
    validate(p);
    if (is_bottom(p) || is_top(p))
        throw std::invalid_argument("extremal partition (" + parts_str(p.parts) +
                                    ") carries no (a, J)");

    AJInvariant out;
    const auto& parts = p.parts;

    if (p.family == PartitionFamily::Gr) {
        const int i = p.length, N = p.bound;
        auto blocks = blocks_of(parts, 0);
        const int pp = static_cast<int>(blocks.size()) - 1;
        std::vector<int> jset, kset;
        for (int s = 0; s < pp; ++s) {
            int jl = blocks[static_cast<std::size_t>(s)].second + 1; // cumulative length
            jset.push_back(jl);
            int kterm = i - jl + parts[static_cast<std::size_t>(jl) - 1];
            if (kterm != i && kterm != N) kset.push_back(kterm);
        }
        if (parts.back() != i && parts.back() != N) kset.push_back(parts.back());
        int a_p = parts.front() > 1 ? pp : pp - 1;
        int a_q = parts.back() == N ? static_cast<int>(kset.size())
                                    : static_cast<int>(kset.size()) - 1;
        if (a_p != a_q)
            throw std::logic_error("Grassmannian dictionary inconsistent on (" +
                                   parts_str(parts) + ")");
        out.a = a_p;
        out.J = jset;
        out.J.insert(out.J.end(), kset.begin(), kset.end());
        std::sort(out.J.begin(), out.J.end());
        return out;
    }

    const int n = p.length;
    auto blocks = blocks_of(parts, p.family == PartitionFamily::Spinor ? n : 0);
    const int pp = static_cast<int>(blocks.size()) - 1;
    for (int s = 0; s < pp; ++s)
        out.J.push_back(blocks[static_cast<std::size_t>(s)].second + 1);
    std::sort(out.J.begin(), out.J.end());

    if (p.family == PartitionFamily::LG) {
        out.a = parts.front() == 1 ? pp - 1 : pp;
    } else {
        int gap = parts[static_cast<std::size_t>(n) - 1] - parts[static_cast<std::size_t>(n) - 2];
        if (parts.front() == 1)
            out.a = gap > 1 ? pp - 2 : pp - 1;
        else
            out.a = gap > 1 ? pp - 1 : pp;
    }
    if (out.a < 0)
        throw std::logic_error("negative a on non-extremal partition (" + parts_str(parts) + ")");
    return out;
}

namespace {

// j_ell accessor with the conventions j_{p+1} = 0, j_0 = i (ell is the
// descending table index; js is ascending).
int j_at(const std::vector<int>& js, int ell, int j0) {
    const int pp = static_cast<int>(js.size());
    if (ell == 0) return j0;
    if (ell == pp + 1) return 0;
    return js[static_cast<std::size_t>(pp - ell)];
}

} // namespace

PartitionIndex aj_to_partition(PartitionFamily f, int length, int bound, const AJInvariant& aj) {
    if (aj.a < 0) throw std::invalid_argument("invalid (a, J): a must be >= 0");
    if (aj.J.empty()) throw std::invalid_argument("invalid (a, J): J must be non-empty");
    std::vector<int> J = aj.J;
    std::sort(J.begin(), J.end());
    if (std::adjacent_find(J.begin(), J.end()) != J.end())
        throw std::invalid_argument("invalid (a, J): repeated node in J");

    PartitionIndex out{f, length, bound, {}};

    if (f == PartitionFamily::Gr) {
        const int i = length, N = bound;
        std::vector<int> js, ks;
        for (int j : J) {
            if (j < 1 || j > N - 1 || j == i)
                throw std::invalid_argument("invalid (a, J): node " + std::to_string(j) +
                                            " outside [1, " + std::to_string(N - 1) +
                                            "] \\ {i}");
            (j < i ? js : ks).push_back(j);
        }
        const int pp = static_cast<int>(js.size()), qq = static_cast<int>(ks.size());
        if (pp != aj.a && pp != aj.a + 1)
            throw std::invalid_argument("invalid (a, J): #(J below i) must be a or a+1");
        if (qq != aj.a && qq != aj.a + 1)
            throw std::invalid_argument("invalid (a, J): #(J above i) must be a or a+1");
        auto k_at = [&](int m) {
            if (m == 0) return i;
            if (m == qq + 1) return N;
            return ks[static_cast<std::size_t>(m) - 1];
        };
        for (int ell = pp; ell >= 0; --ell) {
            int m = aj.a + 1 - ell;
            if (m < 0 || m > qq + 1)
                throw std::invalid_argument("invalid (a, J): block index out of range");
            int km = k_at(m);
            for (int x = j_at(js, ell + 1, i) + km - i + 1; x <= j_at(js, ell, i) + km - i; ++x)
                out.parts.push_back(x);
        }
        validate(out);
        return out;
    }

    const int n = length;
    for (int j : J)
        if (j < 1 || j > n - 1)
            throw std::invalid_argument("invalid (a, J): node " + std::to_string(j) +
                                        " outside [1, n-1]");
    const int pp = static_cast<int>(J.size());
    int delta = 0;
    if (f == PartitionFamily::Spinor) {
        delta = std::find(J.begin(), J.end(), n - 1) != J.end() ? 1 : 0;
        if (pp - delta != aj.a && pp - delta != aj.a + 1)
            throw std::invalid_argument("invalid (a, J): |J| - [n-1 in J] must be a or a+1");
        int r = (aj.a + delta + 1) / 2; // ceil((a + delta)/2)
        if (r > delta && j_at(J, r, n) - j_at(J, r + 1, n) < 2)
            throw std::invalid_argument("invalid (a, J): spinor gap rule 2 <= j_r - j_{r+1}");
    } else {
        if (pp != aj.a && pp != aj.a + 1)
            throw std::invalid_argument("invalid (a, J): |J| must be a or a+1");
    }

    for (int ell = pp; ell >= 0; --ell) {
        int m = aj.a + 1 + delta - ell;
        if (m < 0 || m > pp + 1)
            throw std::invalid_argument("invalid (a, J): block index out of range");
        int jm = j_at(J, m, n);
        for (int x = n + 1 + j_at(J, ell + 1, n) - jm; x <= n + j_at(J, ell, n) - jm; ++x)
            out.parts.push_back(x);
    }

    if (f == PartitionFamily::Spinor) {
        int above = 0;
        for (int x : out.parts)
            if (x > n) ++above;
        if (above % 2 != 0) {
            auto it_n = std::find(out.parts.begin(), out.parts.end(), n);
            auto it_n1 = std::find(out.parts.begin(), out.parts.end(), n + 1);
            if ((it_n == out.parts.end()) == (it_n1 == out.parts.end()))
                throw std::logic_error("spinor parity fix: expected exactly one of {n, n+1}");
            if (it_n != out.parts.end())
                *it_n = n + 1;
            else
                *it_n1 = n;
            std::sort(out.parts.begin(), out.parts.end());
        }
    }
    validate(out);
    return out;
}

int spinor_r(const PartitionIndex& p) {
    if (p.family != PartitionFamily::Spinor)
        throw std::invalid_argument("spinor_r expects a spinor partition");
    validate(p);
    int pp = static_cast<int>(spinor_blocks(p).size()) - 1;
    return p.parts.front() == 1 ? pp / 2 : (pp + 1) / 2;
}

int spinor_r(int n, const AJInvariant& aj) {
    int delta = std::find(aj.J.begin(), aj.J.end(), n - 1) != aj.J.end() ? 1 : 0;
    return (aj.a + delta + 1) / 2;
}

bool rigid_by_partition(const PartitionIndex& p) {
    validate(p);
    if (is_bottom(p) || is_top(p)) return true; // [o] and [X]

    if (p.family == PartitionFamily::Gr) {
        auto cond = condense_tilde(p.parts);
        const int t = static_cast<int>(cond.size());
        for (int u = 0; u + 1 < t; ++u)
            if (cond[static_cast<std::size_t>(u) + 1].first - cond[static_cast<std::size_t>(u)].first < 2)
                return false;
        for (int u = 1; u + 1 < t; ++u)
            if (cond[static_cast<std::size_t>(u)].second < 2) return false;
        if (cond.front().first > 0 && cond.front().second < 2) return false;
        if (cond.back().first < p.bound - p.length && cond.back().second < 2) return false;
        return true;
    }

    if (p.family == PartitionFamily::LG) {
        auto cond = condense_tilde(p.parts);
        const int t = static_cast<int>(cond.size());
        if (cond.front().first > 0) {
            for (int u = 0; u + 1 < t; ++u)
                if (cond[static_cast<std::size_t>(u)].second < 2) return false;
        } else {
            for (int u = 1; u < t; ++u)
                if (cond[static_cast<std::size_t>(u)].second < 2) return false;
        }
        return true;
    }

    auto blocks = spinor_blocks(p);
    const int t = static_cast<int>(blocks.size());
    const int pp = t - 1;
    auto chat = [&](int s) { // block size, descending table index s
        auto [f2, l2] = blocks[static_cast<std::size_t>(t - 1 - s)];
        return l2 - f2 + 1;
    };
    const int r = spinor_r(p);
    if (p.parts.front() > 1) {
        for (int s = 1; s <= pp; ++s)
            if (chat(s) < 2) return false;
    } else {
        for (int s = 0; s <= pp - 1; ++s)
            if (chat(s) < 2) return false;
    }
    return chat(r) >= 3;
}

bool quadric_rigid(QuadricKind kind, int m, int d, QuadricBranch branch) {
    (void)branch; // both middle classes behave alike
    const int dimX = kind == QuadricKind::odd ? 2 * m - 1 : 2 * m;
    if (d < 0 || d > dimX)
        throw std::invalid_argument("quadric class dimension " + std::to_string(d) +
                                    " outside [0, " + std::to_string(dimX) + "]");
    if (d == 0 || d == dimX) return true;
    return kind == QuadricKind::even && d == m;
}

PartitionIndex lg_spinor_map(const PartitionIndex& spinor) {
    if (spinor.family != PartitionFamily::Spinor)
        throw std::invalid_argument("lg_spinor_map expects a spinor partition");
    validate(spinor);
    const int n = spinor.length - 1; // S_{n+1} -> LG(n, 2n)
    if (n < 1) throw std::invalid_argument("lg_spinor_map needs S_n with n >= 2");
    PartitionIndex out{PartitionFamily::LG, n, 2 * n, {}};
    int removed = 0;
    for (int x : spinor.parts) {
        if (x == n + 1 || x == n + 2) {
            ++removed;
            continue;
        }
        out.parts.push_back(x > n + 2 ? x - 2 : x);
    }
    if (removed != 1)
        throw std::logic_error("spinor partition must contain exactly one of {n+1, n+2}");
    validate(out);
    return out;
}

std::optional<PartitionFamily> partition_family_of(const CominusculeSpace& X) {
    const int n = X.sys().rank();
    switch (X.sys().family()) {
        case Family::A: return PartitionFamily::Gr;
        case Family::C: return X.node() == n ? std::optional(PartitionFamily::LG) : std::nullopt;
        case Family::D:
            if (X.node() == n || X.node() == n - 1) return PartitionFamily::Spinor;
            return std::nullopt;
        default: return std::nullopt;
    }
}

namespace {

// D_n/P_{n-1} is carried to D_n/P_n by the diagram automorphism swapping
// the fork nodes; partition dictionaries are stated for node n.
std::vector<int> swap_fork_nodes(std::vector<int> J, int n) {
    for (int& j : J) {
        if (j == n) j = n - 1;
        else if (j == n - 1) j = n;
    }
    std::sort(J.begin(), J.end());
    return J;
}

} // namespace

std::optional<PartitionIndex> partition_of_class(const CominusculeSpace& X,
                                                 const SchubertClass& w) {
    auto fam = partition_family_of(X);
    if (!fam) return std::nullopt;
    int length = 0, bound = 0;
    switch (*fam) {
        case PartitionFamily::Gr:
            length = X.node();
            bound = X.sys().rank() + 1;
            break;
        case PartitionFamily::LG:
        case PartitionFamily::Spinor:
            length = X.sys().rank();
            bound = 2 * X.sys().rank();
            break;
    }
    if (w.ideal.empty()) return bottom_partition(*fam, length, bound);
    if (w.dim() == X.dim()) return top_partition(*fam, length, bound);
    AJInvariant aj = compute_aj(X, w);
    if (*fam == PartitionFamily::Spinor && X.node() == X.sys().rank() - 1)
        aj.J = swap_fork_nodes(aj.J, X.sys().rank());
    return aj_to_partition(*fam, length, bound, aj);
}

SchubertClass class_of_partition(const CominusculeSpace& X, const PartitionIndex& p) {
    auto fam = partition_family_of(X);
    if (!fam || *fam != p.family)
        throw std::invalid_argument("partition family does not match the space");
    validate(p);
    SchubertClass w;
    if (is_bottom(p)) return w;
    if (is_top(p)) {
        for (int t = 0; t < X.dim(); ++t) w.ideal.push_back(t);
        return w;
    }
    AJInvariant aj = partition_to_aj(p);
    if (*fam == PartitionFamily::Spinor && X.node() == X.sys().rank() - 1)
        aj.J = swap_fork_nodes(aj.J, X.sys().rank());
    for (int t = 0; t < X.dim(); ++t)
        if (zw_grade(aj.J, X.g1()[static_cast<std::size_t>(t)]) <= aj.a) w.ideal.push_back(t);
    if (!is_valid_class(X, w))
        throw std::logic_error("partition produced an invalid inversion set");
    return w;
}

IncidenceDescription incidence_description(const CominusculeSpace& X, const SchubertClass& w) {
    if (w.ideal.empty() || w.dim() == X.dim())
        throw std::invalid_argument("incidence_description: extremal class");
    const Family fam = X.sys().family();
    const int n = X.sys().rank();

    if (fam == Family::E6 || fam == Family::E7)
        throw std::invalid_argument("incidence_description: no partition model for " + X.label());

    AJInvariant aj = compute_aj(X, w);
    IncidenceDescription out;

    if ((fam == Family::B && X.node() == 1) || (fam == Family::D && X.node() == 1)) {
        // Linear spaces for a = 0, degenerate quadric sections for a = 1.
        const int dimX = X.dim();
        if (aj.a == 0) {
            out.text = "linear subspace P^" + std::to_string(w.dim()) + " of Q^" +
                       std::to_string(dimX);
        } else {
            out.text = "degenerate quadric Q^" + std::to_string(dimX) + " ∩ P^" +
                       std::to_string(w.dim() + 1);
        }
        return out;
    }

    std::vector<int> js, ks;
    int i = 0, ambient = 0;
    int pshift = 0; // ell + m = a + 1 + pshift
    if (fam == Family::A) {
        i = X.node();
        ambient = n + 1;
        for (int j : aj.J) (j < i ? js : ks).push_back(j);
    } else {
        std::vector<int> J = aj.J;
        if (fam == Family::D && X.node() == n - 1) J = swap_fork_nodes(J, n);
        i = n;
        ambient = 2 * n;
        js = J;
        if (fam == Family::D) pshift = std::find(J.begin(), J.end(), n - 1) != J.end() ? 1 : 0;
    }
    std::sort(js.begin(), js.end());
    std::sort(ks.begin(), ks.end());
    const int pp = static_cast<int>(js.size());
    const int qq = static_cast<int>(ks.size());

    const int top_ell = fam == Family::A ? aj.a + 1 : pp;
    for (int ell = top_ell; ell >= 0; --ell) {
        int m = aj.a + 1 + pshift - ell;
        int fdim;
        if (fam == Family::A) {
            int km = m == 0 ? i : (m == qq + 1 ? ambient : ks[static_cast<std::size_t>(m) - 1]);
            fdim = j_at(js, ell, i) + km - i;
        } else {
            fdim = j_at(js, ell, i) + n - j_at(js, m, i);
        }
        if (fdim == ambient) continue; // trivial condition against the full space
        out.conditions.push_back(IncidenceCondition{fdim, j_at(js, ell, i)});
    }
    for (std::size_t c = 0; c < out.conditions.size(); ++c) {
        if (c) out.text += "; ";
        out.text += "dim(E ∩ F^" + std::to_string(out.conditions[c].flag_dim) +
                    ") ≥ " + std::to_string(out.conditions[c].jump);
    }
    return out;
}

std::vector<int> to_decreasing_convention(const PartitionIndex& p) {
    std::vector<int> out;
    if (p.family == PartitionFamily::Gr) {
        for (int k = p.length; k >= 1; --k) {
            int v = p.parts[static_cast<std::size_t>(k) - 1] - k;
            if (v > 0) out.push_back(v);
        }
        return out;
    }
    const int n = p.length;
    std::vector<bool> in(static_cast<std::size_t>(n) + 1, false);
    for (int x : p.parts)
        if (x <= n) in[static_cast<std::size_t>(x)] = true;
    for (int x = 1; x <= n; ++x) {
        if (in[static_cast<std::size_t>(x)]) continue;
        int v = p.family == PartitionFamily::LG ? n + 1 - x : n - x;
        if (v > 0) out.push_back(v);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

PartitionIndex from_decreasing_convention(PartitionFamily f, int length, int bound,
                                          const std::vector<int>& young) {
    std::vector<int> y = young;
    std::sort(y.rbegin(), y.rend());
    PartitionIndex out{f, length, bound, {}};
    if (f == PartitionFamily::Gr) {
        if (static_cast<int>(y.size()) > length)
            throw std::invalid_argument("Young diagram has more rows than the Grassmannian allows");
        y.resize(static_cast<std::size_t>(length), 0);
        for (int k = 1; k <= length; ++k)
            out.parts.push_back(y[static_cast<std::size_t>(length - k)] + k);
        validate(out);
        return out;
    }
    const int n = length;
    std::vector<bool> upper(static_cast<std::size_t>(n) + 1, false);
    for (int v : y) {
        int x = f == PartitionFamily::LG ? n + 1 - v : n - v;
        if (x < 1 || x > n || upper[static_cast<std::size_t>(x)])
            throw std::invalid_argument("strict partition does not fit the staircase");
        upper[static_cast<std::size_t>(x)] = true;
    }
    if (f == PartitionFamily::Spinor) {
        // parity of |T| must be even; the dropped 0-row (x = n) is the free bit
        int cnt = 0;
        for (int x = 1; x <= n; ++x)
            if (upper[static_cast<std::size_t>(x)]) ++cnt;
        if (cnt % 2 != 0) {
            if (upper[static_cast<std::size_t>(n)])
                throw std::invalid_argument("strict partition violates the spinor parity rule");
            upper[static_cast<std::size_t>(n)] = true;
        }
    }
    for (int x = 1; x <= n; ++x)
        if (!upper[static_cast<std::size_t>(x)]) out.parts.push_back(x);
    for (int x = n; x >= 1; --x)
        if (upper[static_cast<std::size_t>(x)]) out.parts.push_back(2 * n + 1 - x);
    std::sort(out.parts.begin(), out.parts.end());
    validate(out);
    return out;
}

} // namespace schur
