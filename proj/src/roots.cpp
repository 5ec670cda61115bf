#include "schur/roots.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace schur {

Family family_from_string(const std::string& s) {
    if (s == "A") return Family::A;
    if (s == "B") return Family::B;
    if (s == "C") return Family::C;
    if (s == "D") return Family::D;
    if (s == "E6") return Family::E6;
    if (s == "E7") return Family::E7;
    throw std::invalid_argument("unknown family '" + s + "' (expected A, B, C, D, E6 or E7)");
}

std::string to_string(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::D: return "D";
        case Family::E6: return "E6";
        case Family::E7: return "E7";
    }
    return "?";
}

int Root::height() const {
    return std::accumulate(coeffs.begin(), coeffs.end(), 0);
}

bool Root::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c == 0; });
}

bool Root::is_positive() const {
    bool any = false;
    for (int c : coeffs) {
        if (c < 0) return false;
        if (c > 0) any = true;
    }
    return any;
}

Root Root::negated() const {
    Root r = *this;
    for (int& c : r.coeffs) c = -c;
    return r;
}

Root operator+(const Root& a, const Root& b) {
    Root r = a;
    for (std::size_t k = 0; k < r.coeffs.size(); ++k) r.coeffs[k] += b.coeffs[k];
    return r;
}

Root operator-(const Root& a, const Root& b) {
    Root r = a;
    for (std::size_t k = 0; k < r.coeffs.size(); ++k) r.coeffs[k] -= b.coeffs[k];
    return r;
}

std::string to_string(const Root& r) {
    std::string out;
    for (int j = 1; j <= r.rank(); ++j) {
        int c = r.coeff(j);
        if (c == 0) continue;
        if (!out.empty()) out += c > 0 ? "+" : "";
        if (c == -1) out += "-";
        else if (c != 1) out += std::to_string(c);
        out += "α" + std::to_string(j);
    }
    return out.empty() ? "0" : out;
}

std::size_t IntVecHash::operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
        h ^= static_cast<std::size_t>(static_cast<unsigned>(x) + 0x9e3779b9u);
        h *= 1099511628211ull;
    }
    return h;
}

RootSystem::RootSystem(Family family, int rank) : family_(family), rank_(rank) {
    switch (family_) {
        case Family::A:
            if (rank < 1) throw std::invalid_argument("A_n requires rank >= 1");
            break;
        case Family::B:
            if (rank < 2) throw std::invalid_argument("B_n requires rank >= 2");
            break;
        case Family::C:
            if (rank < 2) throw std::invalid_argument("C_n requires rank >= 2");
            break;
        case Family::D:
            if (rank < 3) throw std::invalid_argument("D_n requires rank >= 3");
            break;
        case Family::E6:
            if (rank != 6) throw std::invalid_argument("E6 has rank 6");
            break;
        case Family::E7:
            if (rank != 7) throw std::invalid_argument("E7 has rank 7");
            break;
    }
    build_cartan();
    generate_roots();
}

void RootSystem::build_cartan() {
    const int n = rank_;
    cartan_.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int a = 0; a < n; ++a) cartan_[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)] = 2;
    auto bond = [&](int a, int b) { // single bond between nodes a and b (1-based)
        cartan_[static_cast<std::size_t>(a) - 1][static_cast<std::size_t>(b) - 1] = -1;
        cartan_[static_cast<std::size_t>(b) - 1][static_cast<std::size_t>(a) - 1] = -1;
    };
    switch (family_) {
        case Family::A:
            for (int a = 1; a < n; ++a) bond(a, a + 1);
            break;
        case Family::B:
            // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
            for (int a = 1; a < n; ++a) bond(a, a + 1);
            cartan_[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(n) - 2] = -2;
            break;
        case Family::C:
            // alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2
            for (int a = 1; a < n; ++a) bond(a, a + 1);
            cartan_[static_cast<std::size_t>(n) - 2][static_cast<std::size_t>(n) - 1] = -2;
            break;
        case Family::D:
            for (int a = 1; a + 1 <= n - 2; ++a) bond(a, a + 1);
            bond(n - 2, n - 1);
            bond(n - 2, n);
            break;
        case Family::E6:
            bond(1, 3); bond(3, 4); bond(4, 5); bond(5, 6); bond(2, 4);
            break;
        case Family::E7:
            bond(1, 3); bond(3, 4); bond(4, 5); bond(5, 6); bond(6, 7); bond(2, 4);
            break;
    }
}

int RootSystem::pairing(const Root& a, int j) const {
    int s = 0;
    for (int b = 1; b <= rank_; ++b) s += a.coeff(b) * cartan(j, b);
    return s;
}

void RootSystem::generate_roots() {
    const int n = rank_;
    std::vector<Root> layer;
    for (int j = 1; j <= n; ++j) layer.push_back(simple_root(j));
    std::sort(layer.begin(), layer.end());

    auto known = [&](const Root& r) { return index_.find(r.coeffs) != index_.end(); };

    while (!layer.empty()) {
        for (const Root& r : layer) {
            index_.emplace(r.coeffs, static_cast<int>(positive_.size()));
            positive_.push_back(r);
        }
        std::vector<Root> next;
        std::unordered_map<std::vector<int>, bool, IntVecHash> seen;
        for (const Root& alpha : layer) {
            for (int j = 1; j <= n; ++j) {
                Root cand = alpha + simple_root(j);
                if (seen.count(cand.coeffs)) continue;
                // alpha_j-string through alpha: q = p - <alpha, alpha_j^vee>
                int p = 0;
                Root down = alpha - simple_root(j);
                while (!down.is_zero() && known(down)) {
                    ++p;
                    down = down - simple_root(j);
                }
                int q = p - pairing(alpha, j);
                if (q > 0) {
                    seen.emplace(cand.coeffs, true);
                    next.push_back(cand);
                }
            }
        }
        std::sort(next.begin(), next.end());
        layer = std::move(next);
    }

    std::size_t expect = 0;
    switch (family_) {
        case Family::A: expect = static_cast<std::size_t>(n) * (n + 1) / 2; break;
        case Family::B:
        case Family::C: expect = static_cast<std::size_t>(n) * n; break;
        case Family::D: expect = static_cast<std::size_t>(n) * (n - 1); break;
        case Family::E6: expect = 36; break;
        case Family::E7: expect = 63; break;
    }
    if (positive_.size() != expect)
        throw std::logic_error("root generation produced " + std::to_string(positive_.size()) +
                               " positive roots, expected " + std::to_string(expect));
}

Root RootSystem::simple_root(int j) const {
    Root r;
    r.coeffs.assign(static_cast<std::size_t>(rank_), 0);
    r.coeffs[static_cast<std::size_t>(j) - 1] = 1;
    return r;
}

bool RootSystem::is_root(const Root& r) const {
    if (index_.count(r.coeffs)) return true;
    return index_.count(r.negated().coeffs) != 0;
}

bool RootSystem::is_positive_root(const Root& r) const {
    return index_.count(r.coeffs) != 0;
}

int RootSystem::positive_index(const Root& r) const {
    auto it = index_.find(r.coeffs);
    return it == index_.end() ? -1 : it->second;
}

std::optional<Root> RootSystem::add_roots(const Root& a, const Root& b) const {
    Root s = a + b;
    if (s.is_zero()) return std::nullopt;
    if (is_root(s)) return s;
    return std::nullopt;
}

Root RootSystem::reflect(int j, const Root& a) const {
    int c = pairing(a, j);
    Root r = a;
    r.coeffs[static_cast<std::size_t>(j) - 1] -= c;
    return r;
}

std::vector<int> RootSystem::cominuscule_nodes() const {
    std::vector<int> nodes;
    const Root& theta = highest_root();
    for (int j = 1; j <= rank_; ++j)
        if (theta.coeff(j) == 1) nodes.push_back(j);
    return nodes;
}

} // namespace schur
