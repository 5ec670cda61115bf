#include "schur/space.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace schur {

CominusculeSpace::CominusculeSpace(Family family, int rank, int node)
    : sys_(family, rank), node_(node) {
    auto nodes = sys_.cominuscule_nodes();
    if (std::find(nodes.begin(), nodes.end(), node) == nodes.end())
        throw std::invalid_argument("node " + std::to_string(node) + " is not cominuscule in " +
                                    to_string(family) + std::to_string(rank));
    for (const Root& r : sys_.positive_roots()) {
        int c = r.coeff(node_);
        if (c < 0 || c > 1)
            throw std::logic_error("cominuscule grading violated at " + to_string(r));
        if (c == 1) {
            g1_index_.emplace(r.coeffs, static_cast<int>(g1_.size()));
            g1_.push_back(r);
        }
    }

    const int d = dim();
    pred_.assign(static_cast<std::size_t>(d), {});
    succ_.assign(static_cast<std::size_t>(d), {});
    for (int t = 0; t < d; ++t) {
        for (int j = 1; j <= sys_.rank(); ++j) {
            Root up = g1_[static_cast<std::size_t>(t)] + sys_.simple_root(j);
            int u = g1_index(up);
            if (u >= 0) {
                succ_[static_cast<std::size_t>(t)].push_back(u);
                pred_[static_cast<std::size_t>(u)].push_back(t);
            }
        }
    }

    // Entrywise dominance must agree with the reachability closure of the
    // simple-root covers; a mismatch means the poset construction is wrong.
    for (int a = 0; a < d; ++a) {
        std::vector<bool> reach(static_cast<std::size_t>(d), false);
        std::vector<int> stack{a};
        reach[static_cast<std::size_t>(a)] = true;
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            for (int u : succ_[static_cast<std::size_t>(t)])
                if (!reach[static_cast<std::size_t>(u)]) {
                    reach[static_cast<std::size_t>(u)] = true;
                    stack.push_back(u);
                }
        }
        for (int b = 0; b < d; ++b)
            if (g1_leq(a, b) != reach[static_cast<std::size_t>(b)])
                throw std::logic_error("g1 order mismatch between dominance and covers");
    }
}

int CominusculeSpace::g1_index(const Root& r) const {
    auto it = g1_index_.find(r.coeffs);
    return it == g1_index_.end() ? -1 : it->second;
}

bool CominusculeSpace::g1_leq(int a, int b) const {
    const Root& x = g1_[static_cast<std::size_t>(a)];
    const Root& y = g1_[static_cast<std::size_t>(b)];
    for (int j = 1; j <= sys_.rank(); ++j)
        if (y.coeff(j) < x.coeff(j)) return false;
    return true;
}

std::string CominusculeSpace::label() const {
    return to_string(sys_.family()) +
           (sys_.family() == Family::E6 || sys_.family() == Family::E7
                ? ""
                : std::to_string(sys_.rank())) +
           "/P" + std::to_string(node_);
}

CominusculeSpace build_space(Family family, int rank, int node) {
    return CominusculeSpace(family, rank, node);
}

bool SchubertClass::contains(int g1_idx) const {
    return std::binary_search(ideal.begin(), ideal.end(), g1_idx);
}

bool SchubertClass::operator<(const SchubertClass& o) const {
    if (ideal.size() != o.ideal.size()) return ideal.size() < o.ideal.size();
    return ideal < o.ideal;
}

std::vector<Root> ideal_roots(const CominusculeSpace& X, const SchubertClass& w) {
    std::vector<Root> out;
    out.reserve(w.ideal.size());
    for (int t : w.ideal) out.push_back(X.g1()[static_cast<std::size_t>(t)]);
    return out;
}

bool is_valid_class(const CominusculeSpace& X, const SchubertClass& w) {
    // down-closed in the g1 poset
    for (int t : w.ideal)
        for (int p : X.lower_covers(t))
            if (!w.contains(p)) return false;
    // Δ⁺ \ Δ(w) closed under addition
    std::vector<Root> complement;
    for (const Root& r : X.sys().positive_roots()) {
        int t = X.g1_index(r);
        if (t < 0 || !w.contains(t)) complement.push_back(r);
    }
    std::unordered_map<std::vector<int>, bool, IntVecHash> in;
    for (const Root& r : complement) in.emplace(r.coeffs, true);
    for (const Root& x : complement)
        for (const Root& y : complement) {
            auto s = X.sys().add_roots(x, y);
            if (s && s->is_positive() && !in.count(s->coeffs)) return false;
        }
    return true;
}

int HassePoset::index_of(const SchubertClass& w) const {
    auto it = index_.find(w.ideal);
    return it == index_.end() ? -1 : it->second;
}

std::vector<int> HassePoset::upper_of(int id) const {
    std::vector<int> out;
    for (std::size_t k = 0; k < covers.size(); ++k)
        if (covers[k].first == id) out.push_back(covers[k].second);
    return out;
}

std::vector<int> HassePoset::lower_of(int id) const {
    std::vector<int> out;
    for (std::size_t k = 0; k < covers.size(); ++k)
        if (covers[k].second == id) out.push_back(covers[k].first);
    return out;
}

HassePoset enumerate_classes(const CominusculeSpace& X) {
    const int d = X.dim();
    HassePoset poset;

    // Layered BFS over the ideal lattice: extend each ideal by one
    // addable element (all lower covers already present).
    std::vector<SchubertClass> layer{SchubertClass{}};
    while (!layer.empty()) {
        for (SchubertClass& w : layer) {
            poset.index_.emplace(w.ideal, static_cast<int>(poset.classes.size()));
            poset.classes.push_back(std::move(w));
        }
        std::set<std::vector<int>> nextkeys;
        const std::size_t lo = poset.classes.size() - layer.size();
        layer.clear();
        for (std::size_t c = lo; c < poset.classes.size(); ++c) {
            const SchubertClass& w = poset.classes[c];
            for (int t = 0; t < d; ++t) {
                if (w.contains(t)) continue;
                bool addable = true;
                for (int p : X.lower_covers(t))
                    if (!w.contains(p)) { addable = false; break; }
                if (!addable) continue;
                SchubertClass up = w;
                up.ideal.insert(std::lower_bound(up.ideal.begin(), up.ideal.end(), t), t);
                if (nextkeys.insert(up.ideal).second) layer.push_back(std::move(up));
            }
        }
        std::sort(layer.begin(), layer.end());
    }

    for (const SchubertClass& w : poset.classes)
        if (!is_valid_class(X, w))
            throw std::logic_error("enumerated ideal fails the closure criterion");

    for (std::size_t c = 0; c < poset.classes.size(); ++c) {
        const SchubertClass& w = poset.classes[c];
        for (int t = 0; t < d; ++t) {
            if (w.contains(t)) continue;
            bool addable = true;
            for (int p : X.lower_covers(t))
                if (!w.contains(p)) { addable = false; break; }
            if (!addable) continue;
            SchubertClass up = w;
            up.ideal.insert(std::lower_bound(up.ideal.begin(), up.ideal.end(), t), t);
            int u = poset.index_of(up);
            if (u < 0) throw std::logic_error("cover target missing from enumeration");
            poset.covers.emplace_back(static_cast<int>(c), u);
            poset.cover_root.push_back(t);
        }
    }

    poset.info.assign(poset.classes.size(), ClassInfo{});
    poset.info.front().degree = 1;
    for (std::size_t k = 0; k < poset.covers.size(); ++k) {
        auto [lo_id, up_id] = poset.covers[k];
        std::uint64_t& acc = poset.info[static_cast<std::size_t>(up_id)].degree;
        if (__builtin_add_overflow(acc, poset.info[static_cast<std::size_t>(lo_id)].degree, &acc))
            throw std::overflow_error("degree exceeds 64 bits");
    }
    // covers are emitted in class order, so every lower class precedes its
    // upper class and the single pass above is a valid DP; verify anyway.
    for (std::size_t k = 0; k < poset.covers.size(); ++k)
        if (poset.covers[k].first >= poset.covers[k].second)
            throw std::logic_error("cover ordering violated");

    for (std::size_t c = 0; c < poset.classes.size(); ++c) {
        int s = poset.classes[c].dim();
        poset.info[c].extremal = (s == 0 || s == d);
    }
    return poset;
}

std::uint64_t degree(const HassePoset& poset, int class_id) {
    return poset.info[static_cast<std::size_t>(class_id)].degree;
}

namespace {

// Inversion set of `word`, reduced to the minimal representative of its
// W_P-coset by peeling simple roots alpha_j, j != node.
std::vector<Root> minimized_coset_ideal(const CominusculeSpace& X, const WeylWord& word) {
    std::vector<Root> phi = inversion_set(X.sys(), word);
    bool again = true;
    while (again) {
        again = false;
        for (int j = 1; j <= X.sys().rank() && !again; ++j) {
            if (j == X.node()) continue;
            Root aj = X.sys().simple_root(j);
            auto it = std::find(phi.begin(), phi.end(), aj);
            if (it == phi.end()) continue;
            phi.erase(it);
            for (Root& r : phi) r = X.sys().reflect(j, r);
            again = true;
        }
    }
    return phi;
}

std::optional<SchubertClass> dual_candidate(const CominusculeSpace& X, const WeylWord& word,
                                            int codim) {
    std::vector<Root> phi = minimized_coset_ideal(X, word);
    SchubertClass out;
    for (const Root& r : phi) {
        int t = X.g1_index(r);
        if (t < 0) return std::nullopt;
        out.ideal.push_back(t);
    }
    std::sort(out.ideal.begin(), out.ideal.end());
    if (out.dim() != codim) return std::nullopt;
    if (!is_valid_class(X, out)) return std::nullopt;
    return out;
}

SchubertClass dual_once(const CominusculeSpace& X, const SchubertClass& w) {
    std::vector<Root> phi = ideal_roots(X, w);
    WeylWord ww = word_from_inversions(X.sys(), phi);

    std::vector<int> full(static_cast<std::size_t>(X.sys().rank()));
    for (int j = 1; j <= X.sys().rank(); ++j) full[static_cast<std::size_t>(j) - 1] = j;
    std::vector<int> levi;
    for (int j = 1; j <= X.sys().rank(); ++j)
        if (j != X.node()) levi.push_back(j);

    WeylWord w0 = longest_element(X.sys(), full);
    WeylWord w0p = levi.empty() ? WeylWord{} : longest_element(X.sys(), levi);

    // With W^p the minimal representatives of W_P\W and Y_w = cl(B w^-1 o),
    // the dual is w* = w0P w w0 (the transcription of u* = w0 u w0P for
    // u = w^-1 in W^P); it is always length-complementary.  The mirrored
    // product is kept as a fallback only -- both are validated below and
    // the public wrapper additionally checks the involution.
    const int codim = X.dim() - w.dim();
    auto cand = dual_candidate(X, concat(concat(w0p, ww), w0), codim);
    if (cand) return *cand;
    auto mirrored = dual_candidate(X, concat(concat(w0, ww), w0p), codim);
    if (mirrored) return *mirrored;
    throw std::logic_error("poincare_dual: no candidate passes the dimension check");
}

} // namespace

SchubertClass poincare_dual(const CominusculeSpace& X, const SchubertClass& w) {
    if (!is_valid_class(X, w)) throw std::invalid_argument("poincare_dual: invalid class");
    SchubertClass dual = dual_once(X, w);
    if (!(dual_once(X, dual) == w))
        throw std::logic_error("poincare_dual is not an involution on " + X.label());
    return dual;
}

} // namespace schur
