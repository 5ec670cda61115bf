#include "schur/rigidity.hpp"

#include <algorithm>
#include <stdexcept>

namespace schur {

namespace {

bool pair_less(const std::pair<Root, Root>& x, const std::pair<Root, Root>& y) {
    // lexicographic on (gamma, partner); gamma is stored second
    if (x.second != y.second) return x.second < y.second;
    return x.first < y.first;
}

} // namespace

std::vector<std::pair<Root, Root>> h1_witnesses(const CominusculeSpace& X, const SchubertClass& w,
                                                const AJInvariant& aj) {
    (void)w;
    const auto& sys = X.sys();

    std::vector<Root> betas = extremal_weights(X, aj.J, 0, 1, WeightSide::lowest);
    // Lowest weights of Δ(g_{0,1}) are exactly the simple roots α_j, j ∈ J.
    {
        std::vector<Root> expected;
        for (int j : aj.J) expected.push_back(sys.simple_root(j));
        std::sort(expected.begin(), expected.end());
        std::vector<Root> got = betas;
        std::sort(got.begin(), got.end());
        if (got != expected)
            throw std::logic_error("lowest weights of g_{0,1} are not the simple roots of J");
    }

    std::vector<Root> gammas = extremal_weights(X, aj.J, 1, aj.a, WeightSide::highest);
    std::vector<Root> slice = grade_slice(X, aj.J, 1, aj.a);

    std::vector<std::pair<Root, Root>> out;
    for (const Root& gamma : gammas) {
        for (const Root& beta : betas) {
            if (sys.is_root(gamma - beta)) continue;        // (i)
            if (!sys.is_root(gamma + beta)) continue;       // (ii), non-vanishing
            std::vector<Root> hits;                         // (ii), uniqueness
            for (const Root& delta : slice)
                if (sys.is_root(delta + beta)) hits.push_back(delta);
            if (hits.size() == 1 && hits.front() == gamma) out.emplace_back(beta, gamma);
        }
    }
    std::sort(out.begin(), out.end(), pair_less);
    return out;
}

std::vector<std::pair<Root, Root>> h2_witnesses(const CominusculeSpace& X, const SchubertClass& w,
                                                const AJInvariant& aj) {
    (void)w;
    if (aj.a == 0) return {}; // g_{1,a-1} = g_{1,-1} = 0

    const auto& sys = X.sys();
    std::vector<Root> epsilons = extremal_weights(X, aj.J, 1, aj.a - 1, WeightSide::highest);
    std::vector<Root> gammas = extremal_weights(X, aj.J, 1, aj.a, WeightSide::highest);
    std::vector<Root> slice = grade_slice(X, aj.J, 1, aj.a);

    std::vector<std::pair<Root, Root>> out;
    for (const Root& gamma : gammas) {
        for (const Root& eps : epsilons) {
            if (!sys.is_root(eps - gamma)) continue;        // (i)
            std::vector<Root> hits;                         // (ii), uniqueness
            for (const Root& delta : slice)
                if (sys.is_root(eps - delta)) hits.push_back(delta);
            if (hits.size() == 1 && hits.front() == gamma) out.emplace_back(eps, gamma);
        }
    }
    std::sort(out.begin(), out.end(), pair_less);
    return out;
}

ClassInfo evaluate_class(const CominusculeSpace& X, const SchubertClass& w, bool extremal) {
    ClassInfo info;
    info.extremal = extremal;
    info.classified = true;
    if (extremal) {
        info.rigid = true;
        info.smooth = true;
        return info;
    }
    info.aj = compute_aj(X, w);
    info.h1 = h1_witnesses(X, w, *info.aj);
    info.h2 = h2_witnesses(X, w, *info.aj);
    info.rigid = info.h1.empty() && info.h2.empty();
    info.smooth = info.aj->a == 0;
    return info;
}

void classify(const CominusculeSpace& X, HassePoset& poset, Execution mode) {
    const int n = static_cast<int>(poset.classes.size());
    const int d = X.dim();
    if (mode == Execution::serial) {
        for (int c = 0; c < n; ++c) {
            const SchubertClass& w = poset.classes[static_cast<std::size_t>(c)];
            ClassInfo fresh = evaluate_class(X, w, w.dim() == 0 || w.dim() == d);
            fresh.degree = poset.info[static_cast<std::size_t>(c)].degree;
            poset.info[static_cast<std::size_t>(c)] = std::move(fresh);
        }
        return;
    }
    std::exception_ptr err = nullptr;
#pragma omp parallel for schedule(dynamic)
    for (int c = 0; c < n; ++c) {
        try {
            const SchubertClass& w = poset.classes[static_cast<std::size_t>(c)];
            ClassInfo fresh = evaluate_class(X, w, w.dim() == 0 || w.dim() == d);
            fresh.degree = poset.info[static_cast<std::size_t>(c)].degree;
            poset.info[static_cast<std::size_t>(c)] = std::move(fresh);
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
}

FlexCertificate flex_certificate(const CominusculeSpace& X, const SchubertClass& w) {
    const auto& sys = X.sys();
    AJInvariant aj = compute_aj(X, w); // rejects extremal classes
    auto h1 = h1_witnesses(X, w, aj);
    auto h2 = h2_witnesses(X, w, aj);
    if (h1.empty() && h2.empty())
        throw std::invalid_argument("flex_certificate: class is rigid");

    FlexCertificate cert;
    if (!h1.empty()) {
        cert.kind = FlexCertificate::Kind::H1;
        cert.partner = h1.front().first;
        cert.gamma = h1.front().second;
    } else {
        cert.kind = FlexCertificate::Kind::H2;
        cert.partner = h2.front().first;
        cert.gamma = h2.front().second;
    }

    int gidx = X.g1_index(cert.gamma);
    cert.divisor = w;
    cert.divisor.ideal.erase(
        std::remove(cert.divisor.ideal.begin(), cert.divisor.ideal.end(), gidx),
        cert.divisor.ideal.end());

    auto& checks = cert.proof_checks;
    {
        auto pis = extremal_weights(X, aj.J, 1, aj.a, WeightSide::highest);
        checks.emplace_back("gamma_in_Pi_g1a",
                            std::find(pis.begin(), pis.end(), cert.gamma) != pis.end());
    }
    checks.emplace_back("divisor_is_valid_class",
                        gidx >= 0 && is_valid_class(X, cert.divisor));

    std::vector<Root> divisor_roots = ideal_roots(X, cert.divisor);
    auto in_divisor = [&](const Root& r) {
        int t = X.g1_index(r);
        return t >= 0 && cert.divisor.contains(t);
    };
    std::vector<Root> slice = grade_slice(X, aj.J, 1, aj.a);

    if (cert.kind == FlexCertificate::Kind::H1) {
        const Root& beta = cert.partner;
        checks.emplace_back("h1_i_gamma_minus_beta_not_root", !sys.is_root(cert.gamma - beta));
        {
            std::vector<Root> hits;
            for (const Root& delta : slice)
                if (sys.is_root(delta + beta)) hits.push_back(delta);
            checks.emplace_back("h1_ii_unique_bracket",
                                hits.size() == 1 && hits.front() == cert.gamma);
        }
        // n' = <B+C> ⊕ n_{w'} closes: ad(B) keeps n_{w'} inside itself.
        bool closes = true;
        for (const Root& mu : divisor_roots) {
            Root s = mu + beta;
            if (sys.is_root(s) && !in_divisor(s)) { closes = false; break; }
        }
        checks.emplace_back("h1_nprime_subalgebra", closes);
    } else {
        const Root& eps = cert.partner;
        checks.emplace_back("h2_i_eps_minus_gamma_root", sys.is_root(eps - cert.gamma));
        {
            std::vector<Root> hits;
            for (const Root& delta : slice)
                if (sys.is_root(eps - delta)) hits.push_back(delta);
            checks.emplace_back("h2_ii_unique_bracket",
                                hits.size() == 1 && hits.front() == cert.gamma);
        }
        // [n_{w'}, E] lands in h_eps ⊕ g_0^+: every ε − μ that is a root is
        // positive with Z_i-grade 0 (the ε = μ Cartan case cannot occur,
        // the grades differ).
        bool contained = true;
        for (const Root& mu : divisor_roots) {
            if (mu == eps) continue;
            Root s = eps - mu;
            if (!sys.is_root(s)) continue;
            if (!(s.is_positive() && s.coeff(X.node()) == 0)) { contained = false; break; }
        }
        checks.emplace_back("h2_ad_E_in_heps_g0plus", contained);
        // [n_{w'}, g_0^+] stays inside n_{w'}; together with the weight-
        // automatic [n_{w'}, h] ⊆ n_{w'} this closes the adjoint orbit.
        bool stable = true;
        for (const Root& mu : divisor_roots) {
            for (const Root& nu : sys.positive_roots()) {
                if (nu.coeff(X.node()) != 0) continue;
                Root s = mu - nu;
                if (sys.is_root(s) && s.is_positive() && !in_divisor(s)) { stable = false; break; }
            }
            if (!stable) break;
        }
        checks.emplace_back("h2_nprime_g0plus_stable", stable);
    }

    for (const auto& [name, ok] : checks)
        if (!ok)
            throw std::logic_error("flex_certificate proof check failed: " + name + " on " +
                                   X.label());
    return cert;
}

std::uint64_t count_rigid(const HassePoset& poset) {
    std::uint64_t n = 0;
    for (const ClassInfo& info : poset.info)
        if (info.rigid) ++n;
    return n;
}

} // namespace schur
