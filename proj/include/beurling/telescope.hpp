#pragma once

#include <map>
#include <optional>
#include <vector>

#include "beurling/algebra.hpp"
#include "beurling/weight.hpp"
#include "beurling/y_graph.hpp"

namespace beurling {

// Norm evidence for the telescope bound: with a geodesic factorization and a
// radial weight of base c >= 2,
//   ||g_y||_gamma <= 1 + sum_j c^{|y_1...y_j|_X} <= c^{|u|_X},
// the middle sum running over strictly increasing exponents.
struct TelescopeNormEvidence {
    Rational base;
    Rational bound;                          // base^{|u|_X}
    std::vector<Rational> prefix_norms;      // gamma(y_1...y_j), j = 1..n-1
    bool strictly_increasing = true;
    std::map<FreeWord, Rational> g_norms;    // ||g_y||_gamma, exact
    bool bounds_hold = true;
};

// The constructive witness that delta_e - delta_u lies in the left ideal
// generated by { delta_e - delta_y : y in Y }:
//   delta_e - delta_u = sum_y g_y * (delta_e - delta_y),
// with g_y a sum of prefix point-masses delta_{y_1...y_j} over the positions
// j where y_{j+1} = y.  The identity is verified by convolution before the
// certificate is returned.
struct TelescopeCertificate {
    FreeWord u;
    YFactorization factorization;
    std::map<FreeWord, FreeElement> g;                    // y -> g_y, zero maps omitted
    std::map<FreeWord, std::vector<FreeWord>> prefixes;   // y -> the points of its summands
    bool geodesic = false;
    bool identity_checked = false;
    std::optional<TelescopeNormEvidence> eq2;

    FreeElement lhs() const {
        return FreeElement::delta(FreeWord{}) - FreeElement::delta(u);
    }
    FreeElement rhs() const {
        FreeElement s;
        for (const auto& [y, gy] : g)
            s += convolve(gy, FreeElement::delta(FreeWord{}) - FreeElement::delta(y));
        return s;
    }
};

inline TelescopeCertificate certificate_from_factorization(const FiniteIndexSubgroup& sub,
                                                           const YFactorization& fact,
                                                           bool geodesic,
                                                           std::optional<Rational> radial_base) {
    TelescopeCertificate cert;
    cert.u = fact.u;
    cert.factorization = fact;
    cert.geodesic = geodesic;

    for (const FreeWord& y : fact.factors) {
        bool in_y = false;
        for (const FreeWord& cand : sub.y())
            if (cand == y) { in_y = true; break; }
        if (!in_y) throw DomainError("telescope factor outside Y: '" + y.str() + "'");
    }

    FreeWord prefix;
    for (const FreeWord& y : fact.factors) {
        cert.g[y].add_term(prefix, Gaussian(1));
        cert.prefixes[y].push_back(prefix);
        if (!sub.contains(prefix)) throw VerifyError("telescope prefix escapes the subgroup");
        prefix = prefix * y;
    }

    if (cert.rhs() != cert.lhs())
        throw VerifyError("telescope identity failed to verify for '" + fact.u.str() + "'");
    cert.identity_checked = true;

    if (radial_base) {
        RadialWeight gamma(*radial_base);
        TelescopeNormEvidence ev;
        ev.base = *radial_base;
        ev.bound = gamma.eval(fact.u);
        FreeWord p;
        for (std::size_t j = 0; j + 1 < fact.factors.size(); ++j) {
            p = p * fact.factors[j];
            Rational norm = gamma.eval(p);
            if (!ev.prefix_norms.empty() && norm <= ev.prefix_norms.back())
                ev.strictly_increasing = false;
            ev.prefix_norms.push_back(std::move(norm));
        }
        for (const auto& [y, gy] : cert.g) {
            NormBound nb = weighted_norm(gy, gamma);
            if (!nb.exact()) throw VerifyError("telescope norms must be exact");
            if (nb.upper > ev.bound) ev.bounds_hold = false;
            ev.g_norms.emplace(y, nb.upper);
        }
        if (geodesic && *radial_base >= 2 && (!ev.bounds_hold || !ev.strictly_increasing))
            throw VerifyError("telescope norm bound violated on a geodesic factorization of '" +
                              fact.u.str() + "'");
        cert.eq2 = std::move(ev);
    }
    return cert;
}

// Certificate for the canonical geodesic factorization of u.
inline TelescopeCertificate telescope_certificate(const FiniteIndexSubgroup& sub, YGraph& graph,
                                                  const FreeWord& u,
                                                  std::optional<Rational> radial_base = Rational(2)) {
    YFactorization fact = graph.geodesic(u);
    return certificate_from_factorization(sub, fact, /*geodesic=*/true, radial_base);
}

// f = sum_y phi_y * (delta_e - delta_y) for augmentation-zero f supported on
// H, with phi_y = -sum_i alpha_i g_y^{(i)} over the support enumeration of f.
struct AugmentationDecomposition {
    FreeElement f;
    std::map<FreeWord, FreeElement> phi;
    bool identity_checked = false;
    // norm evidence for radial gamma: every ||phi_y|| upper is at most
    // sum_i |alpha_i| gamma(u_i) = ||f||_gamma's upper bracket
    std::optional<Rational> f_norm_upper;
    std::map<FreeWord, Rational> phi_norm_upper;
    bool norms_hold = true;

    FreeElement recombined() const {
        FreeElement s;
        for (const auto& [y, p] : phi)
            s += convolve(p, FreeElement::delta(FreeWord{}) - FreeElement::delta(y));
        return s;
    }
};

inline AugmentationDecomposition decompose_augmentation(const FiniteIndexSubgroup& sub, YGraph& graph,
                                                        const FreeElement& f,
                                                        std::optional<Rational> radial_base = Rational(2)) {
    if (!augmentation(f).is_zero())
        throw DomainError("decompose_augmentation: element has nonzero augmentation");
    for (const auto& [w, c] : f.terms())
        if (!sub.contains(w))
            throw DomainError("decompose_augmentation: support escapes the subgroup at '" + w.str() + "'");

    AugmentationDecomposition dec;
    dec.f = f;
    // f = -sum_i alpha_i (delta_e - delta_{u_i}) since the alphas sum to zero
    for (const auto& [u, alpha] : f.terms()) {
        if (u.empty()) continue;   // delta_e - delta_e contributes nothing
        TelescopeCertificate cert = telescope_certificate(sub, graph, u, radial_base);
        for (const auto& [y, gy] : cert.g) dec.phi[y] += (-alpha) * gy;
    }
    for (auto it = dec.phi.begin(); it != dec.phi.end();) {
        it = it->second.is_zero() ? dec.phi.erase(it) : std::next(it);
    }

    if (dec.recombined() != f) throw VerifyError("augmentation decomposition failed to verify");
    dec.identity_checked = true;

    if (radial_base) {
        RadialWeight gamma(*radial_base);
        dec.f_norm_upper = weighted_norm(f, gamma).upper;
        for (const auto& [y, p] : dec.phi) {
            Rational up = weighted_norm(p, gamma).upper;
            if (up > *dec.f_norm_upper) dec.norms_hold = false;
            dec.phi_norm_upper.emplace(y, std::move(up));
        }
    }
    return dec;
}

// Expression of f in the generators delta_e - delta_y of the coset-sum ideal
// J_w(F_m, H): decompose f = sum_i delta_{t_i} * f^{(i)} along the left
// transversal, decompose each augmentation-zero component on H, and
// left-translate back.
struct JGeneratorExpression {
    FreeElement f;
    std::map<FreeWord, FreeElement> psi;
    bool identity_checked = false;

    FreeElement recombined() const {
        FreeElement s;
        for (const auto& [y, p] : psi)
            s += convolve(p, FreeElement::delta(FreeWord{}) - FreeElement::delta(y));
        return s;
    }
};

inline JGeneratorExpression express_in_J_generators(const FiniteIndexSubgroup& sub, YGraph& graph,
                                                    const FreeElement& f,
                                                    std::optional<Rational> radial_base = Rational(2)) {
    std::vector<Gaussian> sums = coset_sums(f, sub);
    for (std::size_t i = 0; i < sums.size(); ++i)
        if (!sums[i].is_zero())
            throw DomainError("element is not in the coset-sum ideal: sum over coset " +
                              std::to_string(i) + " (rep '" + sub.transversal()[i].str() + "') is " +
                              gaussian_str(sums[i]));

    // split f along left cosets: f^{(i)} = delta_{t_i^-1} * (f restricted to t_i H)
    std::vector<FreeElement> components(sub.index());
    for (const auto& [w, c] : f.terms()) {
        std::size_t i = sub.coset_of(w);
        components[i].add_term(sub.transversal()[i].inverse() * w, c);
    }

    JGeneratorExpression ex;
    ex.f = f;
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (components[i].is_zero()) continue;
        AugmentationDecomposition dec = decompose_augmentation(sub, graph, components[i], radial_base);
        FreeElement shift = FreeElement::delta(sub.transversal()[i]);
        for (const auto& [y, p] : dec.phi) ex.psi[y] += convolve(shift, p);
    }
    for (auto it = ex.psi.begin(); it != ex.psi.end();) {
        it = it->second.is_zero() ? ex.psi.erase(it) : std::next(it);
    }

    if (ex.recombined() != f) throw VerifyError("J-generator expression failed to verify");
    ex.identity_checked = true;
    return ex;
}

// Images of the Y-generators downstairs: { delta_e - delta_{q(y)} } generate
// the coset-sum ideal of the image subgroup in the finite quotient algebra.
// Generators that collapse to zero (q(y) = e) are reported separately.
struct PulledBackGenerators {
    std::vector<std::pair<FreeWord, QuotientElement>> generators;
    std::vector<FreeWord> degenerate;
};

inline PulledBackGenerators pull_back_generators(const FiniteIndexSubgroup& sub) {
    PulledBackGenerators out;
    Permutation id = Permutation::identity(sub.hom().degree());
    for (const FreeWord& y : sub.y()) {
        Permutation img = sub.hom().apply(y);
        if (img == id) {
            out.degenerate.push_back(y);
            continue;
        }
        out.generators.emplace_back(y, QuotientElement::delta(id) - QuotientElement::delta(img));
    }
    return out;
}

} // namespace beurling
