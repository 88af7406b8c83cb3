#pragma once

// Rational homotopy of mapping spaces F(X,G), gauge groups, projective gauge
// groups and unitary groups of continuous-trace algebras.
//
// Everything reduces to one formula: with Ȟ*(X;Q) graded nonpositively,
//
//     π_k(F(X,G)₀) ⊗ Q  =  Σ_{d ∈ degrees(G)}  b^{d−k}(X),      k ≥ 1,
//
// i.e. the degree ≥ 1 part of Ȟ*(X;Q) ⊗ π_*(G)⊗Q. The degree-0 part of the
// same tensor is the rationalized π₀ of the whole mapping space and is
// reported separately. The rational H-type is a product of Eilenberg–MacLane
// spaces with the standard multiplication, so the Samelson bracket vanishes
// and these dimensions determine the answer.

#include <rhcalc/errors.hpp>
#include <rhcalc/graded.hpp>
#include <rhcalc/groups.hpp>

#include <map>
#include <string>
#include <vector>

namespace rhcalc {

inline constexpr const char* kHType = "product of rational Eilenberg-MacLane spaces, standard multiplication";
inline constexpr const char* kDegreeZeroLabel = "rationalized pi_0 of full mapping space";

enum class SamelsonBracket { Zero };

/// One summand s ⊗ x with s of degree d in π_*(G)⊗Q and x in Hⁿ(X;Q),
/// landing in homotopy degree d − n.
struct Contribution {
    int generator_degree;
    int cohomology_degree;
    ExtDim multiplicity;

    int homotopy_degree() const noexcept { return generator_degree - cohomology_degree; }
    friend bool operator==(const Contribution&, const Contribution&) = default;
};

struct HomotopyReport {
    GradedDims identity_component;  // degrees >= 1
    ExtDim degree_zero;
    std::string degree_zero_label = kDegreeZeroLabel;
    std::vector<Contribution> contributions;
    SamelsonBracket samelson_bracket = SamelsonBracket::Zero;
    std::string h_type = kHType;
    std::vector<std::string> notes;

    friend bool operator==(const HomotopyReport&, const HomotopyReport&) = default;
};

namespace detail {

inline void check_cohomology(const GradedDims& cohomology) {
    for (const auto& [n, b] : cohomology.entries())
        if (n < 0) throw InputError("cohomology has negative degree " + std::to_string(n));
    if (cohomology[0].lower_bound() == 0) throw InputError("H^0 is zero: the space X must be nonempty");
}

}  // namespace detail

/// π_*(F(X,G)₀)⊗Q from the conventional Betti numbers of X. UNBOUNDED
/// (not stabilized) cohomology poisons exactly the degrees it feeds, which
/// come out UNBOUNDED with a lower bound.
inline HomotopyReport mapping_space_homotopy(const GradedDims& cohomology, const LieGroupModel& g) {
    detail::check_cohomology(cohomology);
    HomotopyReport r;

    std::map<int, std::uint64_t> generator_count;
    for (int d : g.generator_degrees) ++generator_count[d];
    for (const auto& [d, count] : generator_count)
        for (const auto& [n, b] : cohomology.entries())
            if (d - n >= 0) r.contributions.push_back({d, n, scale(b, count)});

    for (const auto& c : r.contributions) {
        if (c.homotopy_degree() == 0) r.degree_zero += c.multiplicity;
        else r.identity_component.add(c.homotopy_degree(), c.multiplicity);
    }

    if (cohomology.is_finite()) {
        // Second route through the graded-space operations; both must agree.
        const auto full = tensor(regrade_nonpositive(cohomology), g.homotopy());
        if (truncate_min(full, 1) != r.identity_component || full[0] != r.degree_zero)
            throw InvariantViolation("contribution sum disagrees with the truncated tensor product");
    }

    r.notes.push_back("Theorem B: pi_*(F(X,G)_0) (x) Q = H^*(X;Q) (x)~ (pi_*(G) (x) Q), Cech cohomology graded "
                      "nonpositively; G = " + g.spec);
    r.notes.push_back("degree 0 of the tensor is reported separately as the " + std::string(kDegreeZeroLabel));
    if (!cohomology.is_finite())
        r.notes.push_back("some cohomology degrees did not stabilize; the homotopy degrees they feed are lower bounds");
    return r;
}

/// Gauge group of any principal G-bundle over X. No bundle argument exists:
/// the rational answer depends only on X and G.
inline HomotopyReport gauge_group_homotopy(const GradedDims& cohomology, const LieGroupModel& g) {
    auto r = mapping_space_homotopy(cohomology, g);
    r.notes.push_back("Theorem C: G(zeta)_0 ~_Q F(X,G)_0, bundle-independent");
    return r;
}

/// Projective gauge group of a principal PG-bundle. Takes G itself, which
/// must be a compact connected Lie group from the catalog (not PG).
inline HomotopyReport projective_gauge_homotopy(const GradedDims& cohomology, const LieGroupModel& g) {
    if (g.has_projective_factor())
        throw InputError("projective gauge groups take the compact connected Lie group G, not PG (Theorem D "
                         "hypothesis); got \"" + g.spec + "\", pass e.g. U(n) instead of PU(n)");
    auto r = mapping_space_homotopy(cohomology, g);
    r.notes.push_back("Theorem D: P(zeta)_0 ~_Q F(X,G)_0, bundle-independent");
    return r;
}

/// Unitary group of the continuous-trace algebra of a principal PU(n)-bundle.
inline HomotopyReport ua_homotopy(const GradedDims& cohomology, unsigned n) {
    if (n == 0) throw InputError("ua: n must be at least 1");
    auto r = projective_gauge_homotopy(cohomology, make_group({{GroupKind::Unitary, n}}));
    r.notes.push_back("Theorem A: pi_*((UA_zeta)_0) (x) Q = H^*(X;Q) (x)~ Q(s_1..s_n), |s_i| = 2i-1; "
                      "independent of the bundle zeta");
    return r;
}

/// π_q(F(X, K(Q,p))) = H^{p−q}(X;Q) for 0 ≤ q ≤ p.
inline GradedDims thom_homotopy(const GradedDims& cohomology, int p) {
    if (p < 1) throw InputError("thom: p must be at least 1");
    GradedDims out;
    for (int q = 0; q <= p; ++q) out.set(q, cohomology[p - q]);
    return out;
}

/// Independent route through the classifying space: G ≃ Ω F(X,BG) at the
/// level of identity components, with (BG)_Q a product of K(Q,e) over the
/// even degrees e, so π_k = Σ_e π_{k+1} F(X, K(Q,e)) by Thom's formula.
inline GradedDims bg_loop_oracle(const GradedDims& cohomology, const LieGroupModel& g) {
    detail::check_cohomology(cohomology);
    GradedDims out;
    for (int e : bg_degrees(g)) {
        const auto factor = thom_homotopy(cohomology, e);
        for (const auto& [q, dim] : factor.entries())
            if (q - 1 >= 1) out.add(q - 1, dim);
    }
    return out;
}

struct SamelsonAlgebra {
    GradedDims dims;
    SamelsonBracket bracket = SamelsonBracket::Zero;
    std::string classification;
};

/// The rational Samelson algebra of the identity component: abelian, so the
/// graded dimensions are a complete invariant of the rational H-type.
inline SamelsonAlgebra samelson_algebra(const HomotopyReport& report) {
    return {report.identity_component, report.samelson_bracket,
            report.h_type + "; bracket identically zero, so the graded dimensions determine the rational H-type"};
}

}  // namespace rhcalc
