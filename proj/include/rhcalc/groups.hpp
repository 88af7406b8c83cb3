#pragma once

// Rational homotopy data of structure groups. A compact connected Lie group
// G is rationally a product of odd spheres; generator_degrees lists them.
// U(n) has degrees 1, 3, …, 2n−1; SU(n) drops the 1; PU(n) is rationally
// SU(n); a torus T^k contributes k copies of degree 1.
//
// Only U, SU, PU and tori (and finite products) are catalogued. Sp(n), SO(n)
// and the exceptional groups would slot in as further GroupKind values.

#include <rhcalc/errors.hpp>
#include <rhcalc/graded.hpp>

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace rhcalc {

enum class GroupKind { Unitary, SpecialUnitary, ProjectiveUnitary, Torus };

struct GroupFactor {
    GroupKind kind;
    unsigned n;  // rank parameter; the exponent k for T^k

    std::string name() const {
        switch (kind) {
            case GroupKind::Unitary: return "U(" + std::to_string(n) + ")";
            case GroupKind::SpecialUnitary: return "SU(" + std::to_string(n) + ")";
            case GroupKind::ProjectiveUnitary: return "PU(" + std::to_string(n) + ")";
            case GroupKind::Torus: return "T^" + std::to_string(n);
        }
        return {};
    }

    std::vector<int> degrees() const {
        std::vector<int> ds;
        switch (kind) {
            case GroupKind::Unitary:
                for (unsigned i = 1; i <= n; ++i) ds.push_back(static_cast<int>(2 * i - 1));
                break;
            case GroupKind::SpecialUnitary:
            case GroupKind::ProjectiveUnitary:
                for (unsigned i = 2; i <= n; ++i) ds.push_back(static_cast<int>(2 * i - 1));
                break;
            case GroupKind::Torus: ds.assign(n, 1); break;
        }
        return ds;
    }
};

struct LieGroupModel {
    std::string spec;                     // canonical, e.g. "U(2)xT^1"
    std::vector<GroupFactor> factors;
    std::vector<int> generator_degrees;   // sorted multiset of odd degrees
    std::string notes;

    bool has_projective_factor() const {
        return std::any_of(factors.begin(), factors.end(),
                           [](const GroupFactor& f) { return f.kind == GroupKind::ProjectiveUnitary; });
    }

    /// π_*(G)⊗Q as a graded space.
    GradedDims homotopy() const {
        GradedDims g;
        for (int d : generator_degrees) g.add(d, 1);
        return g;
    }
};

inline LieGroupModel make_group(std::vector<GroupFactor> factors) {
    LieGroupModel g;
    g.factors = std::move(factors);
    for (const auto& f : g.factors) {
        if (!g.spec.empty()) g.spec += "x";
        g.spec += f.name();
        auto ds = f.degrees();
        g.generator_degrees.insert(g.generator_degrees.end(), ds.begin(), ds.end());
    }
    std::sort(g.generator_degrees.begin(), g.generator_degrees.end());
    bool projective = false, torus = false;
    for (const auto& f : g.factors) {
        projective = projective || f.kind == GroupKind::ProjectiveUnitary;
        torus = torus || f.kind == GroupKind::Torus;
    }
    g.notes = "pi_*(U(n)) (x) Q = Q(s_1..s_n), |s_i| = 2i-1";
    if (projective) g.notes += "; PU(n) ~_Q SU(n) via the splitting G_0 = P(G_0) x Z(G_0)";
    if (torus) g.notes += "; T^k = U(1)^k";
    return g;
}

/// Grammar: ATOM := U(n) | SU(n) | PU(n) | T^k  (n >= 1, k >= 0);
/// SPEC := ATOM ("x" ATOM)*. Whitespace is ignored; "×" is accepted for "x".
inline LieGroupModel parse_group(std::string_view spec) {
    std::string s;
    for (std::size_t i = 0; i < spec.size(); ++i) {
        if (std::isspace(static_cast<unsigned char>(spec[i]))) continue;
        if (spec.substr(i, 2) == "\xC3\x97") {  // U+00D7 MULTIPLICATION SIGN
            s += 'x';
            ++i;
            continue;
        }
        s += spec[i];
    }
    auto fail = [&](const std::string& why) -> InputError {
        return InputError("group spec \"" + std::string(spec) + "\": " + why);
    };
    if (s.empty()) throw fail("empty");

    auto read_number = [&](std::size_t& pos) {
        const std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw fail("expected a number at position " + std::to_string(start));
        if (pos - start > 6) throw fail("rank parameter too large");
        return static_cast<unsigned>(std::stoul(s.substr(start, pos - start)));
    };

    std::vector<GroupFactor> factors;
    std::size_t pos = 0;
    while (true) {
        GroupFactor f{};
        auto starts = [&](std::string_view prefix) { return std::string_view(s).substr(pos, prefix.size()) == prefix; };
        if (starts("T^")) {
            pos += 2;
            f = {GroupKind::Torus, read_number(pos)};
        } else {
            if (starts("SU(")) { f.kind = GroupKind::SpecialUnitary; pos += 3; }
            else if (starts("PU(")) { f.kind = GroupKind::ProjectiveUnitary; pos += 3; }
            else if (starts("U(")) { f.kind = GroupKind::Unitary; pos += 2; }
            else throw fail("unknown group atom at position " + std::to_string(pos));
            f.n = read_number(pos);
            if (pos >= s.size() || s[pos] != ')') throw fail("missing ')'");
            ++pos;
            if (f.n == 0) throw fail(f.name() + " needs n >= 1");
        }
        factors.push_back(f);
        if (pos == s.size()) break;
        if (s[pos] != 'x') throw fail("expected 'x' between factors at position " + std::to_string(pos));
        ++pos;
    }
    return make_group(std::move(factors));
}

/// Even generator degrees of H^*(BG;Q): each loop-space degree d becomes d+1.
inline std::vector<int> bg_degrees(const LieGroupModel& g) {
    std::vector<int> out;
    for (int d : g.generator_degrees) out.push_back(d + 1);
    return out;
}

}  // namespace rhcalc
