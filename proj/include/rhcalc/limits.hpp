#pragma once

// Direct systems of graded vector spaces: the cohomology of an inverse system
// of complexes X₀ ← X₁ ← … ← X_K, and a finite-window estimate of its colimit
// (the Čech cohomology of the inverse limit).

#include <rhcalc/errors.hpp>
#include <rhcalc/exact_linalg.hpp>
#include <rhcalc/graded.hpp>
#include <rhcalc/simplicial.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace rhcalc {

class DirectSystem {
public:
    using Transition = std::map<int, RationalMatrix>;

    /// transitions[j][k] maps degree k of stage j to degree k of stage j+1 and
    /// has shape dim_{j+1}(k) × dim_j(k). A degree may be omitted when either
    /// side is zero.
    DirectSystem(std::vector<GradedDims> stages, std::vector<Transition> transitions)
        : stages_(std::move(stages)), transitions_(std::move(transitions)) {
        if (stages_.empty()) throw InputError("direct system needs at least one stage");
        if (transitions_.size() + 1 != stages_.size())
            throw InputError("direct system with " + std::to_string(stages_.size()) + " stages needs " +
                             std::to_string(stages_.size() - 1) + " transitions, got " +
                             std::to_string(transitions_.size()));
        for (std::size_t j = 0; j < stages_.size(); ++j) {
            if (!stages_[j].is_finite()) throw InputError("stage " + std::to_string(j) + " has an UNBOUNDED dimension");
            for (const auto& [d, v] : stages_[j].entries())
                if (d < 0) throw InputError("stage " + std::to_string(j) + " has negative degree " + std::to_string(d));
        }
        for (std::size_t j = 0; j < transitions_.size(); ++j) {
            for (const auto& [d, m] : transitions_[j]) {
                const auto rows = stages_[j + 1][d].value();
                const auto cols = stages_[j][d].value();
                if (m.rows() != rows || m.cols() != cols)
                    throw InputError("transition " + std::to_string(j) + " degree " + std::to_string(d) + " has shape " +
                                     std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
                                     std::to_string(rows) + "x" + std::to_string(cols));
            }
            for (int d : degrees()) {
                if (transitions_[j].count(d) != 0) continue;
                if (stages_[j + 1][d].value() != 0 && stages_[j][d].value() != 0)
                    throw InputError("transition " + std::to_string(j) + " is missing degree " + std::to_string(d));
            }
        }
    }

    std::size_t stage_count() const noexcept { return stages_.size(); }
    const GradedDims& stage(std::size_t j) const { return stages_.at(j); }

    /// Transition matrix for stage j → j+1 in `degree`, zero if not stored.
    RationalMatrix transition(std::size_t j, int degree) const {
        const auto& t = transitions_.at(j);
        if (auto it = t.find(degree); it != t.end()) return it->second;
        return RationalMatrix(stages_[j + 1][degree].value(), stages_[j][degree].value());
    }

    /// Union of the stage supports, ascending.
    std::vector<int> degrees() const {
        std::set<int> ds;
        for (const auto& s : stages_)
            for (const auto& [d, v] : s.entries()) ds.insert(d);
        return {ds.begin(), ds.end()};
    }

private:
    std::vector<GradedDims> stages_;
    std::vector<Transition> transitions_;
};

/// maps[j] : complexes[j+1] → complexes[j]; the stage-j → j+1 transition is
/// the pullback along maps[j].
inline DirectSystem system_from_maps(const std::vector<std::shared_ptr<const SimplicialComplex>>& complexes,
                                     const std::vector<SimplicialMap>& maps) {
    if (complexes.empty()) throw InputError("tower needs at least one complex");
    if (maps.size() + 1 != complexes.size())
        throw InputError("tower with " + std::to_string(complexes.size()) + " complexes needs " +
                         std::to_string(complexes.size() - 1) + " maps");
    std::vector<GradedDims> stages;
    for (const auto& k : complexes) stages.push_back(betti(*k));
    std::vector<DirectSystem::Transition> transitions;
    for (std::size_t j = 0; j < maps.size(); ++j) {
        if (!(maps[j].source() == *complexes[j + 1]) || !(maps[j].target() == *complexes[j]))
            throw InputError("map " + std::to_string(j) + " must go from complex " + std::to_string(j + 1) +
                             " to complex " + std::to_string(j));
        DirectSystem::Transition t;
        const int top = std::max(complexes[j]->dimension(), complexes[j + 1]->dimension());
        for (int d = 0; d <= top; ++d) {
            auto m = induced_cohomology_map(maps[j], d);
            if (!m.empty()) t.emplace(d, std::move(m));
        }
        transitions.push_back(std::move(t));
    }
    return DirectSystem(std::move(stages), std::move(transitions));
}

/// s_j = rank of the composite stage j → stage K (the last one); s_K = dim_K.
inline std::vector<std::uint64_t> stable_ranks(const DirectSystem& s, int degree) {
    const std::size_t K = s.stage_count() - 1;
    std::vector<std::uint64_t> out(K + 1);
    auto composite = RationalMatrix::identity(s.stage(K)[degree].value());
    out[K] = composite.rows();
    for (std::size_t j = K; j-- > 0;) {
        composite = composite * s.transition(j, degree);
        out[j] = rank(composite);
    }
    return out;
}

enum class ColimitStatus { Stable, NotStabilized };

struct DegreeColimit {
    ColimitStatus status = ColimitStatus::Stable;
    std::uint64_t dimension = 0;  // exact when Stable, lower bound otherwise
    std::vector<std::uint64_t> rank_sequence;
};

struct ColimitReport {
    std::size_t window = 0;
    std::map<int, DegreeColimit> degrees;

    /// Stable degrees as finite dims, the rest as UNBOUNDED with lower bound.
    GradedDims dims() const {
        GradedDims g;
        for (const auto& [d, c] : degrees)
            g.set(d, c.status == ColimitStatus::Stable ? ExtDim(c.dimension) : ExtDim::unbounded(c.dimension));
        return g;
    }

    bool all_stable() const {
        return std::all_of(degrees.begin(), degrees.end(),
                           [](const auto& e) { return e.second.status == ColimitStatus::Stable; });
    }
};

/// A degree is Stable when the last `window` ranks agree and the last
/// `window` stage dimensions agree. This is a heuristic: no finite truncation
/// certifies a colimit, so everything else is reported NotStabilized with
/// the largest rank seen as a lower bound.
inline ColimitReport colimit_dims(const DirectSystem& s, std::size_t window = 2) {
    if (window < 1) throw InputError("stability window must be at least 1");
    if (window > s.stage_count())
        throw InputError("stability window " + std::to_string(window) + " exceeds the " +
                         std::to_string(s.stage_count()) + " available stages");
    ColimitReport report;
    report.window = window;
    const std::size_t n = s.stage_count();
    for (int d : s.degrees()) {
        DegreeColimit c;
        c.rank_sequence = stable_ranks(s, d);
        bool stable = true;
        for (std::size_t j = n - window; j < n; ++j) {
            stable = stable && c.rank_sequence[j] == c.rank_sequence[n - 1] &&
                     s.stage(j)[d].value() == s.stage(n - 1)[d].value();
        }
        if (stable) {
            c.status = ColimitStatus::Stable;
            c.dimension = c.rank_sequence[n - 1];
        } else {
            c.status = ColimitStatus::NotStabilized;
            c.dimension = *std::max_element(c.rank_sequence.begin(), c.rank_sequence.end());
        }
        report.degrees.emplace(d, std::move(c));
    }
    return report;
}

}  // namespace rhcalc
