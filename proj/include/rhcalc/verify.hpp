#pragma once

// Cross-checks of the homotopy calculator over a corpus of spaces and groups:
// the tensor formula against the classifying-space route, sphere and point
// laws, Thom consistency, the Samelson contract, and optional Betti fixtures.

#include <rhcalc/gauge.hpp>
#include <rhcalc/graded.hpp>
#include <rhcalc/groups.hpp>

#include <algorithm>
#include <cstdint>
#include <future>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace rhcalc {

struct VerifyCase {
    std::string name;
    GradedDims cohomology;                                // conventional grading
    std::optional<std::vector<std::uint64_t>> expected_betti;
};

struct VerifyFailure {
    std::string case_name;
    std::string group;
    std::string check;
    std::string detail;
};

struct VerifyOutcome {
    std::size_t checks = 0;
    std::vector<VerifyFailure> failures;
    bool passed() const noexcept { return failures.empty(); }
};

inline const std::vector<std::string>& default_verify_groups() {
    static const std::vector<std::string> groups{"U(1)", "U(2)", "U(3)", "SU(2)", "SU(3)", "T^2", "U(2)xT^1"};
    return groups;
}

inline std::string describe_contributions(const HomotopyReport& r) {
    std::ostringstream os;
    for (const auto& c : r.contributions)
        os << " [d=" << c.generator_degree << ", n=" << c.cohomology_degree << ", mult=" << c.multiplicity.str()
           << " -> pi_" << c.homotopy_degree() << "]";
    return os.str();
}

/// Nonzero degree k when the cohomology is that of S^k.
inline std::optional<int> sphere_dimension(const GradedDims& h) {
    if (h.entries().size() != 2 || h[0] != ExtDim(1)) return std::nullopt;
    const auto [k, dim] = *h.entries().rbegin();
    if (k < 1 || dim != ExtDim(1)) return std::nullopt;
    return k;
}

namespace detail {

inline VerifyOutcome verify_case(const VerifyCase& c, const std::vector<LieGroupModel>& groups, int max_degree) {
    VerifyOutcome out;
    auto fail = [&](const std::string& group, const std::string& check, const std::string& detail) {
        out.failures.push_back({c.name, group, check, detail});
    };

    if (c.expected_betti) {
        const auto& exp = *c.expected_betti;
        const int top = std::max(static_cast<int>(exp.size()) - 1, c.cohomology.max_degree().value_or(0));
        for (int d = 0; d <= top; ++d) {
            ++out.checks;
            const ExtDim want = d < static_cast<int>(exp.size()) ? ExtDim(exp[static_cast<std::size_t>(d)]) : ExtDim(0);
            if (c.cohomology[d] != want) {
                fail("-", "betti fixture", "degree " + std::to_string(d) + ": fixture says " + want.str() +
                                               ", computed " + c.cohomology[d].str());
                break;
            }
        }
    }

    const bool is_point = c.cohomology == GradedDims{{0, 1}};
    const auto sphere = sphere_dimension(c.cohomology);

    for (const auto& g : groups) {
        const auto report = mapping_space_homotopy(c.cohomology, g);
        const auto oracle = bg_loop_oracle(c.cohomology, g);
        const auto gh = g.homotopy();

        ++out.checks;
        if (report.samelson_bracket != SamelsonBracket::Zero || report.h_type != kHType)
            fail(g.spec, "samelson contract", "report lacks the zero bracket or the H-type classification");

        for (int k = 1; k <= max_degree; ++k) {
            ++out.checks;
            if (report.identity_component[k] != oracle[k]) {
                fail(g.spec, "oracle equivalence",
                     "degree " + std::to_string(k) + ": tensor formula " + report.identity_component[k].str() +
                         ", classifying-space route " + oracle[k].str() + ";" + describe_contributions(report));
                break;
            }
        }

        if (sphere) {
            for (int k = 1; k <= max_degree; ++k) {
                ++out.checks;
                const ExtDim want = gh[k] + gh[k + *sphere];
                if (report.identity_component[k] != want) {
                    fail(g.spec, "sphere law",
                         "S^" + std::to_string(*sphere) + " degree " + std::to_string(k) + ": got " +
                             report.identity_component[k].str() + ", expected " + want.str() + ";" +
                             describe_contributions(report));
                    break;
                }
            }
        }

        if (is_point) {
            ++out.checks;
            const auto expected = truncate_min(gh, 1);
            const bool ok = report.identity_component == expected &&
                            gauge_group_homotopy(c.cohomology, g).identity_component == expected &&
                            (g.has_projective_factor() ||
                             projective_gauge_homotopy(c.cohomology, g).identity_component == expected);
            if (!ok) fail(g.spec, "point law", "X = point does not reproduce the catalog degrees;" + describe_contributions(report));
        }
    }

    if (is_point) {
        for (unsigned n = 1; n <= 4; ++n) {
            ++out.checks;
            GradedDims want;
            for (unsigned i = 1; i <= n; ++i) want.set(static_cast<int>(2 * i - 1), 1);
            if (ua_homotopy(c.cohomology, n).identity_component != want)
                fail("U(" + std::to_string(n) + ")", "point law", "ua(point, n) is not Q in degrees 1,3,...,2n-1");
        }
    }

    // Thom consistency against the circle group.
    const auto circle = parse_group("T^1");
    const auto thom = thom_homotopy(c.cohomology, 1);
    const auto mapping = mapping_space_homotopy(c.cohomology, circle);
    for (int k = 1; k <= max_degree; ++k) {
        ++out.checks;
        if (mapping.identity_component[k] != thom[k]) {
            fail("T^1", "thom consistency", "degree " + std::to_string(k));
            break;
        }
    }
    return out;
}

}  // namespace detail

/// Runs every check; cases are processed concurrently and failures are
/// merged in case order, then group order.
inline VerifyOutcome run_verify_checks(const std::vector<VerifyCase>& cases, const std::vector<LieGroupModel>& groups,
                                       int max_degree) {
    std::vector<std::future<VerifyOutcome>> jobs;
    jobs.reserve(cases.size());
    for (const auto& c : cases)
        jobs.push_back(std::async(std::launch::async, [&c, &groups, max_degree] {
            return detail::verify_case(c, groups, max_degree);
        }));
    VerifyOutcome total;
    for (auto& j : jobs) {
        auto o = j.get();
        total.checks += o.checks;
        total.failures.insert(total.failures.end(), o.failures.begin(), o.failures.end());
    }
    return total;
}

}  // namespace rhcalc
