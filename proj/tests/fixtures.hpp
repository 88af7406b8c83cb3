#pragma once

#include <rhcalc/simplicial.hpp>

#include <algorithm>
#include <random>
#include <set>

#include <cstdio>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace fixtures {

using Facets = std::vector<std::vector<std::string>>;

inline std::string label(const char* prefix, int i) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%s%02d", prefix, i);
    return buf;
}

inline Facets point() { return {{"a"}}; }

inline Facets hollow_triangle() { return {{"a", "b"}, {"b", "c"}, {"a", "c"}}; }

inline Facets polygon(int n, const char* prefix = "v") {
    Facets f;
    for (int i = 0; i < n; ++i) f.push_back({label(prefix, i), label(prefix, (i + 1) % n)});
    return f;
}

/// Boundary of the n-simplex on n+1 vertices, a model of S^{n-1}.
inline Facets simplex_boundary(int vertices) {
    Facets f;
    for (int skip = 0; skip < vertices; ++skip) {
        std::vector<std::string> facet;
        for (int i = 0; i < vertices; ++i)
            if (i != skip) facet.push_back(label("v", i));
        f.push_back(facet);
    }
    return f;
}

/// Möbius–Kantor style 7-vertex torus: triangles {i,i+1,i+3}, {i,i+2,i+3} mod 7.
inline Facets torus7() {
    Facets f;
    for (int i = 0; i < 7; ++i) {
        f.push_back({label("v", i), label("v", (i + 1) % 7), label("v", (i + 3) % 7)});
        f.push_back({label("v", i), label("v", (i + 2) % 7), label("v", (i + 3) % 7)});
    }
    return f;
}

/// 6-vertex real projective plane.
inline Facets rp2_6() {
    const int t[10][3] = {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                          {2, 3, 5}, {3, 4, 6}, {4, 5, 2}, {5, 6, 3}, {6, 2, 4}};
    Facets f;
    for (const auto& tri : t) f.push_back({label("v", tri[0]), label("v", tri[1]), label("v", tri[2])});
    return f;
}

/// Circle and 2-sphere sharing the vertex "c".
inline Facets wedge_circle_sphere() {
    return {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"c", "d", "e"}, {"c", "d", "f"}, {"c", "e", "f"}, {"d", "e", "f"}};
}

inline Facets cone(const Facets& base, const std::string& apex = "~apex") {
    Facets f;
    for (auto facet : base) {
        facet.push_back(apex);
        f.push_back(facet);
    }
    return f;
}

inline Facets disjoint_union(const Facets& a, const Facets& b) {
    Facets f;
    for (auto facet : a) {
        for (auto& v : facet) v = "L" + v;
        f.push_back(facet);
    }
    for (auto facet : b) {
        for (auto& v : facet) v = "R" + v;
        f.push_back(facet);
    }
    return f;
}

inline std::shared_ptr<const rhcalc::SimplicialComplex> make(const Facets& f) {
    return std::make_shared<const rhcalc::SimplicialComplex>(rhcalc::SimplicialComplex::build(f));
}

/// The p-fold winding of a (3p)-gon onto a 3-gon, i ↦ i mod 3.
inline rhcalc::SimplicialMap winding(int p) {
    const auto src = make(polygon(3 * p));
    const auto tgt = make(polygon(3));
    std::map<std::string, std::string> a;
    for (int i = 0; i < 3 * p; ++i) a[label("v", i)] = label("v", i % 3);
    return rhcalc::SimplicialMap(src, tgt, a);
}

struct CorpusEntry {
    const char* name;
    Facets facets;
};

inline std::vector<CorpusEntry> corpus() {
    return {{"point", point()},
            {"S1", hollow_triangle()},
            {"S2", simplex_boundary(4)},
            {"S3", simplex_boundary(5)},
            {"torus7", torus7()},
            {"RP2", rp2_6()},
            {"S1vS2", wedge_circle_sphere()}};
}

// A random complex on up to 6 vertices, and a random vertex map into a
// target built from the images of the source facets plus random extra
// facets, so the map is simplicial by construction.
struct RandomMap {
    std::shared_ptr<const rhcalc::SimplicialComplex> target;
    std::map<std::string, std::string> assignment;
};

inline Facets random_facets(std::mt19937& rng, const std::vector<std::string>& labels) {
    // Mostly edges, so that unfilled cycles (positive-degree classes) are common.
    std::uniform_int_distribution<int> count(2, 7);
    std::discrete_distribution<std::size_t> size({0, 1, 6, 2});
    Facets f;
    for (int i = count(rng); i > 0; --i) {
        auto pool = labels;
        std::shuffle(pool.begin(), pool.end(), rng);
        pool.resize(std::min(size(rng), pool.size()));
        f.push_back(pool);
    }
    return f;
}

inline RandomMap random_map_from(std::mt19937& rng, const rhcalc::SimplicialComplex& source, const std::string& prefix) {
    std::uniform_int_distribution<int> nverts(3, 6);
    std::vector<std::string> labels;
    for (int i = nverts(rng); i > 0; --i) labels.push_back(label(prefix.c_str(), i));
    std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
    RandomMap out;
    for (const auto& v : source.vertices()) out.assignment[v] = labels[pick(rng)];
    Facets facets = random_facets(rng, labels);
    for (int d = 0; d <= source.dimension(); ++d)
        for (const auto& s : source.simplices(d)) {
            std::set<std::string> img;
            for (auto v : s) img.insert(out.assignment.at(source.vertices()[v]));
            facets.emplace_back(img.begin(), img.end());
        }
    out.target = make(facets);
    return out;
}

}  // namespace fixtures
