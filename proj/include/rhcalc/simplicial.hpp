#pragma once

// Finite abstract simplicial complexes and their rational cochain complexes.
//
// Vertex labels are opaque strings ordered lexicographically; a simplex is
// stored as its ascending vector of vertex indices, and simplices of one
// dimension are ordered lexicographically. All cochain matrices are expressed
// in that ordering.

#include <rhcalc/errors.hpp>
#include <rhcalc/exact_linalg.hpp>
#include <rhcalc/graded.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace rhcalc {

using Simplex = std::vector<std::size_t>;

class SimplicialComplex {
public:
    /// Closes `facets` under faces. Labels in `extra_vertices` that lie in no
    /// facet become isolated points.
    static SimplicialComplex build(const std::vector<std::vector<std::string>>& facets,
                                   const std::vector<std::string>& extra_vertices = {}) {
        if (facets.empty()) throw InputError("complex has no facets");
        std::set<std::string> labels(extra_vertices.begin(), extra_vertices.end());
        for (std::size_t f = 0; f < facets.size(); ++f) {
            const auto& facet = facets[f];
            if (facet.empty()) throw InputError("facet " + std::to_string(f) + " is empty");
            std::set<std::string> seen;
            for (const auto& v : facet) {
                if (v.empty()) throw InputError("facet " + std::to_string(f) + " has an empty vertex label");
                if (!seen.insert(v).second)
                    throw InputError("facet " + std::to_string(f) + " repeats vertex \"" + v + "\"");
            }
            if (facet.size() > 24) throw InputError("facet " + std::to_string(f) + " has too many vertices");
            labels.insert(facet.begin(), facet.end());
        }

        SimplicialComplex k;
        k.vertices_.assign(labels.begin(), labels.end());
        std::map<std::string, std::size_t> index;
        for (std::size_t i = 0; i < k.vertices_.size(); ++i) index[k.vertices_[i]] = i;

        std::vector<std::set<Simplex>> by_dim;
        auto insert = [&by_dim](Simplex s) {
            const std::size_t d = s.size() - 1;
            if (by_dim.size() <= d) by_dim.resize(d + 1);
            by_dim[d].insert(std::move(s));
        };
        for (std::size_t i = 0; i < k.vertices_.size(); ++i) insert({i});
        for (const auto& facet : facets) {
            Simplex verts;
            for (const auto& v : facet) verts.push_back(index.at(v));
            std::sort(verts.begin(), verts.end());
            const std::size_t n = verts.size();
            for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
                Simplex face;
                for (std::size_t b = 0; b < n; ++b)
                    if (mask & (std::size_t{1} << b)) face.push_back(verts[b]);
                insert(std::move(face));
            }
        }
        for (auto& s : by_dim) k.simplices_.emplace_back(s.begin(), s.end());
        k.index_simplices();
        return k;
    }

    const std::vector<std::string>& vertices() const noexcept { return vertices_; }

    /// Top dimension; -1 never occurs since complexes are nonempty.
    int dimension() const noexcept { return static_cast<int>(simplices_.size()) - 1; }

    /// Simplices of dimension d in canonical order (empty outside 0..dimension()).
    const std::vector<Simplex>& simplices(int d) const {
        static const std::vector<Simplex> none;
        if (d < 0 || d > dimension()) return none;
        return simplices_[static_cast<std::size_t>(d)];
    }

    std::size_t count(int d) const { return simplices(d).size(); }

    /// Position of `s` (ascending indices) among simplices of its dimension.
    std::optional<std::size_t> find(const Simplex& s) const {
        if (s.empty()) return std::nullopt;
        const auto d = s.size() - 1;
        if (d >= lookup_.size()) return std::nullopt;
        auto it = lookup_[d].find(s);
        if (it == lookup_[d].end()) return std::nullopt;
        return it->second;
    }

    std::optional<std::size_t> vertex_index(const std::string& label) const {
        auto it = std::lower_bound(vertices_.begin(), vertices_.end(), label);
        if (it == vertices_.end() || *it != label) return std::nullopt;
        return static_cast<std::size_t>(it - vertices_.begin());
    }

    std::size_t simplex_total() const {
        std::size_t n = 0;
        for (const auto& s : simplices_) n += s.size();
        return n;
    }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.vertices_ == b.vertices_ && a.simplices_ == b.simplices_;
    }

private:
    void index_simplices() {
        lookup_.assign(simplices_.size(), {});
        for (std::size_t d = 0; d < simplices_.size(); ++d)
            for (std::size_t i = 0; i < simplices_[d].size(); ++i) lookup_[d].emplace(simplices_[d][i], i);
    }

    std::vector<std::string> vertices_;
    std::vector<std::vector<Simplex>> simplices_;
    std::vector<std::map<Simplex, std::size_t>> lookup_;
};

inline SimplicialComplex build_complex(const std::vector<std::vector<std::string>>& facets) {
    return SimplicialComplex::build(facets);
}

/// dims[k] = number of k-simplices; coboundaries[k] is δᵏ with shape
/// dims[k+1] × dims[k] (the top one has zero rows).
struct CochainComplex {
    std::vector<std::size_t> dims;
    std::vector<RationalMatrix> coboundaries;

    const RationalMatrix& coboundary(int k) const { return coboundaries.at(static_cast<std::size_t>(k)); }
};

/// (δf)(v₀…v_{k+1}) = Σᵢ (-1)ⁱ f(v₀…v̂ᵢ…v_{k+1}).
inline CochainComplex cochain_complex(const SimplicialComplex& k) {
    CochainComplex c;
    const int top = k.dimension();
    for (int d = 0; d <= top; ++d) c.dims.push_back(k.count(d));
    for (int d = 0; d <= top; ++d) {
        RationalMatrix delta(k.count(d + 1), k.count(d));
        const auto& cofaces = k.simplices(d + 1);
        for (std::size_t row = 0; row < cofaces.size(); ++row) {
            const Simplex& s = cofaces[row];
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex face;
                face.reserve(s.size() - 1);
                for (std::size_t j = 0; j < s.size(); ++j)
                    if (j != i) face.push_back(s[j]);
                delta(row, *k.find(face)) = (i % 2 == 0) ? 1 : -1;
            }
        }
        c.coboundaries.push_back(std::move(delta));
    }
    return c;
}

/// Betti numbers b⁰…b^dim over Q, as a plain vector.
inline std::vector<std::uint64_t> betti_numbers(const SimplicialComplex& k) {
    const auto c = cochain_complex(k);
    std::vector<std::size_t> ranks;
    for (const auto& m : c.coboundaries) ranks.push_back(rank(m));
    std::vector<std::uint64_t> b;
    for (std::size_t d = 0; d < c.dims.size(); ++d) {
        const std::size_t below = d == 0 ? 0 : ranks[d - 1];
        b.push_back(c.dims[d] - ranks[d] - below);
    }
    return b;
}

/// Cohomology dimensions on conventional (nonnegative) degrees.
inline GradedDims betti(const SimplicialComplex& k) {
    GradedDims g;
    const auto b = betti_numbers(k);
    for (std::size_t d = 0; d < b.size(); ++d) g.set(static_cast<int>(d), b[d]);
    return g;
}

namespace detail {

// Coboundary image into degree `degree` (δ^{degree-1}), as an n_degree × n_{degree-1} matrix.
inline RationalMatrix incoming_coboundary(const SimplicialComplex& k, const CochainComplex& c, int degree) {
    if (degree == 0 || degree > k.dimension()) return RationalMatrix(k.count(degree), 0);
    return c.coboundary(degree - 1);
}

}  // namespace detail

/// Cocycles whose classes form a basis of Hᵏ. The choice is canonical: the
/// kernel-basis columns that are pivots of rref([δ^{k-1} | ker δᵏ]).
inline RationalMatrix cohomology_representatives(const SimplicialComplex& k, int degree) {
    if (degree < 0 || degree > k.dimension()) return RationalMatrix(k.count(degree), 0);
    const auto c = cochain_complex(k);
    const auto cocycles = kernel_basis(c.coboundary(degree));
    const auto boundaries = detail::incoming_coboundary(k, c, degree);
    const auto [R, pivots] = rref(boundaries.hstack(cocycles));
    std::vector<Vector> reps;
    for (auto p : pivots)
        if (p >= boundaries.cols()) reps.push_back(cocycles.column(p - boundaries.cols()));
    return RationalMatrix::from_columns(k.count(degree), reps);
}

/// Vertex map between complexes that sends simplices to simplices.
class SimplicialMap {
public:
    SimplicialMap(std::shared_ptr<const SimplicialComplex> source, std::shared_ptr<const SimplicialComplex> target,
                  const std::map<std::string, std::string>& assignment)
        : source_(std::move(source)), target_(std::move(target)) {
        if (!source_ || !target_) throw InputError("simplicial map needs a source and a target");
        for (const auto& [from, to] : assignment) {
            if (!source_->vertex_index(from)) throw InputError("assignment names unknown source vertex \"" + from + "\"");
            if (!target_->vertex_index(to)) throw InputError("assignment names unknown target vertex \"" + to + "\"");
        }
        for (const auto& v : source_->vertices()) {
            auto it = assignment.find(v);
            if (it == assignment.end()) throw InputError("assignment misses source vertex \"" + v + "\"");
            image_.push_back(*target_->vertex_index(it->second));
        }
        for (int d = 0; d <= source_->dimension(); ++d)
            for (const auto& s : source_->simplices(d)) {
                if (!target_->find(image_simplex(s))) {
                    std::string names;
                    for (auto v : s) names += (names.empty() ? "" : ",") + source_->vertices()[v];
                    throw InputError("image of simplex {" + names + "} is not a simplex of the target");
                }
            }
    }

    const SimplicialComplex& source() const noexcept { return *source_; }
    const SimplicialComplex& target() const noexcept { return *target_; }
    std::shared_ptr<const SimplicialComplex> source_ptr() const noexcept { return source_; }
    std::shared_ptr<const SimplicialComplex> target_ptr() const noexcept { return target_; }

    /// Target vertex index of source vertex index v.
    std::size_t operator()(std::size_t v) const { return image_.at(v); }

    /// Deduplicated, sorted image of a source simplex.
    Simplex image_simplex(const Simplex& s) const {
        Simplex out;
        for (auto v : s) out.push_back(image_[v]);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    std::map<std::string, std::string> assignment() const {
        std::map<std::string, std::string> a;
        for (std::size_t i = 0; i < image_.size(); ++i) a[source_->vertices()[i]] = target_->vertices()[image_[i]];
        return a;
    }

private:
    std::shared_ptr<const SimplicialComplex> source_;
    std::shared_ptr<const SimplicialComplex> target_;
    std::vector<std::size_t> image_;
};

/// g ∘ f; requires f.target() == g.source().
inline SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
    if (!(f.target() == g.source())) throw InputError("compose: target of f is not the source of g");
    std::map<std::string, std::string> a;
    for (const auto& [from, mid] : f.assignment()) a[from] = g.assignment().at(mid);
    return SimplicialMap(f.source_ptr(), g.target_ptr(), a);
}

/// Pullback of a target k-cochain to the source. Degenerate images pull back
/// to zero; otherwise the sign is that of the permutation sorting the image.
inline Vector pullback_cochain(const SimplicialMap& f, int degree, const Vector& cochain) {
    const auto& src = f.source().simplices(degree);
    Vector out(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) {
        Simplex img;
        for (auto v : src[i]) img.push_back(f(v));
        int sign = 1;
        for (std::size_t a = 0; a < img.size(); ++a)
            for (std::size_t b = a + 1; b < img.size(); ++b) {
                if (img[a] == img[b]) sign = 0;
                else if (img[a] > img[b]) sign = -sign;
            }
        if (sign == 0) continue;
        std::sort(img.begin(), img.end());
        out[i] = sign * cochain[*f.target().find(img)];
    }
    return out;
}

/// f*: Hᵏ(target) → Hᵏ(source) in the representative bases; shape bᵏ(source) × bᵏ(target).
inline RationalMatrix induced_cohomology_map(const SimplicialMap& f, int degree) {
    const auto target_reps = cohomology_representatives(f.target(), degree);
    const auto source_reps = cohomology_representatives(f.source(), degree);
    RationalMatrix out(source_reps.cols(), target_reps.cols());
    if (out.empty()) return out;
    const auto c = cochain_complex(f.source());
    const auto basis = source_reps.hstack(detail::incoming_coboundary(f.source(), c, degree));
    for (std::size_t j = 0; j < target_reps.cols(); ++j) {
        const auto pulled = pullback_cochain(f, degree, target_reps.column(j));
        const auto coeffs = image_membership(basis, pulled);
        if (!coeffs) throw InvariantViolation("pullback of a cocycle is not a cocycle");
        for (std::size_t i = 0; i < source_reps.cols(); ++i) out(i, j) = (*coeffs)[i];
    }
    return out;
}

}  // namespace rhcalc
