#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace poinc {

using Edge = std::array<int, 2>;
using Triangle = std::array<int, 3>;
using Tetrahedron = std::array<int, 4>;
using Simplex4 = std::array<int, 5>;

/*!
 * A 4-dimensional simplicial pseudomanifold.
 *
 * Vertices are 0..n-1 internally; `labels[i]` is the label vertex i had in
 * the input. All face lists are sorted tuples in lexicographic order.
 */
struct Triangulation
{
    std::vector<int> labels;
    std::vector<Simplex4> simplices;
    std::vector<Edge> edges;
    std::vector<Triangle> triangles;
    std::vector<Tetrahedron> tetrahedra;

    // incidence, by position in the lists above
    std::vector<std::array<std::size_t, 10>> simplex_edges;
    std::vector<std::array<std::size_t, 10>> simplex_triangles;
    std::vector<std::array<std::size_t, 5>> simplex_tetrahedra;  //!< k-th omits vertex k
    std::vector<std::array<std::size_t, 3>> triangle_edges;
    std::vector<std::array<std::size_t, 4>> tetrahedron_triangles;
    std::vector<std::vector<std::size_t>> tetrahedron_simplices;

    std::size_t vertex_count() const { return labels.size(); }

    std::size_t edge_index(const Edge& e) const;
    std::size_t triangle_index(const Triangle& t) const;
    std::size_t tetrahedron_index(const Tetrahedron& t) const;

    /// Map a face given by input labels to internal vertices, sorted.
    template <std::size_t N>
    std::array<int, N> internal(const std::array<int, N>& by_label) const;
    template <std::size_t N>
    std::array<int, N> external(const std::array<int, N>& face) const;
};

/// Build skeleta and incidence from 4-simplices given by input labels.
Triangulation make_triangulation(const std::vector<Simplex4>& simplices);

/*!
 * Parse the text format.
 *
 * Lines are `dim 4` followed by `simplex v0 v1 v2 v3 v4`; `#` starts a
 * comment. Parse errors carry the line number.
 */
Triangulation load_triangulation(std::string_view text);
Triangulation load_triangulation_file(const std::string& path);

/*!
 * Relabel vertices canonically.
 *
 * Vertices are first split by colour refinement, then every ordering
 * compatible with the colour classes is tried and the lexicographically
 * smallest simplex list wins. Input labels are kept in `labels`. When the
 * search would exceed `max_orderings` the refined order is used with input
 * labels breaking ties, and `exact` is false.
 */
struct CanonicalForm
{
    Triangulation complex;
    bool exact{true};
};

CanonicalForm canonical_form(const Triangulation& t, std::size_t max_orderings = 1000000);

std::string to_string(const Triangulation& t);

//---------------------------------------------------------------------------//
int internal_vertex(const Triangulation& t, int label);

template <std::size_t N>
std::array<int, N> Triangulation::internal(const std::array<int, N>& by_label) const
{
    std::array<int, N> out{};
    for (std::size_t i = 0; i < N; ++i)
        out[i] = internal_vertex(*this, by_label[i]);
    std::sort(out.begin(), out.end());
    return out;
}

template <std::size_t N>
std::array<int, N> Triangulation::external(const std::array<int, N>& face) const
{
    std::array<int, N> out{};
    for (std::size_t i = 0; i < N; ++i)
        out[i] = labels[static_cast<std::size_t>(face[i])];
    return out;
}

}  // namespace poinc
