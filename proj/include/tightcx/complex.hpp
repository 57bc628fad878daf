#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tightcx/bits.hpp"
#include "tightcx/exact.hpp"

namespace tightcx {

/// Ordering used for vertex labels: purely numeric labels compare by value and
/// sort before everything else; other labels compare lexicographically.
bool natural_less(std::string_view a, std::string_view b);

/**
 * Immutable finite abstract simplicial complex.
 *
 * Vertices carry external string labels and are stored at dense indices
 * 0..m-1 in natural label order, so two complexes with the same labelled
 * faces compare equal. Faces are bitmasks over those indices. Only the facets
 * (maximal faces) are stored; lower faces are enumerated on demand.
 *
 * The empty face always belongs to the complex. The complex whose only face
 * is the empty face has dimension -1, no vertices and the single facet 0.
 */
class Complex {
public:
    /// Builds a complex from facet label lists. Non-maximal entries are
    /// absorbed. Throws EmptyComplexError, MalformedFaceError, CapacityError.
    static Complex from_facets(const std::vector<std::vector<std::string>>& facets);

    /// Builds a complex from facet masks over `labels`. Labels not used by any
    /// facet are dropped and the rest are re-indexed in natural order.
    static Complex from_masks(const std::vector<std::string>& labels, std::vector<Mask> facets);

    /// The complex {∅}.
    static Complex empty();

    Complex() : facets_{0} {}

    const std::vector<std::string>& labels() const { return labels_; }
    int num_vertices() const { return static_cast<int>(labels_.size()); }
    int dim() const { return dim_; }
    const std::vector<Mask>& facets() const { return facets_; }
    Mask vertex_mask() const { return low_bits(num_vertices()); }
    bool is_empty() const { return labels_.empty(); }

    bool contains(Mask face) const;

    /// All faces of dimension i, sorted by mask value. faces(-1) == {0}.
    std::vector<Mask> faces(int i) const;

    std::optional<int> find(std::string_view label) const;
    /// Throws LookupError for unknown labels.
    int index_of(std::string_view label) const;
    Mask mask_of(const std::vector<std::string>& labels) const;
    std::vector<std::string> labels_of(Mask face) const;

    friend bool operator==(const Complex&, const Complex&) = default;

private:
    std::vector<std::string> labels_;
    std::vector<Mask> facets_;
    int dim_ = -1;
};

/// Removes every mask contained in another one; result sorted and unique.
std::vector<Mask> maximal_faces(std::vector<Mask> faces);

/// S^d_{d+2}: all proper subsets of {1, ..., d+2}.
Complex standard_sphere(int d);
/// B^{n-1}_n: all subsets of {1, ..., n}.
Complex standard_ball(int n);
/// The n-cycle 1-2-...-n-1.
Complex cycle(int n);
/// Closure of a single simplex on the given labels.
Complex simplex_closure(const std::vector<std::string>& labels);
/// Boundary of a single simplex on the given labels.
Complex simplex_boundary(const std::vector<std::string>& labels);

Complex induced_subcomplex(const Complex& x, Mask vertices);
Complex induced_subcomplex(const Complex& x, const std::vector<std::string>& labels);
Complex vertex_link(const Complex& x, int vertex);
Complex vertex_link(const Complex& x, std::string_view label);
Complex join(const Complex& x, const Complex& y);
/// Pure subcomplex generated by the ridges lying in exactly one facet.
/// Throws StructureError unless x is a pure weak pseudomanifold.
Complex boundary_complex(const Complex& x);
/// Ridges ((d-1)-faces) of a pure complex lying in exactly one facet.
std::vector<Mask> boundary_ridges(const Complex& x);
Complex skeleton(const Complex& x, int r);

enum class VectorKind { F, G };

/// f-vector (indices -1..d, f_{-1} = 1) or g-vector (indices 0..d+1).
class IntVector {
public:
    IntVector() = default;
    IntVector(VectorKind kind, int dim, std::vector<Integer> entries);

    VectorKind kind() const { return kind_; }
    int dim() const { return dim_; }
    int first_index() const { return kind_ == VectorKind::F ? -1 : 0; }
    int last_index() const { return kind_ == VectorKind::F ? dim_ : dim_ + 1; }
    /// Entry at a face-dimension index (f starts at -1, g at 0); zero outside the stored range.
    Integer at(int index) const;
    const std::vector<Integer>& entries() const { return entries_; }

    friend bool operator==(const IntVector&, const IntVector&) = default;

private:
    VectorKind kind_ = VectorKind::F;
    int dim_ = -1;
    std::vector<Integer> entries_;
};

IntVector f_vector(const Complex& x);
IntVector g_vector(const Complex& x);
/// g-vector of a face-count vector read as a complex of dimension `dim`.
/// The f-vector may come from a lower-dimensional complex (missing counts
/// are zero); vertex links use this with dim = d - 1.
IntVector g_from_f(const IntVector& f, int dim);
/// Inverse transform. Throws MalformedVectorError unless g has d+2 entries
/// and g_0 = 1.
IntVector f_from_g(const IntVector& g, int dim);

/// Unreduced Euler characteristic sum_{i>=0} (-1)^i f_i.
Integer euler_characteristic(const Complex& x);
/// Largest l such that every l vertices span a face.
int neighbourliness(const Complex& x);
/// Every l-subset of the vertices is a face (vacuously true when l > m).
bool is_neighbourly(const Complex& x, int l);
bool is_connected(const Complex& x);
bool is_pure(const Complex& x);

struct StructureReport {
    bool pure = false;
    bool weak_pseudomanifold = false;
    bool pseudomanifold = false;
    bool closed = false;
    bool connected = false;
    int neighbourliness = 0;
    Integer euler_characteristic;
};

StructureReport structure_report(const Complex& x);

struct DualGraph {
    std::vector<Mask> nodes;
    std::vector<std::vector<int>> adjacency;
    bool connected = false;
};

/// Facet adjacency through shared ridges. Throws StructureError if x is not pure.
DualGraph dual_graph(const Complex& x);

}  // namespace tightcx
