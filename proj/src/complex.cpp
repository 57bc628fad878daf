#include "tightcx/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "tightcx/errors.hpp"

namespace tightcx {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::string_view strip_zeros(std::string_view s) {
    while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
    return s;
}

int find_root(std::vector<int>& parent, int v) {
    while (parent[v] != v) {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    return v;
}

std::vector<std::string> numbered_labels(int n) {
    std::vector<std::string> out;
    for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
    return out;
}

// Ridges of a pure complex with the number of facets containing each.
std::vector<std::pair<Mask, int>> ridge_counts(const Complex& x) {
    std::vector<Mask> ridges;
    for (Mask f : x.facets()) {
        for (Mask r = f; r; r &= r - 1) ridges.push_back(f & ~(r & (~r + 1)));
    }
    std::sort(ridges.begin(), ridges.end());
    std::vector<std::pair<Mask, int>> out;
    for (std::size_t i = 0; i < ridges.size();) {
        std::size_t j = i;
        while (j < ridges.size() && ridges[j] == ridges[i]) ++j;
        out.emplace_back(ridges[i], static_cast<int>(j - i));
        i = j;
    }
    return out;
}

}  // namespace

bool natural_less(std::string_view a, std::string_view b) {
    auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
    auto run = [&](std::string_view s, std::size_t i) {
        std::size_t j = i;
        while (j < s.size() && is_digit(s[j]) == is_digit(s[i])) ++j;
        return s.substr(i, j - i);
    };
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        const auto ra = run(a, i);
        const auto rb = run(b, j);
        const bool da = all_digits(ra);
        const bool db = all_digits(rb);
        if (da != db) return da;
        if (da) {
            const auto sa = strip_zeros(ra);
            const auto sb = strip_zeros(rb);
            if (sa.size() != sb.size()) return sa.size() < sb.size();
            if (sa != sb) return sa < sb;
        } else if (ra != rb) {
            return ra < rb;
        }
        i += ra.size();
        j += rb.size();
    }
    if ((i < a.size()) != (j < b.size())) return j < b.size();
    return a < b;
}

std::vector<Mask> maximal_faces(std::vector<Mask> faces) {
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::stable_sort(faces.begin(), faces.end(),
                     [](Mask a, Mask b) { return popcount(a) > popcount(b); });
    std::vector<Mask> kept;
    for (Mask f : faces) {
        const bool covered = std::any_of(kept.begin(), kept.end(), [f](Mask g) { return is_subset(f, g); });
        if (!covered) kept.push_back(f);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

Complex Complex::from_facets(const std::vector<std::vector<std::string>>& facets) {
    if (facets.empty()) throw EmptyComplexError("complex needs at least one facet");
    std::vector<std::string> labels;
    std::unordered_map<std::string, int> index;
    std::vector<Mask> masks;
    masks.reserve(facets.size());
    for (const auto& facet : facets) {
        Mask m = 0;
        for (const auto& label : facet) {
            auto [it, inserted] = index.try_emplace(label, static_cast<int>(labels.size()));
            if (inserted) {
                if (labels.size() >= static_cast<std::size_t>(kMaxVertices)) {
                    throw CapacityError("more than 64 distinct vertex labels");
                }
                labels.push_back(label);
            }
            const Mask b = bit(it->second);
            if (m & b) throw MalformedFaceError("vertex '" + label + "' repeated inside one facet");
            m |= b;
        }
        masks.push_back(m);
    }
    return from_masks(labels, std::move(masks));
}

Complex Complex::from_masks(const std::vector<std::string>& labels, std::vector<Mask> facets) {
    if (facets.empty()) facets.push_back(0);
    Mask used = 0;
    for (Mask f : facets) used |= f;

    std::vector<int> order;
    for (int i : bit_indices(used)) order.push_back(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return natural_less(labels[a], labels[b]); });

    std::vector<int> remap(kMaxVertices, -1);
    Complex out;
    out.labels_.reserve(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        remap[order[k]] = static_cast<int>(k);
        out.labels_.push_back(labels[order[k]]);
    }
    for (Mask& f : facets) {
        Mask g = 0;
        for (Mask r = f; r; r &= r - 1) g |= bit(remap[std::countr_zero(r)]);
        f = g;
    }
    out.facets_ = maximal_faces(std::move(facets));
    out.dim_ = -1;
    for (Mask f : out.facets_) out.dim_ = std::max(out.dim_, face_dim(f));
    return out;
}

Complex Complex::empty() { return Complex(); }

bool Complex::contains(Mask face) const {
    return std::any_of(facets_.begin(), facets_.end(), [face](Mask f) { return is_subset(face, f); });
}

std::vector<Mask> Complex::faces(int i) const {
    std::vector<Mask> out;
    if (i < -1 || i > dim_) return out;
    for (Mask f : facets_) {
        if (face_dim(f) < i) continue;
        for_each_subset_of_size(f, i + 1, [&](Mask s) { out.push_back(s); });
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<int> Complex::find(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == label) return static_cast<int>(i);
    }
    return std::nullopt;
}

int Complex::index_of(std::string_view label) const {
    auto i = find(label);
    if (!i) throw LookupError("unknown vertex '" + std::string(label) + "'");
    return *i;
}

Mask Complex::mask_of(const std::vector<std::string>& labels) const {
    Mask m = 0;
    for (const auto& l : labels) m |= bit(index_of(l));
    return m;
}

std::vector<std::string> Complex::labels_of(Mask face) const {
    std::vector<std::string> out;
    for (int i : bit_indices(face)) out.push_back(labels_.at(static_cast<std::size_t>(i)));
    return out;
}

Complex standard_sphere(int d) {
    if (d < 0) throw PreconditionError("standard_sphere needs d >= 0");
    if (d + 2 > kMaxVertices) throw CapacityError("standard sphere exceeds 64 vertices");
    return simplex_boundary(numbered_labels(d + 2));
}

Complex standard_ball(int n) {
    if (n < 1) throw PreconditionError("standard_ball needs n >= 1");
    if (n > kMaxVertices) throw CapacityError("standard ball exceeds 64 vertices");
    return simplex_closure(numbered_labels(n));
}

Complex cycle(int n) {
    if (n < 3) throw PreconditionError("a cycle needs at least 3 vertices");
    if (n > kMaxVertices) throw CapacityError("cycle exceeds 64 vertices");
    std::vector<Mask> facets;
    for (int i = 0; i < n; ++i) facets.push_back(bit(i) | bit((i + 1) % n));
    return Complex::from_masks(numbered_labels(n), facets);
}

Complex simplex_closure(const std::vector<std::string>& labels) {
    if (labels.empty()) return Complex::empty();
    return Complex::from_facets({labels});
}

Complex simplex_boundary(const std::vector<std::string>& labels) {
    if (labels.empty()) throw PreconditionError("boundary of the empty simplex is void");
    const Complex closure = simplex_closure(labels);
    const Mask all = closure.vertex_mask();
    std::vector<Mask> facets;
    for (int i = 0; i < closure.num_vertices(); ++i) facets.push_back(all & ~bit(i));
    return Complex::from_masks(closure.labels(), facets);
}

Complex induced_subcomplex(const Complex& x, Mask vertices) {
    std::vector<Mask> facets;
    for (Mask f : x.facets()) facets.push_back(f & vertices);
    return Complex::from_masks(x.labels(), std::move(facets));
}

Complex induced_subcomplex(const Complex& x, const std::vector<std::string>& labels) {
    Mask m = 0;
    for (const auto& l : labels) {
        if (auto i = x.find(l)) m |= bit(*i);
    }
    return induced_subcomplex(x, m);
}

Complex vertex_link(const Complex& x, int vertex) {
    if (vertex < 0 || vertex >= x.num_vertices()) throw LookupError("vertex index out of range");
    const Mask v = bit(vertex);
    std::vector<Mask> facets;
    for (Mask f : x.facets()) {
        if (f & v) facets.push_back(f & ~v);
    }
    return Complex::from_masks(x.labels(), std::move(facets));
}

Complex vertex_link(const Complex& x, std::string_view label) { return vertex_link(x, x.index_of(label)); }

Complex join(const Complex& x, const Complex& y) {
    for (const auto& l : y.labels()) {
        if (x.find(l)) throw DisjointnessError("join operands share vertex '" + l + "'");
    }
    const int nx = x.num_vertices();
    if (nx + y.num_vertices() > kMaxVertices) throw CapacityError("join exceeds 64 vertices");
    std::vector<std::string> labels = x.labels();
    labels.insert(labels.end(), y.labels().begin(), y.labels().end());
    std::vector<Mask> facets;
    for (Mask a : x.facets()) {
        for (Mask b : y.facets()) facets.push_back(a | (nx >= 64 ? 0 : b << nx));
    }
    return Complex::from_masks(labels, std::move(facets));
}

bool is_pure(const Complex& x) {
    const int d = x.dim();
    return std::all_of(x.facets().begin(), x.facets().end(), [d](Mask f) { return face_dim(f) == d; });
}

std::vector<Mask> boundary_ridges(const Complex& x) {
    std::vector<Mask> out;
    if (x.dim() < 0) return out;
    for (auto [ridge, count] : ridge_counts(x)) {
        if (count == 1) out.push_back(ridge);
    }
    return out;
}

Complex boundary_complex(const Complex& x) {
    if (!is_pure(x) || x.dim() < 0) throw StructureError("boundary needs a pure complex");
    for (auto [ridge, count] : ridge_counts(x)) {
        if (count > 2) throw StructureError("boundary needs a weak pseudomanifold");
    }
    auto ridges = boundary_ridges(x);
    if (ridges.empty()) return Complex::empty();
    return Complex::from_masks(x.labels(), std::move(ridges));
}

Complex skeleton(const Complex& x, int r) {
    if (r < -1) throw PreconditionError("skeleton dimension must be >= -1");
    std::vector<Mask> facets;
    for (Mask f : x.facets()) {
        if (face_dim(f) <= r) {
            facets.push_back(f);
        } else {
            for_each_subset_of_size(f, r + 1, [&](Mask s) { facets.push_back(s); });
        }
    }
    return Complex::from_masks(x.labels(), std::move(facets));
}

IntVector::IntVector(VectorKind kind, int dim, std::vector<Integer> entries)
    : kind_(kind), dim_(dim), entries_(std::move(entries)) {}

Integer IntVector::at(int index) const {
    const int k = index - first_index();
    if (k < 0 || k >= static_cast<int>(entries_.size())) return Integer(0);
    return entries_[static_cast<std::size_t>(k)];
}

IntVector f_vector(const Complex& x) {
    std::vector<Integer> counts;
    for (int i = -1; i <= x.dim(); ++i) counts.emplace_back(static_cast<unsigned long>(x.faces(i).size()));
    return IntVector(VectorKind::F, x.dim(), std::move(counts));
}

IntVector g_from_f(const IntVector& f, int d) {
    if (f.kind() != VectorKind::F) throw MalformedVectorError("expected an f-vector");
    std::vector<Integer> g;
    for (int j = 0; j <= d + 1; ++j) {
        Integer sum = 0;
        for (int i = -1; i <= j - 1; ++i) {
            const Integer term = binomial(d - i + 1, j - i - 1) * f.at(i);
            if ((j - i - 1) % 2 == 0) sum += term; else sum -= term;
        }
        g.push_back(sum);
    }
    return IntVector(VectorKind::G, d, std::move(g));
}

IntVector g_vector(const Complex& x) { return g_from_f(f_vector(x), x.dim()); }

IntVector f_from_g(const IntVector& g, int d) {
    if (g.kind() != VectorKind::G) throw MalformedVectorError("expected a g-vector");
    if (static_cast<int>(g.entries().size()) != d + 2) {
        throw MalformedVectorError("g-vector of a " + std::to_string(d) + "-complex needs " +
                                   std::to_string(d + 2) + " entries");
    }
    if (g.at(0) != 1) throw MalformedVectorError("g_0 must be 1");
    std::vector<Integer> f;
    for (int i = -1; i <= d; ++i) {
        Integer sum = 0;
        for (int j = 0; j <= i + 1; ++j) sum += binomial(d - j + 2, i - j + 1) * g.at(j);
        f.push_back(sum);
    }
    return IntVector(VectorKind::F, d, std::move(f));
}

Integer euler_characteristic(const Complex& x) {
    const IntVector f = f_vector(x);
    Integer chi = 0;
    for (int i = 0; i <= x.dim(); ++i) {
        if (i % 2 == 0) chi += f.at(i); else chi -= f.at(i);
    }
    return chi;
}

int neighbourliness(const Complex& x) {
    const int m = x.num_vertices();
    int l = 0;
    while (l < m && l <= x.dim()) {
        if (static_cast<long>(x.faces(l).size()) != binomial(m, l + 1)) break;
        ++l;
    }
    return l;
}

bool is_neighbourly(const Complex& x, int l) {
    if (l <= 0 || l > x.num_vertices()) return true;
    return neighbourliness(x) >= l;
}

bool is_connected(const Complex& x) {
    const int m = x.num_vertices();
    if (m == 0) return false;
    std::vector<int> parent(static_cast<std::size_t>(m));
    std::iota(parent.begin(), parent.end(), 0);
    for (Mask f : x.facets()) {
        if (f == 0) continue;
        const int root = find_root(parent, std::countr_zero(f));
        for (int v : bit_indices(f)) parent[find_root(parent, v)] = root;
    }
    const int root = find_root(parent, 0);
    for (int v = 1; v < m; ++v) {
        if (find_root(parent, v) != root) return false;
    }
    return true;
}

DualGraph dual_graph(const Complex& x) {
    if (!is_pure(x)) throw StructureError("dual graph needs a pure complex");
    DualGraph g;
    g.nodes = x.facets();
    const std::size_t n = g.nodes.size();
    g.adjacency.assign(n, {});
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (popcount(g.nodes[a] & g.nodes[b]) == x.dim()) {
                g.adjacency[a].push_back(static_cast<int>(b));
                g.adjacency[b].push_back(static_cast<int>(a));
            }
        }
    }
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        for (int v : g.adjacency[u]) {
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = true;
                ++reached;
                stack.push_back(static_cast<std::size_t>(v));
            }
        }
    }
    g.connected = reached == n;
    return g;
}

StructureReport structure_report(const Complex& x) {
    StructureReport r;
    r.pure = is_pure(x);
    r.connected = is_connected(x);
    r.neighbourliness = neighbourliness(x);
    r.euler_characteristic = euler_characteristic(x);
    if (r.pure && x.dim() >= 0) {
        const auto counts = ridge_counts(x);
        r.weak_pseudomanifold = std::all_of(counts.begin(), counts.end(), [](auto c) { return c.second <= 2; });
        r.closed = std::all_of(counts.begin(), counts.end(), [](auto c) { return c.second == 2; });
        r.pseudomanifold = r.weak_pseudomanifold && dual_graph(x).connected;
    }
    return r;
}

}  // namespace tightcx
