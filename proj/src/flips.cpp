#include "tightcx/flips.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <set>
#include <unordered_map>

#include "tightcx/errors.hpp"

namespace tightcx {

namespace {

using Facets = std::vector<Mask>;

bool contains_face(const Facets& facets, Mask face) {
    return std::any_of(facets.begin(), facets.end(), [face](Mask f) { return is_subset(face, f); });
}

Mask support(const Facets& facets) {
    Mask u = 0;
    for (Mask f : facets) u |= f;
    return u;
}

// Validity of a move of index >= 1 on raw facet masks of a d-dimensional complex.
bool valid_proper(const Facets& facets, int d, Mask alpha, Mask beta) {
    if (alpha == 0 || beta == 0 || (alpha & beta) != 0) return false;
    if (popcount(alpha) + popcount(beta) != d + 2) return false;
    if (popcount(beta) < 2) return false;
    if (contains_face(facets, beta)) return false;
    const Mask u = alpha | beta;
    std::size_t through_alpha = 0;
    for (Mask f : facets) {
        if (!is_subset(alpha, f)) continue;
        if (!is_subset(f, u) || popcount(f) != d + 1) return false;
        ++through_alpha;
    }
    // Each facet through alpha is u minus one vertex of beta; all must occur.
    return through_alpha == static_cast<std::size_t>(popcount(beta));
}

Facets apply_raw(const Facets& facets, Mask alpha, Mask beta) {
    Facets out;
    out.reserve(facets.size() + static_cast<std::size_t>(popcount(alpha)));
    for (Mask f : facets) {
        if (!is_subset(alpha, f)) out.push_back(f);
    }
    for (Mask r = alpha; r; r &= r - 1) out.push_back((alpha & ~(r & (~r + 1))) | beta);
    std::sort(out.begin(), out.end());
    return out;
}

struct RawMove {
    Mask alpha;
    Mask beta;
};

// Moves of index t in [t_min, t_max], t >= 1, of a pure d-dimensional complex.
std::vector<RawMove> raw_proper_moves(const Facets& facets, int d, int t_min, int t_max) {
    std::vector<RawMove> out;
    t_min = std::max(t_min, 1);
    t_max = std::min(t_max, d);
    for (int t = t_min; t <= t_max; ++t) {
        const int size = d - t + 1;
        std::unordered_map<Mask, std::pair<int, Mask>> through;
        for (Mask f : facets) {
            for_each_subset_of_size(f, size, [&](Mask a) {
                auto& e = through[a];
                ++e.first;
                e.second |= f;
            });
        }
        std::vector<RawMove> level;
        for (const auto& [alpha, e] : through) {
            if (e.first != t + 1 || popcount(e.second) != d + 2) continue;
            const Mask beta = e.second & ~alpha;
            if (contains_face(facets, beta)) continue;
            level.push_back({alpha, beta});
        }
        std::sort(level.begin(), level.end(), [](const RawMove& a, const RawMove& b) {
            return a.alpha != b.alpha ? a.alpha < b.alpha : a.beta < b.beta;
        });
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::string fresh_label_excluding(const std::vector<std::string>& used) {
    for (int n = 1;; ++n) {
        std::string s = "v" + std::to_string(n);
        if (std::find(used.begin(), used.end(), s) == used.end()) return s;
    }
}

// Labels of X extended to all 64 indices, so raw searches can mint vertices.
std::vector<std::string> extended_labels(const Complex& x) {
    std::vector<std::string> labels = x.labels();
    while (labels.size() < static_cast<std::size_t>(kMaxVertices)) labels.push_back(fresh_label_excluding(labels));
    return labels;
}

std::vector<std::string> labels_of_mask(const std::vector<std::string>& labels, Mask m) {
    std::vector<std::string> out;
    for (int i : bit_indices(m)) out.push_back(labels[static_cast<std::size_t>(i)]);
    return out;
}

bool is_simplex_boundary(const Facets& facets, int d) {
    return popcount(support(facets)) == d + 2 && facets.size() == static_cast<std::size_t>(d) + 2;
}

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "yes";
        case Verdict::No: return "no";
        case Verdict::Unknown: return "unknown";
    }
    return "unknown";
}

FlipCertificate FlipCertificate::reversed() const {
    FlipCertificate out;
    out.start = end;
    out.end = start;
    const int d = start.dim();
    for (auto it = moves.rbegin(); it != moves.rend(); ++it) {
        out.moves.push_back(it->reversed());
        out.max_index = std::max(out.max_index, d - it->index());
    }
    return out;
}

std::string fresh_label(const Complex& x) { return fresh_label_excluding(x.labels()); }

bool is_valid_move(const Complex& x, const BistellarMove& move) {
    const int d = x.dim();
    if (d < 0 || move.alpha.empty() || move.beta.empty()) return false;
    for (const auto& l : move.alpha) {
        if (!x.find(l)) return false;
    }
    const Mask alpha = x.mask_of(move.alpha);
    if (popcount(alpha) != static_cast<int>(move.alpha.size())) return false;
    if (move.beta.size() == 1 && !x.find(move.beta.front())) {
        // Index 0: alpha must be a d-dimensional facet.
        return face_dim(alpha) == d &&
               std::find(x.facets().begin(), x.facets().end(), alpha) != x.facets().end();
    }
    for (const auto& l : move.beta) {
        if (!x.find(l)) return false;
    }
    const Mask beta = x.mask_of(move.beta);
    if (popcount(beta) != static_cast<int>(move.beta.size())) return false;
    return valid_proper(x.facets(), d, alpha, beta);
}

Complex apply_move(const Complex& x, const BistellarMove& move) {
    if (!is_valid_move(x, move)) {
        throw MoveError("invalid bistellar move " + format_tuple(move.alpha) + " -> " + format_tuple(move.beta));
    }
    std::vector<std::string> labels = x.labels();
    const Mask alpha = x.mask_of(move.alpha);
    Mask beta = 0;
    if (move.index() == 0 && !x.find(move.beta.front())) {
        if (x.num_vertices() >= kMaxVertices) throw CapacityError("a 0-move would exceed 64 vertices");
        labels.push_back(move.beta.front());
        beta = bit(x.num_vertices());
    } else {
        beta = x.mask_of(move.beta);
    }
    return Complex::from_masks(labels, apply_raw(x.facets(), alpha, beta));
}

MoveEnumeration enumerate_moves(const Complex& x) {
    if (!is_pure(x)) throw StructureError("move enumeration needs a pure complex");
    MoveEnumeration out;
    const int d = x.dim();
    if (d < 0) return out;
    for (const auto& m : raw_proper_moves(x.facets(), d, 1, d)) {
        out.proper.push_back({x.labels_of(m.alpha), x.labels_of(m.beta)});
    }
    for (Mask f : x.facets()) out.zero_move_sites.push_back(x.labels_of(f));
    return out;
}

Complex replay(const Complex& start, const std::vector<BistellarMove>& moves) {
    Complex cur = start;
    for (std::size_t i = 0; i < moves.size(); ++i) {
        if (!is_valid_move(cur, moves[i])) {
            throw MoveError("move " + std::to_string(i + 1) + " of the certificate is not valid at its step");
        }
        cur = apply_move(cur, moves[i]);
    }
    return cur;
}

bool certificate_valid(const FlipCertificate& cert) {
    int max_index = -1;
    for (const auto& m : cert.moves) max_index = std::max(max_index, m.index());
    if (max_index != cert.max_index) return false;
    try {
        return replay(cert.start, cert.moves) == cert.end;
    } catch (const MoveError&) {
        return false;
    }
}

FlipCertificate random_stellated_sphere(int d, int k, int n_moves, std::uint64_t seed) {
    if (d < 0) throw PreconditionError("dimension must be non-negative");
    if (k < 1 || k > d + 1) throw PreconditionError("k must satisfy 1 <= k <= d + 1");
    FlipCertificate cert;
    cert.start = standard_sphere(d);
    Complex cur = cert.start;
    std::mt19937_64 rng(seed);
    for (int step = 0; step < n_moves; ++step) {
        const auto proper = raw_proper_moves(cur.facets(), d, 1, k - 1);
        const bool room = cur.num_vertices() < kMaxVertices;
        const std::size_t zero_sites = room ? cur.facets().size() : 0;
        const std::size_t total = zero_sites + proper.size();
        if (total == 0) break;
        const std::size_t pick = static_cast<std::size_t>(rng() % total);
        BistellarMove move;
        if (pick < zero_sites) {
            move = {cur.labels_of(cur.facets()[pick]), {fresh_label(cur)}};
        } else {
            const auto& m = proper[pick - zero_sites];
            move = {cur.labels_of(m.alpha), cur.labels_of(m.beta)};
        }
        cur = apply_move(cur, move);
        cert.moves.push_back(move);
        cert.max_index = std::max(cert.max_index, move.index());
    }
    cert.end = cur;
    return cert;
}

ReductionResult stellated_reduction(const Complex& x, int k, std::size_t budget) {
    const int d = x.dim();
    if (d < 0) throw StructureError("the empty complex is not a sphere candidate");
    if (k < 0 || k > d + 1) throw PreconditionError("k must satisfy 0 <= k <= d + 1");
    const auto s = structure_report(x);
    if (!s.closed || !s.pseudomanifold) throw StructureError("not a closed pseudomanifold, so not a sphere");
    const Integer sphere_chi = (d % 2 == 0) ? 2 : 0;
    if (s.euler_characteristic != sphere_chi) {
        throw StructureError("Euler characteristic " + to_string(s.euler_characteristic) + " differs from " +
                             to_string(sphere_chi) + ", so not a sphere");
    }

    ReductionResult result;
    result.certificate.start = x;
    const std::vector<std::string> labels = extended_labels(x);
    const int t_min = d - k + 1;  // reverse of a move of index < k
    const bool may_add_vertices = t_min <= 0;

    struct Node {
        Facets facets;
        std::size_t parent;
        RawMove move;
    };
    std::vector<Node> nodes;
    std::set<Facets> seen;
    using Key = std::tuple<int, std::size_t, std::size_t>;
    std::priority_queue<Key, std::vector<Key>, std::greater<>> open;

    auto push = [&](Facets f, std::size_t parent, RawMove m) {
        if (!seen.insert(f).second) return;
        const int f0 = popcount(support(f));
        const std::size_t fd = f.size();
        nodes.push_back({std::move(f), parent, m});
        open.emplace(f0, fd, nodes.size() - 1);
    };
    push(x.facets(), SIZE_MAX, {0, 0});

    std::size_t found = SIZE_MAX;
    while (!open.empty()) {
        if (result.states >= budget) break;
        const std::size_t id = std::get<2>(open.top());
        open.pop();
        ++result.states;
        const Facets cur = nodes[id].facets;
        if (is_simplex_boundary(cur, d)) {
            found = id;
            break;
        }
        for (const auto& m : raw_proper_moves(cur, d, std::max(t_min, 1), d)) {
            push(apply_raw(cur, m.alpha, m.beta), id, m);
        }
        if (may_add_vertices) {
            const Mask used = support(cur);
            if (used != ~Mask{0}) {
                const int fresh = std::countr_zero(~used);
                for (Mask f : cur) {
                    if (popcount(f) == d + 1) push(apply_raw(cur, f, bit(fresh)), id, {f, bit(fresh)});
                }
            }
        }
    }

    if (found != SIZE_MAX) {
        std::vector<RawMove> path;
        for (std::size_t id = found; nodes[id].parent != SIZE_MAX; id = nodes[id].parent) path.push_back(nodes[id].move);
        std::reverse(path.begin(), path.end());
        for (const auto& m : path) {
            BistellarMove bm{labels_of_mask(labels, m.alpha), labels_of_mask(labels, m.beta)};
            result.certificate.max_index = std::max(result.certificate.max_index, bm.index());
            result.certificate.moves.push_back(std::move(bm));
        }
        result.certificate.end = replay(x, result.certificate.moves);
        result.verdict = Verdict::Yes;
        return result;
    }
    if (open.empty() && !may_add_vertices) {
        result.verdict = Verdict::No;
        result.reason = "every complex reachable by moves of index >= " + std::to_string(t_min) +
                        " was explored without reaching a standard sphere";
    } else {
        result.verdict = Verdict::Unknown;
        result.reason = "budget of " + std::to_string(budget) + " states exhausted";
    }
    return result;
}

}  // namespace tightcx
