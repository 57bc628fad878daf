#pragma once

// Brute-force reference implementations on plain integer faces. They share
// no code with the library beyond GMP.

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tightcx/complex.hpp"

namespace oracle {

using Face = std::vector<int>;
using Faces = std::set<Face>;

// Every face of the closure, including the empty face.
inline Faces closure(const std::vector<Face>& facets) {
    Faces out;
    for (const auto& f : facets) {
        const int n = static_cast<int>(f.size());
        for (int s = 0; s < (1 << n); ++s) {
            Face g;
            for (int i = 0; i < n; ++i) {
                if (s >> i & 1) g.push_back(f[i]);
            }
            out.insert(g);
        }
    }
    return out;
}

// Faces of the library complex, in vertex indices.
inline Faces faces_of(const tightcx::Complex& x) {
    std::vector<Face> facets;
    for (auto m : x.facets()) {
        Face f;
        for (int i = 0; i < 64; ++i) {
            if (m >> i & 1) f.push_back(i);
        }
        facets.push_back(f);
    }
    return closure(facets);
}

inline int dim_of(const Faces& fs) {
    int d = -1;
    for (const auto& f : fs) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

// f_{-1}, f_0, ..., f_d.
inline std::vector<long> face_counts(const Faces& fs) {
    std::vector<long> f(static_cast<std::size_t>(dim_of(fs)) + 2, 0);
    for (const auto& g : fs) ++f[g.size()];
    return f;
}

inline Faces induced(const Faces& fs, const std::set<int>& a) {
    Faces out;
    for (const auto& f : fs) {
        if (std::all_of(f.begin(), f.end(), [&](int v) { return a.count(v) > 0; })) out.insert(f);
    }
    return out;
}

inline Faces link(const Faces& fs, int v) {
    Faces out;
    for (const auto& f : fs) {
        if (!std::binary_search(f.begin(), f.end(), v)) continue;
        Face g;
        for (int u : f) {
            if (u != v) g.push_back(u);
        }
        out.insert(g);
    }
    return out;
}

inline std::set<int> vertices(const Faces& fs) {
    std::set<int> out;
    for (const auto& f : fs) out.insert(f.begin(), f.end());
    return out;
}

// Rank over Q (p = 0) or F_p by dense Gaussian elimination.
inline std::size_t rank(std::vector<std::vector<mpq_class>> m, unsigned p) {
    if (p != 0) {
        for (auto& row : m) {
            for (auto& e : row) {
                mpz_class z = e.get_num() % p;
                if (z < 0) z += p;
                e = z;
            }
        }
    }
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[r], m[piv]);
        mpq_class inv = 1 / m[r][c];
        if (p != 0) {
            mpz_class z;
            mpz_class a = m[r][c].get_num();
            mpz_invert(z.get_mpz_t(), a.get_mpz_t(), mpz_class(p).get_mpz_t());
            inv = z;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            const mpq_class factor = m[i][c] * inv;
            for (std::size_t j = c; j < cols; ++j) {
                m[i][j] -= factor * m[r][j];
                if (p != 0) {
                    mpz_class z = m[i][j].get_num() % p;
                    if (z < 0) z += p;
                    m[i][j] = z;
                }
            }
        }
        ++r;
    }
    return r;
}

// Boundary matrix from the i-faces of `chains` to its (i-1)-faces; rows of
// faces outside `rows` are dropped. Sign (-1)^position.
inline std::vector<std::vector<mpq_class>> boundary(const Faces& chains, const Faces& rows, int i) {
    std::vector<Face> lo, hi;
    for (const auto& f : rows) {
        if (static_cast<int>(f.size()) == i) lo.push_back(f);
    }
    for (const auto& f : chains) {
        if (static_cast<int>(f.size()) == i + 1) hi.push_back(f);
    }
    std::vector<std::vector<mpq_class>> m(lo.size(), std::vector<mpq_class>(hi.size(), 0));
    for (std::size_t c = 0; c < hi.size(); ++c) {
        for (std::size_t pos = 0; pos < hi[c].size(); ++pos) {
            Face g = hi[c];
            g.erase(g.begin() + static_cast<long>(pos));
            const auto it = std::find(lo.begin(), lo.end(), g);
            if (it != lo.end()) m[static_cast<std::size_t>(it - lo.begin())][c] = (pos % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

// Homology of the chain complex on fs minus sub (sub a subcomplex), in
// degrees 0..top, over Q (p = 0) or F_p. The empty face is ignored.
inline std::vector<long> relative_betti(const Faces& fs, const Faces& sub, int top, unsigned p) {
    Faces rel;
    for (const auto& f : fs) {
        if (!f.empty() && !sub.count(f)) rel.insert(f);
    }
    std::vector<long> out;
    for (int i = 0; i <= top; ++i) {
        long n = 0;
        for (const auto& f : rel) n += static_cast<int>(f.size()) == i + 1 ? 1 : 0;
        const long r_out = i == 0 ? 0 : static_cast<long>(rank(boundary(rel, rel, i), p));
        const long r_in = static_cast<long>(rank(boundary(rel, rel, i + 1), p));
        out.push_back(n - r_out - r_in);
    }
    return out;
}

inline std::vector<long> betti(const Faces& fs, int top, unsigned p) { return relative_betti(fs, {}, top, p); }

// Reduced: beta~_0 = beta_0 - 1, so the empty complex has beta~_0 = -1.
inline std::vector<long> reduced_betti(const Faces& fs, int top, unsigned p) {
    auto b = betti(fs, top, p);
    b[0] -= 1;
    return b;
}

// Components of the 1-skeleton restricted to `a`, by union-find.
inline int components(const Faces& fs, const std::set<int>& a) {
    std::map<int, int> parent;
    for (int v : a) parent[v] = v;
    std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
    for (const auto& f : fs) {
        if (f.size() == 2 && a.count(f[0]) && a.count(f[1])) parent[find(f[0])] = find(f[1]);
    }
    int c = 0;
    for (int v : a) c += find(v) == v ? 1 : 0;
    return c;
}

inline mpz_class choose(long n, long k) {
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// sigma_i over all subsets of the vertex set `vs`, degrees 0..top.
inline std::vector<mpq_class> sigma(const Faces& fs, const std::set<int>& vs, int top, unsigned p) {
    const std::vector<int> v(vs.begin(), vs.end());
    const long m = static_cast<long>(v.size());
    std::vector<mpq_class> out(static_cast<std::size_t>(top) + 1, 0);
    for (long s = 0; s < (1L << m); ++s) {
        std::set<int> a;
        for (long i = 0; i < m; ++i) {
            if (s >> i & 1) a.insert(v[static_cast<std::size_t>(i)]);
        }
        const auto b = reduced_betti(induced(fs, a), top, p);
        mpq_class w(mpz_class(1), choose(m, static_cast<long>(a.size())));
        w.canonicalize();
        for (int i = 0; i <= top; ++i) out[static_cast<std::size_t>(i)] += w * b[static_cast<std::size_t>(i)];
    }
    for (auto& q : out) q.canonicalize();
    return out;
}

// mu_0 = 1, mu_i = delta_{i1} + (1/m) sum_x sigma_{i-1}(lk x).
inline std::vector<mpq_class> mu(const Faces& fs, unsigned p) {
    const int d = dim_of(fs);
    const auto vs = vertices(fs);
    std::vector<mpq_class> out(static_cast<std::size_t>(d) + 1, 0);
    out[0] = 1;
    if (d >= 1) out[1] = 1;
    for (int x : vs) {
        const auto lk = link(fs, x);
        const auto s = sigma(lk, vertices(lk), std::max(d - 1, 0), p);
        for (int i = 1; i <= d; ++i) out[static_cast<std::size_t>(i)] += s[static_cast<std::size_t>(i - 1)] / mpq_class(static_cast<long>(vs.size()));
    }
    for (auto& q : out) q.canonicalize();
    return out;
}

// H_j(X[A]) -> H_j(X) is injective iff the boundaries of X supported in A
// are exactly the boundaries of X[A].
inline bool injective(const Faces& fs, const std::set<int>& a, int j, unsigned p) {
    const Faces sub = induced(fs, a);
    Faces nonempty;
    for (const auto& f : fs) {
        if (!f.empty()) nonempty.insert(f);
    }
    Faces sub_nonempty;
    for (const auto& f : sub) {
        if (!f.empty()) sub_nonempty.insert(f);
    }
    const auto full = boundary(nonempty, nonempty, j + 1);
    Faces outside;
    for (const auto& f : nonempty) {
        if (!sub.count(f)) outside.insert(f);
    }
    const auto off = boundary(nonempty, outside, j + 1);
    const long in_a = static_cast<long>(rank(full, p)) - static_cast<long>(rank(off, p));
    return in_a == static_cast<long>(rank(boundary(sub_nonempty, sub_nonempty, j + 1), p));
}

// Random pure complex: `n` random facets of size k on v vertices.
inline std::vector<std::vector<std::string>> random_facets(std::mt19937_64& rng, int v, int k, int n) {
    std::vector<std::vector<std::string>> out;
    std::vector<int> pool(static_cast<std::size_t>(v));
    std::iota(pool.begin(), pool.end(), 1);
    for (int i = 0; i < n; ++i) {
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<std::string> f;
        for (int j = 0; j < k; ++j) f.push_back(std::to_string(pool[static_cast<std::size_t>(j)]));
        out.push_back(f);
    }
    return out;
}

// Complete graph on m vertices plus random triangles.
inline tightcx::Complex random_two_neighbourly(std::mt19937_64& rng, int m, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<std::vector<std::string>> facets;
    for (int a = 1; a <= m; ++a) {
        for (int b = a + 1; b <= m; ++b) {
            facets.push_back({std::to_string(a), std::to_string(b)});
            for (int c = b + 1; c <= m; ++c) {
                if (coin(rng)) facets.push_back({std::to_string(a), std::to_string(b), std::to_string(c)});
            }
        }
    }
    return tightcx::Complex::from_facets(facets);
}

}  // namespace oracle
