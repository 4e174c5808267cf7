#include "famc/degrees.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include <Eigen/Dense>

#include "famc/families.hpp"

namespace famc {

std::uint64_t DegreeSpectrum::order() const {
    std::uint64_t s = 0;
    for (auto [d, m] : entries) s += std::uint64_t(m) * d * d;
    return s;
}

std::uint64_t DegreeSpectrum::class_count() const {
    std::uint64_t s = 0;
    for (auto [d, m] : entries) s += m;
    return s;
}

unsigned DegreeSpectrum::max_degree() const {
    unsigned m = 0;
    for (auto [d, mult] : entries) m = std::max(m, d);
    return m;
}

unsigned DegreeSpectrum::multiplicity_of(unsigned degree) const {
    for (auto [d, m] : entries) {
        if (d == degree) return m;
    }
    return 0;
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// ---------- arithmetic in F_q ----------

struct Fq {
    u64 q;
    u64 add(u64 a, u64 b) const { return a + b >= q ? a + b - q : a + b; }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + q - b; }
    u64 neg(u64 a) const { return a ? q - a : 0; }
    u64 mul(u64 a, u64 b) const { return u64(u128(a) * b % q); }
    u64 pow(u64 a, u64 e) const {
        u64 r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    u64 inv(u64 a) const { return pow(a, q - 2); }
};

using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;  // row-major

// ---------- polynomials over F_q (coefficients low to high) ----------

void poly_trim(Vec& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

Vec poly_derivative(const Vec& p, const Fq& F) {
    if (p.size() <= 1) return {0};
    Vec d(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = F.mul(p[i], i % F.q);
    poly_trim(d);
    return d;
}

// a mod b in place; b nonzero.
void poly_mod(Vec& a, const Vec& b, const Fq& F) {
    const std::size_t db = b.size() - 1;
    const u64 lead_inv = F.inv(b.back());
    while (a.size() - 1 >= db && !(a.size() == 1 && a[0] == 0)) {
        const u64 f = F.mul(a.back(), lead_inv);
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            a[shift + i] = F.sub(a[shift + i], F.mul(f, b[i]));
        }
        poly_trim(a);
        if (a.size() - 1 < db || (a.size() == 1 && a[0] == 0)) break;
    }
}

Vec poly_gcd(Vec a, Vec b, const Fq& F) {
    poly_trim(a);
    poly_trim(b);
    while (!(b.size() == 1 && b[0] == 0)) {
        poly_mod(a, b, F);
        std::swap(a, b);
    }
    if (!(a.size() == 1 && a[0] == 0)) {
        const u64 li = F.inv(a.back());
        for (u64& c : a) c = F.mul(c, li);
    }
    return a;
}

// Exact division (remainder known to vanish).
Vec poly_div(const Vec& a, const Vec& b, const Fq& F) {
    Vec rem = a, quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 1, 0);
    const std::size_t db = b.size() - 1;
    const u64 lead_inv = F.inv(b.back());
    while (rem.size() - 1 >= db && !(rem.size() == 1 && rem[0] == 0)) {
        const u64 f = F.mul(rem.back(), lead_inv);
        const std::size_t shift = rem.size() - 1 - db;
        quot[shift] = f;
        for (std::size_t i = 0; i <= db; ++i) {
            rem[shift + i] = F.sub(rem[shift + i], F.mul(f, b[i]));
        }
        poly_trim(rem);
        if (rem.size() - 1 < db) break;
    }
    poly_trim(quot);
    return quot;
}

Vec poly_mulmod(const Vec& a, const Vec& b, const Vec& mod, const Fq& F) {
    Vec prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            prod[i + j] = F.add(prod[i + j], F.mul(a[i], b[j]));
        }
    }
    poly_trim(prod);
    poly_mod(prod, mod, F);
    return prod;
}

Vec poly_powmod(Vec base, u64 e, const Vec& mod, const Fq& F) {
    Vec r{1};
    poly_mod(base, mod, F);
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, mod, F);
        base = poly_mulmod(base, base, mod, F);
        e >>= 1;
    }
    return r;
}

// All roots in F_q of a polynomial that splits into distinct linear factors
// there (after the squarefree/linear-part reduction below).  Cantor-
// Zassenhaus splitting; deterministic given the rng state.
void collect_roots(const Vec& f, const Fq& F, std::mt19937_64& rng, Vec& out) {
    if (f.size() <= 1) return;
    if (f.size() == 2) {
        // monic x + c -> root -c
        out.push_back(F.neg(F.mul(f[0], F.inv(f[1]))));
        return;
    }
    while (true) {
        const u64 a = rng() % F.q;
        // gcd((x+a)^((q-1)/2) - 1, f)
        Vec h = poly_powmod(Vec{a, 1}, (F.q - 1) / 2, f, F);
        if (h.empty()) h = {0};
        h[0] = F.sub(h[0], 1);
        poly_trim(h);
        Vec d = poly_gcd(f, h, F);
        if (d.size() > 1 && d.size() < f.size()) {
            collect_roots(d, F, rng, out);
            collect_roots(poly_div(f, d, F), F, rng, out);
            return;
        }
    }
}

Vec distinct_roots(Vec f, const Fq& F, std::mt19937_64& rng) {
    poly_trim(f);
    {  // make monic
        const u64 li = F.inv(f.back());
        for (u64& c : f) c = F.mul(c, li);
    }
    Vec fp = poly_derivative(f, F);
    Vec sf = f;
    if (!(fp.size() == 1 && fp[0] == 0)) {
        Vec g = poly_gcd(f, fp, F);
        if (g.size() > 1) sf = poly_div(f, g, F);
    }
    // keep only linear factors: gcd(x^q - x, sf)
    Vec xq = poly_powmod(Vec{0, 1}, F.q, sf, F);
    // xq - x
    if (xq.size() < 2) xq.resize(2, 0);
    xq[1] = F.sub(xq[1], 1);
    poly_trim(xq);
    Vec lin = poly_gcd(sf, xq, F);
    Vec roots;
    collect_roots(lin, F, rng, roots);
    std::sort(roots.begin(), roots.end());
    return roots;
}

// Characteristic polynomial via similarity reduction to upper Hessenberg form
// followed by the standard leading-minor recurrence.
Vec charpoly(Mat a, const Fq& F) {
    const std::size_t m = a.size();
    for (std::size_t j = 0; j + 2 < m; ++j) {
        std::size_t piv = j + 1;
        while (piv < m && a[piv][j] == 0) ++piv;
        if (piv == m) continue;
        if (piv != j + 1) {
            std::swap(a[piv], a[j + 1]);
            for (std::size_t r = 0; r < m; ++r) std::swap(a[r][piv], a[r][j + 1]);
        }
        const u64 pinv = F.inv(a[j + 1][j]);
        for (std::size_t i = j + 2; i < m; ++i) {
            if (a[i][j] == 0) continue;
            const u64 f = F.mul(a[i][j], pinv);
            for (std::size_t c = 0; c < m; ++c) {
                a[i][c] = F.sub(a[i][c], F.mul(f, a[j + 1][c]));
            }
            for (std::size_t r = 0; r < m; ++r) {
                a[r][j + 1] = F.add(a[r][j + 1], F.mul(f, a[r][i]));
            }
        }
    }
    // p_0 = 1, p_t(x) = (x - h_tt) p_{t-1} - sum_i h_it (prod beta) p_{i-1}
    std::vector<Vec> p(m + 1);
    p[0] = {1};
    for (std::size_t t = 1; t <= m; ++t) {
        Vec cur(t + 1, 0);
        const u64 htt = a[t - 1][t - 1];
        for (std::size_t c = 0; c < t; ++c) {
            cur[c + 1] = F.add(cur[c + 1], p[t - 1][c]);
            cur[c] = F.sub(cur[c], F.mul(htt, p[t - 1][c]));
        }
        u64 beta_prod = 1;
        for (std::size_t i = t - 1; i >= 1; --i) {
            beta_prod = F.mul(beta_prod, a[i][i - 1]);
            const u64 coef = F.mul(a[i - 1][t - 1], beta_prod);
            if (coef != 0) {
                for (std::size_t c = 0; c < p[i - 1].size(); ++c) {
                    cur[c] = F.sub(cur[c], F.mul(coef, p[i - 1][c]));
                }
            }
        }
        p[t] = std::move(cur);
    }
    return p[m];
}

// Basis of ker(a) via row reduction; returns column vectors.
std::vector<Vec> nullspace(Mat a, const Fq& F) {
    const std::size_t m = a.size();
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m && row < m; ++col) {
        std::size_t piv = row;
        while (piv < m && a[piv][col] == 0) ++piv;
        if (piv == m) continue;
        std::swap(a[piv], a[row]);
        const u64 inv = F.inv(a[row][col]);
        for (std::size_t c = col; c < m; ++c) a[row][c] = F.mul(a[row][c], inv);
        for (std::size_t r = 0; r < m; ++r) {
            if (r != row && a[r][col] != 0) {
                const u64 f = a[r][col];
                for (std::size_t c = col; c < m; ++c) {
                    a[r][c] = F.sub(a[r][c], F.mul(f, a[row][c]));
                }
            }
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(m, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < m; ++free) {
        if (is_pivot[free]) continue;
        Vec v(m, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivot_col.size(); ++r) {
            v[pivot_col[r]] = F.neg(a[r][free]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Column echelon form of a collection of vectors: basis vectors each carry a
// pivot row where they equal 1 and all other basis vectors vanish, so
// restricting an operator to the span just reads off pivot rows.
struct Echelon {
    std::vector<Vec> vecs;
    std::vector<std::size_t> pivots;
};

Echelon column_echelon(const std::vector<Vec>& input, const Fq& F) {
    Echelon e;
    for (Vec v : input) {
        for (std::size_t b = 0; b < e.vecs.size(); ++b) {
            const u64 c = v[e.pivots[b]];
            if (c != 0) {
                for (std::size_t r = 0; r < v.size(); ++r) {
                    v[r] = F.sub(v[r], F.mul(c, e.vecs[b][r]));
                }
            }
        }
        std::size_t piv = 0;
        while (piv < v.size() && v[piv] == 0) ++piv;
        if (piv == v.size()) continue;  // dependent
        const u64 inv = F.inv(v[piv]);
        for (u64& x : v) x = F.mul(x, inv);
        for (std::size_t b = 0; b < e.vecs.size(); ++b) {
            const u64 c = e.vecs[b][piv];
            if (c != 0) {
                for (std::size_t r = 0; r < v.size(); ++r) {
                    e.vecs[b][r] = F.sub(e.vecs[b][r], F.mul(c, v[r]));
                }
            }
        }
        e.vecs.push_back(std::move(v));
        e.pivots.push_back(piv);
    }
    return e;
}

u64 integer_sqrt(u64 v) {
    u64 r = u64(std::llround(std::sqrt(double(v))));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

}  // namespace

DegreeSpectrum degree_spectrum(const FiniteGroup& g, std::size_t class_cap) {
    const std::size_t n = g.order();
    const ConjugacyClasses cc = conjugacy_classes(g);
    const std::size_t k = cc.count();
    if (k > class_cap) {
        throw ClassCapError("conjugacy class count " + std::to_string(k) +
                            " exceeds cap " + std::to_string(class_cap));
    }
    if (k == n) {
        // abelian: all characters are linear
        return DegreeSpectrum{{{1u, unsigned(n)}}};
    }

    const u64 e = g.exponent();
    u64 q = 0;
    for (u64 t = (2 * n) / e + 1;; ++t) {
        const u64 cand = e * t + 1;
        if (cand > (u64(1) << 31)) {
            throw NoSuitablePrimeError("no usable prime below 2^31");
        }
        if (cand > 2 * n && is_prime(cand)) {
            q = cand;
            break;
        }
    }
    const Fq F{q};
    std::mt19937_64 rng(kDefaultSeed ^ (q << 16) ^ n);

    std::vector<std::size_t> class_size(k);
    std::vector<std::size_t> inv_class(k);
    for (std::size_t i = 0; i < k; ++i) {
        class_size[i] = cc.classes[i].size();
        inv_class[i] = cc.class_of[g.inverse(cc.classes[i].front())];
    }

    // Simultaneous eigenspace refinement of the class-algebra action.  Each
    // surviving subspace accumulates the eigenvalue (central character value)
    // of every class matrix processed so far.
    struct Space {
        std::vector<Vec> basis;
        std::vector<std::size_t> pivots;
        Vec omega;  // indexed by class
    };
    std::vector<Space> spaces(1);
    spaces[0].omega.assign(k, 0);
    spaces[0].omega[0] = 1;  // identity class acts as 1
    for (std::size_t r = 0; r < k; ++r) {
        Vec v(k, 0);
        v[r] = 1;
        spaces[0].basis.push_back(std::move(v));
        spaces[0].pivots.push_back(r);
    }

    Mat counts(k, Vec(k));
    for (std::size_t ci = 1; ci < k; ++ci) {
        for (auto& row : counts) std::fill(row.begin(), row.end(), 0);
        for (Elem x : cc.classes[ci]) {
            for (Elem y = 0; y < n; ++y) {
                counts[cc.class_of[y]][cc.class_of[g.mul(x, y)]] += 1;
            }
        }
        // counts[j][l] = a_{ci,j,l} * |C_l|; the structure-constant matrix
        // B[j][l] = a_{ci,j,l} has the central character vectors as
        // eigenvectors: (B w)_j = w_i(ci) * w_j.
        Mat b(k, Vec(k));
        for (std::size_t j = 0; j < k; ++j) {
            for (std::size_t l = 0; l < k; ++l) {
                const u64 c = counts[j][l];
                if (c % class_size[l] != 0) {
                    throw Error("internal: class structure constants");
                }
                b[j][l] = (c / class_size[l]) % q;
            }
        }

        std::vector<Space> next;
        next.reserve(spaces.size());
        for (Space& sp : spaces) {
            const std::size_t m = sp.basis.size();
            // The basis is in reduced column-echelon form, so coordinates on
            // the span are read off the pivot rows and the restriction of B
            // needs only those rows of each image.
            Mat restr(m, Vec(m));
            for (std::size_t r2 = 0; r2 < m; ++r2) {
                const Vec& brow = b[sp.pivots[r2]];
                for (std::size_t col = 0; col < m; ++col) {
                    u64 acc = 0;
                    for (std::size_t l = 0; l < k; ++l) {
                        if (sp.basis[col][l]) {
                            acc = F.add(acc, F.mul(brow[l], sp.basis[col][l]));
                        }
                    }
                    restr[r2][col] = acc;
                }
            }
            if (m == 1) {
                sp.omega[ci] = restr[0][0];
                next.push_back(std::move(sp));
                continue;
            }
            const Vec roots = distinct_roots(charpoly(restr, F), F, rng);
            if (roots.size() == 1) {
                sp.omega[ci] = roots[0];
                next.push_back(std::move(sp));
                continue;
            }
            std::size_t total = 0;
            for (const u64 lambda : roots) {
                Mat shifted = restr;
                for (std::size_t d2 = 0; d2 < m; ++d2) {
                    shifted[d2][d2] = F.sub(shifted[d2][d2], lambda);
                }
                const std::vector<Vec> null = nullspace(shifted, F);
                std::vector<Vec> child_vecs;
                child_vecs.reserve(null.size());
                for (const Vec& nv : null) {
                    Vec u(k, 0);
                    for (std::size_t c2 = 0; c2 < m; ++c2) {
                        if (nv[c2]) {
                            for (std::size_t r2 = 0; r2 < k; ++r2) {
                                u[r2] = F.add(u[r2],
                                              F.mul(nv[c2], sp.basis[c2][r2]));
                            }
                        }
                    }
                    child_vecs.push_back(std::move(u));
                }
                Echelon ech = column_echelon(child_vecs, F);
                Space child;
                child.basis = std::move(ech.vecs);
                child.pivots = std::move(ech.pivots);
                child.omega = sp.omega;
                child.omega[ci] = lambda;
                total += child.basis.size();
                next.push_back(std::move(child));
            }
            if (total != m) {
                throw Error("internal: eigenspace refinement lost dimensions");
            }
        }
        spaces = std::move(next);
    }

    if (spaces.size() != k) {
        throw Error("internal: expected one eigenvector per class");
    }

    std::map<unsigned, unsigned> mult;
    u64 sum_sq = 0;
    for (const Space& sp : spaces) {
        // second orthogonality: sum_i w_i w_{i*} / |C_i| = |G| / d^2
        u64 s = 0;
        for (std::size_t i = 0; i < k; ++i) {
            const u64 term = F.mul(F.mul(sp.omega[i], sp.omega[inv_class[i]]),
                                   F.inv(class_size[i] % q));
            s = F.add(s, term);
        }
        if (s == 0) throw Error("internal: vanishing norm in degree recovery");
        const u64 d2 = F.mul(n % q, F.inv(s));
        if (d2 > n) throw Error("internal: lifted degree square exceeds order");
        const u64 d = integer_sqrt(d2);
        if (d * d != d2) throw Error("internal: degree square is not a square");
        mult[unsigned(d)] += 1;
        sum_sq += d2;
    }
    if (sum_sq != n) throw Error("internal: degree squares do not sum to order");

    DegreeSpectrum out;
    for (auto [d, m] : mult) out.entries.emplace_back(d, m);
    return out;
}

DegreeSpectrum degree_spectrum_numeric(const FiniteGroup& g,
                                       std::uint64_t seed,
                                       std::size_t max_order) {
    const std::size_t n = g.order();
    if (n > max_order) {
        throw CapExceededError("order " + std::to_string(n) +
                               " exceeds numeric cap " +
                               std::to_string(max_order));
    }
    const ConjugacyClasses cc = conjugacy_classes(g);
    const std::size_t k = cc.count();
    std::vector<std::size_t> inv_class(k);
    for (std::size_t i = 0; i < k; ++i) {
        inv_class[i] = cc.class_of[g.inverse(cc.classes[i].front())];
    }

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    for (int attempt = 0; attempt < 5; ++attempt) {
        // random symmetric class function: c(x) = c(x^-1)
        std::vector<double> c(k);
        for (std::size_t i = 0; i < k; ++i) {
            c[i] = inv_class[i] < i ? c[inv_class[i]] : gauss(rng);
        }
        Eigen::MatrixXd t(n, n);
        for (Elem h = 0; h < n; ++h) {
            for (Elem g2 = 0; g2 < n; ++g2) {
                t(h, g2) = c[cc.class_of[g.mul(h, g.inverse(g2))]];
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t,
                                                          Eigen::EigenvaluesOnly);
        Eigen::VectorXd ev = es.eigenvalues();
        double scale = std::max(std::abs(ev(0)), std::abs(ev(n - 1)));
        const double gap = 1e-7 * std::max(1.0, scale);

        std::vector<std::size_t> cluster_sizes;
        std::size_t run = 1;
        for (std::size_t i = 1; i < std::size_t(ev.size()); ++i) {
            if (ev(i) - ev(i - 1) > gap) {
                cluster_sizes.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        cluster_sizes.push_back(run);

        // cluster of size d^2 -> one irrep of degree d; size 2d^2 -> a
        // conjugate pair.  Never ambiguous: d^2 = 2e^2 has no solutions.
        std::map<unsigned, unsigned> mult;
        bool ok = true;
        std::size_t irrep_count = 0;
        std::uint64_t sum_sq = 0;
        for (std::size_t s : cluster_sizes) {
            const u64 d1 = integer_sqrt(s);
            if (d1 * d1 == s) {
                mult[unsigned(d1)] += 1;
                irrep_count += 1;
                sum_sq += s;
                continue;
            }
            if (s % 2 == 0) {
                const u64 d2 = integer_sqrt(s / 2);
                if (2 * d2 * d2 == s) {
                    mult[unsigned(d2)] += 2;
                    irrep_count += 2;
                    sum_sq += s;
                    continue;
                }
            }
            ok = false;
            break;
        }
        if (ok && irrep_count == k && sum_sq == n) {
            DegreeSpectrum out;
            for (auto [d, m] : mult) out.entries.emplace_back(d, m);
            return out;
        }
    }
    throw DegenerateSampleError(
        "eigenvalue clusters failed to resolve after 5 samples");
}

}  // namespace famc
