#include "famc/irreps.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace famc {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::string join_unsigned(const std::vector<unsigned>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

}  // namespace

// Peels off a maximal-order cyclic summand and recurses on the quotient;
// generators of the quotient are lifted to elements of the same order by
// correcting with a power of the summand generator.
static void decompose_abelian(const GroupPtr& a,
                              std::vector<std::pair<Elem, unsigned>>& out) {
    const std::size_t n = a->order();
    if (n == 1) return;

    Elem g = 0;
    unsigned best = 1;
    for (Elem x = 0; x < n; ++x) {
        const unsigned o = a->element_order(x);
        if (o > best) {
            best = o;
            g = x;
        }
    }
    const unsigned ord_g = best;

    Subgroup cyc = subgroup_generated(a, {g});
    QuotientResult q = quotient_group(a, cyc);

    std::vector<std::pair<Elem, unsigned>> sub;
    decompose_abelian(q.group, sub);

    out.emplace_back(g, ord_g);

    // dlog table inside <g>
    std::map<Elem, unsigned> dlog;
    {
        Elem x = a->identity();
        for (unsigned t = 0; t < ord_g; ++t) {
            dlog[x] = t;
            x = a->mul(x, g);
        }
    }

    for (auto [qgen, m] : sub) {
        // any preimage of the quotient generator
        Elem h = 0;
        bool found = false;
        for (Elem x = 0; x < n; ++x) {
            if (q.coset_of[x] == qgen) {
                h = x;
                found = true;
                break;
            }
        }
        if (!found) throw Error("internal: quotient preimage missing");
        const Elem hm = a->power(h, m);
        auto it = dlog.find(hm);
        if (it == dlog.end()) {
            throw Error("internal: lifted power escapes cyclic summand");
        }
        const unsigned t = it->second;
        if (t % m != 0) throw Error("internal: lift correction not divisible");
        const Elem adjusted = a->mul(h, a->power(g, -(long long)(t / m)));
        if (a->element_order(adjusted) != m) {
            throw Error("internal: lifted generator has wrong order");
        }
        out.emplace_back(adjusted, m);
    }
}

AbelianBasis abelian_basis(const GroupPtr& g) {
    if (!g->is_abelian()) {
        throw NotAbelianError("group of order " + std::to_string(g->order()) +
                              " is not abelian");
    }
    std::vector<std::pair<Elem, unsigned>> gens;
    decompose_abelian(g, gens);

    AbelianBasis basis;
    for (auto [e, o] : gens) {
        basis.generators.push_back(e);
        basis.orders.push_back(o);
    }

    // exponent vectors for every element, with a bijectivity sanity check
    const std::size_t n = g->order();
    const std::size_t r = basis.generators.size();
    std::uint64_t total = 1;
    for (unsigned o : basis.orders) total *= o;
    if (total != n) throw Error("internal: basis orders do not multiply to |G|");

    basis.coords.assign(n, {});
    std::vector<bool> seen(n, false);
    std::vector<unsigned> k(r, 0);
    for (std::uint64_t count = 0; count < total; ++count) {
        Elem x = g->identity();
        for (std::size_t j = 0; j < r; ++j) {
            x = g->mul(x, g->power(basis.generators[j], k[j]));
        }
        if (seen[x]) throw Error("internal: basis enumeration collided");
        seen[x] = true;
        basis.coords[x] = k;
        for (std::size_t j = r; j-- > 0;) {
            if (++k[j] < basis.orders[j]) break;
            k[j] = 0;
        }
    }
    return basis;
}

namespace {

// Shared character bookkeeping over an abelian basis: characters are indexed
// by exponent vectors, values are exact fractions of a full turn.
struct CharTable {
    const AbelianBasis* basis;
    std::uint64_t lcm_order = 1;             // L
    std::vector<std::uint64_t> weight;       // L / n_j
    std::vector<std::uint64_t> stride;       // mixed-radix strides, last = 1

    explicit CharTable(const AbelianBasis& b) : basis(&b) {
        for (unsigned o : b.orders) lcm_order = std::lcm<std::uint64_t>(lcm_order, o);
        weight.resize(b.orders.size());
        for (std::size_t j = 0; j < b.orders.size(); ++j) {
            weight[j] = lcm_order / b.orders[j];
        }
        stride.assign(b.orders.size(), 1);
        for (std::size_t j = b.orders.size(); j-- > 1;) {
            stride[j - 1] = stride[j] * b.orders[j];
        }
    }

    std::size_t char_count() const {
        std::size_t t = 1;
        for (unsigned o : basis->orders) t *= o;
        return t;
    }

    std::size_t index_of(const std::vector<unsigned>& k) const {
        std::size_t idx = 0;
        for (std::size_t j = 0; j < k.size(); ++j) idx += k[j] * stride[j];
        return idx;
    }

    std::vector<unsigned> vector_of(std::size_t idx) const {
        std::vector<unsigned> k(basis->orders.size());
        for (std::size_t j = 0; j < k.size(); ++j) {
            k[j] = unsigned(idx / stride[j]);
            idx %= stride[j];
        }
        return k;
    }

    // character value exponent: chi_k(a) = exp(2 pi i * num / L)
    std::uint64_t turn_numerator(const std::vector<unsigned>& k, Elem a) const {
        std::uint64_t num = 0;
        const auto& e = basis->coords[a];
        for (std::size_t j = 0; j < k.size(); ++j) {
            num = (num + std::uint64_t(k[j]) * e[j] % lcm_order * weight[j]) %
                  lcm_order;
        }
        return num;
    }

    Cplx value(const std::vector<unsigned>& k, Elem a) const {
        const std::uint64_t num = turn_numerator(k, a);
        return std::polar(1.0, kTwoPi * double(num) / double(lcm_order));
    }
};

}  // namespace

std::vector<UnitaryIrrep> abelian_dual(const GroupPtr& g) {
    const AbelianBasis basis = abelian_basis(g);
    const CharTable ct(basis);
    const std::size_t n = g->order();
    std::vector<UnitaryIrrep> out;
    out.reserve(n);
    for (std::size_t idx = 0; idx < ct.char_count(); ++idx) {
        const std::vector<unsigned> k = ct.vector_of(idx);
        UnitaryIrrep chi;
        chi.group = g;
        chi.degree = 1;
        chi.label = "chi(" + join_unsigned(k) + ")";
        chi.matrices.resize(n, Matrix::Zero(1, 1));
        for (Elem a = 0; a < n; ++a) chi.matrices[a](0, 0) = ct.value(k, a);
        out.push_back(std::move(chi));
    }
    return out;
}

SemidirectData make_semidirect_data(const GroupPtr& g, const Subgroup& a,
                                    const Subgroup& h) {
    if (a.parent.get() != g.get() || h.parent.get() != g.get()) {
        if (!same_group(*a.parent, *g) || !same_group(*h.parent, *g)) {
            throw GroupMismatchError("factors belong to a different group");
        }
    }
    if (!is_abelian_subgroup(a)) {
        throw InvalidDecompositionError("normal factor is not abelian");
    }
    if (!is_normal(a)) {
        throw InvalidDecompositionError("first factor is not normal");
    }
    // complement must be a subgroup too
    for (Elem x : h.members) {
        for (Elem y : h.members) {
            if (!h.contains(g->mul(x, y))) {
                throw InvalidDecompositionError("complement is not closed");
            }
        }
    }
    const std::size_t n = g->order();
    if (a.size() * h.size() != n) {
        throw InvalidDecompositionError("|A| * |H| does not equal |G|");
    }
    SemidirectData data;
    data.parent = g;
    data.normal_part = a;
    data.complement = h;
    const auto sentinel = std::make_pair(Elem(n), Elem(n));
    data.factor_of.assign(n, sentinel);
    for (Elem ae : a.members) {
        for (Elem he : h.members) {
            const Elem prod = g->mul(ae, he);
            if (data.factor_of[prod] != sentinel) {
                throw InvalidDecompositionError(
                    "factorization is not unique (A meets H nontrivially)");
            }
            data.factor_of[prod] = {ae, he};
        }
    }
    return data;
}

std::vector<UnitaryIrrep> semidirect_irreps(const SemidirectData& data,
                                            std::uint64_t seed,
                                            std::size_t stabilizer_cap) {
    const GroupPtr& g = data.parent;
    const std::size_t n = g->order();

    auto [a_grp, a_embed] = subgroup_as_group(data.normal_part);
    auto [h_grp, h_embed] = subgroup_as_group(data.complement);
    const std::size_t na = a_grp->order(), nh = h_grp->order();

    std::vector<Elem> a_local(n, Elem(n));
    for (Elem i = 0; i < na; ++i) a_local[a_embed[i]] = i;
    std::vector<Elem> h_local(n, Elem(n));
    for (Elem i = 0; i < nh; ++i) h_local[h_embed[i]] = i;

    const AbelianBasis basis = abelian_basis(a_grp);
    const CharTable ct(basis);
    const std::size_t r = basis.generators.size();

    // conjugation action of H on A in local indices: a -> h^-1 a h
    std::vector<std::vector<Elem>> conj(nh, std::vector<Elem>(na));
    for (Elem hi = 0; hi < nh; ++hi) {
        const Elem hp = h_embed[hi];
        const Elem hp_inv = g->inverse(hp);
        for (Elem ai = 0; ai < na; ++ai) {
            const Elem image = g->mul(g->mul(hp_inv, a_embed[ai]), hp);
            if (a_local[image] == Elem(n)) {
                throw InvalidDecompositionError(
                    "normal factor is not preserved by conjugation");
            }
            conj[hi][ai] = a_local[image];
        }
    }

    // (h . chi)(a) = chi(h^-1 a h); computed exactly on exponent vectors.
    auto act = [&](Elem hi, const std::vector<unsigned>& k) {
        std::vector<unsigned> kk(r);
        for (std::size_t j = 0; j < r; ++j) {
            const std::uint64_t num =
                ct.turn_numerator(k, conj[hi][basis.generators[j]]);
            const std::uint64_t scaled = num * basis.orders[j];
            if (scaled % ct.lcm_order != 0) {
                throw Error("internal: acted character is not a character");
            }
            kk[j] = unsigned((scaled / ct.lcm_order) % basis.orders[j]);
        }
        return kk;
    };

    const std::size_t char_count = ct.char_count();
    std::vector<bool> visited(char_count, false);
    std::vector<UnitaryIrrep> out;
    std::uint64_t degree_sq_sum = 0;

    for (std::size_t rep_idx = 0; rep_idx < char_count; ++rep_idx) {
        if (visited[rep_idx]) continue;
        // orbit of the character under H, and the stabilizer of the
        // representative
        std::vector<std::size_t> orbit{rep_idx};
        visited[rep_idx] = true;
        std::vector<Elem> stab_h;  // H-local
        const std::vector<unsigned> rep_k = ct.vector_of(rep_idx);
        for (Elem hi = 0; hi < nh; ++hi) {
            const std::size_t img = ct.index_of(act(hi, rep_k));
            if (img == rep_idx) stab_h.push_back(hi);
            if (!visited[img]) {
                visited[img] = true;
                orbit.push_back(img);
            }
        }
        if (orbit.size() * stab_h.size() != nh) {
            throw Error("internal: orbit-stabilizer count mismatch");
        }

        Subgroup stab{g, {}};
        for (Elem hi : stab_h) stab.members.push_back(h_embed[hi]);
        std::sort(stab.members.begin(), stab.members.end());
        auto [stab_grp, stab_embed] = subgroup_as_group(stab);
        std::vector<Elem> stab_local(n, Elem(n));
        for (Elem i = 0; i < stab_grp->order(); ++i) stab_local[stab_embed[i]] = i;

        std::vector<UnitaryIrrep> rhos;
        try {
            rhos = complete_irreps(stab_grp, seed, stabilizer_cap);
        } catch (const CapExceededError& e) {
            throw UnsupportedStabilizerError(
                std::string("stabilizer too large for numeric fallback: ") +
                e.what());
        }

        // little group S = A . H_chi and a left transversal for its cosets
        std::vector<Elem> s_members;
        s_members.reserve(na * stab.members.size());
        for (Elem ai = 0; ai < na; ++ai) {
            for (Elem hp : stab.members) {
                s_members.push_back(g->mul(a_embed[ai], hp));
            }
        }
        std::vector<Elem> transversal;
        std::vector<Elem> coset_of(n, Elem(n));
        for (Elem x = 0; x < n; ++x) {
            if (coset_of[x] != Elem(n)) continue;
            const Elem t = x;
            const Elem ci = Elem(transversal.size());
            transversal.push_back(t);
            for (Elem s : s_members) coset_of[g->mul(t, s)] = ci;
        }
        if (transversal.size() != orbit.size()) {
            throw Error("internal: coset count differs from orbit size");
        }
        const std::size_t cosets = transversal.size();

        for (const UnitaryIrrep& rho : rhos) {
            const unsigned d = rho.degree;
            const unsigned bigd = unsigned(cosets) * d;
            UnitaryIrrep ind;
            ind.group = g;
            ind.degree = bigd;
            ind.label = "ind" + std::to_string(rep_idx) + "[" + rho.label + "]";
            ind.matrices.assign(n, Matrix::Zero(bigd, bigd));
            for (Elem x = 0; x < n; ++x) {
                Matrix& m = ind.matrices[x];
                for (std::size_t j = 0; j < cosets; ++j) {
                    const Elem y = g->mul(x, transversal[j]);
                    const std::size_t i = coset_of[y];
                    const Elem s = g->mul(g->inverse(transversal[i]), y);
                    const auto [ap, hp] = data.factor_of[s];
                    if (stab_local[hp] == Elem(n)) {
                        throw Error("internal: transversal does not respect S");
                    }
                    const Cplx chi = ct.value(rep_k, a_local[ap]);
                    m.block(long(i) * d, long(j) * d, d, d) =
                        chi * rho.matrices[stab_local[hp]];
                }
            }
            degree_sq_sum += std::uint64_t(bigd) * bigd;
            out.push_back(std::move(ind));
        }
    }

    if (degree_sq_sum != n) {
        throw Error("internal: induced degrees do not sum to |G|");
    }
    return out;
}

UnitaryIrrep tensor_irrep(const UnitaryIrrep& a, const UnitaryIrrep& b,
                          GroupPtr product) {
    const std::size_t na = a.group->order(), nb = b.group->order();
    if (!product) {
        product = direct_product(a.group, b.group);
    } else if (product->order() != na * nb) {
        throw GroupMismatchError("product group has wrong order");
    }
    UnitaryIrrep out;
    out.group = product;
    out.degree = a.degree * b.degree;
    out.label = "(" + a.label + ")x(" + b.label + ")";
    out.matrices.reserve(na * nb);
    const long ra = a.degree, rb = b.degree;
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < nb; ++j) {
            Matrix m(ra * rb, ra * rb);
            for (long p = 0; p < ra; ++p) {
                for (long q2 = 0; q2 < ra; ++q2) {
                    m.block(p * rb, q2 * rb, rb, rb) =
                        a.matrices[i](p, q2) * b.matrices[j];
                }
            }
            out.matrices.push_back(std::move(m));
        }
    }
    return out;
}

IrrepCheck verify_irrep(const UnitaryIrrep& rho, std::uint64_t seed) {
    const GroupPtr& g = rho.group;
    if (!g) throw GroupMismatchError("irrep has no group attached");
    const std::size_t n = g->order();
    if (rho.matrices.size() != n) {
        throw ShapeMismatchError("irrep has wrong number of matrices");
    }
    const long d = rho.degree;
    for (const Matrix& m : rho.matrices) {
        if (m.rows() != d || m.cols() != d) {
            throw ShapeMismatchError("irrep matrix has wrong shape");
        }
    }
    IrrepCheck chk;

    const Matrix eye = Matrix::Identity(d, d);
    chk.hom_deviation =
        (rho.matrices[g->identity()] - eye).cwiseAbs().maxCoeff();
    for (std::size_t i = 0; i < n; ++i) {
        const double dev =
            (rho.matrices[i] * rho.matrices[i].adjoint() - eye)
                .cwiseAbs()
                .maxCoeff();
        chk.unitary_deviation = std::max(chk.unitary_deviation, dev);
    }

    auto pair_dev = [&](Elem x, Elem y) {
        return (rho.matrices[x] * rho.matrices[y] -
                rho.matrices[g->mul(x, y)])
            .cwiseAbs()
            .maxCoeff();
    };
    if (n <= 256) {
        for (Elem x = 0; x < n; ++x) {
            for (Elem y = 0; y < n; ++y) {
                chk.hom_deviation = std::max(chk.hom_deviation, pair_dev(x, y));
            }
        }
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<Elem> pick(0, Elem(n - 1));
        for (int t = 0; t < 20000; ++t) {
            chk.hom_deviation =
                std::max(chk.hom_deviation, pair_dev(pick(rng), pick(rng)));
        }
    }

    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        s += std::norm(rho.matrices[i].trace());
    }
    chk.irreducibility_deviation = std::abs(s / double(n) - 1.0);

    chk.pass = chk.hom_deviation <= 1e-10 && chk.unitary_deviation <= 1e-10 &&
               chk.irreducibility_deviation <= 1e-8;
    return chk;
}

std::vector<UnitaryIrrep> regular_split_irreps(const GroupPtr& g,
                                               std::uint64_t seed,
                                               std::size_t max_order) {
    const std::size_t n = g->order();
    if (n > max_order) {
        throw CapExceededError("order " + std::to_string(n) +
                               " exceeds numeric irrep cap " +
                               std::to_string(max_order));
    }
    const std::size_t k = conjugacy_classes(*g).count();
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    for (int attempt = 0; attempt < 5; ++attempt) {
        // random Hermitian element of the commutant of the right regular
        // representation: X(h', h) = x(h' h^-1) with x(s^-1) = conj(x(s))
        std::vector<Cplx> x(n);
        for (Elem s = 0; s < n; ++s) {
            const Elem si = g->inverse(s);
            if (si < s) {
                x[s] = std::conj(x[si]);
            } else if (si == s) {
                x[s] = Cplx(gauss(rng), 0.0);
            } else {
                x[s] = Cplx(gauss(rng), gauss(rng));
            }
        }
        Matrix big(n, n);
        for (Elem hp = 0; hp < n; ++hp) {
            for (Elem h = 0; h < n; ++h) {
                big(hp, h) = x[g->mul(hp, g->inverse(h))];
            }
        }
        Eigen::SelfAdjointEigenSolver<Matrix> es(big);
        const Eigen::VectorXd ev = es.eigenvalues();
        const Matrix& vecs = es.eigenvectors();

        const double scale = std::max(std::abs(ev(0)), std::abs(ev(n - 1)));
        const double gap = 1e-6 * std::max(1.0, scale);
        std::vector<std::pair<std::size_t, std::size_t>> clusters;  // [begin,end)
        std::size_t begin = 0;
        for (std::size_t i = 1; i < n; ++i) {
            if (ev(i) - ev(i - 1) > gap) {
                clusters.emplace_back(begin, i);
                begin = i;
            }
        }
        clusters.emplace_back(begin, n);

        // Each eigenspace of X carries one irreducible subrepresentation of
        // the right regular action; identical irreps show up once per copy.
        // Compute characters first, keep one cluster per distinct character.
        std::vector<std::vector<Cplx>> chars(clusters.size());
        bool ok = true;
        for (std::size_t c = 0; c < clusters.size() && ok; ++c) {
            const auto [b, e] = clusters[c];
            const std::size_t d = e - b;
            if (d == 0 || d > n) {
                ok = false;
                break;
            }
            std::vector<Cplx>& ch = chars[c];
            ch.assign(n, Cplx(0, 0));
            // chi(s) = sum_j <u_j, R_s u_j>, (R_s u)(h) = u(h s)
            for (Elem s = 0; s < n; ++s) {
                Cplx tr(0, 0);
                for (std::size_t j = b; j < e; ++j) {
                    for (Elem h = 0; h < n; ++h) {
                        tr += std::conj(vecs(h, j)) * vecs(g->mul(h, s), j);
                    }
                }
                ch[s] = tr;
            }
        }
        if (!ok) continue;

        std::vector<std::size_t> keep;
        for (std::size_t c = 0; c < clusters.size(); ++c) {
            bool dup = false;
            for (std::size_t prev : keep) {
                double diff = 0.0;
                for (Elem s = 0; s < n; ++s) {
                    diff = std::max(diff, std::abs(chars[c][s] - chars[prev][s]));
                }
                if (diff < 1e-6 * double(n)) {
                    dup = true;
                    break;
                }
            }
            if (!dup) keep.push_back(c);
        }

        std::uint64_t sum_sq = 0;
        for (std::size_t c : keep) {
            const std::size_t d = clusters[c].second - clusters[c].first;
            sum_sq += std::uint64_t(d) * d;
        }
        if (keep.size() != k || sum_sq != n) continue;  // resample

        std::vector<UnitaryIrrep> out;
        out.reserve(keep.size());
        for (std::size_t c : keep) {
            const auto [b, e] = clusters[c];
            const std::size_t d = e - b;
            const Matrix u = vecs.middleCols(long(b), long(d));
            UnitaryIrrep rho;
            rho.group = g;
            rho.degree = unsigned(d);
            rho.matrices.reserve(n);
            for (Elem s = 0; s < n; ++s) {
                Matrix moved(n, d);
                for (Elem h = 0; h < n; ++h) {
                    moved.row(h) = u.row(g->mul(h, s));
                }
                rho.matrices.push_back(u.adjoint() * moved);
            }
            out.push_back(std::move(rho));
        }
        std::stable_sort(out.begin(), out.end(),
                         [](const UnitaryIrrep& a, const UnitaryIrrep& b) {
                             return a.degree < b.degree;
                         });
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i].label =
                "pi" + std::to_string(i) + "_d" + std::to_string(out[i].degree);
        }
        return out;
    }
    throw DegenerateSampleError(
        "regular representation failed to split after 5 samples");
}

std::vector<UnitaryIrrep> complete_irreps(const GroupPtr& g,
                                          std::uint64_t seed,
                                          std::size_t numeric_cap) {
    if (g->is_abelian()) return abelian_dual(g);
    return regular_split_irreps(g, seed, numeric_cap);
}

std::vector<std::pair<unsigned, unsigned>> degree_multiset(
    const std::vector<UnitaryIrrep>& irreps) {
    std::map<unsigned, unsigned> mult;
    for (const auto& rho : irreps) mult[rho.degree] += 1;
    return {mult.begin(), mult.end()};
}

}  // namespace famc
