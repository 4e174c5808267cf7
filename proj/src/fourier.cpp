#include "famc/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/SVD>

namespace famc {

namespace {

void check_same_group(const GroupPtr& a, const GroupPtr& b) {
    if (a.get() == b.get()) return;
    if (!a || !b || !same_group(*a, *b)) {
        throw GroupMismatchError("operands live on different groups");
    }
}

// completeness gate shared by every transform-side operation
void check_complete(const GroupPtr& g, const std::vector<UnitaryIrrep>& irreps) {
    std::uint64_t sum_sq = 0;
    for (const auto& rho : irreps) {
        check_same_group(g, rho.group);
        sum_sq += std::uint64_t(rho.degree) * rho.degree;
    }
    if (sum_sq != g->order()) {
        throw IncompleteDualError(
            "irrep degree squares sum to " + std::to_string(sum_sq) +
            ", expected " + std::to_string(g->order()));
    }
}

double nu_of(const GroupPtr& g, const UnitaryIrrep& rho) {
    return double(rho.degree) / double(g->order());
}

}  // namespace

GroupFunction delta_function(const GroupPtr& g, Elem s) {
    GroupFunction f{g, std::vector<Cplx>(g->order(), Cplx(0, 0))};
    f.values.at(s) = Cplx(1, 0);
    return f;
}

GroupFunction zero_function(const GroupPtr& g) {
    return GroupFunction{g, std::vector<Cplx>(g->order(), Cplx(0, 0))};
}

GroupFunction constant_function(const GroupPtr& g, Cplx value) {
    return GroupFunction{g, std::vector<Cplx>(g->order(), value)};
}

GroupFunction uniform_on_subgroup(const Subgroup& k) {
    GroupFunction f = zero_function(k.parent);
    const Cplx v(1.0 / double(k.size()), 0.0);
    for (Elem e : k.members) f.values[e] = v;
    return f;
}

GroupFunction random_function(const GroupPtr& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    GroupFunction f = zero_function(g);
    for (auto& v : f.values) v = Cplx(gauss(rng), gauss(rng));
    return f;
}

GroupFunction convolve(const GroupFunction& f, const GroupFunction& g) {
    check_same_group(f.group, g.group);
    const auto& gr = *f.group;
    const std::size_t n = gr.order();
    GroupFunction out = zero_function(f.group);
    for (Elem x = 0; x < n; ++x) {
        Cplx acc(0, 0);
        for (Elem y = 0; y < n; ++y) {
            acc += f.values[y] * g.values[gr.mul(gr.inverse(y), x)];
        }
        out.values[x] = acc;
    }
    return out;
}

GroupFunction multiply_by_character(const GroupFunction& f,
                                    const UnitaryIrrep& chi) {
    check_same_group(f.group, chi.group);
    if (chi.degree != 1) {
        throw ShapeMismatchError("pointwise multiplication needs a linear character");
    }
    GroupFunction out = f;
    for (std::size_t s = 0; s < out.values.size(); ++s) {
        out.values[s] *= chi.matrices[s](0, 0);
    }
    return out;
}

double sup_norm(const GroupFunction& f) {
    double m = 0.0;
    for (const Cplx& v : f.values) m = std::max(m, std::abs(v));
    return m;
}

double one_norm(const GroupFunction& f) {
    double s = 0.0;
    for (const Cplx& v : f.values) s += std::abs(v);
    return s;
}

double l2_norm_squared(const GroupFunction& f) {
    double s = 0.0;
    for (const Cplx& v : f.values) s += std::norm(v);
    return s;
}

TwoVariableFunction diagonal_embed(const GroupFunction& f) {
    TwoVariableFunction u;
    u.left = f.group;
    u.right = f.group;
    for (Elem s = 0; s < f.values.size(); ++s) {
        if (f.values[s] != Cplx(0, 0)) {
            u.values[{s, s}] = f.values[s];
        }
    }
    return u;
}

PlancherelWeights plancherel_weights(const GroupPtr& g,
                                     const std::vector<UnitaryIrrep>& irreps) {
    check_complete(g, irreps);
    PlancherelWeights w;
    Rational total(0);
    const long long n = (long long)g->order();
    for (const auto& rho : irreps) {
        Rational nu((long long)rho.degree, n);
        total += nu * Rational((long long)rho.degree);
        w.nu.push_back(nu);
    }
    if (total != Rational(1)) {
        throw IncompleteDualError("plancherel weights do not normalize");
    }
    return w;
}

Matrix fourier_coefficient(const UnitaryIrrep& rho, const GroupFunction& f) {
    check_same_group(rho.group, f.group);
    Matrix m = Matrix::Zero(rho.degree, rho.degree);
    for (Elem s = 0; s < f.values.size(); ++s) {
        if (f.values[s] != Cplx(0, 0)) m += f.values[s] * rho.matrices[s];
    }
    return m;
}

OperatorField fourier_transform(const std::vector<UnitaryIrrep>& irreps,
                                const GroupFunction& f) {
    OperatorField c;
    c.blocks.reserve(irreps.size());
    for (const auto& rho : irreps) c.blocks.push_back(fourier_coefficient(rho, f));
    return c;
}

double trace_norm(const Matrix& m) {
    if (m.rows() == 1 && m.cols() == 1) return std::abs(m(0, 0));
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues().sum();
}

PlancherelCheck verify_plancherel(const GroupPtr& g,
                                  const std::vector<UnitaryIrrep>& irreps,
                                  const GroupFunction& f) {
    check_complete(g, irreps);
    check_same_group(g, f.group);
    PlancherelCheck out;
    out.lhs = l2_norm_squared(f);
    for (const auto& rho : irreps) {
        const Matrix c = fourier_coefficient(rho, f);
        out.rhs += nu_of(g, rho) * (c.adjoint() * c).trace().real();
    }
    out.deviation = std::abs(out.lhs - out.rhs);
    return out;
}

double fourier_algebra_norm(const GroupPtr& g,
                            const std::vector<UnitaryIrrep>& irreps,
                            const GroupFunction& f) {
    check_complete(g, irreps);
    check_same_group(g, f.group);
    double s = 0.0;
    for (const auto& rho : irreps) {
        s += nu_of(g, rho) * trace_norm(fourier_coefficient(rho, f));
    }
    return s;
}

GroupFunction inverse_fourier(const GroupPtr& g,
                              const std::vector<UnitaryIrrep>& irreps,
                              const PlancherelWeights& weights,
                              const OperatorField& c) {
    check_complete(g, irreps);
    if (c.blocks.size() != irreps.size() || weights.nu.size() != irreps.size()) {
        throw ShapeMismatchError("operator field does not match irrep list");
    }
    for (std::size_t i = 0; i < irreps.size(); ++i) {
        if (c.blocks[i].rows() != irreps[i].degree ||
            c.blocks[i].cols() != irreps[i].degree) {
            throw ShapeMismatchError("block " + std::to_string(i) +
                                     " has wrong shape");
        }
    }
    GroupFunction f = zero_function(g);
    const std::size_t n = g->order();
    for (std::size_t i = 0; i < irreps.size(); ++i) {
        const double nu = weights.nu[i].to_double();
        for (Elem s = 0; s < n; ++s) {
            f.values[s] +=
                nu * (c.blocks[i] * irreps[i].matrices[g->inverse(s)]).trace();
        }
    }
    return f;
}

double psi_functional(const GroupPtr& g,
                      const std::vector<UnitaryIrrep>& irreps,
                      const TwoVariableFunction& u) {
    check_complete(g, irreps);
    check_same_group(g, u.left);
    check_same_group(g, u.right);
    double total = 0.0;
    for (const auto& chi : irreps) {
        if (chi.degree != 1) continue;
        for (const auto& sigma : irreps) {
            Matrix m = Matrix::Zero(sigma.degree, sigma.degree);
            for (const auto& [st, v] : u.values) {
                m += v * chi.matrices[st.first](0, 0) * sigma.matrices[st.second];
            }
            total += nu_of(g, chi) * nu_of(g, sigma) * trace_norm(m);
        }
    }
    return total;
}

MuKReport verify_muK_projection(const GroupPtr& g,
                                const std::vector<UnitaryIrrep>& irreps,
                                const Subgroup& k, double tol) {
    check_complete(g, irreps);
    check_same_group(g, k.parent);
    const auto& gr = *g;
    for (Elem t = 0; t < gr.order(); ++t) {
        for (Elem h : k.members) {
            const Elem c = gr.conjugate(t, h);
            if (!k.contains(c)) {
                throw NotNormalError("subgroup is not normal: conjugating " +
                                     std::to_string(h) + " by " +
                                     std::to_string(t) + " gives " +
                                     std::to_string(c));
            }
        }
    }

    MuKReport report;
    for (const auto& rho : irreps) {
        const double d = double(rho.degree);
        // K lies in ker(rho) iff tr rho(k) = d for every k in K: a sum of d
        // unit-modulus eigenvalues equals d only when all of them are 1.
        bool in_kernel = true;
        for (Elem h : k.members) {
            if (std::abs(rho.character(h) - Cplx(d, 0)) > 1e-8) {
                in_kernel = false;
                break;
            }
        }
        Matrix avg = Matrix::Zero(rho.degree, rho.degree);
        for (Elem h : k.members) avg += rho.matrices[h];
        avg /= double(k.size());
        const Matrix target = in_kernel
                                  ? Matrix(Matrix::Identity(rho.degree, rho.degree))
                                  : Matrix(Matrix::Zero(rho.degree, rho.degree));
        const double dev = (avg - target).cwiseAbs().maxCoeff();
        report.rows.push_back({rho.label, in_kernel, dev});
        report.kernel_count += in_kernel ? 1 : 0;
        report.max_deviation = std::max(report.max_deviation, dev);
    }
    report.pass = report.max_deviation <= tol;
    return report;
}

}  // namespace famc
