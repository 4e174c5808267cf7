#pragma once

#include <map>
#include <utility>
#include <vector>

#include "famc/irreps.hpp"
#include "famc/rational.hpp"

namespace famc {

// Complex-valued function on a group, one coefficient per element.
struct GroupFunction {
    GroupPtr group;
    std::vector<Cplx> values;
};

GroupFunction delta_function(const GroupPtr& g, Elem s);
GroupFunction zero_function(const GroupPtr& g);
GroupFunction constant_function(const GroupPtr& g, Cplx value);
// value 1/|K| on K, 0 elsewhere; convolution-idempotent.
GroupFunction uniform_on_subgroup(const Subgroup& k);
// independent standard complex gaussian coefficients
GroupFunction random_function(const GroupPtr& g, std::uint64_t seed);
GroupFunction convolve(const GroupFunction& f, const GroupFunction& g);
// pointwise product f(s) * chi(s) for a linear character chi
GroupFunction multiply_by_character(const GroupFunction& f,
                                    const UnitaryIrrep& chi);

double sup_norm(const GroupFunction& f);
double one_norm(const GroupFunction& f);
double l2_norm_squared(const GroupFunction& f);

// Finitely supported function on a product of two groups.
struct TwoVariableFunction {
    GroupPtr left;
    GroupPtr right;
    std::map<std::pair<Elem, Elem>, Cplx> values;
};

// (iota_Delta f)(s, t) = f(s) when s = t, else 0.
TwoVariableFunction diagonal_embed(const GroupFunction& f);

// One matrix per irrep, sized to its degree.
struct OperatorField {
    std::vector<Matrix> blocks;
};

// nu(pi) = d_pi / |G| for each irrep, with the completeness and
// normalization invariants checked (sum nu*d = 1).
struct PlancherelWeights {
    std::vector<Rational> nu;
};

PlancherelWeights plancherel_weights(const GroupPtr& g,
                                     const std::vector<UnitaryIrrep>& irreps);

// pi(f) = sum_s f(s) pi(s).  Throws GroupMismatchError if f lives on a
// different group.
Matrix fourier_coefficient(const UnitaryIrrep& rho, const GroupFunction& f);

// All coefficients at once, in irrep order.
OperatorField fourier_transform(const std::vector<UnitaryIrrep>& irreps,
                                const GroupFunction& f);

// sum of singular values
double trace_norm(const Matrix& m);

struct PlancherelCheck {
    double lhs = 0.0;  // ||f||_2^2
    double rhs = 0.0;  // sum nu(pi) tr(pi(f)* pi(f))
    double deviation = 0.0;
};

PlancherelCheck verify_plancherel(const GroupPtr& g,
                                  const std::vector<UnitaryIrrep>& irreps,
                                  const GroupFunction& f);

// ||f||_A(G) = sum_pi nu(pi) ||pi(f)||_S1
double fourier_algebra_norm(const GroupPtr& g,
                            const std::vector<UnitaryIrrep>& irreps,
                            const GroupFunction& f);

// f(s) = sum_pi nu(pi) tr(C_pi pi(s^-1)); inverse of fourier_transform.
GroupFunction inverse_fourier(const GroupPtr& g,
                              const std::vector<UnitaryIrrep>& irreps,
                              const PlancherelWeights& weights,
                              const OperatorField& c);

// Psi(u) = sum_{chi linear} sum_{sigma} nu(chi) nu(sigma)
//          ||(chi x sigma)(u)||_S1
double psi_functional(const GroupPtr& g,
                      const std::vector<UnitaryIrrep>& irreps,
                      const TwoVariableFunction& u);

// Averaging projection mu_K = (1/|K|) sum_{k in K} pi(k): the identity when
// K lies in ker pi and 0 otherwise.  Kernel membership is decided by the
// basis-free trace criterion tr pi(k) = d for every k in K.
struct MuKReport {
    struct Row {
        std::string label;
        bool in_kernel = false;
        double deviation = 0.0;
    };
    std::vector<Row> rows;
    std::size_t kernel_count = 0;
    double max_deviation = 0.0;
    bool pass = false;
};

MuKReport verify_muK_projection(const GroupPtr& g,
                                const std::vector<UnitaryIrrep>& irreps,
                                const Subgroup& k, double tol = 1e-10);

}  // namespace famc
