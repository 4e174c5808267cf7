#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "famc/group.hpp"

namespace famc {

using Cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

// Unitary representation given by one matrix per group element (indexed by
// element).  Everything downstream assumes matrices[identity] == I and that
// the map is a homomorphism; constructors here guarantee it up to rounding,
// and verify_irrep can re-check any instance.
struct UnitaryIrrep {
    GroupPtr group;
    unsigned degree = 0;
    std::vector<Matrix> matrices;
    std::string label;

    const Matrix& at(Elem g) const { return matrices[g]; }
    Cplx character(Elem g) const { return matrices[g].trace(); }
};

// Independent generators of an abelian group with their orders (a direct-sum
// decomposition) and the exponent vector of every element in that basis.
struct AbelianBasis {
    std::vector<Elem> generators;
    std::vector<unsigned> orders;            // orders[i] = order of generators[i]
    std::vector<std::vector<unsigned>> coords;  // element -> exponents
};

// Throws NotAbelianError if the group is not abelian.
AbelianBasis abelian_basis(const GroupPtr& g);

// All characters of an abelian group as 1x1 irreps, one per element,
// enumerated in lexicographic order of their exponent vectors (so the
// trivial character comes first).
std::vector<UnitaryIrrep> abelian_dual(const GroupPtr& g);

// An internal semidirect decomposition G = A . H: A abelian and normal, H a
// complement meeting A only in the identity.  `factor_of` records the unique
// factorization g = a * h.
struct SemidirectData {
    GroupPtr parent;
    Subgroup normal_part;       // A
    Subgroup complement;        // H
    std::vector<std::pair<Elem, Elem>> factor_of;  // g -> (a, h)
};

// Validates the decomposition (throws InvalidDecompositionError) and
// precomputes the factorization table.
SemidirectData make_semidirect_data(const GroupPtr& g, const Subgroup& a,
                                    const Subgroup& h);

// Complete list of irreps of G = A . H via orbits of H on the characters of
// A: each orbit representative chi is extended to its inertia subgroup,
// tensored with the irreps of the stabilizer, and induced up to G.  The
// result is exact up to floating point and satisfies sum d^2 = |G|.
std::vector<UnitaryIrrep> semidirect_irreps(
    const SemidirectData& data, std::uint64_t seed = kDefaultSeed,
    std::size_t stabilizer_cap = 1024);

// Outer tensor product: an irrep of G x H from irreps of G and H.  If the
// product group has already been built, pass it to avoid reconstruction;
// otherwise it is formed here.
UnitaryIrrep tensor_irrep(const UnitaryIrrep& a, const UnitaryIrrep& b,
                          GroupPtr product = nullptr);

// Deviations are max-abs errors: `hom` over products (exhaustive when
// |G| <= 256, 20000 seeded samples beyond), `unitary` over all elements,
// `irreducible` is |<chi,chi> - 1|.
struct IrrepCheck {
    double hom_deviation = 0.0;
    double unitary_deviation = 0.0;
    double irreducibility_deviation = 0.0;
    bool pass = false;
};

IrrepCheck verify_irrep(const UnitaryIrrep& rho,
                        std::uint64_t seed = kDefaultSeed);

// Splits the right regular representation with a random invariant Hermitian
// matrix; works for any group of order <= max_order but is quadratic-space,
// so it is the fallback path, not the default.  Deterministic for a fixed
// seed; throws DegenerateSampleError after 5 failed samples.
std::vector<UnitaryIrrep> regular_split_irreps(
    const GroupPtr& g, std::uint64_t seed = kDefaultSeed,
    std::size_t max_order = 1024);

// Dispatcher: abelian dual when abelian, regular splitting otherwise.
std::vector<UnitaryIrrep> complete_irreps(const GroupPtr& g,
                                          std::uint64_t seed = kDefaultSeed,
                                          std::size_t numeric_cap = 1024);

// Sorted (degree, multiplicity) pairs of a list of irreps, for comparison
// against character-theoretic degree computations.
std::vector<std::pair<unsigned, unsigned>> degree_multiset(
    const std::vector<UnitaryIrrep>& irreps);

}  // namespace famc
