#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "famc/group.hpp"
#include "famc/irreps.hpp"

namespace famc {

bool is_prime(std::uint64_t n);

// C(n): integers mod n under addition.
GroupPtr cyclic_group(unsigned n, std::size_t max_order = kDefaultMaxOrder);

// D(n): symmetries of the regular n-gon, order 2n (n >= 1).
GroupPtr dihedral_group(unsigned n, std::size_t max_order = kDefaultMaxOrder);

// Q8: {+-1, +-i, +-j, +-k}.
GroupPtr quaternion_group();

// H(m): upper unitriangular 3x3 matrices over Z/m, elements (x, y, z) with
// (x,y,z)(x',y',z') = (x+x', y+y', z + x y' + z'), order m^3.
GroupPtr heisenberg_group(unsigned m, std::size_t max_order = kDefaultMaxOrder);

// Hr(p, n): H(Z/p^n) with the central coordinate reduced mod p, i.e. the
// quotient of H(p^n) by the central subgroup {(0,0,ps)}.  Elements are
// (x, y, w) in (Z/p^n)^2 x Z/p, order p^(2n+1).  p must be prime.
GroupPtr reduced_heisenberg_group(unsigned p, unsigned n,
                                  std::size_t max_order = kDefaultMaxOrder);

// Grammar: expr := atom ('x' atom)*, atom := C(n) | D(n) | Q8 | H(m) | Hr(p,n).
// Whitespace is ignored; names are case-sensitive.
struct FamilyExpr {
    enum class Kind { Cyclic, Dihedral, Quaternion, Heisenberg, ReducedHeisenberg };
    struct Atom {
        Kind kind;
        unsigned a = 0;  // n, m or p
        unsigned b = 0;  // n for Hr
    };
    std::vector<Atom> atoms;
    std::string text;  // normalized form, e.g. "D(4)xC(3)"
};

FamilyExpr parse_family_expr(std::string_view input);

GroupPtr build_family(const FamilyExpr& expr,
                      std::size_t max_order = kDefaultMaxOrder);

// parse + build in one step.
GroupPtr parse_family(std::string_view input,
                      std::size_t max_order = kDefaultMaxOrder);

// Semidirect presentations of the nonabelian families, for the exact irrep
// path: D(n) = C(n) . C(2) for n >= 3, H(m) and Hr(p,n) split off the
// abelian normal subgroup spanned by the y and central coordinates with the
// x coordinate as complement.
SemidirectData dihedral_semidirect(const GroupPtr& d, unsigned n);
SemidirectData heisenberg_semidirect(const GroupPtr& h, unsigned m);
SemidirectData reduced_heisenberg_semidirect(const GroupPtr& hr, unsigned p,
                                             unsigned n);

// The classical unitary irreps of Q8: four characters factoring through
// Q8 / {+-1} and the 2-dimensional representation by Pauli-like matrices.
std::vector<UnitaryIrrep> quaternion_irreps(const GroupPtr& q8);

// Builds the group for an expression together with a complete set of irreps,
// using the exact constructions for each atom and tensoring across factors.
std::pair<GroupPtr, std::vector<UnitaryIrrep>> family_irreps(
    const FamilyExpr& expr, std::size_t max_order = kDefaultMaxOrder,
    std::uint64_t seed = kDefaultSeed);

}  // namespace famc
