#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "famc/group.hpp"

namespace famc {

// Multiset of irreducible character degrees: (degree, multiplicity) pairs in
// ascending degree order.  Always satisfies sum m*d^2 = |G| and
// sum m = number of conjugacy classes.
struct DegreeSpectrum {
    std::vector<std::pair<unsigned, unsigned>> entries;

    std::uint64_t order() const;        // sum of m * d^2
    std::uint64_t class_count() const;  // sum of m
    unsigned max_degree() const;
    unsigned multiplicity_of(unsigned degree) const;

    friend bool operator==(const DegreeSpectrum& a, const DegreeSpectrum& b) {
        return a.entries == b.entries;
    }
    friend bool operator!=(const DegreeSpectrum& a, const DegreeSpectrum& b) {
        return !(a == b);
    }
};

// Exact degree computation by splitting the class algebra over a prime field
// F_q, q = 1 mod exponent(G) and q > 2|G| (smallest such prime; the search
// failing below 2^31 raises NoSuitablePrimeError, which cannot happen for
// orders this library accepts).  Class matrices are simultaneously
// diagonalized by eigenspace refinement; each common eigenvector is a central
// character, and the degree is recovered from the second orthogonality
// relation and lifted to an integer square root.  Throws ClassCapError when
// the number of conjugacy classes exceeds class_cap.
DegreeSpectrum degree_spectrum(const FiniteGroup& g,
                               std::size_t class_cap = 2000);

// Independent floating-point oracle for the same quantity.  A random real
// symmetric element of the class-algebra representation on L^2(G) has
// eigenvalue clusters whose sizes are d^2 (for each real/quaternionic irrep)
// or 2d^2 (for each complex-conjugate pair); cluster sizes determine the
// degree multiset uniquely.  Retries with fresh coefficients up to 5 times
// if clustering is ambiguous, then throws DegenerateSampleError.  Only the
// spectrum is used -- no character theory is shared with degree_spectrum.
DegreeSpectrum degree_spectrum_numeric(const FiniteGroup& g,
                                       std::uint64_t seed = kDefaultSeed,
                                       std::size_t max_order = 2000);

}  // namespace famc
