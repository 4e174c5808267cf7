#pragma once

#include <string>
#include <vector>

#include "famc/degrees.hpp"
#include "famc/group.hpp"
#include "famc/rational.hpp"

namespace famc {

struct GroupFlags {
    bool abelian = false;
    bool ad_maximal = false;      // ad equals maxdeg
    bool two_degree = false;      // exactly two distinct degrees
    bool center_index_4 = false;  // |G : Z(G)| = 4
};

// All the constants and bounds for one group, every rational exact.
// Satisfies 1 <= ad = am <= improved_upper <= runde_upper, with the last
// inequality strict for non-abelian groups.
struct AmenabilityReport {
    std::string group;
    std::uint64_t order = 0;
    Rational am;
    Rational ad;
    Rational runde_lower;      // = ad
    unsigned runde_upper = 0;  // = maxdeg
    Rational improved_upper;   // 1 + (maxdeg-1)(1 - 1/|[G,G]|)
    Rational nu_omega;
    unsigned maxdeg = 0;
    std::uint64_t commutator_order = 0;
    std::uint64_t center_index = 0;
    DegreeSpectrum spectrum;
    GroupFlags flags;
};

// (1/|G|) sum m d^3 -- the amenability constant of the Fourier algebra.
Rational johnson_constant(const DegreeSpectrum& spec);

// sum nu(pi) d^2 over the dual; numerically the same quantity reached
// through the Plancherel-measure route.  Kept as an independent code path
// from johnson_constant on purpose.
Rational ad_constant(const DegreeSpectrum& spec);

// (ad, maxdeg)
std::pair<Rational, unsigned> runde_bounds(const DegreeSpectrum& spec);

Rational improved_upper_bound(const DegreeSpectrum& spec,
                              std::uint64_t commutator_order);

// weight of the linear characters: (multiplicity of degree 1) / |G|
Rational nu_omega(const DegreeSpectrum& spec);

AmenabilityReport amenability_report(const GroupPtr& g, std::string name = "",
                                     std::size_t class_cap = 2000);

enum class CheckStatus { Pass, Fail, NotApplicable };

struct TheoremCheck {
    CheckStatus status = CheckStatus::Fail;
    std::string detail;
};

// If the spectrum has exactly two distinct degrees {1, d}, checks
// am = 1 + (d-1)(1 - 1/|[G,G]|) exactly; otherwise not-applicable.
TheoremCheck verify_two_degree(const GroupPtr& g);

// Non-abelian groups satisfy am >= 3/2; center index 4 forces am = 3/2.
// Both directions checked on this group (vacuous cases pass).
TheoremCheck verify_minimal_theorem(const GroupPtr& g);

// ad(GxH) = ad(G) ad(H) exactly; am(GxH) = am(G) am(H) at finite scale; and
// am(GxH) = am(G) when H is abelian (similarly when G is).
TheoremCheck verify_product_identities(const GroupPtr& g, const GroupPtr& h,
                                       std::size_t max_order = kDefaultMaxOrder);

// Reports for Hr(p, n), n = 1..count; every am must equal p - 1 + 1/p.
struct HrSequence {
    unsigned p = 0;
    Rational expected;
    std::vector<AmenabilityReport> reports;
    bool all_match = false;
};

HrSequence hr_sequence(unsigned p, unsigned count,
                       std::size_t max_order = kDefaultMaxOrder);

// Standard polynomial P_{2n} = sum_sigma sgn(sigma) X_{sigma(1)}...X_{sigma(2n)}
// evaluated on random integer matrices with entries in [-9, 9], exact 64-bit
// arithmetic.  Vanishes identically iff d <= n; for d > n a nonzero witness
// is expected.  Caps: n <= 3, d <= 8 (throws CapExceededError beyond).
struct StandardPolyReport {
    unsigned n = 0;
    unsigned d = 0;
    unsigned trials = 0;
    bool vanish_expected = false;
    bool all_zero = false;
    bool witness_found = false;
    int witness_trial = -1;       // first nonzero trial, -1 if none
    long long witness_entry = 0;  // one nonzero matrix entry from that trial
    bool pass = false;
};

StandardPolyReport standard_polynomial_check(unsigned n, unsigned d,
                                             unsigned trials,
                                             std::uint64_t seed = kDefaultSeed);

}  // namespace famc
