#include "famc/constants.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "famc/families.hpp"

namespace famc {

Rational johnson_constant(const DegreeSpectrum& spec) {
    Rational sum(0);
    for (auto [d, m] : spec.entries) {
        sum += Rational((long long)m * d * d * d);
    }
    return sum / Rational((long long)spec.order());
}

Rational ad_constant(const DegreeSpectrum& spec) {
    const long long n = (long long)spec.order();
    Rational sum(0);
    for (auto [d, m] : spec.entries) {
        const Rational nu((long long)d, n);  // Plancherel weight of each pi
        sum += Rational((long long)m) * nu * Rational((long long)d * d);
    }
    return sum;
}

std::pair<Rational, unsigned> runde_bounds(const DegreeSpectrum& spec) {
    return {ad_constant(spec), spec.max_degree()};
}

Rational improved_upper_bound(const DegreeSpectrum& spec,
                              std::uint64_t commutator_order) {
    if (commutator_order < 1) throw Error("commutator order must be positive");
    const Rational one(1);
    const Rational md((long long)spec.max_degree());
    return one + (md - one) * (one - Rational(1, (long long)commutator_order));
}

Rational nu_omega(const DegreeSpectrum& spec) {
    return Rational((long long)spec.multiplicity_of(1),
                    (long long)spec.order());
}

AmenabilityReport amenability_report(const GroupPtr& g, std::string name,
                                     std::size_t class_cap) {
    AmenabilityReport r;
    r.order = g->order();
    r.group = name.empty() ? "group-of-order-" + std::to_string(r.order)
                           : std::move(name);
    r.spectrum = degree_spectrum(*g, class_cap);
    r.am = johnson_constant(r.spectrum);
    r.ad = ad_constant(r.spectrum);
    if (r.am != r.ad) {
        throw Error("internal: johnson and plancherel routes disagree");
    }
    auto [lower, upper] = runde_bounds(r.spectrum);
    r.runde_lower = lower;
    r.runde_upper = upper;
    r.maxdeg = upper;
    r.commutator_order = commutator_subgroup(g).size();
    r.center_index = r.order / center(g).size();
    r.improved_upper = improved_upper_bound(r.spectrum, r.commutator_order);
    r.nu_omega = nu_omega(r.spectrum);
    if (r.nu_omega != Rational(1, (long long)r.commutator_order)) {
        throw Error("internal: nu(Omega) does not equal 1/|[G,G]|");
    }

    r.flags.abelian = r.maxdeg == 1;
    r.flags.ad_maximal = r.ad == Rational((long long)r.maxdeg);
    r.flags.two_degree = r.spectrum.entries.size() == 2;
    r.flags.center_index_4 = r.center_index == 4;

    // the bound chain, exact
    const Rational one(1);
    if (!(one <= r.ad && r.ad <= r.improved_upper &&
          r.improved_upper <= Rational((long long)r.runde_upper))) {
        throw Error("internal: bound chain violated");
    }
    if (!r.flags.abelian &&
        !(r.improved_upper < Rational((long long)r.runde_upper))) {
        throw Error("internal: improved bound not strict for non-abelian group");
    }
    return r;
}

TheoremCheck verify_two_degree(const GroupPtr& g) {
    const DegreeSpectrum spec = degree_spectrum(*g);
    std::ostringstream os;
    if (spec.entries.size() != 2) {
        os << "spectrum has " << spec.entries.size()
           << " distinct degrees; theorem needs exactly two";
        return {CheckStatus::NotApplicable, os.str()};
    }
    const unsigned d = spec.entries[1].first;
    const std::uint64_t c = commutator_subgroup(g).size();
    const Rational am = johnson_constant(spec);
    const Rational expected =
        Rational(1) + Rational((long long)d - 1) *
                          (Rational(1) - Rational(1, (long long)c));
    os << "am = " << am.str() << ", 1+(d-1)(1-1/|[G,G]|) = " << expected.str()
       << " with d = " << d << ", |[G,G]| = " << c;
    return {am == expected ? CheckStatus::Pass : CheckStatus::Fail, os.str()};
}

TheoremCheck verify_minimal_theorem(const GroupPtr& g) {
    const DegreeSpectrum spec = degree_spectrum(*g);
    const Rational am = johnson_constant(spec);
    const std::uint64_t center_index = g->order() / center(g).size();
    const bool abelian = spec.max_degree() == 1;
    const Rational three_halves(3, 2);
    std::ostringstream os;
    os << "am = " << am.str() << ", |G:Z(G)| = " << center_index;
    if (!abelian && am < three_halves) {
        os << "; non-abelian group below 3/2";
        return {CheckStatus::Fail, os.str()};
    }
    if (center_index == 4 && am != three_halves) {
        os << "; center index 4 but am differs from 3/2";
        return {CheckStatus::Fail, os.str()};
    }
    if (abelian) os << "; abelian, bound vacuous";
    return {CheckStatus::Pass, os.str()};
}

TheoremCheck verify_product_identities(const GroupPtr& g, const GroupPtr& h,
                                       std::size_t max_order) {
    const GroupPtr prod = direct_product(g, h, max_order);
    const DegreeSpectrum sg = degree_spectrum(*g);
    const DegreeSpectrum sh = degree_spectrum(*h);
    const DegreeSpectrum sp = degree_spectrum(*prod);
    const Rational ad_g = ad_constant(sg), ad_h = ad_constant(sh);
    const Rational ad_p = ad_constant(sp);
    const Rational am_g = johnson_constant(sg), am_h = johnson_constant(sh);
    const Rational am_p = johnson_constant(sp);

    std::ostringstream os;
    os << "ad(GxH) = " << ad_p.str() << " vs ad(G)ad(H) = "
       << (ad_g * ad_h).str();
    if (ad_p != ad_g * ad_h) return {CheckStatus::Fail, os.str()};
    os << "; am(GxH) = " << am_p.str() << " vs am(G)am(H) = "
       << (am_g * am_h).str();
    if (am_p != am_g * am_h) return {CheckStatus::Fail, os.str()};
    if (sh.max_degree() == 1 && am_p != am_g) {
        os << "; abelian factor changed am";
        return {CheckStatus::Fail, os.str()};
    }
    if (sg.max_degree() == 1 && am_p != am_h) {
        os << "; abelian factor changed am";
        return {CheckStatus::Fail, os.str()};
    }
    return {CheckStatus::Pass, os.str()};
}

HrSequence hr_sequence(unsigned p, unsigned count, std::size_t max_order) {
    HrSequence seq;
    seq.p = p;
    if (!is_prime(p)) {
        throw NotPrimeError("hr sequence requires a prime, got " +
                            std::to_string(p));
    }
    seq.expected = Rational((long long)p - 1) + Rational(1, (long long)p);
    seq.all_match = true;
    for (unsigned n = 1; n <= count; ++n) {
        GroupPtr g = reduced_heisenberg_group(p, n, max_order);
        std::string name =
            "Hr(" + std::to_string(p) + "," + std::to_string(n) + ")";
        AmenabilityReport r = amenability_report(g, name);
        if (r.am != seq.expected) seq.all_match = false;
        seq.reports.push_back(std::move(r));
    }
    return seq;
}

namespace {

// all permutations of {0..2n-1} with signs
struct SignedPerms {
    std::vector<std::vector<int>> perms;
    std::vector<int> signs;
};

SignedPerms signed_permutations(unsigned two_n) {
    SignedPerms sp;
    std::vector<int> p(two_n);
    std::iota(p.begin(), p.end(), 0);
    do {
        int inv = 0;
        for (unsigned i = 0; i < two_n; ++i) {
            for (unsigned j = i + 1; j < two_n; ++j) {
                if (p[i] > p[j]) ++inv;
            }
        }
        sp.perms.push_back(p);
        sp.signs.push_back(inv % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(p.begin(), p.end()));
    return sp;
}

using IntMat = std::vector<long long>;  // row-major d x d

IntMat mat_mul(const IntMat& a, const IntMat& b, unsigned d) {
    IntMat c(std::size_t(d) * d, 0);
    for (unsigned i = 0; i < d; ++i) {
        for (unsigned l = 0; l < d; ++l) {
            const long long v = a[std::size_t(i) * d + l];
            if (v == 0) continue;
            for (unsigned j = 0; j < d; ++j) {
                c[std::size_t(i) * d + j] += v * b[std::size_t(l) * d + j];
            }
        }
    }
    return c;
}

}  // namespace

StandardPolyReport standard_polynomial_check(unsigned n, unsigned d,
                                             unsigned trials,
                                             std::uint64_t seed) {
    if (n < 1 || n > 3 || d < 1 || d > 8) {
        throw CapExceededError("standard polynomial check limited to n <= 3, d <= 8");
    }
    StandardPolyReport rep;
    rep.n = n;
    rep.d = d;
    rep.trials = trials;
    rep.vanish_expected = d <= n;
    rep.all_zero = true;

    const unsigned two_n = 2 * n;
    const SignedPerms sp = signed_permutations(two_n);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(-9, 9);

    for (unsigned trial = 0; trial < trials; ++trial) {
        std::vector<IntMat> xs(two_n, IntMat(std::size_t(d) * d));
        for (auto& m : xs) {
            for (auto& v : m) v = entry(rng);
        }
        IntMat acc(std::size_t(d) * d, 0);
        for (std::size_t pi = 0; pi < sp.perms.size(); ++pi) {
            IntMat prod = xs[sp.perms[pi][0]];
            for (unsigned t = 1; t < two_n; ++t) {
                prod = mat_mul(prod, xs[sp.perms[pi][t]], d);
            }
            const long long sign = sp.signs[pi];
            for (std::size_t i = 0; i < acc.size(); ++i) {
                acc[i] += sign * prod[i];
            }
        }
        long long nonzero = 0;
        for (long long v : acc) {
            if (v != 0) {
                nonzero = v;
                break;
            }
        }
        if (nonzero != 0) {
            rep.all_zero = false;
            if (!rep.witness_found) {
                rep.witness_found = true;
                rep.witness_trial = int(trial);
                rep.witness_entry = nonzero;
            }
        }
    }
    rep.pass = rep.vanish_expected ? rep.all_zero : rep.witness_found;
    return rep;
}

}  // namespace famc
