#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "famc/errors.hpp"

namespace famc {

// Elements are indices 0..n-1 into a dense Cayley table.
using Elem = std::uint32_t;

// Hard ceiling on |G| for anything built through this library.  Individual
// entry points accept a lower per-call cap.
inline constexpr std::size_t kDefaultMaxOrder = std::size_t{1} << 20;

// Seed used by every randomized routine unless the caller overrides it.
inline constexpr std::uint64_t kDefaultSeed = 12345;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// A finite group presented by its full multiplication table.  Instances are
// immutable and always shared through GroupPtr so that subgroups, functions
// and irreps can hold cheap references to their parent.
class FiniteGroup {
public:
    std::size_t order() const noexcept { return n_; }
    Elem identity() const noexcept { return identity_; }

    Elem mul(Elem a, Elem b) const { return table_[std::size_t(a) * n_ + b]; }
    Elem inverse(Elem a) const { return inverses_[a]; }

    // g x g^{-1}
    Elem conjugate(Elem g, Elem x) const { return mul(mul(g, x), inverse(g)); }
    // g h g^{-1} h^{-1}
    Elem commutator(Elem g, Elem h) const {
        return mul(conjugate(g, h), inverse(h));
    }

    Elem power(Elem g, long long k) const;
    unsigned element_order(Elem g) const;

    // lcm of element orders; divides order(), so it fits comfortably.
    std::uint64_t exponent() const;
    bool is_abelian() const;

    bool has_labels() const noexcept { return !labels_.empty(); }
    // Label from the input table when present, otherwise "g<index>".
    std::string label(Elem a) const;

    // Validating constructor: checks shape, closure/range, identity, inverses
    // and associativity, throwing NotAGroupError with a witness on failure.
    // Associativity is checked exhaustively up to order 512 and on 100000
    // seeded random triples beyond that.
    static GroupPtr from_table(const std::vector<std::vector<Elem>>& table,
                               std::vector<std::string> labels = {},
                               std::size_t max_order = kDefaultMaxOrder);

    // Trusted constructor for internally generated tables (family builders,
    // products, quotients).  Fills the table from `law`, locates the identity
    // and inverses, but performs no associativity sweep.
    static GroupPtr from_law(std::size_t n,
                             const std::function<Elem(Elem, Elem)>& law,
                             std::vector<std::string> labels = {},
                             std::size_t max_order = kDefaultMaxOrder);

private:
    FiniteGroup(std::size_t n, std::vector<Elem> table,
                std::vector<std::string> labels);

    std::size_t n_;
    Elem identity_ = 0;
    std::vector<Elem> table_;     // row-major n x n
    std::vector<Elem> inverses_;
    std::vector<std::string> labels_;
};

// A subgroup is stored as the sorted list of member indices of the parent.
struct Subgroup {
    GroupPtr parent;
    std::vector<Elem> members;  // sorted ascending, always contains identity

    std::size_t size() const noexcept { return members.size(); }
    bool contains(Elem g) const;
};

// Conjugacy classes in canonical order: the identity class first, then by
// increasing size, ties broken by smallest member.
struct ConjugacyClasses {
    std::vector<std::vector<Elem>> classes;  // each sorted ascending
    std::vector<std::uint32_t> class_of;     // element -> class index

    std::size_t count() const noexcept { return classes.size(); }
};

// Result of forming G/N: the quotient group plus the projection map.
struct QuotientResult {
    GroupPtr group;
    std::vector<Elem> coset_of;  // parent element -> quotient element
};

// Same validating path as FiniteGroup::from_table; named entry point.
GroupPtr build_group(const std::vector<std::vector<Elem>>& table,
                     std::vector<std::string> labels = {},
                     std::size_t max_order = kDefaultMaxOrder);

// G x H with element (g, h) encoded as g * |H| + h and labels "(g,h)".
GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h,
                        std::size_t max_order = kDefaultMaxOrder);

Subgroup center(const GroupPtr& g);
Subgroup commutator_subgroup(const GroupPtr& g);
Subgroup subgroup_generated(const GroupPtr& g, const std::vector<Elem>& gens);

ConjugacyClasses conjugacy_classes(const FiniteGroup& g);

// Throws NotNormalError (with a conjugation witness) unless N is normal.
QuotientResult quotient_group(const GroupPtr& g, const Subgroup& n);

// Reindexes a subgroup as a standalone group.  Second component maps the new
// group's elements back into the parent.
std::pair<GroupPtr, std::vector<Elem>> subgroup_as_group(const Subgroup& s);

bool is_normal(const Subgroup& s);
bool is_abelian_subgroup(const Subgroup& s);

// Structural identity (same order and same table), used to guard operations
// that combine objects from two sources.
bool same_group(const FiniteGroup& a, const FiniteGroup& b);

}  // namespace famc
