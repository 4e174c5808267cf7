#include "famc/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace famc {

namespace {

void check_order_cap(std::size_t n, std::size_t max_order) {
    if (n > max_order || n > kDefaultMaxOrder) {
        std::ostringstream os;
        os << "group order " << n << " exceeds cap "
           << std::min(max_order, kDefaultMaxOrder);
        throw OrderCapError(os.str());
    }
}

}  // namespace

FiniteGroup::FiniteGroup(std::size_t n, std::vector<Elem> table,
                         std::vector<std::string> labels)
    : n_(n), table_(std::move(table)), labels_(std::move(labels)) {
    // Locate the (two-sided) identity.
    bool found = false;
    for (Elem e = 0; e < n_; ++e) {
        bool ok = true;
        for (Elem a = 0; a < n_ && ok; ++a) {
            ok = mul(e, a) == a && mul(a, e) == a;
        }
        if (ok) {
            identity_ = e;
            found = true;
            break;
        }
    }
    if (!found) throw NotAGroupError("no identity element");

    inverses_.assign(n_, 0);
    for (Elem a = 0; a < n_; ++a) {
        bool has = false;
        for (Elem b = 0; b < n_; ++b) {
            if (mul(a, b) == identity_ && mul(b, a) == identity_) {
                inverses_[a] = b;
                has = true;
                break;
            }
        }
        if (!has) {
            throw NotAGroupError("element " + std::to_string(a) +
                                 " has no two-sided inverse");
        }
    }
}

Elem FiniteGroup::power(Elem g, long long k) const {
    if (k < 0) {
        g = inverse(g);
        k = -k;
    }
    Elem acc = identity_;
    while (k > 0) {
        if (k & 1) acc = mul(acc, g);
        g = mul(g, g);
        k >>= 1;
    }
    return acc;
}

unsigned FiniteGroup::element_order(Elem g) const {
    Elem x = g;
    unsigned k = 1;
    while (x != identity_) {
        x = mul(x, g);
        ++k;
    }
    return k;
}

std::uint64_t FiniteGroup::exponent() const {
    std::uint64_t e = 1;
    for (Elem g = 0; g < n_; ++g) {
        e = std::lcm<std::uint64_t>(e, element_order(g));
    }
    return e;
}

bool FiniteGroup::is_abelian() const {
    for (Elem a = 0; a < n_; ++a) {
        for (Elem b = Elem(a + 1); b < n_; ++b) {
            if (mul(a, b) != mul(b, a)) return false;
        }
    }
    return true;
}

std::string FiniteGroup::label(Elem a) const {
    if (a < labels_.size() && !labels_[a].empty()) return labels_[a];
    return "g" + std::to_string(a);
}

GroupPtr FiniteGroup::from_table(const std::vector<std::vector<Elem>>& table,
                                 std::vector<std::string> labels,
                                 std::size_t max_order) {
    const std::size_t n = table.size();
    if (n == 0) throw NotAGroupError("empty table");
    check_order_cap(n, max_order);
    if (!labels.empty() && labels.size() != n) {
        throw NotAGroupError("label count does not match order");
    }

    std::vector<Elem> flat;
    flat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (table[i].size() != n) {
            throw NotAGroupError("row " + std::to_string(i) +
                                 " has wrong length");
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (table[i][j] >= n) {
                throw NotAGroupError("entry (" + std::to_string(i) + "," +
                                     std::to_string(j) + ") out of range");
            }
            flat.push_back(table[i][j]);
        }
    }

    // The constructor validates identity and inverses.
    auto g = GroupPtr(new FiniteGroup(n, std::move(flat), std::move(labels)));

    auto witness = [](Elem a, Elem b, Elem c) {
        std::ostringstream os;
        os << "associativity fails at (" << a << "," << b << "," << c << ")";
        return os.str();
    };
    if (n <= 512) {
        for (Elem a = 0; a < n; ++a) {
            for (Elem b = 0; b < n; ++b) {
                const Elem ab = g->mul(a, b);
                for (Elem c = 0; c < n; ++c) {
                    if (g->mul(ab, c) != g->mul(a, g->mul(b, c))) {
                        throw NotAGroupError(witness(a, b, c));
                    }
                }
            }
        }
    } else {
        std::mt19937_64 rng(kDefaultSeed);
        std::uniform_int_distribution<Elem> pick(0, Elem(n - 1));
        for (int t = 0; t < 100000; ++t) {
            const Elem a = pick(rng), b = pick(rng), c = pick(rng);
            if (g->mul(g->mul(a, b), c) != g->mul(a, g->mul(b, c))) {
                throw NotAGroupError(witness(a, b, c));
            }
        }
    }
    return g;
}

GroupPtr FiniteGroup::from_law(std::size_t n,
                               const std::function<Elem(Elem, Elem)>& law,
                               std::vector<std::string> labels,
                               std::size_t max_order) {
    if (n == 0) throw NotAGroupError("empty table");
    check_order_cap(n, max_order);
    std::vector<Elem> flat(n * n);
    for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
            const Elem c = law(a, b);
            if (c >= n) throw NotAGroupError("law value out of range");
            flat[std::size_t(a) * n + b] = c;
        }
    }
    return GroupPtr(new FiniteGroup(n, std::move(flat), std::move(labels)));
}

bool Subgroup::contains(Elem g) const {
    return std::binary_search(members.begin(), members.end(), g);
}

GroupPtr build_group(const std::vector<std::vector<Elem>>& table,
                     std::vector<std::string> labels, std::size_t max_order) {
    return FiniteGroup::from_table(table, std::move(labels), max_order);
}

GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h,
                        std::size_t max_order) {
    const std::size_t ng = g->order(), nh = h->order();
    check_order_cap(ng * nh, max_order);
    std::vector<std::string> labels;
    labels.reserve(ng * nh);
    for (Elem a = 0; a < ng; ++a) {
        for (Elem b = 0; b < nh; ++b) {
            labels.push_back("(" + g->label(a) + "," + h->label(b) + ")");
        }
    }
    return FiniteGroup::from_law(
        ng * nh,
        [&](Elem x, Elem y) {
            const Elem xg = Elem(x / nh), xh = Elem(x % nh);
            const Elem yg = Elem(y / nh), yh = Elem(y % nh);
            return Elem(g->mul(xg, yg) * nh + h->mul(xh, yh));
        },
        std::move(labels), max_order);
}

Subgroup center(const GroupPtr& g) {
    Subgroup s{g, {}};
    const std::size_t n = g->order();
    for (Elem a = 0; a < n; ++a) {
        bool central = true;
        for (Elem b = 0; b < n; ++b) {
            if (g->mul(a, b) != g->mul(b, a)) {
                central = false;
                break;
            }
        }
        if (central) s.members.push_back(a);
    }
    return s;
}

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<Elem>& gens) {
    const std::size_t n = g->order();
    for (Elem x : gens) {
        if (x >= n) throw Error("generator index out of range");
    }
    std::vector<bool> seen(n, false);
    std::vector<Elem> frontier{g->identity()};
    seen[g->identity()] = true;
    // Closure under right multiplication by generators and inverses.
    std::vector<Elem> step = gens;
    for (Elem x : gens) step.push_back(g->inverse(x));
    while (!frontier.empty()) {
        std::vector<Elem> next;
        for (Elem a : frontier) {
            for (Elem x : step) {
                const Elem b = g->mul(a, x);
                if (!seen[b]) {
                    seen[b] = true;
                    next.push_back(b);
                }
            }
        }
        frontier = std::move(next);
    }
    Subgroup s{g, {}};
    for (Elem a = 0; a < n; ++a) {
        if (seen[a]) s.members.push_back(a);
    }
    return s;
}

Subgroup commutator_subgroup(const GroupPtr& g) {
    const std::size_t n = g->order();
    std::set<Elem> comms;
    for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
            comms.insert(g->commutator(a, b));
        }
    }
    return subgroup_generated(g, std::vector<Elem>(comms.begin(), comms.end()));
}

ConjugacyClasses conjugacy_classes(const FiniteGroup& g) {
    const std::size_t n = g.order();
    std::vector<bool> assigned(n, false);
    std::vector<std::vector<Elem>> classes;
    for (Elem a = 0; a < n; ++a) {
        if (assigned[a]) continue;
        std::set<Elem> cls;
        for (Elem t = 0; t < n; ++t) cls.insert(g.conjugate(t, a));
        std::vector<Elem> v(cls.begin(), cls.end());
        for (Elem x : v) assigned[x] = true;
        classes.push_back(std::move(v));
    }
    std::sort(classes.begin(), classes.end(),
              [&](const std::vector<Elem>& x, const std::vector<Elem>& y) {
                  const bool xe = x.front() == g.identity() && x.size() == 1;
                  const bool ye = y.front() == g.identity() && y.size() == 1;
                  if (xe != ye) return xe;
                  if (x.size() != y.size()) return x.size() < y.size();
                  return x.front() < y.front();
              });
    ConjugacyClasses cc;
    cc.classes = std::move(classes);
    cc.class_of.assign(n, 0);
    for (std::uint32_t i = 0; i < cc.classes.size(); ++i) {
        for (Elem x : cc.classes[i]) cc.class_of[x] = i;
    }
    return cc;
}

bool is_normal(const Subgroup& s) {
    const auto& g = *s.parent;
    for (Elem t = 0; t < g.order(); ++t) {
        for (Elem h : s.members) {
            if (!s.contains(g.conjugate(t, h))) return false;
        }
    }
    return true;
}

bool is_abelian_subgroup(const Subgroup& s) {
    const auto& g = *s.parent;
    for (std::size_t i = 0; i < s.members.size(); ++i) {
        for (std::size_t j = i + 1; j < s.members.size(); ++j) {
            if (g.mul(s.members[i], s.members[j]) !=
                g.mul(s.members[j], s.members[i])) {
                return false;
            }
        }
    }
    return true;
}

QuotientResult quotient_group(const GroupPtr& g, const Subgroup& n) {
    if (n.parent.get() != g.get() && !same_group(*n.parent, *g)) {
        throw GroupMismatchError("subgroup belongs to a different group");
    }
    const auto& gr = *g;
    for (Elem t = 0; t < gr.order(); ++t) {
        for (Elem h : n.members) {
            const Elem c = gr.conjugate(t, h);
            if (!n.contains(c)) {
                std::ostringstream os;
                os << "subgroup is not normal: " << t << " * " << h << " * "
                   << t << "^-1 = " << c << " lies outside";
                throw NotNormalError(os.str());
            }
        }
    }

    // Cosets, represented by their smallest member, in ascending order.
    const std::size_t ord = gr.order();
    std::vector<Elem> coset_of(ord, Elem(ord));
    std::vector<Elem> reps;
    for (Elem a = 0; a < ord; ++a) {
        if (coset_of[a] != Elem(ord)) continue;
        const Elem idx = Elem(reps.size());
        reps.push_back(a);
        for (Elem h : n.members) coset_of[gr.mul(a, h)] = idx;
    }

    std::vector<std::string> labels;
    labels.reserve(reps.size());
    for (Elem r : reps) labels.push_back("[" + gr.label(r) + "]");

    auto q = FiniteGroup::from_law(
        reps.size(),
        [&](Elem a, Elem b) { return coset_of[gr.mul(reps[a], reps[b])]; },
        std::move(labels));

    // The coset law is well defined because n is normal, so this projection
    // is automatically a homomorphism; check it anyway while tables are warm.
    for (Elem a = 0; a < ord; ++a) {
        for (Elem b = 0; b < ord; ++b) {
            if (coset_of[gr.mul(a, b)] !=
                q->mul(coset_of[a], coset_of[b])) {
                throw Error("internal: quotient law is not a homomorphism");
            }
        }
    }
    return QuotientResult{q, std::move(coset_of)};
}

std::pair<GroupPtr, std::vector<Elem>> subgroup_as_group(const Subgroup& s) {
    const auto& g = *s.parent;
    std::vector<Elem> embed = s.members;  // new index -> parent element
    std::vector<Elem> local(g.order(), Elem(g.order()));
    for (Elem i = 0; i < embed.size(); ++i) local[embed[i]] = i;
    std::vector<std::string> labels;
    labels.reserve(embed.size());
    for (Elem e : embed) labels.push_back(g.label(e));
    auto sub = FiniteGroup::from_law(
        embed.size(),
        [&](Elem a, Elem b) {
            const Elem p = g.mul(embed[a], embed[b]);
            if (local[p] == Elem(g.order())) {
                throw NotAGroupError("member set is not closed");
            }
            return local[p];
        },
        std::move(labels));
    return {sub, std::move(embed)};
}

bool same_group(const FiniteGroup& a, const FiniteGroup& b) {
    if (&a == &b) return true;
    if (a.order() != b.order()) return false;
    const std::size_t n = a.order();
    for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
            if (a.mul(x, y) != b.mul(x, y)) return false;
        }
    }
    return true;
}

}  // namespace famc
