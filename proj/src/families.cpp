#include "famc/families.hpp"

#include <cctype>
#include <sstream>

namespace famc {

namespace {

std::string triple_label(unsigned x, unsigned y, unsigned z) {
    std::ostringstream os;
    os << "(" << x << "," << y << "," << z << ")";
    return os.str();
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp,
                          std::size_t max_order) {
    std::uint64_t v = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (v > max_order / base + 1) {
            throw OrderCapError("family order exceeds cap");
        }
        v *= base;
    }
    return v;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

GroupPtr cyclic_group(unsigned n, std::size_t max_order) {
    if (n < 1) throw Error("C(n) requires n >= 1");
    std::vector<std::string> labels;
    labels.reserve(n);
    for (unsigned i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return FiniteGroup::from_law(
        n, [n](Elem a, Elem b) { return Elem((a + b) % n); }, std::move(labels),
        max_order);
}

GroupPtr dihedral_group(unsigned n, std::size_t max_order) {
    if (n < 1) throw Error("D(n) requires n >= 1");
    // Element j*n + i encodes r^i s^j; s r s^-1 = r^-1.
    std::vector<std::string> labels;
    labels.reserve(2 * n);
    for (unsigned j = 0; j < 2; ++j) {
        for (unsigned i = 0; i < n; ++i) {
            std::string l = i == 0 ? "e"
                            : i == 1 ? "r"
                                     : "r^" + std::to_string(i);
            if (j == 1) l = (i == 0 ? "s" : l + "*s");
            labels.push_back(l);
        }
    }
    return FiniteGroup::from_law(
        2 * std::size_t(n),
        [n](Elem a, Elem b) {
            const unsigned i1 = a % n, j1 = a / n;
            const unsigned i2 = b % n, j2 = b / n;
            const unsigned i = j1 ? (i1 + n - i2 % n) % n : (i1 + i2) % n;
            return Elem((j1 ^ j2) * n + i);
        },
        std::move(labels), max_order);
}

GroupPtr quaternion_group() {
    // Element 2*axis + (sign < 0), axes ordered 1, i, j, k.
    static const int mul_axis[4][4] = {
        {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int mul_sign[4][4] = {
        {+1, +1, +1, +1}, {+1, -1, +1, -1}, {+1, -1, -1, +1}, {+1, +1, -1, -1}};
    std::vector<std::string> labels = {"1", "-1", "i", "-i",
                                       "j", "-j", "k", "-k"};
    return FiniteGroup::from_law(
        8,
        [](Elem a, Elem b) {
            const int ax = int(a / 2), bx = int(b / 2);
            int sign = mul_sign[ax][bx];
            if (a & 1) sign = -sign;
            if (b & 1) sign = -sign;
            return Elem(2 * mul_axis[ax][bx] + (sign < 0 ? 1 : 0));
        },
        std::move(labels));
}

GroupPtr heisenberg_group(unsigned m, std::size_t max_order) {
    if (m < 2) throw Error("H(m) requires m >= 2");
    const std::uint64_t n = checked_pow(m, 3, max_order);
    const std::uint64_t mm = m;
    std::vector<std::string> labels;
    labels.reserve(n);
    for (unsigned x = 0; x < m; ++x) {
        for (unsigned y = 0; y < m; ++y) {
            for (unsigned z = 0; z < m; ++z) labels.push_back(triple_label(x, y, z));
        }
    }
    return FiniteGroup::from_law(
        n,
        [mm](Elem a, Elem b) {
            const std::uint64_t x1 = a / (mm * mm), y1 = (a / mm) % mm, z1 = a % mm;
            const std::uint64_t x2 = b / (mm * mm), y2 = (b / mm) % mm, z2 = b % mm;
            const std::uint64_t x = (x1 + x2) % mm;
            const std::uint64_t y = (y1 + y2) % mm;
            const std::uint64_t z = (z1 + x1 * y2 + z2) % mm;
            return Elem((x * mm + y) * mm + z);
        },
        std::move(labels), max_order);
}

GroupPtr reduced_heisenberg_group(unsigned p, unsigned n,
                                  std::size_t max_order) {
    if (!is_prime(p)) {
        throw NotPrimeError("Hr(p,n) requires prime p, got " +
                            std::to_string(p));
    }
    if (n < 1) throw Error("Hr(p,n) requires n >= 1");
    const std::uint64_t q = checked_pow(p, n, max_order);
    const std::uint64_t ord = checked_pow(p, 2 * n + 1, max_order);
    const std::uint64_t pp = p;
    std::vector<std::string> labels;
    labels.reserve(ord);
    for (unsigned x = 0; x < q; ++x) {
        for (unsigned y = 0; y < q; ++y) {
            for (unsigned w = 0; w < p; ++w) labels.push_back(triple_label(x, y, w));
        }
    }
    // Same law as H(p^n) with the central coordinate carried mod p; the
    // reduction is well defined because p divides p^n.
    return FiniteGroup::from_law(
        ord,
        [q, pp](Elem a, Elem b) {
            const std::uint64_t x1 = a / (q * pp), y1 = (a / pp) % q, w1 = a % pp;
            const std::uint64_t x2 = b / (q * pp), y2 = (b / pp) % q, w2 = b % pp;
            const std::uint64_t x = (x1 + x2) % q;
            const std::uint64_t y = (y1 + y2) % q;
            const std::uint64_t w = (w1 + (x1 % pp) * (y2 % pp) + w2) % pp;
            return Elem((x * q + y) * pp + w);
        },
        std::move(labels), max_order);
}

namespace {

struct Parser {
    std::string_view in;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < in.size() && std::isspace(static_cast<unsigned char>(in[pos]))) ++pos;
    }
    bool match(std::string_view lit) {
        if (in.substr(pos, lit.size()) == lit) {
            pos += lit.size();
            return true;
        }
        return false;
    }
    unsigned number() {
        skip_ws();
        if (pos >= in.size() || !std::isdigit(static_cast<unsigned char>(in[pos]))) {
            throw ParseError("expected a number", pos);
        }
        std::uint64_t v = 0;
        while (pos < in.size() && std::isdigit(static_cast<unsigned char>(in[pos]))) {
            v = v * 10 + unsigned(in[pos] - '0');
            // syntactic sanity only; order caps are enforced by the builders
            if (v > (1u << 30)) throw ParseError("number too large", pos);
            ++pos;
        }
        return unsigned(v);
    }
    void expect(char c) {
        skip_ws();
        if (pos >= in.size() || in[pos] != c) {
            throw ParseError(std::string("expected '") + c + "'", pos);
        }
        ++pos;
    }

    FamilyExpr::Atom atom() {
        skip_ws();
        using K = FamilyExpr::Kind;
        FamilyExpr::Atom a{};
        if (match("C(")) {
            a.kind = K::Cyclic;
            a.a = number();
            expect(')');
            if (a.a < 1) throw ParseError("C(n) requires n >= 1", pos);
        } else if (match("D(")) {
            a.kind = K::Dihedral;
            a.a = number();
            expect(')');
            if (a.a < 1) throw ParseError("D(n) requires n >= 1", pos);
        } else if (match("Q8")) {
            a.kind = K::Quaternion;
        } else if (match("Hr(")) {
            a.kind = K::ReducedHeisenberg;
            a.a = number();
            expect(',');
            a.b = number();
            expect(')');
            if (a.b < 1) throw ParseError("Hr(p,n) requires n >= 1", pos);
        } else if (match("H(")) {
            a.kind = K::Heisenberg;
            a.a = number();
            expect(')');
            if (a.a < 2) throw ParseError("H(m) requires m >= 2", pos);
        } else {
            throw ParseError("expected a family atom (C, D, Q8, H, Hr)", pos);
        }
        return a;
    }
};

std::string atom_text(const FamilyExpr::Atom& a) {
    using K = FamilyExpr::Kind;
    switch (a.kind) {
        case K::Cyclic: return "C(" + std::to_string(a.a) + ")";
        case K::Dihedral: return "D(" + std::to_string(a.a) + ")";
        case K::Quaternion: return "Q8";
        case K::Heisenberg: return "H(" + std::to_string(a.a) + ")";
        case K::ReducedHeisenberg:
            return "Hr(" + std::to_string(a.a) + "," + std::to_string(a.b) + ")";
    }
    return "";
}

}  // namespace

FamilyExpr parse_family_expr(std::string_view input) {
    Parser p{input};
    FamilyExpr expr;
    expr.atoms.push_back(p.atom());
    while (true) {
        p.skip_ws();
        if (p.pos >= input.size()) break;
        if (!p.match("x")) {
            throw ParseError("expected 'x' between factors", p.pos);
        }
        expr.atoms.push_back(p.atom());
    }
    for (std::size_t i = 0; i < expr.atoms.size(); ++i) {
        if (i) expr.text += "x";
        expr.text += atom_text(expr.atoms[i]);
    }
    return expr;
}

namespace {

GroupPtr build_atom(const FamilyExpr::Atom& a, std::size_t max_order) {
    using K = FamilyExpr::Kind;
    switch (a.kind) {
        case K::Cyclic: return cyclic_group(a.a, max_order);
        case K::Dihedral: return dihedral_group(a.a, max_order);
        case K::Quaternion: return quaternion_group();
        case K::Heisenberg: return heisenberg_group(a.a, max_order);
        case K::ReducedHeisenberg:
            return reduced_heisenberg_group(a.a, a.b, max_order);
    }
    throw Error("unreachable");
}

}  // namespace

GroupPtr build_family(const FamilyExpr& expr, std::size_t max_order) {
    GroupPtr g = build_atom(expr.atoms.front(), max_order);
    for (std::size_t i = 1; i < expr.atoms.size(); ++i) {
        g = direct_product(g, build_atom(expr.atoms[i], max_order), max_order);
    }
    return g;
}

GroupPtr parse_family(std::string_view input, std::size_t max_order) {
    return build_family(parse_family_expr(input), max_order);
}

SemidirectData dihedral_semidirect(const GroupPtr& d, unsigned n) {
    Subgroup rotations{d, {}};
    for (Elem i = 0; i < n; ++i) rotations.members.push_back(i);
    Subgroup flip{d, {0, Elem(n)}};
    return make_semidirect_data(d, rotations, flip);
}

SemidirectData heisenberg_semidirect(const GroupPtr& h, unsigned m) {
    // A = {(0, y, z)}, H = {(x, 0, 0)}; A is normal (it contains the center
    // and commutators only touch the z coordinate) and both are abelian.
    Subgroup a{h, {}};
    for (Elem i = 0; i < Elem(m) * m; ++i) a.members.push_back(i);
    Subgroup x{h, {}};
    for (Elem i = 0; i < m; ++i) x.members.push_back(Elem(i * m * m));
    return make_semidirect_data(h, a, x);
}

SemidirectData reduced_heisenberg_semidirect(const GroupPtr& hr, unsigned p,
                                             unsigned n) {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < n; ++i) q *= p;
    Subgroup a{hr, {}};
    for (Elem i = 0; i < Elem(q) * p; ++i) a.members.push_back(i);
    Subgroup x{hr, {}};
    for (Elem i = 0; i < q; ++i) x.members.push_back(Elem(i * q * p));
    return make_semidirect_data(hr, a, x);
}

std::vector<UnitaryIrrep> quaternion_irreps(const GroupPtr& q8) {
    const auto canonical = quaternion_group();
    if (!same_group(*q8, *canonical)) {
        throw GroupMismatchError("group is not the canonical Q8 table");
    }
    std::vector<UnitaryIrrep> out;
    // Characters factor through Q8/{+-1}; value depends only on the axis.
    const double chi[4][4] = {{1, 1, 1, 1},
                              {1, 1, -1, -1},
                              {1, -1, 1, -1},
                              {1, -1, -1, 1}};
    const char* names[4] = {"chi_1", "chi_i", "chi_j", "chi_k"};
    for (int c = 0; c < 4; ++c) {
        UnitaryIrrep rho;
        rho.group = q8;
        rho.degree = 1;
        rho.label = names[c];
        rho.matrices.resize(8, Matrix::Zero(1, 1));
        for (Elem g = 0; g < 8; ++g) {
            rho.matrices[g](0, 0) = chi[c][g / 2];
        }
        out.push_back(std::move(rho));
    }
    UnitaryIrrep two;
    two.group = q8;
    two.degree = 2;
    two.label = "pi_2";
    two.matrices.resize(8);
    const Cplx I(0, 1);
    Matrix mi(2, 2), mj(2, 2), mk(2, 2), one(2, 2);
    one << 1, 0, 0, 1;
    mi << I, 0, 0, -I;
    mj << 0, 1, -1, 0;
    mk << 0, I, I, 0;
    const Matrix axes[4] = {one, mi, mj, mk};
    for (Elem g = 0; g < 8; ++g) {
        two.matrices[g] = (g & 1) ? Matrix(-axes[g / 2]) : axes[g / 2];
    }
    out.push_back(std::move(two));
    return out;
}

std::pair<GroupPtr, std::vector<UnitaryIrrep>> family_irreps(
    const FamilyExpr& expr, std::size_t max_order, std::uint64_t seed) {
    using K = FamilyExpr::Kind;
    auto atom_irreps = [&](const FamilyExpr::Atom& a)
        -> std::pair<GroupPtr, std::vector<UnitaryIrrep>> {
        GroupPtr g = build_atom(a, max_order);
        switch (a.kind) {
            case K::Cyclic:
                return {g, abelian_dual(g)};
            case K::Dihedral:
                if (a.a <= 2) return {g, abelian_dual(g)};
                return {g, semidirect_irreps(dihedral_semidirect(g, a.a), seed)};
            case K::Quaternion:
                return {g, quaternion_irreps(g)};
            case K::Heisenberg:
                return {g, semidirect_irreps(heisenberg_semidirect(g, a.a), seed)};
            case K::ReducedHeisenberg:
                return {g, semidirect_irreps(
                               reduced_heisenberg_semidirect(g, a.a, a.b), seed)};
        }
        throw Error("unreachable");
    };

    auto [g, irreps] = atom_irreps(expr.atoms.front());
    for (std::size_t i = 1; i < expr.atoms.size(); ++i) {
        auto [h, hi] = atom_irreps(expr.atoms[i]);
        GroupPtr prod = direct_product(g, h, max_order);
        std::vector<UnitaryIrrep> combined;
        combined.reserve(irreps.size() * hi.size());
        for (const auto& x : irreps) {
            for (const auto& y : hi) {
                combined.push_back(tensor_irrep(x, y, prod));
            }
        }
        g = prod;
        irreps = std::move(combined);
    }
    return {g, std::move(irreps)};
}

}  // namespace famc
