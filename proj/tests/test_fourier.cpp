#include <doctest.h>

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "famc/constants.hpp"
#include "famc/families.hpp"
#include "famc/fourier.hpp"
#include "famc/table_io.hpp"

using namespace famc;

namespace {

std::string data_path(const char* name) {
    return std::string(FAMC_TEST_DATA) + "/" + name;
}

Subgroup whole_group(const GroupPtr& g) {
    Subgroup s;
    s.parent = g;
    for (Elem e = 0; e < g->order(); ++e) s.members.push_back(e);
    return s;
}

Subgroup trivial_subgroup(const GroupPtr& g) {
    return Subgroup{g, {g->identity()}};
}

}  // namespace

TEST_CASE("point masses, constants, convolution") {
    GroupPtr d4 = dihedral_group(4);
    GroupFunction d = delta_function(d4, 3);
    CHECK(one_norm(d) == doctest::Approx(1.0));
    CHECK(sup_norm(d) == doctest::Approx(1.0));
    CHECK(l2_norm_squared(d) == doctest::Approx(1.0));

    // delta_a * delta_b = delta_{ab}
    for (Elem a : {Elem(1), Elem(5)}) {
        for (Elem b : {Elem(2), Elem(6)}) {
            GroupFunction c = convolve(delta_function(d4, a),
                                       delta_function(d4, b));
            const Elem ab = d4->mul(a, b);
            for (Elem s = 0; s < 8; ++s) {
                CHECK(std::abs(c.values[s] - (s == ab ? 1.0 : 0.0)) < 1e-12);
            }
        }
    }

    GroupFunction z = zero_function(d4);
    CHECK(one_norm(z) == 0.0);
    GroupFunction k = constant_function(d4, Cplx(2.0, -1.0));
    CHECK(sup_norm(k) == doctest::Approx(std::sqrt(5.0)));
}

TEST_CASE("uniform measures on subgroups") {
    GroupPtr s3 = load_group_file(data_path("s3_table.json"));
    // K = {e} gives the point mass at the identity
    GroupFunction de = uniform_on_subgroup(trivial_subgroup(s3));
    CHECK(std::abs(de.values[s3->identity()] - 1.0) < 1e-12);
    CHECK(one_norm(de) == doctest::Approx(1.0));

    // K = G gives the constant 1/|G|
    GroupFunction ug = uniform_on_subgroup(whole_group(s3));
    for (Elem e = 0; e < 6; ++e) {
        CHECK(std::abs(ug.values[e] - 1.0 / 6.0) < 1e-12);
    }

    // K = [S3,S3] is the rotation subgroup: 1/3 on three elements
    Subgroup comm = commutator_subgroup(s3);
    REQUIRE(comm.size() == 3);
    GroupFunction h = uniform_on_subgroup(comm);
    int support = 0;
    for (Elem e = 0; e < 6; ++e) {
        if (std::abs(h.values[e]) > 0) {
            ++support;
            CHECK(std::abs(h.values[e] - 1.0 / 3.0) < 1e-12);
        }
    }
    CHECK(support == 3);

    // idempotent under convolution
    GroupFunction hh = convolve(h, h);
    for (Elem e = 0; e < 6; ++e) {
        CHECK(std::abs(hh.values[e] - h.values[e]) < 1e-12);
    }
}

TEST_CASE("fourier coefficients of point masses") {
    GroupPtr q8 = quaternion_group();
    auto irreps = quaternion_irreps(q8);
    const UnitaryIrrep& two = irreps[4];

    Matrix at_e = fourier_coefficient(two, delta_function(q8, q8->identity()));
    CHECK((at_e - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);

    for (Elem s = 0; s < 8; ++s) {
        Matrix m = fourier_coefficient(two, delta_function(q8, s));
        CHECK((m - two.at(s)).cwiseAbs().maxCoeff() < 1e-12);
    }

    // mismatched group is refused
    GroupFunction other = delta_function(cyclic_group(8), 0);
    CHECK_THROWS_AS(fourier_coefficient(two, other), GroupMismatchError);
}

TEST_CASE("uniform measure on the commutator subgroup projects onto linears") {
    GroupPtr q8 = quaternion_group();
    auto irreps = quaternion_irreps(q8);
    GroupFunction mu = uniform_on_subgroup(commutator_subgroup(q8));
    for (const auto& r : irreps) {
        Matrix m = fourier_coefficient(r, mu);
        if (r.degree == 1) {
            CHECK((m - Matrix::Identity(1, 1)).cwiseAbs().maxCoeff() < 1e-12);
        } else {
            CHECK(m.cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("plancherel weights") {
    GroupPtr q8 = quaternion_group();
    auto irreps = quaternion_irreps(q8);
    PlancherelWeights w = plancherel_weights(q8, irreps);
    REQUIRE(w.nu.size() == 5);
    for (std::size_t i = 0; i < 4; ++i) CHECK(w.nu[i] == Rational(1, 8));
    CHECK(w.nu[4] == Rational(1, 4));

    // dropping an irrep breaks completeness
    auto partial = irreps;
    partial.pop_back();
    CHECK_THROWS_AS(plancherel_weights(q8, partial), IncompleteDualError);
}

TEST_CASE("plancherel identity") {
    GroupPtr q8 = quaternion_group();
    auto irreps = quaternion_irreps(q8);

    // point mass: both sides 1
    PlancherelCheck pc = verify_plancherel(q8, irreps, delta_function(q8, 3));
    CHECK(pc.lhs == doctest::Approx(1.0));
    CHECK(pc.rhs == doctest::Approx(1.0));
    CHECK(pc.deviation < 1e-12);

    // constant one: both sides |G|
    pc = verify_plancherel(q8, irreps, constant_function(q8, 1.0));
    CHECK(pc.lhs == doctest::Approx(8.0));
    CHECK(pc.rhs == doctest::Approx(8.0));

    // random functions on S3 through the numeric irrep path
    GroupPtr s3 = load_group_file(data_path("s3_table.json"));
    auto s3_irreps = complete_irreps(s3);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        PlancherelCheck r = verify_plancherel(s3, s3_irreps,
                                              random_function(s3, seed));
        CHECK(r.deviation / std::max(1.0, r.lhs) < 1e-9);
    }

    auto partial = irreps;
    partial.pop_back();
    CHECK_THROWS_AS(verify_plancherel(q8, partial, delta_function(q8, 0)),
                    IncompleteDualError);
}

TEST_CASE("fourier algebra norm") {
    GroupPtr q8 = quaternion_group();
    auto irreps = quaternion_irreps(q8);

    // every point mass has norm exactly 1
    for (Elem s = 0; s < 8; ++s) {
        CHECK(fourier_algebra_norm(q8, irreps, delta_function(q8, s)) ==
              doctest::Approx(1.0).epsilon(1e-9));
    }

    // Z/2: transform of delta_0 + delta_1 is (2, 0)
    GroupPtr c2 = cyclic_group(2);
    auto c2_dual = abelian_dual(c2);
    GroupFunction f01 = constant_function(c2, 1.0);
    CHECK(fourier_algebra_norm(c2, c2_dual, f01) == doctest::Approx(1.0));

    // sandwich sup <= ||.||_A <= l1, and homogeneity
    for (std::uint64_t seed = 2; seed <= 6; ++seed) {
        GroupFunction f = random_function(q8, seed);
        const double na = fourier_algebra_norm(q8, irreps, f);
        CHECK(na >= sup_norm(f) - 1e-9);
        CHECK(na <= one_norm(f) + 1e-9);

        GroupFunction g2 = f;
        for (auto& v : g2.values) v *= Cplx(0.0, -2.5);
        CHECK(fourier_algebra_norm(q8, irreps, g2) ==
              doctest::Approx(2.5 * na).epsilon(1e-9));

        GroupFunction h = random_function(q8, seed + 100);
        GroupFunction sum = f;
        for (Elem e = 0; e < 8; ++e) sum.values[e] += h.values[e];
        CHECK(fourier_algebra_norm(q8, irreps, sum) <=
              na + fourier_algebra_norm(q8, irreps, h) + 1e-9);
    }
}

TEST_CASE("multiplication by a linear character is an isometry") {
    GroupPtr q8 = quaternion_group();
    auto irreps = quaternion_irreps(q8);
    GroupFunction f = random_function(q8, 7);
    const double base = fourier_algebra_norm(q8, irreps, f);
    for (std::size_t i = 0; i < 4; ++i) {
        GroupFunction g = multiply_by_character(f, irreps[i]);
        CHECK(fourier_algebra_norm(q8, irreps, g) ==
              doctest::Approx(base).epsilon(1e-9));
    }
    // complex-valued characters too
    GroupPtr c6 = cyclic_group(6);
    auto dual = abelian_dual(c6);
    GroupFunction fc = random_function(c6, 8);
    const double bc = fourier_algebra_norm(c6, dual, fc);
    for (const auto& chi : dual) {
        CHECK(fourier_algebra_norm(c6, dual, multiply_by_character(fc, chi)) ==
              doctest::Approx(bc).epsilon(1e-9));
    }

    CHECK_THROWS_AS(multiply_by_character(f, irreps[4]), ShapeMismatchError);
}

TEST_CASE("inverse transform") {
    GroupPtr d4 = dihedral_group(4);
    auto irreps = semidirect_irreps(dihedral_semidirect(d4, 4));
    PlancherelWeights w = plancherel_weights(d4, irreps);

    // C_pi = I recovers the point mass at the identity
    OperatorField ident;
    for (const auto& r : irreps) {
        ident.blocks.push_back(Matrix::Identity(r.degree, r.degree));
    }
    GroupFunction f = inverse_fourier(d4, irreps, w, ident);
    for (Elem s = 0; s < 8; ++s) {
        const double want = s == d4->identity() ? 1.0 : 0.0;
        CHECK(std::abs(f.values[s] - want) < 1e-9);
    }

    // C_pi = pi(s) recovers delta_s
    OperatorField at5;
    for (const auto& r : irreps) at5.blocks.push_back(r.at(5));
    f = inverse_fourier(d4, irreps, w, at5);
    for (Elem s = 0; s < 8; ++s) {
        CHECK(std::abs(f.values[s] - (s == 5 ? 1.0 : 0.0)) < 1e-9);
    }

    // round trip on random functions
    for (std::uint64_t seed = 3; seed <= 12; ++seed) {
        GroupFunction g = random_function(d4, seed);
        GroupFunction back =
            inverse_fourier(d4, irreps, w, fourier_transform(irreps, g));
        for (Elem s = 0; s < 8; ++s) {
            CHECK(std::abs(back.values[s] - g.values[s]) < 1e-9);
        }
    }

    // block of the wrong shape is refused
    OperatorField bad = ident;
    bad.blocks.back() = Matrix::Identity(3, 3);
    CHECK_THROWS_AS(inverse_fourier(d4, irreps, w, bad), ShapeMismatchError);
}

TEST_CASE("trace norm") {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = 3.0;
    m(1, 1) = Cplx(0.0, -4.0);
    CHECK(trace_norm(m) == doctest::Approx(7.0));
    Matrix u(1, 1);
    u(0, 0) = Cplx(-0.6, 0.8);
    CHECK(trace_norm(u) == doctest::Approx(1.0));
}

TEST_CASE("diagonal embedding") {
    GroupPtr s3 = load_group_file(data_path("s3_table.json"));
    GroupFunction d = delta_function(s3, 2);
    TwoVariableFunction u = diagonal_embed(d);
    REQUIRE(u.values.size() == 1);
    CHECK(u.values.count({2, 2}) == 1);

    TwoVariableFunction z = diagonal_embed(zero_function(s3));
    CHECK(z.values.empty());

    GroupFunction two = zero_function(s3);
    two.values[1] = 1.0;
    two.values[4] = Cplx(0.0, 2.0);
    TwoVariableFunction tu = diagonal_embed(two);
    REQUIRE(tu.values.size() == 2);
    CHECK(std::abs(tu.values.at({1, 1}) - 1.0) < 1e-15);
    CHECK(std::abs(tu.values.at({4, 4}) - Cplx(0.0, 2.0)) < 1e-15);
}

TEST_CASE("psi functional") {
    GroupPtr q8 = quaternion_group();
    auto irreps = quaternion_irreps(q8);

    // single off-diagonal point mass collapses to nu(Omega) = 1/|[G,G]|
    TwoVariableFunction u;
    u.left = q8;
    u.right = q8;
    u.values[{2, 5}] = 1.0;
    CHECK(psi_functional(q8, irreps, u) == doctest::Approx(0.5).epsilon(1e-10));

    TwoVariableFunction zero;
    zero.left = q8;
    zero.right = q8;
    CHECK(psi_functional(q8, irreps, zero) == 0.0);

    // key trick: Psi(iota_Delta f) = nu(Omega) ||f||_A
    for (std::uint64_t seed = 11; seed <= 30; ++seed) {
        GroupFunction f = random_function(q8, seed);
        const double lhs = psi_functional(q8, irreps, diagonal_embed(f));
        const double rhs = 0.5 * fourier_algebra_norm(q8, irreps, f);
        CHECK(std::abs(lhs - rhs) <= 1e-8 * std::max(1.0, rhs));
    }
}

TEST_CASE("mu_K projection report") {
    GroupPtr q8 = quaternion_group();
    auto irreps = quaternion_irreps(q8);

    // K = {e}: mu_K is the identity on every irrep
    MuKReport r = verify_muK_projection(q8, irreps, trivial_subgroup(q8));
    CHECK(r.pass);
    CHECK(r.kernel_count == irreps.size());

    // K = G: only the trivial character survives
    r = verify_muK_projection(q8, irreps, whole_group(q8));
    CHECK(r.pass);
    CHECK(r.kernel_count == 1);

    // K = [G,G] on Hr(3,1): identity on the 9 linears, 0 on both 3-dims
    auto [hr, hr_irreps] = family_irreps(parse_family_expr("Hr(3,1)"));
    MuKReport hr_rep =
        verify_muK_projection(hr, hr_irreps, commutator_subgroup(hr));
    CHECK(hr_rep.pass);
    CHECK(hr_rep.kernel_count == 9);
    CHECK(hr_rep.rows.size() == 11);
    CHECK(hr_rep.max_deviation <= 1e-10);

    // non-normal K is refused
    GroupPtr d3 = dihedral_group(3);
    auto d3_irreps = semidirect_irreps(dihedral_semidirect(d3, 3));
    Subgroup refl = subgroup_generated(d3, {3});
    CHECK_THROWS_AS(verify_muK_projection(d3, d3_irreps, refl), NotNormalError);
}
