#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "entgeo/catalog.hpp"
#include "entgeo/geometry.hpp"
#include "entgeo/random.hpp"
#include "test_support.hpp"

using namespace entgeo;
using test_support::Cx;
using test_support::state_of;

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const double kInvSqrt3 = 1.0 / std::sqrt(3.0);
}  // namespace

TEST_CASE("make_state accepts the Bell amplitudes") {
    const auto phi = state_of({2, 2}, {kInvSqrt2, 0, 0, kInvSqrt2});
    CHECK(phi.dim() == 4);
    CHECK(phi.num_parties() == 2);
    CHECK(std::abs(phi.squared_norm() - 1.0) < 1e-12);
}

TEST_CASE("make_state accepts a plain basis state") {
    const auto zero = state_of({2}, {1, 0});
    CHECK(zero.amps(0) == Cx(1));
    CHECK(zero.amps(1) == Cx(0));
}

TEST_CASE("make_state normalizes (|00>+|01>+|10>) when asked") {
    const auto psi = state_of({2, 2}, {1, 1, 1, 0}, /*normalize=*/true);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(psi.amps(i) - Cx(kInvSqrt3)) < 1e-12);
    CHECK(std::abs(psi.amps(3)) == 0.0);
}

TEST_CASE("make_state rejections") {
    ComplexVector<double> three = ComplexVector<double>::Zero(3);
    three(0) = 1;
    CHECK_THROWS_AS(make_state<double>({2, 2}, three), LengthMismatch);

    ComplexVector<double> zeros = ComplexVector<double>::Zero(4);
    CHECK_THROWS_AS(make_state<double>({2, 2}, zeros), ZeroVector);
    CHECK_THROWS_AS(make_state<double>({2, 2}, zeros, true), ZeroVector);

    ComplexVector<double> off(2);
    off << 0.5, 0.5;
    CHECK_THROWS_AS(make_state<double>({2}, off), NotNormalized);
    CHECK_NOTHROW(make_state<double>({2}, off, true));

    ComplexVector<double> one(1);
    one << 1.0;
    CHECK_THROWS_AS(make_state<double>({1}, one), InvalidParameters);
    CHECK_THROWS_AS(make_state<double>({}, one), InvalidParameters);
}

TEST_CASE("basis indexing is big-endian in party order") {
    CHECK(basis_index({2, 2, 2}, {0, 1, 0}) == 2);
    CHECK(basis_index({3, 3}, {2, 1}) == 7);
    CHECK(basis_digits({2, 3}, 4) == std::vector<int>{1, 1});
    CHECK_THROWS_AS(basis_index({2, 2}, {0, 2}), InvalidParameters);
}

TEST_CASE("catalog Bell states") {
    const auto phi_plus = catalog(NamedState::phi_plus());
    CHECK(phi_plus.dims == std::vector<int>{2, 2});
    CHECK(std::abs(phi_plus.amps(0) - Cx(kInvSqrt2)) < 1e-15);
    CHECK(std::abs(phi_plus.amps(3) - Cx(kInvSqrt2)) < 1e-15);
    CHECK(std::abs(phi_plus.amps(1)) + std::abs(phi_plus.amps(2)) == 0.0);

    const auto psi_minus = catalog(NamedState::psi_minus());
    CHECK(std::abs(psi_minus.amps(1) - Cx(kInvSqrt2)) < 1e-15);
    CHECK(std::abs(psi_minus.amps(2) + Cx(kInvSqrt2)) < 1e-15);
}

TEST_CASE("catalog GHZ(3,3) puts 1/sqrt(3) at indices 0, 13, 26") {
    const auto ghz = catalog(NamedState::ghz(3, 3));
    CHECK(ghz.dim() == 27);
    for (Eigen::Index i = 0; i < 27; ++i) {
        if (i == 0 || i == 13 || i == 26)
            CHECK(std::abs(ghz.amps(i) - Cx(kInvSqrt3)) < 1e-15);
        else
            CHECK(std::abs(ghz.amps(i)) == 0.0);
    }
}

TEST_CASE("catalog W3 puts 1/sqrt(3) at indices 1, 2, 4") {
    const auto w = catalog(NamedState::w3());
    for (Eigen::Index i = 0; i < 8; ++i) {
        if (i == 1 || i == 2 || i == 4)
            CHECK(std::abs(w.amps(i) - Cx(kInvSqrt3)) < 1e-15);
        else
            CHECK(std::abs(w.amps(i)) == 0.0);
    }
}

TEST_CASE("catalog parameter validation") {
    CHECK_THROWS_AS(catalog(NamedState::ghz(1, 2)), InvalidParameters);
    CHECK_THROWS_AS(catalog(NamedState::ghz(3, 1)), InvalidParameters);
    CHECK_THROWS_AS(catalog(NamedState::product_basis({2, 2}, {0, 2})), InvalidParameters);
    CHECK_THROWS_AS(catalog(NamedState::product_basis({2, 2}, {0})), InvalidParameters);

    const auto basis = catalog(NamedState::product_basis({2, 3}, {1, 2}));
    CHECK(std::abs(basis.amps(5) - Cx(1)) == 0.0);
}

TEST_CASE("parse_named_state round trip") {
    CHECK(parse_named_state("W3").kind == NamedState::Kind::W3);
    CHECK(parse_named_state("PhiMinus").kind == NamedState::Kind::PhiMinus);

    const auto ghz = parse_named_state("GHZ(4,3)");
    CHECK(ghz.ghz_parties == 4);
    CHECK(ghz.ghz_dim == 3);
    CHECK(parse_named_state("GHZ(4)").ghz_dim == 2);

    const auto basis = parse_named_state("ProductBasis(2x3,01)");
    CHECK(basis.basis_dims == std::vector<int>{2, 3});
    CHECK(basis.basis_digits == std::vector<int>{0, 1});

    CHECK_THROWS_AS(parse_named_state("Bogus"), UnknownName);
    CHECK_THROWS_AS(parse_named_state("GHZ(x)"), UnknownName);
    CHECK_THROWS_AS(parse_named_state("GHZ(1,2)"), InvalidParameters);
    CHECK(catalog_entries().size() >= 7);
}

TEST_CASE("random_pure is normalized and deterministic per seed") {
    const auto a = random_pure({2, 2, 2}, 7);
    CHECK(a.dim() == 8);
    CHECK(std::abs(a.squared_norm() - 1.0) < 1e-12);

    const auto b = random_pure({2, 2, 2}, 7);
    CHECK(test_support::max_abs_diff(a.amps, b.amps) == 0.0);

    const auto c = random_pure({2, 2, 2}, 8);
    CHECK(test_support::max_abs_diff(a.amps, c.amps) > 1e-3);
}

TEST_CASE("random_pure generic two-qutrit state is entangled per the purity route") {
    const auto psi = random_pure({3, 3}, 1);
    CHECK(concurrence_purity(psi, Bipartition{0}) > 0.1);
}

TEST_CASE("random_unitary is unitary") {
    for (Eigen::Index d : {2, 3, 5}) {
        const auto u = random_unitary(d, 123);
        const Eigen::MatrixXcd delta =
            u.adjoint() * u - Eigen::MatrixXcd::Identity(d, d);
        CHECK(delta.cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("sample_seed keeps row zero replayable") {
    CHECK(sample_seed(42, 0) == 42);
    CHECK(sample_seed(42, 5) == 47);
}

TEST_CASE("GHZ and W3 single-party concurrences agree across parties") {
    for (const auto& name : {NamedState::ghz(3, 2), NamedState::w3(), NamedState::ghz(3, 3)}) {
        const auto psi = catalog(name);
        const double c0 = concurrence_wedge(psi, Bipartition{0});
        for (int k : {1, 2})
            CHECK(std::abs(concurrence_wedge(psi, Bipartition{k}) - c0) < 1e-12);
    }
}

TEST_CASE("tensor_product composes indices big-endian") {
    const auto one = state_of({2}, {0, 1});
    const auto zero = state_of({2}, {1, 0});
    const auto prod = tensor_product(one, zero);  // |10>
    CHECK(prod.dims == std::vector<int>{2, 2});
    CHECK(std::abs(prod.amps(2) - Cx(1)) == 0.0);
}

TEST_CASE("apply_local_unitary flips the chosen party only") {
    Eigen::Matrix2cd x;
    x << 0, 1, 1, 0;
    const auto psi = state_of({2, 2, 2}, {1, 0, 0, 0, 0, 0, 0, 0});
    const auto flipped = apply_local_unitary<double>(psi, 1, x);  // |000> -> |010>
    CHECK(std::abs(flipped.amps(2) - Cx(1)) < 1e-15);

    CHECK_THROWS_AS(apply_local_unitary<double>(psi, 5, x), InvalidParameters);
    Eigen::MatrixXcd bad = Eigen::MatrixXcd::Identity(3, 3);
    CHECK_THROWS_AS(apply_local_unitary<double>(psi, 0, bad), DimensionMismatch);
}

TEST_CASE("core pipeline instantiates for float") {
    const auto phi = catalog<float>(NamedState::phi_plus());
    const float c = concurrence_wedge<float>(phi, Bipartition{0});
    CHECK(std::abs(c - 1.0f) < 1e-5f);
}
