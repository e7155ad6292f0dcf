#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mubkit/entropy.hpp"
#include "mubkit/errors.hpp"
#include "mubkit/mub.hpp"
#include "mubkit/states.hpp"
#include "test_support.hpp"

using namespace mubkit;

namespace {

// independent oracle for the measurement channel: sum_i (P_i (x) I) rho (P_i (x) I)
BipartiteState measure_A_oracle(const BipartiteState& s, const OrthonormalBasis& basis) {
    const std::size_t d = s.d;
    BipartiteState out{d, ComplexMatrix(d * d, d * d)};
    for (std::size_t i = 0; i < d; ++i) {
        ComplexMatrix proj(d, d);
        for (std::size_t m = 0; m < d; ++m) {
            for (std::size_t n = 0; n < d; ++n) {
                proj(m, n) = basis.vectors[i][m] * std::conj(basis.vectors[i][n]);
            }
        }
        const ComplexMatrix lifted = kron(proj, ComplexMatrix::identity(d));
        out.mat = add(out.mat, matmul(lifted, matmul(s.mat, lifted)));
    }
    return out;
}

DensityMatrix b_marginal(const BipartiteState& s) {
    return {s.d, partial_trace(s.mat, s.d, s.d, Subsystem::B)};
}

}  // namespace

TEST_CASE("linear entropy fixed values") {
    RandomStream rng(1);
    CHECK(linear_entropy(random_pure(3, rng)).value <= 1e-10);

    for (std::size_t d : {2, 3, 5}) {
        const DensityMatrix mixed{d, scale(ComplexMatrix::identity(d), 1.0 / d)};
        CHECK(linear_entropy(mixed).value ==
              doctest::Approx(static_cast<double>(d) - 1.0).epsilon(1e-12));
    }

    const DensityMatrix diag{2, testsupport::from_rows({{0.75, 0.0}, {0.0, 0.25}})};
    CHECK(linear_entropy(diag).value == doctest::Approx(0.75).epsilon(1e-14));
}

TEST_CASE("linear entropy bounds across the random ensemble") {
    RandomStream rng(2);
    for (std::size_t d : {2, 3}) {
        for (std::size_t rank : {std::size_t{1}, d * d}) {
            for (int trial = 0; trial < 200; ++trial) {
                const BipartiteState s = random_bipartite(d, rank, rng);
                const double v = linear_entropy(s).value;
                CHECK(v >= 0.0);
                CHECK(v <= static_cast<double>(d * d) - 1.0);
            }
        }
    }
}

TEST_CASE("measure_A on the Bell state in the computational basis") {
    const BipartiteState bell = maximally_entangled(2);
    const BipartiteState post = measure_A(bell, computational_basis(2));
    ComplexMatrix expected(4, 4);
    expected(0, 0) = 0.5;  // |00><00|
    expected(3, 3) = 0.5;  // |11><11|
    CHECK(max_abs_diff(post.mat, expected) <= 1e-15);
}

TEST_CASE("measure_A of the classical fixture in the X basis is maximally mixed") {
    const BipartiteState s = classical_correlated(2);
    const MubSet ms = build_full_mub_set(2);
    const BipartiteState post = measure_A(s, ms.bases[1]);  // pauli-x
    CHECK(max_abs_diff(post.mat, scale(ComplexMatrix::identity(4), 0.25)) <= 1e-15);
}

TEST_CASE("measure_A matches the projector-sandwich oracle") {
    RandomStream rng(3);
    for (std::size_t d : {2, 3, 5}) {
        const MubSet ms = build_full_mub_set(d);
        for (int trial = 0; trial < 10; ++trial) {
            const BipartiteState s = random_bipartite(d, d * d, rng);
            for (const auto& basis : ms.bases) {
                const BipartiteState fast = measure_A(s, basis);
                const BipartiteState oracle = measure_A_oracle(s, basis);
                CHECK(max_abs_diff(fast.mat, oracle.mat) <= 1e-12);
            }
        }
    }
}

TEST_CASE("measure_A preserves trace, B marginal, Hermiticity; idempotent") {
    RandomStream rng(4);
    for (std::size_t d : {2, 3}) {
        const MubSet ms = build_full_mub_set(d);
        for (int trial = 0; trial < 20; ++trial) {
            const BipartiteState s = random_bipartite(d, d * d, rng);
            for (const auto& basis : ms.bases) {
                const BipartiteState post = measure_A(s, basis);
                CHECK(std::abs(trace(post.mat) - trace(s.mat)) <= 1e-12);
                CHECK(max_abs_diff(b_marginal(post).mat, b_marginal(s).mat) <= 1e-12);
                CHECK(max_hermiticity_deviation(post.mat) <= 1e-12);
                CHECK(hermitian_eigenvalues(post.mat).front() >= -1e-10);
                const BipartiteState twice = measure_A(post, basis);
                CHECK(max_abs_diff(twice.mat, post.mat) <= 1e-12);
            }
        }
    }
}

TEST_CASE("measurement block identity: purity via blocks equals dense purity") {
    RandomStream rng(5);
    for (std::size_t d : {2, 3, 4}) {
        const MubSet ms = build_full_mub_set(d);
        for (int trial = 0; trial < 10; ++trial) {
            const BipartiteState s = random_bipartite(d, (d * d + 1) / 2, rng);
            for (const auto& basis : ms.bases) {
                const auto blocks = measurement_blocks(s, basis);
                const double fast = purity_from_blocks(blocks);
                const double dense = hs_norm_sq(measure_A(s, basis).mat);
                CHECK(std::abs(fast - dense) <= 1e-12);
            }
        }
    }
}

TEST_CASE("mutual information via blocks equals the dense route") {
    RandomStream rng(6);
    for (std::size_t d : {2, 3}) {
        const MubSet ms = build_full_mub_set(d);
        for (int trial = 0; trial < 15; ++trial) {
            const BipartiteState s = random_bipartite(d, d * d, rng);
            const ComplexMatrix rhoB = b_marginal(s).mat;
            for (const auto& basis : ms.bases) {
                const double fast = mutual_info_from_blocks(measurement_blocks(s, basis), rhoB);
                const double dense = linear_mutual_information(measure_A(s, basis)).value;
                CHECK(std::abs(fast - dense) <= 1e-12);
            }
        }
    }
}

TEST_CASE("conditional linear entropy fixtures") {
    const MubSet ms2 = build_full_mub_set(2);

    SUBCASE("Bell: every MUB gives S_L(theta|B) = 1, and S_L(A|B) = -1") {
        const BipartiteState bell = maximally_entangled(2);
        const DensityMatrix rhoB = b_marginal(bell);
        for (const auto& basis : ms2.bases) {
            const BipartiteState post = measure_A(bell, basis);
            CHECK(cond_linear_entropy_post(post, rhoB).value ==
                  doctest::Approx(1.0).epsilon(1e-12));
        }
        CHECK(cond_linear_entropy_AB(bell).value == doctest::Approx(-1.0).epsilon(1e-12));
    }

    SUBCASE("classical fixture: Z gives 1, X and Y give 2; S_L(A|B) = 1") {
        const BipartiteState s = classical_correlated(2);
        const DensityMatrix rhoB = b_marginal(s);
        const double z = cond_linear_entropy_post(measure_A(s, ms2.bases[0]), rhoB).value;
        const double x = cond_linear_entropy_post(measure_A(s, ms2.bases[1]), rhoB).value;
        const double y = cond_linear_entropy_post(measure_A(s, ms2.bases[2]), rhoB).value;
        CHECK(z == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(x == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(y == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(cond_linear_entropy_AB(s).value == doctest::Approx(1.0).epsilon(1e-12));
    }

    SUBCASE("product of maximally mixed: S_L(A|B) = 2") {
        const DensityMatrix mixed{2, scale(ComplexMatrix::identity(2), 0.5)};
        CHECK(cond_linear_entropy_AB(product_state(mixed, mixed)).value ==
              doctest::Approx(2.0).epsilon(1e-12));
    }

    SUBCASE("marginal mismatch is rejected") {
        const BipartiteState bell = maximally_entangled(2);
        const BipartiteState post = measure_A(bell, ms2.bases[0]);
        const DensityMatrix wrong{2, testsupport::from_rows({{0.9, 0.0}, {0.0, 0.1}})};
        CHECK_THROWS_AS(cond_linear_entropy_post(post, wrong), DomainError);
    }
}

TEST_CASE("pure product state: conditional entropy equals the dephasing entropy of A") {
    RandomStream rng(7);
    const MubSet ms = build_full_mub_set(3);
    for (int trial = 0; trial < 10; ++trial) {
        const DensityMatrix a = random_pure(3, rng);
        const DensityMatrix b = random_pure(3, rng);
        const BipartiteState s = product_state(a, b);
        const DensityMatrix rhoB = b_marginal(s);
        for (const auto& basis : ms.bases) {
            const BipartiteState post = measure_A(s, basis);
            const double got = cond_linear_entropy_post(post, rhoB).value;
            // dephased rho_A: diag of <i|a|i>; for pure rho_B the joint purity
            // factorizes, tr rho_thetaB^2 = tr(dephased_a^2) * tr(b^2)
            double purity_dephased = 0.0;
            for (const auto& v : basis.vectors) {
                Complex p{0.0, 0.0};
                for (std::size_t m = 0; m < 3; ++m) {
                    for (std::size_t n = 0; n < 3; ++n) {
                        p += std::conj(v[m]) * a.mat(m, n) * v[n];
                    }
                }
                purity_dephased += std::norm(p);
            }
            const double expected = 3.0 * hs_norm_sq(rhoB.mat) -
                                    9.0 * purity_dephased * hs_norm_sq(b.mat) + 6.0;
            CHECK(got == doctest::Approx(expected).epsilon(1e-10));
        }
    }
}

TEST_CASE("the two closed forms of the conditional entropy agree on random states") {
    RandomStream rng(8);
    const MubSet ms = build_full_mub_set(3);
    for (int trial = 0; trial < 25; ++trial) {
        const BipartiteState s = random_bipartite(3, 5, rng);
        const DensityMatrix rhoB = b_marginal(s);
        for (const auto& basis : ms.bases) {
            const BipartiteState post = measure_A(s, basis);
            const double expanded = cond_linear_entropy_post(post, rhoB).value;
            const double definitional =
                linear_entropy(post).value - linear_entropy(rhoB).value;
            CHECK(std::abs(expanded - definitional) <= 1e-10);
        }
    }
}

TEST_CASE("linear mutual information fixtures and bounds") {
    CHECK(linear_mutual_information(classical_correlated(2)).value ==
          doctest::Approx(0.25).epsilon(1e-14));
    for (std::size_t d : {2, 3}) {
        CHECK(linear_mutual_information(maximally_entangled(d)).value ==
              doctest::Approx(1.0 - 1.0 / (d * d)).epsilon(1e-12));
    }
    RandomStream rng(9);
    const DensityMatrix a = random_density(3, 2, rng);
    const DensityMatrix b = random_density(3, 3, rng);
    CHECK(linear_mutual_information(product_state(a, b)).value <= 1e-12);

    for (std::size_t d : {2, 3}) {
        for (int trial = 0; trial < 100; ++trial) {
            const BipartiteState s = random_bipartite(d, d * d, rng);
            const double il = linear_mutual_information(s).value;
            CHECK(il >= 0.0);
            CHECK(il <= 1.0 - 1.0 / (d * d) + 1e-12);
        }
    }
}

TEST_CASE("mutual information is invariant under local unitaries") {
    RandomStream rng(10);
    for (std::size_t d : {2, 3}) {
        for (int trial = 0; trial < 10; ++trial) {
            const BipartiteState s = random_bipartite(d, d * d, rng);
            const ComplexMatrix ua = unitary_from_gaussian(d, rng);
            const ComplexMatrix ub = unitary_from_gaussian(d, rng);
            const ComplexMatrix u = kron(ua, ub);
            const BipartiteState rotated{d, matmul(u, matmul(s.mat, dagger(u)))};
            CHECK(linear_mutual_information(rotated).value ==
                  doctest::Approx(linear_mutual_information(s).value).epsilon(1e-10));
        }
    }
}

TEST_CASE("von Neumann entropy fixtures") {
    for (std::size_t d : {2, 3, 4}) {
        const DensityMatrix mixed{d, scale(ComplexMatrix::identity(d), 1.0 / d)};
        CHECK(von_neumann_entropy(mixed).value ==
              doctest::Approx(std::log2(static_cast<double>(d))).epsilon(1e-12));
    }
    RandomStream rng(11);
    CHECK(von_neumann_entropy(random_pure(4, rng)).value <= 1e-9);

    // Bell: S(A|B) = S(rho_AB) - S(rho_B) = 0 - 1 = -1
    CHECK(cond_vn(maximally_entangled(2)).value == doctest::Approx(-1.0).epsilon(1e-10));
}

TEST_CASE("vn entropy from blocks equals the dense spectrum route") {
    RandomStream rng(12);
    const MubSet ms = build_full_mub_set(3);
    for (int trial = 0; trial < 10; ++trial) {
        const BipartiteState s = random_bipartite(3, 9, rng);
        for (const auto& basis : ms.bases) {
            const double fast = vn_entropy_from_blocks(measurement_blocks(s, basis));
            const double dense = von_neumann_entropy(measure_A(s, basis)).value;
            CHECK(fast == doctest::Approx(dense).epsilon(1e-9));
        }
    }
}

TEST_CASE("eq1 cross-check fixtures") {
    const MubSet ms = build_full_mub_set(2);

    // Bell with Z and X: 0 + 0 >= 1 + (-1), slack exactly 0
    const BipartiteState bell = maximally_entangled(2);
    CHECK(std::abs(check_eq1_von_neumann(bell, ms.bases[0], ms.bases[1])) <= 1e-10);

    // product of maximally mixed: 2 >= 1 + 1, slack 0
    const DensityMatrix mixed{2, scale(ComplexMatrix::identity(2), 0.5)};
    const BipartiteState prod = product_state(mixed, mixed);
    CHECK(std::abs(check_eq1_von_neumann(prod, ms.bases[0], ms.bases[1])) <= 1e-10);

    // non-unbiased pair is rejected
    CHECK_THROWS_AS(check_eq1_von_neumann(bell, ms.bases[0], ms.bases[0]), DomainError);
}

TEST_CASE("eq1 slack is nonnegative on random states") {
    RandomStream rng(13);
    const MubSet ms = build_full_mub_set(3);
    for (int trial = 0; trial < 50; ++trial) {
        const BipartiteState s = random_bipartite(3, 5, rng);
        for (std::size_t i = 0; i < ms.bases.size(); ++i) {
            for (std::size_t j = i + 1; j < ms.bases.size(); ++j) {
                CHECK(check_eq1_von_neumann(s, ms.bases[i], ms.bases[j]) >= -1e-8);
            }
        }
    }
}
