#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "speclab/eig.hpp"
#include "speclab/norms.hpp"
#include "speclab/sequences.hpp"
#include "support.hpp"

using namespace speclab;
using namespace speclab::testing;
using std::numbers::pi;

namespace {

std::vector<cxd> chebyshev_grid_eigenvalues(std::size_t n) {
    std::vector<cxd> v;
    for (std::size_t j = 1; j <= n; ++j)
        v.push_back(2.0 * std::cos(static_cast<double>(j) * pi / static_cast<double>(n + 1)));
    return v;
}

}  // namespace

TEST_CASE("eig_general: free Jacobi golden eigenvalues at n=8") {
    const Spectrum s = eig_general(free_jacobi(8));
    CHECK(s.size() == 8);
    CHECK(multiset_distance(s.eigenvalues, chebyshev_grid_eigenvalues(8)) <= 1e-10);
}

TEST_CASE("eig_general: 1x1 matrix is its own spectrum") {
    TridiagonalMatrix a(1);
    a.diag()[0] = cxd(3.5, -2.0);
    const Spectrum s = eig_general(a);
    REQUIRE(s.size() == 1);
    CHECK(s.eigenvalues[0] == cxd(3.5, -2.0));
}

TEST_CASE("eig_general: 2x2 with sub=0.5, super=2 has eigenvalues +-1") {
    TridiagonalMatrix a(2);
    a.sub()[0] = 0.5;
    a.super()[0] = 2.0;
    const Spectrum s = eig_general(a);
    CHECK(multiset_distance(s.eigenvalues, {cxd(1.0), cxd(-1.0)}) <= 1e-12);
}

TEST_CASE("eig_general: 3x3 complex tridiagonal against the Cardano oracle") {
    TridiagonalMatrix a(3);
    a.diag() = {cxd(0, 1), cxd(0, 0), cxd(0, -1)};
    a.sub() = {cxd(1), cxd(1)};
    a.super() = {cxd(1), cxd(1)};

    // Characteristic polynomial from the determinant recurrence, expanded in
    // coefficient arithmetic: d3(z) = z^3 + a2 z^2 + a1 z + a0.
    // d1 = z - i; d2 = (z)(z - i) - 1; d3 = (z + i) d2 - d1.
    // Expanding: d3 = z^3 - i z^2 - z + i z^2 + z - i - z + i = z^3 - z.
    const cxd i(0, 1);
    // coefficient arrays (constant term first)
    std::vector<cxd> d1 = {-i, 1};
    std::vector<cxd> d2 = {cxd(-1), 0, 0};
    {  // d2 = z*d1 - 1: shift d1 by one degree, subtract 1
        d2[1] += d1[0];
        d2[2] += d1[1];
    }
    std::vector<cxd> d3(4, 0.0);
    // (z + i) * d2
    for (int k = 0; k < 3; ++k) {
        d3[k + 1] += d2[k];
        d3[k] += i * d2[k];
    }
    // minus a2*c2*d1 with a2*c2 = 1
    d3[0] -= d1[0];
    d3[1] -= d1[1];
    REQUIRE(std::abs(d3[3] - cxd(1.0)) == 0.0);

    const std::vector<cxd> roots = cardano_roots(d3[2], d3[1], d3[0]);
    const Spectrum s = eig_general(a);
    CHECK(multiset_distance(s.eigenvalues, roots) <= 1e-10);
}

TEST_CASE("eig_general: dense input must be upper Hessenberg") {
    DenseMatrix a(3, 3);
    a(2, 0) = 1.0;
    a(0, 0) = 1.0;
    CHECK_THROWS_AS(eig_general(a), NotHessenberg);
}

TEST_CASE("eig_hermitian: free Jacobi golden eigenvalues at n=16 within 1e-12") {
    const Spectrum s = eig_hermitian(free_jacobi(16));
    double worst = 0.0;
    for (std::size_t j = 0; j < 16; ++j) {
        // ascending output versus descending cosine grid
        const double expect = 2.0 * std::cos((16.0 - static_cast<double>(j)) * pi / 17.0);
        worst = std::max(worst, std::abs(s.eigenvalues[j].real() - expect));
        CHECK(s.eigenvalues[j].imag() == 0.0);
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("eig_hermitian: diagonal matrix sorts its entries") {
    TridiagonalMatrix a(3);
    a.diag() = {cxd(3), cxd(1), cxd(2)};
    const Spectrum s = eig_hermitian(a);
    CHECK(s.eigenvalues[0] == cxd(1.0));
    CHECK(s.eigenvalues[1] == cxd(2.0));
    CHECK(s.eigenvalues[2] == cxd(3.0));
}

TEST_CASE("eig_hermitian: rejects non-symmetric input") {
    TridiagonalMatrix a(2);
    a.sub()[0] = 1.0;
    a.super()[0] = 2.0;
    CHECK_THROWS_AS(eig_hermitian(a), NotHermitian);
}

TEST_CASE("eig_hermitian: 2-periodic section matches eig_general and the quartic oracle") {
    PeriodicBackground bg{2, {1.0, 2.0}, {0.0, 0.0}};
    const TridiagonalMatrix a = periodic_jacobi(bg, 4);
    const Spectrum herm = eig_hermitian(a);
    const Spectrum gen = eig_general(a);
    CHECK(multiset_distance(herm.eigenvalues, gen.eigenvalues) <= 1e-10);

    // d4(z) = z^4 - (a1^2+a2^2+a3^2) z^2 + a1^2 a3^2 with zero diagonal;
    // solve the quadratic in z^2 directly.
    const double a1 = std::abs(a.sub()[0]), a2 = std::abs(a.sub()[1]), a3 = std::abs(a.sub()[2]);
    const double p = a1 * a1 + a2 * a2 + a3 * a3;
    const double q = a1 * a1 * a3 * a3;
    const double r1 = (p + std::sqrt(p * p - 4 * q)) / 2.0;
    const double r2 = (p - std::sqrt(p * p - 4 * q)) / 2.0;
    std::vector<cxd> oracle = {std::sqrt(r1), -std::sqrt(r1), std::sqrt(r2), -std::sqrt(r2)};
    CHECK(multiset_distance(herm.eigenvalues, oracle) <= 1e-10);
}

TEST_CASE("eig agreement between general and hermitian paths on random symmetric input") {
    Rng rng(kSeed);
    for (int rep = 0; rep < 20; ++rep) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform_int(2, 24));
        const TridiagonalMatrix a = random_real_symmetric_tridiagonal(rng, n, 2.0);
        const Spectrum sg = eig_general(a);
        const Spectrum sh = eig_hermitian(a);
        CHECK(multiset_distance(sg.eigenvalues, sh.eigenvalues) <= 1e-9);
    }
}

TEST_CASE("spectrum trace preservation on random complex tridiagonals") {
    Rng rng(kSeed + 1);
    for (int rep = 0; rep < 50; ++rep) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform_int(2, 40));
        const TridiagonalMatrix a = random_complex_tridiagonal(rng, n, 2.0);
        const Spectrum s = eig_general(a);
        CHECK(std::abs(s.sum() - a.trace()) <= 1e-10 * (1.0 + entrywise_l1(a)));
    }
}

TEST_CASE("spectrum of the adjoint is the conjugate spectrum") {
    Rng rng(kSeed + 2);
    for (int rep = 0; rep < 20; ++rep) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform_int(2, 24));
        const TridiagonalMatrix a = random_complex_tridiagonal(rng, n, 1.5);
        std::vector<cxd> conj_spec;
        for (const cxd& z : eig_general(a).eigenvalues) conj_spec.push_back(std::conj(z));
        CHECK(multiset_distance(eig_general(a.adjoint()).eigenvalues, conj_spec) <= 1e-9);
    }
}

TEST_CASE("hessenberg_reduce preserves trace and spectrum") {
    Rng rng(kSeed + 3);
    const DenseMatrix a = random_dense(rng, 12, 1.0);
    const DenseMatrix h = hessenberg_reduce(a);
    CHECK(is_upper_hessenberg(h));
    CHECK(std::abs(h.trace() - a.trace()) <= 1e-12 * (1.0 + entrywise_l1(a)));
    // spectrum check against the tridiagonal-free path: compare with eig of h
    // computed twice (h is already Hessenberg, reduce is idempotent there)
    const Spectrum s1 = eig_general(h);
    const Spectrum s2 = eig_general(hessenberg_reduce(h));
    CHECK(multiset_distance(s1.eigenvalues, s2.eigenvalues) <= 1e-9);
}

TEST_CASE("singular_values: all-ones 5x5 collapses to (5,0,0,0,0)") {
    DenseMatrix a(5, 5);
    for (cxd& z : a.data()) z = 1.0;
    const std::vector<double> sv = singular_values(a);
    CHECK(sv[0] == doctest::Approx(5.0).epsilon(1e-12));
    for (std::size_t i = 1; i < 5; ++i) CHECK(std::abs(sv[i]) <= 1e-12);
}

TEST_CASE("singular_values: identity") {
    const std::vector<double> sv = singular_values(DenseMatrix::identity(6));
    for (double s : sv) CHECK(s == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("singular_values: [[1,1],[0,1]] gives the golden ratio pair") {
    DenseMatrix a(2, 2);
    a(0, 0) = 1.0;
    a(0, 1) = 1.0;
    a(1, 1) = 1.0;
    // oracle: eigenvalues of A*A = [[1,1],[1,2]] are (3 +- sqrt(5))/2
    const double phi = std::sqrt((3.0 + std::sqrt(5.0)) / 2.0);
    const double inv = std::sqrt((3.0 - std::sqrt(5.0)) / 2.0);
    const std::vector<double> sv = singular_values(a);
    CHECK(sv[0] == doctest::Approx(phi).epsilon(1e-12));
    CHECK(sv[1] == doctest::Approx(inv).epsilon(1e-12));
    CHECK(trace_norm(a) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));
}

TEST_CASE("singular values square-sum to the Frobenius norm") {
    Rng rng(kSeed + 4);
    for (int rep = 0; rep < 10; ++rep) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform_int(2, 20));
        const DenseMatrix a = random_dense(rng, n, 1.0);
        double sum2 = 0.0;
        for (double s : singular_values(a)) sum2 += s * s;
        const double f2 = frobenius_norm(a) * frobenius_norm(a);
        CHECK(std::abs(sum2 - f2) <= 1e-10 * std::max(1.0, f2));
    }
}

TEST_CASE("trace_norm basics") {
    DenseMatrix ones(5, 5);
    for (cxd& z : ones.data()) z = 1.0;
    CHECK(trace_norm(ones) == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(trace_norm(DenseMatrix(4, 4)) == 0.0);
}

TEST_CASE("entrywise_l1 examples") {
    DenseMatrix ones(5, 5);
    for (cxd& z : ones.data()) z = 1.0;
    CHECK(entrywise_l1(ones) == 25.0);
    CHECK(entrywise_l1(DenseMatrix::identity(5)) == 5.0);
    DenseMatrix a(2, 2);
    a(0, 1) = cxd(0, -2);
    a(1, 0) = 3.0;
    CHECK(entrywise_l1(a) == 5.0);
}

TEST_CASE("operator_norm examples") {
    DenseMatrix ones(5, 5);
    for (cxd& z : ones.data()) z = 1.0;
    CHECK(operator_norm(ones) == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(operator_norm(DenseMatrix::identity(3)) == doctest::Approx(1.0));
    // largest |eigenvalue| of the free Jacobi matrix
    CHECK(operator_norm(free_jacobi(8)) == doctest::Approx(2.0 * std::cos(pi / 9.0)).epsilon(1e-10));
}

TEST_CASE("norm inequalities on random matrices") {
    Rng rng(kSeed + 5);
    for (int rep = 0; rep < 60; ++rep) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform_int(2, 16));
        const bool dense = rng.uniform() < 0.5;
        DenseMatrix a = dense ? random_dense(rng, n, 1.5)
                              : random_complex_tridiagonal(rng, n, 1.5).to_dense();
        const double tn = trace_norm(a);
        const double ew = entrywise_l1(a);
        const double on = operator_norm(a);
        CHECK(tn <= ew + 1e-9 * (1.0 + ew));
        CHECK(std::abs(a.trace()) <= tn + 1e-9 * (1.0 + tn));
        CHECK(on <= tn + 1e-9 * (1.0 + tn));
        CHECK(tn <= static_cast<double>(n) * on + 1e-9 * (1.0 + tn));
    }
}

TEST_CASE("hermitian_parts: Hermitian and skew-Hermitian inputs") {
    Rng rng(kSeed + 6);
    DenseMatrix b = random_dense(rng, 5, 1.0);
    DenseMatrix herm(5, 5);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) herm(i, j) = 0.5 * (b(i, j) + std::conj(b(j, i)));

    const auto [re, im] = hermitian_parts(herm);
    for (std::size_t i = 0; i < 25; ++i) {
        CHECK(std::abs(re.data()[i] - herm.data()[i]) <= 1e-15);
        CHECK(std::abs(im.data()[i]) <= 1e-15);
    }

    DenseMatrix skew(5, 5);
    for (std::size_t i = 0; i < 25; ++i) skew.data()[i] = cxd(0, 1) * herm.data()[i];
    const auto [re2, im2] = hermitian_parts(skew);
    for (std::size_t i = 0; i < 25; ++i) {
        CHECK(std::abs(re2.data()[i]) <= 1e-15);
        CHECK(std::abs(im2.data()[i] - herm.data()[i]) <= 1e-15);
    }
}

TEST_CASE("hermitian_parts: tridiagonal example against the defining formulas") {
    TridiagonalMatrix a(3);
    a.diag() = {cxd(0, 1), cxd(0), cxd(0)};
    a.sub() = {cxd(1), cxd(0)};
    a.super() = {cxd(0), cxd(0)};
    const auto [re, im] = hermitian_parts(a);

    const DenseMatrix ad = a.to_dense();
    const DenseMatrix adj = ad.adjoint();
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            const cxd expect_re = 0.5 * (ad(i, j) + adj(i, j));
            const cxd expect_im = (ad(i, j) - adj(i, j)) / cxd(0, 2);
            CHECK(std::abs(re.to_dense()(i, j) - expect_re) <= 1e-15);
            CHECK(std::abs(im.to_dense()(i, j) - expect_im) <= 1e-15);
        }
    }
    CHECK(re.sub()[0] == cxd(0.5));
    CHECK(im.diag()[0] == cxd(1.0));

    // reconstruction: Re + i*Im == A
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(std::abs(re.to_dense()(i, j) + cxd(0, 1) * im.to_dense()(i, j) - ad(i, j)) <=
                  1e-15);
}

TEST_CASE("hermitian parts are Hermitian for random input") {
    Rng rng(kSeed + 7);
    const DenseMatrix a = random_dense(rng, 7, 2.0);
    const auto [re, im] = hermitian_parts(a);
    CHECK(is_hermitian(re, 1e-15));
    CHECK(is_hermitian(im, 1e-15));
}
