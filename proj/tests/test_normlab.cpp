#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "speclab/normlab.hpp"
#include "speclab/norms.hpp"
#include "speclab/sequences.hpp"
#include "support.hpp"

using namespace speclab;
using namespace speclab::testing;

TEST_CASE("diagonal_part: main diagonal of a diagonal matrix is the matrix") {
    DenseMatrix a(3, 3);
    a(0, 0) = 1.0;
    a(1, 1) = 2.0;
    a(2, 2) = 3.0;
    const DenseMatrix d = diagonal_part(a, 0);
    for (std::size_t i = 0; i < 9; ++i) CHECK(d.data()[i] == a.data()[i]);
}

TEST_CASE("diagonal_part: m=1 keeps exactly the subdiagonal") {
    const DenseMatrix a = free_jacobi(3).to_dense();
    const DenseMatrix d = diagonal_part(a, 1);
    CHECK(d(1, 0) == cxd(1.0));
    CHECK(d(2, 1) == cxd(1.0));
    CHECK(d(0, 1) == cxd(0.0));
    CHECK(d(1, 2) == cxd(0.0));
    CHECK(d(0, 0) == cxd(0.0));
}

TEST_CASE("diagonal parts reconstruct the matrix exactly") {
    Rng rng(kSeed);
    const std::size_t n = 9;
    const DenseMatrix a = random_dense(rng, n, 2.0);
    DenseMatrix sum(n, n);
    for (int m = -(static_cast<int>(n) - 1); m <= static_cast<int>(n) - 1; ++m)
        sum = sum + diagonal_part(a, m);
    for (std::size_t i = 0; i < a.data().size(); ++i) CHECK(sum.data()[i] == a.data()[i]);
}

TEST_CASE("single-diagonal matrices: trace norm equals the entrywise norm") {
    Rng rng(kSeed + 1);
    const std::size_t n = 8;
    const DenseMatrix a = random_dense(rng, n, 1.5);
    for (int m = -(static_cast<int>(n) - 1); m <= static_cast<int>(n) - 1; ++m) {
        const DenseMatrix d = diagonal_part(a, m);
        const double tn = trace_norm(d);
        const double ew = entrywise_l1(d);
        CHECK(std::abs(tn - ew) <= 1e-10 * (1.0 + ew));

        // closed form cross-check of the SVD path: the singular values of a
        // single-diagonal matrix are the entry moduli (padded with zeros)
        std::vector<double> moduli;
        for (const cxd& z : d.data())
            if (z != cxd(0.0)) moduli.push_back(std::abs(z));
        std::sort(moduli.begin(), moduli.end(), std::greater<double>());
        const std::vector<double> sv = singular_values(d);
        for (std::size_t i = 0; i < moduli.size(); ++i)
            CHECK(sv[i] == doctest::Approx(moduli[i]).epsilon(1e-12));
        for (std::size_t i = moduli.size(); i < sv.size(); ++i) CHECK(sv[i] <= 1e-12);
    }
}

TEST_CASE("diagonal part never increases the trace norm") {
    Rng rng(kSeed + 2);
    for (int rep = 0; rep < 6; ++rep) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform_int(2, 12));
        const DenseMatrix a = random_dense(rng, n, 1.0);
        const double tn = trace_norm(a);
        for (int m = -(static_cast<int>(n) - 1); m <= static_cast<int>(n) - 1; ++m)
            CHECK(trace_norm(diagonal_part(a, m)) <= tn + 1e-9 * (1.0 + tn));
    }
}

TEST_CASE("bhatia_average: diagonal matrix at m=0 comes back unchanged") {
    DenseMatrix a(4, 4);
    a(0, 0) = cxd(1, 1);
    a(1, 1) = cxd(-2, 0.5);
    a(2, 2) = 3.0;
    a(3, 3) = cxd(0, -1);
    const DenseMatrix b = bhatia_average(a, 0, 8);
    for (std::size_t i = 0; i < 16; ++i) CHECK(std::abs(b.data()[i] - a.data()[i]) <= 1e-14);
}

TEST_CASE("bhatia_average: free Jacobi subdiagonal at N = 8") {
    const DenseMatrix a = free_jacobi(4).to_dense();
    const DenseMatrix b = bhatia_average(a, 1, 8);
    const DenseMatrix d = diagonal_part(a, 1);
    for (std::size_t i = 0; i < 16; ++i)
        CHECK(std::abs(b.data()[i] - d.data()[i]) <= 1e-12 * entrywise_l1(a));
}

TEST_CASE("bhatia_average: empty diagonal of a tridiagonal matrix is zero") {
    const DenseMatrix a = free_jacobi(5).to_dense();
    const DenseMatrix b = bhatia_average(a, 2, 16);
    for (const cxd& z : b.data()) CHECK(std::abs(z) <= 1e-13);
}

TEST_CASE("bhatia_average requires N >= 2n-1") {
    const DenseMatrix a = free_jacobi(5).to_dense();
    CHECK_THROWS_AS(bhatia_average(a, 0, 8), GridTooCoarse);
    CHECK_NOTHROW(bhatia_average(a, 0, 9));
}

TEST_CASE("bhatia_average equals diagonal_part on seeded matrices") {
    Rng rng(kSeed + 3);
    for (int rep = 0; rep < 10; ++rep) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform_int(2, 16));
        const DenseMatrix a = random_dense(rng, n, 2.0);
        const double scale = entrywise_l1(a);
        const std::size_t grid = 2 * n - 1 + static_cast<std::size_t>(rng.uniform_int(0, 5));
        for (int m : {0, 1, -1, static_cast<int>(n) - 1}) {
            if (std::abs(m) >= static_cast<int>(n)) continue;
            const DenseMatrix b = bhatia_average(a, m, grid);
            const DenseMatrix d = diagonal_part(a, m);
            for (std::size_t i = 0; i < b.data().size(); ++i)
                CHECK(std::abs(b.data()[i] - d.data()[i]) <= 1e-12 * scale);
        }
    }
}

TEST_CASE("norm_equivalence_check: identity is the tight lower case") {
    const TridiagonalMatrix eye(
        std::vector<cxd>(4, 0.0), std::vector<cxd>(5, 1.0), std::vector<cxd>(4, 0.0));
    const NormEquivalenceReport rep = norm_equivalence_check(eye);
    CHECK(rep.trace_norm_value == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(rep.entrywise_value == 5.0);
    CHECK(rep.lower_ok);
    CHECK(rep.upper_ok);
    CHECK(rep.c_struct == 3);
    CHECK(rep.loose_checked);
    CHECK(rep.loose_lower_ok);
    CHECK(rep.loose_upper_ok);
}

TEST_CASE("norm_equivalence_check: all-ones matrix needs the full diagonal count") {
    DenseMatrix ones(5, 5);
    for (cxd& z : ones.data()) z = 1.0;
    const NormEquivalenceReport rep = norm_equivalence_check(ones, 9);
    CHECK(rep.trace_norm_value == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(rep.entrywise_value == 25.0);
    CHECK(rep.lower_ok);
    CHECK(rep.upper_ok);  // 25 <= 9 * 5
    // and the tridiagonal constant 3 would fail here
    const NormEquivalenceReport wrong = norm_equivalence_check(ones, 3);
    CHECK(!wrong.upper_ok);
}

TEST_CASE("norm equivalence sandwich on seeded tridiagonals") {
    Rng rng(kSeed + 4);
    for (int rep_i = 0; rep_i < 100; ++rep_i) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform_int(2, 32));
        const NormEquivalenceReport rep =
            norm_equivalence_check(random_complex_tridiagonal(rng, n, 1.5));
        CHECK(rep.lower_ok);
        CHECK(rep.upper_ok);
        CHECK(rep.loose_lower_ok);
        CHECK(rep.loose_upper_ok);
    }
}

TEST_CASE("norm equivalence sandwich on seeded banded matrices") {
    Rng rng(kSeed + 5);
    for (int half = 0; half <= 3; ++half) {
        const int diagonals = 2 * half + 1;  // 1, 3, 5, 7
        for (int rep_i = 0; rep_i < 12; ++rep_i) {
            const std::size_t n = static_cast<std::size_t>(rng.uniform_int(half + 1, 24));
            const DenseMatrix a = random_banded(rng, n, half, 1.0);
            const int c_struct = std::min(diagonals, 2 * static_cast<int>(n) - 1);
            const NormEquivalenceReport rep = norm_equivalence_check(a, c_struct);
            CHECK(rep.lower_ok);
            CHECK(rep.upper_ok);
        }
    }
}

TEST_CASE("nonzero_diagonal_count") {
    CHECK(nonzero_diagonal_count(free_jacobi(4).to_dense()) == 2);  // zero diagonal
    CHECK(nonzero_diagonal_count(periodic_jacobi(PeriodicBackground{1, {1.0}, {0.5}}, 4).to_dense()) == 3);
    CHECK(nonzero_diagonal_count(DenseMatrix::identity(4)) == 1);
    DenseMatrix ones(3, 3);
    for (cxd& z : ones.data()) z = 1.0;
    CHECK(nonzero_diagonal_count(ones) == 5);
    CHECK(nonzero_diagonal_count(DenseMatrix(3, 3)) == 0);
}
