// test_fock_core.cpp — Operators, displacement routes, Laguerre values, states

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "optomech/displacement.hpp"
#include "optomech/expm.hpp"
#include "optomech/fock.hpp"
#include "optomech/laguerre.hpp"
#include "optomech/util.hpp"

using namespace optomech;

namespace {

// independent series oracle: L_n^{(s)}(x) = Σ_k (−1)^k C(n+s, n−k) x^k / k!,
// summed in exact rational arithmetic (the alternating sum cancels ~10 digits
// at n = 30, x = 10 in any fixed precision)
using Rational = boost::multiprecision::cpp_rational;

Rational binomial(int n, int k) {
    Rational result = 1;
    for (int i = 0; i < k; ++i) result *= Rational(n - i) / Rational(i + 1);
    return result;
}

double laguerre_series(int n, int s, const Rational& x) {
    Rational sum = 0;
    Rational x_pow = 1;
    Rational factorial = 1;
    for (int k = 0; k <= n; ++k) {
        if (k > 0) {
            x_pow *= x;
            factorial *= k;
        }
        const Rational term = binomial(n + s, n - k) * x_pow / factorial;
        sum += (k % 2 == 0) ? term : -term;
    }
    return sum.convert_to<double>();
}

const HilbertSpace kSpace(false, 8, 24);

} // namespace

TEST_CASE("ladder operators on the truncated space") {
    const auto l = ladder_operators(kSpace);

    SECTION("matrix elements") {
        const Matrix a2 = annihilation_matrix(2);
        CHECK(a2(0, 1) == Complex(1.0));
        CHECK(a2(1, 0) == Complex(0.0));
        // <2|adag|1> = sqrt(2)
        const Matrix ad = annihilation_matrix(8).adjoint();
        CHECK_THAT(ad(2, 1).real(), Catch::Matchers::WithinAbs(1.41421356, 1e-8));
    }

    SECTION("adjoint relations hold exactly") {
        CHECK((l.adag.m - l.a.m.adjoint()).cwiseAbs().maxCoeff() == 0.0);
        CHECK((l.bdag.m - l.b.m.adjoint()).cwiseAbs().maxCoeff() == 0.0);
    }

    SECTION("commutator picks up the truncation edge term") {
        const int n = kSpace.n_cavity;
        const OperatorMatrix comm = commutator(l.a, l.adag);
        const OperatorMatrix expected =
            identity_op(kSpace) -
            double(n) * embed(fock_projector_matrix(n, n - 1), Subsystem::Cavity, kSpace);
        CHECK((comm - expected).max_abs() < 1e-12);
    }

    SECTION("number operators") {
        const QuantumState f = fock_state(kSpace, 3, 5);
        const Vector psi = f.as_ket();
        CHECK_THAT((psi.adjoint() * l.n_a.m * psi)(0).real(), Catch::Matchers::WithinAbs(3.0, 1e-12));
        CHECK_THAT((psi.adjoint() * l.n_b.m * psi)(0).real(), Catch::Matchers::WithinAbs(5.0, 1e-12));
    }
}

TEST_CASE("pauli operators") {
    const HilbertSpace space(true, 4, 6);
    const auto s = pauli_operators(space);

    CHECK((s.sz * s.sz - identity_op(space)).max_abs() < 1e-15);
    CHECK((s.sp * s.sm - 0.5 * (identity_op(space) + s.sz)).max_abs() < 1e-15);
    CHECK((commutator(s.sz, s.sp) - 2.0 * s.sp).max_abs() < 1e-15);
    CHECK((s.sm.m - s.sp.m.adjoint()).cwiseAbs().maxCoeff() == 0.0);
    CHECK_THROWS_AS(pauli_operators(kSpace), std::invalid_argument);
}

TEST_CASE("embedding respects the tensor ordering") {
    SECTION("identity embeds to identity") {
        const Matrix id = Matrix::Identity(kSpace.n_cavity, kSpace.n_cavity);
        CHECK((embed(id, Subsystem::Cavity, kSpace) - identity_op(kSpace)).max_abs() == 0.0);
    }

    SECTION("disjoint factors commute") {
        const auto l = ladder_operators(kSpace);
        CHECK(commutator(l.a, l.b).max_abs() == 0.0);
        CHECK(commutator(l.adag, l.n_b).max_abs() == 0.0);
    }

    SECTION("trace of an embedded number operator") {
        const auto l = ladder_operators(kSpace);
        double expected = 0.0;
        for (int k = 0; k < kSpace.n_cavity; ++k) expected += k;
        expected *= kSpace.dim() / double(kSpace.n_cavity);
        CHECK_THAT(l.n_a.trace().real(), Catch::Matchers::WithinAbs(expected, 1e-9));
    }

    SECTION("dimension mismatch throws") {
        CHECK_THROWS_AS(embed(Matrix::Identity(3, 3), Subsystem::Cavity, kSpace),
                        std::invalid_argument);
    }
}

TEST_CASE("matrix exponential") {
    SECTION("expm(0) = I") {
        CHECK((expm(Matrix(Matrix::Zero(6, 6))) - Matrix::Identity(6, 6)).cwiseAbs().maxCoeff() <
              1e-15);
    }

    SECTION("expm(i pi sz) = -I on the qubit") {
        Matrix sz(2, 2);
        sz << 1, 0, 0, -1;
        const Matrix e = expm(Matrix(IM * M_PI * sz));
        CHECK((e + Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);
    }

    SECTION("rotation closed form") {
        Matrix sy(2, 2);
        sy << 0, -IM, IM, 0;
        const double theta = 0.7;
        const Matrix rot = expm(Matrix(-IM * theta * sy));
        const Matrix closed = std::cos(theta) * Matrix::Identity(2, 2) - IM * std::sin(theta) * sy;
        CHECK((rot - closed).cwiseAbs().maxCoeff() < 1e-14);
    }

    SECTION("skew-Hermitian input gives a unitary result") {
        Rng rng(7);
        std::normal_distribution<double> gauss;
        for (int trial = 0; trial < 5; ++trial) {
            Matrix h(12, 12);
            for (int i = 0; i < 12; ++i)
                for (int j = 0; j < 12; ++j) h(i, j) = Complex(gauss(rng), gauss(rng));
            h = 0.5 * (h + h.adjoint()).eval();
            const Matrix u = expm(Matrix(-IM * h));
            CHECK((u * u.adjoint() - Matrix::Identity(12, 12)).cwiseAbs().maxCoeff() < 1e-10);
        }
    }

    SECTION("non-finite input is rejected") {
        Matrix bad = Matrix::Zero(2, 2);
        bad(0, 0) = std::numeric_limits<double>::infinity();
        CHECK_THROWS_AS(expm(bad), std::invalid_argument);
    }
}

TEST_CASE("generalized Laguerre polynomials") {
    CHECK(laguerre(0, 3, 2.5) == 1.0);
    CHECK_THAT(laguerre(1, 0, 2.0), Catch::Matchers::WithinAbs(-1.0, 1e-14));
    CHECK_THAT(laguerre(2, 1, 1.0), Catch::Matchers::WithinAbs(0.5, 1e-14));
    CHECK_THROWS_AS(laguerre(-1, 0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(laguerre(2, -1, 1.0), std::invalid_argument);

    SECTION("recurrence agrees with the exact explicit series") {
        const std::vector<std::pair<double, Rational>> grid = {
            {0.0, Rational(0)},       {0.25, Rational(1, 4)}, {1.75, Rational(7, 4)},
            {5.0, Rational(5)},       {10.0, Rational(10)}};
        for (int n = 0; n <= 30; n += 3) {
            for (int s = 0; s <= 6; s += 2) {
                for (const auto& [x, xr] : grid) {
                    const double ref = laguerre_series(n, s, xr);
                    const double got = laguerre(n, s, x);
                    const double scale = std::max(1.0, std::abs(ref));
                    CHECK(std::abs(got - ref) / scale < 1e-10);
                }
            }
        }
    }
}

TEST_CASE("displacement operators") {
    SECTION("D(0) = I in both methods") {
        for (auto method : {DisplacementMethod::Expm, DisplacementMethod::Laguerre}) {
            const Matrix d = displacement_matrix(16, 0.0, method);
            CHECK((d - Matrix::Identity(16, 16)).cwiseAbs().maxCoeff() < 1e-14);
        }
    }

    SECTION("vacuum matrix element") {
        const Matrix d = displacement_matrix_laguerre(24, 1.0);
        CHECK_THAT(d(0, 0).real(), Catch::Matchers::WithinAbs(0.60653066, 1e-8));
    }

    SECTION("the two construction routes agree on the buffered interior") {
        const int dim = 24, buffer = 4;
        for (Complex alpha : {Complex(0.3, 0.0), Complex(1.0, 0.0), Complex(0.7, -1.1),
                              Complex(0.0, 2.0)}) {
            const Matrix de = displacement_matrix_expm(dim, alpha, kAutoPad);
            const Matrix dl = displacement_matrix_laguerre(dim, alpha);
            double dev = 0.0;
            for (int m = 0; m < dim - buffer; ++m)
                for (int n = 0; n < dim - buffer; ++n)
                    dev = std::max(dev, std::abs(de(m, n) - dl(m, n)));
            CHECK(dev < 1e-9);
        }
    }

    SECTION("unitarity of the bare truncated exponential: D(a) D(-a) = I") {
        const int dim = 24, buffer = 4;
        const Complex alpha(1.3, 0.9); // |alpha| < 2
        const Matrix prod = displacement_matrix_expm(dim, alpha, kUnitary) *
                            displacement_matrix_expm(dim, -alpha, kUnitary);
        double dev = 0.0;
        for (int m = 0; m < dim - buffer; ++m)
            for (int n = 0; n < dim - buffer; ++n)
                dev = std::max(dev, std::abs(prod(m, n) - (m == n ? 1.0 : 0.0)));
        CHECK(dev < 1e-9);
    }

    SECTION("conditioned displacement is block diagonal in photon number") {
        const Complex xi(0.1, 0.0);
        const double offset = 0.5;
        const OperatorMatrix d = displacement_conditioned(kSpace, xi, offset);
        const Matrix block2 =
            d.m.block(2 * kSpace.n_mech, 2 * kSpace.n_mech, kSpace.n_mech, kSpace.n_mech);
        const Matrix expected = displacement_matrix_expm(kSpace.n_mech, xi * (2.0 - offset));
        CHECK((block2 - expected).cwiseAbs().maxCoeff() < 1e-13);

        // photon block 0 at offset 0 is the identity
        const OperatorMatrix d0 = displacement_conditioned(kSpace, xi, 0.0);
        const Matrix block0 = d0.m.block(0, 0, kSpace.n_mech, kSpace.n_mech);
        CHECK((block0 - Matrix::Identity(kSpace.n_mech, kSpace.n_mech)).cwiseAbs().maxCoeff() <
              1e-14);

        CHECK((displacement_conditioned(kSpace, 0.0, 0.25) - identity_op(kSpace)).max_abs() <
              1e-14);
    }
}

TEST_CASE("susskind-glogower operators") {
    const auto sg = susskind_glogower(kSpace);
    const auto l = ladder_operators(kSpace);
    const int top = kSpace.n_cavity - 1;

    SECTION("V Vdag = 1 - |top><top|") {
        const OperatorMatrix expected =
            identity_op(kSpace) -
            embed(fock_projector_matrix(kSpace.n_cavity, top), Subsystem::Cavity, kSpace);
        CHECK((sg.V * sg.Vdag - expected).max_abs() < 1e-14);
    }

    SECTION("Vdag V = 1 - |0><0|") {
        const OperatorMatrix expected =
            identity_op(kSpace) -
            embed(fock_projector_matrix(kSpace.n_cavity, 0), Subsystem::Cavity, kSpace);
        CHECK((sg.Vdag * sg.V - expected).max_abs() < 1e-14);
    }

    SECTION("sqrt(n_a) Vdag = adag") {
        const OperatorMatrix sqrt_n = embed(
            diagonal_of_number(kSpace.n_cavity, [](int n) { return std::sqrt(double(n)); }),
            Subsystem::Cavity, kSpace);
        CHECK((sqrt_n * sg.Vdag - l.adag).max_abs() < 1e-12);
    }
}

TEST_CASE("standard states") {
    SECTION("thermal weights and normalization") {
        const Matrix rho = thermal_density_matrix(24, 1.0);
        CHECK_THAT(rho.trace().real(), Catch::Matchers::WithinAbs(1.0, 1e-14));
        // geometric weights 1/2, 1/4, 1/8 before renormalization; ratios survive
        CHECK_THAT((rho(1, 1) / rho(0, 0)).real(), Catch::Matchers::WithinAbs(0.5, 1e-12));
        CHECK_THAT((rho(2, 2) / rho(1, 1)).real(), Catch::Matchers::WithinAbs(0.5, 1e-12));
        for (int k = 0; k < 24; ++k) CHECK(rho(k, k).real() >= 0.0);

        const Matrix zero_temp = thermal_density_matrix(8, 0.0);
        CHECK_THAT(zero_temp(0, 0).real(), Catch::Matchers::WithinAbs(1.0, 1e-14));
    }

    SECTION("coherent state mean occupation") {
        const HilbertSpace big(false, 24, 24);
        const auto l = ladder_operators(big);
        for (double alpha : {0.8, 1.5, std::sqrt(6.0)}) {
            const QuantumState st = coherent_state(big, alpha, Subsystem::Cavity);
            st.validate();
            const Vector psi = st.as_ket();
            const double mean = (psi.adjoint() * l.n_a.m * psi)(0).real();
            CHECK_THAT(mean, Catch::Matchers::WithinAbs(alpha * alpha, 1e-6));
        }
    }

    SECTION("fock state bounds are enforced") {
        CHECK_THROWS_AS(fock_state(kSpace, 8, 0), std::out_of_range);
        CHECK_THROWS_AS(fock_state(kSpace, 0, 24), std::out_of_range);
    }

    SECTION("state invariants are validated") {
        QuantumState bad = fock_state(kSpace, 0, 0);
        bad.data(0) = 2.0;
        CHECK_THROWS_AS(bad.validate(), std::runtime_error);
    }
}
