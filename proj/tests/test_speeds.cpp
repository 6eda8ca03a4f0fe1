#include <doctest.h>

#include <cmath>
#include <random>

#include "ordspeed/speeds.hpp"

using namespace ordspeed;

namespace {
SpeedSequence exact_seq(std::vector<BigInt> counts) {
    SpeedSequence s;
    s.exact.assign(counts.size(), true);
    s.counts = std::move(counts);
    return s;
}

BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}
}  // namespace

TEST_CASE("generalized Fibonacci numbers") {
    CHECK(fib(0, 2) == 1);
    CHECK(fib(-3, 2) == 0);
    CHECK(fib(5, 2) == 8);
    CHECK(fib(3, 3) == 4);
    CHECK(fib(1, 1) == 1);
    CHECK_THROWS_AS(fib(3, 0), InputError);

    // F_{n,k} = 2^{n-1} whenever k >= n (F_{n,l+1} = 2^{n-1} for l >= n-1)
    for (int n = 1; n <= 20; ++n) {
        for (int k = n; k <= 21; ++k) CHECK(fib(n, k) == BigInt(1) << (n - 1));
        if (n >= 3) CHECK(fib(n, n - 1) < BigInt(1) << (n - 1));  // boundary is sharp
    }

    // supermultiplicativity F_{m+n,l} >= F_{m,l} F_{n,l}
    for (int ell = 1; ell <= 6; ++ell)
        for (int m = 1; m <= 20; ++m)
            for (int n = 1; n <= 20; ++n) CHECK(fib(m + n, ell) >= fib(m, ell) * fib(n, ell));
}

TEST_CASE("recurrence evaluation") {
    Recurrence fib2({BigInt(1), BigInt(1)});
    CHECK(recurrence_eval(fib2, 5) == 8);
    CHECK(recurrence_eval(fib2, 0) == 1);
    CHECK(recurrence_eval(fib2, -2) == 0);

    Recurrence conj({BigInt(1), BigInt(2), BigInt(1), BigInt(1), BigInt(1)});
    CHECK(recurrence_eval(conj, 6) == 36);  // 1,1,2,4,9,18,36
    std::vector<BigInt> expect{1, 1, 2, 4, 9, 18, 36};
    for (int n = 0; n <= 6; ++n) CHECK(recurrence_eval(conj, n) == expect[static_cast<size_t>(n)]);

    // all-ones coefficients of length k reproduce fib(n, k)
    for (int k = 1; k <= 6; ++k) {
        Recurrence r(std::vector<BigInt>(static_cast<size_t>(k), BigInt(1)));
        for (int n = 0; n <= 30; ++n) CHECK(recurrence_eval(r, n) == fib(n, k));
    }
    CHECK_THROWS_AS(Recurrence({BigInt(1), BigInt(0)}), InputError);
    CHECK_THROWS_AS(Recurrence(std::vector<BigInt>{}), InputError);
}

TEST_CASE("growth roots") {
    CHECK(growth_root({BigInt(1), BigInt(1)}) ==
          doctest::Approx(1.618033988749895).epsilon(1e-12));
    CHECK(growth_root({BigInt(1), BigInt(1), BigInt(1)}) ==
          doctest::Approx(1.839286755).epsilon(1e-9));
    double conj = growth_root({BigInt(1), BigInt(2), BigInt(1), BigInt(1), BigInt(1)});
    CHECK(conj > 2.02);
    CHECK(conj < 2.04);
    CHECK(growth_root({BigInt(1)}) == doctest::Approx(1.0));
    CHECK(growth_root({BigInt(2)}) == doctest::Approx(2.0).epsilon(1e-11));
    CHECK_THROWS_AS(growth_root({BigInt(0), BigInt(0)}), InputError);

    // residual bound: |rho^{k+1} - sum a_i rho^i| <= 1e-9 rho^{k+1}
    std::mt19937 rng(51);
    for (int trial = 0; trial < 40; ++trial) {
        int k = trial % 8;
        std::vector<BigInt> a(static_cast<size_t>(k + 1));
        for (auto& c : a) c = rng() % 4;
        a[static_cast<size_t>(k)] = 1 + rng() % 3;
        double rho = growth_root(a);
        double lhs = std::pow(rho, k + 1), rhs = 0;
        for (int i = 0; i <= k; ++i)
            rhs += a[static_cast<size_t>(i)].convert_to<double>() * std::pow(rho, i);
        CHECK(std::abs(lhs - rhs) <= 1e-9 * lhs);
    }
}

TEST_CASE("root families accumulate monotonically") {
    double prev_ones = 0, prev_twos = 0;
    for (int len = 1; len <= 12; ++len) {
        double r1 = growth_root(std::vector<BigInt>(static_cast<size_t>(len), BigInt(1)));
        double r2 = growth_root(std::vector<BigInt>(static_cast<size_t>(len), BigInt(2)));
        CHECK(r1 > prev_ones);
        CHECK(r2 > prev_twos);
        CHECK(r1 < 2.0);
        CHECK(r2 < 3.0);
        prev_ones = r1;
        prev_twos = r2;
    }
    CHECK(prev_ones > 1.9995);
}

TEST_CASE("fit_polynomial") {
    {
        auto fit = fit_polynomial(exact_seq({1, 2, 3, 4, 5, 6, 7}));
        REQUIRE(fit.has_value());
        CHECK(fit->coeffs == std::vector<BigInt>{0, 1});
        CHECK(fit->onset == 1);
    }
    {
        auto fit = fit_polynomial(exact_seq({1, 1, 1, 1, 1}));
        REQUIRE(fit.has_value());
        CHECK(fit->coeffs == std::vector<BigInt>{1});
        CHECK(fit->onset == 1);
    }
    {
        // sum_{i<=2} C(n-i, i) = C(n,2) - C(n,1) + 3 C(n,0) for n >= 2
        auto fit = fit_polynomial(exact_seq({1, 2, 3, 5, 8, 12, 17, 23, 30, 38}));
        REQUIRE(fit.has_value());
        CHECK(fit->coeffs == std::vector<BigInt>{3, -1, 1});
        CHECK(fit->onset == 2);
    }
    CHECK_FALSE(fit_polynomial(exact_seq({1, 2, 4, 8, 16, 32, 64, 128})).has_value());
    CHECK_FALSE(fit_polynomial(exact_seq({1, 2, 3})).has_value());  // too short for K >= 1

    // recovery of random integer binomial coefficients, negatives included
    std::mt19937 rng(52);
    for (int trial = 0; trial < 50; ++trial) {
        int K = trial % 4;
        std::vector<BigInt> coeffs(static_cast<size_t>(K + 1));
        for (auto& c : coeffs) c = static_cast<int>(rng() % 9) - 4;
        if (coeffs.back() == 0) coeffs.back() = 1;
        int len = K + 4 + static_cast<int>(rng() % 5);
        std::vector<BigInt> vals;
        bool positive_tail = true;
        for (int n = 1; n <= len; ++n) {
            BigInt acc = 0, binom = 1;
            for (int i = 0; i <= K; ++i) {
                acc += coeffs[static_cast<size_t>(i)] * binom;
                binom = binom * (n - i) / (i + 1);
            }
            vals.push_back(acc);
        }
        (void)positive_tail;
        auto fit = fit_polynomial(exact_seq(vals));
        REQUIRE(fit.has_value());
        CHECK(fit->coeffs == coeffs);
        CHECK(fit->onset == 1);
    }

    // inexact tail entries are ignored
    SpeedSequence part = exact_seq({1, 2, 3, 4, 5, 6, 7, 999});
    part.exact.back() = false;
    auto fit = fit_polynomial(part);
    REQUIRE(fit.has_value());
    CHECK(fit->coeffs == std::vector<BigInt>{0, 1});
}

TEST_CASE("classify_regime ladder") {
    {
        RegimeClassification r = classify_regime(exact_seq({1, 1, 1, 1, 1, 1}));
        CHECK(r.regime == RegimeCase::A_constant);
        CHECK(*r.constant_m == 1);
    }
    {
        std::vector<BigInt> f;
        for (int n = 1; n <= 20; ++n) f.push_back(fib(n, 2));
        RegimeClassification r = classify_regime(exact_seq(f));
        CHECK(r.regime == RegimeCase::C_fibonacci);
        CHECK(*r.fib_order == 2);
    }
    {
        std::vector<BigInt> f;
        for (int n = 1; n <= 12; ++n) f.push_back(factorial(n));
        RegimeClassification r = classify_regime(exact_seq(f));
        CHECK(r.regime == RegimeCase::D_exponential);
    }
    {
        RegimeClassification r = classify_regime(exact_seq({1, 2, 3, 5, 8, 12, 17, 23, 30, 38}));
        CHECK(r.regime == RegimeCase::B_polynomial);
        REQUIRE(r.poly.has_value());
        CHECK(r.poly->coeffs == std::vector<BigInt>{3, -1, 1});
    }
    {
        // neither constant, polynomial, Fibonacci-dominated, nor exponential
        RegimeClassification r = classify_regime(exact_seq({1, 1, 2, 2, 3, 3, 4, 4}));
        CHECK(r.regime == RegimeCase::Inconclusive);
    }
    {
        // exact F_{n,3} data recovers k = 3, not the k = 2 whose ratio grows
        // too slowly to reject over this window
        std::vector<BigInt> f;
        for (int n = 1; n <= 20; ++n) f.push_back(fib(n, 3));
        RegimeClassification r = classify_regime(exact_seq(f));
        CHECK(r.regime == RegimeCase::C_fibonacci);
        CHECK(*r.fib_order == 3);
    }
    {
        // a constant polynomial factor keeps the order recoverable
        std::vector<BigInt> f;
        for (int n = 1; n <= 20; ++n) f.push_back(BigInt(5) * fib(n, 4));
        RegimeClassification r = classify_regime(exact_seq(f));
        CHECK(r.regime == RegimeCase::C_fibonacci);
        CHECK(*r.fib_order == 4);
        CHECK(*r.ratio_degree == 0);
    }
    CHECK_THROWS_AS(classify_regime(exact_seq({1, 2, 3})), InputError);
    // diagnostics always explain the decision
    CHECK_FALSE(classify_regime(exact_seq({1, 1, 1, 1, 1, 1})).diagnostics.empty());
}

TEST_CASE("empirical growth") {
    {
        std::vector<BigInt> f;
        for (int n = 1; n <= 20; ++n) f.push_back(fib(n, 2));
        GrowthReport r = empirical_growth(exact_seq(f));
        REQUIRE(r.fitted_root.has_value());
        CHECK(std::abs(*r.fitted_root - 1.6180) < 1e-3);
        CHECK(std::abs(r.ratios.back() - 1.6180) < 1e-3);
    }
    {
        GrowthReport r = empirical_growth(exact_seq({3, 3, 3, 3, 3, 3, 3, 3}));
        CHECK(*r.fitted_root == doctest::Approx(1.0));
        CHECK(r.nth_roots.back() < 1.2);
    }
    {
        std::vector<BigInt> p;
        for (int n = 1; n <= 12; ++n) p.push_back(BigInt(1) << (n - 1));
        GrowthReport r = empirical_growth(exact_seq(p));
        for (double ratio : r.ratios) CHECK(ratio == doctest::Approx(2.0));
    }
    CHECK_THROWS_AS(empirical_growth(exact_seq({1, 0, 1})), InputError);
}
