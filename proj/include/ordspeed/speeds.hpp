#ifndef ORDSPEED_SPEEDS_HPP
#define ORDSPEED_SPEEDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "ordspeed/enumeration.hpp"

namespace ordspeed {

// Generalized Fibonacci number of order k: F_{n,k} = 0 for n < 0, F_{0,k} = 1,
// otherwise the sum of the previous k values.
BigInt fib(int n, int k);

// Linear recurrence x^{k+1} = sum a(i) x^i: T_0 = 1, T_{n<0} = 0,
// T_{n+1} = sum_{t=0}^k a(k-t) T_{n-t}.
struct Recurrence {
    std::vector<BigInt> coeffs;  // a(0..k), a(k) >= 1

    explicit Recurrence(std::vector<BigInt> a);
};

BigInt recurrence_eval(const Recurrence& r, int n);

// The unique positive root of x^{k+1} - sum a(i) x^i for nonnegative
// coefficients (not all zero), by bisection to the given absolute tolerance.
double growth_root(const std::vector<BigInt>& coeffs, double tol = 1e-12);

// Polynomial fit in the binomial basis: f(n) = sum a_i C(n, i) for n >= onset.
struct PolynomialFit {
    std::vector<BigInt> coeffs;  // a_0..a_K, integers (possibly negative)
    int onset = 1;               // smallest n from which the fit holds
};

// Finds the smallest K whose (K+1)-st finite differences vanish over the last
// >= 3 entries and reconstructs the integer binomial-basis coefficients by
// extending the difference table back to n = 0. Absence is a value.
std::optional<PolynomialFit> fit_polynomial(const SpeedSequence& seq);

enum class RegimeCase { A_constant, B_polynomial, C_fibonacci, D_exponential, Inconclusive };

std::string regime_case_name(RegimeCase c);

struct RegimeClassification {
    RegimeCase regime = RegimeCase::Inconclusive;
    std::optional<BigInt> constant_m;        // case (a)
    std::optional<PolynomialFit> poly;       // case (b)
    std::optional<int> fib_order;            // case (c): k with F_{n,k} <= |P_n|
    std::optional<int> ratio_degree;         // case (c): degree bounding |P_n|/F_{n,k}
    std::optional<std::pair<int, int>> evidence_window;  // case (d): n-range checked
    std::string diagnostics;
};

struct ClassifyOptions {
    int max_fib_order = 8;     // case-(c) search cap on k
    int max_ratio_degree = 6;  // case-(c) cap on the ratio polynomial degree
};

// Heuristic evidence ladder for the four speed regimes; finite data cannot
// certify an asymptotic case, so the result reports evidence, never proof.
RegimeClassification classify_regime(const SpeedSequence& seq, const ClassifyOptions& opts = {});

struct GrowthReport {
    std::vector<double> nth_roots;  // (|P_n|)^{1/n} over the tail
    std::vector<double> ratios;     // |P_{n+1}| / |P_n| over the tail
    std::optional<double> fitted_root;
};

GrowthReport empirical_growth(const SpeedSequence& seq);

}  // namespace ordspeed

#endif
