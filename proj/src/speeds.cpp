#include "ordspeed/speeds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ordspeed {

BigInt fib(int n, int k) {
    if (k < 1) throw InputError("Fibonacci order must be >= 1");
    if (n < 0) return 0;
    std::vector<BigInt> f(static_cast<size_t>(n + 1));
    f[0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= k && j <= i; ++j) f[static_cast<size_t>(i)] += f[static_cast<size_t>(i - j)];
    // F_{i,k} for 1 <= i <= k sums i terms plus the implicit F_0 only once;
    // the loop above realizes exactly F_{i,k} = F_{i-1,k} + ... + F_{i-k,k}
    // with F_{<0} = 0.
    return f[static_cast<size_t>(n)];
}

Recurrence::Recurrence(std::vector<BigInt> a) : coeffs(std::move(a)) {
    if (coeffs.empty()) throw InputError("recurrence needs at least one coefficient");
    for (const BigInt& c : coeffs)
        if (c < 0) throw InputError("recurrence coefficients must be nonnegative");
    if (coeffs.back() < 1) throw InputError("leading recurrence coefficient a(k) must be >= 1");
}

BigInt recurrence_eval(const Recurrence& r, int n) {
    if (n < 0) return 0;
    int k = static_cast<int>(r.coeffs.size()) - 1;
    std::vector<BigInt> t(static_cast<size_t>(n + 1));
    t[0] = 1;
    for (int m = 1; m <= n; ++m) {
        // T_m = sum_{t=0}^k a(k-t) T_{m-1-t}
        BigInt acc = 0;
        for (int d = 0; d <= k && d <= m - 1; ++d)
            acc += r.coeffs[static_cast<size_t>(k - d)] * t[static_cast<size_t>(m - 1 - d)];
        t[static_cast<size_t>(m)] = acc;
    }
    return t[static_cast<size_t>(n)];
}

double growth_root(const std::vector<BigInt>& coeffs, double tol) {
    if (coeffs.empty()) throw InputError("growth_root needs coefficients");
    double total = 0;
    for (const BigInt& c : coeffs) {
        if (c < 0) throw InputError("growth_root coefficients must be nonnegative");
        total += c.convert_to<double>();
    }
    if (total == 0) throw InputError("growth_root requires a positive coefficient");
    int k = static_cast<int>(coeffs.size()) - 1;
    auto f = [&](double x) {
        // x^{k+1} - sum a(i) x^i, Horner on the subtracted polynomial
        double p = 0;
        for (int i = k; i >= 0; --i) p = p * x + coeffs[static_cast<size_t>(i)].convert_to<double>();
        return std::pow(x, k + 1) - p;
    };
    double lo = 1.0, hi = 1.0 + total;
    if (f(lo) >= 0) return lo;  // root at or below 1 only when sum a(i) <= 1
    while (hi - lo > tol) {
        double mid = lo + (hi - lo) / 2;
        if (mid == lo || mid == hi) break;
        (f(mid) < 0 ? lo : hi) = mid;
    }
    return lo + (hi - lo) / 2;
}

std::optional<PolynomialFit> fit_polynomial(const SpeedSequence& seq) {
    // Work on the exact prefix (entries are n = 1, 2, ...).
    std::vector<BigInt> vals;
    for (size_t i = 0; i < seq.counts.size(); ++i) {
        if (!seq.exact[i]) break;
        vals.push_back(seq.counts[i]);
    }
    int len = static_cast<int>(vals.size());
    for (int K = 0; K <= len / 2; ++K) {
        if (len < K + 3) break;  // need K+3 exact tail entries
        // (K+1)-st differences over the tail
        std::vector<BigInt> diff = vals;
        for (int d = 0; d < K + 1; ++d)
            for (int i = static_cast<int>(diff.size()) - 1; i >= 1; --i)
                diff[static_cast<size_t>(i)] -= diff[static_cast<size_t>(i - 1)];
        // diff[i] for i >= K+1 is the (K+1)-st difference at n = i+1
        int zero_run = 0;
        for (int i = len - 1; i >= K + 1 && diff[static_cast<size_t>(i)] == 0; --i) ++zero_run;
        if (zero_run < 3) continue;

        // The polynomial is pinned by the last K+1 values; extend the
        // difference table back to n = 0 and read a_i = Delta^i f(0).
        std::vector<BigInt> table(vals.end() - (K + 1), vals.end());  // f(n0..n0+K)
        int n0 = len - K;                                             // value of n at table[0]
        // successive difference rows at the left edge
        std::vector<BigInt> left(static_cast<size_t>(K + 1));  // Delta^d f(n0)
        {
            std::vector<BigInt> row = table;
            for (int d = 0; d <= K; ++d) {
                left[static_cast<size_t>(d)] = row[0];
                for (size_t i = 0; i + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
                row.pop_back();
            }
        }
        // step the base point from n0 down to 0: Delta^d f(m-1) =
        // Delta^d f(m) - Delta^{d+1} f(m-1), computed top-down with
        // Delta^{K+1} = 0
        for (int m = n0; m >= 1; --m)
            for (int d = K - 1; d >= 0; --d)
                left[static_cast<size_t>(d)] -= left[static_cast<size_t>(d + 1)];
        PolynomialFit fit;
        fit.coeffs = left;  // f(n) = sum Delta^i f(0) C(n, i)
        // onset: smallest n >= 1 from which every entry matches
        auto eval = [&](int n) {
            BigInt acc = 0, binom = 1;
            for (int i = 0; i <= K; ++i) {
                acc += fit.coeffs[static_cast<size_t>(i)] * binom;
                binom = binom * (n - i) / (i + 1);
            }
            return acc;
        };
        int onset = len + 1;
        for (int n = len; n >= 1; --n) {
            if (eval(n) != vals[static_cast<size_t>(n - 1)]) break;
            onset = n;
        }
        if (onset > len - 2) continue;  // fit must cover the last >= 3 entries
        fit.onset = onset;
        // drop trailing zero coefficients (K was the difference order, the
        // true degree may be lower)
        while (fit.coeffs.size() > 1 && fit.coeffs.back() == 0) fit.coeffs.pop_back();
        return fit;
    }
    return std::nullopt;
}

std::string regime_case_name(RegimeCase c) {
    switch (c) {
        case RegimeCase::A_constant: return "A_constant";
        case RegimeCase::B_polynomial: return "B_polynomial";
        case RegimeCase::C_fibonacci: return "C_fibonacci";
        case RegimeCase::D_exponential: return "D_exponential";
        case RegimeCase::Inconclusive: return "inconclusive";
    }
    return "?";
}

RegimeClassification classify_regime(const SpeedSequence& seq, const ClassifyOptions& opts) {
    std::vector<BigInt> vals;
    for (size_t i = 0; i < seq.counts.size(); ++i) {
        if (!seq.exact[i]) break;
        vals.push_back(seq.counts[i]);
    }
    int len = static_cast<int>(vals.size());
    if (len < 6) throw InputError("classify_regime needs at least 6 exact entries");

    RegimeClassification out;
    std::ostringstream diag;
    diag << "heuristic classification over n = 1.." << len
         << "; finite data reports evidence, not proof.";

    // (a) constant tail
    int tail = (len + 2) / 3;
    bool constant = true;
    for (int i = len - tail; i < len && constant; ++i)
        constant = vals[static_cast<size_t>(i)] == vals[static_cast<size_t>(len - 1)];
    if (constant) {
        out.regime = RegimeCase::A_constant;
        out.constant_m = vals[static_cast<size_t>(len - 1)];
        diag << " (a): last " << tail << " entries constant.";
        out.diagnostics = diag.str();
        return out;
    }
    diag << " (a) rejected: tail not constant.";

    // (b) exact polynomial tail
    if (auto fit = fit_polynomial(seq)) {
        out.regime = RegimeCase::B_polynomial;
        diag << " (b): degree-" << fit->coeffs.size() - 1 << " binomial fit from n = " << fit->onset
             << ".";
        out.poly = std::move(fit);
        out.diagnostics = diag.str();
        return out;
    }
    diag << " (b) rejected: no vanishing finite differences.";

    // (c) F_{n,k} <= |P_n| with polynomially bounded ratio. Candidate order:
    // the k whose growth root best matches the empirical tail ratio first
    // (case (c) forces (|P_n|)^{1/n} -> root of F_{n,k}), then the rest
    // ascending.
    std::vector<int> candidates;
    {
        double emp = vals[static_cast<size_t>(len - 1)].convert_to<double>() /
                     vals[static_cast<size_t>(len - 2)].convert_to<double>();
        // tolerance below the spacing of consecutive roots up to order 8
        int best_k = 0;
        for (int k = 2; k <= opts.max_fib_order; ++k) {
            double root = growth_root(std::vector<BigInt>(static_cast<size_t>(k), BigInt(1)));
            if (root <= emp * 1.01) best_k = k;
        }
        if (best_k != 0) candidates.push_back(best_k);
        for (int k = 2; k <= opts.max_fib_order; ++k)
            if (k != best_k) candidates.push_back(k);
    }
    for (int k : candidates) {
        bool lower_ok = true;
        for (int n = 1; n <= len && lower_ok; ++n)
            lower_ok = fib(n, k) <= vals[static_cast<size_t>(n - 1)];
        if (!lower_ok) continue;
        // ratio r_n = |P_n| / F_{n,k} over the tail half; accept the smallest
        // degree d <= cap for which r_n / n^d stays non-increasing up to 5%
        int half = std::max(1, len / 2);
        std::vector<double> ratio;
        for (int n = half; n <= len; ++n)
            ratio.push_back(vals[static_cast<size_t>(n - 1)].convert_to<double>() /
                            fib(n, k).convert_to<double>());
        for (int d = 0; d <= opts.max_ratio_degree; ++d) {
            bool bounded = true;
            for (size_t i = 1; i < ratio.size() && bounded; ++i) {
                double n_prev = static_cast<double>(half + static_cast<int>(i) - 1);
                double n_cur = n_prev + 1;
                double g_prev = ratio[i - 1] / std::pow(n_prev, d);
                double g_cur = ratio[i] / std::pow(n_cur, d);
                bounded = g_cur <= g_prev * 1.05;
            }
            if (bounded) {
                out.regime = RegimeCase::C_fibonacci;
                out.fib_order = k;
                out.ratio_degree = d;
                diag << " (c): F_{n," << k << "} <= |P_n| everywhere; ratio bounded at degree " << d
                     << ".";
                out.diagnostics = diag.str();
                return out;
            }
        }
        diag << " (c) k=" << k << " rejected: ratio grows super-polynomially.";
    }
    diag << " (c) rejected.";

    // (d) |P_n| >= 2^{n-1} throughout
    bool exponential = true;
    for (int n = 1; n <= len && exponential; ++n)
        exponential = vals[static_cast<size_t>(n - 1)] >= (BigInt(1) << (n - 1));
    if (exponential) {
        out.regime = RegimeCase::D_exponential;
        out.evidence_window = {1, len};
        diag << " (d): |P_n| >= 2^{n-1} for all computed n.";
        out.diagnostics = diag.str();
        return out;
    }
    diag << " (d) rejected. inconclusive.";
    out.diagnostics = diag.str();
    return out;
}

GrowthReport empirical_growth(const SpeedSequence& seq) {
    int len = static_cast<int>(seq.counts.size());
    if (len == 0) throw InputError("empty speed sequence");
    for (const BigInt& c : seq.counts)
        if (c <= 0) throw InputError("growth estimates need positive entries");
    GrowthReport out;
    int start = std::max(1, len / 2);
    for (int n = start; n <= len; ++n)
        out.nth_roots.push_back(
            std::pow(seq.counts[static_cast<size_t>(n - 1)].convert_to<double>(), 1.0 / n));
    for (int n = start; n < len; ++n)
        out.ratios.push_back(seq.counts[static_cast<size_t>(n)].convert_to<double>() /
                             seq.counts[static_cast<size_t>(n - 1)].convert_to<double>());
    if (!out.ratios.empty()) {
        size_t take = std::min<size_t>(3, out.ratios.size());
        double acc = 0;
        for (size_t i = out.ratios.size() - take; i < out.ratios.size(); ++i) acc += out.ratios[i];
        out.fitted_root = acc / static_cast<double>(take);
    }
    return out;
}

}  // namespace ordspeed
