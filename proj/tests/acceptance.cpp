// End-to-end acceptance gates. Each gate prints one [PASS]/[FAIL] line with
// its pinned tolerance; the exit code is nonzero if any gate fails. Budgeted
// to run in well under five minutes on a laptop-class machine.

#include "horomean/census.hpp"
#include "horomean/chi.hpp"
#include "horomean/cli.hpp"
#include "horomean/mean.hpp"
#include "horomean/modmath.hpp"
#include "horomean/series.hpp"
#include "horomean/theorem1.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

using namespace horomean;

namespace {

int failures = 0;

void gate(int idx, const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("[%s] %2d %s%s%s\n", ok ? "PASS" : "FAIL", idx, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::string num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

// order of q mod p by bare repeated multiplication, the independent oracle
u64 slow_order(u64 q, u64 p) {
    u64 acc = q % p, f = 1;
    while (acc != 1) {
        acc = acc * (q % p) % p;
        ++f;
    }
    return f;
}

// ---- gates -------------------------------------------------------------

void c1_orders() {
    bool ok = true;
    u64 checked = 0;
    std::vector<u64> primes = sieve_primes(10000);
    for (u64 q : {2, 3, 5, 7}) {
        for (u64 p : primes) {
            if (p == q) continue;
            if (multiplicative_order(q, p) != slow_order(q, p)) {
                ok = false;
                break;
            }
            ++checked;
        }
    }
    gate(1, "multiplicative orders equal the repeated-multiplication oracle, q in {2,3,5,7}, p <= 10^4",
         ok, std::to_string(checked) + " pairs, exact");
}

void c2_bound(const PrimeTable& T2) {
    ChiFunction chi0 = ChiFunction::chi0(T2);

    std::vector<u64> ns;
    for (u64 n = 2; n <= 2000; ++n) ns.push_back(n);
    ns.push_back(1000);
    ns.push_back(10000);

    bool ok = true;
    for (const auto& r : verify_bound(chi0, ns)) ok = ok && r.holds;
    for (const auto& r : verify_bound(ChiFunction::psi(T2), {10, 100, 1000})) ok = ok && r.holds;
    for (const auto& r : verify_bound(ChiFunction::varpi(T2), {10, 100, 1000}, true))
        ok = ok && r.holds;

    double b3 = theorem1_bound(order_primes(chi0, 3)).value;
    double b2 = theorem1_bound(order_primes(chi0, 2)).value;
    ok = ok && std::abs(b3 - 4.0 / 3) <= 1e-12 && std::abs(b2) <= 1e-12;

    gate(2, "mean-value bound holds at n in {2..2000, 10^3, 10^4} and for the psi/varpi variants",
         ok, "spot values bound(3)=" + num(b3) + ", bound(2)=" + num(b2));
}

void c3_mean_oracle(const PrimeTable& T2) {
    std::vector<ChiFunction> fams = {
        ChiFunction::chi0(T2),      ChiFunction::psi(T2),
        ChiFunction::varpi(T2),     ChiFunction::psit(T2, 1),
        ChiFunction::psipow(T2, 2),
    };
    bool ok = true;
    double worst = 0.0;
    for (const auto& chi : fams) {
        MeanSeries s = mean_series(chi, 100000);
        for (const auto& cp : s.checkpoints) {
            double err = std::abs(cp.mean - naive_mean(chi, cp.n));
            worst = std::max(worst, err);
            if (err > 1e-9) ok = false;
        }
    }
    gate(3, "sieve means equal trial-division means within 1e-9, five kinds, n <= 10^5", ok,
         "worst |delta| = " + num(worst));
}

void c4_series(const PrimeTable& T2) {
    bool ok = true;
    double worst = 0.0;
    std::vector<ChiFunction> fams = {
        ChiFunction::chi0(T2),
        ChiFunction::psi(T2),
        ChiFunction::varpi(T2),
        ChiFunction::psit(T2, 1),
    };
    for (const auto& chi : fams) {
        SeriesEval e = evaluate_series(chi, 2.0, 100000);
        double err = std::abs(e.euler - e.dirichlet);
        worst = std::max(worst, err);
        if (err > 1e-3) ok = false;
    }
    ChiFunction one = ChiFunction::constant(T2, UnitRotation::one());
    double zeta2 = std::numbers::pi * std::numbers::pi / 6.0;
    double zerr = std::abs(euler_product(one, 2.0, 100000) - std::complex<double>{zeta2, 0.0});
    ok = ok && zerr <= 1e-3;
    gate(4, "Euler product and Dirichlet sum agree within 1e-3 at s=2, X=10^5, plus the zeta(2) anchor",
         ok, "worst pair gap " + num(worst) + ", zeta(2) gap " + num(zerr));
}

void c5_eq2(const PrimeTable& T2, const PrimeTable& T3) {
    bool ok = true;
    double worst = 0.0;
    struct Case { const PrimeTable* T; u64 t; };
    for (const Case& c : {Case{&T2, 1}, Case{&T2, 2}, Case{&T3, 1}}) {
        for (double s : {1.5, 2.0}) {
            Eq2Result r = eq2_identity_check(*c.T, c.t, s, 100000);
            double res = std::abs(r.residual());
            worst = std::max(worst, res);
            if (res > 1e-11) ok = false;
        }
    }
    gate(5, "prime-sum identity residual |rhs - lhs - tail| <= 1e-11 for (q,t) in {(2,1),(2,2),(3,1)}, s in {1.5,2}, X=10^5",
         ok, "worst residual " + num(worst));
}

void c6_density(const PrimeTable& T2) {
    DensityResult d = artin_density(T2, 1, 1000000);
    double a6 = artin_constant(1000000);
    double a5 = artin_constant(100000);
    bool ok = std::abs(d.density - a6) <= 0.01 && std::abs(a6 - a5) <= 1e-6;
    gate(6, "primitive-root density at 10^6 sits within 0.01 of the classical constant (itself 1e-6 stable)",
         ok, "density " + num(d.density) + ", constant " + num(a6) + ", cutoff drift " +
                 num(std::abs(a6 - a5)));
}

void c7_iq(const PrimeTable& T2, const PrimeTable& T3, const PrimeTable& T5) {
    bool ok = true;
    u64 checked = 0;
    for (const PrimeTable* T : {&T2, &T3, &T5}) {
        for (u64 m = 1; m <= 2000; ++m) {
            if (std::gcd(m, T->q()) != 1) continue;
            if (iq_count(*T, m) != cyclotomic_coset_count(T->q(), m)) {
                ok = false;
                break;
            }
            ++checked;
        }
    }
    ok = ok && iq_count(T2, 7) == 3;
    gate(7, "divisor-sum factor counts equal coset orbit counts, m <= 2000, q in {2,3,5}", ok,
         std::to_string(checked) + " cases, exact; i_2(7)=3");
}

// Frozen regression value: |S(10^6) - S(10^5)| for S(x) = sum_{p<=x} (1-varpi(p))/p
// measured 5.2766957505e-05 by direct order-by-order summation, pinned here with
// ~25% headroom.
constexpr double kVarpiDriftCap = 6.6e-5;

void c8_delange(const PrimeTable& T2) {
    DelangeDiag v = delange_diag(ChiFunction::varpi(T2), {100000, 1000000});
    double drift = std::abs(v.partial_sums[1].second - v.partial_sums[0].second);
    bool ok = drift < kVarpiDriftCap;

    DelangeDiag p = delange_diag(ChiFunction::psit(T2, 1), geometric_checkpoints(1000000));
    double prev = 0.0;
    for (const auto& [x, sum] : p.partial_sums) {
        if (sum.imag() != 0.0 || sum.real() < prev) ok = false;
        prev = sum.real();
    }
    gate(8, "convergence diagnostics: varpi tail drift below the frozen cap, psit sums real and nondecreasing",
         ok, "drift " + num(drift) + " vs cap " + num(kVarpiDriftCap));
}

void c9_census(const PrimeTable& T2) {
    bool ok = large_order_census(T2, 10).count == 2 && sk_census(T2, 1, 10).count == 1;
    std::vector<u64> counts(13);
    for (u64 k = 1; k <= 12; ++k) counts[k] = sk_census(T2, k, 10000).count;
    for (u64 k = 1; k <= 12 && ok; ++k)
        for (u64 kk = k; kk <= 12; kk += k)
            if (counts[kk] > counts[k]) ok = false;
    gate(9, "census spot counts (large-order@10 = 2, S_1@10 = 1) and divisibility monotonicity to k=12",
         ok);
}

void c10_reproducibility() {
    std::vector<std::vector<std::string>> cmds = {
        {"table", "--q", "2", "--x", "10000"},
        {"mean", "--chi", "varpi", "--q", "2", "--n", "100000"},
        {"bound", "--chi", "chi0", "--q", "2", "--n", "10,100,1000"},
        {"series", "--chi", "psi", "--q", "2", "--s", "2", "--cutoff", "100000"},
        {"delange", "--chi", "varpi", "--q", "2", "--x", "100000"},
        {"residue", "--chi", "varpi", "--q", "2", "--s", "1.5,1.1", "--cutoff", "100000"},
        {"eq2", "--q", "2", "--t", "1", "--s", "1.5,2", "--cutoff", "100000"},
        {"density", "--q", "2", "--t", "1", "--x", "1000000"},
        {"census", "--q", "2", "--k", "2", "--x", "10000"},
        {"census", "--q", "2", "--x", "10000"},
        {"iq", "--q", "2", "--m", "7"},
    };
    bool ok = true;
    int compared = 0;
    for (auto cmd : cmds) {
        cmd.insert(cmd.begin(), "horomean");
        std::ostringstream o1, e1, o2, e2;
        int r1 = cli::run(cmd, o1, e1);
        int r2 = cli::run(cmd, o2, e2);
        if (r1 != 0 || r2 != 0 || o1.str() != o2.str() || o1.str().empty()) ok = false;
        ++compared;
    }
    gate(10, "every exposed command emits byte-identical output on repeat runs", ok,
         std::to_string(compared) + " commands x 2 runs");
}

} // namespace

int main() {
    std::printf("building shared order tables (q=2 to 10^6, q=3 to 10^5, q=5 to 2000)\n");
    PrimeTable T2 = PrimeTable::build(2, 1000000);
    PrimeTable T3 = PrimeTable::build(3, 100000);
    PrimeTable T5 = PrimeTable::build(5, 2000);

    c1_orders();
    c2_bound(T2);
    c3_mean_oracle(T2);
    c4_series(T2);
    c5_eq2(T2, T3);
    c6_density(T2);
    c7_iq(T2, T3, T5);
    c8_delange(T2);
    c9_census(T2);
    c10_reproducibility();

    std::printf("%d/10 gates passed\n", 10 - failures);
    return failures == 0 ? 0 : 1;
}
