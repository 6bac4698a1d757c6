"""Acceptance suite: one test per criterion, one printed PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines as they
complete. The Monte Carlo criteria share module-scoped replication runs; the
whole suite takes a few minutes on a laptop-class machine.
"""
import numpy as np
import pytest

from ecc import (
    DgpConfig,
    bias_experiment,
    chi_curve,
    draw_paired,
    ecc_report,
    extremal_correlation,
    extremal_covariance,
    generate_shared_score,
    hill,
    invert_oracle,
    norms,
    oracle_rho,
    pair_radii,
    power_transform,
    replicate_rho,
    select_k_ks,
    select_k_mindist,
)

THREADS = 2

# reference bias (se) cells for tail index 3, n = 2000, minimum-distance k
TABLE_N2000 = {
    0.0: (0.00, 0.03),
    0.5: (0.00, 0.15),
    -0.5: (0.01, 0.15),
    0.9: (0.03, 0.09),
    -0.9: (0.03, 0.09),
    1.0: (0.01, 0.01),
    -1.0: (0.01, 0.01),
}
# reference bias at target 0.9 for n = 100, 500, 2000
TREND_BIAS = {100: 0.06, 500: 0.04, 2000: 0.03}


def _line(cid: str, ok: bool, detail: str) -> None:
    print(f"ACCEPTANCE {cid}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"{cid}: {detail}"


@pytest.fixture(scope="module")
def run_n2000():
    table = bias_experiment(
        sorted(TABLE_N2000), alpha=3.0, n=2000, reps=1000,
        k_method="mindist", seed=93101, threads=THREADS,
    )
    return {row.rho_xy_target: row for row in table.rows}


@pytest.fixture(scope="module")
def run_trend():
    rows = {}
    for n, seed in ((100, 8211), (500, 8212)):
        table = bias_experiment(
            [0.9], alpha=3.0, n=n, reps=1000, k_method="mindist", seed=seed, threads=THREADS
        )
        rows[n] = table.rows[0]
    return rows


def test_criterion_1_hand_fixture_exactness():
    x = np.array([[3.0], [1.0], [0.5]])
    y = np.array([[3.0], [-1.0], [0.5]])
    sigma = extremal_covariance(x, y, 2)
    rho = extremal_correlation(x, y, 2)
    ok = abs(sigma - 4.0) <= 1e-12 and abs(rho - 0.8) <= 1e-12
    _line("C1 hand-fixture exactness", ok, f"sigma={sigma!r} rho={rho!r}")


def test_criterion_2_oracle_convergence(run_n2000):
    details = []
    ok = True
    for target in sorted(TABLE_N2000):
        pb, pse = TABLE_N2000[target]
        row = run_n2000[target]
        bias_ok = row.bias <= pb + 0.02
        se_ok = 0.5 * pse <= row.se <= 1.5 * pse
        ok &= bias_ok and se_ok
        details.append(
            f"{target:+.1f}: bias={row.bias:.3f}(<= {pb + 0.02:.2f} {'ok' if bias_ok else 'FAIL'}) "
            f"se={row.se:.3f}(in [{0.5 * pse:.3f},{1.5 * pse:.3f}] {'ok' if se_ok else 'FAIL'})"
        )
    _line("C2 oracle convergence vs reference table", ok, "; ".join(details))


def test_criterion_3_consistency_trend(run_n2000, run_trend):
    biases = [run_trend[100].bias, run_trend[500].bias, run_n2000[0.9].bias]
    ok = biases[1] <= biases[0] + 0.01 and biases[2] <= biases[1] + 0.01
    _line(
        "C3 consistency trend (n=100/500/2000)",
        ok,
        f"biases={biases[0]:.3f} -> {biases[1]:.3f} -> {biases[2]:.3f} "
        f"(reference pattern {TREND_BIAS[100]:.2f} -> {TREND_BIAS[500]:.2f} -> {TREND_BIAS[2000]:.2f})",
    )


def test_criterion_4_alpha_sensitivity():
    table = bias_experiment(
        [0.9], alpha=5.0, n=500, reps=1000, k_method="mindist", seed=40411, threads=THREADS
    )
    bias = table.rows[0].bias
    ok = 0.10 <= bias <= 0.24
    _line("C4 alpha=5 bias inflation", ok, f"bias={bias:.3f} in [0.10, 0.24] (reference 0.17)")


def test_criterion_5_bernoulli_oracle():
    cfg = DgpConfig(rho=0.0, alpha=3.0, n=2000, J=100, variant="bernoulli", p_a=0.5, p_b=0.5)
    rho_hats, _, failed = replicate_rho(cfg, reps=500, seed=50511, threads=THREADS)
    mean = float(np.mean(rho_hats))
    ok = abs(mean - 0.5) <= 0.06 and failed == 0
    _line(
        "C5 random-gate oracle sqrt(pA pB)",
        ok,
        f"mean={mean:.3f} target 0.5 +- 0.06 ({len(rho_hats)} reps, {failed} failed)",
    )


def test_criterion_6_property_suite():
    rng = np.random.default_rng(60611)
    checks = []

    # |rho| <= 1 on 10^4 random paired samples
    bound_ok = True
    for _ in range(10_000):
        n = int(rng.integers(2, 9))
        J = int(rng.integers(1, 5))
        x = rng.standard_cauchy((n, J))
        y = rng.standard_cauchy((n, J))
        k = int(rng.integers(1, n + 1))
        if abs(extremal_correlation(x, y, k)) > 1.0:
            bound_ok = False
            break
    checks.append(("rho bound", bound_ok))

    # joint scale invariance to 1e-10
    x = rng.standard_t(3, size=(40, 6))
    y = rng.standard_t(3, size=(40, 6))
    base = ecc_report(x, y, 10)
    scale_ok = True
    for c in (1e-4, 3.7, 1e5):
        rep = ecc_report(c * x, c * y, 10)
        scale_ok &= (
            abs(rep.sigma_xy - base.sigma_xy) <= 1e-10 * abs(base.sigma_xy)
            and abs(rep.rho_xy - base.rho_xy) <= 1e-10
            and abs(rep.gamma_xy - base.gamma_xy) <= 1e-10
            and np.array_equal(rep.exceedance_indices, base.exceedance_indices)
        )
    checks.append(("joint scale invariance", scale_ok))

    # margin swap: exact equality
    swap = ecc_report(y, x, 10)
    checks.append(
        ("margin swap", swap.sigma_xy == base.sigma_xy and swap.rho_xy == base.rho_xy
         and swap.gamma_xy == base.gamma_xy)
    )

    # Hill scale invariance: bitwise for power-of-two scalings, 1e-12 otherwise
    v = (1.0 - rng.random(200)) ** (-1 / 3.0)
    a0 = hill(v, 40).alpha_hat
    hill_ok = hill(1024.0 * v, 40).alpha_hat == a0 and hill(0.125 * v, 40).alpha_hat == a0
    hill_ok &= abs(hill(7.3 * v, 40).alpha_hat - a0) <= 1e-12 * a0
    checks.append(("hill scale invariance", hill_ok))

    # power-transform norm law to 1e-10
    s = rng.normal(size=(60, 8)) * np.exp(rng.normal(size=(60, 1)))
    out = power_transform(s, 2.4, 3.0)
    law = norms(s) ** (2.4 / 3.0)
    checks.append(("transform norm law", bool(np.all(np.abs(norms(out) - law) <= 1e-10 * law))))

    # oracle round trip to 1e-8
    rt_ok = True
    for alpha in (2.3, 3.0, 5.0):
        for target in np.linspace(-1, 1, 81):
            rho = invert_oracle(float(target), alpha)
            rt_ok &= abs(oracle_rho(rho, alpha) - target) <= 1e-8
    checks.append(("oracle round trip", rt_ok))

    ok = all(flag for _, flag in checks)
    _line("C6 property suite", ok, ", ".join(f"{name}={'ok' if f else 'FAIL'}" for name, f in checks))


def test_criterion_7_chi_vs_rho_separation():
    x, y = generate_shared_score(n=1000, alpha=3.0, J=100, seed=70711)
    nx, ny = norms(x), norms(y)
    chi95 = chi_curve(nx, ny, [0.95]).chi[0]
    radii = pair_radii(x, y)
    k = select_k_mindist(radii).k
    rho = extremal_correlation(x, y, k)
    ok = chi95 > 0.5 and abs(rho) < 0.2
    _line(
        "C7 chi vs rho separation (shared heavy score)",
        ok,
        f"chi(0.95)={chi95:.3f} (> 0.5), |rho|={abs(rho):.3f} (< 0.2, k={k})",
    )


def test_criterion_8_phase_shift_attenuation():
    rho = invert_oracle(0.9, 3.0)
    base = DgpConfig(rho=rho, alpha=3.0, n=100, J=100)
    shifted = DgpConfig(rho=rho, alpha=3.0, n=100, J=100, variant="phase", delta=0.3)
    r_base, _, _ = replicate_rho(base, reps=200, seed=80811, threads=THREADS)
    r_shift, _, _ = replicate_rho(shifted, reps=200, seed=80811, threads=THREADS)
    m_base, m_shift = float(np.mean(r_base)), float(np.mean(r_shift))
    ok = m_shift <= m_base + 0.02
    _line(
        "C8 phase-shift attenuation",
        ok,
        f"mean rho shifted={m_shift:.3f} <= unshifted={m_base:.3f} + 0.02 (reference 0.78 vs 0.84)",
    )


def test_criterion_9_k_selection_sanity(run_trend):
    mean_mindist = run_trend[500].mean_k
    ks_ks = []
    for target, seed in ((0.0, 90911), (0.5, 90912), (0.9, 90913)):
        cfg = DgpConfig(rho=invert_oracle(target, 3.0), alpha=3.0, n=500, J=100)
        for s in np.random.SeedSequence(seed).spawn(170):
            x, y = draw_paired(np.random.default_rng(s), cfg)
            ks_ks.append(select_k_ks(pair_radii(x, y)).k)
    mean_ks = float(np.mean(ks_ks))
    ok = 16.0 <= mean_mindist <= 36.0 and 160.0 <= mean_ks <= 390.0
    _line(
        "C9 k-selection sanity",
        ok,
        f"mindist mean k={mean_mindist:.1f} in [16, 36] (reference 26); "
        f"ks mean k={mean_ks:.1f} in [160, 390] (reference 273)",
    )
