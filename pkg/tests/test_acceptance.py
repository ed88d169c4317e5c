"""
Acceptance criteria, one test per criterion.

Each test records a one-line PASS/FAIL verdict that is printed in the
pytest terminal summary. The shared corpus is 1,000 seeded random chart
points for every N in 2..64.
"""

import io
import json
import math
import time

import numpy as np
import pytest

import conftest
import oracles
from cogs import (
    SamplerConfig,
    circle_coords,
    cycle,
    cyclic_trig_sums,
    enumerate_grid,
    extract_phases,
    gram_matrix,
    is_cog_direct,
    is_cog_spectral,
    methods_agree,
    nearest_cog,
    sample_cogs,
    synthesize,
)
from cogs.cli import main as cli_main
from cogs.core import angle_distance
from cogs.synth import complete_phases
from cogs.verify import as_cog

PI = math.pi
EXAMPLE_COG = [2 / 3, 2 / 3, -1 / 3]
CORPUS_NS = range(2, 65)
CORPUS_PER_N = 1000
CORPUS_TOL = 1e-9
CORPUS_TIME_LIMIT_S = 60.0


def record(number, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {detail}"
    conftest.ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


@pytest.fixture(scope="module")
def corpus():
    """Generate and verify the corpus, timing both steps together."""
    start = time.perf_counter()
    items = []
    failures = 0
    for N in CORPUS_NS:
        for cog, params in sample_cogs(SamplerConfig(N, seed=N, branch_policy="random"), CORPUS_PER_N):
            rep = complete_phases(params)
            if not is_cog_direct(cog.vector).is_cog:
                failures += 1
            items.append((params, rep, cog))
    return items, failures, time.perf_counter() - start


@pytest.fixture(scope="module")
def extracted(corpus):
    items, _, _ = corpus
    return [extract_phases(cog) for _, _, cog in items]


def test_criterion_01_three_dim_example_verification():
    direct = is_cog_direct(EXAMPLE_COG)
    spectral = is_cog_spectral(EXAMPLE_COG)
    gram_err = float(np.max(np.abs(gram_matrix(EXAMPLE_COG) - np.eye(3))))
    spec_dev = float(np.max(np.abs(1 - spectral.per_bin_moduli)))
    ok = direct.is_cog and spectral.is_cog and direct.max_deviation <= 1e-12 \
        and spec_dev <= 1e-12 and gram_err <= 1e-12
    record(1, ok, f"(2/3,2/3,-1/3) direct residual {direct.max_deviation:.1e}, "
                  f"spectral deviation {spec_dev:.1e}, gram error {gram_err:.1e} (tol 1e-12)")


def test_criterion_02_three_dim_example_extraction():
    cog = as_cog(EXAMPLE_COG)
    theta = extract_phases(cog).theta
    c1, c2 = circle_coords(cog, 1), circle_coords(cog, 2)
    checks = [
        abs(theta[0] - PI / 4) <= 1e-12,
        abs(theta[1] - 6.021386) <= 1e-5,
        abs(theta[2] - 1.832596) <= 1e-5,
        abs(c1[0] - 0.965926) <= 1e-6 and abs(c1[1] + 0.258819) <= 1e-6,
        abs(c2[0] + 0.258819) <= 1e-6 and abs(c2[1] - 0.965926) <= 1e-6,
    ]
    record(2, all(checks), f"theta = ({theta[0]:.12f}, {theta[1]:.6f}, {theta[2]:.6f}), "
                           f"(C1,S1) = ({c1[0]:.6f}, {c1[1]:.6f}), (C2,S2) = ({c2[0]:.6f}, {c2[1]:.6f})")


def test_criterion_03_synthesis_exhaustion(corpus):
    items, failures, elapsed = corpus
    ok = len(items) == len(CORPUS_NS) * CORPUS_PER_N and failures == 0 and elapsed < CORPUS_TIME_LIMIT_S
    record(3, ok, f"{len(items)} synthesized cogs, {failures} failed direct verification at {CORPUS_TOL:g}, "
                  f"{elapsed:.1f} s (limit {CORPUS_TIME_LIMIT_S:.0f} s)")


def test_criterion_04_round_trip(corpus, extracted):
    items, _, _ = corpus
    worst_angle = 0.0
    worst_vec = 0.0
    for (_, rep, cog), result in zip(items, extracted):
        worst_angle = max(worst_angle, float(np.max(angle_distance(result.theta, rep.theta))))
        back = synthesize(result.representation).vector
        worst_vec = max(worst_vec, float(np.max(np.abs(back - cog.vector))))
    ok = worst_angle <= CORPUS_TOL and worst_vec <= CORPUS_TOL
    record(4, ok, f"max phase error mod 2pi {worst_angle:.1e}, max reconstruction error {worst_vec:.1e} "
                  f"(tol {CORPUS_TOL:g})")


def test_criterion_05_phase_constraints_and_sum(corpus, extracted):
    items, _, _ = corpus
    worst_theta0 = worst_pair = worst_sum = 0.0
    sign_mismatch = 0
    for (params, _, cog), result in zip(items, extracted):
        theta = result.theta
        N = len(theta)
        d0 = min(angle_distance(theta[0], PI / 4), angle_distance(theta[0], 5 * PI / 4))
        worst_theta0 = max(worst_theta0, d0)
        n = np.arange(1, N)
        worst_pair = max(worst_pair, float(np.max(angle_distance(theta[n] + theta[N - n], PI / 2))))
        total = float(np.sum(cog.vector))
        worst_sum = max(worst_sum, abs(abs(total) - 1))
        on_plus = angle_distance(theta[0], PI / 4) <= CORPUS_TOL
        if (total > 0) != on_plus or (total > 0) != (params.theta0_branch.sign > 0):
            sign_mismatch += 1
    ok = max(worst_theta0, worst_pair, worst_sum) <= CORPUS_TOL and sign_mismatch == 0
    record(5, ok, f"theta0 error {worst_theta0:.1e}, pair-sum error {worst_pair:.1e}, "
                  f"|sum|-1 error {worst_sum:.1e}, {sign_mismatch} sign mismatches (tol {CORPUS_TOL:g})")


def test_criterion_06_closure(corpus):
    items, _, _ = corpus
    failures = {"cycle": 0, "negation": 0, "reversal": 0}
    for _, _, cog in items:
        a = cog.vector
        for name, other in (("cycle", cycle(a)), ("negation", -a), ("reversal", a[::-1])):
            if not is_cog_direct(other).is_cog:
                failures[name] += 1
    record(6, not any(failures.values()), f"{3 * len(items)} transformed cogs, failures {failures}")


def test_criterion_07_n2_classification():
    got = [c.vector for c, _ in enumerate_grid(2, 1, "both", "both")]
    expected = [np.array(e, dtype=float) for e in ((1, 0), (0, 1), (-1, 0), (0, -1))]
    matched = [int(sum(np.max(np.abs(g - e)) <= 1e-12 for g in got)) for e in expected]
    ok = len(got) == 4 and matched == [1, 1, 1, 1]
    record(7, ok, f"{len(got)} cogs, each of (1,0),(0,1),(-1,0),(0,-1) matched {matched} times (tol 1e-12)")


def test_criterion_08_projection_optimality():
    grid = np.array([c.vector for c, _ in enumerate_grid(3, 5000, "both")])
    rng = np.random.default_rng(8)
    vectors = []
    while len(vectors) < 100:
        v = rng.normal(size=3)
        if np.min(np.abs(np.fft.fft(v))) >= 1e-3:
            vectors.append(v)
    worst = -np.inf
    for v in vectors:
        d_proj = float(np.linalg.norm(nearest_cog(v).vector - v))
        d_grid = float(np.min(np.linalg.norm(grid - v, axis=1)))
        worst = max(worst, d_proj - d_grid)
    ok = len(grid) == 10**4 and worst <= 1e-6
    record(8, ok, f"100 vectors against a {len(grid)}-point grid, "
                  f"max (projection - grid minimum) distance {worst:.2e} (slack 1e-6)")


def test_criterion_09_method_agreement_and_bench(corpus):
    items, _, _ = corpus
    rng = np.random.default_rng(9)
    random_disagree = 0
    for _ in range(10_000):
        v = rng.normal(size=int(rng.integers(2, 65)))
        if not methods_agree(is_cog_direct(v), is_cog_spectral(v)):
            random_disagree += 1
    picks = rng.choice(len(items), size=1000, replace=False)
    cog_disagree = 0
    for i in picks:
        a = items[i][2].vector
        d, s = is_cog_direct(a), is_cog_spectral(a)
        if not (d.is_cog and s.is_cog and methods_agree(d, s)):
            cog_disagree += 1

    out, err = io.StringIO(), io.StringIO()
    code = cli_main(["bench", "--n-list", "4096", "--reps", "5"], stdout=out, stderr=err)
    bench = json.loads(out.getvalue())
    row = bench["results"][0]
    ok = random_disagree == 0 and cog_disagree == 0 and code == 0 and bench["all_agree"] \
        and row["agreement"] == 1.0 and "direct_median_s" in row and "spectral_median_s" in row
    faster = "spectral" if row["spectral_faster"] else "direct"
    record(9, ok, f"disagreements: {random_disagree}/10000 random, {cog_disagree}/1000 cogs; "
                  f"bench N=4096 exit {code}, agreement {row['agreement']:.0%}, "
                  f"direct {row['direct_median_s']:.2e} s vs spectral {row['spectral_median_s']:.2e} s "
                  f"({faster} faster, reported only)")


def test_criterion_10_trig_identities():
    worst = 0.0
    count = 0
    for N in range(2, 33):
        for a in range(-2 * N, 2 * N + 1):
            if a == 0:
                continue
            for theta in (0.0, PI / 7, PI / 4, 1.0):
                closed = cyclic_trig_sums(N, a, theta)
                direct = oracles.trig_sums(N, a, theta)
                worst = max(worst, abs(closed[0] - direct[0]), abs(closed[1] - direct[1]))
                count += 1
    record(10, worst <= 1e-9, f"{count} (N, a, theta) cases, max closed-form error {worst:.1e} (tol 1e-9)")
