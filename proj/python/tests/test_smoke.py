"""Smoke checks for the kgpy extension. Run with PYTHONPATH pointing at the
CMake build directory (ctest sets this up automatically)."""

import json
import math

import numpy as np
import pytest

kgpy = pytest.importorskip("kgpy")


def ring(n):
    return kgpy.cycles_from_partition(n, [n])


def test_partitions_and_theory():
    assert kgpy.partitions_min3(9) == [[9], [3, 6], [4, 5], [3, 3, 3]]
    assert kgpy.partition_count_min3(30) == 331
    assert kgpy.count_partitions(9, 2, 3) == 2
    row = kgpy.theory_row(9)
    assert row.count == 4
    assert row.d_free == pytest.approx(34.5)


def test_spectral_chain_and_complexity():
    g = ring(4)
    h = kgpy.free_hamiltonian(g) + np.diag(kgpy.quasiperiodic_potential(g))
    sm = kgpy.spectral_measure(h, 0)
    assert sm.dim() == 13  # 4^2 - 4 + 1
    lr = kgpy.jacobi_from_measure(sm)
    assert lr.dim == 13
    ts = kgpy.log_grid(0.1, 1000.0, 120)
    series = kgpy.complexity_series(lr.b, ts)
    assert series.max_norm_err < 1e-8
    assert kgpy.complexity_time_average(lr.b) > 0


def test_backend_equivalence_small():
    g = ring(5)
    h = kgpy.free_hamiltonian(g)
    quad = kgpy.quad_lanczos(h, kgpy.number_op(5, 0), 1e-8, 7)
    fb = kgpy.fock_basis(5)
    p = kgpy.ManyBodyParams()
    hf = kgpy.many_body_hamiltonian(g, p, fb)
    o0 = np.diag([float((s >> 0) & 1) for s in fb.states]).astype(complex)
    fock = kgpy.fock_lanczos(hf, o0, 5, 1e-8, 7)
    assert quad.dim == fock.dim
    assert np.abs(np.asarray(quad.b) - np.asarray(fock.b)).max() < 1e-8


def test_otoc_disjoint_loops_and_lyapunov():
    g = kgpy.cycles_from_partition(6, [3, 3])
    h = kgpy.free_hamiltonian(g)
    ts = kgpy.lin_grid(0.0, 10.0, 40)
    s = kgpy.otoc_free(h, 0, 3, ts)
    assert np.abs(np.asarray(s.c)).max() < 1e-10

    # exponential growth with a hard cap keeps the detector window
    # inside the pure-growth region
    t = np.linspace(0.1, 25.0, 200)
    c = np.minimum(np.exp(0.5 * t), np.exp(0.5 * 18.0))
    fit = kgpy.lyapunov_fit(t, c)
    assert fit.ok
    assert fit.lam == pytest.approx(0.5, abs=0.02)


def test_run_experiment_records():
    cfg = kgpy.RunConfig()
    cfg.kind = "dimension"
    cfg.degree = 2
    cfg.sizes = [9, 12, 16]
    cfg.samples = -1
    cfg.quasiperiodic = True
    lines, csv_text, slope, slope_err, ok = kgpy.run_experiment(cfg)
    recs = [json.loads(l) for l in lines]
    assert recs[0]["schema_version"] == 1
    assert recs[0]["count"] == 4
    assert csv_text.splitlines()[0] == "N,mean,stderr,count"
    assert ok and math.isfinite(slope)
