"""Acceptance criteria, one test each.

Every test prints a single ``[criterion N] PASS|FAIL`` line; the lines are
repeated in the terminal summary (see conftest.py).
"""
import time
from functools import lru_cache

import pytest

from iwcontract.invariants import hat_invariants, monomial_top_invariant, proportionality
from iwcontract.liecore import build_algebra, partitions
from iwcontract.polyring import SparsePoly
from iwcontract.verify import (PASS, check_highest_components, check_index_and_degrees, check_invariance_suite,
                               check_nullcone_inequality, check_regularity_suite, check_structure_suite)

ALL = ["A1", "A2", "A3", "B2", "C2", "C3", "D3", "D4"]
SYMBOLIC = ["A1", "A2", "A3", "B2", "C2"]
SAMPLED = ["C3", "D4"]
LINES: list[str] = []


def record(n: int, ok: bool, text: str) -> None:
    line = f"[criterion {n:2d}] {'PASS' if ok else 'FAIL'}  {text}"
    LINES.append(line)
    print(line)


def failures(reports, prefix=""):
    return [(r.name, r.details, r.witness) for r in reports if r.name.startswith(prefix) and r.status != PASS]


@lru_cache(maxsize=None)
def regularity(name):
    return tuple(check_regularity_suite(name))


def test_criterion_01_structure():
    t0 = time.perf_counter()
    bad = {}
    for name in ALL:
        reps = [r for r in check_structure_suite(name)
                if r.name in ("structure.q_jacobi", "structure.family_limit", "structure.family_jacobi")]
        assert len(reps) == 3
        if failures(reps):
            bad[name] = failures(reps)
    dt = time.perf_counter() - t0
    ok = not bad and dt < 30
    record(1, ok, f"q Jacobi and t->0 limit on {len(ALL)} specs, {dt:.1f}s (< 30s)")
    assert ok, bad


def test_criterion_02_invariance():
    t0 = time.perf_counter()
    bad = {}
    for name in SYMBOLIC:
        reps = check_invariance_suite(name, "symbolic")
        if failures(reps, "invariance.coadjoint") or failures(reps, "invariance.commutes"):
            bad[name] = failures(reps)
    for name in SAMPLED:
        reps = check_invariance_suite(name, "sampled", seed=0, samples=25)
        if failures(reps, "invariance.coadjoint") or failures(reps, "invariance.commutes"):
            bad[name] = failures(reps)
    dt = time.perf_counter() - t0
    ok = not bad and dt < 180
    record(2, ok, f"coadjoint invariance symbolic on {','.join(SYMBOLIC)}, "
                  f"25 sampled points on {','.join(SAMPLED)}, {dt:.1f}s (< 180s)")
    assert ok, bad


def test_criterion_03_adjoint_side():
    bad = {}
    for name in ALL:
        reps = {r.name: r for r in check_invariance_suite(name, "sampled", seed=0, samples=10)}
        for key in ("invariance.adjoint_cartan", "invariance.u_conjugation"):
            if reps[key].status != PASS:
                bad[(name, key)] = reps[key].witness
        assert "at 10 random regular t" in reps["invariance.u_conjugation"].details
    record(3, not bad, "Cartan coordinates killed by all adjoint derivations; t recovered from t+u at 10 samples per spec")
    assert not bad, bad


def test_criterion_04_index():
    bad = {}
    for name in ALL:
        rep = next(r for r in check_index_and_degrees(name) if r.name == "index.index")
        if rep.status != PASS:
            bad[name] = rep.details
    record(4, not bad, f"index = l on {len(ALL)} specs")
    assert not bad, bad


def test_criterion_05_degrees():
    bad = {}
    for name in ALL:
        reps = [r for r in check_index_and_degrees(name) if r.name in ("index.bidegrees", "index.degree_sum")]
        if failures(reps):
            bad[name] = failures(reps)
    record(5, not bad, "bidegrees (m_i, 1) and sum of degrees (dim q + l)/2 on all specs")
    assert not bad, bad


def test_criterion_06_highest_components():
    bad = {}
    for name in ALL:
        reps = [r for r in check_highest_components(name) if r.name.split(".")[1].startswith(("coadj", "adj", "no_pure"))]
        assert len(reps) == 3 * int(name[1:])
        if failures(reps):
            bad[name] = failures(reps)
    record(6, not bad, "highest coadjoint components = c_i P-hat_i, no (0, d_i) part, adjoint ones in t only")
    assert not bad, bad


def test_criterion_07_monomial():
    names = ["A1", "A2", "A3", "B2", "C2", "C3", "D4"]
    scalars = {n: proportionality(hat_invariants(n).hatP[-1], monomial_top_invariant(n)) for n in names}
    ok = all(c not in (None, 0) for c in scalars.values())
    record(7, ok, "P-hat_l proportional to the monomial: " + ", ".join(f"{n}:{c}" for n, c in scalars.items()))
    assert ok


def test_criterion_08_codim2_dichotomy():
    bad = {}
    for name in ["B2", "C2", "C3", "D4"]:
        reps = [r for r in regularity(name) if r.name.startswith("regularity.divisor")]
        if not reps or failures(reps):
            bad[name] = failures(reps) or "no divisor witness"
    for name in ["A2", "A3"]:
        reps = [r for r in regularity(name) if r.name.startswith("regularity.subregular")]
        if len(reps) != int(name[1:]) or failures(reps) or not all("at 10 random xi" in r.details for r in reps):
            bad[name] = failures(reps) or "missing subregular witnesses"
    record(8, not bad, "divisor witnesses on B2,C2,C3,D4; subregular witnesses of full rank on A2,A3")
    assert not bad, bad


def test_criterion_09_nullcone():
    reps = []
    for name in ["A1", "A2", "A3"]:
        reps.extend(check_nullcone_inequality(name))
    expected = sum(len(partitions(n)) for n in (2, 3, 4))
    ok = not failures(reps) and len(reps) == expected
    record(9, ok, f"dim g^e + 2 rank P(e) >= 3l on all {len(reps)} Jordan-type representatives "
                  f"(p(2)+p(3)+p(4) = {expected})")
    assert ok, failures(reps)


def test_criterion_10_regularity_equivalence():
    bad = {}
    for name in ALL:
        rep = next(r for r in regularity(name) if r.name == "regularity.equivalence")
        if rep.status != PASS or "at 100 points" not in rep.details:
            bad[name] = (rep.details, rep.witness)
    record(10, not bad, f"Kirillov-rank and Jacobian-rank regularity agree at 100 points per spec, {len(ALL)} specs")
    assert not bad, bad


@pytest.mark.parametrize("perturb", ["cartan", "root_product"])
def test_criterion_11_negative_controls(perturb):
    missed = []
    for name in SYMBOLIC + SAMPLED:
        basis, _ = build_algebra(name)
        mode = "symbolic" if name in SYMBOLIC else "sampled"
        base = hat_invariants(name).hatP
        if perturb == "cartan":
            extra = SparsePoly.var(basis.labels, "t1")
        else:
            extra = SparsePoly.var(basis.labels, basis.neg_labels[0]) * SparsePoly.var(basis.labels, basis.neg_labels[-1])
        for i in range(len(base)):
            hats = list(base)
            hats[i] = hats[i] + extra
            rep = next(r for r in check_invariance_suite(name, mode, hatP=hats)
                       if r.name == f"invariance.coadjoint_P{i + 1}")
            if rep.status == PASS or not rep.witness or "direction" not in rep.witness:
                missed.append((name, i + 1))
    record(11, not missed, f"perturbation by a {perturb} monomial fails with a witness for every P-hat_i")
    assert not missed, missed
