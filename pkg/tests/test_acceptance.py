"""Acceptance suite.  Each test prints one ``PASS`` or ``FAIL`` line for its
criterion (visible even under output capture) and then asserts."""
import time

import numpy as np
import pytest
from hypothesis import HealthCheck, given, settings

from petinduce import geometry as geo
from petinduce import pipeline
from petinduce.exactfield import FieldElem, parse
from petinduce.induction import induced_partition
from petinduce.partition import refine
from petinduce.pet import apply, inverse
from petinduce.words import (compose, expansivity_witness, from_permutation, incidence_matrix,
                             inverse_permutation, primitivity_witness)

from strategies import block_morphisms, cut_partitions, halfspaces, morphisms, polygons, toral_pets

HEAVY = settings(max_examples=10_000, deadline=None, derandomize=True, database=None,
                 suppress_health_check=list(HealthCheck))


@pytest.fixture
def report(capsys):
    def emit(n, ok, detail):
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'}  criterion {n:>2}: {detail}")
        assert ok, detail
    return emit


def _property_count(fn):
    """Run a hypothesis-wrapped property and return how many examples passed."""
    seen = []
    fn(seen)
    return len(seen)


# 1-5: chain tables ------------------------------------------------------------

def test_criterion_01_beta0(report, expected):
    R0e2 = pipeline.r0_generators()[1]
    res = induced_partition(R0e2, pipeline.Y_LE_1, pipeline.load_p0(), "column")
    got = res.substitution
    want = expected.morphisms["beta0"]
    lengths = sorted({len(w) for w in res.return_words})
    ok = (got == want and len(got) == 28 and lengths == [4, 5]
          and res.return_words[0] == (0, 9, 3, 7) and res.return_words[27] == (1, 10, 4, 5, 6))
    report(1, ok, f"beta0 has {len(got)} images of lengths {lengths}, equal to the golden table: {got == want}")


def test_criterion_02_beta2_to_beta9(report, chain, expected):
    names = [f"beta{i}" for i in range(2, 10)]
    counts = [len(chain.morphisms[n]) for n in names]
    bad = [n for n in names if chain.morphisms[n] != expected.morphisms[n]]
    ok = not bad and counts == [20, 20, 22, 18, 21, 19, 21, 19]
    report(2, ok, f"letter counts {counts}; mismatching tables: {bad or 'none'}")


def test_criterion_03_self_induction(report, chain, expected):
    same = chain.partitions["P8"].same_cells(chain.partitions["P10"])
    ok = same and chain.tau == expected.tau and chain.tau[0] == 1 and chain.tau[18] == 12
    report(3, ok, f"P8 == P10 as cell sets: {same}; tau equals the printed table: {chain.tau == expected.tau}")


def test_criterion_04_self_similarity(report, chain, expected):
    ss = pipeline.self_similarity(chain)
    mp = primitivity_witness(ss, 20)
    me = expansivity_witness(ss, 20)
    ok = ss == expected.morphisms["beta8beta9tau"] and mp is not None and me is not None
    report(4, ok, f"beta8 beta9 tau matches: {ss == expected.morphisms['beta8beta9tau']}; "
                  f"primitive at m={mp}, expansive at m={me}")


def test_criterion_05_omega_u(report, chain, expected):
    ss = pipeline.self_similarity(chain)
    z = from_permutation(expected.zeta)
    omega = compose(inverse_permutation(z), ss, z)
    zeta = pipeline.zeta_check(chain, ss, expected)
    ok = omega == expected.morphisms["omega_U"] and len(omega) == 19 and zeta.ok
    report(5, ok, f"zeta^-1 (beta8 beta9 tau) zeta has {len(omega)} images, "
                  f"equal to omega_U: {omega == expected.morphisms['omega_U']}; zeta: {zeta.detail}")


# 6-8: sampled dynamics ---------------------------------------------------------

def test_criterion_06_return_times(report):
    rt = pipeline.verify_return_times(1000, seed=0)
    ok = rt == {"e1": [1], "e2": [4, 5]}
    report(6, ok, f"1000 samples: return times under e1 {rt['e1']}, under e2 {rt['e2']}")


def test_criterion_07_desubstitution(report, chain):
    t0 = time.perf_counter()
    results = []
    for st in chain.steps:
        results.append((st.name,) + pipeline.desubstitution_check(chain, st, 50, window=8, seed=7))
    for src, _ in chain.rescalings:
        results.append((f"rescale {src}",) + pipeline.rescaling_check(chain, src, 50, window=8, seed=7))
    elapsed = time.perf_counter() - t0
    bad = [(name, b) for name, _, b in results if b]
    total = sum(n for _, n, _ in results)
    ok = not bad and elapsed < 60
    report(7, ok, f"{len(results)} steps, {total} samples on 8x8 windows, "
                  f"mismatches {bad or 0}, {elapsed:.1f} s")


def test_criterion_08_shear(report, chain):
    n, bad = pipeline.verify_shear(chain, n_samples=20, window=5, seed=3)
    report(8, bad == 0, f"{n} samples on 5x5 windows, {bad} mismatches")


# 9: Sturmian appendix ------------------------------------------------------------

def test_criterion_09_sturmian(report):
    alpha = parse("186/55+3/55*phi")
    digits = pipeline.cf_digits(alpha, 7)
    words = pipeline.first_induced_words(alpha)
    ok = digits == [3, 2, 7, 1, 5, 1, 5] and words == [(0,), (0, 0, 0, 1)]
    report(9, ok, f"digits {digits}; first induced return words {words}")


# 10: geometry property suite --------------------------------------------------------

def _refinement(seen):
    @HEAVY
    @given(cut_partitions(), cut_partitions())
    def prop(P, Q):
        R = refine(P, Q)
        assert R.volume() == P.domain.volume()
        for _, p in P.atoms:
            pieces = [geo.intersect(p, q) for _, q in Q.atoms]
            assert sum((geo.volume(c) for c in pieces if c is not None), FieldElem(0)) == geo.volume(p)
        seen.append(1)
    prop()


def _clip(seen):
    @HEAVY
    @given(polygons(), halfspaces())
    def prop(P, H):
        a, b = geo.clip(P, H), geo.clip(P, H.complement())
        assert geo.volume(a) + geo.volume(b) == geo.volume(P)
        seen.append(1)
    prop()


def _bijectivity(seen):
    @HEAVY
    @given(toral_pets())
    def prop(T):
        T.validate()
        for _, c in T.partition.atoms:
            x = geo.interior_point(c)
            assert T.domain.contains(apply(T, x)) >= 0
            assert apply(inverse(T), apply(T, x)) == x
        seen.append(1)
    prop()


def _homomorphism(seen):
    @HEAVY
    @given(morphisms(), morphisms(), block_morphisms(), block_morphisms())
    def prop(m2, m1, b2, b1):
        a = list(range(3))
        for f, g in ((m2, m1), (b2, b1)):
            lhs = incidence_matrix(compose(f, g), a)
            assert np.array_equal(lhs, incidence_matrix(f, a).dot(incidence_matrix(g, a)))
        seen.append(1)
    prop()


def test_criterion_10_geometry_properties(report):
    t0 = time.perf_counter()
    counts = {name: _property_count(fn) for name, fn in (
        ("refinement volume", _refinement), ("clip complementarity", _clip),
        ("PET bijectivity", _bijectivity), ("incidence homomorphism", _homomorphism))}
    ok = all(c >= 10_000 for c in counts.values())
    report(10, ok, ", ".join(f"{k} {v}" for k, v in counts.items()) +
           f" instances, {time.perf_counter() - t0:.0f} s")
