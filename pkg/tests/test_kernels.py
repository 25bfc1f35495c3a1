"""Both kernel backends must agree operation by operation."""
import os
import pickle
import random
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import KERNELS

small = st.fractions(min_value=-1000, max_value=1000, max_denominator=50)
ints = st.integers(min_value=-10**30, max_value=10**30)


def raw(x):
    return x.raw


def build(mod, a, b):
    return mod.FieldElem(a, b)


def test_backend_names(kernel):
    assert kernel.BACKEND in ("python", "cython")


def _backend_in_subprocess(pure):
    env = dict(os.environ)
    env.pop("PETINDUCE_PURE", None)
    if pure:
        env["PETINDUCE_PURE"] = "1"
    out = subprocess.run([sys.executable, "-c", "import petinduce; print(petinduce.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    return out.stdout.strip()


def test_backend_selection():
    assert _backend_in_subprocess(pure=True) == "python"
    assert _backend_in_subprocess(pure=False) == ("cython" if len(KERNELS) == 2 else "python")


@given(ints, ints)
def test_sign_ab_parity(a, b):
    vals = {k.sign_ab(a, b) for k in KERNELS}
    assert len(vals) == 1


@given(small, small, small, small)
def test_arithmetic_parity(a, b, c, d):
    results = []
    for k in KERNELS:
        x, y = build(k, a, b), build(k, c, d)
        r = [raw(x + y), raw(x - y), raw(x * y), x.sign(), (x < y), x.floor(), hash(x)]
        if y:
            r.append(raw(x / y))
        results.append(r)
    assert all(r == results[0] for r in results)


def test_pickle_round_trip(kernel):
    x = kernel.FieldElem(Fraction(3, 7), Fraction(-2, 5))
    assert pickle.loads(pickle.dumps(x)) == x


def _grid_table(n):
    return [[(-i, 0, 1, 0, 0, 0), (i + 1, 0, -1, 0, 0, 0), (-j, 0, 0, 0, 1, 0), (j + 1, 0, 0, 0, -1, 0)]
            for i in range(n) for j in range(n)]


@pytest.mark.parametrize("packed", [False, True])
def test_locate_parity(kernel, packed):
    table = _grid_table(3)
    t = kernel.prepare_table(table) if packed else table
    rng = random.Random(5)
    F = kernel.FieldElem
    for _ in range(300):
        x = F(Fraction(rng.randint(-10, 310), 100), Fraction(rng.randint(-3, 3), 7))
        y = F(Fraction(rng.randint(-10, 310), 100))
        xf = float(x)
        yf = float(y)
        got = kernel.locate(t, x, y)
        if not (0 <= xf <= 3 and 0 <= yf <= 3):
            assert got == -1
        elif xf == int(xf) or yf == int(yf):
            assert got == -2
        else:
            assert got == int(xf) * 3 + int(yf)


def test_locate_large_coordinates_fall_back(kernel):
    # coefficients beyond the machine-integer path must still be exact
    big = 10**25
    table = [[(0, 0, big, 0, 0, 0), (big, 0, -big, 0, 0, 0), (0, 0, 0, 0, 1, 0), (1, 0, 0, 0, -1, 0)]]
    t = kernel.prepare_table(table)
    F = kernel.FieldElem
    assert kernel.locate(t, F(Fraction(1, 3)), F(Fraction(1, 2))) == 0
    assert kernel.locate(t, F(Fraction(big + 1, big)), F(Fraction(1, 2))) == -1
    assert kernel.locate(t, F(1), F(Fraction(1, 2))) == -2


def test_locate_phi_boundary_exact(kernel):
    # the cell x < phi - 1 = 0.618...; the point 6180339887/10**10 is just below it
    table = [[(-1, 1, -1, 0, 0, 0), (0, 0, 1, 0, 0, 0)]]
    F = kernel.FieldElem
    t = kernel.prepare_table(table)
    assert kernel.locate(t, F(Fraction(6180339887, 10**10)), None) == 0
    assert kernel.locate(t, F(Fraction(6180339888, 10**10)), None) == -1
    assert kernel.locate(t, F(-1, 1), None) == -2
