import numpy as np
import pytest

from sun_euler import factor_sequence, kernel, kernel_oracle, kernel_terms, one_form_coefficients
from sun_euler.euler_param import PLANE
from sun_euler.haar_measure import check_oracle, interior_point, t_block_determinant
from sun_euler.param_ranges import quotient_ranges

# Kernel factors as printed for SU(6), in the printed order.
SU6_TERMS = [
    "sin(2*a2)", "cos(a4)^3*sin(a4)", "cos(a6)^5*sin(a6)", "cos(a8)^7*sin(a8)", "cos(a10)*sin(a10)^9",
    "sin(2*a12)", "cos(a14)^3*sin(a14)", "cos(a16)^5*sin(a16)", "cos(a18)*sin(a18)^7",
    "sin(2*a20)", "cos(a22)^3*sin(a22)", "cos(a24)*sin(a24)^5",
    "sin(2*a26)", "cos(a28)*sin(a28)^3",
    "sin(2*a30)",
]


def test_kernel_terms_su2():
    assert [str(t) for t in kernel_terms(2)] == ["sin(2*a2)"]


def test_kernel_terms_su4():
    assert [str(t) for t in kernel_terms(4)] == [
        "sin(2*a2)", "cos(a4)^3*sin(a4)", "cos(a6)*sin(a6)^5", "sin(2*a8)", "cos(a10)*sin(a10)^3", "sin(2*a12)",
    ]


def test_kernel_terms_su6():
    assert [str(t) for t in kernel_terms(6)] == SU6_TERMS


@pytest.mark.parametrize("n", range(2, 10))
def test_kernel_term_cases(n):
    terms = kernel_terms(n)
    assert len(terms) == n * (n - 1) // 2
    planes = {f.param_index for f in factor_sequence(n).of_kind(PLANE)}
    assert {t.param_index for t in terms} == planes
    for t in terms:
        assert (t.case == "sin2") == (t.k == 2)
        assert (t.case == "sin_power") == (t.k == t.m > 2)


def test_kernel_examples():
    a = np.zeros(3)
    a[1] = np.pi / 4
    assert kernel(2, a) == pytest.approx(1.0, abs=1e-15)
    a = np.zeros(8)
    a[1], a[3], a[5] = np.pi / 4, np.pi / 3, np.pi / 4
    assert kernel(3, a) == pytest.approx(0.5 * (np.sqrt(3) / 2) ** 3, rel=1e-14)


def test_kernel_su5_top_block():
    rng = np.random.default_rng(5)
    a = interior_point(5, rng)
    x = {i: a[i - 1] for i in (2, 4, 6, 8)}
    top = (
        np.cos(x[4]) ** 3 * np.cos(x[6]) ** 5 * np.cos(x[8]) * np.sin(2 * x[2])
        * np.sin(x[4]) * np.sin(x[6]) * np.sin(x[8]) ** 7
    )
    assert kernel(5, a) == pytest.approx(top * kernel(4, a[8:23]), rel=1e-13)


def test_kernel_batch():
    rng = np.random.default_rng(1)
    pts = np.array([interior_point(4, rng) for _ in range(6)])
    np.testing.assert_allclose(kernel(4, pts), [kernel(4, p) for p in pts], rtol=1e-15)


@pytest.mark.parametrize("n", range(2, 10))
def test_kernel_nonnegative_on_quotient(n):
    rs = quotient_ranges(n)
    pts = rs.lo + rs.widths() * np.random.default_rng(n).random((1000, n * n - 1))
    assert np.all(kernel(n, pts) >= 0)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_kernel_ignores_flat_parameters(n):
    rng = np.random.default_rng(n)
    a = interior_point(n, rng)
    b = a.copy()
    for f in factor_sequence(n):
        if f.kind != PLANE:
            b[f.param_index - 1] += rng.uniform(-3, 3)
    assert kernel(n, a) == kernel(n, b)


def test_kernel_length_mismatch():
    with pytest.raises(ValueError):
        kernel(3, np.zeros(7))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_oracle_at_zero_is_signed_permutation(n):
    c = one_form_coefficients(n, np.zeros(n * n - 1)).c
    assert np.allclose(np.abs(c).sum(axis=1), 1.0)
    assert np.allclose(np.abs(c).max(axis=1), 1.0)
    assert set(np.round(c.ravel(), 12)) <= {-1.0, 0.0, 1.0}


def test_oracle_su2():
    for x in np.linspace(0.05, 1.5, 7):
        a = np.array([0.4, x, -1.2])
        assert kernel_oracle(2, a) == pytest.approx(abs(np.sin(2 * x)), rel=1e-12)
    assert kernel_oracle(2, [0, np.pi / 4, 0]) == pytest.approx(1.0, rel=1e-14)


@pytest.mark.parametrize("n,points", [(2, 20), (3, 20), (4, 10)])
def test_oracle_matches_kernel(n, points):
    rep = check_oracle(n, points, seed=n)
    assert rep["max_relative_deviation"] <= 1e-9
    assert rep["max_absolute_deviation_singular"] <= 1e-10


@pytest.mark.parametrize("n", [3, 4])
def test_block_structure(n):
    rng = np.random.default_rng(40 + n)
    d = 2 * (n - 1)
    for _ in range(5):
        a = interior_point(n, rng)
        full = kernel_oracle(n, a)
        assert t_block_determinant(n, a) * kernel(n - 1, a[d:d + (n - 1) ** 2 - 1]) == pytest.approx(full, rel=1e-8)
