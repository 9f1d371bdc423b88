"""Expected characteristic polynomials of randomly rotated matrices, three ways.

* ``exact``: average over every element of a finite group H_d^s (pairs of
  elements for the rectangular case), in exact arithmetic.
* ``weingarten``: expand ``E e_k`` into principal minors and integrate each
  monomial with the Weingarten calculus of U_d or O_d, still exactly.
* ``mc``: Haar Monte Carlo with a seeded generator and a z-score against
  the closed form.

Inputs are always spectra; the matrices are the diagonal ones, which is
enough by unitary invariance of Haar measure.
"""

from __future__ import annotations

import itertools
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from .combinatorics import sign_of_images
from .cyclotomic import as_exact_rational, conj
from .errors import DimensionError, ResourceLimitError
from .finite_free import (
    CONVOLUTIONS,
    PolynomialFF,
    SpectrumSpec,
    additive_weight,
    char_poly_from_spectrum,
    elementary_symmetric,
    format_rational,
    multiplicative_weight,
)
from .quadrature import DEFAULT_BUDGET, ORTHOGONAL, SIGNED, UNITARY, GroupSpec, signed_group_enumerate, signed_matrix
from .weingarten import haar_moment

KINDS = ("add", "mult", "rect")
#: Floating comparisons allow this relative slack on top of the SE band.
RELATIVE_TOLERANCE = 1e-8


def _as_spectrum(spec) -> SpectrumSpec:
    return spec if isinstance(spec, SpectrumSpec) else SpectrumSpec(tuple(spec))


def _check_kind(kind: str) -> None:
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")


# -- exact linear algebra on small matrices -------------------------------------


def _matmul(x: list[list], y: list[list]) -> list[list]:
    n = len(y[0])
    out = []
    for row in x:
        acc = [0] * n
        for t, xt in enumerate(row):
            if not xt:
                continue
            for c, ytc in enumerate(y[t]):
                if ytc:
                    acc[c] = acc[c] + xt * ytc
        out.append(acc)
    return out


def _adjoint(x: list[list]) -> list[list]:
    return [[conj(x[r][c]) for r in range(len(x))] for c in range(len(x[0]))]


def _diag(values: Sequence) -> list[list]:
    d = len(values)
    return [[values[r] if r == c else 0 for c in range(d)] for r in range(d)]


def _divide_exact(x, k: int):
    if isinstance(x, int):
        q, r = divmod(x, k)
        return q if r == 0 else Fraction(x, k)
    return x / k


def exact_elementary(matrix: list[list]) -> list:
    """``e_0..e_d`` of the eigenvalues of an exact square matrix (Faddeev-LeVerrier)."""
    d = len(matrix)
    coeffs = [1]
    m = [[0] * d for _ in range(d)]
    for k in range(1, d + 1):
        m = _matmul(matrix, m)
        for r in range(d):
            m[r][r] = m[r][r] + coeffs[-1]
        am = _matmul(matrix, m)
        trace = sum((am[r][r] for r in range(d)), 0)
        coeffs.append(-_divide_exact(trace, k))
    # coeffs[k] is the coefficient of x^{d-k}, which is (-1)^k e_k
    return [c if k % 2 == 0 else -c for k, c in enumerate(coeffs)]


def rotated_matrix(kind: str, a: Sequence, b: Sequence, u: list[list], v: list[list] | None = None) -> list[list]:
    """``A+UBU*``, ``AUBU*`` or ``(A+UBV)(A+UBV)*`` with diagonal ``A``, ``B``."""
    A, B = _diag(a), _diag(b)
    if kind == "add":
        return [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(A, _matmul(_matmul(u, B), _adjoint(u)))]
    if kind == "mult":
        return _matmul(A, _matmul(_matmul(u, B), _adjoint(u)))
    if kind == "rect":
        ubv = _matmul(_matmul(u, B), v)
        m = [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(A, ubv)]
        return _matmul(m, _adjoint(m))
    raise ValueError(kind)


# -- route 1: exact finite-group averages -----------------------------------------


@lru_cache(maxsize=256)
def _exact_average(kind: str, a: tuple, b: tuple, s: int, budget: int) -> tuple[Fraction, ...]:
    d = len(a)
    group = [signed_matrix(g, s) for g in signed_group_enumerate(d, s, budget)]
    totals = [0] * (d + 1)
    if kind == "rect":
        # u = P·D with D diagonal commutes past B, and D·v runs over the group
        # with v, so u may be restricted to permutation matrices
        perms = [u for u in group if all(x in (0, 1) for row in u for x in row)]
        _budget_check(len(perms) * len(group), budget)
        pairs = itertools.product(perms, group)
    else:
        pairs = ((u, None) for u in group)
    n = 0
    for u, v in pairs:
        n += 1
        for k, e in enumerate(exact_elementary(rotated_matrix(kind, a, b, u, v))):
            totals[k] = totals[k] + e
    return tuple(as_exact_rational(Fraction(t, n) if isinstance(t, int) else t / n) for t in totals)


def _budget_check(count: int, budget: int) -> None:
    if count > budget:
        raise ResourceLimitError(f"{count} group-element evaluations exceed the budget of {budget}")


def expected_ek_exact(kind: str, spec_a, spec_b, g: GroupSpec, k: int, budget: int = DEFAULT_BUDGET) -> Fraction:
    """Average of ``e_k`` of the rotated matrix over all of the finite group ``g``."""
    return expected_ek_exact_all(kind, spec_a, spec_b, g, budget)[k]


def expected_ek_exact_all(kind: str, spec_a, spec_b, g: GroupSpec, budget: int = DEFAULT_BUDGET) -> tuple[Fraction, ...]:
    _check_kind(kind)
    a, b = _as_spectrum(spec_a).eigenvalues, _as_spectrum(spec_b).eigenvalues
    if len(a) != len(b) or len(a) != g.d:
        raise DimensionError("spectra and group must share the dimension d")
    if not g.is_finite:
        raise ValueError(f"exact averaging needs a finite signed-permutation group, got {g.label()}")
    return _exact_average(kind, tuple(a), tuple(b), int(g.s), budget)


# -- closed forms --------------------------------------------------------------------


def expected_ek_formula(kind: str, spec_a, spec_b, k: int, d: int | None = None) -> Fraction:
    """The closed form for ``E e_k`` that the convolution formulas predict."""
    _check_kind(kind)
    a, b = _as_spectrum(spec_a), _as_spectrum(spec_b)
    d = a.d if d is None else d
    if a.d != d or b.d != d:
        raise DimensionError("spectra must have length d")
    if not 0 <= k <= d:
        raise DimensionError(f"need 0 <= k <= d, got k={k}, d={d}")
    if kind == "mult":
        return multiplicative_weight(d, k) * elementary_symmetric(k, a.eigenvalues) * elementary_symmetric(k, b.eigenvalues)
    if kind == "rect":
        a, b = a.squared(), b.squared()
    power = 2 if kind == "rect" else 1
    return sum(
        (
            additive_weight(d, i, k - i) ** power
            * elementary_symmetric(i, a.eigenvalues)
            * elementary_symmetric(k - i, b.eigenvalues)
            for i in range(k + 1)
        ),
        Fraction(0),
    )


# -- route 2: Weingarten expansion of principal minors ---------------------------------


@lru_cache(maxsize=None)
def _alternating_moment(group: str, d: int, rows: tuple[int, ...], p: tuple[int, ...]) -> Fraction:
    """``Σ_{σ ∈ Sym(rows)} sgn(σ) E Π_x u_{rows[x] p[x]} conj(u_{σ(rows[x]) p[x]})``."""
    total = Fraction(0)
    m = len(rows)
    for perm in itertools.permutations(range(m)):
        sgn = sign_of_images(tuple(t + 1 for t in perm))
        total += sgn * haar_moment(group, d, rows, p, tuple(rows[t] for t in perm), p)
    return total


def _ek_weingarten_symmetric(kind: str, a: tuple, b: tuple, k: int, group: str) -> Fraction:
    d = len(a)
    total = Fraction(0)
    for S in itertools.combinations(range(1, d + 1), k):
        subsets = [()] if kind == "mult" else [R for r in range(k + 1) for R in itertools.combinations(S, r)]
        for R in subsets:
            if kind == "mult":
                rest, a_part = S, math.prod((a[i - 1] for i in S), start=Fraction(1))
            else:
                rest = tuple(i for i in S if i not in R)
                a_part = math.prod((a[i - 1] for i in R), start=Fraction(1))
            if not a_part:
                continue
            for p in itertools.product(range(1, d + 1), repeat=len(rest)):
                b_part = math.prod((b[c - 1] for c in p), start=Fraction(1))
                if b_part:
                    total += a_part * b_part * _alternating_moment(group, d, rest, p)
    return total


def _bijection_sign(rho: Sequence[int]) -> int:
    order = sorted(rho)
    return sign_of_images(tuple(order.index(c) + 1 for c in rho))


def _rect_terms(a: tuple, b: tuple, k: int, group: str):
    """Yield ``(coefficient, moment_U, moment_V, balanced)`` for ``E e_k(MM*)``, ``M = AU + VB``.

    ``e_k(MM*) = Σ_{|S|=|T|=k} |det M(S,T)|^2``; each entry ``a_i u_ic + v_ic b_c``
    is expanded, and ``balanced`` marks terms whose U-part has as many plain
    as conjugated factors.
    """
    d = len(a)
    for S in itertools.combinations(range(1, d + 1), k):
        for T in itertools.combinations(range(1, d + 1), k):
            bijections = [(rho, _bijection_sign(rho)) for rho in itertools.permutations(T)]
            for rho, s1 in bijections:
                for rho2, s2 in bijections:
                    for X in itertools.product((0, 1), repeat=k):
                        for Y in itertools.product((0, 1), repeat=k):
                            coef = Fraction(s1 * s2)
                            u_rows, u_cols, uc_rows, uc_cols = [], [], [], []
                            v_rows, v_cols, vc_rows, vc_cols = [], [], [], []
                            for x, i in enumerate(S):
                                if X[x]:
                                    coef *= a[i - 1]
                                    u_rows.append(i), u_cols.append(rho[x])
                                else:
                                    coef *= b[rho[x] - 1]
                                    v_rows.append(i), v_cols.append(rho[x])
                                if Y[x]:
                                    coef *= conj(a[i - 1])
                                    uc_rows.append(i), uc_cols.append(rho2[x])
                                else:
                                    coef *= conj(b[rho2[x] - 1])
                                    vc_rows.append(i), vc_cols.append(rho2[x])
                            if not coef:
                                continue
                            mu = haar_moment(group, d, u_rows, u_cols, uc_rows, uc_cols)
                            if not mu:
                                yield coef, mu, Fraction(0), len(u_rows) == len(uc_rows)
                                continue
                            mv = haar_moment(group, d, v_rows, v_cols, vc_rows, vc_cols)
                            yield coef, mu, mv, len(u_rows) == len(uc_rows)


def rect_cross_term_moments(spec_a, spec_b, k: int, group: str = UNITARY) -> list[Fraction]:
    """U-moments of all unbalanced terms in the rectangular expansion (all vanish)."""
    a = tuple(_as_spectrum(spec_a).eigenvalues)
    b = tuple(_as_spectrum(spec_b).eigenvalues)
    return [mu for _, mu, _, balanced in _rect_terms(a, b, k, group) if not balanced]


def expected_ek_weingarten(kind: str, spec_a, spec_b, k: int, group: str = UNITARY) -> Fraction:
    """``E e_k`` over U_d or O_d by expanding minors and applying the Weingarten calculus."""
    _check_kind(kind)
    if group not in (UNITARY, ORTHOGONAL):
        raise ValueError("the Weingarten route needs the unitary or orthogonal group")
    a = tuple(Fraction(x) for x in _as_spectrum(spec_a).eigenvalues)
    b = tuple(Fraction(x) for x in _as_spectrum(spec_b).eigenvalues)
    if len(a) != len(b):
        raise DimensionError("spectra must have the same length")
    if not 0 <= k <= len(a):
        raise DimensionError(f"need 0 <= k <= d, got k={k}")
    if k == 0:
        return Fraction(1)
    if kind == "rect":
        return sum((coef * mu * mv for coef, mu, mv, _ in _rect_terms(a, b, k, group)), Fraction(0))
    return _ek_weingarten_symmetric(kind, a, b, k, group)


# -- route 3: Haar Monte Carlo --------------------------------------------------------


@dataclass
class MatrixSample:
    entries: object
    provenance: str
    seed: int | None = None

    def unitarity_error(self) -> float:
        m = np.asarray(self.entries, dtype=complex)
        return float(np.max(np.abs(m @ m.conj().T - np.eye(m.shape[0]))))


def haar_batch(group: str, d: int, n: int, rng: np.random.Generator) -> np.ndarray:
    """``n`` Haar matrices as an ``(n, d, d)`` array.

    QR of a Gaussian matrix, with each column rescaled by the phase (sign) of
    the matching diagonal entry of R so the factorization is unique.
    """
    if group == UNITARY:
        z = (rng.standard_normal((n, d, d)) + 1j * rng.standard_normal((n, d, d))) / np.sqrt(2)
    elif group == ORTHOGONAL:
        z = rng.standard_normal((n, d, d))
    else:
        raise ValueError(f"Haar sampling supports unitary and orthogonal, got {group!r}")
    q, r = np.linalg.qr(z)
    diag = np.diagonal(r, axis1=-2, axis2=-1)
    phase = diag / np.abs(diag)
    return q * phase[:, None, :]


def sample_haar(group: str, d: int, rng_seed: int) -> MatrixSample:
    if d < 1:
        raise DimensionError("d must be at least 1")
    rng = np.random.default_rng(rng_seed)
    return MatrixSample(haar_batch(group, d, 1, rng)[0], "haar_" + group, rng_seed)


def elementary_from_eigenvalues(eigs: np.ndarray) -> np.ndarray:
    """``e_0..e_d`` for each row of an ``(n, d)`` eigenvalue array."""
    n, d = eigs.shape
    e = np.zeros((n, d + 1), dtype=eigs.dtype)
    e[:, 0] = 1
    for j in range(d):
        e[:, 1 : j + 2] = e[:, 1 : j + 2] + eigs[:, j : j + 1] * e[:, 0 : j + 1]
    return e


def sample_elementary(kind: str, a: Sequence[float], b: Sequence[float], group: str, n: int, rng: np.random.Generator) -> np.ndarray:
    """``(n, d+1)`` real array of ``e_k`` for independent Haar rotations."""
    A = np.diag(np.asarray(a, dtype=float))
    B = np.diag(np.asarray(b, dtype=float))
    d = len(a)
    u = haar_batch(group, d, n, rng)
    if kind == "add":
        w = A + u @ B @ np.conj(np.swapaxes(u, -1, -2))
        eigs = np.linalg.eigvalsh(w).astype(complex)
    elif kind == "mult":
        w = A @ u @ B @ np.conj(np.swapaxes(u, -1, -2))
        eigs = np.linalg.eigvals(w)
    else:
        v = haar_batch(group, d, n, rng)
        m = A + u @ B @ v
        eigs = np.linalg.eigvalsh(m @ np.conj(np.swapaxes(m, -1, -2))).astype(complex)
    return elementary_from_eigenvalues(eigs).real


@dataclass
class EstimateReport:
    kind: str
    group: str
    d: int
    k: int
    estimate: float
    standard_error: float
    n_samples: int
    closed_form: Fraction
    z_score: float
    seed: int

    @property
    def passed(self) -> bool:
        """Within 4 standard errors, plus a relative floor for variance-free coefficients."""
        exact = float(self.closed_form)
        slack = 4 * self.standard_error + RELATIVE_TOLERANCE * max(1.0, abs(exact))
        return abs(self.estimate - exact) <= slack

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "method": "mc",
            "group": self.group,
            "d": self.d,
            "k": self.k,
            "value": {"estimate": self.estimate, "stderr": self.standard_error, "z": self.z_score},
            "expected": format_rational(self.closed_form),
            "n_samples": self.n_samples,
            "pass": self.passed,
            "seed": self.seed,
        }


def _z(estimate: float, se: float, exact: float) -> float:
    # an SE at rounding level means the coefficient does not vary (e.g. det A det B)
    if se > RELATIVE_TOLERANCE * max(1.0, abs(exact)):
        return (estimate - exact) / se
    return 0.0 if abs(estimate - exact) <= RELATIVE_TOLERANCE * max(1.0, abs(exact)) else math.inf


def montecarlo_all(kind: str, spec_a, spec_b, group: str, n_samples: int, rng_seed: int) -> list[EstimateReport]:
    """Monte Carlo estimates of ``E e_k`` for every ``k``, sharing one set of samples."""
    _check_kind(kind)
    if n_samples < 100:
        raise ValueError("n_samples must be at least 100")
    a, b = _as_spectrum(spec_a), _as_spectrum(spec_b)
    if any(isinstance(x, complex) for x in a.eigenvalues + b.eigenvalues):
        raise ValueError("Monte Carlo accepts real spectra only")
    d = a.d
    rng = np.random.default_rng(rng_seed)
    samples = sample_elementary(kind, [float(x) for x in a.eigenvalues], [float(x) for x in b.eigenvalues], group, n_samples, rng)
    reports = []
    for k in range(d + 1):
        col = samples[:, k]
        est = math.fsum(col) / n_samples
        se = float(np.std(col, ddof=1)) / math.sqrt(n_samples)
        exact = expected_ek_formula(kind, a, b, k)
        reports.append(EstimateReport(kind, group, d, k, est, se, n_samples, exact, _z(est, se, float(exact)), rng_seed))
    return reports


def expected_ek_montecarlo(kind: str, spec_a, spec_b, group: str, k: int, n_samples: int, rng_seed: int) -> EstimateReport:
    return montecarlo_all(kind, spec_a, spec_b, group, n_samples, rng_seed)[k]


def entry_moment_montecarlo(group: str, d: int, power: int, n_samples: int, rng_seed: int, absolute: bool = True) -> tuple[float, float]:
    """Mean and standard error of ``|u_11|^power`` (or ``u_11^power``) over Haar samples."""
    rng = np.random.default_rng(rng_seed)
    u11 = haar_batch(group, d, n_samples, rng)[:, 0, 0]
    vals = np.abs(u11) ** power if absolute else (u11**power).real
    return float(np.mean(vals)), float(np.std(vals, ddof=1)) / math.sqrt(n_samples)


# -- assembling polynomials ---------------------------------------------------------------


def input_polynomials(kind: str, spec_a, spec_b) -> tuple[PolynomialFF, PolynomialFF]:
    """``c_x(A), c_x(B)`` (or ``c_x(AA*), c_x(BB*)`` for ``rect``)."""
    a, b = _as_spectrum(spec_a), _as_spectrum(spec_b)
    if kind == "rect":
        a, b = a.squared(), b.squared()
    return char_poly_from_spectrum(a), char_poly_from_spectrum(b)


def convolution_of(kind: str, spec_a, spec_b) -> PolynomialFF:
    p, q = input_polynomials(kind, spec_a, spec_b)
    return CONVOLUTIONS[kind](p, q)


def expected_charpoly(
    kind: str,
    spec_a,
    spec_b,
    g: GroupSpec,
    method: str,
    n_samples: int = 20000,
    rng_seed: int = 0,
    budget: int = DEFAULT_BUDGET,
):
    """``Σ_k x^{d-k} (-1)^k E e_k`` as a polynomial (exact methods) or per-k reports (``mc``)."""
    _check_kind(kind)
    d = _as_spectrum(spec_a).d
    if _as_spectrum(spec_b).d != d or g.d != d:
        raise DimensionError("spectra and group must share the dimension d")
    if method == "exact":
        return PolynomialFF(d, expected_ek_exact_all(kind, spec_a, spec_b, g, budget))
    if method == "weingarten":
        return PolynomialFF(d, tuple(expected_ek_weingarten(kind, spec_a, spec_b, k, g.kind) for k in range(d + 1)))
    if method == "mc":
        return montecarlo_all(kind, spec_a, spec_b, g.kind, n_samples, rng_seed)
    raise ValueError(f"unknown method {method!r}")


# -- seeded battery ---------------------------------------------------------------------


@dataclass(frozen=True)
class BatteryConfig:
    n_cases: int = 30
    dims: tuple[int, ...] = (3, 4)
    groups: tuple[str, ...] = (UNITARY, ORTHOGONAL)
    kinds: tuple[str, ...] = KINDS
    n_samples: int = 20000
    seed: int = 20190701
    low: int = -3
    high: int = 3


@dataclass(frozen=True)
class BatteryCase:
    kind: str
    group: str
    spec_a: tuple[Fraction, ...]
    spec_b: tuple[Fraction, ...]
    seed: int


def random_spectrum(rng: random.Random, d: int, low: int, high: int, nonnegative: bool = False) -> tuple[Fraction, ...]:
    lo = max(low, 0) if nonnegative else low
    return tuple(Fraction(rng.randint(lo, high)) for _ in range(d))


def make_battery(config: BatteryConfig = BatteryConfig()) -> list[BatteryCase]:
    rng = random.Random(config.seed)
    combos = list(itertools.product(config.kinds, config.groups, config.dims))
    cases = []
    for idx in range(config.n_cases):
        kind, group, d = combos[idx % len(combos)]
        nonneg = kind == "rect"
        a = random_spectrum(rng, d, config.low, config.high, nonneg)
        b = random_spectrum(rng, d, config.low, config.high, nonneg)
        cases.append(BatteryCase(kind, group, a, b, config.seed + 1000 * (idx + 1)))
    return cases


def _run_case(case: BatteryCase, n_samples: int) -> list[EstimateReport]:
    return montecarlo_all(case.kind, case.spec_a, case.spec_b, case.group, n_samples, case.seed)


def run_battery(config: BatteryConfig = BatteryConfig(), threads: int = 1) -> list[EstimateReport]:
    """Every case of the battery; order and values do not depend on ``threads``."""
    cases = make_battery(config)
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(_run_case, cases, [config.n_samples] * len(cases)))
    else:
        chunks = [_run_case(c, config.n_samples) for c in cases]
    return [r for chunk in chunks for r in chunk]


# -- reports --------------------------------------------------------------------------------


@dataclass
class ConvolutionReport:
    kind: str
    method: str
    d: int
    group: str
    entries: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(e["pass"] for e in self.entries)

    def to_json(self) -> dict:
        return {
            "target": "convolution",
            "kind": self.kind,
            "method": self.method,
            "d": self.d,
            "group": self.group,
            "n_entries": len(self.entries),
            "pass": self.passed,
            "entries": self.entries,
        }


def _convolution_case(kind: str, method: str, group: GroupSpec, case: int, a: tuple, b: tuple,
                      seed: int, n_samples: int, budget: int) -> list[dict]:
    d = group.d
    target = convolution_of(kind, a, b)
    header = {"kind": kind, "method": method, "d": d, "case": case,
              "spec_a": [format_rational(x) for x in a], "spec_b": [format_rational(x) for x in b]}
    entries = []
    if method == "mc":
        for r in montecarlo_all(kind, a, b, group.kind, n_samples, seed * 7919 + case):
            entry = dict(header, **r.to_json())
            entry["expected"] = format_rational(target.a[r.k])
            entries.append(entry)
        return entries
    if method == "exact-signed":
        values = expected_ek_exact_all(kind, a, b, group, budget)
    else:
        values = tuple(expected_ek_weingarten(kind, a, b, k, group.kind) for k in range(d + 1))
    for k in range(d + 1):
        entries.append(
            dict(header, k=k, value=format_rational(values[k]), expected=format_rational(target.a[k]),
                 **{"pass": values[k] == target.a[k], "seed": seed})
        )
    return entries


def verify_convolution(
    kind: str,
    method: str,
    d: int,
    group: GroupSpec | None = None,
    n_cases: int = 5,
    seed: int = 0,
    n_samples: int = 20000,
    budget: int = DEFAULT_BUDGET,
    threads: int = 1,
) -> ConvolutionReport:
    """Compare ``E e_k`` from one route with the convolution coefficients on random spectra.

    ``method`` is ``exact-signed`` (finite H_d^s), ``weingarten`` or ``mc``
    (U_d or O_d).
    """
    _check_kind(kind)
    if method not in ("exact-signed", "weingarten", "mc"):
        raise ValueError(f"unknown method {method!r}")
    if method == "exact-signed":
        group = group or GroupSpec(SIGNED, d, 2)
        if not group.is_finite:
            raise ValueError("exact-signed needs a finite signed:<s> group")
        factor = math.factorial(d) if kind == "rect" else 1
        _budget_check(group.order() * factor, budget)
    else:
        group = group or GroupSpec(UNITARY, d)
        if group.kind == SIGNED:
            raise ValueError(f"method {method} needs the unitary or orthogonal group")
    if group.d != d:
        raise DimensionError("group dimension differs from d")
    rng = random.Random(seed)
    specs = []
    for _ in range(n_cases):
        a = random_spectrum(rng, d, -3, 3, kind == "rect")
        b = random_spectrum(rng, d, -3, 3, kind == "rect")
        specs.append((a, b))
    args = [(kind, method, group, case, a, b, seed, n_samples, budget) for case, (a, b) in enumerate(specs)]
    if threads > 1 and n_cases > 1:
        with ProcessPoolExecutor(max_workers=min(threads, n_cases)) as pool:
            chunks = list(pool.map(_convolution_case, *zip(*args)))
    else:
        chunks = [_convolution_case(*x) for x in args]
    report = ConvolutionReport(kind, method, d, group.label())
    for chunk in chunks:
        report.entries.extend(chunk)
    return report


def battery_json(reports: list[EstimateReport], config: BatteryConfig) -> dict:
    return {
        "target": "battery",
        "config": asdict(config),
        "pass": all(r.passed for r in reports),
        "entries": [r.to_json() for r in reports],
    }
