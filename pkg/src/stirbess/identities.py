"""Exact verification suite for the summation identities connecting
Stirling, Lah, Bessel, and generalized Stirling numbers.

Each identity is registered declaratively (id, case iterator, evaluator for
both sides) so the programmatic API, the CLI, and the tests share one source
of truth.  Verification is exact: both sides of every case are integers,
rationals, or polynomials over the rationals, and a failure report carries
the first counterexample in lexicographic case order, which is stable across
runs and worker counts.
"""

from __future__ import annotations

import csv
import io
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from . import families, triangles
from .exactnum import (
    binomial_int,
    binomial_rat,
    factorial,
    falling_factorial_poly,
    rising_factorial_poly,
)
from .polys import UniPoly
from .triangles import Triangles


@dataclass(frozen=True)
class Counterexample:
    params: tuple
    lhs: str
    rhs: str


@dataclass(frozen=True)
class IdentityReport:
    identity_id: str
    range_desc: str
    status: str  # "pass" | "fail"
    counterexample: Counterexample | None
    elapsed_ms: float

    @property
    def passed(self) -> bool:
        return self.status == "pass"


@dataclass(frozen=True)
class Identity:
    ident: str
    summary: str
    describe_range: Callable[[int], str]
    cases: Callable[[int], Iterable[tuple]]
    evaluate: Callable[[tuple, Triangles], tuple]


def _execute(identity: Identity, n_max: int, tables: Triangles | None) -> IdentityReport:
    t = tables if tables is not None else triangles.DEFAULT
    start = time.perf_counter()
    counterexample = None
    for params in identity.cases(n_max):
        lhs, rhs = identity.evaluate(params, t)
        if lhs != rhs:
            counterexample = Counterexample(params=params, lhs=str(lhs), rhs=str(rhs))
            break
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    return IdentityReport(
        identity_id=identity.ident,
        range_desc=identity.describe_range(n_max),
        status="fail" if counterexample else "pass",
        counterexample=counterexample,
        elapsed_ms=elapsed_ms,
    )


# ---------------------------------------------------------------------------
# case iterators

def _cases_nk(n_max: int):
    for n in range(1, n_max + 1):
        for k in range(1, n + 1):
            yield (n, k)


def _cases_n(n_max: int):
    for n in range(1, n_max + 1):
        yield (n,)


def _cases_n_from0(n_max: int):
    for n in range(0, n_max + 1):
        yield (n,)


# ---------------------------------------------------------------------------
# the two Stirling-to-Bessel summations

def _thm1_eval(params, t):
    n, k = params
    lhs = sum(t.stirling1(n, i) * t.stirling2(i, k) * (-2) ** (n - i) for i in range(k, n + 1))
    return lhs, t.bessel_b(n, k)


def _thm2_eval(params, t):
    n, k = params
    lhs = sum(t.stirling1(n, i) * t.stirling2(i, k) * (-2) ** (i - k) for i in range(k, n + 1))
    rhs = t.bessel_B(n, k)
    return lhs, -rhs if (n - k) % 2 else rhs


def _inversion_eval(params, t):
    n, k = params
    lhs = sum(t.stirling1(n, i) * t.stirling2(i, k) * (-1) ** (n - i) for i in range(k, n + 1))
    return lhs, 1 if n == k else 0


def _lah_eval(params, t):
    n, k = params
    lhs = sum(t.stirling1(n, i) * t.stirling2(i, k) for i in range(k, n + 1))
    return lhs, t.lah(n, k)


# ---------------------------------------------------------------------------
# Bessel pair structure

def _duality_cases(n_max: int):
    for n in range(1, n_max + 1):
        for m in range(1, n + 1):
            for order in ("Bb", "bB"):
                yield (n, m, order)


def _duality_eval(params, t):
    n, m, order = params
    if order == "Bb":
        lhs = sum(t.bessel_B(n, k) * t.bessel_b(k, m) for k in range(m, n + 1))
    else:
        lhs = sum(t.bessel_b(n, k) * t.bessel_B(k, m) for k in range(m, n + 1))
    return lhs, 1 if m == n else 0


def _cross_bb_cases(n_max: int):
    for n in range(1, n_max + 1):
        for k in range(0, n + 1):
            yield (n, k)


def _cross_bb_eval(params, t):
    n, k = params
    lhs = t.bessel_B(n, k)
    if (n - k) % 2:
        lhs = -lhs
    return lhs, t.bessel_b(k + 1, 2 * k - n + 1)


def _bessel_coeff_eval(params, t):
    n, k = params
    y = families.bessel_poly(n - 1)
    c = y.coefficient(n - k)  # coefficient of x^(n-k) in y_{n-1}(-x)
    return Fraction(t.bessel_b(n, k)), -c if (n - k) % 2 else c


# ---------------------------------------------------------------------------
# generalized Stirling structure

GS_SCALING_FACTORS = (Fraction(-2), Fraction(-1), Fraction(1, 2), Fraction(3))
GS_SCALING_S = (Fraction(-2), Fraction(-1, 2), Fraction(0), Fraction(1))

GS_COMPOSITION_TRIPLES: tuple[tuple[Fraction, Fraction, Fraction], ...] = (
    (Fraction(-2), Fraction(-1), Fraction(1)),
    (Fraction(-1, 2), Fraction(1, 2), Fraction(1)),
    (Fraction(1), Fraction(2), Fraction(1)),
    (Fraction(3, 2), Fraction(-1, 2), Fraction(2)),
    (Fraction(0), Fraction(1), Fraction(3)),
    (Fraction(-3), Fraction(1, 3), Fraction(1)),
    (Fraction(5, 2), Fraction(3), Fraction(1, 2)),
)

SSS2_Z_VALUES = (Fraction(1), Fraction(-2), Fraction(-1, 2), Fraction(3), Fraction(2, 3))

# sorted so case iteration is lexicographic in (n, k, family)
_GS_SPECIAL = ("bessel-B", "bessel-b", "stirling1", "stirling2")
_GS_SPECIAL_PARAMS = {
    "stirling1": (Fraction(1), Fraction(1)),
    "stirling2": (Fraction(0), Fraction(1)),
    "bessel-b": (Fraction(2), Fraction(-1)),
    "bessel-B": (Fraction(-1), Fraction(1)),
}


def _gs_scaling_cases(n_max: int):
    for n in range(0, n_max + 1):
        for k in range(0, n + 1):
            for a in GS_SCALING_FACTORS:
                for s in GS_SCALING_S:
                    yield (n, k, a, s)


def _gs_scaling_eval(params, t):
    n, k, a, s = params
    return t.gs(s, a, n, k), a ** (n - k) * t.gs(s, 1, n, k)


def _gs_special_cases(n_max: int):
    for n in range(0, n_max + 1):
        for k in range(0, n + 1):
            for fam in _GS_SPECIAL:
                yield (n, k, fam)


def _gs_special_eval(params, t):
    n, k, fam = params
    s, h = _GS_SPECIAL_PARAMS[fam]
    ref = {
        "stirling1": t.stirling1,
        "stirling2": t.stirling2,
        "bessel-b": t.bessel_b,
        "bessel-B": t.bessel_B,
    }[fam](n, k)
    return t.gs(s, h, n, k), ref


def validate_composition_triple(s: Fraction, nu: Fraction, sigma: Fraction) -> None:
    if nu == 0:
        raise ValueError("composition triple requires nu != 0")
    if sigma <= 0:
        raise ValueError("composition triple requires sigma > 0")
    if nu == sigma:
        raise ValueError("composition triple requires nu != sigma (inner parameter)")


def _gs_composition_identity(triples: Sequence[tuple]) -> Identity:
    # triples sorted so the case order is lexicographic in (n, k, triple)
    norm = tuple(sorted((Fraction(s), Fraction(nu), Fraction(sg)) for s, nu, sg in triples))
    for s, nu, sg in norm:
        validate_composition_triple(s, nu, sg)

    def cases(n_max: int):
        for n in range(0, n_max + 1):
            for k in range(0, n + 1):
                for triple in norm:
                    yield (n, k, triple)

    def evaluate(params, t):
        n, k, (s, nu, sigma) = params
        lhs = t.gs(s / nu, nu, n, k)
        inner_s = s / (nu - sigma)
        outer_s = (s + sigma - nu) / sigma
        rhs = sum(
            t.gs(inner_s, nu - sigma, n, i) * t.gs(outer_s, sigma, i, k)
            for i in range(k, n + 1)
        )
        return lhs, rhs

    return Identity(
        ident="gs-composition",
        summary="GS_{s/nu;nu}(n,k) = sum_i GS_{s/(nu-sigma);nu-sigma}(n,i) GS_{(s+sigma-nu)/sigma;sigma}(i,k)",
        describe_range=lambda n: f"0<=k<=n<={n}, {len(norm)} (s,nu,sigma) triples",
        cases=cases,
        evaluate=evaluate,
    )


def _sss2_identity(z_values: Sequence) -> Identity:
    zs = tuple(sorted(Fraction(z) for z in z_values))
    for z in zs:
        if z == 0 or z == -1:
            raise ValueError("z must avoid 0 and -1")

    def cases(n_max: int):
        for n in range(0, n_max + 1):
            for k in range(0, n + 1):
                for z in zs:
                    yield (n, k, z)

    def evaluate(params, t):
        n, k, z = params
        lhs = sum(t.stirling1(n, i) * t.stirling2(i, k) * z**i for i in range(k, n + 1))
        rhs = z**n * t.gs(1 / (z + 1), (z + 1) / z, n, k)
        return lhs, rhs

    return Identity(
        ident="sss2",
        summary="sum_i s1(n,i) s2(i,k) z^i = z^n GS_{1/(z+1);(z+1)/z}(n,k)",
        describe_range=lambda n: f"0<=k<=n<={n}, z in {{{', '.join(str(z) for z in zs)}}}",
        cases=cases,
        evaluate=evaluate,
    )


# ---------------------------------------------------------------------------
# binomial-side machinery

def default_hagen_rothe_cases() -> tuple[tuple, ...]:
    """The a=1, b=2, c=N+k-1, n=k family for N <= 15 plus assorted cases."""
    cases = []
    for big_n in range(1, 16):
        for k in range(0, 9):
            cases.append((Fraction(1), 2, Fraction(big_n + k - 1), k))
    cases.extend(
        [
            (Fraction(1), 2, Fraction(4), 2),
            (Fraction(2), 0, Fraction(5), 4),
            (Fraction(1, 2), 1, Fraction(7, 2), 5),
            (Fraction(3), -1, Fraction(2), 2),
            (Fraction(5, 3), 3, Fraction(11, 3), 6),
        ]
    )
    return tuple(cases)


def _hagen_rothe_identity(cases: Sequence[tuple]) -> Identity:
    norm = tuple((Fraction(a), int(b), Fraction(c), int(n)) for a, b, c, n in cases)
    for a, b, c, n in norm:
        if n < 0:
            raise ValueError("n must be nonnegative")
        if any(a + b * k == 0 for k in range(n + 1)):
            raise ValueError(f"case {(a, b, c, n)} hits a + b*k = 0")

    def evaluate(params, t):
        a, b, c, n = params
        lhs = sum(
            (a / (a + b * k)) * binomial_rat(a + b * k, k) * binomial_rat(c - b * k, n - k)
            for k in range(n + 1)
        )
        return lhs, binomial_rat(a + c, n)

    return Identity(
        ident="hagen-rothe",
        summary="sum_k a/(a+bk) C(a+bk,k) C(c-bk,n-k) = C(a+c,n)",
        describe_range=lambda _n: f"{len(norm)} cases (a,b,c,n)",
        cases=lambda _n: iter(norm),
        evaluate=evaluate,
    )


def _gould_cases(n_max: int):
    for n in range(1, n_max + 1):
        for k in range(0, n // 2 + 1):
            yield (n, k)


def _gould_eval(params, t):
    n, k = params
    lhs = sum(binomial_int(n, 2 * m) * binomial_int(m, k) for m in range(k, n // 2 + 1))
    rhs = Fraction(2) ** (n - 2 * k - 1) * binomial_int(n - k, k) * Fraction(n, n - k)
    return lhs, rhs


def _lemma_keys_cases(n_max: int):
    for n in range(1, n_max + 1):
        for j in range(1, n + 1):
            for i in range(1, j + 1):
                yield ("a", n, j, i)
    for k in range(1, n_max + 1):
        for j in range(1, k + 1):
            yield ("b", k, j)


def _lemma_keys_eval(params, t):
    if params[0] == "a":
        _, n, j, i = params
        lhs = t.stirling1(n + 1, n - j + i + 1) * binomial_int(n - j + i, i - 1)
        rhs = sum(
            t.stirling1(k, i) * t.stirling1(n - k + 1, n - j + 1) * binomial_int(n, k - 1)
            for k in range(i, j + 1)
        )
    else:
        _, k, j = params
        lhs = sum(t.stirling2(i, j) * binomial_int(k, i - 1) for i in range(j, k + 1))
        rhs = j * t.stirling2(k + 1, j + 1)
    return lhs, rhs


# ---------------------------------------------------------------------------
# polynomial-level identities

def _pn_closed_eval(params, t):
    (n,) = params
    return families.pn_recurrence(n), families.pn_closed_form(n, t)


# sorted so case iteration is lexicographic in (n, label)
_SPECIAL_Z_LABELS = ("z=-1", "z=-1/2", "z=-2", "z=-2-chebyshev", "z=0", "z=1")


def _pn_special_cases(n_max: int):
    for n in range(1, n_max + 1):
        for label in _SPECIAL_Z_LABELS:
            yield (n, label)


def _pn_special_eval(params, t):
    n, label = params
    z = Fraction(-2) if label == "z=-2-chebyshev" else Fraction(label.removeprefix("z="))
    lhs = families.pn_recurrence(n).substitute_z(z)
    if label == "z=0":
        rhs = UniPoly.x()
    elif label == "z=-1":
        rhs = UniPoly.monomial(n)
    elif label == "z=1":
        rhs = families.pn_z_one(n)
    elif label == "z=-1/2":
        rhs = families.pn_skew_bm(n)
    elif label == "z=-2":
        rhs = families.pn_z_minus2(n)
    else:
        rhs = families.pn_via_chebyshev(n)
    return lhs, rhs


def _moment_bessel_eval(params, t):
    (n,) = params
    scale = Fraction(1, 2 ** (n - 1) * factorial(n - 1))
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(1, n + 1):
        c = factorial(k - 1) * t.bessel_b(n, k)
        coeffs[k] = scale * (-c if (n - k) % 2 else c)
    return families.pn_skew_bm(n), UniPoly(coeffs)


def _theta_b_eval(params, t):
    (n,) = params
    lhs = families.reverse_bessel_poly(n - 1).shifted(1)
    coeffs = [0] * (n + 1)
    for k in range(1, n + 1):
        b = t.bessel_b(n, k)
        coeffs[k] = -b if (n - k) % 2 else b
    return lhs, UniPoly(coeffs)


def _rising_eval(params, t):
    (n,) = params
    rhs = UniPoly(t.stirling1(n, k) for k in range(n + 1))
    return rising_factorial_poly(n), rhs


def _falling_eval(params, t):
    (n,) = params
    acc = UniPoly()
    for k in range(n + 1):
        acc = acc + t.stirling2(n, k) * falling_factorial_poly(k)
    return acc, UniPoly.monomial(n)


# ---------------------------------------------------------------------------
# registry

def _build_registry() -> dict[str, Identity]:
    nk = lambda n: f"1<=k<=n<={n}"
    nk0 = lambda n: f"0<=k<=n<={n}"
    entries = [
        Identity("thm1", "sum_i s1(n,i) s2(i,k) (-2)^(n-i) = b(n,k)", nk, _cases_nk, _thm1_eval),
        Identity("thm2", "sum_i s1(n,i) s2(i,k) (-2)^(i-k) = (-1)^(n-k) B(n,k)", nk, _cases_nk, _thm2_eval),
        Identity("inversion", "sum_i s1(n,i) s2(i,k) (-1)^(n-i) = [n = k]", nk, _cases_nk, _inversion_eval),
        Identity("lah", "sum_i s1(n,i) s2(i,k) = L(n,k)", nk, _cases_nk, _lah_eval),
        Identity("duality", "sum_k B(n,k) b(k,m) = sum_k b(n,k) B(k,m) = [m = n]",
                 lambda n: f"1<=m<=n<={n}, both orders", _duality_cases, _duality_eval),
        Identity("cross-bb", "(-1)^(n-k) B(n,k) = b(k+1, 2k-n+1)",
                 lambda n: f"1<=n<={n}, 0<=k<=n", _cross_bb_cases, _cross_bb_eval),
        Identity("gs-scaling", "GS_{s;a}(n,k) = a^(n-k) GS_{s;1}(n,k)",
                 lambda n: f"0<=k<=n<={n}, a/s grids", _gs_scaling_cases, _gs_scaling_eval),
        Identity("gs-special", "GS specializations: s1, s2, b, B",
                 nk0, _gs_special_cases, _gs_special_eval),
        _gs_composition_identity(GS_COMPOSITION_TRIPLES),
        _sss2_identity(SSS2_Z_VALUES),
        Identity("lemma-keys", "Stirling convolution keys (two parts)",
                 lambda n: f"parts a: 1<=i<=j<=n<={n}; b: 1<=j<=k<={n}",
                 _lemma_keys_cases, _lemma_keys_eval),
        _hagen_rothe_identity(default_hagen_rothe_cases()),
        Identity("gould-3-120", "sum_m C(n,2m) C(m,k) = 2^(n-2k-1) C(n-k,k) n/(n-k)",
                 lambda n: f"1<=n<={n}, 0<=k<=floor(n/2)", _gould_cases, _gould_eval),
        Identity("moment-bessel", "P_n(x,-1/2) as a signed Bessel-number sum",
                 lambda n: f"1<=n<={n}", _cases_n, _moment_bessel_eval),
        Identity("theta-b", "x theta_{n-1}(x) = sum_k (-1)^(n-k) x^k b(n,k)",
                 lambda n: f"1<=n<={n}", _cases_n, _theta_b_eval),
        Identity("pn-closed", "recurrence and closed form of P_n(x,z) agree",
                 lambda n: f"1<=n<={n}", _cases_n, _pn_closed_eval),
        Identity("pn-special-z", "P_n slices at z in {0,-1,1,-1/2,-2} match closed forms",
                 lambda n: f"1<=n<={n}, 6 slice checks", _pn_special_cases, _pn_special_eval),
        Identity("rising-factorial", "coefficients of x(x+1)...(x+n-1) are s1(n,k)",
                 lambda n: f"0<=n<={n}", _cases_n_from0, _rising_eval),
        Identity("falling-factorial", "x^n = sum_k s2(n,k) x(x-1)...(x-k+1)",
                 lambda n: f"0<=n<={n}", _cases_n_from0, _falling_eval),
        Identity("bessel-b-coeff", "b(n,k) is the x^(n-k) coefficient of y_{n-1}(-x)",
                 nk, _cases_nk, _bessel_coeff_eval),
    ]
    return {e.ident: e for e in entries}


REGISTRY = _build_registry()
IDENTITY_IDS: tuple[str, ...] = tuple(REGISTRY)


# ---------------------------------------------------------------------------
# public verifiers

def _verify(ident: str, n_max: int, tables: Triangles | None) -> IdentityReport:
    if n_max < 1:
        raise ValueError("n_max must be positive")
    return _execute(REGISTRY[ident], n_max, tables)


def verify_thm1(n_max: int, tables: Triangles | None = None) -> IdentityReport:
    return _verify("thm1", n_max, tables)


def verify_thm2(n_max: int, tables: Triangles | None = None) -> IdentityReport:
    return _verify("thm2", n_max, tables)


def verify_inversion(n_max: int, tables: Triangles | None = None) -> IdentityReport:
    return _verify("inversion", n_max, tables)


def verify_lah(n_max: int, tables: Triangles | None = None) -> IdentityReport:
    return _verify("lah", n_max, tables)


def verify_bessel_duality(n_max: int, tables: Triangles | None = None) -> IdentityReport:
    return _verify("duality", n_max, tables)


def verify_cross_relation(n_max: int, tables: Triangles | None = None) -> IdentityReport:
    return _verify("cross-bb", n_max, tables)


def verify_gs_scaling(n_max: int, tables: Triangles | None = None) -> IdentityReport:
    return _verify("gs-scaling", n_max, tables)


def verify_gs_specializations(n_max: int, tables: Triangles | None = None) -> IdentityReport:
    return _verify("gs-special", n_max, tables)


def verify_gs_composition(
    n_max: int, triples: Sequence[tuple] | None = None, tables: Triangles | None = None
) -> IdentityReport:
    if n_max < 1:
        raise ValueError("n_max must be positive")
    ident = REGISTRY["gs-composition"] if triples is None else _gs_composition_identity(triples)
    return _execute(ident, n_max, tables)


def verify_sss2(
    n_max: int, z_values: Sequence | None = None, tables: Triangles | None = None
) -> IdentityReport:
    if n_max < 1:
        raise ValueError("n_max must be positive")
    ident = REGISTRY["sss2"] if z_values is None else _sss2_identity(z_values)
    return _execute(ident, n_max, tables)


def verify_lemma_keys(n_max: int, tables: Triangles | None = None) -> IdentityReport:
    return _verify("lemma-keys", n_max, tables)


def verify_hagen_rothe(
    cases: Sequence[tuple] | None = None, tables: Triangles | None = None
) -> IdentityReport:
    ident = REGISTRY["hagen-rothe"] if cases is None else _hagen_rothe_identity(cases)
    return _execute(ident, 1, tables)


def verify_gould_3_120(n_max: int, tables: Triangles | None = None) -> IdentityReport:
    return _verify("gould-3-120", n_max, tables)


def verify_moment_bessel_form(n_max: int, tables: Triangles | None = None) -> IdentityReport:
    return _verify("moment-bessel", n_max, tables)


def verify_theta_b(n_max: int, tables: Triangles | None = None) -> IdentityReport:
    return _verify("theta-b", n_max, tables)


def verify_pn_closed_form(n_max: int, tables: Triangles | None = None) -> IdentityReport:
    return _verify("pn-closed", n_max, tables)


def verify_pn_special_z(n_max: int, tables: Triangles | None = None) -> IdentityReport:
    return _verify("pn-special-z", n_max, tables)


def verify_rising_factorial(n_max: int, tables: Triangles | None = None) -> IdentityReport:
    return _verify("rising-factorial", n_max, tables)


def verify_falling_factorial(n_max: int, tables: Triangles | None = None) -> IdentityReport:
    return _verify("falling-factorial", n_max, tables)


def verify_bessel_coefficients(n_max: int, tables: Triangles | None = None) -> IdentityReport:
    return _verify("bessel-b-coeff", n_max, tables)


# ---------------------------------------------------------------------------
# suite runner

def _resolve_selection(selection) -> tuple[str, ...]:
    if isinstance(selection, str):
        if selection == "all":
            return IDENTITY_IDS
        selection = [selection]
    ids = list(selection)
    if not ids:
        raise ValueError("empty identity selection")
    unknown = [i for i in ids if i not in REGISTRY]
    if unknown:
        raise ValueError("unknown identity id: " + ", ".join(unknown))
    chosen = set(ids)
    return tuple(i for i in IDENTITY_IDS if i in chosen)


def _run_default(ident: str, n_max: int) -> IdentityReport:
    return _execute(REGISTRY[ident], n_max, None)


def run_suite(
    n_max: int,
    selection="all",
    tables: Triangles | None = None,
    jobs: int | None = 1,
) -> list[IdentityReport]:
    """Run the selected verifiers; reports come back in registry order.

    ``selection`` is "all" or an iterable of identity ids.  With jobs > 1
    the identities fan out over a process pool (only when no custom tables
    are injected); results are independent of the worker count.
    """
    if n_max < 1:
        raise ValueError("n_max must be positive")
    ids = _resolve_selection(selection)
    if jobs is None:
        jobs = os.cpu_count() or 1
    if jobs > 1 and tables is None and len(ids) > 1:
        with ProcessPoolExecutor(max_workers=min(jobs, len(ids))) as pool:
            futures = {ident: pool.submit(_run_default, ident, n_max) for ident in ids}
            return [futures[ident].result() for ident in ids]
    return [_execute(REGISTRY[ident], n_max, tables) for ident in ids]


# ---------------------------------------------------------------------------
# serialization

def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def report_to_dict(report: IdentityReport, include_elapsed: bool = False) -> dict:
    d: dict = {
        "id": report.identity_id,
        "range": report.range_desc,
        "status": report.status,
    }
    if report.counterexample is not None:
        d["counterexample"] = {
            "params": _jsonable(report.counterexample.params),
            "lhs": report.counterexample.lhs,
            "rhs": report.counterexample.rhs,
        }
    if include_elapsed:
        d["elapsed_ms"] = round(report.elapsed_ms, 3)
    return d


def reports_to_json(reports: Iterable[IdentityReport], include_elapsed: bool = False) -> str:
    return json.dumps([report_to_dict(r, include_elapsed) for r in reports], indent=2)


def reports_to_csv(reports: Iterable[IdentityReport], include_elapsed: bool = False) -> str:
    buf = io.StringIO()
    fields = ["id", "range", "status", "params", "lhs", "rhs"]
    if include_elapsed:
        fields.append("elapsed_ms")
    writer = csv.writer(buf)
    writer.writerow(fields)
    for r in reports:
        ce = r.counterexample
        row = [
            r.identity_id,
            r.range_desc,
            r.status,
            json.dumps(_jsonable(ce.params)) if ce else "",
            ce.lhs if ce else "",
            ce.rhs if ce else "",
        ]
        if include_elapsed:
            row.append(f"{r.elapsed_ms:.3f}")
        writer.writerow(row)
    return buf.getvalue()
