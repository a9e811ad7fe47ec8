"""Golden spectral graph classification and the closed-form results around it.

Covers the golden-ratio identities, GSG verdicts, Ramanujan tests, closed-form
spectra for every family with a known formula (cross-checked against the
numeric eigensolver), block-design and regular-graph thresholds, and the
spectral-gap growth of the GSG families.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import numpy as np

from .errors import DomainError, NotAvailableError, ParameterError
from .graph import (FamilySpec, Graph, build_family,
                    regular_degree)
from .spectra import (Spectrum, SpectralRatios, adjacency_spectrum,
                      spectral_ratios)

PHI = (1.0 + math.sqrt(5.0)) / 2.0
SQRT5 = math.sqrt(5.0)

EXACT_TOL = 1e-8
ALMOST_TOL = 0.05
VERIFY_TOL = 1e-7


# --------------------------------------------------------------------------
# Golden ratio
# --------------------------------------------------------------------------

def golden_constant() -> float:
    return PHI


def fibonacci(k: int) -> int:
    """F_k with F_1 = F_2 = 1 (and F_0 = 0)."""
    if k < 0:
        raise ParameterError(f"Fibonacci index must be >= 0, got {k}")
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def lucas(k: int) -> int:
    """L_k with L_0 = 2, L_1 = 1."""
    if k < 0:
        raise ParameterError(f"Lucas index must be >= 0, got {k}")
    a, b = 2, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def continued_fraction(depth: int) -> Fraction:
    """Truncation 1 + 1/(1 + 1/(...)) with ``depth`` nested divisions."""
    if depth < 0:
        raise ParameterError(f"depth must be >= 0, got {depth}")
    value = Fraction(1)
    for _ in range(depth):
        value = 1 + 1 / value
    return value


@dataclass(frozen=True)
class GoldenIdentities:
    phi: float
    quadratic_residual: float
    series_terms: int
    series_sum: float
    series_error: float
    cf_depth: int
    cf_value: float
    cf_error: float
    fibonacci_ratio: float

    @property
    def ok(self) -> bool:
        return (abs(self.quadratic_residual) <= 1e-12 and self.series_error <= 1e-10
                and self.cf_error < 1e-10)


def golden_identities(terms: int = 60, depth: int = 50) -> GoldenIdentities:
    """Check phi^2 - phi - 1 = 0, sum_{k>=1} phi^-k = phi, and convergence of
    the all-ones continued fraction (equivalently F_{n+1}/F_n) to phi."""
    series = math.fsum(PHI ** -k for k in range(1, terms + 1))
    cf = continued_fraction(depth)
    return GoldenIdentities(
        phi=PHI,
        quadratic_residual=PHI * PHI - PHI - 1.0,
        series_terms=terms,
        series_sum=series,
        series_error=abs(series - PHI),
        cf_depth=depth,
        cf_value=float(cf),
        cf_error=abs(float(cf) - PHI),
        fibonacci_ratio=fibonacci(depth + 2) / fibonacci(depth + 1),
    )


# --------------------------------------------------------------------------
# Classification
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class GsgVerdict:
    """``deviation`` is max(|w1 - phi|, |w2 - phi|), or None when a ratio is
    undefined (then the verdict is not applicable and never golden)."""

    w1: float | None
    w2: float | None
    deviation: float | None
    is_golden: bool
    tol: float

    @property
    def applicable(self) -> bool:
        return self.deviation is not None


def _ratios_of(obj) -> SpectralRatios:
    if isinstance(obj, SpectralRatios):
        return obj
    return spectral_ratios(obj)


def golden_deviation(w1: float | None, w2: float | None) -> float | None:
    if w1 is None or w2 is None:
        return None
    return max(abs(w1 - PHI), abs(w2 - PHI))


def classify_gsg(obj, tol: float = EXACT_TOL) -> GsgVerdict:
    """GSG verdict for a Graph, Spectrum, SpectralRatios or raw eigenvalues."""
    r = _ratios_of(obj)
    dev = golden_deviation(r.w1, r.w2)
    return GsgVerdict(w1=r.w1, w2=r.w2, deviation=dev,
                      is_golden=dev is not None and dev <= tol, tol=tol)


# --------------------------------------------------------------------------
# Ramanujan
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class RamanujanReport:
    """Both readings of the Ramanujan property for a d-regular graph.

    ``strict_pass`` bounds every eigenvalue with |lambda| < d;
    ``second_eigenvalue_pass`` bounds lambda_2 alone.
    """

    d: int
    lambda_nontrivial: float
    lambda2: float
    bound: float
    strict_pass: bool
    second_eigenvalue_pass: bool


def ramanujan_check(g: Graph, *, spectrum: Spectrum | None = None,
                    atol: float = 1e-9) -> RamanujanReport:
    d = regular_degree(g)
    if d < 1:
        raise DomainError("Ramanujan check needs degree >= 1")
    s = spectrum if spectrum is not None else adjacency_spectrum(g)
    vals = s.values
    # eigenvalues at +-d (within noise) are the trivial ones
    nontrivial = np.abs(vals)[np.abs(vals) < d - 1e-8]
    lam = float(nontrivial.max()) if nontrivial.size else 0.0
    bound = 2.0 * math.sqrt(d - 1)
    l2 = s.lambda2 if s.n > 1 else float(vals[0])
    return RamanujanReport(d=d, lambda_nontrivial=lam, lambda2=l2, bound=bound,
                           strict_pass=lam <= bound + atol,
                           second_eigenvalue_pass=l2 <= bound + atol)


@dataclass(frozen=True)
class RamanujanScanRow:
    k: int
    n: int
    d: int
    lambda2: float
    lambda_nontrivial: float
    bound: float
    second_eigenvalue_pass: bool
    strict_pass: bool


def ramanujan_scan(series: str, ks: Iterable[int]) -> list[RamanujanScanRow]:
    """Numeric Ramanujan tests along a GSG series (``c5_expansion``,
    ``k_cover_c3`` or ``k_cover_c5``)."""
    rows = []
    for k in ks:
        g = build_family(FamilySpec.of(series, k=k))
        rep = ramanujan_check(g)
        rows.append(RamanujanScanRow(k, g.n, rep.d, rep.lambda2, rep.lambda_nontrivial,
                                     rep.bound, rep.second_eigenvalue_pass,
                                     rep.strict_pass))
    return rows


def pass_boundary(rows: list[RamanujanScanRow], strict: bool = False) -> int:
    """Largest k such that every row up to k passes (0 if the first fails)."""
    best = 0
    for row in sorted(rows, key=lambda r: r.k):
        ok = row.strict_pass if strict else row.second_eigenvalue_pass
        if not ok:
            break
        best = row.k
    return best


# --------------------------------------------------------------------------
# Closed-form spectra
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class DesignSpec:
    """Symmetric 2-(v, d, lambda*) design: d elements per block and blocks
    per element, lambda* blocks through each pair."""

    d: int
    lambda_star: int | None = None
    v: int | None = None

    def __post_init__(self):
        if self.d < 1:
            raise ParameterError(f"design needs d >= 1, got {self.d}")
        if self.lambda_star is not None and not 0 < self.lambda_star < self.d:
            raise ParameterError(f"design needs 0 < lambda* < d, got "
                                 f"lambda*={self.lambda_star}, d={self.d}")
        if self.v is not None and self.v < 2:
            raise ParameterError(f"design needs v >= 2, got {self.v}")

    def __str__(self):
        return f"design(d={self.d}; lambda*={self.lambda_star}; v={self.v})"


def _cycle_groups(n):
    groups = [(2.0, 1)]
    for j in range(1, (n - 1) // 2 + 1):
        groups.append((2.0 * math.cos(2.0 * math.pi * j / n), 2))
    if n % 2 == 0:
        groups.append((-2.0, 1))
    return groups


def closed_form_spectrum(spec, *, printed: bool = False) -> Spectrum:
    """Spectrum from the exact formula for ``spec``.

    ``printed=True`` only affects ``line_complete_bipartite``: it returns
    the commonly printed variant with eigenvalue ``a - b`` in place of the
    correct ``a - 2`` (they coincide when b = 2).
    """
    if isinstance(spec, DesignSpec):
        if spec.lambda_star is None or spec.v is None:
            raise ParameterError("design spectrum needs lambda* and v")
        r = math.sqrt(spec.d - spec.lambda_star)
        return Spectrum.from_groups([(spec.d, 1), (r, spec.v - 1),
                                     (-r, spec.v - 1), (-spec.d, 1)])
    f, p = spec.family, spec.params
    if f == "cycle":
        if p["n"] < 3:
            raise ParameterError("cycle needs n >= 3")
        groups = _cycle_groups(p["n"])
    elif f == "path":
        n = p["n"]
        groups = [(2.0 * math.cos(j * math.pi / (n + 1)), 1) for j in range(1, n + 1)]
    elif f == "complete":
        n = p["n"]
        groups = [(n - 1, 1), (-1, n - 1)]
    elif f in ("complete_bipartite", "star"):
        a, b = (p["a"], p["b"]) if f == "complete_bipartite" else (1, p["q"])
        r = math.sqrt(a * b)
        groups = [(r, 1), (0.0, a + b - 2), (-r, 1)]
    elif f == "complete_multipartite":
        n, c = p["n"], p["c"]
        if n % c:
            raise ParameterError(f"multipartite needs c | n, got n={n}, c={c}")
        groups = [(n - n // c, 1), (0.0, n - c), (-(n // c), c - 1)]
    elif f == "cocktail_party":
        n = p["n"]
        groups = [(2 * n - 2, 1), (0.0, n), (-2, n - 1)]
    elif f == "c5_expansion":
        k = p["k"]
        groups = [(2 * k, 1), (k / PHI, 2), (0.0, 5 * (k - 1)), (-k * PHI, 2)]
    elif f in ("k_cover_c3", "k_cover_c5"):
        k = p["k"]
        if f == "k_cover_c3":
            minus_one, paired = 3 * k * k - 6 * k + 5, 3 * k - 3
        else:
            minus_one, paired = 5 * k * k - 10 * k + 5, 5 * k - 3
        groups = [(3 * k - 1, 1), (-1.0, minus_one),
                  (-1.0 + k * (1 + SQRT5) / 2, paired),
                  (-1.0 + k * (1 - SQRT5) / 2, paired)]
    elif f == "line_complete_bipartite":
        a, b = p["a"], p["b"]
        if a < b:
            a, b = b, a
        second = a - b if printed else a - 2
        groups = [(a + b - 2, 1), (second, b - 1), (b - 2, a - 1),
                  (-2, a * b - a - b + 1)]
    else:
        raise NotAvailableError(f"no closed-form spectrum for family {f!r}")
    return Spectrum.from_groups(groups)


@dataclass(frozen=True)
class VerificationReport:
    spec: object
    closed_form: Spectrum
    numeric: Spectrum | None
    max_abs_deviation: float | None
    multiplicities_match: bool
    tol: float
    problem: str | None = None

    @property
    def passed(self) -> bool:
        return (self.problem is None and self.max_abs_deviation is not None
                and self.max_abs_deviation <= self.tol and self.multiplicities_match)


def compare_spectra(closed: Spectrum, numeric: Spectrum, spec=None,
                    tol: float = VERIFY_TOL) -> VerificationReport:
    if closed.n != numeric.n:
        return VerificationReport(spec, closed, numeric, None, False, tol,
                                  problem=f"length mismatch: closed form has {closed.n} "
                                          f"eigenvalues, graph has {numeric.n}")
    dev = float(np.abs(closed.values - numeric.values).max())
    cg, ng = closed.groups, numeric.groups
    mult_ok = len(cg) == len(ng) and all(
        cm == nm and abs(cv - nv) <= max(tol, closed.group_tol)
        for (cv, cm), (nv, nm) in zip(cg, ng))
    return VerificationReport(spec, closed, numeric, dev, mult_ok, tol)


def verify_closed_form(spec, *, tol: float = VERIFY_TOL, printed: bool = False,
                       method: str = "auto") -> VerificationReport:
    """Build the graph for ``spec``, compute its spectrum numerically and
    compare it with the closed form."""
    if isinstance(spec, DesignSpec):
        raise NotAvailableError("design incidence graphs have no constructor")
    closed = closed_form_spectrum(spec, printed=printed)
    numeric = adjacency_spectrum(build_family(spec), method=method)
    return compare_spectra(closed, numeric, spec, tol)


# --------------------------------------------------------------------------
# Cycles, designs, regular graphs
# --------------------------------------------------------------------------

def cycle_golden_size(parity: str) -> float:
    """Real cycle length at which w1 would equal phi, for the odd and even
    cycle spectra. Only the odd branch lands on an integer (5)."""
    if parity == "odd":
        return math.pi / math.asin(math.sqrt(4 * PHI ** 2 - 1) / (2 * PHI ** 2))
    if parity == "even":
        return math.pi / math.asin(1 / PHI)
    raise ParameterError(f"parity must be 'odd' or 'even', got {parity!r}")


@dataclass(frozen=True)
class DesignAnalysis:
    d: int
    lambda_star: int | None
    w1: float | None
    lambda_star_golden: float
    golden_rational_part: int
    golden_sqrt5_part: int
    integer_solution_exists: bool
    golden_lambda_negative: bool


def design_analysis(d: int, lambda_star: int | None = None) -> DesignAnalysis:
    """w1 of a symmetric-design incidence graph and the pair count lambda*
    that would make it golden.

    The golden value is d - d^2/phi^6 = (d - 9d^2) + 4d^2 sqrt(5), kept as
    an exact pair of integers so integrality and sign are decided without
    rounding.
    """
    if d < 2:
        raise ParameterError(f"design analysis needs d >= 2, got {d}")
    w1 = None
    if lambda_star is not None:
        if lambda_star >= d:
            raise ParameterError(f"lambda* must be < d, got lambda*={lambda_star}, d={d}")
        r = math.sqrt(d - lambda_star)
        w1 = (d + r) / (d - r)
    rational, surd = d - 9 * d * d, 4 * d * d
    # sign of rational + surd * sqrt(5), with surd > 0
    positive = rational >= 0 or 5 * surd * surd > rational * rational
    return DesignAnalysis(
        d=d,
        lambda_star=lambda_star,
        w1=w1,
        lambda_star_golden=d - d * d / PHI ** 6,
        golden_rational_part=rational,
        golden_sqrt5_part=surd,
        integer_solution_exists=surd == 0 and rational > 0,
        golden_lambda_negative=not positive,
    )


def design_golden_scan(d_values: Iterable[int] = range(2, 18)) -> list[int]:
    """Block sizes d admitting a positive integer golden lambda*."""
    return [d for d in d_values if design_analysis(d).integer_solution_exists]


@dataclass(frozen=True)
class RegularGsgThreshold:
    d: int
    eps: float
    lambda2_required: float
    lambda2_lower_bound: float
    ramanujan_compatible: bool


def _ramanujan_compatible(d: int) -> bool:
    # d/phi^3 <= 2 sqrt(d-1)  <=>  d^2 - 36(d-1) <= 16 sqrt(5) (d-1), exactly
    if d < 2:
        return False
    lhs = d * d - 36 * (d - 1)
    return lhs <= 0 or lhs * lhs <= 1280 * (d - 1) ** 2


def regular_gsg_threshold(d: int, eps: float = 0.0) -> RegularGsgThreshold:
    """Second eigenvalue a d-regular graph with lambda_n = -d + eps needs to
    be golden, the eps-free lower bound d/phi^3, and whether that bound is
    compatible with the Ramanujan bound 2 sqrt(d - 1)."""
    if d < 1:
        raise ParameterError(f"degree must be >= 1, got {d}")
    if not 0 <= eps < 2 * d:
        raise ParameterError(f"eps must lie in [0, 2d) = [0, {2 * d}), got {eps}")
    return RegularGsgThreshold(
        d=d,
        eps=eps,
        lambda2_required=(d * (PHI - 1) + eps) / (PHI + 1),
        lambda2_lower_bound=d / PHI ** 3,
        ramanujan_compatible=_ramanujan_compatible(d),
    )


def ramanujan_gsg_degree_limit(d_max: int = 10000) -> int:
    """Largest degree for which a regular GSG can still be Ramanujan."""
    ok = [d for d in range(2, d_max + 1) if _ramanujan_compatible(d)]
    return max(ok)


# --------------------------------------------------------------------------
# Spectral gap growth
# --------------------------------------------------------------------------

SERIES = ("c5_expansion", "k_cover_c3", "k_cover_c5")


@dataclass(frozen=True)
class GapRow:
    k: int
    n: int
    gap: float
    gap_printed: float
    agrees: bool


def _printed_gap(series: str, n: int) -> float:
    if series == "c5_expansion":
        return n / (PHI ** 2 + 1)
    if series == "k_cover_c3":
        return (PHI ** 2 + 1) / math.sqrt(3) * math.sqrt(n)
    return (PHI ** 2 + 1) / math.sqrt(5) * math.sqrt(n)


def gap_growth(series: str, ks: Iterable[int], rtol: float = 1e-9) -> list[GapRow]:
    """Spectral gap along a GSG series from its closed-form spectrum, next to
    the commonly quoted growth law in n."""
    if series not in SERIES:
        raise ParameterError(f"series must be one of {SERIES}, got {series!r}")
    rows = []
    for k in ks:
        if k < 1:
            raise ParameterError(f"k must be >= 1, got {k}")
        s = closed_form_spectrum(FamilySpec.of(series, k=k))
        gap = s.lambda1 - s.lambda2
        printed = _printed_gap(series, s.n)
        rows.append(GapRow(k, s.n, gap, printed,
                           abs(gap - printed) <= rtol * max(1.0, abs(gap))))
    return rows
