"""Adjacency and Laplacian spectra, the two spectral ratios, and the
synchronizability and expansion quantities derived from them."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .eigen import eig_symmetric
from .errors import (DisconnectedGraphError, DomainError,
                     InsufficientSpectrumError)
from .graph import Graph, graph_props, is_connected, regular_degree

GROUP_TOL = 1e-6
# Relative to max(1, |lambda_1|): a gap or bulk below this counts as zero.
DEGENERATE_TOL = 1e-10


class Spectrum:
    """Eigenvalues sorted non-increasing, with multiplicity grouping.

    Args:
        values: eigenvalues in any order.
        source: ``"numeric"`` or ``"closed_form"``.
        group_tol: absolute tolerance used to merge values into groups.
    """

    __slots__ = ("values", "source", "group_tol", "_groups")

    def __init__(self, values: Iterable[float], source: str = "numeric",
                 group_tol: float = GROUP_TOL):
        if not isinstance(values, (np.ndarray, list, tuple)):
            values = list(values)
        vals = np.sort(np.asarray(values, dtype=float).ravel())[::-1].copy()
        vals.flags.writeable = False
        self.values = vals
        self.source = source
        self.group_tol = group_tol
        self._groups = None

    @classmethod
    def from_groups(cls, groups: Iterable[tuple[float, int]],
                    source: str = "closed_form",
                    group_tol: float = GROUP_TOL) -> Spectrum:
        """Build from ``(value, multiplicity)`` pairs; zero multiplicities
        are dropped."""
        vals = []
        for value, mult in groups:
            if mult < 0:
                raise ValueError(f"negative multiplicity {mult} for {value}")
            vals.extend([float(value)] * int(mult))
        return cls(np.asarray(vals), source, group_tol)

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def groups(self) -> tuple[tuple[float, int], ...]:
        """``(representative, multiplicity)`` from the top down.

        A new group starts once a value is more than ``group_tol`` below the
        first member of the current group; the representative is the mean.
        """
        if self._groups is None:
            groups = []
            start = 0
            vals = self.values
            for i in range(1, len(vals) + 1):
                if i == len(vals) or vals[start] - vals[i] > self.group_tol:
                    groups.append((float(vals[start:i].mean()), i - start))
                    start = i
            self._groups = tuple(groups)
        return self._groups

    @property
    def lambda1(self) -> float:
        return float(self.values[0])

    @property
    def lambda2(self) -> float:
        if self.n < 2:
            raise InsufficientSpectrumError("spectrum has a single eigenvalue")
        return float(self.values[1])

    @property
    def lambda_n(self) -> float:
        return float(self.values[-1])

    def scaled(self, factor: float) -> Spectrum:
        return Spectrum(self.values * factor, self.source, self.group_tol)

    def __len__(self):
        return self.n

    def __repr__(self):
        body = ", ".join(f"{v:.6g}^{m}" for v, m in self.groups)
        return f"Spectrum({body}; {self.source})"


@dataclass(frozen=True)
class SpectralRatios:
    """Bulk-to-gap ratio ``w1`` and length-to-bulk ratio ``w2``.

    An undefined ratio (zero denominator) is ``None``; ``gap``, ``bulk`` and
    ``length`` are always reported.
    """

    w1: float | None
    w2: float | None
    gap: float
    bulk: float
    length: float

    @property
    def defined_w1(self) -> bool:
        return self.w1 is not None

    @property
    def defined_w2(self) -> bool:
        return self.w2 is not None


@dataclass(frozen=True)
class SyncReport:
    """Laplacian eigenratio ``q = mu_1 / mu_{n-1}``.

    ``matches_adjacency_form`` is only set for regular graphs: it records
    whether ``q`` agrees with ``(d - lambda_n) / (d - lambda_2)`` and with
    ``w1 * w2``.
    """

    q: float
    mu1: float
    mu_second_smallest: float
    matches_adjacency_form: bool | None


@dataclass(frozen=True)
class ExpansionBounds:
    lower: float
    upper: float
    gap: float
    degree: int


def _ensure_spectrum(obj) -> Spectrum:
    if isinstance(obj, Spectrum):
        return obj
    if isinstance(obj, Graph):
        return adjacency_spectrum(obj)
    return Spectrum(np.asarray(obj, dtype=float))


def adjacency_spectrum(g: Graph, *, method: str = "auto",
                       group_tol: float = GROUP_TOL) -> Spectrum:
    return Spectrum(eig_symmetric(g.adjacency_matrix(), method=method),
                    "numeric", group_tol)


def laplacian_spectrum(g: Graph, *, method: str = "auto",
                       group_tol: float = GROUP_TOL) -> Spectrum:
    """Eigenvalues of ``D - A``, sorted non-increasing (last one ~ 0)."""
    return Spectrum(eig_symmetric(g.laplacian_matrix(), method=method),
                    "numeric", group_tol)


def spectral_ratios(s) -> SpectralRatios:
    """Spectral ratios of a Spectrum (a Graph or raw values also work)."""
    s = _ensure_spectrum(s)
    if s.n < 2:
        raise InsufficientSpectrumError("spectral ratios need at least two eigenvalues")
    l1, l2, ln = s.lambda1, s.lambda2, s.lambda_n
    gap = l1 - l2
    bulk = l2 - ln
    length = gap + bulk
    zero = DEGENERATE_TOL * max(1.0, abs(l1))
    if gap <= zero:
        w1 = None
    else:
        w1 = bulk / gap if bulk > zero else 0.0
    w2 = length / bulk if bulk > zero else None
    return SpectralRatios(w1=w1, w2=w2, gap=gap, bulk=bulk, length=length)


def sync_ratio(g: Graph, *, method: str = "auto", rtol: float = 1e-9) -> SyncReport:
    """Laplacian eigenratio of a connected graph."""
    if g.n < 2:
        raise InsufficientSpectrumError("sync ratio needs at least two nodes")
    if not is_connected(g):
        raise DisconnectedGraphError("graph is disconnected: mu_{n-1} = 0")
    mu = laplacian_spectrum(g, method=method).values
    mu1, mu_low = float(mu[0]), float(mu[-2])
    q = mu1 / mu_low
    matches = None
    props = graph_props(g)
    if props.is_regular:
        adj = adjacency_spectrum(g, method=method)
        d = props.degree
        q_adj = (d - adj.lambda_n) / (d - adj.lambda2)
        ratios = spectral_ratios(adj)
        tol = rtol * max(1.0, q)
        matches = abs(q - q_adj) <= tol
        if ratios.w1 is not None and ratios.w2 is not None:
            matches = matches and abs(q - ratios.w1 * ratios.w2) <= tol
    return SyncReport(q=q, mu1=mu1, mu_second_smallest=mu_low,
                      matches_adjacency_form=matches)


def expansion_bounds(g: Graph, *, spectrum: Spectrum | None = None) -> ExpansionBounds:
    """Lower and upper bound ``(gap/2, sqrt(2 d gap))`` on the expansion
    factor of a connected d-regular graph."""
    d = regular_degree(g)
    if not is_connected(g):
        raise DisconnectedGraphError("expansion bounds need a connected graph")
    if g.n < 2:
        raise DomainError("expansion bounds need at least two nodes")
    s = spectrum if spectrum is not None else adjacency_spectrum(g)
    gap = s.lambda1 - s.lambda2
    return ExpansionBounds(lower=gap / 2.0, upper=math.sqrt(2.0 * d * gap),
                           gap=gap, degree=d)
