"""Signature series: cumulative multiplicity ratios and their exact targets.

For the supported quotient singularities the cumulative ratio of the
multiplicity of each indecomposable module inside the reflexive symmetric
powers converges to dim/|G|; this module builds the exact rational series
and reports the distance to that target.  The differential variant runs the
same machinery because the module of Zariski differentials corresponds to
the same fundamental representation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from symsig.characters import irreducible_table
from symsig.groups import GroupSpec, MatrixGroup, make_group
from symsig.sympow import multiplicity_series


class Unsupported(ValueError):
    """No signature series for this specification."""


def default_qmax(order: int) -> int:
    return 2000 if order <= 24 else 5000


@dataclass
class SignatureSeries:
    """Per-q multiplicities, slice dimensions, and cumulative exact ratios."""

    spec: GroupSpec
    variant: str
    labels: tuple[str, ...]
    dims: tuple[int, ...]
    group_order: int
    alphas: list[list[int]]
    betas: list[int]
    focus: int = 0
    _cums: dict = field(default_factory=dict, repr=False)

    @property
    def qmax(self) -> int:
        return len(self.betas) - 1

    def alpha_sequence(self, i: int) -> list[int]:
        return [row[i] for row in self.alphas]

    def cumulative_ratios(self, i: int) -> list[Fraction]:
        if i not in self._cums:
            ratios = []
            num = 0
            den = 0
            for row, b in zip(self.alphas, self.betas):
                num += row[i]
                den += b
                ratios.append(Fraction(num, den))
            self._cums[i] = ratios
        return self._cums[i]

    def final_ratio(self, i: int | None = None) -> Fraction:
        return self.cumulative_ratios(self.focus if i is None else i)[-1]

    def target(self, i: int | None = None) -> Fraction:
        i = self.focus if i is None else i
        return Fraction(self.dims[i], self.group_order)

    def abs_error(self, i: int | None = None) -> Fraction:
        i = self.focus if i is None else i
        return abs(self.final_ratio(i) - self.target(i))

    def summary(self) -> dict:
        return {
            "variant": self.variant,
            "module": self.labels[self.focus],
            "qmax": self.qmax,
            "target": str(self.target()),
            "final_ratio": str(self.final_ratio()),
            "abs_error": float(self.abs_error()),
        }


def _build_series(group: MatrixGroup, qmax: int, variant: str, focus: int) -> SignatureSeries:
    table = irreducible_table(group)
    if not 0 <= focus < len(table.irreducibles):
        raise Unsupported(f"irreducible index {focus} out of range")
    alphas = multiplicity_series(group, qmax)
    betas = [q + 1 for q in range(qmax + 1)]
    return SignatureSeries(
        spec=group.spec,
        variant=variant,
        labels=table.labels,
        dims=table.dims,
        group_order=group.order,
        alphas=alphas,
        betas=betas,
        focus=focus,
    )


def signature_estimate(spec: GroupSpec, irr_index: int = 0, qmax: int | None = None) -> SignatureSeries:
    """Cumulative ratio series for the multiplicity of one irreducible.

    The representation driving the series is the fundamental one: for the
    det-1 groups it corresponds to the second syzygy of the residue field,
    and for the diagonal 1/n(1,a) groups it is the default faithful choice
    (the limit does not depend on which faithful representation is used).
    """
    group = make_group(spec)
    if qmax is None:
        qmax = default_qmax(group.order)
    return _build_series(group, qmax, "symmetric", irr_index)


def differential_signature_estimate(spec: GroupSpec, qmax: int | None = None, irr_index: int = 0) -> SignatureSeries:
    """Same series with the module of Zariski differentials as the input.

    For two-dimensional quotient singularities that module is the
    fundamental module, so the numbers coincide with the symmetric variant.
    """
    group = make_group(spec)
    if qmax is None:
        qmax = default_qmax(group.order)
    return _build_series(group, qmax, "differential", irr_index)


def cesaro_ratio(a_seq, b_seq) -> list[Fraction]:
    """Prefix-sum ratios (sum a)/(sum b) as exact rationals; b must be positive."""
    if len(a_seq) != len(b_seq):
        raise ValueError("sequences must have equal length")
    out = []
    num = Fraction(0)
    den = Fraction(0)
    for a, b in zip(a_seq, b_seq):
        b = Fraction(b)
        if b <= 0:
            raise ValueError("denominator sequence must be positive")
        num += Fraction(a)
        den += b
        out.append(num / den)
    return out


@dataclass
class FrkReport:
    """Free-rank sequence with its exact termwise accumulation points."""

    values: list[int]
    period: int
    accumulation_points: tuple[Fraction, ...]

    @property
    def oscillates(self) -> bool:
        return len(self.accumulation_points) > 1


def _structure_period(group: MatrixGroup) -> int:
    period = 2
    if group.diagonal_weights is not None:
        period = math.lcm(period, group.conductor)
    else:
        for el in group.elements:
            period = math.lcm(period, el.order)
    return period


def frk_sequence(spec: GroupSpec, qmax: int | None = None) -> FrkReport:
    """The free-rank sequence frk S^q = alpha_{0,q}, with oscillation data.

    Termwise, alpha_{0,q}/(q+1) accumulates at finitely many exact rationals
    (one per residue class of q modulo the structure period); they are
    extracted from the exact affine-plus-periodic shape of the sequence and
    validated against a second period.
    """
    group = make_group(spec)
    period = _structure_period(group)
    if qmax is None:
        qmax = max(default_qmax(group.order), 3 * period)
    series = _build_series(group, qmax, "symmetric", 0)
    values = series.alpha_sequence(0)
    points = set()
    if qmax >= 3 * period:
        for r in range(period):
            slope = values[r + period] - values[r]
            if values[r + 2 * period] - values[r + period] != slope:
                raise AssertionError("the sequence is not affine-plus-periodic")
            points.add(Fraction(slope, period))
    return FrkReport(values=values, period=period, accumulation_points=tuple(sorted(points)))
