"""Freeness of fractional ideals over their associated orders.

Everything here is integer combinatorics in the ideal exponent h: with b
the break number and p^n the degree, define

    d_h(j) = floor((b*j + b - h) / p^n)
    w_h(j) = min { d_h(i + j) - d_h(i) : digits of i and j sum below p per slot }

computed after normalizing h into the window 0 <= b - h <= p^n - 1 (the
tables are wrong outside it; d_h(0) can go negative).  The ideal of
exponent h is free over its associated order iff w_h = d_h pointwise, and
the order itself has the basis T^{-w_h(j)} times the digit-j generator
monomial of the dual algebra.  Those basis statements are licensed only
when the action has a scaffold of tolerance at least 2*p^n - 1, so
assoc_order_basis refuses below that unless forced (and then marks the
output untrusted).

All results are invariant under h -> h + p^n (the ideals differ by the
unit T).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .base_arith import PadicDigits, padic_digits, res_mod
from .field_tower import ExtensionParams
from .hopf_dual import DualElement, z_monomial
from .hopf_primal import HopfParams
from .scaffold import tolerance


class InsufficientToleranceError(ValueError):
    """Raised when a basis claim is requested below the licensing tolerance."""


@dataclass(frozen=True)
class IdealIndex:
    """An ideal exponent h with its normalized representative and T-shift.

    h_raw = h_norm + m*p^n with 0 <= b - h_norm <= p^n - 1.  The window
    normalization can disagree with floor(h/p^n) as a definition of m for
    b > 1; m here is always derived from the window.
    """

    h_raw: int
    h_norm: int
    m: int

    @classmethod
    def normalize(cls, h: int, ext: ExtensionParams) -> "IdealIndex":
        pn = ext.degree
        h_norm = ext.b - res_mod(ext.b - h, pn)
        m, check = divmod(h - h_norm, pn)
        assert check == 0
        return cls(h, h_norm, m)


def _as_index(h: Union[int, IdealIndex], ext: ExtensionParams) -> IdealIndex:
    return h if isinstance(h, IdealIndex) else IdealIndex.normalize(h, ext)


def d_h(h: Union[int, IdealIndex], j: int, ext: ExtensionParams) -> int:
    """floor((b*j + b - h)/p^n) at the normalized h (floor toward -inf)."""
    idx = _as_index(h, ext)
    return (ext.b * j + ext.b - idx.h_norm) // ext.degree


def w_h(h: Union[int, IdealIndex], j: int, ext: ExtensionParams) -> int:
    """Minimum of d_h(i+j) - d_h(i) over i with digitwise i_s + j_s <= p-1."""
    idx = _as_index(h, ext)
    if not 0 <= j < ext.degree:
        raise ValueError(f"j = {j} out of range [0, {ext.degree})")
    jd = padic_digits(j, ext.p, ext.n)
    best: Optional[int] = None
    for i in range(ext.degree):
        idd = padic_digits(i, ext.p, ext.n)
        if any(a + b_ > ext.p - 1 for a, b_ in zip(idd, jd)):
            continue
        delta = d_h(idx, i + j, ext) - d_h(idx, i, ext)
        if best is None or delta < best:
            best = delta
    assert best is not None  # i = 0 always qualifies
    return best


def noether_criterion(ext: ExtensionParams) -> Optional[int]:
    """Least m in [1, n] with res(b) dividing p^m - 1, if any.

    When it exists the ring of integers is known to be free over its
    associated order; the converse direction goes through the h = 0
    freeness test instead.
    """
    rb = res_mod(ext.b, ext.degree)
    for m in range(1, ext.n + 1):
        if (ext.p**m - 1) % rb == 0:
            return m
    return None


def freeness_b1(h: int, ext: ExtensionParams) -> bool:
    """Closed-form freeness test for b = 1: res(h - 2) > (p^n - 3)/2."""
    if ext.b != 1:
        raise ValueError("closed form only applies when b = 1")
    return 2 * res_mod(h - 2, ext.degree) > ext.degree - 3


def generator_count(h: Union[int, IdealIndex], ext: ExtensionParams) -> int:
    """Number of generators of the ideal over its associated order.

    Free ideals need one.  Otherwise counts the indices i in [0, p^n)
    such that d_h(i) > d_h(i-j) + w_h(j) for every j > 0 with digitwise
    j_s <= i_s.  The j-range is interpreted as (0, p^n - 1] with the
    digit condition; the count and its witnesses are exposed so the
    interpretation can be audited.
    """
    idx = _as_index(h, ext)
    d_tab = [d_h(idx, j, ext) for j in range(ext.degree)]
    w_tab = [w_h(idx, j, ext) for j in range(ext.degree)]
    if d_tab == w_tab:
        return 1
    return len(_generator_witnesses(idx, ext, d_tab, w_tab))


def _generator_witnesses(
    idx: IdealIndex, ext: ExtensionParams, d_tab: list[int], w_tab: list[int]
) -> list[int]:
    pn = ext.degree
    witnesses = []
    for i in range(pn):
        idd = padic_digits(i, ext.p, ext.n)
        ok = True
        for j in range(1, pn):
            jd = padic_digits(j, ext.p, ext.n)
            if any(js > is_ for js, is_ in zip(jd, idd)):
                continue
            if not d_tab[i] > d_tab[i - j] + w_tab[j]:
                ok = False
                break
        if ok:
            witnesses.append(i)
    return witnesses


@dataclass(frozen=True)
class BasisEntry:
    """One associated-order basis record: generator digits and T-shift."""

    digits: PadicDigits
    shift: int

    def to_json_dict(self) -> dict:
        return {"digits": list(self.digits), "shift": self.shift}


@dataclass(frozen=True)
class FreenessReport:
    """Full per-ideal verdict: tables, freeness, generators, basis data."""

    h: IdealIndex
    d_table: tuple[int, ...]
    w_table: tuple[int, ...]
    free: bool
    witness_j: Optional[int]
    generator_count: int
    basis: tuple[BasisEntry, ...]

    def to_json_dict(self, ext: ExtensionParams, hopf: Optional[HopfParams] = None) -> dict:
        out = {
            "p": ext.p,
            "n": ext.n,
            "b": ext.b,
            "h_raw": self.h.h_raw,
            "h_norm": self.h.h_norm,
            "m": self.h.m,
            "d": list(self.d_table),
            "w": list(self.w_table),
            "free": self.free,
            "witness_j": self.witness_j,
            "generator_count": self.generator_count,
            "basis": [entry.to_json_dict() for entry in self.basis],
        }
        if hopf is not None:
            out["r"] = hopf.r
            out["f_val"] = hopf.f.valuation()
        return out


def is_free(h: Union[int, IdealIndex], ext: ExtensionParams) -> FreenessReport:
    """Classify the ideal of exponent h: free iff the d and w tables agree.

    When free, a single generator of valuation b (shifted by T^m) does
    the job; when not, witness_j records the first disagreeing index.
    """
    idx = _as_index(h, ext)
    pn = ext.degree
    d_tab = tuple(d_h(idx, j, ext) for j in range(pn))
    w_tab = tuple(w_h(idx, j, ext) for j in range(pn))
    free = d_tab == w_tab
    witness = next((j for j in range(pn) if d_tab[j] != w_tab[j]), None)
    count = 1 if free else len(_generator_witnesses(idx, ext, list(d_tab), list(w_tab)))
    basis = tuple(
        BasisEntry(padic_digits(j, ext.p, ext.n), -w_tab[j]) for j in range(pn)
    )
    return FreenessReport(idx, d_tab, w_tab, free, witness, count, basis)


@dataclass(frozen=True)
class AssocOrderBasis:
    """Associated-order basis listing, possibly force-emitted below tolerance."""

    h: IdealIndex
    entries: tuple[BasisEntry, ...]
    tolerance: Optional[int]
    trusted: bool

    def to_json_dict(self, ext: ExtensionParams, hopf: HopfParams) -> dict:
        return {
            "p": ext.p,
            "n": ext.n,
            "r": hopf.r,
            "b": ext.b,
            "f_val": hopf.f.valuation(),
            "h_raw": self.h.h_raw,
            "h_norm": self.h.h_norm,
            "m": self.h.m,
            "tolerance": self.tolerance,
            "trusted": self.trusted,
            "basis": [entry.to_json_dict() for entry in self.entries],
        }


def assoc_order_basis(
    h: Union[int, IdealIndex],
    ext: ExtensionParams,
    hopf: HopfParams,
    *,
    force: bool = False,
) -> AssocOrderBasis:
    """Basis records T^{-w_h(j)} * (digit-j z-monomial) for the associated order.

    Requires a scaffold of tolerance >= 2*p^n - 1; below that the listing
    is not a theorem and the call refuses unless force=True, in which
    case the result is marked untrusted.
    """
    idx = _as_index(h, ext)
    tol = tolerance(ext, hopf)
    licensed = tol is not None and tol >= 2 * ext.degree - 1
    if not licensed and not force:
        raise InsufficientToleranceError(
            f"tolerance {tol} below 2*p^n - 1 = {2 * ext.degree - 1}; "
            "pass force=True to emit an untrusted listing"
        )
    entries = tuple(
        BasisEntry(padic_digits(j, ext.p, ext.n), -w_h(idx, j, ext))
        for j in range(ext.degree)
    )
    return AssocOrderBasis(idx, entries, tol, licensed)


def materialize_basis_entry(entry: BasisEntry, hopf: HopfParams) -> DualElement:
    """The dual element T^{shift} * z_monomial(digits) for a basis record."""
    from .base_arith import LaurentPoly

    return z_monomial(entry.digits, hopf).scale(LaurentPoly.monomial(hopf.p, entry.shift))
