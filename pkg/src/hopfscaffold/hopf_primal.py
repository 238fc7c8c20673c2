"""The monogenic Hopf algebra K[t]/(t^{p^n}) with twisted comultiplication.

For parameters 0 < r < n <= 2r and a nonzero f in K the comultiplication
on the generator is

    t |-> t(x)1 + 1(x)t + f * sum_{l=1}^{p-1} t^{p^r l} (x) t^{p^r (p-l)} / (l!(p-l)!)

with counit t |-> 0 and antipode t |-> -t.  The constraint n <= 2r makes
t^{p^r} primitive (the twist terms of its comultiplication die under the
truncation t^{p^n} = 0), which is what coassociativity rests on.

Comultiplication of powers is obtained by direct tensor powering, since
the comultiplication is an algebra map; the closed multinomial expansion
of those powers is exercised independently by the test suite as a
differential oracle, not used here.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from .base_arith import LaurentPoly, inverse_mod_p, is_prime


@dataclass(frozen=True)
class HopfParams:
    """Parameters (p, n, r, f) with 0 < r < n <= 2r and f nonzero in K."""

    p: int
    n: int
    r: int
    f: LaurentPoly

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        if not 0 < self.r < self.n <= 2 * self.r:
            raise ValueError(f"need 0 < r < n <= 2r, got r={self.r}, n={self.n}")
        if self.f.p != self.p:
            raise ValueError("f lives over the wrong prime field")
        if self.f.is_zero():
            raise ValueError("f must be nonzero")

    @property
    def degree(self) -> int:
        return self.p**self.n


class HElement:
    """Element of K[t]/(t^{p^n}) as the tuple of t^0 ... t^{p^n - 1} coefficients."""

    __slots__ = ("p", "coeffs")

    def __init__(self, coeffs: Sequence[LaurentPoly]):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise ValueError("empty coefficient vector")
        p = coeffs[0].p
        if any(c.p != p for c in coeffs):
            raise ValueError("mixed moduli in coefficient vector")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *_):  # pragma: no cover
        raise AttributeError("HElement is immutable")

    @classmethod
    def zero(cls, hopf: HopfParams) -> "HElement":
        return cls([LaurentPoly.zero(hopf.p)] * hopf.degree)

    @classmethod
    def t_power(cls, i: int, hopf: HopfParams, coeff: LaurentPoly | int = 1) -> "HElement":
        if not 0 <= i < hopf.degree:
            raise ValueError(f"t-exponent {i} out of range [0, {hopf.degree})")
        c = LaurentPoly.constant(hopf.p, coeff) if isinstance(coeff, int) else coeff
        coeffs = [LaurentPoly.zero(hopf.p)] * hopf.degree
        coeffs[i] = c
        return cls(coeffs)

    def nonzero_items(self) -> Iterator[tuple[int, LaurentPoly]]:
        for i, c in enumerate(self.coeffs):
            if not c.is_zero():
                yield i, c

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __add__(self, other: "HElement") -> "HElement":
        if not isinstance(other, HElement):
            return NotImplemented
        if self.p != other.p or len(self.coeffs) != len(other.coeffs):
            raise ValueError("incompatible elements")
        return HElement([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, HElement)
            and self.p == other.p
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.p, self.coeffs))

    def __repr__(self) -> str:
        body = " + ".join(f"({c})*t^{i}" for i, c in self.nonzero_items()) or "0"
        return f"HElement({body})"


def h_mul(a: HElement, b: HElement) -> HElement:
    """Product in K[t]/(t^{p^n}): convolution truncated by the nilpotent t."""
    if a.p != b.p or len(a.coeffs) != len(b.coeffs):
        raise ValueError("incompatible elements")
    dim = len(a.coeffs)
    out = [LaurentPoly.zero(a.p) for _ in range(dim)]
    for i, ci in a.nonzero_items():
        for j, cj in b.nonzero_items():
            if i + j < dim:
                out[i + j] = out[i + j] + ci * cj
    return HElement(out)


def counit(h: HElement) -> LaurentPoly:
    """The counit, i.e. evaluation t -> 0: the constant coefficient."""
    return h.coeffs[0]


def antipode(h: HElement) -> HElement:
    """Substitute t -> -t (the stated antipode of the Hopf algebra).

    For p = 2 and n > r + 1 this map fails the antipode convolution
    axiom; see the test suite, which records the defect f * t^{2^{r+1}}
    rather than adjusting the map.
    """
    return HElement([c * ((-1) ** i) for i, c in enumerate(h.coeffs)])


class TensorHH:
    """Dense p^n x p^n matrix over K; entry (a, b) is the t^a (x) t^b coefficient."""

    __slots__ = ("p", "dim", "rows")

    def __init__(self, p: int, rows: Sequence[Sequence[LaurentPoly]]):
        rows = tuple(tuple(row) for row in rows)
        dim = len(rows)
        if any(len(row) != dim for row in rows):
            raise ValueError("tensor matrix must be square")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, *_):  # pragma: no cover
        raise AttributeError("TensorHH is immutable")

    @classmethod
    def zeros(cls, p: int, dim: int) -> "TensorHH":
        z = LaurentPoly.zero(p)
        return cls(p, [[z] * dim for _ in range(dim)])

    @classmethod
    def unit(cls, p: int, dim: int) -> "TensorHH":
        """The identity 1 (x) 1 of the tensor square algebra."""
        return cls.from_entries(p, dim, {(0, 0): LaurentPoly.one(p)})

    @classmethod
    def from_entries(cls, p: int, dim: int, entries: Mapping[tuple[int, int], LaurentPoly]) -> "TensorHH":
        z = LaurentPoly.zero(p)
        rows = [[z] * dim for _ in range(dim)]
        for (a, b), c in entries.items():
            rows[a][b] = c
        return cls(p, rows)

    def entry(self, a: int, b: int) -> LaurentPoly:
        return self.rows[a][b]

    def nonzero(self) -> Iterator[tuple[int, int, LaurentPoly]]:
        for a, row in enumerate(self.rows):
            for b, c in enumerate(row):
                if not c.is_zero():
                    yield a, b, c

    def is_zero(self) -> bool:
        return all(c.is_zero() for row in self.rows for c in row)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, TensorHH)
            and self.p == other.p
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.p, self.rows))

    def __repr__(self) -> str:
        body = ", ".join(f"({a},{b}): {c}" for a, b, c in self.nonzero()) or "0"
        return f"TensorHH[{self.dim}]({body})"


def delta_t(hopf: HopfParams) -> TensorHH:
    """Comultiplication of the generator t as a tensor matrix."""
    p = hopf.p
    entries: dict[tuple[int, int], LaurentPoly] = {
        (1, 0): LaurentPoly.one(p),
        (0, 1): LaurentPoly.one(p),
    }
    pr = p**hopf.r
    for ell in range(1, p):
        denom = 1
        for k in range(2, ell + 1):
            denom = denom * k % p
        for k in range(2, p - ell + 1):
            denom = denom * k % p
        coeff = hopf.f * inverse_mod_p(denom, p)
        entries[(pr * ell, pr * (p - ell))] = coeff
    return TensorHH.from_entries(p, hopf.degree, entries)


def tensor_mul(a: TensorHH, b: TensorHH) -> TensorHH:
    """Componentwise product in H(x)H; exponents at or above p^n are dropped."""
    if a.p != b.p or a.dim != b.dim:
        raise ValueError("incompatible tensors")
    dim = a.dim
    acc: dict[tuple[int, int], LaurentPoly] = {}
    for a1, b1, c1 in a.nonzero():
        for a2, b2, c2 in b.nonzero():
            ta, tb = a1 + a2, b1 + b2
            if ta >= dim or tb >= dim:
                continue
            prod = c1 * c2
            key = (ta, tb)
            acc[key] = acc[key] + prod if key in acc else prod
    return TensorHH.from_entries(a.p, dim, acc)


_DELTA_CACHE: dict[HopfParams, list[TensorHH]] = {}
_DELTA_LOCK = threading.Lock()


def delta_power(i: int, hopf: HopfParams) -> TensorHH:
    """Comultiplication of t^i, computed as the i-th tensor power of delta_t.

    Results are memoized per parameter set; the memo table admits
    concurrent readers and a single internally synchronized writer.
    """
    if not 0 <= i < hopf.degree:
        raise ValueError(f"power {i} out of range [0, {hopf.degree})")
    with _DELTA_LOCK:
        seq = _DELTA_CACHE.setdefault(hopf, [TensorHH.unit(hopf.p, hopf.degree)])
        if len(seq) == 1 and i >= 1:
            seq.append(delta_t(hopf))
        while len(seq) <= i:
            seq.append(tensor_mul(seq[-1], seq[1]))
        return seq[i]
