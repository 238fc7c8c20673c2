"""The purely inseparable extension L = K[x]/(x^{p^n} - beta).

beta is a finitely supported element of K with v_K(beta) = -b < 0 and
p not dividing b, so L/K is totally ramified of degree p^n and the
extension valuation satisfies v_L(x) = -b, v_L|_K = p^n * v_K.  Elements
of L are length-p^n coefficient vectors over K in the powers of x.

Exactness of l_valuation rests on the p^n candidate values
p^n*v_K(c_i) - b*i being pairwise incongruent mod p^n (as p does not
divide b), so the minimum is attained by a single term and no
cancellation can hide it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Sequence, Union

from .base_arith import INF, LaurentPoly, is_prime

_X_TERM_RE = re.compile(r"^(?:\((?P<coef>[^()]*)\)(?:\*(?P<var1>x(?:\^\d+)?))?|(?P<var2>x(?:\^\d+)?))$")


@dataclass(frozen=True)
class ExtensionParams:
    """Parameters (p, n, b, beta) of the extension L = K(x), x^{p^n} = beta."""

    p: int
    n: int
    b: int
    beta: LaurentPoly

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        if self.n < 2:
            raise ValueError("n must be at least 2")
        if self.b < 1 or self.b % self.p == 0:
            raise ValueError("b must be a positive integer prime to p")
        if self.beta.p != self.p:
            raise ValueError("beta lives over the wrong prime field")
        if self.beta.valuation() != -self.b:
            raise ValueError(f"v_K(beta) must equal -b = {-self.b}")

    @property
    def degree(self) -> int:
        return self.p**self.n

    @classmethod
    def monogenic(cls, p: int, n: int, b: int) -> "ExtensionParams":
        """The default extension with beta = T^{-b}."""
        return cls(p, n, b, LaurentPoly.monomial(p, -b))


class LElement:
    """Element of L as the tuple of x^0 ... x^{p^n - 1} coefficients in K."""

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
        raise AttributeError("LElement is immutable")

    @classmethod
    def zero(cls, ext: ExtensionParams) -> "LElement":
        return cls([LaurentPoly.zero(ext.p)] * ext.degree)

    @classmethod
    def one(cls, ext: ExtensionParams) -> "LElement":
        return cls.x_power(0, ext)

    @classmethod
    def x_power(cls, i: int, ext: ExtensionParams, coeff: Union[LaurentPoly, int] = 1) -> "LElement":
        """The monomial coeff * x^i with 0 <= i < p^n."""
        if not 0 <= i < ext.degree:
            raise ValueError(f"x-exponent {i} out of range [0, {ext.degree})")
        c = LaurentPoly.constant(ext.p, coeff) if isinstance(coeff, int) else coeff
        coeffs = [LaurentPoly.zero(ext.p)] * ext.degree
        coeffs[i] = c
        return cls(coeffs)

    @classmethod
    def scalar(cls, c: LaurentPoly, ext: ExtensionParams) -> "LElement":
        """The element of K <= L with constant coefficient c."""
        return cls.x_power(0, ext, c)

    def nonzero_items(self) -> Iterator[tuple[int, LaurentPoly]]:
        for i, c in enumerate(self.coeffs):
            if not c.is_zero():
                yield i, c

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def _check(self, other: "LElement") -> None:
        if self.p != other.p or len(self.coeffs) != len(other.coeffs):
            raise ValueError("incompatible field elements")

    def __add__(self, other: "LElement") -> "LElement":
        if not isinstance(other, LElement):
            return NotImplemented
        self._check(other)
        return LElement([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "LElement":
        return LElement([-c for c in self.coeffs])

    def __sub__(self, other: "LElement") -> "LElement":
        if not isinstance(other, LElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c: Union[LaurentPoly, int]) -> "LElement":
        """Multiply by a scalar from K (or an integer acting through F_p)."""
        return LElement([coeff * c for coeff in self.coeffs])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, LElement)
            and self.p == other.p
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.p, self.coeffs))

    def __str__(self) -> str:
        return lelement_to_text(self)

    def __repr__(self) -> str:
        return f"LElement({lelement_to_text(self)!r})"


def l_mul(a: LElement, b: LElement, ext: ExtensionParams) -> LElement:
    """Product in L: polynomial product with x^{p^n + k} folded to beta * x^k."""
    pn = ext.degree
    conv: dict[int, LaurentPoly] = {}
    for i, ci in a.nonzero_items():
        for j, cj in b.nonzero_items():
            e = i + j
            prod = ci * cj
            conv[e] = conv[e] + prod if e in conv else prod
    out = [LaurentPoly.zero(ext.p) for _ in range(pn)]
    for e, c in conv.items():
        if e < pn:
            out[e] = out[e] + c
        else:
            out[e - pn] = out[e - pn] + c * ext.beta
    return LElement(out)


def l_valuation(y: LElement, ext: ExtensionParams) -> Union[int, float]:
    """v_L(y) = min over nonzero coefficients of p^n*v_K(c_i) - b*i; INF at 0."""
    best: Union[int, float] = INF
    pn = ext.degree
    for i, c in y.nonzero_items():
        v = pn * c.valuation() - ext.b * i
        if v < best:
            best = v
    return best


def ideal_membership(y: LElement, h: int, ext: ExtensionParams) -> bool:
    """Whether y lies in the fractional ideal {v_L >= h}; zero always does."""
    return l_valuation(y, ext) >= h


# -- text format ------------------------------------------------------------


def lelement_to_text(y: LElement) -> str:
    """Render as `+`-joined terms `(<coeff>)*x^i`, coefficient 1 left bare."""
    parts = []
    for i, c in y.nonzero_items():
        xpart = "1" if i == 0 else ("x" if i == 1 else f"x^{i}")
        if c == LaurentPoly.one(y.p):
            parts.append(xpart)
        elif i == 0:
            parts.append(f"({c.to_text()})")
        elif i == 1:
            parts.append(f"({c.to_text()})*x")
        else:
            parts.append(f"({c.to_text()})*x^{i}")
    return " + ".join(parts) if parts else "0"


def _split_top_level(s: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ValueError("unbalanced parentheses")
        if ch == "+" and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth != 0:
        raise ValueError("unbalanced parentheses")
    parts.append("".join(cur))
    return parts


def lelement_from_text(text: str, ext: ExtensionParams) -> LElement:
    """Parse the LElement text format.

    Accepts `(<LaurentPoly>)*x^i` terms as well as the shorthands `x`,
    `x^i` (coefficient 1), a bare parenthesized coefficient (meaning x^0)
    and bare Laurent terms such as `T^2` or `3`.
    """
    s = "".join(text.split())
    if s in ("", "0"):
        return LElement.zero(ext)
    coeffs = [LaurentPoly.zero(ext.p) for _ in range(ext.degree)]
    for term in _split_top_level(s):
        m = _X_TERM_RE.match(term)
        if m is None:
            # bare Laurent term contributes to the x^0 coefficient
            poly = LaurentPoly.from_text(term, ext.p)
            coeffs[0] = coeffs[0] + poly
            continue
        var = m.group("var1") or m.group("var2")
        exp = 0 if var is None else (1 if var == "x" else int(var[2:]))
        if not 0 <= exp < ext.degree:
            raise ValueError(f"x-exponent {exp} out of range [0, {ext.degree})")
        coef_text = m.group("coef")
        poly = LaurentPoly.one(ext.p) if coef_text is None else LaurentPoly.from_text(coef_text, ext.p)
        coeffs[exp] = coeffs[exp] + poly
    return LElement(coeffs)
