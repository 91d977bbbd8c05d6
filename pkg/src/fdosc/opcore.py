"""Analytic-function and shift-operator algebra.

An AnalyticFunction is a complex-valued function of one complex variable
that knows how to shift its argument and (where the closed form is known)
how to differentiate itself exactly.  A DifferenceOperator is a finite sum
of terms coeff(z) * D^k f(z + shift); shifts act exactly as argument
translation, so operator identities can be verified to machine precision.

Derivative fallback for functions built from plain callables is a central
finite difference with step 1e-5; functions assembled from the provided
primitives (polynomials, gaussians, powers, exponentials) carry exact
derivatives through sum/product/quotient rules.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import EvaluationError

_FD_STEP = 1e-5


class AnalyticFunction:
    """Deterministic complex function of one complex variable.

    Closed under +, -, *, /, scalar multiplication and argument shift.
    Evaluations are memoized, which keeps deep ladder-operator towers
    cheap (the same shifted points recur constantly).
    """

    __slots__ = ("_fn", "_deriv_thunk", "_deriv", "_cache", "note")

    def __init__(self, fn, deriv=None, note: str = ""):
        self._fn = fn
        self._deriv_thunk = deriv  # zero-arg callable -> AnalyticFunction, or None
        self._deriv = None
        self._cache: dict = {}
        self.note = note

    def __call__(self, z) -> complex:
        z = complex(z)
        cached = self._cache.get(z)
        if cached is not None:
            return cached
        try:
            w = complex(self._fn(z))
        except (ZeroDivisionError, OverflowError, ValueError) as exc:
            raise EvaluationError(f"evaluation failed at z = {z}: {exc}") from exc
        if not (math.isfinite(w.real) and math.isfinite(w.imag)):
            raise EvaluationError(f"non-finite value at z = {z}")
        self._cache[z] = w
        return w

    def derivative(self) -> "AnalyticFunction":
        if self._deriv is None:
            if self._deriv_thunk is not None:
                self._deriv = self._deriv_thunk()
            else:
                h = _FD_STEP
                self._deriv = AnalyticFunction(
                    lambda z, f=self: (f(z + h) - f(z - h)) / (2.0 * h),
                    note=f"fd-derivative[{self.note}]",
                )
        return self._deriv

    def shifted(self, a) -> "AnalyticFunction":
        a = complex(a)
        if a == 0:
            return self
        return AnalyticFunction(
            lambda z, f=self: f(z + a),
            deriv=lambda f=self, a=a: f.derivative().shifted(a),
            note=f"shift({a})[{self.note}]",
        )

    # ---- algebra -------------------------------------------------------

    def __add__(self, other):
        other = _as_function(other)
        return AnalyticFunction(
            lambda z, f=self, g=other: f(z) + g(z),
            deriv=lambda f=self, g=other: f.derivative() + g.derivative(),
        )

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_as_function(other))

    def __rsub__(self, other):
        return _as_function(other) + (-self)

    def __neg__(self):
        return AnalyticFunction(
            lambda z, f=self: -f(z),
            deriv=lambda f=self: -f.derivative(),
        )

    def __mul__(self, other):
        other = _as_function(other)
        return AnalyticFunction(
            lambda z, f=self, g=other: f(z) * g(z),
            deriv=lambda f=self, g=other: f.derivative() * g + f * g.derivative(),
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_function(other)
        return AnalyticFunction(
            lambda z, f=self, g=other: f(z) / g(z),
            deriv=lambda f=self, g=other: (f.derivative() * g - f * g.derivative()) / (g * g),
        )

    def __rtruediv__(self, other):
        return _as_function(other) / self


def _as_function(x) -> AnalyticFunction:
    if isinstance(x, AnalyticFunction):
        return x
    return const(x)


# ---- primitive functions ----------------------------------------------


def const(c) -> AnalyticFunction:
    c = complex(c)
    return AnalyticFunction(lambda z: c, deriv=lambda: const(0.0), note=f"const({c})")


def coordinate() -> AnalyticFunction:
    return AnalyticFunction(lambda z: z, deriv=lambda: const(1.0), note="z")


def monomial(p) -> AnalyticFunction:
    """z**p on the principal branch; exact derivative p z**(p-1)."""
    p = complex(p)
    if p == 0:
        return const(1.0)
    return AnalyticFunction(
        lambda z: z ** p,
        deriv=lambda: p * monomial(p - 1),
        note=f"z**{p}",
    )


def polynomial(coeffs) -> AnalyticFunction:
    """sum_k coeffs[k] z^k with exact derivative."""
    coeffs = [complex(c) for c in coeffs]

    def ev(z, cs=tuple(coeffs)):
        acc = 0j
        for c in reversed(cs):
            acc = acc * z + c
        return acc

    def deriv(cs=tuple(coeffs)):
        if len(cs) <= 1:
            return const(0.0)
        return polynomial([k * c for k, c in enumerate(cs)][1:])

    return AnalyticFunction(ev, deriv=deriv, note=f"poly(deg={len(coeffs) - 1})")


def gaussian(a=1.0) -> AnalyticFunction:
    """exp(-a z^2 / 2)."""
    import cmath

    a = complex(a)
    f = AnalyticFunction(lambda z: cmath.exp(-a * z * z / 2.0), note=f"gauss({a})")
    f._deriv_thunk = lambda: const(-a) * coordinate() * f
    return f


def exp_linear(k) -> AnalyticFunction:
    """exp(k z)."""
    import cmath

    k = complex(k)
    f = AnalyticFunction(lambda z: cmath.exp(k * z), note=f"exp({k}z)")
    f._deriv_thunk = lambda: const(k) * f
    return f


def from_callable(fn, deriv_fn=None, note="") -> AnalyticFunction:
    deriv = None
    if deriv_fn is not None:
        deriv = lambda: from_callable(deriv_fn, note=f"d[{note}]")
    return AnalyticFunction(fn, deriv=deriv, note=note)


# ---- operators ---------------------------------------------------------


@dataclass(frozen=True)
class Term:
    coeff: AnalyticFunction
    shift: complex
    dorder: int = 0


class DifferenceOperator:
    """Finite sum of terms f(z) -> coeff(z) * (D^k f)(z + shift).

    Immutable; terms with identical (shift, dorder) are merged by adding
    their coefficient functions.
    """

    def __init__(self, terms):
        merged: dict = {}
        for t in terms:
            coeff = _as_function(t.coeff) if not isinstance(t.coeff, AnalyticFunction) else t.coeff
            key = (complex(t.shift).real, complex(t.shift).imag, t.dorder)
            if key in merged:
                merged[key] = merged[key] + coeff
            else:
                merged[key] = coeff
        self.terms = tuple(
            Term(coeff, complex(k[0], k[1]), k[2]) for k, coeff in sorted(
                merged.items(), key=lambda kv: (kv[0][2], kv[0][1], kv[0][0])
            )
        )

    def __call__(self, f: AnalyticFunction) -> AnalyticFunction:
        f = _as_function(f)
        out = const(0.0)
        for t in self.terms:
            g = f
            for _ in range(t.dorder):
                g = g.derivative()
            out = out + t.coeff * g.shifted(t.shift)
        return out

    apply = __call__

    def __add__(self, other):
        return DifferenceOperator(self.terms + other.terms)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return DifferenceOperator(Term(-t.coeff, t.shift, t.dorder) for t in self.terms)

    def __mul__(self, scalar):
        scalar = complex(scalar)
        return DifferenceOperator(
            Term(scalar * t.coeff, t.shift, t.dorder) for t in self.terms
        )

    __rmul__ = __mul__

    def __matmul__(self, other):
        return compose(self, other)


def shift_op(a) -> DifferenceOperator:
    """Operator f(z) -> f(z + a)."""
    return DifferenceOperator([Term(const(1.0), complex(a), 0)])


def mul_op(c) -> DifferenceOperator:
    """Multiplication by the function (or scalar) c."""
    return DifferenceOperator([Term(_as_function(c), 0.0, 0)])


def deriv_op(order: int = 1) -> DifferenceOperator:
    """d^order/dz^order."""
    if order < 0:
        raise ValueError("derivative order must be >= 0")
    return DifferenceOperator([Term(const(1.0), 0.0, order)])


def identity_op() -> DifferenceOperator:
    return shift_op(0.0)


def zero_op() -> DifferenceOperator:
    return DifferenceOperator([])


def compose(A: DifferenceOperator, B: DifferenceOperator) -> DifferenceOperator:
    """Operator product A B (apply B first)."""
    terms = []
    for ta in A.terms:
        for tb in B.terms:
            # D^{da} [ cb(z) g(z + sb) ] expanded with the Leibniz rule,
            # then shifted by sa and scaled by ca(z).
            cb_k = tb.coeff
            for k in range(ta.dorder + 1):
                coeff = ta.coeff * math.comb(ta.dorder, k) * cb_k.shifted(ta.shift)
                terms.append(Term(coeff, ta.shift + tb.shift, ta.dorder - k + tb.dorder))
                if k < ta.dorder:
                    cb_k = cb_k.derivative()
    return DifferenceOperator(terms)


def operator_power(A: DifferenceOperator, n: int) -> DifferenceOperator:
    if n < 0:
        raise ValueError("operator power must be >= 0")
    out = identity_op()
    for _ in range(n):
        out = compose(out, A)
    return out


def commutator(A: DifferenceOperator, B: DifferenceOperator) -> DifferenceOperator:
    return compose(A, B) - compose(B, A)


# ---- grids and residuals ----------------------------------------------


@dataclass(frozen=True)
class SampleGrid:
    points: tuple = field(default_factory=tuple)
    description: str = ""

    def __post_init__(self):
        pts = tuple(float(p) for p in self.points)
        if any(p <= 0.0 for p in pts):
            raise ValueError("grid points must be strictly positive")
        object.__setattr__(self, "points", pts)

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)


def default_grid(n_points: int = 32, lo: float = 0.25, hi: float = 8.0) -> SampleGrid:
    """Logarithmically spaced grid staying off the origin."""
    pts = np.geomspace(lo, hi, n_points)
    return SampleGrid(tuple(pts), f"{n_points} log-spaced points in [{lo}, {hi}]")


def mixed_residual(values_a, values_b) -> float:
    """max |a - b| / (1 + |b|), elementwise over paired samples."""
    va = np.asarray(values_a, dtype=complex)
    vb = np.asarray(values_b, dtype=complex)
    return float(np.max(np.abs(va - vb) / (1.0 + np.abs(vb))))


def residual(A: DifferenceOperator, B: DifferenceOperator, f: AnalyticFunction,
             grid: SampleGrid) -> float:
    """Mixed-norm residual of A f against B f over the grid."""
    if len(grid) == 0:
        raise ValueError("grid must be non-empty")
    fa = A(f)
    fb = B(f)
    return mixed_residual([fa(p) for p in grid], [fb(p) for p in grid])


def function_residual(f: AnalyticFunction, g: AnalyticFunction, grid: SampleGrid) -> float:
    """Mixed-norm residual between two functions over the grid."""
    return mixed_residual([f(p) for p in grid], [g(p) for p in grid])


def grid_ratio(f: AnalyticFunction, g: AnalyticFunction, grid: SampleGrid):
    """Pointwise ratio f/g over the grid: (mean, stddev/|mean|)."""
    vals = np.array([f(p) / g(p) for p in grid], dtype=complex)
    mean = complex(np.mean(vals))
    spread = float(np.std(vals)) / abs(mean) if mean != 0 else math.inf
    return mean, spread
