"""Time-dependent operators built from closed-form scalar coefficients.

A field is a finite sum ``sum_k c_k(t) * A_k`` where each coefficient
depends on at most one of the time variables and belongs to a family that
is closed under differentiation:

    constant     a
    monomial     a * t**p          (p a non-negative integer)
    sine         a * sin(w * t)
    cosine       a * cos(w * t)
    exponential  a * exp(r * t)
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import ArityMismatch, DimensionMismatch, IndexOutOfRange, NotHermitian
from .opalg import as_operator, is_hermitian

KINDS = ("constant", "monomial", "sine", "cosine", "exponential")
_N_PARAMS = {"constant": 1, "monomial": 2, "sine": 2, "cosine": 2, "exponential": 2}


@dataclass(frozen=True)
class Coefficient:
    kind: str
    var: int | None = None
    params: tuple[float, ...] = (1.0,)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown coefficient kind {self.kind!r}; expected one of {KINDS}")
        params = tuple(float(p) for p in self.params)
        object.__setattr__(self, "params", params)
        if len(params) != _N_PARAMS[self.kind]:
            raise ValueError(f"{self.kind} coefficient takes {_N_PARAMS[self.kind]} params, got {len(params)}")
        if not all(math.isfinite(p) for p in params):
            raise ValueError("coefficient params must be finite")
        if self.kind == "constant":
            object.__setattr__(self, "var", None)
        elif self.var is None or self.var < 0:
            raise ValueError(f"{self.kind} coefficient needs a non-negative time index")
        if self.kind == "monomial" and (params[1] < 0 or params[1] != int(params[1])):
            raise ValueError("monomial exponent must be a non-negative integer")

    @property
    def amplitude(self) -> float:
        return self.params[0]

    def __call__(self, times: Sequence[float]) -> float:
        a = self.params[0]
        if self.kind == "constant":
            return a
        t = times[self.var]
        if self.kind == "monomial":
            return a * t ** int(self.params[1])
        if self.kind == "sine":
            return a * math.sin(self.params[1] * t)
        if self.kind == "cosine":
            return a * math.cos(self.params[1] * t)
        return a * math.exp(self.params[1] * t)

    def derivative(self, j: int) -> Coefficient | None:
        """Partial derivative in ``t_j``; ``None`` stands for the zero function."""
        if self.kind == "constant" or self.var != j:
            return None
        a, q = self.params
        if self.kind == "monomial":
            p = int(q)
            if p == 0:
                return None
            if p == 1:
                return Coefficient("constant", None, (a,))
            return Coefficient("monomial", j, (a * p, p - 1))
        if self.kind == "sine":
            return Coefficient("cosine", j, (a * q, q))
        if self.kind == "cosine":
            return Coefficient("sine", j, (-a * q, q))
        return Coefficient("exponential", j, (a * q, q))

    def depends_on(self, j: int) -> bool:
        if self.kind == "constant":
            return False
        if self.kind == "monomial" and int(self.params[1]) == 0:
            return False
        return self.var == j


@dataclass(frozen=True, eq=False)
class TimeDependentOperator:
    n_times: int
    dim: int
    terms: tuple[tuple[Coefficient, np.ndarray], ...] = field(default=())

    def __post_init__(self):
        if self.n_times < 1 or self.dim < 1:
            raise ValueError("n_times and dim must be positive")
        terms = []
        for coeff, op in self.terms:
            op = as_operator(op)
            if op.shape[0] != self.dim:
                raise DimensionMismatch(f"term operator has dim {op.shape[0]}, field dim is {self.dim}")
            if coeff.var is not None and coeff.var >= self.n_times:
                raise IndexOutOfRange(f"coefficient time index {coeff.var} >= n_times {self.n_times}")
            terms.append((coeff, op))
        object.__setattr__(self, "terms", tuple(terms))

    @classmethod
    def constant(cls, op, n_times: int) -> TimeDependentOperator:
        op = as_operator(op)
        return cls(n_times, op.shape[0], ((Coefficient("constant", None, (1.0,)), op),))

    @classmethod
    def zero(cls, dim: int, n_times: int) -> TimeDependentOperator:
        return cls(n_times, dim, ())

    def __add__(self, other: TimeDependentOperator) -> TimeDependentOperator:
        if (self.n_times, self.dim) != (other.n_times, other.dim):
            raise DimensionMismatch("fields differ in n_times or dim")
        return TimeDependentOperator(self.n_times, self.dim, self.terms + other.terms)

    def evaluate(self, times: Sequence[float]) -> np.ndarray:
        if len(times) != self.n_times:
            raise ArityMismatch(f"expected {self.n_times} times, got {len(times)}")
        out = np.zeros((self.dim, self.dim), dtype=complex)
        for coeff, op in self.terms:
            out += coeff(times) * op
        return out

    def partial_derivative(self, j: int) -> TimeDependentOperator:
        if not 0 <= j < self.n_times:
            raise IndexOutOfRange(f"time index {j} out of range for n_times {self.n_times}")
        terms = []
        for coeff, op in self.terms:
            d = coeff.derivative(j)
            if d is not None:
                terms.append((d, op))
        return TimeDependentOperator(self.n_times, self.dim, tuple(terms))

    def depends_on(self, j: int) -> bool:
        return any(c.depends_on(j) for c, _ in self.terms)

    def is_constant(self) -> bool:
        return not any(self.depends_on(j) for j in range(self.n_times))


def evaluate(f: TimeDependentOperator, times: Sequence[float]) -> np.ndarray:
    return f.evaluate(times)


def partial_derivative(f: TimeDependentOperator, j: int) -> TimeDependentOperator:
    return f.partial_derivative(j)


@dataclass(frozen=True, eq=False)
class HamiltonianFamily:
    """Indexed partial Hamiltonians ``H_j``, one per time variable.

    With ``hermitian_required`` every term operator must be Hermitian.
    Coefficients are real, so that makes each ``H_j(t)`` Hermitian at every
    time tuple, not only at sampled ones.
    """

    members: tuple[TimeDependentOperator, ...]
    hermitian_required: bool = True

    def __post_init__(self):
        members = tuple(self.members)
        object.__setattr__(self, "members", members)
        if not members:
            raise ValueError("a family needs at least one member")
        n = len(members)
        dims = {m.dim for m in members}
        if len(dims) != 1:
            raise DimensionMismatch(f"members have differing dims {sorted(dims)}")
        for m in members:
            if m.n_times != n:
                raise ArityMismatch(f"member has n_times {m.n_times}, family has {n} members")
        if self.hermitian_required:
            for j, m in enumerate(members):
                for _, op in m.terms:
                    if not is_hermitian(op):
                        raise NotHermitian(f"member {j} has a non-Hermitian term operator")

    @classmethod
    def constant(cls, ops, hermitian_required: bool = True) -> HamiltonianFamily:
        ops = list(ops)
        return cls(tuple(TimeDependentOperator.constant(op, len(ops)) for op in ops), hermitian_required)

    @property
    def n_times(self) -> int:
        return len(self.members)

    @property
    def dim(self) -> int:
        return self.members[0].dim

    def __getitem__(self, j: int) -> TimeDependentOperator:
        return self.members[j]

    def total(self, t: float) -> np.ndarray:
        """Sum of all members on the diagonal ``(t, ..., t)``."""
        times = (t,) * self.n_times
        return sum(m.evaluate(times) for m in self.members)
