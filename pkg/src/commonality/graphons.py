"""Step function kernels on [0,1]^2 with finitely many parts.

A kernel is stored as a symmetric k x k matrix of part-pair values plus a
vector of part weights (nonnegative, summing to 1).  Entries may be exact
(int / Fraction) or floating; a kernel is "exact" only when every value and
weight is exact, and exact kernels keep Fraction arithmetic end to end.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from .graphs import Graph

WEIGHT_SUM_TOL = 1e-12


def _exact_num(x):
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


class StepGraphon:
    """Symmetric step kernel with values in [0, 1]."""

    lo = 0
    hi = 1

    __slots__ = ("k", "values", "weights", "exact")

    def __init__(self, values, weights=None):
        rows = [list(r) for r in values]
        k = len(rows)
        assert k >= 1, "need at least one part"
        assert all(len(r) == k for r in rows), "value matrix must be square"
        if weights is None:
            weights = [Fraction(1, k)] * k
        weights = list(weights)
        assert len(weights) == k, "one weight per part"

        exact = all(_exact_num(x) for r in rows for x in r) and all(
            _exact_num(x) for x in weights
        )
        if exact:
            rows = [[Fraction(x) for x in r] for r in rows]
            weights = [Fraction(x) for x in weights]
            assert sum(weights) == 1, "part weights must sum to 1"
        else:
            rows = [[float(x) for x in r] for r in rows]
            weights = [float(x) for x in weights]
            assert abs(sum(weights) - 1) <= WEIGHT_SUM_TOL, "part weights must sum to 1"
        for i in range(k):
            assert rows[i][i] == rows[i][i], "nan value"
            for j in range(k):
                assert rows[i][j] == rows[j][i], "value matrix must be symmetric"
                assert self.lo <= rows[i][j] <= self.hi, (
                    f"value {rows[i][j]} outside [{self.lo}, {self.hi}]"
                )
        for x in weights:
            assert x >= 0, "negative part weight"

        self.k = k
        self.values = tuple(tuple(r) for r in rows)
        self.weights = tuple(weights)
        self.exact = exact

    def as_arrays(self):
        """(values, weights) as float64 numpy arrays."""
        V = np.array(self.values, dtype=np.float64)
        mu = np.array(self.weights, dtype=np.float64)
        return V, mu

    def one_minus(self) -> "StepGraphon":
        one = Fraction(1) if self.exact else 1.0
        return StepGraphon([[one - x for x in r] for r in self.values], self.weights)

    def signed(self) -> "SignedStepGraphon":
        two = Fraction(2) if self.exact else 2.0
        one = Fraction(1) if self.exact else 1.0
        return SignedStepGraphon(
            [[two * x - one for x in r] for r in self.values], self.weights
        )

    def __eq__(self, other):
        return (
            type(other) is type(self)
            and self.values == other.values
            and self.weights == other.weights
        )

    def __repr__(self):
        return f"{type(self).__name__}(k={self.k}, exact={self.exact})"


class SignedStepGraphon(StepGraphon):
    """Symmetric step kernel with values in [-1, 1]."""

    lo = -1
    hi = 1

    def one_minus(self):
        raise TypeError("one_minus is only defined for [0,1]-valued kernels")

    def signed(self):
        raise TypeError("already a signed kernel")


def constant_graphon(p, k=1) -> StepGraphon:
    return StepGraphon([[p] * k for _ in range(k)])


def half() -> StepGraphon:
    return constant_graphon(Fraction(1, 2))


def block_graphon(g: Graph) -> StepGraphon:
    """0/1 kernel of a graph: k = n parts of weight 1/n, value = adjacency."""
    assert g.n >= 1, "need at least one vertex"
    vals = [[Fraction(1) if g.has_edge(i, j) else Fraction(0) for j in range(g.n)]
            for i in range(g.n)]
    return StepGraphon(vals)


def _parse_number(tok: str):
    if "/" in tok:
        return Fraction(tok)
    try:
        return int(tok)
    except ValueError:
        return float(tok)


def parse_graphon(text: str, signed: bool = False) -> StepGraphon:
    """Line 1: k.  Line 2: k part weights.  Then k rows of k values.
    Numbers are decimals or rationals like 3/7; all-rational input parses exact."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty kernel description")
    try:
        k = int(lines[0])
    except ValueError:
        raise ValueError(f"bad part count line: {lines[0]!r}") from None
    if k < 1:
        raise ValueError("part count must be at least 1")
    if len(lines) != 2 + k:
        raise ValueError(f"expected {2 + k} lines for k={k}, got {len(lines)}")
    weights = [_parse_number(t) for t in lines[1].split()]
    if len(weights) != k:
        raise ValueError("weight line length mismatch")
    rows = []
    for ln in lines[2:]:
        row = [_parse_number(t) for t in ln.split()]
        if len(row) != k:
            raise ValueError("value row length mismatch")
        rows.append(row)
    cls = SignedStepGraphon if signed else StepGraphon
    try:
        return cls(rows, weights)
    except AssertionError as exc:
        raise ValueError(f"invalid kernel: {exc}") from None


def format_graphon(w: StepGraphon) -> str:
    def fmt(x):
        return str(x) if w.exact else repr(float(x))

    lines = [str(w.k), " ".join(fmt(x) for x in w.weights)]
    lines += [" ".join(fmt(x) for x in row) for row in w.values]
    return "\n".join(lines) + "\n"


def random_graphon(k: int, rng: np.random.Generator) -> StepGraphon:
    """Entries i.i.d. uniform on [0,1] (symmetrized), weights a random point
    of the simplex bounded away from degenerate parts."""
    raw = rng.random((k, k))
    vals = np.triu(raw) + np.triu(raw, 1).T
    wraw = rng.random(k) + 0.1
    wts = wraw / wraw.sum()
    return StepGraphon(vals.tolist(), wts.tolist())


def random_suite(count: int, seed: int, ks=(2, 3, 4)):
    rng = np.random.default_rng(seed)
    return [random_graphon(ks[i % len(ks)], rng) for i in range(count)]


def corner_graphons():
    """Adversarial corners: constant 0, constant 1, one half, and a 0/1 block kernel."""
    return [
        constant_graphon(Fraction(0)),
        constant_graphon(Fraction(1)),
        half(),
        block_graphon(Graph(2, [(0, 1)])),
    ]
