"""Sparse integer polynomials over exponent vectors, and the generating
polynomials of key and lock Kohnert tableaux.

Coefficients are Python ints (arbitrary precision).  The variable count n is
carried explicitly because quasisymmetry depends on it, not just on the
support of the terms.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .core import Composition, padded_weight
from .tableaux import enumerate_kkt, enumerate_lkt

ExponentVector = tuple[int, ...]


@dataclass(frozen=True, order=True)
class SparsePolynomial:
    """Map from exponent vectors to nonzero integer coefficients.

    Terms are stored as a tuple sorted lexicographically by exponent, so
    equality, hashing, and serialization are all canonical.
    """

    n: int
    terms: tuple[tuple[ExponentVector, int], ...] = ()

    def __post_init__(self) -> None:
        for exp, coef in self.terms:
            if len(exp) != self.n:
                raise ValueError(f"exponent {exp} has length != {self.n}")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            if coef == 0:
                raise ValueError("zero coefficient stored")
        exps = [exp for exp, _ in self.terms]
        if sorted(set(exps)) != exps:
            raise ValueError("terms must be sorted with distinct exponents")

    @classmethod
    def from_dict(cls, n: int, mapping: dict[ExponentVector, int]) -> "SparsePolynomial":
        return cls(n, tuple(sorted((e, c) for e, c in mapping.items() if c != 0)))

    @classmethod
    def zero(cls, n: int) -> "SparsePolynomial":
        return cls(n, ())

    @classmethod
    def one(cls, n: int) -> "SparsePolynomial":
        return cls(n, (((0,) * n, 1),))

    def coefficient(self, exp: ExponentVector) -> int:
        return dict(self.terms).get(exp, 0)

    def to_json(self) -> dict:
        return {"n": self.n, "terms": [{"exp": list(e), "coef": c} for e, c in self.terms]}

    def __str__(self) -> str:
        return render_text(self)


def _monomial_text(exp: ExponentVector) -> str:
    parts = [f"x{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(exp) if e > 0]
    return "*".join(parts) if parts else "1"


def render_text(p: SparsePolynomial) -> str:
    """Human-readable form like ``x1^2*x2 + x1*x2^2``."""
    if not p.terms:
        return "0"
    pieces = []
    for k, (exp, coef) in enumerate(p.terms):
        mono = _monomial_text(exp)
        mag = abs(coef)
        body = mono if mag == 1 and mono != "1" else (str(mag) if mono == "1" else f"{mag}*{mono}")
        if k == 0:
            pieces.append(body if coef > 0 else f"-{body}")
        else:
            pieces.append((" + " if coef > 0 else " - ") + body)
    return "".join(pieces)


def subtract(p: SparsePolynomial, q: SparsePolynomial) -> SparsePolynomial:
    """Termwise difference; zero terms are dropped."""
    if p.n != q.n:
        raise ValueError(f"variable counts differ: {p.n} != {q.n}")
    out = dict(p.terms)
    for exp, coef in q.terms:
        out[exp] = out.get(exp, 0) - coef
    return SparsePolynomial.from_dict(p.n, out)


def is_monomial_positive(p: SparsePolynomial) -> bool:
    """True when every stored coefficient is positive (0 counts as positive)."""
    return all(coef > 0 for _, coef in p.terms)


@lru_cache(maxsize=None)
def key_polynomial(a: Composition) -> SparsePolynomial:
    """Generating polynomial of the key Kohnert tableaux of content ``a``."""
    counts = Counter(padded_weight(t.diagram, len(a)) for t in enumerate_kkt(a))
    return SparsePolynomial.from_dict(len(a), dict(counts))


@lru_cache(maxsize=None)
def lock_polynomial(a: Composition) -> SparsePolynomial:
    """Generating polynomial of the lock Kohnert tableaux of content ``a``."""
    counts = Counter(padded_weight(t.diagram, len(a)) for t in enumerate_lkt(a))
    return SparsePolynomial.from_dict(len(a), dict(counts))


def is_symmetric(p: SparsePolynomial) -> bool:
    """Invariance under every adjacent transposition of variable indices."""
    coeffs = dict(p.terms)
    for i in range(p.n - 1):
        for exp, coef in p.terms:
            swapped = list(exp)
            swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
            if coeffs.get(tuple(swapped), 0) != coef:
                return False
    return True


def is_quasisymmetric(p: SparsePolynomial) -> bool:
    """Coefficients agree whenever the ordered nonzero exponents agree.

    Terms are grouped by their packed exponent sequence; for a packed
    sequence of length k all C(n, k) increasing variable placements must
    carry the same coefficient, with missing placements counting as zero.
    """
    groups: dict[ExponentVector, list[int]] = {}
    for exp, coef in p.terms:
        packed = tuple(e for e in exp if e > 0)
        groups.setdefault(packed, []).append(coef)
    for packed, coefs in groups.items():
        if len(set(coefs)) > 1:
            return False
        if len(coefs) != comb(p.n, len(packed)):
            return False
    return True


def schur_polynomial(shape: Composition, n: int) -> SparsePolynomial:
    """Sum of x^content over semistandard Young tableaux of ``shape``.

    Rows weakly increase left to right and columns strictly increase top to
    bottom, with entries in 1..n.  This enumerates fillings directly and is
    independent of the Kohnert machinery, so it can serve as an oracle for
    the symmetric special cases of key and lock polynomials.
    """
    shape = tuple(shape)
    while shape and shape[-1] == 0:
        shape = shape[:-1]
    if any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)) or any(
        part < 0 for part in shape
    ):
        raise ValueError(f"shape must be a partition, got {shape}")
    if n < 0:
        raise ValueError("variable count must be nonnegative")

    counts: Counter[ExponentVector] = Counter()
    cells = [(i, j) for i, part in enumerate(shape) for j in range(part)]
    filling: dict[tuple[int, int], int] = {}

    def fill(k: int) -> None:
        if k == len(cells):
            content = [0] * n
            for v in filling.values():
                content[v - 1] += 1
            counts[tuple(content)] += 1
            return
        i, j = cells[k]
        lo = 1
        if j > 0:
            lo = max(lo, filling[(i, j - 1)])
        if i > 0:
            lo = max(lo, filling[(i - 1, j)] + 1)
        for v in range(lo, n + 1):
            filling[(i, j)] = v
            fill(k + 1)
        filling.pop((i, j), None)

    fill(0)
    return SparsePolynomial.from_dict(n, dict(counts))


@dataclass(frozen=True)
class SymmetryProfile:
    """Shape-side symmetry and quasisymmetry classification of a composition."""

    key_sym: bool
    key_qsym: bool
    lock_sym: bool
    lock_qsym: bool


def classify_symmetry(a: Composition) -> SymmetryProfile:
    """Evaluate the four combinatorial predicates directly on ``a``.

    key polynomial symmetric  <=> a weakly increasing;
    key/lock quasisymmetric   <=> no zero parts, or weakly increasing;
    lock polynomial symmetric <=> a is zeros followed by equal positive
    parts (the all-zero composition counts as symmetric by convention).
    """
    increasing = all(a[i] <= a[i + 1] for i in range(len(a) - 1))
    no_zeros = 0 not in a
    qsym = no_zeros or increasing
    nonzero = [p for p in a if p > 0]
    k = len(nonzero)
    lock_sym = k == 0 or (len(set(nonzero)) == 1 and all(p == 0 for p in a[: len(a) - k]))
    return SymmetryProfile(key_sym=increasing, key_qsym=qsym, lock_sym=lock_sym, lock_qsym=qsym)
