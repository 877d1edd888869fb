"""PBW normal forms for the quantum matrix algebra on an m-by-n grid of generators.

Generators X[i,j] (1 <= i <= m, 1 <= j <= n) satisfy, for i < k and j < l:

    X[i,j] X[i,l] = q X[i,l] X[i,j]
    X[i,j] X[k,j] = q X[k,j] X[i,j]
    X[i,l] X[k,j] = X[k,j] X[i,l]
    X[i,j] X[k,l] - X[k,l] X[i,j] = (q - q^-1) X[i,l] X[k,j]

The canonical basis is the set of row-major ordered monomials
X[1,1] <= X[1,2] <= ... <= X[1,n] <= X[2,1] <= ... <= X[m,n]; every product is
straightened onto that basis.  Straightening swaps an out-of-order adjacent
pair into at most two words, each strictly smaller in the length-graded
lexicographic word order, so rewriting terminates.

Monomials and elements are immutable values and every operation is a pure
function, so all of this is safe to use from concurrent workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .scalar import LaurentScalar, ONE, QINV, Q_MINUS_QINV

Gen = tuple[int, int]
Pairs = tuple[tuple[Gen, int], ...]


@dataclass(frozen=True)
class Shape:
    """Row and column counts of the generator grid; fixed per algebra instance."""

    m: int
    n: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError(f"shape must have positive dimensions, got {self.m}x{self.n}")

    def contains(self, i: int, j: int) -> bool:
        return 1 <= i <= self.m and 1 <= j <= self.n

    def generators(self) -> list[Gen]:
        return [(i, j) for i in range(1, self.m + 1) for j in range(1, self.n + 1)]

    def __str__(self) -> str:
        return f"{self.m}x{self.n}"


@dataclass(frozen=True)
class Bidegree:
    """Multidegree counting generator occurrences per row and per column."""

    rowdeg: tuple[int, ...]
    coldeg: tuple[int, ...]


class PbwMonomial:
    """An ordered monomial: sparse generator -> positive exponent, row-major order."""

    __slots__ = ("pairs", "_hash")

    def __init__(self, pairs: Pairs = ()):
        self.pairs = pairs
        self._hash: int | None = None

    @classmethod
    def from_exponents(cls, exps: dict[Gen, int]) -> "PbwMonomial":
        pairs = tuple(sorted((g, e) for g, e in exps.items() if e))
        if any(e < 0 for _, e in pairs):
            raise ValueError("monomial exponents must be nonnegative")
        return cls(pairs)

    def degree(self) -> int:
        return sum(e for _, e in self.pairs)

    def exponent(self, g: Gen) -> int:
        for gen, e in self.pairs:
            if gen == g:
                return e
        return 0

    def word(self) -> tuple[Gen, ...]:
        """The monomial as an explicit sequence of generators."""
        return tuple(g for g, e in self.pairs for _ in range(e))

    def bidegree(self, shape: Shape) -> Bidegree:
        rows = [0] * shape.m
        cols = [0] * shape.n
        for (i, j), e in self.pairs:
            rows[i - 1] += e
            cols[j - 1] += e
        return Bidegree(tuple(rows), tuple(cols))

    def sort_key(self) -> tuple[int, tuple[Gen, ...]]:
        return (self.degree(), self.word())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PbwMonomial) and self.pairs == other.pairs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.pairs)
        return self._hash

    def __lt__(self, other: "PbwMonomial") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        if not self.pairs:
            return "1"
        ats = []
        for (i, j), e in self.pairs:
            ats.append(f"X[{i},{j}]" if e == 1 else f"X[{i},{j}]^{e}")
        return "*".join(ats)

    def __repr__(self) -> str:
        return f"PbwMonomial({self})"


IDENTITY_MONOMIAL = PbwMonomial()


def _merge(acc: dict, mono: Pairs, coeff: LaurentScalar) -> None:
    c = acc.get(mono)
    c = coeff if c is None else c + coeff
    if c:
        acc[mono] = c
    elif mono in acc:
        del acc[mono]


@lru_cache(maxsize=None)
def _mono_times_gen(pairs: Pairs, g: Gen) -> tuple[tuple[Pairs, LaurentScalar], ...]:
    """Normal form of (ordered monomial) * (single generator), as (monomial, coeff) pairs.

    Shape-independent: the rewriting rules only look at index pairs.
    """
    if not pairs:
        return ((((g, 1),), ONE),)
    h, eh = pairs[-1]
    if h <= g:
        if h == g:
            return ((pairs[:-1] + ((h, eh + 1),), ONE),)
        return ((pairs + ((g, 1),), ONE),)
    # g must move left past one copy of h; h > g in row-major order.
    rest = pairs[:-1] + ((h, eh - 1),) if eh > 1 else pairs[:-1]
    i, j = h
    k, l = g
    if k == i or l == j:
        # same row or same column: h g = q^-1 g h
        expansion = [(QINV, g, h)]
    elif l > j:
        # g lies strictly north-east of h: the pair commutes
        expansion = [(ONE, g, h)]
    else:
        # g strictly north-west of h: h g = g h - (q - q^-1) X[k,j] X[i,l]
        expansion = [(ONE, g, h), (-Q_MINUS_QINV, (k, j), (i, l))]
    acc: dict[Pairs, LaurentScalar] = {}
    for scale, u, v in expansion:
        for mono1, c1 in _mono_times_gen(rest, u):
            for mono2, c2 in _mono_times_gen(mono1, v):
                _merge(acc, mono2, scale * c1 * c2)
    return tuple(acc.items())


class AlgebraElement:
    """A finite LaurentScalar-linear combination of PBW monomials over a fixed shape."""

    __slots__ = ("shape", "_terms")

    def __init__(self, shape: Shape, terms: dict[PbwMonomial, LaurentScalar]):
        self.shape = shape
        self._terms = terms

    @classmethod
    def zero(cls, shape: Shape) -> "AlgebraElement":
        return cls(shape, {})

    @classmethod
    def one(cls, shape: Shape) -> "AlgebraElement":
        return cls(shape, {IDENTITY_MONOMIAL: ONE})

    @classmethod
    def from_scalar(cls, shape: Shape, c: LaurentScalar | int) -> "AlgebraElement":
        if isinstance(c, int):
            c = LaurentScalar.from_int(c)
        return cls(shape, {IDENTITY_MONOMIAL: c} if c else {})

    def terms(self) -> list[tuple[PbwMonomial, LaurentScalar]]:
        """(monomial, coefficient) pairs in the canonical printing order."""
        return sorted(self._terms.items(), key=lambda t: t[0].sort_key())

    def coefficient(self, mono: PbwMonomial) -> LaurentScalar:
        return self._terms.get(mono, LaurentScalar())

    def monomials(self) -> list[PbwMonomial]:
        return [m for m, _ in self.terms()]

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.shape == other.shape and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.shape, frozenset(self._terms.items())))

    def _check_shape(self, other: "AlgebraElement") -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check_shape(other)
        out = dict(self._terms)
        for mono, coeff in other._terms.items():
            c = out.get(mono)
            c = coeff if c is None else c + coeff
            if c:
                out[mono] = c
            elif mono in out:
                del out[mono]
        return AlgebraElement(self.shape, out)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.shape, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scale(self, c: LaurentScalar | int) -> "AlgebraElement":
        if isinstance(c, int):
            c = LaurentScalar.from_int(c)
        if not c:
            return AlgebraElement.zero(self.shape)
        return AlgebraElement(self.shape, {m: c * v for m, v in self._terms.items()})

    def _times_gen(self, g: Gen) -> "AlgebraElement":
        out: dict[PbwMonomial, LaurentScalar] = {}
        for mono, coeff in self._terms.items():
            for pairs, c in _mono_times_gen(mono.pairs, g):
                key = PbwMonomial(pairs)
                cc = out.get(key)
                cc = coeff * c if cc is None else cc + coeff * c
                if cc:
                    out[key] = cc
                elif key in out:
                    del out[key]
        return AlgebraElement(self.shape, out)

    def __mul__(self, other: "AlgebraElement | LaurentScalar | int") -> "AlgebraElement":
        if isinstance(other, (LaurentScalar, int)):
            return self.scale(other)
        self._check_shape(other)
        result = AlgebraElement.zero(self.shape)
        for mono, coeff in other._terms.items():
            piece = self
            for g in mono.word():
                piece = piece._times_gen(g)
            result = result + piece.scale(coeff)
        return result

    def __rmul__(self, other: "LaurentScalar | int") -> "AlgebraElement":
        if isinstance(other, (LaurentScalar, int)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, e: int) -> "AlgebraElement":
        if e < 0:
            raise ValueError("negative powers are not defined in the algebra")
        result = AlgebraElement.one(self.shape)
        for _ in range(e):
            result = result * self
        return result

    def bidegree_of(self) -> Bidegree | None:
        """The common bidegree of all terms, or None when inhomogeneous."""
        degs = {mono.bidegree(self.shape) for mono in self._terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def kill_generator(self, g: Gen) -> "AlgebraElement":
        """Image under the specialization sending X[g] to 0 (drop terms containing it)."""
        return AlgebraElement(
            self.shape, {m: c for m, c in self._terms.items() if m.exponent(g) == 0}
        )

    def specialize(self, q0: Fraction | int) -> dict[PbwMonomial, Fraction]:
        """Evaluate every coefficient at q = q0; zero coefficients dropped."""
        out = {}
        for mono, coeff in self._terms.items():
            v = coeff.evaluate(q0)
            if v:
                out[mono] = v
        return out

    def __str__(self) -> str:
        return render_element(self)

    def __repr__(self) -> str:
        return f"<{self.shape} element: {self}>"


def gen(shape: Shape, i: int, j: int) -> AlgebraElement:
    """The generator X[i,j] as a one-term element."""
    if not shape.contains(i, j):
        raise ValueError(f"generator X[{i},{j}] out of range for shape {shape}")
    return AlgebraElement(shape, {PbwMonomial((((i, j), 1),)): ONE})


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return a * b


def commutator(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """a*b - b*a in PBW normal form."""
    return a * b - b * a


def bidegree_of(a: AlgebraElement) -> Bidegree | None:
    return a.bidegree_of()


def component_basis(shape: Shape, d: Bidegree) -> list[PbwMonomial]:
    """All PBW monomials of exactly bidegree d, in deterministic (sorted) order.

    Equivalent to enumerating nonnegative integer m-by-n matrices with row sums
    d.rowdeg and column sums d.coldeg.
    """
    if len(d.rowdeg) != shape.m or len(d.coldeg) != shape.n:
        raise ValueError("bidegree length does not match shape")
    if any(x < 0 for x in d.rowdeg) or any(x < 0 for x in d.coldeg):
        raise ValueError("bidegree entries must be nonnegative")
    if sum(d.rowdeg) != sum(d.coldeg):
        return []
    out: list[PbwMonomial] = []

    def fill_row(i: int, cols_left: tuple[int, ...], acc: list[tuple[Gen, int]]):
        if i > shape.m:
            if all(c == 0 for c in cols_left):
                out.append(PbwMonomial(tuple(acc)))
            return
        target = d.rowdeg[i - 1]

        def fill_cell(j: int, remaining: int, cols: tuple[int, ...], row_acc: list[tuple[Gen, int]]):
            if j > shape.n:
                if remaining == 0:
                    fill_row(i + 1, cols, acc + row_acc)
                return
            for e in range(min(remaining, cols[j - 1]) + 1):
                new_cols = cols[: j - 1] + (cols[j - 1] - e,) + cols[j:]
                fill_cell(j + 1, remaining - e, new_cols, row_acc + ([((i, j), e)] if e else []))

        fill_cell(1, target, cols_left, [])

    fill_row(1, d.coldeg, [])
    return sorted(out, key=PbwMonomial.sort_key)


def monomial_count(shape: Shape, d: int) -> int:
    """Number of PBW monomials of total degree d, by direct enumeration."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    slots = shape.m * shape.n
    count = 0
    stack = [(0, d)]
    while stack:
        slot, remaining = stack.pop()
        if slot == slots - 1:
            count += 1
            continue
        for e in range(remaining + 1):
            stack.append((slot + 1, remaining - e))
    return count


def random_element(shape: Shape, max_degree: int, rng, n_terms: int = 2) -> AlgebraElement:
    """A small random element for fuzz tests: sum of random monomials with random
    Laurent coefficients (degrees up to max_degree)."""
    gens = shape.generators()
    result = AlgebraElement.zero(shape)
    for _ in range(n_terms):
        d = rng.randint(0, max_degree)
        word = [rng.choice(gens) for _ in range(d)]
        term = AlgebraElement.one(shape)
        for g in word:
            term = term._times_gen(g)
        coeff = LaurentScalar({rng.randint(-2, 2): rng.randint(-3, 3)})
        result = result + term.scale(coeff)
    return result


def render_element(a: AlgebraElement, unit: str = "") -> str:
    """Canonical text form: terms in monomial order, coefficients in decreasing
    q-exponent, e.g. ``X[1,1]*X[2,2] - (q - q^-1)*X[1,2]*X[2,1]``."""
    terms = a.terms()
    if not terms:
        return "0"
    parts: list[str] = []
    for mono, coeff in terms:
        negative = coeff.items()[-1][1] < 0  # sign of the leading (highest) coefficient
        c = -coeff if negative else coeff
        body = c.render(increasing=False)
        if len(c.items()) > 1:
            body = f"({body})"
        mono_str = str(mono) if mono.pairs else unit
        if mono_str:
            text = mono_str if c.is_one() else f"{body}*{mono_str}"
        else:
            text = body
        if not parts:
            parts.append(f"-{text}" if negative else text)
        else:
            parts.append(f"- {text}" if negative else f"+ {text}")
    return " ".join(parts)
