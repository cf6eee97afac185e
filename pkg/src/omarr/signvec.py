"""Sign vectors over {+, 0, -} and the signed-permutation group acting on them.

A sign vector of length n is stored as two bitmasks: bit i of ``plus`` is set
when entry i is ``+`` and bit i of ``minus`` when it is ``-``.  Entry 0 is the
leftmost character of the textual form.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable, Iterator, Sequence


class DimensionError(ValueError):
    """Operands of different lengths."""


class ResourceError(RuntimeError):
    """A size bound of the exact algorithms would be exceeded."""


class Sign(IntEnum):
    ZERO = 0
    PLUS = 1
    MINUS = -1

    def __neg__(self) -> "Sign":
        return Sign(-int(self))

    @property
    def char(self) -> str:
        return _CHARS[int(self)]

    @classmethod
    def from_char(cls, c: str) -> "Sign":
        try:
            return cls(_VALUES[c])
        except KeyError:
            raise ValueError(f"not a sign character: {c!r}") from None


_CHARS = {0: "0", 1: "+", -1: "-"}
_VALUES = {"0": 0, "+": 1, "-": -1, "−": -1}
# canonical character order used for sorting and canonical forms: 0 < + < -
_ORDER = {0: 0, 1: 1, -1: 2}


@dataclass(frozen=True, slots=True)
class SignVector:
    n: int
    plus: int = 0
    minus: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("sign vectors have length >= 1")
        full = (1 << self.n) - 1
        if self.plus & self.minus or (self.plus | self.minus) & ~full:
            raise ValueError("inconsistent sign masks")

    # -- construction ---------------------------------------------------
    @classmethod
    def parse(cls, text: str) -> "SignVector":
        text = text.strip()
        p = m = 0
        for i, c in enumerate(text):
            s = _VALUES.get(c)
            if s is None:
                raise ValueError(f"bad sign character {c!r} in {text!r}")
            if s > 0:
                p |= 1 << i
            elif s < 0:
                m |= 1 << i
        return cls(len(text), p, m)

    @classmethod
    def from_signs(cls, signs: Iterable[int]) -> "SignVector":
        p = m = 0
        n = 0
        for i, s in enumerate(signs):
            n = i + 1
            if s > 0:
                p |= 1 << i
            elif s < 0:
                m |= 1 << i
        return cls(n, p, m)

    @classmethod
    def zero(cls, n: int) -> "SignVector":
        return cls(n)

    # -- access ---------------------------------------------------------
    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> Sign:
        if not 0 <= i < self.n:
            raise IndexError(i)
        if self.plus >> i & 1:
            return Sign.PLUS
        if self.minus >> i & 1:
            return Sign.MINUS
        return Sign.ZERO

    def __iter__(self) -> Iterator[Sign]:
        return (self[i] for i in range(self.n))

    def signs(self) -> tuple[int, ...]:
        return tuple(int(s) for s in self)

    def __str__(self) -> str:
        return "".join(_CHARS[int(s)] for s in self)

    def __repr__(self) -> str:
        return f"SignVector('{self}')"

    @property
    def support(self) -> int:
        return self.plus | self.minus

    @property
    def zero_set(self) -> int:
        return ((1 << self.n) - 1) & ~self.support

    def is_zero(self) -> bool:
        return not self.support

    def sort_key(self) -> int:
        """Integer whose order matches the string order with 0 < + < -."""
        k = 0
        for s in self:
            k = 3 * k + _ORDER[int(s)]
        return k

    # -- algebra --------------------------------------------------------
    def __neg__(self) -> "SignVector":
        return SignVector(self.n, self.minus, self.plus)

    def compose(self, other: "SignVector") -> "SignVector":
        _check(self, other)
        z = ~self.support
        return SignVector(self.n, self.plus | (other.plus & z), self.minus | (other.minus & z))

    def __le__(self, other: "SignVector") -> bool:
        return leq(self, other)

    def __lt__(self, other: "SignVector") -> bool:
        return leq(self, other) and self != other

    def separation(self, other: "SignVector") -> int:
        """Bitmask of indices where the two vectors are nonzero and opposite."""
        _check(self, other)
        return (self.plus & other.minus) | (self.minus & other.plus)


def _check(x: SignVector, y: SignVector) -> None:
    if x.n != y.n:
        raise DimensionError(f"length mismatch: {x.n} vs {y.n}")


def compose(x: SignVector, y: SignVector) -> SignVector:
    return x.compose(y)


def negate(x: SignVector) -> SignVector:
    return -x


def leq(x: SignVector, y: SignVector) -> bool:
    """Conformal order: every nonzero entry of x agrees with y."""
    _check(x, y)
    return (x.plus & ~y.plus) == 0 and (x.minus & ~y.minus) == 0


def restrict(x: SignVector, y: SignVector) -> set[SignVector]:
    """All Z < X that keep X's entries outside the conflict set {i : X_i = -Y_i != 0}.

    Only the conflict positions may be zeroed, and at least one must be.
    """
    conflict = x.separation(y)
    bits = [i for i in range(x.n) if conflict >> i & 1]
    out = set()
    for k in range(1, len(bits) + 1):
        for chosen in itertools.combinations(bits, k):
            mask = 0
            for i in chosen:
                mask |= 1 << i
            out.add(SignVector(x.n, x.plus & ~mask, x.minus & ~mask))
    return out


def all_sign_vectors(n: int) -> Iterator[SignVector]:
    for signs in itertools.product((0, 1, -1), repeat=n):
        yield SignVector.from_signs(signs)


def parse_many(texts: Iterable[str]) -> list[SignVector]:
    return [SignVector.parse(t) for t in texts]


@dataclass(frozen=True)
class SignedPermutation:
    """Relabel entry i to position ``relabeling[i]``, negating it first if i is reoriented.

    ``relabeling`` is 0-based; ``reorientation`` is a set of 0-based source indices.
    """

    relabeling: tuple[int, ...]
    reorientation: frozenset[int] = frozenset()

    def __post_init__(self):
        if sorted(self.relabeling) != list(range(len(self.relabeling))):
            raise ValueError(f"not a permutation: {self.relabeling}")
        if any(not 0 <= i < len(self.relabeling) for i in self.reorientation):
            raise ValueError("reorientation index out of range")
        object.__setattr__(self, "reorientation", frozenset(self.reorientation))

    @property
    def n(self) -> int:
        return len(self.relabeling)

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(tuple(range(n)))

    def apply(self, x: SignVector) -> SignVector:
        if x.n != self.n:
            raise DimensionError(f"length mismatch: {x.n} vs {self.n}")
        p = m = 0
        for i, j in enumerate(self.relabeling):
            xp, xm = x.plus >> i & 1, x.minus >> i & 1
            if i in self.reorientation:
                xp, xm = xm, xp
            p |= xp << j
            m |= xm << j
        return SignVector(x.n, p, m)

    __call__ = apply

    def compose(self, other: "SignedPermutation") -> "SignedPermutation":
        """self after other: x -> self(other(x))."""
        if other.n != self.n:
            raise DimensionError("length mismatch")
        relabel = tuple(self.relabeling[other.relabeling[i]] for i in range(self.n))
        reorient = {i for i in range(self.n)
                    if (i in other.reorientation) != (other.relabeling[i] in self.reorientation)}
        return SignedPermutation(relabel, frozenset(reorient))

    def inverse(self) -> "SignedPermutation":
        inv = [0] * self.n
        for i, j in enumerate(self.relabeling):
            inv[j] = i
        return SignedPermutation(tuple(inv), frozenset(self.relabeling[i] for i in self.reorientation))

    def __str__(self) -> str:
        # one-based, the way the CLI prints it
        rel = " ".join(str(j + 1) for j in self.relabeling)
        ori = " ".join(str(i + 1) for i in sorted(self.reorientation))
        return f"relabel [{rel}] reorient {{{ori}}}"

    @classmethod
    def all(cls, n: int) -> Iterator["SignedPermutation"]:
        for perm in itertools.permutations(range(n)):
            for k in range(n + 1):
                for ori in itertools.combinations(range(n), k):
                    yield cls(perm, frozenset(ori))


def apply(g: SignedPermutation, x: SignVector) -> SignVector:
    return g.apply(x)


def apply_all(g: SignedPermutation, vectors: Iterable[SignVector]) -> set[SignVector]:
    return {g.apply(x) for x in vectors}


def sorted_strings(vectors: Iterable[SignVector]) -> list[str]:
    return [str(v) for v in sorted(vectors, key=SignVector.sort_key)]


def as_vectors(items: Sequence[SignVector | str]) -> list[SignVector]:
    return [SignVector.parse(v) if isinstance(v, str) else v for v in items]
