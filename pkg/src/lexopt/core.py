"""Weight classes, weight dispersion and lexicographic order on element sets.

Elements are dense integer indices. A weight function is either a sequence
indexed by element or a mapping from element to weight; every weight is an
exact positive rational (``fractions.Fraction`` or ``int``).

Class indices are 1-based: class 1 holds the heaviest elements.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .errors import InvalidBase, InvalidWeight, UnknownElement

WeightLike = Union[Fraction, int, str]
Weights = Union[Sequence[WeightLike], Mapping[int, WeightLike]]

#: Value of :func:`alpha` when there is a single weight class.
INFINITE = math.inf

_RATIONAL = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def as_weight(value) -> Fraction:
    """Convert ``value`` to a positive exact rational.

    Accepts ``int``, ``Fraction`` and strings of the form ``"p"`` or
    ``"p/q"``. Floats, decimal strings and booleans are rejected.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise InvalidWeight(f"weights must be exact rationals, got {value!r}")
    if isinstance(value, str):
        m = _RATIONAL.match(value)
        if m is None:
            raise InvalidWeight(f"cannot parse {value!r} as 'num/den'")
        num, den = m.groups()
        if den is not None and int(den) == 0:
            raise InvalidWeight(f"zero denominator in {value!r}")
        value = Fraction(int(num), int(den) if den is not None else 1)
    elif isinstance(value, int):
        value = Fraction(value)
    elif not isinstance(value, Fraction):
        raise InvalidWeight(f"unsupported weight type {type(value).__name__}")
    if value <= 0:
        raise InvalidWeight(f"weights must be positive, got {value}")
    return value


def format_rational(value) -> str:
    """Serialize an exact rational as ``"num/den"`` (or ``"num"`` if integral)."""
    if value == INFINITE:
        return "inf"
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Inverse of :func:`format_rational`; zero and negatives allowed."""
    if text == "inf":
        return INFINITE
    m = _RATIONAL.match(text) if isinstance(text, str) else None
    if m is None:
        raise ValueError(f"cannot parse {text!r} as 'num/den'")
    num, den = m.groups()
    return Fraction(int(num), int(den) if den is not None else 1)


def _items(weights: Weights):
    if isinstance(weights, Mapping):
        return list(weights.items())
    return list(enumerate(weights))


@dataclass(frozen=True)
class WeightClasses:
    """Partition of the ground set by distinct weight value.

    ``levels[i - 1]`` is the weight of class ``i``; levels strictly decrease.
    """

    levels: tuple
    class_of: Mapping[int, int]

    @property
    def k(self) -> int:
        return len(self.levels)

    @property
    def ground_set(self) -> frozenset:
        return frozenset(self.class_of)

    @property
    def classes(self) -> tuple:
        """Tuple of frozensets ``(E_1, ..., E_k)``."""
        buckets = [set() for _ in self.levels]
        for e, i in self.class_of.items():
            buckets[i - 1].add(e)
        return tuple(frozenset(b) for b in buckets)

    def level(self, i: int) -> Fraction:
        return self.levels[i - 1]

    def prefix(self, i: int) -> frozenset:
        """Elements of classes ``1..i``."""
        return frozenset(e for e, j in self.class_of.items() if j <= i)

    def split(self, X: Iterable[int], i: int) -> tuple[frozenset, frozenset]:
        """Return ``(X_{<=i}, X_{>i})``."""
        X = self._check(X)
        head = frozenset(e for e in X if self.class_of[e] <= i)
        return head, X - head

    def _check(self, X: Iterable[int]) -> frozenset:
        X = frozenset(X)
        for e in X:
            if e not in self.class_of:
                raise UnknownElement(f"element {e!r} is not in the ground set")
        return X


def weight_classes(weights: Weights) -> WeightClasses:
    """Group elements by weight, heaviest class first.

    >>> wc = weight_classes({0: 1, 1: Fraction(3, 2), 2: 1})
    >>> wc.levels
    (Fraction(3, 2), Fraction(1, 1))
    >>> wc.classes
    (frozenset({1}), frozenset({0, 2}))
    """
    items = [(e, as_weight(v)) for e, v in _items(weights)]
    levels = tuple(sorted({v for _, v in items}, reverse=True))
    index = {v: i + 1 for i, v in enumerate(levels)}
    return WeightClasses(levels, {e: index[v] for e, v in items})


def alpha(classes: WeightClasses):
    """Minimum ratio between consecutive weight levels.

    Returns a ``Fraction`` greater than one, or :data:`INFINITE` when there
    is at most one level.
    """
    lv = classes.levels
    if len(lv) < 2:
        return INFINITE
    return min(lv[i] / lv[i + 1] for i in range(len(lv) - 1))


def lex_signature(X: Iterable[int], classes: WeightClasses) -> tuple:
    """Per-class counts ``(|X_1|, ..., |X_k|)``."""
    X = classes._check(X)
    counts = [0] * classes.k
    for e in X:
        counts[classes.class_of[e] - 1] += 1
    return tuple(counts)


class Lex(enum.Enum):
    LARGER = 1
    EQUAL = 0
    SMALLER = -1


def lex_compare(X: Iterable[int], Y: Iterable[int], classes: WeightClasses) -> Lex:
    sx = lex_signature(X, classes)
    sy = lex_signature(Y, classes)
    if sx > sy:
        return Lex.LARGER
    if sx < sy:
        return Lex.SMALLER
    return Lex.EQUAL


def dispersed_weights(classes: WeightClasses, base: int = 3) -> dict[int, int]:
    """Integer weights ``base ** (k - i)`` on each element of class ``i``.

    Any ``base > 2`` makes maximum weight and lex-maximality coincide for
    matchings and common independent sets.
    """
    if isinstance(base, bool) or not isinstance(base, int) or base <= 2:
        raise InvalidBase(f"base must be an integer greater than 2, got {base!r}")
    k = classes.k
    return {e: base ** (k - i) for e, i in classes.class_of.items()}


def weight_of(X: Iterable[int], weights: Weights) -> Fraction:
    """Exact total weight of ``X``; the empty set weighs 0."""
    total = Fraction(0)
    for e in X:
        if not isinstance(weights, Mapping) and not 0 <= e < len(weights):
            raise UnknownElement(f"element {e!r} has no weight")
        try:
            total += weights[e]
        except (KeyError, IndexError):
            raise UnknownElement(f"element {e!r} has no weight") from None
    return total


def eligibility_violations(X: Iterable[int], Y: Iterable[int], i: int,
                           classes: WeightClasses) -> list[str]:
    """Conditions an eligible improvement ``Y`` of ``X`` at index ``i`` breaks.

    An empty list means ``Y`` keeps every heavier class count, gains exactly
    one class-``i`` element and loses at most two lighter elements of ``X``.
    """
    sx = lex_signature(X, classes)
    sy = lex_signature(Y, classes)
    problems = []
    for j in range(1, i):
        if sy[j - 1] != sx[j - 1]:
            problems.append(f"class {j} count changed from {sx[j - 1]} to {sy[j - 1]}")
    if sy[i - 1] != sx[i - 1] + 1:
        problems.append(f"class {i} count is {sy[i - 1]}, expected {sx[i - 1] + 1}")
    _, x_tail = classes.split(X, i)
    _, y_tail = classes.split(Y, i)
    lost = len(x_tail - y_tail)
    if lost > 2:
        problems.append(f"{lost} lighter elements removed (at most 2 allowed)")
    return problems


def step_loss_bound(a, level_i):
    """Largest weight an eligible step at a class of weight ``level_i`` may lose.

    This is ``(2 - a) / a * level_i``; it is zero or negative when ``a >= 2``.
    """
    if a == INFINITE:
        return -level_i
    return (2 - a) / a * level_i
