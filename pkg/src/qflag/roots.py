"""Finite root systems from Cartan matrices, and their Weyl groups.

Conventions: ``a_ij = <alpha_i^vee, alpha_j>`` so that the simple reflection
``s_i`` sends ``alpha_j`` to ``alpha_j - a_ij alpha_i``.  Roots are integer
vectors in the simple-root basis, coroots integer vectors in the
simple-coroot basis.  The invariant form is scaled so that short roots have
squared length 2.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple, Union

import numpy as np

__all__ = [
    "NotFiniteTypeError", "CartanMatrix", "RootSystem", "WeylElement", "WeylGroup",
    "PRESETS", "cartan_matrix", "build_root_system", "root_system", "enumerate_weyl",
    "weyl_group", "reflect", "pairing_lambda", "coroot_inner", "coroot_gram",
]

MAX_POSITIVE_ROOTS = 500

PRESETS: Dict[str, Tuple[Tuple[int, ...], ...]] = {
    "A1": ((2,),),
    "A2": ((2, -1), (-1, 2)),
    "A3": ((2, -1, 0), (-1, 2, -1), (0, -1, 2)),
    "A4": ((2, -1, 0, 0), (-1, 2, -1, 0), (0, -1, 2, -1), (0, 0, -1, 2)),
    "B2": ((2, -1), (-2, 2)),
    "G2": ((2, -1), (-3, 2)),
}

IntMatrix = Tuple[Tuple[int, ...], ...]


class NotFiniteTypeError(ValueError):
    """Raised when the positive-root closure does not terminate."""


@dataclass(frozen=True)
class CartanMatrix:
    entries: IntMatrix

    def __post_init__(self):
        a = self.entries
        n = len(a)
        if n == 0 or any(len(row) != n for row in a):
            raise ValueError("Cartan matrix must be square and non-empty")
        for i in range(n):
            if a[i][i] != 2:
                raise ValueError(f"diagonal entry a[{i}][{i}] must be 2")
            for j in range(n):
                if i != j:
                    if a[i][j] > 0:
                        raise ValueError(f"off-diagonal entry a[{i}][{j}] is positive")
                    if (a[i][j] == 0) != (a[j][i] == 0):
                        raise ValueError(f"a[{i}][{j}] = 0 must imply a[{j}][{i}] = 0")

    @property
    def rank(self) -> int:
        return len(self.entries)

    def transpose(self) -> "CartanMatrix":
        return CartanMatrix(tuple(zip(*self.entries)))


def cartan_matrix(spec: Union[str, Sequence[Sequence[int]], CartanMatrix]) -> CartanMatrix:
    """Accept a preset name (``"A3"``), a JSON integer array, or nested lists."""
    if isinstance(spec, CartanMatrix):
        return spec
    if isinstance(spec, str):
        key = spec.strip()
        if key.upper() in PRESETS:
            return CartanMatrix(PRESETS[key.upper()])
        spec = json.loads(key)
    return CartanMatrix(tuple(tuple(int(v) for v in row) for row in spec))


def _symmetrizer(a: IntMatrix) -> Tuple[Fraction, ...]:
    # d_i a_ij = d_j a_ji, propagated along the Dynkin graph
    n = len(a)
    d: List = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j != i and a[i][j] != 0:
                    dj = d[i] * a[i][j] / a[j][i]
                    if d[j] is None:
                        d[j] = dj
                        stack.append(j)
                    elif d[j] != dj:
                        raise ValueError("Cartan matrix is not symmetrizable")
    # each connected component: smallest d becomes 1 (short roots, |alpha|^2 = 2)
    comp = _components(a)
    for c in comp:
        m = min(d[i] for i in c)
        for i in c:
            d[i] = d[i] / m
    return tuple(d)


def _components(a: IntMatrix) -> List[List[int]]:
    n = len(a)
    seen, out = set(), []
    for s in range(n):
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if a[i][j] != 0 and j not in seen:
                    seen.add(j)
                    stack.append(j)
        out.append(sorted(comp))
    return out


def _root_order_key(v: Tuple[int, ...]):
    # height, then alpha_1 before alpha_2 before ...
    return (sum(v), tuple(-c for c in v))


def _positive_roots(a: IntMatrix) -> List[Tuple[int, ...]]:
    n = len(a)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    found = set(simple)
    frontier = list(simple)
    while frontier:
        new = []
        for beta in frontier:
            for i in range(n):
                pairing = sum(beta[j] * a[i][j] for j in range(n))
                image = tuple(beta[j] - (pairing if j == i else 0) for j in range(n))
                if any(c > 0 for c in image) and image not in found:
                    found.add(image)
                    new.append(image)
                    if len(found) > MAX_POSITIVE_ROOTS:
                        raise NotFiniteTypeError("not finite type: positive-root closure exceeds "
                                                 f"{MAX_POSITIVE_ROOTS} roots")
        frontier = new
    return sorted(found, key=_root_order_key)


@dataclass(frozen=True)
class RootSystem:
    cartan: CartanMatrix
    positive_roots: Tuple[Tuple[int, ...], ...]
    positive_coroots: Tuple[Tuple[int, ...], ...]
    heights: Tuple[int, ...]
    symmetrizer: Tuple[Fraction, ...]

    @property
    def rank(self) -> int:
        return self.cartan.rank

    def simple_root_index(self, i: int) -> int:
        """Index (into ``positive_roots``) of the simple root alpha_i (1-based i)."""
        return self.positive_roots.index(tuple(int(j == i - 1) for j in range(self.rank)))


def build_root_system(cartan) -> RootSystem:
    cartan = cartan_matrix(cartan)
    a = cartan.entries
    roots = _positive_roots(a)
    d = _symmetrizer(a)
    coroots = []
    for beta in roots:
        # |beta|^2 / 2 as a multiple of the short-root scale
        norm = sum(beta[i] * beta[j] * d[i] * a[i][j] for i in range(len(a)) for j in range(len(a))) / 2
        m = [beta[j] * d[j] / norm for j in range(len(a))]
        if any(c.denominator != 1 for c in m):
            raise ValueError("coroot has non-integral coordinates; check the Cartan matrix")
        coroots.append(tuple(int(c) for c in m))
    return RootSystem(cartan, tuple(roots), tuple(coroots), tuple(sum(c) for c in coroots), d)


def root_system(name_or_matrix) -> RootSystem:
    """Cached :func:`build_root_system`; nested lists are accepted as well as tuples."""
    if isinstance(name_or_matrix, CartanMatrix):
        name_or_matrix = name_or_matrix.entries
    elif not isinstance(name_or_matrix, str):
        name_or_matrix = tuple(tuple(row) for row in name_or_matrix)
    return _cached_root_system(name_or_matrix)


@lru_cache(maxsize=None)
def _cached_root_system(spec) -> RootSystem:
    return build_root_system(spec)


# -- Weyl group -----------------------------------------------------------------

@dataclass(frozen=True)
class WeylElement:
    """An element of W, identified by its integer action on root coordinates.

    ``action[r][c]`` is the r-th coordinate of ``w(alpha_c)``.
    """
    action: IntMatrix
    length: int = field(compare=False)
    word: Tuple[int, ...] = field(compare=False)

    def sort_key(self):
        return (self.length, self.word)

    def __repr__(self):
        w = "".join(f"s{i}" for i in self.word) or "e"
        return f"WeylElement({w})"


def _simple_reflection_matrix(a: IntMatrix, i: int) -> np.ndarray:
    n = len(a)
    s = np.eye(n, dtype=np.int64)
    for j in range(n):
        s[i, j] -= a[i][j]
    return s


def _as_key(m: np.ndarray) -> IntMatrix:
    return tuple(tuple(int(v) for v in row) for row in m)


def _inversion_count(rs: RootSystem, m: np.ndarray) -> int:
    roots = np.array(rs.positive_roots, dtype=np.int64).T
    images = m @ roots
    return int(np.sum(np.all(images <= 0, axis=0)))


class WeylGroup:
    """All of W in deterministic order (length, then lex-minimal reduced word)."""

    def __init__(self, rs: RootSystem):
        self.root_system = rs
        a = rs.cartan.entries
        self.generators = [_simple_reflection_matrix(a, i) for i in range(rs.rank)]
        ident = np.eye(rs.rank, dtype=np.int64)
        layers = [{_as_key(ident): ((), ident)}]
        seen = {_as_key(ident)}
        while True:
            nxt: Dict[IntMatrix, Tuple[Tuple[int, ...], np.ndarray]] = {}
            for word, m in layers[-1].values():
                for i, g in enumerate(self.generators):
                    prod = m @ g
                    key = _as_key(prod)
                    if key in seen:
                        continue
                    cand = word + (i + 1,)
                    if key not in nxt or cand < nxt[key][0]:
                        nxt[key] = (cand, prod)
            if not nxt:
                break
            seen.update(nxt)
            layers.append(nxt)
        elements = []
        for length, layer in enumerate(layers):
            for key, (word, _) in layer.items():
                elements.append(WeylElement(key, length, word))
        elements.sort(key=WeylElement.sort_key)
        self.elements: List[WeylElement] = elements
        self._by_action = {w.action: w for w in elements}
        self.position = {w: k for k, w in enumerate(elements)}
        self._reflections = [self._root_reflection(k) for k in range(len(rs.positive_roots))]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def identity(self) -> WeylElement:
        return self.elements[0]

    @property
    def longest(self) -> WeylElement:
        return self.elements[-1]

    def lookup(self, action) -> WeylElement:
        return self._by_action[_as_key(np.asarray(action))]

    def from_word(self, word: Sequence[int]) -> WeylElement:
        m = np.eye(self.root_system.rank, dtype=np.int64)
        for i in word:
            m = m @ self.generators[i - 1]
        return self.lookup(m)

    def simple(self, i: int) -> WeylElement:
        return self.from_word((i,))

    def _root_reflection(self, k: int) -> np.ndarray:
        rs = self.root_system
        a = rs.cartan.entries
        n = rs.rank
        alpha = rs.positive_roots[k]
        m = rs.positive_coroots[k]
        s = np.eye(n, dtype=np.int64)
        # s_alpha(alpha_j) = alpha_j - <alpha_j, alpha^vee> alpha
        for j in range(n):
            pairing = sum(m[i] * a[i][j] for i in range(n))
            for r in range(n):
                s[r, j] -= pairing * alpha[r]
        return s

    def reflection_matrix(self, k: int) -> np.ndarray:
        return self._reflections[k]

    def times_reflection(self, w: WeylElement, k: int) -> WeylElement:
        return self.lookup(np.array(w.action, dtype=np.int64) @ self._reflections[k])


@lru_cache(maxsize=None)
def weyl_group(rs: RootSystem) -> WeylGroup:
    return WeylGroup(rs)


def enumerate_weyl(rs: RootSystem) -> List[WeylElement]:
    return list(weyl_group(rs).elements)


def inversion_length(rs: RootSystem, w: WeylElement) -> int:
    """Number of positive roots sent to negative roots by ``w``."""
    return _inversion_count(rs, np.array(w.action, dtype=np.int64))


def reflect(rs: RootSystem, w: WeylElement, alpha: int) -> WeylElement:
    """``w * s_alpha`` for the positive root with (0-based) index ``alpha``."""
    if not 0 <= alpha < len(rs.positive_roots):
        raise IndexError(f"positive-root index {alpha} out of range")
    return weyl_group(rs).times_reflection(w, alpha)


def pairing_lambda(rs: RootSystem, i: int, alpha: int) -> int:
    """``lambda_i(alpha^vee)``: the i-th simple-coroot coordinate (1-based i)."""
    if not 1 <= i <= rs.rank:
        raise IndexError(f"fundamental weight index {i} out of range")
    if not 0 <= alpha < len(rs.positive_roots):
        raise IndexError(f"positive-root index {alpha} out of range")
    return rs.positive_coroots[alpha][i - 1]


def coroot_inner(rs: RootSystem, i: int, j: int) -> Fraction:
    """``<alpha_i^vee, alpha_j^vee> = 4 <alpha_i, alpha_j> / (|alpha_i|^2 |alpha_j|^2)``."""
    a = rs.cartan.entries
    d = rs.symmetrizer
    i0, j0 = i - 1, j - 1
    inner = d[i0] * a[i0][j0]
    return 4 * inner / ((2 * d[i0]) * (2 * d[j0]))


def coroot_gram(rs: RootSystem) -> List[List[Fraction]]:
    return [[coroot_inner(rs, i, j) for j in range(1, rs.rank + 1)] for i in range(1, rs.rank + 1)]
