"""Permutations in one-line notation and the identification W(A_{n-1}) = S_n.

``s_i`` is the transposition of i and i+1.  Words are composed left to right
as functions, so right multiplication by ``s_i`` swaps positions i and i+1.
"""
from __future__ import annotations

import re
from functools import lru_cache
from itertools import permutations
from typing import List, Sequence, Tuple

from .roots import RootSystem, WeylElement, WeylGroup, build_root_system, weyl_group

Perm = Tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def longest(n: int) -> Perm:
    return tuple(range(n, 0, -1))


def parse_perm(text: str, n: int) -> Perm:
    """``"231"`` or ``"2,3,1"`` -> ``(2, 3, 1)``; raises ValueError if not in S_n."""
    t = text.strip()
    parts = [p for p in re.split(r"[,\s]+", t) if p] if ("," in t or " " in t) else list(t)
    try:
        p = tuple(int(c) for c in parts)
    except ValueError:
        raise ValueError(f"not a permutation: {text!r}") from None
    if sorted(p) != list(range(1, n + 1)):
        raise ValueError(f"{text!r} is not a permutation of 1..{n}")
    return p


def perm_str(p: Sequence[int]) -> str:
    return ("," if len(p) > 9 else "").join(str(v) for v in p)


def length(p: Sequence[int]) -> int:
    return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])


def times_simple(p: Perm, i: int) -> Perm:
    """``p * s_i`` (1-based i)."""
    lst = list(p)
    lst[i - 1], lst[i] = lst[i], lst[i - 1]
    return tuple(lst)


def times_transposition(p: Perm, a: int, b: int) -> Perm:
    lst = list(p)
    lst[a - 1], lst[b - 1] = lst[b - 1], lst[a - 1]
    return tuple(lst)


def from_word(word: Sequence[int], n: int) -> Perm:
    p = identity(n)
    for i in word:
        if not 1 <= i < n:
            raise ValueError(f"simple reflection index {i} out of range for S_{n}")
        p = times_simple(p, i)
    return p


def reduced_word(p: Perm) -> Tuple[int, ...]:
    word: List[int] = []
    while True:
        for i in range(1, len(p)):
            if p[i - 1] > p[i]:
                word.append(i)
                p = times_simple(p, i)
                break
        else:
            return tuple(reversed(word))


def all_perms(n: int) -> List[Perm]:
    """S_n in the same deterministic order as the Weyl group of A_{n-1}."""
    return [weyl_to_perm(w, n) for w in type_a_weyl(n)]


def type_a_cartan(n: int) -> Tuple[Tuple[int, ...], ...]:
    l = n - 1
    return tuple(tuple(2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(l))
                 for i in range(l))


@lru_cache(maxsize=None)
def type_a(n: int) -> RootSystem:
    """Root system A_{n-1}, whose Weyl group is S_n."""
    if n < 2:
        raise ValueError("need n >= 2")
    return build_root_system(type_a_cartan(n))


def type_a_weyl(n: int) -> WeylGroup:
    return weyl_group(type_a(n))


def weyl_to_perm(w: WeylElement, n: int) -> Perm:
    return from_word(w.word, n)


def perm_to_weyl(p: Perm) -> WeylElement:
    return type_a_weyl(len(p)).from_word(reduced_word(p))


def root_transposition(alpha: Sequence[int]) -> Tuple[int, int]:
    """Type A positive root alpha_a + ... + alpha_{b-1}  ->  transposition (a, b)."""
    support = [j + 1 for j, c in enumerate(alpha) if c]
    return support[0], support[-1] + 1


def check_sn(n: int) -> bool:
    return sorted(all_perms(n)) == sorted(permutations(range(1, n + 1)))
