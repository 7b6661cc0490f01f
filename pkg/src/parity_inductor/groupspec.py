"""Parse group specifications: cycle-notation generators or family tokens."""

from __future__ import annotations

import re

from .group import PermGroup
from .perm import PermError, max_point, parse_perm

_FAMILY_RE = re.compile(r"^([CDSAQF])(\d+)(?::(\d+))?$")


class GroupSpecError(ValueError):
    pass


def parse_group_spec(text: str) -> PermGroup:
    """Build a group from a family token (C6, D8, S4, A5, Q8, F5:4) or cycles."""
    text = text.strip()
    if not text:
        raise GroupSpecError("empty group spec")
    m = _FAMILY_RE.match(text)
    if m:
        return _family(m.group(1), int(m.group(2)), m.group(3))
    if text[0] != "(":
        raise GroupSpecError("unknown family name: %r" % text)
    return group_from_cycles(_split_generators(text))


def group_from_cycles(gen_texts, degree=None) -> PermGroup:
    """Group generated by cycle-notation strings, on points 1..degree."""
    gen_texts = list(gen_texts)
    if degree is None:
        degree = max([max_point(t) for t in gen_texts] + [1])
    try:
        gens = [parse_perm(t, degree) for t in gen_texts]
    except PermError as exc:
        raise GroupSpecError(str(exc)) from None
    return PermGroup(gens, degree=degree)


def _split_generators(text: str):
    parts = []
    depth = 0
    current = []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise GroupSpecError("unbalanced parentheses in %r" % text)
        if ch == "," and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    if depth != 0:
        raise GroupSpecError("unbalanced parentheses in %r" % text)
    parts.append("".join(current))
    return [p for p in (part.strip() for part in parts) if p]


def _cycle_text(points) -> str:
    return "(" + " ".join(str(p) for p in points) + ")"


def _family(letter: str, n: int, extra) -> PermGroup:
    if extra is not None and letter != "F":
        raise GroupSpecError("unexpected ':' in %s%d:%s" % (letter, n, extra))
    if letter == "C":
        if n < 1:
            raise GroupSpecError("C%d is not a group" % n)
        if n == 1:
            return group_from_cycles([], degree=1)
        return group_from_cycles([_cycle_text(range(1, n + 1))], degree=n)
    if letter == "D":
        if n < 2 or n % 2:
            raise GroupSpecError("dihedral token D<m> needs even order m >= 2")
        half = n // 2
        if half == 1:
            return group_from_cycles(["(1 2)"], degree=2)
        if half == 2:
            return group_from_cycles(["(1 2)", "(3 4)"], degree=4)
        rot = _cycle_text(range(1, half + 1))
        pairs = [(i, half + 2 - i) for i in range(2, half + 2) if i < half + 2 - i]
        refl = "".join(_cycle_text(p) for p in pairs)
        return group_from_cycles([rot, refl], degree=half)
    if letter == "S":
        if n < 1:
            raise GroupSpecError("S%d is not a group" % n)
        if n == 1:
            return group_from_cycles([], degree=1)
        if n == 2:
            return group_from_cycles(["(1 2)"], degree=2)
        return group_from_cycles(["(1 2)", _cycle_text(range(1, n + 1))], degree=n)
    if letter == "A":
        if n < 1:
            raise GroupSpecError("A%d is not a group" % n)
        if n <= 2:
            return group_from_cycles([], degree=max(n, 1))
        gens = [_cycle_text((i, i + 1, i + 2)) for i in range(1, n - 1)]
        return group_from_cycles(gens, degree=n)
    if letter == "Q":
        if n != 8:
            raise GroupSpecError("only Q8 is supported")
        return group_from_cycles(["(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"], degree=8)
    if letter == "F":
        p = n
        if extra is None:
            raise GroupSpecError("Frobenius token needs the form F<p>:<k>")
        k = int(extra)
        if p < 3 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise GroupSpecError("F%d:%d needs an odd prime modulus" % (p, k))
        if k < 1 or (p - 1) % k:
            raise GroupSpecError("F%d:%d needs k dividing p-1" % (p, k))
        trans = _cycle_text(range(1, p + 1))
        if k == 1:
            return group_from_cycles([trans], degree=p)
        g = _primitive_root(p)
        h = pow(g, (p - 1) // k, p)
        images = [(h * x) % p for x in range(p)]
        mult = _perm_text_from_images(images)
        return group_from_cycles([trans, mult], degree=p)
    raise GroupSpecError("unknown family letter %r" % letter)


def _primitive_root(p: int) -> int:
    factors = _prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    raise AssertionError("no primitive root found for prime %d" % p)


def _prime_factors(n: int):
    out = set()
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out


def _perm_text_from_images(images) -> str:
    """Cycle text for the map point (i+1) -> images[i]+1."""
    n = len(images)
    seen = [False] * n
    parts = []
    for start in range(n):
        if seen[start] or images[start] == start:
            continue
        cyc = [start]
        seen[start] = True
        nxt = images[start]
        while nxt != start:
            cyc.append(nxt)
            seen[nxt] = True
            nxt = images[nxt]
        parts.append(_cycle_text(p + 1 for p in cyc))
    return "".join(parts) if parts else "()"
