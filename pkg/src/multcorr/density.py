"""Exact natural densities of the -1 level sets of shifted sign products.

`local_density(p, H)` is the density of {n : prod over h in H of the sign of
n+h at the single prime p equals -1}, computed as an exact rational by a
recursion on the shift set:

* empty H has density 0; a singleton has density 1/(p+1);
* when the residues of H mod p are not all equal, the level set splits as a
  disjoint union over residue classes, so densities add class by class;
* when all residues equal i, the level set is a translate of p times the one
  for H1 = (H - i)/p, complemented first when |H| is odd, giving value/p or
  (1 - value)/p.  max(H1) < max(H), so this case strictly shrinks the input.

`set_density` combines local densities over a prime set with the fold
eta <- eta*(1 - eta_p) + eta_p*(1 - eta), equivalently (1 - prod(1-2*eta_p))/2.

Results are memoized up to translation: shifting every element of H by a
constant translates the level set and leaves the density unchanged.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .core import BudgetError, PrimeSet, ShiftSet, is_prime

# Depth cap is a defensive bound well above what the decreasing-max argument
# allows; hitting it means an implementation bug, not a hard input.
_DEPTH_SLACK = 64

_memo: dict[tuple[int, tuple[int, ...]], Fraction] = {}


def _normalize(shifts: tuple[int, ...]) -> tuple[int, ...]:
    base = shifts[0]
    return tuple(h - base for h in shifts)


def _depth_cap(p: int, shifts: tuple[int, ...]) -> int:
    top = max(shifts) if shifts else 0
    return _DEPTH_SLACK * (1 + int(math.log(top + 1, p)))


def _split_classes(p: int, shifts: tuple[int, ...]) -> list[tuple[int, ...]]:
    classes: dict[int, list[int]] = {}
    for h in shifts:
        classes.setdefault(h % p, []).append(h)
    return [tuple(cls) for _, cls in sorted(classes.items())]


def _eta(p: int, shifts: tuple[int, ...], depth: int, cap: int) -> Fraction:
    if not shifts:
        return Fraction(0)
    if len(shifts) == 1:
        return Fraction(1, p + 1)
    key = (p, _normalize(shifts))
    cached = _memo.get(key)
    if cached is not None:
        return cached
    if depth > cap:
        raise BudgetError(f"density recursion exceeded depth cap {cap} at p={p}")
    classes = _split_classes(p, shifts)
    if len(classes) > 1:
        value = sum((_eta(p, cls, depth + 1, cap) for cls in classes), Fraction(0))
    else:
        i1 = shifts[0] % p
        inner = tuple((h - i1) // p for h in shifts)
        sub = _eta(p, inner, depth + 1, cap)
        value = sub / p if len(shifts) % 2 == 0 else (1 - sub) / p
    _memo[key] = value
    return value


def local_density(p: int, shifts: ShiftSet) -> Fraction:
    """Exact density of the -1 level set at a single prime p."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return _eta(p, shifts.shifts, 0, _depth_cap(p, shifts.shifts))


def closed_form_density(p: int, shifts: ShiftSet) -> Fraction | None:
    """|H|/(p+1) when p divides no pairwise difference of H, else None.

    When p is non-exceptional the shifts land in distinct residue classes,
    every class is a singleton, and the split case collapses to the closed
    form; callers fall through to `local_density` on None.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if shifts.differences().divisible_by(p):
        return None
    return Fraction(len(shifts), p + 1)


def set_density(pset: PrimeSet, shifts: ShiftSet) -> Fraction:
    """Exact density of the -1 level set over a finite prime set."""
    eta = Fraction(0)
    for p in pset:
        eta_p = local_density(p, shifts)
        eta = eta * (1 - eta_p) + eta_p * (1 - eta)
    return eta


@dataclass(frozen=True)
class DensityTrace:
    """One node of the recursion tree behind a local density value.

    `kind` is one of "empty", "singleton", "split", "rescale".  A rescale
    node records the shared residue and whether the odd-size complement was
    taken.  `replay` recomputes the value from the recorded structure alone.
    """

    kind: str
    prime: int
    shifts: tuple[int, ...]
    children: tuple["DensityTrace", ...] = ()
    residue: int = 0
    complemented: bool = False

    def replay(self) -> Fraction:
        p = self.prime
        if self.kind == "empty":
            return Fraction(0)
        if self.kind == "singleton":
            return Fraction(1, p + 1)
        if self.kind == "split":
            return sum((c.replay() for c in self.children), Fraction(0))
        sub = self.children[0].replay()
        return (1 - sub) / p if self.complemented else sub / p

    def lines(self, depth: int = 0) -> list[str]:
        pad = "  " * depth
        hs = "{" + ",".join(str(h) for h in self.shifts) + "}"
        p = self.prime
        if self.kind == "empty":
            out = [f"{pad}empty set: density 0"]
        elif self.kind == "singleton":
            out = [f"{pad}singleton {hs}: density 1/{p + 1}"]
        elif self.kind == "split":
            parts = " ".join(
                "{" + ",".join(str(h) for h in c.shifts) + "}" for c in self.children
            )
            out = [f"{pad}split {hs} mod {p} -> {parts}"]
        else:
            inner = "{" + ",".join(str(h) for h in self.children[0].shifts) + "}"
            op = "(1 - value)/p" if self.complemented else "value/p"
            out = [f"{pad}rescale {hs}: residue {self.residue}, inner {inner}, {op}"]
        for c in self.children:
            out.extend(c.lines(depth + 1))
        out_value = self.replay()
        if depth == 0:
            out.append(f"value = {out_value.numerator}/{out_value.denominator}")
        return out


def local_density_trace(p: int, shifts: ShiftSet) -> DensityTrace:
    """Recursion tree for `local_density(p, shifts)`; replays to the value."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")

    def walk(hs: tuple[int, ...], depth: int, cap: int) -> DensityTrace:
        if not hs:
            return DensityTrace("empty", p, hs)
        if len(hs) == 1:
            return DensityTrace("singleton", p, hs)
        if depth > cap:
            raise BudgetError(f"density recursion exceeded depth cap {cap} at p={p}")
        classes = _split_classes(p, hs)
        if len(classes) > 1:
            kids = tuple(walk(cls, depth + 1, cap) for cls in classes)
            return DensityTrace("split", p, hs, kids)
        i1 = hs[0] % p
        inner = tuple((h - i1) // p for h in hs)
        kid = walk(inner, depth + 1, cap)
        return DensityTrace("rescale", p, hs, (kid,), i1, len(hs) % 2 == 1)

    return walk(shifts.shifts, 0, _depth_cap(p, shifts.shifts))
