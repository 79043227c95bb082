"""Total index: the longest decomposition of a class into nonzero nef classes.

A decomposition -K = sum a_i L_i with positive integer multiplicities is the
same thing as a multiset of (possibly repeated) nonzero nef classes summing
to -K, so the total index is the largest size of such a multiset.  Every
part L satisfies that -K - L is nef, so the parts live in the order interval
[0, -K] of the nef cone.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .lattice import IntVector, add, dot, sub
from .nef import NefCone, enumerate_interval, is_nef, positivity_grading

DEFAULT_NODE_CAP = 2_000_000


class TargetError(ValueError):
    pass


class TNotNef(TargetError):
    pass


class TZero(TargetError):
    pass


class BudgetExceeded(RuntimeError):
    """The brute-force search visited more nodes than allowed."""


@dataclass(frozen=True)
class PartitionCertificate:
    """A maximizing decomposition; one of possibly several."""

    parts: Tuple[IntVector, ...]
    target: IntVector

    @property
    def size(self) -> int:
        return len(self.parts)

    def verify(self, cone: NefCone) -> bool:
        total = tuple(0 for _ in self.target)
        for p in self.parts:
            if not any(p) or not is_nef(cone, p):
                return False
            total = add(total, p)
        return total == tuple(self.target)


def _check_target(cone: NefCone, t: Sequence[int]) -> IntVector:
    t = tuple(t)
    if not any(t):
        raise TZero("target class is zero")
    if not is_nef(cone, t):
        raise TNotNef(f"target class {t} is not nef")
    return t


def atoms(cone: NefCone, t: Sequence[int]) -> List[IntVector]:
    """Nonzero lattice points of the order interval [0, t]."""
    return [x for x in enumerate_interval(cone, t).points if any(x)]


def irreducible_atoms(cone: NefCone, atom_list: Sequence[IntVector]) -> List[IntVector]:
    """Atoms that are not the sum of two nonzero nef atoms."""
    pool = set(atom_list)
    out = []
    for x in atom_list:
        if not any(sub(x, a) in pool for a in atom_list if a != x):
            out.append(x)
    return out


def total_index_dp(cone: NefCone, t: Sequence[int], irreducible: bool = True
                   ) -> Tuple[int, PartitionCertificate]:
    """Exact total index of ``t`` with a certificate.

    f(0) = 0 and f(c) = 1 + max f(c - a) over parts a with c - a nef.
    States are processed by increasing positivity grading, which drops by at
    least one per part.  Among maximizers the certificate is the
    lexicographically smallest sorted one.
    """
    t = _check_target(cone, t)
    points = enumerate_interval(cone, t).points
    parts = [x for x in points if any(x)]
    if irreducible:
        parts = irreducible_atoms(cone, parts)
    phi = positivity_grading(cone)
    states = sorted(points, key=lambda x: (dot(phi, x), x))
    zero = tuple(0 for _ in t)
    best: Dict[IntVector, int] = {zero: 0}
    for c in states:
        if c == zero:
            continue
        val = max((best[r] for a in parts
                   if (r := sub(c, a)) in best), default=None)
        if val is not None:
            best[c] = val + 1
    tau = best[t]

    chosen = []
    c = t
    while c != zero:
        a = next(a for a in parts if best.get(sub(c, a)) == best[c] - 1)
        chosen.append(a)
        c = sub(c, a)
    cert = PartitionCertificate(tuple(chosen), t)
    assert cert.verify(cone) and cert.size == tau
    return tau, cert


def total_index_bruteforce(cone: NefCone, t: Sequence[int],
                           node_cap: Optional[int] = DEFAULT_NODE_CAP) -> int:
    """Exhaustive search over non-increasing sequences of atoms summing to t.

    Independent of the dynamic program: no memoization, no grading, and no
    restriction to irreducible atoms.
    """
    t = _check_target(cone, t)
    atom_list = sorted(atoms(cone, t), reverse=True)
    zero = tuple(0 for _ in t)
    nodes = 0

    def search(rest: IntVector, start: int) -> int:
        nonlocal nodes
        nodes += 1
        if node_cap is not None and nodes > node_cap:
            raise BudgetExceeded(f"more than {node_cap} nodes")
        if rest == zero:
            return 0
        found = -1
        for k in range(start, len(atom_list)):
            r = sub(rest, atom_list[k])
            if is_nef(cone, r):
                sub_best = search(r, k)
                if sub_best >= 0:
                    found = max(found, sub_best + 1)
        return found

    return search(t, 0)
