"""The connection relation on the support and its equivalence classes.

Two support elements g, h are connected when there is a finite sequence
g_1, ..., g_n drawn from the symmetrized support (support union its
inverses) such that g_1 = g, every proper prefix product g_1 ... g_i with
i <= n-1 stays inside the symmetrized support, and the full product lands
in {h, h^-1}.  Connectedness is an equivalence relation; its classes index
the graded ideals built in :mod:`gradedrings.decomposition`.

The search is a breadth-first walk whose states are the prefix products
(all of which live in the symmetrized support, so there are at most twice
as many states as support elements) and whose edges multiply by one
symmetrized-support element.  The final step is exempt from the prefix
constraint and only has to land in {h, h^-1}.  Candidate steps are tried in
ascending lexicographic order of exponent vectors so the certificate found
is deterministic.

Certificates store the sequence g_1, ..., g_n itself, not the prefix
products, and :func:`verify_certificate` rechecks the definition from
scratch, independently of how the search produced the path.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import PreconditionError, TheoremViolationError
from .groups import Element
from .ring import GradedRing


@dataclass(frozen=True)
class ConnectionPath:
    """A candidate connection from ``source`` to ``target``."""

    elements: tuple[Element, ...]
    source: Element
    target: Element

    def __len__(self):
        return len(self.elements)


@dataclass
class ConnectionClasses:
    """The partition of the support into connection classes.

    Blocks are sorted tuples of support elements, ordered by their
    representative (the least element, which is where the search started).
    ``certificates`` maps every support element to a verified path from its
    representative.
    """

    blocks: tuple[tuple[Element, ...], ...]
    representatives: tuple[Element, ...]
    certificates: dict[Element, ConnectionPath] = field(repr=False)

    @property
    def count(self) -> int:
        return len(self.blocks)

    def block_of(self, g: Element):
        for block in self.blocks:
            if g in block:
                return block
        return None


def _symmetrized(ring: GradedRing):
    sig = ring.signature
    sup = ring.support()
    closure = set(sup)
    for g in sup:
        closure.add(sig.invert(g))
    return sup, sorted(closure)


def _bfs(ring: GradedRing, start: Element, targets=None):
    """Walk prefix products from ``start``.

    With ``targets`` given, stop as soon as a product (final step included)
    lands in ``targets`` and return the element trail; otherwise exhaust the
    reachable states and return the parent map.
    """
    sig = ring.signature
    _, steps = _symmetrized(ring)
    closure = set(steps)
    parent: dict[Element, tuple[Element, Element] | None] = {start: None}

    def trail(state):
        out = []
        cur = state
        while True:
            prev = parent[cur]
            if prev is None:
                out.append(cur)
                break
            out.append(prev[1])
            cur = prev[0]
        return tuple(reversed(out))

    if targets is not None and start in targets:
        return trail(start)
    queue = deque([start])
    while queue:
        state = queue.popleft()
        for x in steps:
            nxt = sig.compose(state, x)
            if targets is not None and nxt in targets:
                return trail(state) + (x,)
            if nxt in closure and nxt not in parent:
                parent[nxt] = (state, x)
                queue.append(nxt)
    return None if targets is not None else (parent, trail)


def connected(ring: GradedRing, g: Element, h: Element):
    """A verified ConnectionPath from g to h, or None when not connected.

    Both endpoints must lie in the support.  The returned path has minimal
    length among paths found by the breadth-first search order.
    """
    sig = ring.signature
    sup = ring.support()
    g = sig.element(g)
    h = sig.element(h)
    if g not in sup or h not in sup:
        raise PreconditionError("both endpoints must lie in the support")
    elements = _bfs(ring, g, targets={h, sig.invert(h)})
    if elements is None:
        return None
    return ConnectionPath(elements, g, h)


def verify_certificate(ring: GradedRing, path: ConnectionPath) -> bool:
    """Recheck a certificate against the definition; False on any defect.

    Malformed paths return False rather than raising.
    """
    try:
        sig = ring.signature
        sup, steps = _symmetrized(ring)
        closure = set(steps)
        source = sig.element(path.source)
        target = sig.element(path.target)
        if source not in sup or target not in sup:
            return False
        elements = [sig.element(e) for e in path.elements]
        if not elements or elements[0] != source:
            return False
        if any(e not in closure for e in elements):
            return False
        prefix = elements[0]
        n = len(elements)
        for idx in range(1, n):
            if prefix not in closure:
                return False
            prefix = sig.compose(prefix, elements[idx])
        return prefix in (target, sig.invert(target))
    except Exception:
        return False


def connection_classes(ring: GradedRing) -> ConnectionClasses:
    """Partition the support into connection classes with certificates.

    Classes are discovered by breadth-first searches started from the least
    unassigned element, so the result is independent of basis order.
    """
    sig = ring.signature
    sup = sorted(ring.support())
    assigned: set[Element] = set()
    blocks = []
    reps = []
    certificates: dict[Element, ConnectionPath] = {}
    for g in sup:
        if g in assigned:
            continue
        parent, trail = _bfs(ring, g)
        members = []
        for h in sup:
            if h in parent:
                reached = h
            else:
                inv = sig.invert(h)
                if inv in parent:
                    reached = inv
                else:
                    continue
            members.append(h)
            certificates[h] = ConnectionPath(trail(reached), g, h)
        overlap = assigned.intersection(members)
        if overlap:
            raise TheoremViolationError(
                f"connection classes are not disjoint at {sorted(overlap)[0]}"
            )
        assigned.update(members)
        blocks.append(tuple(members))
        reps.append(g)
    return ConnectionClasses(tuple(blocks), tuple(reps), certificates)


def is_symmetric_support(ring: GradedRing):
    """(True, None) when the support is closed under inversion, else
    (False, witness) with the least support element whose inverse is
    missing."""
    sig = ring.signature
    sup = ring.support()
    for g in sorted(sup):
        if sig.invert(g) not in sup:
            return False, g
    return True, None
