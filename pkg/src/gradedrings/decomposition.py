"""Graded ideals attached to connection classes, and the covering theorem.

For a connection class C of the support, three subspaces are built:

* the identity span: the span of all products between components of degree
  h and h^-1 with h in C (it lives inside the identity component),
* the component sum: the direct sum of the homogeneous components whose
  degree lies in C,
* the class ideal: the sum of the previous two.  It is verified to be a
  graded ideal, and ideals of distinct classes annihilate each other.

Together with an orthogonal complement of the span of *all* products of
inverse-degree components inside the identity component, the class ideals
cover the whole ring.  Under a coherent identity component the ideals are
even pairwise orthogonal with respect to every Gram.
"""

from __future__ import annotations

from dataclasses import dataclass

from .connections import ConnectionClasses, connection_classes
from .errors import PreconditionError, TheoremViolationError
from .groups import Element
from .linalg import EchelonBasis, Subspace, joint_orthogonal_complement, pairing, zero_vector
from .ring import GradedRing


def _basis_product_vector(ring: GradedRing, i: int, j: int):
    """Dense vector of e_i e_j, or None when the product is zero."""
    entries = ring.basis_product(i, j)
    if not entries:
        return None
    v = zero_vector(ring.dim)
    for k, c in entries:
        v[k] = c
    return v


def _normalize_block(ring: GradedRing, block) -> tuple[Element, ...]:
    sig = ring.signature
    return tuple(sorted(sig.element(g) for g in block))


def _require_partition_block(ring: GradedRing, block) -> tuple[Element, ...]:
    block = _normalize_block(ring, block)
    if not block:
        raise PreconditionError("a connection class is never empty")
    sup = ring.support()
    if any(g not in sup for g in block):
        raise PreconditionError("block contains elements outside the support")
    classes = connection_classes(ring)
    if block not in classes.blocks:
        raise PreconditionError(f"{list(block)} is not a connection class of this ring")
    return block


def class_identity_span(ring: GradedRing, block, *, _checked=False) -> Subspace:
    """Span of the products E_h E_{h^-1} over all h in the class.

    Always contained in the identity component, since the degrees multiply
    to the identity.
    """
    if not _checked:
        block = _require_partition_block(ring, block)
    sig = ring.signature
    eb = EchelonBasis(ring.dim)
    for h in block:
        for i in ring.indices_of_degree(h):
            for j in ring.indices_of_degree(sig.invert(h)):
                v = _basis_product_vector(ring, i, j)
                if v is not None:
                    eb.add(v)
    return eb.to_subspace()


def class_component_sum(ring: GradedRing, block, *, _checked=False) -> Subspace:
    """Direct sum of the homogeneous components with degree in the class."""
    if not _checked:
        block = _require_partition_block(ring, block)
    out = Subspace.zero(ring.dim)
    for h in block:
        out = out.sum(ring.component(h))
    return out


def class_ideal(ring: GradedRing, block, *, _checked=False) -> Subspace:
    """The graded ideal attached to a connection class.

    The result is checked against :func:`is_graded_ideal`; a failure on a
    validated ring is a theorem violation, never an expected outcome.
    """
    if not _checked:
        block = _require_partition_block(ring, block)
    ideal = class_identity_span(ring, block, _checked=True).sum(
        class_component_sum(ring, block, _checked=True)
    )
    if not is_graded_ideal(ring, ideal):
        raise TheoremViolationError(
            f"class ideal of {list(block)} failed the graded-ideal check"
        )
    return ideal


def is_graded_ideal(ring: GradedRing, sub: Subspace) -> bool:
    """True iff the subspace absorbs products on both sides and splits as a
    sum of its intersections with the homogeneous components."""
    if sub.ambient != ring.dim:
        raise PreconditionError("subspace ambient dimension does not match the ring")
    eb = sub.basis()
    for row in sub.rows:
        for j in range(ring.dim):
            if not eb.contains(ring.multiply_basis_right(row, j)):
                return False
            if not eb.contains(ring.multiply_basis_left(j, row)):
                return False
    # graded: the projection of every basis row onto every attained degree
    # stays inside; equivalently the subspace is the sum of its homogeneous
    # parts.
    for row in sub.rows:
        for g in ring.attained_degrees():
            piece = ring.project_degree(row, g)
            if any(piece) and not eb.contains(piece):
                return False
    return True


def identity_products_span(ring: GradedRing) -> Subspace:
    """Span of all products E_g E_{g^-1} with g running over the support."""
    sig = ring.signature
    eb = EchelonBasis(ring.dim)
    for g in ring.sorted_support():
        for i in ring.indices_of_degree(g):
            for j in ring.indices_of_degree(sig.invert(g)):
                v = _basis_product_vector(ring, i, j)
                if v is not None:
                    eb.add(v)
    return eb.to_subspace()


def identity_complement(ring: GradedRing) -> tuple[Subspace, bool]:
    """Joint orthogonal complement of the products span inside the identity
    component, plus an exactness flag.

    The flag records whether the complement together with the products span
    actually fills the identity component.  With degenerate Gram families it
    can fail, in which case no orthogonal complement exists and the defect
    is surfaced here instead of being hidden behind a non-orthogonal choice.
    """
    sstar = identity_products_span(ring)
    one = ring.identity_component()
    u = joint_orthogonal_complement(sstar, one, ring.grams)
    exact = sstar.sum(u) == one
    return u, exact


@dataclass
class IdealDecomposition:
    """Everything the covering theorem produces for one ring."""

    classes: ConnectionClasses
    ideals: tuple[Subspace, ...]
    identity_spans: tuple[Subspace, ...]
    component_sums: tuple[Subspace, ...]
    complement: Subspace
    complement_exact: bool
    covers: bool
    pairwise_zero: bool
    orthogonal_ideals: bool
    coherent: bool


def decompose(ring: GradedRing) -> IdealDecomposition:
    """Assemble classes, class ideals and the identity complement; verify
    the covering, annihilation and orthogonality statements.

    On a validated ring, a false ``pairwise_zero`` is always a theorem
    violation, and so is a false ``covers`` whenever the complement is
    exact.  When the complement is inexact (degenerate Gram family), the
    covering can genuinely fail and is reported honestly.  Orthogonality of
    distinct ideals is asserted whenever the identity component is coherent.
    """
    classes = connection_classes(ring)
    identity_spans = []
    component_sums = []
    ideals = []
    for block in classes.blocks:
        one_span = class_identity_span(ring, block, _checked=True)
        comp_sum = class_component_sum(ring, block, _checked=True)
        ideal = one_span.sum(comp_sum)
        if not is_graded_ideal(ring, ideal):
            raise TheoremViolationError(
                f"class ideal of {list(block)} failed the graded-ideal check"
            )
        identity_spans.append(one_span)
        component_sums.append(comp_sum)
        ideals.append(ideal)

    complement, exact = identity_complement(ring)

    eb = EchelonBasis(ring.dim)
    eb.extend(complement.rows)
    for ideal in ideals:
        eb.extend(ideal.rows)
    covers = eb.dim == ring.dim

    pairwise_zero = True
    for a in range(len(ideals)):
        for b in range(len(ideals)):
            if a == b:
                continue
            for u in ideals[a].rows:
                for v in ideals[b].rows:
                    if any(ring.multiply(u, v)):
                        pairwise_zero = False

    orthogonal = True
    for a in range(len(ideals)):
        for b in range(a + 1, len(ideals)):
            for gram in ring.grams:
                for u in ideals[a].rows:
                    for v in ideals[b].rows:
                        if pairing(u, v, gram):
                            orthogonal = False

    if not pairwise_zero:
        raise TheoremViolationError("ideals of distinct classes do not annihilate")
    if exact and not covers:
        raise TheoremViolationError("complement and class ideals fail to cover the ring")

    from .properties import is_coherent  # local import, properties depends on this module

    coherence = is_coherent(ring)
    if coherence.ok and not orthogonal:
        raise TheoremViolationError(
            "identity component is coherent but the class ideals are not orthogonal"
        )

    return IdealDecomposition(
        classes=classes,
        ideals=tuple(ideals),
        identity_spans=tuple(identity_spans),
        component_sums=tuple(component_sums),
        complement=complement,
        complement_exact=exact,
        covers=covers,
        pairwise_zero=pairwise_zero,
        orthogonal_ideals=orthogonal,
        coherent=coherence.ok,
    )
