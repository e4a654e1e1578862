"""The central data model: a finite-dimensional graded ring with forms.

A :class:`GradedRing` is described by a homogeneous basis (every basis
element carries a single degree in an abelian group), sparse structure
constants for the bilinear product, and a nonempty family of Hermitian Gram
matrices.  :meth:`GradedRing.validate` checks the five axioms the model is
supposed to satisfy and reports every failure with a concrete witness:

* grading        product of degrees matches the degree of every product term
* associativity  (e_i e_j) e_k == e_i (e_j e_k) for all basis triples
* orthogonality  distinct homogeneous components pair to zero in every Gram
* psd            every Gram form is positive semidefinite
* hausdorff      the joint kernel of the Gram family is trivial
* malformed      structural defects (bad lengths, indices out of range, ...)

The constructor is deliberately permissive so that defective rings can be
constructed and then *reported* on; it never decides mathematics itself.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import MalformedInputError
from .groups import Element, GroupSignature
from .linalg import (
    ZERO,
    EchelonBasis,
    Scalar,
    Subspace,
    as_scalar,
    is_hermitian,
    nullspace,
    psd_counterexample,
    span,
    unit_vector,
    zero_vector,
)


@dataclass(frozen=True)
class Violation:
    kind: str  # grading | associativity | orthogonality | psd | hausdorff | malformed
    where: tuple
    detail: str


@dataclass
class ViolationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def kinds(self) -> list[str]:
        return sorted({v.kind for v in self.violations})

    def __iter__(self):
        return iter(self.violations)

    def __len__(self):
        return len(self.violations)

    def add(self, kind, where, detail):
        self.violations.append(Violation(kind, tuple(where), detail))


class GradedRing:
    """Immutable graded ring value.

    Parameters
    ----------
    signature : GroupSignature
        The grading group.
    degrees : sequence of exponent tuples, one per basis element.
    structure : mapping (i, j) -> iterable of (k, scalar) pairs
        Sparse structure constants: e_i e_j = sum_k c_k e_k.  Zero products
        may simply be omitted.
    grams : sequence of square scalar matrices (at least one).
    labels : optional sequence of basis labels.
    """

    def __init__(self, signature: GroupSignature, degrees, structure, grams, labels=None):
        if not isinstance(signature, GroupSignature):
            raise MalformedInputError("signature must be a GroupSignature")
        self.signature = signature
        self.degrees: tuple[Element, ...] = tuple(tuple(d) for d in degrees)
        n = len(self.degrees)
        if labels is None:
            labels = tuple(f"e{i}" for i in range(n))
        self.labels = tuple(str(s) for s in labels)
        cleaned = {}
        for (i, j), entries in structure.items():
            row = tuple(
                (k, as_scalar(c)) for k, c in sorted(entries, key=lambda e: e[0]) if as_scalar(c)
            )
            if row:
                cleaned[(int(i), int(j))] = row
        self.structure = cleaned
        self.grams = tuple(
            tuple(tuple(as_scalar(x) for x in row) for row in gram) for gram in grams
        )
        # index maps used all over the analyses
        self._by_degree: dict[Element, tuple[int, ...]] = {}
        for i, d in enumerate(self.degrees):
            self._by_degree[d] = self._by_degree.get(d, ()) + (i,)
        self._right_keys: dict[int, tuple[int, ...]] = {}
        self._left_keys: dict[int, tuple[int, ...]] = {}
        for (i, j) in self.structure:
            self._left_keys[i] = self._left_keys.get(i, ()) + (j,)
            self._right_keys[j] = self._right_keys.get(j, ()) + (i,)

    # -- basic queries -----------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.degrees)

    def identity_degree(self) -> Element:
        return self.signature.identity()

    def basis_product(self, i: int, j: int):
        return self.structure.get((i, j), ())

    def attained_degrees(self) -> list[Element]:
        return sorted(self._by_degree)

    def indices_of_degree(self, g: Element) -> tuple[int, ...]:
        return self._by_degree.get(tuple(g), ())

    def support(self) -> frozenset[Element]:
        """Non-identity degrees attained by basis elements."""
        one = self.identity_degree()
        return frozenset(d for d in self._by_degree if d != one)

    def sorted_support(self) -> list[Element]:
        return sorted(self.support())

    def component(self, g: Element) -> Subspace:
        """Homogeneous component of degree g (zero subspace if unattained)."""
        idx = self.indices_of_degree(g)
        return span([unit_vector(self.dim, i) for i in idx], self.dim)

    def identity_component(self) -> Subspace:
        return self.component(self.identity_degree())

    def project_degree(self, v, g: Element) -> list[Scalar]:
        """Coordinate projection of v onto the degree-g component."""
        keep = set(self.indices_of_degree(g))
        return [x if i in keep else ZERO for i, x in enumerate(v)]

    # -- products ----------------------------------------------------------

    def multiply(self, u, v) -> list[Scalar]:
        """Bilinear extension of the structure constants."""
        n = self.dim
        if len(u) != n or len(v) != n:
            raise MalformedInputError("vectors must have length equal to the ring dimension")
        out = zero_vector(n)
        for i, ui in enumerate(u):
            if not ui:
                continue
            for j in self._left_keys.get(i, ()):
                vj = v[j]
                if not vj:
                    continue
                w = ui * vj
                for k, c in self.structure[(i, j)]:
                    out[k] = out[k] + w * c
        return out

    def multiply_basis_right(self, u, j: int) -> list[Scalar]:
        """u * e_j without materializing e_j."""
        out = zero_vector(self.dim)
        for i in self._right_keys.get(j, ()):
            ui = u[i]
            if not ui:
                continue
            for k, c in self.structure[(i, j)]:
                out[k] = out[k] + ui * c
        return out

    def multiply_basis_left(self, i: int, u) -> list[Scalar]:
        """e_i * u without materializing e_i."""
        out = zero_vector(self.dim)
        for j in self._left_keys.get(i, ()):
            uj = u[j]
            if not uj:
                continue
            for k, c in self.structure[(i, j)]:
                out[k] = out[k] + uj * c
        return out

    def product_span(self, a: Subspace, b: Subspace) -> Subspace:
        """Span of all products of one subspace with another."""
        eb = EchelonBasis(self.dim)
        for u in a.rows:
            for v in b.rows:
                eb.add(self.multiply(u, v))
        return eb.to_subspace()

    # -- validation ---------------------------------------------------------

    def _check_malformed(self, report: ViolationReport) -> None:
        n = self.dim
        sig = self.signature
        if len(self.labels) != n:
            report.add("malformed", (), f"{len(self.labels)} labels for {n} basis elements")
        for i, d in enumerate(self.degrees):
            if not sig.conforms(d):
                report.add("malformed", (i,), f"degree {d} does not conform to the signature")
        for (i, j), entries in self.structure.items():
            if not (0 <= i < n and 0 <= j < n):
                report.add("malformed", (i, j), "structure key out of range")
                continue
            for k, _ in entries:
                if not 0 <= k < n:
                    report.add("malformed", (i, j, k), "structure target out of range")
        if not self.grams:
            report.add("malformed", (), "at least one Gram matrix is required")
        for a, gram in enumerate(self.grams):
            if len(gram) != n or any(len(row) != n for row in gram):
                report.add("malformed", (a,), f"Gram {a} is not {n}x{n}")
            elif not is_hermitian(gram):
                report.add("malformed", (a,), f"Gram {a} is not Hermitian")

    def _check_grading(self, report: ViolationReport) -> None:
        sig = self.signature
        for (i, j), entries in sorted(self.structure.items()):
            expected = sig.compose(self.degrees[i], self.degrees[j])
            for k, c in entries:
                if self.degrees[k] != expected:
                    report.add(
                        "grading",
                        (i, j, k),
                        f"product of degrees {self.degrees[i]} and {self.degrees[j]} is "
                        f"{expected}, but term {k} has degree {self.degrees[k]} "
                        f"(coefficient {c})",
                    )

    def _check_associativity(self, report: ViolationReport) -> None:
        n = self.dim

        def sparse_eq(p, q):
            return dict(p) == dict(q)

        def right_mul(entries, k):
            acc: dict[int, Scalar] = {}
            for m, c in entries:
                for t, d in self.structure.get((m, k), ()):
                    s = acc.get(t, ZERO) + c * d
                    if s:
                        acc[t] = s
                    elif t in acc:
                        del acc[t]
            return acc.items()

        def left_mul(i, entries):
            acc: dict[int, Scalar] = {}
            for m, c in entries:
                for t, d in self.structure.get((i, m), ()):
                    s = acc.get(t, ZERO) + c * d
                    if s:
                        acc[t] = s
                    elif t in acc:
                        del acc[t]
            return acc.items()

        for i in range(n):
            for j in range(n):
                left = self.structure.get((i, j))
                if left:
                    for k in range(n):
                        lhs = right_mul(left, k)
                        rhs = left_mul(i, self.structure.get((j, k), ()))
                        if not sparse_eq(lhs, rhs):
                            report.add(
                                "associativity",
                                (i, j, k),
                                f"(e{i} e{j}) e{k} = {sorted(lhs)} but "
                                f"e{i} (e{j} e{k}) = {sorted(rhs)}",
                            )
                else:
                    for k in self._left_keys.get(j, ()):
                        rhs = left_mul(i, self.structure[(j, k)])
                        if rhs:
                            report.add(
                                "associativity",
                                (i, j, k),
                                f"(e{i} e{j}) e{k} = 0 but e{i} (e{j} e{k}) = {sorted(rhs)}",
                            )

    def _check_orthogonality(self, report: ViolationReport) -> None:
        n = self.dim
        for a, gram in enumerate(self.grams):
            for i in range(n):
                di = self.degrees[i]
                row = gram[i]
                for j in range(i + 1, n):
                    if row[j] and self.degrees[j] != di:
                        report.add(
                            "orthogonality",
                            (a, i, j),
                            f"Gram {a} pairs basis {i} (degree {di}) with basis {j} "
                            f"(degree {self.degrees[j]}) as {row[j]}",
                        )

    def _check_psd(self, report: ViolationReport) -> None:
        for a, gram in enumerate(self.grams):
            witness = psd_counterexample(gram)
            if witness is not None:
                report.add(
                    "psd",
                    (a,),
                    f"Gram {a} is not positive semidefinite; witness "
                    f"[{', '.join(str(x) for x in witness)}] has negative square",
                )

    def _check_hausdorff(self, report: ViolationReport) -> None:
        n = self.dim
        total = [
            [sum((gram[i][j] for gram in self.grams), ZERO) for j in range(n)]
            for i in range(n)
        ]
        kernel = nullspace(total, n)
        if not kernel.is_zero():
            witness = kernel.rows[0]
            report.add(
                "hausdorff",
                (),
                "the Gram family does not separate points; "
                f"[{', '.join(str(x) for x in witness)}] is in the joint kernel",
            )

    def validate(self) -> ViolationReport:
        """Exhaustive axiom check.  Structural defects short-circuit the
        semantic checks (which could not run meaningfully)."""
        report = ViolationReport()
        self._check_malformed(report)
        if not report.ok:
            return report
        self._check_grading(report)
        self._check_associativity(report)
        self._check_orthogonality(report)
        self._check_psd(report)
        self._check_hausdorff(report)
        return report

    # -- equality ------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, GradedRing):
            return NotImplemented
        return (
            self.signature == other.signature
            and self.degrees == other.degrees
            and self.labels == other.labels
            and self.structure == other.structure
            and self.grams == other.grams
        )

    def __repr__(self):
        return (
            f"<GradedRing dim {self.dim}, group rank {self.signature.free_rank} "
            f"torsion {list(self.signature.torsion)}, {len(self.grams)} Gram(s)>"
        )
