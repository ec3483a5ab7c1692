"""Lie triple systems presented by structure constants.

A system of dimension n is the tensor t with [e_i, e_j, e_k] =
sum_l t[i][j][k][l] e_l.  The axioms are verified on basis tuples only,
which suffices by multilinearity:

  (1) alternation in the first two slots, stored char-2-safely as both
      t[i][i][k] = 0 and the polarized form t[i][j][k] + t[j][i][k] = 0;
  (2) the cyclic sum t[i][j][k] + t[j][k][i] + t[k][i][j] = 0;
  (3) the five-variable identity making each [a,b,-] act as a derivation.

Constructors run the checker and refuse invalid tensors unless an
explicit ``unchecked`` flag is passed (needed to store intentionally
broken systems for negative tests).
"""

from __future__ import annotations

from dataclasses import InitVar, dataclass
from typing import Optional, Sequence

from .exactlin import (
    Field, Matrix, Subspace, Vector, kernel_basis, mat_from_flat, unit_vec,
    vec_add, vec_is_zero, vec_scale, vec_sub, zero_vec,
)


class LtsAxiomError(ValueError):
    def __init__(self, report: "LtsAxiomReport"):
        self.report = report
        first = report.violations[0]
        super().__init__(
            f"not a Lie triple system: {len(report.violations)} violation(s), "
            f"first is {first.identity} at basis tuple {first.indices}")


@dataclass(frozen=True)
class AxiomViolation:
    identity: str
    indices: tuple
    defect: Vector


@dataclass(frozen=True)
class LtsAxiomReport:
    ok: bool
    violations: tuple


@dataclass(frozen=True)
class LieTripleSystem:
    field: Field
    dim: int
    triple: tuple  # triple[i][j][k] = coordinates of [e_i, e_j, e_k]
    unchecked: InitVar[bool] = False

    def __post_init__(self, unchecked: bool):
        n = self.dim
        if len(self.triple) != n or any(
                len(ti) != n or any(len(tij) != n or any(len(v) != n for v in tij) for tij in ti)
                for ti in self.triple):
            raise ValueError("triple tensor shape does not match dim")
        if not unchecked:
            report = check_lts_axioms(self)
            if not report.ok:
                raise LtsAxiomError(report)

    def basis_bracket(self, i: int, j: int, k: int) -> Vector:
        return self.triple[i][j][k]


def lie_triple_system(field: Field, entries: Sequence, *, unchecked: bool = False) -> LieTripleSystem:
    """Build a system from nested [i][j][k][l] entries of ints/strings/Fractions."""
    n = len(entries)
    tensor = tuple(
        tuple(tuple(tuple(field.of(x) for x in vec) for vec in tij) for tij in ti)
        for ti in entries)
    return LieTripleSystem(field, n, tensor, unchecked=unchecked)


def triple_bracket(T: LieTripleSystem, a: Vector, b: Vector, c: Vector) -> Vector:
    """Trilinear extension of the structure tensor to arbitrary vectors."""
    F = T.field
    n = T.dim
    if len(a) != n or len(b) != n or len(c) != n:
        raise ValueError("vector dimension mismatch")
    out = zero_vec(F, n)
    for i, ai in enumerate(a):
        if F.is_zero(ai):
            continue
        for j, bj in enumerate(b):
            cij = F.mul(ai, bj)
            if F.is_zero(cij):
                continue
            for k, ck in enumerate(c):
                coeff = F.mul(cij, ck)
                if not F.is_zero(coeff):
                    out = vec_add(F, out, vec_scale(F, coeff, T.triple[i][j][k]))
    return out


def _bracket_with(T: LieTripleSystem, i: int, j: int, w: Vector) -> Vector:
    """[e_i, e_j, w] for a coordinate vector w."""
    F = T.field
    out = zero_vec(F, T.dim)
    for u, wu in enumerate(w):
        if not F.is_zero(wu):
            out = vec_add(F, out, vec_scale(F, wu, T.triple[i][j][u]))
    return out


def check_lts_axioms(T: LieTripleSystem) -> LtsAxiomReport:
    """Verify the three defining identities (plus the polarized form of the
    first) on all basis tuples and report every violation with a witness."""
    F = T.field
    n = T.dim
    t = T.triple
    bad = []

    for i in range(n):
        for k in range(n):
            if not vec_is_zero(F, t[i][i][k]):
                bad.append(AxiomViolation("alternating", (i, i, k), t[i][i][k]))
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(n):
                d = vec_add(F, t[i][j][k], t[j][i][k])
                if not vec_is_zero(F, d):
                    bad.append(AxiomViolation("polarized-alternating", (i, j, k), d))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                d = vec_add(F, vec_add(F, t[i][j][k], t[j][k][i]), t[k][i][j])
                if not vec_is_zero(F, d):
                    bad.append(AxiomViolation("cyclic", (i, j, k), d))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    for m in range(n):
                        lhs = _bracket_with(T, i, j, t[k][l][m])
                        r1 = triple_bracket(T, t[i][j][k], unit_vec(F, n, l), unit_vec(F, n, m))
                        r2 = triple_bracket(T, unit_vec(F, n, k), t[i][j][l], unit_vec(F, n, m))
                        r3 = _bracket_with(T, k, l, t[i][j][m])
                        d = vec_sub(F, lhs, vec_add(F, vec_add(F, r1, r2), r3))
                        if not vec_is_zero(F, d):
                            bad.append(AxiomViolation("derivation", (i, j, k, l, m), d))
    return LtsAxiomReport(not bad, tuple(bad))


@dataclass(frozen=True)
class LtsHom:
    source: LieTripleSystem
    target: LieTripleSystem
    matrix: Matrix  # target.dim x source.dim
    unchecked: InitVar[bool] = False

    def __post_init__(self, unchecked: bool):
        if self.matrix.rows != self.target.dim or self.matrix.cols != self.source.dim:
            raise ValueError("hom matrix shape mismatch")
        if self.matrix.field != self.source.field or self.source.field != self.target.field:
            raise ValueError("hom field mismatch")
        if not unchecked and not is_lts_hom(self.matrix, self.source, self.target):
            raise ValueError("matrix is not a homomorphism of Lie triple systems")

    def compose(self, other: "LtsHom") -> "LtsHom":
        """self . other (apply other first)."""
        if other.target is not self.source and other.target != self.source:
            raise ValueError("composition mismatch")
        return LtsHom(other.source, self.target, self.matrix.matmul(other.matrix), unchecked=True)


def is_lts_hom(alpha: Matrix, T: LieTripleSystem, S: LieTripleSystem) -> bool:
    """True iff alpha([e_i,e_j,e_k]) = [alpha e_i, alpha e_j, alpha e_k] on all basis triples."""
    if alpha.rows != S.dim or alpha.cols != T.dim:
        raise ValueError("hom matrix shape mismatch")
    cols = [alpha.col(j) for j in range(T.dim)]
    for i in range(T.dim):
        for j in range(T.dim):
            for k in range(T.dim):
                lhs = alpha.matvec(T.triple[i][j][k])
                rhs = triple_bracket(S, cols[i], cols[j], cols[k])
                if lhs != rhs:
                    return False
    return True


def identity_lts_hom(T: LieTripleSystem) -> LtsHom:
    return LtsHom(T, T, Matrix.identity(T.field, T.dim), unchecked=True)


def inner_derivation(T: LieTripleSystem, a: Vector, b: Vector) -> Matrix:
    """The endomorphism c -> [a, b, c], bilinear in (a, b)."""
    F = T.field
    n = T.dim
    cols = [triple_bracket(T, a, b, unit_vec(F, n, m)) for m in range(n)]
    return Matrix.from_cols(F, cols, rows=n)


@dataclass(frozen=True)
class DerivationAlgebra:
    """Basis of all derivations of T, closed under commutator.

    ``basis`` is the deterministic RREF kernel basis of the constraint
    system; ``bracket`` is the commutator table in that basis; ``span`` is
    the same space inside End(T) flattened to F^(n^2).
    """

    lts: LieTripleSystem
    basis: tuple           # tuple of n x n Matrix
    span: Subspace         # in F^(n^2), row-major flattening
    bracket: tuple         # bracket[a][b] = coordinates of [D_a, D_b]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coordinates(self, endo: Matrix) -> Optional[Vector]:
        return self.span.coordinates(endo.flatten())


def derivation_algebra(T: LieTripleSystem) -> DerivationAlgebra:
    """Solve the linear system D[a,b,c] = [Da,b,c] + [a,Db,c] + [a,b,Dc]
    over the n^2 unknown entries of D, on all basis triples."""
    F = T.field
    n = T.dim
    t = T.triple
    rows = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    # coefficient of D[u][v] in component l of the defect
                    row = [F.zero()] * (n * n)
                    for m in range(n):
                        row[l * n + m] = F.add(row[l * n + m], t[i][j][k][m])
                    for u in range(n):
                        row[u * n + i] = F.sub(row[u * n + i], t[u][j][k][l])
                        row[u * n + j] = F.sub(row[u * n + j], t[i][u][k][l])
                        row[u * n + k] = F.sub(row[u * n + k], t[i][j][u][l])
                    if any(not F.is_zero(x) for x in row):
                        rows.append(tuple(row))
    span = kernel_basis(Matrix.make(F, rows, cols=n * n))
    basis = tuple(mat_from_flat(F, v, n, n) for v in span.basis.entries)
    table = []
    for da in basis:
        row = []
        for db in basis:
            comm = da.matmul(db).sub(db.matmul(da))
            coords = span.coordinates(comm.flatten())
            if coords is None:
                raise RuntimeError("derivation algebra not closed under commutator")
            row.append(coords)
        table.append(tuple(row))
    return DerivationAlgebra(T, basis, span, tuple(table))


@dataclass(frozen=True)
class IdealClosureCertificate:
    """Record that the inner derivations form an ideal of the derivation
    algebra: [D, D_{a,b}] = D_{Da,b} + D_{a,Db} holds and stays in the span."""

    ok: bool
    checked_pairs: int
    failures: tuple


@dataclass(frozen=True)
class InnerDerivations:
    lts: LieTripleSystem
    span: Subspace  # in F^(n^2)
    certificate: IdealClosureCertificate

    @property
    def dim(self) -> int:
        return self.span.dim

    def basis_matrices(self) -> tuple:
        n = self.lts.dim
        return tuple(mat_from_flat(self.lts.field, v, n, n) for v in self.span.basis.entries)


def inner_derivation_algebra(T: LieTripleSystem, der: Optional[DerivationAlgebra] = None) -> InnerDerivations:
    F = T.field
    n = T.dim
    gens = [inner_derivation(T, unit_vec(F, n, i), unit_vec(F, n, j)).flatten()
            for i in range(n) for j in range(i + 1, n)]
    span = Subspace.span(F, n * n, gens)
    if der is None:
        der = derivation_algebra(T)
    failures = []
    checked = 0
    for d in der.basis:
        for i in range(n):
            for j in range(i + 1, n):
                checked += 1
                dij = inner_derivation(T, unit_vec(F, n, i), unit_vec(F, n, j))
                comm = d.matmul(dij).sub(dij.matmul(d))
                expect = inner_derivation(T, d.col(i), unit_vec(F, n, j)).add(
                    inner_derivation(T, unit_vec(F, n, i), d.col(j)))
                if comm != expect or not span.contains(comm.flatten()):
                    failures.append((i, j))
    return InnerDerivations(T, span, IdealClosureCertificate(not failures, checked, tuple(failures)))


def _check_lie_tensor(field: Field, bracket: tuple) -> None:
    """Raise unless the n x n x n tensor defines a Lie algebra."""
    F = field
    n = len(bracket)
    for i in range(n):
        if not vec_is_zero(F, bracket[i][i]):
            raise ValueError(f"not a Lie algebra: [e_{i}, e_{i}] != 0")
        for j in range(n):
            if not vec_is_zero(F, vec_add(F, bracket[i][j], bracket[j][i])):
                raise ValueError(f"not a Lie algebra: antisymmetry fails at ({i}, {j})")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                acc = zero_vec(F, n)
                for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
                    w = bracket[a][b]
                    for m, wm in enumerate(w):
                        if not F.is_zero(wm):
                            acc = vec_add(F, acc, vec_scale(F, wm, bracket[m][c]))
                if not vec_is_zero(F, acc):
                    raise ValueError(f"not a Lie algebra: Jacobi fails at ({i}, {j}, {k})")


def lts_of_lie(algebra, field: Optional[Field] = None) -> LieTripleSystem:
    """The full algebra as a triple system under [a,b,c] = [[a,b],c].

    Accepts a graded Lie algebra (grading ignored) or a raw n x n x n
    bracket tensor together with its field.
    """
    if field is None:
        field = algebra.field
        bracket = algebra.bracket
    else:
        bracket = tuple(tuple(tuple(field.of(x) for x in v) for v in row) for row in algebra)
    _check_lie_tensor(field, bracket)
    F = field
    n = len(bracket)
    tensor = []
    for i in range(n):
        ti = []
        for j in range(n):
            tij = []
            for k in range(n):
                acc = zero_vec(F, n)
                for m, cm in enumerate(bracket[i][j]):
                    if not F.is_zero(cm):
                        acc = vec_add(F, acc, vec_scale(F, cm, bracket[m][k]))
                tij.append(acc)
            ti.append(tuple(tij))
        tensor.append(tuple(ti))
    return LieTripleSystem(F, n, tuple(tensor))


def odd_part_lts(L) -> LieTripleSystem:
    """The odd component of a graded Lie algebra as a triple system under
    [a,b,c] = [[a,b],c] (which lands back in the odd part)."""
    F = L.field
    n0, n1 = L.dim0, L.dim1
    n = n0 + n1
    tensor = []
    for a in range(n1):
        ta = []
        for b in range(n1):
            tab = []
            for c in range(n1):
                acc = zero_vec(F, n)
                w = L.bracket[n0 + a][n0 + b]
                for m, wm in enumerate(w):
                    if not F.is_zero(wm):
                        acc = vec_add(F, acc, vec_scale(F, wm, L.bracket[m][n0 + c]))
                if any(not F.is_zero(acc[i]) for i in range(n0)):
                    raise ValueError("grading violated: [[odd,odd],odd] left the odd part")
                tab.append(acc[n0:])
            ta.append(tuple(tab))
        tensor.append(tuple(ta))
    return LieTripleSystem(F, n1, tuple(tensor))
