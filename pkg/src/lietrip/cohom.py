"""Graded Chevalley-Eilenberg cochains in degrees <= 3, the coboundary,
H^2 of the graded subcomplex, cocycle-built central extensions, and the
constructive splitting of central 0-extensions.

A degree-n cochain stores one module-coordinate vector per sorted basis
combination i_1 < ... < i_n; evaluation on arbitrary tuples inserts the
sign of the sorting permutation and kills repeats, so alternation is
structural.  A cochain is graded when arguments of total degree g land in
the degree-g block of the module.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .exactlin import (
    Matrix, Subspace, Vector, kernel_basis, solve, unit_vec, vec_add,
    vec_is_zero, vec_scale, zero_vec,
)
from .grlie import (
    GradedHom, GradedLieAlgebra, GradedModule, center, is_generated_by_odd,
    trivial_module,
)
from .embed import UniversalCentral0Extension, universal_central_0_extension


@dataclass(frozen=True)
class Cochain:
    algebra: GradedLieAlgebra
    module: GradedModule
    degree: int
    values: tuple  # one module-coordinate vector per sorted index combination

    def __post_init__(self):
        if self.degree not in (1, 2, 3):
            raise ValueError("supported cochain degrees are 1, 2, 3")
        if len(self.values) != len(self.combos()):
            raise ValueError("value count does not match the combination count")
        if any(len(v) != self.module.dim for v in self.values):
            raise ValueError("value length does not match the module dimension")

    def combos(self) -> list:
        return list(combinations(range(self.algebra.dim), self.degree))

    def value(self, combo: tuple) -> Vector:
        return self.values[_combo_index(combo, self.algebra.dim, self.degree)]

    def eval_indices(self, indices: tuple) -> Vector:
        """Value on possibly unsorted basis indices, with alternating sign."""
        F = self.algebra.field
        if len(set(indices)) != len(indices):
            return zero_vec(F, self.module.dim)
        order = tuple(sorted(indices))
        sign = _permutation_sign(indices)
        v = self.value(order)
        return v if sign == 1 else vec_scale(F, F.neg(F.one()), v)

    def eval_mixed(self, x: Vector, rest: tuple) -> Vector:
        """Value on (x, e_rest...) for an arbitrary first argument x."""
        F = self.algebra.field
        out = zero_vec(F, self.module.dim)
        for k, xk in enumerate(x):
            if not F.is_zero(xk):
                out = vec_add(F, out, vec_scale(F, xk, self.eval_indices((k,) + rest)))
        return out

    def is_graded(self) -> bool:
        for combo, v in zip(self.combos(), self.values):
            g = sum(self.algebra.degree(i) for i in combo) % 2
            for r, x in enumerate(v):
                if self.module.degree(r) != g and not self.module.algebra.field.is_zero(x):
                    return False
        return True

    def is_zero(self) -> bool:
        return all(vec_is_zero(self.algebra.field, v) for v in self.values)

    def add(self, other: "Cochain") -> "Cochain":
        F = self.algebra.field
        return Cochain(self.algebra, self.module, self.degree,
                       tuple(vec_add(F, a, b) for a, b in zip(self.values, other.values)))

    def scale(self, c) -> "Cochain":
        F = self.algebra.field
        return Cochain(self.algebra, self.module, self.degree,
                       tuple(vec_scale(F, F.of(c), v) for v in self.values))


def _combo_index(combo: tuple, n: int, degree: int) -> int:
    # lexicographic position among combinations(range(n), degree)
    idx = 0
    prev = -1
    remaining = degree
    for pos, c in enumerate(combo):
        for skipped in range(prev + 1, c):
            idx += _n_choose_k(n - skipped - 1, degree - pos - 1)
        prev = c
        remaining -= 1
    return idx

def _n_choose_k(n: int, k: int) -> int:
    if k < 0 or n < k:
        return 0
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out

def _permutation_sign(indices: tuple) -> int:
    sign = 1
    idx = list(indices)
    for i in range(len(idx)):
        for j in range(i + 1, len(idx)):
            if idx[i] > idx[j]:
                sign = -sign
    return sign


def zero_cochain(L: GradedLieAlgebra, M: GradedModule, degree: int) -> Cochain:
    combos = list(combinations(range(L.dim), degree))
    z = zero_vec(L.field, M.dim)
    return Cochain(L, M, degree, tuple(z for _ in combos))


def graded_cochain_basis(L: GradedLieAlgebra, M: GradedModule, degree: int) -> list:
    """Indicator cochains spanning the graded cochain space, in the
    deterministic order (combination, module coordinate)."""
    if degree not in (1, 2, 3):
        raise ValueError("supported cochain degrees are 1, 2, 3")
    combos = list(combinations(range(L.dim), degree))
    out = []
    F = L.field
    for ci, combo in enumerate(combos):
        g = sum(L.degree(i) for i in combo) % 2
        for r in range(M.dim):
            if M.degree(r) != g:
                continue
            values = [zero_vec(F, M.dim) for _ in combos]
            values[ci] = unit_vec(F, M.dim, r)
            out.append(Cochain(L, M, degree, tuple(values)))
    return out


def _graded_slots(L: GradedLieAlgebra, M: GradedModule, degree: int) -> list:
    combos = list(combinations(range(L.dim), degree))
    slots = []
    for ci, combo in enumerate(combos):
        g = sum(L.degree(i) for i in combo) % 2
        for r in range(M.dim):
            if M.degree(r) == g:
                slots.append((ci, r))
    return slots


def _graded_coordinates(f: Cochain, slots: list) -> Vector:
    F = f.algebra.field
    if not f.is_graded():
        raise ValueError("cochain is not graded")
    return tuple(f.values[ci][r] for ci, r in slots)


def coboundary(f: Cochain) -> Cochain:
    """The Chevalley-Eilenberg differential

    (df)(x_1..x_{n+1}) = sum_i (-1)^{i+1} x_i . f(.. ^x_i ..)
                       + sum_{i<j} (-1)^{i+j} f([x_i,x_j], .. ^x_i .. ^x_j ..),

    evaluated on sorted basis combinations.  Grading is preserved.
    """
    L, M = f.algebra, f.module
    F = L.field
    n = f.degree
    if n >= 3:
        raise ValueError("coboundary is only taken up to degree-3 output")
    out_values = []
    for combo in combinations(range(L.dim), n + 1):
        acc = zero_vec(F, M.dim)
        for i in range(n + 1):
            rest = combo[:i] + combo[i + 1:]
            term = M.action[combo[i]].matvec(f.eval_indices(rest))
            if i % 2 == 1:
                term = vec_scale(F, F.neg(F.one()), term)
            acc = vec_add(F, acc, term)
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                rest = tuple(combo[k] for k in range(n + 1) if k != i and k != j)
                term = f.eval_mixed(L.bracket[combo[i]][combo[j]], rest)
                if (i + j) % 2 == 1:  # sign (-1)^{(i+1)+(j+1)} at 1-based positions
                    term = vec_scale(F, F.neg(F.one()), term)
                acc = vec_add(F, acc, term)
        out_values.append(acc)
    return Cochain(L, M, n + 1, tuple(out_values))


@dataclass(frozen=True)
class H2Result:
    dimension: int
    cocycle_dim: int
    coboundary_dim: int
    representatives: tuple  # cocycles spanning a complement of the coboundaries


def h2_graded(L: GradedLieAlgebra, M: GradedModule) -> H2Result:
    """dim ker(d_2) - dim im(d_1) on the graded subcomplex, with a
    deterministic RREF-complement of representatives."""
    basis2 = graded_cochain_basis(L, M, 2)
    slots2 = _graded_slots(L, M, 2)
    slots3 = _graded_slots(L, M, 3)
    d2 = Matrix.from_cols(L.field, [_graded_coordinates(coboundary(b), slots3) for b in basis2],
                          rows=len(slots3))
    z2 = kernel_basis(d2)
    basis1 = graded_cochain_basis(L, M, 1)
    d1_cols = [_graded_coordinates(coboundary(b), slots2) for b in basis1]
    b2 = Subspace.span(L.field, len(slots2), d1_cols)
    if not z2.contains_subspace(b2):
        raise RuntimeError("coboundaries escaped the cocycles; differential is broken")
    reps = []
    current = b2
    for v in z2.basis.entries:
        if not current.contains(v):
            reps.append(v)
            current = current.sum(Subspace.span(L.field, len(slots2), [v]))
    rep_cochains = []
    for coords in reps:
        f = zero_cochain(L, M, 2)
        for c, b in zip(coords, basis2):
            if not L.field.is_zero(c):
                f = f.add(b.scale(c))
        rep_cochains.append(f)
    return H2Result(z2.dim - b2.dim, z2.dim, b2.dim, tuple(rep_cochains))


class NotCentral0Extension(ValueError):
    pass


@dataclass(frozen=True)
class CentralExtensionProblem:
    """A surjective graded hom whose kernel is even and central."""

    total: GradedLieAlgebra
    base: GradedLieAlgebra
    phi: GradedHom
    kernel: Subspace

    @classmethod
    def from_hom(cls, phi: GradedHom) -> "CentralExtensionProblem":
        ker = phi.kernel()
        if not phi.is_surjective():
            raise NotCentral0Extension("the hom is not surjective")
        if not phi.source.even_subspace().contains_subspace(ker):
            raise NotCentral0Extension("the kernel is not contained in the even part")
        if not center(phi.source).contains_subspace(ker):
            raise NotCentral0Extension("the kernel is not central")
        return cls(phi.source, phi.target, phi, ker)


def cocycle_extension(L: GradedLieAlgebra, M: GradedModule, sigma: Cochain) -> CentralExtensionProblem:
    """The central 0-extension defined by a graded 2-cocycle with values in
    a trivial module with no odd part: bracket [x+m, y+n] = [x,y] + sigma(x,y)."""
    F = L.field
    if sigma.algebra != L or sigma.module != M or sigma.degree != 2:
        raise ValueError("sigma must be a degree-2 cochain on (L, M)")
    if not M.is_trivial() or M.dim1 != 0:
        raise ValueError("coefficients must form a trivial module with no odd part")
    if not sigma.is_graded():
        raise ValueError("sigma is not graded")
    if not coboundary(sigma).is_zero():
        raise ValueError("sigma is not a cocycle")
    m = M.dim
    dim0 = L.dim0 + m
    total_dim = L.dim + m

    def lift(i: int) -> int:
        return i if i < L.dim0 else i + m

    tensor = [[list(zero_vec(F, total_dim)) for _ in range(total_dim)] for _ in range(total_dim)]
    for i in range(L.dim):
        for j in range(L.dim):
            target = tensor[lift(i)][lift(j)]
            for l, x in enumerate(L.bracket[i][j]):
                target[lift(l)] = x
            if i != j:
                sig = sigma.eval_indices((i, j))
                for r, x in enumerate(sig):
                    target[L.dim0 + r] = F.add(target[L.dim0 + r], x)
    total = GradedLieAlgebra(F, dim0, L.dim1,
                             tuple(tuple(tuple(v) for v in row) for row in tensor))
    proj_rows = [unit_vec(F, total_dim, lift(i)) for i in range(L.dim)]
    phi = GradedHom(total, L, Matrix(F, L.dim, total_dim, tuple(proj_rows)))
    return CentralExtensionProblem.from_hom(phi)


def split_central_0_extension(prob: CentralExtensionProblem) -> Optional[GradedHom]:
    """A graded hom psi with phi . psi = id, or None when the extension does
    not split (the defining cocycle class is nonzero)."""
    K, L, phi = prob.total, prob.base, prob.phi
    F = K.field
    # graded linear section eta (block-diagonal matrices solve blockwise)
    eta_cols = []
    for i in range(L.dim):
        col = solve(phi.matrix, unit_vec(F, L.dim, i))
        if col is None:
            raise NotCentral0Extension("the hom is not surjective")
        eta_cols.append(col)
    eta = Matrix.from_cols(F, eta_cols, rows=K.dim)

    ker = prob.kernel
    # sigma(e_i, e_j) = [eta e_i, eta e_j] - eta([e_i, e_j]), valued in the kernel
    rows = []
    rhs = []
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            sig = K.bracket_vec(eta_cols[i], eta_cols[j])
            sig = tuple(F.sub(a, b) for a, b in zip(sig, eta.matvec(L.bracket[i][j])))
            sig_coords = ker.coordinates(sig)
            if sig_coords is None:
                raise RuntimeError("section defect escaped the kernel")
            if L.degree(i) != L.degree(j):
                if not vec_is_zero(F, sig_coords):
                    raise RuntimeError("mixed-parity defect should vanish for a 0-extension")
                continue
            # unknowns: tau(e_l) for even l, in kernel coordinates
            for s in range(ker.dim):
                row = [F.zero()] * (L.dim0 * ker.dim)
                for l in range(L.dim0):
                    row[l * ker.dim + s] = L.bracket[i][j][l]
                rows.append(tuple(row))
                rhs.append(sig_coords[s])
    system = Matrix.make(F, rows, cols=L.dim0 * ker.dim)
    sol = solve(system, tuple(rhs))
    if sol is None:
        return None
    psi_cols = []
    for l in range(L.dim):
        col = eta_cols[l]
        if l < L.dim0:
            tau_l = zero_vec(F, K.dim)
            for s in range(ker.dim):
                tau_l = vec_add(F, tau_l, vec_scale(F, sol[l * ker.dim + s], ker.basis.entries[s]))
            col = vec_add(F, col, tau_l)
        psi_cols.append(col)
    psi = GradedHom(L, K, Matrix.from_cols(F, psi_cols, rows=K.dim))
    if phi.compose(psi).matrix != Matrix.identity(F, L.dim):
        raise RuntimeError("splitting failed to section the extension")
    return psi


def is_0_centrally_closed(L: GradedLieAlgebra) -> bool:
    """Whether every central 0-extension of L splits; decided on the
    one-dimensional trivial module, which suffices over a field."""
    return h2_graded(L, trivial_module(L)).dimension == 0


@dataclass(frozen=True)
class EnvelopeCriterionReport:
    """Outcome of the two-condition test for being (isomorphic to) the
    universal imbedding of a triple system: the odd part must generate and
    trivial-coefficient graded H^2 must vanish."""

    verdict: bool
    generated_by_odd: bool
    h2_dimension: int
    obstruction: Optional[str]
    extension: Optional[UniversalCentral0Extension]  # witness when the verdict holds

    @property
    def witness(self) -> Optional[GradedHom]:
        return self.extension.hom if self.extension is not None else None


def envelope_criterion(L: GradedLieAlgebra) -> EnvelopeCriterionReport:
    generated = is_generated_by_odd(L)
    h2 = h2_graded(L, trivial_module(L))
    closed = h2.dimension == 0
    verdict = generated and closed
    obstruction = None
    extension = None
    if not generated:
        obstruction = "the odd part does not generate the algebra"
    elif not closed:
        obstruction = f"graded H^2 with trivial coefficients has dimension {h2.dimension}"
    else:
        extension = universal_central_0_extension(L)
        if extension.kernel.dim != 0:
            raise RuntimeError("criterion held but the canonical extension is not injective")
    return EnvelopeCriterionReport(verdict, generated, h2.dimension, obstruction, extension)
