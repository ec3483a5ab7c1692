"""Imbeddings of Lie triple systems into Z2-graded Lie algebras.

Two constructions are built here for a system T:

* the standard imbedding, inner derivations plus T itself, with bracket
  [X+a, Y+b] = ([X,Y] + D_{a,b}) + (Xb - Ya);
* the universal imbedding, whose even part is the pair algebra <T,T> =
  (T^T)/A(T^T), a central extension of the inner derivations, and whose
  odd part is T.  The inclusion of T into it is initial among all
  imbeddings of T into Lie algebras, which makes T -> A(T) a functor and
  every hom out of it determined by its odd restriction.

Both are produced with deterministic RREF bases so structure constants are
reproducible across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .exactlin import (
    Field, Matrix, QuotientSpace, Subspace, Vector, kernel_basis,
    mat_from_flat, quotient, rank, unit_vec, vec_add, vec_is_zero, vec_scale,
    zero_vec,
)
from .grlie import (
    GradedHom, GradedLieAlgebra, GradedModule, center, is_generated_by_odd,
)
from .lts import (
    DerivationAlgebra, InnerDerivations, LieTripleSystem, LtsHom,
    derivation_algebra, inner_derivation, inner_derivation_algebra,
    is_lts_hom, odd_part_lts,
)


# ---------------------------------------------------------------------------
# exterior square bookkeeping

def wedge_pairs(n: int) -> list:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]

def wedge_dim(n: int) -> int:
    return n * (n - 1) // 2

def wedge_index(i: int, j: int, n: int) -> int:
    if not 0 <= i < j < n:
        raise ValueError("wedge index needs i < j")
    return i * n - i * (i + 1) // 2 + (j - i - 1)


def wedge_of(field: Field, a: Vector, b: Vector) -> Vector:
    """Coordinates of a^b on the basis {e_i^e_j : i < j}."""
    n = len(a)
    out = []
    for i, j in wedge_pairs(n):
        out.append(field.sub(field.mul(a[i], b[j]), field.mul(a[j], b[i])))
    return tuple(out)


def wedge_action(endo: Matrix) -> Matrix:
    """The induced action D.(a^b) = Da^b + a^Db on the exterior square."""
    F = endo.field
    n = endo.rows
    pairs = wedge_pairs(n)
    cols = []
    for i, j in pairs:
        cols.append(vec_add(F,
                            wedge_of(F, endo.col(i), unit_vec(F, n, j)),
                            wedge_of(F, unit_vec(F, n, i), endo.col(j))))
    return Matrix.from_cols(F, cols, rows=len(pairs))


# ---------------------------------------------------------------------------
# standard imbedding

@dataclass(frozen=True)
class StandardImbedding:
    lts: LieTripleSystem
    algebra: GradedLieAlgebra
    inclusion: Matrix  # (dim0+dim1) x dim(T), onto the odd part
    inder: InnerDerivations


def standard_imbedding(T: LieTripleSystem) -> StandardImbedding:
    F = T.field
    n = T.dim
    inder = inner_derivation_algebra(T)
    r = inder.dim
    xs = inder.basis_matrices()
    total = r + n

    def inder_coords(m: Matrix) -> Vector:
        coords = inder.span.coordinates(m.flatten())
        if coords is None:
            raise RuntimeError("inner derivations are not closed as expected")
        return coords

    tensor = [[list(zero_vec(F, total)) for _ in range(total)] for _ in range(total)]
    for a in range(r):
        for b in range(r):
            comm = xs[a].matmul(xs[b]).sub(xs[b].matmul(xs[a]))
            for s, x in enumerate(inder_coords(comm)):
                tensor[a][b][s] = x
    for a in range(r):
        for i in range(n):
            col = xs[a].col(i)
            for l, x in enumerate(col):
                tensor[a][r + i][r + l] = x
                tensor[r + i][a][r + l] = F.neg(x)
    for i in range(n):
        for j in range(n):
            d = inner_derivation(T, unit_vec(F, n, i), unit_vec(F, n, j))
            for s, x in enumerate(inder_coords(d)):
                tensor[r + i][r + j][s] = x
    algebra = GradedLieAlgebra(F, r, n,
                               tuple(tuple(tuple(v) for v in row) for row in tensor))
    inclusion = Matrix.from_cols(F, [unit_vec(F, total, r + i) for i in range(n)], rows=total)
    return StandardImbedding(T, algebra, inclusion, inder)


# ---------------------------------------------------------------------------
# the exterior square as a module over the derivation algebra

@dataclass(frozen=True)
class WedgeModule:
    lts: LieTripleSystem
    der: DerivationAlgebra
    der_algebra: GradedLieAlgebra   # the derivations as an abstract (all-even) algebra
    module: GradedModule            # T^T with the induced action
    lam: Matrix                     # der.dim x wedge_dim, e_i^e_j -> D_{e_i,e_j}


def wedge_module(T: LieTripleSystem) -> WedgeModule:
    F = T.field
    n = T.dim
    der = derivation_algebra(T)
    der_algebra = GradedLieAlgebra(F, der.dim, 0, der.bracket)
    actions = tuple(wedge_action(x) for x in der.basis)
    module = GradedModule(der_algebra, wedge_dim(n), 0, actions, unchecked=True)
    lam_cols = []
    for i, j in wedge_pairs(n):
        d = inner_derivation(T, unit_vec(F, n, i), unit_vec(F, n, j))
        coords = der.coordinates(d)
        if coords is None:
            raise RuntimeError("inner derivation outside the derivation algebra")
        lam_cols.append(coords)
    lam = Matrix.from_cols(F, lam_cols, rows=der.dim)
    return WedgeModule(T, der, der_algebra, module, lam)


# ---------------------------------------------------------------------------
# the generic module-quotient algebra

@dataclass(frozen=True)
class ModuleQuotient:
    """Quotient Q = M/A(M) of a module by its radical A(M) = span{lam(m).m},
    carrying the Lie bracket [p,q] = mu(p).q and the induced map mu."""

    a_subspace: Subspace
    quotient: QuotientSpace
    algebra: GradedLieAlgebra  # all-even, dim = M/A(M)
    mu: Matrix                 # L.dim x quotient dim


def module_quotient_algebra(L: GradedLieAlgebra, module: GradedModule,
                            lam: Matrix) -> ModuleQuotient:
    """Requires lam to be a module homomorphism into the adjoint module,
    lam(l.m) = [l, lam(m)]; raises with a witness pair otherwise."""
    F = L.field
    mdim = module.dim
    if lam.rows != L.dim or lam.cols != mdim:
        raise ValueError("lam shape mismatch")
    for a in range(L.dim):
        for u in range(mdim):
            lhs = lam.matvec(module.action[a].col(u))
            rhs = L.bracket_vec(unit_vec(F, L.dim, a), lam.col(u))
            if lhs != rhs:
                raise ValueError(f"lam is not a module homomorphism: fails at basis pair ({a}, {u})")

    def act_of(x: Vector) -> Matrix:
        return module.act(x)

    gens = []
    for u in range(mdim):
        gens.append(act_of(lam.col(u)).col(u))
    for u in range(mdim):
        for v in range(u + 1, mdim):
            gens.append(vec_add(F, act_of(lam.col(u)).col(v), act_of(lam.col(v)).col(u)))
    a_sub = Subspace.span(F, mdim, gens)

    ker = kernel_basis(lam)
    if not ker.contains_subspace(a_sub):
        raise RuntimeError("A(M) escaped the kernel of lam")
    imker = [act_of(lam.col(u)).matvec(k) for u in range(mdim) for k in ker.basis.entries]
    if not a_sub.contains_subspace(Subspace.span(F, mdim, imker)):
        raise RuntimeError("Im(lam).Ker(lam) escaped A(M)")

    q = quotient(mdim, a_sub)
    mu = lam.matmul(q.section)
    qdim = q.dim
    tensor = []
    for s in range(qdim):
        acting = act_of(mu.col(s))
        row = []
        for t in range(qdim):
            row.append(q.projection.matvec(acting.matvec(q.section.col(t))))
        tensor.append(tuple(row))
    algebra = GradedLieAlgebra(F, qdim, 0, tuple(tensor))
    if not center(algebra).contains_subspace(kernel_basis(mu)):
        raise RuntimeError("kernel of mu is not central in the quotient")
    return ModuleQuotient(a_sub, q, algebra, mu)


# ---------------------------------------------------------------------------
# the pair algebra <T,T>

@dataclass(frozen=True)
class PairAlgebra:
    lts: LieTripleSystem
    algebra: GradedLieAlgebra  # all-even
    mu: Matrix                 # der.dim x dim<T,T>, valued in derivation coordinates
    mu_end: Matrix             # n^2 x dim<T,T>, same map flattened into End(T)
    projection: Matrix         # wedge -> <T,T>
    section: Matrix            # <T,T> -> wedge (RREF coset representatives)
    wedge: WedgeModule
    a_subspace: Subspace


def pair_algebra(T: LieTripleSystem) -> PairAlgebra:
    F = T.field
    n = T.dim
    w = wedge_module(T)
    mq = module_quotient_algebra(w.der_algebra, w.module, w.lam)
    qdim = mq.algebra.dim0
    end_cols = []
    for s in range(qdim):
        acc = zero_vec(F, n * n)
        for a, coeff in enumerate(mq.mu.col(s)):
            if not F.is_zero(coeff):
                acc = vec_add(F, acc, vec_scale(F, coeff, w.der.basis[a].flatten()))
        end_cols.append(acc)
    mu_end = Matrix.from_cols(F, end_cols, rows=n * n)
    return PairAlgebra(T, mq.algebra, mq.mu, mu_end,
                       mq.quotient.projection, mq.quotient.section, w, mq.a_subspace)


# ---------------------------------------------------------------------------
# the universal imbedding

@dataclass(frozen=True)
class UniversalImbedding:
    lts: LieTripleSystem
    algebra: GradedLieAlgebra
    iota: Matrix               # dim x dim(T), inclusion onto the odd part
    upsilon: GradedHom         # onto the standard imbedding
    angle_basis: Matrix        # coset representatives of <T,T> inside the wedge
    angle_projection: Matrix   # wedge -> <T,T>
    pair: PairAlgebra
    ste: StandardImbedding


def universal_imbedding(T: LieTripleSystem) -> UniversalImbedding:
    F = T.field
    n = T.dim
    pa = pair_algebra(T)
    q = pa.algebra.dim0
    total = q + n
    mats = [mat_from_flat(F, pa.mu_end.col(s), n, n) for s in range(q)]

    tensor = [[list(zero_vec(F, total)) for _ in range(total)] for _ in range(total)]
    for s in range(q):
        for t in range(q):
            for l, x in enumerate(pa.algebra.bracket[s][t]):
                tensor[s][t][l] = x
    for s in range(q):
        for a in range(n):
            col = mats[s].col(a)
            for l, x in enumerate(col):
                tensor[s][q + a][q + l] = x
                tensor[q + a][s][q + l] = F.neg(x)
    for a in range(n):
        for b in range(n):
            if a == b:
                continue
            if a < b:
                col = pa.projection.col(wedge_index(a, b, n))
            else:
                col = vec_scale(F, F.neg(F.one()), pa.projection.col(wedge_index(b, a, n)))
            for s, x in enumerate(col):
                tensor[q + a][q + b][s] = x
    algebra = GradedLieAlgebra(F, q, n,
                               tuple(tuple(tuple(v) for v in row) for row in tensor))

    ste = standard_imbedding(T)
    r = ste.inder.dim
    ucols = []
    for s in range(q):
        coords = ste.inder.span.coordinates(pa.mu_end.col(s))
        if coords is None:
            raise RuntimeError("mu does not land in the inner derivations")
        ucols.append(coords + zero_vec(F, n))
    for a in range(n):
        ucols.append(unit_vec(F, r + n, r + a))
    upsilon = GradedHom(algebra, ste.algebra, Matrix.from_cols(F, ucols, rows=r + n))
    iota = Matrix.from_cols(F, [unit_vec(F, total, q + a) for a in range(n)], rows=total)
    return UniversalImbedding(T, algebra, iota, upsilon,
                              pa.section.transpose(), pa.projection, pa, ste)


# ---------------------------------------------------------------------------
# generic graded algebra from an equivariant alternating pairing

def graded_algebra_from_pairing(L: GradedLieAlgebra, module: GradedModule,
                                pairing: Matrix) -> GradedLieAlgebra:
    """Glue an (all-even) algebra L to a module M as the odd part, with
    [x+m, y+n] = ([x,y] + <m,n>) + (x.n - y.m).

    The pairing is a matrix on wedge coordinates of M.  Both hypotheses are
    checked on basis tuples first: equivariance [x,<m,n>] = <x.m,n> + <m,x.n>
    and the cyclic relation <m,n>.k + <n,k>.m + <k,m>.n = 0.
    """
    F = L.field
    if L.dim1 != 0:
        raise ValueError("the base algebra must be purely even")
    mdim = module.dim
    if pairing.rows != L.dim or pairing.cols != wedge_dim(mdim):
        raise ValueError("pairing shape mismatch")

    def pair_of(u: Vector, v: Vector) -> Vector:
        return pairing.matvec(wedge_of(F, u, v))

    for a in range(L.dim):
        act = module.action[a]
        for u in range(mdim):
            eu = unit_vec(F, mdim, u)
            for v in range(u + 1, mdim):
                ev = unit_vec(F, mdim, v)
                lhs = L.bracket_vec(unit_vec(F, L.dim, a), pair_of(eu, ev))
                rhs = vec_add(F, pair_of(act.col(u), ev), pair_of(eu, act.col(v)))
                if lhs != rhs:
                    raise ValueError(f"pairing is not equivariant: fails at ({a}, {u}, {v})")
    for u in range(mdim):
        eu = unit_vec(F, mdim, u)
        for v in range(mdim):
            ev = unit_vec(F, mdim, v)
            for k in range(mdim):
                ek = unit_vec(F, mdim, k)
                acc = module.act(pair_of(eu, ev)).matvec(ek)
                acc = vec_add(F, acc, module.act(pair_of(ev, ek)).matvec(eu))
                acc = vec_add(F, acc, module.act(pair_of(ek, eu)).matvec(ev))
                if not vec_is_zero(F, acc):
                    raise ValueError(f"pairing violates the cyclic relation at ({u}, {v}, {k})")

    total = L.dim + mdim
    tensor = [[list(zero_vec(F, total)) for _ in range(total)] for _ in range(total)]
    for i in range(L.dim):
        for j in range(L.dim):
            for l, x in enumerate(L.bracket[i][j]):
                tensor[i][j][l] = x
        act = module.action[i]
        for u in range(mdim):
            for l, x in enumerate(act.col(u)):
                tensor[i][L.dim + u][L.dim + l] = x
                tensor[L.dim + u][i][L.dim + l] = F.neg(x)
    for u in range(mdim):
        eu = unit_vec(F, mdim, u)
        for v in range(mdim):
            if u == v:
                continue
            for l, x in enumerate(pair_of(eu, unit_vec(F, mdim, v))):
                tensor[L.dim + u][L.dim + v][l] = x
    return GradedLieAlgebra(F, L.dim, mdim,
                            tuple(tuple(tuple(v) for v in row) for row in tensor))


# ---------------------------------------------------------------------------
# homomorphism extension and the functor on morphisms

def extend_hom(T: LieTripleSystem, L: GradedLieAlgebra, alpha: Matrix,
               envelope: Optional[UniversalImbedding] = None) -> GradedHom:
    """The unique graded hom out of the universal imbedding of T restricting
    to alpha: T -> L_1 on the odd part.

    alpha must be a triple-system hom into the odd part of L.  The even
    values are [alpha(t), alpha(t')] summed over a coset representative of
    each pair-algebra basis vector; well-definedness (the radical A(T^T)
    must map to zero) is re-verified at runtime.
    """
    F = L.field
    n = T.dim
    if alpha.rows != L.dim1 or alpha.cols != n:
        raise ValueError("alpha must be an L.dim1 x dim(T) matrix")
    if not is_lts_hom(alpha, T, odd_part_lts(L)):
        raise ValueError("alpha is not a homomorphism into the odd part of L")
    env = envelope if envelope is not None else universal_imbedding(T)
    alpha_cols = [zero_vec(F, L.dim0) + alpha.col(j) for j in range(n)]
    zeta_cols = [L.bracket_vec(alpha_cols[i], alpha_cols[j]) for i, j in wedge_pairs(n)]
    zeta = Matrix.from_cols(F, zeta_cols, rows=L.dim)
    for v in env.pair.a_subspace.basis.entries:
        if not vec_is_zero(F, zeta.matvec(v)):
            raise RuntimeError("extension ill-defined: the radical does not map to zero")
    cols = [zeta.matvec(env.pair.section.col(s)) for s in range(env.algebra.dim0)]
    cols += alpha_cols
    return GradedHom(env.algebra, L, Matrix.from_cols(F, cols, rows=L.dim))


def imbedding_functor_hom(alpha: LtsHom,
                          source_env: Optional[UniversalImbedding] = None,
                          target_env: Optional[UniversalImbedding] = None) -> GradedHom:
    """The universal imbedding applied to a morphism of triple systems."""
    env_s = target_env if target_env is not None else universal_imbedding(alpha.target)
    return extend_hom(alpha.source, env_s.algebra, alpha.matrix, envelope=source_env)


# ---------------------------------------------------------------------------
# universal central 0-extensions

@dataclass(frozen=True)
class UniversalCentral0Extension:
    envelope: UniversalImbedding  # of the odd part of L
    hom: GradedHom                # envelope.algebra -> L, the identity on odd parts
    kernel: Subspace


def universal_central_0_extension(L: GradedLieAlgebra) -> UniversalCentral0Extension:
    """For L generated by its odd part: the extension of id on L_1 to a
    surjection from the universal imbedding of L_1, whose kernel is even
    and central."""
    if not is_generated_by_odd(L):
        raise ValueError("algebra is not generated by its odd part")
    F = L.field
    T = odd_part_lts(L)
    env = universal_imbedding(T)
    hom = extend_hom(T, L, Matrix.identity(F, L.dim1), envelope=env)
    if rank(hom.matrix) != L.dim:
        raise RuntimeError("extension of the identity failed to be surjective")
    ker = kernel_basis(hom.matrix)
    if not env.algebra.even_subspace().contains_subspace(ker):
        raise RuntimeError("kernel escaped the even part")
    if not center(env.algebra).contains_subspace(ker):
        raise RuntimeError("kernel escaped the center")
    return UniversalCentral0Extension(env, hom, ker)
