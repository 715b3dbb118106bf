"""Semidirect products g x V* with V* abelian, and their index theory.

The combined basis is the g-basis followed by the dual basis of V*.  Points
of the dual space q* = g* + V are stored as (xi, v) coordinate pairs.  The
index of q is estimated from the rank of the Kirillov form at random integer
points (the rank is always even, and two disjoint sample batches must agree
for the estimate to count as stabilised).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .lie import LieAlgebra, Representation, Subspace, stabiliser, subalgebra, is_abelian
from .linalg import Matrix, normalize_scalar, rank
from .sampling import derive_rng, rand_vector


@dataclass
class DualPoint:
    """A point (xi, v) of q* = g* + V."""

    xi: list
    v: list

    def combined(self) -> list:
        return list(self.xi) + list(self.v)


class SemidirectProduct:
    """q = g x V* for a module V of g; V* sits inside q as an abelian ideal."""

    def __init__(self, rep: Representation, name: str = ""):
        self.rep = rep
        self.g = rep.algebra
        self.dim_g = rep.algebra.dim
        self.dim_v = rep.dim_v
        self.dim = self.dim_g + self.dim_v
        brackets: dict = {}
        for key, entry in self.g.brackets.items():
            brackets[key] = dict(entry)
        # [e_a, zeta_j] = - sum_i rho_a[j, i] zeta_i  (contragredient action)
        dg = self.dim_g
        for a in range(dg):
            rho = rep.action[a]
            for j in range(self.dim_v):
                entry = {}
                for i in range(self.dim_v):
                    c = rho[j, i]
                    if c != 0:
                        entry[dg + i] = -c
                if entry:
                    brackets[(a, dg + j)] = entry
        self.lie = LieAlgebra(
            name or "%s |x V*" % self.g.name, self.dim, brackets
        )

    def __repr__(self):
        return "SemidirectProduct(%s, dim=%d+%d)" % (self.g.name, self.dim_g, self.dim_v)

    def pair(self, eta: DualPoint, z: Sequence):
        """<eta, z> for z in q (combined coordinates)."""
        acc = 0
        for c, zc in zip(eta.combined(), z):
            if c != 0 and zc != 0:
                acc = acc + c * zc
        return normalize_scalar(acc)


def moment_map(q: SemidirectProduct, v: Sequence, zeta: Sequence) -> list:
    """mu(v, zeta) in g*: a |-> <zeta, a . v>."""
    out = []
    for a in range(q.dim_g):
        av = q.rep.act_basis(a, v)
        acc = 0
        for z, w in zip(zeta, av):
            if z != 0 and w != 0:
                acc = acc + z * w
        out.append(normalize_scalar(acc))
    return out


def coadjoint_unipotent(q: SemidirectProduct, zeta: Sequence, eta: DualPoint) -> DualPoint:
    """Action of the unipotent element 1 |x zeta on eta = (xi, v):
    the v part is fixed and xi picks up the moment map term."""
    mu = moment_map(q, eta.v, zeta)
    xi = [normalize_scalar(x + m) for x, m in zip(eta.xi, mu)]
    return DualPoint(xi, list(eta.v))


def kirillov_form(lie: LieAlgebra, eta_combined: Sequence) -> Matrix:
    """The skew form B(eta)_{uv} = <eta, [b_u, b_v]> on the whole algebra."""
    n = lie.dim
    m = Matrix.zeros(n, n)
    for (a, b), entry in lie.brackets.items():
        acc = 0
        for c, coeff in entry.items():
            e = eta_combined[c]
            if e != 0 and coeff != 0:
                acc = acc + coeff * e
        acc = normalize_scalar(acc)
        if acc != 0:
            m.rows[a][b] = acc
            m.rows[b][a] = -acc
    return m


def kirillov_rank(q: SemidirectProduct, eta: DualPoint) -> int:
    r = rank(kirillov_form(q.lie, eta.combined()))
    if r % 2:
        raise AssertionError("Kirillov form rank must be even")
    return r


@dataclass
class IndexEstimate:
    index: int
    max_rank: int
    stabilised: bool
    samples: int


def index_estimate(
    lie: LieAlgebra, seed: int = 0, samples: int = 20, bound: int = 10
) -> IndexEstimate:
    """ind(lie) = dim - max rank of the Kirillov form over sampled points.

    Runs two disjoint batches; the estimate is flagged stabilised only when
    both batches attain the same maximal rank.
    """
    best = [0, 0]
    for batch in range(2):
        rng = derive_rng(seed, "kirillov", "batch%d" % batch)
        for _ in range(max(1, samples // 2)):
            eta = rand_vector(rng, lie.dim, bound)
            r = rank(kirillov_form(lie, eta))
            if r > best[batch]:
                best[batch] = r
    max_rank = max(best)
    if max_rank % 2:
        raise AssertionError("Kirillov form rank must be even")
    return IndexEstimate(
        index=lie.dim - max_rank,
        max_rank=max_rank,
        stabilised=best[0] == best[1],
        samples=samples,
    )


def b_of(lie: LieAlgebra, seed: int = 0, samples: int = 20) -> Fraction:
    """b(lie) = (dim + ind)/2 with the sampled index."""
    est = index_estimate(lie, seed=seed, samples=samples)
    return Fraction(lie.dim + est.index, 2)


@dataclass
class RaisReport:
    dim_v: int
    dim_g: int
    stab_dim: int
    stab_index: int
    stab_abelian: bool
    index_q: int
    stabilised: bool
    consistent: bool


def rais_consistency(
    q: SemidirectProduct, seed: int = 0, samples: int = 20, bound: int = 10
) -> RaisReport:
    """Check ind(q) = dim V - dim g + dim g_x + ind g_x at a generic x in V.

    The generic point is the sampled minimiser of the stabiliser dimension;
    its stabiliser is extracted exactly and its own index is sampled inside
    the subalgebra.
    """
    rng = derive_rng(seed, "rais")
    best_x = None
    best: Subspace | None = None
    for _ in range(samples):
        x = rand_vector(rng, q.dim_v, bound)
        s = stabiliser(q.rep, x)
        if best is None or s.dim < best.dim:
            best, best_x = s, x
    stab = best
    if stab.dim == 0:
        stab_index = 0
        stab_abelian = True
    else:
        sub = subalgebra(q.g, stab)
        stab_index = index_estimate(sub, seed=seed, samples=samples).index
        stab_abelian = is_abelian(q.g, stab)
    est = index_estimate(q.lie, seed=seed, samples=samples)
    expected = q.dim_v - q.dim_g + stab.dim + stab_index
    return RaisReport(
        dim_v=q.dim_v,
        dim_g=q.dim_g,
        stab_dim=stab.dim,
        stab_index=stab_index,
        stab_abelian=stab_abelian,
        index_q=est.index,
        stabilised=est.stabilised,
        consistent=est.index == expected,
    )
