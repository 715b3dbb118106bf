"""Polynomial covariants V -> g and the identity checks built on them.

A covariant is a polynomial map from a module V into its Lie algebra g.  It
is stored either as a ring-generic formula producing a matrix in the
algebra's realisation, or directly as coordinate polynomials on g's basis.
Every identity check comes in two flavours:

* exact -- the identity is expanded in the canonical polynomial ring and
  must vanish termwise; refused past the symbolic cutoffs,
* sampled -- the identity is evaluated at random integer points
  (Schwartz-Zippel style), with a re-evaluatable witness on failure.

``mode="auto"`` resolves to exact whenever the identity's ring fits the
cutoffs, and to sampled otherwise.  The resolution happens *before* any
symbolic expansion, so oversized rings are never materialised by accident.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .lie import Representation, stabiliser
from .linalg import Matrix, SpanSolver, is_scalar, normalize_scalar, rank, solve
from .poly import (
    EXACT_MAX_DEGREE,
    EXACT_MAX_VARS,
    CutoffExceeded,
    MultiPoly,
    ZeroCheck,
    poly_is_zero,
)
from .sampling import derive_rng, rand_vector
from .semidirect import SemidirectProduct, moment_map


def _as_poly(x, num_vars: int) -> MultiPoly:
    if isinstance(x, MultiPoly):
        return x
    return MultiPoly.const(num_vars, x)


def resolve_mode(mode: str, num_vars: int, degree) -> str:
    """Resolve "auto" against the symbolic cutoffs before any expansion."""
    if mode not in ("exact", "sampled", "auto"):
        raise ValueError("mode must be exact, sampled, or auto")
    if mode != "auto":
        return mode
    if degree is None:
        return "sampled"
    if num_vars <= EXACT_MAX_VARS and degree <= EXACT_MAX_DEGREE:
        return "exact"
    return "sampled"


def _require_exact(num_vars: int, degree) -> None:
    if degree is None or num_vars > EXACT_MAX_VARS or degree > EXACT_MAX_DEGREE:
        raise CutoffExceeded(
            "exact identity refused: %d vars, degree %s" % (num_vars, degree)
        )


def _polys_zero_exact(polys) -> ZeroCheck:
    """Termwise zero test over a list of already-expanded polynomials."""
    for p in polys:
        if not p.is_zero():
            return poly_is_zero(p, "exact")
    return ZeroCheck("proved_zero", "exact")


class Covariant:
    """Polynomial map V -> g attached to a representation of g on V.

    Exactly one of ``matrix_formula`` (coords of V, in any commutative ring,
    to a matrix in g's realisation) or ``components`` (one polynomial per
    basis element of g) must describe the map; the other view is derived on
    demand.  ``degree`` is the stated polynomial degree, used to budget
    exact checks before anything is expanded.
    """

    def __init__(
        self,
        rep: Representation,
        matrix_formula: Callable[[Sequence], Matrix] | None = None,
        components: Sequence[MultiPoly] | None = None,
        name: str = "",
        degree: int | None = None,
    ):
        if (matrix_formula is None) == (components is None):
            raise ValueError("give a matrix formula or components, not both")
        self.rep = rep
        self.name = name
        self._formula = matrix_formula
        self._components = list(components) if components is not None else None
        if self._components is not None:
            if len(self._components) != rep.algebra.dim:
                raise ValueError("need one component per algebra basis element")
            if degree is None:
                degs = [p.degree() for p in self._components if not p.is_zero()]
                degree = max(int(d) for d in degs) if degs else 0
        self.degree = degree
        self._solver: SpanSolver | None = None

    def __repr__(self):
        return "Covariant(%s: %s -> %s)" % (
            self.name or "F",
            self.rep.label or "V",
            self.rep.algebra.name,
        )

    # -- evaluation -----------------------------------------------------

    def _basis_solver(self) -> SpanSolver:
        if self._solver is None:
            basis = self.rep.algebra.basis
            if basis is None:
                raise ValueError("algebra has no matrix realisation")
            self._solver = SpanSolver([m.vec() for m in basis])
        return self._solver

    def matrix_at(self, v: Sequence) -> Matrix:
        """F(v) in the algebra's matrix realisation; v in any ring."""
        if self._formula is not None:
            return self._formula(list(v))
        basis = self.rep.algebra.basis
        if basis is None:
            raise ValueError("algebra has no matrix realisation")
        out = Matrix.zeros(basis[0].nrows, basis[0].ncols)
        for c, b in zip(self.coords_at(v), basis):
            if _is_zero_entry(c):
                continue
            out = out + b * c
        return out

    def coords_at(self, v: Sequence) -> list:
        """F(v) in g's basis coordinates; entries live in v's ring."""
        if self._components is not None:
            return [_eval_component(p, v) for p in self._components]
        mat = self._formula(list(v))
        coords = self._basis_solver().coords(mat.vec())
        if coords is None:
            raise ValueError("covariant %r left its algebra at %r" % (self.name, v))
        return coords

    @property
    def components(self) -> list[MultiPoly]:
        """Coordinate polynomials of F on g's basis (built once, cached)."""
        if self._components is None:
            vs = MultiPoly.variables(self.rep.dim_v)
            coords = self.coords_at(vs)
            self._components = [_as_poly(c, self.rep.dim_v) for c in coords]
            if self.degree is None:
                degs = [p.degree() for p in self._components if not p.is_zero()]
                self.degree = max(int(d) for d in degs) if degs else 0
        return self._components

    @staticmethod
    def from_components(rep: Representation, comps: Sequence[MultiPoly], name: str = "") -> "Covariant":
        return Covariant(rep, components=comps, name=name)


def _is_zero_entry(c) -> bool:
    if is_scalar(c):
        return c == 0
    return c.is_zero()


def _eval_component(p: MultiPoly, v: Sequence):
    if v and isinstance(v[0], MultiPoly):
        return p.substitute(v, v[0].num_vars)
    return p.evaluate(v)


# -- infinitesimal action on covariants ----------------------------------


def directional_derivative(F: Covariant, v: Sequence, w: Sequence) -> Matrix:
    """DF_v(w) at a numeric point: the t-coefficient of F(v + t w)."""
    line = [MultiPoly(1, {(1,): wi, (0,): vi} if wi != 0 else ({(0,): vi} if vi != 0 else {}))
            for vi, wi in zip(v, w)]
    mat = F.matrix_at(line)
    return mat.map(lambda e: _t_coefficient(e, 1))


def _t_coefficient(entry, k: int):
    if is_scalar(entry):
        return 0 if k > 0 else entry
    return entry.terms.get((k,), 0)


def act_on_matrix_polys(F: Covariant, x: Sequence) -> Matrix:
    """(x*F)(v) = [X, F(v)] - DF_v(x.v), symbolically, as a polynomial matrix."""
    nv = F.rep.dim_v
    vs = MultiPoly.variables(nv)
    fmat = F.matrix_at(vs).map(lambda e: _as_poly(e, nv))
    xmat = _algebra_matrix(F.rep.algebra, x)
    bracket = xmat * fmat - fmat * xmat
    w = F.rep.act(x, vs)
    deriv = fmat.map(lambda e: _directional_poly(e, w))
    return bracket.map(lambda e: _as_poly(e, nv)) - deriv


def act_on_matrix_at(F: Covariant, x: Sequence, v: Sequence) -> Matrix:
    """(x*F)(v) at a numeric point."""
    fmat = F.matrix_at(v)
    xmat = _algebra_matrix(F.rep.algebra, x)
    return xmat * fmat - fmat * xmat - directional_derivative(F, v, F.rep.act(x, v))


def act_on_components(F: Covariant, x: Sequence) -> list[MultiPoly]:
    """(x*F) in g's basis coordinates, one polynomial per basis element."""
    nv = F.rep.dim_v
    vs = MultiPoly.variables(nv)
    comps = F.components
    bracket = F.rep.algebra.bracket_coords(list(x), comps)
    w = F.rep.act(x, vs)
    out = []
    for br, comp in zip(bracket, comps):
        out.append(_as_poly(br, nv) - _directional_poly(comp, w))
    return out


def _directional_poly(entry, w: Sequence) -> MultiPoly:
    nv = len(w)
    p = _as_poly(entry, nv)
    acc = MultiPoly.zero(nv)
    for j, wj in enumerate(w):
        if _is_zero_entry(wj):
            continue
        dj = p.partial(j)
        if not dj.is_zero():
            acc = acc + dj * wj
    return acc


def _algebra_matrix(algebra, x: Sequence) -> Matrix:
    basis = algebra.basis
    if basis is None:
        raise ValueError("algebra has no matrix realisation")
    out = Matrix.zeros(basis[0].nrows, basis[0].ncols)
    for c, b in zip(x, basis):
        if _is_zero_entry(c):
            continue
        out = out + b * c
    return out


def _basis_coords(dim: int, a: int) -> list:
    e = [0] * dim
    e[a] = 1
    return e


# -- the kernel condition ------------------------------------------------


def phi_polys(F: Covariant) -> list[MultiPoly]:
    """phi(F)(v) = F(v).v as coordinate polynomials on V."""
    nv = F.rep.dim_v
    vs = MultiPoly.variables(nv)
    coords = F.coords_at(vs)
    out = F.rep.act(coords, vs)
    return [_as_poly(o, nv) for o in out]


def phi_at(F: Covariant, v: Sequence) -> list:
    """phi(F)(v) = F(v).v at a numeric point."""
    return F.rep.act(F.coords_at(v), list(v))


def kernel_phi_check(
    F: Covariant,
    mode: str = "auto",
    seed: int = 0,
    trials: int | None = None,
    bound: int = 10,
) -> ZeroCheck:
    """Does F(v) stabilise v identically, i.e. phi(F) = 0?"""
    nv = F.rep.dim_v
    deg = None if F.degree is None else F.degree + 1
    m = resolve_mode(mode, nv, deg)
    if m == "exact":
        _require_exact(nv, deg)
        return _polys_zero_exact(phi_polys(F))
    rng = derive_rng(seed, "kernel_phi", F.name)
    t = trials if trials is not None else (deg or 1) + 3
    for _ in range(t):
        v = rand_vector(rng, nv, bound)
        out = phi_at(F, v)
        for val in out:
            if val != 0:
                return ZeroCheck("proved_nonzero", "sampled", trials=t, witness=(v, out))
    return ZeroCheck("sampled_zero", "sampled", trials=t)


# -- equivariance ----------------------------------------------------------


def equivariance_check(
    F: Covariant,
    basis_indices: Sequence[int] | None = None,
    mode: str = "auto",
    seed: int = 0,
    trials: int | None = None,
    bound: int = 10,
) -> ZeroCheck:
    """x*F = 0 for every basis element x in the given index range.

    ``basis_indices`` restricts the scope (e.g. to one factor of a product
    algebra); None means the whole algebra.
    """
    nv = F.rep.dim_v
    indices = list(basis_indices) if basis_indices is not None else list(range(F.rep.algebra.dim))
    m = resolve_mode(mode, nv, F.degree)
    if m == "exact":
        _require_exact(nv, F.degree)
        for a in indices:
            mat = act_on_matrix_polys(F, _basis_coords(F.rep.algebra.dim, a))
            verdict = _polys_zero_exact(p for row in mat.rows for p in row)
            if verdict.verdict != "proved_zero":
                return ZeroCheck(verdict.verdict, "exact", witness=(a, verdict.witness))
        return ZeroCheck("proved_zero", "exact")
    rng = derive_rng(seed, "equivariance", F.name)
    t = trials if trials is not None else (F.degree or 1) + 3
    for _ in range(t):
        v = rand_vector(rng, nv, bound)
        for a in indices:
            mat = act_on_matrix_at(F, _basis_coords(F.rep.algebra.dim, a), v)
            if not mat.is_zero():
                return ZeroCheck("proved_nonzero", "sampled", trials=t, witness=(a, v, mat.rows))
    return ZeroCheck("sampled_zero", "sampled", trials=t)


def weight_check(
    F: Covariant,
    x: Sequence,
    weight,
    mode: str = "auto",
    seed: int = 0,
    trials: int | None = None,
    bound: int = 10,
) -> ZeroCheck:
    """x*F = weight * F for a fixed algebra element x (coordinates)."""
    nv = F.rep.dim_v
    m = resolve_mode(mode, nv, F.degree)
    if m == "exact":
        _require_exact(nv, F.degree)
        vs = MultiPoly.variables(nv)
        acted = act_on_matrix_polys(F, x)
        target = F.matrix_at(vs).map(lambda e: _as_poly(e, nv) * weight)
        return _polys_zero_exact(p for row in (acted - target).rows for p in row)
    rng = derive_rng(seed, "weight", F.name)
    t = trials if trials is not None else (F.degree or 1) + 3
    for _ in range(t):
        v = rand_vector(rng, nv, bound)
        resid = act_on_matrix_at(F, x, v) - F.matrix_at(v) * weight
        if not resid.is_zero():
            return ZeroCheck("proved_nonzero", "sampled", trials=t, witness=(v, resid.rows))
    return ZeroCheck("sampled_zero", "sampled", trials=t)


# -- vanishing and coincidence of covariants ------------------------------


def covariant_zero_check(
    F: Covariant,
    mode: str = "auto",
    seed: int = 0,
    trials: int | None = None,
    bound: int = 10,
) -> ZeroCheck:
    """F = 0 identically."""
    nv = F.rep.dim_v
    m = resolve_mode(mode, nv, F.degree)
    if m == "exact":
        _require_exact(nv, F.degree)
        return _polys_zero_exact(F.components)
    rng = derive_rng(seed, "vanishing", F.name)
    t = trials if trials is not None else (F.degree or 1) + 3
    for _ in range(t):
        v = rand_vector(rng, nv, bound)
        mat = F.matrix_at(v)
        if not mat.is_zero():
            return ZeroCheck("proved_nonzero", "sampled", trials=t, witness=(v, mat.rows))
    return ZeroCheck("sampled_zero", "sampled", trials=t)


def covariant_match_check(
    F: Covariant,
    G: Covariant,
    coeff=1,
    mode: str = "auto",
    seed: int = 0,
    trials: int | None = None,
    bound: int = 10,
) -> ZeroCheck:
    """F = coeff * G as polynomial maps."""
    nv = F.rep.dim_v
    deg = None
    if F.degree is not None and G.degree is not None:
        deg = max(F.degree, G.degree)
    m = resolve_mode(mode, nv, deg)
    if m == "exact":
        _require_exact(nv, deg)
        diff = [a - b * coeff for a, b in zip(F.components, G.components)]
        return _polys_zero_exact(diff)
    rng = derive_rng(seed, "match", F.name, G.name)
    t = trials if trials is not None else (deg or 1) + 3
    for _ in range(t):
        v = rand_vector(rng, nv, bound)
        resid = F.matrix_at(v) - G.matrix_at(v) * coeff
        if not resid.is_zero():
            return ZeroCheck("proved_nonzero", "sampled", trials=t, witness=(v, resid.rows))
    return ZeroCheck("sampled_zero", "sampled", trials=t)


# -- linear span of a family ----------------------------------------------


def express_in_span(target: Sequence[MultiPoly], family: Sequence[Sequence[MultiPoly]]):
    """Exact coefficients writing target in the linear span of the family.

    Both the target and each family member are lists of polynomials (e.g.
    covariant components).  Returns the coefficient list, or None when the
    target lies outside the span.
    """
    monomials = set()
    for comps in list(family) + [list(target)]:
        for i, p in enumerate(comps):
            for exp in p.terms:
                monomials.add((i, exp))
    keys = sorted(monomials)
    if not keys:
        return [0] * len(family)
    rows = []
    rhs = []
    for (i, exp) in keys:
        rows.append([comps[i].terms.get(exp, 0) for comps in family])
        rhs.append(target[i].terms.get(exp, 0))
    return solve(Matrix(rows), rhs)


def family_rank(family: Sequence[Covariant]) -> int:
    """Rank of the family as vectors of coefficient data (exact)."""
    monomials = set()
    for F in family:
        for i, p in enumerate(F.components):
            monomials.update((i, exp) for exp in p.terms)
    keys = sorted(monomials)
    rows = [[F.components[i].terms.get(exp, 0) for (i, exp) in keys] for F in family]
    if not keys:
        return 0
    return rank(Matrix(rows))


def action_matrix_on_span(family: Sequence[Covariant], x: Sequence):
    """Matrix of F -> x*F on the family's span, or None if not stable.

    Column j holds the coefficients of x*F_j in the family basis.
    """
    comps_list = [F.components for F in family]
    cols = []
    for F in family:
        acted = act_on_components(F, x)
        coeffs = express_in_span(acted, comps_list)
        if coeffs is None:
            return None
        cols.append(coeffs)
    return Matrix.from_cols(cols)


# -- independence and pointwise span ---------------------------------------


def values_matrix_at(family: Sequence[Covariant], v: Sequence) -> Matrix:
    """Columns F_i(v) in g's basis coordinates."""
    return Matrix.from_cols([F.coords_at(v) for F in family])


def independence_witness(
    family: Sequence[Covariant],
    seed: int = 0,
    trials: int = 25,
    bound: int = 10,
):
    """A point where the values F_i(v) are linearly independent.

    Returns (point, rank); a rank equal to len(family) at any single point
    proves independence of the covariants over the function field.
    """
    if not family:
        return ([], 0)
    rng = derive_rng(seed, "independence", *(F.name for F in family))
    nv = family[0].rep.dim_v
    best = ([], -1)
    for _ in range(trials):
        v = rand_vector(rng, nv, bound)
        r = rank(values_matrix_at(family, v))
        if r == len(family):
            return (v, r)
        if r > best[1]:
            best = (v, r)
    return best


@dataclass
class KernelSpanReport:
    """Pointwise comparison of span{F_i(v)} with the stabiliser of v."""

    contained: bool
    witness: object
    samples: list
    generic_stab_dim: int
    spans_generically: bool


def kernel_span_check(
    family: Sequence[Covariant],
    seed: int = 0,
    trials: int = 8,
    bound: int = 10,
) -> KernelSpanReport:
    """At sampled points: every F_i(v) lies in the stabiliser of v, and at
    points where the stabiliser has its generic (minimal sampled) dimension
    the values span it."""
    rep = family[0].rep
    rng = derive_rng(seed, "kernel_span", *(F.name for F in family))
    samples = []
    contained = True
    witness = None
    for _ in range(trials):
        v = rand_vector(rng, rep.dim_v, bound)
        stab = stabiliser(rep, v)
        vals = values_matrix_at(family, v)
        for j, F in enumerate(family):
            if not stab.contains(vals.col(j)):
                contained = False
                if witness is None:
                    witness = (F.name, v)
        samples.append((stab.dim, rank(vals)))
    generic = min(d for d, _ in samples)
    spans = all(r == d for d, r in samples if d == generic)
    return KernelSpanReport(contained, witness, samples, generic, spans)


# -- lifts to the semidirect product ---------------------------------------


def lift_polynomial(F: Covariant) -> MultiPoly:
    """The lift (xi, v) -> <xi, F(v)> on the dual of g x V*.

    Variables: xi (dim g, first) then v (dim V), matching the combined
    coordinate order of the semidirect product's dual.
    """
    dg = F.rep.algebra.dim
    dv = F.rep.dim_v
    n = dg + dv
    acc = MultiPoly.zero(n)
    for a, comp in enumerate(F.components):
        if comp.is_zero():
            continue
        xi_a = MultiPoly.variable(n, a)
        acc = acc + xi_a * comp.shift(dg, n)
    return acc


def lift_value(F: Covariant, xi: Sequence, v: Sequence):
    """<xi, F(v)> at a numeric point, straight from the formula."""
    acc = 0
    for x, c in zip(xi, F.coords_at(v)):
        acc = acc + x * c
    return normalize_scalar(acc) if is_scalar(acc) else acc


def lift_invariance_check(
    q: SemidirectProduct,
    F: Covariant,
    mode: str = "auto",
    seed: int = 0,
    trials: int | None = None,
    bound: int = 10,
) -> ZeroCheck:
    """Invariance of the lift under the unipotent coadjoint substitution:

        F_hat(xi + mu(v, zeta), v) = F_hat(xi, v)   for all zeta.

    Exact mode works in the ring with variables xi, v, zeta; sampled mode
    evaluates both sides at random integer points.
    """
    if q.rep is not F.rep:
        raise ValueError("covariant and semidirect product use different modules")
    dg, dv = q.dim_g, q.dim_v
    n = dg + 2 * dv
    deg = None if F.degree is None else F.degree + 2
    m = resolve_mode(mode, n, deg)
    if m == "exact":
        _require_exact(n, deg)
        hat = lift_polynomial(F).extend(n)
        images = [MultiPoly.variable(n, i) for i in range(n)]
        for a in range(dg):
            images[a] = images[a] + _moment_poly(q, a, n, dg, dv)
        shifted = hat.substitute(images, n)
        return _polys_zero_exact([shifted - hat])
    rng = derive_rng(seed, "lift_invariance", F.name)
    t = trials if trials is not None else ((F.degree or 1) + 2) + 3
    for _ in range(t):
        xi = rand_vector(rng, dg, bound)
        v = rand_vector(rng, dv, bound)
        zeta = rand_vector(rng, dv, bound)
        mu = moment_map(q, v, zeta)
        before = lift_value(F, xi, v)
        after = lift_value(F, [x + m_ for x, m_ in zip(xi, mu)], v)
        if after != before:
            return ZeroCheck(
                "proved_nonzero", "sampled", trials=t, witness=((xi, v, zeta), after - before)
            )
    return ZeroCheck("sampled_zero", "sampled", trials=t)


def _moment_poly(q: SemidirectProduct, a: int, n: int, dg: int, dv: int) -> MultiPoly:
    """mu_a(v, zeta) = <zeta, e_a . v> in the (xi, v, zeta) ring."""
    terms = {}
    rho = q.rep.action[a]
    for j in range(dv):
        for i in range(dv):
            cij = rho[j, i]
            if cij == 0:
                continue
            exp = [0] * n
            exp[dg + i] += 1
            exp[dg + dv + j] += 1
            key = tuple(exp)
            terms[key] = terms.get(key, 0) + cij
    return MultiPoly(n, {k: c for k, c in terms.items() if c != 0})


# -- Poisson brackets on the dual ------------------------------------------


def poisson_bracket_polys(lie, f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """{f, g} on the dual of a Lie algebra, as a polynomial.

    Both arguments live in the coordinate ring of the dual (one variable per
    basis element, in basis order)."""
    n = lie.dim
    if f.num_vars != n or g.num_vars != n:
        raise ValueError("polynomials must live on the dual of the algebra")
    df = [f.partial(u) for u in range(n)]
    dg = [g.partial(u) for u in range(n)]
    acc = MultiPoly.zero(n)
    for (u, w), entry in lie.brackets.items():
        cross = df[u] * dg[w] - df[w] * dg[u]
        if cross.is_zero():
            continue
        lin = MultiPoly(n, {_unit_exp(n, c): coeff for c, coeff in entry.items()})
        acc = acc + lin * cross
    return acc


def _unit_exp(n: int, c: int) -> tuple:
    e = [0] * n
    e[c] = 1
    return tuple(e)


def poisson_bracket_at(lie, f: MultiPoly, g: MultiPoly, eta: Sequence):
    """{f, g} evaluated at a point of the dual."""
    n = lie.dim
    df = [f.partial(u).evaluate(eta) for u in range(n)]
    dg = [g.partial(u).evaluate(eta) for u in range(n)]
    acc = 0
    for (u, w), entry in lie.brackets.items():
        cross = df[u] * dg[w] - df[w] * dg[u]
        if cross == 0:
            continue
        lin = sum(coeff * eta[c] for c, coeff in entry.items())
        acc = acc + lin * cross
    return normalize_scalar(acc)


def lift_gradient_at(F: Covariant, xi: Sequence, v: Sequence) -> list:
    """Gradient of the lift at a numeric point, without symbolic components.

    The xi-partials are the coordinates F_a(v); the v-partials come from the
    t-coefficient of F(v + t e_i) paired with xi.
    """
    dv = F.rep.dim_v
    grad = list(F.coords_at(v))
    for i in range(dv):
        line = [
            MultiPoly(1, ({(0,): vj} if vj != 0 else {})) if j != i
            else MultiPoly(1, {(1,): 1, (0,): vj} if vj != 0 else {(1,): 1})
            for j, vj in enumerate(v)
        ]
        coords_t = F.coords_at(line)
        acc = 0
        for x, c in zip(xi, coords_t):
            acc = acc + x * _t_coefficient(c, 1)
        grad.append(normalize_scalar(acc) if is_scalar(acc) else acc)
    return grad


def poisson_pair_at(q: SemidirectProduct, F: Covariant, G: Covariant, xi: Sequence, v: Sequence):
    """{F_hat, G_hat} at the dual point (xi, v), fully numerically."""
    eta = list(xi) + list(v)
    gf = lift_gradient_at(F, xi, v)
    gg = lift_gradient_at(G, xi, v)
    acc = 0
    for (u, w), entry in q.lie.brackets.items():
        cross = gf[u] * gg[w] - gf[w] * gg[u]
        if cross == 0:
            continue
        lin = sum(coeff * eta[c] for c, coeff in entry.items())
        acc = acc + lin * cross
    return normalize_scalar(acc)


def poisson_commute_check(
    q: SemidirectProduct,
    family: Sequence[Covariant],
    mode: str = "auto",
    seed: int = 0,
    trials: int | None = None,
    bound: int = 10,
) -> ZeroCheck:
    """All pairwise Poisson brackets of the lifted family vanish."""
    n = q.dim
    degs = [F.degree for F in family]
    deg = None
    if all(d is not None for d in degs) and len(family) >= 2:
        top = sorted(degs)[-2:]
        deg = top[0] + top[1] + 1
    elif len(family) < 2:
        deg = 0
    m = resolve_mode(mode, n, deg)
    if m == "exact":
        _require_exact(n, deg)
        lifts = [lift_polynomial(F) for F in family]
        for i in range(len(family)):
            for j in range(i + 1, len(family)):
                br = poisson_bracket_polys(q.lie, lifts[i], lifts[j])
                if not br.is_zero():
                    inner = poly_is_zero(br, "exact")
                    return ZeroCheck(
                        "proved_nonzero", "exact", witness=((i, j), inner.witness)
                    )
        return ZeroCheck("proved_zero", "exact")
    rng = derive_rng(seed, "poisson", *(F.name for F in family))
    t = trials if trials is not None else (max((d or 1) for d in degs) + 4 if degs else 3)
    for _ in range(t):
        xi = rand_vector(rng, q.dim_g, bound)
        v = rand_vector(rng, q.dim_v, bound)
        for i in range(len(family)):
            for j in range(i + 1, len(family)):
                val = poisson_pair_at(q, family[i], family[j], xi, v)
                if val != 0:
                    return ZeroCheck(
                        "proved_nonzero", "sampled", trials=t, witness=((i, j), (xi, v), val)
                    )
    return ZeroCheck("sampled_zero", "sampled", trials=t)


# -- parameter families -----------------------------------------------------


def parameter_coefficients(
    rep: Representation,
    formula: Callable[[Sequence], Matrix],
    name_fmt: str = "F[{k}]",
    width: int | None = None,
) -> list[Covariant]:
    """Split a one-parameter formula into coefficient covariants.

    The formula receives dim V + 1 ring elements, the last being the formal
    parameter; the result is one covariant per parameter power (constant
    term first).  Zero coefficients are kept so indices match powers; pass
    `width` to pad with trailing zero covariants up to a known length.
    """
    nv = rep.dim_v
    vs = MultiPoly.variables(nv + 1)
    mat = formula(vs)
    solver = SpanSolver([m.vec() for m in rep.algebra.basis])
    coords = solver.coords(mat.vec())
    if coords is None:
        raise ValueError("parameter formula left the algebra")
    split = [_as_poly(c, nv + 1).coefficients_in_last_var() for c in coords]
    width = max(max((len(s) for s in split), default=0), width or 0)
    out = []
    for k in range(width):
        comps = [s[k] if k < len(s) else MultiPoly.zero(nv) for s in split]
        out.append(Covariant(rep, components=comps, name=name_fmt.format(k=k)))
    return out


# -- weights, audits, invariants -------------------------------------------


def weight_under(F: Covariant, x: Sequence):
    """Exact eigenvalue of F under the algebra element x, or None.

    Returns the scalar c with x*F = c F when the acted covariant is
    proportional to F, and None otherwise.
    """
    acted = act_on_components(F, x)
    coeffs = express_in_span(acted, [F.components])
    if coeffs is None:
        return None
    return coeffs[0]


def independence_rank_at(family: Sequence[Covariant], v: Sequence) -> int:
    """Rank of the value matrix [F_1(v) | ... | F_m(v)] (exact)."""
    return rank(values_matrix_at(family, v))


@dataclass(frozen=True)
class DegreeAudit:
    """Arithmetic audit of a covariant family against quotient data.

    ``codim`` is dim V minus the top degree of the invariant algebra's
    Poincare series; a family whose degrees sum to exactly that value is in
    the equality case, a larger sum is a surplus, a smaller one violates the
    lower bound.  ``books`` records the combined identity
    q + sum(deg_i + 1) == dim V + l.
    """

    degrees: tuple
    total: int
    codim: int
    surplus: int
    books: bool
    verdict: str


def degree_audit(degrees: Sequence[int], dim_v: int, q_quotient: int) -> DegreeAudit:
    degs = tuple(int(d) for d in degrees)
    total = sum(degs)
    codim = dim_v - q_quotient
    surplus = total - codim
    books = q_quotient + sum(d + 1 for d in degs) == dim_v + len(degs)
    if surplus == 0:
        verdict = "equality"
    elif surplus > 0:
        verdict = "surplus"
    else:
        verdict = "deficit"
    return DegreeAudit(degs, total, codim, surplus, books, verdict)


class _Dual:
    """Dual number a + b*eps with eps^2 = 0; carries one derivative."""

    __slots__ = ("a", "b")

    def __init__(self, a, b=0):
        self.a = a
        self.b = b

    def __add__(self, other):
        if isinstance(other, _Dual):
            return _Dual(self.a + other.a, self.b + other.b)
        return _Dual(self.a + other, self.b)

    __radd__ = __add__

    def __mul__(self, other):
        if isinstance(other, _Dual):
            return _Dual(self.a * other.a, self.a * other.b + self.b * other.a)
        return _Dual(self.a * other, self.b * other)

    __rmul__ = __mul__

    def __pow__(self, e):
        out = _Dual(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out


def invariant_check(
    rep: Representation,
    poly: MultiPoly,
    mode: str = "auto",
    seed: int = 0,
    trials: int | None = None,
    bound: int = 25,
    name: str = "",
) -> ZeroCheck:
    """Check that a polynomial on V is an algebra invariant.

    The derivative of the polynomial along each basis vector field
    v -> x.v must vanish: exactly termwise, or at sampled points via
    dual-number evaluation along the field direction.
    """
    nv = rep.dim_v
    deg = poly.degree()
    m = resolve_mode(mode, nv, deg)
    if m == "exact":
        _require_exact(nv, deg)
        vs = MultiPoly.variables(nv)
        derivs = []
        for a in range(rep.algebra.dim):
            field = rep.act_basis(a, vs)
            d = MultiPoly.zero(nv)
            for j, fj in enumerate(field):
                if _is_zero_entry(fj):
                    continue
                d = d + _as_poly(fj, nv) * poly.partial(j)
            derivs.append(d)
        return _polys_zero_exact(derivs)
    rng = derive_rng(seed, "invariant", name)
    t = trials if trials is not None else deg + 3
    for _ in range(t):
        v = rand_vector(rng, nv, bound)
        for a in range(rep.algebra.dim):
            w = rep.act_basis(a, v)
            duals = [_Dual(vi, wi) for vi, wi in zip(v, w)]
            val = poly.evaluate(duals)
            d = val.b if isinstance(val, _Dual) else 0
            if d != 0:
                return ZeroCheck(
                    "proved_nonzero", "sampled", trials=t, witness=(a, v, d)
                )
    return ZeroCheck("sampled_zero", "sampled", trials=t)


def bihomogeneous_degrees(p: MultiPoly, n_first: int):
    """Bidegree of p under the split (first n_first variables, the rest).

    Returns the pair (d1, d2) when every monomial has the same split
    degrees, (0, 0) for the zero polynomial, and None otherwise.
    """
    got = None
    for exp in p.terms:
        pair = (sum(exp[:n_first]), sum(exp[n_first:]))
        if got is None:
            got = pair
        elif got != pair:
            return None
    return got if got is not None else (0, 0)
