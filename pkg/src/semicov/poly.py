"""Sparse multivariate polynomials with exact rational coefficients.

Terms are stored as a dict mapping exponent tuples to nonzero coefficients
(``int`` or ``Fraction``).  The representation is canonical, so equality and
zero-testing are exact.  ``poly_is_zero`` adds the documented sampled mode
(Schwartz-Zippel over integer points) next to the exact one.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from .linalg import is_scalar, normalize_scalar

NEG_INF = float("-inf")

EXACT_MAX_VARS = 40
EXACT_MAX_DEGREE = 8
SAMPLE_BOUND = 10


class CutoffExceeded(Exception):
    """Exact zero-testing refused; the identity is past the symbolic cutoffs."""


class MultiPoly:
    __slots__ = ("num_vars", "terms")

    def __init__(self, num_vars: int, terms: dict | None = None):
        self.num_vars = num_vars
        clean: dict[tuple, object] = {}
        if terms:
            for e, c in terms.items():
                if len(e) != num_vars:
                    raise ValueError("exponent tuple of wrong length")
                c = normalize_scalar(c)
                if c != 0:
                    clean[tuple(e)] = c
        self.terms = clean

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(num_vars: int) -> "MultiPoly":
        return MultiPoly(num_vars)

    @staticmethod
    def const(num_vars: int, c) -> "MultiPoly":
        p = MultiPoly(num_vars)
        c = normalize_scalar(c)
        if c != 0:
            p.terms[(0,) * num_vars] = c
        return p

    @staticmethod
    def variable(num_vars: int, i: int) -> "MultiPoly":
        if not 0 <= i < num_vars:
            raise ValueError("variable index out of range")
        e = [0] * num_vars
        e[i] = 1
        p = MultiPoly(num_vars)
        p.terms[tuple(e)] = 1
        return p

    @staticmethod
    def variables(num_vars: int) -> list:
        return [MultiPoly.variable(num_vars, i) for i in range(num_vars)]

    # -- basic queries -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self):
        """Total degree; -inf for the zero polynomial."""
        if not self.terms:
            return NEG_INF
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self, d: int | None = None) -> bool:
        if not self.terms:
            return True
        degs = {sum(e) for e in self.terms}
        if len(degs) != 1:
            return False
        return d is None or degs == {d}

    def constant_value(self):
        """The coefficient of the constant term."""
        return self.terms.get((0,) * self.num_vars, 0)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.num_vars == other.num_vars and self.terms == other.terms
        if is_scalar(other):
            return self == MultiPoly.const(self.num_vars, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.num_vars, frozenset(self.terms.items())))

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.num_vars != self.num_vars:
                raise ValueError("mixing polynomials from different rings")
            return other
        if is_scalar(other):
            return MultiPoly.const(self.num_vars, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            s = out.get(e, 0) + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = normalize_scalar(s)
        p = MultiPoly(self.num_vars)
        p.terms = out
        return p

    __radd__ = __add__

    def __neg__(self):
        p = MultiPoly(self.num_vars)
        p.terms = {e: -c for e, c in self.terms.items()}
        return p

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if is_scalar(other):
            if other == 0:
                return MultiPoly(self.num_vars)
            p = MultiPoly(self.num_vars)
            p.terms = {e: normalize_scalar(c * other) for e, c in self.terms.items()}
            return p
        if not isinstance(other, MultiPoly):
            return NotImplemented
        if other.num_vars != self.num_vars:
            raise ValueError("mixing polynomials from different rings")
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict[tuple, object] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(e, 0) + ca * cb
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        p = MultiPoly(self.num_vars)
        p.terms = {e: normalize_scalar(c) for e, c in out.items()}
        return p

    __rmul__ = __mul__

    def __truediv__(self, other):
        if is_scalar(other):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.const(self.num_vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- calculus and substitution ---------------------------------------

    def partial(self, i: int) -> "MultiPoly":
        out: dict[tuple, object] = {}
        for e, c in self.terms.items():
            k = e[i]
            if k == 0:
                continue
            ne = list(e)
            ne[i] = k - 1
            out[tuple(ne)] = normalize_scalar(c * k)
        p = MultiPoly(self.num_vars)
        p.terms = out
        return p

    def evaluate(self, point: Sequence):
        """Exact evaluation at a point of scalars."""
        if len(point) != self.num_vars:
            raise ValueError("point of wrong length")
        acc = 0
        for e, c in self.terms.items():
            t = c
            for x, k in zip(point, e):
                if k:
                    t = t * x**k
            acc = acc + t
        return normalize_scalar(acc)

    def substitute(self, images: Sequence, num_vars_out: int) -> "MultiPoly":
        """Map variable i to images[i] (polynomial or scalar) and expand."""
        if len(images) != self.num_vars:
            raise ValueError("need one image per variable")
        imgs = [
            im if isinstance(im, MultiPoly) else MultiPoly.const(num_vars_out, im)
            for im in images
        ]
        pow_cache: dict[tuple[int, int], MultiPoly] = {}

        def ipow(i: int, k: int) -> MultiPoly:
            key = (i, k)
            got = pow_cache.get(key)
            if got is None:
                got = imgs[i] ** k
                pow_cache[key] = got
            return got

        acc = MultiPoly(num_vars_out)
        for e, c in self.terms.items():
            t = MultiPoly.const(num_vars_out, c)
            for i, k in enumerate(e):
                if k:
                    t = t * ipow(i, k)
            acc = acc + t
        return acc

    def extend(self, num_vars_new: int) -> "MultiPoly":
        """Embed into a ring with extra trailing variables."""
        if num_vars_new < self.num_vars:
            raise ValueError("cannot shrink the ring")
        pad = (0,) * (num_vars_new - self.num_vars)
        p = MultiPoly(num_vars_new)
        p.terms = {e + pad: c for e, c in self.terms.items()}
        return p

    def shift(self, offset: int, num_vars_new: int) -> "MultiPoly":
        """Embed with all variable indices moved up by offset."""
        if offset + self.num_vars > num_vars_new:
            raise ValueError("shifted ring too small")
        lead = (0,) * offset
        tail = (0,) * (num_vars_new - offset - self.num_vars)
        p = MultiPoly(num_vars_new)
        p.terms = {lead + e + tail: c for e, c in self.terms.items()}
        return p

    def coefficients_in_last_var(self) -> list["MultiPoly"]:
        """Coefficients of powers of the last variable, as polynomials in the
        remaining variables.  Index i of the result is the coefficient of
        (last var)**i; the list is dense up to the top power."""
        if self.num_vars == 0:
            raise ValueError("no variables")
        nv = self.num_vars - 1
        buckets: dict[int, dict] = {}
        for e, c in self.terms.items():
            k = e[-1]
            buckets.setdefault(k, {})[e[:-1]] = c
        top = max(buckets) if buckets else -1
        out = []
        for i in range(top + 1):
            p = MultiPoly(nv)
            p.terms = dict(buckets.get(i, {}))
            out.append(p)
        return out

    def drop_zero_vars_check(self, index: int) -> bool:
        """True when the polynomial does not involve variable `index`."""
        return all(e[index] == 0 for e in self.terms)

    # -- display ----------------------------------------------------------

    def __repr__(self):
        return "MultiPoly(%d vars, %d terms)" % (self.num_vars, len(self.terms))

    def __str__(self):
        return self.pretty()

    def pretty(self, names: Sequence[str] | None = None) -> str:
        if not self.terms:
            return "0"
        if names is None:
            names = ["v%d" % i for i in range(self.num_vars)]
        parts = []
        for e, c in sorted(self.terms.items(), key=lambda t: (-sum(t[0]), t[0])):
            factors = []
            for i, k in enumerate(e):
                if k == 1:
                    factors.append(names[i])
                elif k > 1:
                    factors.append("%s^%d" % (names[i], k))
            mono = "*".join(factors)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append("%s*%s" % (c, mono))
        s = " + ".join(parts)
        return s.replace("+ -", "- ")


class ZeroCheck:
    """Outcome of a polynomial zero test."""

    __slots__ = ("verdict", "mode", "trials", "witness")

    def __init__(self, verdict: str, mode: str, trials: int = 0, witness=None):
        self.verdict = verdict  # proved_zero | proved_nonzero | sampled_zero
        self.mode = mode
        self.trials = trials
        self.witness = witness  # (point, value) for proved_nonzero

    @property
    def is_zero(self) -> bool:
        return self.verdict in ("proved_zero", "sampled_zero")

    def __repr__(self):
        return "ZeroCheck(%s, %s, trials=%d)" % (self.verdict, self.mode, self.trials)


def default_trials(p: MultiPoly) -> int:
    d = p.degree()
    if d is NEG_INF:
        d = 0
    return int(d) + 3


def exact_allowed(p: MultiPoly) -> bool:
    d = p.degree()
    if d is NEG_INF:
        d = 0
    return p.num_vars <= EXACT_MAX_VARS and d <= EXACT_MAX_DEGREE


def poly_is_zero(
    p: MultiPoly,
    mode: str = "exact",
    rng: random.Random | None = None,
    trials: int | None = None,
    bound: int = SAMPLE_BOUND,
) -> ZeroCheck:
    """Exact or sampled zero test.

    Exact mode inspects the canonical expansion and returns proved_zero or
    proved_nonzero; it is refused (CutoffExceeded) when the polynomial lives
    past the symbolic cutoffs (more than 40 variables or total degree above
    8).  Sampled mode evaluates at uniform integer points in [-bound, bound];
    `trials` defaults to total degree + 3.  A nonzero sample upgrades the
    verdict to proved_nonzero with the witness point.
    """
    if mode == "auto":
        mode = "exact" if exact_allowed(p) else "sampled"
    if mode == "exact":
        if not exact_allowed(p):
            raise CutoffExceeded(
                "exact zero test refused: %d vars, degree %s" % (p.num_vars, p.degree())
            )
        if p.is_zero():
            return ZeroCheck("proved_zero", "exact")
        point = _nonzero_point(p, rng)
        value = p.evaluate(point) if point is not None else None
        return ZeroCheck("proved_nonzero", "exact", witness=(point, value))
    if mode != "sampled":
        raise ValueError("mode must be exact, sampled, or auto")
    if rng is None:
        rng = random.Random(0)
    if trials is None:
        trials = default_trials(p)
    for t in range(trials):
        point = [rng.randint(-bound, bound) for _ in range(p.num_vars)]
        val = p.evaluate(point)
        if val != 0:
            return ZeroCheck("proved_nonzero", "sampled", trials=t + 1, witness=(point, val))
    return ZeroCheck("sampled_zero", "sampled", trials=trials)


def _nonzero_point(p: MultiPoly, rng: random.Random | None):
    """A concrete integer point where p does not vanish (exists for p != 0)."""
    if rng is None:
        rng = random.Random(1)
    for bound in (SAMPLE_BOUND, 50, 500, 5000):
        for _ in range(200):
            point = [rng.randint(-bound, bound) for _ in range(p.num_vars)]
            if p.evaluate(point) != 0:
                return point
    return None


def vanishes_on_samples(polys, rng, trials, bound=SAMPLE_BOUND):
    """Joint sampled zero test for a list of polynomials at shared points."""
    nv = polys[0].num_vars if polys else 0
    for t in range(trials):
        point = [rng.randint(-bound, bound) for _ in range(nv)]
        for p in polys:
            val = p.evaluate(point)
            if val != 0:
                return ZeroCheck("proved_nonzero", "sampled", trials=t + 1, witness=(point, val))
    return ZeroCheck("sampled_zero", "sampled", trials=trials)
