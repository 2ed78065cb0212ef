"""Groebner-basis engine over prime fields.

Buchberger's algorithm with the normal selection strategy and the two
classical pair-elimination criteria; full multivariate division for normal
forms; ideal saturation by the extra-variable elimination method; and
Hilbert-series extraction of projective dimension and degree from a
monomial ideal of leading terms.

All heavy computation is modular: the engine refuses rational
coefficients.  Polynomials need not be homogeneous (saturation adjoins an
auxiliary variable with inhomogeneous relations; the affine Milnor oracle
divides affine ideals), and every order used here is global, so division
terminates regardless.

Inner loops work on raw term dicts ``{exponent_tuple: int}`` mod p;
``Polynomial`` values are unwrapped at the public boundary.
"""

from __future__ import annotations

import heapq
import sys
import time
from dataclasses import dataclass, field as dc_field

from .poly import Polynomial, grevlex_key

_trace = False


def set_trace(enabled: bool) -> None:
    """Toggle stderr trace output (pair counts, basis sizes, timings)."""
    global _trace
    _trace = bool(enabled)


def _elim_last_key(m):
    # Block order eliminating the last variable: compare its exponent
    # first, then grevlex on the rest.  Restricted to monomials free of
    # the last variable this is plain grevlex.
    return (m[-1], grevlex_key(m[:-1]))


def _neg_grevlex_key(m):
    # entrywise negation of the ascending key: lexicographic order flips,
    # so a min-heap on these pops the largest monomial first
    return (-sum(m), m[::-1])


def _neg_elim_last_key(m):
    head = m[:-1]
    return (-m[-1], -sum(head), head[::-1])


class _Order:
    """A monomial order: ascending sort key plus its negation for heaps."""

    __slots__ = ("key", "heapkey")

    def __init__(self, key, heapkey):
        self.key = key
        self.heapkey = heapkey


_GREVLEX = _Order(grevlex_key, _neg_grevlex_key)
_ELIM_LAST = _Order(_elim_last_key, _neg_elim_last_key)


# -- dict-level core ----------------------------------------------------------


def _divides(a, b) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _monic_by(d, order, p):
    lead = max(d, key=order.key)
    c = d[lead]
    if c == 1:
        return d
    inv = pow(c, p - 2, p)
    return {m: (v * inv) % p for m, v in d.items()}


def _reduce_full(f, lts, G, order, p):
    """Full normal form of term dict ``f`` against monic divisors ``G``.

    The working polynomial is driven by a lazy max-heap of monomials:
    entries going stale on cancellation are skipped at pop time, and a
    reduction step only ever creates monomials below the one it removes,
    so pops are monotone and each surviving monomial is handled once.
    """
    work = dict(f)
    if not work:
        return work
    heapkey = order.heapkey
    heap = [(heapkey(m), m) for m in work]
    heapq.heapify(heap)
    push = heapq.heappush
    n_div = len(lts)
    remainder = {}
    while heap:
        m = heapq.heappop(heap)[1]
        c = work.get(m)
        if c is None:
            continue
        for idx in range(n_div):
            lt = lts[idx]
            divides = True
            for a, b in zip(lt, m):
                if a > b:
                    divides = False
                    break
            if divides:
                q = tuple(a - b for a, b in zip(m, lt))
                for mg, cg in G[idx].items():
                    mm = tuple(a + b for a, b in zip(q, mg))
                    old = work.get(mm)
                    if old is None:
                        v = (-c * cg) % p
                        if v:
                            work[mm] = v
                            push(heap, (heapkey(mm), mm))
                    else:
                        v = (old - c * cg) % p
                        if v:
                            work[mm] = v
                        else:
                            del work[mm]
                break
        else:
            remainder[m] = c
            del work[m]
    return remainder


def _spoly(gi, lti, gj, ltj, p):
    L = _lcm(lti, ltj)
    u = tuple(a - b for a, b in zip(L, lti))
    v = tuple(a - b for a, b in zip(L, ltj))
    out = {}
    for m, c in gi.items():
        mm = tuple(a + b for a, b in zip(u, m))
        out[mm] = c
    for m, c in gj.items():
        mm = tuple(a + b for a, b in zip(v, m))
        w = (out.get(mm, 0) - c) % p
        if w:
            out[mm] = w
        elif mm in out:
            del out[mm]
    return out


def _reduced_basis(G, order, p):
    """Minimalize and tail-reduce a Groebner basis; sorted lead-descending."""
    key = order.key
    lts = [max(g, key=key) for g in G]
    by_lead = sorted(range(len(G)), key=lambda i: key(lts[i]))
    kept = []
    for i in by_lead:
        if not any(_divides(lts[j], lts[i]) for j in kept):
            kept.append(i)
    polys = [G[i] for i in kept]
    leads = [lts[i] for i in kept]
    out = []
    for i, g in enumerate(polys):
        others_lts = leads[:i] + leads[i + 1 :]
        others = polys[:i] + polys[i + 1 :]
        r = _reduce_full(g, others_lts, others, order, p)
        out.append(_monic_by(r, order, p))
    out.sort(key=lambda g: key(max(g, key=key)), reverse=True)
    return out


def _buchberger(gens, order, p):
    t0 = time.monotonic()
    key = order.key
    G, lts = [], []
    for d in gens:
        if not d:
            continue
        r = _reduce_full(d, lts, G, order, p)
        if r:
            G.append(_monic_by(r, order, p))
            lts.append(max(r, key=key))

    heap = []
    pending = set()

    def push(i, j):
        pair = (i, j) if i < j else (j, i)
        heapq.heappush(heap, (key(_lcm(lts[i], lts[j])), pair[0], pair[1]))
        pending.add(pair)

    for j in range(len(G)):
        for i in range(j):
            push(i, j)

    considered = 0
    reduced_to_zero = 0
    while heap:
        _, i, j = heapq.heappop(heap)
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        considered += 1
        li, lj = lts[i], lts[j]
        # first criterion: coprime leading terms
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue
        # second (chain) criterion: some treated intermediate divides the lcm
        L = _lcm(li, lj)
        skip = False
        for k in range(len(G)):
            if k == i or k == j:
                continue
            if _divides(lts[k], L):
                ik = (i, k) if i < k else (k, i)
                jk = (j, k) if j < k else (k, j)
                if ik not in pending and jk not in pending:
                    skip = True
                    break
        if skip:
            continue
        r = _reduce_full(_spoly(G[i], li, G[j], lj, p), lts, G, order, p)
        if r:
            G.append(_monic_by(r, order, p))
            lts.append(max(r, key=key))
            new = len(G) - 1
            for i2 in range(new):
                push(i2, new)
        else:
            reduced_to_zero += 1

    out = _reduced_basis(G, order, p)
    if _trace:
        print(
            f"[groebner] pairs={considered} zero_reductions={reduced_to_zero} "
            f"basis={len(out)} time={time.monotonic() - t0:.3f}s",
            file=sys.stderr,
        )
    return out


# -- public polynomial-level API ----------------------------------------------


@dataclass(frozen=True)
class IdealBasis:
    """A generating set of an ideal, optionally certified Groebner.

    When ``groebner`` is set the generators form the reduced basis for
    ``order`` and ``leading_terms`` caches their leading monomials.
    """

    gens: tuple = ()
    order: str = "grevlex"
    groebner: bool = False
    leading_terms: tuple = dc_field(default_factory=tuple)

    @property
    def nvars(self) -> int:
        if not self.gens:
            raise ValueError("empty basis carries no ring data")
        return self.gens[0].nvars

    @property
    def field(self):
        if not self.gens:
            raise ValueError("empty basis carries no ring data")
        return self.gens[0].field

    def is_zero_ideal(self) -> bool:
        return not self.gens

    def is_unit_ideal(self) -> bool:
        return any(m == (0,) * g.nvars for g in self.gens for m in g.terms)


def _require_modular(gens):
    field = gens[0].field
    if field.kind != "prime":
        raise ValueError("Groebner computation runs over a prime field only")
    nvars = gens[0].nvars
    for g in gens:
        if g.field != field or g.nvars != nvars:
            raise ValueError("generators must share one ring")
    return field, nvars


def buchberger(gens) -> IdealBasis:
    """Reduced Groebner basis (grevlex) of the ideal the generators span."""
    gens = [g for g in gens if not g.is_zero]
    if not gens:
        return IdealBasis((), "grevlex", True, ())
    field, nvars = _require_modular(gens)
    dicts = _buchberger([g.terms for g in gens], _GREVLEX, field.p)
    template = gens[0]
    polys = tuple(template._wrap(d) for d in dicts)
    lts = tuple(max(d, key=grevlex_key) for d in dicts)
    return IdealBasis(polys, "grevlex", True, lts)


def normal_form(f: Polynomial, basis: IdealBasis) -> Polynomial:
    """Remainder of f under division by a Groebner basis; zero iff f lies
    in the ideal."""
    if not basis.groebner:
        raise ValueError("normal form requires a Groebner basis")
    if basis.is_zero_ideal():
        return f
    field = basis.field
    if f.field != field or f.nvars != basis.nvars:
        raise ValueError("polynomial does not live in the basis ring")
    r = _reduce_full(
        f.terms,
        list(basis.leading_terms),
        [g.terms for g in basis.gens],
        _GREVLEX,
        field.p,
    )
    return f._wrap(r)


# -- saturation by elimination -------------------------------------------------


def _eliminate_last(dicts, p):
    """Groebner-eliminate the last (auxiliary) variable; returns term dicts
    in the smaller ring.  The result is a grevlex Groebner basis there."""
    gb = _buchberger(dicts, _ELIM_LAST, p)
    out = []
    for d in gb:
        if all(m[-1] == 0 for m in d):
            out.append({m[:-1]: c for m, c in d.items()})
    return out


def _saturate_one(I_dicts, g, nvars, p):
    """I : g^infty via (I + (1 - t*g)) intersect k[x]."""
    ext = [{m + (0,): c for m, c in d.items()} for d in I_dicts]
    rel = {(0,) * nvars + (0,): 1}
    for m, c in g.items():
        mm = m + (1,)
        rel[mm] = (rel.get(mm, 0) - c) % p
    ext.append({m: c for m, c in rel.items() if c})
    return _eliminate_last(ext, p)


def _intersect_dicts(A, B, nvars, p):
    """A intersect B via elimination of t from t*A + (1-t)*B."""
    ext = [{m + (1,): c for m, c in d.items()} for d in A]
    for d in B:
        e = {}
        for m, c in d.items():
            e[m + (0,)] = c
            e[m + (1,)] = (-c) % p
        ext.append(e)
    return _eliminate_last(ext, p)


def saturate(I: IdealBasis, J: IdealBasis) -> IdealBasis:
    """The saturation I : J^infty, i.e. the union over k of I : J^k.

    Computed per generator g of J as (I + (1 - t*g)) intersect k[x] by
    elimination, then intersected over the generators.  Removes from V(I)
    every component on which all of J vanishes.
    """
    if not J.gens:
        # J = (0): every f satisfies f*J = 0, so the saturation is the
        # unit ideal (for I as well as for 0).
        if not I.gens:
            raise ValueError("saturation of the zero ideal by the zero ideal")
        template = I.gens[0]
        one = template._wrap({(0,) * I.nvars: 1})
        return IdealBasis((one,), "grevlex", True, ((0,) * I.nvars,))
    if not I.gens:
        return IdealBasis((), "grevlex", True, ())
    field, nvars = _require_modular(list(I.gens) + list(J.gens))
    p = field.p
    I_dicts = [g.terms for g in I.gens if not g.is_zero]
    J_dicts = []
    for g in J.gens:
        if not g.is_zero and g.terms not in J_dicts:
            J_dicts.append(g.terms)
    acc = None
    for g in J_dicts:
        part = _saturate_one(I_dicts, g, nvars, p)
        acc = part if acc is None else _intersect_dicts(acc, part, nvars, p)
    final = _buchberger(acc, _GREVLEX, p) if acc else []
    template = I.gens[0]
    polys = tuple(template._wrap(d) for d in final)
    lts = tuple(max(d, key=grevlex_key) for d in final)
    return IdealBasis(polys, "grevlex", True, lts)


def intersect(I: IdealBasis, J: IdealBasis) -> IdealBasis:
    """Intersection of two ideals via the extra-variable trick."""
    if not I.gens or not J.gens:
        return IdealBasis((), "grevlex", True, ())
    field, nvars = _require_modular(list(I.gens) + list(J.gens))
    dicts = _intersect_dicts(
        [g.terms for g in I.gens], [g.terms for g in J.gens], nvars, field.p
    )
    final = _buchberger(dicts, _GREVLEX, field.p)
    template = I.gens[0]
    polys = tuple(template._wrap(d) for d in final)
    lts = tuple(max(d, key=grevlex_key) for d in final)
    return IdealBasis(polys, "grevlex", True, lts)


# -- Hilbert series of a monomial ideal ----------------------------------------


def _minimalize(monos):
    monos = sorted(set(monos), key=lambda m: (sum(m), m))
    out = []
    for m in monos:
        if not any(_divides(g, m) for g in out):
            out.append(m)
    return tuple(out)


def _poly_add(a, b):
    n = max(len(a), len(b))
    return tuple(
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
    )


def _poly_shift(a, k):
    return (0,) * k + tuple(a)


def _poly_mul_one_minus_tk(a, k):
    # multiply coefficient list a by (1 - t^k)
    return _poly_add(a, tuple(-c for c in _poly_shift(a, k)))


_hilb_cache: dict = {}


def _hilbert_rec(gens):
    if gens in _hilb_cache:
        return _hilb_cache[gens]
    if not gens:
        return (1,)
    if any(sum(m) == 0 for m in gens):
        return (0,)
    nvars = len(gens[0])
    counts = [0] * nvars
    for m in gens:
        for j, e in enumerate(m):
            if e:
                counts[j] += 1
    jmax = max(range(nvars), key=lambda j: counts[j])
    if counts[jmax] <= 1:
        # pairwise coprime generators: a monomial regular sequence
        out = (1,)
        for m in gens:
            out = _poly_mul_one_minus_tk(out, sum(m))
    else:
        pivot = jmax
        colon = _minimalize(
            tuple(
                m[:pivot] + (max(m[pivot] - 1, 0),) + m[pivot + 1 :] for m in gens
            )
        )
        unit = tuple(1 if j == pivot else 0 for j in range(nvars))
        plus = _minimalize(tuple(m for m in gens if m[pivot] == 0) + (unit,))
        out = _poly_add(_poly_shift(_hilbert_rec(colon), 1), _hilbert_rec(plus))
    _hilb_cache[gens] = out
    return out


def hilbert_numerator(monomials, nvars: int) -> list[int]:
    """Coefficients of N(t) where the Hilbert series is N(t)/(1-t)^nvars.

    ``monomials`` generate the monomial ideal (minimalized here); the
    numerator is computed by recursive pivot-variable splitting.
    """
    gens = _minimalize(tuple(tuple(m) for m in monomials))
    for m in gens:
        if len(m) != nvars:
            raise ValueError("monomial length does not match nvars")
    out = list(_hilbert_rec(gens))
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def dim_degree(I: IdealBasis):
    """Projective dimension and degree of Proj of the quotient by I.

    Returns ``(dim, degree)`` with ``dim = None`` (and degree 0) for the
    empty scheme.  The degree of a zero-dimensional scheme is the stable
    value of its Hilbert function, so saturation is not required first.
    """
    if not I.groebner:
        raise ValueError("dim_degree requires a Groebner basis")
    if I.is_zero_ideal():
        raise ValueError("dim_degree of the zero ideal needs ring data; pass generators")
    nvars = I.nvars
    num = hilbert_numerator(I.leading_terms, nvars)
    if all(c == 0 for c in num):
        return None, 0
    cancelled = 0
    while sum(num) == 0:
        # synthetic division by (1 - t)
        q = []
        acc = 0
        for c in num[:-1]:
            acc += c
            q.append(acc)
        num = q if q else [0]
        cancelled += 1
    krull = nvars - cancelled
    if krull <= 0:
        return None, 0
    return krull - 1, sum(num)
