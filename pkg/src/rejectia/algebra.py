"""Finite-dimensional associative unital algebras by structure constants.

Conventions, fixed once for the whole package:

* ``b_i * b_j`` means "b_i then b_j" and expands as sum_k sc[i,j,k] b_k.
  For a path algebra this is concatenation with the first-traversed arrow
  on the left, so relation words read in traversal order.
* A module action matrix rho(b) acts on column vectors from the left and
  satisfies rho(b_i) rho(b_j) = rho(b_j * b_i); applying b_i and then b_j
  to a vector realises the product "b_i then b_j".
* The projective P_i is the subspace e_i * A of the regular module, i.e.
  the paths starting at vertex i for a quiver algebra.

The Jacobson radical over GF(p) is found by the trace-form kernel and,
when that kernel is not nilpotent (only possible when p divides a matrix
block size of the semisimple quotient), refined by the characteristic
polynomial coefficient chain of the Friedl-Ronyai family.  Every radical
returned is certified: two-sided ideal, nilpotent, semisimple quotient.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dataclass_field

import numpy as np
from sympy import GF, QQ, Poly, symbols

from .exactla import (
    FieldSpec,
    Mat,
    column_space,
    hstack,
    in_span,
    inverse,
    is_invertible,
    kernel_basis,
    rank,
    rref,
    solve,
    span_union,
    vstack,
)


class AlgebraError(ValueError):
    pass


@dataclass(frozen=True)
class QuiverSpec:
    """A finite quiver with monomial (zero) relations.

    Relation paths are arrow-name sequences in traversal order, first
    arrow first, and must be composable with length at least 2.
    """

    vertices: tuple[str, ...]
    arrows: tuple[tuple[str, str, str], ...]  # (name, source, target)
    zero_relations: tuple[tuple[str, ...], ...] = ()

    def __post_init__(self):
        vset = set(self.vertices)
        if len(vset) != len(self.vertices):
            raise AlgebraError("duplicate vertex labels")
        names = [a[0] for a in self.arrows]
        if len(set(names)) != len(names) or set(names) & vset:
            raise AlgebraError("arrow names must be distinct from each other and from vertices")
        arr = {a[0]: a for a in self.arrows}
        for a in self.arrows:
            if a[1] not in vset or a[2] not in vset:
                raise AlgebraError(f"arrow {a[0]} has unknown endpoint")
        for rel in self.zero_relations:
            if len(rel) < 2:
                raise AlgebraError("relation paths must have length >= 2")
            for x, y in zip(rel, rel[1:]):
                if x not in arr or y not in arr:
                    raise AlgebraError(f"relation {rel} uses unknown arrow")
                if arr[x][2] != arr[y][1]:
                    raise AlgebraError(f"relation {rel} is not composable")


class Algebra:
    """Immutable algebra with cached radical and primitive idempotents."""

    def __init__(
        self,
        field: FieldSpec,
        labels: list[str],
        sc,
        unit,
        quiver: QuiverSpec | None = None,
        _skip_validation: bool = False,
    ):
        self.field = field
        self.dim = len(labels)
        self.labels = list(labels)
        if field.char:
            self.sc = np.asarray(sc, dtype=np.int64) % field.char
        else:
            from fractions import Fraction

            self.sc = np.vectorize(Fraction, otypes=[object])(np.asarray(sc, dtype=object))
        if self.sc.shape != (self.dim, self.dim, self.dim):
            raise AlgebraError("structure constant tensor must be dim^3")
        self.unit = Mat(field, np.asarray(unit).reshape(self.dim, 1))
        self.quiver = quiver
        self._cache: dict = {}
        if not _skip_validation:
            self._validate()

    # ------------------------------------------------------------------
    # multiplication helpers
    # ------------------------------------------------------------------
    def left_mult(self, i: int) -> Mat:
        """Matrix of x -> b_i * x."""
        return Mat(self.field, self.sc[i].T)

    def right_mult(self, i: int) -> Mat:
        """Matrix of x -> x * b_i."""
        return Mat(self.field, self.sc[:, i, :].T)

    def left_mult_of(self, v: Mat) -> Mat:
        """Matrix of x -> v * x for a coordinate vector v."""
        acc = np.tensordot(v.a[:, 0], self.sc, axes=(0, 0)).T
        return Mat(self.field, acc)

    def right_mult_of(self, v: Mat) -> Mat:
        acc = np.tensordot(v.a[:, 0], self.sc, axes=(0, 1)).T
        return Mat(self.field, acc)

    def mul(self, u: Mat, v: Mat) -> Mat:
        """Product of coordinate vectors, u then v."""
        return self.left_mult_of(u) @ v

    def basis_vec(self, i: int) -> Mat:
        v = Mat.zeros(self.field, self.dim, 1)
        v.a[i, 0] = self.field.one()
        return v

    # ------------------------------------------------------------------
    # validation
    # ------------------------------------------------------------------
    def _validate(self):
        p = self.field.char
        sc = self.sc
        d = self.dim
        for i in range(d):
            lhs = np.einsum("jl,lkm->jkm", sc[i], sc)
            rhs = np.einsum("jkl,lm->jkm", sc, sc[i])
            if p:
                lhs %= p
                rhs %= p
            if not np.array_equal(lhs, rhs):
                bad = np.argwhere(lhs != rhs)[0]
                raise AlgebraError(
                    f"associativity fails on basis triple ({self.labels[i]}, "
                    f"{self.labels[bad[0]]}, {self.labels[bad[1]]})"
                )
        one = self.unit
        for j in range(d):
            bj = self.basis_vec(j)
            if not (self.mul(one, bj) == bj and self.mul(bj, one) == bj):
                raise AlgebraError(f"unit law fails on basis element {self.labels[j]}")

    # ------------------------------------------------------------------
    # constructions
    # ------------------------------------------------------------------
    def opposite(self) -> "Algebra":
        if "opposite" in self._cache:
            return self._cache["opposite"]
        op = Algebra(
            self.field,
            self.labels,
            np.swapaxes(self.sc, 0, 1).copy(),
            self.unit.a[:, 0],
            quiver=_reverse_quiver(self.quiver) if self.quiver else None,
            _skip_validation=True,
        )
        op._cache["opposite"] = self
        self._cache["opposite"] = op
        for key in ("radical", "idempotents", "loewy"):
            if key in self._cache:
                op._cache[key] = self._cache[key]
        if "path_words" in self._cache:
            op._cache["path_words"] = [
                (tuple(reversed(w)), t, s) for (w, s, t) in self._cache["path_words"]
            ]
        return op

    def generators(self) -> list[int]:
        """Indices of a basis subset generating the unital algebra.

        Greedy: spin the unital span closed under products, adding the
        first basis element outside it until the whole algebra is reached.
        """
        if "generators" in self._cache:
            return self._cache["generators"]
        gens: list[int] = []
        span = column_space(self.unit)
        while span.cols < self.dim:
            nxt = None
            for i in range(self.dim):
                if not in_span(span, self.basis_vec(i)):
                    nxt = i
                    break
            assert nxt is not None
            gens.append(nxt)
            span = _spin_subalgebra(self, span_union(self.field, self.dim, [span, self.basis_vec(nxt)]))
        self._cache["generators"] = gens
        return gens

    # ------------------------------------------------------------------
    # radical
    # ------------------------------------------------------------------
    def radical_basis(self) -> Mat:
        """Basis (columns) of the Jacobson radical, certified."""
        if "radical" in self._cache:
            return self._cache["radical"]
        if self.quiver is not None:
            words = self._cache["path_words"]
            arrows = [i for i, (w, _s, _t) in enumerate(words) if len(w) >= 1]
            cand = hstack([self.basis_vec(i) for i in arrows]) if arrows else Mat.zeros(self.field, self.dim, 0)
            generic = self._radical_generic()
            if not _same_span(cand, generic):
                raise AlgebraError("arrow-ideal radical disagrees with the generic algorithm")
            rad = cand
        else:
            rad = self._radical_generic()
        self._certify_radical(rad)
        self._cache["radical"] = rad
        return rad

    def _trace_gram(self) -> Mat:
        """Gram matrix G[i,j] = tr(L_i L_j) of the regular trace form."""
        if "trace_gram" in self._cache:
            return self._cache["trace_gram"]
        d = self.dim
        # L[i][k,j] = sc[i,j,k]; tr(L_i L_j) = sum_{a,b} L_i[a,b] L_j[b,a]
        l = np.swapaxes(self.sc, 1, 2)
        g = np.einsum("iab,jba->ij", l, l)
        if self.field.char:
            g %= self.field.char
        gm = Mat(self.field, g)
        self._cache["trace_gram"] = gm
        return gm

    def _trace_form_kernel(self, sub: Mat) -> Mat:
        """{x in span(sub) : tr(L_x L_y) = 0 for all y in the algebra}."""
        if self.dim == 0:
            return Mat.zeros(self.field, 0, 0)
        g = self._trace_gram()
        return sub @ kernel_basis(g @ sub)

    def _radical_generic(self) -> Mat:
        if self.dim == 0:
            return Mat.zeros(self.field, 0, 0)
        full = Mat.eye(self.field, self.dim)
        t = self._trace_form_kernel(full)
        if self.field.char == 0:
            return column_space(t)
        if _subspace_nilpotent(self, t):
            return column_space(t)
        # p divides a matrix-block size of the semisimple quotient; refine
        # with charpoly-coefficient forms, feasible only for small algebras.
        if self.dim > 16:
            raise AlgebraError(
                "unsupported field/characteristic combination: trace form is "
                f"degenerate and dim {self.dim} exceeds the refinement guard"
            )
        return self._radical_charpoly_chain(t)

    def _radical_charpoly_chain(self, start: Mat) -> Mat:
        p = self.field.char
        sub = start
        i = 1
        while p**i <= self.dim:
            q = p**i
            lmats = [self.left_mult_of(sub.col(a)) for a in range(sub.cols)]
            rows = []
            for lb in lmats:
                rows.append([_charpoly_coeff(self.field, la @ lb, q) for la in lmats])
            g = Mat(self.field, np.asarray(rows, dtype=np.int64))
            sub = column_space(sub @ kernel_basis(g))
            if _subspace_nilpotent(self, sub):
                return sub
            i += 1
        if not _subspace_nilpotent(self, sub):
            raise AlgebraError("radical refinement did not reach a nilpotent ideal")
        return sub

    def _certify_radical(self, rad: Mat):
        # two-sided ideal, checked in one batched solve per side
        if rad.cols:
            left_prods = hstack([self.left_mult(i) @ rad for i in range(self.dim)])
            right_prods = hstack([self.right_mult(i) @ rad for i in range(self.dim)])
            if not in_span(rad, left_prods):
                raise AlgebraError("radical candidate is not a left ideal")
            if not in_span(rad, right_prods):
                raise AlgebraError("radical candidate is not a right ideal")
        if not _subspace_nilpotent(self, rad):
            raise AlgebraError("radical candidate is not nilpotent")
        # semisimple quotient: the trace form of the quotient must be
        # nondegenerate, or a separability idempotent must exist.
        quo, _proj = _quotient_by_subspace(self, rad)
        t = quo._trace_form_kernel(Mat.eye(quo.field, quo.dim))
        if t.cols == 0 or rank(t) == 0:
            return
        if quo.dim <= 40 and _has_separability_idempotent(quo):
            return
        raise AlgebraError("quotient by radical candidate is not certified semisimple")

    def loewy_length(self) -> int:
        if self.dim == 0:
            return 0
        if "loewy" in self._cache:
            return self._cache["loewy"]
        rad = self.radical_basis()
        ll = 1
        cur = rad
        while cur.cols:
            cur = _subspace_product(self, cur, rad)
            ll += 1
        self._cache["loewy"] = ll
        return ll

    # ------------------------------------------------------------------
    # idempotents
    # ------------------------------------------------------------------
    def primitive_idempotents(self) -> list[Mat]:
        """Complete orthogonal primitive idempotent list, cached.

        For quiver algebras these are the trivial paths in vertex order.
        Otherwise idempotents are split in the semisimple quotient and
        lifted by Newton iteration e <- 3e^2 - 2e^3.
        """
        if "idempotents" in self._cache:
            return self._cache["idempotents"]
        if self.quiver is not None:
            words = self._cache["path_words"]
            where = {s: i for i, (w, s, _t) in enumerate(words) if len(w) == 0}
            idems = [self.basis_vec(where[v]) for v in self.quiver.vertices]
        else:
            idems = _complete_primitive_idempotents(self)
        _certify_idempotents(self, idems)
        self._cache["idempotents"] = idems
        return idems

    def idempotent_classes(self) -> list[list[int]]:
        """Indices of primitive idempotents grouped by isomorphic projectives."""
        if "idem_classes" in self._cache:
            return self._cache["idem_classes"]
        from .decomp import is_isomorphic
        from .modules import projective_module

        idems = self.primitive_idempotents()
        projs = [projective_module(self, i) for i in range(len(idems))]
        classes: list[list[int]] = []
        for i in range(len(idems)):
            placed = False
            for cl in classes:
                if projs[cl[0]].dim == projs[i].dim and is_isomorphic(projs[cl[0]], projs[i]):
                    cl.append(i)
                    placed = True
                    break
            if not placed:
                classes.append([i])
        self._cache["idem_classes"] = classes
        return classes

    # ------------------------------------------------------------------
    def quotient_by_idempotent_ideal(self, e: Mat):
        """(quotient algebra, projection Mat, corner algebra eAe, corner basis).

        The quotient is by the two-sided ideal A*e*A; the projection matrix
        maps coordinates onto the chosen complement basis.
        """
        if not (self.mul(e, e) == e):
            raise AlgebraError("e is not idempotent")
        ideal = _two_sided_ideal(self, e)
        quo, proj = _quotient_by_subspace(self, ideal)
        corner, corner_basis = _corner_algebra(self, e)
        return quo, proj, corner, corner_basis

    def corner(self, e: Mat):
        return _corner_algebra(self, e)

    def summary(self) -> dict:
        return {
            "dim": self.dim,
            "labels": self.labels,
            "field_char": self.field.char,
            "radical_dim": self.radical_basis().cols,
            "loewy_length": self.loewy_length(),
            "idempotents": len(self.primitive_idempotents()),
        }

    def __repr__(self):
        return f"Algebra(dim={self.dim}, char={self.field.char})"


# ----------------------------------------------------------------------
# subspace helpers
# ----------------------------------------------------------------------

def _spin_subalgebra(alg: Algebra, span: Mat) -> Mat:
    """Close a subspace (containing 1) under multiplication."""
    cur = column_space(span)
    while True:
        prods = [alg.left_mult_of(cur.col(i)) @ cur for i in range(cur.cols)]
        new = span_union(alg.field, alg.dim, [cur] + prods)
        if new.cols == cur.cols:
            return new
        cur = new


def _subspace_product(alg: Algebra, u: Mat, v: Mat) -> Mat:
    prods = [alg.left_mult_of(u.col(i)) @ v for i in range(u.cols)]
    return span_union(alg.field, alg.dim, prods)


def _subspace_nilpotent(alg: Algebra, sub: Mat) -> bool:
    cur = column_space(sub)
    seen = cur.cols
    while cur.cols:
        cur = _subspace_product(alg, cur, sub)
        if cur.cols >= seen:
            return False
        seen = cur.cols
    return True


def _same_span(a: Mat, b: Mat) -> bool:
    if a.cols != b.cols:
        return False
    if a.cols == 0:
        return True
    return in_span(a, b) and in_span(b, a)


def _two_sided_ideal(alg: Algebra, e: Mat) -> Mat:
    ey = alg.left_mult_of(e)  # columns e*b_j
    vecs = [alg.left_mult(i) @ ey for i in range(alg.dim)]
    return span_union(alg.field, alg.dim, vecs)


def _quotient_by_subspace(alg: Algebra, ideal: Mat):
    """Quotient algebra on a coordinate complement of a two-sided ideal."""
    f = alg.field
    if ideal.cols == alg.dim:
        zero = Algebra(f, [], np.zeros((0, 0, 0), dtype=np.int64 if f.char else object), np.zeros((0,)), _skip_validation=True)
        return zero, Mat.zeros(f, 0, alg.dim)
    red, pivots, rk = rref(ideal.T)
    pivot_set = set(pivots)
    comp = [i for i in range(alg.dim) if i not in pivot_set]
    basis = hstack([ideal, Mat(f, np.eye(alg.dim, dtype=np.int64)[:, comp])]) if ideal.cols else Mat(f, np.eye(alg.dim, dtype=np.int64)[:, comp])
    binv = inverse(basis)
    proj = binv._wrap(binv.a[ideal.cols :, :].copy())  # coordinates in the complement
    d = len(comp)
    sc = np.zeros((d, d, d), dtype=np.int64 if f.char else object)
    if f.char == 0:
        from fractions import Fraction

        sc[...] = Fraction(0)
    sect = Mat(f, np.eye(alg.dim, dtype=np.int64)[:, comp])
    for i in range(d):
        li = alg.left_mult_of(sect.col(i))
        sc[i] = (proj @ li @ sect).T.a
    quo = Algebra(f, [alg.labels[i] for i in comp], sc, (proj @ alg.unit).a[:, 0])
    # quotient map is an algebra morphism on basis pairs:
    # proj(b_i * b_j) = proj(b_i) * proj(b_j), vectorised over j
    for i in range(alg.dim):
        lhs = proj @ alg.left_mult(i)
        rhs = quo.left_mult_of(proj @ alg.basis_vec(i)) @ proj
        if not (lhs == rhs):
            raise AlgebraError("quotient map failed the morphism check")
    return quo, proj


def _corner_algebra(alg: Algebra, e: Mat):
    """(corner algebra e*A*e with unit e, basis columns in A-coordinates)."""
    f = alg.field
    le = alg.left_mult_of(e)
    re = alg.right_mult_of(e)
    basis = column_space(le @ re)
    d = basis.cols
    if d == 0:
        zero = Algebra(f, [], np.zeros((0, 0, 0), dtype=np.int64 if f.char else object), np.zeros((0,)), _skip_validation=True)
        return zero, basis
    sc = np.zeros((d, d, d), dtype=np.int64 if f.char else object)
    if f.char == 0:
        from fractions import Fraction

        sc[...] = Fraction(0)
    for i in range(d):
        li = alg.left_mult_of(basis.col(i))
        coords = solve(basis, li @ basis)
        assert coords is not None
        sc[i] = coords.T.a
    unit_coords = solve(basis, e)
    assert unit_coords is not None
    corner = Algebra(f, [f"c{i}" for i in range(d)], sc, unit_coords.a[:, 0])
    return corner, basis


# ----------------------------------------------------------------------
# charpoly coefficient for the radical refinement
# ----------------------------------------------------------------------

def _charpoly_coeff(field: FieldSpec, m: Mat, k: int):
    """Coefficient of lambda^(n-k) in det(lambda I - m), exact over GF(p)."""
    n = m.rows
    x = symbols("x")
    dom = GF(field.char) if field.char else QQ
    # Hessenberg-free: expand via sympy charpoly on an integer matrix
    from sympy import Matrix as SMat

    sm = SMat(n, n, [int(v) for v in m.a.flatten()])
    cp = sm.charpoly(x)
    coeffs = cp.all_coeffs()  # degree n .. 0
    c = coeffs[k] if k < len(coeffs) else 0
    return field.element(int(c) % field.char if field.char else c)


# ----------------------------------------------------------------------
# semisimple splitting and idempotent lifting
# ----------------------------------------------------------------------

def _min_poly(alg: Algebra, v: Mat):
    """Minimal polynomial coefficients (monic, ascending) of an element."""
    f = alg.field
    pows = [alg.unit]
    cur = alg.unit
    while True:
        cur = alg.mul(cur, v)
        m = hstack(pows)
        rel = solve(m, cur)
        if rel is not None:
            return [-x for x in rel.a[:, 0]] + [f.one()]
        pows.append(cur)


def _poly_of_element(alg: Algebra, v: Mat, coeffs) -> Mat:
    """Evaluate a polynomial (ascending coefficients) at an element."""
    acc = Mat.zeros(alg.field, alg.dim, 1)
    for c in reversed(list(coeffs)):
        acc = alg.mul(acc, v) + alg.unit.scale(c)
    return acc


def _factor_over_field(field: FieldSpec, coeffs):
    """Factor a monic polynomial; returns list of (factor_coeffs, mult)."""
    x = symbols("x")
    if field.char:
        poly = Poly([int(c) % field.char for c in reversed(list(coeffs))], x, modulus=field.char)
    else:
        from fractions import Fraction

        poly = Poly([sympify_fraction(c) for c in reversed(list(coeffs))], x, domain=QQ)
    _, factors = poly.factor_list()
    out = []
    for fac, mult in factors:
        cs = fac.all_coeffs()
        lead = cs[0]
        cs = [c / lead for c in cs]
        asc = list(reversed(cs))
        if field.char:
            asc = [field.element(int(c) % field.char) for c in asc]
        else:
            from fractions import Fraction

            asc = [Fraction(c.p, c.q) if hasattr(c, "p") else Fraction(c) for c in asc]
        out.append((asc, mult))
    return out


def sympify_fraction(c):
    from fractions import Fraction
    from sympy import Rational

    fr = Fraction(c)
    return Rational(fr.numerator, fr.denominator)


def _poly_mul(field, a, b):
    out = [field.zero()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = field.element(out[i + j] + x * y)
    return out


def _poly_pow(field, a, n):
    out = [field.one()]
    for _ in range(n):
        out = _poly_mul(field, out, a)
    return out


def _poly_divmod(field, a, b):
    a = list(a)
    db, qb = len(b) - 1, []
    inv_lead = field.inv(b[-1])
    q = [field.zero()] * max(len(a) - db, 0)
    for i in range(len(a) - 1, db - 1, -1):
        c = field.element(a[i] * inv_lead)
        q[i - db] = c
        for j in range(db + 1):
            a[i - db + j] = field.element(a[i - db + j] - c * b[j])
    while len(a) > 1 and a[-1] == field.zero():
        a.pop()
    return q, a


def _poly_gcd_ext(field, a, b):
    """Extended gcd; returns (g, u, v) with u*a + v*b = g."""
    r0, r1 = list(a), list(b)
    s0, s1 = [field.one()], [field.zero()]
    t0, t1 = [field.zero()], [field.one()]
    while len(r1) > 1 or r1[0] != field.zero():
        q, r = _poly_divmod(field, r0, r1)
        r0, r1 = r1, r if r else [field.zero()]
        s0, s1 = s1, _poly_sub(field, s0, _poly_mul(field, q, s1))
        t0, t1 = t1, _poly_sub(field, t0, _poly_mul(field, q, t1))
    lead = r0[-1]
    inv = field.inv(lead)
    return [field.element(c * inv) for c in r0], [field.element(c * inv) for c in s0], [field.element(c * inv) for c in t0]


def _poly_sub(field, a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else field.zero()
        y = b[i] if i < len(b) else field.zero()
        out.append(field.element(x - y))
    while len(out) > 1 and out[-1] == field.zero():
        out.pop()
    return out


def _splitting_idempotent(alg: Algebra, rng) -> Mat | None:
    """A nontrivial idempotent of a (semisimple) algebra, or None if it
    looks like a division algebra.  Deterministic candidates first, then
    seeded random ones; exhaustive for tiny algebras over tiny fields."""
    if alg.dim <= 1:
        return None

    def try_element(v: Mat) -> Mat | None:
        mp = _min_poly(alg, v)
        factors = _factor_over_field(alg.field, mp)
        if len(factors) < 2:
            return None
        fac, mult = factors[0]
        block = _poly_pow(alg.field, fac, mult) if mult > 1 else fac
        rest = [alg.field.one()]
        for fac2, m2 in factors[1:]:
            rest = _poly_mul(alg.field, rest, _poly_pow(alg.field, fac2, m2))
        g, u, _ = _poly_gcd_ext(alg.field, block, rest)
        if len(g) != 1:
            return None
        e = _poly_of_element(alg, v, _poly_mul(alg.field, u, block))
        if alg.mul(e, e) == e and not e.is_zero() and not (e == alg.unit):
            return e
        return None

    for i in range(alg.dim):
        e = try_element(alg.basis_vec(i))
        if e is not None:
            return e
    for i in range(alg.dim):
        for j in range(i + 1, alg.dim):
            e = try_element(alg.basis_vec(i) + alg.basis_vec(j))
            if e is not None:
                return e
    p = alg.field.char
    budget = 300
    if p and p**alg.dim <= 4096:
        for coeffs in itertools.product(range(p), repeat=alg.dim):
            v = Mat(alg.field, np.asarray(coeffs, dtype=np.int64).reshape(-1, 1))
            e = try_element(v)
            if e is not None:
                return e
        return None
    for _ in range(budget):
        if p:
            v = Mat(alg.field, rng.integers(0, p, size=(alg.dim, 1)))
        else:
            v = Mat(alg.field, rng.integers(-20, 20, size=(alg.dim, 1)).astype(object))
        e = try_element(v)
        if e is not None:
            return e
    return None


def _is_division_certified(alg: Algebra, rng) -> bool:
    """Certify a semisimple algebra is a division algebra.

    Over GF(p) division algebras are fields: commutative with an element
    whose minimal polynomial is irreducible of full degree.
    """
    for i in range(alg.dim):
        for j in range(alg.dim):
            bi, bj = alg.basis_vec(i), alg.basis_vec(j)
            if not (alg.mul(bi, bj) == alg.mul(bj, bi)):
                return False
    def full_degree_irreducible(v):
        mp = _min_poly(alg, v)
        if len(mp) - 1 != alg.dim:
            return False
        factors = _factor_over_field(alg.field, mp)
        return len(factors) == 1 and factors[0][1] == 1

    for i in range(alg.dim):
        if full_degree_irreducible(alg.basis_vec(i)):
            return True
    p = alg.field.char
    for _ in range(200):
        if p:
            v = Mat(alg.field, rng.integers(0, p, size=(alg.dim, 1)))
        else:
            v = Mat(alg.field, rng.integers(-20, 20, size=(alg.dim, 1)).astype(object))
        if full_degree_irreducible(v):
            return True
    if p and p**alg.dim <= 4096:
        for coeffs in itertools.product(range(p), repeat=alg.dim):
            v = Mat(alg.field, np.asarray(coeffs, dtype=np.int64).reshape(-1, 1))
            if full_degree_irreducible(v):
                return True
        return False
    return False


def _complete_primitive_idempotents(alg: Algebra) -> list[Mat]:
    """Split 1 into orthogonal primitive idempotents and lift along J."""
    rng = np.random.default_rng(0xA1)
    rad = alg.radical_basis()
    quo, proj = _quotient_by_subspace(alg, rad)
    # section of the projection: solve proj @ s = id on complement coords
    sect = solve(proj, Mat.eye(alg.field, quo.dim))
    assert sect is not None

    prims_bar: list[Mat] = []

    def split(sub_alg: Algebra, embed):
        """embed: coordinate map from sub_alg into quo (as Mat columns)."""
        e = _splitting_idempotent(sub_alg, rng)
        if e is None:
            if sub_alg.dim > 1 and not _is_division_certified(sub_alg, rng):
                raise AlgebraError(
                    "failed to split a simple factor: unsupported over this field"
                )
            prims_bar.append(embed @ sub_alg.unit)
            return
        f = sub_alg.unit - e
        for idem in (e, f):
            corner, basis = _corner_algebra(sub_alg, idem)
            split(corner, embed @ basis)

    split(quo, Mat.eye(alg.field, quo.dim))

    # lift sequentially, keeping orthogonality by conjugating with the
    # complement of what has been lifted already
    lifted: list[Mat] = []
    for ebar in prims_bar:
        a = sect @ ebar
        s = Mat.zeros(alg.field, alg.dim, 1)
        for e in lifted:
            s = s + e
        compl = alg.unit - s
        a = alg.mul(alg.mul(compl, a), compl)
        for _ in range(64):
            if alg.mul(a, a) == a:
                break
            a = alg.mul(a, a).scale(3) - alg.mul(alg.mul(a, a), a).scale(2)
        else:
            raise AlgebraError("idempotent lifting did not converge")
        lifted.append(a)
    return lifted


def _certify_idempotents(alg: Algebra, idems: list[Mat]):
    total = Mat.zeros(alg.field, alg.dim, 1)
    for i, e in enumerate(idems):
        if not (alg.mul(e, e) == e):
            raise AlgebraError(f"idempotent {i} fails e^2=e")
        total = total + e
        for j, f in enumerate(idems):
            if i != j and not alg.mul(e, f).is_zero():
                raise AlgebraError(f"idempotents {i},{j} not orthogonal")
    if not (total == alg.unit):
        raise AlgebraError("idempotents do not sum to 1")
    # primitivity: the corner eAe must be local, i.e. corner/rad is a
    # division algebra
    rng = np.random.default_rng(0xA2)
    for i, e in enumerate(idems):
        corner, _ = _corner_algebra(alg, e)
        crad = corner.radical_basis()
        top, _ = _quotient_by_subspace(corner, crad)
        if top.dim == 0 or (top.dim > 1 and not _is_division_certified(top, rng)):
            raise AlgebraError(f"idempotent {i} is not primitive")


# ----------------------------------------------------------------------
# separability certificate (semisimplicity over a perfect field)
# ----------------------------------------------------------------------

def _has_separability_idempotent(alg: Algebra) -> bool:
    """Solve for e in A (x) A^op with multiplication(e)=1, (b(x)1)e=(1(x)b)e."""
    d = alg.dim
    f = alg.field
    if d == 0:
        return True
    # unknowns t[u,v]; constraints per basis b: sum_uv t[u,v] (b*b_u (x) b_v - b_u (x) b_v*b)
    rows = []
    for i in range(d):
        li = alg.left_mult(i).a
        ri = alg.right_mult(i).a
        # (b_i * b_u) (x) b_v : coefficient tensor on (k,l) indexed by (u,v)
        block = np.einsum("ku,vl->kluv", li, np.eye(d, dtype=li.dtype)) - np.einsum(
            "ku,vl->kluv", np.eye(d, dtype=li.dtype), ri.T
        )
        rows.append(block.reshape(d * d, d * d))
    mult_rows = np.zeros((d, d * d), dtype=rows[0].dtype)
    for u in range(d):
        for v in range(d):
            mult_rows[:, u * d + v] = alg.sc[u, v, :]
    m = Mat(f, np.vstack(rows + [mult_rows]))
    rhs = Mat.zeros(f, m.rows, 1)
    rhs.a[-d:, 0] = alg.unit.a[:, 0]
    return solve(m, rhs) is not None


def _reverse_quiver(q: QuiverSpec) -> QuiverSpec:
    arrows = tuple((n, t, s) for (n, s, t) in q.arrows)
    rels = tuple(tuple(reversed(r)) for r in q.zero_relations)
    return QuiverSpec(q.vertices, arrows, rels)


# ----------------------------------------------------------------------
# public constructors
# ----------------------------------------------------------------------

def from_structure_constants(table, unit, field: FieldSpec, labels=None) -> Algebra:
    table = np.asarray(table, dtype=object if field.char == 0 else np.int64)
    d = table.shape[0]
    if labels is None:
        labels = [f"b{i}" for i in range(d)]
    return Algebra(field, labels, table, unit)


def from_quiver(q: QuiverSpec, field: FieldSpec, path_cap: int = 10_000) -> Algebra:
    """Path algebra of a quiver modulo monomial relations.

    Basis: the trivial paths and the nonzero residue paths; the radical is
    the span of the paths of length >= 1.  Raises when the path count
    exceeds the cap (non-admissible input).
    """
    arrows = {a[0]: a for a in q.arrows}
    rels = [tuple(r) for r in q.zero_relations]

    def is_dead(word: tuple[str, ...]) -> bool:
        for r in rels:
            lr = len(r)
            for s in range(len(word) - lr + 1):
                if word[s : s + lr] == r:
                    return True
        return False

    paths: list[tuple[tuple[str, ...], str, str]] = []  # (word, source, target)
    for v in q.vertices:
        paths.append(((), v, v))
    frontier = [((a[0],), a[1], a[2]) for a in q.arrows if not is_dead((a[0],))]
    while frontier:
        paths.extend(frontier)
        if len(paths) > path_cap:
            raise AlgebraError(
                f"path enumeration exceeded cap {path_cap}: quiver algebra "
                "looks infinite-dimensional"
            )
        nxt = []
        for word, s, t in frontier:
            for a in q.arrows:
                if a[1] == t:
                    w2 = word + (a[0],)
                    if not is_dead(w2):
                        nxt.append((w2, s, a[2]))
        frontier = nxt

    d = len(paths)
    labels = ["".join(w) if w else f"e_{s}" for (w, s, t) in paths]
    index = {p[0] + (p[1],): i for i, p in enumerate(paths)}

    def locate(word, source):
        return index.get(tuple(word) + (source,))

    sc = np.zeros((d, d, d), dtype=np.int64 if field.char else object)
    if field.char == 0:
        from fractions import Fraction

        sc[...] = Fraction(0)
    one = field.one()
    for i, (wi, si, ti) in enumerate(paths):
        for j, (wj, sj, tj) in enumerate(paths):
            if ti != sj:
                continue
            word = wi + wj
            if is_dead(word):
                continue
            k = locate(word, si)
            if k is not None:
                sc[i, j, k] = one
    unit = np.zeros(d, dtype=np.int64 if field.char else object)
    if field.char == 0:
        from fractions import Fraction

        unit[...] = Fraction(0)
    for v in q.vertices:
        unit[index[(v,)]] = one
    alg = Algebra(field, labels, sc, unit, quiver=q)
    alg._cache["path_words"] = paths
    return alg
