"""Finite-dimensional left modules, morphism spaces, and standard modules.

A Module stores one action matrix per algebra basis element, acting on
column vectors from the left, with the multiplicativity contract

    rho(b_i) rho(b_j) = sum_k sc[j,i,k] rho(b_k),

so applying b_i and then b_j realises the product "b_i then b_j".  The
regular module acts by right multiplication, and the indecomposable
projective P_i is the subspace e_i * A of the regular module; for a path
algebra this is spanned by the paths starting at vertex i.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import Algebra, AlgebraError
from .exactla import (
    FieldSpec,
    Mat,
    block_diag,
    column_space,
    hstack,
    in_span,
    inverse,
    kernel_basis,
    rank,
    rref,
    solve,
    span_union,
    vstack,
)


class ModuleError(ValueError):
    pass


class Module:
    """Left module given by one action matrix per algebra basis element."""

    __slots__ = ("algebra", "dim", "rho", "name", "_cache")

    def __init__(self, algebra: Algebra, rho, name: str = "", check: bool = True):
        self.algebra = algebra
        if algebra.field.char:
            arr = np.asarray(rho, dtype=np.int64) % algebra.field.char
        else:
            from fractions import Fraction

            arr = np.vectorize(Fraction, otypes=[object])(np.asarray(rho, dtype=object)) if np.asarray(rho, dtype=object).size else np.asarray(rho, dtype=object)
        if arr.ndim != 3 or arr.shape[0] != algebra.dim or arr.shape[1] != arr.shape[2]:
            raise ModuleError(f"action tensor must be ({algebra.dim}, n, n), got {arr.shape}")
        self.rho = arr
        self.dim = arr.shape[1]
        self.name = name
        self._cache = {}
        if check:
            self._validate()

    def _validate(self):
        a = self.algebra
        p = a.field.char
        n = self.dim
        ident = np.eye(n, dtype=self.rho.dtype)
        # rho(1) = identity
        one = self.act(a.unit)
        if not np.array_equal(one.a, ident if p else Mat(a.field, ident).a):
            raise ModuleError("rho(1) is not the identity")
        # rho(b_i) rho(b_j) = rho(b_j * b_i), chunked over i
        for i in range(a.dim):
            lhs = np.einsum("pq,jqr->jpr", self.rho[i], self.rho)
            prod = np.tensordot(a.sc[:, i, :], self.rho, axes=(1, 0))  # (j,p,r)
            if p:
                lhs %= p
                prod %= p
            if not np.array_equal(lhs, prod):
                raise ModuleError(
                    f"action fails multiplicativity at basis index {i}"
                )

    # ------------------------------------------------------------------
    def act(self, v: Mat) -> Mat:
        """Action matrix of the algebra element with coordinates v."""
        m = np.tensordot(v.a[:, 0], self.rho, axes=(0, 0))
        return Mat(self.algebra.field, m) if self.algebra.field.char else Mat(self.algebra.field, m)

    def action_of_basis(self, i: int) -> Mat:
        return Mat(self.algebra.field, self.rho[i])

    @property
    def field(self) -> FieldSpec:
        return self.algebra.field

    def is_zero(self) -> bool:
        return self.dim == 0

    def radical_subspace(self) -> Mat:
        """Basis of J*X, the span of the radical action images."""
        if "radical_subspace" in self._cache:
            return self._cache["radical_subspace"]
        rad = self.algebra.radical_basis()
        imgs = [self.act(rad.col(j)) for j in range(rad.cols)]
        out = span_union(self.field, self.dim, imgs)
        self._cache["radical_subspace"] = out
        return out

    def socle_subspace(self) -> Mat:
        rad = self.algebra.radical_basis()
        if rad.cols == 0:
            return Mat.eye(self.field, self.dim)
        stacked = vstack([self.act(rad.col(j)) for j in range(rad.cols)])
        return kernel_basis(stacked)

    def idempotent_image(self, i: int) -> Mat:
        """Basis of e_i X for the i-th primitive idempotent."""
        key = ("idem_image", i)
        if key in self._cache:
            return self._cache[key]
        e = self.algebra.primitive_idempotents()[i]
        img = column_space(self.act(e))
        self._cache[key] = img
        return img

    def __repr__(self):
        tag = f" '{self.name}'" if self.name else ""
        return f"Module{tag}(dim={self.dim})"


@dataclass
class ModuleMorphism:
    """Intertwiner F: src -> dst with F rho_src(b) = rho_dst(b) F."""

    src: Module
    dst: Module
    mat: Mat

    def __post_init__(self):
        if self.mat.shape != (self.dst.dim, self.src.dim):
            raise ModuleError(
                f"morphism matrix shape {self.mat.shape} does not match "
                f"({self.dst.dim}, {self.src.dim})"
            )

    def verify(self) -> "ModuleMorphism":
        a = self.src.algebra
        if a is not self.dst.algebra:
            raise ModuleError("algebra mismatch")
        for i in range(a.dim):
            if not (self.mat @ self.src.action_of_basis(i) == self.dst.action_of_basis(i) @ self.mat):
                raise ModuleError(f"intertwining fails at basis index {i}")
        return self

    def then(self, other: "ModuleMorphism") -> "ModuleMorphism":
        """Composite: self first, then other."""
        if self.dst is not other.src and self.dst.dim != other.src.dim:
            raise ModuleError("composition mismatch")
        return ModuleMorphism(self.src, other.dst, other.mat @ self.mat)

    def is_mono(self) -> bool:
        return rank(self.mat) == self.src.dim

    def is_epi(self) -> bool:
        return rank(self.mat) == self.dst.dim

    def is_iso(self) -> bool:
        return self.src.dim == self.dst.dim and self.is_mono()


def zero_module(algebra: Algebra) -> Module:
    shape = (algebra.dim, 0, 0)
    arr = np.zeros(shape, dtype=np.int64 if algebra.field.char else object)
    return Module(algebra, arr, name="0", check=False)


def zero_morphism(x: Module, y: Module) -> ModuleMorphism:
    return ModuleMorphism(x, y, Mat.zeros(x.field, y.dim, x.dim))


def identity_morphism(x: Module) -> ModuleMorphism:
    return ModuleMorphism(x, x, Mat.eye(x.field, x.dim))


# ----------------------------------------------------------------------
# construction of standard modules
# ----------------------------------------------------------------------

def regular_module(a: Algebra) -> Module:
    """The algebra as a left module over itself (action: x -> x * b)."""
    if "regular_module" in a._cache:
        return a._cache["regular_module"]
    rho = np.stack([a.right_mult(i).a for i in range(a.dim)]) if a.dim else np.zeros((0, 0, 0), dtype=np.int64)
    m = Module(a, rho, name="A", check=False)
    a._cache["regular_module"] = m
    return m


def submodule(x: Module, cols: Mat, name: str = "") -> tuple[Module, ModuleMorphism]:
    """Smallest submodule containing the given column vectors.

    Vectors that do not span an action-closed subspace are closed up
    under the action. Returns the submodule with its inclusion.
    """
    a = x.algebra
    cur = column_space(cols)
    while True:
        imgs = [x.action_of_basis(i) @ cur for i in range(a.dim)]
        new = span_union(x.field, x.dim, [cur] + imgs)
        if new.cols == cur.cols:
            break
        cur = new
    basis = cur
    rho = np.zeros((a.dim, basis.cols, basis.cols), dtype=x.rho.dtype)
    if x.field.char == 0:
        from fractions import Fraction

        rho[...] = Fraction(0)
    for i in range(a.dim):
        coords = solve(basis, x.action_of_basis(i) @ basis)
        assert coords is not None, "subspace not action-closed after closure"
        rho[i] = coords.a
    sub = Module(a, rho, name=name or f"sub({x.name})", check=False)
    return sub, ModuleMorphism(sub, x, basis)


def quotient(x: Module, cols: Mat, name: str = "") -> tuple[Module, ModuleMorphism]:
    """Quotient of x by the submodule generated by the given columns."""
    a = x.algebra
    sub, incl = submodule(x, cols)
    basis = incl.mat
    if basis.cols == x.dim:
        q = zero_module(a)
        return q, ModuleMorphism(x, q, Mat.zeros(x.field, 0, x.dim))
    _red, pivots, _rk = rref(basis.T)
    pivot_set = set(pivots)
    comp = [i for i in range(x.dim) if i not in pivot_set]
    sect = Mat(x.field, np.eye(x.dim, dtype=np.int64)[:, comp])
    full = hstack([basis, sect]) if basis.cols else sect
    proj = inverse(full)
    proj = proj._wrap(proj.a[basis.cols :, :].copy())
    rho = np.zeros((a.dim, len(comp), len(comp)), dtype=x.rho.dtype)
    if x.field.char == 0:
        from fractions import Fraction

        rho[...] = Fraction(0)
    for i in range(a.dim):
        rho[i] = (proj @ x.action_of_basis(i) @ sect).a
    quo = Module(a, rho, name=name or f"{x.name}/sub", check=False)
    return quo, ModuleMorphism(x, quo, proj)


def direct_sum(mods: list[Module], name: str = "") -> tuple[Module, list[ModuleMorphism], list[ModuleMorphism]]:
    """(sum, inclusions, projections)."""
    if not mods:
        raise ModuleError("direct_sum of empty list needs an algebra; use zero_module")
    a = mods[0].algebra
    for m in mods:
        if m.algebra is not a:
            raise ModuleError("algebra mismatch in direct sum")
    total = sum(m.dim for m in mods)
    rho = np.zeros((a.dim, total, total), dtype=mods[0].rho.dtype)
    if a.field.char == 0:
        from fractions import Fraction

        rho[...] = Fraction(0)
    offs = []
    o = 0
    for m in mods:
        offs.append(o)
        rho[:, o : o + m.dim, o : o + m.dim] = m.rho
        o += m.dim
    s = Module(a, rho, name=name or "(+)".join(m.name or "?" for m in mods), check=False)
    incls, projs = [], []
    for m, o in zip(mods, offs):
        im = Mat.zeros(a.field, total, m.dim)
        im.a[o : o + m.dim, :] = np.eye(m.dim, dtype=np.int64)
        pm = Mat.zeros(a.field, m.dim, total)
        pm.a[:, o : o + m.dim] = np.eye(m.dim, dtype=np.int64)
        incls.append(ModuleMorphism(m, s, im))
        projs.append(ModuleMorphism(s, m, pm))
    return s, incls, projs


def kernel(f: ModuleMorphism) -> tuple[Module, ModuleMorphism]:
    ker = kernel_basis(f.mat)
    return submodule(f.src, ker, name=f"ker")


def image(f: ModuleMorphism) -> tuple[Module, ModuleMorphism]:
    return submodule(f.dst, column_space(f.mat), name="im")


def cokernel(f: ModuleMorphism) -> tuple[Module, ModuleMorphism]:
    return quotient(f.dst, column_space(f.mat), name="coker")


def projective_module(a: Algebra, i: int) -> Module:
    """P_i = e_i * A inside the regular module."""
    key = ("projective", i)
    if key in a._cache:
        return a._cache[key]
    reg = regular_module(a)
    e = a.primitive_idempotents()[i]
    basis = column_space(a.left_mult_of(e))
    p, incl = submodule(reg, basis, name=f"P{i}")
    p._cache["proj_basis"] = incl.mat  # columns: algebra coordinates
    p._cache["proj_index"] = i
    a._cache[key] = p
    return p


def simple_module(a: Algebra, i: int) -> Module:
    key = ("simple", i)
    if key in a._cache:
        return a._cache[key]
    p = projective_module(a, i)
    s, _proj = quotient(p, p.radical_subspace(), name=f"S{i}")
    a._cache[key] = s
    return s


def dual_module(x: Module, name: str = "") -> Module:
    """D(X) over the opposite algebra; action matrices are transposed."""
    op = x.algebra.opposite()
    rho = np.stack([x.rho[i].T for i in range(x.algebra.dim)]) if x.algebra.dim else x.rho
    return Module(op, rho.copy(), name=name or f"D({x.name})", check=False)


def dual_morphism(f: ModuleMorphism) -> ModuleMorphism:
    return ModuleMorphism(dual_module(f.dst), dual_module(f.src), f.mat.T)


def injective_module(a: Algebra, i: int) -> Module:
    """I_i = D of the opposite-algebra projective at the same idempotent."""
    key = ("injective", i)
    if key in a._cache:
        return a._cache[key]
    op = a.opposite()
    pop = projective_module(op, i)
    inj = dual_module(pop, name=f"I{i}")
    assert inj.algebra is a
    a._cache[key] = inj
    return inj


def standard_modules(a: Algebra):
    """(simples, projectives, injectives), indexed like the idempotents."""
    n = len(a.primitive_idempotents())
    simples = [simple_module(a, i) for i in range(n)]
    projs = [projective_module(a, i) for i in range(n)]
    injs = [injective_module(a, i) for i in range(n)]
    return simples, projs, injs


def radical_submodule(x: Module) -> tuple[Module, ModuleMorphism]:
    """J*X with its inclusion."""
    return submodule(x, x.radical_subspace(), name=f"rad({x.name})")


def radical_series(x: Module) -> list[Mat]:
    """Subspace bases J^0 X = X, J X, J^2 X, ... down to 0."""
    out = [Mat.eye(x.field, x.dim)]
    cur = x
    cur_basis = out[0]
    while True:
        rad_in_cur = cur.radical_subspace()
        nxt = cur_basis @ rad_in_cur
        out.append(nxt)
        if rad_in_cur.cols == 0:
            break
        cur, incl = submodule(x, nxt)
        cur_basis = incl.mat
    return out


def loewy_length_of(x: Module) -> int:
    return len(radical_series(x)) - 1 if x.dim else 0


def top_and_socle(x: Module):
    """((top, projection), (socle, inclusion)); both are semisimple."""
    top, proj = quotient(x, x.radical_subspace(), name=f"top({x.name})")
    soc, incl = submodule(x, x.socle_subspace(), name=f"soc({x.name})")
    return (top, proj), (soc, incl)


@dataclass(frozen=True)
class AlgebraMorphism:
    """phi: src -> dst, unit-preserving and multiplicative on the basis."""

    src: Algebra
    dst: Algebra
    mat: Mat  # dst.dim x src.dim, columns are images of basis elements

    def verify(self) -> "AlgebraMorphism":
        if not (self.mat @ self.src.unit == self.dst.unit):
            raise AlgebraError("morphism does not preserve the unit")
        for i in range(self.src.dim):
            lhs = self.mat @ self.src.left_mult(i)
            rhs = self.dst.left_mult_of(self.mat @ self.src.basis_vec(i)) @ self.mat
            if not (lhs == rhs):
                raise AlgebraError(f"morphism fails multiplicativity at basis index {i}")
        return self


def restrict_along(phi: AlgebraMorphism, y: Module) -> Module:
    """Pull a dst-module back to a src-module: rho(b) = rho_Y(phi(b))."""
    phi.verify()
    if y.algebra is not phi.dst:
        raise ModuleError("module is not over the morphism target")
    rho = np.stack([y.act(phi.mat @ phi.src.basis_vec(i)).a for i in range(phi.src.dim)]) if phi.src.dim else np.zeros((0, y.dim, y.dim), dtype=y.rho.dtype)
    return Module(phi.src, rho, name=f"res({y.name})")


# ----------------------------------------------------------------------
# morphism spaces
# ----------------------------------------------------------------------

def hom_basis(x: Module, y: Module) -> list[ModuleMorphism]:
    """Basis of the intertwiner space Hom(x, y).

    Solved blockwise: the complete orthogonal idempotents force a block
    structure, then the remaining algebra generators cut the space down
    one at a time.
    """
    if x.algebra is not y.algebra:
        raise ModuleError("algebra mismatch")
    a = x.algebra
    if x.dim == 0 or y.dim == 0:
        return []
    idems = a.primitive_idempotents()
    gens = a.generators()

    # block coordinates: X = (+) e_i X, Y = (+) e_i Y
    bx = [x.idempotent_image(i) for i in range(len(idems))]
    by = [y.idempotent_image(i) for i in range(len(idems))]
    cx = hstack([b for b in bx if b.cols] or [Mat.zeros(a.field, x.dim, 0)])
    cy = hstack([b for b in by if b.cols] or [Mat.zeros(a.field, y.dim, 0)])
    if cx.cols != x.dim or cy.cols != y.dim:
        raise ModuleError("idempotent images do not decompose the module")
    cx_inv = inverse(cx)
    cy_inv = inverse(cy)

    # unknown block positions in conjugated coordinates
    xdims = [b.cols for b in bx]
    ydims = [b.cols for b in by]
    positions = []  # (row, col) of free entries
    ro = co = 0
    for xi, yi in zip(xdims, ydims):
        for r in range(yi):
            for c in range(xi):
                positions.append((ro + r, co + c))
        ro += yi
        co += xi
    if not positions:
        return []

    # current solution basis: columns = coefficient vectors over positions
    nfree = len(positions)
    coeff = Mat.eye(a.field, nfree)

    def materialize(coefc: Mat) -> list[Mat]:
        mats = []
        for j in range(coefc.cols):
            f = Mat.zeros(a.field, y.dim, x.dim)
            for (r, c), val in zip(positions, coefc.a[:, j]):
                f.a[r, c] = val
            mats.append(f)
        return mats

    ax = {g: (cx_inv @ x.action_of_basis(g) @ cx) for g in gens}
    ay = {g: (cy_inv @ y.action_of_basis(g) @ cy) for g in gens}
    for g in gens:
        if coeff.cols == 0:
            break
        mats = materialize(coeff)
        resid = []
        for f in mats:
            r = f @ ax[g] - ay[g] @ f
            resid.append(r.a.reshape(-1))
        rm = Mat(a.field, np.stack(resid, axis=1))
        coeff = coeff @ kernel_basis(rm)

    out = []
    for f in materialize(coeff):
        out.append(ModuleMorphism(x, y, cy @ f @ cx_inv))
    return out


def hom_dim(x: Module, y: Module) -> int:
    return len(hom_basis(x, y))


def endomorphism_algebra(m: Module):
    """(E, hom basis) where E carries composition-order structure constants:
    the product f_i * f_j is "f_i then f_j" with matrix F_j @ F_i."""
    if m.is_zero():
        raise ModuleError("endomorphism algebra of the zero module")
    key = "endomorphism_algebra"
    if key in m._cache:
        return m._cache[key]
    basis = hom_basis(m, m)
    d = len(basis)
    f = m.field
    vecs = Mat(f, np.stack([b.mat.a.reshape(-1) for b in basis], axis=1))
    sc = np.zeros((d, d, d), dtype=np.int64 if f.char else object)
    if f.char == 0:
        from fractions import Fraction

        sc[...] = Fraction(0)
    for i in range(d):
        prods = []
        for j in range(d):
            prods.append((basis[j].mat @ basis[i].mat).a.reshape(-1))
        coords = solve(vecs, Mat(f, np.stack(prods, axis=1)))
        assert coords is not None, "endomorphism space not closed under composition"
        sc[i] = coords.a.T
    unit = solve(vecs, Mat(f, np.eye(m.dim, dtype=np.int64).reshape(-1, 1)))
    assert unit is not None, "identity endomorphism missing from Hom basis"
    alg = Algebra(f, [f"f{i}" for i in range(d)], sc, unit.a[:, 0])
    m._cache[key] = (alg, basis)
    return alg, basis


def element_to_endo(m: Module, alg_basis: list[ModuleMorphism], v: Mat) -> Mat:
    """Matrix of the endomorphism with End-algebra coordinates v."""
    out = Mat.zeros(m.field, m.dim, m.dim)
    for k, b in enumerate(alg_basis):
        out = out + b.mat.scale(v.a[k, 0])
    return out
