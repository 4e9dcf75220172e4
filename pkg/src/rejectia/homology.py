"""Projective covers, syzygies, minimal resolutions, pd, gl.dim, Ext,
and the syzygy stabilisation functions with the finitistic bound.

Covers never solve intertwiner systems: a morphism P_i -> X out of the
projective P_i = e_i * A is determined by the image of e_i, which may be
any vector of e_i X.  Infinite projective dimension is only ever certified
through syzygy periodicity; otherwise a cap exhaustion reports unknown.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field

import numpy as np

from .algebra import Algebra
from .decomp import decompose, is_isomorphic
from .exactla import FieldSpec, Mat, column_space, in_span, rank, solve, span_union
from .modules import (
    Module,
    ModuleMorphism,
    direct_sum,
    kernel,
    projective_module,
    quotient,
    simple_module,
    zero_module,
)

INFINITE = "certified-infinite"
UNKNOWN = "unknown-at-cap"


class HomologyError(ValueError):
    pass


@dataclass
class ProjectiveTerm:
    """Direct sum of indecomposable projectives, with bookkeeping."""

    module: Module
    classes: list[int]       # idempotent index per summand
    embeddings: list[Mat]    # algebra-coordinate basis per summand
    offsets: list[int]       # start column of each summand inside the sum

    @property
    def dim(self) -> int:
        return self.module.dim


@dataclass
class Resolution:
    """terms[t] covers the t-th syzygy; differentials[0] hits the target,
    differentials[t]: terms[t] -> terms[t-1] afterwards."""

    target: Module
    terms: list[ProjectiveTerm]
    differentials: list[ModuleMorphism]
    status: str                      # "finite" | INFINITE | UNKNOWN
    minimal: bool = True
    period: tuple[int, int] | None = None
    syzygies: list[Module] = dataclass_field(default_factory=list)

    def length(self) -> int | None:
        return len(self.terms) - 1 if self.status == "finite" else None

    def verify(self):
        """d^2 = 0, surjectivity onto the target, stagewise exactness by
        rank count, minimality via radical images."""
        if self.differentials and rank(self.differentials[0].mat) != self.target.dim:
            raise HomologyError("resolution does not surject onto its target")
        for t in range(1, len(self.differentials)):
            comp = self.differentials[t].then(self.differentials[t - 1])
            if not comp.mat.is_zero():
                raise HomologyError(f"d^2 != 0 at stage {t}")
            d_out = self.differentials[t - 1]
            ker_dim = d_out.src.dim - rank(d_out.mat)
            if rank(self.differentials[t].mat) != ker_dim:
                raise HomologyError(f"resolution not exact at stage {t - 1}")
        if self.status == "finite" and self.differentials:
            last = self.differentials[-1]
            if rank(last.mat) != last.src.dim:
                raise HomologyError("final differential has a kernel")
        for t in range(1, len(self.differentials)):
            tgt = self.differentials[t].dst
            img = column_space(self.differentials[t].mat)
            if img.cols and not in_span(tgt.radical_subspace(), img):
                raise HomologyError(f"differential {t} not radical (not minimal)")
        return self


def projective_cover(x: Module) -> ModuleMorphism:
    """Minimal surjection from a projective; kernel inside the radical.

    Greedy over the top: pick idempotent-weighted top vectors not yet in
    the submodule generated so far; each pick contributes one P_i mapping
    its generator e_i onto a lift of the picked vector.
    """
    if "projective_cover" in x._cache:
        return x._cache["projective_cover"]
    a = x.algebra
    if x.dim == 0:
        z = zero_module(a)
        cov = ModuleMorphism(z, x, Mat.zeros(x.field, x.dim, 0))
        x._cache["projective_cover"] = cov
        x._cache["projective_cover_term"] = ProjectiveTerm(z, [], [], [])
        return cov
    top, top_proj = quotient(x, x.radical_subspace())
    idems = a.primitive_idempotents()
    picks: list[tuple[int, Mat]] = []
    covered = Mat.zeros(x.field, top.dim, 0)
    for i in range(len(idems)):
        ei_top = column_space(top.act(idems[i]))
        for j in range(ei_top.cols):
            vbar = ei_top.col(j)
            if covered.cols and in_span(covered, vbar):
                continue
            covered = span_union(
                x.field,
                top.dim,
                [covered] + [top.action_of_basis(k) @ vbar for k in range(a.dim)],
            )
            lift = solve(top_proj.mat, vbar)
            assert lift is not None
            picks.append((i, x.act(idems[i]) @ lift))
    if covered.cols != top.dim:
        raise HomologyError("projective cover failed to exhaust the top")

    summands = [projective_module(a, i) for i, _v in picks]
    total, _incls, _projs = direct_sum(summands) if summands else (zero_module(a), [], [])
    mat = Mat.zeros(x.field, x.dim, total.dim)
    offsets = []
    off = 0
    for (i, v), p in zip(picks, summands):
        offsets.append(off)
        basis = p._cache["proj_basis"]
        for c in range(p.dim):
            mat.a[:, off + c] = (x.act(basis.col(c)) @ v).a[:, 0]
        off += p.dim
    cov = ModuleMorphism(total, x, mat)
    if rank(mat) != x.dim:
        raise HomologyError("projective cover is not surjective")
    x._cache["projective_cover"] = cov
    x._cache["projective_cover_term"] = ProjectiveTerm(
        total,
        [i for i, _ in picks],
        [p._cache["proj_basis"] for p in summands],
        offsets,
    )
    return cov


def cover_term(x: Module) -> ProjectiveTerm:
    projective_cover(x)
    return x._cache["projective_cover_term"]


def syzygy(x: Module) -> Module:
    """Kernel of the projective cover; zero for projectives."""
    if "syzygy" in x._cache:
        return x._cache["syzygy"]
    cov = projective_cover(x)
    ker, incl = kernel(cov)
    ker.name = f"syz({x.name})"
    ker._cache["kernel_inclusion"] = incl.mat
    x._cache["syzygy"] = ker
    return ker


def is_projective(x: Module) -> bool:
    if x.dim == 0:
        return True
    return syzygy(x).dim == 0


def resolution_to_depth(x: Module, depth: int) -> Resolution:
    """Minimal resolution with at least depth+1 terms (or finite earlier);
    no periodicity detection, no status judgement beyond termination."""
    terms: list[ProjectiveTerm] = []
    diffs: list[ModuleMorphism] = []
    syzygies: list[Module] = []
    cur = x
    status = UNKNOWN
    for _stage in range(depth + 1):
        if cur.dim == 0:
            status = "finite"
            break
        cov = projective_cover(cur)
        term = cover_term(cur)
        if not diffs:
            diffs.append(cov)
        else:
            incl = cur._cache["kernel_inclusion"]
            diffs.append(ModuleMorphism(cov.src, diffs[-1].src, incl @ cov.mat))
        terms.append(term)
        ker = syzygy(cur)
        syzygies.append(ker)
        cur = ker
    else:
        status = UNKNOWN
    if cur.dim == 0:
        status = "finite"
    return Resolution(x, terms, diffs, status, syzygies=syzygies)


def min_resolution(x: Module, cap: int = 64) -> Resolution:
    """Minimal projective resolution truncated at cap, with a periodicity
    detector: isomorphic syzygies certify an infinite resolution."""
    res = resolution_to_depth(x, cap)
    if res.status == "finite":
        return res
    chain = [x] + res.syzygies  # chain[t] is the t-th syzygy
    for hi in range(1, len(chain)):
        if chain[hi].dim == 0:
            continue
        for lo in range(hi):
            if chain[lo].dim == chain[hi].dim and is_isomorphic(chain[lo], chain[hi]):
                return Resolution(
                    x,
                    res.terms,
                    res.differentials,
                    INFINITE,
                    period=(lo, hi),
                    syzygies=res.syzygies,
                )
    return res


def pd(x: Module, cap: int = 64):
    """Projective dimension: int, INFINITE, or UNKNOWN."""
    key = ("pd", cap)
    if key in x._cache:
        return x._cache[key]
    res = min_resolution(x, cap)
    if res.status == "finite":
        out = len(res.terms) - 1 if res.terms else 0
    else:
        out = res.status
    x._cache[key] = out
    return out


def gldim(a: Algebra, cap: int = 64):
    """Max over simples of pd; certified infinite if any simple is."""
    key = ("gldim", cap)
    if key in a._cache:
        return a._cache[key]
    n = len(a.primitive_idempotents())
    vals = [pd(simple_module(a, i), cap) for i in range(n)]
    if any(v == INFINITE for v in vals):
        out = INFINITE
    elif any(v == UNKNOWN for v in vals):
        out = UNKNOWN
    else:
        out = max(vals) if vals else 0
    a._cache[key] = out
    return out


# ----------------------------------------------------------------------
# Ext through the Hom complex, transported along idempotent images
# ----------------------------------------------------------------------

def _hom_from_term(term: ProjectiveTerm, y: Module) -> list[tuple[int, Mat]]:
    """Basis of Hom(term, y): pairs (summand index, vector in e_c y); the
    morphism sends the summand generator e_c to that vector."""
    out = []
    for s, c in enumerate(term.classes):
        img = y.idempotent_image(c)
        for j in range(img.cols):
            out.append((s, img.col(j)))
    return out


def _hom_complex_map(res: Resolution, t: int, y: Module) -> Mat:
    """Matrix of Hom(terms[t-1], y) -> Hom(terms[t], y), precomposition
    with differentials[t]."""
    term_a, term_b = res.terms[t - 1], res.terms[t]
    d = res.differentials[t]
    basis_a = _hom_from_term(term_a, y)
    basis_b = _hom_from_term(term_b, y)
    out = Mat.zeros(y.field, len(basis_b), len(basis_a))
    if not basis_a or not basis_b:
        return out
    a = y.algebra
    idems = a.primitive_idempotents()
    # d applied to each summand generator of term_b, split into term_a parts
    gen_images = []
    for s_b, c_b in enumerate(term_b.classes):
        emb_b = term_b.embeddings[s_b]
        gen_coords = solve(emb_b, idems[c_b])
        assert gen_coords is not None
        col = Mat.zeros(y.field, term_b.dim, 1)
        col.a[term_b.offsets[s_b] : term_b.offsets[s_b] + emb_b.cols, :] = gen_coords.a
        gen_images.append(d.mat @ col)
    row = 0
    row_offsets = []
    for s_b, c_b in enumerate(term_b.classes):
        row_offsets.append(row)
        row += y.idempotent_image(c_b).cols
    colno = 0
    for s_a, v in basis_a:
        emb_a = term_a.embeddings[s_a]
        off_a = term_a.offsets[s_a]
        for s_b, c_b in enumerate(term_b.classes):
            comp = gen_images[s_b].a[off_a : off_a + emb_a.cols, :]
            w = emb_a @ Mat(y.field, comp)
            val = y.act(w) @ v
            img_basis = y.idempotent_image(c_b)
            coords = solve(img_basis, val)
            assert coords is not None, "transported value escaped e_c y"
            out.a[row_offsets[s_b] : row_offsets[s_b] + img_basis.cols, colno] = coords.a[:, 0]
        colno += 1
    return out


def ext(x: Module, y: Module, i: int, cap: int = 64):
    """dim Ext^i(x, y); UNKNOWN when the resolution cannot reach stage i."""
    if i < 0:
        raise HomologyError("ext needs i >= 0")
    res = resolution_to_depth(x, i + 1)
    if res.status != "finite" and len(res.terms) < i + 2:
        return UNKNOWN
    if len(res.terms) <= i:
        return 0  # resolution ended before stage i
    dim_i = len(_hom_from_term(res.terms[i], y))
    if i + 1 < len(res.terms):
        ker_dim = dim_i - rank(_hom_complex_map(res, i + 1, y))
    else:
        ker_dim = dim_i
    if i == 0:
        return ker_dim
    return ker_dim - rank(_hom_complex_map(res, i, y))


# ----------------------------------------------------------------------
# syzygy stabilisation functions
# ----------------------------------------------------------------------

@dataclass
class SyzygyLedger:
    base: Module
    registry: list[Module]      # representatives of non-projective indecomposables
    omega: np.ndarray           # integer matrix of the syzygy action on the registry
    start: np.ndarray           # columns: registry indicator of each base part
    ranks: list[int]            # rank of omega^t @ start over the rationals
    stabilization: int | None
    status: str = "ok"


def _int_rank(m: np.ndarray) -> int:
    if m.size == 0:
        return 0
    return rank(Mat(FieldSpec(0), m))


def phi_psi(x: Module, cap: int = 64):
    """(phi, psi, ledger).

    phi: least stage after which the syzygy action is injective on the
    subgroup generated by the parts of x (rank of omega^t start becomes
    constant).  psi: phi plus the largest finite pd of a summand of the
    phi-th syzygy (0 for an empty sup).
    """
    a = x.algebra
    if x.dim == 0 or is_projective(x):
        ledger = SyzygyLedger(x, [], np.zeros((0, 0), np.int64), np.zeros((0, 0), np.int64), [0], 0)
        return 0, 0, ledger
    dec = decompose(x)
    if not dec.certified:
        raise HomologyError("phi/psi need a certified decomposition")

    registry: list[Module] = []
    omega_images: dict[int, dict[int, int]] = {}

    def register(m: Module) -> int | None:
        if is_projective(m):
            return None
        for k, r in enumerate(registry):
            if r.dim == m.dim and is_isomorphic(r, m):
                return k
        registry.append(m)
        return len(registry) - 1

    base_ids: list[int | None] = [register(p) for p in dec.parts]

    frontier = [k for k in base_ids if k is not None]
    rounds = 0
    while frontier:
        if rounds > cap:
            ledger = SyzygyLedger(
                x, registry, np.zeros((0, 0), np.int64), np.zeros((0, 0), np.int64), [], None, status=UNKNOWN
            )
            return UNKNOWN, UNKNOWN, ledger
        nxt = []
        for k in frontier:
            if k in omega_images:
                continue
            s = syzygy(registry[k])
            img: dict[int, int] = {}
            if s.dim:
                for p, mult in zip(*_parts_mults(s)):
                    kk = register(p)
                    if kk is not None:
                        img[kk] = img.get(kk, 0) + mult
                        if kk not in omega_images:
                            nxt.append(kk)
            omega_images[k] = img
        frontier = nxt
        rounds += 1

    n = len(registry)
    omega = np.zeros((n, n), dtype=np.int64)
    for k, img in omega_images.items():
        for kk, mult in img.items():
            omega[kk, k] = mult
    cols = [k for k in base_ids if k is not None]
    start = np.zeros((n, len(cols)), dtype=np.int64)
    for c, k in enumerate(cols):
        start[k, c] = 1

    # ranks stabilise no later than stage n (Fitting); the final value is
    # certain at n, and phi is the first stage attaining it
    horizon = n + 1
    ranks = []
    cur = start
    for _t in range(horizon + 1):
        ranks.append(_int_rank(cur))
        cur = omega @ cur
    final = ranks[horizon]
    phi = next(m for m in range(len(ranks)) if ranks[m] == final)

    omega_phi = x
    for _ in range(phi):
        omega_phi = syzygy(omega_phi)
    sup = 0
    if omega_phi.dim:
        for p, _mult in zip(*_parts_mults(omega_phi)):
            v = pd(p, cap)
            if v == INFINITE:
                continue
            if v == UNKNOWN:
                ledger = SyzygyLedger(x, registry, omega, start, ranks, phi, status=UNKNOWN)
                return phi, UNKNOWN, ledger
            sup = max(sup, v)
    ledger = SyzygyLedger(x, registry, omega, start, ranks, phi)
    return phi, phi + sup, ledger


def _parts_mults(m: Module):
    dec = decompose(m)
    return dec.parts, dec.multiplicities


def findim_bound(a: Algebra, generator: Module, n: int, cap: int = 64):
    """psi(generator) + n + 1: a finitistic-dimension bound valid when the
    caller supplies a weak-resolution witness of depth n for the generator."""
    _phi, psi, _ledger = phi_psi(generator, cap)
    if psi == UNKNOWN:
        raise HomologyError("psi unknown at cap; no finitistic bound")
    return psi + n + 1
