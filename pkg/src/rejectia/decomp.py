"""Krull-Schmidt decomposition, summand and isomorphism tests.

Splitting idempotents come from the endomorphism algebra: its complete
orthogonal primitive idempotent list cuts the module into indecomposable
images.  Over GF(p) the result is certified; over the rationals a
decomposition that resists splitting is flagged uncertified and refused
by the chain and quasi-hereditary pipelines.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field

import numpy as np

from .algebra import Algebra, AlgebraError, _quotient_by_subspace
from .exactla import Mat, column_space, rank, span_union
from .modules import (
    Module,
    ModuleMorphism,
    element_to_endo,
    endomorphism_algebra,
    hom_basis,
    submodule,
)


class DecompositionError(ValueError):
    pass


@dataclass
class Decomposition:
    module: Module
    parts: list[Module]          # pairwise non-isomorphic indecomposables
    multiplicities: list[int]
    idempotents: list[Mat]       # splitting idempotents in End(module), one per copy
    part_of_copy: list[int]      # copy index -> index into parts
    certified: bool = True

    @property
    def copies(self) -> list[Module]:
        return [self.parts[i] for i in self.part_of_copy]

    def total_dim(self) -> int:
        return sum(self.parts[i].dim for i in self.part_of_copy)

    def summary(self) -> list[tuple[int, int]]:
        return [(p.dim, m) for p, m in zip(self.parts, self.multiplicities)]


def _canonical_key(part: Module):
    a = part.algebra
    try:
        tops = tuple(
            int(part.idempotent_image(i).cols) for i in range(len(a.primitive_idempotents()))
        )
    except AlgebraError:
        tops = ()
    return (part.dim, tops)


def decompose(x: Module) -> Decomposition:
    """Split a module into indecomposables with local endomorphism rings."""
    if x.is_zero():
        return Decomposition(x, [], [], [], [])
    if "decomposition" in x._cache:
        return x._cache["decomposition"]
    end, basis = endomorphism_algebra(x)
    certified = True
    try:
        idem_vecs = end.primitive_idempotents()
    except AlgebraError:
        if x.field.char:
            raise DecompositionError(
                "splitting failure over a prime field; retry budget exhausted"
            )
        certified = False
        idem_vecs = [end.unit]

    copies: list[Module] = []
    idems: list[Mat] = []
    for v in idem_vecs:
        mat = element_to_endo(x, basis, v)
        img = column_space(mat)
        part, _incl = submodule(x, img, name=f"{x.name}#{len(copies)}")
        if part.dim == 0:
            continue
        if certified:
            part._cache["indecomposable"] = True
        copies.append(part)
        idems.append(v)

    # group copies into isomorphism classes
    parts: list[Module] = []
    mults: list[int] = []
    part_of_copy: list[int] = []
    for c in copies:
        found = None
        for k, p in enumerate(parts):
            if p.dim == c.dim and _indec_isomorphic(p, c):
                found = k
                break
        if found is None:
            parts.append(c)
            mults.append(1)
            part_of_copy.append(len(parts) - 1)
        else:
            mults[found] += 1
            part_of_copy.append(found)

    order = sorted(range(len(parts)), key=lambda k: _canonical_key(parts[k]))
    rank_of = {old: new for new, old in enumerate(order)}
    dec = Decomposition(
        x,
        [parts[k] for k in order],
        [mults[k] for k in order],
        idems,
        [rank_of[k] for k in part_of_copy],
        certified=certified,
    )
    if sum(p.dim * m for p, m in zip(dec.parts, dec.multiplicities)) != x.dim:
        raise DecompositionError("decomposition does not fill the module")
    for p in dec.parts:
        p._cache["indecomposable"] = True
    x._cache["decomposition"] = dec
    return dec


def is_indecomposable(x: Module) -> bool:
    if x.is_zero():
        return False
    if x._cache.get("indecomposable"):
        return True
    dec = decompose(x)
    flag = len(dec.parts) == 1 and dec.multiplicities[0] == 1
    if flag:
        x._cache["indecomposable"] = True
    return flag


def rad_end_basis(x: Module) -> tuple[list[ModuleMorphism], Mat]:
    """(hom basis of End(x), radical basis in End coordinates)."""
    end, basis = endomorphism_algebra(x)
    return basis, end.radical_basis()


def is_summand(x: Module, y: Module) -> bool:
    """Does the indecomposable x split off y?

    Criterion: the composition pairing Hom(x,y) x Hom(y,x) -> End(x)
    is not contained in rad End(x).
    """
    if not is_indecomposable(x):
        raise DecompositionError("is_summand requires an indecomposable first argument")
    if y.is_zero() or y.dim < x.dim:
        return False
    fwd = hom_basis(x, y)
    bwd = hom_basis(y, x)
    if not fwd or not bwd:
        return False
    end, basis = endomorphism_algebra(x)
    rad = end.radical_basis()
    vecs = Mat(x.field, np.stack([b.mat.a.reshape(-1) for b in basis], axis=1))
    from .exactla import hstack, in_span, solve

    prods = []
    for f in fwd:
        for g in bwd:
            prods.append((g.mat @ f.mat).a.reshape(-1))
    pm = Mat(x.field, np.stack(prods, axis=1))
    coords = solve(vecs, pm)
    assert coords is not None
    if rad.cols == 0:
        return not coords.is_zero()
    return not in_span(rad, coords)


def _indec_isomorphic(x: Module, y: Module) -> bool:
    return x.dim == y.dim and is_summand(x, y)


def is_isomorphic(x: Module, y: Module) -> bool:
    if x.dim != y.dim:
        return False
    if x.dim == 0:
        return True
    if x._cache.get("indecomposable") and y._cache.get("indecomposable"):
        return _indec_isomorphic(x, y)
    dx = decompose(x)
    dy = decompose(y)
    if len(dx.parts) != len(dy.parts):
        return False
    used = [False] * len(dy.parts)
    for p, m in zip(dx.parts, dx.multiplicities):
        hit = False
        for k, (q, mq) in enumerate(zip(dy.parts, dy.multiplicities)):
            if used[k] or mq != m or q.dim != p.dim:
                continue
            if _indec_isomorphic(p, q):
                used[k] = True
                hit = True
                break
        if not hit:
            return False
    return True


def multiplicity_in(x: Module, y: Module) -> int:
    """Multiplicity of the indecomposable x in the decomposition of y."""
    dec = decompose(y)
    for p, m in zip(dec.parts, dec.multiplicities):
        if p.dim == x.dim and _indec_isomorphic(x, p):
            return m
    return 0
