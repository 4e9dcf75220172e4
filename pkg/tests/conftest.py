import numpy as np
import pytest

from rejectia.algebra import Algebra, QuiverSpec, from_quiver, from_structure_constants
from rejectia.exactla import FieldSpec

GF101 = FieldSpec(101)


def truncated_poly_algebra(n: int, field: FieldSpec = GF101) -> Algebra:
    """k[x]/(x^n) via the one-loop quiver."""
    q = QuiverSpec(("1",), (("x", "1", "1"),), (("x",) * n,))
    return from_quiver(q, field)


def linear_quiver_algebra(n: int, field: FieldSpec = GF101, nilpotency: int = 0) -> Algebra:
    """Path algebra of 1 -> 2 -> ... -> n, optionally with paths of the
    given length set to zero."""
    vertices = tuple(str(i) for i in range(1, n + 1))
    arrows = tuple((f"a{i}", str(i), str(i + 1)) for i in range(1, n))
    rels = []
    if nilpotency >= 2:
        for i in range(1, n - nilpotency + 1):
            rels.append(tuple(f"a{j}" for j in range(i, i + nilpotency)))
    q = QuiverSpec(vertices, arrows, tuple(rels))
    return from_quiver(q, field)


def cyclic_nakayama_algebra(n_vertices: int, nilpotency: int, field: FieldSpec = GF101) -> Algebra:
    """Cyclic quiver on n vertices with all paths of the given length zero."""
    vertices = tuple(str(i) for i in range(1, n_vertices + 1))
    arrows = tuple(
        (f"a{i}", str(i), str(i % n_vertices + 1)) for i in range(1, n_vertices + 1)
    )
    rels = []
    for start in range(1, n_vertices + 1):
        word = tuple(f"a{(start + k - 1) % n_vertices + 1}" for k in range(nilpotency))
        rels.append(word)
    q = QuiverSpec(vertices, arrows, tuple(rels))
    return from_quiver(q, field)


def paper_algebra_one(field: FieldSpec = GF101) -> Algebra:
    """Three-vertex algebra with arrows a:1->2, b:2->3, c:3->1, d:3->1 and
    relations bc = ca = dab = 0; dim 13, right-cancellation order 1,2,3."""
    q = QuiverSpec(
        ("1", "2", "3"),
        (("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1"), ("d", "3", "1")),
        (("b", "c"), ("c", "a"), ("d", "a", "b")),
    )
    return from_quiver(q, field)


def paper_algebra_two(field: FieldSpec = GF101) -> Algebra:
    """Three-vertex algebra with arrows a:1->2, b:2->3, c:3->1, d:1->3 and
    relations dc = bca = bcd = ca = 0; dim 11, quasi-hereditary."""
    q = QuiverSpec(
        ("1", "2", "3"),
        (("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1"), ("d", "1", "3")),
        (("d", "c"), ("b", "c", "a"), ("b", "c", "d"), ("c", "a")),
    )
    return from_quiver(q, field)


def a2_algebra(field: FieldSpec = GF101) -> Algebra:
    return linear_quiver_algebra(2, field)


def semisimple_algebra(k: int, field: FieldSpec = GF101) -> Algebra:
    """k copies of the base field."""
    sc = np.zeros((k, k, k), dtype=np.int64)
    for i in range(k):
        sc[i, i, i] = 1
    return from_structure_constants(sc, np.ones(k, dtype=np.int64), field)


def d4_algebra(field: FieldSpec = GF101) -> Algebra:
    """D4 subspace orientation: three sources pointing into the center."""
    q = QuiverSpec(
        ("1", "2", "3", "0"),
        (("a", "1", "0"), ("b", "2", "0"), ("c", "3", "0")),
        (),
    )
    return from_quiver(q, field)


@pytest.fixture(scope="session")
def gf101():
    return GF101


@pytest.fixture(scope="session")
def kx2():
    return truncated_poly_algebra(2)


@pytest.fixture(scope="session")
def kx3():
    return truncated_poly_algebra(3)


@pytest.fixture(scope="session")
def a2():
    return a2_algebra()


@pytest.fixture(scope="session")
def a3():
    return linear_quiver_algebra(3)


@pytest.fixture(scope="session")
def gamma1():
    return paper_algebra_one()


@pytest.fixture(scope="session")
def gamma2():
    return paper_algebra_two()
