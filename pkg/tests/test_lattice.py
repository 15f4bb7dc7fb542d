import random
from fractions import Fraction as Fr
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artifact.fusion import verify_all
from artifact.lattice import (
    LatticeError,
    build_pointed_mtc,
    check_gram,
    discriminant_group,
    epsilon,
    pairing,
    parse_gram,
    smith_normal_form,
)
from artifact.scalar import exp_i_pi, root_of_unity
from conftest import built
from lattices import A2, E8, FIXTURES, SMALL


def brute_discriminant(gram):
    """Dual lattice mod lattice by enumeration; returns sorted list of q values mod 2.

    Independent of the Smith form: classes of G^{-1} v for v in a box, with
    two dual vectors equal when they differ by an integer vector.
    """
    from sympy import Matrix

    G = Matrix(gram)
    Ginv = G.inv()
    det = abs(int(G.det()))
    n = len(gram)
    classes = {}
    for v in product(range(det), repeat=n):
        x = Ginv * Matrix(v)
        key = tuple(Fr(int(c.p), int(c.q)) % 1 for c in x)
        if key not in classes:
            vec = [Fr(int(c.p), int(c.q)) for c in x]
            classes[key] = pairing(gram, vec, vec) % 2
        if len(classes) == det:
            break
    return sorted(classes.values())


def test_parse_gram():
    assert parse_gram("2 -1; -1 2") == A2
    with pytest.raises(LatticeError):
        parse_gram("2 x")
    with pytest.raises(LatticeError):
        parse_gram(" ; ")


@pytest.mark.parametrize("gram", [[[1]], [[2, 1], [1, 3]], [[2, 1], [0, 2]], [[2, 2], [2, 2]], [[2, 0]]])
def test_bad_gram_rejected(gram):
    with pytest.raises(LatticeError):
        check_gram(gram)


def test_indefinite_degenerate_rejected():
    with pytest.raises(LatticeError):
        check_gram([[2, 2], [2, 2]])


def test_smith_examples():
    assert smith_normal_form([[1, 0], [0, 1]])[1] == [[1, 0], [0, 1]]
    assert smith_normal_form([[2]])[1] == [[2]]
    assert smith_normal_form(A2)[1] == [[1, 0], [0, 3]]


def test_discriminant_examples():
    A = discriminant_group([[2]])
    assert A.invariant_factors == (2,)
    assert A.section((1,)) == (Fr(1, 2),)
    assert A.q((1,)) == Fr(1, 2)
    A = discriminant_group(A2)
    assert A.order == 3 and A.q(A.elements[1]) == Fr(2, 3)
    assert discriminant_group(E8).order == 1


@pytest.mark.parametrize("name", sorted(SMALL))
def test_discriminant_form_oracle(name):
    gram = FIXTURES[name]
    A = discriminant_group(gram)
    assert sorted(A.q(x) for x in A.elements) == brute_discriminant(gram)


@pytest.mark.parametrize("name", sorted(SMALL))
def test_section_is_a_section(name):
    A = discriminant_group(FIXTURES[name])
    assert all(c == 0 for c in A.section(A.zero))
    for x in A.elements:
        assert A.classify(A.section(x)) == tuple(x)
    for x, y in product(A.elements, repeat=2):
        d = [a + b - c for a, b, c in zip(A.section(x), A.section(y), A.section(A.add(x, y)))]
        assert all(c.denominator == 1 for c in d)


vec = st.lists(st.integers(-3, 3), min_size=2, max_size=2)


@settings(max_examples=200)
@given(vec, vec, vec)
def test_epsilon_conditions(a, b, c):
    g = A2
    bc = [x + y for x, y in zip(b, c)]
    ab = [x + y for x, y in zip(a, b)]
    assert epsilon(g, a, [0, 0]) == 1
    assert epsilon(g, a, bc) * epsilon(g, b, c) == epsilon(g, a, b) * epsilon(g, ab, c)
    assert epsilon(g, a, b) == exp_i_pi(pairing(g, a, b)) * epsilon(g, b, a)


def test_epsilon_exhaustive_box():
    for g in ([[2]], A2, [[4, 2], [2, 4]], FIXTURES["A3"]):
        n = len(g)
        box = list(product(range(-3, 4), repeat=n))
        rng = random.Random(1)
        for _ in range(400):
            a, b, c = rng.choice(box), rng.choice(box), rng.choice(box)
            bc = [x + y for x, y in zip(b, c)]
            ab = [x + y for x, y in zip(a, b)]
            assert epsilon(g, a, bc) * epsilon(g, b, c) == epsilon(g, a, b) * epsilon(g, ab, c)
            assert epsilon(g, a, b) == exp_i_pi(pairing(g, a, b)) * epsilon(g, b, a)
    assert epsilon([[2]], [1], [1]) == 1


def test_semion():
    d = built("A1")
    z4 = root_of_unity(4, 1)
    assert d.labels == ("0", "1")
    assert d.twist == {"0": 1, "1": z4}
    assert d.R[("1", "1", "0")] == z4


def test_e8_trivial():
    d = built("E8")
    assert d.labels == ("0",)


def test_z4_values():
    d = built("[[4]]")
    for j in range(4):
        assert d.twist[str(j)] == exp_i_pi(Fr(j * j, 4))
    mono = d.R[("1", "1", "2")] * d.R[("1", "1", "2")]
    assert mono == root_of_unity(4, 1)


def test_det27_regression():
    # the section defects pair oddly here; the sign correction keeps the pentagon
    d = build_pointed_mtc([[6, 3], [3, 6]])
    assert len(d.labels) == 27
    assert verify_all(d).passed


@pytest.mark.parametrize("gram", [[[2]], [[4]], A2, [[4, 2], [2, 4]], [[2, 0], [0, 4]], [[6]]])
def test_section_independence(gram):
    A = discriminant_group(gram)
    rng = random.Random(len(A.elements))
    n = len(gram)
    shift = {x: tuple(rng.randint(-2, 2) for _ in range(n)) for x in A.elements if x != A.zero}
    d0 = build_pointed_mtc(gram)
    d1 = build_pointed_mtc(gram, shift=shift)
    assert d1.twist == d0.twist
    for a, b in product(d0.labels, repeat=2):
        c = d0.products(a, b)[0]
        assert d0.R[(a, b, c)] * d0.R[(b, a, c)] == d1.R[(a, b, c)] * d1.R[(b, a, c)]


def test_shift_must_be_lattice_vector():
    A = discriminant_group([[2]])
    with pytest.raises(LatticeError):
        A.with_shift({(1,): (Fr(1, 2),)})
