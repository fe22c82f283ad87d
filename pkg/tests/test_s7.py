import random

import pytest

from qgalois import s7
from qgalois.coeff import LaurentCoeff
from qgalois.s7 import DegreeCapExceeded, PElement, PMonomial
from qgalois.verify import sphere_relations

q = LaurentCoeff.q
one = PElement.one()


def w(text):
    return s7.nf(s7.parse_word(text))


def zz(i):
    """z_i z_i* as a normal monomial."""
    e = [0] * 8
    e[i - 1] = e[i + 3] = 1
    return s7.monomial(*e)


def test_nf_examples():
    assert w("z2 z1") == s7.monomial(1, 1).scale(q(-1))
    assert w("z1* z1") == zz(1)
    assert w("z4 z4*") == one - zz(1) - zz(2) - zz(3)
    assert w("z4* z4") == one - (zz(1) + zz(2) + zz(3)).scale(q(2))


def test_mul_examples():
    assert s7.z(1) * s7.z(2) == s7.monomial(1, 1)
    assert s7.zs(3) * s7.z(3) == zz(3) + (zz(1) + zz(2)).scale(1 - q(2))
    x = w("z3 z2*") + w("z1").scale(q(4))
    assert x * one == x
    assert one * x == x


def test_star_examples():
    assert s7.star(w("z1 z2")) == s7.monomial(0, 0, 0, 0, 1, 1).scale(q(1))
    assert s7.star(one) == one
    assert s7.star(zz(3)) == zz(3)


def test_degree_examples():
    assert s7.degree(w("z1 z2 z3*")) == 3
    assert s7.degree(one) == 0
    assert s7.degree(w("z4 z4*")) == 2
    with pytest.raises(ValueError):
        s7.degree(PElement.zero())


def test_basis_has_no_z4_z4star():
    for m in s7.basis_upto(3):
        assert m.a4 * m.b4 == 0
    assert len(s7.basis_upto(2)) == 44


def test_render():
    assert w("z2 z1").render() == "q^-1*z1 z2"
    assert s7.render_monomial(PMonomial(2, 0, 1, 0, 0, 0, 0, 3)) == "z1^2 z3 z4*^3"


def test_confluence_random_words():
    rng = random.Random(11)
    for _ in range(300):
        word = [rng.randrange(8) for _ in range(rng.randint(0, 8))]
        prod = s7.nf(word)
        assert s7.nf_rewrite(word, "leftmost") == prod
        assert s7.nf_rewrite(word, "rightmost") == prod


def test_relations_normalise_to_zero():
    for name, terms in sphere_relations():
        total = PElement.zero()
        for e, c, word in terms:
            total = total + s7.nf(word).scale(q(e) * c)
        assert total.is_zero(), name


def test_star_is_involutive_anti_homomorphism():
    rng = random.Random(5)
    basis = [s7.monomial(*m) for m in s7.basis_upto(2)]
    for _ in range(100):
        x = rng.choice(basis).scale(q(rng.randint(-2, 2))) + rng.choice(basis)
        y = rng.choice(basis) - rng.choice(basis).scale(q(1))
        assert s7.star(s7.star(x)) == x
        assert s7.star(x * y) == s7.star(y) * s7.star(x)


def test_associativity_on_random_triples():
    rng = random.Random(2)
    basis = [s7.monomial(*m) for m in s7.basis_upto(2)]
    for _ in range(60):
        x, y, z = (rng.choice(basis) for _ in range(3))
        assert (x * y) * z == x * (y * z)


def test_degree_cap():
    try:
        s7.set_degree_cap(6)
        with pytest.raises(DegreeCapExceeded):
            s7.nf(["z1"] * 7)
        with pytest.raises(DegreeCapExceeded):
            s7.z(1) ** 7
    finally:
        s7.set_degree_cap(s7.DEFAULT_DEGREE_CAP)
    assert s7.degree(s7.z(1) ** 7) == 7


def test_bad_letter():
    with pytest.raises(ValueError):
        s7.nf(["z5"])
