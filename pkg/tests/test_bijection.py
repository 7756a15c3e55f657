import math

import pytest

from qcomp.bijection import (
    E1Element, E2Element, E3Element, InvalidElement, Provenance, enumerate_E1, enumerate_E2,
    enumerate_E3, image_predicate, phi, phi1, phi2, phi_inverse, side_weight, trace_rows,
    verify_bijection,
)
from qcomp.compositions import Composition, compositions_of, tail
from qcomp.permutitions import enumerate_shape, parse_permutition as P
from qcomp.qpoly import QPoly

I323 = Composition(3, 2, 3)
I211 = Composition(2, 1, 1)


def test_phi1_examples():
    assert phi1(E1Element(P("361|74|258"), 3), I323) == E3Element(P("42|135"), (1, 6, 3))
    assert phi1(E1Element(P("163|74|258"), 1), I323) == E1Element(P("361|74|258"), 1)
    assert phi1(E1Element(P("12|3|4"), 1), I211) == E1Element(P("21|3|4"), 1)


def test_phi2_examples():
    assert phi2(E2Element(P("26371|458")), I323) == E3Element(P("41|235"), (2, 6, 3))
    assert phi2(E2Element(P("36174|258")), I323) == E1Element(P("163|74|258"), 1)
    assert phi2(E2Element(P("123|4")), I211) == E1Element(P("12|3|4"), 2)


def test_image_predicate_examples():
    assert image_predicate(E1Element(P("163|74|258"), 1), I323) is Provenance.PHI2
    assert image_predicate(E1Element(P("361|74|258"), 1), I323) is Provenance.PHI1
    assert image_predicate(E3Element(P("41|235"), (2, 6, 3)), I323) is Provenance.PHI2
    assert image_predicate(E3Element(P("42|135"), (1, 6, 3)), I323) is Provenance.PHI1


def test_phi_inverse_examples():
    assert phi_inverse(E3Element(P("42|135"), (1, 6, 3)), I323) == E1Element(P("361|74|258"), 3)
    assert phi_inverse(E3Element(P("41|235"), (2, 6, 3)), I323) == E2Element(P("26371|458"))
    assert phi_inverse(E1Element(P("21|3|4"), 1), I211) == E1Element(P("12|3|4"), 1)


def test_side_weight_examples():
    assert side_weight(E1Element(P("21|3|4"), 1), "LHS", I211) == QPoly.monomial(2)
    assert side_weight(E3Element(P("1|2"), (2, 1)), "RHS", I211) == QPoly.monomial(2)
    assert side_weight(E1Element(P("12|3|4"), 2), "RHS", I211) == QPoly([1])
    assert side_weight(E2Element(P("231|4")), "LHS", I211) == QPoly.monomial(2)
    with pytest.raises(ValueError):
        side_weight(E3Element(P("1|2"), (2, 1)), "LHS", I211)


def test_invalid_elements():
    with pytest.raises(InvalidElement):
        phi1(E1Element(P("12|3|4"), 3), I211)
    with pytest.raises(InvalidElement):
        phi1(E1Element(P("1|2|34"), 1), I211)
    with pytest.raises(InvalidElement):
        phi2(E2Element(P("12|34")), I211)
    with pytest.raises(InvalidElement):
        phi1(E1Element(P("1234"), 1), Composition(4))


def test_verify_211_totals():
    rep = verify_bijection(I211)
    assert rep.ok, rep.lines()
    assert rep.info["lhs"] == rep.info["rhs"] == "12q^2+6q+2"


def test_verify_11():
    rep = verify_bijection(Composition(1, 1))
    assert rep.ok


@pytest.mark.parametrize("n", range(2, 7))
def test_verify_all(n):
    for I in compositions_of(n):
        if len(I) >= 2:
            rep = verify_bijection(I)
            assert rep.ok, (I, rep.first_failure())


@pytest.mark.parametrize("n", range(2, 7))
def test_round_trips_and_counts(n):
    for I in compositions_of(n):
        if len(I) < 2:
            continue
        E1, E2, E3 = enumerate_E1(I), enumerate_E2(I), enumerate_E3(I)
        falling = math.factorial(n) // math.factorial(n - I[0])
        assert len(E2) == len(E3) == falling * len(enumerate_shape(tail(I)))
        for e in (*E1, *E2):
            img = phi(e, I)
            assert phi_inverse(img, I) == e
            if isinstance(e, E1Element) and isinstance(img, E1Element):
                assert img.tau.shape() == I
        for img in (*E1, *E3):
            assert phi(phi_inverse(img, I), I) == img


def test_verifier_catches_broken_map(monkeypatch):
    import qcomp.bijection as b

    real = b.phi1

    def broken(e, I):
        out = real(e, I)
        if isinstance(out, E1Element):
            return E1Element(out.tau, min(out.tau.blocks[0]))
        return out

    monkeypatch.setattr(b, "phi1", broken)
    rep = b.verify_bijection(Composition(3, 1))
    assert not rep.ok


def test_trace_rows_211():
    rows = trace_rows(I211)
    assert len(rows) == len(enumerate_E1(I211)) + len(enumerate_E2(I211)) == 20
    assert rows[0] == "(12|3|4, 1) -> (21|3|4, 1)  (1, q)"
