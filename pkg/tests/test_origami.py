import xml.etree.ElementTree as ET

import pytest

from toruscovers.covers import CoverClass, RamificationProfile, enumerate_classes
from toruscovers.monodromy import decompose
from toruscovers.origami import (
    SquareTiledSurface,
    act_R,
    act_U,
    cylinders,
    render,
    render_ascii,
    render_svg,
    singular_squares,
    singularities,
    ur_orbits,
    weierstrass_parity,
)
from toruscovers.perms import commutator, cycle_string, inverse, parse_cycles


def _surface(v, h, d=None):
    return SquareTiledSurface(v=parse_cycles(v, d), h=parse_cycles(h, d))


# the five worked surfaces used throughout the tests
E1 = lambda: _surface("(1 5)", "(1 2 3 4)", 5)
E2 = lambda: _surface("(1 2 4 3 5)", "(1 2 3 4 5)")
E3 = lambda: _surface("(1 2 6 4 5 3 7)", "(1 2 3 4 5 6 7)")
E4 = lambda: _surface("(1 3 5 7 6 2 4)", "(1 2)(3 4)(5 6 7)", 7)
E5 = lambda: _surface(
    "(1 6 8 10)(2 4 11 3 5 7 9)", "(1 2 3)(4 5 6)(7 8)(9 10)", 11
)


def test_surface_requires_connectedness():
    with pytest.raises(ValueError):
        SquareTiledSurface(v=parse_cycles("(1 2)", 4), h=parse_cycles("(3 4)", 4))


def test_worked_example_commutators():
    assert cycle_string(commutator(E1().v, E1().h)) == "(1 5 2)"
    assert cycle_string(commutator(E2().v, E2().h)) == "(1 3 4)"
    assert singularities(E3()) == [2, 2]
    assert singularities(E4()) == [2, 2]
    assert cycle_string(commutator(E4().v, E4().h)) == "(1 6)(2 5)"


def test_singularities_and_support():
    assert singularities(E1()) == [3]
    assert singular_squares(E1()) == frozenset({1, 2, 5})
    assert singularities(E5()) == [2, 2]


def test_cylinder_decompositions():
    assert cylinders(E1()) == [(4, 1), (1, 1)]
    assert cylinders(E3()) == [(7, 1)]
    assert cylinders(E4()) == [(2, 2), (3, 1)]
    assert cylinders(E5()) == [(3, 2), (2, 2), (1, 1)]


def test_cylinder_area_equals_degree():
    for d, sigma in [(5, "3"), (5, "5"), (6, "2,2")]:
        prof = RamificationProfile.of(d, sigma)
        for c in enumerate_classes(d, prof):
            s = SquareTiledSurface.from_pair(c)
            assert sum(w * h for w, h in cylinders(s)) == d


def test_vertical_loop_cylinder():
    # unramified double cover: one cylinder of circumference 1, height 2
    s = _surface("(1 2)", "()", 2)
    assert cylinders(s) == [(1, 2)]


def test_shear_action():
    assert cycle_string(act_U(E1()).v) == "(1 2 3 4 5)"
    assert act_U(E1()).h == E1().h


def test_quarter_turn_relations():
    for s in (E1(), E2(), E4()):
        r2 = act_R(act_R(s))
        assert (r2.v, r2.h) == (inverse(s.v), inverse(s.h))
        r4 = act_R(act_R(r2))
        assert (r4.v, r4.h) == (s.v, s.h)


def test_round_trip_through_cover_class():
    prof = RamificationProfile.of(5, "5")
    for c in enumerate_classes(5, prof):
        s = SquareTiledSurface.from_pair(c)
        back = s.to_pair()
        assert (back.alpha, back.beta) == (c.alpha, c.beta)


def test_ur_orbits_match_monodromy_components():
    for d, sigma in [(4, "3"), (5, "3"), (5, "5"), (6, "2,2")]:
        prof = RamificationProfile.of(d, sigma)
        classes = enumerate_classes(d, prof)
        dec = decompose(d, prof, classes)
        got = {frozenset(o) for o in ur_orbits(classes)}
        want = {frozenset(c) for c in dec.components}
        assert got == want


def test_weierstrass_parity_values():
    assert weierstrass_parity(E1().to_pair()) == 1
    assert weierstrass_parity(E2().to_pair()) == 3


def test_weierstrass_parity_needs_three_cycle_class():
    with pytest.raises(ValueError):
        weierstrass_parity(E4().to_pair())


def test_parity_is_constant_on_components():
    # prime degree: the group is S_d or A_d, so the parity is defined
    for d in (5, 7):
        prof = RamificationProfile.of(d, "3")
        dec = decompose(d, prof)
        for comp in dec.components:
            values = {weierstrass_parity(dec.classes[i]) for i in comp}
            assert len(values) == 1


def test_ascii_render():
    art = render_ascii(E1())
    assert "| 1*|" in art
    assert art.count("+---") >= 5
    # marking an explicit set instead of the singular squares
    art = render_ascii(E1(), mark={2})
    assert "| 2*|" in art and "| 1 |" in art


def test_svg_render_is_well_formed():
    doc = render_svg(E4())
    root = ET.fromstring(doc)
    assert root.tag.endswith("svg")
    texts = [t.text for t in root.iter() if t.tag.endswith("text")]
    assert {"1", "2", "3", "4", "5", "6", "7"} <= set(texts)


def test_render_dispatch():
    assert render(E1(), format="ascii") == render_ascii(E1())
    assert render(E1(), format="svg") == render_svg(E1())
    with pytest.raises(ValueError):
        render(E1(), format="png")
