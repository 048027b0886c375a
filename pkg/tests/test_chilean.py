import json

import pytest

from halphen.field import GF, QQ_EPS, to_text
from halphen.plane import ProjPoint, gens
from halphen.chilean import (INFINITY, VerificationError,
                             branch_quintic, build_chilean,
                             check_good_parameter, conic_is_line_pair,
                             cross_ratio, cross_ratio_probe,
                             degenerate_configuration, degenerate_pencil,
                             export_configuration, fiber_product_lambdas,
                             hesse_parameter, pencil_membership,
                             singular_census, special_members,
                             verify_symmetries, base_points)


def test_conic_one_incidence(symbolic_data):
    p1 = symbolic_data.points[0]
    p7 = symbolic_data.points[6]
    conic1 = symbolic_data.conics[0]
    assert conic1.evaluate(p1).is_zero()
    value = conic1.evaluate(p7)
    assert not value.is_zero()
    a = symbolic_data.a
    assert value == 1 - a**3


def test_incidence_row_and_column_sums(symbolic_data):
    rows = [sum(r) for r in symbolic_data.incidence]
    cols = [sum(symbolic_data.incidence[i][j] for i in range(9)) for j in range(12)]
    assert rows == [8] * 9
    assert cols == [6] * 12


def test_sextic_generator_expansion(symbolic_data, pencil):
    # the product of the first three conics in fully expanded form
    A = symbolic_data.field
    a = symbolic_data.a
    X, Y, Z = gens(A)
    expected = (a**2 * (X**3 * Y**3 + X**3 * Z**3 + Y**3 * Z**3)
                - a * (X**4 * Y * Z + X * Y**4 * Z + X * Y * Z**4)
                + (1 - a**3) * (X * Y * Z)**2)
    assert pencil.F6 == expected


def test_pencil_membership_cases(symbolic_data, pencil):
    assert pencil_membership(pencil, pencil.G3_squared) == INFINITY
    prod = symbolic_data.conics[0] * symbolic_data.conics[1] * symbolic_data.conics[2]
    lam = pencil_membership(pencil, prod)
    assert lam == symbolic_data.field.zero()
    X, Y, Z = gens(symbolic_data.field)
    assert pencil_membership(pencil, X**6) is None


def test_fiber_lambdas_distinct_and_finite(symbolic_data, pencil):
    lams = fiber_product_lambdas(symbolic_data, pencil)
    assert len(lams) == 4
    assert lams[0].is_zero()
    assert len({to_text(l) for l in lams}) == 4
    # members at the four values are pairwise non-proportional
    members = [pencil.member(l) for l in lams]
    for i in range(4):
        for j in range(i + 1, 4):
            assert not members[i].proportional_to(members[j])


def test_base_points_on_hesse_member(symbolic_data):
    A = symbolic_data.field
    a = symbolic_data.a
    t = hesse_parameter(A, a)
    assert t == -(a**3 + 2) / a
    X, Y, Z = gens(A)
    member = X**3 + Y**3 + Z**3 + t * X * Y * Z
    for P in symbolic_data.points:
        assert member.evaluate(P).is_zero()


def test_nodes(symbolic_data, nodes):
    assert len(nodes) == 12
    points = [n for _, n in nodes]
    assert len(set(points)) == 12
    # fiber 1 nodes are the coordinate vertices
    F = symbolic_data.field
    vertices = {ProjPoint(F, (F.one(), F.zero(), F.zero())),
                ProjPoint(F, (F.zero(), F.one(), F.zero())),
                ProjPoint(F, (F.zero(), F.zero(), F.one()))}
    assert set(points[:3]) == vertices
    for (i, j), P in nodes:
        on = [k for k in range(12)
              if symbolic_data.conics[k].evaluate(P).is_zero()]
        assert on == sorted((i, j))
        assert P not in symbolic_data.points


def test_dual_hesse_configuration(symbolic_data, nodes, dual_lines):
    lines, incidence = dual_lines
    assert len(lines) == 9
    assert all(sum(r) == 4 for r in incidence)
    for j in range(12):
        assert sum(incidence[i][j] for i in range(9)) == 3
    for i, L in enumerate(lines):
        on_base = [k for k in range(9)
                   if L.evaluate(symbolic_data.points[k]).is_zero()]
        assert on_base == [i]


def test_special_members(symbolic_data, pencil):
    sp = special_members(symbolic_data, pencil)
    assert sp["caylean"].proportional_to(pencil.G3)
    lam = sp["lambda"]
    member = pencil.member(lam)
    assert sp["cuspidal_sextic"].proportional_to(member)
    X, Y, Z = gens(symbolic_data.field)
    a = symbolic_data.a
    assert sp["dual_cubic"] == X**3 + Y**3 + Z**3 - 3 * a * X * Y * Z


def test_cuspidal_sextic_census(symbolic_data, pencil):
    sp = special_members(symbolic_data, pencil)
    F = GF(13)
    a = F.from_int(2)
    sextic = sp["cuspidal_sextic"].specialize(F, eps_image=F.eps(), a_image=a)
    census = singular_census(sextic)
    assert len(census) == 9
    assert all(kind == "cusp" for _, _, kind in census)
    specialized = build_chilean(F, a)
    assert {P for P, _, _ in census} == set(specialized.points)


def test_singular_census_basics():
    F = GF(13)
    X, Y, Z = gens(F)
    assert singular_census(X * Y - Z**2) == []
    cuspidal = Z * Y**2 - X**3
    census = singular_census(cuspidal)
    assert len(census) == 1
    P, mult, kind = census[0]
    assert P == ProjPoint(F, (F.zero(), F.zero(), F.one()))
    assert mult == 2 and kind == "cusp"
    nodal = Z * Y**2 - X**2 * (X + Z)
    census = singular_census(nodal)
    assert len(census) == 1 and census[0][2] == "node"


def test_branch_quintic_census():
    F = GF(13)
    W = branch_quintic(F, F.from_int(2))
    census = singular_census(W)
    kinds = sorted(k for _, _, k in census)
    assert len(census) == 5
    assert kinds.count("cusp") == 1  # the tacnodal point has a repeated tangent
    assert kinds.count("node") == 4


def test_degenerate_pencil_and_configuration():
    rep = degenerate_pencil()
    assert len(rep["conics"]) == 3
    X, Y, Z = gens(QQ_EPS)
    one = QQ_EPS.one()
    assert (X**2 - Y * Z).evaluate(ProjPoint(QQ_EPS, (one, one, one))).is_zero()
    vertex = ProjPoint(QQ_EPS, (QQ_EPS.zero(), QQ_EPS.zero(), one))
    assert rep["conics"][0].evaluate(vertex).is_zero()
    assert rep["conics"][2].evaluate(vertex).is_zero()

    cfg = degenerate_configuration()
    assert len(cfg["conics"]) == 9
    assert len(cfg["lines"]) == 3
    assert all(not conic_is_line_pair(C) for C in cfg["conics"])


def test_bad_parameters_rejected():
    for a_int, field in ((0, QQ_EPS), (1, QQ_EPS), (-2, QQ_EPS)):
        with pytest.raises(VerificationError):
            check_good_parameter(field, field.from_int(a_int))
    with pytest.raises(VerificationError):
        build_chilean(QQ_EPS, QQ_EPS.one())
    e = QQ_EPS.eps()
    with pytest.raises(VerificationError):
        check_good_parameter(QQ_EPS, e)  # e^3 = 1


def test_base_points_collide_at_unit_parameter():
    pts = base_points(QQ_EPS, QQ_EPS.one())
    assert len(set(pts)) == 3


def test_symmetries(symbolic_data):
    reports = verify_symmetries(symbolic_data)
    assert len(reports) == 6
    perms = {tuple(r["points"]) for r in reports}
    assert tuple(range(9)) in perms
    assert len(perms) == 6


def test_cross_ratio_probe(symbolic_data, pencil):
    rep = cross_ratio_probe(symbolic_data, pencil)
    assert len(rep["lambdas"]) == 4
    hits = [r for r in rep["subsets"] if r["equianharmonic"]]
    assert len(hits) == 1
    assert hits[0]["subset"] == ["lambda0", "lambda1", "lambda2", "lambda3"]
    assert hits[0]["ratio"] in ("-1*e", "-1 - 1*e")


def test_cross_ratio_infinity_handling():
    F = QQ_EPS
    z = [F.zero(), F.one(), F.from_int(2), INFINITY]
    R = cross_ratio(z, F)
    # (0-2)(1-oo)/((1-2)(0-oo)) -> (0-2)/(1-2) = 2
    assert R == F.from_int(2)


def test_export_round_trips_through_json(symbolic_data, nodes, dual_lines):
    lines, _ = dual_lines
    doc = export_configuration(symbolic_data, nodes, lines)
    text = json.dumps(doc)
    back = json.loads(text)
    assert len(back["points"]) == 9
    assert len(back["conics"]) == 12
    assert len(back["nodes"]) == 12
    assert len(back["dual_hesse_lines"]) == 9
    assert back["incidence"] == symbolic_data.incidence


def test_specialized_build_matches_symbolic(symbolic_data):
    F = GF(13)
    a = F.from_int(2)
    spec = build_chilean(F, a)
    assert spec.incidence == symbolic_data.incidence
    for sym_c, spec_c in zip(symbolic_data.conics, spec.conics):
        image = sym_c.specialize(F, eps_image=F.eps(), a_image=a)
        assert image == spec_c
