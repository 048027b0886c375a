"""The one-parameter family of 12 conics and 9 points.

Everything here is verified at construction time by exact identities:
the nine base points, the twelve conics with their (12_6, 9_8) incidence,
the sextic pencil F6 + lambda*G3^2, the twelve pairwise intersection
points of fiber conics, the nine lines through them forming a (9_4, 12_3)
configuration, the distinguished pencil members, and the degenerations.

The default coefficient field is Q(e)(a), which certifies every claim for
the whole family at once; finite-field specializations are used where a
claim is about singularity types (see ``singular_census``).
"""

from .field import (QQ_EPS, QQ_EPS_A, FieldError, pdeg, pgcd, pnormalize,
                    to_text)
from .plane import (GeometryError, ProjPoint, are_collinear,
                    bf_divide_linear, gens, line_through, plane_points,
                    poly3_to_binary_form, poly_in_var, resultant)

FIBERS = ((0, 1, 2), (3, 4, 5), (6, 7, 8), (9, 10, 11))


class VerificationError(Exception):
    """An exact identity the construction promises failed to hold."""


def _expected_supports():
    from .piclattice import CONIC_CLASS_COLUMNS
    supports = []
    for col in CONIC_CLASS_COLUMNS:
        supports.append(frozenset(i for i in range(1, 10) if col[i] == -1))
    return supports


def base_points(field, a):
    """The nine base points p_1..p_9 over `field` with parameter `a`."""
    e = field.eps()
    one = field.one()
    a = field.coerce(a)
    pts = [
        (a, one, one), (e * a, e * e, one), (e * e * a, e, one),
        (one, a, one), (e, e * e * a, one), (e * e, e * a, one),
        (one, one, a), (e, e * e, a), (e * e, e, a),
    ]
    return [ProjPoint(field, c) for c in pts]


def conic_equations(field, a):
    """The twelve conics, indexed to match the incidence-class columns."""
    e = field.eps()
    a = field.coerce(a)
    X, Y, Z = gens(field)
    e2 = e * e
    return [
        X * Y - a * Z**2,
        X * Z - a * Y**2,
        Y * Z - a * X**2,
        X**2 + (e * a + e) * X * Y + e2 * Y**2 + (e2 * a + e2) * X * Z
            + (a + 1) * Y * Z + e * Z**2,
        X**2 + (e2 * a + e2) * X * Y + e * Y**2 + (e * a + e) * X * Z
            + (a + 1) * Y * Z + e2 * Z**2,
        X**2 + (a + 1) * X * Y + Y**2 + (a + 1) * X * Z
            + (a + 1) * Y * Z + Z**2,
        X**2 + (e * a + 1) * X * Y + Y**2 + (e2 * a + e) * X * Z
            + (e2 * a + e) * Y * Z + e2 * Z**2,
        X**2 + (e2 * a + e) * X * Y + e2 * Y**2 + (e * a + 1) * X * Z
            + (e2 * a + e) * Y * Z + Z**2,
        X**2 + (a + e2) * X * Y + e * Y**2 + (a + e2) * X * Z
            + (e2 * a + e) * Y * Z + e * Z**2,
        X**2 + (e * a + e2) * X * Y + e * Y**2 + (e2 * a + 1) * X * Z
            + (e * a + e2) * Y * Z + Z**2,
        X**2 + (a + e) * X * Y + e2 * Y**2 + (a + e) * X * Z
            + (e * a + e2) * Y * Z + e2 * Z**2,
        X**2 + (e2 * a + 1) * X * Y + Y**2 + (e * a + e2) * X * Z
            + (e * a + e2) * Y * Z + e * Z**2,
    ]


def hesse_parameter(field, a):
    """t = -(a^3 + 2)/a, the Hesse parameter carrying the base points."""
    a = field.coerce(a)
    return -(a**3 + 2) / a


def check_good_parameter(field, a):
    """Reject the boundary of the family: a = 0, a^3 = 1, a^3 = -8.

    The last two are exactly the values with t^3 = -27 (the numerator of
    t^3 + 27 factors as -(a^3 - 1)^2 (a^3 + 8) / a^3).
    """
    a = field.coerce(a)
    if a.is_zero():
        raise VerificationError("a = 0 lies outside the family")
    if (a**3 - 1).is_zero():
        raise VerificationError("a^3 = 1 degenerates the base points")
    if (a**3 + 8).is_zero():
        raise VerificationError("a^3 = -8 gives a triangle member (t^3 = -27)")


class ChileanData:
    """Base points, conics, fiber grouping and the verified incidence."""

    def __init__(self, field, a, points, conics, incidence):
        self.field = field
        self.a = a
        self.points = points
        self.conics = conics
        self.incidence = incidence  # 9 x 12 matrix of 0/1
        self.fibers = FIBERS

    def conics_through(self, point_index):
        return [j for j in range(12) if self.incidence[point_index][j]]

    def fiber_of(self, conic_index):
        return conic_index // 3


def build_chilean(field=None, a=None):
    """Construct the configuration and verify its incidence exactly.

    With no arguments this is the symbolic family over Q(e)(a).  Pass a
    finite field (or Q(e)) and a good parameter value for a specialized
    instance; bad parameter values are rejected.
    """
    if field is None:
        field = QQ_EPS_A
        a = field.gen()
    if not field.has_eps():
        raise FieldError(f"{field} lacks a primitive cube root of unity")
    a = field.coerce(a)
    check_good_parameter(field, a)

    points = base_points(field, a)
    conics = conic_equations(field, a)

    if len(set(points)) != 9:
        raise VerificationError("base points are not distinct")

    expected = _expected_supports()
    incidence = [[0] * 12 for _ in range(9)]
    for j, C in enumerate(conics):
        support = set()
        for i, P in enumerate(points):
            if C.evaluate(P).is_zero():
                support.add(i + 1)
                incidence[i][j] = 1
        if support != set(expected[j]):
            raise VerificationError(
                f"conic {j + 1} meets points {sorted(support)}, "
                f"expected {sorted(expected[j])}")
    for i in range(9):
        if sum(incidence[i]) != 8:
            raise VerificationError(f"point {i + 1} lies on {sum(incidence[i])} conics, not 8")
    for j in range(12):
        if sum(incidence[i][j] for i in range(9)) != 6:
            raise VerificationError(f"conic {j + 1} passes through != 6 points")

    # every base point lies on the Hesse cubic with t = -(a^3+2)/a
    t = hesse_parameter(field, a)
    X, Y, Z = gens(field)
    hesse = X**3 + Y**3 + Z**3 + t * X * Y * Z
    for i, P in enumerate(points):
        if not hesse.evaluate(P).is_zero():
            raise VerificationError(f"p_{i + 1} misses the Hesse member")

    return ChileanData(field, a, points, conics, incidence)


# ---------------------------------------------------------------------------
# the sextic pencil


class PencilPair:
    """Generators of the pencil: members are F6 + lambda * G3^2."""

    def __init__(self, data):
        field, a = data.field, data.a
        self.field = field
        self.a = a
        self.F6 = data.conics[0] * data.conics[1] * data.conics[2]
        X, Y, Z = gens(field)
        self.G3 = a * (X**3 + Y**3 + Z**3) - (a**3 + 2) * X * Y * Z
        self.G3_squared = self.G3 * self.G3

    def member(self, lam):
        return self.F6 + self.G3_squared.scale(self.field.coerce(lam))


INFINITY = "infinity"


def pencil_membership(pair, S):
    """lambda with S proportional to F6 + lambda*G3^2, INFINITY, or None."""
    if S.degree != 6:
        raise GeometryError("pencil members are sextics")
    if S.proportional_to(pair.G3_squared):
        return INFINITY
    field = pair.field
    monos = sorted(set(S.terms) | set(pair.F6.terms) | set(pair.G3_squared.terms))
    rows = [[pair.F6.terms.get(m, field.zero()),
             pair.G3_squared.terms.get(m, field.zero())] for m in monos]
    rhs = [S.terms.get(m, field.zero()) for m in monos]
    from .linalg import solve
    sol = solve(rows, rhs, field)
    if sol is None:
        return None
    alpha, beta = sol
    # re-verify the claimed identity exactly
    if not S.proportional_to(pair.F6.scale(alpha) + pair.G3_squared.scale(beta)):
        return None
    if alpha.is_zero():
        return INFINITY
    return beta / alpha


def fiber_product_lambdas(data, pair):
    """The pencil parameters of the four conic-triple members.

    Fiber 1 sits at lambda = 0 by construction; the other three values are
    found by exact linear solves and returned in fiber order.
    """
    out = []
    for fiber in FIBERS:
        prod = data.conics[fiber[0]] * data.conics[fiber[1]] * data.conics[fiber[2]]
        lam = pencil_membership(pair, prod)
        if lam is None or lam == INFINITY:
            raise VerificationError(f"fiber {fiber} product is not a finite member")
        out.append(lam)
    if not out[0].is_zero():
        raise VerificationError("fiber 1 product should sit at lambda = 0")
    if len({to_text(l) for l in out}) != 4:
        raise VerificationError("the four fiber parameters are not distinct")
    return out


def cross_ratio(z, field):
    """Cross ratio (z1-z3)(z2-z4) / ((z2-z3)(z1-z4)) with INFINITY support."""
    def diff(u, v):
        if u == INFINITY and v == INFINITY:
            raise VerificationError("cross ratio of coincident points")
        if u == INFINITY or v == INFINITY:
            return INFINITY
        return u - v
    pieces = (diff(z[0], z[2]), diff(z[1], z[3]), diff(z[1], z[2]), diff(z[0], z[3]))
    num, den = field.one(), field.one()
    balance = 0
    for i, x in enumerate(pieces):
        if x == INFINITY:
            balance += 1 if i < 2 else -1
        elif i < 2:
            num = num * x
        else:
            den = den * x
    if balance > 0 or den.is_zero():
        return INFINITY
    if balance < 0:
        return field.zero()
    return num / den


def cross_ratio_probe(data, pair):
    """Which four of the five special pencil parameters are equianharmonic.

    The five values are the four conic-triple parameters and INFINITY
    (the double member).  For each 4-subset the probe reports the cross
    ratio of a reference ordering and whether some ordering satisfies
    R^2 - R + 1 = 0; the answer is ordering-independent and is checked on
    a second ordering.
    """
    field = data.field
    lams = fiber_product_lambdas(data, pair)
    values = list(lams) + [INFINITY]
    names = ["lambda0", "lambda1", "lambda2", "lambda3", "infinity"]
    report = []
    from itertools import combinations
    for idx in combinations(range(5), 4):
        subset = [values[i] for i in idx]
        verdicts = []
        for ordering in ((0, 1, 2, 3), (1, 0, 2, 3)):
            z = [subset[k] for k in ordering]
            R = cross_ratio(z, field)
            hit = False
            if R != INFINITY and not R.is_zero():
                for T in _ratio_orbit(R, field):
                    if T != INFINITY and (T * T - T + 1).is_zero():
                        hit = True
                        break
            verdicts.append((R, hit))
        if verdicts[0][1] != verdicts[1][1]:
            raise VerificationError("cross-ratio verdict depends on the ordering")
        R = verdicts[0][0]
        report.append({
            "subset": [names[i] for i in idx],
            "ratio": to_text(R) if R != INFINITY else "infinity",
            "equianharmonic": verdicts[0][1],
        })
    return {"lambdas": [to_text(l) for l in lams], "subsets": report}


def _ratio_orbit(R, field):
    one = field.one()
    out = [R, one - R]
    if not R.is_zero():
        out += [one / R, (R - one) / R]
    if not (R - one).is_zero():
        out += [one / (one - R), R / (R - one)]
    return out


# ---------------------------------------------------------------------------
# intersection points of fiber conics


def _matching_scale(point, u0, v0, iu, iv):
    """Scalar s with (s*point[iu], s*point[iv]) == (u0, v0), or None."""
    pu, pv = point.coords[iu], point.coords[iv]
    if pu.is_zero() and pv.is_zero():
        return None
    ref = pu if not pu.is_zero() else pv
    tgt = u0 if not pu.is_zero() else v0
    if tgt.is_zero():
        return None
    s = tgt / ref
    if (s * pu == u0) and (s * pv == v0):
        return s
    return None


def fourth_intersection(C, D, shared):
    """The one intersection point of two conics beyond three known ones.

    Eliminates z, then y, then x; divides the elimination resultant by the
    known roots (all divisions re-verified), and resolves the remaining
    coordinate by gcd of the univariate restrictions.
    """
    field = C.field
    last_err = None
    for var in (2, 1, 0):
        try:
            return _fourth_intersection_via(C, D, shared, var)
        except (GeometryError, ZeroDivisionError) as err:
            last_err = err
    raise GeometryError(f"fourth intersection not found: {last_err}")


def _fourth_intersection_via(C, D, shared, var):
    field = C.field
    keep = tuple(k for k in range(3) if k != var)
    res = resultant(C, D, var)
    if res.is_zero():
        raise GeometryError("conics share a component")
    form = poly3_to_binary_form(res, keep)
    known_at_vertex = 0
    for P in shared:
        u0, v0 = P.coords[keep[0]], P.coords[keep[1]]
        if u0.is_zero() and v0.is_zero():
            known_at_vertex += 1
            continue
        form = bf_divide_linear(form, (u0, v0), field)
    deg = len(form) - 1
    if deg == 0:
        # the fourth point is the coordinate vertex of the eliminated variable
        coords = [field.zero()] * 3
        coords[var] = field.one()
        vertex = ProjPoint(field, coords)
        if C.evaluate(vertex).is_zero() and D.evaluate(vertex).is_zero():
            return vertex
        raise GeometryError("degenerate elimination without a vertex point")
    if deg != 1:
        raise GeometryError(f"unexpected residual factor of degree {deg}")
    u0, v0 = -form[0], form[1]

    def restrict(poly):
        coords = [None, None, None]
        coords[keep[0]], coords[keep[1]] = u0, v0
        coords[var] = field.zero()
        parts = poly_in_var(poly, var)
        return pnormalize([c.evaluate(tuple(coords)) for c in parts])

    g = pgcd(restrict(C), restrict(D), field)
    if not g:
        raise GeometryError("restrictions vanish identically")
    # remove the known shared points living over the same (u0 : v0)
    for P in shared:
        if pdeg(g) <= 1:
            break
        s = _matching_scale(P, u0, v0, keep[0], keep[1])
        if s is not None:
            w = s * P.coords[var]
            g = _poly_divide_root(g, w, field)
    if pdeg(g) != 1:
        raise GeometryError("ambiguous residual intersection in the fiber pair")
    w0 = -g[0] / g[1]
    coords = [None, None, None]
    coords[keep[0]], coords[keep[1]] = u0, v0
    coords[var] = w0
    point = ProjPoint(field, tuple(coords))
    if not (C.evaluate(point).is_zero() and D.evaluate(point).is_zero()):
        raise GeometryError("candidate fourth point misses a conic")
    return point


def _poly_divide_root(p, r, field):
    from .field import pdivmod
    quo, rem = pdivmod(p, [-r, field.one()], field)
    if rem:
        raise GeometryError("known root does not divide the restriction")
    return quo


def fiber_nodes(data):
    """The 12 extra intersection points, 3 per fiber, in pair order.

    Returns a list of (pair, point) with pair = (i, j) conic indices.
    """
    out = []
    for fiber in FIBERS:
        for idx in range(3):
            i, j = sorted(set(fiber) - {fiber[2 - idx]})
            shared = [data.points[k] for k in range(9)
                      if data.incidence[k][i] and data.incidence[k][j]]
            if len(shared) != 3:
                raise VerificationError(
                    f"conics {i + 1},{j + 1} share {len(shared)} base points, expected 3")
            node = fourth_intersection(data.conics[i], data.conics[j], shared)
            if node in data.points:
                raise VerificationError(f"node of ({i + 1},{j + 1}) is a base point")
            out.append(((i, j), node))
    nodes = [n for _, n in out]
    if len(set(nodes)) != 12:
        raise VerificationError("the 12 fiber nodes are not distinct")
    # each node lies on exactly the two conics that define it
    for (i, j), node in out:
        on = [k for k in range(12) if data.conics[k].evaluate(node).is_zero()]
        if on != sorted((i, j)):
            raise VerificationError(
                f"node of ({i + 1},{j + 1}) lies on conics {on}")
    return out


def dual_hesse_lines(data, nodes):
    """Nine lines realizing the (9_4, 12_3) configuration on the 12 nodes.

    The line attached to base point p_i joins the four nodes of the conic
    pairs through p_i, one per fiber, and passes through p_i itself.
    """
    node_by_pair = dict(nodes)
    lines = []
    for i in range(9):
        quad = []
        for fiber in FIBERS:
            through = [j for j in fiber if data.incidence[i][j]]
            if len(through) != 2:
                raise VerificationError(
                    f"point p_{i + 1} lies on {len(through)} conics of a fiber")
            quad.append(node_by_pair[tuple(sorted(through))])
        if not are_collinear([data.points[i]] + quad):
            raise VerificationError(
                f"p_{i + 1} and its four nodes are not collinear")
        lines.append(line_through(quad[0], quad[1]))

    node_list = [n for _, n in nodes]
    incidence = [[1 if L.evaluate(n).is_zero() else 0 for n in node_list]
                 for L in lines]
    for i, row in enumerate(incidence):
        if sum(row) != 4:
            raise VerificationError(f"line {i + 1} passes through {sum(row)} nodes")
    for j in range(12):
        hits = sum(incidence[i][j] for i in range(9))
        if hits != 3:
            raise VerificationError(f"node {j + 1} lies on {hits} lines")
    # each line contains its own base point and no other
    for i, L in enumerate(lines):
        on_base = [k for k in range(9) if L.evaluate(data.points[k]).is_zero()]
        if on_base != [i]:
            raise VerificationError(
                f"line {i + 1} meets base points {[k + 1 for k in on_base]}")
    return lines, incidence


# ---------------------------------------------------------------------------
# distinguished members and degenerations


def special_members(data, pair):
    """The nine-cusped sextic, the Caylean cubic, and the dual cubic."""
    field, a = data.field, data.a
    X, Y, Z = gens(field)
    sextic = (X**6 + Y**6 + Z**6
              + (4 * a**3 - 2) * (X**3 * Y**3 + X**3 * Z**3 + Y**3 * Z**3)
              - 6 * a**2 * (X**4 * Y * Z + X * Y**4 * Z + X * Y * Z**4)
              - 3 * a * (a**3 - 4) * (X * Y * Z)**2)
    caylean = X**3 + Y**3 + Z**3 - ((a**3 + 2) / a) * X * Y * Z
    dual_cubic = X**3 + Y**3 + Z**3 - 3 * a * X * Y * Z

    lam = pencil_membership(pair, sextic)
    if lam is None or lam == INFINITY:
        raise VerificationError("the nine-cusped sextic is not a finite member")
    if not caylean.proportional_to(pair.G3):
        raise VerificationError("the Caylean cubic does not generate the double member")
    # the dual cubic is smooth for every good a: its Hesse parameter is -3a
    if ((-3 * a)**3 + 27).is_zero():
        raise VerificationError("dual cubic is singular at this parameter")
    return {"cuspidal_sextic": sextic, "caylean": caylean,
            "dual_cubic": dual_cubic, "lambda": lam}


def degenerate_pencil():
    """The a = 1 limit: three conics with three collapsed triple points."""
    field = QQ_EPS
    e = field.eps()
    one = field.one()
    X, Y, Z = gens(field)
    conics = [X**2 - Y * Z, Z**2 - X * Y, Y**2 - X * Z]
    cubic = X**3 + Y**3 + Z**3 - 3 * X * Y * Z
    triple_points = [ProjPoint(field, (one, one, one)),
                     ProjPoint(field, (e, e * e, one)),
                     ProjPoint(field, (e * e, e, one))]
    for C in conics:
        for P in triple_points:
            if not C.evaluate(P).is_zero():
                raise VerificationError("degenerate conic misses a triple point")
    vertices = [ProjPoint(field, (one, field.zero(), field.zero())),
                ProjPoint(field, (field.zero(), one, field.zero())),
                ProjPoint(field, (field.zero(), field.zero(), one))]
    for i in range(3):
        for j in range(i + 1, 3):
            meet = [v for v in vertices
                    if conics[i].evaluate(v).is_zero() and conics[j].evaluate(v).is_zero()]
            if len(meet) != 1:
                raise VerificationError("degenerate conics do not meet at one vertex")
    # the product agrees with the a = 1 limit of the sextic generator
    sym = build_chilean()
    f6_spec = (sym.conics[0] * sym.conics[1] * sym.conics[2]).specialize(
        field, eps_image=field.eps(), a_image=field.one())
    prod = conics[0] * conics[1] * conics[2]
    if not f6_spec.proportional_to(prod):
        raise VerificationError("a = 1 limit of F6 disagrees")
    return {"conics": conics, "cubic": cubic, "triple_points": triple_points,
            "vertices": vertices}


def branch_quintic(field, a):
    """The branch quintic of the double-plane model at parameter a.

    Expected singularities: one tacnodal double point (repeated tangent)
    and four further double points, all confirmed by the finite-field
    census at good specializations.
    """
    e = field.eps()
    a = field.coerce(a)
    e2 = e * e
    X, Y, Z = gens(field)
    a3 = a**3
    a6 = a3 * a3
    return (X**3 * Y**2
            + 2 * e * X**2 * Y**3
            + e2 * X * Y**4
            + 2 * e2 * X**3 * Y * Z
            + (2 * a3 + 4) * X**2 * Y**2 * Z
            + 2 * e * a3 * X * Y**3 * Z
            + 2 * e2 * (2 * a3 - 1) * Y**4 * Z
            + e * (-4 * a3 + 1) * X**3 * Z**2
            + e2 * (-10 * a3 + 4) * X**2 * Y * Z**2
            + (a6 - 12 * a3 - 4) * X * Y**2 * Z**2
            + 4 * e * (a3 - 2) * Y**3 * Z**2
            + e * (-4 * a6 - 16 * a3 + 2) * X**2 * Z**3
            - 8 * e2 * (5 * a3 + 1) * X * Y * Z**3
            + (2 * a6 - 32 * a3 - 16) * Y**2 * Z**3
            + e * (-16 * a6 - 16 * a3 - 4) * X * Z**4
            - 8 * e2 * (5 * a3 + 2) * Y * Z**4
            + e * (-16 * a6 - 8) * Z**5)


def conic_is_line_pair(C):
    """Exact degeneracy test via the symmetric matrix determinant (char != 2)."""
    field = C.field
    if field.characteristic == 2:
        raise GeometryError("determinant test needs characteristic != 2")
    half = field.from_int(2).inverse()

    def coeff(i, j, k):
        return C.terms.get((i, j, k), field.zero())

    m = [[coeff(2, 0, 0), half * coeff(1, 1, 0), half * coeff(1, 0, 1)],
         [half * coeff(1, 1, 0), coeff(0, 2, 0), half * coeff(0, 1, 1)],
         [half * coeff(1, 0, 1), half * coeff(0, 1, 1), coeff(0, 0, 2)]]
    det = (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
           - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
           + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
    return det.is_zero()


def degenerate_configuration():
    """The 9 conics + 3 lines at the simple-root parameter a = -2.

    At a = -2 exactly one fiber of conics breaks into pairs of the lines
    of the triangle member x^3 + y^3 + z^3 - 3xyz; the configuration keeps
    the other nine conics and the three triangle lines.
    """
    field = QQ_EPS
    e = field.eps()
    a = field.from_int(-2)
    points = base_points(field, a)
    conics = conic_equations(field, a)
    X, Y, Z = gens(field)
    lines = [X + Y + Z, X + e * Y + e * e * Z, X + e * e * Y + e * Z]

    degenerate_fibers = []
    for f, fiber in enumerate(FIBERS):
        if all(conic_is_line_pair(conics[j]) for j in fiber):
            degenerate_fibers.append(f)
    if len(degenerate_fibers) != 1:
        raise VerificationError(
            f"expected exactly one degenerate fiber at a = -2, got {degenerate_fibers}")
    keep = [j for f, fiber in enumerate(FIBERS) if f != degenerate_fibers[0]
            for j in fiber]
    # the degenerate fiber's conics are exactly the pairwise line products
    bad = FIBERS[degenerate_fibers[0]]
    pair_products = {frozenset((i, j)): lines[i] * lines[j]
                     for i in range(3) for j in range(i + 1, 3)}
    matched = set()
    for j in bad:
        for key, prod in pair_products.items():
            if conics[j].proportional_to(prod):
                matched.add(key)
    if len(matched) != 3:
        raise VerificationError("degenerate fiber is not the triangle line pairs")
    return {"field": field, "points": points,
            "conics": [conics[j] for j in keep], "lines": lines}


# ---------------------------------------------------------------------------
# finite-field singular point census


def singular_census(C):
    """All singular points of a curve over a finite field, classified.

    Returns a list of (point, multiplicity, kind) with kind one of
    'node', 'cusp' (double points with distinct/repeated tangents) or
    'mult3+' for higher multiplicity.  Characteristic 2 is refused since
    the tangent-cone discriminant needs 1/2.
    """
    field = C.field
    if not field.is_finite:
        raise GeometryError("the census scans a finite plane")
    if field.characteristic == 2:
        raise GeometryError("census needs characteristic != 2")
    grads = C.gradient()
    singular = []
    for P in plane_points(field):
        if not C.evaluate(P).is_zero():
            continue
        if all(g.evaluate(P).is_zero() for g in grads):
            singular.append(P)
    out = []
    for P in singular:
        mult, cone = _local_multiplicity(C, P)
        if mult == 2:
            alpha, beta, gamma = cone
            disc = beta * beta - 4 * alpha * gamma
            kind = "cusp" if disc.is_zero() else "node"
        else:
            kind = "mult3+"
        out.append((P, mult, kind))
    return out


def _local_multiplicity(C, P):
    """Local multiplicity and degree-2 tangent cone coefficients at P."""
    field = C.field
    pivot = next(i for i, c in enumerate(P.coords) if not c.is_zero())
    others = [i for i in range(3) if i != pivot]
    u = [field.one() if i == others[0] else field.zero() for i in range(3)]
    v = [field.one() if i == others[1] else field.zero() for i in range(3)]
    # substitute x_i = s*u_i + t*v_i + w*P_i and read off (s,t)-order
    matrix = [[u[i], v[i], P.coords[i]] for i in range(3)]
    local = C.substitute_linear(matrix)
    mult = None
    for (i, j, k), c in local.terms.items():
        order = i + j
        if mult is None or order < mult:
            mult = order
    cone = None
    if mult == 2:
        cone = (local.terms.get((2, 0, C.degree - 2), field.zero()),
                local.terms.get((1, 1, C.degree - 2), field.zero()),
                local.terms.get((0, 2, C.degree - 2), field.zero()))
    return mult, cone


# ---------------------------------------------------------------------------
# the symmetry group of the configuration


def symmetry_group(field):
    """Closure of (x:y:z)->(z:y:x) and (x:y:z)->(x:ey:e^2z), as matrices."""
    e = field.eps()
    one, zero = field.one(), field.zero()
    s1 = ((zero, zero, one), (zero, one, zero), (one, zero, zero))
    s2 = ((one, zero, zero), (zero, e, zero), (zero, zero, e * e))

    def normalize(m):
        flat = [c for row in m for c in row]
        pivot = next(c for c in flat if not c.is_zero())
        inv = pivot.inverse()
        return tuple(tuple(c * inv for c in row) for row in m)

    def mul(m, n):
        return tuple(tuple(sum((m[i][k] * n[k][j] for k in range(3)),
                               start=zero) for j in range(3)) for i in range(3))

    identity = ((one, zero, zero), (zero, one, zero), (zero, zero, one))
    group = {normalize(identity)}
    frontier = [normalize(identity)]
    while frontier:
        nxt = []
        for g in frontier:
            for s in (s1, s2):
                h = normalize(mul(s, g))
                if h not in group:
                    group.add(h)
                    nxt.append(h)
        frontier = nxt
    return sorted(group, key=lambda m: str([to_text(c) for row in m for c in row]))


def verify_symmetries(data):
    """Each symmetry permutes the base points and the conics fiberwise."""
    group = symmetry_group(data.field)
    reports = []
    for g in group:
        point_perm = []
        for P in data.points:
            img = ProjPoint(data.field,
                            tuple(sum((g[i][j] * P.coords[j] for j in range(3)),
                                      start=data.field.zero()) for i in range(3)))
            if img not in data.points:
                raise VerificationError("a symmetry moves a base point off the set")
            point_perm.append(data.points.index(img))
        conic_perm = []
        for C in data.conics:
            img = C.substitute_linear(g)
            matches = [j for j, D in enumerate(data.conics) if img.proportional_to(D)]
            if len(matches) != 1:
                raise VerificationError("a symmetry moves a conic off the set")
            conic_perm.append(matches[0])
        for fiber in FIBERS:
            if len({conic_perm[j] // 3 for j in fiber}) != 1:
                raise VerificationError("a symmetry breaks the fiber partition")
        reports.append({"points": point_perm, "conics": conic_perm})
    if len(group) != 6:
        raise VerificationError(f"symmetry group has order {len(group)}, expected 6")
    return reports


# ---------------------------------------------------------------------------
# export


def export_configuration(data, nodes=None, lines=None):
    """JSON-ready dict with canonical-text coefficients."""
    doc = {
        "field": repr(data.field),
        "a": to_text(data.a),
        "points": [p.to_text() for p in data.points],
        "conics": [c.to_text() for c in data.conics],
        "fibers": [list(f) for f in FIBERS],
        "incidence": data.incidence,
    }
    if nodes is not None:
        doc["nodes"] = [{"conics": [i + 1, j + 1], "point": n.to_text()}
                        for (i, j), n in nodes]
    if lines is not None:
        doc["dual_hesse_lines"] = [L.to_text() for L in lines]
    return doc
