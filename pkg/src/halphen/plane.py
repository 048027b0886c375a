"""Homogeneous trivariate polynomials and points of the projective plane.

Poly3 stores a mapping from exponent triples (i, j, k), i+j+k = degree, to
nonzero field elements.  Together with the generator helper ``gens`` this
lets curve equations be written as plain Python expressions:

    X, Y, Z = gens(field)
    conic = X*Y - a*Z**2

ProjPoint canonicalizes on construction (first nonzero coordinate scaled
to 1) so equality and hashing are representative-independent.

The module also provides restriction of a form to a parametrized line,
elimination resultants, and exact division of binary forms by linear
factors -- the primitives behind intersection-point extraction.
"""

from .field import MixedContextError, specialize_scalar, to_text


class GeometryError(Exception):
    pass


class Poly3:
    __slots__ = ("field", "degree", "terms")

    def __init__(self, field, degree, terms):
        self.field = field
        self.degree = degree
        self.terms = {exp: c for exp, c in terms.items() if not c.is_zero()}
        for (i, j, k) in self.terms:
            if i + j + k != degree:
                raise GeometryError(f"term {(i, j, k)} breaks homogeneity of degree {degree}")

    @classmethod
    def zero(cls, field, degree=0):
        return cls(field, degree, {})

    @classmethod
    def monomial(cls, field, exp, coeff=1):
        coeff = field.coerce(coeff)
        return cls(field, sum(exp), {exp: coeff})

    def is_zero(self):
        return not self.terms

    def _scalar(self, x):
        try:
            return self.field.coerce(x)
        except MixedContextError:
            return None

    def __add__(self, other):
        if not isinstance(other, Poly3):
            s = self._scalar(other)
            if s is None:
                return NotImplemented
            other = Poly3(self.field, 0, {(0, 0, 0): s})
        if self.field is not other.field:
            raise MixedContextError("polynomials over different fields")
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.degree != other.degree:
            raise GeometryError(
                f"degree mismatch in sum: {self.degree} vs {other.degree}")
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            if exp in terms:
                terms[exp] = terms[exp] + c
            else:
                terms[exp] = c
        return Poly3(self.field, self.degree, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly3(self.field, self.degree, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, Poly3):
            return self + (-other)
        s = self._scalar(other)
        if s is None:
            return NotImplemented
        return self + (-s)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly3):
            s = self._scalar(other)
            if s is None:
                return NotImplemented
            return self.scale(s)
        if self.field is not other.field:
            raise MixedContextError("polynomials over different fields")
        if self.is_zero() or other.is_zero():
            return Poly3.zero(self.field, self.degree + other.degree)
        terms = {}
        for (i1, j1, k1), c1 in self.terms.items():
            for (i2, j2, k2), c2 in other.terms.items():
                exp = (i1 + i2, j1 + j2, k1 + k2)
                prod = c1 * c2
                if exp in terms:
                    terms[exp] = terms[exp] + prod
                else:
                    terms[exp] = prod
        return Poly3(self.field, self.degree + other.degree, terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise GeometryError("negative power of a polynomial")
        out = Poly3(self.field, 0, {(0, 0, 0): self.field.one()})
        for _ in range(n):
            out = out * self
        return out

    def scale(self, c):
        c = self.field.coerce(c)
        return Poly3(self.field, self.degree,
                     {e: v * c for e, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, Poly3):
            return NotImplemented
        return (self.field is other.field and self.degree == other.degree
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    def proportional_to(self, other):
        """True if self = c * other for some nonzero scalar c."""
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        if self.degree != other.degree or set(self.terms) != set(other.terms):
            return False
        exp = next(iter(self.terms))
        ratio = self.terms[exp] / other.terms[exp]
        return all(self.terms[e] == ratio * other.terms[e] for e in other.terms)

    def evaluate(self, point):
        coords = point.rep if isinstance(point, ProjPoint) else tuple(point)
        coords = tuple(self.field.coerce(c) for c in coords)
        acc = self.field.zero()
        pows = [_power_table(c, self.degree, self.field) for c in coords]
        for (i, j, k), c in self.terms.items():
            acc = acc + c * pows[0][i] * pows[1][j] * pows[2][k]
        return acc

    def partial(self, var):
        """Partial derivative with respect to variable index 0, 1 or 2."""
        if var not in (0, 1, 2):
            raise GeometryError("variable index must be 0, 1 or 2")
        terms = {}
        for exp, c in self.terms.items():
            n = exp[var]
            if n == 0:
                continue
            new = list(exp)
            new[var] = n - 1
            terms[tuple(new)] = c * n
        return Poly3(self.field, max(self.degree - 1, 0), terms)

    def gradient(self):
        return [self.partial(i) for i in range(3)]

    def restrict_to_line(self, A, B):
        """Coefficients [c_0..c_d] of P(u*A + v*B) = sum c_i u^i v^(d-i)."""
        F = self.field
        A = [F.coerce(c) for c in (A.coords if isinstance(A, ProjPoint) else A)]
        B = [F.coerce(c) for c in (B.coords if isinstance(B, ProjPoint) else B)]
        d = self.degree
        out = [F.zero() for _ in range(d + 1)]
        for exp, c in self.terms.items():
            # expand prod_v (u*A_v + v*B_v)^exp_v as a binary form in (u, v)
            form = [F.one()]
            for v in range(3):
                lin = [B[v], A[v]]  # index = u-degree
                for _ in range(exp[v]):
                    form = _bf_mul(form, lin, F)
            for i, coef in enumerate(form):
                out[i] = out[i] + c * coef
        return out

    def substitute_linear(self, matrix):
        """Apply the substitution x_i -> sum_j M[i][j] x_j."""
        F = self.field
        gens_ = gens(F)
        images = []
        for i in range(3):
            img = Poly3.zero(F, 1)
            for j in range(3):
                img = img + gens_[j].scale(F.coerce(matrix[i][j]))
            images.append(img)
        out = Poly3.zero(F, self.degree)
        for exp, c in self.terms.items():
            term = Poly3(F, 0, {(0, 0, 0): c})
            for v in range(3):
                for _ in range(exp[v]):
                    term = term * images[v]
            out = out + term
        return out

    def coefficient_vector(self, monomials):
        return [self.terms.get(m, self.field.zero()) for m in monomials]

    def specialize(self, target, eps_image=None, a_image=None):
        terms = {}
        for exp, c in self.terms.items():
            terms[exp] = specialize_scalar(c, target, eps_image, a_image)
        return Poly3(target, self.degree, terms)

    def to_text(self):
        if not self.terms:
            return "0"
        parts = []
        for exp in sorted(self.terms, reverse=True):
            c = self.terms[exp]
            mono = "*".join(f"{v}^{n}" if n > 1 else v
                            for v, n in zip("xyz", exp) if n > 0)
            cs = to_text(c)
            needs_parens = any(ch in cs for ch in "+-/ ") and cs.lstrip("-").count("-") >= 0
            if mono:
                if cs == "1":
                    parts.append(mono)
                else:
                    parts.append(f"({cs})*{mono}" if needs_parens or "*" in cs else f"{cs}*{mono}")
            else:
                parts.append(f"({cs})" if "/" in cs else cs)
        return " + ".join(parts)

    def __repr__(self):
        return self.to_text()


def _power_table(x, n, field):
    out = [field.one()]
    for _ in range(n):
        out.append(out[-1] * x)
    return out


def monomials_of_degree(d):
    return [(i, j, d - i - j) for i in range(d, -1, -1) for j in range(d - i, -1, -1)]


def gens(field):
    """The coordinate forms (x, y, z) as degree-1 Poly3 over `field`."""
    one = field.one()
    return (Poly3(field, 1, {(1, 0, 0): one}),
            Poly3(field, 1, {(0, 1, 0): one}),
            Poly3(field, 1, {(0, 0, 1): one}))


class ProjPoint:
    """A plane point, canonical in `coords`, with the given representative
    kept in `rep` (evaluation at `rep` avoids the denominators the
    canonical form may introduce; vanishing is representative-free)."""

    __slots__ = ("field", "coords", "rep")

    def __init__(self, field, coords):
        coords = tuple(field.coerce(c) for c in coords)
        if len(coords) != 3:
            raise GeometryError("projective points need three coordinates")
        pivot = None
        for c in coords:
            if not c.is_zero():
                pivot = c
                break
        if pivot is None:
            raise GeometryError("(0:0:0) is not a projective point")
        self.field = field
        self.rep = coords
        if pivot == field.one():
            self.coords = coords
        else:
            inv = pivot.inverse()
            self.coords = tuple(c * inv for c in coords)

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return self.field is other.field and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def specialize(self, target, eps_image=None, a_image=None):
        coords = tuple(specialize_scalar(c, target, eps_image, a_image)
                       for c in self.rep)
        return ProjPoint(target, coords)

    def to_text(self):
        return "(" + " : ".join(to_text(c) for c in self.coords) + ")"

    def __repr__(self):
        return self.to_text()


def plane_points(field):
    """All points of P^2 over a finite field, in canonical form."""
    one = field.one()
    zero = field.zero()
    elems = list(field.elements())
    for y in elems:
        for z in elems:
            yield ProjPoint(field, (one, y, z))
    for z in elems:
        yield ProjPoint(field, (zero, one, z))
    yield ProjPoint(field, (zero, zero, one))


def line_through(P, Q):
    """The linear form vanishing on two distinct points (cross product)."""
    if P == Q:
        raise GeometryError("two distinct points are needed to span a line")
    F = P.field
    (a1, a2, a3), (b1, b2, b3) = P.coords, Q.coords
    co = (a2 * b3 - a3 * b2, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1)
    X, Y, Z = gens(F)
    return X.scale(co[0]) + Y.scale(co[1]) + Z.scale(co[2])


def are_collinear(points):
    """Exact collinearity test for any number of points (all 3x3 minors)."""
    pts = list(points)
    if len(pts) <= 2:
        return True
    P, Q = pts[0], pts[1]
    for R in pts[2:]:
        (a1, a2, a3), (b1, b2, b3), (c1, c2, c3) = P.coords, Q.coords, R.coords
        det = (a1 * (b2 * c3 - b3 * c2) - a2 * (b1 * c3 - b3 * c1)
               + a3 * (b1 * c2 - b2 * c1))
        if not det.is_zero():
            return False
    return True


# ---------------------------------------------------------------------------
# binary forms: dense lists [c_0..c_d] meaning sum c_i U^i V^(d-i)


def _bf_mul(p, q, field):
    out = [field.zero()] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a.is_zero():
            continue
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return out


def bf_is_zero(form):
    return all(c.is_zero() for c in form)


def bf_eval(form, u, v, field):
    d = len(form) - 1
    up = _power_table(u, d, field)
    vp = _power_table(v, d, field)
    acc = field.zero()
    for i, c in enumerate(form):
        acc = acc + c * up[i] * vp[d - i]
    return acc


def bf_divide_linear(form, root, field):
    """Exact division of a binary form by the linear factor with given root.

    `root` is a projective pair (u0, v0); the factor is v0*U - u0*V.  The
    quotient is verified by re-multiplication.
    """
    u0, v0 = (field.coerce(root[0]), field.coerce(root[1]))
    d = len(form) - 1
    if d < 1:
        raise GeometryError("cannot divide a constant form")
    q = [field.zero()] * d
    if not v0.is_zero():
        inv = v0.inverse()
        # peel from the top U-degree downwards
        rem = list(form)
        for i in range(d - 1, -1, -1):
            q[i] = rem[i + 1] * inv
            rem[i] = rem[i] + q[i] * u0
        if not rem[0].is_zero():
            raise GeometryError("inexact division of binary form")
    else:
        # root (1:0): factor is -u0*V, divisible iff the U^d coefficient vanishes
        if not form[-1].is_zero():
            raise GeometryError("inexact division of binary form")
        inv = (-u0).inverse()
        q = [c * inv for c in form[:-1]]
    # verify: (v0 U - u0 V) * q == form
    check = _bf_mul([-u0, v0], q, field)
    if any(not (a == b) for a, b in zip(check, form)):
        raise GeometryError("division verification failed")
    return q


def poly_in_var(P, var):
    """Rewrite P as a list of Poly3 coefficients of powers of variable `var`.

    Entry j is the coefficient of (x_var)^j, itself a Poly3 in the other
    two variables (with exponent 0 in position var).
    """
    F = P.field
    if P.is_zero():
        return []
    out = [dict() for _ in range(P.degree + 1)]
    for exp, c in P.terms.items():
        j = exp[var]
        rest = list(exp)
        rest[var] = 0
        out[j][tuple(rest)] = c
    polys = [Poly3(F, P.degree - j, terms) for j, terms in enumerate(out)]
    while polys and polys[-1].is_zero():
        polys.pop()
    return polys


def _det(mat, zero):
    """Determinant over a commutative ring by cofactor expansion."""
    n = len(mat)
    if n == 0:
        raise GeometryError("empty determinant")
    if n == 1:
        return mat[0][0]
    acc = None
    for j in range(n):
        entry = mat[0][j]
        if hasattr(entry, "is_zero") and entry.is_zero():
            continue
        minor = [[row[k] for k in range(n) if k != j] for row in mat[1:]]
        term = entry * _det(minor, zero)
        if j % 2 == 1:
            term = -term
        acc = term if acc is None else acc + term
    return zero if acc is None else acc


def resultant(P, Q, var):
    """Resultant of two forms with respect to one variable.

    Returns a Poly3 in the remaining two variables (Sylvester determinant
    with the actual degrees in `var`).  An identically zero resultant
    signals a common component.
    """
    F = P.field
    pc = poly_in_var(P, var)
    qc = poly_in_var(Q, var)
    m, n = len(pc) - 1, len(qc) - 1
    if m < 0 or n < 0:
        raise GeometryError("resultant of the zero polynomial")
    if m == 0 or n == 0:
        # no variable to eliminate; conventionally lc^deg
        base = pc[0] if m == 0 else qc[0]
        other_deg = n if m == 0 else m
        return base ** other_deg
    size = m + n
    zero_entries = [Poly3.zero(F, 0)] * size
    rows = []
    for i in range(n):
        row = [Poly3.zero(F, 0)] * size
        for j, c in enumerate(reversed(pc)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [Poly3.zero(F, 0)] * size
        for j, c in enumerate(reversed(qc)):
            row[i + j] = c
        rows.append(row)
    det = _det(rows, Poly3.zero(F, 0))
    return det


def poly3_to_binary_form(P, var_pair):
    """Read a Poly3 supported on two variables as a dense binary form.

    var_pair = (u, v) gives the variable indices; returns [c_0..c_d] with
    c_i the coefficient of u^i v^(d-i).
    """
    F = P.field
    u, v = var_pair
    d = P.degree
    out = [F.zero()] * (d + 1)
    for exp, c in P.terms.items():
        rest = [exp[k] for k in range(3) if k not in var_pair]
        if any(rest):
            raise GeometryError("form involves the eliminated variable")
        out[exp[u]] = c
    return out
