"""The rank-10 lattice Z e_0 + ... + Z e_9 with e_0^2 = 1, e_i^2 = -1.

Classes are plain 10-tuples of integers in the basis (e_0, ..., e_9); the
convention d*e_0 - sum m_i e_i corresponds to the raw tuple
(d, -m_1, ..., -m_9).  The module holds the two reference matrices of
(-2)-classes (index 2 and index 3), enumerates the 144 (-1)-classes by
two independent methods, and verifies the group actions, coset
structures, pairings and uniqueness statements built on them.
"""

from fractions import Fraction
from itertools import combinations

from .linalg import invariant_factors, smith_normal_form


class LatticeError(Exception):
    pass


# columns: the 12 conic classes of the index-2 surface
CONIC_CLASS_COLUMNS = (
    (2, -1, -1, -1, -1, -1, -1, 0, 0, 0),
    (2, -1, -1, -1, 0, 0, 0, -1, -1, -1),
    (2, 0, 0, 0, -1, -1, -1, -1, -1, -1),
    (2, -1, -1, 0, -1, -1, 0, -1, -1, 0),
    (2, -1, 0, -1, -1, 0, -1, -1, 0, -1),
    (2, 0, -1, -1, 0, -1, -1, 0, -1, -1),
    (2, -1, -1, 0, -1, 0, -1, 0, -1, -1),
    (2, -1, 0, -1, 0, -1, -1, -1, -1, 0),
    (2, 0, -1, -1, -1, -1, 0, -1, 0, -1),
    (2, -1, -1, 0, 0, -1, -1, -1, 0, -1),
    (2, 0, -1, -1, -1, 0, -1, -1, -1, 0),
    (2, -1, 0, -1, -1, -1, 0, 0, -1, -1),
)

# columns: the 12 cubic/sextic classes of the index-3 surface
INDEX3_CLASS_COLUMNS = (
    (1, -1, -1, -1, 0, 0, 0, 0, 0, 0),
    (4, -1, -1, -1, -2, -2, -2, -1, -1, -1),
    (4, -1, -1, -1, -1, -1, -1, -2, -2, -2),
    (1, -1, 0, 0, 0, -1, 0, 0, 0, -1),
    (4, -1, -2, -1, -1, -1, -2, -2, -1, -1),
    (4, -1, -1, -2, -2, -1, -1, -1, -2, -1),
    (1, 0, -1, 0, 0, -1, 0, 0, -1, 0),
    (4, -2, -1, -1, -2, -1, -1, -2, -1, -1),
    (4, -1, -1, -2, -1, -1, -2, -1, -1, -2),
    (1, 0, 0, -1, 0, -1, 0, -1, 0, 0),
    (4, -2, -1, -1, -1, -1, -2, -1, -2, -1),
    (4, -1, -2, -1, -2, -1, -1, -1, -1, -2),
)

FIBER_TRIPLES = ((0, 1, 2), (3, 4, 5), (6, 7, 8), (9, 10, 11))

K_CLASS = (-3, 1, 1, 1, 1, 1, 1, 1, 1, 1)
F0_CLASS = tuple(-x for x in K_CLASS)

MW_GENERATOR_CYCLES = (
    (((1, 9, 5), (2, 7, 6), (3, 8, 4))),
    (((1, 8, 6), (2, 9, 4), (3, 7, 5))),
)

# the sixteen orbit representatives based at e_9, split by the point they
# cut on the half-fiber (translate point vs inflection point)
ORBIT_MATRIX_P9 = (
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, -1, -1, 0, -1, -1, 0, 0, 0, -1),
    (2, -1, 0, -1, 0, -1, -1, 0, 0, -1),
    (2, -1, 0, 0, 0, -1, 0, -1, -1, -1),
    (2, 0, -1, -1, -1, 0, -1, 0, 0, -1),
    (2, 0, -1, 0, -1, 0, 0, -1, -1, -1),
    (2, 0, 0, -1, 0, 0, -1, -1, -1, -1),
    (4, -1, -1, -1, -1, -1, -1, -1, -1, -3),
)
ORBIT_MATRIX_X9 = (
    (1, -1, 0, 0, 0, -1, 0, 0, 0, 0),
    (1, 0, -1, 0, -1, 0, 0, 0, 0, 0),
    (1, 0, 0, -1, 0, 0, -1, 0, 0, 0),
    (1, 0, 0, 0, 0, 0, 0, -1, -1, 0),
    (3, -1, -1, -1, -1, -1, -1, 0, 0, -2),
    (3, -1, -1, 0, -1, -1, 0, -1, -1, -2),
    (3, -1, 0, -1, 0, -1, -1, -1, -1, -2),
    (3, 0, -1, -1, -1, 0, -1, -1, -1, -2),
)


def inner(u, v):
    """The intersection form: u_0 v_0 - sum_{i>=1} u_i v_i."""
    return u[0] * v[0] - sum(a * b for a, b in zip(u[1:], v[1:]))


def add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def scale(u, c):
    return tuple(c * a for a in u)


def basis_e(i):
    return tuple(1 if j == i else 0 for j in range(10))


def degree(u):
    return u[0]


def mult(u, i):
    """Multiplicity m_i in the d*e_0 - sum m_i e_i reading."""
    return -u[i]


class SurfaceLattice:
    """Twelve (-2)-classes grouped in four fiber triples, with the index."""

    def __init__(self, minus2, fibers, index):
        self.minus2 = tuple(tuple(c) for c in minus2)
        self.fibers = tuple(tuple(f) for f in fibers)
        self.index = index
        self.half_fiber = F0_CLASS
        self._verify()

    def _verify(self):
        m = self.index
        for j, col in enumerate(self.minus2):
            if inner(col, col) != -2:
                raise LatticeError(f"column {j + 1} has square {inner(col, col)}")
            if inner(col, K_CLASS) != 0:
                raise LatticeError(f"column {j + 1} meets K")
        target = scale(K_CLASS, -m)
        for f in self.fibers:
            s = (0,) * 10
            for j in f:
                s = add(s, self.minus2[j])
            if s != target:
                raise LatticeError(f"fiber {f} does not sum to -{m}K")
            for i, j in combinations(f, 2):
                if inner(self.minus2[i], self.minus2[j]) != 1:
                    raise LatticeError(f"columns {i + 1},{j + 1} are not a triangle edge")


def chilean_lattice():
    return SurfaceLattice(CONIC_CLASS_COLUMNS, FIBER_TRIPLES, 2)


def index3_lattice():
    return SurfaceLattice(INDEX3_CLASS_COLUMNS, FIBER_TRIPLES, 3)


def is_minus1_class(D, lattice):
    return (inner(D, D) == -1 and inner(D, K_CLASS) == -1
            and all(inner(D, R) >= 0 for R in lattice.minus2))


def fiber_components_missing(lattice, i):
    """Per fiber, the unique component not met by e_i (entry i zero)."""
    out = []
    for f in lattice.fibers:
        zero_cols = [j for j in f if lattice.minus2[j][i] == 0]
        if len(zero_cols) != 1:
            raise LatticeError(
                f"fiber {f} has {len(zero_cols)} components missing e_{i}")
        out.append(zero_cols[0])
    return out


# ---------------------------------------------------------------------------
# the 144 (-1)-classes, two ways


def enumerate_minus1_generative(lattice):
    """E_i - sum_{f in I} R_f^(0) + |I| F_0 over all i and I."""
    classes = set()
    for i in range(1, 10):
        E = basis_e(i)
        r0 = [lattice.minus2[j] for j in fiber_components_missing(lattice, i)]
        for mask in range(16):
            D = E
            size = 0
            for f in range(4):
                if mask >> f & 1:
                    D = sub(D, r0[f])
                    size += 1
            D = add(D, scale(F0_CLASS, size))
            if not is_minus1_class(D, lattice):
                raise LatticeError(f"generated class {D} fails the (-1) predicate")
            classes.add(D)
    if len(classes) != 144:
        raise LatticeError(f"generative enumeration found {len(classes)} classes")
    return sorted(classes)


def _isqrt(n):
    if n < 0:
        return -1
    r = int(n ** 0.5)
    while r * r > n:
        r -= 1
    while (r + 1) * (r + 1) <= n:
        r += 1
    return r


def enumerate_minus1_bruteforce(lattice, d_max=12, apply_constraints=True):
    """All integer solutions of D^2 = D.K = -1 with d <= d_max.

    Searches m-vectors with sum 3d - 1 and square sum d^2 + 1 (exact
    Diophantine pruning), then filters by the twelve (-2)-constraints
    unless `apply_constraints` is false.
    """
    found = []

    def search(prefix, k, s, q):
        # k coordinates remain, with target sum s and target square sum q
        if k == 0:
            if s == 0 and q == 0:
                found.append(tuple(prefix))
            return
        bound = _isqrt(q)
        for m in range(-bound, bound + 1):
            q2 = q - m * m
            s2 = s - m
            if q2 < 0:
                continue
            # Cauchy-Schwarz feasibility for the remaining k-1 slots
            if s2 * s2 > (k - 1) * q2:
                continue
            prefix.append(m)
            search(prefix, k - 1, s2, q2)
            prefix.pop()

    out = set()
    for d in range(0, d_max + 1):
        found.clear()
        search([], 9, 3 * d - 1, d * d + 1)
        for ms in found:
            D = (d,) + tuple(-m for m in ms)
            if not apply_constraints or all(inner(D, R) >= 0 for R in lattice.minus2):
                out.add(D)
    return sorted(out)


def degree_histogram(classes):
    hist = {}
    for D in classes:
        hist[D[0]] = hist.get(D[0], 0) + 1
    return hist


# ---------------------------------------------------------------------------
# tropical Riemann-Roch space


def triangle_integer_points():
    """Integer solutions of -2a0+a1 >= 0, a0-2a1 >= -1, a0+a1 >= -1.

    The solution triangle has vertices (-1,0), (-1/3,-2/3), (1/3,2/3);
    a scan of a safe box certifies that exactly (0,0) and (-1,0) qualify.
    """
    sols = []
    for a0 in range(-3, 4):
        for a1 in range(-3, 4):
            if -2 * a0 + a1 >= 0 and a0 - 2 * a1 >= -1 and a0 + a1 >= -1:
                sols.append((a0, a1))
    return sols


def ltrop(E, lattice):
    """Representatives of L^trop(E) modulo m*K, with their curve classes.

    Returns a list of (coefficients over the 12 (-2)-classes, class),
    where class = E + R + n*F_0 renormalized to self-intersection -1.
    Verifies closure under the tropical (componentwise max) sum.
    """
    if not is_minus1_class(E, lattice):
        raise LatticeError("L^trop is computed for (-1)-classes here")
    i = next((k for k in range(1, 10) if E == basis_e(k)), None)
    pts = triangle_integer_points()
    if sorted(pts) != [(-1, 0), (0, 0)]:
        raise LatticeError(f"triangle scan found {sorted(pts)}")
    if i is None:
        raise LatticeError("expected an exceptional basis class")
    r0_cols = fiber_components_missing(lattice, i)
    reps = []
    for mask in range(16):
        coeffs = [0] * 12
        R = (0,) * 10
        size = 0
        for f in range(4):
            if mask >> f & 1:
                coeffs[r0_cols[f]] = -1
                R = sub(R, lattice.minus2[r0_cols[f]])
                size += 1
        # D = E + R - (1/2)(2 E.R + R^2) F_0, with E.R = 0 and R^2 = -2|I|
        n = -(2 * inner(E, R) + inner(R, R)) // 2
        D = add(add(E, R), scale(F0_CLASS, n))
        if not is_minus1_class(D, lattice):
            raise LatticeError("tropical representative is not a (-1)-class")
        reps.append((tuple(coeffs), D, size))
    if len({c for c, _, _ in reps}) != 16:
        raise LatticeError("tropical space has fewer than 16 representatives")
    # closure under the tropical sum
    coeff_set = {c for c, _, _ in reps}
    for c1 in coeff_set:
        for c2 in coeff_set:
            merged = tuple(max(x, y) for x, y in zip(c1, c2))
            if merged not in coeff_set:
                raise LatticeError("tropical sum leaves the space")
    return reps


def verify_orbit_matrices(lattice):
    """The sixteen classes based at e_9 match the two printed matrices."""
    reps = ltrop(basis_e(9), lattice)
    even = {D for _, D, size in reps if size % 2 == 0}
    odd = {D for _, D, size in reps if size % 2 == 1}
    if even != set(ORBIT_MATRIX_P9):
        raise LatticeError("even-size classes disagree with the first matrix")
    if odd != set(ORBIT_MATRIX_X9):
        raise LatticeError("odd-size classes disagree with the second matrix")
    return reps


# ---------------------------------------------------------------------------
# Mordell-Weil action


def _perm_from_cycles(cycles):
    perm = list(range(10))
    for cyc in cycles:
        for k in range(len(cyc)):
            perm[cyc[k]] = cyc[(k + 1) % len(cyc)]
    return tuple(perm)


def mw_generators():
    return tuple(_perm_from_cycles(c) for c in MW_GENERATOR_CYCLES)


def apply_perm(perm, D):
    out = [0] * 10
    for i in range(10):
        out[perm[i]] = D[i]
    return tuple(out)


def compose_perm(p, q):
    """(p o q)(i) = p(q(i))."""
    return tuple(p[q[i]] for i in range(10))


def mw_group():
    """The full permutation group generated by the two translations."""
    g1, g2 = mw_generators()
    identity = tuple(range(10))
    group = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for g in frontier:
            for s in (g1, g2):
                h = compose_perm(s, g)
                if h not in group:
                    group.add(h)
                    nxt.append(h)
        frontier = nxt
    return sorted(group)


def mw_orbits(classes):
    """Orbit partition of a class set under the translation group."""
    g1, g2 = mw_generators()
    class_set = set(classes)
    seen = set()
    orbits = []
    for D in sorted(class_set):
        if D in seen:
            continue
        orbit = {D}
        frontier = [D]
        while frontier:
            nxt = []
            for v in frontier:
                for g in (g1, g2):
                    w = apply_perm(g, v)
                    if w not in class_set:
                        raise LatticeError(f"action leaves the class set at {w}")
                    if w not in orbit:
                        orbit.add(w)
                        nxt.append(w)
            frontier = nxt
        seen |= orbit
        orbits.append(sorted(orbit))
    return orbits


def verify_mw_action(classes):
    """Commuting order-3 isometric generators, 16 free orbits of size 9."""
    g1, g2 = mw_generators()
    if compose_perm(g1, g2) != compose_perm(g2, g1):
        raise LatticeError("the two translation generators do not commute")
    identity = tuple(range(10))
    for g in (g1, g2):
        if compose_perm(g, compose_perm(g, g)) != identity:
            raise LatticeError("a translation generator has order != 3")
    if len(mw_group()) != 9:
        raise LatticeError("the translation group has order != 9")
    # permutations of e_1..e_9 preserve the form; check on a basis sample
    for g in (g1, g2):
        for i in range(10):
            for j in range(10):
                u, v = basis_e(i), basis_e(j)
                if inner(apply_perm(g, u), apply_perm(g, v)) != inner(u, v):
                    raise LatticeError("generator is not an isometry")
    orbits = mw_orbits(classes)
    if len(orbits) != 16 or any(len(o) != 9 for o in orbits):
        raise LatticeError(
            f"expected 16 orbits of size 9, got sizes {[len(o) for o in orbits]}")
    exc = sorted(basis_e(i) for i in range(1, 10))
    if exc not in [sorted(o) for o in orbits]:
        raise LatticeError("the nine exceptional classes are not a single orbit")
    return orbits


# ---------------------------------------------------------------------------
# coset partition under the span of the (-2)-classes


class CosetLabeller:
    """Stable labels for Z^10 modulo the span of given integer columns."""

    def __init__(self, columns):
        matrix = [[col[i] for col in columns] for i in range(10)]
        D, U, V = smith_normal_form(matrix)
        self.U = U
        self.diag = [D[i][i] if i < len(D[0]) else 0 for i in range(10)]

    def label(self, v):
        w = [sum(self.U[i][j] * v[j] for j in range(10)) for i in range(10)]
        out = []
        for i in range(10):
            d = self.diag[i] if i < len(self.diag) else 0
            if d == 0:
                out.append(w[i])
            elif d == 1:
                continue
            else:
                out.append(w[i] % d)
        return tuple(out)


def res_partition(classes, lattice):
    """Cosets of the class set modulo the lattice of (-2)-classes.

    The span of the twelve (-2)-classes already contains m*F_0, so this
    is the finest vertical-translation quotient; on the 144 set it yields
    18 cosets of size 8, and adding F_0 pairs the cosets two by two.
    """
    labeller = CosetLabeller(lattice.minus2)
    cosets = {}
    for D in classes:
        cosets.setdefault(labeller.label(D), []).append(D)
    sizes = sorted(len(v) for v in cosets.values())
    if len(cosets) != 18 or sizes != [8] * 18:
        raise LatticeError(
            f"expected 18 cosets of size 8, got {len(cosets)} of sizes {sizes}")
    # adding F_0 swaps cosets in pairs
    pairing = {}
    for lab, members in cosets.items():
        shifted = labeller.label(add(members[0], F0_CLASS))
        if shifted == lab or shifted not in cosets:
            raise LatticeError("F_0 translation does not pair the cosets")
        pairing[lab] = shifted
    for lab, other in pairing.items():
        if pairing[other] != lab:
            raise LatticeError("F_0 pairing is not an involution")
    return cosets, pairing


def kperp_basis_coordinates(v):
    """Coordinates of v in the basis (e_0-3e_9, e_1-e_9, ..., e_8-e_9) of K-perp."""
    if inner(v, K_CLASS) != 0:
        raise LatticeError(f"{v} is not orthogonal to K")
    return tuple(v[:9])


def kperp_quotients(lattice):
    """Invariant factors of K-perp modulo Lambda and modulo Lambda + <F_0>."""
    lam_rows = [list(kperp_basis_coordinates(c)) for c in lattice.minus2]
    with_f0 = lam_rows + [list(kperp_basis_coordinates(F0_CLASS))]
    fac_lam = invariant_factors(lam_rows)
    fac_full = invariant_factors(with_f0)
    if len(fac_lam) != 9 or len(fac_full) != 9:
        raise LatticeError("the (-2)-classes do not span K-perp rationally")
    return ([f for f in fac_lam if f != 1], [f for f in fac_full if f != 1])


# ---------------------------------------------------------------------------
# the pairing through the ramification class


def branch_class(i):
    """B_i = e_0 - e_i."""
    return sub(basis_e(0), basis_e(i))


def bertini_pair(E, i, lattice):
    """F_0 + B_i - E, verified to be a (-1)-class of the lattice."""
    D = sub(add(F0_CLASS, branch_class(i)), E)
    if not is_minus1_class(D, lattice):
        raise LatticeError(
            f"F_0 + B_{i} - E fails the (-1)-class predicate for E = {E}")
    return D


def bertini_involution(classes, lattice):
    """The pairing E -> F_0 + B_i - E on the whole class set.

    For each class exactly one base-point index i makes the image another
    class of the set; the induced map is an involution pairing degrees
    d <-> 4 - d with intersection number 3.
    """
    class_set = set(classes)
    pairing = {}
    for E in classes:
        hits = []
        for i in range(1, 10):
            if mult(E, i) != E[0] - 1:
                continue  # B_i . E = 1 is required for the image to square to -1
            D = sub(add(F0_CLASS, branch_class(i)), E)
            if D in class_set:
                hits.append((i, D))
        if len(hits) != 1:
            raise LatticeError(f"class {E} has {len(hits)} pairing indices")
        pairing[E] = hits[0]
    for E, (i, D) in pairing.items():
        j, back = pairing[D]
        if back != E or j != i:
            raise LatticeError("pairing is not an involution")
        if E[0] + D[0] != 4:
            raise LatticeError("pairing does not swap degrees d and 4-d")
        if inner(E, D) != 3:
            raise LatticeError("paired classes do not meet in 3")
    return pairing


# ---------------------------------------------------------------------------
# the nine-class theorem at a reference exceptional class


def fiber_labels_for(E_index, lattice):
    """Per fiber (R^(0), R^(1), R^(2)) relative to e_{E_index}.

    R^(0) is the component not met; the two met components are labelled
    in increasing column order.
    """
    labels = []
    for f in lattice.fibers:
        missing = [j for j in f if lattice.minus2[j][E_index] == 0]
        met = [j for j in f if lattice.minus2[j][E_index] != 0]
        if len(missing) != 1 or len(met) != 2:
            raise LatticeError("fiber incidence pattern is not 0/1/1")
        labels.append((missing[0], met[0], met[1]))
    return labels


def third_divisor(pattern, labels, lattice):
    """The rational class (1/3) sum_f (R_f^(a_f) - R_f^(0)) for a digit pattern."""
    acc = [Fraction(0)] * 10
    for f, digit in enumerate(pattern):
        if digit == 0:
            continue
        plus = lattice.minus2[labels[f][digit]]
        minus = lattice.minus2[labels[f][0]]
        for k in range(10):
            acc[k] += Fraction(plus[k] - minus[k], 3)
    return tuple(acc)


def q_inner(u, v):
    return u[0] * v[0] - sum(a * b for a, b in zip(u[1:], v[1:]))


def verify_nine_class_theorem(lattice, E_index=1):
    """The two third-integer divisors and the nine derived classes."""
    E = basis_e(E_index)
    labels = fiber_labels_for(E_index, lattice)
    d0111 = third_divisor((0, 1, 1, 1), labels, lattice)
    d1012 = third_divisor((1, 0, 1, 2), labels, lattice)
    report = {}
    report["D0111.D1012"] = q_inner(d0111, d1012)
    report["D0111^2"] = q_inner(d0111, d0111)
    report["D1012^2"] = q_inner(d1012, d1012)
    if report["D0111.D1012"] != -1:
        raise LatticeError("D_0111 . D_1012 != -1")
    if report["D0111^2"] != -2 or report["D1012^2"] != -2:
        raise LatticeError("third-integer divisors do not square to -2")

    patterns = ((0, 0, 0, 0), (0, 2, 2, 2), (0, 1, 1, 1),
                (2, 0, 2, 1), (2, 2, 1, 0), (2, 1, 0, 2),
                (1, 0, 1, 2), (1, 2, 0, 1), (1, 1, 2, 0))
    derived = []
    for pat in patterns:
        D = third_divisor(pat, labels, lattice)
        vec = tuple(E[k] + D[k] for k in range(10))
        if any(x.denominator != 1 for x in vec):
            raise LatticeError(f"class for pattern {pat} is not integral")
        derived.append(tuple(int(x) for x in vec))
    for u, v in combinations(derived, 2):
        if inner(u, v) != 0:
            raise LatticeError("derived classes are not pairwise orthogonal")
    for D in derived:
        if not is_minus1_class(D, lattice):
            raise LatticeError("a derived class fails the (-1) predicate")
    if sorted(derived) != sorted(basis_e(i) for i in range(1, 10)):
        raise LatticeError("derived classes differ from the nine exceptional ones")

    r0_sum = (0,) * 10
    for f in range(4):
        r0_sum = add(r0_sum, lattice.minus2[labels[f][0]])
    H = sub(add(scale(E, 3), scale(F0_CLASS, 3)), r0_sum)
    report["H"] = H
    report["H^2"] = inner(H, H)
    if inner(H, H) != 1:
        raise LatticeError("H^2 != 1")
    for R in lattice.minus2:
        if inner(H, R) != 2:
            raise LatticeError("H does not meet every (-2)-class in 2")
    report["classes"] = derived
    return report


# ---------------------------------------------------------------------------
# uniqueness of the orthogonal nine-set


def all_nine_cliques(classes):
    """All 9-sets of pairwise-orthogonal classes, by ordered backtracking."""
    verts = sorted(classes)
    n = len(verts)
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if inner(verts[i], verts[j]) == 0:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    cliques = []

    def extend(chosen, cand):
        if len(chosen) == 9:
            cliques.append(tuple(verts[k] for k in chosen))
            return
        if len(chosen) + bin(cand).count("1") < 9:
            return
        while cand:
            low = cand & -cand
            j = low.bit_length() - 1
            cand ^= low
            if len(chosen) + 1 + bin(cand).count("1") < 9:
                return
            chosen.append(j)
            extend(chosen, cand & adj[j] & ~((1 << (j + 1)) - 1))
            chosen.pop()
        return

    full = (1 << n) - 1
    extend([], full)
    return cliques


def chilean_set_uniqueness(classes, lattice):
    """Exactly one orthogonal nine-set meets every (-2)-class six times."""
    cliques = all_nine_cliques(classes)
    qualifying = []
    rejected = []
    for clique in cliques:
        total = (0,) * 10
        for D in clique:
            total = add(total, D)
        fiber_patterns = []
        for f in lattice.fibers:
            fiber_patterns.append(tuple(sorted(inner(total, lattice.minus2[j])
                                               for j in f)))
        if all(pat == (6, 6, 6) for pat in fiber_patterns):
            qualifying.append(clique)
        else:
            rejected.append((clique, fiber_patterns))
    if len(qualifying) != 1:
        raise LatticeError(f"{len(qualifying)} qualifying nine-sets found")
    expected = tuple(sorted(basis_e(i) for i in range(1, 10)))
    if tuple(sorted(qualifying[0])) != expected:
        raise LatticeError("the qualifying nine-set is not the exceptional one")
    return {"total_cliques": len(cliques), "qualifying": qualifying,
            "rejected": rejected}


# ---------------------------------------------------------------------------
# the index-3 data of the higher-index construction


TORSION_VECTORS = (
    (0, 0, 0, 0), (0, 1, 2, 1), (0, 2, 1, 2),
    (1, 1, 0, 2), (1, 2, 2, 0), (1, 0, 1, 1),
    (2, 2, 0, 1), (2, 1, 1, 0), (2, 0, 2, 2),
)


def verify_torsion_vectors():
    """All 36 pairwise differences have exactly one zero coordinate mod 3."""
    for u, v in combinations(TORSION_VECTORS, 2):
        zeros = sum(1 for a, b in zip(u, v) if (a - b) % 3 == 0)
        if zeros != 1:
            raise LatticeError(f"difference of {u} and {v} has {zeros} zeros")
    return True


SECTION_MATRIX = ((0, 0, 0, 1, 4, 1, 5, 5, 5),
                  (0, 1, 2, 0, 1, 2, 0, 1, 2))


def index3_section_check():
    """The 2x9 matrix is a set-theoretic section generating the kernel."""
    first, second = SECTION_MATRIX
    reductions = [((a % 3), b % 3) for a, b in zip(first, second)]
    if len(set(reductions)) != 9:
        raise LatticeError("reductions mod 3 are not a bijection onto (Z/3)^2")
    if [r[0] for r in reductions] != [0, 0, 0, 1, 1, 1, 2, 2, 2]:
        raise LatticeError("first coordinates do not reduce to 0,0,0,1,1,1,2,2,2")
    total = (sum(first) % 9, sum(second) % 3)
    if total[1] != 0:
        raise LatticeError("column sum has a nonzero second coordinate")
    kernel = {0, 3, 6}
    generated = {(total[0] * k) % 9 for k in range(3)}
    if total[0] % 3 != 0 or generated != kernel:
        raise LatticeError(f"column sum {total[0]} does not generate the kernel")
    return {"column_sum": total, "reductions": reductions}


# ---------------------------------------------------------------------------
# geometric realization of the low-degree classes


def realize_low_degree_classes(classes, points):
    """Check every degree <= 2 class against actual curves through the points.

    Lines through two points and conics through five must exist (kernel
    dimension exactly one) and avoid the remaining base points.
    """
    from .linalg import kernel_basis
    from .plane import Poly3, monomials_of_degree

    field = points[0].field
    checked = 0
    for D in classes:
        d = D[0]
        if d not in (1, 2):
            continue
        mults = [mult(D, i) for i in range(1, 10)]
        if any(m not in (0, 1) for m in mults):
            raise LatticeError(f"degree {d} class {D} has unexpected multiplicities")
        support = [i for i, m in enumerate(mults) if m == 1]
        monos = monomials_of_degree(d)
        rows = []
        for i in support:
            P = points[i]
            pows = [[field.one()]] * 0
            row = []
            for (ei, ej, ek) in monos:
                row.append(P.coords[0] ** ei * P.coords[1] ** ej * P.coords[2] ** ek)
            rows.append(row)
        kern = kernel_basis(rows, field)
        if len(kern) != 1:
            raise LatticeError(
                f"class {D}: expected a unique curve, kernel dimension {len(kern)}")
        curve = Poly3(field, d, dict(zip(monos, kern[0])))
        for i in range(9):
            vanishes = curve.evaluate(points[i]).is_zero()
            if vanishes != (i in support):
                raise LatticeError(f"class {D}: curve support mismatch at p_{i + 1}")
        checked += 1
    if checked != 36 + 54:
        raise LatticeError(f"checked {checked} low-degree classes, expected 90")
    return checked


# ---------------------------------------------------------------------------
# the annotated table of all 144 classes


def galois_permutation(lattice):
    """The index pairing of e_2..e_9 induced by the deck involution at e_1.

    The involution fixes e_0, e_1 and each unmet fiber component, and
    swaps the two met components of every fiber; its matrix is computed
    over Q and must permute the exceptional classes in four 2-cycles.
    """
    labels = fiber_labels_for(1, lattice)
    # basis of Pic tensor Q: e_0, e_1 and nine of the (-2)-classes
    basis = [basis_e(0), basis_e(1)]
    images = [basis_e(0), basis_e(1)]
    for (r0, r1, r2) in labels:
        basis.extend([lattice.minus2[j] for j in (r0, r1, r2)])
        images.extend([lattice.minus2[j] for j in (r0, r2, r1)])
    # solve for each e_i in terms of the basis over Q, then map
    perm = {0: 0, 1: 1}
    import itertools
    cols = list(range(len(basis)))
    # build matrix M with columns = basis vectors, solve M x = e_i
    M = [[Fraction(basis[c][r]) for c in cols] for r in range(10)]
    for i in range(2, 10):
        x = _solve_rational(M, [Fraction(v) for v in basis_e(i)])
        img = [sum(x[c] * images[c][r] for c in cols) for r in range(10)]
        if any(v.denominator != 1 for v in img):
            raise LatticeError("involution image is not integral")
        img = tuple(int(v) for v in img)
        j = next((k for k in range(2, 10) if img == basis_e(k)), None)
        if j is None:
            raise LatticeError(f"involution does not permute e_{i}")
        perm[i] = j
    for i in range(2, 10):
        if perm[perm[i]] != i:
            raise LatticeError("deck permutation is not an involution")
    if sum(1 for i in range(2, 10) if perm[i] != i) != 8:
        raise LatticeError("deck permutation must move all of e_2..e_9")
    return perm


def _solve_rational(M, b):
    n = len(M)
    m = len(M[0])
    aug = [row[:] + [b[i]] for i, row in enumerate(M)]
    pivots = []
    r = 0
    for c in range(m):
        pr = next((i for i in range(r, n) if aug[i][c] != 0), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    for i in range(r, n):
        if aug[i][m] != 0:
            raise LatticeError("inconsistent rational system")
    x = [Fraction(0)] * m
    for row_i, c in enumerate(pivots):
        x[c] = aug[row_i][m]
    return x


def table144(classes, lattice):
    """Rows (deg, n, v_C, split, class) annotating all 144 classes.

    deg is the plane degree of the class, n its intersection with e_1,
    split records whether the deck involution at e_1 moves the class, and
    v_C reproduces the node count of the double-plane model as bookkeeping.
    """
    perm = galois_permutation(lattice)
    rows = []
    for D in sorted(classes):
        d = D[0]
        n = inner(D, basis_e(1))
        image = [0] * 10
        for i in range(10):
            image[perm.get(i, i)] = D[i]
        invariant = tuple(image) == D
        if D == basis_e(1):
            n = 0
            deg_c, v_c, u_c, a_s, a_sp = 0, 0, 0, 0, 0
        elif invariant:
            deg_c, v_c, u_c = (n + 2) // 2, n + 1, 0
            a_s, a_sp = n % 2, (n + 1) % 2
        else:
            deg_c = 2 if n == 0 else 3
            v_c = (3 - d) if n == 0 else (4 - d)
            u_c, a_s, a_sp = n, 0, 0
        rows.append({"deg": d, "n": n, "v_C": v_c, "u_C": u_c,
                     "a_s": a_s, "a_sp": a_sp,
                     "split": "no" if invariant else "yes",
                     "class": D})
    return rows
