from fractions import Fraction

import pytest

from halphen.piclattice import (CONIC_CLASS_COLUMNS, F0_CLASS, INDEX3_CLASS_COLUMNS,
                                K_CLASS, LatticeError, ORBIT_MATRIX_P9,
                                ORBIT_MATRIX_X9, CosetLabeller, add, basis_e,
                                bertini_involution, bertini_pair,
                                chilean_lattice, chilean_set_uniqueness,
                                degree_histogram, enumerate_minus1_bruteforce,
                                galois_permutation,
                                index3_lattice, index3_section_check, inner,
                                kperp_quotients, ltrop,
                                mw_generators, mw_orbits, res_partition, scale,
                                table144, triangle_integer_points,
                                verify_mw_action, verify_nine_class_theorem,
                                verify_orbit_matrices, verify_torsion_vectors)


def test_intersection_form():
    assert inner(K_CLASS, K_CLASS) == 0
    assert inner(basis_e(0), basis_e(0)) == 1
    assert inner(basis_e(1), basis_e(1)) == -1
    assert inner(basis_e(1), basis_e(2)) == 0
    col1, col2 = CONIC_CLASS_COLUMNS[0], CONIC_CLASS_COLUMNS[1]
    assert inner(col1, col1) == -2
    assert inner(col1, col2) == 1


def test_chilean_lattice_invariants(lattice):
    for col in lattice.minus2:
        assert inner(col, col) == -2
        assert inner(col, K_CLASS) == 0
    total = (0,) * 10
    for j in (0, 1, 2):
        total = add(total, lattice.minus2[j])
    assert total == scale(K_CLASS, -2)
    assert total == (6, -2, -2, -2, -2, -2, -2, -2, -2, -2)
    for col in lattice.minus2:
        assert sum(1 for v in col[1:] if v == -1) == 6


def test_enumerations_agree(lattice, classes144):
    assert len(classes144) == 144
    assert degree_histogram(classes144) == {0: 9, 1: 36, 2: 54, 3: 36, 4: 9}
    assert enumerate_minus1_bruteforce(lattice, d_max=4) == classes144
    assert enumerate_minus1_bruteforce(lattice, d_max=12) == classes144
    free = enumerate_minus1_bruteforce(lattice, d_max=4, apply_constraints=False)
    assert len(free) > 144


def test_every_class_satisfies_the_predicate(lattice, classes144):
    for D in classes144:
        assert inner(D, D) == -1
        assert inner(D, K_CLASS) == -1
        assert all(inner(D, R) >= 0 for R in lattice.minus2)


def test_triangle_polytope_points():
    assert sorted(triangle_integer_points()) == [(-1, 0), (0, 0)]


def test_tropical_space(lattice):
    reps = ltrop(basis_e(9), lattice)
    assert len(reps) == 16
    assert any(all(c == 0 for c in coeffs) for coeffs, _, _ in reps)
    verify_orbit_matrices(lattice)
    even = {D for _, D, size in reps if size % 2 == 0}
    assert even == set(ORBIT_MATRIX_P9)
    odd = {D for _, D, size in reps if size % 2 == 1}
    assert odd == set(ORBIT_MATRIX_X9)
    with pytest.raises(LatticeError):
        ltrop((1, 0, 0, 0, 0, 0, 0, 0, 0, 0), lattice)


def test_mw_action(lattice, classes144):
    g1, g2 = mw_generators()
    orbits = verify_mw_action(classes144)
    assert len(orbits) == 16
    assert all(len(o) == 9 for o in orbits)
    exceptional = sorted(basis_e(i) for i in range(1, 10))
    assert exceptional in [sorted(o) for o in orbits]
    with pytest.raises(LatticeError):
        mw_orbits([basis_e(1)])  # not closed under the action


def test_res_partition(lattice, classes144):
    cosets, pairing = res_partition(classes144, lattice)
    assert len(cosets) == 18
    assert all(len(v) == 8 for v in cosets.values())
    # the pairing is a fixed-point-free involution on the 18 labels
    assert all(pairing[pairing[k]] == k and pairing[k] != k for k in pairing)
    # nine cosets hold the exceptional classes (the translate points); the
    # pairing swaps them with the other nine (the inflection points)
    with_exceptional = {lab for lab, members in cosets.items()
                        if any(D in members for D in map(basis_e, range(1, 10)))}
    assert len(with_exceptional) == 9
    assert {pairing[lab] for lab in with_exceptional}.isdisjoint(with_exceptional)


def test_coset_labeller_diagonal_case():
    labeller = CosetLabeller([(2, 0) + (0,) * 8, (0, 3) + (0,) * 8])
    labels = {labeller.label(tuple(v) + (0,) * 8)
              for v in ((0, 0), (1, 0), (0, 1), (1, 1), (0, 2), (1, 2))}
    assert len(labels) == 6


def test_kperp_quotients(lattice):
    fac_lam, fac_full = kperp_quotients(lattice)
    assert fac_lam == [3, 6]          # K-perp / Lambda has order 18
    assert fac_full == [3, 3]         # adding F_0 cuts it to order 9


def test_bertini_pairing(lattice, classes144):
    quartic = (4, -3, -1, -1, -1, -1, -1, -1, -1, -1)
    assert bertini_pair(basis_e(1), 1, lattice) == quartic
    assert bertini_pair(quartic, 1, lattice) == basis_e(1)
    pairing = bertini_involution(classes144, lattice)
    hist = {}
    for E, (i, D) in pairing.items():
        assert inner(E, D) == 3
        hist[(E[0], D[0])] = hist.get((E[0], D[0]), 0) + 1
    assert set(hist) == {(0, 4), (4, 0), (1, 3), (3, 1), (2, 2)}
    with pytest.raises(LatticeError):
        bertini_pair(basis_e(1), 2, lattice)


def test_nine_class_theorem(lattice):
    rep = verify_nine_class_theorem(lattice)
    assert rep["D0111.D1012"] == -1
    assert rep["D0111^2"] == -2 and rep["D1012^2"] == -2
    assert rep["H"] == basis_e(0)
    assert rep["H^2"] == 1
    assert sorted(rep["classes"]) == sorted(basis_e(i) for i in range(1, 10))


def test_unique_nine_set(lattice, classes144):
    rep = chilean_set_uniqueness(classes144, lattice)
    assert len(rep["qualifying"]) == 1
    assert sorted(rep["qualifying"][0]) == sorted(basis_e(i) for i in range(1, 10))
    # rejected sets show the line-line-quartic fiber pattern
    patterns = {pat for _, pats in rep["rejected"] for pat in pats}
    assert (3, 3, 12) in patterns
    assert rep["total_cliques"] == 1 + len(rep["rejected"])


def test_index3_lattice():
    L3 = index3_lattice()
    col1 = INDEX3_CLASS_COLUMNS[0]
    assert col1 == (1, -1, -1, -1, 0, 0, 0, 0, 0, 0)
    assert inner(col1, col1) == -2
    for f in L3.fibers:
        total = (0,) * 10
        for j in f:
            total = add(total, L3.minus2[j])
        assert total == scale(K_CLASS, -3)
        assert total == (9, -3, -3, -3, -3, -3, -3, -3, -3, -3)


def test_section_matrix():
    rep = index3_section_check()
    assert rep["column_sum"] == (3, 0)
    assert [r[0] for r in rep["reductions"]] == [0, 0, 0, 1, 1, 1, 2, 2, 2]
    assert len(set(rep["reductions"])) == 9


def test_torsion_vector_table():
    assert verify_torsion_vectors()


def test_low_degree_classes_realized(classes144, symbolic_data):
    from halphen.piclattice import realize_low_degree_classes
    assert realize_low_degree_classes(classes144, symbolic_data.points) == 90


def test_galois_permutation_pairs_eight_classes(lattice):
    perm = galois_permutation(lattice)
    assert perm[0] == 0 and perm[1] == 1
    moved = [i for i in range(2, 10) if perm[i] != i]
    assert len(moved) == 8
    assert all(perm[perm[i]] == i for i in range(2, 10))


def test_table144_row_profile(lattice, classes144):
    rows = table144(classes144, lattice)
    assert len(rows) == 144
    split_counts = {}
    for r in rows:
        key = (r["deg"], r["n"], r["v_C"], r["split"])
        split_counts[key] = split_counts.get(key, 0) + 1
    # the thirteen row types of the class table with their multiplicities
    assert split_counts[(0, 0, 0, "no")] == 1        # the reference class itself
    assert split_counts[(1, 0, 1, "no")] == 4
    assert split_counts[(2, 1, 2, "no")] == 6
    assert split_counts[(3, 2, 3, "no")] == 4
    assert split_counts[(4, 3, 4, "no")] == 1
    assert split_counts[(0, 0, 3, "yes")] == 8
    assert split_counts[(1, 0, 2, "yes")] == 24
    assert split_counts[(2, 0, 1, "yes")] == 24
    assert split_counts[(3, 0, 0, "yes")] == 8
    assert split_counts[(1, 1, 3, "yes")] == 8
    assert split_counts[(2, 1, 2, "yes")] == 24
    assert split_counts[(3, 1, 1, "yes")] == 24
    assert split_counts[(4, 1, 0, "yes")] == 8
