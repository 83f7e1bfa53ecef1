"""Family parameter enumeration, closed forms, T1/T1' partitions, EA records."""

import pytest

from eaqmds.cosets import decompose, neg_q_image
from eaqmds.families import (
    FamilySpec,
    assemble_ea_params,
    build_T1,
    build_T1_prime,
    build_defining_set,
    closed_form,
    ea_params,
    enumerate_admissible,
    q_for,
    spec_from_q,
    sweep_specs,
    theorem_quantum_dim,
    verify_family,
)
from eaqmds.published_params import PUBLISHED_ROWS


def test_q_forms():
    assert q_for(1, 1, 3) == 13
    assert q_for(2, 1, 2) == 11
    assert q_for(3, 1, 7) == 29
    assert q_for(4, 1, 5) == 23
    assert q_for(4, 3, 4) == 97


def test_spec_validation_errors():
    with pytest.raises(ValueError, match="odd"):
        FamilySpec(1, 2, 3, 1)
    with pytest.raises(ValueError, match="k"):
        FamilySpec(1, 1, 0, 1)
    with pytest.raises(ValueError, match="alpha"):
        FamilySpec(1, 1, 3, 4)
    with pytest.raises(ValueError, match="prime power"):
        FamilySpec(1, 1, 5, 1)  # q = 21 = 3 * 7
    with pytest.raises(ValueError, match="case"):
        FamilySpec(5, 1, 1, 1)


def test_spec_derived_quantities():
    s = FamilySpec(1, 1, 3, 1)
    assert (s.a, s.q, s.n, s.s) == (2, 13, 85, 42)
    s = FamilySpec(2, 5, 4, 1)
    assert (s.a, s.q, s.n, s.s) == (26, 239, 2197, 1098)


def test_spec_from_q_inverts_the_form():
    s = spec_from_q(1, 3, 83, 2)
    assert s.k == 4 and s.n == 689
    with pytest.raises(ValueError):
        spec_from_q(1, 1, 14, 1)  # wrong residue class


def test_enumerate_admissible_case1():
    specs = enumerate_admissible(1, 1, k_max=4, q_max=20)
    qs = sorted({s.q for s in specs})
    assert qs == [5, 9, 13, 17]  # 5 and 9 = 3^2 pass the prime-power test
    assert len(specs) == 1 + 2 + 3 + 4
    assert all(1 <= s.alpha <= s.k for s in specs)


def test_enumerate_admissible_case2_and_case4():
    specs2 = enumerate_admissible(2, 1, q_max=20)
    by_q = {s.q: s.k for s in specs2}
    assert by_q[11] == 2 and by_q[19] == 4
    assert 15 not in by_q  # 15 = 3 * 5 fails the prime-power sieve
    specs4 = enumerate_admissible(4, 3, q_max=100)
    assert any(s.q == 97 and s.k == 4 and s.n == 941 for s in specs4)


def test_enumerate_requires_a_bound():
    with pytest.raises(ValueError):
        enumerate_admissible(1, 1)


def test_closed_form_anchors():
    cf = closed_form(FamilySpec(1, 1, 3, 1))
    assert (cf.delta, cf.d, cf.c, cf.quantum_dim) == (16, 33, 12, 33)
    cf = closed_form(FamilySpec(2, 1, 2, 1))
    assert (cf.delta, cf.d, cf.c, cf.quantum_dim) == (19, 39, 24, 9)
    cf = closed_form(FamilySpec(4, 3, 4, 1))
    assert (cf.delta, cf.d, cf.c, cf.quantum_dim) == (179, 359, 136, 361)


def test_build_defining_set_case1_q13():
    rec = build_defining_set(FamilySpec(1, 1, 3, 1))
    assert rec.defining_set.members == tuple(range(27, 59))
    assert rec.dim == 53 and rec.designed_distance == 33 and rec.mds

    rec3 = build_defining_set(FamilySpec(1, 1, 3, 3))
    assert rec3.dim == 1 and rec3.designed_distance == 85
    assert ea_params(FamilySpec(1, 1, 3, 3)).kq == 1


@pytest.mark.parametrize("case,m,k", [(1, 1, 3), (2, 1, 2), (3, 1, 7), (4, 1, 5)])
def test_alpha_max_consumes_everything(case, m, k):
    spec = FamilySpec(case, m, k, k)
    rec = build_defining_set(spec)
    assert len(rec.defining_set) == spec.n - 1
    assert rec.dim == 1
    ea = ea_params(spec)
    assert ea.kq == 1 and ea.d == spec.n and ea.c == spec.n - 1


def test_build_T1_case1_q13():
    spec = FamilySpec(1, 1, 3, 1)
    z = build_defining_set(spec).defining_set
    t1 = build_T1(spec)
    t1p = build_T1_prime(spec)
    assert len(t1) == len(z) - 12 == 20
    assert t1.as_set == z.as_set - t1p.as_set
    assert t1.as_set <= z.as_set
    assert not (t1.as_set & neg_q_image(spec.n, spec.q, t1).as_set)


def test_build_T1_prime_case1_q13():
    spec = FamilySpec(1, 1, 3, 1)
    t1p = build_T1_prime(spec)
    assert len(t1p) == 12 == closed_form(spec).c
    assert neg_q_image(spec.n, spec.q, t1p).members == t1p.members


def test_build_T1_prime_case3_anchor():
    spec = FamilySpec(3, 1, 7, 2)  # q = 29, [[421,201,131;40]]
    assert len(build_T1_prime(spec)) == 40


def test_T1_partition_small_sweep():
    for spec in sweep_specs(3, 60):
        z = build_defining_set(spec).defining_set
        t1 = build_T1(spec)
        t1p = build_T1_prime(spec)
        assert t1.as_set <= z.as_set, spec
        assert (t1.as_set | t1p.as_set) == z.as_set, spec
        assert not (t1.as_set & t1p.as_set), spec


def test_ea_params_anchors():
    assert ea_params(FamilySpec(1, 3, 4, 2)).label(83) == "[[689,161,357;184]]_83"
    assert ea_params(FamilySpec(2, 5, 4, 3)).label(239) == "[[2197,105,1719;1344]]_239"
    ea = ea_params(FamilySpec(2, 3, 2, 1))  # q = 53
    assert (ea.n, ea.kq, ea.d, ea.c) == (281, 41, 175, 108)


def test_assemble_ea_params_degenerate():
    ea = assemble_ea_params(85, 85, 1, 0)  # empty defining set
    assert (ea.n, ea.kq, ea.d, ea.c) == (85, 85, 1, 0)
    assert ea.ea_singleton_equality  # 0 = 0
    assert ea.d_within_half


def test_all_published_rows_reproduced():
    for case, rows in PUBLISHED_ROWS.items():
        for m, q, n, alpha, kq, d, c in rows:
            spec = spec_from_q(case, m, q, alpha)
            ea = ea_params(spec)
            assert (ea.n, ea.kq, ea.d, ea.c) == (n, kq, d, c), (case, m, q, alpha)
            assert ea.ea_singleton_equality


def test_quantum_dim_formula_matches_assembly():
    for spec in sweep_specs(5, 120):
        assert closed_form(spec).quantum_dim == theorem_quantum_dim(spec), spec


def test_m1_cases_1_and_3_coincide():
    # a - m = m and a - 2m = 0 at m = 1, so both forms collapse to the same codes
    specs1 = {(s.q, s.alpha): closed_form(s) for s in enumerate_admissible(1, 1, q_max=100)}
    specs3 = {(s.q, s.alpha): closed_form(s) for s in enumerate_admissible(3, 1, q_max=100)}
    assert set(specs1) == set(specs3)
    for key, cf1 in specs1.items():
        cf3 = specs3[key]
        assert (cf1.delta, cf1.c) == (cf3.delta, cf3.c), key


def test_m1_cases_2_and_4_coincide():
    # the same collapse happens for the other two forms at m = 1
    specs2 = {(s.q, s.alpha): closed_form(s) for s in enumerate_admissible(2, 1, q_max=100)}
    specs4 = {(s.q, s.alpha): closed_form(s) for s in enumerate_admissible(4, 1, q_max=100)}
    assert set(specs2) == set(specs4)
    for key, cf2 in specs2.items():
        cf4 = specs4[key]
        assert (cf2.delta, cf2.c) == (cf4.delta, cf4.c), key


def test_entanglement_count_strictly_increases_with_alpha():
    seen = 0
    for case in (1, 2, 3, 4):
        for m in (1, 3, 5):
            for base in enumerate_admissible(case, m, q_max=250):
                if base.alpha != 1 or base.k < 2:
                    continue
                cs = [closed_form(FamilySpec(case, m, base.k, alpha)).c
                      for alpha in range(1, base.k + 1)]
                assert all(x < y for x, y in zip(cs, cs[1:])), (case, m, base.k)
                seen += 1
    assert seen > 10


def test_verify_family_passes_on_table_rows():
    for case, rows in PUBLISHED_ROWS.items():
        m, q, n, alpha, *_ = rows[0]
        report = verify_family(spec_from_q(case, m, q, alpha))
        assert report.passed, report.failed_checks()
        assert report.z1_size == closed_form(report.spec).c


def test_verify_family_fault_injection():
    # a +1 run-length mutation keeps the set consecutive but breaks the
    # size, partition, and dimension-formula checks
    spec = FamilySpec(1, 1, 2, 1)  # q = 9, delta 11 < s = 20
    report = verify_family(spec, fault_delta=1)
    assert report.checks["consecutive_run"]
    assert not report.checks["defining_set_size"]
    assert not report.checks["t1_partition"]
    assert not report.checks["quantum_dim_formula"]
    assert not report.passed


def test_decomposition_matches_closed_form_sample():
    for spec in sweep_specs(3, 60):
        rec = build_defining_set(spec)
        dec = decompose(spec.n, spec.q, rec.defining_set)
        assert len(dec.z1) == closed_form(spec).c, spec
