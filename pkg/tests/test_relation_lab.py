import json
import math
from collections import Counter
from fractions import Fraction

import mpmath
import pytest
from hypothesis import assume, given, strategies as st
from mpmath import mp

from logsine.indices import fibonacci
from logsine.numerics import EvalContext
from logsine.relation_lab import (
    IDENTITY_NAMES,
    ConstantExpr,
    LsDescriptor,
    NamedConstant,
    ccs_identity,
    ccs_lhs,
    clausen_constant,
    count_seq,
    express_target,
    gen_set,
    integer_relation,
    irw_dims,
    scan,
    search_relation,
    special_identity,
    sprime_product,
    table_row,
    zagier_dim,
    zeta_constant,
)

TABLES = {
    "Lo": [0, 0, 1, 3, 9, 25, 68, 182, 483, 1275, 3355],
    "Le": [1, 1, 2, 5, 12, 30, 76, 195, 504, 1309, 3410],
    "L": [1, 1, 3, 8, 21, 55, 144, 377, 987, 2584, 6765],
    "Mo": [0, 0, 1, 2, 4, 8, 16, 32, 64, 128, 256],
    "Me": [1, 1, 1, 2, 4, 8, 16, 32, 64, 128, 256],
    "M": [1, 1, 2, 4, 8, 16, 32, 64, 128, 256, 512],
    "I": [0, 0, 1, 2, 3, 4, 6, 10, 17, 28, 45],
    "R": [1, 1, 1, 1, 2, 4, 7, 11, 17, 27, 44],
    "W": [1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89],
}


def test_gen_set_examples():
    assert gen_set("Sprime", 3, 1).names == ["SLs(3)"]
    assert gen_set("Se", 4, 1).names == ["pi^4"]
    assert gen_set("Sprime", 2, 0).names == ["pi^2"]
    assert len(gen_set("Sprime", 2, 5)) == 1


def test_gen_set_members_have_the_weight():
    for kind in ("Sprime", "So", "Se", "Hoffman"):
        for w in range(2, 9):
            assert all(m.weight == w for m in gen_set(kind, w, w))


def test_ls_sets_example():
    assert len(gen_set("Lo", 1, 1)) == 0
    (only,) = gen_set("Le", 1, 1).members
    assert isinstance(only, LsDescriptor) and only.a_exponent == 0
    assert len(gen_set("Lo", 5, 5)) == 25
    assert count_seq("Mo", 10, 10) == 256
    assert count_seq("Le", 3, 3) == 5 == (fibonacci(6) + fibonacci(3)) // 2


@pytest.mark.parametrize("kind", sorted(TABLES))
def test_tables(kind):
    assert table_row(kind, 10) == TABLES[kind]


def test_fibonacci_closed_forms():
    for k in range(1, 21):
        assert count_seq("Lo", k, k) == (fibonacci(2 * k) - fibonacci(k)) // 2
        assert count_seq("Le", k, k) == (fibonacci(2 * k) + fibonacci(k)) // 2
        if k >= 2:
            assert count_seq("Mo", k, k) == count_seq("Me", k, k) == 2 ** (k - 2)


def test_enumeration_matches_counting():
    for kind in ("Lo", "Le", "Mo", "Me", "No", "Ne"):
        for k in range(0, 8):
            for d in range(0, k + 1):
                assert len(gen_set(kind, k, d)) == count_seq(kind, k, d), (kind, k, d)


def test_dimension_sequences():
    assert [zagier_dim(k) for k in (0, 1, 2, 3, 4)] == [1, 0, 1, 1, 1]
    assert irw_dims(2) == (1, 1, 2)
    assert irw_dims(10)[2] == 89
    for k in range(2, 14):
        assert count_seq("Sprime", k, k) == zagier_dim(k)
        i, r, _ = irw_dims(k)
        assert count_seq("So", k, k) == i
        assert count_seq("Se", k, k) == r


def test_constant_names_and_values():
    ctx = EvalContext(30)
    c = ConstantExpr(2, (3,))
    assert c.name == "pi^2*SLs(3)"
    assert c.weight == 5
    with ctx.workdps():
        assert abs(c.value(ctx) - mp.pi**2 * 2 * mpmath.zeta(3) / 3) < mpmath.mpf(10) ** -28
        assert abs(zeta_constant((2,)).value(ctx) - mp.pi**2 / 6) < mpmath.mpf(10) ** -28
    assert clausen_constant("Cl", (3,)).name == "Cl_3(pi/3)"


def test_integer_relation_examples():
    ctx = EvalContext(40)
    with ctx.workdps():
        z3 = mpmath.zeta(3)
        rep = integer_relation([z3, 2 * z3 / 3], 30)
        assert rep.coeffs == [2, -3]
        rep = integer_relation([mp.pi**2, mpmath.zeta(2)], 30)
        assert rep.coeffs == [1, -6]
        rep = integer_relation([mp.one, mp.pi], 40, height_bound=10**6)
        assert not rep.found
        assert float(rep.norm_bound) > 10**6 * 2**0.5


def test_search_relation_with_recheck():
    rep = search_relation([zeta_constant((3,)), ConstantExpr(0, (3,))], 30)
    assert rep.coeffs == [2, -3]
    assert rep.extra["recheck_precision"] == 60


def test_report_json_keys():
    rep = search_relation([zeta_constant((3,)), ConstantExpr(0, (3,))], 30)
    obj = json.loads(rep.to_json())
    for key in ("basis", "coeffs", "precision", "height_bound", "residual", "norm_bound"):
        assert key in obj
    assert obj["basis"] == ["zeta(3)", "SLs(3)"]


@pytest.mark.parametrize("target,kind,w,expected", [
    (zeta_constant((1, 2)), "Sprime", 3, {"SLs(3)": Fraction(3, 2)}),
    (clausen_constant("Cl", (3,)), "So", 3, {"SLs(3)": Fraction(1, 2)}),
    (clausen_constant("Gl", (2,)), "Se", 2, {"pi^2": Fraction(1, 36)}),
])
def test_express_target_examples(target, kind, w, expected):
    rep = express_target(target, gen_set(kind, w, w), 60, 10**6)
    assert rep.expression == expected


def test_scan_appends_json(tmp_path):
    out = tmp_path / "scan.jsonl"
    scan("Sprime", 4, 4, precision=40, out=str(out))
    scan("Sprime", 5, 5, precision=40, out=str(out))
    lines = [json.loads(s) for s in out.read_text().splitlines()]
    assert [d["weight"] for d in lines] == [4, 5]
    assert all(d["coeffs"] is None and d["set"] == "Sprime" for d in lines)


def test_scan_finds_trivial_relation_in_redundant_set():
    # pi^2 * SLs(3) and SLs(3) * zeta(2) are proportional, so a scan of this basis must find it
    sls3 = ConstantExpr(0, (3,))
    prod = NamedConstant("SLs(3)*zeta(2)", lambda c: sls3.value(c) * zeta_constant((2,)).value(c))
    rep = search_relation([ConstantExpr(2, (3,)), prod], 40, escalate=False)
    assert rep.coeffs == [1, -6]


def test_sprime_product():
    a, b = ConstantExpr(0, (3,)), ConstantExpr(2, (3,))
    (target,) = [g for g in gen_set("Sprime", 8, 2) if g.name == "pi^2*SLs(3,3)"]
    assert sprime_product(a, b) == Counter({target: 2})


@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_ccs(k):
    ctx = EvalContext(30)
    from logsine.numerics import combo_eval

    d = abs(combo_eval(ccs_lhs(k), "pi/3", ctx) - combo_eval(ccs_identity(k), "pi/3", ctx))
    assert d < mpmath.mpf(10) ** -25


def test_ccs_k0_is_sls3():
    # (-1)^0 SLs(3) = -1/2 (3/4)(8/9) zeta(3) + zeta(3) = 2/3 zeta(3)
    assert ccs_identity(0) == ConstantForm.two_thirds_zeta3()


class ConstantForm:
    @staticmethod
    def two_thirds_zeta3():
        from logsine.combo import SymCombo

        return SymCombo.term(Fraction(2, 3), zetas=[(3,)])


@pytest.mark.parametrize("name,params", [
    ("cl_odd", 1), ("cl_odd", 2), ("cl_even_via_sls", 0), ("cl_even_via_sls", 2),
    ("gl_bernoulli", (2, Fraction(1, 6))), ("gl_bernoulli", (5, Fraction(1, 4))),
    ("li_ones_two_ones", (0, 0)), ("li_ones_two_ones", (1, 2)), ("li_ones_two_ones", (2, 0)),
])
def test_special_identities(name, params):
    ident = special_identity(name, params)
    assert ident.discrepancy(EvalContext(30)) < mpmath.mpf(10) ** -25


def test_special_identity_errors():
    assert set(IDENTITY_NAMES) == {"cl_odd", "cl_even_via_sls", "gl_bernoulli", "li_ones_two_ones"}
    with pytest.raises(ValueError):
        special_identity("cl_odd", 0)
    with pytest.raises(ValueError):
        special_identity("nope", 1)


def test_li2_at_pi_over_3_via_sls2():
    # Li_2(e^{i pi/3}) = -i SLs(2) + pi^2/36 and SLs(2) = -Cl_2(pi/3)
    ctx = EvalContext(30)
    lhs, rhs = special_identity("li_ones_two_ones", (0, 0)).evaluate(ctx)
    with ctx.workdps():
        expected = mp.pi**2 / 36 + 1j * mpmath.clsin(2, mp.pi / 3)
        assert abs(lhs - expected) < mpmath.mpf(10) ** -25
        assert abs(rhs - expected) < mpmath.mpf(10) ** -25


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=3), st.integers(1, 50))
def test_pslq_recovers_planted_relation(head, last):
    # v_n is defined so that sum c_i v_i = 0 with c = head + [last]
    with mp.workdps(50):
        v = [mp.sqrt(p) for p in (2, 3, 5)[: len(head)]]
        v.append(-mp.fsum(c * x for c, x in zip(head, v)) / last)
        assume(abs(v[-1]) > 1e-20)
    rep = integer_relation(v, 40, height_bound=10**4)
    g = math.gcd(*head, last)
    coeffs = [c // g for c in head + [last]]
    if coeffs[next(i for i, c in enumerate(coeffs) if c)] < 0:
        coeffs = [-c for c in coeffs]
    assert rep.coeffs == coeffs


def test_count_recurrences():
    c = count_seq
    for k in range(0, 13):
        for d in range(0, k + 1):
            if k <= 2:
                assert c("Sprime", k, d) == [1, 0, 1][k]
            elif d >= 1:
                assert c("Sprime", k, d) == c("Sprime", k - 2, d) + c("Sprime", k - 3, d - 1)
            if k >= 2 and d >= 1:
                assert c("So", k, d) == c("So", k - 1, d) + c("Se", k - 2, d - 1)
                assert c("Se", k, d) == c("Se", k - 1, d) + c("So", k - 2, d - 1)
                assert c("Mo", k, d) == c("Mo", k - 1, d) + c("Me", k - 1, d - 1)
                assert c("Me", k, d) == c("Me", k - 1, d) + c("Mo", k - 1, d - 1)
            if k >= 3 and d >= 1:
                assert c("Lo", k, d) == 2 * c("Lo", k - 1, d) + c("Le", k - 1, d - 1) - c("Le", k - 2, d - 1)
                assert c("Le", k, d) == 2 * c("Le", k - 1, d) + c("Lo", k - 1, d - 1) - c("Lo", k - 2, d - 1)
    for d in range(0, 6):
        assert (c("Lo", 0, d), c("Lo", 1, d), c("Le", 0, d), c("Le", 1, d)) == (0, 0, 1, 1)
        assert (c("Lo", 2, d), c("Le", 2, d)) == (0 if d == 0 else 1, 2)
