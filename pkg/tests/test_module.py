import itertools

import pytest
from hypothesis import given, settings, strategies as st

from modquiver import catalog
from modquiver.coloring import enumerate_colorings
from modquiver.diagram import ALTERNATIVES, builtin_link
from modquiver.linalg import kernel_count_mod_n
from modquiver.module import (
    ModuleError,
    QuandleModule,
    Ring,
    bead_matrix,
    coloring_weight,
    module_polynomial,
    parse_module,
    search_modules,
    validate_module,
)
from modquiver.quandle import Quandle, alexander_quandle, trivial_quandle
from reference import all_quandles, kernel_count_by_enumeration, module_axioms_hold

VALID_PAIRS = [("ex210", "ex210_z5"), ("q1", "ex34_z4"), ("ex35", "ex35_z3"),
               ("ex36", "ex36_z3"), ("ex37", "ex37_z6")]


def same_up_to_permutation(a, b):
    if len(a) != len(b) or len(a[0]) != len(b[0]):
        return False
    target = sorted(map(tuple, b))
    for perm in itertools.permutations(range(len(a[0]))):
        if sorted(tuple(r[j] for j in perm) for r in a) == target:
            return True
    return False


@pytest.mark.parametrize("qname,mname", VALID_PAIRS)
def test_shipped_modules_validate(qname, mname):
    q, m = catalog.load_quandle(qname), catalog.load_module(mname)
    assert validate_module(q, m).valid
    assert module_axioms_hold(q.op, m.t, m.s, m.ring.modulus)


def test_printed_ex36_module_fails_at_known_triple():
    q, m = catalog.load_quandle("ex36"), catalog.load_module("ex36_z3_printed")
    report = validate_module(q, m)
    assert not report.valid
    assert [str(v) for v in report.violations] == ["ts-exchange fails at (2,1,3)"]
    assert not module_axioms_hold(q.op, m.t, m.s, 3)


def test_diagonal_mutation_is_reported():
    q, m = catalog.load_quandle("ex210"), catalog.load_module("ex210_z5")
    s = [list(r) for r in m.s]
    s[0][0] = 3
    bad = QuandleModule(m.ring, m.t, tuple(map(tuple, s)))
    report = validate_module(q, bad)
    assert not report.valid
    assert str(report.violations[0]) == "diagonal fails at (1)"


def test_non_unit_is_reported():
    q = trivial_quandle(2)
    m = QuandleModule(Ring(4), ((2, 1), (1, 1)), ((3, 0), (0, 0)))
    assert validate_module(q, m).violations[0].axiom == "unit"


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(VALID_PAIRS), st.data())
def test_random_mutation_matches_direct_axiom_check(pair, data):
    q, m = catalog.load_quandle(pair[0]), catalog.load_module(pair[1])
    n, k = m.ring.modulus, m.size
    which = data.draw(st.sampled_from(["t", "s"]))
    x, y = data.draw(st.integers(0, k - 1)), data.draw(st.integers(0, k - 1))
    v = data.draw(st.integers(0, n - 1))
    t, s = [list(r) for r in m.t], [list(r) for r in m.s]
    (t if which == "t" else s)[x][y] = v
    mm = QuandleModule(m.ring, tuple(map(tuple, t)), tuple(map(tuple, s)))
    assert validate_module(q, mm).valid == module_axioms_hold(q.op, mm.t, mm.s, n)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
@pytest.mark.parametrize("qname", ["ex210", "ex35", "ex37"])
def test_constant_modules(qname, n):
    q = catalog.load_quandle(qname)
    for u in Ring(n).units():
        m = QuandleModule.constant(Ring(n), q.order, u)
        assert validate_module(q, m).valid


def test_search_matches_exhaustive_trivial_three_mod_two():
    q = trivial_quandle(3)
    brute = []
    for t in itertools.product(range(2), repeat=9):
        if 0 in t:
            continue  # every t entry must be a unit
        for s in itertools.product(range(2), repeat=9):
            T = tuple(t[i * 3:i * 3 + 3] for i in range(3))
            S = tuple(s[i * 3:i * 3 + 3] for i in range(3))
            if module_axioms_hold(q.op, T, S, 2):
                brute.append((T, S))
    found = [(m.t, m.s) for m in search_modules(q, 2)]
    assert sorted(found) == sorted(brute)


@pytest.mark.parametrize("op,n", [(op, n) for k, moduli in ((2, (2, 3, 4)), (3, (2,)))
                                   for op in all_quandles(k) for n in moduli])
def test_search_matches_exhaustive_small(op, n):
    q = Quandle(op)
    k = q.order
    units = Ring(n).units()
    brute = []
    for t in itertools.product(units, repeat=k * k):
        T = tuple(t[i * k:(i + 1) * k] for i in range(k))
        for s in itertools.product(range(n), repeat=k * k):
            S = tuple(s[i * k:(i + 1) * k] for i in range(k))
            if module_axioms_hold(op, T, S, n):
                brute.append((T, S))
    found = search_modules(q, n)
    assert [(m.t, m.s) for m in found] == sorted(brute)
    assert all(validate_module(q, m).valid for m in found)


def test_search_finds_printed_modules():
    for qname, mname in [("ex35", "ex35_z3"), ("ex37", "ex37_z6")]:
        q, m = catalog.load_quandle(qname), catalog.load_module(mname)
        assert m in search_modules(q, m.ring.modulus)


def test_search_respects_max_results():
    q = catalog.load_quandle("ex37")
    assert len(search_modules(q, 6, max_results=3)) == 3


def test_figure_eight_bead_matrix():
    q, m = catalog.load_quandle("ex210"), catalog.load_module("ex210_z5")
    d = builtin_link("4_1")
    target = [[4, 3, 4, 0], [1, 3, 0, 4], [2, 0, 1, 4], [0, 1, 4, 4]]
    hits = [c for c in enumerate_colorings(d, q)
            if same_up_to_permutation(bead_matrix(d, q, c, m).to_rows(), target)]
    assert hits
    for c in hits:
        assert coloring_weight(d, q, c, m) == 25


def test_trefoil_bead_matrices_mod6():
    # two colorings give kernel 18 and one gives 6
    q, m = catalog.load_quandle("ex37"), catalog.load_module("ex37_z6")
    d = builtin_link("3_1")
    weights = sorted(coloring_weight(d, q, c, m) for c in enumerate_colorings(d, q))
    assert weights == [6, 18, 18]


def test_trefoil_constant_coloring_matrices():
    q, m = catalog.load_quandle("ex37"), catalog.load_module("ex37_z6")
    d = builtin_link("3_1")
    third = bead_matrix(d, q, (2, 2, 2), m).to_rows()
    assert same_up_to_permutation(third, [[1, 0, 5], [5, 1, 0], [0, 5, 1]])
    assert coloring_weight(d, q, (2, 2, 2), m) == 6
    first = bead_matrix(d, q, (0, 0, 0), m).to_rows()
    assert same_up_to_permutation(first, [[5, 2, 5], [5, 5, 2], [2, 5, 5]])
    assert coloring_weight(d, q, (0, 0, 0), m) == 18


def test_bead_matrix_rejects_non_coloring():
    q, m = catalog.load_quandle("ex37"), catalog.load_module("ex37_z6")
    with pytest.raises(ModuleError):
        bead_matrix(builtin_link("3_1"), q, (0, 1, 2), m)


@pytest.mark.parametrize("qname,mname,link", [
    ("ex210", "ex210_z5", "3_1"), ("ex210", "ex210_z5", "4_1"),
    ("q1", "ex34_z4", "T(4,2)"), ("ex37", "ex37_z6", "L2a1"), ("ex35", "ex35_z3", "L4a1"),
])
def test_weights_match_enumerated_kernels(qname, mname, link):
    q, m = catalog.load_quandle(qname), catalog.load_module(mname)
    d = builtin_link(link)
    n = m.ring.modulus
    for c in enumerate_colorings(d, q):
        rows = bead_matrix(d, q, c, m).to_rows()
        if n ** d.arc_count > 5000:
            assert coloring_weight(d, q, c, m) == kernel_count_mod_n(bead_matrix(d, q, c, m), n)
        else:
            assert coloring_weight(d, q, c, m) == kernel_count_by_enumeration(rows, d.arc_count, n)


def test_module_polynomials():
    q, m = catalog.load_quandle("ex210"), catalog.load_module("ex210_z5")
    assert module_polynomial(builtin_link("4_1"), q, m).to_text() == "16 x^25"
    assert module_polynomial(builtin_link("3_1"), q, m).to_text() == "16 x^5"


@pytest.mark.parametrize("knot,alts", sorted(ALTERNATIVES.items()))
@pytest.mark.parametrize("qname,mname", [("ex210", "ex210_z5"), ("ex37", "ex37_z6"), ("q1", "ex34_z4")])
def test_module_polynomial_agrees_across_alternatives(knot, alts, qname, mname):
    q, m = catalog.load_quandle(qname), catalog.load_module(mname)
    base = module_polynomial(builtin_link(knot), q, m)
    for a in alts:
        assert module_polynomial(builtin_link(a), q, m) == base


def test_integer_ring_weights_are_ranks():
    q = alexander_quandle(3, 2)
    m = QuandleModule(Ring(None), ((-1,) * 3,) * 3, ((2,) * 3,) * 3)
    assert validate_module(q, m).valid
    # kernel rank of the Alexander-type matrix of the trefoil at t = -1
    p = module_polynomial(builtin_link("3_1"), q, m)
    assert p.at_one() == 9
    assert set(p.as_dict()) == {1}


def test_ring_parsing():
    assert Ring.parse("Z") == Ring(None)
    assert Ring.parse("Z_6") == Ring(6)
    assert Ring.parse("6") == Ring(6)
    assert str(Ring(6)) == "Z_6" and str(Ring()) == "Z"
    assert Ring(6).units() == [1, 5]
    for bad in ("1", "Zq", "x"):
        with pytest.raises(ModuleError):
            Ring.parse(bad)


def test_module_text_round_trip():
    m = catalog.load_module("ex37_z6")
    assert parse_module(m.to_text()) == m


@pytest.mark.parametrize("text", [
    "",
    "module 2 mod 3\n1 1\n1 1\n0 0\n",
    "module 2 mod 3\n1 1\n1 1\n0 0\n0 5\n",
    "module 2 mod 3\n1 1\n1 1 1\n0 0\n0 0\n",
    "modul 2 mod 3\n",
    "module 2 mod 3\n1 1\n1 x\n0 0\n0 0\n",
])
def test_malformed_modules(text):
    with pytest.raises(ModuleError):
        parse_module(text)


def test_module_size_mismatch():
    with pytest.raises(ModuleError):
        validate_module(catalog.load_quandle("ex37"), catalog.load_module("ex210_z5"))
