import itertools

import pytest
from hypothesis import given, settings, strategies as st

from symq.algebra import (
    RackTable,
    SymmetricQuandleTable,
    conjugation_quandle,
    cyclic_group,
    dihedral_quandle,
    double_cover,
    enumerate_good_involutions,
    identity_permutation,
    is_kei,
    load_table,
    op_inv,
    restrict,
    symmetric_group,
    table_to_json,
    table_to_text,
    trivial_quandle,
    verify_good_involution,
    verify_group,
    verify_quandle,
    verify_rack,
)
from symq.errors import MalformedTableError, SizeGuardError

import oracles


def with_rho(t, rho):
    return SymmetricQuandleTable(t, rho)


# --- verification -------------------------------------------------------------

def test_dihedral_r3_is_rack_and_quandle():
    assert verify_rack(dihedral_quandle(3))
    assert verify_quandle(dihedral_quandle(3))


def test_constant_table_fails_bijectivity():
    v = verify_rack(RackTable([[0, 0], [0, 0]]))
    assert not v
    assert v.axiom == "bijectivity"
    assert v.witness == (0,)
    assert str(v).startswith("fail bijectivity")


@pytest.mark.parametrize("n", [1, 2, 5])
def test_trivial_table_is_rack(n):
    assert verify_rack(trivial_quandle(n))


def test_idempotency_failure_reports_element():
    # x^y = x + 1 mod 2 is a rack but not a quandle
    t = RackTable([[1, 1], [0, 0]])
    assert verify_rack(t)
    v = verify_quandle(t)
    assert v.axiom == "idempotency" and v.witness == (0,)


def test_self_distributivity_failure():
    t = RackTable([[0, 2, 1], [2, 1, 1], [1, 0, 2]])
    v = verify_rack(t)
    assert not v


def test_exhaustive_lists_all_violations():
    t = RackTable([[1, 1], [0, 0]])
    assert len(verify_quandle(t, exhaustive=True).violations) == 2


@pytest.mark.parametrize("op", [[[0, 1]], [[0, 2], [1, 0]], [[0, -1], [1, 0]], [], "ab"])
def test_malformed_tables_raise(op):
    with pytest.raises(MalformedTableError):
        RackTable(op)


def test_conjugation_s3_is_quandle_not_kei():
    s3 = conjugation_quandle(symmetric_group(3))
    assert verify_quandle(s3.quandle)
    assert not is_kei(s3.quandle)
    assert verify_good_involution(s3)


def test_conjugation_s3_transposition_orbit():
    g = symmetric_group(3)
    q = conjugation_quandle(g).quandle
    perms = list(itertools.permutations(range(3)))
    transpositions = {i for i, p in enumerate(perms) if sum(p[k] != k for k in range(3)) == 2}
    orbit = {q.op[next(iter(transpositions))][y] for y in range(6)}
    assert orbit == transpositions and len(orbit) == 3


def test_conjugation_of_abelian_group_is_trivial():
    assert conjugation_quandle(cyclic_group(3)).quandle == trivial_quandle(3)


def test_op_inv_examples():
    r3 = dihedral_quandle(3)
    assert op_inv(r3, 0, 1) == 2
    assert all(op_inv(trivial_quandle(4), x, y) == x for x in range(4) for y in range(4))
    assert all(op_inv(r3, x, x) == x for x in range(3))


@pytest.mark.parametrize("n", range(1, 13))
def test_dihedral_is_kei(n):
    assert is_kei(dihedral_quandle(n))


def test_dihedral_examples():
    assert dihedral_quandle(1).op == ((0,),)
    assert dihedral_quandle(3).op[0][1] == 2
    with pytest.raises(ValueError):
        dihedral_quandle(0)


# --- good involutions ------------------------------------------------------------

def test_r3_identity_good_transposition_not():
    r3 = dihedral_quandle(3)
    assert verify_good_involution(with_rho(r3, [0, 1, 2]))
    v = verify_good_involution(with_rho(r3, [1, 0, 2]))
    assert not v and v.axiom in ("equivariance", "inverse-action")


def test_rho_not_involution_is_reported():
    v = verify_good_involution(with_rho(trivial_quandle(3), [1, 2, 0]))
    assert v.axiom == "involution"


def test_rho_not_permutation_raises():
    with pytest.raises(MalformedTableError):
        with_rho(trivial_quandle(3), [0, 0, 1])


@pytest.mark.parametrize("rho", oracles.involutions(4))
def test_trivial_quandle_every_involution_good(rho):
    assert verify_good_involution(with_rho(trivial_quandle(4), rho))


@pytest.mark.parametrize("n", [3, 5, 7])
def test_odd_dihedral_only_identity(n):
    found = enumerate_good_involutions(dihedral_quandle(n))
    assert found.items == (identity_permutation(n),)
    assert not found.truncated


def test_trivial_3_has_four():
    assert len(enumerate_good_involutions(trivial_quandle(3))) == 4


def test_limit_truncates_with_flag():
    found = enumerate_good_involutions(trivial_quandle(3), limit=2)
    assert len(found) == 2 and found.truncated
    assert not enumerate_good_involutions(trivial_quandle(3), limit=4).truncated


def test_size_guard():
    with pytest.raises(SizeGuardError):
        enumerate_good_involutions(trivial_quandle(13))
    assert len(enumerate_good_involutions(dihedral_quandle(13), max_n=13)) == 1


@pytest.mark.parametrize("n", range(1, 4))
def test_enumeration_matches_scan_on_all_small_quandles(n):
    for op in oracles.all_quandles(n):
        t = RackTable(op)
        assert list(enumerate_good_involutions(t).items) == oracles.good_involutions(op)


@pytest.mark.parametrize("t", [dihedral_quandle(n) for n in range(1, 7)]
                         + [conjugation_quandle(symmetric_group(3)).quandle, trivial_quandle(4)])
def test_enumeration_complete_and_sound(t):
    found = set(enumerate_good_involutions(t).items)
    assert found == set(oracles.good_involutions([list(r) for r in t.op]))
    assert (identity_permutation(t.n) in found) == is_kei(t)


# --- double cover -------------------------------------------------------------------

def test_double_cover_of_point_is_trivial_pair():
    d = double_cover(trivial_quandle(1))
    assert d.quandle == trivial_quandle(2)
    assert d.rho == (1, 0)


@pytest.mark.parametrize("t", [dihedral_quandle(3), dihedral_quandle(4), dihedral_quandle(5),
                               conjugation_quandle(symmetric_group(3)).quandle])
def test_double_cover_good_and_restricts(t):
    d = double_cover(t)
    assert verify_quandle(d.quandle)
    assert verify_good_involution(d)
    assert restrict(d.quandle, range(t.n)) == t
    op, rho = oracles.double_cover([list(r) for r in t.op])
    assert [list(r) for r in d.quandle.op] == op and list(d.rho) == rho


@pytest.mark.parametrize("n", range(1, 4))
def test_double_cover_of_every_small_quandle(n):
    for op in oracles.all_quandles(n):
        assert verify_good_involution(double_cover(RackTable(op)))


# --- groups ----------------------------------------------------------------------

def test_group_tables_valid():
    assert verify_group(symmetric_group(3))
    assert verify_group(cyclic_group(5))
    assert symmetric_group(3).n == 6


@pytest.mark.parametrize("g", [cyclic_group(4), symmetric_group(3)])
def test_conjugation_inversion_good(g):
    s = conjugation_quandle(g)
    assert verify_quandle(s.quandle) and verify_good_involution(s)


# --- I/O ---------------------------------------------------------------------------

@pytest.mark.parametrize("t", [dihedral_quandle(4), double_cover(dihedral_quandle(3)),
                               conjugation_quandle(symmetric_group(3))])
def test_text_and_json_round_trip(t):
    assert load_table(table_to_text(t)) == t
    assert load_table(table_to_json(t)) == t


def test_load_table_rejects_garbage():
    for text in ["", "{", '{"op": [[0, 5]]}', "0 1\n1", '{"n": 3, "op": [[0]]}']:
        with pytest.raises(MalformedTableError):
            load_table(text)


# --- properties ----------------------------------------------------------------------

small_quandles = [RackTable(op) for n in range(1, 4) for op in oracles.all_quandles(n)] + [
    dihedral_quandle(n) for n in range(4, 7)] + [conjugation_quandle(symmetric_group(3)).quandle]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(small_quandles), st.data())
def test_op_inv_inverts(t, data):
    x = data.draw(st.integers(0, t.n - 1))
    y = data.draw(st.integers(0, t.n - 1))
    assert op_inv(t, t.op[x][y], y) == x
    assert t.op[op_inv(t, x, y)][y] == x


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6), st.data())
def test_verifier_agrees_with_oracle_on_random_tables(n, data):
    op = [[data.draw(st.integers(0, n - 1)) for _ in range(n)] for _ in range(n)]
    assert bool(verify_quandle(RackTable(op))) == oracles.is_quandle(op)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(small_quandles), st.data())
def test_good_involution_verifier_agrees_with_oracle(t, data):
    rho = data.draw(st.permutations(range(t.n)))
    op = [list(r) for r in t.op]
    if all(rho[rho[i]] == i for i in range(t.n)):
        assert bool(verify_good_involution(with_rho(t, rho))) == oracles.is_good_involution(op, rho)


def test_involution_counts_of_symmetric_groups():
    counts = [len(enumerate_good_involutions(trivial_quandle(n))) for n in range(2, 6)]
    scan = [sum(1 for p in itertools.permutations(range(n)) if all(p[p[i]] == i for i in range(n)))
            for n in range(2, 6)]
    assert counts == scan == [2, 4, 10, 26]
