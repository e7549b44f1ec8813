import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import polynomials
from nullcert.certificate import AnsatzSpec, Certificate, NoSolution, SizeLimitExceeded
from nullcert.corpus import random_corpus
from nullcert.engine import (
    Infeasible,
    SparseLinearSystem,
    SparseSolution,
    accumulate_rows,
    build_linear_system,
    difference_rows,
    extract_certificate,
    make_ansatz,
    solve,
    solve_levelwise,
    solve_sparse,
    system_stats,
)
from nullcert.engine.levelwise import LevelIdentity
from nullcert.monomial import mono_rank
from nullcert.oracle import box_zero_search, dense_cert_search, verify
from nullcert.polynomial import Polynomial, PolySystem, Term, parse_poly, poly_mul, system
from nullcert.scalar import ONE, ZERO, gq


def g_strs(cert):
    return [str(g) for g in cert.g]


def dense_rows(sys, ansatz):
    """Independent assembly: multiply each f_i by each basis monomial."""
    rows = {}
    for i, (f, basis) in enumerate(zip(sys.polys, ansatz.bases)):
        for beta in basis:
            shifted = poly_mul(f, Polynomial(sys.n, (Term(ONE, beta),)))
            for c, m in shifted.terms:
                rows.setdefault(m, {})[(i, beta)] = c
    return rows


# --- system_stats ------------------------------------------------------------

def test_stats_pair():
    st_ = system_stats(system(1, "z1", "z1 - 1"))
    assert (st_.k, st_.m_sigma, st_.d) == (2, 3, (1,))
    assert st_.m_i == (1, 2)


def test_stats_two_variables():
    st_ = system_stats(system(2, "z1*z2^2 + z1"))
    assert st_.d == (1, 2)
    assert st_.N_level == (mono_rank((1,)),) == (2,)
    # distinct (z1-part, z2-exponent) pairs: (z1, 2) and (z1, 0)
    assert st_.m_sigma_level == (2,)


def test_stats_constant():
    st_ = system_stats(system(3, "1"))
    assert st_.m_sigma == 1 and st_.d == (0, 0, 0) and st_.N_level == (1, 1)


# --- make_ansatz ----------------------------------------------------------------

def test_paper_rank_univariate():
    a = make_ansatz(system(1, "z1", "z1 - 1"), "paper-rank")
    assert a.bases == (((0,), (1,)), ((0,), (1,)))


def test_total_degree_zero_and_one():
    sys = system(2, "z1*z2 - 1", "z2")
    assert make_ansatz(sys, "total-degree", degree=0).bases == (((0, 0),),) * 2
    assert make_ansatz(sys, "total-degree", degree=1).bases[0] == ((0, 0), (1, 0), (0, 1))


def test_paper_rank_respects_level_bounds():
    sys = system(3, "z1^2*z2*z3 + z2^2", "z3 - 1")
    stats = system_stats(sys)
    basis = make_ansatz(sys, "paper-rank").bases[0]
    for m in basis:
        for ell in (1, 2):
            assert mono_rank(m[:ell]) <= stats.N_level[ell - 1]
        assert m[2] <= stats.d[2]
    assert len(set(basis)) == len(basis)
    assert list(basis) == sorted(basis, key=mono_rank)


def test_per_variable_and_brownawell():
    sys = system(2, "z1^2 + z2", "z1*z2")
    a = make_ansatz(sys, "per-variable", caps=(1, 2))
    assert set(a.bases[0]) == {(i, j) for i in range(2) for j in range(3)}
    b = make_ansatz(sys, "brownawell")
    assert b.degree == 4
    with pytest.raises(SizeLimitExceeded) as exc:
        make_ansatz(system(3, "z1^3 + z2", "z3"), "brownawell")
    assert exc.value.size == 27
    with pytest.raises(ValueError):
        make_ansatz(sys, "total-degree")


# --- build_linear_system ---------------------------------------------------------

def test_build_pair_degree_zero():
    sys = system(1, "z1", "z1 - 1")
    lin = build_linear_system(sys, make_ansatz(sys, "total-degree", degree=0))
    assert lin.row_monos == ((0,), (1,))
    assert lin.cols == ((0, (0,)), (1, (0,)))
    assert lin.rows[0] == {1: gq(-1)}
    assert lin.rows[1] == {0: gq(1), 1: gq(1)}
    assert lin.rhs == (ONE, ZERO)
    dense = dense_rows(sys, make_ansatz(sys, "total-degree", degree=0))
    assert dense[(0,)] == {(1, (0,)): gq(-1)}


def test_build_constant():
    sys = system(1, "1")
    lin = build_linear_system(sys, make_ansatz(sys, "total-degree", degree=0))
    assert lin.rows == ({0: ONE},) and lin.rhs == (ONE,)


def test_build_row_count_matches_dense():
    sys = system(1, "z1^2", "z1 - 1")
    a = make_ansatz(sys, "total-degree", degree=2)
    lin = build_linear_system(sys, a)
    assert len(lin.rows) == len(dense_rows(sys, a)) == 5


@settings(max_examples=40, deadline=None)
@given(st.lists(polynomials(2, max_terms=3), min_size=1, max_size=3), st.integers(0, 2))
def test_row_column_bijection(polys, D):
    sys = PolySystem(2, tuple(polys))
    a = make_ansatz(sys, "total-degree", degree=D)
    lin = build_linear_system(sys, a)
    dense = dense_rows(sys, a)
    got = {}
    for mu, row in zip(lin.row_monos, lin.rows):
        for c, v in row.items():
            got.setdefault(mu, {})[lin.cols[c]] = v
    assert got == dense
    assert lin.row_monos[0] == (0, 0)
    assert set(lin.row_monos) - {(0, 0)} == set(dense) - {(0, 0)}


# --- solve_sparse -----------------------------------------------------------------

def _lin(rows, rhs, ncols, n=1):
    return SparseLinearSystem(
        n=n,
        row_monos=tuple((r,) for r in range(len(rows))),
        cols=tuple((c, (0,)) for c in range(ncols)),
        rows=tuple(rows),
        rhs=tuple(rhs),
    )


def test_solve_sparse_pair():
    lin = _lin([{1: gq(-1)}, {0: ONE, 1: ONE}], [ONE, ZERO], 2)
    sol = solve_sparse(lin)
    assert sol.values == (gq(1), gq(-1))
    assert lin.residual(sol.values) == [ZERO, ZERO]


def test_solve_sparse_inconsistent():
    assert solve_sparse(_lin([{}], [ONE], 1)) == Infeasible(1)
    assert solve_sparse(_lin([{0: ONE}, {0: gq(2)}], [ONE, ONE], 1)) == Infeasible(2)


def test_solve_sparse_unconstrained_unknown_zeroed():
    sol = solve_sparse(_lin([{0: gq(3)}], [ONE], 2))
    assert sol.values == (gq("1/3"), ZERO)
    assert sol.zeroed == (1,)


@pytest.mark.parametrize("rule", ["paper-tuple", "markowitz"])
def test_solve_sparse_rules_agree_on_feasibility(rule):
    for s in random_corpus(7, 40, max_n=2):
        lin = build_linear_system(s, make_ansatz(s, "paper-rank"))
        a = solve_sparse(lin, "paper-tuple")
        b = solve_sparse(lin, rule)
        assert isinstance(a, Infeasible) == isinstance(b, Infeasible)
        if isinstance(b, SparseSolution):
            assert all(not r for r in lin.residual(b.values))


# --- extract_certificate ------------------------------------------------------------

def test_extract_certificate_direct():
    sys = system(1, "z1", "z1 - 1")
    a = make_ansatz(sys, "total-degree", degree=0)
    cert = extract_certificate(SparseSolution((ONE, gq(-1)), (), (1, 0)), a, sys)
    assert g_strs(cert) == ["1", "-1"]
    zero = extract_certificate(SparseSolution((ZERO, ZERO), (0, 1), ()), a, sys)
    assert all(g.is_zero() for g in zero.g)
    assert not verify(sys, zero).is_zero


def test_extract_certificate_square():
    sys = system(1, "z1^2", "z1 - 1")
    out = solve(sys, "macaulay", "paper-rank")
    assert g_strs(out) == ["1", "-1 - z1"]
    assert verify(sys, out).is_zero


# --- accumulate_rows ----------------------------------------------------------------

def _ident(terms, rhs):
    return LevelIdentity(tuple(sorted(terms.items())), Polynomial.constant(1, rhs))


def test_accumulate_rhs():
    s = (_ident({(0, 0, 0): 1}, 1), _ident({(0, 1, 0): 1, (0, 0, 1): 1}, 0), _ident({(0, 1, 1): 1}, 0))
    acc = accumulate_rows(s)
    assert [str(i.rhs) for i in acc] == ["1", "1", "1"]
    assert acc[2].term_dict() == {(0, 0, 0): 1, (0, 1, 0): 1, (0, 0, 1): 1, (0, 1, 1): 1}


def test_accumulate_single():
    s = (_ident({(0, 0, 0): 1}, 1),)
    assert accumulate_rows(s) == s


@given(st.lists(st.tuples(st.dictionaries(st.tuples(st.integers(0, 2), st.integers(0, 3), st.integers(0, 3)),
                                          st.integers(-3, 3), max_size=4), st.integers(-3, 3)),
                min_size=1, max_size=5))
def test_accumulate_round_trip(raw):
    s = tuple(LevelIdentity(tuple(sorted((t, m) for t, m in d.items() if m)), Polynomial.constant(1, r))
              for d, r in raw)
    assert difference_rows(accumulate_rows(s)) == s


# --- solve_levelwise / solve ------------------------------------------------------------

def test_levelwise_examples():
    cert = solve_levelwise(system(1, "z1", "z1 - 1"))
    assert isinstance(cert, Certificate) and g_strs(cert) == ["1", "-1"]
    out = solve_levelwise(system(1, "z1"))
    assert isinstance(out, NoSolution)
    assert out.headline == "No solution at Level 1, Equation 1"
    assert out.conclusive
    assert g_strs(solve_levelwise(system(1, "1"))) == ["1"]


def test_levelwise_no_constant_term_multivariate():
    out = solve_levelwise(system(3, "z1*z2 + z3", "z2^2*z3"))
    assert out.headline == "No solution at Level 1, Equation 1"


def test_levelwise_records_zeroed_with_full_monomials():
    cert = solve_levelwise(system(2, "z1*z2 - 1", "z1"))
    assert isinstance(cert, Certificate)
    assert all(name.startswith("b") and name.count(",") == 1 for name in cert.zeroed_params)


def test_solve_examples():
    sq = solve(system(1, "z1^2", "z1 - 1"), "macaulay", "paper-rank")
    assert g_strs(sq) == ["1", "-1 - z1"]
    unit = solve(system(1, "1", "z1"))
    assert g_strs(unit) == ["1", "0"]
    root = system(1, "z1^2 + 1", "z1 - i")
    assert box_zero_search(root, 1) is not None
    for strategy in ("macaulay", "levelwise", "auto"):
        for kind, kw in [("paper-rank", {}), ("total-degree", {"degree": 3}), ("brownawell", {})]:
            assert isinstance(solve(root, strategy, kind, **kw), NoSolution)


def test_non_constant_single_poly():
    out = solve(system(2, "2 + z1*z2"), "auto")
    assert isinstance(out, NoSolution)


def test_constant_single_poly_shortcut():
    cert = solve(system(2, "3/2 + 0*z1"), "levelwise")
    assert g_strs(cert) == ["2/3"]


def test_determinism():
    s = random_corpus(11, 30)
    a = [solve(x, "auto") for x in s]
    b = [solve(x, "auto") for x in s]
    assert a == b


def test_conclusive_levelwise_failure_is_real():
    for s in random_corpus(5, 150):
        lw = solve_levelwise(s)
        flat = solve(s, "macaulay")
        if isinstance(lw, NoSolution) and lw.conclusive:
            assert isinstance(flat, NoSolution)
        if isinstance(lw, Certificate):
            assert isinstance(flat, Certificate)


def test_auto_escalates_on_dead_end():
    escalated = 0
    for s in random_corpus(5, 200):
        lw = solve_levelwise(s)
        if isinstance(lw, NoSolution) and not lw.conclusive:
            auto = solve(s, "auto")
            flat = solve(s, "macaulay")
            assert type(auto) is type(flat)
            escalated += 1
    assert escalated > 0


@settings(max_examples=40, deadline=None)
@given(st.lists(polynomials(2, max_terms=3, max_exp=2), min_size=1, max_size=3), st.integers(0, 3))
def test_macaulay_matches_dense(polys, D):
    sys = PolySystem(2, tuple(polys))
    flat = solve(sys, "macaulay", "total-degree", degree=D)
    dense = dense_cert_search(sys, D)
    assert isinstance(flat, Certificate) == (dense is not None)


@settings(max_examples=30, deadline=None)
@given(st.lists(polynomials(2, max_terms=3, max_exp=2), min_size=1, max_size=3))
def test_zero_implies_infeasible(polys):
    sys = PolySystem(2, tuple(polys))
    if box_zero_search(sys, 1) is None:
        return
    for strategy in ("macaulay", "levelwise", "auto"):
        assert isinstance(solve(sys, strategy), NoSolution)
