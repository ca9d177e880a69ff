import random

import pytest

from pcforge.cnf import CnfFormula, make_clause
from pcforge.deciders import (
    DecisionReport,
    is_absorbed,
    is_pc,
    is_urc,
    reduce_pc_irredundant,
    reduce_urc_irredundant,
)
from pcforge.errors import LimitError, PreconditionError, TautologyError
from pcforge.families import gen_gamma, gen_parity, gen_psi_horn, gen_psi_qhorn
from pcforge.propagation import up_closure
from pcforge.semantics import cl_sem, entails, equivalent, prime_implicates

from oracles import pc_brute, urc_brute


def F(clauses, num_vars=None):
    return CnfFormula.from_clauses(clauses, num_vars)


def random_formula(rng, max_vars=5, max_clauses=8):
    n = rng.randint(1, max_vars)
    clauses = [[v * rng.choice((1, -1)) for v in rng.sample(range(1, n + 1), rng.randint(1, min(3, n)))]
               for _ in range(rng.randint(1, max_clauses))]
    return CnfFormula.from_clauses(clauses, n)


DELTA = [[-1, 2], [-1, 3], [-2, -3, 4]]  # a->b, a->c, b&c->d on a,b,c,d = 1..4


def test_horn_block_is_urc():
    assert is_urc(F(DELTA, 4)).verdict


def test_qhorn_family_is_not_urc_with_activator_witness():
    formula, _ = gen_psi_qhorn(3)
    report = is_urc(formula, limit=16)
    assert not report.verdict
    assert report.witness == frozenset({4, 5, 6})
    # the witness is re-checkable: semantically inconsistent, propagation-stable
    assert cl_sem(formula, report.witness) == frozenset(l for v in range(1, 10) for l in (v, -v))
    assert not up_closure(formula, report.witness).conflict


def test_gamma_dprime_is_urc():
    assert is_urc(gen_gamma(3, "dprime"), limit=16).verdict


def test_gamma_prime_is_pc():
    assert is_pc(gen_gamma(3, "prime"), limit=16).verdict


def test_psi_horn_is_not_pc_and_witness_rechecks():
    formula = gen_psi_horn(3)
    report = is_pc(formula, limit=16)
    assert not report.verdict
    closure = up_closure(formula, report.witness)
    assert report.literal in cl_sem(formula, report.witness)
    assert not closure.conflict
    assert report.literal not in closure.literals


def test_prime_implicate_formulas_are_pc():
    rng = random.Random(41)
    checked = 0
    while checked < 20:
        formula = random_formula(rng, max_vars=5)
        primes = prime_implicates(formula)
        if primes.has_empty_clause():
            continue
        assert is_pc(primes, limit=10).verdict
        checked += 1


def test_verdicts_match_definitional_oracles():
    rng = random.Random(43)
    for _ in range(40):
        formula = random_formula(rng, max_vars=4)
        assert is_urc(formula).verdict == urc_brute(formula)
        assert is_pc(formula).verdict == pc_brute(formula)


def test_naive_and_prime_methods_agree():
    rng = random.Random(47)
    for _ in range(60):
        formula = random_formula(rng, max_vars=6)
        for decide in (is_urc, is_pc):
            naive = decide(formula, limit=10, method="naive")
            primes = decide(formula, limit=10, method="primes")
            assert naive.verdict == primes.verdict


def test_pc_implies_urc():
    rng = random.Random(53)
    for _ in range(60):
        formula = random_formula(rng, max_vars=5)
        if is_pc(formula).verdict:
            assert is_urc(formula).verdict


def test_pc_iff_closures_agree_everywhere():
    # the decider one way, the closure-equality characterization the other
    from pcforge.propagation import up_closure
    from oracles import all_partial_assignments
    rng = random.Random(97)
    for _ in range(25):
        formula = random_formula(rng, max_vars=4)
        closures_agree = all(
            up_closure(formula, alpha).literals == cl_sem(formula, alpha)
            for alpha in all_partial_assignments(formula.num_vars)
        )
        assert is_pc(formula).verdict == closures_agree


def test_decider_rejects_tautologies_and_limits():
    with pytest.raises(TautologyError):
        is_pc(F([[1, -1]], 1))
    with pytest.raises(LimitError):
        is_urc(CnfFormula((), 20), limit=14)


def test_unsatisfiable_formulas():
    # refutable by propagation: URC and PC hold
    assert is_urc(F([[1], [-1]])).verdict
    assert is_pc(F([[1], [-1]])).verdict
    # 2-CNF contradiction needs two-literal clauses, propagation never fires
    square = F([[1, 2], [1, -2], [-1, 2], [-1, -2]])
    assert not is_urc(square).verdict
    assert is_urc(square).witness == frozenset()


def test_absorbed_member_and_superclause():
    formula = F(DELTA, 4)
    assert is_absorbed(make_clause([-1, 2]), formula)
    assert is_absorbed(make_clause([-1, 2, 4]), formula)  # superclause of a member


def test_absorbed_rejects_non_implicate():
    with pytest.raises(PreconditionError):
        is_absorbed(make_clause([2]), F(DELTA, 4))


def test_shortcut_clause_is_not_absorbed_by_the_block():
    # a->d follows from the block but needs the intermediate b, c units
    formula = F(DELTA, 4)
    assert entails(formula, make_clause([-1, 4]))
    assert not is_absorbed(make_clause([-1, 4]), formula)


def test_reduce_pc_removes_absorbed_superclause():
    primes = prime_implicates(F([[1, 2], [-2, 3]]))
    padded = CnfFormula(primes.clauses + ((1, 2, 3),), primes.num_vars)
    reduced = reduce_pc_irredundant(padded, limit=10)
    assert (1, 2, 3) not in reduced.clauses
    assert is_pc(reduced, limit=10).verdict
    assert equivalent(reduced, padded)


def test_reduce_pc_keeps_parity_primes():
    primes = prime_implicates(gen_parity(3, "cnf"))
    assert reduce_pc_irredundant(primes, limit=10) == primes


def test_reduce_pc_rejects_non_pc_input():
    with pytest.raises(PreconditionError):
        reduce_pc_irredundant(gen_psi_horn(3), limit=16)


def test_reduce_pc_orders_stay_within_square_factor():
    primes = prime_implicates(gen_psi_horn(3))
    n = primes.num_vars
    first = reduce_pc_irredundant(primes, limit=16)
    second = reduce_pc_irredundant(primes, seed=99, limit=16)
    assert len(first.clauses) <= n * n * len(second.clauses)
    assert len(second.clauses) <= n * n * len(first.clauses)
    for reduced in (first, second):
        assert is_pc(reduced, limit=16).verdict
        assert equivalent(reduced, primes)


def test_reduced_output_is_irredundant():
    rng = random.Random(59)
    for _ in range(10):
        formula = random_formula(rng, max_vars=4)
        primes = prime_implicates(formula)
        if primes.has_empty_clause():
            continue
        reduced = reduce_pc_irredundant(primes, limit=10)
        for idx in range(len(reduced.clauses)):
            weaker = reduced.without(idx)
            removable = equivalent(weaker, reduced) and is_pc(weaker, limit=10).verdict
            assert not removable


def test_reduce_urc_gamma_dprime_fixed():
    for m in (2, 3):
        dprime = gen_gamma(m, "dprime")
        assert reduce_urc_irredundant(dprime, limit=16) == dprime
        assert len(dprime.clauses) == 3 * m + 2 ** (m - 1)


def test_reduce_urc_drops_redundant_resolvent():
    horn = F([[-1, 2], [-2, 3], [-1, 3]], 3)  # last clause is a resolvent
    reduced = reduce_urc_irredundant(horn, limit=10)
    assert (-1, 3) not in reduced.clauses
    assert is_urc(reduced).verdict
    assert equivalent(reduced, horn)


def test_report_is_truthy_on_pass():
    assert bool(DecisionReport(True))
    assert not bool(DecisionReport(False, witness=frozenset()))
