"""Exact deciders for unit refutation completeness and propagation completeness.

Two interchangeable strategies:

* ``naive`` walks every partial assignment (3^n of them) and checks the
  defining implications directly against the semantic closure.  Used by
  default below 10 variables.
* ``primes`` checks only the critical assignments.  A formula is URC iff
  unit propagation refutes the negation of every prime implicate, and PC
  iff every prime implicate is absorbed (for each literal of the prime,
  propagation from the negated remainder derives that literal or a
  conflict).  Minimality of primes plus monotonicity of unit resolution
  make these finitely many checks equivalent to the full quantification.

Both strategies return the same verdict and a deterministic witness: the
least failing assignment under (size, sorted (variable, polarity) key).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from .cnf import Clause, CnfFormula, Literal, PartialAssignment, is_tautological, literal_key, make_clause
from .errors import LimitError, PreconditionError, TautologyError
from .propagation import UnitPropagator, all_literals
from .semantics import MODEL_LIMIT, _model_words, _select, cl_sem, entails, prime_implicates

DECIDER_LIMIT = 14
_NAIVE_MAX = 9


@dataclass(frozen=True)
class DecisionReport:
    """Verdict plus a re-checkable witness when the verdict is negative.

    For URC the witness is an assignment alpha with formula+alpha
    unsatisfiable yet not refutable by unit propagation.  For PC there is
    additionally a literal entailed by formula+alpha that unit propagation
    does not derive (and no conflict is derivable either).
    """

    verdict: bool
    witness: PartialAssignment | None = None
    literal: Literal | None = None
    method: str = ""

    def __bool__(self) -> bool:
        return self.verdict


def _witness_key(alpha: PartialAssignment):
    return (len(alpha), tuple(sorted(literal_key(lit) for lit in alpha)))


def _check_input(formula: CnfFormula, limit: int):
    if formula.tautological_clauses():
        raise TautologyError("deciders do not accept tautological clauses")
    if formula.num_vars > limit:
        raise LimitError(f"{formula.num_vars} variables exceed limit {limit} (raise --limit to override)")


def _assignments(num_vars: int):
    """All consistent partial assignments, smallest-first within the product order."""
    states = (0, 1, -1)
    for combo in product(states, repeat=num_vars):
        yield frozenset(sign * (idx + 1) for idx, sign in enumerate(combo) if sign)


def _naive_urc(formula: CnfFormula) -> DecisionReport:
    engine = UnitPropagator(formula)
    models = _model_words(formula)
    failures = []
    for alpha in _assignments(formula.num_vars):
        conflict, _, _ = engine.run(alpha)
        if conflict:
            continue
        if len(_select(models, alpha)) == 0:
            failures.append(alpha)
    if not failures:
        return DecisionReport(True, method="naive")
    witness = min(failures, key=_witness_key)
    return DecisionReport(False, witness=witness, method="naive")


def _naive_pc(formula: CnfFormula) -> DecisionReport:
    engine = UnitPropagator(formula)
    failures = []
    for alpha in _assignments(formula.num_vars):
        conflict, trail, _ = engine.run(alpha)
        if conflict:
            continue
        derived = set(trail)
        missing = [lit for lit in cl_sem(formula, alpha) if lit not in derived]
        if missing:
            failures.append((alpha, min(missing, key=literal_key)))
    if not failures:
        return DecisionReport(True, method="naive")
    alpha, lit = min(failures, key=lambda pair: (_witness_key(pair[0]), literal_key(pair[1])))
    return DecisionReport(False, witness=alpha, literal=lit, method="naive")


def _prime_urc(formula: CnfFormula, primes: CnfFormula | None = None) -> DecisionReport:
    if primes is None:
        primes = prime_implicates(formula)
    engine = UnitPropagator(formula)
    if primes.has_empty_clause():
        # unsatisfiable formula: URC iff propagation alone refutes it
        if engine.conflicts(()):
            return DecisionReport(True, method="primes")
        return DecisionReport(False, witness=frozenset(), method="primes")
    failures = []
    for prime in primes.clauses:
        alpha = frozenset(-lit for lit in prime)
        if not engine.conflicts(alpha):
            failures.append(alpha)
    if not failures:
        return DecisionReport(True, method="primes")
    return DecisionReport(False, witness=min(failures, key=_witness_key), method="primes")


def _prime_pc(formula: CnfFormula, primes: CnfFormula | None = None) -> DecisionReport:
    if primes is None:
        primes = prime_implicates(formula)
    engine = UnitPropagator(formula)
    if primes.has_empty_clause():
        conflict, trail, _ = engine.run(())
        if conflict:
            return DecisionReport(True, method="primes")
        missing = min(all_literals(formula.num_vars) - set(trail), key=literal_key)
        return DecisionReport(False, witness=frozenset(), literal=missing, method="primes")
    failures = []
    for prime in primes.clauses:
        for lit in prime:
            alpha = frozenset(-e for e in prime if e != lit)
            conflict, trail, _ = engine.run(alpha)
            if not conflict and lit not in trail:
                failures.append((alpha, lit))
    if not failures:
        return DecisionReport(True, method="primes")
    alpha, lit = min(failures, key=lambda pair: (_witness_key(pair[0]), literal_key(pair[1])))
    return DecisionReport(False, witness=alpha, literal=lit, method="primes")


def is_urc(formula: CnfFormula, limit: int = DECIDER_LIMIT, method: str = "auto") -> DecisionReport:
    """Decide unit refutation completeness over all partial assignments."""
    _check_input(formula, limit)
    if method == "auto":
        method = "naive" if formula.num_vars <= _NAIVE_MAX else "primes"
    if method == "naive":
        return _naive_urc(formula)
    if method == "primes":
        return _prime_urc(formula)
    raise ValueError(f"unknown method {method!r}")


def is_pc(formula: CnfFormula, limit: int = DECIDER_LIMIT, method: str = "auto") -> DecisionReport:
    """Decide propagation completeness over all partial assignments and literals."""
    _check_input(formula, limit)
    if method == "auto":
        method = "naive" if formula.num_vars <= _NAIVE_MAX else "primes"
    if method == "naive":
        return _naive_pc(formula)
    if method == "primes":
        return _prime_pc(formula)
    raise ValueError(f"unknown method {method!r}")


def _absorbed_by(clause: Clause, engine: UnitPropagator) -> bool:
    if not clause:
        return True
    for lit in clause:
        alpha = [-e for e in clause if e != lit]
        conflict, trail, _ = engine.run(alpha)
        if not conflict and lit not in trail:
            return False
    return True


def is_absorbed(clause: Clause, formula: CnfFormula, limit: int = MODEL_LIMIT) -> bool:
    """Absorption test: each literal of the clause is recovered by unit propagation.

    The clause must be an implicate of the formula.
    """
    clause = make_clause(clause)
    if is_tautological(clause):
        raise TautologyError("absorption is not defined for tautological clauses")
    if not entails(formula, clause, limit=limit):
        raise PreconditionError("clause is not an implicate of the formula")
    return _absorbed_by(clause, UnitPropagator(formula))


class ReductionError(PreconditionError):
    """Internal consistency failure in a greedy reducer (should not happen)."""


def _clause_order(count: int, seed: int | None) -> list[int]:
    order = list(range(count))
    if seed is not None:
        random.Random(seed).shuffle(order)
    return order


def reduce_pc_irredundant(formula: CnfFormula, seed: int | None = None, limit: int = DECIDER_LIMIT) -> CnfFormula:
    """Greedy removal of absorbed clauses from a PC formula.

    The result is a subset representing the same function that is still PC
    and from which no further clause can be removed.  The removal order is
    the input clause order, or a seed-determined permutation.
    """
    report = is_pc(formula, limit=limit)
    if not report.verdict:
        raise PreconditionError("input formula is not propagation complete")
    keep: list[Clause | None] = list(formula.clauses)

    def rest_without(idx: int) -> CnfFormula:
        rest = tuple(c for pos, c in enumerate(keep) if c is not None and pos != idx)
        return CnfFormula(rest, formula.num_vars)

    for idx in _clause_order(len(keep), seed):
        clause = keep[idx]
        if clause is None:
            continue
        if _absorbed_by(clause, UnitPropagator(rest_without(idx))):
            keep[idx] = None
    result = CnfFormula(tuple(c for c in keep if c is not None), formula.num_vars)
    if not is_pc(result, limit=limit).verdict:
        raise ReductionError("absorbed-clause removal broke propagation completeness")
    return result


def reduce_urc_irredundant(formula: CnfFormula, seed: int | None = None, limit: int = DECIDER_LIMIT) -> CnfFormula:
    """Greedy removal of clauses that keep the formula equivalent and URC."""
    report = is_urc(formula, limit=limit)
    if not report.verdict:
        raise PreconditionError("input formula is not unit refutation complete")
    primes = prime_implicates(formula)
    keep: list[Clause | None] = list(formula.clauses)

    def rest_without(idx: int) -> CnfFormula:
        rest = tuple(c for pos, c in enumerate(keep) if c is not None and pos != idx)
        return CnfFormula(rest, formula.num_vars)

    def still_urc(rest: CnfFormula) -> bool:
        engine = UnitPropagator(rest)
        if primes.has_empty_clause():
            return engine.conflicts(())
        return all(engine.conflicts(frozenset(-lit for lit in p)) for p in primes.clauses)

    for idx in _clause_order(len(keep), seed):
        clause = keep[idx]
        if clause is None:
            continue
        rest = rest_without(idx)
        if not entails(rest, clause):
            continue  # removal would change the function
        if still_urc(rest):
            keep[idx] = None
    result = CnfFormula(tuple(c for c in keep if c is not None), formula.num_vars)
    if not is_urc(result, limit=limit).verdict:
        raise ReductionError("clause removal broke unit refutation completeness")
    return result
