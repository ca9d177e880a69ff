"""Independent brute-force oracles for the test suite.

Everything here is written against the plain meaning of the definitions,
without reusing the package's engines: model sets by direct evaluation,
entailment and closures by scanning models, prime implicates by filtering
all candidate clauses, unit propagation by a quadratic fixpoint scan, and
the completeness properties by quantifying over all partial assignments.
Sizes are expected to stay small (around 8 variables or fewer).
"""

from __future__ import annotations

from itertools import product


def eval_clause(clause, word: int) -> bool:
    for lit in clause:
        var = abs(lit)
        bit = (word >> (var - 1)) & 1
        if (lit > 0) == bool(bit):
            return True
    return False


def models_brute(formula) -> list[int]:
    n = formula.num_vars
    return [w for w in range(1 << n) if all(eval_clause(c, w) for c in formula.clauses)]


def satisfiable_brute(formula) -> bool:
    return bool(models_brute(formula))


def word_matches(alpha, word: int) -> bool:
    for lit in alpha:
        bit = (word >> (abs(lit) - 1)) & 1
        if (lit > 0) != bool(bit):
            return False
    return True


def entails_brute(formula, clause) -> bool:
    return all(eval_clause(clause, w) for w in models_brute(formula))


def cl_sem_brute(formula, alpha) -> frozenset[int]:
    n = formula.num_vars
    compatible = [w for w in models_brute(formula) if word_matches(alpha, w)]
    if not compatible:
        return frozenset(range(1, n + 1)) | frozenset(-v for v in range(1, n + 1))
    out = set()
    for v in range(1, n + 1):
        values = {(w >> (v - 1)) & 1 for w in compatible}
        if values == {1}:
            out.add(v)
        elif values == {0}:
            out.add(-v)
    return frozenset(out)


def all_clauses(num_vars: int):
    """Every non-empty, non-tautological clause over the universe."""
    for combo in product((0, 1, -1), repeat=num_vars):
        clause = tuple(sign * (v + 1) for v, sign in enumerate(combo) if sign)
        if clause:
            yield tuple(sorted(clause, key=lambda l: (abs(l), l < 0)))


def primes_brute(formula) -> set[tuple[int, ...]]:
    if not satisfiable_brute(formula):
        return {()}
    implicates = [c for c in all_clauses(formula.num_vars) if entails_brute(formula, c)]
    implicate_sets = [frozenset(c) for c in implicates]
    primes = set()
    for clause, lits in zip(implicates, implicate_sets):
        if not any(other < lits for other in implicate_sets):
            primes.add(clause)
    return primes


def up_fixpoint_brute(formula, alpha):
    """(conflict, literal set) by repeated whole-formula scanning."""
    assigned = set(alpha)
    changed = True
    while changed:
        changed = False
        for clause in formula.clauses:
            if any(lit in assigned for lit in clause):
                continue
            open_lits = [lit for lit in clause if -lit not in assigned]
            if not open_lits:
                return True, assigned
            if len(open_lits) == 1:
                assigned.add(open_lits[0])
                changed = True
    return False, assigned


def all_partial_assignments(num_vars: int):
    for combo in product((0, 1, -1), repeat=num_vars):
        yield frozenset(sign * (v + 1) for v, sign in enumerate(combo) if sign)


def urc_brute(formula) -> bool:
    for alpha in all_partial_assignments(formula.num_vars):
        unsat = not any(word_matches(alpha, w) for w in models_brute(formula))
        conflict, _ = up_fixpoint_brute(formula, alpha)
        if unsat and not conflict:
            return False
    return True


def pc_brute(formula) -> bool:
    for alpha in all_partial_assignments(formula.num_vars):
        conflict, derived = up_fixpoint_brute(formula, alpha)
        if conflict:
            continue
        if not cl_sem_brute(formula, alpha) <= derived:
            return False
    return True


def qhorn_brute(formula) -> bool:
    """Exhaustive valuation search over 3^n weight choices."""
    n = formula.num_vars
    for weights in product((0, 1, 2), repeat=n):
        def doubled(lit):
            w = weights[abs(lit) - 1]
            return w if lit > 0 else 2 - w
        if all(sum(doubled(lit) for lit in clause) <= 2 for clause in formula.clauses):
            return True
    return False
