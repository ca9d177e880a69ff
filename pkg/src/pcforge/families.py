"""Deterministic generators for the formula families used by the test matrix.

Every generator is a pure function of its parameter: identical calls give
identical clause order and hence byte-identical DIMACS.

Variable numbering, fixed per family:

* psi_horn / psi_horn_pc (parameter m): x_1..x_m are variables 1..m,
  y_1..y_{m-1} follow, then z_1..z_{m-1}.  The declared universe is 3m+1
  variables; the three highest indices do not occur in any clause.
* psi_qhorn / psi_qhorn_pc (parameter n): x_i = i, a_i = n+i, b_i = 2n+i;
  the explicit encoding appends auxiliaries c_i = 3n+i.
* gamma variants (parameter m): a_i = i, b_i = m+i, c_i = 2m+i, d_i = 3m+i.
* parity (parameter n): inputs x_1..x_n; chain mode appends y_2..y_n as
  n+1..2n-1 (y_1 is constant-folded onto x_1).
"""

from __future__ import annotations

from itertools import combinations, product

from .cnf import Clause, CnfFormula, EncodingFormula, make_clause
from .errors import UnsatisfiableError
from .semantics import satisfiable


def gen_psi_horn(m: int) -> CnfFormula:
    """Horn formula whose smallest propagation-complete equivalent is exponential.

    2m clauses: an implication cycle on x_1..x_m and per-step side clauses
    feeding a single wide negative clause.
    """
    if m < 3:
        raise ValueError("psi_horn requires m >= 3")
    x = lambda i: i
    y = lambda i: m + i
    z = lambda i: 2 * m - 1 + i
    clauses: list = []
    for i in range(1, m):
        clauses.append([-x(i), -y(i), z(i)])
    clauses.append([-x(m)] + [-z(i) for i in range(1, m)])
    for i in range(1, m):
        clauses.append([-x(i), x(i + 1)])
    clauses.append([-x(m), x(1)])
    return CnfFormula.from_clauses(clauses, 3 * m + 1)


def psi_horn_base(m: int) -> CnfFormula:
    """The cycle-free core of psi_horn on the y/z variables (same numbering)."""
    if m < 3:
        raise ValueError("psi_horn requires m >= 3")
    y = lambda i: m + i
    z = lambda i: 2 * m - 1 + i
    clauses = [[-y(i), z(i)] for i in range(1, m)]
    clauses.append([-z(i) for i in range(1, m)])
    return CnfFormula.from_clauses(clauses, 3 * m + 1)


def psi_horn_base_primes(m: int) -> tuple[Clause, ...]:
    """All 2^(m-1) + m - 1 prime implicates of the psi_horn core, explicitly.

    The binary clauses plus, for every subset S of indices, the wide clause
    with -y_i for i in S and -z_i otherwise.
    """
    y = lambda i: m + i
    z = lambda i: 2 * m - 1 + i
    primes = [make_clause([-y(i), z(i)]) for i in range(1, m)]
    for bits in range(1 << (m - 1)):
        lits = []
        for i in range(1, m):
            if bits & (1 << (i - 1)):
                lits.append(-y(i))
            else:
                lits.append(-z(i))
        primes.append(make_clause(lits))
    return tuple(primes)


def gen_psi_horn_pc(m: int) -> CnfFormula:
    """The smallest propagation-complete equivalent of psi_horn.

    The cycle clauses plus every core prime implicate widened by -x_1:
    2^(m-1) + 2m - 1 clauses in total.
    """
    if m < 3:
        raise ValueError("psi_horn_pc requires m >= 3")
    x = lambda i: i
    clauses: list = []
    for i in range(1, m):
        clauses.append([-x(i), x(i + 1)])
    clauses.append([-x(m), x(1)])
    for prime in psi_horn_base_primes(m):
        clauses.append([-x(1)] + list(prime))
    return CnfFormula.from_clauses(clauses, 3 * m + 1)


def gen_cycle_extension(phi: CnfFormula) -> CnfFormula:
    """Attach an implication cycle of fresh variables to a satisfiable base.

    With m = |phi| clauses and p prime implicates of phi, the result has
    exactly m*p + m*(m-1) prime implicates.
    """
    m = len(phi.clauses)
    if m < 2:
        raise ValueError("cycle extension requires at least 2 clauses")
    if not satisfiable(phi):
        raise UnsatisfiableError("cycle extension requires a satisfiable base formula")
    n0 = phi.num_vars
    x = lambda i: n0 + i
    clauses: list = []
    for i in range(1, m):
        clauses.append([-x(i), x(i + 1)])
    clauses.append([-x(m), x(1)])
    for i, base_clause in enumerate(phi.clauses, start=1):
        clauses.append([-x(i)] + list(base_clause))
    return CnfFormula.from_clauses(clauses, n0 + m)


def gen_psi_qhorn(n: int) -> tuple[CnfFormula, tuple[Clause, ...]]:
    """q-Horn family that no polynomial clause set makes unit refutation complete.

    Each of a_i, b_i activates an equivalence x_i <-> x_{i+1} (negated for
    the wrap-around row), so picking one activator per row is inconsistent
    but invisible to unit propagation.  Returns the 4n-clause formula and
    the companion set of the 2^n blocking clauses, one per activator
    choice, which are exactly its prime implicates on the activator
    literals.
    """
    if n < 2:
        raise ValueError("psi_qhorn requires n >= 2")
    x = lambda i: i
    a = lambda i: n + i
    b = lambda i: 2 * n + i
    clauses: list = []
    for i in range(1, n):
        for act in (a(i), b(i)):
            clauses.append([-act, -x(i), x(i + 1)])
            clauses.append([-act, x(i), -x(i + 1)])
    for act in (a(n), b(n)):
        clauses.append([-act, -x(1), -x(n)])
        clauses.append([-act, x(1), x(n)])
    formula = CnfFormula.from_clauses(clauses, 3 * n)
    blockers = []
    for choice in product((0, 1), repeat=n):
        lits = [-(a(i) if choice[i - 1] == 0 else b(i)) for i in range(1, n + 1)]
        blockers.append(make_clause(lits))
    return formula, tuple(blockers)


def gen_psi_qhorn_pc(n: int) -> EncodingFormula:
    """Explicit propagation-complete encoding of the psi_qhorn function.

    Auxiliaries c_i collect a_i and b_i; a single wide clause forbids all
    c_i simultaneously and the equivalence rows hang off c_i: 4n+1 clauses.
    """
    if n < 2:
        raise ValueError("psi_qhorn_pc requires n >= 2")
    x = lambda i: i
    a = lambda i: n + i
    b = lambda i: 2 * n + i
    c = lambda i: 3 * n + i
    clauses: list = []
    for i in range(1, n + 1):
        clauses.append([-a(i), c(i)])
        clauses.append([-b(i), c(i)])
    clauses.append([-c(i) for i in range(1, n + 1)])
    for i in range(1, n):
        clauses.append([-c(i), -x(i), x(i + 1)])
        clauses.append([-c(i), x(i), -x(i + 1)])
    clauses.append([-c(n), -x(1), -x(n)])
    clauses.append([-c(n), x(1), x(n)])
    formula = CnfFormula.from_clauses(clauses, 4 * n)
    return EncodingFormula(formula, tuple(range(1, 3 * n + 1)), tuple(range(3 * n + 1, 4 * n + 1)))


def gamma_even_subsets(m: int) -> tuple[tuple[int, ...], ...]:
    """Non-empty even-size subsets of {1..m}, by size then lexicographically."""
    out = []
    for k in range(2, m + 1, 2):
        out.extend(combinations(range(1, m + 1), k))
    return tuple(out)


def gen_gamma(m: int, variant: str = "base") -> CnfFormula:
    """The three-way family separating irredundant URC sizes.

    base: one wide positive clause over the a_i plus m definite-Horn blocks
    (a_i -> b_i, a_i -> c_i, b_i & c_i -> d_i); 3m+1 clauses.
    prime: base plus the resolved shortcuts a_i -> d_i; 4m+1 clauses,
    propagation complete.
    dprime: base plus one blocking clause per non-empty even subset I
    (a_j outside I, d_i inside); 3m + 2^(m-1) clauses, unit refutation
    complete and URC-irredundant.
    """
    if m < 2:
        raise ValueError("gamma requires m >= 2")
    if variant not in ("base", "prime", "dprime"):
        raise ValueError(f"unknown gamma variant {variant!r}")
    a = lambda i: i
    b = lambda i: m + i
    c = lambda i: 2 * m + i
    d = lambda i: 3 * m + i
    clauses: list = [[a(i) for i in range(1, m + 1)]]
    for i in range(1, m + 1):
        clauses.append([-a(i), b(i)])
        clauses.append([-a(i), c(i)])
        clauses.append([-b(i), -c(i), d(i)])
    if variant == "prime":
        for i in range(1, m + 1):
            clauses.append([-a(i), d(i)])
    elif variant == "dprime":
        for subset in gamma_even_subsets(m):
            inside = set(subset)
            clauses.append([a(j) for j in range(1, m + 1) if j not in inside] + [d(i) for i in subset])
    return CnfFormula.from_clauses(clauses, 4 * m)


def gamma_blocking_clause(m: int, subset: tuple[int, ...]) -> Clause:
    """The dprime clause attached to one even subset."""
    inside = set(subset)
    d = lambda i: 3 * m + i
    return make_clause([j for j in range(1, m + 1) if j not in inside] + [d(i) for i in subset])


def gen_parity(n: int, mode: str = "cnf") -> CnfFormula | EncodingFormula:
    """Odd parity of n inputs.

    cnf: the canonical representation, all 2^(n-1) full-width clauses each
    excluding one even-parity point; every one of them is prime.
    encoding: the chain y_i = y_{i-1} xor x_i with y_1 folded onto x_1,
    four clauses per stage plus the unit y_n; 4(n-1)+1 clauses and n-1
    auxiliary variables, and the result is propagation complete.
    """
    if n < 2:
        raise ValueError("parity requires n >= 2")
    if mode == "cnf":
        clauses = []
        for word in range(1 << n):
            if bin(word).count("1") % 2 == 1:
                continue
            clauses.append([(v if not word & (1 << (v - 1)) else -v) for v in range(1, n + 1)])
        return CnfFormula.from_clauses(clauses, n)
    if mode == "encoding":
        y = lambda i: n + i - 1  # y_i for i >= 2
        clauses = []
        for i in range(2, n + 1):
            prev = 1 if i == 2 else y(i - 1)
            cur = y(i)
            xi = i
            clauses.append([-cur, prev, xi])
            clauses.append([-cur, -prev, -xi])
            clauses.append([cur, -prev, xi])
            clauses.append([cur, prev, -xi])
        clauses.append([y(n)])
        formula = CnfFormula.from_clauses(clauses, 2 * n - 1)
        return EncodingFormula(formula, tuple(range(1, n + 1)), tuple(range(n + 1, 2 * n)))
    raise ValueError(f"unknown parity mode {mode!r}")


def generate(family: str, parameter: int) -> CnfFormula | EncodingFormula:
    """Uniform entry point used by the command line tool."""
    if family == "psi_horn":
        return gen_psi_horn(parameter)
    if family == "psi_horn_pc":
        return gen_psi_horn_pc(parameter)
    if family == "psi_qhorn":
        return gen_psi_qhorn(parameter)[0]
    if family == "psi_qhorn_pc":
        return gen_psi_qhorn_pc(parameter)
    if family == "gamma":
        return gen_gamma(parameter, "base")
    if family == "gamma_prime":
        return gen_gamma(parameter, "prime")
    if family == "gamma_dprime":
        return gen_gamma(parameter, "dprime")
    if family == "parity_cnf":
        return gen_parity(parameter, "cnf")
    if family == "parity_enc":
        return gen_parity(parameter, "encoding")
    raise ValueError(f"unknown family {family!r}")


FAMILY_NAMES = (
    "psi_horn",
    "psi_horn_pc",
    "cycle_ext",
    "psi_qhorn",
    "psi_qhorn_pc",
    "gamma",
    "gamma_prime",
    "gamma_dprime",
    "parity_cnf",
    "parity_enc",
)


def companions(family: str, parameter: int) -> dict | None:
    """Companion test fixtures (index sets, blocking clauses) for a family."""
    if family == "psi_qhorn":
        _, blockers = gen_psi_qhorn(parameter)
        return {"u_bar": [list(clause) for clause in blockers]}
    if family == "gamma_dprime":
        return {"even_subsets": [list(s) for s in gamma_even_subsets(parameter)]}
    return None
