"""CNF formulas: representation, DIMACS parsing, evaluation.

Assignments are integer bitmasks: bit k-1 holds the value of variable k.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ParseError


@dataclass(frozen=True)
class CNF:
    n_vars: int
    clauses: tuple

    def __post_init__(self):
        if self.n_vars < 1:
            raise ParseError("formula needs at least one variable")
        for clause in self.clauses:
            if not clause:
                raise ParseError("empty clause")
            for lit in clause:
                if lit == 0 or abs(lit) > self.n_vars:
                    raise ParseError(f"literal {lit} out of range")


def cnf(n_vars: int, clauses) -> CNF:
    return CNF(n_vars, tuple(tuple(c) for c in clauses))


def parse_dimacs(text: str) -> CNF:
    """Parse DIMACS CNF; clauses are 0-terminated, 'c' lines are comments."""
    n_vars = None
    n_clauses = None
    lits: list[int] = []
    clauses: list[tuple] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError(f"bad problem line: {line!r}")
            n_vars, n_clauses = int(parts[2]), int(parts[3])
            continue
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise ParseError(f"bad literal {tok!r}") from None
            if lit == 0:
                if not lits:
                    raise ParseError("empty clause in DIMACS input")
                clauses.append(tuple(lits))
                lits = []
            else:
                lits.append(lit)
    if lits:
        clauses.append(tuple(lits))  # tolerate a missing final 0
    if n_vars is None:
        raise ParseError("missing 'p cnf' problem line")
    if n_clauses is not None and len(clauses) != n_clauses:
        raise ParseError(
            f"problem line promises {n_clauses} clauses, found {len(clauses)}"
        )
    return cnf(n_vars, clauses)


def to_dimacs(formula: CNF) -> str:
    lines = [f"p cnf {formula.n_vars} {len(formula.clauses)}"]
    for clause in formula.clauses:
        lines.append(" ".join(str(l) for l in clause) + " 0")
    return "\n".join(lines) + "\n"


def clause_masks(formula: CNF):
    """Per-clause (positive, negative) literal bitmasks for fast evaluation."""
    pos = np.zeros(len(formula.clauses), dtype=np.uint64)
    neg = np.zeros(len(formula.clauses), dtype=np.uint64)
    for k, clause in enumerate(formula.clauses):
        p = n = 0
        for lit in clause:
            if lit > 0:
                p |= 1 << (lit - 1)
            else:
                n |= 1 << (-lit - 1)
        pos[k] = p
        neg[k] = n
    return pos, neg


def assignment_satisfies(formula: CNF, bits: int) -> bool:
    """Direct clause-by-clause check of one assignment (certificate check)."""
    for clause in formula.clauses:
        ok = False
        for lit in clause:
            value = (bits >> (abs(lit) - 1)) & 1
            if (lit > 0) == bool(value):
                ok = True
                break
        if not ok:
            return False
    return True
