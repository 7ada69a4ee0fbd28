"""Subset-star instances and the SAT-equivalence construction.

A subset-star instance is a star with center ``o`` and one leaf per truth
assignment of n boolean variables; a leaf continues into an infinite tail
exactly when its assignment satisfies the tail predicate (a CNF), and the
center may carry one extra infinite ray.  The fire ignites at the center,
so it is containable iff the number of infinite branches at the center is
within budget -- the graph is decided straight from the predicate and
never materialized.

``build_sat_gadget`` maps a CNF to such an instance with budget 1 and the
extra ray present, after padding the formula with one artificial variable
per clause plus one clause over all of them (which keeps satisfiability
and makes the clause count at most the variable count).  The instance is
then uncontainable exactly when the formula is satisfiable, which is what
makes the decision problem coNP-hard in this representation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cnf import CNF, assignment_satisfies, cnf
from .errors import CapExceeded, ParseError
from .graphs import StarOfSubsets, make_edge
from .instances import Instance
from .oracle import brute_force_sat, count_satisfying
from .solver import Verdict

ENUMERATION_CAP = 1 << 22
EXTRA_RAY_VERTEX = "ray:0"


@dataclass(frozen=True)
class SInstance:
    """A subset-star containment question."""

    n_vars: int
    predicate: CNF
    extra_ray: bool
    budget: int

    def __post_init__(self):
        if self.predicate.n_vars != self.n_vars:
            raise ParseError("predicate variable count mismatch")
        if self.budget < 0:
            raise ParseError("budget must be non-negative")


def leaf_name(bits: int, n_vars: int) -> str:
    """Leaf vertex id for an assignment; variable 1 is the leftmost digit."""
    return "s:" + "".join(str((bits >> k) & 1) for k in range(n_vars))


def build_sat_gadget(formula: CNF) -> SInstance:
    """Pad the formula and wrap it as a budget-1 star with an extra ray."""
    if not formula.clauses:
        raise ParseError("the construction needs a non-empty formula")
    n, m = formula.n_vars, len(formula.clauses)
    padded = cnf(
        n + m,
        list(formula.clauses) + [tuple(range(n + 1, n + m + 1))],
    )
    return SInstance(n + m, padded, extra_ray=True, budget=1)


def s_instance_from_instance(inst: Instance) -> SInstance:
    spec = inst.graph
    if not isinstance(spec, StarOfSubsets):
        raise ParseError("not a subset-star instance")
    return SInstance(spec.n_vars, cnf(spec.n_vars, spec.clauses),
                     spec.extra_ray, inst.budget)


def solve_star(inst: Instance,
               enumeration_cap: int = ENUMERATION_CAP) -> Verdict:
    """Routed entry point for subset-star instance documents."""
    if not inst.ignitions:
        return Verdict(contained=True, cut=frozenset(), min_cut_value=0)
    return solve_s_instance(s_instance_from_instance(inst), enumeration_cap)


def solve_s_instance(si: SInstance,
                     enumeration_cap: int = ENUMERATION_CAP) -> Verdict:
    """Count infinite branches at the center, stopping once over budget.

    Contained iff (satisfying assignments) + (1 if extra ray) <= budget;
    the returned cut takes the first edge of every infinite branch.
    """
    if (1 << si.n_vars) > enumeration_cap:
        raise CapExceeded(
            f"2^{si.n_vars} assignments exceed the enumeration cap "
            f"{enumeration_cap}"
        )
    extra = 1 if si.extra_ray else 0
    # budget+2 branches settle the verdict regardless of the remainder
    limit = si.budget + 2 - extra
    sats = count_satisfying(si.predicate, max(limit, 0),
                            var_cap=si.n_vars)
    rays = len(sats) + extra
    if rays > si.budget:
        return Verdict(contained=False,
                       reason="more infinite branches than budget")
    cut = set()
    for bits in sats:
        cut.add(make_edge("o", leaf_name(bits, si.n_vars)))
    if si.extra_ray:
        cut.add(make_edge("o", EXTRA_RAY_VERTEX))
    return Verdict(contained=True, cut=frozenset(cut), min_cut_value=rays)


def check_no_certificate(si: SInstance, assignments) -> bool:
    """Verify a coNP-style witness that the instance is NOT containable.

    The witness is a list of distinct assignments; it proves the verdict
    when every one satisfies the predicate and, together with the extra
    ray, they exceed the budget.  Each assignment is checked clause by
    clause in polynomial time.
    """
    seen = set()
    for bits in assignments:
        if not (0 <= bits < (1 << si.n_vars)):
            return False
        if bits in seen:
            return False
        seen.add(bits)
        if not assignment_satisfies(si.predicate, bits):
            return False
    return len(seen) + (1 if si.extra_ray else 0) > si.budget


def verify_cut_star(inst: Instance, cut,
                    enumeration_cap: int = ENUMERATION_CAP) -> bool:
    """Direct check of a proposed cut on a subset-star instance.

    Cut edges name the first edge of a branch at the center; the fire is
    contained iff every infinite branch's first edge is cut and the cut
    fits the budget.
    """
    si = s_instance_from_instance(inst)
    if not inst.ignitions:
        return True
    cut = frozenset(make_edge(u, v) for u, v in cut)
    if len(cut) > si.budget:
        return False
    if (1 << si.n_vars) > enumeration_cap:
        raise CapExceeded(
            f"2^{si.n_vars} assignments exceed the enumeration cap "
            f"{enumeration_cap}"
        )
    for e in cut:
        if "o" not in e:
            raise ParseError(f"cut edge {e!r} is not incident to the center")
    if si.extra_ray and make_edge("o", EXTRA_RAY_VERTEX) not in cut:
        return False
    for bits in count_satisfying(si.predicate, 1 << si.n_vars,
                                 var_cap=si.n_vars):
        if make_edge("o", leaf_name(bits, si.n_vars)) not in cut:
            return False
    return True


def cross_check_gadget(formula: CNF) -> bool:
    """The construction's biconditional, tested by dual enumeration.

    True iff the gadget is uncontainable exactly when the formula is
    satisfiable.
    """
    verdict = solve_s_instance(build_sat_gadget(formula))
    return (not verdict.contained) == brute_force_sat(formula)
