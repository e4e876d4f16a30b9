"""Deciding statements over a universe by exhaustive or sampled evaluation.

The exhaustive mode enumerates every relation over the universe and tries
every assignment of relations to the statement's free variables, in a
fixed canonical order, so verdicts and witnesses are deterministic.  The
sampling mode draws seeded random assignments; a sampled refutation is
definitive, but a sampled pass is only ever reported as budget-exhausted,
never as HOLDS.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import product
from typing import Any, Callable, Mapping, Sequence

from . import terms
from .universe import (
    ConstantKind,
    LatticeError,
    Relation,
    Universe,
    complement,
    constant,
    inner_join,
    inner_union,
    natural_join,
    outer_union,
)

DEFAULT_ENUM_BUDGET = 1_000_000


class EnumerationBudgetError(LatticeError):
    """The universe has more relations than the enumeration budget allows."""


class EvaluationError(LatticeError):
    """A term could not be evaluated (unbound variable, bad literal)."""


class Verdict(Enum):
    HOLDS = "HOLDS"
    REFUTED = "REFUTED"
    BUDGET_EXHAUSTED = "BUDGET_EXHAUSTED"


@dataclass(frozen=True)
class Exhaustive:
    """Try every assignment; optionally stop after max_assignments."""

    max_assignments: int | None = None


@dataclass(frozen=True)
class Sample:
    """Draw `samples` assignments from a generator seeded with `seed`."""

    seed: int
    samples: int


Mode = Exhaustive | Sample


@dataclass
class CheckReport:
    statement: str
    verdict: Verdict
    witness: dict[str, Any] | None
    witness_text: dict[str, str] | None
    assignments_tested: int
    premise_satisfying: int | None
    mode: Mode
    elapsed_ms: float

    def document(self, timing: bool = False) -> dict:
        """Structured form of the report; timing is opt-in so that
        identical runs serialize byte-identically."""
        mode: dict[str, Any] = {"kind": "exhaustive"}
        if isinstance(self.mode, Sample):
            mode = {"kind": "sample", "seed": self.mode.seed, "samples": self.mode.samples}
        doc: dict[str, Any] = {
            "statement": self.statement,
            "verdict": self.verdict.value,
            "witness": self.witness_text,
            "assignments_tested": self.assignments_tested,
            "premise_satisfying": self.premise_satisfying,
            "mode": mode,
        }
        if timing:
            doc["elapsed_ms"] = round(self.elapsed_ms, 3)
        return doc

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.document(timing), indent=2, sort_keys=True) + "\n"


def count_relations(u: Universe) -> int:
    """Number of relations over `u`: sum over headers of 2^(tuple-space size)."""
    total = 0
    for mask in range(2 ** len(u.attributes)):
        header = tuple(a for i, a in enumerate(u.attributes) if mask >> i & 1)
        total += 2 ** u.space_size(header)
    return total


@lru_cache(maxsize=32)
def enumerate_relations(u: Universe, budget: int = DEFAULT_ENUM_BUDGET) -> tuple[Relation, ...]:
    """Every relation over `u` exactly once, in canonical order.

    Headers are ordered by attribute-subset bitmask (attribute 0 is the
    low bit); bodies by subset bitmask over the lexicographically sorted
    tuple space of the header.
    """
    total = count_relations(u)
    if total > budget:
        raise EnumerationBudgetError(
            f"universe has {total} relations, over the budget of {budget}"
        )
    rels = []
    for mask in range(2 ** len(u.attributes)):
        header = tuple(a for i, a in enumerate(u.attributes) if mask >> i & 1)
        space = u.full_body(header)
        for bodymask in range(2 ** len(space)):
            body = tuple(space[i] for i in range(len(space)) if bodymask >> i & 1)
            rels.append(Relation(header, body))
    return tuple(rels)


class ConcreteOps:
    """Universe operations memoized for the duration of one check.

    The memo is deliberately scoped to a single check call; only the
    relation enumeration itself is cached across statements.
    """

    def __init__(self, u: Universe):
        self.u = u
        self._memo: dict[tuple, Relation] = {}
        self._consts = {k: constant(u, k) for k in ConstantKind}

    def const(self, kind: ConstantKind) -> Relation:
        return self._consts[kind]

    def literal(self, lit: terms.Lit) -> Relation:
        rel = self.u.relation(lit.attrs, lit.rows if lit.shape == "rows" else ())
        if lit.shape == "full":
            rel = Relation(rel.header, tuple(self.u.full_body(rel.header)))
        return rel

    def _binary(self, tag: str, fn: Callable, a: Relation, b: Relation) -> Relation:
        key = (tag, a, b)
        got = self._memo.get(key)
        if got is None:
            got = self._memo[key] = fn(self.u, a, b)
        return got

    def meet(self, a, b):
        return self._binary("^", natural_join, a, b)

    def join(self, a, b):
        return self._binary("v", inner_union, a, b)

    def star(self, a, b):
        return self._binary("*", inner_join, a, b)

    def plus(self, a, b):
        return self._binary("+", outer_union, a, b)

    def at(self, a, b):
        # y @ x is (y v R11) + x
        return self.plus(self.join(a, self.const(ConstantKind.R11)), b)

    def comp(self, a: Relation) -> Relation:
        key = ("'", a)
        got = self._memo.get(key)
        if got is None:
            got = self._memo[key] = complement(self.u, a)
        return got

    def below(self, a: Relation, b: Relation) -> bool:
        return self.meet(a, b) == a

    def binary_fn(self, op: str) -> Callable:
        return {"^": self.meet, "v": self.join, "*": self.star,
                "+": self.plus, "@": self.at}[op]


def _compile_term(t: terms.Term, var_index: Mapping[str, int], ops) -> Callable:
    """Translate a term into a closure over an assignment tuple.

    Constants and literals resolve once, at compile time, which is where
    literal validation against the active universe happens.
    """
    if isinstance(t, terms.Var):
        if t.name not in var_index:
            raise EvaluationError(f"unbound variable {t.name!r}")
        i = var_index[t.name]
        return lambda env: env[i]
    if isinstance(t, terms.Const):
        value = ops.const(t.kind)
        return lambda env: value
    if isinstance(t, terms.Lit):
        value = ops.literal(t)
        return lambda env: value
    if isinstance(t, terms.Neg):
        f = _compile_term(t.item, var_index, ops)
        comp = ops.comp
        return lambda env: comp(f(env))
    if isinstance(t, terms.Bin):
        lf = _compile_term(t.left, var_index, ops)
        rf = _compile_term(t.right, var_index, ops)
        fn = ops.binary_fn(t.op)
        return lambda env: fn(lf(env), rf(env))
    raise TypeError(f"not a term: {t!r}")


def _compile_atom(atom: terms.Atom, var_index: Mapping[str, int], ops) -> Callable:
    lf = _compile_term(atom.lhs, var_index, ops)
    rf = _compile_term(atom.rhs, var_index, ops)
    if isinstance(atom, terms.Eq):
        return lambda env: lf(env) == rf(env)
    if isinstance(atom, terms.Ne):
        return lambda env: lf(env) != rf(env)
    below = ops.below
    return lambda env: below(lf(env), rf(env))


def evaluate(u: Universe, t: terms.Term, assignment: Mapping[str, Relation]) -> Relation:
    """Evaluate a term under an assignment of relations to variables."""
    names = tuple(assignment)
    ops = ConcreteOps(u)
    fn = _compile_term(t, {n: i for i, n in enumerate(names)}, ops)
    return fn(tuple(assignment[n] for n in names))


def run_check(statement: terms.Statement, elements: Sequence, *,
              compile_atom: Callable, render: Callable[[Any], str],
              mode: Mode = Exhaustive()) -> CheckReport:
    """Generic assignment-space check over an arbitrary element carrier.

    `compile_atom(atom, var_index)` must produce a truth closure over an
    assignment tuple of elements.  Exhaustive mode walks assignments in
    canonical order (itertools.product over element indices, last variable
    fastest) and reports the first witness; implications count vacuous and
    premise-satisfying assignments separately.
    """
    start = time.perf_counter()
    var_names = terms.free_variables(statement)
    var_index = {n: i for i, n in enumerate(var_names)}

    if isinstance(statement, terms.Imp):
        premises = [compile_atom(a, var_index) for a in statement.premises]
        conclusion = compile_atom(statement.conclusion, var_index)

        def outcome(env):  # (counts_toward_premises, holds)
            if all(p(env) for p in premises):
                return True, conclusion(env)
            return False, True
        track_premises = True
    elif isinstance(statement, terms.Or):
        alts = [compile_atom(a, var_index) for a in statement.alts]

        def outcome(env):
            return False, any(a(env) for a in alts)
        track_premises = False
    else:
        truth = compile_atom(statement, var_index)

        def outcome(env):
            return False, truth(env)
        track_premises = False

    text = terms.format_statement(statement)
    tested = 0
    premise_sat = 0

    def report(verdict: Verdict, witness_env) -> CheckReport:
        witness = witness_text = None
        if witness_env is not None:
            witness = dict(zip(var_names, witness_env))
            witness_text = {n: render(e) for n, e in witness.items()}
        return CheckReport(
            statement=text,
            verdict=verdict,
            witness=witness,
            witness_text=witness_text,
            assignments_tested=tested,
            premise_satisfying=premise_sat if track_premises else None,
            mode=mode,
            elapsed_ms=(time.perf_counter() - start) * 1000.0,
        )

    if isinstance(mode, Exhaustive):
        limit = mode.max_assignments
        for env in product(elements, repeat=len(var_names)):
            if limit is not None and tested >= limit:
                return report(Verdict.BUDGET_EXHAUSTED, None)
            tested += 1
            counts, holds = outcome(env)
            if counts:
                premise_sat += 1
            if not holds:
                return report(Verdict.REFUTED, env)
        return report(Verdict.HOLDS, None)

    rng = random.Random(mode.seed)
    n = len(elements)
    for _ in range(mode.samples):
        tested += 1
        env = tuple(elements[rng.randrange(n)] for _ in var_names)
        counts, holds = outcome(env)
        if counts:
            premise_sat += 1
        if not holds:
            return report(Verdict.REFUTED, env)
    # A sampled pass is not a proof, so never HOLDS here.
    return report(Verdict.BUDGET_EXHAUSTED, None)


def check(u: Universe, statement: terms.Statement | str, mode: Mode = Exhaustive(),
          enum_budget: int = DEFAULT_ENUM_BUDGET) -> CheckReport:
    """Decide a statement over all relations of `u`."""
    if isinstance(statement, str):
        statement = terms.parse_statement(statement)
    ops = ConcreteOps(u)
    elements = enumerate_relations(u, enum_budget)
    return run_check(
        statement, elements,
        compile_atom=lambda a, vi: _compile_atom(a, vi, ops),
        render=terms.format_relation,
        mode=mode,
    )
