"""Abstract finite models of the lattice signature, and a model finder.

A FiniteModel interprets {^, v, ', R00, R11} over a carrier {0..n-1} via
operation tables.  The other operations and constants are derived, never
stored: * and + through their defining identities, @ through its
definition, R10 as R11 ^ R00 and R01 as R11 v R00.  This keeps the
searched signature minimal.

The searcher is a Mace4-style backtracking search over table cells with
ground-instance constraint propagation and first-available-value
ordering.  Goals follow countermodel semantics: a returned model must
*falsify* every goal, so goal variables are skolemized into fresh
constant cells and the negated goal becomes ground constraints.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Mapping, Sequence

from . import terms
from .checker import (
    CheckReport,
    Exhaustive,
    Mode,
    Verdict,
    _compile_atom,
    enumerate_relations,
    run_check,
    DEFAULT_ENUM_BUDGET,
)
from .terms import Bin, Const, Eq, Imp, Lit, Lt, Ne, Neg, Or, Statement, Term, Var
from .universe import ConstantKind, LatticeError, Universe, constant


class ModelError(LatticeError):
    """Malformed model, or a statement outside the model signature."""


@dataclass(frozen=True)
class FiniteModel:
    """Carrier {0..size-1} with meet/join/complement tables and two constants."""

    size: int
    meet: tuple[tuple[int, ...], ...]
    join: tuple[tuple[int, ...], ...]
    comp: tuple[int, ...]
    r00: int
    r11: int

    def __post_init__(self) -> None:
        n = self.size
        if n <= 0:
            raise ModelError("carrier must be nonempty")
        for name, table in (("meet", self.meet), ("join", self.join)):
            if len(table) != n or any(len(row) != n for row in table):
                raise ModelError(f"{name} table must be {n}x{n}")
            if any(not (0 <= x < n) for row in table for x in row):
                raise ModelError(f"{name} table entry out of carrier range")
        if len(self.comp) != n or any(not (0 <= x < n) for x in self.comp):
            raise ModelError("complement table must map the carrier into itself")
        if not (0 <= self.r00 < n and 0 <= self.r11 < n):
            raise ModelError("constant out of carrier range")

    @property
    def r10(self) -> int:
        return self.meet[self.r11][self.r00]

    @property
    def r01(self) -> int:
        return self.join[self.r11][self.r00]

    def relabel(self, perm: Sequence[int]) -> "FiniteModel":
        """Apply a carrier permutation: element i becomes perm[i]."""
        n = self.size
        if sorted(perm) != list(range(n)):
            raise ModelError("relabeling must be a permutation of the carrier")
        inv = [0] * n
        for old, new in enumerate(perm):
            inv[new] = old
        remap2 = lambda t: tuple(
            tuple(perm[t[inv[i]][inv[j]]] for j in range(n)) for i in range(n)
        )
        return FiniteModel(
            size=n,
            meet=remap2(self.meet),
            join=remap2(self.join),
            comp=tuple(perm[self.comp[inv[i]]] for i in range(n)),
            r00=perm[self.r00],
            r11=perm[self.r11],
        )


class ModelOps:
    """Adapter giving table-driven semantics to the checker engine."""

    def __init__(self, m: FiniteModel):
        self.m = m
        n = m.size
        mt, jn, r00, r11 = m.meet, m.join, m.r00, m.r11
        rng = range(n)
        # Derived tables, computed once per model from the definitions.
        self.star = tuple(
            tuple(mt[jn[a][mt[b][r00]]][jn[b][mt[a][r00]]] for b in rng) for a in rng
        )
        self.plus = tuple(
            tuple(jn[mt[a][jn[b][r11]]][mt[b][jn[a][r11]]] for b in rng) for a in rng
        )

    def const(self, kind: ConstantKind) -> int:
        return {
            ConstantKind.R00: self.m.r00,
            ConstantKind.R11: self.m.r11,
            ConstantKind.R10: self.m.r10,
            ConstantKind.R01: self.m.r01,
        }[kind]

    def literal(self, lit: Lit) -> int:
        raise ModelError("relation literals have no interpretation in an abstract model")

    def comp(self, a: int) -> int:
        return self.m.comp[a]

    def below(self, a: int, b: int) -> bool:
        return self.m.meet[a][b] == a

    def binary_fn(self, op: str):
        if op == "^":
            table = self.m.meet
        elif op == "v":
            table = self.m.join
        elif op == "*":
            table = self.star
        elif op == "+":
            table = self.plus
        else:  # "@": y @ x = (y v R11) + x
            jn, plus, r11 = self.m.join, self.plus, self.m.r11
            return lambda a, b: plus[jn[a][r11]][b]
        return lambda a, b: table[a][b]


def verify_model(m: FiniteModel, statements: Sequence[Statement | str],
                 mode: Mode = Exhaustive()) -> list[CheckReport]:
    """Check each statement over all carrier assignments of `m`."""
    ops = ModelOps(m)
    elements = tuple(range(m.size))
    out = []
    for s in statements:
        if isinstance(s, str):
            s = terms.parse_statement(s)
        out.append(run_check(
            s, elements,
            compile_atom=lambda a, vi: _compile_atom(a, vi, ops),
            render=str,
            mode=mode,
        ))
    return out


def find_counterexample(m: FiniteModel, statement: Statement | str) -> dict[str, int] | None:
    """First refuting carrier assignment in index order, or None."""
    report = verify_model(m, [statement])[0]
    return report.witness if report.verdict is Verdict.REFUTED else None


def model_from_universe(u: Universe, budget: int = DEFAULT_ENUM_BUDGET) -> FiniteModel:
    """Abstract the concrete semantics of `u` into operation tables.

    The carrier is the canonical relation enumeration; tables are computed
    by applying the concrete operations to every pair.
    """
    from .universe import complement as comp_op, inner_union, natural_join

    rels = enumerate_relations(u, budget)
    index = {r: i for i, r in enumerate(rels)}
    meet = tuple(
        tuple(index[natural_join(u, a, b)] for b in rels) for a in rels
    )
    join = tuple(
        tuple(index[inner_union(u, a, b)] for b in rels) for a in rels
    )
    comp = tuple(index[comp_op(u, a)] for a in rels)
    return FiniteModel(
        size=len(rels),
        meet=meet,
        join=join,
        comp=comp,
        r00=index[constant(u, ConstantKind.R00)],
        r11=index[constant(u, ConstantKind.R11)],
    )


# --- model files -------------------------------------------------------------

def format_model(m: FiniteModel) -> str:
    """Bit-exact text format: size, meet/join/complement blocks, constants."""
    lines = [f"size {m.size}", "meet:"]
    lines += [" ".join(str(x) for x in row) for row in m.meet]
    lines.append("join:")
    lines += [" ".join(str(x) for x in row) for row in m.join]
    lines.append("complement:")
    lines.append(" ".join(str(x) for x in m.comp))
    lines.append(f"R00 = {m.r00}")
    lines.append(f"R11 = {m.r11}")
    return "\n".join(lines) + "\n"


def parse_model(text: str) -> FiniteModel:
    toks: list[str] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            toks.extend(line.replace("=", " = ").split())
    pos = 0

    def take() -> str:
        nonlocal pos
        if pos >= len(toks):
            raise ModelError("unexpected end of model file")
        tok = toks[pos]
        pos += 1
        return tok

    def expect(word: str) -> None:
        got = take()
        if got != word:
            raise ModelError(f"expected {word!r}, found {got!r}")

    def number() -> int:
        tok = take()
        try:
            return int(tok)
        except ValueError:
            raise ModelError(f"expected an integer, found {tok!r}") from None

    expect("size")
    n = number()
    expect("meet:")
    meet = tuple(tuple(number() for _ in range(n)) for _ in range(n))
    expect("join:")
    join = tuple(tuple(number() for _ in range(n)) for _ in range(n))
    expect("complement:")
    comp = tuple(number() for _ in range(n))
    expect("R00")
    expect("=")
    r00 = number()
    expect("R11")
    expect("=")
    r11 = number()
    if pos != len(toks):
        raise ModelError(f"trailing content in model file: {toks[pos]!r}")
    return FiniteModel(size=n, meet=meet, join=join, comp=comp, r00=r00, r11=r11)


def load_model(path: str) -> FiniteModel:
    with open(path, encoding="utf-8") as fh:
        return parse_model(fh.read())


def pretty_model(m: FiniteModel) -> str:
    """Aligned operation tables for human reading."""
    n = m.size
    w = max(2, len(str(n - 1)) + 1)
    header = " ".join(f"{j:>{w}}" for j in range(n))

    def grid(sym: str, table) -> list[str]:
        out = [f"{sym:>{w}} |{header}", f"{'-' * w}-+{'-' * (len(header) + 1)}"]
        for i, row in enumerate(table):
            out.append(f"{i:>{w}} | " + " ".join(f"{x:>{w}}" for x in row).lstrip())
        out.append("")
        return out

    comp_label = "x'"
    lines = grid("^", m.meet) + grid("v", m.join)
    lines.append(f"{'x':>{w}} |{header}")
    lines.append(f"{'-' * w}-+{'-' * (len(header) + 1)}")
    lines.append(f"{comp_label:>{w}} | " + " ".join(f"{x:>{w}}" for x in m.comp).lstrip())
    lines.append("")
    lines.append(f"R00 = {m.r00}")
    lines.append(f"R11 = {m.r11}")
    lines.append(f"R10 = {m.r10}  (R11 ^ R00)")
    lines.append(f"R01 = {m.r01}  (R11 v R00)")
    return "\n".join(lines) + "\n"


# --- model search ------------------------------------------------------------

class ModelSearchError(LatticeError):
    """Unusable axiom/goal set for the searcher."""


@dataclass
class SearchOutcome:
    model: FiniteModel | None
    size: int | None
    sizes_excluded: tuple[int, ...]
    nodes: int
    elapsed_ms: float
    budget_exhausted: bool = False

    @property
    def found(self) -> bool:
        return self.model is not None


_R00_TERM = Const(ConstantKind.R00)
_R11_TERM = Const(ConstantKind.R11)


def _core_term(t: Term) -> Term:
    """Rewrite a term into the stored signature {^, v, ', R00, R11}."""
    if isinstance(t, Var):
        return t
    if isinstance(t, Const):
        if t.kind is ConstantKind.R10:
            return Bin("^", _R11_TERM, _R00_TERM)
        if t.kind is ConstantKind.R01:
            return Bin("v", _R11_TERM, _R00_TERM)
        return t
    if isinstance(t, Lit):
        raise ModelSearchError("relation literals are outside the search signature")
    if isinstance(t, Neg):
        return Neg(_core_term(t.item))
    if isinstance(t, Bin):
        a, b = _core_term(t.left), _core_term(t.right)
        if t.op == "^" or t.op == "v":
            return Bin(t.op, a, b)
        if t.op == "*":
            return Bin("^", Bin("v", a, Bin("^", b, _R00_TERM)),
                       Bin("v", b, Bin("^", a, _R00_TERM)))
        if t.op == "+":
            return Bin("v", Bin("^", a, Bin("v", b, _R11_TERM)),
                       Bin("^", b, Bin("v", a, _R11_TERM)))
        # y @ x = (y v R11) + x
        return _core_term(Bin("+", Bin("v", t.left, _R11_TERM), t.right))
    raise TypeError(f"not a term: {t!r}")


# postfix opcodes
_PUSH_ELEM, _PUSH_CELL, _APPLY, _COMP = 0, 1, 2, 3
# evaluation outcomes
_VALUE, _BLOCK_ROOT, _BLOCK = 0, 1, 2


class _SizeSearch:
    """Backtracking table search at one fixed carrier size."""

    def __init__(self, size: int, axioms: Sequence[terms.Atom],
                 goals: Sequence[Statement], symmetry: bool):
        self.n = n = size
        self.symmetry = symmetry
        self.cell_r00 = 0
        self.cell_r11 = 1
        self.skolems: list[int] = []
        next_cell = 2
        self.skolem_of: dict[tuple[int, str], int] = {}
        for gi, g in enumerate(goals):
            for name in terms.free_variables(g):
                self.skolem_of[(gi, name)] = next_cell
                self.skolems.append(next_cell)
                next_cell += 1
        self.comp_base = next_cell
        self.meet_base = self.comp_base + n
        self.join_base = self.meet_base + n * n
        self.ncells = self.join_base + n * n

        self.val = [-1] * self.ncells
        self.forbid = [0] * self.ncells
        self.full_mask = (1 << n) - 1
        # largest argument index inherent to each cell (constants: -1)
        self.args_max = [-1] * self.ncells
        for a in range(n):
            self.args_max[self.comp_base + a] = a
            for b in range(n):
                m = a if a > b else b
                self.args_max[self.meet_base + a * n + b] = m
                self.args_max[self.join_base + a * n + b] = m

        self.watch: list[set[int]] = [set() for _ in range(self.ncells)]
        self.inst_lhs: list[tuple] = []
        self.inst_rhs: list[tuple] = []
        self.inst_eq: list[bool] = []
        self.trivially_unsat = False
        self._seen_instances: set = set()

        for ax in axioms:
            self._ground_atom(ax, gi=None, positive=True)
        for gi, g in enumerate(goals):
            self._add_negated_goal(gi, g)

        self.order = self._branch_order()
        self.trail: list[tuple] = []
        self.max_seen = -1
        self.nodes = 0

    # ----- compilation

    def _branch_order(self) -> list[int]:
        order = [self.cell_r00, self.cell_r11] + list(self.skolems)
        n = self.n
        for radius in range(n):
            order.append(self.comp_base + radius)
            pairs = [(i, radius) for i in range(radius)] + \
                    [(radius, j) for j in range(radius + 1)]
            for i, j in pairs:
                order.append(self.meet_base + i * n + j)
                order.append(self.join_base + i * n + j)
        return order

    def _compile(self, t: Term, env: Mapping[str, tuple], out: list) -> None:
        if isinstance(t, Var):
            out.append(env[t.name])
        elif isinstance(t, Const):
            # R10/R01 were rewritten away by _core_term
            cell = {ConstantKind.R00: self.cell_r00,
                    ConstantKind.R11: self.cell_r11}[t.kind]
            out.append((_PUSH_CELL, cell))
        elif isinstance(t, Neg):
            self._compile(t.item, env, out)
            out.append((_COMP, self.comp_base))
        elif isinstance(t, Bin):
            self._compile(t.left, env, out)
            self._compile(t.right, env, out)
            base = self.meet_base if t.op == "^" else self.join_base
            out.append((_APPLY, base))
        else:
            raise ModelSearchError(f"term {t!r} is outside the search signature")

    def _program(self, t: Term, env: Mapping[str, tuple]) -> tuple:
        out: list = []
        self._compile(_core_term(t), env, out)
        return tuple(out)

    def _add_instance(self, lhs: tuple, rhs: tuple, is_eq: bool) -> None:
        if lhs == rhs:
            if not is_eq:
                self.trivially_unsat = True
            return
        key = (is_eq, lhs, rhs) if lhs <= rhs else (is_eq, rhs, lhs)
        if key in self._seen_instances:
            return
        self._seen_instances.add(key)
        self.inst_lhs.append(lhs)
        self.inst_rhs.append(rhs)
        self.inst_eq.append(is_eq)

    def _atom_sides(self, atom: terms.Atom) -> tuple[Term, Term, bool]:
        """(lhs, rhs, is_equation) with order assertions turned into equations."""
        if isinstance(atom, Lt):
            return Bin("^", atom.lhs, atom.rhs), atom.lhs, True
        return atom.lhs, atom.rhs, isinstance(atom, Eq)

    def _ground_atom(self, atom: terms.Atom, gi: int | None, positive: bool,
                     fixed_env: Mapping[str, tuple] | None = None) -> None:
        lhs_t, rhs_t, is_eq = self._atom_sides(atom)
        if not positive:
            is_eq = not is_eq
        names = terms.free_variables(atom)
        if fixed_env is not None:
            env = dict(fixed_env)
            self._add_instance(self._program(lhs_t, env), self._program(rhs_t, env), is_eq)
            return
        if gi is not None:
            env = {name: (_PUSH_CELL, self.skolem_of[(gi, name)]) for name in names}
            self._add_instance(self._program(lhs_t, env), self._program(rhs_t, env), is_eq)
            return
        for combo in product(range(self.n), repeat=len(names)):
            env = {name: (_PUSH_ELEM, e) for name, e in zip(names, combo)}
            self._add_instance(self._program(lhs_t, env), self._program(rhs_t, env), is_eq)

    def _add_negated_goal(self, gi: int, g: Statement) -> None:
        env = {name: (_PUSH_CELL, self.skolem_of[(gi, name)])
               for name in terms.free_variables(g)}
        if isinstance(g, (Eq, Ne, Lt)):
            self._ground_atom(g, gi, positive=False, fixed_env=env)
        elif isinstance(g, Or):
            for alt in g.alts:
                self._ground_atom(alt, gi, positive=False, fixed_env=env)
        elif isinstance(g, Imp):
            for p in g.premises:
                self._ground_atom(p, gi, positive=True, fixed_env=env)
            self._ground_atom(g.conclusion, gi, positive=False, fixed_env=env)
        else:
            raise ModelSearchError(f"unsupported goal: {g!r}")

    # ----- evaluation and propagation

    def _eval(self, prog: tuple, reads: list[int]):
        val = self.val
        n = self.n
        stack: list[int] = []
        last = len(prog) - 1
        for idx, (op, arg) in enumerate(prog):
            if op == _PUSH_ELEM:
                stack.append(arg)
                continue
            if op == _PUSH_CELL:
                cell = arg
            elif op == _APPLY:
                b = stack.pop()
                cell = arg + stack.pop() * n + b
            else:  # _COMP
                cell = arg + stack.pop()
            reads.append(cell)
            x = val[cell]
            if x < 0:
                return (_BLOCK_ROOT if idx == last else _BLOCK), cell
            stack.append(x)
        return _VALUE, stack[-1]

    def _check_instance(self, i: int):
        """Returns None (fine), ('conflict',), ('unit', cell, v) or ('forbid', cell, v)."""
        reads: list[int] = []
        ls, lv = self._eval(self.inst_lhs[i], reads)
        rs, rv = self._eval(self.inst_rhs[i], reads)
        watch = self.watch
        for c in reads:
            watch[c].add(i)
        is_eq = self.inst_eq[i]
        if ls == _VALUE and rs == _VALUE:
            if (lv == rv) != is_eq:
                return ("conflict",)
            return None
        if ls == _VALUE and rs == _BLOCK_ROOT:
            return ("unit", rv, lv) if is_eq else ("forbid", rv, lv)
        if rs == _VALUE and ls == _BLOCK_ROOT:
            return ("unit", lv, rv) if is_eq else ("forbid", lv, rv)
        if ls == _BLOCK_ROOT and rs == _BLOCK_ROOT and lv == rv and not is_eq:
            return ("conflict",)  # same cell on both sides of a disequation
        return None

    def _assign(self, cell: int, value: int, queue: list[int]) -> bool:
        cur = self.val[cell]
        if cur >= 0:
            return cur == value
        if self.forbid[cell] >> value & 1:
            return False
        self.val[cell] = value
        self.trail.append(("a", cell, self.max_seen))
        seen = value if value > self.args_max[cell] else self.args_max[cell]
        if seen > self.max_seen:
            self.max_seen = seen
        queue.append(cell)
        return True

    def _forbid_value(self, cell: int, value: int) -> bool:
        mask = self.forbid[cell]
        if mask >> value & 1:
            return True
        self.trail.append(("f", cell, mask))
        self.forbid[cell] = mask | (1 << value)
        return self.forbid[cell] != self.full_mask

    def _propagate(self, queue: list[int]) -> bool:
        while queue:
            cell = queue.pop()
            for i in list(self.watch[cell]):
                got = self._check_instance(i)
                if got is None:
                    continue
                kind = got[0]
                if kind == "conflict":
                    return False
                if kind == "unit":
                    if not self._assign(got[1], got[2], queue):
                        return False
                elif not self._forbid_value(got[1], got[2]):
                    return False
        return True

    def _undo_to(self, mark: int) -> None:
        while len(self.trail) > mark:
            kind, cell, prev = self.trail.pop()
            if kind == "a":
                self.val[cell] = -1
                self.max_seen = prev
            else:
                self.forbid[cell] = prev

    # ----- search driver

    def run(self, deadline: float | None, budget_check=None) -> FiniteModel | None:
        if self.trivially_unsat:
            return None
        queue: list[int] = []
        for i in range(len(self.inst_lhs)):
            got = self._check_instance(i)
            if got is not None:
                if got[0] == "conflict":
                    return None
                if got[0] == "unit":
                    if not self._assign(got[1], got[2], queue):
                        return None
                elif not self._forbid_value(got[1], got[2]):
                    return None
        if not self._propagate(queue):
            return None
        return self._dfs(0, deadline)

    def _dfs(self, pos: int, deadline: float | None) -> FiniteModel | None:
        order, val = self.order, self.val
        while pos < len(order) and val[order[pos]] >= 0:
            pos += 1
        if pos == len(order):
            return self._extract()
        cell = order[pos]
        self.nodes += 1
        if deadline is not None and self.nodes % 256 == 0 and time.monotonic() > deadline:
            raise _Timeout()
        if self.symmetry:
            seen = self.max_seen if self.max_seen > self.args_max[cell] else self.args_max[cell]
            bound = min(seen + 1, self.n - 1)
        else:
            bound = self.n - 1
        forbid = self.forbid[cell]
        for value in range(bound + 1):
            if forbid >> value & 1:
                continue
            mark = len(self.trail)
            queue: list[int] = []
            if self._assign(cell, value, queue) and self._propagate(queue):
                got = self._dfs(pos + 1, deadline)
                if got is not None:
                    return got
            self._undo_to(mark)
        return None

    def _extract(self) -> FiniteModel:
        n, val = self.n, self.val
        return FiniteModel(
            size=n,
            meet=tuple(tuple(val[self.meet_base + i * n + j] for j in range(n))
                       for i in range(n)),
            join=tuple(tuple(val[self.join_base + i * n + j] for j in range(n))
                       for i in range(n)),
            comp=tuple(val[self.comp_base + i] for i in range(n)),
            r00=val[self.cell_r00],
            r11=val[self.cell_r11],
        )


class _Timeout(Exception):
    pass


def _as_statement(s: Statement | str, goal: bool = False) -> Statement:
    if isinstance(s, str):
        return terms.parse_goal(s) if goal else terms.parse_statement(s)
    return s


def refutes(m: FiniteModel, goal: Statement | str) -> bool:
    """True iff some carrier assignment falsifies the goal."""
    report = verify_model(m, [_as_statement(goal, goal=True)])[0]
    return report.verdict is Verdict.REFUTED


def search_model(axioms: Sequence[Statement | str], goals: Sequence[Statement | str],
                 sizes: Iterable[int], budget: float | None = None,
                 symmetry: bool = True) -> SearchOutcome:
    """Find a model satisfying every axiom and falsifying every goal.

    Sizes are tried in ascending order, so a returned size is minimal
    among the searched sizes; a size is recorded as excluded only after
    its assignment space was exhausted.  `budget` is wall-clock seconds.
    `symmetry` enables least-index canonicity pruning (skipping partial
    models that merely relabel an already-explored one); it is an
    optimization and must not change outcomes, only speed.
    """
    size_list = list(sizes)
    if any(b <= a for a, b in zip(size_list, size_list[1:])):
        raise ModelSearchError("sizes must be ascending")
    parsed_axioms: list[terms.Atom] = []
    for ax in axioms:
        stmt = _as_statement(ax)
        if not isinstance(stmt, (Eq, Ne, Lt)):
            raise ModelSearchError(
                f"axioms must be equations, disequations or order assertions: {terms.format_statement(stmt)}"
            )
        parsed_axioms.append(stmt)
    parsed_goals = [_as_statement(g, goal=True) for g in goals]

    start = time.monotonic()
    deadline = start + budget if budget is not None else None
    excluded: list[int] = []
    nodes = 0
    for n in size_list:
        search = _SizeSearch(n, parsed_axioms, parsed_goals, symmetry)
        try:
            model = search.run(deadline)
        except _Timeout:
            nodes += search.nodes
            return SearchOutcome(
                model=None, size=None, sizes_excluded=tuple(excluded),
                nodes=nodes, elapsed_ms=(time.monotonic() - start) * 1000.0,
                budget_exhausted=True,
            )
        nodes += search.nodes
        if model is not None:
            _validate_found(model, parsed_axioms, parsed_goals)
            return SearchOutcome(
                model=model, size=n, sizes_excluded=tuple(excluded),
                nodes=nodes, elapsed_ms=(time.monotonic() - start) * 1000.0,
            )
        excluded.append(n)
    return SearchOutcome(
        model=None, size=None, sizes_excluded=tuple(excluded),
        nodes=nodes, elapsed_ms=(time.monotonic() - start) * 1000.0,
    )


def _validate_found(m: FiniteModel, axioms: Sequence[terms.Atom],
                    goals: Sequence[Statement]) -> None:
    """Independent re-verification of a search result via the table engine."""
    for report in verify_model(m, list(axioms)):
        if report.verdict is not Verdict.HOLDS:
            raise RuntimeError(f"search produced a model violating an axiom: {report.statement}")
    for g in goals:
        if not refutes(m, g):
            raise RuntimeError(f"search produced a model that fails to refute: {terms.format_statement(g)}")
