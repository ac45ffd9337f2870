"""Finite modules over a ternary gamma-semiring: axioms, submodules,
congruences and quotients, homomorphism enumeration, simplicity and density
analysis, annihilators, module catalogs, and the Jacobson radical.

The quotient construction is subtraction-free throughout: two carrier
elements are identified when they become equal after adding elements of the
designated submodule (the Bourne relation), and the induced tables are
verified rather than assumed.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import lru_cache

from .core import (AxiomReport, FiniteTernaryGammaSemiring, FixtureError,
                   BudgetError, PreconditionError, Violation, check_axioms)
from .ideals import IdealSet, is_ideal_subset

DEFAULT_ENUM_BOUND = 12
DEFAULT_HOM_BUDGET = 50000
DEFAULT_PARTITION_BOUND = 8


@dataclass(frozen=True)
class GammaModule:
    """A finite commutative monoid carrying a five-slot action of the base.

    `act[a][x][m][y][b]` gives the carrier index of the action of base
    elements a, b at parameters x, y on carrier element m.
    """

    name: str
    base: FiniteTernaryGammaSemiring
    carrier: tuple[str, ...]
    zero: int
    madd: tuple[tuple[int, ...], ...]
    act: tuple
    m2_profile: str = "none"

    @property
    def size(self) -> int:
        return len(self.carrier)

    def sum_of(self, items) -> int:
        total = self.zero
        for i in items:
            total = self.madd[total][i]
        return total


@lru_cache(maxsize=None)
def check_module_axioms(M: GammaModule) -> AxiomReport:
    """Exhaustive module-law check; base-structure failures become warnings."""
    out: list[Violation] = []
    S = M.base
    n, g, m = S.n, S.g, M.size
    rng, grng, mrng = range(n), range(g), range(m)
    madd, act, zm = M.madd, M.act, M.zero

    for i in mrng:
        for j in mrng:
            v = madd[i][j]
            if not 0 <= v < m:
                out.append(Violation("madd-closure", (i, j), v, m))
    for a in rng:
        for x in grng:
            for mm in mrng:
                for y in grng:
                    for b in rng:
                        v = act[a][x][mm][y][b]
                        if not 0 <= v < m:
                            out.append(Violation("act-closure", (a, x, mm, y, b), v, m))
    if out:
        return AxiomReport(tuple(sorted(out, key=lambda v: (v.law, v.witness))),
                           warnings=check_axioms(S).violations)

    for i in mrng:
        if madd[zm][i] != i:
            out.append(Violation("madd-identity", (i,), madd[zm][i], i))
    for i in mrng:
        for j in mrng:
            if madd[i][j] != madd[j][i]:
                out.append(Violation("madd-commutativity", (i, j), madd[i][j], madd[j][i]))
            for k in mrng:
                left, right = madd[madd[i][j]][k], madd[i][madd[j][k]]
                if left != right:
                    out.append(Violation("madd-associativity", (i, j, k), left, right))

    for a in rng:
        for a2 in rng:
            for x in grng:
                for mm in mrng:
                    for y in grng:
                        for b in rng:
                            left = act[S.add[a][a2]][x][mm][y][b]
                            right = madd[act[a][x][mm][y][b]][act[a2][x][mm][y][b]]
                            if left != right:
                                out.append(Violation("act-additivity-slot-a",
                                                     (a, a2, x, mm, y, b), left, right))
    for a in rng:
        for x in grng:
            for m1 in mrng:
                for m2 in mrng:
                    for y in grng:
                        for b in rng:
                            left = act[a][x][madd[m1][m2]][y][b]
                            right = madd[act[a][x][m1][y][b]][act[a][x][m2][y][b]]
                            if left != right:
                                out.append(Violation("act-additivity-slot-m",
                                                     (a, x, m1, m2, y, b), left, right))
    for a in rng:
        for x in grng:
            for mm in mrng:
                for y in grng:
                    for b in rng:
                        for b2 in rng:
                            left = act[a][x][mm][y][S.add[b][b2]]
                            right = madd[act[a][x][mm][y][b]][act[a][x][mm][y][b2]]
                            if left != right:
                                out.append(Violation("act-additivity-slot-b",
                                                     (a, x, mm, y, b, b2), left, right))

    for a in rng:
        for x in grng:
            for y in grng:
                for b in rng:
                    v = act[a][x][zm][y][b]
                    if v != zm:
                        out.append(Violation("act-zero-module", (a, x, y, b), v, zm))
    for x in grng:
        for mm in mrng:
            for y in grng:
                for b in rng:
                    v = act[S.zero][x][mm][y][b]
                    if v != zm:
                        out.append(Violation("act-absorb-a", (x, mm, y, b), v, zm))
    for a in rng:
        for x in grng:
            for mm in mrng:
                for y in grng:
                    v = act[a][x][mm][y][S.zero]
                    if v != zm:
                        out.append(Violation("act-absorb-b", (a, x, mm, y), v, zm))

    if M.m2_profile == "nested":
        # Nesting law mirroring ternary associativity with the carrier element
        # in the middle slot: act(tri(a,x,b,y,c), z, m, w, e) must equal
        # act(a, x, act(b, y, m, z, c), w, e).
        for a in rng:
            for x in grng:
                for b in rng:
                    for y in grng:
                        for c in rng:
                            for z in grng:
                                for mm in mrng:
                                    for w in grng:
                                        for e in rng:
                                            left = act[S.tri[a][x][b][y][c]][z][mm][w][e]
                                            right = act[a][x][act[b][y][mm][z][c]][w][e]
                                            if left != right:
                                                out.append(Violation(
                                                    "m2-nested",
                                                    (a, x, b, y, c, z, mm, w, e),
                                                    left, right))
    elif M.m2_profile != "none":
        raise PreconditionError(f"unknown m2_profile {M.m2_profile!r}")

    out.sort(key=lambda v: (v.law, v.witness))
    return AxiomReport(tuple(out), warnings=check_axioms(S).violations)


def reevaluate_module_violation(M: GammaModule, v: Violation) -> tuple[int, int]:
    """Recompute both sides of a reported module-law violation."""
    S = M.base
    madd, act, zm = M.madd, M.act, M.zero
    w = v.witness
    if v.law == "madd-closure":
        return madd[w[0]][w[1]], M.size
    if v.law == "act-closure":
        a, x, mm, y, b = w
        return act[a][x][mm][y][b], M.size
    if v.law == "madd-identity":
        return madd[zm][w[0]], w[0]
    if v.law == "madd-commutativity":
        return madd[w[0]][w[1]], madd[w[1]][w[0]]
    if v.law == "madd-associativity":
        i, j, k = w
        return madd[madd[i][j]][k], madd[i][madd[j][k]]
    if v.law == "act-additivity-slot-a":
        a, a2, x, mm, y, b = w
        return act[S.add[a][a2]][x][mm][y][b], madd[act[a][x][mm][y][b]][act[a2][x][mm][y][b]]
    if v.law == "act-additivity-slot-m":
        a, x, m1, m2, y, b = w
        return act[a][x][madd[m1][m2]][y][b], madd[act[a][x][m1][y][b]][act[a][x][m2][y][b]]
    if v.law == "act-additivity-slot-b":
        a, x, mm, y, b, b2 = w
        return act[a][x][mm][y][S.add[b][b2]], madd[act[a][x][mm][y][b]][act[a][x][mm][y][b2]]
    if v.law == "act-zero-module":
        a, x, y, b = w
        return act[a][x][zm][y][b], zm
    if v.law == "act-absorb-a":
        x, mm, y, b = w
        return act[S.zero][x][mm][y][b], zm
    if v.law == "act-absorb-b":
        a, x, mm, y = w
        return act[a][x][mm][y][S.zero], zm
    if v.law == "m2-nested":
        a, x, b, y, c, z, mm, w2, e = w
        return act[S.tri[a][x][b][y][c]][z][mm][w2][e], act[a][x][act[b][y][mm][z][c]][w2][e]
    raise ValueError(f"unknown module law {v.law!r}")


def require_module_axioms(M: GammaModule, lenient: bool, op: str) -> AxiomReport:
    report = check_module_axioms(M)
    if report.violations and not lenient:
        first = report.violations[0]
        raise PreconditionError(
            f"{op}: module {M.name!r} fails {first.law} at witness {first.witness}; "
            f"pass lenient=True to proceed anyway")
    return report


# ---------------------------------------------------------------------------
# Submodules

def submodule_closure(M: GammaModule, seed) -> frozenset[int]:
    current = set(seed)
    current.add(M.zero)
    S = M.base
    changed = True
    while changed:
        changed = False
        snapshot = sorted(current)
        for i in snapshot:
            for j in snapshot:
                v = M.madd[i][j]
                if v not in current:
                    current.add(v)
                    changed = True
        for mm in snapshot:
            for a in range(S.n):
                for b in range(S.n):
                    for x in range(S.g):
                        for y in range(S.g):
                            v = M.act[a][x][mm][y][b]
                            if v not in current:
                                current.add(v)
                                changed = True
    return frozenset(current)


def is_submodule(M: GammaModule, members: frozenset[int]) -> bool:
    if M.zero not in members:
        return False
    if any(M.madd[i][j] not in members for i in members for j in members):
        return False
    S = M.base
    return all(M.act[a][x][mm][y][b] in members
               for mm in members for a in range(S.n) for b in range(S.n)
               for x in range(S.g) for y in range(S.g))


def enumerate_submodules(M: GammaModule, bound: int = DEFAULT_ENUM_BOUND) -> list[frozenset[int]]:
    if M.size > bound:
        raise BudgetError(f"enumerate_submodules: |M| = {M.size} exceeds bound {bound}")
    found: set[frozenset[int]] = set()
    queue = [submodule_closure(M, ())]
    while queue:
        sub = queue.pop()
        if sub in found:
            continue
        found.add(sub)
        for x in range(M.size):
            if x not in sub:
                queue.append(submodule_closure(M, sub | {x}))
    return sorted(found, key=lambda s: (len(s), tuple(sorted(s))))


def is_simple(M: GammaModule, bound: int = DEFAULT_ENUM_BOUND) -> bool:
    """No submodules besides the zero singleton and the whole carrier.

    Stated this way (rather than "exactly two submodules") because the zero
    singleton need not be action-closed when the absorption laws fail, yet
    such a module still has no proper nonzero submodule.
    """
    if M.size <= 1:
        return False
    full = frozenset(range(M.size))
    zero_only = frozenset((M.zero,))
    return all(s in (zero_only, full) for s in enumerate_submodules(M, bound))


def sub_module(M: GammaModule, members: frozenset[int], name: str | None = None) -> GammaModule:
    if not is_submodule(M, members):
        raise PreconditionError("sub_module: subset is not a submodule")
    order = sorted(members)
    new_index = {orig: k for k, orig in enumerate(order)}
    S = M.base
    g = S.g
    madd = tuple(tuple(new_index[M.madd[i][j]] for j in order) for i in order)
    act = tuple(tuple(tuple(tuple(tuple(new_index[M.act[a][x][mm][y][b]]
                                        for b in range(S.n)) for y in range(g))
                            for mm in order) for x in range(g)) for a in range(S.n))
    return GammaModule(
        name=name or f"{M.name}|{{{','.join(M.carrier[i] for i in order)}}}",
        base=S, carrier=tuple(M.carrier[i] for i in order),
        zero=new_index[M.zero], madd=madd, act=act, m2_profile=M.m2_profile)


# ---------------------------------------------------------------------------
# Homomorphisms

@dataclass(frozen=True)
class ModuleHom:
    source: GammaModule
    target: GammaModule
    map: tuple[int, ...]
    verified: bool = False

    def __call__(self, i: int) -> int:
        return self.map[i]

    @property
    def is_zero(self) -> bool:
        return all(v == self.target.zero for v in self.map)

    def is_bijective(self) -> bool:
        return (self.source.size == self.target.size
                and len(set(self.map)) == self.source.size)

    def after(self, other: "ModuleHom") -> "ModuleHom":
        """Composition self ∘ other."""
        return ModuleHom(other.source, self.target,
                         tuple(self.map[v] for v in other.map))


def hom_violation(source: GammaModule, target: GammaModule, mapping: tuple[int, ...]):
    """First broken homomorphism law for a total carrier mapping, or None."""
    if mapping[source.zero] != target.zero:
        return ("zero", (source.zero,))
    for i in range(source.size):
        for j in range(source.size):
            if mapping[source.madd[i][j]] != target.madd[mapping[i]][mapping[j]]:
                return ("additive", (i, j))
    S = source.base
    for a in range(S.n):
        for x in range(S.g):
            for mm in range(source.size):
                for y in range(S.g):
                    for b in range(S.n):
                        if mapping[source.act[a][x][mm][y][b]] != \
                                target.act[a][x][mapping[mm]][y][b]:
                            return ("equivariance", (a, x, mm, y, b))
    return None


def generating_set(M: GammaModule) -> tuple[int, ...]:
    """Small additive+action generating set, greedy by largest closure gain."""
    gens: list[int] = []
    closure = submodule_closure(M, ())
    while len(closure) < M.size:
        best, best_closure = None, None
        for x in range(M.size):
            if x in closure:
                continue
            cl = submodule_closure(M, closure | {x})
            if best is None or len(cl) > len(best_closure):
                best, best_closure = x, cl
        gens.append(best)
        closure = best_closure
    return tuple(gens)


def _propagate(M: GammaModule, N: GammaModule, gens, images):
    """Extend generator images through closure; None on conflict."""
    known: dict[int, int] = {M.zero: N.zero}
    for g_elem, img in zip(gens, images):
        if known.get(g_elem, img) != img:
            return None
        known[g_elem] = img
    S = M.base
    changed = True
    while changed:
        changed = False
        items = sorted(known.items())
        for m1, v1 in items:
            for m2, v2 in items:
                s, v = M.madd[m1][m2], N.madd[v1][v2]
                if known.get(s, v) != v:
                    return None
                if s not in known:
                    known[s] = v
                    changed = True
        for mm, vm in items:
            for a in range(S.n):
                for x in range(S.g):
                    for y in range(S.g):
                        for b in range(S.n):
                            s = M.act[a][x][mm][y][b]
                            v = N.act[a][x][vm][y][b]
                            if known.get(s, v) != v:
                                return None
                            if s not in known:
                                known[s] = v
                                changed = True
    if len(known) != M.size:
        return None
    return tuple(known[i] for i in range(M.size))


def hom_set(M: GammaModule, N: GammaModule,
            budget: int = DEFAULT_HOM_BUDGET) -> tuple[ModuleHom, ...]:
    """All verified homomorphisms M -> N, ordered by mapping tuple.

    Candidates are generated from generator images and propagated through the
    additive/action closure; every survivor is then re-verified pointwise.
    """
    if M.base is not N.base and M.base != N.base:
        raise PreconditionError("hom_set: modules live over different bases")
    gens = generating_set(M)
    candidates = N.size ** len(gens)
    if candidates > budget:
        raise BudgetError(f"hom_set: {candidates} candidates exceed budget {budget}")
    maps = set()
    for images in itertools.product(range(N.size), repeat=len(gens)):
        total = _propagate(M, N, gens, images)
        if total is not None and hom_violation(M, N, total) is None:
            maps.add(total)
    return tuple(ModuleHom(M, N, mp, verified=True) for mp in sorted(maps))


def find_isomorphism(A: GammaModule, B: GammaModule) -> ModuleHom | None:
    """Bijective hom whose inverse is again a hom, or None."""
    if A.size != B.size:
        return None
    for f in hom_set(A, B):
        if f.is_bijective():
            inverse = [0] * B.size
            for i, v in enumerate(f.map):
                inverse[v] = i
            if hom_violation(B, A, tuple(inverse)) is None:
                return f
    return None


# ---------------------------------------------------------------------------
# Annihilators and faithfulness

def annihilator_of_element(M: GammaModule, mm: int) -> frozenset[int]:
    S = M.base
    ann = {a for a in range(S.n)
           if all(M.act[a][x][mm][y][b] == M.zero
                  for x in range(S.g) for y in range(S.g) for b in range(S.n))}
    # 0_T belongs by the ideal type invariant even when absorption fails.
    ann.add(S.zero)
    return frozenset(ann)


def annihilator(M: GammaModule, lenient: bool = False) -> IdealSet:
    """Elements acting as zero on every carrier element, as an IdealSet."""
    require_module_axioms(M, lenient, "annihilator")
    S = M.base
    members = frozenset(range(S.n))
    for mm in range(M.size):
        members &= annihilator_of_element(M, mm)
    out = IdealSet(members)
    out.is_ideal = is_ideal_subset(S, members)
    return out


def is_faithful(M: GammaModule, lenient: bool = False) -> tuple[bool, int | None]:
    ann = annihilator(M, lenient=lenient)
    nonzero = sorted(ann.members - {M.base.zero})
    if nonzero:
        return False, nonzero[0]
    return True, None


# ---------------------------------------------------------------------------
# Endomorphism semiring, Schur census, density

@dataclass
class EndReport:
    module: GammaModule
    homs: tuple[ModuleHom, ...]
    add_table: tuple
    comp_table: tuple
    add_closed: bool
    simple: bool
    schur_checked: bool
    schur_failures: tuple[int, ...]
    locality_failures: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.homs)

    @property
    def schur_ok(self) -> bool:
        return self.schur_checked and not self.schur_failures

    def census(self) -> dict:
        bijective = sum(1 for f in self.homs if f.is_bijective())
        nonzero = sum(1 for f in self.homs if not f.is_zero)
        return {"size": self.size, "bijective": bijective, "nonzero": nonzero,
                "add_closed": self.add_closed}


def end_semiring(M: GammaModule, lenient: bool = False,
                 budget: int = DEFAULT_HOM_BUDGET) -> EndReport:
    require_module_axioms(M, lenient, "end_semiring")
    homs = hom_set(M, M, budget=budget)
    index = {f.map: k for k, f in enumerate(homs)}
    add_closed = True
    add_rows = []
    for f in homs:
        row = []
        for g_h in homs:
            summed = tuple(M.madd[f.map[i]][g_h.map[i]] for i in range(M.size))
            entry = index.get(summed)
            if entry is None:
                add_closed = False
            row.append(entry)
        add_rows.append(tuple(row))
    comp_rows = tuple(tuple(index[f.after(g_h).map] for g_h in homs) for f in homs)

    simple = is_simple(M)
    schur_failures: list[int] = []
    locality_failures: list[int] = []
    if simple:
        for k, f in enumerate(homs):
            if f.is_zero:
                continue
            if not f.is_bijective():
                schur_failures.append(k)
                locality_failures.append(k)
                continue
            inverse = [0] * M.size
            for i, v in enumerate(f.map):
                inverse[v] = i
            if hom_violation(M, M, tuple(inverse)) is None:
                if tuple(inverse) not in index:
                    locality_failures.append(k)
            else:
                locality_failures.append(k)
    return EndReport(module=M, homs=homs, add_table=tuple(add_rows),
                     comp_table=comp_rows, add_closed=add_closed, simple=simple,
                     schur_checked=simple, schur_failures=tuple(schur_failures),
                     locality_failures=tuple(locality_failures))


@dataclass
class DensityReport:
    module: GammaModule
    anchor: int
    ok: bool
    witnesses: tuple  # (m, n, a, x, y) with act(a, x, m, y, anchor) == n
    unsolvable: tuple
    rank2: dict | None = None

    def to_dict(self) -> dict:
        return {
            "module": self.module.name,
            "anchor": self.module.base.elements[self.anchor],
            "ok": self.ok,
            "witnesses": [list(w) for w in self.witnesses],
            "unsolvable": [list(w) for w in self.unsolvable],
            "rank2": self.rank2,
        }


def density_check(M: GammaModule, anchor: int | None = None, rank2: bool = False,
                  lenient: bool = False) -> DensityReport:
    """Transitivity of the anchored action on nonzero carrier elements.

    For every nonzero m and every n the search looks for (a, x, y) with
    act(a, x, m, y, anchor) = n; the witness table re-evaluates exactly.
    """
    require_module_axioms(M, lenient, "density_check")
    if not is_simple(M):
        raise PreconditionError("density_check: module is not simple")
    if anchor is None:
        anchor = M.base.unit
    if anchor is None:
        raise PreconditionError("density_check: no anchor available (no unit declared)")
    S = M.base
    witnesses = []
    unsolvable = []
    combos = [(a, x, y) for a in range(S.n) for x in range(S.g) for y in range(S.g)]
    for mm in range(M.size):
        if mm == M.zero:
            continue
        for n in range(M.size):
            hit = next(((a, x, y) for a, x, y in combos
                        if M.act[a][x][mm][y][anchor] == n), None)
            if hit is None:
                unsolvable.append((mm, n))
            else:
                witnesses.append((mm, n, *hit))
    rank2_data = None
    if rank2:
        solvable = unsolvable_pairs = eligible = 0
        nonzero = [mm for mm in range(M.size) if mm != M.zero]
        for m1, m2 in itertools.combinations(nonzero, 2):
            for n1 in range(M.size):
                for n2 in range(M.size):
                    eligible += 1
                    if any(M.act[a][x][m1][y][anchor] == n1
                           and M.act[a][x][m2][y][anchor] == n2
                           for a, x, y in combos):
                        solvable += 1
                    else:
                        unsolvable_pairs += 1
        rank2_data = {"eligible": eligible, "solvable": solvable,
                      "unsolvable": unsolvable_pairs}
    return DensityReport(module=M, anchor=anchor, ok=not unsolvable,
                         witnesses=tuple(witnesses), unsolvable=tuple(unsolvable),
                         rank2=rank2_data)


# ---------------------------------------------------------------------------
# Congruences and quotients

@dataclass
class ModuleCongruence:
    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]
    compatible: bool
    witness: str | None = None

    @property
    def size(self) -> int:
        return len(self.classes)


def _partition_to_congruence(M: GammaModule, class_of: list[int]) -> ModuleCongruence:
    groups: dict[int, list[int]] = {}
    for elem, cls in enumerate(class_of):
        groups.setdefault(cls, []).append(elem)
    classes = tuple(tuple(sorted(g)) for g in sorted(groups.values(), key=min))
    canonical = [0] * M.size
    for ci, cls in enumerate(classes):
        for elem in cls:
            canonical[elem] = ci
    compatible, witness = _congruence_compatible(M, canonical)
    return ModuleCongruence(classes=classes, class_of=tuple(canonical),
                            compatible=compatible, witness=witness)


def _congruence_compatible(M: GammaModule, class_of) -> tuple[bool, str | None]:
    S = M.base
    for m1 in range(M.size):
        for m2 in range(M.size):
            if class_of[m1] != class_of[m2]:
                continue
            for x in range(M.size):
                if class_of[M.madd[m1][x]] != class_of[M.madd[m2][x]]:
                    return False, f"madd: [{m1}]=[{m2}] but [{m1}+{x}]!=[{m2}+{x}]"
            for a in range(S.n):
                for ga in range(S.g):
                    for gb in range(S.g):
                        for b in range(S.n):
                            if class_of[M.act[a][ga][m1][gb][b]] != \
                                    class_of[M.act[a][ga][m2][gb][b]]:
                                return False, (f"act: [{m1}]=[{m2}] but images differ "
                                               f"at (a={a},x={ga},y={gb},b={b})")
    return True, None


def quotient_by_congruence(M: GammaModule, cong: ModuleCongruence,
                           name: str | None = None) -> GammaModule:
    """Quotient module on congruence classes, built from class representatives."""
    reps = [cls[0] for cls in cong.classes]
    class_of = cong.class_of
    S = M.base
    madd = tuple(tuple(class_of[M.madd[r1][r2]] for r2 in reps) for r1 in reps)
    act = tuple(tuple(tuple(tuple(tuple(class_of[M.act[a][x][r][y][b]]
                                        for b in range(S.n)) for y in range(S.g))
                            for r in reps) for x in range(S.g)) for a in range(S.n))
    labels = tuple(f"[{M.carrier[r]}]" for r in reps)
    return GammaModule(name=name or f"{M.name}/~{len(cong.classes)}",
                       base=S, carrier=labels, zero=class_of[M.zero],
                       madd=madd, act=act, m2_profile=M.m2_profile)


def bourne_quotient(M: GammaModule, members: frozenset[int],
                    name: str | None = None) -> tuple[GammaModule, ModuleCongruence]:
    """Quotient by a submodule: identify m ~ m' when m + k = m' + k' for k, k' in N."""
    if not is_submodule(M, members):
        raise PreconditionError("bourne_quotient: subset is not a submodule")
    parent = list(range(M.size))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    sub = sorted(members)
    for m1 in range(M.size):
        for m2 in range(m1 + 1, M.size):
            if any(M.madd[m1][k] == M.madd[m2][k2] for k in sub for k2 in sub):
                r1, r2 = find(m1), find(m2)
                if r1 != r2:
                    parent[max(r1, r2)] = min(r1, r2)
    class_of = [find(i) for i in range(M.size)]
    cong = _partition_to_congruence(M, class_of)
    if name is None:
        name = f"{M.name}/{{{','.join(M.carrier[i] for i in sub)}}}"
    return quotient_by_congruence(M, cong, name=name), cong


def is_congruence_simple(M: GammaModule,
                         bound: int = DEFAULT_PARTITION_BOUND) -> bool:
    """Supplementary notion: only the discrete and total congruences exist.

    Distinct from submodule-simplicity; quotients arise from congruences, so
    this is what controls them.
    """
    if M.size <= 1:
        return False
    return len(enumerate_module_congruences(M, bound=bound)) == 2


def enumerate_module_congruences(M: GammaModule,
                                 bound: int = DEFAULT_PARTITION_BOUND) -> list[ModuleCongruence]:
    """All compatible congruences, via restricted-growth partition strings."""
    if M.size > bound:
        raise BudgetError(f"enumerate_module_congruences: |M| = {M.size} exceeds {bound}")
    results = []

    def grow(prefix: list[int], used: int):
        if len(prefix) == M.size:
            cong = _partition_to_congruence(M, prefix)
            if cong.compatible:
                results.append(cong)
            return
        for cls in range(used + 1):
            prefix.append(cls)
            grow(prefix, max(used, cls + 1) if cls == used else used)
            prefix.pop()

    grow([], 0)
    return results


# ---------------------------------------------------------------------------
# Isomorphism theorem instance checks

@dataclass
class IsoInstanceReport:
    name: str
    holds: bool
    details: dict

    def to_dict(self) -> dict:
        return {"name": self.name, "holds": self.holds, "details": self.details}


def first_isomorphism_check(f: ModuleHom) -> IsoInstanceReport:
    """ker f, im f, the quotient by ker f, and bijectivity of the induced map."""
    M, N = f.source, f.target
    kernel = frozenset(m for m in range(M.size) if f.map[m] == N.zero)
    image = frozenset(f.map)
    details: dict = {
        "kernel": sorted(kernel), "image": sorted(image),
        "kernel_is_submodule": is_submodule(M, kernel),
        "image_is_submodule": is_submodule(N, image),
    }
    if not details["kernel_is_submodule"]:
        return IsoInstanceReport("first", False, details)
    quotient, cong = bourne_quotient(M, kernel)
    details["quotient_size"] = quotient.size
    induced = []
    well_defined = True
    for cls in cong.classes:
        values = {f.map[m] for m in cls}
        if len(values) > 1:
            well_defined = False
        induced.append(min(values))
    details["induced_well_defined"] = well_defined
    injective = len(set(induced)) == len(induced)
    surjective = set(induced) == set(image)
    details["induced_bijective_onto_image"] = injective and surjective
    hom_ok = False
    if details["image_is_submodule"] and well_defined:
        target_sub = sub_module(N, image)
        reindex = {orig: k for k, orig in enumerate(sorted(image))}
        hom_ok = hom_violation(quotient, target_sub,
                               tuple(reindex[v] for v in induced)) is None
    details["induced_is_hom"] = hom_ok
    holds = (well_defined and injective and surjective and hom_ok
             and details["image_is_submodule"])
    return IsoInstanceReport("first", holds, details)


def second_isomorphism_check(M: GammaModule, N: frozenset[int],
                             P: frozenset[int]) -> IsoInstanceReport:
    """(N+P)/P against N/(N∩P), compared through an explicit isomorphism search."""
    for label, subset in (("N", N), ("P", P)):
        if not is_submodule(M, subset):
            return IsoInstanceReport("second", False, {"bad_submodule": label})
    np_members = submodule_closure(M, N | P)
    np_mod = sub_module(M, np_members)
    np_index = {orig: k for k, orig in enumerate(sorted(np_members))}
    lhs, _ = bourne_quotient(np_mod, frozenset(np_index[p] for p in P))
    n_mod = sub_module(M, N)
    n_index = {orig: k for k, orig in enumerate(sorted(N))}
    rhs, _ = bourne_quotient(n_mod, frozenset(n_index[p] for p in (N & P)))
    iso = find_isomorphism(lhs, rhs)
    details = {"lhs_size": lhs.size, "rhs_size": rhs.size,
               "isomorphism_found": iso is not None}
    return IsoInstanceReport("second", iso is not None, details)


def third_isomorphism_check(M: GammaModule, N: frozenset[int],
                            P: frozenset[int]) -> IsoInstanceReport:
    """(M/P)/(N/P) against M/N for nested submodules P ⊆ N ⊆ M."""
    if not P <= N:
        return IsoInstanceReport("third", False, {"error": "P not contained in N"})
    for label, subset in (("N", N), ("P", P)):
        if not is_submodule(M, subset):
            return IsoInstanceReport("third", False, {"bad_submodule": label})
    mp, cong_p = bourne_quotient(M, P)
    n_image = frozenset(cong_p.class_of[m] for m in N)
    if not is_submodule(mp, n_image):
        return IsoInstanceReport("third", False, {"error": "N/P is not a submodule of M/P"})
    lhs, _ = bourne_quotient(mp, n_image)
    rhs, _ = bourne_quotient(M, N)
    iso = find_isomorphism(lhs, rhs)
    details = {"lhs_size": lhs.size, "rhs_size": rhs.size,
               "isomorphism_found": iso is not None}
    return IsoInstanceReport("third", iso is not None, details)


def iso_theorem_suite(first: ModuleHom | None = None,
                      second: tuple | None = None,
                      third: tuple | None = None) -> tuple[IsoInstanceReport, ...]:
    """Run the requested instance checks; these validate instances, not theorems."""
    reports = []
    if first is not None:
        reports.append(first_isomorphism_check(first))
    if second is not None:
        reports.append(second_isomorphism_check(*second))
    if third is not None:
        reports.append(third_isomorphism_check(*third))
    return tuple(reports)


# ---------------------------------------------------------------------------
# Catalogs, radical, semisimplicity

@dataclass
class CatalogEntry:
    module: GammaModule
    simple: bool
    origin: str
    congruence_simple: bool = False


def cyclic_module_catalog(S: FiniteTernaryGammaSemiring, lenient: bool = False,
                          partition_bound: int = DEFAULT_PARTITION_BOUND) -> list[CatalogEntry]:
    """Regular module plus its quotients by compatible congruences, deduplicated."""
    reg = regular_module(S)
    require_module_axioms(reg, lenient, "cyclic_module_catalog")
    quotients: list[GammaModule] = []
    for k, cong in enumerate(enumerate_module_congruences(reg, bound=partition_bound)):
        if cong.size == reg.size:
            quotients.append(reg)
        else:
            quotients.append(quotient_by_congruence(reg, cong,
                                                    name=f"{S.name}-cyclic-q{k}"))
    quotients.sort(key=lambda q: (q.size, q.name))
    kept: list[GammaModule] = []
    for q in quotients:
        if not any(q.size == other.size and find_isomorphism(q, other) is not None
                   for other in kept):
            kept.append(q)
    return [CatalogEntry(module=q, simple=is_simple(q), origin="regular-quotient",
                         congruence_simple=is_congruence_simple(q))
            for q in kept]


@dataclass
class RadicalReport:
    ideal: IdealSet
    simples_used: tuple[str, ...]
    note: str = "catalog-relative"

    def to_dict(self, S: FiniteTernaryGammaSemiring) -> dict:
        return {"members": list(self.ideal.labels(S)),
                "is_ideal": self.ideal.is_ideal,
                "simples_used": list(self.simples_used),
                "note": self.note}


def jacobson_radical(S: FiniteTernaryGammaSemiring, catalog=None,
                     lenient: bool = False) -> RadicalReport:
    """Intersection of annihilators of the catalog's simple modules."""
    if catalog is None:
        catalog = cyclic_module_catalog(S, lenient=lenient)
    simples = [e for e in catalog if e.simple]
    members = frozenset(range(S.n))
    for entry in simples:
        members &= annihilator(entry.module, lenient=lenient).members
    ideal = IdealSet(members)
    ideal.is_ideal = is_ideal_subset(S, members)
    return RadicalReport(ideal=ideal,
                         simples_used=tuple(e.module.name for e in simples))


@dataclass
class SemisimplicityReport:
    ok: bool
    family: tuple[tuple[int, ...], ...]


def is_semisimple(M: GammaModule, bound: int = DEFAULT_ENUM_BOUND) -> SemisimplicityReport:
    """Search for simple submodules with trivial pairwise meets whose sum map
    is a bijection onto M; the empty family certifies the zero module."""
    subs = enumerate_submodules(M, bound=bound)
    simple_subs = [s for s in subs if is_simple(sub_module(M, s), bound=bound)]
    zero_only = {M.zero}
    for k in range(len(simple_subs) + 1):
        for family in itertools.combinations(simple_subs, k):
            sizes = 1
            for s in family:
                sizes *= len(s)
            if sizes != M.size:
                continue
            if any(set(a & b) != zero_only
                   for a, b in itertools.combinations(family, 2)):
                continue
            seen = set()
            ordered = [sorted(s) for s in family]
            for combo in itertools.product(*ordered):
                seen.add(M.sum_of(combo))
            if len(seen) == M.size:
                return SemisimplicityReport(True, tuple(tuple(sorted(s)) for s in family))
    return SemisimplicityReport(False, ())


def direct_sum(M1: GammaModule, M2: GammaModule, name: str | None = None) -> GammaModule:
    """Componentwise product carrier with componentwise tables."""
    if M1.base != M2.base:
        raise PreconditionError("direct_sum: modules live over different bases")
    S = M1.base
    pairs = [(i, j) for i in range(M1.size) for j in range(M2.size)]
    idx = {p: k for k, p in enumerate(pairs)}
    labels = tuple(f"({M1.carrier[i]},{M2.carrier[j]})" for i, j in pairs)
    madd = tuple(tuple(idx[(M1.madd[a1][b1], M2.madd[a2][b2])] for b1, b2 in pairs)
                 for a1, a2 in pairs)
    act = tuple(tuple(tuple(tuple(tuple(
        idx[(M1.act[a][x][m1][y][b], M2.act[a][x][m2][y][b])]
        for b in range(S.n)) for y in range(S.g)) for m1, m2 in pairs)
        for x in range(S.g)) for a in range(S.n))
    profile = M1.m2_profile if M1.m2_profile == M2.m2_profile else "none"
    return GammaModule(name=name or f"{M1.name}(+){M2.name}", base=S,
                       carrier=labels, zero=idx[(M1.zero, M2.zero)],
                       madd=madd, act=act, m2_profile=profile)


# ---------------------------------------------------------------------------
# Module builders and fixture text

def regular_module(S: FiniteTernaryGammaSemiring, name: str | None = None) -> GammaModule:
    return GammaModule(name=name or f"{S.name}-regular", base=S,
                       carrier=S.elements, zero=S.zero, madd=S.add, act=S.tri,
                       m2_profile="none")


def zero_module(S: FiniteTernaryGammaSemiring, name: str | None = None) -> GammaModule:
    g = S.g
    act = tuple(tuple(tuple(tuple(tuple(0 for _ in range(S.n)) for _ in range(g))
                            for _ in range(1)) for _ in range(g)) for _ in range(S.n))
    return GammaModule(name=name or f"{S.name}-zero", base=S, carrier=("0",),
                       zero=0, madd=((0,),), act=act, m2_profile="none")


def module_from_dict(data: dict, base: FiniteTernaryGammaSemiring) -> GammaModule:
    for key in ("base", "carrier", "zero", "madd", "act"):
        if key not in data:
            raise FixtureError(f"parse error: missing module field {key!r}")
    if data["base"] != base.name:
        raise FixtureError(f"reference error: module declares base {data['base']!r}, "
                           f"got structure {base.name!r}")
    carrier = tuple(data["carrier"])
    if not carrier or len(set(carrier)) != len(carrier):
        raise FixtureError("shape error: carrier must be a nonempty list of distinct labels")
    m, n, g = len(carrier), base.n, base.g

    def cidx(label, where):
        try:
            return carrier.index(label)
        except ValueError:
            raise FixtureError(f"reference error: label {label!r} in {where} "
                               f"is not in the carrier") from None

    zero = cidx(data["zero"], "zero")
    madd_rows = data["madd"]
    if len(madd_rows) != m or any(len(r) != m for r in madd_rows):
        raise FixtureError(f"shape error: madd table must be {m}x{m}")
    madd = tuple(tuple(cidx(v, "madd") for v in row) for row in madd_rows)
    act_raw = data["act"]
    ok = (len(act_raw) == n and all(len(t1) == g for t1 in act_raw)
          and all(len(t2) == m for t1 in act_raw for t2 in t1)
          and all(len(t3) == g for t1 in act_raw for t2 in t1 for t3 in t2)
          and all(len(t4) == n for t1 in act_raw for t2 in t1 for t3 in t2 for t4 in t3))
    if not ok:
        raise FixtureError(f"shape error: act table must be {n}x{g}x{m}x{g}x{n}")
    act = tuple(tuple(tuple(tuple(tuple(cidx(v, "act") for v in t4) for t4 in t3)
                            for t3 in t2) for t2 in t1) for t1 in act_raw)
    profile = data.get("m2_profile", "none")
    if profile not in ("none", "nested"):
        raise FixtureError(f"parse error: unknown m2_profile {profile!r}")
    return GammaModule(name=str(data.get("name", f"{base.name}-module")), base=base,
                       carrier=carrier, zero=zero, madd=madd, act=act,
                       m2_profile=profile)


def load_module(text: str, base: FiniteTernaryGammaSemiring) -> GammaModule:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FixtureError(f"parse error: {exc}") from None
    return module_from_dict(data, base)


def module_to_dict(M: GammaModule) -> dict:
    c = M.carrier
    return {
        "name": M.name,
        "base": M.base.name,
        "carrier": list(c),
        "zero": c[M.zero],
        "madd": [[c[v] for v in row] for row in M.madd],
        "act": [[[[[c[v] for v in t4] for t4 in t3] for t3 in t2] for t2 in t1]
                for t1 in M.act],
        "m2_profile": M.m2_profile,
    }


def serialize_module(M: GammaModule) -> str:
    return json.dumps(module_to_dict(M), indent=2) + "\n"
