"""Ideal lattice, prime spectrum, Zariski-style closed sets, and localization.

An ideal is an additive submonoid of the carrier that absorbs the ternary
product in every slot; in the commutative case one notion covers left,
lateral, and right ideals.  All enumerations are deterministic: subsets are
ordered by cardinality then lexicographically by sorted member indices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (FiniteTernaryGammaSemiring, BudgetError, PreconditionError,
                   require_axioms)

DEFAULT_ENUM_BOUND = 12


@dataclass
class IdealSet:
    """Subset of element indices with cached ideal/prime/maximal flags."""

    members: frozenset[int]
    is_ideal: bool | None = None
    is_prime: bool | None = None
    is_maximal: bool | None = None

    def key(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def __eq__(self, other) -> bool:
        return isinstance(other, IdealSet) and self.members == other.members

    def __hash__(self) -> int:
        return hash(self.members)

    def labels(self, S: FiniteTernaryGammaSemiring) -> tuple[str, ...]:
        return tuple(S.elements[i] for i in self.key())

    def to_dict(self, S: FiniteTernaryGammaSemiring) -> dict:
        return {
            "members": list(self.labels(S)),
            "is_ideal": self.is_ideal,
            "is_prime": self.is_prime,
            "is_maximal": self.is_maximal,
        }


def ideal_violation(S: FiniteTernaryGammaSemiring, members: frozenset[int]):
    """First reason a subset fails the ideal laws, or None if it is an ideal."""
    if S.zero not in members:
        return ("missing-zero", (S.zero,))
    for i in members:
        for j in members:
            if S.add[i][j] not in members:
                return ("not-add-closed", (i, j))
    rng = range(S.n)
    for c in members:
        for a in rng:
            for b in rng:
                for x in range(S.g):
                    for y in range(S.g):
                        # Commutative case: absorption in one slot covers all.
                        if S.tri[a][x][b][y][c] not in members:
                            return ("not-absorbing", (a, x, b, y, c))
    return None


def is_ideal_subset(S: FiniteTernaryGammaSemiring, members: frozenset[int]) -> bool:
    return ideal_violation(S, members) is None


def ideal_closure(S: FiniteTernaryGammaSemiring, seed) -> IdealSet:
    """Least ideal containing the seed: fixpoint of add- and tri-closure."""
    current = set(seed)
    current.add(S.zero)
    rng = range(S.n)
    changed = True
    while changed:
        changed = False
        snapshot = sorted(current)
        for i in snapshot:
            for j in snapshot:
                v = S.add[i][j]
                if v not in current:
                    current.add(v)
                    changed = True
        for c in snapshot:
            for a in rng:
                for b in rng:
                    for x in range(S.g):
                        for y in range(S.g):
                            v = S.tri[a][x][b][y][c]
                            if v not in current:
                                current.add(v)
                                changed = True
    return IdealSet(frozenset(current), is_ideal=True)


def enumerate_ideals(S: FiniteTernaryGammaSemiring, bound: int = DEFAULT_ENUM_BOUND,
                     lenient: bool = False) -> list[IdealSet]:
    """All ideals, found by closing extensions of the least ideal.

    Ideals form an intersection-closed family, so breadth-first extension of
    closures reaches every one of them; tests cross-check against the
    all-subsets filter on small carriers.
    """
    if S.n > bound:
        raise BudgetError(f"enumerate_ideals: |T| = {S.n} exceeds bound {bound}")
    require_axioms(S, lenient, "enumerate_ideals")
    found: dict[frozenset[int], IdealSet] = {}
    queue = [ideal_closure(S, ())]
    while queue:
        ideal = queue.pop()
        if ideal.members in found:
            continue
        found[ideal.members] = ideal
        for x in range(S.n):
            if x not in ideal.members:
                queue.append(ideal_closure(S, ideal.members | {x}))
    return sorted(found.values(), key=lambda i: (len(i.members), i.key()))


def is_prime(S: FiniteTernaryGammaSemiring, I: IdealSet) -> bool:
    """Prime test: tri(a,x,b,y,c) in I for every parameter pair forces a factor in I."""
    if not is_ideal_subset(S, I.members):
        raise PreconditionError("is_prime: input subset is not an ideal")
    if len(I.members) == S.n:
        raise PreconditionError("is_prime: ideal must be proper")
    members = I.members
    rng = range(S.n)
    params = [(x, y) for x in range(S.g) for y in range(S.g)]
    for a in rng:
        for b in rng:
            for c in rng:
                if a in members or b in members or c in members:
                    continue
                if all(S.tri[a][x][b][y][c] in members for x, y in params):
                    return False
    return True


@dataclass
class SpectrumSpace:
    """Prime points plus the closed-set table V(I) over the full ideal lattice."""

    points: tuple[IdealSet, ...]
    ideals: tuple[IdealSet, ...]
    closed_sets: dict  # ideal key -> tuple of point indices

    def point_labels(self, S: FiniteTernaryGammaSemiring) -> tuple[str, ...]:
        return tuple("{" + ",".join(p.labels(S)) + "}" for p in self.points)

    def to_dict(self, S: FiniteTernaryGammaSemiring) -> dict:
        return {
            "points": [p.to_dict(S) for p in self.points],
            "ideals": [i.to_dict(S) for i in self.ideals],
            "closed_sets": {",".join(S.elements[i] for i in key) or "(empty)": list(val)
                            for key, val in self.closed_sets.items()},
        }


def spectrum(S: FiniteTernaryGammaSemiring, bound: int = DEFAULT_ENUM_BOUND,
             lenient: bool = False) -> SpectrumSpace:
    ideals = enumerate_ideals(S, bound=bound, lenient=lenient)
    proper = [i for i in ideals if len(i.members) < S.n]
    for ideal in ideals:
        ideal.is_ideal = True
        if len(ideal.members) == S.n:
            ideal.is_prime = False
            ideal.is_maximal = False
        else:
            ideal.is_prime = is_prime(S, ideal)
            ideal.is_maximal = not any(ideal.members < other.members for other in proper)
    points = tuple(i for i in ideals if i.is_prime)
    closed = {}
    for ideal in ideals:
        closed[ideal.key()] = tuple(k for k, p in enumerate(points)
                                    if ideal.members <= p.members)
    return SpectrumSpace(points=points, ideals=tuple(ideals), closed_sets=closed)


@dataclass
class ZariskiReport:
    t0_ok: bool
    t0_failures: tuple
    intersection_ok: bool
    intersection_failures: tuple
    inclusion_ok: bool
    inclusion_failures: tuple

    @property
    def passed(self) -> bool:
        return self.t0_ok and self.intersection_ok and self.inclusion_ok

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "t0_ok": self.t0_ok,
            "t0_failures": [list(w) for w in self.t0_failures],
            "intersection_ok": self.intersection_ok,
            "intersection_failures": [list(map(list, w)) for w in self.intersection_failures],
            "inclusion_ok": self.inclusion_ok,
            "inclusion_failures": [list(map(list, w)) for w in self.inclusion_failures],
        }


def zariski_report(S: FiniteTernaryGammaSemiring, spec: SpectrumSpace) -> ZariskiReport:
    """Check V(I) ∩ V(J) = V(I+J), inclusion reversal, and T0 separation."""
    v = spec.closed_sets
    inter_fail = []
    incl_fail = []
    for I in spec.ideals:
        for J in spec.ideals:
            lhs = tuple(sorted(set(v[I.key()]) & set(v[J.key()])))
            sum_ideal = ideal_closure(S, I.members | J.members)
            rhs = v[sum_ideal.key()]
            if lhs != rhs:
                inter_fail.append((I.key(), J.key(), lhs, rhs))
            if I.members <= J.members and not set(v[J.key()]) <= set(v[I.key()]):
                incl_fail.append((I.key(), J.key(), v[I.key()], v[J.key()]))
    t0_fail = []
    for a, P in enumerate(spec.points):
        for b, Q in enumerate(spec.points):
            if a < b:
                if v[P.key()] == v[Q.key()]:
                    t0_fail.append((a, b))
    return ZariskiReport(
        t0_ok=not t0_fail, t0_failures=tuple(t0_fail),
        intersection_ok=not inter_fail, intersection_failures=tuple(inter_fail),
        inclusion_ok=not incl_fail, inclusion_failures=tuple(incl_fail))


# ---------------------------------------------------------------------------
# Localization at a prime

@dataclass
class LocalizedSemiring:
    """Fraction classes at a prime, with induced tables and locality data.

    `structure` is the induced table structure on classes; `classes[k]` lists
    the fraction pairs (numerator, denominator) making up class k.
    `well_defined` records whether the induced tables were independent of the
    representative choice; failures carry a witness description instead of
    raising.
    """

    prime: IdealSet
    structure: FiniteTernaryGammaSemiring
    classes: tuple[tuple[tuple[int, int], ...], ...]
    class_of: dict
    maximal_ideal: frozenset[int]
    well_defined: bool
    failures: tuple[str, ...]
    lenient: bool = False

    def to_dict(self, S: FiniteTernaryGammaSemiring) -> dict:
        return {
            "prime": list(self.prime.labels(S)),
            "classes": [[f"{S.elements[a]}/{S.elements[s]}" for a, s in cls]
                        for cls in self.classes],
            "maximal_ideal": sorted(self.maximal_ideal),
            "well_defined": self.well_defined,
            "failures": list(self.failures),
            "lenient": self.lenient,
        }


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True


def localize(S: FiniteTernaryGammaSemiring, P: IdealSet,
             lenient: bool = False) -> LocalizedSemiring:
    """Fractions a/s with s outside P, under the witnessed equivalence.

    (a,s) ~ (b,t) iff some u outside P and parameters x, y satisfy
    tri(u,x,a,y,t) = tri(u,x,b,y,s); the transitive closure is taken and the
    induced add/tri tables are checked for representative independence
    exhaustively.
    """
    report = require_axioms(S, lenient, "localize")
    if not is_prime(S, P):
        raise PreconditionError("localize: ideal is not prime")
    lenient_tag = bool(report.violations)

    denoms = [s for s in range(S.n) if s not in P.members]
    fractions = [(a, s) for a in range(S.n) for s in denoms]
    findex = {f: k for k, f in enumerate(fractions)}
    uf = _UnionFind(len(fractions))
    params = [(x, y) for x in range(S.g) for y in range(S.g)]
    for i, (a, s) in enumerate(fractions):
        for j in range(i + 1, len(fractions)):
            b, t = fractions[j]
            if any(S.tri[u][x][a][y][t] == S.tri[u][x][b][y][s]
                   for u in denoms for x, y in params):
                uf.union(i, j)

    groups: dict[int, list[tuple[int, int]]] = {}
    for k, f in enumerate(fractions):
        groups.setdefault(uf.find(k), []).append(f)
    classes = tuple(tuple(sorted(g)) for g in sorted(groups.values(), key=lambda g: min(g)))
    class_of = {f: ci for ci, cls in enumerate(classes) for f in cls}
    nclasses = len(classes)
    failures: list[str] = []

    def frac_label(f):
        return f"{S.elements[f[0]]}/{S.elements[f[1]]}"

    def add_result(a, s, b, t):
        # Common denominator tri(s,x,t,y,u); commutativity makes it symmetric.
        for u in denoms:
            for x, y in params:
                den = S.tri[s][x][t][y][u]
                if den in P.members:
                    continue
                num = S.add[S.tri[a][x][t][y][u]][S.tri[b][x][s][y][u]]
                return class_of[(num, den)]
        return None

    add_table = [[0] * nclasses for _ in range(nclasses)]
    well_defined = True
    for ci, cls_i in enumerate(classes):
        for cj, cls_j in enumerate(classes):
            results = {add_result(a, s, b, t) for a, s in cls_i for b, t in cls_j}
            if None in results:
                well_defined = False
                failures.append(f"add: no admissible denominator for {ci}+{cj}")
                results.discard(None)
            if len(results) > 1:
                well_defined = False
                failures.append(
                    f"add: class {ci} + class {cj} depends on representatives "
                    f"({sorted(results)})")
            add_table[ci][cj] = min(results) if results else 0

    def tri_result(fa, x, fb, y, fc):
        a, s = fa
        b, t = fb
        c, u = fc
        den = S.tri[s][x][t][y][u]
        if den in P.members:
            return None
        return class_of[(S.tri[a][x][b][y][c], den)]

    tri_table = [[[[[0] * nclasses for _ in range(S.g)] for _ in range(nclasses)]
                  for _ in range(S.g)] for _ in range(nclasses)]
    for ci, cls_i in enumerate(classes):
        for x in range(S.g):
            for cj, cls_j in enumerate(classes):
                for y in range(S.g):
                    for ck, cls_k in enumerate(classes):
                        results = {tri_result(fa, x, fb, y, fc)
                                   for fa in cls_i for fb in cls_j for fc in cls_k}
                        had_none = None in results
                        results.discard(None)
                        if not results:
                            well_defined = False
                            failures.append(
                                f"tri: no admissible denominator for ({ci},{cj},{ck}) "
                                f"at parameters ({x},{y})")
                            results = {0}
                        elif len(results) > 1:
                            well_defined = False
                            failures.append(
                                f"tri: ({ci},{cj},{ck}) at ({x},{y}) depends on "
                                f"representatives ({sorted(results)})")
                        elif had_none:
                            # Some representatives lacked a valid denominator but
                            # all valid ones agreed; keep the common value.
                            pass
                        tri_table[ci][x][cj][y][ck] = min(results)

    zero_class = class_of[(S.zero, denoms[0])]
    unit_class = None
    if S.unit is not None:
        if S.unit in P.members:
            failures.append("unit lies in the prime; localization has no unit class")
        else:
            unit_class = class_of[(S.unit, S.unit)]

    labels = tuple(frac_label(cls[0]) for cls in classes)
    local = FiniteTernaryGammaSemiring(
        name=f"{S.name}_at_{{{','.join(P.labels(S))}}}",
        elements=labels, zero=zero_class, unit=unit_class, gamma=S.gamma,
        add=tuple(tuple(row) for row in add_table),
        tri=tuple(tuple(tuple(tuple(tuple(t4) for t4 in t3) for t3 in t2) for t2 in t1)
                  for t1 in tri_table),
        commutative=S.commutative)

    maximal = frozenset(ci for ci, cls in enumerate(classes)
                        if any(a in P.members for a, _ in cls))
    mixed = [ci for ci, cls in enumerate(classes)
             if any(a in P.members for a, _ in cls)
             and any(a not in P.members for a, _ in cls)]
    if mixed:
        failures.append(f"classes {mixed} mix numerators inside and outside the prime")

    if unit_class is not None:
        invertible = set()
        for ci in range(nclasses):
            if any(tri_table[ci][x][cj][y][unit_class] == unit_class
                   for cj in range(nclasses) for x in range(S.g) for y in range(S.g)):
                invertible.add(ci)
        non_invertible = frozenset(range(nclasses)) - invertible
        if non_invertible != maximal:
            failures.append(
                f"locality: non-invertible classes {sorted(non_invertible)} differ "
                f"from maximal ideal {sorted(maximal)}")

    return LocalizedSemiring(
        prime=P, structure=local, classes=classes, class_of=class_of,
        maximal_ideal=maximal, well_defined=well_defined,
        failures=tuple(failures), lenient=lenient_tag)


@dataclass
class GelfandReport:
    injective: bool
    witness: tuple | None
    maximal_points: tuple[int, ...]
    vacuous: bool = False

    def to_dict(self, S=None) -> dict:
        return {
            "injective": self.injective,
            "witness": None if self.witness is None else list(self.witness),
            "maximal_points": list(self.maximal_points),
            "vacuous": self.vacuous,
        }


def gelfand_injectivity(S: FiniteTernaryGammaSemiring, spec: SpectrumSpace,
                        lenient: bool = False) -> GelfandReport:
    """Injectivity of a -> (class of a/1 at each maximal prime)."""
    if S.unit is None:
        raise PreconditionError("gelfand_injectivity: no unit declared")
    if S.n == 1:
        return GelfandReport(True, None, (), vacuous=True)
    maximal_points = tuple(k for k, p in enumerate(spec.points) if p.is_maximal)
    if not maximal_points:
        raise PreconditionError("gelfand_injectivity: no maximal ideals found")
    locals_ = [localize(S, spec.points[k], lenient=lenient) for k in maximal_points]
    images = []
    for a in range(S.n):
        images.append(tuple(loc.class_of[(a, S.unit)] for loc in locals_))
    for a in range(S.n):
        for b in range(a + 1, S.n):
            if images[a] == images[b]:
                return GelfandReport(False, (a, b), maximal_points)
    return GelfandReport(True, None, maximal_points)
