"""Finite categories presented by explicit composition tables.

Objects and morphisms are opaque strings, equality is string equality, and a
category carries its whole composition table.  Every categorical question in
this package therefore reduces to finite enumeration over these tables.  All
values are immutable after construction and every operation is a pure
function, so concurrent use is safe.

Enumerations are deterministic: objects and morphisms are kept sorted, and
searches branch in lexicographic order.  Derived identifiers use two fixed
conventions: pairs are rendered ``(a,b)`` and coproduct copies are suffixed
``#0`` / ``#1``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator


class BudgetError(RuntimeError):
    """An exhaustive search exceeded its configured budget."""


def pair_name(a: str, b: str) -> str:
    """The canonical identifier for an ordered pair."""
    return f"({a},{b})"


# ---------------------------------------------------------------------------
# core data types


@dataclass(frozen=True)
class FiniteCategory:
    """A category with finitely many objects and morphisms.

    ``compose[(f, g)]`` is the composite "f after g" and is defined exactly
    when ``source[f] == target[g]``.
    """

    objects: tuple[str, ...]
    morphisms: tuple[str, ...]
    source: dict[str, str]
    target: dict[str, str]
    identity: dict[str, str]
    compose: dict[tuple[str, str], str]

    @classmethod
    def build(cls, objects, morphisms, source, target, identity, compose) -> "FiniteCategory":
        return cls(
            objects=tuple(sorted(set(objects))),
            morphisms=tuple(sorted(set(morphisms))),
            source=dict(source),
            target=dict(target),
            identity=dict(identity),
            compose={(f, g): h for (f, g), h in compose.items()},
        )

    def hom(self, x: str, y: str) -> tuple[str, ...]:
        return tuple(m for m in self.morphisms
                     if self.source[m] == x and self.target[m] == y)

    def is_identity(self, m: str) -> bool:
        return self.identity.get(self.source[m]) == m

    def composable(self, f: str, g: str) -> bool:
        return self.source[f] == self.target[g]

    def inverse(self, m: str) -> str | None:
        x, y = self.source[m], self.target[m]
        for n in self.hom(y, x):
            if (self.compose[(n, m)] == self.identity[x]
                    and self.compose[(m, n)] == self.identity[y]):
                return n
        return None

    def is_iso(self, m: str) -> bool:
        return self.inverse(m) is not None


@dataclass(frozen=True)
class CatFunctor:
    """A functor between two finite categories, given by its raw maps."""

    domain: FiniteCategory
    codomain: FiniteCategory
    ob_map: dict[str, str]
    mor_map: dict[str, str]

    def key(self) -> tuple:
        """Hashable identity of the raw maps, for set-level comparisons."""
        return (tuple(sorted(self.ob_map.items())),
                tuple(sorted(self.mor_map.items())))


@dataclass(frozen=True)
class NaturalTransformation:
    """A natural transformation, one component morphism per domain object."""

    source: CatFunctor
    target: CatFunctor
    components: dict[str, str]


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group given by its full multiplication table."""

    elements: tuple[str, ...]
    mult: dict[tuple[str, str], str]
    identity: str
    inverse: dict[str, str]


# ---------------------------------------------------------------------------
# validation


def validate_category(C: FiniteCategory) -> list[str]:
    """Check every category axiom on the full tables.

    Returns an empty list iff ``C`` is a category; otherwise one message per
    violated pair or triple.
    """
    errors = []
    obset, morset = set(C.objects), set(C.morphisms)
    for m in C.morphisms:
        if C.source.get(m) not in obset:
            errors.append(f"morphism {m}: bad source")
        if C.target.get(m) not in obset:
            errors.append(f"morphism {m}: bad target")
    for x in C.objects:
        i = C.identity.get(x)
        if i not in morset:
            errors.append(f"object {x}: missing identity")
            continue
        if C.source[i] != x or C.target[i] != x:
            errors.append(f"identity {i} of {x}: endpoints differ from {x}")
    if errors:
        return errors

    for f in C.morphisms:
        for g in C.morphisms:
            defined = (f, g) in C.compose
            if C.composable(f, g) != defined:
                errors.append(f"composition table wrong domain at ({f},{g})")
                continue
            if not defined:
                continue
            h = C.compose[(f, g)]
            if h not in morset:
                errors.append(f"composite {f}.{g} not a morphism")
            elif C.source[h] != C.source[g] or C.target[h] != C.target[f]:
                errors.append(f"composite {f}.{g} has wrong endpoints")
    if errors:
        return errors

    for x in C.objects:
        i = C.identity[x]
        for m in C.morphisms:
            if C.source[m] == x and C.compose[(m, i)] != m:
                errors.append(f"right unit fails at ({m},{i})")
            if C.target[m] == x and C.compose[(i, m)] != m:
                errors.append(f"left unit fails at ({i},{m})")

    for f in C.morphisms:
        for g in C.morphisms:
            if not C.composable(f, g):
                continue
            fg = C.compose[(f, g)]
            for h in C.morphisms:
                if not C.composable(g, h):
                    continue
                if C.compose[(fg, h)] != C.compose[(f, C.compose[(g, h)])]:
                    errors.append(f"associativity fails at ({f},{g},{h})")
    return errors


def validate_functor(F: CatFunctor) -> list[str]:
    """Check that the raw maps of ``F`` preserve all structure."""
    C, D = F.domain, F.codomain
    errors = []
    for x in C.objects:
        if F.ob_map.get(x) not in set(D.objects):
            errors.append(f"object {x}: image missing")
    for m in C.morphisms:
        n = F.mor_map.get(m)
        if n not in set(D.morphisms):
            errors.append(f"morphism {m}: image missing")
            continue
        if D.source[n] != F.ob_map[C.source[m]]:
            errors.append(f"morphism {m}: source not preserved")
        if D.target[n] != F.ob_map[C.target[m]]:
            errors.append(f"morphism {m}: target not preserved")
    if errors:
        return errors
    for x in C.objects:
        if F.mor_map[C.identity[x]] != D.identity[F.ob_map[x]]:
            errors.append(f"identity of {x} not preserved")
    for (f, g), h in C.compose.items():
        if D.compose[(F.mor_map[f], F.mor_map[g])] != F.mor_map[h]:
            errors.append(f"composition not preserved at ({f},{g})")
    return errors


def validate_natural(nt: NaturalTransformation) -> list[str]:
    """Check endpoint typing and every naturality square."""
    F, G = nt.source, nt.target
    C, D = F.domain, F.codomain
    errors = []
    for x in C.objects:
        c = nt.components.get(x)
        if c is None or c not in set(D.morphisms):
            errors.append(f"component at {x}: missing")
            continue
        if D.source[c] != F.ob_map[x] or D.target[c] != G.ob_map[x]:
            errors.append(f"component at {x}: wrong endpoints")
    if errors:
        return errors
    for m in C.morphisms:
        x, y = C.source[m], C.target[m]
        left = D.compose[(nt.components[y], F.mor_map[m])]
        right = D.compose[(G.mor_map[m], nt.components[x])]
        if left != right:
            errors.append(f"naturality fails at {m}")
    return errors


def is_natural_iso(nt: NaturalTransformation) -> bool:
    return not validate_natural(nt) and all(
        nt.source.codomain.is_iso(c) for c in nt.components.values())


def validate_group(G: FiniteGroup) -> list[str]:
    errors = []
    els = set(G.elements)
    if G.identity not in els:
        return ["identity not an element"]
    for a in G.elements:
        for b in G.elements:
            if G.mult.get((a, b)) not in els:
                errors.append(f"product ({a},{b}) missing")
    if errors:
        return errors
    for a in G.elements:
        if G.mult[(G.identity, a)] != a or G.mult[(a, G.identity)] != a:
            errors.append(f"unit law fails at {a}")
        inv = G.inverse.get(a)
        if inv not in els or G.mult[(a, inv)] != G.identity or G.mult[(inv, a)] != G.identity:
            errors.append(f"inverse fails at {a}")
        for b in G.elements:
            for c in G.elements:
                if G.mult[(G.mult[(a, b)], c)] != G.mult[(a, G.mult[(b, c)])]:
                    errors.append(f"associativity fails at ({a},{b},{c})")
    return errors


# ---------------------------------------------------------------------------
# elementary constructions


def opposite(C: FiniteCategory) -> FiniteCategory:
    """Reverse all morphisms; identifiers are kept, so this is an involution."""
    return FiniteCategory.build(
        C.objects, C.morphisms,
        source=dict(C.target), target=dict(C.source),
        identity=dict(C.identity),
        compose={(g, f): h for (f, g), h in C.compose.items()},
    )


def opposite_functor(F: CatFunctor) -> CatFunctor:
    """The induced functor between the opposite categories (same raw maps)."""
    return CatFunctor(opposite(F.domain), opposite(F.codomain),
                      dict(F.ob_map), dict(F.mor_map))


def identity_functor(C: FiniteCategory) -> CatFunctor:
    return CatFunctor(C, C, {x: x for x in C.objects},
                      {m: m for m in C.morphisms})


def compose_functors(F: CatFunctor, G: CatFunctor) -> CatFunctor:
    """``F`` after ``G``."""
    if G.codomain != F.domain:
        raise ValueError("functors not composable")
    return CatFunctor(G.domain, F.codomain,
                      {x: F.ob_map[G.ob_map[x]] for x in G.domain.objects},
                      {m: F.mor_map[G.mor_map[m]] for m in G.domain.morphisms})


def product(C: FiniteCategory, D: FiniteCategory) -> FiniteCategory:
    """The product category, with pairwise identifiers ``(c,d)``."""
    objects = [pair_name(x, y) for x in C.objects for y in D.objects]
    morphisms, source, target, identity, compose = [], {}, {}, {}, {}
    for f in C.morphisms:
        for g in D.morphisms:
            m = pair_name(f, g)
            morphisms.append(m)
            source[m] = pair_name(C.source[f], D.source[g])
            target[m] = pair_name(C.target[f], D.target[g])
    for x in C.objects:
        for y in D.objects:
            identity[pair_name(x, y)] = pair_name(C.identity[x], D.identity[y])
    for (f1, f2), f3 in C.compose.items():
        for (g1, g2), g3 in D.compose.items():
            compose[(pair_name(f1, g1), pair_name(f2, g2))] = pair_name(f3, g3)
    return FiniteCategory.build(objects, morphisms, source, target, identity, compose)


def coproduct(C: FiniteCategory, D: FiniteCategory) -> FiniteCategory:
    """The disjoint union.

    If the identifier sets already are disjoint they are kept; otherwise
    every identifier is renamed with the suffixes ``#0`` (left) and ``#1``
    (right).
    """
    disjoint = (not set(C.objects) & set(D.objects)
                and not set(C.morphisms) & set(D.morphisms))
    lo, lm = ((lambda s: s), (lambda s: s)) if disjoint else \
        ((lambda s: s + "#0"), (lambda s: s + "#0"))
    ro, rm = ((lambda s: s), (lambda s: s)) if disjoint else \
        ((lambda s: s + "#1"), (lambda s: s + "#1"))
    objects = [lo(x) for x in C.objects] + [ro(x) for x in D.objects]
    morphisms = [lm(m) for m in C.morphisms] + [rm(m) for m in D.morphisms]
    source = {lm(m): lo(C.source[m]) for m in C.morphisms}
    source.update({rm(m): ro(D.source[m]) for m in D.morphisms})
    target = {lm(m): lo(C.target[m]) for m in C.morphisms}
    target.update({rm(m): ro(D.target[m]) for m in D.morphisms})
    identity = {lo(x): lm(C.identity[x]) for x in C.objects}
    identity.update({ro(x): rm(D.identity[x]) for x in D.objects})
    compose = {(lm(f), lm(g)): lm(h) for (f, g), h in C.compose.items()}
    compose.update({(rm(f), rm(g)): rm(h) for (f, g), h in D.compose.items()})
    return FiniteCategory.build(objects, morphisms, source, target, identity, compose)


def coproduct_injections(C: FiniteCategory, D: FiniteCategory) -> tuple[CatFunctor, CatFunctor]:
    """The two canonical injections into ``coproduct(C, D)``."""
    P = coproduct(C, D)
    disjoint = (not set(C.objects) & set(D.objects)
                and not set(C.morphisms) & set(D.morphisms))
    sl = "" if disjoint else "#0"
    sr = "" if disjoint else "#1"
    left = CatFunctor(C, P, {x: x + sl for x in C.objects},
                      {m: m + sl for m in C.morphisms})
    right = CatFunctor(D, P, {x: x + sr for x in D.objects},
                       {m: m + sr for m in D.morphisms})
    return left, right


def core(C: FiniteCategory) -> FiniteCategory:
    """The wide subcategory on exactly the invertible morphisms."""
    keep = [m for m in C.morphisms if C.is_iso(m)]
    keepset = set(keep)
    return FiniteCategory.build(
        C.objects, keep,
        {m: C.source[m] for m in keep},
        {m: C.target[m] for m in keep},
        dict(C.identity),
        {(f, g): h for (f, g), h in C.compose.items()
         if f in keepset and g in keepset},
    )


def is_groupoid(C: FiniteCategory) -> bool:
    return all(C.is_iso(m) for m in C.morphisms)


# ---------------------------------------------------------------------------
# standard small categories and groups


def empty_category() -> FiniteCategory:
    return FiniteCategory.build([], [], {}, {}, {}, {})


def terminal_category() -> FiniteCategory:
    return FiniteCategory.build(["pt"], ["id_pt"], {"id_pt": "pt"},
                                {"id_pt": "pt"}, {"pt": "id_pt"},
                                {("id_pt", "id_pt"): "id_pt"})


def discrete_category(names) -> FiniteCategory:
    names = list(names)
    return FiniteCategory.build(
        names, [f"id_{x}" for x in names],
        {f"id_{x}": x for x in names}, {f"id_{x}": x for x in names},
        {x: f"id_{x}" for x in names},
        {(f"id_{x}", f"id_{x}"): f"id_{x}" for x in names},
    )


def indiscrete_category(names) -> FiniteCategory:
    """Exactly one morphism between any ordered pair of objects."""
    names = sorted(names)
    morphisms, source, target, identity, compose = [], {}, {}, {}, {}
    arrow = {}
    for x in names:
        for y in names:
            m = f"to_{y}_from_{x}"
            arrow[(x, y)] = m
            morphisms.append(m)
            source[m], target[m] = x, y
        identity[x] = arrow[(x, x)]
    for (x, y) in arrow:
        for z in names:
            compose[(arrow[(y, z)], arrow[(x, y)])] = arrow[(x, z)]
    return FiniteCategory.build(names, morphisms, source, target, identity, compose)


def walking_arrow() -> FiniteCategory:
    """The category with one nonidentity arrow ``f: a -> b``."""
    return FiniteCategory.build(
        ["a", "b"], ["id_a", "id_b", "f"],
        {"id_a": "a", "id_b": "b", "f": "a"},
        {"id_a": "a", "id_b": "b", "f": "b"},
        {"a": "id_a", "b": "id_b"},
        {("id_a", "id_a"): "id_a", ("id_b", "id_b"): "id_b",
         ("f", "id_a"): "f", ("id_b", "f"): "f"},
    )


def walking_iso() -> FiniteCategory:
    """The category with two objects and a single isomorphism between them."""
    source = {"id_a": "a", "id_b": "b", "u": "a", "v": "b"}
    target = {"id_a": "a", "id_b": "b", "u": "b", "v": "a"}
    compose = {
        ("id_a", "id_a"): "id_a", ("id_b", "id_b"): "id_b",
        ("u", "id_a"): "u", ("id_b", "u"): "u",
        ("v", "id_b"): "v", ("id_a", "v"): "v",
        ("v", "u"): "id_a", ("u", "v"): "id_b",
    }
    return FiniteCategory.build(["a", "b"], ["id_a", "id_b", "u", "v"],
                                source, target, {"a": "id_a", "b": "id_b"}, compose)


def parallel_pair() -> FiniteCategory:
    """Two objects with two parallel nonidentity arrows between them."""
    source = {"id_a": "a", "id_b": "b", "f": "a", "g": "a"}
    target = {"id_a": "a", "id_b": "b", "f": "b", "g": "b"}
    compose = {("id_a", "id_a"): "id_a", ("id_b", "id_b"): "id_b"}
    for m in ("f", "g"):
        compose[(m, "id_a")] = m
        compose[("id_b", m)] = m
    return FiniteCategory.build(["a", "b"], ["id_a", "id_b", "f", "g"],
                                source, target, {"a": "id_a", "b": "id_b"}, compose)


def chain_category(n: int) -> FiniteCategory:
    """The poset ``0 < 1 < ... < n`` viewed as a category."""
    objects = [str(i) for i in range(n + 1)]
    morphisms, source, target, identity, compose = [], {}, {}, {}, {}
    name = {}
    for i in range(n + 1):
        for j in range(i, n + 1):
            m = f"id_{i}" if i == j else f"le_{i}_{j}"
            name[(i, j)] = m
            morphisms.append(m)
            source[m], target[m] = str(i), str(j)
        identity[str(i)] = name[(i, i)]
    for i in range(n + 1):
        for j in range(i, n + 1):
            for k in range(j, n + 1):
                compose[(name[(j, k)], name[(i, j)])] = name[(i, k)]
    return FiniteCategory.build(objects, morphisms, source, target, identity, compose)


def poset_category(names, leq: Callable[[str, str], bool]) -> FiniteCategory:
    """The category of a finite poset; composition is forced."""
    names = sorted(names)
    morphisms, source, target, identity, compose = [], {}, {}, {}, {}
    name = {}
    for x in names:
        for y in names:
            if leq(x, y):
                m = f"id_{x}" if x == y else f"le_{x}_{y}"
                name[(x, y)] = m
                morphisms.append(m)
                source[m], target[m] = x, y
        identity[x] = name[(x, x)]
    for (x, y), m1 in name.items():
        for (y2, z), m2 in name.items():
            if y2 == y:
                compose[(m2, m1)] = name[(x, z)]
    return FiniteCategory.build(names, morphisms, source, target, identity, compose)


def cyclic_group(n: int, prefix: str = "g") -> FiniteGroup:
    els = [f"{prefix}{i}" for i in range(n)]
    mult = {(f"{prefix}{i}", f"{prefix}{j}"): f"{prefix}{(i + j) % n}"
            for i in range(n) for j in range(n)}
    inverse = {f"{prefix}{i}": f"{prefix}{(-i) % n}" for i in range(n)}
    return FiniteGroup(tuple(sorted(els)), mult, f"{prefix}0", inverse)


def symmetric_group(n: int) -> FiniteGroup:
    """The symmetric group on ``{0, ..., n-1}``, elements named by one-line notation."""
    perms = list(itertools.permutations(range(n)))
    name = {p: "".join(map(str, p)) for p in perms}
    mult = {}
    for p in perms:
        for q in perms:
            mult[(name[p], name[q])] = name[tuple(p[q[i]] for i in range(n))]
    inverse = {}
    for p in perms:
        inv = tuple(p.index(i) for i in range(n))
        inverse[name[p]] = name[inv]
    return FiniteGroup(tuple(sorted(name.values())), mult,
                       name[tuple(range(n))], inverse)


def group_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    els = [pair_name(a, b) for a in G.elements for b in H.elements]
    mult = {(pair_name(a, b), pair_name(c, d)):
            pair_name(G.mult[(a, c)], H.mult[(b, d)])
            for a in G.elements for b in H.elements
            for c in G.elements for d in H.elements}
    inverse = {pair_name(a, b): pair_name(G.inverse[a], H.inverse[b])
               for a in G.elements for b in H.elements}
    return FiniteGroup(tuple(sorted(els)), mult,
                       pair_name(G.identity, H.identity), inverse)


def opposite_group(G: FiniteGroup) -> FiniteGroup:
    return FiniteGroup(G.elements,
                       {(a, b): G.mult[(b, a)] for (a, b) in G.mult},
                       G.identity, dict(G.inverse))


def group_category(G: FiniteGroup, obj: str = "*") -> FiniteCategory:
    """A group as a one-object category."""
    return FiniteCategory.build(
        [obj], list(G.elements),
        {g: obj for g in G.elements}, {g: obj for g in G.elements},
        {obj: G.identity},
        {(a, b): G.mult[(a, b)] for a in G.elements for b in G.elements},
    )


# ---------------------------------------------------------------------------
# functor enumeration


def _iter_functors(C: FiniteCategory, D: FiniteCategory,
                   fixed_ob: dict[str, str] | None = None,
                   mor_filter: Callable[[str, str], bool] | None = None,
                   node_budget: int | None = 2_000_000) -> Iterator[CatFunctor]:
    """Yield every functor ``C -> D`` in lexicographic order.

    ``fixed_ob`` pins object images; ``mor_filter(m, n)`` restricts morphism
    images.  Backtracking prunes with the composition table as soon as a
    constraint involves only assigned morphisms.
    """
    obs = list(C.objects)
    nonid = [m for m in C.morphisms if not C.is_identity(m)]
    nodes = 0

    def consistent(mor_map: dict[str, str], new: str) -> bool:
        comp, dcomp = C.compose, D.compose
        for a in mor_map:
            for f, g in ((new, a), (a, new)):
                if C.composable(f, g):
                    h = comp[(f, g)]
                    if h in mor_map and dcomp[(mor_map[f], mor_map[g])] != mor_map[h]:
                        return False
        for a in mor_map:
            for b in mor_map:
                if C.composable(a, b) and comp[(a, b)] == new:
                    if dcomp[(mor_map[a], mor_map[b])] != mor_map[new]:
                        return False
        return True

    def obj_choices(x: str):
        if fixed_ob and x in fixed_ob:
            return (fixed_ob[x],)
        return D.objects

    for ob_imgs in itertools.product(*(obj_choices(x) for x in obs)):
        ob_map = dict(zip(obs, ob_imgs))
        mor_map = {C.identity[x]: D.identity[ob_map[x]] for x in obs}
        if any(mor_filter and not mor_filter(C.identity[x], mor_map[C.identity[x]])
               for x in obs):
            continue

        def extend(k: int) -> Iterator[dict[str, str]]:
            nonlocal nodes
            if k == len(nonid):
                yield dict(mor_map)
                return
            m = nonid[k]
            for n in D.hom(ob_map[C.source[m]], ob_map[C.target[m]]):
                if mor_filter and not mor_filter(m, n):
                    continue
                nodes += 1
                if node_budget is not None and nodes > node_budget:
                    raise BudgetError("functor search exceeded node budget")
                mor_map[m] = n
                if consistent(mor_map, m):
                    yield from extend(k + 1)
                del mor_map[m]

        for mm in extend(0):
            yield CatFunctor(C, D, dict(ob_map), mm)


def enumerate_functors(C: FiniteCategory, D: FiniteCategory,
                       max_results: int = 100_000,
                       node_budget: int | None = 2_000_000) -> list[CatFunctor]:
    """All functors ``C -> D``, duplicate-free, in lexicographic order."""
    out = []
    for F in _iter_functors(C, D, node_budget=node_budget):
        out.append(F)
        if len(out) > max_results:
            raise BudgetError("too many functors")
    return out


def enumerate_naturals(F: CatFunctor, G: CatFunctor,
                       budget: int = 1_000_000) -> list[NaturalTransformation]:
    """All natural transformations ``F => G``, in lexicographic order."""
    if F.domain != G.domain or F.codomain != G.codomain:
        raise ValueError("parallel functors required")
    C, D = F.domain, F.codomain
    obs = list(C.objects)
    choices = [D.hom(F.ob_map[x], G.ob_map[x]) for x in obs]
    total = 1
    for ch in choices:
        total *= max(len(ch), 1)
        if total > budget:
            raise BudgetError("too many candidate transformations")
    out = []
    for combo in itertools.product(*choices):
        comp = dict(zip(obs, combo))
        if all(D.compose[(comp[C.target[m]], F.mor_map[m])]
               == D.compose[(G.mor_map[m], comp[C.source[m]])]
               for m in C.morphisms):
            out.append(NaturalTransformation(F, G, comp))
    return out


# ---------------------------------------------------------------------------
# equivalence testing


def is_full(F: CatFunctor) -> bool:
    C, D = F.domain, F.codomain
    for x in C.objects:
        for y in C.objects:
            images = {F.mor_map[m] for m in C.hom(x, y)}
            if not set(D.hom(F.ob_map[x], F.ob_map[y])) <= images:
                return False
    return True


def is_faithful(F: CatFunctor) -> bool:
    C = F.domain
    for x in C.objects:
        for y in C.objects:
            h = C.hom(x, y)
            if len({F.mor_map[m] for m in h}) != len(h):
                return False
    return True


def is_essentially_surjective(F: CatFunctor) -> bool:
    D = F.codomain
    hit = {F.ob_map[x] for x in F.domain.objects}
    for d in D.objects:
        if d in hit:
            continue
        if not any(any(D.is_iso(m) for m in D.hom(h, d)) for h in hit):
            return False
    return True


def is_fully_faithful(F: CatFunctor) -> bool:
    return is_full(F) and is_faithful(F)


def is_equivalence(F: CatFunctor) -> bool:
    """Brute-force equivalence verdict: full, faithful, essentially surjective."""
    return is_full(F) and is_faithful(F) and is_essentially_surjective(F)


def find_isomorphism(C: FiniteCategory, D: FiniteCategory,
                     node_budget: int | None = 2_000_000) -> CatFunctor | None:
    """An isomorphism of categories ``C -> D``, if one exists."""
    if len(C.objects) != len(D.objects) or len(C.morphisms) != len(D.morphisms):
        return None
    for F in _iter_functors(C, D, node_budget=node_budget):
        if (len(set(F.ob_map.values())) == len(C.objects)
                and len(set(F.mor_map.values())) == len(C.morphisms)):
            return F
    return None


# ---------------------------------------------------------------------------
# bounded word closure (generators -> total table)


def _reduce_words(word: tuple[str, ...],
                  identity_letters: set[str],
                  rules: dict[tuple[str, str], set[str]],
                  max_word_len: int) -> set[tuple[str, ...]]:
    """All irreducible forms of ``word`` under identity removal and pair rules.

    A pair rule replaces two adjacent letters (application order: the right
    letter acts first) by a single letter; several outcomes per pair are
    allowed, and every reachable irreducible form is returned.
    """
    if len(word) > max_word_len:
        raise BudgetError("word length exceeded closure budget")
    seen = {word}
    frontier = [word]
    irreducible = set()
    while frontier:
        w = frontier.pop()
        reduced_any = False
        for i, letter in enumerate(w):
            if letter in identity_letters and len(w) > 1:
                nw = w[:i] + w[i + 1:]
                reduced_any = True
                if nw not in seen:
                    seen.add(nw)
                    frontier.append(nw)
        for i in range(len(w) - 1):
            outs = rules.get((w[i], w[i + 1]))
            if outs:
                reduced_any = True
                for r in outs:
                    nw = w[:i] + (r,) + w[i + 2:]
                    if nw not in seen:
                        seen.add(nw)
                        frontier.append(nw)
        if not reduced_any:
            irreducible.add(w)
    return irreducible


def bounded_closure(objects: list[str],
                    letters: dict[str, tuple[str, str]],
                    rules: dict[tuple[str, str], set[str]],
                    identity_letters: set[str] | None = None,
                    max_morphisms: int = 400,
                    max_word_len: int = 10) -> tuple[FiniteCategory, dict[str, str]]:
    """Complete a category from generating letters and pair relations.

    ``letters`` maps a letter to its ``(source, target)``; ``rules`` sends an
    adjacent pair (left after right) to its possible one-letter contractions.
    Words are closed under composition until the table is total; identified
    irreducible forms are merged.  Raises :class:`BudgetError` when the
    morphism count or word length exceeds its bound.

    Returns the completed category and a map from letter to morphism name.
    Identity morphisms are named ``1@obj``, composite words join their
    letters with ``*`` (leftmost letter applied last).
    """
    identity_letters = identity_letters or set()

    # a morphism class: frozenset of irreducible words, plus endpoints
    class_of: dict[tuple[str, ...], int] = {}
    classes: list[dict] = []   # {"words": set, "src": , "tgt": }

    def endpoints(word):
        if word[0].startswith("1@"):
            o = word[0][2:]
            return o, o
        return letters[word[-1]][0], letters[word[0]][1]

    def get_class(word) -> int:
        forms = _reduce_words(word, identity_letters, rules, max_word_len)
        hits = sorted({class_of[f] for f in forms if f in class_of})
        if not hits:
            idx = len(classes)
            src, tgt = endpoints(min(forms))
            classes.append({"words": set(forms), "src": src, "tgt": tgt})
            if len(classes) > max_morphisms:
                raise BudgetError("closure exceeded morphism budget")
            for f in forms:
                class_of[f] = idx
            return idx
        keep = hits[0]
        for other in hits[1:]:
            classes[keep]["words"] |= classes[other]["words"]
            for f in classes[other]["words"]:
                class_of[f] = keep
            classes[other]["words"] = set()
        for f in forms:
            if class_of.get(f) != keep:
                classes[keep]["words"].add(f)
                class_of[f] = keep
        return keep

    for o in objects:
        get_class((f"1@{o}",))
    for letter in sorted(letters):
        if letter in identity_letters:
            continue
        get_class((letter,))

    # identity letters behave like the identity of their endpoints
    for letter in sorted(identity_letters):
        o = letters[letter][0]
        cls = get_class((letter,))
        idc = get_class((f"1@{o}",))
        if cls != idc:
            classes[idc]["words"] |= classes[cls]["words"]
            for f in classes[cls]["words"]:
                class_of[f] = idc
            classes[cls]["words"] = set()

    stable = False
    while not stable:
        stable = True
        live = [i for i, c in enumerate(classes) if c["words"]]
        snapshot_classes = len(classes)
        snapshot_map = dict(class_of)
        for i in live:
            for j in live:
                if not classes[i]["words"] or not classes[j]["words"]:
                    continue
                if classes[i]["src"] != classes[j]["tgt"]:
                    continue
                wi = min(classes[i]["words"])
                wj = min(classes[j]["words"])
                word = tuple(x for x in wi + wj if not x.startswith("1@")) or wj[:1]
                get_class(word)
        if len(classes) != snapshot_classes or class_of != snapshot_map:
            stable = False

    # build the category
    live = [i for i, c in enumerate(classes) if c["words"]]
    names = {}
    for i in live:
        w = min(classes[i]["words"], key=lambda t: (len(t), t))
        names[i] = w[0] if len(w) == 1 else "*".join(w)
    morphisms = [names[i] for i in live]
    source = {names[i]: classes[i]["src"] for i in live}
    target = {names[i]: classes[i]["tgt"] for i in live}
    identity = {o: names[class_of[(f"1@{o}",)]] for o in objects}
    compose = {}
    for i in live:
        for j in live:
            if classes[i]["src"] != classes[j]["tgt"]:
                continue
            wi = min(classes[i]["words"])
            wj = min(classes[j]["words"])
            word = tuple(x for x in wi + wj if not x.startswith("1@")) or wj[:1]
            compose[(names[i], names[j])] = names[get_class(word)]
    cat = FiniteCategory.build(objects, morphisms, source, target, identity, compose)
    letter_map = {}
    for letter in letters:
        letter_map[letter] = names[class_of[min(_reduce_words(
            (letter,), identity_letters, rules, max_word_len))]]
    return cat, letter_map


def category_from_generators(objects: list[str],
                             arrows: dict[str, tuple[str, str]],
                             relations: dict[tuple[str, str], str] | None = None,
                             max_morphisms: int = 400,
                             max_word_len: int = 10) -> tuple[FiniteCategory, dict[str, str]]:
    """Freely compose generating arrows, subject to pair relations.

    ``relations[(f, g)] = h`` declares the composite "f after g" equal to the
    arrow ``h``; the empty string declares it an identity.  Fails loudly with
    :class:`BudgetError` when the closure does not stay within budget.
    """
    rules: dict[tuple[str, str], set[str]] = {}
    identity_letters: set[str] = set()
    aug = dict(arrows)
    for (f, g), h in (relations or {}).items():
        if h == "":
            src = arrows[g][0]
            h = f"1@{src}"
            aug[h] = (src, src)
            identity_letters.add(h)
        rules.setdefault((f, g), set()).add(h)
    return bounded_closure(objects, aug, rules, identity_letters,
                           max_morphisms, max_word_len)
