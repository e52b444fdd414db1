"""Finite-scale tooling for the canonical model structure on categories.

Fibration and cofibration predicates are decided by brute force on the
tables; lifting problems are solved by exhaustive constrained functor
search.  Pushouts of categories are completed by a bounded word closure
(they can be infinite, so the computation fails loudly past its budget),
and a bounded small object argument is provided for set-valued diagram
categories, where pushouts are computed level-wise.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .fincat import (
    BudgetError,
    CatFunctor,
    FiniteCategory,
    _iter_functors,
    bounded_closure,
    compose_functors,
    coproduct,
    empty_category,
    parallel_pair,
    terminal_category,
    validate_functor,
    walking_arrow,
    walking_iso,
)
from .setval import (
    DiagramMap,
    SetDiagram,
    compose_diagram_maps,
    coproduct_diagrams,
    diagram_pushout,
    enumerate_diagram_maps,
    identity_diagram_map,
)


@dataclass(frozen=True)
class LiftingSquare:
    """A commuting square with left vertical ``i`` and right vertical ``p``.

    ``top: dom(i) -> dom(p)`` and ``bottom: cod(i) -> cod(p)`` must satisfy
    ``p . top == bottom . i``.
    """

    left: CatFunctor
    right: CatFunctor
    top: CatFunctor
    bottom: CatFunctor


@dataclass(frozen=True)
class PushoutResult:
    category: FiniteCategory
    from_left: CatFunctor    # cod(i) -> pushout
    from_right: CatFunctor   # cod(f) -> pushout


@dataclass
class SoaStageCell:
    """One attached cell: generator index plus its attaching square."""

    generator: int
    attach: DiagramMap    # dom(I[k]) -> current stage
    against: DiagramMap   # cod(I[k]) -> codomain of the map being factored


@dataclass
class FactorizationResult:
    middle: SetDiagram
    left: DiagramMap           # cellular part
    right: DiagramMap          # remainder
    stages: int
    saturated: bool
    cells: list[list[SoaStageCell]] = field(default_factory=list)


def validate_square(sq: LiftingSquare) -> list[str]:
    errors = []
    for name, F in (("left", sq.left), ("right", sq.right),
                    ("top", sq.top), ("bottom", sq.bottom)):
        errs = validate_functor(F)
        if errs:
            errors.append(f"{name} invalid: {errs[0]}")
    if errors:
        return errors
    if sq.top.domain != sq.left.domain or sq.bottom.domain != sq.left.codomain \
            or sq.top.codomain != sq.right.domain \
            or sq.bottom.codomain != sq.right.codomain:
        return ["square endpoints do not match"]
    lhs = compose_functors(sq.right, sq.top)
    rhs = compose_functors(sq.bottom, sq.left)
    if lhs.ob_map != rhs.ob_map or lhs.mor_map != rhs.mor_map:
        return ["square does not commute"]
    return []


# ---------------------------------------------------------------------------
# predicates


def is_isofibration(p: CatFunctor) -> bool:
    """Every isomorphism out of a lifted object lifts with that source."""
    X, Y = p.domain, p.codomain
    for x in X.objects:
        px = p.ob_map[x]
        for psi in Y.morphisms:
            if Y.source[psi] != px or not Y.is_iso(psi):
                continue
            found = False
            for phi in X.morphisms:
                if (X.source[phi] == x and X.is_iso(phi)
                        and p.mor_map[phi] == psi):
                    found = True
                    break
            if not found:
                return False
    return True


def is_injective_on_objects(i: CatFunctor) -> bool:
    return len(set(i.ob_map.values())) == len(i.domain.objects)


# ---------------------------------------------------------------------------
# lifting problems


def iter_liftings(sq: LiftingSquare,
                  node_budget: int | None = 2_000_000) -> Iterator[CatFunctor]:
    """Yield every diagonal filler of the square, in lexicographic order."""
    i, p, top, bottom = sq.left, sq.right, sq.top, sq.bottom
    A, B = i.domain, i.codomain
    X = p.domain

    fixed_ob: dict[str, str] = {}
    for a in A.objects:
        b = i.ob_map[a]
        want = top.ob_map[a]
        if fixed_ob.get(b, want) != want:
            return
        fixed_ob[b] = want
    for b in B.objects:
        if b in fixed_ob and p.ob_map[fixed_ob[b]] != bottom.ob_map[b]:
            return

    forced_mor: dict[str, str] = {}
    for m in A.morphisms:
        n = i.mor_map[m]
        want = top.mor_map[m]
        if forced_mor.get(n, want) != want:
            return
        forced_mor[n] = want

    def obj_filter(b: str) -> list[str]:
        if b in fixed_ob:
            return [fixed_ob[b]]
        return [x for x in X.objects if p.ob_map[x] == bottom.ob_map[b]]

    def mor_filter(n: str, cand: str) -> bool:
        if n in forced_mor and cand != forced_mor[n]:
            return False
        return p.mor_map[cand] == bottom.mor_map[n]

    # restrict object images through fixed_ob plus the fibre condition
    import itertools as _it
    obs = list(B.objects)
    for combo in _it.product(*(obj_filter(b) for b in obs)):
        pinned = dict(zip(obs, combo))
        yield from _iter_functors(B, X, fixed_ob=pinned,
                                  mor_filter=mor_filter,
                                  node_budget=node_budget)


def solve_lifting(sq: LiftingSquare,
                  node_budget: int | None = 2_000_000) -> CatFunctor | None:
    """A diagonal making both triangles commute, or None (exhaustive)."""
    if validate_square(sq):
        raise ValueError("not a commuting square: " + "; ".join(validate_square(sq)))
    for h in iter_liftings(sq, node_budget):
        return h
    return None


def enumerate_squares(i: CatFunctor, p: CatFunctor,
                      node_budget: int | None = 2_000_000) -> list[LiftingSquare]:
    """All commuting squares with ``i`` on the left and ``p`` on the right."""
    squares = []
    tops = list(_iter_functors(i.domain, p.domain, node_budget=node_budget))
    bottoms = list(_iter_functors(i.codomain, p.codomain, node_budget=node_budget))
    for top in tops:
        pt = compose_functors(p, top)
        for bottom in bottoms:
            bi = compose_functors(bottom, i)
            if pt.ob_map == bi.ob_map and pt.mor_map == bi.mor_map:
                squares.append(LiftingSquare(i, p, top, bottom))
    return squares


def has_rlp(test_maps: list[CatFunctor], p: CatFunctor,
            node_budget: int | None = 2_000_000) -> bool:
    """``p`` lifts against every square built on every map in ``test_maps``."""
    for i in test_maps:
        for sq in enumerate_squares(i, p, node_budget):
            if solve_lifting(sq, node_budget) is None:
                return False
    return True


def has_llp(i: CatFunctor, test_maps: list[CatFunctor],
            node_budget: int | None = 2_000_000) -> bool:
    for p in test_maps:
        for sq in enumerate_squares(i, p, node_budget):
            if solve_lifting(sq, node_budget) is None:
                return False
    return True


# ---------------------------------------------------------------------------
# generating sets for the canonical model structure (configuration data;
# validated against the isofibration oracle, not assumed)


def default_generating_cofibrations() -> list[CatFunctor]:
    """{empty -> pt, pt + pt -> arrow, parallel pair -> arrow}."""
    pt = terminal_category()
    arrow = walking_arrow()
    g0 = CatFunctor(empty_category(), pt, {}, {})
    two = coproduct(pt, pt)
    g1 = CatFunctor(two, arrow,
                    {"pt#0": "a", "pt#1": "b"},
                    {"id_pt#0": "id_a", "id_pt#1": "id_b"})
    pp = parallel_pair()
    g2 = CatFunctor(pp, arrow,
                    {"a": "a", "b": "b"},
                    {"id_a": "id_a", "id_b": "id_b", "f": "f", "g": "f"})
    return [g0, g1, g2]


def default_generating_acyclic_cofibrations() -> list[CatFunctor]:
    """{pt -> walking isomorphism}."""
    pt = terminal_category()
    E = walking_iso()
    return [CatFunctor(pt, E, {"pt": "a"}, {"id_pt": "id_a"})]


# ---------------------------------------------------------------------------
# pushouts of categories


def pushout_category(i: CatFunctor, f: CatFunctor,
                     max_morphisms: int = 400,
                     max_word_len: int = 10) -> PushoutResult:
    """The pushout of ``cod(i) <-i- A -f-> cod(f)`` by bounded word closure.

    Raises :class:`BudgetError` if the closure exceeds its budget (pushouts
    in the category of categories can be infinite).
    """
    if i.domain != f.domain:
        raise ValueError("pushout legs must share their domain")
    A, B, C = i.domain, i.codomain, f.codomain

    # glue objects
    ob_label: dict[str, str] = {}
    for x in B.objects:
        ob_label[("B", x)] = f"B:{x}"
    for x in C.objects:
        ob_label[("C", x)] = f"C:{x}"

    def ob_merge(a, b):
        la, lb = ob_label[a], ob_label[b]
        if la != lb:
            low = min(la, lb)
            for k in ob_label:
                if ob_label[k] in (la, lb):
                    ob_label[k] = low

    for a in A.objects:
        ob_merge(("B", i.ob_map[a]), ("C", f.ob_map[a]))
    objects = sorted(set(ob_label.values()))

    # glue letters
    letter_label: dict[tuple[str, str], str] = {}
    for m in B.morphisms:
        letter_label[("B", m)] = f"B:{m}"
    for m in C.morphisms:
        letter_label[("C", m)] = f"C:{m}"

    def letter_merge(a, b):
        la, lb = letter_label[a], letter_label[b]
        if la != lb:
            low = min(la, lb)
            for k in letter_label:
                if letter_label[k] in (la, lb):
                    letter_label[k] = low

    for m in A.morphisms:
        letter_merge(("B", i.mor_map[m]), ("C", f.mor_map[m]))

    members: dict[str, list[tuple[str, str]]] = {}
    for key, lab in letter_label.items():
        members.setdefault(lab, []).append(key)

    letters: dict[str, tuple[str, str]] = {}
    identity_letters: set[str] = set()
    sides = {"B": B, "C": C}
    for lab, mem in members.items():
        side, m = mem[0]
        S = sides[side]
        letters[lab] = (ob_label[(side, S.source[m])],
                        ob_label[(side, S.target[m])])
        if any(sides[s].is_identity(mm) for s, mm in mem):
            identity_letters.add(lab)

    rules: dict[tuple[str, str], set[str]] = {}
    for side, S in sides.items():
        for (m1, m2), m3 in S.compose.items():
            key = (letter_label[(side, m1)], letter_label[(side, m2)])
            rules.setdefault(key, set()).add(letter_label[(side, m3)])

    cat, letter_map = bounded_closure(objects, letters, rules,
                                      identity_letters,
                                      max_morphisms, max_word_len)
    from_left = CatFunctor(B, cat,
                           {x: ob_label[("B", x)] for x in B.objects},
                           {m: letter_map[letter_label[("B", m)]]
                            for m in B.morphisms})
    from_right = CatFunctor(C, cat,
                            {x: ob_label[("C", x)] for x in C.objects},
                            {m: letter_map[letter_label[("C", m)]]
                             for m in C.morphisms})
    return PushoutResult(cat, from_left, from_right)


# ---------------------------------------------------------------------------
# bounded small object argument in diagram categories


def solve_diagram_lifting(i: DiagramMap, p: DiagramMap,
                          top: DiagramMap, bottom: DiagramMap,
                          node_budget: int = 500_000) -> DiagramMap | None:
    """A filler for a commuting square of diagram maps, or None."""
    B, X = i.target, p.source
    shape = B.shape
    variables = [(o, e) for o in shape.objects for e in B.values[o]]
    forced: dict[tuple[str, str], str] = {}
    for o in shape.objects:
        for a in i.source.values[o]:
            b = i.components[o][a]
            want = top.components[o][a]
            if forced.get((o, b), want) != want:
                return None
            forced[(o, b)] = want
    assign: dict[tuple[str, str], str] = {}
    nodes = 0

    def consistent(o, e, img) -> bool:
        if p.components[o][img] != bottom.components[o][e]:
            return False
        for m in shape.morphisms:
            if shape.source[m] == o:
                o2, e2 = shape.target[m], B.action[m][e]
                if (o2, e2) == (o, e):
                    if X.action[m][img] != img:
                        return False
                elif (o2, e2) in assign and X.action[m][img] != assign[(o2, e2)]:
                    return False
            if shape.target[m] == o:
                o1 = shape.source[m]
                for e1 in B.values[o1]:
                    if B.action[m][e1] == e and (o1, e1) in assign:
                        if X.action[m][assign[(o1, e1)]] != img:
                            return False
        return True

    def extend(k: int):
        nonlocal nodes
        if k == len(variables):
            comps: dict[str, dict[str, str]] = {o: {} for o in shape.objects}
            for (o, e), img in assign.items():
                comps[o][e] = img
            yield DiagramMap(B, X, comps)
            return
        o, e = variables[k]
        candidates = [forced[(o, e)]] if (o, e) in forced else list(X.values[o])
        for img in candidates:
            nodes += 1
            if nodes > node_budget:
                raise BudgetError("diagram lifting search exceeded budget")
            if consistent(o, e, img):
                assign[(o, e)] = img
                yield from extend(k + 1)
                del assign[(o, e)]

    for h in extend(0):
        return h
    return None


def diagram_squares(i: DiagramMap, p: DiagramMap,
                    node_budget: int = 500_000
                    ) -> list[tuple[DiagramMap, DiagramMap]]:
    """All commuting squares (top, bottom) from ``i`` to ``p``."""
    tops = enumerate_diagram_maps(i.source, p.source, node_budget)
    bottoms = enumerate_diagram_maps(i.target, p.target, node_budget)
    out = []
    for top in tops:
        pt = compose_diagram_maps(p, top)
        for bottom in bottoms:
            if pt.key() == compose_diagram_maps(bottom, i).key():
                out.append((top, bottom))
    return out


def diagram_has_rlp(gens: list[DiagramMap], p: DiagramMap,
                    node_budget: int = 500_000) -> bool:
    for i in gens:
        for top, bottom in diagram_squares(i, p, node_budget):
            if solve_diagram_lifting(i, p, top, bottom, node_budget) is None:
                return False
    return True


def bounded_soa(gens: list[DiagramMap], f: DiagramMap,
                max_stages: int,
                node_budget: int = 500_000) -> FactorizationResult:
    """Bounded small object argument for ``f`` against the maps ``gens``.

    Each stage glues on the coproduct of all currently unsolved lifting
    problems via a level-wise pushout (squares that already admit a filler
    pose no problem and are skipped, so the procedure can stabilize in
    finitely many stages).  Stops early once the remainder has the right
    lifting property; the ``saturated`` flag records whether that happened
    within ``max_stages``.
    """
    current = f.source
    left = identity_diagram_map(f.source)
    remainder = f
    cells: list[list[SoaStageCell]] = []
    stages = 0
    for _ in range(max_stages):
        if diagram_has_rlp(gens, remainder, node_budget):
            break
        stage_cells: list[SoaStageCell] = []
        for k, gen in enumerate(gens):
            for top, bottom in diagram_squares(gen, remainder, node_budget):
                if solve_diagram_lifting(gen, remainder, top, bottom,
                                         node_budget) is None:
                    stage_cells.append(SoaStageCell(k, top, bottom))
        if not stage_cells:
            break
        shape = current.shape
        dom_sum, dom_inj = coproduct_diagrams(
            [gens[c.generator].source for c in stage_cells])
        cod_sum, cod_inj = coproduct_diagrams(
            [gens[c.generator].target for c in stage_cells])
        sum_gen = DiagramMap(dom_sum, cod_sum, {
            o: {dom_inj[k].components[o][e]:
                cod_inj[k].components[o][gens[c.generator].components[o][e]]
                for k, c in enumerate(stage_cells)
                for e in gens[c.generator].source.values[o]}
            for o in shape.objects})
        attach = DiagramMap(dom_sum, current, {
            o: {dom_inj[k].components[o][e]: stage_cells[k].attach.components[o][e]
                for k in range(len(stage_cells))
                for e in gens[stage_cells[k].generator].source.values[o]}
            for o in shape.objects})
        new, from_current, from_cells = diagram_pushout(attach, sum_gen)
        q_comps = {}
        for o in shape.objects:
            comp = {}
            for e in current.values[o]:
                comp[from_current.components[o][e]] = remainder.components[o][e]
            for k, c in enumerate(stage_cells):
                gen = gens[c.generator]
                for e in gen.target.values[o]:
                    tag = from_cells.components[o][cod_inj[k].components[o][e]]
                    want = c.against.components[o][e]
                    if comp.get(tag, want) != want:
                        raise AssertionError("inconsistent remainder after pushout")
                    comp[tag] = want
            q_comps[o] = comp
        remainder = DiagramMap(new, f.target, q_comps)
        left = compose_diagram_maps(from_current, left)
        current = new
        cells.append(stage_cells)
        stages += 1
    saturated = diagram_has_rlp(gens, remainder, node_budget)
    return FactorizationResult(current, left, remainder, stages,
                               saturated, cells)
