import pytest

from smallcat import catspec, fincat, invcat, nabla, setval
from smallcat.catspec import (
    Block,
    CatspecDocument,
    CatspecError,
    category_block,
    complex_block,
    diagram_block,
    dmap_block,
    emit,
    functor_block,
    group_block,
    involution_block,
    load,
    operad_block,
    parse,
    rsset_block,
    sset_block,
)
from smallcat.chaincx import two_term_identity_complex
from smallcat.cycops import terminal_operad
from smallcat.fincat import chain_category, cyclic_group, walking_arrow


def walking_arrow_doc() -> CatspecDocument:
    return CatspecDocument((category_block("arrow", walking_arrow()),))


def test_emit_parse_roundtrip_document():
    doc = walking_arrow_doc()
    text = emit(doc)
    assert parse(text) == doc
    assert emit(parse(text)) == text


def test_emit_is_canonical_idempotent():
    doc = walking_arrow_doc()
    text = emit(doc)
    assert emit(parse(emit(parse(text)))) == text
    # scrambled entry order parses to the same document
    lines = text.splitlines()
    body = lines[1:-1]
    scrambled = "\n".join([lines[0]] + sorted(body, reverse=True) + [lines[-1]]) + "\n"
    assert emit(parse(scrambled)) == text


def test_load_walking_arrow_validates():
    loaded = load(emit(walking_arrow_doc()))
    assert loaded.categories["arrow"] == walking_arrow()


def test_dangling_reference_names_line_and_identifier():
    text = "functor F nowhere alsonowhere\nend\n"
    with pytest.raises(CatspecError) as exc:
        load(text)
    assert "nowhere" in str(exc.value)
    assert "line 1" in str(exc.value)


def test_unknown_kind_and_unterminated_block():
    with pytest.raises(CatspecError):
        parse("frobnicate X\nend\n")
    with pytest.raises(CatspecError) as exc:
        parse("category C\nobject x\n")
    assert "unterminated" in str(exc.value)


def test_invalid_category_rejected_on_load():
    C = walking_arrow()
    bad = dict(C.compose)
    bad[("id_b", "f")] = "id_b"
    block = category_block("broken", fincat.FiniteCategory.build(
        C.objects, C.morphisms, C.source, C.target, C.identity, bad))
    with pytest.raises(CatspecError):
        load(emit(CatspecDocument((block,))))


def full_document():
    arrow = walking_arrow()
    chain = chain_category(2)
    iota = fincat.CatFunctor(arrow, chain, {"a": "0", "b": "1"},
                             {"id_a": "id_0", "id_b": "id_1", "f": "le_0_1"})
    X = setval.SetDiagram.build(
        arrow, {"a": ("u", "v"), "b": ("p",)},
        {"id_a": {"u": "u", "v": "v"}, "id_b": {"p": "p"},
         "f": {"u": "p", "v": "p"}})
    Y = setval.SetDiagram.build(
        arrow, {"a": ("s",), "b": ("t",)},
        {"id_a": {"s": "s"}, "id_b": {"t": "t"}, "f": {"s": "t"}})
    h = setval.DiagramMap(Y, X, {"a": {"s": "u"}, "b": {"t": "p"}})
    G = cyclic_group(2)
    ident = fincat.identity_functor(arrow)
    LX = invcat.L_inv(walking_arrow())
    rs = nabla.representable_rsset(1, 0)
    ss = nabla.representable_sset(1, 1)
    blocks = (
        category_block("arrow", arrow),
        category_block("chain", chain),
        category_block("product", LX.base),
        functor_block("iota", iota, "arrow", "chain"),
        functor_block("ident", ident, "arrow", "arrow"),
        group_block("c2", G),
        Block("action", "trivial", ("c2", "arrow"),
              (("map", "g0", "ident"), ("map", "g1", "ident"))),
        involution_block("swap", LX, "product"),
        diagram_block("X", X, "arrow"),
        diagram_block("Y", Y, "arrow"),
        dmap_block("h", h, "Y", "X"),
        sset_block("simplex1", ss),
        rsset_block("signed0", rs),
        operad_block("terminal", terminal_operad(2)),
        complex_block("twoterm", two_term_identity_complex(3)),
    )
    return CatspecDocument(blocks)


def test_full_document_roundtrip_and_load():
    doc = full_document()
    text = emit(doc)
    assert parse(text) == doc
    assert emit(parse(text)) == text
    loaded = load(text)
    assert set(loaded.categories) == {"arrow", "chain", "product"}
    assert set(loaded.functors) == {"iota", "ident"}
    assert set(loaded.groups) == {"c2"}
    assert set(loaded.actions) == {"trivial"}
    assert set(loaded.involutions) == {"swap"}
    assert set(loaded.diagrams) == {"X", "Y"}
    assert set(loaded.dmaps) == {"h"}
    assert set(loaded.ssets) == {"simplex1"}
    assert set(loaded.rssets) == {"signed0"}
    assert set(loaded.operads) == {"terminal"}
    assert set(loaded.complexes) == {"twoterm"}
    assert loaded.complexes["twoterm"].dims == {-1: 1, 0: 1}


def test_duplicate_block_rejected():
    text = emit(walking_arrow_doc()) + emit(walking_arrow_doc())
    with pytest.raises(CatspecError) as exc:
        parse(text)
    assert "duplicate" in str(exc.value)


def test_cyclic_operad_block_roundtrip():
    from smallcat.cycops import terminal_cyclic_operad
    Q = terminal_cyclic_operad(2)
    block = operad_block("tcyc", Q.operad, Q.extended)
    loaded = load(emit(CatspecDocument((block,))))
    assert "tcyc" in loaded.cyclic_operads
    assert loaded.cyclic_operads["tcyc"].extended == Q.extended
