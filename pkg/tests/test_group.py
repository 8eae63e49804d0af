import itertools

import pytest
from hypothesis import given, strategies as st

from dsing.errors import ConnectingSetError, OrderMismatchError
from dsing.group import (
    DihedralElement as E,
    build_cayley_graph,
    group_elements,
    inverse,
    multiply,
    parse_connecting_set,
    parse_elements,
    right_translation_is_automorphism,
    validate_connecting_set,
    vertex_index,
)


def rot(k, n):
    return E.rotation(k, n)


def ref(j, n):
    return E.reflection(j, n)


def test_reflection_is_involution():
    assert multiply(ref(1, 3), ref(1, 3)) == E.identity(3)


def test_defining_relation():
    # b a = a^-1 b = a^2 b in D_3
    assert multiply(ref(0, 3), rot(1, 3)) == ref(2, 3)


def test_cyclic_exponent_reduction():
    assert multiply(rot(2, 3), rot(2, 3)) == rot(1, 3)


def test_multiply_order_mismatch():
    with pytest.raises(OrderMismatchError):
        multiply(rot(1, 3), rot(1, 4))


@pytest.mark.parametrize(
    "x, expected",
    [(rot(1, 4), rot(3, 4)), (ref(2, 5), ref(2, 5)), (E.identity(6), E.identity(6))],
)
def test_inverse(x, expected):
    assert inverse(x) == expected


def test_exponent_always_reduced():
    assert E(-1, False, 5).exponent == 4
    assert E(12, True, 5) == ref(2, 5)


@st.composite
def elements(draw, n=None):
    n = n or draw(st.integers(3, 12))
    return n, [E(draw(st.integers(0, n - 1)), draw(st.booleans()), n) for _ in range(3)]


@given(elements())
def test_group_axioms(data):
    n, (x, y, z) = data
    assert (x * y) * z == x * (y * z)
    assert x * inverse(x) == E.identity(n) == inverse(x) * x
    assert x * E.identity(n) == x


def test_group_elements_and_vertex_index_agree():
    for kind in ("cyclic", "dihedral"):
        verts = group_elements(kind, 5)
        assert [vertex_index(v) for v in verts] == list(range(len(verts)))
    assert group_elements("cyclic", 4)[-1] == E.identity(4)


def test_valid_generating_set():
    H = parse_connecting_set("1,3", 4, "cyclic")
    assert H.rotations == {1, 3}


def test_not_generating():
    with pytest.raises(ConnectingSetError) as err:
        parse_connecting_set("2", 4, "cyclic")
    assert err.value.condition == "iii"
    H = parse_connecting_set("2", 4, "cyclic", require_generating=False)
    assert H.rotations == {2}


def test_not_symmetric_names_element():
    with pytest.raises(ConnectingSetError) as err:
        parse_connecting_set("1", 4, "cyclic")
    assert err.value.condition == "i"
    assert err.value.offending == rot(1, 4)


def test_contains_identity():
    with pytest.raises(ConnectingSetError) as err:
        validate_connecting_set([E.identity(5), rot(1, 5), rot(4, 5)], 5, "cyclic")
    assert err.value.condition == "ii"


def test_small_n_rejected():
    with pytest.raises(ValueError):
        validate_connecting_set([], 2, "cyclic", require_generating=False)


def test_empty_set_allowed_when_not_generating():
    H = parse_connecting_set("", 5, "dihedral", require_generating=False)
    G = build_cayley_graph(H)
    assert G.edge_count() == 0


@pytest.mark.parametrize(
    "text, n, rot_exp, ref_exp",
    [
        ("r:1,2;f:0,1", 3, {1, 2}, {0, 1}),
        (" f : 0 , 1 ", 3, set(), {0, 1}),
        ("r:1,4", 5, {1, 4}, set()),
        ("f:2;r:1,3", 4, {1, 3}, {2}),
    ],
)
def test_dihedral_grammar(text, n, rot_exp, ref_exp):
    H = parse_connecting_set(text, n, "dihedral", require_generating=False)
    assert H.rotations == rot_exp and H.reflections == ref_exp
    assert parse_connecting_set(H.to_text(), n, "dihedral", require_generating=False) == H


@pytest.mark.parametrize("bad", ["r:1;r:2", "x:1", "r:1,,2", "r:7", "f:-1"])
def test_dihedral_grammar_rejects(bad):
    with pytest.raises(ConnectingSetError) as err:
        parse_elements(bad, 5, "dihedral")
    assert err.value.condition == "parse"


def test_cayley_four_cycle(four_cycle):
    G = build_cayley_graph(parse_connecting_set("1,3", 4, "cyclic"))
    assert G.matrix() == four_cycle


def test_cayley_triangle():
    G = build_cayley_graph(parse_connecting_set("1,2", 3, "cyclic"))
    assert G.matrix() == [[0, 1, 1], [1, 0, 1], [1, 1, 0]]


def _edges_by_definition(H, kind, n):
    verts = group_elements(kind, n)
    return {
        frozenset((u, v)) for u, v in itertools.product(verts, verts) if v * inverse(u) in H.elements
    }


def test_dihedral_b_ab_is_six_cycle():
    H = parse_connecting_set("f:0,1", 3, "dihedral")
    G = build_cayley_graph(H)
    A = G.matrix()
    assert all(sum(row) == 2 for row in A)
    # connected and 2-regular on 6 vertices -> a single 6-cycle
    seen, stack = {0}, [0]
    while stack:
        v = stack.pop()
        for w, a in enumerate(A[v]):
            if a and w not in seen:
                seen.add(w)
                stack.append(w)
    assert len(seen) == 6
    edges = {frozenset((G.vertices[i], G.vertices[j])) for i in range(6) for j in range(6) if A[i][j]}
    assert edges == _edges_by_definition(H, "dihedral", 3)
    assert G.vertex_labels() == ["a", "a^2", "a^3", "ab", "a^2b", "a^3b"]


@pytest.mark.parametrize(
    "text, kind, n, g",
    [("1,3", "cyclic", 4, rot(1, 4)), ("f:0,1", "dihedral", 3, ref(0, 3)), ("f:0,1", "dihedral", 3, ref(2, 3))],
)
def test_right_translation(text, kind, n, g):
    G = build_cayley_graph(parse_connecting_set(text, n, kind))
    assert right_translation_is_automorphism(G, g)


@st.composite
def dihedral_sets(draw):
    n = draw(st.integers(3, 9))
    pairs = draw(st.sets(st.integers(1, n // 2)))
    rots = {k for k in pairs} | {n - k for k in pairs}
    refs = draw(st.sets(st.integers(0, n - 1)))
    elems = [rot(k, n) for k in rots] + [ref(j, n) for j in refs]
    return validate_connecting_set(elems, n, "dihedral", require_generating=False)


@given(dihedral_sets())
def test_adjacency_properties(H):
    G = build_cayley_graph(H)
    A = G.matrix()
    m = len(A)
    assert all(A[i][j] == A[j][i] for i in range(m) for j in range(m))
    assert all(A[i][i] == 0 for i in range(m))
    assert all(sum(row) == len(H) for row in A)
    n = H.n
    assert [r[:n] for r in A[:n]] == [r[n:] for r in A[n:]]
    assert [r[n:] for r in A[:n]] == [r[:n] for r in A[n:]]
    for g in group_elements("dihedral", n):
        assert right_translation_is_automorphism(G, g)


@given(st.integers(3, 14), st.data())
def test_cyclic_adjacency_is_circulant(n, data):
    pairs = data.draw(st.sets(st.integers(1, n // 2)))
    elems = [rot(k, n) for k in pairs] + [rot(n - k, n) for k in pairs]
    H = validate_connecting_set(elems, n, "cyclic", require_generating=False)
    A = build_cayley_graph(H).matrix()
    assert all(A[i][j] == A[0][(j - i) % n] for i in range(n) for j in range(n))
