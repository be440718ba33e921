"""Diagram term language: typing, evaluation, serialization."""

from __future__ import annotations

import random

import pytest

from pivcat.exact import ExactMatrix, ShapeMismatch, random_matrix
from pivcat.terms import (
    EvalAssignment, Gen, Id, TypeMismatch, UnassignedGenerator, compose,
    evaluate, tensor, term_from_json, term_to_json, word,
)


def _random_assignment(rng):
    dims = {"A": rng.randint(1, 3), "B": rng.randint(1, 3), "C": rng.randint(1, 3)}
    gens = {}
    return dims, gens


def test_compose_type_checking():
    f = Gen("f", word("A"), word("B"))
    g = Gen("g", word("B"), word("C"))
    h = compose(g, f)
    assert h.src == word("A") and h.tgt == word("C")
    with pytest.raises(TypeMismatch):
        compose(f, g)


def test_identity_absorption():
    f = Gen("f", word("A"), word("B"))
    assert compose(Id(word("B")), f) is f
    assert compose(f, Id(word("A"))) is f
    with pytest.raises(TypeMismatch):
        compose(Id(word("A")), f)
    t = tensor(Id(()), f, Id(()))
    assert t is f


def test_tensor_boundaries():
    f = Gen("f", word("A"), word("B"))
    g = Gen("g", word("C"), word("A", "A"))
    t = tensor(f, g)
    assert t.src == word("A", "C")
    assert t.tgt == word("B", "A", "A")


def test_evaluate_functorial_seeded():
    rng = random.Random(91)
    for _ in range(20):
        da, db, dc = rng.randint(1, 3), rng.randint(1, 3), rng.randint(1, 3)
        mf = random_matrix(db, da, rng)
        mg = random_matrix(dc, db, rng)
        asg = EvalAssignment({"A": da, "B": db, "C": dc}, {"f": mf, "g": mg})
        f = Gen("f", word("A"), word("B"))
        g = Gen("g", word("B"), word("C"))
        assert evaluate(compose(g, f), asg) == mg * mf
        assert evaluate(tensor(f, g), asg) == mf.tensor(mg)
        assert evaluate(Id(word("A", "B")), asg) == ExactMatrix.identity(da * db)


def test_interchange_law_seeded():
    rng = random.Random(17)
    for _ in range(10):
        dims = {"A": 2, "B": rng.randint(1, 3), "C": 2, "D": rng.randint(1, 3)}
        m1 = random_matrix(dims["B"], dims["A"], rng)
        m2 = random_matrix(dims["D"], dims["C"], rng)
        asg = EvalAssignment(dims, {"u": m1, "v": m2})
        u = Gen("u", word("A"), word("B"))
        v = Gen("v", word("C"), word("D"))
        left = tensor(compose(u, Id(word("A"))), compose(Id(word("D")), v))
        right = compose(tensor(u, Id(word("D"))), tensor(Id(word("A")), v))
        assert evaluate(left, asg) == evaluate(right, asg)


def test_snake_term_evaluates_to_identity():
    # left snake on the standard dual basis data: value frozen to the identity
    n = 3
    cvl = ExactMatrix.zeros(n * n, 1)
    evl = ExactMatrix.zeros(1, n * n)
    for i in range(n):
        cvl.data[i * n + i] = cvl.field.one()
        evl.data[i * n + i] = evl.field.one()
    asg = EvalAssignment({"P": n, "Q": n}, {"cvl": cvl, "evl": evl})
    snake = compose(
        tensor(Gen("evl", word("Q", "P"), ()), Id(word("Q"))),
        tensor(Id(word("Q")), Gen("cvl", (), word("P", "Q"))),
    )
    assert snake.src == word("Q") and snake.tgt == word("Q")
    assert evaluate(snake, asg) == ExactMatrix.identity(n)


def test_unassigned_generator():
    asg = EvalAssignment({"A": 2}, {})
    with pytest.raises(UnassignedGenerator):
        evaluate(Gen("missing", word("A"), word("A")), asg)
    with pytest.raises(UnassignedGenerator):
        evaluate(Id(word("Z")), asg)


def test_shape_validation_against_boundary():
    asg = EvalAssignment({"A": 2, "B": 3},
                         {"f": ExactMatrix.zeros(2, 2)})
    with pytest.raises(ShapeMismatch):
        evaluate(Gen("f", word("A"), word("B")), asg)


def test_json_round_trip():
    f = Gen("f", word("A"), word("B"))
    g = Gen("g", word("B"), word("C"))
    t = tensor(compose(g, f), Id(word("A")))
    blob = term_to_json(t)
    back = term_from_json(blob)
    assert back.src == t.src and back.tgt == t.tgt
    assert term_to_json(back) == blob


def test_json_rejects_unknown_op():
    with pytest.raises(TypeMismatch):
        term_from_json({"op": "braid", "args": []})


def test_json_nary_fold():
    t = term_from_json({
        "op": "compose",
        "args": [{"op": "id", "word": ["A"]},
                 {"op": "gen", "name": "e", "src": ["A"], "tgt": ["A"]},
                 {"op": "id", "word": ["A"]}]})
    assert isinstance(t, Gen)
