"""Typed diagram terms over tensor words of named objects.

An object word is a tuple of symbol names, the empty tuple being the tensor
unit.  Terms are Id(word), Gen(name, src, tgt), Compose(f, g) for f after g,
and Tensor(f, g); every node carries its source and target words and
construction rejects ill-typed composites.  `evaluate` maps a term through
an assignment of dimensions to symbols and matrices to generator names,
functorially: composition to matrix product, tensor to Kronecker product,
identities to identity matrices.  The same walker serves graded evaluation,
since any assignment exposing identity(word) and generator(gen) with
matrix-like values (supporting * and .tensor) plugs in unchanged.

Terms serialize to JSON s-expressions, e.g.

    {"op": "compose", "args": [{"op": "gen", "name": "evl", ...},
                               {"op": "id", "word": ["Q"]}]}
"""

from __future__ import annotations

from .exact import ExactMatrix, ShapeMismatch


class TypeMismatch(Exception):
    """Boundary words do not match for the attempted composite."""


class UnassignedGenerator(Exception):
    """Evaluation met a generator or symbol the assignment does not cover."""


def word(*symbols):
    return tuple(symbols)


def _fmt_word(w):
    return "(" + " ".join(w) + ")" if w else "1"


class Term:
    """Base class; src and tgt are object words (tuples of symbol names)."""

    src = ()
    tgt = ()

    def __mul__(self, other):
        return compose(self, other)

    def __matmul__(self, other):
        return tensor(self, other)


class Id(Term):

    def __init__(self, w):
        self.src = tuple(w)
        self.tgt = tuple(w)

    def __repr__(self):
        return "id%s" % (_fmt_word(self.src),)


class Gen(Term):

    def __init__(self, name, src, tgt):
        self.name = name
        self.src = tuple(src)
        self.tgt = tuple(tgt)

    def __repr__(self):
        return self.name


class Compose(Term):
    """f after g; built through compose() which checks the boundary."""

    def __init__(self, f, g):
        if f.src != g.tgt:
            raise TypeMismatch(
                "cannot compose: left factor expects %s but right factor "
                "produces %s" % (_fmt_word(f.src), _fmt_word(g.tgt)))
        self.f = f
        self.g = g
        self.src = g.src
        self.tgt = f.tgt

    def __repr__(self):
        return "(%r . %r)" % (self.f, self.g)


class Tensor(Term):

    def __init__(self, f, g):
        self.f = f
        self.g = g
        self.src = f.src + g.src
        self.tgt = f.tgt + g.tgt

    def __repr__(self):
        return "(%r x %r)" % (self.f, self.g)


def compose(*terms):
    """Compose left to right: compose(a, b, c) is a after b after c.

    Identity factors are absorbed, so compose(Id(w), t) normalizes to t.
    """
    if not terms:
        raise TypeMismatch("compose needs at least one term")
    out = terms[0]
    for t in terms[1:]:
        if isinstance(out, Id):
            if out.src != t.tgt:
                raise TypeMismatch(
                    "cannot compose: left factor expects %s but right factor "
                    "produces %s" % (_fmt_word(out.src), _fmt_word(t.tgt)))
            out = t
        elif isinstance(t, Id):
            if out.src != t.tgt:
                raise TypeMismatch(
                    "cannot compose: left factor expects %s but right factor "
                    "produces %s" % (_fmt_word(out.src), _fmt_word(t.tgt)))
        else:
            out = Compose(out, t)
    return out


def tensor(*terms):
    """Tensor left to right; empty-word identities are absorbed."""
    if not terms:
        return Id(())
    out = None
    for t in terms:
        if isinstance(t, Id) and t.src == ():
            continue
        out = t if out is None else Tensor(out, t)
    return out if out is not None else Id(())


class EvalAssignment:
    """Assigns integer dimensions to symbols and matrices to generators."""

    def __init__(self, dims, gens, field=None):
        self.dims = dict(dims)
        self.gens = dict(gens)
        self.field = field

    def word_dim(self, w):
        d = 1
        for s in w:
            if s not in self.dims:
                raise UnassignedGenerator("no dimension assigned to symbol %r" % s)
            d *= self.dims[s]
        return d

    def identity(self, w):
        return ExactMatrix.identity(self.word_dim(w), self.field)

    def generator(self, gen):
        if gen.name not in self.gens:
            raise UnassignedGenerator("no matrix assigned to generator %r"
                                      % gen.name)
        m = self.gens[gen.name]
        want = (self.word_dim(gen.tgt), self.word_dim(gen.src))
        if (m.rows, m.cols) != want:
            raise ShapeMismatch(
                "generator %r evaluates to %dx%d but its boundary %s -> %s "
                "needs %dx%d" % (gen.name, m.rows, m.cols,
                                 _fmt_word(gen.src), _fmt_word(gen.tgt),
                                 want[1], want[0]))
        return m


def evaluate(term, assignment):
    """Evaluate a term to a matrix through the assignment, functorially."""
    if isinstance(term, Id):
        return assignment.identity(term.src)
    if isinstance(term, Gen):
        return assignment.generator(term)
    if isinstance(term, Compose):
        return evaluate(term.f, assignment) * evaluate(term.g, assignment)
    if isinstance(term, Tensor):
        return evaluate(term.f, assignment).tensor(evaluate(term.g, assignment))
    raise TypeError("not a term: %r" % (term,))


def term_to_json(term):
    if isinstance(term, Id):
        return {"op": "id", "word": list(term.src)}
    if isinstance(term, Gen):
        return {"op": "gen", "name": term.name,
                "src": list(term.src), "tgt": list(term.tgt)}
    if isinstance(term, Compose):
        return {"op": "compose", "args": [term_to_json(term.f),
                                          term_to_json(term.g)]}
    if isinstance(term, Tensor):
        return {"op": "tensor", "args": [term_to_json(term.f),
                                         term_to_json(term.g)]}
    raise TypeError("not a term: %r" % (term,))


def term_from_json(obj):
    op = obj.get("op")
    if op == "id":
        return Id(tuple(obj["word"]))
    if op == "gen":
        return Gen(obj["name"], tuple(obj["src"]), tuple(obj["tgt"]))
    if op == "compose":
        return compose(*[term_from_json(a) for a in obj["args"]])
    if op == "tensor":
        return tensor(*[term_from_json(a) for a in obj["args"]])
    raise TypeMismatch("unknown term op %r" % (op,))
