"""Pivotal pairs in exact matrix categories.

A pivotal pair is two objects P, Q of equal dimension n together with four
structure maps, all stored as dense exact matrices over the session field:

    cvl: 1 -> P (x) Q        evl: Q (x) P -> 1
    cvr: 1 -> Q (x) P        evr: P (x) Q -> 1

subject to the four snake identities (two making (Q, evl, cvl) exhibit Q as
a left dual of P, two making it a right dual via evr, cvr).  Basis order on
a tensor factor pair is row-major, matching ExactMatrix.tensor.

`from_matrix(n, q)` builds the normalized pair of an invertible n x n Gram
matrix q: cvl and evl are the canonical duality vectors (coefficients
delta_ij), cvr carries q and evr carries q^{-1}.  All constructors
re-verify the snake identities they promise instead of trusting algebra.
"""

from __future__ import annotations

from math import isqrt

from .exact import ExactMatrix, ShapeMismatch, mul, random_invertible, tens
from .report import Report


class NotADuality(Exception):
    """Candidate duality data fails a snake identity."""


class PivotalPair:
    """Container for (n, cvl, evl, cvr, evr); shape-checked, not snake-checked.

    Use check_pair / pair.check() to verify the snakes; the named
    constructors from_matrix and from_braided return verified pairs.
    """

    def __init__(self, cvl, evl, cvr, evr):
        n = isqrt(cvl.rows)
        if n * n != cvl.rows or cvl.cols != 1:
            raise ShapeMismatch("cvl must be an n^2 x 1 column")
        for name, m, shape in (("evl", evl, (1, n * n)),
                               ("cvr", cvr, (n * n, 1)),
                               ("evr", evr, (1, n * n))):
            if (m.rows, m.cols) != shape:
                raise ShapeMismatch("%s has shape %dx%d, want %dx%d"
                                    % (name, m.rows, m.cols, *shape))
        self.n = n
        self.cvl = cvl
        self.evl = evl
        self.cvr = cvr
        self.evr = evr
        self.field = cvl.field

    def identity(self):
        """Identity on P (equally on Q); both have dimension n."""
        return ExactMatrix.identity(self.n, self.field)

    def check(self):
        return check_pair(self)

    def to_json(self):
        return {"n": self.n, "cvl": self.cvl.to_json(), "evl": self.evl.to_json(),
                "cvr": self.cvr.to_json(), "evr": self.evr.to_json()}

    @classmethod
    def from_json(cls, obj, field=None):
        return cls(ExactMatrix.from_json(obj["cvl"], field),
                   ExactMatrix.from_json(obj["evl"], field),
                   ExactMatrix.from_json(obj["cvr"], field),
                   ExactMatrix.from_json(obj["evr"], field))

    def __repr__(self):
        return "PivotalPair(n=%d over %r)" % (self.n, self.field)


def check_pair(pair):
    """Report on the four snake identities, exactly."""
    n = pair.n
    eye = pair.identity()
    rep = Report("pivotal pair (n=%d)" % n)
    rep.require_equal(
        "snake_left_Q",
        mul(tens(pair.evl, eye), tens(eye, pair.cvl)), eye)
    rep.require_equal(
        "snake_left_P",
        mul(tens(eye, pair.evl), tens(pair.cvl, eye)), eye)
    rep.require_equal(
        "snake_right_P",
        mul(tens(pair.evr, eye), tens(eye, pair.cvr)), eye)
    rep.require_equal(
        "snake_right_Q",
        mul(tens(eye, pair.evr), tens(pair.cvr, eye)), eye)
    return rep


def from_matrix(n, qmat):
    """Normalized pivotal pair of an invertible Gram matrix.

    cvl = sum_i v_i (x) w_i and evl(w_i (x) v_j) = delta_ij; the right side
    twists by the Gram matrix: cvr = sum q_ij w_i (x) v_j and
    evr(v_i (x) w_j) = (q^{-1})_ij.  Raises SingularMatrix for singular q.
    """
    if (qmat.rows, qmat.cols) != (n, n):
        raise ShapeMismatch("Gram matrix must be %dx%d" % (n, n))
    pmat = qmat.invert()
    fld = qmat.field
    cvl = ExactMatrix.zeros(n * n, 1, fld)
    evl = ExactMatrix.zeros(1, n * n, fld)
    cvr = ExactMatrix.zeros(n * n, 1, fld)
    evr = ExactMatrix.zeros(1, n * n, fld)
    one = fld.one()
    for i in range(n):
        cvl.data[i * n + i] = one
        evl.data[i * n + i] = one
        for j in range(n):
            cvr.data[i * n + j] = qmat[i, j]
            evr.data[i * n + j] = pmat[i, j]
    pair = PivotalPair(cvl, evl, cvr, evr)
    rep = check_pair(pair)
    if not rep.passed:
        raise NotADuality("normalized pair failed its snakes:\n" + rep.summary())
    return pair


def from_braided(cvl, evl):
    """Pair whose right duality is the symmetric flip of the given left one.

    The left snake identities are the precondition (NotADuality if they
    fail); the flipped right data then satisfies the right snakes, which
    are still verified.  Dimension is inferred from the coevaluation.
    """
    n = isqrt(cvl.rows)
    if n * n != cvl.rows or cvl.cols != 1:
        raise ShapeMismatch("cvl must be an n^2 x 1 column")
    if (evl.rows, evl.cols) != (1, n * n):
        raise ShapeMismatch("evl must be a 1 x n^2 row")
    fld = cvl.field
    eye = ExactMatrix.identity(n, fld)
    s1 = mul(tens(evl, eye), tens(eye, cvl)) - eye
    s2 = mul(tens(eye, evl), tens(cvl, eye)) - eye
    if not (s1.is_zero() and s2.is_zero()):
        raise NotADuality("left snake identities fail for the given data")
    cvr = ExactMatrix.zeros(n * n, 1, fld)
    evr = ExactMatrix.zeros(1, n * n, fld)
    for i in range(n):
        for j in range(n):
            cvr.data[j * n + i] = cvl.data[i * n + j]
            evr.data[i * n + j] = evl.data[j * n + i]
    pair = PivotalPair(cvl, evl, cvr, evr)
    rep = check_pair(pair)
    if not rep.passed:
        raise NotADuality("flipped right duality failed a snake:\n" + rep.summary())
    return pair


def standard_pair(n, field=None):
    return from_matrix(n, ExactMatrix.identity(n, field))


def left_transpose(f, pair1, pair2):
    """Left dual of f: P1 -> P2 as a map Q2 -> Q1, via evl2 and cvl1."""
    n1, n2 = pair1.n, pair2.n
    if (f.rows, f.cols) != (n2, n1):
        raise ShapeMismatch("morphism must be %dx%d" % (n2, n1))
    i1 = pair1.identity()
    i2 = pair2.identity()
    return mul(tens(pair2.evl, i1), tens(i2, f, i1), tens(i2, pair1.cvl))


def right_transpose(f, pair1, pair2):
    """Right dual of f: P1 -> P2 as a map Q2 -> Q1, via evr2 and cvr1."""
    n1, n2 = pair1.n, pair2.n
    if (f.rows, f.cols) != (n2, n1):
        raise ShapeMismatch("morphism must be %dx%d" % (n2, n1))
    i1 = pair1.identity()
    i2 = pair2.identity()
    return mul(tens(i1, pair2.evr), tens(i1, f, i2), tens(pair1.cvr, i2))


def is_pivotal_morphism(f, pair1, pair2):
    """True when the left and right transposes of f agree exactly."""
    return left_transpose(f, pair1, pair2) == right_transpose(f, pair1, pair2)


def tensor_pairs(pair1, pair2):
    """Pair on (P1 (x) P2, Q2 (x) Q1) with nested structure maps."""
    n1, n2 = pair1.n, pair2.n
    i1 = pair1.identity()
    i2 = pair2.identity()
    cvl = mul(tens(i1, pair2.cvl, i1), pair1.cvl)
    evl = mul(pair2.evl, tens(i2, pair1.evl, i2))
    cvr = mul(tens(i2, pair1.cvr, i2), pair2.cvr)
    evr = mul(pair1.evr, tens(i1, pair2.evr, i1))
    pair = PivotalPair(cvl, evl, cvr, evr)
    rep = check_pair(pair)
    if not rep.passed:
        raise NotADuality("tensor pair failed a snake:\n" + rep.summary())
    assert pair.n == n1 * n2
    return pair


def dual_pair(pair):
    """The pair with the roles of P and Q exchanged."""
    out = PivotalPair(pair.cvr, pair.evr, pair.cvl, pair.evl)
    rep = check_pair(out)
    if not rep.passed:
        raise NotADuality("dual pair failed a snake:\n" + rep.summary())
    return out


def random_pair(n, rng, bound=5, field=None):
    """Normalized pair of a random invertible Gram matrix."""
    return from_matrix(n, random_invertible(n, rng, bound, field))
