"""The intertwiner category of a pivotal pair, realized on exact matrices.

An object is a carrier dimension dx with an invertible crossing

    sigma: X (x) P -> P (x) X

whose induced Q-crossings (built from the duality data) are two-sided
inverses of each other; that mutual-inverse condition is the membership
test and `check_object` reports it exactly.  Morphisms are matrices
commuting with the crossings.

Inner homs are realized on the matrix-unit carrier: [A,B] has basis E_ij
with i running over B and j over A, flattened row-major (index i*dimA + j).
Under this ordering the hom units and counits are fixed 0/1 matrices and
the hom functor [A, h] is h (x) Id_A.  The carrier choice only conjugates
the crossing, but every consumer in this package assumes this ordering.

Every derived constructor (tensor, homs, duals) re-verifies the membership
of what it builds; the constructions are theorems and the package treats
them as claims to be checked, not trusted.
"""

from __future__ import annotations

from .exact import ExactMatrix, ShapeMismatch, SingularMatrix, mul, random_invertible, tens
from .pairs import PivotalPair, from_braided, from_matrix, is_pivotal_morphism, left_transpose, right_transpose
from .report import Report


class SingularSigma(Exception):
    """The crossing (or a displayed inverse) is not invertible as promised."""


class PairMismatch(Exception):
    """Operands live over different ambient pivotal pairs."""


class HypothesisFailed(Exception):
    """The ambient pair violates the hypothesis of the requested theorem."""


class IndexMismatch(Exception):
    """Diagram index families do not conform."""


class InvalidObject(Exception):
    """A construction that must yield a valid object failed its re-check."""


def pairs_equal(p1, p2):
    return (p1.n == p2.n and p1.cvl == p2.cvl and p1.evl == p2.evl
            and p1.cvr == p2.cvr and p1.evr == p2.evr)


class Intertwiner:
    """Object (X, sigma) of the intertwiner category of `pair`.

    The constructor checks shapes and invertibility; when sigma_inv is
    supplied it is verified to be a two-sided inverse instead of recomputed.
    Membership (the induced Q-crossings being mutually inverse) is checked
    by check_object / .check(), which constructors of derived objects call.
    """

    def __init__(self, pair, dim_x, sigma, sigma_inv=None):
        n = pair.n
        if (sigma.rows, sigma.cols) != (n * dim_x, dim_x * n):
            raise ShapeMismatch(
                "sigma must be %dx%d for dimX=%d, n=%d, got %dx%d"
                % (n * dim_x, dim_x * n, dim_x, n, sigma.rows, sigma.cols))
        self.pair = pair
        self.dim_x = dim_x
        self.sigma = sigma
        if sigma_inv is None:
            try:
                sigma_inv = sigma.invert()
            except SingularMatrix as exc:
                raise SingularSigma("sigma is singular") from exc
        else:
            eye = ExactMatrix.identity(n * dim_x, sigma.field)
            if not (sigma * sigma_inv == eye and sigma_inv * sigma == eye):
                raise SingularSigma("supplied inverse is not a two-sided inverse")
        self.sigma_inv = sigma_inv

    def induced_q(self):
        return induced_q(self)

    def check(self):
        return check_object(self.dim_x, self.sigma, self.pair)

    def to_json(self):
        return {"dimX": self.dim_x, "sigma": self.sigma.to_json(),
                "pair": self.pair.to_json()}

    @classmethod
    def from_json(cls, obj, field=None):
        return cls(PivotalPair.from_json(obj["pair"], field),
                   int(obj["dimX"]),
                   ExactMatrix.from_json(obj["sigma"], field))

    def __repr__(self):
        return "Intertwiner(dimX=%d, n=%d)" % (self.dim_x, self.pair.n)


def unit_object(pair):
    eye = pair.identity()
    return Intertwiner(pair, 1, eye, eye)


def induced_q(obj):
    """The two induced Q-crossings (ov: Q(x)X -> X(x)Q and its candidate
    inverse X(x)Q -> Q(x)X), built from the duality data."""
    pair = obj.pair
    n = pair.n
    en = pair.identity()
    ex = ExactMatrix.identity(obj.dim_x, obj.sigma.field)
    ov = mul(tens(pair.evl, ex, en),
             tens(en, obj.sigma, en),
             tens(en, ex, pair.cvl))
    ov_inv = mul(tens(en, ex, pair.evr),
                 tens(en, obj.sigma_inv, en),
                 tens(pair.cvr, ex, en))
    return ov, ov_inv


def check_object(dim_x, sigma, pair):
    """Membership report: invertibility plus mutually inverse Q-crossings."""
    n = pair.n
    rep = Report("object (dimX=%d, n=%d)" % (dim_x, n))
    if (sigma.rows, sigma.cols) != (n * dim_x, dim_x * n):
        rep.require("sigma_shape", False,
                    note="got %dx%d" % (sigma.rows, sigma.cols))
        return rep
    rep.require("sigma_shape", True)
    try:
        obj = Intertwiner(pair, dim_x, sigma)
    except SingularSigma:
        rep.require("sigma_invertible", False)
        return rep
    rep.require("sigma_invertible", True)
    ov, ov_inv = induced_q(obj)
    eye_xq = ExactMatrix.identity(dim_x * n, sigma.field)
    eye_qx = ExactMatrix.identity(n * dim_x, sigma.field)
    rep.require_equal("q_crossing_right_inverse", ov * ov_inv, eye_xq)
    rep.require_equal("q_crossing_left_inverse", ov_inv * ov, eye_qx)
    return rep


def _require_same_pair(a, b):
    if not pairs_equal(a.pair, b.pair):
        raise PairMismatch("objects live over different pivotal pairs")


def is_morphism(f, a, b):
    """True iff f: X_a -> X_b satisfies sigma_b (f (x) P) = (P (x) f) sigma_a."""
    _require_same_pair(a, b)
    if (f.rows, f.cols) != (b.dim_x, a.dim_x):
        raise ShapeMismatch("morphism must be %dx%d, got %dx%d"
                            % (b.dim_x, a.dim_x, f.rows, f.cols))
    en = a.pair.identity()
    return b.sigma * tens(f, en) == tens(en, f) * a.sigma


def tensor_objects(a, b, check=True):
    """(X (x) Y, (sigma_a (x) Y)(X (x) sigma_b)); membership re-verified."""
    _require_same_pair(a, b)
    ea = ExactMatrix.identity(a.dim_x, a.sigma.field)
    eb = ExactMatrix.identity(b.dim_x, b.sigma.field)
    sigma = tens(a.sigma, eb) * tens(ea, b.sigma)
    sigma_inv = tens(ea, b.sigma_inv) * tens(a.sigma_inv, eb)
    out = Intertwiner(a.pair, a.dim_x * b.dim_x, sigma, sigma_inv)
    if check and not out.check().passed:
        raise InvalidObject("tensor of valid objects failed membership")
    return out


# inner-hom carrier: basis E_ij, i over B, j over A, flat index i*dimA + j

def hom_counit(dim_a, dim_b, field=None):
    """Evaluation [A,B] (x) A -> B on the matrix-unit carrier."""
    h = dim_b * dim_a
    out = ExactMatrix.zeros(dim_b, h * dim_a, field)
    one = out.field.one()
    for i in range(dim_b):
        for j in range(dim_a):
            out.data[i * (h * dim_a) + (i * dim_a + j) * dim_a + j] = one
    return out


def hom_unit(dim_a, dim_x, field=None):
    """Unit X -> [A, X (x) A], x |-> (a |-> x (x) a)."""
    rows = dim_x * dim_a * dim_a
    out = ExactMatrix.zeros(rows, dim_x, field)
    one = out.field.one()
    for k in range(dim_x):
        for j in range(dim_a):
            out.data[((k * dim_a + j) * dim_a + j) * dim_x + k] = one
    return out


def hom_counit_right(dim_a, dim_b, field=None):
    """Right-hom evaluation A (x) [A,B] -> B, a_k (x) E_ij |-> delta_jk b_i."""
    h = dim_b * dim_a
    out = ExactMatrix.zeros(dim_b, dim_a * h, field)
    one = out.field.one()
    for i in range(dim_b):
        for k in range(dim_a):
            out.data[i * (dim_a * h) + k * h + i * dim_a + k] = one
    return out


def hom_unit_right(dim_a, dim_x, field=None):
    """Right-hom unit X -> [A, A (x) X], x |-> (a |-> a (x) x)."""
    rows = dim_a * dim_x * dim_a
    out = ExactMatrix.zeros(rows, dim_x, field)
    one = out.field.one()
    for k in range(dim_x):
        for j in range(dim_a):
            out.data[((j * dim_x + k) * dim_a + j) * dim_x + k] = one
    return out


def hom_map(h, dim_a):
    """Functor [A, -] on morphisms: postcomposition, i.e. h (x) Id_A."""
    return h.tensor(ExactMatrix.identity(dim_a, h.field))


def left_hom_sigma(a, b):
    """The left-hom crossing on [A,B] (x) P, per the closed-structure display."""
    pair = a.pair
    n = pair.n
    da, db = a.dim_x, b.dim_x
    h = da * db
    fld = a.sigma.field
    en = pair.identity()
    eh = ExactMatrix.identity(h, fld)
    eps = hom_counit(da, db, fld)
    # g: Q (x) [A,B] (x) P (x) A -> B
    g = mul(tens(pair.evl, ExactMatrix.identity(db, fld)),
            tens(en, b.sigma),
            tens(en, eps, en),
            tens(en, eh, a.sigma_inv))
    dz = n * h * n
    return mul(tens(en, hom_map(g, da)),
               tens(en, hom_unit(da, dz, fld)),
               tens(pair.cvl, eh, en))


def left_hom_sigma_inv(a, b):
    """The displayed inverse of the left-hom crossing."""
    pair = a.pair
    n = pair.n
    da, db = a.dim_x, b.dim_x
    h = da * db
    fld = a.sigma.field
    en = pair.identity()
    eh = ExactMatrix.identity(h, fld)
    eps = hom_counit(da, db, fld)
    ov_a, _ = induced_q(a)
    # g': P (x) [A,B] (x) Q (x) A -> B
    gp = mul(tens(ExactMatrix.identity(db, fld), pair.evr),
             tens(b.sigma_inv, en),
             tens(en, eps, en),
             tens(en, eh, ov_a))
    dz = n * h * n
    return mul(tens(hom_map(gp, da), en),
               tens(hom_unit(da, dz, fld), en),
               tens(en, eh, pair.cvr))


def left_hom(a, b, check=True):
    """Internal hom [A,B] with its crossing; the displayed inverse is
    verified to be a two-sided inverse and membership is re-checked."""
    _require_same_pair(a, b)
    sigma = left_hom_sigma(a, b)
    sigma_inv = left_hom_sigma_inv(a, b)
    out = Intertwiner(a.pair, a.dim_x * b.dim_x, sigma, sigma_inv)
    if check and not out.check().passed:
        raise InvalidObject("left hom of valid objects failed membership")
    return out


def right_hom_sigma(a, b):
    """The right-hom crossing, built with the right-hom unit and counit."""
    pair = a.pair
    n = pair.n
    da, db = a.dim_x, b.dim_x
    h = da * db
    fld = a.sigma.field
    en = pair.identity()
    eh = ExactMatrix.identity(h, fld)
    theta = hom_counit_right(da, db, fld)
    _, ov_a_inv = induced_q(a)
    # hr: A (x) Q (x) [A,B] (x) P -> B
    hr = mul(tens(pair.evl, ExactMatrix.identity(db, fld)),
             tens(en, b.sigma),
             tens(en, theta, en),
             tens(ov_a_inv, eh, en))
    dz = n * h * n
    return mul(tens(en, hom_map(hr, da)),
               tens(en, hom_unit_right(da, dz, fld)),
               tens(pair.cvl, eh, en))


def right_hom_sigma_inv(a, b):
    pair = a.pair
    n = pair.n
    da, db = a.dim_x, b.dim_x
    h = da * db
    fld = a.sigma.field
    en = pair.identity()
    eh = ExactMatrix.identity(h, fld)
    theta = hom_counit_right(da, db, fld)
    # hr': A (x) P (x) [A,B] (x) Q -> B
    hrp = mul(tens(ExactMatrix.identity(db, fld), pair.evr),
              tens(b.sigma_inv, en),
              tens(en, theta, en),
              tens(a.sigma, eh, en))
    dz = n * h * n
    return mul(tens(hom_map(hrp, da), en),
               tens(hom_unit_right(da, dz, fld), en),
               tens(en, eh, pair.cvr))


def right_hom(a, b, check=True):
    _require_same_pair(a, b)
    sigma = right_hom_sigma(a, b)
    sigma_inv = right_hom_sigma_inv(a, b)
    out = Intertwiner(a.pair, a.dim_x * b.dim_x, sigma, sigma_inv)
    if check and not out.check().passed:
        raise InvalidObject("right hom of valid objects failed membership")
    return out


def check_closure_units(a, b):
    """Verify the hom unit and counit are morphisms of the category.

    Condition 1: (P (x) eta) sigma_B = <sigma_A, sigma_{B(x)A}> (eta (x) P)
    on B (x) P.  Condition 2: sigma_B (eps (x) P) =
    (P (x) eps) (<sigma_A, sigma_B> (x) A) ([A,B] (x) sigma_A) on
    [A,B] (x) A (x) P.  Both exactly.
    """
    pair = a.pair
    n = pair.n
    da, db = a.dim_x, b.dim_x
    fld = a.sigma.field
    en = pair.identity()
    rep = Report("closure units (dimA=%d, dimB=%d, n=%d)" % (da, db, n))

    ba = tensor_objects(b, a)
    eta = hom_unit(da, db, fld)
    lhs1 = tens(en, eta) * b.sigma
    rhs1 = left_hom_sigma(a, ba) * tens(eta, en)
    rep.require_equal("unit_is_morphism", lhs1, rhs1)

    eps = hom_counit(da, db, fld)
    eh = ExactMatrix.identity(da * db, fld)
    ea = ExactMatrix.identity(da, fld)
    lhs2 = b.sigma * tens(eps, en)
    rhs2 = mul(tens(en, eps), tens(left_hom_sigma(a, b), ea), tens(eh, a.sigma))
    rep.require_equal("counit_is_morphism", lhs2, rhs2)
    return rep


def _carrier_duality(dim_x, field):
    """Standard duality vectors for the carrier space of dimension dim_x."""
    ev = ExactMatrix.zeros(1, dim_x * dim_x, field)
    cv = ExactMatrix.zeros(dim_x * dim_x, 1, field)
    one = ev.field.one()
    for i in range(dim_x):
        ev.data[i * dim_x + i] = one
        cv.data[i * dim_x + i] = one
    return ev, cv


def dual_objects(a, check=True):
    """Left and right dual objects, with displayed inverses verified and
    the carrier duality maps checked to be morphisms of the category."""
    pair = a.pair
    n = pair.n
    dx = a.dim_x
    fld = a.sigma.field
    en = pair.identity()
    ex = ExactMatrix.identity(dx, fld)
    ev_x, cv_x = _carrier_duality(dx, fld)
    ov, ov_inv = induced_q(a)

    # left dual: carrier duality on the left leg, crossing from sigma^{-1}
    sig_l = mul(tens(ev_x, en, ex),
                tens(ex, a.sigma_inv, ex),
                tens(ex, en, cv_x))
    sig_l_inv = mul(tens(pair.evr, ex, en),
                    tens(en, ev_x, en, ex, en),
                    tens(en, ex, ov, ex, en),
                    tens(en, ex, en, cv_x, en),
                    tens(en, ex, pair.cvr))
    left = Intertwiner(pair, dx, sig_l, sig_l_inv)

    sig_r = mul(tens(en, ex, pair.evl),
                tens(en, ex, en, ev_x, en),
                tens(en, ex, ov_inv, ex, en),
                tens(en, cv_x, en, ex, en),
                tens(pair.cvl, ex, en))
    sig_r_inv = mul(tens(ex, en, ev_x),
                    tens(ex, a.sigma, ex),
                    tens(cv_x, en, ex))
    right = Intertwiner(pair, dx, sig_r, sig_r_inv)

    if check:
        for name, obj in (("left", left), ("right", right)):
            if not obj.check().passed:
                raise InvalidObject("%s dual failed membership" % name)
        uo = unit_object(pair)
        if not is_morphism(ev_x, tensor_objects(left, a), uo):
            raise InvalidObject("left-dual evaluation is not a morphism")
        if not is_morphism(cv_x, uo, tensor_objects(a, left)):
            raise InvalidObject("left-dual coevaluation is not a morphism")
        if not is_morphism(ev_x, tensor_objects(a, right), uo):
            raise InvalidObject("right-dual evaluation is not a morphism")
        if not is_morphism(cv_x, uo, tensor_objects(right, a)):
            raise InvalidObject("right-dual coevaluation is not a morphism")
    return left, right


def lift_pivotal(a):
    """Check that the identity lifts to a morphism from a to its double
    left dual, i.e. the ambient pivotal structure lifts to the category.

    The hypothesis is on the ambient pair: transposing the identity along
    the pair must agree with transposing it along the pair's flip-normalized
    twin (same left duality, symmetric right duality).  For a Gram-matrix
    pair the comparison reads I = Q, so any skew Gram matrix fails.
    """
    pair = a.pair
    std = from_braided(pair.cvl, pair.evl)
    eye = pair.identity()
    lt = left_transpose(eye, pair, std)
    rt = right_transpose(eye, pair, std)
    if lt != rt:
        raise HypothesisFailed(
            "ambient pair is not flip-normalized: left vs right transpose "
            "of the identity differ")
    rep = Report("pivotal lift (dimX=%d, n=%d)" % (a.dim_x, pair.n))
    ld, _ = dual_objects(a)
    dd, _ = dual_objects(ld)
    rep.require("double_dual_carrier_dim", dd.dim_x == a.dim_x)
    rep.require_equal("identity_is_morphism_to_double_dual",
                      dd.sigma, a.sigma)
    return rep


class PivotalDiagram:
    """An indexed family of pivotal pairs with arrows between them.

    Arrows are (source index, target index, matrix); indices are validated
    here, pivotality of each arrow is part of diagram_check's report.
    """

    def __init__(self, pairs, arrows=()):
        self.pairs = list(pairs)
        self.arrows = []
        for k, (s, t, f) in enumerate(arrows):
            if not (0 <= s < len(self.pairs) and 0 <= t < len(self.pairs)):
                raise IndexMismatch("arrow %d endpoints (%d, %d) out of range"
                                    % (k, s, t))
            want = (self.pairs[t].n, self.pairs[s].n)
            if (f.rows, f.cols) != want:
                raise ShapeMismatch("arrow %d matrix is %dx%d, want %dx%d"
                                    % (k, f.rows, f.cols, *want))
            self.arrows.append((s, t, f))


class DiagramIntertwiner:
    """A single carrier with one crossing per pair of a diagram."""

    def __init__(self, dim_x, sigmas):
        self.dim_x = dim_x
        self.sigmas = list(sigmas)


def diagram_check(d, obj):
    """Membership of every component plus every arrow-compatibility square."""
    if len(obj.sigmas) != len(d.pairs):
        raise IndexMismatch("diagram has %d pairs but object has %d crossings"
                            % (len(d.pairs), len(obj.sigmas)))
    rep = Report("diagram object (dimX=%d, %d pairs, %d arrows)"
                 % (obj.dim_x, len(d.pairs), len(d.arrows)))
    ex = None
    for i, (pair, sigma) in enumerate(zip(d.pairs, obj.sigmas)):
        rep.merge(check_object(obj.dim_x, sigma, pair), prefix="pair%d." % i)
        if ex is None:
            ex = ExactMatrix.identity(obj.dim_x, sigma.field)
    for k, (s, t, f) in enumerate(d.arrows):
        rep.require("arrow%d_pivotal" % k,
                    is_pivotal_morphism(f, d.pairs[s], d.pairs[t]))
        lhs = tens(f, ex) * obj.sigmas[s]
        rhs = obj.sigmas[t] * tens(ex, f)
        rep.require_equal("arrow%d_square" % k, lhs, rhs)
    return rep


def tensor_diagram_objects(d, obj1, obj2):
    """Componentwise tensor of diagram objects, re-verified."""
    if len(obj1.sigmas) != len(obj2.sigmas):
        raise IndexMismatch("objects index different families")
    sigmas = []
    for pair, s1, s2 in zip(d.pairs, obj1.sigmas, obj2.sigmas):
        a = Intertwiner(pair, obj1.dim_x, s1)
        b = Intertwiner(pair, obj2.dim_x, s2)
        sigmas.append(tensor_objects(a, b, check=False).sigma)
    out = DiagramIntertwiner(obj1.dim_x * obj2.dim_x, sigmas)
    if not diagram_check(d, out).passed:
        raise InvalidObject("tensor of diagram objects failed its check")
    return out


def random_object(qmat, dim_x, rng, bound=3, check=True):
    """Random valid object over the Gram pair of qmat.

    Built as a direct sum of one-dimensional objects (invertible matrices
    in the commutant of the transposed Gram matrix, here polynomials in
    it) conjugated by a random change of basis of the carrier.
    """
    n = qmat.rows
    fld = qmat.field
    pair = from_matrix(n, qmat)
    qt = qmat.transpose()
    powers = [ExactMatrix.identity(n, fld)]
    for _ in range(max(0, n - 1)):
        powers.append(powers[-1] * qt)
    comps = []
    while len(comps) < dim_x:
        m = ExactMatrix.zeros(n, n, fld)
        for p in powers:
            m = m + p.scale(fld.coerce(rng.randint(-bound, bound)))
        try:
            m.invert()
        except SingularMatrix:
            continue
        comps.append(m)
    sigma = ExactMatrix.zeros(n * dim_x, dim_x * n, fld)
    for m_idx in range(dim_x):
        comp = comps[m_idx]
        for i in range(n):
            for j in range(n):
                sigma[i * dim_x + m_idx, m_idx * n + j] = comp[i, j]
    g = random_invertible(dim_x, rng, bound, fld)
    en = pair.identity()
    sigma = mul(tens(en, g), sigma, tens(g.invert(), en))
    out = Intertwiner(pair, dim_x, sigma)
    if check and not out.check().passed:
        raise InvalidObject("random object construction failed membership")
    return out
