"""The q-deformed Heisenberg algebra and its Fock-space embeddings.

Abstract level: QWeylElement holds q-normal-ordered polynomials in a pair
with  atil btil - q btil atil = 1,  canonical monomials btil^k atil^m.
Fock level: the embeddings return operator expressions acting on the
ordinary one-mode Fock space, either spectrally (q^{b a} built directly)
or through the shift transform and its falling-factorial eigenbasis.
"""

from __future__ import annotations

from functools import lru_cache

from .fock import identity_op
from .scalars import Rational, Scalar, rat
from .weyl import ModeSystem


class QDomainError(ValueError):
    pass


def q_integer(j: int, q: Rational) -> Rational:
    """The q-analogue of the integer j, defined for every q including 1."""
    q = rat(q)
    if q == 1:
        return rat(j)
    return (1 - q ** j) / (1 - q)


def q_number(alpha, q) -> Rational:
    """{alpha} = (1 - q^alpha)/(1 - q); alpha must be an integer, q != 1."""
    q = rat(q)
    if q == 1:
        raise QDomainError("q = 1 not allowed")
    alpha = rat(alpha)
    if alpha.denominator != 1:
        raise QDomainError("q^alpha leaves the rationals for non-integer alpha")
    return q_integer(int(alpha), q)


def q_alpha_hat(alpha, q) -> Rational:
    """{alpha}{alpha+1}/{2 alpha + 2}, defined when {2 alpha + 2} != 0."""
    alpha = rat(alpha)
    if alpha.denominator != 1:
        raise QDomainError("q^alpha leaves the rationals for non-integer alpha")
    a = int(alpha)
    den = q_number(2 * a + 2, q)
    if den == 0:
        raise QDomainError("{2 alpha + 2} = 0 at alpha = %s" % alpha)
    return q_number(a, q) * q_number(a + 1, q) / den


@lru_cache(maxsize=None)
def _reorder(m: int, k: int, q: Rational):
    """atil^m btil^k as a tuple of ((k', m'), Rational) in normal order.

    One atil is moved at a time with atil btil^j = q^j btil^j atil + {j} btil^(j-1),
    i.e. grouped single swaps; the literal adjacent-swap oracle lives in the
    test suite.
    """
    if m == 0:
        return (((k, 0), rat(1)),)
    terms = {}
    for (j, l), c in _reorder(m - 1, k, q):
        key = (j, l + 1)
        terms[key] = terms.get(key, rat(0)) + c * q ** j
        if j:
            key = (j - 1, l)
            terms[key] = terms.get(key, rat(0)) + c * q_integer(j, q)
    return tuple(sorted((key, c) for key, c in terms.items() if c != 0))


class QWeylElement:
    """q-normal-ordered polynomial in the deformed pair; immutable."""

    __slots__ = ("q", "terms")

    def __init__(self, q, terms: dict):
        q = rat(q)
        if q == 1:
            raise QDomainError("q = 1 delegates to the undeformed algebra")
        self.q = q
        self.terms = terms  # (k, m) -> Scalar

    @staticmethod
    def zero(q) -> "QWeylElement":
        return QWeylElement(q, {})

    @staticmethod
    def monomial(q, k=0, m=0, coeff=1) -> "QWeylElement":
        c = Scalar.of(coeff)
        return QWeylElement(q, {(k, m): c} if not c.is_zero() else {})

    @staticmethod
    def one(q):
        return QWeylElement.monomial(q)

    @staticmethod
    def btil(q):
        return QWeylElement.monomial(q, k=1)

    @staticmethod
    def atil(q):
        return QWeylElement.monomial(q, m=1)

    def _check(self, other):
        if self.q != other.q:
            raise QDomainError("q mismatch: %s vs %s" % (self.q, other.q))

    def __add__(self, other):
        if not isinstance(other, QWeylElement):
            other = QWeylElement.monomial(self.q, coeff=other)
        self._check(other)
        terms = dict(self.terms)
        for key, c in other.terms.items():
            s = terms.get(key, Scalar(0)) + c
            if s.is_zero():
                terms.pop(key, None)
            else:
                terms[key] = s
        return QWeylElement(self.q, terms)

    def __sub__(self, other):
        if not isinstance(other, QWeylElement):
            other = QWeylElement.monomial(self.q, coeff=other)
        return self + other.scale(Scalar(-1))

    def __neg__(self):
        return self.scale(Scalar(-1))

    def scale(self, c) -> "QWeylElement":
        c = Scalar.of(c)
        if c.is_zero():
            return QWeylElement.zero(self.q)
        return QWeylElement(self.q, {key: v * c for key, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, QWeylElement):
            return self.scale(other)
        return q_multiply(self, other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int):
        out = QWeylElement.one(self.q)
        for _ in range(n):
            out = q_multiply(out, self)
        return out

    def __eq__(self, other):
        return isinstance(other, QWeylElement) and self.q == other.q \
            and self.terms == other.terms

    def __hash__(self):
        return hash((self.q, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for (k, m), c in sorted(self.terms.items()):
            body = " ".join((["bt^%d" % k if k > 1 else "bt"] if k else [])
                            + (["at^%d" % m if m > 1 else "at"] if m else []))
            bits.append("%s %s" % (c, body) if body else str(c))
        return " + ".join(bits)

    __repr__ = __str__


def q_multiply(x: QWeylElement, y: QWeylElement) -> QWeylElement:
    x._check(y)
    terms: dict = {}
    for (k1, m1), c1 in x.terms.items():
        for (k2, m2), c2 in y.terms.items():
            base = c1 * c2
            for (j, l), w in _reorder(m1, k2, x.q):
                key = (k1 + j, l + m2)
                cur = terms.get(key)
                add = base * Scalar(w)
                s = add if cur is None else cur + add
                if s.is_zero():
                    terms.pop(key, None)
                else:
                    terms[key] = s
    return QWeylElement(x.q, terms)


def q_commutator_weighted(x: QWeylElement, y: QWeylElement, weight) -> QWeylElement:
    """x y - weight * y x."""
    return q_multiply(x, y) - q_multiply(y, x).scale(weight)


# -- Jackson derivative on single-variable polynomials ---------------------------


def jackson_apply(q, poly: dict) -> dict:
    """(f(qx) - f(x)) / (x (q-1)) on a dict power -> Scalar; exact.

    The constant term cancels before the division, so the result is again a
    polynomial: x^k -> {k} x^(k-1).
    """
    q = rat(q)
    if q == 1:
        raise QDomainError("q = 1 not allowed")
    out = {}
    inv = rat(1) / (q - 1)
    for k, c in poly.items():
        if k == 0:
            continue
        coeff = c * Scalar((q ** k - 1) * inv)
        if not coeff.is_zero():
            out[k - 1] = out.get(k - 1, Scalar(0)) + coeff
    return {k: c for k, c in out.items() if not c.is_zero()}


# -- Fock-space embeddings ---------------------------------------------------------


def embed(q, variant: str = "spectral", delta=None):
    """Operator pair (atilde, btilde) on the one-mode Fock space.

    variant 'spectral':    atilde = (1/b)(q^{ba} - 1)/(q - 1),  btilde = b
    variant 'transformed': the same construction over the shift-transformed
    pair, diagonal in the delta falling-factorial basis.
    """
    q = rat(q)
    if q == 1:
        raise QDomainError("q = 1 not allowed")
    modes = ModeSystem(1, 0)
    if variant == "spectral":
        dlt = rat(0)
    elif variant == "transformed":
        if delta is None:
            raise QDomainError("transformed embedding needs delta")
        dlt = rat(delta)
        if dlt == 0:
            raise QDomainError("delta = 0 for the transformed embedding")
    else:
        raise QDomainError("unknown embedding variant %r" % variant)
    from .catalogue import q_pair

    return q_pair(modes, 1, q, dlt)


def sl2q_generators(q, alpha, variant="spectral", delta=None):
    """The deformed sl2 triple over the chosen embedding."""
    atil, btil = embed(q, variant, delta)
    qa = Scalar(q_number(alpha, q))
    ahat = Scalar(q_alpha_hat(alpha, q))
    modes = atil.modes
    return {
        "J+": btil * btil * atil - btil.scale(qa),
        "J0": btil * atil - ahat * identity_op(modes),
        "J-": atil,
    }
