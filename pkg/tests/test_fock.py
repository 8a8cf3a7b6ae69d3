import random

import pytest

from fockrep.scalars import ONE, Scalar, rat
from fockrep.fock import (ExpA, FockVector, LeftDivB, NotLeftDivisible, Poly,
                          Product, QSpectral, Scale, Sum, basis_states,
                          check_identity, from_falling_basis, identity_op,
                          matmul, to_falling_basis, to_matrix)
from fockrep.weyl import ModeSystem, WeylElement

B1 = ModeSystem(1, 0)
SUPER = ModeSystem(1, 1)


def b_state(k, coeff=1):
    return FockVector.state(B1, (k,), coeff=coeff)


def test_lowering_action():
    a = Poly(WeylElement.a(B1))
    assert a.apply(b_state(3)) == b_state(2, 3)
    assert a.apply(FockVector.vacuum(B1)).is_zero()


def test_fermionic_action():
    dth = Poly(WeylElement.dtheta(SUPER, 1))
    th_state = FockVector.state(SUPER, (0,), (1,))
    assert dth.apply(th_state) == FockVector.vacuum(SUPER)
    assert dth.apply(FockVector.vacuum(SUPER)).is_zero()


def test_normal_ordered_action_is_multiplicative():
    # apply(Poly(X*Y), v) == apply(Poly(X), apply(Poly(Y), v))
    rng = random.Random(3)
    ms = ModeSystem(2, 1)
    pool = [WeylElement.b(ms, 1), WeylElement.a(ms, 1), WeylElement.b(ms, 2),
            WeylElement.a(ms, 2), WeylElement.theta(ms, 1), WeylElement.dtheta(ms, 1)]
    for _ in range(30):
        x = sum((p.scale(rng.randint(-2, 2)) for p in rng.sample(pool, 3)),
                WeylElement.zero(ms)) + WeylElement.one(ms)
        y = sum((p * q for p, q in zip(rng.sample(pool, 2), rng.sample(pool, 2))),
                WeylElement.zero(ms))
        for key in basis_states(ms, 4):
            v = FockVector(ms, {key: ONE})
            assert Poly(x * y).apply(v) == Poly(x).apply(Poly(y).apply(v))


def test_expa_shift_action():
    # e^{-d a} b^k |0> = (b - d)^k |0>
    delta = rat(1, 2)
    e = ExpA(B1, 1, Scalar(-delta))
    got = e.apply(b_state(2))
    expected = FockVector(B1, {
        ((2,), 0): ONE,
        ((1,), 0): Scalar(-1),  # 2 * (-1/2)
        ((0,), 0): Scalar(rat(1, 4)),
    })
    assert got == expected


def test_bhat_builds_falling_factorials():
    # bhat = b e^{-d a}; bhat^2 |0> = b(b-d)|0>
    delta = rat(1)
    bhat = Product([Poly(WeylElement.b(B1)), ExpA(B1, 1, Scalar(-delta))])
    v = bhat.apply(bhat.apply(FockVector.vacuum(B1)))
    assert v == FockVector(B1, {((2,), 0): ONE, ((1,), 0): Scalar(-1)})


def test_expa_inverse_pairs():
    gamma = Scalar(rat(2, 3))
    e1, e2 = ExpA(B1, 1, gamma), ExpA(B1, 1, -gamma)
    for k in range(9):
        v = b_state(k)
        assert e1.apply(e2.apply(v)) == v


def test_falling_factorial_round_trip():
    rng = random.Random(11)
    for delta in (rat(1), rat(1, 2), rat(-1, 3)):
        for _ in range(20):
            terms = {((k,), 0): Scalar(rng.randint(-5, 5)) for k in range(7)}
            v = FockVector(B1, {k: c for k, c in terms.items() if not c.is_zero()})
            w = from_falling_basis(to_falling_basis(v, 1, delta), 1, delta)
            assert w == v


def test_falling_factorial_example():
    # b^2 = p_2 + p_1 at delta = 1  (b^2 = b(b-1) + b)
    v = to_falling_basis(b_state(2), 1, rat(1))
    assert v == FockVector(B1, {((2,), 0): ONE, ((1,), 0): ONE})
    # degree zero is fixed
    assert to_falling_basis(FockVector.vacuum(B1), 1, rat(2)) == FockVector.vacuum(B1)


def test_qspectral_eigenbasis():
    q, delta = rat(3, 5), rat(1, 2)
    op = QSpectral(B1, 1, q, delta)
    for k in range(6):
        pk = from_falling_basis(b_state(k), 1, delta)
        assert op.apply(pk) == pk.scale(Scalar(q ** k))


def test_qspectral_delta_zero():
    op = QSpectral(B1, 1, rat(2))
    assert op.apply(b_state(3)) == b_state(3, 8)


def test_qspectral_leaves_spectator_modes_alone():
    ms = ModeSystem(2, 1)
    q, delta = rat(2), rat(1)
    op = QSpectral(ms, 2, q, delta)
    # p_2 in mode 2, tensored with b1^3 th1: eigenvalue q^2, spectators fixed
    p2 = FockVector(ms, {((3, 2), 1): ONE, ((3, 1), 1): Scalar(-1)})
    assert op.apply(p2) == p2.scale(Scalar(q ** 2))
    mixed = FockVector(ms, {((1, 0), 1): Scalar(5)})
    assert op.apply(mixed) == mixed  # k = 0 eigenvalue 1


def test_spectral_q_lowering():
    # (1/b)(q^{ba} - 1)/(q - 1) on b^3|0> with q=2 gives {3} b^2 = 7 b^2
    q = rat(2)
    qpart = Scale(Scalar(q - 1).inverse(),
                  Sum([QSpectral(B1, 1, q), Scale(Scalar(-1), identity_op(B1))]))
    atilde = Product([LeftDivB(B1, 1), qpart])
    assert atilde.apply(b_state(3)) == b_state(2, 7)


def test_left_div_errors():
    div = LeftDivB(B1, 1)
    with pytest.raises(NotLeftDivisible):
        div.apply(FockVector.vacuum(B1))
    shifted = LeftDivB(B1, 1, Scalar(rat(1)))
    # (b+1) w = b^2 + b  has w = b exactly
    v = FockVector(B1, {((2,), 0): ONE, ((1,), 0): ONE})
    assert shifted.apply(v) == b_state(1)
    with pytest.raises(NotLeftDivisible):
        shifted.apply(b_state(1))  # b is not (b+1) * anything polynomial


def test_to_matrix_lowering():
    m = to_matrix(Poly(WeylElement.a(B1)), 2)
    assert [tuple(alpha) for alpha, _ in m.basis] == [(0,), (1,), (2,)]
    assert m.entry(0, 1) == ONE and m.entry(1, 2) == Scalar(2)
    assert m.overflow_columns == []


def test_to_matrix_number_operator_diagonal():
    n = 4
    j0 = Poly(WeylElement.b(B1) * WeylElement.a(B1)
              - WeylElement.scalar(B1, rat(n, 2)))
    m = to_matrix(j0, n)
    for k in range(n + 1):
        assert m.entry(k, k) == Scalar(rat(k) - rat(n, 2))


def test_to_matrix_overflow_flagging():
    m = to_matrix(Poly(WeylElement.b(B1)), 2)
    assert m.overflow_columns == [2]
    assert m.max_raise == 1
    # lowering operators can never overflow
    m = to_matrix(Poly(WeylElement.a(B1) ** 2), 3)
    assert m.max_raise <= 0 and m.overflow_columns == []


def test_matmul_matches_product_matrix():
    x = Poly(WeylElement.b(B1) * WeylElement.a(B1))
    y = Poly(WeylElement.a(B1) ** 2)
    prod = to_matrix(Product([x, y]), 5)
    viamul = matmul(to_matrix(x, 5), to_matrix(y, 5))
    for j in range(prod.dim):
        if j in viamul.overflow_columns:
            continue
        for i in range(prod.dim):
            assert prod.entry(i, j) == viamul.entry(i, j)


def test_check_identity_canonical_pair():
    # [ahat, bhat] = 1 for ahat = (e^{da}-1)/d, bhat = b e^{-da}
    delta = rat(1, 2)
    ahat = Scale(Scalar(delta).inverse(),
                 Sum([ExpA(B1, 1, Scalar(delta)), Scale(Scalar(-1), identity_op(B1))]))
    bhat = Product([Poly(WeylElement.b(B1)), ExpA(B1, 1, Scalar(-delta))])
    lhs = Sum([Product([ahat, bhat]), Scale(Scalar(-1), Product([bhat, ahat]))])
    report = check_identity(lhs, identity_op(B1), 6)
    assert report.equal


def test_check_identity_mismatch_reports_witness():
    lhs = Poly(WeylElement.a(B1))
    rhs = Poly(WeylElement.a(B1) + WeylElement.one(B1))
    report = check_identity(lhs, rhs, 4)
    assert not report.equal
    assert report.witness_state is not None
    assert report.lhs_value != report.rhs_value


def test_basis_state_ordering():
    ms = ModeSystem(2, 1)
    states = basis_states(ms, 2)
    degrees = [sum(alpha) + beta.bit_count() for alpha, beta in states]
    assert degrees == sorted(degrees)
    assert states[0] == ((0, 0), 0)
    assert len(states) == len(set(states))


def test_matrix_json_round_trip_shape():
    m = to_matrix(Poly(WeylElement.a(B1)), 2)
    data = m.to_json()
    assert data["cutoff"] == 2
    assert data["overflow_columns"] == []
    assert data["matrix"][0][1] == {"r": "1"}
    assert data["basis"][1] == {"b": [1], "theta": []}
