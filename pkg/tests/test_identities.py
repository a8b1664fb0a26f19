import math

import pytest
from hypothesis import given, strategies as st

from dn2.core import Modulus, PeriodMethod, periods
from dn2.identities import (
    PERIOD_RELATION_LABELS,
    identity_bbg_91,
    identity_bbg_92,
    period_relations,
    symmetric_pair,
    transform_signature4,
)
from dn2.kernel import DomainError

GRID = [0.05 * i for i in range(1, 20)]


class TestBbg:
    def test_92_spot_values(self):
        for lam in [0.5, 0.8]:
            rep = identity_bbg_92(lam)
            assert rep.passed
            assert abs(rep.residual) <= 1e-12
            assert rep.residual == rep.lhs - rep.rhs

    def test_91_spot_values(self):
        for lam in [0.6, 0.9]:
            rep = identity_bbg_91(lam)
            assert rep.passed
            assert abs(rep.residual) <= 1e-12

    def test_sweep(self):
        for lam in GRID:
            assert identity_bbg_91(lam).passed, lam
            assert identity_bbg_92(lam).passed, lam

    def test_domain(self):
        with pytest.raises(DomainError):
            identity_bbg_91(0.0)
        with pytest.raises(DomainError):
            identity_bbg_92(1.0)


class TestSymmetricPair:
    def test_fixed_point(self):
        assert abs(symmetric_pair(1.0 / 3.0) - 1.0 / 3.0) <= 1e-15

    def test_boundary(self):
        assert symmetric_pair(0.0) == 1.0

    def test_spot_value(self):
        y = symmetric_pair(0.2)
        assert abs(y - 0.5) <= 1e-15
        assert abs(0.2 + y + 3.0 * 0.2 * y - 1.0) <= 1e-15

    @given(st.floats(min_value=0.01, max_value=0.99))
    def test_involution(self, x):
        assert abs(symmetric_pair(symmetric_pair(x)) - x) <= 1e-15

    def test_decreasing(self):
        vals = [symmetric_pair(0.05 * i) for i in range(20)]
        assert all(a > b for a, b in zip(vals, vals[1:]))


class TestTransform:
    def test_spot_value(self):
        rep = transform_signature4(0.25)
        assert rep.passed
        assert abs(rep.residual) <= 1e-11

    def test_constraint(self):
        x = 0.3
        y = symmetric_pair(x)
        assert abs(x + y + 3.0 * x * y - 1.0) <= 1e-15

    def test_sweep(self):
        for x in GRID:
            assert transform_signature4(x).passed, x

    def test_boundary_guard(self):
        with pytest.raises(DomainError):
            transform_signature4(1.0)
        with pytest.raises(DomainError):
            transform_signature4(0.0)


class TestPeriodRelations:
    def test_self_complementary(self):
        kappa = 1.0 / math.sqrt(2.0)
        reports = period_relations(kappa)
        assert len(reports) == len(PERIOD_RELATION_LABELS)
        assert all(r.passed for r in reports)
        p = periods(Modulus(kappa), PeriodMethod.ELLIPTIC)
        q = periods(Modulus(Modulus(kappa).lam), PeriodMethod.ELLIPTIC)
        assert abs(p.K - q.K) <= 1e-12

    def test_spot_value(self):
        assert all(r.passed for r in period_relations(0.3))

    def test_square_and_double(self):
        kappa = 2.0 * math.sqrt(2.0) / 3.0
        reports = period_relations(kappa)
        assert all(r.passed for r in reports)
        p = periods(Modulus(kappa))
        q = periods(Modulus(1.0 / 3.0))
        assert abs(p.Kprime / p.K - 1.0) <= 1e-10
        assert abs(q.Kprime / q.K - 2.0) <= 1e-10
        assert abs((p.Kprime / p.K) * (q.Kprime / q.K) - 2.0) <= 1e-10

    def test_sweep(self):
        for kappa in GRID:
            assert all(r.passed for r in period_relations(kappa)), kappa


def test_bbg_pair_implies_transform():
    # composing the two checked identities at the same lambda reproduces the
    # transformation residual at x = (1-lam)/(1+lam)
    for lam in [0.2, 0.5, 0.8]:
        x = (1.0 - lam) / (1.0 + lam)
        rep = transform_signature4(x)
        assert abs(rep.residual) <= (
            abs(identity_bbg_91(lam).residual)
            + abs(identity_bbg_92(lam).residual)
            + 1e-11
        )
