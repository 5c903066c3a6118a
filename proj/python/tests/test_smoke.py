from decimal import Decimal
from fractions import Fraction

import pytest

import apz


def test_prime_zeta_reference_digits():
    p = apz.prime_zeta(10)
    assert str(p).startswith("0.0009936035744369802178558507001477394163018725452852033205535666")
    assert apz.prime_zeta("10") == p
    assert apz.prime_zeta(Decimal(10)) == p


def test_derivative_and_almost_primes():
    assert str(apz.prime_zeta_prime(2)).startswith("-0.4930911093687644621978262050564912580")
    p2 = apz.almost_prime_zeta(2, 2)
    assert str(p2).startswith("0.1407604343490233882227509254138772537749")
    assert abs(apz.almost_prime_zeta(2, 2, partition_sum=True) - p2) < Decimal("1e-70")
    assert str(apz.almost_prime_zeta(2, 2, moebius=True)).startswith("0.06376729458477654328")
    assert str(apz.almost_prime_zeta(2, 2, derivative=True)).startswith("-0.2836068154079806522")


def test_precision_keyword():
    short = apz.prime_zeta(3, digits=20, guard=5)
    long = apz.prime_zeta(3, digits=80)
    assert len(short.as_tuple().digits) <= 25
    assert abs(short - long) < Decimal("1e-20")


def test_derived_constants():
    assert str(apz.B(1, 1)).startswith("0.7731566690497951278643674598559")
    assert str(apz.hurwitz(1, 2, 0)).startswith("1.3750649947486352879172531305224")
    assert str(apz.hurwitz(1, 2, 0, derivative=True).copy_abs()).startswith("0.4120386269484535929895367278869")
    assert str(apz.L(1, 1)).startswith("0.2643400417600216467317482459030")
    assert str(apz.moment()).startswith("0.58005849381391172358283349737677118691587319037")
    # log 2 = 1/2 + sum of the components; those with k > 6 start at n = 2^7 and add up to less than 2^-63
    total = sum(apz.log2_component(k, digits=30) for k in range(1, 7))
    assert abs(Decimal(2).ln() - Decimal("0.5") - total) < Decimal("1e-18")
    with pytest.raises(apz.ResourceError):
        apz.log2_component(45)
    assert apz.tau(3, 4) == Fraction(-13, 3)


def test_tables_and_format():
    assert "Pk" in apz.table_names()
    rows = apz.table("mm", digits=30)
    assert rows[0] == {"s": 1, "value": Decimal(1)}
    assert len(rows) == 10
    assert apz.format_paper_style("0.00345", 3, unit_digit=True) == "3.45(-3)"


def test_errors_map_to_python_exceptions():
    with pytest.raises(apz.DomainError):
        apz.prime_zeta(1)
    with pytest.raises(ValueError):
        apz.almost_prime_zeta(0, 2)
    with pytest.raises(apz.UsageError):
        apz.table("nope")
    with pytest.raises(ValueError):
        apz.prime_zeta(2, digits=3)
    with pytest.raises(TypeError):
        apz.prime_zeta(True)


def test_identity_suite():
    results = apz.identity_suite(digits=30)
    assert results and all(r["ok"] for r in results), results


def test_module_docstring_example():
    import doctest

    assert doctest.testmod(apz).failed == 0
