import pytest

from cleavedpa.cleaved import NAMED_ORDER_N2
from cleavedpa.diagram import cupcap_diagram
from cleavedpa.linalg import RingMatrix, kernel_membership, rank
from cleavedpa.ring import DELTA, ONE, qpow
from cleavedpa.tlcompare import (
    REFERENCE_KERNELS,
    _generator_matrix,
    format_named_vector,
    generator_positions,
    joint_nullity,
    kernel_report,
    named_vector,
    quotient_determinant,
    reference_matrix,
    tl_basis,
    tl_generator_matrices,
    tl_partition,
    tl_to_I,
)


def test_generator_positions():
    assert generator_positions() == {"M1": 3, "M2": 2, "M3": 1}


def test_reference_matrices_reproduced():
    for name, M in zip(("M1", "M2", "M3"), tl_generator_matrices(2)):
        assert M == reference_matrix(name)


def test_each_generator_has_nullity_ten():
    for M in tl_generator_matrices(2):
        assert M.shape[1] - rank(M) == 10


def test_joint_nullity():
    assert joint_nullity() == 7


def test_every_quoted_vector_checks():
    report = kernel_report()
    assert len(report) == sum(len(v) for v in REFERENCE_KERNELS.values())
    assert all(r["in_kernel"] for r in report)


def test_kernels_of_outer_generators_differ():
    M1, _, M3 = tl_generator_matrices(2)
    v = named_vector([("C+-", "1"), ("A+", "-H")])
    assert kernel_membership(M1, v)
    assert not kernel_membership(M3, v)
    w = named_vector([("C-+", "1"), ("A+", "-H")])
    assert kernel_membership(M3, w)
    assert not kernel_membership(M1, w)


@pytest.mark.parametrize("n", [1, 2])
def test_tl_map_intertwines_generators(n):
    # Z^I_E . phi == phi . Z^TL_E for every cup-cap generator E
    phi = tl_to_I(n)
    for p in range(1, 2 * n):
        left = _generator_matrix(n, p) @ phi
        right = phi @ tl_partition(cupcap_diagram(n, p))
        assert left.rows == right.rows


def test_tl_generators_satisfy_relations():
    n = 2
    E = [tl_partition(cupcap_diagram(n, p)) for p in range(1, 2 * n)]
    for e in E:
        assert (e @ e).rows == e.scale(DELTA).rows
    assert (E[0] @ E[1] @ E[0]).rows == E[0].rows
    assert (E[1] @ E[0] @ E[1]).rows == E[1].rows


def test_tl_to_I_small():
    assert tl_to_I(0).rows == [[ONE]]
    assert tl_to_I(1).rows == [[qpow(1)], [qpow(-1)]]
    assert tl_to_I(2).shape == (12, len(tl_basis(2)))
    assert rank(tl_to_I(2)) == 2


def test_quotient_determinant():
    assert quotient_determinant() == DELTA


def test_named_vector_format():
    v = named_vector([("B+-", "1"), ("D+", "-H")])
    assert format_named_vector(v) == "(-q^(-1/2))*I[D+] + (1)*I[B+-]"
    assert len(v) == len(NAMED_ORDER_N2)


def test_generators_need_positive_n():
    with pytest.raises(ValueError):
        tl_generator_matrices(0)
