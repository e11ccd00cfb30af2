import pytest

from symdesign.design import (
    Design,
    DesignParams,
    NotSymmetric,
    ProfileViolation,
    block_stabilizer,
    complement,
    construct_design,
    design_file_text,
    flags,
    imprimitivity_profile,
    is_anti_flag_transitive,
    is_flag_transitive,
    parse_design_file,
    verify_symmetric,
)
from symdesign.group import BlockSystem, PermGroup
from symdesign.perm import parse_cycles

from helpers import FIXTURES, cyclic, grp


@pytest.fixture(scope="module")
def fano():
    return construct_design(cyclic(7), [1, 2, 4])


@pytest.fixture(scope="module")
def f21():
    return FIXTURES["F21"][0]


def test_fano_verifies(fano):
    params = verify_symmetric(fano)
    assert (params.v, params.k, params.lam) == (7, 3, 1)
    assert params.nontrivial


def test_block_count_refutation():
    with pytest.raises(NotSymmetric) as exc:
        verify_symmetric(Design(7, [(1, 2, 4)]))
    assert exc.value.axiom == "block-count"


def test_block_size_refutation(fano):
    blocks = list(fano.blocks)
    blocks[3] = (1, 2, 3, 4)
    with pytest.raises(NotSymmetric) as exc:
        verify_symmetric(Design(7, blocks))
    assert exc.value.axiom in ("block-size", "point-degree")


def test_duplicate_block_refutation(fano):
    blocks = list(fano.blocks)
    blocks[3] = blocks[0]
    with pytest.raises(NotSymmetric) as exc:
        verify_symmetric(Design(7, blocks))
    assert exc.value.axiom in ("duplicate-block", "point-degree")


def test_pair_condition_refutation(fano):
    # swap two points in one block: degrees shift and pair counts break
    blocks = list(fano.blocks)
    blocks[0] = (1, 2, 5)
    with pytest.raises(NotSymmetric):
        verify_symmetric(Design(7, blocks))


def test_complement_of_fano(fano):
    comp = complement(fano)
    params = comp.params
    assert (params.v, params.k, params.lam) == (7, 4, 2)
    assert complement(comp) == fano


def test_construct_design_from_difference_set(fano):
    assert fano.num_blocks == 7
    assert fano.blocks[0] == (1, 2, 4)


def test_construct_design_singleton_is_trivial():
    D = construct_design(cyclic(5), [2])
    assert D.num_blocks == 5
    params = verify_symmetric(D)
    assert not params.nontrivial


def test_construct_design_orbit_shorter_than_v():
    # base block invariant under the 3-cycle: orbit of length 1
    D = construct_design(grp(3, "(1,2,3)"), [1, 2, 3])
    assert D.num_blocks == 1


def test_block_stabilizer_sizes(fano, f21):
    C7 = cyclic(7)
    triv = block_stabilizer(C7, fano, 0)
    assert triv.order() == 1
    stab = block_stabilizer(f21, fano, 0)
    assert stab.order() == 3
    assert f21.order() == fano.num_blocks * stab.order()


def test_block_stabilizer_of_globally_fixed_block():
    triv_group = PermGroup.trivial(7)
    D = construct_design(triv_group, [1, 2, 4])
    stab = block_stabilizer(triv_group, D, 0)
    assert stab.order() == triv_group.order() == 1


def test_flags_count(fano):
    assert len(flags(fano)) == 21


def test_fano_flag_transitive_under_frobenius(fano, f21):
    assert is_flag_transitive(fano, f21)


def test_fano_not_flag_transitive_under_c7(fano):
    assert not is_flag_transitive(fano, cyclic(7))


def test_flag_transitivity_requires_block_preservation(fano):
    S7 = grp(7, "(1,2)", "(1,2,3,4,5,6,7)")
    with pytest.raises(ValueError, match="maps block"):
        is_flag_transitive(fano, S7)


def test_flag_transitivity_refuses_trivial_designs():
    D = construct_design(cyclic(5), [2])
    C5 = cyclic(5)
    with pytest.raises(ValueError, match="trivial"):
        is_flag_transitive(D, C5)
    assert is_flag_transitive(D, C5, force=True)


def test_fano_not_anti_flag_transitive(fano, f21):
    assert not is_anti_flag_transitive(fano, f21)


def test_imprimitivity_profile_refutes_bad_partition():
    # 2-(15,7,3) from a cyclic difference set; k = 7 is prime, so no
    # partition can be ell-constant with ell, s >= 2
    D = construct_design(cyclic(15), [1, 2, 3, 5, 6, 9, 11])
    params = verify_symmetric(D)
    assert (params.v, params.k, params.lam) == (15, 7, 3)
    system = BlockSystem(15, [[i, i + 5, i + 10] for i in range(1, 6)])
    with pytest.raises(ProfileViolation):
        imprimitivity_profile(D, system)


def test_design_file_round_trip(fano):
    text = design_file_text(fano)
    again = parse_design_file(text)
    assert again == fano
    assert design_file_text(again) == text


def test_design_constructor_validation():
    with pytest.raises(ValueError, match="repeated"):
        Design(4, [(1, 1, 2)])
    with pytest.raises(ValueError, match="inside"):
        Design(4, [(1, 5)])
    with pytest.raises(ValueError, match="empty"):
        Design(4, [()])


def test_params_identity_on_verified_designs(fano):
    params = verify_symmetric(fano)
    assert params.k * (params.k - 1) == params.lam * (params.v - 1)
