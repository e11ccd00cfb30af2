import json

import pytest

from symdesign.catalog import load
from symdesign.group import PermGroup
from symdesign.pipeline import (
    CatalogError,
    GATE_NSG,
    GATE_POSSIBLE,
    GATE_UNKNOWN,
    MaximalRecord,
    base_block_search,
    candidate_vs,
    divisibility_gate,
    first_bad_subdegree,
    large_filter,
    load_catalogs,
    run_pipeline,
    subdegree_gate,
    subgroup_index_gate,
)

from helpers import FIXTURES, cyclic


HS_SUBDEGREES = (7, 42, 126, 210, 252, 630, 1260, 2520)


def test_large_filter():
    assert large_filter(95040, 7920)
    assert not large_filter(95040, 12)
    assert large_filter(95040, 46)  # 46^3 = 97336
    assert not large_filter(95040, 45)


def test_candidate_vs_for_m11_in_m12():
    M = MaximalRecord(name="M11", order=7920, index=12)
    vs = candidate_vs(95040, M)
    assert 144 in vs
    assert 12 not in vs  # z = 1 is excluded on the point side
    assert vs == sorted(vs)
    assert all(v % 12 == 0 for v in vs)


def test_candidate_vs_prime_order_maximal():
    M = MaximalRecord(name="P", order=5, index=4)
    assert candidate_vs(20, M) == [20]


def test_candidate_vs_checks_consistency():
    M = MaximalRecord(name="broken", order=7920, index=13)
    with pytest.raises(CatalogError):
        candidate_vs(95040, M)


def test_candidate_vs_demands_factorization_for_huge_orders():
    order = 2**64
    M = MaximalRecord(name="huge", order=order, index=3)
    with pytest.raises(CatalogError, match="order_factorization"):
        candidate_vs(order * 3, M)
    M = MaximalRecord(
        name="huge", order=order, index=3, order_factorization={2: 64}
    )
    vs = candidate_vs(order * 3, M)
    assert vs[0] == 6 and len(vs) == 64


def test_divisibility_gate():
    m11 = MaximalRecord(name="M11", order=7920, index=12)
    l211 = MaximalRecord(name="L2(11)", order=660, index=144)
    assert divisibility_gate((144, 66, 30), m11, 95040)
    assert divisibility_gate((144, 66, 30), l211, 95040)
    small = MaximalRecord(name="tiny", order=100, index=144)
    assert not divisibility_gate((144, 66, 30), small, 14400)


M11_TABLE = {
    "M11": (("M10", 11), ("L2(11)", 12), ("M9:2", 55), ("S5", 66), ("GL(2,3)", 165)),
    "M10": (("A6", 2), ("M9", 10), ("5:4", 36), ("SD16", 45)),
}


def test_subgroup_index_gate_trivial_index():
    assert subgroup_index_gate("anything", 1, {}) == GATE_POSSIBLE


def test_subgroup_index_gate_direct_hit():
    assert subgroup_index_gate("M11", 12, M11_TABLE) == GATE_POSSIBLE
    assert subgroup_index_gate("M11", 11, M11_TABLE) == GATE_POSSIBLE


def test_subgroup_index_gate_no_divisor():
    assert subgroup_index_gate("M11", 8, M11_TABLE) == GATE_NSG
    assert subgroup_index_gate("M11", 45, M11_TABLE) == GATE_NSG


def test_subgroup_index_gate_recursion_refutes():
    # 11 divides 33, but M10 has no index-3 subgroup
    assert subgroup_index_gate("M11", 33, M11_TABLE) == GATE_NSG


def test_subgroup_index_gate_smallest_index_screen():
    table = {"O7(3)": ((None, 351), (None, 364), (None, 378))}
    for i in (14, 40, 105):
        assert subgroup_index_gate("O7(3)", i, table) == GATE_NSG


def test_subgroup_index_gate_unknown_without_data():
    assert subgroup_index_gate("mystery", 5, {}) == GATE_UNKNOWN
    # a dividing entry with no name cannot be recursed into
    table = {"M": ((None, 11),)}
    assert subgroup_index_gate("M", 33, table) == GATE_UNKNOWN


def test_subdegree_gate_m12_case():
    assert subdegree_gate(66, 30, (1, 11, 11, 55, 66))


def test_subdegree_gate_reproduces_the_rank_breaking_case():
    assert not subdegree_gate(420, 20, HS_SUBDEGREES)
    assert first_bad_subdegree(420, 20, HS_SUBDEGREES) == 7


def test_subdegree_gate_k_itself_always_passes():
    assert subdegree_gate(66, 30, (66,))
    assert first_bad_subdegree(66, 30, (1, 66)) is None


# ---- base-block search -------------------------------------------------------


def test_base_block_search_finds_fano():
    F21, _ = FIXTURES["F21"]
    H = F21.point_stabilizer(1)
    out = base_block_search(F21, H, H, (7, 3, 1))
    assert out.status == "design-found"
    assert out.design.num_blocks == 7
    assert out.certificate["params"] == (7, 3, 1)
    assert out.certificate["flag_transitive"] is True


def test_base_block_search_no_block_of_length_k():
    C7 = cyclic(7)
    triv = PermGroup.trivial(7)
    out = base_block_search(C7, triv, triv, (7, 3, 1))
    assert out.status == "no-block-of-length-k"
    assert out.orbit_lengths == (1,) * 7


def test_base_block_search_orbit_fails_verification():
    C15 = cyclic(15)
    triv = PermGroup.trivial(15)
    K = PermGroup([C15.generators[0] ** 3])  # C5: three orbits of length 5
    out = base_block_search(C15, triv, K, (15, 5, 2))
    assert out.status == "not-a-design"


# ---- catalog loading ----------------------------------------------------------


def test_load_catalogs_empty():
    assert load_catalogs({}) == []
    assert load_catalogs({"groups": []}) == []


def test_load_catalogs_validates_orders():
    bad = {
        "group": {"name": "C4", "order": "5", "degree": 4, "generators": ["(1,2,3,4)"]},
        "maximals": [],
    }
    with pytest.raises(CatalogError, match="stated order"):
        load_catalogs(bad)


def test_load_catalogs_validates_maximal_index():
    bad = {
        "group": {"name": "C4", "order": "4", "degree": 4, "generators": ["(1,2,3,4)"]},
        "maximals": [{"name": "C2", "order": "2", "index": "3"}],
    }
    with pytest.raises(CatalogError, match="order\\*index"):
        load_catalogs(bad)


def test_load_catalogs_validates_hints():
    bad = {
        "group": {"name": "C4", "order": "4", "degree": 4, "generators": ["(1,2,3,4)"]},
        "maximals": [{"name": "C2", "order": "2", "index": "2"}],
        "subgroup_hints": [
            {"name": "h", "inside": "C2", "index": 1, "generators": ["(1,2)"]}
        ],
    }
    with pytest.raises(CatalogError, match="outside"):
        load_catalogs(bad)


def test_load_catalogs_validates_factorization():
    bad = {
        "group": {
            "name": "C4",
            "order": "4",
            "degree": 4,
            "generators": ["(1,2,3,4)"],
            "order_factorization": [[2, 1]],
        },
        "maximals": [],
    }
    with pytest.raises(CatalogError, match="factorization"):
        load_catalogs(bad)


# ---- full runs -----------------------------------------------------------------


@pytest.fixture(scope="module")
def m12_report():
    return run_pipeline(load("m12-144/catalog"))


def test_m12_run_has_exactly_six_candidates(m12_report):
    sec = m12_report.sections[0]
    assert sec.name == "M12"
    assert len(sec.candidates()) == 6


def test_m12_run_eliminations_are_all_nsg(m12_report):
    sec = m12_report.sections[0]
    killed = [t for t in sec.tuples if t.status not in
              ("design-found", "no-block-of-length-k")]
    assert killed and all(t.status == "nsg" for t in killed)
    assert {t.params for t in killed} == {
        (36, 15, 6),
        (96, 20, 4),
        (396, 80, 16),
        (540, 99, 18),
    }


def test_m12_run_statuses(m12_report):
    sec = m12_report.sections[0]
    found = [t for t in sec.candidates() if t.status == "design-found"]
    blocked = [t for t in sec.candidates() if t.status == "no-block-of-length-k"]
    assert len(found) == 4
    assert len(blocked) == 2
    assert all(t.N_name == "L2(11)max" and t.i_K == 1 for t in blocked)
    assert all("12, 132" in t.detail for t in blocked)
    certs = [t.invariants for t in found]
    assert all(c == certs[0] for c in certs)
    assert certs[0]["params"] == (144, 66, 30)
    assert certs[0]["subdegrees"] == (1, 11, 11, 55, 66)
    assert certs[0]["profiles"] == ((12, 12, 6, 11), (12, 12, 6, 11))


def test_m12_report_is_deterministic(m12_report):
    again = run_pipeline(load("m12-144/catalog"))
    assert again.to_text() == m12_report.to_text()
    assert json.dumps(again.to_json_dict(), sort_keys=True) == json.dumps(
        m12_report.to_json_dict(), sort_keys=True
    )


def test_fi22_stub_all_nsg():
    report = run_pipeline(load("fi22/catalog-stub"))
    sec = report.sections[0]
    assert sec.name == "Fi22"
    assert len(sec.tuples) == 12
    assert all(t.status == "nsg" for t in sec.tuples)
    assert sorted({t.i_H for t in sec.tuples}) == [14, 40, 105]
    assert sec.candidates() == []


def test_run_pipeline_empty_catalog():
    report = run_pipeline({})
    assert report.sections == []
    assert "empty catalog" in report.to_text()
