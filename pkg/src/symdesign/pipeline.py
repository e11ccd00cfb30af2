"""Catalog-driven search for flag-transitive point-imprimitive designs.

Consumes a group catalog (JSON), produces candidate tuples
(M, N, (v,k,lam)) with imprimitivity data, applies the subgroup-index and
subdegree eliminations, and attempts base-block design construction for
the tuples that survive.  Candidate tuples are independent work items over
immutable shared groups; this runner evaluates them sequentially in
canonical order so reports are byte-identical across runs.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field

from .arith import divisors
from .design import (
    NotSymmetric,
    construct_design,
    imprimitivity_profile,
    is_flag_transitive,
    verify_symmetric,
)
from .group import CosetAction, PermGroup, assert_subgroup, coset_action
from .params import classify_type, derive_cdl, enumerate_params
from .perm import parse_cycles

__all__ = [
    "CatalogError",
    "MaximalRecord",
    "SubgroupHint",
    "GroupCatalog",
    "CandidateTuple",
    "PipelineReport",
    "GATE_POSSIBLE",
    "GATE_NSG",
    "GATE_UNKNOWN",
    "large_filter",
    "candidate_vs",
    "divisibility_gate",
    "subgroup_index_gate",
    "subdegree_gate",
    "first_bad_subdegree",
    "base_block_search",
    "load_catalogs",
    "run_pipeline",
]

GATE_POSSIBLE = "possible"
GATE_NSG = "nsg"
GATE_UNKNOWN = "unknown"

STATUS_OPEN = "open"
STATUS_NSG = "nsg"
STATUS_NSD = "nsd"
STATUS_DESIGN = "design-found"
STATUS_NO_BLOCK = "no-block-of-length-k"
STATUS_NOT_DESIGN = "not-a-design"


class CatalogError(ValueError):
    """Malformed or internally inconsistent catalog data."""


@dataclass
class MaximalRecord:
    """A maximal subgroup: order, index, and optional structure data.

    ``subgroup_entries`` lists (name, index) for its own maximal subgroups;
    the name may be None when only the index is known.
    """

    name: str
    order: int
    index: int
    generators: tuple | None = None
    subgroup_entries: tuple = ()
    order_factorization: dict | None = None

    @property
    def maximal_indices(self) -> tuple:
        return tuple(j for _, j in self.subgroup_entries)


@dataclass
class SubgroupHint:
    """Known subgroup of a maximal class, with explicit generators."""

    name: str
    inside: str
    index: int
    group: PermGroup


@dataclass
class GroupCatalog:
    name: str
    order: int
    degree: int | None
    group: PermGroup | None
    maximals: tuple
    hints: tuple
    index_tables: dict
    order_factorization: dict | None = None


@dataclass
class CandidateTuple:
    """One (M, N, (v,k,lam)) row with gate verdicts and a terminal status."""

    group: str
    nr_M: int
    nr_N: int
    M_name: str
    N_name: str
    i_H: int
    i_K: int
    v: int
    k: int
    lam: int
    cdl: tuple
    type_tag: str
    gate_H: str = GATE_UNKNOWN
    gate_K: str = GATE_UNKNOWN
    status: str = STATUS_OPEN
    detail: str = ""
    invariants: dict | None = None

    @property
    def params(self) -> tuple:
        return (self.v, self.k, self.lam)


# ---- individual gates ------------------------------------------------------


def large_filter(g_order: int, m_order: int) -> bool:
    """Whether the subgroup order cubed reaches the group order."""
    return g_order <= m_order**3


def candidate_vs(g_order: int, M: MaximalRecord) -> list[int]:
    """Candidate point counts v = z * index(M) over divisors z > 1 of |M|.

    z = 1 is excluded: a point-imprimitive stabilizer is never maximal, so
    the index of M cannot itself be the point count.
    """
    if M.order * M.index != g_order:
        raise CatalogError(f"{M.name}: order*index != group order")
    if M.order_factorization is None and M.order > 10**18:
        raise CatalogError(
            f"{M.name}: order exceeds 10^18; supply order_factorization in the catalog"
        )
    zs = divisors(M.order, M.order_factorization)
    return [z * M.index for z in zs if z > 1]


def divisibility_gate(params: tuple, N: MaximalRecord, g_order: int) -> bool:
    """k must divide |N| and the index of N must divide v."""
    v, k, _lam = params
    if N.order * N.index != g_order:
        raise CatalogError(f"{N.name}: order*index != group order")
    return N.order % k == 0 and v % N.index == 0


def subgroup_index_gate(name: str, i: int, index_tables: dict) -> str:
    """Can the named group have a subgroup of index i?

    Walks maximal-subgroup index tables: a subgroup of index i > 1 lies in
    a maximal subgroup whose index j divides i, leaving a subgroup of
    index i/j one level down.  Verdicts: "nsg" when every chain refutes,
    "possible" when some chain bottoms out at index 1, "unknown" when the
    tables run out first.  Indices strictly decrease, so this terminates.
    """
    if i < 1:
        raise ValueError(f"index {i} must be positive")
    if i == 1:
        return GATE_POSSIBLE
    entries = index_tables.get(name)
    if entries is None:
        return GATE_UNKNOWN
    verdict = GATE_NSG
    for sub_name, j in entries:
        if j < 2 or i % j:
            continue
        if i == j:
            return GATE_POSSIBLE
        if sub_name is None:
            branch = GATE_UNKNOWN
        else:
            branch = subgroup_index_gate(sub_name, i // j, index_tables)
        if branch == GATE_POSSIBLE:
            return GATE_POSSIBLE
        if branch == GATE_UNKNOWN:
            verdict = GATE_UNKNOWN
    return verdict


def subdegree_gate(k: int, lam: int, subdegrees) -> bool:
    """k must divide lam*e for every nontrivial subdegree e."""
    return first_bad_subdegree(k, lam, subdegrees) is None


def first_bad_subdegree(k: int, lam: int, subdegrees) -> int | None:
    """Smallest nontrivial subdegree e with k not dividing lam*e."""
    for e in sorted(subdegrees):
        if e > 1 and (lam * e) % k:
            return e
    return None


# ---- base-block search -----------------------------------------------------


@dataclass
class SearchOutcome:
    status: str
    design: object | None = None
    certificate: dict | None = None
    orbit_lengths: tuple = ()


def _design_certificate(image_group: PermGroup, design) -> dict:
    params = design.params
    subdeg = image_group.subdegrees(1)
    profiles = []
    for system in image_group.minimal_block_systems():
        prof = imprimitivity_profile(design, system)
        profiles.append((prof.c, prof.d, prof.ell, prof.s))
    block_sets = [frozenset(b) for b in design.blocks]
    meets = Counter()
    for i in range(len(block_sets)):
        bi = block_sets[i]
        for j in range(i + 1, len(block_sets)):
            meets[len(bi & block_sets[j])] += 1
    return {
        "params": (params.v, params.k, params.lam),
        "flag_transitive": is_flag_transitive(design, image_group),
        "subdegrees": tuple(subdeg),
        "profiles": tuple(sorted(profiles)),
        "block_intersections": tuple(sorted(meets.items())),
    }


def base_block_search(G: PermGroup, H: PermGroup, K: PermGroup, params: tuple,
                      action: CosetAction | None = None) -> SearchOutcome:
    """Hunt for a base block among the K-orbits on the cosets of H.

    Every K-orbit of length k is tried as a base block for a design under
    the coset image of G; the first verified symmetric design with the
    expected parameters is returned with its certificate.
    """
    v, k, lam = params
    act = action if action is not None else coset_action(G, H)
    assert_subgroup(G, K, "base block search subgroup")
    images = [act.image_of(g) for g in K.generators]
    korbits = PermGroup(images, degree=act.degree).orbits()
    lengths = tuple(sorted(len(o) for o in korbits))
    hits = [o for o in korbits if len(o) == k]
    if not hits:
        return SearchOutcome(STATUS_NO_BLOCK, orbit_lengths=lengths)
    for orbit in hits:
        design = construct_design(act.group, orbit)
        if design.num_blocks != v:
            continue
        try:
            got = verify_symmetric(design)
        except NotSymmetric:
            continue
        if (got.v, got.k, got.lam) != (v, k, lam):
            continue
        cert = _design_certificate(act.group, design)
        return SearchOutcome(STATUS_DESIGN, design, cert, lengths)
    return SearchOutcome(STATUS_NOT_DESIGN, orbit_lengths=lengths)


# ---- catalog loading -------------------------------------------------------


def _parse_order(value) -> int:
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        return int(value)
    raise CatalogError(f"bad order value {value!r}")


def _parse_factorization(value) -> dict | None:
    if value is None:
        return None
    fact = {int(p): int(e) for p, e in value}
    return fact


def _parse_entries(record: dict) -> tuple:
    entries = []
    for item in record.get("maximal_subgroups", []):
        name, index = item
        entries.append((str(name), int(index)))
    for index in record.get("maximal_indices", []):
        entries.append((None, int(index)))
    return tuple(entries)


def _parse_generators(strings, degree: int | None, label: str):
    if strings is None:
        return None
    if degree is None:
        raise CatalogError(f"{label}: generators given without a degree")
    return tuple(parse_cycles(s, degree) for s in strings)


def _load_one_catalog(data: dict) -> GroupCatalog:
    try:
        grp = data["group"]
        name = grp["name"]
        order = _parse_order(grp["order"])
    except KeyError as exc:
        raise CatalogError(f"catalog group record missing {exc}") from exc
    degree = grp.get("degree")
    fact = _parse_factorization(grp.get("order_factorization"))
    if fact is not None:
        check = 1
        for p, e in fact.items():
            check *= p**e
        if check != order:
            raise CatalogError(f"{name}: order factorization does not multiply out")
    gens = _parse_generators(grp.get("generators"), degree, name)
    group = None
    if gens is not None:
        group = PermGroup(gens, degree=degree)
        if group.order() != order:
            raise CatalogError(
                f"{name}: stated order {order} != computed {group.order()}"
            )

    maximals = []
    for rec in data.get("maximals", []):
        m_fact = _parse_factorization(rec.get("order_factorization"))
        record = MaximalRecord(
            name=rec["name"],
            order=_parse_order(rec["order"]),
            index=_parse_order(rec["index"]),
            generators=_parse_generators(rec.get("generators"), degree, rec["name"]),
            subgroup_entries=_parse_entries(rec),
            order_factorization=m_fact,
        )
        if record.order * record.index != order:
            raise CatalogError(f"{record.name}: order*index != |{name}|")
        maximals.append(record)

    known_names = {m.name for m in maximals}
    hints = []
    for rec in data.get("subgroup_hints", []):
        inside = rec["inside"]
        if inside not in known_names:
            raise CatalogError(f"hint {rec.get('name')}: unknown maximal {inside!r}")
        if group is None:
            raise CatalogError(f"hint {rec.get('name')}: hints need group generators")
        hgens = _parse_generators(rec["generators"], degree, rec.get("name", "hint"))
        for g in hgens:
            if not group.contains(g):
                raise CatalogError(
                    f"hint {rec.get('name')}: generator outside {name}"
                )
        hgroup = PermGroup(hgens, degree=degree)
        index = _parse_order(rec["index"])
        owner = next(m for m in maximals if m.name == inside)
        if owner.order % index or hgroup.order() != owner.order // index:
            raise CatalogError(
                f"hint {rec.get('name')}: order {hgroup.order()} is not "
                f"|{inside}|/{index}"
            )
        hints.append(SubgroupHint(rec.get("name", f"hint-{inside}"), inside, index, hgroup))

    tables: dict = {}
    for key, rows in data.get("index_tables", {}).items():
        tables[key] = tuple((str(n) if n is not None else None, int(j)) for n, j in rows)
    for m in maximals:
        if m.subgroup_entries:
            tables.setdefault(m.name, m.subgroup_entries)

    for m in maximals:
        if m.generators is not None:
            mg = PermGroup(m.generators, degree=degree)
            if mg.order() != m.order:
                raise CatalogError(f"{m.name}: generator order != stated order")
            if group is not None:
                for g in m.generators:
                    if not group.contains(g):
                        raise CatalogError(f"{m.name}: generator outside {name}")

    return GroupCatalog(
        name=name,
        order=order,
        degree=degree,
        group=group,
        maximals=tuple(maximals),
        hints=tuple(hints),
        index_tables=tables,
        order_factorization=fact,
    )


def load_catalogs(data) -> list[GroupCatalog]:
    """Accept a single catalog object or {"groups": [...]}; validate all."""
    if isinstance(data, str):
        data = json.loads(data)
    if not data:
        return []
    if "groups" in data:
        return [_load_one_catalog(d) for d in data["groups"]]
    return [_load_one_catalog(data)]


# ---- the runner ------------------------------------------------------------


@dataclass
class GroupReport:
    name: str
    tuples: list

    def candidates(self) -> list:
        """Tuples that survived the elimination gates."""
        alive = (STATUS_OPEN, STATUS_DESIGN, STATUS_NO_BLOCK, STATUS_NOT_DESIGN)
        return [t for t in self.tuples if t.status in alive]


@dataclass
class PipelineReport:
    sections: list = field(default_factory=list)

    def to_text(self) -> str:
        lines = []
        for sec in self.sections:
            lines.append(f"group {sec.name}: {len(sec.tuples)} tuples, "
                         f"{len(sec.candidates())} candidates")
            header = (
                f"{'M':<12} {'N':<12} {'nr':<6} {'(iH,iK)':<10} "
                f"{'v':>8} {'k':>6} {'lam':>6}  {'cdl':<18} {'type':<5} status"
            )
            lines.append(header)
            for t in sec.tuples:
                cdl = ",".join(f"({c},{d},{l})" for c, d, l, _s in t.cdl) or "-"
                nr = f"({t.nr_M},{t.nr_N})"
                ihk = f"({t.i_H},{t.i_K})"
                lines.append(
                    f"{t.M_name:<12} {t.N_name:<12} {nr:<6} {ihk:<10} "
                    f"{t.v:>8} {t.k:>6} {t.lam:>6}  {cdl:<18} {t.type_tag:<5} "
                    + t.status
                    + (f"  [{t.detail}]" if t.detail else "")
                )
        if not self.sections:
            lines.append("empty catalog: no groups")
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "groups": [
                {
                    "name": sec.name,
                    "tuples": [
                        {
                            "M": t.M_name,
                            "N": t.N_name,
                            "nr_M": t.nr_M,
                            "nr_N": t.nr_N,
                            "i_H": t.i_H,
                            "i_K": t.i_K,
                            "v": t.v,
                            "k": t.k,
                            "lam": t.lam,
                            "cdl": [list(x) for x in t.cdl],
                            "type": t.type_tag,
                            "gate_H": t.gate_H,
                            "gate_K": t.gate_K,
                            "status": t.status,
                            "detail": t.detail,
                            "invariants": _jsonable(t.invariants),
                        }
                        for t in sec.tuples
                    ],
                }
                for sec in self.sections
            ]
        }


def _jsonable(obj):
    if obj is None or isinstance(obj, (int, str, bool)):
        return obj
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(x) for x in obj]
    return str(obj)


def _resolve_subgroups(cat: GroupCatalog, M: MaximalRecord, index: int) -> list:
    """Groups of index ``index`` in M available from catalog data."""
    if index == 1:
        if M.generators is not None and cat.degree is not None:
            return [("=" + M.name, PermGroup(M.generators, degree=cat.degree))]
        return []
    return [(h.name, h.group) for h in cat.hints
            if h.inside == M.name and h.index == index]


def _evaluate(cat: GroupCatalog, tup: CandidateTuple, M: MaximalRecord,
              N: MaximalRecord, action_cache: dict) -> None:
    tables = cat.index_tables
    tup.gate_H = subgroup_index_gate(M.name, tup.i_H, tables)
    tup.gate_K = subgroup_index_gate(N.name, tup.i_K, tables)
    if tup.gate_H == GATE_NSG or tup.gate_K == GATE_NSG:
        side = f"{M.name} has no subgroup of index {tup.i_H}" \
            if tup.gate_H == GATE_NSG else f"{N.name} has no subgroup of index {tup.i_K}"
        tup.status = STATUS_NSG
        tup.detail = side
        return
    if cat.group is None:
        tup.status = STATUS_OPEN
        tup.detail = "no generator data"
        return

    hs = _resolve_subgroups(cat, M, tup.i_H)
    if not hs:
        tup.status = STATUS_OPEN
        tup.detail = f"no generators known for an index-{tup.i_H} subgroup of {M.name}"
        return

    surviving = []
    bad_e = None
    for hname, H in hs:
        key = id(H)
        act = action_cache.get(key)
        if act is None:
            act = coset_action(cat.group, H)
            action_cache[key] = act
        if act.degree != tup.v:
            continue
        subdeg = act.group.subdegrees(1)
        e = first_bad_subdegree(tup.k, tup.lam, subdeg)
        if e is None:
            surviving.append((hname, H, act))
        elif bad_e is None:
            bad_e = e
    if not surviving:
        if bad_e is not None:
            tup.status = STATUS_NSD
            tup.detail = f"smallest bad subdegree {bad_e}"
        else:
            tup.status = STATUS_OPEN
            tup.detail = f"no known subgroup of {M.name} realizes v={tup.v}"
        return

    ks = _resolve_subgroups(cat, N, tup.i_K)
    if not ks:
        tup.status = STATUS_OPEN
        tup.detail = f"no generators known for an index-{tup.i_K} subgroup of {N.name}"
        return

    saw_orbit = False
    lengths_seen = None
    for hname, H, act in surviving:
        for kname, K in ks:
            outcome = base_block_search(
                cat.group, H, K, tup.params, action=act
            )
            if outcome.status == STATUS_DESIGN:
                tup.status = STATUS_DESIGN
                tup.detail = f"H={hname}, K={kname}"
                tup.invariants = outcome.certificate
                return
            if outcome.status == STATUS_NOT_DESIGN:
                saw_orbit = True
            if lengths_seen is None:
                lengths_seen = outcome.orbit_lengths
    if saw_orbit:
        tup.status = STATUS_NOT_DESIGN
        tup.detail = "length-k orbits exist but verify no design"
    else:
        tup.status = STATUS_NO_BLOCK
        tup.detail = f"K-orbit lengths {list(lengths_seen)}"


def run_pipeline(catalog_data) -> PipelineReport:
    """Execute the whole search over every group in the catalog."""
    report = PipelineReport()
    for cat in load_catalogs(catalog_data):
        large = [M for M in cat.maximals if large_filter(cat.order, M.order)]
        tuples = []
        action_cache: dict = {}
        for nr_M, M in enumerate(large, 1):
            for v in candidate_vs(cat.order, M):
                for cand in enumerate_params(v, M.order, M.order_factorization):
                    for nr_N, N in enumerate(large, 1):
                        if not divisibility_gate(cand.triple, N, cat.order):
                            continue
                        tup = CandidateTuple(
                            group=cat.name,
                            nr_M=nr_M,
                            nr_N=nr_N,
                            M_name=M.name,
                            N_name=N.name,
                            i_H=v // M.index,
                            i_K=v // N.index,
                            v=cand.v,
                            k=cand.k,
                            lam=cand.lam,
                            cdl=tuple(derive_cdl(cand.v, cand.k, cand.lam)),
                            type_tag=classify_type(cand.v, cand.k, cand.lam).tag,
                        )
                        _evaluate(cat, tup, M, N, action_cache)
                        tuples.append(tup)
        tuples.sort(key=lambda t: (t.nr_M, t.nr_N, t.k, t.v))
        report.sections.append(GroupReport(cat.name, tuples))
    return report
