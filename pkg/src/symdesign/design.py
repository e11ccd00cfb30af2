"""Symmetric 2-designs: verification, complements, flags, group actions.

A design is a point set {1..v} plus a list of blocks.  Designs are
immutable after construction; ``verify_symmetric`` caches the certified
parameters on the instance, and the transitivity predicates refuse
trivial designs unless forced.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .group import PermGroup
from .perm import Permutation, cycle_string

__all__ = [
    "Design",
    "DesignParams",
    "ImprimitivityProfile",
    "NotSymmetric",
    "ProfileViolation",
    "verify_symmetric",
    "complement",
    "construct_design",
    "block_stabilizer",
    "flags",
    "is_flag_transitive",
    "is_anti_flag_transitive",
    "imprimitivity_profile",
    "parse_design_file",
    "design_file_text",
]


@dataclass(frozen=True)
class DesignParams:
    v: int
    k: int
    lam: int

    @property
    def nontrivial(self) -> bool:
        return 2 < self.k < self.v - 1

    def __str__(self):
        return f"({self.v},{self.k},{self.lam})"


class NotSymmetric(ValueError):
    """Refutation of the symmetric-design axioms, with a witness."""

    def __init__(self, axiom: str, witness, message: str):
        super().__init__(message)
        self.axiom = axiom
        self.witness = witness


class ProfileViolation(ValueError):
    """A block meets an imprimitivity class in an inadmissible size."""

    def __init__(self, block_index: int, class_index: int, size: int, message: str):
        super().__init__(message)
        self.block_index = block_index
        self.class_index = class_index
        self.size = size


class Design:
    """Points 1..v and a sequence of blocks (canonical sorted tuples)."""

    def __init__(self, v: int, blocks):
        if v < 1:
            raise ValueError("v must be positive")
        canon = []
        for b in blocks:
            blk = tuple(sorted(b))
            if not blk:
                raise ValueError("empty block")
            if len(set(blk)) != len(blk):
                raise ValueError(f"repeated point in block {blk}")
            if blk[0] < 1 or blk[-1] > v:
                raise ValueError(f"block {blk} not inside 1..{v}")
            canon.append(blk)
        self.v = v
        self.blocks: tuple[tuple, ...] = tuple(canon)
        self.params: DesignParams | None = None  # set by verify_symmetric

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    def __eq__(self, other):
        return (
            isinstance(other, Design)
            and self.v == other.v
            and sorted(self.blocks) == sorted(other.blocks)
        )

    def __hash__(self):
        return hash((self.v, tuple(sorted(self.blocks))))

    def __repr__(self):
        return f"Design[v={self.v}, {self.num_blocks} blocks]"


def verify_symmetric(design: Design) -> DesignParams:
    """Certify the symmetric (v,k,lam) axioms or raise NotSymmetric.

    Checks block count, uniform block size, uniform point degree, the
    block-pair intersection count, and the dual point-pair count; the two
    pair conditions must agree.
    """
    v = design.v
    blocks = design.blocks
    if len(blocks) != v:
        raise NotSymmetric(
            "block-count", len(blocks), f"{len(blocks)} blocks for {v} points"
        )
    if len(set(blocks)) != len(blocks):
        seen = {}
        for i, b in enumerate(blocks):
            if b in seen:
                raise NotSymmetric(
                    "duplicate-block", (seen[b], i), f"blocks {seen[b]} and {i} coincide"
                )
            seen[b] = i
    k = len(blocks[0])
    for i, b in enumerate(blocks):
        if len(b) != k:
            raise NotSymmetric(
                "block-size", i, f"block {i} has size {len(b)}, expected {k}"
            )
    degree = [0] * (v + 1)
    for b in blocks:
        for pt in b:
            degree[pt] += 1
    for pt in range(1, v + 1):
        if degree[pt] != k:
            raise NotSymmetric(
                "point-degree", pt, f"point {pt} lies on {degree[pt]} blocks, expected {k}"
            )
    block_sets = [frozenset(b) for b in blocks]
    lam = None
    for i, j in combinations(range(v), 2):
        meet = len(block_sets[i] & block_sets[j])
        if lam is None:
            lam = meet
        elif meet != lam:
            raise NotSymmetric(
                "block-pair", (i, j), f"blocks {i},{j} meet in {meet}, expected {lam}"
            )
    if v == 1:
        lam = k
    pair_count: dict[tuple, int] = {}
    for b in blocks:
        for pair in combinations(b, 2):
            pair_count[pair] = pair_count.get(pair, 0) + 1
    for a, bpt in combinations(range(1, v + 1), 2):
        meet = pair_count.get((a, bpt), 0)
        if meet != lam:
            raise NotSymmetric(
                "point-pair", (a, bpt), f"points {a},{bpt} lie on {meet} blocks, expected {lam}"
            )
    params = DesignParams(v, k, lam)
    design.params = params
    return params


def _verified(design: Design) -> DesignParams:
    if design.params is None:
        return verify_symmetric(design)
    return design.params


def complement(design: Design) -> Design:
    """The complement design; verified symmetric (v, v-k, v-2k+lam)."""
    params = _verified(design)
    universe = range(1, design.v + 1)
    blocks = []
    for b in design.blocks:
        bset = set(b)
        blocks.append(tuple(pt for pt in universe if pt not in bset))
    comp = Design(design.v, blocks)
    got = verify_symmetric(comp)
    expect = DesignParams(params.v, params.v - params.k, params.v - 2 * params.k + params.lam)
    if got != expect:
        raise NotSymmetric("complement", got, f"complement verified {got}, expected {expect}")
    return comp


def construct_design(G: PermGroup, base_block) -> Design:
    """Design with block set the G-orbit of the base block.

    Blocks are deduplicated via canonical sorted tuples and reported in
    ascending lexicographic order; the result has v candidate blocks iff
    the orbit has length v.
    """
    start = tuple(sorted(set(base_block)))
    if not start:
        raise ValueError("base block must be nonempty")
    if start[0] < 1 or start[-1] > G.degree:
        raise ValueError(f"base block not inside 1..{G.degree}")
    seen = {start}
    queue = [start]
    qi = 0
    while qi < len(queue):
        blk = queue[qi]
        qi += 1
        for g in G.generators:
            img = tuple(sorted(g(pt) for pt in blk))
            if img not in seen:
                seen.add(img)
                queue.append(img)
    return Design(G.degree, sorted(queue))


def _block_action_images(G: PermGroup, design: Design):
    """For each generator, the induced permutation of block indices.

    Raises ValueError naming the first block whose image is not a block.
    """
    index = {b: i for i, b in enumerate(design.blocks)}
    rows = []
    for g in G.generators:
        row = []
        for b in design.blocks:
            img = tuple(sorted(g(pt) for pt in b))
            j = index.get(img)
            if j is None:
                raise ValueError(
                    f"generator {cycle_string(g)} maps block {b} outside the block set"
                )
            row.append(j)
        rows.append(row)
    return rows


def block_stabilizer(G: PermGroup, design: Design, block_index: int) -> PermGroup:
    """Setwise stabilizer of one block, cut out of the action on the block orbit."""
    if not 0 <= block_index < design.num_blocks:
        raise ValueError(f"block index {block_index} outside 0..{design.num_blocks - 1}")
    rows = _block_action_images(G, design)
    action_of = {g: row for g, row in zip(G.generators, rows)}

    def act(g: Permutation, idx: int) -> int:
        row = action_of.get(g)
        if row is not None:
            return row[idx]
        img = tuple(sorted(g(pt) for pt in design.blocks[idx]))
        return design.blocks.index(img)

    return G.stabilizer_of_action(block_index, act)


def flags(design: Design) -> list[tuple]:
    """All incident (point, block index) pairs."""
    return [(pt, i) for i, b in enumerate(design.blocks) for pt in b]


def is_flag_transitive(design: Design, G: PermGroup, force: bool = False) -> bool:
    """Whether G acts transitively on the flags of the design.

    Computed by orbit expansion over the flags; every generator must
    permute the block set.  Trivial designs are refused unless ``force``.
    """
    params = _verified(design)
    if not params.nontrivial and not force:
        raise ValueError(f"design {params} is trivial; pass force=True to override")
    if G.degree != design.v:
        raise ValueError("group degree does not match the point count")
    rows = _block_action_images(G, design)
    total = sum(len(b) for b in design.blocks)
    start = (design.blocks[0][0], 0)
    seen = {start}
    queue = [start]
    qi = 0
    while qi < len(queue):
        pt, bi = queue[qi]
        qi += 1
        for g, row in zip(G.generators, rows):
            nxt = (g(pt), row[bi])
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return len(seen) == total


def is_anti_flag_transitive(design: Design, G: PermGroup, force: bool = False) -> bool:
    """Whether G is flag-transitive on the complement design."""
    return is_flag_transitive(complement(design), G, force=force)


@dataclass(frozen=True)
class ImprimitivityProfile:
    c: int  # class size
    d: int  # number of classes
    ell: int  # block-class intersection size
    s: int  # classes met by each block

    def __str__(self):
        return f"(c,d,l,s)=({self.c},{self.d},{self.ell},{self.s})"


def imprimitivity_profile(design: Design, system) -> ImprimitivityProfile:
    """Verify 0-or-ell intersections against a block system and solve the
    class equations.

    Requires |B ∩ class| constant over all nonempty meets, a constant
    number s of classes met per block, and the identities v = c d,
    k = ell s, lam (c-1) = k (ell-1).
    """
    params = _verified(design)
    if system.degree != design.v:
        raise ValueError("block system degree does not match the design")
    class_sets = [frozenset(c) for c in system.classes]
    ell = None
    s = None
    for bi, b in enumerate(design.blocks):
        bset = frozenset(b)
        met = 0
        for ci, cls in enumerate(class_sets):
            size = len(bset & cls)
            if size == 0:
                continue
            met += 1
            if ell is None:
                ell = size
            elif size != ell:
                raise ProfileViolation(
                    bi, ci, size,
                    f"block {bi} meets class {ci} in {size} points, expected 0 or {ell}",
                )
        if s is None:
            s = met
        elif met != s:
            raise ProfileViolation(
                bi, -1, met, f"block {bi} meets {met} classes, expected {s}"
            )
    c = system.class_size
    d = system.num_classes
    if ell is None or ell < 2 or s < 2:
        raise ProfileViolation(-1, -1, ell or 0, "degenerate intersection profile")
    if params.k != ell * s:
        raise ProfileViolation(-1, -1, ell, f"k != ell*s: {params.k} != {ell}*{s}")
    if params.lam * (c - 1) != params.k * (ell - 1):
        raise ProfileViolation(
            -1, -1, ell, f"lam(c-1) != k(ell-1) for c={c}, ell={ell}"
        )
    return ImprimitivityProfile(c, d, ell, s)


# ---- design file format ----------------------------------------------------


def parse_design_file(text: str) -> Design:
    """Parse the design file format: ``v: N`` then one block per line."""
    v = None
    blocks = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.lower().startswith("v:"):
            v = int(line.split(":", 1)[1])
            continue
        if v is None:
            raise ValueError(f"line {lineno}: block before the v line")
        blocks.append(tuple(int(x) for x in line.split(",")))
    if v is None:
        raise ValueError("missing v line")
    return Design(v, blocks)


def design_file_text(design: Design) -> str:
    lines = [f"v: {design.v}"]
    lines.extend(",".join(map(str, b)) for b in design.blocks)
    return "\n".join(lines) + "\n"
