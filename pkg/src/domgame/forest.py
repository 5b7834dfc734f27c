"""Linear-time forest decision procedure.

Implements the full decision tree: isolated-vertex and isolated-edge
reductions, cherry counting, skeleton decomposition, the star shortcut,
and for standard forests the first-move candidate search with
per-component favorability classification.  `explain` returns the whole
decision trace; `forest_outcome` is its verdict.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Sequence, Union

from .graph import Graph, NotAForestError, connected_components, forest_has_perfect_matching, forest_matching_covering
from .position import Outcome


class Cherry(NamedTuple):
    center: int
    leaves: tuple[int, int]


@dataclass(frozen=True)
class SkeletonDecomposition:
    """Partition of a cherry-free forest into leaves, supports, skeleton."""

    leaves: tuple[int, ...]
    supports: tuple[int, ...]
    skeleton: tuple[int, ...]
    leaf_of: dict[int, int]  # support -> its unique leaf
    skeleton_components: tuple[tuple[int, ...], ...]

    def skeleton_set(self) -> frozenset[int]:
        return frozenset(self.skeleton)

    def skeleton_degree(self, g: Graph, v: int, skel: Optional[frozenset[int]] = None) -> int:
        members = skel if skel is not None else self.skeleton_set()
        return sum(1 for w in g.adjacency[v] if w in members)


class Favorability(enum.Enum):
    STRONG = "Strong"
    PLAIN = "Plain"
    WEAK = "Weak"
    UNFAVORABLE = "Unfavorable"


@dataclass(frozen=True)
class PathShape:
    n: int
    pendant_indices: frozenset[int]

    def __str__(self) -> str:
        inner = ",".join(str(i) for i in sorted(self.pendant_indices))
        return f"PathShape({self.n},{{{inner}}})"


@dataclass(frozen=True)
class ForkShape:
    ok: bool

    def __str__(self) -> str:
        return f"ForkShape(ok={self.ok})"


@dataclass(frozen=True)
class OtherShape:
    reason: str = "not a path or fork entered by a leaf"

    def __str__(self) -> str:
        return "Other"


ComponentShape = Union[PathShape, ForkShape, OtherShape]


def find_cherries(f: Graph) -> list[Cherry]:
    """One cherry per center vertex with two or more leaf neighbors."""
    _require_forest(f)
    cherries = []
    for c in range(f.vertex_count):
        leaf_nbrs = [v for v in f.adjacency[c] if f.degree(v) == 1]
        if len(leaf_nbrs) >= 2:
            cherries.append(Cherry(c, (leaf_nbrs[0], leaf_nbrs[1])))
    return cherries


def skeleton(f: Graph) -> SkeletonDecomposition:
    """Leaves / supports / skeleton partition with the support->leaf bijection.

    Requires a cherry-free forest whose components all have at least three
    vertices; those conditions make the bijection well defined.
    """
    _require_forest(f)
    for comp in connected_components(f):
        if len(comp) < 3:
            raise ValueError(f"component {comp} has fewer than 3 vertices")
    if find_cherries(f):
        raise ValueError("skeleton decomposition requires a cherry-free forest")
    leaves = [v for v in range(f.vertex_count) if f.degree(v) == 1]
    leaf_of: dict[int, int] = {}
    for leaf in leaves:
        support = f.adjacency[leaf][0]
        leaf_of[support] = leaf
    supports = sorted(leaf_of)
    rest = sorted(set(range(f.vertex_count)) - set(leaves) - set(supports))
    skel_set = set(rest)
    comps: list[tuple[int, ...]] = []
    seen: set[int] = set()
    for start in rest:
        if start in seen:
            continue
        stack, comp = [start], []
        seen.add(start)
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in f.adjacency[u]:
                if w in skel_set and w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(tuple(sorted(comp)))
    return SkeletonDecomposition(
        leaves=tuple(sorted(leaves)),
        supports=tuple(supports),
        skeleton=tuple(rest),
        leaf_of=leaf_of,
        skeleton_components=tuple(comps),
    )


@dataclass(frozen=True)
class ZeroOneLabeling:
    root: int
    label: dict[int, int]  # root omitted


def zero_one_labeling(f: Graph, root: int) -> ZeroOneLabeling:
    """Leaves-up 0/1 labeling of the tree component containing `root`.

    A vertex is 0 iff all of its children are 1 (so leaves are 0), and 1
    iff some child is 0.  The root is left unlabeled.
    """
    order: list[tuple[int, int]] = []
    stack = [(root, -1)]
    seen = {root}
    while stack:
        v, parent = stack.pop()
        order.append((v, parent))
        for w in f.adjacency[v]:
            if w != parent:
                if w in seen:
                    raise NotAForestError("component of root contains a cycle")
                seen.add(w)
                stack.append((w, v))
    label: dict[int, int] = {}
    for v, parent in reversed(order):
        children = [w for w in f.adjacency[v] if w != parent]
        label[v] = 1 if any(label[c] == 0 for c in children) else 0
    del label[root]
    return ZeroOneLabeling(root, label)


def candidate_first_moves(f: Graph, sk: SkeletonDecomposition) -> list[int]:
    """Supports adjacent to a skeleton leaf that reach every skeleton component.

    Reaching every component makes the graph induced by the skeleton plus
    the candidate a tree (a forest admits at most one edge from the
    candidate into each component).
    """
    if not sk.skeleton:
        raise ValueError("candidate search needs a nonempty skeleton")
    skel = sk.skeleton_set()
    skel_leaves = {v for v in sk.skeleton if sk.skeleton_degree(f, v, skel) <= 1}
    comp_of = {v: i for i, comp in enumerate(sk.skeleton_components) for v in comp}
    n_comps = len(sk.skeleton_components)
    out = []
    for v0 in sk.supports:
        nbrs = [w for w in f.adjacency[v0] if w in skel]
        if not any(w in skel_leaves for w in nbrs):
            continue
        if len({comp_of[w] for w in nbrs}) == n_comps:
            out.append(v0)
    return sorted(out)


def component_shape(
    f: Graph, sk: SkeletonDecomposition, v0: int, comp: Sequence[int]
) -> ComponentShape:
    """Shape of one skeleton component relative to Alice's first move v0."""
    comp_set = set(comp)
    entries = [w for w in f.adjacency[v0] if w in comp_set]
    if not entries:
        raise ValueError(f"v0={v0} is not adjacent to component {sorted(comp)}")
    entry = entries[0]
    others = set(sk.supports) - {v0}
    skel_nbrs = {v: [w for w in f.adjacency[v] if w in comp_set] for v in comp}
    sdeg = {v: len(skel_nbrs[v]) for v in comp}

    if max(sdeg.values()) <= 2:
        if sdeg[entry] > 1:
            return OtherShape("path entered through an inner vertex")
        order = [entry]
        prev = -1
        while True:
            nxt = [w for w in skel_nbrs[order[-1]] if w != prev]
            if not nxt:
                break
            prev = order[-1]
            order.append(nxt[0])
        n = len(order)
        pendants = frozenset(
            i
            for i in range(1, n)
            if any(w in others for w in f.adjacency[order[i - 1]])
        )
        return PathShape(n, pendants)

    centers = [v for v in comp if sdeg[v] >= 3]
    if len(centers) != 1:
        return OtherShape("multiple branch vertices")
    center = centers[0]
    mids = skel_nbrs[center]
    leaves = []
    for mid in mids:
        if sdeg[mid] != 2:
            return OtherShape("branch not subdivided exactly once")
        tip = next(w for w in skel_nbrs[mid] if w != center)
        if sdeg[tip] != 1:
            return OtherShape("branch longer than two edges")
        leaves.append(tip)
    if len(comp_set) != 1 + 2 * len(mids):
        return OtherShape("extra vertices outside the fork arms")
    if entry not in leaves:
        return OtherShape("fork not entered through a branch leaf")
    entry_mid = next(w for w in skel_nbrs[entry])
    allowed = {center, entry_mid} | (set(leaves) - {entry})
    for v in comp:
        if v in allowed:
            continue
        if any(w in others for w in f.adjacency[v]):
            return ForkShape(ok=False)
    return ForkShape(ok=True)


def classify_component(shape: ComponentShape) -> Favorability:
    """Favorability per the path cases 1.a-1.e and the fork case."""
    if isinstance(shape, OtherShape):
        raise ValueError("cannot classify an Other-shaped component")
    if isinstance(shape, ForkShape):
        return Favorability.WEAK if shape.ok else Favorability.UNFAVORABLE
    n, u = shape.n, shape.pendant_indices
    strong = (
        (n in (1, 2) and not u)
        or (n == 3 and (u <= {1} or u <= {2}))
        or (n >= 4 and u <= {2, 3, n - 2})
    )
    if strong:
        return Favorability.STRONG
    if n >= 9 and n % 2 == 1 and u <= {2, 5, n - 2}:
        return Favorability.PLAIN
    if n in (9, 11) and {3, 5} <= u <= {2, 3, 5, n - 2}:
        return Favorability.WEAK
    return Favorability.UNFAVORABLE


class ComponentReport(NamedTuple):
    vertices: tuple[int, ...]
    shape: ComponentShape
    favorability: Optional[Favorability]  # None when the shape is Other


class CandidateReport(NamedTuple):
    v0: int
    components: tuple[ComponentReport, ...]
    winning: bool


@dataclass
class ForestTrace:
    """Structured record of every decision-tree branch taken."""

    outcome: Optional[Outcome] = None
    rule: str = ""
    lines: list[str] = field(default_factory=list)
    decomposition: Optional[SkeletonDecomposition] = None
    candidates: tuple[CandidateReport, ...] = ()

    def _finish(self, outcome: Outcome, rule: str, line: str) -> "ForestTrace":
        self.outcome = outcome
        self.rule = rule
        self.lines.append(line)
        self.lines.append(f"outcome {outcome.value}")
        return self

    def render(self) -> str:
        return "\n".join(self.lines)


def _require_forest(f: Graph) -> None:
    if not f.is_forest():
        raise NotAForestError("forest solver requires an acyclic graph")


def _candidate_report(f: Graph, sk: SkeletonDecomposition, v0: int) -> CandidateReport:
    reports = []
    weak = 0
    winning = True
    reached = {w for w in f.adjacency[v0] if w in set(sk.skeleton)}
    for comp in sk.skeleton_components:
        if not (set(comp) & reached):
            reports.append(ComponentReport(comp, OtherShape("no edge from v0"), None))
            winning = False
            continue
        shape = component_shape(f, sk, v0, comp)
        if isinstance(shape, OtherShape):
            reports.append(ComponentReport(comp, shape, None))
            winning = False
            continue
        fav = classify_component(shape)
        reports.append(ComponentReport(comp, shape, fav))
        if fav is Favorability.UNFAVORABLE:
            winning = False
        elif fav is Favorability.WEAK:
            weak += 1
    if weak > 1:
        winning = False
    return CandidateReport(v0, tuple(reports), winning)


def explain(f: Graph, exhaustive_candidates: bool = False) -> ForestTrace:
    """Run the decision tree and record every branch.

    With `exhaustive_candidates` every support adjacent to a skeleton leaf
    is classified, even those that cannot reach all skeleton components;
    the verdict must not change (verification mode).
    """
    _require_forest(f)
    trace = ForestTrace()

    if f.vertex_count == 0:
        return trace._finish(Outcome.A, "empty", "empty forest -> A")

    isolated = [v for v in range(f.vertex_count) if f.degree(v) == 0]
    if isolated:
        v = isolated[0]
        rest, _ = f.induced_subgraph([u for u in range(f.vertex_count) if u != v])
        ok = forest_has_perfect_matching(rest)
        trace.lines.append(f"isolated vertex {v}; perfect matching in remainder: {ok}")
        return trace._finish(
            Outcome.A if ok else Outcome.D,
            "isolated-vertex",
            f"Alice claims {v}" if ok else "no perfect matching without the isolated vertex",
        )

    comps = connected_components(f)
    small = [c for c in comps if len(c) == 2]
    if small:
        trace.lines.append(f"isolated-edge reduction removes {small}")
    else:
        trace.lines.append("isolated-edge reduction x0")
    keep = [v for c in comps if len(c) > 2 for v in c]
    if not keep:
        return trace._finish(Outcome.A, "isolated-edges", "empty remainder -> A")
    cur, remap = f.induced_subgraph(keep)
    back = {new: old for old, new in remap.items()}

    cherries = find_cherries(cur)
    centers = [back[c.center] for c in cherries]
    if len(cherries) >= 2:
        trace.lines.append(f"cherries at centers {centers}")
        return trace._finish(Outcome.D, "two-cherries", "two cherry centers force a draw")
    if len(cherries) == 1:
        c = cherries[0].center
        closed = cur.closed_neighborhood(c)
        required = [v for v in range(cur.vertex_count) if v not in closed]
        ok = forest_matching_covering(cur, c, required)
        trace.lines.append(f"one cherry at center {back[c]}; covering matching exists: {ok}")
        return trace._finish(
            Outcome.A if ok else Outcome.D,
            "one-cherry",
            "one cherry; covering matching exists -> A" if ok else "no covering matching -> D",
        )
    trace.lines.append("no cherries")

    sk = skeleton(cur)
    if not sk.skeleton:
        trace.lines.append("skeleton empty")
        return trace._finish(Outcome.A, "empty-skeleton", "empty skeleton -> A")

    skel_set = set(sk.skeleton)
    with_skel = [c for c in connected_components(cur) if set(c) & skel_set]
    without = [c for c in connected_components(cur) if not (set(c) & skel_set)]
    if without:
        trace.lines.append(f"dropping components with empty skeleton: {[[back[v] for v in c] for c in without]}")
        keep2 = [v for c in with_skel for v in c]
        nxt, remap2 = cur.induced_subgraph(keep2)
        back = {new: back[old] for old, new in remap2.items()}
        cur = nxt
        sk = skeleton(cur)
        skel_set = set(sk.skeleton)

    trace.decomposition = SkeletonDecomposition(
        leaves=tuple(sorted(back[v] for v in sk.leaves)),
        supports=tuple(sorted(back[v] for v in sk.supports)),
        skeleton=tuple(sorted(back[v] for v in sk.skeleton)),
        leaf_of={back[m]: back[l] for m, l in sk.leaf_of.items()},
        skeleton_components=tuple(
            tuple(sorted(back[v] for v in comp)) for comp in sk.skeleton_components
        ),
    )
    trace.lines.append(
        "skeleton L={} M={} S={}".format(
            [back[v] for v in sk.leaves],
            [back[v] for v in sk.supports],
            [back[v] for v in sk.skeleton],
        )
    )

    support_set = set(sk.supports)
    frozen_skel = frozenset(skel_set)
    sdeg = {v: sk.skeleton_degree(cur, v, frozen_skel) for v in sk.skeleton}
    star_centers = [v for v in sk.skeleton if sdeg[v] == len(sk.skeleton) - 1]
    for center in star_centers:
        if not any(w in support_set for w in cur.adjacency[center]):
            trace.lines.append(f"skeleton is a star centered at {back[center]} with no support neighbor")
            return trace._finish(Outcome.A, "star", "Alice claims the star center")

    if exhaustive_candidates:
        members = sk.skeleton_set()
        skel_leaves = {v for v in sk.skeleton if sk.skeleton_degree(cur, v, members) <= 1}
        cands = sorted(
            v0 for v0 in sk.supports if any(w in skel_leaves for w in cur.adjacency[v0])
        )
    else:
        cands = candidate_first_moves(cur, sk)
    reports = tuple(_candidate_report(cur, sk, v0) for v0 in cands)
    trace.candidates = tuple(
        CandidateReport(
            back[r.v0],
            tuple(
                ComponentReport(tuple(back[v] for v in cr.vertices), cr.shape, cr.favorability)
                for cr in r.components
            ),
            r.winning,
        )
        for r in reports
    )
    for rep in trace.candidates:
        parts = "; ".join(
            f"{cr.shape} {cr.favorability.value if cr.favorability else 'Other'}"
            for cr in rep.components
        )
        trace.lines.append(f"candidate v0={rep.v0}: {parts} -> {'win' if rep.winning else 'no win'}")
    if not cands:
        trace.lines.append("no first-move candidate reaches every skeleton component")
    if any(r.winning for r in reports):
        return trace._finish(Outcome.A, "favorable-candidate", "some candidate makes every component favorable")
    return trace._finish(Outcome.D, "no-favorable-candidate", "no candidate makes every component favorable")


def forest_outcome(f: Graph) -> Outcome:
    """Outcome of the fresh game on a forest via the decision tree."""
    result = explain(f).outcome
    assert result is not None
    return result
