"""Certificate replay for the invisible-robber games and strategy
verification for the entanglement game.

A SweepCertificate is an open-loop placement sequence; verify_sweep replays
it under either invisible-game semantics and reports whether it clears the
graph and whether it ever recontaminates.  The entanglement side provides a
feedback-vertex chase strategy (the one that witnesses ent <= 3 for the
switch-all family) and an exhaustive verifier that plays every robber reply
against a given cop strategy.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

from ..graphs import (
    Graph,
    GraphError,
    bits_of,
    induced_subgraph,
    is_acyclic,
    mask_of,
    reach_mask,
    sccs,
    symmetric_closure,
)
from ..families import gen_switch_all
from .games import Variant


@dataclass(frozen=True)
class SweepCertificate:
    """Cop budget plus an ordered list of placements, starting from empty.

    Consecutive placements (the first relative to the empty set) must differ
    by at most one vertex added or removed, and every placement must fit the
    budget; violations are rejected at construction, naming the step.
    """

    cops: int
    placements: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.cops < 0:
            raise GraphError(f"cop budget must be non-negative, got {self.cops}")
        prev: frozenset[int] = frozenset()
        for step, placement in enumerate(self.placements):
            if not isinstance(placement, frozenset):
                raise GraphError(f"placement {step} must be a frozenset of vertex ids")
            if len(placement) > self.cops:
                raise GraphError(
                    f"placement {step} has {len(placement)} cops, exceeding the budget {self.cops}"
                )
            added = placement - prev
            removed = prev - placement
            if len(added) + len(removed) > 1:
                raise GraphError(
                    f"placement {step} changes more than one vertex "
                    f"(added {sorted(added)}, removed {sorted(removed)})"
                )
            prev = placement


@dataclass(frozen=True)
class SweepReport:
    cleared: bool
    monotone: bool
    step_of_first_violation: Optional[int]
    final_contaminated: frozenset[int]
    _required_ok: bool = True

    @property
    def ok(self) -> bool:
        """Cleared, and monotone whenever that was required."""
        return self.cleared and self._required_ok

    def __bool__(self) -> bool:
        return self.ok


def simulate_sweep(
    graph: Graph,
    placements: Sequence[Iterable[int]],
    semantics: Variant | str,
    require_monotone: bool = True,
) -> SweepReport:
    """Replay an arbitrary placement sequence (no single-move restriction)."""
    if isinstance(semantics, str):
        semantics = Variant(semantics)
    if semantics not in (Variant.KW, Variant.DPW):
        raise GraphError(f"sweep semantics must be kw or dpw, got {semantics.value}")
    inert = semantics is Variant.KW
    c = 0
    r = graph.full_mask
    monotone = True
    first_bad: Optional[int] = None
    for step, placement in enumerate(placements):
        cp = 0
        for v in placement:
            graph._check(v)
            cp |= 1 << v
        inter = c & cp
        if inert:
            flee = r & cp
            rp = (r | reach_mask(graph, inter, flee)) & ~cp if flee else r & ~cp
        else:
            rp = reach_mask(graph, inter, r) & ~cp
        if rp & ~(r | c):
            monotone = False
            if first_bad is None:
                first_bad = step
        c, r = cp, rp
    return SweepReport(
        cleared=(r == 0),
        monotone=monotone,
        step_of_first_violation=first_bad,
        final_contaminated=frozenset(bits_of(r)),
        _required_ok=(monotone or not require_monotone),
    )


def verify_sweep(
    graph: Graph,
    cert: SweepCertificate,
    semantics: Variant | str,
    require_monotone: bool = True,
) -> SweepReport:
    """Replay a certificate; cleared iff the final contaminated set is empty.

    The report's `ok` additionally demands monotonicity when
    require_monotone is set; `step_of_first_violation` indexes into
    cert.placements (0-based).
    """
    for step, placement in enumerate(cert.placements):
        if len(placement) > cert.cops:
            raise GraphError(f"placement {step} exceeds the certificate budget {cert.cops}")
    return simulate_sweep(graph, cert.placements, semantics, require_monotone)


def dpw_sweep_certificate_switch_all(n: int) -> SweepCertificate:
    """The 4-cop clearing sequence for the switch-all family.

    Two cops park on r and s for the whole sweep.  Per layer i the third cop
    holds e_i while the fourth sweeps d_i, g_i, f_i, h_i, k_i (g before f:
    clearing f first would recontaminate it through the edge g->f once the
    cop leaves).  Afterwards x is cleared, then the arm/chain pairs
    a_j, t_j descend from j=2n to 1, and c is swept last.  Verifies cleanly
    under both the restless and the inert semantics.
    """
    g = gen_switch_all(n)
    cur: set[int] = set()
    seq: list[frozenset[int]] = []

    def move(add: str | None = None, remove: str | None = None) -> None:
        if add is not None:
            cur.add(g.id_of(add))
        if remove is not None:
            cur.discard(g.id_of(remove))
        seq.append(frozenset(cur))

    move(add="r")
    move(add="s")
    for i in range(1, n + 1):
        move(add=f"e{i}")
        if i > 1:
            move(remove=f"e{i - 1}")
        for name in (f"d{i}", f"g{i}", f"f{i}", f"h{i}", f"k{i}"):
            move(add=name)
            move(remove=name)
    move(add="x")
    move(remove=f"e{n}")
    move(remove="x")
    for j in range(2 * n, 0, -1):
        move(add=f"a{j}")
        move(remove=f"a{j}")
        move(add=f"t{j}")
        move(remove=f"t{j}")
    move(add="c")
    return SweepCertificate(cops=4, placements=tuple(seq))


@dataclass(frozen=True)
class EntVerifyReport:
    ok: bool
    reason: str = ""
    failure_position: Optional[tuple] = None

    def __bool__(self) -> bool:
        return self.ok


def feedback_chase_strategy(
    graph: Graph,
    k: int,
    anchors: Sequence[int] = (),
) -> Callable[[frozenset[int], int], frozenset[int]]:
    """Cop strategy: park on each anchor when the robber first stands there;
    otherwise chase with the remaining cop, entering the robber's vertex only
    when he sits on the designated feedback vertex of a non-trivial strongly
    connected component of the graph minus the anchors.

    The designated feedback vertex of a component is its lowest-id vertex
    whose removal makes the component acyclic; components without one simply
    never trigger a chase move (the strategy then cannot win and verification
    will say so).
    """
    for v in anchors:
        graph._check(v)
    anchor_set = frozenset(anchors)
    rest = sorted(set(range(graph.vertex_count)) - anchor_set)
    sub = induced_subgraph(graph, rest)
    to_full = {i: v for i, v in enumerate(rest)}
    target: dict[int, int] = {}
    for comp in sccs(sub):
        nontrivial = len(comp) > 1 or sub.succ_masks[comp[0]] >> comp[0] & 1
        if not nontrivial:
            continue
        comp_set = set(comp)
        for v in comp:
            if is_acyclic(induced_subgraph(sub, comp_set - {v})):
                fv = to_full[v]
                for w in comp:
                    target[to_full[w]] = fv
                break

    def strategy(placement: frozenset[int], robber: int) -> frozenset[int]:
        if robber in anchor_set and robber not in placement:
            return placement | {robber}
        if target.get(robber) == robber:
            # one chase cop total: relocate it if placed, else commit a spare
            chasers = sorted(placement - anchor_set)
            if chasers:
                return (placement | {robber}) - {chasers[0]}
            if len(placement) < k:
                return placement | {robber}
        return placement

    return strategy


def ent_strategy_switch_all(n: int) -> Callable[[frozenset[int], int], frozenset[int]]:
    """The 3-cop entanglement strategy for the switch-all family: park on r
    and s, then chase through the rest of the graph, whose non-trivial
    components are the pairs {d_i, e_i} and the self-loop vertex x."""
    g = gen_switch_all(n)
    return feedback_chase_strategy(g, 3, anchors=(g.id_of("r"), g.id_of("s")))


def verify_ent_strategy(
    graph: Graph,
    strategy: Callable[[frozenset[int], int], frozenset[int]],
    k: int,
) -> EntVerifyReport:
    """Play every robber reply against the strategy.

    True iff every play is finite and ends with the robber out of moves.  An
    illegal cop move or a position the play can revisit (an infinite play
    exists) yields a failure report carrying the offending position.
    """
    succ = graph.succ_masks
    WHITE, GREY, BLACK = 0, 1, 2
    colour: dict[tuple, int] = {}
    # nodes: ("cop", C, v) robber stands at v, cops to announce;
    #        ("rob", C, v) placement announced, robber to move.
    stack: list[tuple] = []
    for v in range(graph.vertex_count):
        start = ("cop", frozenset(), v)
        if colour.get(start, WHITE) is not WHITE:
            continue
        stack.append((start, False))
        while stack:
            node, processed = stack.pop()
            if processed:
                colour[node] = BLACK
                continue
            state = colour.get(node, WHITE)
            if state is BLACK:
                continue
            if state is GREY:
                return EntVerifyReport(
                    ok=False,
                    reason="the robber can force an infinite play (position repeats)",
                    failure_position=node,
                )
            colour[node] = GREY
            stack.append((node, True))
            kind, c, v = node
            if kind == "cop":
                cp = frozenset(strategy(c, v))
                added = cp - c
                removed = c - cp
                legal = (
                    (not added and not removed)
                    or (added == {v} and not removed and len(cp) <= k)
                    or (added == {v} and len(removed) == 1 and len(cp) <= k)
                )
                if not legal:
                    return EntVerifyReport(
                        ok=False,
                        reason=f"illegal cop move {sorted(c)} -> {sorted(cp)} against robber at {v}",
                        failure_position=node,
                    )
                children = [("rob", cp, v)]
            else:
                cm = mask_of(c)
                children = [("cop", c, w) for w in bits_of(succ[v] & ~cm)]
                # no children: robber is stuck, cops win this branch
            for child in children:
                st = colour.get(child, WHITE)
                if st is GREY:
                    return EntVerifyReport(
                        ok=False,
                        reason="the robber can force an infinite play (position repeats)",
                        failure_position=child,
                    )
                if st is WHITE:
                    stack.append((child, False))
    return EntVerifyReport(ok=True)


def entanglement_is_one(graph: Graph) -> bool:
    """True iff the graph has a cycle and every strongly connected component
    contains a vertex whose removal makes that component acyclic."""
    if is_acyclic(graph):
        return False
    for comp in sccs(graph):
        if len(comp) == 1:
            continue  # loop-free singletons are vacuous; a self-loop empties on removal
        sub = induced_subgraph(graph, comp)
        everyone = set(range(len(comp)))
        if not any(
            is_acyclic(induced_subgraph(sub, everyone - {v})) for v in range(len(comp))
        ):
            return False
    return True


def replay_cop_strategy(
    graph: Graph,
    variant: Variant,
    cops: int,
    strategy_moves: dict[tuple[int, int], int],
    require_monotone: bool = True,
) -> bool:
    """Replay a positional visible-game strategy against every robber reply.

    True iff from every start the strategy stays defined, every move is
    legal (and monotone when required), and all plays end in capture without
    revisiting a position.
    """
    g = symmetric_closure(graph) if variant is Variant.TW else graph
    n = g.vertex_count
    WHITE, GREY, BLACK = 0, 1, 2
    colour: dict[tuple, int] = {}
    for v0 in range(n):
        start = (0, v0)
        if colour.get(start, WHITE) is not WHITE:
            continue
        stack = [(start, False)]
        while stack:
            node, processed = stack.pop()
            if processed:
                colour[node] = BLACK
                continue
            st = colour.get(node, WHITE)
            if st is BLACK:
                continue
            if st is GREY:
                return False
            colour[node] = GREY
            stack.append((node, True))
            c, v = node
            cp = strategy_moves.get((c, v))
            if cp is None or cp.bit_count() > cops:
                return False
            if (c ^ cp).bit_count() > 1:  # normalized strategies move one cop at most
                return False
            space = reach_mask(g, c & cp, 1 << v)
            if require_monotone and space & (c & ~cp):
                return False
            for w in bits_of(space & ~cp):
                child = (cp, w)
                cst = colour.get(child, WHITE)
                if cst is GREY:
                    return False
                if cst is WHITE:
                    stack.append((child, False))
    return True
