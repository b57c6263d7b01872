"""Exact deciders for the five pursuit games behind the directed width
measures: treewidth (on the symmetric closure), DAG-width, Kelly-width
(invisible inert robber), directed pathwidth (invisible robber) and
entanglement.

The visible-robber and entanglement games are solved by backward induction
over the explicit position space (attractor computation with successor
counters); the invisible-robber games are one-player searches over
(placement, contaminated-set) states.  Positions are encoded as int bitmasks
throughout.  Cop moves in the production solvers are normalized to
{stay, add one cop, remove one cop}; `full_moves=True` switches to arbitrary
next placements and exists as the reference semantics for cross-checking the
normalization on small graphs.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Optional

from ..graphs import (
    Graph,
    GraphError,
    bits_of,
    mask_of,
    reach_mask,
    symmetric_closure,
)

DEFAULT_STATE_BUDGET = 50_000_000


class BudgetExceededError(RuntimeError):
    """The solver hit its visited-state budget before finding an answer."""

    def __init__(self, budget: int):
        super().__init__(f"state budget exceeded ({budget} states)")
        self.budget = budget


class Variant(enum.Enum):
    TW = "tw"
    DAGW = "dagw"
    KW = "kw"
    DPW = "dpw"
    ENT = "ent"


class Winner(enum.Enum):
    COPS = "cops"
    ROBBER = "robber"


@dataclass(frozen=True)
class GameConfig:
    variant: Variant
    cops: int
    require_monotone: bool = True


@dataclass(frozen=True)
class CopStrategy:
    """Positional cop strategy: (placement mask, robber vertex) -> next placement mask.

    Defined exactly on the cop-won positions discovered by the solver.
    """

    moves: dict[tuple[int, int], int] = field(default_factory=dict)

    def next_placement(self, placement: Iterable[int], robber: int) -> frozenset[int]:
        key = (mask_of(placement), robber)
        if key not in self.moves:
            raise GraphError(f"strategy undefined at placement {sorted(placement)}, robber {robber}")
        return frozenset(bits_of(self.moves[key]))


@dataclass(frozen=True)
class SolveOutcome:
    winner: Winner
    witness: object | None
    states: int


def _check_cops(graph: Graph, cops: int) -> None:
    if not isinstance(cops, int) or cops < 0:
        raise GraphError(f"cop count must be a non-negative integer, got {cops!r}")
    if cops > graph.vertex_count:
        raise GraphError(f"cop count {cops} exceeds vertex count {graph.vertex_count}")


def _solve_reachability_game(
    starts: list,
    cop_moves: Callable[[object], list],
    robber_moves: Callable[[object], list],
    budget: int,
) -> tuple[bool, dict, int]:
    """Backward induction on the game graph spanned by `starts`.

    Cop nodes are won when some successor is won; robber nodes when all are
    (a robber node without successors is captured).  Returns (all starts won,
    strategy {cop key: winning robber key}, explored node count).
    """
    ids: dict = {}  # (side, key) -> node id; both games may reuse a key across sides
    keys: list = []
    is_cop: list[bool] = []
    preds: list[list[int]] = []
    pending: list[int] = []

    def intern(key, cop: bool) -> int:
        nid = ids.get((cop, key))
        if nid is None:
            nid = len(keys)
            if nid >= budget:
                raise BudgetExceededError(budget)
            ids[(cop, key)] = nid
            keys.append(key)
            is_cop.append(cop)
            preds.append([])
            pending.append(-1)
            frontier.append(nid)
        return nid

    frontier: deque[int] = deque()
    for s in starts:
        intern(s, True)
    # phase 1: materialize the reachable game graph
    while frontier:
        nid = frontier.popleft()
        key = keys[nid]
        succs = cop_moves(key) if is_cop[nid] else robber_moves(key)
        seen = set()
        count = 0
        for sk in succs:
            if sk in seen:
                continue
            seen.add(sk)
            sid = intern(sk, not is_cop[nid])
            preds[sid].append(nid)
            count += 1
        pending[nid] = count
    # phase 2: propagate wins backwards from captured robber nodes
    won = [False] * len(keys)
    strategy: dict = {}
    ready: deque[int] = deque(
        i for i in range(len(keys)) if not is_cop[i] and pending[i] == 0
    )
    for i in ready:
        won[i] = True
    while ready:
        nid = ready.popleft()
        for p in preds[nid]:
            if won[p]:
                continue
            if is_cop[p]:
                won[p] = True
                strategy[keys[p]] = keys[nid]
                ready.append(p)
            else:
                pending[p] -= 1
                if pending[p] == 0:
                    won[p] = True
                    ready.append(p)
    return all(won[ids[(True, s)]] for s in starts), strategy, len(keys)


def _placement_candidates(n: int, k: int) -> list[int]:
    """Every placement mask of size <= k, ascending; the full-move universe."""
    out = []
    for size in range(k + 1):
        for combo in combinations(range(n), size):
            out.append(mask_of(combo))
    return sorted(out)


def solve_visible(
    graph: Graph,
    config: GameConfig,
    *,
    budget: int = DEFAULT_STATE_BUDGET,
    full_moves: bool = False,
) -> SolveOutcome:
    """Decide the visible-robber game (variant TW or DAGW) with config.cops cops.

    TW plays on the symmetric closure of the graph; DAGW on the graph as
    given.  The robber chooses the start, so the cops win only if every
    initial position is won.  With require_monotone, cop moves whose
    announcement lets the robber reach a vertex being vacated are pruned
    (equivalently: such plays are awarded to the robber).
    """
    if config.variant not in (Variant.TW, Variant.DAGW):
        raise GraphError(f"solve_visible expects variant tw or dagw, got {config.variant.value}")
    _check_cops(graph, config.cops)
    g = symmetric_closure(graph) if config.variant is Variant.TW else graph
    n = g.vertex_count
    k = config.cops
    mono = config.require_monotone
    if n == 0:
        return SolveOutcome(Winner.COPS, CopStrategy({}), 0)
    succ = g.succ_masks
    universe = _placement_candidates(n, k) if full_moves else None

    def cop_moves(key):
        c, v = key
        if universe is not None:
            cands = universe
        else:
            cands = [c]
            if c.bit_count() < k:
                free = ~c & ((1 << n) - 1)
                cands.extend(c | b for b in _single_bits(free))
            cands.extend(c ^ b for b in _single_bits(c))
        out = []
        vb = 1 << v
        for cp in cands:
            if mono:
                vacated = c & ~cp
                if vacated and reach_mask(g, c & cp, vb) & vacated:
                    continue
            out.append((c, cp, v))
        return out

    def robber_moves(key):
        c, cp, v = key
        space = reach_mask(g, c & cp, 1 << v) & ~cp
        return [(cp, w) for w in bits_of(space)]

    starts = [(0, v) for v in range(n)]
    cops_win, raw, states = _solve_reachability_game(starts, cop_moves, robber_moves, budget)
    if not cops_win:
        return SolveOutcome(Winner.ROBBER, None, states)
    moves = {ck: rk[1] for ck, rk in raw.items()}
    return SolveOutcome(Winner.COPS, CopStrategy(moves), states)


def _single_bits(mask: int) -> Iterable[int]:
    while mask:
        b = mask & -mask
        yield b
        mask ^= b


def solve_invisible(
    graph: Graph,
    config: GameConfig,
    *,
    budget: int = DEFAULT_STATE_BUDGET,
    full_moves: bool = False,
) -> SolveOutcome:
    """Decide the invisible-robber game (variant KW or DPW) with config.cops cops.

    One-player search over states (placement C, contaminated set R) from
    (empty, all vertices).  Per announced placement C' the contamination
    updates to
        KW  (inert robber):  R' = (R | Reach_{G-(C&C')}(R & C')) \\ C'
        DPW (restless):      R' = Reach_{G-(C&C')}(R) \\ C'
    and the cops win iff some placement sequence empties R.  Under
    require_monotone the contaminated set must be non-increasing: any move
    with R' not a subset of R is pruned.  (This is stricter than the sweep
    verifier's recontamination flag, which tolerates a vacated guard falling
    back into R; allowing that here would let cops shuffle guards and beat
    the real width.)  The witness is the placement sequence found.
    """
    if config.variant not in (Variant.KW, Variant.DPW):
        raise GraphError(f"solve_invisible expects variant kw or dpw, got {config.variant.value}")
    _check_cops(graph, config.cops)
    n = graph.vertex_count
    k = config.cops
    mono = config.require_monotone
    inert = config.variant is Variant.KW
    if n == 0:
        return SolveOutcome(Winner.COPS, (), 0)
    full = graph.full_mask
    universe = _placement_candidates(n, k) if full_moves else None
    start = (0, full)
    parent: dict[tuple[int, int], tuple[int, int] | None] = {start: None}
    stack = [start]
    while stack:
        c, r = stack.pop()
        if universe is not None:
            cands = [cp for cp in universe if cp != c]
        else:
            cands = []
            if c.bit_count() < k:
                free = ~c & full
                cands.extend(c | b for b in _single_bits(free))
            cands.extend(c ^ b for b in _single_bits(c))
        for cp in cands:
            inter = c & cp
            if inert:
                flee = r & cp
                rp = (r | reach_mask(graph, inter, flee)) & ~cp if flee else r & ~cp
            else:
                rp = reach_mask(graph, inter, r) & ~cp
            if mono and rp & ~r:
                continue
            if rp == 0:
                seq = [frozenset(bits_of(cp))]
                node = (c, r)
                while parent[node] is not None:
                    seq.append(frozenset(bits_of(node[0])))
                    node = parent[node]
                seq.reverse()
                return SolveOutcome(Winner.COPS, tuple(seq), len(parent))
            key = (cp, rp)
            if key not in parent:
                if len(parent) >= budget:
                    raise BudgetExceededError(budget)
                parent[key] = (c, r)
                stack.append(key)
    return SolveOutcome(Winner.ROBBER, None, len(parent))


def solve_entanglement(
    graph: Graph,
    k: int,
    *,
    budget: int = DEFAULT_STATE_BUDGET,
) -> SolveOutcome:
    """Decide the entanglement game with k cops.

    Rounds: from position (C, robber at v) the cops announce C' = C, or
    C | {v} if a spare cop exists, or (C | {v}) minus one currently placed
    cop; then the robber must move along an edge to some v' outside C'.
    A robber without such an edge is caught (cops win); infinite play is a
    robber win.  There is no monotonicity notion here.
    """
    _check_cops(graph, k)
    n = graph.vertex_count
    if n == 0:
        return SolveOutcome(Winner.COPS, CopStrategy({}), 0)
    succ = graph.succ_masks

    def cop_moves(key):
        c, v = key
        vb = 1 << v
        out = [(c, v)]
        if c.bit_count() < k:
            out.append((c | vb, v))
        entered = c | vb
        for b in _single_bits(c):
            out.append((entered ^ b, v))
        return out

    def robber_moves(key):
        c, v = key
        return [(c, w) for w in bits_of(succ[v] & ~c)]

    starts = [(0, v) for v in range(n)]
    cops_win, raw, states = _solve_reachability_game(starts, cop_moves, robber_moves, budget)
    if not cops_win:
        return SolveOutcome(Winner.ROBBER, None, states)
    moves = {ck: rk[0] for ck, rk in raw.items()}
    return SolveOutcome(Winner.COPS, CopStrategy(moves), states)


def measure(
    graph: Graph,
    variant: Variant,
    *,
    budget: int = DEFAULT_STATE_BUDGET,
    require_monotone: bool = True,
) -> int:
    """Least winning cop count, reported in the variant's own offset.

    TW and DPW report k-1 where k is the least winning cop count (width k
    means k+1 cops win); DAGW, KW and ENT report the cop count itself.  The
    empty graph yields 0 for every variant.  The budget applies per solve;
    exhaustion raises BudgetExceededError rather than returning a value.
    """
    return measure_detailed(
        graph, variant, budget=budget, require_monotone=require_monotone
    )[0]


def measure_detailed(
    graph: Graph,
    variant: Variant,
    *,
    budget: int = DEFAULT_STATE_BUDGET,
    require_monotone: bool = True,
) -> tuple[int, int]:
    """measure() plus the total game states explored across the cop-count scan."""
    if graph.vertex_count == 0:
        return 0, 0
    total = 0
    for k in range(graph.vertex_count + 1):
        if variant is Variant.ENT:
            out = solve_entanglement(graph, k, budget=budget)
        elif variant in (Variant.KW, Variant.DPW):
            out = solve_invisible(
                graph, GameConfig(variant, k, require_monotone), budget=budget
            )
        else:
            out = solve_visible(
                graph, GameConfig(variant, k, require_monotone), budget=budget
            )
        total += out.states
        if out.winner is Winner.COPS:
            return (k - 1 if variant in (Variant.TW, Variant.DPW) else k), total
    raise AssertionError("a full placement always wins; unreachable")
