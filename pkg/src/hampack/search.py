"""Exhaustive classification and exact search oracles, H(n, 2).

Extended 1-perfect unitrades of length n are enumerated by a clique
propagation search: the relevant balls are the maximum cliques of the
halved n-cube (one per odd-parity word), and a partial selection is
extended by unit-propagation style rules

    2 words in a clique  -> the rest of the clique is excluded,
    1 word + 1 candidate -> the candidate is forced in,
    1 word + 0 candidates / 3 words -> dead branch,
    0 words + 1 candidate -> the candidate is excluded,

branching on the clique with the fewest candidate partners.  Symmetry
is broken up front: the all-zero word is in the set and its n/2
distance-2 neighbors are exactly the aligned pair words 1100...,
0011..., ....  Every equivalence class has such a member (translate a
member to zero, then permute its neighbor matching onto the aligned
pairs), so the enumeration is complete; duplicates are removed by
canonical forms, after a cheap orbit-minimality filter under the
subgroup that preserves the seed.

Equivalence is the isometry group of H(n, 2) acting on vertex sets:
coordinate permutations composed with translations (odd-parity sets are
translated onto even parity).  The canonical form is the exact
lexicographic minimum of the sorted word list over the group, computed
by branch and bound over ordered column partitions: the minimum always
starts with the zero word, so only translations by members matter, and
columns are refined word by word, emitting at each step the smallest
realizable next word.

``max_twofold_packing_size`` and ``max_packing_size`` are independent
branch-and-bound oracles over raw vertex sets; they certify exact
maxima either by exhausting the tree or by meeting a proven upper bound
(sphere-packing / LP), and they share no code with the constructions
they are used to check.
"""

from __future__ import annotations

import json
import sys
from functools import lru_cache
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from .analysis import (
    is_antipodal,
    is_bipartite_unitrade,
    is_extended_unitrade,
    reducibility_certificate,
)
from .bounds import lp_bound
from .core import Code, Space
from .core import ball as ball_iter

_MIN_N, _MAX_N = 4, 12


# ---------------------------------------------------------------------------
# canonical forms and equivalence
# ---------------------------------------------------------------------------

def _canonical_keys(keys: Sequence[int], n: int) -> tuple[int, ...]:
    """Exact lex-min of the sorted key list over translations x permutations."""
    if not keys:
        return ()
    key_set = set(keys)
    full = (1 << n) - 1
    best: Optional[list[int]] = None

    def val_and_refinement(word: int, blocks: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
        """Smallest value of the word consistent with the ordered blocks,
        and the refinement that realizes it (zero columns first)."""
        v = 0
        refined: list[int] = []
        for mask in blocks:
            ones = word & mask
            v = (v << mask.bit_count()) | ((1 << ones.bit_count()) - 1)
            zeros = mask ^ ones
            if zeros:
                refined.append(zeros)
            if ones:
                refined.append(ones)
        return v, tuple(refined)

    def dfs(blocks: tuple[int, ...], remaining: frozenset[int], emitted: list[int]) -> None:
        nonlocal best
        if best is not None and emitted > best[: len(emitted)]:
            return
        if not remaining:
            if best is None or emitted < best:
                best = list(emitted)
            return
        if all(m.bit_count() == 1 for m in blocks):
            # permutation fully determined: finish in one step
            cand = emitted + sorted(val_and_refinement(w, blocks)[0] for w in remaining)
            if best is None or cand < best:
                best = cand
            return
        lo: Optional[int] = None
        options: list[tuple[int, tuple[int, ...]]] = []
        for w in remaining:
            v, refined = val_and_refinement(w, blocks)
            if lo is None or v < lo:
                lo, options = v, [(w, refined)]
            elif v == lo:
                options.append((w, refined))
        assert lo is not None
        emitted.append(lo)
        if best is None or emitted <= best[: len(emitted)]:
            for w, refined in options:
                dfs(refined, remaining - {w}, emitted)
        emitted.pop()

    # order translates so that a strong incumbent appears early
    translates = sorted(
        (sorted((k ^ t).bit_count() for k in key_set), t) for t in key_set
    )
    for _, t in translates:
        shifted = frozenset(k ^ t for k in key_set) - {0}
        dfs((full,), shifted, [0])
    assert best is not None
    return tuple(best)


@lru_cache(maxsize=256)
def _canonical_keys_cached(keys: tuple[int, ...], n: int) -> tuple[int, ...]:
    return _canonical_keys(keys, n)


def canonical_form(t_set: Code) -> Code:
    """Lexicographic minimum of the set over coordinate permutations and
    translations; idempotent, and equal across equivalent sets."""
    space = t_set.space
    if space.q != 2:
        raise ValueError("canonical forms are implemented for q=2 only")
    keys = tuple(sorted({w.key for w in t_set.words}))
    if len(keys) != len(t_set.words):
        raise ValueError("canonical forms are defined for multiplicity-free sets")
    return Code.from_bits(space, _canonical_keys_cached(keys, space.n))


def _distance_profile(keys: Sequence[int]) -> tuple[int, ...]:
    counts = [0] * 65
    for i, x in enumerate(keys):
        for y in keys[i + 1:]:
            counts[(x ^ y).bit_count()] += 1
    return tuple(counts)


def are_equivalent(a: Code, b: Code) -> bool:
    """One set maps to the other under a coordinate permutation plus a
    translation; decided by comparing canonical forms."""
    if a.space.n != b.space.n:
        raise ValueError("sets of different lengths are never equivalent")
    if len(a) != len(b):
        return False
    if _distance_profile([w.key for w in a.words]) != _distance_profile([w.key for w in b.words]):
        return False
    return canonical_form(a).words == canonical_form(b).words


# ---------------------------------------------------------------------------
# the unitrade enumeration engine
# ---------------------------------------------------------------------------

class _Engine:
    """Clique-propagation search over the even-parity words of H(n, 2)."""

    UNDECIDED, IN, OUT = 0, 1, 2

    def __init__(self, n: int, antipodal_only: bool = False, max_cardinality: Optional[int] = None):
        self.n = n
        self.antipodal_only = antipodal_only
        self.max_cardinality = max_cardinality
        evens = [k for k in range(1 << n) if k.bit_count() % 2 == 0]
        odds = [k for k in range(1 << n) if k.bit_count() % 2 == 1]
        self.evens = evens
        self.even_index = {k: i for i, k in enumerate(evens)}
        self.clique_members = [
            [self.even_index[c ^ (1 << b)] for b in range(n)] for c in odds
        ]
        self.member_cliques: list[list[int]] = [[] for _ in evens]
        for ci, members in enumerate(self.clique_members):
            for m in members:
                self.member_cliques[m].append(ci)
        self.complement = [self.even_index[k ^ ((1 << n) - 1)] for k in evens]
        self.status = bytearray(len(evens))
        self.cin = bytearray(len(odds))
        self.cund = bytearray([n]) * len(odds)
        self.in_count = 0
        self.fronts: list[int] = []
        self.trail: list[int] = []

    # -- assignment with propagation --------------------------------------

    def assign(self, idx: int, val: int) -> bool:
        """Set one word in/out and propagate; False on contradiction."""
        status, cin, cund = self.status, self.cin, self.cund
        trail, fronts = self.trail, self.fronts
        member_cliques, clique_members = self.member_cliques, self.clique_members
        max_card = self.max_cardinality
        pending = [(idx, val)]
        pop, push = pending.pop, pending.append
        while pending:
            i, v = pop()
            st = status[i]
            if st:
                if st != v:
                    return False
                continue
            if v == 1:
                if max_card is not None and self.in_count >= max_card:
                    return False
                self.in_count += 1
            status[i] = v
            trail.append(i)
            mc = member_cliques[i]
            # counters first, all of them, so undo stays consistent even
            # when a rule below reports a contradiction
            if v == 1:
                for ci in mc:
                    cund[ci] -= 1
                    cin[ci] += 1
            else:
                for ci in mc:
                    cund[ci] -= 1
            if self.antipodal_only:
                comp = self.complement[i]
                cst = status[comp]
                if not cst:
                    push((comp, v))
                elif cst != v:
                    return False
            for ci in mc:
                c_in = cin[ci]
                c_und = cund[ci]
                if c_in == 0:
                    if c_und == 1:
                        for mj in clique_members[ci]:
                            if not status[mj]:
                                push((mj, 2))
                                break
                elif c_in == 1:
                    if c_und == 0:
                        return False
                    if c_und == 1:
                        for mj in clique_members[ci]:
                            if not status[mj]:
                                push((mj, 1))
                                break
                    else:
                        fronts.append(ci)
                elif c_in == 2:
                    if c_und:
                        for mj in clique_members[ci]:
                            if not status[mj]:
                                push((mj, 2))
                else:
                    return False
        return True

    def mark(self) -> tuple[int, int]:
        return len(self.trail), len(self.fronts)

    def undo(self, mark: tuple[int, int]) -> None:
        trail_len, fronts_len = mark
        status, cin, cund = self.status, self.cin, self.cund
        trail = self.trail
        member_cliques = self.member_cliques
        dropped_in = 0
        while len(trail) > trail_len:
            i = trail.pop()
            if status[i] == 1:
                dropped_in += 1
                for ci in member_cliques[i]:
                    cund[ci] += 1
                    cin[ci] -= 1
            else:
                for ci in member_cliques[i]:
                    cund[ci] += 1
            status[i] = 0
        self.in_count -= dropped_in
        del self.fronts[fronts_len:]

    # -- branching structure ----------------------------------------------

    def pick_front(self) -> Optional[list[int]]:
        """Candidate partners of a pending 1-word clique, fewest first.

        The undecided counters give candidate counts for free, so only
        the chosen clique's member list is materialized.
        """
        cin, cund = self.cin, self.cund
        best_ci, best_n = -1, 1 << 30
        for ci in self.fronts:
            if cin[ci] != 1:
                continue
            c = cund[ci]
            if c and c < best_n:
                best_ci, best_n = ci, c
                if c == 2:
                    break
        if best_ci < 0:
            return None
        status = self.status
        return [mj for mj in self.clique_members[best_ci] if not status[mj]]

    def in_keys(self) -> tuple[int, ...]:
        return tuple(self.evens[i] for i in range(len(self.evens)) if self.status[i] == self.IN)

    def undecided_indices(self) -> list[int]:
        return [i for i in range(len(self.evens)) if self.status[i] == self.UNDECIDED]

    def seed_decisions(self) -> list[tuple[int, int]]:
        """The symmetry-broken seed: zero plus the aligned pair words."""
        n = self.n
        decisions = [(self.even_index[0], self.IN)]
        for t in range(n // 2):
            decisions.append((self.even_index[0b11 << (n - 2 - 2 * t)], self.IN))
        return decisions


def _search(engine: _Engine, out: list, min_tracker: Optional[list[int]] = None) -> None:
    """Exhaustive DFS from the current engine state.

    Records every unitrade extending the current state into ``out``,
    or, with a tracker, only maintains the minimum cardinality seen.
    """
    if min_tracker is not None and engine.in_count >= min_tracker[0]:
        return
    cands = engine.pick_front()
    if cands is not None:
        for mj in cands:
            mk = engine.mark()
            if engine.assign(mj, engine.IN):
                _search(engine, out, min_tracker)
            engine.undo(mk)
        return
    # quiescent: the current in-set is a complete extended unitrade
    if min_tracker is None:
        out.append(engine.in_keys())
    else:
        if engine.in_count < min_tracker[0]:
            min_tracker[0] = engine.in_count
        if engine.in_count + 1 >= min_tracker[0]:
            return
    if engine.max_cardinality is not None and engine.in_count >= engine.max_cardinality:
        return
    # extensions, partitioned by the smallest newly added word
    frame = engine.mark()
    for w in engine.undecided_indices():
        if engine.status[w] != engine.UNDECIDED:
            continue
        mk = engine.mark()
        if engine.assign(w, engine.IN):
            _search(engine, out, min_tracker)
        engine.undo(mk)
        if not engine.assign(w, engine.OUT):
            break
    engine.undo(frame)


def _enumerate_with_seed(
    n: int,
    antipodal_only: bool = False,
    max_cardinality: Optional[int] = None,
    decisions: Optional[Sequence[tuple[int, int]]] = None,
) -> list[tuple[int, ...]]:
    engine = _Engine(n, antipodal_only, max_cardinality)
    for idx, val in engine.seed_decisions():
        if not engine.assign(idx, val):
            return []
    if decisions:
        for idx, val in decisions:
            if not engine.assign(idx, val):
                return []
    out: list[tuple[int, ...]] = []
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(100000)
    try:
        _search(engine, out)
    finally:
        sys.setrecursionlimit(old)
    return out


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SearchConfig:
    """Parameters of one classification run."""

    n: int
    nonbipartite_only: bool = False
    antipodal_only: bool = False
    max_cardinality: Optional[int] = None
    threads: int = 1
    checkpoint_path: Optional[str] = None

    def __post_init__(self) -> None:
        if self.n % 2 or not _MIN_N <= self.n <= _MAX_N:
            raise ValueError(f"supported lengths are even n in {_MIN_N}..{_MAX_N}")
        if self.threads < 1:
            raise ValueError("thread count must be positive")

    def filter_key(self) -> dict:
        return {
            "n": self.n,
            "nonbipartite_only": self.nonbipartite_only,
            "antipodal_only": self.antipodal_only,
            "max_cardinality": self.max_cardinality,
        }


@dataclass(frozen=True)
class EquivalenceClass:
    """One equivalence class of extended unitrades, canonically represented."""

    representative: Code
    cardinality: int
    bipartite: bool
    antipodal: bool
    constant_weight_translate: bool
    irreducible: bool
    reducibility_kind: str

    @property
    def flags(self) -> dict[str, bool]:
        return {
            "bipartite": self.bipartite,
            "antipodal": self.antipodal,
            "constant_weight_translate": self.constant_weight_translate,
            "irreducible": self.irreducible,
        }


def has_constant_weight_translate(t_set: Code) -> bool:
    """Is some translate of the set constant-weight (equivalently: is the
    set at uniform distance from some word)?"""
    keys = [w.key for w in t_set.words]
    if not keys:
        return True
    n = t_set.space.n
    first = keys[0]
    for v in range(1 << n):
        d = (first ^ v).bit_count()
        if all((k ^ v).bit_count() == d for k in keys):
            return True
    return False


def _pair_permutations(n: int) -> list[list[int]]:
    """Coordinate permutations preserving the seed configuration:
    permutations of the n/2 aligned pairs composed with in-pair swaps."""
    from itertools import permutations, product

    half = n // 2
    perms = []
    for block_order in permutations(range(half)):
        for flips in product((0, 1), repeat=half):
            perm = [0] * n
            for t in range(half):
                ta, tb = 2 * block_order[t], 2 * block_order[t] + 1
                if flips[t]:
                    ta, tb = tb, ta
                perm[2 * t], perm[2 * t + 1] = ta, tb
            perms.append(perm)
    return perms


def _perm_tables(perms: list[list[int]], n: int) -> list[list[int]]:
    """Per-permutation lookup of the image of every n-bit key, built by
    extending lowest-set-bit images."""
    tables = []
    for perm in perms:
        bit_img = [0] * n
        for i in range(n):
            bit_img[n - 1 - i] = 1 << (n - 1 - perm[i])
        table = [0] * (1 << n)
        for key in range(1, 1 << n):
            low = key & -key
            table[key] = table[key ^ low] | bit_img[low.bit_length() - 1]
        tables.append(table)
    return tables


def _orbit_minimal(solution: tuple[int, ...], tables: list[list[int]]) -> bool:
    """Keep one representative per orbit of the seed-preserving group."""
    sol = list(solution)
    for table in tables:
        mapped = sorted(table[k] for k in sol)
        if mapped < sol:
            return False
    return True


def _classify_worker(args: tuple) -> list[tuple[int, ...]]:
    n, antipodal_only, max_cardinality, decisions = args
    return _enumerate_with_seed(n, antipodal_only, max_cardinality, [tuple(d) for d in decisions])


def _expand_units(engine: _Engine, target: int) -> tuple[list[list[tuple[int, int]]], list[tuple[int, ...]]]:
    """Split the search tree below the seed into replayable decision lists.

    Returns (units, closed): ``closed`` collects the complete unitrades
    encountered at the expanded nodes themselves (the 'stop here'
    alternative of the extension branching).
    """
    units: list[list[tuple[int, int]]] = [[]]
    closed: list[tuple[int, ...]] = []
    while units and len(units) < target:
        units.sort(key=len)
        unit = units.pop(0)
        mk = engine.mark()
        ok = True
        for idx, val in unit:
            if not engine.assign(idx, val):
                ok = False
                break
        children: list[list[tuple[int, int]]] = []
        if ok:
            cands = engine.pick_front()
            if cands is not None:
                children = [unit + [(mj, engine.IN)] for mj in cands]
            else:
                closed.append(engine.in_keys())
                limit = engine.max_cardinality
                if not (limit is not None and engine.in_count >= limit):
                    undecided = engine.undecided_indices()
                    for pos, w in enumerate(undecided):
                        children.append(
                            unit + [(u, engine.OUT) for u in undecided[:pos]] + [(w, engine.IN)]
                        )
        engine.undo(mk)
        if not children and not units:
            break
        units.extend(children)
    return units, closed


def _run_enumeration(cfg: SearchConfig) -> list[tuple[int, ...]]:
    if cfg.threads == 1 and cfg.checkpoint_path is None:
        return _enumerate_with_seed(cfg.n, cfg.antipodal_only, cfg.max_cardinality)

    engine = _Engine(cfg.n, cfg.antipodal_only, cfg.max_cardinality)
    for idx, val in engine.seed_decisions():
        if not engine.assign(idx, val):
            return []
    units, closed = _expand_units(engine, max(256, 64 * cfg.threads))

    state = _load_checkpoint(cfg, len(units)) if cfg.checkpoint_path else None
    if state is None:
        state = {
            "filters": cfg.filter_key(),
            "unit_count": len(units),
            "closed": [list(s) for s in closed],
            "completed": {},
        }
    solutions: list[tuple[int, ...]] = [tuple(s) for s in state["closed"]]
    for sols in state["completed"].values():
        solutions.extend(tuple(s) for s in sols)
    todo = [(i, u) for i, u in enumerate(units) if str(i) not in state["completed"]]

    if cfg.threads > 1:
        from concurrent.futures import as_completed

        with ProcessPoolExecutor(max_workers=cfg.threads) as pool:
            futures = {
                pool.submit(
                    _classify_worker, (cfg.n, cfg.antipodal_only, cfg.max_cardinality, unit)
                ): i
                for i, unit in todo
            }
            for fut in as_completed(futures):
                sols = fut.result()
                solutions.extend(sols)
                state["completed"][str(futures[fut])] = [list(s) for s in sols]
                _save_checkpoint(cfg, state)
    else:
        for i, unit in todo:
            sols = _enumerate_with_seed(cfg.n, cfg.antipodal_only, cfg.max_cardinality, unit)
            solutions.extend(sols)
            state["completed"][str(i)] = [list(s) for s in sols]
            _save_checkpoint(cfg, state)
    _save_checkpoint(cfg, state)
    return solutions


def _load_checkpoint(cfg: SearchConfig, unit_count: int) -> Optional[dict]:
    path = Path(cfg.checkpoint_path)
    if not path.exists():
        return None
    try:
        state = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ValueError(f"corrupt checkpoint {path}: {exc}") from None
    if state.get("filters") != cfg.filter_key() or state.get("unit_count") != unit_count:
        raise ValueError(f"checkpoint {path} was written for a different configuration")
    return state


def _save_checkpoint(cfg: SearchConfig, state: dict) -> None:
    if cfg.checkpoint_path is None:
        return
    path = Path(cfg.checkpoint_path)
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text(json.dumps(state))
    tmp.replace(path)


def classify_extended_unitrades(cfg: SearchConfig) -> list[EquivalenceClass]:
    """Complete, isomorph-free classification of the nonempty extended
    1-perfect unitrades of length cfg.n satisfying the filters."""
    solutions = _run_enumeration(cfg)

    n = cfg.n
    tables = _perm_tables(_pair_permutations(n), n)
    survivors = [s for s in solutions if _orbit_minimal(s, tables)]

    space = Space(n, 2)
    classes: dict[tuple[int, ...], Code] = {}
    for sol in survivors:
        canon = _canonical_keys(sol, n)
        if canon not in classes:
            classes[canon] = Code.from_bits(space, canon)

    result = []
    for rep in classes.values():
        if not is_extended_unitrade(rep).ok:
            raise AssertionError("classification produced a non-unitrade representative")
        bip = is_bipartite_unitrade(rep, extended=True).bipartite
        if cfg.nonbipartite_only and bip:
            continue
        red = reducibility_certificate(rep)
        result.append(
            EquivalenceClass(
                representative=rep,
                cardinality=len(rep),
                bipartite=bip,
                antipodal=is_antipodal(rep),
                constant_weight_translate=has_constant_weight_translate(rep),
                irreducible=red.kind == "irreducible",
                reducibility_kind=red.kind,
            )
        )
    result.sort(key=lambda cl: (cl.cardinality, [w.key for w in cl.representative.words]))
    return result


# ---------------------------------------------------------------------------
# exact minimum / maximum oracles
# ---------------------------------------------------------------------------

def min_extended_unitrade_size(n: int) -> int:
    """Exact minimum cardinality of a nonempty extended unitrade, by search."""
    if n % 2 or not 2 <= n <= _MAX_N:
        raise ValueError(f"supported lengths are even n in 2..{_MAX_N}")
    if n == 2:
        return 2  # both unitrades of length 2 have two words
    engine = _Engine(n)
    for idx, val in engine.seed_decisions():
        if not engine.assign(idx, val):
            raise AssertionError("the seed configuration cannot fail")
    tracker = [1 << n]
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(100000)
    try:
        _search(engine, [], tracker)
    finally:
        sys.setrecursionlimit(old)
    return tracker[0]


def max_packing_size(n: int, q: int, lam: int, r: int) -> int:
    """Exact maximum size of a lambda-fold r-packing in H(n, q).

    Branch and bound over vertices in lexicographic order; repeated
    codewords are modeled by allowing a vertex to be taken again, so the
    answer is the true multiset maximum.  Certification is by meeting a
    proven upper bound or exhausting the tree.
    """
    space = Space(n, q)
    size = space.size
    if size > 4096:
        raise ValueError("the exact packing search is a desk-scale oracle (q^n <= 4096)")
    words = list(space)
    index = {w.key: i for i, w in enumerate(words)}
    balls = [sorted(index[v.key] for v in ball_iter(w, r)) for w in words]
    ball_size = space.ball_size(r)
    cap = lam * size // ball_size
    if q == 2 and r == 1 and n >= 2:
        cap = min(cap, lp_bound(n, lam).value)

    cov = [0] * size
    best = 0

    def dfs(start: int, current: int, slack: int) -> None:
        nonlocal best
        if current > best:
            best = current
        if best >= cap or current + slack // ball_size <= best:
            return
        for v in range(start, size):
            if any(cov[u] >= lam for u in balls[v]):
                continue
            for u in balls[v]:
                cov[u] += 1
            dfs(v, current + 1, slack - ball_size)
            for u in balls[v]:
                cov[u] -= 1
            if best >= cap:
                return

    dfs(0, 0, lam * size)
    return best


def max_twofold_packing_size(n: int) -> int:
    """Exact maximum size of a 2-fold 1-packing in H(n, 2), n <= 7."""
    if not 1 <= n <= 7:
        raise ValueError("the exhaustive two-fold oracle is limited to n <= 7")
    if n == 1:
        return 2
    return max_packing_size(n, 2, 2, 1)
