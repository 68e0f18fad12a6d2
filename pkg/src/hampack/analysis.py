"""Verification predicates and exact distributions for codes in H(n, q).

The central objects being verified:

  * lambda-fold r-packings: every radius-r ball contains at most lambda
    codewords, counted with multiplicity;
  * 1-perfect unitrades: every radius-1 ball meets the set in 0 or 2
    words;
  * extended 1-perfect unitrades: constant-parity binary sets where the
    balls centered at opposite-parity words meet the set in 0 or 2.

For n >= 5 the extended property has an equivalent reading inside the
halved n-cube (vertices = one parity class, adjacency = distance 2):
the set induces a subgraph of degree exactly n/2 with no triangles.
``is_extended_unitrade`` evaluates both readings and insists they agree.

All distributions (distance distribution, MacWilliams transform) are
computed in exact rational arithmetic, so nonnegativity of the dual
distribution is a hard check rather than a tolerance question.

Everything here is pure and read-only; inputs are immutable codes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional

from .core import Code, Space, Word, ball, hamming_distance, weight

# ---------------------------------------------------------------------------
# packing verification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PackingReport:
    """Exact maximum ball coverage of a code, with a witness vertex."""

    max_coverage: int
    witness: Optional[Word]
    lambda_queried: int
    is_lambda_fold: bool
    duplicate_words: tuple[Word, ...]

    def __str__(self) -> str:
        verdict = "<= lambda" if self.is_lambda_fold else "> lambda"
        return (f"max_coverage={self.max_coverage} ({verdict}={self.lambda_queried}), "
                f"witness={self.witness}, duplicates={len(self.duplicate_words)}")


def _coverage_counts_union(code: Code, r: int) -> dict:
    """Coverage counts over the union of balls around codewords."""
    counts: dict = {}
    for c in code.words:
        for v in ball(c, r):
            counts[v.key] = counts.get(v.key, 0) + 1
    return counts


def _coverage_counts_full(code: Code, r: int) -> dict:
    counts: dict = {}
    for v in code.space:
        m = sum(1 for c in code.words if hamming_distance(c, v) <= r)
        if m:
            counts[v.key] = m
    return counts


def verify_packing(code: Code, lam: int, r: int, force_full_scan: bool = False) -> PackingReport:
    """Exact maximum coverage over all vertices of the space.

    Vertices covering at least one codeword all lie in some ball around
    a codeword, so scanning the union of those balls finds the true
    maximum whenever the code is nonempty; the full-space scan is kept
    for small spaces and as a cross-check.
    """
    if lam < 1:
        raise ValueError("lambda must be a positive integer")
    space = code.space
    if not 0 <= r <= space.n:
        raise ValueError(f"radius {r} out of range 0..{space.n}")
    dups = tuple(code.duplicate_words())
    if len(code) == 0:
        return PackingReport(0, None, lam, True, dups)
    use_union = (2 * len(code) * space.ball_size(r) < space.size) and not force_full_scan
    counts = _coverage_counts_union(code, r) if use_union else _coverage_counts_full(code, r)
    max_cov = max(counts.values())
    witness_key = min(k for k, v in counts.items() if v == max_cov)
    witness = Word(space, witness_key)
    return PackingReport(max_cov, witness, lam, max_cov <= lam, dups)


# ---------------------------------------------------------------------------
# unitrade predicates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CheckResult:
    """Boolean verdict plus, on failure, a witness ball center."""

    ok: bool
    witness: Optional[Word]

    def __bool__(self) -> bool:
        return self.ok


def _ball_center_counts(code: Code, r: int = 1) -> dict:
    counts: dict = {}
    for t in code.words:
        for c in ball(t, r):
            counts[c.key] = counts.get(c.key, 0) + 1
    return counts


def is_unitrade(t_set: Code) -> CheckResult:
    """|B intersect T| in {0, 2} for every radius-1 ball B of H(n, q)."""
    counts = _ball_center_counts(t_set)
    bad = [k for k, v in counts.items() if v != 2]
    if bad:
        return CheckResult(False, Word(t_set.space, min(bad)))
    return CheckResult(True, None)


def _parity_of(code: Code) -> Optional[int]:
    parities = {w.parity for w in code.words}
    if len(parities) > 1:
        raise ValueError("mixed-parity input: not a candidate extended unitrade")
    return parities.pop() if parities else None


def _halved_cube_check(t_set: Code) -> bool:
    """Degree-n/2, triangle-free reading inside the halved n-cube."""
    n = t_set.space.n
    keys = [w.key for w in t_set.words]
    key_set = set(keys)
    if len(key_set) != len(keys):
        return False
    for k in keys:
        nbrs = [m for m in key_set if (k ^ m).bit_count() == 2]
        if 2 * len(nbrs) != n:
            return False
        for i, a in enumerate(nbrs):
            for b in nbrs[i + 1:]:
                if (a ^ b).bit_count() == 2:
                    return False
    return True


def is_extended_unitrade(t_set: Code) -> CheckResult:
    """Constant-parity set meeting opposite-parity balls in 0 or 2 words.

    For n >= 5 the definitional ball scan is cross-checked against the
    halved-cube characterization; disagreement would be an internal
    error and raises.
    """
    space = t_set.space
    if space.q != 2:
        raise ValueError("extended unitrades are defined for q=2 only")
    _parity_of(t_set)  # raises on mixed parity
    # relevant ball centers are the opposite-parity words adjacent to members
    counts: dict = {}
    n = space.n
    for t in t_set.words:
        for b in range(n):
            c = t.key ^ (1 << b)
            counts[c] = counts.get(c, 0) + 1
    bad = [k for k, v in counts.items() if v != 2]
    verdict = not bad
    if space.n >= 5 and len(t_set) > 0:
        alt = _halved_cube_check(t_set)
        if alt != verdict:
            raise AssertionError("ball scan and halved-cube characterization disagree")
    if bad:
        return CheckResult(False, Word(space, min(bad)))
    return CheckResult(True, None)


def is_antipodal(t_set: Code) -> bool:
    """Closed under complementation of all coordinates (q=2)."""
    if t_set.space.q != 2:
        raise ValueError("antipodality is defined for q=2 only")
    mask = (1 << t_set.space.n) - 1
    keys = {w.key for w in t_set.words}
    return all((k ^ mask) in keys for k in keys)


# ---------------------------------------------------------------------------
# bipartiteness, components, reducibility
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Bipartition:
    """2-coloring into distance-3 (distance-4) codes, or an odd-cycle refutation."""

    parts: Optional[tuple[Code, Code]]
    odd_cycle: Optional[tuple[Word, ...]]

    @property
    def bipartite(self) -> bool:
        return self.parts is not None

    def __bool__(self) -> bool:
        return self.bipartite


def _conflict_adjacency(words: tuple[Word, ...], extended: bool) -> list[list[int]]:
    m = len(words)
    adj: list[list[int]] = [[] for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            d = hamming_distance(words[i], words[j])
            if d == 2 or (not extended and d == 1) or d == 0:
                adj[i].append(j)
                adj[j].append(i)
    return adj


def _require_unitrade(t_set: Code, extended: bool) -> None:
    res = is_extended_unitrade(t_set) if extended else is_unitrade(t_set)
    if not res.ok:
        kind = "an extended" if extended else "a"
        raise ValueError(f"input is not {kind} 1-perfect unitrade; witness ball center {res.witness}")


def is_bipartite_unitrade(t_set: Code, extended: bool) -> Bipartition:
    """Split a unitrade into two distance-3 (distance-4 if extended) codes.

    The conflict graph joins words at distance <= 2 (exactly 2 in the
    extended case, where all distances are even); a valid split is a
    proper 2-coloring, and an odd cycle found by the BFS refutes it.
    """
    _require_unitrade(t_set, extended)
    words = t_set.words
    m = len(words)
    adj = _conflict_adjacency(words, extended)
    color = [-1] * m
    parent = [-1] * m
    for start in range(m):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            u = queue.pop()
            for v in adj[u]:
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    parent[v] = u
                    queue.append(v)
                elif color[v] == color[u]:
                    cycle = _odd_cycle(u, v, parent)
                    return Bipartition(None, tuple(words[i] for i in cycle))
    part0 = Code(t_set.space, [w for w, c in zip(words, color) if c == 0])
    part1 = Code(t_set.space, [w for w, c in zip(words, color) if c == 1])
    return Bipartition((part0, part1), None)


def _odd_cycle(u: int, v: int, parent: list[int]) -> list[int]:
    anc_u, anc_v = [u], [v]
    seen = {u: 0}
    x = u
    while parent[x] != -1:
        x = parent[x]
        seen[x] = len(anc_u)
        anc_u.append(x)
    x = v
    while x not in seen:
        anc_v.append(parent[x])
        x = parent[x]
    return anc_u[: seen[x] + 1][::-1] + anc_v[:-1]


def primary_components(t_set: Code, extended: bool) -> list[Code]:
    """Partition into minimal sub-unitrades.

    Two words sharing a radius-1 ball (distance <= 2; exactly 2 in the
    extended case) must stay together, so the minimal pieces are the
    connected components of that relation, each a unitrade itself.
    """
    _require_unitrade(t_set, extended)
    words = t_set.words
    adj = _conflict_adjacency(words, extended)
    comp = [-1] * len(words)
    pieces: list[Code] = []
    for start in range(len(words)):
        if comp[start] != -1:
            continue
        comp[start] = len(pieces)
        stack, members = [start], [start]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if comp[v] == -1:
                    comp[v] = comp[start]
                    stack.append(v)
                    members.append(v)
        pieces.append(Code(t_set.space, [words[i] for i in members]))
    pieces.sort(key=lambda c: [w.key for w in c.words])
    return pieces


@dataclass(frozen=True)
class Reducibility:
    """Outcome of the concatenation-factorization test.

    kind is 'irreducible' (coordinate graph connected: a distance-2 pair
    straddles every coordinate cut), 'factorization' (an explicit product
    decomposition was found) or 'unknown' (disconnected coordinate graph
    but no factorization across the tried cuts; disconnectedness alone
    does not prove reducibility).
    """

    kind: str
    coordinate_components: tuple[tuple[int, ...], ...]
    factor_coords: Optional[tuple[tuple[int, ...], tuple[int, ...]]] = None
    factors: Optional[tuple[Code, Code]] = None


def _project(t_set: Code, coords: tuple[int, ...]) -> Code:
    space = Space(len(coords), 2)
    seen = {}
    for w in t_set.words:
        syms = w.symbols
        sub = Word.from_symbols((syms[i] for i in coords), 2)
        seen[sub.key] = sub
    return Code(space, seen.values())


def reducibility_certificate(t_set: Code) -> Reducibility:
    """Certify irreducibility or exhibit a concatenation factorization."""
    _require_unitrade(t_set, extended=True)
    if len(t_set) == 0:
        raise ValueError("reducibility is undefined for the empty unitrade")
    n = t_set.space.n
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    keys = [w.key for w in t_set.words]
    for i, a in enumerate(keys):
        for b in keys[i + 1:]:
            diff = a ^ b
            if diff.bit_count() == 2:
                hi = diff.bit_length() - 1
                lo = (diff ^ (1 << hi)).bit_length() - 1
                ra, rb = find(n - 1 - hi), find(n - 1 - lo)
                if ra != rb:
                    parent[ra] = rb
    groups: dict[int, list[int]] = {}
    for c in range(n):
        groups.setdefault(find(c), []).append(c)
    components = tuple(tuple(sorted(g)) for g in sorted(groups.values()))
    if len(components) == 1:
        return Reducibility("irreducible", components)
    # try to factor across every union of components versus the rest
    k = len(components)
    for mask in range(1, 1 << (k - 1)):
        left = tuple(sorted(c for i in range(k) if (mask >> i) & 1 for c in components[i]))
        right = tuple(sorted(c for i in range(k) if not (mask >> i) & 1 for c in components[i]))
        u_proj, v_proj = _project(t_set, left), _project(t_set, right)
        if len(u_proj) * len(v_proj) != len(t_set):
            continue
        rebuilt = set()
        for u in u_proj.words:
            for v in v_proj.words:
                syms = [0] * n
                for c, s in zip(left, u.symbols):
                    syms[c] = s
                for c, s in zip(right, v.symbols):
                    syms[c] = s
                rebuilt.add(Word.from_symbols(syms, 2).key)
        if rebuilt == {w.key for w in t_set.words}:
            return Reducibility("factorization", components, (left, right), (u_proj, v_proj))
    return Reducibility("unknown", components)


# ---------------------------------------------------------------------------
# distributions: distance, weight, MacWilliams
# ---------------------------------------------------------------------------

def krawtchouk(n: int, k: int, i: int) -> int:
    """K_k(i) = sum_j (-1)^j C(i, j) C(n-i, k-j), binary Hamming scheme."""
    return sum((-1) ** j * comb(i, j) * comb(n - i, k - j) for j in range(k + 1))


@dataclass(frozen=True)
class DistanceData:
    """Exact distance/weight distributions of one code.

    B[i] is the average number of codeword pairs at distance i (rational);
    A_x[i] counts codewords at distance i from the reference word;
    B_dual is the MacWilliams transform |C| B'_k = sum_i B_i K_k(i),
    defined for q=2, where nonnegativity holds for every genuine code.
    """

    n: int
    size: int
    B: tuple[Fraction, ...]
    A_x: Optional[tuple[int, ...]]
    B_dual: Optional[tuple[Fraction, ...]]
    K: Optional[tuple[tuple[int, ...], ...]]

    def dual_nonnegative(self) -> bool:
        return self.B_dual is not None and all(b >= 0 for b in self.B_dual)


def weight_distribution(code: Code, x: Word) -> tuple[int, ...]:
    """A_i(x): codewords (with multiplicity) at distance i from x."""
    counts = [0] * (code.space.n + 1)
    for c in code.words:
        counts[hamming_distance(c, x)] += 1
    return tuple(counts)


def macwilliams_transform(b: tuple[Fraction, ...], n: int, size: int) -> tuple[Fraction, ...]:
    """B'_k = (1/size) sum_i B_i K_k(i), in exact rationals."""
    return tuple(
        sum((Fraction(b[i]) * krawtchouk(n, k, i) for i in range(n + 1)), Fraction(0)) / size
        for k in range(n + 1)
    )


def distance_data(code: Code, x: Optional[Word] = None) -> DistanceData:
    """Exact B, A_x and (for q=2) the dual distribution and Krawtchouk table."""
    if len(code) == 0:
        raise ValueError("distance distribution of an empty code is undefined")
    n = code.space.n
    pair_counts = [0] * (n + 1)
    for a in code.words:
        for b in code.words:
            pair_counts[hamming_distance(a, b)] += 1
    size = len(code)
    b_dist = tuple(Fraction(c, size) for c in pair_counts)
    a_x = weight_distribution(code, x) if x is not None else None
    if code.space.q == 2:
        table = tuple(tuple(krawtchouk(n, k, i) for i in range(n + 1)) for k in range(n + 1))
        b_dual = macwilliams_transform(b_dist, n, size)
    else:
        table = None
        b_dual = None
    return DistanceData(n, size, b_dist, a_x, b_dual, table)


# ---------------------------------------------------------------------------
# orthogonal-array balance, inner radius, pair profiles
# ---------------------------------------------------------------------------

def oa_strength1_check(t_set: Code) -> bool:
    """Each coordinate holds 0 and 1 equally often (strength-1 OA)."""
    if t_set.space.q != 2:
        raise ValueError("the balance check is defined for q=2 only")
    n = t_set.space.n
    m = len(t_set)
    for i in range(n):
        ones = sum((w.key >> (n - 1 - i)) & 1 for w in t_set.words)
        if 2 * ones != m:
            return False
    return True


def average_distance(t_set: Code, v: Word) -> Fraction:
    """Exact average Hamming distance from v to the members."""
    if len(t_set) == 0:
        raise ValueError("average distance to an empty set is undefined")
    return Fraction(sum(hamming_distance(v, w) for w in t_set.words), len(t_set))


def inner_radius(t_set: Code) -> int:
    """min over members of the max distance to other members."""
    if len(t_set) == 0:
        raise ValueError("inner radius of an empty set is undefined")
    return min(max(hamming_distance(x, y) for y in t_set.words) for x in t_set.words)


@dataclass(frozen=True)
class PairProfile:
    """Counts of distance-2 pairs of an extended unitrade by weight relation.

    All pair counts are ordered-pair counts classified by the weight of
    the first element: plus[i] pairs go from weight i to weight i+2,
    star[i] stay at weight i, minus[i] drop to weight i-2.  They satisfy
    2*minus[i] + star[i] = i*weight_counts[i],
    star[i] + 2*plus[i] = (n-i)*weight_counts[i] and
    minus[i] = plus[i-2].
    """

    n: int
    total: int
    weight_counts: tuple[int, ...]
    minus: tuple[int, ...]
    star: tuple[int, ...]
    plus: tuple[int, ...]


def pair_profile(t_set: Code) -> PairProfile:
    """Distance-2 pair counts by weight; requires the all-zero word present."""
    space = t_set.space
    if space.q != 2:
        raise ValueError("pair profiles are defined for q=2 only")
    if space.zero() not in set(t_set.words):
        raise ValueError("translate the unitrade so that it contains the all-zero word")
    n = space.n
    w_counts = [0] * (n + 1)
    for w in t_set.words:
        w_counts[weight(w)] += 1
    minus = [0] * (n + 1)
    star = [0] * (n + 1)
    plus = [0] * (n + 1)
    words = t_set.words
    for a in words:
        wa = weight(a)
        for b in words:
            if hamming_distance(a, b) != 2:
                continue
            wb = weight(b)
            if wb == wa + 2:
                plus[wa] += 1
            elif wb == wa - 2:
                minus[wa] += 1
            else:
                star[wa] += 1
    return PairProfile(n, len(t_set), tuple(w_counts), tuple(minus), tuple(star), tuple(plus))
