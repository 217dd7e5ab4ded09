"""Machine checks of the structural theorems over generated codes.

Codes come either from exhaustive enumeration of every k-dimensional
subspace of F_2^n (one reduced row echelon generator per subspace) or from a
seeded random generator.  Each code goes through :func:`check_code`; the
results are collected in a :class:`VerifyReport`.

Two kinds of outcome are kept apart.  *Counterexamples* are violations of the
proven statements (connectivity, triangle-freeness, parity bipartition,
diameter bound, star characterisation, vertex count, unique leaders, the
walk upper bound on distances, equivalence implies isomorphism, poset axioms
and the covering-radius identity) and make the run fail.  *Findings* record
pairs where the closed-form distance is strictly larger than the true graph
distance; the closed form is only claimed as an equality, never proven
minimal, so those are reported with witnesses but do not fail the run.
"""

from __future__ import annotations

import itertools
import json
import os
import random
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .code import LinearCode, build_code, covering_radius, enumerate_cosets, minimum_distance
from .equivalence import apply_permutation, permutation_equivalent
from .errors import BudgetExceeded
from .gf2 import BinaryMatrix, Permutation, popcount, rref_bits
from .graph import (
    all_pairs_distances,
    bipartition_problems,
    graph_isomorphic,
    hasse_isomorphic,
    is_connected,
    is_star,
    is_triangle_free,
    refine_colours,
)
from .poset import HasseGraph, build_hasse, corollary_distance, descendant_masks, orphans

DEFAULT_BUDGET = 10**9
EXHAUSTIVE_MAX_N = 7
RANDOM_MAX_N = 12
ORACLE_MAX_N = 10
DEFAULT_MAX_PAIRS = 5000

CHECKS = (
    "vertex_count",
    "unique_leaders",
    "edge_weights",
    "connected",
    "triangle_free",
    "bipartite_parity",
    "diameter_ge_radius",
    "star_iff_radius_one",
    "poset_axioms",
    "orphans_maximal",
    "child_construction",
    "corollary_upper_bound",
    "covering_radius_oracle",
    "equivalence_isomorphism",
)


# -- code generation ---------------------------------------------------------


def rref_generators(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Every k x n reduced row echelon matrix of rank k, as int rows.

    Each k-dimensional subspace of F_2^n appears exactly once.
    """
    for pivots in itertools.combinations(range(1, n + 1), k):
        pset = set(pivots)
        free = [[j for j in range(p + 1, n + 1) if j not in pset] for p in pivots]
        total = sum(len(f) for f in free)
        for fill in range(1 << total):
            rows = []
            shift = total
            for p, cols in zip(pivots, free):
                r = 1 << (n - p)
                for j in cols:
                    shift -= 1
                    if fill >> shift & 1:
                        r |= 1 << (n - j)
                rows.append(r)
            yield tuple(rows)


def gaussian_binomial(n: int, k: int) -> int:
    """Number of k-dimensional subspaces of F_2^n."""
    num = den = 1
    for i in range(k):
        num *= (1 << (n - i)) - 1
        den *= (1 << (i + 1)) - 1
    return num // den


def exhaustive_codes(n_max: int, n_min: int = 2) -> Iterator[LinearCode]:
    for n in range(n_min, n_max + 1):
        for k in range(1, n):
            for rows in rref_generators(n, k):
                yield build_code(BinaryMatrix.from_ints(rows, n))


def random_code(rng: random.Random, n: int, k: int | None = None) -> LinearCode:
    if k is None:
        k = rng.randint(1, n - 1)
    while True:
        rows = [rng.getrandbits(n) for _ in range(k)]
        if len(rref_bits(rows, n)[1]) == k:
            return build_code(BinaryMatrix.from_ints(rows, n))


def random_codes(count: int, n_max: int, seed: int, n_min: int = 2) -> Iterator[LinearCode]:
    rng = random.Random(seed)
    for _ in range(count):
        yield random_code(rng, rng.randint(n_min, n_max))


def random_permutation(rng: random.Random, n: int) -> Permutation:
    m = list(range(1, n + 1))
    rng.shuffle(m)
    return Permutation(tuple(m))


def code_key(code: LinearCode) -> tuple:
    """(n, k, RREF rows): identical for equal codes regardless of basis."""
    rows, _ = rref_bits(code.generator.ints, code.n)
    return (code.n, code.k, tuple(rows))


def key_text(key: tuple) -> str:
    n, _, rows = key
    return "/".join(format(r, f"0{n}b") for r in rows)


# -- oracles -----------------------------------------------------------------


def brute_covering_radius(code: LinearCode) -> int:
    """max over x of min over codewords c of d(x, c), by double loop."""
    words = code.codeword_bits
    return max(min(popcount(x ^ c) for c in words) for x in range(1 << code.n))


# -- per-code checks ---------------------------------------------------------


@dataclass
class CodeResult:
    key: tuple
    n: int
    k: int
    d: int
    radius: int
    checks: dict[str, bool]
    counterexamples: list[str] = field(default_factory=list)
    pairs_checked: int = 0
    strict_pairs: list[tuple[int, int, int, int]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def record(self) -> dict:
        return {
            "code": key_text(self.key),
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "rho": self.radius,
            "checks": self.checks,
            "counterexamples": self.counterexamples,
            "corollary_pairs": self.pairs_checked,
            "corollary_strict": len(self.strict_pairs),
        }


def _fail(result: CodeResult, name: str, detail: str) -> None:
    result.checks[name] = False
    result.counterexamples.append(f"{key_text(result.key)}: {name}: {detail}")


def _poset_problems(table, desc: tuple[int, ...]) -> list[str]:
    out = []
    for a, m in enumerate(desc):
        if m >> a & 1:
            out.append(f"C{a} strictly below itself")
        rest = m
        while rest:
            low = rest & -rest
            rest ^= low
            b = low.bit_length() - 1
            if desc[b] >> a & 1:
                out.append(f"C{a} and C{b} precede each other")
            if desc[b] & ~m:
                out.append(f"C{b} < C{a} but a descendant of C{b} is not below C{a}")
    return out


def _closure_masks(g: HasseGraph) -> list[int]:
    """Strict descendants reachable by repeatedly stepping to a child."""
    w = g.table.weights
    masks = [0] * g.n_vertices
    for v in sorted(range(g.n_vertices), key=lambda v: w[v]):
        for u in g.adjacency[v]:
            if w[u] < w[v]:
                masks[v] |= masks[u] | 1 << u
    return masks


def _walk_ok(g: HasseGraph, walk: list[int], a: int, b: int) -> bool:
    if walk[0] != a or walk[-1] != b:
        return False
    adj = g.adjacency
    return all(walk[i + 1] in adj[walk[i]] for i in range(len(walk) - 1))


def check_code(
    code: LinearCode,
    rng: random.Random | None = None,
    max_pairs: int = DEFAULT_MAX_PAIRS,
    mutate: Callable[[HasseGraph], HasseGraph] | None = None,
    oracle_max_n: int = ORACLE_MAX_N,
) -> CodeResult:
    """Run every structural check on one code.

    ``mutate`` is a test hook that replaces the Hasse diagram before the
    graph checks run, to confirm that the checks can fail.
    """
    rng = rng or random.Random(0)
    table = enumerate_cosets(code)
    g = build_hasse(table)
    if mutate is not None:
        g = mutate(g)
    rho = covering_radius(table)
    d = minimum_distance(code)
    result = CodeResult(code_key(code), code.n, code.k, d, rho, {c: True for c in CHECKS})
    V = len(table)
    w = table.weights

    if V != 1 << code.redundancy:
        _fail(result, "vertex_count", f"{V} vertices, expected {1 << code.redundancy}")
    t = (d - 1) // 2
    for i, coset in enumerate(table.cosets):
        if coset.weight <= t and len(coset.leaders) != 1:
            _fail(result, "unique_leaders", f"C{i} has weight {coset.weight} <= {t} but {len(coset.leaders)} leaders")
    for u, v in g.edges:
        if abs(w[u] - w[v]) != 1:
            _fail(result, "edge_weights", f"edge C{u}-C{v} joins weights {w[u]} and {w[v]}")

    connected = is_connected(g)
    if not connected:
        _fail(result, "connected", "graph is disconnected")
    if not is_triangle_free(g):
        _fail(result, "triangle_free", "a triangle exists")
    for p in bipartition_problems(g):
        _fail(result, "bipartite_parity", p)
    dist = all_pairs_distances(g) if connected else None
    if connected:
        diam = max(max(row) for row in dist)
        if diam < rho:
            _fail(result, "diameter_ge_radius", f"diameter {diam} < rho {rho}")
    star = is_star(g)
    if star != (rho == 1):
        _fail(result, "star_iff_radius_one", f"is_star={star} but rho={rho}")

    desc = descendant_masks(table)
    for p in _poset_problems(table, desc):
        _fail(result, "poset_axioms", p)
    if _closure_masks(g) != list(desc):
        _fail(result, "poset_axioms", "descendant relation differs from the closure of the Hasse edges")
    below_something = 0
    for m in desc:
        below_something |= m
    maximal = [v for v in range(V) if not below_something >> v & 1]
    if orphans(g) != maximal:
        _fail(result, "orphans_maximal", f"orphans {orphans(g)} != maximal {maximal}")

    edge_set = set(g.edges)
    for v, leaders in enumerate(table.leader_bits):
        for x in leaders:
            y = x
            while y:
                low = y & -y
                y ^= low
                u = table.index_of_word(x ^ low)
                if w[u] != w[v] - 1 or (u, v) not in edge_set:
                    _fail(result, "child_construction", f"removing a coordinate from a leader of C{v} gives C{u}")

    if connected:
        pairs = [(a, b) for a in range(V) for b in range(a + 1, V)]
        if len(pairs) > max_pairs:
            pairs = sorted(rng.sample(pairs, max_pairs))
        for a, b in pairs:
            value, walk = corollary_distance(table, a, b)
            if not _walk_ok(g, walk, a, b) or len(walk) - 1 > value:
                _fail(result, "corollary_upper_bound", f"C{a}-C{b}: invalid witness walk {walk}")
            elif dist[a][b] > value:
                _fail(result, "corollary_upper_bound", f"C{a}-C{b}: BFS {dist[a][b]} > value {value}")
            elif dist[a][b] < value:
                result.strict_pairs.append((a, b, dist[a][b], value))
        result.pairs_checked = len(pairs)

    if code.n <= oracle_max_n:
        brute = brute_covering_radius(code)
        if brute != rho:
            _fail(result, "covering_radius_oracle", f"table rho {rho} != brute force {brute}")

    perm = random_permutation(rng, code.n)
    other = apply_permutation(code, perm)
    g2 = build_hasse(enumerate_cosets(other))
    if mutate is not None:
        g2 = mutate(g2)
    witness = hasse_isomorphic(g, g2)
    if witness is None or not witness.verify(g, g2):
        _fail(result, "equivalence_isomorphism", f"no isomorphism after permutation {perm}")

    return result


# -- isomorphic but inequivalent pairs ---------------------------------------


def isomorphic_inequivalent_pairs(
    codes, limit: int = 20, full_support: bool = True
) -> list[tuple[LinearCode, LinearCode]]:
    """Pairs of permutation-inequivalent codes whose Hasse diagrams are isomorphic.

    Raw material only; at most ``limit`` pairs, one representative per
    equivalence class.  With ``full_support`` codes having an identically
    zero coordinate are skipped.
    """
    groups: dict[tuple, list[tuple[LinearCode, HasseGraph]]] = {}
    found = []
    for code in codes:
        if full_support:
            support = 0
            for r in code.generator.ints:
                support |= r
            if support != (1 << code.n) - 1:
                continue
        g = build_hasse(enumerate_cosets(code))
        colours = refine_colours([g.adjacency], [[0] * g.n_vertices])[0]
        sig = (g.n_vertices, len(g.edges), tuple(sorted(colours)))
        reps = groups.setdefault(sig, [])
        if any(rc.n == code.n and rc.k == code.k and permutation_equivalent(rc, code) for rc, _ in reps):
            continue
        for rc, rg in reps:
            if graph_isomorphic(rg, g) is not None:
                found.append((rc, code))
                if len(found) >= limit:
                    return found
                break
        reps.append((code, g))
    return found


# -- the suite ---------------------------------------------------------------


@dataclass
class VerifyReport:
    mode: str
    n_min: int
    n_max: int
    seed: int
    count: int | None
    results: list[CodeResult]
    catalog: list[tuple[str, str]] = field(default_factory=list)

    @property
    def counterexamples(self) -> list[str]:
        return [c for r in sorted(self.results, key=lambda r: r.key) for c in r.counterexamples]

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    @property
    def corollary_pairs(self) -> int:
        return sum(r.pairs_checked for r in self.results)

    @property
    def corollary_strict(self) -> int:
        return sum(len(r.strict_pairs) for r in self.results)

    def strict_examples(self, limit: int = 5) -> list[str]:
        out = []
        for r in sorted(self.results, key=lambda r: (r.n, r.key)):
            for a, b, bfs, value in r.strict_pairs:
                out.append(f"{key_text(r.key)}: C{a}-C{b} BFS {bfs} < formula {value}")
                if len(out) >= limit:
                    return out
        return out

    def to_text(self) -> str:
        lines = [
            f"mode: {self.mode}  n: {self.n_min}..{self.n_max}  seed: {self.seed}"
            + (f"  count: {self.count}" if self.mode == "random" else ""),
            f"codes checked: {len(self.results)}",
        ]
        for name in CHECKS:
            bad = sum(1 for r in self.results if not r.checks[name])
            lines.append(f"  {name:<26} {'ok' if not bad else f'FAILED on {bad} codes'}")
        lines.append(f"corollary pairs checked: {self.corollary_pairs}")
        lines.append(f"corollary strict inequalities (BFS < formula): {self.corollary_strict}")
        lines += [f"  e.g. {s}" for s in self.strict_examples()]
        if self.catalog:
            lines.append(f"isomorphic diagrams, inequivalent codes: {len(self.catalog)} pairs")
            lines += [f"  {a}  ~  {b}" for a, b in self.catalog]
        lines.append(f"counterexamples: {len(self.counterexamples)}")
        lines += [f"  {c}" for c in self.counterexamples[:50]]
        lines.append("status: " + ("pass" if self.passed else "FAIL"))
        return "\n".join(lines) + "\n"

    def to_records(self) -> str:
        out = [json.dumps({"type": "params", "mode": self.mode, "n_min": self.n_min, "n_max": self.n_max,
                           "seed": self.seed, "count": self.count}, sort_keys=True)]
        for r in sorted(self.results, key=lambda r: r.key):
            out.append(json.dumps({"type": "code", **r.record()}, sort_keys=True))
        for a, b in self.catalog:
            out.append(json.dumps({"type": "isomorphic_inequivalent", "a": a, "b": b}, sort_keys=True))
        out.append(json.dumps({
            "type": "summary",
            "codes": len(self.results),
            "counterexamples": len(self.counterexamples),
            "corollary_pairs": self.corollary_pairs,
            "corollary_strict": self.corollary_strict,
            "status": "pass" if self.passed else "fail",
        }, sort_keys=True))
        return "\n".join(out) + "\n"


def projected_work(mode: str, n_min: int, n_max: int, count: int | None = None) -> int:
    """Rough operation count: 2^n vectors plus (2^(n-k))^2 vertex pairs per code."""
    if mode == "exhaustive":
        return sum(
            gaussian_binomial(n, k) * ((1 << n) + (1 << 2 * (n - k)))
            for n in range(n_min, n_max + 1)
            for k in range(1, n)
        )
    worst = (1 << n_max) + min(1 << 2 * (n_max - 1), DEFAULT_MAX_PAIRS * 2 ** (n_max - 1))
    return (count or 0) * worst


def budget_limit() -> int:
    env = os.environ.get("COSETPOSET_BUDGET")
    return int(float(env)) if env else DEFAULT_BUDGET


def run_verify(
    n_max: int,
    mode: str = "exhaustive",
    seed: int = 0,
    count: int = 50,
    n_min: int = 2,
    budget: int | None = None,
    max_pairs: int = DEFAULT_MAX_PAIRS,
    catalog_n_max: int | None = None,
    mutate: Callable[[HasseGraph], HasseGraph] | None = None,
    progress: Callable[[int], None] | None = None,
) -> VerifyReport:
    if mode not in ("exhaustive", "random"):
        raise ValueError(f"unknown mode {mode!r}")
    cap = EXHAUSTIVE_MAX_N if mode == "exhaustive" else RANDOM_MAX_N
    if not 2 <= n_min <= n_max <= cap:
        raise ValueError(f"{mode} mode needs 2 <= n_min <= n_max <= {cap}")
    limit = budget if budget is not None else budget_limit()
    work = projected_work(mode, n_min, n_max, count)
    if work > limit:
        raise BudgetExceeded(f"projected work {work:.3g} exceeds the ceiling {limit:.3g}")

    rng = random.Random(seed)
    if mode == "exhaustive":
        codes = exhaustive_codes(n_max, n_min)
    else:
        codes = random_codes(count, n_max, seed, n_min)
    results = []
    for i, code in enumerate(codes):
        results.append(check_code(code, rng, max_pairs=max_pairs, mutate=mutate))
        if progress is not None:
            progress(i + 1)
    results.sort(key=lambda r: r.key)

    catalog = []
    if catalog_n_max is not None:
        pairs = isomorphic_inequivalent_pairs(exhaustive_codes(min(catalog_n_max, n_max), n_min))
        catalog = [(key_text(code_key(a)), key_text(code_key(b))) for a, b in pairs]
    return VerifyReport(mode, n_min, n_max, seed, count if mode == "random" else None, results, catalog)
