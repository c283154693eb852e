"""Instance generation and exact checks of the lex-max versus max-weight bounds.

For weight dispersion ``a`` (minimum ratio of consecutive weight levels):

* ``a <= 2``: the lex-maximal weight is at least ``a / 2`` times the optimum;
* ``a > 2``: lex-maximal and maximum-weight solutions coincide, both ways.

Every check is done in exact rational arithmetic and, within oracle bounds,
cross-checked by exhaustive enumeration.
"""

from __future__ import annotations

import hashlib
import math
import random
import re
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Optional

from . import intersection as ix
from . import matching as mx
from .core import (
    INFINITE,
    alpha,
    as_weight,
    eligibility_violations,
    format_rational,
    lex_signature,
    parse_rational,
    step_loss_bound,
    weight_classes,
    weight_of,
)
from .errors import GenerationError, InvalidParameter, InvalidSolution
from .matroid import (
    GraphicMatroid,
    LinearMatroid,
    Matroid,
    PartitionMatroid,
    UniformMatroid,
)

BOUND_REGIME = "bound"
EQUIVALENCE_REGIME = "equivalence"
INTERSECTION_FAMILIES = ("partition-partition", "graphic-partition",
                         "uniform-graphic", "linear-linear")


@dataclass(frozen=True)
class Instance:
    kind: str
    weights: tuple
    graph: Optional[mx.WeightedGraph] = None
    matroids: Optional[tuple] = None
    seed: Optional[int] = None
    metadata: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.kind == "matching":
            if self.graph is None:
                raise ValueError("matching instance needs a graph")
            object.__setattr__(self, "weights", self.graph.weights)
        elif self.kind == "intersection":
            m1, m2 = self.matroids
            if m1.ground != m2.ground:
                raise ValueError("matroids must share a ground set")
            weights = tuple(as_weight(w) for w in self.weights)
            if set(range(len(weights))) != set(m1.ground):
                raise ValueError("need one weight per ground element")
            object.__setattr__(self, "weights", weights)
        else:
            raise ValueError(f"unknown instance kind {self.kind!r}")

    @property
    def ground_size(self) -> int:
        return len(self.weights)

    @property
    def classes(self):
        return weight_classes(self.weights)

    @property
    def alpha(self):
        return alpha(self.classes) if self.weights else INFINITE

    # solver dispatch -----------------------------------------------------

    def is_feasible(self, X) -> bool:
        if self.kind == "matching":
            return mx.is_matching(self.graph, X)
        return ix.is_common_independent(*self.matroids, X)

    def solve_max_weight(self):
        if self.kind == "matching":
            return mx.max_weight_matching(self.graph)
        return ix.max_weight_common_independent(*self.matroids, self.weights)

    def solve_lex_max(self, base: int = 3):
        if self.kind == "matching":
            return mx.lex_maximal_matching(self.graph, base)
        return ix.lex_maximal_common_independent(*self.matroids, self.weights, base)

    def brute_force(self, objective: str, all_optima: bool = False):
        if self.kind == "matching":
            return mx.brute_force_matchings(self.graph, objective, all_optima=all_optima)
        return ix.brute_force_common_independent(*self.matroids, objective,
                                                 self.weights, all_optima=all_optima)

    def within_oracle(self) -> bool:
        if self.kind == "matching":
            return self.graph.edge_count <= mx.oracle_limit(mx.MATCHING_ORACLE_LIMIT)
        return self.ground_size <= mx.oracle_limit(ix.INTERSECTION_ORACLE_LIMIT)

    def deficient_index(self, X):
        if self.kind == "matching":
            return mx.smallest_deficient_index_matching(self.graph, X)
        return ix.smallest_deficient_index(*self.matroids, self.weights, X)

    def eligible(self, X) -> frozenset:
        if self.kind == "matching":
            return mx.eligible_improvement_matching(self.graph, X)
        return ix.eligible_improvement(*self.matroids, self.weights, X)


# generation --------------------------------------------------------------

@dataclass(frozen=True)
class AlphaRange:
    """Interval of dispersion values, e.g. ``AlphaRange.parse("(1, 2]")``."""

    low: Fraction
    high: Any  # Fraction or INFINITE
    low_open: bool = False
    high_open: bool = False

    @classmethod
    def parse(cls, text: str) -> "AlphaRange":
        m = re.fullmatch(r"\s*([\[(])\s*([^,\s]+)\s*,\s*([^,\s\])]+)\s*([\])])\s*", text)
        if m is None:
            raise InvalidParameter(f"cannot parse interval {text!r}")
        lo, hi = parse_rational(m.group(2)), parse_rational(m.group(3))
        return cls(lo, hi, m.group(1) == "(", m.group(4) == ")" or hi == INFINITE)

    def __contains__(self, a) -> bool:
        above = a > self.low if self.low_open else a >= self.low
        below = a < self.high if self.high_open else a <= self.high
        return above and below

    def __str__(self):
        return (("(" if self.low_open else "[") + format_rational(self.low) + ", "
                + format_rational(self.high) + (")" if self.high_open else "]"))


def _rational_in(rng: random.Random, rng_range: AlphaRange, span: Fraction = Fraction(3)):
    lo = rng_range.low
    hi = rng_range.high if rng_range.high != INFINITE else lo + span
    for dens in (range(1, 7), range(1, 61)):
        candidates = []
        for q in dens:
            for p in range(math.floor(lo * q), math.ceil(hi * q) + 1):
                v = Fraction(p, q)
                if v > 1 and v in rng_range and (rng_range.high != INFINITE or v <= hi):
                    candidates.append(v)
        if candidates:
            return rng.choice(sorted(set(candidates)))
    raise GenerationError(f"no small rational greater than 1 in {rng_range}")


def make_levels(rng: random.Random, k: int, alpha_range: AlphaRange) -> list[Fraction]:
    """``k`` strictly decreasing positive rationals whose min ratio lies in range."""
    smallest = Fraction(rng.randint(1, 5), rng.randint(1, 3))
    if k == 1:
        return [smallest]
    a = _rational_in(rng, alpha_range)
    ratios = [a]
    for _ in range(k - 2):
        ratios.append(a + Fraction(rng.randint(0, 8), rng.randint(1, 4)))
    rng.shuffle(ratios)
    levels = [smallest]
    for r in ratios:
        levels.append(levels[-1] * r)
    return levels[::-1]


def _assign(rng, count, levels):
    if count < len(levels):
        raise GenerationError(f"need at least {len(levels)} elements for {len(levels)} levels")
    picks = list(levels) + [rng.choice(levels) for _ in range(count - len(levels))]
    rng.shuffle(picks)
    return picks


def _random_matching_graph(rng, max_vertices, max_edges, min_edges):
    n = rng.randint(2, max(2, max_vertices))
    m = rng.randint(min_edges, max(min_edges, max_edges))
    edges = []
    for _ in range(m):
        u, v = rng.sample(range(n), 2)
        edges.append((u, v))
    return n, edges


def _random_partition(rng, n, max_blocks=None):
    nb = rng.randint(1, max(1, min(n, max_blocks or n)))
    block_of = [rng.randrange(nb) for _ in range(n)]
    blocks = [[e for e in range(n) if block_of[e] == j] for j in range(nb)]
    blocks = [b for b in blocks if b]
    caps = [rng.choice((1, 1, 1, 2)) for _ in blocks]
    return PartitionMatroid(n, blocks, caps)


def _random_graphic(rng, n, max_vertices=5):
    v = rng.randint(2, max_vertices)
    edges = [tuple(rng.sample(range(v), 2)) for _ in range(n)]
    return GraphicMatroid(v, edges)


def _random_linear(rng, n):
    r = rng.randint(1, 3)
    return LinearMatroid([[rng.randint(-2, 2) for _ in range(n)] for _ in range(r)])


def _random_matroid_pair(rng, family, n) -> tuple[Matroid, Matroid]:
    if family == "partition-partition":
        left, right = rng.randint(1, 4), rng.randint(1, 4)
        ends = [(rng.randrange(left), rng.randrange(right)) for _ in range(n)]
        m1 = PartitionMatroid(n, [[e for e in range(n) if ends[e][0] == a] for a in range(left)
                                  if any(x[0] == a for x in ends)],
                              [1] * len({x[0] for x in ends}))
        m2 = PartitionMatroid(n, [[e for e in range(n) if ends[e][1] == b] for b in range(right)
                                  if any(x[1] == b for x in ends)],
                              [1] * len({x[1] for x in ends}))
        return m1, m2
    if family == "graphic-partition":
        return _random_graphic(rng, n), _random_partition(rng, n)
    if family == "uniform-graphic":
        return UniformMatroid(n, rng.randint(1, max(1, n - 1))), _random_graphic(rng, n)
    if family == "linear-linear":
        return _random_linear(rng, n), _random_linear(rng, n)
    raise GenerationError(f"unknown matroid family {family!r}")


def generate_instance(kind: str = "matching", seed: int = 0, k: Optional[int] = None,
                      alpha_range: AlphaRange | str = "(1, 4]", max_vertices: int = 8,
                      max_edges: int = 12, max_ground: int = 9,
                      family: Optional[str] = None) -> Instance:
    """Reproducible random instance with dispersion in ``alpha_range``.

    ``k`` (number of weight levels) defaults to a random value in 2..4.
    Intersection instances draw their matroid pair from ``family`` or, if
    that is ``None``, uniformly from the built-in families.
    """
    if isinstance(alpha_range, str):
        alpha_range = AlphaRange.parse(alpha_range)
    if alpha_range.high != INFINITE and alpha_range.high <= 1:
        raise GenerationError("dispersion is always greater than 1")
    rng = random.Random(seed)
    size_cap = max_edges if kind == "matching" else max_ground
    if k is None:
        k = rng.randint(2, max(2, min(4, size_cap)))
    if k < 1 or k > size_cap:
        raise GenerationError(f"cannot place {k} weight levels on at most {size_cap} elements")
    levels = make_levels(rng, k, alpha_range)
    meta = {"k": k, "alpha_range": str(alpha_range)}
    if kind == "matching":
        n, edges = _random_matching_graph(rng, max_vertices, max_edges, k)
        ws = _assign(rng, len(edges), levels)
        graph = mx.WeightedGraph(n, tuple((u, v, w) for (u, v), w in zip(edges, ws)))
        return Instance("matching", graph.weights, graph=graph, seed=seed, metadata=meta)
    if kind == "intersection":
        family = family or rng.choice(INTERSECTION_FAMILIES)
        n = rng.randint(max(k, 2), max(k, 2, max_ground))
        m1, m2 = _random_matroid_pair(rng, family, n)
        meta["family"] = family
        return Instance("intersection", tuple(_assign(rng, n, levels)), matroids=(m1, m2),
                        seed=seed, metadata=meta)
    raise GenerationError(f"unknown instance kind {kind!r}")


def tightness_example(x) -> Instance:
    """Path ``0-2-1-3`` with weights ``1, x, 1``; lex-max weighs ``x``, optimum 2."""
    x = as_weight(x) if not isinstance(x, Fraction) else x
    if not 1 < x <= 2:
        raise InvalidParameter(f"x must lie in (1, 2], got {x}")
    graph = mx.WeightedGraph(4, ((0, 2, 1), (1, 2, x), (1, 3, 1)))
    return Instance("matching", graph.weights, graph=graph,
                    metadata={"family": "tightness", "x": format_rational(x)})


# verification ------------------------------------------------------------

def _fmt(v):
    if isinstance(v, (Fraction, int)) and not isinstance(v, bool) or v == INFINITE:
        return format_rational(v)
    if isinstance(v, frozenset):
        return sorted(v)
    return v


@dataclass
class VerificationReport:
    kind: str
    alpha: Any
    opt: Fraction
    lexopt_value: Fraction
    ratio: Fraction
    bound: Fraction
    regime: str
    passed: bool
    vice_versa_checked: bool = False
    vice_versa_witness: bool = False
    optimum_count: Optional[int] = None
    opt_solution: list = field(default_factory=list)
    lexopt_solution: list = field(default_factory=list)
    signature: list = field(default_factory=list)
    seed: Optional[int] = None
    counterexample: Optional[dict] = None
    notes: list = field(default_factory=list)

    _RATIONAL_FIELDS = ("alpha", "opt", "lexopt_value", "ratio", "bound")

    def to_dict(self) -> dict:
        d = asdict(self)
        for f in self._RATIONAL_FIELDS:
            d[f] = format_rational(d[f])
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        d = dict(d)
        for f in cls._RATIONAL_FIELDS:
            d[f] = parse_rational(d[f])
        return cls(**d)


def verify_bound(inst: Instance, vice_versa: bool = True) -> VerificationReport:
    """Check the dispersion theorem on one instance.

    Computes the optimum and the lex-maximal weight with the solvers. Within
    oracle bounds both are cross-checked by enumeration, and all optima are
    listed: for ``a > 2`` each must be lex-maximal, for ``a <= 2`` a non
    lex-maximal optimum is only recorded as a witness.
    """
    a = inst.alpha
    opt_set, opt = inst.solve_max_weight()
    lex_set, sig, lexopt = inst.solve_lex_max()
    ratio = lexopt / opt if opt else Fraction(1)
    regime = BOUND_REGIME if a <= 2 else EQUIVALENCE_REGIME
    bound = a / 2 * opt if regime == BOUND_REGIME else opt
    rep = VerificationReport(inst.kind, a, opt, lexopt, ratio, bound, regime, True,
                             opt_solution=sorted(opt_set), lexopt_solution=sorted(lex_set),
                             signature=list(sig), seed=inst.seed)

    def fail(reason, **extra):
        rep.passed = False
        rep.counterexample = {"reason": reason, **{k: _fmt(v) for k, v in extra.items()}}

    if regime == BOUND_REGIME and not lexopt >= bound:
        fail("lexopt below a/2 * opt", lexopt=lexopt, bound=bound)
    if regime == EQUIVALENCE_REGIME and lexopt != opt:
        fail("lexopt differs from opt although a > 2", lexopt=lexopt, opt=opt)
    if not (inst.is_feasible(opt_set) and inst.is_feasible(lex_set)):
        fail("solver returned an infeasible set", opt_set=opt_set, lex_set=lex_set)

    if inst.within_oracle():
        optima, bf_opt = inst.brute_force("max-weight", all_optima=True)
        _, bf_sig = inst.brute_force("lex-max")
        if bf_opt != opt:
            fail("solver optimum disagrees with enumeration", solver=opt, oracle=bf_opt)
        if tuple(bf_sig) != tuple(sig):
            fail("lex-max signature disagrees with enumeration",
                 solver=list(sig), oracle=list(bf_sig))
        rep.optimum_count = len(optima)
        if vice_versa:
            rep.vice_versa_checked = True
            classes = inst.classes if inst.weights else None
            for X in optima:
                if classes is not None and lex_signature(X, classes) != tuple(bf_sig):
                    rep.vice_versa_witness = True
                    if regime == EQUIVALENCE_REGIME:
                        fail("maximum-weight optimum is not lex-maximal although a > 2",
                             optimum=X, lex_max=lex_set)
                    else:
                        rep.notes.append(
                            f"vice-versa failure witnessed at alpha={format_rational(a)} "
                            f"(expected when alpha <= 2): optimum {sorted(X)} is not lex-maximal")
                    break
    else:
        rep.notes.append("beyond oracle bounds; solver values not cross-checked")
    return rep


# eligible chains ---------------------------------------------------------

def claim3_violations(m1: Matroid, m2: Matroid, weights, X, i, Yp) -> list[str]:
    """Check the four properties of the heavy-class augmentation ``Yp``."""
    classes = weight_classes(weights)
    head, _ = classes.split(X, i)
    problems = []
    if not Yp <= classes.prefix(i):
        problems.append("augmented set leaves the heavier classes")
    if not ix.is_common_independent(m1, m2, Yp):
        problems.append("augmented set is not common independent")
    sx, sy = lex_signature(head, classes), lex_signature(Yp, classes)
    if sy[:i - 1] != sx[:i - 1]:
        problems.append("heavier class counts changed")
    if sy[i - 1] != sx[i - 1] + 1:
        problems.append(f"class {i} did not gain exactly one element")
    for name, M in (("first", m1), ("second", m2)):
        if not M.span(head) <= M.span(Yp):
            problems.append(f"span in the {name} matroid shrank")
    return problems


@dataclass
class ChainStep:
    index: int
    before: list
    after: list
    removed: list
    weight_before: Fraction
    weight_after: Fraction
    loss_bound: Fraction
    violations: list
    inequality_ok: bool


@dataclass
class ChainReport:
    alpha: Any
    start: list
    end: list
    start_weight: Fraction
    end_weight: Fraction
    lexopt_value: Fraction
    steps: list
    nondecreasing: bool
    class_counts_ok: bool
    terminal_lex_maximal: bool
    telescoped_ok: bool
    claim3_checked: int = 0
    claim3_failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (self.nondecreasing and self.class_counts_ok and self.terminal_lex_maximal
                and self.telescoped_ok and not self.claim3_failures
                and self.end_weight == self.lexopt_value
                and all(s.inequality_ok and not s.violations for s in self.steps))

    def to_dict(self) -> dict:
        d = asdict(self)
        for key in ("alpha", "start_weight", "end_weight", "lexopt_value"):
            d[key] = format_rational(d[key])
        for s in d["steps"]:
            for key in ("weight_before", "weight_after", "loss_bound"):
                s[key] = format_rational(s[key])
        d["passed"] = self.passed
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "ChainReport":
        d = dict(d)
        d.pop("passed", None)
        for key in ("alpha", "start_weight", "end_weight", "lexopt_value"):
            d[key] = parse_rational(d[key])
        steps = []
        for s in d["steps"]:
            s = dict(s)
            for key in ("weight_before", "weight_after", "loss_bound"):
                s[key] = parse_rational(s[key])
            steps.append(ChainStep(**s))
        d["steps"] = steps
        return cls(**d)


def eligible_chain(inst: Instance, start=None, check_claim3: bool = True) -> ChainReport:
    """Walk eligible improvements from ``start`` until lex-maximal.

    ``start`` defaults to a maximum-weight solution. Each step is checked
    against the eligibility conditions and the per-step weight inequality;
    the whole chain against monotone indices, per-class step counts and the
    telescoped bound.
    """
    if start is None:
        if inst.within_oracle():
            start, _ = inst.brute_force("max-weight")
        else:
            start, _ = inst.solve_max_weight()
    X = frozenset(start)
    if not inst.is_feasible(X):
        raise InvalidSolution(f"start {sorted(X)} is infeasible")
    w = inst.weights
    a = inst.alpha
    classes = inst.classes if w else None
    _, _, lexopt = inst.solve_lex_max()
    steps = []
    claim3_checked, claim3_failures = 0, []
    cap = max(1, len(w) * (classes.k if classes else 1))
    while (i := inst.deficient_index(X)) is not None:
        if len(steps) >= cap:
            raise RuntimeError("eligible chain did not terminate")  # pragma: no cover
        if inst.kind == "intersection":
            rec = ix.eligible_step(*inst.matroids, w, X)
            Y = rec.after
            if check_claim3:
                claim3_checked += 1
                problems = claim3_violations(*inst.matroids, w, X, i, rec.augmented)
                if problems:
                    claim3_failures.append({"before": sorted(X), "index": i, "problems": problems})
        else:
            Y = inst.eligible(X)
        _, x_tail = classes.split(X, i)
        _, y_tail = classes.split(Y, i)
        problems = eligibility_violations(X, Y, i, classes)
        if not inst.is_feasible(Y):
            problems.append("result is infeasible")
        loss = step_loss_bound(a, classes.level(i))
        wx, wy = weight_of(X, w), weight_of(Y, w)
        steps.append(ChainStep(i, sorted(X), sorted(Y), sorted(x_tail - y_tail),
                               wx, wy, loss, problems, wy >= wx - loss))
        X = Y

    end_sig = lex_signature(X, classes) if classes else ()
    indices = [s.index for s in steps]
    per_class_ok = all(indices.count(i) <= end_sig[i - 1] for i in set(indices))
    start_w, end_w = weight_of(start, w), weight_of(X, w)
    if a != INFINITE and a <= 2:
        telescoped = end_w >= start_w - (2 - a) / a * end_w
    else:
        # with a > 2 every step strictly gains weight
        telescoped = all(s.weight_after > s.weight_before for s in steps)
    return ChainReport(a, sorted(start), sorted(X), start_w, end_w, lexopt, steps,
                       indices == sorted(indices), per_class_ok,
                       inst.deficient_index(X) is None, telescoped,
                       claim3_checked, claim3_failures)


def greedy_baseline(inst: Instance) -> tuple[frozenset, Fraction]:
    """Scan elements by decreasing weight (ties by index), keep what stays feasible."""
    chosen = frozenset()
    for e in sorted(range(inst.ground_size), key=lambda e: (-inst.weights[e], e)):
        if inst.is_feasible(chosen | {e}):
            chosen = chosen | {e}
    return chosen, weight_of(chosen, inst.weights)


# sweeps ------------------------------------------------------------------

ALPHA_BUCKETS = tuple(AlphaRange.parse(b) for b in
                      ("(1, 5/4]", "(5/4, 3/2]", "(3/2, 7/4]", "(7/4, 2]", "(2, inf)"))


def bucket_of(a) -> str:
    for b in ALPHA_BUCKETS:
        if a in b or (a == INFINITE and b.high == INFINITE):
            return str(b)
    raise ValueError(f"alpha {a} outside every bucket")  # pragma: no cover


def derive_seed(seed: int, batch: str, index: int) -> int:
    digest = hashlib.sha256(f"{seed}:{batch}:{index}".encode()).digest()
    return int.from_bytes(digest[:4], "big")


def _batch_instances(batch: dict, seed: int):
    name = batch.get("name", batch.get("kind", "batch"))
    for j in range(int(batch.get("count", 0))):
        s = derive_seed(seed, name, j)
        yield generate_instance(
            kind=batch.get("kind", "matching"), seed=s, k=batch.get("k"),
            alpha_range=batch.get("alpha", "(1, 4]"),
            max_vertices=batch.get("max_vertices", 8), max_edges=batch.get("max_edges", 12),
            max_ground=batch.get("max_ground", 9), family=batch.get("family"))


def sweep(config: dict) -> dict:
    """Run bound verification (and optionally eligible chains) over a seeded batch.

    ``config`` holds ``seed``, a list of ``batches`` (each with ``kind``,
    ``count``, ``alpha`` interval, optional ``k``, ``family``, ``chain``) and
    an optional ``tightness`` list of ``x`` values. The report aggregates
    pass counts and the minimum observed ``lexopt / opt`` per dispersion
    bucket; every rational is a ``"num/den"`` string.
    """
    seed = int(config.get("seed", 0))
    buckets: dict[str, dict] = {}
    batches_out, failures = [], []
    total = passed = 0

    def record(inst, rep, chain, batch_name):
        nonlocal total, passed
        total += 1
        ok = rep.passed and (chain is None or chain.passed)
        passed += ok
        b = buckets.setdefault(bucket_of(rep.alpha), {
            "count": 0, "min_ratio": None, "min_alpha": None, "equal": 0, "min_ratio_ok": True})
        b["count"] += 1
        b["equal"] += rep.lexopt_value == rep.opt
        if b["min_ratio"] is None or rep.ratio < b["min_ratio"]:
            b["min_ratio"] = rep.ratio
        if b["min_alpha"] is None or rep.alpha < b["min_alpha"]:
            b["min_alpha"] = rep.alpha
        if not ok:
            entry = {"batch": batch_name, "seed": inst.seed, "report": rep.to_dict()}
            if chain is not None:
                entry["chain"] = chain.to_dict()
            failures.append(entry)
        return ok

    for batch in config.get("batches", []):
        name = batch.get("name", batch.get("kind", "batch"))
        count_ok = count = 0
        for inst in _batch_instances(batch, seed):
            rep = verify_bound(inst, vice_versa=batch.get("vice_versa", True))
            chain = eligible_chain(inst) if batch.get("chain", False) else None
            count += 1
            count_ok += record(inst, rep, chain, name)
        batches_out.append({"name": name, "count": count, "passed": count_ok})

    tight = []
    for x in config.get("tightness", []):
        inst = tightness_example(parse_rational(x) if isinstance(x, str) else Fraction(x))
        rep = verify_bound(inst)
        record(inst, rep, None, "tightness")
        tight.append({"x": format_rational(inst.weights[1]), "opt": format_rational(rep.opt),
                      "lexopt": format_rational(rep.lexopt_value),
                      "ratio": format_rational(rep.ratio),
                      "exact": rep.ratio == inst.weights[1] / 2 and rep.passed})

    table = {}
    order = [str(b) for b in ALPHA_BUCKETS]
    for key in sorted(buckets, key=order.index):
        b = buckets[key]
        b["min_ratio_ok"] = b["min_ratio"] >= Fraction(min(b["min_alpha"], 2)) / 2
        table[key] = {"count": b["count"], "lexopt_equals_opt": b["equal"],
                      "min_ratio": format_rational(b["min_ratio"]),
                      "min_alpha": format_rational(b["min_alpha"]),
                      "min_ratio_ok": b["min_ratio_ok"]}
    all_ok = passed == total and all(t["exact"] for t in tight) and all(
        b["min_ratio_ok"] for b in table.values())
    return {"seed": seed, "total": total, "passed_count": passed, "passed": all_ok,
            "batches": batches_out, "buckets": table, "tightness": tight,
            "failures": failures}
