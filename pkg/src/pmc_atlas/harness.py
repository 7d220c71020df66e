"""Experiments: build an instance, enumerate its PMCs, assert its structural properties.

Every checker returns a list of human-readable violations; an empty list
means the property held.
"""
from __future__ import annotations

import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable

from .bounds import BoundReport, bound_report, free_bound_terms, lower_bound_sum, stirling2
from .constructions import (
    DEFAULT_M_CAP,
    MGraph,
    build_Gk,
    build_M,
    build_star,
    constructed_free_pmcs,
    random_graph_with_cover,
)
from .cover import (
    PartitionType,
    VertexCover,
    cover_partition,
    minimum_vertex_cover,
    parse_cover,
)
from .errors import BudgetError, InputError, InvariantViolation
from .graph import Graph, closed_neighborhood, induced_subgraph
from .io import read_graph
from .pmc import PmcRecord, count_pmcs, enumerate_pmcs, summarize
from .vertexset import VertexSet, iter_members, members

EDGE_PROBS = ("0.2", "0.35", "0.5", "0.65", "0.8")


@dataclass
class Instance:
    descriptor: str
    graph: Graph
    cover: VertexCover | None = None
    m_graph: MGraph | None = None
    gk: int | None = None


def parse_family(spec: str, m_cap: int = DEFAULT_M_CAP) -> Instance:
    """Build the graph named by ``star:<n>``, ``gk:<k>``, ``m:<file>:<cover>`` or
    ``random:<k>:<n>:<p>:<seed>``.

    The ``<cover>`` of an ``m`` family is a comma list or ``min``.
    """
    kind, _, rest = spec.partition(":")
    try:
        if kind == "star":
            return Instance(spec, build_star(int(rest)))
        if kind == "gk":
            gk = build_Gk(int(rest))
            return Instance(spec, gk.graph, gk.cover, gk=gk.k)
        if kind == "m":
            path, _, cover_spec = rest.rpartition(":")
            if not path:
                raise InputError("m family needs m:<graph-file>:<cover-spec>")
            base = read_graph(path)
            vk = minimum_vertex_cover(base) if cover_spec == "min" else parse_cover(cover_spec, base)
            mg = build_M(base, vk, cap=m_cap)
            return Instance(spec, mg.graph, mg.cover, m_graph=mg)
        if kind == "random":
            k, n, p, seed = rest.split(":")
            g, _ = random_graph_with_cover(int(k), int(n), Fraction(p), int(seed))
            return Instance(spec, g)
    except (ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"bad family spec {spec!r}: {exc}") from None
    raise InputError(f"unknown family {kind!r} (expected star, gk, m or random)")


def check_nonfree_structure(g: Graph, records: list[PmcRecord]) -> list[str]:
    """Each non-free PMC is the closed neighborhood of its recorded center, and there are at most n."""
    out = []
    nonfree = 0
    for r in records:
        if r.free:
            continue
        nonfree += 1
        if r.nonfree_center is None or closed_neighborhood(g, r.nonfree_center) != r.omega:
            out.append(f"non-free PMC {members(r.omega)} is not N[{r.nonfree_center}]")
    if nonfree > g.n:
        out.append(f"{nonfree} non-free PMCs exceed n={g.n}")
    return out


def check_upper_bound(report: BoundReport) -> list[str]:
    if report.within_upper is False:
        return [f"{report.observed_total} PMCs exceed 4^{report.k} + {report.n} = {report.upper_total}"]
    return []


def check_monotone(g: Graph, x: VertexSet, total: int, limit: int | None = None) -> list[str]:
    sub, _ = induced_subgraph(g, x)
    sub_total = count_pmcs(sub, limit).total
    if sub_total > total:
        return [f"induced subgraph on {members(x)} has {sub_total} PMCs, more than {total}"]
    return []


_FREE_CAPS: dict[PartitionType, Callable[[int], int]] = {
    PartitionType.INNER_P1: lambda k: k,
    PartitionType.INNER_P1_P2: lambda k: 2 * k,
    PartitionType.INNER_P1_P2_P3: lambda k: 1,
    PartitionType.P1_P2_P3: lambda k: 1,
    PartitionType.INNER: lambda k: 0,
    PartitionType.P1: lambda k: 0,
    PartitionType.P1_P2: lambda k: 0,
    PartitionType.EMPTY: lambda k: 0,
}


def check_m_graph(mg: MGraph, records: list[PmcRecord]) -> list[str]:
    """Structural properties of the PMCs of an extended graph.

    Checks at most three cover parts, that no PMC holds an outer vertex whose
    (non-empty) neighborhood sits inside one part, the per-partition caps on
    free PMCs, and the per-shape totals against the free-PMC bound terms.
    """
    g, vk, k = mg.graph, mg.cover, mg.k
    out = []
    outer = mg.outer()
    groups: dict = {}
    for r in records:
        try:
            part = cover_partition(g, vk, r.omega, m_graph=True, check=False)
        except InvariantViolation as exc:
            out.append(str(exc))
            continue
        for v in iter_members(r.omega & outer):
            nb = g.adj[v]
            if nb and any(nb & ~p == 0 for p in part.parts):
                out.append(f"PMC {members(r.omega)} contains outer vertex {g.label(v)} inside one part")
        if r.free:
            groups.setdefault(part, []).append(r.omega)
    by_type: dict[PartitionType, int] = {}
    for part, omegas in groups.items():
        cap = _FREE_CAPS[part.type_tag](k)
        by_type[part.type_tag] = by_type.get(part.type_tag, 0) + len(omegas)
        if len(omegas) > cap:
            out.append(
                f"{len(omegas)} free PMCs share partition {part.type_tag.value} "
                f"inner={members(part.inner_in_omega)} parts={[members(p) for p in part.parts]}; cap {cap}"
            )
    terms = free_bound_terms(k)
    totals = {
        PartitionType.P1_P2_P3: terms.three_parts,
        PartitionType.INNER_P1: terms.inner_one_part,
        PartitionType.INNER_P1_P2: terms.inner_two_parts,
        PartitionType.INNER_P1_P2_P3: terms.inner_three_parts,
    }
    for tag, cap in totals.items():
        if by_type.get(tag, 0) > cap:
            out.append(f"{by_type[tag]} free PMCs of shape {tag.value} exceed {cap}")
    return out


def check_gk(k: int, records: list[PmcRecord]) -> list[str]:
    """Lower-bound sum, and every constructed free PMC class present in the enumeration."""
    out = []
    if len(records) < lower_bound_sum(k):
        out.append(f"G_{k} has {len(records)} PMCs, below the lower sum {lower_bound_sum(k)}")
    free = {r.omega for r in records if r.free}
    ints = (1 << k) - 1
    for i in range(k + 1):
        observed = sum(1 for w in free if w & ints == (1 << i) - 1)
        built = constructed_free_pmcs(k, i)
        missing = [w for w in built if w not in free]
        if missing:
            out.append(f"{len(missing)} constructed free PMCs with integers 1..{i} not enumerated")
        if observed < stirling2(k - i, 3):
            out.append(f"only {observed} free PMCs meet the integers in 1..{i}; expected >= {stirling2(k - i, 3)}")
    return out


@dataclass
class ExperimentResult:
    descriptor: str
    n: int
    m: int
    k: int | None
    cover: list[int] | None
    report: BoundReport | None
    assertions: dict[str, bool] = field(default_factory=dict)
    violations: list[str] = field(default_factory=list)
    seconds: float = 0.0
    seed: int | None = None

    @property
    def passed(self) -> bool:
        return all(self.assertions.values())

    def as_dict(self, timing: bool = True) -> dict:
        d = asdict(self)
        d["report"] = None if self.report is None else self.report.as_dict()
        d["passed"] = self.passed
        if not timing:
            del d["seconds"]
        return d


def choose_cover(inst: Instance, cover: str | None) -> VertexCover:
    if cover is not None:
        return parse_cover(cover, inst.graph)
    if inst.cover is not None:
        return inst.cover
    return minimum_vertex_cover(inst.graph)


def verify_instance(
    inst: Instance,
    cover: str | None = None,
    with_m: bool = False,
    subset: VertexSet | None = None,
    limit: int | None = None,
    jobs: int = 1,
    seed: int | None = None,
) -> ExperimentResult:
    """Enumerate ``inst`` and run every applicable assertion."""
    start = time.perf_counter()
    g = inst.graph
    vk = choose_cover(inst, cover)
    records = enumerate_pmcs(g, limit, jobs)
    counts = summarize(records)
    result = ExperimentResult(
        inst.descriptor, g.n, g.m, vk.k, vk.members(), None, seed=seed,
    )

    def record(name: str, violations: list[str]) -> None:
        result.assertions[name] = not violations
        result.violations += violations

    record("nonfree_are_closed_neighborhoods", check_nonfree_structure(g, records))
    if g.m == 0:
        # edgeless: counts only, no theorem assertions
        result.report = bound_report(0, g.n, counts)
    else:
        result.report = bound_report(vk.k, g.n, counts)
        record("upper_bound", check_upper_bound(result.report))
    if inst.gk is not None:
        record("gk_lower_bound", check_gk(inst.gk, records))
    if inst.m_graph is not None:
        record("m_graph_structure", check_m_graph(inst.m_graph, records))
    if with_m and inst.m_graph is None:
        mg = build_M(g, vk)
        record("m_graph_structure", check_m_graph(mg, enumerate_pmcs(mg.graph, limit, jobs)))
    if subset is not None:
        record("induced_subgraph_monotone", check_monotone(g, subset, counts.total, limit))
    result.seconds = time.perf_counter() - start
    return result


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        a, b = int(lo), int(hi) if sep else int(lo)
    except ValueError:
        raise InputError(f"bad range {text!r}; use LO..HI") from None
    if a > b or a < 0:
        raise InputError(f"bad range {text!r}")
    return a, b


def _fuzz_trial(t: int, seed: int, k_range, n_range, with_m: bool, limit: int | None) -> dict:
    rng = random.Random(f"{seed}:{t}")
    k = rng.randint(*k_range)
    n = rng.randint(max(n_range[0], k), max(n_range[1], k))
    p = rng.choice(EDGE_PROBS)
    inst_seed = rng.randrange(2**31)
    descriptor = f"random:{k}:{n}:{p}:{inst_seed}"
    g, _ = random_graph_with_cover(k, n, Fraction(p), inst_seed)
    subset = rng.getrandbits(n) if n else 0
    try:
        result = verify_instance(Instance(descriptor, g), with_m=with_m, subset=subset, limit=limit)
    except BudgetError as exc:
        return {"trial": t, "descriptor": descriptor, "status": "skip", "reason": str(exc)}
    entry = {"trial": t, "descriptor": descriptor, "status": "pass" if result.passed else "fail"}
    if not result.passed:
        repro = f"pmc-atlas verify-bounds --family {descriptor} --subset {','.join(map(str, members(subset)))}"
        if with_m:
            repro += " --with-m"
        entry["violations"] = result.violations
        entry["reproduce"] = repro
    return entry


def fuzz(
    k_range: str | tuple[int, int],
    n_range: str | tuple[int, int],
    trials: int,
    seed: int,
    with_m: bool = False,
    limit: int | None = None,
    jobs: int = 1,
) -> dict:
    """Run seeded random instances; the summary depends only on the arguments."""
    if isinstance(k_range, str):
        k_range = _parse_range(k_range)
    if isinstance(n_range, str):
        n_range = _parse_range(n_range)
    if trials < 0:
        raise InputError("trials must be non-negative")

    def run(t):
        return _fuzz_trial(t, seed, k_range, n_range, with_m, limit)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            entries = list(pool.map(run, range(trials)))
    else:
        entries = [run(t) for t in range(trials)]
    tally = {s: sum(e["status"] == s for e in entries) for s in ("pass", "fail", "skip")}
    return {
        "seed": seed,
        "trials": trials,
        "k_range": list(k_range),
        "n_range": list(n_range),
        "with_m": with_m,
        "passed": tally["pass"],
        "failed": tally["fail"],
        "skipped": tally["skip"],
        "failures": [e for e in entries if e["status"] == "fail"],
        "skips": [e for e in entries if e["status"] == "skip"],
    }
