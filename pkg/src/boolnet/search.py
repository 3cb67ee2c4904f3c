"""Exhaustive and sampled sweeps over network space: census and the hunt for a
fixed-point-free network without local negative circuits."""
from __future__ import annotations

import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Iterator, Sequence

import numpy as np

from . import tables
from .circuits import enumerate_circuits, first_negative_circuit, has_negative_circuit
from .core import MAX_N, BooleanNetwork, UsageError, permute_coordinates
from .dynamics import fixed_points, has_property_P, opposition_pairs
from .jacobian import local_graph
from .tables import FEATURES, network_count, network_from_index, network_index

log = logging.getLogger(__name__)

MAX_EXHAUSTIVE_N = 3
SAMPLE_BLOCK = 4096
LISTED_LIMIT = 100

# theorem id -> (hypothesis feature conjunction, conclusion feature)
THEOREM_FEATURES = {
    "1": (("acyclic",), "unique_fixed_point"),
    "2": (("no_positive_circuit",), "at_most_one_fixed_point"),
    "3": (("no_negative_circuit", "property_p"), "has_fixed_point"),
    "4": (("no_negative_circuit", "positive_through_vertex"), "has_fixed_point"),
    "lemma2": (("property_p", "opposition"), "shared_negative_circuit"),
    "lemma3": (("property_p", "no_shared_negative_circuit"), "has_fixed_point"),
}

DEFAULT_FILTERS = ("no_negative_circuit", "no_fixed_point")


@dataclass(frozen=True)
class SearchScope:
    n: int
    mode: str = "exhaustive"
    samples: int | None = None
    seed: int | None = None
    filters: tuple[str, ...] = DEFAULT_FILTERS

    def __post_init__(self) -> None:
        object.__setattr__(self, "filters", tuple(self.filters))
        if not 1 <= self.n <= MAX_N:
            raise UsageError(f"n must lie in 1..{MAX_N}")
        if self.mode == "exhaustive":
            if self.n > MAX_EXHAUSTIVE_N:
                raise UsageError(
                    f"exhaustive mode supports n <= {MAX_EXHAUSTIVE_N} "
                    f"({network_count(self.n)} networks at n={self.n}); use random mode"
                )
        elif self.mode == "random":
            if self.samples is None or self.samples < 1 or self.seed is None:
                raise UsageError("random mode needs samples >= 1 and a seed")
        else:
            raise UsageError(f"unknown mode {self.mode!r}")
        for name in self.filters:
            if name not in FILTER_NAMES:
                raise UsageError(f"unknown filter {name!r}; known: {', '.join(FILTER_NAMES)}")

    @property
    def size(self) -> int:
        return network_count(self.n) if self.mode == "exhaustive" else self.samples


FILTER_NAMES = FEATURES + ("no_shared_negative_circuit", "question1")


@dataclass
class CensusReport:
    scope: SearchScope
    total: int = 0
    filter_counts: list[tuple[str, int]] = field(default_factory=list)
    counts: dict[str, int] = field(default_factory=dict)
    theorems: dict[str, dict[str, int]] = field(default_factory=dict)
    counterexamples: list[BooleanNetwork] = field(default_factory=list)
    inconsistent: list[tuple[str, BooleanNetwork]] = field(default_factory=list)

    @property
    def failures(self) -> int:
        return sum(t["failures"] for t in self.theorems.values())


# ---------------------------------------------------------------- streams


def enumerate_networks(n: int) -> Iterator[BooleanNetwork]:
    """Every network of dimension n, ordered by concatenated truth-table rows."""
    if n > MAX_EXHAUSTIVE_N:
        raise UsageError(
            f"cannot enumerate {network_count(n)} networks at n={n}; use sample_networks (random mode)"
        )
    for k in range(network_count(n)):
        yield network_from_index(n, k)


def sample_rows(n: int, count: int, seed: int) -> Iterator[np.ndarray]:
    """Blocks of uniformly random truth tables, shape (block, 2^n).

    Blocks are drawn at a fixed size from one generator, so a longer run
    with the same seed extends a shorter one.
    """
    if not 1 <= n <= MAX_N:
        raise UsageError(f"n must lie in 1..{MAX_N}")
    if count < 1:
        raise UsageError("count must be >= 1")
    rng = np.random.default_rng(seed)
    left = count
    while left > 0:
        block = rng.integers(0, 1 << n, size=(SAMPLE_BLOCK, 1 << n), dtype=np.int64)
        yield block[: min(left, SAMPLE_BLOCK)]
        left -= SAMPLE_BLOCK


def sample_networks(n: int, count: int, seed: int) -> Iterator[BooleanNetwork]:
    for block in sample_rows(n, count, seed):
        for row in block:
            yield BooleanNetwork(n, tuple(row.tolist()))


def _p_preserving_move(table: list[int], n: int, rng: np.random.Generator) -> None:
    """Rewrite one row to a value within distance 1 of every neighbour's image."""
    k = int(rng.integers(1 << n))
    images = [table[k ^ (1 << b)] for b in range(n)]
    ok = [v for v in range(1 << n) if all((v ^ w).bit_count() <= 1 for w in images)]
    table[k] = ok[int(rng.integers(len(ok)))]


def sample_property_p_networks(n: int, count: int, seed: int, *, thin: int = 4) -> Iterator[BooleanNetwork]:
    """Random walk over networks with the out-degree property.

    Uniform truth tables almost never have the property once n >= 3, so the
    walk starts from a negative feedback ring (x_n negated into x_1, x_k into
    x_{k+1}) and applies single-row moves that keep the property.
    """
    rng = np.random.default_rng(seed)
    table = [_ring_row(k, n) for k in range(1 << n)]
    for _ in range(count):
        for _ in range(thin):
            _p_preserving_move(table, n, rng)
        yield BooleanNetwork(n, tuple(table))


def conjugate(F: BooleanNetwork, perm: Sequence[int], mask: int) -> BooleanNetwork:
    """Image of F under the hypercube isometry x -> permute(x) xor mask.

    Isometries preserve Hamming distance, so they carry the out-degree
    property, oppositions and antipodality over to the image.
    """
    G = permute_coordinates(F, perm)
    return BooleanNetwork(F.n, tuple(G.table[k ^ mask] ^ mask for k in range(1 << F.n)))


def sample_opposition_networks(n: int, count: int, seed: int) -> Iterator[BooleanNetwork]:
    """Random networks with the out-degree property, a pair in opposition, and
    only antipodal such pairs.

    These are drawn as random isometric images of the negative feedback ring;
    at n <= 3 that orbit is the whole class, and walks that keep the
    out-degree property were never seen to leave it at n = 4, 5.
    """
    rng = np.random.default_rng(seed)
    ring = BooleanNetwork(n, tuple(_ring_row(k, n) for k in range(1 << n)))
    for _ in range(count):
        perm = [int(v) + 1 for v in rng.permutation(n)]
        yield conjugate(ring, perm, int(rng.integers(1 << n)))


def _ring_row(k: int, n: int) -> int:
    last = k & 1
    return ((k >> 1) | ((1 - last) << (n - 1))) & ((1 << n) - 1)


# ---------------------------------------------------------------- features


def network_features(F: BooleanNetwork) -> dict[str, bool]:
    """Library-path evaluation of every FEATURES entry for one network."""
    n = F.n
    nfp = len(fixed_points(F))
    graphs = [local_graph(F, x) for x in F.states()]
    circuits = [enumerate_circuits(G) for G in graphs]
    negative_sets = [{c.vertices for c in cs if c.sign < 0} for cs in circuits]
    seen: set[tuple[int, ...]] = set()
    shared = False
    for s in negative_sets:
        if seen & s:
            shared = True
            break
        seen |= s
    opp = opposition_pairs(F)
    return {
        "property_p": has_property_P(F, "neighbor"),
        "no_negative_circuit": not any(has_negative_circuit(G) for G in graphs),
        "no_positive_circuit": not any(c.sign > 0 for cs in circuits for c in cs),
        "acyclic": not any(circuits),
        "has_fixed_point": nfp >= 1,
        "no_fixed_point": nfp == 0,
        "unique_fixed_point": nfp == 1,
        "at_most_one_fixed_point": nfp <= 1,
        "opposition": bool(opp),
        "hypothesis_h": all(p.x.index ^ p.y.index == (1 << n) - 1 for p in opp),
        "shared_negative_circuit": shared,
        "positive_through_vertex": any(
            all(i in c.vertices for cs in circuits for c in cs if c.sign > 0) for i in range(1, n + 1)
        ),
    }


def _with_derived(feats: dict) -> dict:
    feats = dict(feats)
    feats["no_shared_negative_circuit"] = ~np.asarray(feats["shared_negative_circuit"])
    feats["question1"] = np.asarray(feats["no_negative_circuit"]) & np.asarray(feats["no_fixed_point"])
    return feats


# ---------------------------------------------------------------- tally


def _tally(scope: SearchScope, feats: dict, indices: np.ndarray) -> dict:
    """Partial census over one block; ``indices`` identify networks for listing."""
    feats = {k: np.asarray(v, dtype=bool) for k, v in _with_derived(feats).items()}
    part = {"total": int(len(indices)), "counts": {}, "filters": [], "theorems": {},
            "question1": [], "inconsistent": []}
    for name in FILTER_NAMES:
        part["counts"][name] = int(feats[name].sum())
    chain = np.ones(len(indices), dtype=bool)
    for name in scope.filters:
        chain &= feats[name]
        part["filters"].append(int(chain.sum()))
    for tid, (hyp_names, concl_name) in THEOREM_FEATURES.items():
        hyp = np.ones(len(indices), dtype=bool)
        for h in hyp_names:
            hyp &= feats[h]
        concl = feats[concl_name]
        bad = hyp & ~concl
        part["theorems"][tid] = {
            "hypothesis": int(hyp.sum()),
            "conclusion": int(concl.sum()),
            "both": int((hyp & concl).sum()),
            "failures": int(bad.sum()),
        }
        part["inconsistent"] += [[tid, int(k)] for k in indices[bad][:LISTED_LIMIT]]
    part["question1"] = [int(k) for k in indices[feats["question1"]][:LISTED_LIMIT]]
    return part


def _merge(parts: list[dict]) -> dict:
    out = {"total": 0, "counts": {}, "filters": [], "theorems": {}, "question1": [], "inconsistent": []}
    for p in parts:
        out["total"] += p["total"]
        for k, v in p["counts"].items():
            out["counts"][k] = out["counts"].get(k, 0) + v
        if not out["filters"]:
            out["filters"] = [0] * len(p["filters"])
        out["filters"] = [a + b for a, b in zip(out["filters"], p["filters"])]
        for tid, t in p["theorems"].items():
            acc = out["theorems"].setdefault(tid, dict.fromkeys(t, 0))
            for k, v in t.items():
                acc[k] += v
        out["question1"] += p["question1"]
        out["inconsistent"] += p["inconsistent"]
    return out


# ---------------------------------------------------------------- shards


def shard_count(n: int, prefix_rows: int) -> int:
    if not 0 <= prefix_rows <= 1 << n:
        raise UsageError(f"prefix_rows must lie in 0..{1 << n}")
    return 1 << (n * prefix_rows)


def shard_range(n: int, prefix_rows: int, shard: int) -> tuple[int, int]:
    """Index range of networks whose first ``prefix_rows`` rows spell ``shard``."""
    width = n * ((1 << n) - prefix_rows)
    return shard << width, (shard + 1) << width


def default_prefix_rows(n: int) -> int:
    return {1: 0, 2: 1, 3: 2}.get(n, 0)


CHUNK = 1 << 16


def _census_shard(scope: SearchScope, prefix_rows: int, shard: int) -> dict:
    lo, hi = shard_range(scope.n, prefix_rows, shard)
    parts = []
    for start in range(lo, hi, CHUNK):
        idx = np.arange(start, min(hi, start + CHUNK), dtype=np.int64)
        R = tables.rows_from_indices(scope.n, idx)
        parts.append(_tally(scope, tables.features_from_rows(scope.n, R), idx))
    return _merge(parts)


def _load_checkpoint(path: Path, scope: SearchScope, prefix_rows: int) -> dict[int, dict]:
    if not path.exists():
        return {}
    doc = json.loads(path.read_text())
    # compare through JSON so tuples and lists match
    if doc.get("scope") != json.loads(json.dumps(asdict(scope))) or doc.get("prefix_rows") != prefix_rows:
        raise UsageError(f"checkpoint {path} belongs to a different scope")
    return {int(k): v for k, v in doc["completed"].items()}


def _save_checkpoint(path: Path, scope: SearchScope, prefix_rows: int, done: dict[int, dict]) -> None:
    doc = {"scope": asdict(scope), "prefix_rows": prefix_rows,
           "completed": {str(k): v for k, v in sorted(done.items())}}
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text(json.dumps(doc))
    os.replace(tmp, path)


def _warm(n: int) -> None:
    tables.graph_class_table(n)
    tables.in_code_table(n)


def run_shards(
    scope: SearchScope,
    *,
    workers: int = 1,
    prefix_rows: int | None = None,
    shards: list[int] | None = None,
    checkpoint: str | Path | None = None,
) -> dict:
    """Exhaustive census over the given shards (all by default), merged."""
    if prefix_rows is None:
        prefix_rows = default_prefix_rows(scope.n)
    total = shard_count(scope.n, prefix_rows)
    todo = list(range(total)) if shards is None else sorted(set(shards))
    for s in todo:
        if not 0 <= s < total:
            raise UsageError(f"shard {s} out of range 0..{total - 1}")
    path = Path(checkpoint) if checkpoint else None
    done = _load_checkpoint(path, scope, prefix_rows) if path else {}
    pending = [s for s in todo if s not in done]
    log.info("census n=%d: %d shards, %d already complete", scope.n, len(todo), len(todo) - len(pending))

    def record(s: int, part: dict) -> None:
        done[s] = part
        if path:
            _save_checkpoint(path, scope, prefix_rows, done)

    if workers > 1 and len(pending) > 1:
        with ProcessPoolExecutor(workers, initializer=_warm, initargs=(scope.n,)) as pool:
            futures = {s: pool.submit(_census_shard, scope, prefix_rows, s) for s in pending}
            for s, fut in futures.items():
                record(s, fut.result())
    else:
        for s in pending:
            record(s, _census_shard(scope, prefix_rows, s))
    return _merge([done[s] for s in todo])


def _random_parts(scope: SearchScope) -> Iterator[dict]:
    offset = 0
    for block in sample_rows(scope.n, scope.samples, scope.seed):
        idx = np.arange(offset, offset + len(block), dtype=np.int64)
        offset += len(block)
        if scope.n <= tables.MAX_TABLE_N:
            feats = tables.features_from_rows(scope.n, block)
        else:
            rows = [network_features(BooleanNetwork(scope.n, tuple(r.tolist()))) for r in block]
            feats = {k: np.array([r[k] for r in rows], dtype=bool) for k in FEATURES}
        part = _tally(scope, feats, idx)
        # listed entries are sample positions; swap in the sampled table
        part["question1"] = [block[k - idx[0]].tolist() for k in part["question1"]]
        part["inconsistent"] = [[t, block[k - idx[0]].tolist()] for t, k in part["inconsistent"]]
        yield part


def census(
    scope: SearchScope,
    *,
    workers: int = 1,
    prefix_rows: int | None = None,
    checkpoint: str | Path | None = None,
) -> CensusReport:
    if scope.mode == "exhaustive":
        merged = run_shards(scope, workers=workers, prefix_rows=prefix_rows, checkpoint=checkpoint)
        as_net = lambda k: network_from_index(scope.n, k)  # noqa: E731
    else:
        merged = _merge(list(_random_parts(scope)))
        as_net = lambda rows: BooleanNetwork(scope.n, tuple(rows))  # noqa: E731
    return CensusReport(
        scope=scope,
        total=merged["total"],
        filter_counts=list(zip(scope.filters, merged["filters"])),
        counts=merged["counts"],
        theorems=merged["theorems"],
        counterexamples=[as_net(k) for k in merged["question1"][:LISTED_LIMIT]],
        inconsistent=[(t, as_net(k)) for t, k in merged["inconsistent"][:LISTED_LIMIT]],
    )


def select_networks(scope: SearchScope) -> Iterator[BooleanNetwork]:
    """Networks of an exhaustive scope passing every filter, in scope order."""
    if scope.mode != "exhaustive":
        raise UsageError("select_networks walks exhaustive scopes only")
    for start in range(0, network_count(scope.n), CHUNK):
        idx = np.arange(start, min(network_count(scope.n), start + CHUNK), dtype=np.int64)
        feats = _with_derived(tables.features_from_rows(scope.n, tables.rows_from_indices(scope.n, idx)))
        keep = np.ones(len(idx), dtype=bool)
        for name in scope.filters:
            keep &= feats[name]
        for k in idx[keep]:
            yield network_from_index(scope.n, int(k))


# ---------------------------------------------------------------- hunt


def _confirm_question1(F: BooleanNetwork) -> bool:
    """Enumeration-based recheck of a fast-path hit."""
    return not fixed_points(F) and all(first_negative_circuit(local_graph(F, x)) is None for x in F.states())


def is_question1_counterexample(F: BooleanNetwork) -> bool:
    if fixed_points(F):
        return False
    return not any(has_negative_circuit(local_graph(F, x)) for x in F.states())


def hunt_question1(scope: SearchScope) -> BooleanNetwork | None:
    """First network in scope order with no local negative circuit and no fixed point."""
    if scope.mode == "exhaustive":
        total = network_count(scope.n)
        for start in range(0, total, CHUNK):
            idx = np.arange(start, min(total, start + CHUNK), dtype=np.int64)
            hits = np.flatnonzero(tables.question1_mask(scope.n, tables.rows_from_indices(scope.n, idx)))
            for k in hits:
                F = network_from_index(scope.n, int(idx[k]))
                if _confirm_question1(F):
                    return F
                log.error("fast path reported %s but enumeration disagrees", F.table)
        return None
    for F in sample_networks(scope.n, scope.samples, scope.seed):
        if is_question1_counterexample(F) and _confirm_question1(F):
            return F
    return None
