"""Independent brute-force ground truth.

Enumerates every structure-constant table of a tiny algebra over GF(2) or
GF(3), filters by predicates, and groups the survivors into isomorphism
classes.  This is deliberately the dumbest possible computation: its only
job is to agree with the clever pipeline (central extensions + orbits).

The scan is chunked (default 2**20 tables) so long runs can checkpoint and
resume, and chunks can be fanned out to threads; the compiled backend
releases the GIL inside a chunk.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field

from . import core
from .algebra import Algebra
from .fields import GF, PrimeField

PREDICATES = ("bicommutative", "nilpotent", "one_generated")
TABLE_BOUND = 2**30
CHUNK = 2**20


@dataclass(frozen=True)
class EnumerationTask:
    field: PrimeField
    dim: int
    predicates: frozenset = frozenset(PREDICATES)

    def __post_init__(self):
        if self.field.p not in (2, 3):
            raise ValueError("full enumeration is limited to GF(2) and GF(3)")
        if self.dim < 0 or self.dim > 3:
            raise ValueError("full enumeration is limited to dimension <= 3")
        unknown = set(self.predicates) - set(PREDICATES)
        if unknown:
            raise ValueError(f"unknown predicates: {sorted(unknown)}")
        if self.total_tables() > TABLE_BOUND:
            raise ValueError("candidate count exceeds the enumeration bound")

    def total_tables(self) -> int:
        return self.field.p ** (self.dim**3)

    def flags(self):
        return (
            "bicommutative" in self.predicates,
            "nilpotent" in self.predicates,
            "one_generated" in self.predicates,
        )

    def key(self):
        return {
            "p": self.field.p,
            "dim": self.dim,
            "predicates": sorted(self.predicates),
        }


def scan_survivors(task: EnumerationTask, threads: int = 1, chunk: int = CHUNK,
                   checkpoint=None, progress=None):
    """Table indices satisfying the predicates, ascending.

    `checkpoint` may name a JSON file; an interrupted scan resumes from it
    when the task matches.  `progress(done, total)` is called after each
    chunk.
    """
    total = task.total_tables()
    bic, nil, gen = task.flags()
    survivors = []
    start = 0
    if checkpoint and os.path.exists(checkpoint):
        with open(checkpoint) as fh:
            state = json.load(fh)
        if state.get("task") == task.key() and not state.get("done"):
            start = state["next"]
            survivors = list(state["survivors"])
        elif state.get("task") == task.key() and state.get("done"):
            return list(state["survivors"])
    starts = list(range(start, total, chunk))
    if threads <= 1:
        for s in starts:
            survivors.extend(core.scan_tables(task.dim, task.field.p, s,
                                              min(s + chunk, total), bic, nil, gen))
            _write_checkpoint(checkpoint, task, min(s + chunk, total), survivors, False)
            if progress:
                progress(min(s + chunk, total), total)
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            futures = [
                pool.submit(core.scan_tables, task.dim, task.field.p, s,
                            min(s + chunk, total), bic, nil, gen)
                for s in starts
            ]
            done = start
            for s, fut in zip(starts, futures):
                survivors.extend(fut.result())
                done = min(s + chunk, total)
                if progress:
                    progress(done, total)
        _write_checkpoint(checkpoint, task, total, survivors, False)
    survivors.sort()
    _write_checkpoint(checkpoint, task, total, survivors, True)
    return survivors


def _write_checkpoint(path, task, nxt, survivors, done):
    if not path:
        return
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        json.dump(
            {"task": task.key(), "next": nxt, "survivors": list(survivors), "done": done},
            fh,
        )
    os.replace(tmp, path)


def _canonical_key(task: EnumerationTask, flat):
    n, p = task.dim, task.field.p
    if {"nilpotent", "one_generated"} <= set(task.predicates):
        result = core.canonical_form(n, p, flat)
        if result is not None:
            return ("gen", result[0])
    return ("gl", core.canonical_form_gl(n, p, flat))


def enumerate_bruteforce(task: EnumerationTask, threads: int = 1, chunk: int = CHUNK,
                         checkpoint=None, progress=None):
    """One Algebra per isomorphism class of surviving tables.

    The class representative is the lexicographically smallest surviving
    table, and classes are emitted in representative order, which makes the
    output independent of scan order and thread count.
    """
    survivors = scan_survivors(task, threads=threads, chunk=chunk,
                               checkpoint=checkpoint, progress=progress)
    classes = {}
    for idx in survivors:
        flat = core.decode_table(idx, task.dim, task.field.p)
        key = _canonical_key(task, flat)
        if key not in classes or flat < classes[key]:
            classes[key] = flat
    reps = sorted(classes.values())
    return [Algebra.from_flat(task.field, task.dim, flat) for flat in reps]


# -- cross-validation against the extension pipeline ---------------------------


def pipeline_classes(dim: int, field: PrimeField):
    """All one-generated nilpotent classes of a dimension, generated the
    clever way: non-split central extensions of smaller classes, one orbit
    representative each.  Dimension 1 is the zero algebra."""
    from .extensions import enumerate_orbits

    if dim < 1:
        return []
    levels = {1: [Algebra.zero(field, 1)]}
    for n in range(2, dim + 1):
        found = []
        for s in range(1, n):
            for parent in levels[n - s]:
                report = enumerate_orbits(parent, s)
                found.extend(orbit.extension for orbit in report.orbits)
        levels[n] = found
    return levels[dim]


@dataclass
class CrossValidation:
    dim: int
    field: PrimeField
    oracle_classes: list
    pipeline_classes: list
    matched: list = dc_field(default_factory=list)
    unmatched_oracle: list = dc_field(default_factory=list)
    unmatched_pipeline: list = dc_field(default_factory=list)

    @property
    def ok(self):
        return not self.unmatched_oracle and not self.unmatched_pipeline

    def format(self) -> str:
        lines = [
            f"cross-validation dim {self.dim} over {self.field}:"
            f" oracle {len(self.oracle_classes)} classes,"
            f" pipeline {len(self.pipeline_classes)} classes,"
            f" matched {len(self.matched)}"
        ]
        for flat in self.unmatched_oracle:
            lines.append(f"  oracle class unmatched: {flat}")
        for flat in self.unmatched_pipeline:
            lines.append(f"  pipeline class unmatched: {flat}")
        lines.append("  " + ("PERFECT MATCH" if self.ok else "MISMATCH"))
        return "\n".join(lines)


def cross_validate(dim: int, field: PrimeField, threads: int = 1,
                   checkpoint=None, progress=None) -> CrossValidation:
    """Brute-force classes vs pipeline-generated classes, matched through the
    canonical generator tensor (a complete isomorphism invariant here)."""
    task = EnumerationTask(field, dim)
    oracle = enumerate_bruteforce(task, threads=threads, checkpoint=checkpoint,
                                  progress=progress)
    pipeline = pipeline_classes(dim, field)
    okey = {}
    for alg in oracle:
        res = core.canonical_form(alg.dim, field.p, alg.flat_sc())
        okey[res[0]] = alg
    pkey = {}
    for alg in pipeline:
        res = core.canonical_form(alg.dim, field.p, alg.flat_sc())
        pkey[res[0]] = alg
    report = CrossValidation(dim, field, oracle, pipeline)
    for key in sorted(okey):
        if key in pkey:
            report.matched.append(key)
        else:
            report.unmatched_oracle.append(okey[key].flat_sc())
    for key in sorted(pkey):
        if key not in okey:
            report.unmatched_pipeline.append(pkey[key].flat_sc())
    return report
