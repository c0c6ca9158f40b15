"""Run laws over an enumeration space and collect a report.

Workers take every ``jobs``-th instance index; partial reports merge
commutatively (counts add, the lowest-index witnesses win), so the merged
report does not depend on scheduling.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass, field
from typing import Optional, Union

from ..errors import TooLarge
from ..fileformat import emit, parse
from .enumerate import EnumSpace, enumerate_masks, hypergraph_from_masks, space_size
from .iso import distinct_up_to_isomorphism
from .laws import REGISTRY, SKIP, Params, library_impl, resolve


@dataclass(frozen=True)
class Failure:
    index: int
    message: str
    hypergraph: str  # file-format body of the counterexample


@dataclass
class LawTally:
    checked: int = 0
    skipped: int = 0
    failed: int = 0
    witnesses: list[Failure] = field(default_factory=list)

    @property
    def first_failure(self) -> Optional[Failure]:
        return self.witnesses[0] if self.witnesses else None

    def merged(self, other: "LawTally", limit: int) -> "LawTally":
        keep = sorted(self.witnesses + other.witnesses, key=lambda f: f.index)[:limit]
        return LawTally(self.checked + other.checked, self.skipped + other.skipped, self.failed + other.failed, keep)


@dataclass
class VerificationReport:
    space: EnumSpace
    laws: tuple[str, ...]
    instances: int
    tallies: dict[str, LawTally]
    mutant: Optional[str] = None
    witness_limit: int = 1

    @property
    def ok(self) -> bool:
        return all(t.failed == 0 for t in self.tallies.values())

    @property
    def expected_instances(self) -> int:
        return space_size(self.space)

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        tallies = {name: self.tallies[name].merged(other.tallies[name], self.witness_limit) for name in self.laws}
        return VerificationReport(self.space, self.laws, self.instances + other.instances, tallies,
                                  self.mutant, self.witness_limit)

    def distinct_witnesses(self, name: str) -> list[Failure]:
        """Witnesses of one law with isomorphic repeats dropped."""
        tally = self.tallies[name]
        reps = distinct_up_to_isomorphism(parse(f.hypergraph) for f in tally.witnesses)
        bodies = {emit(H) for H in reps}
        return [f for f in tally.witnesses if f.hypergraph in bodies]

    def to_dict(self) -> dict:
        return {
            "space": {
                "max_vertices": self.space.max_vertices,
                "max_edges": self.space.max_edges,
                "allow_empty_edges": self.space.allow_empty_edges,
            },
            "instances": self.instances,
            "mutant": self.mutant,
            "ok": self.ok,
            "laws": {
                name: {
                    "checked": t.checked,
                    "skipped": t.skipped,
                    "failed": t.failed,
                    "witnesses": [
                        {"index": f.index, "message": f.message, "hypergraph": f.hypergraph} for f in t.witnesses
                    ],
                }
                for name, t in self.tallies.items()
            },
        }

    def render(self) -> str:
        s = self.space
        lines = [
            f"space: n<={s.max_vertices} m<={s.max_edges} empty-edges={'yes' if s.allow_empty_edges else 'no'}"
            f" instances={self.instances}" + (f" mutant={self.mutant}" if self.mutant else "")
        ]
        width = max((len(n) for n in self.laws), default=0)
        for name in self.laws:
            t = self.tallies[name]
            status = "ok" if not t.failed else "FAIL"
            lines.append(f"{name:<{width}}  {status:<4}  checked={t.checked} skipped={t.skipped} failed={t.failed}")
        for name in self.laws:
            for f in self.tallies[name].witnesses:
                lines.append(f"\ncounterexample for {name} (instance #{f.index}): {f.message}")
                lines.append(f.hypergraph.rstrip("\n"))
        lines.append("result: " + ("all laws hold" if self.ok else "FAILURES"))
        return "\n".join(lines) + "\n"


def _run_slice(space: EnumSpace, names: tuple[str, ...], mutant: Optional[str], params: Params,
               worker: int, jobs: int) -> VerificationReport:
    impl = library_impl(mutant)
    tallies = {name: LawTally() for name in names}
    seen = 0
    for index, (n, masks) in enumerate(enumerate_masks(space)):
        if index % jobs != worker:
            continue
        seen += 1
        H = hypergraph_from_masks(n, masks)
        for name in names:
            tally = tallies[name]
            try:
                outcome = REGISTRY[name].check(H, impl, params)
            except Exception as exc:  # a crash on a valid instance is a law failure
                outcome = f"raised {type(exc).__name__}: {exc}"
            if outcome == SKIP:
                tally.skipped += 1
            elif outcome is None:
                tally.checked += 1
            else:
                tally.failed += 1
                if len(tally.witnesses) < params.witness_limit:
                    tally.witnesses.append(Failure(index, outcome, emit(H)))
    return VerificationReport(space, names, seen, tallies, mutant, params.witness_limit)


def _run_slice_star(args) -> VerificationReport:
    return _run_slice(*args)


def verify(space: EnumSpace, laws: Optional[Union[str, list[str]]] = None, mutant: Optional[str] = None,
           jobs: int = 1, params: Optional[Params] = None) -> VerificationReport:
    params = params or Params()
    names = tuple(resolve(laws))
    size = space_size(space)
    if size > params.max_instances:
        raise TooLarge(f"space holds {size} instances, above the guard of {params.max_instances}")
    library_impl(mutant)  # fail fast on an unknown mutant
    jobs = max(1, jobs)
    if jobs == 1:
        return _run_slice(space, names, mutant, params, 0, 1)
    tasks = [(space, names, mutant, params, w, jobs) for w in range(jobs)]
    with multiprocessing.get_context("fork").Pool(jobs) as pool:
        parts = pool.map(_run_slice_star, tasks)
    report = parts[0]
    for part in parts[1:]:
        report = report.merge(part)
    return report
