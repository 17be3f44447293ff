"""
Brute-force enumeration of principal subclasses, grouping of patterns into
Wilf classes by their counting sequences, and verification that the grouping
coincides with the canonical-form equivalences.

Everything here is a deterministic reduction over immutable inputs; counting
different patterns is embarrassingly parallel but runs sequentially, with a
cache keyed by (class, pattern, depth) so repeated verifications are free.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .canonical import canonical_class_count, canonical_key
from .encodings import (
    ClassElement,
    ClassId,
    format_element,
    generate,
    leq_function,
    size_of,
    validate_element,
)
from .errors import BudgetExceededError, GFMismatchError
from .genfun import avoid_gf_layered, avoid_gf_sum_word

MAX_DEPTH = 18
MAX_PATTERN_SIZE = 8


@dataclass(frozen=True)
class AvoiderSequence:
    class_id: ClassId
    pattern: ClassElement
    counts: tuple[int, ...]

    @property
    def depth(self) -> int:
        return len(self.counts) - 1


@dataclass(frozen=True)
class WilfGroup:
    members: tuple[ClassElement, ...]
    counts: tuple[int, ...]


@dataclass(frozen=True)
class WilfReport:
    class_id: ClassId
    n: int
    depth: int
    groups: tuple[WilfGroup, ...]

    @property
    def w_n(self) -> int:
        return len(self.groups)

    @property
    def c_n(self) -> int:
        return sum(len(g.members) for g in self.groups)


@dataclass(frozen=True)
class PairFinding:
    x: ClassElement
    y: ClassElement
    index: int | None  # first index where the sequences differ, if any


@dataclass(frozen=True)
class SoundnessReport:
    class_id: ClassId
    n: int
    depth: int
    violations: tuple[PairFinding, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class CompletenessReport:
    class_id: ClassId
    n: int
    depth: int
    separated: tuple[PairFinding, ...]
    unseparated: tuple[PairFinding, ...]  # warnings: need a larger depth

    @property
    def ok(self) -> bool:
        return not self.unseparated


def _check_budget(n: int | None, depth: int | None) -> None:
    if depth is not None and depth > MAX_DEPTH:
        raise BudgetExceededError(f"depth {depth} above budget {MAX_DEPTH}")
    if n is not None and n > MAX_PATTERN_SIZE:
        raise BudgetExceededError(
            f"pattern size {n} above budget {MAX_PATTERN_SIZE}"
        )


@lru_cache(maxsize=None)
def count_avoiders(
    class_id: ClassId, pattern: ClassElement, depth: int
) -> AvoiderSequence:
    """Counts of class members avoiding the pattern, for sizes 0..depth."""
    _check_budget(None, depth)
    validate_element(class_id, pattern)
    leq = leq_function(class_id)
    counts = tuple(
        sum(1 for e in generate(class_id, m) if not leq(pattern, e))
        for m in range(depth + 1)
    )
    if size_of(class_id, pattern) > 0:
        assert counts[0] == 1, "the empty permutation avoids nonempty patterns"
    return AvoiderSequence(class_id, pattern, counts)


def wilf_classes(class_id: ClassId, n: int, depth: int) -> WilfReport:
    """Group the size-n patterns by equality of their counting sequences."""
    _check_budget(n, depth)
    groups: dict[tuple[int, ...], list[ClassElement]] = {}
    for pattern in generate(class_id, n):
        counts = count_avoiders(class_id, pattern, depth).counts
        groups.setdefault(counts, []).append(pattern)
    ordered = sorted(groups.items(), key=lambda item: item[1][0])
    return WilfReport(
        class_id,
        n,
        depth,
        tuple(WilfGroup(tuple(members), counts) for counts, members in ordered),
    )


def canonical_groups(class_id: ClassId, n: int) -> tuple[tuple[ClassElement, ...], ...]:
    """Size-n patterns partitioned by canonical form, in generation order."""
    groups: dict[tuple, list[ClassElement]] = {}
    for pattern in generate(class_id, n):
        groups.setdefault(canonical_key(class_id, pattern), []).append(pattern)
    return tuple(
        tuple(members)
        for members in sorted(groups.values(), key=lambda ms: ms[0])
    )


def verify_soundness(class_id: ClassId, n: int, depth: int) -> SoundnessReport:
    """
    Patterns with equal canonical form must have equal counting sequences to
    the given depth; any violating pair is reported.
    """
    _check_budget(n, depth)
    violations = []
    for members in canonical_groups(class_id, n):
        base = count_avoiders(class_id, members[0], depth).counts
        for other in members[1:]:
            counts = count_avoiders(class_id, other, depth).counts
            if counts != base:
                index = next(i for i, (a, b) in enumerate(zip(base, counts)) if a != b)
                violations.append(PairFinding(members[0], other, index))
    return SoundnessReport(class_id, n, depth, tuple(violations))


def verify_completeness(class_id: ClassId, n: int, depth: int) -> CompletenessReport:
    """
    Patterns with distinct canonical forms must have counting sequences that
    differ at some index up to the depth.  Pairs still equal at the depth
    are reported as unseparated, demanding a larger depth.
    """
    _check_budget(n, depth)
    groups = canonical_groups(class_id, n)
    representatives = [g[0] for g in groups]
    separated = []
    unseparated = []
    for i, x in enumerate(representatives):
        cx = count_avoiders(class_id, x, depth).counts
        for y in representatives[i + 1 :]:
            cy = count_avoiders(class_id, y, depth).counts
            diff = next((k for k, (a, b) in enumerate(zip(cx, cy)) if a != b), None)
            finding = PairFinding(x, y, diff)
            if diff is None:
                unseparated.append(finding)
            else:
                separated.append(finding)
    return CompletenessReport(
        class_id, n, depth, tuple(separated), tuple(unseparated)
    )


@dataclass(frozen=True)
class CollapseRow:
    n: int
    c_n: int
    w_n: int
    canonical_count: int


def collapse_rows(class_id: ClassId, n_max: int, depth: int) -> tuple[CollapseRow, ...]:
    """The collapse table: class size, Wilf-class count, canonical count."""
    _check_budget(n_max, depth)
    rows = []
    for n in range(1, n_max + 1):
        report = wilf_classes(class_id, n, depth)
        rows.append(
            CollapseRow(n, report.c_n, report.w_n, canonical_class_count(class_id, n))
        )
    return tuple(rows)


def gf_crosscheck(class_id: ClassId, n: int, depth: int) -> int:
    """
    For every size-n pattern of the layered or sum-word class, compare the
    rational GF expansion with brute-force avoider counts; exact equality.
    Returns the number of patterns checked; raises GFMismatchError on the
    first disagreement.
    """
    _check_budget(n, depth)
    if class_id is ClassId.AV_312_231:
        gf_of = avoid_gf_layered
    elif class_id is ClassId.AV_312_321:
        gf_of = avoid_gf_sum_word
    else:
        raise ValueError("generating functions cover c3 and c4 only")
    checked = 0
    for pattern in generate(class_id, n):
        expansion = gf_of(pattern).expand(depth).integers()
        counts = count_avoiders(class_id, pattern, depth).counts
        for k, (a, b) in enumerate(zip(counts, expansion)):
            if a != b:
                raise GFMismatchError(pattern, k, a, b)
        checked += 1
    return checked


# ---------------------------------------------------------------------------
# Rendering

def collapse_csv(rows: tuple[CollapseRow, ...]) -> str:
    lines = ["n,c_n,w_n,canonical_count"]
    lines += [f"{r.n},{r.c_n},{r.w_n},{r.canonical_count}" for r in rows]
    return "\n".join(lines) + "\n"


def report_json(report: WilfReport, canonical_count: int) -> str:
    payload = {
        "class": report.class_id.value,
        "n": report.n,
        "depth": report.depth,
        "c_n": report.c_n,
        "w_n": report.w_n,
        "canonical_count": canonical_count,
        "groups": [
            {
                "members": [format_element(report.class_id, m) for m in g.members],
                "counts": list(g.counts),
            }
            for g in report.groups
        ],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
