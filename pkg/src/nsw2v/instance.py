"""Problem instances, allocations, and their on-disk text formats.

Every value in this package is an exact integer in *half-units*: a light
good is worth 2 halves (one whole unit) and a heavy good is worth
``heavy_value`` halves, an odd integer >= 3.  Working in halves keeps all
bundle values exact when the heavy value is half-integral, so solver
decisions never touch floating point.

A good is *heavy* when at least one agent labels it ``H``; otherwise it is
*light* (worth one unit to everybody).  Valid allocations are restricted:
a heavy good may only go to an agent that labels it ``H``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

from .errors import FormatError

INSTANCE_MAGIC = "nsw2v v1"
ALLOCATION_MAGIC = "allocation v1"

#: value of a light good, in halves
LIGHT_VALUE = 2

_S_RE = re.compile(r"s (\d+)/2")
_AGENTS_RE = re.compile(r"agents (\d+)")
_GOODS_RE = re.compile(r"goods (\d+)")


@dataclass(frozen=True)
class Instance:
    """``n`` agents, ``m`` goods, an H/L label per (agent, good) pair.

    ``heavy_value`` is the worth of a heavy good in halves (odd, >= 3, so
    the per-unit value is a half-integer strictly greater than 1).
    """

    n: int
    m: int
    heavy_value: int
    labels: tuple[str, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need at least one agent")
        if self.m < 0:
            raise ValueError("negative good count")
        if self.heavy_value < 3 or self.heavy_value % 2 == 0:
            raise ValueError("heavy value must be an odd number of halves >= 3")
        if len(self.labels) != self.n:
            raise ValueError("one label row per agent required")
        for row in self.labels:
            if len(row) != self.m:
                raise ValueError("label row length must equal the good count")
            if set(row) - {"H", "L"}:
                raise ValueError("labels must be H or L")

    @cached_property
    def heavy(self) -> tuple[bool, ...]:
        """Per good: is it labelled H by at least one agent."""
        return tuple(
            any(row[g] == "H" for row in self.labels) for g in range(self.m)
        )

    @cached_property
    def eligible(self) -> tuple[tuple[int, ...], ...]:
        """Per good: agents labelling it H (empty for light goods)."""
        return tuple(
            tuple(a for a in range(self.n) if self.labels[a][g] == "H")
            for g in range(self.m)
        )

    @cached_property
    def heavy_goods(self) -> tuple[int, ...]:
        return tuple(g for g in range(self.m) if self.heavy[g])

    @cached_property
    def light_goods(self) -> tuple[int, ...]:
        return tuple(g for g in range(self.m) if not self.heavy[g])

    def good_value(self, agent: int, good: int) -> int:
        """Value of ``good`` for ``agent`` in halves."""
        if not (0 <= agent < self.n and 0 <= good < self.m):
            raise IndexError("agent or good index out of range")
        return self.heavy_value if self.labels[agent][good] == "H" else LIGHT_VALUE

    @property
    def floor_units(self) -> int:
        """Largest whole number of units strictly below one heavy good."""
        return (self.heavy_value - 1) // 2

    def total_value(self, owners) -> int:
        """Total value in halves of all goods under the given owners."""
        return sum(self.good_value(owners[g], g) for g in range(self.m))


@dataclass(frozen=True)
class Allocation:
    """Owner of every good; index = good, value = agent."""

    owners: tuple[int, ...]


def parse_instance(text: str) -> Instance:
    """Parse the instance text format, raising FormatError on any defect."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if len(lines) < 4:
        raise FormatError("header", "expected at least 4 header lines")
    if lines[0] != INSTANCE_MAGIC:
        raise FormatError("magic", f"first line must be {INSTANCE_MAGIC!r}")
    match = _S_RE.fullmatch(lines[1])
    if not match:
        raise FormatError("s_format", "second line must be 's <p>/2'")
    heavy_value = int(match.group(1))
    if heavy_value % 2 == 0:
        raise FormatError(
            "s_integer",
            "p in 's p/2' must be odd: integer per-unit values are not supported",
        )
    if heavy_value < 3:
        raise FormatError("s_range", "p in 's p/2' must be at least 3")
    match = _AGENTS_RE.fullmatch(lines[2])
    if not match:
        raise FormatError("agents", "third line must be 'agents <n>'")
    n = int(match.group(1))
    if n < 1:
        raise FormatError("agents_range", "need at least one agent")
    match = _GOODS_RE.fullmatch(lines[3])
    if not match:
        raise FormatError("goods", "fourth line must be 'goods <m>'")
    m = int(match.group(1))
    rows = lines[4:]
    if len(rows) != n:
        raise FormatError("row_count", f"expected {n} label rows, got {len(rows)}")
    for a, row in enumerate(rows):
        if len(row) != m:
            raise FormatError(
                "row_length", f"label row {a} has length {len(row)}, expected {m}"
            )
        bad = set(row) - {"H", "L"}
        if bad:
            raise FormatError(
                "label_char", f"label row {a} contains {sorted(bad)!r}"
            )
    return Instance(n=n, m=m, heavy_value=heavy_value, labels=tuple(rows))


def serialize_instance(inst: Instance) -> str:
    head = (
        f"{INSTANCE_MAGIC}\n"
        f"s {inst.heavy_value}/2\n"
        f"agents {inst.n}\n"
        f"goods {inst.m}\n"
    )
    return head + "".join(row + "\n" for row in inst.labels)


def parse_allocation(text: str, inst: Instance) -> Allocation:
    """Parse the allocation text format against ``inst``."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if len(lines) != 2:
        raise FormatError("alloc_lines", "expected exactly 2 lines")
    if lines[0] != ALLOCATION_MAGIC:
        raise FormatError("alloc_magic", f"first line must be {ALLOCATION_MAGIC!r}")
    tokens = lines[1].split()
    if len(tokens) != inst.m:
        raise FormatError(
            "alloc_length", f"expected {inst.m} owner entries, got {len(tokens)}"
        )
    owners = []
    for g, tok in enumerate(tokens):
        if not tok.isdigit():
            raise FormatError("alloc_token", f"owner of good {g} is not an integer")
        owner = int(tok)
        if owner >= inst.n:
            raise FormatError(
                "alloc_range", f"owner {owner} of good {g} is not an agent index"
            )
        owners.append(owner)
    return Allocation(owners=tuple(owners))


def serialize_allocation(alloc: Allocation) -> str:
    return f"{ALLOCATION_MAGIC}\n" + " ".join(map(str, alloc.owners)) + "\n"


def validate_allocation(inst: Instance, alloc: Allocation) -> str | None:
    """Return None if the allocation is valid, else a report naming the
    first offending good.

    Checks the partition shape (one in-range owner per good) and the
    restriction rule (heavy goods only to agents labelling them H).
    """
    if len(alloc.owners) != inst.m:
        return f"expected {inst.m} owners, got {len(alloc.owners)}"
    for g, owner in enumerate(alloc.owners):
        if not 0 <= owner < inst.n:
            return f"good {g}: owner {owner} is not an agent index"
        if inst.heavy[g] and inst.labels[owner][g] != "H":
            return f"good {g}: heavy good assigned to agent {owner} which values it light"
    return None
