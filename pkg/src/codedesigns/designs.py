"""Simple incidence structures and exact t-design checks.

Blocks are sorted index tuples and a design's block list is kept sorted, so
design equality is list equality.  The block-file format is plain ASCII: one
block per line, space-separated zero-based indices in increasing order, lines
in lexicographic order of the index tuples, LF line endings.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from math import comb
from pathlib import Path


@dataclass(frozen=True)
class Design:
    v: int
    blocks: tuple[tuple[int, ...], ...]
    labels: tuple | None = None

    def __post_init__(self):
        blocks = sorted({tuple(sorted(set(b))) for b in self.blocks})
        for b in blocks:
            if b and (b[0] < 0 or b[-1] >= self.v):
                raise ValueError(f"block {b} not inside 0..{self.v - 1}")
        object.__setattr__(self, "blocks", tuple(blocks))

    def __len__(self):
        return len(self.blocks)

    @property
    def block_sizes(self) -> set[int]:
        return {len(b) for b in self.blocks}


@dataclass(frozen=True)
class TDesignResult:
    uniform: bool
    lam: int | None = None
    witness: tuple | None = None  # two t-sets with different counts


def complement(D: Design) -> Design:
    full = set(range(D.v))
    return Design(D.v, tuple(tuple(sorted(full - set(b))) for b in D.blocks), D.labels)


def _block_size(D: Design, t: int) -> int:
    sizes = D.block_sizes
    if len(sizes) != 1:
        raise ValueError(f"mixed block sizes {sorted(sizes)}")
    (k,) = sizes
    if k < t:
        raise ValueError(f"block size {k} smaller than t={t}")
    return k


def t_design_lambda(D: Design, t: int) -> TDesignResult:
    """Count the blocks through every t-subset of points.

    Uniform counts give ``lam``; otherwise the first pair of t-sets (in lex
    order) with different counts is returned as a witness.
    """
    _block_size(D, t)
    counts = Counter()
    for b in D.blocks:
        counts.update(combinations(b, t))
    first = None
    for T in combinations(range(D.v), t):
        c = counts.get(T, 0)
        if first is None:
            first = (T, c)
        elif c != first[1]:
            return TDesignResult(False, witness=(first[0], T))
    return TDesignResult(True, lam=first[1] if first else 0)


def is_steiner(D: Design, t: int) -> bool:
    res = t_design_lambda(D, t)
    return res.uniform and res.lam == 1


def is_complete(D: Design, w: int) -> bool:
    return D.block_sizes <= {w} and len(D.blocks) == comb(D.v, w)


def complete_design(v: int, w: int) -> Design:
    return Design(v, tuple(combinations(range(v), w)))


def complete_lambda(v: int, w: int, t: int) -> int:
    return comb(v - t, w - t)


def format_blocks(D: Design) -> str:
    return "".join(" ".join(map(str, b)) + "\n" for b in D.blocks)


def write_blocks(path, D: Design) -> None:
    Path(path).write_bytes(format_blocks(D).encode("ascii"))


def read_blocks(path, v: int | None = None) -> Design:
    """Parse a block file; ``v`` defaults to one more than the largest index."""
    blocks = []
    for lineno, line in enumerate(Path(path).read_text(encoding="ascii").splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        try:
            blocks.append(tuple(int(tok) for tok in line.split()))
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer token") from None
    if v is None:
        v = 1 + max((max(b) for b in blocks if b), default=-1)
    return Design(v, tuple(blocks))
