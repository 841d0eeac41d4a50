"""Plain-text group files.

Line 1 is ``degree d``; every further nonblank line is one generator given as
d space-separated 0-based images.  Lines starting with ``#`` are comments.
"""

from __future__ import annotations

from pathlib import Path

from .perm import Permutation, PermutationGroup

__all__ = ["GroupFileError", "parse_group", "read_group", "format_group", "write_group"]


class GroupFileError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


def parse_group(text: str) -> PermutationGroup:
    degree = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if degree is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "degree":
                raise GroupFileError("expected 'degree d'", lineno)
            try:
                degree = int(parts[1])
            except ValueError:
                raise GroupFileError(f"bad degree {parts[1]!r}", lineno) from None
            if degree < 1:
                raise GroupFileError("degree must be positive", lineno)
            continue
        try:
            images = [int(x) for x in line.split()]
        except ValueError:
            raise GroupFileError(f"non-integer image in {line!r}", lineno) from None
        if len(images) != degree:
            raise GroupFileError(f"expected {degree} images, got {len(images)}", lineno)
        try:
            gens.append(Permutation(images))
        except ValueError as exc:
            raise GroupFileError(str(exc), lineno) from None
    if degree is None:
        raise GroupFileError("missing 'degree' line")
    return PermutationGroup(gens, degree=degree)


def read_group(path: str | Path) -> PermutationGroup:
    return parse_group(Path(path).read_text())


def format_group(G: PermutationGroup, comment: str | None = None) -> str:
    """Canonical serialization: generators sorted lexicographically, duplicates kept once."""
    lines = []
    if comment:
        lines += ["# " + c for c in comment.splitlines()]
    lines.append(f"degree {G.degree}")
    for imgs in sorted({g.images for g in G.generators}):
        lines.append(" ".join(map(str, imgs)))
    return "\n".join(lines) + "\n"


def write_group(G: PermutationGroup, path: str | Path, comment: str | None = None) -> None:
    Path(path).write_text(format_group(G, comment))
