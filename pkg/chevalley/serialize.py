"""Canonical text form of a structure table.

One line per nonzero structure constant, sorted by basis indices:

    # E6 dim 78
    X_100000 Y_100000 H_1 1
    ...
"""

from pathlib import Path
from typing import Dict, List, Tuple, Union

from rootsys import RootSystem

from .algebra import AlgebraError, LieAlgebra, StructureTable, basis_labels


class TableFormatError(AlgebraError):
    pass


def dump_table(g: LieAlgebra) -> str:
    lines = [f"# {g.name} dim {g.dim}"]
    for (i, j) in sorted(g.table):
        for k, c in sorted(g.table[(i, j)]):
            lines.append(f"{g.labels[i]} {g.labels[j]} {g.labels[k]} {c}")
    return "\n".join(lines) + "\n"


def load_table(text: str, rs: RootSystem) -> LieAlgebra:
    labels = basis_labels(rs)
    index = {label: i for i, label in enumerate(labels)}
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines or not lines[0].startswith("#"):
        raise TableFormatError("Missing '# <type> dim <n>' header")
    header = lines[0][1:].split()
    if len(header) != 3 or header[0] != str(rs.type) or header[2] != str(len(labels)):
        raise TableFormatError(f"Header {lines[0]!r} does not match {rs.type}")

    collected: Dict[Tuple[int, int], List[Tuple[int, int]]] = {}
    for number, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if len(parts) != 4:
            raise TableFormatError(f"Line {number}: expected 4 fields, got {len(parts)}")
        try:
            i, j, k = (index[p] for p in parts[:3])
            c = int(parts[3])
        except (KeyError, ValueError) as e:
            raise TableFormatError(f"Line {number}: {e}") from e
        collected.setdefault((i, j), []).append((k, c))
    table: StructureTable = {key: tuple(terms) for key, terms in collected.items()}
    return LieAlgebra(rs, table)


def write_table(g: LieAlgebra, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dump_table(g))
    return path


def read_table(path: Union[str, Path], rs: RootSystem) -> LieAlgebra:
    return load_table(Path(path).read_text(), rs)
