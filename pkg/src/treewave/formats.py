"""Canonical file formats: instance JSON, coloring JSON, bench CSV.

Serialization is bit-exact by construction: fixed key order, compact
separators, a single trailing newline, no whitespace variation.  Golden
file tests depend on this.
"""

from __future__ import annotations

import json
from typing import Sequence

from .instances import Coloring, HostTree, InputError, Instance, RootedSubtree


def dumps_instance(inst: Instance) -> str:
    doc = {
        "tree": {
            "vertices": inst.tree.vertices,
            "edges": [[u, v] for u, v in inst.tree.edges],
        },
        "subtrees": [
            {"root": s.root, "arcs": [[t, h] for t, h in s.arcs]}
            for s in inst.subtrees
        ],
    }
    return json.dumps(doc, separators=(",", ":")) + "\n"


def loads_instance(text: str) -> Instance:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"not valid JSON: {e}") from e
    try:
        tree_doc = doc["tree"]
        tree = HostTree.of(tree_doc["vertices"], tree_doc["edges"])
        subtrees = tuple(
            RootedSubtree.of(s["root"], s["arcs"]) for s in doc["subtrees"]
        )
    except (KeyError, TypeError, ValueError) as e:
        raise InputError(f"malformed instance document: {e}") from e
    return Instance(tree, subtrees)


def dumps_coloring(
    colors: Sequence[int], original_count: int | None = None
) -> str:
    """Coloring document; a padded run also reports the original slice."""
    doc: dict = {
        "colors": list(colors),
        "num_colors": len(set(colors)),
    }
    if original_count is not None:
        original = list(colors[:original_count])
        doc["original_colors"] = original
        doc["original_num_colors"] = len(set(original))
    return json.dumps(doc, separators=(",", ":")) + "\n"


def loads_coloring(text: str) -> tuple[list[int], list[int] | None]:
    """Returns (colors, original_colors or None)."""
    try:
        doc = json.loads(text)
        colors = [int(c) for c in doc["colors"]]
        original = doc.get("original_colors")
        if original is not None:
            original = [int(c) for c in original]
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
        raise InputError(f"malformed coloring document: {e}") from e
    if any(c < 1 for c in colors) or (original and any(c < 1 for c in original)):
        raise InputError("colors must be positive integers")
    return colors, original


def coloring_to_doc(c: Coloring, n: int) -> list[int]:
    return c.color_list(n)


CSV_COLUMNS = (
    "instance_id",
    "seed",
    "vertices",
    "subtrees",
    "padded_subtrees",
    "load",
    "lower_bound",
    "exact_chromatic",
    "greedy_colors_padded",
    "greedy_colors_original",
    "baseline_colors",
    "ratio_vs_exact",
    "ratio_vs_lower_bound",
)


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.6f}"
    return str(value)


def records_to_csv(records) -> str:
    """Bench records as CSV; wall times are deliberately excluded so the
    bytes depend only on seeds and the solver set."""
    lines = [",".join(CSV_COLUMNS)]
    for r in records:
        lines.append(
            ",".join(
                _cell(getattr(r, col)) for col in CSV_COLUMNS
            )
        )
    return "\n".join(lines) + "\n"
