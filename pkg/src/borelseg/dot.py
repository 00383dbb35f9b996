"""DOT export of the Borel graph of a degree slice.

Nodes are the terms of degree t, edges are the moves u -> e_j^-(u).  Terms of
the ideal are drawn as boxes and the Borel-minimal ones are filled.
"""

from __future__ import annotations

from typing import Optional

from .ideals import MonomialIdeal, minimal_elements
from .monomials import REVLEX, e_minus, format_term, terms_of_degree

__all__ = ["export_dot"]


def export_dot(source, t: int, n: Optional[int] = None, name: str = "borel") -> str:
    """DOT text for T_t with the slice of ``source`` (an ideal or a set of degree-t terms) marked."""
    if isinstance(source, MonomialIdeal):
        n = source.n
        B = source.degree_slice(t)
    else:
        B = frozenset(source)
        if n is None:
            if not B:
                raise ValueError("n is needed for an empty set of terms")
            n = len(next(iter(B))) - 1
    minimal = minimal_elements(B) if B else frozenset()
    terms = terms_of_degree(n, t, REVLEX)
    lines = [f"digraph {name} {{", "  node [shape=plaintext];"]
    for u in terms:
        attrs = []
        if u in B:
            attrs.append("shape=box")
        if u in minimal:
            attrs.append("style=filled")
        label = format_term(u)
        extra = (", " + ", ".join(attrs)) if attrs else ""
        lines.append(f'  "{label}" [label="{label}"{extra}];')
    for u in terms:
        for j in range(1, n + 1):
            if u[j]:
                lines.append(f'  "{format_term(u)}" -> "{format_term(e_minus(u, j))}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
