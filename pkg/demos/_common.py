"""Small display helpers shared by the demo scripts."""

from __future__ import annotations

from hypalg import from_key, serialize_hgx


def matrix_block(h, indent="    ") -> str:
    return "\n".join(indent + line for line in serialize_hgx(h).splitlines())


def show_lincomb(label, lc) -> None:
    """Print a rank-2 combination one term per line, factors as matrices."""
    print(f"{label}:")
    for key, coeff in lc.terms():
        factors = " (x) ".join(serialize_hgx(from_key(k)).replace("\n", ";") for k in key)
        print(f"  {coeff} * {factors}")
    print()


def show_poly(label, poly) -> None:
    if poly.is_zero():
        print(f"  {label:8} = 0")
        return
    parts = []
    for i, c in enumerate(poly.coeffs):
        if not c:
            continue
        term = "1" if i == 0 else ("x" if i == 1 else f"x^{i}")
        parts.append(f"{c}*{term}" if i == 0 or c != 1 else term)
    print(f"  {label:8} = {' + '.join(parts)}")
