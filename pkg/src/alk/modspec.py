"""Parse textual module descriptions such as ``rad:P:1`` or ``sum:S:1+P:2``.

Grammar::

    spec := "reg" | "S:" v | "P:" v | "I:" v
          | "rad:" spec | "soc:" spec | "top:" spec | "tau:" spec | "tau-:" spec
          | "syz:" k ":" spec | "sum:" spec ("+" spec)+

where ``v`` is a vertex label and ``k`` a non-negative integer.
"""

from __future__ import annotations

from .algebra import Algebra
from .ar import tau, tau_inv
from .homology import regular, syzygy
from .modules import (
    Module,
    direct_sum,
    indec_injective,
    indec_projective,
    radical_submodule,
    simple_module,
    socle,
    top,
)


class SpecError(ValueError):
    pass


def _vertex(alg: Algebra, label: str) -> int:
    try:
        return alg.vertex_labels.index(label)
    except ValueError:
        raise SpecError(f"unknown vertex {label!r}") from None


def _split_sum(body: str) -> list[str]:
    # "+" binds loosest, so nested sums are not expressible and need none
    parts = body.split("+")
    if len(parts) < 2 or not all(parts):
        raise SpecError("sum needs at least two summands separated by '+'")
    return parts


def parse_module(alg: Algebra, spec: str) -> Module:
    spec = spec.strip()
    if not spec:
        raise SpecError("empty module spec")
    if spec == "reg":
        return regular(alg)
    head, _, rest = spec.partition(":")
    if not rest:
        raise SpecError(f"malformed module spec {spec!r}")
    if head == "sum":
        parts = [parse_module(alg, p) for p in _split_sum(rest)]
        return direct_sum(parts, alg, name=spec)
    if head in ("S", "P", "I"):
        i = _vertex(alg, rest)
        return {"S": simple_module, "P": indec_projective, "I": indec_injective}[head](alg, i)
    if head == "syz":
        k, _, inner = rest.partition(":")
        if not k.isdigit() or not inner:
            raise SpecError("syz needs the form syz:k:spec")
        return syzygy(parse_module(alg, inner), int(k))
    inner = parse_module(alg, rest)
    if head == "rad":
        return radical_submodule(inner).source
    if head == "soc":
        return socle(inner).source
    if head == "top":
        return top(inner).target
    if head in ("tau", "tau-"):
        return (tau if head == "tau" else tau_inv)(inner)
    raise SpecError(f"unknown module constructor {head!r}")
