"""Instance generators for the benchmark families, plus text file I/O.

Generators are pure functions of their parameters (and seed); the circulant
family is placed on a circle and then verified against the intended abstract
adjacency with exact arithmetic, so a bad rounding can never slip through as
a silently different graph.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from pathlib import Path

from .core import AbstractGraph, Instance, build_instance
from .errors import NotRealizable, ParseError, SnapFailure
from .geom import Point

_CIRC_DENOM = 10 ** 12
_CLUSTER_DENOM = 10 ** 9
# keep sampled points strictly inside the radius-1/2 disks so that snapping
# to the rational grid cannot push an intra-cluster pair past distance 1
_CLUSTER_MARGIN = 1e-6


def circulant_graph(n: int, k: int) -> AbstractGraph:
    """Abstract circulant: i ~ j iff circular index distance <= k-1."""
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)
             if min(j - i, n - (j - i)) <= k - 1]
    return AbstractGraph(n, edges, id=f"circulant-{n}-{k}")


def _snap(value: float, denom: int) -> Fraction:
    return Fraction(round(value * denom), denom)


def gen_circulant(n: int, k: int) -> Instance:
    """Circulant instance on a circle whose radius separates the chord
    lengths at index distances k-1 and k across the unit threshold.

    The realized exact adjacency is compared against the abstract relation;
    any mismatch raises SnapFailure instead of returning a wrong graph.
    """
    if n < 3 or k < 2 or k > n:
        raise ValueError(f"circulant requires n >= 3 and 2 <= k <= n, got ({n},{k})")
    dmax = n // 2
    if k - 1 >= dmax:
        radius = 0.25  # complete graph: any circle of diameter <= 1 works
    else:
        radius = 1.0 / (2.0 * math.sin(math.pi * (k - 0.5) / n))
        chord_in = 2.0 * radius * math.sin(math.pi * (k - 1) / n)
        chord_out = 2.0 * radius * math.sin(math.pi * k / n)
        if not chord_in <= 1.0 < chord_out:
            raise NotRealizable(f"no radius places C_{n}^{k} on a circle")
        margin = min(1.0 - chord_in ** 2, chord_out ** 2 - 1.0)
        if margin <= 16.0 * radius / _CIRC_DENOM:
            raise SnapFailure(
                f"rounding margin too small for C_{n}^{k}; increase precision")

    points = []
    for i in range(n):
        theta = 2.0 * math.pi * i / n
        points.append(Point(_snap(radius * math.cos(theta), _CIRC_DENOM),
                            _snap(radius * math.sin(theta), _CIRC_DENOM)))
    inst = build_instance(f"circulant-{n}-{k}", points)

    from .core import instance_graph
    realized = instance_graph(inst)
    intended = circulant_graph(n, k)
    for i in range(n):
        for j in range(i + 1, n):
            if realized.adjacent(i, j) != intended.adjacent(i, j):
                raise SnapFailure(
                    f"rounded placement of C_{n}^{k} changes adjacency of ({i},{j})")
    return inst


def gen_cs(k: int) -> AbstractGraph:
    """Four k-cliques a, b, c, d with the fixed cross rules.

    For i != j: a_i~b_j, a_i~d_j, b_i~c_j, c_i~d_j; for every i: a_i~c_i and
    b_i~d_i.  All other cross pairs are non-adjacent.  Abstract only; no
    planar realization is attempted.
    """
    if k < 1:
        raise ValueError(f"cs gadget requires k >= 1, got {k}")

    def a(i): return i
    def b(i): return k + i
    def c(i): return 2 * k + i
    def d(i): return 3 * k + i

    edges: list[tuple[int, int]] = []
    for block in (a, b, c, d):
        edges.extend((block(i), block(j)) for i in range(k) for j in range(i + 1, k))
    for i in range(k):
        for j in range(k):
            if i != j:
                edges.append((a(i), b(j)))
                edges.append((a(i), d(j)))
                edges.append((b(i), c(j)))
                edges.append((c(i), d(j)))
        edges.append((a(i), c(i)))
        edges.append((b(i), d(i)))
    return AbstractGraph(4 * k, edges, id=f"cs-{k}")


def gen_two_cluster(n: int, seed: int, separation: int | str | Fraction = 1) -> Instance:
    """n points sampled in two radius-1/2 disks whose centers sit separation
    apart; each disk induces a clique, so stability is at most 2 by
    construction.  Fully deterministic for a fixed (n, seed, separation)."""
    sep = Fraction(separation)
    if not 0 < sep <= 1:
        raise ValueError(f"separation must be in (0, 1], got {sep}")
    rng = random.Random(seed)
    centers = ((Fraction(0), Fraction(0)), (sep, Fraction(0)))
    radius = 0.5 - _CLUSTER_MARGIN

    points: list[Point] = []
    taken: set[Point] = set()
    for _ in range(n):
        while True:
            cx, cy = centers[rng.randrange(2)]
            r = radius * math.sqrt(rng.random())
            theta = 2.0 * math.pi * rng.random()
            p = Point(cx + _snap(r * math.cos(theta), _CLUSTER_DENOM),
                      cy + _snap(r * math.sin(theta), _CLUSTER_DENOM))
            if p not in taken:
                taken.add(p)
                points.append(p)
                break
    sep_tag = f"{sep.numerator}x{sep.denominator}"
    return build_instance(f"twocluster-{n}-{seed}-{sep_tag}", points)


# ---------------------------------------------------------------------------
# text formats (bit-exact round trip)


def _format_scalar(value: Fraction) -> str:
    return str(value)


def _parse_scalar(token: str, line_no: int) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError(line_no, f"bad rational {token!r}") from None


def instance_to_text(inst: Instance) -> str:
    lines = [f"udg {inst.id} {inst.n}"]
    for p in inst.points:
        lines.append(f"{_format_scalar(p.x)} {_format_scalar(p.y)}")
    return "\n".join(lines) + "\n"


def instance_from_text(text: str) -> Instance:
    lines = text.splitlines()
    if not lines:
        raise ParseError(1, "empty instance file")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "udg":
        raise ParseError(1, "expected 'udg <id> <n>' header")
    try:
        n = int(head[2])
    except ValueError:
        raise ParseError(1, f"bad vertex count {head[2]!r}") from None
    points: list[Point] = []
    for no, ln in enumerate(lines[1:], start=2):
        if not ln.strip():
            continue
        toks = ln.split()
        if len(toks) != 2:
            raise ParseError(no, f"expected 'x y', got {ln!r}")
        points.append(Point(_parse_scalar(toks[0], no), _parse_scalar(toks[1], no)))
    if len(points) != n:
        raise ParseError(len(lines), f"header promises {n} points, found {len(points)}")
    return build_instance(head[1], points)


def write_instance(path: str | Path, inst: Instance) -> None:
    Path(path).write_text(instance_to_text(inst), newline="\n")


def read_instance(path: str | Path) -> Instance:
    return instance_from_text(Path(path).read_text())


def graph_to_text(g: AbstractGraph) -> str:
    lines = [f"graph {g.id or 'anon'} {g.n}"]
    for u, v in sorted(g.edges()):
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def graph_from_text(text: str) -> AbstractGraph:
    lines = text.splitlines()
    if not lines:
        raise ParseError(1, "empty graph file")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "graph":
        raise ParseError(1, "expected 'graph <id> <n>' header")
    try:
        n = int(head[2])
    except ValueError:
        raise ParseError(1, f"bad vertex count {head[2]!r}") from None
    edges: list[tuple[int, int]] = []
    for no, ln in enumerate(lines[1:], start=2):
        if not ln.strip():
            continue
        toks = ln.split()
        if len(toks) != 2:
            raise ParseError(no, f"expected 'u v', got {ln!r}")
        try:
            edges.append((int(toks[0]), int(toks[1])))
        except ValueError:
            raise ParseError(no, f"bad edge {ln!r}") from None
    return AbstractGraph(n, edges, id=head[1])


def write_graph(path: str | Path, g: AbstractGraph) -> None:
    Path(path).write_text(graph_to_text(g), newline="\n")


def read_graph(path: str | Path) -> AbstractGraph:
    return graph_from_text(Path(path).read_text())
