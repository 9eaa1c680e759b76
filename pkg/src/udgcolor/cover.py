"""Constructive three-clique covers for stability-two unit disk instances.

The engine produces three cliques covering the vertex set, two of them
sharing a vertex, and derives from any such cover a clique partition in
which not all parts have the same cardinality.  Dispatch:

  * all points on one line          -> collinear_cover
  * some pair at squared distance   -> far_pair_cover
    at least 3
  * otherwise                       -> disk_case_cover around the exact
                                       smallest-enclosing-disk center

Every constructor re-verifies its output; a failed check raises
StructureViolation, which is unreachable on valid input and therefore
always indicates a bug rather than a data condition.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import (AbstractGraph, BoundaryOrder, Instance, build_instance,
                   instance_graph, interval_closed, interval_open, is_clique,
                   stability_witness)
from .errors import (EmptyInstance, InvalidVertex, StabilityViolated,
                     StructureViolation)
from .geom import (COLLINEAR, OUTSIDE, Point, hull_decomposition, orientation,
                   point_in_hull, smallest_enclosing_disk, sq_dist)

FAR_SQ = Fraction(3)  # far-pair threshold, inclusive: sq_dist >= 3


@dataclass(frozen=True)
class CliqueCover:
    """Three cliques whose union is V; two of them contain shared_vertex.

    The parts may overlap.  shared_vertex is None only for covers produced
    by the brute-force existence oracle without the shared requirement.
    """

    cliques: tuple[frozenset[int], frozenset[int], frozenset[int]]
    shared_vertex: int | None


@dataclass(frozen=True)
class CliquePartition:
    """Three disjoint cliques covering V, not all of the same cardinality."""

    parts: tuple[frozenset[int], frozenset[int], frozenset[int]]


@dataclass(frozen=True)
class DiskCaseTrace:
    """Everything the bounded-diameter case computed, for diagnosis.

    mode is "nonedge" (a non-adjacent consecutive boundary pair short-cut),
    "narrow" (empty middle arc, three-region cover) or "split" (full
    T+/T- redistribution).  Region sets are the priority-assigned, pairwise
    disjoint sets except that b sits in both B+ and B- and the universal
    vertex sits in every region containing it geometrically.
    """

    mode: str
    p_point: Point
    p_virtual: bool
    p_id: int
    b: int | None = None
    b_plus: int | None = None
    b_minus: int | None = None
    r_plus: int | None = None
    r_minus: int | None = None
    nonedge_pair: tuple[int, int] | None = None
    region_b_plus: frozenset[int] = frozenset()
    region_b_minus: frozenset[int] = frozenset()
    region_r: frozenset[int] = frozenset()
    region_t_plus: frozenset[int] = frozenset()
    region_t_minus: frozenset[int] = frozenset()
    split_t_plus_b: frozenset[int] = frozenset()
    split_t_plus_r: frozenset[int] = frozenset()
    split_t_plus_star: frozenset[int] = frozenset()
    split_t_minus_b: frozenset[int] = frozenset()
    split_t_minus_r: frozenset[int] = frozenset()
    split_t_minus_star: frozenset[int] = frozenset()


def _require_cover(g: AbstractGraph, cover: CliqueCover, where: str) -> None:
    from .oracles import verify_cover

    bad = verify_cover(g, cover)
    if bad is not None:
        raise StructureViolation(f"{where}: {bad.message}")


def cover_three_cliques(inst: Instance) -> tuple[CliqueCover, DiskCaseTrace | None]:
    """Three cliques covering V(G), two sharing a vertex.

    Requires stability at most two; the gate is checked here and violations
    raise StabilityViolated with the offending triple.
    """
    if inst.n == 0:
        raise EmptyInstance("cannot cover an empty instance")
    g = instance_graph(inst)
    witness = stability_witness(g)
    if witness is not None:
        raise StabilityViolated(witness)

    cover, trace = _dispatch(inst, g)
    _require_cover(g, cover, "cover_three_cliques")
    return cover, trace


def _dispatch(inst: Instance, g: AbstractGraph) -> tuple[CliqueCover, DiskCaseTrace | None]:
    n = inst.n
    everything = frozenset(range(n))

    if all(g.adjacent(i, j) for i in range(n) for j in range(i + 1, n)):
        return CliqueCover((everything, everything, frozenset()), 0), None
    if n == 2:
        # the single pair is non-adjacent here
        return CliqueCover((frozenset({0}), frozenset({0}), frozenset({1})), 0), None

    pts = inst.points
    if all(orientation(pts[0], pts[1], pts[i]) == COLLINEAR for i in range(2, n)):
        return collinear_cover(inst), None

    for i in range(n):
        for j in range(i + 1, n):
            if sq_dist(pts[i], pts[j]) >= FAR_SQ:
                return far_pair_cover(inst, i, j), None

    sed = smallest_enclosing_disk(pts)
    if sed.radius_sq > 1:
        raise StructureViolation(
            f"enclosing disk radius_sq {sed.radius_sq} exceeds 1 although all "
            f"pairs are closer than sqrt(3)")
    return disk_case_cover(inst, sed.center)


def far_pair_cover(inst: Instance, u: int, v: int) -> CliqueCover:
    """Cover built from a pair at squared distance >= 3.

    A = (N(u)\\N(v)) + u and C = (N(v)\\N(u)) + v are cliques because any
    non-adjacent pair inside either would extend to an independent triple;
    B = (N(u) & N(v)) + u is a clique because the common neighborhood of a
    far pair is one.  v goes to C so the cover reaches every vertex.
    """
    g = instance_graph(inst)
    if sq_dist(inst.points[u], inst.points[v]) < FAR_SQ:
        raise InvalidVertex(f"pair ({u},{v}) is not a far pair")
    nu = g.neighbors(u)
    nv = g.neighbors(v)
    a = frozenset(nu - nv) | {u}
    b = frozenset(nu & nv) | {u}
    c = frozenset(nv - nu) | {v}
    cover = CliqueCover((a, b, c), u)
    _require_cover(g, cover, "far_pair_cover")
    return cover


def collinear_cover(inst: Instance) -> CliqueCover:
    """Cover for instances whose points all lie on one line.

    Sorted along the line: A is everything within unit distance of the first
    point, B the remainder (a clique, else the first point would complete an
    independent triple), C the first point alone.
    """
    if inst.n == 0:
        raise EmptyInstance("cannot cover an empty instance")
    g = instance_graph(inst)
    pts = inst.points
    order = sorted(range(inst.n), key=lambda i: (pts[i].x, pts[i].y))
    first = order[0]
    a = frozenset(i for i in range(inst.n) if sq_dist(pts[first], pts[i]) <= 1)
    b = frozenset(range(inst.n)) - a
    c = frozenset({first})
    cover = CliqueCover((a, b, c), first)
    _require_cover(g, cover, "collinear_cover")
    return cover


def hollow_pivot(order: BoundaryOrder, g: AbstractGraph, v: int) -> tuple[int, int]:
    """Pivot pair (v-, v+) such that [v-,v], [v,v+] and the rest of the
    boundary are all cliques.

    Greedy construction: extend the clockwise clique prefix from v until the
    first vertex y+ breaks it (v+ is its predecessor), symmetrically y-/v-
    counterclockwise, with the shortcut v- = y+ when y- already lies inside
    [v,v+].  On a complete boundary the successor/predecessor pair is
    returned directly.
    """
    seq = order.sequence
    m = len(seq)
    pos = order.position(v)

    if all(g.adjacent(seq[a], seq[b]) for a in range(m) for b in range(a + 1, m)):
        return order.successor(v), order.predecessor(v)

    prefix = [v]
    idx = pos
    while True:
        nxt = seq[(idx + 1) % m]
        if any(not g.adjacent(nxt, w) for w in prefix):
            y_plus = nxt
            break
        prefix.append(nxt)
        idx += 1
    v_plus = prefix[-1]

    suffix = [v]
    idx = pos
    while True:
        prv = seq[(idx - 1) % m]
        if any(not g.adjacent(prv, w) for w in suffix):
            y_minus = prv
            break
        suffix.append(prv)
        idx -= 1

    v_minus = y_plus if y_minus in prefix else suffix[-1]

    middle = [w for w in seq if w not in set(interval_closed(order, v_minus, v_plus))]
    for part in (interval_closed(order, v_minus, v), interval_closed(order, v, v_plus), middle):
        if not is_clique(g, part):
            raise StructureViolation(
                f"hollow pivot produced a non-clique around vertex {v}; "
                f"only possible when stability exceeds 2")
    return v_minus, v_plus


def _complete_to(g: AbstractGraph, v: int, targets) -> bool:
    return all(g.adjacent(v, w) for w in targets if w != v)


def _pivot_candidates(order: BoundaryOrder, g: AbstractGraph, b: int):
    """All (b-, b+) with [b-,b], [b,b+] and the remaining arc cliques that
    pairwise meet in at most {b}, each with its remainder size."""
    seq = order.sequence
    m = len(seq)
    pos_b = order.position(b)

    def offset(v: int) -> int:
        return (order.position(v) - pos_b) % m

    for b_minus in seq:
        for b_plus in seq:
            if b_minus == b_plus and m > 1:
                continue
            closed = interval_closed(order, b_minus, b_plus)
            closed_set = set(closed)
            if b not in closed_set:
                continue
            arc_minus = interval_closed(order, b_minus, b)
            arc_plus = interval_closed(order, b, b_plus)
            if (set(arc_minus) & set(arc_plus)) - {b}:
                continue
            remainder = [w for w in seq if w not in closed_set]
            if not (is_clique(g, arc_minus) and is_clique(g, arc_plus)
                    and is_clique(g, remainder)):
                continue
            yield (len(remainder), offset(b_plus), offset(b_minus)), b_minus, b_plus


def disk_case_cover(inst: Instance, center: Point) -> tuple[CliqueCover, DiskCaseTrace]:
    """Cover for instances contained in a closed unit disk around center.

    The center joins the instance as a universal vertex p (an existing vertex
    is reused when the center coincides with one).  If two consecutive
    boundary vertices are non-adjacent the one-sided-line cover applies
    directly; otherwise the boundary is cut into arcs around a pivot vertex b
    with a minimal middle arc, the plane is fanned into regions from p, and
    the two triangular zones are redistributed by completeness tests.
    """
    g0 = instance_graph(inst)
    pts = list(inst.points)
    n0 = inst.n
    if n0 == 0:
        raise EmptyInstance("cannot cover an empty instance")
    for i, p in enumerate(pts):
        if sq_dist(center, p) > 1:
            raise StructureViolation(
                f"vertex {i} lies outside the unit disk around the given center")

    if center in pts:
        p_id = pts.index(center)
        virtual = False
        aug = inst
    else:
        p_id = n0
        virtual = True
        aug = build_instance(inst.id, pts + [center])
    g = instance_graph(aug)
    if not all(g.adjacent(p_id, w) for w in range(aug.n) if w != p_id):
        raise StructureViolation("universal vertex is not adjacent to every vertex")

    hd = hull_decomposition(aug.points)
    if hd.is_collinear:
        raise StructureViolation("disk case requires a two-dimensional hull")
    order = BoundaryOrder(hd.boundary)
    seq = order.sequence
    m = len(seq)

    # consecutive boundary vertices must be adjacent, else the one-sided case
    for t in range(m):
        u, w = seq[t], seq[(t + 1) % m]
        if u != w and not g.adjacent(u, w):
            return _nonedge_cover(inst, g0, g, center, p_id, virtual, u, w)

    b = next(w for w in seq if w != p_id)

    # greedy pivot first: proves a valid cut exists (and is itself a
    # candidate whenever the boundary is not complete)
    seed = hollow_pivot(order, g, b)
    best_key, b_minus, b_plus = None, None, None
    for key, cm, cp in _pivot_candidates(order, g, b):
        if best_key is None or key < best_key:
            best_key, b_minus, b_plus = key, cm, cp
    if best_key is None:
        raise StructureViolation(
            f"no admissible boundary pivot pair at {b} although the greedy "
            f"pivot {seed} satisfies the three-clique conclusion")

    middle = interval_open(order, b_plus, b_minus) if b_plus != b_minus else ()
    if middle:
        r_plus, r_minus = middle[0], middle[-1]
    else:
        r_plus, r_minus = b_minus, b_plus

    apts = aug.points
    p_point = apts[p_id]

    def hull_pts(ids) -> list[Point]:
        return [apts[w] for w in ids] + [p_point]

    regions: list[tuple[str, list[Point]]] = [
        ("B+", hull_pts(interval_closed(order, b, b_plus))),
        ("B-", hull_pts(interval_closed(order, b_minus, b))),
    ]
    if middle:
        regions.append(("R", hull_pts(interval_closed(order, r_plus, r_minus))))
        regions.append(("T+", hull_pts([b_plus, r_plus])))
        regions.append(("T-", hull_pts([r_minus, b_minus])))
    else:
        regions.append(("T+", hull_pts([b_plus, r_plus])))

    assigned: dict[str, set[int]] = {name: set() for name, _ in regions}
    for w in range(aug.n):
        if w == b:
            assigned["B+"].add(w)
            assigned["B-"].add(w)
            continue
        if w == p_id:
            for name, hull in regions:
                assigned[name].add(w)
            continue
        for name, hull in regions:
            if point_in_hull(apts[w], hull) != OUTSIDE:
                assigned[name].add(w)
                break
        else:
            raise StructureViolation(f"vertex {w} escaped every fan region")

    region_r = frozenset(assigned.get("R", set()))
    region_t_plus = frozenset(assigned["T+"])
    region_t_minus = frozenset(assigned.get("T-", set()))

    if not middle:
        parts = (frozenset(assigned["B+"]), frozenset(assigned["B-"]), region_t_plus)
        splits = {}
        mode = "narrow"
    else:
        b_plus_set = assigned["B+"]
        b_minus_set = assigned["B-"]
        t_plus_b = {t for t in region_t_plus if _complete_to(g, t, b_plus_set)}
        t_plus_r = {t for t in region_t_plus - t_plus_b if _complete_to(g, t, region_r)}
        t_plus_star = region_t_plus - t_plus_b - t_plus_r
        t_minus_b = {t for t in region_t_minus if _complete_to(g, t, b_minus_set)}
        t_minus_r = {t for t in region_t_minus - t_minus_b if _complete_to(g, t, region_r)}
        t_minus_star = region_t_minus - t_minus_b - t_minus_r
        parts = (
            frozenset(b_plus_set | t_plus_b | t_minus_star),
            frozenset(b_minus_set | t_minus_b | t_plus_star),
            frozenset(region_r | t_plus_r | t_minus_r),
        )
        splits = {
            "split_t_plus_b": frozenset(t_plus_b),
            "split_t_plus_r": frozenset(t_plus_r),
            "split_t_plus_star": frozenset(t_plus_star),
            "split_t_minus_b": frozenset(t_minus_b),
            "split_t_minus_r": frozenset(t_minus_r),
            "split_t_minus_star": frozenset(t_minus_star),
        }
        mode = "split"

    if virtual:
        parts = tuple(part - {p_id} for part in parts)  # type: ignore[assignment]
    cover = CliqueCover(parts, b)
    trace = DiskCaseTrace(
        mode=mode,
        p_point=p_point,
        p_virtual=virtual,
        p_id=p_id,
        b=b,
        b_plus=b_plus,
        b_minus=b_minus,
        r_plus=r_plus,
        r_minus=r_minus,
        region_b_plus=frozenset(assigned["B+"]),
        region_b_minus=frozenset(assigned["B-"]),
        region_r=region_r,
        region_t_plus=region_t_plus,
        region_t_minus=region_t_minus,
        **splits,
    )
    _require_cover(g0, cover, "disk_case_cover")
    return cover, trace


def _nonedge_cover(inst: Instance, g0: AbstractGraph, g: AbstractGraph,
                   center: Point, p_id: int, virtual: bool,
                   u: int, v: int) -> tuple[CliqueCover, DiskCaseTrace]:
    """Cover when the whole instance lies on one side of the line through a
    non-adjacent pair u,v: the non-neighbors of v, the common neighborhood
    plus u, and the non-neighbors of u are three cliques."""
    nu = g.neighbors(u)
    nv = g.neighbors(v)
    a = frozenset(w for w in range(g.n) if w != v and w not in nv)
    bb = frozenset(nu & nv) | {u}
    c = frozenset(w for w in range(g.n) if w != u and w not in nu)
    parts = (a, bb, c)
    if virtual:
        parts = tuple(part - {p_id} for part in parts)  # type: ignore[assignment]
    cover = CliqueCover(parts, u)
    trace = DiskCaseTrace(
        mode="nonedge",
        p_point=center if virtual else inst.points[p_id],
        p_virtual=virtual,
        p_id=p_id,
        nonedge_pair=(u, v),
    )
    _require_cover(g0, cover, "nonedge cover")
    return cover, trace


def partition_from_cover(cover: CliqueCover) -> CliquePartition:
    """Disjointify a cover into a partition with two distinct part sizes.

    The shared vertex stays in the larger of its containing cliques (ties by
    lower index); every other multiply-covered vertex goes to its lowest-index
    clique.  Each part remains a clique as a subset of one.
    """
    universe = set().union(*cover.cliques)
    if not universe:
        raise EmptyInstance("cannot partition an empty cover")
    cliques = cover.cliques
    shared = cover.shared_vertex
    keeper = None
    if shared is not None:
        containing = [i for i in range(3) if shared in cliques[i]]
        keeper = max(containing, key=lambda i: (len(cliques[i]), -i))

    parts: list[set[int]] = [set(), set(), set()]
    for w in sorted(universe):
        if w == shared:
            parts[keeper].add(w)  # type: ignore[index]
        else:
            parts[min(i for i in range(3) if w in cliques[i])].add(w)

    sizes = [len(p) for p in parts]
    if len(set(sizes)) == 1:
        raise StructureViolation(
            f"disjointification produced three equal parts of size {sizes[0]}")
    return CliquePartition(tuple(frozenset(p) for p in parts))  # type: ignore[arg-type]


# ---------------------------------------------------------------------------
# text serialization


def cover_to_text(cover: CliqueCover, instance_id: str) -> str:
    lines = [f"cover {instance_id}"]
    for i, part in enumerate(cover.cliques):
        body = " ".join(str(v) for v in sorted(part))
        lines.append(f"clique {i}: {body}".rstrip())
    shared = "-" if cover.shared_vertex is None else str(cover.shared_vertex)
    lines.append(f"shared: {shared}")
    return "\n".join(lines) + "\n"


def cover_from_text(text: str) -> tuple[str, CliqueCover]:
    from .errors import ParseError

    lines = [ln for ln in text.splitlines()]
    if not lines or not lines[0].startswith("cover "):
        raise ParseError(1, "expected 'cover <instance-id>' header")
    instance_id = lines[0].split(maxsplit=1)[1].strip()
    if len(lines) < 5:
        raise ParseError(len(lines), "cover block needs 3 clique lines and a shared line")
    cliques = []
    for i in range(3):
        ln = lines[1 + i]
        prefix = f"clique {i}:"
        if not ln.startswith(prefix):
            raise ParseError(2 + i, f"expected '{prefix} ...'")
        try:
            cliques.append(frozenset(int(tok) for tok in ln[len(prefix):].split()))
        except ValueError as exc:
            raise ParseError(2 + i, str(exc)) from None
    ln = lines[4]
    if not ln.startswith("shared:"):
        raise ParseError(5, "expected 'shared: <v>'")
    tok = ln.split(":", 1)[1].strip()
    shared = None if tok == "-" else int(tok)
    return instance_id, CliqueCover((cliques[0], cliques[1], cliques[2]), shared)


_TRACE_SETS = (
    ("region B+", "region_b_plus"),
    ("region B-", "region_b_minus"),
    ("region R", "region_r"),
    ("region T+", "region_t_plus"),
    ("region T-", "region_t_minus"),
    ("split T+B", "split_t_plus_b"),
    ("split T+R", "split_t_plus_r"),
    ("split T+*", "split_t_plus_star"),
    ("split T-B", "split_t_minus_b"),
    ("split T-R", "split_t_minus_r"),
    ("split T-*", "split_t_minus_star"),
)


def trace_to_text(trace: DiskCaseTrace, instance_id: str) -> str:
    lines = [f"trace {instance_id}", f"mode {trace.mode}"]
    lines.append(f"p {trace.p_point.x} {trace.p_point.y} "
                 f"virtual={int(trace.p_virtual)} id={trace.p_id}")
    for label, attr in (("b", "b"), ("b+", "b_plus"), ("b-", "b_minus"),
                        ("r+", "r_plus"), ("r-", "r_minus")):
        value = getattr(trace, attr)
        if value is not None:
            lines.append(f"{label} {value}")
    if trace.nonedge_pair is not None:
        lines.append(f"nonedge {trace.nonedge_pair[0]} {trace.nonedge_pair[1]}")
    for label, attr in _TRACE_SETS:
        members = " ".join(str(v) for v in sorted(getattr(trace, attr)))
        lines.append(f"{label}: {members}".rstrip())
    return "\n".join(lines) + "\n"


def trace_from_text(text: str) -> tuple[str, DiskCaseTrace]:
    from .errors import ParseError
    from .geom import point

    lines = text.splitlines()
    if not lines or not lines[0].startswith("trace "):
        raise ParseError(1, "expected 'trace <instance-id>' header")
    instance_id = lines[0].split(maxsplit=1)[1].strip()
    fields: dict = {}
    set_by_label = {label: attr for label, attr in _TRACE_SETS}
    scalar_by_label = {"b": "b", "b+": "b_plus", "b-": "b_minus",
                       "r+": "r_plus", "r-": "r_minus"}
    for no, ln in enumerate(lines[1:], start=2):
        if not ln.strip():
            continue
        if ln.startswith("mode "):
            fields["mode"] = ln.split(maxsplit=1)[1]
        elif ln.startswith("p "):
            toks = ln.split()
            fields["p_point"] = point(toks[1], toks[2])
            fields["p_virtual"] = toks[3] == "virtual=1"
            fields["p_id"] = int(toks[4].split("=", 1)[1])
        elif ln.startswith("nonedge "):
            toks = ln.split()
            fields["nonedge_pair"] = (int(toks[1]), int(toks[2]))
        elif ":" in ln and ln.split(":", 1)[0] in set_by_label:
            label, body = ln.split(":", 1)
            fields[set_by_label[label]] = frozenset(int(t) for t in body.split())
        else:
            toks = ln.split()
            if toks[0] in scalar_by_label and len(toks) == 2:
                fields[scalar_by_label[toks[0]]] = int(toks[1])
            else:
                raise ParseError(no, f"unrecognized trace line {ln!r}")
    for key in ("mode", "p_point", "p_virtual", "p_id"):
        if key not in fields:
            raise ParseError(len(lines), f"trace block is missing {key}")
    return instance_id, DiskCaseTrace(**fields)
