"""Exhaustive enumeration, counting formulas, and the cross-check suite.

Everything here is exact integer arithmetic at desk scale.  verify_all runs
every counting theorem and bijection against independent brute-force
oracles and reports one pass/fail per check.
"""

from __future__ import annotations

import functools
import itertools
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .factorizations import (
    TranspositionSeq,
    compose_in_order,
    enumerate_factorizations,
    prefix_cycle_counts,
    successor_cycle,
    transpositions_to_game,
)
from .game import PlaySequence, apply_move, new_game, replay
from .parking import ParkingFunction, game_to_parking, is_parking_function, parking_to_game
from .poset import build_poset, games_with_endstate, linear_extensions
from .trees import (
    count_endstates,
    endstate_to_tree,
    enumerate_noncrossing_trees,
    find_primary_edge,
    is_noncrossing_tree,
    is_pivotable_clockwise,
    primary_edges,
    tree_to_canonical_game,
)

# Default desk-scale cutoffs per check; selecting a check by name overrides.
SIGNATURE_LIMIT = 7
PARKING_LIMIT = 7
FACTORIZATION_IMAGE_LIMIT = 5
FACTORIZATION_PRODUCT_LIMIT = 7
POSET_LIMIT = 6
CYCLE_GROWTH_LIMIT = 6
PRIMARY_LIMIT = 7
PLAY_LIMIT = 9


def enumerate_games(n: int, first_arc=None):
    """Every complete legal play exactly once, depth-first, trying arcs in
    lexicographic order at each stage.  Optionally restricted to plays whose
    first move draws `first_arc` (for partitioned runs)."""
    if n < 1:
        raise ValueError(f"game order must be positive, got {n}")

    def rec(state, prefix):
        if state.is_complete():
            yield PlaySequence.of(n, prefix)
            return
        options = []
        for si, sg in enumerate(state.subgames):
            m = len(sg)
            for p in range(m):
                for q in range(p + 1, m):
                    arc = (min(sg[p][0], sg[q][0]), max(sg[p][0], sg[q][0]))
                    options.append((arc, si, p, q))
        for arc, si, p, q in sorted(options):
            if first_arc is not None and not prefix and arc != tuple(first_arc):
                continue
            yield from rec(apply_move(state, si, p, q), prefix + [arc])

    yield from rec(new_game(n), [])


def count_plays(n: int) -> int:
    """Closed form n^(n-2); the empty product gives 1 at n = 1."""
    if n < 1:
        raise ValueError(f"game order must be positive, got {n}")
    return 1 if n == 1 else n ** (n - 2)


@functools.cache
def count_plays_recursive(n: int) -> int:
    """Play count by the split recursion: half of n times the sum over first
    split sizes i of C(n-2, i-1) * b_i * b_(n-i)."""
    if n < 1:
        raise ValueError(f"game order must be positive, got {n}")
    if n == 1:
        return 1
    total = sum(
        math.comb(n - 2, i - 1) * count_plays_recursive(i) * count_plays_recursive(n - i)
        for i in range(1, n)
    )
    if (n * total) % 2:
        raise ArithmeticError(f"recursion sum for n={n} is not divisible by 2 after scaling")
    return n * total // 2


def variant_counts(n: int) -> tuple:
    """(sphere endstates, sphere plays, plane endstates, plane plays).

    The star-on-a-sphere game is the disk game in disguise; the plane-star
    counts are n times the sphere counts.
    """
    a, b = count_endstates(n), count_plays(n)
    return (a, b, n * a, n * b)


@dataclass
class CountReport:
    n: int
    formula_a_n: int
    formula_b_n: int
    recursion_b_n: int
    plays_enumerated: int | None = None
    endstates_distinct: int | None = None
    pf_image_size: int | None = None
    fact_image_size: int | None = None
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)

    def to_json(self) -> str:
        obj = {
            "n": self.n,
            "plays_enumerated": self.plays_enumerated,
            "endstates_distinct": self.endstates_distinct,
            "formula_a_n": self.formula_a_n,
            "formula_b_n": self.formula_b_n,
            "recursion_b_n": self.recursion_b_n,
            "pf_image_size": self.pf_image_size,
            "fact_image_size": self.fact_image_size,
            "checks": {name: ok for name, ok in self.checks},
            "passed": self.passed,
        }
        return json.dumps(obj, sort_keys=True)

    def to_table(self) -> str:
        lines = [
            f"n                 {self.n}",
            f"plays enumerated  {self.plays_enumerated}",
            f"endstates         {self.endstates_distinct}",
            f"formula a_n       {self.formula_a_n}",
            f"formula b_n       {self.formula_b_n}",
            f"recursion b_n     {self.recursion_b_n}",
            f"parking image     {self.pf_image_size}",
            f"factorizations    {self.fact_image_size}",
        ]
        for name, ok in self.checks:
            lines.append(f"{'PASS' if ok else 'FAIL'}  {name}")
        lines.append(f"overall: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)


def _play_stats(n, first_arc, flags):
    """Aggregates over the plays with a given first arc (or all plays)."""
    stats = {
        "count": 0,
        "signatures": set(),
        "parkings": set(),
        "parking_roundtrip_ok": True,
        "products_ok": True,
        "growth_ok": True,
        "transposition_seqs": set(),
        "transposition_roundtrip_ok": True,
    }
    successor = successor_cycle(n)
    for play in enumerate_games(n, first_arc=first_arc):
        stats["count"] += 1
        if flags.get("signatures"):
            stats["signatures"].add(frozenset(tuple(sorted(arc)) for arc in play.moves))
        need_replay = (
            flags.get("parking") or flags.get("product") or flags.get("image") or flags.get("growth")
        )
        if not need_replay:
            continue
        state = replay(play)
        ccw = tuple(tuple(sorted(rec.ccw_pair)) for rec in state.history)
        if flags.get("parking"):
            values = tuple(min(pair) for pair in ccw)
            stats["parkings"].add(values)
            back = parking_to_game(ParkingFunction(n, values))
            if back.moves != play.moves:
                stats["parking_roundtrip_ok"] = False
        if flags.get("product") or flags.get("image") or flags.get("growth"):
            if compose_in_order(n, ccw) != successor:
                stats["products_ok"] = False
                continue
            if flags.get("growth"):
                counts = prefix_cycle_counts(TranspositionSeq(n, ccw))
                if counts != list(range(1, n + 1)):
                    stats["growth_ok"] = False
            if flags.get("image"):
                stats["transposition_seqs"].add(ccw)
                back = transpositions_to_game(TranspositionSeq(n, ccw))
                if back.moves != play.moves:
                    stats["transposition_roundtrip_ok"] = False
    return stats


def _play_stats_args(args):
    return _play_stats(*args)


def _merge_stats(parts):
    merged = None
    for part in parts:
        if merged is None:
            merged = part
            continue
        merged["count"] += part["count"]
        merged["signatures"] |= part["signatures"]
        merged["parkings"] |= part["parkings"]
        merged["transposition_seqs"] |= part["transposition_seqs"]
        for key in (
            "parking_roundtrip_ok",
            "products_ok",
            "growth_ok",
            "transposition_roundtrip_ok",
        ):
            merged[key] = merged[key] and part[key]
    return merged


CHECK_NAMES = (
    "play_count_power",
    "play_count_recursion",
    "endstate_count",
    "signatures_are_noncrossing_trees",
    "tree_bijection_image",
    "realization_round_trip",
    "parking_injective",
    "parking_image",
    "parking_round_trip",
    "factorization_product",
    "factorization_image",
    "cycle_growth",
    "poset_linear_extensions",
    "primary_edge_coherence",
    "variant_formulas",
)


def verify_all(n: int, checks=None, jobs: int = 1) -> CountReport:
    """Run the whole cross-check suite at order n and return a CountReport.

    By default each check runs only up to its desk-scale cutoff; naming a
    check explicitly in `checks` forces it regardless of the cutoff.
    """
    if checks is not None:
        unknown = set(checks) - set(CHECK_NAMES)
        if unknown:
            raise ValueError(f"unknown checks: {sorted(unknown)}; known: {list(CHECK_NAMES)}")
    selected = set(checks) if checks is not None else None

    def want(name, limit):
        if selected is not None:
            return name in selected
        return n <= limit

    report = CountReport(
        n=n,
        formula_a_n=count_endstates(n),
        formula_b_n=count_plays(n),
        recursion_b_n=count_plays_recursive(n),
    )
    checks_out = report.checks

    flags = {
        "signatures": want("endstate_count", SIGNATURE_LIMIT)
        or want("signatures_are_noncrossing_trees", SIGNATURE_LIMIT)
        or want("tree_bijection_image", SIGNATURE_LIMIT),
        "parking": want("parking_injective", PARKING_LIMIT)
        or want("parking_image", PARKING_LIMIT)
        or want("parking_round_trip", PARKING_LIMIT),
        "product": want("factorization_product", FACTORIZATION_PRODUCT_LIMIT),
        "image": want("factorization_image", FACTORIZATION_IMAGE_LIMIT),
        "growth": want("cycle_growth", CYCLE_GROWTH_LIMIT),
    }

    enumerate_plays = want("play_count_power", PLAY_LIMIT) or any(flags.values())
    stats = None
    if enumerate_plays:
        if jobs > 1 and n >= 2:
            first_arcs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                parts = list(
                    pool.map(_play_stats_args, [(n, arc, flags) for arc in first_arcs])
                )
            stats = _merge_stats(parts)
        else:
            stats = _play_stats(n, None, flags)
        report.plays_enumerated = stats["count"]

    if want("play_count_power", PLAY_LIMIT) and stats is not None:
        checks_out.append(("play_count_power", stats["count"] == count_plays(n)))
    if selected is None or "play_count_recursion" in selected:
        checks_out.append(("play_count_recursion", count_plays_recursive(n) == count_plays(n)))

    if flags["signatures"] and stats is not None:
        signatures = stats["signatures"]
        report.endstates_distinct = len(signatures)
        if want("endstate_count", SIGNATURE_LIMIT):
            checks_out.append(("endstate_count", len(signatures) == count_endstates(n)))
        if want("signatures_are_noncrossing_trees", SIGNATURE_LIMIT):
            checks_out.append(
                (
                    "signatures_are_noncrossing_trees",
                    all(is_noncrossing_tree(n, sig) for sig in signatures),
                )
            )
        if want("tree_bijection_image", SIGNATURE_LIMIT):
            ncts = {tree.edges for tree in enumerate_noncrossing_trees(n)}
            checks_out.append(("tree_bijection_image", signatures == ncts))

    if want("realization_round_trip", SIGNATURE_LIMIT):
        ok = True
        for tree in enumerate_noncrossing_trees(n):
            play = tree_to_canonical_game(tree)
            state = replay(play)
            if endstate_to_tree(state) != tree:
                ok = False
                break
        checks_out.append(("realization_round_trip", ok))

    if flags["parking"] and stats is not None:
        parkings = stats["parkings"]
        report.pf_image_size = len(parkings)
        if want("parking_injective", PARKING_LIMIT):
            checks_out.append(("parking_injective", len(parkings) == stats["count"]))
        if want("parking_image", PARKING_LIMIT):
            brute = {
                values
                for values in itertools.product(range(1, n), repeat=n - 1)
                if is_parking_function(n, values)
            }
            checks_out.append(("parking_image", parkings == brute))
        if want("parking_round_trip", PARKING_LIMIT):
            ok = stats["parking_roundtrip_ok"]
            for values in parkings:
                pf = ParkingFunction(n, values)
                if game_to_parking(parking_to_game(pf)).values != values:
                    ok = False
                    break
            checks_out.append(("parking_round_trip", ok))

    if flags["product"] and stats is not None:
        checks_out.append(("factorization_product", stats["products_ok"]))
    if flags["image"] and stats is not None:
        brute = {seq.transpositions for seq in enumerate_factorizations(n)}
        ok = (
            stats["transposition_seqs"] == brute
            and len(stats["transposition_seqs"]) == stats["count"]
            and stats["transposition_roundtrip_ok"]
        )
        report.fact_image_size = len(stats["transposition_seqs"])
        checks_out.append(("factorization_image", ok))
    if flags["growth"] and stats is not None:
        checks_out.append(("cycle_growth", stats["growth_ok"]))

    if want("poset_linear_extensions", POSET_LIMIT):
        ok = True
        total = 0
        for tree in enumerate_noncrossing_trees(n):
            extensions = set(linear_extensions(build_poset(tree)))
            orders = {tuple(tuple(sorted(arc)) for arc in p.moves) for p in games_with_endstate(tree)}
            total += len(extensions)
            if extensions != orders:
                ok = False
                break
        checks_out.append(("poset_linear_extensions", ok and total == count_plays(n)))

    if want("primary_edge_coherence", PRIMARY_LIMIT):
        ok = True
        for tree in enumerate_noncrossing_trees(n):
            if tree.n < 2:
                continue
            prim = primary_edges(tree)
            if not prim:
                ok = False
                break
            if any((e in prim) == is_pivotable_clockwise(tree, e) for e in tree.edges):
                ok = False
                break
            if build_poset(tree).minimal_elements() != prim:
                ok = False
                break
            if any(find_primary_edge(tree, start=v) not in prim for v in range(1, n + 1)):
                ok = False
                break
        checks_out.append(("primary_edge_coherence", ok))

    if selected is None or "variant_formulas" in selected:
        a, b, plane_a, plane_b = variant_counts(n)
        checks_out.append(
            ("variant_formulas", plane_a == n * a and plane_b == n * b and a == count_endstates(n))
        )

    return report
