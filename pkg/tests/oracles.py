"""Brute-force reference implementations used only by the tests.

They share no code with the package: exact rational averages, exhaustive
enumeration of head subsets, and plain loops for association.
"""

import itertools
import math
from fractions import Fraction


def ceil_fraction(p, n):
    """ceil(p * n) evaluated on the decimal value of p."""
    return math.ceil(Fraction(str(p)) * n)


def oracle_ceec(nodes, p, bs):
    """Return (sorted head ids, {member id: head id}) for one CEEC round."""
    heads = []
    for region in {n.region for n in nodes}:
        alive = [n for n in nodes if n.alive and n.region == region]
        if not alive:
            continue
        mean = sum(Fraction(n.residual_energy) for n in alive) / len(alive)
        echs = [n for n in alive if Fraction(n.residual_energy) >= mean]
        k = max(1, ceil_fraction(p, len(alive)))

        def key(n):
            return (-n.residual_energy, math.hypot(n.x - bs[0], n.y - bs[1]), n.id)

        if len(echs) <= k:
            heads.extend(n.id for n in echs)
            continue
        # the winning subset is the one whose sorted keys are lexicographically least
        best = min(
            itertools.combinations(echs, k),
            key=lambda subset: sorted(key(n) for n in subset),
        )
        heads.extend(n.id for n in best)

    by_id = {n.id: n for n in nodes}
    membership = {}
    for n in nodes:
        if not n.alive or n.id in heads:
            continue
        best_id, best_d = None, None
        for h in sorted(heads):
            head = by_id[h]
            if head.region != n.region:
                continue
            d = (head.x - n.x) * (head.x - n.x) + (head.y - n.y) * (head.y - n.y)
            if best_d is None or d < best_d:
                best_id, best_d = h, d
        membership[n.id] = best_id
    return sorted(heads), membership
