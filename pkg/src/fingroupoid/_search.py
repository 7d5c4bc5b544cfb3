"""Backtracking search for bijections commuting with labelled partial maps."""

from __future__ import annotations


def find_equivariant_bijection(left, right, key, moves):
    """Bijection ``phi: left -> right`` with ``key(phi(p)) == key(p)`` and
    ``phi(m(p)) == m(phi(p))`` for every move.

    ``moves`` is a list of pairs ``(m_left, m_right)``; each is a function
    returning the image of a point or ``None`` when undefined.  Definedness
    must match as well.  Orbits of ``left`` are handled one at a time: once
    the root of an orbit has an image, the rest of the orbit is forced.
    """
    left, right = list(left), list(right)
    if len(left) != len(right):
        return None
    by_key = {}
    for q in right:
        by_key.setdefault(key(q), []).append(q)
    if {k: len(v) for k, v in by_key.items()} != _key_counts(left, key):
        return None

    # orbits of the left carrier under the moves (forward only is enough,
    # since every move we use comes with its inverse among the moves)
    seen, orbits = set(), []
    for p in left:
        if p in seen:
            continue
        seen.add(p)
        orbit, frontier = [p], [p]
        while frontier:
            nxt = []
            for x in frontier:
                for ml, _ in moves:
                    y = ml(x)
                    if y is not None and y not in seen:
                        seen.add(y)
                        orbit.append(y)
                        nxt.append(y)
            frontier = nxt
        orbits.append(orbit)

    phi, used = {}, set()

    def propagate(root, image):
        local = {root: image}
        frontier = [root]
        while frontier:
            nxt = []
            for x in frontier:
                for ml, mr in moves:
                    y, z = ml(x), mr(local[x])
                    if (y is None) != (z is None):
                        return None
                    if y is None:
                        continue
                    if y in local:
                        if local[y] != z:
                            return None
                    else:
                        if key(y) != key(z):
                            return None
                        local[y] = z
                        nxt.append(y)
            frontier = nxt
        images = set(local.values())
        if len(images) != len(local) or images & used:
            return None
        return local

    def search(i):
        if i == len(orbits):
            return True
        root = orbits[i][0]
        for cand in by_key.get(key(root), []):
            if cand in used:
                continue
            local = propagate(root, cand)
            if local is None:
                continue
            phi.update(local)
            used.update(local.values())
            if search(i + 1):
                return True
            for x, y in local.items():
                del phi[x]
                used.discard(y)
        return False

    return dict(phi) if search(0) else None


def _key_counts(items, key):
    counts = {}
    for p in items:
        k = key(p)
        counts[k] = counts.get(k, 0) + 1
    return counts
