"""Quivers, dimension vectors and their root combinatorics.

A quiver has vertices ``1..n`` and a list of arrows ``(source, target)``.
Dimension vectors are tuples indexed by vertex (vertex ``v`` sits at
position ``v - 1``). The Kronecker quiver of degree ``m`` has ``m`` arrows
from vertex 2 to vertex 1, so the simple projective sits at vertex 1 and
the other indecomposable projective has dimension vector ``(m, 1)``.
"""

from collections import deque
from dataclasses import dataclass
from functools import lru_cache


@dataclass(frozen=True)
class Quiver:
    vertex_count: int
    arrows: tuple

    def __post_init__(self):
        arrows = tuple((int(u), int(w)) for u, w in self.arrows)
        object.__setattr__(self, "arrows", arrows)
        n = self.vertex_count
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        for u, w in arrows:
            if not (1 <= u <= n and 1 <= w <= n):
                raise ValueError(f"arrow {u}->{w} has an endpoint outside 1..{n}")
        # raises on oriented cycles (including loops)
        self.topological_order()

    @classmethod
    def kronecker(cls, m):
        if m < 0:
            raise ValueError("degree must be non-negative")
        return cls(2, ((2, 1),) * m)

    @classmethod
    def linear(cls, n):
        """Type A_n oriented 1 -> 2 -> ... -> n."""
        return cls(n, tuple((i, i + 1) for i in range(1, n)))

    @property
    def vertices(self):
        return range(1, self.vertex_count + 1)

    def topological_order(self):
        """Vertices listed so that every arrow goes from earlier to later."""
        return list(_topological_order(self.vertex_count, self.arrows))

    def opposite(self):
        return Quiver(self.vertex_count, tuple((w, u) for u, w in self.arrows))

    def arrows_between(self, u, w):
        return sum(1 for a in self.arrows if a == (u, w))

    def to_json(self):
        return {"vertices": self.vertex_count, "arrows": [list(a) for a in self.arrows]}

    @classmethod
    def from_json(cls, obj):
        try:
            return cls(int(obj["vertices"]), tuple(tuple(a) for a in obj["arrows"]))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed quiver: {exc}") from exc


@lru_cache(maxsize=None)
def _topological_order(n, arrows):
    indeg = {v: 0 for v in range(1, n + 1)}
    out = {v: [] for v in range(1, n + 1)}
    for u, w in arrows:
        indeg[w] += 1
        out[u].append(w)
    ready = sorted(v for v, d in indeg.items() if d == 0)
    order = []
    while ready:
        v = ready.pop(0)
        order.append(v)
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
        ready.sort()
    if len(order) != n:
        raise ValueError("quiver has an oriented cycle")
    return tuple(order)


def _check(Q, *vectors):
    for d in vectors:
        if len(d) != Q.vertex_count:
            raise ValueError(f"dimension vector {tuple(d)} does not match a quiver with "
                             f"{Q.vertex_count} vertices")


def euler_form(Q, d, e):
    """The bilinear form sum_v d_v e_v - sum_{u->w} d_u e_w."""
    _check(Q, d, e)
    total = sum(a * b for a, b in zip(d, e))
    for u, w in Q.arrows:
        total -= d[u - 1] * e[w - 1]
    return total


def tits_form(Q, d):
    return euler_form(Q, d, d)


def symmetric_form(Q, d, e):
    return euler_form(Q, d, e) + euler_form(Q, e, d)


def simple_root(Q, i):
    return tuple(1 if v == i else 0 for v in Q.vertices)


def simple_reflection(Q, i, d):
    """s_i(d) = d - (d, alpha_i) alpha_i for the symmetrized form."""
    if not 1 <= i <= Q.vertex_count:
        raise ValueError(f"vertex {i} is not in 1..{Q.vertex_count}")
    _check(Q, d)
    c = symmetric_form(Q, d, simple_root(Q, i))
    out = list(d)
    out[i - 1] -= c
    return tuple(out)


def apply_word(Q, d, word):
    """Apply reflections left to right: ``apply_word(Q, d, [2, 1])`` is d s_2 s_1."""
    for i in word:
        d = simple_reflection(Q, i, d)
    return tuple(d)


def coxeter_word(Q, direction="forward"):
    """Reflection order realizing the Coxeter transformation.

    The forward transformation (the action of the translate on classes of
    non-projective modules) reflects at sinks first, i.e. in reverse
    topological order; the inverse reflects at sources first.
    """
    order = Q.topological_order()
    if direction == "forward":
        return list(reversed(order))
    if direction == "inverse":
        return order
    raise ValueError("direction must be 'forward' or 'inverse'")


def coxeter_transform(Q, d, direction="forward"):
    return apply_word(Q, d, coxeter_word(Q, direction))


def coxeter_matrix(Q, direction="forward"):
    """Rows are the images of the standard basis vectors."""
    return [coxeter_transform(Q, simple_root(Q, i), direction) for i in Q.vertices]


def weyl_orbit_elements(Q, bound):
    """Every vector reachable from a simple root by reflections while staying in the box.

    The box is ``[-bound, bound]`` per coordinate for quivers with at most two
    vertices and twice that for larger quivers.
    """
    limit = bound if Q.vertex_count <= 2 else 2 * bound
    start = [simple_root(Q, i) for i in Q.vertices]
    seen = set(start)
    queue = deque(start)
    while queue:
        d = queue.popleft()
        for i in Q.vertices:
            e = simple_reflection(Q, i, d)
            if e in seen or any(abs(x) > limit for x in e):
                continue
            seen.add(e)
            queue.append(e)
    return seen


def positive_real_roots(Q, bound):
    """Positive real roots with every entry in ``[0, bound]``, sorted."""
    if bound < 1:
        raise ValueError("bound must be at least 1")
    found = [d for d in weyl_orbit_elements(Q, bound)
             if all(x >= 0 for x in d) and all(x <= bound for x in d)]
    return sorted(found)


def kronecker_sequences(m, count):
    """Dimension vectors of the first ``count`` preprojectives and preinjectives."""
    if m < 1:
        raise ValueError("degree must be at least 1")
    if count < 2:
        raise ValueError("count must be at least 2")
    P = [(1, 0), (m, 1)]
    I = [(0, 1), (1, m)]
    for seq in (P, I):
        while len(seq) < count:
            a, b = seq[-1], seq[-2]
            seq.append((m * a[0] - b[0], m * a[1] - b[1]))
    return P[:count], I[:count]


def kronecker_weyl_forms(m, i):
    """The four closed Weyl-word expressions for index ``i``.

    Returns dim P_{2i}, dim P_{2i+1}, dim I_{2i}, dim I_{2i+1} computed as
    (1,0)(s2 s1)^i, (0,1)(s1 s2)^i s1, (0,1)(s1 s2)^i and (1,0)(s2 s1)^i s2.
    """
    Q = Quiver.kronecker(m)
    return (apply_word(Q, (1, 0), [2, 1] * i),
            apply_word(Q, (0, 1), [1, 2] * i + [1]),
            apply_word(Q, (0, 1), [1, 2] * i),
            apply_word(Q, (1, 0), [2, 1] * i + [2]))


def kronecker_index(m, d):
    """Orbit index j of the rigid object with dimension vector d.

    Preprojective P_j has index j >= 0 and preinjective I_k has index -3 - k.
    Returns None when d is not the dimension vector of a preprojective or
    preinjective module.
    """
    d = tuple(d)
    if m < 2 or any(x < 0 for x in d) or sum(d) == 0:
        return None
    Q = Quiver.kronecker(m)
    if tits_form(Q, d) != 1:
        return None
    count = 2
    while True:
        P, I = kronecker_sequences(m, count)
        if d == P[-1]:
            return count - 1
        if d == I[-1]:
            return -3 - (count - 1)
        if min(P[-1]) > max(d) and min(I[-1]) > max(d):
            if d in P:
                return P.index(d)
            if d in I:
                return -3 - I.index(d)
            return None
        count += 1
