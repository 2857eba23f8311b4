"""Finite groups as fully enumerated permutation groups.

Every group lives on a point set {0..degree-1}; elements are permutations
and a group is the breadth-first closure of its generators.  All the named
constructions (cyclic, dihedral, symmetric, alternating, projective special
linear on the projective line, direct and semidirect products, quotients by
coset action) land in this one representation, so structural queries and
order statistics have a single code path.

Exactness and simplicity beat asymptotic cleverness here: target groups have
at most ~1100 elements and a hard cap (default 20 000, overridable via the
GRPOMEGA_SIZE_CAP environment variable) keeps memory bounded.
"""

from __future__ import annotations

import math
import os
from functools import reduce
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from .factored import is_prime

DEFAULT_SIZE_CAP = 20_000
SIZE_CAP_ENV = "GRPOMEGA_SIZE_CAP"

PSL2_MAX_PRIME = 31


class GroupConstructionError(ValueError):
    """Invalid construction parameters or a set that is not the claimed subgroup."""


class GroupSizeError(RuntimeError):
    """Closure exceeded the configured element cap."""


def size_cap() -> int:
    raw = os.environ.get(SIZE_CAP_ENV)
    if raw is None:
        return DEFAULT_SIZE_CAP
    try:
        cap = int(raw)
    except ValueError as exc:
        raise GroupConstructionError(f"{SIZE_CAP_ENV} must be an integer, got {raw!r}") from exc
    if cap < 1:
        raise GroupConstructionError(f"{SIZE_CAP_ENV} must be positive, got {cap}")
    return cap


class Perm:
    """Permutation of {0..degree-1} stored as an image tuple.

    Composition is left-to-right: (a * b) applies a first, then b.
    """

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        if set(images) != set(range(len(images))):
            raise GroupConstructionError(f"not a permutation: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Perm":
        images = list(range(degree))
        for cycle in cycles:
            for i, point in enumerate(cycle):
                images[point] = cycle[(i + 1) % len(cycle)]
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Perm") -> "Perm":
        if len(self.images) != len(other.images):
            raise GroupConstructionError("cannot compose permutations of different degrees")
        other_images = other.images
        p = Perm.__new__(Perm)
        object.__setattr__(p, "images", tuple(other_images[i] for i in self.images))
        return p

    def __invert__(self) -> "Perm":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        p = Perm.__new__(Perm)
        object.__setattr__(p, "images", tuple(inv))
        return p

    def __pow__(self, k: int) -> "Perm":
        if k < 0:
            return (~self) ** (-k)
        result = Perm.identity(len(self.images))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __setattr__(self, name, value):
        raise AttributeError("Perm is immutable")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Perm):
            return NotImplemented
        return self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __lt__(self, other: "Perm") -> bool:
        return self.images < other.images

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycle_lengths(self) -> List[int]:
        seen = [False] * len(self.images)
        lengths = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            length = 0
            j = start
            while not seen[j]:
                seen[j] = True
                j = self.images[j]
                length += 1
            lengths.append(length)
        return lengths

    def order(self) -> int:
        """Least m >= 1 with self^m = identity: lcm of cycle lengths."""
        return reduce(math.lcm, self.cycle_lengths(), 1)

    def __repr__(self) -> str:
        return f"Perm({list(self.images)})"


def perm_order(g: Perm) -> int:
    return g.order()


def closure(degree: int, generators: Iterable[Perm], max_size: int | None = None) -> FrozenSet[Perm]:
    """Smallest composition-closed set containing the generators and identity.

    Breadth-first product closure; aborts with GroupSizeError above max_size
    (the configured cap when None).
    """
    gens = list(generators)
    if not gens:
        raise GroupConstructionError("closure needs at least one generator")
    for g in gens:
        if g.degree != degree:
            raise GroupConstructionError(f"generator degree {g.degree} != {degree}")
    cap = size_cap() if max_size is None else max_size
    elements = {Perm.identity(degree)}
    elements.update(gens)
    frontier = list(elements)
    while frontier:
        new_frontier = []
        for a in frontier:
            for g in gens:
                b = a * g
                if b not in elements:
                    elements.add(b)
                    new_frontier.append(b)
                    if len(elements) > cap:
                        raise GroupSizeError(
                            f"closure exceeded the {cap}-element cap on degree {degree}"
                        )
        frontier = new_frontier
    return frozenset(elements)


class FiniteGroup:
    """A fully enumerated permutation group.

    `spec` is the canonical constructor string when the group came from the
    spec mini-language, or a descriptive label for derived groups (quotients,
    subgroups promoted to groups).  `parts` records distinguished subgroups a
    construction hands out for later checks, e.g. the embedded factors of a
    product.
    """

    __slots__ = ("degree", "elements", "generators", "name", "spec", "parts", "_sorted", "_identity")

    def __init__(
        self,
        degree: int,
        elements: FrozenSet[Perm],
        generators: Sequence[Perm],
        name: str,
        spec: str,
        parts: Dict[str, FrozenSet[Perm]] | None = None,
    ):
        identity = Perm.identity(degree)
        if identity not in elements:
            raise GroupConstructionError("identity missing from element set")
        if not set(generators) <= elements:
            raise GroupConstructionError("generators must be elements")
        self.degree = degree
        self.elements = elements
        self.generators = tuple(generators)
        self.name = name
        self.spec = spec
        self.parts = dict(parts or {})
        self._sorted: Tuple[Perm, ...] | None = None
        self._identity = identity

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Perm:
        return self._identity

    def sorted_elements(self) -> Tuple[Perm, ...]:
        """Elements in image-tuple order; the deterministic iteration order."""
        if self._sorted is None:
            self._sorted = tuple(sorted(self.elements, key=lambda g: g.images))
        return self._sorted

    def __contains__(self, g: Perm) -> bool:
        return g in self.elements

    def __iter__(self):
        return iter(self.sorted_elements())

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order}, degree={self.degree})"

    # -- structural queries (brute force; fine at desk scale) --

    def require_subgroup(self, subset: Iterable[Perm]) -> FrozenSet[Perm]:
        """Validate that subset is a subgroup of this group and return it frozen."""
        H = frozenset(subset)
        if not H:
            raise GroupConstructionError("a subgroup cannot be empty")
        if not H <= self.elements:
            raise GroupConstructionError("set is not contained in the group")
        for a in H:
            for b in H:
                if a * b not in H:
                    raise GroupConstructionError("set is not closed under composition")
        return H

    def is_subgroup(self, subset: Iterable[Perm]) -> bool:
        try:
            self.require_subgroup(subset)
        except GroupConstructionError:
            return False
        return True

    def is_normal(self, H: Iterable[Perm]) -> bool:
        """True iff conjugation by every generator maps H onto itself."""
        H = self.require_subgroup(H)
        for g in self.generators:
            g_inv = ~g
            if any(g_inv * h * g not in H for h in H):
                return False
        return True

    def centralizer(self, H: Iterable[Perm]) -> FrozenSet[Perm]:
        H = self.require_subgroup(H)
        return frozenset(g for g in self.elements if all(g * h == h * g for h in H))

    def is_central(self, H: Iterable[Perm]) -> bool:
        H = self.require_subgroup(H)
        return all(g * h == h * g for h in H for g in self.generators)

    def normalizer(self, H: Iterable[Perm]) -> FrozenSet[Perm]:
        H = self.require_subgroup(H)
        members = []
        for g in self.elements:
            g_inv = ~g
            if all(g_inv * h * g in H for h in H):
                members.append(g)
        return frozenset(members)

    def conjugates(self, H: Iterable[Perm]) -> List[FrozenSet[Perm]]:
        """Distinct conjugate subgroups of H, deterministically ordered."""
        H = self.require_subgroup(H)
        seen = set()
        for g in self.elements:
            g_inv = ~g
            seen.add(frozenset(g_inv * h * g for h in H))
        return sorted(seen, key=lambda S: sorted(p.images for p in S))

    def center(self) -> FrozenSet[Perm]:
        return frozenset(
            g for g in self.elements if all(g * h == h * g for h in self.generators)
        )

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for a in gens for b in gens)

    def is_cyclic(self) -> bool:
        n = self.order
        return any(g.order() == n for g in self.elements)

    def subgroup_generated(self, gens: Iterable[Perm]) -> FrozenSet[Perm]:
        gens = list(gens)
        for g in gens:
            if g not in self.elements:
                raise GroupConstructionError("generator outside the group")
        return closure(self.degree, gens, max_size=self.order)


def _group_from_generators(
    degree: int,
    generators: Sequence[Perm],
    name: str,
    spec: str,
    max_size: int | None = None,
    parts: Dict[str, FrozenSet[Perm]] | None = None,
) -> FiniteGroup:
    elements = closure(degree, generators, max_size=max_size)
    return FiniteGroup(degree, elements, generators, name, spec, parts)


def construct_cyclic(n: int) -> FiniteGroup:
    """Cyclic group of order n as the n-cycle on n points."""
    if n < 1:
        raise GroupConstructionError(f"cyclic order must be >= 1, got {n}")
    if n == 1:
        gen = Perm.identity(1)
        return _group_from_generators(1, [gen], "C1", "cyclic:1")
    if n > size_cap():
        raise GroupSizeError(f"cyclic:{n} exceeds the {size_cap()}-element cap")
    gen = Perm([(i + 1) % n for i in range(n)])
    return _group_from_generators(n, [gen], f"C{n}", f"cyclic:{n}")


def construct_dihedral(order: int) -> FiniteGroup:
    """Dihedral group of the given (even) order, acting on the polygon vertices.

    Orders 2 and 4 have no faithful polygon action and get the standard
    degenerate representations (a 2-cycle; two commuting 2-cycles).
    """
    if order < 2 or order % 2 != 0:
        raise GroupConstructionError(f"dihedral order must be even and >= 2, got {order}")
    if order > size_cap():
        raise GroupSizeError(f"dihedral:{order} exceeds the {size_cap()}-element cap")
    m = order // 2
    name, spec = f"D{order}", f"dihedral:{order}"
    if m == 1:
        return _group_from_generators(2, [Perm([1, 0])], name, spec)
    if m == 2:
        a = Perm.from_cycles(4, [(0, 1)])
        b = Perm.from_cycles(4, [(2, 3)])
        return _group_from_generators(4, [a, b], name, spec)
    rotation = Perm([(i + 1) % m for i in range(m)])
    reflection = Perm([(m - i) % m for i in range(m)])
    return _group_from_generators(m, [rotation, reflection], name, spec)


def construct_symmetric(n: int) -> FiniteGroup:
    """Symmetric group on n points from a transposition and an n-cycle."""
    if n < 1:
        raise GroupConstructionError(f"symmetric degree must be >= 1, got {n}")
    if math.factorial(n) > size_cap():
        raise GroupSizeError(f"sym:{n} exceeds the {size_cap()}-element cap")
    name, spec = f"S{n}", f"sym:{n}"
    if n == 1:
        return _group_from_generators(1, [Perm.identity(1)], name, spec)
    gens = [Perm.from_cycles(n, [(0, 1)])]
    if n > 2:
        gens.append(Perm([(i + 1) % n for i in range(n)]))
    return _group_from_generators(n, gens, name, spec)


def construct_alternating(n: int) -> FiniteGroup:
    """Alternating group on n points from standard even generators."""
    if n < 1:
        raise GroupConstructionError(f"alternating degree must be >= 1, got {n}")
    if n > 2 and math.factorial(n) // 2 > size_cap():
        raise GroupSizeError(f"alt:{n} exceeds the {size_cap()}-element cap")
    name, spec = f"A{n}", f"alt:{n}"
    if n <= 2:
        return _group_from_generators(max(n, 1), [Perm.identity(max(n, 1))], name, spec)
    if n == 3:
        return _group_from_generators(3, [Perm.from_cycles(3, [(0, 1, 2)])], name, spec)
    three_cycle = Perm.from_cycles(n, [(0, 1, 2)])
    if n % 2 == 1:
        big = Perm([(i + 1) % n for i in range(n)])
    else:
        big = Perm.from_cycles(n, [tuple(range(1, n))])
    return _group_from_generators(n, [three_cycle, big], name, spec)


def construct_psl2(p: int) -> FiniteGroup:
    """PSL(2, p) acting on the p+1 points of the projective line.

    Points are {0..p-1} with infinity encoded as index p; generators are
    x -> x+1 and x -> -1/x.  Order p(p^2-1)/2.
    """
    if not is_prime(p) or p == 2:
        raise GroupConstructionError(f"psl2 needs an odd prime, got {p}")
    if p > PSL2_MAX_PRIME:
        raise GroupConstructionError(f"psl2 prime capped at {PSL2_MAX_PRIME}, got {p}")
    infinity = p
    translate = Perm([(x + 1) % p for x in range(p)] + [infinity])
    neg_inv = [0] * (p + 1)
    neg_inv[0] = infinity
    neg_inv[infinity] = 0
    for x in range(1, p):
        neg_inv[x] = (-pow(x, p - 2, p)) % p
    expected = p * (p * p - 1) // 2
    if expected > size_cap():
        raise GroupSizeError(f"psl2:{p} exceeds the {size_cap()}-element cap")
    group = _group_from_generators(p + 1, [translate, Perm(neg_inv)], f"L2({p})", f"psl2:{p}")
    if group.order != expected:
        raise RuntimeError(f"psl2:{p} closed to {group.order} elements, expected {expected}")
    return group


def direct_product(A: FiniteGroup, B: FiniteGroup) -> FiniteGroup:
    """Direct product acting on the disjoint union of the two point sets."""
    if A.order * B.order > size_cap():
        raise GroupSizeError(
            f"direct product order {A.order * B.order} exceeds the {size_cap()}-element cap"
        )
    dA, dB = A.degree, B.degree

    def pair(a: Perm, b: Perm) -> Perm:
        p = Perm.__new__(Perm)
        object.__setattr__(p, "images", a.images + tuple(dA + i for i in b.images))
        return p

    id_a, id_b = A.identity, B.identity
    elements = frozenset(pair(a, b) for a in A.elements for b in B.elements)
    generators = [pair(a, id_b) for a in A.generators] + [pair(id_a, b) for b in B.generators]
    parts = {
        "left": frozenset(pair(a, id_b) for a in A.elements),
        "right": frozenset(pair(id_a, b) for b in B.elements),
    }
    name = f"{A.name} x {B.name}"
    spec = f"dirprod({A.spec},{B.spec})"
    return FiniteGroup(dA + dB, elements, generators, name, spec, parts)


def semidirect_product(n: int, m: int, k: int) -> FiniteGroup:
    """C_n extended by C_m acting via x -> k*x, as permutations of n*m points.

    The pair multiplication (a,b)(c,d) = (a + k^b c, b + d) is realized by its
    right-regular representation.  Requires gcd(k, n) = 1 and k^m = 1 (mod n),
    i.e. the action is by an automorphism of order dividing m.
    """
    if n < 1 or m < 1:
        raise GroupConstructionError(f"semidirect orders must be >= 1, got ({n}, {m})")
    if math.gcd(k % n if n > 1 else 0, n) != 1:
        raise GroupConstructionError(f"invalid action: gcd({k}, {n}) != 1")
    if pow(k, m, n) != 1 % n:
        raise GroupConstructionError(f"invalid action: {k}^{m} != 1 (mod {n})")
    if n * m > size_cap():
        raise GroupSizeError(f"semidirect order {n * m} exceeds the {size_cap()}-element cap")

    def index(a: int, b: int) -> int:
        return a * m + b

    def mul(x: Tuple[int, int], y: Tuple[int, int]) -> Tuple[int, int]:
        a, b = x
        c, d = y
        return ((a + pow(k, b, n) * c) % n, (b + d) % m)

    pairs = [(a, b) for a in range(n) for b in range(m)]

    def right_mult(g: Tuple[int, int]) -> Perm:
        return Perm([index(*mul(x, g)) for x in pairs])

    gens = [right_mult((1 % n, 0)), right_mult((0, 1 % m))]
    elements = frozenset(right_mult(g) for g in pairs)
    parts = {
        "normal": frozenset(right_mult((a, 0)) for a in range(n)),
        "complement": frozenset(right_mult((0, b)) for b in range(m)),
    }
    name = f"C{n}:C{m}(k={k % n})"
    spec = f"semidirect({n},{m},{k})"
    return FiniteGroup(n * m, elements, gens, name, spec, parts)


def quotient_group(G: FiniteGroup, N: Iterable[Perm]) -> FiniteGroup:
    """The image of G acting on the cosets of a normal subgroup N."""
    N = G.require_subgroup(N)
    if not G.is_normal(N):
        raise GroupConstructionError("subgroup is not normal; quotient undefined")
    coset_index: Dict[Perm, int] = {}
    reps: List[Perm] = []
    for x in G.sorted_elements():
        if x in coset_index:
            continue
        idx = len(reps)
        reps.append(x)
        for h in N:
            coset_index[h * x] = idx
    n_cosets = len(reps)

    def coset_perm(g: Perm) -> Perm:
        p = Perm.__new__(Perm)
        object.__setattr__(p, "images", tuple(coset_index[rep * g] for rep in reps))
        return p

    gens = [coset_perm(g) for g in G.generators]
    elements = closure(n_cosets, gens, max_size=n_cosets)
    if len(elements) != n_cosets:
        raise RuntimeError(
            f"coset action closed to {len(elements)} elements, expected {n_cosets}"
        )
    name = f"{G.name}/N{len(N)}"
    spec = f"quotient({G.spec}, {len(N)})"
    return FiniteGroup(n_cosets, elements, gens, name, spec)


def _p_part(g: Perm, p: int) -> Perm:
    """The power of g whose order is the p-part of g's order."""
    o = g.order()
    v = 0
    while o % p == 0:
        o //= p
        v += 1
    return g**o  # order p^v


def find_sylow(G: FiniteGroup, p: int) -> FrozenSet[Perm]:
    """A Sylow p-subgroup of G by normalizer ascent.

    Start from the cyclic group on one p-element, then repeatedly adjoin a
    p-power-order element of the current normalizer lying outside the
    subgroup; each step multiplies the order by at least p.
    """
    if not is_prime(p):
        raise GroupConstructionError(f"{p} is not prime")
    n = G.order
    target = 1
    while n % p == 0:
        n //= p
        target *= p
    if target == 1:
        raise GroupConstructionError(f"{p} does not divide |G| = {G.order}")
    seed = None
    for g in G.sorted_elements():
        if g.order() % p == 0:
            seed = _p_part(g, p)
            break
    if seed is None:
        raise RuntimeError(f"no element of order divisible by {p} in a group of order {G.order}")
    P = G.subgroup_generated([seed])
    while len(P) < target:
        normalizer = G.normalizer(P)
        grown = False
        for z in sorted(normalizer, key=lambda g: g.images):
            zp = _p_part(z, p)
            if not zp.is_identity() and zp not in P:
                P = G.subgroup_generated(list(P) + [zp])
                grown = True
                break
        if not grown:
            raise RuntimeError("normalizer ascent stalled; this indicates an engine bug")
    return P
