"""Combinatorics of monomial ideals: primes, multiplicities, K-polynomials.

Monomials are the packed integers of a ring from the rings module.
Every routine here is exact: multiplicities come from counting
standard monomials of localizations, associated primes from an
irreducible decomposition checked by a socle witness, K-polynomials
from the colon exact sequence, memoized on the generator set.
"""

from __future__ import annotations

from itertools import product as _cartesian

from .rings import Poly, Ring


def _minimalize(ring: Ring, monomials) -> tuple[int, ...]:
    divides = ring.divides
    kept: list[int] = []
    for m in sorted(set(monomials)):
        if not any(divides(k, m) for k in kept):
            kept.append(m)
    return tuple(kept)


class MonomialIdeal:
    """A monomial ideal held as its sorted minimal generating antichain."""

    __slots__ = ("ring", "gens")

    def __init__(self, ring: Ring, monomials=()):
        self.ring = ring
        self.gens = _minimalize(ring, monomials)

    @classmethod
    def from_polys(cls, polys):
        """Build from single-term polynomials sharing one ring."""
        rings = {p.ring for p in polys}
        if len(rings) != 1:
            raise ValueError("generators live in different rings")
        ms = []
        for p in polys:
            if len(p.terms) != 1:
                raise ValueError(f"{p!r} is not a monomial")
            ms.append(p.leading_monomial())
        return cls(rings.pop(), ms)

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.ring == other.ring and self.gens == other.gens

    def __hash__(self):
        return hash((self.ring, self.gens))

    def __repr__(self):
        inside = ", ".join(self.ring.monomial_text(m) for m in self.gens)
        return f"MonomialIdeal({inside})"

    @property
    def is_zero(self):
        return not self.gens

    @property
    def is_unit(self):
        return self.gens == (0,)

    def contains(self, m: int) -> bool:
        return any(self.ring.divides(g, m) for g in self.gens)

    def plus(self, other) -> "MonomialIdeal":
        extra = other.gens if isinstance(other, MonomialIdeal) else tuple(other)
        return MonomialIdeal(self.ring, self.gens + tuple(extra))

    def colon(self, m: int) -> "MonomialIdeal":
        gcd = self.ring.gcd
        return MonomialIdeal(self.ring, (g - gcd(g, m) for g in self.gens))

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        if self.ring != other.ring:
            raise ValueError("ideals live in different rings")
        lcm = self.ring.lcm
        return MonomialIdeal(
            self.ring, (lcm(a, b) for a in self.gens for b in other.gens)
        )

    def support(self, m: int) -> frozenset[int]:
        return frozenset(
            v for v, e in enumerate(self.ring.decode(m)) if e
        )

    def is_radical(self) -> bool:
        return all(
            all(e <= 1 for e in self.ring.decode(g)) for g in self.gens
        )

    def radical(self) -> "MonomialIdeal":
        enc = self.ring.encode
        dec = self.ring.decode
        return MonomialIdeal(
            self.ring, (enc([1 if e else 0 for e in dec(g)]) for g in self.gens)
        )

    def restricted(self, prime) -> "MonomialIdeal":
        """Localize away from a prime: zero out exponents outside it."""
        S = frozenset(prime)
        enc = self.ring.encode
        dec = self.ring.decode
        return MonomialIdeal(
            self.ring,
            (
                enc([e if v in S else 0 for v, e in enumerate(dec(g))])
                for g in self.gens
            ),
        )

    def irreducible_components(self) -> list["MonomialIdeal"]:
        """Ideals generated by pure powers whose intersection is this one.

        The list covers the unique irredundant irreducible decomposition
        but may carry redundant extras.
        """
        if self.is_zero:
            return []
        dec = self.ring.decode
        units = self.ring._units
        leaves: set[tuple[int, ...]] = set()
        seen: set[tuple[int, ...]] = set()
        stack = [self.gens]
        while stack:
            gens = stack.pop()
            if gens in seen:
                continue
            seen.add(gens)
            splittable = None
            for g in gens:
                sup = [(v, e) for v, e in enumerate(dec(g)) if e]
                if len(sup) > 1:
                    splittable = (g, sup)
                    break
            if splittable is None:
                leaves.add(gens)
                continue
            g, sup = splittable
            rest = tuple(x for x in gens if x != g)
            v, e = sup[0]
            head = e * units[v]
            stack.append(_minimalize(self.ring, rest + (head,)))
            stack.append(_minimalize(self.ring, rest + (g - head,)))
        return [
            MonomialIdeal(self.ring, gens) for gens in sorted(leaves)
        ]

    def _socle_witness(self, S: frozenset[int]) -> bool:
        J = self.restricted(S)
        if J.is_unit:
            return False
        dec = self.ring.decode
        caps = [0] * len(self.ring.names)
        for g in J.gens:
            for v, e in enumerate(dec(g)):
                if e > caps[v]:
                    caps[v] = e
        vars_sorted = sorted(S)
        if any(caps[v] == 0 for v in vars_sorted):
            return False
        units = self.ring._units
        ranges = [range(caps[v]) for v in vars_sorted]
        for exps in _cartesian(*ranges):
            m = sum(e * units[v] for v, e in zip(vars_sorted, exps))
            if J.contains(m):
                continue
            if all(J.contains(m + units[v]) for v in vars_sorted):
                return True
        return False

    def associated_primes(self) -> list[frozenset[int]]:
        """Supports of the associated primes, smallest first."""
        if self.is_zero:
            return [frozenset()]
        if self.is_unit:
            return []
        cands = {
            frozenset().union(*(self.support(g) for g in Q.gens))
            for Q in self.irreducible_components()
        }
        good = [S for S in cands if self._socle_witness(S)]
        return sorted(good, key=lambda S: (len(S), sorted(S)))

    def minimal_primes(self) -> list[frozenset[int]]:
        if self.is_zero:
            return [frozenset()]
        if self.is_unit:
            return []
        rads = {
            frozenset().union(*(self.support(g) for g in Q.gens))
            for Q in self.irreducible_components()
        }
        keep = [S for S in rads if not any(T < S for T in rads)]
        return sorted(keep, key=lambda S: (len(S), sorted(S)))

    def multiplicity_at(self, prime) -> int:
        """Length of the localization at a prime; 0 when the prime misses
        the ideal, ValueError when the prime is not minimal over it."""
        S = frozenset(prime)
        J = self.restricted(S)
        if J.is_unit:
            return 0
        if J.is_zero:
            if not S:
                return 1
            raise ValueError("localization has infinite length")
        dec = self.ring.decode
        units = self.ring._units
        memo: dict[tuple[int, ...], int] = {}

        def count(gens: tuple[int, ...]) -> int:
            if gens == (0,):
                return 0
            got = memo.get(gens)
            if got is not None:
                return got
            split = None
            covered = set()
            pures = {}
            for g in gens:
                sup = [(v, e) for v, e in enumerate(dec(g)) if e]
                if len(sup) == 1:
                    v, e = sup[0]
                    covered.add(v)
                    pures[v] = e
                elif split is None:
                    split = sup[0][0]
            if split is None:
                if covered != S:
                    raise ValueError("localization has infinite length")
                total = 1
                for e in pures.values():
                    total *= e
            else:
                x = units[split]
                total = count(_minimalize(self.ring, gens + (x,))) + count(
                    _minimalize(self.ring, tuple(g - self.ring.gcd(g, x) for g in gens))
                )
            memo[gens] = total
            return total

        return count(J.gens)

    def codimension(self) -> int:
        primes = self.minimal_primes()
        if not primes:
            raise ValueError("the unit ideal has no minimal primes")
        return min(len(S) for S in primes)

    def dimension(self) -> int:
        return len(self.ring.names) - self.codimension()

    def is_equidimensional(self) -> bool:
        return len({len(S) for S in self.minimal_primes()}) <= 1

    def degree(self) -> int:
        """Sum of multiplicities over the minimal primes of top dimension."""
        primes = self.minimal_primes()
        if primes == [frozenset()]:
            return 1
        codim = min(len(S) for S in primes)
        return sum(
            self.multiplicity_at(S) for S in primes if len(S) == codim
        )

    def facets(self) -> list[tuple[int, ...]]:
        """Complements of the minimal primes: the maximal coordinate
        subspaces inside the zero set."""
        everything = set(range(len(self.ring.names)))
        out = [tuple(sorted(everything - S)) for S in self.minimal_primes()]
        return sorted(out)

    def k_polynomial(self, target: Ring, images) -> Poly:
        """Hilbert-series numerator under a grading sending each variable
        to the packed target monomial ``images[v]``."""
        images = tuple(images)
        if len(images) != len(self.ring.names):
            raise ValueError("need one grading image per variable")
        dec = self.ring.decode
        one = Poly.constant(target, 1)
        memo: dict[tuple[int, ...], Poly] = {}

        def weight(m: int) -> Poly:
            packed = 0
            for v, e in enumerate(dec(m)):
                if e:
                    packed += e * images[v]
            return Poly(target, {packed: 1})

        def K(gens: tuple[int, ...]) -> Poly:
            if not gens:
                return one
            if gens == (0,):
                return Poly.zero(target)
            got = memo.get(gens)
            if got is not None:
                return got
            pivot = gens[-1]
            rest = gens[:-1]
            colon = _minimalize(
                self.ring, (g - self.ring.gcd(g, pivot) for g in rest)
            )
            val = K(rest) - weight(pivot) * K(colon)
            memo[gens] = val
            return val

        return K(self.gens)

    def multidegree(self, target: Ring, images) -> Poly:
        """Lowest part of the K-polynomial after each target variable v
        is replaced by 1 - v."""
        K = self.k_polynomial(target, images)
        flip = {nm: 1 - Poly.variable(target, nm) for nm in target.names}
        KK = K.map_variables(target, flip)
        if KK.is_zero:
            return KK
        low = min(target.degree(m) for m in KK.terms)
        return Poly(
            target,
            {m: c for m, c in KK.terms.items() if target.degree(m) == low},
        )


def prime_names(ring: Ring, prime) -> tuple[str, ...]:
    return tuple(ring.names[v] for v in sorted(prime))


def prime_from_names(ring: Ring, names) -> frozenset[int]:
    return frozenset(ring.index(nm) for nm in names)


def _matrix_cells(ring: Ring) -> list[tuple[int, int]]:
    cells = []
    for nm in ring.names:
        if not (nm.startswith("z[") and nm.endswith("]")):
            raise ValueError(f"{nm!r} is not a matrix variable")
        i, j = nm[2:-1].split(",")
        cells.append((int(i), int(j)))
    return cells


def grading_images(ring: Ring, target: Ring, kind: str):
    """Packed target weights per variable.

    ``standard`` sends everything to the first target variable, ``rows``
    sends z[i,j] to x{i}, ``rows-columns`` sends z[i,j] to x{i}*y{j}.
    """
    if kind == "standard":
        unit = target._units[0]
        return tuple(unit for _ in ring.names)
    cells = _matrix_cells(ring)
    if kind == "rows":
        return tuple(target.variable(f"x{i}") for i, _ in cells)
    if kind == "rows-columns":
        return tuple(
            target.variable(f"x{i}") + target.variable(f"y{j}") for i, j in cells
        )
    raise ValueError(f"unknown grading {kind!r}")
