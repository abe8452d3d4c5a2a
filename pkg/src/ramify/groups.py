"""Finite groups presented by multiplication tables.

Elements are the indices 0..n-1; the identity is located at construction.
Builders cover everything the rest of the library needs (cyclic groups,
elementary abelian groups, direct products, dihedral groups, the
quaternion group); arbitrary groups come in through ``from_table``, which
verifies the group axioms.
"""

from __future__ import annotations

from math import gcd

from .errors import InputError, NotAHomomorphism


class FiniteGroup:
    def __init__(self, table, labels=None, check: bool = True, name: str | None = None):
        self.table = tuple(tuple(row) for row in table)
        self.n = len(self.table)
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(self.n))
        self.name = name or f"group{self.n}"
        if any(len(row) != self.n for row in self.table):
            raise InputError("multiplication table must be square")
        self.identity = self._find_identity()
        if check:
            self._validate()
        self._inverses = self._find_inverses()
        self._classes = None
        self._orders = None

    # -- construction-time checks -----------------------------------------

    def _find_identity(self) -> int:
        for e in range(self.n):
            if all(self.table[e][g] == g == self.table[g][e] for g in range(self.n)):
                return e
        raise InputError("table has no identity element")

    def _validate(self):
        n = self.n
        for row in self.table:
            if sorted(row) != list(range(n)):
                raise InputError("rows must be permutations (cancellation fails)")
        for a in range(n):
            for b in range(n):
                ab = self.table[a][b]
                for c in range(n):
                    if self.table[ab][c] != self.table[a][self.table[b][c]]:
                        raise InputError("multiplication table is not associative")

    def _find_inverses(self):
        inv = [None] * self.n
        for a in range(self.n):
            for b in range(self.n):
                if self.table[a][b] == self.identity:
                    inv[a] = b
                    break
            if inv[a] is None:
                raise InputError(f"element {a} has no inverse")
        return tuple(inv)

    # -- basic operations ---------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self._inverses[a]

    def conj(self, a: int, by: int) -> int:
        return self.mul(self.mul(by, a), self.inv(by))

    def power(self, a: int, k: int) -> int:
        if k < 0:
            return self.power(self.inv(a), -k)
        result, base = self.identity, a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def element_order(self, a: int) -> int:
        if self._orders is None:
            self._orders = [None] * self.n
        if self._orders[a] is None:
            k, x = 1, a
            while x != self.identity:
                x = self.mul(x, a)
                k += 1
            self._orders[a] = k
        return self._orders[a]

    def exponent(self) -> int:
        out = 1
        for a in range(self.n):
            o = self.element_order(a)
            out = out * o // gcd(out, o)
        return out

    def is_abelian(self) -> bool:
        return all(self.table[a][b] == self.table[b][a]
                   for a in range(self.n) for b in range(a))

    def elements(self):
        return range(self.n)

    def __len__(self):
        return self.n

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.n})"

    # -- conjugacy classes ----------------------------------------------------

    def conjugacy_classes(self) -> tuple[tuple[int, ...], ...]:
        """Classes as sorted tuples, ordered by minimal element index."""
        if self._classes is None:
            seen, classes = set(), []
            for g in range(self.n):
                if g in seen:
                    continue
                cls = {self.conj(g, by) for by in range(self.n)}
                seen |= cls
                classes.append(tuple(sorted(cls)))
            self._classes = tuple(sorted(classes, key=lambda c: c[0]))
        return self._classes

    def class_index_of(self, g: int) -> int:
        for i, cls in enumerate(self.conjugacy_classes()):
            if g in cls:
                return i
        raise AssertionError("element not in any class")

    # -- subgroups and quotients ----------------------------------------------

    def closure(self, generators) -> frozenset:
        out = {self.identity}
        frontier = list(out)
        gens = [g for g in generators]
        while frontier:
            x = frontier.pop()
            for g in gens:
                for y in (self.mul(x, g), self.mul(g, x)):
                    if y not in out:
                        out.add(y)
                        frontier.append(y)
        return frozenset(out)

    def is_subgroup(self, subset) -> bool:
        s = set(subset)
        if self.identity not in s:
            return False
        return all(self.mul(a, b) in s for a in s for b in s)

    def is_normal(self, subset) -> bool:
        s = set(subset)
        return all(self.conj(h, by) in s for h in s for by in range(self.n))

    def center(self) -> frozenset:
        return frozenset(a for a in range(self.n)
                         if all(self.mul(a, b) == self.mul(b, a) for b in range(self.n)))

    def subgroup(self, subset) -> tuple["FiniteGroup", "Hom"]:
        """The subgroup on ``subset`` with its inclusion homomorphism."""
        elems = sorted(set(subset))
        if not self.is_subgroup(elems):
            raise InputError("subset is not closed under multiplication")
        index = {g: i for i, g in enumerate(elems)}
        table = [[index[self.mul(a, b)] for b in elems] for a in elems]
        H = FiniteGroup(table, labels=[self.labels[g] for g in elems], check=False,
                        name=f"{self.name}-sub{len(elems)}")
        return H, Hom(H, self, tuple(elems), check=False)

    def quotient(self, normal_subset) -> tuple["FiniteGroup", "Hom"]:
        """The quotient by a normal subgroup with its projection homomorphism."""
        N = set(normal_subset)
        if not self.is_subgroup(N):
            raise InputError("subset is not a subgroup")
        if not self.is_normal(N):
            raise InputError("subgroup is not normal")
        coset_of = [None] * self.n
        reps = []
        for g in range(self.n):
            if coset_of[g] is None:
                coset = sorted(self.mul(g, h) for h in N)
                rep_index = len(reps)
                reps.append(coset[0])
                for x in coset:
                    coset_of[x] = rep_index
        table = [[coset_of[self.mul(a, b)] for b in reps] for a in reps]
        Q = FiniteGroup(table, labels=[self.labels[r] + "N" for r in reps], check=False,
                        name=f"{self.name}-mod{len(N)}")
        return Q, Hom(self, Q, tuple(coset_of), check=False)

    # -- builders ---------------------------------------------------------------

    @staticmethod
    def trivial() -> "FiniteGroup":
        return FiniteGroup(((0,),), labels=["1"], check=False, name="1")

    @staticmethod
    def cyclic(n: int) -> "FiniteGroup":
        if n < 1:
            raise InputError("cyclic group order must be >= 1")
        table = [[(a + b) % n for b in range(n)] for a in range(n)]
        return FiniteGroup(table, labels=[f"g{a}" for a in range(n)], check=False, name=f"C{n}")

    @staticmethod
    def elementary_abelian(p: int, r: int) -> "FiniteGroup":
        n = p ** r
        def add(a, b):
            out, mult = 0, 1
            for _ in range(r):
                out += ((a + b) % p) * mult
                a, b, mult = a // p, b // p, mult * p
            return out
        table = [[add(a, b) for b in range(n)] for a in range(n)]
        return FiniteGroup(table, labels=[f"v{a}" for a in range(n)], check=False,
                           name=f"E{p}^{r}")

    @staticmethod
    def direct_product(G: "FiniteGroup", H: "FiniteGroup") -> "FiniteGroup":
        n, m = G.n, H.n
        table = [[(G.mul(a // m, b // m)) * m + H.mul(a % m, b % m)
                  for b in range(n * m)] for a in range(n * m)]
        labels = [f"({G.labels[a // m]},{H.labels[a % m]})" for a in range(n * m)]
        return FiniteGroup(table, labels=labels, check=False, name=f"{G.name}x{H.name}")

    @staticmethod
    def dihedral(n: int) -> "FiniteGroup":
        """Dihedral group of order 2n (symmetries of the n-gon)."""
        if n < 1:
            raise InputError("dihedral parameter must be >= 1")
        # element 2k = rotation r^k, element 2k+1 = reflection r^k s
        def mul(a, b):
            ka, sa = a // 2, a % 2
            kb, sb = b // 2, b % 2
            k = (ka + kb) % n if sa == 0 else (ka - kb) % n
            return 2 * k + (sa ^ sb)
        table = [[mul(a, b) for b in range(2 * n)] for a in range(2 * n)]
        labels = [f"r{a // 2}" if a % 2 == 0 else f"r{a // 2}s" for a in range(2 * n)]
        return FiniteGroup(table, labels=labels, check=False, name=f"D{n}")

    @staticmethod
    def quaternion8() -> "FiniteGroup":
        """Q8 = {1, -1, i, -i, j, -j, k, -k}."""
        names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        def mul(a, b):
            sa, xa = a % 2, a // 2
            sb, xb = b % 2, b // 2
            # units table on {1, i, j, k} with sign
            unit = [[(0, 0), (1, 0), (2, 0), (3, 0)],
                    [(1, 0), (0, 1), (3, 0), (2, 1)],
                    [(2, 0), (3, 1), (0, 1), (1, 0)],
                    [(3, 0), (2, 0), (1, 1), (0, 1)]]
            x, s = unit[xa][xb]
            return 2 * x + ((sa + sb + s) % 2)
        table = [[mul(a, b) for b in range(8)] for a in range(8)]
        return FiniteGroup(table, labels=names, check=True, name="Q8")

    @staticmethod
    def from_table(table, labels=None, name=None) -> "FiniteGroup":
        return FiniteGroup(table, labels=labels, check=True, name=name or "custom")


class Hom:
    """A group homomorphism given elementwise (domain index -> codomain index)."""

    def __init__(self, domain: FiniteGroup, codomain: FiniteGroup, mapping, check: bool = True):
        self.domain = domain
        self.codomain = codomain
        self.mapping = tuple(mapping)
        if len(self.mapping) != domain.n:
            raise NotAHomomorphism("mapping must cover every domain element")
        if check:
            for a in range(domain.n):
                for b in range(domain.n):
                    if self.mapping[domain.mul(a, b)] != codomain.mul(self.mapping[a],
                                                                      self.mapping[b]):
                        raise NotAHomomorphism(
                            f"phi({a}*{b}) != phi({a})*phi({b})")

    def __call__(self, g: int) -> int:
        return self.mapping[g]

    def image(self) -> frozenset:
        return frozenset(self.mapping)

    def kernel(self) -> frozenset:
        e = self.codomain.identity
        return frozenset(g for g in range(self.domain.n) if self.mapping[g] == e)

    def is_injective(self) -> bool:
        return len(set(self.mapping)) == self.domain.n

    def is_surjective(self) -> bool:
        return len(set(self.mapping)) == self.codomain.n

    @staticmethod
    def identity(G: FiniteGroup) -> "Hom":
        return Hom(G, G, tuple(range(G.n)), check=False)

    def __repr__(self):
        return f"Hom({self.domain.name} -> {self.codomain.name})"
