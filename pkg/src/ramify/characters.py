"""Exact character theory for finite groups.

Class functions take values in cyclotomic fields; all inner products,
inductions and decompositions are exact.  Irreducible tables for abelian
groups are built as homomorphisms into roots of unity; nonabelian tables
are computed modulo a prime l = 1 (mod exponent) by splitting the common
eigenvectors of the class-sum matrices, lifted to Q(zeta_exponent) by
Fourier inversion over the power maps, and certified by exact
orthogonality before they are returned.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import Cyclotomic
from .errors import (
    ComputationError,
    GroupMismatch,
    InputError,
    NonIntegerDimension,
    OrderBoundExceeded,
)
from .groups import FiniteGroup, Hom

IRREDUCIBLE_ORDER_BOUND = 256


def _as_cyclotomic(v) -> Cyclotomic:
    if isinstance(v, Cyclotomic):
        return v
    return Cyclotomic.rational(v)


class ClassFunction:
    """A function on a finite group constant on conjugacy classes."""

    __slots__ = ("group", "values")

    def __init__(self, group: FiniteGroup, values, check: bool = True):
        self.group = group
        self.values = tuple(_as_cyclotomic(v) for v in values)
        if len(self.values) != group.n:
            raise InputError("need one value per group element")
        if check:
            for cls in group.conjugacy_classes():
                v0 = self.values[cls[0]]
                if any(self.values[g] != v0 for g in cls[1:]):
                    raise InputError("values are not constant on conjugacy classes")

    @classmethod
    def from_class_values(cls, group: FiniteGroup, class_values) -> "ClassFunction":
        values = [None] * group.n
        classes = group.conjugacy_classes()
        if len(class_values) != len(classes):
            raise InputError("need one value per conjugacy class")
        for c, v in zip(classes, class_values):
            for g in c:
                values[g] = _as_cyclotomic(v)
        return cls(group, values, check=False)

    def __call__(self, g: int) -> Cyclotomic:
        return self.values[g]

    def class_values(self) -> tuple[Cyclotomic, ...]:
        return tuple(self.values[c[0]] for c in self.group.conjugacy_classes())

    def degree(self) -> Cyclotomic:
        return self.values[self.group.identity]

    # -- pointwise algebra ---------------------------------------------------

    def _same_group(self, other):
        if self.group is not other.group:
            raise GroupMismatch("class functions live on different groups")

    def __add__(self, other):
        self._same_group(other)
        return ClassFunction(self.group,
                             [a + b for a, b in zip(self.values, other.values)], check=False)

    def __sub__(self, other):
        self._same_group(other)
        return ClassFunction(self.group,
                             [a - b for a, b in zip(self.values, other.values)], check=False)

    def __mul__(self, other):
        if isinstance(other, ClassFunction):
            self._same_group(other)
            return ClassFunction(self.group,
                                 [a * b for a, b in zip(self.values, other.values)], check=False)
        return ClassFunction(self.group, [v * other for v in self.values], check=False)

    __rmul__ = __mul__

    def __neg__(self):
        return ClassFunction(self.group, [-v for v in self.values], check=False)

    def dual(self) -> "ClassFunction":
        """g -> value at g^(-1)."""
        G = self.group
        return ClassFunction(G, [self.values[G.inv(g)] for g in G.elements()], check=False)

    def __eq__(self, other):
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.group is other.group and all(
            a == b for a, b in zip(self.values, other.values))

    __hash__ = None

    def __repr__(self):
        vals = ", ".join(repr(v) for v in self.class_values())
        return f"ClassFunction({self.group.name}: {vals})"


def inner_product(phi: ClassFunction, psi: ClassFunction) -> Cyclotomic:
    """(1/|G|) sum phi(g) psi(g^(-1)); symmetric and exact."""
    if phi.group is not psi.group:
        raise GroupMismatch("inner product needs a common group")
    G = phi.group
    acc = Cyclotomic.zero()
    for g in G.elements():
        acc = acc + phi.values[g] * psi.values[G.inv(g)]
    return acc * Fraction(1, G.n)


def trivial_character(G: FiniteGroup) -> ClassFunction:
    return ClassFunction(G, [1] * G.n, check=False)


def regular_character(G: FiniteGroup) -> ClassFunction:
    values = [0] * G.n
    values[G.identity] = G.n
    return ClassFunction(G, values, check=False)


def augmentation_character(G: FiniteGroup) -> ClassFunction:
    values = [-1] * G.n
    values[G.identity] = G.n - 1
    return ClassFunction(G, values, check=False)


def standard_characters(G: FiniteGroup):
    return trivial_character(G), regular_character(G), augmentation_character(G)


# -- induction and restriction ------------------------------------------------


def restrict(alpha: Hom, phi: ClassFunction) -> ClassFunction:
    """Pullback phi(alpha(.)) along a homomorphism into phi's group."""
    if phi.group is not alpha.codomain:
        raise GroupMismatch("restriction needs a class function on the codomain")
    return ClassFunction(alpha.domain, [phi.values[alpha(h)] for h in alpha.domain.elements()],
                         check=False)


def induce(alpha: Hom, phi: ClassFunction) -> ClassFunction:
    """Induced class function along alpha, via the surjective-injective factoring."""
    if phi.group is not alpha.domain:
        raise GroupMismatch("induction needs a class function on the domain")
    H, G = alpha.domain, alpha.codomain
    if not alpha.is_injective() and not alpha.is_surjective():
        image = sorted(alpha.image())
        I, incl = G.subgroup(image)
        to_sub = {g: i for i, g in enumerate(image)}
        surj = Hom(H, I, tuple(to_sub[alpha(h)] for h in H.elements()), check=False)
        return induce(incl, induce(surj, phi))
    if alpha.is_injective():
        pre = {alpha(h): h for h in H.elements()}
        scale = Fraction(1, H.n)
        values = []
        for g in G.elements():
            acc = Cyclotomic.zero()
            for x in G.elements():
                c = G.conj(g, x)
                if c in pre:
                    acc = acc + phi.values[pre[c]]
            values.append(acc * scale)
        return ClassFunction(G, values, check=False)
    # surjective case: average over fibers
    kernel_size = H.n // G.n
    scale = Fraction(1, kernel_size)
    sums = [Cyclotomic.zero()] * G.n
    for h in H.elements():
        g = alpha(h)
        sums[g] = sums[g] + phi.values[h]
    return ClassFunction(G, [s * scale for s in sums], check=False)


# -- irreducible characters ---------------------------------------------------


def irreducible_characters(G: FiniteGroup, bound: int = IRREDUCIBLE_ORDER_BOUND):
    """Complete list of irreducible characters in a canonical order."""
    cached = getattr(G, "_irreducible_cache", None)
    if cached is not None:
        return cached
    if G.n > bound:
        raise OrderBoundExceeded(f"|G| = {G.n} exceeds the bound {bound}")
    if G.is_abelian():
        table = _irreducibles_abelian(G)
    else:
        table = _irreducibles_dixon(G)
    m = G.exponent()
    table.sort(key=lambda chi: (chi.degree().integer_value(),
                                [v.sort_key(m) for v in chi.class_values()]))
    _certify_table(G, table)
    G._irreducible_cache = tuple(table)
    return G._irreducible_cache


def _certify_table(G, table):
    classes = G.conjugacy_classes()
    if len(table) != len(classes):
        raise ComputationError("character count does not match class count")
    total = 0
    for chi in table:
        total += chi.degree().integer_value() ** 2
    if total != G.n:
        raise ComputationError("degrees fail sum of squares = |G|")
    for i, chi in enumerate(table):
        for j in range(i + 1):
            ip = inner_product(chi, table[j])
            expected = 1 if i == j else 0
            if not (ip.is_rational() and ip.rational_value() == expected):
                raise ComputationError("orthogonality certification failed")


def _irreducibles_abelian(G: FiniteGroup):
    m = G.exponent()
    chars = [{G.identity: 0}]  # each char maps element -> exponent of zeta_m
    sub = [G.identity]
    sub_set = {G.identity}
    for g in G.elements():
        if g in sub_set:
            continue
        d, x = 1, g
        while x not in sub_set:
            x = G.mul(x, g)
            d += 1
        g_to_d = G.power(g, d)
        powers = [G.power(g, j) for j in range(d)]
        new_chars = []
        for chi in chars:
            a = chi[g_to_d]
            if a % d != 0:
                raise ComputationError("abelian character extension failed")
            b0 = (a // d) % m
            for tshift in range(d):
                b = (b0 + tshift * (m // d)) % m
                ext = dict(chi)
                for h in sub:
                    for j in range(1, d):
                        ext[G.mul(h, powers[j])] = (chi[h] + j * b) % m
                new_chars.append(ext)
        chars = new_chars
        sub = [G.mul(h, p) for h in sub for p in powers]
        sub_set = set(sub)
    out = []
    for chi in chars:
        out.append(ClassFunction(
            G, [Cyclotomic.zeta(m, chi[g]) for g in G.elements()], check=False))
    return out


# -- modular linear algebra for the nonabelian table --------------------------


def _rref_mod(rows, p):
    rows = [list(r) for r in rows]
    pivots = []
    rank = 0
    cols = len(rows[0]) if rows else 0
    for col in range(cols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] % p), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        rows[rank] = [(x * inv) % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] % p:
                c = rows[i][col]
                rows[i] = [(x - c * y) % p for x, y in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
    return rows[:rank], pivots


def _nullspace_mod(rows, p):
    cols = len(rows[0])
    rref, pivots = _rref_mod(rows, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * cols
        v[f] = 1
        for r, c in zip(rref, pivots):
            v[c] = (-r[f]) % p
        basis.append(v)
    return basis


def _mat_mul_mod(A, B, p):
    rows, inner, cols = len(A), len(B), len(B[0])
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        Ai = A[i]
        for k in range(inner):
            a = Ai[k]
            if a:
                Bk = B[k]
                Oi = out[i]
                for j in range(cols):
                    Oi[j] = (Oi[j] + a * Bk[j]) % p
    return out


def _det_mod(A, p):
    A = [row[:] for row in A]
    n = len(A)
    det = 1
    for col in range(n):
        piv = next((i for i in range(col, n) if A[i][col] % p), None)
        if piv is None:
            return 0
        if piv != col:
            A[col], A[piv] = A[piv], A[col]
            det = -det
        det = (det * A[col][col]) % p
        inv = pow(A[col][col], p - 2, p)
        for i in range(col + 1, n):
            if A[i][col]:
                c = (A[i][col] * inv) % p
                A[i] = [(x - c * y) % p for x, y in zip(A[i], A[col])]
    return det % p


def _charpoly_eigenvalues(A, p):
    """Roots in F_p of det(A - x I), via interpolation then a full root scan."""
    n = len(A)
    pts = list(range(n + 1))
    vals = []
    for lam in pts:
        M = [[(A[i][j] - (lam if i == j else 0)) % p for j in range(n)] for i in range(n)]
        vals.append(_det_mod(M, p))
    # Lagrange interpolation to coefficient form
    coeffs = [0] * (n + 1)
    for i, xi in enumerate(pts):
        num = [1]
        denom = 1
        for j, xj in enumerate(pts):
            if i == j:
                continue
            new = [0] * (len(num) + 1)
            for k, c in enumerate(num):
                new[k] = (new[k] - c * xj) % p
                new[k + 1] = (new[k + 1] + c) % p
            num = new
            denom = (denom * (xi - xj)) % p
        scale = (vals[i] * pow(denom, p - 2, p)) % p
        for k, c in enumerate(num):
            coeffs[k] = (coeffs[k] + c * scale) % p
    roots = []
    for lam in range(p):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * lam + c) % p
        if acc == 0:
            roots.append(lam)
    return roots


def _primitive_root(p):
    factors = []
    n, d = p - 1, 2
    while d * d <= n:
        if n % d == 0:
            factors.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        factors.append(n)
    for t in range(2, p):
        if all(pow(t, (p - 1) // q, p) != 1 for q in factors):
            return t
    raise AssertionError("unreachable")


def _dixon_prime(order, exponent, min_size):
    ell = exponent + 1
    while True:
        if ell > min_size and ell * ell > 4 * order and _is_prime_int(ell):
            return ell
        ell += exponent


def _is_prime_int(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _irreducibles_dixon(G: FiniteGroup):
    classes = G.conjugacy_classes()
    r = len(classes)
    reps = [c[0] for c in classes]
    sizes = [len(c) for c in classes]
    class_idx = [G.class_index_of(g) for g in G.elements()]
    m = G.exponent()
    ell = _dixon_prime(G.n, m, r + 1)
    e_cls = class_idx[G.identity]

    # class-sum matrices, transposed so central characters are row eigenvectors
    mats = []
    for i in range(r):
        M = [[0] * r for _ in range(r)]
        for k in range(r):
            zk = reps[k]
            for x in classes[i]:
                j = class_idx[G.mul(G.inv(x), zk)]
                M[j][k] += 1
        mats.append([[M[k][j] % ell for k in range(r)] for j in range(r)])

    spaces = [[[1 if i == j else 0 for j in range(r)] for i in range(r)]]
    spaces[0], _ = _rref_mod(spaces[0], ell)
    for M in mats:
        if all(len(B) == 1 for B in spaces):
            break
        refined = []
        for B in spaces:
            if len(B) == 1:
                refined.append(B)
                continue
            _, pivots = _rref_mod(B, ell)
            BM = _mat_mul_mod(B, M, ell)
            A = [[BM[s][c] for c in pivots] for s in range(len(B))]
            for lam in _charpoly_eigenvalues(A, ell):
                # left eigenvectors: right nullspace of the transpose
                shifted = [[(A[j][i] - (lam if i == j else 0)) % ell
                            for j in range(len(A))] for i in range(len(A))]
                null = _nullspace_mod(shifted, ell)
                if not null:
                    continue
                lifted = _mat_mul_mod(null, B, ell)
                basis, _ = _rref_mod(lifted, ell)
                refined.append(basis)
        spaces = refined
    if len(spaces) != r or any(len(B) != 1 for B in spaces):
        raise ComputationError("class-sum eigenspace splitting failed")

    inv_cls = [class_idx[G.inv(reps[j])] for j in range(r)]
    pm = [[class_idx[G.power(reps[j], a)] for a in range(m)] for j in range(r)]
    t = _primitive_root(ell)
    z = pow(t, (ell - 1) // m, ell)
    zeta = [Cyclotomic.zeta(m, k) for k in range(m)]
    m_inv = pow(m, ell - 2, ell)

    out = []
    size_inv = [pow(s, ell - 2, ell) for s in sizes]
    for B in spaces:
        # the row is the central-character vector |C_j| chi(g_j) / chi(1),
        # normalized so the identity class carries 1
        v = B[0]
        scale = pow(v[e_cls], ell - 2, ell)
        omega = [(x * scale) % ell for x in v]
        denom = 0
        for j in range(r):
            denom = (denom + omega[j] * omega[inv_cls[j]] * size_inv[j]) % ell
        d_sq = (G.n * pow(denom, ell - 2, ell)) % ell
        d = next((x for x in range(1, (ell + 1) // 2) if (x * x) % ell == d_sq), None)
        if d is None:
            raise ComputationError("character degree has no square root mod l")
        chi_bar = [(d * omega[j] * size_inv[j]) % ell for j in range(r)]
        class_values = []
        for j in range(r):
            value = Cyclotomic.zero()
            for k in range(m):
                acc = 0
                zk = pow(z, (m - k) % m, ell)  # z^(-k)
                za = 1
                for a in range(m):
                    acc = (acc + chi_bar[pm[j][a]] * za) % ell
                    za = (za * zk) % ell
                mult = (acc * m_inv) % ell
                if mult:
                    value = value + zeta[k] * mult
            class_values.append(value)
        out.append(ClassFunction.from_class_values(G, class_values))
    return out


# -- decomposition ------------------------------------------------------------


class Decomposition:
    """Multiplicities of a class function against the irreducible table."""

    def __init__(self, irreducibles, multiplicities):
        self.irreducibles = irreducibles
        self.multiplicities = multiplicities

    @property
    def is_character(self) -> bool:
        return all(m.is_rational() and m.rational_value().denominator == 1
                   and m.rational_value() >= 0 for m in self.multiplicities)

    def integer_multiplicities(self):
        return [m.integer_value() for m in self.multiplicities]

    def __iter__(self):
        return zip(self.irreducibles, self.multiplicities)


def decompose(phi: ClassFunction) -> Decomposition:
    table = irreducible_characters(phi.group)
    mults = [inner_product(phi, chi) for chi in table]
    return Decomposition(table, mults)


def is_character(phi: ClassFunction) -> bool:
    return decompose(phi).is_character


def fixed_space_dim(chi: ClassFunction, subgroup) -> int:
    """dim of the subspace fixed by ``subgroup`` in a representation with
    character ``chi``: the average of chi over the subgroup."""
    elems = sorted(set(subgroup))
    acc = Cyclotomic.zero()
    for h in elems:
        acc = acc + chi.values[h]
    acc = acc * Fraction(1, len(elems))
    if not acc.is_rational() or acc.rational_value().denominator != 1:
        raise NonIntegerDimension(f"average over subgroup is {acc!r}; not a character?")
    value = acc.rational_value().numerator
    if value < 0:
        raise NonIntegerDimension("negative fixed-space dimension; not a character")
    return value
