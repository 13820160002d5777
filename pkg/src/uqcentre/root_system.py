"""Exact root-system combinatorics for the simple Lie types A-G.

Weights are integer coordinate tuples in the fundamental-weight basis: the
weight ``sum a_i w_i`` is stored as ``(a_1, ..., a_n)``.  All arithmetic is
exact (integers and ``fractions.Fraction``); the library never touches
floating point.

Conventions, fixed here once and consumed by every other module:

* Node labelling follows Bourbaki.  A_n, B_n, C_n, F_4, G_2 are chains
  ``1 - 2 - ... - n``; D_n attaches nodes n-1 and n to node n-2; E_n attaches
  node 2 to node 4 of the chain ``1 - 3 - 4 - 5 - ... - n`` (so the branch
  node of E_6 is node 2).
* ``cartan[i][j] = 2(alpha_i, alpha_j) / (alpha_i, alpha_i)``.  With this
  orientation the row of a short simple root carries the -2 (-3 in G_2):
  B_n has ``cartan[n-1][n-2] = -2``, C_n has ``cartan[n-2][n-1] = -2``,
  F_4 has ``cartan[2][1] = -2``, and G_2 is ``[[2, -3], [-1, 2]]``.
* The invariant form is normalised so that short roots have
  ``(alpha, alpha) = 2``, i.e. ``sym[i] = (alpha_i, alpha_i)/2`` with
  ``min(sym) = 1``.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError, ResourceLimitError

Weight = tuple[int, ...]
RationalVector = tuple[Fraction, ...]

ORBIT_CAP_DEFAULT = 10_000_000

_RANK_CONSTRAINTS = {
    "A": "rank >= 1",
    "B": "rank >= 2",
    "C": "rank >= 3",
    "D": "rank >= 4",
    "E": "rank in {6, 7, 8}",
    "F": "rank == 4",
    "G": "rank == 2",
}


def _rank_ok(family: str, rank: int) -> bool:
    if family == "A":
        return rank >= 1
    if family == "B":
        return rank >= 2
    if family == "C":
        return rank >= 3
    if family == "D":
        return rank >= 4
    if family == "E":
        return rank in (6, 7, 8)
    if family == "F":
        return rank == 4
    if family == "G":
        return rank == 2
    return False


def _cartan_and_sym(family: str, rank: int):
    n = rank
    A = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def join(i, j):
        A[i][j] = -1
        A[j][i] = -1

    if family in ("A", "B", "C", "F"):
        for i in range(n - 1):
            join(i, i + 1)
    if family == "A":
        d = [1] * n
    elif family == "B":
        A[n - 1][n - 2] = -2
        d = [2] * (n - 1) + [1]
    elif family == "C":
        A[n - 2][n - 1] = -2
        d = [1] * (n - 1) + [2]
    elif family == "D":
        for i in range(n - 3):
            join(i, i + 1)
        join(n - 3, n - 2)
        join(n - 3, n - 1)
        d = [1] * n
    elif family == "E":
        chain = [0, 2, 3] + list(range(4, n))
        for u, v in zip(chain, chain[1:]):
            join(u, v)
        join(1, 3)
        d = [1] * n
    elif family == "F":
        A[2][1] = -2
        d = [2, 2, 1, 1]
    elif family == "G":
        A[0][1] = -3
        A[1][0] = -1
        d = [1, 3]
    return tuple(map(tuple, A)), tuple(d)


def _invert_integer_matrix(A):
    """Exact inverse of an integer matrix, as (numerators, common denominator)."""
    n = len(A)
    aug = [
        [Fraction(A[i][j]) for j in range(n)]
        + [Fraction(1 if i == j else 0) for j in range(n)]
        for i in range(n)
    ]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    inv = [row[n:] for row in aug]
    den = 1
    for row in inv:
        for x in row:
            den = den * x.denominator // _gcd(den, x.denominator)
    num = tuple(tuple(int(x * den) for x in row) for row in inv)
    return num, den


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


class RootSystem:
    """Cartan data of one simple type, with exact coordinate conversions.

    Instances are immutable values; two instances with the same
    ``(family, rank)`` compare equal.  Internal lookup tables are cached on
    first use, which is safe to share across threads.
    """

    def __init__(self, family: str, rank: int):
        if family not in _RANK_CONSTRAINTS:
            raise DomainError(
                f"unknown family {family!r}; expected one of A, B, C, D, E, F, G"
            )
        if not _rank_ok(family, rank):
            raise DomainError(
                f"invalid rank {rank} for type {family}: requires "
                + _RANK_CONSTRAINTS[family]
            )
        self.family = family
        self.rank = rank
        self.cartan, self.sym = _cartan_and_sym(family, rank)
        # inv_num / inv_den is the exact inverse Cartan matrix; root
        # coordinates of a weight are (inv_num @ coords) / inv_den.
        self._inv_num, self._inv_den = _invert_integer_matrix(self.cartan)
        self._check_invariants()
        self._positive = None
        self._weyl_order = None

    def _check_invariants(self) -> None:
        A, d, n = self.cartan, self.sym, self.rank
        assert all(A[i][i] == 2 for i in range(n))
        assert all(A[i][j] <= 0 for i in range(n) for j in range(n) if i != j)
        assert all(
            (A[i][j] == 0) == (A[j][i] == 0) for i in range(n) for j in range(n)
        )
        assert all(
            d[i] * A[i][j] == d[j] * A[j][i] for i in range(n) for j in range(n)
        )
        assert min(d) == 1

    def __repr__(self) -> str:
        return f"RootSystem({self.family}{self.rank})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RootSystem)
            and self.family == other.family
            and self.rank == other.rank
        )

    def __hash__(self) -> int:
        return hash((self.family, self.rank))

    # -- coordinates and the bilinear form ---------------------------------

    def zero(self) -> Weight:
        return (0,) * self.rank

    def fundamental_weight(self, i: int) -> Weight:
        return tuple(1 if k == i else 0 for k in range(self.rank))

    def simple_root(self, i: int) -> Weight:
        """alpha_i in fundamental-weight coordinates (column i of the Cartan matrix)."""
        return tuple(self.cartan[k][i] for k in range(self.rank))

    def rho(self) -> Weight:
        return (1,) * self.rank

    def _check_weight(self, w) -> None:
        if len(w) != self.rank:
            raise DomainError(
                f"weight {w} has length {len(w)}, expected rank {self.rank}"
            )

    def scaled_root_coords(self, w: Weight) -> tuple[int, ...]:
        """Root coordinates of ``w`` times ``self.root_coord_scale`` (exact integers)."""
        self._check_weight(w)
        B = self._inv_num
        return tuple(
            sum(B[j][k] * w[k] for k in range(self.rank)) for j in range(self.rank)
        )

    @property
    def root_coord_scale(self) -> int:
        return self._inv_den

    def weight_to_root_coords(self, w: Weight) -> RationalVector:
        """Coefficients c with ``w = sum c_j alpha_j``, as exact rationals."""
        D = self._inv_den
        return tuple(Fraction(x, D) for x in self.scaled_root_coords(w))

    def root_coords_to_weight(self, coords) -> Weight:
        """Inverse of :meth:`weight_to_root_coords` on integer root vectors."""
        A = self.cartan
        out = []
        for k in range(self.rank):
            v = sum(A[k][j] * coords[j] for j in range(self.rank))
            if isinstance(v, Fraction):
                if v.denominator != 1:
                    raise DomainError(f"{coords} is not in the weight lattice")
                v = v.numerator
            out.append(int(v))
        return tuple(out)

    def bilinear_form(self, lam: Weight, mu: Weight) -> Fraction:
        """The invariant form (lam, mu), normalised with (alpha,alpha)=2 for short alpha."""
        self._check_weight(lam)
        c = self.scaled_root_coords(mu)
        dot = sum(lam[j] * self.sym[j] * c[j] for j in range(self.rank))
        return Fraction(dot, self._inv_den)

    # -- Weyl group --------------------------------------------------------

    def simple_reflection(self, i: int, w: Weight) -> Weight:
        """s_i(w) = w - w_i * alpha_i, in fundamental-weight coordinates."""
        wi = w[i]
        if wi == 0:
            return tuple(w)
        A = self.cartan
        return tuple(w[k] - wi * A[k][i] for k in range(self.rank))

    def weyl_orbit(self, w: Weight, cap: int = ORBIT_CAP_DEFAULT) -> set[Weight]:
        """Closure of ``{w}`` under simple reflections (breadth-first)."""
        self._check_weight(w)
        start = tuple(w)
        seen = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for u in frontier:
                for i in range(self.rank):
                    if u[i] == 0:
                        continue
                    v = self.simple_reflection(i, u)
                    if v not in seen:
                        seen.add(v)
                        if len(seen) > cap:
                            raise ResourceLimitError(
                                f"Weyl orbit of {w} in {self} exceeds cap {cap}"
                            )
                        nxt.append(v)
            frontier = nxt
        return seen

    def orbit_size(self, w: Weight, cap: int = ORBIT_CAP_DEFAULT) -> int:
        return len(self.weyl_orbit(w, cap))

    def weyl_group_order(self, cap: int = ORBIT_CAP_DEFAULT) -> int:
        """|W|, computed as the orbit size of the regular weight rho."""
        if self._weyl_order is None:
            self._weyl_order = len(self.weyl_orbit(self.rho(), cap))
        return self._weyl_order

    def dominant_representative(self, w: Weight) -> Weight:
        """The unique dominant weight in the Weyl orbit of ``w``."""
        v = list(w)
        A = self.cartan
        while True:
            for i in range(self.rank):
                if v[i] < 0:
                    vi = v[i]
                    for k in range(self.rank):
                        v[k] -= vi * A[k][i]
                    break
            else:
                return tuple(v)

    def is_dominant(self, w: Weight) -> bool:
        return all(x >= 0 for x in w)

    def dominates(self, lam: Weight, mu: Weight) -> bool:
        """True iff lam - mu is a nonnegative integer sum of simple roots.

        Reflexive: ``dominates(lam, lam)`` is true.
        """
        diff = tuple(a - b for a, b in zip(lam, mu))
        D = self._inv_den
        for x in self.scaled_root_coords(diff):
            if x < 0 or x % D != 0:
                return False
        return True

    # -- roots ---------------------------------------------------------------

    def positive_roots(self) -> tuple[Weight, ...]:
        """All positive roots, as fundamental-weight coordinate tuples."""
        if self._positive is None:
            roots = set()
            for i in range(self.rank):
                roots |= self.weyl_orbit(self.simple_root(i))
            D = self._inv_den
            pos = [
                r
                for r in roots
                if all(x >= 0 for x in self.scaled_root_coords(r))
            ]
            assert 2 * len(pos) == len(roots)
            assert all(
                all(x % D == 0 for x in self.scaled_root_coords(r)) for r in pos
            )
            self._positive = tuple(sorted(pos))
        return self._positive

    def positive_root_data(self) -> tuple[tuple[Weight, tuple[int, ...]], ...]:
        """Positive roots paired with their integer root-coordinate vectors."""
        D = self._inv_den
        return tuple(
            (r, tuple(x // D for x in self.scaled_root_coords(r)))
            for r in self.positive_roots()
        )

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "rank": self.rank,
            "cartan": [list(row) for row in self.cartan],
            "sym": list(self.sym),
        }


def build_root_system(family: str, rank: int) -> RootSystem:
    """Construct the root system of the given simple type.

    Raises :class:`DomainError` for an invalid (family, rank) pair.
    """
    return RootSystem(family, rank)


def weight_to_json(rsys: RootSystem, w: Weight) -> dict:
    return {"family": rsys.family, "rank": rsys.rank, "coords": list(w)}


def add_weights(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def sub_weights(a: Weight, b: Weight) -> Weight:
    return tuple(x - y for x, y in zip(a, b))


def scale_weight(k: int, a: Weight) -> Weight:
    return tuple(k * x for x in a)
