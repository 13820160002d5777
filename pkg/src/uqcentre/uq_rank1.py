"""Symbolic U_q(sl2): normal ordering, modules, quasi R-matrix, Casimirs.

Elements are finite sums of normally ordered monomials ``F^a K^b E^c`` with
exact rational-function coefficients.  The defining relations are

    K E = q^2 E K,   K F = q^-2 F K,   E F - F E = (K - K^-1)/(q - q^-1),

and products are straightened into normal order by an induction on the
commutation ``E^c F^a``, memoized in a module-level table.

From the (m+1)-dimensional simple module V the three operators

    R_V      = sum_n c_n  zeta(F^n) (x) E^n,
    Rt_V     = sum_n c_n  zeta(E^n K^n) (x) K^-n F^n,
    K_V      = sum_eta P_eta (x) K_2eta   (diagonal),

with c_n = q^(n(n+1)/2) (1-q^-2)^n / [n]!, are assembled into
Gamma_V = K_V Rt_V R_V, whose weighted partial traces

    C^(k)_V = Tr_1((K_2rho (x) 1) Gamma_V^k)

are central.  The truncation of the quasi R-matrix at n = dim V is exact
(zeta(F)^dim V = 0), not an approximation.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import DomainError
from .qrational import Q_ONE, Q_ZERO, QRat, q_factorial, q_int, q_power
from .report import Report

Mon = tuple[int, int, int]  # exponents (a, b, c) of F^a K^b E^c


class UqElement:
    """A normally ordered element of U_q(sl2); immutable."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mon, coeff in terms.items():
                coeff = QRat.coerce(coeff)
                if not coeff.is_zero():
                    clean[mon] = coeff
        self.terms = clean

    @classmethod
    def monomial(cls, a: int, b: int, c: int, coeff=1) -> "UqElement":
        if a < 0 or c < 0:
            raise DomainError("F and E exponents must be nonnegative")
        return cls({(a, b, c): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = UqElement({(0, 0, 0): other})
        return isinstance(other, UqElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if isinstance(other, (int, QRat)):
            other = UqElement({(0, 0, 0): other})
        out = dict(self.terms)
        for mon, c in other.terms.items():
            v = out.get(mon, Q_ZERO) + c
            if v.is_zero():
                out.pop(mon, None)
            else:
                out[mon] = v
        return UqElement(out)

    __radd__ = __add__

    def __neg__(self):
        return UqElement({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, QRat)):
            other = UqElement({(0, 0, 0): other})
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, coeff) -> "UqElement":
        coeff = QRat.coerce(coeff)
        if coeff.is_zero():
            return UQ_ZERO
        return UqElement({m: c * coeff for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, QRat)):
            return self.scale(other)
        out: dict[Mon, QRat] = {}
        for (a1, b1, c1), r1 in self.terms.items():
            for (a2, b2, c2), r2 in other.terms.items():
                base = r1 * r2
                for (x, y, z), s in _straighten(c1, a2).terms.items():
                    mon = (a1 + x, b1 + y + b2, z + c2)
                    coeff = base * s * q_power(-2 * (b1 * x + z * b2))
                    v = out.get(mon, Q_ZERO) + coeff
                    if v.is_zero():
                        out.pop(mon, None)
                    else:
                        out[mon] = v
        return UqElement(out)

    def __rmul__(self, other):
        if isinstance(other, (int, QRat)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise DomainError("negative powers are not defined in U_q(sl2)")
        out = UQ_ONE
        for _ in range(n):
            out = out * self
        return out

    def commutator(self, other) -> "UqElement":
        return self * other - other * self

    def in_zero_grade(self) -> bool:
        """Whether every monomial has equal E and F exponents."""
        return all(a == c for (a, _, c) in self.terms)

    def coefficient(self, mon: Mon) -> QRat:
        return self.terms.get(mon, Q_ZERO)

    def sorted_terms(self):
        return sorted(self.terms.items())

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (a, b, c), coeff in self.sorted_terms():
            factors = []
            if a:
                factors.append("F" if a == 1 else f"F^{a}")
            if b:
                factors.append("K" if b == 1 else f"K^{b}")
            if c:
                factors.append("E" if c == 1 else f"E^{c}")
            cs = coeff.render()
            if not factors:
                parts.append(f"({cs})" if (" " in cs or "/" in cs) else cs)
                continue
            mono = "·".join(factors)
            if coeff.is_one():
                parts.append(mono)
            elif (" " in cs) or ("/" in cs) or cs.startswith("-"):
                parts.append(f"({cs})·{mono}")
            else:
                parts.append(f"{cs}·{mono}")
        return " + ".join(parts)

    __repr__ = render

    def to_json(self) -> list:
        return [[list(m), c.to_json()] for m, c in self.sorted_terms()]


UQ_ZERO = UqElement()
UQ_ONE = UqElement({(0, 0, 0): 1})
GEN_E = UqElement({(0, 0, 1): 1})
GEN_F = UqElement({(1, 0, 0): 1})
GEN_K = UqElement({(0, 1, 0): 1})
GEN_KINV = UqElement({(0, -1, 0): 1})

_QMQ = q_power(1) - q_power(-1)  # q - q^-1


def _rmul_gen(el: UqElement, which: str) -> UqElement:
    """Right-multiply a normal form by E, K or K^-1 (all trivial shifts)."""
    out = {}
    for (x, y, z), c in el.terms.items():
        if which == "E":
            out[(x, y, z + 1)] = c
        elif which == "K":
            out[(x, y + 1, z)] = c * q_power(-2 * z)
        else:
            out[(x, y - 1, z)] = c * q_power(2 * z)
    return UqElement(out)


@lru_cache(maxsize=None)
def _straighten(c: int, a: int) -> UqElement:
    """Normal form of E^c F^a.

    E F^a = F^a E + [a]/(q-q^-1) (q^(1-a) F^(a-1) K - q^(a-1) F^(a-1) K^-1),
    applied inductively in c.
    """
    if c == 0 or a == 0:
        return UqElement({(a, 0, c): 1})
    head = _rmul_gen(_straighten(c - 1, a), "E")
    tail = _straighten(c - 1, a - 1)
    coef = q_int(a) / _QMQ
    head = head + _rmul_gen(tail, "K").scale(coef * q_power(1 - a))
    head = head - _rmul_gen(tail, "KINV").scale(coef * q_power(a - 1))
    return head


def multiply(x: UqElement, y: UqElement) -> UqElement:
    """Normal-ordered product (same as ``x * y``)."""
    return x * y


def is_central(x: UqElement) -> bool:
    """Whether x commutes with E, F and K."""
    return all(x.commutator(g).is_zero() for g in (GEN_E, GEN_F, GEN_K))


# -- matrices over QRat (module actions) and over UqElement -----------------


def _qmat_mul(A, B):
    n, m, p = len(A), len(B), len(B[0])
    return tuple(
        tuple(
            sum((A[i][k] * B[k][j] for k in range(m)), Q_ZERO) for j in range(p)
        )
        for i in range(n)
    )


def _qmat_id(d):
    return tuple(
        tuple(Q_ONE if i == j else Q_ZERO for j in range(d)) for i in range(d)
    )


def _qmat_pow(A, n):
    out = _qmat_id(len(A))
    for _ in range(n):
        out = _qmat_mul(out, A)
    return out


class UqMatrix:
    """A matrix with UqElement entries: an element of End(V) (x) U_q(sl2)."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(row) for row in rows)

    @classmethod
    def identity(cls, d: int) -> "UqMatrix":
        return cls(
            [[UQ_ONE if i == j else UQ_ZERO for j in range(d)] for i in range(d)]
        )

    @classmethod
    def tensor(cls, qmat, u: UqElement) -> "UqMatrix":
        """The operator ``M (x) u`` for a scalar matrix M acting on V."""
        return cls([[u.scale(entry) for entry in row] for row in qmat])

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __add__(self, other):
        return UqMatrix(
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.rows, other.rows)
            ]
        )

    def __sub__(self, other):
        return UqMatrix(
            [
                [a - b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.rows, other.rows)
            ]
        )

    def __mul__(self, other):
        if isinstance(other, UqMatrix):
            d = self.dim
            return UqMatrix(
                [
                    [
                        sum(
                            (self.rows[i][k] * other.rows[k][j] for k in range(d)),
                            UQ_ZERO,
                        )
                        for j in range(d)
                    ]
                    for i in range(d)
                ]
            )
        return UqMatrix([[e * other for e in row] for row in self.rows])

    def __pow__(self, n: int):
        out = UqMatrix.identity(self.dim)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, UqMatrix) and self.rows == other.rows

    def commutator(self, other) -> "UqMatrix":
        return self * other - other * self

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.rows for e in row)

    def __repr__(self):
        return "UqMatrix(%s)" % "; ".join(
            "[" + ", ".join(e.render() for e in row) + "]" for row in self.rows
        )


class SimpleModule:
    """The (m+1)-dimensional simple module L(m varpi) with explicit matrices.

    Basis e_0..e_m with K e_j = q^(m-2j) e_j, E e_j = [j] e_(j-1) and
    F e_j = [m-j] e_(j+1); for m = 1 these are the standard 2x2 matrices
    [[0,1],[0,0]], [[0,0],[1,0]], diag(q, q^-1).
    """

    def __init__(self, m: int):
        if m < 0:
            raise DomainError("highest weight label must be >= 0")
        self.m = m
        d = m + 1
        self.dim = d
        E = [[Q_ZERO] * d for _ in range(d)]
        F = [[Q_ZERO] * d for _ in range(d)]
        K = [[Q_ZERO] * d for _ in range(d)]
        Kinv = [[Q_ZERO] * d for _ in range(d)]
        for j in range(d):
            K[j][j] = q_power(m - 2 * j)
            Kinv[j][j] = q_power(2 * j - m)
            if j > 0:
                E[j - 1][j] = q_int(j)
            if j < m:
                F[j + 1][j] = q_int(m - j)
        self.E = tuple(map(tuple, E))
        self.F = tuple(map(tuple, F))
        self.K = tuple(map(tuple, K))
        self.Kinv = tuple(map(tuple, Kinv))

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple(self.m - 2 * j for j in range(self.dim))

    def __repr__(self):
        return f"SimpleModule(m={self.m})"


def simple_module(m: int) -> SimpleModule:
    return SimpleModule(m)


def _series_coefficient(n: int) -> QRat:
    # q^(n(n+1)/2) (1 - q^-2)^n / [n]!
    return (
        q_power(n * (n + 1) // 2)
        * (Q_ONE - q_power(-2)) ** n
        / q_factorial(n)
    )


def quasi_R(V: SimpleModule) -> UqMatrix:
    """(zeta (x) id) of the quasi R-matrix, truncated exactly at n = dim V."""
    out = UqMatrix.tensor(_qmat_id(V.dim), UQ_ZERO)
    for n in range(V.dim):
        term = UqMatrix.tensor(
            _qmat_pow(V.F, n), UqElement.monomial(0, 0, n, _series_coefficient(n))
        )
        out = out + term
    return out


def quasi_R_tilde_T(V: SimpleModule) -> UqMatrix:
    """(zeta (x) id) phi(R^T): sum_n c_n zeta(E^n K^n) (x) K^-n F^n."""
    out = UqMatrix.tensor(_qmat_id(V.dim), UQ_ZERO)
    for n in range(V.dim):
        first = _qmat_mul(_qmat_pow(V.E, n), _qmat_pow(V.K, n))
        # K^-n F^n normal-ordered is q^(2n^2) F^n K^-n
        second = UqElement.monomial(
            n, -n, 0, _series_coefficient(n) * q_power(2 * n * n)
        )
        out = out + UqMatrix.tensor(first, second)
    return out


def K_operator(V: SimpleModule) -> UqMatrix:
    """The diagonal operator sum_eta P_eta (x) K_2eta (here K^(m-2j))."""
    d = V.dim
    rows = [[UQ_ZERO] * d for _ in range(d)]
    for j, w in enumerate(V.weights):
        rows[j][j] = UqElement.monomial(0, w, 0)
    return UqMatrix(rows)


_gamma_powers: dict[tuple[int, int], UqMatrix] = {}


def gamma(V: SimpleModule) -> UqMatrix:
    """Gamma_V = K_V Rt_V R_V; commutes with the coproduct image of U_q(sl2)."""
    return _gamma_power(V, 1)


def _gamma_power(V: SimpleModule, k: int) -> UqMatrix:
    key = (V.m, k)
    if key not in _gamma_powers:
        if k == 1:
            _gamma_powers[key] = K_operator(V) * quasi_R_tilde_T(V) * quasi_R(V)
        else:
            _gamma_powers[key] = _gamma_power(V, k - 1) * _gamma_power(V, 1)
    return _gamma_powers[key]


def casimir(V: SimpleModule, k: int) -> UqElement:
    """C^(k)_V = Tr_1((K_2rho (x) 1) Gamma_V^k); central for every k >= 1.

    K_2rho acts as zeta(K) in rank 1.  The coefficients of the result are
    asserted to clear to Laurent polynomials.
    """
    if k < 1:
        raise DomainError("k must be >= 1")
    weighted = UqMatrix.tensor(V.K, UQ_ONE) * _gamma_power(V, k)
    out = UQ_ZERO
    for j in range(V.dim):
        out = out + weighted.rows[j][j]
    assert all(c.is_laurent() for c in out.terms.values()), "non-Laurent Casimir"
    return out


def _delta_matrix(V: SimpleModule, gen: str) -> UqMatrix:
    """(zeta (x) id) of the coproduct of a generator."""
    if gen == "E":
        return UqMatrix.tensor(V.K, GEN_E) + UqMatrix.tensor(V.E, UQ_ONE)
    if gen == "F":
        return UqMatrix.tensor(V.F, GEN_KINV) + UqMatrix.tensor(_qmat_id(V.dim), GEN_F)
    if gen == "K":
        return UqMatrix.tensor(V.K, GEN_K)
    if gen == "Kinv":
        return UqMatrix.tensor(V.Kinv, GEN_KINV)
    raise DomainError(f"unknown generator {gen!r}")


def _phi_delta_prime_matrix(V: SimpleModule, gen: str) -> UqMatrix:
    """(zeta (x) id) of phi applied to the opposite coproduct of a generator."""
    if gen == "E":
        return UqMatrix.tensor(V.E, UQ_ONE) + UqMatrix.tensor(V.Kinv, GEN_E)
    if gen == "F":
        return UqMatrix.tensor(_qmat_id(V.dim), GEN_F) + UqMatrix.tensor(V.F, GEN_K)
    if gen == "K":
        return UqMatrix.tensor(V.K, GEN_K)
    if gen == "Kinv":
        return UqMatrix.tensor(V.Kinv, GEN_KINV)
    raise DomainError(f"unknown generator {gen!r}")


def _phi2_delta_matrix(V: SimpleModule, gen: str) -> UqMatrix:
    """(zeta (x) id) of phi^2 applied to the coproduct of a generator."""
    if gen == "E":
        # phi^2(Delta(E)) = K^-1 (x) E + E (x) K^-2
        return UqMatrix.tensor(V.Kinv, GEN_E) + UqMatrix.tensor(
            V.E, UqElement.monomial(0, -2, 0)
        )
    if gen == "F":
        # phi^2(Delta(F)) = F (x) K + K^2 (x) F
        return UqMatrix.tensor(V.F, GEN_K) + UqMatrix.tensor(
            _qmat_pow(V.K, 2), GEN_F
        )
    if gen == "K":
        return UqMatrix.tensor(V.K, GEN_K)
    raise DomainError(f"unknown generator {gen!r}")


def check_gamma_intertwines(V: SimpleModule) -> Report:
    """Commutators of Gamma_V with the coproduct images of E, F, K^(+-1)."""
    rep = Report(title=f"Gamma commutation, m={V.m}")
    G = gamma(V)
    for gen in ("E", "F", "K", "Kinv"):
        comm = G.commutator(_delta_matrix(V, gen))
        rep.add(f"[Gamma, Delta({gen})] = 0", comm.is_zero())
    return rep


def check_K_intertwining(V: SimpleModule) -> Report:
    """The five diagonal-operator identities and the phi^2 intertwining law."""
    rep = Report(title=f"K_V intertwining, m={V.m}")
    KV = K_operator(V)
    ident = _qmat_id(V.dim)
    for s1, s2 in (("K", "K"), ("Kinv", "Kinv")):
        mat = {"K": V.K, "Kinv": V.Kinv}[s1]
        elem = {"K": GEN_K, "Kinv": GEN_KINV}[s2]
        lhs = KV * UqMatrix.tensor(mat, elem)
        rhs = UqMatrix.tensor(mat, elem) * KV
        rep.add(f"K_V commutes with zeta({s1}) (x) {s2}", lhs == rhs)
    checks = [
        ("zeta(E) (x) 1", UqMatrix.tensor(V.E, UQ_ONE),
         UqMatrix.tensor(V.E, UqElement.monomial(0, 2, 0))),
        ("1 (x) E", UqMatrix.tensor(ident, GEN_E),
         UqMatrix.tensor(_qmat_pow(V.K, 2), GEN_E)),
        ("zeta(F) (x) 1", UqMatrix.tensor(V.F, UQ_ONE),
         UqMatrix.tensor(V.F, UqElement.monomial(0, -2, 0))),
        ("1 (x) F", UqMatrix.tensor(ident, GEN_F),
         UqMatrix.tensor(_qmat_pow(V.Kinv, 2), GEN_F)),
    ]
    for name, plain, twisted in checks:
        rep.add(f"K_V ({name}) twists by K^2", KV * plain == twisted * KV)
    for gen in ("E", "F", "K"):
        lhs = KV * _phi2_delta_matrix(V, gen)
        rhs = _delta_matrix(V, gen) * KV
        rep.add(f"K_V phi^2(Delta({gen})) = Delta({gen}) K_V", lhs == rhs)
    return rep


def express_in_powers(
    target: UqElement, base: UqElement, max_degree: int
) -> list[QRat] | None:
    """Coefficients c_j with ``target = sum c_j base^j``, or None.

    Solved exactly over the rational-function field by Gaussian elimination
    on the monomial coefficients; used to express higher Casimirs as
    polynomials in the degree-one Casimir.
    """
    powers = [UQ_ONE]
    for _ in range(max_degree):
        powers.append(powers[-1] * base)
    mons = sorted(set(target.terms).union(*[set(p.terms) for p in powers]))
    rows = [
        [p.coefficient(mon) for p in powers] + [target.coefficient(mon)]
        for mon in mons
    ]
    ncols = len(powers)
    pivot_rows = []
    piv = 0
    for col in range(ncols):
        r = next(
            (i for i in range(piv, len(rows)) if not rows[i][col].is_zero()), None
        )
        if r is None:
            pivot_rows.append(None)
            continue
        rows[piv], rows[r] = rows[r], rows[piv]
        pv = rows[piv][col]
        rows[piv] = [x / pv for x in rows[piv]]
        for i in range(len(rows)):
            if i != piv and not rows[i][col].is_zero():
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[piv])]
        pivot_rows.append(piv)
        piv += 1
    for row in rows:
        if all(x.is_zero() for x in row[:-1]) and not row[-1].is_zero():
            return None
    sol = [Q_ZERO] * ncols
    for col, prow in enumerate(pivot_rows):
        if prow is not None:
            sol[col] = rows[prow][-1]
    return sol


def hc_project(x: UqElement) -> dict[int, int]:
    """Harish-Chandra image of a zero-grade element, as {K-power: coefficient}.

    Monomials with balanced positive E/F powers are projected away; the
    remaining K^b coefficients are shifted by q^-b.  The input must be in the
    zero-grade subalgebra (every monomial with a = c), and the shifted
    coefficients must be q-independent integers, as they are for the central
    elements this is applied to.
    """
    out: dict[int, int] = {}
    for (a, b, c), coeff in x.terms.items():
        if a != c:
            raise DomainError(
                f"monomial F^{a} K^{b} E^{c} is outside the zero-grade subalgebra"
            )
        if a > 0:
            continue
        shifted = coeff * q_power(-b)
        val = shifted.constant_value()
        if val:
            out[b] = val
    return out
