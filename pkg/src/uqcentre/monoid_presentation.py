"""The monoid algebra C[M+] and its binomial presentation.

The algebra has basis ``X^lam`` for ``lam`` in M+ with ``X^lam X^mu =
X^(lam+mu)``.  Mapping the abstract polynomial generator ``x_lam`` to
``X^lam`` for each Hilbert basis element exhibits C[M+] as a quotient of a
polynomial algebra: free for the type I algebras, and cut out by one
``rel1`` and one ``rel2`` binomial per conjugate pair for type II.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import DomainError
from .half_lattice_monoid import (
    TYPE_I,
    classify_type,
    ell,
    hilbert_basis,
    in_monoid,
    rel1,
    rel2,
)
from .report import Report
from .root_system import RootSystem, Weight, add_weights, scale_weight, sub_weights


class MonoidAlgebraElement:
    """A finite rational combination of basis symbols X^lam.

    Terms map weights to nonzero exact rationals; the zero element has no
    terms.  Multiplication is the bilinear extension of X^lam X^mu =
    X^(lam+mu).
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for w, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[tuple(w)] = c
        self.terms = clean

    @classmethod
    def x(cls, w: Weight, coeff=1) -> "MonoidAlgebraElement":
        return cls({tuple(w): coeff})

    @classmethod
    def one(cls, rank: int) -> "MonoidAlgebraElement":
        return cls({(0,) * rank: 1})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, MonoidAlgebraElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = out.get(w, 0) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return MonoidAlgebraElement(out)

    def __sub__(self, other):
        return self + (-1) * other

    def __mul__(self, other):
        if isinstance(other, MonoidAlgebraElement):
            out: dict[Weight, Fraction] = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    w = add_weights(w1, w2)
                    v = out.get(w, 0) + c1 * c2
                    if v:
                        out[w] = v
                    else:
                        out.pop(w, None)
            return MonoidAlgebraElement(out)
        return MonoidAlgebraElement({w: c * other for w, c in self.terms.items()})

    __rmul__ = __mul__

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*X^{w}" for w, c in self.sorted_terms())


@dataclass(frozen=True)
class BinomialRelation:
    """lhs - rhs with both sides monomials in the generators (index -> exponent)."""

    kind: str  # "rel1" | "rel2"
    source: Weight  # the pair representative the relation was built from
    lhs: tuple[tuple[int, int], ...]
    rhs: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Presentation:
    family: str
    rank: int
    generators: tuple[Weight, ...]
    labels: tuple[str, ...]
    relations: tuple[BinomialRelation, ...]

    def index(self, w: Weight) -> int:
        return self.generators.index(tuple(w))

    def to_json(self) -> dict:
        def side(mono):
            return {self.labels[i]: e for i, e in mono}

        return {
            "type": self.family,
            "rank": self.rank,
            "generators": [
                {"label": lab, "coords": list(w)}
                for lab, w in zip(self.labels, self.generators)
            ],
            "relations": [
                {"kind": r.kind, "lhs": side(r.lhs), "rhs": side(r.rhs)}
                for r in self.relations
            ],
        }

    def render(self) -> list[str]:
        def side(mono):
            if not mono:
                return "1"
            parts = []
            for i, e in mono:
                t = "x_{%s}" % self.labels[i]
                if e != 1:
                    t += f"^{e}"
                parts.append(t)
            return "·".join(parts)

        return [f"{side(r.lhs)} = {side(r.rhs)}" for r in self.relations]


def phi(generators, monomial) -> MonoidAlgebraElement:
    """Evaluate a generator monomial {index: exponent} to a single X^lam term."""
    gens = list(generators)
    if not gens:
        raise DomainError("empty generator list")
    total = (0,) * len(gens[0])
    for i, e in dict(monomial).items():
        if not 0 <= i < len(gens):
            raise DomainError(f"unknown generator index {i}")
        if e < 0:
            raise DomainError(f"negative exponent {e}")
        total = add_weights(total, scale_weight(e, gens[i]))
    return MonoidAlgebraElement.x(total)


def _weight_label(w: Weight) -> str:
    parts = []
    for i, a in enumerate(w):
        if a == 0:
            continue
        parts.append(("w%d" % (i + 1)) if a == 1 else ("%dw%d" % (a, i + 1)))
    return "+".join(parts) if parts else "0"


def _labels(rsys: RootSystem, basis) -> tuple[str, ...]:
    if classify_type(rsys) == TYPE_I:
        return tuple(_weight_label(w) for w in basis.elements)
    by_weight: dict[Weight, str] = {}
    for i, w in basis.self_conjugate.items():
        by_weight[w] = f"μ{i}"
    for i, w in enumerate(basis.scaled_fundamentals):
        by_weight.setdefault(w, f"ν{i + 1}")
    out = []
    for w in basis.elements:
        out.append(by_weight.get(w, _weight_label(w)))
    return tuple(out)


def presentation(rsys: RootSystem) -> Presentation:
    """Generators (the Hilbert basis) and defining binomial relations of C[M+].

    For each conjugate pair the representative lambda is the lexicographically
    larger member.  rel1 is ``x_lam x_bar = prod x_mu_i^max(a_i, a_sigma(i))``;
    rel2 is ``x_lam^ell = prod x_nu_i^(ell a_i / s_i)`` and is omitted exactly
    when lambda is itself one of the nu_i.
    """
    basis = hilbert_basis(rsys)
    gens = basis.elements
    idx = {w: i for i, w in enumerate(gens)}

    def mono(pairs):
        # factors in descending generator weight, matching the usual display
        return tuple(sorted(pairs, key=lambda t: -t[0]))

    relations = []
    scaled = set(basis.scaled_fundamentals)
    for lam, bar in sorted(basis.pairs, reverse=True):
        exps = rel1(rsys, lam)
        rhs = mono((idx[basis.self_conjugate[i]], e) for i, e in exps.items())
        lhs = mono(((idx[lam], 1), (idx[bar], 1)))
        relations.append(BinomialRelation("rel1", lam, lhs, rhs))
        if lam not in scaled:
            l = ell(rsys, lam)
            exps2 = rel2(rsys, lam)
            rhs2 = mono(
                (idx[basis.scaled_fundamentals[i - 1]], e)
                for i, e in exps2.items()
            )
            relations.append(
                BinomialRelation("rel2", lam, ((idx[lam], l),), rhs2)
            )
    return Presentation(
        family=rsys.family,
        rank=rsys.rank,
        generators=gens,
        labels=_labels(rsys, basis),
        relations=tuple(relations),
    )


def verify_relations(rsys: RootSystem, pres: Presentation | None = None) -> Report:
    """Check phi(lhs) == phi(rhs) for every relation (and the conjugate rel2)."""
    if pres is None:
        pres = presentation(rsys)
    basis = hilbert_basis(rsys)
    rep = Report(title=f"kernel membership {rsys.family}{rsys.rank}")
    for rel in pres.relations:
        left = phi(pres.generators, dict(rel.lhs))
        right = phi(pres.generators, dict(rel.rhs))
        rep.add(
            f"{rel.kind}[{_weight_label(rel.source)}]",
            left == right,
            f"{left!r} vs {right!r}" if left != right else "",
        )
    # the partner's rel2 binomial is implied but must also lie in the kernel
    scaled = set(basis.scaled_fundamentals)
    idx = {w: i for i, w in enumerate(pres.generators)}
    for lam, bar in basis.pairs:
        if bar in scaled:
            continue
        l = ell(rsys, bar)
        exps = rel2(rsys, bar)
        lhs = phi(pres.generators, {idx[bar]: l})
        rhs = phi(
            pres.generators,
            {idx[basis.scaled_fundamentals[i - 1]]: e for i, e in exps.items()},
        )
        rep.add(f"rel2-conjugate[{_weight_label(bar)}]", lhs == rhs)
    return rep


def generation_check(rsys: RootSystem, bound: int):
    """Count Hilbert-basis factorizations of every monoid element with coords <= bound.

    Returns ``(report, counts)``; an element with no factorization is a
    failure.  Factorizations are counted as multisets via a depth-first
    search over the ordered generator list, memoized on the remaining weight.
    """
    if bound < 0:
        raise DomainError("bound must be >= 0")
    basis = hilbert_basis(rsys)
    gens = basis.elements
    memo: dict[tuple[Weight, int], int] = {}

    def count(rem: Weight, start: int) -> int:
        if not any(rem):
            return 1
        if start == len(gens):
            return 0
        key = (rem, start)
        if key in memo:
            return memo[key]
        total = count(rem, start + 1)
        g = gens[start]
        if all(x >= y for x, y in zip(rem, g)):
            total += count(sub_weights(rem, g), start)
        memo[key] = total
        return total

    counts: dict[Weight, int] = {}
    for w in product(range(bound + 1), repeat=rsys.rank):
        if in_monoid(rsys, w):
            counts[w] = count(w, 0)

    rep = Report(title=f"generation {rsys.family}{rsys.rank} bound {bound}")
    bad = [w for w, c in counts.items() if c == 0]
    rep.add(
        f"all {len(counts)} monoid elements factor over Hilb(M+)",
        not bad,
        f"unfactorable: {sorted(bad)[:5]}" if bad else "",
    )
    return rep, counts
