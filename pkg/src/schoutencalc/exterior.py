"""The exterior algebra of a pair: canonical multivectors and the wedge.

Multivectors are stored in normal form: a map from strictly increasing
generator-index tuples to nonzero coefficients, with the empty tuple holding
the scalar component.  Coefficients absorb into the map, so rewriting
``a (x ^ y)`` as ``(a x) ^ y`` or ``x ^ (a y)`` lands on the same value and
equality is plain map comparison.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from fractions import Fraction

from .errors import DegreeUndefinedError, MorphismValidationError
from .pairs import GradedPairElement, LieRinehartPair, PairMorphism, Vector
from .scalars import Scalar

__all__ = [
    "INHOMOGENEOUS",
    "Multivector",
    "antisym_degree",
    "associated_exterior_morphism",
    "embed",
    "tensor_degree",
    "wedge",
]

INHOMOGENEOUS = "inhomogeneous"


def _merge_monomials(left: tuple[int, ...], right: tuple[int, ...]) -> tuple[int, tuple[int, ...]] | None:
    """Sort the concatenation; returns (sign, merged) or None on a repeat."""
    if set(left) & set(right):
        return None
    inversions = sum(1 for a in left for b in right if a > b)
    merged = tuple(sorted(left + right))
    return (-1 if inversions % 2 else 1), merged


class Multivector:
    """An element of the exterior algebra over a fixed pair."""

    __slots__ = ("pair", "terms")

    def __init__(
        self,
        pair: LieRinehartPair,
        terms: Mapping[tuple[int, ...], Scalar] | None = None,
    ):
        self.pair = pair
        clean: dict[tuple[int, ...], Scalar] = {}
        if terms:
            for mono, coeff in terms.items():
                key = tuple(int(i) for i in mono)
                if any(not 1 <= i <= pair.dim for i in key):
                    raise ValueError(f"monomial {key!r} has indices outside 1..{pair.dim}")
                if any(key[i] >= key[i + 1] for i in range(len(key) - 1)):
                    raise ValueError(f"monomial {key!r} is not strictly increasing")
                if coeff.nvars != pair.nvars:
                    raise ValueError("coefficient does not belong to this pair")
                if not coeff.is_zero():
                    clean[key] = coeff
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, pair: LieRinehartPair) -> Multivector:
        return cls(pair)

    @classmethod
    def unit(cls, pair: LieRinehartPair) -> Multivector:
        return cls(pair, {(): pair.scalar_one()})

    @classmethod
    def from_scalar(cls, pair: LieRinehartPair, a: Scalar) -> Multivector:
        return cls(pair, {(): a})

    @classmethod
    def from_vector(cls, pair: LieRinehartPair, x: Vector) -> Multivector:
        return cls(pair, {(gen,): coeff for gen, coeff in x.terms.items()})

    @classmethod
    def monomial(
        cls,
        pair: LieRinehartPair,
        indices: Sequence[int],
        coeff: Scalar | Fraction | int = 1,
    ) -> Multivector:
        if not isinstance(coeff, Scalar):
            coeff = pair.scalar_const(coeff)
        return cls(pair, {tuple(indices): coeff})

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def scalar_part(self) -> Scalar:
        return self.terms.get((), self.pair.scalar_zero())

    def vector_part(self) -> Vector:
        return Vector({mono[0]: c for mono, c in self.terms.items() if len(mono) == 1})

    def homogeneous_components(self) -> dict[int, Multivector]:
        """Split by tensor degree; zero contributes no components."""
        buckets: dict[int, dict[tuple[int, ...], Scalar]] = {}
        for mono, coeff in self.terms.items():
            buckets.setdefault(len(mono), {})[mono] = coeff
        return {deg: Multivector(self.pair, terms) for deg, terms in sorted(buckets.items())}

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: Multivector) -> None:
        if self.pair is not other.pair and not self.pair.compatible(other.pair):
            raise ValueError("multivectors belong to different pairs")

    def __add__(self, other: Multivector) -> Multivector:
        self._check(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            if mono in out:
                total = out[mono] + coeff
                if total.is_zero():
                    del out[mono]
                else:
                    out[mono] = total
            else:
                out[mono] = coeff
        return Multivector(self.pair, out)

    def __neg__(self) -> Multivector:
        return Multivector(self.pair, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: Multivector) -> Multivector:
        return self + (-other)

    def scaled(self, factor: Scalar | Fraction | int) -> Multivector:
        # The coefficient algebra has no zero divisors, so scaling never
        # merges or cancels distinct monomials.
        return Multivector(self.pair, {m: c * factor for m, c in self.terms.items()})

    def __rmul__(self, factor: Fraction | int) -> Multivector:
        return self.scaled(factor)

    def wedge(self, other: Multivector) -> Multivector:
        return wedge(self.pair, self, other)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Multivector)
            and self.pair.compatible(other.pair)
            and self.terms == other.terms
        )

    __hash__ = None

    # -- rendering ---------------------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Scalar]]:
        return sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks: list[str] = []
        for mono, coeff in self.sorted_terms():
            if not mono:
                # Scalar component comes first; it carries its own signs.
                chunks.append(str(coeff))
                continue
            sign, body = coeff.signed_render()
            monostr = "^".join(self.pair.generator_name(i) for i in mono)
            piece = monostr if body == "1" else f"{body}*{monostr}"
            if not chunks:
                chunks.append(f"-{piece}" if sign < 0 else piece)
            else:
                chunks.append(f" - {piece}" if sign < 0 else f" + {piece}")
        return "".join(chunks)

    def __repr__(self) -> str:
        return f"Multivector({self})"


def wedge(pair: LieRinehartPair, x: Multivector, y: Multivector) -> Multivector:
    """Exterior product: bilinear over ``A``, graded symmetric in tensor degree."""
    x._check(y)
    if x.pair is not pair and not x.pair.compatible(pair):
        raise ValueError("multivector does not belong to the given pair")
    out: dict[tuple[int, ...], Scalar] = {}
    for mx, cx in x.terms.items():
        for my, cy in y.terms.items():
            merged = _merge_monomials(mx, my)
            if merged is None:
                continue
            sign, mono = merged
            coeff = cx * cy if sign > 0 else -(cx * cy)
            if mono in out:
                total = out[mono] + coeff
                if total.is_zero():
                    del out[mono]
                else:
                    out[mono] = total
            else:
                out[mono] = coeff
    return Multivector(pair, out)


def tensor_degree(x: Multivector) -> int | str:
    """Common monomial length of a nonzero multivector, or ``INHOMOGENEOUS``."""
    if x.is_zero():
        raise DegreeUndefinedError("the zero multivector has no degree")
    lengths = {len(mono) for mono in x.terms}
    if len(lengths) == 1:
        return lengths.pop()
    return INHOMOGENEOUS


def antisym_degree(x: Multivector) -> int | str:
    """Tensor degree shifted down by one; scalars sit in degree -1."""
    degree = tensor_degree(x)
    if degree == INHOMOGENEOUS:
        return INHOMOGENEOUS
    return degree - 1


def embed(pair: LieRinehartPair, u: GradedPairElement) -> Multivector:
    """Natural inclusion of ``A (+) g`` as the degree <= 1 part."""
    terms: dict[tuple[int, ...], Scalar] = {}
    if not u.scalar.is_zero():
        terms[()] = u.scalar
    for gen, coeff in u.vector.terms.items():
        terms[(gen,)] = coeff
    return Multivector(pair, terms)


def associated_exterior_morphism(m: PairMorphism, x: Multivector) -> Multivector:
    """Prolong a validated pair morphism factor-wise over wedge monomials."""
    if not m.validated:
        raise MorphismValidationError(
            "morphism must pass check_pair_morphism before prolongation"
        )
    out = Multivector.zero(m.target)
    for mono, coeff in x.terms.items():
        term = Multivector.from_scalar(m.target, m.apply_scalar(coeff))
        for index in mono:
            image = Multivector.from_vector(m.target, m.apply_vector(m.source.generator(index)))
            term = wedge(m.target, term, image)
        out = out + term
    return out
