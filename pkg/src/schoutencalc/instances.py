"""Bundled pair instances and morphisms used by the test suites and the CLI.

Generator indexing: sl2 uses (e, f, h) = (1, 2, 3) with [e,f] = h,
[e,h] = -2e, [f,h] = 2f; gl2 uses the elementary matrices
(E11, E12, E21, E22) = (1, 2, 3, 4); the solvable example is a rank-one
extension of the Heisenberg bracket by a grading derivation.
"""

from __future__ import annotations

from fractions import Fraction

from .pairs import LieRinehartPair, PairMorphism, Vector, check_pair_morphism

__all__ = [
    "BUILTIN_PAIRS",
    "abelian",
    "builtin_pair",
    "cartan",
    "gl2",
    "identity_morphism",
    "perturbed_sl2",
    "scaling_morphism",
    "sl2",
    "sl2_to_gl2",
    "solvable4",
    "zero_vector_morphism",
]


def sl2() -> LieRinehartPair:
    return LieRinehartPair.lie_algebra(
        3,
        {(1, 2): {3: 1}, (1, 3): {1: -2}, (2, 3): {2: 2}},
        name="sl2",
    )


def gl2() -> LieRinehartPair:
    # [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb on the basis E11..E22.
    return LieRinehartPair.lie_algebra(
        4,
        {
            (1, 2): {2: 1},
            (1, 3): {3: -1},
            (2, 3): {1: 1, 4: -1},
            (2, 4): {2: 1},
            (3, 4): {3: -1},
        },
        name="gl2",
    )


def solvable4() -> LieRinehartPair:
    # [e4, e1] = e1, [e4, e2] = e2, [e4, e3] = 2 e3, [e1, e2] = e3.
    return LieRinehartPair.lie_algebra(
        4,
        {
            (1, 2): {3: 1},
            (1, 4): {1: -1},
            (2, 4): {2: -1},
            (3, 4): {3: -2},
        },
        name="solvable4",
    )


def abelian(dim: int) -> LieRinehartPair:
    return LieRinehartPair.lie_algebra(dim, {}, name=f"abelian{dim}")


def cartan(m: int) -> LieRinehartPair:
    return LieRinehartPair.cartan(m)


def perturbed_sl2() -> LieRinehartPair:
    """sl2 with one corrupted structure constant; skips load-time validation."""
    return LieRinehartPair.lie_algebra(
        3,
        {(1, 2): {3: 1, 1: 1}, (1, 3): {1: -2}, (2, 3): {2: 2}},
        name="sl2-corrupted",
        validate=False,
    )


def identity_morphism(pair: LieRinehartPair, *, validate: bool = True) -> PairMorphism:
    m = PairMorphism.identity(pair)
    if validate:
        check_pair_morphism(m)
    return m


def sl2_to_gl2(*, validate: bool = True) -> PairMorphism:
    """Inclusion e -> E12, f -> E21, h -> E11 - E22."""
    source, target = sl2(), gl2()
    m = PairMorphism(
        source,
        target,
        (),
        (
            Vector({2: target.scalar_one()}),
            Vector({3: target.scalar_one()}),
            Vector({1: target.scalar_one(), 4: target.scalar_const(-1)}),
        ),
    )
    if validate:
        report = check_pair_morphism(m)
        if not report.passed:
            raise AssertionError(f"builtin morphism failed validation: {report.render_text()}")
    return m


def scaling_morphism(pair: LieRinehartPair, factor: Fraction | int) -> PairMorphism:
    """Scale every generator; a pair morphism only for abelian brackets."""
    return PairMorphism(
        pair,
        pair,
        tuple(pair.scalar_variable(i) for i in range(1, pair.nvars + 1)),
        tuple(pair.generator(i).scaled(pair.scalar_const(factor)) for i in range(1, pair.dim + 1)),
    )


def zero_vector_morphism(pair: LieRinehartPair) -> PairMorphism:
    """Identity scalar map with the zero vector map; fails on nonzero anchors."""
    return PairMorphism(
        pair,
        pair,
        tuple(pair.scalar_variable(i) for i in range(1, pair.nvars + 1)),
        tuple(Vector.zero() for _ in range(pair.dim)),
    )


BUILTIN_PAIRS = {
    "sl2": sl2,
    "gl2": gl2,
    "solvable4": solvable4,
    "abelian2": lambda: abelian(2),
    "abelian3": lambda: abelian(3),
    "cartan1": lambda: cartan(1),
    "cartan2": lambda: cartan(2),
    "cartan3": lambda: cartan(3),
}


def builtin_pair(name: str) -> LieRinehartPair:
    try:
        return BUILTIN_PAIRS[name]()
    except KeyError:
        raise KeyError(f"unknown builtin pair {name!r}; choices: {sorted(BUILTIN_PAIRS)}") from None
