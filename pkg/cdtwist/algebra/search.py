"""
Search for zero divisors: nonzero x, y with x y = 0.
"""
import logging
import random
from itertools import product as cartesian
from typing import Iterator, Optional, Tuple

from tqdm import tqdm

from cdtwist.algebra.engine import AlgebraSpec, Element, mul
from cdtwist.errors import InvalidParameterError

logger = logging.getLogger(__name__)

DEFAULT_RANDOM_BUDGET = 10000


def _two_term(spec: AlgebraSpec, a: int, b: int, sign: int) -> Element:
    one = spec.kind.one
    return Element._raw(spec, {a: one, b: one * sign})


def structured_candidates(spec: AlgebraSpec) -> Iterator[Tuple[Element, Element]]:
    """
    Pairs (f_a + s f_b, f_c + s' f_d) with a < b, c < d and a^b == c^d.

    For a tower the four partial products land on indices a^c, a^d, b^c, b^d,
    and they can only cancel pairwise when a^b == c^d, so other pairs are skipped.
    """
    n = spec.dimension
    for a in range(n):
        for b in range(a + 1, n):
            k = a ^ b
            for c in range(n):
                d = c ^ k
                if d <= c:
                    continue
                for s1, s2 in cartesian((1, -1), repeat=2):
                    yield _two_term(spec, a, b, s1), _two_term(spec, c, d, s2)


def structured_family_size(spec: AlgebraSpec) -> int:
    n = spec.dimension
    # each unordered (a, b) has n/2 partners (c, d) with the same XOR, 4 sign choices
    return (n * (n - 1) // 2) * (n // 2) * 4


def random_candidates(spec: AlgebraSpec, seed: int) -> Iterator[Tuple[Element, Element]]:
    """Endless stream of sparse random pairs with coefficients in {-1, 0, 1}"""
    rng = random.Random(seed)
    n = spec.dimension
    one = spec.kind.one

    def draw() -> Element:
        while True:
            support = rng.sample(range(n), k=min(n, rng.randint(2, 4)))
            coeffs = {i: one * rng.choice((1, -1)) for i in support}
            if coeffs:
                return Element._raw(spec, coeffs)

    while True:
        yield draw(), draw()


def find_zero_divisor(
        spec: AlgebraSpec,
        family: str = "structured",
        budget: Optional[int] = None,
        seed: int = 0,
        progress: bool = False
) -> Optional[Tuple[Element, Element]]:
    """
    Look for a pair of nonzero elements whose product is zero

    Args:
        spec: Algebra with concrete scalars
        family: 'structured' two-term family, or 'random' sparse pairs
        budget: Number of candidate pairs to test (None exhausts the structured
            family; random search then uses DEFAULT_RANDOM_BUDGET)
        seed: Seed for the random family
        progress: Show a progress bar on stderr

    Returns:
        (x, y) with x y = 0, or None if the budget ran out
    """
    if not spec.kind.is_concrete:
        raise InvalidParameterError("Zero divisor search needs concrete scalars")
    if family == "structured":
        candidates = structured_candidates(spec)
        total = structured_family_size(spec) if budget is None else min(budget, structured_family_size(spec))
    elif family == "random":
        candidates = random_candidates(spec, seed)
        total = DEFAULT_RANDOM_BUDGET if budget is None else budget
    else:
        raise InvalidParameterError(f"Unknown search family {family!r}")
    if total < 0:
        raise InvalidParameterError(f"Budget must be non-negative, got {total}")

    logger.info(f"Searching {total} {family} candidate pairs in dimension {spec.dimension}")
    with tqdm(total=total, desc="zero divisors", disable=not progress) as bar:
        for tested, (x, y) in enumerate(candidates):
            if tested >= total:
                break
            if not mul(spec, x, y):
                logger.info(f"Zero divisor found after {tested + 1} candidates: ({x}) * ({y}) = 0")
                return x, y
            bar.update(1)

    logger.info(f"No zero divisor among {total} {family} candidates")
    return None
