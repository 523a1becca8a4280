"""
Sampling checks of whole-algebra identities: alternative, flexible and
third-power associative laws, nucleus witnesses, and agreement of the
three placements of the doubling parameter.
"""
import logging
import random
from typing import Callable, List, Optional, Tuple

from pydantic import BaseModel

from cdtwist.algebra.engine import (
    VARIANTS,
    AlgebraSpec,
    Element,
    associator,
    basis_element,
    double,
    mul,
    random_element,
)

logger = logging.getLogger(__name__)


class PropertyReport(BaseModel):
    name: str
    samples: int
    failures: int = 0
    witness: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.failures == 0


class VariantReport(BaseModel):
    dimension: int
    pairs_checked: int
    differing: List[Tuple[int, int]] = []

    @property
    def agree(self) -> bool:
        return not self.differing


def _sample(
        spec: AlgebraSpec,
        name: str,
        samples: int,
        seed: int,
        arity: int,
        law: Callable[..., List[Tuple[str, Element]]]
) -> PropertyReport:
    rng = random.Random(seed)
    report = PropertyReport(name=name, samples=samples)
    for _ in range(samples):
        args = [random_element(spec, rng, density=0.6, bound=3) for _ in range(arity)]
        defects = [(side, value) for side, value in law(*args) if value]
        if defects:
            report.failures += 1
            if report.witness is None:
                side, value = defects[0]
                report.witness = f"{name} fails at {[str(a) for a in args]}: {side} = {value}"
    logger.info(f"{name}: {samples - report.failures}/{samples} samples pass")
    return report


def check_alternative(spec: AlgebraSpec, samples: int = 100, seed: int = 0) -> PropertyReport:
    """(x, x, y) = 0 and (y, x, x) = 0"""
    return _sample(
        spec, "alternative", samples, seed, 2,
        lambda x, y: [("(x,x,y)", associator(spec, x, x, y)), ("(y,x,x)", associator(spec, y, x, x))]
    )


def check_flexible(spec: AlgebraSpec, samples: int = 100, seed: int = 0) -> PropertyReport:
    """(x, y, x) = 0"""
    return _sample(spec, "flexible", samples, seed, 2, lambda x, y: [("(x,y,x)", associator(spec, x, y, x))])


def check_power_associative(spec: AlgebraSpec, samples: int = 100, seed: int = 0) -> PropertyReport:
    """x x^2 = x^2 x"""
    def defect(x: Element) -> List[Tuple[str, Element]]:
        square = mul(spec, x, x)
        return [("x x^2 - x^2 x", mul(spec, x, square) - mul(spec, square, x))]

    return _sample(spec, "third power associative", samples, seed, 1, defect)


def nucleus_witness(
        spec: AlgebraSpec,
        x: Element,
        trials: int = 50,
        seed: int = 0
) -> Optional[Tuple[str, Element, Element, Element]]:
    """
    Look for a nonzero associator with x in one of the three slots

    Returns:
        (slot, a, b, associator value) for the first witness, or None
    """
    rng = random.Random(seed)
    for _ in range(trials):
        a = random_element(spec, rng, bound=3)
        b = random_element(spec, rng, bound=3)
        for slot, value in (
                ("left", associator(spec, x, a, b)),
                ("middle", associator(spec, a, x, b)),
                ("right", associator(spec, a, b, x)),
        ):
            if value:
                return slot, a, b, value
    return None


def variant_agreement(base: AlgebraSpec, gamma) -> VariantReport:
    """
    Double base with gamma in each of the L, M, R placements and list the
    basis pairs on which the products differ
    """
    specs = [double(base, gamma, variant) for variant in VARIANTS]
    n = specs[0].dimension
    differing = []
    for p in range(n):
        for q in range(n):
            products = [mul(s, basis_element(s, p), basis_element(s, q)).coeffs for s in specs]
            if products[0] != products[1] or products[0] != products[2]:
                differing.append((p, q))
    return VariantReport(dimension=n, pairs_checked=n * n, differing=differing)
