"""
Cross-checking the fast twist path against the doubling engine.

Every basis product f_p f_q of the tower is computed twice: once by
basis_product (O(t) bit walk) and once by recursive doubling. A report
lists each pair where they differ and every oracle product that is not a
single nonzero term.
"""
import logging
import random
from functools import reduce
from multiprocessing import Pool
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, computed_field
from tqdm import tqdm

from cdtwist.algebra.engine import basis_element, make_cd_tower, mul
from cdtwist.algebra.tables import gammas_label
from cdtwist.errors import InvalidParameterError
from cdtwist.scalars.polynomial import SparsePoly
from cdtwist.twist.batch import MEMO_MAX_LEVEL, sign_table
from cdtwist.twist.core import alpha_eval, basis_product, check_indices

logger = logging.getLogger(__name__)

EXHAUSTIVE_MAX_T = 6
CHUNK_SIZE = 4096


class Disagreement(BaseModel):
    p: int
    q: int
    expected: str
    actual: str
    reason: str


class VerificationReport(BaseModel):
    t: int
    gammas: List[str]
    mode: str
    pairs_checked: int = 0
    disagreements: List[Disagreement] = []

    @computed_field
    @property
    def ok(self) -> bool:
        return not self.disagreements

    @computed_field
    @property
    def summary(self) -> str:
        return f"{self.pairs_checked} pairs, {len(self.disagreements)} disagreements"

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        """Combine reports over disjoint pair ranges; associative"""
        rows = sorted(self.disagreements + other.disagreements, key=lambda d: (d.p, d.q))
        return VerificationReport(
            t=self.t,
            gammas=self.gammas,
            mode=self.mode,
            pairs_checked=self.pairs_checked + other.pairs_checked,
            disagreements=rows
        )


def _check_pairs(args: Tuple[int, Union[str, list], str, Sequence[Tuple[int, int]]]) -> VerificationReport:
    t, gammas, mode, pairs = args
    spec = make_cd_tower(t, gammas)
    symbolic = isinstance(gammas, str)
    signs = sign_table(t) if mode == "exhaustive" and t <= MEMO_MAX_LEVEL else None
    basis = {}
    rows = []

    for p, q in pairs:
        term = basis_product(t, p, q)
        for i in (p, q):
            if i not in basis:
                basis[i] = basis_element(spec, i)
        product = mul(spec, basis[p], basis[q])

        if signs is not None and int(signs[p, q]) != term.sign:
            rows.append(Disagreement(
                p=p, q=q, expected=term.cell(), actual=f"batch sign {int(signs[p, q])}", reason="batch"
            ))

        if len(product.coeffs) != 1:
            rows.append(Disagreement(
                p=p, q=q, expected=term.cell(), actual=str(product), reason="not a single term"
            ))
            continue
        (index, coeff), = product.coeffs.items()
        if symbolic:
            matches = index == term.index and coeff == term.coefficient()
            if matches and coeff.as_signed_monomial() is None:
                rows.append(Disagreement(
                    p=p, q=q, expected=term.cell(), actual=str(product), reason="not a signed monomial"
                ))
                continue
        else:
            matches = index == term.index and coeff == alpha_eval(t, p, q, gammas)
        if not matches:
            rows.append(Disagreement(
                p=p, q=q, expected=term.cell(), actual=str(product), reason="mismatch"
            ))

    return VerificationReport(
        t=t,
        gammas=gammas_label(gammas),
        mode=mode,
        pairs_checked=len(pairs),
        disagreements=rows
    )


def _chunks(pairs: List[Tuple[int, int]], size: int) -> Iterable[List[Tuple[int, int]]]:
    for start in range(0, len(pairs), size):
        yield pairs[start:start + size]


def verify_twist_vs_oracle(
        t: int,
        gammas: Union[str, Sequence] = "symbolic",
        mode: str = "exhaustive",
        n: int = 1000,
        seed: int = 0,
        workers: int = 1,
        exhaustive_max_t: int = EXHAUSTIVE_MAX_T,
        progress: bool = False
) -> VerificationReport:
    """
    Compare basis_product with doubling-engine products

    Args:
        t: Tower level
        gammas: 'symbolic' or t nonzero concrete values
        mode: 'exhaustive' (all 4^t pairs) or 'random' (n pairs)
        n: Number of random pairs
        seed: Seed for random mode
        workers: Worker processes; 1 runs in-process
        exhaustive_max_t: Largest level allowed in exhaustive mode
        progress: Show a progress bar on stderr

    Returns:
        VerificationReport, empty disagreement list on success
    """
    check_indices(t, 0, 0)
    if not isinstance(gammas, str):
        gammas = list(gammas)
        if len(gammas) != t or any(g == 0 for g in gammas):
            raise InvalidParameterError(f"Expected {t} nonzero parameter values")

    size = 1 << t
    if mode == "exhaustive":
        if t > exhaustive_max_t:
            raise InvalidParameterError(
                f"Exhaustive verification is limited to t <= {exhaustive_max_t}; use --mode random"
            )
        pairs = [(p, q) for p in range(size) for q in range(size)]
    elif mode == "random":
        if n < 0:
            raise InvalidParameterError(f"Pair count must be non-negative, got {n}")
        rng = random.Random(seed)
        pairs = [(rng.randrange(size), rng.randrange(size)) for _ in range(n)]
    else:
        raise InvalidParameterError(f"Unknown verification mode {mode!r}")

    logger.info(f"Verifying {len(pairs)} basis products at level {t} ({mode}, {workers} workers)")
    jobs = [(t, gammas, mode, chunk) for chunk in _chunks(pairs, CHUNK_SIZE)]
    empty = VerificationReport(t=t, gammas=gammas_label(gammas), mode=mode)

    if workers > 1 and len(jobs) > 1:
        with Pool(processes=workers) as pool:
            results = list(tqdm(pool.imap(_check_pairs, jobs), total=len(jobs), disable=not progress))
    else:
        results = [_check_pairs(job) for job in tqdm(jobs, disable=not progress)]

    report = reduce(VerificationReport.merge, results, empty)
    if report.ok:
        logger.info(f"Verification passed: {report.summary}")
    else:
        logger.warning(f"Verification found disagreements: {report.summary}")
    return report


def oracle_term(t: int, p: int, q: int) -> Optional[Tuple[int, int, int]]:
    """
    Symbolic oracle product f_p f_q as (sign, gamma_mask, index)

    Returns:
        The triple, or None if the product is not a single signed monomial
    """
    spec = make_cd_tower(t, "symbolic")
    product = mul(spec, basis_element(spec, p), basis_element(spec, q))
    if len(product.coeffs) != 1:
        return None
    (index, coeff), = product.coeffs.items()
    signed = coeff.as_signed_monomial() if isinstance(coeff, SparsePoly) else None
    if signed is None:
        return None
    return signed[0], signed[1], index
