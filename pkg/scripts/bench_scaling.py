"""
Script to measure how basis-product throughput scales with the tower level.

Runs the vectorised twist path at t = 5, 10, 20, 40 and fails when the
rate at t = 20 drops below a quarter of the rate at t = 5.
"""
import sys
import logging
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from cdtwist.twist.batch import run_bench

logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(levelname)s - %(message)s',
    handlers=[logging.StreamHandler()]
)
logger = logging.getLogger(__name__)

LEVELS = [5, 10, 20, 40]
PRODUCTS = 1_000_000
MAX_SLOWDOWN = 4.0


def main():
    """Main function to run the scaling benchmark"""
    n = int(sys.argv[1]) if len(sys.argv) > 1 else PRODUCTS
    rates = {}
    for t in LEVELS:
        report = run_bench(t, n, seed=0, progress=True)
        rates[t] = report.products_per_second
        print(f"t={t:>2}  {report.seconds:8.3f}s  {report.products_per_second:>14,.0f} products/s")

    slowdown = rates[5] / rates[20]
    logger.info(f"Rate at t=5 is {slowdown:.2f}x the rate at t=20")
    if slowdown > MAX_SLOWDOWN:
        logger.error(f"Slowdown {slowdown:.2f}x exceeds {MAX_SLOWDOWN}x")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
