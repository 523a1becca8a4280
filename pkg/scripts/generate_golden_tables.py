"""
Script to write the multiplication tables of the first Cayley-Dickson towers.

For t = 1..4 it writes table_t{t}.txt, .csv and .json into the output
folder (default ../golden), then reads every CSV back and checks it
against the doubling engine.
"""
import sys
import logging
import os
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from cdtwist.algebra.engine import make_cd_tower
from cdtwist.algebra.tables import build_table, level_of, parse_table_csv, render_csv, render_json, render_text
from cdtwist.algebra.verify import oracle_term
from cdtwist.errors import CDTwistError

logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(levelname)s - %(message)s',
    handlers=[logging.StreamHandler()]
)
logger = logging.getLogger(__name__)

LEVELS = range(1, 5)


def write_level(t: int, folder: str) -> int:
    """Write the three exports of level t and return the number of cells"""
    spec = make_cd_tower(t, "symbolic")
    entries = build_table(spec)
    exports = {
        "txt": render_text(spec, entries),
        "csv": render_csv(entries),
        "json": render_json(t, "symbolic", entries),
    }
    for suffix, text in exports.items():
        path = os.path.join(folder, f"table_t{t}.{suffix}")
        with open(path, "w") as handle:
            handle.write(text)
        logger.info(f"Wrote {path}")

    reread = parse_table_csv(exports["csv"])
    if level_of(reread) != t:
        raise CDTwistError(f"CSV for level {t} does not describe a level {t} table")
    for entry in reread:
        term = entry.term
        if oracle_term(t, entry.p, entry.q) != (term.sign, term.gamma_mask, term.index):
            raise CDTwistError(f"Cell ({entry.p},{entry.q}) of level {t} disagrees with the doubling engine")
    return len(entries)


def main():
    """Main function to generate the golden tables"""
    folder = sys.argv[1] if len(sys.argv) > 1 else '../golden'
    os.makedirs(folder, exist_ok=True)
    logger.info(f"Writing golden tables to {folder}")

    try:
        for t in LEVELS:
            cells = write_level(t, folder)
            logger.info(f"Level {t}: {cells} cells checked against the doubling engine")
        return 0
    except CDTwistError as e:
        logger.error(f"Error generating golden tables: {e}")
        return 1


if __name__ == "__main__":
    sys.exit(main())
