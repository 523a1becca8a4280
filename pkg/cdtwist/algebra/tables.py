"""
Multiplication tables of Cayley-Dickson algebras.

This module generates the n x n table of basis products, renders it as
aligned text, CSV or JSON, and reads CSV exports back. Towers E_t use the
fast twist path, so every cell is one signed g-monomial term; other
algebras (the nonassociative quaternions and their doublings) fall back to
oracle products.
"""
import io
import json
import logging
from fractions import Fraction
from typing import IO, Any, Dict, Iterator, List, NamedTuple, Union

import pandas as pd

from cdtwist.algebra.engine import AlgebraSpec, Element, basis_element, mul, tower_gammas
from cdtwist.errors import InvalidParameterError, TableCapExceededError
from cdtwist.scalars.polynomial import GammaMonomial
from cdtwist.twist.core import TwistTerm, basis_product

logger = logging.getLogger(__name__)

DEFAULT_TABLE_CAP = 1 << 10
CSV_COLUMNS = ["p", "q", "sign", "monomial", "index"]


class TableEntry(NamedTuple):
    p: int
    q: int
    term: Union[TwistTerm, Element]


def iter_table(spec: AlgebraSpec) -> Iterator[TableEntry]:
    """
    Stream all basis products row by row, without any size cap

    Args:
        spec: The algebra

    Yields:
        TableEntry for (p, q) in row-major order
    """
    n = spec.dimension
    if tower_gammas(spec) is not None:
        t = spec.depth
        for p in range(n):
            for q in range(n):
                yield TableEntry(p, q, basis_product(t, p, q))
        return
    basis = [basis_element(spec, i) for i in range(n)]
    for p in range(n):
        for q in range(n):
            yield TableEntry(p, q, mul(spec, basis[p], basis[q]))


def build_table(spec: AlgebraSpec, cap: int = DEFAULT_TABLE_CAP) -> List[TableEntry]:
    """
    Materialize the full multiplication table

    Args:
        spec: The algebra
        cap: Largest dimension allowed in memory

    Returns:
        All n^2 entries in row-major order
    """
    if spec.dimension > cap:
        logger.error(f"Refusing to build table of dimension {spec.dimension} (cap {cap})")
        raise TableCapExceededError(spec.dimension, cap)
    entries = list(iter_table(spec))
    logger.info(f"Built multiplication table of dimension {spec.dimension} ({len(entries)} entries)")
    return entries


def _concrete_cell(value, index: int) -> str:
    if index == 0:
        return str(value)
    if value == 1:
        return f"f{index}"
    if value == -1:
        return f"-f{index}"
    return f"{value}*f{index}"


def format_cell(spec: AlgebraSpec, entry: TableEntry) -> str:
    """Render one table cell: '-g1*g2', 'g1*f2', or the evaluated coefficient for concrete towers"""
    term = entry.term
    if isinstance(term, Element):
        return str(term)
    gammas = tower_gammas(spec)
    if gammas is None or not spec.kind.is_concrete:
        return term.cell()
    value = spec.kind.one * term.sign
    for m, g in enumerate(gammas, start=1):
        if term.gamma_mask >> (m - 1) & 1:
            value = value * g
    return _concrete_cell(value, term.index)


def _label(i: int) -> str:
    return "1" if i == 0 else f"f{i}"


def _text_line(cells: List[str], width: int) -> str:
    return "  ".join(cell.rjust(width) for cell in cells).rstrip()


def _rows(spec: AlgebraSpec, entries: Iterator[TableEntry]) -> Iterator[List[str]]:
    n = spec.dimension
    yield ["*"] + [_label(q) for q in range(n)]
    row: List[str] = []
    for entry in entries:
        if not row:
            row = [_label(entry.p)]
        row.append(format_cell(spec, entry))
        if len(row) == n + 1:
            yield row
            row = []


def _symbolic_cell_width(spec: AlgebraSpec) -> int:
    # widest possible symbolic cell: -g1*g2*...*gt*f{n-1}
    t = spec.depth
    monomial = "*".join(f"g{m}" for m in range(1, t + 1))
    return len(f"-{monomial}*{_label(spec.dimension - 1)}")


def render_text(spec: AlgebraSpec, entries: List[TableEntry]) -> str:
    """Header row plus one line per basis vector, columns padded to a common width"""
    rows = list(_rows(spec, iter(entries)))
    width = max(len(cell) for row in rows for cell in row)
    return "\n".join(_text_line(row, width) for row in rows) + "\n"


def iter_text_rows(spec: AlgebraSpec, entries: Iterator[TableEntry]) -> Iterator[str]:
    """Streaming variant of render_text; symbolic towers keep their columns aligned"""
    width = _symbolic_cell_width(spec) if not spec.kind.is_concrete else 0
    for row in _rows(spec, entries):
        yield _text_line(row, width)


def _row(entry: TableEntry) -> Dict[str, Any]:
    term = entry.term
    if not isinstance(term, TwistTerm):
        raise InvalidParameterError("CSV and JSON export are only defined for Cayley-Dickson towers")
    return {
        "p": entry.p,
        "q": entry.q,
        "sign": term.sign,
        "monomial": str(term.monomial()),
        "index": term.index,
    }


def table_frame(entries: List[TableEntry]) -> pd.DataFrame:
    """DataFrame with columns p, q, sign, monomial, index"""
    return pd.DataFrame([_row(e) for e in entries], columns=CSV_COLUMNS)


def render_csv(entries: List[TableEntry]) -> str:
    return table_frame(entries).to_csv(index=False, lineterminator="\n")


def write_csv_stream(entries: Iterator[TableEntry], handle: IO[str], chunk_size: int = 65536) -> int:
    """
    Write a CSV export chunk by chunk

    Returns:
        Number of rows written
    """
    written = 0
    chunk: List[TableEntry] = []
    for entry in entries:
        chunk.append(entry)
        if len(chunk) == chunk_size:
            table_frame(chunk).to_csv(handle, index=False, header=written == 0, lineterminator="\n")
            written += len(chunk)
            chunk = []
    if chunk or written == 0:
        table_frame(chunk).to_csv(handle, index=False, header=written == 0, lineterminator="\n")
        written += len(chunk)
    return written


def gammas_label(gammas: Union[str, List[Any]]) -> List[str]:
    if isinstance(gammas, str):
        return ["symbolic"]
    return [str(Fraction(g)) for g in gammas]


def table_json(t: int, gammas: Union[str, List[Any]], entries: List[TableEntry]) -> Dict[str, Any]:
    """
    JSON export object: {"t", "gammas", "entries": [{p, q, sign, gamma_mask, index}]}
    """
    rows = []
    for entry in entries:
        term = entry.term
        if not isinstance(term, TwistTerm):
            raise InvalidParameterError("CSV and JSON export are only defined for Cayley-Dickson towers")
        rows.append({
            "p": entry.p,
            "q": entry.q,
            "sign": term.sign,
            "gamma_mask": term.gamma_mask,
            "index": term.index,
        })
    return {"t": t, "gammas": gammas_label(gammas), "entries": rows}


def render_json(t: int, gammas: Union[str, List[Any]], entries: List[TableEntry]) -> str:
    return json.dumps(table_json(t, gammas, entries), indent=2) + "\n"


def parse_table_csv(text: str) -> List[TableEntry]:
    """
    Read a CSV export back into table entries

    Args:
        text: CSV with header p,q,sign,monomial,index

    Returns:
        Entries in file order
    """
    try:
        frame = pd.read_csv(io.StringIO(text), dtype={"monomial": str})
    except Exception as e:
        logger.error(f"Error reading table CSV: {e}")
        raise InvalidParameterError(f"Unreadable table CSV: {e}") from e
    missing = [c for c in CSV_COLUMNS if c not in frame.columns]
    if missing:
        raise InvalidParameterError(f"Table CSV is missing columns {missing}")
    entries = []
    for row in frame.itertuples(index=False):
        mask = GammaMonomial.parse(str(row.monomial)).mask
        entries.append(TableEntry(int(row.p), int(row.q), TwistTerm(int(row.sign), mask, int(row.index))))
    return entries


def level_of(entries: List[TableEntry]) -> int:
    """Tower level implied by a complete table"""
    n = max((e.p for e in entries), default=0) + 1
    t = n.bit_length() - 1
    if 1 << t != n or len(entries) != n * n:
        raise InvalidParameterError(f"{len(entries)} entries do not form a 2^t x 2^t table")
    return t


def write_json_stream(t: int, gammas: Union[str, List[Any]], entries: Iterator[TableEntry], handle: IO[str]) -> int:
    """
    Write the JSON export one entry per line, without holding the table

    Returns:
        Number of entries written
    """
    handle.write(f'{{"t": {t}, "gammas": {json.dumps(gammas_label(gammas))}, "entries": [\n')
    written = 0
    for entry in entries:
        row = table_json(t, gammas, [entry])["entries"][0]
        handle.write((",\n" if written else "") + json.dumps(row))
        written += 1
    handle.write("\n]}\n")
    return written
