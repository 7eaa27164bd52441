"""Edge-list and graph-pair text formats.

An edge list is a header line ``n m`` followed by ``m`` lines ``u v`` with
``0 <= u < v < n``. A pair file is two edge-list blocks separated by a line
``---``, the host graph ``G`` first.
"""

import logging
from typing import Iterable, List, Literal, Optional, TextIO, Tuple

from .exceptions import GraphFormatError
from .graph import Graph, GraphPair, build_graph

logger = logging.getLogger(__name__)

PAIR_SEPARATOR = "---"

InputFormat = Literal["edgelist", "pair"]


def _ints(text: str, count: int, line_no: int, what: str) -> List[int]:
    fields = text.split()
    if len(fields) != count:
        raise GraphFormatError(f"expected {what}, got {text.strip()!r}", line_no)
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise GraphFormatError(f"non-integer field in {text.strip()!r}", line_no) from None


def _parse_block(lines: List[Tuple[int, str]], first_line: int) -> Graph:
    if not lines:
        raise GraphFormatError("missing header line 'n m'", first_line)
    header_no, header = lines[0]
    n, m = _ints(header, 2, header_no, "header 'n m'")
    if n < 0 or m < 0:
        raise GraphFormatError("negative vertex or edge count", header_no)
    body = lines[1:]
    if len(body) != m:
        at = body[m][0] if len(body) > m else header_no
        raise GraphFormatError(f"header announces {m} edges, found {len(body)}", at)

    edges: List[Tuple[int, int]] = []
    for line_no, text in body:
        u, v = _ints(text, 2, line_no, "edge 'u v'")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"endpoint out of range 0..{n - 1}: {u} {v}", line_no)
        if u == v:
            raise GraphFormatError(f"self-loop {u} {v}", line_no)
        edges.append((u, v))
    return build_graph(n, edges)


def _numbered(lines: Iterable[str]) -> List[Tuple[int, str]]:
    numbered = [(i, line.rstrip("\r\n")) for i, line in enumerate(lines, start=1)]
    while numbered and not numbered[-1][1].strip():
        numbered.pop()
    return numbered


def _split_blocks(numbered: List[Tuple[int, str]]) -> List[List[Tuple[int, str]]]:
    blocks: List[List[Tuple[int, str]]] = [[]]
    for line_no, text in numbered:
        if text.strip() == PAIR_SEPARATOR:
            blocks.append([])
        else:
            blocks[-1].append((line_no, text))
    return blocks


def parse_edgelist(lines: Iterable[str]) -> Graph:
    """Parse a single edge-list block.

    Raises:
        GraphFormatError: With the offending 1-based line number.
    """
    blocks = _split_blocks(_numbered(lines))
    if len(blocks) != 1:
        raise GraphFormatError("pair separator in single-graph input")
    return _parse_block(blocks[0], 1)


def parse_pair(lines: Iterable[str]) -> GraphPair:
    """Parse a ``G`` / ``---`` / ``G'`` pair file.

    Raises:
        GraphFormatError: On malformed blocks or when ``G'`` is not a subgraph of ``G``.
    """
    numbered = _numbered(lines)
    blocks = _split_blocks(numbered)
    if len(blocks) != 2:
        raise GraphFormatError(f"pair input needs exactly one '{PAIR_SEPARATOR}' line")
    g = _parse_block(blocks[0], 1)
    second_start = blocks[0][-1][0] + 2 if blocks[0] else 2
    g_prime = _parse_block(blocks[1], second_start)
    try:
        return GraphPair(g, g_prime)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from exc


def read_pair(stream: TextIO, fmt: Optional[InputFormat] = None) -> GraphPair:
    """Read a pair or a single graph from a text stream.

    Args:
        stream: Input text.
        fmt: ``"pair"``, ``"edgelist"`` or ``None`` to detect from the separator.

    Returns:
        The parsed pair; a single graph ``G`` yields ``(G, G)``.
    """
    lines = stream.read().splitlines()
    if fmt is None:
        fmt = "pair" if any(line.strip() == PAIR_SEPARATOR for line in lines) else "edgelist"
    logger.debug("parsing %d line(s) as %s", len(lines), fmt)
    if fmt == "pair":
        return parse_pair(lines)
    return GraphPair.single(parse_edgelist(lines))


def read_graph(stream: TextIO) -> Graph:
    return parse_edgelist(stream.read().splitlines())


def format_edgelist(g: Graph) -> str:
    """Serialise a graph; edges are emitted sorted with ``u < v``."""
    rows = [f"{g.n} {g.m}"]
    rows.extend(f"{u} {v}" for u, v in g.edge_list())
    return "\n".join(rows) + "\n"


def format_pair(pair: GraphPair) -> str:
    return format_edgelist(pair.g) + PAIR_SEPARATOR + "\n" + format_edgelist(pair.g_prime)
