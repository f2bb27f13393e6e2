"""Plain-text profile documents.

Fixed-n form::

    # optional comments
    3 2
    x x
    y y
    z z

Multi form (line 2 holds the multiplicities)::

    multi 3 2
    2 1
    x y
    y x
    z z

Row r lists the rank-r alternative of every column.  A comment of the form
``# alternatives: x y z`` fixes the declared alternative order; otherwise the
labels are ordered by natural sort.
"""

from __future__ import annotations

from pathlib import Path

from scx.errors import InputError, ParseError
from scx.profile import AlternativeSet, Profile, natural_key
from scx.variable import MultiProfile

ALTS_PRAGMA = "alternatives:"


def _int(tok: str, line: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected integer {what}, got {tok!r}", line) from None


def parse_profile(text: str) -> Profile | MultiProfile:
    lines: list[tuple[int, list[str]]] = []
    declared = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped.startswith("#"):
            body = stripped[1:].strip()
            if body.startswith(ALTS_PRAGMA):
                declared = (lineno, body[len(ALTS_PRAGMA):].split())
            continue
        if stripped:
            lines.append((lineno, stripped.split()))
    if not lines:
        raise ParseError("empty profile document", 1)

    head_line, head = lines[0]
    multi = head[0] == "multi"
    if multi:
        if len(head) != 3:
            raise ParseError("header must be 'multi m K'", head_line)
        m, cols = _int(head[1], head_line, "m"), _int(head[2], head_line, "K")
        if len(lines) < 2:
            raise ParseError("missing multiplicity row", head_line)
        mult_line, mult_toks = lines[1]
        if len(mult_toks) != cols:
            raise ParseError(f"expected {cols} multiplicities, got {len(mult_toks)}", mult_line)
        mults = [_int(t, mult_line, "multiplicity") for t in mult_toks]
        for k in mults:
            if k < 1:
                raise ParseError(f"multiplicities must be >= 1, got {k}", mult_line)
        body = lines[2:]
    else:
        if len(head) != 2:
            raise ParseError("header must be 'm n' or 'multi m K'", head_line)
        m, cols = _int(head[0], head_line, "m"), _int(head[1], head_line, "n")
        if cols < 2:
            raise ParseError(f"a profile needs n >= 2 states, got {cols}", head_line)
        body = lines[1:]
    if m < 2:
        raise ParseError(f"need m >= 2 alternatives, got {m}", head_line)
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] if body else head_line)
        raise ParseError(f"expected {m} ranking rows, got {len(body)}", where)
    for lineno, toks in body:
        if len(toks) != cols:
            raise ParseError(f"expected {cols} tokens, got {len(toks)}", lineno)

    columns = [[body[r][1][c] for r in range(m)] for c in range(cols)]
    labels = columns[0]
    if len(set(labels)) != m:
        raise ParseError("column 1 is not a permutation of distinct alternatives", body[0][0])
    for c, col in enumerate(columns, start=1):
        if sorted(col) != sorted(labels):
            raise ParseError(f"column {c} is not a permutation of {' '.join(sorted(labels))}", _bad_row(body, col, labels))
    try:
        if declared is not None:
            lineno, names = declared
            if sorted(names) != sorted(labels):
                raise ParseError("declared alternatives do not match the columns", lineno)
            alts = AlternativeSet(tuple(names))
        else:
            alts = AlternativeSet(tuple(sorted(labels, key=natural_key)))
        if multi:
            if len({tuple(c) for c in columns}) != len(columns):
                raise ParseError("multi-profile columns must be pairwise distinct", body[0][0])
            return MultiProfile.from_labels(list(zip(columns, mults)), alts)
        return Profile.from_columns(columns, alts)
    except InputError as exc:
        raise ParseError(str(exc), head_line) from None


def _bad_row(body, col, labels) -> int:
    seen = set()
    for r, tok in enumerate(col):
        if tok not in labels or tok in seen:
            return body[r][0]
        seen.add(tok)
    return body[0][0]


def read_profile(path: str | Path) -> Profile | MultiProfile:
    return parse_profile(Path(path).read_text(encoding="utf-8"))


def render_profile(p: Profile | MultiProfile) -> str:
    """Serialize to the document format; the output parses back to an equal object."""
    names = p.alts.names
    if isinstance(p, MultiProfile):
        head = [f"multi {p.m} {p.K}", " ".join(str(k) for k in p.multiplicities)]
        orders = [order for order, _ in p.columns]
    else:
        head = [f"{p.m} {p.n}"]
        orders = list(p.states)
    width = max(len(x) for x in names)
    rows = [" ".join(names[o[r]].ljust(width) for o in orders).rstrip() for r in range(p.m)]
    return "\n".join([f"# {ALTS_PRAGMA} {' '.join(names)}", *head, *rows]) + "\n"
