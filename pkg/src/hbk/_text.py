"""Shared line reader for the plain-text structure formats."""

from .errors import ParseError


def content_lines(text):
    """Yield ``(lineno, tokens)`` for every non-blank line, with ``#`` comments stripped."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_int(token, lineno):
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", lineno) from None


def read_rows(lines, count, width, lineno_hint):
    """Consume ``count`` rows of ``width`` integers from the ``lines`` iterator."""
    rows = []
    for _ in range(count):
        try:
            lineno, tokens = next(lines)
        except StopIteration:
            raise ParseError(f"expected {count} table rows, file ended after {len(rows)}",
                             lineno_hint) from None
        if len(tokens) != width:
            raise ParseError(f"row has {len(tokens)} entries, expected {width}", lineno)
        rows.append(tuple(parse_int(t, lineno) for t in tokens))
        lineno_hint = lineno
    return tuple(rows)


def format_rows(rows):
    return "\n".join(" ".join(str(v) for v in row) for row in rows)
