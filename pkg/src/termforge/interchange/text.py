"""Escaping and field splitting shared by the line-oriented dialects.

Fields are separated by ``::``.  Inside a field a backslash escapes the next
character; the writer escapes backslashes and every colon that touches
another colon, so no run of ``::`` survives unescaped.
"""

from __future__ import annotations

from ..errors import ParseError

SEP = " :: "


def escape(text: str) -> str:
    out = []
    for i, ch in enumerate(text):
        if ch == "\\":
            out.append("\\\\")
        elif ch == ":" and ((i > 0 and text[i - 1] == ":") or (i + 1 < len(text) and text[i + 1] == ":")):
            out.append("\\:")
        else:
            out.append(ch)
    return "".join(out)


def split_fields(line: str, lineno: int):
    """Split on unescaped ``::``; fields are unescaped and stripped."""
    fields, buf, i = [], [], 0
    n = len(line)
    while i < n:
        ch = line[i]
        if ch == "\\":
            if i + 1 >= n:
                raise ParseError("SYNTAX", "dangling backslash", lineno, i + 1)
            buf.append(("lit", line[i + 1]))
            i += 2
        elif ch == ":" and i + 1 < n and line[i + 1] == ":":
            fields.append(buf)
            buf = []
            i += 2
        else:
            buf.append(("raw", ch))
            i += 1
    fields.append(buf)
    return [_strip(f) for f in fields]


def _strip(chunks) -> str:
    # only unescaped surrounding spaces are padding
    lo, hi = 0, len(chunks)
    while lo < hi and chunks[lo] == ("raw", " "):
        lo += 1
    while hi > lo and chunks[hi - 1] == ("raw", " "):
        hi -= 1
    return "".join(ch for _, ch in chunks[lo:hi])
