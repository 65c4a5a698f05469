"""Brute-force reference implementations, written independently of the library."""

import unicodedata


def dfs_reach(edges, kind, start, reverse=False):
    """Nodes reachable from ``start`` over >= 1 edge of ``kind`` (plain DFS over the edge list)."""
    seen, stack = set(), [start]
    while stack:
        node = stack.pop()
        for e in edges:
            if e.kind != kind:
                continue
            src, dst = (e.target, e.source) if reverse else (e.source, e.target)
            if src == node and dst not in seen:
                seen.add(dst)
                stack.append(dst)
    return seen


def reach_table(edges, kind, nodes, reverse=False):
    """``dfs_reach`` for every node, via one successor map (same semantics, faster)."""
    succ = {n: [] for n in nodes}
    for e in edges:
        if e.kind == kind:
            src, dst = (e.target, e.source) if reverse else (e.source, e.target)
            succ.setdefault(src, []).append(dst)
    out = {}
    for n in nodes:
        seen, stack = set(), [n]
        while stack:
            for m in succ.get(stack.pop(), ()):
                if m not in seen:
                    seen.add(m)
                    stack.append(m)
        out[n] = seen
    return out


def has_cycle(edges, kind):
    """Three-colour DFS cycle check restricted to one kind."""
    succ = {}
    for e in edges:
        if e.kind == kind:
            succ.setdefault(e.source, []).append(e.target)
    colour = {}

    def visit(n):
        colour[n] = 1
        for m in succ.get(n, ()):
            c = colour.get(m, 0)
            if c == 1 or (c == 0 and visit(m)):
                return True
        colour[n] = 2
        return False

    return any(colour.get(n, 0) == 0 and visit(n) for n in list(succ))


def degree_tops(edges):
    out_deg, in_deg = {}, {}
    for e in edges:
        if e.kind == "generic":
            out_deg[e.source] = out_deg.get(e.source, 0) + 1
            in_deg[e.target] = in_deg.get(e.target, 0) + 1
    return {n for n, d in out_deg.items() if d >= 1 and in_deg.get(n, 0) == 0}


def related_one_step(edges, c, kinds, direction):
    out = set()
    for e in edges:
        if kinds is not None and e.kind not in kinds:
            continue
        if e.kind == "associative":
            if e.source == c:
                out.add(e.target)
            if e.target == c:
                out.add(e.source)
        elif direction == "down" and e.source == c:
            out.add(e.target)
        elif direction == "up" and e.target == c:
            out.add(e.source)
    out.discard(c)
    return out


def related_fixpoint(step, c):
    """Iterate a one-step neighbour function to a fixpoint, excluding ``c``."""
    found = set(step(c))
    frontier = set(found)
    while frontier:
        nxt = set()
        for n in frontier:
            nxt |= step(n)
        frontier = nxt - found - {c}
        found |= frontier
    found.discard(c)
    return found


# -- collation ------------------------------------------------------------------

# Hand-written letter table for the test alphabet: (base letters, secondary, upper).
# Secondary weights: plain (), ligature parts (0,), stroke letters (1,),
# accented letters the code point of their combining mark.
_GRAVE, _ACUTE, _CIRC, _TILDE, _DIAER, _CEDIL = 0x300, 0x301, 0x302, 0x303, 0x308, 0x327
LETTERS = {}
for _low in "abcdefghijklmnopqrstuvwxyz":
    LETTERS[_low] = (_low, (), 0)
    LETTERS[_low.upper()] = (_low, (), 1)
for _ch, _base, _mark in [("á", "a", _ACUTE), ("à", "a", _GRAVE), ("â", "a", _CIRC),
                          ("ä", "a", _DIAER), ("é", "e", _ACUTE), ("è", "e", _GRAVE),
                          ("ê", "e", _CIRC), ("ë", "e", _DIAER), ("ñ", "n", _TILDE),
                          ("ç", "c", _CEDIL), ("ô", "o", _CIRC), ("ö", "o", _DIAER),
                          ("ü", "u", _DIAER), ("í", "i", _ACUTE)]:
    LETTERS[_ch] = (_base, (_mark,), 0)
    LETTERS[_ch.upper()] = (_base, (_mark,), 1)
LETTERS.update({"ø": ("o", (1,), 0), "Ø": ("o", (1,), 1),
                "ł": ("l", (1,), 0), "Ł": ("l", (1,), 1),
                "æ": ("ae", (0,), 0), "Æ": ("ae", (0,), 1),
                "œ": ("oe", (0,), 0), "Œ": ("oe", (0,), 1),
                " ": (" ", (), 0), "-": ("-", (), 0)})
COLLATION_ALPHABET = "".join(sorted(LETTERS))


def _expand(s):
    prim, sec, ter = [], [], []
    for ch in s:
        base, weight, upper = LETTERS[ch]
        for b in base:
            prim.append(b)
            sec.append(weight)
            ter.append(upper)
    return prim, sec, ter


def collation_cmp(x, y):
    """Pairwise comparator: base letters, then accents, then case, then code points."""
    px, sx, tx = _expand(x)
    py, sy, ty = _expand(y)
    for a, b in ((px, py), (sx, sy), (tx, ty), (list(x), list(y))):
        if a != b:
            return -1 if a < b else 1
    return 0


def insertion_sort(items, cmp):
    out = []
    for item in items:
        i = len(out)
        while i > 0 and cmp(out[i - 1], item) > 0:
            i -= 1
        out.insert(i, item)
    return out


def is_nfc(text):
    return unicodedata.normalize("NFC", text) == text
