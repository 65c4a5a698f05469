"""Multilingual Latin-alphabet ordering driven by a small tailoring profile.

A string's key has four levels, compared in order:

1. primary: base letters, case-folded, with ligatures expanded (Æ -> a, e);
2. secondary: per letter, the diacritic weight (explicit ``base`` entries
   rank by their position in the profile, otherwise the combining marks of
   the canonical decomposition; expanded letters rank just after plain ones);
3. tertiary: per letter, lowercase before uppercase;
4. the NFC string itself, in code point order.

Profiles are read from ``expand <char> <chars>`` / ``base <char> <char>`` /
``particles keep|end`` lines.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping, Tuple

from .errors import ParseError

DEFAULT_PARTICLES = ("de", "del", "della", "der", "des", "di", "du", "la", "le",
                     "van", "von", "ten", "ter")

_EXPANDED = (0,)


def _lower1(ch):
    low = ch.lower()
    return low if len(low) == 1 else ch


@dataclass(frozen=True)
class CollationProfile:
    name: str = "default"
    expansions: Mapping[str, str] = field(default_factory=dict)
    base_map: Mapping[str, str] = field(default_factory=dict)
    particles: str = "keep"
    particle_words: Tuple[str, ...] = DEFAULT_PARTICLES

    def __post_init__(self):
        overlap = set(self.expansions) & set(self.base_map)
        if overlap:
            raise ValueError(f"characters both expanded and base-mapped: {sorted(overlap)}")
        if self.particles not in ("keep", "end"):
            raise ValueError(f"particles must be 'keep' or 'end', not {self.particles!r}")
        object.__setattr__(self, "expansions", MappingProxyType(dict(self.expansions)))
        object.__setattr__(self, "base_map", MappingProxyType(dict(self.base_map)))
        object.__setattr__(self, "particle_words", tuple(self.particle_words))
        # base-mapped letters sharing a base rank by first appearance; case
        # variants share a rank so case stays a tertiary difference
        ranks, by_letter, counters = {}, {}, {}
        for ch, base in self.base_map.items():
            letter, b = _lower1(ch), _lower1(base)
            if letter not in by_letter:
                counters[b] = counters.get(b, 0) + 1
                by_letter[letter] = counters[b]
            ranks[ch] = by_letter[letter]
        object.__setattr__(self, "_ranks", MappingProxyType(ranks))

    def __hash__(self):
        return hash((self.name, tuple(self.expansions.items()), tuple(self.base_map.items()),
                     self.particles, self.particle_words))

    def __eq__(self, other):
        if not isinstance(other, CollationProfile):
            return NotImplemented
        return (self.name, dict(self.expansions), list(self.base_map.items()),
                self.particles, self.particle_words) == (
            other.name, dict(other.expansions), list(other.base_map.items()),
            other.particles, other.particle_words)


DEFAULT_PROFILE = CollationProfile(
    name="default",
    expansions={"Æ": "AE", "æ": "ae", "Œ": "OE", "œ": "oe"},
    base_map={"Ø": "O", "ø": "o", "Đ": "D", "đ": "d", "Ł": "L", "ł": "l"},
)


def _elements(text: str, profile: CollationProfile):
    """Yield ``(primary char, secondary weight, tertiary flag)`` per letter."""
    for ch in text:
        upper = 1 if ch.isupper() else 0
        exp = profile.expansions.get(ch)
        if exp is not None:
            for e in exp:
                yield _lower1(e), _EXPANDED, upper
            continue
        base = profile.base_map.get(ch)
        if base is not None:
            yield _lower1(base), (profile._ranks[ch],), upper
            continue
        decomp = unicodedata.normalize("NFD", ch)
        marks = tuple(ord(m) for m in decomp[1:] if unicodedata.combining(m))
        head = decomp[0] if not unicodedata.combining(decomp[0]) else ch
        rest = [c for c in decomp[1:] if not unicodedata.combining(c)]
        yield _lower1(head), marks, upper
        for c in rest:
            yield _lower1(c), (), 1 if c.isupper() else 0


def _move_particle(text: str, profile: CollationProfile) -> str:
    if profile.particles != "end":
        return text
    head, sep, rest = text.partition(" ")
    if sep and rest and _fold(head) in profile.particle_words:
        return f"{rest} {head}"
    return text


def _fold(text):
    return "".join(_lower1(c) for c in text)


def collation_key(text: str, profile: CollationProfile = DEFAULT_PROFILE):
    text = unicodedata.normalize("NFC", text)
    elems = list(_elements(_move_particle(text, profile), profile))
    primary = "".join(e[0] for e in elems)
    secondary = tuple(e[1] for e in elems)
    tertiary = tuple(e[2] for e in elems)
    return (primary, secondary, tertiary, text)


def collate(strings, profile: CollationProfile = DEFAULT_PROFILE) -> list:
    """Sort ``strings`` by :func:`collation_key` (stable, permutation-invariant)."""
    return sorted(strings, key=lambda s: collation_key(s, profile))


def parse_profile(text: str, name: str = "custom") -> CollationProfile:
    expansions, base_map = {}, {}
    particles = "keep"
    words = list(DEFAULT_PARTICLES)
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        op = parts[0]
        if op == "expand" and len(parts) == 3 and len(parts[1]) == 1:
            expansions[parts[1]] = parts[2]
        elif op == "base" and len(parts) == 3 and len(parts[1]) == 1 and len(parts[2]) == 1:
            base_map[parts[1]] = parts[2]
        elif op == "particles" and len(parts) == 2 and parts[1] in ("keep", "end"):
            particles = parts[1]
        elif op == "particle" and len(parts) == 2:
            words.append(_fold(parts[1]))
        elif op == "name" and len(parts) == 2:
            name = parts[1]
        else:
            raise ParseError("SYNTAX", f"bad collation profile line {line!r}", lineno)
    try:
        return CollationProfile(name, expansions, base_map, particles, tuple(words))
    except ValueError as exc:
        raise ParseError("SYNTAX", str(exc)) from None


def format_profile(profile: CollationProfile) -> str:
    lines = [f"name {profile.name}"]
    lines += [f"expand {ch} {exp}" for ch, exp in profile.expansions.items()]
    lines += [f"base {ch} {base}" for ch, base in profile.base_map.items()]
    lines.append(f"particles {profile.particles}")
    return "\n".join(lines) + "\n"


def load_profile(path) -> CollationProfile:
    with open(path, encoding="utf-8") as fh:
        return parse_profile(fh.read(), name=str(path))
