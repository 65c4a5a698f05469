"""Open registry of data categories.

Every feature key used anywhere in a collection must name a registered
:class:`DataCategory`; the category fixes which levels of the model may carry
it and what values it accepts.  A small core set ships built in and cannot be
shadowed; users extend the catalogue with :func:`register_category` or a
registry file (``key<TAB>levels<TAB>constraint`` per line).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from types import MappingProxyType
from typing import FrozenSet, Mapping, Optional, Tuple

from .errors import ParseError, TermforgeError
from .model import is_identifier, is_lang_tag
from .report import Finding, error


class Level(str, enum.Enum):
    GI = "GI"
    CI = "CI"
    TE = "TE"
    LS = "LS"
    TL = "TL"
    TCL = "TCL"

    def __str__(self):
        return self.value


FREE_TEXT = "free-text"
PICKLIST = "picklist"
LANGUAGE_TAG = "language-tag"
IDENTIFIER_REF = "identifier-ref"
CONSTRAINT_KINDS = (FREE_TEXT, PICKLIST, LANGUAGE_TAG, IDENTIFIER_REF)


@dataclass(frozen=True)
class Constraint:
    kind: str = FREE_TEXT
    values: Tuple[str, ...] = ()

    def __post_init__(self):
        if self.kind not in CONSTRAINT_KINDS:
            raise TermforgeError("BAD_CONSTRAINT", f"unknown constraint kind {self.kind!r}")
        values = tuple(self.values)
        if self.kind == PICKLIST:
            if not values:
                raise TermforgeError("BAD_CONSTRAINT", "picklist needs at least one value")
            if len(set(values)) != len(values) or any(not v or v != v.strip() or " " in v
                                                      for v in values):
                raise TermforgeError("BAD_CONSTRAINT", f"bad picklist tokens {values!r}")
        elif values:
            raise TermforgeError("BAD_CONSTRAINT", f"{self.kind} takes no values")
        object.__setattr__(self, "values", values)

    def accepts(self, value) -> bool:
        if not isinstance(value, str):
            return False
        if self.kind == FREE_TEXT:
            return True
        if self.kind == PICKLIST:
            return value in self.values
        if self.kind == LANGUAGE_TAG:
            return is_lang_tag(value)
        return is_identifier(value)

    def spec(self) -> str:
        if self.kind == PICKLIST:
            return "picklist:" + "|".join(self.values)
        return self.kind

    @classmethod
    def parse(cls, text: str) -> "Constraint":
        text = text.strip()
        if text.startswith("picklist:"):
            return cls(PICKLIST, tuple(v.strip() for v in text[len("picklist:"):].split("|")))
        return cls(text)


def picklist(*values) -> Constraint:
    return Constraint(PICKLIST, values)


@dataclass(frozen=True)
class DataCategory:
    key: str
    levels: FrozenSet[Level]
    constraint: Constraint = Constraint()

    def __post_init__(self):
        if not is_identifier(self.key):
            raise TermforgeError("MALFORMED_ID", f"category key {self.key!r}")
        levels = frozenset(Level(lv) for lv in self.levels)
        if not levels:
            raise TermforgeError("BAD_LEVEL", f"category {self.key} is bound to no level")
        object.__setattr__(self, "levels", levels)


_BUILTINS = (
    DataCategory("definition", {Level.LS}),
    DataCategory("subjectDomain", {Level.TE}),
    DataCategory("partOfSpeech", {Level.TL},
                 picklist("noun", "verb", "adjective", "phrase", "compound")),
    DataCategory("gender", {Level.TL}, picklist("masculine", "feminine", "neuter")),
    DataCategory("number", {Level.TL}, picklist("singular", "plural")),
    DataCategory("termType", {Level.TL},
                 picklist("fullForm", "abbreviation", "acronym", "compound", "phrase")),
    DataCategory("source", {Level.TL, Level.GI}),
    DataCategory("note", {Level.TE, Level.LS, Level.TL, Level.CI}),
)
BUILTIN_KEYS = frozenset(c.key for c in _BUILTINS)


class DataCategoryRegistry:
    """Immutable key -> :class:`DataCategory` map; the built-in core is always present."""

    __slots__ = ("_categories",)

    def __init__(self, categories: Mapping[str, DataCategory] | None = None):
        cats = {c.key: c for c in _BUILTINS}
        for key, cat in (categories or {}).items():
            if key in BUILTIN_KEYS and cat != cats[key]:
                raise TermforgeError("SHADOWS_BUILTIN", key)
            cats[key] = cat
        self._categories = MappingProxyType(cats)

    @property
    def categories(self) -> Mapping[str, DataCategory]:
        return self._categories

    def __contains__(self, key):
        return key in self._categories

    def __getitem__(self, key) -> DataCategory:
        return self._categories[key]

    def get(self, key) -> Optional[DataCategory]:
        return self._categories.get(key)

    def keys(self):
        return sorted(self._categories)

    def __eq__(self, other):
        return isinstance(other, DataCategoryRegistry) and dict(self._categories) == dict(other._categories)

    def __hash__(self):
        return hash(frozenset(self._categories.items()))

    def __repr__(self):
        return f"DataCategoryRegistry({self.keys()!r})"


_BUILTIN_REGISTRY = DataCategoryRegistry()


def builtin_registry() -> DataCategoryRegistry:
    return _BUILTIN_REGISTRY


def register_category(reg: DataCategoryRegistry, cat: DataCategory) -> DataCategoryRegistry:
    if cat.key in BUILTIN_KEYS:
        raise TermforgeError("SHADOWS_BUILTIN", cat.key)
    if cat.key in reg:
        raise TermforgeError("DUPLICATE_KEY", cat.key)
    cats = dict(reg.categories)
    cats[cat.key] = cat
    return DataCategoryRegistry(cats)


def check_binding(reg: DataCategoryRegistry, level, key, value, path="") -> Optional[Finding]:
    """Return ``None`` when ``key=value`` is legal at ``level``, else a finding.

    Finding codes: ``UNKNOWN_CATEGORY``, ``BAD_LEVEL``, ``BAD_VALUE``.
    """
    cat = reg.get(key)
    if cat is None:
        return error("UNKNOWN_CATEGORY", path, f"{key!r} is not a registered data category")
    if Level(level) not in cat.levels:
        allowed = ",".join(sorted(lv.value for lv in cat.levels))
        return error("BAD_LEVEL", path, f"{key} is bound to {allowed}, not {Level(level).value}")
    if not cat.constraint.accepts(value):
        return error("BAD_VALUE", path, f"{value!r} violates {key} constraint {cat.constraint.spec()}")
    return None


# -- registry files -----------------------------------------------------------

def parse_registry(text: str, base: DataCategoryRegistry | None = None) -> DataCategoryRegistry:
    """Read ``key<TAB>levels(csv)<TAB>constraint`` lines on top of ``base``.

    ``#`` starts a comment line; blank lines are skipped.  Constraint specs are
    ``free-text``, ``language-tag``, ``identifier-ref`` or ``picklist:a|b|c``.
    """
    reg = base if base is not None else builtin_registry()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.rstrip("\r")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise ParseError("SYNTAX", "expected key<TAB>levels<TAB>constraint", lineno)
        key, levels, constraint = (p.strip() for p in parts)
        try:
            cat = DataCategory(key, frozenset(lv.strip() for lv in levels.split(",") if lv.strip()),
                               Constraint.parse(constraint))
            reg = register_category(reg, cat)
        except ValueError as exc:
            raise ParseError("SYNTAX", str(exc), lineno) from None
        except TermforgeError as exc:
            raise ParseError(exc.code, exc.message, lineno) from None
    return reg


def format_registry(reg: DataCategoryRegistry, include_builtins=False) -> str:
    lines = []
    for key in reg.keys():
        if key in BUILTIN_KEYS and not include_builtins:
            continue
        cat = reg[key]
        levels = ",".join(lv.value for lv in Level if lv in cat.levels)
        lines.append(f"{key}\t{levels}\t{cat.constraint.spec()}")
    return "".join(line + "\n" for line in lines)


def load_registry(path) -> DataCategoryRegistry:
    with open(path, encoding="utf-8") as fh:
        return parse_registry(fh.read())
