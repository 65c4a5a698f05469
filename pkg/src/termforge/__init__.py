"""termforge: concept-first multilingual termbases with pivot-format interchange."""

from .categories import (Constraint, DataCategory, DataCategoryRegistry, Level,
                         builtin_registry, check_binding, load_registry, parse_registry,
                         picklist, register_category)
from .collation import (DEFAULT_PROFILE, CollationProfile, collate, collation_key,
                        load_profile, parse_profile)
from .errors import ParseError, TermforgeError
from .graph import (ConceptGraph, ConceptRelation, RelationKind, add_relation, associations,
                    associative, extract_subsystem, generic, is_more_general, partitive,
                    related, tops, validate_graph)
from .interchange import (Loss, LossReport, convert, emit_dialect, emit_gmt, parse_dialect,
                          parse_gmt)
from .lexical import (build_term_index, decompose_term, detect_term_conflicts, find_concepts,
                      fold, join_components, reconstructs)
from .merge import MergePolicy, MergeReport, align_concepts, merge
from .model import (ComplementaryInfo, GlobalInfo, LanguageSection, TermCollection,
                    TermComponentLevel, TermLevel, TerminologicalEntry, add_entry,
                    canonicalize, lookup_terms, new_collection)
from .report import Finding, ValidationReport
from .termbase import Termbase
from .validation import validate

__version__ = "0.1.0"

__all__ = [
    "CollationProfile", "ComplementaryInfo", "ConceptGraph", "ConceptRelation", "Constraint",
    "DEFAULT_PROFILE", "DataCategory", "DataCategoryRegistry", "Finding", "GlobalInfo",
    "LanguageSection", "Level", "Loss", "LossReport", "MergePolicy", "MergeReport",
    "ParseError", "RelationKind", "TermCollection", "TermComponentLevel", "TermLevel",
    "Termbase", "TermforgeError", "TerminologicalEntry", "ValidationReport", "add_entry",
    "add_relation", "align_concepts", "associations", "associative", "build_term_index",
    "builtin_registry", "canonicalize", "check_binding", "collate", "collation_key",
    "convert", "decompose_term", "detect_term_conflicts", "emit_dialect", "emit_gmt",
    "extract_subsystem", "find_concepts", "fold", "generic", "is_more_general",
    "join_components", "load_profile", "load_registry", "lookup_terms", "merge",
    "new_collection", "parse_dialect", "parse_gmt", "parse_profile", "parse_registry",
    "partitive", "picklist", "reconstructs", "register_category", "related", "tops",
    "validate", "validate_graph",
]
