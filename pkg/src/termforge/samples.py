"""Builders for the sample termbases shipped under ``termforge/data``.

``writing_instruments`` is a small concept system around pencils: one generic
hierarchy, a whole/part breakdown of the mechanical pencil and a
material-source link from pencil lead to graphite.  The part names (barrel,
mechanism, push button) are invented sample data.

``elearning`` is an e-Learning vocabulary in English, French and Arabic.  It
also carries two "voiture" concepts (road car, railway passenger coach) as a
homonymy fixture.
"""

from __future__ import annotations

from importlib import resources

from .graph import ConceptGraph, add_relation, associative, generic, partitive
from .lexical import decompose_term
from .model import (GlobalInfo, LanguageSection, TermLevel, TerminologicalEntry, add_entry,
                    new_collection)
from .termbase import Termbase


def _t(term, *, gender=None, number=None, term_type=None, source=None, split=None, pos="noun"):
    feats = {"partOfSpeech": pos}
    if gender:
        feats["gender"] = gender
    if number:
        feats["number"] = number
    if term_type:
        feats["termType"] = term_type
    if source:
        feats["source"] = source
    comps = tuple(decompose_term(term, split)) if split else ()
    return TermLevel(term, feats, comps)


def _entry(eid, sections, domain=None, note=None):
    feats = {}
    if domain:
        feats["subjectDomain"] = domain
    if note:
        feats["note"] = note
    lss = []
    for lang, terms, definition in sections:
        lss.append(LanguageSection(lang, tuple(terms),
                                   {"definition": definition} if definition else None))
    return TerminologicalEntry(eid, tuple(lss), feats)


def _build(coll_id, gi, entries, edges) -> Termbase:
    coll = new_collection(coll_id, gi)
    for te in entries:
        coll = add_entry(coll, te)
    graph = ConceptGraph()
    for e in edges:
        graph = add_relation(graph, e)
    return Termbase(coll, graph)


def build_writing_instruments() -> Termbase:
    m, f = "masculine", "feminine"
    entries = [
        _entry("c-writing-instrument", [
            ("en", [_t("writing instrument", split="whitespace")],
             "instrument used to make marks on a writing surface"),
            ("fr", [_t("instrument d'écriture", gender=m)], None),
        ]),
        _entry("c-pencil", [
            ("en", [_t("pencil")], "writing instrument that leaves a trace of solid marking material"),
            ("fr", [_t("crayon", gender=m)], None),
        ]),
        _entry("c-pen", [
            ("en", [_t("pen")], "writing instrument that applies ink"),
            ("fr", [_t("stylo", gender=m)], None),
        ]),
        _entry("c-wood-pencil", [
            ("en", [_t("wooden pencil", split="whitespace")], None),
            ("fr", [_t("crayon de bois", gender=m, split="whitespace")], None),
        ]),
        _entry("c-mech-pencil", [
            ("en", [_t("mechanical pencil", split="whitespace")],
             "pencil whose lead is advanced by a mechanism"),
            ("fr", [_t("porte-mine", gender=m, split="hyphen")], None),
        ]),
        _entry("c-lead", [
            ("en", [_t("lead")], "writing material held by a pencil"),
            ("fr", [_t("mine", gender=f)], None),
        ]),
        _entry("c-barrel", [
            ("en", [_t("barrel")], None),
            ("fr", [_t("corps", gender=m)], None),
        ], note="invented sample part"),
        _entry("c-mechanism", [
            ("en", [_t("mechanism")], None),
            ("fr", [_t("mécanisme", gender=m)], None),
        ], note="invented sample part"),
        _entry("c-push-button", [
            ("en", [_t("push button", split="whitespace")], None),
            ("fr", [_t("poussoir", gender=m)], None),
        ], note="invented sample part"),
        _entry("c-graphite", [
            ("en", [_t("graphite")], "mineral form of carbon"),
            ("fr", [_t("graphite", gender=m)], None),
        ], domain="mineralogy"),
    ]
    edges = [
        generic("c-writing-instrument", "c-pencil"),
        generic("c-writing-instrument", "c-pen"),
        generic("c-pencil", "c-mech-pencil"),
        generic("c-pencil", "c-wood-pencil"),
        partitive("c-mech-pencil", "c-lead"),
        partitive("c-mech-pencil", "c-barrel"),
        partitive("c-mech-pencil", "c-mechanism"),
        partitive("c-mechanism", "c-push-button"),
        associative("c-lead", "c-graphite", "material-source"),
    ]
    gi = GlobalInfo(title="Writing instruments concept system", source="termforge sample data")
    return _build("writing-instruments", gi, entries, edges)


def build_elearning() -> Termbase:
    m, f = "masculine", "feminine"
    iso = "ISO/IEC 2382-36"
    entries = [
        _entry("c-learning", [
            ("en", [_t("learning", source=iso)], "acquisition of knowledge, skills or attitudes"),
            ("fr", [_t("apprentissage", gender=m)], "acquisition de connaissances, d'aptitudes ou d'attitudes"),
            ("ar", [_t("التعلم", gender=m)], None),
        ], domain="education"),
        _entry("c-education", [
            ("en", [_t("education")], None),
            ("fr", [_t("éducation", gender=f)], None),
            ("ar", [_t("التربية", gender=f)], None),
        ], domain="education"),
        _entry("c-training", [
            ("en", [_t("training")], None),
            ("fr", [_t("formation", gender=f)], None),
            ("ar", [_t("التدريب", gender=m), _t("التكوين", gender=m)], None),
        ], domain="education"),
        _entry("c-teaching", [
            ("en", [_t("teaching")], None),
            ("fr", [_t("enseignement", gender=m)], None),
            ("ar", [_t("التدريس", gender=m)], None),
        ], domain="education"),
        _entry("c-elearning", [
            ("en", [_t("e-learning", source=iso), _t("online learning", split="whitespace")],
             "learning supported by information and communication technologies"),
            ("fr", [_t("apprentissage en ligne", gender=m, split="whitespace"),
                    _t("e-formation", gender=f, split="hyphen")], None),
            ("ar", [_t("التعلم الإلكتروني", gender=m, split="whitespace")], None),
        ], domain="education"),
        _entry("c-blended-learning", [
            ("en", [_t("blended learning", source=iso, split="whitespace")],
             "learning that combines face-to-face and online activities"),
            ("fr", [_t("apprentissage mixte", gender=m, split="whitespace"),
                    _t("formation hybride", gender=f, split="whitespace")], None),
            ("ar", [_t("التعلم المدمج", gender=m, split="whitespace")], None),
        ], domain="education"),
        _entry("c-distance-learning", [
            ("en", [_t("distance learning", split="whitespace")], None),
            ("fr", [_t("enseignement à distance", gender=m, split="whitespace")], None),
            ("ar", [_t("التعليم عن بعد", gender=m)], None),
        ], domain="education"),
        _entry("c-learner", [
            ("en", [_t("learner", source=iso)], "person engaged in acquiring knowledge or skills"),
            ("fr", [_t("apprenant", gender=m)], None),
            ("ar", [_t("المتعلم", gender=m)], None),
        ], domain="education"),
        _entry("c-teacher", [
            ("en", [_t("teacher")], None),
            ("fr", [_t("enseignant", gender=m)], None),
            ("ar", [_t("المدرس", gender=m)], None),
        ], domain="education"),
        _entry("c-tutor", [
            ("en", [_t("tutor")], None),
            ("fr", [_t("tuteur", gender=m)], None),
            ("ar", [_t("المؤطر", gender=m)], None),
        ], domain="education"),
        _entry("c-encadrement", [
            ("en", [_t("supervision")], "guidance of learners by a tutor or teacher"),
            ("fr", [_t("encadrement", gender=m)], None),
            ("ar", [_t("تأطير", gender=m)], None),
        ], domain="education", note="Arabic term transliterated Ta'tir; Maghreb usage"),
        _entry("c-lms", [
            ("en", [_t("learning management system", split="whitespace"),
                    _t("LMS", term_type="acronym")], None),
            ("fr", [_t("système de gestion de l'apprentissage", gender=m)], None),
            ("ar", [_t("نظام إدارة التعلم", gender=m, split="whitespace")], None),
        ], domain="educational technology"),
        _entry("c-learning-environment", [
            ("en", [_t("learning environment", split="whitespace")], None),
            ("fr", [_t("environnement d'apprentissage", gender=m)], None),
            ("ar", [_t("بيئة التعلم", gender=f, split="whitespace")], None),
        ], domain="educational technology"),
        _entry("c-vle", [
            ("en", [_t("virtual learning environment", split="whitespace"),
                    _t("VLE", term_type="acronym")], None),
            ("fr", [_t("environnement virtuel d'apprentissage", gender=m)], None),
            ("ar", [_t("بيئة التعلم الافتراضية", gender=f)], None),
        ], domain="educational technology"),
        _entry("c-cms", [
            ("en", [_t("content management system", split="whitespace"),
                    _t("CMS", term_type="acronym")], None),
            ("fr", [_t("système de gestion de contenu", gender=m, split="whitespace")], None),
            ("ar", [_t("نظام إدارة المحتوى", gender=m)], None),
        ], domain="educational technology"),
        _entry("c-learning-object", [
            ("en", [_t("learning object", source=iso, split="whitespace")], None),
            ("fr", [_t("objet d'apprentissage", gender=m)], None),
            ("ar", [_t("كائن تعليمي", gender=m)], None),
        ], domain="educational technology"),
        _entry("c-lom", [
            ("en", [_t("learning object metadata", split="whitespace"),
                    _t("LOM", term_type="acronym")], None),
            ("fr", [_t("métadonnées pour objets d'apprentissage", gender=f, number="plural")], None),
            ("ar", [_t("البيانات الوصفية لكائنات التعلم", gender=f, number="plural")], None),
        ], domain="educational technology"),
        _entry("c-metadata", [
            ("en", [_t("metadata", number="plural")], "data describing other data"),
            ("fr", [_t("métadonnées", gender=f, number="plural")], None),
            ("ar", [_t("البيانات الوصفية", gender=f, number="plural")], None),
        ], domain="educational technology"),
        _entry("c-curriculum", [
            ("en", [_t("curriculum")], None),
            ("fr", [_t("programme d'études", gender=m)], None),
            ("ar", [_t("المنهاج الدراسي", gender=m)], None),
        ], domain="education"),
        _entry("c-course", [
            ("en", [_t("course")], None),
            ("fr", [_t("cours", gender=m)], None),
            ("ar", [_t("المقرر", gender=m)], None),
        ], domain="education"),
        _entry("c-assessment", [
            ("en", [_t("assessment")], None),
            ("fr", [_t("évaluation", gender=f)], None),
            ("ar", [_t("التقييم", gender=m)], None),
        ], domain="education"),
        _entry("c-certification", [
            ("en", [_t("certification")], None),
            ("fr", [_t("certification", gender=f)], None),
            ("ar", [_t("الإشهاد", gender=m)], None),
        ], domain="education"),
        _entry("c-diploma", [
            ("en", [_t("diploma")], None),
            ("fr", [_t("diplôme", gender=m)], None),
            ("ar", [_t("الشهادة", gender=f)], None),
        ], domain="education"),
        _entry("c-competency", [
            ("en", [_t("competency")], None),
            ("fr", [_t("compétence", gender=f)], None),
            ("ar", [_t("الكفاءة", gender=f)], None),
        ], domain="education"),
        _entry("c-institution", [
            ("en", [_t("educational institution", split="whitespace")], None),
            ("fr", [_t("établissement d'enseignement", gender=m)], None),
            ("ar", [_t("مؤسسة تعليمية", gender=f)], None),
        ], domain="education"),
        _entry("c-university", [
            ("en", [_t("university")], None),
            ("fr", [_t("université", gender=f)], None),
            ("ar", [_t("الجامعة", gender=f)], None),
        ], domain="education"),
        _entry("c-school", [
            ("en", [_t("school")], None),
            ("fr", [_t("école", gender=f)], None),
            ("ar", [_t("المدرسة", gender=f)], None),
        ], domain="education"),
        _entry("c-learning-level", [
            ("en", [_t("learning level", split="whitespace")], None),
            ("fr", [_t("niveau d'apprentissage", gender=m)], None),
            ("ar", [_t("مستوى التعلم", gender=m)], None),
        ], domain="education"),
        _entry("c-pedagogy", [
            ("en", [_t("pedagogy")], None),
            ("fr", [_t("pédagogie", gender=f)], None),
            ("ar", [_t("علم التربية", gender=m)], None),
        ], domain="education"),
        _entry("c-ict-education", [
            ("en", [_t("information and communication technologies for education"),
                    _t("ICTE", term_type="acronym")], None),
            ("fr", [_t("TICE", gender=f, number="plural", term_type="acronym")], None),
            ("ar", [_t("تكنولوجيا المعلومات والاتصال في التعليم", gender=f)], None),
        ], domain="educational technology"),
        _entry("c-learning-resource", [
            ("en", [_t("learning resource", split="whitespace")], None),
            ("fr", [_t("ressource pédagogique", gender=f, split="whitespace")], None),
            ("ar", [_t("مورد تعليمي", gender=m)], None),
        ], domain="educational technology"),
        _entry("c-interoperability", [
            ("en", [_t("interoperability")], None),
            ("fr", [_t("interopérabilité", gender=f)], None),
            ("ar", [_t("قابلية التشغيل البيني", gender=f)], None),
        ], domain="educational technology"),
        _entry("c-vocabulary", [
            ("en", [_t("vocabulary")], None),
            ("fr", [_t("vocabulaire", gender=m)], None),
            ("ar", [_t("المفردات", gender=f, number="plural")], None),
        ], domain="terminology"),
        _entry("c-terminology", [
            ("en", [_t("terminology")], None),
            ("fr", [_t("terminologie", gender=f)], None),
            ("ar", [_t("علم المصطلح", gender=m)], None),
        ], domain="terminology"),
        _entry("c-car", [
            ("en", [_t("car")], "road vehicle for carrying passengers"),
            ("fr", [_t("voiture", gender=f), _t("automobile", gender=f)], None),
            ("ar", [_t("سيارة", gender=f)], None),
        ], domain="road transport", note="homonymy fixture"),
        _entry("c-rail-coach", [
            ("en", [_t("passenger coach", split="whitespace")],
             "railway vehicle dedicated to carrying passengers"),
            ("fr", [_t("voiture", gender=f)], None),
            ("ar", [_t("عربة ركاب", gender=f)], None),
        ], domain="rail transport", note="homonymy fixture"),
    ]
    edges = [
        generic("c-learning", "c-elearning"),
        generic("c-learning", "c-blended-learning"),
        generic("c-learning", "c-distance-learning"),
        generic("c-learning-environment", "c-vle"),
        generic("c-learning-environment", "c-lms"),
        generic("c-institution", "c-university"),
        generic("c-institution", "c-school"),
        generic("c-metadata", "c-lom"),
        generic("c-learning-resource", "c-learning-object"),
        generic("c-assessment", "c-certification"),
        generic("c-education", "c-teaching"),
        generic("c-education", "c-training"),
        partitive("c-curriculum", "c-course"),
        associative("c-teacher", "c-learner", "see-also"),
        associative("c-tutor", "c-encadrement", "see-also"),
        associative("c-learning-object", "c-lom", "see-also"),
        associative("c-certification", "c-diploma", "producer-product"),
        associative("c-teaching", "c-learning", "antonym-of"),
        associative("c-vocabulary", "c-terminology", "see-also"),
    ]
    gi = GlobalInfo(title="e-Learning vocabulary", source="termforge sample data")
    return _build("elearn-vocab", gi, entries, edges)


BUILDERS = {
    "writing_instruments": build_writing_instruments,
    "elearning": build_elearning,
}


def data_path(name: str):
    """Path-like handle to a file shipped in ``termforge/data``."""
    return resources.files("termforge").joinpath("data", name)


def load(name: str) -> Termbase:
    """Parse a shipped sample (``"elearning"`` or ``"writing_instruments"``)."""
    from .interchange import parse_gmt

    return parse_gmt(data_path(f"{name}.gmt").read_bytes())
