# -*- coding: utf-8 -*-
"""Dialect-specific morphological database.

A database holds three entry tables (prefixes, stems, suffixes) indexed
by their undiacritized match form, plus the three pairwise compatibility
tables that license prefix-stem, stem-suffix, and prefix-suffix
combinations.

Databases are loaded from a single JSON document (see ``load_db``) and
are immutable after validation.  Concurrent reads are unrestricted.
"""

import json
from dataclasses import dataclass, field

from dialectmorph.script import normalize, strip_diacritics

__all__ = [
    'DIALECTS',
    'FEATURE_KEYS',
    'DatabaseError',
    'DatabaseParseError',
    'DatabaseValidationError',
    'MorphEntry',
    'MorphDatabase',
    'load_db',
    'db_capabilities',
]

DIALECTS = ('msa', 'egy', 'glf', 'lev')

# Canonical feature inventory; every analysis is total over these keys.
FEATURE_KEYS = ('pos', 'asp', 'per', 'gen', 'num', 'vox', 'mod',
                'cas', 'stt', 'prc', 'enc')


class DatabaseError(ValueError):
    """Base class for database loading problems."""


class DatabaseParseError(DatabaseError):
    """The document is structurally malformed."""


class DatabaseValidationError(DatabaseError):
    """The document parsed but violates a database invariant."""


@dataclass(frozen=True)
class MorphEntry:
    """One prefix, stem, or suffix entry.

    ``match`` is the normalized undiacritized surface used for lookup
    (may be empty for null affixes), ``diac`` the diacritized form,
    ``cat`` the compatibility category, ``feats`` a partial feature map,
    and ``tokens`` the clitic-segmented form (proclitics carry a
    trailing ``+``, enclitics a leading ``+``).  Stems also carry
    ``lemma`` and ``gloss``.
    """

    match: str
    diac: str
    cat: str
    feats: dict = field(default_factory=dict)
    tokens: tuple = ()
    lemma: str = ''
    gloss: str = ''

    def key(self):
        return (self.match, self.diac, self.cat,
                tuple(sorted(self.feats.items())),
                self.tokens, self.lemma, self.gloss)


_TABLE_KIND = {'prefixes': 'prefix', 'stems': 'stem', 'suffixes': 'suffix'}


def _check_entry(kind: str, entry: MorphEntry, name: str):
    stripped = ''.join(tok.strip('+') for tok in entry.tokens)
    if stripped != entry.diac:
        raise DatabaseValidationError(
            f'{name}: tokens {list(entry.tokens)} do not concatenate to '
            f'diac {entry.diac!r}')
    expected_match = strip_diacritics(normalize(entry.diac))
    if entry.match != expected_match:
        raise DatabaseValidationError(
            f'{name}: match form {entry.match!r} differs from normalized '
            f'undiacritized diac {expected_match!r}')
    for feat in entry.feats:
        if feat not in FEATURE_KEYS:
            raise DatabaseValidationError(
                f'{name}: unknown feature {feat!r}')
    if kind == 'stem':
        if not entry.match:
            raise DatabaseValidationError(f'{name}: stem has empty match form')
        if not entry.lemma or not entry.gloss:
            raise DatabaseValidationError(
                f'{name}: stems must carry lemma and gloss')
        for tok in entry.tokens:
            if tok.startswith('+') or tok.endswith('+'):
                raise DatabaseValidationError(
                    f'{name}: stem token {tok!r} carries a clitic marker')
    else:
        if entry.lemma or entry.gloss:
            raise DatabaseValidationError(
                f'{name}: affixes must not carry lemma or gloss')
        if kind == 'prefix':
            bad = [t for t in entry.tokens
                   if not t.endswith('+') or t.startswith('+')]
        else:
            bad = [t for t in entry.tokens
                   if not t.startswith('+') or t.endswith('+')]
        if bad:
            raise DatabaseValidationError(
                f'{name}: {kind} token {bad[0]!r} has a misplaced + marker')


@dataclass(frozen=True)
class MorphDatabase:
    """A validated, immutable morphological database for one dialect."""

    dialect: str
    supports_diacritization: bool
    prefixes: dict      # match form -> tuple of MorphEntry
    stems: dict
    suffixes: dict
    compat_ab: frozenset
    compat_bc: frozenset
    compat_ac: frozenset
    max_prefix_len: int
    max_suffix_len: int

    @staticmethod
    def from_dict(doc: dict) -> 'MorphDatabase':
        """Build and validate a database from a parsed document."""
        if not isinstance(doc, dict):
            raise DatabaseParseError('database document must be an object')
        meta = doc.get('meta')
        if not isinstance(meta, dict):
            raise DatabaseParseError("missing or malformed 'meta' section")
        dialect = meta.get('dialect')
        if dialect not in DIALECTS:
            raise DatabaseParseError(
                f"meta.dialect must be one of {list(DIALECTS)}, "
                f'got {dialect!r}')
        supports_diac = meta.get('supports_diacritization')
        if not isinstance(supports_diac, bool):
            raise DatabaseParseError(
                'meta.supports_diacritization must be a boolean')
        if dialect == 'glf' and supports_diac:
            raise DatabaseValidationError(
                'the Gulf database cannot support diacritization')

        tables = {}
        cats = {}
        for section, kind in _TABLE_KIND.items():
            raw = doc.get(section)
            if not isinstance(raw, list):
                raise DatabaseParseError(
                    f"missing or malformed '{section}' section")
            entries = []
            seen = set()
            for i, item in enumerate(raw):
                entry = _parse_entry(section, i, item)
                _check_entry(kind, entry, f'{section}[{i}]')
                if entry.key() in seen:
                    raise DatabaseValidationError(
                        f'{section}[{i}]: duplicate entry')
                seen.add(entry.key())
                entries.append(entry)
            tables[section] = entries
            cats[section] = {e.cat for e in entries}

        if not tables['stems']:
            raise DatabaseValidationError('no stems')
        for section in ('prefixes', 'suffixes'):
            if not any(e.match == '' for e in tables[section]):
                raise DatabaseValidationError(
                    f'{section}: a null entry (empty match form) is required')

        compat = {}
        sides = {'compat_ab': ('prefixes', 'stems'),
                 'compat_bc': ('stems', 'suffixes'),
                 'compat_ac': ('prefixes', 'suffixes')}
        for key, (left, right) in sides.items():
            raw = doc.get(key)
            if not isinstance(raw, list):
                raise DatabaseParseError(f"missing or malformed '{key}' section")
            pairs = set()
            for i, item in enumerate(raw):
                if (not isinstance(item, (list, tuple)) or len(item) != 2
                        or not all(isinstance(c, str) for c in item)):
                    raise DatabaseParseError(
                        f'{key}[{i}]: expected a pair of category names')
                a, b = item
                if a not in cats[left]:
                    raise DatabaseValidationError(
                        f'{key}[{i}]: category {a!r} appears on no '
                        f'{left} entry')
                if b not in cats[right]:
                    raise DatabaseValidationError(
                        f'{key}[{i}]: category {b!r} appears on no '
                        f'{right} entry')
                pairs.add((a, b))
            compat[key] = frozenset(pairs)

        def _index(entries):
            index = {}
            for entry in entries:
                index.setdefault(entry.match, []).append(entry)
            return {m: tuple(es) for m, es in index.items()}

        return MorphDatabase(
            dialect=dialect,
            supports_diacritization=supports_diac,
            prefixes=_index(tables['prefixes']),
            stems=_index(tables['stems']),
            suffixes=_index(tables['suffixes']),
            compat_ab=compat['compat_ab'],
            compat_bc=compat['compat_bc'],
            compat_ac=compat['compat_ac'],
            max_prefix_len=max(len(e.match) for e in tables['prefixes']),
            max_suffix_len=max(len(e.match) for e in tables['suffixes']),
        )

    def entries(self, table: str):
        """All entries of one table ('prefixes', 'stems', or 'suffixes')."""
        index = getattr(self, table)
        for group in index.values():
            yield from group


def _parse_entry(section: str, i: int, item) -> MorphEntry:
    if not isinstance(item, dict):
        raise DatabaseParseError(f'{section}[{i}]: entry must be an object')
    try:
        match = item['match']
        diac = item['diac']
        cat = item['cat']
    except KeyError as exc:
        raise DatabaseParseError(
            f'{section}[{i}]: missing field {exc.args[0]!r}') from None
    feats = item.get('feats', {})
    tokens = item.get('tokens', [])
    if (not isinstance(match, str) or not isinstance(diac, str)
            or not isinstance(cat, str) or not isinstance(feats, dict)
            or not isinstance(tokens, list)):
        raise DatabaseParseError(f'{section}[{i}]: field with wrong type')
    return MorphEntry(
        match=match, diac=diac, cat=cat,
        feats={str(k): str(v) for k, v in feats.items()},
        tokens=tuple(str(t) for t in tokens),
        lemma=str(item.get('lemma', '')),
        gloss=str(item.get('gloss', '')),
    )


def load_db(source) -> MorphDatabase:
    """Load and validate a database from a JSON file path or parsed dict.

    Raises:
        DatabaseParseError: the document is not well formed.
        DatabaseValidationError: an invariant does not hold.
    """
    if isinstance(source, dict):
        return MorphDatabase.from_dict(source)
    with open(source, encoding='utf-8') as fp:
        try:
            doc = json.load(fp)
        except json.JSONDecodeError as exc:
            raise DatabaseParseError(
                f'{source}: invalid JSON at line {exc.lineno}, '
                f'column {exc.colno}: {exc.msg}') from None
    return MorphDatabase.from_dict(doc)


def db_capabilities(db: MorphDatabase):
    """Return the (dialect, supports_diacritization) flags verbatim."""
    return db.dialect, db.supports_diacritization
