# -*- coding: utf-8 -*-
"""Arabic-script text utilities.

Deterministic character-level operations used everywhere a surface form
has to be matched against the lexicon:

1. ``normalize``        -- orthographic normalization (hamza-Alef variants
                           to bare Alef, Alef-Maqsura to Ya).
2. ``strip_diacritics`` -- removal of the short-vowel and gemination marks
                           (fatha, damma, kasra, sukun, shadda, tanween).
3. ``bw_to_ar`` / ``ar_to_bw`` -- Buckwalter transliteration in both
                           directions, driven by a data table.

All tables cover both the Arabic code points and their Buckwalter ASCII
counterparts, so the same functions run unchanged on raw Arabic input
and on Buckwalter-romanized lexica and test fixtures.

Ta-Marbuta is deliberately left alone by ``normalize``: it is lexically
contrastive in suffixes and collapsing it would merge distinct entries.
"""

from dataclasses import dataclass, field
from importlib import resources

__all__ = [
    'NormalizationPolicy',
    'TransliterationError',
    'DEFAULT_POLICY',
    'normalize',
    'strip_diacritics',
    'load_buckwalter_table',
    'bw_to_ar',
    'ar_to_bw',
]


# Hamza-carrying Alef variants that collapse to bare Alef.
_HAMZA_ALEF_AR = 'آأإٱ'   # madda, hamza above/below, wasla
_HAMZA_ALEF_BW = '|><{'
_BARE_ALEF_AR = 'ا'
_BARE_ALEF_BW = 'A'

# Alef-Maqsura folds into Ya.
_ALEF_MAQSURA_AR = 'ى'
_ALEF_MAQSURA_BW = 'Y'
_YA_AR = 'ي'
_YA_BW = 'y'

# fathatan, dammatan, kasratan, fatha, damma, kasra, shadda, sukun
_DIACRITICS_AR = ''.join(chr(c) for c in range(0x064B, 0x0653))
_DIACRITICS_BW = 'FNKauio~'

DIACRITICS = frozenset(_DIACRITICS_AR + _DIACRITICS_BW)


class TransliterationError(ValueError):
    """Raised when a string contains a character outside the mapping table."""


@dataclass(frozen=True)
class NormalizationPolicy:
    """An ordered set of single-character rewrites applied in one pass.

    Each rule maps a character class (a set of characters) to one
    replacement character.  Classes must be disjoint and no replacement
    may itself be a rewrite source, which makes the policy idempotent.
    """

    rules: tuple = field(default_factory=tuple)

    def __post_init__(self):
        table = {}
        for chars, replacement in self.rules:
            for ch in chars:
                if ch in table:
                    raise ValueError(f'overlapping rewrite source {ch!r}')
                table[ch] = replacement
        for chars, _ in self.rules:
            for _, replacement in self.rules:
                if replacement in chars:
                    raise ValueError(
                        f'replacement {replacement!r} is itself a rewrite source')
        object.__setattr__(self, '_table', table)

    def apply(self, text: str) -> str:
        table = self._table
        return ''.join(table.get(ch, ch) for ch in text)


DEFAULT_POLICY = NormalizationPolicy(rules=(
    (frozenset(_HAMZA_ALEF_AR), _BARE_ALEF_AR),
    (frozenset(_HAMZA_ALEF_BW), _BARE_ALEF_BW),
    (frozenset(_ALEF_MAQSURA_AR), _YA_AR),
    (frozenset(_ALEF_MAQSURA_BW), _YA_BW),
))


def normalize(text: str, policy: NormalizationPolicy = DEFAULT_POLICY) -> str:
    """Apply the orthographic normalization policy to *text*.

    Characters outside the policy's rewrite classes pass through
    unchanged; the function is total and idempotent.
    """
    return policy.apply(text)


def strip_diacritics(text: str) -> str:
    """Remove all Arabic diacritic marks from *text*, preserving order."""
    return ''.join(ch for ch in text if ch not in DIACRITICS)


def _parse_table_line(line: str, lineno: int):
    parts = line.split('\t')
    if len(parts) != 2:
        raise ValueError(
            f'line {lineno}: expected <char> TAB <codepoint-hex>, got {line!r}')
    bw, hexcp = parts[0], parts[1].strip()
    if len(bw) != 1:
        raise ValueError(f'line {lineno}: mapping source must be one character')
    try:
        ar = chr(int(hexcp, 16))
    except ValueError:
        raise ValueError(f'line {lineno}: bad codepoint {hexcp!r}') from None
    return bw, ar


def load_buckwalter_table(path=None) -> dict:
    """Load a Buckwalter mapping table, validating that it is a bijection.

    Args:
        path: optional file path.  Defaults to the table shipped with the
            package.

    Returns:
        dict mapping each Buckwalter character to one Arabic character.
    """
    if path is None:
        text = (resources.files('dialectmorph') / 'data/buckwalter.tsv') \
            .read_text(encoding='utf-8')
    else:
        with open(path, encoding='utf-8') as fp:
            text = fp.read()

    table = {}
    seen_ar = set()
    for lineno, raw in enumerate(text.split('\n'), start=1):
        line = raw.rstrip('\n')
        if not line or line.startswith('#'):
            continue
        bw, ar = _parse_table_line(line, lineno)
        if bw in table:
            raise ValueError(f'line {lineno}: duplicate source {bw!r}')
        if ar in seen_ar:
            raise ValueError(f'line {lineno}: duplicate target U+{ord(ar):04X}')
        table[bw] = ar
        seen_ar.add(ar)
    return table


_DEFAULT_BW_TABLE = None


def _default_table() -> dict:
    global _DEFAULT_BW_TABLE
    if _DEFAULT_BW_TABLE is None:
        _DEFAULT_BW_TABLE = load_buckwalter_table()
    return _DEFAULT_BW_TABLE


def _map_string(text: str, table: dict, direction: str) -> str:
    out = []
    for offset, ch in enumerate(text):
        try:
            out.append(table[ch])
        except KeyError:
            raise TransliterationError(
                f'{direction}: unmapped character {ch!r} at offset {offset}'
            ) from None
    return ''.join(out)


def bw_to_ar(text: str, table: dict = None) -> str:
    """Transliterate a Buckwalter string to Arabic script."""
    table = table if table is not None else _default_table()
    return _map_string(text, table, 'bw_to_ar')


def ar_to_bw(text: str, table: dict = None) -> str:
    """Transliterate an Arabic-script string to Buckwalter."""
    table = table if table is not None else _default_table()
    reverse = {ar: bw for bw, ar in table.items()}
    return _map_string(text, reverse, 'ar_to_bw')
