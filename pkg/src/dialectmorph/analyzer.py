# -*- coding: utf-8 -*-
"""Out-of-context morphological analysis.

``analyze`` enumerates every prefix-stem-suffix segmentation of a word
against a :class:`~dialectmorph.morphdb.MorphDatabase` and merges the
matching entries into complete readings.  ``analyze_with_backoff``
guarantees at least one reading by falling back to a proper-noun (or
punctuation) template for out-of-vocabulary words, so downstream
consumers never see an empty analysis list.
"""

import unicodedata
from dataclasses import dataclass, replace

from dialectmorph.morphdb import FEATURE_KEYS, MorphDatabase, MorphEntry
from dialectmorph.script import normalize, strip_diacritics

__all__ = ['Analysis', 'AnalyzerError', 'analyze', 'analyze_with_backoff',
           'avg_ambiguity']


class AnalyzerError(ValueError):
    """Raised on empty input or an empty word list."""


@dataclass(frozen=True)
class Analysis:
    """One complete morphological reading of a word.

    ``features`` is total over the canonical feature keys ('na' where a
    value is unspecified).  ``score`` stays 0.0 until the disambiguator
    assigns an in-context value.
    """

    diac: str
    lemma: str
    gloss: str
    features: dict
    tokens: tuple
    source: str = 'lexicon'
    score: float = 0.0

    def key(self):
        return (self.diac, self.lemma, self.gloss,
                tuple(self.features[k] for k in FEATURE_KEYS),
                self.tokens, self.source)

    def tag(self) -> tuple:
        """The combined morphosyntactic tag of this reading."""
        return tuple(self.features[k] for k in FEATURE_KEYS)


def _sort_key(analysis: Analysis):
    # The contract orders by (diac, lemma); the remaining fields only
    # break ties between readings that differ in gloss or features.
    return (analysis.diac, analysis.lemma, analysis.gloss,
            tuple(analysis.features[k] for k in FEATURE_KEYS))


def merge_entries(prefix: MorphEntry, stem: MorphEntry,
                  suffix: MorphEntry) -> Analysis:
    """Merge a licensed (prefix, stem, suffix) triple into one reading.

    Feature precedence is stem < prefix < suffix: inflectional suffixes
    carry agreement values that must override stem defaults.
    """
    feats = dict(stem.feats)
    feats.update(prefix.feats)
    feats.update(suffix.feats)
    features = {k: feats.get(k, 'na') for k in FEATURE_KEYS}
    return Analysis(
        diac=prefix.diac + stem.diac + suffix.diac,
        lemma=stem.lemma,
        gloss=stem.gloss,
        features=features,
        tokens=prefix.tokens + stem.tokens + suffix.tokens,
        source='lexicon',
    )


def analyze(word: str, db: MorphDatabase) -> list:
    """Produce all out-of-context readings of *word* from the lexicon.

    The word is normalized and dediacritized, then every split
    ``w = prefix + stem + suffix`` (stem nonempty, affix lengths bounded
    by the database) is looked up; entry triples that pass all three
    compatibility tables are merged.  Duplicate readings are removed and
    the result is ordered lexicographically by (diac, lemma).

    Raises:
        AnalyzerError: if *word* is empty after trimming.
    """
    word = word.strip()
    if not word:
        raise AnalyzerError('cannot analyze an empty word')

    w = strip_diacritics(normalize(word))
    results = []
    seen = set()
    n = len(w)
    for p_len in range(0, min(db.max_prefix_len, n - 1) + 1):
        prefix_entries = db.prefixes.get(w[:p_len])
        if prefix_entries is None:
            continue
        for x_len in range(0, min(db.max_suffix_len, n - p_len - 1) + 1):
            suffix_entries = db.suffixes.get(w[n - x_len:] if x_len else '')
            if suffix_entries is None:
                continue
            stem_entries = db.stems.get(w[p_len:n - x_len])
            if stem_entries is None:
                continue
            for stem in stem_entries:
                for prefix in prefix_entries:
                    if (prefix.cat, stem.cat) not in db.compat_ab:
                        continue
                    for suffix in suffix_entries:
                        if (stem.cat, suffix.cat) not in db.compat_bc:
                            continue
                        if (prefix.cat, suffix.cat) not in db.compat_ac:
                            continue
                        analysis = merge_entries(prefix, stem, suffix)
                        if analysis.key() not in seen:
                            seen.add(analysis.key())
                            results.append(analysis)
    results.sort(key=_sort_key)
    return results


def _is_punct(word: str) -> bool:
    return all(unicodedata.category(ch).startswith('P') for ch in word)


def backoff_analysis(word: str, db: MorphDatabase) -> Analysis:
    """The fallback reading for a word the lexicon cannot analyze.

    Proper-noun template, except that punctuation-only words get
    ``pos=punc`` so they render sensibly in the part-of-speech view.
    """
    word = word.strip()
    norm = normalize(word)
    diac = norm if db.supports_diacritization else word
    features = {k: 'na' for k in FEATURE_KEYS}
    features['pos'] = 'punc' if _is_punct(word) else 'noun_prop'
    return Analysis(
        diac=diac,
        lemma=norm,
        gloss='NO_ANALYSIS',
        features=features,
        tokens=(diac,),
        source='backoff',
    )


def analyze_with_backoff(word: str, db: MorphDatabase) -> list:
    """Like :func:`analyze`, but never returns an empty list."""
    analyses = analyze(word, db)
    if analyses:
        return analyses
    return [backoff_analysis(word, db)]


def avg_ambiguity(words, db: MorphDatabase) -> float:
    """Mean number of readings per word, backoff included.

    Raises:
        AnalyzerError: if *words* is empty (or any word is).
    """
    words = list(words)
    if not words:
        raise AnalyzerError('word list is empty')
    return sum(len(analyze_with_backoff(w, db)) for w in words) / len(words)


def rescored(analysis: Analysis, score: float) -> Analysis:
    """A copy of *analysis* with its disambiguation score set."""
    return replace(analysis, score=score)
