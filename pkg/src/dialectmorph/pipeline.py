# -*- coding: utf-8 -*-
"""End-to-end orchestration.

Tokenizes the input, picks a dialect (user-specified or via the dialect
identifier), runs the chosen dialect's analyzer and tagger, and renders
the three output views (diacritized/POS, tokenized, lemmatized).

The identifier runs on the whole input as one unit: one dialect per
request, matching the single dialect indicator in the interface.
"""

import unicodedata
from dataclasses import dataclass
from typing import Optional

from dialectmorph import did as did_module
from dialectmorph.disambiguator import disambiguate
from dialectmorph.morphdb import DIALECTS, MorphDatabase
from dialectmorph.tagger import TaggerModel

__all__ = ['DIALECT_CHOICES', 'PipelineError', 'DialectResources',
           'DocumentResult', 'word_tokenize', 'process', 'render_view']

DIALECT_CHOICES = ('auto',) + DIALECTS
VIEW_IDS = ('diac_pos', 'tokenized', 'lemmatized')


class PipelineError(ValueError):
    """Raised on empty input, unknown dialects, or unknown views."""


@dataclass(frozen=True)
class DialectResources:
    """The database and tagger serving one dialect."""

    db: MorphDatabase
    tagger: TaggerModel


@dataclass(frozen=True)
class DocumentResult:
    """Pipeline output for one request."""

    dialect_used: str
    dialect_scores: Optional[dict]   # present iff the choice was 'auto'
    words: tuple                     # of DisambiguatedWord
    views: dict                      # view id -> rendered string


def _is_punct_char(ch: str) -> bool:
    return unicodedata.category(ch).startswith('P')


def word_tokenize(text: str) -> list:
    """Split on whitespace, peeling leading and trailing punctuation
    characters off each token into tokens of their own."""
    tokens = []
    for chunk in text.split():
        front = []
        back = []
        while len(chunk) > 1 and _is_punct_char(chunk[0]):
            front.append(chunk[0])
            chunk = chunk[1:]
        while len(chunk) > 1 and _is_punct_char(chunk[-1]):
            back.append(chunk[-1])
            chunk = chunk[:-1]
        tokens.extend(front)
        tokens.append(chunk)
        tokens.extend(reversed(back))
    return tokens


def process(text: str, choice: str, registry: dict,
            did_model=None) -> DocumentResult:
    """Disambiguate *text* as dialect *choice* ('auto' to identify).

    Args:
        text: raw input; must be nonempty after trimming.
        choice: one of 'auto', 'msa', 'egy', 'glf', 'lev'.
        registry: dialect id -> :class:`DialectResources`.
        did_model: trained identifier; required when choice is 'auto'
            and never consulted otherwise.
    """
    if choice not in DIALECT_CHOICES:
        raise PipelineError(f'unknown dialect choice {choice!r}')
    if not text or not text.strip():
        raise PipelineError('empty input')

    dialect_scores = None
    if choice == 'auto':
        if did_model is None:
            raise PipelineError('automatic dialect selection needs a '
                                'dialect identification model')
        result = did_module.identify(text, did_model)
        dialect = result.label
        dialect_scores = result.scores
    else:
        dialect = choice

    resources = registry.get(dialect)
    if resources is None:
        raise PipelineError(f'no resources loaded for dialect {dialect!r}')

    words = disambiguate(word_tokenize(text), resources.db, resources.tagger)
    supports_diac = resources.db.supports_diacritization
    views = {view: render_view(words, view, supports_diac)
             for view in VIEW_IDS}
    return DocumentResult(dialect_used=dialect, dialect_scores=dialect_scores,
                          words=tuple(words), views=views)


def render_view(words, view_id: str, supports_diacritization: bool) -> str:
    """Render one output view from disambiguated words.

    diac_pos   -- per word ``diac/POS`` (``raw/POS`` for dialects whose
                  resources carry no diacritics).
    tokenized  -- the top analysis tokens joined as-is, '+' markers kept.
    lemmatized -- the top analysis lemmas.
    """
    if view_id == 'diac_pos':
        return ' '.join(
            f'{w.top.diac if supports_diacritization else w.raw}'
            f'/{w.top.features["pos"]}'
            for w in words)
    if view_id == 'tokenized':
        return ' '.join(''.join(w.top.tokens) for w in words)
    if view_id == 'lemmatized':
        return ' '.join(w.top.lemma for w in words)
    raise PipelineError(f'unknown view {view_id!r}')
