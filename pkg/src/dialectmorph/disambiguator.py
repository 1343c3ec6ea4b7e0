# -*- coding: utf-8 -*-
"""In-context ranking of morphological analyses.

Each word's out-of-context readings are scored by their expected
per-feature agreement with the tagger's posterior tag distribution at
that position, then reordered by score.  Using the full posterior (not
just the single best tag) keeps scores informative even when no reading
matches the top tag exactly.
"""

from dataclasses import dataclass

from dialectmorph.analyzer import analyze_with_backoff, rescored
from dialectmorph.morphdb import FEATURE_KEYS, MorphDatabase
from dialectmorph.tagger import TaggerModel, predict_tags

__all__ = ['DisambiguatedWord', 'score_analysis', 'disambiguate']

_NUM_FEATURES = len(FEATURE_KEYS)


@dataclass(frozen=True)
class DisambiguatedWord:
    """A word with its analyses ordered by disambiguation score.

    The first analysis is the in-context choice.  Scores are in [0, 1]
    and non-increasing down the list.
    """

    raw: str
    analyses: tuple

    @property
    def top(self):
        return self.analyses[0]


def score_analysis(analysis, posterior: dict) -> float:
    """Expected fraction of the 11 features on which *analysis* agrees
    with a tag drawn from *posterior*."""
    tag = analysis.tag()
    score = 0.0
    for other, p in posterior.items():
        matches = sum(1 for a, b in zip(tag, other) if a == b)
        score += p * (matches / _NUM_FEATURES)
    return score


def _rank_key(analysis):
    return (-analysis.score, analysis.diac, analysis.lemma, analysis.gloss,
            tuple(analysis.features[k] for k in FEATURE_KEYS))


def disambiguate(sentence, db: MorphDatabase,
                 model: TaggerModel) -> list:
    """Analyze and rank every word of *sentence* in context.

    Returns one :class:`DisambiguatedWord` per input word; an empty
    sentence yields an empty list.
    """
    sentence = list(sentence)
    if not sentence:
        return []
    posteriors = predict_tags(sentence, model)
    result = []
    for word, posterior in zip(sentence, posteriors):
        analyses = [rescored(a, score_analysis(a, posterior))
                    for a in analyze_with_backoff(word, db)]
        analyses.sort(key=_rank_key)
        result.append(DisambiguatedWord(raw=word, analyses=tuple(analyses)))
    return result
