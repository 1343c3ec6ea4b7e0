# -*- coding: utf-8 -*-
"""Contextual combined-tag sequence model.

A first-order hidden-Markov model over combined morphosyntactic tags
(the 11 feature values joined into one label).  Training counts exact
frequencies; prediction runs the forward-backward procedure under add-k
smoothing and returns, per word, the full posterior distribution over
tags.  The disambiguator consumes these posteriors to rank analyses.

Out-of-vocabulary words emit with a probability that is uniform across
tags, so their posterior is decided entirely by context.
"""

import json
from dataclasses import dataclass

from dialectmorph.morphdb import FEATURE_KEYS

__all__ = ['CombinedTag', 'TaggerError', 'TaggerModel', 'train_tagger',
           'predict_tags', 'read_tagger_corpus', 'save_tagger', 'load_tagger']

DEFAULT_SMOOTHING = 0.1


class TaggerError(ValueError):
    """Raised on empty corpora, empty sentences, or untrained models."""


class CombinedTag:
    """Canonical string form of the 11-value combined tag.

    Serialization is the colon-joined tuple in the fixed feature order;
    values may not contain ':' or '+'.
    """

    @staticmethod
    def serialize(tag: tuple) -> str:
        if len(tag) != len(FEATURE_KEYS):
            raise TaggerError(
                f'combined tag must have {len(FEATURE_KEYS)} values')
        for value in tag:
            if ':' in value or '+' in value:
                raise TaggerError(
                    f'tag value {value!r} contains a reserved character')
        return ':'.join(tag)

    @staticmethod
    def parse(text: str) -> tuple:
        values = text.split(':')
        if len(values) != len(FEATURE_KEYS):
            raise TaggerError(
                f'expected {len(FEATURE_KEYS)} colon-separated values, '
                f'got {len(values)}')
        return tuple(values)

    @staticmethod
    def from_features(features: dict) -> tuple:
        return tuple(features[k] for k in FEATURE_KEYS)


@dataclass(frozen=True)
class TaggerModel:
    """Count tables of a trained tagger.

    All counts are raw nonnegative integers; smoothing happens at
    prediction time so the same model supports any k.
    """

    tags: tuple                 # tag vocabulary, sorted serialized order
    words: frozenset            # word vocabulary
    num_sentences: int
    initial: dict               # tag -> count of sentence-initial uses
    transitions: dict           # tag -> {tag -> count}
    emissions: dict             # tag -> {word -> count}
    tag_totals: dict            # tag -> total occurrences
    k: float = DEFAULT_SMOOTHING

    def __post_init__(self):
        if self.k <= 0:
            raise TaggerError('smoothing constant k must be positive')
        object.__setattr__(self, '_out_totals',
                           {t: sum(row.values())
                            for t, row in self.transitions.items()})

    @property
    def trained(self) -> bool:
        return self.num_sentences > 0 and len(self.tags) > 0

    # Smoothed model probabilities.  V+1 in the emission denominator
    # reserves one bucket of mass for unseen words.

    def initial_p(self, tag: tuple) -> float:
        t = len(self.tags)
        return ((self.initial.get(tag, 0) + self.k)
                / (self.num_sentences + self.k * t))

    def transition_p(self, prev: tuple, tag: tuple) -> float:
        t = len(self.tags)
        row = self.transitions.get(prev, {})
        out_total = self._out_totals.get(prev, 0)
        return (row.get(tag, 0) + self.k) / (out_total + self.k * t)

    def emission_p(self, word: str, tag: tuple) -> float:
        v = len(self.words)
        if word not in self.words:
            return 1.0 / (v + 1)
        return ((self.emissions.get(tag, {}).get(word, 0) + self.k)
                / (self.tag_totals.get(tag, 0) + self.k * (v + 1)))


def train_tagger(corpus, k: float = DEFAULT_SMOOTHING) -> TaggerModel:
    """Train from a corpus of sentences of (word, combined-tag) pairs.

    Counts are exact frequencies; training is deterministic.

    Raises:
        TaggerError: on an empty corpus or an empty sentence.
    """
    corpus = list(corpus)
    if not corpus:
        raise TaggerError('training corpus is empty')

    initial = {}
    transitions = {}
    emissions = {}
    tag_totals = {}
    words = set()

    for idx, sentence in enumerate(corpus):
        sentence = list(sentence)
        if not sentence:
            raise TaggerError(f'sentence {idx} is empty')
        for word, tag in sentence:
            CombinedTag.serialize(tag)     # validates shape
            words.add(word)
            emissions.setdefault(tag, {})
            emissions[tag][word] = emissions[tag].get(word, 0) + 1
            tag_totals[tag] = tag_totals.get(tag, 0) + 1
        first = sentence[0][1]
        initial[first] = initial.get(first, 0) + 1
        for (_, prev), (_, tag) in zip(sentence, sentence[1:]):
            transitions.setdefault(prev, {})
            transitions[prev][tag] = transitions[prev].get(tag, 0) + 1

    tags = tuple(sorted(tag_totals, key=CombinedTag.serialize))
    return TaggerModel(
        tags=tags,
        words=frozenset(words),
        num_sentences=len(corpus),
        initial=initial,
        transitions=transitions,
        emissions=emissions,
        tag_totals=tag_totals,
        k=k,
    )


def predict_tags(sentence, model: TaggerModel) -> list:
    """Posterior tag distribution at every position of *sentence*.

    Runs scaled forward-backward under the add-k-smoothed model; each
    returned dict maps tag tuples to probabilities summing to 1.

    Raises:
        TaggerError: on an empty sentence or an untrained model.
    """
    sentence = list(sentence)
    if not sentence:
        raise TaggerError('cannot predict tags for an empty sentence')
    if not isinstance(model, TaggerModel) or not model.trained:
        raise TaggerError('tagger model is untrained')

    tags = model.tags
    n = len(sentence)

    # Forward pass with per-position normalization to avoid underflow.
    alpha = []
    col = {t: model.initial_p(t) * model.emission_p(sentence[0], t)
           for t in tags}
    alpha.append(_normalized(col))
    for i in range(1, n):
        word = sentence[i]
        prev = alpha[-1]
        col = {}
        for t in tags:
            emit = model.emission_p(word, t)
            col[t] = emit * sum(prev[s] * model.transition_p(s, t)
                                for s in tags)
        alpha.append(_normalized(col))

    # Backward pass, scaled the same way.
    beta = [None] * n
    beta[n - 1] = {t: 1.0 for t in tags}
    for i in range(n - 2, -1, -1):
        word = sentence[i + 1]
        nxt = beta[i + 1]
        col = {t: sum(model.transition_p(t, s) * model.emission_p(word, s)
                      * nxt[s] for s in tags)
               for t in tags}
        beta[i] = _normalized(col)

    posteriors = []
    for i in range(n):
        col = {t: alpha[i][t] * beta[i][t] for t in tags}
        posteriors.append(_normalized(col))
    return posteriors


def _normalized(col: dict) -> dict:
    total = sum(col.values())
    if total <= 0:
        raise TaggerError('degenerate probability column')
    return {t: v / total for t, v in col.items()}


def read_tagger_corpus(path) -> list:
    """Read a training corpus file.

    One token per line as ``word TAB serialized-combined-tag``; blank
    lines separate sentences.
    """
    corpus = []
    sentence = []
    with open(path, encoding='utf-8') as fp:
        for lineno, raw in enumerate(fp, start=1):
            line = raw.rstrip('\n')
            if not line.strip():
                if sentence:
                    corpus.append(sentence)
                    sentence = []
                continue
            parts = line.split('\t')
            if len(parts) != 2:
                raise TaggerError(
                    f'{path}:{lineno}: expected word TAB tag, got {line!r}')
            word, tag_text = parts
            sentence.append((word, CombinedTag.parse(tag_text)))
    if sentence:
        corpus.append(sentence)
    return corpus


def save_tagger(model: TaggerModel, path) -> None:
    """Persist all counts to one self-describing JSON document."""
    doc = {
        'format': 'dialectmorph-tagger',
        'version': 1,
        'k': model.k,
        'num_sentences': model.num_sentences,
        'tags': [CombinedTag.serialize(t) for t in model.tags],
        'words': sorted(model.words),
        'initial': {CombinedTag.serialize(t): c
                    for t, c in model.initial.items()},
        'transitions': {CombinedTag.serialize(t): {
                            CombinedTag.serialize(s): c
                            for s, c in row.items()}
                        for t, row in model.transitions.items()},
        'emissions': {CombinedTag.serialize(t): dict(row)
                      for t, row in model.emissions.items()},
        'tag_totals': {CombinedTag.serialize(t): c
                       for t, c in model.tag_totals.items()},
    }
    with open(path, 'w', encoding='utf-8') as fp:
        json.dump(doc, fp, ensure_ascii=False, sort_keys=True, indent=1)
        fp.write('\n')


def load_tagger(path) -> TaggerModel:
    with open(path, encoding='utf-8') as fp:
        doc = json.load(fp)
    if doc.get('format') != 'dialectmorph-tagger':
        raise TaggerError(f'{path}: not a tagger model file')
    return TaggerModel(
        tags=tuple(CombinedTag.parse(t) for t in doc['tags']),
        words=frozenset(doc['words']),
        num_sentences=doc['num_sentences'],
        initial={CombinedTag.parse(t): c for t, c in doc['initial'].items()},
        transitions={CombinedTag.parse(t): {CombinedTag.parse(s): c
                                            for s, c in row.items()}
                     for t, row in doc['transitions'].items()},
        emissions={CombinedTag.parse(t): dict(row)
                   for t, row in doc['emissions'].items()},
        tag_totals={CombinedTag.parse(t): c
                    for t, c in doc['tag_totals'].items()},
        k=doc['k'],
    )
