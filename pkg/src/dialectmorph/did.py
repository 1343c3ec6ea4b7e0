# -*- coding: utf-8 -*-
"""Dialect identification.

Multinomial naive Bayes over word unigrams and character 1/2/3-grams,
fused additively with per-dialect language-model scores (a character
5-gram model and a word unigram model, both add-k smoothed).  The fused
log scores go through a softmax to produce the per-dialect posteriors
the API returns.

Features are extracted from the raw, unnormalized string: dialect cues
often live in orthographic variants that normalization would erase.
"""

import json
import math
from collections import Counter
from dataclasses import dataclass

__all__ = ['DidError', 'DidModel', 'DidResult', 'NgramLM', 'train_did',
           'identify', 'label_scores', 'lm_logprob', 'read_did_corpus',
           'save_did', 'load_did']

DEFAULT_SMOOTHING = 0.5
DEFAULT_FUSION_WEIGHT = 1.0
CHAR_LM_ORDER = 5

_BEGIN = '\x02'
_END = '\x03'
_UNSEEN = '\x1a'


class DidError(ValueError):
    """Raised on degenerate training data or untrained models."""


class NgramLM:
    """Add-k-smoothed n-gram model over an arbitrary symbol sequence.

    Sequences are padded with n-1 begin markers and one end marker, so
    an empty sequence still scores the end-given-start transition.
    Symbols unseen in training share one reserved bucket of mass.
    """

    def __init__(self, n: int, k: float = DEFAULT_SMOOTHING):
        if n < 1:
            raise DidError('n-gram order must be >= 1')
        if k <= 0:
            raise DidError('smoothing constant k must be positive')
        self.n = n
        self.k = k
        self.vocab = set()
        self.ngram_counts = {}      # context tuple -> {symbol -> count}
        self.context_counts = {}    # context tuple -> total
        self.trained = False

    def add(self, symbols) -> None:
        symbols = list(symbols)
        self.vocab.update(symbols)
        padded = [_BEGIN] * (self.n - 1) + symbols + [_END]
        for i in range(self.n - 1, len(padded)):
            context = tuple(padded[i - self.n + 1:i])
            row = self.ngram_counts.setdefault(context, {})
            row[padded[i]] = row.get(padded[i], 0) + 1
            self.context_counts[context] = \
                self.context_counts.get(context, 0) + 1
        self.trained = True

    def _event_space(self) -> int:
        # vocabulary plus the end marker and the unseen bucket
        return len(self.vocab) + 2

    def prob(self, context: tuple, symbol: str) -> float:
        if symbol != _END and symbol not in self.vocab:
            symbol = _UNSEEN
        count = self.ngram_counts.get(context, {}).get(symbol, 0)
        total = self.context_counts.get(context, 0)
        return (count + self.k) / (total + self.k * self._event_space())

    def logprob(self, symbols) -> float:
        if not self.trained:
            raise DidError('language model is untrained')
        symbols = [s if s in self.vocab else _UNSEEN for s in symbols]
        padded = [_BEGIN] * (self.n - 1) + symbols + [_END]
        total = 0.0
        for i in range(self.n - 1, len(padded)):
            context = tuple(padded[i - self.n + 1:i])
            total += math.log(self.prob(context, padded[i]))
        return total

    def to_dict(self) -> dict:
        triples = []
        for context in sorted(self.ngram_counts):
            row = self.ngram_counts[context]
            for symbol in sorted(row):
                triples.append([list(context), symbol, row[symbol]])
        return {'n': self.n, 'k': self.k, 'vocab': sorted(self.vocab),
                'counts': triples}

    @staticmethod
    def from_dict(doc: dict) -> 'NgramLM':
        lm = NgramLM(n=doc['n'], k=doc['k'])
        lm.vocab = set(doc['vocab'])
        for context, symbol, count in doc['counts']:
            context = tuple(context)
            row = lm.ngram_counts.setdefault(context, {})
            row[symbol] = row.get(symbol, 0) + count
            lm.context_counts[context] = \
                lm.context_counts.get(context, 0) + count
        lm.trained = bool(doc['counts']) or bool(doc['vocab'])
        return lm


def lm_logprob(text_symbols, lm: NgramLM) -> float:
    """Total log probability of a symbol sequence under *lm*."""
    return lm.logprob(text_symbols)


# Feature families of the naive Bayes classifier.

def _word_unigrams(text: str) -> Counter:
    return Counter(text.split())


def _char_ngrams(text: str, n: int) -> Counter:
    return Counter(text[i:i + n] for i in range(len(text) - n + 1))


def extract_features(text: str) -> dict:
    """Per-family feature counts of *text*."""
    families = {'word1': _word_unigrams(text)}
    for n in (1, 2, 3):
        families[f'char{n}'] = _char_ngrams(text, n)
    return families


FAMILIES = ('word1', 'char1', 'char2', 'char3')


@dataclass(frozen=True)
class DidResult:
    label: str
    scores: dict


class DidModel:
    """Trained dialect identifier.

    Holds log priors, per-family smoothed feature log-likelihood tables
    (with one unseen-mass bucket each), and two language models per
    label.  Immutable after training.
    """

    def __init__(self, labels, log_priors, loglik, loglik_unseen,
                 char_lms, word_lms, k, fusion_weight):
        self.labels = tuple(labels)
        self.log_priors = dict(log_priors)
        self.loglik = loglik                # family -> label -> {feat: log p}
        self.loglik_unseen = loglik_unseen  # family -> label -> log p
        self.char_lms = char_lms            # label -> NgramLM
        self.word_lms = word_lms
        self.k = k
        self.fusion_weight = fusion_weight

    @property
    def trained(self) -> bool:
        return len(self.labels) >= 2


def train_did(corpus, k: float = DEFAULT_SMOOTHING,
              fusion_weight: float = DEFAULT_FUSION_WEIGHT,
              labels=None) -> DidModel:
    """Train from (label, sentence) pairs.

    Label priors are relative frequencies; feature tables are add-k
    smoothed per family over the family's full vocabulary plus one
    unseen bucket.  Deterministic for a fixed corpus.

    Raises:
        DidError: fewer than two distinct labels, or empty input.
    """
    corpus = list(corpus)
    if not corpus:
        raise DidError('training corpus is empty')
    if k <= 0:
        raise DidError('smoothing constant k must be positive')
    if fusion_weight < 0:
        raise DidError('fusion weight must be nonnegative')

    label_counts = Counter()
    family_counts = {fam: {} for fam in FAMILIES}   # fam -> label -> Counter
    char_lms = {}
    word_lms = {}

    for label, sentence in corpus:
        if not sentence:
            raise DidError('training sentences must be nonempty')
        label_counts[label] += 1
        feats = extract_features(sentence)
        for fam in FAMILIES:
            family_counts[fam].setdefault(label, Counter())
            family_counts[fam][label].update(feats[fam])
        char_lms.setdefault(label, NgramLM(CHAR_LM_ORDER, k))
        word_lms.setdefault(label, NgramLM(1, k))
        char_lms[label].add(sentence)
        word_lms[label].add(sentence.split())

    if labels is None:
        labels = tuple(label_counts)        # first-appearance order
    else:
        labels = tuple(labels)
        if set(labels) != set(label_counts):
            raise DidError('explicit label order must cover the corpus labels')
    if len(labels) < 2:
        raise DidError('need at least two distinct labels')

    total = sum(label_counts.values())
    log_priors = {lab: math.log(label_counts[lab] / total) for lab in labels}

    loglik = {}
    loglik_unseen = {}
    for fam in FAMILIES:
        vocab = set()
        for lab in labels:
            vocab.update(family_counts[fam].get(lab, ()))
        v = len(vocab)
        loglik[fam] = {}
        loglik_unseen[fam] = {}
        for lab in labels:
            counts = family_counts[fam].get(lab, Counter())
            denom = sum(counts.values()) + k * (v + 1)
            loglik[fam][lab] = {f: math.log((counts.get(f, 0) + k) / denom)
                                for f in vocab}
            loglik_unseen[fam][lab] = math.log(k / denom)

    return DidModel(labels=labels, log_priors=log_priors, loglik=loglik,
                    loglik_unseen=loglik_unseen, char_lms=char_lms,
                    word_lms=word_lms, k=k, fusion_weight=fusion_weight)


def label_scores(text: str, model: DidModel) -> dict:
    """Fused per-label log scores of *text* (before the softmax)."""
    if not isinstance(model, DidModel) or not model.trained:
        raise DidError('dialect identification model is untrained')
    feats = extract_features(text)
    scores = {}
    for lab in model.labels:
        score = model.log_priors[lab]
        for fam in FAMILIES:
            table = model.loglik[fam][lab]
            unseen = model.loglik_unseen[fam][lab]
            for feat, count in feats[fam].items():
                score += count * table.get(feat, unseen)
        if model.fusion_weight > 0:
            score += model.fusion_weight * (
                model.char_lms[lab].logprob(text)
                + model.word_lms[lab].logprob(text.split()))
        scores[lab] = score
    return scores


def identify(text: str, model: DidModel) -> DidResult:
    """Classify the dialect of *text*.

    Posteriors are the softmax of the fused log scores; the label is the
    argmax, ties broken by the model's label order.
    """
    scores = label_scores(text, model)
    top = max(scores.values())
    exps = {lab: math.exp(scores[lab] - top) for lab in model.labels}
    z = sum(exps.values())
    posteriors = {lab: exps[lab] / z for lab in model.labels}
    best = next(lab for lab in model.labels if scores[lab] == top)
    return DidResult(label=best, scores=posteriors)


def read_did_corpus(path) -> list:
    """Read a TSV corpus: one ``label TAB sentence`` pair per line."""
    corpus = []
    with open(path, encoding='utf-8') as fp:
        for lineno, raw in enumerate(fp, start=1):
            line = raw.rstrip('\n')
            if not line.strip():
                continue
            parts = line.split('\t', 1)
            if len(parts) != 2:
                raise DidError(
                    f'{path}:{lineno}: expected label TAB sentence')
            corpus.append((parts[0], parts[1]))
    return corpus


def save_did(model: DidModel, path) -> None:
    """Persist the identifier to one self-describing JSON document."""
    doc = {
        'format': 'dialectmorph-did',
        'version': 1,
        'k': model.k,
        'fusion_weight': model.fusion_weight,
        'labels': list(model.labels),
        'log_priors': model.log_priors,
        'loglik': model.loglik,
        'loglik_unseen': model.loglik_unseen,
        'char_lms': {lab: model.char_lms[lab].to_dict()
                     for lab in model.labels},
        'word_lms': {lab: model.word_lms[lab].to_dict()
                     for lab in model.labels},
    }
    with open(path, 'w', encoding='utf-8') as fp:
        json.dump(doc, fp, ensure_ascii=False, sort_keys=True, indent=1)
        fp.write('\n')


def load_did(path) -> DidModel:
    with open(path, encoding='utf-8') as fp:
        doc = json.load(fp)
    if doc.get('format') != 'dialectmorph-did':
        raise DidError(f'{path}: not a dialect identifier model file')
    return DidModel(
        labels=tuple(doc['labels']),
        log_priors=doc['log_priors'],
        loglik=doc['loglik'],
        loglik_unseen=doc['loglik_unseen'],
        char_lms={lab: NgramLM.from_dict(d)
                  for lab, d in doc['char_lms'].items()},
        word_lms={lab: NgramLM.from_dict(d)
                  for lab, d in doc['word_lms'].items()},
        k=doc['k'],
        fusion_weight=doc['fusion_weight'],
    )
