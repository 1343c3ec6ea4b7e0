# -*- coding: utf-8 -*-
import math
import random

import pytest

from dialectmorph.did import (
    DidError,
    NgramLM,
    identify,
    label_scores,
    lm_logprob,
    load_did,
    read_did_corpus,
    save_did,
    train_did,
)

from .oracles import mnb_label_scores

BALANCED_CORPUS = [
    ('egy', 'gamd awy'),
    ('egy', 'byktb awy'),
    ('egy', 'gamd gamd'),
    ('glf', 'tby mrh'),
    ('glf', 'trwh fwg'),
    ('glf', 'mrh mrh'),
]


class TestTraining:
    def test_priors_reflect_label_frequencies(self):
        corpus = [('egy', 'a b'), ('egy', 'b c'), ('egy', 'c a'),
                  ('glf', 'x y')]
        model = train_did(corpus)
        assert abs(math.exp(model.log_priors['egy']) - 0.75) < 1e-12
        assert abs(math.exp(model.log_priors['glf']) - 0.25) < 1e-12

    def test_single_label_rejected(self):
        with pytest.raises(DidError):
            train_did([('egy', 'a'), ('egy', 'b')])

    def test_empty_corpus_rejected(self):
        with pytest.raises(DidError):
            train_did([])

    def test_empty_sentence_rejected(self):
        with pytest.raises(DidError):
            train_did([('egy', ''), ('glf', 'x')])

    def test_deterministic_serialization(self, tmp_path):
        for name in ('a.json', 'b.json'):
            save_did(train_did(BALANCED_CORPUS), tmp_path / name)
        assert (tmp_path / 'a.json').read_bytes() == \
            (tmp_path / 'b.json').read_bytes()

    def test_feature_distributions_sum_to_one(self):
        model = train_did(BALANCED_CORPUS)
        for fam, tables in model.loglik.items():
            for lab, table in tables.items():
                total = sum(math.exp(lp) for lp in table.values())
                total += math.exp(model.loglik_unseen[fam][lab])
                assert abs(total - 1.0) <= 1e-9

    def test_priors_normalized(self):
        model = train_did(BALANCED_CORPUS)
        assert abs(sum(math.exp(p)
                       for p in model.log_priors.values()) - 1.0) <= 1e-9


class TestIdentify:
    def test_empty_text_recovers_priors_without_lm(self):
        corpus = [('egy', 'a b')] * 3 + [('glf', 'x y')]
        model = train_did(corpus, fusion_weight=0.0)
        result = identify('', model)
        assert abs(result.scores['egy'] - 0.75) <= 1e-9
        assert abs(result.scores['glf'] - 0.25) <= 1e-9

    def test_exclusive_token_decides(self):
        corpus = [('egy', 'gamd awy'), ('egy', 'helw awy'),
                  ('glf', 'tby mrh'), ('glf', 'trwh mrh')]
        model = train_did(corpus, fusion_weight=0.0)
        assert identify('gamd', model).label == 'egy'
        assert identify('tby', model).label == 'glf'

    def test_posteriors_sum_to_one(self):
        model = train_did(BALANCED_CORPUS)
        for text in ('', 'gamd', 'tby mrh awy', 'unrelated zz'):
            result = identify(text, model)
            assert abs(sum(result.scores.values()) - 1.0) <= 1e-9

    def test_label_is_argmax_with_order_tie_break(self):
        model = train_did(BALANCED_CORPUS, fusion_weight=0.0)
        result = identify('', model)
        # balanced priors and no evidence: scores tie, first label wins
        assert result.label == model.labels[0]

    def test_untrained_model_rejected(self):
        with pytest.raises(DidError):
            identify('x', object())

    def test_matches_independent_computation(self):
        rng = random.Random(4242)
        vocab = ['gamd', 'awy', 'tby', 'mrh', 'ktb', 'fwg', 'zz']
        for lam in (0.0, 1.0, 2.5):
            model = train_did(BALANCED_CORPUS, fusion_weight=lam)
            for _ in range(20):
                text = ' '.join(rng.choice(vocab)
                                for _ in range(rng.randint(0, 4)))
                expected = mnb_label_scores(BALANCED_CORPUS, text,
                                            model.k, lam, model.labels)
                actual = label_scores(text, model)
                for lab in model.labels:
                    assert abs(expected[lab] - actual[lab]) <= 1e-9

    def test_evidence_strictly_moves_posterior(self):
        model = train_did(BALANCED_CORPUS, fusion_weight=0.0)
        base = identify('mrh', model).scores['glf']
        more = identify('mrh mrh', model).scores['glf']
        assert more > base


class TestNgramLM:
    def test_char_lm_hand_computed(self):
        lm = NgramLM(n=5, k=0.5)
        lm.add('aa')
        # vocab {a}; event space 3; each factor (1 + .5) / (1 + 1.5)
        assert abs(lm_logprob('aa', lm) - 3 * math.log(0.6)) <= 1e-12

    def test_logprob_nonpositive(self):
        lm = NgramLM(n=5, k=0.5)
        lm.add('abcab')
        for text in ('', 'a', 'abc', 'zzz'):
            assert lm_logprob(text, lm) <= 0.0

    def test_each_added_symbol_multiplies_in_a_probability(self):
        lm = NgramLM(n=5, k=0.5)
        lm.add('abcab')

        def interior(text):
            # score without the closing end transition
            padded = ['\x02'] * 4 + list(text)
            return sum(
                math.log(lm.prob(tuple(padded[i - 4:i]), padded[i]))
                for i in range(4, len(padded)))

        assert interior('ab') <= interior('a') + 1e-12
        assert interior('abc') <= interior('ab') + 1e-12

    def test_empty_text_scores_end_transition(self):
        lm = NgramLM(n=5, k=0.5)
        lm.add('aa')
        # context BBBB was seen once (with 'a'); end shares the k mass
        assert abs(lm_logprob('', lm) - math.log(0.5 / 2.5)) <= 1e-12

    def test_untrained_rejected(self):
        with pytest.raises(DidError):
            lm_logprob('x', NgramLM(n=5))

    def test_serialization_round_trip(self):
        lm = NgramLM(n=3, k=0.5)
        lm.add('abcab')
        lm.add('xya')
        clone = NgramLM.from_dict(lm.to_dict())
        for text in ('', 'ab', 'xy', 'zq'):
            assert abs(lm_logprob(text, clone) - lm_logprob(text, lm)) == 0.0


class TestPersistence:
    def test_round_trip_scores_identical(self, tmp_path):
        model = train_did(BALANCED_CORPUS)
        save_did(model, tmp_path / 'did.json')
        loaded = load_did(tmp_path / 'did.json')
        for text in ('', 'gamd awy', 'tby'):
            a = label_scores(text, model)
            b = label_scores(text, loaded)
            for lab in model.labels:
                assert abs(a[lab] - b[lab]) <= 1e-12

    def test_corpus_reader(self, tmp_path):
        path = tmp_path / 'c.tsv'
        path.write_text('egy\tgamd awy\nglf\ttby mrh\n', encoding='utf-8')
        assert read_did_corpus(path) == [('egy', 'gamd awy'),
                                         ('glf', 'tby mrh')]

    def test_corpus_reader_rejects_bad_line(self, tmp_path):
        path = tmp_path / 'c.tsv'
        path.write_text('no-tab-here\n', encoding='utf-8')
        with pytest.raises(DidError):
            read_did_corpus(path)
