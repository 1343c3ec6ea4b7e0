#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Regenerate the committed fixture databases, models, and golden API
responses under fixtures/ and tests/golden/.

Everything here is deterministic: rerunning the script must reproduce
byte-identical files.  Forms are Buckwalter-romanized for legibility.
"""

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / 'fixtures'
GOLDEN = ROOT / 'tests' / 'golden'

sys.path.insert(0, str(ROOT / 'src'))

from dialectmorph.analyzer import analyze_with_backoff
from dialectmorph.did import read_did_corpus, save_did, train_did
from dialectmorph.morphdb import load_db
from dialectmorph.tagger import CombinedTag, read_tagger_corpus, save_tagger, \
    train_tagger


def entry(match, diac, cat, feats=None, tokens=None, lemma='', gloss=''):
    return {'match': match, 'diac': diac, 'cat': cat,
            'feats': feats or {}, 'tokens': tokens or [],
            'lemma': lemma, 'gloss': gloss}


# The canonical toy MSA database: two readings for 'ktb', a conjunction
# proclitic, and a feminine-subject suffix.
TOY_MSA = {
    'meta': {'dialect': 'msa', 'supports_diacritization': True},
    'prefixes': [
        entry('', '', 'P0'),
        entry('w', 'wa', 'P1', {'prc': 'conj_wa'}, ['wa+']),
    ],
    'stems': [
        entry('ktb', 'katab', 'S-PV',
              {'pos': 'verb', 'asp': 'p', 'per': '3', 'gen': 'm', 'num': 's',
               'vox': 'a', 'mod': 'i'},
              ['katab'], lemma='katab', gloss='write'),
        entry('ktb', 'kutub', 'S-N',
              {'pos': 'noun', 'gen': 'm', 'num': 'p'},
              ['kutub'], lemma='kitAb', gloss='books'),
    ],
    'suffixes': [
        entry('', '', 'X0'),
        entry('t', 'at', 'X-PVSUFF',
              {'per': '3', 'gen': 'f', 'num': 's'}, ['+at']),
    ],
    'compat_ab': [['P0', 'S-PV'], ['P0', 'S-N'], ['P1', 'S-PV'],
                  ['P1', 'S-N']],
    'compat_bc': [['S-PV', 'X0'], ['S-PV', 'X-PVSUFF'], ['S-N', 'X0']],
    'compat_ac': [['P0', 'X0'], ['P0', 'X-PVSUFF'], ['P1', 'X0'],
                  ['P1', 'X-PVSUFF']],
}

TOY_EGY = {
    'meta': {'dialect': 'egy', 'supports_diacritization': True},
    'prefixes': [
        entry('', '', 'P0'),
        entry('b', 'bi', 'P1', {'prc': 'prog_bi'}, ['bi+']),
    ],
    'stems': [
        entry('ktb', 'katab', 'S-V',
              {'pos': 'verb', 'asp': 'p', 'per': '3', 'gen': 'm', 'num': 's'},
              ['katab'], lemma='katab', gloss='write'),
        entry('ktb', 'kutub', 'S-N', {'pos': 'noun', 'gen': 'm', 'num': 'p'},
              ['kutub'], lemma='kitAb', gloss='books'),
        entry('yktb', 'yiktib', 'S-IV',
              {'pos': 'verb', 'asp': 'i', 'per': '3', 'gen': 'm', 'num': 's'},
              ['yiktib'], lemma='katab', gloss='write'),
        entry('gAmd', 'gAmid', 'S-ADJ', {'pos': 'adj', 'gen': 'm', 'num': 's'},
              ['gAmid'], lemma='gAmid', gloss='cool'),
        entry('Awy', 'Awiy', 'S-ADV', {'pos': 'adv'},
              ['Awiy'], lemma='Awiy', gloss='very'),
    ],
    'suffixes': [
        entry('', '', 'X0'),
        entry('hA', 'hA', 'X-PRON', {'enc': 'pron_3fs'}, ['+hA']),
    ],
    'compat_ab': [['P0', 'S-V'], ['P0', 'S-N'], ['P0', 'S-IV'],
                  ['P0', 'S-ADJ'], ['P0', 'S-ADV'], ['P1', 'S-IV']],
    'compat_bc': [['S-V', 'X0'], ['S-V', 'X-PRON'], ['S-N', 'X0'],
                  ['S-IV', 'X0'], ['S-IV', 'X-PRON'], ['S-ADJ', 'X0'],
                  ['S-ADV', 'X0']],
    'compat_ac': [['P0', 'X0'], ['P0', 'X-PRON'], ['P1', 'X0'],
                  ['P1', 'X-PRON']],
}

# Gulf resources carry no diacritics, so diac equals the match form.
TOY_GLF = {
    'meta': {'dialect': 'glf', 'supports_diacritization': False},
    'prefixes': [
        entry('', '', 'P0'),
        entry('b', 'b', 'P1', {'prc': 'fut_b'}, ['b+']),
    ],
    'stems': [
        entry('tby', 'tby', 'S-V',
              {'pos': 'verb', 'asp': 'i', 'per': '2', 'gen': 'm', 'num': 's'},
              ['tby'], lemma='bgY', gloss='want'),
        entry('trwH', 'trwH', 'S-V',
              {'pos': 'verb', 'asp': 'i', 'per': '2', 'gen': 'm', 'num': 's'},
              ['trwH'], lemma='rAH', gloss='go'),
        entry('fwg', 'fwg', 'S-ADV', {'pos': 'adv'},
              ['fwg'], lemma='fwg', gloss='up;upstairs'),
        entry('mrh', 'mrh', 'S-ADV', {'pos': 'adv'},
              ['mrh'], lemma='mrh', gloss='very'),
    ],
    'suffixes': [
        entry('', '', 'X0'),
        entry('k', 'k', 'X-PRON', {'enc': 'pron_2ms'}, ['+k']),
    ],
    'compat_ab': [['P0', 'S-V'], ['P0', 'S-ADV'], ['P1', 'S-V']],
    'compat_bc': [['S-V', 'X0'], ['S-V', 'X-PRON'], ['S-ADV', 'X0']],
    'compat_ac': [['P0', 'X0'], ['P0', 'X-PRON'], ['P1', 'X0'],
                  ['P1', 'X-PRON']],
}

TOY_LEV = {
    'meta': {'dialect': 'lev', 'supports_diacritization': True},
    'prefixes': [
        entry('', '', 'P0'),
        entry('w', 'wi', 'P1', {'prc': 'conj_wi'}, ['wi+']),
    ],
    'stems': [
        entry('ktb', 'katab', 'S-V',
              {'pos': 'verb', 'asp': 'p', 'per': '3', 'gen': 'm', 'num': 's'},
              ['katab'], lemma='katab', gloss='write'),
        entry('bd', 'bid~', 'S-PSV',
              {'pos': 'verb', 'asp': 'i', 'per': '3', 'gen': 'm', 'num': 's'},
              ['bid~'], lemma='bid~', gloss='want'),
        entry('ktyr', 'ktiyr', 'S-ADJ', {'pos': 'adj', 'gen': 'm', 'num': 's'},
              ['ktiyr'], lemma='ktiyr', gloss='much;very'),
        entry('hlq', 'hal~aq', 'S-ADV', {'pos': 'adv'},
              ['hal~aq'], lemma='hal~aq', gloss='now'),
    ],
    'suffixes': [
        entry('', '', 'X0'),
        entry('h', 'ah', 'X-PRON', {'enc': 'pron_3ms'}, ['+ah']),
    ],
    'compat_ab': [['P0', 'S-V'], ['P0', 'S-PSV'], ['P0', 'S-ADJ'],
                  ['P0', 'S-ADV'], ['P1', 'S-V'], ['P1', 'S-PSV']],
    'compat_bc': [['S-V', 'X0'], ['S-V', 'X-PRON'], ['S-PSV', 'X0'],
                  ['S-PSV', 'X-PRON'], ['S-ADJ', 'X0'], ['S-ADV', 'X0']],
    'compat_ac': [['P0', 'X0'], ['P0', 'X-PRON'], ['P1', 'X0'],
                  ['P1', 'X-PRON']],
}

DBS = {'msa': TOY_MSA, 'egy': TOY_EGY, 'glf': TOY_GLF, 'lev': TOY_LEV}

# Tagger corpora: (sentence of (word, diac-of-gold-reading), repetitions).
# Tags are derived from the analyzer so gold tags equal analysis tags.
TAGGER_SENTENCES = {
    'msa': [
        ([('ktb', 'katab'), ('.', None)], 4),
        ([('wktbt', 'wakatabat'), ('ktb', 'kutub'), ('.', None)], 3),
        ([('ktbt', 'katabat'), ('.', None)], 2),
        ([('wktb', 'wakatab'), ('ktb', 'kutub')], 2),
    ],
    'egy': [
        ([('gAmd', 'gAmid'), ('Awy', 'Awiy')], 4),
        ([('byktb', 'biyiktib'), ('Awy', 'Awiy')], 3),
        ([('ktbhA', 'katabhA'), ('.', None)], 2),
        ([('ktb', 'katab'), ('.', None)], 2),
    ],
    'glf': [
        ([('trwH', 'trwH'), ('fwg', 'fwg')], 4),
        ([('tby', 'tby'), ('mrh', 'mrh')], 3),
        ([('btby', 'btby'), ('.', None)], 2),
        ([('trwHk', 'trwHk'), ('fwg', 'fwg')], 2),
    ],
    'lev': [
        ([('bdh', 'bid~ah'), ('ktyr', 'ktiyr')], 4),
        ([('hlq', 'hal~aq'), ('bdh', 'bid~ah')], 3),
        ([('wktb', 'wikatab'), ('ktyr', 'ktiyr')], 2),
        ([('ktb', 'katab'), ('.', None)], 2),
    ],
}

DID_SENTENCES = {
    'msa': ['ktb', 'wktbt ktb', 'ktbt', 'wktb ktb', 'ktb wktbt',
            'wktbt', 'ktbt ktb', 'ktb ktb', 'wktb', 'ktb ktbt',
            'wktbt ktbt', 'ktbt wktb'],
    'egy': ['gAmd Awy', 'byktb gAmd', 'yktb ktbhA', 'ktbhA Awy',
            'gAmd gAmd Awy', 'byktb Awy', 'Awy gAmd', 'yktb gAmd',
            'ktbhA byktb', 'gAmd byktb', 'Awy Awy', 'yktb Awy'],
    'glf': ['tby mrh', 'trwH fwg', 'btby trwH', 'fwg mrh',
            'tby trwH fwg', 'mrh tby', 'trwHk fwg', 'btby mrh',
            'fwg tby', 'trwH mrh', 'tby fwg', 'mrh trwH'],
    'lev': ['bdh ktyr', 'hlq bdh', 'ktyr hlq', 'bdh hlq ktyr',
            'ktyr bdh', 'hlq ktyr', 'bdh bdh', 'hlq hlq',
            'ktyr ktyr hlq', 'bdh ktyr hlq', 'hlq bdh ktyr', 'ktyr hlq bdh'],
}

# Canned requests behind the golden-response contract tests.
CANNED_REQUESTS = [
    {'text': 'ktb', 'dialect': 'msa'},
    {'text': 'wktbt ktb .', 'dialect': 'msa'},
    {'text': 'xyz', 'dialect': 'msa'},
    {'text': 'gAmd Awy', 'dialect': 'auto'},
    {'text': 'trwH fwg', 'dialect': 'glf'},
    {'text': 'tby mrh btby', 'dialect': 'auto'},
    {'text': 'bdh ktyr hlq', 'dialect': 'lev'},
    {'text': 'wktbt ktb', 'dialect': 'auto'},
    {'text': 'byktb gAmd', 'dialect': 'egy'},
    {'text': 'tuby xyz .', 'dialect': 'glf'},
]


def dump_json(doc, path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8') as fp:
        json.dump(doc, fp, ensure_ascii=False, sort_keys=True, indent=1)
        fp.write('\n')


def gold_tag(word: str, diac: str, db) -> tuple:
    analyses = analyze_with_backoff(word, db)
    if diac is None:
        return analyses[0].tag()
    for analysis in analyses:
        if analysis.diac == diac:
            return analysis.tag()
    raise SystemExit(f'no analysis of {word!r} has diac {diac!r}')


def write_tagger_corpus(dialect: str, db, path: Path) -> None:
    lines = []
    for sentence, reps in TAGGER_SENTENCES[dialect]:
        rendered = [f'{word}\t{CombinedTag.serialize(gold_tag(word, diac, db))}'
                    for word, diac in sentence]
        for _ in range(reps):
            lines.extend(rendered)
            lines.append('')
    path.write_text('\n'.join(lines), encoding='utf-8')


def main() -> None:
    FIXTURES.mkdir(exist_ok=True)
    GOLDEN.mkdir(parents=True, exist_ok=True)

    dbs = {}
    for dialect, doc in DBS.items():
        dump_json(doc, FIXTURES / f'toy-{dialect}.db.json')
        dbs[dialect] = load_db(doc)

    for dialect, db in dbs.items():
        corpus_path = FIXTURES / f'{dialect}.tagger-corpus.tsv'
        write_tagger_corpus(dialect, db, corpus_path)
        model = train_tagger(read_tagger_corpus(corpus_path))
        save_tagger(model, FIXTURES / f'{dialect}.tagger.json')

    did_lines = [f'{dialect}\t{sentence}'
                 for dialect in ('msa', 'egy', 'glf', 'lev')
                 for sentence in DID_SENTENCES[dialect]]
    did_corpus_path = FIXTURES / 'did-corpus.tsv'
    did_corpus_path.write_text('\n'.join(did_lines) + '\n', encoding='utf-8')
    did_model = train_did(read_did_corpus(did_corpus_path))
    save_did(did_model, FIXTURES / 'did.model.json')

    config = {
        'host': '127.0.0.1',
        'port': 8000,
        'did_model': 'did.model.json',
        'dialects': {
            dialect: {'db': f'toy-{dialect}.db.json',
                      'tagger': f'{dialect}.tagger.json'}
            for dialect in ('msa', 'egy', 'glf', 'lev')
        },
    }
    dump_json(config, FIXTURES / 'service-config.json')

    (FIXTURES / 'words.txt').write_text('ktb\nwktbt\n', encoding='utf-8')

    # Golden responses, captured through the real HTTP stack.
    from fastapi.testclient import TestClient

    from dialectmorph.config import ServiceConfig
    from dialectmorph.service import create_app

    app = create_app(config=ServiceConfig.from_file(
        FIXTURES / 'service-config.json'))
    with TestClient(app) as client:
        dump_json(CANNED_REQUESTS, GOLDEN / 'requests.json')
        for i, request in enumerate(CANNED_REQUESTS):
            response = client.post('/api/disambiguate', json=request)
            if response.status_code != 200:
                raise SystemExit(
                    f'request {i} failed: {response.status_code} '
                    f'{response.text}')
            (GOLDEN / f'response_{i:02d}.json').write_bytes(response.content)

    print(f'fixtures -> {FIXTURES}')
    print(f'goldens  -> {GOLDEN}')


if __name__ == '__main__':
    main()
