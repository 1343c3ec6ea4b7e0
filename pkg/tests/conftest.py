# -*- coding: utf-8 -*-
import copy
import json
from pathlib import Path

import pytest

from dialectmorph.morphdb import load_db

FIXTURES = Path(__file__).resolve().parent.parent / 'fixtures'
GOLDEN = Path(__file__).resolve().parent / 'golden'


def toy_msa_doc() -> dict:
    with open(FIXTURES / 'toy-msa.db.json', encoding='utf-8') as fp:
        return json.load(fp)


@pytest.fixture(scope='session')
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope='session')
def golden_dir() -> Path:
    return GOLDEN


@pytest.fixture(scope='session')
def toy_msa():
    return load_db(FIXTURES / 'toy-msa.db.json')


@pytest.fixture(scope='session')
def toy_glf():
    return load_db(FIXTURES / 'toy-glf.db.json')


@pytest.fixture(scope='session')
def toy_egy():
    return load_db(FIXTURES / 'toy-egy.db.json')


@pytest.fixture()
def toy_msa_mutable() -> dict:
    """A deep copy of the toy MSA document for mutation tests."""
    return copy.deepcopy(toy_msa_doc())
