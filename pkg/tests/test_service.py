# -*- coding: utf-8 -*-
import json

import pytest
from fastapi.testclient import TestClient

from dialectmorph.config import ServiceConfig
from dialectmorph.service import create_app


@pytest.fixture(scope='module')
def client(fixtures_dir):
    config = ServiceConfig.from_file(fixtures_dir / 'service-config.json')
    with TestClient(create_app(config=config)) as test_client:
        yield test_client


class TestDisambiguateEndpoint:
    def test_basic_request(self, client):
        response = client.post('/api/disambiguate',
                               json={'text': 'ktb', 'dialect': 'msa'})
        assert response.status_code == 200
        doc = response.json()
        assert doc['dialect_used'] == 'msa'
        assert 'dialect_scores' not in doc
        assert len(doc['words']) == 1
        assert len(doc['words'][0]['analyses']) == 2
        assert doc['words'][0]['top'] == doc['words'][0]['analyses'][0]
        scores = [a['score'] for a in doc['words'][0]['analyses']]
        assert scores == sorted(scores, reverse=True)

    def test_auto_includes_scores(self, client):
        response = client.post('/api/disambiguate',
                               json={'text': 'gAmd Awy', 'dialect': 'auto'})
        assert response.status_code == 200
        doc = response.json()
        assert doc['dialect_used'] == 'egy'
        assert set(doc['dialect_scores']) == {'msa', 'egy', 'glf', 'lev'}

    def test_invalid_dialect_rejected(self, client):
        response = client.post('/api/disambiguate',
                               json={'text': 'ktb', 'dialect': 'xx'})
        assert response.status_code == 400
        assert 'error' in response.json()

    def test_empty_text_rejected(self, client):
        response = client.post('/api/disambiguate',
                               json={'text': '', 'dialect': 'auto'})
        assert response.status_code == 400
        assert response.json() == {'error': 'empty text'}

    def test_malformed_body_rejected(self, client):
        response = client.post('/api/disambiguate', json={'dialect': 'msa'})
        assert response.status_code == 400
        assert 'error' in response.json()

    def test_default_dialect_is_auto(self, client):
        response = client.post('/api/disambiguate', json={'text': 'tby mrh'})
        assert response.status_code == 200
        assert response.json()['dialect_used'] == 'glf'

    def test_responses_stable_across_repeats(self, client):
        payload = {'text': 'wktbt ktb .', 'dialect': 'msa'}
        first = client.post('/api/disambiguate', json=payload).content
        for _ in range(3):
            assert client.post('/api/disambiguate',
                               json=payload).content == first

    def test_request_order_independence(self, client):
        a = {'text': 'ktb', 'dialect': 'msa'}
        b = {'text': 'bdh ktyr', 'dialect': 'lev'}
        first_a = client.post('/api/disambiguate', json=a).content
        client.post('/api/disambiguate', json=b)
        client.post('/api/disambiguate', json=b)
        assert client.post('/api/disambiguate', json=a).content == first_a

    def test_concurrent_requests_consistent(self, client):
        import concurrent.futures

        payloads = [
            {'text': 'ktb', 'dialect': 'msa'},
            {'text': 'gAmd Awy', 'dialect': 'auto'},
            {'text': 'tuby xyz .', 'dialect': 'glf'},
            {'text': 'bdh ktyr hlq', 'dialect': 'lev'},
        ]
        expected = [client.post('/api/disambiguate', json=p).content
                    for p in payloads]

        def hit(i):
            return i % 4, client.post('/api/disambiguate',
                                      json=payloads[i % 4]).content

        with concurrent.futures.ThreadPoolExecutor(max_workers=8) as pool:
            for idx, content in pool.map(hit, range(32)):
                assert content == expected[idx]


class TestMetaEndpoints:
    def test_dialects_reflect_registry(self, client):
        response = client.get('/api/dialects')
        assert response.status_code == 200
        doc = response.json()
        assert [d['id'] for d in doc] == ['msa', 'egy', 'glf', 'lev']
        flags = {d['id']: d['supports_diacritization'] for d in doc}
        assert flags == {'msa': True, 'egy': True, 'glf': False, 'lev': True}
        names = {d['display_name'] for d in doc}
        assert names == {'MSA', 'Egyptian', 'Gulf', 'Levantine'}

    def test_dialects_stable(self, client):
        assert client.get('/api/dialects').content == \
            client.get('/api/dialects').content

    def test_health_all_loaded(self, client):
        response = client.get('/api/health')
        assert response.status_code == 200
        doc = response.json()
        assert doc['status'] == 'ok'
        assert doc['models_loaded'] == {'msa': True, 'egy': True,
                                        'glf': True, 'lev': True,
                                        'did': True}


class TestDegradedService:
    @pytest.fixture()
    def degraded_client(self, fixtures_dir, tmp_path):
        config_doc = {
            'host': '127.0.0.1',
            'port': 8099,
            'did_model': str(fixtures_dir / 'did.model.json'),
            'dialects': {
                'msa': {'db': str(fixtures_dir / 'toy-msa.db.json'),
                        'tagger': str(fixtures_dir / 'msa.tagger.json')},
                'egy': {'db': str(tmp_path / 'missing.db.json'),
                        'tagger': str(fixtures_dir / 'egy.tagger.json')},
            },
        }
        config_path = tmp_path / 'config.json'
        config_path.write_text(json.dumps(config_doc), encoding='utf-8')
        config = ServiceConfig.from_file(config_path)
        with TestClient(create_app(config=config),
                        raise_server_exceptions=False) as test_client:
            yield test_client

    def test_health_reports_missing_models(self, degraded_client):
        doc = degraded_client.get('/api/health').json()
        assert doc['status'] == 'degraded'
        assert doc['models_loaded']['msa'] is True
        assert doc['models_loaded']['egy'] is False
        assert doc['models_loaded']['glf'] is False

    def test_loaded_dialect_still_serves(self, degraded_client):
        response = degraded_client.post(
            '/api/disambiguate', json={'text': 'ktb', 'dialect': 'msa'})
        assert response.status_code == 200

    def test_missing_dialect_is_server_error(self, degraded_client):
        response = degraded_client.post(
            '/api/disambiguate', json={'text': 'ktb', 'dialect': 'lev'})
        assert response.status_code == 500
        assert 'error' in response.json()

    def test_corrupt_database_degrades_instead_of_crashing(
            self, fixtures_dir, tmp_path):
        bad_db = tmp_path / 'corrupt.db.json'
        bad_db.write_text('{"meta": {"dialect": "msa"', encoding='utf-8')
        config_doc = {
            'did_model': str(fixtures_dir / 'did.model.json'),
            'dialects': {
                'msa': {'db': str(bad_db),
                        'tagger': str(fixtures_dir / 'msa.tagger.json')},
            },
        }
        config_path = tmp_path / 'config.json'
        config_path.write_text(json.dumps(config_doc), encoding='utf-8')
        config = ServiceConfig.from_file(config_path)
        with TestClient(create_app(config=config)) as test_client:
            doc = test_client.get('/api/health').json()
            assert doc['status'] == 'degraded'
            assert doc['models_loaded']['msa'] is False


class TestConfig:
    def test_port_env_override(self, fixtures_dir, monkeypatch):
        monkeypatch.setenv('PORT', '9321')
        config = ServiceConfig.from_file(
            fixtures_dir / 'service-config.json')
        assert config.port == 9321

    def test_config_path_env_fallback(self, fixtures_dir, monkeypatch):
        from dialectmorph.config import load_config
        monkeypatch.setenv('CONFIG_PATH',
                           str(fixtures_dir / 'service-config.json'))
        config = load_config()
        assert 'msa' in config.dialect_paths

    def test_missing_config_rejected(self, monkeypatch):
        from dialectmorph.config import load_config
        monkeypatch.delenv('CONFIG_PATH', raising=False)
        with pytest.raises(FileNotFoundError):
            load_config()

    def test_relative_paths_resolve_against_config_dir(self, fixtures_dir):
        config = ServiceConfig.from_file(
            fixtures_dir / 'service-config.json')
        assert config.did_model_path == fixtures_dir / 'did.model.json'
        assert config.dialect_paths['glf']['db'] == \
            fixtures_dir / 'toy-glf.db.json'


class TestGoldenResponses:
    def test_canned_requests_byte_identical(self, client, golden_dir):
        with open(golden_dir / 'requests.json', encoding='utf-8') as fp:
            requests = json.load(fp)
        assert len(requests) == 10
        for i, request in enumerate(requests):
            expected = (golden_dir / f'response_{i:02d}.json').read_bytes()
            response = client.post('/api/disambiguate', json=request)
            assert response.status_code == 200
            assert response.content == expected, f'request {i} drifted'
