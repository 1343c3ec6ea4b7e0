# -*- coding: utf-8 -*-
"""Service configuration and model registry.

A single JSON config file names every model the service loads at
startup: one database and tagger per dialect, the dialect identifier,
and the bind address.  Relative paths are resolved against the config
file's directory.  ``PORT`` and ``CONFIG_PATH`` environment variables
override the file.
"""

import json
import os
from dataclasses import dataclass, field
from pathlib import Path

from dialectmorph import did as did_module
from dialectmorph import morphdb, tagger as tagger_module
from dialectmorph.pipeline import DialectResources

__all__ = ['ServiceConfig', 'ModelRegistry', 'load_config', 'load_registry']

DEFAULT_HOST = '127.0.0.1'
DEFAULT_PORT = 8000

DISPLAY_NAMES = {
    'msa': 'MSA',
    'egy': 'Egyptian',
    'glf': 'Gulf',
    'lev': 'Levantine',
}


@dataclass(frozen=True)
class ServiceConfig:
    host: str
    port: int
    did_model_path: Path
    dialect_paths: dict     # dialect -> {'db': Path, 'tagger': Path}

    @staticmethod
    def from_file(path) -> 'ServiceConfig':
        path = Path(path)
        with open(path, encoding='utf-8') as fp:
            doc = json.load(fp)
        base = path.parent

        def resolve(p):
            p = Path(p)
            return p if p.is_absolute() else base / p

        dialects = {}
        for dialect, entry in doc.get('dialects', {}).items():
            dialects[dialect] = {
                'db': resolve(entry['db']),
                'tagger': resolve(entry['tagger']),
            }
        return ServiceConfig(
            host=doc.get('host', DEFAULT_HOST),
            port=int(os.environ.get('PORT', doc.get('port', DEFAULT_PORT))),
            did_model_path=resolve(doc['did_model']),
            dialect_paths=dialects,
        )


@dataclass
class ModelRegistry:
    """All models the service needs, loaded once and then read-only.

    Loading is tolerant: a dialect whose files are missing or invalid is
    recorded as unavailable so the health endpoint can report a degraded
    state instead of the service failing to start.
    """

    resources: dict = field(default_factory=dict)  # dialect -> DialectResources
    did_model: object = None
    errors: dict = field(default_factory=dict)     # component -> message

    @property
    def loaded(self) -> dict:
        flags = {dialect: dialect in self.resources
                 for dialect in morphdb.DIALECTS}
        flags['did'] = self.did_model is not None
        return flags

    @property
    def healthy(self) -> bool:
        return all(self.loaded.values())


def load_config(path=None) -> ServiceConfig:
    path = path or os.environ.get('CONFIG_PATH')
    if not path:
        raise FileNotFoundError(
            'no config file given (pass a path or set CONFIG_PATH)')
    return ServiceConfig.from_file(path)


def load_registry(config: ServiceConfig) -> ModelRegistry:
    registry = ModelRegistry()
    for dialect, paths in config.dialect_paths.items():
        try:
            db = morphdb.load_db(paths['db'])
            tg = tagger_module.load_tagger(paths['tagger'])
            registry.resources[dialect] = DialectResources(db=db, tagger=tg)
        except (OSError, ValueError, KeyError) as exc:
            registry.errors[dialect] = str(exc)
    try:
        registry.did_model = did_module.load_did(config.did_model_path)
    except (OSError, ValueError, KeyError) as exc:
        registry.errors['did'] = str(exc)
    return registry
