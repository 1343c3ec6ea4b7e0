# -*- coding: utf-8 -*-
"""Command-line entry point.

Batch commands (analyze, disambiguate, did) read one item per input
line and emit one compact JSON document per line on stdout, so they
compose in shell pipelines.  Diagnostics always go to stderr.  Exit
codes: 0 success, 1 runtime/data error, 2 usage error.
"""

import json
import sys

import click

from dialectmorph import analyzer as analyzer_module
from dialectmorph import did as did_module
from dialectmorph import morphdb
from dialectmorph import tagger as tagger_module
from dialectmorph.config import ServiceConfig, load_registry
from dialectmorph.pipeline import DIALECT_CHOICES, DialectResources, process
from dialectmorph.schemas import analysis_out, document_response

_DIALECT_CHOICE = click.Choice(DIALECT_CHOICES)


def _emit(doc: dict) -> None:
    click.echo(json.dumps(doc, ensure_ascii=False, separators=(',', ':')))


def _input_lines(text):
    if text is not None:
        yield from text.splitlines()
    else:
        for line in click.get_text_stream('stdin'):
            yield line.rstrip('\n')


def _fail(message: str):
    raise click.ClickException(message)


@click.group()
def cli():
    """Multi-dialect Arabic morphological disambiguation."""


@cli.command()
@click.option('--db', 'db_path', required=True, type=click.Path(),
              help='Morphological database file.')
@click.argument('text', required=False)
def analyze(db_path, text):
    """Analyze words out of context (one word per input line)."""
    try:
        db = morphdb.load_db(db_path)
    except (OSError, morphdb.DatabaseError) as exc:
        _fail(str(exc))
    for line in _input_lines(text):
        word = line.strip()
        if not word:
            continue
        try:
            analyses = analyzer_module.analyze_with_backoff(word, db)
        except analyzer_module.AnalyzerError as exc:
            _fail(str(exc))
        _emit({'word': word,
               'analyses': [analysis_out(a).model_dump() for a in analyses]})


@cli.command(name='disambiguate')
@click.option('--config', 'config_path', type=click.Path(),
              help='Service config (enables --dialect auto).')
@click.option('--db', 'db_path', type=click.Path(),
              help='Database for single-dialect mode.')
@click.option('--tagger', 'tagger_path', type=click.Path(),
              help='Tagger model for single-dialect mode.')
@click.option('--dialect', type=_DIALECT_CHOICE, default='auto',
              show_default=True)
@click.argument('text', required=False)
def disambiguate_cmd(config_path, db_path, tagger_path, dialect, text):
    """Disambiguate sentences (one sentence per input line)."""
    if config_path:
        registry = load_registry(ServiceConfig.from_file(config_path))
        if registry.errors:
            _fail('; '.join(f'{k}: {v}' for k, v in registry.errors.items()))
        resources, did_model = registry.resources, registry.did_model
    elif db_path and tagger_path:
        try:
            db = morphdb.load_db(db_path)
            tg = tagger_module.load_tagger(tagger_path)
        except (OSError, ValueError) as exc:
            _fail(str(exc))
        if dialect not in ('auto', db.dialect):
            raise click.UsageError(
                f'--dialect {dialect} conflicts with the {db.dialect} '
                f'database; omit it or pass --config')
        resources = {db.dialect: DialectResources(db=db, tagger=tg)}
        did_model = None
        dialect = db.dialect
    else:
        raise click.UsageError(
            'pass --config, or --db together with --tagger')

    for line in _input_lines(text):
        if not line.strip():
            continue
        try:
            result = process(line, dialect, resources, did_model=did_model)
        except ValueError as exc:
            _fail(str(exc))
        _emit(document_response(result).model_dump(exclude_none=True))


@cli.command()
@click.option('--did-model', 'model_path', required=True, type=click.Path())
@click.option('--dialect', type=click.Choice(['auto']), default='auto',
              help='Identification is always automatic.')
@click.argument('text', required=False)
def did(model_path, dialect, text):
    """Identify the dialect of each input line."""
    try:
        model = did_module.load_did(model_path)
    except (OSError, ValueError, KeyError) as exc:
        _fail(str(exc))
    for line in _input_lines(text):
        if not line.strip():
            continue
        result = did_module.identify(line, model)
        _emit({'label': result.label, 'scores': result.scores})


@cli.command(name='train-tagger')
@click.option('--corpus', required=True, type=click.Path())
@click.option('--out', required=True, type=click.Path())
@click.option('--smoothing-k', type=float, default=tagger_module.DEFAULT_SMOOTHING,
              show_default=True)
def train_tagger_cmd(corpus, out, smoothing_k):
    """Train a combined-tag tagger from a word/tag corpus file."""
    try:
        sentences = tagger_module.read_tagger_corpus(corpus)
        model = tagger_module.train_tagger(sentences, k=smoothing_k)
        tagger_module.save_tagger(model, out)
    except (OSError, tagger_module.TaggerError) as exc:
        _fail(str(exc))
    click.echo(f'trained tagger: {len(sentences)} sentences, '
               f'{len(model.tags)} tags, {len(model.words)} words -> {out}')


@cli.command(name='train-did')
@click.option('--corpus', required=True, type=click.Path())
@click.option('--out', required=True, type=click.Path())
@click.option('--smoothing-k', type=float, default=did_module.DEFAULT_SMOOTHING,
              show_default=True)
@click.option('--fusion-weight', type=float,
              default=did_module.DEFAULT_FUSION_WEIGHT, show_default=True)
def train_did_cmd(corpus, out, smoothing_k, fusion_weight):
    """Train the dialect identifier from a label TAB sentence TSV."""
    try:
        pairs = did_module.read_did_corpus(corpus)
        model = did_module.train_did(pairs, k=smoothing_k,
                                     fusion_weight=fusion_weight)
        did_module.save_did(model, out)
    except (OSError, did_module.DidError) as exc:
        _fail(str(exc))
    click.echo(f'trained dialect identifier: {len(pairs)} sentences, '
               f'labels {list(model.labels)} -> {out}')


@cli.command(name='db-validate')
@click.option('--db', 'db_path', required=True, type=click.Path())
def db_validate(db_path):
    """Validate a database document; exits 1 on any violation."""
    try:
        db = morphdb.load_db(db_path)
    except (OSError, morphdb.DatabaseError) as exc:
        click.echo(str(exc))
        sys.exit(1)
    click.echo(f'ok: {db.dialect} database, '
               f'{sum(len(v) for v in db.prefixes.values())} prefixes, '
               f'{sum(len(v) for v in db.stems.values())} stems, '
               f'{sum(len(v) for v in db.suffixes.values())} suffixes')


@cli.command(name='db-stats')
@click.option('--db', 'db_path', required=True, type=click.Path())
@click.option('--words', 'words_path', required=True, type=click.Path(),
              help='Word list file, one word per line.')
def db_stats(db_path, words_path):
    """Print entry counts and average ambiguity over a word list."""
    try:
        db = morphdb.load_db(db_path)
        with open(words_path, encoding='utf-8') as fp:
            words = [line.strip() for line in fp if line.strip()]
        ambiguity = analyzer_module.avg_ambiguity(words, db)
    except (OSError, ValueError) as exc:
        _fail(str(exc))
    click.echo(f'dialect {db.dialect}')
    click.echo(f'prefixes {sum(len(v) for v in db.prefixes.values())}')
    click.echo(f'stems {sum(len(v) for v in db.stems.values())}')
    click.echo(f'suffixes {sum(len(v) for v in db.suffixes.values())}')
    click.echo(f'compat_ab {len(db.compat_ab)}')
    click.echo(f'compat_bc {len(db.compat_bc)}')
    click.echo(f'compat_ac {len(db.compat_ac)}')
    click.echo(f'avg_ambiguity {ambiguity}')


@cli.command()
@click.option('--config', 'config_path', type=click.Path())
@click.option('--port', type=int, default=None,
              help='Override the configured port.')
@click.option('--host', default=None, help='Override the configured host.')
def serve(config_path, port, host):
    """Run the HTTP service (blocks)."""
    import uvicorn

    from dialectmorph.config import load_config
    from dialectmorph.service import create_app

    try:
        config = load_config(config_path)
    except (OSError, ValueError) as exc:
        _fail(str(exc))
    app = create_app(config=config)
    uvicorn.run(app, host=host or config.host, port=port or config.port)


def main():
    cli()


if __name__ == '__main__':
    main()
