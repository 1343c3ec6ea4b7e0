# -*- coding: utf-8 -*-
"""HTTP API over the disambiguation pipeline.

All models are loaded once when the application is created; request
handling never mutates shared state, so concurrent requests are safe.
Error responses always carry a JSON body of the form ``{"error": msg}``.
"""

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from dialectmorph.config import DISPLAY_NAMES, ModelRegistry, ServiceConfig, \
    load_registry
from dialectmorph.morphdb import DIALECTS
from dialectmorph.pipeline import DIALECT_CHOICES, PipelineError, process
from dialectmorph.schemas import DialectInfo, DisambiguateRequest, \
    DisambiguateResponse, HealthResponse, document_response

__all__ = ['create_app']


def create_app(config: ServiceConfig = None,
               registry: ModelRegistry = None) -> FastAPI:
    """Build the service around a loaded model registry."""
    if registry is None:
        if config is None:
            raise ValueError('create_app needs a config or a registry')
        registry = load_registry(config)

    app = FastAPI(title='dialectmorph', docs_url=None, redoc_url=None)
    app.state.registry = registry
    # the browser UI may be served from a different origin
    app.add_middleware(CORSMiddleware, allow_origins=['*'],
                       allow_methods=['*'], allow_headers=['*'])

    @app.exception_handler(RequestValidationError)
    async def malformed_body(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400,
                            content={'error': 'malformed request body'})

    @app.exception_handler(Exception)
    async def internal_error(request: Request, exc: Exception):
        return JSONResponse(status_code=500, content={'error': str(exc)})

    @app.post('/api/disambiguate', response_model=DisambiguateResponse,
              response_model_exclude_none=True)
    def disambiguate_endpoint(body: DisambiguateRequest):
        if body.dialect not in DIALECT_CHOICES:
            return JSONResponse(
                status_code=400,
                content={'error': f'invalid dialect {body.dialect!r}; '
                                  f'expected one of {list(DIALECT_CHOICES)}'})
        if not body.text.strip():
            return JSONResponse(status_code=400,
                                content={'error': 'empty text'})
        try:
            result = process(body.text, body.dialect, registry.resources,
                             did_model=registry.did_model)
        except PipelineError as exc:
            # Reachable only through missing models: input errors were
            # rejected above, so surface these as server-side failures.
            return JSONResponse(status_code=500, content={'error': str(exc)})
        return document_response(result)

    @app.get('/api/dialects', response_model=list[DialectInfo])
    def dialects_endpoint():
        infos = []
        for dialect in DIALECTS:
            resources = registry.resources.get(dialect)
            infos.append(DialectInfo(
                id=dialect,
                display_name=DISPLAY_NAMES[dialect],
                supports_diacritization=(
                    resources.db.supports_diacritization
                    if resources else False),
            ))
        return infos

    @app.get('/api/health', response_model=HealthResponse)
    def health_endpoint():
        return HealthResponse(
            status='ok' if registry.healthy else 'degraded',
            models_loaded=registry.loaded,
        )

    return app
