# -*- coding: utf-8 -*-
"""Pydantic request/response models for the HTTP API."""

from typing import Optional

from pydantic import BaseModel

from dialectmorph.morphdb import FEATURE_KEYS
from dialectmorph.pipeline import DocumentResult


class DisambiguateRequest(BaseModel):
    text: str
    dialect: str = 'auto'


class AnalysisOut(BaseModel):
    diac: str
    pos: str
    lemma: str
    tokens: list[str]
    gloss: str
    features: dict[str, str]
    score: float


class WordOut(BaseModel):
    raw: str
    top: AnalysisOut
    analyses: list[AnalysisOut]


class DisambiguateResponse(BaseModel):
    dialect_used: str
    dialect_scores: Optional[dict[str, float]] = None
    words: list[WordOut]
    views: dict[str, str]


class DialectInfo(BaseModel):
    id: str
    display_name: str
    supports_diacritization: bool


class HealthResponse(BaseModel):
    status: str
    models_loaded: dict[str, bool]


def analysis_out(analysis) -> AnalysisOut:
    return AnalysisOut(
        diac=analysis.diac,
        pos=analysis.features['pos'],
        lemma=analysis.lemma,
        tokens=list(analysis.tokens),
        gloss=analysis.gloss,
        features={k: analysis.features[k] for k in FEATURE_KEYS},
        score=analysis.score,
    )


def document_response(result: DocumentResult) -> DisambiguateResponse:
    words = [
        WordOut(raw=w.raw,
                top=analysis_out(w.top),
                analyses=[analysis_out(a) for a in w.analyses])
        for w in result.words
    ]
    return DisambiguateResponse(
        dialect_used=result.dialect_used,
        dialect_scores=result.dialect_scores,
        words=words,
        views=dict(result.views),
    )
