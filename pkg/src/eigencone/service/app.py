"""FastAPI application exposing the classifier and the facet generators."""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__
from . import api
from .models import (
    ClassifyRequest,
    ClassifyResponse,
    ConeMemberRequest,
    DenseOrbitRequest,
    DenseOrbitResponse,
    FacetListRequest,
    FacetListResponse,
    HornMemberRequest,
    MemberResponse,
    ValueResponse,
    WeightTripleRequest,
)

app = FastAPI(
    title="eigencone",
    version=__version__,
    description=("Exact 0/1/>=2 classification of Littlewood-Richardson "
                 "coefficients, Horn-cone membership, and minimal eigencone "
                 "facet lists for types A, B and C."),
)


def _guard(fn, req):
    try:
        return fn(req)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/lr/classify", response_model=ClassifyResponse)
def lr_classify(req: ClassifyRequest) -> ClassifyResponse:
    return _guard(api.classify, req)


@app.post("/lr/value", response_model=ValueResponse)
def lr_value(req: WeightTripleRequest) -> ValueResponse:
    return _guard(api.value, req)


@app.post("/horn/member", response_model=MemberResponse)
def horn_member(req: HornMemberRequest) -> MemberResponse:
    return _guard(api.horn_member, req)


@app.post("/eigencone/facets", response_model=FacetListResponse)
def eigencone_facets(req: FacetListRequest) -> FacetListResponse:
    return _guard(api.facet_list, req)


@app.post("/eigencone/member", response_model=MemberResponse)
def eigencone_member(req: ConeMemberRequest) -> MemberResponse:
    return _guard(api.cone_member, req)


@app.post("/quiver/dense-orbit", response_model=DenseOrbitResponse)
def quiver_dense_orbit(req: DenseOrbitRequest) -> DenseOrbitResponse:
    return _guard(api.dense_orbit_decision, req)
