"""Service operations: pure functions from request models to response models.

The HTTP routes and the CLI both call these, so a CLI invocation exercises
exactly the contract the service exposes.  Classifier instances (and the
facet lists derived from them) are cached per (seed, trials), which is what
makes a long-running service profitable: the memo tables stay warm across
requests.
"""

from __future__ import annotations

from .. import cones
from ..classify import LrClassifier
from ..lr import triple_coefficient
from ..quiver import TripleFlagQuiver, dense_orbit
from .models import (
    ClassifyRequest,
    ClassifyResponse,
    ConeMemberRequest,
    DenseOrbitRequest,
    DenseOrbitResponse,
    FacetListRequest,
    FacetListResponse,
    FacetModel,
    HornMemberRequest,
    MemberResponse,
    ValueResponse,
    VerificationModel,
    WeightTripleRequest,
    parse_rationals,
)

_classifiers: dict[tuple[int, int], LrClassifier] = {}
_facet_cache: dict[tuple[str, int, int, int], list[cones.Inequality]] = {}


def get_classifier(seed: int = 0, trials: int = 8) -> LrClassifier:
    key = (seed, trials)
    cls = _classifiers.get(key)
    if cls is None:
        cls = LrClassifier(seed=seed, trials=trials)
        _classifiers[key] = cls
    return cls


def get_facets(group: str, rank: int, seed: int = 0,
               trials: int = 8) -> list[cones.Inequality]:
    key = (group, rank, seed, trials)
    fl = _facet_cache.get(key)
    if fl is None:
        fl = cones.facets(group, rank, get_classifier(seed, trials))
        _facet_cache[key] = fl
    return fl


def classify(req: ClassifyRequest) -> ClassifyResponse:
    cls = get_classifier(req.seed, req.trials)
    if req.explain:
        witness = cls.witness(req.lam, req.mu, req.nu)
        return ClassifyResponse(verdict=witness.verdict.token,
                                witness=witness.to_json())
    verdict = cls.classify(req.lam, req.mu, req.nu)
    return ClassifyResponse(verdict=verdict.token, witness=None)


def value(req: WeightTripleRequest) -> ValueResponse:
    return ValueResponse(value=triple_coefficient(req.lam, req.mu, req.nu))


def horn_member(req: HornMemberRequest) -> MemberResponse:
    cls = get_classifier()
    ok = cls.horn_member(parse_rationals(req.lam), parse_rationals(req.mu),
                         parse_rationals(req.nu))
    return MemberResponse(member=ok)


def _facet_model(ineq: cones.Inequality) -> FacetModel:
    return FacetModel(**ineq.to_json())


def facet_list(req: FacetListRequest) -> FacetListResponse:
    fl = get_facets(req.group, req.rank, req.seed, req.trials)
    verification = None
    if req.verify:
        report = cones.verify_irredundant(fl, req.group, req.rank)
        verification = VerificationModel(**report.to_json())
    equality = None
    if req.group == "A":
        equality = [list(b) for b in cones.trace_equality(req.rank)]
    return FacetListResponse(group=req.group, rank=req.rank,
                             equality=equality,
                             facets=[_facet_model(f) for f in fl],
                             verification=verification)


def cone_member(req: ConeMemberRequest) -> MemberResponse:
    fl = get_facets(req.group, req.rank, req.seed, req.trials)
    ok, violated = cones.member(req.group, req.rank,
                                parse_rationals(req.xi),
                                parse_rationals(req.zeta),
                                parse_rationals(req.eta), fl)
    if ok:
        return MemberResponse(member=True)
    if violated == "trace":
        return MemberResponse(member=False, violated="trace")
    return MemberResponse(member=False, violated=_facet_model(violated))


def dense_orbit_decision(req: DenseOrbitRequest) -> DenseOrbitResponse:
    quiver = TripleFlagQuiver.from_types(req.type_a, req.type_b, req.type_c,
                                         req.n)
    decision = dense_orbit(quiver, seed=req.seed, trials=req.trials)
    return DenseOrbitResponse(dense=decision.dense, rank=decision.rank,
                              rep_dim=decision.rep_dim,
                              group_dim=decision.group_dim,
                              trials=decision.trials, prime=decision.prime,
                              seed=decision.seed,
                              note=decision.error_bound)
