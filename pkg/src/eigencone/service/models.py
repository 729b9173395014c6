"""Pydantic request/response models shared by the HTTP service and the CLI."""

from __future__ import annotations

from fractions import Fraction
from typing import Literal, Optional, Union

from pydantic import BaseModel, Field, model_validator

Rational = Union[int, str]


def _check_decreasing(name: str, values: list) -> None:
    for a, b in zip(values, values[1:]):
        if a < b:
            raise ValueError(f"{name} must be weakly decreasing, got {values}")


def parse_rationals(values: list[Rational]) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(str(v)) for v in values)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"invalid rational entries {values}: {exc}") from exc


class WeightTripleRequest(BaseModel):
    n: int = Field(ge=1)
    lam: list[int]
    mu: list[int]
    nu: list[int]

    @model_validator(mode="after")
    def _validate(self):
        for name, values in (("lam", self.lam), ("mu", self.mu),
                             ("nu", self.nu)):
            if len(values) != self.n:
                raise ValueError(f"{name} must have {self.n} entries")
            _check_decreasing(name, values)
        return self


class ClassifyRequest(WeightTripleRequest):
    explain: bool = False
    seed: int = 0
    trials: int = Field(default=8, ge=1)


class ClassifyResponse(BaseModel):
    verdict: Literal["0", "1", ">=2"]
    witness: Optional[dict] = None


class ValueResponse(BaseModel):
    value: int = Field(ge=0)


class HornMemberRequest(BaseModel):
    n: int = Field(ge=1)
    lam: list[Rational]
    mu: list[Rational]
    nu: list[Rational]

    @model_validator(mode="after")
    def _validate(self):
        for name, values in (("lam", self.lam), ("mu", self.mu),
                             ("nu", self.nu)):
            if len(values) != self.n:
                raise ValueError(f"{name} must have {self.n} entries")
            _check_decreasing(name, parse_rationals(values))
        return self


class MemberResponse(BaseModel):
    member: bool
    violated: Optional[Union[Literal["trace"], "FacetModel"]] = None


class FacetModel(BaseModel):
    group: Literal["A", "B", "C"]
    rank: int = Field(ge=1)
    r: int = Field(ge=1)
    I: list[int]
    J: list[int]
    K: list[int]
    coeffs: list[list[int]]

    def render(self) -> str:
        from ..cones import Inequality

        return Inequality(self.group, self.rank, self.r,
                          (tuple(self.I), tuple(self.J), tuple(self.K)),
                          tuple(tuple(c) for c in self.coeffs)).render()


class FacetCheckModel(BaseModel):
    facet: FacetModel
    is_facet: bool
    margin: str
    witness: Optional[list[list[str]]] = None


class VerificationModel(BaseModel):
    all_facets: bool
    checks: list[FacetCheckModel]


class FacetListRequest(BaseModel):
    group: Literal["A", "B", "C"]
    rank: int = Field(ge=1)
    verify: bool = False
    seed: int = 0
    trials: int = Field(default=8, ge=1)

    @model_validator(mode="after")
    def _validate(self):
        if self.group == "A" and self.rank < 2:
            raise ValueError("type A needs rank >= 2")
        return self


class FacetListResponse(BaseModel):
    group: Literal["A", "B", "C"]
    rank: int
    equality: Optional[list[list[int]]] = None
    facets: list[FacetModel]
    verification: Optional[VerificationModel] = None


class ConeMemberRequest(BaseModel):
    group: Literal["A", "B", "C"]
    rank: int = Field(ge=1)
    xi: list[Rational]
    zeta: list[Rational]
    eta: list[Rational]
    seed: int = 0
    trials: int = Field(default=8, ge=1)

    @model_validator(mode="after")
    def _validate(self):
        if self.group == "A" and self.rank < 2:
            raise ValueError("type A needs rank >= 2")
        for name, values in (("xi", self.xi), ("zeta", self.zeta),
                             ("eta", self.eta)):
            if len(values) != self.rank:
                raise ValueError(f"{name} must have {self.rank} entries")
            spec = parse_rationals(values)
            _check_decreasing(name, spec)
            if self.group in ("B", "C") and spec and spec[-1] < 0:
                raise ValueError(
                    f"type {self.group} spectra must stay nonnegative")
        return self


class DenseOrbitRequest(BaseModel):
    n: int = Field(ge=1)
    type_a: list[int] = []
    type_b: list[int] = []
    type_c: list[int] = []
    seed: int = 0
    trials: int = Field(default=8, ge=1)

    @model_validator(mode="after")
    def _validate(self):
        for name, arm in (("type_a", self.type_a), ("type_b", self.type_b),
                          ("type_c", self.type_c)):
            if sorted(set(arm)) != sorted(arm):
                raise ValueError(f"{name} has repeated entries")
            if arm and not all(1 <= a < self.n for a in arm):
                raise ValueError(f"{name} must lie in [1;{self.n - 1}]")
        return self


class DenseOrbitResponse(BaseModel):
    dense: bool
    rank: int
    rep_dim: int
    group_dim: int
    trials: int
    prime: int
    seed: int
    note: str


MemberResponse.model_rebuild()
