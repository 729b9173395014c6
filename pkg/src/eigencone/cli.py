"""Command-line client for the classification and eigencone service.

Every subcommand builds the same pydantic request the HTTP service accepts
and renders the response deterministically (byte-identical output for
identical arguments and seed).  By default requests are served in-process;
``--server URL`` sends them to a running instance instead.

Exit codes: 0 success, 1 internal failure, 2 argument errors.
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction
from pathlib import Path

import click
import httpx
from pydantic import BaseModel, ValidationError

from .service import api
from .service.models import (
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

_LOCAL = {
    "/lr/classify": (api.classify, ClassifyResponse),
    "/lr/value": (api.value, ValueResponse),
    "/horn/member": (api.horn_member, MemberResponse),
    "/eigencone/facets": (api.facet_list, FacetListResponse),
    "/eigencone/member": (api.cone_member, MemberResponse),
    "/quiver/dense-orbit": (api.dense_orbit_decision, DenseOrbitResponse),
}


def _call(server: str | None, path: str, request: BaseModel):
    handler, response_cls = _LOCAL[path]
    if server is None:
        try:
            return handler(request)
        except ValueError as exc:
            raise click.UsageError(str(exc)) from exc
    url = server.rstrip("/") + path
    resp = httpx.post(url, json=request.model_dump(mode="json"), timeout=None)
    if resp.status_code == 422:
        raise click.UsageError(str(resp.json().get("detail")))
    resp.raise_for_status()
    return response_cls.model_validate(resp.json())


def _build(request_cls, **kwargs):
    try:
        return request_cls(**kwargs)
    except ValidationError as exc:
        first = exc.errors()[0]
        raise click.UsageError(first.get("msg", str(exc)))


def _parse_ints(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",")] if text else []
    except ValueError as exc:
        raise click.UsageError(f"expected comma-separated integers: {text!r}")


def _parse_rationals(text: str) -> list[str]:
    out = []
    for tok in text.split(",") if text else []:
        try:
            Fraction(tok)
        except (ValueError, ZeroDivisionError):
            raise click.UsageError(f"invalid rational entry {tok!r}")
        out.append(tok)
    return out


def _emit_json(model: BaseModel) -> None:
    click.echo(json.dumps(model.model_dump(mode="json"), indent=2))


def _use_memo(memo_cache: str | None, seed: int = 0, trials: int = 8):
    """Load a memo dump before the call; return a save callback."""
    if memo_cache is None:
        return lambda: None
    path = Path(memo_cache)
    classifier = api.get_classifier(seed, trials)
    if path.exists():
        try:
            classifier.load_memo(json.loads(path.read_text()))
        except ValueError as exc:
            raise click.UsageError(f"cannot load memo cache {path}: {exc}")

    def save():
        path.write_text(json.dumps(classifier.export_memo()) + "\n")

    return save


format_option = click.option("--format", "fmt",
                             type=click.Choice(["text", "json"]),
                             default="text", show_default=True,
                             help="Output format.")
server_option = click.option("--server", default=None, metavar="URL",
                             help="Send the request to a running service "
                                  "instead of computing in-process.")
seed_option = click.option("--seed", type=int, default=0, show_default=True,
                           help="Random seed for the dense-orbit test.")
trials_option = click.option("--trials", type=int, default=8,
                             show_default=True,
                             help="Dense-orbit sampling trials.")
memo_option = click.option("--memo-cache", default=None, metavar="FILE",
                           help="JSON memo dump to load before and save "
                                "after the run (local mode only).")


@click.group()
@click.version_option(package_name="eigencone")
def main() -> None:
    """Littlewood-Richardson classification and eigencone facets."""


# -- lr ---------------------------------------------------------------------


@main.group()
def lr() -> None:
    """Littlewood-Richardson coefficients."""


@lr.command("classify")
@click.option("-n", "n", type=int, required=True, help="Length of the weights.")
@click.option("--lam", required=True, help="Comma-separated weight entries.")
@click.option("--mu", required=True)
@click.option("--nu", required=True)
@click.option("--explain", is_flag=True, help="Include the witness trace.")
@seed_option
@trials_option
@memo_option
@format_option
@server_option
def lr_classify(n, lam, mu, nu, explain, seed, trials, memo_cache, fmt,
                server) -> None:
    """Decide whether the triple coefficient is 0, 1 or >= 2."""
    if memo_cache and server:
        raise click.UsageError("--memo-cache only applies to local mode")
    req = _build(ClassifyRequest, n=n, lam=_parse_ints(lam),
                 mu=_parse_ints(mu), nu=_parse_ints(nu), explain=explain,
                 seed=seed, trials=trials)
    save = _use_memo(memo_cache, seed, trials)
    resp = _call(server, "/lr/classify", req)
    save()
    if fmt == "json":
        _emit_json(resp)
    else:
        click.echo(resp.verdict)
        if explain and resp.witness is not None:
            click.echo(json.dumps(resp.witness, indent=2))


@lr.command("value")
@click.option("-n", "n", type=int, required=True)
@click.option("--lam", required=True)
@click.option("--mu", required=True)
@click.option("--nu", required=True)
@format_option
@server_option
def lr_value(n, lam, mu, nu, fmt, server) -> None:
    """Exact coefficient value via the tableau-counting oracle."""
    req = _build(WeightTripleRequest, n=n, lam=_parse_ints(lam),
                 mu=_parse_ints(mu), nu=_parse_ints(nu))
    resp = _call(server, "/lr/value", req)
    if fmt == "json":
        _emit_json(resp)
    else:
        click.echo(str(resp.value))


# -- horn -------------------------------------------------------------------


@main.group()
def horn() -> None:
    """The Horn cone of Hermitian spectra."""


@horn.command("member")
@click.option("-n", "n", type=int, required=True)
@click.option("--lam", required=True, help="Comma-separated rationals (p/q).")
@click.option("--mu", required=True)
@click.option("--nu", required=True)
@memo_option
@format_option
@server_option
def horn_member(n, lam, mu, nu, memo_cache, fmt, server) -> None:
    """Decide membership of a rational spectrum triple."""
    if memo_cache and server:
        raise click.UsageError("--memo-cache only applies to local mode")
    req = _build(HornMemberRequest, n=n, lam=_parse_rationals(lam),
                 mu=_parse_rationals(mu), nu=_parse_rationals(nu))
    save = _use_memo(memo_cache)
    resp = _call(server, "/horn/member", req)
    save()
    if fmt == "json":
        _emit_json(resp)
    else:
        click.echo("yes" if resp.member else "no")


# -- eigencone --------------------------------------------------------------


@main.group()
def eigencone() -> None:
    """Eigencones of the compact groups of types A, B and C."""


@eigencone.command("list")
@click.option("--group", type=click.Choice(["A", "B", "C"]), required=True)
@click.option("--rank", type=int, required=True)
@click.option("--verify", is_flag=True,
              help="Certify every inequality as a facet by exact LP.")
@seed_option
@trials_option
@memo_option
@format_option
@server_option
def eigencone_list(group, rank, verify, seed, trials, memo_cache, fmt,
                   server) -> None:
    """Emit the minimal facet list, sorted by (r, I, J, K)."""
    if memo_cache and server:
        raise click.UsageError("--memo-cache only applies to local mode")
    req = _build(FacetListRequest, group=group, rank=rank, verify=verify,
                 seed=seed, trials=trials)
    save = _use_memo(memo_cache, seed, trials)
    resp = _call(server, "/eigencone/facets", req)
    save()
    if fmt == "json":
        _emit_json(resp)
        if resp.verification is not None and not resp.verification.all_facets:
            sys.exit(1)
        return
    if resp.equality is not None:
        n = resp.rank
        terms = " + ".join(f"{s}{i}" for s in ("ξ", "ζ", "η")
                           for i in range(1, n + 1))
        click.echo(f"equality: {terms} = 0")
    for facet in resp.facets:
        click.echo(facet.render())
    click.echo(f"total: {len(resp.facets)} facets")
    if resp.verification is not None:
        ver = resp.verification
        if ver.all_facets:
            click.echo("verification: all inequalities certified as facets")
        else:
            for check in ver.checks:
                if not check.is_facet:
                    click.echo("verification: NOT A FACET: "
                               + check.facet.render())
            sys.exit(1)


@eigencone.command("member")
@click.option("--group", type=click.Choice(["A", "B", "C"]), required=True)
@click.option("--rank", type=int, required=True)
@click.option("--xi", required=True, help="Comma-separated rationals (p/q).")
@click.option("--zeta", required=True)
@click.option("--eta", required=True)
@seed_option
@trials_option
@memo_option
@format_option
@server_option
def eigencone_member(group, rank, xi, zeta, eta, seed, trials, memo_cache,
                     fmt, server) -> None:
    """Decide eigencone membership for dominant rational spectra."""
    if memo_cache and server:
        raise click.UsageError("--memo-cache only applies to local mode")
    req = _build(ConeMemberRequest, group=group, rank=rank,
                 xi=_parse_rationals(xi), zeta=_parse_rationals(zeta),
                 eta=_parse_rationals(eta), seed=seed, trials=trials)
    save = _use_memo(memo_cache, seed, trials)
    resp = _call(server, "/eigencone/member", req)
    save()
    if fmt == "json":
        _emit_json(resp)
        return
    if resp.member:
        click.echo("yes")
    else:
        click.echo("no")
        if resp.violated == "trace":
            click.echo("violated: trace equality")
        elif resp.violated is not None:
            click.echo(f"violated: {resp.violated.render()}")


# -- quiver -----------------------------------------------------------------


@main.group()
def quiver() -> None:
    """Triple flag quivers and dense orbits."""


@quiver.command("dense-orbit")
@click.option("--types", "types_", required=True,
              help="Three ;-separated comma lists, e.g. '1,2;1;2'.")
@click.option("-n", "n", type=int, required=True)
@seed_option
@trials_option
@format_option
@server_option
def quiver_dense_orbit(types_, n, seed, trials, fmt, server) -> None:
    """Decide whether the associated flag-variety product has a dense orbit."""
    parts = types_.split(";")
    if len(parts) != 3:
        raise click.UsageError("--types needs exactly three ;-separated lists")
    arms = [_parse_ints(part) for part in parts]
    req = _build(DenseOrbitRequest, n=n, type_a=arms[0], type_b=arms[1],
                 type_c=arms[2], seed=seed, trials=trials)
    resp = _call(server, "/quiver/dense-orbit", req)
    if fmt == "json":
        _emit_json(resp)
        return
    click.echo("dense" if resp.dense else "not dense")
    click.echo(f"rank {resp.rank} of {resp.rep_dim} "
               f"(group dimension {resp.group_dim}, trials {resp.trials}, "
               f"prime {resp.prime}, seed {resp.seed})")
    click.echo(resp.note)


# -- serve ------------------------------------------------------------------


@main.command("serve")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host, port) -> None:
    """Run the HTTP service."""
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
