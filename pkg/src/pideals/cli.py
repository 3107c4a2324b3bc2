"""Command-line client for the service handlers.

Every subcommand builds the same pydantic request the HTTP API accepts,
runs the handler in-process (or POSTs it to --server), and prints the
response as canonical JSON: sorted keys, compact separators, no
timestamps, so output is byte-stable for fixed inputs.

Exit codes: 0 success, 1 domain error, 2 usage error.
"""

import json
import sys

import click

from .errors import DomainError
from .service import handlers as H
from .service import schemas as S


def _emit(ctx, path: str, handler, request, unwrap=None):
    server = ctx.obj.get("server") if ctx.obj else None
    try:
        if server:
            import httpx

            resp = httpx.post(server.rstrip("/") + path, json=request.model_dump(by_alias=True))
            if resp.status_code == 422:
                payload = resp.json()
                click.echo(json.dumps(
                    {"error": payload.get("error", "DomainError"),
                     "detail": payload.get("detail", resp.text)},
                    sort_keys=True, separators=(",", ":")), err=True)
                sys.exit(1)
            resp.raise_for_status()
            data = resp.json()
        else:
            data = handler(request).model_dump(by_alias=True)
    except DomainError as exc:
        click.echo(json.dumps(
            {"error": type(exc).__name__, "detail": str(exc)},
            sort_keys=True, separators=(",", ":")), err=True)
        sys.exit(1)
    if unwrap:
        data = data[unwrap]
    click.echo(json.dumps(data, sort_keys=True, separators=(",", ":")))


def _ints(text) -> list[int]:
    return [int(p) for p in str(text).split(",") if p != ""]


def _strs(text) -> list[str]:
    return [p for p in str(text).split(",") if p != ""]


def _triple_model(text) -> S.TripleModel:
    parts = _strs(text)
    if not parts:
        raise click.UsageError("triple must be 'x,y[,Z rows...]'")
    return S.TripleModel(x=int(parts[0]), y=parts[1] if len(parts) > 1 else "0",
                         Z=[int(p) for p in parts[2:]])


def _nf_model(text) -> S.NormalFormModel:
    return S.NormalFormModel(**json.loads(text))


@click.group()
@click.option("--server", default=None, help="Base URL of a running service; "
              "default runs handlers in-process.")
@click.option("--json", "json_flag", is_flag=True, default=True,
              help="Emit canonical JSON (always on).")
@click.pass_context
def main(ctx, server, json_flag):
    """Exact combinatorics of primitive ideals: RS insertion, Weyl groups,
    symbols, KL polynomials, branching, coherent local systems."""
    ctx.ensure_object(dict)
    ctx.obj["server"] = server


@main.command()
@click.argument("seq")
@click.pass_context
def rs(ctx, seq):
    """Robinson-Schensted tableaux of a comma-separated sequence."""
    _emit(ctx, "/api/rs", H.rs, S.RsRequest(seq=_ints(seq)))


# ---- weyl ------------------------------------------------------------------

@main.group()
def weyl():
    """Signed-permutation Weyl group operations."""


@weyl.command("length")
@click.option("--type", "gtype", type=click.Choice(["C", "D"]), required=True)
@click.option("--w", required=True, help="One-line form w(-n)..w(-1),w(1)..w(n).")
@click.pass_context
def weyl_length(ctx, gtype, w):
    _emit(ctx, "/api/weyl/length", H.weyl_length,
          S.ElementRequest(perm=S.PermModel(type=gtype, oneLine=_ints(w))))


@weyl.command("leq")
@click.option("--type", "gtype", type=click.Choice(["C", "D"]), required=True)
@click.option("--x", required=True)
@click.option("--y", required=True)
@click.pass_context
def weyl_leq(ctx, gtype, x, y):
    _emit(ctx, "/api/weyl/bruhat-leq", H.weyl_bruhat_leq,
          S.BruhatRequest(x=S.PermModel(type=gtype, oneLine=_ints(x)),
                          y=S.PermModel(type=gtype, oneLine=_ints(y))))


@weyl.command("dot")
@click.option("--type", "gtype", type=click.Choice(["C", "D"]), required=True)
@click.option("--w", required=True)
@click.option("--weight", required=True, help="Half-integers, e.g. 1,0 or 3/2,-1/2.")
@click.option("--rho", default=None, help="Override the default rho.")
@click.pass_context
def weyl_dot(ctx, gtype, w, weight, rho):
    _emit(ctx, "/api/weyl/dot", H.weyl_dot,
          S.DotRequest(perm=S.PermModel(type=gtype, oneLine=_ints(w)),
                       weight=_strs(weight), rho=_strs(rho) if rho else None))


@weyl.command("classes")
@click.option("--type", "gtype", type=click.Choice(["C", "D"]), required=True)
@click.option("--coords", required=True)
@click.pass_context
def weyl_classes(ctx, gtype, coords):
    _emit(ctx, "/api/weyl/classes", H.weyl_classes,
          S.ClassesRequest(type=gtype, coords=_strs(coords)))


@weyl.command("tableaux")
@click.option("--type", "gtype", type=click.Choice(["C", "D"]), required=True)
@click.option("--w", required=True)
@click.pass_context
def weyl_tableaux(ctx, gtype, w):
    """Insertion/recording tableaux and shape p(w) of an element."""
    _emit(ctx, "/api/tableaux/of-element", H.tableaux_of_element,
          S.ElementRequest(perm=S.PermModel(type=gtype, oneLine=_ints(w))))


# ---- symbols ------------------------------------------------------------------

@main.group()
def symbol():
    """Two-row symbols and the nu partition maps."""


def _symbol_model_from(gtype, n, top, bottom) -> S.SymbolModel:
    return S.SymbolModel(type=gtype, n=n, top=_ints(top) if top else [],
                         bottom=_ints(bottom) if bottom else [])


@symbol.command("of-w")
@click.option("--type", "gtype", type=click.Choice(["C", "D"]), required=True)
@click.option("--w", required=True)
@click.pass_context
def symbol_of_w(ctx, gtype, w):
    _emit(ctx, "/api/symbols/of-element", H.symbol_of_element,
          S.ElementRequest(perm=S.PermModel(type=gtype, oneLine=_ints(w))))


@symbol.command("normalize")
@click.option("--type", "gtype", type=click.Choice(["C", "D"]), required=True)
@click.option("--n", type=int, required=True)
@click.option("--top", default="")
@click.option("--bottom", default="")
@click.pass_context
def symbol_normalize(ctx, gtype, n, top, bottom):
    _emit(ctx, "/api/symbols/normalize", H.symbol_normalize,
          S.SymbolRequest(symbol=_symbol_model_from(gtype, n, top, bottom)))


@symbol.command("special")
@click.option("--type", "gtype", type=click.Choice(["C", "D"]), required=True)
@click.option("--n", type=int, required=True)
@click.option("--top", default="")
@click.option("--bottom", default="")
@click.pass_context
def symbol_special(ctx, gtype, n, top, bottom):
    _emit(ctx, "/api/symbols/special", H.symbol_special,
          S.SymbolRequest(symbol=_symbol_model_from(gtype, n, top, bottom)))


@symbol.command("nu")
@click.option("--type", "gtype", type=click.Choice(["C", "D"]), required=True)
@click.option("--n", type=int, required=True)
@click.option("--top", default="")
@click.option("--bottom", default="")
@click.pass_context
def symbol_nu(ctx, gtype, n, top, bottom):
    _emit(ctx, "/api/symbols/nu", H.symbol_nu,
          S.SymbolRequest(symbol=_symbol_model_from(gtype, n, top, bottom)))


@symbol.command("of-factored")
@click.option("--type", "gtype", type=click.Choice(["C", "D"]), required=True)
@click.option("--w", required=True)
@click.option("--coords", required=True)
@click.pass_context
def symbol_of_factored(ctx, gtype, w, coords):
    _emit(ctx, "/api/symbols/of-factored", H.symbol_of_factored,
          S.FactoredSymbolRequest(perm=S.PermModel(type=gtype, oneLine=_ints(w)),
                                  coords=_strs(coords)))


# ---- kl / hecke ------------------------------------------------------------------

def _system_spec(gtype, rank, matrix) -> S.SystemSpec:
    if matrix:
        return S.SystemSpec(type="matrix", rank=rank, matrix=json.loads(matrix))
    return S.SystemSpec(type=gtype, rank=rank)


@main.command()
@click.option("--type", "gtype", type=click.Choice(["A", "C", "D", "matrix"]), default="C")
@click.option("--rank", type=int, default=2)
@click.option("--matrix", default=None, help="JSON Coxeter matrix for --type matrix.")
@click.option("--x", default=None, help="Optional one-line form for a pointwise query.")
@click.option("--y", default=None)
@click.pass_context
def kl(ctx, gtype, rank, matrix, x, y):
    """Dump the Kazhdan-Lusztig P-table, or query one entry with --x/--y."""
    spec = _system_spec(gtype, rank, matrix)
    if x is not None or y is not None:
        if x is None or y is None:
            raise click.UsageError("pointwise query needs both --x and --y")
        _emit(ctx, "/api/kl/polynomial", H.kl_polynomial,
              S.KlPolynomialRequest(system=spec,
                                    x=S.ElementRef(oneLine=_ints(x)),
                                    y=S.ElementRef(oneLine=_ints(y))))
    else:
        # the table dump is the bare entry list [{"x":..., "y":..., "P":...}]
        _emit(ctx, "/api/kl/table", H.kl_table, S.KlTableRequest(system=spec),
              unwrap="entries")


@main.group()
def hecke():
    """Raw Hecke-algebra arithmetic in the T basis."""


def _hecke_element(text) -> S.HeckeElementModel:
    return S.HeckeElementModel(**json.loads(text))


@hecke.command("mul")
@click.option("--type", "gtype", type=click.Choice(["A", "C", "D", "matrix"]), default="C")
@click.option("--rank", type=int, default=2)
@click.option("--matrix", default=None)
@click.option("--a", required=True, help='JSON {"terms":[{"element":{"word":[0]},"coeffs":[[0,1]]}]}')
@click.option("--b", required=True)
@click.pass_context
def hecke_mul(ctx, gtype, rank, matrix, a, b):
    _emit(ctx, "/api/hecke/multiply", H.hecke_multiply,
          S.HeckeBinaryRequest(system=_system_spec(gtype, rank, matrix),
                               a=_hecke_element(a), b=_hecke_element(b)))


@hecke.command("bar")
@click.option("--type", "gtype", type=click.Choice(["A", "C", "D", "matrix"]), default="C")
@click.option("--rank", type=int, default=2)
@click.option("--matrix", default=None)
@click.option("--a", required=True)
@click.pass_context
def hecke_bar(ctx, gtype, rank, matrix, a):
    _emit(ctx, "/api/hecke/bar", H.hecke_bar,
          S.HeckeUnaryRequest(system=_system_spec(gtype, rank, matrix),
                              a=_hecke_element(a)))


# ---- branching ------------------------------------------------------------------

@main.group(invoke_without_command=True)
@click.option("--alg", type=click.Choice(["o", "sp"]), default=None)
@click.option("--tuple", "tup", default=None)
@click.option("--chain", default=None, help="Target tuple; runs the chain search instead.")
@click.pass_context
def branch(ctx, alg, tup, chain):
    """Gelfand-Tsetlin branching: one-step set, or --chain for restriction."""
    if ctx.invoked_subcommand is not None:
        return
    if alg is None or tup is None:
        raise click.UsageError("branch needs --alg and --tuple (or a subcommand)")
    _branch_dispatch(ctx, alg, tup, chain)


def _branch_dispatch(ctx, alg, tup, chain):
    if chain is not None:
        _emit(ctx, "/api/branch/chain", H.branch_chain,
              S.ChainRequest.model_validate({"alg": alg, "from": _strs(tup), "to": _strs(chain)}))
    else:
        _emit(ctx, "/api/branch/step", H.branch_step,
              S.TupleRequest(alg=alg, tuple=_strs(tup)))


@branch.command("step")
@click.option("--alg", type=click.Choice(["o", "sp"]), required=True)
@click.option("--tuple", "tup", required=True)
@click.option("--chain", default=None, help="Target tuple; runs the chain search instead.")
@click.pass_context
def branch_step(ctx, alg, tup, chain):
    _branch_dispatch(ctx, alg, tup, chain)


@branch.command("criterion")
@click.option("--alg", type=click.Choice(["o", "sp"]), required=True)
@click.option("--lam", required=True)
@click.option("--mu", required=True)
@click.pass_context
def branch_criterion(ctx, alg, lam, mu):
    _emit(ctx, "/api/branch/criterion", H.branch_criterion,
          S.CriterionRequest(alg=alg, lam=_strs(lam), mu=_strs(mu)))


@branch.command("insert")
@click.option("--alg", type=click.Choice(["o", "sp"]), required=True)
@click.option("--tuple", "tup", required=True)
@click.option("--k", required=True)
@click.option("--side", type=click.Choice(["left", "right"]), required=True)
@click.pass_context
def branch_insert(ctx, alg, tup, k, side):
    _emit(ctx, "/api/branch/insert", H.branch_insert,
          S.InsertRequest(alg=alg, tuple=_strs(tup), k=k, side=side))


@branch.command("bounded")
@click.option("--tuple", "tup", required=True)
@click.option("--step", is_flag=True, default=False, help="Also branch one level down.")
@click.pass_context
def branch_bounded(ctx, tup, step):
    if step:
        _emit(ctx, "/api/branch/bounded-step", H.branch_bounded_step,
              S.BoundedRequest(tuple=_strs(tup)))
    else:
        _emit(ctx, "/api/branch/bounded", H.branch_bounded,
              S.BoundedRequest(tuple=_strs(tup)))


@branch.command("tensor")
@click.option("--tuple", "tup", required=True)
@click.option("--j", type=click.IntRange(0, 1), default=0)
@click.pass_context
def branch_tensor(ctx, tup, j):
    _emit(ctx, "/api/branch/tensor", H.branch_tensor,
          S.TensorRequest(tuple=_strs(tup), j=j))


# ---- cls ------------------------------------------------------------------

@main.group()
def cls():
    """Coherent local systems: normal forms, products, level sets."""


@cls.command("from-triple")
@click.argument("triple")
@click.option("--alg", type=click.Choice(["o", "sp"]), default="sp")
@click.pass_context
def cls_from_triple(ctx, triple, alg):
    """TRIPLE is x,y[,Z rows...], e.g. 1,3/2,2,1."""
    _emit(ctx, "/api/cls/from-triple", H.cls_from_triple,
          S.FromTripleRequest(alg=alg, triple=_triple_model(triple)))


@cls.command("product")
@click.option("--a", required=True, help='JSON normal form {"alg":...,"v":...,"L":{},"m":...,"R":false}')
@click.option("--b", required=True)
@click.pass_context
def cls_product(ctx, a, b):
    _emit(ctx, "/api/cls/product", H.cls_product,
          S.ProductRequest(a=_nf_model(a), b=_nf_model(b)))


@cls.command("level")
@click.option("--nf", default=None, help="JSON normal form.")
@click.option("--triple", default=None, help="x,y[,Z rows...] alternative.")
@click.option("--alg", type=click.Choice(["o", "sp"]), default="sp")
@click.option("--n", type=int, required=True)
@click.option("--bound", type=int, default=None)
@click.pass_context
def cls_level(ctx, nf, triple, alg, n, bound):
    if nf is None and triple is None:
        raise click.UsageError("provide --nf or --triple")
    _emit(ctx, "/api/cls/level", H.cls_level,
          S.LevelRequest(nf=_nf_model(nf) if nf else None,
                         alg=alg, triple=_triple_model(triple) if triple else None,
                         n=n, bound=bound))


@cls.command("pls")
@click.option("--alg", type=click.Choice(["o", "sp"]), required=True)
@click.option("--tuple", "tup", required=True)
@click.option("--width", type=int, required=True)
@click.option("--bound", type=int, required=True)
@click.pass_context
def cls_pls(ctx, alg, tup, width, bound):
    """Enumerate the coherent complement Q(lambda) at one width."""
    _emit(ctx, "/api/cls/pls", H.cls_pls,
          S.PlsRequest(alg=alg, tuple=_strs(tup), width=width, bound=bound))


@cls.command("shift")
@click.option("--nf", required=True)
@click.pass_context
def cls_shift(ctx, nf):
    _emit(ctx, "/api/cls/shift", H.cls_shift,
          S.NormalFormResponse(nf=_nf_model(nf)))


# ---- prim ------------------------------------------------------------------

@main.group()
def prim():
    """The (x, y, Z) classification layer."""


@prim.command("classify")
@click.option("--alg", type=click.Choice(["o", "sp"]), default="sp")
@click.option("--x", type=int, required=True)
@click.option("--y", required=True)
@click.option("--Z", "z", default="")
@click.option("--n", type=int, required=True)
@click.pass_context
def prim_classify(ctx, alg, x, y, z, n):
    """Highest weight, normal form, and g-vector of V(x, y, Z)(2n)."""
    _emit(ctx, "/api/prim/classify", H.prim_classify,
          S.ClassifyRequest(alg=alg, x=x, y=y, Z=_ints(z) if z else [], n=n))


@prim.command("separate")
@click.option("--alg", type=click.Choice(["o", "sp"]), default="sp")
@click.option("--t1", required=True, help="x,y[,Z rows...]")
@click.option("--t2", required=True)
@click.option("--nmax", type=int, default=5)
@click.option("--bound", type=int, default=6)
@click.pass_context
def prim_separate(ctx, alg, t1, t2, nmax, bound):
    """Print a separating certificate, or report indistinguishability."""
    _emit(ctx, "/api/prim/separate", H.prim_separate,
          S.SeparateRequest(alg=alg, t1=_triple_model(t1), t2=_triple_model(t2),
                            nmax=nmax, bound=bound))


@prim.command("equiv")
@click.option("--type", "gtype", type=click.Choice(["C", "D"]), required=True)
@click.option("--w1", required=True)
@click.option("--w2", required=True)
@click.pass_context
def prim_equiv(ctx, gtype, w1, w2):
    _emit(ctx, "/api/prim/equiv", H.prim_equiv,
          S.EquivRequest(w1=S.PermModel(type=gtype, oneLine=_ints(w1)),
                         w2=S.PermModel(type=gtype, oneLine=_ints(w2))))


@prim.command("tau")
@click.option("--type", "gtype", type=click.Choice(["C", "D"]), required=True)
@click.option("--w", required=True)
@click.option("--i", type=int, required=True)
@click.pass_context
def prim_tau(ctx, gtype, w, i):
    _emit(ctx, "/api/prim/tau", H.prim_tau,
          S.TauRequest(perm=S.PermModel(type=gtype, oneLine=_ints(w)), i=i))


@prim.command("window")
@click.option("--h", required=True)
@click.option("--r", type=int, required=True)
@click.pass_context
def prim_window(ctx, h, r):
    _emit(ctx, "/api/prim/window", H.prim_window,
          S.WindowRequest(h=_ints(h), r=r))


@prim.command("dim")
@click.option("--alg", type=click.Choice(["o", "sp"]), required=True)
@click.option("--tuple", "tup", required=True)
@click.pass_context
def prim_dim(ctx, alg, tup):
    _emit(ctx, "/api/prim/dimension", H.prim_dimension,
          S.DimensionRequest(alg=alg, tuple=_strs(tup)))


@prim.command("degree")
@click.option("--tuple", "tup", required=True)
@click.pass_context
def prim_degree(ctx, tup):
    _emit(ctx, "/api/prim/degree", H.prim_degree,
          S.BoundedRequest(tuple=_strs(tup)))


if __name__ == "__main__":
    main()
