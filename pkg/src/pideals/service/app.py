"""FastAPI service wrapping the core package.

Domain errors map to 422 with {"error": <class>, "detail": <message>}.
State is limited to the memo tables inside the core modules, which are
read-mostly and safe to share across requests.
"""

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import DomainError
from . import handlers as H
from . import schemas as S


def create_app() -> FastAPI:
    app = FastAPI(title="pideals", version=__version__)

    @app.exception_handler(DomainError)
    async def domain_error_handler(request: Request, exc: DomainError):
        body = S.ErrorResponse(error=type(exc).__name__, detail=str(exc))
        return JSONResponse(status_code=422, content=body.model_dump())

    @app.get("/api/health")
    def health():
        return {"status": "ok", "version": __version__}

    routes = [
        ("/api/rs", H.rs, S.RsRequest),
        ("/api/tableaux/of-element", H.tableaux_of_element, S.ElementRequest),
        ("/api/weyl/length", H.weyl_length, S.ElementRequest),
        ("/api/weyl/bruhat-leq", H.weyl_bruhat_leq, S.BruhatRequest),
        ("/api/weyl/dot", H.weyl_dot, S.DotRequest),
        ("/api/weyl/classes", H.weyl_classes, S.ClassesRequest),
        ("/api/symbols/of-element", H.symbol_of_element, S.ElementRequest),
        ("/api/symbols/normalize", H.symbol_normalize, S.SymbolRequest),
        ("/api/symbols/special", H.symbol_special, S.SymbolRequest),
        ("/api/symbols/nu", H.symbol_nu, S.SymbolRequest),
        ("/api/symbols/of-factored", H.symbol_of_factored, S.FactoredSymbolRequest),
        ("/api/kl/table", H.kl_table, S.KlTableRequest),
        ("/api/kl/polynomial", H.kl_polynomial, S.KlPolynomialRequest),
        ("/api/hecke/multiply", H.hecke_multiply, S.HeckeBinaryRequest),
        ("/api/hecke/bar", H.hecke_bar, S.HeckeUnaryRequest),
        ("/api/branch/step", H.branch_step, S.TupleRequest),
        ("/api/branch/chain", H.branch_chain, S.ChainRequest),
        ("/api/branch/criterion", H.branch_criterion, S.CriterionRequest),
        ("/api/branch/insert", H.branch_insert, S.InsertRequest),
        ("/api/branch/bounded", H.branch_bounded, S.BoundedRequest),
        ("/api/branch/bounded-step", H.branch_bounded_step, S.BoundedRequest),
        ("/api/branch/tensor", H.branch_tensor, S.TensorRequest),
        ("/api/cls/from-triple", H.cls_from_triple, S.FromTripleRequest),
        ("/api/cls/product", H.cls_product, S.ProductRequest),
        ("/api/cls/level", H.cls_level, S.LevelRequest),
        ("/api/cls/pls", H.cls_pls, S.PlsRequest),
        ("/api/cls/shift", H.cls_shift, S.NormalFormResponse),
        ("/api/prim/classify", H.prim_classify, S.ClassifyRequest),
        ("/api/prim/separate", H.prim_separate, S.SeparateRequest),
        ("/api/prim/equiv", H.prim_equiv, S.EquivRequest),
        ("/api/prim/tau", H.prim_tau, S.TauRequest),
        ("/api/prim/window", H.prim_window, S.WindowRequest),
        ("/api/prim/dimension", H.prim_dimension, S.DimensionRequest),
        ("/api/prim/degree", H.prim_degree, S.BoundedRequest),
    ]
    for path, handler, request_model in routes:
        def make_endpoint(fn, model):
            def endpoint(payload: model):  # type: ignore[valid-type]
                return fn(payload)
            return endpoint
        app.post(path)(make_endpoint(handler, request_model))

    return app


app = create_app()


def main():
    import uvicorn

    uvicorn.run("pideals.service.app:app", host="127.0.0.1", port=8000)


if __name__ == "__main__":
    main()
