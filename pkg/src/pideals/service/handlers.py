"""Pure request -> response handlers shared by the HTTP routes and the CLI."""

from .. import branching, cls, hecke, primitive, symbols, tableaux, weyl
from ..errors import DomainError
from ..halfint import fmt_half, parse_half
from . import schemas as S


def _perm(model: S.PermModel) -> weyl.SignedPermutation:
    return weyl.make_signed_perm(model.oneLine, model.type)


def _weight_model(w: weyl.Weight) -> S.WeightModel:
    return S.WeightModel(n=w.n, coords2=list(w.coords2), display=w.display())


def _tableau_model(t: tableaux.Tableau) -> S.TableauModel:
    return S.TableauModel(rows=t.as_lists())


def _symbol(model: S.SymbolModel) -> symbols.Symbol:
    return symbols.Symbol(model.type, model.n, tuple(model.top), tuple(model.bottom))


def _symbol_model(s: symbols.Symbol) -> S.SymbolModel:
    return S.SymbolModel(type=s.type_tag, n=s.n, top=list(s.top), bottom=list(s.bottom))


def _tuple2(values) -> tuple[int, ...]:
    return tuple(parse_half(v) for v in values)


def _tuples_out(tuples) -> list[list[str]]:
    return [[fmt_half(v) for v in t] for t in sorted(tuples)]


def _nf(model: S.NormalFormModel) -> cls.ClsNormalForm:
    return cls.ClsNormalForm.make(
        model.alg, v=model.v,
        exponents={int(p): e for p, e in model.L.items()},
        m=model.m, spinor=model.R, e_infinity=model.Einf)


def _nf_model(nf: cls.ClsNormalForm) -> S.NormalFormModel:
    data = nf.as_json()
    return S.NormalFormModel(**{**data, "Einf": nf.e_infinity})


def _triple(model: S.TripleModel) -> cls.Triple:
    return cls.Triple(model.x, parse_half(model.y), tuple(model.Z))


# ---- tableaux -------------------------------------------------------------

def rs(req: S.RsRequest) -> S.RsResponse:
    steps = tableaux.rs_insert_steps(req.seq)
    insertion, recording = steps[-1]
    return S.RsResponse(
        insertion=_tableau_model(insertion),
        recording=_tableau_model(recording),
        steps=[{"insertion": y.as_lists(), "recording": yp.as_lists()}
               for y, yp in steps],
    )


def tableaux_of_element(req: S.ElementRequest) -> S.TableauxOfElementResponse:
    w = _perm(req.perm)
    insertion, recording = tableaux.rs_of_permutation(w)
    return S.TableauxOfElementResponse(
        insertion=_tableau_model(insertion),
        recording=_tableau_model(recording),
        shape=list(tableaux.shape(insertion).rows),
    )


# ---- weyl -----------------------------------------------------------------

def weyl_length(req: S.ElementRequest) -> S.LengthResponse:
    return S.LengthResponse(length=weyl.bruhat_length(_perm(req.perm)))


def weyl_bruhat_leq(req: S.BruhatRequest) -> S.BoolResponse:
    return S.BoolResponse(value=weyl.bruhat_leq(_perm(req.x), _perm(req.y)))


def weyl_dot(req: S.DotRequest) -> S.WeightModel:
    w = _perm(req.perm)
    lam = weyl.Weight.of(_tuple2(req.weight))
    rho = weyl.Weight.of(_tuple2(req.rho)) if req.rho else weyl.rho(w.group_type, w.n)
    return _weight_model(weyl.dot_action(w, lam, rho))


def weyl_classes(req: S.ClassesRequest) -> S.ClassesResponse:
    decomp = weyl.integral_class_decomposition(req.coords, req.type)
    return S.ClassesResponse(classes=[
        {"label": c.label, "indices": list(c.indices), "factor_type": c.factor_type}
        for c in decomp.classes])


# ---- symbols ---------------------------------------------------------------

def symbol_of_element(req: S.ElementRequest) -> S.SymbolOfElementResponse:
    s = symbols.symbol_of_w(_perm(req.perm))
    return S.SymbolOfElementResponse(
        symbol=_symbol_model(s),
        special=symbols.is_special(s),
        nu=list(symbols.nu_partition(s).rows))


def symbol_normalize(req: S.SymbolRequest) -> S.SymbolModel:
    return _symbol_model(symbols.normalize_symbol(_symbol(req.symbol)))


def symbol_special(req: S.SymbolRequest) -> S.BoolResponse:
    return S.BoolResponse(value=symbols.is_special(_symbol(req.symbol)))


def symbol_nu(req: S.SymbolRequest) -> S.TupleResponse:
    part = symbols.nu_partition(_symbol(req.symbol))
    return S.TupleResponse(tuple=[str(r) for r in part.rows])


def symbol_of_factored(req: S.FactoredSymbolRequest) -> S.FactoredSymbolResponse:
    w = _perm(req.perm)
    decomp = weyl.integral_class_decomposition(req.coords, w.group_type)
    first, second = symbols.symbol_of_factored(w, decomp)
    return S.FactoredSymbolResponse(first=_symbol_model(first), second=_symbol_model(second))


# ---- hecke / kl ------------------------------------------------------------

def _system(spec: S.SystemSpec) -> hecke.CoxeterSystem:
    if spec.type == "matrix":
        if not spec.matrix:
            raise DomainError("matrix system needs an explicit matrix")
        return hecke.CoxeterSystem.from_matrix(tuple(tuple(r) for r in spec.matrix))
    if spec.type == "A":
        return hecke.type_a_system(spec.rank)
    return hecke.weyl_system(spec.type, spec.rank)


def _element_index(system: hecke.CoxeterSystem, ref: S.ElementRef) -> int:
    if ref.word is not None:
        i = 0
        for g in ref.word:
            if not 0 <= g < system.rank:
                raise DomainError(f"generator index {g} out of range")
            i = system.rmul[i][g]
        return i
    if ref.oneLine is not None:
        for i in range(len(system)):
            if system.element_repr(i) == list(ref.oneLine):
                return i
        raise DomainError("element not found in the system")
    raise DomainError("element reference needs oneLine or word")


def _poly_pairs(p: hecke.LaurentHalf) -> list[list[int]]:
    return [[e // 2, c] for e, c in p.pairs()]


def kl_table(req: S.KlTableRequest) -> S.KlTableResponse:
    system = _system(req.system)
    table = system.kl_table()
    entries = []
    for (x, y), p in sorted(table.items()):
        entries.append(S.KlEntry(x=system.element_repr(x),
                                 y=system.element_repr(y),
                                 P=_poly_pairs(p)))
    return S.KlTableResponse(entries=entries)


def kl_polynomial(req: S.KlPolynomialRequest) -> S.PolynomialResponse:
    system = _system(req.system)
    x = _element_index(system, req.x)
    y = _element_index(system, req.y)
    return S.PolynomialResponse(P=_poly_pairs(system.kl_polynomial(x, y)))


def _hecke_in(system, model: S.HeckeElementModel) -> dict:
    out = {}
    for term in model.terms:
        i = _element_index(system, term.element)
        coeff = hecke.LaurentHalf({e: c for e, c in term.coeffs})
        out[i] = out.get(i, hecke.LaurentHalf.zero()) + coeff
    return {i: c for i, c in out.items() if c}


def _hecke_out(system, elt: dict) -> S.HeckeElementModel:
    terms = []
    for i in sorted(elt):
        terms.append(S.HeckeTerm(
            element=S.ElementRef(word=list(system.word[i])),
            coeffs=[[e, c] for e, c in elt[i].pairs()]))
    return S.HeckeElementModel(terms=terms)


def hecke_multiply(req: S.HeckeBinaryRequest) -> S.HeckeResponse:
    system = _system(req.system)
    result = system.hecke_mul(_hecke_in(system, req.a), _hecke_in(system, req.b))
    return S.HeckeResponse(result=_hecke_out(system, result))


def hecke_bar(req: S.HeckeUnaryRequest) -> S.HeckeResponse:
    system = _system(req.system)
    result = system.bar_involution(_hecke_in(system, req.a))
    return S.HeckeResponse(result=_hecke_out(system, result))


# ---- branching --------------------------------------------------------------

def branch_step(req: S.TupleRequest) -> S.TupleSetResponse:
    out = branching.branch_step(_tuple2(req.tuple), req.alg)
    return S.TupleSetResponse(tuples=_tuples_out(out))


def branch_chain(req: S.ChainRequest) -> S.BoolResponse:
    return S.BoolResponse(value=branching.restricts_to(
        _tuple2(req.from_), _tuple2(req.to), req.alg))


def branch_criterion(req: S.CriterionRequest) -> S.CriterionResponse:
    lam, mu = _tuple2(req.lam), _tuple2(req.mu)
    return S.CriterionResponse(
        criterion=branching.coordinatewise_criterion(lam, mu, req.alg),
        chain=branching.restricts_to(mu, lam, req.alg))


def branch_insert(req: S.InsertRequest) -> S.TupleResponse:
    op = branching.insert_left if req.side == "left" else branching.insert_right
    out = op(_tuple2(req.tuple), parse_half(req.k), req.alg)
    return S.TupleResponse(tuple=[fmt_half(v) for v in out])


def branch_bounded(req: S.BoundedRequest) -> S.BoundedResponse:
    c2 = _tuple2(req.tuple)
    return S.BoundedResponse(
        bounded=branching.is_bounded_hw_sp(c2),
        finite_dimensional=branching.is_finite_dimensional_sp(c2))


def branch_bounded_step(req: S.BoundedRequest) -> S.TupleSetResponse:
    out = branching.bounded_branch_sp(_tuple2(req.tuple))
    return S.TupleSetResponse(tuples=_tuples_out(out))


def branch_tensor(req: S.TensorRequest) -> S.TensorResponse:
    c2 = _tuple2(req.tuple)
    shifts = branching.tensor_T_set(c2, req.j)
    consts = branching.tensor_decompose_sw(c2, req.j)
    return S.TensorResponse(shifts=_tuples_out(shifts), constituents=_tuples_out(consts))


# ---- cls ---------------------------------------------------------------------

def cls_from_triple(req: S.FromTripleRequest) -> S.NormalFormResponse:
    return S.NormalFormResponse(nf=_nf_model(cls.nf_from_triple(_triple(req.triple), req.alg)))


def cls_product(req: S.ProductRequest) -> S.NormalFormResponse:
    return S.NormalFormResponse(nf=_nf_model(cls.nf_product(_nf(req.a), _nf(req.b))))


def cls_level(req: S.LevelRequest) -> S.TupleSetResponse:
    if req.nf is not None:
        nf = _nf(req.nf)
    elif req.triple is not None and req.alg:
        nf = cls.nf_from_triple(_triple(req.triple), req.alg)
    else:
        raise DomainError("level query needs a normal form or a triple with alg")
    out = cls.level_set(nf, req.n, req.bound)
    return S.TupleSetResponse(tuples=_tuples_out(out))


def cls_pls(req: S.PlsRequest) -> S.TupleSetResponse:
    predicate = cls.pls_to_cls(_tuple2(req.tuple), req.alg)
    return S.TupleSetResponse(tuples=_tuples_out(predicate.enumerate(req.width, req.bound)))


def cls_shift(req: S.NormalFormResponse) -> S.NormalFormResponse:
    return S.NormalFormResponse(nf=_nf_model(cls.clsb_shift(_nf(req.nf))))


# ---- primitive ------------------------------------------------------------------

def prim_classify(req: S.ClassifyRequest) -> S.ClassifyResponse:
    triple = cls.Triple(req.x, parse_half(req.y), tuple(req.Z))
    hw = primitive.highest_weight_V(triple, req.n, req.alg)
    nf = cls.nf_from_triple(triple, req.alg)
    g = primitive.central_character(hw.coords2)
    return S.ClassifyResponse(weight=_weight_model(hw), nf=_nf_model(nf),
                              g=[str(v) for v in g])


def prim_separate(req: S.SeparateRequest) -> S.SeparateResponse:
    cert = primitive.separate_triples(
        _triple(req.t1), _triple(req.t2), req.nmax, req.bound, req.alg)
    if cert is None:
        return S.SeparateResponse(
            separated=False, certificate=None,
            status=f"indistinguishable up to (n={req.nmax}, B={req.bound})")
    return S.SeparateResponse(separated=True, status="separated", certificate={
        "n": cert["n"],
        "weight": [fmt_half(v) for v in cert["weight"]],
        "only_in": cert["only_in"]})


def prim_equiv(req: S.EquivRequest) -> S.BoolResponse:
    return S.BoolResponse(value=primitive.weyl_equiv(_perm(req.w1), _perm(req.w2)))


def prim_tau(req: S.TauRequest) -> S.BoolResponse:
    return S.BoolResponse(value=primitive.tau_move_applies(_perm(req.perm), req.i))


def prim_window(req: S.WindowRequest) -> S.WindowResponse:
    res = primitive.extract_dominant_window(req.h, req.r)
    return S.WindowResponse(k=res.k, window=list(res.window), r=res.r, f=res.f)


def prim_dimension(req: S.DimensionRequest) -> S.IntResponse:
    return S.IntResponse(value=primitive.weyl_dimension(_tuple2(req.tuple), req.alg))


def prim_degree(req: S.BoundedRequest) -> S.IntResponse:
    return S.IntResponse(value=primitive.degree_of_bounded(_tuple2(req.tuple)))
