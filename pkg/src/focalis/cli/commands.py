"""One function per CLI command: Job -> JSON-ready payload."""

from .._util import simp
from ..algebra.gaussian import GaussianRational
from ..algebra.parse import collect_names, parse_expression, parse_tuple
from ..errors import ParseError, PreconditionError
from ..euclid import QuadraticSpace
from ..variety import ImplicitHypersurface, ParametricVariety


def s(x):
    return str(simp(x)) if x is not None else None


def strs(xs):
    return [s(x) for x in xs] if xs is not None else None


def _gram(job, m):
    if job.gram is None:
        return None
    Q = QuadraticSpace([[GaussianRational.parse(x) for x in row] for row in job.gram])
    if Q.dimension != m:
        raise PreconditionError(f"gram is {Q.dimension}x{Q.dimension} but the ambient dimension is {m}")
    return Q


def _names(value):
    if value is None:
        return None
    if isinstance(value, str):
        return tuple(v.strip() for v in value.split(",") if v.strip())
    return tuple(str(v) for v in value)


def _params(job, key, text, count):
    """Declared parameter names, or the free names of ``text`` when there are exactly ``count``."""
    given = _names(job.inputs.get(key))
    if given:
        return given
    names = tuple(n for n in collect_names(text) if n != "i")
    if len(names) != count:
        raise ParseError(
            f"cannot infer {count} parameter name(s) from {sorted(names)}; pass {key!r}", "MISSING_INPUT"
        )
    return names


def parametrization(X):
    if X is None:
        return None
    return {"params": list(X.params), "coords": strs(X.coords), "flavor": X.flavor}


def component(c):
    return {
        "kind": c.kind,
        "vertical": c.vertical,
        "strict": not c.vertical,
        "factor": s(c.factor),
        "multiplicity": c.multiplicity,
        "parametrization": parametrization(c.parametrization),
        "equations": strs(c.equations),
        "isotropic": c.isotropic,
        "notes": list(c.notes),
    }


def focal_payload(out):
    return {
        "ramification": str(out.ramification),
        "ramification_raw": s(out.ramification.raw),
        "coords": list(out.coords),
        "degenerate": out.degenerate,
        "components": [component(c) for c in out.components],
        "strict_count": len(out.strict),
        "large_count": len(out.large),
        "notes": list(out.notes),
    }


def _curve(job, key, pkey, count):
    text = job.inputs[key]
    params = _params(job, pkey, text, count)
    return ParametricVariety.parse(text, params)


def evolute_cmd(job):
    from ..focal import evolute

    X = _curve(job, "curve", "param", 1)
    return focal_payload(evolute(X, _gram(job, X.ambient_dim)))


def rotfocal_cmd(job):
    from ..focal import rotation_surface_focal

    X = _curve(job, "profile", "param", 1)
    return focal_payload(rotation_surface_focal(X, _gram(job, 3)))


def implicitize_cmd(job):
    from ..focal import implicitize_image

    text = job.inputs["curve"]
    params = _names(job.inputs.get("params")) or tuple(n for n in collect_names(text) if n != "i")
    X = ParametricVariety.parse(text, params)
    res = implicitize_image(X)
    return {
        "equations": strs(res.equations),
        "codimension": res.codimension,
        "polynomial": s(res.polynomial),
        "notes": list(res.notes),
    }


def imgdeg_cmd(job):
    from ..focal import image_degree

    if job.inputs.get("polynomial"):
        target = parse_expression(job.inputs["polynomial"])
    elif job.inputs.get("curve"):
        text = job.inputs["curve"]
        params = _names(job.inputs.get("params")) or tuple(n for n in collect_names(text) if n != "i")
        target = ParametricVariety.parse(text, params)
    else:
        raise ParseError("imgdeg needs 'curve' or 'polynomial'", "MISSING_INPUT")
    res = image_degree(target, seed=job.seed)
    return {"degree": res.raw_intersections, "attempts": res.attempts, "note": res.map_degree_note}


def _int(job, key):
    v = job.inputs.get(key)
    if v is None:
        raise ParseError(f"degree job needs {key!r}", "MISSING_INPUT")
    try:
        return int(v)
    except (TypeError, ValueError):
        raise ParseError(f"{key!r} must be an integer", "PARSE_ERROR") from None


def degree_cmd(job):
    from .. import chow

    kind = job.inputs["kind"]
    if kind == "surface-ci":
        m = _int(job, "m")
        degrees = job.inputs.get("degrees")
        if degrees is None:
            raise ParseError("surface-ci needs 'degrees'", "MISSING_INPUT")
        degrees = [int(d) for d in (degrees if isinstance(degrees, list) else [degrees])]
        data = chow.ci_tangent_data(m, degrees)
        n = 2
    elif kind == "surface":
        m = _int(job, "m")
        data = chow.SurfaceClassData.from_numbers(m, _int(job, "d"), _int(job, "hk"), _int(job, "c1sq"),
                                                  _int(job, "c2"))
        n = 2
    elif kind == "curve":
        m = _int(job, "m")
        data = chow.CurveClassData(m, _int(job, "d"), _int(job, "g"))
        n = 1
    elif kind == "plane-curve":
        data = chow.CurveClassData.smooth_plane(_int(job, "d"))
        m, n = 2, 1
    else:
        raise PreconditionError(f"unknown degree kind {kind!r}; expected surface-ci, surface, curve or plane-curve")
    out = {"kind": kind, "m": m, "degree": chow.leray_hirsch_degree(n, m, data),
           "endpoint_degree": chow.endpoint_degree(n, m, data)}
    if n == 1:
        out["closed_form"] = chow.curve_focal_degree_closed(data)
    else:
        out["closed_forms"] = list(chow.surface_focal_degree_closed(data))
        out["data"] = {"d": data.d, "hk": data.HK, "c1sq": data.c1sq, "c2": data.c2, "chi": data.chi,
                       "sectional_genus": data.sect_genus}
    return out


def _sigma(job, mode):
    from ..inverse import SigmaData

    O = job.inputs["o"]
    params = _names(job.inputs.get("params")) or ("s",)
    r = job.inputs["r"]
    r = [str(x) for x in r] if isinstance(r, list) else str(r)
    return SigmaData.parse(O, r, params, mode)


def _construction(res):
    return {
        "mode": res.mode,
        "coords": list(res.coords),
        "system": strs(res.system),
        "eliminant": s(res.eliminant),
        "equations": strs(res.equations),
        "codimension": res.codimension,
        "fibers_are_affine_spaces": res.fibers_are_affine_spaces,
        "admissible": res.admissible,
        "reason": res.reason,
        "parametrization": parametrization(res.parametrization),
        "notes": list(res.notes),
    }


def inverse_cmd(job):
    from .. import inverse

    mode = job.inputs.get("mode", "standard")
    S = _sigma(job, mode)
    m = len(S.vector())
    Q = _gram(job, m)
    if mode == "standard":
        res = inverse.inverse_construction(S, Q, eliminate=bool(job.inputs.get("eliminate", True)))
        out = _construction(res)
        if res.admissible and res.equations and res.samples:
            rep = inverse.forward_consistency(res, S, Q)
            out["forward_consistency"] = {"ok": rep.ok, "checked": rep.checked, "notes": rep.notes}
        return out
    if mode == "asymptotic":
        res = inverse.asymptotic_inverse(S, Q)
        out = _construction(res)
        dual = inverse.dual_at_infinity_check(res, S, Q)
        out["dual_at_infinity"] = {"ok": dual.ok, "equal": dual.equal, "at_infinity": strs(dual.at_infinity),
                                   "dual": strs(dual.dual), "notes": dual.notes}
        out["developable"] = bool(inverse.developability_identity(res, S, Q))
        return out
    res = inverse.isotropic_projective_inverse(S, Q)
    return _construction(res)


def isocurve_cmd(job):
    from ..isotropy_lab import homogeneous_lift, isotropic_curve, isotropy_equation_check, primitivity_check

    c = isotropic_curve(job.inputs["f0"], job.inputs["f1"], job.inputs.get("param", "t"))
    return {
        "parametrization": parametrization(c.alpha),
        "derivative": strs(c.derivative),
        "isotropy_equation": isotropy_equation_check(homogeneous_lift(c)),
        "not_polynomial_in_t2": primitivity_check(c, 2),
    }


def devel_cmd(job):
    from ..isotropy_lab import isotropic_curve, tangential_developable, theorem4_check

    c = isotropic_curve(job.inputs["f0"], job.inputs["f1"], job.inputs.get("param", "t"))
    td = tangential_developable(c, job.inputs.get("ruling", "u"))
    out = {"parametrization": parametrization(td.surface), "degenerate": td.degenerate, "notes": td.notes}
    if not td.degenerate:
        rep = theorem4_check(td.surface)
        out["theorem4"] = {"ok": rep.ok, "conditions": rep.conditions}
    return out


def check_t4_cmd(job):
    from ..isotropy_lab import cone_over_quadric, theorem4_check

    inp = job.inputs
    if inp.get("vertex"):
        vertex = parse_tuple(str(inp["vertex"]))
        X = cone_over_quadric([simp(v) for v in vertex])
        Q = _gram(job, X.ambient_dim)
        if Q is not None:
            X = cone_over_quadric([simp(v) for v in vertex], Q)
    elif inp.get("polynomial"):
        coords = _names(inp.get("coords"))
        F = parse_expression(inp["polynomial"], coords)
        X = ImplicitHypersurface(F, coords)
        Q = _gram(job, X.ambient_dim)
    elif inp.get("surface"):
        text = inp["surface"]
        params = _params(job, "params", text, 2)
        X = ParametricVariety.parse(text, params)
        Q = _gram(job, X.ambient_dim)
    else:
        raise ParseError("check-t4 needs 'surface', 'polynomial' or 'vertex'", "MISSING_INPUT")
    rep = theorem4_check(X, Q, inp.get("ruling")) if not isinstance(X, ImplicitHypersurface) else theorem4_check(X, Q)
    out = {"ok": rep.ok, "conditions": rep.conditions, "failed": rep.failed, "notes": rep.notes}
    if isinstance(X, ImplicitHypersurface):
        out["polynomial"] = s(X.F)
    return out


def check_t5_cmd(job):
    from ..inverse import inverse_construction
    from ..isotropy_lab import theorem5_check

    S = _sigma(job, "standard")
    Q = _gram(job, len(S.vector()))
    rep = theorem5_check(S, Q)
    out = {"ok": rep.ok, "conditions": rep.conditions, "failed": rep.failed, "notes": rep.notes,
           "xi": strs(rep.xi)}
    res = inverse_construction(S, Q, eliminate=False, samples=0)
    out["fibers_are_affine_spaces"] = res.fibers_are_affine_spaces
    out["admissible"] = res.admissible
    return out


def product_cmd(job):
    from ..isotropy_lab import product_construction, product_endpoint_samples, product_focal_samples

    inp = job.inputs
    M = ImplicitHypersurface(parse_expression(inp["m"]))
    W = ImplicitHypersurface(parse_expression(inp["w"]))
    P = product_construction(M, W)
    count = int(inp.get("samples", 20))
    pts = product_endpoint_samples(P, count)
    out = {
        "coords": list(P.coords),
        "equations": strs(P.equations),
        "endpoint_samples": len(pts),
        "endpoint_factors": all(a == b for _, _, a, b in pts),
    }
    if inp.get("mcurve") and inp.get("wcurve"):
        cm = ParametricVariety.parse(inp["mcurve"], _params(job, None, inp["mcurve"], 1))
        cw = ParametricVariety.parse(inp["wcurve"], _params(job, None, inp["wcurve"], 1))
        fs = product_focal_samples(cm, cw, count)
        out["focal_samples"] = len(fs)
        out["focal_matches_factors"] = all(f.product_point == f.factor_points for f in fs)
        out["coranks"] = sorted({f.corank for f in fs})
        out["focal_points"] = sorted({tuple(str(x) for x in f.product_point) for f in fs})
    return out


def sphere_fiber_cmd(job):
    from ..focal import fiber_sphere_check

    inp = job.inputs
    coords = _names(inp.get("coords"))
    F = parse_expression(inp["polynomial"], coords)
    X = ImplicitHypersurface(F, coords)
    O = [simp(v) for v in parse_tuple(str(inp["o"]))]
    text = inp["witness"]
    params = _names(inp.get("params")) or tuple(n for n in collect_names(text) if n != "i")
    witness = ParametricVariety.parse(text, params)
    ok = fiber_sphere_check(X, O, witness, _gram(job, X.ambient_dim), bool(inp.get("at_infinity", False)))
    return {"ok": ok}


DISPATCH = {
    "evolute": evolute_cmd,
    "rotfocal": rotfocal_cmd,
    "implicitize": implicitize_cmd,
    "imgdeg": imgdeg_cmd,
    "degree": degree_cmd,
    "inverse": inverse_cmd,
    "isocurve": isocurve_cmd,
    "devel": devel_cmd,
    "check-t4": check_t4_cmd,
    "check-t5": check_t5_cmd,
    "product": product_cmd,
    "sphere-fiber": sphere_fiber_cmd,
}
