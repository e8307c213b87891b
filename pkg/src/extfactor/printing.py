"""Pretty-printing of polynomials and factorization results.

Everything printed here reparses to the same object: the CLI's verify
mode and the round-trip tests rely on it.
"""

import json

from .driver import FactorizationResult


def _is_negative(field, c):
    return field.characteristic == 0 and c < 0


def _abs(field, c):
    return -c if _is_negative(field, c) else c


def _monomial_str(varnames, expo):
    parts = []
    for name, e in zip(varnames, expo):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def _term_str(field, varnames, expo, coeff):
    mono = _monomial_str(varnames, expo)
    c = _abs(field, coeff)
    if not mono:
        return str(c)
    if c == field.one:
        return mono
    return f"{c}*{mono}"


def poly_to_str(p):
    """Canonical text form of a multivariate polynomial."""
    if p.is_zero:
        return "0"
    field = p.ring.field
    names = p.ring.varnames
    out = []
    for expo, coeff in p.sorted_terms():
        term = _term_str(field, names, expo, coeff)
        if not out:
            out.append("-" + term if _is_negative(field, coeff) else term)
        else:
            out.append(("- " if _is_negative(field, coeff) else "+ ") + term)
    return " ".join(out)


def unipoly_to_str(f, var="t"):
    """Canonical text form of a univariate polynomial."""
    if f.is_zero:
        return "0"
    field = f.field
    out = []
    for i in range(f.degree, -1, -1):
        c = f[i]
        if c == field.zero:
            continue
        mono = var if i == 1 else (f"{var}^{i}" if i > 1 else "")
        a = _abs(field, c)
        if not mono:
            body = str(a)
        elif a == field.one:
            body = mono
        else:
            body = f"{a}*{mono}"
        if not out:
            out.append("-" + body if _is_negative(field, c) else body)
        else:
            out.append(("- " if _is_negative(field, c) else "+ ") + body)
    return " ".join(out)


def extpoly_to_str(f):
    """Canonical text form of an element of K[y].

    Single-term coefficients ride along inline; anything longer is
    parenthesized, except in degree zero where the terms are spliced
    into the sum directly.
    """
    ext = f.ext
    if f.is_zero:
        return "0"
    yname = ext.yname
    field = ext.field
    names = ext.ring.varnames
    out = []

    def append(text, negative):
        if not out:
            out.append("-" + text if negative else text)
        else:
            out.append(("- " if negative else "+ ") + text)

    for i in range(f.degree, -1, -1):
        c = f.coeff(i)
        if c.is_zero:
            continue
        ymono = yname if i == 1 else (f"{yname}^{i}" if i > 1 else "")
        terms = c.rep.sorted_terms()
        if not ymono:
            for expo, coeff in terms:
                append(_term_str(field, names, expo, coeff),
                       _is_negative(field, coeff))
        elif len(terms) == 1:
            expo, coeff = terms[0]
            mono = _monomial_str(names, expo)
            a = _abs(field, coeff)
            body = ymono if not mono else f"{mono}*{ymono}"
            if a != field.one:
                body = f"{a}*{body}"
            append(body, _is_negative(field, coeff))
        else:
            append(f"({poly_to_str(c.rep)})*{ymono}", False)
    return " ".join(out)


def extelement_to_str(a):
    return poly_to_str(a.rep)


def product_str(result):
    """The factorization as one product expression."""
    pieces = []
    const = result.constant
    if not (hasattr(const, "is_one") and const.is_one()):
        pieces.append(f"({extelement_to_str(const)})")
    for fac in result.factors:
        body = f"({extpoly_to_str(fac.poly)})"
        if fac.multiplicity > 1:
            body += f"^{fac.multiplicity}"
        pieces.append(body)
    if not pieces:
        return extelement_to_str(const)
    return " * ".join(pieces)


def result_to_json(result):
    """Schema-shaped document for a factorization result."""
    doc = {
        "constant": extelement_to_str(result.constant),
        "factors": [
            {
                "poly": extpoly_to_str(fac.poly),
                "multiplicity": fac.multiplicity,
                "certified": fac.certified,
                "certificate": fac.certificate,
            }
            for fac in result.factors
        ],
        "stats": {
            "dimension": result.dimension,
            "r_used": [poly_to_str(r) for r in result.r_used],
            "recursion_depth": result.recursion_depth,
        },
    }
    return json.dumps(doc, indent=2) + "\n"


def emit_result(result, mode="human"):
    """Render a factorization result for the CLI."""
    if mode == "json":
        return result_to_json(result)
    lines = [f"constant: {extelement_to_str(result.constant)}"]
    if result.factors:
        lines.append("factors:")
        for fac in result.factors:
            lines.append(f"  {extpoly_to_str(fac.poly)}"
                         f"   multiplicity {fac.multiplicity}"
                         f"   certificate {fac.certificate}")
        lines.append(f"product: {product_str(result)}")
    return "\n".join(lines) + "\n"
