"""File formats: Lie algebra specs, pseudoalgebra specs, Poisson specs.

All files are UTF-8 JSON.  Rationals are strings "p/q" or plain integers.

Lie algebra:    {"name": ..., "dim": N, "basis": [names],
                 "brackets": [{"x": name, "y": name,
                               "value": {name: "p/q", ...}}]}

Pseudoalgebra:  {"algebra": <name or inline spec>, "kind": "lie"|"assoc",
                 "generators": [names],
                 "brackets": [{"left": g, "right": g, "value": <entry>}]}
where <entry> is a sum of "(h) @ gen" or "(h) @ (m) gen" terms: h is the
tensor-slot coefficient in element-literal syntax, m an optional module
coefficient.
"""

import json
from fractions import Fraction

from .liealg import LieAlgebra, algebra_by_name
from .literals import parse_fraction, parse_helt, render_helt
from .pbw import HElt, mi_zero
from .pseudo import PseudoStructure
from .tensor import FreeModule, QElt

Fr = Fraction


def lie_algebra_from_dict(data):
    basis = list(data["basis"])
    if len(basis) != int(data["dim"]):
        raise ValueError("dim does not match the basis list")
    index = {b: i for i, b in enumerate(basis)}
    brackets = {}
    for row in data.get("brackets", []):
        i, j = index[row["x"]], index[row["y"]]
        comps = {index[k]: parse_fraction(str(v)) for k, v in row["value"].items()}
        if i == j:
            if any(comps.values()):
                raise ValueError("[x, x] must vanish")
            continue
        if i > j:
            i, j = j, i
            comps = {k: -v for k, v in comps.items()}
        acc = brackets.setdefault((i, j), {})
        for k, v in comps.items():
            acc[k] = acc.get(k, Fr(0)) + v
    return LieAlgebra(data.get("name", "loaded"), basis, brackets)


def lie_algebra_to_dict(alg):
    return {
        "name": alg.name,
        "dim": alg.dim,
        "basis": list(alg.basis),
        "brackets": [{"x": alg.basis[i], "y": alg.basis[j],
                      "value": {alg.basis[k]: str(c) for k, c in comps.items()}}
                     for (i, j), comps in sorted(alg.table.items())],
    }


def load_lie_algebra(path):
    with open(path, "r", encoding="utf-8") as fh:
        return lie_algebra_from_dict(json.load(fh))


def resolve_algebra(ref):
    """Name from the built-in catalog, a path to a spec file, or a dict."""
    if isinstance(ref, dict):
        return lie_algebra_from_dict(ref)
    if isinstance(ref, str) and ref.endswith(".json"):
        return load_lie_algebra(ref)
    return algebra_by_name(ref)


def _scan_group(text, pos):
    """Balanced parenthesized group starting at pos; returns (inner, next_pos)."""
    if pos >= len(text) or text[pos] != "(":
        raise ValueError("expected '(' at %d in %r" % (pos, text))
    depth = 0
    for q in range(pos, len(text)):
        if text[q] == "(":
            depth += 1
        elif text[q] == ")":
            depth -= 1
            if depth == 0:
                return text[pos + 1:q], q + 1
    raise ValueError("unbalanced parentheses in %r" % text)


def parse_bracket_entry(module, text):
    """Sum of "(h) @ gen" / "(h) @ (m) gen" terms into a canonical entry.

    Coefficients may contain nested parentheses from the monomial syntax,
    so groups are scanned with balance rather than matched by pattern.
    """
    q = QElt(module, 2)
    zero = mi_zero(module.alg.dim)
    text = text.strip()
    if text in ("0", ""):
        return q
    pos = 0
    n = len(text)
    while pos < n:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        sign = Fr(1)
        if text[pos] in "+-":
            if text[pos] == "-":
                sign = Fr(-1)
            pos += 1
            while pos < n and text[pos].isspace():
                pos += 1
        h_text, pos = _scan_group(text, pos)
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n or text[pos] != "@":
            raise ValueError("expected '@' in bracket entry %r" % text)
        pos += 1
        while pos < n and text[pos].isspace():
            pos += 1
        if pos < n and text[pos] == "(":
            m_text, pos = _scan_group(text, pos)
        else:
            m_text = None
        while pos < n and text[pos].isspace():
            pos += 1
        start = pos
        while pos < n and not (text[pos] in "+-" and text[pos - 1].isspace()):
            pos += 1
        gen_name = text[start:pos].strip()
        if not gen_name:
            raise ValueError("missing generator name in %r" % text)
        h = parse_helt(module.alg, h_text)
        mcoef = parse_helt(module.alg, m_text) if m_text else HElt.one(module.alg)
        gen = module.gen_by_name(gen_name)
        for I, hv in h.c.items():
            for L, mv in mcoef.c.items():
                q._bump((I, zero), gen, L, sign * hv * mv)
    return q


def render_bracket_entry(q):
    q = q.canonicalize()
    if not q.c:
        return "0"
    by = {}
    for (key, g, L), v in q.c.items():
        by.setdefault((key[0], g), {})[L] = v
    bits = []
    for (I, g) in sorted(by, key=lambda t: (t[0], str(t[1]))):
        h = render_helt(HElt(q.module.alg, {I: 1}))
        mpart = HElt(q.module.alg, by[(I, g)])
        bits.append("(%s) @ (%s) %s" % (h, render_helt(mpart), q.module.gen_name(g)))
    return " + ".join(bits)


def pseudo_from_dict(data):
    alg = resolve_algebra(data["algebra"])
    gens = list(data["generators"])
    mod = FreeModule(alg, gens, label=data.get("name", "loaded"))
    table = {}
    for row in data.get("brackets", []):
        gi, gj = row["left"], row["right"]
        table[(gi, gj)] = parse_bracket_entry(mod, row["value"])
    return PseudoStructure(mod, data.get("kind", "lie"), table=table,
                           name=data.get("name", "loaded"))


def pseudo_to_dict(P):
    rows = []
    for gi in P.module.gens:
        for gj in P.module.gens:
            q = P.gen_bracket(gi, gj)
            if q.c:
                rows.append({"left": gi, "right": gj,
                             "value": render_bracket_entry(q)})
    return {
        "algebra": lie_algebra_to_dict(P.alg),
        "kind": P.kind,
        "name": P.name,
        "generators": list(P.module.gens),
        "brackets": rows,
    }


def load_pseudo(path):
    with open(path, "r", encoding="utf-8") as fh:
        return pseudo_from_dict(json.load(fh))


def load_poisson(path):
    from .poisson import PoissonBracketSpec
    with open(path, "r", encoding="utf-8") as fh:
        return PoissonBracketSpec.from_dict(json.load(fh))


def save_json(path, data):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(data, fh, indent=2, sort_keys=True)
        fh.write("\n")
