"""Truncated functionals on U(d) and annihilation brackets at a cutoff.

A TruncatedSeries holds the coefficients of a functional on the dual
basis t_I of the divided-power monomials, exactly for all |I| <= cutoff
and unknown beyond.  Operations track the guaranteed cutoff of their
result and refuse to produce silently lossy answers: acting by an element
of filtration degree k costs k units of depth.

The dual pairing is computed by multiplying inside U(d) and reading
coefficients, so it is correct for noncommutative algebras as well.
"""

from fractions import Fraction

from .pbw import HElt, mi_add, mi_weight, mi_zero, multiindices_up_to
Fr = Fraction


class PrecisionError(ValueError):
    """Requested depth exceeds what the inputs can guarantee."""


class TruncatedSeries:
    """Functional known modulo everything of weight > cutoff."""

    __slots__ = ("alg", "cutoff", "c")

    def __init__(self, alg, cutoff, coeffs=None):
        if cutoff < 0:
            raise PrecisionError("cutoff must be nonnegative")
        self.alg = alg
        self.cutoff = cutoff
        self.c = {}
        for I, v in (coeffs or {}).items():
            I = tuple(I)
            v = Fr(v)
            if mi_weight(I) > cutoff:
                raise ValueError("index beyond cutoff")
            if v:
                self.c[I] = v

    @classmethod
    def dual_basis(cls, alg, I, cutoff):
        return cls(alg, cutoff, {tuple(I): 1})

    @classmethod
    def zero(cls, alg, cutoff):
        return cls(alg, cutoff)

    def truncate(self, cutoff):
        if cutoff > self.cutoff:
            raise PrecisionError("cannot deepen a series (have %d, want %d)"
                                 % (self.cutoff, cutoff))
        return TruncatedSeries(self.alg, cutoff,
                               {I: v for I, v in self.c.items() if mi_weight(I) <= cutoff})

    def __add__(self, other):
        cut = min(self.cutoff, other.cutoff)
        out = {}
        for I, v in list(self.c.items()) + list(other.c.items()):
            if mi_weight(I) <= cut:
                s = out.get(I, Fr(0)) + v
                if s:
                    out[I] = s
                else:
                    out.pop(I, None)
        return TruncatedSeries(self.alg, cut, out)

    def __neg__(self):
        return TruncatedSeries(self.alg, self.cutoff, {I: -v for I, v in self.c.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k):
        k = Fr(k)
        return TruncatedSeries(self.alg, self.cutoff,
                               {I: k * v for I, v in self.c.items()} if k else {})

    def __mul__(self, other):
        """Product of functionals: t_J t_K = t_{J+K}; depth is the minimum."""
        if not isinstance(other, TruncatedSeries):
            return self.scale(other)
        cut = min(self.cutoff, other.cutoff)
        out = {}
        for I, a in self.c.items():
            for J, b in other.c.items():
                K = mi_add(I, J)
                if mi_weight(K) <= cut:
                    s = out.get(K, Fr(0)) + a * b
                    if s:
                        out[K] = s
                    else:
                        out.pop(K, None)
        return TruncatedSeries(self.alg, cut, out)

    __rmul__ = scale

    def pair(self, h):
        """<x, h> for h in U(d); needs cutoff >= degree of h."""
        deg = h.degree()
        if deg is not None and deg > self.cutoff:
            raise PrecisionError("pairing needs depth %d, have %d" % (deg, self.cutoff))
        return sum((v * self.c.get(I, Fr(0)) for I, v in h.c.items()), Fr(0))

    def act(self, h, side="left"):
        """Left action <h x, f> = <x, S(h) f>; right <x h, f> = <x, f S(h)>.

        The output is exact to depth cutoff - deg(h).
        """
        deg = h.degree()
        if deg is None:
            return TruncatedSeries.zero(self.alg, self.cutoff)
        newcut = self.cutoff - deg
        if newcut < 0:
            raise PrecisionError("action by degree %d exceeds depth %d" % (deg, self.cutoff))
        sh = h.antipode()
        out = {}
        for I in multiindices_up_to(self.alg.dim, newcut):
            mono = HElt.monomial(self.alg, I, 1)
            prod = sh * mono if side == "left" else mono * sh
            v = self.pair(prod)
            if v:
                out[I] = v
        return TruncatedSeries(self.alg, newcut, out)

    def __eq__(self, other):
        return (isinstance(other, TruncatedSeries) and self.alg is other.alg
                and self.cutoff == other.cutoff and self.c == other.c)

    __hash__ = None

    def __repr__(self):
        if not self.c:
            return "O(%d)" % (self.cutoff + 1)
        bits = []
        for I in sorted(self.c, key=lambda I: (mi_weight(I), I)):
            v = self.c[I]
            mono = "t^(%s)" % ",".join(str(x) for x in I)
            bits.append(("- " if v < 0 else "+ ") + (mono if abs(v) == 1 else "%s*%s" % (abs(v), mono)))
        s = " ".join(bits)
        s = s[2:] if s.startswith("+ ") else "-" + s[2:]
        return s + " + O(%d)" % (self.cutoff + 1)


def h_act_series(h, x, side="left"):
    return x.act(h, side)


class AnnihilationElement:
    """Element of (functionals) (x)_H L for a free module L, at a cutoff."""

    __slots__ = ("module", "cutoff", "c")

    def __init__(self, module, cutoff, coeffs=None):
        self.module = module
        self.cutoff = cutoff
        self.c = {}
        for (I, g), v in (coeffs or {}).items():
            I = tuple(I)
            if mi_weight(I) > cutoff:
                raise ValueError("index beyond cutoff")
            v = Fr(v)
            if v:
                self.c[(I, g)] = v

    @classmethod
    def generator(cls, module, I, g, cutoff):
        return cls(module, cutoff, {(tuple(I), g): 1})

    def series_parts(self):
        by_gen = {}
        for (I, g), v in self.c.items():
            by_gen.setdefault(g, {})[I] = v
        return {g: TruncatedSeries(self.module.alg, self.cutoff, d)
                for g, d in by_gen.items()}

    def __add__(self, other):
        cut = min(self.cutoff, other.cutoff)
        out = AnnihilationElement(self.module, cut)
        for (I, g), v in list(self.c.items()) + list(other.c.items()):
            if mi_weight(I) <= cut:
                key = (I, g)
                s = out.c.get(key, Fr(0)) + v
                if s:
                    out.c[key] = s
                else:
                    out.c.pop(key, None)
        return out

    def __neg__(self):
        out = AnnihilationElement(self.module, self.cutoff)
        out.c = {k: -v for k, v in self.c.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k):
        k = Fr(k)
        out = AnnihilationElement(self.module, self.cutoff)
        if k:
            out.c = {key: k * v for key, v in self.c.items()}
        return out

    def truncate(self, cutoff):
        if cutoff > self.cutoff:
            raise PrecisionError("cannot deepen")
        out = AnnihilationElement(self.module, cutoff)
        out.c = {(I, g): v for (I, g), v in self.c.items() if mi_weight(I) <= cutoff}
        return out

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        return (isinstance(other, AnnihilationElement)
                and self.module.same_as(other.module)
                and self.cutoff == other.cutoff and self.c == other.c)

    __hash__ = None

    def __repr__(self):
        parts = self.series_parts()
        if not parts:
            return "0 + O(%d)" % (self.cutoff + 1)
        return " + ".join("(%r) @ %s" % (s, self.module.gen_name(g))
                          for g, s in sorted(parts.items(), key=lambda kv: str(kv[0])))


def table_depth_cost(P):
    """Worst filtration degree moved onto functionals by one bracket."""
    cost = 0
    for gi in P.verify_gens:
        for gj in P.verify_gens:
            for (key, g, L), _ in P.gen_bracket(gi, gj).c.items():
                cost = max(cost, mi_weight(key[0]) + mi_weight(L))
    return cost


def annihilation_bracket(P, u, v):
    """Bracket on functionals (x)_H L induced by the structure table:

        (x (x)_H a)(y (x)_H b) = sum (x f_i)(y g_i) (x)_H e_i.

    The output cutoff is min(depth u, depth v) minus the table's depth
    cost; a negative guarantee raises PrecisionError naming the need.
    """
    alg = P.alg
    cost = table_depth_cost(P)
    cut = min(u.cutoff, v.cutoff) - cost
    if cut < 0:
        raise PrecisionError(
            "bracket costs depth %d; inputs must have cutoff >= %d" % (cost, cost))
    out = AnnihilationElement(P.module, cut)
    uparts = u.series_parts()
    vparts = v.series_parts()
    for gu, xs in uparts.items():
        for gv, ys in vparts.items():
            q = P.gen_bracket(gu, gv)
            for (key, g, L), coeff in q.c.items():
                xf = xs.act(HElt.monomial(alg, key[0], 1), "right") if any(key[0]) else xs
                yg = ys.act(HElt.monomial(alg, key[1], 1), "right") if any(key[1]) else ys
                prod = xf * yg
                if any(L):
                    prod = prod.act(HElt.monomial(alg, L, 1), "right")
                prod = prod.truncate(min(prod.cutoff, cut)) if prod.cutoff > cut else prod
                for I, s in prod.c.items():
                    if mi_weight(I) <= cut:
                        k2 = (I, g)
                        sv = out.c.get(k2, Fr(0)) + coeff * s
                        if sv:
                            out.c[k2] = sv
                        else:
                            out.c.pop(k2, None)
    return out


def vector_field_bracket(alg, u, v):
    """Independent oracle on functional coefficients of basis directions:

        [x (x) a, y (x) b] = xy (x) [a,b] - x(y.a) (x) b + (x.b)y (x) a

    with the dot the right action.  Used to cross-check the annihilation
    bracket of the vector-field structure.
    """
    cut = min(u.cutoff, v.cutoff) - 1
    if cut < 0:
        raise PrecisionError("vector-field bracket needs cutoff >= 1")
    out = AnnihilationElement(u.module, cut)

    def bump(I, g, val):
        if mi_weight(I) <= cut and val:
            key = (I, g)
            s = out.c.get(key, Fr(0)) + val
            if s:
                out.c[key] = s
            else:
                out.c.pop(key, None)

    uparts = u.series_parts()
    vparts = v.series_parts()
    for a, xs in uparts.items():
        for b, ys in vparts.items():
            for k, ck in alg.bracket(a, b).items():
                for I, s in (xs * ys).c.items():
                    bump(I, k, ck * s)
            ya = ys.act(HElt.gen(alg, a), "right")
            for I, s in (xs.truncate(min(xs.cutoff, ya.cutoff)) * ya).c.items():
                bump(I, b, -s)
            xb = xs.act(HElt.gen(alg, b), "right")
            for I, s in (xb * ys.truncate(min(ys.cutoff, xb.cutoff))).c.items():
                bump(I, a, s)
    return out


def counit_functional(alg, cutoff):
    return TruncatedSeries(alg, cutoff, {mi_zero(alg.dim): 1})
