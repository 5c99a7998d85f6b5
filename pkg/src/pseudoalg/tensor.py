"""Canonical forms in H^{(x) n} (x)_H M for free modules M over H = U(d).

A QElt stores sums  c * (d^(I1) (x) ... (x) d^(In)) (x)_H (d^(L) e_g)
as a sparse map  (htuple, g, L) -> c.  Different raw storages can denote
the same class; `canonicalize` rewrites every term so the last tensor
slot is d^(0), after which the coefficient map is a complete invariant
and equality is dictionary equality.

The rewriting moves the last slot through the antipode onto the others
and its remaining coproduct leg onto the module side:

    f1 (x) ... (x) f_{n-1} (x) g (x)_H m
      = sum  f1 S(g_1) (x) ... (x) f_{n-1} S(g_{n-1}) (x) 1 (x)_H g_n m

with g_1, ..., g_n the n-part divided-power splits of g.

Module generators normally generate free summands; a generator may
instead be marked `counit`, meaning h e = counit(h) e (the one-dimensional
center used by central extensions).
"""

from fractions import Fraction
from itertools import product as iproduct

from .pbw import HElt, antipode_basis, mi_splits, mi_zero, mul_basis

Fr = Fraction


class FreeModule:
    """Finite list of named generators over a fixed algebra.

    Generator keys are arbitrary hashables; `names` gives the printable
    form.  Keys in `counit_gens` carry the counit action instead of the
    free one.
    """

    def __init__(self, alg, gens, names=None, counit_gens=(), label=""):
        self.alg = alg
        self.gens = list(gens)
        self._names = dict(names or {})
        self.counit_gens = frozenset(counit_gens)
        self.label = label

    @property
    def rank(self):
        return len(self.gens)

    def gen_name(self, g):
        if g in self._names:
            return self._names[g]
        return g if isinstance(g, str) else repr(g)

    def gen_by_name(self, name):
        for g in self.gens:
            if self.gen_name(g) == name:
                return g
        raise KeyError("no generator named %r" % name)

    def is_counit(self, g):
        return g in self.counit_gens

    def same_as(self, other):
        """Structural equality: same algebra object, generators and action kinds."""
        return (isinstance(other, FreeModule) and self.alg is other.alg
                and self.gens == other.gens and self.counit_gens == other.counit_gens)

    def element(self, g):
        return MElt(self, {(mi_zero(self.alg.dim), g): 1})

    def __repr__(self):
        return "FreeModule(%s; %s)" % (self.label or self.alg.name,
                                       ", ".join(self.gen_name(g) for g in self.gens))


class MElt:
    """Element of a free module: sparse map (multi-index, generator) -> rational."""

    __slots__ = ("module", "c")

    def __init__(self, module, coeffs=None):
        self.module = module
        self.c = {}
        for (I, g), v in (coeffs or {}).items():
            self._bump(tuple(I), g, Fr(v))

    def _bump(self, I, g, v):
        if not v:
            return
        if self.module.is_counit(g):
            # h e = counit(h) e: only the constant component survives
            if any(I):
                return
        key = (I, g)
        s = self.c.get(key, Fr(0)) + v
        if s:
            self.c[key] = s
        else:
            self.c.pop(key, None)

    @classmethod
    def zero(cls, module):
        return cls(module)

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        return (isinstance(other, MElt) and self.module.same_as(other.module)
                and self.c == other.c)

    __hash__ = None

    def __add__(self, other):
        out = MElt(self.module)
        out.c = dict(self.c)
        for (I, g), v in other.c.items():
            out._bump(I, g, v)
        return out

    def __neg__(self):
        out = MElt(self.module)
        out.c = {k: -v for k, v in self.c.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k):
        k = Fr(k)
        out = MElt(self.module)
        if k:
            out.c = {key: k * v for key, v in self.c.items()}
        return out

    def h_mul(self, h):
        """Left action of h in U(d)."""
        out = MElt(self.module)
        for (I, g), v in self.c.items():
            for J, cj in h.c.items():
                if self.module.is_counit(g):
                    if not any(J) and not any(I):
                        out._bump(I, g, v * cj)
                    continue
                for K, ck in mul_basis(self.module.alg, J, I).items():
                    out._bump(K, g, v * cj * ck)
        return out

    def h_coefficients(self):
        """Split into {generator: HElt} coefficient form."""
        by_gen = {}
        for (I, g), v in self.c.items():
            by_gen.setdefault(g, {})[I] = v
        return {g: HElt(self.module.alg, d) for g, d in by_gen.items()}

    def map_gens(self, target_module, fn):
        """H-linear pushforward along fn: generator -> MElt over the target."""
        out = MElt.zero(target_module)
        for (I, g), v in self.c.items():
            img = fn(g)
            h = HElt.monomial(self.module.alg, I, v)
            out = out + img.h_mul(h)
        return out

    def __repr__(self):
        from .literals import render_module_element
        return render_module_element(self)


class QElt:
    """Element of H^{(x) n} (x)_H M, stored term by term (see module docstring)."""

    __slots__ = ("module", "n", "c", "canonical")

    def __init__(self, module, n, coeffs=None, canonical=False):
        self.module = module
        self.n = n
        self.c = {}
        self.canonical = canonical
        for (key, g, L), v in (coeffs or {}).items():
            self._bump(tuple(tuple(I) for I in key), g, tuple(L), Fr(v))

    def _bump(self, key, g, L, v):
        if not v:
            return
        if self.module.is_counit(g) and any(L):
            return
        k = (key, g, L)
        s = self.c.get(k, Fr(0)) + v
        if s:
            self.c[k] = s
        else:
            self.c.pop(k, None)

    @classmethod
    def zero(cls, module, n):
        return cls(module, n, canonical=True)

    @classmethod
    def from_tensor_and_module(cls, t, m):
        """(tensor part) (x)_H (module element), expanded term by term."""
        out = cls(m.module, t.n)
        for key, tv in t.c.items():
            for (L, g), mv in m.c.items():
                out._bump(key, g, L, tv * mv)
        return out

    def __bool__(self):
        return bool(self.c)

    def __add__(self, other):
        out = QElt(self.module, self.n)
        out.c = dict(self.c)
        out.canonical = False
        for (key, g, L), v in other.c.items():
            out._bump(key, g, L, v)
        out.canonical = self.canonical and other.canonical
        return out

    def __neg__(self):
        out = QElt(self.module, self.n)
        out.c = {k: -v for k, v in self.c.items()}
        out.canonical = self.canonical
        return out

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k):
        k = Fr(k)
        out = QElt(self.module, self.n)
        if k:
            out.c = {key: k * v for key, v in self.c.items()}
        out.canonical = self.canonical
        return out

    def tensor_mul_left(self, t):
        """Multiply the tensor slots from the left by t in H^{(x) n}."""
        if t.n != self.n:
            raise ValueError("arity mismatch")
        alg = self.module.alg
        out = QElt(self.module, self.n)
        for (key, g, L), v in self.c.items():
            for tkey, tv in t.c.items():
                pieces = [mul_basis(alg, tkey[i], key[i]) for i in range(self.n)]
                for combo in iproduct(*[list(p.items()) for p in pieces]):
                    nk = tuple(I for I, _ in combo)
                    w = v * tv
                    for _, cv in combo:
                        w *= cv
                    out._bump(nk, g, L, w)
        return out

    def permuted(self, perm):
        """Permute tensor slots: new slot i holds old slot perm[i]."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("not a slot permutation")
        out = QElt(self.module, self.n)
        for (key, g, L), v in self.c.items():
            out._bump(tuple(key[perm[i]] for i in range(self.n)), g, L, v)
        return out

    def canonicalize(self):
        """Unique representative with last tensor slot equal to d^(0)."""
        if self.canonical:
            return self
        alg = self.module.alg
        out = QElt(self.module, self.n)
        for (key, g, L), v in self.c.items():
            last = key[-1]
            if not any(last):
                out._bump(key, g, L, v)
                continue
            for split in mi_splits(last, self.n):
                # first n-1 legs act through the antipode on the left slots,
                # the last leg lands on the module coefficient
                factor_maps = []
                for p in range(self.n - 1):
                    acc = {}
                    for Jp, cj in antipode_basis(alg, split[p]).items():
                        for K, ck in mul_basis(alg, key[p], Jp).items():
                            s = acc.get(K, Fr(0)) + cj * ck
                            if s:
                                acc[K] = s
                            else:
                                acc.pop(K, None)
                    factor_maps.append(acc)
                modmap = mul_basis(alg, split[-1], L)
                for combo in iproduct(*[list(fm.items()) for fm in factor_maps]):
                    nk = tuple(I for I, _ in combo) + (mi_zero(alg.dim),)
                    w = v
                    for _, cv in combo:
                        w *= cv
                    for Lp, cl in modmap.items():
                        out._bump(nk, g, Lp, w * cl)
        out.canonical = True
        return out

    def __eq__(self, other):
        if not isinstance(other, QElt) or self.n != other.n:
            return NotImplemented
        if not self.module.same_as(other.module):
            return NotImplemented
        return self.canonicalize().c == other.canonicalize().c

    __hash__ = None

    def map_module(self, fn, target_module=None):
        """Push the module part through an H-linear map given on generators.

        fn: generator key -> MElt over the target module.
        """
        target = target_module or self.module
        alg = self.module.alg
        out = QElt(target, self.n)
        for (key, g, L), v in self.c.items():
            img = fn(g)
            if not img.module.same_as(target):
                raise ValueError("map_module images over the wrong module")
            moved = img.h_mul(HElt.monomial(alg, L, 1))
            for (Lp, gp), w in moved.c.items():
                out._bump(key, gp, Lp, v * w)
        return out

    def module_parts(self):
        """Expose each term as (tensor key, MElt); used by composition code."""
        for (key, g, L), v in self.c.items():
            m = MElt(self.module)
            m._bump(L, g, v)
            yield key, m

    def as_dict(self):
        """Bit-exact dump for regression fixtures."""
        return {
            "arity": self.n,
            "canonical": self.canonical,
            "terms": [{"slots": [list(I) for I in key],
                       "gen": self.module.gen_name(g),
                       "m": list(L), "coeff": str(v)}
                      for (key, g, L), v in sorted(
                          self.c.items(), key=lambda kv: (kv[0][0], str(kv[0][1]), kv[0][2]))],
        }

    @classmethod
    def from_dict(cls, module, data):
        from .literals import parse_fraction
        q = cls(module, int(data["arity"]))
        for t in data["terms"]:
            q._bump(tuple(tuple(I) for I in t["slots"]),
                    module.gen_by_name(t["gen"]), tuple(t["m"]),
                    parse_fraction(t["coeff"]))
        q.canonical = bool(data.get("canonical"))
        return q

    def __repr__(self):
        from .literals import render_quotient
        return render_quotient(self)


def canonicalize(q):
    return q.canonicalize()


def permute(q, perm):
    return q.permuted(perm)
