"""Pseudoalgebra structures on free modules and their defining identities.

A PseudoStructure keeps, for every ordered pair of module generators, the
canonical form of their bracket (last tensor slot trivial, so the stored
data is the H (x) L coefficient table).  Brackets of general elements
extend the table bilinearly; triple compositions realize both association
orders in H^{(x) 3} (x)_H L, and the verification routines check
skew-commutativity, the Jacobi identity (or associativity), module
identities and homomorphisms by exact comparison of canonical forms.
"""

from fractions import Fraction

from .pbw import HElt, mi_splits, mi_weight, mul_basis
from .tensor import MElt, QElt

Fr = Fraction


class CheckResult:
    def __init__(self, name, passed, witness=None):
        self.name = name
        self.passed = passed
        self.witness = witness

    def __repr__(self):
        return "%s: %s%s" % (self.name, "pass" if self.passed else "FAIL",
                             "" if self.passed or self.witness is None
                             else " (%s)" % (self.witness,))


class Report:
    """Accumulated named checks; ok iff every recorded check passed."""

    def __init__(self, title=""):
        self.title = title
        self.checks = []

    def record(self, name, passed, witness=None):
        self.checks.append(CheckResult(name, bool(passed), witness))
        return passed

    def extend(self, other):
        self.checks.extend(other.checks)

    @property
    def ok(self):
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def as_dict(self):
        return {
            "title": self.title,
            "ok": self.ok,
            "checks": [{"name": c.name, "passed": c.passed,
                        "witness": None if c.witness is None else str(c.witness)}
                       for c in self.checks],
        }

    def __repr__(self):
        head = "Report(%s): %s" % (self.title, "ok" if self.ok else "FAILED")
        lines = [head] + ["  " + repr(c) for c in self.checks if not c.passed]
        return "\n".join(lines)


class PseudoStructure:
    """Bracket data on a free module; kind is "lie" or "assoc".

    `table` maps ordered generator pairs to canonical arity-2 QElt values.
    Large or lazily indexed structures may instead supply `bracket_fn`,
    called on demand for generator pairs, plus `verify_gens`, the finite
    generator list the axiom checks run over.
    """

    def __init__(self, module, kind="lie", table=None, bracket_fn=None,
                 verify_gens=None, name=""):
        if kind not in ("lie", "assoc"):
            raise ValueError("kind must be 'lie' or 'assoc'")
        self.module = module
        self.alg = module.alg
        self.kind = kind
        self.name = name or module.label
        self._table = {}
        self._bracket_fn = bracket_fn
        self.verify_gens = list(verify_gens if verify_gens is not None else module.gens)
        for pair, q in (table or {}).items():
            self._table[pair] = q.canonicalize()

    def gen_bracket(self, gi, gj):
        key = (gi, gj)
        if key in self._table:
            return self._table[key]
        if self._bracket_fn is not None:
            q = self._bracket_fn(gi, gj).canonicalize()
            self._table[key] = q
            return q
        return QElt.zero(self.module, 2)

    def element(self, g):
        return self.module.element(g)

    def bracket(self, a, b):
        """Pseudoproduct of two module elements, canonicalized."""
        if not a.module.same_as(self.module) or not b.module.same_as(self.module):
            raise ValueError("foreign elements")
        out = QElt(self.module, 2)
        alg = self.alg
        for (Ia, ga), ca in a.c.items():
            for (Ib, gb), cb in b.c.items():
                base = self.gen_bracket(ga, gb)
                cab = ca * cb
                for (key, g, L), v in base.c.items():
                    left = mul_basis(alg, Ia, key[0])
                    right = mul_basis(alg, Ib, key[1])
                    for K1, c1 in left.items():
                        for K2, c2 in right.items():
                            out._bump((K1, K2), g, L, cab * v * c1 * c2)
        return out.canonicalize()

    def max_coefficient_degree(self):
        """Largest filtration degree occurring in the stored bracket table."""
        best = 0
        for q in self._table.values():
            for (key, g, L), _ in q.c.items():
                best = max(best, mi_weight(key[0]) + mi_weight(L))
        return best

    def __repr__(self):
        return "PseudoStructure(%s, kind=%s, rank=%d)" % (
            self.name, self.kind, self.module.rank)


class ModuleStructure:
    """Action of a PseudoStructure on a free module, stored like a bracket table."""

    def __init__(self, pseudo, module, table=None, action_fn=None, name=""):
        self.pseudo = pseudo
        self.module = module
        self.alg = module.alg
        self.name = name
        self._table = {}
        self._action_fn = action_fn
        for pair, q in (table or {}).items():
            self._table[pair] = q.canonicalize()

    def gen_action(self, g_l, g_m):
        key = (g_l, g_m)
        if key in self._table:
            return self._table[key]
        if self._action_fn is not None:
            q = self._action_fn(g_l, g_m).canonicalize()
            self._table[key] = q
            return q
        return QElt.zero(self.module, 2)

    def act(self, a, m):
        if not a.module.same_as(self.pseudo.module) or not m.module.same_as(self.module):
            raise ValueError("foreign elements")
        out = QElt(self.module, 2)
        alg = self.alg
        for (Ia, ga), ca in a.c.items():
            for (Im, gm), cm in m.c.items():
                base = self.gen_action(ga, gm)
                cam = ca * cm
                for (key, g, L), v in base.c.items():
                    for K1, c1 in mul_basis(alg, Ia, key[0]).items():
                        for K2, c2 in mul_basis(alg, Im, key[1]).items():
                            out._bump((K1, K2), g, L, cam * v * c1 * c2)
        return out.canonicalize()


# -- composition in the third tensor power ----------------------------------

def compose_left(inner, op, c, out_module=None):
    """((a op1 b) op2 c) in H^{(x) 3}: `inner` is the arity-2 result of op1."""
    alg = inner.module.alg
    out = QElt(out_module, 3) if out_module is not None else None
    for key, m in inner.module_parts():
        q2 = op(m, c)
        if out is None:
            out = QElt(q2.module, 3)
        for (pk, g, L), v in q2.c.items():
            for P1, P2 in ((s[0], s[1]) for s in mi_splits(pk[0], 2)):
                for K1, c1 in mul_basis(alg, key[0], P1).items():
                    for K2, c2 in mul_basis(alg, key[1], P2).items():
                        out._bump((K1, K2, pk[1]), g, L, v * c1 * c2)
    if out is None:
        raise ValueError("composition of an empty inner result needs out_module")
    return out.canonicalize()


def compose_right(a, inner, op, out_module=None):
    """(a op2 (b op1 c)) in H^{(x) 3}: `inner` is the arity-2 result of op1."""
    alg = inner.module.alg
    out = QElt(out_module, 3) if out_module is not None else None
    for key, d in inner.module_parts():
        q2 = op(a, d)
        if out is None:
            out = QElt(q2.module, 3)
        for (pk, g, L), v in q2.c.items():
            for Q1, Q2 in ((s[0], s[1]) for s in mi_splits(pk[1], 2)):
                for K1, c1 in mul_basis(alg, key[0], Q1).items():
                    for K2, c2 in mul_basis(alg, key[1], Q2).items():
                        out._bump((pk[0], K1, K2), g, L, v * c1 * c2)
    if out is None:
        raise ValueError("composition of an empty inner result needs out_module")
    return out.canonicalize()


def triple_compose(P, a, b, c, shape):
    """One of the three Jacobi/associativity compositions, canonicalized.

    shape "left":   [[a b] c]
    shape "right":  [a [b c]]
    shape "middle": slots 1,2 swapped in [b [a c]]
    """
    if shape == "left":
        return compose_left(P.bracket(a, b), P.bracket, c, P.module)
    if shape == "right":
        return compose_right(a, P.bracket(b, c), P.bracket, P.module)
    if shape == "middle":
        inner = compose_right(b, P.bracket(a, c), P.bracket, P.module)
        return inner.permuted([1, 0, 2]).canonicalize()
    raise ValueError("shape must be left, right or middle")


def skew_residual(P, a, b):
    """[b a] + sigma_12 [a b]; zero iff skew-commutativity holds on the pair."""
    return (P.bracket(b, a) + P.bracket(a, b).permuted([1, 0])).canonicalize()


def jacobi_residual(P, a, b, c):
    r = triple_compose(P, a, b, c, "right")
    m = triple_compose(P, a, b, c, "middle")
    l = triple_compose(P, a, b, c, "left")
    return (r - m - l).canonicalize()


def assoc_residual(P, a, b, c):
    return (triple_compose(P, a, b, c, "right")
            - triple_compose(P, a, b, c, "left")).canonicalize()


def module_residual(P, M, a, b, m):
    """Defect of the module identity matching the structure kind.

    Lie:    a (b m) - sigma_12 (b (a m)) - [a b] m
    assoc:  a (b m) - (a b) m
    """
    right = compose_right(a, M.act(b, m), M.act, M.module)
    left = compose_left(P.bracket(a, b), M.act, m, M.module)
    if P.kind == "assoc":
        return (right - left).canonicalize()
    middle = compose_right(b, M.act(a, m), M.act, M.module).permuted([1, 0, 2]).canonicalize()
    return (right - middle - left).canonicalize()


def verify_axioms(P, report=None, gens=None):
    """Check the defining identities on generator pairs and triples.

    By H-bilinearity this suffices for the full structure; the randomized
    tests exercise the bilinear extension separately.
    """
    rep = report or Report("axioms:%s" % P.name)
    gens = list(gens if gens is not None else P.verify_gens)
    elements = {g: P.element(g) for g in gens}
    return verify_axioms_elements(P, elements, rep)


def verify_axioms_elements(P, elements, report=None):
    """Same identities on an arbitrary finite family of named elements.

    Used both for generator verification and for subalgebras handed as
    element lists inside an ambient structure.
    """
    rep = report or Report("axioms:%s" % P.name)
    names = list(elements)
    if P.kind == "lie":
        for x in names:
            for y in names:
                res = skew_residual(P, elements[x], elements[y])
                rep.record("skew-commutativity[%s,%s]" % (x, y), not res,
                           None if not res else res)
        for x in names:
            for y in names:
                for z in names:
                    res = jacobi_residual(P, elements[x], elements[y], elements[z])
                    rep.record("jacobi[%s,%s,%s]" % (x, y, z), not res,
                               None if not res else res)
    else:
        for x in names:
            for y in names:
                for z in names:
                    res = assoc_residual(P, elements[x], elements[y], elements[z])
                    rep.record("associativity[%s,%s,%s]" % (x, y, z), not res,
                               None if not res else res)
    return rep


def verify_module(P, M, report=None, lgens=None, mgens=None):
    rep = report or Report("module:%s" % (M.name or P.name))
    lgens = list(lgens if lgens is not None else P.verify_gens)
    mgens = list(mgens if mgens is not None else M.module.gens)
    for x in lgens:
        for y in lgens:
            for m in mgens:
                res = module_residual(P, M, P.element(x), P.element(y),
                                      M.module.element(m))
                rep.record("module-identity[%s,%s;%s]" % (x, y, m), not res,
                           None if not res else res)
    return rep


def verify_homomorphism(P1, P2, images, report=None):
    """Check phi([a b]) = [phi(a) phi(b)] on generator pairs.

    `images`: {generator of P1 -> MElt over P2}.  The map extends
    H-linearly; counit generators map to themselves implicitly when
    present in both structures.
    """
    rep = report or Report("homomorphism:%s->%s" % (P1.name, P2.name))

    def phi(g):
        return images[g]

    for gi in images:
        for gj in images:
            lhs = P1.gen_bracket(gi, gj).map_module(phi, P2.module)
            rhs = P2.bracket(images[gi], images[gj])
            ok = lhs == rhs
            rep.record("bracket-compat[%s,%s]" % (P1.module.gen_name(gi),
                                                  P1.module.gen_name(gj)),
                       ok, None if ok else (lhs - rhs).canonicalize())
    return rep


# -- scalar specializations (x-brackets) ------------------------------------

def x_bracket(P, a, x, b):
    """Pairing of the bracket's canonical H-coefficient against a functional.

    x is a TruncatedSeries; the result is sum of <S(x), h> c over the
    canonical form sum (h (x) 1) (x)_H c.  Raises PrecisionError when the
    series is not known deep enough to pair every coefficient.
    """
    from .annihilation import PrecisionError
    q = P.bracket(a, b)
    out = MElt.zero(P.module)
    alg = P.alg
    for (key, g, L), v in q.c.items():
        h = HElt.monomial(alg, key[0], 1)
        need = mi_weight(key[0])
        if need > x.cutoff:
            raise PrecisionError(
                "pairing needs series depth %d, cutoff is %d" % (need, x.cutoff))
        val = x.pair(h.antipode())
        if val:
            out._bump(L, g, v * val)
    return out
