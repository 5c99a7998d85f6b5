"""Cochain complex in low degree and central-extension solvers.

Cochains of degree 0, 1, 2 over a structure P with coefficients in a
module M; the differential follows the simplicial formula with slot
permutations matching the composition rules of the bracket.  Central
extensions by a one-dimensional counit generator are solved exactly:
either through the closed conditions available for rank-one structures,
or through the generic linear system extracted from the central component
of the Jacobi identity on generator triples.
"""

from fractions import Fraction

from .linalg import nullspace, quotient_representatives, span_dim
from .pbw import (HElt, TensorElt, antipode_basis, mi_splits, mi_weight,
                  mi_zero, mul_basis, multiindices_up_to)
from .pseudo import (PseudoStructure, Report, compose_left, compose_right)
from .tensor import FreeModule, MElt, QElt

Fr = Fraction


# -- cochains ----------------------------------------------------------------

class Cochain:
    """Degree 0, 1 or 2 cochain.

    degree 0: scalar per coefficient-module generator (the counit classes)
    degree 1: {L-generator: MElt over M}
    degree 2: {(L-gen, L-gen): QElt arity 2 over M}, skew-symmetrized

    Degree 3 exists only as the image of a degree-2 differential, for the
    complex property; no further differential is defined on it.
    """

    def __init__(self, degree, P, M, values):
        if degree not in (0, 1, 2, 3):
            raise ValueError("cochain degree must be 0 through 3")
        self.degree = degree
        self.P = P
        self.M = M
        self.values = values

    @classmethod
    def skew_pair_table(cls, P, M, raw):
        """Build a degree-2 cochain from values on ordered pairs by
        antisymmetrizing: gamma(a, b) = raw(a, b) - sigma12 raw(b, a)."""
        vals = {}
        gens = P.module.gens
        for a in gens:
            for b in gens:
                q1 = raw.get((a, b))
                q2 = raw.get((b, a))
                acc = QElt(M.module, 2)
                if q1 is not None:
                    acc = acc + q1
                if q2 is not None:
                    acc = acc - q2.permuted([1, 0])
                vals[(a, b)] = acc.canonicalize()
        return cls(2, P, M, vals)

    def value2(self, a_elt, b_elt):
        """H-bilinear extension of a degree-2 table to module elements."""
        alg = self.P.alg
        out = QElt(self.M.module, 2)
        for (Ia, ga), ca in a_elt.c.items():
            for (Ib, gb), cb in b_elt.c.items():
                base = self.values.get((ga, gb))
                if base is None:
                    continue
                for (key, g, L), v in base.c.items():
                    for K1, c1 in mul_basis(alg, Ia, key[0]).items():
                        for K2, c2 in mul_basis(alg, Ib, key[1]).items():
                            out._bump((K1, K2), g, L, ca * cb * v * c1 * c2)
        return out


def differential(gamma):
    """The cochain differential into the next degree.

    Degree 0 -> 1 uses the counit contraction of the action; degrees 1
    and 2 assemble action and bracket terms with the slot permutations
    induced by the composition rules.
    """
    P, M = gamma.P, gamma.M
    if gamma.degree == 0:
        vals = {}
        for a in P.module.gens:
            acc = MElt.zero(M.module)
            for k, mg in enumerate(M.module.gens):
                coeff = gamma.values[k]
                if not coeff:
                    continue
                q = M.gen_action(a, mg)
                for (key, g, L), v in q.c.items():
                    if any(key[1]):
                        continue  # counit of the second slot
                    h = HElt.monomial(M.module.alg, key[0], v * coeff)
                    acc = acc + MElt(M.module, {(L, g): 1}).h_mul(h)
            vals[a] = acc
        return Cochain(1, P, M, vals)

    if gamma.degree == 1:
        def gval(g):
            return gamma.values[g]

        vals = {}
        for a in P.module.gens:
            for b in P.module.gens:
                t1 = M.act(P.element(a), gamma.values[b])
                t2 = M.act(P.element(b), gamma.values[a]).permuted([1, 0])
                t3 = P.bracket(P.element(a), P.element(b)).map_module(gval, M.module)
                vals[(a, b)] = (t1 - t2.canonicalize() - t3).canonicalize()
        return Cochain(2, P, M, vals)

    # degree 2 -> 3, used by the complex checks
    vals = {}
    gens = P.module.gens
    for a in gens:
        for b in gens:
            for c in gens:
                ea, eb, ec = P.element(a), P.element(b), P.element(c)
                acc = compose_right(ea, gamma.value2(eb, ec), M.act, M.module)
                acc = acc - compose_right(eb, gamma.value2(ea, ec), M.act,
                                          M.module).permuted([1, 0, 2]).canonicalize()
                acc = acc + compose_right(ec, gamma.value2(ea, eb), M.act,
                                          M.module).permuted([1, 2, 0]).canonicalize()
                acc = acc - compose_left(P.bracket(ea, eb), gamma.value2, ec, M.module)
                acc = acc + compose_left(P.bracket(ea, ec), gamma.value2, eb,
                                         M.module).permuted([0, 2, 1]).canonicalize()
                acc = acc - compose_left(P.bracket(eb, ec), gamma.value2, ea,
                                         M.module).permuted([2, 0, 1]).canonicalize()
                vals[(a, b, c)] = acc.canonicalize()
    return Cochain(3, P, M, vals)


def is_zero_cochain(gamma):
    if gamma.degree == 0:
        return not any(gamma.values)
    if gamma.degree == 1:
        return not any(bool(v) for v in gamma.values.values())
    return not any(bool(v.canonicalize()) for v in gamma.values.values())


def extension_cocycle_residual(P, Mact, Nact, gamma, a, b, n):
    """Residual of the splitting-cocycle condition for module extensions.

    gamma: {(L-gen, N-gen): QElt over M}; the condition, per L-generators
    a, b and N-generator n, is

        gamma([a b])(n) = a (gamma(b)(n)) - sigma12 gamma(b)(a n)
                          - sigma12 (b (gamma(a)(n))) + gamma(a)(b n)
    """
    alg = P.alg

    def gamma_ab(x_elt, y_elt):
        out = QElt(Mact.module, 2)
        for (Ix, gx), cx in x_elt.c.items():
            for (Iy, gy), cy in y_elt.c.items():
                base = gamma.get((gx, gy))
                if base is None:
                    continue
                for (key, g, L), v in base.c.items():
                    for K1, c1 in mul_basis(alg, Ix, key[0]).items():
                        for K2, c2 in mul_basis(alg, Iy, key[1]).items():
                            out._bump((K1, K2), g, L, cx * cy * v * c1 * c2)
        return out

    ea, eb = P.element(a), P.element(b)
    en = Nact.module.element(n)
    lhs = compose_left(P.bracket(ea, eb), gamma_ab, en, Mact.module)
    r1 = compose_right(ea, gamma_ab(eb, en), Mact.act, Mact.module)
    r2 = compose_right(eb, Nact.act(ea, en), lambda _, y: gamma_ab(eb, y),
                       Mact.module).permuted([1, 0, 2]).canonicalize()
    r3 = compose_right(ea, gamma_ab(ea, en), lambda _, y: Mact.act(eb, y),
                       Mact.module).permuted([1, 0, 2]).canonicalize()
    r4 = compose_right(ea, Nact.act(eb, en), lambda _, y: gamma_ab(ea, y), Mact.module)
    return (lhs - r1 + r2 + r3 - r4).canonicalize()


# -- central extensions: shared helpers ---------------------------------------

def trivial_cocycle_table(P, phi):
    """Cocycle of the split extension twisted by the H-linear functional phi.

    phi: {generator: scalar}.  The value on a generator pair collects the
    counit part of the bracket's module coefficient against phi.
    """
    alg = P.alg
    out = {}
    for gi in P.module.gens:
        for gj in P.module.gens:
            acc = HElt.zero(alg)
            for (key, g, L), v in P.gen_bracket(gi, gj).c.items():
                if any(L):
                    continue
                w = phi.get(g, Fr(0))
                if w:
                    acc = acc + HElt.monomial(alg, key[0], v * w)
            out[(gi, gj)] = acc
    return out


def hat_central_extension(P, beta_table, name=None):
    """Structure on module + central counit generator z with the bracket
    shifted by (beta(a, b) (x) 1) (x)_H z."""
    alg = P.alg
    zkey = "z"
    while zkey in P.module.gens:
        zkey += "'"
    mod = FreeModule(alg, list(P.module.gens) + [zkey],
                     names={g: P.module.gen_name(g) for g in P.module.gens},
                     counit_gens=set(P.module.counit_gens) | {zkey},
                     label=(name or ("hat:" + P.name)))
    zero = mi_zero(alg.dim)
    table = {}
    for gi in P.module.gens:
        for gj in P.module.gens:
            q = QElt(mod, 2)
            for (key, g, L), v in P.gen_bracket(gi, gj).c.items():
                q._bump(key, g, L, v)
            beta = beta_table.get((gi, gj))
            if beta:
                for I, v in beta.c.items():
                    q._bump((I, zero), zkey, zero, v)
            table[(gi, gj)] = q
    P2 = PseudoStructure(mod, "lie", table=table, name=mod.label)
    P2.central_generator = zkey
    return P2


def _s_on_basis_rows(alg, I):
    return antipode_basis(alg, I)


class CentralExtensionSolution:
    """Nullspace data of a central-extension solve.

    `basis` spans the cocycle tables, `trivial` the coboundary span,
    `representatives` a complement; `complete` is True when the degree
    window provably contains every cocycle.
    """

    def __init__(self, P, unknowns, basis, trivial, complete, dmax):
        self.P = P
        self.unknowns = unknowns
        self.basis = basis
        self.trivial = trivial
        self.representatives = quotient_representatives(basis, trivial)
        self.dim_cocycles = span_dim(basis)
        self.dim_trivial = span_dim(trivial)
        self.dim = len(self.representatives)
        self.complete = complete
        self.dmax = dmax

    def beta_table_of(self, vec):
        tables = {}
        for (pair, I), v in vec.items():
            tables.setdefault(pair, {})[I] = v
        return {pair: HElt(self.P.alg, d) for pair, d in tables.items()}

    def representative_tables(self):
        return [self.beta_table_of(v) for v in self.representatives]

    def summary(self):
        return {
            "dim_cocycles": self.dim_cocycles,
            "dim_trivial": self.dim_trivial,
            "dim_h2": self.dim,
            "complete": self.complete,
            "dmax": self.dmax,
        }


# -- rank-one solver ----------------------------------------------------------

def solve_central_extensions_rank1(P, dmax=4):
    """Closed-form conditions for a free rank-one structure.

    With [e e] = alpha (x)_H e, alpha = r + s(x)1 - 1(x)s, a shift
    beta in H defines an extension iff

        beta + S(beta) = 0
        alpha split(beta) = (beta(x)1 + 1(x)beta) alpha
                            + beta (x) (3s - x) - (3s - x) (x) beta

    with x the half-contraction of r against the bracket.  When r is
    nonzero every solution has degree one, so any window with dmax >= 1
    is complete; otherwise completeness holds up to the stated degree.
    """
    datum = getattr(P, "datum", None)
    if datum is None or P.module.rank != 1:
        raise ValueError("rank-one solver needs a structure built from a datum")
    alg = P.alg
    gen = P.module.gens[0]
    alpha = datum.alpha()
    xvec = datum.x_element()
    three_sx = HElt.from_vector(alg, {i: 3 * datum.s[i] for i in range(alg.dim)}) \
        - HElt.from_vector(alg, xvec)
    two_sx = HElt.from_vector(alg, {i: 2 * datum.s[i] for i in range(alg.dim)}) \
        - HElt.from_vector(alg, xvec)

    monos = multiindices_up_to(alg.dim, dmax)
    unknowns = [((gen, gen), I) for I in monos]
    rows = {}

    def bump_row(eqkey, unknown, v):
        if v:
            row = rows.setdefault(eqkey, {})
            s = row.get(unknown, Fr(0)) + v
            if s:
                row[unknown] = s
            else:
                row.pop(unknown, None)

    one = HElt.one(alg)
    for I in monos:
        beta = HElt.monomial(alg, I, 1)
        u = ((gen, gen), I)
        for K, v in (beta + beta.antipode()).c.items():
            bump_row(("skew", K), u, v)
        lhs = alpha * beta.coproduct(2)
        lhs = lhs - (TensorElt.pure([beta, one]) + TensorElt.pure([one, beta])) * alpha
        lhs = lhs - TensorElt.pure([beta, three_sx]) + TensorElt.pure([three_sx, beta])
        for key, v in lhs.c.items():
            bump_row(("jac", key), u, v)

    basis = nullspace(rows.values(), unknowns)
    trivial = []
    if two_sx:
        vec = {((gen, gen), I): v for I, v in two_sx.c.items() if mi_weight(I) <= dmax}
        trivial.append(vec)
    r_nonzero = any(any(row) for row in datum.r)
    return CentralExtensionSolution(P, unknowns, basis, trivial,
                                    complete=(r_nonzero and dmax >= 1), dmax=dmax)


# -- generic solver -----------------------------------------------------------

def _central_rows_for_unit(P, p0, q0, I0):
    """Central Jacobi residual with beta = d^(I0) at the ordered pair (p0, q0).

    Returns {(triple, tensor-key): coefficient}: for canonical brackets
    sum (d^F (x) 1) (x)_H d^L e_g, the central part of the Jacobi identity
    on (a, b, c) collects

        right:  beta(a, e_g) S(d^L) (x) d^F (x) 1   over terms of [b c]
        middle: slots 1,2 swapped, over terms of [a c] with beta(b, .)
        left:   split of d^L beta(e_g, c-gen) against d^F, over [a b]

    and the residual right - middle - left must vanish.
    """
    alg = P.alg
    gens = P.module.gens
    beta_unit = HElt.monomial(alg, I0, 1)
    out = {}

    def bump(trip, key, v):
        if v:
            k = (trip, key)
            s = out.get(k, Fr(0)) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)

    for a in gens:
        for b in gens:
            for c in gens:
                trip = (a, b, c)
                # right composition: a against module parts of [b c]
                for (key, g, L), v in P.gen_bracket(b, c).c.items():
                    if (a, g) == (p0, q0):
                        w = beta_unit * HElt.monomial(alg, L, 1).antipode()
                        for K, cv in w.c.items():
                            bump(trip, (K, key[0]), v * cv)
                # middle: b against module parts of [a c], slots swapped
                for (key, g, L), v in P.gen_bracket(a, c).c.items():
                    if (b, g) == (p0, q0):
                        w = beta_unit * HElt.monomial(alg, L, 1).antipode()
                        for K, cv in w.c.items():
                            bump(trip, (key[0], K), -v * cv)
                # left: beta of module parts of [a b] against c
                for (key, g, L), v in P.gen_bracket(a, b).c.items():
                    if (g, c) == (p0, q0):
                        w = HElt.monomial(alg, L, 1) * beta_unit
                        for K, cv in w.c.items():
                            for K1, K2 in ((s[0], s[1]) for s in mi_splits(K, 2)):
                                for F1, cf in mul_basis(alg, key[0], K1).items():
                                    bump(trip, (F1, K2), -v * cv * cf)
    return out


def solve_central_extensions(P, dmax=4, complete=False):
    """Generic central-extension solve over a degree window.

    Unknowns are the coefficients of beta on every ordered generator pair;
    constraints are the skew link beta(b, a) = -S(beta(a, b)) and the
    central Jacobi residual on all generator triples.  `complete` is a
    caller-supplied assertion that the window provably captures all
    cocycles (true for the families whose solutions are known to lie in
    low degree).
    """
    alg = P.alg
    gens = P.module.gens
    monos = multiindices_up_to(alg.dim, dmax)
    unknowns = [((p, q), I) for p in gens for q in gens for I in monos]

    rows = {}

    def bump_row(eqkey, unknown, v):
        if v:
            row = rows.setdefault(eqkey, {})
            s = row.get(unknown, Fr(0)) + v
            if s:
                row[unknown] = s
            else:
                row.pop(unknown, None)

    # skew link
    for p in gens:
        for q in gens:
            for I in monos:
                bump_row(("skew", p, q, I), ((q, p), I), Fr(1))
                for K, v in antipode_basis(alg, I).items():
                    bump_row(("skew", p, q, K), ((p, q), I), v)

    # central Jacobi residual, one unknown at a time
    for p in gens:
        for q in gens:
            for I in monos:
                for (trip, key), v in _central_rows_for_unit(P, p, q, I).items():
                    bump_row(("jac", trip, key), ((p, q), I), v)

    basis = nullspace(rows.values(), unknowns)

    trivial = []
    for g0 in gens:
        table = trivial_cocycle_table(P, {g0: Fr(1)})
        vec = {}
        for pair, h in table.items():
            for I, v in h.c.items():
                if mi_weight(I) > dmax:
                    raise ValueError("trivial cocycle leaves the degree window")
                vec[(pair, I)] = v
        if vec:
            trivial.append(vec)
    return CentralExtensionSolution(P, unknowns, basis, trivial, complete, dmax)


# -- current-structure cocycles ----------------------------------------------

def verify_cur_cocycle(P_cur, d_element=None, beta_table=None, report=None):
    """Closedness and triviality analysis for cocycles of a current structure.

    With a simple coefficient algebra, the pairing table
    beta(a, b) = (a|b) d for a fixed d in the base algebra satisfies

        beta(a, [b,c]) (x) 1 - 1 (x) beta(b, [a,c]) = split(beta([a,b], c)),

    and is a counit shift only when zero; scalar-valued tables are matched
    against the shift space instead.
    """
    rep = report or Report("cur-cocycle")
    g = P_cur.coefficient_algebra
    alg = P_cur.alg
    K = g.killing_form()
    try:
        from .linalg import invert_matrix
        invert_matrix(K)
    except ValueError:
        raise ValueError("coefficient algebra has degenerate pairing; not simple")

    if beta_table is None:
        d_elt = HElt.from_vector(alg, {i: Fr(c) for i, c in enumerate(d_element)})
        beta_table = {(i, j): d_elt.scale(K[i][j]) for i in range(g.dim)
                      for j in range(g.dim)}

    def beta_pair(vec1, vec2):
        acc = HElt.zero(alg)
        for i, ci in vec1.items():
            for j, cj in vec2.items():
                acc = acc + beta_table[(i, j)].scale(ci * cj)
        return acc

    one = HElt.one(alg)
    for i in range(g.dim):
        for j in range(g.dim):
            for k in range(g.dim):
                lhs = TensorElt.pure([beta_pair({i: Fr(1)}, g.bracket(j, k)), one]) \
                    - TensorElt.pure([one, beta_pair({j: Fr(1)}, g.bracket(i, k))])
                rhs = beta_pair(g.bracket(i, j), {k: Fr(1)}).coproduct(2)
                ok = (lhs - rhs) == TensorElt(alg, 2)
                rep.record("closed[%d,%d,%d]" % (i, j, k), ok,
                           None if ok else (lhs - rhs))

    # triviality: the shift by an H-linear functional phi has values
    # phi([v_i, v_j]) in the scalars; match coefficients monomial by monomial
    from .linalg import solve
    rhs_key = "__rhs__"
    rows = []
    for i in range(g.dim):
        for j in range(g.dim):
            target = beta_table[(i, j)]
            idx = set(target.c) | {mi_zero(alg.dim)}
            for I in idx:
                row = {}
                if not any(I):
                    for k, c in g.bracket(i, j).items():
                        row[k] = row.get(k, Fr(0)) + c
                v = target.c.get(I, Fr(0))
                if v:
                    row[rhs_key] = v
                if row:
                    rows.append(row)
    sol = solve(rows, rhs_key)
    matched = sol is not None
    if matched:
        for row in rows:
            acc = sum((v * sol.get(k, Fr(0)) for k, v in row.items() if k != rhs_key),
                      Fr(0))
            if acc != row.get(rhs_key, Fr(0)):
                matched = False
                break
    rep.record("trivial" if matched else "nontrivial", True,
               "matched by counit shift" if matched else "no counit shift matches")
    rep.is_trivial = matched
    return rep


# -- divergence-type central suite --------------------------------------------

def sd_central_suite(alg, dmax=4):
    """Cocycle table solve for the divergence-zero structure on an abelian
    algebra of dimension at least 3, over pair generators.

    Unknowns are table values on ordered pairs of generators e_ab; the
    constraints are the pair skew link, the generator relation contracted
    into the first argument, and the cocycle identity of the restricted
    rank-one substructures.  Returns the solution together with the span
    of counit shifts for comparison.
    """
    if not alg.is_abelian or alg.dim < 3:
        raise ValueError("suite requires an abelian algebra of dimension >= 3")
    n = alg.dim
    pairs = [(a, b) for a in range(n) for b in range(n) if a < b]
    monos = multiindices_up_to(alg.dim, dmax)
    unknowns = [((p, q), I) for p in pairs for q in pairs for I in monos]

    def lookup(a, b):
        """(pair key, sign) for the generator e_ab; None if zero."""
        if a == b:
            return None
        return ((a, b), Fr(1)) if a < b else ((b, a), Fr(-1))

    rows = {}

    def bump_row(eqkey, unknown, v):
        if v:
            row = rows.setdefault(eqkey, {})
            s = row.get(unknown, Fr(0)) + v
            if s:
                row[unknown] = s
            else:
                row.pop(unknown, None)

    one = HElt.one(alg)

    def gen_vec(a):
        return HElt.gen(alg, a)

    # skew link between the two arguments
    for p in pairs:
        for q in pairs:
            for I in monos:
                bump_row(("skew", p, q, I), ((q, p), I), Fr(1))
                for K, v in antipode_basis(alg, I).items():
                    bump_row(("skew", p, q, K), ((p, q), I), v)

    # contraction of the generator relation into the first argument:
    # d_a beta(e_bc, Q) + d_b beta(e_ca, Q) + d_c beta(e_ab, Q) = 0
    from itertools import combinations
    for (a, b, c) in combinations(range(n), 3):
        for Q in pairs:
            for I in monos:
                for (v0, pair) in (((a,), lookup(b, c)), ((b,), lookup(c, a)),
                                   ((c,), lookup(a, b))):
                    if pair is None:
                        continue
                    pk, sg = pair
                    mono = HElt.gen(alg, v0[0]) * HElt.monomial(alg, I, 1)
                    for K, v in mono.c.items():
                        bump_row(("rel", (a, b, c), Q, K), ((pk, Q), I), sg * v)

    # restricted cocycle identity on (e_ab, e_ab, e_ac)
    for a in range(n):
        for b in range(n):
            if a == b:
                continue
            for c in range(n):
                if c == a:
                    continue
                eq = ("coc", a, b, c)
                A, B = gen_vec(a), gen_vec(b)
                skew_ba = TensorElt.pure([B, A]) - TensorElt.pure([A, B])
                for I in monos:
                    beta = HElt.monomial(alg, I, 1)
                    # left side terms with beta_{ab,ac}
                    look = lookup(a, c)
                    if look is not None:
                        pk, sg = look
                        u_ac = (((a, b) if a < b else (b, a)), pk)
                        sgn_ab = Fr(1) if a < b else Fr(-1)
                        lhs = skew_ba * (beta.coproduct(2)
                                         - TensorElt.pure([beta, one])
                                         - TensorElt.pure([one, beta]))
                        lhs = lhs - (TensorElt.pure([A * B, beta])
                                     - TensorElt.pure([beta, A * B]))
                        for key, v in lhs.c.items():
                            bump_row(eq + (key,), (u_ac, I), sg * sgn_ab * v)
                    # beta_{ab,bc} terms
                    look = lookup(b, c)
                    if look is not None:
                        pk, sg = look
                        u_bc = (((a, b) if a < b else (b, a)), pk)
                        sgn_ab = Fr(1) if a < b else Fr(-1)
                        t = TensorElt.pure([beta, A * A]) - TensorElt.pure([A * A, beta])
                        for key, v in t.c.items():
                            bump_row(eq + (key,), (u_bc, I), -sg * sgn_ab * v)
                    # beta_{ab,ab} terms
                    look = lookup(a, b)
                    pk, sg = look
                    u_ab = (pk, pk)
                    t = TensorElt.pure([beta, A * gen_vec(c)]) \
                        - TensorElt.pure([A * gen_vec(c), beta])
                    for key, v in t.c.items():
                        bump_row(eq + (key,), (u_ab, I), -v)

    basis = nullspace(rows.values(), unknowns)

    # counit shifts: tau(e_ab, e_cd) = -ad phi_bc - bc phi_ad + ac phi_bd + bd phi_ac
    trivial = []
    for (p0, q0) in pairs:
        phi = {}
        phi[(p0, q0)] = Fr(1)
        phi[(q0, p0)] = Fr(-1)
        vec = {}
        for (a, b) in pairs:
            for (c, d) in pairs:
                acc = HElt.zero(alg)
                for (u, v, pk, sgn) in ((a, d, (b, c), Fr(-1)), (b, c, (a, d), Fr(-1)),
                                        (a, c, (b, d), Fr(1)), (b, d, (a, c), Fr(1))):
                    w = phi.get(pk, Fr(0))
                    if w:
                        acc = acc + (gen_vec(u) * gen_vec(v)).scale(sgn * w)
                for I, val in acc.c.items():
                    vec[(((a, b), (c, d)), I)] = vec.get((((a, b), (c, d)), I), Fr(0)) + val
        vec = {k: v for k, v in vec.items() if v}
        if vec:
            trivial.append(vec)

    class Dummy:
        pass

    P = Dummy()
    P.alg = alg
    return CentralExtensionSolution(P, unknowns, basis, trivial,
                                    complete=(dmax >= 2), dmax=dmax)
