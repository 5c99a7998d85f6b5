"""Exact arithmetic in the universal enveloping algebra of a finite Lie algebra.

Elements are stored in the divided-power basis d^(I) = d_1^{i_1} ... d_N^{i_N}
divided by i_1! ... i_N!, as sparse maps from multi-indices to rationals.
That normalization makes the coproduct integer-free:

    coproduct(d^(I)) = sum over J + K = I of d^(J) (x) d^(K)

Multiplication straightens words of generators with the rewriting rule
d_j d_i = d_i d_j - [d_i, d_j] (for j > i), memoized per word on the
owning algebra, and converts between plain and divided monomials at the
boundary.  Filtration degree of d^(I) is |I|.
"""

from fractions import Fraction
from itertools import product as iproduct
from math import factorial

Fr = Fraction


# -- multi-index helpers ----------------------------------------------------

def mi_zero(n):
    return (0,) * n


def mi_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mi_weight(a):
    return sum(a)


def mi_factorial(a):
    out = 1
    for x in a:
        out *= factorial(x)
    return out


def compositions(total, parts):
    """All tuples of `parts` nonnegative integers summing to `total`."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def mi_splits(I, parts):
    """All ways of writing I as an ordered sum of `parts` multi-indices."""
    per_coord = [list(compositions(x, parts)) for x in I]
    for choice in iproduct(*per_coord):
        yield tuple(tuple(c[p] for c in choice) for p in range(parts))


def multiindices_up_to(n, D):
    """All multi-indices of length n with weight <= D, graded-lex ordered."""
    out = []
    for w in range(D + 1):
        out.extend(sorted(compositions(w, n), reverse=True))
    return out


def word_of(I):
    w = []
    for pos, reps in enumerate(I):
        w.extend([pos] * reps)
    return tuple(w)


def mi_of_sorted_word(word, n):
    I = [0] * n
    for g in word:
        I[g] += 1
    return tuple(I)


# -- straightening ----------------------------------------------------------

def _straighten(alg, word):
    """Expand an arbitrary generator word in the plain PBW monomial basis.

    Returns {multi-index: Fraction} with d^I meaning the plain ordered
    product (no factorials).  Recursion swaps the first descent and adds
    the bracket correction; results are memoized on the algebra.
    """
    cache = alg._straight_cache
    hit = cache.get(word)
    if hit is not None:
        return hit
    desc = None
    for t in range(len(word) - 1):
        if word[t] > word[t + 1]:
            desc = t
            break
    if desc is None:
        res = {mi_of_sorted_word(word, alg.dim): Fr(1)}
        cache[word] = res
        return res
    a, b = word[desc], word[desc + 1]
    swapped = word[:desc] + (b, a) + word[desc + 2:]
    acc = dict(_straighten(alg, swapped))
    # word = swapped + [d_a, d_b]-correction in place of the pair
    for k, c in alg.bracket(a, b).items():
        sub = word[:desc] + (k,) + word[desc + 2:]
        for I, ci in _straighten(alg, sub).items():
            s = acc.get(I, Fr(0)) + c * ci
            if s:
                acc[I] = s
            else:
                acc.pop(I, None)
    cache[word] = acc
    return acc


def mul_basis(alg, I, J):
    """Product d^(I) d^(J) expanded in divided-power monomials."""
    key = (I, J)
    hit = alg._mul_cache.get(key)
    if hit is not None:
        return hit
    if alg.is_abelian:
        K = mi_add(I, J)
        coeff = Fr(mi_factorial(K), mi_factorial(I) * mi_factorial(J))
        res = {K: coeff}
    else:
        norm = Fr(1, mi_factorial(I) * mi_factorial(J))
        res = {}
        for K, c in _straighten(alg, word_of(I) + word_of(J)).items():
            v = c * norm * mi_factorial(K)
            if v:
                res[K] = res.get(K, Fr(0)) + v
        res = {K: v for K, v in res.items() if v}
    alg._mul_cache[key] = res
    return res


def antipode_basis(alg, I):
    """Antipode of d^(I): sign-reversed word product, back in divided powers."""
    hit = alg._antipode_cache.get(I)
    if hit is not None:
        return hit
    if alg.is_abelian:
        res = {I: Fr((-1) ** mi_weight(I))}
    else:
        sign = Fr((-1) ** mi_weight(I), mi_factorial(I))
        res = {}
        for K, c in _straighten(alg, tuple(reversed(word_of(I)))).items():
            v = sign * c * mi_factorial(K)
            if v:
                res[K] = v
    alg._antipode_cache[I] = res
    return res


# -- elements ---------------------------------------------------------------

class HElt:
    """Element of U(d) as a sparse rational combination of d^(I)."""

    __slots__ = ("alg", "c")

    def __init__(self, alg, coeffs=None):
        self.alg = alg
        self.c = {}
        for I, v in (coeffs or {}).items():
            v = Fr(v)
            if v:
                self.c[tuple(I)] = v

    @classmethod
    def zero(cls, alg):
        return cls(alg)

    @classmethod
    def one(cls, alg):
        return cls(alg, {mi_zero(alg.dim): 1})

    @classmethod
    def gen(cls, alg, i):
        I = [0] * alg.dim
        I[i] = 1
        return cls(alg, {tuple(I): 1})

    @classmethod
    def monomial(cls, alg, I, coeff=1):
        return cls(alg, {tuple(I): coeff})

    @classmethod
    def from_vector(cls, alg, vec):
        """Image of a coefficient vector {i: c} of the Lie algebra in U(d)."""
        out = cls.zero(alg)
        for i, v in vec.items():
            I = [0] * alg.dim
            I[i] = 1
            out = out + cls(alg, {tuple(I): v})
        return out

    def clone(self):
        e = HElt(self.alg)
        e.c = dict(self.c)
        return e

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        return isinstance(other, HElt) and self.alg is other.alg and self.c == other.c

    __hash__ = None

    def __add__(self, other):
        out = dict(self.c)
        for I, v in other.c.items():
            s = out.get(I, Fr(0)) + v
            if s:
                out[I] = s
            else:
                out.pop(I, None)
        e = HElt(self.alg)
        e.c = out
        return e

    def __neg__(self):
        e = HElt(self.alg)
        e.c = {I: -v for I, v in self.c.items()}
        return e

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k):
        k = Fr(k)
        e = HElt(self.alg)
        if k:
            e.c = {I: k * v for I, v in self.c.items()}
        return e

    def __mul__(self, other):
        if isinstance(other, HElt):
            if other.alg is not self.alg:
                raise ValueError("elements over different algebras")
            out = {}
            for I, a in self.c.items():
                for J, b in other.c.items():
                    ab = a * b
                    for K, c in mul_basis(self.alg, I, J).items():
                        s = out.get(K, Fr(0)) + ab * c
                        if s:
                            out[K] = s
                        else:
                            out.pop(K, None)
            e = HElt(self.alg)
            e.c = out
            return e
        return self.scale(other)

    def __rmul__(self, k):
        return self.scale(k)

    def antipode(self):
        out = {}
        for I, v in self.c.items():
            for K, c in antipode_basis(self.alg, I).items():
                s = out.get(K, Fr(0)) + v * c
                if s:
                    out[K] = s
                else:
                    out.pop(K, None)
        e = HElt(self.alg)
        e.c = out
        return e

    def counit(self):
        return self.c.get(mi_zero(self.alg.dim), Fr(0))

    def degree(self):
        """Filtration degree; None for the zero element."""
        if not self.c:
            return None
        return max(mi_weight(I) for I in self.c)

    def coproduct(self, n=2):
        """Iterated coproduct as a TensorElt of the given arity."""
        if n < 2:
            raise ValueError("arity must be >= 2")
        t = TensorElt(self.alg, n)
        for I, v in self.c.items():
            for split in mi_splits(I, n):
                t._bump(split, v)
        return t

    def support_degrees(self):
        return sorted({mi_weight(I) for I in self.c})

    def __repr__(self):
        from .literals import render_helt
        return render_helt(self)


class TensorElt:
    """Element of the n-fold tensor power of U(d), coefficients on divided monomials."""

    __slots__ = ("alg", "n", "c")

    def __init__(self, alg, n, coeffs=None):
        self.alg = alg
        self.n = n
        self.c = {}
        for key, v in (coeffs or {}).items():
            v = Fr(v)
            if v:
                self.c[tuple(tuple(I) for I in key)] = v

    def _bump(self, key, v):
        s = self.c.get(key, Fr(0)) + v
        if s:
            self.c[key] = s
        else:
            self.c.pop(key, None)

    @classmethod
    def zero(cls, alg, n):
        return cls(alg, n)

    @classmethod
    def one(cls, alg, n):
        return cls(alg, n, {(mi_zero(alg.dim),) * n: 1})

    @classmethod
    def pure(cls, factors):
        """Tensor product of HElt factors."""
        alg = factors[0].alg
        t = cls(alg, len(factors))
        keys = [list(f.c.items()) for f in factors]
        for combo in iproduct(*keys):
            key = tuple(I for I, _ in combo)
            v = Fr(1)
            for _, cv in combo:
                v *= cv
            t._bump(key, v)
        return t

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        return (isinstance(other, TensorElt) and self.alg is other.alg
                and self.n == other.n and self.c == other.c)

    __hash__ = None

    def __add__(self, other):
        out = TensorElt(self.alg, self.n)
        out.c = dict(self.c)
        for k, v in other.c.items():
            out._bump(k, v)
        return out

    def __neg__(self):
        out = TensorElt(self.alg, self.n)
        out.c = {k: -v for k, v in self.c.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k):
        k = Fr(k)
        out = TensorElt(self.alg, self.n)
        if k:
            out.c = {key: k * v for key, v in self.c.items()}
        return out

    def __mul__(self, other):
        """Slotwise product in U(d)^{(x) n}."""
        if not isinstance(other, TensorElt):
            return self.scale(other)
        if other.n != self.n or other.alg is not self.alg:
            raise ValueError("arity or algebra mismatch")
        out = TensorElt(self.alg, self.n)
        for ka, va in self.c.items():
            for kb, vb in other.c.items():
                pieces = [mul_basis(self.alg, ka[i], kb[i]) for i in range(self.n)]
                base = va * vb
                for combo in iproduct(*[list(p.items()) for p in pieces]):
                    key = tuple(I for I, _ in combo)
                    v = base
                    for _, cv in combo:
                        v *= cv
                    out._bump(key, v)
        return out

    def __rmul__(self, k):
        return self.scale(k)

    def permuted(self, perm):
        """Pull slots through a permutation: new slot i holds old slot perm[i]."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("not a permutation of the slots")
        out = TensorElt(self.alg, self.n)
        for key, v in self.c.items():
            out._bump(tuple(key[perm[i]] for i in range(self.n)), v)
        return out

    def max_degree(self):
        if not self.c:
            return None
        return max(sum(mi_weight(I) for I in key) for key in self.c)

    def __repr__(self):
        from .literals import render_tensor
        return render_tensor(self)


def fourier(t, slots=(0, 1), inverse=False):
    """Fourier transform on a chosen pair of tensor slots.

    Forward:  f (x) g  ->  f S(g_split1) (x) g_split2
    Inverse:  f (x) g  ->  f g_split1    (x) g_split2
    computed with the divided-power coproduct, all other slots untouched.
    """
    i, j = slots
    if i == j or not (0 <= i < t.n) or not (0 <= j < t.n):
        raise ValueError("slots must be two distinct positions")
    alg = t.alg
    out = TensorElt(alg, t.n)
    for key, v in t.c.items():
        g = key[j]
        for J, K in ((s[0], s[1]) for s in mi_splits(g, 2)):
            left = antipode_basis(alg, J) if not inverse else {J: Fr(1)}
            for Jp, cj in left.items():
                for newI, ci in mul_basis(alg, key[i], Jp).items():
                    nk = list(key)
                    nk[i] = newI
                    nk[j] = K
                    out._bump(tuple(nk), v * cj * ci)
    return out
