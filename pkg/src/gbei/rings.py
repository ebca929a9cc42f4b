"""Dense multivariate polynomial arithmetic over a prime field.

Variables live on an ``m x n`` grid, one per matrix entry ``x[i,j]``, with an
optional block of auxiliary elimination variables in front.  Monomials are
plain exponent tuples: at the scales this package targets (at most ~17
variables) dense tuples hash and compare faster than any sparse encoding,
and a pure lex comparison is just tuple comparison.
"""

from __future__ import annotations

from dataclasses import dataclass

DEFAULT_PRIME = 32003


# --------------------------------------------------------------------------
# monomials (exponent tuples)

def mono_one(nvars):
    return (0,) * nvars


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    """True if monomial a divides monomial b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(b, a):
    """Quotient b / a, assuming a divides b."""
    return tuple(x - y for x, y in zip(b, a))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_gcd(a, b):
    return tuple(min(x, y) for x, y in zip(a, b))


def mono_coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def mono_degree(a):
    return sum(a)


def mono_is_squarefree(a):
    return all(e <= 1 for e in a)


def mono_support(a):
    return tuple(v for v, e in enumerate(a) if e)


# --------------------------------------------------------------------------
# rings

@dataclass(frozen=True)
class Ring:
    """GF(prime)[t_1..t_aux, x[i,j] for the rows x cols grid].

    Auxiliary variables occupy the lowest indices, so under plain lex they
    are the most significant block — exactly what elimination needs.
    """

    rows: int
    cols: int
    prime: int = DEFAULT_PRIME
    aux: int = 0

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError("grid must be nonempty")
        if self.prime < 2:
            raise ValueError("prime must be at least 2")
        if self.aux < 0:
            raise ValueError("aux variable count must be nonnegative")

    @property
    def nvars(self):
        return self.aux + self.rows * self.cols

    def var_index(self, i, j):
        """Flat index of x[i,j], 1-based row/column, row-major."""
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise IndexError(f"x[{i},{j}] outside {self.rows}x{self.cols} grid")
        return self.aux + (i - 1) * self.cols + (j - 1)

    def var_name(self, v):
        if v < self.aux:
            return "t" if self.aux == 1 else f"t{v + 1}"
        i, j = divmod(v - self.aux, self.cols)
        return f"x[{i + 1},{j + 1}]"

    def extended(self, aux=1):
        """The same grid ring with `aux` elimination variables in front."""
        return Ring(self.rows, self.cols, self.prime, self.aux + aux)

    def grid_ring(self):
        """This ring with all auxiliary variables dropped."""
        return Ring(self.rows, self.cols, self.prime, 0)

    # -- element constructors ------------------------------------------------

    def zero(self):
        return Poly(self, {})

    def one(self):
        return self.constant(1)

    def constant(self, c):
        c %= self.prime
        return Poly(self, {mono_one(self.nvars): c} if c else {})

    def variable(self, i, j):
        mono = [0] * self.nvars
        mono[self.var_index(i, j)] = 1
        return Poly(self, {tuple(mono): 1})

    def aux_variable(self, k=0):
        if not 0 <= k < self.aux:
            raise IndexError(f"no auxiliary variable {k}")
        mono = [0] * self.nvars
        mono[k] = 1
        return Poly(self, {tuple(mono): 1})


# --------------------------------------------------------------------------
# term orders

class TermOrder:
    """A lex order given by a significance permutation of the variables.

    ``perm`` lists variable indices from most to least significant; a
    monomial's sort key is its exponents read in that sequence.  Pure lex
    orders are all this package needs: with the auxiliary block in front,
    lex-row-major doubles as the block elimination order.
    """

    __slots__ = ("name", "perm", "_identity")

    def __init__(self, name, perm):
        self.name = name
        self.perm = tuple(perm)
        self._identity = self.perm == tuple(range(len(self.perm)))

    @classmethod
    def lex_row_major(cls, ring):
        """x[1,1] > x[1,2] > ... > x[2,1] > ...; aux variables above all."""
        return cls("lex-row-major", range(ring.nvars))

    @classmethod
    def lex_column_major(cls, ring):
        """x[1,1] > x[2,1] > ... > x[1,2] > ...; aux variables above all."""
        perm = list(range(ring.aux))
        for j in range(ring.cols):
            for i in range(ring.rows):
                perm.append(ring.aux + i * ring.cols + j)
        return cls("lex-column-major", perm)

    @classmethod
    def by_name(cls, name, ring):
        if name == "lex-row-major":
            return cls.lex_row_major(ring)
        if name == "lex-column-major":
            return cls.lex_column_major(ring)
        raise ValueError(f"unknown term order {name!r}")

    def key(self, mono):
        if self._identity:
            return mono
        return tuple(mono[v] for v in self.perm)

    def __repr__(self):
        return f"TermOrder({self.name!r})"

    def __eq__(self, other):
        return isinstance(other, TermOrder) and self.perm == other.perm

    def __hash__(self):
        return hash(self.perm)


# --------------------------------------------------------------------------
# polynomials

class Poly:
    """Polynomial as a map from exponent tuple to coefficient in [1, p-1]."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        p = ring.prime
        clean = {}
        for mono, c in terms.items():
            c %= p
            if c:
                clean[mono] = c
        self.ring = ring
        self.terms = clean

    # -- queries ---------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def total_degree(self):
        return max((sum(m) for m in self.terms), default=-1)

    def leading_monomial(self, order):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms, key=order.key)

    def leading_term(self, order):
        m = self.leading_monomial(order)
        return m, self.terms[m]

    def leading_coefficient(self, order):
        return self.terms[self.leading_monomial(order)]

    # -- arithmetic --------------------------------------------------------

    def _check_ring(self, other):
        if self.ring != other.ring:
            raise ValueError("ring mismatch")

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        self._check_ring(other)
        p = self.ring.prime
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            s = (terms.get(mono, 0) + c) % p
            if s:
                terms[mono] = s
            elif mono in terms:
                del terms[mono]
        out = Poly.__new__(Poly)
        out.ring, out.terms = self.ring, terms
        return out

    def __neg__(self):
        p = self.ring.prime
        out = Poly.__new__(Poly)
        out.ring = self.ring
        out.terms = {m: p - c for m, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            c = other % self.ring.prime
            if not c:
                return self.ring.zero()
            return Poly(self.ring, {m: k * c for m, k in self.terms.items()})
        self._check_ring(other)
        p = self.ring.prime
        terms = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = tuple(x + y for x, y in zip(ma, mb))
                terms[m] = (terms.get(m, 0) + ca * cb) % p
        return Poly(self.ring, terms)

    __rmul__ = __mul__
    __radd__ = __add__

    def __rsub__(self, other):
        return (-self) + other

    def mono_shift(self, mono, coeff=1):
        """Multiply by coeff * (the monomial with exponent tuple `mono`)."""
        p = self.ring.prime
        coeff %= p
        terms = {}
        for m, c in self.terms.items():
            terms[tuple(x + y for x, y in zip(m, mono))] = c * coeff % p
        return Poly(self.ring, terms)

    def monic(self, order):
        if not self.terms:
            return self
        c = self.leading_coefficient(order)
        if c == 1:
            return self
        return self * pow(c, -1, self.ring.prime)

    # -- identity ----------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.ring == other.ring
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    # -- presentation --------------------------------------------------------

    def text(self, order=None):
        """Render as e.g. "3*x[1,2]*x[2,3] + -1*x[1,1]", terms descending."""
        if not self.terms:
            return "0"
        if order is None:
            monos = sorted(self.terms, reverse=True)
        else:
            monos = sorted(self.terms, key=order.key, reverse=True)
        half = self.ring.prime // 2
        parts = []
        for m in monos:
            c = self.terms[m]
            if c > half:
                c -= self.ring.prime
            factors = []
            for v, e in enumerate(m):
                if e:
                    name = self.ring.var_name(v)
                    factors.append(name if e == 1 else f"{name}^{e}")
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            elif c == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        return " + ".join(parts)

    def __repr__(self):
        return f"<Poly {self.text()}>"
