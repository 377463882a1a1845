"""Ring element contracts, concrete rings, and counting instrumentation.

Elements are ordinary Python objects implementing ``+``, ``-``, unary
minus, ``*`` and ``==``.  A ring object only manufactures elements
(zero, one, integer conversion, random samples) and advertises
capabilities; every algorithm in this package is written against the
element operators, so any element type with those operators works
unchanged.  In particular plain ``int`` is the element type of the
default integer ring.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import ExactHalveUnavailable, NotEvenlyDivisible


def halve_exact(x):
    """Return y with y + y == x.

    Exact halving exists on 2-torsion-free rings (integers, odd moduli,
    integer polynomials).  It is division by a fixed unit, not a general
    ring multiplication, and is never tallied.

    Raises NotEvenlyDivisible when x is not of the form y + y, and
    ExactHalveUnavailable when the element's ring has no halving at all.
    """
    if isinstance(x, int):
        if x % 2:
            raise NotEvenlyDivisible(f"{x} is odd")
        return x // 2
    halve = getattr(x, "halve", None)
    if halve is None:
        raise ExactHalveUnavailable(f"no exact halving on {type(x).__name__}")
    return halve()


class Ring:
    """Element factory and capability record for one coefficient domain."""

    name = "ring"
    commutative = True
    supports_halving = False

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def from_int(self, k):
        """Image of the integer k under the canonical map into the ring."""
        raise NotImplementedError

    def random_element(self, rng):
        raise NotImplementedError

    def __repr__(self):
        return self.name


class IntegerRing(Ring):
    """Arbitrary-precision signed integers, the default exact ring.

    sample_span bounds the magnitude of random_element draws; arithmetic
    itself never overflows.
    """

    name = "int"
    supports_halving = True

    def __init__(self, sample_span=99):
        self.sample_span = sample_span

    def zero(self):
        return 0

    def one(self):
        return 1

    def from_int(self, k):
        return int(k)

    def random_element(self, rng):
        return rng.randint(-self.sample_span, self.sample_span)


#: Shared default integer ring instance.
ZZ = IntegerRing()


class Mod:
    """Residue in Z/mZ, always stored reduced."""

    __slots__ = ("value", "modulus")

    def __init__(self, value, modulus):
        self.value = value % modulus
        self.modulus = modulus

    def _coerce(self, other):
        if not isinstance(other, Mod):
            return None
        if other.modulus != self.modulus:
            raise ValueError(f"mixed moduli {self.modulus} and {other.modulus}")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Mod(self.value + other.value, self.modulus)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Mod(self.value - other.value, self.modulus)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Mod(self.value * other.value, self.modulus)

    def __neg__(self):
        return Mod(-self.value, self.modulus)

    def __eq__(self, other):
        return (
            isinstance(other, Mod)
            and self.modulus == other.modulus
            and self.value == other.value
        )

    def __hash__(self):
        return hash((self.value, self.modulus))

    def halve(self):
        # 2 is invertible exactly when the modulus is odd; for even moduli
        # x = y + y does not determine y, so the capability is absent.
        if self.modulus % 2 == 0:
            raise ExactHalveUnavailable(f"2 is not invertible mod {self.modulus}")
        return Mod(self.value * ((self.modulus + 1) // 2), self.modulus)

    def __repr__(self):
        return f"Mod({self.value}, {self.modulus})"


class ModularRing(Ring):
    """Integers modulo a fixed modulus >= 2."""

    def __init__(self, modulus):
        if modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {modulus}")
        self.modulus = modulus
        self.name = f"mod{modulus}"

    @property
    def supports_halving(self):
        return self.modulus % 2 == 1

    def zero(self):
        return Mod(0, self.modulus)

    def one(self):
        return Mod(1, self.modulus)

    def from_int(self, k):
        return Mod(int(k), self.modulus)

    def random_element(self, rng):
        return Mod(rng.randrange(self.modulus), self.modulus)


class IntMat2:
    """2x2 integer matrix under matrix product.

    Deliberately non-commutative: used as a negative witness showing that
    the fast schedules really depend on commutativity of the scalars.
    """

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        self.a = a
        self.b = b
        self.c = c
        self.d = d

    def __add__(self, o):
        if not isinstance(o, IntMat2):
            return NotImplemented
        return IntMat2(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    def __sub__(self, o):
        if not isinstance(o, IntMat2):
            return NotImplemented
        return IntMat2(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def __mul__(self, o):
        if not isinstance(o, IntMat2):
            return NotImplemented
        return IntMat2(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def __neg__(self):
        return IntMat2(-self.a, -self.b, -self.c, -self.d)

    def __eq__(self, o):
        return (
            isinstance(o, IntMat2)
            and self.a == o.a
            and self.b == o.b
            and self.c == o.c
            and self.d == o.d
        )

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d))

    def halve(self):
        if any(v % 2 for v in (self.a, self.b, self.c, self.d)):
            raise NotEvenlyDivisible(f"{self!r} has an odd entry")
        return IntMat2(self.a // 2, self.b // 2, self.c // 2, self.d // 2)

    def __repr__(self):
        return f"IntMat2({self.a}, {self.b}, {self.c}, {self.d})"


class Mat2Ring(Ring):
    """Ring of 2x2 integer matrices (non-commutative)."""

    name = "mat2"
    commutative = False
    supports_halving = True

    def __init__(self, sample_span=2):
        self.sample_span = sample_span

    def zero(self):
        return IntMat2(0, 0, 0, 0)

    def one(self):
        return IntMat2(1, 0, 0, 1)

    def from_int(self, k):
        k = int(k)
        return IntMat2(k, 0, 0, k)

    def random_element(self, rng):
        s = self.sample_span
        return IntMat2(
            rng.randint(-s, s), rng.randint(-s, s), rng.randint(-s, s), rng.randint(-s, s)
        )

    def random_diagonal(self, rng):
        """Sample from the commutative subring of diagonal matrices."""
        s = self.sample_span
        return IntMat2(rng.randint(-s, s), 0, 0, rng.randint(-s, s))


class MulTally:
    """Count of general ring multiplications executed in one computation.

    Owned by a single CountedRing context; never shared between
    concurrent computations.
    """

    __slots__ = ("count",)

    def __init__(self):
        self.count = 0

    def __repr__(self):
        return f"MulTally({self.count})"


class Counted:
    """Element wrapper billing every ``*`` to its context's tally.

    taint is True once a value depends on some input matrix entry.
    Constants injected by an algorithm (zero, one, from_int) stay
    untainted, and the context records any multiplication that consumed
    an untainted operand; the schedules here never perform one.
    """

    __slots__ = ("ctx", "value", "taint")

    def __init__(self, ctx, value, taint):
        self.ctx = ctx
        self.value = value
        self.taint = taint

    def __add__(self, other):
        if not isinstance(other, Counted):
            return NotImplemented
        return Counted(self.ctx, self.value + other.value, self.taint or other.taint)

    def __sub__(self, other):
        if not isinstance(other, Counted):
            return NotImplemented
        return Counted(self.ctx, self.value - other.value, self.taint or other.taint)

    def __mul__(self, other):
        if not isinstance(other, Counted):
            return NotImplemented
        ctx = self.ctx
        ctx.tally.count += 1
        if not (self.taint and other.taint):
            ctx.untainted_muls += 1
        return Counted(ctx, self.value * other.value, self.taint or other.taint)

    def __neg__(self):
        return Counted(self.ctx, -self.value, self.taint)

    def __eq__(self, other):
        return isinstance(other, Counted) and self.value == other.value

    __hash__ = None

    def halve(self):
        # Exact halving is free in the cost model: no tally bump.
        return Counted(self.ctx, halve_exact(self.value), self.taint)

    def __repr__(self):
        mark = "*" if self.taint else ""
        return f"Counted({self.value!r}{mark})"


class CountedRing(Ring):
    """Instrumented view of a base ring.

    One instance is one computation context: it owns the tally and the
    untainted-multiplication audit counter, so concurrent computations
    never share state.
    """

    def __init__(self, base):
        self.base = base
        self.tally = MulTally()
        self.untainted_muls = 0
        self.name = f"counted({base.name})"

    @property
    def supports_halving(self):
        return self.base.supports_halving

    @property
    def commutative(self):
        return self.base.commutative

    def zero(self):
        return Counted(self, self.base.zero(), False)

    def one(self):
        return Counted(self, self.base.one(), False)

    def from_int(self, k):
        return Counted(self, self.base.from_int(k), False)

    def random_element(self, rng):
        return Counted(self, self.base.random_element(rng), True)

    def lift(self, matrix):
        """Wrap a matrix over the base ring; entries are tainted inputs."""
        if matrix.ring.name != self.base.name:
            raise ValueError(f"matrix over {matrix.ring.name}, context over {self.base.name}")
        return matrix.map_entries(lambda v: Counted(self, v, True), ring=self)

    def unwrap(self, matrix):
        """Strip instrumentation, returning a matrix over the base ring."""
        return matrix.map_entries(lambda e: e.value, ring=self.base)


@dataclass
class AxiomFailure:
    law: str
    operands: tuple

    def describe(self):
        ops = ", ".join(repr(o) for o in self.operands)
        return f"{self.law} fails on ({ops})"


@dataclass
class AxiomReport:
    ring_name: str
    samples: int
    failures: list

    @property
    def ok(self):
        return not self.failures


def ring_axiom_check(ring, samples=100, seed=0):
    """Spot-check the commutative-ring laws on pseudorandom elements.

    Checks commutativity and associativity of + and *, distributivity,
    identities and additive inverses.  Failures are collected into the
    report rather than raised; deterministic for a fixed seed.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = random.Random(seed)
    zero = ring.zero()
    one = ring.one()
    failures = []
    for _ in range(samples):
        x = ring.random_element(rng)
        y = ring.random_element(rng)
        z = ring.random_element(rng)
        laws = (
            ("add_commutative", x + y == y + x, (x, y)),
            ("add_associative", (x + y) + z == x + (y + z), (x, y, z)),
            ("mul_commutative", x * y == y * x, (x, y)),
            ("mul_associative", (x * y) * z == x * (y * z), (x, y, z)),
            ("distributive", x * (y + z) == x * y + x * z, (x, y, z)),
            ("zero_identity", x + zero == x, (x,)),
            ("one_identity", x * one == x, (x,)),
            ("add_inverse", x + (-x) == zero, (x,)),
        )
        for law, holds, operands in laws:
            if not holds:
                failures.append(AxiomFailure(law, operands))
    return AxiomReport(ring.name, samples, failures)
