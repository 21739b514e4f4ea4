"""Exact scalar domains: prime fields F_p and the rationals.

Raw scalar values are plain Python ints (residues in [0, p) for a prime
field) or ``fractions.Fraction`` for the rationals.  ``DomainSpec`` carries
the arithmetic; ``ExactScalar`` is a thin tagged wrapper used at API
boundaries where a bare value would be ambiguous.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

from .errors import DivisionByZero, DomainMismatch, InvalidScalar

Value = Union[int, Fraction]

# Loader-level cap on the prime modulus; keeps hyperplane enumeration tractable.
DEFAULT_PRIME_CAP = 101


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class DomainSpec:
    """A base domain: ``kind`` is ``"prime"`` (with modulus ``p``) or ``"rational"``."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == "prime":
            if self.p is None or not is_prime(self.p):
                raise InvalidScalar(f"modulus {self.p!r} is not prime")
        elif self.kind == "rational":
            if self.p is not None:
                raise InvalidScalar("rational domain takes no modulus")
        else:
            raise InvalidScalar(f"unknown domain kind {self.kind!r}")

    # -- properties ---------------------------------------------------------

    @property
    def is_finite(self) -> bool:
        return self.kind == "prime"

    @property
    def order(self) -> int:
        if not self.is_finite:
            raise DomainMismatch("rational domain is infinite")
        return self.p  # type: ignore[return-value]

    def __str__(self) -> str:
        return f"F{self.p}" if self.kind == "prime" else "Q"

    # -- raw-value arithmetic -----------------------------------------------

    def zero(self) -> Value:
        return 0 if self.kind == "prime" else Fraction(0)

    def one(self) -> Value:
        return 1 if self.kind == "prime" else Fraction(1)

    def add(self, a: Value, b: Value) -> Value:
        return (a + b) % self.p if self.kind == "prime" else a + b

    def sub(self, a: Value, b: Value) -> Value:
        return (a - b) % self.p if self.kind == "prime" else a - b

    def neg(self, a: Value) -> Value:
        return (-a) % self.p if self.kind == "prime" else -a

    def mul(self, a: Value, b: Value) -> Value:
        return (a * b) % self.p if self.kind == "prime" else a * b

    def inv(self, a: Value) -> Value:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        if self.kind == "prime":
            return pow(a, -1, self.p)
        return Fraction(1) / a

    def div(self, a: Value, b: Value) -> Value:
        if b == 0:
            raise DivisionByZero("division by zero")
        if self.kind == "prime":
            return (a * pow(b, -1, self.p)) % self.p
        return Fraction(a) / b

    def elements(self) -> Iterator[Value]:
        """All residues, in order. Finite domains only."""
        if not self.is_finite:
            raise DomainMismatch("cannot enumerate the rationals")
        return iter(range(self.p))  # type: ignore[arg-type]

    # -- literals -----------------------------------------------------------

    def from_string(self, s: str) -> Value:
        """Parse a decimal scalar literal: "-3", "2", or "3/4" (rationals only)."""
        s = s.strip()
        if self.kind == "rational":
            try:
                return Fraction(s)
            except (ValueError, ZeroDivisionError) as e:
                raise InvalidScalar(f"bad rational literal {s!r}: {e}") from None
        try:
            v = int(s)
        except ValueError:
            raise InvalidScalar(f"bad prime-field literal {s!r}") from None
        if not 0 <= v < self.p:  # type: ignore[operator]
            raise InvalidScalar(f"literal {s!r} out of range [0, {self.p})")
        return v

    def to_string(self, v: Value) -> str:
        return str(v)

    def coerce(self, v) -> Value:
        """Validate/normalize an in-memory value into canonical form."""
        if self.kind == "prime":
            if isinstance(v, bool) or not isinstance(v, int):
                raise InvalidScalar(f"prime-field value must be int, got {type(v).__name__}")
            return v % self.p  # type: ignore[operator]
        if isinstance(v, Fraction):
            return v
        if isinstance(v, int) and not isinstance(v, bool):
            return Fraction(v)
        raise InvalidScalar(f"rational value must be int or Fraction, got {type(v).__name__}")


def parse_field(name: str) -> DomainSpec:
    """Parse a CLI field name: "Q" or "F<p>" (also accepts "GF<p>" and bare "<p>")."""
    t = name.strip()
    if t.upper() in ("Q", "QQ", "RATIONAL", "RATIONALS"):
        return DomainSpec("rational")
    for prefix in ("GF", "F", "f"):
        if t.startswith(prefix) and t[len(prefix):].isdigit():
            t = t[len(prefix):]
            break
    if not t.isdigit():
        raise InvalidScalar(f"cannot parse field name {name!r}")
    p = int(t)
    if p > DEFAULT_PRIME_CAP:
        raise InvalidScalar(f"prime {p} exceeds the configured cap {DEFAULT_PRIME_CAP}")
    return DomainSpec("prime", p)


RATIONALS = DomainSpec("rational")


def GF(p: int) -> DomainSpec:
    return DomainSpec("prime", p)


@dataclass(frozen=True)
class ExactScalar:
    """A domain-tagged exact scalar in canonical form."""

    domain: DomainSpec
    value: Value

    def __post_init__(self):
        object.__setattr__(self, "value", self.domain.coerce(self.value))

    def _check(self, other: "ExactScalar") -> None:
        if not isinstance(other, ExactScalar):
            raise DomainMismatch(f"expected ExactScalar, got {type(other).__name__}")
        if other.domain != self.domain:
            raise DomainMismatch(f"domain mismatch: {self.domain} vs {other.domain}")

    def __add__(self, other):
        self._check(other)
        return ExactScalar(self.domain, self.domain.add(self.value, other.value))

    def __sub__(self, other):
        self._check(other)
        return ExactScalar(self.domain, self.domain.sub(self.value, other.value))

    def __mul__(self, other):
        self._check(other)
        return ExactScalar(self.domain, self.domain.mul(self.value, other.value))

    def __truediv__(self, other):
        self._check(other)
        return ExactScalar(self.domain, self.domain.div(self.value, other.value))

    def __neg__(self):
        return ExactScalar(self.domain, self.domain.neg(self.value))

    def inverse(self) -> "ExactScalar":
        return ExactScalar(self.domain, self.domain.inv(self.value))

    def is_zero(self) -> bool:
        return self.value == 0

    def __str__(self) -> str:
        return self.domain.to_string(self.value)


def arith(a: ExactScalar, b: ExactScalar, op: str) -> ExactScalar:
    """Exact field arithmetic; ``op`` is one of add/sub/mul/div."""
    table = {
        "add": ExactScalar.__add__,
        "sub": ExactScalar.__sub__,
        "mul": ExactScalar.__mul__,
        "div": ExactScalar.__truediv__,
    }
    if op not in table:
        raise ValueError(f"unknown op {op!r}")
    return table[op](a, b)


def inverse(a: ExactScalar) -> ExactScalar:
    return a.inverse()
