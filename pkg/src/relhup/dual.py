"""Dual numbers for exact forward-mode first derivatives.

Functions meant for :func:`relhup.propagation.gradient` must be written with
ordinary arithmetic operators and the elementary functions defined here
(``sqrt``, ``exp``, ``log``, ``sin``, ``cos``), which dispatch on the
argument type so the same code runs on plain floats and on :class:`Dual`.
"""

from __future__ import annotations

import math
from numbers import Real
from typing import Union

from .errors import DomainError


class Dual:
    """A pair (value, derivative) obeying eps**2 = 0."""

    __slots__ = ("val", "der")

    def __init__(self, val: float, der: float = 0.0):
        self.val = float(val)
        self.der = float(der)

    def __repr__(self):
        return f"Dual({self.val!r}, {self.der!r})"

    @staticmethod
    def _lift(x) -> "Dual":
        if isinstance(x, Dual):
            return x
        if isinstance(x, Real):
            return Dual(x, 0.0)
        return NotImplemented

    def __add__(self, other):
        o = Dual._lift(other)
        if o is NotImplemented:
            return o
        return Dual(self.val + o.val, self.der + o.der)

    __radd__ = __add__

    def __sub__(self, other):
        o = Dual._lift(other)
        if o is NotImplemented:
            return o
        return Dual(self.val - o.val, self.der - o.der)

    def __rsub__(self, other):
        o = Dual._lift(other)
        if o is NotImplemented:
            return o
        return Dual(o.val - self.val, o.der - self.der)

    def __mul__(self, other):
        o = Dual._lift(other)
        if o is NotImplemented:
            return o
        return Dual(self.val * o.val, self.der * o.val + self.val * o.der)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = Dual._lift(other)
        if o is NotImplemented:
            return o
        if o.val == 0.0:
            raise DomainError("division by zero")
        q = self.val / o.val
        return Dual(q, (self.der - q * o.der) / o.val)

    def __rtruediv__(self, other):
        o = Dual._lift(other)
        if o is NotImplemented:
            return o
        return o.__truediv__(self)

    def __neg__(self):
        return Dual(-self.val, -self.der)

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if self.val < 0 else self

    def __pow__(self, power):
        if isinstance(power, Dual):
            if power.der == 0.0:
                power = power.val
            else:
                # a**b = exp(b log a)
                return exp(power * log(self))
        if isinstance(power, int):
            if power == 0:
                return Dual(1.0, 0.0)
            if power < 0 and self.val == 0.0:
                raise DomainError("zero to a negative power")
            return Dual(self.val ** power, power * self.val ** (power - 1) * self.der)
        if self.val < 0.0:
            raise DomainError(f"non-integer power of a negative number ({self.val})")
        if self.val == 0.0:
            if power < 1:
                raise DomainError("non-differentiable power at zero")
            return Dual(0.0, 0.0 if power > 1 else self.der)
        v = self.val ** power
        return Dual(v, power * v / self.val * self.der)

    def __rpow__(self, base):
        return exp(self * log(Dual._lift(base)))

    # comparisons use the value part so branching code still works
    def __lt__(self, other):
        return self.val < _value(other)

    def __le__(self, other):
        return self.val <= _value(other)

    def __gt__(self, other):
        return self.val > _value(other)

    def __ge__(self, other):
        return self.val >= _value(other)

    def __eq__(self, other):
        return self.val == _value(other)

    def __hash__(self):
        return hash(self.val)

    def __float__(self):
        return self.val


Number = Union[float, Dual]


def _value(x) -> float:
    return x.val if isinstance(x, Dual) else float(x)


def sqrt(x: Number) -> Number:
    if isinstance(x, Dual):
        if x.val < 0.0:
            raise DomainError(f"sqrt of negative number {x.val}")
        if x.val == 0.0:
            raise DomainError("sqrt is not differentiable at 0")
        r = math.sqrt(x.val)
        return Dual(r, x.der / (2.0 * r))
    if x < 0:
        raise DomainError(f"sqrt of negative number {x}")
    return math.sqrt(x)


def exp(x: Number) -> Number:
    if isinstance(x, Dual):
        e = math.exp(x.val)
        return Dual(e, e * x.der)
    return math.exp(x)


def log(x: Number) -> Number:
    if _value(x) <= 0.0:
        raise DomainError(f"log of non-positive number {_value(x)}")
    if isinstance(x, Dual):
        return Dual(math.log(x.val), x.der / x.val)
    return math.log(x)


def sin(x: Number) -> Number:
    if isinstance(x, Dual):
        return Dual(math.sin(x.val), math.cos(x.val) * x.der)
    return math.sin(x)


def cos(x: Number) -> Number:
    if isinstance(x, Dual):
        return Dual(math.cos(x.val), -math.sin(x.val) * x.der)
    return math.cos(x)
