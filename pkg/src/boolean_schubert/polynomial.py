"""Sparse multivariate polynomials with integer coefficients.

Two flavours share one implementation: ``WeightPolynomial`` in the torus
variables ``t_1..t_n`` and ``RootPolynomial`` in the simple roots
``a_1..a_n``.  Since ``t_i = omega_i - s_i(omega_i) = alpha_i``, the two are
identified by renaming variables (``to_root`` / ``to_weight``), but they do
not compare equal to each other without an explicit conversion.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping

Exponents = tuple[int, ...]


class Polynomial:
    """Immutable sparse polynomial: a mapping exponent-vector -> nonzero int."""

    __slots__ = ("nvars", "_terms", "_hash")
    prefix = "x"

    def __init__(self, nvars: int, terms: Mapping[Exponents, int] | Iterable = ()):
        self.nvars = nvars
        clean: dict[Exponents, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exp, c in items:
            if c:
                exp = tuple(exp)
                if len(exp) != nvars:
                    raise ValueError(f"exponent {exp} has wrong length for {nvars} variables")
                clean[exp] = clean.get(exp, 0) + c
        self._terms = {e: c for e, c in clean.items() if c}
        self._hash = None

    # constructors

    @classmethod
    def zero(cls, nvars: int):
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c: int):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def one(cls, nvars: int):
        return cls.constant(nvars, 1)

    @classmethod
    def variable(cls, nvars: int, i: int, coeff: int = 1):
        """``coeff * x_i`` with 1-based ``i``."""
        exp = [0] * nvars
        exp[i - 1] = 1
        return cls(nvars, {tuple(exp): coeff})

    @classmethod
    def linear(cls, coeffs: Iterable[int]):
        """``sum c_i x_i`` from a coefficient vector."""
        coeffs = tuple(coeffs)
        n = len(coeffs)
        return cls(n, {tuple(int(k == i) for k in range(n)): c for i, c in enumerate(coeffs)})

    # inspection

    @property
    def terms(self) -> dict[Exponents, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def constant_term(self) -> int:
        return self._terms.get((0,) * self.nvars, 0)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = {sum(e) for e in self._terms}
        if degree is None:
            return len(degs) <= 1
        return degs <= {degree}

    def has_nonnegative_coefficients(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def to_json(self) -> list[dict]:
        """Terms as ``{"exponents": [...], "coeff": c}``, sorted by exponent vector."""
        return [{"exponents": list(e), "coeff": c} for e, c in sorted(self._terms.items())]

    @classmethod
    def from_json(cls, nvars: int, data: list[dict]):
        return cls(nvars, {tuple(d["exponents"]): int(d["coeff"]) for d in data})

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, int):
            return type(self).constant(self.nvars, other)
        if type(other) is not type(self):
            return NotImplemented
        if other.nvars != self.nvars:
            raise ValueError("polynomials over different variable sets")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return type(self)(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return type(self)(self.nvars, {e: c * other for e, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exponents, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return type(self)(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = type(self).one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def substitute(self, images):
        """Ring homomorphism sending variable i to ``images[i-1]``."""
        out = type(self).zero(self.nvars)
        powers: dict[tuple[int, int], Polynomial] = {}
        for e, c in self._terms.items():
            term = type(self).constant(self.nvars, c)
            for i, k in enumerate(e):
                if k:
                    key = (i, k)
                    if key not in powers:
                        powers[key] = images[i] ** k
                    term = term * powers[key]
            out = out + term
        return out

    def divide_by_variable(self, i: int):
        """Exact quotient by ``x_i``; raises ArithmeticError if not divisible."""
        out = {}
        for e, c in self._terms.items():
            if e[i - 1] == 0:
                raise ArithmeticError(f"{self} is not divisible by {self.prefix}{i}")
            e = list(e)
            e[i - 1] -= 1
            out[tuple(e)] = c
        return type(self)(self.nvars, out)

    def evaluate_at_zero(self) -> int:
        return self.constant_term()

    # comparison / display

    def __eq__(self, other):
        if isinstance(other, int):
            return self == type(self).constant(self.nvars, other)
        if type(other) is not type(self):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"{type(self).__name__}({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), key=lambda ec: (-sum(ec[0]), tuple(-k for k in ec[0]))):
            mono = "*".join(
                f"{self.prefix}{i + 1}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


class WeightPolynomial(Polynomial):
    """Polynomial in the torus variables t_1..t_n."""

    __slots__ = ()
    prefix = "t"

    def to_root(self) -> RootPolynomial:
        return RootPolynomial(self.nvars, self._terms)


class RootPolynomial(Polynomial):
    """Polynomial in the simple roots a_1..a_n."""

    __slots__ = ()
    prefix = "a"

    def to_weight(self) -> WeightPolynomial:
        return WeightPolynomial(self.nvars, self._terms)
