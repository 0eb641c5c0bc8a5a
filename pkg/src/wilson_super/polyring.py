"""Sparse multivariate polynomials over arbitrary-precision integers.

Variables are x1, x2, x3, ... (indices start at 1). Each monomial is
identified with the integer partition that lists every variable index once
per power, so x1^2*x3 corresponds to (1, 1, 3); the partition order of a
polynomial is the largest weight among its monomials' partitions, with the
zero polynomial given order 0.

Internally a monomial is encoded as a product of primes (xi maps to the i-th
prime), which turns monomial multiplication into machine-integer
multiplication inside the hot loops. Values are immutable; all operations
return new polynomials, and finished values are safe to share across
threads.
"""

from __future__ import annotations

import json
import re
import threading
from typing import Iterable, Iterator, Mapping, Sequence

__all__ = ["IntPoly", "ArityError"]


class ArityError(ValueError):
    """A substitution or evaluation did not supply every variable used."""


# -- monomial codes ---------------------------------------------------------
#
# _PRIMES[i-1] is the prime standing for variable xi. The list grows on
# demand under a lock; codes built from it factor only over it, so decoding
# is trial division. Both caches may be read concurrently without locking
# (worst case is duplicate work, never a wrong entry).

_PRIMES: list[int] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]
_PRIMES_LOCK = threading.Lock()

_DECODE: dict[int, tuple[tuple[int, int], ...]] = {1: ()}


def _extend_primes(count: int) -> None:
    with _PRIMES_LOCK:
        candidate = _PRIMES[-1]
        while len(_PRIMES) < count:
            candidate += 2
            if all(candidate % q for q in _PRIMES if q * q <= candidate):
                _PRIMES.append(candidate)


def _prime_for(var: int) -> int:
    if var > len(_PRIMES):
        _extend_primes(var)
    return _PRIMES[var - 1]


def _encode(exps: Mapping[int, int]) -> int:
    """Monomial code for an exponent map {variable index: exponent}."""
    code = 1
    for var, exp in exps.items():
        if var < 1:
            raise ValueError(f"variable indices start at 1: {var}")
        if exp < 0:
            raise ValueError(f"exponents must be nonnegative: {exp}")
        if exp:
            code *= _prime_for(var) ** exp
    return code


def _decode(code: int) -> tuple[tuple[int, int], ...]:
    """Sorted ((variable, exponent), ...) pairs for a monomial code."""
    pairs = _DECODE.get(code)
    if pairs is None:
        rest = code
        found: list[tuple[int, int]] = []
        for var, q in enumerate(_PRIMES, start=1):
            if rest == 1:
                break
            exp = 0
            while rest % q == 0:
                rest //= q
                exp += 1
            if exp:
                found.append((var, exp))
        if rest != 1:
            raise ValueError(f"not a monomial code: {code}")
        pairs = tuple(found)
        _DECODE[code] = pairs
    return pairs


def _code_partition(code: int) -> tuple[int, ...]:
    """Ascending partition naming the monomial, e.g. x1^2*x3 -> (1, 1, 3)."""
    out: list[int] = []
    for var, exp in _decode(code):
        out.extend([var] * exp)
    return tuple(out)


def _code_weight(code: int) -> int:
    return sum(var * exp for var, exp in _decode(code))


def _order_key(code: int) -> tuple[int, tuple[int, ...]]:
    # graded by partition weight, ties broken lexicographically by the
    # ascending partition
    part = _code_partition(code)
    return (sum(part), part)


# -- in-place helpers on raw term dicts -------------------------------------


def _add_scaled(acc: dict[int, int], terms: dict[int, int], scale: int) -> None:
    """acc += scale * terms, leaving possible zero entries in acc."""
    if not scale:
        return
    get = acc.get
    for code, coef in terms.items():
        acc[code] = get(code, 0) + scale * coef


def _mul_acc(acc: dict[int, int], a: dict[int, int], b: dict[int, int], scale: int) -> None:
    """acc += scale * a * b, leaving possible zero entries in acc."""
    if not scale or not a or not b:
        return
    if len(a) > len(b):
        a, b = b, a
    get = acc.get
    b_items = list(b.items())
    for code_a, coef_a in a.items():
        ca = scale * coef_a
        for code_b, coef_b in b_items:
            key = code_a * code_b
            acc[key] = get(key, 0) + ca * coef_b


def _strip_zeros(acc: dict[int, int]) -> dict[int, int]:
    return {code: coef for code, coef in acc.items() if coef}


# -- text format -------------------------------------------------------------

_TERM_RE = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?P<coef>\d+)?
        (?P<vars>(?:\s*\*?\s*x\d+(?:\^\d+)?)*)
        \s*""",
    re.VERBOSE,
)
_FACTOR_RE = re.compile(r"x(\d+)(?:\^(\d+))?")


class IntPoly:
    """Immutable sparse polynomial with integer coefficients.

    Build values with the classmethods (variable, constant, monomial,
    from_terms) and combine them with +, -, * and ** as usual:

        f = 2 * IntPoly.variable(1) - IntPoly.variable(1) ** 2
    """

    __slots__ = ("_terms", "_hash", "_order")

    def __init__(self, terms: Iterable[tuple[Mapping[int, int], int]] = ()):
        acc: dict[int, int] = {}
        for exps, coef in terms:
            code = _encode(exps)
            acc[code] = acc.get(code, 0) + coef
        object.__setattr__(self, "_terms", _strip_zeros(acc))
        object.__setattr__(self, "_hash", None)
        object.__setattr__(self, "_order", None)

    # construction ----------------------------------------------------------

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> "IntPoly":
        """Wrap an already-canonical code->coefficient dict without copying."""
        poly = cls.__new__(cls)
        object.__setattr__(poly, "_terms", terms)
        object.__setattr__(poly, "_hash", None)
        object.__setattr__(poly, "_order", None)
        return poly

    @classmethod
    def zero(cls) -> "IntPoly":
        return cls._raw({})

    @classmethod
    def one(cls) -> "IntPoly":
        return cls._raw({1: 1})

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls._raw({1: c} if c else {})

    @classmethod
    def variable(cls, var: int) -> "IntPoly":
        if var < 1:
            raise ValueError(f"variable indices start at 1: {var}")
        return cls._raw({_prime_for(var): 1})

    @classmethod
    def monomial(cls, exps: Mapping[int, int], coef: int = 1) -> "IntPoly":
        if not coef:
            return cls.zero()
        return cls._raw({_encode(exps): coef})

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[Mapping[int, int], int]]) -> "IntPoly":
        return cls(terms)

    # inspection -------------------------------------------------------------

    @property
    def term_count(self) -> int:
        """Number of monomials with nonzero coefficient."""
        return len(self._terms)

    @property
    def partition_order(self) -> int:
        """Largest monomial weight sum(i * e_i); 0 for the zero polynomial."""
        order = self._order
        if order is None:
            order = max(map(_code_weight, self._terms), default=0)
            object.__setattr__(self, "_order", order)
        return order

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def constant_term(self) -> int:
        return self._terms.get(1, 0)

    def coefficient(self, exps: Mapping[int, int]) -> int:
        """Coefficient of the monomial with the given exponent map."""
        return self._terms.get(_encode(exps), 0)

    def max_variable(self) -> int:
        """Largest variable index used; 0 if none."""
        best = 0
        for code in self._terms:
            for var, _ in _decode(code):
                if var > best:
                    best = var
        return best

    def variables(self) -> list[int]:
        """Sorted list of variable indices that occur."""
        seen: set[int] = set()
        for code in self._terms:
            for var, _ in _decode(code):
                seen.add(var)
        return sorted(seen)

    def sorted_codes(self) -> list[int]:
        """Internal monomial codes in canonical term order."""
        return sorted(self._terms, key=_order_key)

    def terms(self) -> Iterator[tuple[dict[int, int], int]]:
        """(exponent map, coefficient) pairs in canonical term order."""
        for code in self.sorted_codes():
            yield dict(_decode(code)), self._terms[code]

    def partition_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """(ascending partition, coefficient) pairs in canonical term order."""
        return [(_code_partition(code), self._terms[code]) for code in self.sorted_codes()]

    def coefficient_map(self) -> dict[tuple[int, ...], int]:
        """Partition -> coefficient dict (the comparison form for tables)."""
        return {_code_partition(code): coef for code, coef in self._terms.items()}

    # arithmetic -------------------------------------------------------------

    def __add__(self, other: "IntPoly | int") -> "IntPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self._terms)
        _add_scaled(acc, other._terms, 1)
        return IntPoly._raw(_strip_zeros(acc))

    __radd__ = __add__

    def __sub__(self, other: "IntPoly | int") -> "IntPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self._terms)
        _add_scaled(acc, other._terms, -1)
        return IntPoly._raw(_strip_zeros(acc))

    def __rsub__(self, other: "IntPoly | int") -> "IntPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self) -> "IntPoly":
        return IntPoly._raw({code: -coef for code, coef in self._terms.items()})

    def __mul__(self, other: "IntPoly | int") -> "IntPoly":
        if isinstance(other, int):
            if not other:
                return IntPoly.zero()
            return IntPoly._raw({code: coef * other for code, coef in self._terms.items()})
        if not isinstance(other, IntPoly):
            return NotImplemented
        acc: dict[int, int] = {}
        _mul_acc(acc, self._terms, other._terms, 1)
        return IntPoly._raw(_strip_zeros(acc))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "IntPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"exponent must be a nonnegative integer: {exponent!r}")
        if exponent == 0:
            return IntPoly.one()
        if len(self._terms) == 1:
            ((code, coef),) = self._terms.items()
            return IntPoly._raw({code**exponent: coef**exponent})
        result = self
        for _ in range(exponent - 1):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPoly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({1: other} if other else {})
        return NotImplemented

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash(frozenset(self._terms.items()))
            object.__setattr__(self, "_hash", h)
        return h

    # substitution and evaluation --------------------------------------------

    def _require_arity(self, supplied: int, what: str) -> None:
        need = self.max_variable()
        if supplied < need:
            raise ArityError(f"{what} needs {need} values for x1..x{need}, got {supplied}")

    def substitute(self, args: Sequence["IntPoly"]) -> "IntPoly":
        """Replace each xi by args[i-1]; args must cover every variable used."""
        self._require_arity(len(args), "substitute")
        powers: dict[tuple[int, int], IntPoly] = {}

        def power(var: int, exp: int) -> IntPoly:
            value = powers.get((var, exp))
            if value is None:
                value = args[var - 1] ** exp
                powers[(var, exp)] = value
            return value

        acc: dict[int, int] = {}
        for code, coef in self._terms.items():
            pairs = _decode(code)
            if not pairs:
                acc[1] = acc.get(1, 0) + coef
                continue
            factors = sorted(
                (power(var, exp) for var, exp in pairs),
                key=lambda f: f.partition_order,
                reverse=True,
            )
            product = factors[0]
            for factor in factors[1:-1]:
                product = product * factor
            if len(factors) > 1:
                _mul_acc(acc, product._terms, factors[-1]._terms, coef)
            else:
                _add_scaled(acc, product._terms, coef)
        return IntPoly._raw(_strip_zeros(acc))

    def eval_int(self, point: Sequence[int]) -> int:
        """Exact value at integer arguments (point[i-1] for xi)."""
        self._require_arity(len(point), "eval_int")
        total = 0
        for code, coef in self._terms.items():
            value = coef
            for var, exp in _decode(code):
                value *= point[var - 1] ** exp
            total += value
        return total

    def eval_mod(self, point: Sequence[int], modulus: int) -> int:
        """Value at integer arguments reduced modulo modulus."""
        if modulus < 1:
            raise ValueError(f"modulus must be positive: {modulus}")
        self._require_arity(len(point), "eval_mod")
        total = 0
        for code, coef in self._terms.items():
            value = coef % modulus
            for var, exp in _decode(code):
                value = value * pow(point[var - 1], exp, modulus) % modulus
            total = (total + value) % modulus
        return total

    # serialization ----------------------------------------------------------

    def to_text(self) -> str:
        """Canonical text form, e.g. '2*x1 - x1^2 - x2'; '0' for zero."""
        if not self._terms:
            return "0"
        chunks: list[str] = []
        for code in self.sorted_codes():
            coef = self._terms[code]
            body = _render_monomial(code, abs(coef))
            if not chunks:
                chunks.append(f"-{body}" if coef < 0 else body)
            else:
                chunks.append(f"- {body}" if coef < 0 else f"+ {body}")
        return " ".join(chunks)

    @classmethod
    def from_text(cls, text: str) -> "IntPoly":
        """Parse the to_text format (also accepts redundant whitespace)."""
        stripped = text.strip()
        if not stripped:
            raise ValueError("empty polynomial text")
        if stripped == "0":
            return cls.zero()
        acc: dict[int, int] = {}
        pos = 0
        first = True
        while pos < len(stripped):
            match = _TERM_RE.match(stripped, pos)
            if not match or match.end() == pos:
                raise ValueError(f"cannot parse polynomial text at: {stripped[pos:]!r}")
            sign, coef_text, vars_text = match.group("sign", "coef", "vars")
            if sign is None and not first:
                raise ValueError(f"missing sign before: {stripped[match.start():]!r}")
            if coef_text is None and not vars_text.strip():
                raise ValueError(f"empty term in: {text!r}")
            coef = int(coef_text) if coef_text is not None else 1
            if sign == "-":
                coef = -coef
            exps: dict[int, int] = {}
            for factor in _FACTOR_RE.finditer(vars_text):
                var = int(factor.group(1))
                exp = int(factor.group(2) or 1)
                exps[var] = exps.get(var, 0) + exp
            code = _encode(exps)
            acc[code] = acc.get(code, 0) + coef
            pos = match.end()
            first = False
        return cls._raw(_strip_zeros(acc))

    def to_json_terms(self) -> list[dict[str, object]]:
        """Term list for JSON: [{"exps": {"1": 2}, "coef": "-36"}, ...]."""
        out: list[dict[str, object]] = []
        for code in self.sorted_codes():
            exps = {str(var): exp for var, exp in _decode(code)}
            out.append({"exps": exps, "coef": str(self._terms[code])})
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_json_terms(), separators=(",", ":"))

    @classmethod
    def from_json_terms(cls, terms: Iterable[Mapping[str, object]]) -> "IntPoly":
        acc: dict[int, int] = {}
        for term in terms:
            exps = {int(var): int(exp) for var, exp in term["exps"].items()}  # type: ignore[union-attr]
            coef = int(term["coef"])  # type: ignore[arg-type]
            code = _encode(exps)
            acc[code] = acc.get(code, 0) + coef
        return cls._raw(_strip_zeros(acc))

    @classmethod
    def from_json(cls, text: str) -> "IntPoly":
        return cls.from_json_terms(json.loads(text))

    def to_latex(self) -> str:
        """LaTeX form, e.g. '2 x_1 - x_1^2 - x_2'; '0' for zero."""
        if not self._terms:
            return "0"
        chunks: list[str] = []
        for code in self.sorted_codes():
            coef = self._terms[code]
            body = _render_monomial_latex(code, abs(coef))
            if not chunks:
                chunks.append(f"-{body}" if coef < 0 else body)
            else:
                chunks.append(f"- {body}" if coef < 0 else f"+ {body}")
        return " ".join(chunks)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"IntPoly({self.to_text()!r})"


def _coerce(value: "IntPoly | int") -> "IntPoly":
    if isinstance(value, IntPoly):
        return value
    if isinstance(value, int):
        return IntPoly.constant(value)
    return NotImplemented  # type: ignore[return-value]


def _render_monomial(code: int, magnitude: int) -> str:
    pairs = _decode(code)
    if not pairs:
        return str(magnitude)
    factors = [f"x{var}^{exp}" if exp > 1 else f"x{var}" for var, exp in pairs]
    if magnitude != 1:
        factors.insert(0, str(magnitude))
    return "*".join(factors)


def _latex_sub(var: int) -> str:
    return f"x_{var}" if var < 10 else f"x_{{{var}}}"


def _render_monomial_latex(code: int, magnitude: int) -> str:
    pairs = _decode(code)
    if not pairs:
        return str(magnitude)
    factors = []
    for var, exp in pairs:
        base = _latex_sub(var)
        if exp > 1:
            base += f"^{exp}" if exp < 10 else f"^{{{exp}}}"
        factors.append(base)
    body = " ".join(factors)
    return body if magnitude == 1 else f"{magnitude} {body}"
