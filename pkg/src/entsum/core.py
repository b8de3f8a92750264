"""Domains and exact-rational mass functions.

The index group is either Z/pZ for an odd prime p, represented by the
centered integers -(p-1)/2 .. (p-1)/2, or the full integer line.  Mass
functions map indices to nonnegative rationals (`fractions.Fraction`), store
no zeros, and are immutable after construction, so every operation here is a
pure function returning fresh values.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import (
    DomainMismatch,
    DuplicateIndex,
    EmptySequence,
    IndexOutOfRange,
    NegativeMass,
    NotNormalized,
    NotPrime,
    ParseError,
    ZeroCoefficient,
)

RationalLike = Union[Fraction, int, str]


def _is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Domain:
    """Index group: Z/pZ centered at 0 when ``p`` is set, Z when ``p`` is None."""

    p: int | None = None

    def __post_init__(self) -> None:
        if self.p is not None and not _is_odd_prime(self.p):
            raise NotPrime(f"modulus must be an odd prime >= 3, got {self.p}")

    @classmethod
    def cyclic(cls, p: int) -> "Domain":
        return cls(p)

    @classmethod
    def integers(cls) -> "Domain":
        return cls(None)

    @property
    def is_cyclic(self) -> bool:
        return self.p is not None

    @property
    def half(self) -> int:
        """Largest representable index, (p-1)/2."""
        if self.p is None:
            raise ValueError("integer domain has no index bound")
        return (self.p - 1) // 2

    def reduce(self, i: int) -> int:
        """Map an arbitrary integer to its centered representative."""
        if self.p is None:
            return i
        r = i % self.p
        return r - self.p if r > self.half else r

    def check_index(self, i: int) -> None:
        if self.p is not None and abs(i) > self.half:
            raise IndexOutOfRange(
                f"index {i} outside centered range [-{self.half}, {self.half}] of {self}"
            )

    def __str__(self) -> str:
        return f"Z/{self.p}Z" if self.p is not None else "Z"


def _as_fraction(v: RationalLike) -> Fraction:
    if isinstance(v, Fraction):
        return v
    return Fraction(v)


class NonnegFn:
    """Finitely supported index -> nonnegative rational map; zeros never stored."""

    __slots__ = ("domain", "_values")

    def __init__(
        self,
        domain: Domain,
        values: Mapping[int, RationalLike] | Iterable[tuple[int, RationalLike]],
    ) -> None:
        pairs = values.items() if isinstance(values, Mapping) else list(values)
        stored: dict[int, Fraction] = {}
        seen: set[int] = set()
        for i, raw in pairs:
            if not isinstance(i, int) or isinstance(i, bool):
                raise IndexOutOfRange(f"index {i!r} is not an integer")
            if i in seen:
                raise DuplicateIndex(f"index {i} listed twice")
            seen.add(i)
            domain.check_index(i)
            v = _as_fraction(raw)
            if v < 0:
                raise NegativeMass(f"mass at {i} is negative: {v}")
            if v:
                stored[i] = v
        self.domain = domain
        self._values = stored

    def indices(self) -> tuple[int, ...]:
        """Support, ascending."""
        return tuple(sorted(self._values))

    def items(self) -> list[tuple[int, Fraction]]:
        """(index, value) pairs, ascending by index."""
        return sorted(self._values.items())

    def values(self) -> list[Fraction]:
        return list(self._values.values())

    def mapping(self) -> dict[int, Fraction]:
        return dict(self._values)

    def __getitem__(self, i: int) -> Fraction:
        return self._values.get(i, Fraction(0))

    def __len__(self) -> int:
        return len(self._values)

    @property
    def is_zero(self) -> bool:
        return not self._values

    def total(self) -> Fraction:
        return sum(self._values.values(), Fraction(0))

    def max_value(self) -> Fraction:
        if not self._values:
            raise EmptySequence("zero function has no maximum value")
        return max(self._values.values())

    def __add__(self, other: "NonnegFn") -> "NonnegFn":
        if not isinstance(other, NonnegFn):
            return NotImplemented
        if self.domain != other.domain:
            raise DomainMismatch(f"{self.domain} vs {other.domain}")
        out = dict(self._values)
        for i, v in other._values.items():
            out[i] = out.get(i, Fraction(0)) + v
        return NonnegFn(self.domain, out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NonnegFn):
            return NotImplemented
        return self.domain == other.domain and self._values == other._values

    def __hash__(self):
        return hash((self.domain, tuple(sorted(self._values.items()))))

    def __repr__(self) -> str:
        body = ", ".join(f"{i}: {v}" for i, v in self.items())
        return f"{type(self).__name__}({self.domain}, {{{body}}})"


class Pmf(NonnegFn):
    """A NonnegFn whose values sum to exactly 1."""

    __slots__ = ()

    def __init__(self, domain, values) -> None:
        super().__init__(domain, values)
        t = self.total()
        if t != 1:
            raise NotNormalized(f"mass sums to {t}, expected 1")


def make_pmf(
    domain: Domain, entries: Iterable[tuple[int, RationalLike]]
) -> Pmf:
    """Build a PMF from (index, rational) pairs; zero entries are dropped."""
    return Pmf(domain, entries)


def delta(domain: Domain, i: int = 0) -> Pmf:
    """Point mass at ``i``."""
    return Pmf(domain, {i: Fraction(1)})


def uniform_on(domain: Domain, indices: Iterable[int]) -> Pmf:
    """Uniform PMF on a nonempty set of indices."""
    idx = sorted(set(indices))
    if not idx:
        raise EmptySequence("uniform distribution needs a nonempty set")
    w = Fraction(1, len(idx))
    return Pmf(domain, {i: w for i in idx})


def _same_kind(template: NonnegFn, domain: Domain, values) -> NonnegFn:
    """Rebuild with the same class as ``template`` (Pmf stays Pmf)."""
    return type(template)(domain, values)


def translate(f: NonnegFn, c: int) -> NonnegFn:
    """Shift so that the result g satisfies f(i + c) = g(i) for every i."""
    f.domain.check_index(c)
    if c == 0:
        return f
    dom = f.domain
    return _same_kind(f, dom, {dom.reduce(j - c): v for j, v in f.mapping().items()})


def circular_shift_between(f: NonnegFn, g: NonnegFn) -> int | None:
    """Find c with f(i + c) = g(i) for all i, or None.

    On a cyclic domain the smallest-magnitude c is returned, preferring the
    positive one on ties.  On the integers the candidate shift is pinned by
    the support endpoints.
    """
    if f.domain != g.domain:
        raise DomainMismatch(f"{f.domain} vs {g.domain}")
    if f.domain.is_cyclic:
        h = f.domain.half
        for mag in range(h + 1):
            for c in ((mag,) if mag == 0 else (mag, -mag)):
                if translate(f, c) == g:
                    return c
        return None
    if f.is_zero and g.is_zero:
        return 0
    if f.is_zero or g.is_zero:
        return None
    c = min(f.indices()) - min(g.indices())
    return c if translate(f, c) == g else None


def scale_index(f: NonnegFn, a: int) -> NonnegFn:
    """Distribution of a*X when f is the distribution of X.

    Re-indexing is bijective on Z/pZ for a not divisible by p, and injective
    on Z for a != 0, so the multiset of mass values never changes.
    """
    if a == 0:
        raise ZeroCoefficient("coefficient must be nonzero")
    dom = f.domain
    if dom.is_cyclic and a % dom.p == 0:
        raise ZeroCoefficient(f"coefficient {a} is divisible by {dom.p}")
    return _same_kind(f, dom, {dom.reduce(a * i): v for i, v in f.mapping().items()})


def mirror(f: NonnegFn) -> NonnegFn:
    """Reflection through 0, the distribution of -X."""
    return scale_index(f, -1)


# ---------------------------------------------------------------------------
# Canonical text serialization
#
# {"domain": {"kind": "cyclic", "p": 17} | {"kind": "integers"},
#  "pmf": [[index, "num/den"], ...]}
# with rationals always "num/den" in lowest terms and indices ascending.
# ---------------------------------------------------------------------------


def mass_to_obj(f: NonnegFn) -> dict:
    if f.domain.is_cyclic:
        dom = {"kind": "cyclic", "p": f.domain.p}
    else:
        dom = {"kind": "integers"}
    return {
        "domain": dom,
        "pmf": [[i, f"{v.numerator}/{v.denominator}"] for i, v in f.items()],
    }


def mass_to_json(f: NonnegFn) -> str:
    return json.dumps(mass_to_obj(f), separators=(", ", ": "))


def _domain_from_obj(obj) -> Domain:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ParseError(f"bad domain object: {obj!r}")
    kind = obj["kind"]
    if kind == "cyclic":
        p = obj.get("p")
        if not isinstance(p, int):
            raise ParseError(f"cyclic domain needs an integer p, got {p!r}")
        return Domain.cyclic(p)
    if kind == "integers":
        return Domain.integers()
    raise ParseError(f"unknown domain kind {kind!r}")


def _entries_from_obj(obj) -> list[tuple[int, Fraction]]:
    if not isinstance(obj, list):
        raise ParseError("'pmf' must be a list of [index, value] pairs")
    entries = []
    for item in obj:
        if not (isinstance(item, (list, tuple)) and len(item) == 2):
            raise ParseError(f"bad entry {item!r}")
        i, raw = item
        if not isinstance(i, int) or isinstance(i, bool):
            raise ParseError(f"bad index {i!r}")
        try:
            v = Fraction(raw) if isinstance(raw, str) else Fraction(raw)
        except (ValueError, ZeroDivisionError, TypeError) as exc:
            raise ParseError(f"bad rational {raw!r}") from exc
        entries.append((i, v))
    return entries


def mass_from_obj(obj) -> NonnegFn:
    if not isinstance(obj, dict):
        raise ParseError("expected a JSON object")
    if "domain" not in obj or "pmf" not in obj:
        raise ParseError("object needs 'domain' and 'pmf' keys")
    return NonnegFn(_domain_from_obj(obj["domain"]), _entries_from_obj(obj["pmf"]))


def pmf_from_obj(obj) -> Pmf:
    f = mass_from_obj(obj)
    return Pmf(f.domain, f.mapping())


def mass_from_json(text: str) -> NonnegFn:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return mass_from_obj(obj)


def pmf_from_json(text: str) -> Pmf:
    f = mass_from_json(text)
    return Pmf(f.domain, f.mapping())


def common_domain(fs: Iterable[NonnegFn]) -> Domain:
    fs = list(fs)
    if not fs:
        raise EmptySequence("need at least one operand")
    dom = fs[0].domain
    for f in fs[1:]:
        if f.domain != dom:
            raise DomainMismatch(f"{dom} vs {f.domain}")
    return dom
