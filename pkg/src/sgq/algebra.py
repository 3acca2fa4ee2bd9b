"""Free supercommutative rings Q(i)[x_1..x_p] (x) Lambda[t_1..t_q].

Elements are stored sparsely as a map

    (exponent vector over the even generators, strictly increasing tuple of
     odd-generator indices)  ->  nonzero GaussianRational coefficient.

The odd part of every stored monomial is in normal order (strictly
increasing indices) with the reordering sign already absorbed into the
coefficient, so structural equality of the term maps is equality of ring
elements.  A product of odd monomials sharing a generator is zero.

All values are immutable; every operation returns a fresh element.
"""

from __future__ import annotations

from typing import Dict, Iterable, Mapping, Optional, Tuple

from .errors import NotInvertible, ParityViolation, RingMismatch, UnknownVariable
from .scalars import GaussianRational

TermKey = Tuple[Tuple[int, ...], Tuple[int, ...]]


def merge_odd(left: Tuple[int, ...], right: Tuple[int, ...]):
    """Merge two normal-ordered odd index tuples.

    Returns (sign, merged) where sign is the Koszul sign of the interleaving,
    or None when an index repeats (the product vanishes).
    """
    if not left:
        return 1, right
    if not right:
        return 1, left
    merged = []
    inversions = 0
    i = j = 0
    while i < len(left) and j < len(right):
        a, b = left[i], right[j]
        if a == b:
            return None
        if a < b:
            merged.append(a)
            i += 1
        else:
            # b jumps over the remaining factors of `left`
            inversions += len(left) - i
            merged.append(b)
            j += 1
    merged.extend(left[i:])
    merged.extend(right[j:])
    sign = -1 if inversions % 2 else 1
    return sign, tuple(merged)


def accumulate_product(dest: Dict[TermKey, GaussianRational],
                       left: Mapping[TermKey, GaussianRational],
                       right: Mapping[TermKey, GaussianRational]) -> None:
    """Add the term-map product left * right into dest, dropping zeros."""
    for (exp1, odd1), c1 in left.items():
        for (exp2, odd2), c2 in right.items():
            merged = merge_odd(odd1, odd2)
            if merged is None:
                continue
            sign, odd = merged
            exp = tuple(a + b for a, b in zip(exp1, exp2))
            coeff = c1 * c2
            if sign < 0:
                coeff = -coeff
            key = (exp, odd)
            acc = dest.get(key)
            total = coeff if acc is None else acc + coeff
            if total:
                dest[key] = total
            elif acc is not None:
                del dest[key]


class SuperRing:
    """A free supercommutative ring, fixed by its ordered generator names."""

    __slots__ = ("even_vars", "odd_vars", "_even_index", "_odd_index")

    def __init__(self, even_vars: Iterable[str] = (), odd_vars: Iterable[str] = ()):
        even = tuple(even_vars)
        odd = tuple(odd_vars)
        names = even + odd
        if len(set(names)) != len(names):
            raise ValueError(f"generator names must be distinct: {names}")
        object.__setattr__(self, "even_vars", even)
        object.__setattr__(self, "odd_vars", odd)
        object.__setattr__(self, "_even_index", {v: k for k, v in enumerate(even)})
        object.__setattr__(self, "_odd_index", {v: k for k, v in enumerate(odd)})

    def __setattr__(self, name, value):
        raise AttributeError("SuperRing is immutable")

    @property
    def n_even(self) -> int:
        return len(self.even_vars)

    @property
    def n_odd(self) -> int:
        return len(self.odd_vars)

    def __eq__(self, other):
        if not isinstance(other, SuperRing):
            return NotImplemented
        return self.even_vars == other.even_vars and self.odd_vars == other.odd_vars

    def __hash__(self):
        return hash((self.even_vars, self.odd_vars))

    def __repr__(self):
        return f"SuperRing(even={list(self.even_vars)}, odd={list(self.odd_vars)})"

    # -- element constructors ------------------------------------------------

    def element(self, terms: Mapping[TermKey, GaussianRational]) -> "SuperElement":
        """Build an element from raw term data; odd tuples must already be
        strictly increasing (normal order), zero coefficients are dropped."""
        clean: Dict[TermKey, GaussianRational] = {}
        for (exp, odd), coeff in terms.items():
            exp = tuple(exp)
            odd = tuple(odd)
            if len(exp) != self.n_even or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent vector {exp} for ring with {self.n_even} even generators")
            if any(odd[k] >= odd[k + 1] for k in range(len(odd) - 1)):
                raise ValueError(f"odd index tuple {odd} is not strictly increasing")
            if odd and (odd[0] < 0 or odd[-1] >= self.n_odd):
                raise ValueError(f"odd index tuple {odd} out of range for {self.n_odd} odd generators")
            coeff = GaussianRational.coerce(coeff)
            if coeff:
                clean[(exp, odd)] = coeff
        return SuperElement(self, clean)

    def zero(self) -> "SuperElement":
        return SuperElement(self, {})

    def scalar(self, value) -> "SuperElement":
        coeff = GaussianRational.coerce(value)
        if not coeff:
            return self.zero()
        return SuperElement(self, {((0,) * self.n_even, ()): coeff})

    def one(self) -> "SuperElement":
        return self.scalar(1)

    def imaginary_unit(self) -> "SuperElement":
        return self.scalar(GaussianRational(0, 1))

    def gen(self, name: str) -> "SuperElement":
        """The generator with the given name, as an element."""
        if name in self._even_index:
            exp = [0] * self.n_even
            exp[self._even_index[name]] = 1
            return SuperElement(self, {(tuple(exp), ()): GaussianRational(1)})
        if name in self._odd_index:
            return SuperElement(self, {((0,) * self.n_even, (self._odd_index[name],)): GaussianRational(1)})
        raise UnknownVariable(f"{name!r} is not a generator of {self!r}")

    def gens(self) -> Dict[str, "SuperElement"]:
        return {name: self.gen(name) for name in self.even_vars + self.odd_vars}

    def parity_of_var(self, name: str) -> int:
        if name in self._even_index:
            return 0
        if name in self._odd_index:
            return 1
        raise UnknownVariable(f"{name!r} is not a generator of {self!r}")


class SuperElement:
    """An element of a SuperRing in canonical sparse form."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: SuperRing, terms: Dict[TermKey, GaussianRational]):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", terms)

    def __setattr__(self, name, value):
        raise AttributeError("SuperElement is immutable")

    # -- structure -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {((0,) * self.ring.n_even, ()): GaussianRational(1)}

    def parity(self) -> Optional[int]:
        """0 or 1 for a homogeneous nonzero element, None for a mixed one.

        The zero element reports parity 0 by convention but also passes
        has_parity() for both parities.
        """
        parities = {len(odd) % 2 for (_, odd) in self.terms}
        if len(parities) > 1:
            return None
        return parities.pop() if parities else 0

    def has_parity(self, parity: int) -> bool:
        return all(len(odd) % 2 == parity for (_, odd) in self.terms)

    def is_even(self) -> bool:
        return self.has_parity(0)

    def is_odd(self) -> bool:
        return self.has_parity(1)

    def body(self) -> "SuperElement":
        """The image under setting every odd generator to zero."""
        return SuperElement(self.ring, {k: c for k, c in self.terms.items() if not k[1]})

    def soul(self) -> "SuperElement":
        return SuperElement(self.ring, {k: c for k, c in self.terms.items() if k[1]})

    def constant_value(self) -> Optional[GaussianRational]:
        """The scalar value if the element is a constant, else None."""
        if not self.terms:
            return GaussianRational(0)
        if len(self.terms) == 1:
            (exp, odd), coeff = next(iter(self.terms.items()))
            if odd == () and all(e == 0 for e in exp):
                return coeff
        return None

    def is_unit(self) -> bool:
        """True when the body is a nonzero constant (the only units here)."""
        value = self.body().constant_value()
        return value is not None and bool(value)

    # -- ring operations -----------------------------------------------------

    def _check_ring(self, other: "SuperElement") -> None:
        if self.ring != other.ring:
            raise RingMismatch(f"operands live in different rings: {self.ring!r} vs {other.ring!r}")

    def __add__(self, other):
        if isinstance(other, (int, GaussianRational)):
            other = self.ring.scalar(other)
        if not isinstance(other, SuperElement):
            return NotImplemented
        self._check_ring(other)
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            acc = terms.get(key)
            total = coeff if acc is None else acc + coeff
            if total:
                terms[key] = total
            elif acc is not None:
                del terms[key]
        return SuperElement(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return SuperElement(self.ring, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, GaussianRational)):
            other = self.ring.scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, GaussianRational)):
            scale = GaussianRational.coerce(other)
            if not scale:
                return self.ring.zero()
            return SuperElement(self.ring, {k: c * scale for k, c in self.terms.items()})
        if not isinstance(other, SuperElement):
            return NotImplemented
        self._check_ring(other)
        terms: Dict[TermKey, GaussianRational] = {}
        accumulate_product(terms, self.terms, other.terms)
        return SuperElement(self.ring, terms)

    def __rmul__(self, other):
        if isinstance(other, (int, GaussianRational)):
            return self * other
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inv(self) -> "SuperElement":
        """Exact inverse via the terminating geometric series.

        Requires the body to be a nonzero constant c; then a = c + s with s
        nilpotent (s^(q+1) = 0) and a^(-1) = c^(-1) * sum_k (-s/c)^k.
        """
        value = self.body().constant_value()
        if value is None or not value:
            raise NotInvertible(f"body is not a unit: {self.body()!r}")
        c_inv = value.inverse()
        correction = self.ring.scalar(c_inv) * self.soul()  # s/c, nilpotent
        result = self.ring.one()
        power = self.ring.one()
        for k in range(1, self.ring.n_odd + 1):
            power = power * correction
            if power.is_zero():
                break
            result = result + (-power if k % 2 else power)
        return self.ring.scalar(c_inv) * result

    def derivative(self, var: str) -> "SuperElement":
        """Partial derivative; left derivative for odd generators."""
        parity = self.ring.parity_of_var(var)
        terms: Dict[TermKey, GaussianRational] = {}
        if parity == 0:
            idx = self.ring._even_index[var]
            for (exp, odd), coeff in self.terms.items():
                e = exp[idx]
                if e == 0:
                    continue
                new_exp = exp[:idx] + (e - 1,) + exp[idx + 1:]
                terms[(new_exp, odd)] = coeff * e
        else:
            idx = self.ring._odd_index[var]
            for (exp, odd), coeff in self.terms.items():
                if idx not in odd:
                    continue
                pos = odd.index(idx)
                new_odd = odd[:pos] + odd[pos + 1:]
                terms[(exp, new_odd)] = -coeff if pos % 2 else coeff
        return SuperElement(self.ring, terms)

    # -- comparison and display ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.scalar(other)
        if not isinstance(other, SuperElement):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda item: item[0])

    def __repr__(self):
        if not self.terms:
            return "0"
        pieces = []
        for (exp, odd), coeff in self.sorted_terms():
            factors = []
            for name, e in zip(self.ring.even_vars, exp):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            factors.extend(self.ring.odd_vars[i] for i in odd)
            coeff_str = str(coeff)
            if factors and coeff_str == "1":
                pieces.append("*".join(factors))
            elif factors and coeff_str == "-1":
                pieces.append("-" + "*".join(factors))
            else:
                pieces.append("*".join([coeff_str] + factors))
        return " + ".join(pieces).replace("+ -", "- ")


class SuperHom:
    """A parity-preserving homomorphism given by images of the generators.

    Applying it to an element is substitution; this is exactly the data of a
    point of the source ring with values in the target.
    """

    __slots__ = ("source", "target", "images")

    def __init__(self, source: SuperRing, target: SuperRing, images: Mapping[str, SuperElement]):
        missing = set(source.even_vars + source.odd_vars) - set(images)
        if missing:
            raise UnknownVariable(f"no image given for generators {sorted(missing)}")
        extra = set(images) - set(source.even_vars + source.odd_vars)
        if extra:
            raise UnknownVariable(f"images given for non-generators {sorted(extra)}")
        for name, image in images.items():
            if image.ring != target:
                raise RingMismatch(f"image of {name!r} lives in {image.ring!r}, not the target ring")
            if not image.has_parity(source.parity_of_var(name)):
                kind = "even" if source.parity_of_var(name) == 0 else "odd"
                raise ParityViolation(f"image of {kind} variable {name!r} is not {kind}: {image!r}")
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "images", dict(images))

    def __setattr__(self, name, value):
        raise AttributeError("SuperHom is immutable")

    def __call__(self, element: SuperElement) -> SuperElement:
        if element.ring != self.source:
            raise RingMismatch("element does not live in the source ring of this homomorphism")
        even_images = [self.images[name] for name in self.source.even_vars]
        odd_images = [self.images[name] for name in self.source.odd_vars]
        total = self.target.zero()
        for (exp, odd), coeff in element.terms.items():
            prod = self.target.scalar(coeff)
            for image, e in zip(even_images, exp):
                if e:
                    prod = prod * image**e
            # odd factors are applied in normal order, matching the stored sign
            for idx in odd:
                prod = prod * odd_images[idx]
            total = total + prod
        return total
