# Copyright: (c) 2024, Jordan Borean (@jborean93) <jborean93@gmail.com>
# MIT License (see LICENSE or https://opensource.org/licenses/MIT)

"""Exact integer helpers: p-adic valuations, square-free testing and finite field counts.

Integer factoring uses trial division up to the configured bound followed by Pollard rho with a fixed seed. When the
randomized step gives up, :class:`montes_lite.exceptions.FactoringBudgetExceeded` is raised and the caller has to
supply a :class:`FactoredInteger` instead.
"""

import collections
import dataclasses
import logging
import re
import typing

from sympy import factorint, integer_nthroot, isprime, oo
from sympy.core.numbers import Infinity
from sympy.ntheory import divisors, multiplicity, pollard_rho, primerange

from montes_lite._config import DEFAULT_BUDGET, FactoringBudget, get_seed
from montes_lite.exceptions import DomainError, FactoringBudgetExceeded, OutOfRangeError

log = logging.getLogger(__name__)

Valuation = typing.Union[int, Infinity]

#: The valuation of zero, compares greater than every finite valuation.
INFINITY: Infinity = oo


@dataclasses.dataclass(frozen=True)
class FactoredInteger:
    """A non-zero integer stored as sign and prime powers.

    Attributes:
        sign: Either 1 or -1.
        prime_powers: The ``(prime, exponent)`` pairs ordered by strictly increasing prime.
    """

    sign: int
    prime_powers: typing.Tuple[typing.Tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise DomainError(context_msg="sign must be 1 or -1, got %s" % self.sign)

        previous = 1
        for prime, exponent in self.prime_powers:
            if prime <= previous:
                raise DomainError(context_msg="primes must be strictly increasing, got %s" % (self.prime_powers,))

            if exponent < 1:
                raise DomainError(context_msg="exponent of %d must be at least 1" % prime)

            previous = prime

    @property
    def value(self) -> int:
        """The integer this factorization reconstructs."""
        value = self.sign
        for prime, exponent in self.prime_powers:
            value *= prime**exponent

        return value

    @property
    def primes(self) -> typing.Tuple[int, ...]:
        return tuple(p for p, _ in self.prime_powers)

    @property
    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.prime_powers)

    @classmethod
    def from_string(
        cls,
        text: str,
        sign: int = 1,
    ) -> "FactoredInteger":
        """Parses a factorization like ``2*3^2*7``.

        Every base is checked with a probable prime test, ``1`` denotes the empty product.

        Args:
            text: The ``*`` separated list of ``prime[^exponent]`` factors.
            sign: The sign of the integer.

        Returns:
            FactoredInteger: The parsed factorization.
        """
        powers: typing.Dict[int, int] = collections.defaultdict(int)

        for entry in text.split("*"):
            entry = entry.strip()
            match = re.match(r"^(\d+)(?:\s*\^\s*(\d+))?$", entry)
            if not match:
                raise DomainError(context_msg="invalid factor '%s' in '%s'" % (entry, text))

            base = int(match.group(1))
            exponent = int(match.group(2) or 1)
            if base == 1:
                continue

            if not isprime(base):
                raise DomainError(context_msg="factor %d in '%s' is not a prime" % (base, text))

            powers[base] += exponent

        return cls(sign=sign, prime_powers=tuple(sorted((p, e) for p, e in powers.items() if e)))


def vp(p: int, n: int) -> Valuation:
    """The p-adic valuation of n, :data:`INFINITY` when n is zero."""
    if n == 0:
        return INFINITY

    return int(multiplicity(p, abs(n)))


def vp_binomial(p: int, r: int, j: int) -> int:
    """The p-adic valuation of the binomial coefficient ``C(p^r, j)``.

    For ``1 <= j <= p^r - 1`` this is ``r - v_p(j)`` so the big binomial coefficient never needs to be built.

    Args:
        p: The prime.
        r: The exponent of the prime power, at least 1.
        j: The lower index.

    Returns:
        int: The valuation.
    """
    if r < 1 or not 1 <= j <= p**r - 1:
        raise OutOfRangeError(context_msg="j=%d must lie in 1..%d^%d-1" % (j, p, r))

    return r - int(vp(p, j))


def canonical_residue(m: int, modulus: int) -> int:
    if modulus < 2:
        raise DomainError(context_msg="modulus must be at least 2, got %d" % modulus)

    return m % modulus


def factor_integer(
    n: int,
    budget: FactoringBudget = DEFAULT_BUDGET,
) -> FactoredInteger:
    """Fully factors a non-zero integer within the factoring budget.

    Args:
        n: The integer to factor.
        budget: How much effort may be spent.

    Returns:
        FactoredInteger: The factorization of n.
    """
    if n == 0:
        raise DomainError(context_msg="cannot factor 0")

    remaining = abs(n)
    powers: typing.Dict[int, int] = collections.Counter()

    exhausted = True
    for prime in primerange(2, budget.trial_limit + 1):
        if prime * prime > remaining:
            exhausted = False
            break

        if remaining % prime == 0:
            exponent = int(multiplicity(prime, remaining))
            powers[prime] += exponent
            remaining //= prime**exponent

    if remaining > 1:
        if not exhausted or remaining <= budget.trial_limit**2:
            # No prime factor up to sqrt(remaining) is left so what remains is a prime.
            powers[remaining] += 1
        else:
            log.debug("Trial division left cofactor %d of %d, falling back to Pollard rho", remaining, n)
            for prime in _split_cofactor(remaining, n, budget):
                powers[prime] += 1

    return FactoredInteger(
        sign=-1 if n < 0 else 1,
        prime_powers=tuple(sorted(powers.items())),
    )


def _split_cofactor(
    cofactor: int,
    n: int,
    budget: FactoringBudget,
) -> typing.List[int]:
    seed = get_seed()
    primes = []
    pending = [cofactor]

    while pending:
        value = pending.pop()
        if isprime(value):
            primes.append(value)
            continue

        root, exact = integer_nthroot(value, 2)
        if exact:
            pending.extend([int(root), int(root)])
            continue

        divisor = pollard_rho(
            value,
            retries=budget.rho_retries,
            seed=seed,
            max_steps=budget.rho_max_steps,
        )
        if divisor is None:
            raise FactoringBudgetExceeded(context_msg="could not split the cofactor %d of %d" % (value, n))

        divisor = int(divisor)
        pending.extend([divisor, value // divisor])

    return primes


def is_squarefree(
    n: int,
    budget: FactoringBudget = DEFAULT_BUDGET,
) -> bool:
    """Checks that no prime square divides n.

    The answer comes from a full factorization of n, use :attr:`FactoredInteger.is_squarefree` directly when the
    factorization is already known.

    Args:
        n: The integer to test, ``|n| >= 2``.
        budget: How much effort may be spent factoring n.

    Returns:
        bool: Whether n is square-free.
    """
    if abs(n) < 2:
        raise DomainError(context_msg="square-free test requires |n| >= 2, got %d" % n)

    return factor_integer(n, budget=budget).is_squarefree


def mobius(n: int) -> int:
    factors = factorint(n)
    if any(e > 1 for e in factors.values()):
        return 0

    return -1 if len(factors) % 2 else 1


def monic_irreducible_count(p: int, f: int) -> int:
    """Number of monic irreducible polynomials of degree f over F_p (necklace formula)."""
    if f < 1:
        raise DomainError(context_msg="degree must be at least 1, got %d" % f)

    total = sum(mobius(d) * p ** (f // d) for d in divisors(f))
    return total // f
