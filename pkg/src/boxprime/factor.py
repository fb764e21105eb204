"""Prime factorization of connected graphs under the cartesian product.

Connected graphs factor uniquely into primes under the cartesian product,
with the one-vertex graph as the unit.  Composites of a given order are
found exhaustively: every product of two smaller connected graphs is
canonicalized and recorded with one witness pair, so factorization is a
recursive table lookup.
"""

from __future__ import annotations

import threading
from functools import lru_cache

from .errors import CapacityError, DomainError
from .graphs import (DEFAULT_ENUM_CAP, Graph, canonical_form, canonical_key,
                     cartesian_product, empty_graph, enumerate_connected,
                     is_connected)

_LOCK = threading.Lock()
_COMPOSITE_MAPS: dict[tuple[int, bool], dict] = {}


def _split_orders(n: int) -> list[tuple[int, int]]:
    return [(a, n // a) for a in range(2, n + 1) if a * a <= n and n % a == 0]


def composite_map(n: int, cap: int = DEFAULT_ENUM_CAP,
                  descending: bool = False) -> dict:
    """Canonical key of every connected order-n composite, with a witness pair.

    The witness is one (A, B) whose product realizes the key, chosen
    deterministically: smallest left order first (largest when descending),
    then enumeration order.  The key set is identical either way; the two
    directions exist to cross-check factorization against itself.
    """
    if n < 1:
        raise DomainError("order must be positive")
    with _LOCK:
        cached = _COMPOSITE_MAPS.get((n, descending))
    if cached is not None:
        return cached
    splits = _split_orders(n)
    for a, b in splits:
        if b > cap:
            raise CapacityError(
                f"composites of order {n} need factors of order {b}, cap is {cap}")
    if descending:
        splits = splits[::-1]
    out: dict[tuple[int, int], tuple[Graph, Graph]] = {}
    for a, b in splits:
        lefts = enumerate_connected(a, cap)
        rights = enumerate_connected(b, cap) if b != a else lefts
        for g1 in lefts:
            for g2 in rights:
                key = canonical_key(cartesian_product(g1, g2))
                out.setdefault(key, (g1, g2))
    with _LOCK:
        _COMPOSITE_MAPS.setdefault((n, descending), out)
    return out


def composite_set(n: int, cap: int = DEFAULT_ENUM_CAP) -> frozenset:
    """Canonical keys of the connected order-n composites."""
    return frozenset(composite_map(n, cap))


def count_composites(n: int, cap: int = DEFAULT_ENUM_CAP) -> int:
    return len(composite_map(n, cap))


def count_primes(n: int, cap: int = DEFAULT_ENUM_CAP) -> int:
    """Number of connected prime graphs of order n."""
    if n < 1:
        raise DomainError("order must be positive")
    if n == 1:
        return 0
    return len(enumerate_connected(n, cap)) - count_composites(n, cap)


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DomainError("factorization is defined for connected graphs only")


def is_cartesian_prime(g: Graph, cap: int = DEFAULT_ENUM_CAP) -> bool:
    """Whether a connected graph of order >= 2 is prime.

    The one-vertex graph is the unit of the product, neither prime nor
    composite, and is rejected.
    """
    _require_connected(g)
    if g.n < 2:
        raise DomainError("the one-vertex unit is neither prime nor composite")
    return canonical_key(g) not in composite_map(g.n, cap)


def factorize(g: Graph, cap: int = DEFAULT_ENUM_CAP,
              descending: bool = False) -> tuple[Graph, ...]:
    """Prime factors of a connected graph, canonical and sorted, with repeats.

    The unit gives an empty tuple; a prime gives itself.  The search
    direction picks which witness drives the recursion; unique factorization
    means the result is independent of it.
    """
    _require_connected(g)
    if g.n == 1:
        return ()
    return _factorize_canonical(canonical_form(g), cap, descending)


@lru_cache(maxsize=1 << 16)
def _factorize_canonical(cg: Graph, cap: int,
                         descending: bool) -> tuple[Graph, ...]:
    witness = composite_map(cg.n, cap, descending).get((cg.n, cg.bits))
    if witness is None:
        return (cg,)
    a, b = witness
    return tuple(sorted(factorize(a, cap, descending) + factorize(b, cap, descending),
                        key=canonical_key))


def product_of(factors, cap: int = DEFAULT_ENUM_CAP) -> Graph:
    """Canonical cartesian product of the given graphs; empty input is the unit."""
    acc = empty_graph(1)
    for g in factors:
        acc = cartesian_product(acc, g)
    return canonical_form(acc)


def divisors(g: Graph, cap: int = DEFAULT_ENUM_CAP) -> tuple[Graph, ...]:
    """Distinct divisors of a connected graph, unit and graph included.

    A divisor is the product of any sub-multiset of the prime factors;
    results are canonical and sorted by order then packed edges.
    """
    primes = factorize(g, cap)
    seen: dict[tuple[int, int], Graph] = {}
    subsets = [()]
    for p in primes:
        subsets = subsets + [s + (p,) for s in subsets]
    for sub in subsets:
        d = product_of(sub, cap)
        seen.setdefault(canonical_key(d), d)
    return tuple(sorted(seen.values(), key=canonical_key))
