"""Finite abelian groups with at most two cyclic factors, C_a x C_b with a | b."""

from __future__ import annotations

import re
from functools import total_ordering
from math import gcd


@total_ordering
class TorsionStructure:
    """The group C_a x C_b with a | b; the cyclic group C_n has a = 1, b = n."""

    __slots__ = ("a", "b")

    def __init__(self, a: int, b: int | None = None):
        if b is None:
            a, b = 1, a
        a, b = int(a), int(b)
        if a <= 0 or b <= 0:
            raise ValueError("group invariants must be positive")
        if b % a:
            # accept C_n x C_m in either order when one divides the other
            if a % b == 0:
                a, b = b, a
            else:
                raise ValueError(f"C{a} x C{b} is not in a|b normal form")
        self.a = a
        self.b = b

    @classmethod
    def parse(cls, text: str) -> "TorsionStructure":
        """Accept 'C12', 'C2xC4', 'C2×C4', 'Z/2 x Z/4', '(2,4)', '(5)', '12'."""
        s = text.strip().replace("×", "x").replace(" ", "")
        m = re.fullmatch(r"\((\d+)(?:,(\d+))?\)", s)
        if m:
            return cls(int(m.group(1)), int(m.group(2))) if m.group(2) else cls(int(m.group(1)))
        nums = [int(v) for v in re.findall(r"\d+", s)]
        if len(nums) == 1:
            return cls(nums[0])
        if len(nums) == 2:
            return cls(nums[0], nums[1])
        raise ValueError(f"cannot parse torsion structure {text!r}")

    @property
    def order(self) -> int:
        return self.a * self.b

    @property
    def exponent(self) -> int:
        return self.b

    def is_cyclic(self) -> bool:
        return self.a == 1

    def __eq__(self, other) -> bool:
        return isinstance(other, TorsionStructure) and (self.a, self.b) == (other.a, other.b)

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def sort_key(self) -> tuple[int, int, int]:
        return (0 if self.a == 1 else 1, self.a, self.b)

    def __lt__(self, other: "TorsionStructure") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return f"C{self.b}" if self.a == 1 else f"C{self.a}×C{self.b}"

    def ascii(self) -> str:
        return f"C{self.b}" if self.a == 1 else f"C{self.a}xC{self.b}"

    def tuple_notation(self) -> str:
        return f"({self.b})" if self.a == 1 else f"({self.a},{self.b})"

    def __repr__(self) -> str:
        return f"TorsionStructure({self.a}, {self.b})"

    def count_killed_by(self, d: int) -> int:
        """Number of elements P with d*P = 0."""
        return gcd(d, self.a) * gcd(d, self.b)


def C(n: int, m: int | None = None) -> TorsionStructure:
    """Shorthand: C(5) is C5, C(2, 4) is C2 x C4."""
    return TorsionStructure(n) if m is None else TorsionStructure(n, m)


def subgroup_of(A: TorsionStructure, B: TorsionStructure) -> bool:
    """Whether A embeds in B."""
    return B.a % A.a == 0 and B.b % A.b == 0


def element_orders(H: TorsionStructure) -> set[int]:
    from math import lcm

    return {lcm(d1, d2) for d1 in _divisors(H.a) for d2 in _divisors(H.b)}


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def from_counts(p: int, counts: dict[int, int]) -> tuple[int, int]:
    """Exponents (i, j), i <= j, of a p-group C_{p^i} x C_{p^j} from
    N_k = #{P : p^k P = 0} for k = 1 .. e (counts[k] = N_k)."""
    i = j = 0
    prev = 1
    last = 2
    for k in sorted(counts):
        n = counts[k]
        step = 0
        ratio = n // prev
        if ratio * prev != n:
            raise ArithmeticError("inconsistent torsion point counts")
        while ratio > 1:
            if ratio % p:
                raise ArithmeticError("inconsistent torsion point counts")
            ratio //= p
            step += 1
        if step > last:
            raise ArithmeticError("torsion point counts are not those of a p-group of rank <= 2")
        last = step
        # going from p^(k-1) to p^k each cyclic factor of order >= p^k adds one p
        if step == 2:
            i += 1
            j += 1
        elif step == 1:
            j += 1
        prev = n
    if i > j:
        i, j = j, i
    return i, j


def combine(parts: dict[int, tuple[int, int]]) -> TorsionStructure:
    """Assemble C_a x C_b from p-primary exponents {p: (i, j)}."""
    a = b = 1
    for p, (i, j) in parts.items():
        a *= p ** i
        b *= p ** j
    return TorsionStructure(a, b)
