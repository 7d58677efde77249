"""Finite commutative rings with identity, built from a small constructor grammar.

Grammar (ASCII, whitespace-insensitive)::

    spec := "Zn(" n ")"                       integers mod n, n >= 2
          | "GF(" q ")" | "GF(" p "^" k ")"   field with q = p^k elements
          | "Quot(" spec "," poly ")"         base[x]/(poly), base one of Zn/GF
          | "Prod(" spec "," spec ")"         direct product, componentwise ops
    poly := term (("+" | "-") term)*          e.g.  x^2+x+1,  2x^3-1
    term := int | int "*"? ["x" ["^" int]] | "x" ["^" int]

Quotient moduli must be monic of degree >= 1; integer coefficients are
reduced mod the base characteristic.  Elements of every constructed ring
are indexed 0..size-1 with index 0 the zero element; addition,
multiplication and negation are fully materialized tables.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

DEFAULT_ELEMENT_CAP = 1024


class RingSpecError(ValueError):
    """Malformed or invalid ring-spec string."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class CapExceededError(RuntimeError):
    """A construction would exceed a configured cap."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, k) with q == p**k and p prime, or None."""
    if q < 2:
        return None
    p = 2
    while p * p <= q:
        if q % p == 0:
            k, m = 0, q
            while m % p == 0:
                m //= p
                k += 1
            return (p, k) if m == 1 else None
        p += 1
    return (q, 1)


# ---------------------------------------------------------------------------
# Spec expressions


@dataclass(frozen=True)
class ZnSpec:
    n: int

    def __str__(self) -> str:
        return f"Zn({self.n})"


@dataclass(frozen=True)
class GFSpec:
    p: int
    k: int

    def __str__(self) -> str:
        return f"GF({self.p})" if self.k == 1 else f"GF({self.p}^{self.k})"


@dataclass(frozen=True)
class QuotSpec:
    base: ZnSpec | GFSpec
    modulus: tuple[int, ...]  # little-endian base-element indices, monic

    def __str__(self) -> str:
        return f"Quot({self.base}, {render_poly(self.modulus)})"

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    def is_galois_ring(self) -> bool:
        """True when this is Z_{p^s}[x]/(h) with h irreducible mod p."""
        if isinstance(self.base, GFSpec):
            if self.base.k != 1:
                return False
            p = self.base.p
        else:
            pk = prime_power(self.base.n)
            if pk is None:
                return False
            p = pk[0]
        reduced = [c % p for c in self.modulus]
        if reduced[-1] != 1:
            return False
        return _fp_is_irreducible(reduced, p)


@dataclass(frozen=True)
class ProdSpec:
    left: RingSpecExpr
    right: RingSpecExpr

    def __str__(self) -> str:
        return f"Prod({self.left}, {self.right})"


RingSpecExpr = ZnSpec | GFSpec | QuotSpec | ProdSpec


def spec_size(spec: RingSpecExpr) -> int:
    if isinstance(spec, ZnSpec):
        return spec.n
    if isinstance(spec, GFSpec):
        return spec.p**spec.k
    if isinstance(spec, QuotSpec):
        return spec_size(spec.base) ** spec.degree
    return spec_size(spec.left) * spec_size(spec.right)


def spec_characteristic(spec: ZnSpec | GFSpec) -> int:
    return spec.n if isinstance(spec, ZnSpec) else spec.p


def render_poly(coeffs: tuple[int, ...], var: str = "x") -> str:
    terms = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if c == 0:
            continue
        if e == 0:
            terms.append(str(c))
        else:
            head = "" if c == 1 else str(c)
            terms.append(f"{head}{var}" if e == 1 else f"{head}{var}^{e}")
    return "+".join(terms) if terms else "0"


# ---------------------------------------------------------------------------
# Parsing


class _Parser:
    def __init__(self, text: str, max_elements: int):
        self.text = text
        self.pos = 0
        self.cap = max_elements

    def error(self, message: str):
        raise RingSpecError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            self.error(f"expected '{ch}'")
        self.pos += 1

    def parse_uint(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected integer")
        return int(self.text[start : self.pos])

    def parse_name(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        if self.pos == start:
            self.error("expected constructor name")
        return self.text[start : self.pos]

    def parse_expr(self) -> RingSpecExpr:
        name = self.parse_name()
        if name == "Zn":
            self.expect("(")
            n = self.parse_uint()
            self.expect(")")
            if n < 2:
                self.error("Zn modulus must be at least 2")
            self._check_cap(n)
            return ZnSpec(n)
        if name == "GF":
            self.expect("(")
            first = self.parse_uint()
            if self.peek() == "^":
                self.pos += 1
                k = self.parse_uint()
                self.expect(")")
                if not is_prime(first):
                    self.error(f"{first} is not prime")
                if k < 1:
                    self.error("GF exponent must be at least 1")
                p = first
            else:
                self.expect(")")
                pk = prime_power(first)
                if pk is None:
                    self.error(f"{first} is not a prime power")
                p, k = pk
            self._check_cap(p**k)
            return GFSpec(p, k)
        if name == "Quot":
            self.expect("(")
            base = self.parse_expr()
            if not isinstance(base, (ZnSpec, GFSpec)):
                self.error("Quot base must be Zn or GF")
            self.expect(",")
            modulus = self.parse_poly(spec_characteristic(base))
            self.expect(")")
            size = spec_size(base) ** (len(modulus) - 1)
            self._check_cap(size)
            return QuotSpec(base, modulus)
        if name == "Prod":
            self.expect("(")
            left = self.parse_expr()
            self.expect(",")
            right = self.parse_expr()
            self.expect(")")
            self._check_cap(spec_size(left) * spec_size(right))
            return ProdSpec(left, right)
        self.error(f"unknown constructor '{name}'")

    def parse_poly(self, char: int) -> tuple[int, ...]:
        coeffs: dict[int, int] = {}
        sign = 1
        if self.peek() == "-":
            self.pos += 1
            sign = -1
        while True:
            coef, exp = self.parse_term()
            coeffs[exp] = coeffs.get(exp, 0) + sign * coef
            nxt = self.peek()
            if nxt == "+":
                sign = 1
            elif nxt == "-":
                sign = -1
            else:
                break
            self.pos += 1
        degree = max((e for e, c in coeffs.items() if c % char), default=0)
        if degree < 1:
            self.error("modulus must have degree at least 1")
        out = tuple(coeffs.get(e, 0) % char for e in range(degree + 1))
        if out[-1] != 1:
            self.error("modulus must be monic")
        return out

    def parse_term(self) -> tuple[int, int]:
        ch = self.peek()
        if ch.isdigit():
            coef = self.parse_uint()
            if self.peek() == "*":
                self.pos += 1
                if self.peek() != "x":
                    self.error("expected 'x' after '*'")
        elif ch == "x":
            coef = 1
        else:
            self.error("expected polynomial term")
        if self.peek() != "x":
            return coef, 0
        self.pos += 1
        if self.peek() == "^":
            self.pos += 1
            return coef, self.parse_uint()
        return coef, 1

    def expect_end(self):
        self.skip_ws()
        if self.pos != len(self.text):
            self.error("trailing input")

    def _check_cap(self, size: int):
        if size > self.cap:
            raise CapExceededError(
                f"ring of size {size} exceeds element cap {self.cap}"
            )


def parse_ring_spec(text: str, max_elements: int = DEFAULT_ELEMENT_CAP) -> RingSpecExpr:
    """Parse a ring-spec string into a validated expression."""
    parser = _Parser(text, max_elements)
    expr = parser.parse_expr()
    parser.expect_end()
    return expr


# ---------------------------------------------------------------------------
# Polynomials over F_p (for finding GF moduli and the Galois-ring flag)


def _fp_divmod(num: list[int], den: list[int], p: int) -> tuple[list[int], list[int]]:
    num = num[:]
    dd = len(den) - 1
    inv_lead = pow(den[-1], -1, p)
    quot = [0] * max(len(num) - dd, 0)
    for e in range(len(num) - 1, dd - 1, -1):
        c = num[e] * inv_lead % p
        if c:
            quot[e - dd] = c
            for j, dc in enumerate(den):
                num[e - dd + j] = (num[e - dd + j] - c * dc) % p
    while num and num[-1] == 0:
        num.pop()
    return quot, num


def _fp_is_irreducible(poly: list[int], p: int) -> bool:
    degree = len(poly) - 1
    if degree < 1:
        return False
    for d in range(1, degree // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            den = list(tail) + [1]
            _, rem = _fp_divmod(list(poly), den, p)
            if not rem:
                return False
    return True


def find_irreducible_poly(p: int, k: int) -> tuple[int, ...]:
    """First monic irreducible polynomial of degree k over F_p, in lex order."""
    for tail in itertools.product(range(p), repeat=k):
        cand = list(tail) + [1]
        if _fp_is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError(f"no irreducible polynomial of degree {k} over F_{p}")


# ---------------------------------------------------------------------------
# Ring construction


class FiniteRing:
    """A finite commutative ring with identity, as materialized tables."""

    def __init__(
        self,
        size: int,
        add: list[list[int]],
        mul: list[list[int]],
        neg: list[int],
        one_index: int,
        label: str,
        element_names: list[str],
        spec: RingSpecExpr | None = None,
    ):
        self.size = size
        self.add = add
        self.mul = mul
        self.neg = neg
        self.zero_index = 0
        self.one_index = one_index
        self.label = label
        self.element_names = element_names
        self.spec = spec
        self._power_masks: list[int] | None = None

    def __repr__(self) -> str:
        return f"FiniteRing({self.label}, size={self.size})"

    def pow(self, a: int, exp: int) -> int:
        """a**exp by square-and-multiply; exp >= 1."""
        if not 0 <= a < self.size:
            raise IndexError(f"element index {a} out of range")
        if exp < 1:
            raise ValueError("exponent must be at least 1")
        result = None
        base = a
        while exp:
            if exp & 1:
                result = base if result is None else self.mul[result][base]
            base = self.mul[base][base]
            exp >>= 1
        return result

    def characteristic(self) -> int:
        c, acc = 1, self.one_index
        while acc != 0:
            acc = self.add[acc][self.one_index]
            c += 1
        return c

    def power_masks(self) -> list[int]:
        """For each element x, the bit-set of all powers x^k, k >= 1."""
        if self._power_masks is None:
            masks = []
            for x in range(self.size):
                mask, cur = 0, x
                while not (mask >> cur) & 1:
                    mask |= 1 << cur
                    cur = self.mul[cur][x]
                masks.append(mask)
            self._power_masks = masks
        return self._power_masks


def element_arithmetic(ring: FiniteRing, op: str, *args: int) -> int:
    """Dispatch add/mul/neg/pow on element indices."""
    for index in args[: 2 if op != "pow" else 1]:
        if not 0 <= index < ring.size:
            raise IndexError(f"element index {index} out of range")
    if op == "add":
        return ring.add[args[0]][args[1]]
    if op == "mul":
        return ring.mul[args[0]][args[1]]
    if op == "neg":
        return ring.neg[args[0]]
    if op == "pow":
        return ring.pow(args[0], args[1])
    raise ValueError(f"unknown element operation {op!r}")


def unit_and_nilpotent_flags(ring: FiniteRing, r: int) -> tuple[bool, bool, int | None]:
    """(is_unit, is_nilpotent, least n with r^n = 0 or None)."""
    if not 0 <= r < ring.size:
        raise IndexError(f"element index {r} out of range")
    one = ring.one_index
    row = ring.mul[r]
    is_unit = any(row[s] == one for s in range(ring.size))
    seen = set()
    cur, n = r, 1
    while cur not in seen:
        if cur == 0:
            return is_unit, True, n
        seen.add(cur)
        cur = ring.mul[cur][r]
        n += 1
    return is_unit, False, None


def _build_zn_tables(n: int):
    add = [[(i + j) % n for j in range(n)] for i in range(n)]
    mul = [[(i * j) % n for j in range(n)] for i in range(n)]
    neg = [(-i) % n for i in range(n)]
    return add, mul, neg


def _poly_element_name(coeffs: list[int], coeff_names: list[str], var: str) -> str:
    terms = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if c == 0:
            continue
        name = coeff_names[c]
        if e == 0:
            terms.append(name)
            continue
        var_part = var if e == 1 else f"{var}^{e}"
        if name == "1":
            terms.append(var_part)
        elif name.isdigit():
            terms.append(f"{name}{var_part}")
        else:
            terms.append(f"({name}){var_part}")
    return "+".join(terms) if terms else coeff_names[0]


def _build_quotient(
    base: FiniteRing, modulus: tuple[int, ...], var: str, label: str, spec
) -> FiniteRing:
    deg = len(modulus) - 1
    b = base.size
    size = b**deg
    coeffs_of = []
    for idx in range(size):
        c, i = [], idx
        for _ in range(deg):
            c.append(i % b)
            i //= b
        coeffs_of.append(c)

    def encode(coeffs: list[int]) -> int:
        idx = 0
        for pos in range(deg - 1, -1, -1):
            idx = idx * b + coeffs[pos]
        return idx

    badd, bmul, bneg = base.add, base.mul, base.neg

    def reduce(prod: list[int]) -> list[int]:
        for e in range(len(prod) - 1, deg - 1, -1):
            c = prod[e]
            if c:
                prod[e] = 0
                shift = e - deg
                for j in range(deg):
                    mc = modulus[j]
                    if mc:
                        prod[shift + j] = badd[prod[shift + j]][bneg[bmul[c][mc]]]
        return prod[:deg]

    add = [
        [encode([badd[x][y] for x, y in zip(ca, coeffs_of[j])]) for j in range(size)]
        for ca in coeffs_of
    ]
    neg = [encode([bneg[x] for x in c]) for c in coeffs_of]
    mul = []
    for ca in coeffs_of:
        row = []
        for j in range(size):
            cb = coeffs_of[j]
            prod = [0] * (2 * deg - 1)
            for i, ci in enumerate(ca):
                if ci:
                    for k, cj in enumerate(cb):
                        if cj:
                            prod[i + k] = badd[prod[i + k]][bmul[ci][cj]]
            row.append(encode(reduce(prod)))
        mul.append(row)
    one = encode([base.one_index] + [0] * (deg - 1))
    names = [_poly_element_name(c, base.element_names, var) for c in coeffs_of]
    return FiniteRing(size, add, mul, neg, one, label, names, spec)


def _build_product(left: FiniteRing, right: FiniteRing, label: str, spec) -> FiniteRing:
    rs = right.size
    size = left.size * rs
    add = [
        [left.add[i][k] * rs + right.add[j][m] for k in range(left.size) for m in range(rs)]
        for i in range(left.size)
        for j in range(rs)
    ]
    mul = [
        [left.mul[i][k] * rs + right.mul[j][m] for k in range(left.size) for m in range(rs)]
        for i in range(left.size)
        for j in range(rs)
    ]
    neg = [left.neg[i] * rs + right.neg[j] for i in range(left.size) for j in range(rs)]
    one = left.one_index * rs + right.one_index
    names = [
        f"({ln},{rn})" for ln in left.element_names for rn in right.element_names
    ]
    return FiniteRing(size, add, mul, neg, one, label, names, spec)


def build_ring(spec: RingSpecExpr, max_elements: int = DEFAULT_ELEMENT_CAP) -> FiniteRing:
    """Materialize the ring described by a validated spec expression."""
    size = spec_size(spec)
    if size > max_elements:
        raise CapExceededError(f"ring of size {size} exceeds element cap {max_elements}")
    if isinstance(spec, ZnSpec):
        if spec.n < 2:
            raise RingSpecError("Zn modulus must be at least 2")
        add, mul, neg = _build_zn_tables(spec.n)
        names = [str(i) for i in range(spec.n)]
        return FiniteRing(spec.n, add, mul, neg, 1, str(spec), names, spec)
    if isinstance(spec, GFSpec):
        if spec.k == 1:
            add, mul, neg = _build_zn_tables(spec.p)
            names = [str(i) for i in range(spec.p)]
            return FiniteRing(spec.p, add, mul, neg, 1, str(spec), names, spec)
        base = build_ring(ZnSpec(spec.p), max_elements)
        modulus = find_irreducible_poly(spec.p, spec.k)
        return _build_quotient(base, modulus, "a", str(spec), spec)
    if isinstance(spec, QuotSpec):
        base = build_ring(spec.base, max_elements)
        return _build_quotient(base, spec.modulus, "x", str(spec), spec)
    if isinstance(spec, ProdSpec):
        left = build_ring(spec.left, max_elements)
        right = build_ring(spec.right, max_elements)
        return _build_product(left, right, str(spec), spec)
    raise TypeError(f"not a ring spec: {spec!r}")


def check_ring_axioms(
    ring: FiniteRing,
    exhaustive_limit: int = 64,
    samples: int = 4000,
    seed: int = 0,
) -> list[str]:
    """Verify the commutative-ring axioms on the tables.

    Pairwise laws are always exhaustive; the triple laws (associativity,
    distributivity) are exhaustive up to ``exhaustive_limit`` elements and
    sampled above it.  Returns a list of human-readable violations.
    """
    import random

    n = ring.size
    add, mul, neg = ring.add, ring.mul, ring.neg
    bad: list[str] = []
    for i in range(n):
        if add[0][i] != i:
            bad.append(f"0 + {i} != {i}")
        if add[i][neg[i]] != 0:
            bad.append(f"{i} + (-{i}) != 0")
        if mul[ring.one_index][i] != i:
            bad.append(f"1 * {i} != {i}")
    if ring.one_index == ring.zero_index:
        bad.append("identity equals zero")
    for i in range(n):
        for j in range(i + 1, n):
            if add[i][j] != add[j][i]:
                bad.append(f"{i} + {j} not commutative")
            if mul[i][j] != mul[j][i]:
                bad.append(f"{i} * {j} not commutative")
    if n <= exhaustive_limit:
        triples = itertools.product(range(n), repeat=3)
    else:
        rng = random.Random(seed)
        triples = (
            (rng.randrange(n), rng.randrange(n), rng.randrange(n))
            for _ in range(samples)
        )
    for a, b, c in triples:
        if add[add[a][b]][c] != add[a][add[b][c]]:
            bad.append(f"({a}+{b})+{c} not associative")
        if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
            bad.append(f"({a}*{b})*{c} not associative")
        if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
            bad.append(f"{a}*({b}+{c}) not distributive")
        if bad:
            break
    return bad
