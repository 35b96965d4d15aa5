"""Exact arithmetic in F_p and its extension F_{p^s}.

Field elements are plain Python ints, without per-element wrapper objects:
the element with power-basis coordinates (c_0, ..., c_{s-1}) over F_p is
encoded as the integer sum(c_i * p**i).  The interpretation of an int is
carried by the :class:`FieldCtx` passed alongside it, and the zero and one
elements are always encoded as 0 and 1.  Ints below p are exactly the
base-field elements.

A context is immutable after construction and safe to share across tasks;
all operations are pure functions of their inputs.  Operands are assumed
canonical (in ``[0, p**s)``); use :meth:`FieldCtx.from_coords` or
:func:`field_from_json` for validated entry points.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from .errors import DegreeMismatch, DivisionByZero, NotPrime, ReducibleModulus

__all__ = [
    "FieldCtx",
    "make_field",
    "field_arith",
    "field_to_json",
    "field_from_json",
]

# Discrete-log display tables are only built for fields up to this order.
DLOG_LIMIT = 1 << 20


def _is_prime(n: int) -> bool:
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


# ---------------------------------------------------------------------------
# Dense polynomial arithmetic over F_p (coefficient tuples, ascending order,
# trailing coefficient nonzero).  Used for modulus validation and selection.
# ---------------------------------------------------------------------------

def _ptrim(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _pmul(p: int, a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _ptrim(out)


def _pmod(p: int, a: Sequence[int], m: Sequence[int]) -> tuple[int, ...]:
    # m monic
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        lead = a[-1]
        if lead:
            shift = len(a) - 1 - dm
            for j, y in enumerate(m):
                a[shift + j] = (a[shift + j] - lead * y) % p
        a.pop()
    return _ptrim(a)


def _pgcd(p: int, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    while b:
        inv_lead = pow(b[-1], -1, p)
        b_monic = tuple(c * inv_lead % p for c in b)
        a, b = b_monic, _pmod(p, a, b_monic)
    return a


def _is_irreducible(p: int, m: Sequence[int]) -> bool:
    """Rabin irreducibility test for a monic polynomial of degree >= 1."""
    s = len(m) - 1
    if s == 1:
        return True

    def x_power_q_tower(j: int) -> tuple[int, ...]:
        # x^(p^j) mod m via j successive p-th powers
        g: tuple[int, ...] = (0, 1)
        for _ in range(j):
            acc: tuple[int, ...] = (1,)
            base, e = g, p
            while e:
                if e & 1:
                    acc = _pmod(p, _pmul(p, acc, base), m)
                base = _pmod(p, _pmul(p, base, base), m)
                e >>= 1
            g = acc
        return g

    if x_power_q_tower(s) != (0, 1):
        return False
    prime_divs = [r for r in range(2, s + 1) if s % r == 0 and _is_prime(r)]
    for r in prime_divs:
        g = list(x_power_q_tower(s // r))
        while len(g) < 2:
            g.append(0)
        g[1] = (g[1] - 1) % p  # x^(p^(s/r)) - x
        if _pgcd(p, tuple(m), _ptrim(g)) != (1,):
            return False
    return True


def _smallest_irreducible(p: int, s: int) -> tuple[int, ...]:
    """Monic irreducible of degree s with the smallest integer encoding."""
    for tail in range(p**s):
        coeffs = []
        v = tail
        for _ in range(s):
            v, r = divmod(v, p)
            coeffs.append(r)
        cand = tuple(coeffs) + (1,)
        if _is_irreducible(p, cand):
            return cand
    raise AssertionError("no irreducible polynomial found")  # unreachable


def _poly_str(coeffs: Sequence[int]) -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            base = "x" if i == 1 else f"x^{i}"
            terms.append(base if c == 1 else f"{c}*{base}")
    return " + ".join(terms) if terms else "0"


class FieldCtx:
    """The tower F_p <= F_{p^s}: modulus, arithmetic kernels, display tables.

    Use :func:`make_field` to build one; the constructor does not validate.
    """

    __slots__ = (
        "p",
        "s",
        "modulus",
        "order",
        "generator_hint",
        "_mod_int",
        "_red_rows",
        "_exp",
        "_log",
    )

    def __init__(self, p: int, s: int, modulus: tuple[int, ...],
                 generator_hint: int | None = None):
        self.p = p
        self.s = s
        self.modulus = tuple(modulus)
        self.order = p**s
        self.generator_hint = generator_hint
        if p == 2:
            self._mod_int = sum(c << i for i, c in enumerate(modulus))
            self._red_rows = None
        else:
            self._mod_int = None
            # reduction of x^(s+i) mod modulus, as length-s digit rows
            rows = []
            cur = [(-c) % p for c in modulus[:s]]  # x^s mod m
            rows.append(tuple(cur))
            for _ in range(s - 2):
                nxt = [0] + cur[:-1]
                lead = cur[-1]
                if lead:
                    for j in range(s):
                        nxt[j] = (nxt[j] + lead * rows[0][j]) % p
                rows.append(tuple(nxt))
                cur = nxt
            self._red_rows = tuple(rows)
        self._exp = None
        self._log = None

    # -- identity is defined by the tower parameters -----------------------

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, FieldCtx)
                and (self.p, self.s, self.modulus) == (other.p, other.s, other.modulus))

    def __hash__(self) -> int:
        return hash((self.p, self.s, self.modulus))

    def __repr__(self) -> str:
        return f"FieldCtx(p={self.p}, s={self.s}, modulus={_poly_str(self.modulus)})"

    # -- coordinate view ----------------------------------------------------

    def coords(self, a: int) -> tuple[int, ...]:
        """Power-basis coordinates of ``a`` over F_p (length s, c_0 first)."""
        p = self.p
        out = []
        for _ in range(self.s):
            a, r = divmod(a, p)
            out.append(r)
        return tuple(out)

    def from_coords(self, coeffs: Iterable[int]) -> int:
        coeffs = list(coeffs)
        if len(coeffs) != self.s:
            raise DegreeMismatch(f"expected {self.s} coordinates, got {len(coeffs)}")
        if any(not (0 <= c < self.p) for c in coeffs):
            raise DegreeMismatch(f"coordinates must lie in [0, {self.p})")
        acc = 0
        for c in reversed(coeffs):
            acc = acc * self.p + c
        return acc

    def elements(self) -> range:
        return range(self.order)

    # -- ring operations ------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p = self.p
        acc = 0
        mult = 1
        for _ in range(self.s):
            acc += (a % p + b % p) % p * mult
            a //= p
            b //= p
            mult *= p
        return acc

    def sub(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p = self.p
        acc = 0
        mult = 1
        for _ in range(self.s):
            acc += (a % p - b % p) % p * mult
            a //= p
            b //= p
            mult *= p
        return acc

    def neg(self, a: int) -> int:
        return self.sub(0, a)

    def mul(self, a: int, b: int) -> int:
        if self.p == 2:
            m = self._mod_int
            s = self.s
            r = 0
            while a and b:
                if b & 1:
                    r ^= a
                b >>= 1
                a <<= 1
                if (a >> s) & 1:
                    a ^= m
            return r
        p, s = self.p, self.s
        da = self.coords(a)
        db = self.coords(b)
        conv = [0] * (2 * s - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    conv[i + j] += x * y
        red = self._red_rows
        for i in range(2 * s - 2, s - 1, -1):
            c = conv[i] % p
            if c:
                row = red[i - s]
                for j in range(s):
                    conv[j] += c * row[j]
        acc = 0
        mult = 1
        for j in range(s):
            acc += (conv[j] % p) * mult
            mult *= p
        return acc

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            raise ValueError("exponent must be nonnegative")
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("zero has no multiplicative inverse")
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise DivisionByZero("division by zero field element")
        return self.mul(a, self.inv(b))

    def frobenius(self, a: int, t: int) -> int:
        """a^(q^t).  The Frobenius has order dividing s, so t reduces mod s."""
        if t < 0:
            raise ValueError("Frobenius power must be nonnegative")
        t %= self.s
        for _ in range(t):
            a = self.pow(a, self.p)
        return a

    # -- rank over the base field ---------------------------------------------

    def rank_over_base(self, elems: Iterable[int]) -> int:
        """Rank over F_p of the coordinate matrix of ``elems``.

        Exact Gaussian elimination mod p; the empty list has rank 0.
        """
        elems = list(elems)
        if self.p == 2:
            basis = [0] * self.s
            rank = 0
            for v in elems:
                for b in range(self.s - 1, -1, -1):
                    if not (v >> b) & 1:
                        continue
                    if basis[b]:
                        v ^= basis[b]
                    else:
                        basis[b] = v
                        rank += 1
                        break
            return rank
        p = self.p
        rows: list[list[int]] = []
        rank = 0
        for e in elems:
            v = list(self.coords(e))
            for row in rows:
                lead = next(i for i, c in enumerate(row) if c)
                if v[lead]:
                    f = v[lead] * pow(row[lead], -1, p) % p
                    for i in range(self.s):
                        v[i] = (v[i] - f * row[i]) % p
            if any(v):
                rows.append(v)
                rank += 1
        return rank

    # -- display ---------------------------------------------------------------

    def _ensure_dlog(self) -> bool:
        if self._exp is not None:
            return True
        if self.order > DLOG_LIMIT:
            return False
        gen = self.generator_hint
        if gen is None:
            gen = self._find_generator()
        elif not self._is_primitive(gen):
            raise ValueError(f"generator_hint {gen} is not primitive")
        exp = [0] * (self.order - 1)
        log = [0] * self.order
        v = 1
        for i in range(self.order - 1):
            exp[i] = v
            log[v] = i
            v = self.mul(v, gen)
        self._exp = exp
        self._log = log
        if self.generator_hint is None:
            self.generator_hint = gen
        return True

    def _is_primitive(self, g: int) -> bool:
        if g == 0:
            return False
        m = self.order - 1
        if m == 1:
            return g == 1
        n, f, factors = m, 2, set()
        while f * f <= n:
            while n % f == 0:
                factors.add(f)
                n //= f
            f += 1
        if n > 1:
            factors.add(n)
        return all(self.pow(g, m // r) != 1 for r in factors)

    def _find_generator(self) -> int:
        for g in range(1, self.order):
            if self._is_primitive(g):
                return g
        raise AssertionError("no multiplicative generator found")  # unreachable

    def dlog(self, a: int) -> int:
        """Discrete log of a nonzero element w.r.t. the display generator."""
        if a == 0:
            raise DivisionByZero("discrete log of zero is undefined")
        if not self._ensure_dlog():
            raise ValueError(f"field order {self.order} exceeds dlog limit {DLOG_LIMIT}")
        return self._log[a]

    def format_element(self, a: int, power_form: bool = True) -> str:
        """Render as 0 / 1 / a^j when a dlog table is feasible, else as int."""
        if a == 0:
            return "0"
        if a == 1:
            return "1"
        if power_form and self._ensure_dlog():
            return f"a^{self._log[a]}"
        return str(a)


def make_field(p: int, s: int, modulus: Sequence[int] | None = None,
               generator_hint: int | None = None) -> FieldCtx:
    """Build a validated field context for F_{p^s}.

    If ``modulus`` is omitted, the monic irreducible of degree s over F_p
    with the smallest integer encoding is selected deterministically.
    """
    if not isinstance(p, int) or not _is_prime(p):
        raise NotPrime(f"p={p} is not prime")
    if not isinstance(s, int) or s < 1:
        raise DegreeMismatch(f"extension degree must be >= 1, got {s}")
    if modulus is None:
        modulus = _smallest_irreducible(p, s)
    else:
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != s + 1:
            raise DegreeMismatch(
                f"modulus must have degree {s} ({s + 1} coefficients), got {len(modulus)}")
        if any(not (0 <= c < p) for c in modulus):
            raise DegreeMismatch(f"modulus coefficients must lie in [0, {p})")
        if modulus[-1] != 1:
            raise DegreeMismatch("modulus must be monic")
        if not _is_irreducible(p, modulus):
            raise ReducibleModulus(f"{_poly_str(modulus)} is reducible over F_{p}")
    return FieldCtx(p, s, modulus, generator_hint)


def field_arith(ctx: FieldCtx, op: str, a: int, b: int) -> int:
    """Dispatching wrapper over the five ring operations.

    ``b`` is a field element for add/sub/mul/div and a nonnegative integer
    exponent for pow.
    """
    if op == "add":
        return ctx.add(a, b)
    if op == "sub":
        return ctx.sub(a, b)
    if op == "mul":
        return ctx.mul(a, b)
    if op == "div":
        return ctx.div(a, b)
    if op == "pow":
        return ctx.pow(a, b)
    raise ValueError(f"unknown field operation {op!r}")


def field_to_json(ctx: FieldCtx) -> dict:
    return {"p": ctx.p, "s": ctx.s, "modulus": list(ctx.modulus)}


def field_from_json(obj: dict) -> FieldCtx:
    return make_field(obj["p"], obj["s"], obj.get("modulus"))
