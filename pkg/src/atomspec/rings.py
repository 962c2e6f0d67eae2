"""Finite associative unital rings given by full addition/multiplication tables.

A ring of order n has element ids 0..n-1.  Id 0 is always the additive zero;
the multiplicative identity is stored explicitly.  All axioms are checked
exhaustively over the tables, so a validated ring literally satisfies every
ring axiom.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

DEFAULT_ORDER_CAP = 4096

# chunk size for the O(n^3) axiom scans, keeps peak memory ~ tens of MB
_TRIPLE_CHUNK = 4_000_000


class RingError(Exception):
    """Base class for ring construction failures."""


class RingAxiomError(RingError):
    """A ring axiom failed; carries the axiom name and a witness tuple."""

    def __init__(self, axiom: str, witness: tuple):
        self.axiom = axiom
        self.witness = witness
        super().__init__(f"{axiom} fails at {witness}")


class RingFormatError(RingError):
    """A ring document or raw table set is malformed."""


class CapExceededError(RingError):
    """A configured size cap was exceeded."""


@dataclass(frozen=True)
class FiniteRing:
    order: int
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    one: int
    name: str = field(default="", compare=False)

    @cached_property
    def neg(self) -> tuple[int, ...]:
        out = [0] * self.order
        for x in range(self.order):
            out[x] = self.add[x].index(0)
        return tuple(out)

    @cached_property
    def add_np(self) -> np.ndarray:
        return np.array(self.add, dtype=np.int64)

    @cached_property
    def mul_np(self) -> np.ndarray:
        return np.array(self.mul, dtype=np.int64)

    def is_commutative(self) -> bool:
        m = self.mul
        n = self.order
        return all(m[a][b] == m[b][a] for a in range(n) for b in range(n))

    def content_hash(self) -> str:
        return hashlib.sha256(serialize_ring(self)).hexdigest()

    def __repr__(self):
        label = self.name or f"order {self.order}"
        return f"FiniteRing({label})"


def _as_table(raw, what: str) -> tuple[tuple[int, ...], ...]:
    try:
        table = tuple(tuple(int(v) for v in row) for row in raw)
    except (TypeError, ValueError) as exc:
        raise RingFormatError(f"{what} table is not a matrix of integers") from exc
    return table


def _check_shape(table, n: int, ncols: int, what: str) -> None:
    if len(table) != n:
        raise RingFormatError(f"{what} table has {len(table)} rows, expected {n}")
    for i, row in enumerate(table):
        if len(row) != ncols:
            raise RingFormatError(
                f"{what} table row {i} has {len(row)} entries, expected {ncols}"
            )


def _check_entries(table, limit: int, what: str) -> None:
    for i, row in enumerate(table):
        for j, v in enumerate(row):
            if not 0 <= v < limit:
                raise RingFormatError(
                    f"{what}[{i}][{j}] = {v} out of range 0..{limit - 1}"
                )


def _scan_triples(n: int, build):
    """Run build(a_slice) -> (lhs, rhs) over chunks of the first axis.

    Returns the first differing (a, b, c) triple or None.
    """
    if n == 0:
        return None
    step = max(1, _TRIPLE_CHUNK // max(1, n * n))
    for start in range(0, n, step):
        sl = slice(start, min(n, start + step))
        lhs, rhs = build(sl)
        if not np.array_equal(lhs, rhs):
            bad = np.argwhere(lhs != rhs)[0]
            return (int(bad[0]) + start, int(bad[1]), int(bad[2]))
    return None


def validate_ring(
    add,
    mul,
    one: int,
    *,
    name: str = "",
    order_cap: int = DEFAULT_ORDER_CAP,
) -> FiniteRing:
    """Validate raw tables and return a FiniteRing.

    Raises RingFormatError for shape problems, RingAxiomError naming the
    first violated axiom with a witnessing element tuple, CapExceededError
    above the order cap.
    """
    add = _as_table(add, "add")
    mul = _as_table(mul, "mul")
    n = len(add)
    if n < 1:
        raise RingFormatError("ring order must be at least 1")
    if n > order_cap:
        raise CapExceededError(f"order {n} exceeds cap {order_cap}")
    _check_shape(add, n, n, "add")
    _check_shape(mul, n, n, "mul")
    _check_entries(add, n, "add")
    _check_entries(mul, n, "mul")
    if not 0 <= one < n:
        raise RingFormatError(f"one = {one} out of range")

    A = np.array(add, dtype=np.int64)
    M = np.array(mul, dtype=np.int64)

    # additive identity: 0 + x = x + 0 = x
    for x in range(n):
        if add[0][x] != x:
            raise RingAxiomError("additive identity", (0, x))
        if add[x][0] != x:
            raise RingAxiomError("additive identity", (x, 0))
    # commutativity of addition
    if not np.array_equal(A, A.T):
        a, b = map(int, np.argwhere(A != A.T)[0])
        raise RingAxiomError("additive commutativity", (a, b))
    # additive inverses
    for x in range(n):
        if 0 not in add[x]:
            raise RingAxiomError("additive inverse", (x,))
    def rows(sl: slice) -> np.ndarray:
        return np.arange(*sl.indices(n))

    # associativity of addition: (a+b)+c == a+(b+c)
    bad = _scan_triples(
        n, lambda sl: (A[A[sl]], A[rows(sl)[:, None, None], A[None, :, :]])
    )
    if bad is not None:
        raise RingAxiomError("additive associativity", bad)
    # associativity of multiplication: (ab)c == a(bc)
    bad = _scan_triples(
        n, lambda sl: (M[M[sl]], M[rows(sl)[:, None, None], M[None, :, :]])
    )
    if bad is not None:
        raise RingAxiomError("multiplicative associativity", bad)
    # one is a two-sided identity
    for x in range(n):
        if mul[one][x] != x:
            raise RingAxiomError("one is not identity", (one, x))
        if mul[x][one] != x:
            raise RingAxiomError("one is not identity", (x, one))
    # right distributivity: (a+b)c == ac + bc
    bad = _scan_triples(
        n, lambda sl: (M[A[sl]], A[M[sl][:, None, :], M[None, :, :]])
    )
    if bad is not None:
        raise RingAxiomError("right distributivity", bad)
    # left distributivity: a(b+c) == ab + ac
    bad = _scan_triples(
        n,
        lambda sl: (
            M[rows(sl)[:, None, None], A[None, :, :]],
            A[M[sl][:, :, None], M[sl][:, None, :]],
        ),
    )
    if bad is not None:
        raise RingAxiomError("left distributivity", bad)

    return FiniteRing(order=n, add=add, mul=mul, one=one, name=name)


# ---------------------------------------------------------------------------
# builtin families

def _matrix_ring(p: int, positions: list[tuple[int, int]], k: int, name: str,
                 order_cap: int) -> FiniteRing:
    """Ring of k x k matrices over F_p supported on the given entry positions.

    Elements are enumerated lexicographically over the entry vector in
    row-major position order; the zero matrix gets id 0.
    """
    _require_prime(p)
    d = len(positions)
    if p ** d > order_cap:
        raise CapExceededError(f"order {p ** d} exceeds cap {order_cap}")
    pos_index = {pos: i for i, pos in enumerate(positions)}

    def decode(idx: int) -> list[list[int]]:
        mat = [[0] * k for _ in range(k)]
        for i in range(d - 1, -1, -1):
            r, c = positions[i]
            mat[r][c] = idx % p
            idx //= p
        return mat

    def encode(mat) -> int:
        idx = 0
        for r, c in positions:
            idx = idx * p + mat[r][c] % p
        return idx

    n = p ** d
    mats = [decode(i) for i in range(n)]
    add = []
    mul = []
    for x in mats:
        add_row = []
        mul_row = []
        for y in mats:
            s = [[(x[r][c] + y[r][c]) % p for c in range(k)] for r in range(k)]
            add_row.append(encode(s))
            prod = [[sum(x[r][t] * y[t][c] for t in range(k)) % p
                     for c in range(k)] for r in range(k)]
            if any(prod[r][c] and (r, c) not in pos_index
                   for r in range(k) for c in range(k)):
                raise RingFormatError("entry pattern not closed under product")
            mul_row.append(encode(prod))
        add.append(add_row)
        mul.append(mul_row)
    ident = [[1 if r == c else 0 for c in range(k)] for r in range(k)]
    return validate_ring(add, mul, encode(ident), name=name, order_cap=order_cap)


def _require_prime(p: int) -> None:
    if p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
        raise RingFormatError(f"field characteristic {p} is not prime")


def zmod(n: int, *, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteRing:
    """The ring of integers modulo n."""
    if n < 1:
        raise RingFormatError("modulus must be positive")
    if n > order_cap:
        raise CapExceededError(f"order {n} exceeds cap {order_cap}")
    add = [[(a + b) % n for b in range(n)] for a in range(n)]
    mul = [[(a * b) % n for b in range(n)] for a in range(n)]
    return validate_ring(add, mul, 1 % n, name=f"zmod:{n}", order_cap=order_cap)


def tri2(p: int, *, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteRing:
    """Lower triangular 2x2 matrices over the prime field F_p (order p^3)."""
    return _matrix_ring(p, [(0, 0), (1, 0), (1, 1)], 2, f"tri2:{p}", order_cap)


def mat(k: int, p: int, *, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteRing:
    """Full k x k matrix ring over F_p (order p^(k^2))."""
    if k < 1:
        raise RingFormatError("matrix size must be positive")
    positions = [(r, c) for r in range(k) for c in range(k)]
    return _matrix_ring(p, positions, k, f"mat:{k}:{p}", order_cap)


def product(*rings: FiniteRing, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteRing:
    """Direct product, elements enumerated lexicographically by component ids."""
    if not rings:
        raise RingFormatError("product needs at least one factor")
    n = 1
    for r in rings:
        n *= r.order
    if n > order_cap:
        raise CapExceededError(f"order {n} exceeds cap {order_cap}")

    sizes = [r.order for r in rings]

    def decode(idx: int) -> list[int]:
        out = []
        for size in reversed(sizes):
            out.append(idx % size)
            idx //= size
        return out[::-1]

    def encode(parts) -> int:
        idx = 0
        for size, v in zip(sizes, parts):
            idx = idx * size + v
        return idx

    elems = [decode(i) for i in range(n)]
    add = [[encode([r.add[x[i]][y[i]] for i, r in enumerate(rings)])
            for y in elems] for x in elems]
    mul = [[encode([r.mul[x[i]][y[i]] for i, r in enumerate(rings)])
            for y in elems] for x in elems]
    one = encode([r.one for r in rings])
    name = "prod:" + ",".join(r.name or "?" for r in rings)
    return validate_ring(add, mul, one, name=name, order_cap=order_cap)


def fp_algebra(
    p: int,
    dim: int,
    structure_constants,
    unit_vector,
    *,
    name: str = "",
    order_cap: int = DEFAULT_ORDER_CAP,
) -> FiniteRing:
    """Algebra over F_p with basis e_0..e_{d-1} and e_i e_j = sum_k c[i][j][k] e_k.

    Elements are coefficient vectors enumerated lexicographically; the
    resulting tables are validated in full.
    """
    _require_prime(p)
    if dim < 1:
        raise RingFormatError("dimension must be positive")
    if p ** dim > order_cap:
        raise CapExceededError(f"order {p ** dim} exceeds cap {order_cap}")
    c = [[[int(v) % p for v in row] for row in plane] for plane in structure_constants]
    if len(c) != dim or any(len(pl) != dim for pl in c) or any(
        len(row) != dim for pl in c for row in pl
    ):
        raise RingFormatError("structure constants must be d x d x d")
    unit = [int(v) % p for v in unit_vector]
    if len(unit) != dim:
        raise RingFormatError("unit vector must have length d")

    n = p ** dim

    def decode(idx: int) -> list[int]:
        out = []
        for _ in range(dim):
            out.append(idx % p)
            idx //= p
        return out[::-1]

    def encode(vec) -> int:
        idx = 0
        for v in vec:
            idx = idx * p + v % p
        return idx

    vecs = [decode(i) for i in range(n)]
    add = [[encode([(x[i] + y[i]) % p for i in range(dim)]) for y in vecs]
           for x in vecs]
    mul = []
    for x in vecs:
        row = []
        for y in vecs:
            out = [0] * dim
            for i in range(dim):
                if not x[i]:
                    continue
                for j in range(dim):
                    if not y[j]:
                        continue
                    coef = x[i] * y[j]
                    for k in range(dim):
                        out[k] = (out[k] + coef * c[i][j][k]) % p
            row.append(encode(out))
        mul.append(row)
    return validate_ring(add, mul, encode(unit), name=name, order_cap=order_cap)


BUILTIN_PREFIXES = ("zmod", "tri2", "mat", "prod")


def parse_ring_spec(text: str, *, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteRing:
    """Parse a builtin ring spec: zmod:n | tri2:p | mat:k:p | prod:spec,spec,..."""
    head, _, rest = text.partition(":")
    try:
        if head == "zmod":
            return zmod(int(rest), order_cap=order_cap)
        if head == "tri2":
            return tri2(int(rest), order_cap=order_cap)
        if head == "mat":
            k, _, p = rest.partition(":")
            return mat(int(k), int(p), order_cap=order_cap)
        if head == "prod":
            parts = [s for s in rest.split(",") if s]
            if len(parts) < 2:
                raise RingFormatError("prod needs at least two factors")
            factors = [parse_ring_spec(s, order_cap=order_cap) for s in parts]
            return product(*factors, order_cap=order_cap)
    except ValueError as exc:
        raise RingFormatError(f"bad ring spec {text!r}: {exc}") from exc
    raise RingFormatError(f"unknown ring spec {text!r}")


# ---------------------------------------------------------------------------
# serialization

def serialize_ring(ring: FiniteRing) -> bytes:
    """Canonical byte document; round-trips through parse_ring_document."""
    doc = {
        "order": ring.order,
        "one": ring.one,
        "add": [list(row) for row in ring.add],
        "mul": [list(row) for row in ring.mul],
    }
    return (json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n").encode()


_RING_FIELDS = {"order", "one", "add", "mul"}
_FP_FIELDS = {"fp_algebra"}
_FP_INNER = {"p", "dim", "structure_constants", "unit_vector"}


def parse_ring_document(data: bytes | str, *,
                        order_cap: int = DEFAULT_ORDER_CAP) -> FiniteRing:
    """Parse and fully validate a ring document (table or fp_algebra form)."""
    if isinstance(data, bytes):
        data = data.decode()
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise RingFormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise RingFormatError("ring document must be an object")
    keys = set(doc)
    if keys == _FP_FIELDS:
        inner = doc["fp_algebra"]
        if not isinstance(inner, dict) or set(inner) != _FP_INNER:
            raise RingFormatError(
                f"fp_algebra must have exactly fields {sorted(_FP_INNER)}"
            )
        return fp_algebra(
            int(inner["p"]), int(inner["dim"]),
            inner["structure_constants"], inner["unit_vector"],
            order_cap=order_cap,
        )
    if keys != _RING_FIELDS:
        unknown = keys - _RING_FIELDS
        missing = _RING_FIELDS - keys
        parts = []
        if unknown:
            parts.append(f"unknown fields {sorted(unknown)}")
        if missing:
            parts.append(f"missing fields {sorted(missing)}")
        raise RingFormatError("; ".join(parts))
    n = int(doc["order"])
    add, mul = doc["add"], doc["mul"]
    for what, table in (("add", add), ("mul", mul)):
        if not isinstance(table, list) or len(table) != n:
            raise RingFormatError(f"{what} table must have {n} rows")
        for i, row in enumerate(table):
            if not isinstance(row, list) or len(row) != n:
                raise RingFormatError(f"{what} row {i} must have {n} entries")
            for j, v in enumerate(row):
                if not isinstance(v, int) or not 0 <= v < n:
                    raise RingFormatError(
                        f"{what}[{i}][{j}] = {v!r} out of range 0..{n - 1}"
                    )
    return validate_ring(add, mul, int(doc["one"]), order_cap=order_cap)
