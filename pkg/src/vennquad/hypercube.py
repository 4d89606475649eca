"""Bit-string vertex arithmetic and canonical type sequences.

Conventions used everywhere in this package:

* A vertex of the hypercube Q_n is an integer ``0 <= x < 2**n``.  Bit
  *positions* are 1-based and count from the left of the written bitstring,
  so position ``i`` corresponds to the integer bit ``1 << (n - i)``.  The
  all-zero string ``0^n`` is the integer 0, ``1^n`` is ``2**n - 1``.
* An edge of Q_n has a *type*: the position of the single bit in which its
  endpoints differ.
* A cycle through ``0^n`` is encoded by its *type sequence*
  ``(t_1, ..., t_l)``: walking from 0 and flipping bit ``t_1``, then ``t_2``,
  and so on returns to 0 after ``l`` steps and visits ``l`` distinct
  vertices.

The hypercube automorphisms are exactly the bit-position permutations
combined with XOR translations.  Pinning the start vertex at 0 quotients the
translations; first-occurrence relabeling quotients the permutations; taking
the lexicographic minimum over all cyclic shifts and reversals quotients the
choice of start position and direction along the cycle.
"""

from __future__ import annotations

from vennquad.errors import NotHypercubeEdge, NotLexMin

MAX_DIM = 16


def type_mask(t: int, n: int) -> int:
    """Integer bit for type ``t`` in an ``n``-bit label."""
    return 1 << (n - t)


def mask_type(mask: int, n: int) -> int:
    """Inverse of :func:`type_mask` for a single-bit mask."""
    return n - mask.bit_length() + 1


def weight(x: int) -> int:
    """Number of 1-bits of a label."""
    return x.bit_count()


def label_from_string(s: str) -> int:
    if not s or set(s) - {"0", "1"}:
        raise ValueError(f"not a bitstring: {s!r}")
    return int(s, 2)


def label_to_string(x: int, n: int) -> str:
    return format(x, f"0{n}b")


def edge_type(x: int, y: int, n: int) -> int:
    """Type of the hypercube edge between two ``n``-bit labels.

    Raises :class:`NotHypercubeEdge` if the labels do not differ in exactly
    one bit.
    """
    d = x ^ y
    if d == 0 or d & (d - 1):
        raise NotHypercubeEdge(
            f"{label_to_string(x, n)} and {label_to_string(y, n)} differ in "
            f"{d.bit_count()} bits"
        )
    return mask_type(d, n)


def walk_vertices(tau, n: int) -> list[int]:
    """Vertices visited by the walk from 0 flipping ``tau``; length l+1."""
    verts = [0]
    x = 0
    for t in tau:
        x ^= type_mask(t, n)
        verts.append(x)
    return verts


def is_simple_cycle(tau, n: int | None = None) -> bool:
    """True iff ``tau`` encodes a simple cycle from 0 back to 0."""
    if len(tau) < 4 or len(tau) % 2:
        return False
    if n is None:
        n = max(tau)
    verts = walk_vertices(tau, n)
    if verts[-1] != 0:
        return False
    interior = verts[:-1]
    return len(set(interior)) == len(interior)


def lexmin_relabel(tau, n: int | None = None):
    """Rename types by first occurrence so every prefix with r distinct
    types uses exactly the types 1..r.

    Returns ``(relabeled, sigma)`` where ``sigma`` maps each old type to its
    new name.  Types of ``[n]`` that do not occur in ``tau`` are assigned the
    remaining names in increasing order, making ``sigma`` a full permutation.
    """
    if not tau:
        raise ValueError("empty type sequence")
    if n is None:
        n = max(tau)
    sigma: dict[int, int] = {}
    out = []
    for t in tau:
        if t not in sigma:
            sigma[t] = len(sigma) + 1
        out.append(sigma[t])
    nxt = len(sigma) + 1
    for t in range(1, n + 1):
        if t not in sigma:
            sigma[t] = nxt
            nxt += 1
    return tuple(out), sigma


def _relabeled(seq):
    """First-occurrence relabeling of a sequence (no permutation returned)."""
    names: dict[int, int] = {}
    out = []
    for t in seq:
        if t not in names:
            names[t] = len(names) + 1
        out.append(names[t])
    return out


def cycle_variants(tau):
    """All 2l cyclic shifts and reversals of ``tau``, unrelabeled."""
    l = len(tau)
    doubled = tau + tau
    for s in range(l):
        fwd = doubled[s : s + l]
        yield fwd
        yield fwd[::-1]


def is_canonical_cycle(tau) -> bool:
    """True iff ``tau`` is the canonical encoding of its cycle orbit.

    ``tau`` must already be in first-occurrence relabeled form (otherwise
    :class:`NotLexMin` is raised).  Sequences that do not encode a simple
    cycle are rejected with ``False``.  Among encodings of a simple cycle,
    the canonical one is lexicographically minimal over the relabelings of
    all cyclic shifts and reversals.
    """
    tau = tuple(tau)
    if _relabeled(tau) != list(tau):
        raise NotLexMin(f"{tau} is not first-occurrence relabeled")
    if not is_simple_cycle(tau):
        return False
    lst = list(tau)
    for var in cycle_variants(tau):
        if _relabeled(var) < lst:
            return False
    return True


def canonicalize_cycle(tau):
    """Canonical representative of the orbit of a simple-cycle encoding."""
    if not is_simple_cycle(tuple(tau)):
        raise ValueError(f"{tau} does not encode a simple cycle")
    return min(tuple(_relabeled(v)) for v in cycle_variants(tuple(tau)))


def parse_type_sequence(line: str):
    """Parse the one-line serialization: comma-separated integer types."""
    return tuple(int(p) for p in line.strip().split(","))


def format_type_sequence(tau) -> str:
    return ",".join(str(t) for t in tau)
