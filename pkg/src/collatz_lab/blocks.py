"""Block decomposition of trajectories between consecutive beta values.

A *block* is the stretch of trajectory from one beta = 4k_in + 2 to the next
beta = 4k_out + 2: the chain climbs to alpha = 4h + 1 in 2m+1 steps, one odd
step lands on gamma = 4g + 4 with g = 3h, and e halvings (e >= 1) fall back
to a beta.  The indices obey

    k_out = k_in * 3^(m+1) / 2^(e+m+1)
          + (3^(m+1) - 2^m - 2^(e+m)) / 2^(e+m+1)

an affine map k_out = A*k_in + B whose denominators clear exactly on real
blocks; ``recurrence_holds`` asserts the cleared integer form.  Iterating
blocks walks beta to beta; the fixed point k = 0 is the trivial loop
2 -> 1 -> 4 -> 2.  The affine form also makes sense for *formal* parameter
lists (m_j, e_j) that need not come from a real trajectory, which is what
the cycle search exploits.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .beta_chain import chain_path, solve_beta_chain, v2
from .errors import DomainError, LimitExceeded

__all__ = [
    "Block",
    "BlockSequence",
    "make_block",
    "block_path",
    "decompose",
    "decompose_until_trivial",
    "recurrence_holds",
    "verify_recurrence",
    "formal_coefficients",
    "affine_coefficients",
    "iterate_affine",
    "closed_form_k",
    "block_counterexample",
]


class Block(NamedTuple):
    k_in: int
    m: int
    h: int
    g: int
    e: int
    k_out: int

    @property
    def beta_in(self) -> int:
        return 4 * self.k_in + 2

    @property
    def alpha(self) -> int:
        return 4 * self.h + 1

    @property
    def gamma(self) -> int:
        return 4 * self.g + 4

    @property
    def beta_out(self) -> int:
        return 4 * self.k_out + 2

    @property
    def steps(self) -> int:
        return 2 * self.m + self.e + 2


@dataclass
class BlockSequence:
    """Consecutive blocks; each one's k_out feeds the next one's k_in."""

    blocks: list[Block]

    def __post_init__(self) -> None:
        for a, b in zip(self.blocks, self.blocks[1:]):
            if a.k_out != b.k_in:
                raise DomainError(f"blocks do not chain: k_out {a.k_out} then k_in {b.k_in}")

    def __len__(self) -> int:
        return len(self.blocks)

    @property
    def k_seq(self) -> list[int]:
        """k_0, k_1, ..., k_n — one longer than the block list."""
        if not self.blocks:
            return []
        return [self.blocks[0].k_in] + [b.k_out for b in self.blocks]

    @property
    def m_seq(self) -> list[int]:
        return [b.m for b in self.blocks]

    @property
    def e_seq(self) -> list[int]:
        return [b.e for b in self.blocks]


def make_block(k_in: int) -> Block:
    sol = solve_beta_chain(k_in)
    g = 3 * sol.h
    e = v2(4 * g + 4) - 1
    k_out = ((4 * g + 4 >> e) - 2) >> 2
    return Block(k_in, sol.m, sol.h, g, e, k_out)


def block_path(b: Block) -> list[int]:
    """All 2m+e+3 trajectory values of the block, beta_in..beta_out inclusive,
    generated arithmetically rather than by iterating the map."""
    path = chain_path(b.k_in, b.m)
    gam = b.gamma
    for j in range(b.e + 1):
        path.append(gam >> j)
    return path


def decompose(k0: int, n_blocks: int) -> BlockSequence:
    """n_blocks consecutive blocks starting from beta = 4*k0 + 2.

    Once k reaches 0 the sequence keeps repeating the trivial block
    (m=0, e=1, k_out=0): the walk has entered the 2 -> 1 -> 4 -> 2 loop.
    """
    if n_blocks < 1:
        raise DomainError(f"n_blocks must be >= 1, got {n_blocks}")
    out = []
    k = k0
    for _ in range(n_blocks):
        b = make_block(k)
        out.append(b)
        k = b.k_out
    return BlockSequence(out)


def decompose_until_trivial(k0: int, max_blocks: int = 10**5) -> BlockSequence:
    """Blocks from k0 until the fixed point k = 0 first appears as an output.

    Raises LimitExceeded (with the blocks so far attached as ``partial``) if
    k never hits 0 within max_blocks — which for any honest k0 just means
    the budget was too small.
    """
    out: list[Block] = []
    k = k0
    while k != 0 or not out:
        if len(out) >= max_blocks:
            raise LimitExceeded(
                f"no trivial block after {max_blocks} blocks from k0={k0}",
                partial=BlockSequence(out),
            )
        b = make_block(k)
        out.append(b)
        k = b.k_out
    return BlockSequence(out)


def recurrence_holds(b: Block) -> bool:
    """Integer (cleared-denominator) form of the block recurrence."""
    lhs = b.k_out * 2 ** (b.e + b.m + 1)
    rhs = b.k_in * 3 ** (b.m + 1) + 3 ** (b.m + 1) - 2**b.m - 2 ** (b.e + b.m)
    return lhs == rhs


def verify_recurrence(bs: BlockSequence):
    """Evaluate the affine recurrence in exact rationals on every block and
    report any violation (expected: none, ever)."""
    from .report import Counterexample, VerificationReport

    if not bs.blocks:
        raise DomainError("empty block sequence")
    bad = []
    for i, b in enumerate(bs.blocks):
        a, off = affine_coefficients(b)
        predicted = a * b.k_in + off
        if predicted != b.k_out:
            bad.append(
                Counterexample(f"block {i} k_in={b.k_in}", str(b.k_out), str(predicted))
            )
    return VerificationReport(
        command="verify blocks",
        checked=len(bs.blocks),
        counterexamples=bad,
        elapsed_ms=0,
        config={"blocks": str(len(bs.blocks))},
    )


def formal_coefficients(m: int, e: int) -> tuple[Fraction, Fraction]:
    """(A, B) of the affine map k -> A*k + B for formal parameters (m, e)."""
    if m < 0 or e < 1:
        raise DomainError(f"need m >= 0 and e >= 1, got (m, e) = ({m}, {e})")
    den = 2 ** (e + m + 1)
    return Fraction(3 ** (m + 1), den), Fraction(3 ** (m + 1) - 2**m - 2 ** (e + m), den)


def affine_coefficients(b: Block) -> tuple[Fraction, Fraction]:
    return formal_coefficients(b.m, b.e)


def iterate_affine(k0, m_seq: Sequence[int], e_seq: Sequence[int]) -> list[Fraction]:
    """Apply the affine maps for (m_seq[j], e_seq[j]) in order; returns
    [k0, k1, ..., kn] as exact fractions."""
    if len(m_seq) != len(e_seq):
        raise DomainError(f"parameter lists differ in length: {len(m_seq)} vs {len(e_seq)}")
    ks = [Fraction(k0)]
    for m, e in zip(m_seq, e_seq):
        a, b = formal_coefficients(m, e)
        ks.append(ks[-1] * a + b)
    return ks


def closed_form_k(k0, m_seq: Sequence[int], e_seq: Sequence[int]) -> Fraction:
    """k_n written directly as k0 * prod(A_j) + sum_j B_j * prod_{i>j} A_i.

    Non-integral results are legal: formal parameter lists need not describe
    any real trajectory.  On lists taken from a real decomposition this
    equals the decomposition's final k_out.
    """
    if len(m_seq) != len(e_seq) or not m_seq:
        raise DomainError("need equal-length, non-empty parameter lists")
    coeffs = [formal_coefficients(m, e) for m, e in zip(m_seq, e_seq)]
    total = Fraction(k0)
    for a, _ in coeffs:
        total *= a
    for j, (_, b) in enumerate(coeffs):
        tail = b
        for a, _ in coeffs[j + 1 :]:
            tail *= a
        total += tail
    return total


def block_counterexample(k0: int) -> tuple[str, str] | None:
    """Sweep-grade check of the full decomposition from k0 down to the
    trivial block: every block must balance the integer recurrence and the
    concatenated block paths must equal the raw trajectory of 4*k0 + 2,
    value for value and class for class.  None when all of it holds."""
    k = k0
    v = 4 * k0 + 2
    for _ in range(10**6):
        b = make_block(k)
        if not recurrence_holds(b):
            return ("block recurrence balance", f"violated at {b}")
        path = block_path(b)
        for i, expect in enumerate(path):
            if v != expect:
                return (f"path value {expect} (block k_in={b.k_in}, offset {i})", str(v))
            want = _expected_residue(b, i)
            if v & 3 != want:
                return (f"path residue {want} (mod 4)", f"{v} ~ {v & 3} (mod 4)")
            if i < len(path) - 1:
                v = 3 * v + 1 if v & 1 else v >> 1
        k = b.k_out
        if k == 0:
            return None
    return ("arrival at the trivial block", f"still k={k} after 10^6 blocks")


def _expected_residue(b: Block, i: int) -> int:
    chain_len = 2 * b.m + 2
    if i < chain_len - 1:
        return 2 if i % 2 == 0 else 3
    if i == chain_len - 1:
        return 1  # the alpha
    if i < chain_len + b.e:
        return 0  # gamma, incl. intermediate halvings
    return 2  # the closing beta
