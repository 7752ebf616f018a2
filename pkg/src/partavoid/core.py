###############################################################################
#
#  Set partitions of [n] = {1, ..., n} in standard form, the correspondence
#  with restricted growth functions, and the exhaustive generators (partitions,
#  matchings, weak compositions) that the counting oracle and the tables use.
#
#  Standard form: blocks sorted by minimum element, elements ascending inside
#  each block.  Text format: "1 3/2 5 6/4", or compact "13/25/4" when every
#  element is a single digit.
#
###############################################################################

from functools import lru_cache


class PartitionError(ValueError):
    """Base class for malformed partition input."""


class OverlappingBlocks(PartitionError):
    pass


class NotACover(PartitionError):
    pass


class EmptyBlock(PartitionError):
    pass


class InvalidRGF(PartitionError):
    pass


# =========================================================================
# SetPartition
# =========================================================================

class SetPartition:
    """A set partition of [n], kept in standard form.

    Immutable; equality and hashing are structural (same n, same blocks).
    """

    __slots__ = ("n", "blocks")

    def __init__(self, blocks, n=None):
        # assumes blocks are disjoint nonempty sets of 1..n; use from_blocks
        # for fully validated construction
        bs = tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0]))
        object.__setattr__(self, "blocks", bs)
        if n is None:
            n = sum(len(b) for b in bs)
        object.__setattr__(self, "n", n)

    def __setattr__(self, name, value):
        raise AttributeError("SetPartition is immutable")

    @classmethod
    def from_blocks(cls, blocks, n):
        """Validated constructor: blocks must partition {1..n} exactly."""
        seen = set()
        for b in blocks:
            b = set(b)
            if not b:
                raise EmptyBlock("empty block")
            if seen & b:
                raise OverlappingBlocks(f"elements repeated across blocks: {sorted(seen & b)}")
            seen |= b
        if seen != set(range(1, n + 1)):
            raise NotACover(f"blocks cover {sorted(seen)}, expected 1..{n}")
        return cls(blocks, n)

    @classmethod
    def from_rgf(cls, letters):
        """Build the partition with i in block number letters[i-1]."""
        letters = list(letters)
        if not letters or letters[0] != 1:
            raise InvalidRGF("word must start with 1")
        mx = 0
        blocks = []
        for i, a in enumerate(letters, start=1):
            if not 1 <= a <= mx + 1:
                raise InvalidRGF(f"letter {a} at position {i} exceeds 1+max of prefix")
            if a == mx + 1:
                blocks.append([i])
                mx += 1
            else:
                blocks[a - 1].append(i)
        return cls(blocks, len(letters))

    @classmethod
    def parse(cls, text):
        """Parse "1 3/2 5 6/4" or compact "13/25/4" (single-digit elements)."""
        text = text.strip()
        if not text:
            raise PartitionError("empty partition text")
        chunks = [c.strip() for c in text.split("/")]
        if any(not c for c in chunks):
            raise EmptyBlock("empty block in text")
        if any(" " in c for c in chunks):
            blocks = [[int(tok) for tok in c.split()] for c in chunks]
        elif all(c.isdigit() for c in chunks):
            blocks = [[int(ch) for ch in c] for c in chunks]
            try:
                return cls.from_blocks(blocks, max(max(b) for b in blocks))
            except PartitionError:
                # all-singleton partitions of n >= 10 have no spaces to
                # signal the spaced form; retry with whole-number chunks
                blocks = [[int(c)] for c in chunks]
        else:
            raise PartitionError(f"cannot read partition text {text!r}")
        n = max(max(b) for b in blocks)
        return cls.from_blocks(blocks, n)

    def to_rgf(self):
        letters = [0] * self.n
        for j, b in enumerate(self.blocks, start=1):
            for x in b:
                letters[x - 1] = j
        return RGFWord(letters)

    def complement(self):
        """Replace each element x by n+1-x; an involution on partitions of [n]."""
        m = self.n + 1
        return SetPartition([[m - x for x in b] for b in self.blocks], self.n)

    def restrict(self, subset):
        """Blocks of the restriction to subset (empty intersections dropped)."""
        s = set(subset)
        return [[x for x in b if x in s] for b in self.blocks if s & set(b)]

    def block_sizes(self):
        return tuple(len(b) for b in self.blocks)

    def block_of(self, x):
        for b in self.blocks:
            if x in b:
                return b
        raise KeyError(x)

    def singletons(self):
        return [b[0] for b in self.blocks if len(b) == 1]

    def __eq__(self, other):
        return (
            isinstance(other, SetPartition)
            and self.n == other.n
            and self.blocks == other.blocks
        )

    def __hash__(self):
        return hash((self.n, self.blocks))

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __str__(self):
        if self.n <= 9:
            return "/".join("".join(str(x) for x in b) for b in self.blocks)
        return "/".join(" ".join(str(x) for x in b) for b in self.blocks)

    def __repr__(self):
        return f"SetPartition({self})"


def standardize(blocks):
    """Order-isomorphic relabeling of disjoint blocks onto {1..size}.

    The input may use arbitrary positive integers; {{2,5},{3}} becomes 13/2.
    """
    seen = set()
    cleaned = []
    for b in blocks:
        b = set(b)
        if not b:
            raise EmptyBlock("empty block")
        if seen & b:
            raise OverlappingBlocks(f"elements repeated across blocks: {sorted(seen & b)}")
        seen |= b
        cleaned.append(b)
    rank = {x: i for i, x in enumerate(sorted(seen), start=1)}
    return SetPartition([[rank[x] for x in b] for b in cleaned], len(seen))


# =========================================================================
# RGF words
# =========================================================================

class RGFWord(tuple):
    """A restricted growth function: a_1 = 1 and a_i <= 1 + max(prefix)."""

    def __new__(cls, letters):
        letters = tuple(int(a) for a in letters)
        mx = 0
        for i, a in enumerate(letters, start=1):
            if a < 1 or a > mx + 1:
                raise InvalidRGF(f"letter {a} at position {i} breaks the growth rule")
            mx = max(mx, a)
        if not letters:
            raise InvalidRGF("empty word")
        return super().__new__(cls, letters)

    @classmethod
    def parse(cls, text):
        """Digits ("12211") or comma-separated integers ("1,2,2,1,1")."""
        text = text.strip()
        if "," in text:
            return cls(int(tok) for tok in text.split(","))
        if not text.isdigit():
            raise InvalidRGF(f"cannot read RGF text {text!r}")
        return cls(int(ch) for ch in text)

    def to_partition(self):
        return SetPartition.from_rgf(self)

    def __str__(self):
        if max(self) <= 9:
            return "".join(str(a) for a in self)
        return ",".join(str(a) for a in self)

    def __repr__(self):
        return f"RGFWord({self})"


def iter_rgf_words(n, max_letter=None):
    """All RGF words of length n in lexicographic order (optionally capped)."""
    if n < 1:
        return
    word = [1] * n

    def rec(i, mx):
        if i == n:
            yield RGFWord(word)
            return
        top = mx + 1 if max_letter is None else min(mx + 1, max_letter)
        for a in range(1, top + 1):
            word[i] = a
            yield from rec(i + 1, max(mx, a))

    yield from rec(1, 1)


def iter_partitions(n):
    """Every partition of [n] exactly once, in lexicographic RGF order."""
    for w in iter_rgf_words(n):
        yield SetPartition.from_rgf(w)


# =========================================================================
# Matchings (blocks of size <= 2) and weak compositions
# =========================================================================

class Matching(SetPartition):
    """A partition whose blocks are singletons and doubletons."""

    __slots__ = ()

    def __init__(self, blocks, n=None):
        super().__init__(blocks, n)
        if any(len(b) > 2 for b in self.blocks):
            raise PartitionError("matching blocks must have size 1 or 2")

    @property
    def k(self):
        """Number of doubletons."""
        return sum(1 for b in self.blocks if len(b) == 2)

    @property
    def f(self):
        """Number of singletons."""
        return sum(1 for b in self.blocks if len(b) == 1)


def iter_matchings(k, f):
    """All matchings of [2k+f] with exactly k doubletons and f singletons."""
    n = 2 * k + f
    if n == 0:
        yield Matching([], 0)
        return

    def rec(avail, pairs_left, singles_left, acc):
        if not avail:
            yield Matching(list(acc), n)
            return
        x = avail[0]
        rest = avail[1:]
        if singles_left:
            acc.append((x,))
            yield from rec(rest, pairs_left, singles_left - 1, acc)
            acc.pop()
        if pairs_left:
            for i, y in enumerate(rest):
                acc.append((x, y))
                yield from rec(rest[:i] + rest[i + 1:], pairs_left - 1, singles_left, acc)
                acc.pop()

    yield from rec(tuple(range(1, n + 1)), k, f, [])


def m_count(n):
    """Number of matchings of [n] with any number of fixed points."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    a, b = 1, 1  # m_count(0), m_count(1)
    if n == 0:
        return a
    for i in range(2, n + 1):
        a, b = b, b + (i - 1) * a
    return b


class Composition(tuple):
    """A weak composition: ordered nonnegative parts with a fixed count."""

    def __new__(cls, parts):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise ValueError("parts must be nonnegative")
        return super().__new__(cls, parts)

    @property
    def k(self):
        return len(self)

    @property
    def total(self):
        return sum(self)


def iter_compositions(total, k):
    """All weak compositions of total into k parts, lexicographic."""
    if k < 1:
        raise ValueError("need at least one part")

    def rec(remaining, parts_left, acc):
        if parts_left == 1:
            acc.append(remaining)
            yield Composition(acc)
            acc.pop()
            return
        for p in range(remaining + 1):
            acc.append(p)
            yield from rec(remaining - p, parts_left - 1, acc)
            acc.pop()

    yield from rec(total, k, [])


# =========================================================================
# Named pattern families
# =========================================================================

def single_block_pattern(k):
    """The partition of [k] with one block."""
    return SetPartition([range(1, k + 1)], k)


def singletons_pattern(k):
    """The partition of [k] into k singletons."""
    return SetPartition([[x] for x in range(1, k + 1)], k)


def punctured_block_pattern(k, a):
    """1..(a-1)(a+1)..k / a: one block missing the point a, plus {a}."""
    if not 1 <= a <= k:
        raise ValueError("need 1 <= a <= k")
    if k < 2:
        raise ValueError("need k >= 2")
    return SetPartition([[x for x in range(1, k + 1) if x != a], [a]], k)


def spanning_doubleton_pattern(k):
    """1k/2/3/../(k-1): the doubleton {1,k} plus singletons."""
    if k < 3:
        raise ValueError("need k >= 3")
    return SetPartition([[1, k]] + [[x] for x in range(2, k)], k)


# =========================================================================
# Small exact counting helpers
# =========================================================================

@lru_cache(maxsize=None)
def stirling2(n, k):
    if n < 0 or k < 0:
        raise ValueError("arguments must be nonnegative")
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def bell(n):
    return sum(stirling2(n, k) for k in range(n + 1))


def double_factorial(m):
    """m!! in the standard sense: 6!! = 48, 5!! = 15, 0!! = (-1)!! = 1."""
    if m < -1:
        raise ValueError("undefined")
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


def falling(x, i):
    """Falling factorial x(x-1)...(x-i+1)."""
    out = 1
    for j in range(i):
        out *= x - j
    return out


def perfect_matchings(two_k):
    """Number of perfect matchings of [2k]: the odd double factorial
    1*3*...*(2k-1)."""
    if two_k % 2:
        return 0
    return double_factorial(two_k - 1)


__all__ = [
    "PartitionError",
    "OverlappingBlocks",
    "NotACover",
    "EmptyBlock",
    "InvalidRGF",
    "SetPartition",
    "RGFWord",
    "Matching",
    "Composition",
    "standardize",
    "iter_rgf_words",
    "iter_partitions",
    "iter_matchings",
    "iter_compositions",
    "m_count",
    "stirling2",
    "bell",
    "double_factorial",
    "falling",
    "perfect_matchings",
    "single_block_pattern",
    "singletons_pattern",
    "punctured_block_pattern",
    "spanning_doubleton_pattern",
]
