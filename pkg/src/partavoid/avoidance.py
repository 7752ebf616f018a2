###############################################################################
#
#  Containment and avoidance in Klazar's sense: sigma contains tau when some
#  subset S of the ground set restricts-and-standardizes to tau.  This module
#  has the pruned containment search, a deliberately naive all-subsets checker
#  kept as the test oracle, RGF-word containment for contrast, the block-level
#  criterion for the patterns 1..(a-1)(a+1)..k/a, and the sharded brute-force
#  counter over the RGF prefix tree.
#
###############################################################################

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from .core import SetPartition, standardize


# =========================================================================
# containment
# =========================================================================

def _pattern_data(tau):
    """Standard form, block index per pattern element, block count."""
    tau = standardize(tau.blocks)
    k = tau.n
    pb = [0] * (k + 1)
    for ti, b in enumerate(tau.blocks):
        for e in b:
            pb[e] = ti
    return tau, k, pb


def containment_witness(sigma, tau):
    """A subset S with standardize(sigma|S) = tau, or None.

    Pattern elements 1..k are matched to increasing elements of sigma by
    depth-first search, maintaining the partial correspondence between
    pattern blocks and sigma blocks; branches that cannot reach k elements
    or that would merge two pattern blocks are cut.
    """
    tau, k, pb = _pattern_data(tau)
    n = sigma.n
    if k > n or len(tau.blocks) > len(sigma.blocks):
        return None
    blocks = sigma.blocks
    bound = [-1] * len(tau.blocks)
    choice = [0] * (k + 1)

    def dfs(e, low, usedmask):
        if e > k:
            return True
        t = pb[e]
        hi = n - (k - e)  # leave room for the remaining pattern elements
        j = bound[t]
        if j >= 0:
            for x in blocks[j]:
                if x <= low:
                    continue
                if x > hi:
                    break
                choice[e] = x
                if dfs(e + 1, x, usedmask):
                    return True
            return False
        for j2, blk in enumerate(blocks):
            if usedmask >> j2 & 1:
                continue
            bound[t] = j2
            for x in blk:
                if x <= low:
                    continue
                if x > hi:
                    break
                choice[e] = x
                if dfs(e + 1, x, usedmask | (1 << j2)):
                    return True
            bound[t] = -1
        return False

    if dfs(1, 0, 0):
        return tuple(choice[1:])
    return None


def contains(sigma, tau):
    """True iff sigma contains tau as a Klazar pattern."""
    return containment_witness(sigma, tau) is not None


def avoids(sigma, tau):
    return containment_witness(sigma, tau) is None


def contains_bruteforce(sigma, tau):
    """All-subsets containment check; the slow oracle the fast one is tested against."""
    tau = standardize(tau.blocks)
    k = tau.n
    if k > sigma.n:
        return False
    for S in combinations(range(1, sigma.n + 1), k):
        if standardize(sigma.restrict(S)) == tau:
            return True
    return False


def rgf_contains(a, b):
    """Word containment: some subsequence of a standardizes to b.

    This is the RGF notion of avoidance, provided for contrast; it does not
    coincide with the subset-based notion (12211 avoids 1122 even though
    145/23 contains 12/34).
    """
    a = tuple(a)
    b = tuple(b)
    k = len(b)
    n = len(a)
    if k > n:
        return False
    mapping = {}
    inverse = {}

    def rec(i, j):
        if j == k:
            return True
        v = b[j]
        for p in range(i, n - (k - j) + 1):
            x = a[p]
            if v in mapping:
                if mapping[v] != x:
                    continue
                fresh = False
            else:
                if x in inverse:
                    continue
                if any((v2 < v) != (x2 < x) for v2, x2 in mapping.items()):
                    continue
                mapping[v] = x
                inverse[x] = v
                fresh = True
            if rec(p + 1, j + 1):
                return True
            if fresh:
                del mapping[v]
                del inverse[x]
        return False

    return rec(0, 0)


# =========================================================================
# block-level criterion for beta_{k,a} = 1..(a-1)(a+1)..k/a
# =========================================================================

def block_contains_beta(block, k, a):
    """True iff some integer c in a gap of the block witnesses beta_{k,a}.

    The witness condition is a-1 <= #{x in block : x < c} together with
    k-a <= #{x in block : x > c}, for some c not in the block.  Here c is
    required to lie strictly between min(block) and max(block); the variant
    that also admits witnesses outside that range (which needs the ambient
    ground-set size) is block_contains_beta_ambient.
    """
    if not 1 <= a <= k:
        raise ValueError("need 1 <= a <= k")
    xs = sorted(block)
    s = len(xs)
    if s < k - 1:
        return False
    # i elements below the gap after xs[i-1], s-i above
    for i in range(max(a - 1, 1), min(s - k + a, s - 1) + 1):
        if xs[i] > xs[i - 1] + 1:
            return True
    return False


def block_contains_beta_ambient(block, k, a, n):
    """Same criterion with c ranging over all of [n] minus the block."""
    if not 1 <= a <= k:
        raise ValueError("need 1 <= a <= k")
    xs = sorted(block)
    s = len(xs)
    if s < k - 1:
        return False
    if a == 1 and xs[0] > 1:
        return True
    if a == k and xs[-1] < n:
        return True
    return block_contains_beta(block, k, a)


# =========================================================================
# brute-force counting over the RGF prefix tree
# =========================================================================

@dataclass(frozen=True)
class AvoidanceQuery:
    """One counting job: how many partitions of [n] avoid the pattern."""

    pattern: SetPartition
    n: int

    def count(self, shards=1):
        return count_avoiders(self.n, self.pattern, shards)


def _new_containment(blocks, pb, k, s, bi):
    # does the prefix contain the pattern using s, which must play the
    # pattern's maximum element?  blocks[bi] is the block s just joined
    bound = [-1] * (max(pb[1:]) + 1)
    bound[pb[k]] = bi

    def dfs(e, limit, usedmask):
        if e == 0:
            return True
        t = pb[e]
        j = bound[t]
        if j >= 0:
            for x in reversed(blocks[j]):
                if x >= limit:
                    continue
                if x < e:
                    break
                if dfs(e - 1, x, usedmask):
                    return True
            return False
        for j2, blk in enumerate(blocks):
            if usedmask >> j2 & 1:
                continue
            bound[t] = j2
            for x in reversed(blk):
                if x >= limit:
                    continue
                if x < e:
                    break
                if dfs(e - 1, x, usedmask | (1 << j2)):
                    return True
            bound[t] = -1
        return False

    return dfs(k - 1, s, 1 << bi)


def _walk_unit(n, k, pb, unit):
    """Per-depth avoider counts for the subtree under one RGF prefix."""
    counts = [0] * (n + 1)
    blocks = []
    for s, letter in enumerate(unit, start=1):
        bi = letter - 1
        if bi == len(blocks):
            blocks.append([s])
        else:
            blocks[bi].append(s)
        if s >= k and _new_containment(blocks, pb, k, s, bi):
            return counts  # the whole subtree contains the pattern
    counts[len(unit)] += 1

    def rec(s):
        for bi in range(len(blocks) + 1):
            if bi == len(blocks):
                blocks.append([s])
                fresh = True
            else:
                blocks[bi].append(s)
                fresh = False
            if s < k or not _new_containment(blocks, pb, k, s, bi):
                counts[s] += 1
                if s < n:
                    rec(s + 1)
            if fresh:
                blocks.pop()
            else:
                blocks[bi].pop()

    if len(unit) < n:
        rec(len(unit) + 1)
    return counts


def _shard_units(n):
    # work units are the two-letter RGF prefixes (just "1" when n = 1)
    if n == 1:
        return [(1,)]
    return [(1, 1), (1, 2)]


def avoider_counts(n, tau, shards=1):
    """List c with c[d] = |Pi_d(tau)| for 1 <= d <= n, from one shardable walk.

    A prefix that contains the pattern is pruned with its whole subtree;
    every surviving node of depth d is one avoider of [d].
    """
    if n < 1:
        raise ValueError("n must be positive")
    if shards < 1:
        raise ValueError("shards must be positive")
    tau, k, pb = _pattern_data(tau)
    units = _shard_units(n)
    lanes = [units[w::shards] for w in range(min(shards, len(units)))]

    def run(lane):
        out = [0] * (n + 1)
        for unit in lane:
            for d, c in enumerate(_walk_unit(n, k, pb, unit)):
                out[d] += c
        return out

    if shards == 1:
        results = [run(lanes[0])]
    else:
        with ThreadPoolExecutor(max_workers=len(lanes)) as pool:
            results = list(pool.map(run, lanes))

    counts = [0] * (n + 1)
    for out in results:
        for d in range(n + 1):
            counts[d] += out[d]
    if n >= 2:
        counts[1] = 0 if k == 1 else 1  # the root node is shared by both units
    return counts


def count_avoiders(n, tau, shards=1):
    """Exact |Pi_n(tau)|; deterministic and independent of shard count."""
    return avoider_counts(n, tau, shards)[n]


__all__ = [
    "AvoidanceQuery",
    "avoids",
    "avoider_counts",
    "block_contains_beta",
    "block_contains_beta_ambient",
    "containment_witness",
    "contains",
    "contains_bruteforce",
    "count_avoiders",
    "rgf_contains",
]
