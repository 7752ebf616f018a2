###############################################################################
#
#  Command-line front door.
#
#  Subcommands:
#    count    exact avoider counts, by oracle / formula / gf / all
#    avoid    containment verdict with a witness subset
#    verify   corpus property checks for each executable map
#    table    avoider-count table over all patterns of [k]   (csv or json)
#    classes  empirical Wilf classes and conjecture evidence (json or csv)
#
#  Exit codes: 0 ok, 2 parse error or bad range, 3 method unavailable,
#  4 cross-method disagreement, 5 verification failure.
#  Machine output goes to stdout, diagnostics to stderr.
#
###############################################################################

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass

from .avoidance import avoids, contains, containment_witness, count_avoiders
from .bijections import (
    caps_of,
    decode_14_2_3,
    decode_1_24_3,
    delta_insertion_encode,
    encode_14_2_3,
    encode_1_24_3,
    generate_14_23_core,
    has_forbidden_pair,
    iter_abc_words,
    iter_r_words,
    KZero,
    phi_134_2,
    phi_134_2_inverse,
    phi_a,
    phi_a_inverse,
    psi_sigma_beta,
    R_to_rgf,
    rgf_to_R,
    slide,
    two_block_gamma,
    two_block_varphi,
    two_block_varphi_inverse,
    _unslide,
)
from .avoidance import block_contains_beta_ambient
from .core import (
    PartitionError,
    SetPartition,
    iter_partitions,
    iter_rgf_words,
    punctured_block_pattern,
    single_block_pattern,
    singletons_pattern,
)
from .enumeration import (
    count_12_34,
    count_12_3_4,
    count_134_2,
    count_1_234,
    count_beta_k,
    count_sigma_k,
    egf_crosscheck_beta_k,
    egf_crosscheck_sigma_k,
    gf_coeffs_13_24,
    gf_coeffs_14_23,
    gf_coeffs_14_2_3,
    gf_coeffs_1_24_3,
)
from .wilf import build_table, default_horizon, wilf_classes

ENV_SHARDS = "PARTAVOID_SHARDS"


@dataclass
class CliConfig:
    subcommand: str
    pattern: str = ""
    sigma: str = ""
    tau: str = ""
    map: str = ""
    method: str = "oracle"
    k: int = 0
    n: int = 0
    n_max: int = 0
    shards: int = 1
    fmt: str = "text"
    seed: int = 0


def _fail(code, message):
    print(f"error: {message}", file=sys.stderr)
    raise SystemExit(code)


def _parse_pattern(text):
    try:
        return SetPartition.parse(text)
    except (PartitionError, ValueError) as exc:
        _fail(2, f"cannot parse pattern {text!r}: {exc}")


def _default_shards():
    raw = os.environ.get(ENV_SHARDS, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


# =========================================================================
# count
# =========================================================================

def _is_single_block(tau):
    return len(tau.blocks) == 1


def _is_all_singletons(tau):
    return all(len(b) == 1 for b in tau.blocks)


def _formula_count(tau, n):
    """Closed-sum value, or None when no formula covers the pattern."""
    if _is_single_block(tau):
        return count_beta_k(n, tau.n)
    if _is_all_singletons(tau):
        return count_sigma_k(n, tau.n)
    text = str(tau)
    comp = str(tau.complement())
    if "12/3/4" in (text, comp):
        return count_12_3_4(n)
    if text == "12/34":
        return count_12_34(n)
    if "1/234" in (text, comp):
        return count_1_234(n)
    if "134/2" in (text, comp):
        return count_134_2(n)
    return None


def _gf_count(tau, n):
    """Series-coefficient value, or None."""
    if _is_single_block(tau):
        return egf_crosscheck_beta_k(n, tau.n)[n]
    if _is_all_singletons(tau):
        return egf_crosscheck_sigma_k(n, tau.n)[n]
    text = str(tau)
    comp = str(tau.complement())
    if text == "14/2/3" or comp == "14/2/3":
        return gf_coeffs_14_2_3(n)[n]
    if "1/24/3" in (text, comp):
        return gf_coeffs_1_24_3(n)[n]
    if text == "14/23":
        return gf_coeffs_14_23(n)[n]
    if text == "13/24":
        return gf_coeffs_13_24(n)[n]
    return None


def cmd_count(cfg):
    tau = _parse_pattern(cfg.pattern)
    if cfg.n < 1:
        _fail(2, "need --n >= 1")
    values = []
    if cfg.method in ("oracle", "all"):
        values.append(count_avoiders(cfg.n, tau, shards=cfg.shards))
    if cfg.method in ("formula", "all"):
        v = _formula_count(tau, cfg.n)
        if v is None and cfg.method == "formula":
            _fail(3, f"no formula for pattern {cfg.pattern!r}")
        if v is not None:
            values.append(v)
    if cfg.method in ("gf", "all"):
        v = _gf_count(tau, cfg.n)
        if v is None and cfg.method == "gf":
            _fail(3, f"no generating function for pattern {cfg.pattern!r}")
        if v is not None:
            values.append(v)
    if cfg.method == "all":
        verdict = "AGREE" if len(set(values)) == 1 else "DISAGREE"
        print(" ".join(str(v) for v in values), verdict)
        if verdict == "DISAGREE":
            raise SystemExit(4)
    else:
        print(values[0])
    return 0


# =========================================================================
# avoid
# =========================================================================

def cmd_avoid(cfg):
    sigma = _parse_pattern(cfg.sigma)
    tau = _parse_pattern(cfg.tau)
    witness = containment_witness(sigma, tau)
    if witness is None:
        print("AVOIDS")
    else:
        print("CONTAINS")
        print("S =", " ".join(str(x) for x in witness))
    return 0


# =========================================================================
# verify
# =========================================================================

def _corpus(n, predicate, seed, cap=20000):
    """All partitions of [n] passing predicate; subsampled when huge, in
    which case the second return value flags the loss of exhaustiveness."""
    pool = [p for p in iter_partitions(n) if predicate(p)]
    if len(pool) > cap:
        rng = random.Random(seed)
        pool = rng.sample(pool, cap)
        print(f"note: sampled {cap} of the corpus", file=sys.stderr)
        return pool, True
    return pool, False


def _verify_slide(k, n, seed):
    for a in range(2, k):
        hi = punctured_block_pattern(k, a + 1)
        pool, _ = _corpus(n, lambda p: avoids(p, hi), seed)
        for pi in pool:
            for i in range(1, len(pi.blocks) + 1):
                if not block_contains_beta_ambient(pi.blocks[i - 1], k, a, n):
                    continue
                out = slide(pi, i, k, a)
                if _unslide(out, i, k, a) != pi:
                    return f"slide round trip broke at a={a} pi={pi} i={i}"
                if len(out.blocks[i - 1]) != len(pi.blocks[i - 1]):
                    return f"slide changed block size at a={a} pi={pi} i={i}"
    return None


def _verify_phi_a(k, n, seed):
    for a in range(2, k):
        hi = punctured_block_pattern(k, a + 1)
        lo = punctured_block_pattern(k, a)
        src, sampled = _corpus(n, lambda p: avoids(p, hi), seed)
        images = set()
        for pi in src:
            out = phi_a(pi, k, a)
            if not avoids(out, lo):
                return f"phi_a image contains target at a={a} pi={pi}"
            if phi_a_inverse(out, k, a) != pi:
                return f"phi_a inverse mismatch at a={a} pi={pi}"
            images.add(out)
        if len(images) != len(src):
            return f"phi_a not injective at a={a} n={n}"
        if a < k - 1 and not sampled:
            full = sum(1 for p in iter_partitions(n) if avoids(p, lo))
            if len(images) != full:
                return f"phi_a not surjective at a={a} n={n}"
    return None


def _verify_two_block(k, n, seed):
    beta = single_block_pattern(k)
    for sigma in iter_partitions(k):
        if len(sigma.blocks) != 2:
            continue
        src, _ = _corpus(n, lambda p: contains(p, beta), seed)
        images = set()
        for pi in src:
            out = two_block_varphi(pi, sigma)
            if not contains(out, sigma):
                return f"image avoids sigma={sigma} pi={pi}"
            if two_block_varphi_inverse(out, sigma) != pi:
                return f"inverse mismatch sigma={sigma} pi={pi}"
            images.add(out)
        if len(images) != len(src):
            return f"not injective for sigma={sigma} n={n}"
        if len(sigma.blocks[1]) + 1 < k and two_block_gamma(sigma, n) in images:
            return f"gamma witness inside image for sigma={sigma} n={n}"
    return None


def _verify_psi(k, n, seed):
    beta = single_block_pattern(k)
    sig = singletons_pattern(k)
    src, _ = _corpus(n, lambda p: avoids(p, sig), seed)
    images = set()
    for pi in src:
        out = psi_sigma_beta(pi, k)
        if not avoids(out, beta):
            return f"psi image contains block pattern: pi={pi} out={out}"
        if has_forbidden_pair(out, k):
            return f"psi image has the forbidden pair: pi={pi} out={out}"
        images.add(out)
    if len(images) != len(src):
        return f"psi not injective at k={k} n={n}"
    return None


def _verify_words(n, variant):
    if variant == "14_2_3":
        words = list(iter_abc_words(n, star=True))
        enc, dec = encode_14_2_3, decode_14_2_3
        pat = SetPartition.parse("14/2/3")
    else:
        words = list(iter_abc_words(n, doublestar=True))
        enc, dec = encode_1_24_3, decode_1_24_3
        pat = SetPartition.parse("1/24/3")
    seen = set()
    for w in words:
        p = enc(w)
        if not avoids(p, pat):
            return f"encoded partition contains the pattern: {w} -> {p}"
        if dec(p) != w:
            return f"decode mismatch: {w} -> {p} -> {dec(p)}"
        seen.add(p)
    expected = count_avoiders(n, pat)
    if len(seen) != len(words) or len(words) != expected:
        return f"count mismatch: {len(words)} words vs {expected} avoiders"
    return None


def _verify_rgf_R(k, n):
    rgfs = list(iter_rgf_words(n, max_letter=k - 1))
    rws = {tuple(v) for v in iter_r_words(n, k)}
    if len(rgfs) != len(rws):
        return f"set sizes differ: {len(rgfs)} vs {len(rws)}"
    for w in rgfs:
        v = rgf_to_R(w, k)
        if tuple(v) not in rws:
            return f"image outside the word set: {w} -> {v}"
        if R_to_rgf(v) != w:
            return f"round trip broke: {w} -> {v} -> {R_to_rgf(v)}"
    return None


def _verify_core(n):
    pat = SetPartition.parse("14/23")
    core = {c.partition for c in generate_14_23_core(n)}
    oracle = {p for p in iter_partitions(n)
              if avoids(p, pat) and not p.singletons()}
    if core != oracle:
        extra = core - oracle
        missing = oracle - core
        return f"set mismatch: extra={extra} missing={missing}"
    return None


def _verify_phi_134_2(n, seed):
    pat = SetPartition.parse("134/2")
    pool, _ = _corpus(n, lambda p: avoids(p, pat), seed)
    for pi in pool:
        try:
            lam, skel = phi_134_2(pi)
        except KZero:
            continue
        if phi_134_2_inverse(lam, skel) != pi:
            return f"round trip broke: {pi}"
    return None


VERIFY_DEFAULTS = {
    # map -> (k, n)
    "slide": (5, 7),
    "phi_a": (5, 7),
    "two_block": (4, 7),
    "psi": (4, 8),
    "words_14_2_3": (None, 8),
    "words_1_24_3": (None, 8),
    "rgf_R": (4, 8),
    "core_14_23": (None, 8),
    "phi_134_2": (None, 7),
}


def cmd_verify(cfg):
    name = cfg.map
    dflt_k, dflt_n = VERIFY_DEFAULTS[name]
    k = cfg.k or dflt_k
    n = cfg.n or dflt_n
    if n < 1 or (k is not None and k < 2):
        _fail(2, "parameters out of range")
    if name == "slide":
        problem = _verify_slide(k, n, cfg.seed)
    elif name == "phi_a":
        problem = _verify_phi_a(k, n, cfg.seed)
    elif name == "two_block":
        problem = _verify_two_block(k, n, cfg.seed)
    elif name == "psi":
        problem = _verify_psi(k, n, cfg.seed)
    elif name == "words_14_2_3":
        problem = _verify_words(n, "14_2_3")
    elif name == "words_1_24_3":
        problem = _verify_words(n, "1_24_3")
    elif name == "rgf_R":
        problem = _verify_rgf_R(k, n)
    elif name == "core_14_23":
        problem = _verify_core(n)
    else:
        problem = _verify_phi_134_2(n, cfg.seed)
    if problem:
        print(f"fail: {name}: {problem}")
        raise SystemExit(5)
    where = f"n={n}" if k is None else f"k={k}, n={n}"
    print(f"pass: {name} ({where})")
    return 0


# =========================================================================
# table / classes
# =========================================================================

def cmd_table(cfg):
    if cfg.k < 2 or cfg.n_max <= cfg.k:
        _fail(2, "need --k >= 2 and --n-max > --k")
    table = build_table(cfg.k, cfg.n_max, shards=cfg.shards)
    if cfg.fmt == "json":
        print(json.dumps({"k": table.k, "n_max": table.n_max,
                          "rows": {t: list(r) for t, r in sorted(table.rows.items())}},
                         indent=2))
    else:
        sys.stdout.write(table.to_csv())
    return 0


def cmd_classes(cfg):
    if cfg.k < 2 or cfg.n_max <= cfg.k:
        _fail(2, "need --k >= 2 and --n-max > --k")
    table = build_table(cfg.k, cfg.n_max, shards=cfg.shards)
    report = wilf_classes(table)
    if cfg.fmt == "csv":
        lines = ["class,pattern,status"]
        for idx, cls in enumerate(report.classes):
            for m in cls["members"]:
                lines.append(f"{idx},{m},{cls['status']}")
        print("\n".join(lines))
    else:
        print(report.to_json())
    return 0


# =========================================================================
# argument wiring
# =========================================================================

def _build_parser():
    top = argparse.ArgumentParser(
        prog="partavoid",
        description="Exact pattern-avoidance counting for set partitions.")
    sub = top.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("count", help="count avoiders of a pattern")
    p.add_argument("--pattern", required=True,
                   help="partition text, e.g. '1 3/2' or '13/2'")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=["oracle", "formula", "gf", "all"],
                   default="oracle")
    p.add_argument("--shards", type=int, default=None)

    p = sub.add_parser("avoid", help="containment verdict")
    p.add_argument("--sigma", required=True, help="host partition text")
    p.add_argument("--tau", required=True, help="pattern text")

    p = sub.add_parser("verify", help="run a map's property suite")
    p.add_argument("--map", required=True, choices=sorted(VERIFY_DEFAULTS))
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("table", help="avoider table over all patterns of [k]")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-max", type=int, dest="n_max", default=None)
    p.add_argument("--format", choices=["csv", "json"], default="csv",
                   dest="fmt")
    p.add_argument("--shards", type=int, default=None)

    p = sub.add_parser("classes", help="empirical Wilf classes")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-max", type=int, dest="n_max", default=None)
    p.add_argument("--format", choices=["csv", "json"], default="json",
                   dest="fmt")
    p.add_argument("--shards", type=int, default=None)
    return top


def main(argv=None):
    args = _build_parser().parse_args(argv)
    cmd = args.subcommand
    shards = getattr(args, "shards", None) or _default_shards()
    if cmd == "count":
        return cmd_count(CliConfig("count", pattern=args.pattern, n=args.n,
                                   shards=shards, method=args.method))
    if cmd == "avoid":
        return cmd_avoid(CliConfig("avoid", sigma=args.sigma, tau=args.tau))
    if cmd == "verify":
        return cmd_verify(CliConfig("verify", map=args.map, k=args.k or 0,
                                    n=args.n or 0, seed=args.seed))
    n_max = args.n_max if args.n_max is not None else default_horizon(args.k)
    cfg = CliConfig(cmd, k=args.k, n_max=n_max, shards=shards, fmt=args.fmt)
    return cmd_table(cfg) if cmd == "table" else cmd_classes(cfg)


if __name__ == "__main__":
    raise SystemExit(main())
