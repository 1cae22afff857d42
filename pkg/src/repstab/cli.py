"""The `repstab` command: every computation behind one machine-readable CLI.

Formats: table (human), json (one record per line), tsv.  Output on stdout is
byte-stable for fixed inputs and version; timing, when requested, goes to
stderr.  Exit codes: 0 success, 2 usage, 3 validity-bound violation
(padding ranges, theorem bounds), 4 resource-cap refusal.
"""

from __future__ import annotations

import argparse
import json
import pickle
import sys
import time

from . import __version__
from . import characters as ch
from . import liehom
from . import partitions as pt
from . import repring as rr
from . import stability as st
from . import arrangements as ar
from . import tableaux as tb
from .config import LIMITS
from .decomp import Decomposition
from .errors import (PaddingRangeError, RepstabError, ResourceCapError,
                     ValidityBoundError)

CACHE_VERSION = 1


# ---------------------------------------------------------------------------
# Argument helpers
# ---------------------------------------------------------------------------

def _parse_range(text: str):
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def _parse_terms(text: str, family: str) -> dict:
    """Decomposition literal: `label=mult;label=mult`, e.g. `2,1=1;1,1=2`."""
    terms = {}
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "=" in chunk:
            label_text, mult_text = chunk.rsplit("=", 1)
            mult = int(mult_text)
        else:
            label_text, mult = chunk, 1
        label = pt.parse_label(label_text, family)
        terms[label] = terms.get(label, 0) + mult
    return terms


def _family_arg(text: str) -> str:
    fam = text.upper()
    if fam not in pt.FAMILIES:
        raise argparse.ArgumentTypeError(f"unknown family {text!r}")
    return fam


# ---------------------------------------------------------------------------
# Output
# ---------------------------------------------------------------------------

def _label_str(label, family):
    return pt.format_label(label, family)


def _emit(records: list, fmt: str):
    if fmt == "json":
        for rec in records:
            sys.stdout.write(json.dumps(rec, sort_keys=True) + "\n")
        return
    if fmt == "tsv":
        for rec in records:
            fam = rec.get("family", "")
            n = rec.get("n", "")
            if "terms" in rec:
                for item in rec["terms"]:
                    lam = item["lambda"]
                    if isinstance(lam, dict):
                        text = ",".join(map(str, lam["plus"])) + "|" + \
                               ",".join(map(str, lam["minus"]))
                    else:
                        text = ",".join(map(str, lam))
                    sys.stdout.write(f"{fam}\t{n}\t{text or '0'}\t{item['mult']}\n")
            else:
                sys.stdout.write(f"{fam}\t{n}\t{json.dumps(rec.get('report', rec), sort_keys=True)}\n")
        return
    for rec in records:  # table
        head = rec["command"]
        if "n" in rec:
            head += f"  n={rec['n']}"
        if "terms" in rec:
            parts = []
            for item in rec["terms"]:
                lam = item["lambda"]
                if isinstance(lam, dict):
                    text = (",".join(map(str, lam["plus"])) or "0") + "|" + \
                           (",".join(map(str, lam["minus"])) or "0")
                else:
                    text = ",".join(map(str, lam)) or "0"
                m = item["mult"]
                parts.append(f"V({text})" + (f"^{m}" if m != 1 else ""))
            body = " + ".join(parts) if parts else "0"
            sys.stdout.write(f"{head}: {body}\n")
        elif "value" in rec:
            sys.stdout.write(f"{head}: {rec['value']}\n")
        else:
            sys.stdout.write(f"{head}: {json.dumps(rec.get('report', {}), sort_keys=True)}\n")


def _record(command: str, d: Decomposition | None = None, **extra) -> dict:
    rec = {"command": command}
    if d is not None:
        rec.update(d.to_json())
    rec.update(extra)
    return rec


# ---------------------------------------------------------------------------
# Subcommand implementations
# ---------------------------------------------------------------------------

def _cmd_lr(args):
    lam, mu = pt.parse_partition(args.lam), pt.parse_partition(args.mu)
    from . import symfunc
    terms = symfunc.lr(lam, mu)
    d = Decomposition(pt.GL, max(sum(lam) + sum(mu), 1),
                      {pt.pseudo_canon(k): v for k, v in terms.items()})
    return [_record("lr", d, params={"lam": list(lam), "mu": list(mu)})]


def _cmd_plethysm(args):
    lam, mu = pt.parse_partition(args.lam), pt.parse_partition(args.mu)
    from . import symfunc
    terms = symfunc.plethysm(lam, mu)
    rank = max(sum(lam) * sum(mu), 1)
    d = Decomposition(pt.GL, rank,
                      {pt.pseudo_canon(k): v for k, v in terms.items()})
    return [_record("plethysm", d, params={"lam": list(lam), "mu": list(mu)})]


def _cmd_tensor(args):
    fam = args.family
    out = []
    for n in _parse_range(args.n):
        if fam == pt.SYM:
            a, b = pt.parse_partition(args.a), pt.parse_partition(args.b)
            d = ch.kronecker(a, b, n)
        else:
            a = pt.parse_label(args.a, fam)
            b = pt.parse_label(args.b, fam)
            d = rr.tensor_labels(fam, a, b, n,
                                 **({"strict": args.strict} if fam == pt.SP else {}))
        out.append(_record("tensor", d, params={"a": args.a, "b": args.b}))
    return out


def _cmd_branch(args):
    out = []
    for n in _parse_range(args.n):
        lam = pt.parse_partition(args.lam)
        d = rr.branch_sp(lam, n)
        out.append(_record("branch", d, params={"lam": list(lam), "from_n": n}))
    return out


def _cmd_restrict(args):
    fam = args.family
    out = []
    for n in _parse_range(args.n):
        if fam == pt.SYM:
            lam = pt.parse_partition(args.lam)
            d = ch.restrict_sym(lam, n, args.steps)
        elif args.to == "sp":
            lam = pt.parse_partition(args.lam)
            d = rr.littlewood_restrict(lam, n)
        else:
            lam = pt.parse_label(args.lam, fam)
            d = rr.restrict_gl(lam, n, args.k)
        out.append(_record("restrict", d,
                           params={"lam": args.lam, "from_n": n,
                                   "k": args.k, "steps": args.steps,
                                   "to": args.to}))
    return out


def _cmd_schur(args):
    fam = args.family
    lam = pt.parse_partition(args.lam)
    out = []
    for n in _parse_range(args.n):
        module = Decomposition(fam, n, _parse_terms(args.module, fam))
        d = rr.schur_functor(lam, module)
        out.append(_record("schur", d,
                           params={"lam": list(lam), "module": args.module}))
    return out


def _cmd_divide(args):
    fam = args.family
    out = []
    for n in _parse_range(args.n):
        W = Decomposition(fam, n, _parse_terms(args.w, fam))
        VW = Decomposition(fam, n, _parse_terms(args.vw, fam))
        d = rr.divide(W, VW)
        out.append(_record("divide", d, params={"w": args.w, "vw": args.vw}))
    return out


def _decompose_one(args, n: int) -> Decomposition:
    kind = args.what
    if kind == "pure-braid":
        return ar.braid_decomposition("A", n, args.i)
    if kind == "wn-braid":
        return ar.braid_decomposition("B", n, args.i)
    if kind == "coinv":
        terms = {lam: c for lam in tb.valid_cores(n)
                 if (c := tb.coinv_mult(lam, n, args.i))}
        return Decomposition(pt.SYM, n, terms, padded=False)
    if kind == "coinv-b":
        terms = {lab: c for lab in tb.valid_double_cores(n)
                 if (c := tb.coinv_b_mult(lab, n, args.i))}
        return Decomposition(pt.HYP, n, terms, padded=False)
    if kind == "free-lie":
        rank = n if n else args.m
        return Decomposition(pt.GL, rank,
                             {pt.pseudo_canon(k): v
                              for k, v in liehom.free_lie_decomposition(args.m).items()
                              if len(k) <= rank})
    if kind == "lie-nilpotent":
        return liehom.nilpotent_homology(n, args.k, args.i, args.j)
    if kind == "heisenberg":
        return liehom.heisenberg_homology(n, args.i)
    if kind == "schubert":
        w = tuple(int(x) for x in args.w.split(","))
        terms = {lam: c for lam in tb.valid_cores(n)
                 if (c := tb.schubert_equivariant_mult(w, n, args.i, lam))}
        return Decomposition(pt.SYM, n, terms, padded=False)
    if kind == "lefschetz":
        selected = frozenset(int(x) for x in args.set.split(",") if x)
        if args.cross:
            terms = {lab: c for lab in tb.valid_double_cores(n)
                     if (c := tb.cross_polytope_lefschetz(selected, n, lab,
                                                          raw=args.raw))}
            return Decomposition(pt.HYP, n, terms, padded=False,
                                 virtual=args.raw)
        terms = {lam: c for lam in tb.valid_cores(n)
                 if (c := tb.lefschetz_rank_selected(selected, n, lam,
                                                     raw=args.raw))}
        return Decomposition(pt.SYM, n, terms, padded=False, virtual=args.raw)
    raise RepstabError(f"unknown decompose target {kind!r}")


def _cmd_decompose(args):
    ranks = _parse_range(args.n) if args.n else [args.m]
    params = {k: getattr(args, k) for k in ("i", "k", "j", "m", "w", "set")
              if getattr(args, k, None) is not None}
    results = _pmap(lambda n: _decompose_one(args, n), ranks)
    return [_record(f"decompose {args.what}", d, params=params)
            for d in results]


def _builtin_sequence(name: str, ranks, i: int) -> st.DecompositionSequence:
    if name == "pure-braid":
        entries = {n: ar.braid_decomposition("A", n, i) for n in ranks}
        return st.DecompositionSequence(pt.SYM, entries, f"pure-braid i={i}")
    if name == "wn-braid":
        entries = {n: ar.braid_decomposition("B", n, i) for n in ranks}
        return st.DecompositionSequence(pt.HYP, entries, f"wn-braid i={i}")
    if name == "coinv":
        entries = {}
        for n in ranks:
            entries[n] = {lam: c for lam in tb.valid_cores(n)
                          if (c := tb.coinv_mult(lam, n, i))}
        return st.DecompositionSequence(pt.SYM, entries, f"coinv i={i}")
    if name == "free-lie":
        entries = {}
        for n in ranks:
            entries[n] = {k: v for k, v in liehom.free_lie_decomposition(i).items()
                          if len(k) <= n}
        return st.DecompositionSequence(pt.GL, entries, f"free-lie m={i}")
    if name == "lie-nilpotent":
        raise RepstabError("use --file for lie-nilpotent stability input")
    raise RepstabError(f"unknown builtin sequence {name!r}")


def _cmd_stability(args):
    if args.what == "file":
        with open(args.file) as fh:
            payload = json.load(fh)
        family = payload["family"]
        entries = {}
        for key, items in payload["entries"].items():
            terms = {}
            for item in items:
                lam = item["lambda"]
                label = ((tuple(lam["plus"]), tuple(lam["minus"]))
                         if isinstance(lam, dict) else tuple(lam))
                terms[label] = item["mult"]
            entries[int(key)] = terms
        seq = st.DecompositionSequence(family, entries,
                                       payload.get("provenance", args.file))
    else:
        ranks = _parse_range(args.n)
        seq = _builtin_sequence(args.what, ranks, args.i)
    report = st.detect_simple(seq) if args.simple else st.detect(seq)
    rec = {"command": f"stability {args.what}", "family": seq.family,
           "n": f"{seq.ranks[0]}..{seq.ranks[-1]}",
           "report": report.to_json()}
    return [rec]


def _cmd_selftest(args):
    from . import acceptance
    wanted = None
    if args.criteria:
        wanted = {int(x) for x in args.criteria.split(",")}
    ok = acceptance.run_all(selected=wanted, out=sys.stdout)
    return 0 if ok else 1


def _pmap(fn, items):
    if LIMITS.threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    from concurrent.futures import ThreadPoolExecutor
    with ThreadPoolExecutor(max_workers=LIMITS.threads) as pool:
        return list(pool.map(fn, items))


# ---------------------------------------------------------------------------
# Cache persistence (memo tables only; versioned, safe to delete)
# ---------------------------------------------------------------------------

def _cache_path(cache_dir: str):
    import os
    return os.path.join(cache_dir, f"repstab-cache-v{CACHE_VERSION}.pickle")


def _load_cache(cache_dir: str):
    import os
    path = _cache_path(cache_dir)
    if not os.path.exists(path):
        return
    try:
        with open(path, "rb") as fh:
            payload = pickle.load(fh)
        if payload.get("version") == CACHE_VERSION:
            ch.preload_tables(payload.get("tables", {}))
    except Exception:
        pass  # cache is disposable


def _save_cache(cache_dir: str):
    import os
    os.makedirs(cache_dir, exist_ok=True)
    with open(_cache_path(cache_dir), "wb") as fh:
        pickle.dump({"version": CACHE_VERSION, "tables": ch.export_tables()}, fh)


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="repstab",
        description="Exact irreducible decompositions and stability detection")
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--format", choices=("table", "json", "tsv"),
                        default="table")
    parser.add_argument("--max-n", type=int, help="character table cap")
    parser.add_argument("--max-degree", type=int, help="arrangement degree cap")
    parser.add_argument("--threads", type=int)
    parser.add_argument("--window", type=int, help="stability trailing window")
    parser.add_argument("--timing", action="store_true",
                        help="print elapsed time to stderr")
    parser.add_argument("--cache-dir", help="directory for memo-table cache")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("lr", help="Littlewood-Richardson product")
    p.add_argument("lam")
    p.add_argument("mu")
    p.set_defaults(fn=_cmd_lr)

    p = sub.add_parser("plethysm", help="composition of Schur functors")
    p.add_argument("lam")
    p.add_argument("mu")
    p.set_defaults(fn=_cmd_plethysm)

    p = sub.add_parser("tensor", help="tensor product at a fixed rank")
    p.add_argument("--family", type=_family_arg, required=True)
    p.add_argument("--n", required=True)
    p.add_argument("--strict", action="store_true",
                   help="error if symplectic truncation drops terms")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(fn=_cmd_tensor)

    p = sub.add_parser("branch", help="Sp_{2n} down to Sp_{2n-2}")
    p.add_argument("--n", required=True)
    p.add_argument("lam")
    p.set_defaults(fn=_cmd_branch)

    p = sub.add_parser("restrict", help="restriction of scalars")
    p.add_argument("--family", type=_family_arg, required=True)
    p.add_argument("--n", required=True)
    p.add_argument("--k", type=int, default=1, help="GL_n down to GL_{n-k}")
    p.add_argument("--steps", type=int, default=1, help="S_n down to S_{n-steps}")
    p.add_argument("--to", choices=("sp",), help="GL_{2n} down to Sp_{2n}")
    p.add_argument("lam")
    p.set_defaults(fn=_cmd_restrict)

    p = sub.add_parser("schur", help="Schur functor of a module")
    p.add_argument("--family", type=_family_arg, required=True)
    p.add_argument("--n", required=True)
    p.add_argument("--module", required=True,
                   help="decomposition literal, e.g. '1=1;2,1=2'")
    p.add_argument("lam")
    p.set_defaults(fn=_cmd_schur)

    p = sub.add_parser("divide", help="representation-ring division")
    p.add_argument("--family", type=_family_arg, required=True)
    p.add_argument("--n", required=True)
    p.add_argument("--w", required=True, help="the divisor W")
    p.add_argument("--vw", required=True, help="the product V x W")
    p.set_defaults(fn=_cmd_divide)

    p = sub.add_parser("decompose", help="decompose a named family member")
    p.add_argument("what", choices=("pure-braid", "wn-braid", "coinv",
                                    "coinv-b", "free-lie", "lie-nilpotent",
                                    "heisenberg", "schubert", "lefschetz"))
    p.add_argument("--n")
    p.add_argument("--i", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--w", help="permutation in one-line notation, e.g. 3,1,2")
    p.add_argument("--set", help="rank-selection set, e.g. 1,3")
    p.add_argument("--cross", action="store_true",
                   help="cross-polytope (type B) Lefschetz")
    p.add_argument("--raw", action="store_true",
                   help="raw alternating-sum multiplicities")
    p.set_defaults(fn=_cmd_decompose)

    p = sub.add_parser("stability", help="detect multiplicity stability")
    p.add_argument("what", choices=("pure-braid", "wn-braid", "coinv",
                                    "free-lie", "file"))
    p.add_argument("--n")
    p.add_argument("--i", type=int)
    p.add_argument("--file")
    p.add_argument("--simple", action="store_true",
                   help="test simple stability (GL sequences)")
    p.set_defaults(fn=_cmd_stability)

    p = sub.add_parser("selftest", help="run the acceptance suite")
    p.add_argument("--criteria", help="comma-separated criterion numbers")
    p.set_defaults(fn=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.max_n is not None:
        LIMITS.max_char_n = args.max_n
        LIMITS.braid_max_n = args.max_n
    if args.max_degree is not None:
        LIMITS.braid_max_degree = args.max_degree
    if args.threads is not None:
        LIMITS.threads = args.threads
    if args.window is not None:
        LIMITS.window = args.window
    if args.cache_dir:
        _load_cache(args.cache_dir)
    started = time.monotonic()
    try:
        if args.cmd == "selftest":
            status = args.fn(args)
        else:
            records = args.fn(args)
            _emit(records, args.format)
            status = 0
    except (PaddingRangeError, ValidityBoundError) as exc:
        sys.stderr.write(f"repstab: validity bound: {exc}\n")
        status = 3
    except ResourceCapError as exc:
        sys.stderr.write(f"repstab: resource cap: {exc}\n")
        status = 4
    except RepstabError as exc:
        sys.stderr.write(f"repstab: {exc}\n")
        status = 3
    if args.timing:
        sys.stderr.write(f"repstab: {time.monotonic() - started:.3f}s\n")
    if args.cache_dir:
        _save_cache(args.cache_dir)
    return status


if __name__ == "__main__":
    sys.exit(main())
