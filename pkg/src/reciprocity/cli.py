"""Command-line front end: count, gf, verify, scan, biject.

Exit codes: 0 success / all certificates pass, 1 some certificate failed,
2 usage or domain error.
"""

import argparse
import json
import sys

from . import altseq as alt
from . import heaps as hp
from . import paths as pth
from . import tableaux as tab
from . import verify as vf
from .exact import ratfunc_series
from .multipoly import xratfunc_series

OBJECTS_COUNT = ("path", "motzkin", "altseq", "endpoint", "tableau", "polyomino")
OBJECTS_GF = ("path", "motzkin", "altseq", "endpoint", "polyomino")
BIJECTIONS = ("lemma2", "lemma5", "lemma6", "prop16", "prop19", "prop22", "prop25")


class UsageError(Exception):
    pass


def parse_value(text):
    """'3' -> 3, '1,2' -> (1, 2), 'true' -> True, anything else stays a string."""
    t = text.strip()
    if t.lower() in ("true", "false"):
        return t.lower() == "true"
    if "," in t or t.startswith("("):
        parts = [p for p in t.strip("()").split(",") if p.strip()]
        return tuple(parse_value(p) for p in parts)
    try:
        return int(t)
    except ValueError:
        return t


def _int_list(text):
    v = parse_value(text)
    return v if isinstance(v, tuple) else (v,)


def _add_params(p):
    for name in ("n", "k", "m"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--r", type=parse_value, help="start level (comma list for several paths)")
    p.add_argument("--s", type=parse_value, help="end level (comma list for several paths)")
    p.add_argument("--param", action="append", default=[], metavar="KEY=VALUE",
                   help="any further check parameter, e.g. lam=1,3")


def _collect_params(args):
    out = {}
    for name in ("n", "k", "m", "r", "s"):
        v = getattr(args, name, None)
        if v is not None:
            out[name] = v
    for item in args.param:
        if "=" not in item:
            raise UsageError(f"--param expects KEY=VALUE, got {item!r}")
        key, val = item.split("=", 1)
        out[key.strip()] = parse_value(val)
    return out


def _need(args, *names):
    missing = [n for n in names if getattr(args, n, None) is None]
    if missing:
        raise UsageError("missing " + ", ".join("--" + n for n in missing))


def _opt(v):
    if isinstance(v, tuple):
        raise UsageError("expected a single level")
    return v


def build_parser():
    ap = argparse.ArgumentParser(prog="reciprocity", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="exact count or weight polynomial of one object class")
    c.add_argument("--object", required=True, choices=OBJECTS_COUNT)
    _add_params(c)
    c.add_argument("--weighted", action="store_true")
    c.add_argument("--scheme", default="B", choices=("B", "BAV", "area"))
    c.add_argument("--lam", type=_int_list)
    c.add_argument("--mu", type=_int_list)
    c.add_argument("--width", type=int)

    g = sub.add_parser("gf", help="closed generating function or its truncated series")
    g.add_argument("--object", required=True, choices=OBJECTS_GF)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--r", type=int)
    g.add_argument("--s", type=int)
    g.add_argument("--parity", choices=("odd", "even"), default="odd")
    g.add_argument("--cumulative", action="store_true")
    g.add_argument("--weighted", action="store_true")
    g.add_argument("--scheme", default="B", choices=("B", "BAV", "area"))
    mode = g.add_mutually_exclusive_group(required=True)
    mode.add_argument("--closed", action="store_true")
    mode.add_argument("--series", type=int, metavar="N")

    v = sub.add_parser("verify", help="run identity checks and print certificates")
    v.add_argument("--id", dest="check_id")
    v.add_argument("--suite", choices=("default",))
    _add_params(v)
    v.add_argument("--out", help="write JSON Lines here instead of stdout")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--pretty", action="store_true")
    v.add_argument("--list", action="store_true", help="list the registered check ids")

    s = sub.add_parser("scan", help="scan an open conjecture over a parameter grid")
    s.add_argument("--conjecture", required=True, choices=("50", "53"))
    s.add_argument("--n-max", type=int, default=3)
    s.add_argument("--k-max", type=int, default=2)
    s.add_argument("--m-max", type=int, default=2)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--pretty", action="store_true")

    b = sub.add_parser("biject", help="apply a bijection to one object and confirm the round trip")
    b.add_argument("--which", required=True, choices=BIJECTIONS)
    b.add_argument("--input", help="inline object or @file; omit to run the bijection exhaustively")
    _add_params(b)
    return ap


# count / gf

def cmd_count(args, out):
    obj = args.object
    if obj == "tableau":
        _need(args, "lam", "k")
        mu = args.mu or tuple(0 for _ in args.lam)
        flags = None
        if args.r is not None or args.s is not None:
            _need(args, "r", "s")
            flags = (vf._tuple(args.r), vf._tuple(args.s))
        val = tab.tableau_gf(tab.TableauShape(args.lam, mu), args.k, flags, args.weighted)
    elif obj == "polyomino":
        _need(args, "k", "width")
        val = hp.polyomino_series_direct(args.k, args.width)[2 * args.width]
    elif obj == "endpoint":
        _need(args, "n", "k")
        val = pth.endpoint_sum_value(args.n, args.k)
    elif obj == "altseq":
        _need(args, "n", "k")
        f = alt.weighted_altseq_poly if args.weighted else alt.count_altseq
        val = f(args.n, args.k, _opt(args.r), _opt(args.s))
    else:
        _need(args, "n", "k")
        r = _opt(args.r) or 0
        s = _opt(args.s) or 0
        if obj == "path":
            if args.weighted:
                val = pth.weighted_path_value(args.n, args.k, r, s, args.scheme)
            else:
                val = pth.path_value(args.n, args.k, r, s)
        elif args.weighted:
            val = pth.weighted_path_poly(args.n, args.k, r, s, "motzkin")
        elif r == 0 and s == 0:
            val = pth.motzkin_value(args.n, args.k)
        else:
            val = pth.motzkin_count(args.n, args.k, r, s)
    print(vf.render_value(val), file=out)
    return 0


def _gf_object(args):
    k, obj = args.k, args.object
    if obj == "path":
        r, s = args.r or 0, args.s or 0
        if args.weighted:
            return pth.path_gf_closed(k, r, s, args.scheme), True
        return pth.path_gf_unweighted(k, r, s), False
    if obj == "motzkin":
        if args.weighted:
            return pth.motzkin_gf_closed(k, args.r or 0, args.s or 0), True
        if args.r or args.s:
            raise UsageError("unweighted motzkin GF is for r = s = 0; use --weighted")
        return pth.motzkin_gf_unweighted(k), False
    if obj == "endpoint":
        return pth.sum_over_endpoints_gf(k), False
    if obj == "polyomino":
        return hp.polyomino_gf_closed(k), True
    if args.cumulative:
        return alt.cumulative_gf(k), False
    if args.weighted:
        return alt.altseq_gf_weighted(k, args.parity, args.r, args.s), True
    return alt.altseq_gf_unweighted(k, args.parity, args.r, args.s), False


def cmd_gf(args, out):
    f, symbolic = _gf_object(args)
    if args.closed:
        print(str(f), file=out)
        return 0
    if args.series < 0:
        raise UsageError("--series must be non-negative")
    ser = xratfunc_series(f, args.series) if symbolic else ratfunc_series(f, args.series)
    print(vf.render_value(list(ser)), file=out)
    return 0


# verify / scan

def _emit(certs, out, pretty):
    failed = False
    for c in certs:
        if c.verdict is False:
            failed = True
        if pretty:
            verdict = {True: "PASS", False: "FAIL", None: "SKIP"}[c.verdict]
            ps = " ".join(f"{k}={vf.render_value(v)}" for k, v in c.params.items())
            line = f"{verdict:4s} {c.id:14s} {ps}"
            line += f"  ({c.skipped})" if c.verdict is None else f"  lhs={c.lhs}  rhs={c.rhs}"
            print(line, file=out)
        else:
            print(c.to_json(), file=out)
    return 1 if failed else 0


def cmd_verify(args, out):
    if args.list:
        for cid in sorted(vf.REGISTRY):
            print(f"{cid:14s} {vf.REGISTRY[cid].summary}", file=out)
        return 0
    if (args.check_id is None) == (args.suite is None):
        raise UsageError("give exactly one of --id and --suite")
    if args.suite:
        certs = vf.run_suite(jobs=args.jobs)
    else:
        params = _collect_params(args)
        if args.check_id not in vf.REGISTRY:
            raise UsageError(f"unknown check id {args.check_id!r}")
        certs = [vf.run_check(args.check_id, params)]
    if args.out:
        with open(args.out, "w") as fh:
            return _emit(certs, fh, args.pretty)
    return _emit(certs, out, args.pretty)


def cmd_scan(args, out):
    certs = vf.scan_conjecture(args.conjecture, args.n_max, args.k_max, args.m_max, args.jobs)
    return _emit(certs, out, args.pretty)


# biject

def _read_input(text):
    if text is None:
        return None
    if text.startswith("@"):
        with open(text[1:]) as fh:
            return fh.read().strip()
    return text.strip()


def _biject_path(args, text, out):
    _need(args, "k")
    # input: start height then steps, e.g. "0:UUDD"
    start, _, steps = text.partition(":")
    p = pth.UpDownPath.from_string(int(start), steps.strip().upper())
    if not p.is_valid(args.k):
        raise UsageError(f"path leaves the strip [0, {args.k}]")
    h = hp.path_to_dimer_heap(p, args.k, p.start, p.end)
    back = hp.dimer_heap_to_path(h, args.k, p.start, p.end)
    print(h.render(), file=out)
    print(json.dumps({"pieces": [list(x) for x in h.pieces], "round_trip": back == p}), file=out)
    return 0 if back == p else 1


def _biject_altseq(args, text, out, which):
    seq = tuple(int(x) for x in text.replace(" ", "").split(","))
    k = args.k if args.k is not None else max(seq)
    if not alt.is_alternating(seq, k):
        raise UsageError("input is not an alternating sequence within [1, k]")
    if which == "lemma5":
        mh = hp.altseq_to_segment_heap(seq, k)
        back = hp.segment_heap_to_altseq(mh)
    else:
        mh = hp.altseq_to_reordered_heap(seq, k)
        back = hp.reordered_heap_to_altseq(mh)
    print(mh.heap.render(), file=out)
    print(json.dumps({"mark": mh.mark, "pieces": [list(x) for x in mh.heap.pieces],
                      "round_trip": tuple(back) == seq}), file=out)
    return 0 if tuple(back) == seq else 1


_SETTINGS = {"prop16": "trapezoidal", "prop19": "rhomboidal", "prop22": "rect_odd",
             "prop25": "rect_even"}


def _biject_family(args, text, out):
    _need(args, "n", "k", "m")
    st = vf._setting(_SETTINGS[args.which], args.n, args.k, args.m, args.r, args.s)
    # input: one step string per path, separated by ';', in path order
    words = [w.strip().upper() for w in text.split(";")]
    if len(words) != len(st.starts):
        raise UsageError(f"expected {len(st.starts)} paths, got {len(words)}")
    fam = tab.NonintersectingFamily(tuple(
        (x0, pth.UpDownPath.from_string(y0, w)) for (x0, y0), w in zip(st.starts, words)))
    t = tab.paths_to_tableau(st, fam)
    back = tab.tableau_to_paths(st, t)
    print(t.render(), file=out)
    print(json.dumps({"rows": [list(r) for r in t.rows], "round_trip": back == fam}), file=out)
    return 0 if back == fam else 1


def cmd_biject(args, out):
    text = _read_input(args.input)
    if text is None:
        return _emit([vf.run_check(args.which, _collect_params(args))], out, False)
    if args.which == "lemma2":
        return _biject_path(args, text, out)
    if args.which in ("lemma5", "lemma6"):
        return _biject_altseq(args, text, out, args.which)
    return _biject_family(args, text, out)


COMMANDS = {"count": cmd_count, "gf": cmd_gf, "verify": cmd_verify, "scan": cmd_scan,
            "biject": cmd_biject}


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, vf.DomainViolation, vf.UnknownCheck) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (ValueError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
