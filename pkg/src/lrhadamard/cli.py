"""Command line front end: product queries, ring tables, matrix dumps,
and a self-verification sweep against the tableau oracle.

Exit codes: 0 success, 1 verification failure, 2 argument or parse
problem, 3 partition outside the box, 4 resource cap exceeded.
"""

import argparse
import json
import os
import sys
from fractions import Fraction

from . import golden
from .boxes import (
    Box,
    enumerate_box_partitions,
    fits_in_box,
    format_partition,
    parse_partition,
    shuffle_points,
)
from .exact import RationalMatrix, identity, mat_mul
from .lr import lr_expand, truncate_to_box
from .ring import (
    DEFAULT_DIMENSION_CAP,
    PartitionOutOfBoxError,
    ResourceLimitError,
    RingContext,
    build_context,
    clifford_product,
    cup_product,
    full_lr_box,
    minimal_box,
)
from .schur import schur_bialternant

CACHE_ENV = "LRH_CACHE_DIR"
CACHE_VERSION = 1


# ---- context cache ----------------------------------------------------------

def _cache_path(cache_dir: str, box: Box) -> str:
    name = "context-v%d-n%d-k%d.json" % (CACHE_VERSION, box.n, box.k)
    return os.path.join(cache_dir, name)


def _context_to_doc(ctx: RingContext) -> dict:
    return {
        "version": CACHE_VERSION,
        "k": ctx.box.k,
        "c": ctx.box.c,
        "M": [[str(x) for x in row] for row in ctx.M],
        "M_inv": [[str(x) for x in row] for row in ctx.M_inv],
    }


def _context_from_doc(box: Box, doc: dict) -> RingContext:
    if doc.get("version") != CACHE_VERSION:
        raise ValueError("cache version mismatch")
    if doc.get("k") != box.k or doc.get("c") != box.c:
        raise ValueError("cache box mismatch")
    dim = box.dimension
    m = RationalMatrix([[Fraction(x) for x in row] for row in doc["M"]])
    m_inv = RationalMatrix([[Fraction(x) for x in row] for row in doc["M_inv"]])
    if m.nrows != dim or m.ncols != dim or m_inv.nrows != dim or m_inv.ncols != dim:
        raise ValueError("cache dimension mismatch")
    partitions = enumerate_box_partitions(box)
    points = shuffle_points(box)
    # cheap sanity probes; a stale or corrupt cache triggers a rebuild
    if any(x != 1 for x in m[0]):
        raise ValueError("cache content mismatch on the constant row")
    probe = min(dim - 1, 1)
    if m[probe][0] != schur_bialternant(partitions[probe], points[0].prefix):
        raise ValueError("cache content mismatch on probe entry")
    return RingContext(box=box, partitions=partitions, points=points,
                       M=m, M_inv=m_inv)


def load_context(box: Box, cap: int = DEFAULT_DIMENSION_CAP) -> RingContext:
    """Build a context, or reuse the on-disk cache when LRH_CACHE_DIR is set.

    The cache is purely a speedup; anything unreadable or inconsistent is
    ignored and the context is rebuilt.
    """
    if box.dimension > cap:
        raise ResourceLimitError(
            "box %d x %d needs dimension %d, above the cap %d"
            % (box.k, box.c, box.dimension, cap)
        )
    cache_dir = os.environ.get(CACHE_ENV)
    path = _cache_path(cache_dir, box) if cache_dir else None
    if path:
        try:
            with open(path, encoding="utf-8") as fh:
                return _context_from_doc(box, json.load(fh))
        except (OSError, ValueError, KeyError):
            pass
    ctx = build_context(box, cap)
    if path:
        try:
            os.makedirs(cache_dir, exist_ok=True)
            tmp = path + ".tmp"
            with open(tmp, "w", encoding="utf-8") as fh:
                json.dump(_context_to_doc(ctx), fh)
            os.replace(tmp, path)
        except OSError:
            pass
    return ctx


# ---- rendering --------------------------------------------------------------

def _term_rows(expansion, top_degree):
    # display order: ascending degree, then lexicographic on the parts
    shapes = sorted(expansion.coefficients, key=lambda nu: (sum(nu), nu))
    return [(nu, expansion.coefficients[nu], sum(nu) != top_degree)
            for nu in shapes]


def _json_terms(rows):
    return [{"nu": format_partition(nu), "coeff": str(coeff), "lower": lower}
            for nu, coeff, lower in rows]


def _coeff_label(nu) -> str:
    return "c[%s]" % ",".join(str(x) for x in nu)


def _s_label(nu) -> str:
    return "s[%s]" % ",".join(str(x) for x in nu)


def _text_product(rows) -> str:
    if not rows:
        return "0"
    parts = []
    for nu, coeff, lower in rows:
        if coeff == 1:
            body = _s_label(nu)
        elif coeff == -1:
            body = "-" + _s_label(nu)
        else:
            body = "%s %s" % (coeff, _s_label(nu))
        parts.append("[%s]" % body if lower else body)
    return " + ".join(parts)


def _latex_partition(nu, k) -> str:
    padded = tuple(nu) + (0,) * (k - len(nu))
    return "s_{(%s)}" % ",".join(str(x) for x in padded)


def _latex_coeff(c: Fraction) -> str:
    sign = "-" if c < 0 else ""
    a = abs(c)
    if a.denominator == 1:
        return sign + str(a.numerator)
    return sign + r"\tfrac{%d}{%d}" % (a.numerator, a.denominator)


def _latex_product(rows, k) -> str:
    if not rows:
        return "0"
    parts = []
    for nu, coeff, lower in rows:
        s = _latex_partition(nu, k)
        if coeff == 1:
            body = s
        elif coeff == -1:
            body = "-" + s
        else:
            body = "%s %s" % (_latex_coeff(coeff), s)
        parts.append(r"\underline{%s}" % body if lower else body)
    return " + ".join(parts)


def _emit(text: str) -> int:
    sys.stdout.write(text + "\n")
    return 0


# ---- commands ---------------------------------------------------------------

def _parse_box_arg(text: str) -> Box:
    pieces = text.split(",")
    if len(pieces) != 2:
        raise ValueError("box must be given as K,C, got %r" % text)
    try:
        k, c = (int(p) for p in pieces)
    except ValueError:
        raise ValueError("box must be two integers, got %r" % text) from None
    return Box(k, c)


def _select_box(args, lam, mu, nu) -> Box:
    if args.box:
        return _parse_box_arg(args.box)
    if args.minimal:
        if nu is None:
            raise ValueError("--minimal requires --nu")
        return minimal_box(lam, mu, nu)
    return full_lr_box(lam, mu)


def cmd_lr(args) -> int:
    lam = parse_partition(args.lam)
    mu = parse_partition(args.mu)
    nu = parse_partition(args.nu) if args.nu is not None else None
    box = _select_box(args, lam, mu, nu)
    for p in (lam, mu):
        if not fits_in_box(p, box):
            raise PartitionOutOfBoxError(
                "%s does not fit a %d x %d box" % (format_partition(p), box.k, box.c)
            )
    ctx = load_context(box)
    top = sum(lam) + sum(mu)
    if args.with_lower_terms:
        expansion = clifford_product(ctx, lam, mu)
    else:
        expansion = cup_product(ctx, lam, mu)
    rows = _term_rows(expansion, top)
    if nu is not None:
        coeff = dict((n, c) for n, c, _ in rows).get(nu, Fraction(0))
        rows = [(nu, coeff, coeff != 0 and sum(nu) != top)]

    if args.format == "json":
        doc = {
            "box": {"k": box.k, "c": box.c},
            "lambda": format_partition(lam),
            "mu": format_partition(mu),
            "terms": _json_terms(rows),
        }
        return _emit(json.dumps(doc, indent=2))
    if args.format == "latex":
        op = r"\bullet" if args.with_lower_terms else r"\cdot"
        lhs = "%s %s %s" % (_latex_partition(lam, box.k), op,
                            _latex_partition(mu, box.k))
        return _emit("%s = %s" % (lhs, _latex_product(rows, box.k)))
    if not rows:
        return _emit("0")
    pieces = []
    for n, c, lower in rows:
        body = "%s=%s" % (_coeff_label(n), c)
        pieces.append("[%s]" % body if lower else body)
    return _emit(" ".join(pieces))


def _table_box(args) -> Box:
    if args.n < 1 or not 0 <= args.k <= args.n:
        raise ValueError("need 0 <= k <= n and n >= 1, got n=%d k=%d" % (args.n, args.k))
    return Box(args.k, args.n - args.k)


def cmd_table(args) -> int:
    box = _table_box(args)
    ctx = load_context(box)
    make = clifford_product if args.with_lower_terms else cup_product
    pairs = []
    for i, lam in enumerate(ctx.partitions):
        for mu in ctx.partitions[i:]:
            expansion = make(ctx, lam, mu)
            pairs.append((lam, mu, _term_rows(expansion, sum(lam) + sum(mu))))

    if args.format == "json":
        doc = {
            "box": {"k": box.k, "c": box.c},
            "pairs": [
                {
                    "lambda": format_partition(lam),
                    "mu": format_partition(mu),
                    "terms": _json_terms(rows),
                }
                for lam, mu, rows in pairs
            ],
        }
        return _emit(json.dumps(doc, indent=2))
    if args.format == "latex":
        op = r"\bullet" if args.with_lower_terms else r"\cdot"
        lines = [r"\begin{align*}"]
        for lam, mu, rows in pairs:
            lines.append(
                "%s %s %s &= %s \\\\"
                % (_latex_partition(lam, box.k), op,
                   _latex_partition(mu, box.k), _latex_product(rows, box.k))
            )
        lines.append(r"\end{align*}")
        return _emit("\n".join(lines))
    lines = []
    for lam, mu, rows in pairs:
        lines.append("%s * %s = %s" % (_s_label(lam), _s_label(mu),
                                       _text_product(rows)))
    return _emit("\n".join(lines))


def cmd_matrix(args) -> int:
    box = _table_box(args)
    ctx = load_context(box)
    mat = ctx.M_inv if args.inverse else ctx.M
    part_labels = [_s_label(p) for p in ctx.partitions]
    point_labels = ["(%s)" % ",".join(str(x) for x in pt.prefix)
                    for pt in ctx.points]
    row_labels, col_labels = (
        (point_labels, part_labels) if args.inverse else (part_labels, point_labels)
    )

    if args.format == "json":
        doc = {
            "box": {"k": box.k, "c": box.c},
            "inverse": bool(args.inverse),
            "partitions": [format_partition(p) for p in ctx.partitions],
            "points": [[str(x) for x in pt.prefix] for pt in ctx.points],
            "entries": [[str(x) for x in row] for row in mat],
        }
        return _emit(json.dumps(doc, indent=2))
    if args.format == "latex":
        lines = [r"\begin{bmatrix}"]
        for row in mat:
            lines.append(" & ".join(_latex_coeff(x) for x in row) + r" \\")
        lines.append(r"\end{bmatrix}")
        return _emit("\n".join(lines))
    cells = [[""] + col_labels]
    for label, row in zip(row_labels, mat):
        cells.append([label] + [str(x) for x in row])
    widths = [max(len(r[j]) for r in cells) for j in range(len(cells[0]))]
    lines = ["  ".join(cell.rjust(w) for cell, w in zip(row, widths)).rstrip()
             for row in cells]
    return _emit("\n".join(lines))


def _verify_box(box: Box, failures) -> int:
    """Run every check for one box; returns the number of pairs examined."""
    ctx = load_context(box)
    dim = box.dimension
    tag = "box %d,%d" % (box.k, box.c)
    if any(x != 1 for x in ctx.M[0]):
        failures.append("%s: constant row of M is not all ones" % tag)
    if mat_mul(ctx.M, ctx.M_inv) != identity(dim):
        failures.append("%s: M * M_inv is not the identity" % tag)
    pairs = 0
    for i, lam in enumerate(ctx.partitions):
        for mu in ctx.partitions[i:]:
            pairs += 1
            got = cup_product(ctx, lam, mu).coefficients
            want = truncate_to_box(lr_expand(lam, mu), box)
            if got != want:
                failures.append(
                    "%s: cup(%s, %s) disagrees with the tableau oracle"
                    % (tag, format_partition(lam), format_partition(mu))
                )
    if (box.k, box.c) == (2, 2):
        for lam, vec in golden.BOX22_VECTORS.items():
            if ctx.M[ctx.index_of(lam)] != tuple(Fraction(x) for x in vec):
                failures.append("%s: evaluation vector for %s is off"
                                % (tag, format_partition(lam)))
        for (lam, mu), want in golden.BOX22_PRODUCTS.items():
            if clifford_product(ctx, lam, mu).coefficients != dict(want):
                failures.append("%s: product %s * %s is off"
                                % (tag, format_partition(lam), format_partition(mu)))
    if (box.k, box.c) == (2, 3):
        if ctx.M != RationalMatrix(golden.BOX23_M):
            failures.append("%s: M differs from the reference matrix" % tag)
        if ctx.M_inv != RationalMatrix(golden.BOX23_M_INV):
            failures.append("%s: M_inv differs from the reference matrix" % tag)
        for (lam, mu), want in golden.BOX23_PRODUCTS.items():
            got = clifford_product(ctx, lam, mu).coefficients
            if got != {nu: Fraction(c) for nu, c in want.items()}:
                failures.append("%s: product %s * %s is off"
                                % (tag, format_partition(lam), format_partition(mu)))
    return pairs


def cmd_verify(args) -> int:
    if not 2 <= args.max_n <= 8:
        raise ValueError("--max-n must be between 2 and 8, got %d" % args.max_n)
    boxes = [Box(k, n - k) for n in range(2, args.max_n + 1) for k in range(1, n)]
    failures = []
    lines = []
    total_pairs = 0
    for box in boxes:
        before = len(failures)
        pairs = _verify_box(box, failures)
        total_pairs += pairs
        status = "ok" if len(failures) == before else "FAIL"
        lines.append("box %d,%d: dimension %d, pairs %d, %s"
                     % (box.k, box.c, box.dimension, pairs, status))
    passed = not failures
    if args.format == "json":
        doc = {
            "max_n": args.max_n,
            "boxes": len(boxes),
            "pairs": total_pairs,
            "failures": failures,
            "passed": passed,
        }
        _emit(json.dumps(doc, indent=2))
        return 0 if passed else 1
    lines.extend(failures)
    summary = "boxes: %d, pairs: %d, %s" % (
        len(boxes), total_pairs,
        "all passed" if passed else "failures: %d" % len(failures),
    )
    lines.append(summary)
    _emit("\n".join(lines))
    return 0 if passed else 1


# ---- argument parsing -------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lrh",
        description="Littlewood-Richardson coefficients and box "
                    "multiplication tables via exact Hadamard products.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    lr = sub.add_parser("lr", help="multiply two Schur classes")
    lr.add_argument("--lambda", dest="lam", required=True, metavar="PARTS",
                    help="first partition, e.g. 2,1 (0 for the empty one)")
    lr.add_argument("--mu", required=True, metavar="PARTS",
                    help="second partition")
    lr.add_argument("--nu", metavar="PARTS",
                    help="report only the coefficient of this shape")
    pick = lr.add_mutually_exclusive_group()
    pick.add_argument("--box", metavar="K,C",
                      help="work in the k x c box")
    pick.add_argument("--minimal", action="store_true",
                      help="smallest box holding lambda, mu and nu")
    pick.add_argument("--full", action="store_true",
                      help="box large enough for the whole expansion (default)")
    lr.add_argument("--with-lower-terms", action=argparse.BooleanOptionalAction,
                    default=False, help="include filtration lower-order terms")
    lr.add_argument("--format", choices=("text", "json", "latex"), default="text")
    lr.set_defaults(func=cmd_lr)

    table = sub.add_parser("table", help="full multiplication table of a box")
    table.add_argument("--n", type=int, required=True)
    table.add_argument("--k", type=int, required=True)
    table.add_argument("--with-lower-terms", action=argparse.BooleanOptionalAction,
                       default=True, help="include filtration lower-order terms")
    table.add_argument("--format", choices=("text", "json", "latex"),
                       default="text")
    table.set_defaults(func=cmd_table)

    matrix = sub.add_parser("matrix", help="evaluation matrix of a box")
    matrix.add_argument("--n", type=int, required=True)
    matrix.add_argument("--k", type=int, required=True)
    matrix.add_argument("--inverse", action="store_true")
    matrix.add_argument("--format", choices=("text", "json", "latex"),
                        default="text")
    matrix.set_defaults(func=cmd_matrix)

    verify = sub.add_parser("verify",
                            help="check the pipeline against the tableau oracle")
    verify.add_argument("--max-n", type=int, default=4,
                        help="sweep all boxes with k + c up to this (2..8)")
    verify.add_argument("--format", choices=("text", "json"), default="text")
    verify.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PartitionOutOfBoxError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 3
    except ResourceLimitError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 4
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


def run():
    raise SystemExit(main())
