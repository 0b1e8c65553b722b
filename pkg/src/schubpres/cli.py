"""Command-line front end.

Exit status: 0 when every check passes, 1 when a mathematical check fails,
2 on bad input. Results go to stdout (``--format table`` or ``json``);
progress and timing go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from . import presentation as pr
from . import symfunc as sf
from .coxgen import CoxeterError, parse_group, scan_bigrassmannian_property
from .polyengine import structure_constant, type_a
from .symgroup import (
    Permutation,
    PermutationError,
    bigrassmannians,
    essential_set,
    fulton_essential,
    make_bigrassmannian,
)

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunReport:
    command: str
    status: str = "pass"
    payload: dict = field(default_factory=dict)
    table: list[str] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def exit_code(self) -> int:
        return {"pass": EXIT_PASS, "fail": EXIT_FAIL}.get(self.status, EXIT_USAGE)


def emit(report: RunReport, fmt: str = "table") -> str:
    if fmt == "json":
        doc = {"command": report.command, "status": report.status, "payload": report.payload}
        return json.dumps(doc, sort_keys=True) + "\n"
    lines = list(report.table)
    lines.append(f"status: {report.status}")
    return "\n".join(lines) + "\n"


def _progress(msg: str) -> None:
    print(msg, file=sys.stderr, flush=True)


def _status(ok: bool) -> str:
    return "pass" if ok else "fail"


def _perm(text: str) -> Permutation:
    try:
        return Permutation.parse(text)
    except PermutationError as e:
        raise UsageError(str(e)) from e


def _bigrass(text: str) -> pr.BigrassmannianData:
    v = _perm(text)
    try:
        return pr.bigrassmannian_data(v)
    except PermutationError as e:
        raise UsageError(str(e)) from e


def _positive(text: str) -> int:
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if k < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return k


def _index_set(text: str) -> set[int]:
    text = text.strip()
    if not text:
        return set()
    try:
        return {int(p) for p in text.replace(",", " ").split()}
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad index set {text!r}")


def _set_text(perms) -> str:
    return "{" + ", ".join(str(p) for p in perms) + "}"


def _sorted_perms(perms):
    return sorted(perms, key=lambda p: p.word)


def _fmt_shapes(shapes) -> str:
    return ", ".join(sf.format_partition(m) for m in shapes)


# ---- subcommands ----------------------------------------------------------

def _fulton_rows(w: Permutation):
    cells = fulton_essential(w)
    payload = [
        {"cell": [c.row, c.col], "condition": list(c.condition), "bigrassmannian": str(c.bigrassmannian)}
        for c in cells
    ]
    table = [f"{'cell':<8}{'condition':<14}bigrassmannian"]
    for c in cells:
        r, s, t = c.condition
        table.append(f"{f'({c.row},{c.col})':<8}{f'C({r},{s},{t})':<14}{c.bigrassmannian}")
    return payload, table


def cmd_essential_set(args) -> RunReport:
    w = _perm(args.w)
    ess = _sorted_perms(essential_set(w))
    cells, rows = _fulton_rows(w)
    # the diagram cells and the Bruhat-minimal elements must agree
    ok = sorted(c["bigrassmannian"] for c in cells) == sorted(str(v) for v in ess)
    table = [f"w = {w}", f"E(w) = {_set_text(ess)}"]
    if ess:
        table += [""] + rows
    return RunReport("essential-set", _status(ok),
                     {"w": str(w), "essential_set": [str(v) for v in ess], "fulton": cells}, table)


def cmd_fulton_table(args) -> RunReport:
    w = _perm(args.w)
    cells, rows = _fulton_rows(w)
    return RunReport("fulton-table", "pass", {"w": str(w), "fulton": cells}, [f"w = {w}"] + rows)


def cmd_make_bigrassmannian(args) -> RunReport:
    try:
        v = make_bigrassmannian(args.r, args.s, args.t, args.n)
    except PermutationError as e:
        raise UsageError(str(e)) from e
    data = pr.bigrassmannian_data(v)
    payload = {"v": str(v), **data.as_dict()}
    table = [f"v = {v}", "  ".join(f"{k}={val}" for k, val in data.as_dict().items())]
    return RunReport("make-bigrassmannian", "pass", payload, table)


def cmd_generators(args) -> RunReport:
    variant = args.variant
    if variant in ("full", "one", "two"):
        data = _bigrass(args.w)
        shapes = pr.gen_set(data, variant)
        payload = {"shapes": [list(m) for m in shapes]}
        table = [f"v = {data.permutation}  r={data.r}  variant={variant}",
                 f"shapes ({len(shapes)}): {_fmt_shapes(shapes)}"]
        return RunReport("generators", "pass", payload, table)
    w = _perm(args.w)
    gens = pr.gen_set_Iw(w, variant)
    if variant == "grassmannian":
        payload = {"generators": [str(u) for u in gens]}
        table = [f"w = {w}", f"grassmannian generators ({len(gens)}): {_set_text(gens)}"]
    else:
        payload = {"generators": [{"r": r, "shape": list(m)} for r, m in gens]}
        table = [f"w = {w}", f"schur generators ({len(gens)}):"]
        table += [f"  s{sf.format_partition(m)}(x1..x{r})" for r, m in gens]
    return RunReport("generators", "pass", payload, table)


def cmd_verify_ideal(args) -> RunReport:
    variants = ["full", "one", "two"] if args.variant == "all" else [args.variant]
    if args.w is not None:
        cases = [_bigrass(args.w)]
    elif args.n is not None:
        cases = [pr.bigrassmannian_data(v) for v in bigrassmannians(args.n)]
    else:
        raise UsageError("give a bigrassmannian permutation or --n")
    records = []
    for data in cases:
        algebra = pr.GrassmannianQuotient(data.r, data.n)
        top = algebra.top_degree if args.budget_degree is None else min(args.budget_degree, algebra.top_degree)
        target = pr.full_ideal_shapes(data)
        for variant in variants:
            span = pr.ideal_graded_span(pr.gen_set(data, variant), algebra=algebra, up_to=top)
            ok = span.equals_coordinate_span(target)
            records.append({"v": str(data.permutation), "variant": variant, "up_to": top, "pass": ok})
    ok = all(rec["pass"] for rec in records)
    table = [f"{'v':<12}{'variant':<9}{'up_to':<7}result"]
    table += [f"{rec['v']:<12}{rec['variant']:<9}{rec['up_to']:<7}{_status(rec['pass'])}" for rec in records]
    return RunReport("verify-ideal", _status(ok), {"cases": records}, table)


def _report_table(rep: pr.GeneratorReport) -> list[str]:
    tors = ", ".join(f"degree {d}: {t}" for d, t in sorted(rep.torsion.items())) or "none"
    return [
        f"minimal generators: {rep.total}",
        f"degrees: {rep.degrees}",
        f"degree polynomial: {rep.degree_polynomial}",
        f"torsion: {tors}",
    ]


def cmd_minimal_generators(args) -> RunReport:
    if (args.w is None) == (args.v is None):
        raise UsageError("give exactly one of --w (for I_w) or a bigrassmannian v (for J_v)")
    if args.w is not None:
        w = _perm(args.w)
        ess = _sorted_perms(essential_set(w))
        concat = pr.gen_set_Iw(w, "schur")
        rep = pr.minimal_generators_Iw(w, "schur")
        payload = rep.to_json()
        payload.update({
            "essential_set": [str(v) for v in ess],
            "concatenated": len(concat),
            "degrees": rep.degrees,
        })
        table = [f"w = {w}", f"E(w) = {_set_text(ess)}", f"concatenated generators: {len(concat)}"]
        table += [f"  s{sf.format_partition(m)}(x1..x{r})" for r, m in concat]
        table += _report_table(rep)
        return RunReport("minimal-generators", "pass", payload, table)
    data = _bigrass(args.v)
    variant = args.variant or "one"
    rep = pr.minimal_generators_Jv(data, variant)
    payload = rep.to_json()
    payload["degrees"] = rep.degrees
    payload["expected_count"] = comb(data.a + data.b, data.a)
    table = [f"v = {data.permutation}  variant={variant}",
             f"generating set: {_fmt_shapes(pr.gen_set(data, variant))}"]
    table += _report_table(rep)
    return RunReport("minimal-generators", "pass", payload, table)


def cmd_verify_conjecture(args) -> RunReport:
    def progress(rec):
        _progress(f"{rec['v']} {rec['variant']}: {'ok' if rec['pass'] else 'FAIL'}")

    rep = pr.verify_minimality_conjecture(args.r_max, args.k_max, drop_one=not args.no_drop_one,
                                          progress=progress if args.verbose else None)
    payload = {k: rep[k] for k in ("r_max", "k_max", "cases", "torsion_seen")}
    payload["failures"] = rep["failures"]
    table = [f"r <= {args.r_max}, n - r <= {args.k_max}",
             f"cases checked: {rep['cases']}",
             f"failures: {len(rep['failures'])}",
             f"torsion seen: {'yes' if rep['torsion_seen'] else 'no'}"]
    for f in rep["failures"]:
        table.append(f"  FAIL {f['v']} {f['variant']}: count {f['minimal_count']}, "
                     f"degrees {f['degree_polynomial']}")
    return RunReport("verify-conjecture", _status(rep["pass"]), payload, table)


def cmd_verify_parabolic(args) -> RunReport:
    if args.w is not None:
        w = _perm(args.w)
        if any(not 1 <= j < w.n for j in args.J):
            raise UsageError(f"J must be a subset of 1..{w.n - 1}")
        cases = [(w, args.J)]
    elif args.n is not None:
        from .symgroup import all_permutations

        idx = range(1, args.n)
        cases = [(w, set(J)) for w in all_permutations(args.n)
                 for k in range(args.n) for J in combinations(idx, k)]
    else:
        raise UsageError("give a permutation or --n")
    reports = [pr.verify_parabolic(w, J, check_ideal=not args.skip_ideal) for w, J in cases]
    ok = all(r["pass"] for r in reports)
    if len(reports) == 1:
        r = reports[0]
        table = [f"w = {r['w']}  J = {r['J']}", f"w_min = {r['w_min']}  w_max = {r['w_max']}",
                 "E(w_max) = {" + ", ".join(r["essential_set"]) + "}"]
        table += [f"{k}: {v}" for k, v in r.items()
                  if isinstance(v, bool) and k != "pass"]
        return RunReport("verify-parabolic", _status(ok), r, table)
    fails = [r for r in reports if not r["pass"]]
    table = [f"pairs checked: {len(reports)}", f"failures: {len(fails)}"]
    table += [f"  FAIL w={r['w']} J={r['J']}" for r in fails]
    return RunReport("verify-parabolic", _status(ok), {"checked": len(reports), "failures": fails}, table)


def cmd_structure_constant(args) -> RunReport:
    if args.group:
        try:
            group = parse_group(args.group)
            u, v, w = (group.parse(x) for x in (args.u, args.v, args.w))
        except CoxeterError as e:
            raise UsageError(str(e)) from e
    else:
        u, v, w = (_perm(x) for x in (args.u, args.v, args.w))
        if not u.n == v.n == w.n:
            raise UsageError("permutations must have the same size")
        group = type_a(u.n)
    c = structure_constant(u, v, w, group)
    text = str(c)
    payload = {"u": group.format_element(u), "v": group.format_element(v),
               "w": group.format_element(w), "coefficient": c if isinstance(c, int) else text}
    table = [f"c[{payload['u']}, {payload['v']}; {payload['w']}] = {text}"]
    return RunReport("structure-constant", "pass", payload, table)


def _pieri_bruteforce(max_total: int, nvars: int = 6):
    """Pieri in Λ against multiplying explicit Schur polynomials in ``nvars`` variables.

    Covers every ``lambda`` and ``k >= 1`` with ``|lambda| + k <= max_total``.
    """
    checked, failures = 0, []
    for d in range(max_total):
        for lam in sf.partitions_of(d, max_len=nvars):
            base = sf.schur_in_variables(lam, nvars)
            for kind in ("h", "e"):
                for k in range(1, max_total - d + 1):
                    factor = sf.schur_in_variables((k,) if kind == "h" else (1,) * k, nvars)
                    got = sf.pieri(kind, k, sf.SchurVector.schur(lam), max_rows=nvars)
                    rhs = sf.schur_vector_in_variables(got, nvars)
                    checked += 1
                    if base * factor != rhs:
                        failures.append({"kind": kind, "k": k, "lambda": list(lam)})
    return checked, failures


def run_identity_check(kind: str, size: int | None = None):
    checked, failures = 0, []
    if kind == "hook":
        for d in range(1, (size or 8) + 1):
            for nu in sf.partitions_of(d):
                for k in range(0, 6):
                    checked += 1
                    if not sf.hook_identity_check(nu, k):
                        failures.append({"nu": list(nu), "k": k})
    elif kind == "column":
        for d in range(1, (size or 10) + 1):
            for mu in sf.partitions_of(d):
                for i in range(mu[0]):
                    if sf.column_length(mu, i) <= i:
                        continue
                    checked += 1
                    if not sf.column_identity_check(mu, i):
                        failures.append({"mu": list(mu), "i": i})
    elif kind == "jacobi-trudi":
        for d in range(1, (size or 8) + 1):
            for lam in sf.partitions_of(d):
                checked += 1
                if not sf.jacobi_trudi_verify(lam):
                    failures.append({"lambda": list(lam)})
    elif kind == "pieri":
        checked, failures = _pieri_bruteforce(size or 8)
    else:
        raise UsageError(f"unknown identity {kind!r}")
    return checked, failures


def cmd_identity_check(args) -> RunReport:
    kinds = ["hook", "column", "jacobi-trudi", "pieri"] if args.kind == "all" else [args.kind]
    payload, table, ok = {}, [f"{'identity':<14}{'checked':<9}failures"], True
    for kind in kinds:
        checked, failures = run_identity_check(kind, args.size)
        payload[kind] = {"checked": checked, "failures": failures}
        table.append(f"{kind:<14}{checked:<9}{len(failures)}")
        ok = ok and not failures
    return RunReport("identity-check", _status(ok), payload, table)


def cmd_coxeter_scan(args) -> RunReport:
    names = args.group or ["B2", "B3", "D4"]
    if args.n is not None:
        names = [f"A{k}" for k in range(1, args.n)] + names
    reports = []
    for name in names:
        try:
            group = parse_group(name)
        except CoxeterError as e:
            raise UsageError(str(e)) from e
        t0 = time.perf_counter()
        reports.append(scan_bigrassmannian_property(group))
        _progress(f"{name}: {time.perf_counter() - t0:.2f}s")
    ok = all(r["pass"] for r in reports)
    table = [f"{'group':<7}{'order':<8}violations"]
    table += [f"{r['group']:<7}{r['order']:<8}{len(r['violations'])}" for r in reports]
    return RunReport("coxeter-scan", _status(ok), {"groups": reports}, table)


# ---- parser ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json"), default="table")

    p = argparse.ArgumentParser(prog="schubpres", description="Generating sets for Schubert ideals")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.set_defaults(func=func)
        return sp

    sp = add("essential-set", cmd_essential_set, "essential set and Fulton conditions of w")
    sp.add_argument("w")

    sp = add("fulton-table", cmd_fulton_table, "essential cells of the Rothe diagram")
    sp.add_argument("w")

    sp = add("make-bigrassmannian", cmd_make_bigrassmannian, "v_{r,s,t,n} from a Schubert condition")
    for name in ("r", "s", "t", "n"):
        sp.add_argument(name, type=int)

    sp = add("generators", cmd_generators, "generating sets of J_v or I_w")
    sp.add_argument("w")
    sp.add_argument("--variant", choices=("full", "one", "two", "grassmannian", "schur"), default="one")

    sp = add("verify-ideal", cmd_verify_ideal, "generating sets of J_v span the ideal")
    sp.add_argument("w", nargs="?")
    sp.add_argument("--n", type=_positive)
    sp.add_argument("--variant", choices=("full", "one", "two", "all"), default="all")
    sp.add_argument("--budget-degree", type=_positive)

    sp = add("minimal-generators", cmd_minimal_generators, "minimal generator count of J_v or I_w")
    sp.add_argument("v", nargs="?")
    sp.add_argument("--w")
    sp.add_argument("--variant", choices=("one", "two", "full"))

    sp = add("verify-conjecture", cmd_verify_conjecture, "minimality sweep over bigrassmannians")
    sp.add_argument("--r-max", type=_positive, required=True)
    sp.add_argument("--k-max", type=_positive, required=True)
    sp.add_argument("--no-drop-one", action="store_true", help="skip the proper-subset check")
    sp.add_argument("--verbose", action="store_true", help="per-case progress on stderr")

    sp = add("verify-parabolic", cmd_verify_parabolic, "checks for the coset maximum of w W_J")
    sp.add_argument("w", nargs="?")
    sp.add_argument("--J", type=_index_set, default=set(), help="simple reflection indices, e.g. 1,3")
    sp.add_argument("--n", type=_positive, help="sweep every (w, J) in S_n")
    sp.add_argument("--skip-ideal", action="store_true", help="skip the ideal generation check")

    sp = add("structure-constant", cmd_structure_constant, "c_{u,v}^w in the Schubert basis")
    sp.add_argument("u")
    sp.add_argument("v")
    sp.add_argument("w")
    sp.add_argument("--group", help="Coxeter group such as B3; default is S_n")

    sp = add("identity-check", cmd_identity_check, "symmetric function identities")
    sp.add_argument("kind", choices=("hook", "column", "jacobi-trudi", "pieri", "all"))
    sp.add_argument("--size", type=_positive, help="largest partition size to check")

    sp = add("coxeter-scan", cmd_coxeter_scan, "essential sets consist of bigrassmannians")
    sp.add_argument("--group", action="append", help="B2, B3, D4, A3, ... (repeatable)")
    sp.add_argument("--n", type=_positive, help="also scan S_2..S_n")
    return p


def run(argv=None) -> tuple[RunReport | None, int]:
    parser = build_parser()
    args = parser.parse_args(argv)
    t0 = time.perf_counter()
    try:
        report = args.func(args)
    except (UsageError, PermutationError, CoxeterError, sf.PartitionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return None, EXIT_USAGE
    report.wall_time = time.perf_counter() - t0
    sys.stdout.write(emit(report, args.format))
    _progress(f"{report.command}: {report.status} in {report.wall_time:.2f}s")
    return report, report.exit_code


def main(argv=None) -> int:
    try:
        _, code = run(argv)
    except SystemExit as e:
        return int(e.code or 0)
    return code


if __name__ == "__main__":
    sys.exit(main())
