import argparse
import sys

import quasi_shuffle_signature.algebra.word_parser as word_parser
import quasi_shuffle_signature.area.area_ops as area_ops
import quasi_shuffle_signature.area.linear_algebra as linear_algebra
import quasi_shuffle_signature.cli.cli_utils as cli_utils


def main(argv=None, prog="qsig area"):
    parser = argparse.ArgumentParser(
        prog=prog,
        description=(
            "Area and discrete area of words, bases of the iterated "
            "area spaces and the check that they are spanned by the "
            "brackets and the words u([a][b]-[b][a])."
        )
    )
    subparsers = parser.add_subparsers(dest="operation", required=True)

    for name in ("area", "darea"):
        sub = subparsers.add_parser(name, help=f"{name}(U, V)")
        sub.add_argument("u", type=str)
        sub.add_argument("v", type=str)

    basis = subparsers.add_parser(
        "basis", help="basis of the area space of a given depth")
    basis.add_argument(
        "--kind",
        type=str,
        choices=area_ops.VALID_AREA_KINDS,
        default=area_ops.CONTINUOUS
    )
    basis.add_argument("--depth", type=int, required=True)
    basis.add_argument("--d", type=int, required=True)
    cli_utils.add_max_weight_argument(basis)

    span = subparsers.add_parser(
        "span-check",
        help=(
            "check (both inclusions) that the iterated areas span the "
            "same space as the brackets and the u([a][b]-[b][a])"
        )
    )
    span.add_argument("--d", type=int, required=True)
    cli_utils.add_max_weight_argument(span)

    args = parser.parse_args(argv)
    return cli_utils.run_and_report(prog, _run, args)


def _run(args):
    if args.operation in ("area", "darea"):
        u = word_parser.parse_word(args.u)
        v = word_parser.parse_word(args.v)
        print(area_ops.area_operation(
            area_ops.CONTINUOUS if args.operation == "area"
            else area_ops.DISCRETE)(u, v))
        return cli_utils.EXIT_OK

    max_weight = cli_utils.resolve_max_weight(args.max_weight)
    if args.operation == "basis":
        for p in area_ops.area_space_basis(
                kind=args.kind,
                n=args.depth,
                d=args.d,
                max_weight=max_weight):
            print(p)
        return cli_utils.EXIT_OK

    report = span_check(d=args.d, max_weight=max_weight)
    for line in report['lines']:
        print(line)
    if report['passed']:
        return cli_utils.EXIT_OK
    return cli_utils.EXIT_VIOLATION


def span_check(d, max_weight):
    """
    Verify by exact elimination that the iterated areas and the
    brackets together with the u([a][b]-[b][a]) span the same space
    up to weight max_weight.

    Returns
    -------
    dict with keys
        'passed': boolean
        'lines': list of report lines
        'missing': first polynomial found outside the other span
        (None if passed)
    """
    areas = area_ops.area_space_span(area_ops.CONTINUOUS, d, max_weight)
    generators = area_ops.area_span_generators(d, max_weight)

    lines = []
    missing = None
    passed = True
    for label, members, spanning in (
            ("iterated areas in span of generators", areas, generators),
            ("generators in span of iterated areas", generators, areas)):
        failed_weights = []
        for weight in range(1, max_weight+1):
            members_w = _of_weight(members, weight)
            spanning_w = _of_weight(spanning, weight)
            if linear_algebra.span_contains(spanning_w, members_w):
                continue
            failed_weights.append(weight)
            if missing is None:
                for p in members_w:
                    in_span, _ = linear_algebra.span_membership(
                        p, spanning_w)
                    if not in_span:
                        missing = p
                        break
        if len(failed_weights) == 0:
            verdict = "OK"
        else:
            passed = False
            verdict = f"FAILS at weight {failed_weights}"
        lines.append(f"{label} ({len(members)} checked): {verdict}")

    lines.append(
        f"dimension up to weight {max_weight}: "
        f"{linear_algebra.exact_rank(areas)} (areas), "
        f"{linear_algebra.exact_rank(generators)} (generators)"
    )
    if missing is not None:
        lines.append(f"first polynomial outside the other span: {missing}")
    return {'passed': passed, 'lines': lines, 'missing': missing}


def _of_weight(polys, weight):
    return [p for p in polys if p.max_weight() == weight]


if __name__ == "__main__":
    sys.exit(main())
