import argparse
import sys

import quasi_shuffle_signature.checks.property_checks as property_checks
import quasi_shuffle_signature.cli.cli_utils as cli_utils
import quasi_shuffle_signature.io.csv_utils as csv_utils
import quasi_shuffle_signature.io.json_utils as json_utils


def main(argv=None, prog="qsig check"):
    parser = argparse.ArgumentParser(
        prog=prog,
        description=(
            "Check a property of the iterated-sums signature on the "
            "time series in a CSV file. Exit status is 0 if the "
            "property holds and 1 (with the first counterexample) "
            "if it does not."
        )
    )
    parser.add_argument(
        "property",
        type=str,
        choices=property_checks.VALID_CHECKS
    )
    parser.add_argument(
        "input",
        type=str,
        nargs="?",
        default=None,
        help="Path to the CSV file (not needed with --signature)."
    )
    parser.add_argument(
        "--signature",
        type=str,
        default=None,
        help=(
            "For 'character' only: check the signature stored in this "
            "JSON file (as written by 'qsig sig') instead of "
            "computing one."
        )
    )
    cli_utils.add_max_weight_argument(parser)
    parser.add_argument(
        "--exact",
        default=False,
        action="store_true",
        help="Read the CSV as exact rationals and check exactly."
    )
    args = parser.parse_args(argv)
    return cli_utils.run_and_report(prog, _run, args)


def _run(args):
    max_weight = cli_utils.resolve_max_weight(args.max_weight)
    sig = None
    x = None
    if args.signature is not None:
        if args.property != 'character':
            raise cli_utils.UsageError(
                "--signature can only be used with the 'character' check"
            )
        sig = json_utils.read_signature_json(args.signature)
        if args.max_weight is None:
            max_weight = sig.max_weight
    else:
        if args.input is None:
            raise cli_utils.UsageError(
                f"check '{args.property}' needs an input CSV file"
            )
        x = csv_utils.read_time_series_csv(args.input, exact=args.exact)

    report = property_checks.run_check(
        args.property,
        x=x,
        sig=sig,
        max_weight=max_weight
    )
    print(report.summary())
    if report.passed:
        return cli_utils.EXIT_OK
    return cli_utils.EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
