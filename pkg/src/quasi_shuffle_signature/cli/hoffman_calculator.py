import argparse
import sys

import quasi_shuffle_signature.algebra.word_parser as word_parser
import quasi_shuffle_signature.cli.cli_utils as cli_utils
import quasi_shuffle_signature.hoffman.hoffman_map as hoffman_map


def main(argv=None, prog="qsig hoffman"):
    parser = argparse.ArgumentParser(
        prog=prog,
        description=(
            "Apply Hoffman's exponential (exp), logarithm (log) or "
            "the remainder of the exponential (remainder) to a word."
        )
    )
    parser.add_argument(
        "operation",
        type=str,
        choices=("exp", "log", "remainder")
    )
    parser.add_argument("w", type=str, help="the word, e.g. '[1][2]'")
    parser.add_argument(
        "--d",
        type=int,
        default=None,
        help="Alphabet size; letters above it are rejected."
    )
    args = parser.parse_args(argv)
    return cli_utils.run_and_report(prog, _run, args)


def _run(args):
    w = word_parser.parse_word(args.w, d=args.d)
    operation = {
        "exp": hoffman_map.hoffman_exp,
        "log": hoffman_map.hoffman_log,
        "remainder": hoffman_map.hoffman_remainder
    }[args.operation]
    print(operation(w, d=args.d))
    return cli_utils.EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
